//! Command-line interface.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use axum::http::HeaderValue;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hindi_ime::{
    compare_schemes, format_report_table, ingest_corpus, write_report_tsv, CharFrequencies,
    CharacterTable, Engine, EngineConfig, Lexicon, SchemeEncoding, SubjectResponses,
};

use crate::server::{self, AppState, CorsPolicy};

#[derive(Debug, Parser)]
#[command(name = "hindi-ime", version, about = "Phonetic roman-to-Devanagari input engine")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count words in corpus files and write a lexicon.
    BuildLexicon {
        /// Corpus file (UTF-8). Repeat for several files.
        #[arg(long = "corpus", required = true)]
        corpus: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print ranked candidates for one roman token.
    Suggest {
        #[command(flatten)]
        engine: EngineArgs,
        query: String,
    },
    /// Transliterate a sentence (read from stdin when not given).
    Translit {
        #[command(flatten)]
        engine: EngineArgs,
        text: Option<String>,
    },
    /// Score input schemes against subject responses.
    Eval {
        /// Responses TSV: charId, subjectId, typed sequence.
        #[arg(long)]
        responses: PathBuf,
        /// Scheme as NAME=PATH. Repeatable.
        #[arg(long = "scheme", value_parser = parse_scheme_arg)]
        schemes: Vec<(String, PathBuf)>,
        /// Also score the character table's canonical codes under this name.
        #[arg(long)]
        canonical: Option<String>,
        /// Character weights TSV; uniform over the responded characters when omitted.
        #[arg(long)]
        freqs: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Run the HTTP suggestion service.
    Serve {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, default_value_t = 8080, value_parser = clap::value_parser!(u16).range(1..))]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        /// Allowed CORS origin. Repeatable; any origin when omitted.
        #[arg(long = "cors")]
        cors: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct EngineArgs {
    /// Lexicon TSV. Without one, every query falls back to direct mapping.
    #[arg(long, env = "DEVA_LEXICON")]
    pub lexicon: Option<PathBuf>,
    /// Character table override TSV.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Maximum number of suggestions.
    #[arg(long, default_value_t = hindi_ime::engine::DEFAULT_MAX_SUGGESTIONS,
          value_parser = parse_limit)]
    pub limit: usize,
    /// Ignore the lexicon and map through the character table only.
    #[arg(long)]
    pub direct: bool,
}

impl EngineArgs {
    pub fn load(&self) -> Result<Engine> {
        let table = match &self.table {
            Some(path) => CharacterTable::from_tsv(BufReader::new(open(path)?))
                .with_context(|| format!("invalid character table {}", path.display()))?,
            None => CharacterTable::load_default(),
        };
        let lexicon = match (&self.lexicon, self.direct) {
            (Some(path), false) => Lexicon::load(BufReader::new(open(path)?), &table)
                .with_context(|| format!("cannot load lexicon {}", path.display()))?,
            _ => Lexicon::empty(),
        };
        let config = EngineConfig::default()
            .with_max_suggestions(self.limit)
            .ok_or_else(|| anyhow!("--limit must be at least 1"))?;
        Ok(Engine::new(table, lexicon, config))
    }
}

fn parse_limit(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn parse_scheme_arg(s: &str) -> Result<(String, PathBuf), String> {
    match s.split_once('=') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => {
            Ok((name.to_string(), PathBuf::from(path)))
        }
        _ => Err(format!("expected NAME=PATH, got {s:?}")),
    }
}

fn open(path: &Path) -> Result<File> {
    File::open(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::BuildLexicon { corpus, out } => build_lexicon(&corpus, &out),
        Command::Suggest { engine, query } => suggest(&engine.load()?, &query),
        Command::Translit { engine, text } => {
            let engine = engine.load()?;
            let text = match text {
                Some(t) => t,
                None => io::read_to_string(io::stdin()).context("cannot read stdin")?,
            };
            let mut out = io::stdout().lock();
            write!(out, "{}", engine.transliterate(&text))?;
            if !text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(())
        }
        Command::Eval {
            responses,
            schemes,
            canonical,
            freqs,
            format,
        } => eval(&responses, &schemes, canonical, freqs.as_deref(), format),
        Command::Serve {
            engine,
            port,
            host,
            cors,
        } => serve(engine, SocketAddr::new(host, port), cors),
    }
}

fn build_lexicon(corpus: &[PathBuf], out: &Path) -> Result<()> {
    let mut counts = std::collections::BTreeMap::new();
    for path in corpus {
        let file_counts = ingest_corpus(open(path)?)
            .with_context(|| format!("cannot ingest {}", path.display()))?;
        for (word, n) in file_counts {
            *counts.entry(word).or_insert(0u64) += n;
        }
    }
    let table = CharacterTable::load_default();
    let build = Lexicon::build(counts, &table);
    if !build.skipped.is_empty() {
        log::warn!("{} word types not representable in the table were left out", build.skipped.len());
    }
    let file = File::create(out).with_context(|| format!("cannot write {}", out.display()))?;
    let mut writer = BufWriter::new(file);
    build
        .lexicon
        .save(&mut writer)
        .and_then(|_| writer.flush().map_err(Into::into))
        .with_context(|| format!("cannot write {}", out.display()))?;
    println!(
        "{} words, {} tokens",
        build.lexicon.len(),
        build.lexicon.total_tokens()
    );
    Ok(())
}

fn suggest(engine: &Engine, query: &str) -> Result<()> {
    if query.is_empty() {
        bail!("empty query");
    }
    let list = server::suggestions_for(engine, query, engine.config().max_suggestions());
    if list.is_empty() {
        eprintln!("no suggestions: {query:?} cannot be typed with this character table");
    }
    let mut out = io::stdout().lock();
    for (rank, s) in list.iter().enumerate() {
        writeln!(out, "{}\t{}\t{}\t{}", rank + 1, s.word, s.frequency, s.source)?;
    }
    Ok(())
}

fn eval(
    responses: &Path,
    schemes: &[(String, PathBuf)],
    canonical: Option<String>,
    freqs: Option<&Path>,
    format: ReportFormat,
) -> Result<()> {
    let responses = SubjectResponses::from_tsv(BufReader::new(open(responses)?))
        .with_context(|| format!("cannot parse {}", responses.display()))?;
    let mut encodings = schemes
        .iter()
        .map(|(name, path)| {
            SchemeEncoding::from_tsv(name.clone(), BufReader::new(open(path)?))
                .with_context(|| format!("cannot parse {}", path.display()))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(name) = canonical {
        encodings.push(SchemeEncoding::from_table(name, &CharacterTable::load_default()));
    }
    if encodings.is_empty() {
        bail!("no schemes given (use --scheme NAME=PATH or --canonical NAME)");
    }
    let freqs = match freqs {
        Some(path) => CharFrequencies::from_tsv(BufReader::new(open(path)?))
            .with_context(|| format!("cannot parse {}", path.display()))?,
        None => CharFrequencies::uniform(responses.char_ids().map(str::to_string).collect::<Vec<_>>())?,
    };
    let reports = compare_schemes(&responses, &encodings, &freqs)?;
    match format {
        ReportFormat::Table => print!("{}", format_report_table(&reports)),
        ReportFormat::Tsv => write_report_tsv(&reports, io::stdout().lock())?,
    }
    Ok(())
}

fn serve(args: EngineArgs, addr: SocketAddr, cors: Vec<String>) -> Result<()> {
    let origins = if cors.is_empty() {
        None
    } else {
        Some(
            cors.iter()
                .map(|o| HeaderValue::from_str(o).with_context(|| format!("bad origin {o:?}")))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .with_context(|| format!("cannot bind {addr}"))?;
        let state = AppState::new();
        let app = server::router(Arc::clone(&state), &CorsPolicy { origins });
        log::info!("listening on http://{}", listener.local_addr()?);
        let loader = tokio::task::spawn_blocking(move || args.load());
        let serving = tokio::spawn(async move { axum::serve(listener, app).await });
        let engine = loader.await??;
        log::info!("lexicon loaded: {} entries", engine.lexicon().len());
        state.install(engine);
        serving.await??;
        Ok(())
    })
}

