//! Input-scheme evaluation by edit distance.
//!
//! For each character, the per-character score is the mean edit distance
//! between what each subject typed and what the scheme proposes for that
//! character. A scheme's overall score weights the per-character scores by
//! character frequency.
//!
//! File formats (UTF-8 TSV, blank lines and `#` comments ignored):
//!
//! * responses: `charId TAB subjectId TAB romanSequence`
//! * scheme: `charId TAB proposed`
//! * frequencies: `charId TAB weight`, weights summing to 1

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::table::CharacterTable;

/// Tolerance on the sum of character weights.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Levenshtein distance over Unicode scalars with unit costs.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitution.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// What each subject typed for each character.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SubjectResponses {
    by_char: BTreeMap<String, BTreeMap<String, String>>,
}

impl SubjectResponses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a response; a second response by the same subject for the
    /// same character replaces the first.
    pub fn insert(
        &mut self,
        char_id: impl Into<String>,
        subject: impl Into<String>,
        typed: impl Into<String>,
    ) {
        self.by_char
            .entry(char_id.into())
            .or_default()
            .insert(subject.into(), typed.into());
    }

    pub fn from_tsv<R: BufRead>(reader: R) -> Result<Self> {
        let mut out = Self::new();
        for (lineno, fields) in tsv_rows(reader, 3)? {
            let (char_id, subject) = (fields[0].clone(), fields[1].clone());
            if char_id.is_empty() || subject.is_empty() {
                return Err(Error::malformed(lineno, "empty charId or subjectId"));
            }
            if out.get(&char_id, &subject).is_some() {
                return Err(Error::malformed(
                    lineno,
                    format!("duplicate response for {char_id:?} by {subject:?}"),
                ));
            }
            out.insert(char_id, subject, fields[2].clone());
        }
        Ok(out)
    }

    pub fn get(&self, char_id: &str, subject: &str) -> Option<&str> {
        self.by_char.get(char_id)?.get(subject).map(String::as_str)
    }

    /// Characters with at least one response, in order.
    pub fn char_ids(&self) -> impl Iterator<Item = &str> {
        self.by_char
            .iter()
            .filter(|(_, subjects)| !subjects.is_empty())
            .map(|(c, _)| c.as_str())
    }

    /// (subject, typed) pairs for a character, ordered by subject.
    pub fn for_char(&self, char_id: &str) -> impl Iterator<Item = (&str, &str)> {
        self.by_char
            .get(char_id)
            .into_iter()
            .flatten()
            .map(|(s, t)| (s.as_str(), t.as_str()))
    }
}

/// The roman sequence an input scheme proposes for each character.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeEncoding {
    pub name: String,
    pub proposed: BTreeMap<String, String>,
}

impl SchemeEncoding {
    pub fn new(name: impl Into<String>, proposed: BTreeMap<String, String>) -> Self {
        SchemeEncoding {
            name: name.into(),
            proposed,
        }
    }

    pub fn from_tsv<R: BufRead>(name: impl Into<String>, reader: R) -> Result<Self> {
        let mut proposed = BTreeMap::new();
        for (lineno, fields) in tsv_rows(reader, 2)? {
            let [char_id, code] = [fields[0].clone(), fields[1].clone()];
            if proposed.insert(char_id.clone(), code).is_some() {
                return Err(Error::malformed(lineno, format!("duplicate charId {char_id:?}")));
            }
        }
        Ok(Self::new(name, proposed))
    }

    /// The canonical code of every phoneme in a character table.
    pub fn from_table(name: impl Into<String>, table: &CharacterTable) -> Self {
        let proposed = table
            .entries()
            .iter()
            .map(|e| (e.devanagari().to_string(), e.canonical_code().to_string()))
            .collect();
        Self::new(name, proposed)
    }
}

/// Per-character weights summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CharFrequencies {
    weights: BTreeMap<String, f64>,
}

impl CharFrequencies {
    pub fn new(weights: BTreeMap<String, f64>) -> Result<Self> {
        if let Some((c, w)) = weights.iter().find(|(_, w)| !w.is_finite() || **w < 0.0) {
            return Err(Error::MissingData(format!("weight {w} for {c:?} is not a non-negative number")));
        }
        let sum: f64 = weights.values().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::MissingData(format!("weights sum to {sum}, not 1")));
        }
        Ok(CharFrequencies { weights })
    }

    /// Rescales non-negative counts into weights.
    pub fn normalized(counts: BTreeMap<String, f64>) -> Result<Self> {
        let sum: f64 = counts.values().sum();
        if sum <= 0.0 || !sum.is_finite() {
            return Err(Error::MissingData("counts must have a positive sum".into()));
        }
        Self::new(counts.into_iter().map(|(c, n)| (c, n / sum)).collect())
    }

    pub fn uniform<I, S>(char_ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids: Vec<String> = char_ids.into_iter().map(Into::into).collect();
        Self::normalized(ids.into_iter().map(|c| (c, 1.0)).collect())
    }

    pub fn from_tsv<R: BufRead>(reader: R) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (lineno, fields) in tsv_rows(reader, 2)? {
            let w: f64 = fields[1]
                .trim()
                .parse()
                .map_err(|_| Error::malformed(lineno, format!("bad weight {:?}", fields[1])))?;
            if weights.insert(fields[0].clone(), w).is_some() {
                return Err(Error::malformed(lineno, format!("duplicate charId {:?}", fields[0])));
            }
        }
        Self::new(weights)
    }

    pub fn get(&self, char_id: &str) -> Option<f64> {
        self.weights.get(char_id).copied()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub scheme: String,
    pub per_char: BTreeMap<String, f64>,
    pub weighted_average: f64,
}

/// Mean edit distance between each subject's response and the scheme's proposal.
pub fn avg_edit_dist(
    char_id: &str,
    responses: &SubjectResponses,
    scheme: &SchemeEncoding,
) -> Result<f64> {
    let proposed = scheme.proposed.get(char_id).ok_or_else(|| {
        Error::MissingData(format!("scheme {:?} proposes nothing for {char_id:?}", scheme.name))
    })?;
    let (total, subjects) = responses
        .for_char(char_id)
        .fold((0usize, 0usize), |(sum, n), (_, typed)| {
            (sum + edit_distance(typed, proposed), n + 1)
        });
    if subjects == 0 {
        return Err(Error::MissingData(format!("no responses for {char_id:?}")));
    }
    Ok(total as f64 / subjects as f64)
}

/// Frequency-weighted sum of per-character scores.
pub fn weighted_average(per_char: &BTreeMap<String, f64>, freqs: &CharFrequencies) -> Result<f64> {
    per_char.iter().try_fold(0.0, |acc, (c, score)| {
        let w = freqs
            .get(c)
            .ok_or_else(|| Error::MissingData(format!("no weight for {c:?}")))?;
        Ok(acc + w * score)
    })
}

/// Scores each scheme over every character that has responses; reports are
/// ordered by scheme name.
pub fn compare_schemes(
    responses: &SubjectResponses,
    schemes: &[SchemeEncoding],
    freqs: &CharFrequencies,
) -> Result<Vec<EvalReport>> {
    let mut reports = schemes
        .iter()
        .map(|scheme| {
            let per_char = responses
                .char_ids()
                .map(|c| Ok((c.to_string(), avg_edit_dist(c, responses, scheme)?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            let weighted_average = weighted_average(&per_char, freqs)?;
            Ok(EvalReport {
                scheme: scheme.name.clone(),
                per_char,
                weighted_average,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.scheme.cmp(&b.scheme));
    Ok(reports)
}

/// `scheme TAB weightedAverage`, one line per report.
pub fn write_report_tsv<W: Write>(reports: &[EvalReport], mut out: W) -> Result<()> {
    for r in reports {
        writeln!(out, "{}\t{}", r.scheme, r.weighted_average)?;
    }
    Ok(())
}

/// A plain-text table: one row per scheme, one column per character, plus the weighted average.
pub fn format_report_table(reports: &[EvalReport]) -> String {
    let chars: Vec<&String> = reports
        .first()
        .map(|r| r.per_char.keys().collect())
        .unwrap_or_default();
    let width = reports.iter().map(|r| r.scheme.chars().count()).max().unwrap_or(0).max(6);
    let mut s = String::new();
    let _ = write!(s, "{:<width$}", "scheme");
    for c in &chars {
        let _ = write!(s, "  {c:>6}");
    }
    let _ = writeln!(s, "  {:>8}", "average");
    for r in reports {
        let _ = write!(s, "{:<width$}", r.scheme);
        for c in &chars {
            let _ = write!(s, "  {:>6.3}", r.per_char.get(*c).copied().unwrap_or(f64::NAN));
        }
        let _ = writeln!(s, "  {:>8.4}", r.weighted_average);
    }
    s
}

fn tsv_rows<R: BufRead>(reader: R, arity: usize) -> Result<Vec<(usize, Vec<String>)>> {
    let mut rows = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<String> = line.split('\t').map(str::to_string).collect();
        if fields.len() != arity {
            return Err(Error::malformed(
                lineno,
                format!("expected {arity} fields, found {}", fields.len()),
            ));
        }
        rows.push((lineno, fields));
    }
    Ok(rows)
}
