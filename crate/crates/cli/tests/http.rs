use std::io::{Read, Write};
use std::net::TcpStream;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{header, Request, StatusCode};
use axum::Router;
use hindi_ime::{CharacterTable, Engine, EngineConfig, Lexicon};
use hindi_ime_cli::server::{router, AppState, CorsPolicy, SuggestResponse};
use http_body_util::BodyExt;
use serde_json::Value;
use tower::ServiceExt;

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect()
}

fn engine(lexicon: &str) -> Engine {
    let table = CharacterTable::load_default();
    let file = std::fs::read(fixture(lexicon)).unwrap();
    let lex = Lexicon::load(&file[..], &table).unwrap();
    Engine::new(table, lex, EngineConfig::default())
}

fn app(lexicon: &str) -> Router {
    router(AppState::loaded(engine(lexicon)), &CorsPolicy::default())
}

async fn get(app: &Router, uri: &str) -> (StatusCode, String, Vec<u8>) {
    let res = app
        .clone()
        .oneshot(Request::get(uri).body(Body::empty()).unwrap())
        .await
        .unwrap();
    let status = res.status();
    let ctype = res
        .headers()
        .get(header::CONTENT_TYPE)
        .map(|v| v.to_str().unwrap().to_string())
        .unwrap_or_default();
    let body = res.into_body().collect().await.unwrap().to_bytes().to_vec();
    (status, ctype, body)
}

async fn get_json(app: &Router, uri: &str) -> (StatusCode, Value) {
    let (status, ctype, body) = get(app, uri).await;
    assert_eq!(ctype, "application/json; charset=utf-8");
    (status, serde_json::from_slice(&body).unwrap())
}

#[tokio::test]
async fn suggest_rajdhani_on_seeded_lexicon() {
    let app = app("seeded.tsv");
    let (status, body) = get_json(&app, "/api/suggest?q=rajdhani").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["query"], "rajdhani");
    assert_eq!(body["suggestions"][0]["word"], "राजधानी");
    assert_eq!(body["suggestions"][0]["frequency"], 5);
    assert_eq!(body["suggestions"][0]["source"], "Lexicon");
}

#[tokio::test]
async fn suggest_rejects_empty_query() {
    let app = app("seeded.tsv");
    assert_eq!(get_json(&app, "/api/suggest?q=").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get_json(&app, "/api/suggest").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get_json(&app, "/api/suggest?q=ki&limit=0").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get_json(&app, "/api/suggest?q=ki&limit=x").await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn suggest_falls_back_on_empty_lexicon() {
    let app = app("empty.tsv");
    let (status, body) = get_json(&app, "/api/suggest?q=jaipur").await;
    assert_eq!(status, StatusCode::OK);
    let list = body["suggestions"].as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["word"], "जैपुर");
    assert_eq!(list[0]["source"], "Fallback");
    assert_eq!(list[0]["frequency"], 0);
}

#[tokio::test]
async fn untypeable_query_is_empty_200() {
    let app = app("seeded.tsv");
    let (status, body) = get_json(&app, "/api/suggest?q=xx").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["suggestions"], serde_json::json!([]));
    let (status, body) = get_json(&app, "/api/suggest?q=%E0%A4%95").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["suggestions"], serde_json::json!([]));
}

#[tokio::test]
async fn limit_defaults_and_caps() {
    let table = CharacterTable::load_default();
    // 40 words all sharing the key prefix "k"
    let words: Vec<(String, u64)> = table
        .entries()
        .iter()
        .filter(|e| e.is_vowel())
        .flat_map(|v| {
            ['क', 'ख'].into_iter().flat_map(move |c| {
                (1..=2u64).map(move |n| {
                    let body = match v.matra() {
                        Some(m) => format!("{c}{m}"),
                        None => c.to_string(),
                    };
                    (format!("{body}{}", "न".repeat(n as usize)), n)
                })
            })
        })
        .collect();
    let lex = Lexicon::build(words, &table).lexicon;
    assert!(lex.len() >= 30);
    let app = router(
        AppState::loaded(Engine::new(table, lex, EngineConfig::default())),
        &CorsPolicy::default(),
    );
    let count = |v: &Value| v["suggestions"].as_array().unwrap().len();
    assert_eq!(count(&get_json(&app, "/api/suggest?q=k").await.1), 5);
    assert_eq!(count(&get_json(&app, "/api/suggest?q=k&limit=3").await.1), 3);
    assert_eq!(count(&get_json(&app, "/api/suggest?q=k&limit=1000").await.1), 25);
}

#[tokio::test]
async fn translit_endpoint() {
    let app = app("empty.tsv");
    let (status, body) =
        get_json(&app, "/api/translit?text=jaipur%20rajasthan%20ki%20rajdhani%20hai").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["text"], "जैपुर रजस्थन कि रजधनि है");
    assert_eq!(get_json(&app, "/api/translit?text=").await.1["text"], "");
    assert_eq!(get_json(&app, "/api/translit?text=123%20ki").await.1["text"], "123 कि");
    assert_eq!(get_json(&app, "/api/translit").await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn health_before_and_after_load() {
    let state = AppState::new();
    let app = router(Arc::clone(&state), &CorsPolicy::default());
    assert_eq!(get(&app, "/healthz").await.0, StatusCode::SERVICE_UNAVAILABLE);
    assert_eq!(get(&app, "/api/suggest?q=ki").await.0, StatusCode::SERVICE_UNAVAILABLE);
    assert_eq!(get(&app, "/api/translit?text=ki").await.0, StatusCode::SERVICE_UNAVAILABLE);
    state.install(engine("empty.tsv"));
    assert_eq!(get_json(&app, "/healthz").await.1, serde_json::json!({"entries": 0}));

    let table = CharacterTable::load_default();
    let lex = Lexicon::build([("की", 5u64), ("है", 3), ("राम", 1)], &table).lexicon;
    let three = router(
        AppState::loaded(Engine::new(table, lex, EngineConfig::default())),
        &CorsPolicy::default(),
    );
    assert_eq!(get_json(&three, "/healthz").await.1, serde_json::json!({"entries": 3}));
}

#[tokio::test]
async fn repeated_requests_are_identical() {
    let app = app("seeded.tsv");
    let first = get(&app, "/api/suggest?q=rajasthan").await;
    for _ in 0..5 {
        assert_eq!(get(&app, "/api/suggest?q=rajasthan").await, first);
    }
    let parsed: SuggestResponse = serde_json::from_slice(&first.2).unwrap();
    assert_eq!(parsed.suggestions[0].word, "राजस्थान");
}

#[tokio::test]
async fn cors_headers() {
    let app = app("empty.tsv");
    let res = app
        .clone()
        .oneshot(
            Request::get("/healthz")
                .header(header::ORIGIN, "http://localhost:5173")
                .body(Body::empty())
                .unwrap(),
        )
        .await
        .unwrap();
    assert_eq!(res.headers()[header::ACCESS_CONTROL_ALLOW_ORIGIN], "*");

    let restricted = router(
        AppState::loaded(engine("empty.tsv")),
        &CorsPolicy {
            origins: Some(vec!["http://demo.local".parse().unwrap()]),
        },
    );
    let res = restricted
        .oneshot(
            Request::get("/healthz")
                .header(header::ORIGIN, "http://elsewhere")
                .body(Body::empty())
                .unwrap(),
        )
        .await
        .unwrap();
    assert!(res.headers().get(header::ACCESS_CONTROL_ALLOW_ORIGIN).is_none());
}

#[test]
fn serves_over_tcp() {
    let rt = tokio::runtime::Runtime::new().unwrap();
    let listener = rt
        .block_on(tokio::net::TcpListener::bind("127.0.0.1:0"))
        .unwrap();
    let addr = listener.local_addr().unwrap();
    rt.spawn(async move { axum::serve(listener, app("seeded.tsv")).await.unwrap() });

    let mut stream = TcpStream::connect(addr).unwrap();
    write!(
        stream,
        "GET /api/suggest?q=ki HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\n\r\n"
    )
    .unwrap();
    let mut raw = String::new();
    stream.read_to_string(&mut raw).unwrap();
    assert!(raw.starts_with("HTTP/1.1 200"), "{raw}");
    assert!(raw.to_ascii_lowercase().contains("content-type: application/json; charset=utf-8"));
    let body = &raw[raw.find("\r\n\r\n").unwrap() + 4..];
    let parsed: SuggestResponse = serde_json::from_str(body).unwrap();
    assert_eq!(parsed.suggestions[0].word, "की");
}
