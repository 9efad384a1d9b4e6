//! HTTP suggestion service.
//!
//! The engine is loaded once, after the listener is up; until then every
//! endpoint answers 503. Handlers only read the engine.

use std::sync::{Arc, OnceLock};

use axum::extract::{Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use hindi_ime::{Engine, Suggestion};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};

/// Upper bound on `limit` for /api/suggest.
pub const MAX_LIMIT: usize = 25;

const JSON_UTF8: &str = "application/json; charset=utf-8";

#[derive(Debug, Default)]
pub struct AppState {
    engine: OnceLock<Engine>,
}

impl AppState {
    pub fn new() -> Arc<Self> {
        Arc::new(AppState::default())
    }

    pub fn loaded(engine: Engine) -> Arc<Self> {
        let state = Self::new();
        state.install(engine);
        state
    }

    /// Makes the engine visible to handlers. Only the first call has any effect.
    pub fn install(&self, engine: Engine) -> bool {
        self.engine.set(engine).is_ok()
    }

    pub fn engine(&self) -> Option<&Engine> {
        self.engine.get()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuggestionBody {
    pub word: String,
    pub frequency: u64,
    pub source: String,
}

impl From<Suggestion> for SuggestionBody {
    fn from(s: Suggestion) -> Self {
        SuggestionBody {
            word: s.word,
            frequency: s.frequency,
            source: s.source.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuggestResponse {
    pub query: String,
    pub suggestions: Vec<SuggestionBody>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslitResponse {
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HealthResponse {
    pub entries: usize,
}

#[derive(Debug, Deserialize)]
struct SuggestParams {
    q: Option<String>,
    limit: Option<String>,
}

#[derive(Debug, Deserialize)]
struct TranslitParams {
    text: Option<String>,
}

/// Cross-origin policy: `None` allows any origin.
#[derive(Debug, Clone, Default)]
pub struct CorsPolicy {
    pub origins: Option<Vec<HeaderValue>>,
}

pub fn router(state: Arc<AppState>, cors: &CorsPolicy) -> Router {
    let allow = match &cors.origins {
        None => AllowOrigin::any(),
        Some(list) => AllowOrigin::list(list.iter().cloned()),
    };
    Router::new()
        .route("/api/suggest", get(suggest))
        .route("/api/translit", get(translit))
        .route("/healthz", get(health))
        .layer(CorsLayer::new().allow_origin(allow).allow_methods([axum::http::Method::GET]))
        .with_state(state)
}

fn json<T: Serialize>(status: StatusCode, body: &T) -> Response {
    let bytes = serde_json::to_vec(body).expect("response bodies serialize");
    (status, [(header::CONTENT_TYPE, JSON_UTF8)], bytes).into_response()
}

fn error(status: StatusCode, message: &str) -> Response {
    json(status, &serde_json::json!({ "error": message }))
}

fn not_ready() -> Response {
    error(StatusCode::SERVICE_UNAVAILABLE, "lexicon is still loading")
}

/// Suggestions for one token, identical to what the CLI prints.
pub fn suggestions_for(engine: &Engine, query: &str, limit: usize) -> Vec<SuggestionBody> {
    engine
        .suggest_with_limit(query, limit)
        .map(|list| list.into_iter().map(SuggestionBody::from).collect())
        .unwrap_or_default()
}

async fn suggest(State(state): State<Arc<AppState>>, params: Option<Query<SuggestParams>>) -> Response {
    let Some(engine) = state.engine() else {
        return not_ready();
    };
    let Some(Query(params)) = params else {
        return error(StatusCode::BAD_REQUEST, "malformed query string");
    };
    let query = match params.q {
        Some(q) if !q.is_empty() => q,
        _ => return error(StatusCode::BAD_REQUEST, "missing or empty q"),
    };
    let limit = match params.limit.as_deref() {
        None => engine.config().max_suggestions(),
        Some(raw) => match raw.parse::<usize>() {
            Ok(n) if n > 0 => n.min(MAX_LIMIT),
            _ => return error(StatusCode::BAD_REQUEST, "limit must be a positive integer"),
        },
    };
    let suggestions = suggestions_for(engine, &query, limit);
    json(StatusCode::OK, &SuggestResponse { query, suggestions })
}

async fn translit(State(state): State<Arc<AppState>>, params: Option<Query<TranslitParams>>) -> Response {
    let Some(engine) = state.engine() else {
        return not_ready();
    };
    match params.and_then(|Query(p)| p.text) {
        Some(text) => json(StatusCode::OK, &TranslitResponse { text: engine.transliterate(&text) }),
        None => error(StatusCode::BAD_REQUEST, "missing text"),
    }
}

async fn health(State(state): State<Arc<AppState>>) -> Response {
    match state.engine() {
        Some(engine) => json(StatusCode::OK, &HealthResponse { entries: engine.lexicon().len() }),
        None => not_ready(),
    }
}
