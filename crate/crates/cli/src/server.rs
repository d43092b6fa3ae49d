//! HTTP API for the workbench.
//!
//! All engine state is built once at startup and shared read-only between
//! requests.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::StatusCode;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use negdetect_core::deppat::{match_pattern, parse_conllu, ChainLabel, GraphPattern, MatchConfig, Pattern};
use negdetect_core::negex::{TriggerSet, TriggerType, Window};
use negdetect_core::{Error, Pipeline};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::services::ServeDir;

const PLACEHOLDER: &str = include_str!("../static/index.html");

pub struct AppState {
    pub pipeline: Pipeline,
    /// Selectable by name in `/api/annotate`; keys are lowercase.
    pub trigger_sets: BTreeMap<String, TriggerSet>,
    pub patterns: Vec<GraphPattern>,
}

impl AppState {
    pub fn new(pipeline: Pipeline, extra_sets: Vec<TriggerSet>, patterns: Vec<GraphPattern>) -> Self {
        let mut trigger_sets = BTreeMap::new();
        for set in extra_sets.into_iter().chain([pipeline.triggers.clone()]) {
            trigger_sets.insert(set.name.to_lowercase(), set);
        }
        AppState {
            pipeline,
            trigger_sets,
            patterns,
        }
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    error: &'static str,
    detail: String,
    extra: Option<(&'static str, usize)>,
}

impl ApiError {
    fn new(status: StatusCode, error: &'static str, detail: impl Into<String>) -> Self {
        ApiError {
            status,
            error,
            detail: detail.into(),
            extra: None,
        }
    }

    fn with(mut self, key: &'static str, value: usize) -> Self {
        self.extra = Some((key, value));
        self
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let mut body = json!({ "error": self.error, "detail": self.detail });
        if let Some((k, v)) = self.extra {
            body[k] = json!(v);
        }
        (self.status, Json(body)).into_response()
    }
}

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "invalid request body", e.to_string()))
}

#[derive(Deserialize)]
struct AnnotateRequest {
    text: String,
    #[serde(default)]
    window: Option<Value>,
    #[serde(default)]
    trigger_set: Option<String>,
}

fn window_of(v: &Value) -> Result<Window, String> {
    match v {
        Value::Number(n) => n.to_string().parse(),
        Value::String(s) => s.parse(),
        other => Err(format!("window must be a number or \"inf\", got {other}")),
    }
}

async fn annotate(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let req: AnnotateRequest = parse_body(&body)?;
    let mut pipeline = state.pipeline.clone();
    if let Some(w) = &req.window {
        pipeline.negex.window = window_of(w).map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "invalid window", e))?;
    }
    if let Some(name) = &req.trigger_set {
        pipeline.triggers = state
            .trigger_sets
            .get(&name.to_lowercase())
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::BAD_REQUEST, "unknown trigger set", name.clone()))?;
    }
    let doc = pipeline
        .annotate(&req.text)
        .map_err(|e| ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "annotation failed", e.to_string()))?;
    Ok(Json(doc.to_json()).into_response())
}

#[derive(Deserialize)]
struct MatchRequest {
    conllu: String,
    pattern: String,
    #[serde(default)]
    chain_label: Option<String>,
}

#[derive(Serialize)]
struct MatchEntry {
    /// Index of the sentence within the submitted CoNLL-U.
    sentence: usize,
    node: usize,
    bindings: BTreeMap<String, usize>,
}

async fn match_handler(State(_): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let req: MatchRequest = parse_body(&body)?;
    let chain_label: ChainLabel = match &req.chain_label {
        Some(s) => s
            .parse()
            .map_err(|e: String| ApiError::new(StatusCode::BAD_REQUEST, "invalid chain label", e))?,
        None => ChainLabel::default(),
    };
    let pattern = Pattern::parse(&req.pattern).map_err(|e| {
        ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "invalid pattern", e.to_string()).with("offset", e.offset)
    })?;
    let graphs = parse_conllu(&req.conllu).map_err(|e| match e {
        Error::Conllu { line, .. } => {
            ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "invalid conllu", e.to_string()).with("line", line)
        }
        other => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "invalid conllu", other.to_string()),
    })?;
    let cfg = MatchConfig { chain_label };
    let matches: Vec<MatchEntry> = graphs
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            match_pattern(&pattern, g, &cfg).into_iter().map(move |m| MatchEntry {
                sentence: i,
                node: m.node,
                bindings: m.bindings,
            })
        })
        .collect();
    Ok(Json(json!({ "pattern": pattern.to_string(), "matches": matches })).into_response())
}

async fn patterns(State(state): State<Arc<AppState>>) -> Json<Value> {
    let list: Vec<Value> = state
        .patterns
        .iter()
        .map(|p| {
            json!({
                "pattern": p.source,
                "canonical": p.canonical(),
                "kind": p.kind.to_string(),
                "description": p.description,
            })
        })
        .collect();
    Json(json!({ "patterns": list }))
}

async fn triggers(State(state): State<Arc<AppState>>) -> Json<Value> {
    let sets: Vec<Value> = state
        .trigger_sets
        .values()
        .map(|s| {
            json!({
                "name": s.name,
                "total": s.len(),
                "pre": s.count(TriggerType::Pre),
                "post": s.count(TriggerType::Post),
                "conj": s.count(TriggerType::Conj),
                "pseu": s.count(TriggerType::Pseu),
            })
        })
        .collect();
    Json(json!({
        "default": state.pipeline.triggers.name,
        "window": state.pipeline.negex.window.to_string(),
        "sets": sets,
    }))
}

async fn api_not_found() -> ApiError {
    ApiError::new(StatusCode::NOT_FOUND, "not found", "no such endpoint")
}

async fn index() -> Html<&'static str> {
    Html(PLACEHOLDER)
}

/// The full application. Static assets come from `static_dir` when given,
/// otherwise `/` serves a built-in placeholder page.
pub fn router(state: Arc<AppState>, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/annotate", post(annotate))
        .route("/match", post(match_handler))
        .route("/patterns", get(patterns))
        .route("/triggers", get(triggers))
        .fallback(api_not_found)
        .with_state(state);
    let app = Router::new().nest("/api", api);
    match static_dir {
        Some(dir) => app.fallback_service(ServeDir::new(dir)),
        None => app.route("/", get(index)),
    }
}

/// Resolves on Ctrl-C or SIGTERM.
pub async fn shutdown_signal() {
    let ctrl_c = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        if let Ok(mut s) = tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            s.recv().await;
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = ctrl_c => {},
        _ = terminate => {},
    }
    tracing::info!("shutting down");
}
