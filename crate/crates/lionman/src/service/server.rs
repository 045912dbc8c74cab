use super::session::{Session, SessionKind, SessionOptions, StepError};
use crate::scenario::SpaceSpec;
use axum::body::Bytes;
use axum::extract::ws::rejection::WebSocketUpgradeRejection;
use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::{Arc, Mutex};

/// Defaults applied to sessions that do not override them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ServiceConfig {
    pub defaults: SessionOptions,
}

type Shared = Arc<tokio::sync::Mutex<Session>>;

struct AppState {
    config: ServiceConfig,
    sessions: Mutex<HashMap<String, Shared>>,
}

impl AppState {
    fn get(&self, id: &str) -> Option<Shared> {
        self.sessions.lock().expect("session table").get(id).cloned()
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateRequest {
    #[serde(default)]
    space: Option<SpaceSpec>,
    #[serde(default)]
    dt: Option<f64>,
    #[serde(default)]
    speed_cap: Option<f64>,
    #[serde(default)]
    tolerance: Option<f64>,
}

#[derive(Serialize)]
struct Init {
    lion: [f64; 2],
    man: [f64; 2],
}

#[derive(Serialize)]
struct Created {
    id: String,
    dt: f64,
    init: Init,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClientFrame {
    t: f64,
    lion: [f64; 2],
}

fn error(status: StatusCode, msg: impl std::fmt::Display) -> Response {
    (status, Json(json!({ "error": msg.to_string() }))).into_response()
}

pub fn router(config: ServiceConfig) -> Router {
    let state = Arc::new(AppState { config, sessions: Mutex::new(HashMap::new()) });
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(connect))
        .route("/session/{id}/trace", get(trace))
        .with_state(state)
}

pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(config)).await
}

async fn create(State(state): State<Arc<AppState>>, body: Bytes) -> Response {
    let req: CreateRequest = if body.iter().all(u8::is_ascii_whitespace) {
        CreateRequest::default()
    } else {
        match serde_json::from_slice(&body) {
            Ok(r) => r,
            Err(e) => return error(StatusCode::BAD_REQUEST, e),
        }
    };
    let kind = match req.space {
        None | Some(SpaceSpec::Disk) => SessionKind::Disk,
        Some(SpaceSpec::Circle) => SessionKind::Circle,
        Some(other) => {
            return error(StatusCode::UNPROCESSABLE_ENTITY, format!("sessions are not offered in {other:?}"))
        }
    };
    let d = state.config.defaults;
    let opts = SessionOptions {
        dt: req.dt.unwrap_or(d.dt),
        speed_cap: req.speed_cap.or(d.speed_cap),
        tolerance: req.tolerance.unwrap_or(d.tolerance),
    };
    let session = match Session::new(kind, opts) {
        Ok(s) => s,
        Err(e) => return error(StatusCode::BAD_REQUEST, e),
    };
    let first = &session.samples()[0];
    let init = Init { lion: [first.lion.x, first.lion.y], man: [first.man.x, first.man.y] };
    let id = uuid::Uuid::new_v4().simple().to_string();
    state
        .sessions
        .lock()
        .expect("session table")
        .insert(id.clone(), Arc::new(tokio::sync::Mutex::new(session)));
    Json(Created { id, dt: opts.dt, init }).into_response()
}

async fn trace(State(state): State<Arc<AppState>>, Path(id): Path<String>) -> Response {
    let Some(session) = state.get(&id) else {
        return error(StatusCode::NOT_FOUND, "unknown session");
    };
    let body = session.lock().await.trace_jsonl();
    ([(header::CONTENT_TYPE, "application/x-ndjson")], body).into_response()
}

async fn connect(
    State(state): State<Arc<AppState>>,
    Path(id): Path<String>,
    ws: Result<WebSocketUpgrade, WebSocketUpgradeRejection>,
) -> Response {
    let Some(session) = state.get(&id) else {
        return error(StatusCode::NOT_FOUND, "unknown session");
    };
    let ws = match ws {
        Ok(ws) => ws,
        Err(rejection) => return rejection.into_response(),
    };
    if session.lock().await.is_closed() {
        return error(StatusCode::GONE, "session is closed");
    }
    ws.on_upgrade(move |socket| play(socket, session))
}

/// Answers client frames one at a time until capture or disconnect.
async fn play(mut socket: WebSocket, session: Shared) {
    while let Some(Ok(msg)) = socket.recv().await {
        let text = match msg {
            Message::Text(t) => t,
            Message::Close(_) => break,
            _ => continue,
        };
        let (reply, done) = match serde_json::from_str::<ClientFrame>(&text) {
            Err(e) => (json!({ "error": format!("malformed frame: {e}") }), false),
            Ok(frame) => {
                let mut s = session.lock().await;
                match s.step(frame.t, frame.lion) {
                    Ok(f) => (serde_json::to_value(f).expect("frame"), f.captured),
                    Err(StepError::OutOfOrder { expected, .. }) => {
                        (json!({ "error": "out of order", "expected_t": expected }), false)
                    }
                    Err(e @ StepError::Closed) => (json!({ "error": e.to_string() }), true),
                    Err(e) => (json!({ "error": e.to_string() }), false),
                }
            }
        };
        if socket.send(Message::Text(reply.to_string().into())).await.is_err() {
            return;
        }
        if done {
            let _ = socket.send(Message::Close(None)).await;
            return;
        }
    }
}
