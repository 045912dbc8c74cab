//! Live play over HTTP and WebSocket.
//!
//! `POST /session` opens a session and returns `{id, dt, init}`. Frames
//! `{"t", "lion": [x, y]}` sent on `WS /session/{id}` are answered with
//! `{"t", "man": [x, y], "dist", "captured"}`; the socket closes on capture.
//! `GET /session/{id}/trace` returns the samples so far as JSONL.

mod server;
mod session;

pub use server::{router, serve, ServiceConfig};
pub use session::{Frame, Session, SessionError, SessionKind, SessionMan, SessionOptions, StepError};
