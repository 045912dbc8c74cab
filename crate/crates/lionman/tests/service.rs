use futures_util::{SinkExt, StreamExt};
use lionman::gen::{self, Region};
use lionman::service::{router, ServiceConfig, SessionKind, SessionMan, SessionOptions};
use lionman_core::disk::DiskPoint;
use lionman_core::{check_no_lookahead, replay, EvalMode, TimeGrid};
use serde_json::{json, Value};
use std::net::SocketAddr;
use tokio_tungstenite::tungstenite::Message;

/// Bound on `|man + lion|` at boundary ticks, in units of `dt`, for a lion
/// moving at 0.2 radii per second. Calibrated at 1.2566 (2 pi times the
/// speed: the man lags one tick behind a lion that is still closing in on
/// the rim) and frozen with a small margin.
const LAG_C: f64 = 1.3;

async fn start(defaults: SessionOptions) -> SocketAddr {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(async move {
        axum::serve(listener, router(ServiceConfig { defaults })).await.unwrap();
    });
    addr
}

async fn create(addr: SocketAddr, body: &str) -> (reqwest::StatusCode, Value) {
    let resp = reqwest::Client::new()
        .post(format!("http://{addr}/session"))
        .header("content-type", "application/json")
        .body(body.to_string())
        .send()
        .await
        .unwrap();
    let status = resp.status();
    (status, serde_json::from_str(&resp.text().await.unwrap()).unwrap())
}

async fn trace(addr: SocketAddr, id: &str) -> (reqwest::StatusCode, String) {
    let resp = reqwest::get(format!("http://{addr}/session/{id}/trace")).await.unwrap();
    (resp.status(), resp.text().await.unwrap())
}

type Ws = tokio_tungstenite::WebSocketStream<tokio_tungstenite::MaybeTlsStream<tokio::net::TcpStream>>;

async fn connect(addr: SocketAddr, id: &str) -> Ws {
    tokio_tungstenite::connect_async(format!("ws://{addr}/session/{id}")).await.unwrap().0
}

async fn send(ws: &mut Ws, t: f64, lion: [f64; 2]) -> Value {
    ws.send(Message::text(json!({"t": t, "lion": lion}).to_string())).await.unwrap();
    loop {
        match ws.next().await.unwrap().unwrap() {
            Message::Text(text) => return serde_json::from_str(&text).unwrap(),
            _ => continue,
        }
    }
}

fn point(v: &Value) -> DiskPoint {
    DiskPoint::new(v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

#[tokio::test]
async fn create_disk_circle_and_reject_finite() {
    let addr = start(SessionOptions::default()).await;
    let (status, body) = create(addr, "").await;
    assert!(status.is_success());
    assert_eq!(body["init"], json!({"lion": [0.0, 0.0], "man": [1.0, 0.0]}));
    assert_eq!(body["dt"].as_f64(), Some(1.0 / 60.0));
    assert!(body["id"].as_str().is_some_and(|s| !s.is_empty()));

    let (status, body) = create(addr, r#"{"space": "circle", "dt": 0.01}"#).await;
    assert!(status.is_success());
    assert_eq!(point(&body["init"]["man"]), DiskPoint::new(-1.0, -0.0));
    assert_eq!(body["dt"].as_f64(), Some(0.01));

    let (status, _) = create(addr, r#"{"space": {"finite": "x.json"}}"#).await;
    assert_eq!(status, reqwest::StatusCode::UNPROCESSABLE_ENTITY);
    let (status, _) = create(addr, r#"{"space": "disk", "speed_cap": -1}"#).await;
    assert_eq!(status, reqwest::StatusCode::BAD_REQUEST);
    let (status, _) = create(addr, r#"{"colour": "red"}"#).await;
    assert_eq!(status, reqwest::StatusCode::BAD_REQUEST);

    let (status, _) = trace(addr, "nope").await;
    assert_eq!(status, reqwest::StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn walk_to_the_boundary_and_replay_the_transcript() {
    let addr = start(SessionOptions::default()).await;
    let (_, body) = create(addr, "").await;
    let id = body["id"].as_str().unwrap().to_string();
    let dt = body["dt"].as_f64().unwrap();
    let (_, fresh) = trace(addr, &id).await;
    assert_eq!(fresh.lines().count(), 1);

    let mut ws = connect(addr, &id).await;
    let mut worst: f64 = 0.0;
    for k in 1..=360 {
        let rho = (k as f64 / 300.0).min(1.0);
        let frame = send(&mut ws, k as f64 * dt, [rho, 0.0]).await;
        assert_eq!(frame["captured"], Value::Bool(false));
        let man = point(&frame["man"]);
        assert!((man.norm() - 1.0).abs() <= 1e-12);
        if rho == 1.0 {
            let gap = man.dist(DiskPoint::new(-1.0, 0.0));
            worst = worst.max(gap / dt);
        }
    }
    assert!(worst <= LAG_C, "boundary lag {worst} dt");
    assert!(worst > 0.0);

    // duplicate and skipped timestamps are refused with the expected next t
    let err = send(&mut ws, 360.0 * dt, [1.0, 0.0]).await;
    assert_eq!(err["error"], "out of order");
    assert!((err["expected_t"].as_f64().unwrap() - 361.0 * dt).abs() < 1e-12);
    let err = send(&mut ws, 400.0 * dt, [1.0, 0.0]).await;
    assert_eq!(err["error"], "out of order");
    let err = send(&mut ws, f64::MAX, [1.0, 0.0]).await;
    assert!(err["error"].is_string());
    ws.close(None).await.unwrap();

    let (_, text) = trace(addr, &id).await;
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 361);
    let lion: Vec<DiskPoint> = lines.iter().map(|l| point(&l["lion"])).collect();
    let man: Vec<DiskPoint> = lines.iter().map(|l| point(&l["man"])).collect();

    let grid = TimeGrid::new(dt, (lines.len() as f64 - 0.5) * dt).unwrap();
    assert_eq!(grid.len(), lines.len());
    for (l, &t) in lines.iter().zip(grid.times()) {
        assert_eq!(l["t"].as_f64().unwrap(), t);
    }
    let strategy = SessionMan::new(SessionKind::Disk, SessionOptions::default()).unwrap();
    let replayed = replay(&mut strategy.clone(), &grid, &lion, EvalMode::Strict).unwrap();
    assert_eq!(replayed, man);

    let mut r = gen::rng(2024);
    let forks: Vec<f64> = (0..50).map(|i| grid.times()[1 + (i * 7) % (grid.len() - 1)]).collect();
    let report = check_no_lookahead(
        &strategy,
        &grid,
        &lion,
        &forks,
        |b: &[DiskPoint], k| gen::fork_disk(&mut r, Region::Disk, b, k),
        EvalMode::Strict,
    )
    .unwrap();
    assert!(report.passed(), "{:?}", report.first_divergence);
    assert_eq!(report.forks_checked, 50);
}

#[tokio::test]
async fn teleporting_lion_captures_without_a_speed_cap() {
    let addr = start(SessionOptions::default()).await;
    let (_, body) = create(addr, "").await;
    let id = body["id"].as_str().unwrap().to_string();
    let dt = body["dt"].as_f64().unwrap();
    let mut ws = connect(addr, &id).await;
    // the man's next position is fixed by the lion's past: with the lion at
    // the centre it is 1
    send(&mut ws, dt, [0.0, 0.0]).await;
    let frame = send(&mut ws, 2.0 * dt, [1.0, 0.0]).await;
    assert_eq!(frame["captured"], Value::Bool(true));
    assert_eq!(frame["dist"].as_f64(), Some(0.0));
    // the server closes the socket after a capture
    let mut closed = false;
    while let Some(msg) = ws.next().await {
        match msg {
            Ok(Message::Close(_)) | Err(_) => {
                closed = true;
                break;
            }
            _ => {}
        }
    }
    assert!(closed || ws.next().await.is_none());

    let (_, text) = trace(addr, &id).await;
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].ends_with(r#""captured":true}"#));

    let err = tokio_tungstenite::connect_async(format!("ws://{addr}/session/{id}")).await;
    assert!(err.is_err(), "closed sessions are gone");
}

#[tokio::test]
async fn speed_cap_from_config() {
    let addr = start(SessionOptions { speed_cap: Some(0.6), ..SessionOptions::default() }).await;
    let (_, body) = create(addr, "").await;
    let id = body["id"].as_str().unwrap().to_string();
    let dt = body["dt"].as_f64().unwrap();
    let mut ws = connect(addr, &id).await;
    let frame = send(&mut ws, dt, [1.0, 0.0]).await;
    assert_eq!(frame["captured"], Value::Bool(false));
    let (_, text) = trace(addr, &id).await;
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert!((point(&last["lion"]).x - 0.01).abs() < 1e-15);
}

#[tokio::test]
async fn malformed_frames_are_answered_with_errors() {
    let addr = start(SessionOptions::default()).await;
    let (_, body) = create(addr, "").await;
    let id = body["id"].as_str().unwrap().to_string();
    let mut ws = connect(addr, &id).await;
    ws.send(Message::text("{\"lion\": 3}")).await.unwrap();
    let reply = loop {
        if let Message::Text(t) = ws.next().await.unwrap().unwrap() {
            break serde_json::from_str::<Value>(&t).unwrap();
        }
    };
    assert!(reply["error"].as_str().unwrap().starts_with("malformed frame"));
    let (status, _) = reqwest::get(format!("http://{addr}/session/unknown")).await.map(|r| (r.status(), ())).unwrap();
    assert_eq!(status, reqwest::StatusCode::NOT_FOUND);
}
