//! Live-play sessions, independent of any transport.
//!
//! The client drives the lion one tick at a time. The man's answer for tick
//! `j + 1` is computed when the lion's sample at tick `j` is accepted, before
//! the next client frame arrives, so it cannot depend on it.

use crate::formats::{trace_line, PointNames};
use lionman_core::disk::{besicovitch_step, BesiState, DiskPoint};
use lionman_core::{History, Sample, Strategy, StrategyError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arenas a session can be played in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionKind {
    /// Besicovitch evader in the closed disk.
    Disk,
    /// Antipodal evader on the circle.
    Circle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SessionOptions {
    pub dt: f64,
    /// Maximum lion speed in radii per second. `None` lets the lion jump.
    pub speed_cap: Option<f64>,
    pub tolerance: f64,
}

impl Default for SessionOptions {
    fn default() -> Self {
        SessionOptions { dt: 1.0 / 60.0, speed_cap: None, tolerance: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SessionError {
    #[error("tick must be positive and finite")]
    BadTick,
    #[error("speed cap must be positive and finite")]
    BadSpeedCap,
    #[error("tolerance must be nonnegative and finite")]
    BadTolerance,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StepError {
    #[error("out of order: expected t = {expected}, got {got}")]
    OutOfOrder { expected: f64, got: f64 },
    #[error("session is closed")]
    Closed,
    #[error("lion position must be a finite point off the origin on the circle")]
    BadPosition,
}

/// The server's answer to one accepted lion sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Frame {
    pub t: f64,
    pub man: [f64; 2],
    pub dist: f64,
    pub captured: bool,
}

#[derive(Debug, Clone)]
pub struct Session {
    kind: SessionKind,
    opts: SessionOptions,
    besi: BesiState,
    /// The man's position for the next tick.
    pending: DiskPoint,
    samples: Vec<Sample<DiskPoint>>,
    closed: bool,
}

impl Session {
    /// Starts with the lion at the centre and the man at `1` in the disk,
    /// or the lion at `1` and the man at `-1` on the circle.
    pub fn new(kind: SessionKind, opts: SessionOptions) -> Result<Session, SessionError> {
        if !(opts.dt.is_finite() && opts.dt > 0.0) {
            return Err(SessionError::BadTick);
        }
        if let Some(cap) = opts.speed_cap {
            if !(cap.is_finite() && cap > 0.0) {
                return Err(SessionError::BadSpeedCap);
            }
        }
        if !(opts.tolerance.is_finite() && opts.tolerance >= 0.0) {
            return Err(SessionError::BadTolerance);
        }
        let (lion, man) = match kind {
            SessionKind::Disk => (DiskPoint::ORIGIN, DiskPoint::ONE),
            SessionKind::Circle => (DiskPoint::ONE, DiskPoint::ONE.neg()),
        };
        let mut session = Session {
            kind,
            opts,
            besi: BesiState::default(),
            pending: man,
            samples: Vec::new(),
            closed: false,
        };
        session.record(0.0, lion, man);
        Ok(session)
    }

    pub fn kind(&self) -> SessionKind {
        self.kind
    }

    pub fn options(&self) -> SessionOptions {
        self.opts
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn samples(&self) -> &[Sample<DiskPoint>] {
        &self.samples
    }

    /// Time the next client frame must carry.
    pub fn expected_t(&self) -> f64 {
        self.samples.len() as f64 * self.opts.dt
    }

    /// The man's position at the next tick, already fixed by the samples so far.
    pub fn pending_man(&self) -> DiskPoint {
        self.pending
    }

    fn record(&mut self, t: f64, lion: DiskPoint, man: DiskPoint) -> Frame {
        let dist = lion.dist(man);
        let captured = dist <= self.opts.tolerance;
        self.samples.push(Sample { step: self.samples.len(), t, lion, man, dist: Some(dist), captured });
        self.closed |= captured;
        self.pending = match self.kind {
            SessionKind::Disk => besicovitch_step(&mut self.besi, lion),
            SessionKind::Circle => lion.neg(),
        };
        Frame { t, man: [man.x, man.y], dist, captured }
    }

    /// Accepts the lion's position at the next tick.
    ///
    /// `t` must be within a millionth of a tick of [`Session::expected_t`];
    /// the recorded time is the server's. The position is clamped to the
    /// arena and, when a speed cap is set, to `cap * dt` from the previous
    /// sample.
    pub fn step(&mut self, t: f64, lion: [f64; 2]) -> Result<Frame, StepError> {
        if self.closed {
            return Err(StepError::Closed);
        }
        let expected = self.expected_t();
        if !(t.is_finite() && (t - expected).abs() <= self.opts.dt * 1e-6) {
            return Err(StepError::OutOfOrder { expected, got: t });
        }
        let mut z = DiskPoint::new(lion[0], lion[1]);
        if !z.is_finite() {
            return Err(StepError::BadPosition);
        }
        let prev = self.samples.last().expect("sessions start with a sample").lion;
        if let Some(cap) = self.opts.speed_cap {
            let reach = cap * self.opts.dt;
            let d = prev.dist(z);
            if d > reach {
                z = prev.lerp(z, reach / d);
            }
        }
        z = self.clamp(z).ok_or(StepError::BadPosition)?;
        let man = self.pending;
        Ok(self.record(expected, z, man))
    }

    fn clamp(&self, z: DiskPoint) -> Option<DiskPoint> {
        let r = z.norm();
        match self.kind {
            SessionKind::Disk if r > 1.0 => Some(DiskPoint::new(z.x / r, z.y / r)),
            SessionKind::Disk => Some(z),
            SessionKind::Circle if r == 0.0 => None,
            SessionKind::Circle => Some(DiskPoint::new(z.x / r, z.y / r)),
        }
    }

    pub fn trace_jsonl(&self) -> String {
        let mut out = String::new();
        for s in &self.samples {
            out.push_str(&trace_line(s, &PointNames(None)));
            out.push('\n');
        }
        out
    }
}

/// A fresh session driven as a man strategy, for replaying transcripts.
///
/// At each tick it feeds the session every lion sample visible so far and
/// answers with the session's pending position, so a strict-mode replay
/// reproduces the live answers.
#[derive(Debug, Clone)]
pub struct SessionMan {
    session: Session,
}

impl SessionMan {
    pub fn new(kind: SessionKind, opts: SessionOptions) -> Result<SessionMan, SessionError> {
        Ok(SessionMan { session: Session::new(kind, opts)? })
    }
}

impl Strategy<DiskPoint> for SessionMan {
    fn respond(&mut self, _t: f64, lion: &History<'_, DiskPoint>) -> Result<DiskPoint, StrategyError> {
        let fed = self.session.samples.len();
        if lion.is_empty() {
            return Ok(self.session.samples[0].man);
        }
        if lion.len() < fed {
            return Err(StrategyError::Contract("opponent history shrank"));
        }
        if lion.samples()[0] != self.session.samples[0].lion {
            return Err(StrategyError::Contract("transcript starts elsewhere"));
        }
        for (t, z) in lion.times()[fed..].iter().zip(&lion.samples()[fed..]) {
            // forked transcripts may run on past a capture
            self.session.closed = false;
            self.session
                .step(*t, [z.x, z.y])
                .map_err(|_| StrategyError::Contract("transcript rejected by the session"))?;
        }
        Ok(self.session.pending)
    }
}
