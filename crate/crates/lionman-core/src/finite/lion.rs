//! Pursuer for path-connected finite spaces.
//!
//! Phase 1 follows a fixed path `beta` with `beta(t_n) = y_n` at the event
//! times `t_n = 1 - 2^-n`, where `y_n` cycles through every point in
//! lexicographic order. At the first event with `alpha(t_n) <= y_n` the lion
//! switches to phase 2 and mirrors the man: from then on it sits at the
//! man's most recent sample strictly before the current time.
//!
//! Phase 2 is a sample-resolution surrogate for copying a chosen
//! representative of the man's germ: it catches every man path whose
//! constant pieces span at least two grid samples, which is the class of
//! paths a grid can represent. It is not a continuous-time strategy.

use super::{fence_path, FiniteError, FiniteSpace, PointId, StepPath};
use crate::path::{History, Path};
use crate::strategy::{Strategy, StrategyError};
use alloc::vec::Vec;

/// Number of scheduled events `t_1 .. t_N`. `t_40` is within `1e-12` of 1.
pub const DEFAULT_EVENTS: usize = 40;

#[derive(Debug, Clone)]
pub struct AspaceLion<'a> {
    space: &'a FiniteSpace,
    schedule: Vec<(f64, PointId)>,
    beta: StepPath,
    next_event: usize,
    consumed: usize,
    triggered_at: Option<f64>,
}

impl<'a> AspaceLion<'a> {
    pub fn new(space: &'a FiniteSpace, lion_start: PointId) -> Result<Self, FiniteError> {
        Self::with_events(space, lion_start, DEFAULT_EVENTS)
    }

    pub fn with_events(space: &'a FiniteSpace, lion_start: PointId, events: usize) -> Result<Self, FiniteError> {
        if !space.is_path_connected() {
            return Err(FiniteError::NotPathConnected);
        }
        let n = space.len();
        let schedule: Vec<(f64, PointId)> = (1..=events)
            .map(|k| (1.0 - libm::exp2(-(k as f64)), PointId((k - 1) % n)))
            .collect();

        let mut beta = StepPath::constant(lion_start);
        let (mut t_prev, mut y_prev) = (0.0, lion_start);
        for &(t, y) in &schedule {
            let leg = fence_path(space, y_prev, y, t - t_prev)?;
            for i in 1..leg.breakpoints().len() {
                beta.push_jump(t_prev + leg.breakpoints()[i], leg.instants()[i], leg.intervals()[i])
                    .expect("legs are scheduled in increasing time");
            }
            t_prev = t;
            y_prev = y;
        }
        Ok(AspaceLion {
            space,
            schedule,
            beta: beta.canonical(),
            next_event: 0,
            consumed: 0,
            triggered_at: None,
        })
    }

    /// Event times to merge into the match grid.
    pub fn event_times(&self) -> Vec<f64> {
        self.schedule.iter().map(|&(t, _)| t).collect()
    }

    pub fn schedule(&self) -> &[(f64, PointId)] {
        &self.schedule
    }

    /// The phase-1 path.
    pub fn beta(&self) -> &StepPath {
        &self.beta
    }

    /// Event time at which phase 2 began, once it has.
    pub fn triggered_at(&self) -> Option<f64> {
        self.triggered_at
    }
}

impl Strategy<PointId> for AspaceLion<'_> {
    fn respond(&mut self, t: f64, man: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        let past = man.before(t);
        if past.len() < self.consumed {
            return Err(StrategyError::Contract("opponent history shrank"));
        }
        for i in self.consumed..past.len() {
            if self.triggered_at.is_some() {
                break;
            }
            let (s, &alpha) = past.get(i).expect("index inside the window");
            while self.next_event < self.schedule.len() && self.schedule[self.next_event].0 < s {
                self.next_event += 1;
            }
            if let Some(&(te, y)) = self.schedule.get(self.next_event) {
                if te == s {
                    self.next_event += 1;
                    if self.space.leq(alpha, y) {
                        self.triggered_at = Some(s);
                    }
                }
            }
        }
        self.consumed = past.len();
        match (self.triggered_at, past.last()) {
            (Some(_), Some((_, &p))) => Ok(p),
            _ => Ok(self.beta.at(t)),
        }
    }
}
