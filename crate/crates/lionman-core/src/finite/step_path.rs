use super::{FiniteSpace, PointId};
use crate::path::Path;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepPathError {
    #[error("a step path needs at least one piece")]
    Empty,
    #[error("first breakpoint must be 0")]
    NotFromZero,
    #[error("breakpoints must be finite and strictly increasing")]
    NotIncreasing,
    #[error("breakpoints, intervals and instants must have the same length")]
    LengthMismatch,
    #[error("value {0:?} is not a point of the space")]
    UnknownPoint(PointId),
}

/// A piecewise-constant path `[0, +inf) -> X`.
///
/// Breakpoints `0 = t_0 < t_1 < ... < t_k`; the path takes the value
/// `instants[i]` at `t_i` and `intervals[i]` on the open interval
/// `(t_i, t_{i+1})`, the last one unbounded.
#[derive(Debug, Clone, PartialEq)]
pub struct StepPath {
    breakpoints: Vec<f64>,
    intervals: Vec<PointId>,
    instants: Vec<PointId>,
}

impl StepPath {
    pub fn new(
        breakpoints: Vec<f64>,
        intervals: Vec<PointId>,
        instants: Vec<PointId>,
    ) -> Result<Self, StepPathError> {
        if breakpoints.is_empty() {
            return Err(StepPathError::Empty);
        }
        if breakpoints.len() != intervals.len() || breakpoints.len() != instants.len() {
            return Err(StepPathError::LengthMismatch);
        }
        if breakpoints[0] != 0.0 {
            return Err(StepPathError::NotFromZero);
        }
        if breakpoints.iter().any(|t| !t.is_finite()) || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StepPathError::NotIncreasing);
        }
        Ok(StepPath { breakpoints, intervals, instants })
    }

    pub fn constant(x: PointId) -> Self {
        StepPath { breakpoints: vec![0.0], intervals: vec![x], instants: vec![x] }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn intervals(&self) -> &[PointId] {
        &self.intervals
    }

    pub fn instants(&self) -> &[PointId] {
        &self.instants
    }

    pub fn jumps(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn start(&self) -> PointId {
        self.instants[0]
    }

    /// Value on the unbounded last piece.
    pub fn end(&self) -> PointId {
        self.intervals[self.intervals.len() - 1]
    }

    /// Checks that every value is a point of `space`.
    pub fn validate(&self, space: &FiniteSpace) -> Result<(), StepPathError> {
        match self.intervals.iter().chain(&self.instants).find(|p| p.0 >= space.len()) {
            Some(&p) => Err(StepPathError::UnknownPoint(p)),
            None => Ok(()),
        }
    }

    /// Merges breakpoints where nothing happens: `w_i == v_{i-1} == v_i`.
    pub fn canonical(&self) -> StepPath {
        let mut out = StepPath {
            breakpoints: vec![0.0],
            intervals: vec![self.intervals[0]],
            instants: vec![self.instants[0]],
        };
        for i in 1..self.breakpoints.len() {
            let prev = *out.intervals.last().unwrap();
            if self.instants[i] == prev && self.intervals[i] == prev {
                continue;
            }
            out.breakpoints.push(self.breakpoints[i]);
            out.intervals.push(self.intervals[i]);
            out.instants.push(self.instants[i]);
        }
        out
    }

    /// Appends a jump at `t`, which must lie after every breakpoint.
    pub fn push_jump(&mut self, t: f64, instant: PointId, after: PointId) -> Result<(), StepPathError> {
        if !(t.is_finite() && t > *self.breakpoints.last().unwrap()) {
            return Err(StepPathError::NotIncreasing);
        }
        self.breakpoints.push(t);
        self.instants.push(instant);
        self.intervals.push(after);
        Ok(())
    }

    /// This path up to (excluding) `t`, then `instant` at `t` and `after`
    /// from then on.
    pub fn truncated_with(&self, t: f64, instant: PointId, after: PointId) -> Result<StepPath, StepPathError> {
        let keep = self.breakpoints.partition_point(|&b| b < t);
        if keep == 0 {
            return Err(StepPathError::NotFromZero);
        }
        let mut out = StepPath {
            breakpoints: self.breakpoints[..keep].to_vec(),
            intervals: self.intervals[..keep].to_vec(),
            instants: self.instants[..keep].to_vec(),
        };
        out.push_jump(t, instant, after)?;
        Ok(out)
    }
}

impl Path<PointId> for StepPath {
    fn at(&self, t: f64) -> PointId {
        let i = self.breakpoints.partition_point(|&b| b <= t);
        if i == 0 {
            return self.instants[0];
        }
        if self.breakpoints[i - 1] == t {
            self.instants[i - 1]
        } else {
            self.intervals[i - 1]
        }
    }
}
