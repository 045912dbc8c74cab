//! Refuting man strategies in spaces with a minimum.
//!
//! Let `x_0` be a point below every other point. The lion walks to `x_0` by
//! `t = 1/2` and waits. Whatever position `y` the man takes at `t = 1`, the
//! path that equals this one on `[0, 1)` and is `y` from `t = 1` on is still
//! continuous (`x_0 <= y`), and agrees with the first one before `1`. A causal
//! man must answer it with the same `y`, and is caught at `t = 1`.

use super::{fence_path, is_continuous, FiniteError, FiniteSpace, PointId, StepPath};
use crate::engine::replay;
use crate::strategy::{EvalMode, Strategy, StrategyError};
use crate::time::{GridError, TimeGrid};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FalsifyError {
    #[error("space has no minimum point")]
    NoMinimum,
    #[error("lion start is not a point of the space")]
    BadStart,
    #[error(transparent)]
    Space(#[from] FiniteError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("man strategy failed: {0}")]
    Strategy(#[from] StrategyError),
    #[error("man strategy looked ahead: answered {replayed:?} at t = 1 on the defeating path, {original:?} on the probe path")]
    CausalityViolation { original: PointId, replayed: PointId },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Falsification {
    /// Equal to the probe path on `[0, 1)`, constant at the man's answer from
    /// `t = 1` on.
    pub defeating_path: StepPath,
    /// Always `1.0`.
    pub capture_time: f64,
    /// The man's position at `t = 1`, in both replays.
    pub man_at_one: PointId,
    /// First sample at which the man already met the defeating path, which
    /// may be before `1`.
    pub first_coincidence: f64,
}

/// Builds a lion path that the man strategy cannot escape and verifies it
/// by replay. `dt` is the sampling step used for both replays.
pub fn falsify_man_strategy<S>(
    space: &FiniteSpace,
    lion_start: PointId,
    man: &S,
    dt: f64,
) -> Result<Falsification, FalsifyError>
where
    S: Strategy<PointId> + Clone,
{
    let x0 = space.minimum().ok_or(FalsifyError::NoMinimum)?;
    if lion_start.0 >= space.len() {
        return Err(FalsifyError::BadStart);
    }
    let probe = fence_path(space, lion_start, x0, 0.5)?;
    let grid = TimeGrid::with_events(dt, 1.0 + 4.0 * dt, &[0.5, 1.0])?;
    let one = grid.index_of(1.0).expect("1.0 is an event time");

    let probe_samples = grid.sample(&probe);
    let answers = replay(&mut man.clone(), &grid, &probe_samples, EvalMode::Closed)?;
    let y = answers[one];

    let defeating = probe.truncated_with(1.0, y, y).expect("probe path starts at 0");
    debug_assert!(is_continuous(space, &defeating));

    let samples = grid.sample(&defeating);
    let replayed = replay(&mut man.clone(), &grid, &samples, EvalMode::Closed)?;
    if replayed[one] != y {
        return Err(FalsifyError::CausalityViolation { original: y, replayed: replayed[one] });
    }
    let first = (0..=one)
        .find(|&i| replayed[i] == samples[i])
        .expect("the man meets the defeating path at t = 1");
    Ok(Falsification {
        defeating_path: defeating,
        capture_time: grid.times()[one],
        man_at_one: y,
        first_coincidence: grid.times()[first],
    })
}
