//! Match execution and capture detection.

use crate::path::History;
use crate::strategy::{EvalMode, Role, Strategy, StrategyError};
use crate::time::TimeGrid;
use alloc::vec::Vec;
use thiserror::Error;

/// The arena a match is played in.
pub trait Space<P> {
    fn contains(&self, p: &P) -> bool;

    /// Metric distance, for spaces that have one.
    fn distance(&self, _a: &P, _b: &P) -> Option<f64> {
        None
    }
}

/// When the lion has caught the man.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CapturePredicate {
    /// Identical points. The default for finite spaces.
    Exact,
    /// Distance at most `eps`. The default for the disk is `1e-9`.
    Tolerance(f64),
}

impl CapturePredicate {
    pub const DISK_DEFAULT: CapturePredicate = CapturePredicate::Tolerance(1e-9);

    fn holds<P: PartialEq>(&self, lion: &P, man: &P, dist: Option<f64>) -> Option<bool> {
        match *self {
            CapturePredicate::Exact => Some(lion == man),
            CapturePredicate::Tolerance(eps) => dist.map(|d| d <= eps),
        }
    }
}

/// One side of a match: a path recorded on the grid or a live strategy.
pub enum Player<'a, P, S> {
    Recorded(&'a [P]),
    Strategy(S),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample<P> {
    pub step: usize,
    pub t: f64,
    pub lion: P,
    pub man: P,
    pub dist: Option<f64>,
    pub captured: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trace<P> {
    pub samples: Vec<Sample<P>>,
    pub captured_at: Option<f64>,
    /// Smallest lion-man distance over the samples, in metric spaces.
    pub min_distance: Option<f64>,
}

impl<P> Trace<P> {
    pub fn lion_path(&self) -> impl Iterator<Item = &P> {
        self.samples.iter().map(|s| &s.lion)
    }

    pub fn man_path(&self) -> impl Iterator<Item = &P> {
        self.samples.iter().map(|s| &s.man)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatchError {
    #[error("at most one player may be a recorded path")]
    BothRecorded,
    #[error("closed evaluation needs a recorded opponent; two strategies must play in strict mode")]
    ClosedModeBetweenStrategies,
    #[error("recorded {0:?} path has {1} samples, grid has {2}")]
    RecordedTooShort(Role, usize, usize),
    #[error("{role:?} position at step {step} lies outside the space")]
    OutsideSpace { role: Role, step: usize },
    #[error("capture tolerance needs a metric space")]
    NoMetric,
    #[error("{0:?} strategy failed at step {1}: {2}")]
    Strategy(Role, usize, StrategyError),
}

fn visible(step: usize, mode: EvalMode) -> usize {
    match mode {
        EvalMode::Strict => step,
        EvalMode::Closed => step + 1,
    }
}

/// Plays a match on `grid` until capture or the horizon.
///
/// Two strategies move simultaneously: each computes step `j` from the
/// other's samples at steps `< j`. Against a recorded path, `mode` decides
/// whether the recorded sample at step `j` is also visible.
pub fn run_match<P, SL, SM, X>(
    space: &X,
    grid: &TimeGrid,
    mut lion: Player<'_, P, SL>,
    mut man: Player<'_, P, SM>,
    capture: CapturePredicate,
    mode: EvalMode,
) -> Result<Trace<P>, MatchError>
where
    P: Clone + PartialEq,
    SL: Strategy<P>,
    SM: Strategy<P>,
    X: Space<P> + ?Sized,
{
    let n = grid.len();
    match (&lion, &man) {
        (Player::Recorded(_), Player::Recorded(_)) => return Err(MatchError::BothRecorded),
        (Player::Strategy(_), Player::Strategy(_)) if mode == EvalMode::Closed => {
            return Err(MatchError::ClosedModeBetweenStrategies)
        }
        _ => {}
    }
    if let Player::Recorded(p) = &lion {
        if p.len() < n {
            return Err(MatchError::RecordedTooShort(Role::Lion, p.len(), n));
        }
    }
    if let Player::Recorded(p) = &man {
        if p.len() < n {
            return Err(MatchError::RecordedTooShort(Role::Man, p.len(), n));
        }
    }

    let times = grid.times();
    let mut lion_out: Vec<P> = Vec::with_capacity(n);
    let mut man_out: Vec<P> = Vec::with_capacity(n);
    let mut samples = Vec::with_capacity(n);
    let mut captured_at = None;
    let mut min_distance: Option<f64> = None;

    for (step, &t) in times.iter().enumerate() {
        let l = match &mut lion {
            Player::Recorded(path) => path[step].clone(),
            Player::Strategy(s) => {
                let history = match &man {
                    Player::Recorded(path) => History::new(times, path, visible(step, mode)),
                    Player::Strategy(_) => History::new(times, &man_out, step),
                };
                s.respond(t, &history)
                    .map_err(|e| MatchError::Strategy(Role::Lion, step, e))?
            }
        };
        let m = match &mut man {
            Player::Recorded(path) => path[step].clone(),
            Player::Strategy(s) => {
                let history = match &lion {
                    Player::Recorded(path) => History::new(times, path, visible(step, mode)),
                    Player::Strategy(_) => History::new(times, &lion_out, step),
                };
                s.respond(t, &history)
                    .map_err(|e| MatchError::Strategy(Role::Man, step, e))?
            }
        };
        if !space.contains(&l) {
            return Err(MatchError::OutsideSpace { role: Role::Lion, step });
        }
        if !space.contains(&m) {
            return Err(MatchError::OutsideSpace { role: Role::Man, step });
        }

        let dist = space.distance(&l, &m);
        if let Some(d) = dist {
            min_distance = Some(min_distance.map_or(d, |best| best.min(d)));
        }
        let captured = capture.holds(&l, &m, dist).ok_or(MatchError::NoMetric)?;
        lion_out.push(l.clone());
        man_out.push(m.clone());
        samples.push(Sample { step, t, lion: l, man: m, dist, captured });
        if captured {
            captured_at = Some(t);
            break;
        }
    }
    Ok(Trace { samples, captured_at, min_distance })
}

/// Runs a strategy against a recorded opponent over the whole grid, with no
/// capture cut-off, and returns its outputs.
pub fn replay<P, S: Strategy<P> + ?Sized>(
    strategy: &mut S,
    grid: &TimeGrid,
    opponent: &[P],
    mode: EvalMode,
) -> Result<Vec<P>, StrategyError> {
    let times = grid.times();
    let n = times.len().min(opponent.len());
    let mut out = Vec::with_capacity(n);
    for (step, &t) in times[..n].iter().enumerate() {
        let history = History::new(times, opponent, visible(step, mode));
        out.push(strategy.respond(t, &history)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Line;
    impl Space<f64> for Line {
        fn contains(&self, p: &f64) -> bool {
            p.is_finite()
        }
        fn distance(&self, a: &f64, b: &f64) -> Option<f64> {
            Some((a - b).abs())
        }
    }

    /// Moves to the opponent's latest visible sample.
    #[derive(Clone)]
    struct Copycat(f64);
    impl Strategy<f64> for Copycat {
        fn respond(&mut self, _t: f64, h: &History<'_, f64>) -> Result<f64, StrategyError> {
            Ok(h.last().map_or(self.0, |(_, p)| *p))
        }
    }

    #[test]
    fn closed_mode_sees_current_sample() {
        let grid = TimeGrid::new(1.0, 3.0).unwrap();
        let man = [5.0, 6.0, 7.0, 8.0];
        let trace = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::<f64, Copycat>::Recorded(&man),
            CapturePredicate::Exact,
            EvalMode::Closed,
        )
        .unwrap();
        assert_eq!(trace.captured_at, Some(0.0));
        assert_eq!(trace.samples.len(), 1);
    }

    #[test]
    fn strict_mode_lags_one_step() {
        let grid = TimeGrid::new(1.0, 3.0).unwrap();
        let man = [5.0, 6.0, 7.0, 8.0];
        let trace = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::<f64, Copycat>::Recorded(&man),
            CapturePredicate::Exact,
            EvalMode::Strict,
        )
        .unwrap();
        let lion: Vec<f64> = trace.lion_path().copied().collect();
        assert_eq!(lion, [0.0, 5.0, 6.0, 7.0]);
        assert_eq!(trace.captured_at, None);
        assert_eq!(trace.min_distance, Some(1.0));
    }

    #[test]
    fn simultaneous_strategies() {
        let grid = TimeGrid::new(1.0, 2.0).unwrap();
        let trace = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::Strategy(Copycat(1.0)),
            CapturePredicate::Exact,
            EvalMode::Strict,
        )
        .unwrap();
        // Each copies the other's previous position: they swap forever.
        let pairs: Vec<(f64, f64)> = trace.samples.iter().map(|s| (s.lion, s.man)).collect();
        assert_eq!(pairs, [(0.0, 1.0), (1.0, 0.0), (0.0, 1.0)]);
    }

    #[test]
    fn contract_violations() {
        let grid = TimeGrid::new(1.0, 2.0).unwrap();
        let a = [0.0, 1.0, 2.0];
        let both = run_match::<_, Copycat, Copycat, _>(
            &Line,
            &grid,
            Player::Recorded(&a),
            Player::Recorded(&a),
            CapturePredicate::Exact,
            EvalMode::Strict,
        );
        assert_eq!(both.unwrap_err(), MatchError::BothRecorded);

        let closed = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::Strategy(Copycat(1.0)),
            CapturePredicate::Exact,
            EvalMode::Closed,
        );
        assert_eq!(closed.unwrap_err(), MatchError::ClosedModeBetweenStrategies);

        let short = [0.0];
        let err = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::<f64, Copycat>::Recorded(&short),
            CapturePredicate::Exact,
            EvalMode::Strict,
        );
        assert_eq!(err.unwrap_err(), MatchError::RecordedTooShort(Role::Man, 1, 3));

        let outside = [1.0, f64::NAN, 1.0];
        let err = run_match(
            &Line,
            &grid,
            Player::Strategy(Copycat(0.0)),
            Player::<f64, Copycat>::Recorded(&outside),
            CapturePredicate::Exact,
            EvalMode::Strict,
        );
        assert_eq!(err.unwrap_err(), MatchError::OutsideSpace { role: Role::Man, step: 1 });
    }

    #[test]
    fn replay_has_no_cutoff() {
        let grid = TimeGrid::new(1.0, 3.0).unwrap();
        let out = replay(&mut Copycat(5.0), &grid, &[5.0, 5.0, 5.0, 5.0], EvalMode::Closed).unwrap();
        assert_eq!(out.len(), 4);
    }
}
