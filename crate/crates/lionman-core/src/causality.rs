//! Black-box test of the no-lookahead rule.
//!
//! A strategy is replayed against a base opponent path and against forks of
//! it that agree with the base strictly before a fork time. A causal strategy
//! must produce the same outputs up to the fork.

use crate::engine::replay;
use crate::strategy::{EvalMode, Strategy, StrategyError};
use crate::time::TimeGrid;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CausalityError {
    #[error("fork time {0} is not a grid instant")]
    ForkOffGrid(f64),
    #[error("base path has {0} samples, grid has {1}")]
    BaseTooShort(usize, usize),
    #[error("fork at t = {fork_time} differs from the base path at step {step}, before the fork")]
    ForkDisagrees { fork_time: f64, step: usize },
    #[error("forked path at t = {0} is too short")]
    ForkTooShort(f64),
    #[error("strategy failed during replay: {0}")]
    Strategy(#[from] StrategyError),
}

/// Where a strategy first reacted to the future.
#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    pub fork_time: f64,
    pub fork_index: usize,
    /// First step at which the outputs differ.
    pub step: usize,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CausalityReport {
    pub forks_checked: usize,
    pub first_divergence: Option<Divergence>,
}

impl CausalityReport {
    pub fn passed(&self) -> bool {
        self.first_divergence.is_none()
    }
}

/// Checks that `strategy` never reacts to opponent samples it should not see.
///
/// For each fork time `t_f` (a grid instant), `fork` receives the base path
/// and the index of `t_f` and returns a path agreeing with the base before
/// that index. Outputs must agree with the base replay at every step before
/// `t_f`, and at `t_f` itself in strict mode or, in closed mode, when the
/// forked sample at `t_f` equals the base sample.
///
/// Each replay starts from a fresh clone of `strategy`.
pub fn check_no_lookahead<P, S, F>(
    strategy: &S,
    grid: &TimeGrid,
    base: &[P],
    fork_times: &[f64],
    mut fork: F,
    mode: EvalMode,
) -> Result<CausalityReport, CausalityError>
where
    P: Clone + PartialEq,
    S: Strategy<P> + Clone,
    F: FnMut(&[P], usize) -> Vec<P>,
{
    let n = grid.len();
    if base.len() < n {
        return Err(CausalityError::BaseTooShort(base.len(), n));
    }
    let base = &base[..n];
    let base_out = replay(&mut strategy.clone(), grid, base, mode)?;

    let mut report = CausalityReport { forks_checked: 0, first_divergence: None };
    for &fork_time in fork_times {
        let k = grid.index_of(fork_time).ok_or(CausalityError::ForkOffGrid(fork_time))?;
        let forked = fork(base, k);
        if forked.len() < n {
            return Err(CausalityError::ForkTooShort(fork_time));
        }
        if let Some(step) = (0..k).find(|&i| forked[i] != base[i]) {
            return Err(CausalityError::ForkDisagrees { fork_time, step });
        }
        let fork_out = replay(&mut strategy.clone(), grid, &forked[..n], mode)?;
        report.forks_checked += 1;

        let compare_at_fork = match mode {
            EvalMode::Strict => true,
            EvalMode::Closed => forked[k] == base[k],
        };
        let upto = if compare_at_fork { k + 1 } else { k };
        if let Some(step) = (0..upto).find(|&i| fork_out[i] != base_out[i]) {
            report.first_divergence = Some(Divergence {
                fork_time,
                fork_index: k,
                step,
                t: grid.times()[step],
            });
            break;
        }
    }
    Ok(report)
}

/// Answers with the opponent's next sample. It reads past its history
/// window and exists only to show that [`check_no_lookahead`] catches this.
#[derive(Debug, Clone)]
pub struct Clairvoyant<P> {
    pub start: P,
}

impl<P: Clone> Strategy<P> for Clairvoyant<P> {
    fn respond(&mut self, _t: f64, opponent: &crate::path::History<'_, P>) -> Result<P, StrategyError> {
        Ok(opponent
            .lookahead(1)
            .or_else(|| opponent.last().map(|(_, p)| p))
            .cloned()
            .unwrap_or_else(|| self.start.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::History;

    #[derive(Clone)]
    struct Echo;
    impl Strategy<i32> for Echo {
        fn respond(&mut self, _t: f64, h: &History<'_, i32>) -> Result<i32, StrategyError> {
            Ok(h.last().map_or(0, |(_, p)| *p))
        }
    }

    #[derive(Clone)]
    struct Peek;
    impl Strategy<i32> for Peek {
        fn respond(&mut self, _t: f64, h: &History<'_, i32>) -> Result<i32, StrategyError> {
            Ok(h.lookahead(1).copied().unwrap_or(0))
        }
    }

    fn bump(base: &[i32], k: usize) -> Vec<i32> {
        base.iter().enumerate().map(|(i, &p)| if i >= k { p + 100 } else { p }).collect()
    }

    #[test]
    fn echo_passes_both_modes() {
        let grid = TimeGrid::new(1.0, 5.0).unwrap();
        let base = [1, 2, 3, 4, 5, 6];
        for mode in [EvalMode::Strict, EvalMode::Closed] {
            let r = check_no_lookahead(&Echo, &grid, &base, &[1.0, 3.0, 5.0], bump, mode).unwrap();
            assert!(r.passed());
            assert_eq!(r.forks_checked, 3);
        }
    }

    #[test]
    fn peeking_fails_at_first_fork() {
        let grid = TimeGrid::new(1.0, 5.0).unwrap();
        let base = [1, 2, 3, 4, 5, 6];
        let r = check_no_lookahead(&Peek, &grid, &base, &[2.0, 4.0], bump, EvalMode::Strict)
            .unwrap();
        let d = r.first_divergence.unwrap();
        assert_eq!(d.fork_time, 2.0);
        // in strict mode one sample ahead is the current one
        assert_eq!(d.step, 2);
        let r = check_no_lookahead(&Peek, &grid, &base, &[2.0], bump, EvalMode::Closed).unwrap();
        assert_eq!(r.first_divergence.unwrap().step, 1);
    }

    #[test]
    fn no_forks_passes_vacuously() {
        let grid = TimeGrid::new(1.0, 5.0).unwrap();
        let r = check_no_lookahead(&Peek, &grid, &[0; 6], &[], bump, EvalMode::Strict).unwrap();
        assert!(r.passed());
        assert_eq!(r.forks_checked, 0);
    }

    #[test]
    fn malformed_forks_are_errors() {
        let grid = TimeGrid::new(1.0, 5.0).unwrap();
        let base = [1, 2, 3, 4, 5, 6];
        let err = check_no_lookahead(&Echo, &grid, &base, &[2.5], bump, EvalMode::Strict);
        assert_eq!(err.unwrap_err(), CausalityError::ForkOffGrid(2.5));
        let early = |b: &[i32], _k: usize| bump(b, 0);
        let err = check_no_lookahead(&Echo, &grid, &base, &[3.0], early, EvalMode::Strict);
        assert_eq!(err.unwrap_err(), CausalityError::ForkDisagrees { fork_time: 3.0, step: 0 });
    }
}
