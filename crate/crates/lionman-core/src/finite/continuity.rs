//! Continuity of step paths, two ways.
//!
//! [`is_continuous`] compares neighbouring values in the specialization
//! order. [`is_continuous_oracle`] goes back to the definition: it lists
//! every open set and checks that its preimage is open in `[0, +inf)`.

use super::{FiniteSpace, StepPath};
use alloc::vec::Vec;
use thiserror::Error;

/// Largest space the oracle will enumerate.
pub const ORACLE_MAX_POINTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("space has {0} points; open-set enumeration is limited to {ORACLE_MAX_POINTS}")]
pub struct TooLarge(pub usize);

/// Continuous iff at every breakpoint the neighbouring interval values lie
/// below the instant value.
pub fn is_continuous(space: &FiniteSpace, path: &StepPath) -> bool {
    let (v, w) = (path.intervals(), path.instants());
    (0..w.len()).all(|i| space.leq(v[i], w[i]) && (i == 0 || space.leq(v[i - 1], w[i])))
}

/// All open sets of a space as bitmasks, enumerated once.
#[derive(Debug, Clone)]
pub struct ContinuityOracle {
    opens: Vec<u32>,
}

impl ContinuityOracle {
    pub fn new(space: &FiniteSpace) -> Result<Self, TooLarge> {
        let n = space.len();
        if n > ORACLE_MAX_POINTS {
            return Err(TooLarge(n));
        }
        let below: Vec<u32> = space
            .points()
            .map(|x| space.points().filter(|&y| space.leq(y, x)).fold(0, |m, y| m | 1 << y.0))
            .collect();
        let opens = (0u32..1 << n)
            .filter(|&s| (0..n).all(|x| s >> x & 1 == 0 || below[x] & !s == 0))
            .collect();
        Ok(ContinuityOracle { opens })
    }

    pub fn open_sets(&self) -> &[u32] {
        &self.opens
    }

    /// The preimage of an open `U` is a union of breakpoints and open
    /// intervals. It is open iff each breakpoint it contains comes with the
    /// intervals on both sides (only the right one at `t = 0`).
    pub fn check(&self, path: &StepPath) -> bool {
        let (v, w) = (path.intervals(), path.instants());
        self.opens.iter().all(|&u| {
            let inside = |p: super::PointId| u >> p.0 & 1 == 1;
            (0..w.len()).all(|i| !inside(w[i]) || (inside(v[i]) && (i == 0 || inside(v[i - 1]))))
        })
    }
}

pub fn is_continuous_oracle(space: &FiniteSpace, path: &StepPath) -> Result<bool, TooLarge> {
    Ok(ContinuityOracle::new(space)?.check(path))
}

#[cfg(test)]
mod tests {
    use super::super::tests::{chain3, names, sierpinski};
    use super::super::PointId;
    use super::*;
    use alloc::vec;

    fn jump(x: PointId, y: PointId) -> StepPath {
        StepPath::new(vec![0.0, 1.0], vec![x, y], vec![x, y]).unwrap()
    }

    #[test]
    fn specialization_jump_is_continuous() {
        let s = sierpinski();
        let p = jump(PointId(0), PointId(1));
        assert!(is_continuous(&s, &p));
        assert!(is_continuous_oracle(&s, &p).unwrap());
        // the other direction needs the instant value at the top
        let q = jump(PointId(1), PointId(0));
        assert!(!is_continuous(&s, &q));
        assert!(!is_continuous_oracle(&s, &q).unwrap());
    }

    #[test]
    fn incomparable_jump_is_not() {
        let s = FiniteSpace::discrete(&names(&["x", "y"])).unwrap();
        let p = jump(PointId(0), PointId(1));
        assert!(!is_continuous(&s, &p));
        assert!(!is_continuous_oracle(&s, &p).unwrap());
    }

    #[test]
    fn constant_and_isolated_instants() {
        let s = chain3();
        let c = StepPath::constant(PointId(1));
        assert!(is_continuous(&s, &c));
        assert!(is_continuous_oracle(&s, &c).unwrap());
        // a < c: a blip up to c at t = 1 is continuous, a blip down is not
        let up = StepPath::new(vec![0.0, 1.0], vec![PointId(0); 2], vec![PointId(0), PointId(2)]).unwrap();
        assert!(is_continuous(&s, &up));
        assert!(is_continuous_oracle(&s, &up).unwrap());
        let down = StepPath::new(vec![0.0, 1.0], vec![PointId(2); 2], vec![PointId(2), PointId(0)]).unwrap();
        assert!(!is_continuous(&s, &down));
        assert!(!is_continuous_oracle(&s, &down).unwrap());
    }

    #[test]
    fn one_point_space() {
        let s = FiniteSpace::discrete(&names(&["only"])).unwrap();
        let p = StepPath::new(vec![0.0, 0.5, 2.0], vec![PointId(0); 3], vec![PointId(0); 3]).unwrap();
        assert!(is_continuous_oracle(&s, &p).unwrap());
    }

    #[test]
    fn refuses_large_spaces() {
        let pts: Vec<_> = (0..21).map(|i| alloc::format!("q{i:02}")).collect();
        let s = FiniteSpace::discrete(&pts).unwrap();
        assert_eq!(ContinuityOracle::new(&s).unwrap_err(), TooLarge(21));
    }

    #[test]
    fn open_counts() {
        assert_eq!(ContinuityOracle::new(&chain3()).unwrap().open_sets().len(), 4);
        assert_eq!(ContinuityOracle::new(&sierpinski()).unwrap().open_sets().len(), 3);
    }
}
