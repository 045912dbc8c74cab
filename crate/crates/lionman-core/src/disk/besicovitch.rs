//! The boundary-dwelling evader for the disk.
//!
//! The man stays at `1` while the lion is within radius 1/2. Beyond that he
//! walks the unit circle to angle `theta = (2 rho - 1)(omega + 1/2)` turns,
//! where `rho` is the lion's radius and `omega` its lifted angle. At
//! `rho = 1` this is `omega + 1/2`: the man is antipodal to the lion. For
//! `rho < 1` the radii differ. Either way the two never meet.

use super::lift::LiftState;
use super::DiskPoint;
use crate::path::History;
use crate::strategy::{Strategy, StrategyError};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BesiState {
    pub lift: LiftState,
    pub rho: f64,
    pub theta: f64,
}

/// Consumes the next lion sample and returns the man's position for it.
pub fn besicovitch_step(state: &mut BesiState, lion: DiskPoint) -> DiskPoint {
    state.lift.step(lion);
    let rho = lion.norm();
    state.rho = rho;
    state.theta = if rho <= 0.5 {
        0.0
    } else {
        (2.0 * rho - 1.0) * (state.lift.omega() + 0.5)
    };
    DiskPoint::from_turns(state.theta)
}

/// The evader as a strategy.
///
/// In closed mode the response at `t` uses the lion's sample at `t`. In
/// strict mode it uses the latest sample before `t`, so the man lags one
/// step; the resulting error vanishes linearly in `dt` for a continuous lion.
#[derive(Debug, Clone, Default)]
pub struct BesicovitchMan {
    state: BesiState,
    consumed: usize,
    last: Option<DiskPoint>,
}

impl BesicovitchMan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> &BesiState {
        &self.state
    }
}

impl Strategy<DiskPoint> for BesicovitchMan {
    fn respond(&mut self, _t: f64, lion: &History<'_, DiskPoint>) -> Result<DiskPoint, StrategyError> {
        let samples = lion.samples();
        if samples.len() < self.consumed {
            return Err(StrategyError::Contract("opponent history shrank"));
        }
        for &z in &samples[self.consumed..] {
            self.last = Some(besicovitch_step(&mut self.state, z));
        }
        self.consumed = samples.len();
        Ok(self.last.unwrap_or(DiskPoint::ONE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_keeps_man_at_one() {
        let mut s = BesiState::default();
        assert_eq!(besicovitch_step(&mut s, DiskPoint::ORIGIN), DiskPoint::ONE);
        assert_eq!(s.theta, 0.0);
    }

    #[test]
    fn boundary_sample_is_antipodal() {
        let mut s = BesiState::default();
        let lion = DiskPoint::from_turns(0.3);
        let man = besicovitch_step(&mut s, lion);
        assert!((s.lift.omega() - 0.3).abs() < 1e-12);
        assert!((s.theta - 0.8).abs() < 1e-12);
        assert!(man.dist(DiskPoint::from_turns(0.8)) < 1e-12);
        assert!(man.dist(lion.neg()) < 1e-12);
    }

    #[test]
    fn three_quarter_radius() {
        let mut s = BesiState::default();
        let man = besicovitch_step(&mut s, DiskPoint::new(0.75, 0.0));
        assert!((s.theta - 0.25).abs() < 1e-15);
        assert!(man.dist(DiskPoint::new(0.0, 1.0)) < 1e-15);
    }

    #[test]
    fn branches_agree_at_half() {
        let mut s = BesiState::default();
        besicovitch_step(&mut s, DiskPoint::polar(0.5, 0.4));
        assert_eq!(s.theta, 0.0);
        besicovitch_step(&mut s, DiskPoint::polar(0.5 + 1e-12, 0.4));
        assert!(s.theta.abs() < 1e-11);
    }

    #[test]
    fn strict_mode_lags_one_sample() {
        let times = [0.0, 1.0, 2.0];
        let lion = [DiskPoint::ORIGIN, DiskPoint::new(0.75, 0.0), DiskPoint::new(1.0, 0.0)];
        let mut man = BesicovitchMan::new();
        assert_eq!(man.respond(0.0, &History::new(&times, &lion, 0)).unwrap(), DiskPoint::ONE);
        assert_eq!(man.respond(1.0, &History::new(&times, &lion, 1)).unwrap(), DiskPoint::ONE);
        let m = man.respond(2.0, &History::new(&times, &lion, 2)).unwrap();
        assert!(m.dist(DiskPoint::new(0.0, 1.0)) < 1e-15);
    }
}
