use super::{Continuum, DiskPoint};
use crate::path::{History, Path};
use crate::strategy::{Strategy, StrategyError};

/// Pursuer for path-connected Hausdorff arenas.
///
/// Walks the connecting path `gamma` (from the lion's start to the man's
/// start) at double speed until `t = 1/2`, then replays the man's path at
/// double speed, `alpha(2t - 1)`, which reaches `alpha(1)` at `t = 1`. From
/// then on it stays at `alpha(1)`.
///
/// Opponent positions between samples are interpolated along the arena. In
/// strict mode a target time past the visible window falls back to the
/// latest visible sample, so `alpha(1)` itself is only reached one step late.
#[derive(Debug, Clone)]
pub struct HausdorffLion<X, G> {
    space: X,
    gamma: G,
}

impl<X: Continuum, G: Path<DiskPoint>> HausdorffLion<X, G> {
    pub fn new(space: X, gamma: G) -> Self {
        HausdorffLion { space, gamma }
    }

    fn opponent_at(&self, history: &History<'_, DiskPoint>, tau: f64) -> Option<DiskPoint> {
        let times = history.times();
        let samples = history.samples();
        let (&t_last, &p_last) = (times.last()?, samples.last()?);
        if tau >= t_last {
            return Some(p_last);
        }
        let i = times.partition_point(|&s| s < tau);
        if times[i] == tau {
            return Some(samples[i]);
        }
        if i == 0 {
            return Some(samples[0]);
        }
        let (t0, t1) = (times[i - 1], times[i]);
        let s = (tau - t0) / (t1 - t0);
        Some(self.space.interpolate(samples[i - 1], samples[i], s))
    }
}

impl<X: Continuum, G: Path<DiskPoint>> Strategy<DiskPoint> for HausdorffLion<X, G> {
    fn respond(&mut self, t: f64, man: &History<'_, DiskPoint>) -> Result<DiskPoint, StrategyError> {
        if t <= 0.5 {
            return Ok(self.gamma.at(2.0 * t));
        }
        let tau = (2.0 * t - 1.0).min(1.0);
        self.opponent_at(man, tau).ok_or(StrategyError::MissingHistory(t))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{connect_path, Disk};
    use super::*;

    fn man_path(t: f64) -> DiskPoint {
        DiskPoint::new(0.5 * libm::cos(t), 0.5 * libm::sin(t))
    }

    #[test]
    fn piecewise_schedule() {
        let times: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
        let samples: std::vec::Vec<_> = times.iter().map(|&t| man_path(t)).collect();
        let l = DiskPoint::new(-0.5, 0.0);
        let gamma = connect_path(Disk, l, samples[0]);
        let mut lion = HausdorffLion::new(Disk, gamma);

        let out = lion.respond(0.25, &History::new(&times, &samples, 2)).unwrap();
        assert_eq!(out, gamma.at(0.5));
        let out = lion.respond(0.75, &History::new(&times, &samples, 4)).unwrap();
        assert_eq!(out, samples[2]);
        let out = lion.respond(1.0, &History::new(&times, &samples, 5)).unwrap();
        assert_eq!(out, samples[4]);
        let out = lion.respond(3.0, &History::new(&times, &samples, 5)).unwrap();
        assert_eq!(out, samples[4]);
    }

    #[test]
    fn interpolates_between_samples() {
        let times = [0.0, 0.5, 1.0];
        let samples = [DiskPoint::ORIGIN, DiskPoint::new(0.5, 0.0), DiskPoint::new(1.0, 0.0)];
        let mut lion = HausdorffLion::new(Disk, connect_path(Disk, DiskPoint::ORIGIN, DiskPoint::ORIGIN));
        // t = 0.625 -> tau = 0.25
        let out = lion.respond(0.625, &History::new(&times, &samples, 3)).unwrap();
        assert!(out.dist(DiskPoint::new(0.25, 0.0)) < 1e-15);
    }
}
