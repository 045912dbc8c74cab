use super::{Continuum, DiskError, DiskPoint};
use crate::path::History;
use crate::strategy::{Strategy, StrategyError};

/// Evader that applies a fixed-point-free map to the lion's position.
///
/// The man starts at `f(l)`. In closed mode the response at `t` is
/// `f(lion(t))`; in strict mode `f` is applied to the latest sample before
/// `t`.
#[derive(Clone)]
pub struct FixedPointFreeMan<F> {
    f: F,
    lion_start: DiskPoint,
}

/// A self-map of the arena.
pub trait PointMap {
    fn apply(&self, z: DiskPoint) -> DiskPoint;
}

impl<F: Fn(DiskPoint) -> DiskPoint> PointMap for F {
    fn apply(&self, z: DiskPoint) -> DiskPoint {
        self(z)
    }
}

/// The two fixed-point-free circle maps shipped as named values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleMap {
    Antipodal,
    /// Rotation by the given number of turns.
    Rotation(f64),
}

impl PointMap for CircleMap {
    fn apply(&self, z: DiskPoint) -> DiskPoint {
        match *self {
            CircleMap::Antipodal => antipodal(z),
            CircleMap::Rotation(turns) => rotation(turns)(z),
        }
    }
}

impl<F: PointMap> FixedPointFreeMan<F> {
    /// Samples `space` and rejects `f` if it moves some probe point by at
    /// most `1e-9`. This is best-effort: a fixed point between probes goes
    /// unnoticed.
    pub fn new<X: Continuum>(space: &X, f: F, lion_start: DiskPoint) -> Result<Self, DiskError> {
        if !space.contains(&lion_start) {
            return Err(DiskError::StartOutside);
        }
        for p in space.probe_points() {
            let q = f.apply(p);
            if q.dist(p) <= 1e-9 {
                return Err(DiskError::FixedPoint(p.x, p.y));
            }
        }
        Ok(FixedPointFreeMan { f, lion_start })
    }

    pub fn start(&self) -> DiskPoint {
        self.f.apply(self.lion_start)
    }
}

impl<F> core::fmt::Debug for FixedPointFreeMan<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FixedPointFreeMan").field("lion_start", &self.lion_start).finish_non_exhaustive()
    }
}

impl<F: PointMap> Strategy<DiskPoint> for FixedPointFreeMan<F> {
    fn respond(&mut self, _t: f64, lion: &History<'_, DiskPoint>) -> Result<DiskPoint, StrategyError> {
        let z = lion.last().map_or(self.lion_start, |(_, z)| *z);
        Ok(self.f.apply(z))
    }
}

/// `z -> -z`.
pub fn antipodal(z: DiskPoint) -> DiskPoint {
    z.neg()
}

/// Rotation by `turns`.
pub fn rotation(turns: f64) -> impl Fn(DiskPoint) -> DiskPoint + Copy {
    let (s, c) = libm::sincos(core::f64::consts::TAU * turns);
    move |z: DiskPoint| DiskPoint::new(c * z.x - s * z.y, s * z.x + c * z.y)
}

#[cfg(test)]
mod tests {
    use super::super::{Circle, Disk};
    use super::*;

    #[test]
    fn antipodal_rejected_on_disk() {
        let err = FixedPointFreeMan::new(&Disk, antipodal, DiskPoint::ORIGIN).unwrap_err();
        assert_eq!(err, DiskError::FixedPoint(0.0, 0.0));
    }

    #[test]
    fn antipodal_and_rotation_accepted_on_circle() {
        let m = FixedPointFreeMan::new(&Circle, antipodal, DiskPoint::ONE).unwrap();
        assert_eq!(m.start(), DiskPoint::new(-1.0, -0.0));
        let m = FixedPointFreeMan::new(&Circle, rotation(1.0 / 3.0), DiskPoint::ONE).unwrap();
        assert!(m.start().dist(DiskPoint::from_turns(1.0 / 3.0)) < 1e-15);
        assert!(FixedPointFreeMan::new(&Circle, rotation(0.0), DiskPoint::ONE).is_err());
        let m = FixedPointFreeMan::new(&Circle, CircleMap::Antipodal, DiskPoint::ONE).unwrap();
        assert_eq!(m.start(), DiskPoint::new(-1.0, -0.0));
        assert!(FixedPointFreeMan::new(&Circle, CircleMap::Rotation(1.0), DiskPoint::ONE).is_err());
    }

    #[test]
    fn start_outside_rejected() {
        let err = FixedPointFreeMan::new(&Circle, antipodal, DiskPoint::ORIGIN).unwrap_err();
        assert_eq!(err, DiskError::StartOutside);
    }
}
