//! Continuum arenas in the plane: the closed unit disk, the unit circle, the
//! unit square and horizontal segments, with their explicit strategies.

mod besicovitch;
mod fixed_point;
mod hausdorff;
mod lift;

pub use besicovitch::{besicovitch_step, BesiState, BesicovitchMan};
pub use fixed_point::{antipodal, rotation, CircleMap, FixedPointFreeMan, PointMap};
pub use hausdorff::HausdorffLion;
pub use lift::{lift_step, principal_turns, LiftState, ZERO_THRESHOLD};

use crate::engine::Space;
use crate::path::Path;
use crate::retract::Retraction;
use crate::strategy::StrategyError;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use thiserror::Error;

/// Slack on the unit-norm bound of the disk.
pub const DISK_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DiskError {
    #[error("radial retraction is undefined at the origin")]
    ZeroVector,
    #[error("map has a fixed point near ({0}, {1})")]
    FixedPoint(f64, f64),
    #[error("start point is outside the space")]
    StartOutside,
}

/// A point of the plane. Every arena in this module embeds in it.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DiskPoint {
    pub x: f64,
    pub y: f64,
}

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint { x: 0.0, y: 0.0 };
    pub const ONE: DiskPoint = DiskPoint { x: 1.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        DiskPoint { x, y }
    }

    /// `e^(2 pi i turns)`.
    pub fn from_turns(turns: f64) -> Self {
        let (s, c) = libm::sincos(TAU * turns);
        DiskPoint { x: c, y: s }
    }

    pub fn polar(radius: f64, turns: f64) -> Self {
        let u = Self::from_turns(turns);
        DiskPoint { x: radius * u.x, y: radius * u.y }
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn dist(self, other: DiskPoint) -> f64 {
        libm::hypot(self.x - other.x, self.y - other.y)
    }

    pub fn lerp(self, other: DiskPoint, s: f64) -> DiskPoint {
        DiskPoint {
            x: self.x + (other.x - self.x) * s,
            y: self.y + (other.y - self.y) * s,
        }
    }

    pub fn neg(self) -> DiskPoint {
        DiskPoint { x: -self.x, y: -self.y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// `z / |z|`.
pub fn radial_retract(z: DiskPoint) -> Result<DiskPoint, DiskError> {
    let r = z.norm();
    if !(r > 0.0) {
        return Err(DiskError::ZeroVector);
    }
    Ok(DiskPoint { x: z.x / r, y: z.y / r })
}

/// A path-connected Hausdorff arena in the plane.
pub trait Continuum: Space<DiskPoint> {
    /// A path from `a` (at `s = 0`) to `b` (at `s = 1`) inside the arena.
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint;

    /// A finite sample of the arena used for best-effort self checks.
    fn probe_points(&self) -> Vec<DiskPoint>;
}

/// The closed unit disk.
#[derive(Debug, Clone, Copy, Default)]
pub struct Disk;

/// The unit circle.
#[derive(Debug, Clone, Copy, Default)]
pub struct Circle;

/// The unit square `[0, 1]^2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Square;

/// The horizontal segment `[x0, x1] x {0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub x0: f64,
    pub x1: f64,
}

impl Segment {
    /// Bottom edge of the unit square.
    pub const BOTTOM_EDGE: Segment = Segment { x0: 0.0, x1: 1.0 };
}

impl Space<DiskPoint> for Disk {
    fn contains(&self, p: &DiskPoint) -> bool {
        p.is_finite() && p.x * p.x + p.y * p.y <= 1.0 + DISK_SLACK
    }

    fn distance(&self, a: &DiskPoint, b: &DiskPoint) -> Option<f64> {
        Some(a.dist(*b))
    }
}

impl Continuum for Disk {
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint {
        a.lerp(b, s)
    }

    fn probe_points(&self) -> Vec<DiskPoint> {
        let mut pts = alloc::vec![DiskPoint::ORIGIN];
        for i in 1..=8 {
            for k in 0..32 {
                pts.push(DiskPoint::polar(i as f64 / 8.0, k as f64 / 32.0));
            }
        }
        pts
    }
}

impl Space<DiskPoint> for Circle {
    fn contains(&self, p: &DiskPoint) -> bool {
        p.is_finite() && libm::fabs(p.norm() - 1.0) <= 1e-9
    }

    fn distance(&self, a: &DiskPoint, b: &DiskPoint) -> Option<f64> {
        Some(a.dist(*b))
    }
}

impl Continuum for Circle {
    /// Along the shorter arc.
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint {
        let from = principal_turns(a);
        let mut delta = principal_turns(b) - from;
        if delta > 0.5 {
            delta -= 1.0;
        } else if delta <= -0.5 {
            delta += 1.0;
        }
        if s >= 1.0 {
            return b;
        }
        DiskPoint::from_turns(from + delta * s)
    }

    fn probe_points(&self) -> Vec<DiskPoint> {
        (0..360).map(|k| DiskPoint::from_turns(k as f64 / 360.0)).collect()
    }
}

impl Space<DiskPoint> for Square {
    fn contains(&self, p: &DiskPoint) -> bool {
        let ok = |v: f64| (-DISK_SLACK..=1.0 + DISK_SLACK).contains(&v);
        ok(p.x) && ok(p.y)
    }

    fn distance(&self, a: &DiskPoint, b: &DiskPoint) -> Option<f64> {
        Some(a.dist(*b))
    }
}

impl Continuum for Square {
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint {
        a.lerp(b, s)
    }

    fn probe_points(&self) -> Vec<DiskPoint> {
        let mut pts = Vec::with_capacity(21 * 21);
        for i in 0..=20 {
            for j in 0..=20 {
                pts.push(DiskPoint::new(i as f64 / 20.0, j as f64 / 20.0));
            }
        }
        pts
    }
}

impl Space<DiskPoint> for Segment {
    fn contains(&self, p: &DiskPoint) -> bool {
        p.is_finite()
            && libm::fabs(p.y) <= DISK_SLACK
            && p.x >= self.x0 - DISK_SLACK
            && p.x <= self.x1 + DISK_SLACK
    }

    fn distance(&self, a: &DiskPoint, b: &DiskPoint) -> Option<f64> {
        Some(a.dist(*b))
    }
}

impl Continuum for Segment {
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint {
        a.lerp(b, s)
    }

    fn probe_points(&self) -> Vec<DiskPoint> {
        (0..=100)
            .map(|k| DiskPoint::new(self.x0 + (self.x1 - self.x0) * k as f64 / 100.0, 0.0))
            .collect()
    }
}

/// Path from `a` to `b` on `[0, 1]`, constant afterwards.
#[derive(Debug, Clone, Copy)]
pub struct ConnectingPath<X> {
    space: X,
    pub from: DiskPoint,
    pub to: DiskPoint,
}

impl<X: Continuum> Path<DiskPoint> for ConnectingPath<X> {
    fn at(&self, t: f64) -> DiskPoint {
        if t <= 0.0 {
            self.from
        } else if t >= 1.0 {
            self.to
        } else {
            self.space.interpolate(self.from, self.to, t)
        }
    }
}

/// Straight segment in the disk or square, shorter arc on the circle.
pub fn connect_path<X: Continuum>(space: X, a: DiskPoint, b: DiskPoint) -> ConnectingPath<X> {
    ConnectingPath { space, from: a, to: b }
}

/// Radial retraction of the punctured disk onto the circle.
#[derive(Debug, Clone, Copy, Default)]
pub struct RadialRetraction;

impl Retraction<DiskPoint, DiskPoint> for RadialRetraction {
    fn retract(&self, p: &DiskPoint) -> Result<DiskPoint, StrategyError> {
        radial_retract(*p).map_err(|_| StrategyError::RetractionUndefined)
    }

    fn include(&self, q: &DiskPoint) -> DiskPoint {
        *q
    }
}

/// `(x, y) -> (x, 0)`: the unit square onto its bottom edge.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerticalProjection;

impl Retraction<DiskPoint, DiskPoint> for VerticalProjection {
    fn retract(&self, p: &DiskPoint) -> Result<DiskPoint, StrategyError> {
        Ok(DiskPoint::new(p.x, 0.0))
    }

    fn include(&self, q: &DiskPoint) -> DiskPoint {
        *q
    }
}

/// Clamps the first coordinate into `[x0, x1]` and drops the second.
#[derive(Debug, Clone, Copy)]
pub struct ClampToSegment(pub Segment);

impl Retraction<DiskPoint, DiskPoint> for ClampToSegment {
    fn retract(&self, p: &DiskPoint) -> Result<DiskPoint, StrategyError> {
        Ok(DiskPoint::new(p.x.clamp(self.0.x0, self.0.x1), 0.0))
    }

    fn include(&self, q: &DiskPoint) -> DiskPoint {
        *q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_retract_examples() {
        assert_eq!(radial_retract(DiskPoint::new(0.5, 0.0)).unwrap(), DiskPoint::new(1.0, 0.0));
        assert_eq!(radial_retract(DiskPoint::new(0.0, -0.25)).unwrap(), DiskPoint::new(0.0, -1.0));
        let u = radial_retract(DiskPoint::new(0.6, 0.8)).unwrap();
        assert!(u.dist(DiskPoint::new(0.6, 0.8)) < 1e-15);
        assert_eq!(radial_retract(DiskPoint::ORIGIN), Err(DiskError::ZeroVector));
    }

    #[test]
    fn radial_retract_has_unit_norm() {
        for k in 0..1000 {
            let z = DiskPoint::polar(1e-6 + k as f64 / 1000.0, k as f64 * 0.1234);
            assert!((radial_retract(z).unwrap().norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn connect_path_examples() {
        let p = DiskPoint::new(0.3, -0.2);
        let c = connect_path(Disk, p, p);
        assert!((0..=10).all(|k| c.at(k as f64 / 10.0) == p));

        let c = connect_path(Disk, DiskPoint::new(-1.0, 0.0), DiskPoint::new(1.0, 0.0));
        assert_eq!(c.at(0.5), DiskPoint::ORIGIN);
        assert_eq!(c.at(0.0), DiskPoint::new(-1.0, 0.0));
        assert_eq!(c.at(1.0), DiskPoint::new(1.0, 0.0));

        let c = connect_path(Circle, DiskPoint::ONE, DiskPoint::new(0.0, 1.0));
        for k in 0..=100 {
            let z = c.at(k as f64 / 100.0);
            assert!((z.norm() - 1.0).abs() <= 1e-12);
            assert!(z.x >= -1e-12 && z.y >= -1e-12, "stays on the quarter arc");
        }
        assert_eq!(c.at(1.0), DiskPoint::new(0.0, 1.0));
    }

    #[test]
    fn membership() {
        assert!(Disk.contains(&DiskPoint::new(1.0 + 1e-13, 0.0)));
        assert!(!Disk.contains(&DiskPoint::new(1.0 + 1e-9, 0.0)));
        assert!(!Disk.contains(&DiskPoint::new(f64::NAN, 0.0)));
        assert!(Circle.contains(&DiskPoint::from_turns(0.37)));
        assert!(!Circle.contains(&DiskPoint::new(0.5, 0.0)));
        assert!(Square.contains(&DiskPoint::new(1.0, 0.0)));
        assert!(!Square.contains(&DiskPoint::new(-0.1, 0.5)));
        assert!(Segment::BOTTOM_EDGE.contains(&DiskPoint::new(0.4, 0.0)));
        assert!(!Segment::BOTTOM_EDGE.contains(&DiskPoint::new(0.4, 0.1)));
    }

    #[test]
    fn retractions_fix_their_subspace() {
        for p in Circle.probe_points() {
            assert!(RadialRetraction.retract(&p).unwrap().dist(p) < 1e-15);
        }
        for p in Segment::BOTTOM_EDGE.probe_points() {
            assert_eq!(VerticalProjection.retract(&p).unwrap(), p);
        }
        let half = Segment { x0: 0.0, x1: 0.5 };
        for p in half.probe_points() {
            assert_eq!(ClampToSegment(half).retract(&p).unwrap(), p);
        }
        assert_eq!(
            RadialRetraction.retract(&DiskPoint::ORIGIN),
            Err(StrategyError::RetractionUndefined)
        );
    }
}
