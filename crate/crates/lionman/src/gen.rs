//! Seeded random paths and forks.
//!
//! Everything here is driven by a caller-supplied RNG; use [`rng`] to get
//! the ChaCha stream a seed stands for.

use lionman_core::disk::DiskPoint;
use lionman_core::finite::{FiniteSpace, PointId, StepPath};
use lionman_core::Path;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Where generated points are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Disk,
    Circle,
    Square,
    /// Bottom edge of the unit square.
    Edge,
}

impl Region {
    pub fn clamp(self, z: DiskPoint) -> DiskPoint {
        match self {
            Region::Disk => {
                let r = z.norm();
                if r > 1.0 {
                    DiskPoint::new(z.x / r, z.y / r)
                } else {
                    z
                }
            }
            Region::Circle => {
                let r = z.norm();
                if r == 0.0 {
                    DiskPoint::ONE
                } else {
                    DiskPoint::new(z.x / r, z.y / r)
                }
            }
            Region::Square => DiskPoint::new(z.x.clamp(0.0, 1.0), z.y.clamp(0.0, 1.0)),
            Region::Edge => DiskPoint::new(z.x.clamp(0.0, 1.0), 0.0),
        }
    }

    fn random_point<R: Rng>(self, rng: &mut R, overshoot: f64) -> DiskPoint {
        match self {
            Region::Disk | Region::Circle => {
                let r = overshoot * rng.gen::<f64>().sqrt();
                let a: f64 = rng.gen();
                DiskPoint::new(r * (TAU * a).cos(), r * (TAU * a).sin())
            }
            Region::Square | Region::Edge => {
                let lo = -(overshoot - 1.0) / 2.0;
                DiskPoint::new(lo + overshoot * rng.gen::<f64>(), lo + overshoot * rng.gen::<f64>())
            }
        }
    }
}

/// Shapes of generated disk paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// Catmull-Rom spline through random control points, clamped to the region.
    Spline,
    /// Spiral with drifting radius, clamped to the disk.
    Spiral,
    /// Oscillation through the origin along a slowly turning axis.
    Crossing,
    /// One of the above, chosen at random.
    Mixed,
    /// Spline with control points well inside the region, so clamping
    /// rarely if ever applies.
    Interior,
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Spline { knots: Vec<DiskPoint>, span: f64 },
    Spiral { r0: f64, r1: f64, a0: f64, spin: f64 },
    Crossing { amp: f64, freq: f64, phase: f64, a0: f64, spin: f64 },
}

/// A generated continuous path on `[0, horizon]`, constant afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct GenPath {
    kind: Kind,
    region: Region,
    horizon: f64,
}

impl GenPath {
    pub fn generate<R: Rng>(rng: &mut R, shape: Shape, region: Region, horizon: f64) -> GenPath {
        let shape = match shape {
            Shape::Mixed => *[Shape::Spline, Shape::Spiral, Shape::Crossing].choose(rng).expect("non-empty"),
            s => s,
        };
        let kind = match (shape, region) {
            (Shape::Spiral, Region::Disk | Region::Circle) => Kind::Spiral {
                r0: rng.gen_range(0.0..0.6),
                r1: rng.gen_range(0.7..1.4),
                a0: rng.gen(),
                spin: rng.gen_range(0.2..3.0) * if rng.gen() { 1.0 } else { -1.0 },
            },
            (Shape::Crossing, Region::Disk) => Kind::Crossing {
                amp: rng.gen_range(0.3..1.2),
                freq: rng.gen_range(0.2..2.0),
                phase: rng.gen(),
                a0: rng.gen(),
                spin: rng.gen_range(-0.3..0.3),
            },
            _ => {
                let overshoot = if shape == Shape::Interior { 0.8 } else { 1.3 };
                let n = 4 + (horizon.ceil() as usize) * 2;
                let knots = (0..n + 3).map(|_| region.random_point(rng, overshoot)).collect();
                Kind::Spline { knots, span: horizon.max(1e-9) / n as f64 }
            }
        };
        GenPath { kind, region, horizon }
    }

    fn raw(&self, t: f64) -> DiskPoint {
        let t = t.clamp(0.0, self.horizon);
        match &self.kind {
            Kind::Spline { knots, span } => {
                let u = t / span;
                let i = (u.floor() as usize).min(knots.len() - 4);
                catmull_rom(&knots[i..i + 4], u - i as f64)
            }
            Kind::Spiral { r0, r1, a0, spin } => {
                let r = r0 + (r1 - r0) * t / self.horizon.max(1e-9);
                DiskPoint::polar(r, a0 + spin * t)
            }
            Kind::Crossing { amp, freq, phase, a0, spin } => {
                let s = amp * (TAU * (freq * t + phase)).sin();
                DiskPoint::polar(s, a0 + spin * t)
            }
        }
    }
}

impl Path<DiskPoint> for GenPath {
    fn at(&self, t: f64) -> DiskPoint {
        self.region.clamp(self.raw(t))
    }
}

fn catmull_rom(p: &[DiskPoint], s: f64) -> DiskPoint {
    let (s2, s3) = (s * s, s * s * s);
    let w = [
        -0.5 * s3 + s2 - 0.5 * s,
        1.5 * s3 - 2.5 * s2 + 1.0,
        -1.5 * s3 + 2.0 * s2 + 0.5 * s,
        0.5 * s3 - 0.5 * s2,
    ];
    let x = (0..4).map(|k| w[k] * p[k].x).sum();
    let y = (0..4).map(|k| w[k] * p[k].y).sum();
    DiskPoint::new(x, y)
}

/// Keeps `base` before index `k` and moves every later sample by one random
/// offset (a random rotation on the circle).
pub fn fork_disk<R: Rng>(rng: &mut R, region: Region, base: &[DiskPoint], k: usize) -> Vec<DiskPoint> {
    let turn: f64 = rng.gen_range(0.05..0.95);
    let off = DiskPoint::polar(rng.gen_range(0.05..0.5), rng.gen());
    base.iter()
        .enumerate()
        .map(|(i, &z)| {
            if i < k {
                z
            } else if region == Region::Circle {
                let w = DiskPoint::from_turns(turn);
                DiskPoint::new(z.x * w.x - z.y * w.y, z.x * w.y + z.y * w.x)
            } else {
                let moved = region.clamp(DiskPoint::new(z.x + off.x, z.y + off.y));
                if moved == z {
                    region.clamp(DiskPoint::new(z.x - off.x, z.y - off.y))
                } else {
                    moved
                }
            }
        })
        .collect()
}

/// Keeps `base` before index `k` and replaces the rest with random points,
/// the first of which differs from the base sample when the space allows.
pub fn fork_finite<R: Rng>(rng: &mut R, points: usize, base: &[PointId], k: usize) -> Vec<PointId> {
    let mut out = base[..k].to_vec();
    for i in k..base.len() {
        let mut p = PointId(rng.gen_range(0..points));
        if i == k && points > 1 && p == base[k] {
            p = PointId((p.0 + 1) % points);
        }
        out.push(p);
    }
    out
}

/// A random continuous step path with `jumps` jumps in `(0, horizon)`.
///
/// Builds a random walk along the comparability graph: each jump goes to a
/// point comparable with the current one, and the instant value at the jump
/// is the upper of the two.
pub fn random_step_path<R: Rng>(rng: &mut R, space: &FiniteSpace, start: PointId, jumps: usize, horizon: f64) -> StepPath {
    let mut times: Vec<f64> = (0..jumps).map(|_| rng.gen_range(0.0..horizon)).collect();
    times.sort_by(f64::total_cmp);
    times.dedup();
    let mut path = StepPath::constant(start);
    let mut cur = start;
    for t in times {
        if t <= 0.0 {
            continue;
        }
        let nbrs: Vec<PointId> = space.points().filter(|&q| space.comparable(cur, q)).collect();
        let next = *nbrs.choose(rng).expect("a point is comparable with itself");
        let top = if space.leq(cur, next) { next } else { cur };
        path.push_jump(t, top, next).expect("sorted times");
        cur = next;
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use lionman_core::disk::{Disk, Square};
    use lionman_core::finite::is_continuous;
    use lionman_core::Space;

    #[test]
    fn paths_stay_inside() {
        let mut r = rng(7);
        for shape in [Shape::Spline, Shape::Spiral, Shape::Crossing, Shape::Mixed] {
            let p = GenPath::generate(&mut r, shape, Region::Disk, 5.0);
            for k in 0..=500 {
                assert!(Disk.contains(&p.at(k as f64 / 100.0)));
            }
        }
        let p = GenPath::generate(&mut r, Shape::Spline, Region::Square, 1.0);
        assert!((0..=100).all(|k| Square.contains(&p.at(k as f64 / 100.0))));
        let p = GenPath::generate(&mut r, Shape::Spline, Region::Edge, 1.0);
        assert!((0..=100).all(|k| p.at(k as f64 / 100.0).y == 0.0));
    }

    #[test]
    fn splines_are_continuous() {
        let mut r = rng(3);
        let p = GenPath::generate(&mut r, Shape::Spline, Region::Disk, 2.0);
        for k in 0..2000 {
            let t = k as f64 / 1000.0;
            assert!(p.at(t).dist(p.at(t + 1e-6)) < 1e-3);
        }
    }

    #[test]
    fn same_seed_same_path() {
        let a = GenPath::generate(&mut rng(11), Shape::Mixed, Region::Disk, 3.0);
        let b = GenPath::generate(&mut rng(11), Shape::Mixed, Region::Disk, 3.0);
        assert_eq!(a, b);
    }

    #[test]
    fn forks_agree_before_index() {
        let mut r = rng(5);
        let base: Vec<DiskPoint> = (0..10).map(|k| DiskPoint::polar(0.5, k as f64 / 10.0)).collect();
        let f = fork_disk(&mut r, Region::Disk, &base, 4);
        assert_eq!(f[..4], base[..4]);
        assert!(f[4..].iter().zip(&base[4..]).all(|(a, b)| a != b));
        let base = vec![PointId(0); 6];
        let f = fork_finite(&mut r, 3, &base, 2);
        assert_eq!(f[..2], base[..2]);
        assert_ne!(f[2], base[2]);
    }

    #[test]
    fn random_step_paths_are_continuous() {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let space = FiniteSpace::from_relation(
            &names,
            &[("a".into(), "b".into()), ("c".into(), "b".into()), ("c".into(), "d".into())],
        )
        .unwrap();
        let mut r = rng(1);
        for _ in 0..200 {
            let p = random_step_path(&mut r, &space, PointId(0), 5, 2.0);
            assert!(is_continuous(&space, &p));
        }
    }
}
