//! Incremental lifting of the argument to the universal cover of the circle.
//!
//! Angles are measured in turns, so `e^(2 pi i omega)` is the direction of
//! the sample. The lift restarts whenever the path passes through the
//! origin; the first lifted value of each component is taken in `[0, 1)`.
//! That choice depends only on past samples.

use super::DiskPoint;

/// Samples with norm at most this count as the origin.
pub const ZERO_THRESHOLD: f64 = 1e-12;

/// Principal argument of `z` in turns, in `[0, 1)`.
pub fn principal_turns(z: DiskPoint) -> f64 {
    let a = libm::atan2(z.y, z.x) / core::f64::consts::TAU;
    let a = if a < 0.0 { a + 1.0 } else { a };
    // atan2 of a tiny negative y returns -0.0 or a value rounding to 1.0
    if a >= 1.0 {
        0.0
    } else {
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LiftState {
    in_component: bool,
    winding: i64,
    last_angle: f64,
}

impl LiftState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn in_component(&self) -> bool {
        self.in_component
    }

    /// Current lifted angle in turns. Kept as an integer winding count plus
    /// the principal angle, so `omega mod 1 == last_angle` holds exactly.
    pub fn omega(&self) -> f64 {
        self.winding as f64 + self.last_angle
    }

    /// Full turns accumulated in the current component.
    pub fn winding(&self) -> i64 {
        self.winding
    }

    pub fn last_angle(&self) -> f64 {
        self.last_angle
    }

    /// Feeds the next sample of the lion's path.
    pub fn step(&mut self, z: DiskPoint) {
        if z.norm() <= ZERO_THRESHOLD {
            self.in_component = false;
            return;
        }
        let angle = principal_turns(z);
        if !self.in_component {
            self.in_component = true;
            self.winding = 0;
        } else {
            // principal-branch increment in (-1/2, 1/2]
            let diff = angle - self.last_angle;
            if diff > 0.5 {
                self.winding -= 1;
            } else if diff <= -0.5 {
                self.winding += 1;
            }
        }
        self.last_angle = angle;
    }
}

pub fn lift_step(mut state: LiftState, z: DiskPoint) -> LiftState {
    state.step(z);
    state
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constant_argument() {
        let mut s = LiftState::new();
        for k in 1..20 {
            s.step(DiskPoint::polar(k as f64 / 20.0, 0.25));
            assert!((s.omega() - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn full_turn_is_not_wrapped() {
        // arguments 0, 0.1, ..., 1.0 turns
        let mut s = LiftState::new();
        for k in 0..=10 {
            s.step(DiskPoint::polar(0.8, k as f64 / 10.0));
        }
        assert!((s.omega() - 1.0).abs() < 1e-9, "omega = {}", s.omega());
        assert_eq!(s.winding(), 1);
    }

    #[test]
    fn component_restarts_in_unit_interval() {
        let mut s = LiftState::new();
        for k in 0..=23 {
            s.step(DiskPoint::polar(0.5, k as f64 / 10.0));
        }
        assert!((s.omega() - 2.3).abs() < 1e-9);
        s.step(DiskPoint::ORIGIN);
        assert!(!s.in_component());
        s.step(DiskPoint::polar(0.5, 0.3));
        assert!((s.omega() - 0.3).abs() < 1e-12);
    }

    #[test]
    fn clockwise_winding_goes_negative() {
        let mut s = LiftState::new();
        for k in 0..=40 {
            s.step(DiskPoint::polar(1.0, -(k as f64) / 20.0));
        }
        assert_eq!(s.winding(), -2);
        assert!((s.omega() + 2.0).abs() < 1e-9);
    }

    #[test]
    fn principal_turns_range() {
        assert_eq!(principal_turns(DiskPoint::new(1.0, -0.0)), 0.0);
        assert_eq!(principal_turns(DiskPoint::new(1.0, -1e-300)), 0.0);
        assert!((principal_turns(DiskPoint::new(0.0, -1.0)) - 0.75).abs() < 1e-15);
        assert!((principal_turns(DiskPoint::new(-1.0, 0.0)) - 0.5).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn lift_projects_to_the_sample(
            steps in prop::collection::vec((0.01f64..1.0, -0.45f64..0.45), 1..200),
            start in 0.0f64..1.0,
        ) {
            let mut s = LiftState::new();
            let mut arg = start;
            for (r, d) in steps {
                arg += d;
                let z = DiskPoint::polar(r, arg);
                s.step(z);
                let first = s.omega() - libm::floor(s.omega());
                prop_assert!((first - s.last_angle()).abs() < 1e-9 || (first - s.last_angle()).abs() > 1.0 - 1e-9);
                let u = DiskPoint::from_turns(s.omega());
                let v = super::super::radial_retract(z).unwrap();
                prop_assert!(u.dist(v) < 1e-9);
            }
        }
    }
}
