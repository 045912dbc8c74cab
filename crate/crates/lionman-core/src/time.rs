//! Discretization of the time axis `[0, +inf)`.

use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("time step must be positive and finite, got {0}")]
    BadStep(f64),
    #[error("horizon must be positive and finite, got {0}")]
    BadHorizon(f64),
    #[error("event time {0} is not a finite nonnegative number")]
    BadEvent(f64),
}

/// Sample instants of a match: the regular lattice `k * dt` up to the horizon,
/// merged with optional event times.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    dt: f64,
    horizon: f64,
    times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(dt: f64, horizon: f64) -> Result<Self, GridError> {
        Self::with_events(dt, horizon, &[])
    }

    /// Builds the grid and merges `events` into it.
    ///
    /// Events beyond the horizon are dropped. An event within `dt * 1e-9` of a
    /// lattice instant replaces that instant, so schedules that test for exact
    /// equality against their event times always find them on the grid.
    pub fn with_events(dt: f64, horizon: f64, events: &[f64]) -> Result<Self, GridError> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(GridError::BadStep(dt));
        }
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(GridError::BadHorizon(horizon));
        }
        if let Some(&bad) = events.iter().find(|e| !(e.is_finite() && **e >= 0.0)) {
            return Err(GridError::BadEvent(bad));
        }
        let steps = libm::floor(horizon / dt) as usize + 1;
        let mut times: Vec<f64> = (0..steps).map(|k| k as f64 * dt).collect();

        let mut extra: Vec<f64> = events.iter().copied().filter(|&e| e <= horizon).collect();
        extra.sort_by(f64::total_cmp);
        extra.dedup();

        let snap = dt * 1e-9;
        for e in extra {
            let k = libm::round(e / dt) as usize;
            if k < times.len() && libm::fabs(times[k] - e) <= snap {
                times[k] = e;
                continue;
            }
            match times.binary_search_by(|t| t.total_cmp(&e)) {
                Ok(_) => {}
                Err(pos) => {
                    let near_prev = pos > 0 && libm::fabs(times[pos - 1] - e) <= snap;
                    let near_next = pos < times.len() && libm::fabs(times[pos] - e) <= snap;
                    if near_prev {
                        times[pos - 1] = e;
                    } else if near_next {
                        times[pos] = e;
                    } else {
                        times.insert(pos, e);
                    }
                }
            }
        }
        Ok(TimeGrid { dt, horizon, times })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Index of the sample at exactly `t`, if `t` is a grid instant.
    pub fn index_of(&self, t: f64) -> Option<usize> {
        self.times.binary_search_by(|s| s.total_cmp(&t)).ok()
    }

    /// Samples a path at every grid instant.
    pub fn sample<P, Q: crate::Path<P> + ?Sized>(&self, path: &Q) -> Vec<P> {
        self.times.iter().map(|&t| path.at(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts() {
        let g = TimeGrid::new(0.25, 1.0).unwrap();
        assert_eq!(g.times(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        let g = TimeGrid::new(0.3, 1.0).unwrap();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn events_merge_without_duplicates() {
        let g = TimeGrid::with_events(0.25, 1.0, &[0.5, 0.875, 0.875, 2.0]).unwrap();
        assert_eq!(g.times(), &[0.0, 0.25, 0.5, 0.75, 0.875, 1.0]);
        assert!(g.times().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn near_event_snaps_onto_lattice() {
        let e = 0.5 + 1e-13;
        let g = TimeGrid::with_events(0.25, 1.0, &[e]).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.index_of(e), Some(2));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(TimeGrid::new(0.0, 1.0), Err(GridError::BadStep(0.0)));
        assert_eq!(TimeGrid::new(0.1, -1.0), Err(GridError::BadHorizon(-1.0)));
        assert!(matches!(
            TimeGrid::with_events(0.1, 1.0, &[f64::NAN]),
            Err(GridError::BadEvent(_))
        ));
    }
}
