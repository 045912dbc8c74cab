//! Simple man strategies for finite spaces. None of them is a winning
//! strategy in a space with a minimum; they are the opponents the falsifier
//! is exercised against. All of them read only samples strictly before the
//! current time.

use super::PointId;
use crate::path::History;
use crate::strategy::{Strategy, StrategyError};

/// Stays at one point.
#[derive(Debug, Clone, Copy)]
pub struct SitAt(pub PointId);

impl Strategy<PointId> for SitAt {
    fn respond(&mut self, _t: f64, _lion: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        Ok(self.0)
    }
}

/// Moves to the lion's previous position.
#[derive(Debug, Clone, Copy)]
pub struct ShadowMan {
    pub start: PointId,
}

impl Strategy<PointId> for ShadowMan {
    fn respond(&mut self, t: f64, lion: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        Ok(lion.before(t).last().map_or(self.start, |(_, &p)| p))
    }
}

/// Sits at the first point (in index order) other than the lion's previous
/// position.
#[derive(Debug, Clone, Copy)]
pub struct AvoidLast {
    pub points: usize,
    pub start: PointId,
}

impl Strategy<PointId> for AvoidLast {
    fn respond(&mut self, t: f64, lion: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        let Some((_, &last)) = lion.before(t).last() else {
            return Ok(self.start);
        };
        Ok((0..self.points).map(PointId).find(|&p| p != last).unwrap_or(self.start))
    }
}

/// Steps to the next point in index order every `period` seconds, ignoring
/// the lion.
#[derive(Debug, Clone, Copy)]
pub struct CycleMan {
    pub points: usize,
    pub start: PointId,
    pub period: f64,
}

impl Strategy<PointId> for CycleMan {
    fn respond(&mut self, t: f64, _lion: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        let k = libm::floor(t / self.period) as usize;
        Ok(PointId((self.start.0 + k) % self.points.max(1)))
    }
}
