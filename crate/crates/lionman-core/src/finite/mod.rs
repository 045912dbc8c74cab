//! Finite topological spaces as specialization preorders.
//!
//! Convention: `x <= y` iff `x` lies in every open set containing `y`, that is
//! `x` belongs to the minimal open set `U_y`. Open sets are exactly the
//! down-sets of the preorder.

mod continuity;
mod evaders;
mod falsify;
mod fence;
mod lion;
mod step_path;

pub use continuity::{is_continuous, is_continuous_oracle, ContinuityOracle, ORACLE_MAX_POINTS};
pub use evaders::{AvoidLast, CycleMan, ShadowMan, SitAt};
pub use falsify::{falsify_man_strategy, Falsification, FalsifyError};
pub use fence::{fence_path, shortest_fence, Fence};
pub use lion::{AspaceLion, DEFAULT_EVENTS};
pub use step_path::{StepPath, StepPathError};

use crate::engine::Space;
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

/// Index of a point in a [`FiniteSpace`]. Points are indexed in lexicographic
/// order of their names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("duplicate point {0:?}")]
    DuplicatePoint(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("relation is not a preorder: {0}")]
    NotPreorder(&'static str),
    #[error("open-set family is not a topology: {0}")]
    NotTopology(&'static str),
    #[error("points {0:?} and {1:?} lie in different path components")]
    Disconnected(String, String),
    #[error("space is not path-connected")]
    NotPathConnected,
    #[error("space has no points")]
    Empty,
    #[error("arrival time must be positive and finite")]
    BadArrival,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    /// `leq[x][y]` iff `x <= y`.
    leq: Vec<Vec<bool>>,
}

fn sorted_names(points: &[String]) -> Result<Vec<String>, FiniteError> {
    let mut names = points.to_vec();
    names.sort();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(FiniteError::DuplicatePoint(w[0].clone()));
    }
    if names.is_empty() {
        return Err(FiniteError::Empty);
    }
    Ok(names)
}

impl FiniteSpace {
    /// Builds the preorder generated by `pairs` (each `(a, b)` meaning
    /// `a <= b`): its reflexive-transitive closure.
    pub fn from_relation(points: &[String], pairs: &[(String, String)]) -> Result<Self, FiniteError> {
        let names = sorted_names(points)?;
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        let mut space = FiniteSpace { names, leq: Vec::new() };
        for (a, b) in pairs {
            let a = space.id(a).ok_or_else(|| FiniteError::UnknownPoint(a.clone()))?;
            let b = space.id(b).ok_or_else(|| FiniteError::UnknownPoint(b.clone()))?;
            leq[a.0][b.0] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        space.leq = leq;
        Ok(space)
    }

    /// Builds a space from a matrix that must already be a preorder.
    /// Row and column `i` refer to `points[i]`.
    pub fn from_preorder(points: &[String], leq: &[Vec<bool>]) -> Result<Self, FiniteError> {
        let n = points.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(FiniteError::NotPreorder("matrix shape does not match the points"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(FiniteError::NotPreorder("not reflexive"));
            }
            for j in 0..n {
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(FiniteError::NotPreorder("not transitive"));
                    }
                }
            }
        }
        let names = sorted_names(points)?;
        // permute into lexicographic order
        let pos: Vec<usize> = points
            .iter()
            .map(|p| names.binary_search(p).unwrap_or(0))
            .collect();
        let mut sorted = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                sorted[pos[i]][pos[j]] = leq[i][j];
            }
        }
        Ok(FiniteSpace { names, leq: sorted })
    }

    /// Builds a space from its open sets. The family must contain the empty
    /// set and the whole space and be closed under union and intersection.
    pub fn from_opens(points: &[String], opens: &[Vec<String>]) -> Result<Self, FiniteError> {
        let names = sorted_names(points)?;
        let n = names.len();
        let probe = FiniteSpace { names, leq: Vec::new() };
        let mut family: Vec<Vec<bool>> = Vec::with_capacity(opens.len());
        for open in opens {
            let mut set = vec![false; n];
            for p in open {
                let id = probe.id(p).ok_or_else(|| FiniteError::UnknownPoint(p.clone()))?;
                set[id.0] = true;
            }
            if !family.contains(&set) {
                family.push(set);
            }
        }
        if !family.iter().any(|s| s.iter().all(|&b| !b)) {
            return Err(FiniteError::NotTopology("missing the empty set"));
        }
        if !family.iter().any(|s| s.iter().all(|&b| b)) {
            return Err(FiniteError::NotTopology("missing the whole space"));
        }
        for a in &family {
            for b in &family {
                let union: Vec<bool> = a.iter().zip(b).map(|(x, y)| *x || *y).collect();
                let inter: Vec<bool> = a.iter().zip(b).map(|(x, y)| *x && *y).collect();
                if !family.contains(&union) {
                    return Err(FiniteError::NotTopology("not closed under union"));
                }
                if !family.contains(&inter) {
                    return Err(FiniteError::NotTopology("not closed under intersection"));
                }
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                leq[x][y] = family.iter().filter(|u| u[y]).all(|u| u[x]);
            }
        }
        Ok(FiniteSpace { names: probe.names, leq })
    }

    /// Discrete space: `leq` is equality.
    pub fn discrete(points: &[String]) -> Result<Self, FiniteError> {
        Self::from_relation(points, &[])
    }

    /// Indiscrete space: every pair is related.
    pub fn indiscrete(points: &[String]) -> Result<Self, FiniteError> {
        let names = sorted_names(points)?;
        let n = names.len();
        Ok(FiniteSpace { names, leq: vec![vec![true; n]; n] })
    }

    /// Chain `points[0] < points[1] < ...` in the given order.
    pub fn chain(points: &[String]) -> Result<Self, FiniteError> {
        let pairs: Vec<(String, String)> =
            points.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Self::from_relation(points, &pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, p: PointId) -> &str {
        &self.names[p.0]
    }

    pub fn id(&self, name: &str) -> Option<PointId> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok().map(PointId)
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> {
        (0..self.len()).map(PointId)
    }

    pub fn leq(&self, x: PointId, y: PointId) -> bool {
        self.leq[x.0][y.0]
    }

    pub fn comparable(&self, x: PointId, y: PointId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Pairs `(x, y)` with `x <= y` and `x != y`, in index order.
    pub fn relation_pairs(&self) -> Vec<(PointId, PointId)> {
        let mut out = Vec::new();
        for x in self.points() {
            for y in self.points() {
                if x != y && self.leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `U_x = { y : y <= x }`, sorted.
    pub fn minimal_open(&self, x: PointId) -> Vec<PointId> {
        self.points().filter(|&y| self.leq(y, x)).collect()
    }

    pub fn is_t0(&self) -> bool {
        self.points()
            .all(|x| self.points().all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
    }

    /// Same points, opposite order: the opens of the dual are the closed
    /// sets of the original.
    pub fn dual(&self) -> FiniteSpace {
        let n = self.len();
        let leq = (0..n).map(|x| (0..n).map(|y| self.leq[y][x]).collect()).collect();
        FiniteSpace { names: self.names.clone(), leq }
    }

    /// Smallest open set containing `subset`: the union of the `U_y`.
    pub fn open_hull(&self, subset: &[PointId]) -> Vec<PointId> {
        self.points()
            .filter(|&x| subset.iter().any(|&y| self.leq(x, y)))
            .collect()
    }

    pub fn is_open(&self, subset: &[PointId]) -> bool {
        let mut hull = self.open_hull(subset);
        let mut s = subset.to_vec();
        s.sort();
        s.dedup();
        hull.dedup();
        hull == s
    }

    /// A point below every point, if any. In a space that is not T0 the
    /// first one in index order is returned.
    pub fn minimum(&self) -> Option<PointId> {
        self.points().find(|&x| self.points().all(|y| self.leq(x, y)))
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by their smallest point.
    pub fn path_components(&self) -> Vec<Vec<PointId>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<PointId>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            comp[start] = c;
            while let Some(x) = queue.pop_front() {
                members.push(PointId(x));
                for y in 0..n {
                    if comp[y] == usize::MAX && self.comparable(PointId(x), PointId(y)) {
                        comp[y] = c;
                        queue.push_back(y);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_path_connected(&self) -> bool {
        self.path_components().len() == 1
    }
}

impl Space<PointId> for FiniteSpace {
    fn contains(&self, p: &PointId) -> bool {
        p.0 < self.len()
    }
}
