use super::{FiniteError, FiniteSpace, PointId, StepPath};
use alloc::collections::VecDeque;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

/// Points `c_0, ..., c_m` with each consecutive pair comparable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fence(pub Vec<PointId>);

impl Fence {
    pub fn is_valid(&self, space: &FiniteSpace) -> bool {
        !self.0.is_empty() && self.0.windows(2).all(|w| space.comparable(w[0], w[1]))
    }
}

/// Shortest fence from `a` to `b` in the comparability graph. Among
/// shortest fences the lexicographically smallest point sequence wins.
pub fn shortest_fence(space: &FiniteSpace, a: PointId, b: PointId) -> Option<Fence> {
    let n = space.len();
    let mut dist = vec![usize::MAX; n];
    dist[b.0] = 0;
    let mut queue = VecDeque::from([b.0]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            if dist[y] == usize::MAX && space.comparable(PointId(x), PointId(y)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if dist[a.0] == usize::MAX {
        return None;
    }
    let mut fence = vec![a];
    let mut cur = a.0;
    while cur != b.0 {
        cur = (0..n)
            .find(|&y| dist[y] != usize::MAX && dist[y] + 1 == dist[cur] && space.comparable(PointId(cur), PointId(y)))
            .expect("BFS layer has a predecessor");
        fence.push(PointId(cur));
    }
    Some(Fence(fence))
}

/// A continuous step path from `a` that sits at `b` from `arrival` on.
///
/// Walks the shortest fence with evenly spaced jumps. At a jump between
/// `c <= c'` the path takes the upper value `c'` at the jump instant (for
/// `c >= c'`, the value `c`). When the last step goes down, the jumps are
/// spread over `[0, arrival)` so the path is already at `b` at `arrival`.
pub fn fence_path(space: &FiniteSpace, a: PointId, b: PointId, arrival: f64) -> Result<StepPath, FiniteError> {
    if !(arrival.is_finite() && arrival > 0.0) {
        return Err(FiniteError::BadArrival);
    }
    let Fence(pts) = shortest_fence(space, a, b).ok_or_else(|| {
        FiniteError::Disconnected(space.name(a).to_string(), space.name(b).to_string())
    })?;
    let mut path = StepPath::constant(a);
    let m = pts.len() - 1;
    if m == 0 {
        return Ok(path);
    }
    let last_up = space.leq(pts[m - 1], pts[m]);
    let slots = if last_up { m } else { m + 1 };
    for j in 1..=m {
        let (c, d) = (pts[j - 1], pts[j]);
        let top = if space.leq(c, d) { d } else { c };
        let t = arrival * j as f64 / slots as f64;
        let t = if j == slots { arrival } else { t };
        path.push_jump(t, top, d).expect("jump times increase");
    }
    Ok(path)
}
