//! Scenario files: an arena, a grid, and one spec per player.
//!
//! ```json
//! {
//!   "space": "disk",
//!   "grid": {"dt": 0.001, "horizon": 5.0},
//!   "lion": {"kind": "generated", "shape": "spiral"},
//!   "man": {"kind": "strategy", "name": "besicovitch"},
//!   "mode": "closed",
//!   "seed": 7
//! }
//! ```
//!
//! `space` is `"disk"`, `"circle"`, `"square"` or `{"finite": "space.json"}`.
//! Relative file names resolve against the scenario file's directory.

use crate::formats::{self, parse_disk_point, FormatError, PointNames, StepPathFile};
use crate::gen::{self, GenPath, Region, Shape};
use lionman_core::disk::{
    connect_path, BesicovitchMan, Circle, CircleMap, ConnectingPath, Continuum, Disk, DiskError, DiskPoint,
    FixedPointFreeMan, HausdorffLion, Square,
};
use lionman_core::finite::{AspaceLion, AvoidLast, CycleMan, FiniteError, FiniteSpace, PointId, ShadowMan, SitAt};
use lionman_core::{
    run_match, CapturePredicate, Clairvoyant, EvalMode, GridError, History, MatchError, Player, Role, Space,
    Strategy, StrategyError, TimeGrid, Trace,
};
use serde::Deserialize;
use serde_json::Value;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Space(#[from] FiniteError),
    #[error(transparent)]
    Disk(#[from] DiskError),
    #[error("{role:?}: {msg}")]
    Player { role: Role, msg: String },
    #[error("capture tolerance must be a nonnegative number, got {0}")]
    Tolerance(f64),
    #[error("two strategies must play in strict mode")]
    ClosedBetweenStrategies,
}

fn player_err(role: Role, msg: impl Into<String>) -> ScenarioError {
    ScenarioError::Player { role, msg: msg.into() }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub space: SpaceSpec,
    pub grid: GridSpec,
    pub lion: PlayerSpec,
    pub man: PlayerSpec,
    /// Capture distance. Defaults to `1e-9` in metric arenas; finite spaces
    /// always use identity.
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub mode: Mode,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceSpec {
    Disk,
    Circle,
    Square,
    Finite(PathBuf),
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub dt: f64,
    pub horizon: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Strict,
    Closed,
}

impl From<Mode> for EvalMode {
    fn from(m: Mode) -> EvalMode {
        match m {
            Mode::Strict => EvalMode::Strict,
            Mode::Closed => EvalMode::Closed,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PlayerSpec {
    /// Disk arenas: a JSON array of `[x, y]`, one per grid sample. Finite
    /// spaces: a step path file.
    Recorded { file: PathBuf },
    /// A seeded random path. `shape` applies to metric arenas, `jumps` and
    /// `start` to finite spaces.
    Generated {
        #[serde(default)]
        shape: Option<Shape>,
        #[serde(default)]
        jumps: Option<usize>,
        #[serde(default)]
        start: Option<Value>,
    },
    Strategy {
        name: StrategyName,
        #[serde(default)]
        start: Option<Value>,
        /// Rotation angle for `rotation`.
        #[serde(default)]
        turns: Option<f64>,
        /// Target point for `sit_at`.
        #[serde(default)]
        point: Option<String>,
        /// Step period for `cycle`.
        #[serde(default)]
        period: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyName {
    Besicovitch,
    Hausdorff,
    Antipodal,
    Rotation,
    Clairvoyant,
    Aspace,
    SitAt,
    Shadow,
    AvoidLast,
    Cycle,
}

/// Metric arenas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arena {
    Disk,
    Circle,
    Square,
}

impl Arena {
    pub fn region(self) -> Region {
        match self {
            Arena::Disk => Region::Disk,
            Arena::Circle => Region::Circle,
            Arena::Square => Region::Square,
        }
    }

    fn default_starts(self) -> (DiskPoint, DiskPoint) {
        match self {
            Arena::Disk => (DiskPoint::ORIGIN, DiskPoint::ONE),
            Arena::Circle => (DiskPoint::ONE, DiskPoint::new(-1.0, 0.0)),
            Arena::Square => (DiskPoint::ORIGIN, DiskPoint::new(1.0, 1.0)),
        }
    }
}

impl Space<DiskPoint> for Arena {
    fn contains(&self, p: &DiskPoint) -> bool {
        match self {
            Arena::Disk => Disk.contains(p),
            Arena::Circle => Circle.contains(p),
            Arena::Square => Square.contains(p),
        }
    }

    fn distance(&self, a: &DiskPoint, b: &DiskPoint) -> Option<f64> {
        Some(a.dist(*b))
    }
}

impl Continuum for Arena {
    fn interpolate(&self, a: DiskPoint, b: DiskPoint, s: f64) -> DiskPoint {
        match self {
            Arena::Disk => Disk.interpolate(a, b, s),
            Arena::Circle => Circle.interpolate(a, b, s),
            Arena::Square => Square.interpolate(a, b, s),
        }
    }

    fn probe_points(&self) -> Vec<DiskPoint> {
        match self {
            Arena::Disk => Disk.probe_points(),
            Arena::Circle => Circle.probe_points(),
            Arena::Square => Square.probe_points(),
        }
    }
}

/// Every strategy a scenario can name in a metric arena.
#[derive(Debug, Clone)]
pub enum DiskStrategy {
    Besicovitch(BesicovitchMan),
    Hausdorff(HausdorffLion<Arena, ConnectingPath<Arena>>),
    FixedPointFree(FixedPointFreeMan<CircleMap>),
    Clairvoyant(Clairvoyant<DiskPoint>),
}

impl Strategy<DiskPoint> for DiskStrategy {
    fn respond(&mut self, t: f64, h: &History<'_, DiskPoint>) -> Result<DiskPoint, StrategyError> {
        match self {
            DiskStrategy::Besicovitch(s) => s.respond(t, h),
            DiskStrategy::Hausdorff(s) => s.respond(t, h),
            DiskStrategy::FixedPointFree(s) => s.respond(t, h),
            DiskStrategy::Clairvoyant(s) => s.respond(t, h),
        }
    }
}

/// Every strategy a scenario can name in a finite space.
#[derive(Debug, Clone)]
pub enum FiniteStrategy<'a> {
    Aspace(AspaceLion<'a>),
    SitAt(SitAt),
    Shadow(ShadowMan),
    AvoidLast(AvoidLast),
    Cycle(CycleMan),
    Clairvoyant(Clairvoyant<PointId>),
}

impl Strategy<PointId> for FiniteStrategy<'_> {
    fn respond(&mut self, t: f64, h: &History<'_, PointId>) -> Result<PointId, StrategyError> {
        match self {
            FiniteStrategy::Aspace(s) => s.respond(t, h),
            FiniteStrategy::SitAt(s) => s.respond(t, h),
            FiniteStrategy::Shadow(s) => s.respond(t, h),
            FiniteStrategy::AvoidLast(s) => s.respond(t, h),
            FiniteStrategy::Cycle(s) => s.respond(t, h),
            FiniteStrategy::Clairvoyant(s) => s.respond(t, h),
        }
    }
}

/// A player after loading: a path sampled on the grid, or a strategy that is
/// built fresh for every run.
#[derive(Debug, Clone)]
pub enum Side<P, S> {
    Path(Vec<P>),
    Strategy(S),
}

impl<P, S> Side<P, S> {
    pub fn path(&self) -> Option<&[P]> {
        match self {
            Side::Path(p) => Some(p),
            Side::Strategy(_) => None,
        }
    }
}

/// A named finite-space strategy with its parameters resolved.
#[derive(Debug, Clone, Copy)]
pub enum FiniteChoice {
    Aspace { start: PointId },
    SitAt(PointId),
    Shadow { start: PointId },
    AvoidLast { start: PointId },
    Cycle { start: PointId, period: f64 },
    Clairvoyant { start: PointId },
}

#[derive(Debug, Clone)]
pub struct DiskGame {
    pub arena: Arena,
    pub grid: TimeGrid,
    pub lion: Side<DiskPoint, DiskStrategy>,
    pub man: Side<DiskPoint, DiskStrategy>,
    pub capture: CapturePredicate,
    pub mode: EvalMode,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct FiniteGame {
    pub space: FiniteSpace,
    pub grid: TimeGrid,
    pub lion: Side<PointId, FiniteChoice>,
    pub man: Side<PointId, FiniteChoice>,
    pub mode: EvalMode,
    pub seed: u64,
}

impl FiniteGame {
    pub fn build(&self, choice: FiniteChoice) -> FiniteStrategy<'_> {
        let n = self.space.len();
        match choice {
            FiniteChoice::Aspace { start } => {
                FiniteStrategy::Aspace(AspaceLion::new(&self.space, start).expect("checked at load time"))
            }
            FiniteChoice::SitAt(p) => FiniteStrategy::SitAt(SitAt(p)),
            FiniteChoice::Shadow { start } => FiniteStrategy::Shadow(ShadowMan { start }),
            FiniteChoice::AvoidLast { start } => FiniteStrategy::AvoidLast(AvoidLast { points: n, start }),
            FiniteChoice::Cycle { start, period } => FiniteStrategy::Cycle(CycleMan { points: n, start, period }),
            FiniteChoice::Clairvoyant { start } => FiniteStrategy::Clairvoyant(Clairvoyant { start }),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Game {
    Disk(DiskGame),
    Finite(FiniteGame),
}

/// Result of a simulation together with how to print its points.
pub enum Outcome {
    Disk(Trace<DiskPoint>),
    Finite(Trace<PointId>, FiniteSpace),
}

impl Outcome {
    pub fn captured_at(&self) -> Option<f64> {
        match self {
            Outcome::Disk(t) => t.captured_at,
            Outcome::Finite(t, _) => t.captured_at,
        }
    }

    pub fn min_distance(&self) -> Option<f64> {
        match self {
            Outcome::Disk(t) => t.min_distance,
            Outcome::Finite(t, _) => t.min_distance,
        }
    }

    /// One line: `captured at t=...` or `escaped, min_dist=...`.
    pub fn summary(&self) -> String {
        match (self.captured_at(), self.min_distance()) {
            (Some(t), _) => format!("captured at t={t:?}"),
            (None, Some(d)) => format!("escaped, min_dist={d:?}"),
            (None, None) => "escaped, min_dist=null".to_string(),
        }
    }

    pub fn write_jsonl<W: std::io::Write>(&self, out: &mut W) -> std::io::Result<()> {
        match self {
            Outcome::Disk(t) => formats::write_trace(out, &t.samples, &PointNames(None)),
            Outcome::Finite(t, space) => formats::write_trace(out, &t.samples, &PointNames(Some(space))),
        }
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }
}

impl Scenario {
    pub fn from_file(path: &Path) -> Result<(Scenario, PathBuf), ScenarioError> {
        let scenario: Scenario = formats::read_json(path)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((scenario, base))
    }

    /// Resolves files, seeds generated paths and checks every constraint
    /// that can be checked before a run.
    pub fn load(&self, base: &Path) -> Result<Game, ScenarioError> {
        let capture = match self.tolerance {
            None => CapturePredicate::DISK_DEFAULT,
            Some(eps) if eps.is_finite() && eps >= 0.0 => CapturePredicate::Tolerance(eps),
            Some(eps) => return Err(ScenarioError::Tolerance(eps)),
        };
        let both_strategies =
            matches!(self.lion, PlayerSpec::Strategy { .. }) && matches!(self.man, PlayerSpec::Strategy { .. });
        if both_strategies && self.mode == Mode::Closed {
            return Err(ScenarioError::ClosedBetweenStrategies);
        }
        if !both_strategies
            && !matches!(self.lion, PlayerSpec::Strategy { .. })
            && !matches!(self.man, PlayerSpec::Strategy { .. })
        {
            return Err(player_err(Role::Man, "at least one player must be a strategy"));
        }
        match &self.space {
            SpaceSpec::Disk => self.load_disk(Arena::Disk, capture, base).map(Game::Disk),
            SpaceSpec::Circle => self.load_disk(Arena::Circle, capture, base).map(Game::Disk),
            SpaceSpec::Square => self.load_disk(Arena::Square, capture, base).map(Game::Disk),
            SpaceSpec::Finite(file) => {
                let space = formats::read_space(&base.join(file))?;
                self.load_finite(space, base).map(Game::Finite)
            }
        }
    }

    fn seed_for(&self, role: Role) -> u64 {
        let salt = match role {
            Role::Lion => 0,
            Role::Man => 1,
        };
        self.seed.wrapping_mul(2).wrapping_add(salt)
    }

    fn load_disk(&self, arena: Arena, capture: CapturePredicate, base: &Path) -> Result<DiskGame, ScenarioError> {
        let grid = TimeGrid::with_events(self.grid.dt, self.grid.horizon, &[0.5, 1.0])?;
        let (lion_default, man_default) = arena.default_starts();
        let lion_start = self.disk_start(&self.lion, Role::Lion, lion_default)?;

        let man = match &self.man {
            PlayerSpec::Strategy { .. } => None,
            spec => Some(self.disk_path(spec, Role::Man, arena, &grid, base)?),
        };
        let lion = match &self.lion {
            PlayerSpec::Strategy { .. } => None,
            spec => Some(self.disk_path(spec, Role::Lion, arena, &grid, base)?),
        };
        let lion_start = lion.as_ref().map_or(lion_start, |p| p[0]);

        let man_side = match man {
            Some(p) => Side::Path(p),
            None => Side::Strategy(self.disk_strategy(&self.man, Role::Man, arena, lion_start, man_default)?),
        };
        let man_start = match &man_side {
            Side::Path(p) => p[0],
            Side::Strategy(DiskStrategy::Besicovitch(_)) => DiskPoint::ONE,
            Side::Strategy(DiskStrategy::FixedPointFree(s)) => s.start(),
            Side::Strategy(_) => self.disk_start(&self.man, Role::Man, man_default)?,
        };
        let lion_side = match lion {
            Some(p) => Side::Path(p),
            None => Side::Strategy(self.disk_strategy(&self.lion, Role::Lion, arena, lion_start, man_start)?),
        };
        Ok(DiskGame {
            arena,
            grid,
            lion: lion_side,
            man: man_side,
            capture,
            mode: self.mode.into(),
            seed: self.seed,
        })
    }

    fn disk_start(&self, spec: &PlayerSpec, role: Role, default: DiskPoint) -> Result<DiskPoint, ScenarioError> {
        let start = match spec {
            PlayerSpec::Strategy { start, .. } | PlayerSpec::Generated { start, .. } => start.as_ref(),
            PlayerSpec::Recorded { .. } => None,
        };
        match start {
            None => Ok(default),
            Some(v) => parse_disk_point(v).ok_or_else(|| player_err(role, "start must be [x, y]")),
        }
    }

    fn disk_path(
        &self,
        spec: &PlayerSpec,
        role: Role,
        arena: Arena,
        grid: &TimeGrid,
        base: &Path,
    ) -> Result<Vec<DiskPoint>, ScenarioError> {
        let path = match spec {
            PlayerSpec::Recorded { file } => {
                let raw: Vec<Value> = formats::read_json(&base.join(file))?;
                let pts: Option<Vec<DiskPoint>> = raw.iter().map(parse_disk_point).collect();
                let pts = pts.ok_or_else(|| player_err(role, "recorded samples must be [x, y] pairs"))?;
                if pts.len() < grid.len() {
                    return Err(player_err(
                        role,
                        format!("recorded path has {} samples, grid has {}", pts.len(), grid.len()),
                    ));
                }
                pts
            }
            PlayerSpec::Generated { shape, jumps, start } => {
                if jumps.is_some() || start.is_some() {
                    return Err(player_err(role, "\"jumps\" and \"start\" apply to finite spaces"));
                }
                let mut rng = gen::rng(self.seed_for(role));
                let path = GenPath::generate(&mut rng, shape.unwrap_or(Shape::Mixed), arena.region(), grid.horizon());
                grid.sample(&path)
            }
            PlayerSpec::Strategy { .. } => unreachable!("strategies are handled by the caller"),
        };
        if let Some(step) = path.iter().position(|p| !arena.contains(p)) {
            return Err(player_err(role, format!("sample {step} lies outside the arena")));
        }
        Ok(path)
    }

    fn disk_strategy(
        &self,
        spec: &PlayerSpec,
        role: Role,
        arena: Arena,
        lion_start: DiskPoint,
        target: DiskPoint,
    ) -> Result<DiskStrategy, ScenarioError> {
        let PlayerSpec::Strategy { name, turns, point, period, .. } = spec else {
            unreachable!("paths are handled by the caller");
        };
        if point.is_some() || period.is_some() {
            return Err(player_err(role, "\"point\" and \"period\" apply to finite spaces"));
        }
        if turns.is_some() && *name != StrategyName::Rotation {
            return Err(player_err(role, "\"turns\" applies to rotation"));
        }
        let start = self.disk_start(spec, role, target)?;
        let strategy = match (role, name) {
            (Role::Man, StrategyName::Besicovitch) if arena == Arena::Disk => {
                DiskStrategy::Besicovitch(BesicovitchMan::new())
            }
            (Role::Man, StrategyName::Antipodal) => {
                DiskStrategy::FixedPointFree(FixedPointFreeMan::new(&arena, CircleMap::Antipodal, lion_start)?)
            }
            (Role::Man, StrategyName::Rotation) => {
                let turns = turns.ok_or_else(|| player_err(role, "rotation needs \"turns\""))?;
                DiskStrategy::FixedPointFree(FixedPointFreeMan::new(&arena, CircleMap::Rotation(turns), lion_start)?)
            }
            (Role::Lion, StrategyName::Hausdorff) => {
                if !arena.contains(&lion_start) || !arena.contains(&target) {
                    return Err(player_err(role, "start positions lie outside the arena"));
                }
                DiskStrategy::Hausdorff(HausdorffLion::new(arena, connect_path(arena, lion_start, target)))
            }
            (_, StrategyName::Clairvoyant) => DiskStrategy::Clairvoyant(Clairvoyant { start }),
            (role, name) => {
                return Err(player_err(role, format!("{name:?} is not available to the {role:?} in a {arena:?}")))
            }
        };
        Ok(strategy)
    }

    fn load_finite(&self, space: FiniteSpace, base: &Path) -> Result<FiniteGame, ScenarioError> {
        let lion_aspace = matches!(self.lion, PlayerSpec::Strategy { name: StrategyName::Aspace, .. });
        let events: Vec<f64> = if lion_aspace {
            (1..=lionman_core::finite::DEFAULT_EVENTS).map(|k| 1.0 - (-(k as f64)).exp2()).collect()
        } else {
            vec![0.5, 1.0]
        };
        let grid = TimeGrid::with_events(self.grid.dt, self.grid.horizon, &events)?;
        let lion = self.finite_side(&self.lion, Role::Lion, &space, &grid, base, PointId(0))?;
        let man = self.finite_side(&self.man, Role::Man, &space, &grid, base, PointId(space.len() - 1))?;
        Ok(FiniteGame { space, grid, lion, man, mode: self.mode.into(), seed: self.seed })
    }

    fn finite_point(&self, v: Option<&Value>, role: Role, space: &FiniteSpace, default: PointId) -> Result<PointId, ScenarioError> {
        match v {
            None => Ok(default),
            Some(Value::String(name)) => space.id(name).ok_or_else(|| player_err(role, format!("unknown point {name:?}"))),
            Some(_) => Err(player_err(role, "points in finite spaces are names")),
        }
    }

    fn finite_side(
        &self,
        spec: &PlayerSpec,
        role: Role,
        space: &FiniteSpace,
        grid: &TimeGrid,
        base: &Path,
        default: PointId,
    ) -> Result<Side<PointId, FiniteChoice>, ScenarioError> {
        match spec {
            PlayerSpec::Recorded { file } => {
                let path = formats::read_json::<StepPathFile>(&base.join(file))?.build(space)?;
                if !lionman_core::finite::is_continuous(space, &path) {
                    return Err(player_err(role, "recorded step path is not continuous"));
                }
                Ok(Side::Path(grid.sample(&path)))
            }
            PlayerSpec::Generated { shape, jumps, start } => {
                if shape.is_some() {
                    return Err(player_err(role, "\"shape\" applies to metric arenas"));
                }
                let start = self.finite_point(start.as_ref(), role, space, default)?;
                let mut rng = gen::rng(self.seed_for(role));
                let path = gen::random_step_path(&mut rng, space, start, jumps.unwrap_or(3), grid.horizon());
                Ok(Side::Path(grid.sample(&path)))
            }
            PlayerSpec::Strategy { name, start, turns, point, period } => {
                if turns.is_some() {
                    return Err(player_err(role, "\"turns\" applies to metric arenas"));
                }
                if point.is_some() != (*name == StrategyName::SitAt) {
                    return Err(player_err(role, "\"point\" is required by sit_at and only by it"));
                }
                if period.is_some() != (*name == StrategyName::Cycle) {
                    return Err(player_err(role, "\"period\" is required by cycle and only by it"));
                }
                let start = self.finite_point(start.as_ref(), role, space, default)?;
                let choice = match (role, name) {
                    (Role::Lion, StrategyName::Aspace) => {
                        if !space.is_path_connected() {
                            return Err(FiniteError::NotPathConnected.into());
                        }
                        FiniteChoice::Aspace { start }
                    }
                    (_, StrategyName::SitAt) => {
                        let v = point.as_ref().map(|p| Value::String(p.clone()));
                        FiniteChoice::SitAt(self.finite_point(v.as_ref(), role, space, default)?)
                    }
                    (Role::Man, StrategyName::Shadow) => FiniteChoice::Shadow { start },
                    (Role::Man, StrategyName::AvoidLast) => FiniteChoice::AvoidLast { start },
                    (Role::Man, StrategyName::Cycle) => {
                        let period = period.expect("checked above");
                        if !(period.is_finite() && period > 0.0) {
                            return Err(player_err(role, "period must be positive"));
                        }
                        FiniteChoice::Cycle { start, period }
                    }
                    (_, StrategyName::Clairvoyant) => FiniteChoice::Clairvoyant { start },
                    (role, name) => {
                        return Err(player_err(role, format!("{name:?} is not available to the {role:?} in a finite space")))
                    }
                };
                Ok(Side::Strategy(choice))
            }
        }
    }
}

impl Game {
    pub fn grid(&self) -> &TimeGrid {
        match self {
            Game::Disk(g) => &g.grid,
            Game::Finite(g) => &g.grid,
        }
    }

    pub fn run(&self) -> Result<Outcome, MatchError> {
        match self {
            Game::Disk(g) => {
                let lion = match &g.lion {
                    Side::Path(p) => Player::Recorded(p.as_slice()),
                    Side::Strategy(s) => Player::Strategy(s.clone()),
                };
                let man = match &g.man {
                    Side::Path(p) => Player::Recorded(p.as_slice()),
                    Side::Strategy(s) => Player::Strategy(s.clone()),
                };
                let trace = run_match(&g.arena, &g.grid, lion, man, g.capture, g.mode)?;
                Ok(Outcome::Disk(trace))
            }
            Game::Finite(g) => {
                let lion = match &g.lion {
                    Side::Path(p) => Player::Recorded(p.as_slice()),
                    Side::Strategy(c) => Player::Strategy(g.build(*c)),
                };
                let man = match &g.man {
                    Side::Path(p) => Player::Recorded(p.as_slice()),
                    Side::Strategy(c) => Player::Strategy(g.build(*c)),
                };
                let trace = run_match(&g.space, &g.grid, lion, man, CapturePredicate::Exact, g.mode)?;
                Ok(Outcome::Finite(trace, g.space.clone()))
            }
        }
    }
}
