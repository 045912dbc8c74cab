//! The `lionman` command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a strategy or match contract
//! broke at run time, 4 a causality check failed, 5 the space has no
//! minimum.

use crate::formats::{self, SpaceFile, StepPathFile};
use crate::gen::{self, GenPath, Shape};
use crate::scenario::{DiskGame, FiniteGame, Game, Scenario, Side};
use crate::service::{self, ServiceConfig, SessionOptions};
use clap::{Parser, Subcommand, ValueEnum};
use lionman_core::finite::{falsify_man_strategy, AvoidLast, CycleMan, FalsifyError, FiniteSpace, PointId, ShadowMan, SitAt};
use lionman_core::{check_no_lookahead, CausalityError, CausalityReport, Clairvoyant, Role, TimeGrid};
use rand::Rng;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;
pub const EXIT_CAUSALITY: i32 = 4;
pub const EXIT_NO_MINIMUM: i32 = 5;

/// Default directory for output files when `--out` is not given.
pub const OUT_DIR_ENV: &str = "LIONMAN_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "lionman", version, about = "Lion-and-man pursuit games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play a scenario and write its trace as JSONL.
    Simulate {
        scenario: PathBuf,
        /// Trace file [default: trace.jsonl in $LIONMAN_OUT_DIR or the working directory]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test every strategy in a scenario against seeded forks of its opponent's path.
    Check {
        scenario: PathBuf,
        #[arg(long, default_value_t = 50)]
        forks: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Build a lion path that defeats a man strategy in a space with a minimum.
    Falsify {
        space: PathBuf,
        #[arg(long, value_enum)]
        man: FixtureMan,
        /// Where the man sits (sit-at) or starts (the others); defaults to the first point.
        #[arg(long)]
        point: Option<String>,
        /// Step period for cycle.
        #[arg(long, default_value_t = 0.25)]
        period: f64,
        /// Lion start; defaults to the first point.
        #[arg(long)]
        lion_start: Option<String>,
        #[arg(long, default_value_t = 1.0 / 64.0)]
        dt: f64,
        /// Path file [default: defeating_path.json in $LIONMAN_OUT_DIR or the working directory]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report properties of a finite space or write its dual.
    Space {
        space: PathBuf,
        #[arg(long = "check", value_enum, required = true)]
        checks: Vec<SpaceCheck>,
        /// Dual space file [default: <name>.dual.json in $LIONMAN_OUT_DIR or the working directory]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the live-play service.
    Serve {
        #[arg(long, env = "LIONMAN_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "LIONMAN_BIND", default_value = "127.0.0.1")]
        bind: std::net::IpAddr,
        /// Tick length in seconds.
        #[arg(long, env = "LIONMAN_TICK", default_value_t = 1.0 / 60.0)]
        dt: f64,
        /// Maximum lion speed in radii per second; off when absent.
        #[arg(long, env = "LIONMAN_SPEED_CAP")]
        speed_cap: Option<f64>,
        #[arg(long, env = "LIONMAN_TOLERANCE", default_value_t = 1e-9)]
        tolerance: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureMan {
    SitAt,
    Shadow,
    AvoidLast,
    Cycle,
    Clairvoyant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceCheck {
    T0,
    Connected,
    Dual,
}

fn default_out(name: &str) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => Path::new(&dir).join(name),
        None => PathBuf::from(name),
    }
}

/// Runs a parsed command and returns its exit code. Reports go to `out`,
/// errors to standard error.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> i32 {
    let result = match cli.command {
        Command::Simulate { scenario, out: file } => simulate(&scenario, file, out),
        Command::Check { scenario, forks, seed } => check(&scenario, forks, seed, out),
        Command::Falsify { space, man, point, period, lion_start, dt, out: file } => {
            falsify(&space, man, point, period, lion_start, dt, file, out)
        }
        Command::Space { space, checks, out: file } => space_cmd(&space, &checks, file, out),
        Command::Serve { port, bind, dt, speed_cap, tolerance } => {
            let defaults = SessionOptions { dt, speed_cap, tolerance };
            if let Err(e) = service::Session::new(service::SessionKind::Disk, defaults) {
                return fail(EXIT_INVALID, e);
            }
            serve(std::net::SocketAddr::new(bind, port), ServiceConfig { defaults })
        }
    };
    match result {
        Ok(()) => 0,
        Err((code, msg)) => fail(code, msg),
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("lionman: {msg}");
    code
}

type CmdResult = Result<(), (i32, String)>;

fn invalid(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INVALID, e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_RUNTIME, e.to_string())
}

fn load(path: &Path) -> Result<Game, (i32, String)> {
    let (scenario, base) = Scenario::from_file(path).map_err(invalid)?;
    scenario.load(&base).map_err(invalid)
}

fn simulate<W: Write>(path: &Path, file: Option<PathBuf>, out: &mut W) -> CmdResult {
    let game = load(path)?;
    let outcome = game.run().map_err(runtime)?;
    let file = file.unwrap_or_else(|| default_out("trace.jsonl"));
    std::fs::write(&file, outcome.to_jsonl()).map_err(|e| runtime(format!("{}: {e}", file.display())))?;
    writeln!(out, "{}", outcome.summary()).map_err(runtime)?;
    Ok(())
}

fn check<W: Write>(path: &Path, forks: usize, seed: u64, out: &mut W) -> CmdResult {
    let game = load(path)?;
    let mut rng = gen::rng(seed);
    let mut failed = false;
    for role in [Role::Lion, Role::Man] {
        let report = match &game {
            Game::Disk(g) => check_disk(g, role, forks, &mut rng),
            Game::Finite(g) => check_finite(g, role, forks, &mut rng),
        };
        let report = match report {
            None => continue,
            Some(r) => r.map_err(runtime)?,
        };
        match &report.first_divergence {
            None => writeln!(out, "{role:?}: passed ({} forks)", report.forks_checked),
            Some(d) => {
                failed = true;
                writeln!(
                    out,
                    "{role:?}: FAILED: fork at t={:?} changed the output at step {} (t={:?})",
                    d.fork_time, d.step, d.t
                )
            }
        }
        .map_err(runtime)?;
    }
    if failed {
        return Err((EXIT_CAUSALITY, "causality check failed".into()));
    }
    Ok(())
}

fn fork_times<R: Rng>(rng: &mut R, grid: &TimeGrid, forks: usize) -> Vec<f64> {
    (0..forks).map(|_| grid.times()[rng.gen_range(0..grid.len())]).collect()
}

fn check_disk<R: Rng>(
    g: &DiskGame,
    role: Role,
    forks: usize,
    rng: &mut R,
) -> Option<Result<CausalityReport, CausalityError>> {
    let (me, other) = match role {
        Role::Lion => (&g.lion, &g.man),
        Role::Man => (&g.man, &g.lion),
    };
    let Side::Strategy(strategy) = me else { return None };
    let base = match other {
        Side::Path(p) => p.clone(),
        Side::Strategy(_) => {
            let path = GenPath::generate(rng, Shape::Mixed, g.arena.region(), g.grid.horizon());
            g.grid.sample(&path)
        }
    };
    let times = fork_times(rng, &g.grid, forks);
    let region = g.arena.region();
    let mut fork_rng = gen::rng(rng.gen());
    let fork = |b: &[_], k: usize| gen::fork_disk(&mut fork_rng, region, b, k);
    Some(check_no_lookahead(strategy, &g.grid, &base, &times, fork, g.mode))
}

fn check_finite<R: Rng>(
    g: &FiniteGame,
    role: Role,
    forks: usize,
    rng: &mut R,
) -> Option<Result<CausalityReport, CausalityError>> {
    let (me, other) = match role {
        Role::Lion => (&g.lion, &g.man),
        Role::Man => (&g.man, &g.lion),
    };
    let Side::Strategy(choice) = me else { return None };
    let base = match other {
        Side::Path(p) => p.clone(),
        Side::Strategy(_) => {
            let path = gen::random_step_path(rng, &g.space, PointId(0), 3, g.grid.horizon());
            g.grid.sample(&path)
        }
    };
    let times = fork_times(rng, &g.grid, forks);
    let n = g.space.len();
    let mut fork_rng = gen::rng(rng.gen());
    let fork = |b: &[PointId], k: usize| gen::fork_finite(&mut fork_rng, n, b, k);
    Some(check_no_lookahead(&g.build(*choice), &g.grid, &base, &times, fork, g.mode))
}

fn point_arg(space: &FiniteSpace, name: Option<&str>) -> Result<PointId, (i32, String)> {
    match name {
        None => Ok(PointId(0)),
        Some(n) => space.id(n).ok_or_else(|| invalid(format!("unknown point {n:?}"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn falsify<W: Write>(
    path: &Path,
    man: FixtureMan,
    point: Option<String>,
    period: f64,
    lion_start: Option<String>,
    dt: f64,
    file: Option<PathBuf>,
    out: &mut W,
) -> CmdResult {
    let space = formats::read_space(path).map_err(invalid)?;
    let p = point_arg(&space, point.as_deref())?;
    let l = point_arg(&space, lion_start.as_deref())?;
    if !(period.is_finite() && period > 0.0) {
        return Err(invalid("period must be positive"));
    }
    let n = space.len();
    let result = match man {
        FixtureMan::SitAt => falsify_man_strategy(&space, l, &SitAt(p), dt),
        FixtureMan::Shadow => falsify_man_strategy(&space, l, &ShadowMan { start: p }, dt),
        FixtureMan::AvoidLast => falsify_man_strategy(&space, l, &AvoidLast { points: n, start: p }, dt),
        FixtureMan::Cycle => falsify_man_strategy(&space, l, &CycleMan { points: n, start: p, period }, dt),
        FixtureMan::Clairvoyant => falsify_man_strategy(&space, l, &Clairvoyant { start: p }, dt),
    };
    let f = match result {
        Ok(f) => f,
        Err(FalsifyError::NoMinimum) => return Err((EXIT_NO_MINIMUM, FalsifyError::NoMinimum.to_string())),
        Err(e @ FalsifyError::CausalityViolation { .. }) => return Err((EXIT_CAUSALITY, e.to_string())),
        Err(e @ (FalsifyError::Grid(_) | FalsifyError::BadStart)) => return Err(invalid(e)),
        Err(e) => return Err(runtime(e)),
    };
    let file = file.unwrap_or_else(|| default_out("defeating_path.json"));
    formats::write_json(&file, &StepPathFile::from_path(&space, &f.defeating_path)).map_err(runtime)?;
    writeln!(
        out,
        "captured at t={:?}: man answers {} on the defeating path (first coincidence t={:?}); path written to {}",
        f.capture_time,
        space.name(f.man_at_one),
        f.first_coincidence,
        file.display()
    )
    .map_err(runtime)
}

fn space_cmd<W: Write>(path: &Path, checks: &[SpaceCheck], file: Option<PathBuf>, out: &mut W) -> CmdResult {
    let space = formats::read_space(path).map_err(invalid)?;
    for check in checks {
        match check {
            SpaceCheck::T0 => writeln!(out, "t0: {}", space.is_t0()),
            SpaceCheck::Connected => writeln!(out, "connected: {}", space.is_path_connected()),
            SpaceCheck::Dual => {
                let file = file.clone().unwrap_or_else(|| {
                    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("space");
                    default_out(&format!("{stem}.dual.json"))
                });
                formats::write_json(&file, &SpaceFile::from_space(&space.dual())).map_err(runtime)?;
                writeln!(out, "dual: {}", file.display())
            }
        }
        .map_err(runtime)?;
    }
    Ok(())
}

fn serve(addr: std::net::SocketAddr, config: ServiceConfig) -> CmdResult {
    let rt = tokio::runtime::Runtime::new().map_err(runtime)?;
    eprintln!("lionman: serving on http://{addr}");
    rt.block_on(service::serve(addr, config)).map_err(runtime)
}
