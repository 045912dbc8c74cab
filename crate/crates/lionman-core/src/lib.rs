//! Lion-and-man pursuit-evasion strategies as causal online transducers.
//!
//! A match is played on a discrete [`TimeGrid`]. Each player is either a
//! recorded path sampled on the grid or a [`Strategy`]: a state machine that
//! consumes the opponent's history and emits its own position, one sample at
//! a time. [`run_match`] executes a game, [`check_no_lookahead`] tests a
//! strategy for causality by forking the opponent's path, and the
//! [`retract`] combinators transfer strategies along retractions.
//!
//! Concrete spaces and strategies live in [`disk`] (the closed unit disk,
//! the circle, the unit square) and [`finite`] (finite Alexandroff spaces
//! given by a specialization preorder).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod causality;
pub mod disk;
pub mod engine;
pub mod finite;
pub mod path;
pub mod retract;
pub mod strategy;
pub mod time;

pub use causality::{check_no_lookahead, Clairvoyant, CausalityError, CausalityReport, Divergence};
pub use engine::{
    replay, run_match, CapturePredicate, MatchError, Player, Sample, Space, Trace,
};
pub use path::{FnPath, History, Path};
pub use retract::{
    lift_man_strategy, project_lion_strategy, Composed, IdentityRetraction, LiftedMan,
    ProjectedLion, Retraction,
};
pub use strategy::{EvalMode, Role, Strategy, StrategyError};
pub use time::{GridError, TimeGrid};
