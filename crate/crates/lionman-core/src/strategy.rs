use crate::path::History;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Lion,
    Man,
}

impl Role {
    pub fn opponent(self) -> Role {
        match self {
            Role::Lion => Role::Man,
            Role::Man => Role::Lion,
        }
    }
}

/// How much of the opponent's path a strategy sees when moving at sample `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalMode {
    /// Opponent samples at steps `< j` only. Required when both players are
    /// strategies, since they move simultaneously.
    Strict,
    /// Opponent samples at steps `<= j`. Only valid against a recorded path:
    /// for a continuous opponent in a Hausdorff space the value at `t` is the
    /// limit of the values before `t`.
    Closed,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StrategyError {
    #[error("retraction undefined at an opponent sample")]
    RetractionUndefined,
    #[error("strategy needs opponent history at t = {0} but none is available")]
    MissingHistory(f64),
    #[error("{0}")]
    Contract(&'static str),
}

/// A causal online strategy.
///
/// The engine calls [`Strategy::respond`] once per grid sample, in time
/// order, with a history that grows by at most one sample per call. The
/// returned position is the player's location at `t`. Implementations must be
/// deterministic and may only read the samples inside the history window.
pub trait Strategy<P> {
    fn respond(&mut self, t: f64, opponent: &History<'_, P>) -> Result<P, StrategyError>;
}

impl<P, S: Strategy<P> + ?Sized> Strategy<P> for alloc::boxed::Box<S> {
    fn respond(&mut self, t: f64, opponent: &History<'_, P>) -> Result<P, StrategyError> {
        (**self).respond(t, opponent)
    }
}
