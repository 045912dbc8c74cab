//! Transfer of strategies along a retraction `r: X -> A`.
//!
//! A man strategy on `A` lifts to `X` by playing against the retracted lion;
//! it never leaves `A`, so it can only be caught where the lion is in `A`,
//! and there the retracted lion is the lion itself. A lion strategy on `X`
//! projects to `A` by retracting its moves.

use crate::path::History;
use crate::strategy::{Strategy, StrategyError};
use alloc::vec::Vec;
use core::marker::PhantomData;

/// A continuous map onto a subspace that fixes the subspace pointwise.
pub trait Retraction<P, Q> {
    fn retract(&self, p: &P) -> Result<Q, StrategyError>;
    fn include(&self, q: &Q) -> P;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityRetraction;

impl<P: Clone> Retraction<P, P> for IdentityRetraction {
    fn retract(&self, p: &P) -> Result<P, StrategyError> {
        Ok(p.clone())
    }

    fn include(&self, q: &P) -> P {
        q.clone()
    }
}

/// `outer ∘ inner`: retract along `inner: P -> Q`, then `outer: Q -> R`.
pub struct Composed<R1, R2, Q> {
    pub inner: R1,
    pub outer: R2,
    _mid: PhantomData<fn() -> Q>,
}

impl<R1, R2, Q> Composed<R1, R2, Q> {
    pub fn new(inner: R1, outer: R2) -> Self {
        Composed { inner, outer, _mid: PhantomData }
    }
}

impl<R1: Clone, R2: Clone, Q> Clone for Composed<R1, R2, Q> {
    fn clone(&self) -> Self {
        Composed::new(self.inner.clone(), self.outer.clone())
    }
}

impl<P, Q, R, R1, R2> Retraction<P, R> for Composed<R1, R2, Q>
where
    R1: Retraction<P, Q>,
    R2: Retraction<Q, R>,
{
    fn retract(&self, p: &P) -> Result<R, StrategyError> {
        self.outer.retract(&self.inner.retract(p)?)
    }

    fn include(&self, r: &R) -> P {
        self.inner.include(&self.outer.include(r))
    }
}

/// Man strategy on `X` obtained from a man strategy on the subspace.
///
/// Like every strategy in this crate it is driven once per sample with a
/// growing history; the retracted history is cached between calls.
pub struct LiftedMan<R, S, Q> {
    retraction: R,
    inner: S,
    retracted: Vec<Q>,
}

impl<R: Clone, S: Clone, Q: Clone> Clone for LiftedMan<R, S, Q> {
    fn clone(&self) -> Self {
        LiftedMan {
            retraction: self.retraction.clone(),
            inner: self.inner.clone(),
            retracted: self.retracted.clone(),
        }
    }
}

pub fn lift_man_strategy<R, S, Q>(retraction: R, man: S) -> LiftedMan<R, S, Q> {
    LiftedMan { retraction, inner: man, retracted: Vec::new() }
}

impl<P, Q, R, S> Strategy<P> for LiftedMan<R, S, Q>
where
    R: Retraction<P, Q>,
    S: Strategy<Q>,
{
    fn respond(&mut self, t: f64, lion: &History<'_, P>) -> Result<P, StrategyError> {
        self.retracted.truncate(lion.len());
        for p in &lion.samples()[self.retracted.len()..] {
            self.retracted.push(self.retraction.retract(p)?);
        }
        let view = History::full(lion.times(), &self.retracted);
        let q = self.inner.respond(t, &view)?;
        Ok(self.retraction.include(&q))
    }
}

/// Lion strategy on the subspace obtained from a lion strategy on `X`.
pub struct ProjectedLion<R, S, P> {
    retraction: R,
    inner: S,
    embedded: Vec<P>,
}

impl<R: Clone, S: Clone, P: Clone> Clone for ProjectedLion<R, S, P> {
    fn clone(&self) -> Self {
        ProjectedLion {
            retraction: self.retraction.clone(),
            inner: self.inner.clone(),
            embedded: self.embedded.clone(),
        }
    }
}

pub fn project_lion_strategy<R, S, P>(retraction: R, lion: S) -> ProjectedLion<R, S, P> {
    ProjectedLion { retraction, inner: lion, embedded: Vec::new() }
}

impl<P, Q, R, S> Strategy<Q> for ProjectedLion<R, S, P>
where
    R: Retraction<P, Q>,
    S: Strategy<P>,
{
    fn respond(&mut self, t: f64, man: &History<'_, Q>) -> Result<Q, StrategyError> {
        self.embedded.truncate(man.len());
        for q in &man.samples()[self.embedded.len()..] {
            self.embedded.push(self.retraction.include(q));
        }
        let view = History::full(man.times(), &self.embedded);
        let p = self.inner.respond(t, &view)?;
        self.retraction.retract(&p)
    }
}
