use core::marker::PhantomData;

/// A path `[0, +inf) -> X`, evaluable at any instant.
pub trait Path<P> {
    fn at(&self, t: f64) -> P;
}

/// Adapts a closure into a [`Path`].
pub struct FnPath<F, P> {
    f: F,
    _point: PhantomData<fn() -> P>,
}

impl<F: Fn(f64) -> P, P> FnPath<F, P> {
    pub fn new(f: F) -> Self {
        FnPath { f, _point: PhantomData }
    }
}

impl<F: Fn(f64) -> P, P> Path<P> for FnPath<F, P> {
    fn at(&self, t: f64) -> P {
        (self.f)(t)
    }
}

impl<P, Q: Path<P> + ?Sized> Path<P> for &Q {
    fn at(&self, t: f64) -> P {
        (**self).at(t)
    }
}

/// The opponent samples a strategy may look at when choosing its move.
///
/// `times[i]`, `samples[i]` for `i < visible()` form the permitted window.
/// The backing storage can be longer (a recorded opponent path is known in
/// full to the engine); nothing past the window is reachable except through
/// [`History::lookahead`].
#[derive(Debug, Clone, Copy)]
pub struct History<'a, P> {
    times: &'a [f64],
    samples: &'a [P],
    visible: usize,
}

impl<'a, P> History<'a, P> {
    pub fn new(times: &'a [f64], samples: &'a [P], visible: usize) -> Self {
        let visible = visible.min(samples.len()).min(times.len());
        History { times, samples, visible }
    }

    /// Every sample of `samples` is visible.
    pub fn full(times: &'a [f64], samples: &'a [P]) -> Self {
        Self::new(times, samples, samples.len())
    }

    pub fn len(&self) -> usize {
        self.visible
    }

    pub fn is_empty(&self) -> bool {
        self.visible == 0
    }

    pub fn times(&self) -> &'a [f64] {
        &self.times[..self.visible]
    }

    pub fn samples(&self) -> &'a [P] {
        &self.samples[..self.visible]
    }

    pub fn get(&self, i: usize) -> Option<(f64, &'a P)> {
        (i < self.visible).then(|| (self.times[i], &self.samples[i]))
    }

    pub fn last(&self) -> Option<(f64, &'a P)> {
        self.visible.checked_sub(1).and_then(|i| self.get(i))
    }

    /// The window restricted to samples taken strictly before `t`.
    pub fn before(&self, t: f64) -> History<'a, P> {
        let n = self.times().partition_point(|&s| s < t);
        History { times: self.times, samples: self.samples, visible: n }
    }

    /// Reads `k` samples past the end of the permitted window.
    ///
    /// Calling this breaks causality. It exists so the causality tester can
    /// be exercised against a strategy that cheats.
    pub fn lookahead(&self, k: usize) -> Option<&'a P> {
        let i = self.visible.checked_add(k)?.checked_sub(1)?;
        if i < self.visible {
            return None;
        }
        self.samples.get(i)
    }
}
