use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

/// A smooth unconstrained objective with an analytic gradient.
///
/// Implementations must be pure: repeated evaluation at the same point
/// returns the same value, and no state is retained between calls.
pub trait Objective: Send + Sync {
    fn name(&self) -> &str;

    fn dim(&self) -> usize;

    fn value(&self, x: &[f64]) -> f64;

    /// Writes the gradient at `x` into `g`; `g.len() == self.dim()`.
    fn gradient(&self, x: &[f64], g: &mut [f64]);

    fn standard_start(&self) -> Vec<f64>;

    fn gradient_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.dim()];
        self.gradient(x, &mut g);
        g
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn value(&self, x: &[f64]) -> f64 {
        (**self).value(x)
    }
    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        (**self).gradient(x, g)
    }
    fn standard_start(&self) -> Vec<f64> {
        (**self).standard_start()
    }
}

/// Function and gradient evaluation counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EvalCounter {
    pub nf: u64,
    pub ng: u64,
}

/// Wraps an objective and counts every evaluation. Values pass through
/// untouched.
#[derive(Debug)]
pub struct Counted<O> {
    inner: O,
    nf: AtomicU64,
    ng: AtomicU64,
}

impl<O: Objective> Counted<O> {
    pub fn new(inner: O) -> Self {
        Self {
            inner,
            nf: AtomicU64::new(0),
            ng: AtomicU64::new(0),
        }
    }

    pub fn counts(&self) -> EvalCounter {
        EvalCounter {
            nf: self.nf.load(Ordering::Relaxed),
            ng: self.ng.load(Ordering::Relaxed),
        }
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<O: Objective> Objective for Counted<O> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.nf.fetch_add(1, Ordering::Relaxed);
        self.inner.value(x)
    }

    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        self.ng.fetch_add(1, Ordering::Relaxed);
        self.inner.gradient(x, g)
    }

    fn standard_start(&self) -> Vec<f64> {
        self.inner.standard_start()
    }
}

/// Attaches an [`EvalCounter`] to `obj`.
pub fn counted_objective<O: Objective>(obj: O) -> Counted<O> {
    Counted::new(obj)
}

/// Objective assembled from closures; handy in tests and examples.
pub struct FnObjective<F, G> {
    name: String,
    dim: usize,
    f: F,
    g: G,
    start: Vec<f64>,
}

impl<F, G> FnObjective<F, G>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
    G: Fn(&[f64], &mut [f64]) + Send + Sync,
{
    pub fn new(name: impl Into<String>, start: Vec<f64>, f: F, g: G) -> Self {
        Self {
            name: name.into(),
            dim: start.len(),
            f,
            g,
            start,
        }
    }
}

impl<F, G> Objective for FnObjective<F, G>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
    G: Fn(&[f64], &mut [f64]) + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn value(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        (self.g)(x, g)
    }
    fn standard_start(&self) -> Vec<f64> {
        self.start.clone()
    }
}

/// `f(x) = ½·a·‖x‖²`, started at `(2, …, 2)`.
pub fn scaled_sphere(dim: usize, a: f64) -> impl Objective {
    FnObjective::new(
        format!("SPHERE(a={a})"),
        vec![2.0; dim],
        move |x: &[f64]| 0.5 * a * x.iter().map(|v| v * v).sum::<f64>(),
        move |x: &[f64], g: &mut [f64]| {
            for (gi, xi) in g.iter_mut().zip(x) {
                *gi = a * xi;
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_each_call_once() {
        let obj = counted_objective(scaled_sphere(4, 1.0));
        assert_eq!(obj.counts(), EvalCounter { nf: 0, ng: 0 });
        let x = [1.0, 2.0, 3.0, 4.0];
        let mut g = [0.0; 4];
        for _ in 0..3 {
            obj.value(&x);
        }
        obj.gradient(&x, &mut g);
        obj.gradient(&x, &mut g);
        assert_eq!(obj.counts(), EvalCounter { nf: 3, ng: 2 });
    }

    #[test]
    fn wrapping_preserves_values_bitwise() {
        let raw = scaled_sphere(6, 3.7);
        let wrapped = counted_objective(scaled_sphere(6, 3.7));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let x: Vec<f64> = (0..6).map(|_| rng.gen_range(-5.0..5.0)).collect();
            assert_eq!(raw.value(&x).to_bits(), wrapped.value(&x).to_bits());
            let (a, b) = (raw.gradient_vec(&x), wrapped.gradient_vec(&x));
            for (u, v) in a.iter().zip(&b) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
        }
        assert_eq!(wrapped.counts(), EvalCounter { nf: 10, ng: 10 });
    }
}
