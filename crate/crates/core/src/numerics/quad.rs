//! Gauss-Legendre quadrature on an interval.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub a: f64,
    pub b: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Gauss-Legendre rule with `n` nodes on `(a, b)`.
    ///
    /// Nodes come from Newton iteration on P_n with the Chebyshev-like
    /// initial guess; exact for polynomials of degree <= 2n - 1.
    pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Self {
        assert!(n >= 1 && b > a);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = (n + 1) / 2;
        for i in 0..m {
            // root of P_n in (-1, 1), counted from the +1 end
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // map from (-1,1) to (a,b); roots from the cosine guess descend,
            // so index from both ends to get ascending nodes
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            nodes[i] = mid - half * x;
            nodes[n - 1 - i] = mid + half * x;
            weights[i] = half * w;
            weights[n - 1 - i] = half * w;
        }
        QuadratureRule { a, b, nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Weighted sum of samples aligned with the nodes.
    pub fn integrate(&self, samples: &[C64]) -> Result<C64> {
        if samples.len() != self.nodes.len() {
            return Err(Error::QuadratureMismatch {
                nodes: self.nodes.len(),
                samples: samples.len(),
            });
        }
        let mut acc = C64::new(0.0, 0.0);
        for (w, s) in self.weights.iter().zip(samples) {
            acc += s * w;
        }
        Ok(acc)
    }

    pub fn integrate_fn(&self, mut f: impl FnMut(f64) -> C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(x) * w;
        }
        acc
    }

    pub fn integrate_real(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(x) * w;
        }
        acc
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Public wrapper matching the operation contract: weighted sum of samples.
pub fn quad_integrate(rule: &QuadratureRule, samples: &[C64]) -> Result<C64> {
    rule.integrate(samples)
}
