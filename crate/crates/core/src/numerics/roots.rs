//! Root bracketing and bisection on a grid, with pole-bracket rejection.
//!
//! Secular functions like det(Theta - M(lambda)) carry poles at sigma(A_0)
//! where the sign flips without a zero; a bracket whose |f| is huge on both
//! flanks is treated as a pole crossing and discarded.

use crate::error::Result;

/// All simple roots of `f` on `(a, b)` found by sign changes on a uniform
/// grid of `grid` cells, refined by bisection until `|f| <= tol` or the
/// bracket is shorter than `tol`. Non-finite grid values are skipped.
pub fn find_roots(f: &dyn Fn(f64) -> f64, a: f64, b: f64, grid: usize, tol: f64) -> Result<Vec<f64>> {
    assert!(b > a && grid >= 1);
    let n = grid;
    let xs: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    // scale for the pole heuristic: median of finite |f| samples
    let mut mags: Vec<f64> = fs.iter().filter(|v| v.is_finite()).map(|v| v.abs()).collect();
    mags.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let median = if mags.is_empty() { 1.0 } else { mags[mags.len() / 2].max(1e-300) };
    let divergence = 1e6 * median.max(1e-12);

    let mut roots = Vec::new();
    for i in 0..n {
        let (x0, x1) = (xs[i], xs[i + 1]);
        let (f0, f1) = (fs[i], fs[i + 1]);
        if !f0.is_finite() || !f1.is_finite() {
            continue;
        }
        if f0 == 0.0 {
            push_unique(&mut roots, x0, tol);
            continue;
        }
        if f0.signum() == f1.signum() {
            continue;
        }
        // pole-adjacent bracket: huge on both flanks
        if f0.abs() > divergence && f1.abs() > divergence {
            continue;
        }
        if let Some(r) = bisect(f, x0, x1, f0, tol) {
            // a sign flip that bisection drives into ever larger |f| is a pole
            if f(r).abs() <= divergence {
                push_unique(&mut roots, r, tol);
            }
        }
    }
    if let Some(&last) = fs.last() {
        if last == 0.0 {
            push_unique(&mut roots, b, tol);
        }
    }
    Ok(roots)
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, flo: f64, tol: f64) -> Option<f64> {
    let sign_lo = flo.signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if !fm.is_finite() {
            // shrink toward the finite side
            hi = mid;
            continue;
        }
        if fm == 0.0 || fm.abs() <= tol || (hi - lo) <= tol.max(4.0 * f64::EPSILON * mid.abs()) {
            return Some(mid);
        }
        if fm.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

fn push_unique(roots: &mut Vec<f64>, r: f64, tol: f64) {
    let sep = (10.0 * tol).max(1e-12 * r.abs().max(1.0));
    if roots.iter().all(|&x| (x - r).abs() > sep) {
        roots.push(r);
    }
}

/// Golden-section refinement of a local minimum of `f` inside `(lo, hi)`.
pub fn refine_minimum(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    let inv_phi = 0.618_033_988_749_894_9;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_roots() {
        let f = |x: f64| x.sin();
        let roots = find_roots(&f, 1.0, 7.0, 200, 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - std::f64::consts::PI).abs() < 1e-10);
        assert!((roots[1] - 2.0 * std::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn no_real_roots() {
        let f = |x: f64| x * x + 1.0;
        let roots = find_roots(&f, -2.0, 2.0, 64, 1e-12).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn pole_brackets_are_discarded() {
        // tan has zeros at k*pi and poles at pi/2 + k*pi
        let f = |x: f64| x.tan();
        let roots = find_roots(&f, 0.5, 9.0, 4000, 1e-12).unwrap();
        let expect = [std::f64::consts::PI, 2.0 * std::f64::consts::PI];
        assert_eq!(roots.len(), 2, "roots: {roots:?}");
        for (r, e) in roots.iter().zip(expect) {
            assert!((r - e).abs() < 1e-9);
        }
    }

    #[test]
    fn each_simple_root_exactly_once() {
        let f = |x: f64| (x - 1.0) * (x - 2.0) * (x - 3.0);
        let roots = find_roots(&f, 0.0, 4.0, 997, 1e-13).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r - e).abs() < 1e-9);
        }
    }

    #[test]
    fn minimum_refinement() {
        let f = |x: f64| (x - 1.3).abs() + 0.1;
        let m = refine_minimum(&f, 0.0, 2.0, 80);
        assert!((m - 1.3).abs() < 1e-9);
    }
}
