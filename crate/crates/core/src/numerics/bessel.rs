//! Bessel functions of the first kind, J_n, with derivatives.
//!
//! Two regimes, split at |z| = 12:
//!   * ascending power series — every term is computed from the previous one,
//!     and at |z| <= 12 the largest intermediate term stays below ~5e3, so
//!     cancellation costs at most 3-4 digits;
//!   * backward (Miller) recurrence normalized by the Neumann sum
//!     J_0 + 2*sum_k J_{2k} = 1, which also holds for complex argument.
//!
//! The disk model evaluates J_n(sqrt(lambda) r) for complex lambda, so the
//! complex-argument path is a first-class citizen here, not an afterthought.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

const SERIES_CROSSOVER: f64 = 12.0;
pub const MAX_ORDER: usize = 200;
pub const MAX_ARGUMENT: f64 = 1e4;

/// `(J_n(x), J_n'(x))` for real `x >= 0`, `0 <= n <= 200`, `x <= 1e4`.
pub fn bessel_j(n: usize, x: f64) -> Result<(f64, f64)> {
    if n > MAX_ORDER {
        return Err(Error::OutOfRange(format!("bessel order {n} > {MAX_ORDER}")));
    }
    if !(0.0..=MAX_ARGUMENT).contains(&x) {
        return Err(Error::OutOfRange(format!("bessel argument {x} outside [0, {MAX_ARGUMENT}]")));
    }
    let z = C64::new(x, 0.0);
    let (v, d) = bessel_j_complex(n, z)?;
    Ok((v.re, d.re))
}

/// `(J_n(z), J_n'(z))` for complex `z`.
pub fn bessel_j_complex(n: usize, z: C64) -> Result<(C64, C64)> {
    if n > MAX_ORDER {
        return Err(Error::OutOfRange(format!("bessel order {n} > {MAX_ORDER}")));
    }
    let r = z.norm();
    if !r.is_finite() || r > MAX_ARGUMENT {
        return Err(Error::OutOfRange(format!("bessel |argument| {r} outside [0, {MAX_ARGUMENT}]")));
    }
    if r == 0.0 {
        let v = if n == 0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
        let d = if n == 1 { C64::new(0.5, 0.0) } else { C64::new(0.0, 0.0) };
        return Ok((v, d));
    }
    if r <= SERIES_CROSSOVER {
        let jn = series_jn(n, z);
        let jn1 = series_jn(n + 1, z);
        // J_n'(z) = -J_{n+1}(z) + (n/z) J_n(z)
        let d = -jn1 + C64::new(n as f64, 0.0) / z * jn;
        Ok((jn, d))
    } else {
        miller_jn(n, z)
    }
}

/// Ascending series for J_n(z).
fn series_jn(n: usize, z: C64) -> C64 {
    let zh = z * 0.5;
    let zh2 = zh * zh;
    // leading term (z/2)^n / n!
    let mut term = C64::new(1.0, 0.0);
    for k in 1..=n {
        term = term * zh / (k as f64);
    }
    let mut sum = term;
    for m in 1..400 {
        let mf = m as f64;
        term = -term * zh2 / (mf * (mf + n as f64));
        sum += term;
        if term.norm() < 1e-17 * sum.norm().max(1e-280) {
            break;
        }
    }
    sum
}

/// Backward recurrence with Neumann-sum normalization; returns (J_n, J_n').
fn miller_jn(n: usize, z: C64) -> Result<(C64, C64)> {
    let r = z.norm();
    let m0 = (n.max(r.ceil() as usize)) + 1;
    // start high enough that the downward recurrence has converged to the
    // minimal solution by index n; extra margin grows with sqrt of the scale
    let mut start = m0 + 40 + (2.0 * (m0 as f64).sqrt()) as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut jp = C64::new(0.0, 0.0); // J_{k+1}
    let mut jc = C64::new(1e-30, 0.0); // J_k
    let mut neumann = C64::new(0.0, 0.0);
    let mut jn = C64::new(0.0, 0.0);
    let mut jn_minus = C64::new(0.0, 0.0);
    let mut jn_plus = C64::new(0.0, 0.0);
    for k in (1..=start).rev() {
        let jm = C64::new(2.0 * k as f64, 0.0) / z * jc - jp;
        jp = jc;
        jc = jm;
        // rescale to dodge overflow
        if jc.norm() > 1e250 {
            let f = 1e-250;
            jc *= f;
            jp *= f;
            neumann *= f;
            jn *= f;
            jn_minus *= f;
            jn_plus *= f;
        }
        let idx = k - 1; // jc now holds J_{idx}
        if idx % 2 == 0 && idx > 0 {
            neumann += jc * 2.0;
        }
        if idx == n {
            jn = jc;
        }
        if n > 0 && idx == n - 1 {
            jn_minus = jc;
        }
        if idx == n + 1 {
            jn_plus = jc;
        }
    }
    neumann += jc; // J_0
    if neumann.norm() == 0.0 {
        return Err(Error::OutOfRange("bessel normalization sum vanished".into()));
    }
    let jn = jn / neumann;
    let jn_plus = jn_plus / neumann;
    let jn_minus = jn_minus / neumann;
    let d = if n == 0 { -jn_plus } else { (jn_minus - jn_plus) * 0.5 };
    Ok((jn, d))
}

/// Positive zeros of J_n below `x_max`, ascending.
pub fn bessel_zeros(n: usize, x_max: f64) -> Result<Vec<f64>> {
    let f = |x: f64| bessel_j(n, x).map(|(v, _)| v).unwrap_or(f64::NAN);
    // J_n has no positive zero below ~n; zeros are spaced by roughly pi.
    let lo = (n as f64).max(0.1);
    if x_max <= lo {
        return Ok(vec![]);
    }
    let grid = ((x_max - lo) / 0.25).ceil() as usize + 2;
    super::roots::find_roots(&f, lo, x_max, grid, 1e-13)
}
