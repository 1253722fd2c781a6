//! Limit quantities for typed `G(n, c/n)`: thresholds, core sizes and the
//! orientable edge fraction.
//!
//! Throughout, `q` is the probability that a vertex is free and
//! `Q(x, y) = P[Poisson(x) ≥ y]`.

mod report;

pub use report::ThresholdReport;

use crate::error::{Error, Result};

const SOLVER_HI: f64 = 50.0;
const SCAN_LO: f64 = 1e-6;
const SCAN_POINTS: usize = 4000;

fn check_q(q: f64) -> Result<()> {
    if (0.0..=1.0).contains(&q) {
        Ok(())
    } else {
        Err(Error::domain(format!("q must lie in [0, 1], got {q}")))
    }
}

fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("c must be finite and >= 0, got {c}")))
    }
}

/// `Q(x, y) = e^{-x} Σ_{j ≥ y} x^j / j!`.
pub fn poisson_tail(x: f64, y: u32) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!("Poisson mean must be >= 0, got {x}")));
    }
    Ok(tail(x, y))
}

// Sums the tail directly when it is small, otherwise subtracts the head, so
// neither side loses precision to cancellation.
pub(crate) fn tail(x: f64, y: u32) -> f64 {
    if y == 0 {
        return 1.0;
    }
    if x == 0.0 {
        return 0.0;
    }
    if y == 1 {
        return -(-x).exp_m1();
    }
    if x < y as f64 {
        let mut term = (-x).exp();
        for j in 1..=y {
            term *= x / j as f64;
        }
        let mut sum = 0.0;
        let mut j = y;
        while term > sum * 1e-17 {
            sum += term;
            j += 1;
            term *= x / j as f64;
        }
        sum
    } else {
        let mut term = (-x).exp();
        let mut head = 0.0;
        for j in 0..y {
            head += term;
            term *= x / (j + 1) as f64;
        }
        (1.0 - head).max(0.0)
    }
}

/// `(1−q)Q(ξ,1) + qQ(ξ,2)`: probability that a vertex keeps enough
/// neighbours in the core recursion.
fn numer(xi: f64, q: f64) -> f64 {
    (1.0 - q) * tail(xi, 1) + q * tail(xi, 2)
}

fn denom(xi: f64, q: f64) -> f64 {
    (1.0 - q) * tail(xi, 2) + 2.0 * q * tail(xi, 3)
}

/// `f(ξ, q) = ξ[(1−q)Q(ξ,1) + qQ(ξ,2)] / [(1−q)Q(ξ,2) + 2qQ(ξ,3)]`.
pub fn f_ratio(xi: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!("f needs xi > 0, got {xi}")));
    }
    Ok(xi * numer(xi, q) / denom(xi, q))
}

/// `ψ(ξ, q) = ξ / (1 − e^{−ξ} − qξe^{−ξ})`.
pub fn psi(xi: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!("psi needs xi > 0, got {xi}")));
    }
    Ok(xi / (-(-xi).exp_m1() - q * xi * (-xi).exp()))
}

// Same value as `psi`, through the Poisson tails; accurate near 0.
fn psi_tails(xi: f64, q: f64) -> f64 {
    xi / numer(xi, q)
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("x must lie in [0, 1], got {x}")))
    }
}

/// `Δ(x) = x − (1−q)Q(cx,1) − qQ(cx,2)`.
pub fn delta(x: f64, c: f64, q: f64) -> Result<f64> {
    check_unit(x)?;
    check_c(c)?;
    check_q(q)?;
    Ok(delta_raw(x, c, q))
}

fn delta_raw(x: f64, c: f64, q: f64) -> f64 {
    x - numer(c * x, q)
}

/// `𝓕ᴬ(x) = 1 − (1 − g)² + (2/c)[(1−q)Q(cx,2) + 2qQ(cx,3)]` with
/// `g = 1 − (1−q)Q(cx,1) − qQ(cx,2)`.
pub fn cal_f(x: f64, c: f64, q: f64) -> Result<f64> {
    check_unit(x)?;
    check_c(c)?;
    check_q(q)?;
    if c == 0.0 {
        return Err(Error::domain("calF needs c > 0"));
    }
    Ok(cal_f_raw(x, c, q))
}

fn cal_f_raw(x: f64, c: f64, q: f64) -> f64 {
    let cx = c * x;
    let g = 1.0 - numer(cx, q);
    1.0 - (1.0 - g).powi(2) + 2.0 / c * denom(cx, q)
}

/// Bisection on a bracket with `sign(h(lo)) != sign(h(hi))`.
fn bisect(h: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let lo_neg = h(lo) < 0.0;
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (h(mid) < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Log-spaced grid on `[lo, hi]`.
fn log_grid(lo: f64, hi: f64, points: usize) -> impl Iterator<Item = f64> {
    let ratio = (hi / lo).ln() / (points - 1) as f64;
    (0..points).map(move |k| {
        if k + 1 == points {
            hi
        } else {
            lo * (ratio * k as f64).exp()
        }
    })
}

/// Positive root of `f(ξ, q) = 2`, defined for `q > 1/2`.
pub fn xi_star(q: f64) -> Result<f64> {
    check_q(q)?;
    if q <= 0.5 {
        return Err(Error::domain(format!(
            "f(xi, q) = 2 has no positive root for q = {q} <= 1/2"
        )));
    }
    let h = |xi: f64| xi * numer(xi, q) / denom(xi, q) - 2.0;
    let grid: Vec<f64> = log_grid(SCAN_LO, SOLVER_HI, SCAN_POINTS).collect();
    let values: Vec<f64> = grid.iter().map(|&x| h(x)).collect();
    let changes: Vec<usize> = (1..grid.len())
        .filter(|&k| (values[k - 1] < 0.0) != (values[k] < 0.0))
        .collect();
    match changes.as_slice() {
        [k] => Ok(bisect(h, grid[k - 1], grid[*k])),
        _ => Err(Error::Solver(format!(
            "expected one sign change of f - 2 on ({SCAN_LO}, {SOLVER_HI}) at q = {q}, found {}",
            changes.len()
        ))),
    }
}

/// Orientability threshold: `1/(1−q)` for `q ≤ 1/2`, else
/// `ξ*/[(1−q)Q(ξ*,1) + qQ(ξ*,2)]`.
pub fn c_star(q: f64) -> Result<f64> {
    check_q(q)?;
    if q <= 0.5 {
        return Ok(1.0 / (1.0 - q));
    }
    let xi = xi_star(q)?;
    Ok(psi_tails(xi, q))
}

/// Minimiser of `ψ(·, q)` for `q > 1/2`: the root of
/// `e^ξ − 1 − ξ − qξ² = 0`.
pub fn psi_argmin(q: f64) -> Result<f64> {
    check_q(q)?;
    if q <= 0.5 {
        return Err(Error::domain(format!(
            "psi has no interior minimum for q = {q} <= 1/2"
        )));
    }
    // (e^ξ − 1 − ξ)/ξ² − q, with the quotient summed as a series near 0
    let h = |xi: f64| {
        let ratio = if xi < 1e-2 {
            let mut term = 0.5;
            let mut sum = 0.0;
            for k in 0..12 {
                sum += term;
                term *= xi / (k + 3) as f64;
            }
            sum
        } else {
            (xi.exp_m1() - xi) / (xi * xi)
        };
        ratio - q
    };
    if h(0.0) >= 0.0 {
        return Err(Error::Solver(format!(
            "no sign change for psi minimum at q = {q}"
        )));
    }
    Ok(bisect(h, 0.0, SOLVER_HI))
}

/// Core threshold `inf_{ξ>0} ψ(ξ, q)`.
pub fn c_tilde(q: f64) -> Result<f64> {
    check_q(q)?;
    if q <= 0.5 {
        return Ok(1.0 / (1.0 - q));
    }
    Ok(psi_tails(psi_argmin(q)?, q))
}

/// Largest solution of `ξ = c(1−q)Q(ξ,1) + cqQ(ξ,2)`; 0 below the core
/// threshold.
///
/// Positive solutions are the points where `ψ(ξ) = c`. Beyond its minimum
/// `ψ` is increasing and `ψ(ξ) ≥ ξ`, so the largest solution is bracketed
/// by the minimiser and `c`. At `c = c̃(q)` with `q > 1/2` the positive
/// root is returned.
pub fn xi_tilde(q: f64, c: f64) -> Result<f64> {
    check_q(q)?;
    check_c(c)?;
    let threshold = c_tilde(q)?;
    let lo = if q <= 0.5 {
        if c <= threshold {
            return Ok(0.0);
        }
        1e-300
    } else {
        if c < threshold {
            return Ok(0.0);
        }
        psi_argmin(q)?
    };
    let h = |xi: f64| psi_tails(xi, q) - c;
    if h(c) <= 0.0 {
        return Ok(c);
    }
    let root = bisect(h, lo, c);
    Ok(if h(lo) >= 0.0 { lo } else { root })
}

/// Largest root of `Δ` in `[0, 1]`, found by scanning down from 1.
pub fn x_tilde(q: f64, c: f64) -> Result<f64> {
    check_q(q)?;
    check_c(c)?;
    let d = |x: f64| delta_raw(x, c, q);
    let mut grid: Vec<f64> = (0..=SCAN_POINTS)
        .map(|k| k as f64 / SCAN_POINTS as f64)
        .collect();
    grid.extend(log_grid(1e-12, 1.0 / SCAN_POINTS as f64, 400));
    grid.sort_by(|a, b| b.total_cmp(a));
    grid.dedup();
    let mut prev = 1.0;
    for &x in &grid {
        if x > 0.0 && d(x) < 0.0 {
            return Ok(bisect(d, x, prev));
        }
        if x > 0.0 {
            prev = x;
        }
    }
    Ok(0.0)
}

/// Predicted 2.5-core size, scaled by `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreFractions {
    /// Sliders in the core per vertex.
    pub n1: f64,
    /// Free vertices in the core per vertex.
    pub n2: f64,
    /// Twice the core edges per vertex.
    pub half_edges: f64,
    /// False when `ξ̃ = 0`, in which case all fractions are 0.
    pub above_threshold: bool,
}

/// Limits of `n₁(Core)/n`, `n₂(Core)/n` and `2m(Core)/n`.
pub fn core_fractions(q: f64, c: f64) -> Result<CoreFractions> {
    let xi = xi_tilde(q, c)?;
    if xi == 0.0 {
        return Ok(CoreFractions {
            n1: 0.0,
            n2: 0.0,
            half_edges: 0.0,
            above_threshold: false,
        });
    }
    Ok(CoreFractions {
        n1: (1.0 - q) * tail(xi, 2),
        n2: q * tail(xi, 3),
        half_edges: xi * numer(xi, q),
        above_threshold: true,
    })
}

/// Limit of `n(Core+)/n`: `1 − e^{−ξ̃} − qξ̃e^{−ξ̃}`, 0 below threshold.
pub fn core_plus_fraction(q: f64, c: f64) -> Result<f64> {
    let xi = xi_tilde(q, c)?;
    Ok(numer(xi, q))
}

/// Limit of the largest orientable fraction of the edges,
/// `min(1, 𝓕ᴬ(x̃))`.
pub fn orientable_fraction_limit(q: f64, c: f64) -> Result<f64> {
    check_c(c)?;
    if c == 0.0 {
        return Ok(1.0);
    }
    let x = x_tilde(q, c)?;
    Ok(cal_f_raw(x, c, q).min(1.0))
}

/// Offspring means `p¹₂ = (1−q)e^{−ξ̃}c` and `p²₃ = q(ξ̃c/2)e^{−ξ̃}` for
/// the degree-2 sliders and degree-3 free vertices of the core.
pub fn branching_coeffs(q: f64, c: f64) -> Result<(f64, f64)> {
    let xi = xi_tilde(q, c)?;
    if xi == 0.0 {
        return Err(Error::domain(format!("no core at q = {q}, c = {c}")));
    }
    let decay = (-xi).exp();
    Ok(((1.0 - q) * decay * c, q * (xi * c / 2.0) * decay))
}
