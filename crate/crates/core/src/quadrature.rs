//! Tanh-sinh quadrature on `[0,1]` and `[0,1]^2`.
//!
//! Nodes carry both `x` and `1-x`, each computed without cancellation, so
//! integrands with logarithmic or algebraic singularities at either endpoint
//! can be evaluated accurately right up to it.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// A node `x` with its complement `1-x` and weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Node {
    pub x: f64,
    pub complement: f64,
    pub weight: f64,
}

const T_MAX: f64 = 4.0;

/// Number of halvings of the step `h = 1/2` tried before giving up.
pub const DEFAULT_MAX_LEVEL: u32 = 8;

/// Nodes for step `2^-level`; `x = 1/(1+e^{-π sinh t})`.
pub fn nodes(level: u32) -> Vec<Node> {
    let h = 0.5f64.powi(level as i32 + 1);
    let count = (T_MAX / h).round() as i64;
    (-count..=count)
        .map(|i| {
            let t = i as f64 * h;
            let s = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * s.abs()).exp();
            let small = e / (1.0 + e);
            let large = 1.0 / (1.0 + e);
            let (x, complement) = if s >= 0.0 { (large, small) } else { (small, large) };
            // dx/dt = (π/2) cosh t · sech²(s) / 2, sech²(s) = 4e/(1+e)²
            let weight = h * FRAC_PI_2 * t.cosh() * 2.0 * e / ((1.0 + e) * (1.0 + e));
            Node { x, complement, weight }
        })
        .filter(|n| n.weight > 0.0 && n.x > 0.0 && n.complement > 0.0)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error_estimate: f64,
    pub level: u32,
}

fn refine(tolerance: f64, max_level: u32, mut at_level: impl FnMut(u32) -> f64) -> Result<Estimate> {
    let mut previous = at_level(0);
    let mut last_diff = f64::INFINITY;
    for level in 1..=max_level {
        let value = at_level(level);
        let diff = (value - previous).abs();
        // the level difference overestimates the error of the finer level
        // once convergence is quadratic
        if diff <= tolerance && last_diff.is_finite() {
            return Ok(Estimate { value, error_estimate: diff, level });
        }
        last_diff = diff;
        previous = value;
    }
    Err(Error::Quadrature { tolerance, levels: max_level, estimate: last_diff })
}

pub fn integrate_unit(f: impl Fn(&Node) -> f64, tolerance: f64, max_level: u32) -> Result<Estimate> {
    refine(tolerance, max_level, |level| nodes(level).iter().map(|n| n.weight * f(n)).sum())
}

/// Product rule over the unit square.
pub fn integrate_unit_square(f: impl Fn(&Node, &Node) -> f64, tolerance: f64, max_level: u32) -> Result<Estimate> {
    refine(tolerance, max_level, |level| {
        let pts = nodes(level);
        pts.iter()
            .map(|outer| {
                let inner: f64 = pts.iter().map(|n| n.weight * f(outer, n)).sum();
                outer.weight * inner
            })
            .sum()
    })
}

/// `(1/(n! q!)) ∬_{0<t_1<t_2<1} log(t_2/t_1)^q (1-t_1)^{n-1} dt_1 dt_2 / t_2`,
/// computed on the square after `t_1 = t_2 u`.
pub fn eta_sum_integral(n: u32, q: u32, tolerance: f64) -> Result<Estimate> {
    let norm: f64 = (1..=n).chain(1..=q).map(f64::from).product();
    let integrand = |t2: &Node, u: &Node| {
        // -log u, accurate for u near 1
        let neg_log = if u.x > 0.5 { -(-u.complement).ln_1p() } else { -u.x.ln() };
        // 1 - t2 u = c2 + cu - c2 cu
        let gap = t2.complement + u.complement - t2.complement * u.complement;
        neg_log.powi(q as i32) * gap.powi(n as i32 - 1)
    };
    let est = integrate_unit_square(integrand, tolerance * norm, DEFAULT_MAX_LEVEL)?;
    Ok(Estimate { value: est.value / norm, error_estimate: est.error_estimate / norm, level: est.level })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_symmetric_and_sum_to_one() {
        let pts = nodes(4);
        let total: f64 = pts.iter().map(|n| n.weight).sum();
        assert!((total - 1.0).abs() < 1e-14, "{total}");
        for n in &pts {
            assert!((n.x + n.complement - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn endpoint_singularities() {
        let log = integrate_unit(|n| -n.x.ln(), 1e-12, DEFAULT_MAX_LEVEL).unwrap();
        assert!((log.value - 1.0).abs() < 1e-12);
        let sqrt = integrate_unit(|n| 1.0 / n.complement.sqrt(), 1e-10, DEFAULT_MAX_LEVEL).unwrap();
        assert!((sqrt.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn corner_singularity() {
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        let est = integrate_unit_square(
            |a, b| 1.0 / (a.complement + b.complement - a.complement * b.complement),
            1e-10,
            DEFAULT_MAX_LEVEL,
        )
        .unwrap();
        assert!((est.value - z2).abs() < 1e-10, "{}", est.value);
    }

    #[test]
    fn forced_case_is_one() {
        let est = eta_sum_integral(1, 0, 1e-12).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let err = integrate_unit(|n| 1.0 / n.x, 1e-8, 3).unwrap_err();
        assert!(matches!(err, Error::Quadrature { levels: 3, .. }));
    }
}
