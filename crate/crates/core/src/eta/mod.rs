//! Multiple η-values
//!
//! `η(s_1, ..., s_r) = Σ_{n>=1} 1 / (n^{s_1} (n+1)^{s_2} ... (n+r-1)^{s_r})`,
//! reduced exactly to the basis `{1, ζ(2), ζ(3), ...}`.

mod expr;
mod partial_fraction;

use std::fmt;

use num_traits::{One, Zero};

pub use expr::{Render, ZetaExpr};
pub use partial_fraction::{partial_fraction_shifted, PartialFractionTable};

use crate::error::{Error, Result};
use crate::harmonic::{bell_polynomial, HarmonicVector};
use crate::numeric::{binomial, factorial, int, pow_i, ApproxReal, Rational};

/// An admissible η argument list: every part `>= 1`, weight `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EtaIndex {
    s: Vec<u32>,
}

impl EtaIndex {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        if !s.is_empty() && s.iter().all(|&p| p >= 1) && s.iter().sum::<u32>() >= 2 {
            Ok(Self { s })
        } else {
            Err(Error::InadmissibleEta(s))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.s
    }

    pub fn depth(&self) -> usize {
        self.s.len()
    }

    pub fn weight(&self) -> u32 {
        self.s.iter().sum()
    }
}

impl fmt::Display for EtaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exact value of `η(s)`.
///
/// With `c[j][k]` from [`partial_fraction_shifted`], each `k >= 2` column
/// sums to `c[j][k] (ζ(k) - H_{j-1}^{(k)})`. The simple poles cancel in
/// aggregate and leave `-Σ_j c[j][1] H_{j-1}`.
pub fn eta_symbolic(idx: &EtaIndex) -> ZetaExpr {
    let table = partial_fraction_shifted(idx.parts());
    let max_k = idx.parts().iter().copied().max().unwrap_or(1) as usize;
    let harmonics: Vec<HarmonicVector> = (0..idx.depth()).map(|j| HarmonicVector::new(j as u32, max_k)).collect();
    let mut out = ZetaExpr::zero();
    for (j, k, c) in table.iter() {
        if c.is_zero() {
            continue;
        }
        let correction = c * harmonics[j - 1].get(k);
        out.add_constant(&-correction);
        if k >= 2 {
            out.add_zeta(k as u32, c.clone());
        }
    }
    out
}

/// Convenience wrapper for literal argument lists.
pub fn eta_of(parts: &[u32]) -> Result<ZetaExpr> {
    Ok(eta_symbolic(&EtaIndex::new(parts.to_vec())?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaMode {
    /// Direct summation of the defining series.
    Oracle,
    /// Numeric evaluation of [`eta_symbolic`].
    Fast,
}

pub const DEFAULT_ORACLE_MAX_N: u64 = 10_000_000;

/// Term cap for oracle summation, from `ZETALIKE_MAX_N` when set.
pub fn oracle_max_n() -> u64 {
    std::env::var("ZETALIKE_MAX_N").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORACLE_MAX_N)
}

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

pub fn eta_numeric(idx: &EtaIndex, mode: EtaMode, tolerance: f64) -> Result<ApproxReal> {
    match mode {
        EtaMode::Oracle => eta_series_oracle(idx, tolerance, oracle_max_n()),
        EtaMode::Fast => Ok(eta_symbolic(idx).evaluate(tolerance)),
    }
}

/// Sums the defining series up to `N` with `N^{1-w}/(w-1) <= tol/2`.
///
/// Each term is dominated by `n^{-w}`, so the integral bound covers the tail.
/// The midpoint is the partial sum.
pub fn eta_series_oracle(idx: &EtaIndex, tolerance: f64, max_n: u64) -> Result<ApproxReal> {
    let w = f64::from(idx.weight());
    let needed = (2.0 / (tolerance * (w - 1.0))).powf(1.0 / (w - 1.0)).ceil().max(1.0);
    if !needed.is_finite() || needed > max_n as f64 {
        let needed = if needed.is_finite() { needed as u64 } else { u64::MAX };
        return Err(Error::OracleCap { tolerance, needed, cap: max_n });
    }
    let cutoff = needed as u64;
    let mut sum = 0.0f64;
    for n in (1..=cutoff).rev() {
        let mut denom = 1.0f64;
        for (j, &s) in idx.parts().iter().enumerate() {
            denom *= (n as f64 + j as f64).powi(s as i32);
        }
        sum += 1.0 / denom;
    }
    let tail = (cutoff as f64).powf(1.0 - w) / (w - 1.0);
    let rounding = 2.0 * (cutoff as f64 + w + 4.0) * UNIT_ROUNDOFF * sum;
    Ok(ApproxReal::from_f64(sum, (tail + rounding) * (1.0 + 1e-12)))
}

/// `η(p, {1}^a)` from
/// `a! η(p,{1}^a) = Σ_{k=0}^{p-2} (-1)^k ζ(p-k) P_k(H_a) + Σ_{k=0}^{a-1} C(a,k+1) (-1)^{p+k-1} H_{k+1} / (k+1)^{p-1}`.
pub fn eta_hook_closed_form(p: u32, a: u32) -> Result<ZetaExpr> {
    if p < 2 {
        return Err(Error::InadmissibleEta(std::iter::once(p).chain(std::iter::repeat_n(1, a as usize)).collect()));
    }
    let h = HarmonicVector::new(a, p as usize);
    let mut out = ZetaExpr::zero();
    for k in 0..=(p - 2) {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let bell = bell_polynomial(k as usize, h.values());
        out.add_zeta(p - k, sign * bell);
    }
    let mut constant = Rational::zero();
    for k in 0..a {
        let sign = if (p + k - 1).is_multiple_of(2) { int(1) } else { int(-1) };
        let harmonic_k = HarmonicVector::new(k + 1, 1);
        constant +=
            sign * binomial(a, i64::from(k) + 1) * harmonic_k.get(1) * pow_i(&int(i64::from(k) + 1), -(p as i32 - 1));
    }
    out.add_constant(&constant);
    Ok(out.scale(&factorial(a).recip()))
}

/// Printed evaluation of `Σ_{α_1+α_2=q} η(α_1+1, α_2+1, 1)`:
/// `(-1)^{q+1} + 1/2 + (-1)^q 3/2^{q+2} + Σ_{k=0}^{q-1} (-1)^{k+1} (1 - 2^{-(k+1)}) ζ(q+1-k)`.
///
/// Every `ζ` argument is at least 2 for `k <= q-1`.
pub fn eta_restricted_triple_sum(q: u32) -> ZetaExpr {
    let sign = |e: u32| if e.is_multiple_of(2) { int(1) } else { int(-1) };
    let half = Rational::new(1.into(), 2.into());
    let mut constant = sign(q + 1) + &half;
    constant += sign(q) * int(3) * pow_i(&half, q as i32 + 2);
    let mut out = ZetaExpr::rational(constant);
    for k in 0..q {
        let weight = Rational::one() - pow_i(&half, k as i32 + 1);
        out.add_zeta(q + 1 - k, sign(k + 1) * weight);
    }
    out
}

/// `Σ_{α_1+α_2=q} η(α_1+1, α_2+1, 1)` by direct enumeration.
pub fn eta_restricted_triple_direct(q: u32) -> ZetaExpr {
    (0..=q).map(|a| eta_of(&[a + 1, q - a + 1, 1]).expect("weight >= 3")).sum()
}
