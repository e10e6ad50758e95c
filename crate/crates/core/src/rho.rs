//! Multiple ρ-values
//!
//! `ρ(α_1+1, ..., α_r+1)` is the nested sum over `n_1 < ... < n_r` of
//! `Π_j 1/(n_j + α_1 + ... + α_{j-1})_{α_j+1}`. Arguments are always given in
//! printed form; the shift to `α_j = s_j - 1` happens once, in [`RhoIndex`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::weak_compositions;
use crate::error::{Error, Result};
use crate::harmonic::mzv_star_truncated;
use crate::numeric::{factorial, factorial_int, int, pow_i, rising_factorial, ApproxReal, Rational};

/// An admissible ρ argument list: every part `>= 1`, the last part `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RhoIndex {
    s: Vec<u32>,
}

impl RhoIndex {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        let admissible = !s.is_empty() && s.iter().all(|&p| p >= 1) && s.last().is_some_and(|&p| p >= 2);
        if admissible {
            Ok(Self { s })
        } else {
            Err(Error::InadmissibleRho(s))
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

    /// `α_j = s_j - 1`.
    pub fn alpha(&self) -> Vec<u32> {
        self.s.iter().map(|p| p - 1).collect()
    }

    /// `α_k + ... + α_r` for every `k`; all positive since `α_r >= 1`.
    fn suffix_sums(&self) -> Vec<u32> {
        let alpha = self.alpha();
        let mut out = vec![0; alpha.len()];
        let mut acc = 0;
        for (slot, a) in out.iter_mut().zip(alpha.iter()).rev() {
            acc += a;
            *slot = acc;
        }
        out
    }

    /// `α_1 + ... + α_{j-1}` for every `j`.
    fn prefix_offsets(&self) -> Vec<u32> {
        let mut acc = 0;
        self.alpha()
            .iter()
            .map(|a| {
                let before = acc;
                acc += a;
                before
            })
            .collect()
    }
}

impl fmt::Display for RhoIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ρ(s) = 1 / (|α|! Π_k (α_k + ... + α_r))`.
pub fn rho_exact(idx: &RhoIndex) -> Rational {
    let suffix = idx.suffix_sums();
    let mut denom = factorial_int(suffix[0]);
    for s in &suffix {
        denom *= BigInt::from(*s);
    }
    Rational::new(BigInt::one(), denom)
}

fn rho_of(parts: Vec<u32>) -> Rational {
    rho_exact(&RhoIndex::new(parts).expect("generated index is admissible"))
}

/// Exact partial sum of the defining series over `n_1 < ... < n_r <= N`.
///
/// Evaluated level by level: the depth-`j` prefix sum at `n` is the depth-`j`
/// factor at `n` times the depth-`(j-1)` prefix sum at `n-1`.
pub fn rho_series_partial(idx: &RhoIndex, cutoff: u32) -> Rational {
    rho_prefix_sums(idx, cutoff).pop().expect("depth >= 1")
}

/// `F_0(N), ..., F_r(N)`, the prefix partial sums of every depth.
fn rho_prefix_sums(idx: &RhoIndex, cutoff: u32) -> Vec<Rational> {
    let alpha = idx.alpha();
    let offsets = idx.prefix_offsets();
    let r = alpha.len();
    let mut prefix = vec![Rational::zero(); r + 1];
    prefix[0] = Rational::one();
    for n in 1..=cutoff {
        for j in (1..=r).rev() {
            let base = int(i64::from(n) + i64::from(offsets[j - 1]));
            let factor = rising_factorial(&base, alpha[j - 1] + 1).recip();
            let add = factor * &prefix[j - 1];
            prefix[j] += add;
        }
    }
    prefix
}

/// Exact tail `ρ(s) - partial(N)`: splitting each missing tuple at its first
/// index above `N`, the part above telescopes in closed form.
pub fn rho_series_tail(idx: &RhoIndex, cutoff: u32) -> Rational {
    let prefix = rho_prefix_sums(idx, cutoff);
    let suffix = idx.suffix_sums();
    let offsets = idx.prefix_offsets();
    let mut tail = Rational::zero();
    for k in 0..idx.depth() {
        let chain: BigInt = suffix[k..].iter().map(|&s| BigInt::from(s)).product();
        let base = int(i64::from(cutoff) + 1 + i64::from(offsets[k]));
        let above = (rising_factorial(&base, suffix[k]) * Rational::from_integer(chain)).recip();
        tail += &prefix[k] * above;
    }
    tail
}

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

pub const RHO_ORACLE_MAX_N: u64 = 1 << 28;

/// Floating point evaluation of the defining series with a certified bound.
///
/// Sums every tuple with `n_r <= N`, doubling `N` until the tail (the same
/// split as [`rho_series_tail`]) plus accumulated rounding is at most `tol`.
/// The returned midpoint is the partial sum itself.
pub fn rho_series_oracle(idx: &RhoIndex, tol: f64, max_n: u64) -> Result<ApproxReal> {
    let alpha = idx.alpha();
    let offsets = idx.prefix_offsets();
    let suffix = idx.suffix_sums();
    let r = alpha.len();
    let weight = f64::from(idx.weight());
    let chain: Vec<f64> = (0..r).map(|k| suffix[k..].iter().map(|&s| f64::from(s)).product()).collect();

    let mut prefix = vec![0.0f64; r + 1];
    prefix[0] = 1.0;
    let mut n: u64 = 0;
    let mut checkpoint: u64 = 1024;
    loop {
        while n < checkpoint {
            n += 1;
            let nf = n as f64;
            for j in (1..=r).rev() {
                let base = nf + f64::from(offsets[j - 1]);
                let mut poch = 1.0;
                for i in 0..=alpha[j - 1] {
                    poch *= base + f64::from(i);
                }
                prefix[j] += prefix[j - 1] / poch;
            }
        }
        let nf = n as f64;
        let mut tail = 0.0;
        for k in 0..r {
            let base = nf + 1.0 + f64::from(offsets[k]);
            let mut poch = 1.0;
            for i in 0..suffix[k] {
                poch *= base + f64::from(i);
            }
            tail += prefix[k] / (poch * chain[k]);
        }
        let partial = prefix[r];
        // γ-style bound: each level accumulates n sums of terms carrying
        // O(weight) roundings.
        let rel = 2.0 * r as f64 * (nf + weight + 8.0) * UNIT_ROUNDOFF;
        let bound = (tail * (1.0 + rel) + rel * partial) * (1.0 + 1e-12);
        if bound <= tol {
            return Ok(ApproxReal::from_f64(partial, bound));
        }
        if checkpoint >= max_n {
            return Err(Error::OracleCap { tolerance: tol, needed: checkpoint.saturating_mul(2), cap: max_n });
        }
        checkpoint = (checkpoint * 2).min(max_n);
    }
}

/// Both sides of `Σ_{|s|=m} ρ(s_1+1, ..., s_{r-1}+1, s_r+2) = ζ_{m+1}^⋆({1}^{r-1}) / ((m+1)(m+1)!)`.
pub fn rho_sum_fixed_weight(m: u32, r: usize) -> (Rational, Rational) {
    assert!(r >= 1, "depth must be positive");
    let lhs = weak_compositions(m, r)
        .map(|c| {
            let mut parts: Vec<u32> = c.parts().iter().map(|p| p + 1).collect();
            *parts.last_mut().expect("r >= 1") += 1;
            rho_of(parts)
        })
        .fold(Rational::zero(), |a, b| a + b);
    let star = mzv_star_truncated(m + 1, r - 1, &Rational::zero()).expect("no poles at s = 0");
    let rhs = star / (int(i64::from(m) + 1) * factorial(m + 1));
    (lhs, rhs)
}

/// Both sides of
/// `Σ_{|α|=r} ρ(α_1+1, ..., α_q+1, α_{q+1}+s+2) = ζ_{r+1}^⋆({1}^q; s) / ((r+s+1)(r+s+1)!)`.
pub fn rho_sum_general(r: u32, s: u32, q: usize) -> (Rational, Rational) {
    let lhs = weak_compositions(r, q + 1)
        .map(|c| {
            let mut parts: Vec<u32> = c.parts().iter().map(|p| p + 1).collect();
            *parts.last_mut().expect("q + 1 >= 1") += s + 1;
            rho_of(parts)
        })
        .fold(Rational::zero(), |a, b| a + b);
    let star = mzv_star_truncated(r + 1, q, &int(i64::from(s))).expect("s >= 0 has no poles");
    let top = r + s + 1;
    let rhs = star / (int(i64::from(top)) * factorial(top));
    (lhs, rhs)
}

/// Both sides of `Σ_{|α|=n} (α_{q+1}+1) ρ(α_1+1, ..., α_q+1, α_{q+1}+2) = 1/(n+1)!`.
pub fn rho_weighted_sum(n: u32, q: usize) -> (Rational, Rational) {
    let lhs = weak_compositions(n, q + 1)
        .map(|c| {
            let last = *c.parts().last().expect("q + 1 >= 1");
            let mut parts: Vec<u32> = c.parts().iter().map(|p| p + 1).collect();
            *parts.last_mut().expect("q + 1 >= 1") += 1;
            rho_of(parts) * int(i64::from(last) + 1)
        })
        .fold(Rational::zero(), |a, b| a + b);
    (lhs, factorial(n + 1).recip())
}

/// `Σ_{a_1+...+a_{q+1}=n} 1 / Π_{j=1..q} (a_j + ... + a_{q+1} + 1)`, which is
/// identically 1.
pub fn suffix_balance_sum(q: usize, n: u32) -> Rational {
    weak_compositions(n, q + 1)
        .map(|c| {
            let parts = c.parts();
            let mut denom = BigInt::one();
            let mut suffix = 0u32;
            for j in (0..parts.len()).rev() {
                suffix += parts[j];
                if j < q {
                    denom *= BigInt::from(suffix + 1);
                }
            }
            Rational::new(BigInt::one(), denom)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Closed families of ρ-values with printed formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoFamily {
    /// `ρ({1}^p, s) = |α|^-p ρ(s)`.
    HeadOnes { p: u32, inner: Vec<u32> },
    /// `ρ({a+1}^n) = 1/(a^n n! (na)!)`.
    Uniform { a: u32, n: u32 },
    /// `ρ({1, a+1}^n) = 1/(a^{2n} (na)! n!^2)`.
    Alternating { a: u32, n: u32 },
    /// `ρ(1, 2, ..., n) = 2^{n+1}(2n-1) / ((n-1)(2n)! (n(n-1)/2)!)`.
    Increasing { n: u32 },
}

impl RhoFamily {
    pub fn expanded_index(&self) -> Result<RhoIndex> {
        let parts = match self {
            RhoFamily::HeadOnes { p, inner } => {
                let inner = RhoIndex::new(inner.clone())
                    .map_err(|_| Error::Family(format!("head-ones inner index {inner:?} is inadmissible")))?;
                let mut parts = vec![1; *p as usize];
                parts.extend_from_slice(inner.parts());
                parts
            }
            RhoFamily::Uniform { a, n } => {
                if *a == 0 || *n == 0 {
                    return Err(Error::Family(format!("uniform family needs a >= 1 and n >= 1, got a={a} n={n}")));
                }
                vec![a + 1; *n as usize]
            }
            RhoFamily::Alternating { a, n } => {
                if *a == 0 || *n == 0 {
                    return Err(Error::Family(format!("alternating family needs a >= 1 and n >= 1, got a={a} n={n}")));
                }
                (0..*n).flat_map(|_| [1, a + 1]).collect()
            }
            RhoFamily::Increasing { n } => {
                if *n < 2 {
                    return Err(Error::Family(format!("increasing family needs n >= 2, got n={n}")));
                }
                (1..=*n).collect()
            }
        };
        RhoIndex::new(parts)
    }

    fn closed_form(&self) -> Result<Rational> {
        let value = match self {
            RhoFamily::HeadOnes { p, inner } => {
                let inner = RhoIndex::new(inner.clone())
                    .map_err(|_| Error::Family(format!("head-ones inner index {inner:?} is inadmissible")))?;
                let weight = int(i64::from(inner.weight()) - inner.depth() as i64);
                pow_i(&weight, -(*p as i32)) * rho_exact(&inner)
            }
            RhoFamily::Uniform { a, n } => {
                let a_pow = pow_i(&int(i64::from(*a)), *n as i32);
                (a_pow * factorial(*n) * factorial(n * a)).recip()
            }
            RhoFamily::Alternating { a, n } => {
                let a_pow = pow_i(&int(i64::from(*a)), 2 * *n as i32);
                (a_pow * factorial(n * a) * factorial(*n) * factorial(*n)).recip()
            }
            RhoFamily::Increasing { n } => {
                let top = pow_i(&int(2), *n as i32 + 1) * int(2 * i64::from(*n) - 1);
                let bottom = int(i64::from(*n) - 1) * factorial(2 * n) * factorial(n * (n - 1) / 2);
                top / bottom
            }
        };
        Ok(value)
    }
}

/// `(closed, direct)`: the family's printed formula and [`rho_exact`] on the
/// expanded index.
pub fn rho_family_value(family: &RhoFamily) -> Result<(Rational, Rational)> {
    let idx = family.expanded_index()?;
    Ok((family.closed_form()?, rho_exact(&idx)))
}
