//! Partial fractions of `1 / Π_j (n+j-1)^{s_j}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial_int, int, pow_i, Rational};

/// Coefficients `c[j][k]` of `Σ_{j,k} c[j][k] / (n+j-1)^k`, `1 <= k <= s_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionTable {
    exponents: Vec<u32>,
    entries: Vec<Vec<Rational>>,
}

impl PartialFractionTable {
    pub fn depth(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `c[j][k]`, both one-based.
    pub fn coeff(&self, j: usize, k: usize) -> &Rational {
        &self.entries[j - 1][k - 1]
    }

    /// `(j, k, c[j][k])` over every entry, one-based.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().enumerate().flat_map(|(j, row)| row.iter().enumerate().map(move |(k, c)| (j + 1, k + 1, c)))
    }

    /// `Σ_j c[j][1]`; zero whenever the depth exceeds one.
    pub fn simple_pole_sum(&self) -> Rational {
        self.entries.iter().map(|row| row[0].clone()).fold(Rational::zero(), |a, b| a + b)
    }

    /// Evaluates the decomposition at `n`.
    pub fn evaluate(&self, n: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (j, k, c) in self.iter() {
            let base = n + int(j as i64 - 1);
            if base.is_zero() {
                return Err(Error::Pole(format!("{n} + {}", j - 1)));
            }
            acc += c * pow_i(&base, -(k as i32));
        }
        Ok(acc)
    }
}

/// Exact decomposition via truncated power series.
///
/// Near the pole `n = 1-j` write `n = 1-j+t`; each other factor
/// `(i-j+t)^{-s_i}` expands binomially in `t`. The coefficient of
/// `t^{s_j-k}` in the product is `c[j][k]`.
pub fn partial_fraction_shifted(exponents: &[u32]) -> PartialFractionTable {
    let r = exponents.len();
    let mut entries = Vec::with_capacity(r);
    for j in 0..r {
        let order = exponents[j] as usize;
        let mut series = vec![Rational::zero(); order];
        series[0] = Rational::one();
        for (i, &s_i) in exponents.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = int(i as i64 - j as i64);
            // (d + t)^{-s} = Σ_m (-1)^m C(s+m-1, m) d^{-s-m} t^m
            let factor: Vec<Rational> = (0..order)
                .map(|m| {
                    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
                    let binom = Rational::from_integer(binomial_int(s_i + m as u32 - 1, m as u32));
                    sign * binom * pow_i(&d, -(s_i as i32) - m as i32)
                })
                .collect();
            series = truncated_product(&series, &factor);
        }
        // c[j][k] is the coefficient of t^{s_j - k}
        entries.push((1..=order).map(|k| series[order - k].clone()).collect());
    }
    PartialFractionTable { exponents: exponents.to_vec(), entries }
}

fn truncated_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len();
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (m, y) in b.iter().take(len - i).enumerate() {
            out[i + m] += x * y;
        }
    }
    out
}
