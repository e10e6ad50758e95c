//! Harmonic numbers, modified Bell polynomials and truncated zeta-star sums.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, int, pow_i, Rational};

/// `H_n^(s)(x) = Σ_{k=1..n} (k+x)^-s`.
pub fn harmonic(n: u32, s: u32, x: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 1..=n {
        let base = int(i64::from(k)) + x;
        if base.is_zero() {
            return Err(Error::Pole(format!("{k} + {x}")));
        }
        acc += pow_i(&base, -(s as i32));
    }
    Ok(acc)
}

/// `(H_n^(1), ..., H_n^(m))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicVector {
    n: u32,
    values: Vec<Rational>,
}

impl HarmonicVector {
    pub fn new(n: u32, m: usize) -> Self {
        let mut values = vec![Rational::zero(); m];
        for k in 1..=n {
            let inv = Rational::new(1.into(), k.into());
            let mut p = inv.clone();
            for v in values.iter_mut() {
                *v += &p;
                p *= &inv;
            }
        }
        Self { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `H_n^(s)`, one-based.
    pub fn get(&self, s: usize) -> &Rational {
        &self.values[s - 1]
    }
}

/// Modified Bell polynomial `P_m(t_1, ..., t_m)`: the explicit sum over
/// `k_1 + 2k_2 + ... + m k_m = m` of `Π (t_i/i)^(k_i) / k_i!`.
pub fn bell_polynomial(m: usize, t: &[Rational]) -> Rational {
    assert!(t.len() >= m, "bell_polynomial needs {m} arguments, got {}", t.len());
    let scaled: Vec<Rational> = t.iter().take(m).enumerate().map(|(i, ti)| ti / int(i as i64 + 1)).collect();
    let mut total = Rational::zero();
    let mut mult = vec![0u32; m + 1];
    partitions_by_multiplicity(m, m, &mut mult, &mut |mult| {
        let mut term = Rational::one();
        for (i, &k) in mult.iter().enumerate().skip(1) {
            if k > 0 {
                term *= pow_i(&scaled[i - 1], k as i32) / factorial(k);
            }
        }
        total += term;
    });
    total
}

/// Visits every partition of `remaining` into parts `<= largest`, presented
/// as a multiplicity vector (`mult[i]` = number of parts equal to `i`).
fn partitions_by_multiplicity(remaining: usize, largest: usize, mult: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if remaining == 0 {
        visit(mult);
        return;
    }
    for part in (1..=largest.min(remaining)).rev() {
        let max_count = remaining / part;
        for count in 1..=max_count {
            mult[part] = count as u32;
            partitions_by_multiplicity(remaining - count * part, part - 1, mult, visit);
        }
        mult[part] = 0;
    }
}

/// `ζ_n^⋆({1}^m; s)`, the sum over `1 <= k_1 <= ... <= k_m <= n` of
/// `Π 1/(k_i + s)`.
///
/// Uses `Z(n, m) = Z(n-1, m) + Z(n, m-1)/(n+s)`.
pub fn mzv_star_truncated(n: u32, m: usize, s: &Rational) -> Result<Rational> {
    if m == 0 {
        return Ok(Rational::one());
    }
    // row[j] = Z(current n, j)
    let mut row = vec![Rational::zero(); m + 1];
    row[0] = Rational::one();
    for k in 1..=n {
        let base = int(i64::from(k)) + s;
        if base.is_zero() {
            return Err(Error::Pole(format!("{k} + {s}")));
        }
        let inv = base.recip();
        for j in 1..=m {
            let carry = &row[j - 1] * &inv;
            row[j] += carry;
        }
    }
    Ok(row.pop().expect("m >= 1"))
}

/// `Σ_{k=0..n} C(n,k) (-1)^k / (k+1)^m`.
pub fn alternating_binomial_sum(n: u32, m: u32) -> Rational {
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            sign * binomial(n, i64::from(k)) * pow_i(&int(i64::from(k) + 1), -(m as i32))
        })
        .fold(Rational::zero(), |a, b| a + b)
}
