//! Exact rational primitives and certified real approximations.
//!
//! Every exact value in the crate is a [`Rational`], kept in lowest terms by
//! construction. Real constants such as `ζ(k)` are carried by
//! [`ApproxReal`], a rational midpoint together with a proven absolute
//! error bound.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number in lowest terms.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn recip(n: i64) -> Rational {
    ratio(1, n)
}

pub fn factorial_int(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    Rational::from_integer(factorial_int(n))
}

/// Pochhammer symbol `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn binomial_int(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> Rational {
    if k < 0 || k > i64::from(n) {
        return Rational::zero();
    }
    Rational::from_integer(binomial_int(n, k as u32))
}

/// `x^e` for a possibly negative integer exponent.
pub fn pow_i(x: &Rational, e: i32) -> Rational {
    num_traits::pow::Pow::pow(x, e)
}

/// Bernoulli numbers `B_0 ..= B_m`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(m + 1);
    out.push(Rational::one());
    for n in 1..=m {
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += Rational::from_integer(binomial_int(n as u32 + 1, k as u32)) * b;
        }
        out.push(-acc / int(n as i64 + 1));
    }
    out
}

/// Rational `r_j` with `ζ(2j) = r_j π^(2j)`.
pub fn even_zeta_pi_ratio(k: u32) -> Option<Rational> {
    if k < 2 || k % 2 == 1 {
        return None;
    }
    let b = bernoulli_numbers(k as usize).pop().expect("nonempty");
    // ζ(2j) = (-1)^(j+1) B_2j (2π)^2j / (2 (2j)!)
    let j = k / 2;
    let sign = if j % 2 == 1 { int(1) } else { int(-1) };
    let two_pow = Rational::from_integer(BigInt::one() << k);
    Some(sign * b * two_pow / (int(2) * factorial(k)))
}

/// Rational midpoint with a proven absolute error bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReal {
    value: Rational,
    error_bound: Rational,
}

impl ApproxReal {
    pub fn new(value: Rational, error_bound: Rational) -> Self {
        Self { value, error_bound: error_bound.abs() }
    }

    pub fn exact(value: Rational) -> Self {
        Self { value, error_bound: Rational::zero() }
    }

    /// Both arguments are converted exactly; `error_bound` must already
    /// account for any floating point rounding in `value`.
    pub fn from_f64(value: f64, error_bound: f64) -> Self {
        let v = Rational::from_float(value).expect("finite value");
        let e = Rational::from_float(error_bound.abs()).expect("finite bound");
        Self::new(v, e)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn error_bound(&self) -> &Rational {
        &self.error_bound
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    pub fn error_bound_f64(&self) -> f64 {
        self.error_bound.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Rounds the midpoint to a multiple of `2^-bits`, widening the bound by
    /// the rounding error.
    pub fn round_to_bits(&self, bits: u32) -> Self {
        let scale = BigInt::one() << bits;
        let scaled = &self.value * Rational::from_integer(scale.clone());
        let rounded = scaled.round();
        let value = rounded / Rational::from_integer(scale);
        let extra = (&value - &self.value).abs();
        Self::new(value, &self.error_bound + extra)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.value * c, &self.error_bound * c.abs())
    }

    pub fn gap(&self, other: &ApproxReal) -> Rational {
        (&self.value - &other.value).abs()
    }

    /// Equality at tolerance `tol`: `|a - b| <= tol + bound(a) + bound(b)`.
    pub fn approx_eq(&self, other: &ApproxReal, tol: &Rational) -> bool {
        self.gap(other) <= tol + &self.error_bound + &other.error_bound
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (&self.value - x).abs() <= self.error_bound
    }

    pub fn to_decimal(&self, digits: u32) -> String {
        format_fixed(&self.value, digits)
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(15) as u32;
        write!(f, "{} +/- {}", format_fixed(&self.value, digits), format_sci_up(&self.error_bound, 2))
    }
}

impl Add for &ApproxReal {
    type Output = ApproxReal;
    fn add(self, rhs: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.value + &rhs.value, &self.error_bound + &rhs.error_bound)
    }
}

impl Sub for &ApproxReal {
    type Output = ApproxReal;
    fn sub(self, rhs: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.value - &rhs.value, &self.error_bound + &rhs.error_bound)
    }
}

impl Mul for &ApproxReal {
    type Output = ApproxReal;
    fn mul(self, rhs: &ApproxReal) -> ApproxReal {
        let bound = self.value.abs() * &rhs.error_bound
            + rhs.value.abs() * &self.error_bound
            + &self.error_bound * &rhs.error_bound;
        ApproxReal::new(&self.value * &rhs.value, bound)
    }
}

impl Neg for ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        ApproxReal::new(-self.value, self.error_bound)
    }
}

impl Add for ApproxReal {
    type Output = ApproxReal;
    fn add(self, rhs: ApproxReal) -> ApproxReal {
        &self + &rhs
    }
}

impl Sub for ApproxReal {
    type Output = ApproxReal;
    fn sub(self, rhs: ApproxReal) -> ApproxReal {
        &self - &rhs
    }
}

impl Mul for ApproxReal {
    type Output = ApproxReal;
    fn mul(self, rhs: ApproxReal) -> ApproxReal {
        &self * &rhs
    }
}

pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.33
    digits * 10 / 3 + 8
}

/// `ζ(k)` to within `10^-digits`.
///
/// Euler–Maclaurin summation with cutoff `N` and `M` correction terms. Every
/// even derivative of `x^-k` is positive, so the remainder is bounded by the
/// first omitted correction term.
pub fn zeta_constant(k: u32, digits: u32) -> Result<ApproxReal> {
    if k < 2 {
        return Err(Error::Divergent(k));
    }
    let digits = digits.max(1);
    let half_target = Rational::new(BigInt::one(), pow10(digits) * 2);
    let mut cutoff = k.max(digits) + 10;
    loop {
        if let Some(est) = euler_maclaurin(k, cutoff, &half_target) {
            return Ok(est.round_to_bits(bits_for_digits(digits)));
        }
        cutoff *= 2;
    }
}

fn euler_maclaurin(k: u32, cutoff: u32, half_target: &Rational) -> Option<ApproxReal> {
    let n = int(i64::from(cutoff));
    let mut sum = Rational::zero();
    for m in 1..cutoff {
        sum += pow_i(&int(i64::from(m)), -(k as i32));
    }
    let n_pow = pow_i(&n, -(k as i32));
    sum += &n_pow * &n / int(i64::from(k) - 1);
    sum += &n_pow / int(2);

    let max_terms = cutoff as usize;
    let bern = bernoulli_numbers(2 * max_terms + 2);
    // term_j = B_2j / (2j)! * (k)_(2j-1) * N^(-k-2j+1)
    let term = |j: usize| -> Rational {
        let poch = rising_factorial(&int(i64::from(k)), 2 * j as u32 - 1);
        &bern[2 * j] / factorial(2 * j as u32) * poch * pow_i(&n, -(k as i32) - 2 * j as i32 + 1)
    };
    let mut previous: Option<Rational> = None;
    for j in 1..=max_terms {
        let t = term(j);
        let mag = t.abs();
        if &mag <= half_target {
            return Some(ApproxReal::new(sum, mag));
        }
        if let Some(prev) = &previous {
            if &mag >= prev {
                return None;
            }
        }
        sum += t;
        previous = Some(mag);
    }
    None
}

/// Fixed-point decimal rendering, rounded half away from zero.
pub fn format_fixed(r: &Rational, digits: u32) -> String {
    let scaled = r * Rational::from_integer(pow10(digits));
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let mut body = rounded.abs().to_string();
    if digits == 0 {
        return if negative { format!("-{body}") } else { body };
    }
    let d = digits as usize;
    if body.len() <= d {
        body = format!("{}{}", "0".repeat(d + 1 - body.len()), body);
    }
    let (whole, frac) = body.split_at(body.len() - d);
    format!("{}{}.{}", if negative { "-" } else { "" }, whole, frac)
}

/// Scientific rendering of a nonnegative value, rounded up to `sig`
/// significant digits, so the printed number never understates it.
pub fn format_sci_up(r: &Rational, sig: u32) -> String {
    let r = r.abs();
    if r.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let ten = int(10);
    let mut exp = r.to_f64().map(|f| f.log10().floor() as i32).unwrap_or(0);
    while pow_i(&ten, exp) > r {
        exp -= 1;
    }
    while pow_i(&ten, exp + 1) <= r {
        exp += 1;
    }
    let unit = pow_i(&ten, exp - sig as i32 + 1);
    let mut mantissa = (&r / &unit).ceil().to_integer();
    if mantissa == pow10(sig) {
        mantissa = pow10(sig - 1);
        exp += 1;
    }
    let digits = mantissa.to_string();
    let (lead, rest) = digits.split_at(1);
    if rest.is_empty() {
        format!("{lead}e{exp}")
    } else {
        format!("{lead}.{rest}e{exp}")
    }
}

/// Parses `p/q`, integers and decimals with an optional exponent.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let mut value = Rational::from_integer(n) * pow_i(&int(10), exponent - frac.len() as i32);
    if negative {
        value = -value;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        let oracle: i64 = (1..=12).product();
        assert_eq!(factorial(12), int(oracle));
        assert_eq!(factorial(12), int(479_001_600));
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&int(3), 0), int(1));
        assert_eq!(rising_factorial(&int(1), 4), int(24));
        assert_eq!(rising_factorial(&ratio(1, 2), 3), ratio(15, 8));
        for n in 0..=20 {
            assert_eq!(rising_factorial(&int(1), n), factorial(n));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(7, 0), int(1));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(3, 4), int(0));
        // Pascal's triangle
        let mut row = vec![1i64];
        for _ in 0..10 {
            let mut next = vec![1i64];
            next.extend(row.windows(2).map(|w| w[0] + w[1]));
            next.push(1);
            row = next;
        }
        assert_eq!(row[5], 252);
        assert_eq!(binomial(10, 5), int(row[5]));
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], ratio(-1, 2));
        assert_eq!(b[2], ratio(1, 6));
        assert_eq!(b[3], int(0));
        assert_eq!(b[4], ratio(-1, 30));
        assert_eq!(b[6], ratio(1, 42));
        assert_eq!(b[8], ratio(-1, 30));
    }

    #[test]
    fn even_zeta_ratios() {
        assert_eq!(even_zeta_pi_ratio(2), Some(ratio(1, 6)));
        assert_eq!(even_zeta_pi_ratio(4), Some(ratio(1, 90)));
        assert_eq!(even_zeta_pi_ratio(6), Some(ratio(1, 945)));
        assert_eq!(even_zeta_pi_ratio(8), Some(ratio(1, 9450)));
        assert_eq!(even_zeta_pi_ratio(3), None);
    }

    #[test]
    fn zeta_rejects_divergent() {
        assert_eq!(zeta_constant(1, 5), Err(Error::Divergent(1)));
        assert_eq!(zeta_constant(0, 5), Err(Error::Divergent(0)));
    }

    #[test]
    fn zeta_three_against_direct_series() {
        // Σ_{n<=N} n^-3 plus the tail, which lies in [∫_{N+1}^∞, ∫_N^∞].
        let z = zeta_constant(3, 6).unwrap();
        assert!(z.error_bound() <= &ratio(1, 1_000_000));
        let n = 2000u32;
        let partial: f64 = (1..=n).map(|k| (k as f64).powi(-3)).sum();
        let lo = partial + 0.5 / ((n + 1) as f64).powi(2);
        let hi = partial + 0.5 / (n as f64).powi(2);
        let v = z.to_f64();
        assert!(v > lo - 1e-6 && v < hi + 1e-6, "{v} not in [{lo}, {hi}]");
        assert_eq!(z.to_decimal(6), "1.202057");
    }

    #[test]
    fn approx_arithmetic_propagates_bounds() {
        let a = ApproxReal::new(ratio(3, 2), ratio(1, 100));
        let b = ApproxReal::new(int(2), ratio(1, 10));
        let s = &a + &b;
        assert_eq!(s.value(), &ratio(7, 2));
        assert_eq!(s.error_bound(), &ratio(11, 100));
        let p = &a * &b;
        assert_eq!(p.value(), &int(3));
        // 3/2 * 1/10 + 2 * 1/100 + 1/1000
        assert_eq!(p.error_bound(), &ratio(171, 1000));
        assert!(a.approx_eq(&ApproxReal::exact(ratio(151, 100)), &int(0)));
        assert!(!a.approx_eq(&ApproxReal::exact(ratio(152, 100)), &int(0)));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_fixed(&ratio(1, 4), 3), "0.250");
        assert_eq!(format_fixed(&ratio(-1, 3), 4), "-0.3333");
        assert_eq!(format_fixed(&ratio(2, 3), 0), "1");
        assert_eq!(format_fixed(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(format_sci_up(&ratio(1, 3), 3), "3.34e-1");
        assert_eq!(format_sci_up(&ratio(1, 100), 2), "1.0e-2");
        assert_eq!(format_sci_up(&ratio(999, 1000), 2), "1.0e0");
        assert_eq!(format_sci_up(&int(0), 2), "0");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/12").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("1.25").unwrap(), ratio(5, 4));
        assert_eq!(parse_rational("-2.5e-2").unwrap(), ratio(-1, 40));
        assert_eq!(parse_rational("1e3").unwrap(), int(1000));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }
}
