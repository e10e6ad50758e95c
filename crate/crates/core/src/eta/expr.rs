//! Rational linear combinations of `1` and `ζ(k)`, `k >= 2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{even_zeta_pi_ratio, int, zeta_constant, ApproxReal, Rational};

/// How even zeta values are printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Render {
    /// `ζ(2j)` as a rational multiple of `π^(2j)`.
    #[default]
    Pi,
    /// Every basis element as `zeta(k)`.
    Zeta,
}

/// `c_0 + Σ_k c_k ζ(k)` in normal form: no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZetaExpr {
    constant: Rational,
    coeffs: BTreeMap<u32, Rational>,
}

impl ZetaExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(c: Rational) -> Self {
        Self { constant: c, coeffs: BTreeMap::new() }
    }

    /// `c ζ(k)`.
    pub fn zeta_term(k: u32, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_zeta(k, c);
        e
    }

    pub fn zeta(k: u32) -> Self {
        Self::zeta_term(k, Rational::one())
    }

    pub fn from_parts(constant: Rational, coeffs: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut e = Self::rational(constant);
        for (k, c) in coeffs {
            e.add_zeta(k, c);
        }
        e
    }

    pub fn add_constant(&mut self, c: &Rational) {
        self.constant += c;
    }

    pub fn add_zeta(&mut self, k: u32, c: Rational) {
        assert!(k >= 2, "zeta({k}) is not a basis element");
        let slot = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.constant)
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.constant.is_zero()
    }

    pub fn max_zeta_index(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { constant: &self.constant * c, coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Numeric value with error bound at most `tol`.
    pub fn evaluate(&self, tol: f64) -> ApproxReal {
        let weight: f64 = self.coeffs.values().map(|c| c.abs().to_f64().unwrap_or(f64::MAX)).sum();
        let mut total = ApproxReal::exact(self.constant.clone());
        if weight == 0.0 {
            return total;
        }
        let digits = ((2.0 * weight / tol).log10().ceil().max(1.0) as u32) + 1;
        for (k, c) in &self.coeffs {
            let z = zeta_constant(*k, digits).expect("basis keys are >= 2");
            total = &total + &z.scale(c);
        }
        total.round_to_bits(digits * 10 / 3 + 8)
    }

    pub fn render(&self, mode: Render) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        if !self.constant.is_zero() {
            terms.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        for (k, c) in &self.coeffs {
            let (coef, symbol) = match (mode, even_zeta_pi_ratio(*k)) {
                (Render::Pi, Some(r)) => (c * r, if *k == 1 { "pi".to_string() } else { format!("pi^{k}") }),
                _ => (c.clone(), format!("zeta({k})")),
            };
            terms.push((coef.is_negative(), scaled_symbol(&coef.abs(), &symbol)));
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (negative, body)) in terms.iter().enumerate() {
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(body);
        }
        out
    }

    /// Parses the rendered forms (`2 - pi^2/6`, `3*zeta(3)/4 - 29/32`, ...).
    pub fn parse(s: &str) -> Result<Self> {
        Parser::new(s).expression()
    }
}

fn scaled_symbol(c: &Rational, symbol: &str) -> String {
    let (p, q) = (c.numer(), c.denom());
    match (p.is_one(), q.is_one()) {
        (true, true) => symbol.to_string(),
        (false, true) => format!("{p}*{symbol}"),
        (true, false) => format!("{symbol}/{q}"),
        (false, false) => format!("{p}*{symbol}/{q}"),
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Render::Zeta))
    }
}

impl AddAssign<&ZetaExpr> for ZetaExpr {
    fn add_assign(&mut self, rhs: &ZetaExpr) {
        self.constant += &rhs.constant;
        for (k, c) in &rhs.coeffs {
            self.add_zeta(*k, c.clone());
        }
    }
}

impl SubAssign<&ZetaExpr> for ZetaExpr {
    fn sub_assign(&mut self, rhs: &ZetaExpr) {
        self.constant -= &rhs.constant;
        for (k, c) in &rhs.coeffs {
            self.add_zeta(*k, -c.clone());
        }
    }
}

impl Add for ZetaExpr {
    type Output = ZetaExpr;
    fn add(mut self, rhs: ZetaExpr) -> ZetaExpr {
        self += &rhs;
        self
    }
}

impl Sub for ZetaExpr {
    type Output = ZetaExpr;
    fn sub(mut self, rhs: ZetaExpr) -> ZetaExpr {
        self -= &rhs;
        self
    }
}

impl<'a> Add<&'a ZetaExpr> for &'a ZetaExpr {
    type Output = ZetaExpr;
    fn add(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a ZetaExpr> for &'a ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        self.scale(&int(-1))
    }
}

impl std::iter::Sum for ZetaExpr {
    fn sum<I: Iterator<Item = ZetaExpr>>(iter: I) -> ZetaExpr {
        iter.fold(ZetaExpr::zero(), |mut acc, e| {
            acc += &e;
            acc
        })
    }
}

impl From<Rational> for ZetaExpr {
    fn from(c: Rational) -> Self {
        ZetaExpr::rational(c)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

enum Atom {
    Number(BigInt),
    Basis(u32),
    PiPower(u32),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        let digits = &self.rest()[..len];
        self.pos += len;
        digits.parse().map_err(|_| self.err("bad integer"))
    }

    fn small(&mut self) -> Result<u32> {
        self.integer()?.to_u32().ok_or_else(|| self.err("exponent out of range"))
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat("zeta") || self.eat("ζ") {
            if !self.eat("(") {
                return Err(self.err("expected '('"));
            }
            let k = self.small()?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            if k < 2 {
                return Err(self.err("zeta argument must be >= 2"));
            }
            return Ok(Atom::Basis(k));
        }
        if self.eat("pi") || self.eat("π") {
            let e = if self.eat("^") { self.small()? } else { 1 };
            if e < 2 || e % 2 == 1 {
                return Err(self.err("only even powers of pi are supported"));
            }
            return Ok(Atom::PiPower(e));
        }
        Ok(Atom::Number(self.integer()?))
    }

    /// One signed term: a product of atoms, with division by integers.
    fn term(&mut self) -> Result<ZetaExpr> {
        let mut coef = Rational::one();
        let mut basis: Option<u32> = None;
        let mut push = |parser: &Self, atom: Atom, coef: &mut Rational| -> Result<()> {
            match atom {
                Atom::Number(n) => *coef *= Rational::from_integer(n),
                Atom::Basis(k) | Atom::PiPower(k) if basis.is_some() => {
                    let _ = k;
                    return Err(parser.err("more than one transcendental factor"));
                }
                Atom::Basis(k) => basis = Some(k),
                Atom::PiPower(k) => {
                    *coef /= even_zeta_pi_ratio(k).expect("even power");
                    basis = Some(k);
                }
            }
            Ok(())
        };
        let first = self.atom()?;
        push(self, first, &mut coef)?;
        loop {
            if self.eat("*") {
                let a = self.atom()?;
                push(self, a, &mut coef)?;
            } else if self.eat("/") {
                match self.atom()? {
                    Atom::Number(n) if !n.is_zero() => coef /= Rational::from_integer(n),
                    _ => return Err(self.err("can only divide by a nonzero integer")),
                }
            } else {
                break;
            }
        }
        Ok(match basis {
            Some(k) => ZetaExpr::zeta_term(k, coef),
            None => ZetaExpr::rational(coef),
        })
    }

    fn expression(&mut self) -> Result<ZetaExpr> {
        let mut total = ZetaExpr::zero();
        let mut negative = self.eat("-");
        loop {
            let t = self.term()?;
            if negative {
                total -= &t;
            } else {
                total += &t;
            }
            if self.eat("+") {
                negative = false;
            } else if self.eat("-") {
                negative = true;
            } else {
                break;
            }
        }
        self.skip_ws();
        if !self.rest().is_empty() {
            return Err(self.err("trailing input"));
        }
        Ok(total)
    }
}
