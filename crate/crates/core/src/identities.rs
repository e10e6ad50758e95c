//! Sum formulas relating ρ-values, η-values and harmonic numbers, each
//! checked end to end and returned as a [`VerificationReport`].
//!
//! Exact identities compare [`ZetaExpr`] normal forms structurally. The only
//! numeric checks are the oracle agreements and the double integral.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::weak_compositions;
use crate::error::{Error, Result};
use crate::eta::{
    eta_hook_closed_form, eta_restricted_triple_direct, eta_restricted_triple_sum, eta_series_oracle, eta_symbolic,
    oracle_max_n, EtaIndex, Render, ZetaExpr,
};
use crate::harmonic::{bell_polynomial, HarmonicVector};
use crate::numeric::{factorial, int, ApproxReal, Rational};
use crate::output::{NumericValue, OutputFormat, SymbolicValue};
use crate::quadrature::eta_sum_integral;
use crate::rho::{
    rho_exact, rho_family_value, rho_series_oracle, rho_sum_fixed_weight, rho_sum_general, rho_weighted_sum,
    suffix_balance_sum, RhoFamily, RhoIndex, RHO_ORACLE_MAX_N,
};
use crate::tables::{eta_fixture, eta_indices, rho_fixture, rho_indices, FIXTURE_WEIGHTS};

/// Decimal places kept when numeric values are serialized.
pub const REPORT_DIGITS: u32 = 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportValue {
    Exact(SymbolicValue),
    Numeric(NumericValue),
}

impl ReportValue {
    pub fn exact(e: &ZetaExpr) -> Self {
        ReportValue::Exact(SymbolicValue::from_expr(e))
    }

    pub fn numeric(x: &ApproxReal) -> Self {
        ReportValue::Numeric(NumericValue::from_approx(x, REPORT_DIGITS))
    }

    pub fn display(&self) -> String {
        match self {
            ReportValue::Exact(v) => v.to_expr().map(|e| e.render(Render::Zeta)).unwrap_or_else(|e| e.to_string()),
            ReportValue::Numeric(v) => format!("{} +/- {}", v.value, v.error_bound),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, i64>,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub passed: bool,
    /// `lhs - rhs` for exact checks, `|lhs - rhs|` for numeric ones.
    pub discrepancy: ReportValue,
    /// Allowed gap beyond the error bounds, numeric checks only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    fn exact(id: &str, parameters: Params, lhs: &ZetaExpr, rhs: &ZetaExpr) -> Self {
        let diff = lhs - rhs;
        Self {
            identity_id: id.to_string(),
            parameters: parameters.0,
            lhs: ReportValue::exact(lhs),
            rhs: ReportValue::exact(rhs),
            passed: diff.is_zero(),
            discrepancy: ReportValue::exact(&diff),
            tolerance: None,
            note: None,
        }
    }

    fn exact_rational(id: &str, parameters: Params, lhs: &Rational, rhs: &Rational) -> Self {
        Self::exact(id, parameters, &ZetaExpr::rational(lhs.clone()), &ZetaExpr::rational(rhs.clone()))
    }

    fn numeric(id: &str, parameters: Params, lhs: &ApproxReal, rhs: &ApproxReal, tolerance: f64) -> Self {
        let tol = Rational::from_float(tolerance).expect("finite tolerance");
        let gap = lhs.gap(rhs);
        Self {
            identity_id: id.to_string(),
            parameters: parameters.0,
            lhs: ReportValue::numeric(lhs),
            rhs: ReportValue::numeric(rhs),
            passed: lhs.approx_eq(rhs, &tol),
            discrepancy: ReportValue::numeric(&ApproxReal::new(gap, lhs.error_bound() + rhs.error_bound())),
            tolerance: Some(format!("{tolerance:e}")),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn failed_with(mut self, note: impl Into<String>) -> Self {
        self.passed = false;
        self.note = Some(note.into());
        self
    }

    /// A numeric check that could not be completed, recorded as a failure.
    fn unfinished(id: &str, parameters: Params, tolerance: f64, error: &Error) -> Self {
        let missing = || ReportValue::Numeric(NumericValue { value: "nan".into(), error_bound: "inf".into() });
        Self {
            identity_id: id.to_string(),
            parameters: parameters.0,
            lhs: missing(),
            rhs: missing(),
            passed: false,
            discrepancy: missing(),
            tolerance: Some(format!("{tolerance:e}")),
            note: Some(error.to_string()),
        }
    }
}

#[derive(Default)]
struct Params(BTreeMap<String, i64>);

impl Params {
    fn new(pairs: &[(&str, i64)]) -> Self {
        Self(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }

    fn index(parts: &[u32]) -> Self {
        let mut p = Self::new(&[("weight", i64::from(parts.iter().sum::<u32>()))]);
        for (i, s) in parts.iter().enumerate() {
            p.0.insert(format!("s{}", i + 1), i64::from(*s));
        }
        p
    }
}

fn eta(parts: Vec<u32>) -> ZetaExpr {
    eta_symbolic(&EtaIndex::new(parts).expect("enumerated indices are admissible"))
}

fn rho(parts: Vec<u32>) -> Rational {
    rho_exact(&RhoIndex::new(parts).expect("enumerated indices are admissible"))
}

fn ones(n: usize) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(1, n)
}

fn plus_one(c: &[u32]) -> Vec<u32> {
    c.iter().map(|p| p + 1).collect()
}

/// `P_k(H_n^(1), ..., H_n^(k))`.
fn bell_of_harmonics(k: usize, n: u32) -> Rational {
    bell_polynomial(k, HarmonicVector::new(n, k).values())
}

fn n_times_factorial(n: u32) -> Rational {
    int(i64::from(n)) * factorial(n)
}

/// `Σ_{|s|=q} η(s_1+1, ..., s_{r+2}+1) = Σ_{|α|=r} ρ(α_1+1, ..., α_q+1, α_{q+1}+2)`.
///
/// Passing also requires every `ζ(k)` coefficient of the η side to vanish.
pub fn verify_rho_eta_connection(q: u32, r: u32) -> VerificationReport {
    let lhs: ZetaExpr = weak_compositions(q, r as usize + 2).map(|c| eta(plus_one(c.parts()))).sum();
    let rhs = weak_compositions(r, q as usize + 1)
        .map(|c| {
            let mut parts = plus_one(c.parts());
            *parts.last_mut().expect("q + 1 >= 1") += 1;
            rho(parts)
        })
        .fold(Rational::zero(), |a, b| a + b);
    let report = VerificationReport::exact(
        "rho-eta-connection",
        Params::new(&[("q", q.into()), ("r", r.into())]),
        &lhs,
        &ZetaExpr::rational(rhs),
    );
    if lhs.is_rational() {
        report
    } else {
        report.failed_with("zeta coefficients of the eta side do not cancel")
    }
}

/// `Σ_{r+s=n, |α|=q} η(α_1+1, ..., α_r+1, α_{r+1}+2, {1}^s)`.
fn hook_sum_lhs(n: u32, q: u32) -> ZetaExpr {
    let mut total = ZetaExpr::zero();
    for r in 0..=n {
        let s = (n - r) as usize;
        for c in weak_compositions(q, r as usize + 1) {
            let mut parts = plus_one(c.parts());
            *parts.last_mut().expect("r + 1 >= 1") += 1;
            parts.extend(ones(s));
            total += &eta(parts);
        }
    }
    total
}

/// Hook-shaped η-sum against `P_{q+1}(H_n) / (n n!)`.
pub fn verify_eta_hook_sum(n: u32, q: u32) -> VerificationReport {
    let lhs = hook_sum_lhs(n, q);
    let rhs = bell_of_harmonics(q as usize + 1, n) / n_times_factorial(n);
    let report = VerificationReport::exact(
        "eta-hook-sum",
        Params::new(&[("n", n.into()), ("q", q.into())]),
        &lhs,
        &ZetaExpr::rational(rhs),
    );
    if lhs.is_rational() {
        report
    } else {
        report.failed_with("eta side is not rational")
    }
}

/// `Σ_{r+s=n} η({1}^r, 2, {1}^s) = H_n / (n n!)`, enumerated directly.
pub fn verify_eta_hook_sum_single_two(n: u32) -> VerificationReport {
    let lhs: ZetaExpr = (0..=n)
        .map(|r| {
            let parts: Vec<u32> = ones(r as usize).chain([2]).chain(ones((n - r) as usize)).collect();
            eta(parts)
        })
        .sum();
    let rhs = HarmonicVector::new(n, 1).get(1) / n_times_factorial(n);
    VerificationReport::exact(
        "eta-hook-sum-single-two",
        Params::new(&[("n", n.into())]),
        &lhs,
        &ZetaExpr::rational(rhs),
    )
}

/// `Σ_{r+s=n, |α|=q} η(α_1+1, ..., α_{r+1}+1, {1}^{s+1})` against
/// `(-1)^{q+1}/(n (n+1)!) + (1/(n n!)) Σ_{k=0..q} (-1)^{q-k} P_k(H_n)`.
///
/// `α` ranges over weak compositions of `q` into `r+1` parts, so one index
/// can occur under several splits `(r, s)`; each occurrence counts.
pub fn verify_weighted_eta_sum(n: u32, q: u32) -> VerificationReport {
    let mut lhs = ZetaExpr::zero();
    for r in 0..=n {
        let s = (n - r) as usize;
        for c in weak_compositions(q, r as usize + 1) {
            let mut parts = plus_one(c.parts());
            parts.extend(ones(s + 1));
            lhs += &eta(parts);
        }
    }
    let sign = |e: u32| if e.is_multiple_of(2) { int(1) } else { int(-1) };
    let mut bell_sum = Rational::zero();
    for k in 0..=q {
        bell_sum += sign(q - k) * bell_of_harmonics(k as usize, n);
    }
    let rhs = sign(q + 1) / (int(i64::from(n)) * factorial(n + 1)) + bell_sum / n_times_factorial(n);
    VerificationReport::exact(
        "eta-weighted-sum",
        Params::new(&[("n", n.into()), ("q", q.into())]),
        &lhs,
        &ZetaExpr::rational(rhs),
    )
    .with_note("first block has r+1 parts with |alpha| = q, trailing block {1}^(s+1), every split (r,s) counted")
}

/// Weighted closed forms extracted from [`verify_weighted_eta_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightedCorollary {
    /// `Σ_{a+b=n} (b+1) η({1}^a, 2, {1}^{b+1}) = ((n+1) H_n - n) / (n (n+1)!)`.
    SingleTwo,
    /// `Σ_{a+b=n} (b+1) η({1}^a, 3, {1}^{b+1}) + Σ_{a+b+c=n-1} (c+1) η({1}^a, 2, {1}^b, 2, {1}^{c+1})`
    /// `= (2n + (n+1)(H_n^2 - 2 H_n + H_n^(2))) / (2n (n+1)!)`.
    ThreeOrTwoTwos,
    /// `Σ_{α_1+α_2=q} η(α_1+1, α_2+1, 1) + η(q+1, 1, 1) = 1/2`.
    DepthThree,
}

impl WeightedCorollary {
    fn id(self) -> &'static str {
        match self {
            WeightedCorollary::SingleTwo => "weighted-single-two",
            WeightedCorollary::ThreeOrTwoTwos => "weighted-three-or-two-twos",
            WeightedCorollary::DepthThree => "weighted-depth-three",
        }
    }
}

/// `parameter` is `n >= 1` for the first two kinds and `q >= 0` for the third.
pub fn verify_weighted_corollaries(kind: WeightedCorollary, parameter: u32) -> VerificationReport {
    let n = parameter;
    let (lhs, rhs, name) = match kind {
        WeightedCorollary::SingleTwo => {
            let mut lhs = ZetaExpr::zero();
            for a in 0..=n {
                let b = n - a;
                let parts: Vec<u32> = ones(a as usize).chain([2]).chain(ones(b as usize + 1)).collect();
                lhs += &eta(parts).scale(&int(i64::from(b) + 1));
            }
            let h = HarmonicVector::new(n, 1);
            let rhs = (int(i64::from(n) + 1) * h.get(1) - int(n.into())) / (int(n.into()) * factorial(n + 1));
            (lhs, rhs, "n")
        }
        WeightedCorollary::ThreeOrTwoTwos => {
            let mut lhs = ZetaExpr::zero();
            for a in 0..=n {
                let b = n - a;
                let parts: Vec<u32> = ones(a as usize).chain([3]).chain(ones(b as usize + 1)).collect();
                lhs += &eta(parts).scale(&int(i64::from(b) + 1));
            }
            for c in weak_compositions(n - 1, 3) {
                let [a, b, c] = [c.parts()[0], c.parts()[1], c.parts()[2]];
                let parts: Vec<u32> = ones(a as usize)
                    .chain([2])
                    .chain(ones(b as usize))
                    .chain([2])
                    .chain(ones(c as usize + 1))
                    .collect();
                lhs += &eta(parts).scale(&int(i64::from(c) + 1));
            }
            let h = HarmonicVector::new(n, 2);
            let (h1, h2) = (h.get(1), h.get(2));
            let inner = h1 * h1 - int(2) * h1 + h2;
            let top = int(2 * i64::from(n)) + int(i64::from(n) + 1) * inner;
            let rhs = top / (int(2 * i64::from(n)) * factorial(n + 1));
            (lhs, rhs, "n")
        }
        WeightedCorollary::DepthThree => {
            let q = parameter;
            let mut lhs: ZetaExpr =
                weak_compositions(q, 2).map(|c| eta(vec![c.parts()[0] + 1, c.parts()[1] + 1, 1])).sum();
            lhs += &eta(vec![q + 1, 1, 1]);
            (lhs, Rational::new(1.into(), 2.into()), "q")
        }
    };
    VerificationReport::exact(kind.id(), Params::new(&[(name, parameter.into())]), &lhs, &ZetaExpr::rational(rhs))
}

/// `η(p, {1}^a)` from its Bell-polynomial closed form against the general
/// reduction.
pub fn verify_eta_hook_closed_form(p: u32, a: u32) -> VerificationReport {
    let parts: Vec<u32> = std::iter::once(p).chain(ones(a as usize)).collect();
    let closed = eta_hook_closed_form(p, a).expect("p >= 2");
    VerificationReport::exact(
        "eta-hook-closed-form",
        Params::new(&[("p", p.into()), ("a", a.into())]),
        &eta(parts),
        &closed,
    )
}

/// Printed closed form of `Σ_{α_1+α_2=q} η(α_1+1, α_2+1, 1)` against enumeration.
pub fn verify_restricted_triple_sum(q: u32) -> VerificationReport {
    VerificationReport::exact(
        "restricted-triple-sum",
        Params::new(&[("q", q.into())]),
        &eta_restricted_triple_direct(q),
        &eta_restricted_triple_sum(q),
    )
}

/// Four routes to one value: the hook-shaped η-sum, `P_{q+1}(H_n)/(n n!)`,
/// `Σ_{|s|=n-1} ρ(s_1+1, ..., s_{q+1}+1, s_{q+2}+2)` and
/// `Σ_{|α|=q+1} η(α_1+1, ..., α_{n+1}+1)`.
pub fn verify_remark_chain(n: u32, q: u32) -> VerificationReport {
    let hook = hook_sum_lhs(n, q);
    let bell = ZetaExpr::rational(bell_of_harmonics(q as usize + 1, n) / n_times_factorial(n));
    let rho_side = ZetaExpr::rational(
        weak_compositions(n - 1, q as usize + 2)
            .map(|c| {
                let mut parts = plus_one(c.parts());
                *parts.last_mut().expect("q + 2 >= 1") += 1;
                rho(parts)
            })
            .fold(Rational::zero(), |a, b| a + b),
    );
    let flat: ZetaExpr = weak_compositions(q + 1, n as usize + 1).map(|c| eta(plus_one(c.parts()))).sum();
    let all_equal = hook == bell && bell == rho_side && rho_side == flat;
    let note = format!(
        "hook = {}; bell = {}; rho = {}; flat = {}",
        hook.render(Render::Zeta),
        bell.render(Render::Zeta),
        rho_side.render(Render::Zeta),
        flat.render(Render::Zeta)
    );
    let report =
        VerificationReport::exact("hook-chain", Params::new(&[("n", n.into()), ("q", q.into())]), &hook, &flat);
    if all_equal {
        report.with_note(note)
    } else {
        report.failed_with(note)
    }
}

/// Compares every admissible index of each weight in range with the shipped
/// reference values.
pub fn verify_tables(weight_min: u32, weight_max: u32) -> Result<Vec<VerificationReport>> {
    for w in [weight_min, weight_max] {
        if !FIXTURE_WEIGHTS.contains(&w) {
            return Err(Error::FixtureMissing(w));
        }
    }
    let rho_ref = rho_fixture();
    let eta_ref = eta_fixture();
    let mut reports = Vec::new();
    for w in weight_min..=weight_max {
        for idx in rho_indices(w) {
            let exact = ZetaExpr::rational(rho_exact(&idx));
            let report = match rho_ref.iter().find(|r| r.index == idx.parts()) {
                Some(r) => VerificationReport::exact(
                    "table-rho",
                    Params::index(idx.parts()),
                    &exact,
                    &ZetaExpr::rational(r.value.clone()),
                ),
                None => VerificationReport::exact("table-rho", Params::index(idx.parts()), &exact, &exact)
                    .failed_with("no reference value"),
            };
            reports.push(report);
        }
        for idx in eta_indices(w) {
            let exact = eta_symbolic(&idx);
            let report = match eta_ref.iter().find(|r| r.index == idx.parts()) {
                Some(r) => VerificationReport::exact("table-eta", Params::index(idx.parts()), &exact, &r.value),
                None => VerificationReport::exact("table-eta", Params::index(idx.parts()), &exact, &exact)
                    .failed_with("no reference value"),
            };
            reports.push(report);
        }
    }
    Ok(reports)
}

/// `Σ_{|α|=q+1} η(α_1+1, ..., α_{n+1}+1)` against
/// `(1/(n! q!)) ∬_{0<t_1<t_2<1} log(t_2/t_1)^q (1-t_1)^n dt_1 dt_2 / ((1-t_1) t_2)`.
///
/// The quadrature error is the difference of the last two refinement levels,
/// an estimate rather than a bound.
pub fn quadrature_check_integral(n: u32, q: u32, tolerance: f64) -> Result<VerificationReport> {
    let lhs: ZetaExpr = weak_compositions(q + 1, n as usize + 1).map(|c| eta(plus_one(c.parts()))).sum();
    let lhs = lhs.evaluate(tolerance / 1000.0);
    let est = eta_sum_integral(n, q, tolerance / 10.0)?;
    let rhs = ApproxReal::from_f64(est.value, est.error_estimate);
    Ok(VerificationReport::numeric("integral", Params::new(&[("n", n.into()), ("q", q.into())]), &lhs, &rhs, tolerance)
        .with_note(format!("tanh-sinh level {}, error of the integral side is a refinement estimate", est.level)))
}

/// Default oracle tolerance for a ρ-index.
pub fn rho_oracle_tolerance(idx: &RhoIndex) -> f64 {
    if idx.depth() >= 5 {
        1e-3
    } else {
        1e-5
    }
}

pub const ETA_ORACLE_TOLERANCE: f64 = 1e-5;

/// Direct series summation against [`rho_exact`]; passes iff the exact value
/// lies inside the oracle's enclosure and the enclosure meets `tolerance`.
pub fn verify_rho_oracle(idx: &RhoIndex, tolerance: f64) -> Result<VerificationReport> {
    let oracle = rho_series_oracle(idx, tolerance, RHO_ORACLE_MAX_N)?;
    let exact = ApproxReal::exact(rho_exact(idx));
    Ok(VerificationReport::numeric("oracle-rho", Params::index(idx.parts()), &oracle, &exact, 0.0)
        .with_note(format!("declared tolerance {tolerance:e}")))
}

/// Direct series summation against the numeric value of [`eta_symbolic`].
pub fn verify_eta_oracle(idx: &EtaIndex, tolerance: f64) -> Result<VerificationReport> {
    let oracle = eta_series_oracle(idx, tolerance, oracle_max_n())?;
    let symbolic = eta_symbolic(idx).evaluate(tolerance * 1e-6);
    Ok(VerificationReport::numeric("oracle-eta", Params::index(idx.parts()), &oracle, &symbolic, 0.0)
        .with_note(format!("declared tolerance {tolerance:e}")))
}

pub fn verify_rho_sum(m: u32, r: u32) -> VerificationReport {
    let (lhs, rhs) = rho_sum_fixed_weight(m, r as usize);
    VerificationReport::exact_rational("rho-sum", Params::new(&[("m", m.into()), ("r", r.into())]), &lhs, &rhs)
}

pub fn verify_rho_sum_general(r: u32, s: u32, q: u32) -> VerificationReport {
    let (lhs, rhs) = rho_sum_general(r, s, q as usize);
    VerificationReport::exact_rational(
        "rho-sum-general",
        Params::new(&[("r", r.into()), ("s", s.into()), ("q", q.into())]),
        &lhs,
        &rhs,
    )
}

pub fn verify_rho_weighted_sum(n: u32, q: u32) -> VerificationReport {
    let (lhs, rhs) = rho_weighted_sum(n, q as usize);
    VerificationReport::exact_rational("rho-weighted-sum", Params::new(&[("n", n.into()), ("q", q.into())]), &lhs, &rhs)
}

pub fn verify_suffix_balance(q: u32, n: u32) -> VerificationReport {
    VerificationReport::exact_rational(
        "suffix-balance",
        Params::new(&[("q", q.into()), ("n", n.into())]),
        &suffix_balance_sum(q as usize, n),
        &Rational::one(),
    )
}

pub fn verify_rho_family(family: &RhoFamily) -> Result<VerificationReport> {
    let (closed, direct) = rho_family_value(family)?;
    let (id, params) = match family {
        RhoFamily::HeadOnes { p, inner } => {
            let mut params = Params::index(inner);
            params.0.insert("p".into(), i64::from(*p));
            ("rho-family-head-ones", params)
        }
        RhoFamily::Uniform { a, n } => ("rho-family-uniform", Params::new(&[("a", (*a).into()), ("n", (*n).into())])),
        RhoFamily::Alternating { a, n } => {
            ("rho-family-alternating", Params::new(&[("a", (*a).into()), ("n", (*n).into())]))
        }
        RhoFamily::Increasing { n } => ("rho-family-increasing", Params::new(&[("n", (*n).into())])),
    };
    Ok(VerificationReport::exact_rational(id, params, &direct, &closed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Tables,
    RhoSum,
    RhoEta,
    Hook,
    Weighted,
    Balance,
    Quadrature,
    Oracle,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Tables,
        Suite::RhoSum,
        Suite::RhoEta,
        Suite::Hook,
        Suite::Weighted,
        Suite::Balance,
        Suite::Quadrature,
        Suite::Oracle,
    ];
}

/// Grid bounds; `cap` clamps every bound to a maximum weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Bound(u32);

impl Bound {
    fn cap(self, max: Option<u32>) -> u32 {
        max.map_or(self.0, |m| self.0.min(m))
    }
}

pub const QUADRATURE_TOLERANCE: f64 = 1e-6;

/// Runs one suite at its default grid, each bound clamped to `max_weight`.
pub fn run_suite(suite: Suite, max_weight: Option<u32>) -> Result<Vec<VerificationReport>> {
    let cap = |b: u32| Bound(b).cap(max_weight);
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                out.extend(run_suite(s, max_weight)?);
            }
        }
        Suite::Tables => {
            let hi = cap(*FIXTURE_WEIGHTS.end());
            if hi >= *FIXTURE_WEIGHTS.start() {
                out = verify_tables(*FIXTURE_WEIGHTS.start(), hi)?;
            }
        }
        Suite::RhoSum => {
            for m in 0..=cap(10) {
                for r in 1..=cap(6) {
                    out.push(verify_rho_sum(m, r));
                }
            }
            for r in 0..=cap(6) {
                for s in 0..=cap(4) {
                    for q in 0..=cap(4) {
                        out.push(verify_rho_sum_general(r, s, q));
                    }
                }
            }
            for n in 0..=cap(10) {
                for q in 0..=cap(5) {
                    out.push(verify_rho_weighted_sum(n, q));
                }
            }
            for family in rho_families(max_weight) {
                out.push(verify_rho_family(&family)?);
            }
        }
        Suite::RhoEta => {
            for q in 0..=cap(4) {
                for r in 0..=cap(4) {
                    out.push(verify_rho_eta_connection(q, r));
                }
            }
        }
        Suite::Hook => {
            for n in 1..=cap(5) {
                for q in 0..=cap(3) {
                    out.push(verify_eta_hook_sum(n, q));
                }
                out.push(verify_eta_hook_sum_single_two(n));
            }
            for n in 1..=cap(4) {
                for q in 0..=cap(3) {
                    out.push(verify_remark_chain(n, q));
                }
            }
            for p in 2..=cap(6) {
                for a in 0..=cap(5) {
                    out.push(verify_eta_hook_closed_form(p, a));
                }
            }
        }
        Suite::Weighted => {
            for n in 1..=cap(5) {
                for q in 0..=cap(3) {
                    out.push(verify_weighted_eta_sum(n, q));
                }
            }
            for n in 1..=cap(6) {
                out.push(verify_weighted_corollaries(WeightedCorollary::SingleTwo, n));
            }
            for n in 1..=cap(4) {
                out.push(verify_weighted_corollaries(WeightedCorollary::ThreeOrTwoTwos, n));
            }
            for q in 0..=cap(6) {
                out.push(verify_weighted_corollaries(WeightedCorollary::DepthThree, q));
                out.push(verify_restricted_triple_sum(q));
            }
        }
        Suite::Balance => {
            for q in 0..=cap(6) {
                for n in 0..=cap(10) {
                    out.push(verify_suffix_balance(q, n));
                }
            }
        }
        Suite::Quadrature => {
            for n in 0..=cap(3) {
                for q in 0..=cap(2) {
                    let tol = QUADRATURE_TOLERANCE;
                    out.push(quadrature_check_integral(n, q, tol).unwrap_or_else(|e| {
                        VerificationReport::unfinished(
                            "integral",
                            Params::new(&[("n", n.into()), ("q", q.into())]),
                            tol,
                            &e,
                        )
                    }));
                }
            }
        }
        Suite::Oracle => {
            let hi = cap(*FIXTURE_WEIGHTS.end());
            for w in *FIXTURE_WEIGHTS.start()..=hi {
                for idx in rho_indices(w) {
                    let tol = rho_oracle_tolerance(&idx);
                    out.push(verify_rho_oracle(&idx, tol).unwrap_or_else(|e| {
                        VerificationReport::unfinished("oracle-rho", Params::index(idx.parts()), tol, &e)
                    }));
                }
                for idx in eta_indices(w) {
                    let tol = ETA_ORACLE_TOLERANCE;
                    out.push(verify_eta_oracle(&idx, tol).unwrap_or_else(|e| {
                        VerificationReport::unfinished("oracle-eta", Params::index(idx.parts()), tol, &e)
                    }));
                }
            }
        }
    }
    Ok(out)
}

fn rho_families(max_weight: Option<u32>) -> Vec<RhoFamily> {
    let cap = |b: u32| Bound(b).cap(max_weight);
    let mut out = Vec::new();
    for p in 0..=cap(3) {
        for w in 2..=cap(4) {
            for idx in rho_indices(w) {
                out.push(RhoFamily::HeadOnes { p, inner: idx.parts().to_vec() });
            }
        }
    }
    for a in 1..=cap(3) {
        for n in 1..=cap(4) {
            out.push(RhoFamily::Uniform { a, n });
            out.push(RhoFamily::Alternating { a, n });
        }
    }
    for n in 2..=cap(6) {
        out.push(RhoFamily::Increasing { n });
    }
    out
}

fn param_string(p: &BTreeMap<String, i64>) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(";")
}

pub fn render_reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("plain data serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["identity_id", "parameters", "lhs", "rhs", "passed", "discrepancy"])
                .expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.identity_id.clone(),
                    param_string(&r.parameters),
                    r.lhs.display(),
                    r.rhs.display(),
                    r.passed.to_string(),
                    r.discrepancy.display(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
        }
        OutputFormat::Markdown => {
            let mut s = String::from("| identity | parameters | lhs | rhs | result |\n|:---|:---|:---|:---|:---|\n");
            for r in reports {
                let status = if r.passed { "pass" } else { "FAIL" };
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {status} |",
                    r.identity_id,
                    param_string(&r.parameters),
                    r.lhs.display(),
                    r.rhs.display()
                )
                .ok();
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(s, "\n{passed}/{} passed", reports.len()).ok();
            s
        }
    }
}

/// Reads back the json form of [`render_reports`].
pub fn parse_reports(json: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}
