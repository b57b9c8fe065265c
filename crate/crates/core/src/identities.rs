//! Both sides of the Simons, Ljunggren and Munarini binomial identities as
//! exact polynomials, and the series computations that derive them.
//!
//! Every identity side is a literal transcription of its summation; nothing
//! is shared between evaluators except [`gen_binomial`]. An identity holds at
//! a given `n` exactly when `lhs - rhs` is the zero polynomial, which (with the
//! parameters left symbolic) proves it for all parameter values at that `n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::{gen_binomial, MPoly, Var};
use crate::rational::{binom_int, Rat};
use crate::series::{binom_power_series, negbinom_series, Series, SeriesComparison};
use crate::transforms::{euler_transform, generalized_euler_transform, mul_binomial_power};

/// The identities the suite knows, named after their equation numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    Simons1,
    Munarini7,
    Munarini10,
    Ljunggren11,
    Corollary13,
    Corollary14,
    Ljunggren15,
    Ljunggren16,
    Cross17,
    Munarini30,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Simons1,
        IdentityId::Munarini7,
        IdentityId::Munarini10,
        IdentityId::Ljunggren11,
        IdentityId::Corollary13,
        IdentityId::Corollary14,
        IdentityId::Ljunggren15,
        IdentityId::Ljunggren16,
        IdentityId::Cross17,
        IdentityId::Munarini30,
    ];

    pub fn equation(self) -> u32 {
        match self {
            IdentityId::Simons1 => 1,
            IdentityId::Munarini7 => 7,
            IdentityId::Munarini10 => 10,
            IdentityId::Ljunggren11 => 11,
            IdentityId::Corollary13 => 13,
            IdentityId::Corollary14 => 14,
            IdentityId::Ljunggren15 => 15,
            IdentityId::Ljunggren16 => 16,
            IdentityId::Cross17 => 17,
            IdentityId::Munarini30 => 30,
        }
    }

    /// Short label used in verification output, e.g. `eq10`.
    pub fn label(self) -> String {
        format!("eq{}", self.equation())
    }

    /// Descriptive alias, e.g. `munarini10`.
    pub fn alias(self) -> &'static str {
        match self {
            IdentityId::Simons1 => "simons1",
            IdentityId::Munarini7 => "munarini7",
            IdentityId::Munarini10 => "munarini10",
            IdentityId::Ljunggren11 => "ljunggren11",
            IdentityId::Corollary13 => "corollary13",
            IdentityId::Corollary14 => "corollary14",
            IdentityId::Ljunggren15 => "ljunggren15",
            IdentityId::Ljunggren16 => "ljunggren16",
            IdentityId::Cross17 => "cross17",
            IdentityId::Munarini30 => "munarini30",
        }
    }

    /// Whether the identity involves the parameter `q`.
    pub fn uses_q(self) -> bool {
        matches!(
            self,
            IdentityId::Ljunggren11
                | IdentityId::Ljunggren15
                | IdentityId::Ljunggren16
                | IdentityId::Cross17
        )
    }

    /// Whether an integer `q` must satisfy `q >= n`.
    pub fn requires_q_at_least_n(self) -> bool {
        matches!(
            self,
            IdentityId::Ljunggren11 | IdentityId::Ljunggren15 | IdentityId::Ljunggren16
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdentityId> {
        let s = s.trim().to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.label() == s || id.alias() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

/// How the parameter `q` is represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QMode {
    /// `q` is the polynomial variable [`Var::Q`].
    #[default]
    Symbolic,
    /// `q` is a fixed integer.
    Integer(i64),
}

impl QMode {
    fn poly(self) -> MPoly {
        match self {
            QMode::Symbolic => MPoly::var(Var::Q),
            QMode::Integer(q) => MPoly::constant(q),
        }
    }

    fn below(self, id: IdentityId, n: usize) -> Option<i64> {
        match self {
            QMode::Integer(q) if id.requires_q_at_least_n() && q < n as i64 => Some(q),
            _ => None,
        }
    }
}

fn c(n: i64) -> MPoly {
    MPoly::constant(n)
}

fn v(var: Var) -> MPoly {
    MPoly::var(var)
}

fn nk(n: usize, k: usize) -> MPoly {
    MPoly::constant(binom_int(n as i64, k))
}

fn binom(p: &MPoly, k: usize) -> MPoly {
    gen_binomial(p, k)
}

fn sign(k: usize) -> Rat {
    Rat::sign_pow(k)
}

fn pw(p: &MPoly, e: usize) -> MPoly {
    p.pow(e as u32)
}

fn sum(n: usize, term: impl Fn(usize) -> MPoly) -> MPoly {
    (0..=n).map(term).sum()
}

/// Both sides of `id` at `n`.
///
/// In integer `q` mode the Ljunggren identities 11, 15 and 16 require
/// `q >= n`; see [`identity_sides_unchecked`] to evaluate regardless.
pub fn identity_sides(id: IdentityId, n: usize, q: QMode) -> Result<(MPoly, MPoly)> {
    if let Some(q) = q.below(id, n) {
        return Err(Error::QBelowN { q, n });
    }
    Ok(identity_sides_unchecked(id, n, q))
}

/// Both sides of `id` at `n`, without the `q >= n` hypothesis check.
pub fn identity_sides_unchecked(id: IdentityId, n: usize, q: QMode) -> (MPoly, MPoly) {
    let (alpha, beta, x, y, z) = (v(Var::Alpha), v(Var::Beta), v(Var::X), v(Var::Y), v(Var::Z));
    let q = q.poly();
    let shift = |p: &MPoly, k: usize| p + &c(k as i64);
    match id {
        IdentityId::Simons1 => {
            let xp1 = &x + &c(1);
            let lhs = sum(n, |k| &(&nk(n, k) * &nk(n + k, k)) * &pw(&x, k));
            let rhs = sum(n, |k| {
                (&(&nk(n, k) * &nk(n + k, k)) * &pw(&xp1, k)).scale(&sign(n - k))
            });
            (lhs, rhs)
        }
        IdentityId::Munarini7 => {
            let xp1 = &x + &c(1);
            let lhs = sum(n, |k| &(&nk(n, k) * &binom(&shift(&alpha, k), k)) * &pw(&x, k));
            let rhs = sum(n, |k| {
                (&(&binom(&alpha, n - k) * &binom(&shift(&alpha, k), k)) * &pw(&xp1, k))
                    .scale(&sign(n - k))
            });
            (lhs, rhs)
        }
        IdentityId::Munarini10 => {
            let upper = shift(&(&beta - &alpha), n);
            let xpy = &x + &y;
            let neg_y = -&y;
            let lhs = sum(n, |k| {
                &(&(&binom(&alpha, n - k) * &binom(&shift(&beta, k), k)) * &pw(&x, k))
                    * &pw(&y, n - k)
            });
            let rhs = sum(n, |k| {
                &(&(&binom(&upper, n - k) * &binom(&shift(&beta, k), k)) * &pw(&neg_y, n - k))
                    * &pw(&xpy, k)
            });
            (lhs, rhs)
        }
        IdentityId::Ljunggren11 => {
            let xmy = &x - &y;
            let lhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&q, k)) * &pw(&x, n - k)) * &pw(&y, k)
            });
            let rhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&shift(&q, k), k)) * &pw(&xmy, n - k)) * &pw(&y, k)
            });
            (lhs, rhs)
        }
        IdentityId::Corollary13 => {
            let xp1 = &x + &c(1);
            let lhs = sum(n, |k| {
                (&(&nk(n, k) * &nk(n + k, k)) * &pw(&xp1, k)).scale(&sign(n - k))
            });
            let rhs = sum(n, |k| &(&pw(&nk(n, k), 2) * &pw(&x, n - k)) * &pw(&xp1, k));
            (lhs, rhs)
        }
        IdentityId::Corollary14 => {
            let xp1 = &x + &c(1);
            let lhs = sum(n, |k| &(&nk(n, k) * &nk(n + k, k)) * &pw(&x, k));
            let rhs = sum(n, |k| &(&pw(&nk(n, k), 2) * &pw(&x, n - k)) * &pw(&xp1, k));
            (lhs, rhs)
        }
        IdentityId::Ljunggren15 => {
            let xpy = &x + &y;
            let lhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&shift(&q, k), k)) * &pw(&x, k)) * &pw(&y, n - k)
            });
            let rhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&q, k)) * &pw(&xpy, n - k)) * &pw(&x, k)
            });
            (lhs, rhs)
        }
        IdentityId::Ljunggren16 => {
            let zp1 = &z + &c(1);
            let lhs = sum(n, |k| &(&nk(n, k) * &binom(&shift(&q, k), k)) * &pw(&z, k));
            let rhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&q, k)) * &pw(&zp1, n - k)) * &pw(&z, k)
            });
            (lhs, rhs)
        }
        IdentityId::Cross17 => {
            let xp1 = &x + &c(1);
            let lhs = sum(n, |k| {
                &(&(&nk(n, k) * &binom(&q, k)) * &pw(&xp1, n - k)) * &pw(&x, k)
            });
            let rhs = sum(n, |k| {
                (&(&binom(&q, n - k) * &binom(&shift(&q, k), k)) * &pw(&xp1, k))
                    .scale(&sign(n - k))
            });
            (lhs, rhs)
        }
        IdentityId::Munarini30 => {
            let upper = shift(&(&beta - &alpha), n);
            let xpy = &x + &y;
            let lhs = sum(n, |k| {
                &(&(&binom(&alpha, n - k) * &binom(&shift(&beta, k), k)) * &pw(&x, k))
                    * &pw(&y, n - k)
            });
            let rhs = sum(n, |k| {
                &(&(&binom(&upper, n - k) * &binom(&alpha, k)) * &pw(&x, n - k)) * &pw(&xpy, k)
            });
            (lhs, rhs)
        }
    }
}

/// Outcome of one identity at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NResult {
    pub n: usize,
    pub pass: bool,
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub diff: MPoly,
    /// Set when an integer `q` violated the `q >= n` hypothesis and the
    /// check was run anyway.
    pub q_below_n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub n_range: (usize, usize),
    pub q_mode: QMode,
    pub results: Vec<NResult>,
    pub all_pass: bool,
}

impl IdentityReport {
    fn assemble(id: IdentityId, n_max: usize, q: QMode, results: Vec<NResult>) -> IdentityReport {
        let all_pass = results.iter().all(|r| r.pass);
        IdentityReport {
            identity: id,
            n_range: (0, n_max),
            q_mode: q,
            results,
            all_pass,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub exec: Execution,
    /// Evaluate Ljunggren identities with an integer `q < n` instead of
    /// failing; affected rows are flagged with `q_below_n`.
    pub allow_q_below_n: bool,
}

fn check(id: IdentityId, n: usize, q: QMode) -> NResult {
    let (lhs, rhs) = identity_sides_unchecked(id, n, q);
    let diff = &lhs - &rhs;
    NResult {
        n,
        pass: diff.is_zero(),
        lhs,
        rhs,
        diff,
        q_below_n: q.below(id, n).is_some(),
    }
}

fn precheck(ids: &[IdentityId], n_max: usize, q: QMode, opts: &VerifyOptions) -> Result<()> {
    if opts.allow_q_below_n {
        return Ok(());
    }
    for &id in ids {
        if let Some(n) = (0..=n_max).find(|&n| q.below(id, n).is_some()) {
            if let QMode::Integer(q) = q {
                return Err(Error::QBelowN { q, n });
            }
        }
    }
    Ok(())
}

/// Checks `id` for every `n` in `0..=n_max`.
pub fn verify_identity(id: IdentityId, n_max: usize, q: QMode) -> Result<IdentityReport> {
    verify_identity_with(id, n_max, q, &VerifyOptions::default())
}

pub fn verify_identity_with(
    id: IdentityId,
    n_max: usize,
    q: QMode,
    opts: &VerifyOptions,
) -> Result<IdentityReport> {
    Ok(verify_many(&[id], n_max, q, opts)?.remove(0))
}

/// Runs every identity in `ids`; reports come back in the order of `ids`.
pub fn verify_many(
    ids: &[IdentityId],
    n_max: usize,
    q: QMode,
    opts: &VerifyOptions,
) -> Result<Vec<IdentityReport>> {
    precheck(ids, n_max, q, opts)?;
    let jobs: Vec<(IdentityId, usize)> = ids
        .iter()
        .flat_map(|&id| (0..=n_max).rev().map(move |n| (id, n)))
        .collect();
    let mut results = opts.exec.map(jobs, |(id, n)| (id, check(id, n, q)));
    results.sort_by_key(|(id, r)| (ids.iter().position(|x| x == id), r.n));
    let mut reports = Vec::with_capacity(ids.len());
    let mut iter = results.into_iter().peekable();
    for &id in ids {
        let mut rows = Vec::with_capacity(n_max + 1);
        while let Some((_, r)) = iter.next_if(|(i, _)| *i == id) {
            rows.push(r);
        }
        reports.push(IdentityReport::assemble(id, n_max, q, rows));
    }
    Ok(reports)
}

pub fn verify_all(n_max: usize, q: QMode, opts: &VerifyOptions) -> Result<Vec<IdentityReport>> {
    verify_many(&IdentityId::ALL, n_max, q, opts)
}

/// Coefficient of `t^n` in `(x t + y)^n (1 + t)^q`, by expanding the product.
pub fn ljunggren_oracle(n: usize, q: i64) -> Result<MPoly> {
    if q < n as i64 {
        return Err(Error::QBelowN { q, n });
    }
    let q = q as usize;
    let order = n + q;
    let mut linear = vec![MPoly::zero(); order + 1];
    linear[0] = v(Var::Y);
    if order >= 1 {
        linear[1] = v(Var::X);
    }
    let linear = Series::from_coeffs(linear)?;
    let mut one_plus_t = vec![MPoly::zero(); order + 1];
    one_plus_t[0] = MPoly::one();
    if order >= 1 {
        one_plus_t[1] = MPoly::one();
    }
    let one_plus_t = Series::from_coeffs(one_plus_t)?;
    let mut product = Series::one(order);
    for _ in 0..n {
        product = product.mul(&linear);
    }
    for _ in 0..q {
        product = product.mul(&one_plus_t);
    }
    Ok(product.coeff(n).clone())
}

/// Re-derives Simons' identity through Ljunggren's.
///
/// Returns the left sides of corollaries 13 and 14, both obtained by
/// substituting into the symbolic right side of identity 11 (`q = n` with
/// `y -> x+1` for 13, and `x -> x+1, y -> x` for 14), and the shared
/// right side `sum_k C(n,k)^2 x^{n-k} (x+1)^k` written out directly.
pub fn derive_simons_from_ljunggren(n: usize) -> (MPoly, MPoly, MPoly) {
    let x = v(Var::X);
    let (_, rhs11) = identity_sides_unchecked(IdentityId::Ljunggren11, n, QMode::Symbolic);
    let q_n = (Var::Q, c(n as i64));
    let lhs13 = rhs11.substitute(&[q_n.clone(), (Var::Y, &x + &c(1))]);
    let lhs14 = rhs11.substitute(&[q_n, (Var::X, &x + &c(1)), (Var::Y, x.clone())]);
    let xp1 = &x + &c(1);
    let shared = sum(n, |k| &(&pw(&nk(n, k), 2) * &pw(&x, n - k)) * &pw(&xp1, k));
    (lhs13, lhs14, shared)
}

/// Parameter assignment for the two-parameter proof chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainParams {
    pub alpha: MPoly,
    pub beta: MPoly,
    pub x: MPoly,
    pub y: MPoly,
}

impl Default for ChainParams {
    fn default() -> ChainParams {
        ChainParams {
            alpha: v(Var::Alpha),
            beta: v(Var::Beta),
            x: v(Var::X),
            y: v(Var::Y),
        }
    }
}

/// The two series a proof chain equates.
#[derive(Clone, Debug)]
pub struct ChainOutcome {
    /// The generalized Euler transform side.
    pub transformed: Series,
    /// `(1 + y t)^alpha (1 - x t)^{-(beta + 1)}` built as a product.
    pub product: Series,
    pub comparison: SeriesComparison,
}

fn target_product(order: usize, p: &ChainParams) -> Series {
    mul_binomial_power(&negbinom_series(&p.x, &p.beta, order), &p.y, &p.alpha)
}

/// `f = (1 - (x+y) t)^{-(beta+1)}`, transformed with parameter `beta - alpha`
/// at `-y`, against the product series.
pub fn munarini10_chain(order: usize, p: &ChainParams) -> ChainOutcome {
    let f = negbinom_series(&(&p.x + &p.y), &p.beta, order);
    let transformed = generalized_euler_transform(&f, &-&p.y, &(&p.beta - &p.alpha));
    let product = target_product(order, p);
    let comparison = transformed.compare(&product);
    ChainOutcome {
        transformed,
        product,
        comparison,
    }
}

/// `f = (1 + (x+y) t)^alpha`, transformed with parameter `beta - alpha` at
/// `x`, against the same product series.
pub fn munarini30_chain(order: usize, p: &ChainParams) -> ChainOutcome {
    let f = binom_power_series(&(&p.x + &p.y), &p.alpha, order);
    let transformed = generalized_euler_transform(&f, &p.x, &(&p.beta - &p.alpha));
    let product = target_product(order, p);
    let comparison = transformed.compare(&product);
    ChainOutcome {
        transformed,
        product,
        comparison,
    }
}

pub fn verify_munarini10_chain(order: usize) -> bool {
    munarini10_chain(order, &ChainParams::default()).comparison.equal()
}

pub fn verify_munarini30_chain(order: usize) -> bool {
    munarini30_chain(order, &ChainParams::default()).comparison.equal()
}

/// Checks identity 17 through the Euler transform of
/// `a_k = C(q, k) (x/(x+1))^k`.
///
/// Denominators are cleared by scaling every `a_k` by `(x+1)^order`, so
/// coefficient `n` of the transform must equal `(x+1)^{order-n}` times the
/// right side of identity 17.
pub fn verify_cross17_euler_route(order: usize, q: QMode) -> bool {
    let (x, qp) = (v(Var::X), q.poly());
    let xp1 = &x + &c(1);
    let coeffs = (0..=order)
        .map(|k| &(&binom(&qp, k) * &pw(&x, k)) * &pw(&xp1, order - k))
        .collect();
    let f = Series::from_coeffs(coeffs).expect("non-empty");
    let transformed = euler_transform(&f);
    (0..=order).all(|n| {
        let (_, rhs) = identity_sides_unchecked(IdentityId::Cross17, n, q);
        transformed.coeff(n) == &(&rhs * &pw(&xp1, order - n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.label().parse::<IdentityId>().unwrap(), id);
            assert_eq!(id.alias().parse::<IdentityId>().unwrap(), id);
        }
        assert!("eq2".parse::<IdentityId>().is_err());
    }

    #[test]
    fn simons_small_cases() {
        let (l, r) = identity_sides(IdentityId::Simons1, 0, QMode::Symbolic).unwrap();
        assert_eq!((l.clone(), r), (MPoly::one(), MPoly::one()));
        let (l, r) = identity_sides(IdentityId::Simons1, 2, QMode::Symbolic).unwrap();
        assert_eq!(l, p("6*x^2 + 6*x + 1"));
        assert_eq!(r, p("6*x^2 + 6*x + 1"));
    }

    #[test]
    fn ljunggren_small_case() {
        let (l, r) = identity_sides(IdentityId::Ljunggren11, 1, QMode::Integer(2)).unwrap();
        assert_eq!(l, p("x + 2*y"));
        assert_eq!(r, p("x + 2*y"));
        assert_eq!(ljunggren_oracle(1, 2).unwrap(), p("x + 2*y"));
    }

    #[test]
    fn q_below_n_is_reported() {
        assert_eq!(
            identity_sides(IdentityId::Ljunggren15, 3, QMode::Integer(1)),
            Err(Error::QBelowN { q: 1, n: 3 })
        );
        // identity 17 holds for arbitrary q, so no hypothesis applies
        assert!(identity_sides(IdentityId::Cross17, 3, QMode::Integer(1)).is_ok());
        assert_eq!(
            verify_identity(IdentityId::Ljunggren11, 3, QMode::Integer(1)),
            Err(Error::QBelowN { q: 1, n: 2 })
        );
        assert_eq!(ljunggren_oracle(3, 2), Err(Error::QBelowN { q: 2, n: 3 }));
    }

    #[test]
    fn lenient_mode_still_evaluates() {
        let opts = VerifyOptions {
            allow_q_below_n: true,
            ..Default::default()
        };
        let report = verify_identity_with(IdentityId::Ljunggren11, 3, QMode::Integer(1), &opts).unwrap();
        let flagged: Vec<usize> = report.results.iter().filter(|r| r.q_below_n).map(|r| r.n).collect();
        assert_eq!(flagged, vec![2, 3]);
        assert!(report.all_pass);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(ljunggren_oracle(0, 5).unwrap(), MPoly::one());
        let (lhs, _) = identity_sides(IdentityId::Ljunggren11, 2, QMode::Integer(3)).unwrap();
        assert_eq!(ljunggren_oracle(2, 3).unwrap(), lhs);
    }

    #[test]
    fn simons_via_ljunggren() {
        assert_eq!(
            derive_simons_from_ljunggren(0),
            (MPoly::one(), MPoly::one(), MPoly::one())
        );
        let two_x_1 = p("2*x + 1");
        assert_eq!(
            derive_simons_from_ljunggren(1),
            (two_x_1.clone(), two_x_1.clone(), two_x_1)
        );
        for n in 2..=6 {
            let (a, b, s) = derive_simons_from_ljunggren(n);
            assert_eq!(a, s, "n = {n}");
            assert_eq!(b, s, "n = {n}");
            let (simons_lhs, simons_rhs) = identity_sides_unchecked(IdentityId::Simons1, n, QMode::Symbolic);
            assert_eq!(a, simons_rhs);
            assert_eq!(b, simons_lhs);
        }
    }

    #[test]
    fn report_is_in_n_order() {
        let report = verify_identity(IdentityId::Munarini7, 5, QMode::Symbolic).unwrap();
        assert!(report.all_pass);
        let ns: Vec<usize> = report.results.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![0, 1, 2, 3, 4, 5]);
        assert!(report.results.iter().all(|r| r.diff.is_zero() == r.pass));
    }

    #[test]
    fn failing_report_carries_diff() {
        let results = vec![check(IdentityId::Simons1, 1, QMode::Symbolic), NResult {
            n: 2,
            pass: false,
            lhs: p("x"),
            rhs: p("1"),
            diff: p("x - 1"),
            q_below_n: false,
        }];
        let report = IdentityReport::assemble(IdentityId::Simons1, 2, QMode::Symbolic, results);
        assert!(!report.all_pass);
    }

    #[test]
    fn chains_small_orders() {
        assert!(verify_munarini10_chain(0));
        assert!(verify_munarini30_chain(0));
        assert!(verify_munarini10_chain(4));
        assert!(verify_munarini30_chain(4));
    }

    #[test]
    fn chain_degenerate_parameters() {
        let beta_both = ChainParams {
            alpha: MPoly::var(Var::Beta),
            y: MPoly::zero(),
            ..Default::default()
        };
        assert!(munarini10_chain(8, &beta_both).comparison.equal());
        let alpha_zero = ChainParams {
            alpha: MPoly::zero(),
            ..Default::default()
        };
        let out = munarini30_chain(8, &alpha_zero);
        assert!(out.comparison.equal());
        assert_eq!(out.product, negbinom_series(&MPoly::var(Var::X), &MPoly::var(Var::Beta), 8));
    }

    #[test]
    fn chain_coefficients_are_identity_sides() {
        let out = munarini10_chain(5, &ChainParams::default());
        for n in 0..=5 {
            let (lhs, rhs) = identity_sides_unchecked(IdentityId::Munarini10, n, QMode::Symbolic);
            assert_eq!(out.product.coeff(n), &lhs);
            assert_eq!(out.transformed.coeff(n), &rhs);
            let (_, rhs30) = identity_sides_unchecked(IdentityId::Munarini30, n, QMode::Symbolic);
            assert_eq!(munarini30_chain(5, &ChainParams::default()).transformed.coeff(n), &rhs30);
        }
    }

    #[test]
    fn cross17_route() {
        assert!(verify_cross17_euler_route(6, QMode::Symbolic));
        assert!(verify_cross17_euler_route(5, QMode::Integer(2)));
    }

    #[test]
    fn execution_modes_agree() {
        let seq = VerifyOptions { exec: Execution::Sequential, ..Default::default() };
        let par = VerifyOptions { exec: Execution::Parallel, ..Default::default() };
        let a = verify_all(4, QMode::Symbolic, &seq).unwrap();
        let b = verify_all(4, QMode::Symbolic, &par).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.all_pass));
    }
}
