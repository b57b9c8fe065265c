//! The binomial transform pair and the Euler-type series transformations.
//!
//! Each transformation is available in two independently computed forms:
//! the functional form built from series substitution and products, and the
//! coefficient double sum. The test suites hold the two against each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{gen_binomial, MPoly};
use crate::rational::{binom_int, Rat};
use crate::series::{binom_power_series, negbinom_series, powers, Series};

/// A finite sequence `a_0, ..., a_N` of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqView {
    terms: Vec<MPoly>,
}

impl SeqView {
    pub fn new(terms: Vec<MPoly>) -> Result<SeqView> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(SeqView { terms })
    }

    pub fn from_rats(terms: impl IntoIterator<Item = Rat>) -> Result<SeqView> {
        SeqView::new(terms.into_iter().map(MPoly::constant).collect())
    }

    pub fn terms(&self) -> &[MPoly] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_series(self) -> Series {
        Series::from_coeffs(self.terms).expect("non-empty by construction")
    }
}

impl From<&Series> for SeqView {
    fn from(s: &Series) -> SeqView {
        SeqView {
            terms: s.coeffs().to_vec(),
        }
    }
}

/// `b_m = sum_k C(m, k) a_k`.
pub fn binomial_transform(a: &SeqView) -> SeqView {
    signed_transform(a, false)
}

/// `a_m = sum_k C(m, k) (-1)^{m-k} b_k`.
pub fn inverse_binomial_transform(b: &SeqView) -> SeqView {
    signed_transform(b, true)
}

fn signed_transform(a: &SeqView, alternate: bool) -> SeqView {
    let terms = (0..a.len())
        .map(|m| {
            (0..=m)
                .map(|k| {
                    let mut c = binom_int(m as i64, k);
                    if alternate && (m - k) % 2 == 1 {
                        c = -c;
                    }
                    a.terms[k].scale(&c)
                })
                .sum()
        })
        .collect();
    SeqView { terms }
}

/// `(1/(1-t)) f(t/(1-t))`, truncated at the order of `f`.
///
/// Coefficient `m` of the result is the binomial transform of `f`'s
/// coefficients at index `m`.
pub fn euler_transform(f: &Series) -> Series {
    let order = f.order();
    let one = MPoly::one();
    let geometric = negbinom_series(&one, &MPoly::zero(), order);
    let substituted = f
        .substitute_mobius(&one, order)
        .expect("order matches the input");
    geometric.mul(&substituted)
}

/// `(1 + z t)^exponent f(t)` computed as a series product.
pub fn mul_binomial_power(f: &Series, z: &MPoly, exponent: &MPoly) -> Series {
    binom_power_series(z, exponent, f.order()).mul(f)
}

/// `(1 + z t)^exponent f(t)` from the double sum
/// `sum_k C(exponent, n-k) a_k z^{n-k}`.
pub fn mul_binomial_power_direct(f: &Series, z: &MPoly, exponent: &MPoly) -> Series {
    let order = f.order();
    let z_pows = powers(z, order);
    let binoms: Vec<MPoly> = (0..=order).map(|j| gen_binomial(exponent, j)).collect();
    let coeffs = (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| &(&binoms[n - k] * f.coeff(k)) * &z_pows[n - k])
                .sum()
        })
        .collect();
    Series::from_coeffs(coeffs).expect("non-empty")
}

/// `(1 - x t)^{-(exponent + 1)} f(t/(1 - x t))`, truncated at the order of `f`.
pub fn generalized_euler_transform(f: &Series, x: &MPoly, exponent: &MPoly) -> Series {
    let order = f.order();
    let prefactor = negbinom_series(x, exponent, order);
    let substituted = f
        .substitute_mobius(x, order)
        .expect("order matches the input");
    prefactor.mul(&substituted)
}

/// Coefficient form of [`generalized_euler_transform`]:
/// `sum_k C(exponent + n, n - k) x^{n-k} a_k`.
pub fn generalized_euler_direct(f: &Series, x: &MPoly, exponent: &MPoly) -> Series {
    let order = f.order();
    let x_pows = powers(x, order);
    let coeffs = (0..=order)
        .map(|n| {
            let upper = exponent + &MPoly::constant(n as i64);
            (0..=n)
                .map(|k| &(&gen_binomial(&upper, n - k) * &x_pows[n - k]) * f.coeff(k))
                .sum()
        })
        .collect();
    Series::from_coeffs(coeffs).expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use proptest::prelude::*;

    fn c(n: i64) -> MPoly {
        MPoly::constant(n)
    }

    fn seq(cs: &[i64]) -> SeqView {
        SeqView::new(cs.iter().map(|&n| c(n)).collect()).unwrap()
    }

    fn ser(cs: &[i64]) -> Series {
        seq(cs).into_series()
    }

    fn x() -> MPoly {
        MPoly::var(Var::X)
    }

    fn alpha() -> MPoly {
        MPoly::var(Var::Alpha)
    }

    #[test]
    fn empty_sequence_rejected() {
        assert_eq!(SeqView::new(vec![]), Err(Error::EmptySequence));
    }

    #[test]
    fn forward_examples() {
        assert_eq!(binomial_transform(&seq(&[1, 0, 0, 0])), seq(&[1, 1, 1, 1]));
        assert_eq!(binomial_transform(&seq(&[1, 1, 1, 1])), seq(&[1, 2, 4, 8]));
        // a_k = C(1+k, k) x^k for k = 0, 1
        let a = SeqView::new(vec![c(1), &c(2) * &x()]).unwrap();
        let b = SeqView::new(vec![c(1), &c(1) + &(&c(2) * &x())]).unwrap();
        assert_eq!(binomial_transform(&a), b);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_binomial_transform(&seq(&[1, 1, 1, 1])), seq(&[1, 0, 0, 0]));
        assert_eq!(inverse_binomial_transform(&seq(&[1, 2, 4, 8])), seq(&[1, 1, 1, 1]));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_transform(&ser(&[1, 0, 0])), ser(&[1, 1, 1]));
        assert_eq!(euler_transform(&ser(&[1, 1, 1, 1])), ser(&[1, 2, 4, 8]));
    }

    #[test]
    fn euler_of_negbinom_matches_closed_form() {
        // coefficients sum_k C(a, m-k) C(a+k, k) (-1)^{m-k} (x+1)^k
        let n = 5;
        let f = negbinom_series(&x(), &alpha(), n);
        let out = euler_transform(&f);
        let xp1 = &x() + &c(1);
        for m in 0..=n {
            let expected: MPoly = (0..=m)
                .map(|k| {
                    let sign = Rat::sign_pow(m - k);
                    let upper = &alpha() + &c(k as i64);
                    (&(&gen_binomial(&alpha(), m - k) * &gen_binomial(&upper, k))
                        * &xp1.pow(k as u32))
                        .scale(&sign)
                })
                .sum();
            assert_eq!(out.coeff(m), &expected, "m = {m}");
        }
    }

    #[test]
    fn binomial_power_examples() {
        let f = ser(&[3, -1, 2, 5]);
        assert_eq!(mul_binomial_power(&f, &x(), &c(0)), f);
        let second = (&alpha().pow(2) - &alpha()).scale(&Rat::new(1, 2));
        assert_eq!(
            mul_binomial_power(&ser(&[1, 0, 0]), &c(1), &alpha()).into_coeffs(),
            vec![c(1), alpha(), second]
        );
        assert_eq!(mul_binomial_power(&ser(&[1, 1, 1]), &c(-1), &c(1)), ser(&[1, 0, 0]));
    }

    #[test]
    fn generalized_euler_examples() {
        let f = ser(&[2, -3, 1, 4, 0, 7]);
        assert_eq!(generalized_euler_transform(&f, &c(1), &c(0)), euler_transform(&f));
        let one = ser(&[1, 0, 0, 0]);
        assert_eq!(
            generalized_euler_transform(&one, &x(), &alpha()),
            negbinom_series(&x(), &alpha(), 3)
        );
    }

    #[test]
    fn generalized_euler_with_beta_minus_alpha_and_minus_y() {
        let y = MPoly::var(Var::Y);
        let beta = MPoly::var(Var::Beta);
        let f = negbinom_series(&(&x() + &y), &beta, 4);
        let exponent = &beta - &alpha();
        let out = generalized_euler_transform(&f, &-&y, &exponent);
        for n in 0..=4 {
            let upper = &exponent + &c(n as i64);
            let expected: MPoly = (0..=n)
                .map(|k| &(&gen_binomial(&upper, n - k) * &(-&y).pow((n - k) as u32)) * f.coeff(k))
                .sum();
            assert_eq!(out.coeff(n), &expected);
        }
    }

    fn rat_seq() -> impl Strategy<Value = Vec<Rat>> {
        prop::collection::vec((-20i64..=20, 1i64..=9), 1..=16)
            .prop_map(|v| v.into_iter().map(|(n, d)| Rat::new(n, d)).collect())
    }

    fn poly_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=1), order + 1).prop_map(|cs| {
            Series::from_coeffs(
                cs.into_iter()
                    .map(|(n, ex, ey)| {
                        &(&c(n) * &x().pow(ex)) * &MPoly::var(Var::Y).pow(ey)
                    })
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn round_trip(a in rat_seq()) {
            let s = SeqView::from_rats(a).unwrap();
            prop_assert_eq!(inverse_binomial_transform(&binomial_transform(&s)), s.clone());
            prop_assert_eq!(binomial_transform(&inverse_binomial_transform(&s)), s);
        }

        #[test]
        fn euler_matches_binomial_transform(a in rat_seq()) {
            let s = SeqView::from_rats(a).unwrap();
            let transformed = euler_transform(&s.clone().into_series());
            let expected = binomial_transform(&s);
            prop_assert_eq!(transformed.coeffs(), expected.terms());
        }

        #[test]
        fn lemma_paths_agree(f in poly_series(6), k in 0i64..4) {
            let z = MPoly::var(Var::Z);
            let exponent = &alpha() - &c(k);
            prop_assert_eq!(
                mul_binomial_power(&f, &z, &exponent),
                mul_binomial_power_direct(&f, &z, &exponent)
            );
        }

        #[test]
        fn generalized_euler_paths_agree(f in poly_series(6)) {
            prop_assert_eq!(
                generalized_euler_transform(&f, &x(), &alpha()),
                generalized_euler_direct(&f, &x(), &alpha())
            );
        }

        #[test]
        fn generalized_euler_specializes(a in rat_seq()) {
            let f = SeqView::from_rats(a).unwrap().into_series();
            prop_assert_eq!(generalized_euler_transform(&f, &c(1), &c(0)), euler_transform(&f));
        }
    }
}
