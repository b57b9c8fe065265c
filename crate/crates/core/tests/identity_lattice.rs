//! Specialization relations between the identities, and the functional
//! identity behind the generalized Euler transformation.

use binomial_euler::identities::{identity_sides_unchecked, ljunggren_oracle, verify_cross17_euler_route};
use binomial_euler::series::negbinom_series;
use binomial_euler::transforms::generalized_euler_transform;
use binomial_euler::{IdentityId, MPoly, Monomial, QMode, Rat, Series, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn v(var: Var) -> MPoly {
    MPoly::var(var)
}

fn c(n: i64) -> MPoly {
    MPoly::constant(n)
}

fn sides(id: IdentityId, n: usize) -> (MPoly, MPoly) {
    identity_sides_unchecked(id, n, QMode::Symbolic)
}

#[test]
fn munarini7_at_alpha_n_is_simons() {
    for n in 0..=8 {
        let (l7, r7) = sides(IdentityId::Munarini7, n);
        let (l1, r1) = sides(IdentityId::Simons1, n);
        let at_n = [(Var::Alpha, c(n as i64))];
        assert_eq!(l7.substitute(&at_n), l1, "lhs n = {n}");
        assert_eq!(r7.substitute(&at_n), r1, "rhs n = {n}");
    }
}

#[test]
fn ljunggren11_specializes_to_corollaries() {
    for n in 0..=8 {
        let (l11, r11) = sides(IdentityId::Ljunggren11, n);
        let (l13, r13) = sides(IdentityId::Corollary13, n);
        let (l14, r14) = sides(IdentityId::Corollary14, n);
        let x = v(Var::X);
        let to13 = [(Var::Q, c(n as i64)), (Var::Y, &x + &c(1))];
        assert_eq!(l11.substitute(&to13), r13);
        assert_eq!(r11.substitute(&to13), l13);
        let to14 = [(Var::Q, c(n as i64)), (Var::X, &x + &c(1)), (Var::Y, x.clone())];
        assert_eq!(r11.substitute(&to14), l14);
        // (x+1)^{n-k} x^k against x^{n-k} (x+1)^k: equal by k -> n-k symmetry
        assert_eq!(l11.substitute(&to14), r14);
    }
}

/// Replaces each `z^j` by `x^j y^{n-j}`, i.e. substitutes `z = x/y` and
/// clears the denominator `y^n`.
fn homogenize(p: &MPoly, n: u32) -> MPoly {
    MPoly::from_terms(p.terms().map(|(m, coef)| {
        let j = m.exp(Var::Z);
        assert!(j <= n);
        let mut e = m.0;
        e[Var::Z.index()] = 0;
        e[Var::X.index()] += j;
        e[Var::Y.index()] += n - j;
        (Monomial(e), coef.clone())
    }))
}

#[test]
fn ljunggren16_is_dehomogenized_15() {
    for n in 0..=8 {
        let (l15, r15) = sides(IdentityId::Ljunggren15, n);
        let (l16, r16) = sides(IdentityId::Ljunggren16, n);
        assert_eq!(homogenize(&l16, n as u32), l15, "n = {n}");
        assert_eq!(homogenize(&r16, n as u32), r15, "n = {n}");
        let at_y1 = [(Var::Y, c(1)), (Var::X, v(Var::Z))];
        assert_eq!(l15.substitute(&at_y1), l16);
        assert_eq!(r15.substitute(&at_y1), r16);
    }
}

#[test]
fn oracle_matches_both_sides_of_11() {
    for q in 0..=8i64 {
        for n in 0..=q as usize {
            let (lhs, rhs) = identity_sides_unchecked(IdentityId::Ljunggren11, n, QMode::Integer(q));
            let oracle = ljunggren_oracle(n, q).unwrap();
            assert_eq!(oracle, lhs, "n = {n}, q = {q}");
            assert_eq!(oracle, rhs, "n = {n}, q = {q}");
        }
    }
}

#[test]
fn cross17_euler_route_symbolic_q() {
    assert!(verify_cross17_euler_route(8, QMode::Symbolic));
    for q in [-3, 0, 4, 11] {
        assert!(verify_cross17_euler_route(6, QMode::Integer(q)), "q = {q}");
    }
}

/// The defining functional identity of the generalized transform, checked
/// against a double sum whose binomials are built from falling factorials here.
#[test]
fn generalized_transform_functional_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (alpha, x) = (v(Var::Alpha), v(Var::X));
    let falling = |upper: &MPoly, k: usize| -> MPoly {
        let mut acc = MPoly::one();
        for j in 0..k {
            acc = &acc * &(upper - &c(j as i64)).scale(&Rat::new(1, j as i64 + 1));
        }
        acc
    };
    for order in [0, 1, 5, 16] {
        let coeffs: Vec<MPoly> = (0..=order)
            .map(|_| MPoly::constant(Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))))
            .collect();
        let f = Series::from_coeffs(coeffs).unwrap();
        let out = generalized_euler_transform(&f, &x, &alpha);
        for n in 0..=order {
            let upper = &alpha + &c(n as i64);
            let expected: MPoly = (0..=n)
                .map(|k| &(&falling(&upper, n - k) * &x.pow((n - k) as u32)) * f.coeff(k))
                .sum();
            assert_eq!(out.coeff(n), &expected, "order {order}, n = {n}");
        }
    }
    // f = 1 leaves only the prefactor
    let one = Series::one(6);
    assert_eq!(generalized_euler_transform(&one, &x, &alpha), negbinom_series(&x, &alpha, 6));
}
