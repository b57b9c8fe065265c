//! Legendre polynomials: the Rodrigues construction and three binomial-sum
//! representations that must reproduce it exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::exec::Execution;
use crate::poly::{MPoly, Var};
use crate::rational::{binom_int, Rat};

/// A polynomial in `x` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct UniPoly(MPoly);

impl UniPoly {
    /// Returns `None` if `p` mentions any variable other than `x`.
    pub fn new(p: MPoly) -> Option<UniPoly> {
        p.vars()
            .iter()
            .all(|&v| v == Var::X)
            .then_some(UniPoly(p))
    }

    pub fn as_mpoly(&self) -> &MPoly {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.degree_in(Var::X)
    }

    pub fn eval(&self, x: Rat) -> Rat {
        let env = BTreeMap::from([(Var::X, x)]);
        self.0.eval(&env).expect("only x occurs")
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> UniPoly {
        UniPoly(self.0.substitute(&[(Var::X, -MPoly::var(Var::X))]))
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly(self.0.scale(c))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn x() -> MPoly {
    MPoly::var(Var::X)
}

fn half_shift(offset: i64) -> MPoly {
    (&x() + &MPoly::constant(offset)).scale(&Rat::new(1, 2))
}

/// `P_n(x) = (d/dx)^n (x^2 - 1)^n / (2^n n!)`.
pub fn legendre_rodrigues(n: usize) -> UniPoly {
    let base = &x().pow(2) - &MPoly::one();
    let mut p = base.pow(n as u32);
    for _ in 0..n {
        p = p.derivative(Var::X);
    }
    let factorial: Rat = (1..=n).map(Rat::from).product();
    let norm = Rat::from(2).pow(n as u32) * factorial;
    UniPoly(p.scale(&norm.recip()))
}

/// `sum_k C(n,k) C(n+k,k) ((x-1)/2)^k`.
pub fn legendre_rep20(n: usize) -> UniPoly {
    let u = half_shift(-1);
    UniPoly(
        (0..=n)
            .map(|k| {
                let c = binom_int(n as i64, k) * binom_int((n + k) as i64, k);
                u.pow(k as u32).scale(&c)
            })
            .sum(),
    )
}

/// `sum_k C(n,k) C(n+k,k) (-1)^{n-k} ((x+1)/2)^k`.
pub fn legendre_rep21(n: usize) -> UniPoly {
    let w = half_shift(1);
    UniPoly(
        (0..=n)
            .map(|k| {
                let c = binom_int(n as i64, k)
                    * binom_int((n + k) as i64, k)
                    * Rat::sign_pow(n - k);
                w.pow(k as u32).scale(&c)
            })
            .sum(),
    )
}

/// `sum_k C(n,k)^2 ((x-1)/2)^{n-k} ((x+1)/2)^k`.
///
/// This is the ratio form `((x-1)/2)^n sum_k C(n,k)^2 ((x+1)/(x-1))^k` with
/// the powers of `x - 1` multiplied through.
pub fn legendre_rep22(n: usize) -> UniPoly {
    let u = half_shift(-1);
    let w = half_shift(1);
    UniPoly(
        (0..=n)
            .map(|k| {
                let c = binom_int(n as i64, k).pow(2);
                (&u.pow((n - k) as u32) * &w.pow(k as u32)).scale(&c)
            })
            .sum(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Rodrigues,
    Rep20,
    Rep21,
    Rep22,
}

impl Representation {
    pub const ALL: [Representation; 4] = [
        Representation::Rodrigues,
        Representation::Rep20,
        Representation::Rep21,
        Representation::Rep22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::Rodrigues => "rodrigues",
            Representation::Rep20 => "rep20",
            Representation::Rep21 => "rep21",
            Representation::Rep22 => "rep22",
        }
    }

    pub fn compute(self, n: usize) -> UniPoly {
        match self {
            Representation::Rodrigues => legendre_rodrigues(n),
            Representation::Rep20 => legendre_rep20(n),
            Representation::Rep21 => legendre_rep21(n),
            Representation::Rep22 => legendre_rep22(n),
        }
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Representation, Error> {
        Representation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown representation `{s}`")))
    }
}

/// All four representations at `n`, and whether they coincide.
pub fn all_representations(n: usize) -> (Vec<(Representation, UniPoly)>, bool) {
    let polys: Vec<_> = Representation::ALL
        .into_iter()
        .map(|r| (r, r.compute(n)))
        .collect();
    let agree = polys.windows(2).all(|w| w[0].1 == w[1].1);
    (polys, agree)
}

/// Four-way agreement for every `n` in `0..=n_max`.
pub fn check_agreement(n_max: usize, exec: Execution) -> Vec<bool> {
    exec.map_range(0..n_max + 1, |n| all_representations(n).1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly {
        UniPoly::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rodrigues_low_degrees() {
        assert_eq!(legendre_rodrigues(0), p("1"));
        assert_eq!(legendre_rodrigues(1), p("x"));
        assert_eq!(legendre_rodrigues(2), p("(3*x^2 - 1)/2"));
        assert_eq!(legendre_rodrigues(3), p("(5*x^3 - 3*x)/2"));
        assert_eq!(legendre_rodrigues(2).to_string(), "3/2*x^2 - 1/2");
    }

    #[test]
    fn representation_low_degrees() {
        for rep in Representation::ALL {
            assert_eq!(rep.compute(0), p("1"), "{}", rep.name());
            assert_eq!(rep.compute(1), p("x"), "{}", rep.name());
        }
        assert_eq!(legendre_rep22(2), p("(3*x^2 - 1)/2"));
    }

    #[test]
    fn endpoint_values() {
        for n in 0..=15 {
            assert_eq!(legendre_rep20(n).eval(Rat::one()), Rat::one());
            assert_eq!(legendre_rep21(n).eval(-Rat::one()), Rat::sign_pow(n));
        }
    }

    #[test]
    fn rep22_matches_rep20() {
        for n in 0..=15 {
            assert_eq!(legendre_rep22(n), legendre_rep20(n), "n = {n}");
        }
    }

    #[test]
    fn parity() {
        for n in 0..=12 {
            let pn = legendre_rodrigues(n);
            assert_eq!(pn.reflect(), pn.scale(&Rat::sign_pow(n)));
            assert_eq!(pn.degree(), n as u32);
        }
    }

    #[test]
    fn rejects_other_variables() {
        assert!(UniPoly::new("x + y".parse().unwrap()).is_none());
        assert!("rep23".parse::<Representation>().is_err());
    }

    #[test]
    fn agreement_sweep() {
        assert!(check_agreement(10, Execution::default()).into_iter().all(|ok| ok));
    }
}
