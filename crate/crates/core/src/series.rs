//! Truncated formal power series in `t` with polynomial coefficients.
//!
//! The series variable is the coefficient index; it never appears inside an
//! [`MPoly`]. Every series carries its truncation order and binary operations
//! return the smaller of the two orders.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{gen_binomial, MPoly};
use crate::rational::binom_int;

/// `a_0 + a_1 t + ... + a_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Series {
    coeffs: Vec<MPoly>,
}

/// Result of comparing two series up to their common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    /// The order the comparison was made at.
    pub order: usize,
    /// First index at which the coefficients differ.
    pub first_mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<MPoly>) -> Result<Series> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(Series { coeffs })
    }

    /// The series `c + O(t^{order+1})`.
    pub fn constant(c: MPoly, order: usize) -> Series {
        let mut coeffs = vec![MPoly::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn one(order: usize) -> Series {
        Series::constant(MPoly::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &MPoly {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<MPoly> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order()) + 1;
        Series {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn compare(&self, other: &Series) -> SeriesComparison {
        let order = self.order().min(other.order());
        let first_mismatch = (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k]);
        SeriesComparison {
            order,
            first_mismatch,
        }
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                    .sum()
            })
            .collect();
        Series { coeffs }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    /// `f(t / (1 - x t))` truncated at `order`.
    ///
    /// Expands each `a_m t^m (1 - x t)^{-m}` separately, so coefficient `n` is
    /// `sum_m a_m C(n-1, n-m) x^{n-m}`.
    pub fn substitute_mobius(&self, x: &MPoly, order: usize) -> Result<Series> {
        if self.order() < order {
            return Err(Error::InsufficientOrder {
                have: self.order(),
                need: order,
            });
        }
        let x_pows = powers(x, order);
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|m| {
                        let j = n - m;
                        let c = binom_int(m as i64 - 1 + j as i64, j);
                        if c.is_zero() || self.coeffs[m].is_zero() {
                            MPoly::zero()
                        } else {
                            (&self.coeffs[m] * &x_pows[j]).scale(&c)
                        }
                    })
                    .sum()
            })
            .collect();
        Ok(Series { coeffs })
    }
}

/// `[1, p, p^2, ..., p^n]`.
pub(crate) fn powers(p: &MPoly, n: usize) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(MPoly::one());
    for k in 1..=n {
        let next = &out[k - 1] * p;
        out.push(next);
    }
    out
}

/// `(1 - base t)^{-(alpha + 1)}`: coefficient `k` is `C(alpha + k, k) base^k`.
pub fn negbinom_series(base: &MPoly, alpha: &MPoly, order: usize) -> Series {
    let base_pows = powers(base, order);
    let coeffs = (0..=order)
        .map(|k| {
            let upper = alpha + &MPoly::constant(k as i64);
            &gen_binomial(&upper, k) * &base_pows[k]
        })
        .collect();
    Series { coeffs }
}

/// `(1 + z t)^exponent`: coefficient `k` is `C(exponent, k) z^k`.
pub fn binom_power_series(z: &MPoly, exponent: &MPoly, order: usize) -> Series {
    let z_pows = powers(z, order);
    let coeffs = (0..=order)
        .map(|k| &gen_binomial(exponent, k) * &z_pows[k])
        .collect();
    Series { coeffs }
}

/// One line per coefficient: `t^k: <polynomial>`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "t^{k}: {c}")?;
        }
        Ok(())
    }
}
