//! Euler acceleration of alternating series `sum_k (-1)^k c_k`.
//!
//! With `a_k = (-1)^k c_k` and `g(t) = sum a_k t^k`, the Euler transformation
//!
//! ```text
//! (1/(1-t)) g(t/(1-t)) = sum_m t^m b_m,   b_m = sum_k C(m,k) a_k = (-1)^m Δ^m c_0
//! ```
//!
//! evaluated where `t/(1-t) = 1`, that is at `t = 1/2`, gives
//!
//! ```text
//! g(1) = (1/2) sum_m (1/2)^m (-1)^m Δ^m c_0 = sum_m (-1)^m Δ^m c_0 / 2^(m+1)
//! ```
//!
//! Everything here is exact; decimal rendering is left to callers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binom_int, Rat};

/// `[Δ^0 c_0, ..., Δ^m c_0]` with `Δ^j c_0 = sum_k C(j,k) (-1)^{j-k} c_k`.
pub fn forward_differences(c: &[Rat], m: usize) -> Result<Vec<Rat>> {
    if c.len() < m + 1 {
        return Err(Error::InsufficientTerms {
            have: c.len(),
            need: m + 1,
        });
    }
    Ok((0..=m)
        .map(|j| {
            (0..=j)
                .map(|k| binom_int(j as i64, k) * Rat::sign_pow(j - k) * &c[k])
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AccelTable {
    /// Positive parts of the terms: the series is `sum (-1)^k c_k`.
    pub c: Vec<Rat>,
    /// `Δ^j c_0` for `j = 0..=m`.
    pub diffs: Vec<Rat>,
    /// Partial sums of `sum (-1)^k c_k`, one per supplied term.
    pub plain_partials: Vec<Rat>,
    /// Partial sums of `sum (-1)^j Δ^j c_0 / 2^(j+1)`.
    pub accel_partials: Vec<Rat>,
    pub reference: Option<Rat>,
}

impl AccelTable {
    pub fn with_reference(mut self, reference: Rat) -> AccelTable {
        self.reference = Some(reference);
        self
    }

    pub fn plain_error(&self, k: usize) -> Option<Rat> {
        let r = self.reference.as_ref()?;
        Some((&self.plain_partials[k] - r).abs())
    }

    pub fn accel_error(&self, j: usize) -> Option<Rat> {
        let r = self.reference.as_ref()?;
        Some((&self.accel_partials[j] - r).abs())
    }
}

/// Builds the difference table and both partial-sum sequences using `m + 1`
/// differences.
pub fn euler_accelerate(c: &[Rat], m: usize) -> Result<AccelTable> {
    let diffs = forward_differences(c, m)?;
    let plain_partials = c
        .iter()
        .enumerate()
        .scan(Rat::zero(), |acc, (k, ck)| {
            *acc += Rat::sign_pow(k) * ck;
            Some(acc.clone())
        })
        .collect();
    let half = Rat::new(1, 2);
    let mut weight = half.clone();
    let mut acc = Rat::zero();
    let mut accel_partials = Vec::with_capacity(m + 1);
    for (j, d) in diffs.iter().enumerate() {
        acc += Rat::sign_pow(j) * d * &weight;
        accel_partials.push(acc.clone());
        weight *= &half;
    }
    Ok(AccelTable {
        c: c.to_vec(),
        diffs,
        plain_partials,
        accel_partials,
        reference: None,
    })
}
