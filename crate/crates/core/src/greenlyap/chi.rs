//! Lyapunov exponent of a polynomial from its critical escape rates:
//!
//! `chi(P) = log|gamma| - d' log|a| / (d-1) + sum_c ord_{P'}(c) g_P(c)`
//!
//! where `a`, `gamma` are the leading coefficients of `P` and `P'` and
//! `d' = deg P'`. The sum runs over the finite critical points; it is computed
//! one squarefree factor of `P'` at a time.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::green::{check_degree, green_sum_over_roots, RootGreenSum};
use crate::error::Result;
use crate::polynewt::Poly;
use crate::rat::{fmt_q, qi, Q};

/// Exact value or an interval when some critical orbit stayed undecided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiValue {
    Exact(Q),
    Interval { lower: Q, upper: Q },
}

impl ChiValue {
    pub fn exact(&self) -> Option<&Q> {
        match self {
            ChiValue::Exact(q) => Some(q),
            ChiValue::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> &Q {
        match self {
            ChiValue::Exact(q) => q,
            ChiValue::Interval { lower, .. } => lower,
        }
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Exact(q) => f.write_str(&fmt_q(q)),
            ChiValue::Interval { lower, upper } => {
                write!(f, "[{}, {}]", fmt_q(lower), fmt_q(upper))
            }
        }
    }
}

impl Serialize for ChiValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One squarefree factor of `P'` with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalTerm {
    pub factor: Poly,
    pub weight: usize,
    pub green_sum: RootGreenSum,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChiBreakdown {
    pub chi: ChiValue,
    /// `log|gamma|`
    pub gamma_log: Q,
    /// `log|a|`
    pub a_log: Q,
    pub d: usize,
    pub d_prime: usize,
    pub critical_terms: Vec<CriticalTerm>,
}

impl ChiBreakdown {
    /// `log|gamma| - d' log|a| / (d-1)`, the value when no critical point escapes.
    pub fn lower_bound(&self) -> Q {
        &self.gamma_log - qi(self.d_prime as i64) * &self.a_log / qi(self.d as i64 - 1)
    }

    /// Whether `chi` equals its lower bound (no critical point escapes).
    /// `None` while some critical orbit is undecided.
    pub fn equality_holds(&self) -> Option<bool> {
        let mut all_zero = true;
        for t in &self.critical_terms {
            match &t.green_sum {
                RootGreenSum::Exact { sum, .. } => all_zero &= sum.is_zero(),
                RootGreenSum::Undetermined { lower, .. } if !lower.is_zero() => return Some(false),
                RootGreenSum::Undetermined { .. } => return None,
            }
        }
        Some(all_zero)
    }
}

pub fn przytycki_chi(p: &Poly, max_steps: usize) -> Result<ChiBreakdown> {
    let d = check_degree(p)?;
    let dp = p.derivative();
    let a_log = -p.lead().val_finite().unwrap();
    let gamma_log = -dp.lead().val_finite().unwrap();
    let mut critical_terms = Vec::new();
    for (factor, weight) in dp.squarefree_decomposition() {
        let green_sum = green_sum_over_roots(p, &factor, max_steps)?;
        critical_terms.push(CriticalTerm {
            factor,
            weight,
            green_sum,
        });
    }
    let mut out = ChiBreakdown {
        chi: ChiValue::Exact(Q::zero()),
        gamma_log,
        a_log,
        d,
        d_prime: dp.deg(),
        critical_terms,
    };
    let base = out.lower_bound();
    let (mut lo, mut hi) = (base.clone(), base);
    for t in &out.critical_terms {
        let (l, h) = t.green_sum.bounds();
        let w = qi(t.weight as i64);
        lo += &w * l;
        hi += &w * h;
    }
    out.chi = if lo == hi {
        ChiValue::Exact(lo)
    } else {
        ChiValue::Interval {
            lower: lo,
            upper: hi,
        }
    };
    Ok(out)
}
