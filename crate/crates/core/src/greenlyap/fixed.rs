//! Valuations and multipliers of the period-`n` points of `R = P/Q`.
//!
//! With `R^n = P_n / Q_n` the fixed points of `R^n` in the affine line are the
//! roots of `F = P_n - z Q_n`, whose valuations come from the Newton polygon.
//! The multiplier `(R^n)' = (P_n' Q_n - P_n Q_n') / Q_n^2` is read off the
//! sphere `v(z) = s`: if one term of each polygon strictly dominates there, its
//! valuation is the same at every point of the sphere.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactval::Valuation;
use crate::polynewt::{dominant_terms, root_valuations, Poly};
use crate::rat::{fmt_q, Q};
use crate::report::ser_valuation;

/// Largest `n` accepted by [`fixed_point_report`].
pub const MAX_PERIOD: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplierVal {
    /// Holds at every point of the class.
    Exact(Valuation),
    /// Holds outside finitely many residue classes of the sphere; every point
    /// of the class has multiplier valuation at least this.
    Generic(Q),
    Unknown,
}

impl MultiplierVal {
    pub fn value(&self) -> Option<Valuation> {
        match self {
            MultiplierVal::Exact(v) => Some(v.clone()),
            MultiplierVal::Generic(q) => Some(Valuation::Finite(q.clone())),
            MultiplierVal::Unknown => None,
        }
    }
}

impl fmt::Display for MultiplierVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierVal::Exact(v) => write!(f, "{v}"),
            MultiplierVal::Generic(q) => write!(f, "{} (generic)", fmt_q(q)),
            MultiplierVal::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for MultiplierVal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.value() {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_str("unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedClass {
    Repelling,
    Indifferent,
    Attracting,
    Unknown,
}

impl FixedClass {
    fn of(m: &MultiplierVal) -> FixedClass {
        match m.value() {
            None => FixedClass::Unknown,
            Some(Valuation::Infinite) => FixedClass::Attracting,
            Some(Valuation::Finite(v)) if v.is_negative() => FixedClass::Repelling,
            Some(Valuation::Finite(v)) if v.is_zero() => FixedClass::Indifferent,
            Some(_) => FixedClass::Attracting,
        }
    }
}

impl fmt::Display for FixedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixedClass::Repelling => "repelling",
            FixedClass::Indifferent => "indifferent",
            FixedClass::Attracting => "attracting",
            FixedClass::Unknown => "unknown",
        })
    }
}

/// One valuation class of period-`n` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointClass {
    #[serde(serialize_with = "ser_valuation")]
    pub valuation: Valuation,
    pub count: usize,
    pub multiplier_valuation: MultiplierVal,
    pub class: FixedClass,
    pub generic: bool,
}

/// Numerator and denominator of `R^n` for `R = P/Q`, computed homogeneously.
pub fn rational_iterate(p: &Poly, q: &Poly, n: usize) -> Result<(Poly, Poly)> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if q.is_constant() {
        let inv = q.coeff(0).inv()?;
        return Ok((p.scale(&inv).iterate(n), Poly::constant(p.field().one())));
    }
    let e = p.deg().max(q.deg());
    let (mut pn, mut qn) = (Poly::z(p.field()), Poly::constant(p.field().one()));
    for _ in 0..n {
        let ppow: Vec<Poly> = (0..=e).map(|k| pn.pow(k)).collect();
        let qpow: Vec<Poly> = (0..=e).map(|k| qn.pow(k)).collect();
        let hom = |r: &Poly| {
            let mut acc = Poly::zero(r.field());
            for (k, c) in r.coeffs().iter().enumerate() {
                acc = acc.add(&ppow[k].mul(&qpow[e - k]).scale(c));
            }
            acc
        };
        let (np, nq) = (hom(p), hom(q));
        pn = np;
        qn = nq;
    }
    Ok((pn, qn))
}

fn multiplier_on_sphere(num: &Poly, den: &Poly, s: &Q) -> MultiplierVal {
    if num.is_zero() {
        return MultiplierVal::Exact(Valuation::Infinite);
    }
    let (Some(n), Some(d)) = (
        dominant_terms(&num.coeff_vals(), s, 0),
        dominant_terms(&den.coeff_vals(), s, 0),
    ) else {
        return MultiplierVal::Unknown;
    };
    match (n.is_unique(), d.is_unique()) {
        (true, true) => MultiplierVal::Exact(Valuation::Finite(n.value - d.value)),
        (false, true) => MultiplierVal::Generic(n.value - d.value),
        _ => MultiplierVal::Unknown,
    }
}

/// Valuation classes of the fixed points of `(P/Q)^n` in the affine line with
/// their multiplier valuations.
pub fn fixed_point_report(p: &Poly, q: &Poly, n: usize) -> Result<Vec<FixedPointClass>> {
    if n == 0 || n > MAX_PERIOD {
        return Err(Error::Precondition(format!(
            "period must be in 1..={MAX_PERIOD}, got {n}"
        )));
    }
    if p.field() != q.field() {
        return Err(Error::MixedFields(
            p.field().to_string(),
            q.field().to_string(),
        ));
    }
    let (pn, qn) = rational_iterate(p, q, n)?;
    let f = pn.sub(&Poly::z(p.field()).mul(&qn));
    if f.is_zero() {
        return Err(Error::Precondition("R^n is the identity".into()));
    }
    let num = pn.derivative().mul(&qn).sub(&pn.mul(&qn.derivative()));
    let den = qn.mul(&qn);
    let mut out = Vec::new();
    for rc in root_valuations(&f)? {
        let mult = match &rc.valuation {
            Valuation::Infinite => {
                let zero = p.field().zero();
                let dv = den.eval(&zero);
                if dv.is_zero() {
                    MultiplierVal::Unknown
                } else {
                    MultiplierVal::Exact((&num.eval(&zero) / &dv).val())
                }
            }
            Valuation::Finite(s) => multiplier_on_sphere(&num, &den, s),
        };
        out.push(FixedPointClass {
            valuation: rc.valuation,
            count: rc.multiplicity,
            class: FixedClass::of(&mult),
            generic: matches!(mult, MultiplierVal::Generic(_)),
            multiplier_valuation: mult,
        });
    }
    Ok(out)
}
