//! Points of the Berkovich line given by closed balls, and the action of a
//! polynomial on them.
//!
//! A point is a pair `(center, rho)` standing for the ball
//! `{z : v(z - center) >= rho}`; larger `rho` means a smaller ball. Every
//! quantity is returned as an exact logarithm in log-units (`log|x| = -v(x)`).
//!
//! For a polynomial `P` with Taylor coefficients `c_k` at the center:
//!
//! * image log-radius `rho' = min_{k>=1} v(c_k) + k*rho`;
//! * `log|P'|(x) = -min_{k>=1} v(k c_k) + (k-1)*rho`;
//! * `log diam(x) = -rho - 2 max(0, log|x|)`;
//! * `log ||P'||(x) = log|P'|(x) + 2 max(0, log|x|) - 2 max(0, log|P(x)|)`;
//! * `wf(x) = log diam(P x) - log ||P'||(x) - log diam(x)`.
//!
//! The projective corrections cancel in `wf`, which reduces to
//! `min_k (v(k c_k) + k rho) - min_k (v(c_k) + k rho)`, visibly nonnegative.

mod profile;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactval::{FieldDesc, Scalar, Valuation};
use crate::polynewt::{dominant_terms, int_val, BallTerms, Poly};
use crate::rat::{fmt_q, min_q, qi, Q};

pub use profile::{
    segment_profile, wild_locus, Line, PiecewiseProfile, ProfilePiece, WildInterval,
};

/// Point of type II or III: the closed ball around `center` of log-radius `rho`.
#[derive(Clone, Debug)]
pub struct TypeIIPoint {
    pub center: Scalar,
    pub rho: Q,
}

/// Classification of a ball point by its radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointType {
    TypeII,
    TypeIII,
}

impl TypeIIPoint {
    pub fn new(center: Scalar, rho: Q) -> Self {
        TypeIIPoint { center, rho }
    }

    /// The Gauss point: the closed unit ball.
    pub fn gauss(field: &FieldDesc) -> Self {
        TypeIIPoint::new(field.zero(), Q::zero())
    }

    pub fn field(&self) -> &FieldDesc {
        self.center.field()
    }

    pub fn point_type(&self) -> PointType {
        if self.field().in_value_group(&self.rho) {
            PointType::TypeII
        } else {
            PointType::TypeIII
        }
    }

    /// `min(v(center), rho)`, i.e. `-log|x|`.
    pub fn abs_val(&self) -> Q {
        match self.center.val() {
            Valuation::Finite(v) => min_q(&v, &self.rho).clone(),
            Valuation::Infinite => self.rho.clone(),
        }
    }

    /// `log|x|`
    pub fn abs_log(&self) -> Q {
        -self.abs_val()
    }
}

impl PartialEq for TypeIIPoint {
    fn eq(&self, other: &Self) -> bool {
        self.rho == other.rho && (&self.center - &other.center).val().ge_q(&self.rho)
    }
}

impl fmt::Display for TypeIIPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.center, fmt_q(&self.rho))
    }
}

fn neg_part(x: &Q) -> Q {
    min_q(&Q::zero(), x).clone()
}

/// Log of the projective diameter.
pub fn diam_log(x: &TypeIIPoint) -> Q {
    -&x.rho + qi(2) * neg_part(&x.abs_val())
}

/// Length of the path between two points in the hyperbolic tree metric.
pub fn hyperbolic_distance(x: &TypeIIPoint, y: &TypeIIPoint) -> Q {
    let join = match (&x.center - &y.center).val() {
        Valuation::Finite(v) => min_q(min_q(&x.rho, &y.rho), &v).clone(),
        Valuation::Infinite => min_q(&x.rho, &y.rho).clone(),
    };
    (&x.rho - &join) + (&y.rho - &join)
}

/// Image of `x` under `z -> 1/z`.
pub fn invert_point(x: &TypeIIPoint) -> TypeIIPoint {
    match x.center.val() {
        Valuation::Finite(v) if v < x.rho => {
            TypeIIPoint::new(x.center.inv().unwrap(), &x.rho - qi(2) * v)
        }
        _ => TypeIIPoint::new(x.field().zero(), -&x.rho),
    }
}

/// Taylor data of `P` at a point, shared by every local quantity.
pub(crate) struct LocalData {
    pub vals: Vec<Valuation>,
    /// `v(k c_k)`
    pub der_vals: Vec<Valuation>,
    pub center_val: Valuation,
    pub image_center: Scalar,
}

impl LocalData {
    pub fn new(p: &Poly, center: &Scalar) -> Result<Self> {
        if p.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let taylor = p.taylor_recenter(center);
        let vals = taylor.coeff_vals();
        let der_vals = vals
            .iter()
            .enumerate()
            .map(|(k, v)| v.plus_q(&int_val(p.field(), k)))
            .collect();
        Ok(LocalData {
            vals,
            der_vals,
            center_val: center.val(),
            image_center: taylor.coeff(0),
        })
    }

    pub fn image_terms(&self, rho: &Q) -> BallTerms {
        dominant_terms(&self.vals, rho, 1).unwrap()
    }

    pub fn image_rho(&self, rho: &Q) -> Q {
        self.image_terms(rho).value
    }

    /// `-log|P'|(x)`
    pub fn der_val(&self, rho: &Q) -> Q {
        dominant_terms(&self.der_vals, rho, 1).unwrap().value - rho
    }

    pub fn abs_val(&self, rho: &Q) -> Q {
        match &self.center_val {
            Valuation::Finite(v) => min_q(v, rho).clone(),
            Valuation::Infinite => rho.clone(),
        }
    }

    pub fn image_abs_val(&self, rho: &Q) -> Q {
        let r = self.image_rho(rho);
        match &self.vals[0] {
            Valuation::Finite(v) => min_q(v, &r).clone(),
            Valuation::Infinite => r,
        }
    }

    pub fn diam_log(&self, rho: &Q) -> Q {
        -rho + qi(2) * neg_part(&self.abs_val(rho))
    }

    pub fn image_diam_log(&self, rho: &Q) -> Q {
        -self.image_rho(rho) + qi(2) * neg_part(&self.image_abs_val(rho))
    }

    pub fn sd_log(&self, rho: &Q) -> Q {
        -self.der_val(rho) - qi(2) * neg_part(&self.abs_val(rho))
            + qi(2) * neg_part(&self.image_abs_val(rho))
    }

    pub fn wf(&self, rho: &Q) -> Q {
        self.image_diam_log(rho) - self.sd_log(rho) - self.diam_log(rho)
    }
}

pub fn image_point(p: &Poly, x: &TypeIIPoint) -> Result<TypeIIPoint> {
    let data = LocalData::new(p, &x.center)?;
    Ok(TypeIIPoint::new(
        data.image_center.clone(),
        data.image_rho(&x.rho),
    ))
}

/// Local degree at `x`: the ball degree at `(center, rho)`.
pub fn local_degree(p: &Poly, x: &TypeIIPoint) -> Result<usize> {
    Ok(LocalData::new(p, &x.center)?.image_terms(&x.rho).largest())
}

/// `log ||P'||(x)`, the spherical derivative extended to the Berkovich line.
pub fn spherical_derivative_log(p: &Poly, x: &TypeIIPoint) -> Result<Q> {
    Ok(LocalData::new(p, &x.center)?.sd_log(&x.rho))
}

/// The wildness function `-log(||P'|| diam / diam o P)`.
pub fn wf_value(p: &Poly, x: &TypeIIPoint) -> Result<Q> {
    Ok(LocalData::new(p, &x.center)?.wf(&x.rho))
}

/// Inseparability degree of the reduction of `P` at a type-II point.
///
/// The map is rescaled by a scalar of valuation `rho` on the source side and
/// by the dominant coefficient on the target side; the result is the largest
/// power `q` of the residue characteristic such that the reduction is a
/// polynomial in `z^q`.
pub fn insep_degree(p: &Poly, x: &TypeIIPoint) -> Result<u64> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let field = p.field();
    let scale = field
        .element_of_valuation(&x.rho)
        .ok_or_else(|| Error::TypeIIIPoint(fmt_q(&x.rho)))?;
    let res_char = field.residue_char();
    if res_char == 0 {
        return Ok(1);
    }
    let taylor = p.taylor_recenter(&x.center);
    let rescaled: Vec<Scalar> = (1..taylor.coeffs().len())
        .map(|k| &taylor.coeff(k) * &scale.pow(k as u64))
        .collect();
    let vals: Vec<Valuation> = std::iter::once(Valuation::Infinite)
        .chain(rescaled.iter().map(Scalar::val))
        .collect();
    let dom = dominant_terms(&vals, &Q::zero(), 1).unwrap();
    let pivot = &rescaled[dom.largest() - 1];
    let mut support = Vec::new();
    for (i, e) in rescaled.iter().enumerate() {
        let red = (e / pivot).reduce_residue()?;
        if !red.is_zero() {
            support.push(i + 1);
        }
    }
    let mut q = 1u64;
    while support
        .iter()
        .all(|k| (*k as u64).is_multiple_of(q * res_char))
    {
        q *= res_char;
    }
    Ok(q)
}

/// `-log|d|` for the integer `d`, in log-units.
pub fn wild_bound(field: &FieldDesc, d: u64) -> Q {
    field.int(d as i64).val_finite().unwrap_or_else(Q::one)
}
