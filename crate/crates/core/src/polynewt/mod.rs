//! Polynomials over a valued field, Newton polygons, root valuations,
//! Taylor recentering and the ball degree / image-radius rules.

mod ball;
mod newton;
mod resultant;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactval::{FieldDesc, Scalar, Valuation};
use crate::rat::Q;

pub use ball::{ball_degree, ball_image_radius, dominant_terms, BallTerms};
pub use newton::{newton_polygon, root_valuations, NewtonPolygon, RootClass};
pub use resultant::{compose_resultant, resultant, Domain};

/// Dense polynomial `sum c_k z^k` over one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldDesc,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &FieldDesc, mut coeffs: Vec<Scalar>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::MixedFields(field.to_string(), c.field().to_string()));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Poly {
            field: field.clone(),
            coeffs,
        })
    }

    fn from_vec(field: &FieldDesc, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Polynomial with rational coefficients `c_0, c_1, ...`.
    pub fn from_rationals(field: &FieldDesc, coeffs: &[Q]) -> Self {
        Self::from_vec(
            field,
            coeffs.iter().map(|c| field.rational(c.clone())).collect(),
        )
    }

    pub fn zero(field: &FieldDesc) -> Self {
        Self::from_vec(field, Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field().clone();
        Self::from_vec(&field, vec![c])
    }

    /// `c z^k`
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field().clone();
        let mut v = vec![field.zero(); k + 1];
        v[k] = c;
        Self::from_vec(&field, v)
    }

    /// The identity polynomial `z`.
    pub fn z(field: &FieldDesc) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Valuations `v(c_k)` for every index.
    pub fn coeff_vals(&self) -> Vec<Valuation> {
        self.coeffs.iter().map(Scalar::val).collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_vec(
            &self.field,
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_vec(
            &self.field,
            (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Self::from_vec(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Self::from_vec(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::from_vec(&self.field, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::constant(self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self(other(z))`
    pub fn compose(&self, other: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&self.field), |acc, c| {
                acc.mul(other).add(&Poly::constant(c.clone()))
            })
    }

    /// n-fold iterate, `n >= 1`.
    pub fn iterate(&self, n: usize) -> Poly {
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Self::from_vec(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_int(k as i64))
                .collect(),
        )
    }

    /// Coefficients of `h -> P(a + h)`.
    pub fn taylor_recenter(&self, a: &Scalar) -> Poly {
        // repeated synthetic division by (z - a)
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            for i in (k + 1..n).rev() {
                let t = &work[i] * a;
                work[i - 1] = &work[i - 1] + &t;
            }
            out.push(work[k].clone());
        }
        Self::from_vec(&self.field, out)
    }

    /// Euclidean division over the field.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.lead().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quo = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::from_vec(&self.field, quo),
            Self::from_vec(&self.field, rem),
        ))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().unwrap())
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).unwrap().1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: monic squarefree factors with their
    /// multiplicities, `self = lc * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Factor out the largest power of `z`: returns `(k, self / z^k)`.
    pub fn split_zero_roots(&self) -> (usize, Poly) {
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (k, Self::from_vec(&self.field, self.coeffs[k..].to_vec()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, c.neg()),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if mag.is_compound() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            let unit = mag.as_rational().is_some_and(|r| r.is_one());
            match k {
                0 => f.write_str(&coef)?,
                _ => {
                    if !unit {
                        write!(f, "{coef}*")?;
                    }
                    f.write_str("z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Valuation of `k` as an element of the field (0 when `k` is a unit).
pub(crate) fn int_val(field: &FieldDesc, k: usize) -> Q {
    field.int(k as i64).val_finite().unwrap_or_else(Q::zero)
}
