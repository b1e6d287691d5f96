//! Exact arithmetic in the supported valued fields.
//!
//! Three fields are available:
//!
//! * `Padic(p)`: the rationals with the p-adic valuation, `v(p) = 1`;
//! * `Radical(p, b, m)`: the totally ramified extension `Q(u)`, `u^m = b`,
//!   with `v_p(b)` coprime to `m`, so `v(u) = v_p(b)/m` and the value group is
//!   `(1/m)Z`;
//! * `Laurent`: rational functions `Q(t)` with the t-adic valuation
//!   `v(t) = 1` (residue characteristic 0).
//!
//! Every value is exact. Logarithms elsewhere in the crate are expressed in
//! log-units: `log|x| = -v(x)`.

mod qpoly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::{fmt_q, is_prime, mod_p, pow_q, q, qi, vp_rat, Q};

pub use qpoly::QPoly;

/// Additive valuation, `+inf` only for zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(Q),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Valuation of a product.
    pub fn plus(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }

    pub fn plus_q(&self, x: &Q) -> Valuation {
        match self {
            Valuation::Finite(a) => Valuation::Finite(a + x),
            Valuation::Infinite => Valuation::Infinite,
        }
    }

    pub fn ge_q(&self, x: &Q) -> bool {
        match self {
            Valuation::Finite(a) => a >= x,
            Valuation::Infinite => true,
        }
    }

    pub fn lt_q(&self, x: &Q) -> bool {
        !self.ge_q(x)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => f.write_str(&fmt_q(v)),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Padic { p: u64 },
    Radical { p: u64, radicand: Q, degree: usize },
    Laurent,
}

/// Shared, immutable description of the base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDesc(Arc<FieldKind>);

impl FieldDesc {
    pub fn padic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldDesc(Arc::new(FieldKind::Padic { p })))
    }

    /// `Q(u)` with `u^m = b`. Requires `v_p(b)` nonzero and coprime to `m`.
    pub fn radical(p: u64, radicand: Q, degree: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if degree == 0 {
            return Err(Error::InvalidField("degree must be positive".into()));
        }
        let vb = vp_rat(&radicand, p)
            .ok_or_else(|| Error::InvalidField("radicand must be nonzero".into()))?;
        if vb == 0 || vb.unsigned_abs().gcd(&(degree as u64)) != 1 {
            return Err(Error::InvalidField(format!(
                "v_{p}({radicand}) = {vb} must be nonzero and coprime to {degree}"
            )));
        }
        Ok(FieldDesc(Arc::new(FieldKind::Radical {
            p,
            radicand,
            degree,
        })))
    }

    pub fn laurent() -> Self {
        FieldDesc(Arc::new(FieldKind::Laurent))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    /// 0 for the t-adic field.
    pub fn residue_char(&self) -> u64 {
        match self.kind() {
            FieldKind::Padic { p } | FieldKind::Radical { p, .. } => *p,
            FieldKind::Laurent => 0,
        }
    }

    /// Ramification index over the base valuation: the value group is `(1/e)Z`.
    pub fn ramification(&self) -> usize {
        match self.kind() {
            FieldKind::Radical { degree, .. } => *degree,
            _ => 1,
        }
    }

    pub fn in_value_group(&self, x: &Q) -> bool {
        (x * qi(self.ramification() as i64)).is_integer()
    }

    pub fn zero(&self) -> Scalar {
        self.rational(Q::zero())
    }

    pub fn one(&self) -> Scalar {
        self.rational(Q::one())
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.rational(qi(n))
    }

    /// Embeds a rational number.
    pub fn rational(&self, x: Q) -> Scalar {
        let repr = match self.kind() {
            FieldKind::Padic { .. } => Repr::Rat(x),
            FieldKind::Radical { degree, .. } => {
                let mut v = vec![Q::zero(); *degree];
                v[0] = x;
                Repr::Rad(v)
            }
            FieldKind::Laurent => Repr::Frac(QPoly::constant(x), QPoly::one()),
        };
        Scalar {
            field: self.clone(),
            repr,
        }
    }

    /// The adjoined radical `u` or the variable `t`.
    pub fn generator(&self) -> Option<Scalar> {
        match self.kind() {
            FieldKind::Padic { .. } => None,
            FieldKind::Radical { degree, .. } => {
                let mut c = vec![Q::zero(); *degree];
                if *degree == 1 {
                    // u = b when m = 1
                    return Some(self.rational(self.radicand().unwrap()));
                }
                c[1] = Q::one();
                Some(self.radical_elem(c))
            }
            FieldKind::Laurent => {
                Some(self.laurent_elem(QPoly::monomial(Q::one(), 1), QPoly::one()))
            }
        }
    }

    fn radicand(&self) -> Option<Q> {
        match self.kind() {
            FieldKind::Radical { radicand, .. } => Some(radicand.clone()),
            _ => None,
        }
    }

    /// Element `sum a_i u^i` (coefficients beyond the degree are reduced).
    pub fn radical_elem(&self, coeffs: Vec<Q>) -> Scalar {
        match self.kind() {
            FieldKind::Radical {
                radicand, degree, ..
            } => Scalar {
                field: self.clone(),
                repr: Repr::Rad(reduce_radical(coeffs, radicand, *degree)),
            },
            _ => panic!("radical_elem on a non-radical field"),
        }
    }

    /// Element `num/den` of the t-adic field.
    pub fn laurent_elem(&self, num: QPoly, den: QPoly) -> Scalar {
        assert!(matches!(self.kind(), FieldKind::Laurent));
        assert!(!den.is_zero(), "zero denominator");
        Scalar {
            field: self.clone(),
            repr: normalize_frac(num, den),
        }
    }

    /// Some element of exact valuation `rho`, if `rho` is in the value group.
    pub fn element_of_valuation(&self, rho: &Q) -> Option<Scalar> {
        if !self.in_value_group(rho) {
            return None;
        }
        match self.kind() {
            FieldKind::Padic { p } => {
                let e = rho.to_integer().to_i64()?;
                Some(self.rational(pow_q(&qi(*p as i64), e)))
            }
            FieldKind::Radical {
                p,
                radicand,
                degree,
            } => {
                // rho = j/m; find i < m with i*v(b) = j (mod m), then p^((j - i v(b))/m) u^i
                let m = *degree as i64;
                let vb = vp_rat(radicand, *p).unwrap();
                let j = (rho * qi(m)).to_integer().to_i64()?;
                let i = (0..m).find(|i| (j - i * vb).rem_euclid(m) == 0)?;
                let e = (j - i * vb) / m;
                let mut coeffs = vec![Q::zero(); *degree];
                coeffs[i as usize] = pow_q(&qi(*p as i64), e);
                Some(self.radical_elem(coeffs))
            }
            FieldKind::Laurent => {
                let e = rho.to_integer().to_i64()?;
                let t = if e >= 0 {
                    self.laurent_elem(QPoly::monomial(Q::one(), e as usize), QPoly::one())
                } else {
                    self.laurent_elem(QPoly::one(), QPoly::monomial(Q::one(), (-e) as usize))
                };
                Some(t)
            }
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Padic { p } => write!(f, "padic:{p}"),
            FieldKind::Radical {
                p,
                radicand,
                degree,
            } => write!(f, "radical:{p},{},{degree}", fmt_q(radicand)),
            FieldKind::Laurent => f.write_str("laurent"),
        }
    }
}

fn reduce_radical(mut coeffs: Vec<Q>, radicand: &Q, degree: usize) -> Vec<Q> {
    while coeffs.len() > degree {
        let top = coeffs.pop().unwrap();
        if !top.is_zero() {
            let i = coeffs.len() - degree;
            coeffs[i] += top * radicand;
        }
    }
    coeffs.resize(degree, Q::zero());
    coeffs
}

fn normalize_frac(num: QPoly, den: QPoly) -> Repr {
    if num.is_zero() {
        return Repr::Frac(QPoly::zero(), QPoly::one());
    }
    let g = num.gcd(&den);
    let (num, _) = num.div_rem(&g);
    let (den, _) = den.div_rem(&g);
    let lead = den.lead().recip();
    Repr::Frac(num.scale(&lead), den.scale(&lead))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(Q),
    Rad(Vec<Q>),
    Frac(QPoly, QPoly),
}

/// An exact element of one of the supported valued fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldDesc,
    repr: Repr,
}

/// Residue-field image of an integral element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residue {
    /// Element of `F_p`, stored in `0..p`.
    Fp { p: u64, value: u64 },
    /// Residue field of the t-adic valuation.
    Rational(Q),
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        match self {
            Residue::Fp { value, .. } => *value == 0,
            Residue::Rational(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Fp { p, value } => write!(f, "{value} mod {p}"),
            Residue::Rational(x) => f.write_str(&fmt_q(x)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation with explicit error reporting.
pub fn arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

impl Scalar {
    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(x) => x.is_zero(),
            Repr::Rad(c) => c.iter().all(|x| x.is_zero()),
            Repr::Frac(n, _) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    pub fn zero_like(&self) -> Scalar {
        self.field.zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field.one()
    }

    /// The value as a rational number, when it lies in the prime field.
    pub fn as_rational(&self) -> Option<Q> {
        match &self.repr {
            Repr::Rat(x) => Some(x.clone()),
            Repr::Rad(c) => c[1..].iter().all(|x| x.is_zero()).then(|| c[0].clone()),
            Repr::Frac(n, d) => (n.degree().unwrap_or(0) == 0 && d.degree() == Some(0))
                .then(|| n.coeff(0) / d.coeff(0)),
        }
    }

    pub fn val(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let v = match (&self.repr, self.field.kind()) {
            (Repr::Rat(x), FieldKind::Padic { p }) => qi(vp_rat(x, *p).unwrap()),
            (
                Repr::Rad(c),
                FieldKind::Radical {
                    p,
                    radicand,
                    degree,
                },
            ) => {
                let vb = vp_rat(radicand, *p).unwrap();
                c.iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(i, a)| qi(vp_rat(a, *p).unwrap()) + q(i as i64 * vb, *degree as i64))
                    .min()
                    .unwrap()
            }
            (Repr::Frac(n, d), FieldKind::Laurent) => {
                qi(n.order().unwrap() as i64 - d.order().unwrap() as i64)
            }
            _ => unreachable!("representation does not match field"),
        };
        Valuation::Finite(v)
    }

    /// Finite valuation of a nonzero element.
    pub fn val_finite(&self) -> Option<Q> {
        self.val().finite().cloned()
    }

    pub fn reduce_residue(&self) -> Result<Residue> {
        let v = self.val();
        if let Valuation::Finite(v) = &v {
            if v < &Q::zero() {
                return Err(Error::NegativeValuation(fmt_q(v)));
            }
        }
        let positive = v > Valuation::Finite(Q::zero());
        match (&self.repr, self.field.kind()) {
            (Repr::Rat(x), FieldKind::Padic { p }) => Ok(Residue::Fp {
                p: *p,
                value: if positive { 0 } else { mod_p(x, *p).unwrap() },
            }),
            // only the constant term can be a unit: i*v(b)/m is never an
            // integer for 0 < i < m
            (Repr::Rad(c), FieldKind::Radical { p, .. }) => Ok(Residue::Fp {
                p: *p,
                value: if positive {
                    0
                } else {
                    mod_p(&c[0], *p).unwrap()
                },
            }),
            (Repr::Frac(n, d), FieldKind::Laurent) => Ok(Residue::Rational(if positive {
                Q::zero()
            } else {
                n.coeff(0) / d.coeff(0)
            })),
            _ => unreachable!(),
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Rad(a), Repr::Rad(b)) => {
                Repr::Rad(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Repr::Frac(an, ad), Repr::Frac(bn, bd)) => {
                if ad == bd {
                    normalize_frac(an.add(bn), ad.clone())
                } else {
                    normalize_frac(an.mul(bd).add(&bn.mul(ad)), ad.mul(bd))
                }
            }
            _ => unreachable!(),
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        let repr = match (&self.repr, &other.repr, self.field.kind()) {
            (Repr::Rat(a), Repr::Rat(b), _) => Repr::Rat(a * b),
            (
                Repr::Rad(a),
                Repr::Rad(b),
                FieldKind::Radical {
                    radicand, degree, ..
                },
            ) => {
                let mut out = vec![Q::zero(); 2 * degree - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        out[i + j] += x * y;
                    }
                }
                Repr::Rad(reduce_radical(out, radicand, *degree))
            }
            (Repr::Frac(an, ad), Repr::Frac(bn, bd), _) => normalize_frac(an.mul(bn), ad.mul(bd)),
            _ => unreachable!(),
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match (&self.repr, self.field.kind()) {
            (Repr::Rat(a), _) => Repr::Rat(a.recip()),
            (
                Repr::Rad(a),
                FieldKind::Radical {
                    radicand, degree, ..
                },
            ) => {
                // x^m - b is irreducible, so gcd(A, x^m - b) = 1 and s*A = 1 mod (x^m - b)
                let modulus =
                    QPoly::monomial(Q::one(), *degree).sub(&QPoly::constant(radicand.clone()));
                let (g, s, _) = QPoly::new(a.clone()).ext_gcd(&modulus);
                debug_assert_eq!(g, QPoly::one());
                Repr::Rad(reduce_radical(s.coeffs().to_vec(), radicand, *degree))
            }
            (Repr::Frac(n, d), _) => normalize_frac(d.clone(), n.clone()),
            _ => unreachable!(),
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Rad(a) => Repr::Rad(a.iter().map(|x| -x).collect()),
            Repr::Frac(n, d) => Repr::Frac(n.neg(), d.clone()),
        };
        Scalar {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplication by an integer.
    pub fn mul_int(&self, n: i64) -> Scalar {
        self * &self.field.int(n)
    }

    /// Coefficients `a_0..a_{m-1}` of a radical element.
    pub fn radical_coeffs(&self) -> Option<&[Q]> {
        match &self.repr {
            Repr::Rad(c) => Some(c),
            _ => None,
        }
    }

    /// Numerator and denominator of a t-adic element.
    pub fn laurent_parts(&self) -> Option<(&QPoly, &QPoly)> {
        match &self.repr {
            Repr::Frac(n, d) => Some((n, d)),
            _ => None,
        }
    }

    /// Total bit length of the rational data; a cheap height measure.
    pub fn size_bits(&self) -> u64 {
        fn bits(x: &Q) -> u64 {
            x.numer().bits() + x.denom().bits()
        }
        match &self.repr {
            Repr::Rat(x) => bits(x),
            Repr::Rad(c) => c.iter().map(bits).sum(),
            Repr::Frac(n, d) => n.coeffs().iter().chain(d.coeffs()).map(bits).sum(),
        }
    }

    /// Whether the text form needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        let s = self.to_string();
        s.contains(' ') || s.contains('/') || s.starts_with('-')
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(x) => f.write_str(&fmt_q(x)),
            Repr::Rad(c) => {
                let mut terms = Vec::new();
                for (i, a) in c.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let coef = fmt_q(a);
                    terms.push(match i {
                        0 => coef,
                        1 if a.is_one() => "u".to_string(),
                        1 => format!("({coef})*u"),
                        _ if a.is_one() => format!("u^{i}"),
                        _ => format!("({coef})*u^{i}"),
                    });
                }
                if terms.is_empty() {
                    f.write_str("0")
                } else {
                    f.write_str(&terms.join(" + "))
                }
            }
            Repr::Frac(n, d) => {
                if *d == QPoly::one() {
                    f.write_str(&n.display_in("t"))
                } else {
                    write!(f, "({})/({})", n.display_in("t"), d.display_in("t"))
                }
            }
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect(concat!("Scalar::", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn padic(p: u64) -> FieldDesc {
        FieldDesc::padic(p).unwrap()
    }

    #[test]
    fn padic_valuation() {
        let k = padic(3);
        assert_eq!(k.rational(q(1, 9)).val(), Valuation::Finite(qi(-2)));
        assert_eq!(k.zero().val(), Valuation::Infinite);
    }

    #[test]
    fn radical_generator_valuation() {
        let k = FieldDesc::radical(3, q(1, 3), 6).unwrap();
        let u = k.generator().unwrap();
        assert_eq!(u.val(), Valuation::Finite(q(-1, 6)));
        let u3 = u.pow(3);
        assert_eq!(&u3 * &u3, k.rational(q(1, 3)));
        assert_eq!(u.pow(6).as_rational(), Some(q(1, 3)));
    }

    #[test]
    fn radical_rejects_bad_radicand() {
        assert!(FieldDesc::radical(3, q(1, 9), 6).is_err());
        assert!(FieldDesc::radical(3, qi(2), 2).is_err());
        assert!(FieldDesc::radical(4, qi(2), 3).is_err());
    }

    #[test]
    fn radical_inverse() {
        let k = FieldDesc::radical(2, q(1, 2), 2).unwrap();
        let x = k.radical_elem(vec![qi(3), qi(5)]);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn laurent_valuation_and_residue() {
        let k = FieldDesc::laurent();
        let num = QPoly::new(vec![qi(0), qi(1), qi(1)]);
        let den = QPoly::new(vec![qi(1), qi(-1)]);
        assert_eq!(k.laurent_elem(num, den).val(), Valuation::Finite(qi(1)));
        let x = k.laurent_elem(
            QPoly::new(vec![qi(2), qi(1)]),
            QPoly::new(vec![qi(1), qi(1)]),
        );
        assert_eq!(x.reduce_residue().unwrap(), Residue::Rational(qi(2)));
    }

    #[test]
    fn arithmetic_examples() {
        let k = padic(3);
        let s = arith(&k.rational(q(1, 3)), &k.rational(q(2, 3)), ArithOp::Add).unwrap();
        assert_eq!(s, k.one());
        assert_eq!(s.val(), Valuation::Finite(qi(0)));
        let k5 = padic(5);
        let z = arith(&k5.rational(q(1, 5)), &k5.rational(q(-1, 5)), ArithOp::Add).unwrap();
        assert_eq!(z.val(), Valuation::Infinite);
    }

    #[test]
    fn arithmetic_errors() {
        let k = padic(3);
        assert_eq!(
            arith(&k.one(), &k.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        let other = padic(5);
        assert!(matches!(
            arith(&k.one(), &other.one(), ArithOp::Add),
            Err(Error::MixedFields(..))
        ));
    }

    #[test]
    fn residues() {
        let k = padic(3);
        assert_eq!(
            k.int(7).reduce_residue().unwrap(),
            Residue::Fp { p: 3, value: 1 }
        );
        assert!(matches!(
            k.rational(q(1, 3)).reduce_residue(),
            Err(Error::NegativeValuation(_))
        ));
        assert_eq!(
            k.rational(q(1, 2)).reduce_residue().unwrap(),
            Residue::Fp { p: 3, value: 2 }
        );
    }

    #[test]
    fn element_of_valuation() {
        let k = FieldDesc::radical(3, q(1, 3), 4).unwrap();
        for j in -8..8 {
            let rho = q(j, 4);
            let s = k.element_of_valuation(&rho).unwrap();
            assert_eq!(s.val(), Valuation::Finite(rho));
        }
        assert!(padic(3).element_of_valuation(&q(1, 2)).is_none());
        let t = FieldDesc::laurent().element_of_valuation(&qi(-2)).unwrap();
        assert_eq!(t.val(), Valuation::Finite(qi(-2)));
    }
}
