//! Resultants by the subresultant pseudo-remainder sequence.
//!
//! The algorithm only needs an integral domain with exact division, so the
//! same routine computes scalar resultants over the base field and resultants
//! with coefficients in `K[y]` (used to push root sets forward under `P`).

use super::Poly;
use crate::exactval::Scalar;

/// Integral domain with exact division.
pub trait Domain: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// `self / other`, assuming the division is exact.
    fn div_exact_elem(&self, other: &Self) -> Self;
}

impl Domain for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero_like(self)
    }
    fn one_like(&self) -> Self {
        Scalar::one_like(self)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact_elem(&self, other: &Self) -> Self {
        self / other
    }
}

impl Domain for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Poly::constant(self.field().one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
    fn div_exact_elem(&self, other: &Self) -> Self {
        self.div_exact(other)
    }
}

fn trim<R: Domain>(v: &mut Vec<R>) {
    while v.last().is_some_and(|c| c.is_zero_elem()) {
        v.pop();
    }
}

fn pow<R: Domain>(x: &R, e: usize) -> R {
    (0..e).fold(x.one_like(), |acc, _| acc.mul_elem(x))
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<R> = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = c.mul_elem(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub_elem(&lr.mul_elem(bj));
        }
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    let f = pow(lb, e);
    r.iter().map(|c| c.mul_elem(&f)).collect()
}

/// Resultant of two polynomials given by coefficient vectors (index = power),
/// both nonzero.
pub fn resultant_coeffs<R: Domain>(a: &[R], b: &[R]) -> R {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    assert!(
        !a.is_empty() && !b.is_empty(),
        "resultant of a zero polynomial"
    );
    let sample = a[0].clone();
    let mut sign_neg = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        let r = pow(&b[0], a.len() - 1);
        return if sign_neg { r.neg_elem() } else { r };
    }
    let mut g = sample.one_like();
    let mut h = sample.one_like();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let denom = g.mul_elem(&pow(&h, delta));
        b = r.iter().map(|c| c.div_exact_elem(&denom)).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta).div_exact_elem(&pow(&h, delta - 1))
        };
        if b.is_empty() {
            return sample.zero_like();
        }
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let lb = &b[0];
    let res = if da == 0 {
        h
    } else {
        pow(lb, da).div_exact_elem(&pow(&h, da - 1))
    };
    if sign_neg {
        res.neg_elem()
    } else {
        res
    }
}

/// `Res_z(A, B)` over the base field.
pub fn resultant(a: &Poly, b: &Poly) -> Scalar {
    resultant_coeffs(a.coeffs(), b.coeffs())
}

/// `Res_z(M(z), y - P(z))` as a polynomial in `y`. Its roots are the images
/// `P(c)` of the roots `c` of `M`, with multiplicity; its degree is `deg M`.
pub fn compose_resultant(m: &Poly, p: &Poly) -> Poly {
    let field = m.field();
    let lift: Vec<Poly> = m
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    let y_minus_p: Vec<Poly> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut e = Poly::constant(-c);
            if k == 0 {
                e = e.add(&Poly::z(field));
            }
            e
        })
        .collect();
    resultant_coeffs(&lift, &y_minus_p)
}
