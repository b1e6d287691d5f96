//! Degree and image radius of a polynomial on a closed ball.
//!
//! With `c_k` the Taylor coefficients at the center, the image of the ball of
//! log-radius `rho` is the ball around `P(a)` of log-radius
//! `min_{k>=1} v(c_k) + k*rho`, and the number of preimages of a generic image
//! point inside the ball is the largest index attaining that minimum.

use super::Poly;
use crate::error::{Error, Result};
use crate::exactval::{Scalar, Valuation};
use crate::rat::{qi, Q};

/// The terms `v(c_k) + k*rho` attaining the minimum over `k >= start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallTerms {
    pub value: Q,
    /// Minimizing indices, ascending.
    pub indices: Vec<usize>,
}

impl BallTerms {
    pub fn largest(&self) -> usize {
        *self.indices.last().unwrap()
    }

    pub fn is_unique(&self) -> bool {
        self.indices.len() == 1
    }
}

/// Minimum of `vals[k] + k*rho` over finite entries with `k >= start`.
pub fn dominant_terms(vals: &[Valuation], rho: &Q, start: usize) -> Option<BallTerms> {
    let mut best: Option<BallTerms> = None;
    for (k, v) in vals.iter().enumerate().skip(start) {
        let Some(v) = v.finite() else { continue };
        let val = v + rho * qi(k as i64);
        match &mut best {
            Some(b) if val == b.value => b.indices.push(k),
            Some(b) if val > b.value => {}
            _ => {
                best = Some(BallTerms {
                    value: val,
                    indices: vec![k],
                })
            }
        }
    }
    best
}

fn recentered_vals(p: &Poly, a: &Scalar) -> Result<Vec<Valuation>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(p.taylor_recenter(a).coeff_vals())
}

/// Local degree of `P` on the closed ball `{v(z - a) >= rho}`.
pub fn ball_degree(p: &Poly, a: &Scalar, rho: &Q) -> Result<usize> {
    let vals = recentered_vals(p, a)?;
    Ok(dominant_terms(&vals, rho, 1).unwrap().largest())
}

/// Log-radius (in valuation form) of `P(ball)`; the image center is `P(a)`.
pub fn ball_image_radius(p: &Poly, a: &Scalar, rho: &Q) -> Result<Q> {
    let vals = recentered_vals(p, a)?;
    Ok(dominant_terms(&vals, rho, 1).unwrap().value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactval::FieldDesc;
    use crate::rat::q;

    fn square(k: &FieldDesc) -> Poly {
        Poly::monomial(k.one(), 2)
    }

    #[test]
    fn degree_of_square_near_one() {
        let k2 = FieldDesc::padic(2).unwrap();
        assert_eq!(ball_degree(&square(&k2), &k2.one(), &q(1, 2)).unwrap(), 2);
        let k3 = FieldDesc::padic(3).unwrap();
        assert_eq!(ball_degree(&square(&k3), &k3.one(), &q(1, 2)).unwrap(), 1);
    }

    #[test]
    fn monomial_degree_everywhere() {
        let k = FieldDesc::laurent();
        let p = Poly::monomial(k.one(), 7);
        for rho in [qi(-3), qi(0), q(5, 2)] {
            assert_eq!(ball_degree(&p, &k.zero(), &rho).unwrap(), 7);
        }
    }

    #[test]
    fn image_radius_examples() {
        let k = FieldDesc::padic(3).unwrap();
        assert_eq!(
            ball_image_radius(&square(&k), &k.zero(), &qi(1)).unwrap(),
            qi(2)
        );
        let mut c = vec![qi(0); 10];
        c[3] = q(1, 3);
        c[9] = q(-1, 3);
        let p0 = Poly::from_rationals(&k, &c);
        assert_eq!(
            ball_image_radius(&p0, &k.zero(), &q(1, 2)).unwrap(),
            q(1, 2)
        );
        let shift = Poly::from_rationals(&k, &[qi(1), qi(1)]);
        assert_eq!(
            ball_image_radius(&shift, &k.int(5), &q(7, 3)).unwrap(),
            q(7, 3)
        );
    }

    #[test]
    fn constant_polynomial_rejected() {
        let k = FieldDesc::padic(3).unwrap();
        let c = Poly::constant(k.int(4));
        assert_eq!(
            ball_degree(&c, &k.zero(), &qi(0)),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            ball_image_radius(&c, &k.zero(), &qi(0)),
            Err(Error::ConstantPolynomial)
        );
    }
}
