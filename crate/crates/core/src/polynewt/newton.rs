use std::fmt;

use serde::Serialize;

use super::Poly;
use crate::error::{Error, Result};
use crate::exactval::Valuation;
use crate::rat::{fmt_q, qi, Q};

/// Lower convex hull of the points `(k, v(c_k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(usize, Q)>,
}

impl NewtonPolygon {
    /// Hull of an arbitrary set of points with increasing indices.
    pub fn from_points(points: &[(usize, Q)]) -> Self {
        let mut hull: Vec<(usize, Q)> = Vec::with_capacity(points.len());
        for (i, v) in points {
            while hull.len() >= 2 {
                let (i1, v1) = &hull[hull.len() - 2];
                let (i2, v2) = &hull[hull.len() - 1];
                // drop the middle point unless the slope strictly increases
                let s12 = (v2 - v1) / qi((*i2 - *i1) as i64);
                let s23 = (v - v2) / qi((*i - *i2) as i64);
                if s23 <= s12 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push((*i, v.clone()));
        }
        NewtonPolygon { vertices: hull }
    }

    pub fn vertices(&self) -> &[(usize, Q)] {
        &self.vertices
    }

    /// `(slope, horizontal length)` for each edge, left to right.
    pub fn edges(&self) -> Vec<(Q, usize)> {
        self.vertices
            .windows(2)
            .map(|w| {
                let len = w[1].0 - w[0].0;
                ((&w[1].1 - &w[0].1) / qi(len as i64), len)
            })
            .collect()
    }

    /// `min_k (v_k + k*rho)` over the hull (same as over all points).
    pub fn support(&self, rho: &Q) -> Q {
        self.vertices
            .iter()
            .map(|(i, v)| v + rho * qi(*i as i64))
            .min()
            .expect("nonempty polygon")
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|(i, v)| format!("({i},{})", fmt_q(v)))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn newton_polygon(p: &Poly) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let points: Vec<(usize, Q)> = p
        .coeff_vals()
        .into_iter()
        .enumerate()
        .filter_map(|(k, v)| v.finite().map(|v| (k, v.clone())))
        .collect();
    Ok(NewtonPolygon::from_points(&points))
}

/// Roots sharing one valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootClass {
    #[serde(serialize_with = "crate::report::ser_valuation")]
    pub valuation: Valuation,
    pub multiplicity: usize,
}

/// Valuations of the roots (in an algebraic closure) with multiplicities.
/// A zero block at the bottom comes first as `+inf`, then one class per edge
/// from left to right.
pub fn root_valuations(p: &Poly) -> Result<Vec<RootClass>> {
    let poly = newton_polygon(p)?;
    let mut out = Vec::new();
    let first = poly.vertices[0].0;
    if first > 0 {
        out.push(RootClass {
            valuation: Valuation::Infinite,
            multiplicity: first,
        });
    }
    for (slope, len) in poly.edges() {
        out.push(RootClass {
            valuation: Valuation::Finite(-slope),
            multiplicity: len,
        });
    }
    debug_assert_eq!(out.iter().map(|c| c.multiplicity).sum::<usize>(), p.deg());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactval::FieldDesc;
    use crate::rat::q;

    #[test]
    fn hull_of_z2_minus_3() {
        let k = FieldDesc::padic(3).unwrap();
        let p = Poly::from_rationals(&k, &[qi(-3), qi(0), qi(1)]);
        let np = newton_polygon(&p).unwrap();
        assert_eq!(np.vertices(), &[(0, qi(1)), (2, qi(0))]);
        assert_eq!(
            root_valuations(&p).unwrap(),
            vec![RootClass {
                valuation: Valuation::Finite(q(1, 2)),
                multiplicity: 2
            }]
        );
    }

    #[test]
    fn collinear_points_are_not_vertices() {
        let np = NewtonPolygon::from_points(&[(0, qi(2)), (1, qi(1)), (2, qi(0)), (3, qi(3))]);
        assert_eq!(np.vertices(), &[(0, qi(2)), (2, qi(0)), (3, qi(3))]);
    }

    #[test]
    fn monomial_has_single_vertex() {
        let k = FieldDesc::laurent();
        let p = Poly::monomial(k.one(), 5);
        assert_eq!(newton_polygon(&p).unwrap().vertices(), &[(5, qi(0))]);
        assert_eq!(
            root_valuations(&p).unwrap(),
            vec![RootClass {
                valuation: Valuation::Infinite,
                multiplicity: 5
            }]
        );
    }

    #[test]
    fn zero_polynomial_errors() {
        let k = FieldDesc::padic(2).unwrap();
        assert_eq!(newton_polygon(&Poly::zero(&k)), Err(Error::ZeroPolynomial));
        assert_eq!(root_valuations(&Poly::zero(&k)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn z3_plus_4z_over_q2() {
        let k = FieldDesc::padic(2).unwrap();
        let p = Poly::from_rationals(&k, &[qi(0), qi(4), qi(0), qi(1)]);
        assert_eq!(
            root_valuations(&p).unwrap(),
            vec![
                RootClass {
                    valuation: Valuation::Infinite,
                    multiplicity: 1
                },
                RootClass {
                    valuation: Valuation::Finite(qi(1)),
                    multiplicity: 2
                },
            ]
        );
    }
}
