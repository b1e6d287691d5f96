//! Green functions (escape rates) of polynomials.
//!
//! Once `v(z) < rho*` the leading term of `P` strictly dominates along the
//! whole forward orbit, `v(P(z)) = d v(z) + v(a)`, and
//! `g(z) = -v(z) + beta` with `beta = -v(a)/(d-1)`. Bounded orbits are
//! certified by a ball `B` with `P(B) ⊆ B`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactval::{Scalar, Valuation};
use crate::polynewt::Poly;
use crate::rat::{fmt_q, qi, Q};
use crate::report::ser_q;

/// Orbit iteration stops once an iterate needs more bits than this.
pub const MAX_ITERATE_BITS: u64 = 1 << 16;

pub const DEFAULT_MAX_STEPS: usize = 64;

/// Escape-rate data derived from the coefficients of `P`.
#[derive(Clone, Debug)]
pub struct EscapeData {
    pub degree: usize,
    /// Strict leading-term dominance holds along the orbit once `v(z) < rho*`.
    pub radius: Q,
    /// `log|a|/(d-1)` in log-units.
    pub beta: Q,
    /// `g <= max(0, log|z|) + tail` everywhere.
    pub tail: Q,
    /// Invariant ball around 0, when one exists.
    pub ball_at_zero: Option<InvariantBall>,
}

/// A closed ball mapped into itself.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantBall {
    #[serde(serialize_with = "crate::report::ser_scalar")]
    pub center: Scalar,
    #[serde(serialize_with = "ser_q")]
    pub rho: Q,
}

impl InvariantBall {
    pub fn contains(&self, z: &Scalar) -> bool {
        (z - &self.center).val().ge_q(&self.rho)
    }
}

pub(crate) fn check_degree(p: &Poly) -> Result<usize> {
    let d = p.deg();
    if d < 2 || p.is_zero() {
        return Err(Error::DegreeTooSmall(d));
    }
    Ok(d)
}

/// The threshold `rho*` below which the leading term dominates forever.
pub fn escape_radius(p: &Poly) -> Result<Q> {
    Ok(EscapeData::new(p)?.radius)
}

impl EscapeData {
    pub fn new(p: &Poly) -> Result<Self> {
        let d = check_degree(p)?;
        let va = p.lead().val_finite().unwrap();
        let dm1 = qi(d as i64 - 1);
        let beta = -&va / &dm1;
        let mut radius = beta.clone();
        let mut min_ord = va.clone();
        for (k, c) in p.coeffs().iter().enumerate().take(d) {
            if let Some(vk) = c.val_finite() {
                let cut = (&vk - &va) / qi((d - k) as i64);
                if cut < radius {
                    radius = cut;
                }
                if vk < min_ord {
                    min_ord = vk;
                }
            }
        }
        let tail = if min_ord.is_negative() {
            -min_ord / &dm1
        } else {
            Q::zero()
        };
        Ok(EscapeData {
            degree: d,
            radius,
            beta,
            tail,
            ball_at_zero: invariant_ball(p, &p.field().zero()),
        })
    }

    /// `g(z)` when `z` is already in the escaping region.
    pub fn escaped_value(&self, v: &Valuation) -> Option<Q> {
        match v {
            Valuation::Finite(v) if v < &self.radius => Some(-v + &self.beta),
            _ => None,
        }
    }

    pub fn upper_bound(&self, v: &Valuation) -> Q {
        let log_plus = match v {
            Valuation::Finite(v) if v.is_negative() => -v,
            _ => Q::zero(),
        };
        log_plus + &self.tail
    }
}

/// Smallest invariant ball around `center`, if any ball around it is invariant.
///
/// With `T` the Taylor expansion at the center, `P(B) ⊆ B` for `B = (c, rho)`
/// iff `v(T_0 - c) >= rho`, `v(T_1) >= 0` and `(k-1) rho >= -v(T_k)` for `k >= 2`.
pub fn invariant_ball(p: &Poly, center: &Scalar) -> Option<InvariantBall> {
    let t = p.taylor_recenter(center);
    if t.deg() < 2 {
        return None;
    }
    if !t.coeff(1).val().ge_q(&Q::zero()) {
        return None;
    }
    let rho = (2..=t.deg())
        .filter_map(|k| t.coeff(k).val_finite().map(|v| -v / qi(k as i64 - 1)))
        .max()?;
    if !(&t.coeff(0) - center).val().ge_q(&rho) {
        return None;
    }
    Some(InvariantBall {
        center: center.clone(),
        rho,
    })
}

/// Outcome of a Green function evaluation.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum GreenResult {
    Escaped {
        #[serde(serialize_with = "ser_q")]
        value: Q,
        detected_at_step: usize,
    },
    Bounded {
        certificate: InvariantBall,
    },
    Undetermined {
        #[serde(serialize_with = "ser_q")]
        upper_bound: Q,
        steps: usize,
    },
}

impl GreenResult {
    /// Exact value when known.
    pub fn value(&self) -> Option<Q> {
        match self {
            GreenResult::Escaped { value, .. } => Some(value.clone()),
            GreenResult::Bounded { .. } => Some(Q::zero()),
            GreenResult::Undetermined { .. } => None,
        }
    }
}

/// `g_P(z) = lim d^-n max(0, log|P^n(z)|)`, computed exactly when the orbit
/// escapes or is captured by an invariant ball within `max_steps`.
pub fn green_value(p: &Poly, z: &Scalar, max_steps: usize) -> Result<GreenResult> {
    let data = EscapeData::new(p)?;
    let d = qi(data.degree as i64);
    let mut scale = Q::from_integer(1.into());
    let mut orbit: Vec<(Scalar, Option<InvariantBall>)> = Vec::new();
    let mut w = z.clone();
    let mut steps = 0;
    loop {
        let v = w.val();
        if let Some(g) = data.escaped_value(&v) {
            return Ok(GreenResult::Escaped {
                value: g / &scale,
                detected_at_step: steps,
            });
        }
        if let Some(ball) = data.ball_at_zero.as_ref().filter(|b| b.contains(&w)) {
            return Ok(GreenResult::Bounded {
                certificate: ball.clone(),
            });
        }
        if let Some(ball) = orbit
            .iter()
            .filter_map(|(_, b)| b.as_ref())
            .find(|b| b.contains(&w))
        {
            return Ok(GreenResult::Bounded {
                certificate: ball.clone(),
            });
        }
        if steps >= max_steps || w.size_bits() > MAX_ITERATE_BITS {
            return Ok(GreenResult::Undetermined {
                upper_bound: data.upper_bound(&v) / &scale,
                steps,
            });
        }
        let ball = invariant_ball(p, &w);
        let next = p.eval(&w);
        orbit.push((w, ball));
        w = next;
        scale *= &d;
        steps += 1;
    }
}

/// Sum of `g_P` over the roots of a squarefree `M`, possibly as an interval.
#[derive(Clone, Debug, PartialEq)]
pub enum RootGreenSum {
    Exact { sum: Q, steps: usize },
    Undetermined { lower: Q, upper: Q, steps: usize },
}

impl RootGreenSum {
    pub fn exact(&self) -> Option<&Q> {
        match self {
            RootGreenSum::Exact { sum, .. } => Some(sum),
            RootGreenSum::Undetermined { .. } => None,
        }
    }

    pub fn bounds(&self) -> (Q, Q) {
        match self {
            RootGreenSum::Exact { sum, .. } => (sum.clone(), sum.clone()),
            RootGreenSum::Undetermined { lower, upper, .. } => (lower.clone(), upper.clone()),
        }
    }
}

impl std::fmt::Display for RootGreenSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootGreenSum::Exact { sum, .. } => f.write_str(&fmt_q(sum)),
            RootGreenSum::Undetermined { lower, upper, .. } => {
                write!(f, "[{}, {}]", fmt_q(lower), fmt_q(upper))
            }
        }
    }
}

fn poly_bits(p: &Poly) -> u64 {
    p.coeffs().iter().map(Scalar::size_bits).sum()
}

/// `sum_{M(c)=0} g_P(c)` without extracting roots.
///
/// The root set is pushed forward with `M_{n+1}(y) = Res_z(M_n(z), y - P(z))`;
/// the valuations of the roots of `M_n` are read from its Newton polygon. Each
/// valuation class is either in the escaping region or inside the invariant
/// ball around 0; once every class is decided the sum is
/// `d^-n sum g(P^n(c))`.
pub fn green_sum_over_roots(p: &Poly, m: &Poly, max_steps: usize) -> Result<RootGreenSum> {
    let data = EscapeData::new(p)?;
    if m.is_constant() {
        return Err(Error::Precondition("M must be nonconstant".into()));
    }
    if !m.gcd(&m.derivative()).is_constant() {
        return Err(Error::Precondition(format!("{m} is not squarefree")));
    }
    let d = qi(data.degree as i64);
    let mut scale = Q::from_integer(1.into());
    let mut cur = m.monic();
    let mut steps = 0;
    loop {
        let classes = crate::polynewt::root_valuations(&cur)?;
        let (mut lower, mut upper) = (Q::zero(), Q::zero());
        let mut decided = true;
        for class in &classes {
            let mult = qi(class.multiplicity as i64);
            if let Some(g) = data.escaped_value(&class.valuation) {
                lower += &mult * &g;
                upper += &mult * &g;
                continue;
            }
            let captured = data
                .ball_at_zero
                .as_ref()
                .is_some_and(|b| class.valuation.ge_q(&b.rho));
            if !captured {
                decided = false;
                upper += &mult * data.upper_bound(&class.valuation);
            }
        }
        if decided {
            return Ok(RootGreenSum::Exact {
                sum: lower / &scale,
                steps,
            });
        }
        if steps >= max_steps || poly_bits(&cur) > MAX_ITERATE_BITS {
            return Ok(RootGreenSum::Undetermined {
                lower: lower / &scale,
                upper: upper / &scale,
                steps,
            });
        }
        let next = crate::polynewt::compose_resultant(&cur, p);
        if next.deg() != cur.deg() {
            return Err(Error::ResultantDegenerate);
        }
        cur = next.monic();
        scale *= &d;
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactval::FieldDesc;
    use crate::rat::q;

    fn k(p: u64) -> FieldDesc {
        FieldDesc::padic(p).unwrap()
    }

    #[test]
    fn escape_radius_examples() {
        let lt = FieldDesc::laurent();
        assert_eq!(escape_radius(&Poly::monomial(lt.one(), 2)).unwrap(), qi(0));
        let f3 = k(3);
        let third_sq = Poly::monomial(f3.rational(q(1, 3)), 2);
        assert_eq!(escape_radius(&third_sq).unwrap(), qi(1));
        let mut c = vec![qi(0); 10];
        c[3] = q(1, 3);
        c[9] = q(-1, 3);
        assert_eq!(
            escape_radius(&Poly::from_rationals(&f3, &c)).unwrap(),
            qi(0)
        );
        assert_eq!(escape_radius(&Poly::z(&f3)), Err(Error::DegreeTooSmall(1)));
    }

    #[test]
    fn green_examples() {
        let f3 = k(3);
        let sq = Poly::monomial(f3.one(), 2);
        let r = green_value(&sq, &f3.int(5), 64).unwrap();
        assert!(matches!(r, GreenResult::Bounded { .. }));
        assert_eq!(r.value(), Some(qi(0)));

        let lt = FieldDesc::laurent();
        let t_inv = lt.element_of_valuation(&qi(-1)).unwrap();
        let p = Poly::new(&lt, vec![t_inv, lt.zero(), lt.one()]).unwrap();
        let r = green_value(&p, &lt.zero(), 64).unwrap();
        assert_eq!(
            r,
            GreenResult::Escaped {
                value: q(1, 2),
                detected_at_step: 1
            }
        );

        let third_sq = Poly::monomial(f3.rational(q(1, 3)), 2);
        let r = green_value(&third_sq, &f3.rational(q(1, 3)), 64).unwrap();
        assert_eq!(r.value(), Some(qi(2)));
    }

    #[test]
    fn good_reduction_orbit_is_bounded() {
        let f3 = k(3);
        let p = Poly::from_rationals(&f3, &[qi(-2), qi(0), qi(1)]);
        assert_eq!(green_value(&p, &f3.int(2), 8).unwrap().value(), Some(qi(0)));
    }

    #[test]
    fn orbit_in_julia_set_is_undetermined() {
        // (z^3 - z)/3 keeps Z_3 invariant while expanding it; no ball certifies
        let f3 = k(3);
        let p = Poly::from_rationals(&f3, &[qi(0), q(-1, 3), qi(0), q(1, 3)]);
        match green_value(&p, &f3.int(4), 5).unwrap() {
            GreenResult::Undetermined { upper_bound, steps } => {
                assert_eq!(steps, 5);
                assert!(upper_bound >= qi(0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn critical_cluster_of_p0() {
        let f3 = k(3);
        let mut c = vec![qi(0); 10];
        c[3] = q(1, 3);
        c[9] = q(-1, 3);
        let p0 = Poly::from_rationals(&f3, &c);
        let mut m = vec![qi(0); 7];
        m[0] = q(-1, 3);
        m[6] = qi(1);
        let m = Poly::from_rationals(&f3, &m);
        let s = green_sum_over_roots(&p0, &m, 64).unwrap();
        assert_eq!(s.exact(), Some(&q(7, 4)));
    }

    #[test]
    fn bounded_cluster_of_p1() {
        let f3 = k(3);
        let mut c = vec![qi(0); 13];
        c[12] = q(1, 9);
        c[9] = q(-1, 9);
        let p1 = Poly::from_rationals(&f3, &c);
        let m = Poly::from_rationals(&f3, &[q(-3, 4), qi(0), qi(0), qi(1)]);
        let s = green_sum_over_roots(&p1, &m, 64).unwrap();
        assert_eq!(s.exact(), Some(&qi(0)));
        let ball = EscapeData::new(&p1).unwrap().ball_at_zero.unwrap();
        assert_eq!(ball.rho, q(1, 4));
    }

    #[test]
    fn non_squarefree_rejected() {
        let f3 = k(3);
        let sq = Poly::monomial(f3.one(), 2);
        assert!(matches!(
            green_sum_over_roots(&sq, &Poly::monomial(f3.one(), 2), 4),
            Err(Error::Precondition(_))
        ));
    }
}
