//! The t-adic family test and the Benedetto-type scan.
//!
//! A polynomial with coefficients in `Q(t)` is a one-parameter family
//! degenerating at `t = 0`. Its exponent over the t-adic field is `0` exactly
//! when the cycle multipliers stay bounded as `t -> 0`; when it is positive
//! the repelling cycles found below blow up at rate roughly `chi` per period.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::chi::{przytycki_chi, ChiBreakdown, ChiValue};
use super::fixed::{fixed_point_report, FixedClass, FixedPointClass};
use crate::berkpoly::{insep_degree, wf_value, wild_bound, TypeIIPoint};
use crate::error::{Error, Result};
use crate::exactval::{FieldDesc, FieldKind, Valuation};
use crate::polynewt::Poly;
use crate::rat::{fmt_q, qi, Q};
use crate::report::{ser_q, ser_valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    BoundedMultiplier,
    BlowUp,
    Undetermined,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::BoundedMultiplier => "bounded-multiplier",
            Regime::BlowUp => "blow-up",
            Regime::Undetermined => "undetermined",
        })
    }
}

/// A valuation class of period-`n` points of the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleClass {
    pub period: usize,
    #[serde(flatten)]
    pub class: FixedPointClass,
    /// `-v(multiplier)/n` for repelling classes.
    #[serde(serialize_with = "crate::report::ser_opt_q")]
    pub growth_rate: Option<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub chi: ChiValue,
    pub regime: Regime,
    /// Every class of period `<= n_max` found.
    pub cycles: Vec<CycleClass>,
    /// All multiplier valuations are known and `>= 0`.
    pub multipliers_bounded: bool,
    pub breakdown: ChiBreakdown,
}

impl FamilyReport {
    pub fn repelling(&self) -> impl Iterator<Item = &CycleClass> {
        self.cycles
            .iter()
            .filter(|c| c.class.class == FixedClass::Repelling)
    }
}

pub fn family_classify(p: &Poly, n_max: usize, max_steps: usize) -> Result<FamilyReport> {
    if !matches!(p.field().kind(), FieldKind::Laurent) {
        return Err(Error::InvalidField(format!(
            "family classification needs the t-adic field, got {}",
            p.field()
        )));
    }
    let breakdown = przytycki_chi(p, max_steps)?;
    let one = Poly::constant(p.field().one());
    let mut cycles = Vec::new();
    for n in 1..=n_max {
        for class in fixed_point_report(p, &one, n)? {
            let growth_rate = match (&class.class, class.multiplier_valuation.value()) {
                (FixedClass::Repelling, Some(Valuation::Finite(v))) => Some(-v / qi(n as i64)),
                _ => None,
            };
            cycles.push(CycleClass {
                period: n,
                class,
                growth_rate,
            });
        }
    }
    let multipliers_bounded = cycles.iter().all(|c| {
        !c.class.generic
            && c.class
                .multiplier_valuation
                .value()
                .is_some_and(|v| v.ge_q(&Q::zero()))
    });
    let regime = match breakdown.chi.exact() {
        Some(c) if c.is_zero() => Regime::BoundedMultiplier,
        Some(c) if c.is_positive() => Regime::BlowUp,
        Some(_) => Regime::Undetermined,
        None if breakdown.chi.lower().is_positive() => Regime::BlowUp,
        None => Regime::Undetermined,
    };
    Ok(FamilyReport {
        chi: breakdown.chi.clone(),
        regime,
        cycles,
        multipliers_bounded,
        breakdown,
    })
}

/// One parameter of the scan of `(1-a) z^{p+1} + a z^p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenedettoRow {
    /// `v(a)`
    pub va: i64,
    #[serde(serialize_with = "crate::report::ser_scalar")]
    pub a: crate::exactval::Scalar,
    pub chi: ChiValue,
    #[serde(serialize_with = "ser_q")]
    pub lower_bound: Q,
    /// `v(P'(1)) = v(p + 1 - a)`, the multiplier of the fixed point `1`.
    #[serde(serialize_with = "ser_valuation")]
    pub multiplier_at_one: Valuation,
    /// `wf` at the Gauss point.
    #[serde(serialize_with = "ser_q")]
    pub wf_gauss: Q,
    pub insep_gauss: u64,
    /// Lower bound and wildness bounds both hold.
    pub consistent: bool,
}

/// The Benedetto-type polynomial `(1-a) z^{p+1} + a z^p`; it fixes `0` and `1`.
pub fn benedetto_poly(field: &FieldDesc, a: &crate::exactval::Scalar) -> Poly {
    let p = field.residue_char() as usize;
    let mut coeffs = vec![field.zero(); p + 2];
    coeffs[p] = a.clone();
    coeffs[p + 1] = &field.one() - a;
    Poly::new(field, coeffs).expect("coefficients in the field")
}

/// Scan `a = 2 p^v` for `v` in `vs`; `a = 2 p^v` avoids the degenerate `a = 1`.
pub fn benedetto_scan(
    p: u64,
    vs: impl IntoIterator<Item = i64>,
    max_steps: usize,
) -> Result<Vec<BenedettoRow>> {
    let field = FieldDesc::padic(p)?;
    let mut rows = Vec::new();
    for va in vs {
        let a = field.rational(qi(2) * crate::rat::pow_q(&qi(p as i64), va));
        let poly = benedetto_poly(&field, &a);
        let b = przytycki_chi(&poly, max_steps)?;
        let m1 = poly.derivative().eval(&field.one()).val();
        debug_assert_eq!(m1, (&field.int(p as i64 + 1) - &a).val());
        let gauss = TypeIIPoint::gauss(&field);
        let wf = wf_value(&poly, &gauss)?;
        let insep = insep_degree(&poly, &gauss)?;
        let lower_bound = b.lower_bound();
        let consistent =
            b.chi.lower() >= &lower_bound && !wf.is_negative() && wf <= wild_bound(&field, insep);
        rows.push(BenedettoRow {
            va,
            a,
            chi: b.chi,
            lower_bound,
            multiplier_at_one: m1,
            wf_gauss: wf,
            insep_gauss: insep,
            consistent,
        });
    }
    Ok(rows)
}

impl fmt::Display for BenedettoRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v(a)={:>3}  chi={:<12} lower={:<8} v(P'(1))={:<6} wf(x_can)={}",
            self.va,
            self.chi.to_string(),
            fmt_q(&self.lower_bound),
            self.multiplier_at_one.to_string(),
            fmt_q(&self.wf_gauss)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    fn laurent_quadratic(c: crate::exactval::Scalar) -> Poly {
        let lt = FieldDesc::laurent();
        Poly::new(&lt, vec![c, lt.zero(), lt.one()]).unwrap()
    }

    #[test]
    fn good_reduction_family_is_bounded() {
        let lt = FieldDesc::laurent();
        let p = laurent_quadratic(lt.element_of_valuation(&qi(1)).unwrap());
        let r = family_classify(&p, 3, 64).unwrap();
        assert_eq!(r.chi, ChiValue::Exact(qi(0)));
        assert_eq!(r.regime, Regime::BoundedMultiplier);
        assert!(r.multipliers_bounded);
        assert_eq!(
            r.cycles
                .iter()
                .filter(|c| c.period == 3)
                .map(|c| c.class.count)
                .sum::<usize>(),
            8
        );
    }

    #[test]
    fn pole_family_blows_up() {
        let lt = FieldDesc::laurent();
        let p = laurent_quadratic(lt.element_of_valuation(&qi(-1)).unwrap());
        let r = family_classify(&p, 1, 64).unwrap();
        assert_eq!(r.chi, ChiValue::Exact(q(1, 2)));
        assert_eq!(r.regime, Regime::BlowUp);
        let rep: Vec<_> = r.repelling().collect();
        assert_eq!(rep.len(), 1);
        assert_eq!(rep[0].growth_rate, Some(q(1, 2)));
    }

    #[test]
    fn cubic_over_t_regression() {
        let lt = FieldDesc::laurent();
        let inv_t = lt.element_of_valuation(&qi(-1)).unwrap();
        let p = Poly::monomial(inv_t, 3);
        let r = family_classify(&p, 2, 64).unwrap();
        assert_eq!(r.chi, ChiValue::Exact(qi(0)));
        assert_eq!(r.regime, Regime::BoundedMultiplier);
    }

    #[test]
    fn only_laurent_families() {
        let k = FieldDesc::padic(3).unwrap();
        assert!(matches!(
            family_classify(&Poly::monomial(k.one(), 2), 1, 8),
            Err(Error::InvalidField(_))
        ));
    }

    #[test]
    fn benedetto_scan_is_consistent() {
        let rows = benedetto_scan(3, -3..=3, 64).unwrap();
        assert_eq!(rows.len(), 7);
        for r in &rows {
            assert!(r.consistent, "{r}");
            let expect = (&FieldDesc::padic(3).unwrap().int(4) - &r.a).val();
            assert_eq!(r.multiplier_at_one, expect);
        }
    }
}
