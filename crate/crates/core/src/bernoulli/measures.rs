//! Measures, entropies and periodic points of a Bernoulli model.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{BernoulliModel, Itinerary, Word};
use crate::error::{Error, Result};
use crate::rat::{fmt_q, is_prime, pow_q, qi, vp_int, Q};
use crate::report::ser_q;

/// Largest number of words any enumeration may visit.
pub const MAX_WORDS: u64 = 1_000_000;

/// `coeff * log(log_of)`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogTerm {
    #[serde(serialize_with = "ser_q")]
    pub coeff: Q,
    #[serde(serialize_with = "ser_q")]
    pub log_of: Q,
}

/// A rational combination of logarithms of positive rationals, with equal
/// arguments merged and trivial terms dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SymbolicLog(pub Vec<LogTerm>);

impl SymbolicLog {
    pub fn new(terms: impl IntoIterator<Item = (Q, Q)>) -> SymbolicLog {
        let mut out: Vec<LogTerm> = Vec::new();
        for (coeff, log_of) in terms {
            assert!(log_of.is_positive(), "log of a nonpositive number");
            match out.iter_mut().find(|t| t.log_of == log_of) {
                Some(t) => t.coeff += coeff,
                None => out.push(LogTerm { coeff, log_of }),
            }
        }
        out.retain(|t| !t.coeff.is_zero() && !t.log_of.is_one());
        out.sort_by(|a, b| a.log_of.cmp(&b.log_of));
        SymbolicLog(out)
    }

    pub fn log(x: Q) -> SymbolicLog {
        SymbolicLog::new([(Q::one(), x)])
    }

    /// Exact comparison: `sum c_i log a_i` vs `sum c'_j log b_j` by comparing
    /// `prod a_i^{c_i L}` with `prod b_j^{c'_j L}`, `L` clearing denominators.
    pub fn exact_cmp(&self, other: &SymbolicLog) -> Ordering {
        let diff = SymbolicLog::new(
            self.0
                .iter()
                .map(|t| (t.coeff.clone(), t.log_of.clone()))
                .chain(other.0.iter().map(|t| (-&t.coeff, t.log_of.clone()))),
        );
        let l = diff
            .0
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let mut prod = Q::one();
        for t in &diff.0 {
            let e = (&t.coeff * Q::from_integer(l.clone())).to_integer();
            prod *= pow_q(&t.log_of, e.to_i64().expect("exponent fits"));
        }
        prod.cmp(&Q::one())
    }

    /// Decimal value in natural-log units, for display only.
    pub fn approx(&self) -> f64 {
        self.0
            .iter()
            .map(|t| crate::rat::to_f64(&t.coeff) * crate::rat::to_f64(&t.log_of).ln())
            .sum()
    }
}

impl fmt::Display for SymbolicLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| {
                let arg = if t.log_of.is_integer() {
                    format!("log {}", t.log_of)
                } else {
                    format!("log({})", fmt_q(&t.log_of))
                };
                if t.coeff.is_one() {
                    arg
                } else {
                    format!("({}) {arg}", fmt_q(&t.coeff))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntropyStats {
    pub h_top: SymbolicLog,
    /// Entropy of the equilibrium (degree-weighted) measure.
    pub h_rho: SymbolicLog,
    /// Entropy of the measure of maximal entropy.
    pub h_mu: SymbolicLog,
}

impl Serialize for EntropyStats {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Terms<'a> {
            h_top: &'a SymbolicLog,
            h_rho: &'a SymbolicLog,
            h_mu: &'a SymbolicLog,
        }
        #[derive(Serialize)]
        struct Wire<'a> {
            h_top: String,
            h_rho: String,
            h_mu: String,
            h_rho_vs_h_top: &'static str,
            terms: Terms<'a>,
        }
        Wire {
            h_top: self.h_top.to_string(),
            h_rho: self.h_rho.to_string(),
            h_mu: self.h_mu.to_string(),
            h_rho_vs_h_top: match self.h_rho.exact_cmp(&self.h_top) {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            },
            terms: Terms {
                h_top: &self.h_top,
                h_rho: &self.h_rho,
                h_mu: &self.h_mu,
            },
        }
        .serialize(s)
    }
}

pub fn entropy_stats(model: &BernoulliModel) -> EntropyStats {
    let d = Q::from_integer(model.d.into());
    let k = qi(model.k() as i64);
    let h_rho = SymbolicLog::new(model.dilations.iter().map(|dj| {
        let dj = Q::from_integer((*dj).into());
        (&dj / &d, &d / &dj)
    }));
    EntropyStats {
        h_top: SymbolicLog::log(k.clone()),
        h_rho,
        h_mu: SymbolicLog::log(k),
    }
}

/// `(equilibrium mass, maximal-entropy mass)` of the cylinder of `w`.
pub fn cylinder_masses(model: &BernoulliModel, w: &Word) -> Result<(Q, Q)> {
    model.check_word(w)?;
    let d = Q::from_integer(model.d.into());
    let k = qi(model.k() as i64);
    let mut eq = Q::one();
    let mut me = Q::one();
    for s in &w.0 {
        eq *= Q::from_integer(model.dilations[s - 1].into()) / &d;
        me /= &k;
    }
    Ok((eq, me))
}

/// `chi = -sum (d_j/d) v_p(d_j)` in log-units.
pub fn model_lyapunov(model: &BernoulliModel, p: u64) -> Result<Q> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    let d = Q::from_integer(model.d.into());
    Ok(-model
        .dilations
        .iter()
        .map(|dj| Q::from_integer((*dj).into()) / &d * qi(vp_int(&BigInt::from(*dj), p)))
        .sum::<Q>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicPoint {
    #[serde(serialize_with = "ser_q")]
    pub point: Q,
    pub word: Word,
    /// Degree of `R^n` at the point: the product of the dilations along `word`.
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub weight: BigInt,
    /// The point lies on a preimage of a boundary point and its own orbit
    /// reads a different code.
    pub boundary: bool,
}

fn check_size(k: usize, n: usize) -> Result<()> {
    let total = (k as f64).powi(n as i32);
    if total > MAX_WORDS as f64 {
        return Err(Error::TooLarge(format!(
            "{k}^{n} words exceed the limit of {MAX_WORDS}"
        )));
    }
    Ok(())
}

/// All words of length `n` over `1..=k`, lexicographically.
fn words(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total).map(move |mut i| {
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = i % k + 1;
            i /= k;
        }
        w
    })
}

/// One point per period-`n` word, in lexicographic order of words.
pub fn periodic_points(model: &BernoulliModel, n: usize) -> Result<Vec<PeriodicPoint>> {
    if n == 0 {
        return Err(Error::Precondition("period must be positive".into()));
    }
    check_size(model.k(), n)?;
    words(model.k(), n)
        .map(|w| {
            let word = Word(w);
            let point = model.decode(&Itinerary::periodic(word.clone()))?;
            let weight = word
                .0
                .iter()
                .map(|s| BigInt::from(model.dilations[s - 1]))
                .product();
            let boundary = model.itinerary(&point, n).map_or(true, |g| g != word);
            Ok(PeriodicPoint {
                point,
                word,
                weight,
                boundary,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquidistributionRow {
    pub word: Word,
    /// `d^-n sum` of weights of period-`n` points in the cylinder.
    #[serde(serialize_with = "ser_q")]
    pub weighted: Q,
    #[serde(serialize_with = "ser_q")]
    pub equilibrium: Q,
    #[serde(serialize_with = "ser_q")]
    pub weighted_deviation: Q,
    /// `k^-n` times the number of period-`n` points in the cylinder.
    #[serde(serialize_with = "ser_q")]
    pub unweighted: Q,
    #[serde(serialize_with = "ser_q")]
    pub maxent: Q,
    #[serde(serialize_with = "ser_q")]
    pub unweighted_deviation: Q,
}

/// Empirical cylinder masses of the period-`n` points against the limit
/// measures, for every word of length `<= m`. Points are bucketed by the code
/// their own orbit reads.
pub fn equidistribution_table(
    model: &BernoulliModel,
    n: usize,
    m: usize,
) -> Result<Vec<EquidistributionRow>> {
    if m > n {
        return Err(Error::Precondition(format!(
            "word length {m} exceeds period {n}"
        )));
    }
    let k = model.k();
    check_size(k, n)?;
    // shortlex index of a word: offset(len) + base-k value
    let offsets: Vec<usize> = (0..=m)
        .scan(0usize, |acc, l| {
            let o = *acc;
            *acc += k.pow(l as u32);
            Some(o)
        })
        .collect();
    let rows = offsets[m] + k.pow(m as u32);
    let mut weights = vec![BigInt::zero(); rows];
    let mut counts = vec![0u64; rows];
    for pt in periodic_points(model, n)? {
        let code = model
            .itinerary(&pt.point, m)
            .unwrap_or_else(|_| Word(pt.word.0[..m].to_vec()));
        let mut idx = 0usize;
        for l in 0..=m {
            if l > 0 {
                idx = idx * k + (code.0[l - 1] - 1);
            }
            weights[offsets[l] + idx] += &pt.weight;
            counts[offsets[l] + idx] += 1;
        }
    }
    let dn = Q::from_integer(BigInt::from(model.d).pow(n as u32));
    let kn = Q::from_integer(BigInt::from(k).pow(n as u32));
    let mut out = Vec::with_capacity(rows);
    for l in 0..=m {
        for (i, w) in words(k, l).enumerate() {
            let word = Word(w);
            let (equilibrium, maxent) = cylinder_masses(model, &word)?;
            let weighted = Q::from_integer(weights[offsets[l] + i].clone()) / &dn;
            let unweighted = Q::from_integer(counts[offsets[l] + i].into()) / &kn;
            out.push(EquidistributionRow {
                word,
                weighted_deviation: (&weighted - &equilibrium).abs(),
                unweighted_deviation: (&unweighted - &maxent).abs(),
                weighted,
                equilibrium,
                unweighted,
                maxent,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::build_model;
    use crate::rat::q;

    #[test]
    fn periodic_point_examples() {
        let m22 = build_model(&[2, 2], None).unwrap();
        let pts = periodic_points(&m22, 1).unwrap();
        assert_eq!(
            pts.iter()
                .map(|p| (p.point.clone(), p.word.to_string()))
                .collect::<Vec<_>>(),
            vec![(qi(0), "1".into()), (qi(1), "2".into())]
        );
        assert_eq!(
            pts.iter().map(|p| &p.weight).sum::<BigInt>(),
            BigInt::from(4)
        );
        let m23 = build_model(&[2, 3], None).unwrap();
        let pts = periodic_points(&m23, 2).unwrap();
        let ws: Vec<BigInt> = pts.iter().map(|p| p.weight.clone()).collect();
        assert_eq!(ws, [4, 6, 6, 9].map(BigInt::from));
        assert!(pts.iter().all(|p| !p.boundary));
    }

    #[test]
    fn too_many_words() {
        let m = build_model(&[2, 3], None).unwrap();
        assert!(matches!(periodic_points(&m, 20), Err(Error::TooLarge(_))));
    }

    #[test]
    fn masses_and_entropy() {
        let m23 = build_model(&[2, 3], None).unwrap();
        assert_eq!(
            cylinder_masses(&m23, &"1".parse().unwrap()).unwrap(),
            (q(2, 5), q(1, 2))
        );
        assert_eq!(
            cylinder_masses(&m23, &Word::default()).unwrap(),
            (qi(1), qi(1))
        );
        let e = entropy_stats(&m23);
        assert_eq!(e.h_top.to_string(), "log 2");
        assert_eq!(e.h_rho.to_string(), "(3/5) log(5/3) + (2/5) log(5/2)");
        assert_eq!(e.h_rho.exact_cmp(&e.h_top), Ordering::Less);
        let e22 = entropy_stats(&build_model(&[2, 2], None).unwrap());
        assert_eq!(e22.h_rho, e22.h_top);
        assert_eq!(e22.h_rho.to_string(), "log 2");
    }

    #[test]
    fn lyapunov_examples() {
        let m23 = build_model(&[2, 3], None).unwrap();
        assert_eq!(model_lyapunov(&m23, 2).unwrap(), q(-2, 5));
        assert_eq!(model_lyapunov(&m23, 5).unwrap(), qi(0));
        let m333 = build_model(&[3, 3, 3], None).unwrap();
        assert_eq!(model_lyapunov(&m333, 3).unwrap(), qi(-1));
        assert!(model_lyapunov(&m333, 4).is_err());
    }

    #[test]
    fn equidistribution_examples() {
        let m23 = build_model(&[2, 3], None).unwrap();
        let t = equidistribution_table(&m23, 2, 1).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].weighted, qi(1));
        assert_eq!(t[1].word.to_string(), "1");
        assert_eq!(t[1].weighted, q(2, 5));
        assert!(t.iter().all(|r| r.weighted_deviation.is_zero()));
        let m22 = build_model(&[2, 2], None).unwrap();
        let t = equidistribution_table(&m22, 3, 2).unwrap();
        let row = t.iter().find(|r| r.word.to_string() == "12").unwrap();
        assert_eq!(row.unweighted, q(1, 4));
        assert!(row.unweighted_deviation.is_zero());
    }
}
