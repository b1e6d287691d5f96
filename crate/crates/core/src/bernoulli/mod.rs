//! Affine Bernoulli maps of the unit segment.
//!
//! A model has `k` disjoint closed intervals `I_j ⊂ [0, 1]` of length `1/d_j`,
//! each mapped affinely onto `[0, 1]` with slope `±d_j`. Points are coded by
//! the intervals their orbit visits; the coding is a conjugacy with the full
//! shift on `k` symbols off the countable set of preimages of boundary points.
//!
//! Symbols are 1-based throughout, matching the usual `I_1, ..., I_k`.

mod measures;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::{fmt_q, qi, Q};
use crate::report::ser_q;

pub use measures::{
    cylinder_masses, entropy_stats, equidistribution_table, model_lyapunov, periodic_points,
    EntropyStats, EquidistributionRow, LogTerm, PeriodicPoint, SymbolicLog, MAX_WORDS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JuliaType {
    /// `sum 1/d_j = 1`: the intervals tile `[0, 1]`.
    Segment,
    /// `sum 1/d_j < 1`: a Cantor set of length zero.
    Cantor,
}

/// Placement of the branch intervals, listed left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub starts: Vec<Q>,
    pub orientations: Vec<Orientation>,
}

impl Layout {
    /// Intervals packed against `0`, every branch increasing.
    pub fn left_packed(dilations: &[u64]) -> Layout {
        let mut starts = Vec::with_capacity(dilations.len());
        let mut s = Q::zero();
        for d in dilations {
            starts.push(s.clone());
            s += Q::new(1.into(), (*d).into());
        }
        Layout {
            starts,
            orientations: vec![Orientation::Increasing; dilations.len()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub dilation: u64,
    #[serde(serialize_with = "ser_q")]
    pub start: Q,
    #[serde(serialize_with = "ser_q")]
    pub end: Q,
    pub orientation: Orientation,
}

impl Branch {
    /// The branch map `I_j -> [0, 1]`.
    pub fn forward(&self, x: &Q) -> Q {
        let y = (x - &self.start) * qi(self.dilation as i64);
        match self.orientation {
            Orientation::Increasing => y,
            Orientation::Decreasing => Q::one() - y,
        }
    }

    /// The inverse branch `[0, 1] -> I_j`.
    pub fn inverse(&self, y: &Q) -> Q {
        let y = match self.orientation {
            Orientation::Increasing => y.clone(),
            Orientation::Decreasing => Q::one() - y,
        };
        &self.start + y / qi(self.dilation as i64)
    }

    /// The inverse branch as `y -> a y + b`.
    fn inverse_affine(&self) -> (Q, Q) {
        let inv_d = Q::new(1.into(), self.dilation.into());
        match self.orientation {
            Orientation::Increasing => (inv_d, self.start.clone()),
            Orientation::Decreasing => (-inv_d.clone(), &self.start + inv_d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BernoulliModel {
    pub dilations: Vec<u64>,
    pub d: u64,
    pub branches: Vec<Branch>,
    pub lattes_like: bool,
    pub julia_type: JuliaType,
}

/// A finite word over `1..=k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|s| *s < 10) {
            ""
        } else {
            ","
        };
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// `"121"` or, for symbols above 9, `"1,12,3"`.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad symbol {t:?} in word {s:?}")))
        };
        let symbols = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',').map(parse).collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| parse(&c.to_string()))
                .collect::<Result<_>>()?
        };
        Ok(Word(symbols))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An eventually periodic code `prefix cycle cycle ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Itinerary {
    pub prefix: Word,
    pub cycle: Word,
}

impl Itinerary {
    pub fn periodic(cycle: Word) -> Itinerary {
        Itinerary {
            prefix: Word::default(),
            cycle,
        }
    }

    /// The first `n` symbols.
    pub fn take(&self, n: usize) -> Word {
        let mut out: Vec<usize> = self.prefix.0.iter().copied().take(n).collect();
        while out.len() < n {
            let i = (out.len() - self.prefix.len()) % self.cycle.len();
            out.push(self.cycle.0[i]);
        }
        Word(out)
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, self.cycle)
    }
}

impl FromStr for Itinerary {
    type Err = Error;

    /// `"1(2)"` is `1 2 2 2 ...`; `"(12)"` is `1 2 1 2 ...`.
    fn from_str(s: &str) -> Result<Itinerary> {
        let s = s.trim();
        let (pre, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("itinerary {s:?} needs a (cycle)")))?;
        let cycle = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let it = Itinerary {
            prefix: pre.parse()?,
            cycle: cycle.parse()?,
        };
        if it.cycle.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {s:?}")));
        }
        Ok(it)
    }
}

impl Serialize for Itinerary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Validated model with the default left-packed layout unless one is given.
pub fn build_model(dilations: &[u64], layout: Option<Layout>) -> Result<BernoulliModel> {
    if dilations.len() < 2 {
        return Err(Error::InvalidDilations(format!(
            "need at least two branches, got {}",
            dilations.len()
        )));
    }
    if let Some(bad) = dilations.iter().find(|d| **d < 2) {
        return Err(Error::InvalidDilations(format!(
            "dilation {bad} is below 2"
        )));
    }
    let total: Q = dilations
        .iter()
        .map(|d| Q::new(1.into(), (*d).into()))
        .sum();
    if total > Q::one() {
        return Err(Error::InvalidDilations(format!(
            "sum of 1/d_j is {} > 1",
            fmt_q(&total)
        )));
    }
    let layout = layout.unwrap_or_else(|| Layout::left_packed(dilations));
    let k = dilations.len();
    if layout.starts.len() != k || layout.orientations.len() != k {
        return Err(Error::Precondition(format!(
            "layout has {} starts and {} orientations for {k} branches",
            layout.starts.len(),
            layout.orientations.len()
        )));
    }
    let mut branches: Vec<Branch> = Vec::with_capacity(k);
    for (j, d) in dilations.iter().enumerate() {
        let start = layout.starts[j].clone();
        let end = &start + Q::new(1.into(), (*d).into());
        let overlaps = branches.last().is_some_and(|b| start < b.end);
        if start < Q::zero() || end > Q::one() || overlaps {
            return Err(Error::Precondition(format!(
                "interval {j} = [{}, {}] is outside [0, 1] or overlaps its left neighbour",
                fmt_q(&start),
                fmt_q(&end)
            )));
        }
        branches.push(Branch {
            dilation: *d,
            start,
            end,
            orientation: layout.orientations[j],
        });
    }
    let d: u64 = dilations.iter().sum();
    debug_assert!((k * k) as u64 <= d);
    Ok(BernoulliModel {
        dilations: dilations.to_vec(),
        d,
        lattes_like: dilations.iter().all(|dj| *dj == k as u64) && d == (k * k) as u64,
        julia_type: if total == Q::one() {
            JuliaType::Segment
        } else {
            JuliaType::Cantor
        },
        branches,
    })
}

impl BernoulliModel {
    pub fn k(&self) -> usize {
        self.dilations.len()
    }

    /// Index (0-based) of the branch whose domain contains `x`. Domains are
    /// closed, except that an endpoint shared by two touching intervals
    /// belongs to the right-hand one.
    pub fn branch_of(&self, x: &Q) -> Option<usize> {
        // the right-hand interval wins a shared endpoint
        (0..self.k())
            .rev()
            .find(|&j| &self.branches[j].start <= x && x <= &self.branches[j].end)
    }

    pub fn apply(&self, x: &Q) -> Result<Q> {
        check_unit(x)?;
        let j = self.branch_of(x).ok_or_else(|| Error::GapError(fmt_q(x)))?;
        Ok(self.branches[j].forward(x))
    }

    /// First `n` symbols of the orbit of `x`.
    pub fn itinerary(&self, x: &Q, n: usize) -> Result<Word> {
        check_unit(x)?;
        let mut out = Vec::with_capacity(n);
        let mut y = x.clone();
        for _ in 0..n {
            let j = self
                .branch_of(&y)
                .ok_or_else(|| Error::GapError(fmt_q(&y)))?;
            out.push(j + 1);
            y = self.branches[j].forward(&y);
        }
        Ok(Word(out))
    }

    /// The full (eventually periodic) code of a rational point of the Julia
    /// set. Rational orbits have bounded denominators, so they cycle.
    pub fn full_itinerary(&self, x: &Q) -> Result<Itinerary> {
        check_unit(x)?;
        let mut seen: Vec<Q> = Vec::new();
        let mut symbols = Vec::new();
        let mut y = x.clone();
        loop {
            if let Some(i) = seen.iter().position(|s| s == &y) {
                return Ok(Itinerary {
                    prefix: Word(symbols[..i].to_vec()),
                    cycle: Word(symbols[i..].to_vec()),
                });
            }
            let j = self
                .branch_of(&y)
                .ok_or_else(|| Error::GapError(fmt_q(&y)))?;
            symbols.push(j + 1);
            let next = self.branches[j].forward(&y);
            seen.push(y);
            y = next;
        }
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|s| **s == 0 || **s > self.k()) {
            Some(s) => Err(Error::Precondition(format!(
                "symbol {s} outside 1..={}",
                self.k()
            ))),
            None => Ok(()),
        }
    }

    /// The point coded by `w`: the fixed point of the composed inverse
    /// branches of the cycle, pushed through the prefix.
    pub fn decode(&self, w: &Itinerary) -> Result<Q> {
        self.check_word(&w.prefix)?;
        self.check_word(&w.cycle)?;
        if w.cycle.is_empty() {
            return Err(Error::Precondition("empty cycle".into()));
        }
        // psi_{w1} o ... o psi_{wm} as y -> a y + b
        let (mut a, mut b) = (Q::one(), Q::zero());
        for s in w.cycle.0.iter().rev() {
            let (a1, b1) = self.branches[s - 1].inverse_affine();
            b = &a1 * &b + b1;
            a *= a1;
        }
        let mut x = b / (Q::one() - a);
        for s in w.prefix.0.iter().rev() {
            x = self.branches[s - 1].inverse(&x);
        }
        Ok(x)
    }

    /// The endpoints of the convex hull of the Julia set and their codes.
    pub fn hull_endpoints(&self) -> [HullEndpoint; 2] {
        let (j0, jl) = (1, self.k());
        let (first, last) = (&self.branches[0], &self.branches[jl - 1]);
        let (min_code, max_code) = match (first.orientation, last.orientation) {
            (Orientation::Increasing, Orientation::Increasing) => (
                Itinerary::periodic(Word(vec![j0])),
                Itinerary::periodic(Word(vec![jl])),
            ),
            (Orientation::Increasing, Orientation::Decreasing) => (
                Itinerary::periodic(Word(vec![j0])),
                Itinerary {
                    prefix: Word(vec![jl]),
                    cycle: Word(vec![j0]),
                },
            ),
            (Orientation::Decreasing, Orientation::Increasing) => (
                Itinerary {
                    prefix: Word(vec![j0]),
                    cycle: Word(vec![jl]),
                },
                Itinerary::periodic(Word(vec![jl])),
            ),
            (Orientation::Decreasing, Orientation::Decreasing) => (
                Itinerary::periodic(Word(vec![j0, jl])),
                Itinerary::periodic(Word(vec![jl, j0])),
            ),
        };
        [min_code, max_code].map(|code| HullEndpoint {
            point: self.decode(&code).expect("valid code"),
            period: code.prefix.is_empty().then(|| code.cycle.len()),
            code,
        })
    }
}

/// One end of the hull of the Julia set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullEndpoint {
    #[serde(serialize_with = "ser_q")]
    pub point: Q,
    pub code: Itinerary,
    /// `None` when the endpoint is strictly preperiodic.
    pub period: Option<usize>,
}

fn check_unit(x: &Q) -> Result<()> {
    if x < &Q::zero() || x > &Q::one() {
        return Err(Error::Precondition(format!(
            "{} is outside [0, 1]",
            fmt_q(x)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    #[test]
    fn build_examples() {
        let m = build_model(&[2, 2], None).unwrap();
        assert_eq!(m.d, 4);
        assert!(m.lattes_like);
        assert_eq!(m.julia_type, JuliaType::Segment);
        let m = build_model(&[2, 3], None).unwrap();
        assert_eq!(m.d, 5);
        assert!(!m.lattes_like);
        assert_eq!(m.julia_type, JuliaType::Cantor);
        assert!(matches!(
            build_model(&[2, 2, 2], None),
            Err(Error::InvalidDilations(_))
        ));
        assert!(matches!(
            build_model(&[1, 5], None),
            Err(Error::InvalidDilations(_))
        ));
        assert!(build_model(&[3, 3, 3], None).unwrap().lattes_like);
    }

    #[test]
    fn apply_examples() {
        let m22 = build_model(&[2, 2], None).unwrap();
        assert_eq!(m22.apply(&q(1, 3)).unwrap(), q(2, 3));
        let m23 = build_model(&[2, 3], None).unwrap();
        assert_eq!(m23.apply(&q(3, 4)).unwrap(), q(3, 4));
        assert_eq!(m23.apply(&q(9, 10)), Err(Error::GapError("9/10".into())));
        // shared endpoint goes right
        assert_eq!(m23.apply(&q(1, 2)).unwrap(), qi(0));
    }

    #[test]
    fn decode_examples() {
        let m23 = build_model(&[2, 3], None).unwrap();
        assert_eq!(m23.decode(&"(2)".parse().unwrap()).unwrap(), q(3, 4));
        assert_eq!(m23.decode(&"(1)".parse().unwrap()).unwrap(), qi(0));
        let m22 = build_model(&[2, 2], None).unwrap();
        assert_eq!(m22.decode(&"(12)".parse().unwrap()).unwrap(), q(1, 3));
        assert_eq!(m22.decode(&"1(2)".parse().unwrap()).unwrap(), q(1, 2));
    }

    #[test]
    fn itinerary_round_trip() {
        let m = build_model(&[2, 3], None).unwrap();
        let x = q(3, 4);
        let it = m.full_itinerary(&x).unwrap();
        assert_eq!(it.to_string(), "(2)");
        assert_eq!(m.decode(&it).unwrap(), x);
        assert_eq!(m.itinerary(&q(1, 4), 3).unwrap().to_string(), "121");
    }

    #[test]
    fn decreasing_branch() {
        let layout = Layout {
            starts: vec![qi(0), q(1, 2)],
            orientations: vec![Orientation::Increasing, Orientation::Decreasing],
        };
        let m = build_model(&[2, 2], Some(layout)).unwrap();
        assert_eq!(m.apply(&q(3, 4)).unwrap(), q(1, 2));
        let x = m.decode(&"(2)".parse().unwrap()).unwrap();
        assert_eq!(x, q(2, 3));
        assert_eq!(m.apply(&x).unwrap(), x);
        let [lo, hi] = m.hull_endpoints();
        assert_eq!((lo.point, lo.period), (qi(0), Some(1)));
        assert_eq!((hi.point, hi.period), (qi(1), None));
    }

    #[test]
    fn hull_two_cycle() {
        let layout = Layout {
            starts: vec![qi(0), q(2, 3)],
            orientations: vec![Orientation::Decreasing; 2],
        };
        let m = build_model(&[3, 3], Some(layout)).unwrap();
        let [lo, hi] = m.hull_endpoints();
        assert_eq!(lo.period, Some(2));
        assert_eq!(m.apply(&lo.point).unwrap(), hi.point);
        assert_eq!(m.apply(&hi.point).unwrap(), lo.point);
    }

    #[test]
    fn overlapping_layout_rejected() {
        let layout = Layout {
            starts: vec![qi(0), q(1, 4)],
            orientations: vec![Orientation::Increasing; 2],
        };
        assert!(matches!(
            build_model(&[2, 3], Some(layout)),
            Err(Error::Precondition(_))
        ));
    }
}
