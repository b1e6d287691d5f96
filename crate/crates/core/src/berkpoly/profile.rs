//! Exact piecewise-affine profiles along a segment `{(a, rho)}`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::LocalData;
use crate::error::{Error, Result};
use crate::exactval::{Scalar, Valuation};
use crate::polynewt::Poly;
use crate::rat::{fmt_q, midpoint, qi, Q};
use crate::report::{ser_q, ser_qs};

/// `slope * rho + intercept`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub slope: Q,
    pub intercept: Q,
}

impl Line {
    fn through(x0: &Q, y0: &Q, x1: &Q, y1: &Q) -> Line {
        let slope = (y1 - y0) / (x1 - x0);
        let intercept = y0 - &slope * x0;
        Line { slope, intercept }
    }

    pub fn at(&self, rho: &Q) -> Q {
        &self.slope * rho + &self.intercept
    }
}

impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [fmt_q(&self.slope), fmt_q(&self.intercept)].serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfilePiece {
    #[serde(serialize_with = "ser_q")]
    pub from: Q,
    #[serde(serialize_with = "ser_q")]
    pub to: Q,
    #[serde(rename = "deg")]
    pub degree: usize,
    /// Inseparability degree at the type-II points inside the piece.
    pub insep: u64,
    pub logdiam_img: Line,
    pub logsd: Line,
    pub wf: Line,
}

/// Degree, `log diam o P`, `log ||P'||` and `wf` along a segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiecewiseProfile {
    #[serde(serialize_with = "ser_qs")]
    pub breakpoints: Vec<Q>,
    pub pieces: Vec<ProfilePiece>,
}

impl PiecewiseProfile {
    /// `(rho, wf)` at every breakpoint; `wf` is affine in between.
    pub fn wf_polyline(&self) -> Vec<(Q, Q)> {
        let mut out: Vec<(Q, Q)> = self
            .pieces
            .iter()
            .map(|p| (p.from.clone(), p.wf.at(&p.from)))
            .collect();
        if let Some(last) = self.pieces.last() {
            out.push((last.to.clone(), last.wf.at(&last.to)));
        }
        out
    }

    pub fn piece_at(&self, rho: &Q) -> Option<&ProfilePiece> {
        self.pieces.iter().find(|p| &p.from <= rho && rho <= &p.to)
    }
}

fn crossings(lines: &[(usize, Q)], out: &mut Vec<Q>) {
    for (i, (k1, v1)) in lines.iter().enumerate() {
        for (k2, v2) in &lines[i + 1..] {
            // v1 + k1 rho = v2 + k2 rho
            out.push((v1 - v2) / qi(*k2 as i64 - *k1 as i64));
        }
    }
}

fn finite_lines(vals: &[Valuation]) -> Vec<(usize, Q)> {
    vals.iter()
        .enumerate()
        .skip(1)
        .filter_map(|(k, v)| v.finite().map(|v| (k, v.clone())))
        .collect()
}

pub fn segment_profile(p: &Poly, a: &Scalar, rho_from: &Q, rho_to: &Q) -> Result<PiecewiseProfile> {
    if rho_from >= rho_to {
        return Err(Error::Precondition(format!(
            "empty segment [{}, {}]",
            fmt_q(rho_from),
            fmt_q(rho_to)
        )));
    }
    let data = LocalData::new(p, a)?;
    let img_lines = finite_lines(&data.vals);
    let der_lines = finite_lines(&data.der_vals);

    let mut cands = vec![rho_from.clone(), rho_to.clone(), Q::zero()];
    crossings(&img_lines, &mut cands);
    crossings(&der_lines, &mut cands);
    if let Valuation::Finite(v) = &data.center_val {
        cands.push(v.clone());
    }
    // |P(x)| switches between the constant term and the image radius, and
    // the projective correction switches at |P(x)| = 1
    for (k, v) in &img_lines {
        let kq = qi(*k as i64);
        cands.push(-v / &kq);
        if let Valuation::Finite(v0) = &data.vals[0] {
            cands.push((v0 - v) / &kq);
        }
    }
    cands.retain(|c| c >= rho_from && c <= rho_to);
    cands.sort();
    cands.dedup();

    let res_char = p.field().residue_char();
    let mut pieces: Vec<ProfilePiece> = Vec::new();
    for w in cands.windows(2) {
        let (b0, b1) = (&w[0], &w[1]);
        let mid = midpoint(b0, b1);
        let degree = data.image_terms(&mid).largest();
        let insep = if res_char == 0 {
            1
        } else {
            let mut q = 1u64;
            while (degree as u64).is_multiple_of(q * res_char) {
                q *= res_char;
            }
            q
        };
        let piece = ProfilePiece {
            from: b0.clone(),
            to: b1.clone(),
            degree,
            insep,
            logdiam_img: Line::through(b0, &data.image_diam_log(b0), b1, &data.image_diam_log(b1)),
            logsd: Line::through(b0, &data.sd_log(b0), b1, &data.sd_log(b1)),
            wf: Line::through(b0, &data.wf(b0), b1, &data.wf(b1)),
        };
        match pieces.last_mut() {
            Some(prev)
                if prev.degree == piece.degree
                    && prev.insep == piece.insep
                    && prev.logdiam_img == piece.logdiam_img
                    && prev.logsd == piece.logsd
                    && prev.wf == piece.wf =>
            {
                prev.to = piece.to;
            }
            _ => pieces.push(piece),
        }
    }
    let mut breakpoints: Vec<Q> = pieces.iter().map(|p| p.from.clone()).collect();
    breakpoints.push(rho_to.clone());
    Ok(PiecewiseProfile {
        breakpoints,
        pieces,
    })
}

/// A maximal interval of a piece on which `wf > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WildInterval {
    #[serde(serialize_with = "ser_q")]
    pub from: Q,
    #[serde(serialize_with = "ser_q")]
    pub to: Q,
    pub from_closed: bool,
    pub to_closed: bool,
    pub wf: Line,
}

pub fn wild_locus(profile: &PiecewiseProfile) -> Vec<WildInterval> {
    let mut out: Vec<WildInterval> = Vec::new();
    for piece in &profile.pieces {
        let (w0, w1) = (piece.wf.at(&piece.from), piece.wf.at(&piece.to));
        if !w0.is_positive() && !w1.is_positive() {
            continue;
        }
        let interval = WildInterval {
            from: piece.from.clone(),
            to: piece.to.clone(),
            from_closed: w0.is_positive(),
            to_closed: w1.is_positive(),
            wf: piece.wf.clone(),
        };
        match out.last_mut() {
            Some(prev) if prev.to == interval.from && prev.to_closed && prev.wf == interval.wf => {
                prev.to = interval.to;
                prev.to_closed = interval.to_closed;
            }
            _ => out.push(interval),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactval::FieldDesc;
    use crate::rat::q;

    fn line(s: Q, i: Q) -> Line {
        Line {
            slope: s,
            intercept: i,
        }
    }

    #[test]
    fn square_over_q3_is_tame() {
        let k = FieldDesc::padic(3).unwrap();
        let sq = Poly::monomial(k.one(), 2);
        let prof = segment_profile(&sq, &k.zero(), &qi(0), &qi(2)).unwrap();
        assert_eq!(prof.pieces.len(), 1);
        assert_eq!(prof.pieces[0].degree, 2);
        assert_eq!(prof.pieces[0].wf, line(qi(0), qi(0)));
        assert!(wild_locus(&prof).is_empty());
    }

    #[test]
    fn square_over_q2_near_one() {
        let k = FieldDesc::padic(2).unwrap();
        let sq = Poly::monomial(k.one(), 2);
        let prof = segment_profile(&sq, &k.one(), &qi(0), &qi(2)).unwrap();
        assert_eq!(prof.breakpoints, vec![qi(0), qi(1), qi(2)]);
        assert_eq!(prof.pieces[0].degree, 2);
        assert_eq!(prof.pieces[1].degree, 1);
        assert_eq!(prof.pieces[0].wf, line(qi(-1), qi(1)));
        assert_eq!(prof.pieces[1].wf, line(qi(0), qi(0)));
        let locus = wild_locus(&prof);
        assert_eq!(locus.len(), 1);
        assert_eq!((locus[0].from.clone(), locus[0].to.clone()), (qi(0), qi(1)));
        assert!(!locus[0].to_closed);
        assert_eq!(locus[0].wf, line(qi(-1), qi(1)));
    }

    #[test]
    fn p0_first_piece_is_wild() {
        let k = FieldDesc::padic(3).unwrap();
        let mut c = vec![qi(0); 10];
        c[3] = q(1, 3);
        c[9] = q(-1, 3);
        let p0 = Poly::from_rationals(&k, &c);
        let prof = segment_profile(&p0, &k.zero(), &qi(0), &qi(1)).unwrap();
        let first = &prof.pieces[0];
        assert_eq!(first.degree, 3);
        assert_eq!(first.insep, 3);
        assert_eq!(first.wf, line(qi(0), qi(1)));
        let locus = wild_locus(&prof);
        assert!(locus[0].from == qi(0) && locus[0].to >= q(1, 3));
    }

    #[test]
    fn profile_is_continuous() {
        let k = FieldDesc::padic(2).unwrap();
        let p = Poly::from_rationals(&k, &[qi(1), q(1, 2), qi(0), qi(4), q(-1, 8), qi(1)]);
        let prof = segment_profile(&p, &k.rational(q(3, 2)), &qi(-4), &qi(4)).unwrap();
        for w in prof.pieces.windows(2) {
            let b = &w[0].to;
            assert_eq!(w[0].wf.at(b), w[1].wf.at(b));
            assert_eq!(w[0].logsd.at(b), w[1].logsd.at(b));
            assert_eq!(w[0].logdiam_img.at(b), w[1].logdiam_img.at(b));
        }
    }

    #[test]
    fn empty_segment_rejected() {
        let k = FieldDesc::padic(2).unwrap();
        let sq = Poly::monomial(k.one(), 2);
        assert!(matches!(
            segment_profile(&sq, &k.zero(), &qi(1), &qi(1)),
            Err(Error::Precondition(_))
        ));
    }
}
