#![allow(dead_code)]

use nadyn::berkpoly::TypeIIPoint;
use nadyn::exactval::{FieldDesc, Scalar};
use nadyn::polynewt::Poly;
use nadyn::rat::{q, qi};
use nadyn::Q;
use rand::Rng;

/// A small rational whose numerator and denominator carry random powers of `p`.
pub fn rand_rational<R: Rng>(rng: &mut R, p: i64) -> Q {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=5);
    let e = rng.gen_range(-2i32..=2);
    let scale = if e >= 0 {
        qi(p.pow(e as u32))
    } else {
        q(1, p.pow((-e) as u32))
    };
    q(num, den) * scale
}

pub fn rand_scalar<R: Rng>(rng: &mut R, field: &FieldDesc) -> Scalar {
    match field.residue_char() {
        0 => {
            // c * t^e
            let t = field.generator().unwrap();
            let e = rng.gen_range(-2i32..=2);
            let c = field.rational(rand_rational(rng, 7));
            let te = if e >= 0 {
                t.pow(e as u64)
            } else {
                t.pow((-e) as u64).inv().unwrap()
            };
            c.checked_mul(&te).unwrap()
        }
        p => field.rational(rand_rational(rng, p as i64)),
    }
}

/// Nonconstant polynomial of degree in `1..=max_deg`.
pub fn rand_poly<R: Rng>(rng: &mut R, field: &FieldDesc, max_deg: usize) -> Poly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut c: Vec<Scalar> = (0..=d)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    field.zero()
                } else {
                    rand_scalar(rng, field)
                }
            })
            .collect();
        if c[d].is_zero() {
            c[d] = field.one();
        }
        let p = Poly::new(field, c).unwrap();
        if p.deg() >= 1 {
            return p;
        }
    }
}

pub fn rand_point<R: Rng>(rng: &mut R, field: &FieldDesc) -> TypeIIPoint {
    let center = if rng.gen_bool(0.2) {
        field.zero()
    } else {
        rand_scalar(rng, field)
    };
    TypeIIPoint::new(center, qi(rng.gen_range(-3i64..=4)))
}

pub fn q_of(s: &str) -> Q {
    nadyn::parse::parse_rational(s).unwrap()
}

/// Run the CLI in-process and parse its JSON output.
pub fn cli_json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out) = nadyn::cli::run(std::iter::once("nadyn").chain(args.iter().copied()));
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad JSON ({e}): {out}"));
    (code, v)
}
