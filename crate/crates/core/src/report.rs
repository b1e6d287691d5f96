//! Serialization helpers: every rational leaves the crate as an exact
//! `"p/q"` string.

use serde::Serializer;

use crate::exactval::Valuation;
use crate::rat::{fmt_q, Q};

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub fn ser_qs<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(fmt_q))
}

pub fn ser_opt_q<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&fmt_q(x)),
        None => s.serialize_none(),
    }
}

pub fn ser_valuation<S: Serializer>(v: &Valuation, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_scalar<S: Serializer>(x: &crate::exactval::Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn ser_bigint<S: Serializer>(x: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}
