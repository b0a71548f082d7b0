//! Serde helpers for foreign numeric types.

use serde::Serializer;

use crate::arith::{fmt_rat, Rat};

pub fn rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(r))
}

pub fn rats<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rat))
}

pub fn rat_triples<S: Serializer>(v: &[(usize, usize, Rat)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(i, j, r)| (i, j, fmt_rat(r))))
}

pub fn named_rats<S: Serializer>(v: &[(String, Rat)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(n, r)| (n, fmt_rat(r))))
}

pub fn rat_rows<S: Serializer>(v: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(fmt_rat).collect::<Vec<_>>()))
}
