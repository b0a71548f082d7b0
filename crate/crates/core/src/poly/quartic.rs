//! Triple-root criterion for binary quartics.

use serde::Serialize;

use crate::arith::{int, NFElem};
use crate::error::{Error, Result};

/// `a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    pub a: NFElem,
    pub b: NFElem,
    pub c: NFElem,
    pub d: NFElem,
    pub e: NFElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRootReport {
    pub i: NFElem,
    pub j: NFElem,
    pub triple: bool,
}

impl BinaryQuartic {
    pub fn new(c: [NFElem; 5]) -> Self {
        let [a, b, c, d, e] = c;
        BinaryQuartic { a, b, c, d, e }
    }

    pub fn coeffs(&self) -> [&NFElem; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    /// `12ae - 3bd + c^2`.
    pub fn invariant_i(&self) -> NFElem {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        &(&(a * e).scale(&int(12)) - &(b * d).scale(&int(3))) + &(c * c)
    }

    /// `27ad^2 + 27b^2e - 27bcd + 8c^3`.
    pub fn invariant_j(&self) -> NFElem {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        let t = &(&(&(a * d) * d) + &(&(b * b) * e)) - &(&(b * c) * d);
        &t.scale(&int(27)) + &(&(c * c) * c).scale(&int(8))
    }

    /// A linear form divides the quartic to order at least 3 iff both invariants vanish.
    pub fn has_triple_root(&self) -> Result<TripleRootReport> {
        if self.coeffs().iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("zero binary form".into()));
        }
        let i = self.invariant_i();
        let j = self.invariant_j();
        let triple = i.is_zero() && j.is_zero();
        Ok(TripleRootReport { i, j, triple })
    }
}
