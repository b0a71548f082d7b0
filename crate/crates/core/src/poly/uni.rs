//! Dense univariate polynomials over a number field.

use std::fmt;
use std::sync::Arc;

use crate::arith::{upoly, NFElem, NumberField};

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Arc<NumberField>,
    coeffs: Vec<NFElem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})*X^{}", c, k))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl UniPoly {
    pub fn new(field: &Arc<NumberField>, coeffs: Vec<NFElem>) -> Self {
        UniPoly { field: field.clone(), coeffs: upoly::trim(coeffs) }
    }

    pub fn from_ints(field: &Arc<NumberField>, c: &[i64]) -> Self {
        Self::new(field, c.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        upoly::degree(&self.coeffs)
    }

    pub fn leading_coeff(&self) -> Option<&NFElem> {
        self.coeffs.last()
    }

    fn wrap(&self, c: Vec<NFElem>) -> Self {
        UniPoly { field: self.field.clone(), coeffs: upoly::trim(c) }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.wrap(upoly::add(&self.coeffs, &o.coeffs))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.wrap(upoly::sub(&self.coeffs, &o.coeffs))
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.wrap(upoly::mul(&self.coeffs, &o.coeffs))
    }

    pub fn derivative(&self) -> Self {
        self.wrap(upoly::derivative(&self.coeffs))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, o: &Self) -> (Self, Self) {
        let (q, r) = upoly::divrem(&self.coeffs, &o.coeffs);
        (self.wrap(q), self.wrap(r))
    }

    pub fn monic(&self) -> Self {
        self.wrap(upoly::monic(&self.coeffs))
    }

    /// Monic gcd by Euclid.
    pub fn gcd(&self, o: &Self) -> Self {
        self.wrap(upoly::gcd(&self.coeffs, &o.coeffs))
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Self {
        self.wrap(upoly::squarefree_part(&self.coeffs))
    }

    pub fn eval(&self, x: &NFElem) -> NFElem {
        upoly::eval(&self.coeffs, x)
    }

    pub fn root_multiplicity(&self, x: &NFElem) -> usize {
        upoly::root_multiplicity(&self.coeffs, x)
    }

    /// Distinct roots lying in the coefficient field.
    pub fn roots(&self) -> Vec<NFElem> {
        crate::arith::padic::roots(&self.coeffs)
    }

    pub fn divides(&self, o: &Self) -> bool {
        !self.is_zero() && o.divrem(self).1.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_squarefree() {
        let q = NumberField::rationals();
        let f = UniPoly::from_ints(&q, &[-1, 0, 1]);
        let g = UniPoly::from_ints(&q, &[-1, 1]);
        assert_eq!(f.gcd(&g), g);
        // (x-1)^3 (x+2)
        let h = g.mul(&g).mul(&g).mul(&UniPoly::from_ints(&q, &[2, 1]));
        assert_eq!(h.squarefree_part(), g.mul(&UniPoly::from_ints(&q, &[2, 1])));
        let k = NumberField::sqrt_minus_two();
        let a = UniPoly::from_ints(&k, &[2, 0, 1]);
        let b = UniPoly::new(&k, vec![-k.gen(), k.one()]);
        assert_eq!(a.gcd(&b), b);
    }
}
