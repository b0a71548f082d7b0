use super::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester resultant with respect to `var`, by fraction-free Bareiss elimination.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    if !f.same_ring(g) {
        return Err(Error::RingMismatch("resultant operands".into()));
    }
    let ring = f.ring().clone();
    if f.is_zero() || g.is_zero() {
        return Ok(ring.zero());
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    if m == 0 && n == 0 {
        return Err(Error::Degenerate("both operands are constant in the variable".into()));
    }
    let size = m + n;
    let mut a: Vec<Vec<MultiPoly>> = vec![vec![ring.zero(); size]; size];
    // rows: n shifts of f, then m shifts of g; highest power in column 0
    for i in 0..n {
        for (k, c) in fc.iter().enumerate() {
            a[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().enumerate() {
            a[n + i][i + n - k] = c.clone();
        }
    }
    Ok(bareiss_det(a))
}

fn bareiss_det(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = a.len();
    let ring = a[0][0].ring().clone();
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = ring.zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
