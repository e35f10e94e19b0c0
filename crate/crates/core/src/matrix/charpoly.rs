//! Characteristic polynomial `det(xI - A)` over any field.
//!
//! Uses a similarity reduction to upper Hessenberg form followed by the
//! standard three-term recurrence. Only field operations are involved, so it
//! is exact in every characteristic (unlike trace/Newton-identity methods,
//! which divide by `n!`).

use crate::error::{Error, Result};
use crate::gf::Poly;
use crate::matrix::Matrix;

pub fn char_poly(a: &Matrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("char_poly of a non-square matrix".into()));
    }
    let f = a.field().clone();
    let n = a.rows();
    let mut h: Vec<Vec<u32>> = a.to_values();

    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = f.inv_raw(h[k + 1][k])?;
        for j in k + 2..n {
            let u = f.mul_raw(h[j][k], inv);
            if u == 0 {
                continue;
            }
            // R_j -= u R_{k+1}, then C_{k+1} += u C_j keeps the similarity class.
            for c in 0..n {
                let t = f.mul_raw(u, h[k + 1][c]);
                h[j][c] = f.sub_raw(h[j][c], t);
            }
            for row in h.iter_mut() {
                let t = f.mul_raw(u, row[j]);
                row[k + 1] = f.add_raw(row[k + 1], t);
            }
        }
    }

    let x = Poly::monomial(&f, 1);
    let mut polys: Vec<Poly> = vec![Poly::one(&f)];
    for m in 1..=n {
        let diag = f.elem_raw(h[m - 1][m - 1]);
        let mut pm = x.sub(&Poly::from_elems(&f, &[diag])?)?.mul(&polys[m - 1])?;
        let mut t = 1u32;
        for i in (1..m).rev() {
            t = f.mul_raw(t, h[i][i - 1]);
            let coef = f.mul_raw(h[i - 1][m - 1], t);
            if coef != 0 {
                pm = pm.sub(&polys[i - 1].scale(&f.elem_raw(coef))?)?;
            }
        }
        polys.push(pm);
    }
    Ok(polys.pop().unwrap())
}
