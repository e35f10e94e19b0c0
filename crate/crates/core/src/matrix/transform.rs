//! Vector and matrix representations of extension-field elements over the
//! ground field.
//!
//! `phi` sends `b_0 + ... + b_{m-1} x^{m-1}` to the column `[b_0..b_{m-1}]^T`;
//! `psi` sends `alpha^l` to `C^l`, where `C` is the companion matrix of the
//! generating polynomial. Together they turn a scalar channel over `F_{p^m}`
//! into an `m x m` MIMO channel over `F_p`: `phi(q x) = psi(q) phi(x)`.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::matrix::Matrix;

/// Companion matrix of the generating polynomial: ones on the subdiagonal,
/// last column `(-a_0, ..., -a_{m-1})`.
pub fn companion_matrix(field: &Field) -> Matrix {
    let g = field.ground();
    let m = field.m();
    let mut c = Matrix::zeros(&g, m, m);
    for i in 1..m {
        c.set_value(i, i - 1, 1);
    }
    for (i, &a) in field.spec().pi_low().iter().enumerate() {
        c.set_value(i, m - 1, g.neg_raw(a));
    }
    c
}

/// Coefficient column of `x`.
pub fn phi(x: &FieldElem) -> Matrix {
    let g = x.field().ground();
    Matrix::from_raw(&g, x.field().m(), 1, x.coeffs())
}

/// Inverse of [`phi`]: reads an `m x 1` ground-field column as an element of `field`.
pub fn phi_inv(field: &Field, v: &Matrix) -> Result<FieldElem> {
    if !field.has_ground(v.field()) {
        return Err(Error::FieldMismatch);
    }
    if v.shape() != (field.m(), 1) {
        return Err(Error::DimensionMismatch(format!(
            "expected {}x1 column, got {:?}",
            field.m(),
            v.shape()
        )));
    }
    field.from_coeffs(&v.column_values(0))
}

/// `psi(q) = sum_i b_i C^i` for `q = sum_i b_i alpha^i`; equals `C^l` when `q = alpha^l`.
pub fn psi(q: &FieldElem) -> Matrix {
    let field = q.field();
    let g = field.ground();
    let c = companion_matrix(field);
    let m = field.m();
    let mut acc = Matrix::zeros(&g, m, m);
    let mut power = Matrix::identity(&g, m);
    for (i, b) in q.coeffs().into_iter().enumerate() {
        if i > 0 {
            power = power.mul(&c).expect("square");
        }
        if b != 0 {
            let term = power.scale(&g.elem(b)).expect("ground scalar");
            acc = acc.add(&term).expect("same shape");
        }
    }
    acc
}

/// Inverse of [`psi`]; `NotInImage` if the matrix is not a polynomial in `C`.
pub fn psi_inv(field: &Field, mat: &Matrix) -> Result<FieldElem> {
    if !field.has_ground(mat.field()) {
        return Err(Error::FieldMismatch);
    }
    if mat.shape() != (field.m(), field.m()) {
        return Err(Error::DimensionMismatch("psi_inv expects an m x m matrix".into()));
    }
    // psi(q) phi(1) = phi(q), so the first column identifies the candidate.
    let q = phi_inv(field, &mat.column(0))?;
    if psi(&q) == *mat {
        Ok(q)
    } else {
        Err(Error::NotInImage)
    }
}

/// `sum_k psi(q_k) phi(x_k)`; always equals `phi(sum_k q_k x_k)`.
pub fn combine_inputs(coeffs: &[FieldElem], inputs: &[FieldElem]) -> Result<Matrix> {
    if coeffs.len() != inputs.len() || coeffs.is_empty() {
        return Err(Error::DimensionMismatch("coefficient and input lists differ".into()));
    }
    let field = coeffs[0].field();
    if coeffs.iter().chain(inputs).any(|e| e.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let g = field.ground();
    let mut y = Matrix::zeros(&g, field.m(), 1);
    for (q, x) in coeffs.iter().zip(inputs) {
        y = y.add(&psi(q).mul(&phi(x))?)?;
    }
    Ok(y)
}

/// Row `i` of the result is the coefficient vector of entry `i` of the
/// column `x` over `F_{p^r}`; column `t` is what goes out in slot `t`.
pub fn phi_t(x: &Matrix) -> Result<Matrix> {
    if x.cols() != 1 {
        return Err(Error::DimensionMismatch("phi_t expects a column vector".into()));
    }
    let ext = x.field();
    let g = ext.ground();
    let r = ext.m();
    let mut data = Vec::with_capacity(x.rows() * r);
    for i in 0..x.rows() {
        data.extend(ext.decode(x.value(i, 0)));
    }
    Ok(Matrix::from_raw(&g, x.rows(), r, data))
}

/// Inverse of [`phi_t`]: reassembles an `n x r` ground-field block (one
/// column per slot) into an `n x 1` column over `ext`.
pub fn phi_t_inv(ext: &Field, slots: &Matrix) -> Result<Matrix> {
    if !ext.has_ground(slots.field()) {
        return Err(Error::FieldMismatch);
    }
    if slots.cols() != ext.m() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} slot columns, got {}",
            ext.m(),
            slots.cols()
        )));
    }
    let data = slots.to_values().iter().map(|row| ext.encode(row)).collect();
    Ok(Matrix::from_raw(ext, slots.rows(), 1, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2, None).unwrap()
    }

    fn gm(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_values(f, &rows).unwrap()
    }

    #[test]
    fn companion_examples() {
        let f = f4();
        assert_eq!(companion_matrix(&f), gm(&f.ground(), &[&[0, 1], &[1, 1]]));
        let f8 = Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(
            companion_matrix(&f8),
            gm(&f8.ground(), &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]])
        );
        let f9 = Field::new(3, 2, None).unwrap(); // x^2 + x + 2
        assert_eq!(companion_matrix(&f9), gm(&f9.ground(), &[&[0, 1], &[1, 2]]));
    }

    #[test]
    fn phi_examples() {
        let f = f4();
        let one_plus_a = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(phi(&one_plus_a).column_values(0), vec![1, 1]);
        assert!(phi(&f.zero()).is_zero());
        let col = Matrix::column_vector(&f.ground(), &[0, 1]).unwrap();
        assert_eq!(phi_inv(&f, &col).unwrap(), f.primitive_element());
    }

    #[test]
    fn psi_examples() {
        let f = f4();
        let g = f.ground();
        assert_eq!(psi(&f.primitive_element()), companion_matrix(&f));
        assert_eq!(psi(&f.one()), Matrix::identity(&g, 2));
        assert!(psi(&f.zero()).is_zero());
        let c2 = gm(&g, &[&[1, 1], &[1, 0]]);
        assert_eq!(psi(&f.from_coeffs(&[1, 1]).unwrap()), c2);
        assert_eq!(c2, companion_matrix(&f).pow(2).unwrap());
        assert_eq!(psi_inv(&f, &c2).unwrap(), f.alpha_pow(2));
        assert_eq!(psi_inv(&f, &gm(&g, &[&[1, 0], &[0, 0]])), Err(Error::NotInImage));
    }

    #[test]
    fn psi_is_power_of_companion() {
        for (p, m) in [(2, 3), (3, 2), (2, 4)] {
            let f = Field::new(p, m, None).unwrap();
            let c = companion_matrix(&f);
            let mut cur = Matrix::identity(&f.ground(), m);
            for l in 0..f.order() as u64 - 1 {
                assert_eq!(psi(&f.alpha_pow(l)), cur);
                cur = cur.mul(&c).unwrap();
            }
        }
    }

    #[test]
    fn isomorphism_exhaustive() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = Field::new(p, m, None).unwrap();
            let psis: Vec<Matrix> = f.elements().map(|x| psi(&x)).collect();
            for a in f.elements() {
                let pa = &psis[a.index() as usize];
                if !a.is_zero() {
                    assert_eq!(pa.rank(), m);
                }
                for b in f.elements() {
                    let pb = &psis[b.index() as usize];
                    assert_eq!(&psis[(&a * &b).index() as usize], &pa.mul(pb).unwrap());
                    assert_eq!(&psis[(&a + &b).index() as usize], &pa.add(pb).unwrap());
                    assert_eq!(phi(&(&a * &b)), pa.mul(&phi(&b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn combine_inputs_examples() {
        let f = f4();
        let a = f.primitive_element();
        let y = combine_inputs(&[f.one()], std::slice::from_ref(&a)).unwrap();
        assert_eq!(y, phi(&a));
        let y = combine_inputs(&[a.clone(), f.one()], &[a.clone(), a.clone()]).unwrap();
        assert_eq!(y.column_values(0), vec![1, 0]);
    }

    #[test]
    fn phi_t_examples() {
        let f = f4();
        let x = Matrix::column_of(&[f.primitive_element(), f.from_coeffs(&[1, 1]).unwrap()]).unwrap();
        assert_eq!(phi_t(&x).unwrap(), gm(&f.ground(), &[&[0, 1], &[1, 1]]));
        assert_eq!(phi_t_inv(&f, &phi_t(&x).unwrap()).unwrap(), x);
        let f3 = Field::prime(3).unwrap();
        let v = Matrix::column_vector(&f3, &[2, 0, 1]).unwrap();
        assert_eq!(phi_t(&v).unwrap(), v);
    }
}
