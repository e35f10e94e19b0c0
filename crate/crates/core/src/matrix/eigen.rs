//! Eigen-decomposition of prime-field matrices over a splitting field.

use crate::error::{Error, Result};
use crate::gf::{factor_poly, Field, FieldElem, Poly};
use crate::matrix::{char_poly, Matrix};

/// Eigen-decomposition of a prime-field matrix with distinct eigenvalues.
#[derive(Debug, Clone)]
pub struct Eigen {
    /// Characteristic polynomial over `F_p`.
    pub char_poly: Poly,
    /// Irreducible factor degrees, largest first.
    pub factor_degrees: Vec<usize>,
    /// Degree of the largest irreducible factor.
    pub largest_factor_degree: usize,
    /// Splitting-field degree: lcm of the factor degrees.
    pub splitting_degree: usize,
    /// Field holding the eigenvalues (may be larger than the splitting field
    /// when a common extension was requested).
    pub field: Field,
    /// Eigenvalues in ascending packed order.
    pub values: Vec<FieldElem>,
    /// Column `i` is an eigenvector for `values[i]`, lowest nonzero entry 1.
    pub vectors: Matrix,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Squarefree check and factor degrees of a prime-field characteristic polynomial.
pub fn spectrum_degrees(cp: &Poly) -> Result<Vec<usize>> {
    if !cp.is_squarefree() {
        return Err(Error::DegenerateSpectrum);
    }
    Ok(factor_poly(cp)?
        .into_iter()
        .map(|(g, _)| g.degree().unwrap())
        .collect())
}

/// Eigenvalues and eigenvectors of `a` (over `F_p`) in `F_{p^L}`, `L` the
/// splitting-field degree of its characteristic polynomial.
pub fn eigen_over_extension(a: &Matrix) -> Result<Eigen> {
    let cp = char_poly(a)?;
    let degrees = spectrum_degrees(&cp)?;
    let l = degrees.iter().copied().fold(1, lcm);
    let ext = Field::new(a.field().p(), l, None)?;
    eigen_in(a, &ext)
}

/// As [`eigen_over_extension`] but in a caller-chosen extension, which must
/// contain the splitting field.
pub fn eigen_in(a: &Matrix, ext: &Field) -> Result<Eigen> {
    if a.field().m() != 1 || !ext.has_ground(a.field()) {
        return Err(Error::FieldMismatch);
    }
    if !a.is_square() {
        return Err(Error::DimensionMismatch("eigen of a non-square matrix".into()));
    }
    let n = a.rows();
    let cp = char_poly(a)?;
    let degrees = spectrum_degrees(&cp)?;
    let l = degrees.iter().copied().fold(1, lcm);
    if !ext.m().is_multiple_of(l) {
        return Err(Error::InvalidField(format!(
            "F_{}^{} does not contain the splitting field of degree {l}",
            ext.p(),
            ext.m()
        )));
    }
    let lifted_cp = cp.lift(ext)?;
    let values: Vec<FieldElem> = ext
        .elements()
        .filter(|x| lifted_cp.eval(x).map(|v| v.is_zero()).unwrap_or(false))
        .collect();
    assert_eq!(values.len(), n, "squarefree polynomial must split in its splitting field");

    let lifted = a.lift(ext)?;
    let id = Matrix::identity(ext, n);
    let mut vectors = Matrix::zeros(ext, n, n);
    for (k, lambda) in values.iter().enumerate() {
        let shifted = lifted.sub(&id.scale(lambda)?)?;
        let ns = shifted.null_space();
        assert!(ns.cols() >= 1, "eigenvalue without eigenvector");
        for i in 0..n {
            vectors.set_value(i, k, ns.value(i, 0));
        }
    }
    Ok(Eigen {
        char_poly: cp,
        largest_factor_degree: degrees.first().copied().unwrap_or(1),
        factor_degrees: degrees,
        splitting_degree: l,
        field: ext.clone(),
        values,
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_values(f, &rows).unwrap()
    }

    #[test]
    fn irreducible_quadratic_splits_in_f4() {
        let f2 = Field::prime(2).unwrap();
        let a = gm(&f2, &[&[0, 1], &[1, 1]]);
        let e = eigen_over_extension(&a).unwrap();
        assert_eq!(e.splitting_degree, 2);
        let alpha = e.field.primitive_element();
        let mut expect = vec![alpha.clone(), alpha.pow(2)];
        expect.sort_by_key(FieldElem::index);
        assert_eq!(e.values, expect);
        let lifted = a.lift(&e.field).unwrap();
        for (k, l) in e.values.iter().enumerate() {
            let v = e.vectors.column(k);
            assert_eq!(lifted.mul(&v).unwrap(), v.scale(l).unwrap());
        }
    }

    #[test]
    fn diagonal_matrix() {
        let f2 = Field::prime(2).unwrap();
        let e = eigen_over_extension(&gm(&f2, &[&[1, 0], &[0, 0]])).unwrap();
        assert_eq!(e.splitting_degree, 1);
        assert_eq!(e.values.iter().map(FieldElem::index).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn repeated_eigenvalue_is_degenerate() {
        let f2 = Field::prime(2).unwrap();
        let err = eigen_over_extension(&gm(&f2, &[&[1, 1], &[0, 1]])).unwrap_err();
        assert_eq!(err, Error::DegenerateSpectrum);
    }

    #[test]
    fn mixed_degrees_need_lcm() {
        // block diagonal: companion of x^3+x+1 and of x^2+x+1 over F_2 needs F_64
        let f2 = Field::prime(2).unwrap();
        let a = gm(
            &f2,
            &[
                &[0, 0, 1, 0, 0],
                &[1, 0, 1, 0, 0],
                &[0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 1],
                &[0, 0, 0, 1, 1],
            ],
        );
        let e = eigen_over_extension(&a).unwrap();
        assert_eq!(e.factor_degrees, vec![3, 2]);
        assert_eq!(e.largest_factor_degree, 3);
        assert_eq!(e.splitting_degree, 6);
        assert_eq!(e.values.len(), 5);
        let lifted = a.lift(&e.field).unwrap();
        let lambda = Matrix::diagonal(&e.field, &e.values.iter().map(FieldElem::index).collect::<Vec<_>>());
        assert_eq!(lifted.mul(&e.vectors).unwrap(), e.vectors.mul(&lambda).unwrap());
        assert_eq!(e.vectors.rank(), 5);
    }
}
