//! Exact arithmetic in `F_p` and `F_{p^m}`, polynomials over them, and
//! irreducible-polynomial counting.

pub mod counting;
pub mod field;
pub mod notation;
pub mod poly;

pub use counting::{count_irreducible, mobius};
pub use field::{is_prime, Field, FieldElem, FieldSpec};
pub use poly::{
    enumerate_irreducible, factor_poly, is_irreducible, minimal_degree, minimal_polynomial, Poly,
};

use crate::error::{Error, Result};

/// Builds `F_{p^m}`, optionally from an explicit monic prime-field polynomial.
pub fn make_field(p: u32, m: usize, pi: Option<&Poly>) -> Result<Field> {
    match pi {
        None => Field::new(p, m, None),
        Some(poly) => {
            if poly.field().p() != p || poly.field().m() != 1 {
                return Err(Error::FieldMismatch);
            }
            Field::new(p, m, Some(poly.coeffs()))
        }
    }
}
