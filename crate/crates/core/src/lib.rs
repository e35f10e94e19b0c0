//! Aligned network diagonalization for two-hop interference channels over
//! finite fields.
//!
//! * [`gf`]: arithmetic in `F_p` / `F_{p^m}`, polynomials, minimal polynomials.
//! * [`matrix`]: dense linear algebra over any field context, the vector and
//!   matrix representations of extension-field elements, eigen-decomposition
//!   over splitting fields.
//! * [`scheme`]: the scalar 2x2x2 scheme over `F_{p^m}`.
//! * [`feasibility`]: exact and Monte Carlo feasibility statistics.
//! * [`symbol_ext`]: the MIMO scheme over `F_p` via symbol extension.
//! * [`report`] and [`io`]: serializable reports and channel files.

pub mod error;
pub mod feasibility;
pub mod gf;
pub mod io;
pub mod matrix;
pub mod report;
pub mod scheme;
pub mod symbol_ext;

pub use error::{Error, Result};
pub use gf::{make_field, Field, FieldElem, FieldSpec, Poly};
pub use matrix::Matrix;
