use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{minimal_degree, Field, FieldElem};

/// Scalar 2x2x2 channel over `F_{p^m}`: first hop `[[q11, q12], [q21, q22]]`
/// from the sources to the relays, second hop `[[q33, q34], [q43, q44]]` from
/// the relays to the destinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHopChannel {
    field: Field,
    first: [FieldElem; 4],
    second: [FieldElem; 4],
}

fn det2(h: &[FieldElem; 4]) -> FieldElem {
    &(&h[0] * &h[3]) - &(&h[1] * &h[2])
}

impl TwoHopChannel {
    /// Coefficients row-major: `first = [q11, q12, q21, q22]`,
    /// `second = [q33, q34, q43, q44]`. All must be nonzero and each hop
    /// matrix invertible.
    pub fn new(field: &Field, first: [FieldElem; 4], second: [FieldElem; 4]) -> Result<Self> {
        const NAMES: [&str; 8] = ["q11", "q12", "q21", "q22", "q33", "q34", "q43", "q44"];
        for (name, q) in NAMES.iter().zip(first.iter().chain(second.iter())) {
            if q.field() != field {
                return Err(Error::FieldMismatch);
            }
            if q.is_zero() {
                return Err(Error::InvalidChannel(format!("{name} is zero")));
            }
        }
        if det2(&first).is_zero() {
            return Err(Error::SingularChannel("first-hop matrix is singular".into()));
        }
        if det2(&second).is_zero() {
            return Err(Error::SingularChannel("second-hop matrix is singular".into()));
        }
        Ok(TwoHopChannel { field: field.clone(), first, second })
    }

    /// From packed element indices, same ordering as [`TwoHopChannel::new`].
    pub fn from_indices(field: &Field, first: [u32; 4], second: [u32; 4]) -> Result<Self> {
        let conv = |a: [u32; 4]| -> Result<[FieldElem; 4]> {
            if a.iter().any(|&v| v >= field.order()) {
                return Err(Error::InvalidChannel("coefficient index out of range".into()));
            }
            Ok(a.map(|v| field.elem(v)))
        };
        TwoHopChannel::new(field, conv(first)?, conv(second)?)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `[q11, q12, q21, q22]`.
    pub fn first_hop(&self) -> &[FieldElem; 4] {
        &self.first
    }

    /// `[q33, q34, q43, q44]`.
    pub fn second_hop(&self) -> &[FieldElem; 4] {
        &self.second
    }

    /// Relay observations `(Y1, Y2)` for source inputs `(X1, X2)`.
    pub fn transmit_first(&self, x1: &FieldElem, x2: &FieldElem) -> (FieldElem, FieldElem) {
        let q = &self.first;
        (&(&q[0] * x1) + &(&q[1] * x2), &(&q[2] * x1) + &(&q[3] * x2))
    }

    /// Destination observations `(Y3, Y4)` for relay inputs `(X3, X4)`.
    pub fn transmit_second(&self, x3: &FieldElem, x4: &FieldElem) -> (FieldElem, FieldElem) {
        let q = &self.second;
        (&(&q[0] * x3) + &(&q[1] * x4), &(&q[2] * x3) + &(&q[3] * x4))
    }
}

/// Cross ratios of both hops and the inverse second-hop blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gammas {
    /// `q11^-1 q12 q22^-1 q21`.
    pub gamma: FieldElem,
    /// `s11^-1 s12 s22^-1 s21`.
    pub gamma_prime: FieldElem,
    /// `[s11, s12, s21, s22]`, the inverse of the second-hop matrix.
    pub s: [FieldElem; 4],
}

/// Inverse of a 2x2 matrix given row-major.
pub fn inverse2(h: &[FieldElem; 4]) -> Result<[FieldElem; 4]> {
    let d = det2(h).inv().map_err(|_| Error::Singular)?;
    Ok([&h[3] * &d, -(&h[1] * &d), -(&h[2] * &d), &h[0] * &d])
}

/// `a^-1 b c^-1 d`; all four must be nonzero.
fn cross_ratio(a: &FieldElem, b: &FieldElem, c: &FieldElem, d: &FieldElem) -> FieldElem {
    &(&(b * d) / a) / c
}

pub fn compute_gamma(ch: &TwoHopChannel) -> FieldElem {
    let q = &ch.first;
    cross_ratio(&q[0], &q[1], &q[3], &q[2])
}

pub fn compute_gammas(ch: &TwoHopChannel) -> Result<Gammas> {
    let gamma = compute_gamma(ch);
    let s = inverse2(&ch.second)?;
    const NAMES: [&str; 4] = ["11", "12", "21", "22"];
    if let Some(i) = s.iter().position(FieldElem::is_zero) {
        return Err(Error::ZeroSBlock(NAMES[i]));
    }
    let gamma_prime = cross_ratio(&s[0], &s[1], &s[3], &s[2]);
    Ok(Gammas { gamma, gamma_prime, s })
}

/// Feasibility verdict for the rate `(2m - 1) log p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub feasible: bool,
    pub gamma_degree: usize,
    /// `None` when an inverse second-hop block is zero.
    pub gamma_prime_degree: Option<usize>,
    pub reasons: Vec<String>,
}

/// Feasible iff both cross ratios have minimal polynomials of degree `m`.
pub fn check_feasible(ch: &TwoHopChannel) -> Verdict {
    let m = ch.field.m();
    let gamma_degree = minimal_degree(&compute_gamma(ch));
    let mut reasons = Vec::new();
    if gamma_degree != m {
        reasons.push(format!("deg mu(gamma) = {gamma_degree} < m = {m}"));
    }
    let gamma_prime_degree = match compute_gammas(ch) {
        Ok(g) => {
            let d = minimal_degree(&g.gamma_prime);
            if d != m {
                reasons.push(format!("deg mu(gamma') = {d} < m = {m}"));
            }
            Some(d)
        }
        Err(e) => {
            reasons.push(format!("gamma' undefined: {e}"));
            None
        }
    };
    Verdict {
        feasible: reasons.is_empty(),
        gamma_degree,
        gamma_prime_degree,
        reasons,
    }
}
