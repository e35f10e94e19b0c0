use crate::error::{Error, Result};
use crate::gf::FieldElem;
use crate::matrix::{phi, psi, Matrix};

use super::channel::{check_feasible, compute_gammas, TwoHopChannel};

/// Ground-field precoders for both hops together with the cross ratios and
/// inverse second-hop blocks they were built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecoderSet {
    pub v1: Matrix,
    pub v2: Matrix,
    pub v3: Matrix,
    pub v4: Matrix,
    pub gamma: FieldElem,
    pub gamma_prime: FieldElem,
    /// `[s11, s12, s21, s22]`.
    pub s: [FieldElem; 4],
}

/// `(V_a, V_b)` with `V_a = [psi(g^l) phi(1)]_{l < m}` and
/// `v_{b,l} = psi(lead) psi(g^{l-1}) phi(1)` for `l = 1..m-1`.
///
/// Built unconditionally, so when `g` has a short minimal polynomial the rank
/// deficit of `V_a` can be inspected.
pub fn alignment_precoders(g: &FieldElem, lead: &FieldElem) -> (Matrix, Matrix) {
    let field = g.field();
    let ground = field.ground();
    let m = field.m();
    let v11 = phi(&field.one());
    let lead = psi(lead);
    let mut va = Vec::with_capacity(m);
    let mut vb = Vec::with_capacity(m.saturating_sub(1));
    let mut power = field.one();
    for l in 0..m {
        let col = psi(&power).mul(&v11).expect("m x m times m x 1");
        if l + 1 < m {
            vb.push(lead.mul(&col).expect("m x m times m x 1"));
        }
        va.push(col);
        power = &power * g;
    }
    let stack = |cols: &[Matrix]| {
        if cols.is_empty() {
            Matrix::zeros(&ground, m, 0)
        } else {
            let refs: Vec<&Matrix> = cols.iter().collect();
            Matrix::hstack(&refs).expect("equal heights")
        }
    };
    (stack(&va), stack(&vb))
}

/// First-hop precoder `V1` for any channel, feasible or not.
pub fn first_hop_v1(ch: &TwoHopChannel) -> Matrix {
    let q = ch.first_hop();
    let gamma = super::channel::compute_gamma(ch);
    alignment_precoders(&gamma, &(&q[2] / &q[3])).0
}

impl PrecoderSet {
    /// Checks `A v_{a,l+1} = B v_{b,l}` and `C v_{a,l} = D v_{b,l}` for
    /// `l = 1..m-1` on both hops: `(A, B, C, D)` is `(q11, q12, q21, q22)`
    /// on the first hop and `(s11, s12, s21, s22)` on the second.
    pub fn verify_alignment(&self, ch: &TwoHopChannel) -> bool {
        let q = ch.first_hop();
        aligned(&self.v1, &self.v2, q) && aligned(&self.v3, &self.v4, &self.s)
    }
}

fn aligned(va: &Matrix, vb: &Matrix, h: &[FieldElem; 4]) -> bool {
    let [a, b, c, d] = h.each_ref().map(psi);
    (0..vb.cols()).all(|l| {
        let vb_l = vb.column(l);
        let lhs1 = a.mul(&va.column(l + 1)).unwrap();
        let rhs1 = b.mul(&vb_l).unwrap();
        let lhs2 = c.mul(&va.column(l)).unwrap();
        let rhs2 = d.mul(&vb_l).unwrap();
        lhs1 == rhs1 && lhs2 == rhs2
    })
}

/// Builds the precoders of a feasible channel; `Infeasible` otherwise.
///
/// # Panics
/// If `V1` or `V3` comes out rank deficient or alignment fails, which a
/// feasible channel rules out.
pub fn build_precoders(ch: &TwoHopChannel) -> Result<PrecoderSet> {
    let verdict = check_feasible(ch);
    if !verdict.feasible {
        return Err(Error::Infeasible(verdict.reasons.join("; ")));
    }
    let g = compute_gammas(ch)?;
    let q = ch.first_hop();
    let m = ch.field().m();
    let (v1, v2) = alignment_precoders(&g.gamma, &(&q[2] / &q[3]));
    let (v3, v4) = alignment_precoders(&g.gamma_prime, &(&g.s[2] / &g.s[3]));
    assert_eq!(v1.rank(), m, "V1 rank deficient on a feasible channel");
    assert_eq!(v3.rank(), m, "V3 rank deficient on a feasible channel");
    let set = PrecoderSet {
        v1,
        v2,
        v3,
        v4,
        gamma: g.gamma,
        gamma_prime: g.gamma_prime,
        s: g.s,
    };
    assert!(set.verify_alignment(ch), "alignment conditions violated");
    Ok(set)
}
