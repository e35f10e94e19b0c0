//! Aligned network diagonalization for the 2x2x2 MIMO channel over `F_p`.
//!
//! The cross products `Q = Q11^-1 Q12 Q22^-1 Q21` (first hop) and
//! `Q' = S11^-1 S12 S22^-1 S21` (inverse of the second hop) are diagonalized
//! over a common extension `F_{p^L}`. Symbols of `F_{p^L}` travel over the
//! ground-field channel in `L` slots, one coefficient per slot.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::matrix::eigen::{eigen_in, lcm, spectrum_degrees, Eigen};
use crate::matrix::{char_poly, phi_t, phi_t_inv, Matrix};

pub use crate::report::simulate_symbol_ext;

/// Eight `m x m` matrices over `F_p`, row-major per hop:
/// `[Q11, Q12, Q21, Q22]` and `[Q33, Q34, Q43, Q44]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MimoChannel {
    field: Field,
    m: usize,
    first: [Matrix; 4],
    second: [Matrix; 4],
}

fn compound(h: &[Matrix; 4]) -> Matrix {
    let top = Matrix::hstack(&[&h[0], &h[1]]).expect("equal heights");
    let bottom = Matrix::hstack(&[&h[2], &h[3]]).expect("equal heights");
    Matrix::vstack(&[&top, &bottom]).expect("equal widths")
}

fn blocks(a: &Matrix, m: usize) -> [Matrix; 4] {
    [a.block(0, 0, m, m), a.block(0, m, m, m), a.block(m, 0, m, m), a.block(m, m, m, m)]
}

impl MimoChannel {
    /// All eight matrices must be square, of one size, over one prime field,
    /// and invertible; so must both compound `2m x 2m` hop matrices.
    pub fn new(first: [Matrix; 4], second: [Matrix; 4]) -> Result<Self> {
        const NAMES: [&str; 8] = ["Q11", "Q12", "Q21", "Q22", "Q33", "Q34", "Q43", "Q44"];
        let field = first[0].field().clone();
        if field.m() != 1 {
            return Err(Error::FieldMismatch);
        }
        let m = first[0].rows();
        if m == 0 {
            return Err(Error::DimensionMismatch("empty channel matrices".into()));
        }
        for (name, q) in NAMES.iter().zip(first.iter().chain(second.iter())) {
            if *q.field() != field {
                return Err(Error::FieldMismatch);
            }
            if q.shape() != (m, m) {
                return Err(Error::DimensionMismatch(format!("{name} is not {m}x{m}")));
            }
            if q.rank() < m {
                return Err(Error::SingularChannel(format!("{name} is singular")));
            }
        }
        if compound(&first).rank() < 2 * m {
            return Err(Error::SingularChannel("first-hop compound matrix is singular".into()));
        }
        if compound(&second).rank() < 2 * m {
            return Err(Error::SingularChannel("second-hop compound matrix is singular".into()));
        }
        Ok(MimoChannel { field, m, first, second })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn first_hop(&self) -> &[Matrix; 4] {
        &self.first
    }

    pub fn second_hop(&self) -> &[Matrix; 4] {
        &self.second
    }

    /// Blocks `[S11, S12, S21, S22]` of the inverse second-hop compound matrix.
    pub fn s_blocks(&self) -> [Matrix; 4] {
        let s = compound(&self.second).inv().expect("validated at construction");
        blocks(&s, self.m)
    }

    /// Rejection-samples uniform matrices until the channel is valid and all
    /// four `S` blocks are invertible.
    pub fn random<R: Rng + ?Sized>(p: u32, m: usize, rng: &mut R) -> Result<Self> {
        let f = Field::prime(p)?;
        // every block must be invertible, so condition each block on its own
        // before rejecting on the joint conditions
        let draw = |rng: &mut R| loop {
            let data: Vec<Vec<u32>> =
                (0..m).map(|_| (0..m).map(|_| rng.gen_range(0..p)).collect()).collect();
            let b = Matrix::from_values(&f, &data).expect("in range");
            if b.rank() == m {
                break b;
            }
        };
        for _ in 0..100_000 {
            let first = [draw(rng), draw(rng), draw(rng), draw(rng)];
            let second = [draw(rng), draw(rng), draw(rng), draw(rng)];
            let Ok(ch) = MimoChannel::new(first, second) else { continue };
            if ch.s_blocks().iter().all(|b| b.rank() == m) {
                return Ok(ch);
            }
        }
        Err(Error::SingularChannel(format!("no valid {m}x{m} channel over F_{p} found")))
    }
}

/// `h0^-1 h1 h3^-1 h2` for row-major blocks `[h0, h1, h2, h3]`.
fn cross_product(h: &[Matrix; 4]) -> Result<Matrix> {
    let a = h[0].inv()?;
    let c = h[3].inv()?;
    a.mul(&h[1])?.mul(&c)?.mul(&h[2])
}

/// Diagonalization data for both hops over one common extension field.
#[derive(Debug, Clone)]
pub struct ExtensionPlan {
    /// `Q11^-1 Q12 Q22^-1 Q21` over `F_p`.
    pub q: Matrix,
    /// `S11^-1 S12 S22^-1 S21` over `F_p`.
    pub q_prime: Matrix,
    /// `[S11, S12, S21, S22]` over `F_p`.
    pub s: [Matrix; 4],
    pub hop1: Eigen,
    pub hop2: Eigen,
    /// Common extension degree, lcm of every factor degree on both hops.
    pub l: usize,
    pub ext: Field,
}

impl ExtensionPlan {
    /// Degree of the largest irreducible factor per hop.
    pub fn largest_factor_degrees(&self) -> (usize, usize) {
        (self.hop1.largest_factor_degree, self.hop2.largest_factor_degree)
    }
}

pub fn plan_extension(ch: &MimoChannel) -> Result<ExtensionPlan> {
    let s = ch.s_blocks();
    for (name, b) in ["S11", "S12", "S21", "S22"].iter().zip(&s) {
        if b.rank() < ch.m {
            return Err(Error::SingularChannel(format!("{name} is singular")));
        }
    }
    let q = cross_product(&ch.first)?;
    let q_prime = cross_product(&s)?;
    let d1 = spectrum_degrees(&char_poly(&q)?)?;
    let d2 = spectrum_degrees(&char_poly(&q_prime)?)?;
    let l = d1.iter().chain(&d2).copied().fold(1, lcm);
    let ext = Field::new(ch.field.p(), l, None)?;
    let hop1 = eigen_in(&q, &ext)?;
    let hop2 = eigen_in(&q_prime, &ext)?;
    Ok(ExtensionPlan { q, q_prime, s, hop1, hop2, l, ext })
}

/// `prod_{i<j} (l_j - l_i)`.
pub fn vandermonde(values: &[FieldElem], field: &Field) -> FieldElem {
    let mut acc = field.one();
    for j in 0..values.len() {
        for i in 0..j {
            acc = &acc * &(&values[j] - &values[i]);
        }
    }
    acc
}

/// Precoders over `F_{p^L}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MimoPrecoders {
    pub v1: Matrix,
    pub v2: Matrix,
    pub v3: Matrix,
    pub v4: Matrix,
    pub det_v1: FieldElem,
    pub det_v3: FieldElem,
}

/// `(V_a, V_b)`: `v_{a,1} = E 1`, `v_{a,l+1} = P v_{a,l}`,
/// `v_{b,l} = lead v_{a,l}` for `l = 1..m-1`.
fn krylov_precoders(p: &Matrix, e: &Matrix, lead: &Matrix) -> Result<(Matrix, Matrix)> {
    let n = p.rows();
    let ext = p.field();
    let ones = Matrix::column_vector(ext, &vec![1; n])?;
    let mut col = e.mul(&ones)?;
    let mut va = Vec::with_capacity(n);
    let mut vb = Vec::with_capacity(n - 1);
    for l in 0..n {
        if l + 1 < n {
            vb.push(lead.mul(&col)?);
        }
        let next = p.mul(&col)?;
        va.push(std::mem::replace(&mut col, next));
    }
    let stack = |cols: &[Matrix]| -> Result<Matrix> {
        if cols.is_empty() {
            return Ok(Matrix::zeros(ext, n, 0));
        }
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())
    };
    Ok((stack(&va)?, stack(&vb)?))
}

fn aligned(va: &Matrix, vb: &Matrix, h: &[Matrix; 4]) -> bool {
    (0..vb.cols()).all(|l| {
        let b = vb.column(l);
        h[0].mul(&va.column(l + 1)).unwrap() == h[1].mul(&b).unwrap()
            && h[2].mul(&va.column(l)).unwrap() == h[3].mul(&b).unwrap()
    })
}

fn lift4(h: &[Matrix; 4], ext: &Field) -> Result<[Matrix; 4]> {
    Ok([h[0].lift(ext)?, h[1].lift(ext)?, h[2].lift(ext)?, h[3].lift(ext)?])
}

/// # Panics
/// If `det(V) != det(E) * vandermonde(lambda)` or alignment fails on either
/// hop; both are ruled out by distinct eigenvalues.
pub fn build_mimo_precoders(ch: &MimoChannel, plan: &ExtensionPlan) -> Result<MimoPrecoders> {
    let ext = &plan.ext;
    let h1 = lift4(&ch.first, ext)?;
    let s = lift4(&plan.s, ext)?;
    let lead1 = h1[3].inv()?.mul(&h1[2])?;
    let lead2 = s[3].inv()?.mul(&s[2])?;
    let (v1, v2) = krylov_precoders(&plan.q.lift(ext)?, &plan.hop1.vectors, &lead1)?;
    let (v3, v4) = krylov_precoders(&plan.q_prime.lift(ext)?, &plan.hop2.vectors, &lead2)?;
    let det_v1 = v1.det()?;
    let det_v3 = v3.det()?;
    let expect1 = &plan.hop1.vectors.det()? * &vandermonde(&plan.hop1.values, ext);
    let expect3 = &plan.hop2.vectors.det()? * &vandermonde(&plan.hop2.values, ext);
    assert_eq!(det_v1, expect1, "det(V1) differs from det(E) * vandermonde");
    assert_eq!(det_v3, expect3, "det(V3) differs from det(E') * vandermonde");
    assert!(!det_v1.is_zero() && !det_v3.is_zero(), "rank failure with distinct eigenvalues");
    assert!(aligned(&v1, &v2, &h1), "first-hop alignment violated");
    assert!(aligned(&v3, &v4, &s), "second-hop alignment violated");
    Ok(MimoPrecoders { v1, v2, v3, v4, det_v1, det_v3 })
}

/// Sends extension-field columns `a`, `b` through a ground-field hop slot by
/// slot: slot `t` carries coefficient `t` of every entry.
pub fn transport(h: &[Matrix; 4], a: &Matrix, b: &Matrix) -> Result<(Matrix, Matrix)> {
    let ext = a.field().clone();
    let sa = phi_t(a)?;
    let sb = phi_t(b)?;
    let y1 = h[0].mul(&sa)?.add(&h[1].mul(&sb)?)?;
    let y2 = h[2].mul(&sa)?.add(&h[3].mul(&sb)?)?;
    Ok((phi_t_inv(&ext, &y1)?, phi_t_inv(&ext, &y2)?))
}

/// Messages over `F_{p^L}` as packed element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MimoMessage {
    pub w1: Vec<u32>,
    pub w2: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MimoTrace {
    pub u1: Vec<u32>,
    pub u2: Vec<u32>,
    pub decoded: MimoMessage,
}

/// A planned MIMO channel with decoding matrices precomputed.
#[derive(Debug, Clone)]
pub struct MimoScheme {
    channel: MimoChannel,
    plan: ExtensionPlan,
    pre: MimoPrecoders,
    relay_decoders: [Matrix; 2],
    relay_encoders: [Matrix; 2],
    v3_inv: Matrix,
}

impl MimoScheme {
    pub fn new(channel: &MimoChannel) -> Result<Self> {
        let plan = plan_extension(channel)?;
        let pre = build_mimo_precoders(channel, &plan)?;
        let ext = &plan.ext;
        let h1 = lift4(&channel.first, ext)?;
        let s = lift4(&plan.s, ext)?;
        let relay_decoders = [h1[0].mul(&pre.v1)?.inv()?, h1[2].mul(&pre.v1)?.inv()?];
        let relay_encoders = [s[0].mul(&pre.v3)?, s[2].mul(&pre.v3)?];
        let v3_inv = pre.v3.inv()?;
        Ok(MimoScheme {
            channel: channel.clone(),
            plan,
            pre,
            relay_decoders,
            relay_encoders,
            v3_inv,
        })
    }

    pub fn plan(&self) -> &ExtensionPlan {
        &self.plan
    }

    pub fn precoders(&self) -> &MimoPrecoders {
        &self.pre
    }

    pub fn channel(&self) -> &MimoChannel {
        &self.channel
    }

    pub fn ext(&self) -> &Field {
        &self.plan.ext
    }

    pub fn validate(&self, msg: &MimoMessage) -> Result<()> {
        let m = self.channel.m;
        let q = self.ext().order();
        if msg.w1.len() != m || msg.w2.len() != m - 1 {
            return Err(Error::InvalidMessage(format!("expected lengths ({m}, {})", m - 1)));
        }
        if msg.w1.iter().chain(&msg.w2).any(|&v| v >= q) {
            return Err(Error::InvalidMessage(format!("symbol not below {q}")));
        }
        Ok(())
    }

    pub fn transmit(&self, msg: &MimoMessage) -> Result<MimoTrace> {
        self.validate(msg)?;
        let ext = self.ext();
        let col = |v: Vec<u32>| Matrix::column_vector(ext, &v);
        let x1 = col(self.pre.v1.apply(&msg.w1))?;
        let x2 = col(self.pre.v2.apply(&msg.w2))?;
        let (y1, y2) = transport(&self.channel.first, &x1, &x2)?;
        let u1 = self.relay_decoders[0].apply(&y1.column_values(0));
        let u2 = self.relay_decoders[1].apply(&y2.column_values(0));
        let x3 = col(self.relay_encoders[0].apply(&u1))?;
        let x4 = col(self.relay_encoders[1].apply(&u2))?;
        let (y3, y4) = transport(&self.channel.second, &x3, &x4)?;
        let w1 = self.v3_inv.apply(&y3.column_values(0));
        let w2 = if self.pre.v4.cols() == 0 {
            Vec::new()
        } else {
            self.pre.v4.solve_consistent(&y4)?.column_values(0)
        };
        Ok(MimoTrace { u1, u2, decoded: MimoMessage { w1, w2 } })
    }

    /// `(2m - 1) log2 p` bits per slot.
    pub fn throughput_bits_per_slot(&self) -> f64 {
        (2 * self.channel.m - 1) as f64 * (self.channel.field.p() as f64).log2()
    }
}

/// Message tuples over `F_{p^L}^m x F_{p^L}^(m-1)`: all of them when there are
/// at most `limit`, otherwise `samples` draws from `rng`.
pub fn message_set<R: Rng + ?Sized>(
    q: u32,
    m: usize,
    limit: u64,
    samples: usize,
    rng: &mut R,
) -> Vec<MimoMessage> {
    let n = 2 * m - 1;
    let total = (q as f64).powi(n as i32);
    if total <= limit as f64 {
        crate::scheme::MessagePair::enumerate(q, m)
            .map(|p| MimoMessage { w1: p.w1, w2: p.w2 })
            .collect()
    } else {
        (0..samples)
            .map(|_| MimoMessage {
                w1: (0..m).map(|_| rng.gen_range(0..q)).collect(),
                w2: (0..m - 1).map(|_| rng.gen_range(0..q)).collect(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gm(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_values(f, &rows).unwrap()
    }

    #[test]
    fn scalar_mimo_plan() {
        let f = Field::prime(3).unwrap();
        let s = |v: u32| gm(&f, &[&[v]]);
        let ch = MimoChannel::new([s(1), s(1), s(1), s(2)], [s(2), s(1), s(1), s(1)]).unwrap();
        let plan = plan_extension(&ch).unwrap();
        assert_eq!(plan.l, 1);
        let scheme = MimoScheme::new(&ch).unwrap();
        assert_eq!(scheme.precoders().v1.shape(), (1, 1));
        assert_eq!(scheme.precoders().v2.shape(), (1, 0));
        for w in 0..3 {
            let msg = MimoMessage { w1: vec![w], w2: vec![] };
            assert_eq!(scheme.transmit(&msg).unwrap().decoded, msg);
        }
    }

    #[test]
    fn scalar_product_is_degenerate() {
        // Q = I exactly forces a singular compound hop, so use Q = 2I over F_3
        let f = Field::prime(3).unwrap();
        let i = Matrix::identity(&f, 2);
        let two = i.scale(&f.elem(2)).unwrap();
        let hop = [i.clone(), i.clone(), two, i.clone()];
        let ch = MimoChannel::new(hop.clone(), hop).unwrap();
        assert!(matches!(plan_extension(&ch), Err(Error::DegenerateSpectrum)));
    }

    #[test]
    fn random_channels_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut planned = 0;
        for _ in 0..20 {
            let ch = MimoChannel::random(2, 2, &mut rng).unwrap();
            let Ok(scheme) = MimoScheme::new(&ch) else { continue };
            planned += 1;
            let q = scheme.ext().order();
            for msg in message_set(q, 2, 1 << 16, 0, &mut rng) {
                assert_eq!(scheme.transmit(&msg).unwrap().decoded, msg);
            }
        }
        assert!(planned > 0);
    }

    #[test]
    fn transport_matches_extension_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = Field::prime(2).unwrap();
        let ext = Field::new(2, 3, None).unwrap();
        let ch = MimoChannel::random(2, 2, &mut rng).unwrap();
        let h = ch.first_hop();
        let a = Matrix::column_vector(&ext, &[3, 5]).unwrap();
        let b = Matrix::column_vector(&ext, &[7, 1]).unwrap();
        let (y1, _) = transport(h, &a, &b).unwrap();
        let direct = h[0].lift(&ext).unwrap().mul(&a).unwrap()
            .add(&h[1].lift(&ext).unwrap().mul(&b).unwrap()).unwrap();
        assert_eq!(y1, direct);
        assert_eq!(*h[0].field(), f);
    }
}
