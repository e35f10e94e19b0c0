use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::matrix::{phi, psi, Matrix};

use super::channel::TwoHopChannel;
use super::precoder::{build_precoders, PrecoderSet};

/// `w1` carries `m` ground-field symbols, `w2` carries `m - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MessagePair {
    pub w1: Vec<u32>,
    pub w2: Vec<u32>,
}

impl MessagePair {
    pub fn new(field: &Field, w1: Vec<u32>, w2: Vec<u32>) -> Result<Self> {
        let msg = MessagePair { w1, w2 };
        msg.validate(field.p(), field.m())?;
        Ok(msg)
    }

    pub fn zero(m: usize) -> Self {
        MessagePair { w1: vec![0; m], w2: vec![0; m.saturating_sub(1)] }
    }

    pub fn validate(&self, p: u32, m: usize) -> Result<()> {
        if self.w1.len() != m || self.w2.len() != m.saturating_sub(1) {
            return Err(Error::InvalidMessage(format!(
                "expected lengths ({m}, {}), got ({}, {})",
                m.saturating_sub(1),
                self.w1.len(),
                self.w2.len()
            )));
        }
        if let Some(v) = self.w1.iter().chain(&self.w2).find(|&&v| v >= p) {
            return Err(Error::InvalidMessage(format!("symbol {v} not below {p}")));
        }
        Ok(())
    }

    /// Every message tuple over `F_q^m x F_q^(m-1)`, the last `w2` symbol
    /// varying fastest.
    pub fn enumerate(q: u32, m: usize) -> impl Iterator<Item = MessagePair> {
        let n1 = m;
        let n = 2 * m - 1;
        let total = (q as u64).pow(n as u32);
        (0..total).map(move |mut k| {
            let mut digits = vec![0u32; n];
            for d in digits.iter_mut().rev() {
                *d = (k % q as u64) as u32;
                k /= q as u64;
            }
            let w2 = digits.split_off(n1);
            MessagePair { w1: digits, w2 }
        })
    }
}

/// Aligned combinations decoded at the two relays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelayEquations {
    pub u1: Vec<u32>,
    pub u2: Vec<u32>,
}

impl RelayEquations {
    /// `u1 = w1 + (0, w2)` and `u2 = w1 + (w2, 0)` over `F_p`.
    pub fn expected(field: &Field, msg: &MessagePair) -> Self {
        let f = field;
        let m = msg.w1.len();
        let mut u1 = msg.w1.clone();
        let mut u2 = msg.w1.clone();
        for (i, &w) in msg.w2.iter().enumerate() {
            u1[i + 1] = f.add_raw(u1[i + 1], w);
            u2[i] = f.add_raw(u2[i], w);
        }
        debug_assert_eq!(u1.len(), m);
        RelayEquations { u1, u2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relay {
    One,
    Two,
}

/// Every intermediate signal of one transmission.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub x1: FieldElem,
    pub x2: FieldElem,
    pub y1: FieldElem,
    pub y2: FieldElem,
    pub relay: RelayEquations,
    pub x3: FieldElem,
    pub x4: FieldElem,
    pub y3: FieldElem,
    pub y4: FieldElem,
    pub decoded: MessagePair,
}

/// The two-hop scheme for one feasible channel, with the decoding and
/// re-encoding matrices precomputed.
#[derive(Debug, Clone)]
pub struct AndScheme {
    channel: TwoHopChannel,
    pre: PrecoderSet,
    relay_decoders: [Matrix; 2],
    relay_encoders: [Matrix; 2],
    v3_inv: Matrix,
}

impl AndScheme {
    pub fn new(channel: &TwoHopChannel) -> Result<Self> {
        let pre = build_precoders(channel)?;
        let q = channel.first_hop();
        let dec = |qr1: &FieldElem| psi(qr1).mul(&pre.v1).and_then(|a| a.inv());
        let relay_decoders = [dec(&q[0])?, dec(&q[2])?];
        let relay_encoders = [psi(&pre.s[0]).mul(&pre.v3)?, psi(&pre.s[2]).mul(&pre.v3)?];
        let v3_inv = pre.v3.inv()?;
        Ok(AndScheme {
            channel: channel.clone(),
            pre,
            relay_decoders,
            relay_encoders,
            v3_inv,
        })
    }

    pub fn channel(&self) -> &TwoHopChannel {
        &self.channel
    }

    pub fn precoders(&self) -> &PrecoderSet {
        &self.pre
    }

    fn field(&self) -> &Field {
        self.channel.field()
    }

    fn to_elem(&self, v: &[u32]) -> FieldElem {
        self.field().from_coeffs(v).expect("ground-field column")
    }

    /// `X_k = phi^-1(V_k w_k)`.
    pub fn source_encode(&self, msg: &MessagePair) -> Result<(FieldElem, FieldElem)> {
        msg.validate(self.field().p(), self.field().m())?;
        let x1 = self.pre.v1.apply(&msg.w1);
        let x2 = self.pre.v2.apply(&msg.w2);
        Ok((self.to_elem(&x1), self.to_elem(&x2)))
    }

    /// Solves `Q_{r1} V1 u = phi(Y)` for relay `r`.
    pub fn relay_decode(&self, y: &FieldElem, relay: Relay) -> Vec<u32> {
        let d = match relay {
            Relay::One => &self.relay_decoders[0],
            Relay::Two => &self.relay_decoders[1],
        };
        d.apply(&y.coeffs())
    }

    /// `X_{2+r} = phi^-1(S_{r1} V3 u)`.
    pub fn relay_encode(&self, u: &[u32], relay: Relay) -> FieldElem {
        let e = match relay {
            Relay::One => &self.relay_encoders[0],
            Relay::Two => &self.relay_encoders[1],
        };
        self.to_elem(&e.apply(u))
    }

    /// `w1 = V3^-1 phi(Y3)`; `w2` from the tall system `V4 w2 = phi(Y4)`.
    pub fn destination_decode(&self, y3: &FieldElem, y4: &FieldElem) -> Result<MessagePair> {
        let w1 = self.v3_inv.apply(&y3.coeffs());
        let w2 = if self.pre.v4.cols() == 0 {
            Vec::new()
        } else {
            self.pre.v4.solve_consistent(&phi(y4))?.column_values(0)
        };
        Ok(MessagePair { w1, w2 })
    }

    pub fn transmit(&self, msg: &MessagePair) -> Result<Trace> {
        let (x1, x2) = self.source_encode(msg)?;
        let (y1, y2) = self.channel.transmit_first(&x1, &x2);
        let u1 = self.relay_decode(&y1, Relay::One);
        let u2 = self.relay_decode(&y2, Relay::Two);
        let x3 = self.relay_encode(&u1, Relay::One);
        let x4 = self.relay_encode(&u2, Relay::Two);
        let (y3, y4) = self.channel.transmit_second(&x3, &x4);
        let decoded = self.destination_decode(&y3, &y4)?;
        Ok(Trace {
            x1,
            x2,
            y1,
            y2,
            relay: RelayEquations { u1, u2 },
            x3,
            x4,
            y3,
            y4,
            decoded,
        })
    }

    /// `(2m - 1) log2 p` bits per channel use.
    pub fn sum_rate_bits(&self) -> f64 {
        sum_rate_bits(self.field().p(), self.field().m())
    }
}

pub fn sum_rate_bits(p: u32, m: usize) -> f64 {
    (2 * m - 1) as f64 * (p as f64).log2()
}

/// Round-trips every message tuple; returns `(successes, total)`.
pub fn exhaust_messages(scheme: &AndScheme) -> (u64, u64) {
    let f = scheme.field();
    let mut ok = 0;
    let mut total = 0;
    for msg in MessagePair::enumerate(f.p(), f.m()) {
        total += 1;
        if matches!(scheme.transmit(&msg), Ok(t) if t.decoded == msg) {
            ok += 1;
        }
    }
    (ok, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2, None).unwrap()
    }

    fn f4_channel() -> TwoHopChannel {
        let f = f4();
        TwoHopChannel::from_indices(&f, [1, 2, 1, 1], [1, 1, 1, 2]).unwrap()
    }

    #[test]
    fn enumerate_messages() {
        let all: Vec<_> = MessagePair::enumerate(2, 2).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[1], MessagePair { w1: vec![0, 0], w2: vec![1] });
        assert_eq!(MessagePair::enumerate(5, 1).count(), 5);
    }

    #[test]
    fn rejects_bad_messages() {
        let f = f4();
        assert!(MessagePair::new(&f, vec![0, 2], vec![0]).is_err());
        assert!(MessagePair::new(&f, vec![0], vec![0]).is_err());
        assert!(MessagePair::new(&f, vec![1, 0], vec![1]).is_ok());
    }

    #[test]
    fn encode_examples() {
        let s = AndScheme::new(&f4_channel()).unwrap();
        let (x1, x2) = s.source_encode(&MessagePair::zero(2)).unwrap();
        assert!(x1.is_zero() && x2.is_zero());
        let (x1, _) = s.source_encode(&MessagePair { w1: vec![1, 0], w2: vec![0] }).unwrap();
        assert!(x1.is_one());
    }

    #[test]
    fn f4_exhaustive_round_trip() {
        let ch = f4_channel();
        let f = ch.field().clone();
        let s = AndScheme::new(&ch).unwrap();
        for msg in MessagePair::enumerate(2, 2) {
            let t = s.transmit(&msg).unwrap();
            assert_eq!(t.relay, RelayEquations::expected(&f, &msg));
            assert_eq!(t.decoded, msg);
        }
        assert_eq!(exhaust_messages(&s), (8, 8));
        assert_eq!(s.sum_rate_bits(), 3.0);
    }

    #[test]
    fn scalar_relay_output() {
        let f = Field::prime(5).unwrap();
        let ch = TwoHopChannel::from_indices(&f, [1, 2, 3, 4], [2, 1, 1, 4]).unwrap();
        let s = AndScheme::new(&ch).unwrap();
        let pre = s.precoders();
        for u in 0..5 {
            let x = s.relay_encode(&[u], Relay::Two);
            assert_eq!(x, &pre.s[2] * &f.elem(u));
        }
        assert_eq!(exhaust_messages(&s), (5, 5));
    }
}
