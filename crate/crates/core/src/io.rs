//! Channel files.
//!
//! Scalar channel:
//! `{"p":2,"m":2,"pi":[1,1,1],"hop1":{"q11":"a^1",...},"hop2":{"q33":...}}`.
//! Elements may be written as `"a^k"`, a coefficient list, or a packed integer
//! index. MIMO channel: `{"p":2,"m":2,"hop1":{"q11":[[0,1],[1,1]],...},...}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::notation::{format_exp, parse_elem};
use crate::gf::{Field, FieldElem};
use crate::matrix::Matrix;
use crate::scheme::TwoHopChannel;
use crate::symbol_ext::MimoChannel;

/// A field element as written in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Int(u32),
    Coeffs(Vec<u32>),
    Text(String),
}

impl ElemRepr {
    /// Ground-field elements as integers, extension elements as `a^k`.
    pub fn of(x: &FieldElem) -> Self {
        if x.field().m() == 1 {
            ElemRepr::Int(x.index())
        } else {
            ElemRepr::Text(format_exp(x))
        }
    }

    pub fn to_elem(&self, field: &Field) -> Result<FieldElem> {
        match self {
            ElemRepr::Int(v) if *v < field.order() => Ok(field.elem(*v)),
            ElemRepr::Int(v) => Err(Error::Parse(format!("element index {v} out of range"))),
            ElemRepr::Coeffs(c) => field.from_coeffs(c),
            ElemRepr::Text(t) => parse_elem(field, t),
        }
    }
}

pub fn elems_repr(m: &Matrix) -> Vec<Vec<ElemRepr>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| ElemRepr::of(&m.get(i, j))).collect())
        .collect()
}

pub fn vector_repr(field: &Field, v: &[u32]) -> Vec<ElemRepr> {
    v.iter().map(|&x| ElemRepr::of(&field.elem(x))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarHop1 {
    pub q11: ElemRepr,
    pub q12: ElemRepr,
    pub q21: ElemRepr,
    pub q22: ElemRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarHop2 {
    pub q33: ElemRepr,
    pub q34: ElemRepr,
    pub q43: ElemRepr,
    pub q44: ElemRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelFile {
    pub p: u32,
    pub m: usize,
    /// Monic generating polynomial, low degree first; default when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<u32>>,
    pub hop1: ScalarHop1,
    pub hop2: ScalarHop2,
}

impl ChannelFile {
    pub fn from_channel(ch: &TwoHopChannel) -> Self {
        let [q11, q12, q21, q22] = ch.first_hop().each_ref().map(ElemRepr::of);
        let [q33, q34, q43, q44] = ch.second_hop().each_ref().map(ElemRepr::of);
        let spec = ch.field().spec();
        ChannelFile {
            p: spec.p(),
            m: spec.m(),
            pi: Some(spec.pi_coeffs()),
            hop1: ScalarHop1 { q11, q12, q21, q22 },
            hop2: ScalarHop2 { q33, q34, q43, q44 },
        }
    }

    pub fn field(&self) -> Result<Field> {
        Field::new(self.p, self.m, self.pi.as_deref())
    }

    /// Field and raw coefficients, without the channel validity checks.
    pub fn entries(&self) -> Result<(Field, [FieldElem; 4], [FieldElem; 4])> {
        let f = self.field()?;
        let e = |r: &ElemRepr| r.to_elem(&f);
        let h1 = &self.hop1;
        let h2 = &self.hop2;
        let first = [e(&h1.q11)?, e(&h1.q12)?, e(&h1.q21)?, e(&h1.q22)?];
        let second = [e(&h2.q33)?, e(&h2.q34)?, e(&h2.q43)?, e(&h2.q44)?];
        Ok((f, first, second))
    }

    pub fn to_channel(&self) -> Result<TwoHopChannel> {
        let (f, first, second) = self.entries()?;
        TwoHopChannel::new(&f, first, second)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub type Rows = Vec<Vec<u32>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MimoHop1 {
    pub q11: Rows,
    pub q12: Rows,
    pub q21: Rows,
    pub q22: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MimoHop2 {
    pub q33: Rows,
    pub q34: Rows,
    pub q43: Rows,
    pub q44: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MimoChannelFile {
    pub p: u32,
    pub m: usize,
    pub hop1: MimoHop1,
    pub hop2: MimoHop2,
}

impl MimoChannelFile {
    pub fn from_channel(ch: &MimoChannel) -> Self {
        let [q11, q12, q21, q22] = ch.first_hop().each_ref().map(Matrix::to_values);
        let [q33, q34, q43, q44] = ch.second_hop().each_ref().map(Matrix::to_values);
        MimoChannelFile {
            p: ch.field().p(),
            m: ch.m(),
            hop1: MimoHop1 { q11, q12, q21, q22 },
            hop2: MimoHop2 { q33, q34, q43, q44 },
        }
    }

    pub fn to_channel(&self) -> Result<MimoChannel> {
        let f = Field::prime(self.p)?;
        let mat = |rows: &Rows| -> Result<Matrix> {
            if rows.len() != self.m || rows.iter().any(|r| r.len() != self.m) {
                return Err(Error::DimensionMismatch(format!("expected {0}x{0} matrix", self.m)));
            }
            Matrix::from_values(&f, rows)
        };
        let h1 = &self.hop1;
        let h2 = &self.hop2;
        MimoChannel::new(
            [mat(&h1.q11)?, mat(&h1.q12)?, mat(&h1.q21)?, mat(&h1.q22)?],
            [mat(&h2.q33)?, mat(&h2.q34)?, mat(&h2.q43)?, mat(&h2.q44)?],
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
