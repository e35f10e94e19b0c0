//! Serializable end-to-end simulation reports.
//!
//! Field order in the structs is the key order of the emitted JSON.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::gf::minimal_degree;
use crate::gf::notation::format_exp;
use crate::io::{elems_repr, vector_repr, ChannelFile, ElemRepr, MimoChannelFile};
use crate::matrix::eigen::Eigen;
use crate::scheme::{check_feasible, compute_gammas, sum_rate_bits, AndScheme, MessagePair, TwoHopChannel};
use crate::symbol_ext::{MimoChannel, MimoMessage, MimoScheme};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum ChannelEcho {
    Scalar(ChannelFile),
    Mimo(MimoChannelFile),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub feasible: bool,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossRatio {
    pub value: String,
    pub minimal_degree: usize,
}

pub type MatrixRepr = Vec<Vec<ElemRepr>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecoderEcho {
    pub v1: MatrixRepr,
    pub v2: MatrixRepr,
    pub v3: MatrixRepr,
    pub v4: MatrixRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MessageEcho {
    pub w1: Vec<ElemRepr>,
    pub w2: Vec<ElemRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelayEcho {
    pub u1: Vec<ElemRepr>,
    pub u2: Vec<ElemRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    /// Low degree first.
    pub char_poly: Vec<u32>,
    pub factor_degrees: Vec<usize>,
    /// Degree of the largest irreducible factor.
    pub paper_r: usize,
    pub splitting_degree: usize,
    pub eigenvalues: Vec<String>,
}

impl SpectrumSummary {
    pub fn of(e: &Eigen) -> Self {
        SpectrumSummary {
            char_poly: e.char_poly.coeffs().to_vec(),
            factor_degrees: e.factor_degrees.clone(),
            paper_r: e.largest_factor_degree,
            splitting_degree: e.splitting_degree,
            eigenvalues: e.values.iter().map(format_exp).collect(),
        }
    }
}

/// Compares the largest factor degree per hop with the extension actually used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperRVsL {
    pub hop1_r: usize,
    pub hop2_r: usize,
    #[serde(rename = "L")]
    pub l: usize,
    /// `L` exceeds both `r` values: the largest factor alone does not split the product.
    pub l_exceeds_r: bool,
    pub l_exceeds_m: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSummary {
    pub hop1: SpectrumSummary,
    pub hop2: SpectrumSummary,
    #[serde(rename = "L")]
    pub l: usize,
    /// Generating polynomial of `F_{p^L}`, low degree first.
    pub ext_pi: Vec<u32>,
    #[serde(rename = "paper_r_vs_L")]
    pub paper_r_vs_l: PaperRVsL,
    pub slots: usize,
    pub symbols_per_block: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub channel: ChannelEcho,
    pub verdict: Outcome,
    pub gamma: Option<CrossRatio>,
    pub gamma_prime: Option<CrossRatio>,
    pub precoders: Option<PrecoderEcho>,
    pub message: MessageEcho,
    pub relay: Option<RelayEcho>,
    pub decoded: Option<MessageEcho>,
    pub success: bool,
    pub sum_rate_bits: Option<f64>,
    pub extension: Option<ExtensionSummary>,
    pub error: Option<String>,
}

impl SimulationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn message_echo(field: &crate::Field, w1: &[u32], w2: &[u32]) -> MessageEcho {
    MessageEcho { w1: vector_repr(field, w1), w2: vector_repr(field, w2) }
}

/// Runs the scalar scheme end to end. Infeasible channels and invalid
/// messages are reported, not raised.
pub fn simulate(ch: &TwoHopChannel, msg: &MessagePair) -> SimulationReport {
    let f = ch.field();
    let ground = f.ground();
    let verdict = check_feasible(ch);
    let gamma = crate::scheme::compute_gamma(ch);
    let gamma_prime = compute_gammas(ch).ok().map(|g| CrossRatio {
        value: format_exp(&g.gamma_prime),
        minimal_degree: minimal_degree(&g.gamma_prime),
    });
    let mut report = SimulationReport {
        channel: ChannelEcho::Scalar(ChannelFile::from_channel(ch)),
        verdict: Outcome { feasible: verdict.feasible, reasons: verdict.reasons.clone() },
        gamma: Some(CrossRatio { value: format_exp(&gamma), minimal_degree: verdict.gamma_degree }),
        gamma_prime,
        precoders: None,
        message: message_echo(&ground, &msg.w1, &msg.w2),
        relay: None,
        decoded: None,
        success: false,
        sum_rate_bits: None,
        extension: None,
        error: None,
    };
    if !verdict.feasible {
        return report;
    }
    let scheme = match AndScheme::new(ch) {
        Ok(s) => s,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let pre = scheme.precoders();
    report.precoders = Some(PrecoderEcho {
        v1: elems_repr(&pre.v1),
        v2: elems_repr(&pre.v2),
        v3: elems_repr(&pre.v3),
        v4: elems_repr(&pre.v4),
    });
    match scheme.transmit(msg) {
        Ok(t) => {
            report.relay = Some(RelayEcho {
                u1: vector_repr(&ground, &t.relay.u1),
                u2: vector_repr(&ground, &t.relay.u2),
            });
            report.decoded = Some(message_echo(&ground, &t.decoded.w1, &t.decoded.w2));
            report.success = t.decoded == *msg;
            if report.success {
                report.sum_rate_bits = Some(sum_rate_bits(f.p(), f.m()));
            }
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

/// Like [`simulate`], starting from a channel file. A singular hop is
/// reported as an infeasible channel; every other file problem is an error.
pub fn simulate_file(file: &ChannelFile, msg: &MessagePair) -> crate::Result<SimulationReport> {
    let reason = match file.to_channel() {
        Ok(ch) => return Ok(simulate(&ch, msg)),
        Err(Error::SingularChannel(reason)) => reason,
        Err(e) => return Err(e),
    };
    let (f, [q11, q12, q21, q22], _) = file.entries()?;
    let gamma = &(&(&q12 * &q21) / &q11) / &q22;
    Ok(SimulationReport {
        channel: ChannelEcho::Scalar(file.clone()),
        verdict: Outcome { feasible: false, reasons: vec![reason] },
        gamma: Some(CrossRatio { value: format_exp(&gamma), minimal_degree: minimal_degree(&gamma) }),
        gamma_prime: None,
        precoders: None,
        message: message_echo(&f.ground(), &msg.w1, &msg.w2),
        relay: None,
        decoded: None,
        success: false,
        sum_rate_bits: None,
        extension: None,
        error: None,
    })
}

pub fn extension_summary(scheme: &MimoScheme) -> ExtensionSummary {
    let plan = scheme.plan();
    let m = scheme.channel().m();
    let (r1, r2) = plan.largest_factor_degrees();
    ExtensionSummary {
        hop1: SpectrumSummary::of(&plan.hop1),
        hop2: SpectrumSummary::of(&plan.hop2),
        l: plan.l,
        ext_pi: plan.ext.spec().pi_coeffs(),
        paper_r_vs_l: PaperRVsL {
            hop1_r: r1,
            hop2_r: r2,
            l: plan.l,
            l_exceeds_r: plan.l > r1.max(r2),
            l_exceeds_m: plan.l > m,
        },
        slots: plan.l,
        symbols_per_block: (2 * m - 1) * plan.l,
    }
}

/// Runs the MIMO scheme end to end over `F_{p^L}`; messages are packed
/// element indices of the extension field chosen by the plan.
pub fn simulate_symbol_ext(ch: &MimoChannel, msg: &MimoMessage) -> SimulationReport {
    let mut report = SimulationReport {
        channel: ChannelEcho::Mimo(MimoChannelFile::from_channel(ch)),
        verdict: Outcome { feasible: false, reasons: Vec::new() },
        gamma: None,
        gamma_prime: None,
        precoders: None,
        message: MessageEcho {
            w1: msg.w1.iter().map(|&v| ElemRepr::Int(v)).collect(),
            w2: msg.w2.iter().map(|&v| ElemRepr::Int(v)).collect(),
        },
        relay: None,
        decoded: None,
        success: false,
        sum_rate_bits: None,
        extension: None,
        error: None,
    };
    let scheme = match MimoScheme::new(ch) {
        Ok(s) => s,
        Err(e) => {
            report.verdict.reasons.push(e.to_string());
            return report;
        }
    };
    report.verdict.feasible = true;
    let ext = scheme.ext().clone();
    let pre = scheme.precoders();
    report.precoders = Some(PrecoderEcho {
        v1: elems_repr(&pre.v1),
        v2: elems_repr(&pre.v2),
        v3: elems_repr(&pre.v3),
        v4: elems_repr(&pre.v4),
    });
    report.extension = Some(extension_summary(&scheme));
    if let Err(e) = scheme.validate(msg) {
        report.error = Some(e.to_string());
        return report;
    }
    report.message = message_echo(&ext, &msg.w1, &msg.w2);
    match scheme.transmit(msg) {
        Ok(t) => {
            report.relay = Some(RelayEcho { u1: vector_repr(&ext, &t.u1), u2: vector_repr(&ext, &t.u2) });
            report.decoded = Some(message_echo(&ext, &t.decoded.w1, &t.decoded.w2));
            report.success = t.decoded == *msg;
            if report.success {
                report.sum_rate_bits = Some(scheme.throughput_bits_per_slot());
            }
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}
