use std::fs;
use std::io::Write;

use fieldnet::feasibility::{
    d_finite, diag_symbol_ext_feasibility, exact_fraction, format_ratio, lower_bound, mc_feasibility,
    scan_exhaustive, DiagEstimate, McEstimate,
};
use fieldnet::gf::field::format_poly;
use fieldnet::gf::notation::parse_poly_coeffs;
use fieldnet::io::{ChannelFile, MimoChannelFile};
use fieldnet::matrix::companion_matrix;
use fieldnet::report::simulate_file;
use fieldnet::scheme::MessagePair;
use fieldnet::symbol_ext::{simulate_symbol_ext, MimoChannel, MimoMessage};
use fieldnet::Field;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{Command, FieldArgs, Format, MessageArgs, RunConfig, SweepArgs};

pub enum Outcome {
    Done,
    Infeasible,
}

impl Outcome {
    pub fn code(&self) -> u8 {
        match self {
            Outcome::Done => 0,
            Outcome::Infeasible => 1,
        }
    }
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

#[derive(Serialize)]
struct FieldInfo {
    p: u32,
    m: usize,
    pi: Vec<u32>,
    pi_text: String,
    primitive_element: Vec<u32>,
    alpha_order: u64,
    companion: Vec<Vec<u32>>,
}

/// One line of a sweep.
#[derive(Debug, Serialize)]
struct SweepRow {
    p: u32,
    m: usize,
    exact_fraction: String,
    lower_bound: String,
    mc_estimate: Option<f64>,
    trials: Option<u64>,
    rejected: Option<u64>,
    d_finite: String,
}

#[derive(Serialize)]
struct Comparison {
    p: u32,
    m: usize,
    exact_fraction: String,
    field_extension: McEstimate,
    symbol_extension: DiagEstimate,
    field_extension_wins: bool,
}

fn make_field(args: &FieldArgs) -> Res<Field> {
    let pi = match &args.pi {
        Some(text) => Some(parse_poly_coeffs(text, args.p).map_err(err)?),
        None => None,
    };
    Field::new(args.p, args.m, pi.as_deref()).map_err(err)
}

fn emit<T: Serialize>(cfg: &RunConfig, value: &T) -> Res<()> {
    let text = serde_json::to_string_pretty(value).map_err(err)? + "\n";
    write_out(cfg, text.as_bytes())
}

fn emit_rows(cfg: &RunConfig, rows: &[SweepRow]) -> Res<()> {
    match cfg.format {
        Format::Json => emit(cfg, &rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(err)?;
            }
            let bytes = w.into_inner().map_err(err)?;
            write_out(cfg, &bytes)
        }
    }
}

fn write_out(cfg: &RunConfig, bytes: &[u8]) -> Res<()> {
    match &cfg.out {
        Some(path) => fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(bytes).map_err(err),
    }
}

fn bounds_row(p: u32, m: usize) -> Res<SweepRow> {
    Ok(SweepRow {
        p,
        m,
        exact_fraction: format_ratio(&exact_fraction(p as u64, m).map_err(err)?),
        lower_bound: format_ratio(&lower_bound(p as u64, m).map_err(err)?),
        mc_estimate: None,
        trials: None,
        rejected: None,
        d_finite: format_ratio(&d_finite(m)),
    })
}

fn sweep(args: &SweepArgs) -> impl Iterator<Item = (u32, usize)> + '_ {
    args.p.iter().flat_map(move |&p| args.m.iter().map(move |&m| (p, m)))
}

fn message_or_zero(msg: &MessageArgs, m: usize) -> (Vec<u32>, Vec<u32>) {
    (
        msg.w1.clone().unwrap_or_else(|| vec![0; m]),
        msg.w2.clone().unwrap_or_else(|| vec![0; m.saturating_sub(1)]),
    )
}

pub fn run(cfg: &RunConfig) -> Res<Outcome> {
    match &cfg.command {
        Command::FieldInfo(args) => {
            let f = make_field(args)?;
            let c = companion_matrix(&f);
            let alpha = f.primitive_element();
            emit(
                cfg,
                &FieldInfo {
                    p: f.p(),
                    m: f.m(),
                    pi: f.spec().pi_coeffs(),
                    pi_text: format_poly(&f.spec().pi_coeffs(), "x"),
                    primitive_element: alpha.coeffs(),
                    alpha_order: alpha.order().unwrap_or(0),
                    companion: c.to_values(),
                },
            )?;
        }
        Command::Scan(args) => {
            let pi = match &args.pi {
                Some(text) => Some(parse_poly_coeffs(text, args.p).map_err(err)?),
                None => None,
            };
            emit(cfg, &scan_exhaustive(args.p, args.m, pi.as_deref()).map_err(err)?)?;
        }
        Command::Bounds { sweep: s } => {
            let rows = sweep(s).map(|(p, m)| bounds_row(p, m)).collect::<Res<Vec<_>>>()?;
            emit_rows(cfg, &rows)?;
        }
        Command::Mc { sweep: s, trials, seed } => {
            let mut rows = Vec::new();
            for (p, m) in sweep(s) {
                let mut row = bounds_row(p, m)?;
                let est = mc_feasibility(p, m, *trials, *seed).map_err(err)?;
                row.mc_estimate = Some(est.estimate);
                row.trials = Some(est.trials);
                row.rejected = Some(est.rejected);
                rows.push(row);
            }
            emit_rows(cfg, &rows)?;
        }
        Command::CompareExt { p, m, trials, seed } => {
            let exact = exact_fraction(*p as u64, *m).map_err(err)?;
            let fe = mc_feasibility(*p, *m, *trials, *seed).map_err(err)?;
            let se = diag_symbol_ext_feasibility(*p, *m, *trials, *seed).map_err(err)?;
            let wins = fe.estimate > se.estimate;
            emit(
                cfg,
                &Comparison {
                    p: *p,
                    m: *m,
                    exact_fraction: format_ratio(&exact),
                    field_extension: fe,
                    symbol_extension: se,
                    field_extension_wins: wins,
                },
            )?;
        }
        Command::Simulate { channel, msg } => {
            let text = fs::read_to_string(channel).map_err(|e| format!("{}: {e}", channel.display()))?;
            let file = ChannelFile::from_json(&text).map_err(err)?;
            let field = file.field().map_err(err)?;
            let (w1, w2) = message_or_zero(msg, field.m());
            let msg = MessagePair::new(&field, w1, w2).map_err(err)?;
            let report = simulate_file(&file, &msg).map_err(err)?;
            emit(cfg, &report)?;
            if !report.success {
                return Ok(Outcome::Infeasible);
            }
        }
        Command::SymbolExt { channel, p, m, seed, msg } => {
            let ch = match channel {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    MimoChannelFile::from_json(&text).and_then(|f| f.to_channel()).map_err(err)?
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.expect("validated"));
                    MimoChannel::random(p.expect("validated"), m.expect("validated"), &mut rng)
                        .map_err(err)?
                }
            };
            let (w1, w2) = message_or_zero(msg, ch.m());
            let report = simulate_symbol_ext(&ch, &MimoMessage { w1, w2 });
            if report.verdict.feasible && report.relay.is_none() {
                // the message does not fit the planned extension field
                return Err(report.error.unwrap_or_default());
            }
            emit(cfg, &report)?;
            if !report.success {
                return Ok(Outcome::Infeasible);
            }
        }
    }
    Ok(Outcome::Done)
}
