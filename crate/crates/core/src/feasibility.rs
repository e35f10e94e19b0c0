//! How often a random channel admits the `(2m - 1) log p` scheme: exact
//! fractions, the analytic lower bound, Monte Carlo estimates, and the
//! comparison against diagonal (time-varying) symbol extension.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::counting::{count_irreducible, divisors};
use crate::gf::{is_prime, minimal_degree, Field};
use crate::scheme::{check_feasible, exhaust_messages, AndScheme, TwoHopChannel};

pub type Rational = Ratio<i128>;

fn check_params(p: u64, m: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidField("m must be at least 1".into()));
    }
    Ok(())
}

fn pow_i128(p: u64, e: usize) -> Result<i128> {
    (p as i128)
        .checked_pow(e as u32)
        .filter(|v| *v < 1i128 << 100)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{e} exceeds exact range")))
}

/// `m N(p, m) / (p^m - 1)`: probability that a uniform nonzero element of
/// `F_{p^m}` has a degree-`m` minimal polynomial. Exactly 1 at `m = 1`.
pub fn exact_fraction(p: u64, m: usize) -> Result<Rational> {
    check_params(p, m)?;
    if m == 1 {
        return Ok(Rational::from_integer(1));
    }
    let q = pow_i128(p, m)?;
    let n = count_irreducible(p, m as u64) as i128;
    Ok(Rational::new(m as i128 * n, q - 1))
}

/// `1 - sum_{d | m, d > 1} p^{m/d - m}`; may be negative for tiny fields.
pub fn lower_bound(p: u64, m: usize) -> Result<Rational> {
    check_params(p, m)?;
    let q = pow_i128(p, m)?;
    let mut acc = Rational::from_integer(1);
    for d in divisors(m as u64).into_iter().filter(|&d| d > 1) {
        acc -= Rational::new(pow_i128(p, m / d as usize)?, q);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedRates {
    /// `(2m - 1) / m`.
    pub d_finite: String,
    /// Limit as `m` grows at fixed `p`.
    pub limit_m: u32,
    /// Limit as `p` grows at fixed `m`, which is `d_finite` itself.
    pub limit_p: String,
}

pub fn d_finite(m: usize) -> Rational {
    Rational::new(2 * m as i128 - 1, m as i128)
}

pub fn normalized_rates(p: u64, m: usize) -> Result<NormalizedRates> {
    check_params(p, m)?;
    let d = format_ratio(&d_finite(m));
    Ok(NormalizedRates { d_finite: d.clone(), limit_m: 2, limit_p: d })
}

/// `num/den (decimal)`.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{} ({:.6})", r.numer(), r.denom(), ratio_f64(r))
}

pub fn ratio_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Feasibility of the two hops separately; the channel is feasible iff both are.
fn hop_feasible(field: &Field, q: &[u32; 4]) -> bool {
    // gamma = q12 q21 / (q11 q22), gamma' = q34 q43 / (q33 q44): same shape on both hops
    let num = field.mul_raw(q[1], q[2]);
    let den = field.mul_raw(q[0], q[3]);
    let g = field.mul_raw(num, field.inv_raw(den).expect("nonzero"));
    minimal_degree(&field.elem(g)) == field.m()
}

fn hop_singular(field: &Field, q: &[u32; 4]) -> bool {
    field.mul_raw(q[0], q[3]) == field.mul_raw(q[1], q[2])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub p: u32,
    pub m: usize,
    pub trials: u64,
    pub seed: u64,
    pub feasible: u64,
    /// Draws discarded because a hop matrix was singular.
    pub rejected: u64,
    pub estimate: f64,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws a full-rank channel (both hops) by rejection; returns it with the
/// number of rejected draws.
pub fn draw_channel<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Result<(TwoHopChannel, u64)> {
    if field.order() == 2 {
        return Err(Error::InvalidChannel("no full-rank channel has all entries in F_2*".into()));
    }
    let q = field.order();
    let mut rejected = 0;
    loop {
        let mut draw = || -> [u32; 4] { std::array::from_fn(|_| rng.gen_range(1..q)) };
        let h1 = draw();
        let h2 = draw();
        if hop_singular(field, &h1) || hop_singular(field, &h2) {
            rejected += 1;
            continue;
        }
        let ch = TwoHopChannel::from_indices(field, h1, h2).expect("nonzero and full rank");
        return Ok((ch, rejected));
    }
}

/// Estimates the probability that a random full-rank channel satisfies both
/// minimal-polynomial conditions. Trial `t` draws from ChaCha8 stream `t` of
/// `seed`, so the result does not depend on scheduling.
pub fn mc_feasibility(p: u32, m: usize, trials: u64, seed: u64) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::InvalidField("trials must be at least 1".into()));
    }
    let field = Field::new(p, m, None)?;
    if field.order() == 2 {
        return Err(Error::InvalidChannel("no full-rank channel has all entries in F_2*".into()));
    }
    let (feasible, rejected) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let (ch, rej) = draw_channel(&field, &mut rng).expect("field has a valid channel");
            (check_feasible(&ch).feasible as u64, rej)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(McEstimate {
        p,
        m,
        trials,
        seed,
        feasible,
        rejected,
        estimate: feasible as f64 / trials as f64,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagEstimate {
    pub p: u32,
    pub m: usize,
    pub trials: u64,
    pub seed: u64,
    pub feasible: u64,
    /// Draws where some slot's 2x2 hop matrix is singular (kept, not redrawn).
    pub singular: u64,
    pub estimate: f64,
}

fn all_distinct(v: &[u32]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Time-varying scalar channel over `m` slots of `F_p`: eight diagonal
/// matrices with uniform nonzero entries. Feasible iff the per-slot cross
/// products are pairwise distinct on both hops.
pub fn diag_symbol_ext_feasibility(p: u32, m: usize, trials: u64, seed: u64) -> Result<DiagEstimate> {
    if trials == 0 {
        return Err(Error::InvalidField("trials must be at least 1".into()));
    }
    let f = Field::prime(p)?;
    if m == 0 {
        return Err(Error::InvalidField("m must be at least 1".into()));
    }
    let (feasible, singular) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let mut sing = false;
            let mut products = [Vec::with_capacity(m), Vec::with_capacity(m)];
            for hop in products.iter_mut() {
                for _ in 0..m {
                    let q: [u32; 4] = std::array::from_fn(|_| rng.gen_range(1..p));
                    sing |= hop_singular(&f, &q);
                    let num = f.mul_raw(q[1], q[2]);
                    let den = f.mul_raw(q[0], q[3]);
                    hop.push(f.mul_raw(num, f.inv_raw(den).expect("nonzero")));
                }
            }
            let ok = products.iter().all(|v| all_distinct(v));
            (ok as u64, sing as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(DiagEstimate {
        p,
        m,
        trials,
        seed,
        feasible,
        singular,
        estimate: feasible as f64 / trials as f64,
    })
}

/// Channel enumerations larger than this are refused.
pub const SCAN_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub p: u32,
    pub m: usize,
    /// All 8-tuples with nonzero entries.
    pub tuples: u64,
    /// Tuples with both hop matrices invertible.
    pub valid: u64,
    pub feasible: u64,
    /// `feasible / valid`, the exact joint probability. None when no channel is valid.
    pub feasible_fraction: Option<String>,
    pub messages_per_channel: u64,
    pub decoded_ok: u64,
    pub decoded_total: u64,
    pub success_rate: f64,
}

impl ScanReport {
    pub fn joint_probability(&self) -> Option<Rational> {
        (self.valid > 0).then(|| Rational::new(self.feasible as i128, self.valid as i128))
    }
}

/// Every valid channel over `F_{p^m}`: checks feasibility, and for each
/// feasible channel round-trips every message tuple.
pub fn scan_exhaustive(p: u32, m: usize, pi: Option<&[u32]>) -> Result<ScanReport> {
    let field = Field::new(p, m, pi)?;
    let nz = field.order() as u64 - 1;
    let tuples = nz.checked_pow(8).unwrap_or(u64::MAX);
    if tuples > SCAN_LIMIT {
        return Err(Error::TooLarge(format!(
            "{tuples} channel tuples over F_{p}^{m} exceed the limit of {SCAN_LIMIT}"
        )));
    }
    let hops: Vec<[u32; 4]> = (0..nz.pow(4))
        .map(|mut k| {
            std::array::from_fn(|_| {
                let v = (k % nz) as u32 + 1;
                k /= nz;
                v
            })
        })
        .filter(|q| !hop_singular(&field, q))
        .collect();
    let second_ok: Vec<bool> = hops.iter().map(|q| hop_feasible(&field, q)).collect();
    let messages = (p as u64).pow(2 * m as u32 - 1);
    let (feasible, ok, total) = hops
        .par_iter()
        .map(|h1| {
            let mut acc = (0u64, 0u64, 0u64);
            if !hop_feasible(&field, h1) {
                return acc;
            }
            for (h2, &f2) in hops.iter().zip(&second_ok) {
                if !f2 {
                    continue;
                }
                let ch = TwoHopChannel::from_indices(&field, *h1, *h2).expect("valid");
                debug_assert!(check_feasible(&ch).feasible);
                acc.0 += 1;
                let scheme = AndScheme::new(&ch).expect("feasible channel builds");
                let (o, t) = exhaust_messages(&scheme);
                acc.1 += o;
                acc.2 += t;
            }
            acc
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let valid = (hops.len() as u64).pow(2);
    let frac = (valid > 0).then(|| format_ratio(&Rational::new(feasible as i128, valid as i128)));
    Ok(ScanReport {
        p,
        m,
        tuples,
        valid,
        feasible,
        feasible_fraction: frac,
        messages_per_channel: messages,
        decoded_ok: ok,
        decoded_total: total,
        success_rate: if total == 0 { 1.0 } else { ok as f64 / total as f64 },
    })
}

/// Fraction of full-rank 2x2 hops over `F_{p^m}` (nonzero entries) whose
/// cross ratio has a degree-`m` minimal polynomial; the joint probability is
/// its square.
pub fn hop_fraction(p: u32, m: usize) -> Result<Rational> {
    let field = Field::new(p, m, None)?;
    let nz = field.order() as u64 - 1;
    if nz.checked_pow(4).is_none_or(|n| n > SCAN_LIMIT) {
        return Err(Error::TooLarge(format!("{nz}^4 hop tuples")));
    }
    let (mut valid, mut good) = (0i128, 0i128);
    for k in 0..nz.pow(4) {
        let mut k = k;
        let q: [u32; 4] = std::array::from_fn(|_| {
            let v = (k % nz) as u32 + 1;
            k /= nz;
            v
        });
        if hop_singular(&field, &q) {
            continue;
        }
        valid += 1;
        good += hop_feasible(&field, &q) as i128;
    }
    if valid == 0 {
        return Err(Error::InvalidChannel("no full-rank hop exists".into()));
    }
    Ok(Rational::new(good, valid))
}
