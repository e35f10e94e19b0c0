//! Aligned network diagonalization for the scalar 2x2x2 channel over
//! `F_{p^m}`.
//!
//! Source 1 sends `m` symbols of `F_p`, source 2 sends `m - 1`. The precoders
//! align source 2's streams with source 1's at both relays, so each relay
//! decodes `m` sums. The relays precode with the inverse of the second hop,
//! which delivers each message to its own destination interference free.

pub mod channel;
pub mod pipeline;
pub mod precoder;

pub use channel::{check_feasible, compute_gamma, compute_gammas, inverse2, Gammas, TwoHopChannel, Verdict};
pub use pipeline::{exhaust_messages, sum_rate_bits, AndScheme, MessagePair, Relay, RelayEquations, Trace};
pub use crate::report::simulate;
pub use precoder::{alignment_precoders, build_precoders, first_hop_v1, PrecoderSet};
