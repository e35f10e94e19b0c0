use fieldnet::feasibility::{draw_channel, mc_feasibility};
use fieldnet::io::{ChannelFile, MimoChannelFile};
use fieldnet::matrix::{combine_inputs, phi, phi_inv, phi_t, phi_t_inv, psi, psi_inv};
use fieldnet::scheme::{check_feasible, simulate, AndScheme, MessagePair, RelayEquations};
use fieldnet::report::SimulationReport;
use fieldnet::symbol_ext::{MimoChannel, MimoMessage, MimoScheme};
use fieldnet::{Field, Matrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIELDS: [(u32, usize); 7] = [(2, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)];

fn field_and_elems(count: usize) -> impl Strategy<Value = (Field, Vec<u32>)> {
    (0..FIELDS.len()).prop_flat_map(move |i| {
        let (p, m) = FIELDS[i];
        let f = Field::new(p, m, None).unwrap();
        let q = f.order();
        (Just(f), proptest::collection::vec(0..q, count))
    })
}

proptest! {
    #[test]
    fn field_axioms((f, v) in field_and_elems(3)) {
        let [a, b, c] = [f.elem(v[0]), f.elem(v[1]), f.elem(v[2])];
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert!(a.pow(f.order() as u64 - 1).is_one());
        }
    }

    #[test]
    fn matrix_maps_are_homomorphisms((f, v) in field_and_elems(2)) {
        let (a, b) = (f.elem(v[0]), f.elem(v[1]));
        prop_assert_eq!(phi_inv(&f, &phi(&a)).unwrap(), a.clone());
        prop_assert_eq!(psi_inv(&f, &psi(&a)).unwrap(), a.clone());
        prop_assert_eq!(psi(&(&a * &b)), psi(&a).mul(&psi(&b)).unwrap());
        prop_assert_eq!(psi(&(&a + &b)), psi(&a).add(&psi(&b)).unwrap());
        prop_assert_eq!(psi(&a).mul(&phi(&b)).unwrap(), phi(&(&a * &b)));
    }

    #[test]
    fn combining_inputs_matches_field_arithmetic((f, v) in field_and_elems(6)) {
        let q: Vec<_> = v[..3].iter().map(|&i| f.elem(i)).collect();
        let x: Vec<_> = v[3..].iter().map(|&i| f.elem(i)).collect();
        let sum = (0..3).fold(f.zero(), |acc, k| &acc + &(&q[k] * &x[k]));
        prop_assert_eq!(combine_inputs(&q, &x).unwrap(), phi(&sum));
    }

    #[test]
    fn slot_expansion_round_trips(p in prop::sample::select(vec![2u32, 3]), l in 2usize..=3, seed: u64) {
        let ext = Field::new(p, l, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<u32> = (0..3).map(|_| rand::Rng::gen_range(&mut rng, 0..ext.order())).collect();
        let x = Matrix::column_vector(&ext, &x).unwrap();
        let slots = phi_t(&x).unwrap();
        prop_assert_eq!(slots.shape(), (3, l));
        prop_assert_eq!(phi_t_inv(&ext, &slots).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn feasible_channels_deliver_every_message(i in 0..FIELDS.len(), seed: u64, w in proptest::collection::vec(0u32..25, 8)) {
        let (p, m) = FIELDS[i];
        let f = Field::new(p, m, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Ok((ch, _)) = draw_channel(&f, &mut rng) else { return Ok(()) };
        let w1: Vec<u32> = w[..m].iter().map(|x| x % p).collect();
        let w2: Vec<u32> = w[m..2 * m - 1].iter().map(|x| x % p).collect();
        let msg = MessagePair::new(&f, w1, w2).unwrap();
        let verdict = check_feasible(&ch);
        match AndScheme::new(&ch) {
            Ok(scheme) => {
                prop_assert!(verdict.feasible);
                let t = scheme.transmit(&msg).unwrap();
                prop_assert_eq!(t.relay, RelayEquations::expected(&f, &msg));
                prop_assert_eq!(t.decoded, msg);
            }
            Err(_) => prop_assert!(!verdict.feasible),
        }
    }

    #[test]
    fn reports_and_channel_files_round_trip(i in 0..FIELDS.len(), seed: u64) {
        let (p, m) = FIELDS[i];
        if p.pow(m as u32) == 2 {
            return Ok(());
        }
        let f = Field::new(p, m, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (ch, _) = draw_channel(&f, &mut rng).unwrap();
        let file = ChannelFile::from_channel(&ch);
        let text = serde_json::to_string(&file).unwrap();
        let back = ChannelFile::from_json(&text).unwrap().to_channel().unwrap();
        prop_assert_eq!(back.first_hop(), ch.first_hop());
        prop_assert_eq!(back.second_hop(), ch.second_hop());
        let report = simulate(&ch, &MessagePair::zero(m));
        prop_assert_eq!(SimulationReport::from_json(&report.to_json()).unwrap(), report);
    }

    #[test]
    fn mimo_round_trip(pm in prop::sample::select(vec![(2u32, 2usize), (3, 2), (2, 3)]), seed: u64) {
        let (p, m) = pm;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ch = MimoChannel::random(p, m, &mut rng).unwrap();
        let file = MimoChannelFile::from_channel(&ch);
        let back = MimoChannelFile::from_json(&serde_json::to_string(&file).unwrap()).unwrap();
        let back = back.to_channel().unwrap();
        prop_assert_eq!(back.first_hop(), ch.first_hop());
        prop_assert_eq!(back.second_hop(), ch.second_hop());
        let Ok(scheme) = MimoScheme::new(&ch) else { return Ok(()) };
        let q = scheme.ext().order();
        let w1: Vec<u32> = (0..m).map(|k| (seed >> (4 * k)) as u32 % q).collect();
        let w2: Vec<u32> = (0..m - 1).map(|k| (seed >> (4 * k + 20)) as u32 % q).collect();
        let msg = MimoMessage { w1, w2 };
        prop_assert_eq!(scheme.transmit(&msg).unwrap().decoded, msg);
    }
}

#[test]
fn monte_carlo_depends_only_on_seed() {
    let a = mc_feasibility(3, 2, 2000, 11).unwrap();
    let b = mc_feasibility(3, 2, 2000, 11).unwrap();
    let c = mc_feasibility(3, 2, 2000, 12).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.feasible, c.feasible);
}
