//! Randomized and sweep-style properties that go beyond the inline unit
//! tests: million-point integer-root sweeps, the pairwise form of the
//! shell-numbering equivalence, counting bounds for the diagonal families,
//! and proptest round-trips over wide input ranges.

use std::collections::HashSet;

use proptest::prelude::*;

use natcode::enums::{self, TuplingFamily};
use natcode::natmath;
use natcode::pairings::{self, PairingKind};
use natcode::shells::{self, ShellNumbering};
use natcode::tuplings::{self, TuplingFunction};
use natcode::{Nat, Verdict};

fn n(v: u64) -> Nat {
    Nat::from(v)
}

fn nat_point(coords: &[u64]) -> Vec<Nat> {
    coords.iter().copied().map(Nat::from).collect()
}

/// Every point of the cube {0..side-1}^dim, first coordinate fastest.
fn cube(side: u64, dim: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut point = vec![0u64; dim];
    'grid: loop {
        out.push(point.clone());
        let mut pos = 0;
        loop {
            if pos == dim {
                break 'grid;
            }
            point[pos] += 1;
            if point[pos] < side {
                break;
            }
            point[pos] = 0;
            pos += 1;
        }
    }
    out
}

fn iroot_sweep(d: u32) {
    let mut root = Nat::from(0u32);
    let mut next_power = Nat::from(1u32); // (root+1)^d
    for z in 0..=1_000_000u64 {
        let z = n(z);
        if z == next_power {
            root += 1u32;
            next_power = (&root + 1u32).pow(d);
        }
        assert_eq!(natmath::iroot(&z, d).unwrap(), root, "z = {z}, d = {d}");
    }
}

#[test]
fn integer_root_inverts_first_powers_to_a_million() {
    iroot_sweep(1);
}

#[test]
fn integer_root_inverts_squares_to_a_million() {
    iroot_sweep(2);
}

#[test]
fn integer_root_inverts_cubes_to_a_million() {
    iroot_sweep(3);
}

#[test]
fn integer_root_inverts_fourth_powers_to_a_million() {
    iroot_sweep(4);
}

#[test]
fn integer_root_inverts_fifth_powers_to_a_million() {
    iroot_sweep(5);
}

/// The prefix check tests adjacent codes only; here is the full pairwise
/// statement it stands in for: on the first N codes, a strictly smaller
/// shell number forces a strictly smaller code.
#[test]
fn shell_numbering_prefix_check_matches_the_pairwise_definition() {
    const N: u64 = 500;
    let cases: Vec<TuplingFunction> = vec![
        tuplings::cantor(),
        tuplings::rosenberg_strong(2).unwrap(),
        tuplings::dyadic(),
        tuplings::skolem(3).unwrap(),
    ];
    for f in cases {
        let sigma = f.standard_shell().expect("all four have standard shells");
        assert!(shells::check_shell_numbering_prefix(&f, &sigma, N)
            .unwrap()
            .is_pass());
        let shells_by_code: Vec<Nat> = (0..N)
            .map(|z| sigma.sigma(&f.decode(&n(z)).unwrap()).unwrap())
            .collect();
        for i in 0..shells_by_code.len() {
            for j in 0..shells_by_code.len() {
                if shells_by_code[i] < shells_by_code[j] {
                    assert!(i < j, "{}: codes {i}, {j}", f.name());
                }
            }
        }
    }
}

/// C(w+d−1, d) ≤ f(p) < C(w+d, d) with w the coordinate sum, for both
/// diagonal-shell families on a grid.
#[test]
fn diagonal_codes_sit_inside_their_shell_counts() {
    for d in 1..=4usize {
        let skolem = tuplings::skolem(d).unwrap();
        let chowla = tuplings::chowla(d).unwrap();
        let dn = n(d as u64);
        for point in cube(7, d) {
            let p = nat_point(&point);
            let w = point.iter().sum::<u64>();
            let lower = natmath::binomial(&n(w + d as u64 - 1), &dn);
            let upper = natmath::binomial(&n(w + d as u64), &dn);
            for f in [&skolem, &chowla] {
                let code = f.encode(&p).unwrap();
                assert!(
                    lower <= code && code < upper,
                    "{}/{d} at {point:?}: {code} outside [{lower}, {upper})",
                    f.name()
                );
            }
        }
    }
}

/// The first thousand ξ-indices cover exactly the sequences of rank below
/// one thousand; spot-checked against every sequence over {0,1,2} of
/// length at most 2, whose ranks all stay below the prefix.
#[test]
fn xi_prefix_covers_all_small_ranks() {
    let kind = PairingKind::RosenbergStrong;
    let mut seen = HashSet::new();
    for i in 0..1_000u64 {
        let seq = enums::seq_unrank_xi(&n(i), kind).unwrap();
        assert_eq!(enums::seq_rank_xi(&seq, kind).unwrap(), n(i));
        assert!(seen.insert(seq), "duplicate at index {i}");
    }
    let mut alphabet_sequences = vec![vec![]];
    for a in 0..3u64 {
        alphabet_sequences.push(vec![a]);
        for b in 0..3u64 {
            alphabet_sequences.push(vec![a, b]);
        }
    }
    assert_eq!(alphabet_sequences.len(), 13);
    for seq in alphabet_sequences {
        let seq = nat_point(&seq);
        let rank = enums::seq_rank_xi(&seq, kind).unwrap();
        assert!(rank < n(1_000), "rank {rank} of {seq:?} beyond the prefix");
        assert!(seen.contains(&seq), "{seq:?} missing from the prefix");
    }
}

/// A permuted tupling composed with its inverse permutation is the
/// original function again, code for code.
#[test]
fn permutation_and_its_inverse_cancel() {
    let perm = &[2usize, 0, 3, 1];
    let mut inverse = vec![0usize; perm.len()];
    for (i, &target) in perm.iter().enumerate() {
        inverse[target] = i;
    }
    let base = tuplings::rosenberg_strong(4).unwrap();
    let once = tuplings::permute_tupling(base.clone(), perm).unwrap();
    let twice = tuplings::permute_tupling(once, &inverse).unwrap();
    for z in 0..2_000u64 {
        let z = n(z);
        assert_eq!(twice.decode(&z).unwrap(), base.decode(&z).unwrap());
    }
}

fn point_strategy(max: u64) -> impl Strategy<Value = Vec<u64>> {
    (1usize..=5).prop_flat_map(move |d| proptest::collection::vec(0..max, d))
}

proptest! {
    #[test]
    fn rs_round_trips_wide_coordinates(point in point_strategy(1_000_000)) {
        let d = point.len();
        let p = nat_point(&point);
        let code = tuplings::rs_encode(&p, d).unwrap();
        prop_assert_eq!(tuplings::rs_decode(&code, d).unwrap(), p);
    }

    #[test]
    fn skolem_round_trips_wide_coordinates(point in point_strategy(100_000)) {
        let d = point.len();
        let p = nat_point(&point);
        let code = tuplings::skolem_encode(&p, d).unwrap();
        prop_assert_eq!(tuplings::skolem_decode(&code, d).unwrap(), p);
    }

    #[test]
    fn chowla_round_trips_modest_coordinates(
        point in (1usize..=3).prop_flat_map(|d| proptest::collection::vec(0u64..40, d))
    ) {
        let d = point.len();
        let p = nat_point(&point);
        let code = tuplings::chowla_encode(&p, d).unwrap();
        prop_assert_eq!(tuplings::chowla_decode(&code, d).unwrap(), p);
    }

    #[test]
    fn pairings_round_trip_haystack_sized_values(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        // ~128-bit coordinates: far beyond anything a table could reach.
        let x = n(a) * n(c) + n(b);
        let y = n(b) * n(c) + n(a);
        for kind in [PairingKind::Cantor, PairingKind::CantorSwapped, PairingKind::RosenbergStrong] {
            let z = kind.encode(&x, &y).unwrap();
            prop_assert_eq!(kind.decode(&z).unwrap(), (x.clone(), y.clone()));
        }
    }

    #[test]
    fn dyadic_round_trips_with_tall_exponents(x in any::<u64>(), y in 0u64..4_096) {
        let (xn, yn) = (n(x), n(y));
        let z = pairings::dyadic(&xn, &yn);
        prop_assert_eq!(pairings::dyadic_inverse(&z), (xn, yn));
    }

    #[test]
    fn fold_is_the_left_fold_of_its_pairing(x in 0u64..1_000_000, y in 0u64..1_000_000, z in 0u64..1_000_000) {
        let fold = tuplings::fold_tupling(PairingKind::Cantor, 3).unwrap();
        let (xn, yn, zn) = (n(x), n(y), n(z));
        let by_hand = pairings::cantor(&pairings::cantor(&xn, &yn), &zn);
        prop_assert_eq!(fold.encode(&[xn, yn, zn]).unwrap(), by_hand);
    }

    #[test]
    fn degree_two_diagonal_families_are_the_cantor_pairing(x in 0u64..100_000, y in 0u64..100_000) {
        let (xn, yn) = (n(x), n(y));
        let expected = pairings::cantor(&xn, &yn);
        let p = [xn, yn];
        prop_assert_eq!(tuplings::skolem_encode(&p, 2).unwrap(), expected.clone());
        prop_assert_eq!(tuplings::chowla_encode(&p, 2).unwrap(), expected);
    }

    #[test]
    fn trees_round_trip_at_random_ranks(rank in any::<u32>(), kind_index in 0usize..4) {
        let kind = [
            PairingKind::Cantor,
            PairingKind::CantorSwapped,
            PairingKind::RosenbergStrong,
            PairingKind::Dyadic,
        ][kind_index];
        let rank = n(rank as u64);
        let tree = enums::tree_unrank(&rank, kind).unwrap();
        prop_assert_eq!(enums::tree_rank(&tree, kind).unwrap(), rank);
    }

    #[test]
    fn trees_survive_a_textual_round_trip(rank in any::<u32>()) {
        let tree = enums::tree_unrank(&n(rank as u64), PairingKind::RosenbergStrong).unwrap();
        let reparsed: enums::FullBinaryTree = tree.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, tree);
    }

    #[test]
    fn sequences_round_trip_at_random_ranks(rank in any::<u32>(), zeta in any::<bool>()) {
        let kind = PairingKind::RosenbergStrong;
        let rank = n(rank as u64);
        if zeta {
            let seq = enums::seq_unrank_zeta(&rank, kind, TuplingFamily::FoldCantor).unwrap();
            prop_assert_eq!(enums::seq_rank_zeta(&seq, kind, TuplingFamily::FoldCantor).unwrap(), rank);
        } else {
            let seq = enums::seq_unrank_xi(&rank, kind).unwrap();
            prop_assert_eq!(enums::seq_rank_xi(&seq, kind).unwrap(), rank);
        }
    }

    #[test]
    fn rs_codes_respect_the_bit_bound(x in any::<u32>(), y in any::<u32>()) {
        // Coordinates below 2^32, so the two-coordinate code fits 64 bits.
        let code = pairings::rosenberg_strong(&n(x as u64), &n(y as u64));
        prop_assert!(natmath::digit_length(&code, 2).unwrap() <= 64);
    }

    #[test]
    fn max_coordinate_is_the_integer_root(point in point_strategy(50_000)) {
        let d = point.len();
        let p = nat_point(&point);
        let code = tuplings::rs_encode(&p, d).unwrap();
        let root = natmath::iroot(&code, d as u32).unwrap();
        prop_assert_eq!(Some(&root), p.iter().max());
    }
}

/// Decoding distinct codes through a shared verdict machinery: the generic
/// checkers agree with hand-rolled loops on a failure case (the Cantor
/// pairing does not have cubic shells).
#[test]
fn cubic_claim_on_cantor_fails_exactly_at_the_known_pair() {
    let verdict =
        shells::check_shell_numbering_prefix(&tuplings::cantor(), &ShellNumbering::cubic(2), 50)
            .unwrap();
    let Verdict::Fail(ce) = verdict else {
        panic!("expected a counterexample");
    };
    assert_eq!(ce.code, n(4));
    assert_eq!(ce.point, nat_point(&[1, 1]));
    assert_eq!(ce.prior, Some((nat_point(&[0, 2]), n(3))));
}
