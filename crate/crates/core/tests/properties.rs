mod common;

use std::sync::Arc;

use proptest::prelude::*;
use sds_core::constructions::{catalog, EntryKind};
use sds_core::groups::{Automorphism, Element, Group, GroupSpec};
use sds_core::matrices::{
    char_matrix, gram_sum, is_type1, is_type2, r_matrix, read_matrix, write_matrix, IntMatrix, MatrixKind,
};
use sds_core::sds::{
    canonical_form, difference_spectrum, equivalent, feasible_params, parse_family, type_compatible, write_family,
    Block, SdsFamily, Symmetry, SymmetryType,
};

use common::naive_spectrum;

const SPECS: [&str; 10] = [
    "cyclic:1",
    "cyclic:2",
    "cyclic:7",
    "cyclic:12",
    "cyclic:15",
    "cyclic:31",
    "ea:2^3:1,1,0,1",
    "ea:3^2:2,2,1",
    "ea:5^2:2,0,1",
    "ea:3^3:1,2,0,1",
];

fn group_strategy() -> impl Strategy<Value = Arc<Group>> {
    prop::sample::select(SPECS.to_vec()).prop_map(|s| Arc::new(Group::new(s.parse::<GroupSpec>().unwrap()).unwrap()))
}

fn block_in(g: &Arc<Group>, seed: &[bool]) -> Block {
    let members =
        (0..g.order()).filter(|&i| seed[i % seed.len()] ^ (i % 3 == seed.len() % 3)).map(|i| Element(i as u32));
    Block::from_elements(g, members).unwrap()
}

/// A group together with up to four pseudo-random blocks.
fn family_strategy() -> impl Strategy<Value = SdsFamily> {
    (group_strategy(), prop::collection::vec(prop::collection::vec(any::<bool>(), 1..40), 1..5)).prop_map(
        |(g, seeds)| {
            let blocks = seeds.iter().map(|s| block_in(&g, s)).collect();
            SdsFamily::new(&g, blocks).unwrap()
        },
    )
}

fn cyclic_family_strategy() -> impl Strategy<Value = SdsFamily> {
    (3u32..14, prop::collection::vec(prop::collection::vec(any::<bool>(), 14), 1..5)).prop_map(|(n, seeds)| {
        let g = Arc::new(Group::cyclic(n).unwrap());
        let blocks = seeds
            .iter()
            .map(|s| Block::from_indices(&g, &(0..n).filter(|&i| s[i as usize]).collect::<Vec<_>>()).unwrap())
            .collect();
        SdsFamily::new(&g, blocks).unwrap()
    })
}

/// Applies an automorphism, a block permutation and per-block operations chosen by `choice`.
fn transform(f: &SdsFamily, choice: &[u32], allow_translation: bool) -> SdsFamily {
    let g = f.group();
    let auts: Vec<Automorphism> = g.automorphisms().unwrap().collect();
    let phi = &auts[choice[0] as usize % auts.len()];
    let m = f.blocks().len();
    let mut order: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        order.swap(i, choice[i] as usize % (i + 1));
    }
    let blocks = order
        .iter()
        .enumerate()
        .map(|(slot, &i)| {
            let c = choice[4 + slot];
            let mut b = f.blocks()[i].image(phi);
            if c & 1 == 1 {
                b = b.negate();
            }
            if c & 2 == 2 {
                b = b.complement();
            }
            if allow_translation {
                b = b.translate(Element(c / 4 % g.order() as u32));
            }
            b
        })
        .collect();
    SdsFamily::new(g, blocks).unwrap()
}

proptest! {
    #[test]
    fn group_axioms(g in group_strategy(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let n = g.order() as u32;
        let (a, b, c) = (Element(a % n), Element(b % n), Element(c % n));
        prop_assert_eq!(g.add(a, b), g.add(b, a));
        prop_assert_eq!(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
        prop_assert_eq!(g.add(a, g.neg(a)), g.zero());
        prop_assert_eq!(g.add(g.sub(a, b), b), a);
        if g.is_field() {
            let lhs = g.field_mul(a, g.add(b, c)).unwrap();
            let rhs = g.add(g.field_mul(a, b).unwrap(), g.field_mul(a, c).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn automorphisms_are_additive(g in group_strategy(), a in 0u32..1000, b in 0u32..1000) {
        let n = g.order() as u32;
        let (a, b) = (Element(a % n), Element(b % n));
        let auts: Vec<Automorphism> = g.automorphisms().unwrap().collect();
        prop_assert_eq!(auts.len() as u64, g.automorphism_count());
        for phi in &auts {
            prop_assert_eq!(phi.apply(g.add(a, b)), g.add(phi.apply(a), phi.apply(b)));
        }
    }

    #[test]
    fn block_operations(f in family_strategy(), t in 0u32..1000) {
        let b = &f.blocks()[0];
        let g = b.group();
        let t = Element(t % g.order() as u32);
        prop_assert_eq!(b.negate().symmetry(), b.symmetry());
        prop_assert_eq!(&b.complement().complement(), b);
        prop_assert_eq!(&b.translate(t).translate(g.neg(t)), b);
        prop_assert_eq!(b.len() + b.complement().len(), g.order());
        if b.symmetry() == Symmetry::Skew {
            let mut rest = b.complement();
            prop_assert!(rest.contains(Element::ZERO));
            rest = Block::from_elements(g, rest.iter().filter(|&e| e != Element::ZERO)).unwrap();
            prop_assert_eq!(rest, b.negate());
        }
    }

    #[test]
    fn spectrum_matches_pair_enumeration(f in family_strategy()) {
        let s = difference_spectrum(f.blocks()).unwrap();
        let naive = naive_spectrum(f.blocks());
        for e in f.group().elements().skip(1) {
            prop_assert_eq!(s.count(e) as usize, naive[e.index()]);
        }
    }

    #[test]
    fn equivalence_is_an_equivalence(f in cyclic_family_strategy(), choice in prop::collection::vec(0u32..10_000, 8), allow in any::<bool>()) {
        prop_assert!(equivalent(&f, &f, allow).unwrap());
        let g = transform(&f, &choice, allow);
        prop_assert!(equivalent(&f, &g, allow).unwrap());
        prop_assert!(equivalent(&g, &f, allow).unwrap());
        prop_assert_eq!(canonical_form(&f, allow).unwrap(), canonical_form(&g, allow).unwrap());
        let reversed: Vec<usize> = (0..f.blocks().len()).rev().collect();
        prop_assert_eq!(canonical_form(&f.permuted(&reversed), allow).unwrap(), canonical_form(&f, allow).unwrap());
    }

    #[test]
    fn family_text_round_trip(f in family_strategy()) {
        let text = write_family(&f);
        let back = parse_family(&text).unwrap();
        prop_assert_eq!(back.blocks(), f.blocks());
        prop_assert_eq!(back.group().spec(), f.group().spec());
    }

    #[test]
    fn indexed_matrices(f in family_strategy()) {
        let g = f.group();
        let x = char_matrix(&f.blocks()[0]);
        prop_assert!(is_type1(x.as_int()));
        let r = r_matrix(g);
        prop_assert_eq!(&r * &r, IntMatrix::identity(g.order()));
        let xr = (x.as_int() * &r).with_group(g).unwrap();
        prop_assert!(is_type2(&xr));
        let (kind, back) = read_matrix(&write_matrix(&x, MatrixKind::Plain)).unwrap();
        prop_assert_eq!(kind, MatrixKind::Plain);
        prop_assert_eq!(back.as_int(), x.as_int());
    }
}

#[test]
fn feasible_rows_satisfy_the_square_identity() {
    for n in (3..=63).step_by(2) {
        let rows = feasible_params(n).unwrap();
        for p in &rows {
            assert_eq!(p.sum_of_squares(), 4 * n as i64, "{p}");
            assert!(p.lambda >= 0 && p.lambda_matches_sizes());
            assert!(p.k.windows(2).all(|w| w[0] >= w[1]) && 2 * p.k[0] < n);
            assert!(type_compatible(p, &SymmetryType::free(4)));
        }
    }
}

/// Off-diagonal Gram entries are `Σ(n − 4k_i) + 4·(difference count)`.
#[test]
fn spectrum_read_off_the_gram_matrix() {
    for e in catalog().unwrap() {
        let g = e.group();
        let n = g.order() as i32;
        let gram = gram_sum(e.family.blocks());
        let offset: i32 = e.family.sizes().iter().map(|&k| n - 4 * k as i32).sum();
        let s = difference_spectrum(e.family.blocks()).unwrap();
        for y in 1..g.order() {
            let d = g.sub(Element(0), Element(y as u32));
            assert_eq!(gram.get(0, y), offset + 4 * s.count(d) as i32, "{} at {y}", e.id);
        }
    }
}

#[test]
fn verified_families_satisfy_the_square_identity() {
    for e in catalog().unwrap().into_iter().filter(|e| e.kind == EntryKind::Sds) {
        let p = e.check().unwrap();
        assert_eq!(p.sum_of_squares(), 4 * p.n as i64, "{}", e.id);
    }
}
