//! Property tests for the structural invariants.

use proptest::prelude::*;

use projembed::catalog::{catalog_get, catalog_names, Params};
use projembed::chartab::CharacterTable;
use projembed::config::Config;
use projembed::covering::{joint_surviving_probes, Covering};
use projembed::cyclotomic::Cyclotomic;
use projembed::group::Group;
use projembed::presentation::{check_consistency, parse_presentation};

fn cfg() -> Config {
    Config::default()
}

fn cyclo_strategy(n: u64) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((0..n as i64, -4i64..=4), 1..5).prop_map(move |terms| {
        let t: Vec<(i64, num_bigint::BigInt)> = terms
            .into_iter()
            .map(|(e, c)| (e, num_bigint::BigInt::from(c)))
            .collect();
        Cyclotomic::from_powers(n, &t).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // ring axioms at a mix of prime-power and composite conductors
    #[test]
    fn cyclotomic_ring_axioms(
        n in prop::sample::select(vec![3u64, 4, 8, 9, 12, 16, 27, 40, 90, 360]),
        seed in 0u64..1_000_000,
    ) {
        let mut s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(7);
        let mut next = move || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            s
        };
        let rand_elt = |next: &mut dyn FnMut() -> u64| {
            let terms: Vec<(i64, num_bigint::BigInt)> = (0..3)
                .map(|_| {
                    (
                        (next() % n) as i64,
                        num_bigint::BigInt::from((next() % 9) as i64 - 4),
                    )
                })
                .collect();
            Cyclotomic::from_powers(n, &terms).unwrap()
        };
        let a = rand_elt(&mut next);
        let b = rand_elt(&mut next);
        let c = rand_elt(&mut next);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // conjugation fixes the absolute square
        prop_assert_eq!(a.abs_square().conjugate(), a.abs_square());
    }

    #[test]
    fn cyclotomic_scaled_root_detection(
        n in prop::sample::select(vec![5u64, 8, 9, 12]),
        j in 0u64..12,
        d in 1i64..6,
    ) {
        let j = j % n;
        let z = Cyclotomic::root_of_unity(n, j as i64).unwrap();
        let a = z.scale(&num_bigint::BigInt::from(d));
        // as_scaled_root succeeds exactly when abs_square equals d^2
        prop_assert_eq!(a.as_scaled_root(&num_bigint::BigInt::from(d)), Some(j));
        prop_assert_eq!(a.abs_square().as_integer(), Some((d * d).into()));
    }
}

#[test]
fn collection_is_associative_on_catalog_groups() {
    let c = cfg();
    for name in ["Q8", "16#13", "Phi2(22)", "Phi3(211)a"] {
        let p = if name.starts_with("Phi") { 3 } else { 2 };
        let entry = catalog_get(name, &Params { p, k: 1 }, &c).unwrap();
        let g = entry.build_group(&c).unwrap();
        let n = g.order() as u64;
        let mut s = 0xdeadbeefu64;
        for _ in 0..500 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = ((s >> 20) % n) as u32;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = ((s >> 20) % n) as u32;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let d = ((s >> 20) % n) as u32;
            assert_eq!(g.mul(g.mul(a, b), d), g.mul(a, g.mul(b, d)), "{name}");
        }
    }
}

/// Enlarging the summand set never enlarges the joint projective kernel.
#[test]
fn joint_kernel_is_monotone() {
    let c = cfg();
    let entry = catalog_get("Phi2(1^3)", &Params { p: 3, k: 1 }, &c).unwrap();
    let cov = entry.load_covering(&c).unwrap();
    let table = CharacterTable::compute(&cov.gstar, &c).unwrap();
    let probes: Vec<u32> = (1..cov.group.order() as u32).collect();
    for lam in cov.central_characters() {
        let fiber = cov.irr_over(&table, &lam).unwrap();
        for take in 1..=fiber.len().min(4) {
            let small = &fiber[..take - 1];
            let large = &fiber[..take];
            let s_small = joint_surviving_probes(&cov, &table, small, &probes).unwrap();
            let s_large = joint_surviving_probes(&cov, &table, large, &probes).unwrap();
            for g in &s_large {
                assert!(
                    s_small.contains(g),
                    "survivor {g} appeared after enlarging the set"
                );
            }
        }
    }
}

/// Pretty-printing any catalog presentation reparses to an identical
/// structure.
#[test]
fn catalog_presentations_round_trip() {
    let c = cfg();
    for name in catalog_names() {
        let needs_five =
            name.contains("1^5") || name == "Phi6(2111)a" || name.starts_with("Phi4(221)");
        let p = if needs_five { 5 } else { 3 };
        let entry = catalog_get(name, &Params { p, k: 1 }, &c).unwrap();
        let printed = entry.group.pretty_print();
        let reparsed = parse_presentation(&printed, &c).unwrap();
        assert_eq!(entry.group, reparsed, "{name}");
        assert!(check_consistency(&reparsed).passed(), "{name}");
    }
}

/// The quotient map of a suffix covering preserves products.
#[test]
fn covering_quotient_map_is_a_homomorphism() {
    let c = cfg();
    let entry = catalog_get("Phi2(1^3)", &Params { p: 3, k: 1 }, &c).unwrap();
    let cov = entry.load_covering(&c).unwrap();
    let n = cov.gstar.order() as u64;
    let mut s = 0x12345678u64;
    for _ in 0..1000 {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let a = ((s >> 16) % n) as u32;
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let b = ((s >> 16) % n) as u32;
        let lhs = cov.quotient_map[cov.gstar.mul(a, b) as usize];
        let rhs = cov
            .group
            .mul(cov.quotient_map[a as usize], cov.quotient_map[b as usize]);
        assert_eq!(lhs, rhs);
    }
}

/// Degenerate covering with full kernel: the quotient is trivial and both
/// degrees are 1.
#[test]
fn full_kernel_covering_gives_tau_one() {
    let c = cfg();
    let text = "pcgroup K\ngen a b\nord a=2 b=2\nend\nkernel a b\nquotient T\n";
    let spec = projembed::presentation::parse_covering(text, &c).unwrap();
    let cov = Covering::load(&spec, &c).unwrap();
    let table = CharacterTable::compute(&cov.gstar, &c).unwrap();
    let tr = projembed::tau::tau(&cov, &table, &c).unwrap();
    let ti = projembed::tau::tau_irr(&cov, &table, &c).unwrap();
    assert_eq!(tr.value, Some(1));
    assert_eq!(ti.value, Some(1));
}

/// The trivial covering of a nonabelian group computes delta and tau from
/// ordinary characters; Q16's faithful 2-dimensional character is not
/// projectively faithful, so tau exceeds delta.
#[test]
fn ordinary_versus_projective_kernels_differ_on_q16() {
    let c = cfg();
    let text = "pcgroup Q16\ngen a b\nord a=2 b=8\npow a = b^4\nconj b^a = b^7\nend\n";
    let pres = parse_presentation(text, &c).unwrap();
    let g = std::sync::Arc::new(Group::build(pres, &c).unwrap());
    let table = CharacterTable::compute(&g, &c).unwrap();
    let cov = Covering::trivial(g);
    let d = projembed::tau::delta(&cov, &table, &c).unwrap();
    let t = projembed::tau::tau(&cov, &table, &c).unwrap();
    assert_eq!(d.value, Some(2));
    assert_eq!(t.value, Some(3));
    let di = projembed::tau::delta_irr(&cov, &table, &c).unwrap();
    assert_eq!(di.value, Some(2));
}
