//! Distinguishing-number computations against brute-force oracles, plus the
//! lifting constructions and certificate soundness.

mod common;

use permdn_core::blocks::some_maximal_block_system;
use permdn_core::bounds::{base_size, bound_checks};
use permdn_core::catalog::builtin_entry;
use permdn_core::coloring::preserves;
use permdn_core::construct;
use permdn_core::reduce::{extend_partition, graded_subset};
use permdn_core::search::{
    distinguishing_number, exhaustive_refute, random_search, RefuteOutcome, SearchLimits,
};
use permdn_core::{
    stabilizer_is_trivial, Coloring, Permutation, PermutationGroup, StabilizerChain,
};

use common::{
    brute_closure, brute_distinguishing_number, preserves_coloring, random_subgroup_corpus,
    rgs_exactly,
};

/// Independent certificate check: scan the full brute-force element list.
fn oracle_accepts(degree: usize, gens: &[Permutation], coloring: &Coloring) -> bool {
    let elements = brute_closure(degree, gens);
    !elements
        .iter()
        .any(|p| !p.is_identity() && preserves(p, coloring))
}

#[test]
fn distinguishing_number_matches_oracle_on_corpus() {
    let corpus = random_subgroup_corpus(0xD157, 60, 5000);
    let limits = SearchLimits::default();
    for group in &corpus {
        let elements = brute_closure(group.degree(), group.generators());
        let (expected, _) = brute_distinguishing_number(group.degree(), &elements);
        let result = distinguishing_number(group, &limits);
        assert_eq!(
            result.value(),
            Some(expected),
            "group {:?} (order {})",
            group,
            elements.len()
        );
        assert!(
            oracle_accepts(group.degree(), group.generators(), &result.certificate),
            "certificate fails the independent scan for {group:?}"
        );
    }
}

#[test]
fn canonical_enumeration_is_complete_at_small_degree() {
    // For degree <= 6 and k <= 3 the canonical search finds a distinguishing
    // coloring iff the full k^n function enumeration does.
    let corpus = random_subgroup_corpus(0xCA30, 25, 1000);
    for group in corpus.iter().filter(|g| g.degree() <= 6) {
        let n = group.degree();
        let elements = brute_closure(n, group.generators());
        let chain = StabilizerChain::build(group);
        for k in 1..=3.min(n) {
            // Full enumeration over all functions with exactly k used colors.
            let mut full_found = false;
            for code in 0..(k as u64).pow(n as u32) {
                let mut colors = Vec::with_capacity(n);
                let mut c = code;
                for _ in 0..n {
                    colors.push((c % k as u64) as usize);
                    c /= k as u64;
                }
                let used: std::collections::HashSet<usize> = colors.iter().copied().collect();
                if used.len() != k {
                    continue;
                }
                if !elements
                    .iter()
                    .any(|p| !p.is_identity() && preserves_coloring(p, &colors))
                {
                    full_found = true;
                    break;
                }
            }
            let canonical = exhaustive_refute(&chain, k, 1 << 20).unwrap();
            let canonical_found = matches!(canonical, RefuteOutcome::Found { .. });
            assert_eq!(
                canonical_found, full_found,
                "degree {n} k {k} group {group:?}"
            );
        }
    }
}

#[test]
fn random_search_certificates_reverify() {
    let corpus = random_subgroup_corpus(0x5EED, 30, 5000);
    for group in &corpus {
        let chain = StabilizerChain::build(group);
        for k in 2..=3.min(group.degree()) {
            if let Some(cert) = random_search(&chain, k, 200, 77).unwrap() {
                assert!(oracle_accepts(group.degree(), group.generators(), &cert));
                assert!(cert.color_count() <= k);
            }
        }
    }
}

#[test]
fn d_two_iff_regular_subset_orbit() {
    // D = 2 exactly when some subset has trivial setwise stabilizer; compare
    // the library verdict against a direct subset sweep.
    let corpus = random_subgroup_corpus(0x2222, 40, 2000);
    for group in corpus.iter().filter(|g| g.degree() <= 10) {
        let n = group.degree();
        let elements = brute_closure(n, group.generators());
        let mut some_regular_subset = false;
        'subsets: for mask in 1u32..(1 << n) - 1 {
            for p in &elements {
                if p.is_identity() {
                    continue;
                }
                let image = permdn_core::golay::permute_mask(mask, p);
                if image == mask {
                    continue 'subsets;
                }
            }
            some_regular_subset = true;
            break;
        }
        let d = distinguishing_number(group, &SearchLimits::default());
        assert_eq!(
            d.value() == Some(2),
            some_regular_subset && elements.len() > 1,
            "{group:?}"
        );
    }
}

#[test]
fn gl23_witness_partition_from_the_text() {
    // The partition {{e1},{e2}, rest} distinguishes GL(2,3) on the eight
    // nonzero vectors: e1 = (1,0) is point 0, e2 = (0,1) is point 2.
    let gl23 = construct::general_linear_on_vectors(2, 3).unwrap();
    let chain = StabilizerChain::build(&gl23);
    let mut colors = vec![2usize; 8];
    colors[0] = 0;
    colors[2] = 1;
    let witness = Coloring::new(colors).unwrap().canonical();
    assert_eq!(stabilizer_is_trivial(&chain, &witness).unwrap(), None);
    // And no 2-coloring works.
    match exhaustive_refute(&chain, 2, 1 << 20).unwrap() {
        RefuteOutcome::Refuted { examined, .. } => assert_eq!(examined, 256),
        other => panic!("GL(2,3) has no distinguishing 2-coloring, got {other:?}"),
    }
}

#[test]
fn sym5_and_alt5_on_partitions_certificate() {
    // The 2-coloring of the 15 partitions of shape 1|2|2 whose small class
    // is {1|23|45, 1|24|35, 2|13|45} distinguishes both induced actions.
    let special = [
        construct::partition_122_index(0, (1, 2), (3, 4)),
        construct::partition_122_index(0, (1, 3), (2, 4)),
        construct::partition_122_index(1, (0, 2), (3, 4)),
    ];
    let coloring = Coloring::from_subset(15, &special).unwrap();
    for base in [
        construct::symmetric_group(5),
        construct::alternating_group(5),
    ] {
        let action = construct::action_on_122_partitions(&base);
        let chain = StabilizerChain::build(&action);
        assert_eq!(
            stabilizer_is_trivial(&chain, &coloring).unwrap(),
            None,
            "degree-15 action of {base:?}"
        );
        assert!(oracle_accepts(15, action.generators(), &coloring));
    }
}

/// Imprimitive semiprimitive test family: linear actions, coset actions of
/// simple groups, and regular groups.
fn imprimitive_semiprimitive_family() -> Vec<(String, PermutationGroup)> {
    let mut out: Vec<(String, PermutationGroup)> = Vec::new();
    for name in ["GL(2,3)", "GL(2,4)", "GL(2,5)", "SL(2,3)", "SL(2,5)"] {
        out.push((
            name.to_string(),
            builtin_entry(name).unwrap().group().unwrap(),
        ));
    }
    // Quasiprimitive but imprimitive: simple groups on cosets of
    // non-maximal subgroups.
    let a5 = construct::alternating_group(5);
    let c5 = construct::cyclic_group(5);
    out.push((
        "Alt(5) on cosets of C5".into(),
        construct::coset_action(&a5, &c5, 100).unwrap(),
    ));
    let c3_in_a5 = PermutationGroup::new(
        5,
        vec![Permutation::cycle(5, &[0, 1, 2]).unwrap()],
    )
    .unwrap();
    out.push((
        "Alt(5) on cosets of C3".into(),
        construct::coset_action(&a5, &c3_in_a5, 100).unwrap(),
    ));
    let v4 = PermutationGroup::new(
        5,
        vec![
            permdn_core::parse_cycles("(1,2)(3,4)", 5).unwrap(),
            permdn_core::parse_cycles("(1,3)(2,4)", 5).unwrap(),
        ],
    )
    .unwrap();
    out.push((
        "Alt(5) on cosets of V4".into(),
        construct::coset_action(&a5, &v4, 100).unwrap(),
    ));
    let c2_in_a5 = PermutationGroup::new(
        5,
        vec![permdn_core::parse_cycles("(1,2)(3,4)", 5).unwrap()],
    )
    .unwrap();
    out.push((
        "Alt(5) on cosets of C2".into(),
        construct::coset_action(&a5, &c2_in_a5, 100).unwrap(),
    ));
    let psl27 = construct::psl2(7).unwrap();
    let c7 = PermutationGroup::new(
        8,
        vec![permdn_core::parse_cycles("(1,2,3,4,5,6,7)", 8).unwrap()],
    )
    .unwrap();
    out.push((
        "PSL(2,7) on cosets of C7".into(),
        construct::coset_action(&psl27, &c7, 200).unwrap(),
    ));
    // Regular groups: every normal subgroup is semiregular.
    for (label, group) in [
        ("C4 regular", construct::cyclic_group(4)),
        ("C6 regular", construct::cyclic_group(6)),
        ("C8 regular", construct::cyclic_group(8)),
        ("C9 regular", construct::cyclic_group(9)),
        ("C10 regular", construct::cyclic_group(10)),
        ("C12 regular", construct::cyclic_group(12)),
        ("C15 regular", construct::cyclic_group(15)),
        (
            "V4 regular",
            PermutationGroup::new(
                4,
                vec![
                    permdn_core::parse_cycles("(1,2)(3,4)", 4).unwrap(),
                    permdn_core::parse_cycles("(1,3)(2,4)", 4).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "Q8 regular",
            PermutationGroup::new(
                8,
                vec![
                    permdn_core::parse_cycles("(1,2,3,4)(5,8,7,6)", 8).unwrap(),
                    permdn_core::parse_cycles("(1,5,3,7)(2,6,4,8)", 8).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "C2xC4 regular",
            PermutationGroup::new(
                8,
                vec![
                    permdn_core::parse_cycles("(1,2,3,4)(5,6,7,8)", 8).unwrap(),
                    permdn_core::parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "C3xC3 regular",
            PermutationGroup::new(
                9,
                vec![
                    permdn_core::parse_cycles("(1,2,3)(4,5,6)(7,8,9)", 9).unwrap(),
                    permdn_core::parse_cycles("(1,4,7)(2,5,8)(3,6,9)", 9).unwrap(),
                ],
            )
            .unwrap(),
        ),
    ] {
        out.push((label.to_string(), group));
    }
    out
}

#[test]
fn family_really_is_imprimitive_semiprimitive() {
    let family = imprimitive_semiprimitive_family();
    assert!(family.len() >= 20);
    for (label, group) in &family {
        assert!(permdn_core::is_transitive(group), "{label}");
        assert!(!permdn_core::is_primitive(group), "{label}");
        assert!(
            permdn_core::is_semiprimitive(group, 1_000_000).unwrap(),
            "{label}"
        );
    }
}

#[test]
fn lifted_certificates_reverify() {
    // For every family member and maximal block system: lift a quotient
    // certificate and re-verify, and check D(G) <= D(quotient).
    let limits = SearchLimits::default();
    for (label, group) in imprimitive_semiprimitive_family() {
        let system = some_maximal_block_system(&group).unwrap();
        let quotient = permdn_core::quotient_action(&group, &system).unwrap();
        let q_result = distinguishing_number(quotient.image(), &limits);
        let g_result = distinguishing_number(&group, &limits);
        let (Some(dq), Some(dg)) = (q_result.value(), g_result.value()) else {
            panic!("{label}: family members are small enough for exact values");
        };
        assert!(dg <= dq, "{label}: monotonicity D(G) <= D(G^Sigma)");
        if q_result.certificate.color_count() >= 2 {
            let lifted = extend_partition(&group, &system, &q_result.certificate).unwrap();
            let chain = StabilizerChain::build(&group);
            assert_eq!(
                stabilizer_is_trivial(&chain, &lifted).unwrap(),
                None,
                "{label}: lifted certificate must distinguish"
            );
            assert!(oracle_accepts(group.degree(), group.generators(), &lifted));
        }
    }
}

#[test]
fn graded_subset_whenever_cells_are_large_enough() {
    let mut verified = 0;
    for (label, group) in imprimitive_semiprimitive_family() {
        let system = some_maximal_block_system(&group).unwrap();
        let cells = system.cell_count();
        if system.cells().iter().any(|c| c.len() + 1 < cells) {
            continue;
        }
        let coloring = graded_subset(&group, &system).unwrap();
        let chain = StabilizerChain::build(&group);
        assert_eq!(
            stabilizer_is_trivial(&chain, &coloring).unwrap(),
            None,
            "{label}: graded subset has nontrivial stabilizer"
        );
        verified += 1;
    }
    assert!(verified >= 5, "the family exercises the graded construction");
}

#[test]
fn wreath_distinguishing_numbers() {
    // Sym(m) wr Sym(m) on m^2 points has distinguishing number m + 1.
    let limits = SearchLimits::default();
    for m in [2usize, 3] {
        let w = construct::wreath_imprimitive(m, m).unwrap();
        let result = distinguishing_number(&w, &limits);
        assert_eq!(result.value(), Some(m + 1), "m = {m}");
    }
}

#[test]
fn base_size_examples() {
    let gl23 = construct::general_linear_on_vectors(2, 3).unwrap();
    let chain = StabilizerChain::build(&gl23);
    // A basis of F_3^2 pins down a linear map: checked exhaustively.
    let b = base_size(&chain, 100_000);
    assert_eq!(b.size, 2);
    assert!(b.exact);

    let result = distinguishing_number(&gl23, &SearchLimits::default());
    let report = bound_checks(&gl23, &chain, result.value().unwrap(), 100_000);
    assert!(report.all_ok());
}

#[test]
fn seeded_determinism_is_byte_for_byte() {
    let group = builtin_entry("GL(2,4)").unwrap().group().unwrap();
    let limits = SearchLimits {
        trials: 64,
        seed: 31337,
        coloring_budget: 1 << 20,
        workers: 1,
    };
    let a = distinguishing_number(&group, &limits);
    let b = distinguishing_number(&group, &limits);
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
    // Worker count does not change the result either.
    let parallel = distinguishing_number(
        &group,
        &SearchLimits {
            workers: 3,
            ..limits
        },
    );
    assert_eq!(format!("{a:?}"), format!("{parallel:?}"));
}

#[test]
fn refutation_modes_and_counts_are_recorded() {
    let sym5 = construct::symmetric_group(5);
    let result = distinguishing_number(&sym5, &SearchLimits::default());
    assert_eq!(result.value(), Some(5));
    // k = 2 is pigeonholed (120 > 32); k = 3, 4 are exhausted.
    assert_eq!(result.refutations.len(), 3);
    assert_eq!(
        result.refutations[0].mode,
        permdn_core::search::RefutationMode::Pigeonhole
    );
    for r in &result.refutations[1..] {
        assert_eq!(r.mode, permdn_core::search::RefutationMode::Exhaustive);
        assert_eq!(r.examined, rgs_exactly(5, r.k).len() as u64);
    }
}
