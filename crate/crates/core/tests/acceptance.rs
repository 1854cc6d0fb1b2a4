//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p sylow-core --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::collections::BTreeMap;

use sylow_core::catalog;
use sylow_core::classifier::{self, Decomposition, Witness};
use sylow_core::error::Error;
use sylow_core::families::{self, OmegaPlusVariant, SpCase, ExceptionalCase};
use sylow_core::groupengine::{self, FiniteGroup};
use sylow_core::numtheory::{self, ZsigmondyKind};

fn pass(criterion: u32, what: &str) {
    println!("ACCEPTANCE {criterion} PASS: {what}");
}

type Expectation = (&'static str, FiniteGroup, &'static [(u64, u64)]);

/// Criterion 1: brute-force counts match the stated values, including the
/// deep entries PSL3(4) and PSL2(16).
#[test]
fn criterion_1_brute_force_agreement() {
    let expectations: [Expectation; 7] = [
        ("A5", groupengine::alternating_group(5).unwrap(), &[(5, 6), (3, 10)]),
        ("PSL2(7)", groupengine::psl(2, 7).unwrap(), &[(7, 8), (3, 28)]),
        ("PSL3(3)", groupengine::psl(3, 3).unwrap(), &[(13, 144)]),
        ("PSL2(4)", groupengine::psl(2, 4).unwrap(), &[(5, 6)]),
        ("Sp4(2)", groupengine::sp4_2().unwrap(), &[(5, 36)]),
        ("PSL2(16)", groupengine::psl(2, 16).unwrap(), &[(17, 120)]),
        ("PSL2(8)", groupengine::psl(2, 8).unwrap(), &[(7, 36)]),
    ];
    for (name, group, counts) in &expectations {
        for &(p, expected) in *counts {
            let got = group.count_sylow_by_elements(p).unwrap().n_p;
            assert_eq!(got, expected, "n_{p}({name})");
        }
    }
    // deep: PSL3(4), including the non-cyclic Sylow 3-subgroup case
    let psl34 = groupengine::psl(3, 4).unwrap();
    assert_eq!(psl34.count_sylow_by_elements(5).unwrap().n_p, 2016);
    assert_eq!(psl34.count_sylow_by_normalizer(3).unwrap().n_p, 280);
    pass(1, "brute-force counts match on A5, PSL2(4/7/8/16), PSL3(3), Sp4(2), PSL3(4)");
}

/// Criterion 2: wherever p || |G|, the element-count and conjugacy-orbit
/// oracles agree and n_p * |N_G(P)| = |G|, across the full catalog.
#[test]
fn criterion_2_oracle_cross_consistency() {
    let mut entries = catalog::default_catalog();
    entries.extend(catalog::deep_catalog_extension());
    let mut pairs_checked = 0;
    for entry in &entries {
        let group =
            catalog::build_group(&entry.constructor, &entry.parameters, 1_000_000).unwrap();
        let order = group.order();
        for p in numtheory::factorize(order).unwrap().primes() {
            if !(order / p).is_multiple_of(p) {
                let by_elements = group.count_sylow_by_elements(p).unwrap();
                let by_conjugacy = group.count_sylow_by_conjugacy(p).unwrap();
                assert_eq!(by_elements.n_p, by_conjugacy.n_p, "{} p={p}", entry.name);
                let sylow = group.find_sylow_subgroup(p).unwrap();
                let normalizer = group.normalizer_order(&sylow).unwrap();
                assert_eq!(by_elements.n_p * normalizer, order, "{} p={p}", entry.name);
                pairs_checked += 1;
            }
        }
    }
    assert!(pairs_checked >= 20);
    pass(2, "both oracles and the normalizer identity agree on every catalog (group, p)");
}

/// Criterion 3: closed-form formulas reproduce the stated values exactly.
#[test]
fn criterion_3_formula_values() {
    assert_eq!(families::gl_np(3, 3, 13).unwrap().value, 144);
    assert_eq!(families::gl_np(3, 2, 7).unwrap().value, 8);
    assert_eq!(families::gl_np(3, 5, 31).unwrap().value, 4000);
    assert_eq!(families::gl_np(3, 4, 7).unwrap().value, 960);
    assert_eq!(families::gu_np(3, 3, 7).unwrap().value, 288);
    assert_eq!(families::gu_np(3, 2, 3).unwrap().value, 24);
    assert_eq!(families::sp_np(2, 2, 5, SpCase::Primitive2e).unwrap().value, 36);
    assert_eq!(families::omega_plus_np(OmegaPlusVariant::SubgroupE, 2, 2, 5).unwrap().value, 336);
    assert_eq!(families::omega_plus_np(OmegaPlusVariant::FullN, 3, 2, 5).unwrap().value, 336);
    // formula against brute force where both apply
    let psl33 = groupengine::psl(3, 3).unwrap();
    assert_eq!(psl33.count_sylow_by_elements(13).unwrap().n_p, 144);
    pass(3, "gl/gu/sp/omega+ torus formulas reproduce every quoted value");
}

/// Criterion 4: for p <= 50 every non-prime-power admissible value is one
/// of the four exceptional closed forms, and decompose inverts the census.
#[test]
fn criterion_4_classifier_completeness() {
    for p in (2u64..=50).filter(|&p| numtheory::is_prime(p)) {
        let admissible = classifier::admissible_sylow_numbers(p).unwrap();
        let by_value: BTreeMap<u64, &classifier::AdmissibleValue> =
            admissible.iter().map(|a| (a.value, a)).collect();
        // the only legal non-prime-power values
        let mut allowed: Vec<u64> = Vec::new();
        if p == 13 {
            allowed.push(144);
        }
        if p >= 5 {
            allowed.push(closed_form_value(ExceptionalCase::Psl2P(p)));
        }
        if p > 3 && numtheory::is_fermat_prime(p) {
            allowed.push(closed_form_value(ExceptionalCase::Psl2PMinus1(p)));
        }
        if p > 3 && numtheory::is_mersenne_prime(p) {
            allowed.push(closed_form_value(ExceptionalCase::Psl2PPlus1(p)));
        }
        for a in &admissible {
            let is_pp = a.value == 1 || numtheory::as_prime_power(a.value).is_some();
            if !is_pp {
                assert!(allowed.contains(&a.value), "p={p}: stray value {}", a.value);
            }
        }
        // round trip over the whole residue class below p^2
        let mut n = 1;
        while n < p * p {
            let d = classifier::decompose(n, p).unwrap();
            assert_eq!(
                d == Decomposition::NotASylowNumber,
                !by_value.contains_key(&n),
                "p={p} n={n}"
            );
            n += p;
        }
    }
    pass(4, "census values for p <= 50 are prime powers plus the four closed forms; decompose inverts");
}

fn closed_form_value(case: ExceptionalCase) -> u64 {
    families::exceptional_case_np(case).unwrap().value
}

/// Criterion 5: frobenius_affine(p, r, t) has exactly r^t Sylow
/// p-subgroups for every applicable (p, r, t) with p <= 13, r^t <= 256.
#[test]
fn criterion_5_frobenius_realization() {
    let mut built = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for r in (2u64..=256).filter(|&r| numtheory::is_prime(r)) {
            let mut t = 1u32;
            loop {
                let q = match numtheory::checked_pow(r, t) {
                    Ok(q) if q <= 256 => q,
                    _ => break,
                };
                if (q - 1) % p == 0 {
                    let group = groupengine::frobenius_affine(p, r, t).unwrap();
                    assert_eq!(group.order(), p * q);
                    assert_eq!(
                        group.count_sylow_by_elements(p).unwrap().n_p,
                        q,
                        "frobenius({p},{r},{t})"
                    );
                    built += 1;
                }
                t += 1;
            }
        }
    }
    assert!(built > 100, "expected a dense grid, built {built}");
    pass(5, "every prime power r^t <= 256 with p | r^t - 1, p <= 13, is realized as n_p");
}

/// Criterion 6: primitive prime divisors match the factorization oracle
/// for 2 <= a, n <= 12, with exceptions exactly at (2,6) and (2^s - 1, 2).
#[test]
fn criterion_6_zsigmondy() {
    for a in 2u64..=12 {
        for n in 2u32..=12 {
            let result = numtheory::zsigmondy(a, n).unwrap();
            let value = numtheory::checked_pow(a, n).unwrap() - 1;
            let oracle: Vec<u64> = numtheory::factorize(value)
                .unwrap()
                .primes()
                .filter(|&ell| {
                    (1..n).all(|j| !(numtheory::checked_pow(a, j).unwrap() - 1).is_multiple_of(ell))
                })
                .collect();
            match (&result.kind, oracle.is_empty()) {
                (ZsigmondyKind::Primes(ps), false) => assert_eq!(ps, &oracle, "({a},{n})"),
                (ZsigmondyKind::ExceptionTwoSix, true) => assert_eq!((a, n), (2, 6)),
                (ZsigmondyKind::ExceptionMersenneLike, true) => {
                    assert_eq!(n, 2);
                    assert!((a + 1).is_power_of_two());
                }
                other => panic!("({a},{n}): inconsistent {other:?}"),
            }
        }
    }
    pass(6, "primitive prime divisors agree with the factorization oracle on the 11x11 grid");
}

/// Criterion 7: the exhaustive search for p^2 - 3p + 2 = 2 q^a over Fermat
/// primes up to 10^6 finds only the degenerate tuple.
#[test]
fn criterion_7_diophantine_search() {
    assert_eq!(numtheory::fermat_prime_power_solutions(1_000_000).unwrap(), vec![(1, 3, 1, 1)]);
    pass(7, "p^2 - 3p + 2 = 2q^a has only the degenerate solution (1, 3, 1, 1) up to 10^6");
}

/// Criterion 8: the inequality audit is clean over the full grid.
#[test]
fn criterion_8_inequality_audit() {
    let report = families::proof_inequality_audit(32, 36).unwrap();
    let violations: Vec<&String> =
        report.chains.iter().flat_map(|c| c.violations.iter()).collect();
    assert!(violations.is_empty(), "violations: {violations:?}");
    assert!(report.total_points() > 10_000);
    pass(8, "inequality audit at q_max=32, e_max=36 reports zero violations");
}

/// Criterion 9: the classical negatives: 21 is not a Sylow 5-number, and
/// 22 at p = 3 violates the n < p^2 hypothesis.
#[test]
fn criterion_9_known_negatives() {
    assert_eq!(classifier::decompose(21, 5).unwrap(), Decomposition::NotASylowNumber);
    assert!(matches!(classifier::decompose(22, 3), Err(Error::Domain(_))));
    // 21 is also absent from the census for p = 5
    let five = classifier::admissible_sylow_numbers(5).unwrap();
    assert!(!five.iter().any(|a| a.value == 21));
    assert!(five.iter().any(|a| a.value == 16
        && a.witnesses.iter().any(|w| matches!(w, Witness::PrimePower { .. }))));
    pass(9, "decompose rejects 21 at p=5 and 22 at p=3");
}
