//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! The brute-force revalidation helpers in this file are written from the
//! definitions, independent of the library's classification code paths.

use std::sync::Arc;

use alg_core::module::{Module, ModuleExpr, Submodule};
use alg_core::ring::RingExpr;
use alg_core::verify::{
    run_suite, run_suite_parallel, search_separation, CaseData, InstanceFamily, ModuleShapes,
    SearchTarget,
};
use alg_core::{
    classify, localize_ring, saturate, Caps, MultClosedSet, Value,
};

fn caps() -> Caps {
    Caps::default()
}

fn report(criterion: &str, ok: bool) {
    println!("acceptance {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance {criterion} failed");
}

/// Definition-level S-primary check used only to revalidate findings.
fn brute_s_primary(module: &Arc<Module>, p: &Submodule, s: &MultClosedSet) -> Option<usize> {
    let ring = module.ring();
    let n = ring.card();
    // (P : M) from the definition
    let colon: Vec<usize> = (0..n)
        .filter(|&r| (0..module.card()).all(|m| p.contains(module.act(r, m))))
        .collect();
    // radical by scanning powers up to |R|
    let in_radical = |x: usize| {
        let mut power = x;
        for _ in 0..n {
            if colon.contains(&power) {
                return true;
            }
            power = ring.mul(power, x);
        }
        false
    };
    if colon.iter().any(|&r| s.contains(r)) {
        return None; // not applicable
    }
    s.set().iter().find(|&cand| {
        (0..n).all(|r| {
            (0..module.card()).all(|m| {
                !p.contains(module.act(r, m))
                    || in_radical(ring.mul(cand, r))
                    || p.contains(module.act(cand, m))
            })
        })
    })
}

fn brute_s_prime(module: &Arc<Module>, p: &Submodule, s: &MultClosedSet) -> Option<usize> {
    let ring = module.ring();
    let n = ring.card();
    let colon: Vec<usize> = (0..n)
        .filter(|&r| (0..module.card()).all(|m| p.contains(module.act(r, m))))
        .collect();
    if colon.iter().any(|&r| s.contains(r)) {
        return None;
    }
    s.set().iter().find(|&cand| {
        (0..n).all(|r| {
            (0..module.card()).all(|m| {
                !p.contains(module.act(r, m))
                    || colon.contains(&ring.mul(cand, r))
                    || p.contains(module.act(cand, m))
            })
        })
    })
}

fn brute_primary(module: &Arc<Module>, p: &Submodule) -> bool {
    if !p.is_proper() {
        return false;
    }
    let ring = module.ring();
    let n = ring.card();
    let colon: Vec<usize> = (0..n)
        .filter(|&r| (0..module.card()).all(|m| p.contains(module.act(r, m))))
        .collect();
    let in_radical = |x: usize| {
        let mut power = x;
        for _ in 0..n {
            if colon.contains(&power) {
                return true;
            }
            power = ring.mul(power, x);
        }
        false
    };
    (0..n).all(|r| {
        (0..module.card()).all(|m| {
            !p.contains(module.act(r, m)) || p.contains(m) || in_radical(r)
        })
    })
}

fn build_case(case: &CaseData) -> (Arc<Module>, Submodule, MultClosedSet) {
    let CaseData::Submodule { module, p, s } = case else {
        panic!("submodule-shaped case expected");
    };
    let module = module.build(&caps()).unwrap();
    let p = Submodule::from_values(&module, p).unwrap();
    let s = MultClosedSet::from_values(module.ring(), s).unwrap();
    (module, p, s)
}

#[test]
fn criterion_1_reduced_cyclic_example() {
    let start = std::time::Instant::now();
    let ring = RingExpr::zmod(4).build(&caps()).unwrap();
    let module = Module::cyclic_zmod(&ring, 4, &caps()).unwrap();
    let p = Submodule::from_values(&module, &[Value::Int(0)]).unwrap();
    let s = MultClosedSet::from_values(&ring, &[Value::Int(1), Value::Int(3)]).unwrap();
    let report_vec = classify(&p, &s, &caps()).unwrap();
    let ok = report_vec.applicable
        && !report_vec.s_prime.holds
        && report_vec.s_primary.holds
        && report_vec.s_primary.witness == Some(Value::Int(1));
    println!("criterion 1 elapsed: {:?}", start.elapsed());
    report("1 (classification of the reduced cyclic example)", ok);
}

#[test]
fn criterion_2_equivalence_suite() {
    let start = std::time::Instant::now();
    // all Z/n for n in 2..=8, regular and every cyclic module, all
    // submodules, all multiplicatively closed sets
    let family = InstanceFamily::new("criterion-2", 8, 8, ModuleShapes::basic());
    let result = run_suite("thm1-equivalences", &family, &caps()).unwrap();
    println!(
        "criterion 2: {} instances checked, {} skipped, {} failures in {:?}",
        result.instances_checked,
        result.skipped,
        result.failures.len(),
        start.elapsed()
    );
    report(
        "2 (four-formulation equivalence, exhaustive)",
        result.passed() && result.instances_checked > 0,
    );
}

#[test]
fn criterion_3_separations_exist_and_revalidate() {
    let start = std::time::Instant::now();

    let r1 = search_separation(SearchTarget::SPrimaryNotPrimary, 8, &caps()).unwrap();
    let case = r1.found.expect("an S-primary, non-primary instance exists at this scale");
    let (m, p, s) = build_case(&case);
    let minimal_expected = case
        == CaseData::Submodule {
            module: ModuleExpr::Regular { ring: RingExpr::zmod(6) },
            p: vec![Value::Int(0)],
            s: vec![Value::Int(1), Value::Int(3)],
        };
    let first_ok = brute_s_primary(&m, &p, &s).is_some() && !brute_primary(&m, &p);

    let r2 = search_separation(SearchTarget::SPrimaryNotSPrime, 8, &caps()).unwrap();
    let case2 = r2.found.expect("an S-primary, non-S-prime instance exists at this scale");
    let (m2, p2, s2) = build_case(&case2);
    let second_ok = brute_s_primary(&m2, &p2, &s2).is_some() && brute_s_prime(&m2, &p2, &s2).is_none();

    // the reduced cyclic example is itself such a separation
    let ring = RingExpr::zmod(4).build(&caps()).unwrap();
    let module = Module::cyclic_zmod(&ring, 4, &caps()).unwrap();
    let p = Submodule::from_values(&module, &[Value::Int(0)]).unwrap();
    let s = MultClosedSet::from_values(&ring, &[Value::Int(1), Value::Int(3)]).unwrap();
    let named_ok = brute_s_primary(&module, &p, &s) == Some(1)
        && brute_s_prime(&module, &p, &s).is_none();

    println!("criterion 3 elapsed: {:?}", start.elapsed());
    report(
        "3 (finite separations found and revalidated)",
        first_ok && minimal_expected && second_ok && named_ok,
    );
}

#[test]
fn criterion_4_transfer_suites() {
    let start = std::time::Instant::now();
    let properties = [
        "prop4a-enlarge",
        "prop4b-saturation",
        "prop4c-localization",
        "prop61-homs",
        "cor7-transfer",
        "prop8-colon-ideal",
        "thm14-multiplication",
        "cor10-product-form",
        "cor11-rad-form",
        "prop15-intersection",
        "lemma13-faithful",
        "lemma19-colon-witness",
        "prop20-localization-colon",
        "thm21-colon-primary",
        "thm22-jacobson",
        "cor23-quasilocal",
        "prop27-torsionfree",
        "prop29-quasi-torsionfree",
        "thm31-domains",
        "lemma03-primary",
    ];
    let mut all_ok = true;
    for property in properties {
        let family = InstanceFamily::default_for(property);
        let result = run_suite_parallel(property, &family, &caps()).unwrap();
        println!(
            "criterion 4 [{property}]: {} checked, {} failures",
            result.instances_checked,
            result.failures.len()
        );
        all_ok &= result.passed() && result.instances_checked > 0;
    }
    println!("criterion 4 elapsed: {:?}", start.elapsed());
    report("4 (transfer suites, exhaustive families)", all_ok);
}

#[test]
fn criterion_5_product_and_idealization_suites() {
    let start = std::time::Instant::now();
    let properties = [
        "lemma16-product-ideals",
        "thm17-product",
        "thm18-product3",
        "thm25-idealization",
        "prop241-idealization-primary",
        "rem24b-radical-law",
    ];
    let mut all_ok = true;
    for property in properties {
        let family = InstanceFamily::default_for(property);
        let result = run_suite_parallel(property, &family, &caps()).unwrap();
        println!(
            "criterion 5 [{property}]: {} checked, {} failures",
            result.instances_checked,
            result.failures.len()
        );
        all_ok &= result.passed() && result.instances_checked > 0;
    }
    println!("criterion 5 elapsed: {:?}", start.elapsed());
    report("5 (product and idealization suites)", all_ok);
}

#[test]
fn criterion_6_localization_unit_checks() {
    let start = std::time::Instant::now();
    let r6 = RingExpr::zmod(6).build(&caps()).unwrap();
    let s13 = MultClosedSet::from_values(&r6, &[Value::Int(1), Value::Int(3)]).unwrap();
    let lr = localize_ring(&r6, &s13, &caps()).unwrap();
    let card_ok = lr.ring.card() == 2;

    let sat = saturate(&s13, &caps()).unwrap();
    let sat6_ok = sat.values() == vec![Value::Int(1), Value::Int(3), Value::Int(5)];

    let r4 = RingExpr::zmod(4).build(&caps()).unwrap();
    let s1 = MultClosedSet::from_values(&r4, &[Value::Int(1)]).unwrap();
    let sat4 = saturate(&s1, &caps()).unwrap();
    let sat4_ok = sat4.values() == vec![Value::Int(1), Value::Int(3)];

    println!("criterion 6 elapsed: {:?}", start.elapsed());
    report("6 (localization unit checks)", card_ok && sat6_ok && sat4_ok);
}

#[test]
fn criterion_7_serial_parallel_determinism() {
    let start = std::time::Instant::now();
    let mut ok = true;
    for property in ["thm1-equivalences", "thm17-product", "prop61-homs"] {
        let mut family = InstanceFamily::default_for(property);
        family.max_ring = family.max_ring.min(6);
        family.max_module = family.max_module.min(8);
        let serial = run_suite(property, &family, &caps()).unwrap();
        let parallel = run_suite_parallel(property, &family, &caps()).unwrap();
        ok &= serde_json::to_string(&serial).unwrap() == serde_json::to_string(&parallel).unwrap();
    }
    println!("criterion 7 elapsed: {:?}", start.elapsed());
    report("7 (serial/parallel byte-identical reports)", ok);
}

#[test]
fn criterion_8_converse_search_terminates_honestly() {
    let start = std::time::Instant::now();
    let result = search_separation(SearchTarget::Converse4cFailure, 8, &caps()).unwrap();
    // Either outcome is acceptable; a finding must replay and revalidate.
    let ok = match &result.found {
        None => result.exhausted,
        Some(case) => {
            let json = serde_json::to_string(case).unwrap();
            let back: CaseData = serde_json::from_str(&json).unwrap();
            let (m, p, s) = build_case(&back);
            let not_s_primary = brute_s_primary(&m, &p, &s).is_none();
            let lm = alg_core::localize_module(&m, &s, &caps()).unwrap();
            let lp = alg_core::localize::localize_submodule(&lm, &p).unwrap();
            not_s_primary
                && lp.set().len() < lm.module.card()
                && alg_core::classify::is_primary_submodule(&lp)
        }
    };
    println!(
        "criterion 8: found={} exhausted={} examined={} in {:?}",
        result.found.is_some(),
        result.exhausted,
        result.instances_examined,
        start.elapsed()
    );
    report("8 (bounded converse search reports honestly)", ok);
}
