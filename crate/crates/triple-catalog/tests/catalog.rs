//! Catalog integration tests: structural identities, reproduction of the
//! tabulated eigenvalues on clean entries, detection of the known erratum
//! entries, serialization, and numeric cross-checks on small ranks.

use exact_numerics::rat;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use triple_catalog::evaluate::{evaluate, Evaluation};
use triple_catalog::record::{parse_rational, InstanceRecord};
use triple_catalog::{build, labels, parameter_grid, Instance, Params};

fn eval(label: &str, params: Params) -> (Instance, Evaluation) {
    let inst = build(label, params).unwrap_or_else(|e| panic!("build {label}: {e}"));
    let ev = evaluate(&inst).unwrap_or_else(|e| panic!("evaluate {label}: {e}"));
    (inst, ev)
}

#[test]
fn every_label_has_instances_and_consistent_shapes() {
    for label in labels() {
        let grid = parameter_grid(label, 8);
        assert!(!grid.is_empty(), "{label}: empty parameter grid");
        for params in grid {
            let inst = build(label, params).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert_eq!(inst.fibers.len(), inst.published.gamma.len());
            assert_eq!(inst.fibers.len(), inst.published.b.len());
            for row in &inst.published.b {
                assert_eq!(row.len(), inst.summands.len());
            }
        }
    }
}

#[test]
fn structural_identities_hold_everywhere() {
    // C_k = 1/2 on every horizontal root and γ_a + Σ_j c_{n_j,a} = 1 are
    // theorems; they must hold on every instance regardless of table errata.
    for inst in triple_catalog::enumerate(5) {
        let ev = evaluate(&inst).unwrap();
        assert!(ev.c_k_is_half, "{}: C_k ≠ 1/2 on a horizontal root", inst.key);
        assert!(
            ev.gamma_identity.iter().all(|&ok| ok),
            "{}: trace identity failed",
            inst.key
        );
    }
}

#[test]
fn clean_entries_reproduce_tabulated_values() {
    let cases: &[(&str, Params)] = &[
        ("cpan1", Params::npl(4, 2, 1)),
        ("cpan2", Params::nps(4, 1, 2)),
        ("cpan3", Params::npls(5, 2, 1, 1)),
        ("cpbn2", Params::nps(3, 1, 1)),
        ("cpbn3", Params::np(4, 2)),
        ("cpcn5", Params::np(3, 1)),
        ("cpcn6", Params::np(3, 2)),
        ("cpcn7", Params::np(3, 2)),
        ("cpdn1", Params::np(4, 2)),
        ("cpdn2", Params::npl(4, 2, 1)),
        ("cpdn5", Params::np(4, 2)),
        ("cpdn8", Params::npl(4, 2, 1)),
        ("cpg21", Params::default()),
        ("cpg23", Params::default()),
        ("cpf41", Params::p(3)),
        ("cpf42", Params::default()),
        ("cpe61", Params::default()),
        ("cpe62", Params::p(2)),
        ("cpe63", Params::default()),
        ("cpe64", Params::p(2)),
        ("cpe71", Params::default()),
        ("cpe72", Params::default()),
        ("cpe73", Params::default()),
        ("cpe74", Params::p(4)),
        ("cpe76", Params::default()),
        ("cpe77", Params::default()),
        ("cpe78", Params::p(1)),
        ("cpe83", Params::default()),
        ("cpe84", Params::default()),
        ("cpe86", Params::default()),
        ("cpe88", Params::default()),
    ];
    for &(label, params) in cases {
        let (inst, ev) = eval(label, params);
        let allowed = if label == "cpg23" { 2 } else { 0 };
        let extra: Vec<_> = ev
            .discrepancies
            .iter()
            .filter(|d| label != "cpg23" || !d.site.starts_with("b[1]") && !d.site.starts_with("b_table[1]"))
            .collect();
        assert!(
            extra.is_empty() && ev.discrepancies.len() <= allowed + extra.len(),
            "{}: unexpected discrepancies {:?}",
            inst.key,
            ev.discrepancies
        );
    }
}

#[test]
fn g2_short_fiber_is_not_scalar() {
    // The short-root su2 fiber of G2 acts with two eigenvalues on the
    // horizontal space, not the single tabulated 1/6.
    let (_, ev) = eval("cpg22", Params::default());
    let clusters = &ev.b[0][0];
    assert_eq!(clusters.len(), 2);
    assert_eq!(clusters[0], (rat(7, 24), 4));
    assert_eq!(clusters[1], (rat(1, 8), 4));
    assert!(!ev.discrepancies.is_empty());
    // The trace identity still holds with the true clusters.
    assert!(ev.gamma_identity[0]);
}

#[test]
fn known_errata_are_detected() {
    // B-family: printed (4l+1)/(4(2n−1)) on the mixed block is half the
    // recomputed (2l+1)/(2(2n−1)).
    let (_, ev) = eval("cpbn1", Params::npl(2, 1, 0));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[0][1]" && d.published == "1/12" && d.computed == "1/6"));

    // C-family: cpcn1 appendix halves two of the three values.
    let (_, ev) = eval("cpcn1", Params::np(3, 1));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.published == "1/16" && d.computed == "1/8"));

    // F4: the printed 1/4 misses the two-step strings; the true value is 1/3.
    let (_, ev) = eval("cpf43", Params::default());
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[0][0]" && d.published == "1/4" && d.computed == "1/3"));

    // F4: table misprint 1/18 for 5/18 on the second summand.
    let (_, ev) = eval("cpf44", Params::default());
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[0][1]" && d.published == "1/18" && d.computed == "5/18"));

    // E7: chapter-literal pairing of cpe75 swaps the two fibers' values.
    let (_, ev) = eval("cpe75", Params::p(4));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[0][0]" && d.published == "1/36" && d.computed == "2/9"));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[1][0]" && d.published == "2/9" && d.computed == "1/36"));

    // E6: same pairing swap on cpe65.
    let (_, ev) = eval("cpe65", Params::p(1));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "b[0][0]" && d.published == "1/24" && d.computed == "1/8"));

    // E8: chapter γ = 1/5 is a typo; the adjoint Casimir gives 7/15 and the
    // solver-facing gamma field already carries the corrected value.
    let (inst, ev) = eval("cpe81", Params::p(2));
    assert_eq!(inst.published.gamma[0], rat(7, 15));
    assert!(ev
        .discrepancies
        .iter()
        .any(|d| d.site == "gamma[0]" && d.published == "1/5" && d.computed == "7/15"));
}

#[test]
fn records_roundtrip_through_json() {
    for (label, params) in [
        ("cpan1", Params::npl(4, 2, 1)),
        ("cpg22", Params::default()),
        ("cpe84", Params::default()),
    ] {
        let inst = build(label, params).unwrap();
        let rec = InstanceRecord::from(&inst);
        let json = serde_json::to_string(&rec).unwrap();
        let back: InstanceRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(rec, back);
        for row in &rec.b {
            for v in row {
                assert!(parse_rational(v).is_some(), "unparseable {v}");
            }
        }
    }
}

#[test]
fn numeric_oracle_agrees_on_small_ranks() {
    use numeric_oracle::CompactForm;
    const TOL: f64 = 1e-9;
    let cases: &[(&str, Params)] = &[
        ("cpan1", Params::npl(3, 2, 1)),
        ("cpbn1", Params::npl(3, 2, 1)),
        ("cpcn1", Params::np(3, 1)),
        ("cpdn1", Params::np(4, 2)),
        ("cpg21", Params::default()),
        ("cpg22", Params::default()),
    ];
    for &(label, params) in cases {
        let (inst, ev) = eval(label, params);
        let form = CompactForm::build(&inst.system).unwrap();
        assert!(form.jacobi_residual() < 1e-9);
        for (a, fiber) in inst.fibers.iter().enumerate() {
            for (j, summand) in inst.summands.iter().enumerate() {
                let res = form.casimir_check(fiber, false, summand).unwrap();
                assert!(res.leakage < TOL, "{}: leakage {:.2e}", inst.key, res.leakage);
                let exact = &ev.b[a][j];
                assert_eq!(res.clusters.len(), exact.len(), "{}", inst.key);
                let mut numeric = res.clusters.clone();
                numeric.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
                for ((nv, nm), (xv, xm)) in numeric.iter().zip(exact) {
                    assert_eq!(nm, xm, "{}: multiplicity", inst.key);
                    assert!(
                        (nv - xv.to_f64().unwrap()).abs() < TOL,
                        "{}: {} vs {}",
                        inst.key,
                        nv,
                        xv
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Random catalog entries at ranks beyond the fixed scan keep the
    /// structural identities.
    #[test]
    fn identities_hold_at_random_parameters(seed in 0usize..10_000) {
        let all = labels();
        let label = all[seed % all.len()];
        let grid = parameter_grid(label, 9);
        prop_assume!(!grid.is_empty());
        let params = grid[(seed / all.len()) % grid.len()];
        let inst = build(label, params).unwrap();
        let ev = evaluate(&inst).unwrap();
        prop_assert!(ev.c_k_is_half);
        prop_assert!(ev.gamma_identity.iter().all(|&ok| ok));
    }
}
