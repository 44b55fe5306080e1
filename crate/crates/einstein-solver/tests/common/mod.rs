#![allow(dead_code)]

use casimir_engine::EigenvalueReport;
use einstein_solver::EinsteinSolution;
use exact_numerics::{rat, QuadSurd};
use triple_catalog::report::{eigenvalue_report, Source};
use triple_catalog::Params;

/// Eigenvalue report from the tabulated values (the layer the solution
/// tables were derived from).
pub fn published(label: &str, params: Params) -> EigenvalueReport {
    let inst = triple_catalog::build(label, params)
        .unwrap_or_else(|e| panic!("{label}: {e}"));
    eigenvalue_report(&inst, Source::Published)
        .unwrap_or_else(|e| panic!("{label}: {e}"))
}

/// Eigenvalue report recomputed from root strings.
pub fn computed(label: &str, params: Params) -> EigenvalueReport {
    let inst = triple_catalog::build(label, params)
        .unwrap_or_else(|e| panic!("{label}: {e}"));
    eigenvalue_report(&inst, Source::Computed)
        .unwrap_or_else(|e| panic!("{label}: {e}"))
}

/// `(num + coeff·√radicand) / den` as an exact surd.
pub fn surd(num: i64, coeff: i64, radicand: i64, den: i64) -> QuadSurd {
    QuadSurd::new(rat(num, den), rat(coeff, den), radicand.into())
}

/// Exact rational as a surd.
pub fn q(n: i64, d: i64) -> QuadSurd {
    QuadSurd::from_rational(rat(n, d))
}

/// Asserts the solution set's `X` vectors equal `expected` as sets of exact
/// surd vectors (order-insensitive).
pub fn assert_x_set(key: &str, sols: &[EinsteinSolution], expected: &[Vec<QuadSurd>]) {
    let got: Vec<Vec<QuadSurd>> = sols
        .iter()
        .map(|s| {
            s.x.iter()
                .map(|v| {
                    v.as_exact()
                        .unwrap_or_else(|| panic!("{key}: non-exact solution {v}"))
                        .clone()
                })
                .collect()
        })
        .collect();
    assert_eq!(
        got.len(),
        expected.len(),
        "{key}: {} solutions, expected {}: got {got:?}",
        got.len(),
        expected.len()
    );
    for e in expected {
        assert!(
            got.iter().any(|g| g == e),
            "{key}: missing expected solution {e:?} in {got:?}"
        );
    }
}
