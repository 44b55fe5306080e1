//! Reproduction of the Type I Einstein tables (exceptional and classical
//! families) and the one-dimensional-fiber table, from the tabulated
//! eigenvalues.  Every solution is an exact quadratic surd and passes the
//! Ricci check by construction.

mod common;

use common::{assert_x_set, published, q, surd};
use einstein_solver::{solve_binormal, solve_circle_bundle, BinormalOutcome};
use exact_numerics::{rat, Rational};
use triple_catalog::Params;

fn solved(label: &str, params: Params) -> BinormalOutcome {
    let report = published(label, params);
    solve_binormal(&report).unwrap_or_else(|e| panic!("{label}: {e}"))
}

fn assert_row(label: &str, params: Params, expected: &[exact_numerics::QuadSurd]) {
    let outcome = solved(label, params);
    let sols = outcome.solutions();
    let expected: Vec<Vec<_>> = expected
        .iter()
        .map(|x| vec![x.clone(); sols.first().map(|s| s.x.len()).unwrap_or(1)])
        .collect();
    assert_x_set(label, sols, &expected);
    for sol in sols {
        assert!(sol.flags.binormal);
    }
}

#[test]
fn exceptional_rows() {
    // (f4, sp3 ⊕ su2, sp3 ⊕ ℝ): X = 4, 1/2.
    assert_row("cpf42", Params::default(), &[q(4, 1), q(1, 2)]);
    // (f4, so9, so8): X = 1, 2/7.
    assert_row("cpf41", Params::p(1), &[q(1, 1), q(2, 7)]);
    // (f4, so9, so7 ⊕ ℝ): Δ = 4/81, so X = (9 ± 2)/14 = 11/14, 1/2.  The
    // printed row says (9 ± √8)/14, which contradicts the printed
    // discriminant (106 − 63p + 7p²)/162 = 8/162 at p = 7 (erratum).
    assert_row("cpf41", Params::p(7), &[q(11, 14), q(1, 2)]);
    // (g2, su2 ⊕ su2, ℝ ⊕ su2): X = 3/2, 1/2.
    assert_row("cpg21", Params::default(), &[q(3, 2), q(1, 2)]);
    // (g2, su2 ⊕ su2, su2 ⊕ ℝ): X = (6 ± √22)/2.
    assert_row(
        "cpg22",
        Params::default(),
        &[surd(6, 1, 22, 2), surd(6, -1, 22, 2)],
    );
    // (e6, so10 ⊕ ℝ, so8 ⊕ ℝ²): X = 1, 1/2.
    assert_row("cpe62", Params::p(2), &[q(1, 1), q(1, 2)]);
    // (e6, su6 ⊕ su2, ℝ ⊕ su5 ⊕ su2): X = 3/2, 1/2.
    assert_row("cpe64", Params::p(1), &[q(3, 2), q(1, 2)]);
    // (e6, su6 ⊕ su2, su6 ⊕ ℝ): X = 11/2, 1/2.
    assert_row("cpe63", Params::default(), &[q(11, 2), q(1, 2)]);
    // (e7, so12 ⊕ su2, so12 ⊕ ℝ): X = 17/2, 1/2.
    assert_row("cpe71", Params::default(), &[q(17, 2), q(1, 2)]);
    // (e7, so12 ⊕ su2, ℝ ⊕ so10 ⊕ su2): X = 13/10, 1/2.
    assert_row("cpe74", Params::p(2), &[q(13, 10), q(1, 2)]);
    // (e7, so12 ⊕ su2, so4 ⊕ so8 ⊕ su2): X = 1, 4/5.
    assert_row("cpe74", Params::p(4), &[q(1, 1), q(4, 5)]);
    // (e7, su8, su7 ⊕ ℝ): X = 7/4, 1/2.
    assert_row("cpe78", Params::p(1), &[q(7, 4), q(1, 2)]);
    // (e8, e7 ⊕ su2, e7 ⊕ ℝ): X = 29/2, 1/2.
    assert_row("cpe83", Params::default(), &[q(29, 2), q(1, 2)]);
    // (e8, so16, so2p ⊕ so(16−2p)): X = (15 ± √(7p² − 56p + 113))/14.
    assert_row("cpe81", Params::p(1), &[q(23, 14), q(1, 2)]);
    for p in [2i64, 3] {
        let r = 7 * p * p - 56 * p + 113;
        assert_row(
            "cpe81",
            Params::p(p as usize),
            &[surd(15, 1, r, 14), surd(15, -1, r, 14)],
        );
    }
    assert_row("cpe81", Params::p(4), &[q(8, 7), q(1, 1)]);
}

#[test]
fn nonexistence_discriminants() {
    // Cases where the discriminant is negative: a conjugate pair of complex
    // Einstein adapted metrics, no real one.
    let cases: [(&str, Params, Rational); 5] = [
        ("cpe88", Params::default(), rat(-2, 25)),
        ("cpe62", Params::p(4), rat(-1, 9)),
        ("cpf41", Params::p(3), rat(-10, 81)),
        ("cpf41", Params::p(5), rat(-17, 81)),
        ("cpe74", Params::p(6), rat(-4, 81)),
    ];
    for (label, params, delta) in cases {
        match solved(label, params) {
            BinormalOutcome::Solved {
                discriminant,
                solutions,
                complex_pairs,
            } => {
                assert_eq!(discriminant.value, delta, "{label}: Δ′");
                assert_eq!(discriminant.sign(), -1, "{label}");
                assert!(solutions.is_empty(), "{label}");
                assert_eq!(complex_pairs, 1, "{label}");
            }
            other => panic!("{label}: unexpected outcome {other:?}"),
        }
    }
}

#[test]
fn classical_su_rows() {
    // (su_n, su_2l ⊕ su_(n−2l) ⊕ ℝ, su_l ⊕ su_l ⊕ ℝ ⊕ su_(n−2l) ⊕ ℝ):
    // X = 1/2, n/(2l) − 1/2.
    for n in 3..=9usize {
        for l in 1..=(n - 1) / 2 {
            assert_row(
                "cpan1",
                Params::npl(n, 2 * l, l),
                &[q(1, 2), q(n as i64 - l as i64, 2 * l as i64)],
            );
        }
    }
}

#[test]
fn classical_so_even_rows() {
    // (so_2n, so_2p ⊕ so_2(n−p), so_p ⊕ so_p ⊕ so_2(n−p)), p even:
    // X = (n − 1 ± √(p² − (2n+1)p + n² + 1))/(2(p − 1)); Δ > 0 for
    // p ≤ n/2 and may turn negative beyond.
    for n in 4..=8usize {
        for p in (2..n).step_by(2) {
            let (ni, pi) = (n as i64, p as i64);
            let r = pi * pi - (2 * ni + 1) * pi + ni * ni + 1;
            let expected = if r > 0 {
                vec![
                    surd(ni - 1, 1, r, 2 * (pi - 1)),
                    surd(ni - 1, -1, r, 2 * (pi - 1)),
                ]
            } else if r == 0 {
                vec![surd(ni - 1, 0, 0, 2 * (pi - 1))]
            } else {
                vec![]
            };
            assert_row("cpdn2", Params::npl(n, p, p / 2), &expected);
            if p <= n / 2 {
                assert!(r > 0, "cpdn2(n={n},p={p}): tabulated range must exist");
            }
        }
    }
    // (so_2n, so_2p ⊕ so_2(n−p), u_p ⊕ so_2(n−p)): Δ = ((n−p)/(n−1))², so
    // X = 1/2, (n−1)/(p−1) − 1/2.  The printed row gives n/(p−1) − 1/2,
    // inconsistent with the printed discriminant (erratum).
    for n in 4..=8usize {
        for p in 2..n {
            let (ni, pi) = (n as i64, p as i64);
            assert_row(
                "cpdn5",
                Params::np(n, p),
                &[q(1, 2), q(2 * ni - pi - 1, 2 * (pi - 1))],
            );
        }
    }
}

#[test]
fn classical_so_odd_rows() {
    // (so_2n+1, so_2p+1 ⊕ so_2(n−p), so_2p+1 ⊕ so_(n−p) ⊕ so_(n−p)),
    // n − p even: X = (2n − 1 ± √(4p² + 8p − 4n + 5))/(4(n − p − 1)).
    for n in 3..=8usize {
        for p in (n % 2..n - 1).step_by(2) {
            let (ni, pi) = (n as i64, p as i64);
            let r = 4 * pi * pi + 8 * pi - 4 * ni + 5;
            let expected = if r > 0 {
                vec![
                    surd(2 * ni - 1, 1, r, 4 * (ni - pi - 1)),
                    surd(2 * ni - 1, -1, r, 4 * (ni - pi - 1)),
                ]
            } else {
                vec![]
            };
            assert_row("cpbn2", Params::nps(n, p, (n - p) / 2), &expected);
        }
    }
    // (so_2n+1, so_2p+1 ⊕ so_2(n−p), so_2p+1 ⊕ u_(n−p)):
    // X = 1/2, (n + p)/(2(n − p − 1)).
    for n in 3..=8usize {
        for p in 0..=n - 2 {
            let (ni, pi) = (n as i64, p as i64);
            assert_row(
                "cpbn3",
                Params::np(n, p),
                &[q(1, 2), q(ni + pi, 2 * (ni - pi - 1))],
            );
        }
    }
}

#[test]
fn classical_sp_rows() {
    // (sp_n, sp_2l ⊕ sp_(n−2l), sp_l ⊕ sp_l ⊕ sp_(n−2l)):
    // X = (n + 1 ± √(6l² + (3 − 4n)l + n² + 1))/(2(2l + 1)); the radicand
    // is positive for all n, l.
    for n in 4..=8usize {
        for l in 1..=(n - 1) / 2 {
            let (ni, li) = (n as i64, l as i64);
            let r = 6 * li * li + (3 - 4 * ni) * li + ni * ni + 1;
            assert!(r > 0);
            assert_row(
                "cpcn2",
                Params::npl(n, 2 * l, l),
                &[
                    surd(ni + 1, 1, r, 2 * (2 * li + 1)),
                    surd(ni + 1, -1, r, 2 * (2 * li + 1)),
                ],
            );
        }
    }
    // (sp_n, sp_p ⊕ sp_(n−p), u_p ⊕ sp_(n−p)): X = 1/2, 1/2 + (n−p)/(p+1).
    for n in 3..=8usize {
        for p in 1..n {
            let (ni, pi) = (n as i64, p as i64);
            assert_row(
                "cpcn5",
                Params::np(n, p),
                &[q(1, 2), q(2 * ni - pi + 1, 2 * (pi + 1))],
            );
        }
    }
}

#[test]
fn one_dimensional_fiber_table() {
    let half = rat(1, 2);
    // su_n / s(u_p × u_(n−p)): dim n = 2p(n − p).
    for (n, p) in [(3i64, 1i64), (4, 2), (5, 2), (8, 3)] {
        let m = 2 * p * (n - p);
        assert_eq!(
            solve_circle_bundle(m as u64, &half),
            rat(p * (n - p) + 1, 2 * p * (n - p))
        );
    }
    // so_2n / u_n: dim n = n(n − 1).
    for n in [4i64, 5, 6] {
        assert_eq!(
            solve_circle_bundle((n * (n - 1)) as u64, &half),
            rat(n * n - n + 2, 2 * n * (n - 1))
        );
    }
    // so_n / (so_2 × so_(n−2)): dim n = 2(n − 2), so X = (n − 1)/(2(n − 2)).
    // (The printed value (n − 1)/(n − 2) drops the factor 2: erratum.)
    for n in [5i64, 6, 8, 10] {
        assert_eq!(
            solve_circle_bundle((2 * (n - 2)) as u64, &half),
            rat(n - 1, 2 * (n - 2))
        );
    }
    // sp_n / u_n: dim n = n(n + 1).
    for n in [2i64, 3, 4] {
        assert_eq!(
            solve_circle_bundle((n * (n + 1)) as u64, &half),
            rat(n * n + n + 2, 2 * n * (n + 1))
        );
    }
    // e6 / (so10 × u1): dim n = 32.
    assert_eq!(solve_circle_bundle(32, &half), rat(17, 32));
    // e7 / (e6 × u1): dim n = 54.
    assert_eq!(solve_circle_bundle(54, &half), rat(14, 27));
}
