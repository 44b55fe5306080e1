//! Reproduction of the Type II tables: binormal Einstein metrics, the
//! non-binormal metrics whose fiber restriction is Einstein, and the
//! nonexistence rows.  All solutions are exact quadratic surds.

mod common;

use common::{assert_x_set, published, q, surd};
use einstein_solver::{
    solve_binormal, solve_type2_fiber_einstein, BinormalOutcome, Branch, GammaRelation,
};
use exact_numerics::{rat, QuadSurd};
use triple_catalog::Params;

fn binormal_row(label: &str, params: Params, expected: &[QuadSurd]) {
    let report = published(label, params);
    let outcome = solve_binormal(&report).unwrap_or_else(|e| panic!("{label}: {e}"));
    let sols = outcome.solutions();
    let expected: Vec<Vec<_>> = expected.iter().map(|x| vec![x.clone(); 2]).collect();
    assert_x_set(label, sols, &expected);
    for sol in sols {
        assert!(sol.flags.binormal && sol.flags.fiber_einstein, "{label}");
    }
}

#[test]
fn binormal_rows() {
    // (su_4l, su_2l ⊕ su_2l ⊕ ℝ, 4·su_l ⊕ ℝ³): X = 1 (Δ′ = 0).
    for l in 1..=2usize {
        binormal_row("cpan3", Params::npls(4 * l, 2 * l, l, l), &[q(1, 1)]);
    }
    // (so_8l, so_4l ⊕ so_4l, 4·so_2l): X = 1, 2l/(2l − 1).
    for l in 1..=2usize {
        let li = l as i64;
        binormal_row(
            "cpdn4",
            Params::npls(4 * l, 2 * l, l, l),
            &[q(1, 1), q(2 * li, 2 * li - 1)],
        );
    }
    // (so_8l, so_4l ⊕ so_4l, 2·so_2l ⊕ u_2l): X = (4l − 1 ± √(2l))/(2(2l − 1)).
    for l in 1..=2usize {
        let li = l as i64;
        binormal_row(
            "cpdn8",
            Params::npl(4 * l, 2 * l, l),
            &[
                surd(4 * li - 1, 1, 2 * li, 2 * (2 * li - 1)),
                surd(4 * li - 1, -1, 2 * li, 2 * (2 * li - 1)),
            ],
        );
    }
    // (so_4l, so_2l ⊕ so_2l, u_l ⊕ u_l), l ≥ 2:
    // X = (2l − 1 ± √(2l − 1))/(2(l − 1)); in particular (3 ± √3)/2 at l = 2.
    for l in 2..=4usize {
        let li = l as i64;
        binormal_row(
            "cpdn7",
            Params::np(2 * l, l),
            &[
                surd(2 * li - 1, 1, 2 * li - 1, 2 * (li - 1)),
                surd(2 * li - 1, -1, 2 * li - 1, 2 * (li - 1)),
            ],
        );
    }
    assert_eq!(surd(3, 1, 3, 2), QuadSurd::new(rat(3, 2), rat(1, 2), 3.into()));
    // (sp_4l, sp_2l ⊕ sp_2l, 4·sp_l): X = (4l + 1 ± √(4l² + 2l + 1))/(2(2l + 1)).
    for l in 1..=2usize {
        let li = l as i64;
        binormal_row(
            "cpcn4",
            Params::npls(4 * l, 2 * l, l, l),
            &[
                surd(4 * li + 1, 1, 4 * li * li + 2 * li + 1, 2 * (2 * li + 1)),
                surd(4 * li + 1, -1, 4 * li * li + 2 * li + 1, 2 * (2 * li + 1)),
            ],
        );
    }
    // (sp_4l, sp_2l ⊕ sp_2l, 2·sp_l ⊕ u_2l): X = (4l + 1 ± √(l(2l − 1)))/(2(2l + 1)).
    for l in 1..=2usize {
        let li = l as i64;
        binormal_row(
            "cpcn8",
            Params::npl(4 * l, 2 * l, l),
            &[
                surd(4 * li + 1, 1, li * (2 * li - 1), 2 * (2 * li + 1)),
                surd(4 * li + 1, -1, li * (2 * li - 1), 2 * (2 * li + 1)),
            ],
        );
    }
}

#[test]
fn binormal_nonexistence() {
    // (sp_2p, sp_p ⊕ sp_p, u_p ⊕ u_p): Δ′ = −1/(2p + 1), no real binormal
    // Einstein metric; and the non-binormal fiber-Einstein branch is
    // negative as well, so there is no Einstein adapted metric with g_F
    // Einstein at all.
    for p in 2..=4usize {
        let report = published("cpcn7", Params::np(2 * p, p));
        match solve_binormal(&report).unwrap() {
            BinormalOutcome::Solved {
                discriminant,
                solutions,
                complex_pairs,
            } => {
                assert_eq!(discriminant.value, rat(-1, 2 * p as i64 + 1));
                assert!(solutions.is_empty());
                assert_eq!(complex_pairs, 1);
            }
            other => panic!("cpcn7(p={p}): unexpected outcome {other:?}"),
        }
        let closed = solve_type2_fiber_einstein(&report).unwrap();
        assert_eq!(closed.relation, GammaRelation::Equal);
        assert!(closed.solutions.is_empty(), "cpcn7(p={p})");
    }
}

#[test]
fn fiber_einstein_unique_solution() {
    // (su_2(l+s), su_2l ⊕ su_2s ⊕ ℝ, su_l ⊕ su_l ⊕ su_s ⊕ su_s ⊕ ℝ³), l ≠ s:
    // γ₂ = 1 − γ₁ and the fiber-Einstein branch has a double root,
    // X₁ = (l + s)/(2l), X₂ = (l + s)/(2s); the complementary branch is
    // negative.  (With l = s this degenerates to the binormal metric X = 1.)
    for (l, s) in [(1usize, 2usize), (1, 3), (2, 3)] {
        let (li, si) = (l as i64, s as i64);
        let report = published("cpan3", Params::npls(2 * (l + s), 2 * l, l, s));
        let outcome = solve_type2_fiber_einstein(&report).unwrap();
        assert_eq!(outcome.relation, GammaRelation::Complementary);
        assert_x_set(
            &report.key,
            &outcome.solutions,
            &[vec![q(li + si, 2 * li), q(li + si, 2 * si)]],
        );
        let sol = &outcome.solutions[0];
        assert_eq!(sol.branch, Branch::FiberEinstein);
        assert!(sol.flags.fiber_einstein && !sol.flags.binormal);
        // Double root: the branch discriminant vanishes.
        assert_eq!(sol.discriminant.as_ref().unwrap().sign(), 0);
        // No binormal metric exists since γ₁ ≠ γ₂.
        match solve_binormal(&report).unwrap() {
            BinormalOutcome::UnequalGamma { .. } => {}
            other => panic!("cpan3: expected γ obstruction, got {other:?}"),
        }
    }
}

#[test]
fn non_binormal_so_rows() {
    // (so_4l, so_2l ⊕ so_2l, u_l ⊕ u_l), l = 2, …, 6: besides the binormal
    // pair, the equal-γ branch gives
    //   X₁ = (l(2l − 1) ± √((−l⁴ + 7l³ − 5l² + l)/2))/((l − 1)(3l − 1)),
    //   X₂ = l/(2(l − 1)) · 1/X₁.
    // The printed row divides the numerator and denominator inconsistently
    // (2l(l − 1) and 2(l − 1)(3l − 1)): erratum, fixed per re-derivation.
    for l in 2..=7usize {
        let li = l as i64;
        let report = published("cpdn7", Params::np(2 * l, l));
        let outcome = solve_type2_fiber_einstein(&report).unwrap();
        assert_eq!(outcome.relation, GammaRelation::Equal);
        let num = -li.pow(4) + 7 * li.pow(3) - 5 * li * li + li;
        let nonbinormal: Vec<_> = outcome
            .solutions
            .iter()
            .filter(|s| s.branch == Branch::EqualGamma)
            .cloned()
            .collect();
        if l > 6 {
            assert!(num / 2 < 0);
            assert!(nonbinormal.is_empty(), "cpdn7(l={l})");
            continue;
        }
        // X₁ = (2·l(2l−1) ± √(2·(−l⁴+7l³−5l²+l)))/(2(l−1)(3l−1)) in integer
        // form (radicand doubled to clear the half).
        let den = 2 * (li - 1) * (3 * li - 1);
        let x1a = surd(2 * li * (2 * li - 1), 1, 2 * num, den);
        let x1b = surd(2 * li * (2 * li - 1), -1, 2 * num, den);
        let k = QuadSurd::from_rational(rat(li, 2 * (li - 1)));
        let expected: Vec<Vec<QuadSurd>> = [x1a, x1b]
            .into_iter()
            .map(|x1| {
                let x2 = k.checked_div(&x1).unwrap();
                vec![x1, x2]
            })
            .collect();
        assert_x_set(&report.key, &nonbinormal, &expected);
        for sol in &nonbinormal {
            assert!(!sol.flags.binormal && !sol.flags.fiber_einstein);
        }
    }

    // (so_8, so_4 ⊕ so_4, ℝ ⊕ ℝ ⊕ u_2): X₁ = (6 ± √6)/5, X₂ = 1/X₁.
    // The printed (4 ± √6)/5 fails the Einstein equations (erratum).
    let report = published("cpdn8", Params::npl(4, 2, 1));
    let outcome = solve_type2_fiber_einstein(&report).unwrap();
    let nonbinormal: Vec<_> = outcome
        .solutions
        .iter()
        .filter(|s| s.branch == Branch::EqualGamma)
        .cloned()
        .collect();
    let one = QuadSurd::from_rational(rat(1, 1));
    let expected: Vec<Vec<QuadSurd>> = [surd(6, 1, 6, 5), surd(6, -1, 6, 5)]
        .into_iter()
        .map(|x1| {
            let x2 = one.checked_div(&x1).unwrap();
            vec![x1, x2]
        })
        .collect();
    assert_x_set(&report.key, &nonbinormal, &expected);
}

#[test]
fn non_binormal_sp_rows() {
    // (sp_4l, sp_2l ⊕ sp_2l, 4·sp_l), l ≥ 1:
    //   X₁ = (2(4l + 1) ± √(14l² + 7l + 4))/(5(2l + 1)),
    //   X₂ = l/(2l + 1) · 1/X₁.
    // The printed numerator (4l + 1 ± …) yields X₁ = 0 at l = 1 and fails
    // the Einstein equations (erratum); at l = 1 the corrected values are
    // X₁ ∈ {1, 1/3}.
    for l in 1..=2usize {
        let li = l as i64;
        let report = published("cpcn4", Params::npls(4 * l, 2 * l, l, l));
        let outcome = solve_type2_fiber_einstein(&report).unwrap();
        assert_eq!(outcome.relation, GammaRelation::Equal);
        let nonbinormal: Vec<_> = outcome
            .solutions
            .iter()
            .filter(|s| s.branch == Branch::EqualGamma)
            .cloned()
            .collect();
        let r = 14 * li * li + 7 * li + 4;
        let x1a = surd(2 * (4 * li + 1), 1, r, 5 * (2 * li + 1));
        let x1b = surd(2 * (4 * li + 1), -1, r, 5 * (2 * li + 1));
        if l == 1 {
            assert_eq!(x1a, q(1, 1));
            assert_eq!(x1b, q(1, 3));
        }
        let k = QuadSurd::from_rational(rat(li, 2 * li + 1));
        let expected: Vec<Vec<QuadSurd>> = [x1a, x1b]
            .into_iter()
            .map(|x1| {
                let x2 = k.checked_div(&x1).unwrap();
                vec![x1, x2]
            })
            .collect();
        assert_x_set(&report.key, &nonbinormal, &expected);
    }

    // (sp_4l, sp_2l ⊕ sp_2l, 2·sp_l ⊕ u_2l), l ≥ 3: in the catalog's fiber
    // order (sp_l ⊕ sp_l first, u_2l second),
    //   X₁ = l(2(4l + 1) ± √(4l² − 8l − 1))/((2l + 1)(6l + 1)),
    //   X₂ = l/(2l + 1) · 1/X₁,
    // which is the printed row with the two fibers interchanged (the
    // printed X₁ column equals this X₂ set and vice versa).  For l < 3 the
    // radicand is negative and only the binormal pair exists.
    for l in 2..=3usize {
        let li = l as i64;
        let report = published("cpcn8", Params::npl(4 * l, 2 * l, l));
        let outcome = solve_type2_fiber_einstein(&report).unwrap();
        assert_eq!(outcome.relation, GammaRelation::Equal);
        let nonbinormal: Vec<_> = outcome
            .solutions
            .iter()
            .filter(|s| s.branch == Branch::EqualGamma)
            .cloned()
            .collect();
        let r = 4 * li * li - 8 * li - 1;
        if l < 3 {
            assert!(r < 0);
            assert!(nonbinormal.is_empty(), "cpcn8(l={l})");
            continue;
        }
        let den = (2 * li + 1) * (6 * li + 1);
        let x1a = surd(2 * li * (4 * li + 1), li, r, den);
        let x1b = surd(2 * li * (4 * li + 1), -li, r, den);
        let k = QuadSurd::from_rational(rat(li, 2 * li + 1));
        let expected: Vec<Vec<QuadSurd>> = [x1a, x1b]
            .into_iter()
            .map(|x1| {
                let x2 = k.checked_div(&x1).unwrap();
                vec![x1, x2]
            })
            .collect();
        assert_x_set(&report.key, &nonbinormal, &expected);
        // The fiber-swapped presentation matches the printed row:
        // each X₂ is a printed X₁ value (2(4l + 1) ± √(4l² − 8l − 1))/(5(2l + 1)).
        let printed = [
            surd(2 * (4 * li + 1), 1, r, 5 * (2 * li + 1)),
            surd(2 * (4 * li + 1), -1, r, 5 * (2 * li + 1)),
        ];
        for sol in &nonbinormal {
            let x2 = sol.x[1].as_exact().unwrap();
            assert!(
                printed.iter().any(|p| p == x2),
                "cpcn8(l={l}): X₂ = {x2} is not a printed X₁ value"
            );
        }
    }
}
