//! Eigenvalues, binormal classification, and the full Einstein
//! adapted-metric classification for the diagonal fibrations
//! `G₀ⁿ/ΔⁿG₀ → G₀^p/ΔᵖG₀ × G₀^q/ΔᵠG₀`, over the grid `n ≤ 20`.

use exact_numerics::{isolate_real_roots, rat, Domain, Rational};
use kowalski::{
    kowalski_binormal, kowalski_eigenvalues, kowalski_form_reduction, kowalski_solve,
    FormReduction, KowalskiSpace, KowalskiValue,
};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

/// All valid shapes `(p, q)` with `p + q = n ≤ bound`.
fn grid(bound: i64) -> Vec<KowalskiSpace> {
    let mut out = Vec::new();
    for n in 4..=bound {
        for p in 2..=n / 2 {
            out.push(KowalskiSpace::new(p, n - p).unwrap());
        }
    }
    out
}

#[test]
fn shape_validation() {
    assert!(KowalskiSpace::new(1, 5).is_err(), "p = 1 must be rejected");
    assert!(KowalskiSpace::new(3, 2).is_err(), "p > q must be rejected");
    assert!(KowalskiSpace::new(0, 2).is_err());
    let s = KowalskiSpace::new(2, 4).unwrap();
    assert_eq!((s.n(), s.p(), s.q()), (6, 2, 4));
}

#[test]
fn eigenvalue_table() {
    // (n, p, q) = (6, 2, 4): b¹ = 1/3, b² = 1/12, γ = 5/12.
    let s = KowalskiSpace::new(2, 4).unwrap();
    let ev = kowalski_eigenvalues(&s);
    assert_eq!(ev.c_l_p, rat(1, 6));
    assert_eq!(ev.b, [rat(1, 3), rat(1, 12)]);
    assert_eq!(ev.c_k, [rat(1, 2), rat(1, 4)]);
    assert_eq!(ev.gamma, rat(5, 12));
    assert_eq!(ev.c_n_p, [rat(1, 3), rat(1, 4)]);

    // (4, 2, 2): p = q symmetry forces b¹ = b², γ = 1/2.
    let s = KowalskiSpace::new(2, 2).unwrap();
    let ev = kowalski_eigenvalues(&s);
    assert_eq!(ev.b, [rat(1, 4), rat(1, 4)]);
    assert_eq!(ev.gamma, rat(1, 2));
}

/// `C_𝔨 = C_𝔩 + C_𝔭` blockwise gives `c_{𝔨,i} = 1/n + bⁱ`, and
/// `C_𝔫 = Id − C_𝔨` on `𝔭` gives the trace identity
/// `c_{𝔫₁,𝔭} + c_{𝔫₂,𝔭} = 1 − γ`.
#[test]
fn eigenvalue_identities() {
    for s in grid(20) {
        let ev = kowalski_eigenvalues(&s);
        for i in 0..2 {
            assert_eq!(&ev.c_k[i] - &ev.c_l_p, ev.b[i], "c_k = c_l + b at {s:?}");
        }
        assert_eq!(
            &ev.c_n_p[0] + &ev.c_n_p[1],
            rat(1, 1) - &ev.gamma,
            "{s:?}"
        );
        // The fiber constant of the Ricci formula: ½(c_l + γ/2) = n/(4pq).
        let fiber = rat(1, 2) * (&ev.c_l_p + rat(1, 2) * &ev.gamma);
        assert_eq!(fiber, rat(s.n(), 4 * s.p() * s.q()), "{s:?}");
    }
}

#[test]
fn binormal_classification() {
    // p ≠ q or n = 4: only the standard metric.
    let s = KowalskiSpace::new(2, 4).unwrap();
    assert_eq!(kowalski_binormal(&s), vec![rat(1, 1)]);
    let s = KowalskiSpace::new(2, 2).unwrap();
    assert_eq!(kowalski_binormal(&s), vec![rat(1, 1)]);
    // p = q, n > 4: standard plus B|𝔭 ⊕ (n/4)B|𝔫.
    let s = KowalskiSpace::new(4, 4).unwrap();
    assert_eq!(kowalski_binormal(&s), vec![rat(1, 1), rat(2, 1)]);
    for q in 3..=10i64 {
        let s = KowalskiSpace::new(q, q).unwrap();
        assert_eq!(kowalski_binormal(&s), vec![rat(1, 1), rat(q, 2)]);
    }
    for s in grid(20) {
        let set = kowalski_binormal(&s);
        if s.p() == s.q() && s.n() > 4 {
            assert_eq!(set, vec![rat(1, 1), rat(s.n(), 4)], "{s:?}");
        } else {
            assert_eq!(set, vec![rat(1, 1)], "{s:?}");
        }
        // Each binormal X = μ/λ solves both horizontal quadratics.
        for x in &set {
            for j in 0..2 {
                assert!(s.binormal_quadratic(j).eval(x).is_zero(), "{s:?}");
            }
        }
    }
}

#[test]
fn standard_metric_is_einstein() {
    for s in grid(20) {
        let sols = kowalski_solve(&s);
        let std_sol = sols
            .iter()
            .find(|sol| sol.standard)
            .unwrap_or_else(|| panic!("{s:?}: missing standard solution"));
        // Ricci quotient of the standard metric is 1/4 + 1/(2n).
        assert_eq!(
            std_sol.einstein_ratio,
            KowalskiValue::Exact(rat(1, 4) + rat(1, 2 * s.n())),
            "{s:?}"
        );
        assert!(std_sol.binormal);
    }
}

#[test]
fn n_equals_4_unique_standard() {
    let s = KowalskiSpace::new(2, 2).unwrap();
    let sols = kowalski_solve(&s);
    assert_eq!(sols.len(), 1, "n = 4 has only the standard Einstein metric");
    assert!(sols[0].standard);
    assert_eq!(
        sols[0].einstein_ratio,
        KowalskiValue::Exact(rat(3, 8)),
        "Einstein quotient 1/4 + 1/(2·4) = 3/8"
    );
    // The cubic's unique real root is Z = 1: t(1) = p(q+2)(q−1)(n−4) = 0.
    assert!(s.structure_cubic().eval(&rat(1, 1)).is_zero());
}

#[test]
fn six_two_four_two_solutions() {
    let s = KowalskiSpace::new(2, 4).unwrap();
    let t = s.structure_cubic();
    // t(1) = p(q+2)(q−1)(n−4) = 2·6·3·2 = 72 ≠ 0, so the nonstandard root
    // is distinct from the standard metric.
    assert_eq!(t.eval(&rat(1, 1)), rat(72, 1));

    let (lo, hi) = s.nonstandard_interval();
    assert_eq!((lo.clone(), hi.clone()), (rat(1, 2), rat(3, 2)));

    // The root enclosure is certified to width 10⁻¹².
    let roots = isolate_real_roots(&t, &Domain::Interval(lo.clone(), hi.clone())).unwrap();
    assert_eq!(roots.len(), 1);
    let width = roots[0].width().to_f64().unwrap();
    assert!(width <= 1e-12, "enclosure width {width}");

    let sols = kowalski_solve(&s);
    assert_eq!(sols.len(), 2);
    let nonstd = sols.iter().find(|sol| !sol.standard).unwrap();
    let x1 = nonstd.x[0].to_f64();
    assert!((x1 - roots[0].value()).abs() <= 1e-12);
    assert!(lo.to_f64().unwrap() < x1 && x1 < hi.to_f64().unwrap());
    // Both metrics satisfy all three Ricci equations to 10⁻⁹.
    for sol in &sols {
        let r = s.ricci_quotients(sol.x[0].to_f64(), sol.x[1].to_f64());
        assert!((r.horizontal[0] - r.fiber).abs() <= 1e-9);
        assert!((r.horizontal[1] - r.fiber).abs() <= 1e-9);
    }
    // p ≠ q: the nonstandard metric is neither binormal nor base-Einstein.
    assert!(!nonstd.binormal && !nonstd.base_einstein);
}

/// For `p = q` the nonstandard solution is the binormal metric: the cubic
/// has the exact rational root `Z = 4/n` (so `μ/λ = n/4`), and the
/// back-substitution returns `X₂ = X₁` exactly.
#[test]
fn p_equals_q_nonstandard_is_binormal() {
    for q in 3..=10i64 {
        let s = KowalskiSpace::new(q, q).unwrap();
        let n = s.n();
        let alpha = rat(4, n);
        assert!(s.structure_cubic().eval(&alpha).is_zero(), "t(4/n) = 0");
        let sols = kowalski_solve(&s);
        assert_eq!(sols.len(), 2, "{s:?}");
        let nonstd = sols.iter().find(|sol| !sol.standard).unwrap();
        assert_eq!(nonstd.x[0], KowalskiValue::Exact(alpha.clone()), "{s:?}");
        assert_eq!(nonstd.x[1], KowalskiValue::Exact(alpha.clone()), "{s:?}");
        assert!(nonstd.binormal && nonstd.base_einstein, "{s:?}");
        // Exact Ricci agreement.
        let r = s.ricci_quotients_exact(&alpha, &alpha);
        assert!(r.is_einstein(), "{s:?}");
    }
}

/// Exactly two Einstein adapted metrics for every `n > 4`, one standard;
/// the nonstandard `X₁` lies strictly inside `(n/(q(p+1)), n/q)`.
#[test]
fn solution_count_grid() {
    for s in grid(20) {
        let sols = kowalski_solve(&s);
        if s.n() == 4 {
            assert_eq!(sols.len(), 1, "{s:?}");
            continue;
        }
        assert_eq!(sols.len(), 2, "{s:?}");
        assert_eq!(sols.iter().filter(|sol| sol.standard).count(), 1);
        let nonstd = sols.iter().find(|sol| !sol.standard).unwrap();
        let (lo, hi) = s.nonstandard_interval();
        let x1 = nonstd.x[0].to_f64();
        assert!(
            lo.to_f64().unwrap() < x1 && x1 < hi.to_f64().unwrap(),
            "{s:?}: X₁ = {x1} outside admissible interval"
        );
        assert!(nonstd.x[1].to_f64() > 0.0);
    }
}

/// The cubic is strictly monotone: the discriminant `δ` of its derivative
/// is negative, and matches the closed form
/// `δ = (q+1)²p² − (q−1)(3q²+4q−8)p − (q−1)(3q²+8q+16)` up to the factor
/// `16q²`; the sign changes at the interval endpoints bracket the root.
#[test]
fn cubic_shape_grid() {
    for s in grid(20) {
        let (n, p, q) = (s.n(), s.p(), s.q());
        let delta = s.derivative_discriminant();
        assert!(delta.is_negative(), "{s:?}: δ = {delta}");
        // dt/dZ = 12q²Z² − 8q(n+pq+2)Z + n(q(q+2)(p+1)+n+8); its
        // discriminant is 16q²·δ.
        let dt = s.structure_cubic().derivative();
        let c = dt.coeffs().to_vec();
        let disc = &c[1] * &c[1] - rat(4, 1) * &c[2] * &c[0];
        assert_eq!(disc, rat(16 * q * q, 1) * &delta, "{s:?}");
        // t(1) = p(q+2)(q−1)(n−4).
        assert_eq!(
            s.structure_cubic().eval(&rat(1, 1)),
            rat(p * (q + 2) * (q - 1) * (n - 4), 1),
            "{s:?}"
        );
        // Sign change across the admissibility interval.
        let (lo, hi) = s.nonstandard_interval();
        let t = s.structure_cubic();
        assert!(t.eval(&lo).is_negative(), "{s:?}");
        assert!(t.eval(&hi).is_positive(), "{s:?}");
        assert_eq!(t.eval(&lo), -rat(p * (p + 3) * (p + 3) * (q - 1) * n * n, q * (p + 1) * (p + 1) * (p + 1)));
        assert_eq!(t.eval(&hi), rat(p * (q - 1) * (q - 1) * n * n, q));
    }
}

/// The projected base metric `g_N` is Einstein if and only if `p = q` and
/// the adapted metric is binormal, over the whole grid.
#[test]
fn base_einstein_iff_p_equals_q_and_binormal() {
    for s in grid(20) {
        let sols = kowalski_solve(&s);
        let any_base = sols.iter().any(|sol| sol.base_einstein);
        assert_eq!(any_base, s.p() == s.q(), "{s:?}");
        for sol in &sols {
            assert_eq!(
                sol.base_einstein,
                s.p() == s.q() && sol.binormal,
                "{s:?}: {sol:?}"
            );
        }
        // The obstruction: r₁/r₂ = (p+2)q/((q+2)p) must equal
        // √(b¹/b²) = q/p, which happens only for p = q.
        let ev = kowalski_eigenvalues(&s);
        let b_ratio = (&ev.b[0] / &ev.b[1]).reduced();
        assert_eq!(b_ratio, rat(s.q() * s.q(), s.p() * s.p()));
        assert_eq!(
            s.base_ricci_ratio() == rat(s.q(), s.p()),
            s.p() == s.q(),
            "{s:?}"
        );
    }
}

#[test]
fn form_reduction_cases() {
    let s = KowalskiSpace::new(3, 4).unwrap();
    // All coefficients equal per block: reduced.
    let mu1 = vec![rat(2, 1), rat(2, 1)];
    let mu2 = vec![rat(3, 1), rat(3, 1), rat(3, 1)];
    assert_eq!(
        kowalski_form_reduction(&s, &mu1, &mu2).unwrap(),
        FormReduction::Reduced {
            mu1: rat(2, 1),
            mu2: rat(3, 1)
        }
    );
    // μ_{1,1} ≠ μ_{1,2}: rejected with witness in block 1 at index 1.
    let bad1 = vec![rat(1, 1), rat(2, 1)];
    assert_eq!(
        kowalski_form_reduction(&s, &bad1, &mu2).unwrap(),
        FormReduction::Violation { block: 1, index: 1 }
    );
    // Violation in the second block.
    let bad2 = vec![rat(3, 1), rat(3, 1), rat(5, 1)];
    assert_eq!(
        kowalski_form_reduction(&s, &mu1, &bad2).unwrap(),
        FormReduction::Violation { block: 2, index: 2 }
    );
    // p = 2: single summand in 𝔫₁, vacuously reduced.
    let s = KowalskiSpace::new(2, 2).unwrap();
    assert_eq!(
        kowalski_form_reduction(&s, &[rat(5, 7)], &[rat(9, 2)]).unwrap(),
        FormReduction::Reduced {
            mu1: rat(5, 7),
            mu2: rat(9, 2)
        }
    );
    // Shape and positivity validation.
    assert!(kowalski_form_reduction(&s, &[], &[rat(1, 1)]).is_err());
    assert!(kowalski_form_reduction(&s, &[rat(-1, 1)], &[rat(1, 1)]).is_err());
}

proptest! {
    /// Randomized form reduction: the lemma's Casimir criterion accepts a
    /// coefficient vector exactly when each block is constant.
    #[test]
    fn form_reduction_detects_any_violation(
        p in 2i64..6,
        extra in 0i64..5,
        nums1 in prop::collection::vec(1i64..20, 10),
        nums2 in prop::collection::vec(1i64..20, 10),
    ) {
        let q = p + extra;
        let s = KowalskiSpace::new(p, q).unwrap();
        let mu1: Vec<Rational> = (0..p - 1).map(|i| rat(nums1[i as usize], 1)).collect();
        let mu2: Vec<Rational> = (0..q - 1).map(|i| rat(nums2[i as usize], 1)).collect();
        let constant = |v: &[Rational]| v.windows(2).all(|w| w[0] == w[1]);
        let outcome = kowalski_form_reduction(&s, &mu1, &mu2).unwrap();
        match outcome {
            FormReduction::Reduced { .. } => {
                prop_assert!(constant(&mu1) && constant(&mu2));
            }
            FormReduction::Violation { block, index } => {
                let v = if block == 1 { &mu1 } else { &mu2 };
                prop_assert!(v[index - 1] != v[index]);
            }
        }
    }
}
