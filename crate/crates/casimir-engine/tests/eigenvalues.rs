//! Spot checks of the string formula and the dual-Coxeter route.

use casimir_engine::{casimir_on_root, dual_coxeter_table, gamma_eigenvalue, scalar_check};
use exact_numerics::rat;
use root_systems::{LieFamily, Root, RootSubset, RootSystem};

#[test]
fn coxeter_table() {
    for (_, fam, expected) in dual_coxeter_table() {
        assert_eq!(fam.dual_coxeter(), expected);
    }
}

#[test]
fn su_n_split_fiber() {
    // su_6, p = 4, l = 2: R_p = {±(e_i−e_j): i ≤ 2 < j ≤ 4},
    // b = (p−l)/(2n) = 1/6 on φ = e₁−e₆.
    let n = 6;
    let sys = RootSystem::build(LieFamily::su(n));
    let rp = RootSubset::symmetrized(
        "R_p",
        (1..=2).flat_map(|i| (3..=4).map(move |j| Root::e_minus_e(n, i, j))),
    );
    let phi = Root::e_minus_e(n, 1, n);
    assert_eq!(casimir_on_root(&sys, &rp, &phi).unwrap(), rat(1, 6));
}

#[test]
fn e8_su2_fiber_on_spinor() {
    let sys = RootSystem::build(LieFamily::e8());
    let rp = RootSubset::symmetrized("R_p", [Root::e_plus_e(8, 7, 8)]);
    let phi = Root::from_halves(&[1; 8]);
    assert_eq!(casimir_on_root(&sys, &rp, &phi).unwrap(), rat(1, 60));
}

#[test]
fn g2_long_root_fiber() {
    let sys = RootSystem::build(LieFamily::g2());
    let rp = RootSubset::symmetrized("R_p", [Root::from_ints(&[2, -1, -1])]);
    let phi = Root::e_minus_e(3, 1, 2);
    assert_eq!(casimir_on_root(&sys, &rp, &phi).unwrap(), rat(1, 8));
}

#[test]
fn gamma_via_dual_coxeter() {
    assert_eq!(
        gamma_eigenvalue(&LieFamily::f4(), &LieFamily::so_odd(9), 1).unwrap(),
        rat(7, 9)
    );
    assert_eq!(
        gamma_eigenvalue(&LieFamily::e8(), &LieFamily::so_even(16), 1).unwrap(),
        rat(7, 15)
    );
    // su₂ on the short-root line of G2 sits at index 3.
    assert_eq!(
        gamma_eigenvalue(&LieFamily::g2(), &LieFamily::su(2), 3).unwrap(),
        rat(1, 6)
    );
    assert!(gamma_eigenvalue(&LieFamily::e8(), &LieFamily::su(2), 2).is_err());
}

#[test]
fn phi_inside_subset_rejected() {
    let sys = RootSystem::build(LieFamily::su(3));
    let rp = RootSubset::symmetrized("R_p", [Root::e_minus_e(3, 1, 2)]);
    assert!(casimir_on_root(&sys, &rp, &Root::e_minus_e(3, 1, 2)).is_err());
}

#[test]
fn g2_short_fiber_is_not_scalar() {
    // The short-root su₂ fiber of G2: first principles give b = 7/24 on the
    // short horizontal roots but 1/8 on the long ones — the catalog's
    // tabulated constant 1/6 does not survive recomputation (this is the
    // documented allowlist entry).  The long-root fiber *is* scalar at 1/8.
    let sys = RootSystem::build(LieFamily::g2());
    let k1 = RootSubset::symmetrized("R_p1", [Root::from_ints(&[2, -1, -1])]);
    let k2 = RootSubset::symmetrized("R_p2", [Root::e_minus_e(3, 2, 3)]);
    let horiz: Vec<_> = sys
        .roots()
        .iter()
        .filter(|r| !k1.contains(r) && !k2.contains(r))
        .cloned()
        .collect();
    let n = RootSubset::new("R_n", horiz.clone()).unwrap();

    // Over all of n the second fiber is non-constant...
    let err = scalar_check(&sys, &[k1.clone(), k2.clone()], std::slice::from_ref(&n));
    assert!(err.is_err());

    // ...and splitting n by root length exposes the two clusters.
    let n_long = RootSubset::new(
        "R_n long",
        horiz.iter().filter(|r| sys.norm2(r) == rat(1, 4)).cloned(),
    )
    .unwrap();
    let n_short = RootSubset::new(
        "R_n short",
        horiz.iter().filter(|r| sys.norm2(r) == rat(1, 12)).cloned(),
    )
    .unwrap();
    let check = scalar_check(&sys, &[k1, k2], &[n_long, n_short]).unwrap();
    assert_eq!(
        check.per_summand,
        vec![vec![rat(1, 8), rat(1, 8)], vec![rat(1, 8), rat(7, 24)]]
    );
    // b₁ is constant while b₂ is not, so no positive combination can level
    // the difference.
    assert!(!check.exists_positive_combination);
}
