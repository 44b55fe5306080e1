//! Structural checks on the generated root systems.

use exact_numerics::rat;
use root_systems::{d_coefficient, LieFamily, Root, RootSystem};

#[test]
fn counts_and_lengths() {
    let g2 = RootSystem::build(LieFamily::g2());
    assert_eq!(g2.roots().len(), 12);
    let lengths: Vec<_> = g2.roots().iter().map(|r| g2.norm2(r)).collect();
    assert!(lengths.contains(&rat(1, 4)));
    assert!(lengths.contains(&rat(1, 12)));

    let su3 = RootSystem::build(LieFamily::su(3));
    assert_eq!(su3.roots().len(), 6);
    assert!(su3.roots().iter().all(|r| su3.norm2(r) == rat(1, 3)));

    let e8 = RootSystem::build(LieFamily::e8());
    assert_eq!(e8.roots().len(), 240);
    assert!(e8.roots().iter().all(|r| e8.norm2(r) == rat(1, 30)));

    for fam in [
        LieFamily::su(5),
        LieFamily::so_odd(9),
        LieFamily::sp(4),
        LieFamily::so_even(10),
        LieFamily::e6(),
        LieFamily::e7(),
        LieFamily::f4(),
    ] {
        let sys = RootSystem::build(fam);
        assert_eq!(sys.roots().len(), fam.root_count());
        assert_eq!(sys.simple_roots().len(), fam.rank);
    }
}

#[test]
fn killing_normalized_short_lengths() {
    let b3 = RootSystem::build(LieFamily::so_odd(7));
    // B₃: short ±e_i → 1/(2(2n−1)) = 1/10, long → 1/5.
    assert_eq!(b3.norm2(&Root::e(3, 1, 1)), rat(1, 10));
    assert_eq!(b3.norm2(&Root::e_plus_e(3, 1, 2)), rat(1, 5));

    let c3 = RootSystem::build(LieFamily::sp(3));
    // C₃: long ±2e_i → 1/(n+1) = 1/4, short → 1/8.
    assert_eq!(c3.norm2(&Root::e(3, 1, 2)), rat(1, 4));
    assert_eq!(c3.norm2(&Root::e_minus_e(3, 1, 2)), rat(1, 8));

    let f4 = RootSystem::build(LieFamily::f4());
    assert_eq!(f4.norm2(&Root::e(4, 1, 1)), rat(1, 18));
    assert_eq!(f4.norm2(&Root::from_halves(&[1, 1, 1, -1])), rat(1, 18));
    assert_eq!(f4.norm2(&Root::e_plus_e(4, 1, 2)), rat(1, 9));
}

#[test]
fn root_strings_match_hand_enumeration() {
    let su3 = RootSystem::build(LieFamily::su(3));
    let phi = Root::e_minus_e(3, 1, 2);
    let alpha = Root::e_minus_e(3, 2, 3);
    assert_eq!(su3.root_string(&phi, &alpha).unwrap(), (0, 1));

    let g2 = RootSystem::build(LieFamily::g2());
    let phi = Root::e_minus_e(3, 1, 2);
    let alpha = Root::e_minus_e(3, 2, 3);
    assert_eq!(g2.root_string(&phi, &alpha).unwrap(), (-1, 2));

    let e8 = RootSystem::build(LieFamily::e8());
    let phi = Root::from_halves(&[1, 1, 1, 1, 1, 1, 1, 1]);
    let alpha = Root::e_plus_e(8, 1, 2);
    assert_eq!(e8.root_string(&phi, &alpha).unwrap(), (-1, 0));
}

#[test]
fn string_rejects_own_line() {
    let su3 = RootSystem::build(LieFamily::su(3));
    let phi = Root::e_minus_e(3, 1, 2);
    assert!(su3.root_string(&phi, &phi).is_err());
    assert!(su3.root_string(&phi, &-&phi).is_err());
}

#[test]
fn string_symmetry_and_d_identity() {
    // root_string(φ, α) = (p,q) iff root_string(φ, −α) = (−q,−p), and the
    // d-coefficient is invariant under that reversal.
    for fam in [LieFamily::su(4), LieFamily::so_odd(7), LieFamily::g2()] {
        let sys = RootSystem::build(fam);
        for phi in sys.roots() {
            for alpha in sys.roots() {
                if alpha == phi || *alpha == -phi {
                    continue;
                }
                let (p, q) = sys.root_string(phi, alpha).unwrap();
                let (pr, qr) = sys.root_string(phi, &-alpha).unwrap();
                assert_eq!((pr, qr), (-q, -p));
                assert_eq!(d_coefficient(p, q), d_coefficient(pr, qr));
            }
        }
    }
}

#[test]
fn spinor_strings_never_exceed_length_two() {
    // For the E series, strings between two half-integral (spinor-type)
    // roots are at most {φ, φ±α}.
    for fam in [LieFamily::e6(), LieFamily::e7(), LieFamily::e8()] {
        let sys = RootSystem::build(fam);
        let spinors: Vec<_> = sys
            .roots()
            .iter()
            .filter(|r| r.doubled().iter().all(|c| c % 2 != 0))
            .collect();
        for phi in &spinors {
            for alpha in &spinors {
                if alpha == phi || **alpha == -&**phi {
                    continue;
                }
                let (p, q) = sys.root_string(phi, alpha).unwrap();
                assert!(q - p <= 1, "spinor string too long in {fam:?}");
            }
        }
    }
}

#[test]
fn express_in_simples_roundtrip() {
    let f4 = RootSystem::build(LieFamily::f4());
    for r in f4.roots() {
        let coeffs = f4.express_in_simples(r).expect("root spans simples");
        let simples = f4.simple_roots();
        let mut acc = Root::from_ints(&[0, 0, 0, 0]);
        for (c, s) in coeffs.iter().zip(&simples) {
            acc = acc.add_multiple(s, *c);
        }
        assert_eq!(&acc, r);
        // All coefficients share one sign.
        assert!(coeffs.iter().all(|&c| c >= 0) || coeffs.iter().all(|&c| c <= 0));
    }
}
