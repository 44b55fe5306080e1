//! Enumeration of the root lists per family.

use crate::{Family, LieFamily, Root};
use exact_numerics::{rat, Rational};

/// Killing-normalization factor κ with `|α|²_Killing = κ · |α|²_euclid`.
pub fn killing_factor(family: &LieFamily) -> Rational {
    let n = family.rank as i64;
    match family.family {
        Family::A => rat(1, 2 * (n + 1)),
        Family::B => rat(1, 2 * (2 * n - 1)),
        Family::C => rat(1, 4 * (n + 1)),
        Family::D => rat(1, 4 * (n - 1)),
        Family::E6 => rat(1, 24),
        Family::E7 => rat(1, 36),
        Family::E8 => rat(1, 60),
        Family::F4 => rat(1, 18),
        Family::G2 => rat(1, 24),
    }
}

/// Every `±e_i±e_j` for `1 ≤ i < j ≤ n` in ambient dimension `dim`.
fn plus_minus_pairs(dim: usize, n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut c = vec![0i64; dim];
                    c[i - 1] = 2 * si;
                    c[j - 1] = 2 * sj;
                    out.push(Root::from_doubled(c));
                }
            }
        }
    }
    out
}

/// E8 spinor roots `½(±e₁±…±e₈)` with an even number of minus signs.
fn e8_spinors() -> Vec<Root> {
    let mut out = Vec::new();
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let c: Vec<i64> = (0..8)
                .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                .collect();
            out.push(Root::from_halves(&c));
        }
    }
    out
}

pub fn enumerate_roots(family: &LieFamily) -> Vec<Root> {
    let n = family.rank;
    let dim = family.ambient_dim();
    match family.family {
        Family::A => {
            let mut out = Vec::new();
            for i in 1..=dim {
                for j in 1..=dim {
                    if i != j {
                        out.push(Root::e_minus_e(dim, i, j));
                    }
                }
            }
            out
        }
        Family::B => {
            let mut out = plus_minus_pairs(dim, n);
            for i in 1..=n {
                out.push(Root::e(dim, i, 1));
                out.push(Root::e(dim, i, -1));
            }
            out
        }
        Family::C => {
            let mut out = plus_minus_pairs(dim, n);
            for i in 1..=n {
                out.push(Root::e(dim, i, 2));
                out.push(Root::e(dim, i, -2));
            }
            out
        }
        Family::D => plus_minus_pairs(dim, n),
        Family::E8 => {
            let mut out = plus_minus_pairs(8, 8);
            out.extend(e8_spinors());
            out
        }
        Family::E7 => {
            // Inside the E8 ambient space: ±e_i±e_j (i<j≤6), ±(e₇−e₈), and
            // ½(±(e₇−e₈)+Σ₁⁶(−1)^ν e_i) with an odd number of minus signs
            // among the first six.
            let mut out = plus_minus_pairs(8, 6);
            out.push(Root::from_ints(&[0, 0, 0, 0, 0, 0, 1, -1]));
            out.push(Root::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1]));
            for mask in 0u32..64 {
                for s78 in [1i64, -1] {
                    let mut c: Vec<i64> = (0..6)
                        .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                        .collect();
                    if mask.count_ones() % 2 == 1 {
                        c.push(s78);
                        c.push(-s78);
                        out.push(Root::from_halves(&c));
                    }
                }
            }
            out
        }
        Family::E6 => {
            // Inside the E8 ambient space: ±e_i±e_j (i<j≤5) and
            // ±½(e₈−e₇−e₆+Σ₁⁵(−1)^ν e_i) with an even number of minus signs
            // among the first five.
            let mut out = plus_minus_pairs(8, 5);
            for mask in 0u32..32 {
                if mask.count_ones() % 2 == 0 {
                    let mut c: Vec<i64> = (0..5)
                        .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                        .collect();
                    c.extend([-1, -1, 1]);
                    let r = Root::from_halves(&c);
                    out.push(-&r);
                    out.push(r);
                }
            }
            out
        }
        Family::F4 => {
            let mut out = plus_minus_pairs(4, 4);
            for i in 1..=4 {
                out.push(Root::e(4, i, 1));
                out.push(Root::e(4, i, -1));
            }
            for mask in 0u32..16 {
                let c: Vec<i64> = (0..4)
                    .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                    .collect();
                out.push(Root::from_halves(&c));
            }
            out
        }
        Family::G2 => {
            let mut out = Vec::new();
            for i in 1..=3usize {
                for j in 1..=3usize {
                    if i != j {
                        out.push(Root::e_minus_e(3, i, j));
                    }
                }
            }
            // ±(2e_a − e_b − e_c) for {a,b,c} = {1,2,3}.
            for a in 0..3usize {
                let mut c = vec![-2i64; 3];
                c[a] = 4;
                let r = Root::from_doubled(c);
                out.push(-&r);
                out.push(r);
            }
            out
        }
    }
}
