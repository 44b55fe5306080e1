//! Family labels and rank bookkeeping.

use crate::{Result, RootSystemError};

/// The nine families of compact simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

/// A family together with its rank (fixed for the exceptional families).
///
/// For the A family the rank follows the Cartan label: `A_n` is `su_{n+1}`,
/// so the catalog's `su_n` is `LieFamily::su(n)` = `A_{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieFamily {
    pub family: Family,
    pub rank: usize,
}

impl LieFamily {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootSystemError::RankOutOfBounds { family, rank })
        }
    }

    /// `su_n` under the paper's `A_{n−1}` convention (ambient ℝⁿ).
    pub fn su(n: usize) -> Self {
        assert!(n >= 2, "su_n needs n >= 2");
        Self::new(Family::A, n - 1).unwrap()
    }

    /// `so_{2n+1}` = `B_n`.
    pub fn so_odd(m: usize) -> Self {
        assert!(m >= 5 && m % 2 == 1, "so_odd wants odd m >= 5");
        Self::new(Family::B, (m - 1) / 2).unwrap()
    }

    /// `so_{2n}` = `D_n`.
    pub fn so_even(m: usize) -> Self {
        assert!(m >= 8 && m % 2 == 0, "so_even wants even m >= 8");
        Self::new(Family::D, m / 2).unwrap()
    }

    /// `sp_n` = `C_n`.
    pub fn sp(n: usize) -> Self {
        Self::new(Family::C, n).unwrap()
    }

    pub fn e6() -> Self {
        Self::new(Family::E6, 6).unwrap()
    }
    pub fn e7() -> Self {
        Self::new(Family::E7, 7).unwrap()
    }
    pub fn e8() -> Self {
        Self::new(Family::E8, 8).unwrap()
    }
    pub fn f4() -> Self {
        Self::new(Family::F4, 4).unwrap()
    }
    pub fn g2() -> Self {
        Self::new(Family::G2, 2).unwrap()
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E6 | Family::E7 | Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 3,
        }
    }

    /// Number of roots of the system.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
            Family::F4 => 48,
            Family::G2 => 12,
        }
    }

    /// Dual Coxeter number `h*`.
    pub fn dual_coxeter(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n - 1,
            Family::C => n + 1,
            Family::D => 2 * n - 2,
            Family::E6 => 12,
            Family::E7 => 18,
            Family::E8 => 30,
            Family::F4 => 9,
            Family::G2 => 4,
        }
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.root_count() + self.rank
    }
}
