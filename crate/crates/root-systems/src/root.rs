//! Root vectors in ambient coordinates.

use exact_numerics::Rational;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A vector in the ambient space, with every coordinate stored doubled so
/// that both integral and half-integral roots are exact `i64`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    /// From doubled coordinates (the raw internal representation).
    pub fn from_doubled(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// From integral coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|c| 2 * c).collect())
    }

    /// From half-integral coordinates given as numerators over 2.
    pub fn from_halves(numerators: &[i64]) -> Self {
        Self(numerators.to_vec())
    }

    /// `e_i − e_j` in an ambient space of dimension `dim` (1-based indices).
    pub fn e_minus_e(dim: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0i64; dim];
        c[i - 1] += 2;
        c[j - 1] -= 2;
        Self(c)
    }

    /// `e_i + e_j` (1-based indices, `i ≠ j`).
    pub fn e_plus_e(dim: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0i64; dim];
        c[i - 1] += 2;
        c[j - 1] += 2;
        Self(c)
    }

    /// `±e_i` and `±2e_i` via an integer multiple.
    pub fn e(dim: usize, i: usize, mult: i64) -> Self {
        let mut c = vec![0i64; dim];
        c[i - 1] = 2 * mult;
        Self(c)
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Exact ambient coordinates.
    pub fn coords(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&c| Rational::new(BigInt::from(c), BigInt::from(2)))
            .collect()
    }

    /// Euclidean inner product (exact; doubled coordinates divided out).
    pub fn dot(&self, other: &Root) -> Rational {
        let s: i64 = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .sum();
        Rational::new(BigInt::from(s), BigInt::from(4))
    }

    /// Euclidean squared length.
    pub fn euclid_norm2(&self) -> Rational {
        self.dot(self)
    }

    /// Lexicographic positivity on ambient coordinates.
    pub fn is_lex_positive(&self) -> bool {
        self.0
            .iter()
            .find(|&&c| c != 0)
            .is_some_and(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self + n·alpha`.
    pub fn add_multiple(&self, alpha: &Root, n: i64) -> Root {
        Root(
            self.0
                .iter()
                .zip(&alpha.0)
                .map(|(a, b)| a + n * b)
                .collect(),
        )
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.add_multiple(rhs, 1)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.add_multiple(rhs, -1)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    format!("{}", c / 2)
                } else {
                    format!("{c}/2")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}
