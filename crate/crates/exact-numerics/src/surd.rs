//! Quadratic surds `p + q√d` with exact, syntactic equality.
//!
//! The radicand is eagerly reduced to square-free form so that two surds are
//! numerically equal if and only if their three components are equal.
//! Arithmetic between surds over *different* (non-zero) radicands is refused
//! loudly: the closed-form solutions served by this crate never mix
//! radicands, so such a mix is always an upstream bug.

use crate::{ExactError, Rational, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact quadratic surd `rational + coeff·√radicand`.
///
/// Invariants: `radicand` is non-negative and square-free, `radicand == 0`
/// iff `coeff == 0`, and `radicand != 1` (a perfect square is folded into the
/// rational part).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    rational: Rational,
    coeff: Rational,
    radicand: BigInt,
}

/// Splits `n ≥ 0` as `n = s²·d` with `d` square-free; returns `(s, d)`.
fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut square = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            square *= &p;
        }
        p += 1;
    }
    (square, rest)
}

impl QuadSurd {
    /// Builds `rational + coeff·√radicand`, normalizing the radicand to
    /// square-free form.  `radicand` must be non-negative.
    pub fn new(rational: Rational, coeff: Rational, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        if coeff.is_zero() || radicand.is_zero() {
            return Self {
                rational,
                coeff: Rational::zero(),
                radicand: BigInt::zero(),
            };
        }
        let (square, rest) = squarefree_decompose(&radicand);
        let coeff = coeff * Rational::from(square);
        if rest.is_one() {
            Self {
                rational: rational + coeff,
                coeff: Rational::zero(),
                radicand: BigInt::zero(),
            }
        } else {
            Self {
                rational,
                coeff,
                radicand: rest,
            }
        }
    }

    pub fn from_rational(rational: Rational) -> Self {
        Self {
            rational,
            coeff: Rational::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Returns the value as a rational if it is one.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    /// Exact square of the surd (always well-defined).
    pub fn square(&self) -> Self {
        let rational = &self.rational * &self.rational
            + &self.coeff * &self.coeff * Rational::from(self.radicand.clone());
        let coeff = Rational::from(BigInt::from(2)) * &self.rational * &self.coeff;
        Self::new(rational, coeff, self.radicand.clone())
    }

    /// Exact sign of the value: -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        if self.coeff.is_zero() {
            return match self.rational.cmp(&Rational::zero()) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            };
        }
        // a + b√d with b ≠ 0, d ≥ 2: compare a² against b²d on the correct side.
        let a = &self.rational;
        let b = &self.coeff;
        let bd = b * b * Rational::from(self.radicand.clone());
        if b.is_positive() {
            if !a.is_negative() {
                1
            } else if &(a * a) < &bd {
                1
            } else {
                -1 // a² > b²d; equality impossible since d is not a square
            }
        } else if !a.is_positive() {
            -1
        } else if &(a * a) < &bd {
            -1
        } else {
            1
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Advisory floating approximation.
    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.coeff.is_zero() {
            r
        } else {
            r + self.coeff.to_f64().unwrap_or(f64::NAN)
                * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
        }
    }

    fn same_field(&self, rhs: &Self) -> Result<BigInt> {
        if self.radicand.is_zero() || rhs.radicand.is_zero() || self.radicand == rhs.radicand {
            Ok(if self.radicand.is_zero() {
                rhs.radicand.clone()
            } else {
                self.radicand.clone()
            })
        } else {
            Err(ExactError::MixedRadicands(
                self.radicand.clone(),
                rhs.radicand.clone(),
            ))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.same_field(rhs)?;
        Ok(Self::new(
            &self.rational + &rhs.rational,
            &self.coeff + &rhs.coeff,
            d,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&(-rhs.clone()))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.same_field(rhs)?;
        let rational = &self.rational * &rhs.rational
            + &self.coeff * &rhs.coeff * Rational::from(d.clone());
        let coeff = &self.rational * &rhs.coeff + &self.coeff * &rhs.rational;
        Ok(Self::new(rational, coeff, d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let d = self.same_field(rhs)?;
        // Conjugate trick: (a+b√d)/(c+e√d) = (a+b√d)(c−e√d)/(c²−e²d).
        let denom = &rhs.rational * &rhs.rational
            - &rhs.coeff * &rhs.coeff * Rational::from(d.clone());
        if denom.is_zero() {
            // c² = e²d with d square-free forces c = e = 0.
            return Err(ExactError::DivisionByZero);
        }
        let conj = Self {
            rational: rhs.rational.clone(),
            coeff: -rhs.coeff.clone(),
            radicand: rhs.radicand.clone(),
        };
        let num = self.checked_mul(&conj)?;
        Ok(Self {
            rational: num.rational / &denom,
            coeff: num.coeff / &denom,
            radicand: num.radicand,
        })
    }

    /// Scales by an exact rational.
    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            rational: &self.rational * k,
            coeff: &self.coeff * k,
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            rational: -self.rational,
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

macro_rules! surd_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: QuadSurd) -> QuadSurd {
                self.$checked(&rhs).expect("surd arithmetic over mixed radicands")
            }
        }
        impl $trait for &QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                self.$checked(rhs).expect("surd arithmetic over mixed radicands")
            }
        }
    };
}

surd_binop!(Add, add, checked_add);
surd_binop!(Sub, sub, checked_sub);
surd_binop!(Mul, mul, checked_mul);
surd_binop!(Div, div, checked_div);

impl From<Rational> for QuadSurd {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for QuadSurd {
    /// Renders rationals as `a/b` and genuine surds as `(a±b√d)/c` over a
    /// common positive denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", self.rational);
        }
        let c: BigInt = num_integer::lcm(
            self.rational.denom().clone(),
            self.coeff.denom().clone(),
        );
        let a = self.rational.numer() * (&c / self.rational.denom());
        let b = self.coeff.numer() * (&c / self.coeff.denom());
        let sign = if b.is_negative() { '-' } else { '+' };
        let babs = b.abs();
        let surd = if babs.is_one() {
            format!("\u{221a}{}", self.radicand)
        } else {
            format!("{}\u{221a}{}", babs, self.radicand)
        };
        let num = if a.is_zero() {
            if b.is_negative() {
                format!("-{surd}")
            } else {
                surd
            }
        } else {
            format!("{a}{sign}{surd}")
        };
        if c.is_one() {
            if a.is_zero() {
                write!(f, "{num}")
            } else {
                write!(f, "({num})")
            }
        } else if a.is_zero() {
            write!(f, "{num}/{c}")
        } else {
            write!(f, "({num})/{c}")
        }
    }
}

/// Exact square root of a non-negative rational as a quadratic surd.
///
/// `√(a/b) = √(ab)/b`; the radicand is reduced square-free, so a perfect
/// square collapses to a pure rational (radicand 0).
pub fn sqrt_exact(x: &Rational) -> Result<QuadSurd> {
    if x.is_negative() {
        return Err(ExactError::NegativeRadicand(x.clone()));
    }
    if x.is_zero() {
        return Ok(QuadSurd::zero());
    }
    let n = x.numer();
    let d = x.denom();
    // √(n/d) = (1/d)·√(n·d)
    Ok(QuadSurd::new(
        Rational::zero(),
        Rational::new(BigInt::one(), d.clone()),
        n * d,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn sqrt_perfect_square_collapses() {
        assert_eq!(
            sqrt_exact(&rat(49, 81)).unwrap(),
            QuadSurd::from_rational(rat(7, 9))
        );
    }

    #[test]
    fn sqrt_irrational_normalizes_radicand() {
        // 11/18 = 22/36, so √(11/18) = (1/6)√22.
        let s = sqrt_exact(&rat(11, 18)).unwrap();
        assert_eq!(s, QuadSurd::new(rat(0, 1), rat(1, 6), BigInt::from(22)));
        assert_eq!(s.to_string(), "\u{221a}22/6");
    }

    #[test]
    fn display_common_denominator() {
        // (6 ± √22)/2
        let s = QuadSurd::new(rat(3, 1), rat(1, 2), BigInt::from(22));
        assert_eq!(s.to_string(), "(6+\u{221a}22)/2");
    }

    #[test]
    fn mixed_radicands_fail_loudly() {
        let a = QuadSurd::new(rat(0, 1), rat(1, 1), BigInt::from(2));
        let b = QuadSurd::new(rat(0, 1), rat(1, 1), BigInt::from(3));
        assert!(matches!(
            a.checked_add(&b),
            Err(ExactError::MixedRadicands(..))
        ));
    }

    #[test]
    fn exact_sign() {
        // 3 − √8 > 0, 3 − √10 < 0.
        let p = QuadSurd::new(rat(3, 1), rat(-1, 1), BigInt::from(8));
        let n = QuadSurd::new(rat(3, 1), rat(-1, 1), BigInt::from(10));
        assert_eq!(p.signum(), 1);
        assert_eq!(n.signum(), -1);
    }
}
