//! Dense univariate polynomials over the rationals.
//!
//! Small and purpose-built: the solvers only ever need low-degree (≤ 8)
//! polynomials, but every operation here is exact.

use crate::Rational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with rational coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros so the leading coefficient is non-zero.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x` as a polynomial.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::from_integer(1.into())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Makes the polynomial monic (no-op on the zero polynomial).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_zero() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg rhs`.  Panics if `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dr = rhs.degree().unwrap();
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dr)];
        while rem.len() > dr {
            let k = rem.len() - 1 - dr;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - c * &factor;
                    rem[k + i] = v;
                }
            }
            quot[k] = factor;
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic polynomial gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p′)`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == Some(0) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }

    /// Cauchy root bound: every real root lies in `(-M, M)`.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = match self.leading() {
            Some(l) => l,
            None => return Rational::from_integer(1.into()),
        };
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::from_integer(1.into())
    }

    /// Substitutes `x → x·k` (variable scaling), useful for normalizations.
    pub fn compose_scale(&self, k: &Rational) -> Self {
        let mut pow = Rational::from_integer(1.into());
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow *= k;
                v
            })
            .collect();
        Self::new(coeffs)
    }

    /// Clears denominators and content: returns the primitive integer-scaled
    /// polynomial with positive leading coefficient (same roots).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = num_bigint::BigInt::from(0);
        for c in &ints {
            gcd = num_integer::gcd(gcd, c.clone());
        }
        if gcd.is_zero() {
            return self.clone();
        }
        if ints.last().unwrap().is_negative() {
            gcd = -gcd;
        }
        Self::new(ints.iter().map(|c| Rational::from(c / &gcd)).collect())
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                a + b
            })
            .collect();
        RatPolynomial::new(coeffs)
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs.clone())
    }
}

impl Neg for RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        RatPolynomial::new(coeffs)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a == Rational::from_integer(1.into()) => write!(f, "z")?,
                1 => write!(f, "{a}z")?,
                _ if a == Rational::from_integer(1.into()) => write!(f, "z^{i}")?,
                _ => write!(f, "{a}z^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn div_rem_roundtrip() {
        let p = RatPolynomial::from_ints(&[513, -1224, 1088, -432, 63]);
        let d = RatPolynomial::from_ints(&[-3, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        // (x−1)²(x+2)
        let p = &(&RatPolynomial::from_ints(&[-1, 1]) * &RatPolynomial::from_ints(&[-1, 1]))
            * &RatPolynomial::from_ints(&[2, 1]);
        let sf = p.squarefree_part().monic();
        let expected = (&RatPolynomial::from_ints(&[-1, 1])
            * &RatPolynomial::from_ints(&[2, 1]))
            .monic();
        assert_eq!(sf, expected);
    }

    #[test]
    fn eval_horner() {
        let p = RatPolynomial::from_ints(&[1, 0, -2]); // 1 − 2x²
        assert_eq!(p.eval(&rat(1, 2)), rat(1, 2));
    }
}
