//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};

use crate::rational::Rational;

/// `Σ coeffs[i] · x^i`, with no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn identity() -> Self {
        Self::new(vec![Rational::zero(), Rational::from_integer(1.into())])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Rational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            c.push(a / Rational::from_integer((i as i64 + 1).into()));
        }
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// `x ↦ p(x + h)`.
    pub fn shift(&self, h: &Rational) -> Self {
        // Horner in the ring of polynomials: p(x + h) = (…(c_n)(x+h) + c_{n−1})…
        let step = Polynomial::new(vec![h.clone(), Rational::from_integer(1.into())]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * &step) + &Polynomial::constant(c.clone()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, 1), (2, 1)]);
        let b = p(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(b.degree(), Some(1));
        assert_eq!(&a * &b, p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(a.integral(), p(&[(0, 1), (1, 1), (1, 1)]));
        assert_eq!(a.integral().derivative(), a);
    }

    #[test]
    fn shift_matches_evaluation() {
        let q = p(&[(3, 1), (-1, 2), (5, 7), (2, 3)]);
        let h = rat(-4, 9);
        let s = q.shift(&h);
        for x in [rat(0, 1), rat(1, 3), int(2), rat(-5, 4)] {
            assert_eq!(s.eval(&x), q.eval(&(&x + &h)));
        }
    }
}
