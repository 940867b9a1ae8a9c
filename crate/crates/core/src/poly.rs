//! Integer-coefficient polynomials with arbitrary-precision coefficients.
//!
//! The only nontrivial algorithms here are the Taylor shift (exact
//! binomial expansion via Horner evaluation in the polynomial ring) and
//! Descartes' sign-change count, which is exact with multiplicity for
//! real-rooted polynomials — the case that matters for characteristic
//! polynomials of symmetric matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial with `BigInt` coefficients, index = degree.
///
/// The zero polynomial is the empty coefficient vector; otherwise the
/// highest-degree coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, normalizing.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> IntPoly {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `x + c`.
    pub fn x_plus(c: i64) -> IntPoly {
        IntPoly::from_coeffs(vec![BigInt::from(c), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Taylor shift: returns `q` with `q(y) = p(y + c)` exactly.
    ///
    /// Horner evaluation in the polynomial ring: repeatedly multiply the
    /// accumulator by `(y + c)` and add the next descending coefficient.
    pub fn taylor_shift(&self, c: i64) -> IntPoly {
        if c == 0 || self.is_zero() {
            return self.clone();
        }
        let c = BigInt::from(c);
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // acc = acc * (y + c) + a, in place: new[i] = c*old[i] + old[i-1].
            acc.push(BigInt::zero());
            for i in (0..acc.len() - 1).rev() {
                let scaled = &acc[i] * &c;
                let carried = core::mem::replace(&mut acc[i], scaled);
                acc[i + 1] += carried;
            }
            acc[0] += a;
        }
        IntPoly::from_coeffs(acc)
    }

    /// Multiplicity of the root 0 (count of low-order zero coefficients).
    ///
    /// Zero for the zero polynomial by convention; callers guard that case.
    pub fn root_multiplicity_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Number of strictly positive roots counted with multiplicity,
    /// assuming every root of `self` is real.
    ///
    /// Roots at 0 are excluded before counting. By Descartes' rule of
    /// signs the count of sign changes in the coefficient sequence is an
    /// upper bound that is attained when all roots are real.
    pub fn positive_roots_real_rooted(&self) -> Result<usize, ZeroPolynomial> {
        if self.is_zero() {
            return Err(ZeroPolynomial);
        }
        let mut changes = 0;
        let mut last_sign = 0i8;
        for c in self.coeffs.iter().skip(self.root_multiplicity_at_zero()) {
            let s = match c.sign() {
                num_bigint::Sign::Plus => 1i8,
                num_bigint::Sign::Minus => -1i8,
                num_bigint::Sign::NoSign => 0i8,
            };
            if s == 0 {
                continue;
            }
            if last_sign != 0 && s != last_sign {
                changes += 1;
            }
            last_sign = s;
        }
        Ok(changes)
    }

    /// Replaces `y` by `-y`, negating odd coefficients.
    pub fn reflected(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

/// Error for root counting on the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroPolynomial;

impl fmt::Display for ZeroPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root counting is undefined for the zero polynomial")
    }
}

impl core::error::Error for ZeroPolynomial {}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let m = c.abs();
            if k == 0 {
                write!(f, "{m}")?;
            } else {
                if !m.is_one() {
                    write!(f, "{m}")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_of_square() {
        // (y+1)^2 = y^2 + 2y + 1
        let p = IntPoly::from_i64_coeffs(&[0, 0, 1]);
        assert_eq!(p.taylor_shift(1), IntPoly::from_i64_coeffs(&[1, 2, 1]));
        assert_eq!(p.taylor_shift(0), p);
        // p(y - 2) with p = x^2 + x: (y-2)^2 + (y-2) = y^2 - 3y + 2
        let q = IntPoly::from_i64_coeffs(&[0, 1, 1]);
        assert_eq!(q.taylor_shift(-2), IntPoly::from_i64_coeffs(&[2, -3, 1]));
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = IntPoly::from_i64_coeffs(&[3, -1, 0, 2, 5]);
        for c in -4..=4 {
            let q = p.taylor_shift(c);
            for y in -5..=5i64 {
                assert_eq!(q.eval_i64(y), p.eval_i64(y + c));
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        // x^2 - 1 has one positive root.
        let p = IntPoly::from_i64_coeffs(&[-1, 0, 1]);
        assert_eq!(p.positive_roots_real_rooted().unwrap(), 1);
        // (x-2)(x-3)x^2 = x^4 - 5x^3 + 6x^2: positive roots {2, 3}.
        let q = IntPoly::from_i64_coeffs(&[0, 0, 6, -5, 1]);
        assert_eq!(q.positive_roots_real_rooted().unwrap(), 2);
        assert_eq!(q.root_multiplicity_at_zero(), 2);
        // (x-1)^3: multiplicity counts.
        let c = IntPoly::x_plus(-1).pow(3);
        assert_eq!(c.positive_roots_real_rooted().unwrap(), 3);
        assert_eq!(
            IntPoly::zero().positive_roots_real_rooted(),
            Err(ZeroPolynomial)
        );
    }

    #[test]
    fn arithmetic_and_display() {
        let p = IntPoly::x_plus(2).mul(&IntPoly::x_plus(-1));
        assert_eq!(p, IntPoly::from_i64_coeffs(&[-2, 1, 1]));
        assert_eq!(alloc::format!("{p}"), "x^2 + x - 2");
        let r = p.reflected();
        assert_eq!(r, IntPoly::from_i64_coeffs(&[-2, -1, 1]));
        assert!(p.sub(&p).is_zero());
    }
}
