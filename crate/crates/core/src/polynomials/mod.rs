//! Exact polynomials in the monomial and falling-factorial bases, the
//! operator calculus acting on them, and truncated power series.
//!
//! The zero polynomial is stored as an empty coefficient vector; every
//! constructor trims trailing zeros, so a nonempty vector always ends in a
//! nonzero coefficient.
//!
//! Operators that only make sense in one basis (`diff`, `translate`,
//! `antiderivative`, `mul`) convert falling-factorial inputs to the monomial
//! basis first and return monomial results. `delta` and `delta_inv` work
//! natively in both bases through independent code paths and return a result
//! in the input's basis.

mod series;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, int};
use crate::sequences::{triangle, StirlingKind};

pub use series::PowerSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Coefficient `i` multiplies `X^i`.
    Monomial,
    /// Coefficient `i` multiplies the falling factorial `X(X-1)...(X-i+1)`.
    FallingFactorial,
}

/// A dense polynomial with exact rational coefficients in a fixed basis.
///
/// Derived equality is structural (same basis, same coefficients); use
/// [`Polynomial::value_eq`] to compare values across bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    basis: Basis,
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(basis: Basis, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { basis, coeffs }
    }

    pub fn from_ints(basis: Basis, coeffs: &[i64]) -> Self {
        Self::new(basis, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(basis: Basis) -> Self {
        Self { basis, coeffs: Vec::new() }
    }

    pub fn constant(basis: Basis, c: BigRational) -> Self {
        Self::new(basis, vec![c])
    }

    /// `X^n` in the monomial basis.
    pub fn monomial(n: usize) -> Self {
        Self::unit(Basis::Monomial, n)
    }

    /// `X(X-1)...(X-n+1)` in the falling-factorial basis.
    pub fn falling(n: usize) -> Self {
        Self::unit(Basis::FallingFactorial, n)
    }

    fn unit(basis: Basis, n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        Self { basis, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of basis element `i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Equality of the represented functions, regardless of basis.
    pub fn value_eq(&self, other: &Polynomial) -> bool {
        if self.basis == other.basis {
            self.coeffs == other.coeffs
        } else {
            self.coeffs == other.convert(self.basis).coeffs
        }
    }

    /// Re-expresses the polynomial in `target`, using the Stirling triangles
    /// as change-of-basis matrices.
    pub fn convert(&self, target: Basis) -> Polynomial {
        if self.basis == target || self.is_zero() {
            return Polynomial { basis: target, coeffs: self.coeffs.clone() };
        }
        let kind = match target {
            // X^i = sum_k S(i, k) X<k>
            Basis::FallingFactorial => StirlingKind::Second,
            // X<i> = sum_k s(i, k) X^k
            Basis::Monomial => StirlingKind::FirstSigned,
        };
        let deg = self.coeffs.len() - 1;
        let mut out = vec![BigRational::zero(); deg + 1];
        triangle(kind).with_rows(deg, |rows| {
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, entry) in rows[i].iter().enumerate() {
                    if !entry.is_zero() {
                        out[k] += c * BigRational::from_integer(entry.clone());
                    }
                }
            }
        });
        Polynomial::new(target, out)
    }

    pub fn to_monomial(&self) -> Polynomial {
        self.convert(Basis::Monomial)
    }

    pub fn to_falling(&self) -> Polynomial {
        self.convert(Basis::FallingFactorial)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        match self.basis {
            Basis::Monomial => self
                .coeffs
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * x + c),
            Basis::FallingFactorial => {
                let mut acc = BigRational::zero();
                let mut term = BigRational::one();
                let mut shift = x.clone();
                for c in &self.coeffs {
                    acc += c * &term;
                    term *= &shift;
                    shift -= BigRational::one();
                }
                acc
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::new(self.basis, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product of two polynomials, in the monomial basis.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let p = self.to_monomial();
        let q = other.to_monomial();
        if p.is_zero() || q.is_zero() {
            return Polynomial::zero(Basis::Monomial);
        }
        let mut out = vec![BigRational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
        for (i, a) in p.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in q.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(Basis::Monomial, out)
    }

    /// Derivative `d/dX`, in the monomial basis.
    pub fn diff(&self) -> Polynomial {
        let p = self.to_monomial();
        let coeffs = p
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Polynomial::new(Basis::Monomial, coeffs)
    }

    /// The polynomial `p(X + r)`, in the monomial basis.
    pub fn translate(&self, r: &BigRational) -> Polynomial {
        let p = self.to_monomial();
        // Horner in the shifted variable: acc <- acc * (X + r) + c
        let mut acc: Vec<BigRational> = Vec::with_capacity(p.coeffs.len());
        for c in p.coeffs.iter().rev() {
            acc.insert(0, BigRational::zero());
            for i in 0..acc.len() - 1 {
                let carry = &acc[i + 1] * r;
                acc[i] += carry;
            }
            acc[0] += c;
        }
        Polynomial::new(Basis::Monomial, acc)
    }

    /// Forward difference `p(X + 1) - p(X)`.
    ///
    /// Falling-factorial inputs use `Δ X<k> = k X<k-1>` coefficientwise;
    /// monomial inputs are translated and subtracted. The two paths share no
    /// code, which lets each one check the other.
    pub fn delta(&self) -> Polynomial {
        match self.basis {
            Basis::FallingFactorial => {
                let coeffs = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * int(k as i64))
                    .collect();
                Polynomial::new(Basis::FallingFactorial, coeffs)
            }
            Basis::Monomial => &self.translate(&BigRational::one()) - self,
        }
    }

    /// The antidifference `q` with `Δq = p` and `q(0) = 0`, in the input's basis.
    ///
    /// In the falling-factorial basis this is `X<k> -> X<k+1>/(k+1)`. In the
    /// monomial basis it is solved by back-substitution against
    /// `Δ X^m = sum_{j<m} C(m, j) X^j`, without touching Stirling numbers.
    pub fn delta_inv(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        match self.basis {
            Basis::FallingFactorial => {
                let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
                for (k, c) in self.coeffs.iter().enumerate() {
                    coeffs[k + 1] = c / int(k as i64 + 1);
                }
                Polynomial::new(Basis::FallingFactorial, coeffs)
            }
            Basis::Monomial => {
                let mut rest = self.coeffs.clone();
                let mut q = vec![BigRational::zero(); rest.len() + 1];
                for d in (0..rest.len()).rev() {
                    if rest[d].is_zero() {
                        continue;
                    }
                    // leading term of Δ X^{d+1} is (d+1) X^d
                    let m = d + 1;
                    let a = &rest[d] / int(m as i64);
                    for (j, slot) in rest.iter_mut().enumerate().take(m) {
                        let b = BigRational::from_integer(binomial(m as u64, j as u64));
                        *slot -= &a * b;
                    }
                    q[m] = a;
                }
                Polynomial::new(Basis::Monomial, q)
            }
        }
    }

    /// The antiderivative vanishing at zero, in the monomial basis.
    pub fn antiderivative(&self) -> Polynomial {
        let p = self.to_monomial();
        if p.is_zero() {
            return p;
        }
        let mut coeffs = Vec::with_capacity(p.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(
            p.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / int(i as i64 + 1)),
        );
        Polynomial::new(Basis::Monomial, coeffs)
    }

    /// `∫_0^1 p(x) dx`.
    pub fn integrate_01(&self) -> BigRational {
        self.to_monomial()
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / int(i as i64 + 1))
            .sum()
    }

    /// `(X + a)(X + a + 1) ... (X + a + n - 1)` in the monomial basis, built
    /// by repeated multiplication.
    pub fn rising_product(a: i64, n: usize) -> Polynomial {
        (0..n).fold(Polynomial::constant(Basis::Monomial, BigRational::one()), |acc, j| {
            acc.mul(&Polynomial::new(Basis::Monomial, vec![int(a + j as i64), BigRational::one()]))
        })
    }

    /// `(X - a)(X - a - 1) ... (X - a - n + 1)` in the monomial basis, built
    /// by repeated multiplication.
    pub fn falling_product(a: i64, n: usize) -> Polynomial {
        (0..n).fold(Polynomial::constant(Basis::Monomial, BigRational::one()), |acc, j| {
            acc.mul(&Polynomial::new(Basis::Monomial, vec![int(-a - j as i64), BigRational::one()]))
        })
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let other = other.convert(self.basis);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeff(i);
                let b = other.coeff(i);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Polynomial::new(self.basis, coeffs)
    }
}

/// Sum in the left operand's basis.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, false)
    }
}

/// Difference in the left operand's basis.
impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    /// Coefficients low-degree first, e.g. `[0, 2, -3, 1] (monomial)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        let tag = match self.basis {
            Basis::Monomial => "monomial",
            Basis::FallingFactorial => "falling",
        };
        write!(f, "] ({tag})")
    }
}
