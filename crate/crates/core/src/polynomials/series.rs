use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, int};
use crate::{Error, Result};

/// A power series truncated to its first `order` coefficients.
///
/// Coefficient `i` multiplies `t^i`. Binary operations produce a result whose
/// order is the smaller of the two operand orders; nothing beyond the order
/// is ever read or guessed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    /// The constant series `1` to the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order];
        if let Some(c) = coeffs.first_mut() {
            *c = BigRational::one();
        }
        Self { coeffs }
    }

    /// `log(1 + t) = t - t^2/2 + t^3/3 - ...`
    pub fn log1p(order: usize) -> Self {
        let coeffs = (0..order)
            .map(|k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    BigRational::new(sign.into(), (k as i64).into())
                }
            })
            .collect();
        Self { coeffs }
    }

    /// `1 / (1 + t) = 1 - t + t^2 - ...`
    pub fn geom(order: usize) -> Self {
        let coeffs = (0..order)
            .map(|k| int(if k % 2 == 0 { 1 } else { -1 }))
            .collect();
        Self { coeffs }
    }

    /// `exp(x t) = sum x^k t^k / k!`
    pub fn exp_scaled(x: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut power = BigRational::one();
        for k in 0..order {
            coeffs.push(&power / BigRational::from_integer(factorial(k as u64)));
            power *= x;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; panics when `i >= order`.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..order.min(self.order())].to_vec() }
    }

    /// Divides by `t`, dropping the constant term. The order drops by one.
    ///
    /// Fails unless the constant term is zero (or the series is empty).
    pub fn shift_down(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(self.clone()),
            Some(c) if !c.is_zero() => Err(Error::DivisionByZero),
            Some(_) => Ok(Self { coeffs: self.coeffs[1..].to_vec() }),
        }
    }

    /// Multiplies by `t`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order());
        if self.order() > 0 {
            coeffs.push(BigRational::zero());
            coeffs.extend_from_slice(&self.coeffs[..self.order() - 1]);
        }
        Self { coeffs }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// The truncated quotient `q` with `q * den = self` up to the common order.
    pub fn div(&self, den: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order().min(den.order());
        let lead = match den.coeffs.first() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::ZeroConstantTerm),
        };
        let inv = BigRational::one() / lead;
        let mut q: Vec<BigRational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for (j, qj) in q.iter().enumerate() {
                acc -= qj * &den.coeffs[n - j];
            }
            q.push(acc * &inv);
        }
        Ok(Self { coeffs: q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn arb_series(len: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec((-50i64..50, 1i64..20), len)
            .prop_map(|v| PowerSeries::new(v.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    #[test]
    fn constructors() {
        assert_eq!(PowerSeries::log1p(4).coeffs(), &[int(0), int(1), rat(-1, 2), rat(1, 3)]);
        assert_eq!(PowerSeries::geom(3).coeffs(), &[int(1), int(-1), int(1)]);
        assert_eq!(PowerSeries::one(3).coeffs(), &[int(1), int(0), int(0)]);
        assert_eq!(PowerSeries::one(0).order(), 0);
    }

    #[test]
    fn unit_quotient() {
        let one = PowerSeries::one(5);
        assert_eq!(one.div(&one).unwrap(), one);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let log = PowerSeries::log1p(5);
        assert_eq!(PowerSeries::one(5).div(&log), Err(Error::ZeroConstantTerm));
        assert_eq!(PowerSeries::one(5).div(&PowerSeries::new(vec![])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn t_over_log1p() {
        // log(1+t)/t = 1 - t/2 + t^2/3 - ...; long division by hand gives
        // 1 + t/2 - t^2/12 + t^3/24 - 19 t^4/720
        let den = PowerSeries::log1p(6).shift_down().unwrap();
        let q = PowerSeries::one(5).div(&den).unwrap();
        assert_eq!(q.coeffs(), &[int(1), rat(1, 2), rat(-1, 12), rat(1, 24), rat(-19, 720)]);
        assert_eq!(q.coeff(2) * int(2), rat(-1, 6));
    }

    #[test]
    fn order_is_min_of_operands() {
        let a = PowerSeries::geom(7);
        let b = PowerSeries::one(4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.div(&b).unwrap().order(), 4);
        assert_eq!(a.shift_up().order(), 7);
        assert_eq!(a.truncate(3).order(), 3);
    }

    #[test]
    fn shift_down_requires_zero_constant() {
        assert!(PowerSeries::geom(3).shift_down().is_err());
        assert_eq!(PowerSeries::log1p(3).shift_down().unwrap().coeffs(), &[int(1), rat(-1, 2)]);
    }

    #[test]
    fn geom_times_one_plus_t() {
        let one_plus_t = PowerSeries::new(vec![int(1), int(1), int(0), int(0), int(0)]);
        assert_eq!(PowerSeries::geom(5).mul(&one_plus_t), PowerSeries::one(5));
    }

    proptest! {
        #[test]
        fn division_undoes_multiplication(a in arb_series(8), mut b in arb_series(8), c0 in 1i64..9) {
            b.coeffs[0] = int(c0);
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div(&b).unwrap(), a);
        }
    }
}
