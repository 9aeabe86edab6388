//! Exact scalar arithmetic.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`]. A `BigRational` is reduced on every
//! construction and on every arithmetic result, so its denominator is
//! always positive and coprime to the numerator; equality of two values is
//! therefore structural.
//!
//! Indices (`n`, `k`) are unsigned machine integers: negative indices are not
//! representable and factorials/binomials are never extended past the
//! nonnegative integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// Integer `n` as an exact rational.
pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The canonical rational `p/q`.
///
/// Panics if `q == 0`; use [`checked_div`] for data-dependent denominators.
pub fn rat(p: i64, q: i64) -> ExactRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `a / b`, reporting division by zero instead of panicking.
pub fn checked_div(a: &ExactRational, b: &ExactRational) -> Result<ExactRational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn factorial(n: u64) -> ExactInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// The falling factorial `x (x - 1) ... (x - n + 1)`; one when `n == 0`.
pub fn falling_factorial(x: &ExactRational, n: usize) -> ExactRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term -= BigRational::one();
    }
    acc
}

/// `(-1)^n` as a small integer.
pub(crate) fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn is_canonical(q: &BigRational) -> bool {
        q.denom() > &BigInt::zero() && q.numer().gcd(q.denom()).is_one()
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| rat(p, q))
    }

    #[test]
    fn small_sums() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(7, 9) + int(0), rat(7, 9));
        let half = rat(2, 4);
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        let neg = rat(3, -6);
        assert!(is_canonical(&neg));
        assert_eq!(neg, rat(-1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&rat(1, 2), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&rat(1, 2), &rat(3, 4)), Ok(rat(2, 3)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // Pascal's rule as an independent check
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        let mut oracle = BigInt::one();
        for i in 1..=20u32 {
            oracle *= BigInt::from(i);
        }
        assert_eq!(oracle, "2432902008176640000".parse::<BigInt>().unwrap());
        assert_eq!(factorial(20), oracle);
    }

    #[test]
    fn falling_factorial_special_points() {
        for k in 0..12usize {
            let expected = BigRational::from_integer(factorial(k as u64)) * int(sign(k));
            assert_eq!(falling_factorial(&int(-1), k), expected);
        }
        for r in 1..12usize {
            assert_eq!(
                falling_factorial(&int(r as i64 - 1), r - 1),
                BigRational::from_integer(factorial(r as u64 - 1))
            );
        }
        assert_eq!(falling_factorial(&rat(5, 2), 2), rat(15, 4));
        assert_eq!(falling_factorial(&rat(5, 2), 0), int(1));
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            for v in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(is_canonical(&v));
            }
            if let Ok(q) = checked_div(&a, &b) {
                prop_assert!(is_canonical(&q));
                prop_assert_eq!(q * &b, a.clone());
            }
        }

        #[test]
        fn falling_factorial_step(p in -50i64..50, q in 1i64..20, n in 0usize..15) {
            let x = rat(p, q);
            let next = falling_factorial(&x, n) * (&x - int(n as i64));
            prop_assert_eq!(falling_factorial(&x, n + 1), next);
        }
    }
}
