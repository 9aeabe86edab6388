//! Bernoulli numbers of the first kind `B_n` (with `B_1 = -1/2`, i.e.
//! `B_n = B_n(0)`) and of the second kind `B*_n`, the coefficients of
//! `t / log(1 + t) = sum B*_n t^n / n!`.
//!
//! Each family has a primary route, used to fill the shared cache, and
//! independent cross-check routes:
//!
//! | family | primary                                | cross-checks                                  |
//! |--------|----------------------------------------|-----------------------------------------------|
//! | `B_n`  | `sum_i (-1)^i i!/(i+1) S(n, i)`        | `sum_{k<=n} C(n+1, k) B_k = 0`                |
//! | `B*_n` | `∫_0^1 x(x-1)...(x-n+1) dx`            | `sum_i s(n, i)/(i+1)`; series `t/log(1+t)`    |
//!
//! The integral route expands the falling factorial by direct multiplication,
//! so it shares nothing with the Stirling-sum route.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::stirling::{stirling2, triangle, StirlingKind};
use crate::arith::{binomial, factorial, int, sign};
use crate::polynomials::{Basis, Polynomial, PowerSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BernoulliKind {
    First,
    Second,
}

/// Append-only cache of one Bernoulli family.
#[derive(Debug)]
pub struct BernoulliCache {
    kind: BernoulliKind,
    values: RwLock<Vec<BigRational>>,
}

static FIRST: BernoulliCache = BernoulliCache::new(BernoulliKind::First);
static SECOND: BernoulliCache = BernoulliCache::new(BernoulliKind::Second);

pub fn cache(kind: BernoulliKind) -> &'static BernoulliCache {
    match kind {
        BernoulliKind::First => &FIRST,
        BernoulliKind::Second => &SECOND,
    }
}

/// `B_n`, from the shared cache.
pub fn bernoulli_first(n: usize) -> BigRational {
    FIRST.get(n)
}

/// `B*_n`, from the shared cache.
pub fn bernoulli_second(n: usize) -> BigRational {
    SECOND.get(n)
}

impl BernoulliCache {
    pub const fn new(kind: BernoulliKind) -> Self {
        Self { kind, values: RwLock::new(Vec::new()) }
    }

    pub fn kind(&self) -> BernoulliKind {
        self.kind
    }

    pub fn get(&self, n: usize) -> BigRational {
        self.with_prefix(n, |v| v[n].clone())
    }

    /// Values `0..=max_n`.
    pub fn prefix(&self, max_n: usize) -> Vec<BigRational> {
        self.with_prefix(max_n, <[BigRational]>::to_vec)
    }

    fn with_prefix<R>(&self, max_n: usize, f: impl FnOnce(&[BigRational]) -> R) -> R {
        {
            let values = self.values.read().expect("bernoulli cache poisoned");
            if values.len() > max_n {
                return f(&values[..=max_n]);
            }
        }
        self.extend_to(max_n);
        let values = self.values.read().expect("bernoulli cache poisoned");
        f(&values[..=max_n])
    }

    fn extend_to(&self, max_n: usize) {
        let mut values = self.values.write().expect("bernoulli cache poisoned");
        let start = values.len();
        if start > max_n {
            return;
        }
        match self.kind {
            BernoulliKind::First => {
                for n in start..=max_n {
                    values.push(first_by_stirling2(n));
                }
            }
            BernoulliKind::Second => {
                let mut falling = Polynomial::falling_product(0, start);
                for n in start..=max_n {
                    values.push(falling.integrate_01());
                    falling = falling.mul(&Polynomial::from_ints(Basis::Monomial, &[-(n as i64), 1]));
                }
            }
        }
    }
}

fn first_by_stirling2(n: usize) -> BigRational {
    triangle(StirlingKind::Second).with_rows(n, |rows| {
        rows[n]
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| {
                let num = factorial(i as u64) * s * sign(i);
                BigRational::new(num, BigInt::from(i + 1))
            })
            .sum()
    })
}

/// `B_0..=B_max_n` from `sum_{k=0}^{n} C(n+1, k) B_k = 0` (`n >= 1`).
pub fn bernoulli_first_by_recurrence(max_n: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(max_n + 1);
    out.push(BigRational::one());
    for n in 1..=max_n {
        let m = n as u64 + 1;
        let acc: BigRational = out
            .iter()
            .enumerate()
            .map(|(k, b)| b * BigRational::from_integer(binomial(m, k as u64)))
            .sum();
        out.push(-acc / int(m as i64));
    }
    out
}

/// `B*_n = sum_i s(n, i) / (i + 1)`.
pub fn bernoulli_second_by_stirling_sum(n: usize) -> BigRational {
    triangle(StirlingKind::FirstSigned).with_rows(n, |rows| {
        rows[n]
            .iter()
            .enumerate()
            .map(|(i, s)| BigRational::new(s.clone(), BigInt::from(i + 1)))
            .sum()
    })
}

/// `B*_0..=B*_max_n` as `n!` times the coefficients of `t / log(1 + t)`.
pub fn bernoulli_second_by_series(max_n: usize) -> Vec<BigRational> {
    let order = max_n + 1;
    let log_over_t = PowerSeries::log1p(order + 1)
        .shift_down()
        .expect("log(1+t) has no constant term");
    let series = PowerSeries::one(order)
        .div(&log_over_t)
        .expect("log(1+t)/t has constant term 1");
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * BigRational::from_integer(factorial(n as u64)))
        .collect()
}

/// `B_n(X) = sum_k C(n, k) B_{n-k} X^k`, monomial basis.
pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    let b = FIRST.prefix(n);
    let coeffs = (0..=n)
        .map(|k| BigRational::from_integer(binomial(n as u64, k as u64)) * &b[n - k])
        .collect();
    Polynomial::new(Basis::Monomial, coeffs)
}

/// `λ(r, n, k) = sum_{l=0}^{r-1-k} C(r-1, l) S(r-1-l, k) n^l`, for `0 <= k < r`.
pub fn lambda_coeff(r: usize, n: usize, k: usize) -> Result<BigRational> {
    if r == 0 || k >= r {
        return Err(Error::LambdaIndex { r, k });
    }
    let n = BigInt::from(n);
    let total: BigInt = (0..r - k)
        .map(|l| binomial(r as u64 - 1, l as u64) * stirling2(r - 1 - l, k) * num_traits::pow(n.clone(), l))
        .sum();
    Ok(BigRational::from_integer(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn first_kind_small_values() {
        assert_eq!(bernoulli_first(0), int(1));
        assert_eq!(bernoulli_first(1), rat(-1, 2));
        // -1/2 S(2,1) + 2/3 S(2,2)
        assert_eq!(rat(-1, 2) + rat(2, 3), rat(1, 6));
        assert_eq!(bernoulli_first(2), rat(1, 6));
        assert_eq!(bernoulli_first(4), rat(-1, 30));
        assert_eq!(bernoulli_first(12), rat(-691, 2730));
    }

    #[test]
    fn first_kind_routes_agree() {
        let rec = bernoulli_first_by_recurrence(100);
        assert_eq!(rec[1], rat(-1, 2));
        assert_eq!(FIRST.prefix(100), rec);
    }

    #[test]
    fn odd_first_kind_vanish() {
        for n in (3..100).step_by(2) {
            assert!(bernoulli_first(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn second_kind_small_values() {
        assert_eq!(bernoulli_second(0), int(1));
        assert_eq!(bernoulli_second(1), rat(1, 2));
        assert_eq!(bernoulli_second(2), rat(-1, 6));
        assert_eq!(bernoulli_second(3), rat(1, 4));
        assert_eq!(bernoulli_second(4), rat(-19, 30));
    }

    #[test]
    fn second_kind_routes_agree() {
        let series = bernoulli_second_by_series(100);
        let integral = SECOND.prefix(100);
        assert_eq!(integral, series);
        for (n, v) in integral.iter().enumerate() {
            assert_eq!(&bernoulli_second_by_stirling_sum(n), v, "n = {n}");
        }
    }

    #[test]
    fn fresh_cache_grows_in_steps() {
        let c = BernoulliCache::new(BernoulliKind::Second);
        assert_eq!(c.get(3), rat(1, 4));
        assert_eq!(c.get(1), rat(1, 2));
        assert_eq!(c.get(7), bernoulli_second(7));
        assert_eq!(c.prefix(10), SECOND.prefix(10));
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_eq!(bernoulli_polynomial(0), Polynomial::from_ints(Basis::Monomial, &[1]));
        assert_eq!(
            bernoulli_polynomial(2),
            Polynomial::new(Basis::Monomial, vec![rat(1, 6), int(-1), int(1)])
        );
        for n in 1..=15 {
            let p = bernoulli_polynomial(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.coeff(n), int(1));
            assert_eq!(p.delta(), Polynomial::monomial(n - 1).scale(&int(n as i64)));
            assert_eq!(p.diff(), bernoulli_polynomial(n - 1).scale(&int(n as i64)));
            assert_eq!(p.eval(&int(0)), bernoulli_first(n));
        }
    }

    #[test]
    fn lambda_small_cases() {
        for n in 0..10usize {
            let ni = n as i64;
            assert_eq!(lambda_coeff(1, n, 0).unwrap(), int(1));
            assert_eq!(lambda_coeff(2, n, 0).unwrap(), int(ni));
            assert_eq!(lambda_coeff(2, n, 1).unwrap(), int(1));
            assert_eq!(lambda_coeff(3, n, 0).unwrap(), int(ni * ni));
            assert_eq!(lambda_coeff(3, n, 1).unwrap(), int(2 * ni + 1));
            assert_eq!(lambda_coeff(3, n, 2).unwrap(), int(1));
        }
        assert_eq!(lambda_coeff(3, 1, 3), Err(Error::LambdaIndex { r: 3, k: 3 }));
        assert_eq!(lambda_coeff(0, 1, 0), Err(Error::LambdaIndex { r: 0, k: 0 }));
    }
}
