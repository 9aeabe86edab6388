use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{sweep, IdentityReport, Value};
use super::IdentityId;
use crate::arith::{binomial, factorial, int, rat, sign};
use crate::polynomials::{Basis, Polynomial, PowerSeries};
use crate::sequences::{
    bernoulli_first, bernoulli_first_by_recurrence, bernoulli_polynomial, bernoulli_second,
    bernoulli_second_by_series, bernoulli_second_by_stirling_sum, lambda_coeff, stirling1,
    stirling1_unsigned, stirling2,
};

fn q(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn ratio(num: BigInt, den: usize) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

fn pair(lhs: impl Into<Value>, rhs: impl Into<Value>) -> (Value, Value) {
    (lhs.into(), rhs.into())
}

fn ns(lo: usize, hi: usize) -> impl Iterator<Item = [usize; 1]> {
    (lo..=hi).map(|n| [n])
}

/// `(n, k)` with `1 <= k <= n <= max_n`.
fn nk(max_n: usize) -> impl Iterator<Item = [usize; 2]> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |k| [n, k]))
}

/// `(r, n)` with `1 <= r <= max_r` and `0 <= n <= max_n`.
fn rn(max_r: usize, max_n: usize) -> impl Iterator<Item = [usize; 2]> {
    (1..=max_r).flat_map(move |r| (0..=max_n).map(move |n| [r, n]))
}

fn kronecker(a: usize, b: usize) -> BigRational {
    int((a == b) as i64)
}

// ---------------------------------------------------------------------------
// Orthogonality and operator formulas

pub fn check_eq5(max_n: usize) -> IdentityReport {
    let tuples = (0..=max_n).flat_map(|n| (0..=n).map(move |m| [n, m]));
    sweep(IdentityId::Eq5Ortho, format!("0 <= m <= n <= {max_n}"), ["n", "m"], tuples, |[n, m]| {
        let lhs: BigInt = (m..=n).map(|i| stirling1(n, i) * stirling2(i, m)).sum();
        vec![pair(q(lhs), kronecker(n, m))]
    })
}

pub fn check_eq6(max_n: usize) -> IdentityReport {
    let tuples = (0..=max_n).flat_map(|n| (0..=n).map(move |m| [n, m]));
    sweep(IdentityId::Eq6Ortho, format!("0 <= m <= n <= {max_n}"), ["n", "m"], tuples, |[n, m]| {
        let lhs: BigInt = (m..=n).map(|i| stirling2(n, i) * stirling1(i, m)).sum();
        vec![pair(q(lhs), kronecker(n, m))]
    })
}

pub fn check_eq9(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq9DeltaFalling, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let rhs = Polynomial::falling(n - 1).scale(&int(n as i64));
        // translation route on the expanded product, then the native route
        let expanded = Polynomial::falling_product(0, n).delta();
        let native = Polynomial::falling(n).delta();
        vec![pair(expanded, rhs.clone()), pair(native, rhs)]
    })
}

pub fn check_eq10(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq10DeltaBern, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let lhs = bernoulli_polynomial(n).delta();
        let rhs = Polynomial::monomial(n - 1).scale(&int(n as i64));
        vec![pair(lhs, rhs)]
    })
}

pub fn check_eq11(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq11DiffBern, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let lhs = bernoulli_polynomial(n).diff();
        let rhs = bernoulli_polynomial(n - 1).scale(&int(n as i64));
        vec![pair(lhs, rhs)]
    })
}

pub fn check_eq12(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq12IntBern, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        vec![pair(bernoulli_polynomial(n).integrate_01(), BigRational::zero())]
    })
}

/// Integrates `X<n>` after converting it through the Stirling triangle and
/// compares with `n! [t^n] t/log(1+t)` and with the cached value, which is
/// produced by integrating an independently multiplied-out product.
pub fn check_eq13(max_n: usize) -> IdentityReport {
    let series = bernoulli_second_by_series(max_n);
    sweep(IdentityId::Eq13IntFalling, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        let lhs = Polynomial::falling(n).integrate_01();
        vec![pair(lhs.clone(), series[n].clone()), pair(lhs, bernoulli_second(n))]
    })
}

/// Compares `B_n(X)` with the exponential generating function
/// `t e^{xt} / (e^t - 1)` at `max_n + 3` distinct rational points, enough to
/// pin down a polynomial of degree `n <= max_n`.
pub fn check_eq14(max_n: usize) -> IdentityReport {
    let order = max_n + 1;
    // (e^t - 1)/t = sum t^k/(k+1)!
    let denom = PowerSeries::new(
        (0..order).map(|k| ratio(BigInt::one(), 1) / q(factorial(k as u64 + 1))).collect(),
    );
    let kernel = PowerSeries::one(order).div(&denom).expect("unit constant term");
    let points: Vec<BigRational> = (0..=max_n as i64)
        .map(int)
        .chain([rat(-1, 2), rat(1, 3)])
        .collect();
    let egf: Vec<PowerSeries> = points
        .iter()
        .map(|x| kernel.mul(&PowerSeries::exp_scaled(x, order)))
        .collect();
    let report = sweep(
        IdentityId::Eq14BernExpansion,
        format!("0 <= n <= {max_n}, {} points", points.len()),
        ["n"],
        ns(0, max_n),
        |[n]| {
            let p = bernoulli_polynomial(n);
            let lhs: Vec<_> = points.iter().map(|x| p.eval(x)).collect();
            let scale = q(factorial(n as u64));
            let rhs: Vec<_> = egf.iter().map(|s| s.coeff(n) * &scale).collect();
            vec![pair(lhs, rhs)]
        },
    );
    report.with_note("both sides evaluated at x = 0..=max_n, -1/2, 1/3")
}

pub fn check_eq17(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq17Rising, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        let lhs = Polynomial::rising_product(0, n);
        let rhs = Polynomial::new(Basis::Monomial, (0..=n).map(|k| q(stirling1_unsigned(n, k))).collect());
        vec![pair(lhs, rhs)]
    })
}

pub fn check_eq18(max_n: usize) -> IdentityReport {
    sweep(IdentityId::Eq18RisingShifted, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let lhs = Polynomial::rising_product(1, n - 1);
        let rhs = Polynomial::new(
            Basis::Monomial,
            (0..n).map(|k| q(stirling1_unsigned(n, k + 1))).collect(),
        );
        vec![pair(lhs, rhs)]
    })
}

pub fn check_eq19(max_n: usize) -> IdentityReport {
    let report = sweep(
        IdentityId::Eq19DeltaInvFalling,
        format!("0 <= n <= {max_n}"),
        ["n"],
        ns(0, max_n),
        |[n]| {
            let rhs = Polynomial::falling(n + 1).scale(&ratio(BigInt::one(), n + 1));
            let native = Polynomial::falling(n).delta_inv();
            let monomial = Polynomial::falling_product(0, n).delta_inv();
            vec![pair(native, rhs.clone()), pair(monomial, rhs)]
        },
    );
    report.with_note("antidifference constant fixed by vanishing at 0")
}

pub fn check_eq20(max_n: usize) -> IdentityReport {
    let report = sweep(
        IdentityId::Eq20DeltaInvMonomial,
        format!("0 <= n <= {max_n}"),
        ["n"],
        ns(0, max_n),
        |[n]| {
            let b = bernoulli_polynomial(n + 1);
            let pinned = &b - &Polynomial::constant(Basis::Monomial, bernoulli_first(n + 1));
            let rhs = pinned.scale(&ratio(BigInt::one(), n + 1));
            let native = Polynomial::monomial(n).delta_inv();
            let falling = Polynomial::monomial(n).to_falling().delta_inv();
            vec![pair(native, rhs.clone()), pair(falling, rhs)]
        },
    );
    report.with_note("antidifference constant fixed by vanishing at 0; right side shifted by -B_(n+1)")
}

/// The eight operator formulas as separate reports.
pub fn check_operator_formulas(max_n: usize) -> Vec<IdentityReport> {
    vec![
        check_eq9(max_n),
        check_eq10(max_n),
        check_eq11(max_n),
        check_eq12(max_n),
        check_eq17(max_n),
        check_eq18(max_n),
        check_eq19(max_n),
        check_eq20(max_n),
    ]
}

// ---------------------------------------------------------------------------
// Bernoulli polynomials in the falling-factorial basis and the two-kind
// conversion formulas

pub fn check_t1(max_n: usize) -> IdentityReport {
    sweep(IdentityId::T1, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        let mut coeffs = vec![bernoulli_first(n)];
        for k in 1..=n {
            coeffs.push(ratio(stirling2(n - 1, k - 1) * n, k));
        }
        let rhs = Polynomial::new(Basis::FallingFactorial, coeffs).to_monomial();
        vec![pair(bernoulli_polynomial(n), rhs)]
    })
}

pub fn check_c1(max_n: usize) -> IdentityReport {
    sweep(IdentityId::C1, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let sum: BigRational = (1..=n)
            .map(|k| ratio(stirling2(n - 1, k - 1) * n, k) * bernoulli_second(k))
            .sum();
        vec![pair(bernoulli_first(n), -sum)]
    })
}

pub fn check_t2(max_n: usize) -> IdentityReport {
    sweep(IdentityId::T2, format!("1 <= n <= {max_n}"), ["n"], ns(1, max_n), |[n]| {
        let sum: BigRational = (1..=n)
            .map(|k| ratio(stirling1(n - 1, k - 1) * n, k) * bernoulli_first(k))
            .sum();
        vec![pair(bernoulli_second(n), -sum)]
    })
}

pub fn check_t3(max_n: usize) -> IdentityReport {
    sweep(IdentityId::T3, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        let mut rhs = Polynomial::constant(Basis::Monomial, bernoulli_second(n));
        for k in 1..=n {
            let c = ratio(stirling1(n - 1, k - 1) * n, k);
            rhs = &rhs + &bernoulli_polynomial(k).scale(&c);
        }
        vec![pair(Polynomial::falling_product(0, n), rhs)]
    })
}

/// Applies a Stirling triangle to `v` over a common denominator, so the inner
/// sums run on integers.
fn stirling_transform(v: &[BigRational], entry: fn(usize, usize) -> BigInt) -> Vec<BigRational> {
    let denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
    (0..v.len())
        .map(|n| {
            let num: BigInt = (0..=n).map(|k| entry(n, k) * &scaled[k]).sum();
            BigRational::new(num, denom.clone())
        })
        .collect()
}

/// `u_n = sum_k s(n, k) v_k`.
pub fn stirling1_transform(v: &[BigRational]) -> Vec<BigRational> {
    stirling_transform(v, stirling1)
}

/// `v_n = sum_k S(n, k) u_k`.
pub fn stirling2_transform(u: &[BigRational]) -> Vec<BigRational> {
    stirling_transform(u, stirling2)
}

/// Random round trips through the two Stirling transforms, in both orders.
///
/// Entries are `p/q` with `|p| <= 1000` and `1 <= q <= 1000`, drawn from a
/// ChaCha stream seeded with `seed`.
pub fn check_l1_inversion(trials: usize, max_n: usize, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |len: usize| -> Vec<BigRational> {
        (0..len)
            .map(|_| rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000)))
            .collect()
    };
    let samples: Vec<(Vec<BigRational>, Vec<BigRational>)> =
        (0..trials).map(|_| (draw(max_n + 1), draw(max_n + 1))).collect();
    let report = sweep(
        IdentityId::L1Inversion,
        format!("{trials} trials, 0 <= n <= {max_n}, seed {seed}"),
        ["trial"],
        (0..trials).map(|t| [t]),
        |[t]| {
            let (v, u) = &samples[t];
            let forward = stirling2_transform(&stirling1_transform(v));
            let backward = stirling1_transform(&stirling2_transform(u));
            vec![pair(forward, v.clone()), pair(backward, u.clone())]
        },
    );
    report.with_note("each trial checks (I) then (II) and (II) then (I)")
}

// ---------------------------------------------------------------------------
// Mixed Stirling sums

fn c2_sum(n: usize, k: usize, lo: usize) -> BigRational {
    (lo..=n)
        .map(|i| ratio(stirling2(n - 1, i - 1) * stirling1(i, k), i))
        .sum()
}

fn c4_sum(n: usize, k: usize, lo: usize) -> BigRational {
    (lo..=n).map(|i| ratio(stirling2(n, i) * stirling1(i, k), i)).sum()
}

fn t4_sum(n: usize, k: usize, lo: usize) -> BigRational {
    (lo..=n)
        .map(|i| ratio(stirling1(n - 1, i - 1) * stirling2(i, k), i))
        .sum()
}

fn c5_sum(n: usize, k: usize, lo: usize) -> BigRational {
    (lo..=n).map(|i| ratio(stirling1(n, i) * stirling2(i, k), i)).sum()
}

const WIDENED: &str = "also checked with the index range widened to 1 <= i <= n";

pub fn check_c2(max_n: usize) -> IdentityReport {
    sweep(IdentityId::C2, format!("1 <= k <= n <= {max_n}"), ["n", "k"], nk(max_n), |[n, k]| {
        let rhs = ratio(binomial(n as u64, k as u64), n) * bernoulli_first(n - k);
        vec![pair(c2_sum(n, k, k), rhs.clone()), pair(c2_sum(n, k, 1), rhs)]
    })
    .with_note(WIDENED)
}

pub fn check_c4(max_n: usize) -> IdentityReport {
    sweep(IdentityId::C4, format!("1 <= k <= n <= {max_n}"), ["n", "k"], nk(max_n), |[n, k]| {
        let rhs = ratio(binomial(n as u64, k as u64), n) * bernoulli_first(n - k) + kronecker(n - 1, k);
        vec![pair(c4_sum(n, k, k), rhs.clone()), pair(c4_sum(n, k, 1), rhs)]
    })
    .with_note(WIDENED)
}

/// Compares only the `X<k>`, `k >= 1`, coefficients, as the two
/// antiderivatives involved agree only up to a constant.
pub fn check_t4(max_n: usize) -> IdentityReport {
    sweep(IdentityId::T4, format!("1 <= k <= n <= {max_n}"), ["n", "k"], nk(max_n), |[n, k]| {
        let rhs = ratio(binomial(n as u64, k as u64), n) * bernoulli_second(n - k);
        vec![pair(t4_sum(n, k, k), rhs.clone()), pair(t4_sum(n, k, 1), rhs)]
    })
    .with_note(WIDENED)
}

/// `sum_{l=0}^{m} (-1)^l B*_l / l!`.
pub fn gregory_partial_sum(m: usize) -> BigRational {
    (0..=m)
        .map(|l| bernoulli_second(l) * int(sign(l)) / q(factorial(l as u64)))
        .sum()
}

pub fn check_c5(max_n: usize) -> IdentityReport {
    sweep(IdentityId::C5, format!("1 <= k <= n <= {max_n}"), ["n", "k"], nk(max_n), |[n, k]| {
        let prefactor = q(factorial(n as u64 - 1) * sign(n - k)) / q(factorial(k as u64));
        let rhs = prefactor * gregory_partial_sum(n - k);
        vec![pair(c5_sum(n, k, k), rhs.clone()), pair(c5_sum(n, k, 1), rhs)]
    })
    .with_note(WIDENED)
}

/// The first `order` coefficients of `t / ((1 + t) log(1 + t))`.
pub fn c5_kernel_series(order: usize) -> PowerSeries {
    let log_over_t = PowerSeries::log1p(order + 1).shift_down().expect("zero constant term");
    PowerSeries::geom(order).div(&log_over_t).expect("unit constant term")
}

pub fn check_c5_remark(order: usize) -> IdentityReport {
    let direct = c5_kernel_series(order);
    let log_over_t = PowerSeries::log1p(order + 1).shift_down().expect("zero constant term");
    let via_product = PowerSeries::one(order)
        .div(&log_over_t)
        .expect("unit constant term")
        .mul(&PowerSeries::geom(order));
    sweep(
        IdentityId::C5RemarkSeries,
        format!("0 <= m < {order}"),
        ["m"],
        (0..order).map(|m| [m]),
        |[m]| {
            let rhs = gregory_partial_sum(m) * int(sign(m));
            vec![pair(direct.coeff(m).clone(), rhs.clone()), pair(via_product.coeff(m).clone(), rhs)]
        },
    )
}

// ---------------------------------------------------------------------------
// Closed forms for B_n and B*_n and their r-generalizations

/// `sum_{k=0}^{n} (-1)^k k!/(k+r) S(n, k)`; at `r = 1` this is the Stirling
/// route to `B_n`.
pub fn alternating_stirling2_sum(r: usize, n: usize) -> BigRational {
    (0..=n)
        .map(|k| ratio(factorial(k as u64) * stirling2(n, k) * sign(k), k + r))
        .sum()
}

/// The weights `|s(r, k+1)| / (r-1)!`, `k = 0..r`, multiplying `B_{n+k}`.
pub fn bernoulli_shift_weights(r: usize) -> Vec<BigRational> {
    assert!(r >= 1, "r must be positive");
    let denom = q(factorial(r as u64 - 1));
    (0..r).map(|k| q(stirling1_unsigned(r, k + 1)) / &denom).collect()
}

/// `sum_{k=0}^{n} s(n, k) / (k + r)`.
pub fn stirling1_reciprocal_sum(r: usize, n: usize) -> BigRational {
    (0..=n).map(|k| ratio(stirling1(n, k), k + r)).sum()
}

/// Compares the Stirling-sum route to `B_n` with the binomial recurrence.
pub fn check_c3(max_n: usize) -> IdentityReport {
    let recurrence = bernoulli_first_by_recurrence(max_n);
    sweep(IdentityId::C3, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        vec![pair(alternating_stirling2_sum(1, n), recurrence[n].clone())]
    })
}

/// Compares the Stirling-sum route to `B*_n` with the integral and series routes.
pub fn check_c6(max_n: usize) -> IdentityReport {
    let series = bernoulli_second_by_series(max_n);
    sweep(IdentityId::C6, format!("0 <= n <= {max_n}"), ["n"], ns(0, max_n), |[n]| {
        let lhs = bernoulli_second_by_stirling_sum(n);
        vec![pair(lhs.clone(), bernoulli_second(n)), pair(lhs, series[n].clone())]
    })
}

pub fn check_t5(max_r: usize, max_n: usize) -> IdentityReport {
    let report = sweep(
        IdentityId::T5,
        format!("1 <= r <= {max_r}, 0 <= n <= {max_n}"),
        ["r", "n"],
        rn(max_r, max_n),
        |[r, n]| {
            let rhs: BigRational = bernoulli_shift_weights(r)
                .iter()
                .enumerate()
                .map(|(k, w)| w * bernoulli_first(n + k))
                .sum();
            vec![pair(alternating_stirling2_sum(r, n), rhs)]
        },
    );
    report.with_note("the r = 2 case keeps the S(n,k) factor in the summand")
}

pub fn check_t6(max_r: usize, max_n: usize) -> IdentityReport {
    sweep(
        IdentityId::T6,
        format!("1 <= r <= {max_r}, 0 <= n <= {max_n}"),
        ["r", "n"],
        rn(max_r, max_n),
        |[r, n]| {
            let lhs = stirling1_reciprocal_sum(r, n);
            let rhs: BigRational = (0..r)
                .map(|k| lambda_coeff(r, n, k).expect("k < r") * bernoulli_second(n + k))
                .sum();
            let integrand = Polynomial::falling_product(0, n).mul(&Polynomial::monomial(r - 1));
            vec![pair(lhs.clone(), rhs), pair(integrand.integrate_01(), lhs)]
        },
    )
    .with_note("also checks sum_k s(n,k)/(k+r) = int_0^1 x<n> x^(r-1) dx")
}
