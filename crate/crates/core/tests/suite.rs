use bernstir::identities::{self, check};
use bernstir::{
    bernoulli_first, bernoulli_second, rat, run_all, Basis, IdentityId, Polynomial, PowerSeries,
    Status, SuiteConfig,
};
use proptest::prelude::*;

#[test]
fn default_config_matches_documented_bounds() {
    let cfg = SuiteConfig::default();
    assert_eq!((cfg.max_n, cfg.max_r, cfg.trials, cfg.seed), (40, 5, 100, 0));
}

#[test]
fn every_id_has_a_checker_with_work_to_do() {
    let cfg = SuiteConfig { max_n: 3, max_r: 2, trials: 2, seed: 1 };
    for &id in IdentityId::ALL {
        let report = check(id, &cfg).unwrap();
        assert_eq!(report.id, id);
        assert_eq!(report.status, Status::Pass, "{id}");
        assert!(report.checks_performed > 0, "{id}");
        assert!(!report.range.is_empty());
    }
}

#[test]
fn concurrent_suites_agree() {
    let cfg = SuiteConfig { max_n: 12, max_r: 4, trials: 10, seed: 9 };
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| run_all(&cfg).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in &reports[1..] {
        assert_eq!(r, &reports[0]);
    }
    assert!(reports[0].iter().all(|r| r.passed()));
}

#[test]
fn seeds_change_only_the_random_trials() {
    let a = SuiteConfig { max_n: 6, max_r: 2, trials: 4, seed: 1 };
    let b = SuiteConfig { seed: 2, ..a };
    let ra = run_all(&a).unwrap();
    let rb = run_all(&b).unwrap();
    for (x, y) in ra.iter().zip(&rb) {
        if x.id == IdentityId::L1Inversion {
            assert_ne!(x.range, y.range);
        } else {
            assert_eq!(x, y);
        }
    }
}

#[test]
fn documented_sweep_sizes() {
    // (n, k) pairs with 1 <= k <= n <= 40
    for r in [
        identities::check_c2(40),
        identities::check_c4(40),
        identities::check_t4(40),
        identities::check_c5(40),
    ] {
        assert!(r.passed(), "{:?}", r.counterexample);
        assert_eq!(r.checks_performed, 820);
    }
    let t6 = identities::check_t6(5, 30);
    assert!(t6.passed());
    assert_eq!(t6.checks_performed, 5 * 31);
    let l1 = identities::check_l1_inversion(100, 20, 0);
    assert!(l1.passed());
    assert_eq!(l1.checks_performed, 100);
}

#[test]
fn gregory_series_matches_second_kind_numbers() {
    let log_over_t = PowerSeries::log1p(26).shift_down().unwrap();
    let q = PowerSeries::one(25).div(&log_over_t).unwrap();
    let mut fact = rat(1, 1);
    for n in 0..25 {
        if n > 0 {
            fact *= rat(n as i64, 1);
        }
        assert_eq!(q.coeff(n) * &fact, bernoulli_second(n));
    }
}

#[test]
fn bernoulli_polynomials_in_the_falling_basis() {
    // B_n(X) - B_n has no constant falling-factorial coefficient
    for n in 1..20 {
        let f = bernoulli_first(n);
        let p = bernstir::bernoulli_polynomial(n).to_falling();
        assert_eq!(p.coeff(0), f);
        assert_eq!(p.basis(), Basis::FallingFactorial);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn inversion_round_trip(v in prop::collection::vec((-1000i64..=1000, 1i64..=1000), 1..25)) {
        let v: Vec<_> = v.into_iter().map(|(p, q)| rat(p, q)).collect();
        let u = identities::stirling1_transform(&v);
        prop_assert_eq!(identities::stirling2_transform(&u), v.clone());
        let w = identities::stirling2_transform(&v);
        prop_assert_eq!(identities::stirling1_transform(&w), v);
    }

    #[test]
    fn antidifference_sums_consecutive_values(c in prop::collection::vec(-20i64..20, 1..10), m in 1usize..12) {
        // q(m) - q(0) = p(0) + ... + p(m-1)
        let p = Polynomial::from_ints(Basis::Monomial, &c);
        let q = p.delta_inv();
        let total: num_rational::BigRational = (0..m).map(|x| p.eval(&rat(x as i64, 1))).sum();
        prop_assert_eq!(q.eval(&rat(m as i64, 1)), total);
    }
}
