//! Exact checkers for the identities relating Stirling and Bernoulli numbers.
//!
//! Each [`IdentityId`] has one checker. A checker sweeps a finite parameter
//! range, evaluates both sides exactly, and stops at the first
//! counterexample. Wherever a quantity has a production route in
//! [`crate::sequences`], the checker compares it against a different route,
//! so no formula is used to validate itself.

mod checks;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::{Error, Result};

pub use checks::*;
pub use report::{Counterexample, IdentityReport, Status, Value};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $formula:literal;)*) => {
        /// Identifier of one checked identity.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            /// Every identity, in report order.
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// The identity in plain text, `<n>` denoting a falling factorial.
            pub fn formula(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $formula,)*
                }
            }
        }
    };
}

identity_ids! {
    Eq5Ortho => "EQ5_ORTHO", "sum_i s(n,i) S(i,m) = delta(n,m)";
    Eq6Ortho => "EQ6_ORTHO", "sum_i S(n,i) s(i,m) = delta(n,m)";
    Eq9DeltaFalling => "EQ9_DELTA_FALLING", "Delta X<n> = n X<n-1>";
    Eq10DeltaBern => "EQ10_DELTA_BERN", "Delta B_n(X) = n X^(n-1)";
    Eq11DiffBern => "EQ11_DIFF_BERN", "B_n'(X) = n B_(n-1)(X)";
    Eq12IntBern => "EQ12_INT_BERN", "int_0^1 B_n(x) dx = 0";
    Eq13IntFalling => "EQ13_INT_FALLING", "B*_n = int_0^1 x<n> dx";
    Eq14BernExpansion => "EQ14_BERN_EXPANSION", "B_n(X) = sum_k C(n,k) B_(n-k) X^k";
    Eq17Rising => "EQ17_RISING", "X(X+1)...(X+n-1) = sum_k |s(n,k)| X^k";
    Eq18RisingShifted => "EQ18_RISING_SHIFTED", "(X+1)...(X+n-1) = sum_k |s(n,k+1)| X^k";
    Eq19DeltaInvFalling => "EQ19_DELTAINV_FALLING", "Delta^-1 X<n> = X<n+1>/(n+1)";
    Eq20DeltaInvMonomial => "EQ20_DELTAINV_MONOMIAL", "Delta^-1 X^n = B_(n+1)(X)/(n+1)";
    T1 => "T1", "B_n(X) = B_n + sum_k (n/k) S(n-1,k-1) X<k>";
    C1 => "C1", "B_n = -sum_k (n/k) S(n-1,k-1) B*_k";
    L1Inversion => "L1_INVERSION", "u_n = sum_k s(n,k) v_k  <=>  v_n = sum_k S(n,k) u_k";
    T2 => "T2", "B*_n = -sum_k (n/k) s(n-1,k-1) B_k";
    T3 => "T3", "X<n> = B*_n + sum_k (n/k) s(n-1,k-1) B_k(X)";
    C2 => "C2", "sum_i S(n-1,i-1) s(i,k)/i = C(n,k) B_(n-k)/n";
    C3 => "C3", "B_n = sum_i (-1)^i i!/(i+1) S(n,i)";
    C4 => "C4", "sum_i S(n,i) s(i,k)/i = C(n,k) B_(n-k)/n + delta(n-1,k)";
    T4 => "T4", "sum_i s(n-1,i-1) S(i,k)/i = C(n,k) B*_(n-k)/n";
    C5 => "C5", "sum_i s(n,i) S(i,k)/i = (-1)^(n-k) (n-1)!/k! sum_l (-1)^l B*_l/l!";
    C5RemarkSeries => "C5_REMARK_SERIES", "[t^m] t/((1+t)log(1+t)) = (-1)^m sum_l (-1)^l B*_l/l!";
    C6 => "C6", "B*_n = sum_i s(n,i)/(i+1)";
    T5 => "T5", "sum_k (-1)^k k!/(k+r) S(n,k) = sum_k |s(r,k+1)| B_(n+k)/(r-1)!";
    T6 => "T6", "sum_k s(n,k)/(k+r) = sum_k lambda(r,n,k) B*_(n+k)";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive match on the report name, e.g. `eq5_ortho` or `T4`.
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Range bounds shared by the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Upper bound on `n` in every sweep; the series check runs to order `max_n + 1`.
    pub max_n: usize,
    /// Upper bound on `r` for the two `r`-parametrized families.
    pub max_r: usize,
    /// Randomized round trips for the inversion lemma.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_n: 40, max_r: 5, trials: 100, seed: 0 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidBounds(format!("{what} must be at least 1")));
        if self.max_n == 0 {
            return bad("max-n");
        }
        if self.max_r == 0 {
            return bad("max-r");
        }
        if self.trials == 0 {
            return bad("trials");
        }
        Ok(())
    }
}

/// Runs the checker for `id` with the bounds from `config`.
pub fn check(id: IdentityId, config: &SuiteConfig) -> Result<IdentityReport> {
    config.validate()?;
    let n = config.max_n;
    Ok(match id {
        IdentityId::Eq5Ortho => check_eq5(n),
        IdentityId::Eq6Ortho => check_eq6(n),
        IdentityId::Eq9DeltaFalling => check_eq9(n),
        IdentityId::Eq10DeltaBern => check_eq10(n),
        IdentityId::Eq11DiffBern => check_eq11(n),
        IdentityId::Eq12IntBern => check_eq12(n),
        IdentityId::Eq13IntFalling => check_eq13(n),
        IdentityId::Eq14BernExpansion => check_eq14(n),
        IdentityId::Eq17Rising => check_eq17(n),
        IdentityId::Eq18RisingShifted => check_eq18(n),
        IdentityId::Eq19DeltaInvFalling => check_eq19(n),
        IdentityId::Eq20DeltaInvMonomial => check_eq20(n),
        IdentityId::T1 => check_t1(n),
        IdentityId::C1 => check_c1(n),
        IdentityId::L1Inversion => check_l1_inversion(config.trials, n, config.seed),
        IdentityId::T2 => check_t2(n),
        IdentityId::T3 => check_t3(n),
        IdentityId::C2 => check_c2(n),
        IdentityId::C3 => check_c3(n),
        IdentityId::C4 => check_c4(n),
        IdentityId::T4 => check_t4(n),
        IdentityId::C5 => check_c5(n),
        IdentityId::C5RemarkSeries => check_c5_remark(n + 1),
        IdentityId::C6 => check_c6(n),
        IdentityId::T5 => check_t5(config.max_r, n),
        IdentityId::T6 => check_t6(config.max_r, n),
    })
}

/// Runs every checker, in parallel, returning reports in [`IdentityId::ALL`] order.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    IdentityId::ALL.par_iter().map(|&id| check(id, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_parse_back() {
        assert_eq!(IdentityId::ALL.len(), 26);
        for (i, id) in IdentityId::ALL.iter().enumerate() {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), *id);
            assert_eq!(id.as_str().to_lowercase().parse::<IdentityId>().unwrap(), *id);
            assert!(IdentityId::ALL[..i].iter().all(|other| other.as_str() != id.as_str()));
        }
        assert!("T7".parse::<IdentityId>().is_err());
    }

    #[test]
    fn zero_width_ranges_are_rejected() {
        let base = SuiteConfig::default();
        for cfg in [
            SuiteConfig { max_n: 0, ..base },
            SuiteConfig { max_r: 0, ..base },
            SuiteConfig { trials: 0, ..base },
        ] {
            assert!(matches!(run_all(&cfg), Err(Error::InvalidBounds(_))));
            assert!(check(IdentityId::T5, &cfg).is_err());
        }
    }

    #[test]
    fn small_suite_passes_in_order() {
        let cfg = SuiteConfig { max_n: 8, max_r: 3, trials: 5, seed: 3 };
        let reports = run_all(&cfg).unwrap();
        let ids: Vec<_> = reports.iter().map(|r| r.id).collect();
        assert_eq!(ids, IdentityId::ALL);
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.id, r.counterexample);
            assert!(r.checks_performed > 0);
        }
        assert_eq!(run_all(&cfg).unwrap(), reports);
    }
}
