//! Memoized Stirling triangles built row by row from their recurrences.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// `s(n, k)`, the coefficients of the falling factorial in powers of `X`.
    FirstSigned,
    /// `|s(n, k)|`, the coefficients of the rising factorial in powers of `X`.
    FirstUnsigned,
    /// `S(n, k)`, the coefficients of `X^n` in falling factorials.
    Second,
}

/// An append-only triangular table `rows[n][k]`, `0 <= k <= n`.
///
/// Reads take a shared lock; growth takes the write lock and only appends
/// rows, so a prefix once observed never changes.
#[derive(Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

static FIRST_SIGNED: StirlingTriangle = StirlingTriangle::new(StirlingKind::FirstSigned);
static FIRST_UNSIGNED: StirlingTriangle = StirlingTriangle::new(StirlingKind::FirstUnsigned);
static SECOND: StirlingTriangle = StirlingTriangle::new(StirlingKind::Second);

/// The process-wide shared triangle of the given kind.
pub fn triangle(kind: StirlingKind) -> &'static StirlingTriangle {
    match kind {
        StirlingKind::FirstSigned => &FIRST_SIGNED,
        StirlingKind::FirstUnsigned => &FIRST_UNSIGNED,
        StirlingKind::Second => &SECOND,
    }
}

/// Signed Stirling number of the first kind `s(n, k)`; zero when `k > n`.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    FIRST_SIGNED.get(n, k)
}

/// Unsigned Stirling number of the first kind `|s(n, k)|`; zero when `k > n`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    FIRST_UNSIGNED.get(n, k)
}

/// Stirling number of the second kind `S(n, k)`; zero when `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    SECOND.get(n, k)
}

impl StirlingTriangle {
    pub const fn new(kind: StirlingKind) -> Self {
        Self {
            kind,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.with_rows(n, |rows| rows[n][k].clone())
    }

    pub fn row(&self, n: usize) -> Vec<BigInt> {
        self.with_rows(n, |rows| rows[n].clone())
    }

    /// Runs `f` on rows `0..=max_n` without copying them.
    pub fn with_rows<R>(&self, max_n: usize, f: impl FnOnce(&[Vec<BigInt>]) -> R) -> R {
        {
            let rows = self.rows.read().expect("stirling cache poisoned");
            if rows.len() > max_n {
                return f(&rows[..=max_n]);
            }
        }
        self.extend_to(max_n);
        let rows = self.rows.read().expect("stirling cache poisoned");
        f(&rows[..=max_n])
    }

    fn extend_to(&self, max_n: usize) {
        let mut rows = self.rows.write().expect("stirling cache poisoned");
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= max_n {
            let n = rows.len();
            let next = next_row(self.kind, n, &rows[n - 1]);
            rows.push(next);
        }
    }
}

fn next_row(kind: StirlingKind, n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    let zero = BigInt::zero();
    let at = |k: usize| prev.get(k).unwrap_or(&zero);
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::zero());
    for k in 1..=n {
        let diag = at(k - 1);
        let same = at(k);
        let entry = match kind {
            StirlingKind::FirstSigned => diag - same * (n - 1),
            StirlingKind::FirstUnsigned => diag + same * (n - 1),
            StirlingKind::Second => diag + same * k,
        };
        row.push(entry);
    }
    debug_assert!(kind != StirlingKind::FirstUnsigned || row.iter().all(|v| !v.is_negative()));
    row
}
