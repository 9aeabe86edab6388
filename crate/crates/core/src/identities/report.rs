use std::fmt;

use num_rational::BigRational;

use super::IdentityId;
use crate::polynomials::Polynomial;

/// One side of a compared identity.
#[derive(Debug, Clone)]
pub enum Value {
    Scalar(BigRational),
    Poly(Polynomial),
    Sequence(Vec<BigRational>),
}

/// Polynomials compare by value, whatever their bases.
impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Poly(a), Value::Poly(b)) => a.value_eq(b),
            (Value::Sequence(a), Value::Sequence(b)) => a == b,
            _ => false,
        }
    }
}

impl From<BigRational> for Value {
    fn from(v: BigRational) -> Self {
        Value::Scalar(v)
    }
}

impl From<Polynomial> for Value {
    fn from(p: Polynomial) -> Self {
        Value::Poly(p)
    }
}

impl From<Vec<BigRational>> for Value {
    fn from(v: Vec<BigRational>) -> Self {
        Value::Sequence(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Sequence(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, usize)>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    /// Human-readable description of the swept parameters.
    pub range: String,
    pub status: Status,
    /// Present exactly when `status` is `Fail`.
    pub counterexample: Option<Counterexample>,
    /// Number of parameter tuples evaluated.
    pub checks_performed: u64,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Evaluates `eval` on every tuple until the first mismatching pair.
///
/// `eval` may return several `(lhs, rhs)` pairs per tuple (for example one per
/// independent route); the tuple counts once.
pub(crate) fn sweep<const N: usize, I, F>(
    id: IdentityId,
    range: String,
    names: [&'static str; N],
    tuples: I,
    mut eval: F,
) -> IdentityReport
where
    I: IntoIterator<Item = [usize; N]>,
    F: FnMut([usize; N]) -> Vec<(Value, Value)>,
{
    let mut checks = 0;
    let mut counterexample = None;
    'tuples: for tuple in tuples {
        checks += 1;
        for (lhs, rhs) in eval(tuple) {
            if lhs != rhs {
                counterexample = Some(Counterexample {
                    params: names.iter().copied().zip(tuple).collect(),
                    lhs,
                    rhs,
                });
                break 'tuples;
            }
        }
    }
    IdentityReport {
        id,
        range,
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        counterexample,
        checks_performed: checks,
        notes: Vec::new(),
    }
}
