//! Overflow-checked 128-bit integer arithmetic for the closed-form counts.
//!
//! The formulas subtract large, nearly equal terms, so every intermediate
//! value must be exact. [`Exact`] carries an `i128` and poisons itself on the
//! first overflow; the poison is surfaced as [`Error::Overflow`] when the
//! value is finally read.

use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Count type used for every exported global quantity.
pub type Count = i128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exact(Option<i128>);

impl Exact {
    pub const ZERO: Exact = Exact(Some(0));

    pub fn new(v: i128) -> Self {
        Exact(Some(v))
    }

    pub fn is_overflowed(&self) -> bool {
        self.0.is_none()
    }

    pub fn value(self, what: &'static str) -> Result<i128> {
        self.0.ok_or(Error::Overflow(what))
    }

    /// Exact division; a non-zero remainder is an invariant violation.
    pub fn div_exact(self, d: i128, what: &'static str) -> Result<Exact> {
        let v = self.value(what)?;
        if v % d != 0 {
            return Err(Error::Invariant(format!(
                "{what}: {v} is not divisible by {d}"
            )));
        }
        Ok(Exact::new(v / d))
    }
}

impl Default for Exact {
    fn default() -> Self {
        Exact::ZERO
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Exact {
            fn from(v: $t) -> Self {
                Exact(i128::try_from(v).ok())
            }
        }
    )*};
}
from_int!(u32, u64, usize, i32, i64, i128);

/// Shorthand for lifting a primitive integer into [`Exact`].
pub fn x<T: Into<Exact>>(v: T) -> Exact {
    v.into()
}

impl<T: Into<Exact>> Add<T> for Exact {
    type Output = Exact;
    fn add(self, rhs: T) -> Exact {
        let rhs = rhs.into();
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl<T: Into<Exact>> Sub<T> for Exact {
    type Output = Exact;
    fn sub(self, rhs: T) -> Exact {
        let rhs = rhs.into();
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl<T: Into<Exact>> Mul<T> for Exact {
    type Output = Exact;
    fn mul(self, rhs: T) -> Exact {
        let rhs = rhs.into();
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(self.0.and_then(i128::checked_neg))
    }
}

impl<T: Into<Exact>> AddAssign<T> for Exact {
    fn add_assign(&mut self, rhs: T) {
        *self = *self + rhs;
    }
}

impl<T: Into<Exact>> SubAssign<T> for Exact {
    fn sub_assign(&mut self, rhs: T) {
        *self = *self - rhs;
    }
}

impl Sum for Exact {
    fn sum<I: Iterator<Item = Exact>>(iter: I) -> Exact {
        iter.fold(Exact::ZERO, |a, b| a + b)
    }
}

/// Binomial coefficient C(a, b) with C(a, b) = 0 whenever a < b (including
/// negative `a`).
pub fn binom<T: Into<Exact>>(a: T, b: u32) -> Exact {
    let a = a.into();
    let Some(a) = a.0 else { return a };
    let b = i128::from(b);
    if a < b {
        return Exact::ZERO;
    }
    let mut r: Option<i128> = Some(1);
    for k in 0..b {
        // r * (a - k) is divisible by k + 1 at every step.
        r = r.and_then(|r| r.checked_mul(a - k)).map(|r| r / (k + 1));
    }
    Exact(r)
}

/// Checked accumulation into a `u64` table entry.
#[inline]
pub(crate) fn bump(slot: &mut u64, by: u64, what: &'static str) -> Result<()> {
    *slot = slot.checked_add(by).ok_or(Error::Overflow(what))?;
    Ok(())
}
