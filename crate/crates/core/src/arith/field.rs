use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::ArithError;

/// An exact field. Elements are immutable values with structural equality,
/// so `==` is the mathematical equality every certificate check relies on.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + FromStr<Err = ArithError>
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    /// Zero for ℚ and ℚ(i), `p` for 𝔽_p.
    fn characteristic() -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self / rhs`, `None` when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// Integer power; negative exponents go through the inverse.
    fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            sq = sq.clone() * sq;
            e >>= 1;
        }
        Some(acc)
    }
}
