use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{ArithError, Field};

/// Trial-division primality test. Moduli are tiny, so this is plenty.
pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue modulo the prime `P`, stored in `[0, P)`.
///
/// A non-prime modulus fails to compile the first time an element is
/// constructed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// 𝔽₂
pub type F2 = Fp<2>;
/// 𝔽₃
pub type F3 = Fp<3>;

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub const fn modulus() -> u64 {
        P
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Every element of the field, in increasing residue order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(|v| Fp::new(v as i64))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }

    fn one() -> Self {
        Fp::new(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1.
        let mut base = self.0 as u128;
        let mut e = P - 2;
        let mut acc: u128 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u128;
            }
            base = base * base % P as u128;
            e >>= 1;
        }
        Some(Fp(acc as u64))
    }

    fn from_i64(value: i64) -> Self {
        Fp::new(value)
    }

    fn characteristic() -> u64 {
        P
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}mod{}", self.0, P)
    }
}

/// Any integer, reduced modulo `P`.
impl<const P: u64> FromStr for Fp<P> {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| ArithError::Parse(format!("not an integer residue: {s:?}")))?;
        Ok(Fp::new(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn arithmetic_mod_seven() {
        type F7 = Fp<7>;
        assert_eq!(F7::new(-1), F7::new(6));
        assert_eq!(F7::new(3) * F7::new(5), F7::new(1));
        assert_eq!(F7::new(3).inv().unwrap(), F7::new(5));
        assert_eq!(-F7::new(0), F7::new(0));
        assert_eq!(F7::new(2) - F7::new(5), F7::new(4));
        for a in F7::elements().filter(|a| !a.is_zero()) {
            assert!((a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!("-1".parse::<F3>().unwrap(), F3::new(2));
        assert!("x".parse::<F3>().is_err());
    }
}
