use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimeError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("p = 2 is outside the odd-prime setting")]
    Two,
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut q = 3u64;
    while q.saturating_mul(q) <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An odd prime. Every graded algebra in this crate lives over `F_p` with `p`
/// of this type, which keeps the exterior/polynomial split by parity valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if !is_prime(p) {
            return Err(PrimeError::NotPrime(p));
        }
        if p == 2 {
            return Err(PrimeError::Two);
        }
        Ok(OddPrime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for OddPrime {
    type Error = PrimeError;

    fn try_from(p: u64) -> Result<Self, Self::Error> {
        OddPrime::new(p)
    }
}

impl From<OddPrime> for u64 {
    fn from(p: OddPrime) -> u64 {
        p.0
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
