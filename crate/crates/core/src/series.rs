//! Truncated formal power series in one variable with arbitrary-precision
//! nonnegative coefficients.
//!
//! Every value carries its inclusive truncation degree `N`; the coefficient
//! vector always has length `N + 1`. Arithmetic between series with different
//! truncations is refused rather than silently shortened.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("generator degree must be at least 1, got {0}")]
    NonPositiveDegree(u64),
    #[error("degree {degree} is outside 0..={trunc}")]
    DegreeOutOfRange { degree: usize, trunc: usize },
}

/// A power series `sum c_d t^d` known exactly for `0 <= d <= trunc`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigUint>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigUint::zero(); trunc + 1],
        }
    }

    /// The multiplicative identity `1`.
    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigUint::one();
        s
    }

    /// Builds a series from explicit coefficients; the truncation is `len - 1`.
    ///
    /// Panics on an empty vector, since a series always knows its constant term.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let coeffs: Vec<BigUint> = coeffs.into_iter().map(Into::into).collect();
        assert!(!coeffs.is_empty(), "a power series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    /// `1 + t^d`, the series of an exterior algebra on one generator of degree `d`.
    pub fn exterior_factor(d: u64, trunc: usize) -> Result<Self, SeriesError> {
        let mut s = Self::one(trunc);
        s.mul_exterior_in_place(d)?;
        Ok(s)
    }

    /// `1 + t^d + t^{2d} + ...`, the series of a polynomial algebra on one
    /// generator of degree `d`.
    pub fn geometric_factor(d: u64, trunc: usize) -> Result<Self, SeriesError> {
        let mut s = Self::one(trunc);
        s.mul_geometric_in_place(d)?;
        Ok(s)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigUint, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::DegreeOutOfRange {
            degree: n,
            trunc: self.trunc(),
        })
    }

    /// Mutable access for audit fault injection and similar low-level uses.
    pub fn coefficient_mut(&mut self, n: usize) -> Result<&mut BigUint, SeriesError> {
        let trunc = self.trunc();
        self.coeffs
            .get_mut(n)
            .ok_or(SeriesError::DegreeOutOfRange { degree: n, trunc })
    }

    /// Cauchy product truncated at the common truncation degree.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_trunc(other)?;
        let n = self.trunc();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_trunc(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Multiplies in place by `1 + t^d`.
    pub fn mul_exterior_in_place(&mut self, d: u64) -> Result<(), SeriesError> {
        let d = Self::check_degree(d)?;
        // descending, so each source coefficient is read before it is updated
        for i in (d..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - d];
        }
        Ok(())
    }

    /// Multiplies in place by `1 / (1 - t^d)`.
    pub fn mul_geometric_in_place(&mut self, d: u64) -> Result<(), SeriesError> {
        let d = Self::check_degree(d)?;
        // ascending, so updated coefficients feed the higher ones
        for i in d..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - d];
        }
        Ok(())
    }

    /// Degrees beyond the truncation are fine: the factor is then just `1`.
    fn check_degree(d: u64) -> Result<usize, SeriesError> {
        if d == 0 {
            return Err(SeriesError::NonPositiveDegree(d));
        }
        Ok(usize::try_from(d).unwrap_or(usize::MAX))
    }

    fn check_trunc(&self, other: &PowerSeries) -> Result<(), SeriesError> {
        if self.trunc() != other.trunc() {
            return Err(SeriesError::TruncationMismatch {
                left: self.trunc(),
                right: other.trunc(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries{:?}", self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "t^{d}")?,
                _ => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.trunc() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[u32]) -> PowerSeries {
        PowerSeries::from_coeffs(v.iter().copied())
    }

    /// Direct convolution on plain integers, independent of the engine.
    fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len();
        (0..n)
            .map(|d| (0..=d).map(|i| a[i] * b[d - i]).sum())
            .collect()
    }

    #[test]
    fn one_is_unit() {
        assert_eq!(PowerSeries::one(3), s(&[1, 0, 0, 0]));
        assert_eq!(PowerSeries::one(0), s(&[1]));
        let x = s(&[3, 1, 4, 1, 5, 9]);
        assert_eq!(PowerSeries::one(5).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&PowerSeries::one(5)).unwrap(), x);
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 0, 0, 1]).mul(&s(&[1, 0, 0, 1])).unwrap(), s(&[1, 0, 0, 2]));
        assert_eq!(convolve(&[1, 0, 0, 1], &[1, 0, 0, 1]), vec![1, 0, 0, 2]);

        let e = PowerSeries::exterior_factor(3, 8).unwrap();
        let g = PowerSeries::geometric_factor(4, 8).unwrap();
        let expected: [u32; 9] = [1, 0, 0, 1, 1, 0, 0, 1, 1];
        assert_eq!(e.mul(&g).unwrap(), s(&expected));
        assert_eq!(
            convolve(&[1, 0, 0, 1, 0, 0, 0, 0, 0], &[1, 0, 0, 0, 1, 0, 0, 0, 1]),
            expected.map(u64::from)
        );
    }

    #[test]
    fn factors() {
        assert_eq!(PowerSeries::exterior_factor(3, 5).unwrap(), s(&[1, 0, 0, 1, 0, 0]));
        assert_eq!(PowerSeries::exterior_factor(9, 5).unwrap(), s(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(PowerSeries::exterior_factor(1, 2).unwrap(), s(&[1, 1, 0]));
        assert_eq!(PowerSeries::geometric_factor(2, 7).unwrap(), s(&[1, 0, 1, 0, 1, 0, 1, 0]));
        assert_eq!(PowerSeries::geometric_factor(10, 7).unwrap(), s(&[1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(
            PowerSeries::exterior_factor(0, 4),
            Err(SeriesError::NonPositiveDegree(0))
        );
        assert_eq!(
            PowerSeries::geometric_factor(0, 4),
            Err(SeriesError::NonPositiveDegree(0))
        );
    }

    #[test]
    fn coefficients() {
        let g = PowerSeries::geometric_factor(2, 7).unwrap();
        assert_eq!(*g.coefficient(4).unwrap(), BigUint::from(1u32));
        assert_eq!(*PowerSeries::one(7).coefficient(0).unwrap(), BigUint::from(1u32));
        let g8 = PowerSeries::geometric_factor(2, 8).unwrap();
        // pairs (i, j) with i + j = 4
        assert_eq!(*g8.mul(&g8).unwrap().coefficient(8).unwrap(), BigUint::from(5u32));
        assert_eq!(
            g.coefficient(8),
            Err(SeriesError::DegreeOutOfRange { degree: 8, trunc: 7 })
        );
    }

    #[test]
    fn mismatched_truncation_is_an_error() {
        assert_eq!(
            PowerSeries::one(3).mul(&PowerSeries::one(4)),
            Err(SeriesError::TruncationMismatch { left: 3, right: 4 })
        );
        assert!(PowerSeries::one(3).add(&PowerSeries::one(2)).is_err());
    }

    #[test]
    fn exterior_square_is_not_reduced() {
        let e = PowerSeries::exterior_factor(5, 12).unwrap();
        let sq = e.mul(&e).unwrap();
        assert_eq!(*sq.coefficient(5).unwrap(), BigUint::from(2u32));
        assert_eq!(*sq.coefficient(10).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn large_coefficients_do_not_overflow() {
        let mut x = PowerSeries::one(400);
        for _ in 0..12 {
            x.mul_geometric_in_place(1).unwrap();
        }
        // C(400 + 11, 11)
        let expected: BigUint = (1..=11u64).fold(BigUint::one(), |acc, i| acc * (400 + i) / i);
        assert_eq!(*x.coefficient(400).unwrap(), expected);
        assert!(expected > BigUint::from(u32::MAX));
    }

    #[test]
    fn display() {
        let e = PowerSeries::exterior_factor(3, 8).unwrap();
        let g = PowerSeries::geometric_factor(4, 8).unwrap();
        assert_eq!(e.mul(&g).unwrap().to_string(), "1 + t^3 + t^4 + t^7 + t^8 + O(t^9)");
    }

    fn series(n: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec(0u32..1000, n + 1).prop_map(PowerSeries::from_coeffs)
    }

    fn triple() -> impl Strategy<Value = (PowerSeries, PowerSeries, PowerSeries)> {
        (0usize..=64).prop_flat_map(|n| (series(n), series(n), series(n)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in triple()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn geometric_support(d in 1u64..40, n in 0usize..120) {
            let g = PowerSeries::geometric_factor(d, n).unwrap();
            for (i, c) in g.coeffs().iter().enumerate() {
                let expected = u32::from((i as u64).is_multiple_of(d));
                prop_assert_eq!(c, &BigUint::from(expected));
            }
        }

        #[test]
        fn in_place_factors_match_mul(a in series(40), d in 1u64..50) {
            let mut e = a.clone();
            e.mul_exterior_in_place(d).unwrap();
            prop_assert_eq!(e, a.mul(&PowerSeries::exterior_factor(d, 40).unwrap()).unwrap());
            let mut g = a.clone();
            g.mul_geometric_in_place(d).unwrap();
            prop_assert_eq!(g, a.mul(&PowerSeries::geometric_factor(d, 40).unwrap()).unwrap());
        }
    }
}
