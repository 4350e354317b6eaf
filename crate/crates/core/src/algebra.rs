//! Free graded-commutative algebras over `F_p`, `p` odd, presented by a
//! finite list of generators that is complete up to a promised degree.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::prime::OddPrime;
use crate::series::{PowerSeries, SeriesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator {label}: degree {degree} has the wrong parity for a {kind} generator")]
    Parity { label: String, degree: u64, kind: Kind },
    #[error("generator {label}: degree must be positive")]
    ZeroDegree { label: String },
    #[error("duplicate generator label {0}")]
    DuplicateLabel(String),
    #[error("no generator labelled {0}")]
    UnknownLabel(String),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(OddPrime, OddPrime),
    #[error("requested degree {requested} exceeds the completeness promise {promised}")]
    BeyondTruncation { requested: usize, promised: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which formula family a generator comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    #[serde(rename = "ABAR")]
    Abar,
    #[serde(rename = "BBAR")]
    Bbar,
    #[serde(rename = "X_BG")]
    XBg,
    #[serde(rename = "X_G")]
    XG,
}

impl Family {
    /// Degree formula in terms of the sphere parameter `n`, the prime `p`
    /// and the index pair `(k, j)`.
    pub fn formula(self) -> &'static str {
        match self {
            Family::A => "2(n p^k - 1) p^j - 1",
            Family::B => "2(n p^k - 1) p^j - 2",
            Family::C => "2 n p^k - 2",
            Family::Abar => "2(p - 1) p^k - 1",
            Family::Bbar => "2(p - 1) p^k - 2",
            Family::XBg => "2 n_i",
            Family::XG => "2 n_i - 1",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::Abar => "ABAR",
            Family::Bbar => "BBAR",
            Family::XBg => "X_BG",
            Family::XG => "X_G",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Odd degree, squares to zero.
    Exterior,
    /// Even degree, free polynomial.
    Polynomial,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Exterior => "exterior",
            Kind::Polynomial => "polynomial",
        })
    }
}

/// One algebra generator.
///
/// `n` is the parameter the family formula is evaluated at: the sphere index
/// `n` of `S^{2n+1}` for families A, B and C, the type entry `n_i` for the
/// `X_*` families, and `0` for the barred families, which depend on `p` only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    label: String,
    family: Family,
    n: u64,
    indices: (u32, u32),
    degree: u64,
    kind: Kind,
}

impl Generator {
    pub fn new(
        label: impl Into<String>,
        family: Family,
        n: u64,
        indices: (u32, u32),
        degree: u64,
        kind: Kind,
    ) -> Result<Self, AlgebraError> {
        let label = label.into();
        if degree == 0 {
            return Err(AlgebraError::ZeroDegree { label });
        }
        let odd = degree % 2 == 1;
        if odd != (kind == Kind::Exterior) {
            return Err(AlgebraError::Parity { label, degree, kind });
        }
        Ok(Generator {
            label,
            family,
            n,
            indices,
            degree,
            kind,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn indices(&self) -> (u32, u32) {
        self.indices
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn relabelled(&self, label: String) -> Self {
        Generator {
            label,
            ..self.clone()
        }
    }
}

/// A free graded-commutative algebra over `F_p`, given by generators.
///
/// `trunc` is a promise: every generator of degree `<= trunc` is in the list.
/// Generators are kept sorted by `(degree, label)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraPresentation {
    tag: String,
    prime: OddPrime,
    trunc: usize,
    generators: Vec<Generator>,
}

impl AlgebraPresentation {
    pub fn new(
        tag: impl Into<String>,
        prime: OddPrime,
        trunc: usize,
        mut generators: Vec<Generator>,
    ) -> Result<Self, AlgebraError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.label.as_str()) {
                return Err(AlgebraError::DuplicateLabel(g.label.clone()));
            }
        }
        sort_generators(&mut generators);
        Ok(AlgebraPresentation {
            tag: tag.into(),
            prime,
            trunc,
            generators,
        })
    }

    /// The algebra `F_p` concentrated in degree zero.
    pub fn empty(tag: impl Into<String>, prime: OddPrime, trunc: usize) -> Self {
        AlgebraPresentation {
            tag: tag.into(),
            prime,
            trunc,
            generators: Vec::new(),
        }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn prime(&self) -> OddPrime {
        self.prime
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.label == label)
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// Poincaré series up to degree `n`.
    pub fn poincare(&self, n: usize) -> Result<PowerSeries, AlgebraError> {
        self.check_degree(n)?;
        let mut s = PowerSeries::one(n);
        for g in &self.generators {
            match g.kind {
                Kind::Exterior => s.mul_exterior_in_place(g.degree)?,
                Kind::Polynomial => s.mul_geometric_in_place(g.degree)?,
            }
        }
        Ok(s)
    }

    /// Tensor product. Labels of `other` that collide with labels already
    /// present get a `#2`, `#3`, ... suffix.
    pub fn tensor(&self, other: &AlgebraPresentation) -> Result<Self, AlgebraError> {
        if self.prime != other.prime {
            return Err(AlgebraError::PrimeMismatch(self.prime, other.prime));
        }
        let mut taken: HashSet<String> = self.generators.iter().map(|g| g.label.clone()).collect();
        let mut generators = self.generators.clone();
        for g in &other.generators {
            let mut label = g.label.clone();
            let mut copy = 2;
            while taken.contains(&label) {
                label = format!("{}#{copy}", g.label);
                copy += 1;
            }
            taken.insert(label.clone());
            generators.push(g.relabelled(label));
        }
        sort_generators(&mut generators);
        let tag = match (self.generators.is_empty(), other.generators.is_empty()) {
            (_, true) => self.tag.clone(),
            (true, false) => other.tag.clone(),
            _ => format!("{} (x) {}", self.tag, other.tag),
        };
        Ok(AlgebraPresentation {
            tag,
            prime: self.prime,
            trunc: self.trunc.min(other.trunc),
            generators,
        })
    }

    /// Quotient by the ideal generated by one generator. For a free algebra
    /// this is deletion of that generator.
    pub fn drop_generator(&self, label: &str) -> Result<Self, AlgebraError> {
        let pos = self
            .generators
            .iter()
            .position(|g| g.label == label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_owned()))?;
        let mut out = self.clone();
        out.generators.remove(pos);
        Ok(out)
    }

    /// `(degree, dimension)` rows for degrees `0..=n`.
    pub fn dims_table(&self, n: usize) -> Result<Vec<(usize, BigUint)>, AlgebraError> {
        Ok(self.poincare(n)?.coeffs().iter().cloned().enumerate().collect())
    }

    /// Counts monomials of total degree `d` by explicit recursion over the
    /// exponent vectors. Shares nothing with [`Self::poincare`]; it exists
    /// to audit it.
    pub fn monomial_count_oracle(&self, d: usize) -> Result<BigUint, AlgebraError> {
        self.check_degree(d)?;
        let mut gens: Vec<(u64, Kind)> = self.generators.iter().map(|g| (g.degree, g.kind)).collect();
        gens.sort_unstable();
        Ok(count_monomials(&gens, d as u64))
    }

    fn check_degree(&self, n: usize) -> Result<(), AlgebraError> {
        if n > self.trunc {
            return Err(AlgebraError::BeyondTruncation {
                requested: n,
                promised: self.trunc,
            });
        }
        Ok(())
    }
}

fn sort_generators(gens: &mut [Generator]) {
    gens.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
}

/// `gens` must be sorted by ascending degree.
fn count_monomials(gens: &[(u64, Kind)], remaining: u64) -> BigUint {
    if remaining == 0 {
        return BigUint::one();
    }
    let Some((&(deg, kind), rest)) = gens.split_first() else {
        return BigUint::zero();
    };
    if deg > remaining {
        return BigUint::zero();
    }
    let max_exp = match kind {
        Kind::Exterior => 1,
        Kind::Polynomial => remaining / deg,
    };
    let mut total = BigUint::zero();
    for e in 0..=max_exp {
        total += count_monomials(rest, remaining - e * deg);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p5() -> OddPrime {
        OddPrime::new(5).unwrap()
    }

    fn ext(label: &str, d: u64) -> Generator {
        Generator::new(label, Family::XG, 0, (0, 0), d, Kind::Exterior).unwrap()
    }

    fn poly(label: &str, d: u64) -> Generator {
        Generator::new(label, Family::XBg, 0, (0, 0), d, Kind::Polynomial).unwrap()
    }

    fn x3y4(trunc: usize) -> AlgebraPresentation {
        AlgebraPresentation::new("x3 y4", p5(), trunc, vec![poly("y4", 4), ext("x3", 3)]).unwrap()
    }

    fn dims(s: &PowerSeries) -> Vec<u64> {
        s.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn generator_parity() {
        assert!(matches!(
            Generator::new("x", Family::XG, 0, (0, 0), 4, Kind::Exterior),
            Err(AlgebraError::Parity { .. })
        ));
        assert!(matches!(
            Generator::new("y", Family::XBg, 0, (0, 0), 3, Kind::Polynomial),
            Err(AlgebraError::Parity { .. })
        ));
        assert!(matches!(
            Generator::new("z", Family::XBg, 0, (0, 0), 0, Kind::Polynomial),
            Err(AlgebraError::ZeroDegree { .. })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = AlgebraPresentation::new("dup", p5(), 10, vec![ext("x", 3), ext("x", 5)]);
        assert_eq!(r, Err(AlgebraError::DuplicateLabel("x".into())));
    }

    #[test]
    fn poincare_examples() {
        let e = AlgebraPresentation::empty("point", p5(), 4);
        assert_eq!(dims(&e.poincare(4).unwrap()), [1, 0, 0, 0, 0]);
        assert_eq!(dims(&x3y4(8).poincare(8).unwrap()), [1, 0, 0, 1, 1, 0, 0, 1, 1]);
        let bs3 = AlgebraPresentation::new("BS3", p5(), 12, vec![poly("y4", 4)]).unwrap();
        assert_eq!(
            dims(&bs3.poincare(12).unwrap()),
            [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
        );
        assert_eq!(
            x3y4(8).poincare(9),
            Err(AlgebraError::BeyondTruncation { requested: 9, promised: 8 })
        );
    }

    #[test]
    fn generators_sorted() {
        let p = x3y4(8);
        let labels: Vec<_> = p.generators().iter().map(Generator::label).collect();
        assert_eq!(labels, ["x3", "y4"]);
    }

    #[test]
    fn tensor_examples() {
        let x = AlgebraPresentation::new("X", p5(), 8, vec![ext("x3", 3)]).unwrap();
        let y = AlgebraPresentation::new("Y", p5(), 10, vec![poly("y4", 4)]).unwrap();
        let t = x.tensor(&y).unwrap();
        assert_eq!(t.generators(), x3y4(8).generators());
        assert_eq!(t.trunc(), 8);

        let unit = x.tensor(&AlgebraPresentation::empty("pt", p5(), 20)).unwrap();
        assert_eq!(unit.generators(), x.generators());
        assert_eq!(unit.trunc(), 8);

        let p7 = AlgebraPresentation::empty("pt", OddPrime::new(7).unwrap(), 8);
        assert!(matches!(x.tensor(&p7), Err(AlgebraError::PrimeMismatch(..))));
    }

    #[test]
    fn tensor_relabels_collisions() {
        let x = AlgebraPresentation::new("X", p5(), 8, vec![ext("x3", 3)]).unwrap();
        let xx = x.tensor(&x).unwrap().tensor(&x).unwrap();
        let labels: Vec<_> = xx.generators().iter().map(Generator::label).collect();
        assert_eq!(labels, ["x3", "x3#2", "x3#3"]);
        assert_eq!(dims(&xx.poincare(8).unwrap()), [1, 0, 0, 3, 0, 0, 3, 0, 0]);
    }

    #[test]
    fn drop_examples() {
        let d = x3y4(8).drop_generator("x3").unwrap();
        assert_eq!(d.generators().len(), 1);
        assert_eq!(dims(&d.poincare(8).unwrap()), [1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let e = AlgebraPresentation::empty("pt", p5(), 4);
        assert_eq!(e.drop_generator("x3"), Err(AlgebraError::UnknownLabel("x3".into())));
    }

    #[test]
    fn oracle_examples() {
        let e = AlgebraPresentation::empty("pt", p5(), 4);
        assert_eq!(e.monomial_count_oracle(0).unwrap(), BigUint::one());
        assert_eq!(x3y4(8).monomial_count_oracle(7).unwrap(), BigUint::one());
        assert_eq!(x3y4(8).monomial_count_oracle(6).unwrap(), BigUint::zero());
        assert!(x3y4(8).monomial_count_oracle(9).is_err());
    }

    #[test]
    fn dims_table_examples() {
        let e = AlgebraPresentation::empty("pt", p5(), 2);
        let t: Vec<(usize, u64)> = e
            .dims_table(2)
            .unwrap()
            .into_iter()
            .map(|(d, c)| (d, u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(t, [(0, 1), (1, 0), (2, 0)]);
        let y = AlgebraPresentation::new("Y", p5(), 8, vec![poly("y4", 4)]).unwrap();
        let t: Vec<u64> = y
            .dims_table(8)
            .unwrap()
            .into_iter()
            .map(|(_, c)| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(t, [1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    fn random_presentation(prefix: &'static str) -> impl Strategy<Value = AlgebraPresentation> {
        prop::collection::vec((1u64..30, any::<bool>()), 0..6).prop_map(move |spec| {
            let gens = spec
                .into_iter()
                .enumerate()
                .map(|(i, (d, exterior))| {
                    let label = format!("{prefix}{i}");
                    if exterior {
                        ext(&label, 2 * d - 1)
                    } else {
                        poly(&label, 2 * d)
                    }
                })
                .collect();
            AlgebraPresentation::new(prefix, p5(), 60, gens).unwrap()
        })
    }

    proptest! {
        #[test]
        fn tensor_is_series_homomorphism(a in random_presentation("a"), b in random_presentation("b")) {
            let t = a.tensor(&b).unwrap();
            prop_assert_eq!(
                t.poincare(60).unwrap(),
                a.poincare(60).unwrap().mul(&b.poincare(60).unwrap()).unwrap()
            );
        }

        #[test]
        fn oracle_matches_poincare(a in random_presentation("a")) {
            let s = a.poincare(60).unwrap();
            for (d, row) in a.dims_table(60).unwrap() {
                prop_assert_eq!(&row, s.coefficient(d).unwrap());
                prop_assert_eq!(a.monomial_count_oracle(d).unwrap(), row);
            }
        }

        #[test]
        fn drop_then_retensor_restores(a in random_presentation("a"), d in 1u64..30, exterior in any::<bool>()) {
            let g = if exterior { ext("extra", 2 * d - 1) } else { poly("extra", 2 * d) };
            let single = AlgebraPresentation::new("g", p5(), 60, vec![g.clone()]).unwrap();
            let with = a.tensor(&single).unwrap();
            let dropped = with.drop_generator("extra").unwrap();
            prop_assert_eq!(dropped.generators(), a.generators());
            let factor = if exterior {
                PowerSeries::exterior_factor(g.degree(), 60).unwrap()
            } else {
                PowerSeries::geometric_factor(g.degree(), 60).unwrap()
            };
            prop_assert_eq!(
                dropped.poincare(60).unwrap().mul(&factor).unwrap(),
                with.poincare(60).unwrap()
            );
        }
    }
}
