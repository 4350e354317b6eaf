//! Generator presentations of the mod-p homology of the spaces in the
//! evaluation fibration `Omega^3 G<3> -> BG_k -> BG`, and the regime logic
//! deciding which structure result applies to a given `(G, p, k)`.
//!
//! All loop-space presentations are vector-space level: the generators are
//! primitive in the Hopf algebras involved, but no coproduct or Steenrod
//! action is modelled.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraPresentation, Family, Generator, Kind};
use crate::groups::GroupType;
use crate::prime::{gcd, is_prime, OddPrime, PrimeError};

/// Label of the bottom class of `Omega^3 S^3<3>`.
pub const ANICK_BOTTOM_LABEL: &str = "abar[k=0]";

/// Order of the connecting map `S^3 -> Omega^3 S^3<3>` for `G = SU(2)`.
pub const SU2_BOUNDARY_ORDER: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("Omega^3 S^(2n+1) needs n >= 2, got n = {0}")]
    SphereTooSmall(u64),
    #[error("G is not {p}-regular: n_l = {max_entry} > p = {p}")]
    NotPRegular { max_entry: u64, p: u64 },
    #[error("the smallest type entry must be 2, got {0}")]
    BottomEntry(u64),
    #[error("type entry n_{index} = {entry} gives Omega^3 S^{sphere}, which needs n_i >= 3")]
    SmallSphereFactor { index: usize, entry: u64, sphere: u64 },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `2(n p^k - 1) p^j - 1`.
pub fn a_degree(n: u64, p: u64, k: u32, j: u32) -> Option<u64> {
    sphere_core(n, p, k, j)?.checked_sub(1)
}

/// `2(n p^k - 1) p^j - 2`.
pub fn b_degree(n: u64, p: u64, k: u32, j: u32) -> Option<u64> {
    sphere_core(n, p, k, j)?.checked_sub(2)
}

/// `2 n p^k - 2`.
pub fn c_degree(n: u64, p: u64, k: u32) -> Option<u64> {
    2u64.checked_mul(n)?.checked_mul(p.checked_pow(k)?)?.checked_sub(2)
}

/// `2(p - 1) p^k - 1`.
pub fn abar_degree(p: u64, k: u32) -> Option<u64> {
    2u64.checked_mul(p - 1)?.checked_mul(p.checked_pow(k)?)?.checked_sub(1)
}

/// `2(p - 1) p^k - 2`.
pub fn bbar_degree(p: u64, k: u32) -> Option<u64> {
    2u64.checked_mul(p - 1)?.checked_mul(p.checked_pow(k)?)?.checked_sub(2)
}

/// `2 (n p^k - 1) p^j`
fn sphere_core(n: u64, p: u64, k: u32, j: u32) -> Option<u64> {
    let inner = n.checked_mul(p.checked_pow(k)?)?.checked_sub(1)?;
    2u64.checked_mul(inner)?.checked_mul(p.checked_pow(j)?)
}

fn within(degree: Option<u64>, trunc: usize) -> Option<u64> {
    degree.filter(|&d| d <= trunc as u64)
}

/// Presentation of `H_*(Omega^3 S^{2n+1}; F_p)`:
/// exterior `a` in degrees `2(n p^k - 1) p^j - 1` (`k >= 1, j >= 0`),
/// polynomial `b` in degrees `2(n p^k - 1) p^j - 2` (`k >= 1, j >= 1`) and
/// polynomial `c` in degrees `2 n p^k - 2` (`k >= 0`).
pub fn loops3_sphere(n: u64, p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    if n < 2 {
        return Err(CatalogError::SphereTooSmall(n));
    }
    let pv = p.get();
    let mut gens = Vec::new();
    for k in 1.. {
        if within(a_degree(n, pv, k, 0), trunc).is_none() {
            break;
        }
        for j in 0.. {
            let Some(d) = within(a_degree(n, pv, k, j), trunc) else { break };
            gens.push(Generator::new(
                format!("a[n={n},k={k},j={j}]"),
                Family::A,
                n,
                (k, j),
                d,
                Kind::Exterior,
            )?);
        }
        for j in 1.. {
            let Some(d) = within(b_degree(n, pv, k, j), trunc) else { break };
            gens.push(Generator::new(
                format!("b[n={n},k={k},j={j}]"),
                Family::B,
                n,
                (k, j),
                d,
                Kind::Polynomial,
            )?);
        }
    }
    for k in 0.. {
        let Some(d) = within(c_degree(n, pv, k), trunc) else { break };
        gens.push(Generator::new(
            format!("c[n={n},k={k}]"),
            Family::C,
            n,
            (k, 0),
            d,
            Kind::Polynomial,
        )?);
    }
    Ok(AlgebraPresentation::new(
        format!("H_*(Omega^3 S^{})", 2 * n + 1),
        p,
        trunc,
        gens,
    )?)
}

/// Presentation of `H_*(Omega^2 S^{2p-1}; F_p)`: exterior `abar` in degrees
/// `2(p-1) p^k - 1` (`k >= 0`) and polynomial `bbar` in degrees
/// `2(p-1) p^k - 2` (`k >= 1`).
pub fn loops2_sphere_2pminus1(p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    let pv = p.get();
    let mut gens = Vec::new();
    for k in 0.. {
        let Some(d) = within(abar_degree(pv, k), trunc) else { break };
        gens.push(Generator::new(format!("abar[k={k}]"), Family::Abar, 0, (k, 0), d, Kind::Exterior)?);
    }
    for k in 1.. {
        let Some(d) = within(bbar_degree(pv, k), trunc) else { break };
        gens.push(Generator::new(format!("bbar[k={k}]"), Family::Bbar, 0, (k, 0), d, Kind::Polynomial)?);
    }
    Ok(AlgebraPresentation::new(
        format!("H_*(Omega^2 S^{})", 2 * pv - 1),
        p,
        trunc,
        gens,
    )?)
}

/// `H_*(Omega^3 S^3<3>) = H_*(Omega^2 S^{2p-1}) (x) H_*(Omega^3 S^{2p+1})`,
/// the double loops on the Anick space `T^{2p+1}(p)`.
pub fn anick_t(p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    let out = loops2_sphere_2pminus1(p, trunc)?.tensor(&loops3_sphere(p.get(), p, trunc)?)?;
    Ok(out.with_tag("H_*(Omega^3 S^3<3>)"))
}

fn require_p_regular(t: &GroupType, p: u64) -> Result<(), CatalogError> {
    if t.max_entry() > p {
        return Err(CatalogError::NotPRegular {
            max_entry: t.max_entry(),
            p,
        });
    }
    Ok(())
}

/// `H_*(Omega^3 G<3>)` for `p`-regular `G`, from the splitting
/// `Omega^3 G<3> = Omega^3 S^3<3> x prod_{i >= 2} Omega^3 S^{2 n_i - 1}`.
pub fn loops3_g3(t: &GroupType, p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    require_p_regular(t, p.get())?;
    let entries = t.entries();
    if entries[0] != 2 {
        return Err(CatalogError::BottomEntry(entries[0]));
    }
    let mut out = anick_t(p, trunc)?;
    for (i, &entry) in entries.iter().enumerate().skip(1) {
        // S^{2 n_i - 1} = S^{2(n_i - 1) + 1}
        if entry < 3 {
            return Err(CatalogError::SmallSphereFactor {
                index: i + 1,
                entry,
                sphere: 2 * entry - 1,
            });
        }
        out = out.tensor(&loops3_sphere(entry - 1, p, trunc)?)?;
    }
    Ok(out.with_tag("H_*(Omega^3 G<3>)"))
}

/// `H_*(BG)` for `p`-regular `G`: polynomial on classes of degree `2 n_i`.
pub fn classifying_space_bg(t: &GroupType, p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    type_generators(t, p, trunc, Family::XBg, "H_*(BG)")
}

/// `H_*(G)` for `p`-regular `G`: exterior on classes of degree `2 n_i - 1`.
pub fn group_g(t: &GroupType, p: OddPrime, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    type_generators(t, p, trunc, Family::XG, "H_*(G)")
}

fn type_generators(
    t: &GroupType,
    p: OddPrime,
    trunc: usize,
    family: Family,
    tag: &str,
) -> Result<AlgebraPresentation, CatalogError> {
    require_p_regular(t, p.get())?;
    let mut gens = Vec::new();
    for (i, &n) in t.entries().iter().enumerate() {
        let (prefix, degree, kind) = match family {
            Family::XBg => ("xbg", 2 * n, Kind::Polynomial),
            _ => ("xg", 2 * n - 1, Kind::Exterior),
        };
        if degree <= trunc as u64 {
            let i = i as u32 + 1;
            gens.push(Generator::new(format!("{prefix}[i={i},n={n}]"), family, n, (i, 0), degree, kind)?);
        }
    }
    Ok(AlgebraPresentation::new(tag, p, trunc, gens)?)
}

/// `H_*(BG_k) = H_*(Omega^3 G<3>) (x) H_*(BG)` as vector spaces, valid when
/// `n_l < p - 1` and `(p, k) = 1`. The answer does not depend on `k`.
pub fn bgk_homology(t: &GroupType, p: OddPrime, k: i64, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    let pv = p.get();
    if t.max_entry() + 1 >= pv {
        return Err(CatalogError::Hypothesis(format!(
            "condition n_l < p-1 fails ({} is not < {})",
            t.max_entry(),
            pv - 1
        )));
    }
    if gcd(pv, k.unsigned_abs()) != 1 {
        return Err(CatalogError::Hypothesis(format!("(p,k)=1 fails (p={pv}, k={k})")));
    }
    let out = loops3_g3(t, p, trunc)?.tensor(&classifying_space_bg(t, p, trunc)?)?;
    Ok(out.with_tag("H_*(BG_k)"))
}

/// `H_*(BG_k; F_3)` for `G = SU(2)` and `(3, k) = 1`: the quotient of
/// `H_*(Omega^3 S^3<3>)` by the ideal generated by its degree-3 class.
pub fn su2_mod3_bgk(k: i64, trunc: usize) -> Result<AlgebraPresentation, CatalogError> {
    if k.unsigned_abs().is_multiple_of(3) {
        return Err(CatalogError::Hypothesis(format!("(3,k)=1 fails (k={k})")));
    }
    let p3 = OddPrime::new(3)?;
    let out = anick_t(p3, trunc)?.drop_generator(ANICK_BOTTOM_LABEL)?;
    Ok(out.with_tag("H_*(BG_k)"))
}

/// Degrees of the odd part of `M H_*(Omega^3 G<3>)`: `2p - 3` from the
/// `Omega^3 S^3<3>` factor, then `2(n_i - 1)p - 3` for each `i >= 2`, the
/// degree of `a[n=n_i - 1, k=1, j=0]` in the factor `Omega^3 S^{2 n_i - 1}`.
pub fn mh_odd(t: &GroupType, p: OddPrime) -> Result<Vec<u64>, CatalogError> {
    let pv = p.get();
    check_mh_input(t, pv)?;
    let mut out = vec![2 * pv - 3];
    out.extend(t.entries()[1..].iter().map(|&n| 2 * (n - 1) * pv - 3));
    Ok(out)
}

/// The same list with the subscripts `2 n_i p - 3` taken literally. These
/// are not generator degrees of the sphere factors; reported for comparison.
pub fn mh_odd_literal_subscripts(t: &GroupType, p: OddPrime) -> Result<Vec<u64>, CatalogError> {
    let pv = p.get();
    check_mh_input(t, pv)?;
    let mut out = vec![2 * pv - 3];
    out.extend(t.entries()[1..].iter().map(|&n| 2 * n * pv - 3));
    Ok(out)
}

fn check_mh_input(t: &GroupType, p: u64) -> Result<(), CatalogError> {
    require_p_regular(t, p)?;
    if t.entries()[0] != 2 {
        return Err(CatalogError::BottomEntry(t.entries()[0]));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    FullTheorem,
    SU2Mod3,
    PRegularOnly,
    NotPRegular,
    PDividesK,
    PrimeTwoOutOfScope,
}

impl Regime {
    /// Whether a homology computation is available in this regime.
    pub fn is_computable(self) -> bool {
        matches!(self, Regime::FullTheorem | Regime::SU2Mod3)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which result covers `(G, p, k)`, with the facts behind the decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub regime: Regime,
    /// `n_l <= p`
    pub p_regular: bool,
    /// `n_l < p - 1`
    pub theorem_condition: bool,
    /// `(p, k) = 1`
    pub coprime: bool,
    /// `partial_1: G -> Omega^3 G<3>` is null homotopic.
    pub boundary_null: bool,
    /// `G_1 = G x Omega^3 G<3>`.
    pub gauge_splits: bool,
    /// `BG_k = BG_1` after localizing at `p`.
    pub bgk_equiv_bg1: bool,
    pub su2_boundary_order: Option<u32>,
    pub notes: String,
}

impl Verdict {
    /// For regimes without a computation, the hypothesis that fails.
    pub fn failed_hypothesis(&self) -> Option<String> {
        match self.regime {
            Regime::FullTheorem | Regime::SU2Mod3 => None,
            _ => Some(self.notes.clone()),
        }
    }
}

/// Decides the regime. `p` must be prime; `k` may be any integer.
///
/// Precedence: `PrimeTwoOutOfScope > SU2Mod3 > PDividesK > FullTheorem >
/// PRegularOnly > NotPRegular`.
pub fn verdict(t: &GroupType, p: u64, k: i64) -> Result<Verdict, CatalogError> {
    if !is_prime(p) {
        return Err(PrimeError::NotPrime(p).into());
    }
    let n_l = t.max_entry();
    let p_regular = n_l <= p;
    let theorem_condition = n_l + 1 < p;
    let coprime = gcd(p, k.unsigned_abs()) == 1;
    let is_su2 = t.entries() == [2];
    let boundary_null = theorem_condition;

    let (regime, notes) = if p == 2 {
        (Regime::PrimeTwoOutOfScope, "p = 2 is outside the odd-prime setting".to_owned())
    } else if is_su2 && p == 3 && coprime {
        (
            Regime::SU2Mod3,
            "G = SU(2), p = 3, (3,k)=1: H_*(BG_k) = H_*(Omega^3 S^3<3>)/(x_3)".to_owned(),
        )
    } else if !coprime {
        (Regime::PDividesK, format!("({p},k)=1 fails: {p} divides k = {k}"))
    } else if theorem_condition {
        (
            Regime::FullTheorem,
            format!("n_l = {n_l} < p-1 = {} and (p,k)=1: H_*(BG_k) = H_*(Omega^3 G<3>) (x) H_*(BG)", p - 1),
        )
    } else if p_regular {
        (
            Regime::PRegularOnly,
            format!("condition n_l < p-1 fails ({n_l} is not < {}); G is {p}-regular only", p - 1),
        )
    } else {
        (Regime::NotPRegular, format!("G is not {p}-regular: n_l = {n_l} > p = {p}"))
    };

    Ok(Verdict {
        regime,
        p_regular,
        theorem_condition,
        coprime,
        boundary_null,
        gauge_splits: boundary_null,
        bgk_equiv_bg1: p >= 3 && coprime,
        su2_boundary_order: is_su2.then_some(SU2_BOUNDARY_ORDER),
        notes,
    })
}
