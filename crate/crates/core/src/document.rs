//! The output document shared by every `bgk` subcommand, and its text, JSON
//! and CSV renderings. Text and CSV are projections of the same document.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, AlgebraPresentation, Family, Kind};
use crate::catalog::Verdict;
use crate::groups::GroupType;
use crate::series::PowerSeries;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const NOTE_C_FAMILY: &str = "c-family degrees are 2 n p^k - 2; the alternative reading 2 n^k - 2 \
    would put a class in degree 0 at k = 0, so the exponent is read as applying to p";

pub const NOTE_MH_INDEX: &str = "MH_odd lists 2(n_i - 1) p - 3 for i >= 2, the degree of the \
    a[n=n_i-1,k=1,j=0] class of Omega^3 S^(2 n_i - 1); the values 2 n_i p - 3 are \
    not generator degrees of that factor";

pub const NOTE_VECTOR_SPACE: &str =
    "dimensions are of F_p-vector spaces; no ring structure is asserted";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub inputs: Inputs,
    pub verdict: Option<Verdict>,
    pub spaces: BTreeMap<String, SpaceRecord>,
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub group: String,
    pub name: Option<String>,
    pub entries: Vec<u64>,
    pub p: u64,
    pub k: Option<i64>,
    pub max_degree: Option<usize>,
}

impl Inputs {
    pub fn new(spec: &str, group: &GroupType, p: u64, k: Option<i64>, max_degree: Option<usize>) -> Self {
        Inputs {
            group: spec.trim().to_owned(),
            name: group.name().map(str::to_owned),
            entries: group.entries().to_vec(),
            p,
            k,
            max_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub label: String,
    pub family: Family,
    pub n: u64,
    pub indices: [u32; 2],
    pub degree: u64,
    pub kind: Kind,
    pub formula: String,
}

/// A dimension table row, serialized as `[degree, "dimension"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow(pub usize, pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AuditStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub degree: usize,
    pub series: String,
    pub oracle: String,
    pub status: AuditStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub description: String,
    pub generators: Vec<GeneratorRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<DimRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<AuditRow>>,
}

impl SpaceRecord {
    /// Generator list and dimension table of `pres` through degree `n`.
    pub fn from_presentation(pres: &AlgebraPresentation, n: usize) -> Result<Self, AlgebraError> {
        let series = pres.poincare(n)?;
        Ok(Self::with_series(pres, &series))
    }

    /// Uses a precomputed series. The audit path relies on this to check
    /// exactly the numbers it reports.
    pub fn with_series(pres: &AlgebraPresentation, series: &PowerSeries) -> Self {
        let n = series.trunc() as u64;
        SpaceRecord {
            description: pres.tag().to_owned(),
            generators: generator_records(pres, n),
            dims: Some(
                series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(d, c)| DimRow(d, c.to_string()))
                    .collect(),
            ),
            degrees: None,
            audit: None,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditRow> {
        self.audit
            .iter()
            .flatten()
            .filter(|r| r.status == AuditStatus::Fail)
    }
}

/// Generators of degree at most `max_degree`, with their formulas.
pub fn generator_records(pres: &AlgebraPresentation, max_degree: u64) -> Vec<GeneratorRecord> {
    pres.generators()
        .iter()
        .filter(|g| g.degree() <= max_degree)
        .map(|g| GeneratorRecord {
            label: g.label().to_owned(),
            family: g.family(),
            n: g.n(),
            indices: [g.indices().0, g.indices().1],
            degree: g.degree(),
            kind: g.kind(),
            formula: g.family().formula().to_owned(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub notes: Vec<String>,
}

impl Default for Meta {
    fn default() -> Self {
        Meta {
            version: VERSION.to_owned(),
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl OutputDocument {
    pub fn render(&self, format: Format, verbose: bool) -> String {
        match format {
            Format::Text => self.to_text(verbose),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// One row per `(space, degree, dimension)`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["space", "degree", "dimension"]).expect("in-memory write");
        for (name, space) in &self.spaces {
            for DimRow(d, dim) in space.dims.iter().flatten() {
                w.write_record([name.as_str(), &d.to_string(), dim]).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let i = &self.inputs;
        let name = i.name.as_deref().unwrap_or("custom");
        let entries: Vec<String> = i.entries.iter().map(ToString::to_string).collect();
        let _ = write!(out, "group {} ({name}), type {{{}}}, p = {}", i.group, entries.join(","), i.p);
        if let Some(k) = i.k {
            let _ = write!(out, ", k = {k}");
        }
        if let Some(n) = i.max_degree {
            let _ = write!(out, ", degrees 0..={n}");
        }
        out.push('\n');

        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "\nregime: {}", v.regime);
            let flags = [
                ("p-regular (n_l <= p)", v.p_regular),
                ("n_l < p-1", v.theorem_condition),
                ("(p,k) = 1", v.coprime),
                ("boundary map null", v.boundary_null),
                ("G_1 = G x Omega^3 G<3>", v.gauge_splits),
                ("BG_k = BG_1 at p", v.bgk_equiv_bg1),
            ];
            for (what, flag) in flags {
                let _ = writeln!(out, "  {what:<24} {}", if flag { "yes" } else { "no" });
            }
            if let Some(order) = v.su2_boundary_order {
                let _ = writeln!(out, "  {:<24} {order}", "order of boundary map");
            }
            let _ = writeln!(out, "  {}", v.notes);
        }

        for (name, space) in &self.spaces {
            let _ = writeln!(out, "\n[{name}] {}", space.description);
            if let Some(degrees) = &space.degrees {
                let list: Vec<String> = degrees.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "  odd degrees: {}", list.join(", "));
            }
            if !space.generators.is_empty() {
                let _ = writeln!(out, "  generators:");
                for g in &space.generators {
                    let kind = match g.kind {
                        Kind::Exterior => "ext",
                        Kind::Polynomial => "poly",
                    };
                    let _ = write!(out, "    {:<22} {:>6}  {kind:<4}  {}", g.label, g.degree, g.family.name());
                    if verbose {
                        let _ = write!(out, "  {}", g.formula);
                    }
                    out.push('\n');
                }
            } else if space.degrees.is_none() {
                let _ = writeln!(out, "  no generators in range");
            }
            if let Some(dims) = &space.dims {
                let nonzero: Vec<&DimRow> = dims.iter().filter(|r| r.1 != "0").collect();
                let _ = writeln!(out, "  dimensions (nonzero degrees):");
                for DimRow(d, dim) in nonzero {
                    let _ = writeln!(out, "    {d:>6}  {dim}");
                }
            }
            if let Some(audit) = &space.audit {
                let failed = audit.iter().filter(|r| r.status == AuditStatus::Fail).count();
                let _ = writeln!(
                    out,
                    "  oracle audit: {} of {} degrees PASS",
                    audit.len() - failed,
                    audit.len()
                );
                for r in audit {
                    if verbose || r.status == AuditStatus::Fail {
                        let status = match r.status {
                            AuditStatus::Pass => "PASS",
                            AuditStatus::Fail => "FAIL",
                        };
                        let _ = writeln!(
                            out,
                            "    {status} degree {}: series {} oracle {}",
                            r.degree, r.series, r.oracle
                        );
                    }
                }
            }
        }

        if !self.meta.notes.is_empty() {
            out.push_str("\nnotes:\n");
            for n in &self.meta.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        out
    }
}
