//! The `bgk` command line.
//!
//! Exit codes: 0 success, 1 oracle mismatch, 2 invalid input, 3 the
//! requested computation is not covered for this `(G, p, k)`.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::AlgebraPresentation;
use crate::catalog::{
    self, anick_t, bgk_homology, classifying_space_bg, group_g, loops3_g3, mh_odd,
    mh_odd_literal_subscripts, su2_mod3_bgk, CatalogError, Regime, Verdict,
};
use crate::document::{
    generator_records, AuditRow, AuditStatus, Format, Inputs, Meta, OutputDocument, SpaceRecord,
    NOTE_C_FAMILY, NOTE_MH_INDEX, NOTE_VECTOR_SPACE,
};
use crate::groups::{parse_spec, GroupType};
use crate::prime::{is_prime, OddPrime};

pub const DEFAULT_MAX_DEGREE: usize = 100;
pub const ORACLE_MAX_DEGREE: usize = 80;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Success = 0,
    OracleMismatch = 1,
    InvalidInput = 2,
    NotCovered = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: Exit,
}

#[derive(Debug, Parser)]
#[command(name = "bgk", version, about = "Mod-p homology of classifying spaces of gauge groups over S^4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report which result applies to (G, p, k).
    Verdict {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_negative_numbers = true)]
        chern: i64,
        /// Exit with code 3 unless a homology computation is available.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Compute H_*(BG_k; F_p) and its constituent spaces.
    Compute {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_negative_numbers = true)]
        chern: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// List algebra generators of one space.
    Generators {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        space: SpaceChoice,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Recompute every dimension by monomial enumeration and compare.
    Oracle {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_negative_numbers = true)]
        chern: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        /// Allow --max-degree above 80.
        #[arg(long)]
        force: bool,
        /// Perturb the H_*(BG_k) dimension in this degree before auditing.
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
struct Target {
    /// Group spec: SU(n), Sp(n), Spin(n), G2, F4, E6, E7, E8, or type:2,4,...[@dim=D]
    #[arg(long)]
    group: String,
    #[arg(long)]
    prime: u64,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceChoice {
    Omega3g3,
    Bg,
    G,
    Anick,
}

struct Failure {
    code: Exit,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: Exit::InvalidInput,
            message: message.into(),
        }
    }

    fn not_covered(message: impl Into<String>) -> Self {
        Failure {
            code: Exit::NotCovered,
            message: message.into(),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::NotPRegular { .. } | CatalogError::Hypothesis(_) => Failure::not_covered(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

/// Runs the command line given as `args` (including the program name).
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    stdout: String::new(),
                    stderr: rendered,
                    code: Exit::InvalidInput,
                }
            } else {
                CommandOutput {
                    stdout: rendered,
                    stderr: String::new(),
                    code: Exit::Success,
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((stdout, code)) => CommandOutput {
            stdout,
            stderr: match code {
                Exit::OracleMismatch => "error: oracle mismatch\n".to_owned(),
                Exit::NotCovered => "error: no homology computation covers these inputs\n".to_owned(),
                _ => String::new(),
            },
            code,
        },
        Err(f) => CommandOutput {
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
            code: f.code,
        },
    }
}

fn execute(command: Command) -> Result<(String, Exit), Failure> {
    match command {
        Command::Verdict {
            target,
            chern,
            strict,
            output,
        } => {
            let (group, v) = checked_verdict(&target, chern)?;
            let doc = OutputDocument {
                inputs: Inputs::new(&target.group, &group, target.prime, Some(chern), None),
                verdict: Some(v.clone()),
                spaces: BTreeMap::new(),
                meta: Meta::default(),
            };
            let code = if strict && !v.regime.is_computable() {
                Exit::NotCovered
            } else {
                Exit::Success
            };
            Ok((doc.render(output.format, output.verbose), code))
        }
        Command::Compute {
            target,
            chern,
            max_degree,
            output,
        } => {
            let doc = compute_document(&target, chern, max_degree, output.verbose)?;
            Ok((doc.render(output.format, output.verbose), Exit::Success))
        }
        Command::Generators {
            target,
            space,
            max_degree,
            output,
        } => {
            let doc = generators_document(&target, space, max_degree, output.verbose)?;
            Ok((doc.render(output.format, output.verbose), Exit::Success))
        }
        Command::Oracle {
            target,
            chern,
            max_degree,
            force,
            inject_fault,
            output,
        } => {
            if max_degree > ORACLE_MAX_DEGREE && !force {
                return Err(Failure::invalid(format!(
                    "--max-degree {max_degree} exceeds the oracle limit {ORACLE_MAX_DEGREE}; pass --force to override"
                )));
            }
            let doc = oracle_document(&target, chern, max_degree, inject_fault, output.verbose)?;
            let failed = doc.spaces.values().any(|s| s.failures().next().is_some());
            let code = if failed { Exit::OracleMismatch } else { Exit::Success };
            Ok((doc.render(output.format, output.verbose), code))
        }
    }
}

fn parse_group(spec: &str) -> Result<GroupType, Failure> {
    let group = parse_spec(spec).map_err(|e| Failure::invalid(format!("--group {spec:?}: {e}")))?;
    if group.dimension_check() == Some(false) {
        return Err(Failure::invalid(format!(
            "--group {spec:?}: recorded dimension {} disagrees with sum(2 n_i - 1) = {}",
            group.dim().unwrap_or_default(),
            group.dimension_from_type()
        )));
    }
    Ok(group)
}

fn check_prime(p: u64) -> Result<(), Failure> {
    if !is_prime(p) {
        return Err(Failure::invalid(format!("--prime {p} is not a prime")));
    }
    Ok(())
}

fn odd_prime(p: u64) -> Result<OddPrime, Failure> {
    check_prime(p)?;
    OddPrime::new(p).map_err(|e| Failure::not_covered(e.to_string()))
}

fn checked_verdict(target: &Target, k: i64) -> Result<(GroupType, Verdict), Failure> {
    let group = parse_group(&target.group)?;
    check_prime(target.prime)?;
    let v = catalog::verdict(&group, target.prime, k)?;
    Ok((group, v))
}

fn base_notes(group: &GroupType) -> Vec<String> {
    let mut notes = vec![NOTE_VECTOR_SPACE.to_owned(), NOTE_C_FAMILY.to_owned()];
    if group.is_custom() {
        notes.push("custom type: no named-group checks were applied".to_owned());
    }
    notes
}

fn mh_record(group: &GroupType, p: OddPrime, verbose: bool, notes: &mut Vec<String>) -> Result<SpaceRecord, Failure> {
    let degrees = mh_odd(group, p)?;
    notes.push(NOTE_MH_INDEX.to_owned());
    if verbose {
        let literal = mh_odd_literal_subscripts(group, p)?;
        notes.push(format!(
            "MH_odd degrees used: {degrees:?}; with the subscripts read literally: {literal:?}"
        ));
    }
    Ok(SpaceRecord {
        description: "odd part of MH_*(Omega^3 G<3>)".to_owned(),
        generators: Vec::new(),
        dims: None,
        degrees: Some(degrees),
        audit: None,
    })
}

/// The presentations a full computation reports, keyed by space name.
fn compute_spaces(
    group: &GroupType,
    v: &Verdict,
    p: OddPrime,
    k: i64,
    n: usize,
) -> Result<Vec<(&'static str, AlgebraPresentation)>, Failure> {
    let bgk = match v.regime {
        Regime::FullTheorem => bgk_homology(group, p, k, n)?,
        Regime::SU2Mod3 => su2_mod3_bgk(k, n)?,
        _ => unreachable!("callers check the regime"),
    };
    Ok(vec![
        ("BGk", bgk),
        ("Omega3G3", loops3_g3(group, p, n)?),
        ("BG", classifying_space_bg(group, p, n)?),
        ("G", group_g(group, p, n)?),
    ])
}

fn computable(target: &Target, k: i64) -> Result<(GroupType, Verdict, OddPrime), Failure> {
    let (group, v) = checked_verdict(target, k)?;
    if let Some(reason) = v.failed_hypothesis() {
        return Err(Failure::not_covered(format!("{}: {reason}", v.regime)));
    }
    let p = odd_prime(target.prime)?;
    Ok((group, v, p))
}

fn compute_document(target: &Target, k: i64, n: usize, verbose: bool) -> Result<OutputDocument, Failure> {
    let (group, v, p) = computable(target, k)?;
    let mut notes = base_notes(&group);
    if v.regime == Regime::SU2Mod3 {
        notes.push(format!(
            "mod-3 SU(2) case: BGk is H_*(Omega^3 S^3<3>) modulo the ideal of {}",
            catalog::ANICK_BOTTOM_LABEL
        ));
    }
    let mut spaces = BTreeMap::new();
    for (name, pres) in compute_spaces(&group, &v, p, k, n)? {
        let record = SpaceRecord::from_presentation(&pres, n).map_err(|e| Failure::invalid(e.to_string()))?;
        spaces.insert(name.to_owned(), record);
    }
    spaces.insert("MH_odd".to_owned(), mh_record(&group, p, verbose, &mut notes)?);
    Ok(OutputDocument {
        inputs: Inputs::new(&target.group, &group, target.prime, Some(k), Some(n)),
        verdict: Some(v),
        spaces,
        meta: Meta {
            notes,
            ..Meta::default()
        },
    })
}

fn generators_document(target: &Target, space: SpaceChoice, n: usize, verbose: bool) -> Result<OutputDocument, Failure> {
    let group = parse_group(&target.group)?;
    let p = odd_prime(target.prime)?;
    if group.max_entry() > p.get() {
        return Err(CatalogError::NotPRegular {
            max_entry: group.max_entry(),
            p: p.get(),
        }
        .into());
    }
    let mut notes = base_notes(&group);
    let (name, pres) = match space {
        SpaceChoice::Omega3g3 => ("Omega3G3", loops3_g3(&group, p, n)?),
        SpaceChoice::Bg => ("BG", classifying_space_bg(&group, p, n)?),
        SpaceChoice::G => ("G", group_g(&group, p, n)?),
        SpaceChoice::Anick => ("Anick", anick_t(p, n)?),
    };
    if !matches!(space, SpaceChoice::Omega3g3 | SpaceChoice::Anick) {
        notes.retain(|note| note != NOTE_C_FAMILY);
    }
    let mut spaces = BTreeMap::new();
    let mut record = SpaceRecord::from_presentation(&pres, n).map_err(|e| Failure::invalid(e.to_string()))?;
    record.generators = generator_records(&pres, n as u64);
    spaces.insert(name.to_owned(), record);
    if space == SpaceChoice::Omega3g3 {
        spaces.insert("MH_odd".to_owned(), mh_record(&group, p, verbose, &mut notes)?);
    }
    Ok(OutputDocument {
        inputs: Inputs::new(&target.group, &group, target.prime, None, Some(n)),
        verdict: None,
        spaces,
        meta: Meta {
            notes,
            ..Meta::default()
        },
    })
}

/// Compares `series` with the monomial oracle at every degree.
pub fn audit(pres: &AlgebraPresentation, series: &crate::series::PowerSeries) -> Result<Vec<AuditRow>, crate::AlgebraError> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            let oracle = pres.monomial_count_oracle(d)?;
            Ok(AuditRow {
                degree: d,
                series: c.to_string(),
                oracle: oracle.to_string(),
                status: if &oracle == c { AuditStatus::Pass } else { AuditStatus::Fail },
            })
        })
        .collect()
}

fn oracle_document(
    target: &Target,
    k: i64,
    n: usize,
    inject_fault: Option<usize>,
    verbose: bool,
) -> Result<OutputDocument, Failure> {
    let (group, v, p) = computable(target, k)?;
    let mut spaces = BTreeMap::new();
    for (name, pres) in compute_spaces(&group, &v, p, k, n)? {
        let mut series = pres.poincare(n).map_err(|e| Failure::invalid(e.to_string()))?;
        if name == "BGk" {
            if let Some(d) = inject_fault {
                let c = series
                    .coefficient_mut(d)
                    .map_err(|e| Failure::invalid(format!("--inject-fault: {e}")))?;
                *c += 1u32;
            }
        }
        let mut record = SpaceRecord::with_series(&pres, &series);
        record.audit = Some(audit(&pres, &series).map_err(|e| Failure::invalid(e.to_string()))?);
        spaces.insert(name.to_owned(), record);
    }
    let mut notes = base_notes(&group);
    notes.push("audit: every dimension recomputed by exhaustive monomial enumeration".to_owned());
    if verbose {
        let failures: Vec<String> = spaces
            .iter()
            .flat_map(|(name, s)| s.failures().map(move |r| format!("{name}@{}", r.degree)))
            .collect();
        notes.push(format!("failing degrees: {failures:?}"));
    }
    Ok(OutputDocument {
        inputs: Inputs::new(&target.group, &group, target.prime, Some(k), Some(n)),
        verdict: Some(v),
        spaces,
        meta: Meta {
            notes,
            ..Meta::default()
        },
    })
}
