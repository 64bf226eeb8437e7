//! Command-line front end.
//!
//! Exit codes: 0 for success (including negative verdicts), 1 for invalid
//! input or usage, 2 when a coset enumeration overflowed and a claim could
//! not be certified.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::fpgroups::{
    abelianize, smith_normal_form, todd_coxeter, AbelianInvariants, CyclicVerdict, Enumeration, IntMatrix,
    Presentation, SmithForm,
};
use crate::json_int;
use crate::knots::{alexander, knot_determinant, knot_parse, KnotExpr, SeifertMatrix};
use crate::laurent::LaurentPoly;
use crate::nestcurves::{NestCurve, NestInvariants, Region};
use crate::swcalc::{
    annulus_rim_surgery_sw, check_degree_bound, distinguish, trefoil_family, verify_trefoil_nonvanishing, SwPolynomial,
};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNCERTIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "knotting",
    version,
    about = "Alexander polynomials, nest-curve complement groups and knot-surgery basic classes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    format: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Alexander polynomial of a knot expression such as "trefoil # torus(2,5)".
    Alexander {
        knot: Option<String>,
        /// Read a Seifert matrix (JSON array of integer arrays) instead.
        #[arg(long, conflicts_with = "knot")]
        seifert: Option<PathBuf>,
    },
    /// Presentation, abelianization and order of a finitely presented group.
    Group {
        /// Half-degree of the maximal nest curve whose complement group to use.
        #[arg(long, required_unless_present = "presentation", conflicts_with = "presentation")]
        k: Option<i64>,
        /// Annulus region left unpunctured.
        #[arg(long, default_value_t = 1)]
        membrane: i64,
        /// Explicit presentation, e.g. "gens: a b ; rels: a^6 b^6", or its JSON form.
        #[arg(long)]
        presentation: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Invariants of a degree-2k maximal nest curve and certification of its
    /// complement group for every annulus membrane.
    NestReport {
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Basic-class counts after annulus rim surgery along a knot family.
    Distinguish {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        count: usize,
        /// Seiberg-Witten polynomial of the base manifold as JSON; defaults to
        /// two classes ±beta with coefficient 1.
        #[arg(long)]
        sw: Option<PathBuf>,
    },
    /// Smith normal form of an integer matrix read from a JSON file.
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Trefoil,
}

#[derive(Debug)]
enum Failure {
    Input(String),
}

type CmdResult = Result<(String, i32), Failure>;

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let json = cli.format == OutputMode::Json;
    let result = match cli.command {
        Command::Alexander { knot, seifert } => cmd_alexander(knot, seifert, json),
        Command::Group {
            k,
            membrane,
            presentation,
            max_cosets,
        } => cmd_group(k, membrane, presentation, max_cosets, json),
        Command::NestReport { k, max_cosets } => cmd_nest_report(k, max_cosets, json),
        Command::Distinguish {
            family: Family::Trefoil,
            count,
            sw,
        } => cmd_distinguish(count, sw, json),
        Command::Snf { matrix } => cmd_snf(&matrix, json),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct AlexanderReport {
    knot: String,
    alexander: LaurentPoly,
    alexander_text: String,
    degree: u64,
    terms: usize,
    #[serde(with = "json_int::scalar")]
    determinant: BigInt,
}

fn cmd_alexander(knot: Option<String>, seifert: Option<PathBuf>, json: bool) -> CmdResult {
    let expr = match (knot, seifert) {
        (Some(text), None) => knot_parse(&text).map_err(input)?,
        (None, Some(path)) => KnotExpr::Seifert(read_json::<SeifertMatrix>(&path)?),
        _ => return Err(Failure::Input("give a knot expression or --seifert <file>".into())),
    };
    let delta = alexander(&expr);
    let report = AlexanderReport {
        knot: expr.to_string(),
        alexander_text: delta.to_string(),
        degree: delta.degree().expect("Alexander polynomials are nonzero"),
        terms: delta.term_count(),
        determinant: BigInt::from(knot_determinant(&expr)),
        alexander: delta,
    };
    if json {
        return Ok((to_json(&report), EXIT_OK));
    }
    let mut s = String::new();
    writeln!(s, "knot: {}", report.knot).unwrap();
    writeln!(s, "alexander: {}", report.alexander_text).unwrap();
    writeln!(s, "degree = {}", report.degree).unwrap();
    writeln!(s, "terms = {}", report.terms).unwrap();
    writeln!(s, "determinant = {}", report.determinant).unwrap();
    Ok((s, EXIT_OK))
}

#[derive(Serialize)]
struct GroupReport {
    presentation: Presentation,
    presentation_text: String,
    abelianization: AbelianInvariants,
    abelianization_text: String,
    /// `None` when the enumeration overflowed.
    order: Option<usize>,
    max_cosets: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cyclic_of_expected_order: Option<CyclicVerdict>,
}

fn group_report(p: Presentation, max_cosets: usize, expected: Option<u64>) -> GroupReport {
    let ab = abelianize(&p);
    let enumeration = todd_coxeter(&p, max_cosets);
    let verdict = expected.map(|n| match (ab.is_cyclic_of_order(n), &enumeration) {
        (false, _) => CyclicVerdict::Fails,
        (true, Enumeration::Overflow { .. }) => CyclicVerdict::Inconclusive,
        (true, Enumeration::Complete(t)) if t.size() as u64 == n => CyclicVerdict::Holds,
        (true, Enumeration::Complete(_)) => CyclicVerdict::Fails,
    });
    GroupReport {
        presentation_text: p.to_string(),
        abelianization_text: ab.to_string(),
        presentation: p,
        abelianization: ab,
        order: enumeration.order(),
        max_cosets,
        expected_order: expected,
        cyclic_of_expected_order: verdict,
    }
}

fn verdict_text(v: CyclicVerdict) -> &'static str {
    match v {
        CyclicVerdict::Holds => "certified",
        CyclicVerdict::Fails => "refuted",
        CyclicVerdict::Inconclusive => "inconclusive (coset enumeration overflow)",
    }
}

fn write_group_text(s: &mut String, r: &GroupReport) {
    writeln!(s, "presentation: {}", r.presentation_text).unwrap();
    writeln!(s, "abelianization: {}", r.abelianization_text).unwrap();
    match r.order {
        Some(n) => writeln!(s, "order: {n}").unwrap(),
        None => writeln!(s, "order: overflow (not certified within {} cosets)", r.max_cosets).unwrap(),
    }
    if let (Some(n), Some(v)) = (r.expected_order, r.cyclic_of_expected_order) {
        writeln!(s, "cyclic of order {n}: {}", verdict_text(v)).unwrap();
    }
}

fn cmd_group(k: Option<i64>, membrane: i64, presentation: Option<String>, max_cosets: usize, json: bool) -> CmdResult {
    if max_cosets == 0 {
        return Err(Failure::Input("--max-cosets must be positive".into()));
    }
    let (p, expected) = match (k, presentation) {
        (Some(k), None) => {
            let curve = NestCurve::new(k).map_err(input)?;
            let p = curve.complement_presentation(membrane).map_err(input)?;
            (p, Some(curve.invariants().expected_pi1_order as u64))
        }
        (None, Some(text)) => (Presentation::parse(&text).map_err(input)?, None),
        _ => return Err(Failure::Input("give --k or --presentation".into())),
    };
    let report = group_report(p, max_cosets, expected);
    let code = if report.order.is_none() {
        EXIT_UNCERTIFIED
    } else {
        EXIT_OK
    };
    if json {
        return Ok((to_json(&report), code));
    }
    let mut s = String::new();
    write_group_text(&mut s, &report);
    Ok((s, code))
}

#[derive(Serialize)]
struct MembraneCertificate {
    membrane: i64,
    #[serde(flatten)]
    group: GroupReport,
}

#[derive(Serialize)]
struct NestReport {
    invariants: NestInvariants,
    regions: Vec<Region>,
    cyclicity_expected: bool,
    certifications: Vec<MembraneCertificate>,
}

fn cmd_nest_report(k: i64, max_cosets: usize, json: bool) -> CmdResult {
    if max_cosets == 0 {
        return Err(Failure::Input("--max-cosets must be positive".into()));
    }
    let curve = NestCurve::new(k).map_err(input)?;
    let inv = curve.invariants();
    let certifications: Vec<MembraneCertificate> = curve
        .membranes()
        .map(|m| MembraneCertificate {
            membrane: m,
            group: group_report(
                curve.complement_presentation(m).expect("membrane is an annulus"),
                max_cosets,
                Some(inv.expected_pi1_order as u64),
            ),
        })
        .collect();
    let report = NestReport {
        invariants: inv,
        regions: curve.regions(),
        cyclicity_expected: curve.k() >= 3,
        certifications,
    };
    let code = if report
        .certifications
        .iter()
        .any(|c| c.group.cyclic_of_expected_order == Some(CyclicVerdict::Inconclusive))
    {
        EXIT_UNCERTIFIED
    } else {
        EXIT_OK
    };
    if json {
        return Ok((to_json(&report), code));
    }
    let mut s = String::new();
    writeln!(s, "maximal nest curve, k = {}", inv.k).unwrap();
    writeln!(s, "degree = {}", inv.degree).unwrap();
    writeln!(s, "homology class = {}", inv.homology_class).unwrap();
    writeln!(s, "genus = {}", inv.genus).unwrap();
    writeln!(s, "expected pi1 order = {}", inv.expected_pi1_order).unwrap();
    let tags: Vec<String> = report
        .regions
        .iter()
        .map(|r| format!("R_{}={:?}", r.index, r.topology))
        .collect();
    writeln!(s, "regions: {}", tags.join(" ")).unwrap();
    if !report.cyclicity_expected {
        writeln!(s, "note: k < 3, the complement group is not expected to be cyclic").unwrap();
    }
    for c in &report.certifications {
        writeln!(s, "-- membrane R_{}", c.membrane).unwrap();
        write_group_text(&mut s, &c.group);
    }
    let all = report
        .certifications
        .iter()
        .all(|c| c.group.cyclic_of_expected_order == Some(CyclicVerdict::Holds));
    if all {
        writeln!(s, "pi1 order {} certified", inv.expected_pi1_order).unwrap();
    }
    Ok((s, code))
}

#[derive(Serialize)]
struct DistinguishOutput {
    counts: Vec<usize>,
    pairwise_distinct: bool,
    citations: Vec<String>,
    nonvanishing_verified_up_to: usize,
}

fn cmd_distinguish(count: usize, sw: Option<PathBuf>, json: bool) -> CmdResult {
    if count == 0 {
        return Err(Failure::Input("--count must be at least 1".into()));
    }
    let sw_y = match sw {
        Some(path) => read_json::<SwPolynomial>(&path)?,
        None => SwPolynomial::two_class_fixture(),
    };
    let bound = u32::try_from(count).map_err(|_| Failure::Input("--count too large".into()))?;
    verify_trefoil_nonvanishing(bound).map_err(input)?;
    let family = trefoil_family(count);
    for k in &family {
        let after = annulus_rim_surgery_sw(&sw_y, k);
        let doubled = alexander(&KnotExpr::connected_sum(k.clone(), k.clone()));
        check_degree_bound(&sw_y, &after, doubled.degree().expect("nonzero")).map_err(input)?;
    }
    let report = distinguish(&sw_y, &family).map_err(input)?;
    let out = DistinguishOutput {
        counts: report.counts,
        pairwise_distinct: report.pairwise_distinct,
        citations: report.citations,
        nonvanishing_verified_up_to: count,
    };
    if json {
        return Ok((to_json(&out), EXIT_OK));
    }
    let mut s = String::new();
    for (i, c) in out.counts.iter().enumerate() {
        writeln!(s, "K_{} ({} trefoils): {c} basic classes", i + 1, i + 1).unwrap();
    }
    writeln!(s, "pairwise distinct: {}", out.pairwise_distinct).unwrap();
    writeln!(
        s,
        "(t - 1 + t^-1)^(2i) has no vanishing coefficient for i = 1..{}",
        out.nonvanishing_verified_up_to
    )
    .unwrap();
    for line in &out.citations {
        writeln!(s, "  {line}").unwrap();
    }
    Ok((s, EXIT_OK))
}

fn cmd_snf(path: &Path, json: bool) -> CmdResult {
    let m: IntMatrix = read_json(path)?;
    let snf: SmithForm = smith_normal_form(&m);
    if json {
        return Ok((to_json(&snf), EXIT_OK));
    }
    let divisors: Vec<String> = snf.divisors.iter().map(ToString::to_string).collect();
    let mut s = String::new();
    writeln!(s, "divisors: {}", divisors.join(" ")).unwrap();
    writeln!(s, "U:\n{}", snf.u).unwrap();
    writeln!(s, "V:\n{}", snf.v).unwrap();
    Ok((s, EXIT_OK))
}
