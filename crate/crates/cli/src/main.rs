//! `sgp`: exact computations on numerical semigroups from the command line.
//!
//! Exit codes: 0 on success and verified claims, 1 when a verification
//! check fails (or a budget runs out before a verdict), 2 on invalid input.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sgp_cli::report::ReportDocument;
use sgp_cli::scan::{self, rows_to_csv, Cell, RowStatus};
use sgp_core::families::{
    verify_bresinsky_family, verify_ed4_ideal, verify_symmetric_family, verify_unbounded_family,
    BresinskyParams, SymSParams, SymTParams, SymmetricParams, UnboundedParams, DEFAULT_BUDGET,
};
use sgp_core::presentations::{betti_elements_budgeted, minimal_presentation_cardinality_budgeted};
use sgp_core::{minimal_generators, Error, SemigroupSpec, VerificationReport};

#[derive(Parser)]
#[command(
    name = "sgp",
    version,
    about = "Exact arithmetic on numerical semigroups: invariants, presentations, and family verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of a single semigroup given by generators
    Info(InfoArgs),
    /// Apéry table of a semigroup with respect to an element
    Apery(AperyArgs),
    /// Betti elements and minimal presentation cardinality
    Betti(BettiArgs),
    /// Family constructors and verifiers
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Parameter grid scans emitting CSV evidence tables
    Scan(ScanArgs),
    /// Binomial generating-set certificates for the quadruple family ideals
    #[command(subcommand)]
    Ideal(IdealCmd),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GensInput {
    /// Comma-separated generators, e.g. --gens 7,8,17,18
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    gens: Option<Vec<u64>>,
    /// File with one generator per line
    #[arg(long, value_name = "PATH")]
    gens_file: Option<PathBuf>,
}

impl GensInput {
    fn resolve(&self) -> Result<Vec<u64>, Error> {
        if let Some(g) = &self.gens {
            return Ok(g.clone());
        }
        let path = self.gens_file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let v: u64 = line.parse().map_err(|_| {
                Error::InvalidInput(format!("line {} is not a positive integer: {line}", i + 1))
            })?;
            out.push(v);
        }
        Ok(out)
    }
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    gens: GensInput,
    /// Include the Apéry set with respect to the multiplicity
    #[arg(long)]
    apery: bool,
    /// Include Betti elements and the presentation cardinality
    #[arg(long)]
    betti: bool,
    #[arg(long)]
    json: bool,
    /// Cap on enumeration nodes per fiber (overrides SGP_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct AperyArgs {
    #[command(flatten)]
    gens: GensInput,
    /// Element to take the table against; defaults to the multiplicity
    #[arg(long)]
    modulus: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    gens: GensInput,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Verify every closed-form claim for one family instance
    Verify(FamilyVerifyArgs),
}

#[derive(Args)]
struct FamilyVerifyArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    q2: Option<u64>,
    /// For the unbounded family at e=4, q=0: run the full ideal certificate
    #[arg(long)]
    ideal: bool,
    #[arg(long)]
    json: bool,
    /// Emit the checks as CSV instead of human-readable text
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Inclusive range like 5..8, or a single value
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    e: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    q2: Option<String>,
    /// Write the CSV table to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Worker threads; affects wall time only, never the output
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Certify the explicit generating sets of the quadruple ideal at a given n
    Check(IdealCheckArgs),
}

#[derive(Args)]
struct IdealCheckArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    SymS,
    SymT,
    Unbounded,
    Bresinsky,
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_)
        | Error::NotNumerical { .. }
        | Error::NotMember { .. }
        | Error::NotMinimal { .. }
        | Error::Overflow => 2,
        _ => 1,
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("SGP_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::InvalidInput(format!("SGP_BUDGET is not an integer: {v}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Info(args) => cmd_info(args),
        Cmd::Apery(args) => cmd_apery(args),
        Cmd::Betti(args) => cmd_betti(args),
        Cmd::Family(FamilyCmd::Verify(args)) => cmd_family_verify(args),
        Cmd::Scan(args) => cmd_scan(args),
        Cmd::Ideal(IdealCmd::Check(args)) => cmd_ideal_check(args),
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn finish(
    mut doc: ReportDocument,
    started: Instant,
    json: bool,
    csv: bool,
    human: String,
) -> ReportDocument {
    doc.timing_ms = started.elapsed().as_millis() as u64;
    if json {
        println!("{}", doc.to_json());
    } else if csv {
        print!("{}", doc.to_csv());
    } else {
        print!("{human}");
    }
    doc
}

fn cmd_info(args: InfoArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;
    let input = args.gens.resolve()?;
    let reduced = minimal_generators(&input)?;
    let spec = SemigroupSpec::new(reduced.clone())?;

    let mut doc = ReportDocument::new("info");
    doc.param("gens", join(&input));
    let mut human = String::new();

    let mut sorted_input = input.clone();
    sorted_input.sort_unstable();
    sorted_input.dedup();
    if sorted_input != reduced {
        human.push_str(&format!(
            "note: input is not minimal; reduced {} -> {}\n",
            join(&sorted_input),
            join(&reduced)
        ));
        doc.value(
            "minimal_generators",
            format!("{} (reduced from {})", join(&reduced), join(&sorted_input)),
        );
    } else {
        doc.value("minimal_generators", join(&reduced));
    }

    let profile = spec.profile();
    human.push_str(&format!("generators:          {}\n", join(spec.generators())));
    human.push_str(&format!("multiplicity:        {}\n", spec.multiplicity()));
    human.push_str(&format!("embedding dimension: {}\n", spec.embedding_dimension()));
    human.push_str(&format!("frobenius:           {}\n", profile.frobenius));
    human.push_str(&format!("genus:               {}\n", profile.genus));
    human.push_str(&format!("symmetric:           {}\n", profile.symmetric));
    doc.value("multiplicity", spec.multiplicity());
    doc.value("embedding_dimension", spec.embedding_dimension());
    doc.value("frobenius", profile.frobenius);
    doc.value("genus", profile.genus);
    doc.value("symmetric", profile.symmetric);

    if args.apery {
        let table = spec.apery(spec.multiplicity())?;
        let set = join(&table.sorted_set());
        human.push_str(&format!(
            "apery set (mod {}):  {}\n",
            table.modulus(),
            set
        ));
        doc.value("apery_set", set);
    }
    if args.betti {
        let betti = betti_elements_budgeted(&spec, budget)?;
        let mu: u64 = betti.iter().map(|b| b.component_count as u64 - 1).sum();
        let elements = betti
            .iter()
            .map(|b| format!("{} ({} components)", b.element, b.component_count))
            .collect::<Vec<_>>()
            .join(", ");
        human.push_str(&format!("betti elements:      {elements}\n"));
        human.push_str(&format!("minimal presentation cardinality: {mu}\n"));
        doc.value("betti_elements", &elements);
        doc.value("presentation_cardinality", mu);
    }

    finish(doc, started, args.json, false, human);
    Ok(0)
}

fn cmd_apery(args: AperyArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let input = args.gens.resolve()?;
    let spec = SemigroupSpec::new(minimal_generators(&input)?)?;
    let modulus = args.modulus.unwrap_or_else(|| spec.multiplicity());
    let table = spec.apery(modulus)?;

    let mut doc = ReportDocument::new("apery");
    doc.param("gens", join(&input));
    doc.param("modulus", modulus);
    let mut human = format!("apery set of {} mod {}\n", spec, modulus);
    for (r, &w) in table.entries().iter().enumerate() {
        human.push_str(&format!("  {r:>4}: {w}\n"));
    }
    human.push_str(&format!(
        "max {} (frobenius {})\n",
        table.max(),
        spec.frobenius()
    ));
    doc.value("entries", join(&table.sorted_set()));
    doc.value("max", table.max());
    doc.value("frobenius", spec.frobenius());

    finish(doc, started, args.json, false, human);
    Ok(0)
}

fn cmd_betti(args: BettiArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;
    let input = args.gens.resolve()?;
    let spec = SemigroupSpec::new(minimal_generators(&input)?)?;
    let betti = betti_elements_budgeted(&spec, budget)?;
    let mu = minimal_presentation_cardinality_budgeted(&spec, budget)?;

    let mut doc = ReportDocument::new("betti");
    doc.param("gens", join(&input));
    let mut human = format!("betti elements of {}\n", spec);
    for b in &betti {
        let witnesses = b
            .witnesses
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" | ");
        human.push_str(&format!(
            "  {:>6}: {} components: {}\n",
            b.element, b.component_count, witnesses
        ));
        doc.value(
            &format!("betti_{}", b.element),
            format!("{} components", b.component_count),
        );
    }
    human.push_str(&format!("minimal presentation cardinality: {mu}\n"));
    doc.value("presentation_cardinality", mu);

    finish(doc, started, args.json, false, human);
    Ok(0)
}

fn cmd_family_verify(args: FamilyVerifyArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;

    fn require(name: &str, v: Option<u64>) -> Result<u64, Error> {
        v.ok_or_else(|| Error::InvalidInput(format!("--{name} is required for this family")))
    }
    fn forbid(name: &str, v: Option<u64>) -> Result<(), Error> {
        match v {
            Some(_) => Err(Error::InvalidInput(format!(
                "--{name} does not apply to this family"
            ))),
            None => Ok(()),
        }
    }

    let mut doc = ReportDocument::new("family verify");
    let report: VerificationReport = match args.family {
        FamilyKind::SymS => {
            forbid("n", args.n)?;
            forbid("q2", args.q2)?;
            let p = SymSParams::new(
                require("e", args.e)?,
                require("q", args.q)?,
                require("d", args.d)?,
            )?;
            doc.param("family", "sym-s");
            doc.param("e", p.e).param("q", p.q).param("d", p.d);
            verify_symmetric_family(SymmetricParams::S(p), budget)?
        }
        FamilyKind::SymT => {
            forbid("n", args.n)?;
            forbid("q2", args.q2)?;
            let p = SymTParams::new(
                require("e", args.e)?,
                require("q", args.q)?,
                require("d", args.d)?,
            )?;
            doc.param("family", "sym-t");
            doc.param("e", p.e).param("q", p.q).param("d", p.d);
            verify_symmetric_family(SymmetricParams::T(p), budget)?
        }
        FamilyKind::Unbounded => {
            forbid("d", args.d)?;
            forbid("q2", args.q2)?;
            let p = UnboundedParams::new(
                require("n", args.n)?,
                require("e", args.e)?,
                require("q", args.q)?,
            )?;
            doc.param("family", "unbounded");
            doc.param("n", p.n).param("e", p.e).param("q", p.q);
            doc.param("ideal", args.ideal);
            verify_unbounded_family(p, args.ideal, budget)?
        }
        FamilyKind::Bresinsky => {
            forbid("n", args.n)?;
            forbid("e", args.e)?;
            forbid("q", args.q)?;
            forbid("d", args.d)?;
            let p = BresinskyParams::new(require("q2", args.q2)?)?;
            doc.param("family", "bresinsky");
            doc.param("q2", p.q2);
            verify_bresinsky_family(p, budget)?
        }
    };

    doc.absorb(&report);
    let human = format!("{report}\n");
    let doc = finish(doc, started, args.json, args.csv, human);
    Ok(if doc.all_pass() { 0 } else { 1 })
}

fn parse_range(name: &str, v: &Option<String>) -> Result<RangeInclusive<u64>, Error> {
    let text = v
        .as_ref()
        .ok_or_else(|| Error::InvalidInput(format!("--{name} is required for this family")))?;
    let parse = |s: &str| -> Result<u64, Error> {
        s.parse()
            .map_err(|_| Error::InvalidInput(format!("--{name}: {s} is not a nonnegative integer")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::InvalidInput(format!(
            "--{name}: empty range {text}"
        )));
    }
    Ok(lo..=hi)
}

fn forbid_range(name: &str, v: &Option<String>) -> Result<(), Error> {
    match v {
        Some(_) => Err(Error::InvalidInput(format!(
            "--{name} does not apply to this family"
        ))),
        None => Ok(()),
    }
}

fn cmd_scan(args: ScanArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;

    // cells in lexicographic parameter order
    let mut cells: Vec<Cell> = Vec::new();
    let mut params: BTreeMap<String, String> = BTreeMap::new();
    match args.family {
        FamilyKind::SymS | FamilyKind::SymT => {
            forbid_range("n", &args.n)?;
            forbid_range("q2", &args.q2)?;
            let e = parse_range("e", &args.e)?;
            let q = parse_range("q", &args.q)?;
            let d = parse_range("d", &args.d)?;
            params.insert("e".into(), format_range(&e));
            params.insert("q".into(), format_range(&q));
            params.insert("d".into(), format_range(&d));
            for e in e.clone() {
                for q in q.clone() {
                    for d in d.clone() {
                        cells.push(match args.family {
                            FamilyKind::SymS => Cell::SymS { e, q, d },
                            _ => Cell::SymT { e, q, d },
                        });
                    }
                }
            }
        }
        FamilyKind::Unbounded => {
            forbid_range("d", &args.d)?;
            forbid_range("q2", &args.q2)?;
            let n = parse_range("n", &args.n)?;
            let e = parse_range("e", &args.e)?;
            let q = parse_range("q", &args.q)?;
            params.insert("n".into(), format_range(&n));
            params.insert("e".into(), format_range(&e));
            params.insert("q".into(), format_range(&q));
            for n in n.clone() {
                for e in e.clone() {
                    for q in q.clone() {
                        cells.push(Cell::Unbounded { n, e, q });
                    }
                }
            }
        }
        FamilyKind::Bresinsky => {
            forbid_range("n", &args.n)?;
            forbid_range("e", &args.e)?;
            forbid_range("q", &args.q)?;
            forbid_range("d", &args.d)?;
            let q2 = parse_range("q2", &args.q2)?;
            params.insert("q2".into(), format_range(&q2));
            for q2 in q2.clone() {
                cells.push(Cell::Bresinsky { q2 });
            }
        }
    }

    let rows = scan::run_scan(&cells, args.jobs, budget)?;
    let csv = rows_to_csv(&rows);

    let mut doc = ReportDocument::new("scan");
    doc.params = params;
    doc.param(
        "family",
        match args.family {
            FamilyKind::SymS => "sym-s",
            FamilyKind::SymT => "sym-t",
            FamilyKind::Unbounded => "unbounded",
            FamilyKind::Bresinsky => "bresinsky",
        },
    );
    doc.param("budget", budget);
    for row in &rows {
        doc.check(
            &row.cell.label(),
            row.status != RowStatus::Invalid,
            Some(row.to_csv_line()),
        );
    }

    if let Some(path) = &args.csv {
        std::fs::write(path, &csv)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
        let human = format!("wrote {} rows to {}\n", rows.len(), path.display());
        finish(doc, started, args.json, false, human);
    } else {
        finish(doc, started, args.json, false, csv);
    }
    Ok(0)
}

fn format_range(r: &RangeInclusive<u64>) -> String {
    if r.start() == r.end() {
        r.start().to_string()
    } else {
        format!("{}..{}", r.start(), r.end())
    }
}

fn cmd_ideal_check(args: IdealCheckArgs) -> Result<i32, Error> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;
    if args.n < 5 {
        return Err(Error::InvalidInput(format!(
            "n must be at least 5, got {}",
            args.n
        )));
    }
    let report = verify_ed4_ideal(args.n, budget)?;
    let mut doc = ReportDocument::new("ideal check");
    doc.param("n", args.n);
    doc.absorb(&report);
    let human = format!("{report}\n");
    let doc = finish(doc, started, args.json, args.csv, human);
    Ok(if doc.all_pass() { 0 } else { 1 })
}
