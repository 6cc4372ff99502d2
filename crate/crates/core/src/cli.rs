//! Command-line front end: `compute`, `enumerate` and `verify`.
//!
//! Exit codes: 0 when everything passes, 1 when a check found a
//! counterexample, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::gmodule::{schur_d, schur_u, BasisElement, FormalVector, Lattice};
use crate::identities::{
    check_cauchy_sweep, check_commutation, check_duality_sweep, check_heisenberg,
    check_pieri_minimum_sweep, check_pieri_sweep, check_pieri_variants_sweep, weighted_complete,
    CheckReport,
};
use crate::instances::InstanceName;
use crate::oracle::check_oracle;
use crate::ASequence;

#[derive(Debug, Parser)]
#[command(name = "gschur", version, about = "Generalized Schur operators and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one polynomial.
    Compute {
        #[command(subcommand)]
        what: Compute,
    },
    /// List the basis elements of one rank.
    Enumerate {
        #[arg(long)]
        instance: InstanceArg,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity checks and print one report per identity and instance.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// s^D_{element,target}(t1..tn) = <D(t1)...D(tn) element, target>.
    SchurD(SchurArgs),
    /// s^U_{element,target}(t1..tn) = <U(tn)...U(t1) target, element>.
    SchurU(SchurArgs),
    /// The weighted complete symmetric polynomial h_i(t1..tn).
    Hweighted {
        #[arg(long, value_enum)]
        a: SequenceArg,
        #[arg(long)]
        i: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        vars: u32,
    },
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(long)]
    instance: InstanceArg,
    /// Basis element as JSON, e.g. "[2,1]", "[\"\",\"1\"]" or 3.
    #[arg(long)]
    element: String,
    #[arg(long)]
    target: String,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    vars: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Commutation,
    Pieri,
    PieriMin,
    Variants,
    Duality,
    Cauchy,
    Oracle,
    Heisenberg,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Instance to check; all six when omitted.
    #[arg(long)]
    instance: Option<InstanceArg>,
    #[arg(long, default_value_t = 4)]
    rank_cap: usize,
    #[arg(long, default_value_t = 3)]
    i_max: usize,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    vars: u32,
    #[arg(long, default_value_t = 4)]
    deg_cap: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InstanceArg {
    Young,
    YoungDual,
    Shifted,
    Tree,
    TreeDual,
    Monomial,
}

impl From<InstanceArg> for InstanceName {
    fn from(a: InstanceArg) -> Self {
        match a {
            InstanceArg::Young => InstanceName::Young,
            InstanceArg::YoungDual => InstanceName::YoungDual,
            InstanceArg::Shifted => InstanceName::Shifted,
            InstanceArg::Tree => InstanceName::Tree,
            InstanceArg::TreeDual => InstanceName::TreeDual,
            InstanceArg::Monomial => InstanceName::Monomial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    Ones,
    OneOne,
    OneTwo,
    InvFactorial,
}

impl From<SequenceArg> for ASequence {
    fn from(a: SequenceArg) -> Self {
        match a {
            SequenceArg::Ones => ASequence::Ones,
            SequenceArg::OneOne => ASequence::OneOne,
            SequenceArg::OneTwo => ASequence::OneTwo,
            SequenceArg::InvFactorial => ASequence::InvFactorial,
        }
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            let _ = std::io::stdout().flush();
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Run a parsed command; returns the standard output and exit code, or a
/// usage error message.
pub fn execute(cli: &Cli) -> Result<(String, i32), String> {
    match &cli.command {
        Command::Compute { what } => compute(what).map(|s| (s + "\n", 0)),
        Command::Enumerate { instance, rank, format } => Ok((enumerate((*instance).into(), *rank, *format), 0)),
        Command::Verify(args) => verify(args),
    }
}

fn parse_element(inst: &dyn Lattice, s: &str) -> Result<BasisElement, String> {
    BasisElement::parse(inst.kind(), s).map_err(|e| e.to_string())
}

fn compute(what: &Compute) -> Result<String, String> {
    match what {
        Compute::SchurD(a) | Compute::SchurU(a) => {
            let inst = InstanceName::from(a.instance).build();
            let element = parse_element(inst.as_ref(), &a.element)?;
            let target = parse_element(inst.as_ref(), &a.target)?;
            let n = a.vars as usize;
            let p = if matches!(what, Compute::SchurD(_)) {
                schur_d(inst.as_ref(), &FormalVector::basis(element), &target, n)
            } else {
                schur_u(inst.as_ref(), &element, &FormalVector::basis(target), n)
            };
            Ok(p.to_string())
        }
        Compute::Hweighted { a, i, vars } => Ok(weighted_complete(&(*a).into(), *i, *vars as usize).to_string()),
    }
}

fn enumerate(inst: InstanceName, rank: usize, format: Format) -> String {
    let level = inst.build().level(rank);
    match format {
        Format::Text => level.iter().map(|b| format!("{b}\n")).collect(),
        Format::Json => {
            let values: Vec<serde_json::Value> = level.iter().map(BasisElement::to_json).collect();
            serde_json::to_string(&values).expect("serializable") + "\n"
        }
    }
}

fn reports_for(check: Check, inst: InstanceName, args: &VerifyArgs) -> Vec<CheckReport> {
    let lattice = inst.build();
    let l = lattice.as_ref();
    let (cap, i_max, n) = (args.rank_cap, args.i_max, args.vars as usize);
    match check {
        Check::Commutation => vec![check_commutation(l, i_max, i_max, cap)],
        Check::Pieri => vec![check_pieri_sweep(l, cap, i_max, n)],
        Check::PieriMin => vec![check_pieri_minimum_sweep(l, cap, i_max, n).expect("built-in instances have a minimum")],
        Check::Variants => vec![check_pieri_variants_sweep(&lattice, cap, i_max, n)],
        Check::Duality => vec![check_duality_sweep(&lattice, cap, n)],
        Check::Cauchy => vec![check_cauchy_sweep(l, cap, n, args.deg_cap)],
        Check::Oracle => vec![check_oracle(inst, cap, n)],
        Check::Heisenberg => {
            let parts = (1..=i_max.max(1))
                .flat_map(|a| (1..=i_max.max(1)).map(move |b| (a, b)))
                .map(|(a, b)| check_heisenberg(l, a, b, cap))
                .collect();
            let ranges = format!("l,k<={}, rank<={cap}", i_max.max(1));
            vec![CheckReport::merge("heisenberg", inst.as_str(), &ranges, parts)]
        }
        Check::All => [
            Check::Commutation,
            Check::Pieri,
            Check::PieriMin,
            Check::Variants,
            Check::Duality,
            Check::Cauchy,
            Check::Oracle,
            Check::Heisenberg,
        ]
        .into_iter()
        .flat_map(|c| reports_for(c, inst, args))
        .collect(),
    }
}

/// One `PASS`/`FAIL` line per report, followed by its counterexamples.
pub fn render_text(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status} {} {} [{}]", r.identity, r.instance, r.ranges);
        for c in &r.counterexamples {
            let _ = writeln!(s, "  {}: lhs = {}; rhs = {}", c.input, c.lhs, c.rhs);
        }
    }
    s
}

fn verify(args: &VerifyArgs) -> Result<(String, i32), String> {
    let instances: Vec<InstanceName> = match args.instance {
        Some(i) => vec![i.into()],
        None => InstanceName::ALL.to_vec(),
    };
    let reports: Vec<CheckReport> = instances
        .into_iter()
        .flat_map(|inst| reports_for(args.check, inst, args))
        .collect();
    emit(reports, args.format, args.out.as_deref())
}

fn emit(mut reports: Vec<CheckReport>, format: Format, out: Option<&Path>) -> Result<(String, i32), String> {
    reports.sort_by(|a, b| (&a.identity, &a.instance).cmp(&(&b.identity, &b.instance)));
    let text = match format {
        Format::Text => render_text(&reports),
        Format::Json => serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())? + "\n",
    };
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let code = if reports.iter().all(|r| r.pass) { 0 } else { 1 };
    Ok((text, code))
}
