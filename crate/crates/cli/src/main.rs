use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use genomic_schur::combinatorics::par_candidates;
use genomic_schur::genome::{equivalence_classes, linear_extension, EquivClass};
use genomic_schur::hecke::{g_module, x_module};
use genomic_schur::qsym::{genomic_component, genomic_schur};
use genomic_schur::tableau::{enumerate_iglt, enumerate_syt};
use genomic_schur::verify::{sweep, verify_theorem, FamilyReport, FiltrationReport, VerifyOptions, Witness};
use genomic_schur::{Error, Partition, TwoRowPartition};

/// Largest shape size accepted on the command line.
const MAX_SIZE: usize = 64;

#[derive(Parser)]
#[command(name = "gschur", version, about = "Genomic Schur functions and 0-Hecke modules on two-row tableaux")]
struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "GSCHUR_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard Young tableaux of a shape.
    EnumerateSyt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// List the increasing gapless tableaux of a two-row shape with entries 1..=m.
    EnumerateIglt {
        #[arg(long)]
        shape: String,
        #[arg(long = "max")]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Fundamental expansion of the genomic Schur function, by degree.
    Expand {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        degree: Option<usize>,
        /// Also list the Schur-side shapes for each degree.
        #[arg(long)]
        schur: bool,
        #[arg(long)]
        json: bool,
    },
    /// Genome equivalence classes, grouped by family in filtration order.
    Classes {
        #[arg(long)]
        shape: String,
        #[arg(long = "max")]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the filtration for one shape or for every shape up to a size.
    Verify(VerifyArgs),
    /// Dump the 0-Hecke action table as JSON. With --max, the module on
    /// increasing gapless tableaux; otherwise the module on standard tableaux.
    Module {
        #[arg(long)]
        shape: String,
        #[arg(long = "max")]
        max: Option<usize>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "nmax", required_unless_present = "nmax")]
    shape: Option<String>,
    /// Largest entry; all valid values when omitted.
    #[arg(long = "max", requires = "shape")]
    max: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Also try every order compatible with bottom columns alone (n <= 6).
    #[arg(long)]
    all_extensions: bool,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Run = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match &result {
        Err(Failure::Usage(msg)) => eprintln!("error: {msg}"),
        Err(Failure::Internal(msg)) => eprintln!("internal error: {msg}"),
        Ok(_) => {}
    }
    ExitCode::from(exit_code(&result))
}

/// 0 when everything checked out, 1 for a counterexample or a broken
/// internal invariant, 2 for bad input.
fn exit_code(result: &Run) -> u8 {
    match result {
        Ok(true) => 0,
        Ok(false) | Err(Failure::Internal(_)) => 1,
        Err(Failure::Usage(_)) => 2,
    }
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    let mu: Partition = s.parse()?;
    if mu.size() > MAX_SIZE {
        return Err(Failure::Usage(format!("shape {mu} has more than {MAX_SIZE} boxes")));
    }
    Ok(mu)
}

fn parse_two_row(s: &str) -> Result<TwoRowPartition, Failure> {
    Ok(parse_shape(s)?.as_two_row()?)
}

fn check_max(m: usize) -> Result<usize, Failure> {
    if m == 0 || m > MAX_SIZE {
        return Err(Failure::Usage(format!("--max must be between 1 and {MAX_SIZE}, got {m}")));
    }
    Ok(m)
}

fn json_line(out: &mut String, v: &impl serde::Serialize) {
    out.push_str(&serde_json::to_string_pretty(v).expect("serializable"));
    out.push('\n');
}

fn run(command: Command, out: &mut String) -> Run {
    match command {
        Command::EnumerateSyt { shape, json } => {
            let list = enumerate_syt(&parse_shape(&shape)?);
            render_list(out, &list, json);
        }
        Command::EnumerateIglt { shape, max, json } => {
            let list = enumerate_iglt(parse_two_row(&shape)?, check_max(max)?);
            render_list(out, &list, json);
        }
        Command::Expand { shape, degree, schur, json } => expand(out, parse_two_row(&shape)?, degree, schur, json)?,
        Command::Classes { shape, max, json } => classes(out, parse_two_row(&shape)?, check_max(max)?, json)?,
        Command::Verify(args) => return verify(out, args),
        Command::Module { shape, max } => match max {
            Some(m) => json_line(out, &g_module(parse_two_row(&shape)?, check_max(m)?)?),
            None => json_line(out, &x_module(&parse_shape(&shape)?)),
        },
    }
    Ok(true)
}

fn render_list<T: std::fmt::Display + serde::Serialize>(out: &mut String, list: &[T], json: bool) {
    if json {
        json_line(out, &list);
    } else {
        for t in list {
            let _ = writeln!(out, "{t}");
        }
    }
}

fn expand(out: &mut String, lambda: TwoRowPartition, degree: Option<usize>, schur: bool, json: bool) -> Result<(), Failure> {
    let parts = match degree {
        Some(m) => vec![(check_max(m)?, genomic_component(lambda, m))],
        None => genomic_schur(lambda),
    };
    let mut rows = Vec::new();
    for (m, expr) in parts {
        let shapes = if m >= lambda.l_lambda() && m <= lambda.size() {
            par_candidates(lambda, m)?
        } else {
            Vec::new()
        };
        if json {
            let mut row = json!({ "degree": m, "expansion": expr });
            if schur {
                row["par"] = shapes.iter().map(|(x, mu)| json!({ "x": x, "shape": mu })).collect();
            }
            rows.push(row);
        } else {
            let _ = writeln!(out, "degree {m}: {expr}");
            if schur {
                let sum: Vec<String> = shapes.iter().map(|(_, mu)| format!("s{mu}")).collect();
                let rhs = if sum.is_empty() { "0".to_string() } else { sum.join("+") };
                let _ = writeln!(out, "  schur: {rhs}");
            }
        }
    }
    if json {
        json_line(out, &rows);
    }
    Ok(())
}

fn classes(out: &mut String, lambda: TwoRowPartition, m: usize, json: bool) -> Result<(), Failure> {
    let all = equivalence_classes(lambda, m)?;
    let mut families = Vec::new();
    for (x, mu) in par_candidates(lambda, m)? {
        let fam: Vec<&EquivClass> = all.iter().filter(|c| c.family == x).collect();
        let ordered: Vec<&EquivClass> = linear_extension(&fam).into_iter().map(|k| fam[k]).collect();
        families.push((x, mu, ordered));
    }
    if json {
        let v: Vec<Value> = families
            .iter()
            .map(|(x, mu, cs)| json!({ "x": x, "shape": mu, "classes": cs }))
            .collect();
        json_line(out, &json!({ "lambda": lambda, "m": m, "families": v }));
        return Ok(());
    }
    for (x, mu, cs) in &families {
        let _ = writeln!(out, "family {x}, shape {mu}");
        for (stage, c) in cs.iter().enumerate() {
            let members: Vec<String> = c.members.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(
                out,
                "  stage {}: bottom columns {:?}, top columns {:?}: {}",
                stage + 1,
                c.key.bottom_columns(),
                c.key.top_columns(),
                members.join("; ")
            );
        }
    }
    Ok(())
}

fn verify(out: &mut String, args: VerifyArgs) -> Run {
    let opts = VerifyOptions { all_extensions: args.all_extensions };
    if let Some(n_max) = args.nmax {
        if !(2..=MAX_SIZE).contains(&n_max) {
            return Err(Failure::Usage(format!("--nmax must be between 2 and {MAX_SIZE}, got {n_max}")));
        }
        let report = sweep(n_max, opts)?;
        if args.json {
            json_line(out, &report);
        } else {
            for r in &report.reports {
                render_report(out, r, false);
            }
            for c in report.expansion_checks.iter().filter(|c| !c.ok) {
                let _ = writeln!(out, "Schur expansion fails for {}: {:?}", c.lambda, c.mismatch);
            }
            let _ = writeln!(
                out,
                "{} of {} cases verified; Schur expansion checked for {} shapes",
                report.verified_cases,
                report.cases,
                report.expansion_checks.len()
            );
        }
        return Ok(report.all_verified);
    }

    let lambda = parse_two_row(args.shape.as_deref().expect("clap requires --shape"))?;
    let degrees: Vec<usize> = match args.max {
        Some(m) => vec![check_max(m)?],
        None => (lambda.l_lambda()..=lambda.size()).collect(),
    };
    let reports = degrees
        .into_iter()
        .map(|m| verify_theorem(lambda, m, opts))
        .collect::<genomic_schur::Result<Vec<_>>>()?;
    if args.json {
        match reports.as_slice() {
            [single] if args.max.is_some() => json_line(out, single),
            _ => json_line(out, &reports),
        }
    } else {
        for r in &reports {
            render_report(out, r, true);
        }
    }
    Ok(reports.iter().all(|r| r.verified))
}

fn render_report(out: &mut String, r: &FiltrationReport, detailed: bool) {
    let status = if r.verified { "verified" } else { "COUNTEREXAMPLE" };
    let _ = writeln!(out, "{} m={}: {status}", r.lambda, r.m);
    if detailed || !r.verified {
        for f in &r.families {
            render_family(out, f);
        }
        if !r.schur_expansion_ok {
            let _ = writeln!(out, "  Schur expansion fails at this degree");
        }
    }
    if let Some(w) = &r.witness {
        render_witness(out, w);
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn render_family(out: &mut String, f: &FamilyReport) {
    let _ = writeln!(
        out,
        "  family {}, shape {}: {} classes, order {:?}; closure {}, quotient {}, c1 {}",
        f.x,
        f.shape,
        f.classes.len(),
        f.order,
        ok(f.closure_ok),
        ok(f.quotient_iso_ok),
        ok(f.c1_ok)
    );
    for tie in &f.bottom_only_ties {
        let refined = serde_json::to_value(tie.refined).expect("serializable");
        let _ = writeln!(
            out,
            "    bottom columns tie classes {} and {}; refined order: {}",
            tie.classes[0],
            tie.classes[1],
            refined.as_str().unwrap_or_default()
        );
    }
    if let Some(s) = &f.all_extensions {
        let more = if s.truncated { " (truncated)" } else { "" };
        let _ = writeln!(out, "    bottom-column orders: {} of {} pass{more}", s.passing, s.tried);
        if let Some(order) = &s.first_failing_order {
            let _ = writeln!(out, "    first failing order: {order:?}");
        }
    }
}

fn render_witness(out: &mut String, w: &Witness) {
    let check = serde_json::to_value(w.check).expect("serializable");
    let mut line = format!("  witness: {}", check.as_str().unwrap_or_default());
    if let Some(x) = w.family {
        let _ = write!(line, ", family {x}");
    }
    if let Some(s) = w.stage {
        let _ = write!(line, ", stage {s}");
    }
    if let Some(i) = w.generator {
        let _ = write!(line, ", pi_{i}");
    }
    if let Some(t) = &w.tableau {
        let _ = write!(line, ", tableau {t}");
    }
    let _ = writeln!(out, "{line}: {}", w.detail);
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(true)), 0);
        assert_eq!(exit_code(&Ok(false)), 1);
        assert_eq!(exit_code(&Err(Failure::Internal("x".into()))), 1);
        assert_eq!(exit_code(&Err(Failure::Usage("x".into()))), 2);
        assert!(matches!(Failure::from(Error::Invariant("x".into())), Failure::Internal(_)));
        assert!(matches!(Failure::from(Error::Parse("x".into())), Failure::Usage(_)));
    }
}
