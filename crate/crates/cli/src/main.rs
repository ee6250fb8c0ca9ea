use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ribbon::cycpoly::eval_at_root;
use ribbon::par::Execution;
use ribbon::symfunc::{mn_character, theorem_rhs};
use ribbon::tableaux::{enumerate_bst, fake_degree, sign_epsilon};
use ribbon::verify::{self, Check, VerifyOptions};
use ribbon::{BorderStripTableau, IntPoly, Partition};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ribbon",
    version,
    about = "Border strip tableaux and fake degrees at roots of unity"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "RIBBON_FORMAT",
        default_value = "text"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BstMode {
    List,
    Count,
    Stats,
}

#[derive(Subcommand)]
enum Command {
    /// Print the k-core and k-quotient of a partition.
    CoreQuotient {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Print f(q, t), or its value at a primitive k-th root of unity next to the tableau sum.
    Fakedeg {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// List or count border strip tableaux with their descents, heights and stat.
    Bst {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value = "list")]
        mode: BstMode,
    },
    /// Evaluate an irreducible character of the symmetric group.
    Character {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        /// Cycle type, comma-separated.
        #[arg(long, value_parser = parse_partition)]
        rho: Partition,
    },
    /// Check every identity for all partitions up to a size.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Only this strip size.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
        /// Truncation order of the series checks; defaults to max-n.
        #[arg(long)]
        order: Option<usize>,
        /// Largest number of variables in the root-of-unity Schur check.
        #[arg(long, default_value_t = 8)]
        schur_m: usize,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: ribbon::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means a check ran and failed.
fn run(cli: Cli) -> Result<bool> {
    let fmt = cli.format;
    match cli.command {
        Command::CoreQuotient { partition, k } => core_quotient(fmt, &partition, k as usize),
        Command::Fakedeg { partition, k } => fakedeg(fmt, &partition, k.map(|k| k as usize)),
        Command::Bst { partition, k, mode } => bst(fmt, &partition, k as usize, mode),
        Command::Character { partition, rho } => character(fmt, &partition, &rho),
        Command::Verify {
            max_n,
            k,
            order,
            schur_m,
            sequential,
        } => {
            let max_n = max_n as usize;
            let mut opts = VerifyOptions::new(max_n, order.unwrap_or(max_n), schur_m);
            opts.k = k.map(|k| k as usize);
            if sequential {
                opts.execution = Execution::Sequential;
            }
            run_verify(fmt, &opts)
        }
    }
}

fn emit(fmt: Format, value: Value, text: String) {
    match fmt {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json values serialize")
        ),
        Format::Text => print!("{text}"),
    }
}

fn core_quotient(fmt: Format, lambda: &Partition, k: usize) -> Result<bool> {
    let core = lambda.k_core(k)?;
    let quotient = lambda.k_quotient(k)?;
    let text = format!(
        "partition: {}\nk: {k}\ncore: {}{}\nquotient: {quotient}\n",
        lambda.compact(),
        core.compact(),
        if core.is_empty() { "" } else { " (nonempty)" },
    );
    let value = json!({
        "partition": lambda,
        "k": k,
        "core": core,
        "empty_core": core.is_empty(),
        "quotient": quotient,
    });
    emit(fmt, value, text);
    Ok(true)
}

fn fakedeg(fmt: Format, lambda: &Partition, k: Option<usize>) -> Result<bool> {
    let f = fake_degree(lambda);
    let Some(k) = k else {
        let text = format!("f^{}(q,t) = {f}\n", lambda.compact());
        emit(
            fmt,
            json!({ "partition": lambda, "fake_degree": f, "text": f.to_string() }),
            text,
        );
        return Ok(true);
    };
    let eval = eval_at_root(&f, k)?;
    let integral = eval.as_integer_poly();
    let core = lambda.k_core(k)?;
    let mut text = format!(
        "partition: {}\nk: {k}\nf(xi,t) = {eval}\n",
        lambda.compact()
    );
    text += &format!(
        "integral: {}\n",
        if integral.is_some() { "yes" } else { "no" }
    );
    let mut value = json!({
        "partition": lambda,
        "k": k,
        "evaluation": eval.to_string(),
        "integral": integral,
        "core": core,
    });
    if !core.is_empty() {
        text += &format!(
            "core: {} (nonempty, no combinatorial interpretation)\nverdict: N/A\n",
            core.compact()
        );
        value["verdict"] = json!("N/A");
        emit(fmt, value, text);
        return Ok(true);
    }
    let eps = sign_epsilon(lambda, k)?;
    let rhs = theorem_rhs(lambda, k)?;
    let ok = integral.as_ref() == Some(&rhs);
    let verdict = if ok { "MATCH" } else { "MISMATCH" };
    text += &format!(
        "eps: {}\ntableau side: {rhs}\nverdict: {verdict}\n",
        sign_str(eps)
    );
    value["eps"] = json!(eps);
    value["tableau_side"] = json!(rhs);
    value["verdict"] = json!(verdict);
    emit(fmt, value, text);
    Ok(ok)
}

fn sign_str(eps: i32) -> &'static str {
    if eps > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn bst_row(b: &BorderStripTableau) -> Value {
    let des = b.descents();
    json!({
        "tableau": b,
        "descents": des.set(),
        "maj": des.maj(),
        "height": b.height(),
        "stat": b.stat(),
    })
}

fn bst(fmt: Format, lambda: &Partition, k: usize, mode: BstMode) -> Result<bool> {
    let all: Vec<BorderStripTableau> = enumerate_bst(lambda, k).collect();
    let mut text = format!("BST({}, {k}): {} tableaux\n", lambda.compact(), all.len());
    let mut value = json!({ "partition": lambda, "k": k, "count": all.len() });
    match mode {
        BstMode::Count => {}
        BstMode::List => {
            for (i, b) in all.iter().enumerate() {
                text += &format!(
                    "\n#{} DES={{{}}} height={} stat={}\n{}\n",
                    i + 1,
                    join(b.descents().set()),
                    b.height(),
                    b.stat(),
                    b.render()
                );
            }
            value["tableaux"] = all.iter().map(bst_row).collect();
        }
        BstMode::Stats => {
            let stats: Vec<usize> = all.iter().map(BorderStripTableau::stat).collect();
            let mut poly = IntPoly::zero();
            for &s in &stats {
                poly += &IntPoly::monomial(1, s);
            }
            text += &format!("stats: {}\nsum t^stat = {poly}\n", join(&stats));
            value["stats"] = json!(stats);
            value["generating_polynomial"] = json!(poly);
            if let Some(first) = all.first() {
                text += &format!("eps: {}\n", sign_str(first.sign()));
                value["eps"] = json!(first.sign());
            }
        }
    }
    emit(fmt, value, text);
    Ok(true)
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn character(fmt: Format, lambda: &Partition, rho: &Partition) -> Result<bool> {
    let chi =
        mn_character(lambda, rho).context("cycle type must have the same size as the partition")?;
    let text = format!("chi^{}({}) = {chi}\n", lambda.compact(), rho);
    emit(
        fmt,
        json!({ "partition": lambda, "rho": rho, "value": chi.to_string() }),
        text,
    );
    Ok(true)
}

fn run_verify(fmt: Format, opts: &VerifyOptions) -> Result<bool> {
    if opts.series_order == 0 {
        bail!("--order must be positive");
    }
    let report = verify::run(opts);
    let mode = match opts.execution {
        Execution::Parallel if Execution::parallel_available() => "parallel",
        _ => "sequential",
    };
    let mut text = format!(
        "verify: max_n={} cases={} series_order={} schur_m={} ({mode})\n",
        opts.max_n, report.cases, opts.series_order, opts.schur_max_m
    );
    for check in Check::ALL {
        let t = report.tallies[&check];
        text += &format!(
            "  {:<20} passed {:>6}  skipped {:>6}  failed {:>4}\n",
            check.name(),
            t.passed,
            t.skipped,
            t.failed
        );
    }
    if let Some(first) = report.failures.first() {
        text += &format!(
            "smallest counterexample: {} k={} [{}] {}\n",
            first.partition.compact(),
            first.k,
            first.check,
            first.detail
        );
    }
    text += &format!(
        "result: {}\n",
        if report.passed() { "PASS" } else { "FAIL" }
    );
    emit(fmt, serde_json::to_value(&report)?, text);
    Ok(report.passed())
}
