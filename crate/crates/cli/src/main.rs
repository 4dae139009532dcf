//! Command-line front end for the partition-algebra library.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use clap::{Parser, Subcommand};
use num::{BigInt, BigRational};
use partition_algebra::bratteli::{
    dims, graph_export, level2_from_str, level2_to_string, tableaux, AugShape,
};
use partition_algebra::relations::{half_relation_suite, relation_suite, Report, ReportEntry};
use partition_algebra::seatplan::{enumerate_all_bounded, sample, SeatPlan, DEFAULT_ENUM_BOUND};
use partition_algebra::seminormal::{
    e_matrix, f_matrix, faithfulness_rank, s_matrix, trace_of, verify_rep_relations, RepMatrix,
};
use partition_algebra::words::{eval_word, standard_word, word_to_element, Letter, Word};
use partition_algebra::{AlgElement, IntPoly, RatFunc};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pa",
    about = "Exact partition-algebra computations: diagrams, words, relation suites, seminormal matrices",
    version
)]
struct Cli {
    /// Emit one structured JSON record per result line.
    #[arg(long, global = true)]
    json: bool,
    /// Lift the default size bounds (enumeration n ≤ 4, representations level ≤ 3).
    #[arg(long, global = true)]
    unsafe_bounds: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply seat-plan diagrams; prints the Z[Q]-combination.
    Multiply {
        #[arg(long)]
        n: usize,
        /// Two or more diagrams in brace notation.
        #[arg(required = true, num_args = 2..)]
        diagrams: Vec<String>,
    },
    /// Standard generator word of a seat-plan.
    StandardWord {
        #[arg(long)]
        n: usize,
        diagram: String,
    },
    /// Evaluate a generator word to Q^p * diagram.
    EvalWord {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// List all seat-plans on n strands.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only diagrams whose last strand is fixed.
        #[arg(long)]
        fixed_last: bool,
    },
    /// Path counts per shape at a level (integer or half, e.g. 3 or 5/2).
    Dims {
        #[arg(long)]
        n: String,
    },
    /// DOT export of the Bratteli graph up to a level.
    BratteliDot {
        #[arg(long)]
        level: String,
    },
    /// Seminormal matrix of one generator on one shape.
    RepMatrix {
        #[arg(long)]
        level: String,
        #[arg(long)]
        shape: String,
        /// Generator letter, e.g. s2, f1, e3.
        #[arg(long)]
        gen: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Run verification suites; exit 0 iff every instance passes.
    Verify {
        /// Strand count (integer) or level (5/2) for rep-relations.
        #[arg(long)]
        n: String,
        /// Comma-separated: diagram-relations, half-relations, standard-words, rep-relations.
        #[arg(long)]
        what: Option<String>,
        #[arg(long, default_value = "1")]
        c: String,
        /// Seed for the randomized standard-word sweep at n = 4.
        #[arg(long, default_value_t = 20240131)]
        seed: u64,
        /// Sample size for the randomized sweep.
        #[arg(long, default_value_t = 500)]
        sample: usize,
    },
    /// Rank of the specialized direct-sum representation over the basis.
    Rank {
        #[arg(long)]
        level: String,
        #[arg(long, default_value_t = 101)]
        q0: i64,
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Trace of a word's matrix on every shape of a level.
    Trace {
        #[arg(long)]
        level: String,
        word: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}

fn domain<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn diagram_json(w: &SeatPlan) -> serde_json::Value {
    json!({ "n": w.n(), "blocks": w.blocks_signed() })
}

fn element_json(x: &AlgElement) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = x
        .terms()
        .map(|(w, c)| json!({ "coeff": c.render(), "diagram": diagram_json(w) }))
        .collect();
    json!({ "n": x.n(), "terms": terms })
}

fn parse_letter(text: &str) -> Result<Letter, String> {
    let word = domain(Word::parse(text))?;
    match word.0.as_slice() {
        [letter] => Ok(*letter),
        _ => Err(format!("expected a single generator letter, got '{text}'")),
    }
}

fn parse_c(text: &str) -> Result<RatFunc, String> {
    let c = domain(partition_algebra::ratfunc::parse(text))?;
    if c.is_zero() {
        return Err("c must be nonzero".into());
    }
    Ok(c)
}

fn level_arg(text: &str, cli: &Cli, rep_bound: bool) -> Result<usize, String> {
    let level2 = domain(level2_from_str(text))?;
    let cap = if rep_bound { 6 } else { 8 };
    if !cli.unsafe_bounds && level2 > cap {
        return Err(format!(
            "level {} exceeds the default bound {} (use --unsafe-bounds to override)",
            level2_to_string(level2),
            level2_to_string(cap)
        ));
    }
    Ok(level2)
}

fn print_report(report: &Report, label: &str, json: bool) -> bool {
    if json {
        for entry in &report.entries {
            println!(
                "{}",
                json!({
                    "suite": label,
                    "rule": entry.rule,
                    "instance": entry.instance,
                    "passed": entry.passed,
                    "detail": entry.detail,
                })
            );
        }
        println!(
            "{}",
            json!({
                "suite": label,
                "all_passed": report.all_passed(),
                "instances": report.entries.len(),
            })
        );
    } else {
        for entry in report.failures() {
            println!("{entry}");
        }
        let failed = report.failures().len();
        if failed == 0 {
            println!("{label}: all passed ({} instances)", report.entries.len());
        } else {
            println!(
                "{label}: {failed} of {} instances FAILED",
                report.entries.len()
            );
        }
    }
    report.all_passed()
}

fn run(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Multiply { n, diagrams } => {
            let mut product: Option<AlgElement> = None;
            for text in diagrams {
                let w = domain(SeatPlan::parse(*n, text))?;
                let term = AlgElement::from_diagram(w);
                product = Some(match product {
                    None => term,
                    Some(acc) => domain(acc.mul(&term))?,
                });
            }
            let product = product.expect("at least two diagrams");
            if cli.json {
                println!("{}", element_json(&product));
            } else {
                println!("{product}");
            }
            Ok(0)
        }
        Command::StandardWord { n, diagram } => {
            let w = domain(SeatPlan::parse(*n, diagram))?;
            let word = standard_word(&w);
            if cli.json {
                println!("{}", json!({ "word": word.to_string() }));
            } else {
                println!("{word}");
            }
            Ok(0)
        }
        Command::EvalWord { n, word } => {
            let word = domain(Word::parse(word))?;
            let (diagram, power) = domain(eval_word(&word, *n))?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "power": power, "diagram": diagram_json(&diagram) })
                );
            } else {
                println!("Q^{power} * {diagram}");
            }
            Ok(0)
        }
        Command::Enumerate { n, fixed_last } => {
            let bound = if cli.unsafe_bounds {
                DEFAULT_ENUM_BOUND
            } else {
                4
            };
            let all = domain(enumerate_all_bounded(*n, bound))?;
            let mut count = 0usize;
            for w in all {
                if *fixed_last && !w.has_fixed_last_strand() {
                    continue;
                }
                count += 1;
                if cli.json {
                    println!("{}", diagram_json(&w));
                } else {
                    println!("{w}");
                }
            }
            if !cli.json {
                println!("count = {count}");
            }
            Ok(0)
        }
        Command::Dims { n } => {
            let level2 = level_arg(n, cli, false)?;
            let table = dims(level2);
            let sum: u64 = table.values().map(|d| d * d).sum();
            if cli.json {
                let entries: Vec<serde_json::Value> = table
                    .iter()
                    .map(|(shape, d)| json!({ "shape": shape.to_string(), "dim": d }))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "level": level2_to_string(level2),
                        "dims": entries,
                        "sum_of_squares": sum,
                    })
                );
            } else {
                for (shape, d) in &table {
                    println!("{shape} {d}");
                }
                println!("sum_of_squares = {sum}");
            }
            Ok(0)
        }
        Command::BratteliDot { level } => {
            let level2 = level_arg(level, cli, false)?;
            print!("{}", graph_export(level2));
            Ok(0)
        }
        Command::RepMatrix {
            level,
            shape,
            gen,
            c,
        } => {
            let level2 = level_arg(level, cli, true)?;
            let shape = domain(AugShape::parse(shape))?;
            let c = parse_c(c)?;
            let letter = parse_letter(gen)?;
            let matrix: RepMatrix = match letter {
                Letter::E(i) => domain(e_matrix(i, &shape, level2))?,
                Letter::F(i) => domain(f_matrix(i, &shape, level2))?,
                Letter::S(i) => domain(s_matrix(i, &shape, level2, &c))?,
            };
            let tabs = domain(tableaux(&shape, level2))?;
            if cli.json {
                let entries: Vec<serde_json::Value> = matrix
                    .entries
                    .entries()
                    .filter(|(_, _, v)| !v.is_zero())
                    .map(|(i, j, v)| json!({ "row": i, "col": j, "value": v.render() }))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "level": level2_to_string(level2),
                        "shape": shape.to_string(),
                        "gen": letter.to_string(),
                        "dim": matrix.dim(),
                        "tableaux": tabs.iter().map(|t| t.render()).collect::<Vec<_>>(),
                        "entries": entries,
                    })
                );
            } else {
                print!("{}", matrix.dump(&tabs));
            }
            Ok(0)
        }
        Command::Verify {
            n,
            what,
            c,
            seed,
            sample: sample_size,
        } => {
            let c = parse_c(c)?;
            let level2 = domain(level2_from_str(n))?;
            let strands = level2.div_ceil(2);
            let enum_bound = if cli.unsafe_bounds {
                DEFAULT_ENUM_BOUND
            } else {
                4
            };
            let rep_cap = if cli.unsafe_bounds { 7 } else { 6 };
            let whats: Vec<String> = match what {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => {
                    let mut defaults = Vec::new();
                    if level2 % 2 == 0 && strands >= 2 {
                        defaults.push("diagram-relations".to_string());
                        defaults.push("half-relations".to_string());
                        defaults.push("standard-words".to_string());
                    }
                    if level2 <= rep_cap {
                        defaults.push("rep-relations".to_string());
                    }
                    defaults
                }
            };
            if whats.is_empty() {
                return Err("nothing to verify at this level".into());
            }
            let mut all_ok = true;
            for item in &whats {
                match item.as_str() {
                    "diagram-relations" => {
                        if level2 % 2 != 0 {
                            return Err("diagram-relations needs an integer n".into());
                        }
                        if strands > enum_bound {
                            return Err(format!("n = {strands} exceeds the bound {enum_bound}"));
                        }
                        let report = domain(relation_suite(strands))?;
                        all_ok &= print_report(&report, "diagram-relations", cli.json);
                    }
                    "half-relations" => {
                        if level2 % 2 != 0 {
                            return Err("half-relations needs an integer n".into());
                        }
                        let report = domain(half_relation_suite(strands))?;
                        all_ok &= print_report(&report, "half-relations", cli.json);
                    }
                    "standard-words" => {
                        if level2 % 2 != 0 {
                            return Err("standard-words needs an integer n".into());
                        }
                        let report = standard_word_sweep(strands, enum_bound, *seed, *sample_size)?;
                        all_ok &= print_report(&report, "standard-words", cli.json);
                    }
                    "rep-relations" => {
                        if level2 > rep_cap {
                            return Err(format!(
                                "level {} exceeds the representation bound {}",
                                level2_to_string(level2),
                                level2_to_string(rep_cap)
                            ));
                        }
                        let report = domain(verify_rep_relations(level2, &c))?;
                        all_ok &= print_report(&report, "rep-relations", cli.json);
                    }
                    other => return Err(format!("unknown verification '{other}'")),
                }
            }
            if !cli.json {
                println!("{}", if all_ok { "all passed" } else { "FAILED" });
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Rank { level, q0, c } => {
            let level2 = level_arg(level, cli, true)?;
            let c = parse_c(c)?;
            let q0r = BigRational::from(BigInt::from(*q0));
            let rank = domain(faithfulness_rank(level2, &q0r, &c))?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "level": level2_to_string(level2),
                        "q0": q0,
                        "rank": rank,
                    })
                );
            } else {
                println!("rank = {rank}");
            }
            Ok(0)
        }
        Command::Trace { level, word, c } => {
            let level2 = level_arg(level, cli, true)?;
            let c = parse_c(c)?;
            let word = domain(Word::parse(word))?;
            let traces = domain(trace_of(&word, level2, &c))?;
            for (shape, trace) in &traces {
                if cli.json {
                    println!(
                        "{}",
                        json!({ "shape": shape.to_string(), "trace": trace.render() })
                    );
                } else {
                    println!("{shape}: {trace}");
                }
            }
            Ok(0)
        }
    }
}

/// Round-trip check of the standard words: exhaustive for n ≤ 3, generators
/// plus a seeded sample at larger n.
fn standard_word_sweep(
    n: usize,
    enum_bound: usize,
    seed: u64,
    sample_size: usize,
) -> Result<Report, String> {
    let mut report = Report::default();
    let diagrams: Vec<SeatPlan> = if n <= 3 {
        domain(enumerate_all_bounded(n, enum_bound))?
    } else {
        let mut out = Vec::new();
        for i in 1..n {
            out.push(domain(SeatPlan::generator_s(n, i))?);
            out.push(domain(SeatPlan::generator_f(n, i))?);
        }
        for i in 1..=n {
            out.push(domain(SeatPlan::generator_e(n, i))?);
        }
        out.extend(sample(n, sample_size, seed));
        out
    };
    let total = diagrams.len();
    let mut failed = Vec::new();
    for w in diagrams {
        let word = standard_word(&w);
        match eval_word(&word, n) {
            Ok((diagram, 0)) if diagram == w => {}
            other => failed.push(format!("{w}: {word} evaluates to {other:?}")),
        }
    }
    report.push(ReportEntry {
        rule: "round-trip".to_string(),
        instance: format!("{total} diagrams at n = {n}"),
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            None
        } else {
            Some(failed.join("; "))
        },
    });
    // re-check the word/element route on one generator
    if n >= 2 {
        let fuse = domain(SeatPlan::generator_f(n, 1))?;
        let via_element = domain(word_to_element(&standard_word(&fuse), n))?;
        report.push(ReportEntry {
            rule: "round-trip".to_string(),
            instance: "element of the standard word of f1".to_string(),
            passed: via_element == AlgElement::from_term(fuse, IntPoly::one()),
            detail: None,
        });
    }
    Ok(report)
}
