//! `qshift`: shifted Q-function combinatorics from the command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (one line on stderr), 2 on
//! usage errors, 3 when a verification subcommand finds a disagreement.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qshift_core::canonical_fill::{canonical_filling, compute_layers};
use qshift_core::classify::{is_strange_oracle, match_family, sweep};
use qshift_core::qpoly::{expand_q, QPolynomial};
use qshift_core::shapes::{SkewShape, StrictPartition};
use qshift_core::tableaux::{decompose, enumerate_amenable, enumerate_gsyt, lr_coeff, Tableau};
use qshift_core::words::{check_amenable, is_amenable_via_restriction, Word};

#[derive(Parser)]
#[command(name = "qshift", version, about = "Schur Q-function combinatorics on shifted skew diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMethod {
    /// The four-clause amenability definition.
    Definition,
    /// The two-letter restriction criterion.
    Restriction,
    /// Run both and compare.
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrangeMethod {
    /// Match the classification families.
    Theorem,
    /// Count amenable fillings exhaustively.
    Oracle,
    /// Run both and compare.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a shifted skew diagram.
    Render {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        /// Canonicalize (drop empty rows, minimal translate) first.
        #[arg(long)]
        canonical: bool,
        /// Also list the diagonals.
        #[arg(long)]
        diagonals: bool,
        #[arg(long)]
        json: bool,
    },
    /// Construct the canonical amenable filling of a shape.
    Fill {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        #[arg(long)]
        json: bool,
    },
    /// Test a word for amenability. Letters are space separated; a trailing
    /// apostrophe marks a letter ("2' 2 1").
    WordCheck {
        word: String,
        #[arg(long, value_enum, default_value = "definition")]
        method: CheckMethod,
        #[arg(long)]
        json: bool,
    },
    /// List tableaux of a shape: all GSYT up to a letter bound, or the
    /// amenable ones.
    Enumerate {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        /// Largest letter value for the full GSYT stream.
        #[arg(
            long,
            value_parser = clap::value_parser!(u32).range(0..=1000),
            conflicts_with = "amenable",
            required_unless_present = "amenable"
        )]
        max_letter: Option<u32>,
        /// Enumerate amenable tableaux (the letter bound is derived).
        #[arg(long)]
        amenable: bool,
        #[arg(long)]
        json: bool,
    },
    /// The shifted Littlewood-Richardson coefficient of a content.
    Coeff {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        #[arg(long, value_parser = parse_partition)]
        nu: StrictPartition,
        #[arg(long)]
        json: bool,
    },
    /// Decompose a skew Q-function into straight ones with multiplicities.
    Decompose {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        #[arg(long)]
        json: bool,
    },
    /// Expand the Q-function of a shape in a fixed number of variables.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1000))]
        vars: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a shape is strange (its skew Q-function is a single
    /// straight Q-function).
    IsStrange {
        #[arg(long, value_parser = parse_partition)]
        outer: StrictPartition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: StrictPartition,
        #[arg(long, value_enum, default_value = "theorem")]
        method: StrangeMethod,
        #[arg(long)]
        json: bool,
    },
    /// Compare the classifier with the filling oracle over every shape class
    /// with bounded outer size. Exits 3 when they disagree.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=24))]
        max_size: u64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Include timing in the output.
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
}

fn parse_partition(text: &str) -> Result<StrictPartition, String> {
    StrictPartition::parse(text).map_err(|e| e.to_string())
}

fn shape_of(outer: &StrictPartition, inner: &StrictPartition) -> Result<SkewShape, qshift_core::Error> {
    SkewShape::new(outer.clone(), inner.clone())
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn cells_json(shape: &SkewShape) -> serde_json::Value {
    json!(shape
        .cells()
        .iter()
        .map(|c| [c.row, c.col])
        .collect::<Vec<_>>())
}

fn word_json(word: &Word) -> serde_json::Value {
    json!(word.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>())
}

fn poly_human(p: &QPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    let terms: Vec<_> = p.terms().collect();
    for &(exp, coef) in terms.iter().rev() {
        let vars: Vec<String> = exp
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if vars.is_empty() {
            parts.push(coef.to_string());
        } else {
            parts.push(format!("{}*{}", coef, vars.join("*")));
        }
    }
    parts.join(" + ")
}

fn tableau_with_layers_json(shape: &SkewShape, tableau: &Tableau) -> serde_json::Value {
    let mut value = tableau.to_json();
    let mut layers = serde_json::Map::new();
    for layer in compute_layers(shape) {
        layers.insert(
            layer.k().to_string(),
            json!(layer.cells().iter().map(|c| [c.row, c.col]).collect::<Vec<_>>()),
        );
    }
    value["layers"] = serde_json::Value::Object(layers);
    value["content"] = json!(tableau.content().counts());
    value
}

fn run(cli: Cli) -> Result<ExitCode, qshift_core::Error> {
    match cli.command {
        Command::Render {
            outer,
            inner,
            canonical,
            diagonals,
            json,
        } => {
            let mut shape = shape_of(&outer, &inner)?;
            if canonical {
                shape = shape.canonicalize();
            }
            if json {
                let mut value = json!({
                    "outer": shape.outer().parts(),
                    "inner": shape.inner().parts(),
                    "cells": cells_json(&shape),
                });
                if diagonals {
                    value["diagonals"] = json!(shape
                        .diagonals()
                        .iter()
                        .map(|d| json!({
                            "offset": d.offset(),
                            "cells": d.cells().iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>());
                }
                print_json(&value);
            } else {
                print!("{}", shape.render_ascii());
                if diagonals {
                    for d in shape.diagonals() {
                        let cells: Vec<String> = d
                            .cells()
                            .iter()
                            .map(|c| format!("({},{})", c.row, c.col))
                            .collect();
                        println!("diagonal {}: {}", d.offset(), cells.join(" "));
                    }
                }
            }
        }
        Command::Fill { outer, inner, json } => {
            let shape = shape_of(&outer, &inner)?;
            let tableau = canonical_filling(&shape);
            if json {
                print_json(&tableau_with_layers_json(&shape, &tableau));
            } else {
                print!("{}", tableau.render_ascii());
                let content: Vec<String> = tableau
                    .content()
                    .counts()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                println!("content: ({})", content.join(","));
                println!("word: {}", tableau.row_word());
            }
        }
        Command::WordCheck { word, method, json } => {
            let word = Word::parse(&word)?;
            let by_definition = check_amenable(&word);
            let by_restriction = is_amenable_via_restriction(&word);
            let (verdict, failure) = match method {
                CheckMethod::Definition => (by_definition.is_none(), by_definition),
                CheckMethod::Restriction => (by_restriction, None),
                CheckMethod::Both => (by_definition.is_none(), by_definition),
            };
            let agree = by_definition.is_none() == by_restriction;
            if json {
                let failure_json = failure.map(|f| {
                    json!({ "k": f.k, "clause": f.clause, "index": f.index })
                });
                let mut value = json!({
                    "word": word_json(&word),
                    "amenable": verdict,
                    "failure": failure_json,
                });
                if method == CheckMethod::Both {
                    value["restriction_agrees"] = json!(agree);
                }
                print_json(&value);
            } else {
                match failure {
                    None if verdict => println!("amenable"),
                    None => println!("not amenable"),
                    Some(f) => println!("not amenable ({f})"),
                }
                if method == CheckMethod::Both {
                    println!(
                        "restriction criterion: {}",
                        if by_restriction { "amenable" } else { "not amenable" }
                    );
                }
            }
            if method == CheckMethod::Both && !agree {
                eprintln!("MISMATCH: definition and restriction disagree on {word}");
                return Ok(ExitCode::from(3));
            }
        }
        Command::Enumerate {
            outer,
            inner,
            max_letter,
            amenable,
            json,
        } => {
            let shape = shape_of(&outer, &inner)?;
            let tableaux: Vec<Tableau> = if amenable {
                enumerate_amenable(&shape).collect()
            } else {
                enumerate_gsyt(&shape, max_letter.unwrap_or(0)).collect()
            };
            if json {
                print_json(&json!({
                    "count": tableaux.len(),
                    "tableaux": tableaux.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                }));
            } else {
                for t in &tableaux {
                    let content: Vec<String> =
                        t.content().counts().iter().map(|c| c.to_string()).collect();
                    println!("{}  content ({})", t.row_word(), content.join(","));
                }
                println!("count: {}", tableaux.len());
            }
        }
        Command::Coeff {
            outer,
            inner,
            nu,
            json,
        } => {
            let coeff = lr_coeff(&outer, &inner, &nu)?;
            if json {
                print_json(&json!({
                    "outer": outer.parts(),
                    "inner": inner.parts(),
                    "nu": nu.parts(),
                    "coeff": coeff,
                }));
            } else {
                println!("{coeff}");
            }
        }
        Command::Decompose { outer, inner, json } => {
            let shape = shape_of(&outer, &inner)?;
            let terms = decompose(&shape)?;
            if json {
                print_json(&json!({
                    "outer": outer.parts(),
                    "inner": inner.parts(),
                    "terms": terms
                        .iter()
                        .map(|(nu, mult)| json!({ "nu": nu.parts(), "mult": mult }))
                        .collect::<Vec<_>>(),
                }));
            } else {
                for (nu, mult) in &terms {
                    println!("{nu}: {mult}");
                }
            }
        }
        Command::Expand {
            outer,
            inner,
            vars,
            json,
        } => {
            let shape = shape_of(&outer, &inner)?;
            let poly = expand_q(&shape, vars as usize);
            if json {
                print_json(&poly.to_json());
            } else {
                println!("{}", poly_human(&poly));
            }
        }
        Command::IsStrange {
            outer,
            inner,
            method,
            json,
        } => {
            let shape = shape_of(&outer, &inner)?;
            let family = (method != StrangeMethod::Oracle).then(|| match_family(&shape));
            let oracle = (method != StrangeMethod::Theorem).then(|| is_strange_oracle(&shape));
            if json {
                let mut value = json!({
                    "outer": outer.parts(),
                    "inner": inner.parts(),
                });
                if let Some(f) = &family {
                    value["theorem"] = json!({
                        "strange": f.is_some(),
                        "family": f.as_ref().map(|f| f.to_string()),
                    });
                }
                if let Some((strange, count)) = oracle {
                    value["oracle"] = json!({ "strange": strange, "count": count });
                }
                print_json(&value);
            } else {
                if let Some(f) = &family {
                    match f {
                        Some(f) => println!("strange (theorem: {f})"),
                        None => println!("not strange (theorem: no family matches)"),
                    }
                }
                if let Some((strange, count)) = oracle {
                    let plural = if count == 1 { "" } else { "s" };
                    if strange {
                        println!("strange (oracle: {count} amenable filling{plural})");
                    } else {
                        println!("not strange (oracle: {count} amenable filling{plural})");
                    }
                }
            }
            if let (Some(f), Some((strange, count))) = (&family, oracle) {
                if f.is_some() != strange {
                    eprintln!(
                        "MISMATCH: theorem says {}, oracle counted {count}",
                        if f.is_some() { "strange" } else { "not strange" },
                    );
                    return Ok(ExitCode::from(3));
                }
            }
        }
        Command::Sweep {
            max_size,
            jobs,
            verbose,
            json,
        } => {
            let report = sweep(max_size as usize, jobs);
            if json {
                print_json(&report.to_json(verbose));
            } else {
                println!("classes tested: {}", report.shapes_tested);
                println!("raw pairs: {}", report.raw_pairs);
                println!("strange by theorem: {}", report.strange_by_theorem);
                println!("strange by oracle: {}", report.strange_by_oracle);
                println!("mismatches: {}", report.mismatches.len());
                for m in &report.mismatches {
                    println!(
                        "  {}/{}: theorem={} oracle_count={}",
                        m.outer, m.inner, m.theorem, m.oracle_count
                    );
                }
                if verbose {
                    println!("elapsed: {:?}", report.elapsed);
                }
            }
            if !report.is_clean() {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
