//! Command-line front end. Exit status: 0 on success, 1 when a check is
//! falsified or a search is unsatisfiable, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use unitfrac::bounds::{check_inequalities, growth_references, rows_to_csv, BoundConfig, DEFAULT_VOSE_C};
use unitfrac::certificate::{certify, check_certificate, Certificate, CertifyOutcome};
use unitfrac::decompose::{anchored_unit, greedy, shortest, AnchoredOutcome, Exclusions};
use unitfrac::enumeration::{enumerate_parallel, summarize_with, EnumConfig, EnumSummary};
use unitfrac::extension::{extend_with_anchor, inject};
use unitfrac::identities::{split_basic, split_composite, telescope_gadget};
use unitfrac::{Decomposition, Error, Fraction};

#[derive(Parser)]
#[command(name = "unitfrac", version, about = "Unit fraction decompositions of 1")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every k-term decomposition of a target.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1", value_parser = parse_fraction)]
        target: Fraction,
        #[arg(long, default_value = "1", value_parser = parse_big)]
        min_denom: BigUint,
    },
    /// F(k), D_k and v(k).
    Summarize {
        #[arg(long)]
        k: usize,
    },
    /// Basic split of n, or the composite split with divisor a.
    Split {
        #[arg(long, value_parser = parse_big)]
        n: BigUint,
        #[arg(long, value_parser = parse_big)]
        a: Option<BigUint>,
    },
    /// Extend a decomposition of 1 by one term, keeping the anchor m.
    Extend {
        #[arg(long, value_parser = parse_list)]
        tuple: List,
        #[arg(long, value_parser = parse_big)]
        m: Option<BigUint>,
    },
    /// Telescoping gadget for the anchor m.
    Telescope {
        #[arg(long)]
        m: u64,
    },
    /// Greedy decomposition of a fraction in (0, 1].
    Decompose {
        #[arg(long, value_parser = parse_fraction)]
        target: Fraction,
        #[arg(long, value_parser = parse_list, default_value = "")]
        exclude: List,
    },
    /// Shortest decomposition of a fraction in (0, 1).
    Shortest {
        #[arg(long, value_parser = parse_fraction)]
        target: Fraction,
        #[arg(long, default_value_t = 4)]
        max_terms: usize,
        #[arg(long, value_parser = parse_list, default_value = "")]
        exclude: List,
    },
    /// Decomposition of 1 containing m within a term budget.
    Anchored {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 41)]
        budget: usize,
    },
    /// Certificate for every m in [from, to].
    Certify {
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long, default_value_t = 432)]
        to: u64,
        #[arg(long, default_value_t = 41)]
        budget: usize,
    },
    /// Re-check a certificate file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Bound table for k = 1..=K.
    Report {
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long = "vose-C", default_value_t = DEFAULT_VOSE_C)]
        vose_c: f64,
    },
}

fn parse_fraction(s: &str) -> Result<Fraction, String> {
    Fraction::from_str(s).map_err(|e| e.to_string())
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    BigUint::from_str(s.trim()).map_err(|_| format!("{s:?} is not a non-negative integer"))
}

#[derive(Clone, Debug)]
struct List(Vec<BigUint>);

/// Comma-separated integers; brackets and spaces are ignored.
fn parse_list(s: &str) -> Result<List, String> {
    s.split(|c: char| c == ',' || c.is_whitespace() || "()[]".contains(c))
        .filter(|t| !t.is_empty())
        .map(parse_big)
        .collect::<Result<_, _>>()
        .map(List)
}

/// What a subcommand produced: the rendered text and whether it succeeded.
struct Output {
    body: String,
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, ok: true }
    }
}

fn strings(d: &[BigUint]) -> Vec<String> {
    d.iter().map(ToString::to_string).collect()
}

fn tuple_text(d: &[BigUint]) -> String {
    format!("({})", strings(d).join(","))
}

/// D_k as JSON numbers while they fit in 64 bits, strings beyond.
fn number_or_string(n: &BigUint) -> Value {
    n.to_u64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string(v).expect("json value")
}

fn decomposition_json(d: &Decomposition) -> Value {
    json!({
        "target": d.target().to_string(),
        "denominators": strings(d.denominators()),
        "terms": d.len(),
        "valid": d.verify().valid,
    })
}

fn render_decomposition(format: Format, d: &Decomposition) -> String {
    match format {
        Format::Json => pretty(&decomposition_json(d)),
        Format::Csv => strings(d.denominators()).join(","),
        Format::Text => d.to_string(),
    }
}

fn summary_json(s: &EnumSummary) -> Value {
    json!({
        "k": s.k,
        "F": s.count,
        "D": s.denominators.iter().map(number_or_string).collect::<Vec<_>>(),
        "v": s.smallest_missing,
    })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let f = cli.format;
    let enum_config = EnumConfig {
        jobs: cli.jobs,
        ..EnumConfig::default()
    };
    let out = match &cli.cmd {
        Cmd::Enumerate { k, target, min_denom } => {
            let sols = enumerate_parallel(target, *k, min_denom, cli.jobs)?;
            let body = match f {
                Format::Json => pretty(&json!({
                    "k": k,
                    "target": target.to_string(),
                    "min_denom": min_denom.to_string(),
                    "count": sols.len(),
                    "solutions": sols.iter().map(|t| strings(t)).collect::<Vec<_>>(),
                })),
                Format::Csv => sols.iter().map(|t| strings(t).join(",")).collect::<Vec<_>>().join("\n"),
                Format::Text => {
                    let mut lines: Vec<String> = sols.iter().map(|t| tuple_text(t)).collect();
                    lines.push(format!("# {} solutions", sols.len()));
                    lines.join("\n")
                }
            };
            Output::ok(body)
        }
        Cmd::Summarize { k } => {
            let s = summarize_with(*k, &enum_config)?;
            let body = match f {
                Format::Json => pretty(&summary_json(&s)),
                Format::Csv => format!(
                    "k,F,|D|,v\n{},{},{},{}",
                    s.k,
                    s.count,
                    s.denominators.len(),
                    s.smallest_missing
                ),
                Format::Text => format!(
                    "k = {}  F = {}  |D| = {}  v = {}\nD = {{{}}}",
                    s.k,
                    s.count,
                    s.denominators.len(),
                    s.smallest_missing,
                    strings(&s.denominators).join(",")
                ),
            };
            Output::ok(body)
        }
        Cmd::Split { n, a } => {
            let s = match a {
                Some(a) => split_composite(n, a)?,
                None => split_basic(n)?,
            };
            let body = match f {
                Format::Json => pretty(&json!({
                    "source": s.source.to_string(),
                    "first": s.first.to_string(),
                    "second": s.second.to_string(),
                    "identity": s.holds(),
                })),
                Format::Csv => format!("{},{},{}", s.source, s.first, s.second),
                Format::Text => format!("1/{} = 1/{} + 1/{}", s.source, s.first, s.second),
            };
            Output { body, ok: s.holds() }
        }
        Cmd::Extend { tuple, m } => {
            let input = Decomposition::from_unsorted(Fraction::one(), tuple.0.clone())?;
            let (branch, output) = match m {
                Some(m) => {
                    let t = extend_with_anchor(&input, m)?;
                    (t.branch.to_string(), t.output)
                }
                None => ("inject".to_string(), inject(&input)?),
            };
            let body = match f {
                Format::Json => pretty(&json!({
                    "branch": branch,
                    "input": strings(input.denominators()),
                    "anchor": m.as_ref().map(ToString::to_string),
                    "output": strings(output.denominators()),
                })),
                Format::Csv => strings(output.denominators()).join(","),
                Format::Text => format!("{} -> {}  [{branch}]", tuple_text(input.denominators()), tuple_text(output.denominators())),
            };
            Output::ok(body)
        }
        Cmd::Telescope { m } => {
            let g = telescope_gadget(*m)?;
            let audit = g.audit();
            let body = match f {
                Format::Json => pretty(&json!({
                    "m": g.anchor_m,
                    "t": g.offset_t,
                    "partition": g.partition.elements(),
                    "terms": strings(&g.terms),
                    "count": g.terms.len(),
                    "sum": g.sum().to_string(),
                    "audit": audit,
                })),
                Format::Csv => strings(&g.terms).join(","),
                Format::Text => {
                    let mut s = format!("m = {}, t = {}, {} terms\n", g.anchor_m, g.offset_t, g.terms.len());
                    for x in &g.terms {
                        s.push_str(&format!("  1/{x}\n"));
                    }
                    s.push_str(&format!("sum = {}\n", g.sum()));
                    s.push_str(&format!(
                        "distinct = {}, all divisible by 3 = {}, m > 432 = {}",
                        audit.distinct, audit.all_divisible_by_3, audit.in_proven_regime
                    ));
                    s
                }
            };
            Output { body, ok: audit.sum_is_reciprocal }
        }
        Cmd::Decompose { target, exclude } => {
            let ex: Exclusions = exclude.0.iter().cloned().collect();
            Output::ok(render_decomposition(f, &greedy(target, &ex)?))
        }
        Cmd::Shortest { target, max_terms, exclude } => {
            let ex: Exclusions = exclude.0.iter().cloned().collect();
            match shortest(target, *max_terms, &ex)? {
                Some(r) => {
                    let refs = target.denom().to_u64().and_then(growth_references);
                    let body = match f {
                        Format::Json => pretty(&json!({
                            "fraction": target.to_string(),
                            "min_terms": r.min_terms,
                            "witness": strings(r.witness.denominators()),
                            "log_b_over_loglog_b": refs.map(|r| r.0),
                            "sqrt_log_b": refs.map(|r| r.1),
                        })),
                        Format::Csv => format!("{},{},{}", target, r.min_terms, strings(r.witness.denominators()).join(" ")),
                        Format::Text => format!("N({}) = {}  witness {}", target, r.min_terms, tuple_text(r.witness.denominators())),
                    };
                    Output::ok(body)
                }
                None => Output {
                    body: format!("unsat: no decomposition of {target} with at most {max_terms} terms"),
                    ok: false,
                },
            }
        }
        Cmd::Anchored { m, budget } => match anchored_unit(*m, *budget)? {
            AnchoredOutcome::Found(r) => {
                let body = match f {
                    Format::Json => {
                        let mut v = decomposition_json(&r.decomposition);
                        v["m"] = json!(r.anchor_m);
                        v["used_gadget"] = json!(r.used_gadget);
                        v["retries"] = json!(r.retries);
                        pretty(&v)
                    }
                    _ => render_decomposition(f, &r.decomposition),
                };
                Output::ok(body)
            }
            AnchoredOutcome::Unsat { anchor_m, reason } => Output {
                body: format!("unsat: m = {anchor_m}: {reason}"),
                ok: false,
            },
        },
        Cmd::Certify { from, to, budget } => match certify(*from, *to, *budget, cli.jobs)? {
            CertifyOutcome::Complete(c) => Output::ok(c.to_json()),
            CertifyOutcome::Failed { unsat } => {
                let lines: Vec<String> = unsat.iter().map(|(m, r)| format!("m = {m}: {r}")).collect();
                Output {
                    body: format!("certification failed for {} anchors\n{}", unsat.len(), lines.join("\n")),
                    ok: false,
                }
            }
        },
        Cmd::Verify { input } => {
            let text = fs::read_to_string(input).map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
            let cert = Certificate::from_json(&text)?;
            let problems = check_certificate(&cert);
            let body = if problems.is_empty() {
                format!("ok: {} entries, budget {}", cert.entries.len(), cert.budget)
            } else {
                problems.join("\n")
            };
            Output {
                body,
                ok: problems.is_empty(),
            }
        }
        Cmd::Report { k, vose_c } => {
            let config = BoundConfig::new(*vose_c)?;
            let summaries = (1..=*k)
                .map(|k| summarize_with(k, &enum_config))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = check_inequalities(&summaries, &config);
            let ok = rows.iter().all(|r| r.holds);
            let body = match f {
                Format::Csv => rows_to_csv(&rows).trim_end().to_string(),
                Format::Json => pretty(&json!({
                    "vose_C": config.vose_constant_c,
                    "c": config.derived_c,
                    "c_conditional_on_C": true,
                    "rows": rows,
                })),
                Format::Text => {
                    let mut s = format!(
                        "c = {:.6e} (conditional on C = {})\n{:>2} {:>8} {:>6} {:>5} {:>12} {:>10}\n",
                        config.derived_c, config.vose_constant_c, "k", "F", "|D|", "v", "e^(ck^2)", "kF+2"
                    );
                    for r in &rows {
                        s.push_str(&format!(
                            "{:>2} {:>8} {:>6} {:>5} {:>12.6} {:>10}{}\n",
                            r.k,
                            r.count,
                            r.d_size,
                            r.exact_v.unwrap_or_default(),
                            r.lower_bound,
                            r.upper_bound.unwrap_or_default(),
                            if r.holds { "" } else { "  FALSIFIED" }
                        ));
                    }
                    s.trim_end().to_string()
                }
            };
            Output { body, ok }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut body = out.body;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &body),
                None => std::io::stdout().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::Domain(_) | Error::ResourceLimit { .. } | Error::Parse(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
