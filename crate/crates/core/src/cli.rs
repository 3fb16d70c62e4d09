//! Command-line driver. [`run`] takes the full argument vector and returns
//! what should be printed together with the exit code, so the binary is a
//! thin wrapper and the behaviour is testable in-process.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::arith::{Int, Rational};
use crate::classify::{classify_pair, enumerate_fibrations, one_singular_list, ClassificationReport};
use crate::construct::{construct_fibration, isotropy_order, isotropy_order_oracle, model_fibration, ConstructionTrace, ModelWeights};
use crate::error::{Error, Result};
use crate::pi1::{base_orbifold, first_homology, presentation};
use crate::recognize::{recognize, LensSpace};
use crate::seifert::{CanonicalForm, SeifertFibration};

#[derive(Debug, Parser)]
#[command(name = "seifert-lens", version, about = "Seifert fibrations of lens spaces")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LensWeights {
    /// Lens space as p,q
    #[arg(long, value_parser = parse_lens, allow_hyphen_values = true)]
    lens: (Int, Int),
    /// Coprime non-zero weights as a,b
    #[arg(long, value_parser = parse_int_pair, allow_hyphen_values = true)]
    weights: (Int, Int),
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the fibration of L(p,q) with prescribed coprime weights
    Construct(LensWeights),
    /// Identify the lens space carrying a fibration
    Recognize { fibration: String },
    /// Canonical form and Euler number
    Normalize { fibration: String },
    /// Decide isomorphism of two fibrations
    Iso { first: String, second: String },
    /// Classify the fibrations of L(p,q) with given coprime multiplicities
    Classify {
        #[arg(long, value_parser = parse_lens, allow_hyphen_values = true)]
        lens: (Int, Int),
        #[arg(long, value_parser = parse_int_pair)]
        pair: (Int, Int),
    },
    /// List all fibrations with multiplicities up to a bound
    Enumerate {
        #[arg(long, value_parser = parse_lens, allow_hyphen_values = true)]
        lens: (Int, Int),
        #[arg(long, default_value_t = 6)]
        max_mult: Int,
    },
    /// List the fibrations with at most one singular fibre
    OneSingular {
        #[arg(long, value_parser = parse_lens, allow_hyphen_values = true)]
        lens: (Int, Int),
        #[arg(long, default_value_t = 10)]
        bound: Int,
    },
    /// Quotient of the weighted circle action on S3 (weights k1,k2)
    Model(LensWeights),
    /// Isotropy order of a regular fibre under the cyclic action (weights k1,k2)
    Isotropy(LensWeights),
    /// Fundamental group presentation
    Pi1 { fibration: String },
    /// First homology group
    Homology { fibration: String },
    /// Parse, validate and echo a fibration in canonical text form
    ParseCheck { fibration: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::Recognize { .. } => "recognize",
            Command::Normalize { .. } => "normalize",
            Command::Iso { .. } => "iso",
            Command::Classify { .. } => "classify",
            Command::Enumerate { .. } => "enumerate",
            Command::OneSingular { .. } => "one-singular",
            Command::Model(_) => "model",
            Command::Isotropy(_) => "isotropy",
            Command::Pi1 { .. } => "pi1",
            Command::Homology { .. } => "homology",
            Command::ParseCheck { .. } => "parse-check",
        }
    }
}

/// Syntax only; coprimality is checked when the command runs so that it
/// reports as a domain error.
fn parse_lens(s: &str) -> std::result::Result<(Int, Int), String> {
    let t = s.trim();
    let inner = t
        .strip_prefix("L(")
        .and_then(|rest| rest.strip_suffix(')'))
        .unwrap_or(t);
    parse_int_pair(inner)
}

fn parse_int_pair(s: &str) -> std::result::Result<(Int, Int), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two integers 'a,b', got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

/// Printed output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Text and structured renderings of one successful command.
struct Report {
    text: String,
    input: Value,
    result: Value,
    trace: Option<Value>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let name = cli.command.name();
    match execute(&cli.command) {
        Ok(report) if cli.json => {
            let mut envelope = json!({
                "command": name,
                "status": "ok",
                "input": report.input,
                "result": report.result,
            });
            if let Some(trace) = report.trace {
                envelope["trace"] = trace;
            }
            Outcome {
                code: 0,
                stdout: format!("{}\n", serde_json::to_string_pretty(&envelope).expect("json values serialize")),
                stderr: String::new(),
            }
        }
        Ok(report) => Outcome {
            code: 0,
            stdout: report.text,
            stderr: String::new(),
        },
        Err(e) => {
            let stderr = if cli.json {
                let envelope = json!({"command": name, "status": "error", "error": e.to_string()});
                format!("{envelope}\n")
            } else {
                format!("error: {e}\n")
            };
            Outcome {
                code: 1,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn read_fibration(arg: &str) -> Result<SeifertFibration> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Syntax {
                pos: 0,
                msg: format!("reading stdin: {e}"),
            })?;
        buf
    } else {
        arg.to_string()
    };
    let f = SeifertFibration::parse(&text)?;
    f.validate()?;
    Ok(f)
}

fn lens_json(l: &LensSpace) -> Value {
    json!({"p": l.p(), "q": l.q(), "text": l.to_string()})
}

fn rational_json(r: Rational) -> Value {
    json!({"num": r.num(), "den": r.den()})
}

fn canonical_json(c: &CanonicalForm) -> Result<Value> {
    Ok(json!({
        "genus": c.genus,
        "b": c.b,
        "pairs": c.pairs.iter().map(|p| [p.alpha, p.beta]).collect::<Vec<_>>(),
        "text": c.to_string(),
        "euler_number": rational_json(c.euler_number()?),
    }))
}

fn trace_json(t: &ConstructionTrace) -> Value {
    json!({
        "u": t.u,
        "alpha": t.alpha,
        "alpha1": t.alpha1,
        "alpha2": t.alpha2,
        "alpha1_prime": t.alpha1_prime,
        "beta1": t.beta1,
        "beta1_prime": t.beta1_prime,
        "beta2": t.beta2,
        "r": t.choice.r,
        "s": t.choice.s,
    })
}

fn trace_text(t: &ConstructionTrace) -> String {
    format!(
        "trace: u={} alpha={} alpha1={} alpha2={} alpha1'={} beta1={} beta1'={} beta2={} r={} s={}",
        t.u, t.alpha, t.alpha1, t.alpha2, t.alpha1_prime, t.beta1, t.beta1_prime, t.beta2, t.choice.r, t.choice.s
    )
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut out = format!(
        "lens: {}\ncase: {}\nclasses: {}\n",
        r.lens,
        r.prediction.case,
        r.classes.len()
    );
    for (i, c) in r.classes.iter().enumerate() {
        let labels: Vec<String> = c.variants.iter().map(char::to_string).collect();
        out += &format!(
            "  [{i}] {}  variants {}  weights {},{}\n",
            c.canonical,
            labels.join(","),
            c.weights.0,
            c.weights.1
        );
    }
    out += &format!("reversing pairs: {}\n", r.reversing_pairs.len());
    for (i, j) in &r.reversing_pairs {
        out += &format!("  [{i}] =* [{j}]\n");
    }
    out
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Construct(LensWeights { lens, weights }) => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let (f, trace) = construct_fibration(lens, weights.0, weights.1)?;
            let canonical = f.normalize()?;
            let base = base_orbifold(&f)?;
            Ok(Report {
                text: format!(
                    "fibration: {f}\ncanonical: {canonical}\nbase: {base}\n{}\n",
                    trace_text(&trace)
                ),
                input: json!({"lens": lens_json(lens), "weights": [weights.0, weights.1]}),
                result: json!({
                    "fibration": f.to_string(),
                    "canonical": canonical_json(&canonical)?,
                    "base_orbifold": base.to_string(),
                }),
                trace: Some(trace_json(&trace)),
            })
        }
        Command::Recognize { fibration } => {
            let f = read_fibration(fibration)?;
            let lens = recognize(&f)?;
            Ok(Report {
                text: format!("{lens}\n"),
                input: json!({"fibration": f.to_string()}),
                result: lens_json(&lens),
                trace: None,
            })
        }
        Command::Normalize { fibration } => {
            let f = read_fibration(fibration)?;
            let canonical = f.normalize()?;
            Ok(Report {
                text: format!("{canonical}\neuler: {}\n", canonical.euler_number()?),
                input: json!({"fibration": f.to_string()}),
                result: canonical_json(&canonical)?,
                trace: None,
            })
        }
        Command::Iso { first, second } => {
            let (f, g) = (read_fibration(first)?, read_fibration(second)?);
            let iso = f.isomorphism_type(&g)?;
            Ok(Report {
                text: format!("{}\n", iso.as_str()),
                input: json!({"first": f.to_string(), "second": g.to_string()}),
                result: json!({"iso": iso.as_str()}),
                trace: None,
            })
        }
        Command::Classify { lens, pair } => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let report = classify_pair(lens, pair.0, pair.1)?;
            let classes = report
                .classes
                .iter()
                .map(|c| {
                    Ok(json!({
                        "canonical": canonical_json(&c.canonical)?,
                        "weights": [c.weights.0, c.weights.1],
                        "variants": c.variants.iter().map(char::to_string).collect::<Vec<_>>(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Report {
                text: classify_text(&report),
                input: json!({"lens": lens_json(lens), "pair": [pair.0, pair.1]}),
                result: json!({
                    "case": report.prediction.case.label(),
                    "classes": classes,
                    "reversing_pairs": report.reversing_pairs,
                    "predicates": {
                        "a_reversing": report.prediction.a_reversing,
                        "b_oriented": report.prediction.b_oriented,
                        "c_reversing": report.prediction.c_reversing,
                    },
                }),
                trace: None,
            })
        }
        Command::Enumerate { lens, max_mult } => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let list = enumerate_fibrations(lens, *max_mult)?;
            let text: String = list.iter().map(|c| format!("{c}\n")).collect();
            Ok(Report {
                text,
                input: json!({"lens": lens_json(lens), "max_mult": max_mult}),
                result: json!({
                    "count": list.len(),
                    "fibrations": list.iter().map(canonical_json).collect::<Result<Vec<_>>>()?,
                }),
                trace: None,
            })
        }
        Command::OneSingular { lens, bound } => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let list = one_singular_list(lens, *bound)?;
            let text: String = list.iter().map(|f| format!("{f}\n")).collect();
            Ok(Report {
                text,
                input: json!({"lens": lens_json(lens), "bound": bound}),
                result: json!({"fibrations": list.iter().map(ToString::to_string).collect::<Vec<_>>()}),
                trace: None,
            })
        }
        Command::Model(LensWeights { lens, weights }) => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let w = ModelWeights::new(weights.0, weights.1)?;
            let f = model_fibration(lens, w)?;
            let u = isotropy_order(lens, w)?;
            let canonical = f.normalize()?;
            Ok(Report {
                text: format!("fibration: {f}\ncanonical: {canonical}\nisotropy: {u}\n"),
                input: json!({"lens": lens_json(lens), "weights": [w.k1(), w.k2()]}),
                result: json!({
                    "fibration": f.to_string(),
                    "canonical": canonical_json(&canonical)?,
                    "isotropy": u,
                }),
                trace: None,
            })
        }
        Command::Isotropy(LensWeights { lens, weights }) => {
            let lens = &LensSpace::new(lens.0, lens.1)?;
            let w = ModelWeights::new(weights.0, weights.1)?;
            let u = isotropy_order(lens, w)?;
            let oracle = isotropy_order_oracle(lens, w)?;
            if u != oracle {
                return Err(Error::Internal(format!("isotropy {u} != lattice count {oracle}")));
            }
            Ok(Report {
                text: format!("{u}\n"),
                input: json!({"lens": lens_json(lens), "weights": [w.k1(), w.k2()]}),
                result: json!({"u": u, "lattice_count": oracle}),
                trace: None,
            })
        }
        Command::Pi1 { fibration } => {
            let f = read_fibration(fibration)?;
            let pres = presentation(&f)?;
            Ok(Report {
                text: format!("{pres}\n"),
                input: json!({"fibration": f.to_string()}),
                result: json!({
                    "generators": pres.generators,
                    "relators": pres.relators.iter().map(|r| pres.render_relator(r)).collect::<Vec<_>>(),
                    "base_orbifold": base_orbifold(&f)?.to_string(),
                }),
                trace: None,
            })
        }
        Command::Homology { fibration } => {
            let f = read_fibration(fibration)?;
            let h = first_homology(&f)?;
            Ok(Report {
                text: format!("{h}\n"),
                input: json!({"fibration": f.to_string()}),
                result: json!({"factors": h.factors(), "text": h.to_string()}),
                trace: None,
            })
        }
        Command::ParseCheck { fibration } => {
            let f = read_fibration(fibration)?;
            Ok(Report {
                text: format!("{f}\n"),
                input: json!({"text": fibration}),
                result: json!({"fibration": f.to_string(), "genus": f.genus, "pairs": f.pairs.iter().map(|p| [p.alpha, p.beta]).collect::<Vec<_>>()}),
                trace: None,
            })
        }
    }
}
