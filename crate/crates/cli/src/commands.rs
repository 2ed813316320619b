use std::fmt::Write as _;
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::json;

use plucker::decomposability::registry::Contraction;
use plucker::decomposability::{
    equation_count, factorize, three_plane_check, ContractionMode, CountedCriterion,
    CriterionRegistry, DecomposableFamily,
};
use plucker::json::{emit_family, emit_multivector, parse_family, parse_multivector};
use plucker::random::{random_nonsimple, random_simple, rng};
use plucker::young::verify_star_star;
use plucker::{Error, Multivector};

use crate::Command;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symbolic,
    Randomized,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub command: Command,
    pub file: Option<PathBuf>,
    pub criterion: String,
    pub all: bool,
    pub k: usize,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub dim: Option<usize>,
    pub grade: Option<usize>,
    pub simple: bool,
    pub nonsimple: bool,
    pub json: bool,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: u8, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_INVARIANT
        };
        Outcome::error(code, e)
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

pub fn run(config: &Config) -> Outcome {
    let result = match config.command {
        Command::Check => check(config),
        Command::Factor => factor(config),
        Command::Count => count(config),
        Command::Dims => dims(config),
        Command::Random => random(config),
        Command::Family => family(config),
    };
    result.unwrap_or_else(|e| e)
}

fn read_input(config: &Config) -> std::result::Result<String, Outcome> {
    match &config.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| {
            Outcome::error(EXIT_INPUT, format!("cannot read {}: {e}", path.display()))
        }),
        None => std::io::read_to_string(std::io::stdin())
            .map_err(|e| Outcome::error(EXIT_INPUT, format!("cannot read stdin: {e}"))),
    }
}

fn read_multivector(config: &Config) -> std::result::Result<Multivector, Outcome> {
    let text = read_input(config)?;
    let p = parse_multivector(&text)?;
    if p.is_dual() {
        return Err(Outcome::error(
            EXIT_INPUT,
            "expected a multivector, found a covector (\"dual\": true)",
        ));
    }
    Ok(p)
}

fn dim_and_grade(config: &Config) -> std::result::Result<(usize, usize), Outcome> {
    match (config.dim, config.grade) {
        (Some(n), Some(s)) if n >= 1 && s <= n => Ok((n, s)),
        (Some(n), Some(s)) => Err(Outcome::error(
            EXIT_INPUT,
            format!("need 0 <= grade <= dimension and dimension >= 1, got --dim {n} --grade {s}"),
        )),
        _ => Err(Outcome::error(EXIT_INPUT, "--dim and --grade are required")),
    }
}

fn contraction_mode(config: &Config) -> ContractionMode {
    match config.mode {
        Mode::Symbolic => ContractionMode::Symbolic,
        Mode::Randomized => ContractionMode::Randomized {
            trials: config.trials,
            seed: config.seed,
            bound: config.bound,
        },
    }
}

fn check(config: &Config) -> CmdResult {
    let p = read_multivector(config)?;
    let mode = contraction_mode(config);
    let mut registry = CriterionRegistry::with_defaults(mode);
    registry.register(Box::new(Contraction { k: config.k, mode }));

    let names: Vec<&str> = if config.all || config.criterion == "all" {
        registry.names()
    } else {
        match registry.get(&config.criterion) {
            Some(c) => vec![c.name()],
            None => {
                return Err(Outcome::error(
                    EXIT_INPUT,
                    format!(
                        "unknown criterion {:?}; choose one of: all, {}",
                        config.criterion,
                        registry.names().join(", ")
                    ),
                ))
            }
        }
    };
    let reports = names
        .iter()
        .map(|name| registry.evaluate(name, &p))
        .collect::<plucker::Result<Vec<_>>>()?;

    let simple = reports.iter().all(|r| r.verdict);
    let agree = reports.iter().all(|r| r.verdict == reports[0].verdict);
    let mut out = String::new();
    if config.json {
        let value = json!({ "simple": simple, "agree": agree, "reports": reports });
        out = serde_json::to_string_pretty(&value).expect("serializable");
        out.push('\n');
    } else {
        for r in &reports {
            writeln!(out, "{r}").unwrap();
        }
    }
    if config.all && !agree {
        return Err(Outcome {
            code: EXIT_INVARIANT,
            stdout: out,
            stderr: "error: criteria disagree\n".into(),
        });
    }
    Ok(Outcome::ok(if simple { EXIT_OK } else { EXIT_FAIL }, out))
}

fn factor(config: &Config) -> CmdResult {
    let p = read_multivector(config)?;
    let (n, s) = (p.dim(), p.grade());
    if s == 0 {
        return Err(Outcome::error(EXIT_INPUT, "a scalar has no vector factors"));
    }
    let factors = if p.is_zero() {
        // 0 = 0 ∧ e_1 ∧ … ∧ e_{s−1}
        let mut f = vec![Multivector::zero(n, 1, false)];
        f.extend((1..s).map(|i| Multivector::basis(n, &[i]).expect("index in range")));
        f
    } else {
        match factorize(&p) {
            Some(f) => f,
            None => return Ok(Outcome::ok(EXIT_FAIL, "not simple\n".into())),
        }
    };
    Ok(Outcome::ok(EXIT_OK, emit_family(&factors)))
}

fn count(config: &Config) -> CmdResult {
    let (n, s) = dim_and_grade(config)?;
    let counts = CountedCriterion::ALL
        .iter()
        .map(|&c| Ok((c.name(), equation_count(n, s, c)?)))
        .collect::<plucker::Result<Vec<_>>>()?;
    let mut out = String::new();
    if config.json {
        let map: serde_json::Map<String, serde_json::Value> = counts
            .iter()
            .map(|(name, v)| (name.to_string(), json!(v)))
            .collect();
        let value = json!({ "dim": n, "grade": s, "counts": map });
        out = serde_json::to_string_pretty(&value).expect("serializable");
        out.push('\n');
    } else {
        write!(out, "{:>4} {:>4}", "n", "s").unwrap();
        for (name, _) in &counts {
            write!(out, " {name:>14}").unwrap();
        }
        write!(out, "\n{n:>4} {s:>4}").unwrap();
        for (_, v) in &counts {
            write!(out, " {v:>14}").unwrap();
        }
        out.push('\n');
    }
    Ok(Outcome::ok(EXIT_OK, out))
}

fn dims(config: &Config) -> CmdResult {
    let (n, s) = dim_and_grade(config)?;
    let report = verify_star_star(n, s)?;
    let passed = report.passed();
    let mut out = String::new();
    if config.json {
        let value = json!({ "passed": passed, "report": report });
        out = serde_json::to_string_pretty(&value).expect("serializable");
        out.push('\n');
    } else {
        writeln!(out, "n={n} s={s}").unwrap();
        for (shape, dim) in &report.components {
            writeln!(out, "{:<10} {dim}", shape.to_string()).unwrap();
        }
        for id in &report.identities {
            writeln!(
                out,
                "{:<12} {} == {}  {}",
                id.name,
                id.lhs,
                id.rhs,
                if id.holds() { "PASS" } else { "FAIL" }
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(if passed { EXIT_OK } else { EXIT_FAIL }, out))
}

fn random(config: &Config) -> CmdResult {
    let (n, s) = dim_and_grade(config)?;
    if config.simple == config.nonsimple {
        return Err(Outcome::error(
            EXIT_INPUT,
            "pass exactly one of --simple and --nonsimple",
        ));
    }
    let mut g = rng(config.seed);
    let p = if config.simple {
        random_simple(&mut g, n, s, config.bound)?
    } else {
        random_nonsimple(&mut g, n, s, config.bound)?
    };
    let text = emit_multivector(&p);
    match &config.file {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| {
                Outcome::error(EXIT_INPUT, format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome::ok(EXIT_OK, String::new()))
        }
        None => Ok(Outcome::ok(EXIT_OK, text)),
    }
}

fn family(config: &Config) -> CmdResult {
    let text = read_input(config)?;
    let members = parse_family(&text)?;
    let family = DecomposableFamily::new(members)?;
    let report = three_plane_check(&family)?;
    let out = if config.json {
        let mut s = serde_json::to_string_pretty(&report).expect("serializable");
        s.push('\n');
        s
    } else {
        format!(
            "{} grade={} span_dim={} intersection_dim={}\n",
            report.branch, report.grade, report.span_dim, report.intersection_dim
        )
    };
    Ok(Outcome::ok(EXIT_OK, out))
}
