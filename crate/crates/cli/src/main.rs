//! `salem` — classify Salem polynomials, decide torus realizability with
//! explicit witnesses, and check K3 realizability conditions.
//!
//! Exit codes: 0 for affirmative verdicts, 2 when the computation
//! succeeded but the verdict is negative (not Salem, not realizable,
//! conditions fail, verification failed), 1 for input errors.

mod parse;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use num_rational::BigRational;

use salem_core::k3::{k3_classify_tol, verify_k3_mechanics};
use salem_core::lattice::{is_isometry, signature, IsometryFile};
use salem_core::poly::trace_poly;
use salem_core::salem::{classify_salem_tol, enumerate_salem, entropy};
use salem_core::scalar::{default_tol, rat_to_f64};
use salem_core::torus::{decide_torus_tol, verify_witness, WitnessFile, WITNESS_SCHEMA};
use salem_core::Error as CoreError;

use report::*;

#[derive(Parser)]
#[command(
    name = "salem",
    version,
    about = "Salem polynomials, torus-automorphism entropies, and K3 realizability"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit the machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,
    /// Bracket tolerance: "1/1000000", "1e-12", "0.001"
    #[arg(long, global = true, value_name = "RATIONAL")]
    tol: Option<String>,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a polynomial: Salem or not, λ bracket, entropy
    Classify { poly: String },
    /// Decide torus realizability and construct the witness
    Torus { poly: String },
    /// Evaluate the K3-surface realizability conditions
    K3 { poly: String },
    /// Entropy log λ of a Salem polynomial
    Entropy { poly: String },
    /// Trace polynomial R with t^(d/2)·R(t + 1/t) = S(t)
    Trace { poly: String },
    /// Enumerate Salem polynomials of a degree with bounded coefficients
    Enumerate {
        /// Even degree between 2 and 22
        #[arg(long)]
        degree: usize,
        /// Free coefficients range over [-bound, bound]
        #[arg(long)]
        bound: u32,
    },
    /// Re-verify a witness document or a gram+matrix isometry document
    Verify { file: PathBuf },
}

struct CommandOutput {
    command: &'static str,
    input: serde_json::Value,
    result: serde_json::Value,
    text: String,
    affirmative: bool,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                0
            } else {
                1
            };
        }
    };
    let tol = match &cli.tol {
        Some(t) => match parse::parse_tol(t) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e:#}");
                return 1;
            }
        },
        None => default_tol(),
    };
    let started = Instant::now();
    let out = match execute(&cli.cmd, &tol) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 1;
        }
    };
    let rendered = if cli.json {
        let envelope = Envelope {
            schema: SCHEMA,
            version: VERSION,
            command: out.command.to_string(),
            input: out.input,
            result: out.result,
            timing_ms: started.elapsed().as_millis(),
        };
        let mut s = serde_json::to_string_pretty(&envelope).expect("schema types serialize");
        s.push('\n');
        s
    } else {
        out.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{rendered}"),
    }
    if out.affirmative {
        0
    } else {
        2
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("schema types serialize")
}

fn execute(cmd: &Cmd, tol: &BigRational) -> Result<CommandOutput> {
    match cmd {
        Cmd::Classify { poly } => cmd_classify(poly, tol),
        Cmd::Torus { poly } => cmd_torus(poly, tol),
        Cmd::K3 { poly } => cmd_k3(poly, tol),
        Cmd::Entropy { poly } => cmd_entropy(poly, tol),
        Cmd::Trace { poly } => cmd_trace(poly),
        Cmd::Enumerate { degree, bound } => cmd_enumerate(*degree, *bound),
        Cmd::Verify { file } => cmd_verify(file, tol),
    }
}

fn poly_input(text: &str) -> serde_json::Value {
    serde_json::json!({ "poly": text })
}

fn cmd_classify(text: &str, tol: &BigRational) -> Result<CommandOutput> {
    let p = parse::parse_poly(text)?;
    let c = classify_salem_tol(&p, tol);
    let ent = if c.is_salem {
        let e = entropy(&p, tol).map_err(|e| anyhow!("{e}"))?;
        Some(EntropyJson { value: e.value, error_bound: e.error_bound })
    } else {
        None
    };
    let result = classify_result(&c, ent);
    Ok(CommandOutput {
        command: "classify",
        input: poly_input(text),
        text: classify_text(&result),
        affirmative: c.is_salem,
        result: to_value(&result),
    })
}

fn cmd_torus(text: &str, tol: &BigRational) -> Result<CommandOutput> {
    let p = parse::parse_poly(text)?;
    let (result, affirmative) = match decide_torus_tol(&p, tol) {
        Ok(decision) => {
            let realizable = decision.realizable();
            (torus_result(&decision)?, realizable)
        }
        Err(CoreError::NotSalem(reason)) => (torus_not_salem(&p, &reason), false),
        Err(e) => return Err(anyhow!("{e}")),
    };
    Ok(CommandOutput {
        command: "torus",
        input: poly_input(text),
        text: torus_text(&result),
        affirmative,
        result: to_value(&result),
    })
}

fn cmd_k3(text: &str, tol: &BigRational) -> Result<CommandOutput> {
    let p = parse::parse_poly(text)?;
    let (result, affirmative) = match k3_classify_tol(&p, tol) {
        Ok(rep) => {
            let ok = rep.verdict.realizable();
            (k3_result(&p, &rep), ok)
        }
        Err(CoreError::NotSalem(reason)) => (k3_not_salem(&p, &reason), false),
        Err(e) => return Err(anyhow!("{e}")),
    };
    Ok(CommandOutput {
        command: "k3",
        input: poly_input(text),
        text: k3_text(&result),
        affirmative,
        result: to_value(&result),
    })
}

fn cmd_entropy(text: &str, tol: &BigRational) -> Result<CommandOutput> {
    let p = parse::parse_poly(text)?;
    let (result, affirmative) = match entropy(&p, tol) {
        Ok(e) => (
            EntropyResult {
                poly: p.to_string(),
                is_salem: true,
                salem_reason: None,
                lambda: Some(lambda_json(&e.lambda)),
                entropy: Some(EntropyJson { value: e.value, error_bound: e.error_bound }),
            },
            true,
        ),
        Err(CoreError::NotSalem(reason)) => (
            EntropyResult {
                poly: p.to_string(),
                is_salem: false,
                salem_reason: Some(reason),
                lambda: None,
                entropy: None,
            },
            false,
        ),
        Err(e) => return Err(anyhow!("{e}")),
    };
    Ok(CommandOutput {
        command: "entropy",
        input: poly_input(text),
        text: entropy_text(&result),
        affirmative,
        result: to_value(&result),
    })
}

fn cmd_trace(text: &str) -> Result<CommandOutput> {
    let p = parse::parse_poly(text)?;
    let r = trace_poly(&p).map_err(|e| anyhow!("{e}"))?;
    let result = trace_result(&p, &r);
    Ok(CommandOutput {
        command: "trace",
        input: poly_input(text),
        text: trace_text(&result),
        affirmative: true,
        result: to_value(&result),
    })
}

fn cmd_enumerate(degree: usize, bound: u32) -> Result<CommandOutput> {
    let found = enumerate_salem(degree, bound).map_err(|e| anyhow!("{e}"))?;
    let items: Vec<EnumItem> = found
        .iter()
        .map(|c| {
            let lam = c.lambda.as_ref().expect("salem implies lambda");
            EnumItem {
                poly: c.input.to_string(),
                coeffs_desc: coeffs_desc(&c.input),
                lambda: lambda_json(lam),
                entropy: rat_to_f64(&lam.midpoint()).ln(),
            }
        })
        .collect();
    let result = EnumerateResult { degree, bound, count: items.len(), items };
    Ok(CommandOutput {
        command: "enumerate",
        input: serde_json::json!({ "degree": degree, "bound": bound }),
        text: enumerate_text(&result),
        affirmative: true,
        result: to_value(&result),
    })
}

fn cmd_verify(file: &PathBuf, tol: &BigRational) -> Result<CommandOutput> {
    let raw = std::fs::read_to_string(file)
        .with_context(|| format!("cannot read {}", file.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&raw).with_context(|| format!("{} is not JSON", file.display()))?;

    // accept a bare witness document, a CLI report embedding one, or a
    // gram+matrix isometry document
    let witness_value = if value.get("schema").and_then(|s| s.as_str()) == Some(WITNESS_SCHEMA) {
        Some(value.clone())
    } else {
        value.pointer("/result/witness").filter(|w| !w.is_null()).cloned()
    };

    let result = if let Some(wv) = witness_value {
        let wf: WitnessFile = serde_json::from_value(wv).context("malformed witness document")?;
        let w = wf.to_witness().map_err(|e| anyhow!("{e}"))?;
        let rep = verify_witness(&w);
        VerifyResult {
            kind: "witness".into(),
            all_pass: rep.all_pass(),
            checks: witness_checks(&rep),
            salem_core: Some(w.s.to_string()),
            ambient_signature: None,
            eigenspaces: None,
            note: None,
        }
    } else if value.get("gram").is_some() {
        let isf: IsometryFile =
            serde_json::from_value(value).context("malformed isometry document")?;
        let (g, m) = isf.to_parts().map_err(|e| anyhow!("{e}"))?;
        let iso = is_isometry(&m, &g).map_err(|e| anyhow!("{e}"))?;
        let mut checks = vec![CheckJson { name: "matrix is an isometry of the form".into(), pass: iso }];
        if !iso {
            VerifyResult {
                kind: "isometry".into(),
                all_pass: false,
                checks,
                salem_core: None,
                ambient_signature: None,
                eigenspaces: None,
                note: None,
            }
        } else {
            match verify_k3_mechanics(&m, &g, tol) {
                Ok(rep) => {
                    for (name, pass) in rep.checks() {
                        checks.push(CheckJson { name: name.into(), pass });
                    }
                    let amb = rep.ambient_signature;
                    let all = rep.all_pass();
                    VerifyResult {
                        kind: "isometry".into(),
                        all_pass: all,
                        checks,
                        salem_core: Some(rep.salem_core.to_string()),
                        ambient_signature: Some((amb.pos, amb.neg, amb.zero)),
                        eigenspaces: Some(eigen_json(&rep.eigenspaces)),
                        note: None,
                    }
                }
                Err(CoreError::NotSalem(reason)) => {
                    let sig = signature(&g).map_err(|e| anyhow!("{e}"))?;
                    VerifyResult {
                        kind: "isometry".into(),
                        all_pass: false,
                        checks,
                        salem_core: None,
                        ambient_signature: Some((sig.pos, sig.neg, sig.zero)),
                        eigenspaces: None,
                        note: Some(format!("extension mechanics not applicable: {reason}")),
                    }
                }
                Err(e) => return Err(anyhow!("{e}")),
            }
        }
    } else {
        bail!("unrecognized file: expected a torus witness or a gram+matrix document");
    };

    let affirmative = result.all_pass;
    Ok(CommandOutput {
        command: "verify",
        input: serde_json::json!({ "file": file.display().to_string() }),
        text: verify_text(&result),
        affirmative,
        result: to_value(&result),
    })
}
