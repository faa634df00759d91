//! `detcalc`: verify catalogued determinant identities, evaluate single
//! instances, guess product formulas and inspect Hankel determinants.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use detcalc::catalog::{self, Params, Status, VerifyOptions, VerifyReport, WORKFLOWS};
use detcalc::exactnum::{int, parse_rational, parse_rational_list};
use detcalc::guess::{rate_guess, GuessExpr, MAX_LEVEL};
use detcalc::hankel::{hankel_det, heilermann_product, jfraction_from_moments, named_sequence, terms_needed, MomentSeq};
use detcalc::linalg::{det, Strategy};
use detcalc::{Error, MatrixQ, Rational};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(name = "detcalc", version, about = "Exact determinant evaluation and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on seeded random parameters.
    Verify(VerifyArgs),
    /// Evaluate one determinant and its closed form.
    Eval(EvalArgs),
    /// Guess a nested product formula for a sequence a_1, a_2, ...
    Guess(GuessArgs),
    /// Hankel determinants, J-fraction and Heilermann cross-check.
    Hankel(HankelArgs),
    /// List the known identity ids.
    List(OutputArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id, or `all`. May be repeated.
    #[arg(long, required = true)]
    id: Vec<String>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on the matrix order.
    #[arg(long)]
    max_n: Option<usize>,
    /// Record per-trial wall-clock time (reports are then not reproducible).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EvalArgs {
    /// Registry id; parameters come from --param.
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    id: Option<String>,
    /// `name=value` with value a rational, `a,b,...` list or `r1;r2` table.
    #[arg(long = "param", short = 'p')]
    params: Vec<String>,
    /// Explicit matrix, rows separated by `;`.
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long, default_value = "bareiss")]
    strategy: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GuessArgs {
    /// Comma separated terms a_1, a_2, ...
    terms: String,
    #[arg(long, default_value_t = MAX_LEVEL)]
    max_level: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HankelArgs {
    /// bernoulli, euler, bell, hermite, catalan or custom:t0,t1,...
    #[arg(long)]
    seq: String,
    #[arg(long, default_value_t = 0)]
    offset: usize,
    #[arg(long)]
    n: usize,
    /// Argument of the Bell and Hermite polynomials.
    #[arg(long, default_value = "1")]
    x: String,
    #[command(flatten)]
    output: OutputArgs,
}

/// Text and JSON renderings of one command's result.
struct Rendered {
    text: String,
    json: Value,
}

fn emit(out: &OutputArgs, r: &Rendered) -> Result<(), u8> {
    let body = match out.format {
        Format::Text => r.text.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r.json).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    match &out.out {
        Some(path) => fs::write(path, body).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            USAGE
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn usage(e: impl std::fmt::Display) -> u8 {
    eprintln!("error: {e}");
    USAGE
}

fn code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::UnknownId(_) => USAGE,
        _ => DEGENERATE,
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8, u8> {
    let ids: Vec<String> = if a.id.iter().any(|i| i == "all") {
        catalog::all_ids().into_iter().map(String::from).collect()
    } else {
        a.id.clone()
    };
    let known = catalog::all_ids();
    if let Some(bad) = ids.iter().find(|i| !known.contains(&i.as_str())) {
        return Err(usage(Error::UnknownId(bad.clone())));
    }
    let opts = VerifyOptions { trials: a.trials as usize, seed: a.seed, max_n: a.max_n, timing: a.timings };
    let reports: Vec<VerifyReport> =
        ids.iter().map(|id| catalog::verify_any(id, &opts)).collect::<Result<_, _>>().map_err(usage)?;
    let ok = reports.iter().all(VerifyReport::overall);
    let passed = reports.iter().filter(|r| r.overall()).count();
    let mut text: String = reports.iter().map(|r| r.summary() + "\n").collect();
    text.push_str(&format!("{passed}/{} identities passed\n", reports.len()));
    let json = json!({
        "command": "verify",
        "seed": a.seed,
        "trials": a.trials,
        "max_n": a.max_n,
        "reports": reports.iter().map(VerifyReport::to_json).collect::<Vec<_>>(),
        "overall": if ok { "pass" } else { "fail" },
    });
    emit(&a.output, &Rendered { text, json })?;
    Ok(if ok { PASS } else { FAIL })
}

fn parse_matrix(s: &str) -> Result<MatrixQ, Error> {
    let rows = s.split(';').filter(|r| !r.trim().is_empty()).map(parse_rational_list).collect::<Result<Vec<_>, _>>()?;
    MatrixQ::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
}

fn cmd_eval(a: &EvalArgs) -> Result<u8, u8> {
    let strategy: Strategy = a.strategy.parse().map_err(usage)?;
    if let Some(m) = &a.matrix {
        let m = parse_matrix(m).map_err(usage)?;
        let d = det(&m, strategy).map_err(|e| {
            eprintln!("error: {e}");
            code_for(&e)
        })?;
        let text = format!("det = {d}\n");
        emit(&a.output, &Rendered { text, json: json!({ "command": "eval", "det": d.to_string() }) })?;
        return Ok(PASS);
    }
    let id = a.id.as_deref().expect("clap requires --id or --matrix");
    let rec = catalog::lookup(id).map_err(usage)?;
    if !rec.is_det() {
        return Err(usage(format!("`{id}` is a structural check; use `verify --id {id}`")));
    }
    let mut p = Params::new(rec.max_n);
    for s in &a.params {
        p.parse_assignment(s).map_err(usage)?;
    }
    let sides = (|| -> Result<(Rational, Rational), Error> {
        let m = rec.build(&p)?;
        Ok((det(&m, strategy)?, rec.closed_form(&p)?))
    })();
    let (l, r) = sides.map_err(|e| {
        eprintln!("error: {e}");
        code_for(&e)
    })?;
    let pass = l == r;
    let text = format!("{id} at {}\ndet = {l}\nclosed form = {r}\n{}\n", p.to_json(), if pass { "equal" } else { "DIFFER" });
    let json = json!({
        "command": "eval",
        "id": id,
        "params": p.to_json(),
        "strategy": strategy.name(),
        "lhs": l.to_string(),
        "rhs": r.to_string(),
        "pass": pass,
    });
    emit(&a.output, &Rendered { text, json })?;
    Ok(if pass { PASS } else { FAIL })
}

fn cmd_guess(a: &GuessArgs) -> Result<u8, u8> {
    let terms = parse_rational_list(&a.terms).map_err(usage)?;
    if terms.is_empty() {
        return Err(usage("no terms given"));
    }
    let res = rate_guess(&terms, a.max_level);
    let list = |g: &[GuessExpr]| g.iter().map(GuessExpr::to_json).collect::<Vec<_>>();
    let mut text = String::new();
    for g in &res.guesses {
        text.push_str(&g.render());
        text.push('\n');
    }
    if res.guesses.is_empty() && res.accepted() {
        for (label, gs) in [("odd n", &res.odd), ("even n", &res.even)] {
            for g in gs {
                text.push_str(&format!("{label}: {}\n", g.render()));
            }
        }
    }
    if !res.accepted() {
        text.push_str("no product-form guess\n");
    }
    let json = json!({
        "command": "guess",
        "terms": terms.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "accepted": res.accepted(),
        "guesses": list(&res.guesses),
        "odd": list(&res.odd),
        "even": list(&res.even),
        "blocked_at": res.blocked_at,
    });
    emit(&a.output, &Rendered { text, json })?;
    Ok(if res.accepted() { PASS } else { FAIL })
}

fn cmd_hankel(a: &HankelArgs) -> Result<u8, u8> {
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let x = parse_rational(&a.x).map_err(usage)?;
    let seq = match a.seq.strip_prefix("custom:") {
        Some(list) => MomentSeq::from(parse_rational_list(list).map_err(usage)?),
        None => named_sequence(&a.seq, terms_needed(a.n, a.offset), &x).map_err(usage)?,
    };
    let mut text = String::new();
    let mut dets = Vec::with_capacity(a.n);
    for k in 1..=a.n {
        let d = hankel_det(&seq, k, a.offset).map_err(usage)?;
        text.push_str(&format!("H_{k} = {d}\n"));
        dets.push(d);
    }
    let mut json = json!({
        "command": "hankel",
        "seq": a.seq,
        "offset": a.offset,
        "n": a.n,
        "dets": dets.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if let Some(k) = dets.iter().position(|d| d == &int(0)) {
        text.push_str(&format!("degenerate: H_{} vanishes, no J-fraction\n", k + 1));
        json["degenerate"] = json!(k + 1);
        emit(&a.output, &Rendered { text, json })?;
        return Ok(DEGENERATE);
    }
    let shifted = MomentSeq::from(seq.values[a.offset..].to_vec());
    let jf = match jfraction_from_moments(&shifted, a.n - 1) {
        Ok(jf) => jf,
        Err(e) => {
            let code = code_for(&e);
            text.push_str(&format!("no J-fraction: {e}\n"));
            json["error"] = json!(e.to_string());
            emit(&a.output, &Rendered { text, json })?;
            return Ok(if code == DEGENERATE { code } else { USAGE });
        }
    };
    text.push_str(&format!("mu0 = {}\n", jf.mu0));
    for (i, v) in jf.a.iter().enumerate() {
        text.push_str(&format!("a_{i} = {v}\n"));
    }
    for (i, v) in jf.b.iter().enumerate() {
        text.push_str(&format!("b_{} = {v}\n", i + 1));
    }
    let mut agree = true;
    let mut heil = Vec::with_capacity(a.n);
    for (k, d) in (1..=a.n).zip(&dets) {
        let h = heilermann_product(&jf, k).map_err(usage)?;
        agree &= &h == d;
        heil.push(h.to_string());
    }
    text.push_str(&format!("Heilermann cross-check: {}\n", if agree { "agree" } else { "DIFFER" }));
    json["mu0"] = json!(jf.mu0.to_string());
    json["a"] = json!(jf.a.iter().map(ToString::to_string).collect::<Vec<_>>());
    json["b"] = json!(jf.b.iter().map(ToString::to_string).collect::<Vec<_>>());
    json["heilermann"] = json!(heil);
    json["agree"] = json!(agree);
    emit(&a.output, &Rendered { text, json })?;
    Ok(if agree { PASS } else { FAIL })
}

fn cmd_list(out: &OutputArgs) -> Result<u8, u8> {
    let mut text = String::new();
    let mut items = Vec::new();
    for r in catalog::registry() {
        let status = match r.status {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
        };
        text.push_str(&format!("{:<20} n {}..={:<3} {:<10} {}\n", r.id, r.min_n, r.max_n, status, r.summary));
        items.push(json!({
            "id": r.id,
            "summary": r.summary,
            "min_n": r.min_n,
            "max_n": r.max_n,
            "status": status,
            "tags": r.tags,
            "params": r.params.iter().map(|(p, _)| *p).collect::<Vec<_>>(),
        }));
    }
    for (id, summary, cap) in WORKFLOWS {
        text.push_str(&format!("{id:<20} n 2..={cap:<3} {:<10} {summary}\n", "theorem"));
        items.push(json!({ "id": id, "summary": summary, "min_n": 2, "max_n": cap, "status": "theorem", "tags": ["method"] }));
    }
    emit(out, &Rendered { text, json: json!({ "command": "list", "identities": items }) })?;
    Ok(PASS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    let r = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Guess(a) => cmd_guess(a),
        Command::Hankel(a) => cmd_hankel(a),
        Command::List(a) => cmd_list(a),
    };
    ExitCode::from(r.unwrap_or_else(|code| code))
}
