//! Command-line front end.
//!
//! Exit status: 0 when the verdict is affirmative, 1 when it is negative
//! (a certificate is printed), 2 on usage, input or arity errors, 3 when an
//! internal consistency check fails.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use tribasis::basis::{classify, detected_permutation};
use tribasis::family_file::{format_family, read_family, write_family};
use tribasis::logic::{
    a_consequence, axioms, oneset_grid_check, parse, theory_equal, theta_member, Formula, Separation,
    TheoryCertificate,
};
use tribasis::props::property_report;
use tribasis::sample::{sample_csv, sample_rows};
use tribasis::{canonical_basis, Error, FuzzyFamily, Rational, Result, Verdict};

#[derive(Parser)]
#[command(name = "tribasis", version, about = "Exact analysis of piecewise-linear fuzzy partitions")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every single-set and family property with witnesses.
    Check { file: PathBuf },
    /// Classify a family as a (pseudo-)triangular basis by three routes.
    Classify { file: PathBuf },
    /// Print the axiom set in n variables, one formula per line.
    Axioms { n: usize },
    /// Decide whether a formula is true at every point realised by the family.
    Member { file: PathBuf, formula: String },
    /// Decide whether a formula follows from the axiom set in n variables.
    Consequence { formula: String, n: usize },
    /// Decide whether the theory of the family equals the closure of the axiom set.
    TheoryEq {
        file: PathBuf,
        /// Relabel members along the detected path order first.
        #[arg(long)]
        relabel: bool,
    },
    /// Check on the grid with step 1/D that the axioms hold exactly on the path.
    Oneset { n: usize, d: usize },
    /// Write the canonical triangular basis with n members.
    Canon {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a formula at a point of [0,1]^n.
    Eval {
        formula: String,
        /// Comma-separated rationals, e.g. 1/4,3/4.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Sample the family at K+1 equally spaced points as CSV.
    Sample {
        file: PathBuf,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Outcome {
    affirmative: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn new(affirmative: bool, text: String, json: Value) -> Self {
        Outcome { affirmative, text, json }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable report"));
            } else if !out.text.is_empty() {
                print!("{}", out.text);
                if !out.text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(if out.affirmative { 0 } else { 1 })
        }
        Err(e @ Error::Internal(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { file } => check(&read_family(file)?),
        Command::Classify { file } => classify_cmd(&read_family(file)?),
        Command::Axioms { n } => axioms_cmd(n),
        Command::Member { file, formula } => member(&read_family(file)?, &parse(&formula)?),
        Command::Consequence { formula, n } => consequence(&parse(&formula)?, n),
        Command::TheoryEq { file, relabel } => theory_eq(&read_family(file)?, relabel),
        Command::Oneset { n, d } => oneset(n, d),
        Command::Canon { n, out } => canon(n, out),
        Command::Eval { formula, at } => eval(&parse(&formula)?, &at),
        Command::Sample { file, points, out } => sample(&read_family(file)?, points, out),
    }
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serialisable report")
}

/// Flattens a JSON value into `key = value` text.
fn render(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("({})", items.iter().map(render).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Object(_) => format!("{k} = {{{}}}", render(v)),
                _ => format!("{k} = {}", render(v)),
            })
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn verdict_line<W: Serialize>(label: &str, v: &Verdict<W>) -> String {
    match v.witness() {
        None => format!("{label}: holds\n"),
        Some(w) => match to_json(w) {
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(render).collect();
                format!("{label}: fails ({})\n", parts.join("; "))
            }
            other => format!("{label}: fails ({})\n", render(&other)),
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(items: &[impl ToString]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn unverified(what: &str) -> Error {
    Error::Internal(format!("{what} did not re-verify"))
}

fn check(p: &FuzzyFamily) -> Result<Outcome> {
    let report = property_report(p);
    if !report.verify(p) {
        return Err(unverified("property report witness"));
    }
    let mut text = String::new();
    text += &verdict_line("ruspini", &report.ruspini);
    text += &verdict_line("2-overlapping", &report.two_overlapping);
    text += &verdict_line("separating", &report.separating);
    for m in &report.members {
        let i = m.index;
        text += &verdict_line(&format!("f{i} normal"), &m.normal);
        text += &verdict_line(&format!("f{i} strongly normal"), &m.strongly_normal);
        text += &verdict_line(&format!("f{i} min-convex"), &m.min_convex);
        text +=
            &verdict_line(&format!("f{i} strictly min-convex on support"), &m.strictly_min_convex_on_support);
    }
    text += &format!("all properties hold: {}\n", yes_no(report.all_hold()));
    let mut json = to_json(&report);
    json["all_hold"] = json!(report.all_hold());
    Ok(Outcome::new(report.all_hold(), text, json))
}

fn classify_cmd(p: &FuzzyFamily) -> Result<Outcome> {
    let c = classify(p)?;
    if !c.verify(p) {
        return Err(unverified("classification witness"));
    }
    let mut text = String::new();
    text += &verdict_line("definition", &c.definition);
    text += &verdict_line("properties", &c.properties);
    text += &verdict_line("geometric", &c.geometric);
    text += &format!("pseudo-triangular: {}\n", yes_no(c.is_pseudo_triangular()));
    text += &format!("triangular: {}\n", yes_no(c.triangular));
    if let Some(s) = &c.structure {
        text += &format!("nodes: {}\n", join(&s.nodes));
        text += &format!("permutation: {}\n", join(&s.permutation));
    }
    let mut json = to_json(&c);
    json["pseudo_triangular"] = json!(c.is_pseudo_triangular());
    Ok(Outcome::new(c.is_pseudo_triangular(), text, json))
}

fn axioms_cmd(n: usize) -> Result<Outcome> {
    let set = axioms(n)?;
    let text: String = set.formulas().map(|f| format!("{f}\n")).collect();
    let json = Value::Array(
        set.axioms
            .iter()
            .map(|a| json!({ "name": a.kind.to_string(), "formula": a.formula.to_string() }))
            .collect(),
    );
    Ok(Outcome::new(true, text, json))
}

fn membership_text(label: &str, verdict: &Verdict<tribasis::logic::MembershipWitness>) -> String {
    match verdict.witness() {
        None => format!("{label}: yes\n"),
        Some(w) => {
            format!("{label}: no\nwitness: x = {}, point = ({}), value = {}\n", w.x, join(&w.point), w.value)
        }
    }
}

fn member(p: &FuzzyFamily, phi: &Formula) -> Result<Outcome> {
    let v = theta_member(phi, p)?;
    if let Some(w) = v.witness() {
        if !w.verify(phi, p)? {
            return Err(unverified("membership witness"));
        }
    }
    let text = membership_text("member", &v);
    let json = json!({ "formula": phi.to_string(), "result": to_json(&v) });
    Ok(Outcome::new(v.holds(), text, json))
}

fn consequence(phi: &Formula, n: usize) -> Result<Outcome> {
    let v = a_consequence(phi, n)?;
    if let Some(w) = v.witness() {
        if !w.verify(phi, &canonical_basis(n)?)? {
            return Err(unverified("consequence witness"));
        }
    }
    let text = membership_text("consequence", &v);
    let json = json!({ "formula": phi.to_string(), "n": n, "result": to_json(&v) });
    Ok(Outcome::new(v.holds(), text, json))
}

fn theory_eq(p: &FuzzyFamily, relabel: bool) -> Result<Outcome> {
    let mut text = String::new();
    let mut permutation = None;
    let q = if relabel {
        match detected_permutation(p) {
            Some(order) => {
                text += &format!("relabelled along path order: {}\n", join(&order));
                let q = p.relabel(&order)?;
                permutation = Some(order);
                q
            }
            None => {
                text += "no path order detected; members kept in the given order\n";
                p.clone()
            }
        }
    } else {
        p.clone()
    };
    let cert = theory_equal(&q)?;
    if !cert.verify(&q)? {
        return Err(unverified("theory certificate"));
    }
    text += &format!("theory equal: {}\n", yes_no(cert.is_equal()));
    match &cert {
        TheoryCertificate::Equal => {}
        TheoryCertificate::NotEqual(Separation::AxiomOutsideTheory { axiom, x, value }) => {
            text += &format!("axiom {} = {} is not in the theory\n", axiom.kind, axiom.formula);
            text += &format!("value {value} < 1 at x = {x}: verified\n");
        }
        TheoryCertificate::NotEqual(Separation::FormulaOutsideClosure {
            vertex,
            max_coordinate,
            k,
            formula,
            ..
        }) => {
            text += &format!("vertex e_{vertex} is not reached: max f{vertex} = {max_coordinate}\n");
            text += &format!("phi_{k} = {formula}\n");
            text += &format!("phi_{k} = 1 at every point of the family: verified\n");
            text += &format!("phi_{k} = 0 at e_{vertex}: verified\n");
        }
    }
    let json = json!({ "permutation": permutation, "certificate": to_json(&cert), "verified": true });
    Ok(Outcome::new(cert.is_equal(), text, json))
}

fn oneset(n: usize, d: usize) -> Result<Outcome> {
    let v = oneset_grid_check(n, d)?;
    let text = match v.witness() {
        None => format!("axioms({n}) hold exactly on the path at grid step 1/{d}: holds\n"),
        Some(pt) => format!("axioms({n}) disagree with the path at ({}): fails\n", join(pt)),
    };
    let json = json!({ "n": n, "d": d, "result": to_json(&v) });
    Ok(Outcome::new(v.holds(), text, json))
}

fn canon(n: usize, out: Option<PathBuf>) -> Result<Outcome> {
    let p = canonical_basis(n)?;
    match out {
        Some(path) => {
            write_family(&path, &p)?;
            let text = format!("wrote {}\n", path.display());
            Ok(Outcome::new(true, text, json!({ "n": n, "written": path.display().to_string() })))
        }
        None => {
            let text = format_family(&p);
            Ok(Outcome::new(true, text.clone(), json!({ "n": n, "family": text })))
        }
    }
}

fn eval(phi: &Formula, at: &[String]) -> Result<Outcome> {
    let point = at.iter().map(|s| s.trim().parse::<Rational>()).collect::<Result<Vec<_>>>()?;
    if let Some(r) = point.iter().find(|r| !r.in_unit_interval()) {
        return Err(Error::Domain(r.clone()));
    }
    let value = phi.eval_at(&point)?;
    let json = json!({ "formula": phi.to_string(), "point": point, "value": value });
    Ok(Outcome::new(true, format!("{value}\n"), json))
}

fn sample(p: &FuzzyFamily, points: usize, out: Option<PathBuf>) -> Result<Outcome> {
    let csv = sample_csv(p, points)?;
    let rows = sample_rows(p, points)?;
    let json = json!({
        "rows": rows.iter().map(|(x, v)| json!({ "x": x, "values": v })).collect::<Vec<_>>()
    });
    match out {
        Some(path) => {
            std::fs::write(&path, &csv)
                .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
            Ok(Outcome::new(true, format!("wrote {}\n", path.display()), json))
        }
        None => Ok(Outcome::new(true, csv, json)),
    }
}
