//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use tribasis::basis::{classify, detected_permutation, path_coverage};
use tribasis::logic::{
    axioms, compose, deductive_closure_probe, oneset_grid_check, parse, phi_k, theory_equal, theta_member,
    AxiomKind, Connective, Formula, Separation, TheoryCertificate,
};
use tribasis::props::is_separating;
use tribasis::{canonical_basis, rat, FuzzyFamily, PlFunc, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const SEED: u64 = 0x5eed_0001;

struct Corpus {
    bases: Vec<FuzzyFamily>,
    mutants: Vec<(common::Mutation, FuzzyFamily)>,
}

fn corpus() -> Corpus {
    let mut rng = common::rng(SEED);
    let mut bases = Vec::new();
    let mut mutants = Vec::new();
    for k in 0..200 {
        let b = common::random_basis_any(&mut rng);
        let m = common::MUTATIONS[k % 4];
        mutants.push((m, common::mutate(&mut rng, &b, m)));
        bases.push(b.family());
    }
    Corpus { bases, mutants }
}

fn three_route_equivalence(c: &Corpus) -> Outcome {
    let start = Instant::now();
    for (k, p) in c.bases.iter().enumerate() {
        let r = classify(p).map_err(|e| format!("basis {k}: {e}"))?;
        ensure!(
            r.definition.holds() && r.properties.holds() && r.geometric.holds(),
            "basis {k} rejected: {r:?}"
        );
    }
    for (k, (m, p)) in c.mutants.iter().enumerate() {
        let r = classify(p).map_err(|e| format!("mutant {k}: {e}"))?;
        ensure!(
            r.definition.fails() && r.properties.fails() && r.geometric.fails(),
            "mutant {k} ({m:?}) accepted by some route: {r:?}"
        );
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(10), "took {took:?}");
    Ok(format!("200 bases accepted, 200 mutants rejected by all routes in {took:.2?}"))
}

fn oneset_grid() -> Outcome {
    let start = Instant::now();
    for (n, d) in [(2, 24), (3, 12), (4, 6)] {
        let v = oneset_grid_check(n, d).map_err(|e| e.to_string())?;
        ensure!(v.holds(), "n = {n}, d = {d}: counterexample {:?}", v.witness());
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(30), "took {took:?}");
    Ok(format!("(2,24), (3,12), (4,6) exhaustive in {took:.2?}"))
}

fn axiomatisation_round_trip(c: &Corpus) -> Outcome {
    let verdict = |p: &FuzzyFamily| -> Result<(bool, bool), String> {
        let q = match detected_permutation(p) {
            Some(order) => p.relabel(&order).map_err(|e| e.to_string())?,
            None => p.clone(),
        };
        let cert = theory_equal(&q).map_err(|e| e.to_string())?;
        let verified = cert.verify(&q).map_err(|e| e.to_string())?;
        Ok((is_separating(p).holds() && cert.is_equal(), verified))
    };
    let mut certificates = 0;
    for (k, p) in c.bases.iter().enumerate() {
        let (holds, verified) = verdict(p)?;
        ensure!(holds, "basis {k}: not separating or not axiomatised");
        ensure!(verified, "basis {k}: certificate failed to re-verify");
    }
    for (k, (m, p)) in c.mutants.iter().enumerate() {
        let (holds, verified) = verdict(p)?;
        ensure!(!holds, "mutant {k} ({m:?}) passes");
        ensure!(verified, "mutant {k}: certificate failed to re-verify");
        certificates += 1;
    }
    Ok(format!("200 bases equal, 200 mutants separated, {certificates} certificates re-verified"))
}

fn table_row(c: Connective, a: &Rational, b: &Rational) -> Rational {
    let zero = Rational::zero();
    let one = Rational::one();
    match c {
        Connective::Implies => one.clone().min(&one - (a - b)),
        Connective::Or => a.clone().max(b.clone()),
        Connective::And => a.clone().min(b.clone()),
        Connective::Iff => &one - (a - b).abs(),
        Connective::StrongOr => one.min(a + b),
        Connective::StrongAnd => zero.max(a + b - one),
        Connective::Minus => zero.max(a - b),
    }
}

fn semantics_conformance() -> Outcome {
    let grid = common::grid(10);
    let (x1, x2) = (Formula::var(1), Formula::var(2));
    let not = |f: &Formula| Formula::not(f.clone());
    let imp = |a: &Formula, b: &Formula| Formula::implies(a.clone(), b.clone());
    let definitions = [
        (Formula::or(x1.clone(), x2.clone()), imp(&imp(&x1, &x2), &x2)),
        (Formula::and(x1.clone(), x2.clone()), not(&Formula::or(not(&x1), not(&x2)))),
        (Formula::strong_or(x1.clone(), x2.clone()), imp(&not(&x1), &x2)),
        (Formula::strong_and(x1.clone(), x2.clone()), not(&imp(&x1, &not(&x2)))),
        (Formula::minus(x1.clone(), x2.clone()), not(&imp(&x1, &x2))),
    ];
    let mut checks = 0;
    for a in &grid {
        for b in &grid {
            let point = [a.clone(), b.clone()];
            for c in Connective::ALL {
                let f = Formula::binary(c, x1.clone(), x2.clone());
                let got = f.eval_at(&point).map_err(|e| e.to_string())?;
                ensure!(got == table_row(c, a, b), "{f} at ({a}, {b}) = {got}");
                checks += 1;
            }
            ensure!(not(&x1).eval_at(&point).unwrap() == Rational::one() - a, "negation at {a}");
            for (derived, definition) in &definitions {
                let l = derived.eval_at(&point).unwrap();
                let r = definition.eval_at(&point).unwrap();
                ensure!(l == r, "{derived} vs {definition} at ({a}, {b})");
            }
        }
    }
    ensure!(Formula::Bot.eval_at(&[]).unwrap().is_zero(), "bottom");
    ensure!(Formula::Top.eval_at(&[]).unwrap().is_one(), "top");
    Ok(format!("{checks} connective evaluations and 605 definition checks exact"))
}

fn canonical_worked_example() -> Outcome {
    let t3 = canonical_basis(3).map_err(|e| e.to_string())?;
    let set = axioms(3).map_err(|e| e.to_string())?;
    let kinds: Vec<AxiomKind> = set.axioms.iter().map(|a| a.kind).collect();
    ensure!(
        kinds == [AxiomKind::Rho, AxiomKind::Alpha(1, 2), AxiomKind::Alpha(2, 3), AxiomKind::Beta(1, 3)],
        "axiom kinds {kinds:?}"
    );
    for a in &set.axioms {
        ensure!(theta_member(&a.formula, &t3).unwrap().holds(), "{} not in theory", a.formula);
    }
    ensure!(theory_equal(&t3).unwrap() == TheoryCertificate::Equal, "theory differs");
    let cov = path_coverage(&t3);
    ensure!(cov.edge(1, 2).is_some_and(|e| e.is_full()), "edge 1-2 not covered");
    ensure!(cov.edge(2, 3).is_some_and(|e| e.is_full()), "edge 2-3 not covered");
    ensure!(cov.edge(1, 3).is_none(), "edge 1-3 touched");
    ensure!(cov.permutation == Some(vec![1, 2, 3]), "permutation {:?}", cov.permutation);
    Ok("rho, alpha_1_2, alpha_2_3, beta_1_3 in the theory; edges 1-2, 2-3 full; identity order".into())
}

fn separator_construction() -> Outcome {
    let f1 = PlFunc::new(vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(1, 2))]).unwrap();
    let f2 = PlFunc::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 1), rat(1, 2))]).unwrap();
    let p = FuzzyFamily::new(vec![f1, f2]).unwrap();
    let cert = theory_equal(&p).map_err(|e| e.to_string())?;
    let TheoryCertificate::NotEqual(Separation::FormulaOutsideClosure {
        vertex,
        max_coordinate,
        k,
        formula,
        ..
    }) = &cert
    else {
        return Err(format!("unexpected certificate {cert:?}"));
    };
    ensure!(
        *vertex == 2 && *max_coordinate == rat(1, 2) && *k == 2,
        "vertex {vertex}, c {max_coordinate}, k {k}"
    );
    ensure!(*formula == phi_k(2, 2).unwrap(), "formula {formula}");
    ensure!(compose(formula, &p).unwrap() == PlFunc::one(), "composition is not 1");
    ensure!(formula.eval_at(&[rat(0, 1), rat(1, 1)]).unwrap().is_zero(), "value at (0,1)");
    ensure!(cert.verify(&p).unwrap(), "certificate does not re-verify");
    Ok(format!("{formula} with c = 1/2, k = 2; composes to 1, is 0 at (0,1)"))
}

fn closure_and_consistency(c: &Corpus) -> Outcome {
    let mut rng = common::rng(SEED ^ 7);
    let mut informative = 0;
    for k in 0..500 {
        let p = match k % 3 {
            0 => c.bases[k % 200].clone(),
            1 => c.mutants[k % 200].1.clone(),
            _ => common::random_family(&mut rng),
        };
        let n = p.len();
        ensure!(theta_member(&Formula::Bot, &p).unwrap().fails(), "bottom in theory of family {k}");
        let chi = common::random_formula(&mut rng, n, 3);
        let phi = if rng.gen_bool(0.5) {
            common::random_formula(&mut rng, n, 3)
        } else {
            // always in the theory
            Formula::implies(
                chi.clone(),
                Formula::strong_or(chi.clone(), common::random_formula(&mut rng, n, 2)),
            )
        };
        let psi = match rng.gen_range(0..3) {
            0 => common::random_formula(&mut rng, n, 3),
            1 => Formula::or(phi.clone(), common::random_formula(&mut rng, n, 2)),
            _ => Formula::strong_or(chi, common::random_formula(&mut rng, n, 2)),
        };
        let probe = deductive_closure_probe(&p, &phi, &psi).map_err(|e| e.to_string())?;
        ensure!(probe.closed, "modus ponens fails for {phi} / {psi} on family {k}");
        if probe.antecedent && probe.implication {
            informative += 1;
        }
    }
    ensure!(informative > 0, "no probe had both premises in the theory");
    Ok(format!("500 probes closed ({informative} with both premises in the theory); bottom never a member"))
}

fn parser_round_trip() -> Outcome {
    let mut rng = common::rng(SEED ^ 11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let f = common::random_formula(&mut rng, n, 8);
        let text = f.to_string();
        let back = parse(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure!(back == f, "{text} reparsed as {back}");
    }
    let x = Formula::var;
    let fixtures: Vec<(&str, Formula)> = vec![
        ("X1 -> X2 -> X3", Formula::implies(x(1), Formula::implies(x(2), x(3)))),
        ("X1 + X2 + X3", Formula::strong_or(Formula::strong_or(x(1), x(2)), x(3))),
        ("X1 - X2 - X3", Formula::minus(Formula::minus(x(1), x(2)), x(3))),
        ("!X1 & X2", Formula::and(Formula::not(x(1)), x(2))),
        ("!!X1", Formula::not(Formula::not(x(1)))),
        ("X1 | X2 & X3", Formula::or(x(1), Formula::and(x(2), x(3)))),
        ("X1 + X2 * X3", Formula::strong_or(x(1), Formula::strong_and(x(2), x(3)))),
        ("X1 & X2 * X3", Formula::strong_and(Formula::and(x(1), x(2)), x(3))),
        ("X1 | X2 -> X3", Formula::implies(Formula::or(x(1), x(2)), x(3))),
        ("X1 <-> X2 -> X3", Formula::iff(x(1), Formula::implies(x(2), x(3)))),
        ("X1 -> X2 <-> X3", Formula::iff(Formula::implies(x(1), x(2)), x(3))),
        ("X1 <-> X2 <-> X3", Formula::iff(Formula::iff(x(1), x(2)), x(3))),
        ("(X1 -> X2) -> X3", Formula::implies(Formula::implies(x(1), x(2)), x(3))),
        ("!(X1 * X2)", Formula::not(Formula::strong_and(x(1), x(2)))),
        ("¬X1 ⊕ X2 → ⊥", Formula::implies(Formula::strong_or(Formula::not(x(1)), x(2)), Formula::Bot)),
        ("X10 ∧ ⊤ ∨ 0", Formula::or(Formula::and(x(10), Formula::Top), Formula::Bot)),
        (
            "X1 ↔ X2 ⊙ X3 ⊖ 1",
            Formula::iff(x(1), Formula::minus(Formula::strong_and(x(2), x(3)), Formula::Top)),
        ),
    ];
    for (text, want) in &fixtures {
        let got = parse(text).map_err(|e| format!("{text}: {e}"))?;
        ensure!(&got == want, "{text} parsed as {got}");
    }
    for bad in ["X0", "X1 &", "(X1", "X1 X2", "X1)", "", "10", "Y1", "X1 <- X2"] {
        ensure!(parse(bad).is_err(), "`{bad}` accepted");
    }
    Ok(format!("1000 random ASTs round-trip; {} fixtures and 9 rejections", fixtures.len()))
}

fn main() {
    let start = Instant::now();
    let c = corpus();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 three-route equivalence", three_route_equivalence(&c)),
        ("2 one-set grid check", oneset_grid()),
        ("3 axiomatisation round trip", axiomatisation_round_trip(&c)),
        ("4 semantics conformance", semantics_conformance()),
        ("5 canonical 3-basis example", canonical_worked_example()),
        ("6 separator construction", separator_construction()),
        ("7 closure and consistency", closure_and_consistency(&c)),
        ("8 parser round trip", parser_round_trip()),
    ];
    let mut failed = 0;
    for (name, outcome) in &criteria {
        match outcome {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
