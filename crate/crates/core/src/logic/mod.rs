//! Lukasiewicz formulas, their `[0,1]` semantics, and the theory induced by
//! a family of fuzzy sets.

mod axioms;
mod formula;
mod parser;
mod theory;

pub use axioms::{axioms, on_path, oneset_grid_check, phi_k, Axiom, AxiomKind, AxiomSet};
pub use formula::{Connective, Formula};
pub use parser::parse;
pub use theory::{
    a_consequence, axiomatised_by_path, compose, deductive_closure_probe, theory_equal, theta_member,
    AxiomatisationReport, ClosureProbe, MembershipWitness, Separation, TheoryCertificate,
};
