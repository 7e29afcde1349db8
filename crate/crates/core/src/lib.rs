//! Minimum coprime labelings of prism graphs, generalized Petersen
//! graphs `GP(n, 2)`, stacked prisms, and the variant `GP*(2k, k)`.
//!
//! A coprime labeling assigns distinct positive integers to vertices so
//! that adjacent vertices get relatively prime labels; the minimum
//! coprime number of a graph is the smallest possible maximum label.
//! This crate provides:
//!
//! * closed-form labeling constructions for each family, with
//!   certificates naming the rule and case used ([`constructions`]);
//! * a verifier and JSON/DOT serialization ([`labeling`]);
//! * an exact branch-and-bound solver computing minimum coprime numbers
//!   on small instances, used as an independent oracle ([`solver`]);
//! * batch scan and conjecture-check harnesses ([`scan`],
//!   [`conjectures`]).

pub mod conjectures;
pub mod constructions;
pub mod graphs;
pub mod labeling;
pub mod mis;
pub mod numtheory;
pub mod scan;
pub mod solver;

pub use constructions::{
    gp2_max_label, label_gp2, label_gpstar, label_prism, label_prism_by, label_y3, label_y5,
    ConstructionError,
};
pub use graphs::{
    build, independence_exact, independence_formula, to_dot, AlphaSource, BoundInfo, GraphError,
    GraphFamily, GraphInstance, VertexId,
};
pub use labeling::{
    to_dot_labeled, verify, Certificate, Label, Labeling, LabelingDocument, TheoremId,
    VerificationReport, VerifyError,
};
pub use solver::{
    confirm_no_prime_labeling, lower_bound, solve, SolverConfig, SolverError, SolverReport,
    VertexOrder,
};
