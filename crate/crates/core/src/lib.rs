//! Squarefree monomial submodules of finitely generated graded free modules:
//! exact representation, classification (stable / strongly stable /
//! lexicographic), graded Betti tables by closed formula, extremal Betti
//! numbers and the degree-sequence corner criterion, constructions with
//! prescribed super corners, and an independent homology oracle over GF(p).
//!
//! The main entry points:
//!
//! - [`SquarefreeMonomial`], [`MonomialIdeal`], [`GradedSubmodule`] — the
//!   exact domain types with a canonical JSON encoding.
//! - [`classify`] — membership tests with re-checkable witnesses.
//! - [`betti`] — tables, extremal positions by three routes, corners,
//!   b-vectors.
//! - [`construct`] — full powers, lexsegments, lexicographic submodules
//!   with prescribed b-vector support or super corners, stable closures,
//!   seeded random instances.
//! - [`oracle`] — Taylor-strand homology over GF(p) and certification of
//!   the closed formula against it.

pub mod betti;
pub mod classify;
pub mod construct;
pub mod error;
pub mod ideal;
pub mod module;
pub mod monomial;
pub mod oracle;

#[cfg(test)]
pub(crate) mod testutil;

pub use betti::{
    admissible_subsequence, b_vector, betti_ideal, betti_ideal_formula, betti_module,
    betti_module_formula, betti_table, betti_table_formula, corners, degree_sequence,
    extremal_value, extremal_via_theorem, homological_invariants, BVector, BettiTable,
    CornerReport, HomologicalInvariants,
};
pub use classify::{
    check_lex_submodule, check_lex_submodule_direct, check_lexsegment_ideal, check_stable_ideal,
    check_stable_submodule, check_strongly_stable_ideal, check_strongly_stable_submodule,
    classify as classify_module, mu_check, ClassReport, EnumLimit, MuReport, Verdict, Witness,
};
pub use construct::{
    full_power, lex_for_corners, lex_for_support, lexsegment_of, random_stable_submodule,
    stable_closure, RandomModuleParams, SuperCornerSpec,
};
pub use error::Error;
pub use ideal::{
    minimalize, power_contained, power_witness, product_power_contained, product_power_witness,
    MonomialIdeal,
};
pub use module::GradedSubmodule;
pub use monomial::{
    enumerate_squarefree, slex_cmp, slexf_cmp, ModuleMonomial, SquarefreeMonomial, MAX_VARS,
};
pub use oracle::{
    betti_oracle_ideal, betti_oracle_module, certify, is_prime, CertifyReport, DEFAULT_CAP,
    DEFAULT_PRIME,
};
