//! Exact computations with finite-dimensional algebras, their modules, and
//! preprojective algebras of Dynkin type.

pub mod algebra;
pub mod approx;
pub mod certify;
pub mod classify;
pub mod config;
pub mod decompose;
pub mod dynkin;
pub mod error;
pub mod field;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod quotient;
pub mod resolve;
pub mod stable;

pub use algebra::{AlgebraElement, FDAlgebra};
pub use approx::{in_fac, is_nth_syzygy, left_approximation, right_approximation, Approximation};
pub use certify::{
    base_algebra, certify_dualizing, check_syzygy_cm_equality, dualizing_candidate, dualizing_candidate_for,
    end_algebra, gorenstein_cotilting, in_cm, is_cotilting, is_ext_maximal, is_n_gorenstein, is_quasi_n_gorenstein,
    mutate_plus, Certificate, Certification, Condition, DualizingCandidate, Mutation,
};
pub use classify::{classify_dynkin, classify_in, predicted_triple, Classification, ClassificationSummary, Triple};
pub use config::Config;
pub use decompose::{decompose, is_isomorphic, Decomposition};
pub use dynkin::{frozen_split, is_impartial, DynkinSpec, Family, FrozenSplit, Preprojective};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational, F101};
pub use io::{module_to_text, parse_module};
pub use linalg::{Matrix, Subspace};
pub use module::{FDModule, ModuleMap};
pub use quiver::{Quiver, Relation};
pub use quotient::build_quotient;
pub use resolve::{DimReport, Homology};
pub use stable::StableCat;
