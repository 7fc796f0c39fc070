//! Character tables, finite matrix groups and their invariants.
//!
//! - [`table`]: JSON character tables, exact orthogonality checks,
//!   class-function decomposition, cusp representations and McKay quivers.
//! - [`group`]: enumeration of finite matrix groups over cyclotomic fields,
//!   conjugacy classes, word evaluation and centres.
//! - [`invariants`]: Molien series, closed-form checks, Reynolds invariants
//!   and presentation checks.
//! - [`fastmat`]: the compact canonical matrix form used while enumerating.

pub mod fastmat;
pub mod group;
pub mod invariants;
mod linalg;
pub mod table;

pub use group::{
    center_structure, conjugacy_classes, enumerate_matrix_group, rename_letters, CenterStructure,
    ConjugacyClass, MatrixGroup,
};
pub use invariants::{
    binary_presentation_witness, heisenberg_quintics, is_invariant, molien_closed_form_check,
    molien_series, polynomial_rank, reynolds_invariants, symmetrized_numerator,
    verify_presentation, BinaryWitness, ClosedFormCheck, PresentationReport,
};
pub use linalg::solve_exact;
pub use table::{
    affine_dynkin_type, centralizing_multiplicities, class_function_decompose,
    cusp_rep_multiplicities, load_char_table, load_char_table_file, mckay_quiver,
    verify_orthogonality, AffineType, CharacterTable, ClassInfo, CuspRepresentation,
    OrthogonalityReport, TableKind,
};
