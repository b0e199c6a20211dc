//! Randomized property laboratory.
mod case;
mod gen;
mod ops;
mod property;

pub use case::Case;
pub use gen::{gen_database, gen_extension, gen_regex, gen_relabeling, gen_renaming, GenParams, Instance};
pub use ops::{
    concat_sets, factors_into, match_coverage, result_coverage, splits_into, star_upto, walk_labels, Coverage,
};
pub use property::{check_case, Ctx, Outcome, Property, CASE_CAP};
mod witness;
pub use witness::{directed_cases, path_case, PATH_FAMILY};
mod expect;
mod report;
mod runner;
pub use expect::{Expectation, Expectations};
pub use report::{Counterexample, MatrixReport, Mismatch, PropertyReport, Verdict};
pub use runner::{check_property, expected_cells, run_matrix, run_matrix_for, run_matrix_with};
mod inclusions;
pub use inclusions::{
    check_edge, check_inclusions, witness, EdgeReport, InclusionReport, Witness, INCOMPARABLE, LATTICE, WITNESSES,
};
pub mod bench;
