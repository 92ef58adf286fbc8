//! Parameter searches: the six-case table search, the Taylor classifier and
//! the geometric scan.

pub mod arith;
pub mod cases;
pub mod geometric;
pub mod numeric;
pub mod post;
pub mod taylor;

pub use cases::{
    attribute, search_all, search_case, search_cases, CaseSpec, CombinedResult, CombinedRow,
    SearchOptions, SearchResult, SearchStats, CASES,
};
pub use geometric::{geometric_scan, GeometricCandidate, GeometricScan};
pub use post::{post_filter, Elimination, Outcome, PostFilterReport};
pub use taylor::{taylor_classify, TaylorBranch, TaylorCandidate, TaylorReport};
