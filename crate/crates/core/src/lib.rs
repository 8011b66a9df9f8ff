//! Koszulness of binomial edge ideals of pairs of graphs.
//!
//! The crate decides whether the quotient algebra attached to a pair of
//! simple graphs is Koszul, produces machine-checkable combinatorial
//! certificates (closed labelings and forbidden-structure witnesses), and
//! cross-verifies verdicts with a self-contained exact Groebner engine and a
//! truncated bar-complex Betti-number calculator.

#![forbid(unsafe_code)]

pub mod bar;
pub mod closed;
pub mod decision;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod gb;
pub mod graph;
pub mod order;
pub mod pair;
pub mod poly;
pub mod sparse;

pub use bar::{BarLimits, BettiEngine, BettiTable};
pub use closed::{
    brute_force_closed, closed_labeling, interval_facets, is_closed, perfect_elimination_order,
    verify_closed_labeling, ClosednessCertificate, IntervalFacetList, Peo,
};
pub use decision::{c_universal_classify, cross_check, decide_pair, PairStatus, PairVerdict};
pub use error::{BarError, GbError, GraphError};
pub use field::{Field, PrimeField, Rationals};
pub use gb::{buchberger_reduced, colon_by, ideal_equal, normal_form, GbLimits, ReducedGB};
pub use graph::{Graph, Labeling};
pub use order::{OrderKind, TermOrder};
pub use pair::{linear_quotients_check, multidegree, pair_ideal_generators, PairRing};
pub use poly::{parse_poly, Monomial, PolyRing, Polynomial};
