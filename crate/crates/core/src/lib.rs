//! Exact edge open packing toolkit.
//!
//! Two edges of a graph have a *common edge* when some third edge joins an
//! endpoint of one to an endpoint of the other. An edge open packing (EOP)
//! set is a set of edges in which no two members have a common edge, and
//! the edge open packing number `rho` is the largest size of such a set.
//!
//! The crate is organised as:
//!
//! - [`graph`]: graphs, graph6, canonical forms and the small-graph corpus;
//! - [`eop`]: the common-edge relation, exact `rho`, EOP/induced-matching
//!   enumeration and the injective chromatic index;
//! - [`conditions`]: the four-condition test for `2 <= rho <= t` and the
//!   `rho = 2` / `rho = t` predictors;
//! - [`families`]: generators and recognizers for the extremal families
//!   with `rho` in `{m - 2, m - 3}` and the interpretation audit;
//! - [`harness`]: corpus scans with deterministic line-oriented reports.

pub mod graph;
pub mod eop;
pub mod conditions;
pub mod families;
pub mod harness;
