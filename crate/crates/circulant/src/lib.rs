//! Degree/diameter toolkit for undirected circulant graphs.
//!
//! A circulant graph `C(n; S)` is the Cayley graph of the cyclic group ℤₙ
//! with a symmetric connection set `S = −S`: vertex `v` is adjacent to
//! `v ± s` for every generator `s ∈ S`. This crate provides:
//!
//! * exact graph machinery — canonical connection sets, BFS distances,
//!   diameter, connectivity, multiplicative transforms ([`graph`]);
//! * exact upper bounds for the degree/diameter problem — the Moore bound,
//!   the Delannoy-number bounds `F(t, D)` / `F′(t, D)` for even/odd degree,
//!   and the triple-loop maximum ([`bounds`]);
//! * deterministic constructions — Cartesian products of coprime circulants,
//!   the optimal degree-4 family, and the power construction
//!   ([`constructions`]);
//! * a pruned depth-first search over connection sets with path-class
//!   ceilings, plus a brute-force oracle and drivers ([`search`], [`pathcount`],
//!   [`combine`]);
//! * a persistent best-known record table with verification and provenance
//!   ([`records`]);
//! * least-squares polynomial fits and difference grids over the bound and
//!   record tables ([`analysis`]).

pub mod analysis;
pub mod bounds;
pub mod combine;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod pathcount;
pub mod records;
pub mod search;
mod seed_data;

pub use error::{Error, Result};
pub use graph::{canonical_set, CirculantGraph, ConnectionSet, DistanceProfile, INFINITY};
