//! Exact invariants, forbidden induced subgraph families and proof audits
//! for checking Reed's bound `χ ≤ ⌈(Δ + ω + 1) / 2⌉` on small graphs.

pub mod audit;
pub mod color;
pub mod corpus;
pub mod graph;
pub mod invariants;
pub mod patterns;
