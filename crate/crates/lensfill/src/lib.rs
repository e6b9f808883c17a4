//! Exact-arithmetic filling obstructions for lens spaces.
//!
//! Given coprime `p > q > 0`, the lens space `L(p,q)` (the result of
//! `-p/q`-surgery on the unknot) may or may not bound a smooth 4-manifold
//! with `b_2 = b_2^+ = 1` under successively stronger constraints: a single
//! 0- and 2-handle, trivial fundamental group, trivial first homology, or
//! just `b_1 = 0`. This crate decides the decidable obstructions exactly:
//!
//! * chain-lattice embeddings into the diagonal lattice one rank up, with
//!   complement generators and Greene's changemaker test ([`embed`]);
//! * Heegaard Floer correction terms of lens spaces and the spin
//!   obstruction ([`dinv`]);
//! * the D-square test for rational homology projective planes with one
//!   cyclic quotient singularity ([`arith`]);
//! * blow-up calculus on rational surfaces for the construction side,
//!   including first homology of the smooth locus ([`surfaces`]).
//!
//! Everything is integer or rational arithmetic with no tolerances; all
//! searches are exhaustive with explicit node budgets.

pub mod arith;
pub mod intlin;
