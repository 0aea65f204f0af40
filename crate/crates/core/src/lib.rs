//! Exact computation of homology and cohomology with local coefficients.
//!
//! The crate computes (co)homology of spaces with coefficients twisted by a
//! fundamental-group action, over a prime field, via the two-filtration
//! spectral sequences of an explicit bicomplex; it generalizes the same
//! machinery to coefficient systems on a finite EI-category (Bredon-style
//! equivariant (co)homology), and ships the span calculus of finite G-sets
//! plus the RO(C_p) bookkeeping needed to assemble the classifying-space
//! computation for O(2) with a cyclic group of odd prime order acting.

pub mod fieldlin;

#[cfg(test)]
mod proptests;
