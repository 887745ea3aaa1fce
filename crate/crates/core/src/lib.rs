//! Exact enumeration and counting of directed plateau polyhypercubes.
//!
//! A directed plateau polyhypercube in dimension `d >= 3` is a stack of `k`
//! axis-aligned hyperrectangles ("plateaus"), one per unit slab along the
//! first axis, in which every cell is reachable from a root by positive unit
//! steps. This crate counts them by width `k` and lateral area `n` (the total
//! area of the `d - 1` polyominoes obtained by projecting onto the planes
//! spanned by the first axis and each other axis).
//!
//! The crate provides:
//!
//! * [`polyomino`]: directed column-convex polyominoes, a direct generator,
//!   definition-level checkers and a Redelmeier enumerator used as an oracle.
//! * [`polyhypercube`]: plateau stacks, projections, lateral area, a fast
//!   enumerator and a brute-force cell-level oracle.
//! * [`counting`]: exact big-integer counts (convolution and closed form).
//! * [`genfun`]: integer polynomials and rational generating functions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod binomial;
pub mod counting;
mod error;
pub mod genfun;
pub mod polyhypercube;
pub mod polyomino;

pub use binomial::{binomial, BinomialCache};
pub use counting::{
    build_table, count_dccp, count_dpp_closed, count_dpp_convolution, count_dpp_dimension_step,
    vandermonde_lhs, CountTable,
};
pub use error::{Error, Result};
pub use genfun::{
    bivariate_width_slice, gf_fixed_width, gf_total, IntPolynomial, RationalGF, SeriesPrefix,
};
pub use polyhypercube::{
    enumerate_dpp, generic_is_valid_dpp, oracle_count_dpp, oracle_enumerate_dpp, CellSetD,
    DirectedPlateauPolyhypercube, Plateau, DEFAULT_NODE_BUDGET,
};
pub use polyomino::{
    enumerate_dccp, enumerate_fixed_polyominoes, is_column_convex, is_directed, CellSet2D,
    ColumnConvexPolyomino, ColumnSegment,
};
