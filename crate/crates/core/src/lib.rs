//! Zero-divisor cup-length of cartesian powers of real projective spaces.
//!
//! The mod-2 cohomology of `(RP^m)^s` is the truncated algebra
//! `F2[x_1..x_s] / (x_i^{m+1})`. This crate does exact arithmetic there,
//! computes the zero-divisor ideal degree by degree, finds `zcl_s(RP^m)` by a
//! certified search over products of the generators `x_i + x_s`, builds the
//! explicit witness products for the known lower bounds, and assembles bound
//! tables for the higher topological complexity `TC_s(RP^m)`.

mod bits;
pub mod cache;
pub mod cuplength;
pub mod error;
pub mod join;
mod linalg;
pub mod parity;
pub mod report;
pub mod ring;
pub mod zero_divisors;

pub use bits::Bits;
pub use cache::{Cache, CacheEntry, ENGINE_VERSION};
pub use cuplength::{
    g_stabilization_probe, g_value, paper_witness, verify_witness, word_nonzero, zcl_exact, zcl_exact_with,
    Factor, GeneratorWord, Method, SearchLimits, Witness, WitnessRecord, ZclResult,
};
pub use error::{Error, Result};
pub use linalg::EchelonBasis;
pub use parity::{binom_parity, sigma_of, trailing_ones, z_of, Parity, TwoAdicProfile};
pub use report::{build_row, emit, known_tc, BoundsRow, Format, Policy, RowContext};
pub use ring::{Monomial, Poly, RingSpec, UniPoly, DEFAULT_BASIS_LIMIT};
pub use zero_divisors::{
    check_degree, even_summands_check, generator, ideal_degree_basis, is_zero_divisor, kernel_basis,
    verify_generators_lemma, DegreeCheck, DegreeSlice, SubspaceBasis,
};
