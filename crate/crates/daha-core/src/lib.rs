//! Exact-arithmetic core for double affine Hecke algebras of reduced root
//! systems of small rank.
//!
//! The crate is organized around the objects it computes with:
//!
//! * [`rootsys`] — root data for `A`–`D` (rank ≤ 4), `G2`, `F4`: lattices
//!   `Q ⊆ B ⊆ P`, the maximal short root, `ρ_ν`, minuscule weights.
//! * [`aweyl`] — the extended affine Weyl group `B·W`: λ-sets, lengths,
//!   the `π_b` reduction, the `≻` ordering and arrows.
//! * [`coeff`] — coefficient arithmetic: rational functions in
//!   `q^{1/G}, t_sht^{1/2}, t_lng^{1/2}`, exact cyclotomic numbers, and
//!   truncated `q`-series.
//! * [`polyrep`] — the polynomial representation: Demazure–Lusztig
//!   operators, `X`/`Y`/`π` actions, the weight function `μ` and the
//!   truncated constant-term pairing.
//! * [`macdonald`] — nonsymmetric Macdonald polynomials through the
//!   intertwiner recursion, with evaluation, duality, norm and
//!   conjugation formulas.
//! * [`fourier`] — discretized (functional) representations, the measure
//!   `μ•`, Fourier transforms, Gaussians, Jackson sums and the η-identity.
//! * [`perfect`] — Υ-ranges, semisimple stabilizers, finite-dimensional
//!   perfect representations in both sectors, Gauss–Selberg and classical
//!   Gauss sums.
//!
//! Everything is exact: rational, rational-function, or cyclotomic. There
//! is no floating point on any verification path.

pub mod aweyl;
pub mod coeff;
pub mod error;
pub mod fourier;
pub mod macdonald;
pub mod perfect;
pub mod polyrep;
pub mod qlin;
pub mod rootsys;

pub use error::{DahaError, Result};
