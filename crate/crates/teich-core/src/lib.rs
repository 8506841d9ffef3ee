//! Computational workbench for classical and quantum Teichmüller theory on
//! fatgraph spines.
//!
//! The crate is organized around the once-punctured torus and a line-tree
//! family of higher (genus, holes) spines:
//!
//! * [`fatgraph`] — cubic ribbon graphs, faces, Whitehead moves;
//! * [`path`] — closed edge-paths with turn words, and their transport
//!   across Whitehead moves;
//! * [`shear`] — shear coordinates, SL(2) geodesic functions, flips, the
//!   classical pentagon map;
//! * [`laurent`] — commutative Laurent polynomials in `exp(Z_α/2)`;
//! * [`wp`] — the Weil–Petersson Poisson structure, brackets, Casimirs;
//! * [`qalg`] — the noncommutative algebra of Weyl-ordered quantum
//!   exponentials with `q`-phase multiplication;
//! * [`qgeo`] — quantum geodesic operators on the torus: ordered traces,
//!   skein products, Dehn twist endomorphisms, trace recursions;
//! * [`dilog`] — the quantum dilogarithm, its functional relations, and the
//!   finite-dimensional pentagon identity at rational coupling;
//! * [`thurston`] — foliation-shear coordinates, tropical flips and Dehn
//!   dynamics, continued fractions, splitting sequences, proper-length
//!   convergence, and the letter calculus for long products.
//!
//! The crate is `no_std`-compatible (with `alloc`); the companion `teich-lab`
//! crate carries IO, serialization, and the command-line front end.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dilog;
pub mod fatgraph;
pub mod fmath;
pub mod laurent;
pub mod path;
pub mod qalg;
pub mod qgeo;
pub mod shear;
pub mod thurston;
pub mod wp;

pub use fatgraph::{EdgeId, FatGraph, Face, HalfEdge};
pub use laurent::{LaurentExpr, Rational};
pub use path::{EdgePath, Step, Turn};
pub use qalg::{QBracket, QCoeff, QElement, QMonomial};
pub use shear::{Mat2R, ShearPoint};
pub use wp::WpMatrix;
