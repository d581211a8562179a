//! Exact graded Betti diagrams.
//!
//! The crate provides pure diagrams and their arithmetic, Hilbert numerators
//! and multiplicities, greedy Boij–Söderberg decomposition, the closed-form
//! Betti diagrams of secant varieties of genus-2 curves together with a
//! verifier, and a Hochster-formula generator of Stanley–Reisner diagrams.
//!
//! All arithmetic is exact over [`Rational`]; no floating point is used.

pub mod decompose;
pub mod diagram;
pub mod error;
pub mod hilbert;
pub mod io;
pub mod monomial;
pub mod rational;
pub mod secant;

pub use decompose::{
    enumerate_admissible, greedy_decompose, pi_k_sequence, recompose, Decomposition, IndexVector,
};
pub use diagram::{pure_diagram, BettiDiagram, DegreeSequence};
pub use error::{Error, Result};
pub use hilbert::{alternating_numerator, divide_exact, multiplicity, RatPolynomial};
pub use monomial::{
    hochster_betti, reduced_homology_ranks, stanley_reisner, HomologyRanks, SimplicialComplex,
    SquarefreeIdeal,
};
pub use rational::Rational;
pub use secant::{SecantParams, VerificationReport};
