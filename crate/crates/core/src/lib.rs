//! Exact hook immanants and hook immanantal polynomials of graphs and digraphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`]: arbitrary-precision square matrices with determinant,
//!   permanent, submatrices and the three entry masks.
//! * [`characters`]: hook characters of the symmetric group by border-strip
//!   removal.
//! * [`immanant`]: hook immanants, both by definition and by the
//!   per/det subset recursion.
//! * [`polynomial`]: integer polynomials and exact interpolation.
//! * [`graph`]: simple graphs and loop-free digraphs, their matrices, decks
//!   and text formats.
//! * [`identities`]: hook immanantal polynomials, the deletion identities,
//!   the matrix lemmas and polynomial reconstruction from decks.
//!
//! All arithmetic is exact. With the default `parallel` feature the
//! independent work units (subsets, evaluation nodes, deck members) are
//! spread over the rayon pool; results are bit-identical to sequential runs.

pub mod characters;
mod error;
pub mod exec;
pub mod graph;
pub mod identities;
pub mod immanant;
pub mod matrix;
pub mod polynomial;

pub use characters::{cycle_type_of, hook_character, hook_dimension, CycleType, HookLabel};
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{parse_graph, serialize_graph, GraphFormat, GraphSpec, MatrixKind};
pub use identities::{
    hook_poly, hook_poly_all, make_deck, reconstruct_from_deck, resolve_sign_convention, rimhook_polys,
    verify_matrix_lemma, verify_theorem1, verify_theorem2, Deck, DeckEntry, IdentityId, ReconstructionResult, Residual,
    SignConvention, VerificationReport,
};
pub use immanant::{hook_immanant, hook_immanant_all, immanant_bruteforce, immanant_of_label};
pub use matrix::{ExactMatrix, MaskKind, SubmatrixMode};
pub use polynomial::{IntPolynomial, Term};

pub use num_bigint::BigInt;
