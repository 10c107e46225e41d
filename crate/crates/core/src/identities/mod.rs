//! Hook immanantal polynomials of (di)graphs and the identities relating a
//! graph to its edge-deleted subgraphs.
//!
//! `Φ_k^M(G, x) = d_k(x·I − M(G))` is computed by evaluating the integer
//! kernel at `x = 0, …, n` and interpolating. On top of that sit the two
//! deletion identities, the matrix lemmas behind them, deck construction and
//! coefficient-wise reconstruction.

mod deck;
mod lemmas;
mod polys;
mod report;
mod signs;
mod theorems;

pub use deck::{make_deck, make_deck_with, reconstruct_from_deck, Deck, DeckEntry, ReconstructionResult};
pub use lemmas::verify_matrix_lemma;
pub use polys::{hook_poly, hook_poly_all, hook_poly_all_with, label_poly, matrix_hook_polys, rimhook_polys};
pub use report::{IdentityId, Residual, SignConvention, VerificationReport};
pub use signs::{resolve_sign_convention, resolve_sign_convention_with, SignResolution};
pub use theorems::{theorem1_all_k, theorem2_all_k, verify_theorem1, verify_theorem2, verify_theorem2_with_kind};
