//! Polynomial decks and reconstruction of `Φ_k` from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::polys::{hook_poly_all_with, matrix_hook_polys_with, rimhook_labels, select_label};
use crate::characters::{hook_dimension, HookLabel};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{GraphSpec, MatrixKind};
use crate::polynomial::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckEntry {
    pub edge: [usize; 2],
    /// `Φ_k(G − e)`.
    pub phi: IntPolynomial,
    /// `Φ^{A(□□)}(G − u − v)`; undirected decks only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hh: Option<IntPolynomial>,
    /// `Φ^{A(vertical)}(G − u − v)`; undirected decks only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vv: Option<IntPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deck {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub kind: MatrixKind,
    pub directed: bool,
    pub entries: Vec<DeckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionResult {
    pub polynomial: IntPolynomial,
    /// `j* = n − m`, present when `m < n`; that coefficient is not fixed by the deck.
    #[serde(rename = "indeterminate", skip_serializing_if = "Option::is_none")]
    pub indeterminate_index: Option<usize>,
}

pub fn make_deck(g: &GraphSpec, kind: MatrixKind, k: usize) -> Result<Deck> {
    make_deck_with(g, kind, k, Execution::default())
}

pub fn make_deck_with(g: &GraphSpec, kind: MatrixKind, k: usize, exec: Execution) -> Result<Deck> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let directed = g.is_directed();
    if !directed && kind != MatrixKind::A {
        return Err(Error::DeckKindUnsupported);
    }
    let (horizontal, vertical) = rimhook_labels(k, n);
    let cards = g.deck();
    let entries = exec
        .map_slice(&cards, |card| -> Result<DeckEntry> {
            let phi = hook_poly_all_with(&card.minus_edge, kind, exec)?.swap_remove(k - 1);
            let (hh, vv) = match &card.minus_endpoints {
                Some(h) => {
                    let all = matrix_hook_polys_with(&h.build_matrix(MatrixKind::A), exec)?;
                    (Some(select_label(&all, horizontal)), Some(select_label(&all, vertical)))
                }
                None => (None, None),
            };
            Ok(DeckEntry { edge: [card.edge.0, card.edge.1], phi, hh, vv })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck { n, m: g.size(), k, kind, directed, entries })
}

/// Solves `(m − n + j)·a_j = s_j` coefficientwise, `s_j` being the
/// coefficients of the summed deck.
pub fn reconstruct_from_deck(deck: &Deck) -> Result<ReconstructionResult> {
    let Deck { n, m, k, .. } = *deck;
    if m == n {
        return Err(Error::EqualCounts(n));
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if deck.entries.len() != m {
        return Err(Error::InconsistentDeck(format!("{} entries for {m} edges", deck.entries.len())));
    }
    if !deck.directed && deck.kind != MatrixKind::A {
        return Err(Error::DeckKindUnsupported);
    }
    let mut s = IntPolynomial::zero();
    for e in &deck.entries {
        s = s + e.phi.clone();
        if !deck.directed {
            let (Some(hh), Some(vv)) = (&e.hh, &e.vv) else {
                return Err(Error::InconsistentDeck(format!("entry {:?} lacks rim-hook polynomials", e.edge)));
            };
            s = s - hh.clone() + vv.clone();
        }
    }
    if s.degree().is_some_and(|d| d > n) {
        return Err(Error::InconsistentDeck(format!("deck sum has degree above {n}")));
    }
    let shift = m as i64 - n as i64;
    let mut indeterminate = None;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let s_j = s.coeff(j);
        let factor = shift + j as i64;
        if factor == 0 {
            if !s_j.is_zero() {
                return Err(Error::InconsistentDeck(format!("coefficient {j} should vanish, got {s_j}")));
            }
            indeterminate = Some(j);
            coeffs.push(if j == n { hook_dimension(HookLabel::for_k(k, n))? } else { BigInt::zero() });
            continue;
        }
        let (q, r) = s_j.div_rem(&BigInt::from(factor));
        if !r.is_zero() {
            return Err(Error::InconsistentDeck(format!("{s_j} is not divisible by {factor} at index {j}")));
        }
        coeffs.push(q);
    }
    Ok(ReconstructionResult { polynomial: IntPolynomial::from_coeffs(coeffs), indeterminate_index: indeterminate })
}
