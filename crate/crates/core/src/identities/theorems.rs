//! The two deletion identities.
//!
//! Directed: `(m−n)·Φ + x·Φ' = Σ_e Φ(G − e)` for every `M = β·D + γ·A`.
//! Undirected adjacency: `(m−n)·Φ + x·Φ' = Σ_uv [Φ(G − uv) + h·Φ^{□□}(G−u−v) + v·Φ^{vert}(G−u−v)]`
//! with signs `(h, v)` taken from a [`SignConvention`].

use num_bigint::BigInt;

use super::polys::{hook_poly_all_with, matrix_hook_polys_with, rimhook_labels, select_label};
use super::report::{IdentityId, Residual, SignConvention, VerificationReport};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{GraphSpec, MatrixKind};
use crate::polynomial::{IntPolynomial, Term};

/// `(m−n)·Φ + x·Φ'`.
fn left_side(phi: &IntPolynomial, m: usize, n: usize) -> IntPolynomial {
    IntPolynomial::combine(&[
        Term::new(BigInt::from(m as i64 - n as i64), phi.clone()),
        Term::times_x(1, phi.derivative()),
    ])
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}

/// One report per `k = 1..=n` for the directed identity.
pub fn theorem1_all_k(g: &GraphSpec, kind: MatrixKind, exec: Execution) -> Result<Vec<VerificationReport>> {
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    let (n, m) = (g.order(), g.size());
    let phi = hook_poly_all_with(g, kind, exec)?;
    let cards: Vec<GraphSpec> = g.deck().into_iter().map(|c| c.minus_edge).collect();
    let card_polys =
        exec.map_slice(&cards, |c| hook_poly_all_with(c, kind, exec)).into_iter().collect::<Result<Vec<_>>>()?;
    Ok((1..=n)
        .map(|k| {
            let rhs: IntPolynomial = card_polys.iter().map(|c| c[k - 1].clone()).sum();
            let residual = left_side(&phi[k - 1], m, n) - rhs;
            VerificationReport::new(IdentityId::Theorem1, Residual::Polynomial(residual)).with_k(k).with_kind(kind)
        })
        .collect())
}

pub fn verify_theorem1(g: &GraphSpec, kind: MatrixKind, k: usize) -> Result<VerificationReport> {
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    check_k(k, g.order())?;
    Ok(theorem1_all_k(g, kind, Execution::default())?.swap_remove(k - 1))
}

/// Sign-independent pieces of the undirected identity for one `k`.
#[derive(Clone, Debug)]
pub(crate) struct Theorem2Parts {
    pub k: usize,
    pub lhs: IntPolynomial,
    pub sum_phi: IntPolynomial,
    pub sum_horizontal: IntPolynomial,
    pub sum_vertical: IntPolynomial,
}

impl Theorem2Parts {
    pub fn residual(&self, signs: SignConvention) -> IntPolynomial {
        IntPolynomial::combine(&[
            Term::new(1, self.lhs.clone()),
            Term::new(-1, self.sum_phi.clone()),
            Term::new(-i64::from(signs.horizontal), self.sum_horizontal.clone()),
            Term::new(-i64::from(signs.vertical), self.sum_vertical.clone()),
        ])
    }

    pub fn report(&self, kind: MatrixKind, signs: SignConvention) -> VerificationReport {
        VerificationReport::new(IdentityId::Theorem2, Residual::Polynomial(self.residual(signs)))
            .with_k(self.k)
            .with_kind(kind)
            .with_signs(signs)
    }
}

/// The rim-hook terms use `M(G − u − v)`; for `M = A` this is the identity
/// as stated, other kinds are an exploratory probe.
pub(crate) fn theorem2_parts(g: &GraphSpec, kind: MatrixKind, exec: Execution) -> Result<Vec<Theorem2Parts>> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    let (n, m) = (g.order(), g.size());
    let phi = hook_poly_all_with(g, kind, exec)?;
    let cards = g.deck();
    let per_card = exec
        .map_slice(&cards, |card| -> Result<_> {
            let minus_edge = hook_poly_all_with(&card.minus_edge, kind, exec)?;
            let pair = card.minus_endpoints.as_ref().expect("undirected deck");
            let minus_pair = matrix_hook_polys_with(&pair.build_matrix(kind), exec)?;
            Ok((minus_edge, minus_pair))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok((1..=n)
        .map(|k| {
            let (horizontal, vertical) = rimhook_labels(k, n);
            Theorem2Parts {
                k,
                lhs: left_side(&phi[k - 1], m, n),
                sum_phi: per_card.iter().map(|(e, _)| e[k - 1].clone()).sum(),
                sum_horizontal: per_card.iter().map(|(_, p)| select_label(p, horizontal)).sum(),
                sum_vertical: per_card.iter().map(|(_, p)| select_label(p, vertical)).sum(),
            }
        })
        .collect())
}

/// One report per `k = 1..=n` for the undirected adjacency identity.
pub fn theorem2_all_k(g: &GraphSpec, signs: SignConvention, exec: Execution) -> Result<Vec<VerificationReport>> {
    Ok(theorem2_parts(g, MatrixKind::A, exec)?.iter().map(|p| p.report(MatrixKind::A, signs)).collect())
}

pub fn verify_theorem2(g: &GraphSpec, k: usize, signs: SignConvention) -> Result<VerificationReport> {
    verify_theorem2_with_kind(g, MatrixKind::A, k, signs)
}

/// The undirected identity with `L` or `Q` in place of `A`; no claim is made
/// that it holds.
pub fn verify_theorem2_with_kind(
    g: &GraphSpec,
    kind: MatrixKind,
    k: usize,
    signs: SignConvention,
) -> Result<VerificationReport> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    check_k(k, g.order())?;
    let parts = theorem2_parts(g, kind, Execution::default())?;
    Ok(parts[k - 1].report(kind, signs))
}
