use num_bigint::BigInt;

use crate::characters::{hook_dimension, HookLabel};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{GraphSpec, MatrixKind};
use crate::immanant::{hook_immanant_all_with, immanant_of_label_with};
use crate::matrix::ExactMatrix;
use crate::polynomial::IntPolynomial;

fn nodes(n: usize) -> Vec<BigInt> {
    (0..=n).map(BigInt::from).collect()
}

/// `d_λ(x·I − M)` for any hook label; invalid labels give the zero polynomial.
pub fn label_poly(m: &ExactMatrix, label: HookLabel) -> Result<IntPolynomial> {
    label_poly_with(m, label, Execution::default())
}

pub(crate) fn label_poly_with(m: &ExactMatrix, label: HookLabel, exec: Execution) -> Result<IntPolynomial> {
    let n = m.order();
    if !label.is_valid() {
        return Ok(IntPolynomial::zero());
    }
    if label.size() != n as i64 {
        return Err(Error::SizeMismatch { expected: n, actual: label.size().max(0) as usize });
    }
    let xs = nodes(n);
    let values = exec
        .map_slice(&xs, |x| immanant_of_label_with(&m.shifted_negation(x), label, exec))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    IntPolynomial::interpolate(&xs.into_iter().zip(values).collect::<Vec<_>>())
}

/// `[Φ_1, …, Φ_n]` of a matrix: every hook immanantal polynomial from one
/// subset pass per evaluation node.
pub fn matrix_hook_polys(m: &ExactMatrix) -> Result<Vec<IntPolynomial>> {
    matrix_hook_polys_with(m, Execution::default())
}

pub(crate) fn matrix_hook_polys_with(m: &ExactMatrix, exec: Execution) -> Result<Vec<IntPolynomial>> {
    let n = m.order();
    let xs = nodes(n);
    let table = exec.map_slice(&xs, |x| hook_immanant_all_with(&m.shifted_negation(x), exec));
    (0..n)
        .map(|k| {
            let points: Vec<_> = xs.iter().cloned().zip(table.iter().map(|row| row[k].clone())).collect();
            IntPolynomial::interpolate(&points)
        })
        .collect()
}

fn check_leading(p: &IntPolynomial, k: usize, n: usize) -> Result<()> {
    let want = hook_dimension(HookLabel::for_k(k, n))?;
    if p.degree() != Some(n) || p.leading_coefficient() != want {
        return Err(Error::Internal(format!(
            "Φ_{k} has leading term {} x^{:?}, expected {want} x^{n}",
            p.leading_coefficient(),
            p.degree()
        )));
    }
    Ok(())
}

/// `Φ_k^M(G, x) = d_k(x·I − M(G))`.
pub fn hook_poly(g: &GraphSpec, kind: MatrixKind, k: usize) -> Result<IntPolynomial> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let p = label_poly(&g.build_matrix(kind), HookLabel::for_k(k, n))?;
    check_leading(&p, k, n)?;
    Ok(p)
}

/// `[Φ_1^M(G), …, Φ_n^M(G)]`.
pub fn hook_poly_all(g: &GraphSpec, kind: MatrixKind) -> Result<Vec<IntPolynomial>> {
    hook_poly_all_with(g, kind, Execution::default())
}

pub fn hook_poly_all_with(g: &GraphSpec, kind: MatrixKind, exec: Execution) -> Result<Vec<IntPolynomial>> {
    let n = g.order();
    let polys = matrix_hook_polys_with(&g.build_matrix(kind), exec)?;
    for (i, p) in polys.iter().enumerate() {
        check_leading(p, i + 1, n)?;
    }
    Ok(polys)
}

/// Picks the polynomial for `label` out of `[Φ_1, …, Φ_size]` of one matrix,
/// applying the invalid/empty conventions.
pub(crate) fn select_label(all: &[IntPolynomial], label: HookLabel) -> IntPolynomial {
    if !label.is_valid() {
        IntPolynomial::zero()
    } else if label.is_empty_partition() {
        debug_assert!(all.is_empty());
        IntPolynomial::constant(1)
    } else {
        debug_assert_eq!(label.size() as usize, all.len());
        all[label.arm as usize - 1].clone()
    }
}

/// The two rim-hook labels for `(k, 1^{n-k})`: horizontal domino removed
/// from the arm, vertical domino removed from the leg.
pub(crate) fn rimhook_labels(k: usize, n: usize) -> (HookLabel, HookLabel) {
    let (k, n) = (k as i64, n as i64);
    (HookLabel::new(k - 2, n - k), HookLabel::new(k, n - k - 2))
}

/// `(Φ^{A(□□)}, Φ^{A(vertical)})` on a graph `H` of order `n − 2`:
/// `d_(k-2,1^{n-k})(x·I − A(H))` and `d_(k,1^{n-k-2})(x·I − A(H))`.
pub fn rimhook_polys(h: &GraphSpec, k: usize, n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    if h.order() + 2 != n {
        return Err(Error::SizeMismatch { expected: n.saturating_sub(2), actual: h.order() });
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let a = h.build_matrix(MatrixKind::A);
    let (horizontal, vertical) = rimhook_labels(k, n);
    Ok((label_poly(&a, horizontal)?, label_poly(&a, vertical)?))
}
