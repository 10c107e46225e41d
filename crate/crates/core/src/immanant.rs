//! Hook immanants `d_k(M) = Σ_σ χ_(k,1^{n-k})(σ) Π m_{iσ(i)}`.
//!
//! The fast route is the subset recursion
//! `d_k(M) = Σ_{|α|=k-1} per M[α] · det M(α) − d_{k-1}(M)` with `d_1 = det`.
//! Writing `P_j` for the inner sum over `|α| = j`, every `d_k` is an
//! alternating sum of `P_0, …, P_{k-1}`, so a single pass over subsets
//! (grouped by size) yields all `n` hook immanants at once.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::{cycle_type_of, hook_character, HookLabel};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::ExactMatrix;

/// Definitional sum over `S_n`. Exponential in `n`; meant as an oracle for
/// `n <= 9` or so.
pub fn immanant_bruteforce(m: &ExactMatrix, label: HookLabel) -> Result<BigInt> {
    immanant_bruteforce_with(m, label, Execution::default())
}

pub fn immanant_bruteforce_with(m: &ExactMatrix, label: HookLabel, exec: Execution) -> Result<BigInt> {
    let n = m.order();
    if !label.is_valid() {
        return Ok(BigInt::zero());
    }
    if label.size() != n as i64 {
        return Err(Error::SizeMismatch { expected: n, actual: label.size().max(0) as usize });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let partials = exec.map_range(n, |first| {
        let head = m.get(0, first);
        if head.is_zero() {
            return BigInt::zero();
        }
        let mut perm = vec![usize::MAX; n];
        perm[0] = first;
        let mut total = BigInt::zero();
        permutations_rec(m, label, 1, 1u64 << first, head.clone(), &mut perm, &mut total);
        total
    });
    Ok(partials.into_iter().sum())
}

fn permutations_rec(
    m: &ExactMatrix,
    label: HookLabel,
    row: usize,
    used: u64,
    product: BigInt,
    perm: &mut Vec<usize>,
    total: &mut BigInt,
) {
    let n = m.order();
    if row == n {
        let ct = cycle_type_of(perm).expect("complete assignment is a permutation");
        let chi = hook_character(label, &ct).expect("sizes checked by caller");
        if chi != 0 {
            *total += product * chi;
        }
        return;
    }
    for col in 0..n {
        if used >> col & 1 == 1 || m.get(row, col).is_zero() {
            continue;
        }
        perm[row] = col;
        let next = &product * m.get(row, col);
        permutations_rec(m, label, row + 1, used | 1 << col, next, perm, total);
    }
}

/// `d_k(M)` for `1 <= k <= n`.
pub fn hook_immanant(m: &ExactMatrix, k: usize) -> Result<BigInt> {
    hook_immanant_with(m, k, Execution::default())
}

pub fn hook_immanant_with(m: &ExactMatrix, k: usize, exec: Execution) -> Result<BigInt> {
    let n = m.order();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if k == 1 {
        return Ok(m.determinant());
    }
    let sums = subset_sums(m, k - 1, exec);
    Ok(alternating_tail(&sums, k))
}

/// `[d_1, …, d_n]` from one pass over all proper subsets.
pub fn hook_immanant_all(m: &ExactMatrix) -> Vec<BigInt> {
    hook_immanant_all_with(m, Execution::default())
}

pub fn hook_immanant_all_with(m: &ExactMatrix, exec: Execution) -> Vec<BigInt> {
    let n = m.order();
    if n == 0 {
        return Vec::new();
    }
    let sums = subset_sums(m, n - 1, exec);
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 1..=n {
        let d = match out.last() {
            None => sums[0].clone(),
            Some(prev) => &sums[k - 1] - prev,
        };
        out.push(d);
    }
    out
}

/// Immanant for an arbitrary (possibly degenerate) hook label: invalid labels
/// give 0 and the empty partition gives 1 on the empty matrix.
pub fn immanant_of_label(m: &ExactMatrix, label: HookLabel) -> Result<BigInt> {
    immanant_of_label_with(m, label, Execution::default())
}

pub fn immanant_of_label_with(m: &ExactMatrix, label: HookLabel, exec: Execution) -> Result<BigInt> {
    let n = m.order();
    if !label.is_valid() {
        return Ok(BigInt::zero());
    }
    if label.size() != n as i64 {
        return Err(Error::SizeMismatch { expected: n, actual: label.size().max(0) as usize });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    hook_immanant_with(m, label.arm as usize, exec)
}

/// `d_k = P_{k-1} − P_{k-2} + … ± P_0`.
fn alternating_tail(sums: &[BigInt], k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for (j, s) in sums[..k].iter().enumerate() {
        if (k - 1 - j).is_multiple_of(2) {
            acc += s;
        } else {
            acc -= s;
        }
    }
    acc
}

/// `P_j = Σ_{|α|=j} per M[α] · det M(α)` for `j = 0..=max_size`.
fn subset_sums(m: &ExactMatrix, max_size: usize, exec: Execution) -> Vec<BigInt> {
    let n = m.order();
    assert!(n < 64, "subset enumeration limited to order < 64");
    let masks: Vec<u64> = (0..1u64 << n).filter(|mask| mask.count_ones() as usize <= max_size).collect();
    let terms = exec.map_slice(&masks, |&mask| {
        let (inside, outside) = m.split_by_mask(mask);
        let det = outside.determinant();
        if det.is_zero() {
            return BigInt::zero();
        }
        inside.permanent() * det
    });
    let mut sums = vec![BigInt::zero(); max_size + 1];
    for (mask, term) in masks.iter().zip(terms) {
        sums[mask.count_ones() as usize] += term;
    }
    sums
}
