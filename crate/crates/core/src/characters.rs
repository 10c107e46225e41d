//! Irreducible characters of `S_n` indexed by hook partitions.
//!
//! A hook `(a, 1^b)` has an arm of `a` cells (corner included) and `b` leg
//! cells below the corner. Character values come from the
//! Murnaghan–Nakayama rule: peel the largest cycle length `ℓ`, remove every
//! border strip of length `ℓ` and recurse with sign `(-1)^height`. For a hook
//! there are at most three candidate strips: the last `ℓ` arm cells, the last
//! `ℓ` leg cells, or the whole hook.
//!
//! Labels outside the partition lattice are kept around on purpose: the
//! deletion identities mention `(k-2, 1^{n-k})` and `(k, 1^{n-k-2})`
//! unconditionally, and those are only partitions for part of the range of
//! `k`. Such labels are *invalid* and their character (and immanant) is `0`.
//! The two size-0 labels that arise from a genuine domino removal, `(0, 1^0)`
//! (the row `(2)` minus a horizontal domino) and `(1, 1^-1)` (the column
//! `(1,1)` minus a vertical one), both denote the empty partition.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookLabel {
    pub arm: i64,
    pub legs: i64,
}

impl HookLabel {
    pub const EMPTY: HookLabel = HookLabel { arm: 0, legs: 0 };

    pub fn new(arm: i64, legs: i64) -> Self {
        HookLabel { arm, legs }
    }

    /// `(k, 1^{n-k})`, the label behind `d_k` on `n×n` matrices.
    pub fn for_k(k: usize, n: usize) -> Self {
        HookLabel { arm: k as i64, legs: n as i64 - k as i64 }
    }

    pub fn size(&self) -> i64 {
        self.arm + self.legs
    }

    pub fn is_empty_partition(&self) -> bool {
        matches!((self.arm, self.legs), (0, 0) | (1, -1))
    }

    pub fn is_valid(&self) -> bool {
        (self.arm >= 1 && self.legs >= 0) || self.is_empty_partition()
    }

    /// Distinct partitions reachable by deleting one corner cell.
    ///
    /// For `n >= 2` this is exactly the non-zero part of
    /// `{(a, 1^{b-1}), (a-1, 1^b)}`; for the single cell it is the empty
    /// partition once.
    pub fn remove_box(&self) -> Vec<HookLabel> {
        if !self.is_valid() || self.is_empty_partition() {
            return Vec::new();
        }
        if self.size() == 1 {
            return vec![HookLabel::EMPTY];
        }
        [HookLabel::new(self.arm, self.legs - 1), HookLabel::new(self.arm - 1, self.legs)]
            .into_iter()
            .filter(HookLabel::is_valid)
            .collect()
    }

    fn canonical(&self) -> HookLabel {
        if self.is_empty_partition() {
            HookLabel::EMPTY
        } else {
            *self
        }
    }
}

impl fmt::Display for HookLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},1^{})", self.arm, self.legs)
    }
}

/// Cycle lengths of a permutation, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn identity(n: usize) -> Self {
        CycleType { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Removes one part equal to `len` (a fixed point for 1, a transposition for 2).
    pub fn without_part(&self, len: usize) -> Option<CycleType> {
        let pos = self.parts.iter().position(|&p| p == len)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(CycleType { parts })
    }

    pub fn with_part(&self, len: usize) -> CycleType {
        let mut parts = self.parts.clone();
        parts.push(len);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

thread_local! {
    static MEMO: RefCell<HashMap<(HookLabel, Vec<usize>), i64>> = RefCell::new(HashMap::new());
}

/// `χ_(a,1^b)` on the conjugacy class with the given cycle type.
pub fn hook_character(label: HookLabel, cycle_type: &CycleType) -> Result<i64> {
    if !label.is_valid() {
        return Ok(0);
    }
    if label.size() as usize != cycle_type.size() {
        return Err(Error::SizeMismatch { expected: label.size() as usize, actual: cycle_type.size() });
    }
    Ok(character_rec(label.canonical(), &cycle_type.parts))
}

fn character_rec(label: HookLabel, parts: &[usize]) -> i64 {
    let Some((&len, rest)) = parts.split_first() else {
        return 1;
    };
    let key = (label, parts.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let len = len as i64;
    let (a, b) = (label.arm, label.legs);
    let mut total = 0;
    if len < a {
        total += character_rec(HookLabel::new(a - len, b), rest);
    }
    if len <= b {
        let v = character_rec(HookLabel::new(a, b - len), rest);
        total += if (len - 1) % 2 == 0 { v } else { -v };
    }
    if len == a + b {
        let v = character_rec(HookLabel::EMPTY, rest);
        total += if b % 2 == 0 { v } else { -v };
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// Degree of the hook character: `C(n-1, a-1)`.
pub fn hook_dimension(label: HookLabel) -> Result<BigInt> {
    if !label.is_valid() {
        return Err(Error::InvalidLabel { arm: label.arm, legs: label.legs });
    }
    if label.is_empty_partition() {
        return Ok(BigInt::from(1));
    }
    Ok(binomial(BigInt::from(label.size() - 1), BigInt::from(label.arm - 1)))
}

pub fn cycle_type_of(perm: &[usize]) -> Result<CycleType> {
    let n = perm.len();
    let mut seen = vec![false; n];
    if perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::NotAPermutation(n));
    }
    seen.fill(false);
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CycleType { parts })
}
