//! Dense square matrices over arbitrary-precision integers.
//!
//! Indices are 0-based. The masking constructions use the same names as the
//! matrices they build: `Entry` is `B_ij` (one entry cleared), `Symmetric` is
//! `B_[ij]` (both `(i,j)` and `(j,i)` cleared) and `Cross` is `B_(ij)` (row `i`
//! and column `j` cleared except for the entry at `(i,j)`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

/// Wire form: `{"n": 2, "entries": [["1","2"],["3","4"]]}`.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixJson> for ExactMatrix {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        if json.entries.len() != json.n {
            return Err(Error::SizeMismatch { expected: json.n, actual: json.entries.len() });
        }
        let mut entries = Vec::with_capacity(json.n * json.n);
        for (row, values) in json.entries.iter().enumerate() {
            if values.len() != json.n {
                return Err(Error::NotSquare { rows: json.n, row, len: values.len() });
            }
            for v in values {
                let parsed = v.trim().parse::<BigInt>().map_err(|_| Error::InvalidNumber(v.clone()))?;
                entries.push(parsed);
            }
        }
        Ok(ExactMatrix { n: json.n, entries })
    }
}

impl From<ExactMatrix> for MatrixJson {
    fn from(m: ExactMatrix) -> Self {
        let entries = (0..m.n).map(|i| m.row(i).iter().map(|v| v.to_string()).collect()).collect();
        MatrixJson { n: m.n, entries }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubmatrixMode {
    /// `B[α]`: rows and columns in α.
    Principal,
    /// `B(α)`: rows and columns outside α.
    Complement,
    /// `B^S_T`: rows S and columns T removed.
    Delete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaskKind {
    Entry,
    Symmetric,
    Cross,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, actual: entries.len() });
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
    {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, values) in rows.iter().enumerate() {
            if values.len() != n {
                return Err(Error::NotSquare { rows: n, row, len: values.len() });
            }
            entries.extend(values.iter().cloned().map(Into::into));
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        ExactMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn count_nonzero(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    /// `x·I − M`.
    pub fn shifted_negation(&self, x: &BigInt) -> ExactMatrix {
        let mut out = ExactMatrix { n: self.n, entries: self.entries.iter().map(|v| -v).collect() };
        for i in 0..self.n {
            out.entries[i * self.n + i] += x;
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        if let Some(small) = self.to_i128().and_then(|a| det_bareiss_i128(a, self.n)) {
            return BigInt::from(small);
        }
        det_bareiss_big(self.entries.clone(), self.n)
    }

    /// Exact permanent by Ryser inclusion–exclusion over column subsets,
    /// visiting subsets in Gray-code order so each step adds or removes one
    /// column from the running row sums.
    pub fn permanent(&self) -> BigInt {
        if let Some(small) = self.to_i128().and_then(|a| permanent_ryser_i128(&a, self.n)) {
            return BigInt::from(small);
        }
        permanent_ryser_big(&self.entries, self.n)
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.entries.iter().map(|v| v.to_i128()).collect()
    }

    pub fn submatrix(&self, mode: SubmatrixMode, rows: &[usize], cols: &[usize]) -> Result<Self> {
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        match mode {
            SubmatrixMode::Principal | SubmatrixMode::Complement if rows != cols => Err(Error::MismatchedIndexSets),
            SubmatrixMode::Principal => Ok(self.select(rows, cols)),
            SubmatrixMode::Complement => {
                let keep = complement_of(rows, self.n);
                Ok(self.select(&keep, &keep))
            }
            SubmatrixMode::Delete => Ok(self.select(&complement_of(rows, self.n), &complement_of(cols, self.n))),
        }
    }

    pub fn principal(&self, alpha: &[usize]) -> Result<Self> {
        self.submatrix(SubmatrixMode::Principal, alpha, alpha)
    }

    pub fn complement(&self, alpha: &[usize]) -> Result<Self> {
        self.submatrix(SubmatrixMode::Complement, alpha, alpha)
    }

    pub fn delete(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        self.submatrix(SubmatrixMode::Delete, rows, cols)
    }

    /// Principal submatrix on the set bits of `mask`, and its complement.
    pub(crate) fn split_by_mask(&self, mask: u64) -> (ExactMatrix, ExactMatrix) {
        let (inside, outside): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&i| mask >> i & 1 == 1);
        (self.select(&inside, &inside), self.select(&outside, &outside))
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        debug_assert_eq!(rows.len(), cols.len());
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        ExactMatrix { n: rows.len(), entries }
    }

    fn check_indices(&self, idx: &[usize]) -> Result<()> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndices(idx.to_vec()));
        }
        Ok(())
    }

    pub fn mask(&self, kind: MaskKind, i: usize, j: usize) -> Result<Self> {
        for index in [i, j] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        let mut out = self.clone();
        match kind {
            MaskKind::Entry => out.set(i, j, BigInt::zero()),
            MaskKind::Symmetric => {
                out.set(i, j, BigInt::zero());
                out.set(j, i, BigInt::zero());
            }
            MaskKind::Cross => {
                for t in 0..self.n {
                    if t != j {
                        out.set(i, t, BigInt::zero());
                    }
                }
                for s in 0..self.n {
                    if s != i {
                        out.set(s, j, BigInt::zero());
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.n {
            let cells: Vec<String> = self.row(i).iter().map(|v| format!("{:>width$}", v.to_string())).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn complement_of(idx: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| idx.binary_search(i).is_err()).collect()
}

fn det_bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for c in 0..n {
                a.swap(k * n + c, r * n + c);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i * n + j].checked_mul(pivot)?;
                let rhs = a[i * n + k].checked_mul(a[k * n + j])?;
                // exact by Sylvester's identity
                a[i * n + j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = pivot;
    }
    sign.checked_mul(a[n * n - 1])
}

fn det_bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, r * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev;
            }
        }
        prev = pivot;
    }
    let last = a.swap_remove(n * n - 1);
    if negate {
        -last
    } else {
        last
    }
}

fn permanent_ryser_i128(a: &[i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut row_sums = vec![0i128; n];
    let mut total = 0i128;
    let mut gray = 0u64;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray >> col & 1 == 1;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            let v = a[i * n + col];
            *sum = if adding { sum.checked_add(v)? } else { sum.checked_sub(v)? };
        }
        let mut prod = 1i128;
        for &s in &row_sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod = prod.checked_mul(s)?;
        }
        if (n - gray.count_ones() as usize) % 2 == 1 {
            total = total.checked_sub(prod)?;
        } else {
            total = total.checked_add(prod)?;
        }
    }
    Some(total)
}

fn permanent_ryser_big(a: &[BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray = 0u64;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray >> col & 1 == 1;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            if adding {
                *sum += &a[i * n + col];
            } else {
                *sum -= &a[i * n + col];
            }
        }
        if row_sums.iter().any(Zero::is_zero) {
            continue;
        }
        let prod = row_sums.iter().fold(BigInt::one(), |acc, s| acc * s);
        if (n - gray.count_ones() as usize) % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn b4() -> ExactMatrix {
        // b_st = 10·s + t in 1-based labels, so every entry is distinguishable.
        let rows: Vec<Vec<i64>> = (1..=4).map(|s| (1..=4).map(|t| 10 * s + t).collect()).collect();
        ExactMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(ExactMatrix::identity(3).determinant(), BigInt::from(1));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant(), BigInt::from(-2));
        assert_eq!(m(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]).determinant(), BigInt::from(16));
        assert_eq!(ExactMatrix::zeros(0).determinant(), BigInt::from(1));
    }

    #[test]
    fn determinant_needs_pivoting() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 2], &[0, 3]]).determinant(), BigInt::from(0));
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(ExactMatrix::identity(3).permanent(), BigInt::from(1));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).permanent(), BigInt::from(2));
        assert_eq!(m(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]).permanent(), BigInt::from(34));
        assert_eq!(ExactMatrix::zeros(0).permanent(), BigInt::from(1));
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let huge = BigInt::from(i128::MAX) * BigInt::from(4);
        let a = ExactMatrix::from_rows(&[vec![huge.clone(), BigInt::from(1)], vec![BigInt::from(1), huge.clone()]])
            .unwrap();
        assert_eq!(a.determinant(), &huge * &huge - 1);
        assert_eq!(a.permanent(), &huge * &huge + 1);
        // i128 overflow midway through elimination
        let big = BigInt::from(1u64 << 62);
        let rows: Vec<Vec<BigInt>> =
            (0..4).map(|i| (0..4).map(|j| &big * (i + 1) + BigInt::from((i * j) as i64)).collect()).collect();
        let c = ExactMatrix::from_rows(&rows).unwrap();
        assert_eq!(det_bareiss_big(c.entries.clone(), 4), c.determinant());
        assert_eq!(permanent_ryser_big(&c.entries, 4), c.permanent());
    }

    #[test]
    fn submatrix_examples() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.principal(&[0, 2]).unwrap(), m(&[&[1, 3], &[7, 9]]));
        assert_eq!(a.complement(&[0]).unwrap(), m(&[&[5, 6], &[8, 9]]));
        assert_eq!(a.delete(&[0], &[1]).unwrap(), m(&[&[4, 6], &[7, 9]]));
        assert_eq!(a.principal(&[]).unwrap().order(), 0);
    }

    #[test]
    fn submatrix_errors() {
        let a = ExactMatrix::identity(3);
        assert_eq!(a.principal(&[3]), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
        assert_eq!(a.principal(&[1, 1]), Err(Error::UnsortedIndices(vec![1, 1])));
        assert_eq!(a.principal(&[2, 0]), Err(Error::UnsortedIndices(vec![2, 0])));
        assert_eq!(a.submatrix(SubmatrixMode::Complement, &[0], &[1]), Err(Error::MismatchedIndexSets));
    }

    #[test]
    fn masks_match_displayed_examples() {
        let b = b4();
        let e = b.mask(MaskKind::Entry, 0, 0).unwrap();
        for s in 0..4 {
            for t in 0..4 {
                let want = if (s, t) == (0, 0) { BigInt::zero() } else { b.get(s, t).clone() };
                assert_eq!(e.get(s, t), &want);
            }
        }

        let sym = b.mask(MaskKind::Symmetric, 1, 2).unwrap();
        for s in 0..4 {
            for t in 0..4 {
                let cleared = (s, t) == (1, 2) || (s, t) == (2, 1);
                let want = if cleared { BigInt::zero() } else { b.get(s, t).clone() };
                assert_eq!(sym.get(s, t), &want);
            }
        }

        // B_(23) in 1-based labels: row 2 is [0 0 b23 0], column 3 is zero elsewhere.
        let cross = b.mask(MaskKind::Cross, 1, 2).unwrap();
        let want = m(&[&[11, 12, 0, 14], &[0, 0, 23, 0], &[31, 32, 0, 34], &[41, 42, 0, 44]]);
        assert_eq!(cross, want);
        let cross11 = b.mask(MaskKind::Cross, 0, 0).unwrap();
        assert_eq!(cross11.row(0), &[11, 0, 0, 0].map(BigInt::from)[..]);
    }

    #[test]
    fn mask_out_of_range() {
        assert!(ExactMatrix::identity(2).mask(MaskKind::Cross, 0, 2).is_err());
    }

    #[test]
    fn json_uses_decimal_strings() {
        let a = m(&[&[1, -2], &[3, 4]]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"n":2,"entries":[["1","-2"],["3","4"]]}"#);
        let back: ExactMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        let big = r#"{"n":1,"entries":[["123456789012345678901234567890"]]}"#;
        let parsed: ExactMatrix = serde_json::from_str(big).unwrap();
        assert_eq!(parsed.get(0, 0).to_string(), "123456789012345678901234567890");
        assert!(serde_json::from_str::<ExactMatrix>(r#"{"n":2,"entries":[["1","2"]]}"#).is_err());
        assert!(serde_json::from_str::<ExactMatrix>(r#"{"n":1,"entries":[["x"]]}"#).is_err());
    }

    #[test]
    fn shifted_negation_is_x_minus_m() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.shifted_negation(&BigInt::from(3)), m(&[&[3, -1], &[-1, 3]]));
    }
}
