//! Independent oracles: everything here works from the definition over `S_n`
//! and shares no code with the library kernels.
#![allow(dead_code)]

use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens
}

pub fn sign(p: &[usize]) -> i64 {
    if cycle_lengths(p).iter().filter(|&&l| l % 2 == 0).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Hook characters from exterior powers of the standard representation:
/// `Σ_r χ_(n−r,1^r)(σ)·t^r = Π_cycles (1 − (−t)^ℓ) / (1 + t)`.
pub fn hook_char(k: usize, n: usize, cycles: &[usize]) -> i64 {
    let mut num = vec![1i64];
    for &l in cycles {
        let mut next = vec![0i64; num.len() + l];
        let c = if l % 2 == 0 { 1 } else { -1 };
        for (i, &a) in num.iter().enumerate() {
            next[i] += a;
            next[i + l] -= c * a;
        }
        num = next;
    }
    // Divide by (1 + t); the remainder is zero for n ≥ 1.
    let mut q = vec![0i64; num.len() - 1];
    let mut carry = 0;
    for i in 0..q.len() {
        q[i] = num[i] - carry;
        carry = q[i];
    }
    q[n - k]
}

pub fn product(m: &[Vec<i64>], p: &[usize]) -> i128 {
    p.iter().enumerate().map(|(i, &j)| m[i][j] as i128).product()
}

pub fn det(m: &[Vec<i64>]) -> i128 {
    permutations(m.len()).iter().map(|p| sign(p) as i128 * product(m, p)).sum()
}

pub fn per(m: &[Vec<i64>]) -> i128 {
    permutations(m.len()).iter().map(|p| product(m, p)).sum()
}

pub fn dk(m: &[Vec<i64>], k: usize) -> i128 {
    let n = m.len();
    permutations(n).iter().map(|p| hook_char(k, n, &cycle_lengths(p)) as i128 * product(m, p)).sum()
}

/// `x·I − m`.
pub fn shifted(m: &[Vec<i64>], x: i64) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| if i == j { x - v } else { -v }).collect())
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let upper = random_matrix(rng, n, bound);
    (0..n).map(|i| (0..n).map(|j| upper[i.min(j)][i.max(j)]).collect()).collect()
}

/// Edges of a G(n, p) graph or digraph.
pub fn random_edges<R: Rng>(rng: &mut R, directed: bool, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if (if directed { u != v } else { u < v }) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
