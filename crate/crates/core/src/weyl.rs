//! The symmetric group S_r in one-line notation.
//!
//! Cycle notation only shows up in a few worked examples, so everything here
//! speaks one-line arrays. For S_3:
//!
//! | cycle     | one-line  |
//! |-----------|-----------|
//! | ()        | [1,2,3]   |
//! | (1 2)     | [2,1,3]   |
//! | (2 3)     | [1,3,2]   |
//! | (1 2 3)   | [2,3,1]   |
//! | (1 3 2)   | [3,1,2]   |
//! | (1 3)     | [3,2,1]   |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..r}`; entry `i-1` holds `w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let r = one_line.len();
        let mut seen = vec![false; r + 1];
        for &v in &one_line {
            if v == 0 || v > r || seen[v] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(r: usize) -> Self {
        Permutation((1..=r).collect())
    }

    /// The simple reflection s_i swapping i and i+1.
    pub fn simple(r: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= r {
            return Err(Error::IndexOutOfRange { index: i, rank: r });
        }
        Self::transposition(r, i, i + 1)
    }

    /// The transposition (i j).
    pub fn transposition(r: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > r || j > r || i == j {
            return Err(Error::Precondition(format!(
                "({i} {j}) is not a transposition in S_{r}"
            )));
        }
        let mut v: Vec<usize> = (1..=r).collect();
        v.swap(i - 1, j - 1);
        Ok(Permutation(v))
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[1, 2, 3]]` is [2,3,1].
    pub fn from_cycles(r: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut v: Vec<usize> = (1..=r).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > r || b == 0 || b > r {
                    return Err(Error::Precondition(format!("cycle entry out of range in S_{r}")));
                }
                v[a - 1] = b;
            }
        }
        Permutation::new(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.rank()];
        for (k, &x) in self.0.iter().enumerate() {
            v[x - 1] = k + 1;
        }
        Permutation(v)
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        check_rank(self, other)?;
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub fn length(&self) -> usize {
        length(self)
    }

    /// Pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let r = self.rank();
        let mut out = Vec::new();
        for i in 1..=r {
            for j in i + 1..=r {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True iff l(s_i w) < l(w).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// True iff l(w s_i) < l(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_rank(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { expected: a.rank(), got: b.rank() });
    }
    Ok(())
}

/// Which color sits on each row of the right boundary.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ColorFlag {
    /// `row_colors[k]` is the color index on row `k+1`.
    pub row_colors: Vec<usize>,
}

impl ColorFlag {
    pub fn color_at_row(&self, row: usize) -> usize {
        self.row_colors[row - 1]
    }
}

pub fn length(w: &Permutation) -> usize {
    let v = &w.0;
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                n += 1;
            }
        }
    }
    n
}

/// Bruhat order via the dot-rank criterion: `y <= w` iff
/// `#{a <= i : y(a) >= j} <= #{a <= i : w(a) >= j}` for all `i, j`.
pub fn bruhat_leq(y: &Permutation, w: &Permutation) -> Result<bool> {
    check_rank(y, w)?;
    let r = y.rank();
    for j in 1..=r {
        let (mut cy, mut cw) = (0usize, 0usize);
        for i in 0..r {
            if y.0[i] >= j {
                cy += 1;
            }
            if w.0[i] >= j {
                cw += 1;
            }
            if cy > cw {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn longest_element(r: usize) -> Permutation {
    Permutation((1..=r).rev().collect())
}

/// A reduced word `[a_1, ..., a_k]` with `w = s_{a_1} s_{a_2} ... s_{a_k}`.
///
/// Peels off the smallest left descent each step.
pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    let r = w.rank();
    let mut cur = w.clone();
    let mut word = Vec::with_capacity(length(w));
    while !cur.is_identity() {
        let i = (1..r)
            .find(|&i| cur.has_left_descent(i))
            .expect("non-identity permutation has a left descent");
        word.push(i);
        // s_i * cur swaps the values i and i+1
        for v in cur.0.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    word
}

/// Product `s_{a_1} ... s_{a_k}` of a word.
pub fn word_product(r: usize, word: &[usize]) -> Result<Permutation> {
    let mut p = Permutation::identity(r);
    for &i in word {
        p = p.compose(&Permutation::simple(r, i)?)?;
    }
    Ok(p)
}

/// All of S_r in lexicographic order of one-line notation.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(Permutation(cur.clone()));
        // next lexicographic permutation
        let Some(k) = (0..r.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            break;
        };
        let l = (k + 1..r).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

/// Stabilizer of a weakly decreasing vector: permutations of the equal-part blocks.
pub fn stabilizer(lambda: &[i64]) -> Vec<Permutation> {
    let r = lambda.len();
    all_permutations(r)
        .into_iter()
        .filter(|u| (1..=r).all(|i| lambda[u.apply(i) - 1] == lambda[i - 1]))
        .collect()
}

/// The longest element of `w W_lambda`.
pub fn coset_longest(w: &Permutation, lambda: &[i64]) -> Result<Permutation> {
    if lambda.len() != w.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), got: lambda.len() });
    }
    let mut best = w.clone();
    for u in stabilizer(lambda) {
        let c = w.compose(&u)?;
        if length(&c) > length(&best) {
            best = c;
        }
    }
    Ok(best)
}

/// The shortest element of `w W_lambda`.
pub fn coset_shortest(w: &Permutation, lambda: &[i64]) -> Result<Permutation> {
    if lambda.len() != w.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), got: lambda.len() });
    }
    let mut best = w.clone();
    for u in stabilizer(lambda) {
        let c = w.compose(&u)?;
        if length(&c) < length(&best) {
            best = c;
        }
    }
    Ok(best)
}

/// Color `c_i` sits on row `w(i)`.
pub fn boundary_flag(w: &Permutation) -> ColorFlag {
    ColorFlag { row_colors: w.inverse().0 }
}

/// Inverse of [`boundary_flag`].
pub fn flag_permutation(flag: &ColorFlag) -> Result<Permutation> {
    Ok(Permutation::new(flag.row_colors.clone())?.inverse())
}
