//! Type A crystal of tableaux, Demazure crystals and atoms.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::patterns::{pad_partition, weight, GtPattern, Tableau};
use crate::weyl::{all_permutations, bruhat_leq, reduced_word, Permutation};

/// Unmatched letters after cancelling `i+1 ... i` pairs in the reading word.
/// Returns positions of unmatched `i` and unmatched `i+1`, left to right.
fn signature(word: &[usize], i: usize) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new(); // unmatched i+1
    let mut lone_i = Vec::new();
    for (pos, &v) in word.iter().enumerate() {
        if v == i + 1 {
            open.push(pos);
        } else if v == i && open.pop().is_none() {
            lone_i.push(pos);
        }
    }
    (lone_i, open)
}

fn check_index(t: &Tableau, i: usize) -> bool {
    i >= 1 && i < t.rank()
}

/// Raising operator; `None` when `epsilon(t, i) == 0`.
pub fn e(t: &Tableau, i: usize) -> Option<Tableau> {
    if !check_index(t, i) {
        return None;
    }
    let mut word = t.reading_word();
    let (_, ups) = signature(&word, i);
    let &pos = ups.first()?;
    word[pos] = i;
    Some(t.with_reading_word(&word))
}

/// Lowering operator; `None` when `phi(t, i) == 0`.
pub fn f(t: &Tableau, i: usize) -> Option<Tableau> {
    if !check_index(t, i) {
        return None;
    }
    let mut word = t.reading_word();
    let (downs, _) = signature(&word, i);
    let &pos = downs.last()?;
    word[pos] = i + 1;
    Some(t.with_reading_word(&word))
}

pub fn epsilon(t: &Tableau, i: usize) -> usize {
    signature(&t.reading_word(), i).1.len()
}

pub fn phi(t: &Tableau, i: usize) -> usize {
    signature(&t.reading_word(), i).0.len()
}

pub fn wt(t: &Tableau) -> Vec<i64> {
    weight(t)
}

/// Rotate by 180 degrees, complement `a -> r + 1 - a`, rectify by jeu de taquin.
pub fn schuetzenberger(t: &Tableau) -> Tableau {
    let r = t.rank();
    let rows = t.rows();
    let width = rows[0].len();
    // skew tableau inside the r x width box; None marks inner cells
    let mut grid: Vec<Vec<Option<usize>>> = (0..r)
        .map(|a| {
            let src = &rows[r - 1 - a];
            let mut row = vec![None; width - src.len()];
            row.extend(src.iter().rev().map(|&v| Some(r + 1 - v)));
            row
        })
        .collect();
    let mut inner: Vec<usize> = (0..r).map(|a| width - rows[r - 1 - a].len()).collect();
    // an inner corner: last row whose inner part sticks out past the next one
    while let Some(a) = (0..r).rev().find(|&a| inner[a] > 0 && (a + 1 == r || inner[a + 1] < inner[a])) {
        let (mut ha, mut hb) = (a, inner[a] - 1);
        inner[a] -= 1;
        loop {
            let right = grid[ha].get(hb + 1).copied().flatten();
            let below = if ha + 1 < r { grid[ha + 1].get(hb).copied().flatten() } else { None };
            let go_below = match (right, below) {
                (None, None) => break,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(x), Some(y)) => y <= x,
            };
            if go_below {
                grid[ha][hb] = below;
                ha += 1;
            } else {
                grid[ha][hb] = right;
                hb += 1;
            }
        }
        grid[ha].truncate(hb);
    }
    let out: Vec<Vec<usize>> = grid
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.expect("rectified cell")).collect())
        .collect();
    Tableau::from_rows_unchecked(r, out)
}

/// Highest weight element `u_lambda`.
pub fn highest_weight(lambda: &[i64]) -> Result<Tableau> {
    Tableau::highest_weight(lambda, lambda.len())
}

/// `X ∪ {f_i^k x : x in X}`.
pub fn demazure_step(set: &BTreeSet<Tableau>, i: usize) -> BTreeSet<Tableau> {
    let mut out = set.clone();
    for x in set {
        let mut cur = f(x, i);
        while let Some(y) = cur {
            cur = f(&y, i);
            out.insert(y);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureSet {
    pub lambda: Vec<i64>,
    pub w: Permutation,
    pub elements: BTreeSet<Tableau>,
}

impl DemazureSet {
    pub fn character(&self) -> LaurentPolynomial {
        character(self.lambda.len(), &self.elements)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn character<'a, I: IntoIterator<Item = &'a Tableau>>(r: usize, elems: I) -> LaurentPolynomial {
    let ts = elems.into_iter().map(|t| (weight(t), 1i64));
    LaurentPolynomial::from_terms(r, ts).expect("weights have length r")
}

type CacheKey = (Vec<i64>, Permutation);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<BTreeSet<Tableau>>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<BTreeSet<Tableau>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn check_args(lambda: &[i64], w: &Permutation) -> Result<Vec<i64>> {
    if lambda.len() != w.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), got: lambda.len() });
    }
    pad_partition(lambda, lambda.len())
}

fn demazure_elements(lambda: &[i64], w: &Permutation) -> Result<Arc<BTreeSet<Tableau>>> {
    let lam = check_args(lambda, w)?;
    let key = (lam.clone(), w.clone());
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let word = reduced_word(w);
    let mut set = BTreeSet::from([highest_weight(&lam)?]);
    for &i in word.iter().rev() {
        set = demazure_step(&set, i);
    }
    let set = Arc::new(set);
    cache().write().unwrap().insert(key, set.clone());
    Ok(set)
}

/// `B_lambda(w)`, built as `𝔇_{a_1} ... 𝔇_{a_k} {u_lambda}`.
pub fn demazure_crystal(lambda: &[i64], w: &Permutation) -> Result<DemazureSet> {
    Ok(DemazureSet {
        lambda: lambda.to_vec(),
        w: w.clone(),
        elements: (*demazure_elements(lambda, w)?).clone(),
    })
}

/// `B_lambda(w)` minus every `B_lambda(y)` with `y < w`.
pub fn demazure_atom_set(lambda: &[i64], w: &Permutation) -> Result<DemazureSet> {
    let mut elements = (*demazure_elements(lambda, w)?).clone();
    for y in all_permutations(w.rank()) {
        if y != *w && bruhat_leq(&y, w)? {
            for t in demazure_elements(lambda, &y)?.iter() {
                elements.remove(t);
            }
        }
    }
    Ok(DemazureSet { lambda: lambda.to_vec(), w: w.clone(), elements })
}

/// Each column's entry set contains the next column's.
pub fn is_key(t: &Tableau) -> bool {
    let cols = t.columns();
    cols.windows(2).all(|p| p[1].iter().all(|v| p[0].contains(v)))
}

/// Raising on the pattern side: the `E_j` rule, applied to rows `i, i+1, i+2`.
///
/// Agrees with `σ ∘ e_i ∘ σ` read through the tableau bijection.
pub fn gtp_raise(a0: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    let r = a0.rank();
    if i == 0 || i >= r {
        return Err(Error::IndexOutOfRange { index: i, rank: r });
    }
    let rows = a0.rows();
    let k = r - i + 1;
    let x = |j: usize| rows[i - 1][j - 1];
    let y = |j: usize| if j < k { rows[i][j - 1] } else { 0 };
    let z = |j: usize| if j + 1 < k { rows[i + 1][j - 1] } else { 0 };
    let mut best = 0i64;
    let mut t_best = 0usize;
    let mut acc = y(k - 1) - x(k);
    if acc > best {
        best = acc;
        t_best = 1;
    }
    for j in 2..k {
        acc += (y(k - j) - z(k - j)) - (x(k - j + 1) - y(k - j + 1));
        if acc > best {
            best = acc;
            t_best = j;
        }
    }
    if t_best == 0 {
        return Ok(None);
    }
    let mut out: Vec<Vec<i64>> = rows.to_vec();
    out[i][k - t_best - 1] -= 1;
    GtPattern::new(out).map(Some)
}
