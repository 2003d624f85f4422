//! Gelfand-Tsetlin patterns and semistandard tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Triangular array; row `i` (1-based from the top) has `r - i + 1` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    /// Checks row lengths, weak decrease along rows and interleaving.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::MalformedPattern("empty pattern".into()));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != r - k {
                return Err(Error::MalformedPattern(format!(
                    "row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    r - k
                )));
            }
        }
        for k in 0..r - 1 {
            let (x, y) = (&rows[k], &rows[k + 1]);
            for j in 0..y.len() {
                if !(x[j] >= y[j] && y[j] >= x[j + 1]) {
                    return Err(Error::MalformedPattern(format!(
                        "rows {} and {} do not interleave at position {}",
                        k + 1,
                        k + 2,
                        j + 1
                    )));
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn top(&self) -> &[i64] {
        &self.rows[0]
    }

    /// `A_{i,j}`, both 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }
}

impl TryFrom<Vec<Vec<i64>>> for GtPattern {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        GtPattern::new(rows)
    }
}

impl From<GtPattern> for Vec<Vec<i64>> {
    fn from(p: GtPattern) -> Self {
        p.rows
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", rows.join(";"))
    }
}

impl fmt::Debug for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `5,3,0/3,1/1` or `{5,3,0;3,1;1}`.
impl FromStr for GtPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let rows = body
            .split(['/', ';'])
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::MalformedPattern(format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GtPattern::new(rows)
    }
}

/// A semistandard tableau in the alphabet `1..=rank`. Always holds exactly
/// `rank` rows, trailing ones possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(t: TableauRepr) -> Result<Self> {
        Tableau::new(t.rank, t.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        let mut rows = t.rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        TableauRepr { rank: t.rank, rows }
    }
}

impl Tableau {
    pub fn new(rank: usize, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > rank && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > rank {
            return Err(Error::InvalidTableau(format!("more than {rank} rows")));
        }
        rows.resize(rank, Vec::new());
        for (k, row) in rows.iter().enumerate() {
            if row.iter().any(|&v| v == 0 || v > rank) {
                return Err(Error::InvalidTableau(format!("row {} has entries outside 1..={rank}", k + 1)));
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not weakly increasing", k + 1)));
            }
            if k > 0 {
                let above = &rows[k - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau("shape is not a partition".into()));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!("column strictness fails in row {}", k + 1)));
                }
            }
        }
        Ok(Tableau { rank, rows })
    }

    /// Row `i` filled with `i`.
    pub fn highest_weight(lambda: &[i64], rank: usize) -> Result<Self> {
        let lam = pad_partition(lambda, rank)?;
        let rows = lam
            .iter()
            .enumerate()
            .map(|(k, &n)| vec![k + 1; n as usize])
            .collect();
        Tableau::new(rank, rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.len() as i64).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|c| self.rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// Rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Refills the shape from a reading word. Used by the crystal operators.
    pub(crate) fn with_reading_word(&self, word: &[usize]) -> Self {
        let mut rows = self.rows.clone();
        let mut it = word.iter();
        for row in rows.iter_mut().rev() {
            for v in row.iter_mut() {
                *v = *it.next().unwrap();
            }
        }
        Tableau { rank: self.rank, rows }
    }

    pub(crate) fn from_rows_unchecked(rank: usize, rows: Vec<Vec<usize>>) -> Self {
        Tableau { rank, rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Pads with zeros to length `r`; rejects non-partitions.
pub fn pad_partition(lambda: &[i64], r: usize) -> Result<Vec<i64>> {
    let mut lam = lambda.to_vec();
    while lam.len() > r && lam.last() == Some(&0) {
        lam.pop();
    }
    if lam.len() > r || lam.iter().any(|&v| v < 0) || lam.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidPartition(lambda.to_vec()));
    }
    lam.resize(r, 0);
    Ok(lam)
}

/// `A_{i,j} > A_{i+1,j} >= A_{i,j+1}` everywhere.
pub fn is_left_strict(a: &GtPattern) -> bool {
    a.rows.windows(2).all(|p| (0..p[1].len()).all(|j| p[0][j] > p[1][j]))
}

/// Row `k` of the pattern is the shape of the entries `<= r - k + 1`.
pub fn gt_to_tableau(a: &GtPattern) -> Result<Tableau> {
    let r = a.rank();
    if a.top().iter().any(|&v| v < 0) {
        return Err(Error::MalformedPattern("negative entries have no tableau".into()));
    }
    let mut rows = vec![Vec::new(); r];
    for v in 1..=r {
        let shape = &a.rows[r - v];
        for (j, &n) in shape.iter().enumerate() {
            let prev = if j + 1 < v { a.rows[r - v + 1][j] } else { 0 };
            for _ in prev..n {
                rows[j].push(v);
            }
        }
    }
    Tableau::new(r, rows)
}

pub fn tableau_to_gt(t: &Tableau) -> GtPattern {
    let r = t.rank();
    let rows = (0..r)
        .map(|k| {
            let v = r - k;
            (0..v)
                .map(|j| t.rows[j].iter().filter(|&&x| x <= v).count() as i64)
                .collect()
        })
        .collect();
    GtPattern { rows }
}

fn shift_staircase(a: &GtPattern, sign: i64) -> Vec<Vec<i64>> {
    a.rows
        .iter()
        .map(|row| {
            let n = row.len() as i64;
            row.iter()
                .enumerate()
                .map(|(j, &v)| v + sign * (n - 1 - j as i64))
                .collect()
        })
        .collect()
}

/// Left-strict pattern with top `lambda + rho` to the weak pattern with top `lambda`.
pub fn subtract_staircase(a: &GtPattern) -> Result<GtPattern> {
    if !is_left_strict(a) {
        return Err(Error::NotLeftStrict);
    }
    GtPattern::new(shift_staircase(a, -1))
}

/// Inverse of [`subtract_staircase`].
pub fn add_staircase(a: &GtPattern) -> GtPattern {
    GtPattern { rows: shift_staircase(a, 1) }
}

pub fn weight(t: &Tableau) -> Vec<i64> {
    let mut mu = vec![0; t.rank()];
    for &v in t.rows.iter().flatten() {
        mu[v - 1] += 1;
    }
    mu
}

/// Every weak pattern with the given top row, in lexicographic order of rows.
pub fn enumerate_gt(top: &[i64]) -> Result<Vec<GtPattern>> {
    if top.is_empty() || top.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::MalformedPattern(format!("top row {top:?} is not weakly decreasing")));
    }
    let mut out = Vec::new();
    let mut rows = vec![top.to_vec()];
    extend_rows(&mut rows, &mut out);
    Ok(out)
}

fn extend_rows(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
    let x = rows.last().unwrap().clone();
    if x.len() == 1 {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    let mut y = vec![0; x.len() - 1];
    fill(&x, &mut y, 0, rows, out);
}

fn fill(x: &[i64], y: &mut Vec<i64>, j: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
    if j == y.len() {
        rows.push(y.clone());
        extend_rows(rows, out);
        rows.pop();
        return;
    }
    for v in x[j + 1]..=x[j] {
        y[j] = v;
        fill(x, y, j + 1, rows, out);
    }
}

/// All SSYT of shape `lambda` with entries at most `r`, sorted.
pub fn enumerate_ssyt(lambda: &[i64], r: usize) -> Result<Vec<Tableau>> {
    let lam = pad_partition(lambda, r)?;
    let mut out = enumerate_gt(&lam)?
        .iter()
        .map(gt_to_tableau)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// All left-strict patterns with top row `lambda + rho`.
pub fn enumerate_left_strict(lambda: &[i64], r: usize) -> Result<Vec<GtPattern>> {
    if lambda.len() != r {
        return Err(Error::RankMismatch { expected: r, got: lambda.len() });
    }
    let lam = pad_partition(lambda, r)?;
    Ok(enumerate_gt(&lam)?.iter().map(add_staircase).collect())
}
