//! The colored five-vertex models.
//!
//! Geometry: rows `1..=r` top to bottom, columns `0..N` labeled right to
//! left. Horizontal slot `s` of a row sits just right of column `s`, so slot
//! `N` is the left boundary and slot `0` the right boundary. Vertical slot
//! `k` sits below row `k`; slot `0` is the top boundary, slot `r` the bottom.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::schuetzenberger;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::patterns::{gt_to_tableau, is_left_strict, pad_partition, subtract_staircase, GtPattern, Tableau};
use crate::weyl::{boundary_flag, ColorFlag, Permutation};

/// `+` or a color index `1..=r`. Serialized as `0` or `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(from = "usize", into = "usize")]
pub enum Spin {
    #[default]
    Plus,
    Color(usize),
}

impl Spin {
    pub fn color(self) -> Option<usize> {
        match self {
            Spin::Plus => None,
            Spin::Color(c) => Some(c),
        }
    }

    pub fn is_colored(self) -> bool {
        matches!(self, Spin::Color(_))
    }
}

impl From<usize> for Spin {
    fn from(v: usize) -> Self {
        if v == 0 {
            Spin::Plus
        } else {
            Spin::Color(v)
        }
    }
}

impl From<Spin> for usize {
    fn from(s: Spin) -> usize {
        s.color().unwrap_or(0)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Plus => write!(f, "+"),
            Spin::Color(c) => write!(f, "c{c}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Open,
    Closed,
    Generalized,
    Reduced,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Open => "open",
            Family::Closed => "closed",
            Family::Generalized => "generalized",
            Family::Reduced => "reduced",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Family::Open),
            "closed" => Ok(Family::Closed),
            "generalized" => Ok(Family::Generalized),
            "reduced" => Ok(Family::Reduced),
            _ => Err(Error::Precondition(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    A1,
    A21,
    A22,
    A23,
    A24,
    B1,
    B2,
    C1,
    C2,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::A1 => "a1",
            VertexKind::A21 => "a21",
            VertexKind::A22 => "a22",
            VertexKind::A23 => "a23",
            VertexKind::A24 => "a24",
            VertexKind::B1 => "b1",
            VertexKind::B2 => "b2",
            VertexKind::C1 => "c1",
            VertexKind::C2 => "c2",
        }
    }

    /// a21 and a22 are the crossings.
    pub fn is_crossing(self) -> bool {
        matches!(self, VertexKind::A21 | VertexKind::A22)
    }

    /// Kinds whose left edge is colored carry a factor z_i.
    pub fn is_weighted(self) -> bool {
        matches!(
            self,
            VertexKind::A21 | VertexKind::A22 | VertexKind::A23 | VertexKind::A24 | VertexKind::B2 | VertexKind::C1
        )
    }
}

/// A classified vertex. `colors` is sorted by index, so for the two-color
/// kinds the first entry is the greater color.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct VertexConfig {
    pub kind: VertexKind,
    pub colors: Vec<usize>,
}

/// Matches `(left, top, right, bottom)` against the nine local patterns.
pub fn classify_vertex(left: Spin, top: Spin, right: Spin, bottom: Spin) -> Result<VertexConfig> {
    use Spin::*;
    use VertexKind::*;
    let bad = |why: &str| {
        Err(Error::NonAdmissible {
            row: 0,
            col: 0,
            reason: format!("({left},{top},{right},{bottom}) {why}"),
        })
    };
    let cfg = |kind, colors| Ok(VertexConfig { kind, colors });
    match (left, top, right, bottom) {
        (Plus, Plus, Plus, Plus) => cfg(A1, vec![]),
        (Plus, Color(c), Plus, Color(d)) if c == d => cfg(B1, vec![c]),
        (Color(c), Plus, Color(d), Plus) if c == d => cfg(B2, vec![c]),
        (Color(c), Plus, Plus, Color(d)) if c == d => cfg(C1, vec![c]),
        (Plus, Color(c), Color(d), Plus) if c == d => cfg(C2, vec![c]),
        (Color(l), Color(t), Color(r), Color(b)) if l != t => {
            let (a, s) = (l.min(t), l.max(t));
            if l == r && t == b {
                cfg(if l == a { A21 } else { A22 }, vec![a, s])
            } else if l == b && t == r {
                cfg(if l == a { A23 } else { A24 }, vec![a, s])
            } else {
                bad("does not conserve colors")
            }
        }
        _ => bad("matches no pattern"),
    }
}

pub fn admissible_for(kind: VertexKind, family: Family) -> bool {
    use VertexKind::*;
    match family {
        Family::Open => !matches!(kind, A22 | A23 | B1),
        Family::Closed => !matches!(kind, A22 | A24 | B1),
        Family::Generalized => true,
        Family::Reduced => kind != B1,
    }
}

/// Boundary data of a model.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ModelSpec {
    pub lambda: Vec<i64>,
    pub w: Permutation,
    pub family: Family,
}

impl ModelSpec {
    pub fn new(lambda: &[i64], w: Permutation, family: Family) -> Result<Self> {
        if lambda.len() != w.rank() {
            return Err(Error::RankMismatch { expected: w.rank(), got: lambda.len() });
        }
        if w.rank() == 0 {
            return Err(Error::Precondition("rank must be positive".into()));
        }
        let lambda = pad_partition(lambda, w.rank())?;
        Ok(ModelSpec { lambda, w, family })
    }

    pub fn r(&self) -> usize {
        self.w.rank()
    }

    /// Number of columns, `lambda_1 + r`.
    pub fn n(&self) -> usize {
        self.lambda[0] as usize + self.r()
    }

    /// Column of color `c_i` on the top boundary: `lambda_i + r - i`.
    pub fn top_column(&self, i: usize) -> usize {
        self.lambda[i - 1] as usize + self.r() - i
    }

    pub fn flag(&self) -> ColorFlag {
        boundary_flag(&self.w)
    }

    pub fn with_w(&self, w: Permutation) -> Self {
        ModelSpec { lambda: self.lambda.clone(), w, family: self.family }
    }

    pub fn with_family(&self, family: Family) -> Self {
        ModelSpec { lambda: self.lambda.clone(), w: self.w.clone(), family }
    }
}

/// One edge of the grid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Edge {
    /// Horizontal slot `slot` in row `row` (1-based).
    H { row: usize, slot: usize },
    /// Vertical slot `vslot` in column `col`.
    V { vslot: usize, col: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeState {
    spec: ModelSpec,
    /// `r` rows of `N + 1` slots.
    horizontal: Vec<Vec<Spin>>,
    /// `r + 1` slots of `N` columns.
    vertical: Vec<Vec<Spin>>,
}

impl LatticeState {
    /// Validates dimensions, boundary data and every vertex for `spec.family`.
    pub fn new(spec: ModelSpec, horizontal: Vec<Vec<Spin>>, vertical: Vec<Vec<Spin>>) -> Result<Self> {
        let s = LatticeState { spec, horizontal, vertical };
        s.validate()?;
        Ok(s)
    }

    /// Builds a state from colored edge lists; everything else is `+`.
    pub fn from_edges(spec: ModelSpec, paths: &[(usize, Vec<Edge>)]) -> Result<Self> {
        let (r, n) = (spec.r(), spec.n());
        let mut horizontal = vec![vec![Spin::Plus; n + 1]; r];
        let mut vertical = vec![vec![Spin::Plus; n]; r + 1];
        for (c, edges) in paths {
            for e in edges {
                let slot = match *e {
                    Edge::H { row, slot } if row >= 1 && row <= r && slot <= n => &mut horizontal[row - 1][slot],
                    Edge::V { vslot, col } if vslot <= r && col < n => &mut vertical[vslot][col],
                    _ => return Err(Error::Precondition(format!("edge {e:?} is off the grid"))),
                };
                *slot = Spin::Color(*c);
            }
        }
        LatticeState::new(spec, horizontal, vertical)
    }

    pub(crate) fn new_unchecked(spec: ModelSpec, horizontal: Vec<Vec<Spin>>, vertical: Vec<Vec<Spin>>) -> Self {
        LatticeState { spec, horizontal, vertical }
    }

    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    pub fn horizontal(&self) -> &[Vec<Spin>] {
        &self.horizontal
    }

    pub fn vertical(&self) -> &[Vec<Spin>] {
        &self.vertical
    }

    /// Horizontal spin, row 1-based.
    pub fn h(&self, row: usize, slot: usize) -> Spin {
        self.horizontal[row - 1][slot]
    }

    pub fn v(&self, vslot: usize, col: usize) -> Spin {
        self.vertical[vslot][col]
    }

    pub(crate) fn set(&mut self, e: Edge, s: Spin) {
        match e {
            Edge::H { row, slot } => self.horizontal[row - 1][slot] = s,
            Edge::V { vslot, col } => self.vertical[vslot][col] = s,
        }
    }

    pub fn get(&self, e: Edge) -> Spin {
        match e {
            Edge::H { row, slot } => self.h(row, slot),
            Edge::V { vslot, col } => self.v(vslot, col),
        }
    }

    /// Spins around vertex `(row, col)` as `(left, top, right, bottom)`.
    pub fn spins_at(&self, row: usize, col: usize) -> (Spin, Spin, Spin, Spin) {
        (self.h(row, col + 1), self.v(row - 1, col), self.h(row, col), self.v(row, col))
    }

    pub fn vertex(&self, row: usize, col: usize) -> Result<VertexConfig> {
        let (l, t, r, b) = self.spins_at(row, col);
        classify_vertex(l, t, r, b).map_err(|e| match e {
            Error::NonAdmissible { reason, .. } => Error::NonAdmissible { row, col, reason },
            other => other,
        })
    }

    /// Row-major, each row left to right.
    pub fn vertex_positions(&self) -> impl Iterator<Item = (usize, usize)> {
        let (r, n) = (self.spec.r(), self.spec.n());
        (1..=r).flat_map(move |i| (0..n).rev().map(move |c| (i, c)))
    }

    /// Reads the flag off the right boundary.
    pub fn flag(&self) -> ColorFlag {
        ColorFlag { row_colors: (1..=self.spec.r()).map(|i| usize::from(self.h(i, 0))).collect() }
    }

    fn validate(&self) -> Result<()> {
        let (r, n) = (self.spec.r(), self.spec.n());
        if self.horizontal.len() != r || self.horizontal.iter().any(|row| row.len() != n + 1) {
            return Err(Error::BoundaryMismatch(format!("horizontal grid must be {r} x {}", n + 1)));
        }
        if self.vertical.len() != r + 1 || self.vertical.iter().any(|row| row.len() != n) {
            return Err(Error::BoundaryMismatch(format!("vertical grid must be {} x {n}", r + 1)));
        }
        let too_big = |s: &Spin| s.color().is_some_and(|c| c > r);
        if self.horizontal.iter().flatten().any(too_big) || self.vertical.iter().flatten().any(too_big) {
            return Err(Error::BoundaryMismatch(format!("color index above {r}")));
        }
        let mut top = vec![Spin::Plus; n];
        for i in 1..=r {
            top[self.spec.top_column(i)] = Spin::Color(i);
        }
        if self.vertical[0] != top {
            return Err(Error::BoundaryMismatch("top boundary does not match lambda + rho".into()));
        }
        if self.vertical[r].iter().any(|s| s.is_colored()) {
            return Err(Error::BoundaryMismatch("bottom boundary must be uncolored".into()));
        }
        if self.horizontal.iter().any(|row| row[n].is_colored()) {
            return Err(Error::BoundaryMismatch("left boundary must be uncolored".into()));
        }
        if self.flag() != self.spec.flag() {
            return Err(Error::BoundaryMismatch(format!(
                "right boundary {:?} does not match flag of {}",
                self.flag().row_colors,
                self.spec.w
            )));
        }
        for (i, c) in self.vertex_positions() {
            let cfg = self.vertex(i, c)?;
            if !admissible_for(cfg.kind, self.spec.family) {
                return Err(Error::NonAdmissible {
                    row: i,
                    col: c,
                    reason: format!("{} is not allowed in the {} family", cfg.kind.name(), self.spec.family),
                });
            }
        }
        if self.spec.family == Family::Reduced {
            let counts = self.crossing_counts()?;
            if let Some(((a, b), k)) = counts.iter().find(|(_, &k)| k > 1) {
                return Err(Error::NonAdmissible {
                    row: 0,
                    col: 0,
                    reason: format!("paths c{a} and c{b} cross {k} times"),
                });
            }
        }
        Ok(())
    }

    /// Crossing count per color pair `(a, b)`, `a < b`.
    pub fn crossing_counts(&self) -> Result<std::collections::BTreeMap<(usize, usize), usize>> {
        let mut out = std::collections::BTreeMap::new();
        for (i, c) in self.vertex_positions() {
            let cfg = self.vertex(i, c)?;
            if cfg.kind.is_crossing() {
                *out.entry((cfg.colors[0], cfg.colors[1])).or_insert(0) += 1;
            }
        }
        Ok(out)
    }

    /// Checks the vertices against another family without touching the boundary data.
    pub fn is_admissible_for(&self, family: Family) -> bool {
        let mut s = self.clone();
        s.spec.family = family;
        s.validate().is_ok()
    }

    /// Re-validates under another family.
    pub fn reinterpret(&self, family: Family) -> Result<Self> {
        LatticeState::new(self.spec.with_family(family), self.horizontal.clone(), self.vertical.clone())
    }

    /// Color indices on vertical slot `k`, listed left to right with their columns.
    pub fn colors_on_vslot(&self, k: usize) -> Vec<(usize, usize)> {
        (0..self.spec.n())
            .rev()
            .filter_map(|c| self.v(k, c).color().map(|x| (c, x)))
            .collect()
    }
}

/// Output candidates `(right, bottom)` given `(left, top)`.
fn candidates(left: Spin, top: Spin) -> Vec<(Spin, Spin)> {
    use Spin::*;
    match (left, top) {
        (Plus, Plus) => vec![(Plus, Plus)],
        (Color(_), Plus) => vec![(left, Plus), (Plus, left)],
        (Plus, Color(_)) => vec![(Plus, top), (top, Plus)],
        (Color(_), Color(_)) => vec![(left, top), (top, left)],
    }
}

struct Enumerator<'a> {
    spec: &'a ModelSpec,
    r: usize,
    n: usize,
    exit_row: Vec<usize>,
    horizontal: Vec<Vec<Spin>>,
    vertical: Vec<Vec<Spin>>,
    crossings: Vec<Vec<usize>>,
    out: Vec<LatticeState>,
}

impl Enumerator<'_> {
    // k counts vertices in row-major order
    fn step(&mut self, k: usize) {
        if k == self.r * self.n {
            self.out.push(LatticeState::new_unchecked(
                self.spec.clone(),
                self.horizontal.clone(),
                self.vertical.clone(),
            ));
            return;
        }
        let row = k / self.n + 1;
        let col = self.n - 1 - k % self.n;
        let left = self.horizontal[row - 1][col + 1];
        let top = self.vertical[row - 1][col];
        for (right, bottom) in candidates(left, top) {
            if col == 0 && right != Spin::Color(self.spec.flag().color_at_row(row)) {
                continue;
            }
            if let Some(c) = bottom.color() {
                if self.exit_row[c] <= row {
                    continue;
                }
            }
            let Ok(cfg) = classify_vertex(left, top, right, bottom) else { continue };
            if !admissible_for(cfg.kind, self.spec.family) {
                continue;
            }
            let pair = cfg.kind.is_crossing().then(|| (cfg.colors[0], cfg.colors[1]));
            if let Some((a, b)) = pair {
                if self.spec.family == Family::Reduced && self.crossings[a][b] >= 1 {
                    continue;
                }
                self.crossings[a][b] += 1;
            }
            self.horizontal[row - 1][col] = right;
            self.vertical[row][col] = bottom;
            self.step(k + 1);
            if let Some((a, b)) = pair {
                self.crossings[a][b] -= 1;
            }
        }
        self.horizontal[row - 1][col] = Spin::Plus;
        self.vertical[row][col] = Spin::Plus;
    }
}

/// Every admissible state, depth first in row-major vertex order.
pub fn enumerate_states(spec: &ModelSpec) -> Vec<LatticeState> {
    let (r, n) = (spec.r(), spec.n());
    let mut vertical = vec![vec![Spin::Plus; n]; r + 1];
    for i in 1..=r {
        vertical[0][spec.top_column(i)] = Spin::Color(i);
    }
    let exit_row: Vec<usize> = std::iter::once(0).chain((1..=r).map(|i| spec.w.apply(i))).collect();
    let mut e = Enumerator {
        spec,
        r,
        n,
        exit_row,
        horizontal: vec![vec![Spin::Plus; n + 1]; r],
        vertical,
        crossings: vec![vec![0; r + 1]; r + 1],
        out: Vec::new(),
    };
    e.step(0);
    e.out
}

/// The unique open state with pattern `a`, and its flag.
pub fn open_state_of_pattern(lambda: &[i64], a: &GtPattern) -> Result<(Permutation, LatticeState)> {
    let r = a.rank();
    let lam = pad_partition(lambda, r)?;
    if !is_left_strict(a) {
        return Err(Error::NotLeftStrict);
    }
    let top: Vec<i64> = lam.iter().enumerate().map(|(k, &v)| v + (r - 1 - k) as i64).collect();
    if a.top() != &top[..] {
        return Err(Error::MalformedPattern(format!("top row must be {top:?}")));
    }
    let n = lam[0] as usize + r;
    let mut horizontal = vec![vec![Spin::Plus; n + 1]; r];
    let mut vertical = vec![vec![Spin::Plus; n]; r + 1];
    for i in 1..=r {
        vertical[0][top[i - 1] as usize] = Spin::Color(i);
    }
    let mut exit = vec![0usize; r + 1];
    for i in 1..=r {
        let below: Vec<usize> = if i < r { a.rows()[i].iter().map(|&v| v as usize).collect() } else { vec![] };
        let mut carry = Spin::Plus;
        for col in (0..n).rev() {
            let top_spin = vertical[i - 1][col];
            let down = below.contains(&col);
            let (right, bottom) = match (carry, top_spin) {
                (Spin::Plus, Spin::Plus) => (Spin::Plus, Spin::Plus),
                (c, Spin::Plus) | (Spin::Plus, c) => {
                    if down {
                        (Spin::Plus, c)
                    } else {
                        (c, Spin::Plus)
                    }
                }
                // the greater color continues right
                (Spin::Color(x), Spin::Color(y)) => (Spin::Color(x.min(y)), Spin::Color(x.max(y))),
            };
            if bottom.is_colored() != down {
                return Err(Error::Invariant(format!("propagation disagrees with pattern at row {i}, column {col}")));
            }
            horizontal[i - 1][col] = right;
            vertical[i][col] = bottom;
            carry = right;
        }
        let Some(c) = carry.color() else {
            return Err(Error::Invariant(format!("no color exits row {i}")));
        };
        exit[c] = i;
    }
    let w = Permutation::new(exit[1..].to_vec())?;
    let spec = ModelSpec::new(&lam, w.clone(), Family::Open)?;
    Ok((w, LatticeState::new(spec, horizontal, vertical)?))
}

/// Row `i` lists the columns of the colored vertical edges above row `i`.
pub fn gtp_of_state(s: &LatticeState) -> Result<GtPattern> {
    let rows = (0..s.spec().r())
        .map(|k| s.colors_on_vslot(k).iter().map(|&(c, _)| c as i64).collect())
        .collect();
    GtPattern::new(rows)
}

pub fn boltzmann(s: &LatticeState) -> Result<LaurentPolynomial> {
    match s.spec().family {
        Family::Open | Family::Closed => {}
        f => return Err(Error::WeightsUndefined(f.to_string())),
    }
    let r = s.spec().r();
    let n = s.spec().n();
    let mu: Vec<i64> = (1..=r)
        .map(|i| (1..n).filter(|&slot| s.h(i, slot).is_colored()).count() as i64)
        .collect();
    Ok(LaurentPolynomial::monomial(&mu))
}

pub fn partition_function(spec: &ModelSpec) -> Result<LaurentPolynomial> {
    if !matches!(spec.family, Family::Open | Family::Closed) {
        return Err(Error::WeightsUndefined(spec.family.to_string()));
    }
    let mut z = LaurentPolynomial::zero(spec.r());
    for s in enumerate_states(spec) {
        z = &z + &boltzmann(&s)?;
    }
    Ok(z)
}

/// `σ` of the tableau of the staircase-reduced pattern.
pub fn theta(s: &LatticeState) -> Result<Tableau> {
    let a = subtract_staircase(&gtp_of_state(s)?)?;
    Ok(schuetzenberger(&gt_to_tableau(&a)?))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn h(row: usize, slots: &[usize]) -> Vec<Edge> {
        slots.iter().map(|&slot| Edge::H { row, slot }).collect()
    }

    fn v(col: usize, vslots: &[usize]) -> Vec<Edge> {
        vslots.iter().map(|&vslot| Edge::V { vslot, col }).collect()
    }

    fn cat(parts: Vec<Vec<Edge>>) -> Vec<Edge> {
        parts.into_iter().flatten().collect()
    }

    fn spec(w: &[usize], family: Family) -> ModelSpec {
        ModelSpec::new(&[3, 2, 0], Permutation::new(w.to_vec()).unwrap(), family).unwrap()
    }

    fn green() -> Vec<Edge> {
        cat(vec![v(0, &[0]), h(1, &[0])])
    }

    /// The closed state with pattern {5,3,0;3,1;1} and flag [2,3,1].
    pub fn figure_closed() -> LatticeState {
        let red = cat(vec![v(5, &[0]), h(1, &[5, 4]), v(3, &[1]), h(2, &[3, 2, 1, 0])]);
        let blue = cat(vec![v(3, &[0]), h(1, &[3, 2]), v(1, &[1, 2]), h(3, &[1, 0])]);
        LatticeState::from_edges(spec(&[2, 3, 1], Family::Closed), &[(1, red), (2, blue), (3, green())]).unwrap()
    }

    /// The open state with the same pattern and flag.
    pub fn figure_open() -> LatticeState {
        let red = cat(vec![v(5, &[0]), h(1, &[5, 4, 3, 2]), v(1, &[1]), h(2, &[1, 0])]);
        let blue = cat(vec![v(3, &[0, 1]), h(2, &[3, 2]), v(1, &[2]), h(3, &[1, 0])]);
        LatticeState::from_edges(spec(&[2, 3, 1], Family::Open), &[(1, red), (2, blue), (3, green())]).unwrap()
    }

    /// The closed state with the same pattern and flag [3,2,1].
    pub fn figure_closed_w0() -> LatticeState {
        let red = cat(vec![v(5, &[0]), h(1, &[5, 4]), v(3, &[1]), h(2, &[3, 2]), v(1, &[2]), h(3, &[1, 0])]);
        let blue = cat(vec![v(3, &[0]), h(1, &[3, 2]), v(1, &[1]), h(2, &[1, 0])]);
        LatticeState::from_edges(spec(&[3, 2, 1], Family::Closed), &[(1, red), (2, blue), (3, green())]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::laurent::{demazure_atom, demazure_char, rho};
    use crate::patterns::enumerate_left_strict;
    use crate::weyl::{all_permutations, bruhat_leq};
    use std::collections::BTreeSet;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn m(mu: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::monomial(mu)
    }

    fn spec(lam: &[i64], w: &[usize], family: Family) -> ModelSpec {
        ModelSpec::new(lam, p(w), family).unwrap()
    }

    fn strict_desk() -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for a in 1..=3 {
            for b in 0..a {
                out.push(vec![a, b]);
                for c in 0..b {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    }

    // Follows color c from the top boundary; returns the exit row or None if the path breaks.
    fn trace(s: &LatticeState, c: usize) -> Option<usize> {
        let sp = s.spec();
        let (mut row, mut col) = (1usize, sp.top_column(c));
        let mut steps = 0;
        loop {
            steps += 1;
            if steps > 4 * sp.n() * sp.r() {
                return None;
            }
            let (_, _, right, bottom) = s.spins_at(row, col);
            if right == Spin::Color(c) {
                if col == 0 {
                    return Some(row);
                }
                col -= 1;
            } else if bottom == Spin::Color(c) {
                row += 1;
                if row > sp.r() {
                    return None;
                }
            } else {
                return None;
            }
        }
    }

    #[test]
    fn classification() {
        use Spin::*;
        let k = |l, t, r, b| classify_vertex(l, t, r, b).map(|c| c.kind);
        assert_eq!(k(Plus, Plus, Plus, Plus).unwrap(), VertexKind::A1);
        let a21 = classify_vertex(Color(1), Color(2), Color(1), Color(2)).unwrap();
        assert_eq!(a21, VertexConfig { kind: VertexKind::A21, colors: vec![1, 2] });
        assert_eq!(k(Color(2), Color(1), Color(2), Color(1)).unwrap(), VertexKind::A22);
        assert_eq!(k(Color(1), Color(2), Color(2), Color(1)).unwrap(), VertexKind::A23);
        assert_eq!(k(Color(2), Color(1), Color(1), Color(2)).unwrap(), VertexKind::A24);
        assert_eq!(k(Plus, Color(1), Plus, Color(1)).unwrap(), VertexKind::B1);
        assert_eq!(k(Color(1), Plus, Color(1), Plus).unwrap(), VertexKind::B2);
        assert_eq!(k(Color(1), Plus, Plus, Color(1)).unwrap(), VertexKind::C1);
        assert_eq!(k(Plus, Color(1), Color(1), Plus).unwrap(), VertexKind::C2);
        assert!(k(Color(1), Color(2), Color(3), Color(2)).is_err());
        assert!(k(Color(1), Plus, Color(2), Plus).is_err());
        assert!(k(Color(1), Color(1), Color(1), Color(1)).is_err());
        assert!(k(Plus, Plus, Color(1), Plus).is_err());
    }

    #[test]
    fn families() {
        assert!(!admissible_for(VertexKind::A23, Family::Open));
        assert!(admissible_for(VertexKind::A23, Family::Closed));
        assert!(!admissible_for(VertexKind::A24, Family::Closed));
        assert!(!admissible_for(VertexKind::B1, Family::Reduced));
        for f in [Family::Open, Family::Closed, Family::Generalized, Family::Reduced] {
            assert!(admissible_for(VertexKind::A1, f));
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!(admissible_for(VertexKind::B1, Family::Generalized));
    }

    #[test]
    fn bootstrap_states() {
        let closed_id = enumerate_states(&spec(&[1, 0], &[1, 2], Family::Closed));
        assert_eq!(closed_id.len(), 1);
        assert_eq!(boltzmann(&closed_id[0]).unwrap(), m(&[2, 0]));
        assert_eq!(gtp_of_state(&closed_id[0]).unwrap().to_string(), "{2,0;0}");
        assert_eq!(theta(&closed_id[0]).unwrap().to_string(), "[[1]]");

        let closed = enumerate_states(&spec(&[1, 0], &[2, 1], Family::Closed));
        assert_eq!(closed.len(), 2);
        let weights: BTreeSet<_> = closed.iter().map(|s| boltzmann(s).unwrap()).collect();
        assert_eq!(weights, BTreeSet::from([m(&[2, 0]), m(&[1, 1])]));
        let open = enumerate_states(&spec(&[1, 0], &[2, 1], Family::Open));
        assert_eq!(open.len(), 1);
        assert_eq!(boltzmann(&open[0]).unwrap(), m(&[1, 1]));
        assert_eq!(theta(&open[0]).unwrap().to_string(), "[[2]]");

        let z = partition_function(&spec(&[1, 0], &[2, 1], Family::Closed)).unwrap();
        assert_eq!(z.to_string(), "z1^2 + z1*z2");
        assert_eq!(partition_function(&spec(&[1, 0], &[2, 1], Family::Open)).unwrap(), m(&[1, 1]));
    }

    #[test]
    fn weights_undefined_for_relaxed_families() {
        let sp = spec(&[1, 0], &[2, 1], Family::Generalized);
        assert!(partition_function(&sp).is_err());
        let s = &enumerate_states(&sp)[0];
        assert!(matches!(boltzmann(s), Err(Error::WeightsUndefined(_))));
    }

    #[test]
    fn highest_weight_partition_function() {
        for lam in strict_desk() {
            let r = lam.len();
            let z = partition_function(&spec(&lam, &(1..=r).collect::<Vec<_>>(), Family::Closed)).unwrap();
            assert_eq!(z, m(&lam).shift(&rho(r)));
        }
    }

    #[test]
    fn partition_identities() {
        for lam in strict_desk() {
            let r = lam.len();
            let zr = rho(r);
            for w in all_permutations(r) {
                let sp = ModelSpec::new(&lam, w.clone(), Family::Closed).unwrap();
                let closed = partition_function(&sp).unwrap();
                assert_eq!(closed, demazure_char(&lam, &w).unwrap().shift(&zr), "{lam:?} {w}");
                let open = partition_function(&sp.with_family(Family::Open)).unwrap();
                assert_eq!(open, demazure_atom(&lam, &w).unwrap().shift(&zr), "{lam:?} {w}");
                let mut sum = LaurentPolynomial::zero(r);
                for y in all_permutations(r) {
                    if bruhat_leq(&y, &w).unwrap() {
                        sum = &sum + &partition_function(&sp.with_w(y).with_family(Family::Open)).unwrap();
                    }
                }
                assert_eq!(sum, closed);
            }
        }
    }

    #[test]
    fn paths_and_crossing_laws() {
        for lam in strict_desk() {
            let r = lam.len();
            for w in all_permutations(r) {
                for family in [Family::Open, Family::Closed] {
                    for s in enumerate_states(&ModelSpec::new(&lam, w.clone(), family).unwrap()) {
                        for c in 1..=r {
                            assert_eq!(trace(&s, c), Some(w.apply(c)));
                        }
                        for (_, k) in s.crossing_counts().unwrap() {
                            assert!(k <= 1);
                        }
                        let a = gtp_of_state(&s).unwrap();
                        assert!(is_left_strict(&a));
                        assert!(s.is_admissible_for(Family::Reduced));
                    }
                }
            }
        }
    }

    #[test]
    fn open_determinism() {
        for lam in strict_desk().into_iter().chain([vec![2, 2, 0], vec![1, 1, 0], vec![0, 0]]) {
            let r = lam.len();
            let mut seen = BTreeSet::new();
            for w in all_permutations(r) {
                for s in enumerate_states(&ModelSpec::new(&lam, w.clone(), Family::Open).unwrap()) {
                    let a = gtp_of_state(&s).unwrap();
                    assert!(seen.insert(a.clone()), "two open states share {a}");
                    let (wa, built) = open_state_of_pattern(&lam, &a).unwrap();
                    assert_eq!(wa, w);
                    assert_eq!(built, s);
                }
            }
            assert_eq!(seen.len(), enumerate_left_strict(&lam, r).unwrap().len());
        }
    }

    #[test]
    fn open_state_examples() {
        let a: GtPattern = "5,3,0/3,1/1".parse().unwrap();
        let (w, s) = open_state_of_pattern(&[3, 2, 0], &a).unwrap();
        assert_eq!(w, p(&[2, 3, 1]));
        assert_eq!(s, figure_open());
        assert_eq!(open_state_of_pattern(&[1, 0], &"2,0/0".parse().unwrap()).unwrap().0, p(&[1, 2]));
        assert_eq!(open_state_of_pattern(&[1, 0], &"2,0/1".parse().unwrap()).unwrap().0, p(&[2, 1]));
        assert!(open_state_of_pattern(&[1, 0], &"1,0/0".parse().unwrap()).is_err());
    }

    #[test]
    fn figure_fixtures() {
        let a: GtPattern = "5,3,0/3,1/1".parse().unwrap();
        for s in [figure_closed(), figure_open(), figure_closed_w0()] {
            assert_eq!(gtp_of_state(&s).unwrap(), a);
        }
        let closed = enumerate_states(figure_closed().spec());
        assert!(closed.contains(&figure_closed()));
        let open = enumerate_states(figure_open().spec());
        assert!(open.contains(&figure_open()));
        assert!(!figure_closed().is_admissible_for(Family::Open));
        assert!(!figure_open().is_admissible_for(Family::Closed));
    }

    #[test]
    fn highest_weight_open_state() {
        for lam in strict_desk() {
            let r = lam.len();
            let id = Permutation::identity(r);
            let states = enumerate_states(&ModelSpec::new(&lam, id, Family::Open).unwrap());
            assert_eq!(states.len(), 1);
            let a = gtp_of_state(&states[0]).unwrap();
            for (k, row) in a.rows().iter().enumerate() {
                // c_1 .. c_k have already exited
                let want: Vec<i64> = (k..r).map(|j| lam[j] + (r - 1 - j) as i64).collect();
                assert_eq!(row, &want);
            }
        }
    }

    #[test]
    fn reduced_family_caps_crossings() {
        for lam in [vec![1, 0, 0], vec![2, 1, 0]] {
            for w in all_permutations(3) {
                let sp = ModelSpec::new(&lam, w.clone(), Family::Generalized).unwrap();
                let gen = enumerate_states(&sp);
                let red = enumerate_states(&sp.with_family(Family::Reduced));
                let want: Vec<_> = gen
                    .iter()
                    .filter(|s| {
                        s.crossing_counts().unwrap().values().all(|&k| k <= 1)
                            && s.vertex_positions().all(|(i, c)| s.vertex(i, c).unwrap().kind != VertexKind::B1)
                    })
                    .map(|s| s.reinterpret(Family::Reduced).unwrap())
                    .collect();
                assert_eq!(red, want);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_boundaries() {
        let s = figure_closed();
        let mut h = s.horizontal().to_vec();
        h[0][0] = Spin::Color(1);
        assert!(LatticeState::new(s.spec().clone(), h, s.vertical().to_vec()).is_err());
        let wrong_flag = s.spec().with_w(p(&[1, 2, 3]));
        assert!(matches!(
            LatticeState::new(wrong_flag, s.horizontal().to_vec(), s.vertical().to_vec()),
            Err(Error::BoundaryMismatch(_))
        ));
        let mut v = s.vertical().to_vec();
        v[1][3] = Spin::Plus;
        assert!(LatticeState::new(s.spec().clone(), s.horizontal().to_vec(), v).is_err());
    }

    #[test]
    fn crossing_parity_on_generalized_states() {
        // paths i < j cross an odd number of times iff (i, j) is an inversion of w0 w
        for lam in [vec![1, 0, 0], vec![2, 1, 0]] {
            for w in all_permutations(3) {
                let w0w = crate::weyl::longest_element(3).compose(&w).unwrap();
                let sp = ModelSpec::new(&lam, w.clone(), Family::Generalized).unwrap();
                for s in enumerate_states(&sp) {
                    let counts = s.crossing_counts().unwrap();
                    for i in 1..=3 {
                        for j in i + 1..=3 {
                            let k = counts.get(&(i, j)).copied().unwrap_or(0);
                            assert_eq!(k % 2 == 1, w0w.apply(i) > w0w.apply(j), "{s:?}");
                        }
                    }
                }
            }
        }
    }
}
