//! Surgery on states: moving crossings, converting between open and closed
//! states, raising the flag along Bruhat covers, and the permutation τ.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{gtp_of_state, open_state_of_pattern, Edge, Family, LatticeState, ModelSpec, Spin};
use crate::patterns::GtPattern;
use crate::weyl::{bruhat_leq, length, Permutation};

/// A vertex as `(row, col)`.
pub type Vertex = (usize, usize);

/// The colored paths of a state and where they meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDiagram {
    /// `paths[c - 1]` lists the edges of color `c` from the top boundary to the right boundary.
    pub paths: Vec<Vec<Edge>>,
    /// Two-color vertices per pair `(a, b)`, `a < b`, in path order.
    pub intersections: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// The subset of intersections that are a21 or a22.
    pub crossings: BTreeMap<(usize, usize), Vec<Vertex>>,
}

impl PathDiagram {
    pub fn of(s: &LatticeState) -> Result<Self> {
        let sp = s.spec();
        let (r, n) = (sp.r(), sp.n());
        let mut paths = Vec::with_capacity(r);
        for c in 1..=r {
            let color = Spin::Color(c);
            let (mut row, mut col) = (1usize, sp.top_column(c));
            let mut edges = vec![Edge::V { vslot: 0, col }];
            loop {
                let (_, _, right, bottom) = s.spins_at(row, col);
                if right == color {
                    edges.push(Edge::H { row, slot: col });
                    if col == 0 {
                        break;
                    }
                    col -= 1;
                } else if bottom == color {
                    edges.push(Edge::V { vslot: row, col });
                    row += 1;
                    if row > r {
                        return Err(Error::Invariant(format!("path c{c} reaches the bottom boundary")));
                    }
                } else {
                    return Err(Error::Invariant(format!("path c{c} breaks at ({row}, {col})")));
                }
                if edges.len() > 2 * (r + n) {
                    return Err(Error::Invariant(format!("path c{c} does not terminate")));
                }
            }
            paths.push(edges);
        }
        let mut intersections: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
        let mut crossings: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
        for (i, c) in s.vertex_positions() {
            let cfg = s.vertex(i, c)?;
            if cfg.colors.len() == 2 {
                let key = (cfg.colors[0], cfg.colors[1]);
                intersections.entry(key).or_default().push((i, c));
                if cfg.kind.is_crossing() {
                    crossings.entry(key).or_default().push((i, c));
                }
            }
        }
        Ok(PathDiagram { paths, intersections, crossings })
    }

    pub fn intersections_of(&self, a: usize, b: usize) -> &[Vertex] {
        self.intersections.get(&(a.min(b), a.max(b))).map_or(&[], |v| v.as_slice())
    }

    pub fn crossings_of(&self, a: usize, b: usize) -> &[Vertex] {
        self.crossings.get(&(a.min(b), a.max(b))).map_or(&[], |v| v.as_slice())
    }

    /// Pairs that cross at least once.
    pub fn crossing_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.crossings.iter().filter(|(_, v)| !v.is_empty()).map(|(k, _)| *k).collect()
    }
}

/// Re-routes colors `a` and `b` over their combined edge set. At a vertex
/// where both arrive they cross iff `cross(v)`, otherwise each turns.
/// Other colors are untouched. The result is not validated.
fn recolor_pair(s: &LatticeState, a: usize, b: usize, cross: impl Fn(Vertex) -> bool) -> LatticeState {
    let mine = |x: Spin| x == Spin::Color(a) || x == Spin::Color(b);
    let mut out = s.clone();
    let positions: Vec<Vertex> = s.vertex_positions().collect();
    for (row, col) in positions {
        let (_, _, old_r, old_b) = s.spins_at(row, col);
        let (left, top, _, _) = out.spins_at(row, col);
        let right_e = Edge::H { row, slot: col };
        let bottom_e = Edge::V { vslot: row, col };
        match (mine(left), mine(top)) {
            (true, true) => {
                let (r, b) = if cross((row, col)) { (left, top) } else { (top, left) };
                out.set(right_e, r);
                out.set(bottom_e, b);
            }
            (true, false) | (false, true) => {
                let x = if mine(left) { left } else { top };
                if mine(old_r) {
                    out.set(right_e, x);
                } else if mine(old_b) {
                    out.set(bottom_e, x);
                }
            }
            (false, false) => {}
        }
    }
    out
}

fn flag_of(s: &LatticeState) -> Result<Permutation> {
    crate::weyl::flag_permutation(&s.flag())
}

fn rebuild(s: &LatticeState, w: Permutation, family: Family) -> Result<LatticeState> {
    let spec = ModelSpec::new(&s.spec().lambda, w, family)?;
    LatticeState::new(spec, s.horizontal().to_vec(), s.vertical().to_vec())
}

/// Moves the single crossing of `p_i`, `p_j` to `target`, one of their intersections.
pub fn move_crossing(s: &LatticeState, i: usize, j: usize, target: Vertex) -> Result<LatticeState> {
    let s = s.reinterpret(Family::Reduced)?;
    let pd = PathDiagram::of(&s)?;
    let (a, b) = (i.min(j), i.max(j));
    if pd.crossings_of(a, b).len() != 1 {
        return Err(Error::Precondition(format!(
            "paths c{a} and c{b} cross {} times, expected once",
            pd.crossings_of(a, b).len()
        )));
    }
    if !pd.intersections_of(a, b).contains(&target) {
        return Err(Error::Precondition(format!("{target:?} is not an intersection of c{a} and c{b}")));
    }
    let moved = recolor_pair(&s, a, b, |v| v == target);
    let out = rebuild(&moved, s.spec().w.clone(), Family::Reduced)
        .map_err(|e| Error::Invariant(format!("moving the c{a}/c{b} crossing broke the state: {e}")))?;
    let after = PathDiagram::of(&out)?;
    if after.crossing_pairs() != pd.crossing_pairs() {
        return Err(Error::Invariant("moving a crossing changed which pairs cross".into()));
    }
    Ok(out)
}

fn normalize(s: &LatticeState, last: bool, family: Family) -> Result<LatticeState> {
    let mut cur = s.reinterpret(Family::Reduced)?;
    let sp = s.spec();
    let budget = sp.r() * sp.r() * sp.r() * sp.n() + 1;
    for _ in 0..budget {
        let pd = PathDiagram::of(&cur)?;
        let pending = pd.crossings.iter().find_map(|(&(a, b), xs)| {
            let inter = pd.intersections_of(a, b);
            let want = if last { *inter.last()? } else { inter[0] };
            (xs.len() == 1 && xs[0] != want).then_some((a, b, want))
        });
        match pending {
            Some((a, b, want)) => cur = move_crossing(&cur, a, b, want)?,
            None => {
                return cur.reinterpret(family).map_err(|e| {
                    let msg = format!("adjustment ended in a state that is not {family}: {e}");
                    // paths that touch without crossing cannot be opened
                    if family == Family::Open {
                        Error::Precondition(msg)
                    } else {
                        Error::Invariant(msg)
                    }
                })
            }
        }
    }
    Err(Error::Invariant("adjustment did not terminate".into()))
}

/// Moves every crossing to its last intersection.
pub fn to_closed(s: &LatticeState) -> Result<LatticeState> {
    normalize(s, true, Family::Closed)
}

/// Moves every crossing to its first intersection. Fails unless the flag
/// is the one of the open state with the same pattern.
pub fn to_open(s: &LatticeState) -> Result<LatticeState> {
    normalize(s, false, Family::Open)
}

/// Undoes the crossing of `p_i`, `p_j` so that the two colors trade exit
/// rows. The flag goes from `w` to `w (i j)`, which must be one longer.
/// The result is reduced; follow with [`to_closed`] for a closed state.
pub fn raise_flag(s: &LatticeState, i: usize, j: usize) -> Result<LatticeState> {
    let (a, b) = (i.min(j), i.max(j));
    let r = s.spec().r();
    if a == b || b > r || a == 0 {
        return Err(Error::Precondition(format!("({i} {j}) is not a transposition in S_{r}")));
    }
    if !s.is_admissible_for(Family::Closed) {
        return Err(Error::Precondition("raise_flag needs a closed state".into()));
    }
    let w = s.spec().w.clone();
    let y = w.compose(&Permutation::transposition(r, a, b)?)?;
    if length(&y) != length(&w) + 1 {
        return Err(Error::Precondition(format!("l({y}) is not l({w}) + 1")));
    }
    let pd = PathDiagram::of(s)?;
    if pd.crossings_of(a, b).is_empty() {
        return Err(Error::Precondition(format!("paths c{a} and c{b} do not cross")));
    }
    let swapped = recolor_pair(s, a, b, |_| false);
    if flag_of(&swapped)? != y {
        return Err(Error::Invariant(format!("swapping c{a}/c{b} did not produce flag {y}")));
    }
    rebuild(&swapped, y, Family::Reduced)
        .map_err(|e| Error::Invariant(format!("raising along ({a} {b}) left a non-reduced state: {e}")))
}

/// The permutation read off a pattern row by row: in each row take the
/// rightmost entry that differs from the entry to its lower left (the
/// leftmost entry and the bottom row always qualify), record its label and
/// pass the remaining labels down in order.
pub fn tau(a: &GtPattern) -> Permutation {
    let r = a.rank();
    let rows = a.rows();
    let mut labels: Vec<usize> = (1..=r).collect();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let row = &rows[i];
        let j = (0..row.len())
            .rev()
            .find(|&j| j == 0 || i + 1 == r || row[j] != rows[i + 1][j - 1])
            .unwrap();
        out.push(labels.remove(j));
    }
    Permutation::new(out).expect("labels form a permutation")
}

/// τ computed by following colors through the pattern: in each row the
/// carried color meets the next top entry; on a tie the greater color
/// keeps going, otherwise the carried color drops at the slot below and the
/// top color takes over. The color left at the end exits the row.
pub fn tau_tracked(a: &GtPattern) -> Result<Permutation> {
    if !crate::patterns::is_left_strict(a) {
        return Err(Error::NotLeftStrict);
    }
    let r = a.rank();
    let rows = a.rows();
    let mut colors: Vec<usize> = (1..=r).collect();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let row = &rows[i];
        let mut next = Vec::with_capacity(row.len().saturating_sub(1));
        let mut carrier = colors[0];
        for j in 1..row.len() {
            let below = rows[i + 1][j - 1];
            if below == row[j] {
                next.push(carrier.max(colors[j]));
                carrier = carrier.min(colors[j]);
            } else {
                next.push(carrier);
                carrier = colors[j];
            }
        }
        out.push(carrier);
        colors = next;
    }
    Ok(Permutation::new(out).expect("each color exits once"))
}

/// Lexicographically first chain `from = v_0 < v_1 < ... < to` of length-one
/// steps `v_{k+1} = v_k (a b)`, as the list of transpositions.
pub fn bruhat_path(from: &Permutation, to: &Permutation) -> Result<Option<Vec<(usize, usize)>>> {
    if !bruhat_leq(from, to)? {
        return Ok(None);
    }
    let r = from.rank();
    let mut cur = from.clone();
    let mut steps = Vec::new();
    while cur != *to {
        let mut advanced = false;
        'search: for a in 1..=r {
            for b in a + 1..=r {
                let next = cur.compose(&Permutation::transposition(r, a, b)?)?;
                if length(&next) == length(&cur) + 1 && bruhat_leq(&next, to)? {
                    steps.push((a, b));
                    cur = next;
                    advanced = true;
                    break 'search;
                }
            }
        }
        if !advanced {
            return Err(Error::Invariant(format!("no cover of {cur} below {to}")));
        }
    }
    Ok(Some(steps))
}

/// Follows a chain of transpositions from a closed state.
pub fn raise_along(s: &LatticeState, steps: &[(usize, usize)]) -> Result<LatticeState> {
    let mut cur = to_closed(s)?;
    for &(a, b) in steps {
        cur = to_closed(&raise_flag(&cur, a, b)?)?;
    }
    Ok(cur)
}

/// The closed state with flag `y` and pattern `a`, if there is one.
pub fn closed_state_of(y: &Permutation, lambda: &[i64], a: &GtPattern) -> Result<Option<LatticeState>> {
    let (wa, open) = open_state_of_pattern(lambda, a)?;
    let Some(steps) = bruhat_path(&wa, y)? else {
        return Ok(None);
    };
    let s = raise_along(&open, &steps)?;
    if gtp_of_state(&s)? != *a || s.spec().w != *y {
        return Err(Error::Invariant(format!("construction for {a} at {y} drifted")));
    }
    Ok(Some(s))
}
