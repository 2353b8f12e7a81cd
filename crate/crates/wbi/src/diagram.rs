//! Diagrams in the first quadrant, standard fillings, reading words, the
//! canonical fillings, standard tableaux on a diagram and the ⋆-action.
//!
//! Cells are `(x, y)`: column from the left, row from the bottom, 1-based.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::comp::Composition;
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::perm::{weak_leq, Perm, Side, WeakInterval};
use crate::poset::Poset;

pub type Cell = (usize, usize);

/// A finite cell set with no empty row or column in its bounding box,
/// shifted so that its lowest row and leftmost column are 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    cells: Vec<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    Transpose,
    Star,
    XAxis,
    /// Entry complement; a no-op on bare diagrams.
    Bar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    Down,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub cells: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingJson {
    pub n: usize,
    pub cells: Vec<[usize; 2]>,
    pub entries: Vec<[usize; 3]>,
}

fn below_left(a: Cell, b: Cell) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

impl Diagram {
    /// Normalizes the cells and checks the no-gap condition.
    pub fn from_cells(mut cells: Vec<Cell>) -> Result<Diagram> {
        if cells.is_empty() {
            return Err(Error::invalid("a diagram needs at least one cell"));
        }
        if cells.len() > 32 {
            return Err(Error::invalid("diagrams are limited to 32 cells"));
        }
        if cells.iter().any(|&(x, y)| x == 0 || y == 0) {
            return Err(Error::invalid("cell coordinates are 1-based"));
        }
        let mx = cells.iter().map(|c| c.0).min().unwrap() - 1;
        let my = cells.iter().map(|c| c.1).min().unwrap() - 1;
        for c in cells.iter_mut() {
            c.0 -= mx;
            c.1 -= my;
        }
        cells.sort_unstable();
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate cell"));
        }
        let d = Diagram { cells };
        for x in 1..=d.width() {
            if !d.cells.iter().any(|c| c.0 == x) {
                return Err(Error::invalid(format!("column {x} is empty")));
            }
        }
        for y in 1..=d.height() {
            if !d.cells.iter().any(|c| c.1 == y) {
                return Err(Error::invalid(format!("row {y} is empty")));
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Cells sorted by (column, row).
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0)
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// Cells of row y, left to right.
    pub fn row(&self, y: usize) -> Vec<Cell> {
        let mut r: Vec<Cell> = self.cells.iter().copied().filter(|c| c.1 == y).collect();
        r.sort_unstable();
        r
    }

    /// Cells of column x, bottom to top.
    pub fn col(&self, x: usize) -> Vec<Cell> {
        self.cells.iter().copied().filter(|c| c.0 == x).collect()
    }

    /// (r(D), c(D)): row sizes from the top, column sizes from the left.
    pub fn profiles(&self) -> (Composition, Composition) {
        let r = (1..=self.height()).rev().map(|y| self.row(y).len()).collect();
        let c = (1..=self.width()).map(|x| self.col(x).len()).collect();
        (
            Composition::new(r).expect("rows are nonempty"),
            Composition::new(c).expect("columns are nonempty"),
        )
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Diagram {
        Diagram::from_cells(self.cells.iter().map(|&c| f(c)).collect()).expect("reflection of a valid diagram")
    }

    pub fn transpose(&self) -> Diagram {
        self.map_cells(|(x, y)| (y, x))
    }

    /// D^*: (i, j) ↦ (r − j + 1, c − i + 1).
    pub fn star(&self) -> Diagram {
        let (r, c) = (self.height(), self.width());
        self.map_cells(|(i, j)| (r - j + 1, c - i + 1))
    }

    /// D^x: reflection across the x-axis.
    pub fn x_reflect(&self) -> Diagram {
        let r = self.height();
        self.map_cells(|(x, y)| (x, r - y + 1))
    }

    pub fn reflect(&self, op: Reflection) -> Diagram {
        match op {
            Reflection::Transpose => self.transpose(),
            Reflection::Star => self.star(),
            Reflection::XAxis => self.x_reflect(),
            Reflection::Bar => self.clone(),
        }
    }

    /// A pair (lower-left, upper-right) with both coordinates strictly
    /// increasing and no other cell in the enclosing rectangle.
    pub fn find_upper_right_pair(&self) -> Option<(Cell, Cell)> {
        for &a in &self.cells {
            for &b in &self.cells {
                if a.0 < b.0 && a.1 < b.1 {
                    let inside = self.cells.iter().any(|&c| {
                        c != a && c != b && a.0 <= c.0 && c.0 <= b.0 && a.1 <= c.1 && c.1 <= b.1
                    });
                    if !inside {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    pub fn is_free_upper_right(&self) -> bool {
        self.find_upper_right_pair().is_none()
    }

    /// Whether every row is a left-justified run starting at column 1, i.e.
    /// the diagram is tcd(α) for α = its row lengths bottom to top.
    pub fn composition_shape(&self) -> Option<Composition> {
        let mut parts = Vec::new();
        for y in 1..=self.height() {
            let row = self.row(y);
            if row.iter().enumerate().any(|(k, c)| c.0 != k + 1) {
                return None;
            }
            parts.push(row.len());
        }
        Composition::new(parts).ok()
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            n: self.n(),
            cells: self.cells.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Diagram> {
        let d = Diagram::from_cells(j.cells.iter().map(|c| (c[0], c[1])).collect())?;
        if d.n() != j.n {
            return Err(Error::invalid("cell count does not match n"));
        }
        Ok(d)
    }
}

impl std::fmt::Debug for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.cells.iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A standard filling: a bijection from the cells of a diagram to [n].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    diagram: Diagram,
    /// pos[v − 1] is the cell holding v.
    pos: Vec<Cell>,
}

/// Reading schemes. The last three need a composition-shaped diagram
/// (or, for `ByOrderOf`, a second filling of the same diagram).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reading {
    Tblr,
    Lrtb,
    Lrbt,
    Btlr,
    Rlbt,
    Btrl,
    Rlbtbt,
    Dr,
    ByOrderOf(Box<Filling>),
}

/// Result of π_i ⋆ T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarResult {
    Zero,
    Same,
    Swapped(Filling),
}

impl Filling {
    /// `pos[v − 1]` is the cell of entry v.
    pub fn from_positions(diagram: Diagram, pos: Vec<Cell>) -> Result<Filling> {
        if pos.len() != diagram.n() {
            return Err(Error::SizeMismatch(pos.len(), diagram.n()));
        }
        let mut sorted = pos.clone();
        sorted.sort_unstable();
        if sorted != diagram.cells {
            return Err(Error::invalid("entries do not biject onto the diagram's cells"));
        }
        Ok(Filling { diagram, pos })
    }

    /// From `(x, y, v)` triples; the diagram is normalized first, so the
    /// triples must already be normalized.
    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Result<Filling> {
        let diagram = Diagram::from_cells(triples.iter().map(|&(x, y, _)| (x, y)).collect())?;
        let n = triples.len();
        let mut pos = vec![(0, 0); n];
        for &(x, y, v) in triples {
            if v == 0 || v > n || pos[v - 1] != (0, 0) {
                return Err(Error::invalid(format!("entry {v} is not standard")));
            }
            pos[v - 1] = (x, y);
        }
        Filling::from_positions(diagram, pos)
    }

    /// Writes entries 1, 2, … into `order`.
    fn in_order(diagram: &Diagram, order: Vec<Cell>) -> Filling {
        Filling {
            diagram: diagram.clone(),
            pos: order,
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn pos(&self, v: usize) -> Cell {
        self.pos[v - 1]
    }

    pub fn positions(&self) -> &[Cell] {
        &self.pos
    }

    pub fn entry_map(&self) -> HashMap<Cell, usize> {
        self.pos.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect()
    }

    pub fn entry(&self, c: Cell) -> Option<usize> {
        self.pos.iter().position(|&p| p == c).map(|i| i + 1)
    }

    /// P_F: i ⪯ j iff i's cell is weakly below-left of j's.
    pub fn poset(&self) -> Poset {
        let n = self.n();
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && below_left(self.pos(i), self.pos(j)) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_relations(n, &pairs).expect("cell order is a partial order")
    }

    /// Σ_L(P_F), which is an interval whenever P_F is regular.
    pub fn sigma_l(&self) -> Result<WeakInterval> {
        self.poset().sigma_l()
    }

    fn map_cells(&self, target: Diagram, f: impl Fn(Cell) -> Cell) -> Filling {
        let pos = self.pos.iter().map(|&c| f(c)).collect();
        Filling::from_positions(target, pos).expect("reflection of a valid filling")
    }

    pub fn transpose(&self) -> Filling {
        self.map_cells(self.diagram.transpose(), |(x, y)| (y, x))
    }

    /// F^*(i, j) = F(r − j + 1, c − i + 1).
    pub fn star(&self) -> Filling {
        let (r, c) = (self.diagram.height(), self.diagram.width());
        self.map_cells(self.diagram.star(), |(i, j)| (r - j + 1, c - i + 1))
    }

    pub fn x_reflect(&self) -> Filling {
        let r = self.diagram.height();
        self.map_cells(self.diagram.x_reflect(), |(x, y)| (x, r - y + 1))
    }

    /// F̄: entry i becomes n + 1 − i.
    pub fn bar(&self) -> Filling {
        Filling {
            diagram: self.diagram.clone(),
            pos: self.pos.iter().rev().copied().collect(),
        }
    }

    pub fn reflect(&self, op: Reflection) -> Filling {
        match op {
            Reflection::Transpose => self.transpose(),
            Reflection::Star => self.star(),
            Reflection::XAxis => self.x_reflect(),
            Reflection::Bar => self.bar(),
        }
    }

    /// ζ · F: entry i becomes ζ(i).
    pub fn permute_entries(&self, zeta: &Perm) -> Filling {
        let mut pos = vec![(0, 0); self.n()];
        for i in 1..=self.n() {
            pos[zeta.at(i) - 1] = self.pos(i);
        }
        Filling {
            diagram: self.diagram.clone(),
            pos,
        }
    }

    /// s_i · F.
    pub fn swap_entries(&self, i: usize) -> Filling {
        let mut pos = self.pos.clone();
        pos.swap(i - 1, i);
        Filling {
            diagram: self.diagram.clone(),
            pos,
        }
    }

    /// Entries weakly increase along the product order on cells.
    pub fn is_standard_tableau(&self) -> bool {
        let n = self.n();
        for i in 1..=n {
            for j in 1..i {
                // j < i must not sit weakly above-right of i
                if below_left(self.pos(i), self.pos(j)) {
                    return false;
                }
            }
        }
        true
    }

    fn word(&self, order: impl IntoIterator<Item = Cell>) -> Result<Perm> {
        let map = self.entry_map();
        let w: Vec<usize> = order.into_iter().map(|c| map[&c]).collect();
        Perm::from_window(&w)
    }

    pub fn reading(&self, scheme: &Reading) -> Result<Perm> {
        let d = &self.diagram;
        let (h, w) = (d.height(), d.width());
        let rows = |ys: Vec<usize>, rtl: bool| -> Vec<Cell> {
            ys.into_iter()
                .flat_map(|y| {
                    let mut r = d.row(y);
                    if rtl {
                        r.reverse();
                    }
                    r
                })
                .collect()
        };
        let cols = |xs: Vec<usize>, ttb: bool| -> Vec<Cell> {
            xs.into_iter()
                .flat_map(|x| {
                    let mut c = d.col(x);
                    if ttb {
                        c.reverse();
                    }
                    c
                })
                .collect()
        };
        match scheme {
            Reading::Tblr => self.word(cols((1..=w).collect(), true)),
            Reading::Btlr => self.word(cols((1..=w).collect(), false)),
            Reading::Btrl => self.word(cols((1..=w).rev().collect(), false)),
            Reading::Lrtb => self.word(rows((1..=h).rev().collect(), false)),
            Reading::Lrbt => self.word(rows((1..=h).collect(), false)),
            Reading::Rlbt => self.word(rows((1..=h).collect(), true)),
            Reading::Rlbtbt => {
                self.require_composition_shape("RLBTBT")?;
                let mut order: Vec<Cell> = rows((1..=h).collect(), true)
                    .into_iter()
                    .filter(|c| c.0 != 1)
                    .collect();
                order.extend(d.col(1));
                self.word(order)
            }
            Reading::Dr => {
                self.require_composition_shape("DR")?;
                let mut order = Vec::new();
                for j in 1..=h {
                    order.push((1, j));
                    if j > 1 && d.contains((2, j - 1)) {
                        order.push((2, j - 1));
                    }
                }
                let taken: Vec<Cell> = order.clone();
                order.extend(
                    rows((1..=h).rev().collect(), false)
                        .into_iter()
                        .filter(|c| !taken.contains(c)),
                );
                self.word(order)
            }
            Reading::ByOrderOf(r) => {
                if r.diagram != self.diagram {
                    return Err(Error::invalid("ByOrderOf needs a filling of the same diagram"));
                }
                self.word(r.pos.iter().copied())
            }
        }
    }

    fn require_composition_shape(&self, what: &str) -> Result<()> {
        if self.diagram.composition_shape().is_none() {
            return Err(Error::invalid(format!(
                "{what} reading needs a composition-diagram shape"
            )));
        }
        Ok(())
    }

    /// Whether the two fillings of one diagram induce the same decorations
    /// on every Hasse edge of the (shared) cell order.
    pub fn same_decorations(&self, other: &Filling) -> bool {
        if self.diagram != other.diagram {
            return false;
        }
        let a = self.entry_map();
        let b = other.entry_map();
        let p = self.poset();
        for (i, j) in p.covers() {
            let (ci, cj) = (self.pos(i), self.pos(j));
            if (a[&ci] > a[&cj]) != (b[&ci] > b[&cj]) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> FillingJson {
        let mut entries: Vec<[usize; 3]> = self
            .pos
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| [x, y, i + 1])
            .collect();
        entries.sort_unstable();
        FillingJson {
            n: self.n(),
            cells: self.diagram.to_json().cells,
            entries,
        }
    }

    pub fn from_json(j: &FillingJson) -> Result<Filling> {
        let triples: Vec<_> = j.entries.iter().map(|e| (e[0], e[1], e[2])).collect();
        let f = Filling::from_triples(&triples)?;
        if f.n() != j.n {
            return Err(Error::invalid("entry count does not match n"));
        }
        Ok(f)
    }
}

impl std::fmt::Debug for Filling {
    /// Rows top to bottom, `.` for holes.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let map = self.entry_map();
        let d = &self.diagram;
        let mut lines = Vec::new();
        for y in (1..=d.height()).rev() {
            let row: Vec<String> = (1..=d.width())
                .map(|x| map.get(&(x, y)).map_or(".".into(), |v| v.to_string()))
                .collect();
            lines.push(row.join(" "));
        }
        write!(f, "[{}]", lines.join(" / "))
    }
}

/// F^↓ (columns top to bottom, leftmost first) or F^→ (rows left to right,
/// topmost first).
pub fn canonical_fill(d: &Diagram, kind: CanonicalKind) -> Filling {
    let order: Vec<Cell> = match kind {
        CanonicalKind::Down => (1..=d.width())
            .flat_map(|x| d.col(x).into_iter().rev())
            .collect(),
        CanonicalKind::Right => (1..=d.height())
            .rev()
            .flat_map(|y| d.row(y))
            .collect(),
    };
    Filling::in_order(d, order)
}

/// T'_D (columns bottom to top, leftmost first) when `primed`, otherwise
/// T_D (rows left to right, bottom row first).
pub fn tableau_t(d: &Diagram, primed: bool) -> Filling {
    let order: Vec<Cell> = if primed {
        (1..=d.width()).flat_map(|x| d.col(x)).collect()
    } else {
        (1..=d.height()).flat_map(|y| d.row(y)).collect()
    };
    Filling::in_order(d, order)
}

/// F^↗: the Z₀ = F^↓, Z₁, …, Z_n rectification.
pub fn fill_ne(d: &Diagram) -> Filling {
    let mut z = canonical_fill(d, CanonicalKind::Down);
    let n = d.n();
    for i in 1..=n {
        let p = z.poset();
        let pi = z.pos(i);
        let mut best: Option<(usize, Cell)> = None;
        for x in i + 1..=n {
            let px = z.pos(x);
            if !(px.0 > pi.0 && px.1 > pi.1) {
                continue;
            }
            let ok = (i..x).all(|j| {
                let pj = z.pos(j);
                pj.1 < px.1 && pj.0 <= px.0 && !p.covers_pair(j, x)
            });
            if !ok {
                continue;
            }
            // uppermost, then leftmost
            let better = match best {
                None => true,
                Some((_, b)) => px.1 > b.1 || (px.1 == b.1 && px.0 < b.0),
            };
            if better {
                best = Some((x, px));
            }
        }
        if let Some((x, px)) = best {
            let mut pos = z.pos.clone();
            for j in (i..x).rev() {
                pos[j] = z.pos(j);
            }
            pos[i - 1] = px;
            z.pos = pos;
        }
    }
    z
}

/// π_i ⋆ T for T ∈ ST(D^x).
pub fn hecke_star(i: usize, t: &Filling) -> StarResult {
    let (a, b) = (t.pos(i), t.pos(i + 1));
    if below_left(a, b) {
        StarResult::Zero
    } else if a.0 < b.0 && a.1 > b.1 {
        StarResult::Swapped(t.swap_entries(i))
    } else {
        StarResult::Same
    }
}

/// T ⩽ U iff readingTBLR(T) ⪯_L readingTBLR(U).
pub fn st_leq(t: &Filling, u: &Filling) -> Result<bool> {
    if t.diagram != u.diagram {
        return Err(Error::invalid("tableaux have different shapes"));
    }
    let a = t.reading(&Reading::Tblr)?;
    let b = u.reading(&Reading::Tblr)?;
    Ok(weak_leq(&a, &b, Side::Left))
}

/// All standard tableaux on D, sorted by TBLR reading word.
///
/// The largest remaining entry goes into a cell with no unfilled cell
/// weakly above-right of it. The first level fans out under `mode`.
pub fn enumerate_st(d: &Diagram, caps: &Caps, mode: Mode) -> Result<Vec<Filling>> {
    let n = d.n();
    let cells = d.cells().to_vec();
    // above[k]: bitmask of cells weakly above-right of cell k, excluding k
    let above: Vec<u32> = cells
        .iter()
        .map(|&a| {
            cells
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b != a && below_left(a, b))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let maximal = |free: u32| -> Vec<usize> {
        (0..n)
            .filter(|&k| free & (1 << k) != 0 && above[k] & free == 0)
            .collect()
    };
    let roots = maximal(full);
    let counter = std::sync::atomic::AtomicUsize::new(0);
    let branches: Vec<Result<Vec<Vec<usize>>>> = exec::map(mode, &roots, |&k| {
        let mut slot = vec![usize::MAX; n];
        slot[n - 1] = k;
        let mut out = Vec::new();
        grow(full & !(1 << k), n - 1, &above, &mut slot, &mut out, &counter, caps.st_count)?;
        Ok(out)
    });
    let mut all = Vec::new();
    for b in branches {
        all.extend(b?);
    }
    let mut tabs: Vec<(Perm, Filling)> = all
        .into_iter()
        .map(|slots| {
            let f = Filling {
                diagram: d.clone(),
                pos: slots.iter().map(|&k| cells[k]).collect(),
            };
            (f.reading(&Reading::Tblr).expect("standard"), f)
        })
        .collect();
    tabs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(tabs.into_iter().map(|(_, f)| f).collect())
}

fn grow(
    free: u32,
    v: usize,
    above: &[u32],
    slot: &mut [usize],
    out: &mut Vec<Vec<usize>>,
    counter: &std::sync::atomic::AtomicUsize,
    cap: usize,
) -> Result<()> {
    if v == 0 {
        let c = counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
        Caps::check("standard tableaux", cap, c)?;
        out.push(slot.to_vec());
        return Ok(());
    }
    for k in 0..above.len() {
        if free & (1 << k) != 0 && above[k] & free == 0 {
            slot[v - 1] = k;
            grow(free & !(1 << k), v - 1, above, slot, out, counter, cap)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example6() -> Diagram {
        Diagram::from_cells(vec![(1, 2), (2, 1), (2, 2), (3, 3), (4, 2), (4, 3)]).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn gaps_rejected() {
        assert!(Diagram::from_cells(vec![(1, 1), (3, 1)]).is_err());
        assert!(Diagram::from_cells(vec![(1, 1), (1, 1)]).is_err());
        assert_eq!(
            Diagram::from_cells(vec![(2, 3), (3, 4)]).unwrap().cells(),
            &[(1, 1), (2, 2)]
        );
    }

    #[test]
    fn canonical_fillings_of_example() {
        let d = example6();
        let down = canonical_fill(&d, CanonicalKind::Down);
        // columns (1), (2,3), (4), (5,6)
        assert_eq!(down.positions(), &[(1, 2), (2, 2), (2, 1), (3, 3), (4, 3), (4, 2)]);
        assert_eq!(down.sigma_l().unwrap(), WeakInterval::left(p("132465"), p("231564")).unwrap());
        let (r, c) = d.profiles();
        assert_eq!(r.to_string(), "(2,3,1)");
        assert_eq!(c.to_string(), "(1,2,1,2)");
    }

    #[test]
    fn fill_ne_example() {
        let z = fill_ne(&example6());
        let expect = Filling::from_triples(&[
            (3, 3, 3),
            (4, 3, 4),
            (1, 2, 1),
            (2, 2, 2),
            (4, 2, 5),
            (2, 1, 6),
        ])
        .unwrap();
        assert_eq!(z, expect);
        assert_eq!(z.sigma_l().unwrap(), WeakInterval::left(p("134652"), p("235641")).unwrap());
        assert!(z.same_decorations(&canonical_fill(&example6(), CanonicalKind::Down)));
    }

    #[test]
    fn free_pairs() {
        let d = Diagram::from_cells(vec![(1, 1), (2, 2)]).unwrap();
        assert_eq!(d.find_upper_right_pair(), Some(((1, 1), (2, 2))));
        assert!(!example6().is_free_upper_right());
        let free = Diagram::from_cells(vec![(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (5, 1)]).unwrap();
        assert!(free.is_free_upper_right());
    }

    #[test]
    fn reflections_are_involutions() {
        let d = example6();
        assert_eq!(d.star().star(), d);
        assert_eq!(d.transpose().transpose(), d);
        assert_eq!(d.x_reflect().x_reflect(), d);
        let f = fill_ne(&d);
        for op in [Reflection::Transpose, Reflection::Star, Reflection::XAxis, Reflection::Bar] {
            assert_eq!(f.reflect(op).reflect(op), f);
        }
        assert_eq!(f.transpose().poset(), f.poset());
    }

    #[test]
    fn down_star_is_right() {
        let d = example6();
        assert_eq!(
            canonical_fill(&d, CanonicalKind::Down).star(),
            canonical_fill(&d.star(), CanonicalKind::Right)
        );
    }

    #[test]
    fn standard_tableaux_counts() {
        let caps = Caps::default();
        let row = Diagram::from_cells(vec![(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(enumerate_st(&row, &caps, Mode::Sequential).unwrap().len(), 1);
        let sq = Diagram::from_cells(vec![(1, 1), (2, 1), (1, 2), (2, 2)]).unwrap();
        let sts = enumerate_st(&sq, &caps, Mode::Parallel).unwrap();
        assert_eq!(sts.len(), 2);
        assert!(sts.iter().all(|t| t.is_standard_tableau()));
        let tiny = Caps { st_count: 1, ..caps };
        assert!(matches!(enumerate_st(&sq, &tiny, Mode::Sequential), Err(Error::Cap { .. })));
    }

    #[test]
    fn star_action_cases() {
        // 1 below 2 in one column: lower-left
        let col = Filling::from_triples(&[(1, 1, 1), (1, 2, 2)]).unwrap();
        assert_eq!(hecke_star(1, &col), StarResult::Zero);
        // 1 strictly upper-left of 2
        let t = Filling::from_triples(&[(1, 2, 1), (2, 1, 2)]).unwrap();
        match hecke_star(1, &t) {
            StarResult::Swapped(u) => {
                assert_eq!(u.pos(1), (2, 1));
                assert!(u.is_standard_tableau());
                assert_eq!(hecke_star(1, &u), StarResult::Same);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn readings_on_small_shapes() {
        let one = Filling::from_triples(&[(1, 1, 1)]).unwrap();
        for r in [Reading::Tblr, Reading::Lrtb, Reading::Dr, Reading::Rlbtbt] {
            assert_eq!(one.reading(&r).unwrap(), Perm::identity(1));
        }
        let d = example6();
        let f = canonical_fill(&d, CanonicalKind::Down);
        assert!(f.reading(&Reading::Dr).is_err());
        assert_eq!(f.reading(&Reading::Tblr).unwrap(), Perm::identity(6));
        assert_eq!(f.reading(&Reading::ByOrderOf(Box::new(f.clone()))).unwrap(), Perm::identity(6));
    }

    #[test]
    fn json_round_trip() {
        let f = fill_ne(&example6());
        assert_eq!(Filling::from_json(&f.to_json()).unwrap(), f);
        let d = example6();
        assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
    }
}
