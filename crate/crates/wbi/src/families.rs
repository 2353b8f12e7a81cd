//! Tableau families on composition and ribbon diagrams, their sink and
//! source tableaux, and the closed-form classes of the family modules.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::classes::{equiv_class, EquivClass};
use crate::comp::Composition;
use crate::descent::{build_d_s_rho, family_diagram, FamilyRequest};
use crate::diagram::{enumerate_st, tableau_t, Cell, Diagram, Filling, FillingJson, Reading};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::perm::{longest_parabolic, w1, Perm, WeakInterval};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "SRT")]
    Srt,
    #[serde(rename = "SIT")]
    Sit,
    #[serde(rename = "SET")]
    Set,
    #[serde(rename = "SPIT")]
    Spit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Sink,
    Source,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTableau {
    pub family: Family,
    pub shape: Composition,
    pub filling: Filling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub family: Family,
    #[serde(flatten)]
    pub filling: FillingJson,
}

impl FamilyTableau {
    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            family: self.family,
            filling: self.filling.to_json(),
        }
    }
}

fn shape_of(family: Family, a: &Composition) -> Result<Diagram> {
    if a.is_empty() {
        return Err(Error::invalid("tableau families need a nonempty composition"));
    }
    if family == Family::Spit && !a.is_peak() {
        return Err(Error::invalid(format!("{a} is not a peak composition")));
    }
    Ok(match family {
        Family::Srt => a.trd(),
        _ => a.tcd(),
    })
}

/// For each cell, the cells whose entries must be smaller.
fn predecessors(family: Family, d: &Diagram) -> Vec<Vec<usize>> {
    let cells = d.cells();
    let idx = |c: Cell| cells.binary_search(&c).ok();
    cells
        .iter()
        .map(|&(x, y)| {
            let mut p = Vec::new();
            if x > 1 {
                p.extend(idx((x - 1, y)));
            }
            match family {
                Family::Sit | Family::Spit => {
                    if x == 1 && y > 1 {
                        p.extend(idx((1, y - 1)));
                    }
                }
                Family::Set | Family::Srt => {
                    // nearest present cell below in the same column
                    if let Some(&(bx, by)) = cells.iter().rfind(|c| c.0 == x && c.1 < y) {
                        p.extend(idx((bx, by)));
                    }
                }
            }
            p
        })
        .collect()
}

/// Row lengths of the filled cells form a peak composition.
fn prefix_is_peak(d: &Diagram, filled: u32) -> bool {
    let mut lens = Vec::new();
    for y in 1..=d.height() {
        let k = d
            .cells()
            .iter()
            .enumerate()
            .filter(|&(i, c)| c.1 == y && filled & (1 << i) != 0)
            .count();
        if k == 0 {
            break;
        }
        lens.push(k);
    }
    lens.iter().take(lens.len().saturating_sub(1)).all(|&k| k >= 2)
}

pub fn is_member(family: Family, a: &Composition, f: &Filling) -> bool {
    let Ok(d) = shape_of(family, a) else {
        return false;
    };
    if f.diagram() != &d {
        return false;
    }
    let preds = predecessors(family, &d);
    let map = f.entry_map();
    let val = |k: usize| map[&d.cells()[k]];
    let ok = (0..d.n()).all(|k| preds[k].iter().all(|&p| val(p) < val(k)));
    if !ok {
        return false;
    }
    if family == Family::Spit {
        let mut filled = 0u32;
        for v in 1..=d.n() {
            let k = d.cells().binary_search(&f.pos(v)).expect("cell of d");
            filled |= 1 << k;
            if !prefix_is_peak(&d, filled) {
                return false;
            }
        }
    }
    true
}

/// Every tableau of the family and shape, sorted by LRTB reading word.
pub fn enumerate_family(family: Family, a: &Composition, caps: &Caps, mode: Mode) -> Result<Vec<FamilyTableau>> {
    let d = shape_of(family, a)?;
    let n = d.n();
    let preds: Vec<u32> = predecessors(family, &d)
        .into_iter()
        .map(|p| p.into_iter().fold(0u32, |m, k| m | (1 << k)))
        .collect();
    let ready = |filled: u32| -> Vec<usize> {
        (0..n)
            .filter(|&k| filled & (1 << k) == 0 && preds[k] & !filled == 0)
            .filter(|&k| family != Family::Spit || prefix_is_peak(&d, filled | (1 << k)))
            .collect()
    };
    let counter = std::sync::atomic::AtomicUsize::new(0);
    let firsts = ready(0);
    let branches = exec::map(mode, &firsts, |&k| {
        let mut order = vec![k];
        let mut out = Vec::new();
        grow(1 << k, n, &ready, &mut order, &mut out, &counter, caps.st_count)?;
        Ok::<_, Error>(out)
    });
    let mut all = Vec::new();
    for b in branches {
        for order in b? {
            let pos = order.iter().map(|&k| d.cells()[k]).collect();
            let filling = Filling::from_positions(d.clone(), pos)?;
            all.push(FamilyTableau {
                family,
                shape: a.clone(),
                filling,
            });
        }
    }
    let mut keyed: Vec<(Perm, FamilyTableau)> = all
        .into_iter()
        .map(|t| (t.filling.reading(&Reading::Lrtb).expect("standard"), t))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

fn grow(
    filled: u32,
    n: usize,
    ready: &(dyn Fn(u32) -> Vec<usize> + Sync),
    order: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    counter: &std::sync::atomic::AtomicUsize,
    cap: usize,
) -> Result<()> {
    if order.len() == n {
        let c = counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
        Caps::check("family tableaux", cap, c)?;
        out.push(order.clone());
        return Ok(());
    }
    for k in ready(filled) {
        order.push(k);
        grow(filled | (1 << k), n, ready, order, out, counter, cap)?;
        order.pop();
    }
    Ok(())
}

fn fill_in_order(d: &Diagram, order: Vec<Cell>) -> Result<Filling> {
    Filling::from_positions(d.clone(), order)
}

/// Rows bottom to top, each read left to right.
fn rows_bottom_up(d: &Diagram) -> Vec<Cell> {
    (1..=d.height()).flat_map(|y| d.row(y)).collect()
}

pub fn sink_source(family: Family, a: &Composition, which: Which) -> Result<FamilyTableau> {
    let d = shape_of(family, a)?;
    let l = a.len();
    let filling = match (family, which) {
        (Family::Srt, Which::Source) => tableau_t(&d, false),
        (Family::Srt, Which::Sink) => tableau_t(&d, true),
        (Family::Sit | Family::Set | Family::Spit, Which::Source) => fill_in_order(&d, rows_bottom_up(&d))?,
        (Family::Set, Which::Sink) => tableau_t(&d, true),
        (Family::Sit, Which::Sink) => {
            let mut order: Vec<Cell> = (1..=l).map(|y| (1, y)).collect();
            for y in (1..=l).rev() {
                order.extend(d.row(y).into_iter().filter(|c| c.0 > 1));
            }
            fill_in_order(&d, order)?
        }
        (Family::Spit, Which::Sink) => {
            // column 1 takes the odd numbers, column 2 the even ones, and the
            // rest is filled row by row from the top
            let mut pos = vec![(0, 0); d.n()];
            let mut used = 0;
            for y in 1..=l {
                pos[2 * y - 2] = (1, y);
                used += 1;
                if d.contains((2, y)) {
                    pos[2 * y - 1] = (2, y);
                    used += 1;
                }
            }
            let mut next = used;
            for y in (1..=l).rev() {
                for c in d.row(y).into_iter().filter(|c| c.0 > 2) {
                    pos[next] = c;
                    next += 1;
                }
            }
            Filling::from_positions(d.clone(), pos)?
        }
    };
    let t = FamilyTableau {
        family,
        shape: a.clone(),
        filling,
    };
    if !is_member(family, a, &t.filling) {
        return Err(Error::Internal(format!("{which:?} tableau of {a} is not in the family")));
    }
    Ok(t)
}

/// The family modules whose classes have closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyModule {
    P,
    F,
    V,
    X,
    ShatCanonical,
    Q,
    RV,
    RX,
    RShat,
}

impl FamilyModule {
    pub const ALL: [FamilyModule; 9] = [
        FamilyModule::P,
        FamilyModule::F,
        FamilyModule::V,
        FamilyModule::X,
        FamilyModule::ShatCanonical,
        FamilyModule::Q,
        FamilyModule::RV,
        FamilyModule::RX,
        FamilyModule::RShat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyModule::P => "P",
            FamilyModule::F => "F",
            FamilyModule::V => "V",
            FamilyModule::X => "X",
            FamilyModule::ShatCanonical => "Shat",
            FamilyModule::Q => "Q",
            FamilyModule::RV => "RV",
            FamilyModule::RX => "RX",
            FamilyModule::RShat => "RShat",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyModule> {
        FamilyModule::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown family {s:?}")))
    }

    /// Whether α is admissible (only Q needs a peak composition).
    pub fn accepts(self, a: &Composition) -> bool {
        !a.is_empty() && (self != FamilyModule::Q || a.is_peak())
    }

    fn untwisted(self) -> Option<FamilyModule> {
        match self {
            FamilyModule::RV => Some(FamilyModule::V),
            FamilyModule::RX => Some(FamilyModule::X),
            FamilyModule::RShat => Some(FamilyModule::ShatCanonical),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySummary {
    pub kind: FamilyModule,
    pub alpha: Composition,
    /// An interval whose module is the family module.
    pub interval: WeakInterval,
    pub min: WeakInterval,
    pub max: WeakInterval,
    pub size: usize,
    /// The diagram whose standard tableaux index the class.
    pub diagram: Diagram,
}

fn set_c(a: &Composition) -> Subset {
    a.set_of().complement(a.n())
}

/// The canonical-class sink tableau: row i, left to right, is column i of
/// T_C read bottom to top.
pub fn shat_sink(a: &Composition) -> Result<Filling> {
    let c = family_diagram(&FamilyRequest::ShatCanonical(a.clone()))?;
    let t = tableau_t(&c, false);
    let d = a.tcd();
    let mut triples = Vec::with_capacity(d.n());
    for i in 1..=a.len() {
        for (x, cell) in c.col(i).into_iter().enumerate() {
            triples.push((x + 1, i, t.entry(cell).expect("cell of C")));
        }
    }
    Filling::from_triples(&triples)
}

pub fn shat_source(a: &Composition) -> Result<Filling> {
    let d = a.tcd();
    fill_in_order(&d, rows_bottom_up(&d))
}

/// The interval identified with the family module.
pub fn family_interval(kind: FamilyModule, a: &Composition) -> Result<WeakInterval> {
    if !kind.accepts(a) {
        return Err(Error::invalid(format!("{a} is not valid for family {}", kind.name())));
    }
    let n = a.n();
    let low = longest_parabolic(set_c(a), n)?;
    match kind {
        FamilyModule::P => WeakInterval::left(low, w1(set_c(a), n)?),
        FamilyModule::F => WeakInterval::left(low.clone(), low),
        FamilyModule::V => {
            let sink = sink_source(Family::Sit, a, Which::Sink)?.filling;
            WeakInterval::left(low, sink.reading(&Reading::Rlbt)?)
        }
        FamilyModule::X => {
            let sink = sink_source(Family::Set, a, Which::Sink)?.filling;
            WeakInterval::left(low, sink.reading(&Reading::Rlbt)?)
        }
        FamilyModule::ShatCanonical => WeakInterval::left(low, shat_sink(a)?.reading(&Reading::Rlbt)?),
        FamilyModule::Q => {
            let sink = sink_source(Family::Spit, a, Which::Sink)?.filling;
            WeakInterval::left(sink.reading(&Reading::Lrtb)?, w1(a.reverse().set_of(), n)?)
        }
        FamilyModule::RV | FamilyModule::RX | FamilyModule::RShat => {
            Ok(family_interval(kind.untwisted().unwrap(), a)?.times_w0())
        }
    }
}

/// Row lengths of tcd(α) read by column: α'_y = #{i : α_i ≥ y}.
pub fn column_lengths(a: &Composition) -> Composition {
    let (_, c) = a.tcd().profiles();
    c
}

/// Min, max and size of the class from the closed-form descriptions.
pub fn family_class(kind: FamilyModule, a: &Composition, caps: &Caps, mode: Mode) -> Result<FamilySummary> {
    let interval = family_interval(kind, a)?;
    let n = a.n();
    let st_size = |d: &Diagram| -> Result<usize> { Ok(enumerate_st(&d.x_reflect(), caps, mode)?.len()) };
    let summary = |min, max, size, diagram| FamilySummary {
        kind,
        alpha: a.clone(),
        interval: interval.clone(),
        min,
        max,
        size,
        diagram,
    };
    Ok(match kind {
        FamilyModule::P => summary(interval.clone(), interval.clone(), 1, a.trd()),
        FamilyModule::F => {
            let s0 = longest_parabolic(set_c(a), n)?;
            let s1 = longest_parabolic(a.set_of(), n)?.then_apply(&Perm::w0(n));
            let srt = enumerate_family(Family::Srt, a, caps, mode)?.len();
            summary(
                WeakInterval::left(s0.clone(), s0)?,
                WeakInterval::left(s1.clone(), s1)?,
                srt,
                build_d_s_rho(set_c(a), &interval.lo)?,
            )
        }
        FamilyModule::V => {
            let d = family_diagram(&FamilyRequest::V(a.clone()))?;
            let src = sink_source(Family::Sit, a, Which::Source)?.filling;
            let top = w1(Subset::interval(n - a.len()), n)?;
            let max = WeakInterval::left(src.reading(&Reading::Rlbtbt)?, top)?;
            let size = st_size(&d)?;
            summary(interval.clone(), max, size, d)
        }
        FamilyModule::X => {
            let d = family_diagram(&FamilyRequest::X(a.clone()))?;
            let src = sink_source(Family::Set, a, Which::Source)?.filling;
            let top = w1(column_lengths(a).reverse().set_of(), n)?;
            let max = WeakInterval::left(src.reading(&Reading::Btrl)?, top)?;
            let size = st_size(&d)?;
            summary(interval.clone(), max, size, d)
        }
        FamilyModule::ShatCanonical => {
            let d = family_diagram(&FamilyRequest::ShatCanonical(a.clone()))?;
            // LRTB(T'_C): the reordered-source description does not agree
            // with it in general, so the max comes from F^→ directly
            let word = tableau_t(&d, true).reading(&Reading::Lrtb)?;
            let (r, _) = d.profiles();
            let max = WeakInterval::left(word, w1(r.set_of(), n)?)?;
            let size = st_size(&d)?;
            summary(interval.clone(), max, size, d)
        }
        FamilyModule::Q => {
            let d = family_diagram(&FamilyRequest::Q(a.clone()))?;
            let src = sink_source(Family::Spit, a, Which::Source)?.filling;
            let evens = Subset::evens(a.len() - 1);
            let min = WeakInterval::left(longest_parabolic(evens, n)?, src.reading(&Reading::Dr)?)?;
            let size = st_size(&d)?;
            summary(min, interval.clone(), size, d)
        }
        FamilyModule::RV | FamilyModule::RX | FamilyModule::RShat => {
            let base = family_class(kind.untwisted().unwrap(), a, caps, mode)?;
            FamilySummary {
                kind,
                alpha: a.clone(),
                interval: interval.clone(),
                min: base.max.times_w0(),
                max: base.min.times_w0(),
                size: base.size,
                diagram: base.diagram.transpose(),
            }
        }
    })
}

/// The class computed by BFS from the family interval, for cross-checks.
pub fn family_class_bfs(kind: FamilyModule, a: &Composition, caps: &Caps, mode: Mode) -> Result<EquivClass> {
    equiv_class(&family_interval(kind, a)?, caps, mode)
}
