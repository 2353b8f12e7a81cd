//! Diagrams attached to lower and upper descent intervals, and the diagrams
//! of the module families.

use crate::comp::Composition;
use crate::diagram::{canonical_fill, fill_ne, CanonicalKind, Cell, Diagram, Filling};
use crate::error::{Error, Result};
use crate::perm::{compose, longest_parabolic, w1, weak_leq, Perm, Side, WeakInterval};
use crate::subset::Subset;

/// D_{σ;S} together with the (σ, S) it was built from. F^↙ is only defined
/// through this provenance, so `fill_sw` takes this type rather than a bare
/// diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperDiagram {
    sigma: Perm,
    s: Subset,
    diagram: Diagram,
}

impl UpperDiagram {
    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn s(&self) -> Subset {
        self.s
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyRequest {
    P(Composition),
    V(Composition),
    X(Composition),
    ShatCanonical(Composition),
    Q(Composition),
}

fn order_error(lo: &Perm, hi: &Perm) -> Error {
    Error::OrderViolation {
        lo: lo.to_string(),
        hi: hi.to_string(),
        side: Side::Left.tag().to_string(),
    }
}

/// D_{S;ρ}: cell (i, j) whenever X_i(S;ρ) ∩ Y_j(ρ) ≠ ∅.
pub fn build_d_s_rho(s: Subset, rho: &Perm) -> Result<Diagram> {
    let n = rho.n();
    s.check_within(n)?;
    let w0s = longest_parabolic(s, n)?;
    if !weak_leq(&w0s, rho, Side::Left) {
        return Err(order_error(&w0s, rho));
    }
    // X_i: values of ρ at the positions of the i-th block of S^c
    let mut block_of_value = vec![0; n + 1];
    let mut block = 1;
    for r in 1..=n {
        block_of_value[rho.at(r)] = block;
        if r < n && !s.contains(r) {
            block += 1;
        }
    }
    // Y_j: runs of values cut at the left descents of ρ
    let des = rho.descents(Side::Left);
    let mut run_of_value = vec![0; n + 1];
    let mut run = 1;
    for c in 1..=n {
        run_of_value[c] = run;
        if des.contains(c) {
            run += 1;
        }
    }
    let mut cells: Vec<Cell> = (1..=n).map(|v| (block_of_value[v], run_of_value[v])).collect();
    cells.sort_unstable();
    cells.dedup();
    Diagram::from_cells(cells)
}

/// D_{σ;S} := (D_{S^c; w₀σ})^*.
pub fn build_d_sigma_s(sigma: &Perm, s: Subset) -> Result<UpperDiagram> {
    let n = sigma.n();
    s.check_within(n)?;
    let top = w1(s, n)?;
    if !weak_leq(sigma, &top, Side::Left) {
        return Err(order_error(sigma, &top));
    }
    let lower = build_d_s_rho(s.complement(n), &compose(&Perm::w0(n), sigma)?)?;
    Ok(UpperDiagram {
        sigma: sigma.clone(),
        s,
        diagram: lower.star(),
    })
}

/// F^↙_{D_{σ;S}} := (F^↗_{D_{S^c; w₀σ}})^*.
pub fn fill_sw(d: &UpperDiagram) -> Filling {
    fill_ne(&d.diagram.star()).star()
}

/// (min, max) of the class of [w₀(S), ρ]_L.
pub fn lower_minmax(s: Subset, rho: &Perm) -> Result<(WeakInterval, WeakInterval)> {
    let d = build_d_s_rho(s, rho)?;
    let min = WeakInterval::left(longest_parabolic(s, rho.n())?, rho.clone())?;
    let max = fill_ne(&d).sigma_l()?;
    Ok((min, max))
}

/// (min, max) of the class of [σ, w₁(S)]_L.
pub fn upper_minmax(sigma: &Perm, s: Subset) -> Result<(WeakInterval, WeakInterval)> {
    let d = build_d_sigma_s(sigma, s)?;
    let max = WeakInterval::left(sigma.clone(), w1(s, sigma.n())?)?;
    let min = fill_sw(&d).sigma_l()?;
    Ok((min, max))
}

/// Σ_L(P_{F^↓_D}) — the interval a diagram stands for.
pub fn interval_of(d: &Diagram) -> Result<WeakInterval> {
    canonical_fill(d, CanonicalKind::Down).sigma_l()
}

pub fn family_diagram(req: &FamilyRequest) -> Result<Diagram> {
    match req {
        FamilyRequest::P(a) => nonempty(a).map(|a| a.trd()),
        FamilyRequest::V(a) => diagram_v(a),
        FamilyRequest::X(a) => nonempty(a).map(|a| a.tcd().transpose()),
        FamilyRequest::ShatCanonical(a) => diagram_shat(a),
        FamilyRequest::Q(a) => diagram_q(a),
    }
}

fn nonempty(a: &Composition) -> Result<&Composition> {
    if a.is_empty() {
        Err(Error::invalid("family diagrams need a nonempty composition"))
    } else {
        Ok(a)
    }
}

/// k_i = Σ_{r>i} (α_r − 1).
fn ribbon_offsets(a: &Composition) -> Vec<usize> {
    let l = a.len();
    let mut k = vec![0; l + 1];
    for i in (1..l).rev() {
        k[i] = k[i + 1] + a.part(i + 1) - 1;
    }
    k
}

fn diagram_v(a: &Composition) -> Result<Diagram> {
    nonempty(a)?;
    let k = ribbon_offsets(a);
    let mut cells = Vec::new();
    for i in 1..=a.len() {
        cells.push((i, 1));
        cells.extend((2..=a.part(i)).map(|j| (i, j + k[i])));
    }
    Diagram::from_cells(cells)
}

fn diagram_q(a: &Composition) -> Result<Diagram> {
    nonempty(a)?;
    if !a.is_peak() {
        return Err(Error::invalid(format!("{a} is not a peak composition")));
    }
    let l = a.len();
    let mut cells = Vec::new();
    for j in 1..l {
        // k_j = (ℓ − 1) + Σ_{r>j} (α_r − 2); used for every j < ℓ
        let tail: isize = (j + 1..=l).map(|r| a.part(r) as isize - 2).sum();
        let k = (l as isize - 1) + tail;
        cells.push((j, j));
        cells.push((j + 1, j));
        for x in 3..=a.part(j) {
            let col = k + x as isize;
            if col < 1 {
                return Err(Error::Internal(format!("negative column for {a}")));
            }
            cells.push((col as usize, j));
        }
    }
    cells.extend((1..=a.part(l)).map(|x| (l + x - 1, l)));
    Diagram::from_cells(cells)
}

/// BB(α) in increasing ⊲ order: column-1 boxes bottom to top, then one box
/// per later column, left to right.
pub fn bb_boxes(a: &Composition) -> Vec<Cell> {
    let l = a.len();
    let t = a.tcd();
    let mut out: Vec<Cell> = (1..=l)
        .filter(|&y| y == l || a.part(y) > 1)
        .map(|y| (1, y))
        .collect();
    let width = t.width();
    for x in 2..=width {
        for &(cx, cy) in t.cells() {
            if cx != x {
                continue;
            }
            let blocked = t
                .cells()
                .iter()
                .any(|&(ux, uy)| (ux == x || ux == x - 1) && uy > cy);
            if !blocked {
                out.push((cx, cy));
            }
        }
    }
    out
}

/// The Y_j partition of tcd(α) for the canonical class, in order. Each Y_j
/// is listed in the order its boxes were added.
pub fn shat_rows(a: &Composition) -> Result<Vec<Vec<Cell>>> {
    nonempty(a)?;
    let t = a.tcd();
    let bb = bb_boxes(a);
    let mut taken: Vec<Cell> = Vec::new();
    let mut ys: Vec<Vec<Cell>> = Vec::with_capacity(bb.len());
    for (j, &(b, d)) in bb.iter().enumerate() {
        let mut y: Vec<Cell> = if b == 1 {
            let below = if j == 0 { 0 } else { bb[j - 1].1 };
            (below + 1..=d).rev().map(|r| (1, r)).collect()
        } else {
            vec![(b, d)]
        };
        taken.extend(y.iter().copied());
        if j > 0 {
            // chain: the lowermost free box strictly below κ in the next column
            loop {
                let kappa = *y.last().expect("nonempty");
                let next = t
                    .cells()
                    .iter()
                    .copied()
                    .filter(|&c| c.0 == kappa.0 + 1 && c.1 < kappa.1 && !taken.contains(&c))
                    .min_by_key(|c| c.1);
                match next {
                    Some(c) => {
                        y.push(c);
                        taken.push(c);
                    }
                    None => break,
                }
            }
        }
        ys.push(y);
    }
    if taken.len() != a.n() {
        return Err(Error::Internal(format!("Y-sets do not cover tcd{a}")));
    }
    Ok(ys)
}

fn diagram_shat(a: &Composition) -> Result<Diagram> {
    let ys = shat_rows(a)?;
    // X_i is row i of tcd(α), so box (x, i) ∈ Y_j puts (i, j) in the diagram
    let mut cells: Vec<Cell> = ys
        .iter()
        .enumerate()
        .flat_map(|(j, y)| y.iter().map(move |&(_, row)| (row, j + 1)))
        .collect();
    cells.sort_unstable();
    cells.dedup();
    Diagram::from_cells(cells)
}
