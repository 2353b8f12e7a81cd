//! Equivalence classes of left weak intervals under descent-preserving poset
//! isomorphism: one-step moves, BFS closure, the brute-force oracle, and the
//! correspondence with standard tableaux.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::diagram::{enumerate_st, st_leq, Cell, Diagram, Filling};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::perm::{weak_interval, weak_leq, Perm, Side, WeakInterval};
use crate::poset::{PairClass, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub n: usize,
    /// Sorted by (lo, hi).
    pub members: Vec<WeakInterval>,
    /// ξ_C = hi·lo⁻¹, shared by every member.
    pub xi: Perm,
    /// (a, b, i): members[b] = members[a]·s_i, with a below b.
    pub hasse: Vec<(usize, usize, usize)>,
    pub min_index: usize,
    pub max_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub xi: String,
    pub members: Vec<[String; 2]>,
    pub hasse: Vec<[usize; 3]>,
    pub min: usize,
    pub max: usize,
}

fn require_left(iv: &WeakInterval) -> Result<()> {
    if iv.side != Side::Left {
        return Err(Error::invalid("expected a left weak interval"));
    }
    Ok(())
}

/// The legal moves I → I·s_i: those i for which (i, i+1) is comparable but
/// not a covering pair in P_I.
pub fn one_step_moves(iv: &WeakInterval) -> Result<Vec<(usize, WeakInterval)>> {
    require_left(iv)?;
    let p = Poset::from_interval(iv)?;
    let mut out = Vec::new();
    for i in 1..iv.n() {
        if p.classify_pair(i)? == PairClass::ComparableNonCovering {
            out.push((i, iv.right_translate(i)));
        }
    }
    Ok(out)
}

fn xi_of(iv: &WeakInterval) -> Perm {
    iv.hi.then_apply(&iv.lo.inverse())
}

/// BFS closure of `iv` under one-step moves.
pub fn equiv_class(iv: &WeakInterval, caps: &Caps, mode: Mode) -> Result<EquivClass> {
    require_left(iv)?;
    let xi = xi_of(iv);
    let mut seen: BTreeSet<WeakInterval> = BTreeSet::new();
    seen.insert(iv.clone());
    let mut frontier = vec![iv.clone()];
    let mut edges: Vec<(WeakInterval, WeakInterval, usize)> = Vec::new();
    while !frontier.is_empty() {
        let expanded = exec::map(mode, &frontier, one_step_moves);
        let mut next = Vec::new();
        for (src, moves) in frontier.iter().zip(expanded) {
            for (i, dst) in moves? {
                if xi_of(&dst) != xi {
                    return Err(Error::Internal(format!("ξ changed along {src} ·s{i}")));
                }
                // orient each edge upward: lo(i) < lo(i+1) on the lower end
                if src.lo.at(i) < src.lo.at(i + 1) {
                    edges.push((src.clone(), dst.clone(), i));
                }
                if seen.insert(dst.clone()) {
                    Caps::check("class size", caps.class_size, seen.len())?;
                    next.push(dst);
                }
            }
        }
        frontier = next;
    }
    let members: Vec<WeakInterval> = seen.into_iter().collect();
    let index: BTreeMap<&WeakInterval, usize> =
        members.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut hasse: Vec<(usize, usize, usize)> = edges
        .iter()
        .map(|(a, b, i)| (index[a], index[b], *i))
        .collect();
    hasse.sort_unstable();
    hasse.dedup();
    let min_index = (0..members.len())
        .min_by_key(|&k| (members[k].lo.length(), k))
        .expect("nonempty");
    let max_index = (0..members.len())
        .max_by_key(|&k| (members[k].lo.length(), usize::MAX - k))
        .expect("nonempty");
    let class = EquivClass {
        n: iv.n(),
        members,
        xi,
        hasse,
        min_index,
        max_index,
    };
    class.check_lo_interval()?;
    Ok(class)
}

impl EquivClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn min(&self) -> &WeakInterval {
        &self.members[self.min_index]
    }

    pub fn max(&self) -> &WeakInterval {
        &self.members[self.max_index]
    }

    pub fn index_of(&self, iv: &WeakInterval) -> Option<usize> {
        self.members.binary_search(iv).ok()
    }

    pub fn contains(&self, iv: &WeakInterval) -> bool {
        self.index_of(iv).is_some()
    }

    /// I ⪯ J iff lo(I) ⪯_R lo(J).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        weak_leq(&self.members[a].lo, &self.members[b].lo, Side::Right)
    }

    /// The lower endpoints must form exactly [σ₀, σ₁]_R.
    fn check_lo_interval(&self) -> Result<()> {
        let (_, els) = weak_interval(&self.min().lo, &self.max().lo, Side::Right)
            .map_err(|e| Error::Internal(format!("class lower ends are not an interval: {e}")))?;
        let mut los: Vec<Perm> = self.members.iter().map(|m| m.lo.clone()).collect();
        los.sort();
        if los != els {
            return Err(Error::Internal(
                "class lower ends differ from the right interval they span".into(),
            ));
        }
        Ok(())
    }

    /// The image {I·w₀} of the class, as a class in its own right.
    pub fn times_w0(&self) -> EquivClass {
        let mut images: Vec<(WeakInterval, usize)> = self
            .members
            .iter()
            .enumerate()
            .map(|(k, m)| (m.times_w0(), k))
            .collect();
        images.sort();
        let mut relabel = vec![0; images.len()];
        for (new, (_, old)) in images.iter().enumerate() {
            relabel[*old] = new;
        }
        let members: Vec<WeakInterval> = images.into_iter().map(|(m, _)| m).collect();
        // γ ↦ γw₀ reverses ⪯, so every edge flips
        let mut hasse: Vec<(usize, usize, usize)> = self
            .hasse
            .iter()
            .map(|&(a, b, i)| (relabel[b], relabel[a], self.n - i))
            .collect();
        hasse.sort_unstable();
        let xi = members[0].hi.then_apply(&members[0].lo.inverse());
        EquivClass {
            n: self.n,
            xi,
            hasse,
            min_index: relabel[self.max_index],
            max_index: relabel[self.min_index],
            members,
        }
    }

    pub fn to_json(&self) -> ClassJson {
        ClassJson {
            xi: self.xi.to_string(),
            members: self
                .members
                .iter()
                .map(|m| [m.lo.to_string(), m.hi.to_string()])
                .collect(),
            hasse: self.hasse.iter().map(|&(a, b, i)| [a, b, i]).collect(),
            min: self.min_index,
            max: self.max_index,
        }
    }

    /// Rebuilds a class from JSON, re-deriving nothing but checking shape.
    pub fn from_json(j: &ClassJson) -> Result<EquivClass> {
        let members = j
            .members
            .iter()
            .map(|[lo, hi]| WeakInterval::left(lo.parse()?, hi.parse()?))
            .collect::<Result<Vec<_>>>()?;
        if members.is_empty() || j.min >= members.len() || j.max >= members.len() {
            return Err(Error::invalid("class JSON has bad indices"));
        }
        Ok(EquivClass {
            n: members[0].n(),
            xi: j.xi.parse()?,
            hasse: j.hasse.iter().map(|e| (e[0], e[1], e[2])).collect(),
            min_index: j.min,
            max_index: j.max,
            members,
        })
    }

    /// Graphviz rendering; edges point upward in ⪯.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph class {\n  rankdir=BT;\n");
        for (k, m) in self.members.iter().enumerate() {
            s.push_str(&format!("  n{k} [label=\"[{}, {}]\"];\n", m.lo, m.hi));
        }
        for &(a, b, i) in &self.hasse {
            s.push_str(&format!("  n{a} -> n{b} [label=\"s{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Whether some poset isomorphism I → J preserves left descent sets.
///
/// Elements are matched level by level in rank order; a candidate image must
/// share the descent set and agree on comparability with everything matched
/// so far.
pub fn dp_iso_exists(a: &WeakInterval, b: &WeakInterval, caps: &Caps) -> Result<bool> {
    Ok(dp_iso(a, b, caps)?.is_some())
}

/// A descent-preserving isomorphism as (γ, f(γ)) pairs sorted by γ, if any.
pub fn dp_iso(a: &WeakInterval, b: &WeakInterval, caps: &Caps) -> Result<Option<Vec<(Perm, Perm)>>> {
    require_left(a)?;
    require_left(b)?;
    if a.n() != b.n() || a.rank() != b.rank() {
        return Ok(None);
    }
    let ea = a.elements();
    Caps::check("dp-iso interval size", caps.dp_iso, ea.len())?;
    let eb = b.elements();
    if ea.len() != eb.len() {
        return Ok(None);
    }
    let key = |g: &Perm, base: usize| (g.length() - base, g.descents(Side::Left));
    let (la, lb) = (a.lo.length(), b.lo.length());
    let fa: Vec<_> = ea.iter().map(|g| key(g, la)).collect();
    let fb: Vec<_> = eb.iter().map(|g| key(g, lb)).collect();
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let rel = |els: &[Perm]| -> Vec<Vec<bool>> {
        els.iter()
            .map(|x| els.iter().map(|y| weak_leq(x, y, Side::Left)).collect())
            .collect()
    };
    let ra = rel(&ea);
    let rb = rel(&eb);
    // match in rank order so comparabilities constrain early
    let mut order: Vec<usize> = (0..ea.len()).collect();
    order.sort_by_key(|&k| fa[k].0);
    let mut image = vec![usize::MAX; ea.len()];
    let mut used = vec![false; eb.len()];
    if !backtrack(0, &order, &fa, &fb, &ra, &rb, &mut image, &mut used) {
        return Ok(None);
    }
    Ok(Some(
        ea.iter()
            .zip(&image)
            .map(|(g, &k)| (g.clone(), eb[k].clone()))
            .collect(),
    ))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    depth: usize,
    order: &[usize],
    fa: &[(usize, crate::subset::Subset)],
    fb: &[(usize, crate::subset::Subset)],
    ra: &[Vec<bool>],
    rb: &[Vec<bool>],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..fb.len() {
        if used[y] || fb[y] != fa[x] {
            continue;
        }
        let ok = order[..depth].iter().all(|&p| {
            let q = image[p];
            ra[p][x] == rb[q][y] && ra[x][p] == rb[y][q]
        });
        if !ok {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if backtrack(depth + 1, order, fa, fb, ra, rb, image, used) {
            return true;
        }
        used[y] = false;
        image[x] = usize::MAX;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    NotFree(Cell, Cell),
    SizeDiffers { class: usize, tableaux: usize },
    OutsideClass { tableau: String, interval: WeakInterval },
    Repeated(WeakInterval),
    OrderDiffers { first: WeakInterval, second: WeakInterval },
}

#[derive(Debug, Clone)]
pub struct BijectionReport {
    /// Tableau on D^x paired with its image Σ_L(P_{T^x}).
    pub pairing: Vec<(Filling, WeakInterval)>,
    pub mismatches: Vec<Mismatch>,
}

impl BijectionReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks that T ↦ Σ_L(P_{T^x}) is an order isomorphism (ST(D^x), ⩽) → (C, ⪯).
pub fn class_tableau_bijection(
    class: &EquivClass,
    d: &Diagram,
    caps: &Caps,
    mode: Mode,
) -> Result<BijectionReport> {
    let mut mismatches = Vec::new();
    if let Some((a, b)) = d.find_upper_right_pair() {
        mismatches.push(Mismatch::NotFree(a, b));
        return Ok(BijectionReport {
            pairing: Vec::new(),
            mismatches,
        });
    }
    let tabs = enumerate_st(&d.x_reflect(), caps, mode)?;
    if tabs.len() != class.len() {
        mismatches.push(Mismatch::SizeDiffers {
            class: class.len(),
            tableaux: tabs.len(),
        });
    }
    let images: Vec<Result<WeakInterval>> = exec::map(mode, &tabs, |t| t.x_reflect().sigma_l());
    let mut pairing = Vec::with_capacity(tabs.len());
    let mut idx = Vec::with_capacity(tabs.len());
    let mut hit = vec![false; class.len()];
    for (t, iv) in tabs.into_iter().zip(images) {
        let iv = iv?;
        match class.index_of(&iv) {
            Some(k) => {
                if hit[k] {
                    mismatches.push(Mismatch::Repeated(iv.clone()));
                }
                hit[k] = true;
                idx.push(Some(k));
            }
            None => {
                mismatches.push(Mismatch::OutsideClass {
                    tableau: format!("{t:?}"),
                    interval: iv.clone(),
                });
                idx.push(None);
            }
        }
        pairing.push((t, iv));
    }
    if mismatches.is_empty() {
        let m = pairing.len();
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
        let bad: Vec<Option<(usize, usize)>> = exec::map(mode, &pairs, |&(a, b)| {
            let (ka, kb) = (idx[a].unwrap(), idx[b].unwrap());
            let t_order = st_leq(&pairing[a].0, &pairing[b].0).unwrap_or(false);
            (t_order != class.leq(ka, kb)).then_some((a, b))
        });
        if let Some((a, b)) = bad.into_iter().flatten().next() {
            mismatches.push(Mismatch::OrderDiffers {
                first: pairing[a].1.clone(),
                second: pairing[b].1.clone(),
            });
        }
    }
    Ok(BijectionReport {
        pairing,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: &str, hi: &str) -> WeakInterval {
        WeakInterval::left(lo.parse().unwrap(), hi.parse().unwrap()).unwrap()
    }

    #[test]
    fn moves() {
        assert!(one_step_moves(&iv("1234", "4321")).unwrap().is_empty());
        let m: Vec<usize> = one_step_moves(&iv("132465", "231564"))
            .unwrap()
            .into_iter()
            .map(|(i, _)| i)
            .collect();
        assert_eq!(m, vec![3]);
        let m: Vec<usize> = one_step_moves(&iv("132456", "142563"))
            .unwrap()
            .into_iter()
            .map(|(i, _)| i)
            .collect();
        assert_eq!(m, vec![1, 3]);
    }

    #[test]
    fn nine_member_class() {
        let c = equiv_class(&iv("132456", "142563"), &Caps::default(), Mode::Parallel).unwrap();
        assert_eq!(c.len(), 9);
        assert_eq!(c.min().to_string(), "[132456, 142563]_L");
        assert_eq!(c.max().to_string(), "[345126, 456123]_L");
        assert_eq!(c.hasse.len(), 11);
        let seq = equiv_class(&iv("132456", "142563"), &Caps::default(), Mode::Sequential).unwrap();
        assert_eq!(c, seq);
        let back = EquivClass::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn singleton_class() {
        let c = equiv_class(&iv("123456", "654321"), &Caps::default(), Mode::Sequential).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.hasse.is_empty());
    }

    #[test]
    fn oracle_examples() {
        let caps = Caps::default();
        let a = iv("132465", "231564");
        assert!(dp_iso_exists(&a, &a, &caps).unwrap());
        assert!(dp_iso_exists(&a, &iv("134652", "235641"), &caps).unwrap());
        assert!(!dp_iso_exists(&iv("123", "213"), &iv("123", "132"), &caps).unwrap());
        let tiny = Caps { dp_iso: 1, ..caps };
        assert!(dp_iso_exists(&iv("123", "321"), &iv("123", "321"), &tiny).is_err());
    }

    #[test]
    fn bijection_on_nine_member_class() {
        let caps = Caps::default();
        let c = equiv_class(&iv("132456", "142563"), &caps, Mode::Sequential).unwrap();
        let d = Diagram::from_cells(vec![(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (5, 1)]).unwrap();
        let r = class_tableau_bijection(&c, &d, &caps, Mode::Parallel).unwrap();
        assert!(r.verified(), "{:?}", r.mismatches);
        assert_eq!(r.pairing.len(), 9);
        let bad = Diagram::from_cells(vec![(1, 1), (2, 2)]).unwrap();
        let r = class_tableau_bijection(&c, &bad, &caps, Mode::Sequential).unwrap();
        assert!(matches!(r.mismatches[0], Mismatch::NotFree(..)));
    }

    #[test]
    fn twisted_class_image() {
        let caps = Caps::default();
        let c = equiv_class(&iv("132456", "142563"), &caps, Mode::Sequential).unwrap();
        let t = c.times_w0();
        let direct = equiv_class(&c.members[0].times_w0(), &caps, Mode::Sequential).unwrap();
        assert_eq!(t, direct);
    }
}
