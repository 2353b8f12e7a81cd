//! 0-Hecke modules as explicit generator matrices.
//!
//! Every generator matrix built here has at most two nonzero entries per
//! column, so they are stored column-sparse and the relation check stays
//! cheap even for modules of dimension in the thousands.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::classes::dp_iso;
use crate::comp::{all_compositions, Composition};
use crate::descent::{build_d_s_rho, build_d_sigma_s, family_diagram, FamilyRequest};
use crate::diagram::{canonical_fill, CanonicalKind, Diagram, Filling, Reading};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::families::{enumerate_family, family_class, family_interval, Family, FamilyModule};
use crate::perm::{descent_class, longest_parabolic, w1, Perm, Side, WeakInterval};
use crate::poset::Poset;
use crate::subset::Subset;

/// A square integer matrix stored by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    /// cols[j] = nonzero (row, value) pairs, rows increasing.
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j, 1)]).collect(),
        }
    }

    fn from_columns(dim: usize, cols: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = cols.into_iter().map(normalize).collect();
        SparseMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].iter().find(|e| e.0 == i).map_or(0, |e| e.1)
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    /// The image of a sparse vector.
    pub fn apply(&self, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let mut acc = Vec::new();
        for &(k, x) in v {
            acc.extend(self.cols[k].iter().map(|&(i, y)| (i, x * y)));
        }
        normalize(acc)
    }

    /// self · other.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SparseMatrix {
            dim: self.dim,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix, scale: i64) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize(a.iter().copied().chain(b.iter().map(|&(i, y)| (i, scale * y))).collect()))
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn neg(&self) -> SparseMatrix {
        SparseMatrix::zero(self.dim).add(self, -1)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.dim];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, x) in c {
                cols[i].push((j, x));
            }
        }
        SparseMatrix { dim: self.dim, cols }
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.dim]; self.dim];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, x) in c {
                m[i][j] = x;
            }
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<SparseMatrix> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix is not square"));
        }
        let cols = (0..dim)
            .map(|j| (0..dim).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect())
            .collect();
        Ok(SparseMatrix { dim, cols })
    }
}

fn normalize(mut v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Which generators the stored matrices represent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    /// π_i.
    #[serde(rename = "pi")]
    Pi,
    /// π̄_i = π_i − 1.
    #[serde(rename = "pibar")]
    PiBar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeModule {
    n: usize,
    basis: Vec<String>,
    flavor: Flavor,
    gens: Vec<SparseMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub n: usize,
    pub flavor: Flavor,
    pub basis: Vec<String>,
    /// Row-major matrices of π_1, …, π_{n−1}.
    pub pi: Vec<Vec<Vec<i64>>>,
}

impl HeckeModule {
    /// Checks the 0-Hecke relations before handing the module out.
    pub fn new(n: usize, basis: Vec<String>, flavor: Flavor, gens: Vec<SparseMatrix>) -> Result<Self> {
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::Internal(format!("{} generators for n = {n}", gens.len())));
        }
        if gens.iter().any(|g| g.dim() != basis.len()) {
            return Err(Error::Internal("generator dimension differs from the basis".into()));
        }
        let m = HeckeModule { n, basis, flavor, gens };
        m.check_relations()?;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The stored matrix of generator i (1-based).
    pub fn generator(&self, i: usize) -> &SparseMatrix {
        &self.gens[i - 1]
    }

    /// The matrices of π_1, …, π_{n−1}.
    pub fn pi_matrices(&self) -> Vec<SparseMatrix> {
        match self.flavor {
            Flavor::Pi => self.gens.clone(),
            Flavor::PiBar => {
                let id = SparseMatrix::identity(self.dim());
                self.gens.iter().map(|g| g.add(&id, 1)).collect()
            }
        }
    }

    pub fn to_pi_flavor(&self) -> HeckeModule {
        HeckeModule {
            n: self.n,
            basis: self.basis.clone(),
            flavor: Flavor::Pi,
            gens: self.pi_matrices(),
        }
    }

    /// π_i² = π_i, the braid relation, and far commutation.
    pub fn check_relations(&self) -> Result<()> {
        let pi = self.pi_matrices();
        let k = pi.len();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        let bad = exec::map(Mode::default(), &pairs, |&(i, j)| {
            let (a, b) = (&pi[i], &pi[j]);
            let ok = if i == j {
                a.mul(a) == *a
            } else if j == i + 1 {
                a.mul(b).mul(a) == b.mul(a).mul(b)
            } else {
                a.mul(b) == b.mul(a)
            };
            (!ok).then_some((i + 1, j + 1))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((i, j)) => Err(Error::Internal(format!(
                "0-Hecke relation fails for generators {i} and {j}"
            ))),
        }
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            n: self.n,
            flavor: self.flavor,
            basis: self.basis.clone(),
            pi: self.pi_matrices().iter().map(SparseMatrix::to_dense).collect(),
        }
    }

    pub fn from_json(j: &ModuleJson) -> Result<HeckeModule> {
        let pi = j.pi.iter().map(|m| SparseMatrix::from_dense(m)).collect::<Result<Vec<_>>>()?;
        let gens = match j.flavor {
            Flavor::Pi => pi,
            Flavor::PiBar => {
                let id = SparseMatrix::identity(j.basis.len());
                pi.iter().map(|g| g.add(&id, -1)).collect()
            }
        };
        HeckeModule::new(j.n, j.basis.clone(), j.flavor, gens)
    }
}

#[derive(Debug, Clone)]
pub enum ModuleSource {
    /// B(I).
    B(WeakInterval),
    /// B̄(I).
    BBar(WeakInterval),
    /// M_P on Σ_L(P).
    M(Poset),
    /// The π̄-action on standard peak immaculate tableaux.
    Spit(Composition),
}

fn perm_basis_module(
    n: usize,
    basis: &[Perm],
    flavor: Flavor,
    on_descent: i64,
) -> Result<HeckeModule> {
    let index: HashMap<&Perm, usize> = basis.iter().enumerate().map(|(k, g)| (g, k)).collect();
    let gens = (1..n)
        .map(|i| {
            let cols = basis
                .iter()
                .map(|g| {
                    if g.descents(Side::Left).contains(i) {
                        vec![(index[g], on_descent)]
                    } else {
                        index.get(&g.left_mul_s(i)).map_or(vec![], |&k| vec![(k, 1)])
                    }
                })
                .collect();
            SparseMatrix::from_columns(basis.len(), cols)
        })
        .collect();
    HeckeModule::new(n, basis.iter().map(|g| g.to_string()).collect(), flavor, gens)
}

pub fn build_module(source: &ModuleSource, caps: &Caps) -> Result<HeckeModule> {
    match source {
        ModuleSource::B(iv) => {
            require_left(iv)?;
            perm_basis_module(iv.n(), &iv.elements(), Flavor::Pi, 1)
        }
        ModuleSource::BBar(iv) => {
            require_left(iv)?;
            perm_basis_module(iv.n(), &iv.elements(), Flavor::PiBar, -1)
        }
        ModuleSource::M(p) => perm_basis_module(p.n(), &p.linear_extensions_l(caps)?, Flavor::Pi, 1),
        ModuleSource::Spit(a) => spit_module(a, caps),
    }
}

fn require_left(iv: &WeakInterval) -> Result<()> {
    if iv.side != Side::Left {
        return Err(Error::invalid("interval modules need a left weak interval"));
    }
    Ok(())
}

fn spit_module(a: &Composition, caps: &Caps) -> Result<HeckeModule> {
    let n = a.n();
    let tabs: Vec<Filling> = enumerate_family(Family::Spit, a, caps, Mode::default())?
        .into_iter()
        .map(|t| t.filling)
        .collect();
    let index: HashMap<&Filling, usize> = tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut cols = Vec::with_capacity(tabs.len());
        for (k, t) in tabs.iter().enumerate() {
            let (p, q) = (t.pos(i), t.pos(i + 1));
            let s = t.swap_entries(i);
            let col = if p.1 >= q.1 {
                vec![(k, -1)]
            } else if let Some(&j) = index.get(&s) {
                vec![(j, 1)]
            } else {
                // covers i, i+1 both in the first column, and every other
                // swap that breaks a peak prefix
                vec![]
            };
            cols.push(col);
        }
        gens.push(SparseMatrix::from_columns(tabs.len(), cols));
    }
    HeckeModule::new(n, tabs.iter().map(|t| format!("{t:?}")).collect(), Flavor::PiBar, gens)
}

/// θ∘χ: the dual module twisted by θ. Its π̄_i is the transpose of −π_i.
pub fn twist_theta_chi(m: &HeckeModule) -> Result<HeckeModule> {
    let gens = m.pi_matrices().iter().map(|g| g.transpose().neg()).collect();
    HeckeModule::new(m.n, m.basis.clone(), Flavor::PiBar, gens)
}

/// A signed basis map: basis vector k goes to sign · (target basis vector).
pub type SignedMap = Vec<(usize, i64)>;

/// Whether φ intertwines the π-actions of `m` and `target`.
pub fn intertwines(m: &HeckeModule, target: &HeckeModule, phi: &SignedMap) -> bool {
    if m.n != target.n || m.dim() != target.dim() || phi.len() != m.dim() {
        return false;
    }
    let (a, b) = (m.pi_matrices(), target.pi_matrices());
    let push = |v: &[(usize, i64)]| normalize(v.iter().map(|&(k, x)| (phi[k].0, phi[k].1 * x)).collect());
    a.iter().zip(&b).all(|(ai, bi)| {
        (0..m.dim()).all(|k| {
            let lhs = bi.apply(&[phi[k]]);
            let rhs = push(ai.column(k));
            lhs == rhs
        })
    })
}

/// δ_γ ↦ (−1)^{ℓ(γ)} γw₀, from θ∘χ[B([σ,ρ])] to B([ρw₀, σw₀]).
pub fn twist_bijection(iv: &WeakInterval) -> Result<(HeckeModule, HeckeModule, SignedMap)> {
    let caps = Caps::default();
    let twisted = twist_theta_chi(&build_module(&ModuleSource::B(iv.clone()), &caps)?)?;
    let target_iv = iv.times_w0();
    let target = build_module(&ModuleSource::B(target_iv.clone()), &caps)?;
    let w0 = Perm::w0(iv.n());
    let index: HashMap<Perm, usize> = target_iv.elements().into_iter().enumerate().map(|(k, g)| (g, k)).collect();
    let phi = iv
        .elements()
        .iter()
        .map(|g| {
            let sign = if g.length() % 2 == 0 { 1 } else { -1 };
            (index[&g.then_apply(&w0)], sign)
        })
        .collect();
    Ok((twisted, target, phi))
}

/// The basis bijection B(I) → B(J) induced by a descent-preserving
/// isomorphism, checked against the generator matrices.
pub fn intertwiner_from_dp_iso(i: &WeakInterval, j: &WeakInterval, caps: &Caps) -> Result<Option<SignedMap>> {
    let Some(pairs) = dp_iso(i, j, caps)? else {
        return Ok(None);
    };
    let mi = build_module(&ModuleSource::B(i.clone()), caps)?;
    let mj = build_module(&ModuleSource::B(j.clone()), caps)?;
    let src: HashMap<Perm, usize> = i.elements().into_iter().enumerate().map(|(k, g)| (g, k)).collect();
    let dst: HashMap<Perm, usize> = j.elements().into_iter().enumerate().map(|(k, g)| (g, k)).collect();
    let mut phi = vec![(0, 0); mi.dim()];
    for (g, h) in pairs {
        phi[src[&g]] = (dst[&h], 1);
    }
    if !intertwines(&mi, &mj, &phi) {
        return Err(Error::Internal(format!(
            "descent-preserving isomorphism {i} → {j} does not intertwine"
        )));
    }
    Ok(Some(phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HullCoverKind {
    InjectiveHull,
    ProjectiveCover,
}

#[derive(Debug, Clone)]
pub enum HullCoverRequest {
    /// Injective hull of B([w₀(S), ρ]).
    Lower { s: Subset, rho: Perm },
    /// Projective cover of B([σ, w₁(S)]).
    Upper { sigma: Perm, s: Subset },
    /// A family module, through its closed-form shortcut when one exists.
    Family {
        module: FamilyModule,
        alpha: Composition,
        kind: HullCoverKind,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullCoverResult {
    pub kind: HullCoverKind,
    pub interval: WeakInterval,
    pub a: Subset,
    pub b: Subset,
    pub is_projective_indecomposable: bool,
}

fn result(kind: HullCoverKind, a: Subset, b: Subset, n: usize) -> Result<HullCoverResult> {
    if !a.is_subset(b) {
        return Err(Error::Internal(format!("hull/cover sets {a} ⊄ {b}")));
    }
    Ok(HullCoverResult {
        kind,
        interval: WeakInterval::left(longest_parabolic(a, n)?, w1(b, n)?)?,
        a,
        b,
        is_projective_indecomposable: a == b,
    })
}

fn require_free(d: &Diagram) -> Result<()> {
    match d.find_upper_right_pair() {
        None => Ok(()),
        Some((p, q)) => Err(Error::invalid(format!(
            "diagram has the strictly upper-right pair {p:?}, {q:?}"
        ))),
    }
}

fn rows_set(d: &Diagram) -> Subset {
    d.profiles().0.set_of()
}

/// Des_L(BTLR(F^→_D)).
fn btlr_right_descents(d: &Diagram) -> Result<Subset> {
    Ok(canonical_fill(d, CanonicalKind::Right).reading(&Reading::Btlr)?.descents(Side::Left))
}

/// Des_L(LRBT(F^↓_E)).
fn lrbt_down_descents(d: &Diagram) -> Result<Subset> {
    Ok(canonical_fill(d, CanonicalKind::Down).reading(&Reading::Lrbt)?.descents(Side::Left))
}

fn lower_hull(s: Subset, rho: &Perm) -> Result<HullCoverResult> {
    let d = build_d_s_rho(s, rho)?;
    require_free(&d)?;
    result(HullCoverKind::InjectiveHull, btlr_right_descents(&d)?, rows_set(&d), rho.n())
}

fn upper_cover(sigma: &Perm, s: Subset) -> Result<HullCoverResult> {
    let e = build_d_sigma_s(sigma, s)?;
    let d = e.diagram();
    require_free(d)?;
    let n = sigma.n();
    let a = d.profiles().1.set_of().complement(n);
    result(HullCoverKind::ProjectiveCover, a, lrbt_down_descents(d)?, n)
}

pub fn hull_or_cover(req: &HullCoverRequest) -> Result<HullCoverResult> {
    match req {
        HullCoverRequest::Lower { s, rho } => lower_hull(*s, rho),
        HullCoverRequest::Upper { sigma, s } => upper_cover(sigma, *s),
        HullCoverRequest::Family { module, alpha, kind } => match family_shortcut(*module, alpha, *kind)? {
            Some(r) => Ok(r),
            None => family_general(*module, alpha, *kind),
        },
    }
}

/// Closed-form hull/cover formulas for the family modules.
pub fn family_shortcut(module: FamilyModule, a: &Composition, kind: HullCoverKind) -> Result<Option<HullCoverResult>> {
    use FamilyModule as F;
    use HullCoverKind::*;
    if !module.accepts(a) {
        return Err(Error::invalid(format!("{a} is not valid for family {}", module.name())));
    }
    let n = a.n();
    let sc = a.set_of().complement(n);
    // [n−ℓ] minus the partial sums β_i = α_1 + … + α_i − i lying below n − ℓ
    let v_set = || -> Subset {
        let top = n - a.len();
        let mut keep = Subset::interval(top);
        let mut partial = 0;
        for i in 1..a.len() {
            partial += a.part(i) - 1;
            if partial < top {
                keep = Subset::from_bits(keep.bits() & !(1 << partial));
            }
        }
        keep
    };
    let fam = |r: FamilyRequest| family_diagram(&r);
    let out = match (module, kind) {
        (F::P, _) => result(kind, sc, sc, n)?,
        (F::V, InjectiveHull) => result(kind, v_set(), rows_set(&fam(FamilyRequest::V(a.clone()))?), n)?,
        (F::X, InjectiveHull) => {
            let r = rows_set(&fam(FamilyRequest::X(a.clone()))?);
            result(kind, r, r, n)?
        }
        (F::ShatCanonical, InjectiveHull) => {
            let c = fam(FamilyRequest::ShatCanonical(a.clone()))?;
            result(kind, btlr_right_descents(&c)?, rows_set(&c), n)?
        }
        (F::Q, ProjectiveCover) => {
            let g = fam(FamilyRequest::Q(a.clone()))?;
            result(kind, Subset::evens(a.len() - 1), lrbt_down_descents(&g)?, n)?
        }
        (F::Q, InjectiveHull) => {
            let r = a.reverse().set_of();
            result(kind, r, r, n)?
        }
        (F::RV, ProjectiveCover) => {
            let r = rows_set(&fam(FamilyRequest::V(a.clone()))?);
            result(kind, r.transpose(n), v_set().transpose(n), n)?
        }
        (F::RX, ProjectiveCover) => {
            let r = rows_set(&fam(FamilyRequest::X(a.clone()))?).transpose(n);
            result(kind, r, r, n)?
        }
        (F::RShat, ProjectiveCover) => {
            let c = fam(FamilyRequest::ShatCanonical(a.clone()))?;
            result(kind, rows_set(&c).transpose(n), btlr_right_descents(&c)?.transpose(n), n)?
        }
        _ => return Ok(None),
    };
    Ok(Some(out))
}

/// The general diagram formula applied to a class member of the right
/// shape: a lower descent interval for hulls, an upper one for covers.
pub fn family_general(module: FamilyModule, a: &Composition, kind: HullCoverKind) -> Result<HullCoverResult> {
    let summary = family_class(module, a, &Caps::default(), Mode::default())?;
    let candidates = [family_interval(module, a)?, summary.min, summary.max];
    match kind {
        HullCoverKind::InjectiveHull => candidates
            .iter()
            .find_map(|iv| iv.lower_descent_set().map(|s| lower_hull(s, &iv.hi)))
            .unwrap_or_else(|| Err(Error::invalid(format!("no lower descent interval found for {}", module.name())))),
        HullCoverKind::ProjectiveCover => candidates
            .iter()
            .find_map(|iv| iv.upper_descent_set().map(|s| upper_cover(&iv.lo, s)))
            .unwrap_or_else(|| Err(Error::invalid(format!("no upper descent interval found for {}", module.name())))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// α with S ⊆ set(α)^c ⊆ T, in the order of `all_compositions`.
    pub summands: Vec<Composition>,
    /// dim P_α for each summand.
    pub dims: Vec<usize>,
    /// |[w₀(S), w₁(T)]_L|.
    pub total: usize,
}

/// B([w₀(S), w₁(T)]_L) ≅ ⊕ P_α, with the dimension audit.
pub fn projective_decomposition(s: Subset, t: Subset, n: usize) -> Result<Decomposition> {
    let whole = descent_class(s, t, n)?;
    let summands: Vec<Composition> = all_compositions(n)
        .into_iter()
        .filter(|a| {
            let c = a.set_of().complement(n);
            s.is_subset(c) && c.is_subset(t)
        })
        .collect();
    let dims = summands
        .iter()
        .map(|a| {
            let c = a.set_of().complement(n);
            Ok(descent_class(c, c, n)?.elements().len())
        })
        .collect::<Result<Vec<_>>>()?;
    let total = whole.elements().len();
    if dims.iter().sum::<usize>() != total {
        return Err(Error::Internal(format!("dimension audit fails for [{s}, {t}]")));
    }
    Ok(Decomposition { summands, dims, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_left_intervals;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn set(s: &str) -> Subset {
        s.parse().unwrap()
    }

    #[test]
    fn sparse_ops() {
        let a = SparseMatrix::from_dense(&[vec![1, 2], vec![0, 3]]).unwrap();
        assert_eq!(a.mul(&SparseMatrix::identity(2)), a);
        assert_eq!(a.transpose().to_dense(), vec![vec![1, 0], vec![2, 3]]);
        assert_eq!(a.mul(&a).to_dense(), vec![vec![1, 8], vec![0, 9]]);
        assert_eq!(a.add(&a, -1), SparseMatrix::zero(2));
    }

    #[test]
    fn one_dimensional() {
        let caps = Caps::default();
        let s = p("2143");
        let m = build_module(&ModuleSource::B(WeakInterval::left(s.clone(), s).unwrap()), &caps).unwrap();
        assert_eq!(m.dim(), 1);
        let pi = m.pi_matrices();
        assert_eq!((pi[0].get(0, 0), pi[1].get(0, 0), pi[2].get(0, 0)), (1, 0, 1));
        let t = twist_theta_chi(&m).unwrap().pi_matrices();
        assert_eq!((t[0].get(0, 0), t[1].get(0, 0), t[2].get(0, 0)), (0, 1, 0));
    }

    #[test]
    fn all_small_intervals_are_modules() {
        let caps = Caps::default();
        for iv in all_left_intervals(4) {
            let b = build_module(&ModuleSource::B(iv.clone()), &caps).unwrap();
            assert_eq!(b.dim(), iv.elements().len());
            build_module(&ModuleSource::BBar(iv.clone()), &caps).unwrap();
            let (tw, target, phi) = twist_bijection(&iv).unwrap();
            assert!(intertwines(&tw, &target, &phi), "{iv}");
            let back = twist_theta_chi(&tw).unwrap();
            assert_eq!(back.pi_matrices(), b.pi_matrices());
        }
    }

    #[test]
    fn m_of_interval_poset_is_b() {
        let caps = Caps::default();
        let iv = WeakInterval::left(p("1324"), p("3421")).unwrap();
        let poset = Poset::from_interval(&iv).unwrap();
        let m = build_module(&ModuleSource::M(poset), &caps).unwrap();
        let b = build_module(&ModuleSource::B(iv), &caps).unwrap();
        assert_eq!(m.pi_matrices(), b.pi_matrices());
    }

    #[test]
    fn spit_dimension() {
        let caps = Caps::default();
        for a in ["(3,2,3,1)", "(2,2)", "(3,1)", "(4)"] {
            let a: Composition = a.parse().unwrap();
            let m = build_module(&ModuleSource::Spit(a.clone()), &caps).unwrap();
            let iv = family_interval(FamilyModule::Q, &a).unwrap();
            assert_eq!(m.dim(), iv.elements().len(), "{a}");
        }
    }

    #[test]
    fn json_round_trip() {
        let caps = Caps::default();
        let iv = WeakInterval::left(p("132"), p("321")).unwrap();
        let m = build_module(&ModuleSource::BBar(iv), &caps).unwrap();
        assert_eq!(HeckeModule::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn intertwiner_on_class_edges() {
        let caps = Caps::default();
        let i = WeakInterval::left(p("132456"), p("142563")).unwrap();
        let j = i.right_translate(1);
        assert!(intertwiner_from_dp_iso(&i, &j, &caps).unwrap().is_some());
        assert!(intertwiner_from_dp_iso(&i, &i, &caps).unwrap().is_some());
        let a = WeakInterval::left(p("123"), p("213")).unwrap();
        let b = WeakInterval::left(p("123"), p("132")).unwrap();
        assert!(intertwiner_from_dp_iso(&a, &b, &caps).unwrap().is_none());
    }

    #[test]
    fn hull_examples() {
        let a: Composition = "(3,2,4)".parse().unwrap();
        for (m, k) in [
            (FamilyModule::V, HullCoverKind::InjectiveHull),
            (FamilyModule::X, HullCoverKind::InjectiveHull),
            (FamilyModule::ShatCanonical, HullCoverKind::InjectiveHull),
            (FamilyModule::RV, HullCoverKind::ProjectiveCover),
            (FamilyModule::RX, HullCoverKind::ProjectiveCover),
            (FamilyModule::RShat, HullCoverKind::ProjectiveCover),
        ] {
            let short = family_shortcut(m, &a, k).unwrap().unwrap();
            assert_eq!(short, family_general(m, &a, k).unwrap(), "{}", m.name());
        }
        let x = family_shortcut(FamilyModule::X, &a, HullCoverKind::InjectiveHull).unwrap().unwrap();
        assert!(x.is_projective_indecomposable);
        let q: Composition = "(3,2,3,1)".parse().unwrap();
        let h = family_shortcut(FamilyModule::Q, &q, HullCoverKind::InjectiveHull).unwrap().unwrap();
        assert_eq!(h.a, set("{1,4,6}"));
        assert_eq!(h, family_general(FamilyModule::Q, &q, HullCoverKind::InjectiveHull).unwrap());
        let c = family_shortcut(FamilyModule::Q, &q, HullCoverKind::ProjectiveCover).unwrap().unwrap();
        assert_eq!(c, family_general(FamilyModule::Q, &q, HullCoverKind::ProjectiveCover).unwrap());
    }

    #[test]
    fn non_free_is_rejected() {
        let mut rejected = 0;
        for iv in all_left_intervals(4) {
            let Some(s) = iv.lower_descent_set() else { continue };
            let free = build_d_s_rho(s, &iv.hi).unwrap().is_free_upper_right();
            match hull_or_cover(&HullCoverRequest::Lower { s, rho: iv.hi.clone() }) {
                Ok(r) => assert!(free && r.a.is_subset(r.b)),
                Err(e) => {
                    assert!(!free && e.to_string().contains("upper-right"), "{e}");
                    rejected += 1;
                }
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn decomposition() {
        let d = projective_decomposition(set("{1}"), set("{1,3}"), 4).unwrap();
        assert_eq!(d.summands.len(), 2);
        let all = projective_decomposition(Subset::default(), set("{1,2,3}"), 4).unwrap();
        assert_eq!(all.summands.len(), 8);
        assert_eq!(all.total, 24);
        let one = projective_decomposition(set("{2}"), set("{2}"), 4).unwrap();
        assert_eq!(one.summands, vec!["(1,2,1)".parse::<Composition>().unwrap()]);
    }
}
