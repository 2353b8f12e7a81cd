//! Labeled posets on [n], their left linear extensions, regularity, and the
//! correspondence with left weak intervals.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::{Perm, Side, WeakInterval};

/// A partial order on [n] (n ≤ 32). `up[a]` has bit `b` set iff a+1 ⪯ b+1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairClass {
    CoveringPair,
    ComparableNonCovering,
    Incomparable,
}

/// JSON shape of a poset: covering pairs only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `pairs` (1-based `(a, b)`
    /// meaning a ⪯ b), rejecting cycles.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n > 32 {
            return Err(Error::invalid("posets are limited to 32 elements"));
        }
        let mut up: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("relation ({a},{b}) outside [{n}]")));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] & (1 << k) != 0 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::invalid(format!(
                        "relations are not antisymmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Poset { n, up })
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::from_relations(n, &pairs).expect("chain")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_relations(n, &[]).expect("antichain")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// a ⪯ b, 1-based.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// a ⋖ b: a ≺ b with nothing strictly between.
    pub fn covers_pair(&self, a: usize, b: usize) -> bool {
        if !self.lt(a, b) {
            return false;
        }
        let between = self.up[a - 1] & self.down_mask(b) & !(1 << (a - 1)) & !(1 << (b - 1));
        between == 0
    }

    fn down_mask(&self, b: usize) -> u32 {
        let mut m = 0;
        for a in 0..self.n {
            if self.up[a] & (1 << (b - 1)) != 0 {
                m |= 1 << a;
            }
        }
        m
    }

    /// Covering pairs (a, b), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.covers_pair(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Strict relations as (a, b) pairs, sorted.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Σ_L(P) = {σ : a ⪯ b ⇒ σ(a) ≤ σ(b)}, sorted.
    ///
    /// Values 1, 2, … are handed out in turn to labels whose strict
    /// predecessors have all been served.
    pub fn linear_extensions_l(&self, caps: &Caps) -> Result<Vec<Perm>> {
        Caps::check("linear extensions (n)", caps.n_linext, self.n)?;
        let preds: Vec<u32> = (1..=self.n)
            .map(|b| self.down_mask(b) & !(1 << (b - 1)))
            .collect();
        let mut out = Vec::new();
        let mut sigma = vec![0usize; self.n];
        self.extend(&preds, 0, 1, &mut sigma, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend(&self, preds: &[u32], used: u32, v: usize, sigma: &mut [usize], out: &mut Vec<Perm>) {
        if v > self.n {
            out.push(Perm::from_window(sigma).expect("bijection"));
            return;
        }
        for a in 0..self.n {
            if used & (1 << a) == 0 && preds[a] & !used == 0 {
                sigma[a] = v;
                self.extend(preds, used | (1 << a), v + 1, sigma, out);
            }
        }
    }

    /// x ⪯ z and x < y < z (or z < y < x) imply x ⪯ y or y ⪯ z.
    pub fn is_regular(&self) -> bool {
        for x in 1..=self.n {
            for z in 1..=self.n {
                if x == z || !self.leq(x, z) {
                    continue;
                }
                let (lo, hi) = if x < z { (x, z) } else { (z, x) };
                for y in lo + 1..hi {
                    if !self.leq(x, y) && !self.leq(y, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The poset P_I with x ≺ y iff σ(x) < σ(y) and ρ(x) < ρ(y).
    pub fn from_interval(iv: &WeakInterval) -> Result<Poset> {
        if iv.side != Side::Left {
            return Err(Error::invalid("interval_to_poset expects a left interval"));
        }
        let n = iv.n();
        let mut pairs = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                if x != y && iv.lo.at(x) < iv.lo.at(y) && iv.hi.at(x) < iv.hi.at(y) {
                    pairs.push((x, y));
                }
            }
        }
        Poset::from_relations(n, &pairs)
    }

    /// (δ, η) with Σ_L(P) = [δ, η]_L for regular P.
    pub fn extremes_of_regular(&self) -> Result<(Perm, Perm)> {
        if !self.is_regular() {
            return Err(Error::invalid("poset is not regular"));
        }
        let n = self.n;
        let mut delta = vec![0; n];
        let mut eta = vec![0; n];
        for k in 1..=n {
            let mut d = 0;
            let mut e = 0;
            for x in 1..=n {
                let below = self.leq(x, k);
                let inc = !self.comparable(x, k);
                if below || (inc && x < k) {
                    d += 1;
                }
                if below || (inc && x > k) {
                    e += 1;
                }
            }
            delta[k - 1] = d;
            eta[k - 1] = e;
        }
        Ok((Perm::from_window(&delta)?, Perm::from_window(&eta)?))
    }

    /// Σ_L(P) as a left interval (for regular P).
    pub fn sigma_l(&self) -> Result<WeakInterval> {
        let (d, e) = self.extremes_of_regular()?;
        WeakInterval::left(d, e)
    }

    pub fn classify_pair(&self, i: usize) -> Result<PairClass> {
        if i == 0 || i >= self.n {
            return Err(Error::invalid(format!("pair index {i} outside [1,{})", self.n)));
        }
        let (a, b) = (i, i + 1);
        Ok(if self.covers_pair(a, b) || self.covers_pair(b, a) {
            PairClass::CoveringPair
        } else if self.comparable(a, b) {
            PairClass::ComparableNonCovering
        } else {
            PairClass::Incomparable
        })
    }

    /// Applies a label permutation: τ(a) ⪯ τ(b) in the result exactly when
    /// a ⪯ b here.
    pub fn permute_labels(&self, tau: &Perm) -> Poset {
        assert_eq!(tau.n(), self.n);
        let mut up = vec![0u32; self.n];
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.leq(a, b) {
                    up[tau.at(a) - 1] |= 1 << (tau.at(b) - 1);
                }
            }
        }
        Poset { n: self.n, up }
    }

    /// s_i · P: swaps the labels i and i+1.
    pub fn relabel(&self, i: usize) -> Result<Poset> {
        if i == 0 || i >= self.n {
            return Err(Error::invalid(format!("relabel index {i} outside [1,{})", self.n)));
        }
        Ok(self.permute_labels(&Perm::identity(self.n).left_mul_s(i)))
    }

    /// P̄: u ⪯ v iff n+1−u ⪯_P n+1−v.
    pub fn bar(&self) -> Poset {
        self.permute_labels(&Perm::w0(self.n))
    }

    /// Hasse edges with their decoration: `true` marks a strict edge
    /// (lower label greater than upper label).
    pub fn decorated_edges(&self) -> Vec<(usize, usize, bool)> {
        self.covers().into_iter().map(|(a, b)| (a, b, a > b)).collect()
    }

    /// Whether `other` equals `self` as an edge-decorated poset when element
    /// labelled `a` here is identified with `tau(a)` there.
    pub fn same_decorated_under(&self, other: &Poset, tau: &Perm) -> bool {
        let mut mine: Vec<(usize, usize, bool)> = self
            .decorated_edges()
            .into_iter()
            .map(|(a, b, s)| (tau.at(a), tau.at(b), s))
            .collect();
        mine.sort();
        mine == other.decorated_edges()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Poset> {
        let pairs: Vec<_> = j.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::from_relations(j.n, &pairs)
    }
}

/// The regular poset whose left linear extensions are I.
pub fn interval_to_poset(iv: &WeakInterval) -> Result<Poset> {
    Poset::from_interval(iv)
}
