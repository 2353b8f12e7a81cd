//! Compositions, their set/comp correspondence, and the two standard diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Reverse,
    Complement,
    Transpose,
    Sort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Composition,
    Ribbon,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts ℓ(α).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// α_i, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Partial sums α₁, α₁+α₂, … excluding n.
    pub fn set_of(&self) -> Subset {
        let mut acc = 0;
        let mut s = Subset::EMPTY;
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            s.insert(acc);
        }
        s
    }

    pub fn comp_of(set: Subset, n: usize) -> Result<Self> {
        set.check_within(n)?;
        if n == 0 {
            return Ok(Composition(vec![]));
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in set.iter().chain(std::iter::once(n)) {
            parts.push(i - prev);
            prev = i;
        }
        Ok(Composition(parts))
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        Composition::comp_of(self.set_of().complement(n), n).expect("complement stays in range")
    }

    /// α^t = (α^r)^c.
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    pub fn sorted(&self) -> Self {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Composition(p)
    }

    pub fn transform(&self, op: Transform) -> Self {
        match op {
            Transform::Reverse => self.reverse(),
            Transform::Complement => self.complement(),
            Transform::Transpose => self.transpose(),
            Transform::Sort => self.sorted(),
        }
    }

    /// Every part except possibly the last is at least 2.
    pub fn is_peak(&self) -> bool {
        self.0.iter().take(self.len().saturating_sub(1)).all(|&p| p >= 2)
    }

    /// tcd(α): row i from the bottom has α_i left-justified cells.
    pub fn tcd(&self) -> Diagram {
        let cells = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |x| (x, i + 1)))
            .collect();
        Diagram::from_cells(cells).expect("composition diagrams are valid")
    }

    /// trd(α): column i has α_i cells, occupying rows k_i+1 … k_i+α_i with
    /// k_i = Σ_{r>i} (α_r − 1). Adjacent columns share one row.
    pub fn trd(&self) -> Diagram {
        let l = self.len();
        let mut cells = Vec::with_capacity(self.n());
        let mut k = 0;
        for i in (1..=l).rev() {
            let a = self.part(i);
            cells.extend((1..=a).map(|j| (i, j + k)));
            k += a - 1;
        }
        Diagram::from_cells(cells).expect("ribbon diagrams are valid")
    }

    pub fn diagram_of(&self, kind: DiagramKind) -> Result<Diagram> {
        if self.is_empty() {
            return Err(Error::invalid("diagram of the empty composition"));
        }
        Ok(match kind {
            DiagramKind::Composition => self.tcd(),
            DiagramKind::Ribbon => self.trd(),
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(&t);
        if inner.is_empty() {
            return Ok(Composition(vec![]));
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All compositions of n, ordered by their subsets' bitmasks.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(vec![])];
    }
    Subset::all(n)
        .map(|s| Composition::comp_of(s, n).expect("in range"))
        .collect()
}
