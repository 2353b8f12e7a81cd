//! Subsets of [n−1] (generator index sets) as bitmasks.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A subset of {1, …, 31}. Bit `i` is element `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits & !1)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_iter_checked<I: IntoIterator<Item = usize>>(it: I) -> Result<Self> {
        let mut s = Subset::EMPTY;
        for i in it {
            if i == 0 || i > 31 {
                return Err(Error::invalid(format!("subset element {i} out of range")));
            }
            s.0 |= 1 << i;
        }
        Ok(s)
    }

    /// {1, …, k}.
    pub fn interval(k: usize) -> Self {
        Subset::from_iter_checked(1..=k).expect("in range")
    }

    /// {2, 4, …, 2k}.
    pub fn evens(k: usize) -> Self {
        Subset::from_iter_checked((1..=k).map(|i| 2 * i)).expect("in range")
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..32).contains(&i));
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..32).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    /// [n−1] ∖ self.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::interval(n.saturating_sub(1)).0 & !self.0)
    }

    /// Error unless every element lies in [n−1].
    pub fn check_within(self, n: usize) -> Result<()> {
        match self.max() {
            Some(m) if m >= n => Err(Error::invalid(format!(
                "subset {self} is not contained in [{}]",
                n.saturating_sub(1)
            ))),
            _ => Ok(()),
        }
    }

    /// I^r := set(comp(I)^r) = {n − i : i ∈ I}.
    pub fn reverse(self, n: usize) -> Subset {
        Subset::from_iter_checked(self.iter().map(|i| n - i)).expect("in range")
    }

    /// I^t := set(comp(I)^t) = [n−1] ∖ I^r.
    pub fn transpose(self, n: usize) -> Subset {
        self.reverse(n).complement(n)
    }

    /// All subsets of [n−1], in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        let m = n.saturating_sub(1);
        (0u32..(1u32 << m)).map(|b| Subset(b << 1))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Accepts "{2,5}", "2,5", "{}" and "" (whitespace ignored).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .unwrap_or(&t);
        if inner.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut items = Vec::new();
        for part in inner.split(',') {
            let v: usize = part
                .parse()
                .map_err(|_| Error::invalid(format!("bad subset element {part:?}")))?;
            items.push(v);
        }
        Subset::from_iter_checked(items)
    }
}
