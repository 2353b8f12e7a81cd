//! Permutations in one-line notation, descents, lengths, the left and right
//! weak orders, parabolic longest elements and interval enumeration.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A permutation of [n] stored as its window w(1) … w(n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

/// Which weak order (left: multiply by s_i on the left, i.e. swap values).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Side {
    pub fn tag(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u8).collect())
    }

    /// The longest element n n−1 … 1.
    pub fn w0(n: usize) -> Perm {
        Perm((1..=n as u8).rev().collect())
    }

    pub fn from_window(window: &[usize]) -> Result<Perm> {
        let n = window.len();
        if n == 0 || n > 255 {
            return Err(Error::invalid("permutation must have 1..=255 entries"));
        }
        let mut seen = vec![false; n + 1];
        for &v in window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!(
                    "{window:?} is not a permutation of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm(window.iter().map(|&v| v as u8).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// w(i), 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn window(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm(inv)
    }

    /// (self ∘ other)(i) = self(other(i)). Panics on a size mismatch; use
    /// [`compose`] for the checked version.
    pub fn then_apply(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "size mismatch in composition");
        Perm(other.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    /// s_i · self: swaps the values i and i+1.
    pub fn left_mul_s(&self, i: usize) -> Perm {
        let (a, b) = (i as u8, i as u8 + 1);
        Perm(
            self.0
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        )
    }

    /// self · s_i: swaps the entries in positions i and i+1.
    pub fn right_mul_s(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Perm(w)
    }

    pub fn mul_s(&self, i: usize, side: Side) -> Perm {
        match side {
            Side::Left => self.left_mul_s(i),
            Side::Right => self.right_mul_s(i),
        }
    }

    /// Number of inversion pairs.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Right descents are positions i with w(i) > w(i+1); left descents are
    /// the right descents of the inverse (value i sits right of value i+1).
    pub fn descents(&self, side: Side) -> Subset {
        let mut s = Subset::EMPTY;
        match side {
            Side::Right => {
                for i in 1..self.n() {
                    if self.0[i - 1] > self.0[i] {
                        s.insert(i);
                    }
                }
            }
            Side::Left => {
                let inv = self.inverse();
                return inv.descents(Side::Right);
            }
        }
        s
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Whether s_i·self (or self·s_i) is a cover, i.e. increases length.
    pub fn goes_up(&self, i: usize, side: Side) -> bool {
        !self.descents_contains(i, side)
    }

    fn descents_contains(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Right => self.0[i - 1] > self.0[i],
            Side::Left => {
                let pi = self.0.iter().position(|&v| v as usize == i).unwrap();
                let pj = self.0.iter().position(|&v| v as usize == i + 1).unwrap();
                pi > pj
            }
        }
    }
}

impl fmt::Display for Perm {
    /// Digit string for n ≤ 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let items: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", items.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let t = s.trim();
        let window: Vec<usize> = if t.contains(',') || t.contains(' ') {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse()
                        .map_err(|_| Error::invalid(format!("bad permutation entry {p:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid(format!("bad permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Perm::from_window(&window)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Checked composition: result(i) = u(v(i)).
pub fn compose(u: &Perm, v: &Perm) -> Result<Perm> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    Ok(u.then_apply(v))
}

/// The longest element of the parabolic subgroup S_S: reverses every
/// maximal run of consecutive generators.
pub fn longest_parabolic(s: Subset, n: usize) -> Result<Perm> {
    s.check_within(n)?;
    let mut w: Vec<usize> = (1..=n).collect();
    let mut start = 1;
    while start <= n {
        let mut end = start;
        while end < n && s.contains(end) {
            end += 1;
        }
        w[start - 1..end].reverse();
        start = end + 1;
    }
    Perm::from_window(&w)
}

/// w₁(T) = w₀ · w₀(T^c).
pub fn w1(t: Subset, n: usize) -> Result<Perm> {
    t.check_within(n)?;
    Ok(Perm::w0(n).then_apply(&longest_parabolic(t.complement(n), n)?))
}

/// Length-additivity test for the weak orders.
///
/// Right: ℓ(u) + ℓ(u⁻¹v) = ℓ(v). Left: ℓ(u) + ℓ(vu⁻¹) = ℓ(v).
pub fn weak_leq(u: &Perm, v: &Perm, side: Side) -> bool {
    assert_eq!(u.n(), v.n(), "size mismatch in weak order test");
    let diff = match side {
        Side::Right => u.inverse().then_apply(v),
        Side::Left => v.then_apply(&u.inverse()),
    };
    u.length() + diff.length() == v.length()
}

/// A weak order interval [lo, hi] on one side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeakInterval {
    pub lo: Perm,
    pub hi: Perm,
    pub side: Side,
}

impl WeakInterval {
    pub fn new(lo: Perm, hi: Perm, side: Side) -> Result<Self> {
        if lo.n() != hi.n() {
            return Err(Error::SizeMismatch(lo.n(), hi.n()));
        }
        if !weak_leq(&lo, &hi, side) {
            return Err(Error::OrderViolation {
                lo: lo.to_string(),
                hi: hi.to_string(),
                side: side.tag().to_string(),
            });
        }
        Ok(WeakInterval { lo, hi, side })
    }

    /// Left interval [lo, hi]_L.
    pub fn left(lo: Perm, hi: Perm) -> Result<Self> {
        WeakInterval::new(lo, hi, Side::Left)
    }

    pub fn n(&self) -> usize {
        self.lo.n()
    }

    /// ℓ(hi) − ℓ(lo), the height of the interval.
    pub fn rank(&self) -> usize {
        self.hi.length() - self.lo.length()
    }

    /// All elements, sorted by one-line notation. Built by BFS over covers
    /// starting from `lo`, keeping only elements below `hi`.
    pub fn elements(&self) -> Vec<Perm> {
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.lo.clone());
        queue.push_back(self.lo.clone());
        let target = self.hi.length();
        while let Some(g) = queue.pop_front() {
            if g.length() == target {
                continue;
            }
            for i in 1..g.n() {
                if !g.goes_up(i, self.side) {
                    continue;
                }
                let h = g.mul_s(i, self.side);
                if !seen.contains(&h) && weak_leq(&h, &self.hi, self.side) {
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut out: Vec<Perm> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.n() == self.n() && weak_leq(&self.lo, g, self.side) && weak_leq(g, &self.hi, self.side)
    }

    /// [lo·s_i, hi·s_i] — right translation of a left interval.
    pub fn right_translate(&self, i: usize) -> WeakInterval {
        WeakInterval {
            lo: self.lo.right_mul_s(i),
            hi: self.hi.right_mul_s(i),
            side: self.side,
        }
    }

    /// [hi·w₀, lo·w₀]: the image of a left interval under γ ↦ γw₀.
    /// S when this is the lower descent interval [w₀(S), ρ]_L.
    pub fn lower_descent_set(&self) -> Option<Subset> {
        let s = self.lo.descents(Side::Right);
        let w = longest_parabolic(s, self.n()).ok()?;
        (self.side == Side::Left && w == self.lo).then_some(s)
    }

    /// S when this is the upper descent interval [σ, w₁(S)]_L.
    pub fn upper_descent_set(&self) -> Option<Subset> {
        let s = self.hi.descents(Side::Right);
        let w = w1(s, self.n()).ok()?;
        (self.side == Side::Left && w == self.hi).then_some(s)
    }

    pub fn times_w0(&self) -> WeakInterval {
        let w0 = Perm::w0(self.n());
        WeakInterval {
            lo: self.hi.then_apply(&w0),
            hi: self.lo.then_apply(&w0),
            side: self.side,
        }
    }
}

impl fmt::Display for WeakInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.lo, self.hi, self.side.tag())
    }
}

impl fmt::Debug for WeakInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Weak interval `[lo, hi]` as the two endpoints checked to be in order.
pub fn weak_interval(lo: &Perm, hi: &Perm, side: Side) -> Result<(WeakInterval, Vec<Perm>)> {
    let iv = WeakInterval::new(lo.clone(), hi.clone(), side)?;
    let els = iv.elements();
    Ok((iv, els))
}

/// {w : S ⊆ Des_R(w) ⊆ T} = [w₀(S), w₁(T)]_L.
pub fn descent_class(s: Subset, t: Subset, n: usize) -> Result<WeakInterval> {
    if !s.is_subset(t) {
        return Err(Error::invalid(format!("{s} is not a subset of {t}")));
    }
    WeakInterval::left(longest_parabolic(s, n)?, w1(t, n)?)
}

/// w = z·u with u in the parabolic subgroup S_S and Des_R(z) ⊆ S^c.
///
/// The generators in S join adjacent positions into blocks; z sorts the
/// values inside each block and u records how the block was permuted.
pub fn coset_decompose(w: &Perm, s: Subset) -> Result<(Perm, Perm)> {
    let n = w.n();
    s.check_within(n)?;
    let mut z = w.window();
    let mut start = 1;
    while start <= n {
        let mut end = start;
        while end < n && s.contains(end) {
            end += 1;
        }
        z[start - 1..end].sort_unstable();
        start = end + 1;
    }
    let z = Perm::from_window(&z)?;
    let u = z.inverse().then_apply(w);
    Ok((z, u))
}

/// All permutations of [n] in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut w: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Perm(w.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
    }
    out
}

/// Every γ with u ⪯ γ on the given side, sorted.
pub fn up_set(u: &Perm, side: Side) -> Vec<Perm> {
    let top = WeakInterval {
        lo: u.clone(),
        hi: match side {
            Side::Left | Side::Right => Perm::w0(u.n()),
        },
        side,
    };
    top.elements()
}

/// Every left interval of S_n, sorted by (lo, hi).
pub fn all_left_intervals(n: usize) -> Vec<WeakInterval> {
    let mut out = Vec::new();
    for lo in all_perms(n) {
        for hi in up_set(&lo, Side::Left) {
            out.push(WeakInterval {
                lo: lo.clone(),
                hi,
                side: Side::Left,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn set(s: &str) -> Subset {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&Perm::identity(3), &p("231")).unwrap(), p("231"));
        assert_eq!(compose(&p("321"), &p("321")).unwrap(), p("123"));
        assert_eq!(compose(&Perm::w0(6), &p("132465")).unwrap(), p("645312"));
        assert!(compose(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn length_and_descents() {
        assert_eq!(p("123").length(), 0);
        assert_eq!(Perm::w0(4).length(), 6);
        assert_eq!(p("231564").length(), 4);
        assert!(p("123456").descents(Side::Left).is_empty());
        assert_eq!(p("231564").descents(Side::Left), set("{1,4}"));
        assert_eq!(p("231564").descents(Side::Right), set("{2,5}"));
    }

    #[test]
    fn parabolic_elements() {
        assert_eq!(longest_parabolic(Subset::EMPTY, 4).unwrap(), p("1234"));
        assert_eq!(longest_parabolic(set("{2,5}"), 6).unwrap(), p("132465"));
        assert_eq!(longest_parabolic(Subset::interval(4), 5).unwrap(), Perm::w0(5));
        assert!(longest_parabolic(set("{6}"), 6).is_err());
        assert_eq!(w1(set("{3}"), 6).unwrap(), p("456123"));
        assert_eq!(w1(set("{1,3,4}"), 6).unwrap(), p("645312"));
        assert_eq!(w1(Subset::EMPTY, 5).unwrap(), Perm::identity(5));
    }

    #[test]
    fn weak_order_examples() {
        let u = p("2413");
        assert!(weak_leq(&u, &u, Side::Left));
        assert!(weak_leq(&p("132465"), &p("231564"), Side::Left));
        assert!(!weak_leq(&p("213"), &p("132"), Side::Left));
        assert!(!weak_leq(&p("132"), &p("213"), Side::Left));
    }

    #[test]
    fn interval_examples() {
        let (_, els) = weak_interval(&p("2413"), &p("2413"), Side::Left).unwrap();
        assert_eq!(els, vec![p("2413")]);
        let (_, els) = weak_interval(&p("123"), &p("312"), Side::Left).unwrap();
        assert_eq!(els, vec![p("123"), p("213"), p("312")]);
        let (lo, hi) = (p("132456"), p("142563"));
        let (_, els) = weak_interval(&lo, &hi, Side::Left).unwrap();
        let brute: Vec<Perm> = all_perms(6)
            .into_iter()
            .filter(|g| weak_leq(&lo, g, Side::Left) && weak_leq(g, &hi, Side::Left))
            .collect();
        assert_eq!(els, brute);
        assert!(matches!(
            weak_interval(&p("213"), &p("132"), Side::Left),
            Err(Error::OrderViolation { .. })
        ));
    }

    #[test]
    fn descent_class_examples() {
        let c = descent_class(Subset::EMPTY, Subset::EMPTY, 4).unwrap();
        assert_eq!((c.lo.clone(), c.hi.clone()), (Perm::identity(4), Perm::identity(4)));
        let c = descent_class(Subset::EMPTY, set("{1}"), 3).unwrap();
        assert_eq!(c.hi, p("312"));
        assert_eq!(c.elements(), vec![p("123"), p("213"), p("312")]);
        let c = descent_class(set("{2,5}"), set("{1,2,4,5}"), 6).unwrap();
        assert_eq!(c.lo, p("132465"));
        assert!(descent_class(set("{1}"), set("{2}"), 4).is_err());
    }

    #[test]
    fn coset_examples() {
        let w = p("231564");
        assert_eq!(coset_decompose(&w, Subset::EMPTY).unwrap(), (w.clone(), Perm::identity(6)));
        let s = set("{2,5}");
        let w0s = longest_parabolic(s, 6).unwrap();
        assert_eq!(coset_decompose(&w0s, s).unwrap(), (Perm::identity(6), w0s));
        let (z, u) = coset_decompose(&w, set("{1}")).unwrap();
        assert_eq!(z.then_apply(&u), w);
        assert_eq!(z.length() + u.length(), 4);
        assert!(u == Perm::identity(6) || u == p("213456"));
    }

    #[test]
    fn text_formats() {
        assert_eq!(p("231564").to_string(), "231564");
        let big: Perm = "2,1,14,10,7,4,3,5,11,8,6,13,12,9".parse().unwrap();
        assert_eq!(big.n(), 14);
        assert_eq!(big.to_string(), "2,1,14,10,7,4,3,5,11,8,6,13,12,9");
        assert!("1224".parse::<Perm>().is_err());
        let iv = WeakInterval::left(p("132465"), p("231564")).unwrap();
        assert_eq!(iv.to_string(), "[132465, 231564]_L");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(1), vec![Perm::identity(1)]);
        let perms = all_perms(5);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }
}
