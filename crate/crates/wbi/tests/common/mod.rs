//! Brute-force oracles. Everything here works on plain windows and cell
//! lists and goes straight from the definitions, with no shared code paths
//! with the library beyond parsing.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

pub type W = Vec<usize>;
pub type Cell = (usize, usize);

pub fn perms(n: usize) -> Vec<W> {
    fn go(n: usize, cur: &mut W, used: &mut [bool], out: &mut Vec<W>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

pub fn length(w: &[usize]) -> usize {
    pos_inversions(w).len()
}

pub fn pos_inversions(w: &[usize]) -> BTreeSet<(usize, usize)> {
    let n = w.len();
    let mut s = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] {
                s.insert((i, j));
            }
        }
    }
    s
}

/// u ⪯_L v: every inverted position pair of u is inverted in v.
pub fn left_leq(u: &[usize], v: &[usize]) -> bool {
    pos_inversions(u).is_subset(&pos_inversions(v))
}

/// i with i+1 to the left of i.
pub fn des_left(w: &[usize]) -> BTreeSet<usize> {
    let mut pos = vec![0; w.len() + 1];
    for (k, &v) in w.iter().enumerate() {
        pos[v] = k;
    }
    (1..w.len()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

pub fn des_right(w: &[usize]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn swap_values(w: &[usize], i: usize) -> W {
    w.iter()
        .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
        .collect()
}

/// Reverses each maximal run of consecutive generators in S.
pub fn w0_of(s: &BTreeSet<usize>, n: usize) -> W {
    let mut w: W = (1..=n).collect();
    let mut i = 1;
    while i <= n {
        let mut j = i;
        while j < n && s.contains(&j) {
            j += 1;
        }
        w[i - 1..j].reverse();
        i = j + 1;
    }
    w
}

/// The element of S_n with right descent set exactly T, maximal in ⪯_L.
pub fn w1_of(t: &BTreeSet<usize>, n: usize) -> W {
    let comp: BTreeSet<usize> = (1..n).filter(|i| !t.contains(i)).collect();
    w0_of(&comp, n).iter().map(|&v| n + 1 - v).collect()
}

pub fn interval(lo: &[usize], hi: &[usize]) -> Vec<W> {
    perms(lo.len())
        .into_iter()
        .filter(|g| left_leq(lo, g) && left_leq(g, hi))
        .collect()
}

pub fn left_intervals(n: usize) -> Vec<(W, W)> {
    let all = perms(n);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if left_leq(u, v) {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

pub fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << n.saturating_sub(1))
        .map(|m| (1..n).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// σ with σ(a) ≤ σ(b) whenever a ⪯ b.
pub fn sigma_l(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<W> {
    perms(n)
        .into_iter()
        .filter(|s| (1..=n).all(|a| (1..=n).all(|b| !leq(a, b) || s[a - 1] <= s[b - 1])))
        .collect()
}

/// a ⪯ c with a < b < c (or c < b < a) forces a ⪯ b or b ⪯ c.
pub fn is_regular(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> bool {
    for a in 1..=n {
        for c in 1..=n {
            if a == c || !leq(a, c) {
                continue;
            }
            let (lo, hi) = (a.min(c), a.max(c));
            for b in lo + 1..hi {
                if !leq(a, b) && !leq(b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// A poset isomorphism I → J keeping left descent sets, by plain search.
pub fn dp_iso_brute(i: &[W], j: &[W]) -> bool {
    if i.len() != j.len() {
        return false;
    }
    let m = i.len();
    let ri: Vec<Vec<bool>> = i.iter().map(|x| i.iter().map(|y| left_leq(x, y)).collect()).collect();
    let rj: Vec<Vec<bool>> = j.iter().map(|x| j.iter().map(|y| left_leq(x, y)).collect()).collect();
    let di: Vec<_> = i.iter().map(|g| des_left(g)).collect();
    let dj: Vec<_> = j.iter().map(|g| des_left(g)).collect();
    fn go(
        k: usize,
        m: usize,
        img: &mut Vec<usize>,
        used: &mut [bool],
        ri: &[Vec<bool>],
        rj: &[Vec<bool>],
        di: &[BTreeSet<usize>],
        dj: &[BTreeSet<usize>],
    ) -> bool {
        if k == m {
            return true;
        }
        for y in 0..m {
            if used[y] || di[k] != dj[y] {
                continue;
            }
            if (0..k).all(|p| ri[p][k] == rj[img[p]][y] && ri[k][p] == rj[y][img[p]]) {
                used[y] = true;
                img.push(y);
                if go(k + 1, m, img, used, ri, rj, di, dj) {
                    return true;
                }
                img.pop();
                used[y] = false;
            }
        }
        false
    }
    go(0, m, &mut Vec::new(), &mut vec![false; m], &ri, &rj, &di, &dj)
}

/// Counts bijective fillings of `cells` by 1..n accepted by `ok`.
pub fn count_fillings(cells: &[Cell], ok: &dyn Fn(&HashMap<Cell, usize>) -> bool) -> usize {
    perms(cells.len())
        .into_iter()
        .filter(|p| {
            let f: HashMap<Cell, usize> = cells.iter().copied().zip(p.iter().copied()).collect();
            ok(&f)
        })
        .count()
}

/// Entries increase toward the upper right: a weakly below-left of b ⇒ a < b.
pub fn st_count(cells: &[Cell]) -> usize {
    count_fillings(cells, &|f| {
        cells.iter().all(|&a| {
            cells
                .iter()
                .all(|&b| a == b || !(a.0 <= b.0 && a.1 <= b.1) || f[&a] < f[&b])
        })
    })
}

/// Composition diagram: row i (from the bottom) has α_i left-justified cells.
pub fn tcd(a: &[usize]) -> Vec<Cell> {
    a.iter()
        .enumerate()
        .flat_map(|(i, &k)| (1..=k).map(move |x| (x, i + 1)))
        .collect()
}

/// Ribbon diagram: column i holds α_i cells, each column sharing one row
/// with the next, the first column on top.
pub fn trd(a: &[usize]) -> Vec<Cell> {
    let l = a.len();
    let mut bottoms = vec![0; l];
    let mut base = 1;
    for i in (0..l).rev() {
        bottoms[i] = base;
        base += a[i] - 1;
    }
    (0..l)
        .flat_map(|i| {
            let b = bottoms[i];
            (0..a[i]).map(move |k| (i + 1, b + k))
        })
        .collect()
}

fn rows_increase(cells: &[Cell], f: &HashMap<Cell, usize>) -> bool {
    cells
        .iter()
        .all(|&(x, y)| !cells.contains(&(x + 1, y)) || f[&(x, y)] < f[&(x + 1, y)])
}

fn columns_increase(cells: &[Cell], f: &HashMap<Cell, usize>) -> bool {
    cells.iter().all(|&(x, y)| {
        cells
            .iter()
            .filter(|c| c.0 == x && c.1 > y)
            .all(|c| f[&(x, y)] < f[c])
    })
}

fn first_column_increases(cells: &[Cell], f: &HashMap<Cell, usize>) -> bool {
    columns_increase(&cells.iter().copied().filter(|c| c.0 == 1).collect::<Vec<_>>(), f)
}

pub fn sit_count(a: &[usize]) -> usize {
    let c = tcd(a);
    count_fillings(&c, &|f| rows_increase(&c, f) && first_column_increases(&c, f))
}

pub fn set_count(a: &[usize]) -> usize {
    let c = tcd(a);
    count_fillings(&c, &|f| rows_increase(&c, f) && columns_increase(&c, f))
}

pub fn srt_count(a: &[usize]) -> usize {
    let c = trd(a);
    count_fillings(&c, &|f| rows_increase(&c, f) && columns_increase(&c, f))
}

pub fn is_peak(a: &[usize]) -> bool {
    a.iter().take(a.len().saturating_sub(1)).all(|&k| k != 1)
}

pub fn spit_count(a: &[usize]) -> usize {
    let c = tcd(a);
    let n = c.len();
    count_fillings(&c, &|f| {
        if !(rows_increase(&c, f) && first_column_increases(&c, f)) {
            return false;
        }
        (1..=n).all(|k| {
            let mut lens = vec![0; a.len()];
            for (&(_, y), &v) in f.iter() {
                if v <= k {
                    lens[y - 1] += 1;
                }
            }
            while lens.last() == Some(&0) {
                lens.pop();
            }
            !lens.contains(&0) && is_peak(&lens)
        })
    })
}

pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub type Dense = Vec<Vec<i64>>;

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// π² = π, braid and far commutation on dense π-matrices.
pub fn hecke_relations_hold(pi: &[Dense]) -> bool {
    let k = pi.len();
    (0..k).all(|i| {
        matmul(&pi[i], &pi[i]) == pi[i]
            && (i + 1 >= k
                || matmul(&matmul(&pi[i], &pi[i + 1]), &pi[i])
                    == matmul(&matmul(&pi[i + 1], &pi[i]), &pi[i + 1]))
            && (i + 2..k).all(|j| matmul(&pi[i], &pi[j]) == matmul(&pi[j], &pi[i]))
    })
}

/// Dense π-matrices of B(I) on the basis `els`.
pub fn b_matrices(els: &[W]) -> Vec<Dense> {
    let n = els[0].len();
    let d = els.len();
    let idx: HashMap<&W, usize> = els.iter().enumerate().map(|(k, g)| (g, k)).collect();
    (1..n)
        .map(|i| {
            let mut m = vec![vec![0; d]; d];
            for (k, g) in els.iter().enumerate() {
                if des_left(g).contains(&i) {
                    m[k][k] = 1;
                } else if let Some(&j) = idx.get(&swap_values(g, i)) {
                    m[j][k] = 1;
                }
            }
            m
        })
        .collect()
}

pub fn rank(m: &[Vec<f64>]) -> usize {
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())) else {
            break;
        };
        if a[p][c].abs() < 1e-9 {
            continue;
        }
        a.swap(r, p);
        for i in 0..rows {
            if i != r {
                let f = a[i][c] / a[r][c];
                if f != 0.0 {
                    for j in c..cols {
                        a[i][j] -= f * a[r][j];
                    }
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Socle of a module given by π-matrices, as multiplicities of the simple
/// modules F_J (π_i acts by 1 for i ∈ J and by 0 otherwise).
pub fn socle(pi: &[Dense]) -> BTreeSet<(BTreeSet<usize>, usize)> {
    let k = pi.len();
    let d = pi.first().map_or(1, |m| m.len());
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << k {
        let j: BTreeSet<usize> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let mut stacked = Vec::new();
        for (i, m) in pi.iter().enumerate() {
            for (r, row) in m.iter().enumerate() {
                stacked.push(
                    row.iter()
                        .enumerate()
                        .map(|(c, &x)| x as f64 - if j.contains(&(i + 1)) && r == c { 1.0 } else { 0.0 })
                        .collect::<Vec<f64>>(),
                );
            }
        }
        let mult = d - rank(&stacked);
        if mult > 0 {
            out.insert((j, mult));
        }
    }
    out
}

pub fn window(s: &str) -> W {
    let t: Vec<&str> = s.split(',').collect();
    if t.len() > 1 {
        t.iter().map(|x| x.trim().parse().unwrap()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }
}

pub fn show(w: &[usize]) -> String {
    if w.len() <= 9 {
        w.iter().map(|v| v.to_string()).collect()
    } else {
        w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// S_n with its left weak order tabulated once.
pub struct Weak {
    pub n: usize,
    pub perms: Vec<W>,
    pub leq: Vec<Vec<bool>>,
    index: HashMap<W, usize>,
}

impl Weak {
    pub fn new(n: usize) -> Weak {
        let perms = perms(n);
        let inv: Vec<_> = perms.iter().map(|p| pos_inversions(p)).collect();
        let leq = inv.iter().map(|a| inv.iter().map(|b| a.is_subset(b)).collect()).collect();
        let index = perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Weak { n, perms, leq, index }
    }

    pub fn idx(&self, w: &[usize]) -> usize {
        self.index[w]
    }

    pub fn interval(&self, lo: &[usize], hi: &[usize]) -> Vec<W> {
        let (a, b) = (self.idx(lo), self.idx(hi));
        (0..self.perms.len())
            .filter(|&g| self.leq[a][g] && self.leq[g][b])
            .map(|g| self.perms[g].clone())
            .collect()
    }

    pub fn intervals(&self) -> Vec<(W, W)> {
        let m = self.perms.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if self.leq[a][b] {
                    out.push((self.perms[a].clone(), self.perms[b].clone()));
                }
            }
        }
        out
    }
}
