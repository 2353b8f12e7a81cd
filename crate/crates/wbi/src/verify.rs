//! Named self-check sweeps, each comparing an engine path against a
//! brute-force or independently derived answer over all small inputs.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::caps::Caps;
use crate::classes::{class_tableau_bijection, dp_iso_exists, equiv_class, EquivClass};
use crate::comp::all_compositions;
use crate::descent::{build_d_s_rho, build_d_sigma_s, lower_minmax, upper_minmax};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::families::{enumerate_family, family_class, family_class_bfs, family_interval, Family, FamilyModule};
use crate::hecke::{
    build_module, family_general, family_shortcut, intertwines, projective_decomposition, twist_bijection,
    HullCoverKind, ModuleSource,
};
use crate::perm::{all_left_intervals, all_perms, descent_class, longest_parabolic, w1, weak_leq, Perm, Side};
use crate::poset::interval_to_poset;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Perm,
    Poset,
    Class,
    Diagram,
    Family,
    Module,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Perm, Suite::Poset, Suite::Class, Suite::Diagram, Suite::Family, Suite::Module];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Perm => "perm",
            Suite::Poset => "poset",
            Suite::Class => "class",
            Suite::Diagram => "diagram",
            Suite::Family => "family",
            Suite::Module => "module",
        }
    }

    /// A suite name, or "all".
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',')
            .map(|t| {
                Suite::ALL
                    .into_iter()
                    .find(|x| x.name() == t.trim())
                    .ok_or_else(|| Error::invalid(format!("unknown suite {t:?}")))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub nmax: usize,
    pub checks: usize,
    /// First few failures, in sweep order.
    pub failures: Vec<String>,
    pub failed: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

struct Tally {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    /// Folds in results computed in parallel, keeping their order.
    fn absorb(&mut self, results: Vec<std::result::Result<(), String>>) {
        for r in results {
            match r {
                Ok(()) => self.check(true, String::new),
                Err(e) => self.check(false, || e),
            }
        }
    }
}

fn ok_or(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_suite(suite: Suite, nmax: usize, caps: &Caps, mode: Mode) -> Result<SuiteReport> {
    Caps::check("verify sweep (n)", caps.n_sweep, nmax)?;
    let mut t = Tally::new();
    match suite {
        Suite::Perm => perm_suite(&mut t, nmax, mode),
        Suite::Poset => poset_suite(&mut t, nmax, mode)?,
        Suite::Class => class_suite(&mut t, nmax.min(4), caps, mode)?,
        Suite::Diagram => diagram_suite(&mut t, nmax, caps, mode)?,
        Suite::Family => family_suite(&mut t, nmax, caps, mode)?,
        Suite::Module => module_suite(&mut t, nmax, caps)?,
    }
    Ok(SuiteReport {
        suite,
        nmax,
        checks: t.checks,
        failures: t.failures,
        failed: t.failed,
    })
}

fn inversions(w: &Perm) -> Vec<(usize, usize)> {
    // position pairs i < j holding a descending pair of values
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.at(i) > w.at(j) {
                out.push((i, j));
            }
        }
    }
    out
}

fn perm_suite(t: &mut Tally, nmax: usize, mode: Mode) {
    for n in 1..=nmax {
        let perms = all_perms(n);
        // left weak order is containment of position inversions
        let res = exec::map(mode, &perms, |u| {
            let iu = inversions(u);
            for v in &perms {
                let iv = inversions(v);
                let brute = iu.iter().all(|p| iv.contains(p));
                if brute != weak_leq(u, v, Side::Left) {
                    return Err(format!("weak_leq({u}, {v})"));
                }
            }
            Ok(())
        });
        t.absorb(res);
        for s in Subset::all(n) {
            let w = longest_parabolic(s, n).expect("in range");
            t.check(w.descents(Side::Right) == s && w.inverse() == w, || format!("w0({s}) in S_{n}"));
            let top = w1(s, n).expect("in range");
            t.check(top.descents(Side::Right) == s, || format!("w1({s}) in S_{n}"));
            if n <= 5 {
                let iv = descent_class(Subset::default(), s, n).expect("subset");
                let brute = perms.iter().filter(|g| g.descents(Side::Right).is_subset(s)).count();
                t.check(iv.elements().len() == brute, || format!("descent class ∅..{s} in S_{n}"));
            }
        }
    }
}

fn poset_suite(t: &mut Tally, nmax: usize, mode: Mode) -> Result<()> {
    let caps = Caps::default();
    for n in 1..=nmax.min(5) {
        let ivs = all_left_intervals(n);
        let res = exec::map(mode, &ivs, |iv| {
            let p = interval_to_poset(iv).map_err(|e| e.to_string())?;
            ok_or(p.is_regular(), || format!("{iv} poset not regular"))?;
            let back = p.linear_extensions_l(&caps).map_err(|e| e.to_string())?;
            ok_or(back == iv.elements(), || format!("{iv} Σ_L round trip"))
        });
        t.absorb(res);
    }
    Ok(())
}

fn class_suite(t: &mut Tally, nmax: usize, caps: &Caps, mode: Mode) -> Result<()> {
    for n in 1..=nmax {
        let ivs = all_left_intervals(n);
        let mut class_of: HashMap<_, usize> = HashMap::new();
        let mut classes: Vec<EquivClass> = Vec::new();
        for iv in &ivs {
            if class_of.contains_key(iv) {
                continue;
            }
            let c = equiv_class(iv, caps, mode)?;
            for m in &c.members {
                class_of.insert(m.clone(), classes.len());
            }
            classes.push(c);
        }
        let pairs: Vec<(usize, usize)> = (0..ivs.len())
            .flat_map(|a| (a + 1..ivs.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| ivs[a].rank() == ivs[b].rank())
            .collect();
        let res = exec::map(mode, &pairs, |&(a, b)| {
            let same = class_of[&ivs[a]] == class_of[&ivs[b]];
            let iso = dp_iso_exists(&ivs[a], &ivs[b], caps).map_err(|e| e.to_string())?;
            ok_or(same == iso, || format!("{} vs {}", ivs[a], ivs[b]))
        });
        t.absorb(res);
    }
    Ok(())
}

fn diagram_suite(t: &mut Tally, nmax: usize, caps: &Caps, mode: Mode) -> Result<()> {
    for n in 1..=nmax.min(5) {
        let ivs = all_left_intervals(n);
        let res = exec::map(mode, &ivs, |iv| -> std::result::Result<(), String> {
            let err = |e: Error| e.to_string();
            let lower = iv.lower_descent_set();
            let upper = iv.upper_descent_set();
            if lower.is_none() && upper.is_none() {
                return Ok(());
            }
            let class = equiv_class(iv, caps, Mode::Sequential).map_err(err)?;
            if let Some(s) = lower {
                let (min, max) = lower_minmax(s, &iv.hi).map_err(err)?;
                ok_or(&min == class.min() && &max == class.max(), || format!("lower minmax {iv}"))?;
                let d = build_d_s_rho(s, &iv.hi).map_err(err)?;
                if d.is_free_upper_right() {
                    let r = class_tableau_bijection(&class, &d, caps, Mode::Sequential).map_err(err)?;
                    ok_or(r.verified(), || format!("bijection {iv}: {:?}", r.mismatches))?;
                }
            }
            if let Some(s) = upper {
                let (min, max) = upper_minmax(&iv.lo, s).map_err(err)?;
                ok_or(&min == class.min() && &max == class.max(), || format!("upper minmax {iv}"))?;
                let e = build_d_sigma_s(&iv.lo, s).map_err(err)?;
                if e.diagram().is_free_upper_right() {
                    let r = class_tableau_bijection(&class, e.diagram(), caps, Mode::Sequential).map_err(err)?;
                    ok_or(r.verified(), || format!("bijection {iv}: {:?}", r.mismatches))?;
                }
            }
            Ok(())
        });
        t.absorb(res);
    }
    Ok(())
}

fn family_suite(t: &mut Tally, nmax: usize, caps: &Caps, mode: Mode) -> Result<()> {
    for n in 1..=nmax {
        for a in all_compositions(n) {
            for (f, kind) in [
                (Family::Sit, FamilyModule::V),
                (Family::Set, FamilyModule::X),
                (Family::Srt, FamilyModule::P),
                (Family::Spit, FamilyModule::Q),
            ] {
                if !kind.accepts(&a) {
                    continue;
                }
                let count = enumerate_family(f, &a, caps, mode)?.len();
                let dim = family_interval(kind, &a)?.elements().len();
                t.check(count == dim, || format!("|{f:?}({a})| = {count}, interval has {dim}"));
            }
            if n > 5 {
                continue;
            }
            for kind in FamilyModule::ALL {
                if !kind.accepts(&a) {
                    continue;
                }
                let s = family_class(kind, &a, caps, mode)?;
                let c = family_class_bfs(kind, &a, caps, mode)?;
                t.check(&s.min == c.min() && &s.max == c.max() && s.size == c.len(), || {
                    format!("{} {a}: closed form differs from BFS", kind.name())
                });
            }
        }
    }
    Ok(())
}

fn module_suite(t: &mut Tally, nmax: usize, caps: &Caps) -> Result<()> {
    for n in 1..=nmax.min(4) {
        for iv in all_left_intervals(n) {
            // construction runs the relation check
            t.check(build_module(&ModuleSource::B(iv.clone()), caps).is_ok(), || format!("B({iv})"));
            t.check(build_module(&ModuleSource::BBar(iv.clone()), caps).is_ok(), || format!("B̄({iv})"));
            let (tw, target, phi) = twist_bijection(&iv)?;
            t.check(intertwines(&tw, &target, &phi), || format!("twist of B({iv})"));
        }
        for s in Subset::all(n) {
            for u in Subset::all(n).filter(|u| s.is_subset(*u)) {
                t.check(projective_decomposition(s, u, n).is_ok(), || format!("decomposition [{s}, {u}]"));
            }
        }
    }
    for n in 1..=nmax {
        for a in all_compositions(n) {
            for kind in [FamilyModule::V, FamilyModule::X, FamilyModule::ShatCanonical, FamilyModule::Q] {
                if !kind.accepts(&a) {
                    continue;
                }
                let iv = family_interval(kind, &a)?;
                t.check(build_module(&ModuleSource::B(iv.clone()), caps).is_ok(), || {
                    format!("B of {} {a}", kind.name())
                });
            }
            if a.is_peak() {
                t.check(build_module(&ModuleSource::Spit(a.clone()), caps).is_ok(), || format!("SPIT {a}"));
            }
            for (kind, hc) in hull_cover_cases() {
                if !kind.accepts(&a) {
                    continue;
                }
                let short = family_shortcut(kind, &a, hc)?.expect("shortcut exists");
                let general = family_general(kind, &a, hc)?;
                t.check(short == general, || format!("{} {a} {hc:?}: {} vs {}", kind.name(), short.interval, general.interval));
            }
        }
    }
    Ok(())
}

/// The (family, kind) pairs that have closed-form shortcuts.
pub fn hull_cover_cases() -> [(FamilyModule, HullCoverKind); 8] {
    use FamilyModule as F;
    use HullCoverKind::*;
    [
        (F::V, InjectiveHull),
        (F::X, InjectiveHull),
        (F::ShatCanonical, InjectiveHull),
        (F::Q, InjectiveHull),
        (F::Q, ProjectiveCover),
        (F::RV, ProjectiveCover),
        (F::RX, ProjectiveCover),
        (F::RShat, ProjectiveCover),
    ]
}

pub fn run_suites(suites: &[Suite], nmax: usize, caps: &Caps, mode: Mode) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, nmax, caps, mode)).collect()
}

/// One row per suite; stable across runs and worker counts.
pub fn render_table(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<8} {:>5} {:>8} {:>7}  status", "suite", "nmax", "checks", "failed");
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{:<8} {:>5} {:>8} {:>7}  {status}", r.suite.name(), r.nmax, r.checks, r.failed);
        for f in &r.failures {
            let _ = writeln!(out, "    {f}");
        }
    }
    out
}
