mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::Weak;
use wbi::comp::all_compositions;
use wbi::families::{family_interval, FamilyModule};
use wbi::hecke::{hull_or_cover, projective_decomposition, HullCoverKind, HullCoverRequest};
use wbi::Subset;

fn to_set(s: Subset) -> BTreeSet<usize> {
    s.iter().collect()
}

/// The injective hull [w₀(A), w₁(B)] has one indecomposable summand per
/// C with A ⊆ C ⊆ B, with socle F_{Des_L(w₁(C))}; the module and its hull
/// share their socle.
#[test]
fn hull_socles_match_module_socles() {
    for n in 2..=5 {
        let weak = Weak::new(n);
        for a in all_compositions(n) {
            for module in [FamilyModule::V, FamilyModule::X, FamilyModule::ShatCanonical, FamilyModule::Q] {
                if !module.accepts(&a) {
                    continue;
                }
                let iv = family_interval(module, &a).unwrap();
                let els = weak.interval(&iv.lo.window(), &iv.hi.window());
                let got = common::socle(&common::b_matrices(&els));
                let r = hull_or_cover(&HullCoverRequest::Family {
                    module,
                    alpha: a.clone(),
                    kind: HullCoverKind::InjectiveHull,
                })
                .unwrap();
                let (lo, hi) = (to_set(r.a), to_set(r.b));
                let mut want: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
                for c in common::subsets(n) {
                    if lo.is_subset(&c) && c.is_subset(&hi) {
                        *want.entry(common::des_left(&common::w1_of(&c, n))).or_default() += 1;
                    }
                }
                let want: BTreeSet<_> = want.into_iter().collect();
                assert_eq!(got, want, "{} {a}", module.name());
            }
        }
    }
}

#[test]
fn decomposition_dimensions_add_up() {
    for n in 1..=5 {
        for s in common::subsets(n) {
            for t in common::subsets(n) {
                if !s.is_subset(&t) {
                    continue;
                }
                let sub = |x: &BTreeSet<usize>| Subset::from_iter_checked(x.iter().copied()).unwrap();
                let d = projective_decomposition(sub(&s), sub(&t), n).unwrap();
                let brute = Weak::new(n)
                    .perms
                    .iter()
                    .filter(|w| {
                        let des = common::des_right(w);
                        s.is_subset(&des) && des.is_subset(&t)
                    })
                    .count();
                assert_eq!(d.total, brute);
                assert_eq!(d.dims.iter().sum::<usize>(), brute);
                assert_eq!(d.summands.len(), 1 << (t.len() - s.len()));
            }
        }
    }
}
