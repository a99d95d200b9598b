//! Subgroup-normality properties and the SSN classification.

pub mod nd;

pub use nd::{
    curated_witness, curated_witness_names, nd_verdict, nd_verdict_with, nd_witness_search, verify_witness, CuratedWitness,
    NdReason, NdReport, NdVerdict, WitnessCheck,
};

use crate::arith::{log_exact, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{self, catalog, fingerprint, subgroups, ElemSet, FiniteGroup, Fingerprint, Subgroup, SubgroupLattice};
use crate::shoda::is_a5;
use serde::Serialize;
use std::sync::OnceLock;

/// `Y N` as a set, for `N` normal.
fn product_set(g: &FiniteGroup, y: &Subgroup, n: &Subgroup) -> Subgroup {
    let mut s = ElemSet::empty(g.order());
    for a in y.members.iter() {
        for b in n.members.iter() {
            s.insert(g.mul(a, b));
        }
    }
    Subgroup { members: s }
}

/// A pair `(Y, N)` with `N` normal, `N` not inside `Y` and `YN` not normal.
pub fn sn_violation(g: &FiniteGroup, lat: &SubgroupLattice) -> Option<(usize, usize)> {
    for (ni, n) in lat.subs.iter().enumerate() {
        if !lat.normal[ni] || n.order() == 1 {
            continue;
        }
        for (yi, y) in lat.subs.iter().enumerate() {
            if n.is_subgroup_of(y) {
                continue;
            }
            if !g.is_normal(&product_set(g, y, n)) {
                return Some((yi, ni));
            }
        }
    }
    None
}

/// For every normal `N` and subgroup `Y`, `N <= Y` or `YN` is normal.
pub fn is_sn(g: &FiniteGroup) -> bool {
    is_sn_in(g, &subgroups(g))
}

pub fn is_sn_in(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    sn_violation(g, lat).is_none()
}

/// Every subgroup normal.
pub fn is_dedekind(lat: &SubgroupLattice) -> bool {
    lat.normal.iter().all(|&b| b)
}

/// Every subgroup has SN. Conjugate subgroups are isomorphic, and Dedekind
/// subgroups are SN outright, so only the other class representatives are built.
pub fn is_ssn(g: &FiniteGroup) -> bool {
    is_ssn_in(g, &subgroups(g))
}

pub fn is_ssn_in(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    lat.class_representatives(g).into_iter().all(|i| {
        let s = &lat.subs[i];
        if s.order() == g.order() {
            return is_sn_in(g, lat);
        }
        if g.is_abelian_subgroup(s) {
            return true;
        }
        let h = g.induced(s, "S").expect("subgroup tables are valid");
        let hl = subgroups(&h);
        is_dedekind(&hl) || is_sn_in(&h, &hl)
    })
}

/// Every non-cyclic subgroup normal; defined for `p`-groups.
pub fn is_ncn(g: &FiniteGroup) -> Result<bool> {
    is_ncn_in(g, &subgroups(g))
}

pub fn is_ncn_in(g: &FiniteGroup, lat: &SubgroupLattice) -> Result<bool> {
    if g.order() > 1 && g.is_p_group().is_none() {
        return Err(Error::NotPGroup);
    }
    Ok((0..lat.len()).all(|i| lat.normal[i] || g.is_cyclic_subgroup(&lat.subs[i])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SsnClass {
    Abelian,
    Hamiltonian,
    /// A `p`-group with every non-cyclic subgroup normal, with the matching
    /// family tags.
    PGroupNcn { p: u64, tags: Vec<String> },
    /// `C_p^n x| C_q`, `C_q` faithful with every nontrivial subgroup irreducible.
    SolvableTypeI { p: u64, n: u32, q: u64 },
    /// `C_p x| C_{q^k}` with kernel of the action of index `q^k0`.
    SolvableTypeII { p: u64, q: u64, k: u32, k0: u32 },
    A5,
    NotSsn,
}

impl SsnClass {
    pub fn is_ssn(&self) -> bool {
        *self != SsnClass::NotSsn
    }
}

fn is_metacyclic(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    lat.subs
        .iter()
        .enumerate()
        .any(|(i, n)| lat.normal[i] && g.is_cyclic_subgroup(n) && g.is_cyclic_quotient(&g.full(), n))
}

fn is_minimal_nonabelian(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    !g.is_abelian() && lat.subs.iter().filter(|s| s.order() < g.order()).all(|s| g.is_abelian_subgroup(s))
}

fn family_fingerprints() -> &'static Vec<(String, Fingerprint)> {
    static FPS: OnceLock<Vec<(String, Fingerprint)>> = OnceLock::new();
    FPS.get_or_init(|| {
        let mut v = Vec::new();
        for n in 2..=4 {
            if let Ok(g) = group::bj3(n, 256) {
                v.push((format!("BJ3({n})"), fingerprint(&g)));
            }
        }
        for (tag, name) in [("BJ4", "BJ4"), ("BJ5", "BJ5"), ("BJ6", "Q16"), ("BJ7", "D8cpQ8"), ("BJ8", "BJ8"), ("BJ9", "BJ9")] {
            v.push((tag.to_string(), fingerprint(&catalog::build_named(name, 256).unwrap())));
        }
        v
    })
}

/// Family tags of an NCN `p`-group. `BJ1` and `BJ2` are recognised
/// structurally, the sporadic ones by fingerprint.
pub fn bj_tags(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<String> {
    let mut tags = Vec::new();
    let Some(p) = g.is_p_group() else { return tags };
    if g.is_abelian() || g.is_hamiltonian() {
        return tags;
    }
    if is_minimal_nonabelian(g, lat) && is_metacyclic(g, lat) {
        tags.push("BJ1".into());
    }
    let z = g.center();
    if g.derived_subgroup().order() as u64 == p
        && g.is_cyclic_subgroup(&z)
        && (g.order() / z.order()) as u64 == p * p
        && !(p == 2 && z.order() <= 2)
    {
        tags.push("BJ2".into());
    }
    let fp = fingerprint(g);
    for (tag, f) in family_fingerprints() {
        if *f == fp {
            tags.push(tag.clone());
        }
    }
    tags
}

/// SSN membership by classification: nilpotent groups through
/// abelian/Hamiltonian/NCN, solvable non-nilpotent ones through the two
/// semidirect shapes, and `A5`.
pub fn classify_ssn(g: &FiniteGroup) -> SsnClass {
    classify_ssn_in(g, &subgroups(g))
}

pub fn classify_ssn_in(g: &FiniteGroup, lat: &SubgroupLattice) -> SsnClass {
    if g.is_abelian() {
        return SsnClass::Abelian;
    }
    if g.is_nilpotent() {
        if is_dedekind(lat) {
            return SsnClass::Hamiltonian;
        }
        return match g.is_p_group() {
            Some(p) if is_ncn_in(g, lat).unwrap_or(false) => SsnClass::PGroupNcn { p, tags: bj_tags(g, lat) },
            _ => SsnClass::NotSsn,
        };
    }
    if !g.is_solvable() {
        return if is_a5(g) { SsnClass::A5 } else { SsnClass::NotSsn };
    }
    classify_solvable(g, lat).unwrap_or(SsnClass::NotSsn)
}

fn classify_solvable(g: &FiniteGroup, lat: &SubgroupLattice) -> Option<SsnClass> {
    let pp = g.derived_subgroup();
    let ps = prime_divisors(pp.order() as u64);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    // P must be elementary abelian.
    if !g.is_abelian_subgroup(&pp) || pp.members.iter().any(|x| x != 0 && g.elem_order(x) as u64 != p) {
        return None;
    }
    let qord = g.order() / pp.order();
    if (qord as u64).is_multiple_of(p) {
        return None;
    }
    let q = lat
        .subs
        .iter()
        .find(|s| s.order() == qord && g.is_cyclic_subgroup(s))?;
    let y = q.members.iter().find(|&x| g.elem_order(x) == qord)?;
    // Kernel of the action of <y> on P.
    let centralizes = |z: usize| pp.members.iter().all(|x| g.mul(z, x) == g.mul(x, z));
    let action_order = (1..=qord).find(|&i| qord.is_multiple_of(i) && centralizes(g.pow(y, i)))?;
    let n = log_exact(p, pp.order() as u64)?;
    if action_order == qord {
        // Faithful: every subgroup of prime order must leave no proper nontrivial subgroup of P invariant.
        for l in prime_divisors(qord as u64) {
            let z = g.pow(y, qord / l as usize);
            let stable = lat.subs.iter().any(|s| {
                s.order() > 1
                    && s.order() < pp.order()
                    && s.is_subgroup_of(&pp)
                    && s.members.iter().all(|x| s.contains(g.mul(g.mul(z, x), g.inv(z))))
            });
            if stable {
                return None;
            }
        }
        return Some(SsnClass::SolvableTypeI { p, n, q: qord as u64 });
    }
    let qs = prime_divisors(qord as u64);
    if pp.order() as u64 != p || qs.len() != 1 {
        return None;
    }
    let qq = qs[0];
    let k = log_exact(qq, qord as u64)?;
    if k < 2 {
        return None;
    }
    let k0 = log_exact(qq, action_order as u64)?;
    Some(SsnClass::SolvableTypeII { p, q: qq, k, k0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn named(n: &str) -> Arc<FiniteGroup> {
        Arc::new(catalog::build_named(n, 256).unwrap())
    }

    #[test]
    fn sn_examples() {
        assert!(!is_sn(&named("D12")));
        assert!(!is_sn(&named("C2xD8")));
        assert!(is_sn(&named("C3^2:C8")));
        assert!(!is_sn(&named("C3^2:C2")));
        assert!(is_sn(&named("D8cpD8")));
    }

    #[test]
    fn ssn_examples() {
        assert!(!is_ssn(&named("D8cpD8")));
        assert!(!is_ssn(&named("C3^2:C8")));
        assert!(is_ssn(&named("A5")));
        assert!(is_ssn(&named("Q8xC8")));
    }

    #[test]
    fn ncn_examples() {
        assert!(is_ncn(&named("Q16")).unwrap());
        assert!(is_ncn(&named("Q8")).unwrap());
        assert!(!is_ncn(&named("C2xD8")).unwrap());
        assert!(matches!(is_ncn(&named("S3")), Err(Error::NotPGroup)));
    }

    #[test]
    fn structural_classes() {
        assert_eq!(classify_ssn(&named("A4")), SsnClass::SolvableTypeI { p: 2, n: 2, q: 3 });
        assert_eq!(classify_ssn(&named("C3:C8")), SsnClass::SolvableTypeII { p: 3, q: 2, k: 3, k0: 1 });
        assert_eq!(classify_ssn(&named("D12")), SsnClass::NotSsn);
        assert_eq!(classify_ssn(&named("Q8xC3")), SsnClass::Hamiltonian);
        assert_eq!(classify_ssn(&named("A5")), SsnClass::A5);
        match classify_ssn(&named("BJ9")) {
            SsnClass::PGroupNcn { p: 2, tags } => assert_eq!(tags, vec!["BJ9".to_string()]),
            other => panic!("{other:?}"),
        }
    }
}
