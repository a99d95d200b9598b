//! Shoda pairs and the primitive central idempotents they produce.

use crate::error::{Error, Result};
use crate::group::{maximal_abelian_over, minimal_normal_over, subgroups, ElemSet, FiniteGroup, Subgroup, SubgroupLattice};
use crate::qalgebra::AlgElem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

/// A pair `(H, K)` of subgroups with `K` normal in `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShodaPair {
    pub h: Subgroup,
    pub k: Subgroup,
}

/// `epsilon(H, K)`: `tilde(H)` when `H = K`, otherwise the product of
/// `tilde(K) - tilde(M)` over the `M` with `M/K` minimal normal in `H/K`.
pub fn epsilon(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Result<AlgElem> {
    if !k.is_subgroup_of(h) || !g.is_normal_in(k, h) {
        return Err(Error::NotNormal("K is not normal in H".into()));
    }
    if h == k {
        return Ok(AlgElem::tilde(g, h));
    }
    let mins = minimal_normal_over(g, h, k)?;
    // The tildes of normal subgroups of H multiply as tilde(A) tilde(B) = tilde(AB),
    // so the product expands to a signed sum over joins.
    let mut terms: HashMap<ElemSet, i64> = HashMap::from([(k.members.clone(), 1)]);
    for m in &mins {
        let mut next = terms.clone();
        for (s, c) in &terms {
            let j = g.join(&Subgroup { members: s.clone() }, m);
            *next.entry(j.members).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        terms = next;
    }
    let den = terms.keys().fold(BigInt::one(), |acc, s| acc.lcm(&BigInt::from(s.len())));
    let mut num = vec![BigInt::from(0); g.order()];
    for (s, c) in &terms {
        let w = &den / BigInt::from(s.len()) * BigInt::from(*c);
        for x in s.iter() {
            num[x] += &w;
        }
    }
    Ok(AlgElem::from_parts(g, num, den))
}

/// `Cen_G(x)` for an element central in `Q[H]`, scanning one element per coset of `H`.
fn centralizer_over(g: &FiniteGroup, x: &AlgElem, h: &Subgroup) -> Subgroup {
    let mut members = h.members.clone();
    for t in g.right_transversal(h) {
        if !members.contains(t) && x.commutes_with(t) {
            for y in h.members.iter() {
                members.insert(g.mul(y, t));
            }
        }
    }
    Subgroup { members }
}

/// `e(G, H, K)`: the sum of the distinct `G`-conjugates of `epsilon(H, K)`.
pub fn e_idem(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Result<AlgElem> {
    let eps = epsilon(g, h, k)?;
    let cen = centralizer_over(g, &eps, h);
    let e = conjugate_sum(&eps, &g.right_transversal(&cen));
    if cfg!(debug_assertions) {
        let other = conjugate_sum(&eps, &g.right_transversal_max(&cen));
        debug_assert_eq!(e, other, "e(G,H,K) depends on the transversal");
    }
    Ok(e)
}

/// `e(G, H, K)` computed with an explicit right transversal of `Cen_G(epsilon)`.
pub fn e_idem_with_transversal(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup, transversal: &[usize]) -> Result<AlgElem> {
    let eps = epsilon(g, h, k)?;
    Ok(conjugate_sum(&eps, transversal))
}

fn conjugate_sum(x: &AlgElem, ts: &[usize]) -> AlgElem {
    let mut acc = AlgElem::zero(x.group());
    for &t in ts {
        acc = &acc + &x.conjugate(t);
    }
    acc
}

pub fn epsilon_centralizer(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    let eps = epsilon(g, h, k)?;
    Ok(centralizer_over(g, &eps, h))
}

/// `K` normal in `H`, `H/K` cyclic, and every `g` outside `H` has some `h`
/// in `H` with `h^-1 g^-1 h g` in `H \ K`.
pub fn is_shoda_pair(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> bool {
    if !k.is_subgroup_of(h) || !g.is_normal_in(k, h) || !g.is_cyclic_quotient(h, k) {
        return false;
    }
    (0..g.order()).filter(|&x| !h.contains(x)).all(|x| {
        h.members.iter().any(|y| {
            let c = g.commutator(y, x);
            h.contains(c) && !k.contains(c)
        })
    })
}

/// Why `(H, K)` fails to be a strong Shoda pair, or `None` if it is one.
pub fn strong_shoda_failure(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Option<String> {
    if !k.is_subgroup_of(h) || !g.is_normal_in(k, h) {
        return Some("K is not normal in H".into());
    }
    let n = g.normalizer(k);
    if !h.is_subgroup_of(&n) || !g.is_normal_in(h, &n) {
        return Some("H is not normal in N_G(K)".into());
    }
    if !g.is_cyclic_quotient(h, k) {
        return Some("H/K is not cyclic".into());
    }
    let hgens = g.generators_of(h);
    for x in n.members.iter().filter(|&x| !h.contains(x)) {
        if hgens.iter().all(|&y| k.contains(g.commutator(y, x))) {
            return Some(format!("H/K is not maximal abelian in N/K: {} centralizes it", g.name(x)));
        }
    }
    let eps = match epsilon(g, h, k) {
        Ok(e) => e,
        Err(e) => return Some(e.to_string()),
    };
    let mut seen: Vec<AlgElem> = Vec::new();
    for t in g.right_transversal(&n) {
        if n.contains(t) {
            continue;
        }
        let c = eps.conjugate(t);
        if c == eps {
            return Some(format!("epsilon is fixed by {} outside N_G(K)", g.name(t)));
        }
        if seen.contains(&c) {
            continue;
        }
        if !(&eps * &c).is_zero() {
            return Some(format!("epsilon is not orthogonal to its conjugate by {}", g.name(t)));
        }
        seen.push(c);
    }
    None
}

pub fn is_strong_shoda_pair(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> bool {
    strong_shoda_failure(g, h, k).is_none()
}

/// A primitive central idempotent with the strong Shoda pair it came from,
/// when there is one.
#[derive(Clone, Debug)]
pub struct Pci {
    pub e: AlgElem,
    pub pair: Option<ShodaPair>,
}

/// All primitive central idempotents of `Q[G]` for metabelian `G`,
/// using the first maximal abelian subgroup containing `G'`.
pub fn metabelian_pcis(g: &Arc<FiniteGroup>) -> Result<Vec<Pci>> {
    let lat = subgroups(g);
    metabelian_pcis_in(g, &lat)
}

pub fn metabelian_pcis_in(g: &Arc<FiniteGroup>, lat: &SubgroupLattice) -> Result<Vec<Pci>> {
    let d = g.derived_subgroup();
    if !g.is_abelian_subgroup(&d) {
        return Err(Error::NotMetabelian);
    }
    let a = maximal_abelian_over(g, lat, &d)?;
    metabelian_pcis_with(g, lat, &a)
}

/// Same as `metabelian_pcis_in` with a chosen maximal abelian `A >= G'`.
pub fn metabelian_pcis_with(g: &Arc<FiniteGroup>, lat: &SubgroupLattice, a: &Subgroup) -> Result<Vec<Pci>> {
    let d = g.derived_subgroup();
    if !g.is_abelian_subgroup(&d) {
        return Err(Error::NotMetabelian);
    }
    if !d.is_subgroup_of(a) || !g.is_abelian_subgroup(a) {
        return Err(Error::NotAbelian("A must be abelian and contain G'".into()));
    }
    // Subgroups B >= A with their derived subgroups.
    let over_a: Vec<(usize, Subgroup)> = (0..lat.len())
        .filter(|&i| a.is_subgroup_of(&lat.subs[i]))
        .map(|i| (i, g.derived_of(&lat.subs[i])))
        .collect();
    // One K per conjugacy class: every H >= A is normal, so conjugate K give the same idempotent.
    let mut pairs: Vec<ShodaPair> = Vec::new();
    for ki in lat.class_representatives(g) {
        let k = &lat.subs[ki];
        let cands: Vec<&Subgroup> = over_a
            .iter()
            .filter(|(bi, bd)| k.is_subgroup_of(&lat.subs[*bi]) && bd.is_subgroup_of(k))
            .map(|(bi, _)| &lat.subs[*bi])
            .collect();
        for h in &cands {
            let maximal = !cands.iter().any(|b| b.order() > h.order() && h.is_subgroup_of(b));
            if maximal && g.is_cyclic_quotient(h, k) {
                pairs.push(ShodaPair { h: (*h).clone(), k: k.clone() });
            }
        }
    }
    pairs.sort_by(|x, y| {
        (std::cmp::Reverse(x.h.order()), x.k.order(), &x.k.members).cmp(&(
            std::cmp::Reverse(y.h.order()),
            y.k.order(),
            &y.k.members,
        ))
    });
    let idems: Vec<Result<AlgElem>> = pairs.par_iter().map(|p| e_idem(g, &p.h, &p.k)).collect();
    let mut out: Vec<Pci> = Vec::new();
    for (p, e) in pairs.into_iter().zip(idems) {
        let e = e?;
        if !out.iter().any(|q| q.e == e) {
            out.push(Pci { e, pair: Some(p) });
        }
    }
    out.sort_by(|x, y| x.e.cmp_coeffs(&y.e));
    Ok(out)
}

/// The four primitive central idempotents of `Q[A5]`. One comes from the
/// Shoda pair `(A4, V4)` scaled by one half, one from the permutation
/// module on the cosets of `A4`.
pub fn a5_pcis(g: &Arc<FiniteGroup>, lat: &SubgroupLattice) -> Result<Vec<Pci>> {
    if !is_a5(g) {
        return Err(Error::NotMetabelian);
    }
    let v4 = lat
        .subs
        .iter()
        .find(|s| s.order() == 4)
        .ok_or(Error::NotMetabelian)?
        .clone();
    let a4 = g.normalizer(&v4);
    let half = crate::qalgebra::Rational::new(1.into(), 2.into());
    let e5 = e_idem(g, &a4, &v4)?.scale(&half);
    let triv = AlgElem::tilde(g, &g.full());
    let mut perm = AlgElem::zero(g);
    let ta = AlgElem::tilde(g, &a4);
    for t in g.right_transversal(&a4) {
        perm = &perm + &ta.conjugate(t);
    }
    let e4 = &perm.scale(&crate::qalgebra::Rational::new(4.into(), 5.into())) - &triv.scale_int(4);
    let e3 = &(&(&AlgElem::one(g) - &triv) - &e4) - &e5;
    let mut out: Vec<Pci> = [triv, e4, e5, e3].into_iter().map(|e| Pci { e, pair: None }).collect();
    out.sort_by(|x, y| x.e.cmp_coeffs(&y.e));
    Ok(out)
}

/// Simple of order 60.
pub fn is_a5(g: &FiniteGroup) -> bool {
    g.order() == 60 && !g.is_abelian() && g.derived_subgroup().order() == 60 && {
        let classes = g.conjugacy_classes();
        // A normal subgroup is a union of classes containing 1 with order dividing 60;
        // class sizes 1,15,20,12,12 admit none.
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        sizes == vec![1, 12, 12, 15, 20]
    }
}

/// PCIs for metabelian groups and for `A5`.
pub fn pcis(g: &Arc<FiniteGroup>, lat: &SubgroupLattice) -> Result<Vec<Pci>> {
    if is_a5(g) {
        return a5_pcis(g, lat);
    }
    metabelian_pcis_in(g, lat)
}

/// Consistency checks on a purported complete set of PCIs.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SanityReport {
    pub sum_is_one: bool,
    pub orthogonal: bool,
    pub central: bool,
    pub idempotent: bool,
    pub dims: Vec<usize>,
    pub dims_sum_to_order: bool,
    pub commutative_dims_match_abelianization: bool,
}

impl SanityReport {
    pub fn ok(&self) -> bool {
        self.sum_is_one
            && self.orthogonal
            && self.central
            && self.idempotent
            && self.dims_sum_to_order
            && self.commutative_dims_match_abelianization
    }
}

pub fn pci_sanity(g: &Arc<FiniteGroup>, list: &[AlgElem]) -> Result<SanityReport> {
    let mut sum = AlgElem::zero(g);
    for e in list {
        sum = sum.checked_add(e)?;
    }
    let orthogonal = (0..list.len())
        .into_par_iter()
        .all(|i| (i + 1..list.len()).all(|j| (&list[i] * &list[j]).is_zero()));
    let central = list.iter().all(AlgElem::is_central);
    let idempotent = list.iter().all(AlgElem::is_idempotent);
    let mut dims = Vec::new();
    let mut comm = 0;
    if central && idempotent {
        for e in list {
            let d = crate::components::component_dimension(g, e)?;
            if crate::components::center_rank(g, e)? == d {
                comm += d;
            }
            dims.push(d);
        }
    }
    let ab = g.order() / g.derived_subgroup().order();
    Ok(SanityReport {
        sum_is_one: sum == AlgElem::one(g),
        orthogonal,
        central,
        idempotent,
        dims_sum_to_order: dims.iter().sum::<usize>() == g.order(),
        commutative_dims_match_abelianization: comm == ab,
        dims,
    })
}
