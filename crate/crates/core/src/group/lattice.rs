//! Subgroup enumeration and lattice queries.

use super::{ElemSet, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// All subgroups of a group, sorted by order then bitset, with generating
/// sets and normality flags.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub subs: Vec<Subgroup>,
    pub gens: Vec<Vec<usize>>,
    pub normal: Vec<bool>,
    index: HashMap<ElemSet, usize>,
}

/// Every subgroup: cyclic subgroups closed under joins.
pub fn subgroups(g: &FiniteGroup) -> SubgroupLattice {
    let n = g.order();
    let mut found: HashMap<ElemSet, Vec<usize>> = HashMap::new();
    let mut cyclics: Vec<(Subgroup, usize)> = Vec::new();
    for x in 0..n {
        let c = g.generate(&[x]);
        if !found.contains_key(&c.members) {
            found.insert(c.members.clone(), if x == 0 { vec![] } else { vec![x] });
            cyclics.push((c, x));
        }
    }
    let mut frontier: Vec<(Subgroup, Vec<usize>)> = cyclics
        .iter()
        .map(|(c, x)| (c.clone(), if *x == 0 { vec![] } else { vec![*x] }))
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (h, hg) in &frontier {
            for (c, x) in &cyclics {
                if c.is_subgroup_of(h) {
                    continue;
                }
                let mut gens = hg.clone();
                gens.push(*x);
                let j = g.generate(&gens);
                if !found.contains_key(&j.members) {
                    found.insert(j.members.clone(), gens.clone());
                    next.push((j, gens));
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<(Subgroup, Vec<usize>)> =
        found.into_iter().map(|(m, gens)| (Subgroup { members: m }, gens)).collect();
    all.sort_by(|a, b| (a.0.order(), &a.0.members).cmp(&(b.0.order(), &b.0.members)));
    let ggens = g.generators();
    let normal = all
        .iter()
        .map(|(s, sg)| sg.iter().all(|&x| ggens.iter().all(|&y| s.contains(g.conj(x, y)))))
        .collect();
    let index = all.iter().enumerate().map(|(i, (s, _))| (s.members.clone(), i)).collect();
    let (subs, gens) = all.into_iter().unzip();
    SubgroupLattice { subs, gens, normal, index }
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(&s.members).copied()
    }

    pub fn normal_subgroups(&self) -> Vec<&Subgroup> {
        self.subs.iter().zip(&self.normal).filter(|(_, &n)| n).map(|(s, _)| s).collect()
    }

    /// One representative per conjugacy class (the first in lattice order).
    pub fn class_representatives(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut done = vec![false; self.subs.len()];
        let mut reps = Vec::new();
        for i in 0..self.subs.len() {
            if done[i] {
                continue;
            }
            reps.push(i);
            for x in 0..g.order() {
                let c = g.conjugate_subgroup(&self.subs[i], x);
                if let Some(j) = self.position(&c) {
                    done[j] = true;
                }
            }
        }
        reps
    }

    /// Subgroups contained in `s`.
    pub fn within<'a>(&'a self, s: &'a Subgroup) -> impl Iterator<Item = usize> + 'a {
        (0..self.subs.len()).filter(move |&i| self.subs[i].is_subgroup_of(s))
    }

    /// Join using stored generating sets.
    pub fn join(&self, g: &FiniteGroup, a: usize, b: usize) -> Subgroup {
        let (sa, sb) = (&self.subs[a], &self.subs[b]);
        if sb.is_subgroup_of(sa) {
            return sa.clone();
        }
        if sa.is_subgroup_of(sb) {
            return sb.clone();
        }
        let mut gens = self.gens[a].clone();
        gens.extend(&self.gens[b]);
        g.generate(&gens)
    }
}

/// All maximal abelian subgroups containing `b`.
pub fn maximal_abelian_subgroups_over(g: &FiniteGroup, lat: &SubgroupLattice, b: &Subgroup) -> Vec<Subgroup> {
    let abel: Vec<&Subgroup> = lat
        .subs
        .iter()
        .zip(&lat.gens)
        .filter(|(s, gens)| {
            b.is_subgroup_of(s)
                && gens.iter().all(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        })
        .map(|(s, _)| s)
        .collect();
    let mut out: Vec<Subgroup> = abel
        .iter()
        .filter(|s| !abel.iter().any(|t| t.order() > s.order() && s.is_subgroup_of(t)))
        .map(|s| (*s).clone())
        .collect();
    out.sort_by(|a, b| a.members.cmp(&b.members));
    out
}

/// A maximal abelian subgroup containing `b`, the smallest bitset among
/// the maximal candidates.
pub fn maximal_abelian_over(g: &FiniteGroup, lat: &SubgroupLattice, b: &Subgroup) -> Result<Subgroup> {
    if !g.is_abelian_subgroup(b) {
        return Err(Error::NotAbelian("base subgroup".into()));
    }
    Ok(maximal_abelian_subgroups_over(g, lat, b).into_iter().next().expect("b itself is abelian"))
}

/// Subgroups `M` with `K < M <= H`, `M` normal in `H` and `M/K` minimal normal in `H/K`.
pub fn minimal_normal_over(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Vec<Subgroup>> {
    if !g.is_normal_in(k, h) {
        return Err(Error::NotNormal("K is not normal in H".into()));
    }
    let kgens = g.generators_of(k);
    let mut closures: Vec<Subgroup> = Vec::new();
    for x in h.members.iter() {
        if k.contains(x) {
            continue;
        }
        let mut seeds = kgens.clone();
        seeds.push(x);
        let c = g.normal_closure_in(&seeds, h);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    let mut minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|c| !closures.iter().any(|d| d.order() < c.order() && d.is_subgroup_of(c)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::*;

    #[test]
    fn subgroup_counts() {
        // Known counts: S3 has 6, D8 has 10, Q8 has 6, A4 has 10, A5 has 59.
        assert_eq!(subgroups(&dihedral(6, 250).unwrap()).len(), 6);
        assert_eq!(subgroups(&dihedral(8, 250).unwrap()).len(), 10);
        assert_eq!(subgroups(&dicyclic(8, 250).unwrap()).len(), 6);
        assert_eq!(subgroups(&alternating5(250).unwrap()).len(), 59);
    }

    #[test]
    fn minimal_normals_of_cyclic_quotient() {
        let g = cyclic(12, 250).unwrap();
        let mins = minimal_normal_over(&g, &g.full(), &g.trivial()).unwrap();
        let mut orders: Vec<usize> = mins.iter().map(|m| m.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
    }
}
