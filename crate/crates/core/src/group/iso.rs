//! Isomorphism invariants and small-order isomorphism search.

use super::build::extend_hom;
use super::FiniteGroup;
use serde::Serialize;

/// Isomorphism invariants. Equal fingerprints do not imply isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs, ascending.
    pub order_profile: Vec<(usize, usize)>,
    pub center_order: usize,
    pub derived_series: Vec<usize>,
    pub class_count: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut counts = std::collections::BTreeMap::new();
    for x in 0..g.order() {
        *counts.entry(g.elem_order(x)).or_insert(0) += 1;
    }
    let mut series = vec![g.order()];
    let mut h = g.full();
    loop {
        let d = g.derived_of(&h);
        if d.order() == h.order() {
            break;
        }
        series.push(d.order());
        if d.order() == 1 {
            break;
        }
        h = d;
    }
    Fingerprint {
        order: g.order(),
        order_profile: counts.into_iter().collect(),
        center_order: g.center().order(),
        derived_series: series,
        class_count: g.conjugacy_classes().len(),
    }
}

/// Exhaustive search for an isomorphism `g -> h`, returned as an element map.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| h.elem_order(y) == g.elem_order(x)).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    search(g, h, &gens, &candidates, &mut images, 0)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    cands: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let map = extend_hom(g, gens, images, h).ok()?;
        let mut seen = vec![false; h.order()];
        for &y in &map {
            if seen[y] {
                return None;
            }
            seen[y] = true;
        }
        return Some(map);
    }
    for &y in &cands[depth] {
        images[depth] = y;
        if let Some(m) = search(g, h, gens, cands, images, depth + 1) {
            return Some(m);
        }
    }
    None
}

/// `Some(answer)` when decidable: different fingerprints, or order at most 24.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<bool> {
    if fingerprint(g) != fingerprint(h) {
        return Some(false);
    }
    if g.order() <= 24 {
        return Some(find_isomorphism(g, h).is_some());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::*;

    #[test]
    fn q8_not_d8() {
        let q = dicyclic(8, 250).unwrap();
        let d = dihedral(8, 250).unwrap();
        assert_eq!(is_isomorphic(&q, &d), Some(false));
        assert_eq!(is_isomorphic(&q, &meta_amitsur(4, 3, 250).unwrap()), Some(true));
    }

    #[test]
    fn q12_is_meta_amitsur_6_5() {
        let q = dicyclic(12, 250).unwrap();
        assert_eq!(is_isomorphic(&q, &meta_amitsur(6, 5, 250).unwrap()), Some(true));
        assert_eq!(is_isomorphic(&q, &semidirect_cyclic(3, 4, 2, 250).unwrap()), Some(true));
    }
}
