//! Finite groups stored as dense multiplication tables.

mod build;
pub mod catalog;
mod iso;
mod lattice;
mod spec;

pub use build::*;
pub use iso::{find_isomorphism, fingerprint, is_isomorphic, Fingerprint};
pub use lattice::{
    maximal_abelian_over, maximal_abelian_subgroups_over, minimal_normal_over, subgroups,
    SubgroupLattice,
};
pub use spec::{parse_spec, GroupSpec};

use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt;

pub const DEFAULT_ORDER_CAP: usize = 250;

/// Fixed-width bitset over the elements of one group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A subgroup of some parent group, recorded by its member set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    pub members: ElemSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }
}

/// A finite group given by its Cayley table. The identity is always element 0.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    names: Vec<String>,
    label: String,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a full table, validating the group axioms.
    /// Element 0 need not be the identity; elements are reindexed so it is.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
        label: impl Into<String>,
        cap: usize,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InconsistentSpec("empty group".into()));
        }
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        if order > u16::MAX as usize {
            return Err(Error::InconsistentSpec("order too large for table storage".into()));
        }
        if table.len() != order * order || names.len() != order {
            return Err(Error::InconsistentSpec("table has the wrong shape".into()));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(Error::InconsistentSpec("table entry out of range".into()));
        }
        let id = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or_else(|| Error::InconsistentSpec("no identity element".into()))?;
        // Latin square check.
        for r in 0..order {
            let mut seen = vec![false; order];
            for c in 0..order {
                let v = table[r * order + c];
                if seen[v] {
                    return Err(Error::InconsistentSpec("table is not a Latin square".into()));
                }
                seen[v] = true;
            }
        }
        for c in 0..order {
            let mut seen = vec![false; order];
            for r in 0..order {
                let v = table[r * order + c];
                if seen[v] {
                    return Err(Error::InconsistentSpec("table is not a Latin square".into()));
                }
                seen[v] = true;
            }
        }
        // Reindex so that the identity is element 0.
        let perm: Vec<usize> = std::iter::once(id).chain((0..order).filter(|&x| x != id)).collect();
        let mut pos = vec![0; order];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let mut t = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                t[a * order + b] = pos[table[perm[a] * order + perm[b]]] as u16;
            }
        }
        let names: Vec<String> = perm.iter().map(|&o| names[o].clone()).collect();
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            inverse[a] = (0..order).find(|&b| t[a * order + b] == 0).unwrap() as u16;
        }
        let g = FiniteGroup { order, table: t, inverse, names, label: label.into() };
        g.check_associative()?;
        Ok(g)
    }

    /// Full check up to order 64, a deterministic sample above that.
    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = || Err(Error::InconsistentSpec("table is not associative".into()));
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return bad();
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return bad();
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `h^-1 g^-1 h g`.
    pub fn commutator(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(h), self.inv(g)), self.mul(h, g))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Evaluates a word such as `a^2*b*c^-1`. Factors are element names,
    /// optionally raised to an integer power; `#i` names element `i`.
    pub fn word(&self, w: &str) -> Result<usize> {
        let w = w.trim();
        if let Some(x) = self.element(w) {
            return Ok(x);
        }
        let mut acc = 0;
        for factor in split_top_level(w, '*') {
            let factor = factor.trim();
            let x = if let Some(x) = self.atom(factor) {
                x
            } else if let Some(idx) = factor.rfind('^') {
                let (base, exp) = (&factor[..idx], &factor[idx + 1..]);
                let b = self
                    .atom(base)
                    .ok_or_else(|| Error::InconsistentSpec(format!("unknown element `{base}`")))?;
                let e: i64 = exp
                    .parse()
                    .map_err(|_| Error::InconsistentSpec(format!("bad exponent in `{factor}`")))?;
                let b = if e < 0 { self.inv(b) } else { b };
                self.pow(b, e.unsigned_abs() as usize)
            } else {
                return Err(Error::InconsistentSpec(format!("unknown element `{factor}`")));
            };
            acc = self.mul(acc, x);
        }
        Ok(acc)
    }

    fn atom(&self, s: &str) -> Option<usize> {
        if s == "1" || s == "e" {
            return Some(0);
        }
        if let Some(i) = s.strip_prefix('#') {
            return i.parse().ok().filter(|&i: &usize| i < self.order);
        }
        self.element(s)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn full(&self) -> Subgroup {
        Subgroup { members: ElemSet::full(self.order) }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { members: ElemSet::from_iter(self.order, [0]) }
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut set = ElemSet::from_iter(self.order, [0]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { members: set }
    }

    /// Smallest subgroup containing both.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = self.generators_of(a);
        gens.extend(self.generators_of(b));
        self.generate(&gens)
    }

    /// A small generating set, chosen greedily by element index.
    pub fn generators_of(&self, s: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        // Prefer elements of large order so the greedy set stays short.
        let mut elems = s.elements();
        elems.sort_by_key(|&x| (std::cmp::Reverse(self.elem_order(x)), x));
        for x in elems {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.generate(&gens);
                if cur.order() == s.order() {
                    break;
                }
            }
        }
        gens
    }

    pub fn generators(&self) -> Vec<usize> {
        self.generators_of(&self.full())
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        let gens = self.generators();
        n.members.iter().all(|x| gens.iter().all(|&g| n.contains(self.conj(x, g))))
    }

    /// Whether `n` is normal in the subgroup `h`.
    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        let gens = self.generators_of(h);
        n.is_subgroup_of(h)
            && n.members.iter().all(|x| gens.iter().all(|&g| n.contains(self.conj(x, g))))
    }

    pub fn normalizer(&self, k: &Subgroup) -> Subgroup {
        self.normalizer_in(k, &self.full())
    }

    pub fn normalizer_in(&self, k: &Subgroup, within: &Subgroup) -> Subgroup {
        let kgens = self.generators_of(k);
        let members = ElemSet::from_iter(
            self.order,
            within
                .members
                .iter()
                .filter(|&g| kgens.iter().all(|&x| k.contains(self.conj(x, g)))),
        );
        Subgroup { members }
    }

    pub fn centralizer_of_set(&self, xs: &[usize]) -> Subgroup {
        let members = ElemSet::from_iter(
            self.order,
            (0..self.order).filter(|&g| xs.iter().all(|&x| self.mul(x, g) == self.mul(g, x))),
        );
        Subgroup { members }
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of_set(&self.generators())
    }

    /// Derived subgroup of the subgroup `h`.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        // [H,H] is the normal closure in H of commutators of generators.
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_in(&comms, h)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_of(&self.full())
    }

    /// Normal closure of `xs` inside the subgroup `h`.
    pub fn normal_closure_in(&self, xs: &[usize], h: &Subgroup) -> Subgroup {
        let hgens = self.generators_of(h);
        let mut gens: Vec<usize> = xs.to_vec();
        loop {
            let s = self.generate(&gens);
            let mut grew = false;
            for x in s.elements() {
                for &g in &hgens {
                    let y = self.conj(x, g);
                    if !s.contains(y) {
                        gens.push(y);
                        grew = true;
                    }
                }
                if grew {
                    break;
                }
            }
            if !grew {
                return s;
            }
        }
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let gens = self.generators_of(h);
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.members.iter().any(|x| self.elem_order(x) == h.order())
    }

    /// Order of `x K` in the quotient `H/K` (with `K` normal in `H`).
    pub fn order_mod(&self, x: usize, k: &Subgroup) -> usize {
        let mut y = x;
        let mut i = 1;
        while !k.contains(y) {
            y = self.mul(y, x);
            i += 1;
        }
        i
    }

    /// An element generating `H/K` when the quotient is cyclic.
    pub fn cyclic_quotient_generator(&self, h: &Subgroup, k: &Subgroup) -> Option<usize> {
        let idx = h.order() / k.order();
        h.members.iter().find(|&x| self.order_mod(x, k) == idx)
    }

    pub fn is_cyclic_quotient(&self, h: &Subgroup, k: &Subgroup) -> bool {
        self.cyclic_quotient_generator(h, k).is_some()
    }

    /// Conjugacy classes, each sorted, in order of their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order).map(|g| self.conj(x, g)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                seen[y] = true;
            }
            out.push(cls);
        }
        out
    }

    pub fn conjugate_subgroup(&self, s: &Subgroup, g: usize) -> Subgroup {
        Subgroup { members: ElemSet::from_iter(self.order, s.members.iter().map(|x| self.conj(x, g))) }
    }

    /// Right cosets `H g`, each represented by its smallest element.
    pub fn right_transversal(&self, h: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for x in h.members.iter() {
                seen[self.mul(x, g)] = true;
            }
        }
        reps
    }

    /// Right transversal using the largest element of each coset.
    pub fn right_transversal_max(&self, h: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for g in (0..self.order).rev() {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for x in h.members.iter() {
                seen[self.mul(x, g)] = true;
            }
        }
        reps
    }

    /// The subgroup as a group in its own right, keeping element names.
    pub fn induced(&self, s: &Subgroup, label: impl Into<String>) -> Result<FiniteGroup> {
        let elems = s.elements();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = elems.len();
        let mut table = vec![0; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * n + j] = pos[&self.mul(a, b)];
            }
        }
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        FiniteGroup::from_table(n, table, names, label, usize::MAX)
    }

    /// The quotient by a normal subgroup plus the projection map.
    pub fn quotient(&self, n: &Subgroup, label: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal(format!("{:?}", n.members)));
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if proj[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for x in n.members.iter() {
                proj[self.mul(g, x)] = c;
            }
        }
        let q = reps.len();
        let mut table = vec![0; q * q];
        for i in 0..q {
            for j in 0..q {
                table[i * q + j] = proj[self.mul(reps[i], reps[j])];
            }
        }
        let names = reps.iter().map(|&r| self.names[r].clone()).collect();
        let grp = FiniteGroup::from_table(q, table, names, label, usize::MAX)?;
        Ok((grp, proj))
    }

    pub fn is_p_group(&self) -> Option<u64> {
        let primes = crate::arith::prime_divisors(self.order as u64);
        (primes.len() == 1).then(|| primes[0])
    }

    /// Whether the table is nilpotent, via the upper central series.
    pub fn is_nilpotent(&self) -> bool {
        let mut z = self.trivial();
        loop {
            if z.order() == self.order {
                return true;
            }
            // Next term: elements central modulo z.
            let gens = self.generators();
            let next = Subgroup {
                members: ElemSet::from_iter(
                    self.order,
                    (0..self.order)
                        .filter(|&x| gens.iter().all(|&g| z.contains(self.commutator(x, g)))),
                ),
            };
            if next.order() == z.order() {
                return false;
            }
            z = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        let mut h = self.full();
        loop {
            if h.order() == 1 {
                return true;
            }
            let d = self.derived_of(&h);
            if d.order() == h.order() {
                return false;
            }
            h = d;
        }
    }

    /// Hamiltonian: nonabelian with every subgroup normal.
    pub fn is_hamiltonian(&self) -> bool {
        !self.is_abelian()
            && (0..self.order).all(|x| self.is_normal(&self.generate(&[x])))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// Splits on `sep` outside of parentheses and brackets.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
