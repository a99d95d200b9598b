//! Closed-form predictions of the matrix components for the SSN families.

use super::amitsur::{amitsur_division, nonfaithful_transport, AmitsurVerdict};
use crate::arith::{euler_phi, ipow, is_prime, ord_mod, padic_valuation, prime_divisors, valuation_of_pow_minus_one};
use crate::error::{Error, Result};
use crate::group::{self, catalog, ExtraspecialKind, FiniteGroup};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NdKnown {
    HasND,
    NotND,
    Open,
}

/// Division verdict for one component `e_j` of a non-faithful family,
/// computed by Amitsur's criterion and by the valuation test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub j: u32,
    pub m: u64,
    pub r: u64,
    pub amitsur_division: bool,
    pub valuation_division: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub family: String,
    pub one_matrix: bool,
    /// No matrix components at all.
    pub matrix_free: bool,
    /// Number of matrix components when the family determines it.
    pub matrix_count: Option<usize>,
    pub component: Option<String>,
    pub nd_known: NdKnown,
    pub levels: Vec<LevelVerdict>,
}

/// Nilpotent SSN families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NilpotentFamily {
    Bj1 { p: u64, m: u32, n: u32 },
    /// `zorder = |Z|`; `second` selects the other nonabelian group of order `p^3`.
    Bj2 { p: u64, zorder: u64, second: bool },
    Bj3 { n: u32 },
    Bj4,
    Bj5,
    Bj6,
    Bj7,
    Bj8,
    Bj9,
    /// `Q8 x C_2^e_rank x A` with `A` the abelian group of the given odd invariants.
    Hamiltonian { e_rank: u32, odd_invariants: Vec<u64> },
}

fn bad(msg: String) -> Error {
    Error::InconsistentFamilyParams(msg)
}

impl NilpotentFamily {
    pub fn name(&self) -> String {
        match self {
            NilpotentFamily::Bj1 { p, m, n } => format!("BJ1({p},{m},{n})"),
            NilpotentFamily::Bj2 { p, zorder, second } => format!("BJ2({p},{zorder},{})", if *second { 2 } else { 1 }),
            NilpotentFamily::Bj3 { n } => format!("BJ3({n})"),
            NilpotentFamily::Bj4 => "BJ4".into(),
            NilpotentFamily::Bj5 => "BJ5".into(),
            NilpotentFamily::Bj6 => "BJ6".into(),
            NilpotentFamily::Bj7 => "BJ7".into(),
            NilpotentFamily::Bj8 => "BJ8".into(),
            NilpotentFamily::Bj9 => "BJ9".into(),
            NilpotentFamily::Hamiltonian { e_rank, odd_invariants } => {
                let inv: Vec<String> = odd_invariants.iter().map(u64::to_string).collect();
                format!("Ham({e_rank};{})", inv.join(","))
            }
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            NilpotentFamily::Bj1 { p, m, n } => ipow(*p, m + n),
            NilpotentFamily::Bj2 { p, zorder, .. } => p * p * zorder,
            NilpotentFamily::Bj3 { n } => 8 << n,
            NilpotentFamily::Bj4 => 81,
            NilpotentFamily::Bj5 | NilpotentFamily::Bj7 | NilpotentFamily::Bj8 => 32,
            NilpotentFamily::Bj6 => 16,
            NilpotentFamily::Bj9 => 64,
            NilpotentFamily::Hamiltonian { e_rank, odd_invariants } => (8u64 << e_rank) * odd_invariants.iter().product::<u64>(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            NilpotentFamily::Bj1 { p, m, n } if !is_prime(*p) || *m < 2 || *n < 1 => Err(bad(self.name())),
            NilpotentFamily::Bj2 { p, zorder, .. }
                if !is_prime(*p) || *zorder < *p || prime_divisors(*zorder) != vec![*p] || (*p == 2 && *zorder <= 2) =>
            {
                Err(bad(self.name()))
            }
            NilpotentFamily::Bj3 { n } if *n < 2 => Err(bad(self.name())),
            NilpotentFamily::Hamiltonian { odd_invariants, .. } if odd_invariants.iter().any(|&a| a < 3 || a % 2 == 0) => {
                Err(bad(self.name()))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        let g = match self {
            NilpotentFamily::Bj1 { p, m, n } => group::bj1(*p as usize, *m as usize, *n as usize, cap)?,
            NilpotentFamily::Bj2 { p, zorder, second } => {
                let kind = if *second { ExtraspecialKind::Second } else { ExtraspecialKind::First };
                group::bj2(*p as usize, *zorder as usize, kind, cap)?
            }
            NilpotentFamily::Bj3 { n } => group::bj3(*n as usize, cap)?,
            NilpotentFamily::Bj4 => group::bj4(cap)?,
            NilpotentFamily::Bj5 => group::bj5(cap)?,
            NilpotentFamily::Bj6 => catalog::build_named("Q16", cap)?,
            NilpotentFamily::Bj7 => catalog::build_named("D8cpQ8", cap)?,
            NilpotentFamily::Bj8 => group::bj8(cap)?,
            NilpotentFamily::Bj9 => group::bj9(cap)?,
            NilpotentFamily::Hamiltonian { e_rank, odd_invariants } => {
                if self.order() > cap as u64 {
                    return Err(Error::OrderCapExceeded { order: self.order() as usize, cap });
                }
                let mut g = group::dicyclic(8, cap)?;
                for _ in 0..*e_rank {
                    g = group::direct_product(&g, &group::cyclic(2, cap)?, cap)?;
                }
                for &a in odd_invariants {
                    g = group::direct_product(&g, &group::cyclic(a as usize, cap)?, cap)?;
                }
                g
            }
        };
        Ok(g.with_label(self.name()))
    }
}

fn prediction(family: String, count: Option<usize>, component: Option<String>, nd_known: NdKnown) -> Prediction {
    Prediction {
        family,
        one_matrix: count == Some(1),
        matrix_free: count == Some(0),
        matrix_count: count,
        component,
        nd_known,
        levels: Vec::new(),
    }
}

/// Matrix components of a nilpotent SSN group from its family.
pub fn predict_nilpotent(f: &NilpotentFamily) -> Result<Prediction> {
    f.validate()?;
    let name = f.name();
    let multi = |nd| Prediction { one_matrix: false, matrix_free: false, ..prediction(name.clone(), None, None, nd) };
    Ok(match f {
        NilpotentFamily::Bj1 { p, m, n } => {
            if *n == 1 || (*p, *m, *n) == (2, 2, 2) {
                let comp = format!("M_{p}(Q(xi_{}))", ipow(*p, m - 1));
                prediction(name, Some(1), Some(comp), NdKnown::HasND)
            } else {
                multi(NdKnown::Open)
            }
        }
        NilpotentFamily::Bj2 { p, zorder, .. } => {
            prediction(name, Some(1), Some(format!("M_{p}(Q(xi_{zorder}))")), NdKnown::HasND)
        }
        NilpotentFamily::Bj3 { n } => {
            if *n == 2 {
                prediction(name, Some(1), Some("M_2(Q(i))".into()), NdKnown::HasND)
            } else {
                multi(NdKnown::NotND)
            }
        }
        NilpotentFamily::Bj6 => prediction(name, Some(1), Some("M_2(Q)".into()), NdKnown::HasND),
        NilpotentFamily::Bj7 => prediction(name, Some(1), Some("M_2(H_Q)".into()), NdKnown::HasND),
        NilpotentFamily::Bj4 | NilpotentFamily::Bj5 | NilpotentFamily::Bj8 | NilpotentFamily::Bj9 => multi(NdKnown::NotND),
        NilpotentFamily::Hamiltonian { e_rank, odd_invariants } => {
            let primes: Vec<u64> = odd_invariants.iter().flat_map(|&a| prime_divisors(a)).collect();
            let mut has_nilpotents = false;
            for &l in &primes {
                if ord_mod(l, 2)? % 2 == 0 {
                    has_nilpotents = true;
                }
            }
            if !has_nilpotents {
                prediction(name, Some(0), None, NdKnown::HasND)
            } else if *e_rank == 0 && odd_invariants.len() == 1 && is_prime(odd_invariants[0]) {
                let p = odd_invariants[0];
                prediction(name, Some(1), Some(format!("M_2(Q(xi_{p}))")), NdKnown::HasND)
            } else {
                multi(NdKnown::NotND)
            }
        }
    })
}

/// Non-nilpotent solvable SSN families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NonNilpotentFamily {
    /// `C_p^n x| C_q` with `C_q` acting as multiplication in `F_{p^n}` and
    /// every nontrivial subgroup irreducible.
    Faithful { p: u64, n: u32, q: u64 },
    /// `<x, y | x^p = y^(q^k) = 1, y x y^-1 = x^r0>` with `ord_p(r0) = q^k0 < q^k`.
    NonFaithful { p: u64, q: u64, k: u32, k0: u32, r0: u64 },
}

/// Least `r0` with `ord_p(r0) = d`, for `d | p - 1`.
pub fn element_of_order(p: u64, d: u64) -> Option<u64> {
    (2..p).find(|&r| ord_mod(p, r).ok() == Some(d)).or((d == 1).then_some(1))
}

impl NonNilpotentFamily {
    pub fn name(&self) -> String {
        match self {
            NonNilpotentFamily::Faithful { p, n, q } => format!("Faithful({p},{n},{q})"),
            NonNilpotentFamily::NonFaithful { p, q, k, k0, r0 } => format!("NonFaithful({p},{q},{k},{k0},{r0})"),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            NonNilpotentFamily::Faithful { p, n, q } => ipow(*p, *n) * q,
            NonNilpotentFamily::NonFaithful { p, q, k, .. } => p * ipow(*q, *k),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            NonNilpotentFamily::Faithful { p, n, q } => {
                if !is_prime(p) || n < 1 || q < 2 {
                    return Err(bad(self.name()));
                }
                let pn = ipow(p, n);
                if !(pn - 1).is_multiple_of(q) {
                    return Err(bad(format!("{q} does not divide {p}^{n} - 1")));
                }
                for l in prime_divisors(q) {
                    if ord_mod(l, p % l)? != n as u64 {
                        return Err(bad(format!("the subgroup of order {l} does not act irreducibly")));
                    }
                }
                Ok(())
            }
            NonNilpotentFamily::NonFaithful { p, q, k, k0, r0 } => {
                if !is_prime(p) || !is_prime(q) || p == q || k < 2 || k0 < 1 || k0 >= k {
                    return Err(bad(self.name()));
                }
                if ord_mod(p, r0 % p)? != ipow(q, k0) {
                    return Err(bad(format!("ord_{p}({r0}) is not {q}^{k0}")));
                }
                Ok(())
            }
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        if self.order() > cap as u64 {
            return Err(Error::OrderCapExceeded { order: self.order() as usize, cap });
        }
        let g = match *self {
            NonNilpotentFamily::Faithful { p, n: 1, q } => {
                let r0 = element_of_order(p, q).ok_or_else(|| bad(self.name()))?;
                group::semidirect_cyclic(p as usize, q as usize, r0 as usize, cap)?
            }
            NonNilpotentFamily::Faithful { p, n, q } => {
                let m = group::field_multiplier(p as usize, n as usize, q as usize)?;
                group::semidirect_vector(p as usize, n as usize, &m, q as usize, cap)?
            }
            NonNilpotentFamily::NonFaithful { p, q, k, r0, .. } => {
                group::semidirect_cyclic(p as usize, ipow(q, k) as usize, r0 as usize, cap)?
            }
        };
        Ok(g.with_label(self.name()))
    }
}

/// Number of orbits of `C_q` on the hyperplanes of `F_p^n`: `(p^n - 1)/((p - 1) q)`.
pub fn hyperplane_orbits(p: u64, n: u32, q: u64) -> Result<u64> {
    let num = ipow(p, n) - 1;
    let den = (p - 1) * q;
    if !num.is_multiple_of(den) {
        return Err(bad(format!("({p}^{n} - 1)/(({p} - 1) {q}) is not an integer")));
    }
    Ok(num / den)
}

/// Division test for `e_j` through the valuation condition
/// `v_q(p^ord_{q^(j-k0)}(p) - 1) = j - k0`, with the quaternion exception
/// `n = s = 2`.
pub fn division_by_valuation(p: u64, q: u64, k0: u32, j: u32) -> Result<bool> {
    if j <= k0 {
        return Err(bad(format!("need j > k0, got j = {j}, k0 = {k0}")));
    }
    if q == 2 && k0 == 1 && j == 2 {
        return Ok(true);
    }
    let qq = ipow(q, j - k0);
    let d = ord_mod(qq, p % qq)?;
    Ok(valuation_of_pow_minus_one(q, p, d)? == j - k0)
}

/// Division test for `e_j` by transporting to `G_{m,r}` and applying
/// Amitsur's criterion.
pub fn division_by_amitsur(p: u64, q: u64, k0: u32, j: u32, r0: u64) -> Result<(u64, u64, bool)> {
    let (m, r, n, _, _) = nonfaithful_transport(p, q, k0, j, r0)?;
    let tr = amitsur_division(m, r)?;
    debug_assert_eq!(tr.n, n);
    Ok((m, r, tr.verdict == AmitsurVerdict::Division))
}

/// One-matrix condition for the non-faithful family in closed form.
pub fn nonfaithful_one_matrix_rule(p: u64, q: u64, k: u32, k0: u32) -> Result<bool> {
    if k0 != 1 {
        return Ok(false);
    }
    Ok(if q != 2 { padic_valuation(q, p - 1)? == 1 } else { k == 2 || p % 8 == 5 })
}

/// Matrix components of a non-nilpotent solvable SSN group from its family.
pub fn predict_nonnilpotent(f: &NonNilpotentFamily) -> Result<Prediction> {
    f.validate()?;
    let name = f.name();
    Ok(match *f {
        NonNilpotentFamily::Faithful { p, n: 1, q } => {
            let r0 = element_of_order(p, q).ok_or_else(|| bad(name.clone()))?;
            let comp = format!(
                "M_{q}(F), F the fixed field of sigma_{r0} in Q(xi_{p}), degree {}",
                euler_phi(p) / q
            );
            prediction(name, Some(1), Some(comp), NdKnown::HasND)
        }
        NonNilpotentFamily::Faithful { p, n, q } => {
            let v = hyperplane_orbits(p, n, q)? as usize;
            let nd = if v == 1 { NdKnown::HasND } else { NdKnown::NotND };
            prediction(name, Some(v), Some(format!("M_{q}(Q(xi_{p}))")), nd)
        }
        NonNilpotentFamily::NonFaithful { p, q, k, k0, r0 } => {
            let mut levels = Vec::new();
            for j in k0 + 1..=k {
                let (m, r, amitsur) = division_by_amitsur(p, q, k0, j, r0)?;
                let valuation = division_by_valuation(p, q, k0, j)?;
                levels.push(LevelVerdict { j, m, r, amitsur_division: amitsur, valuation_division: valuation });
            }
            let one = nonfaithful_one_matrix_rule(p, q, k, k0)?;
            let count = if one { Some(1) } else { None };
            let comp = format!("M_{}(F), F the fixed field of sigma_{r0} in Q(xi_{p})", ipow(q, k0));
            let nd = if one { NdKnown::HasND } else { NdKnown::Open };
            let mut pr = prediction(name, count, Some(comp), nd);
            pr.levels = levels;
            pr
        }
    })
}

/// Repunit primes `q = (p^n - 1)/(p - 1)` for `n` in `ns` and primes `p <= p_max`.
pub fn repunit_instances(ns: std::ops::RangeInclusive<u32>, p_max: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for p in (2..=p_max).filter(|&p| is_prime(p)) {
        for n in ns.clone() {
            let q = (ipow(p, n) - 1) / (p - 1);
            if is_prime(q) {
                out.push((p, n, q));
            }
        }
    }
    out
}

/// Faithful family instances of order at most `max_order`.
pub fn faithful_instances(max_order: u64) -> Vec<NonNilpotentFamily> {
    let mut out = Vec::new();
    for p in (2..max_order).filter(|&p| is_prime(p)) {
        for n in 1.. {
            let pn = ipow(p, n);
            if pn * 2 > max_order {
                break;
            }
            for q in 2..=max_order / pn {
                let f = NonNilpotentFamily::Faithful { p, n, q };
                if f.validate().is_ok() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// Non-faithful instances with `p q^k <= max_order`, `r0` the least
/// residue of the right order.
pub fn nonfaithful_instances(max_order: u64) -> Vec<NonNilpotentFamily> {
    let mut out = Vec::new();
    for p in (3..max_order).filter(|&p| is_prime(p)) {
        for q in (2..max_order).filter(|&q| is_prime(q) && q != p) {
            for k in 2.. {
                if p * ipow(q, k) > max_order {
                    break;
                }
                for k0 in 1..k {
                    if (p - 1) % ipow(q, k0) != 0 {
                        continue;
                    }
                    if let Some(r0) = element_of_order(p, ipow(q, k0)) {
                        out.push(NonNilpotentFamily::NonFaithful { p, q, k, k0, r0 });
                    }
                }
            }
        }
    }
    out
}

/// Nilpotent family instances of order at most `max_order`.
pub fn nilpotent_instances(max_order: u64) -> Vec<NilpotentFamily> {
    let mut out = Vec::new();
    for p in (2..max_order).filter(|&p| is_prime(p)) {
        for m in 2..8 {
            for n in 1..8 {
                if p.checked_pow(m + n).is_some_and(|o| o <= max_order) {
                    out.push(NilpotentFamily::Bj1 { p, m, n });
                }
            }
        }
        let mut z = p;
        while p * p * z <= max_order {
            for second in [false, true] {
                let f = NilpotentFamily::Bj2 { p, zorder: z, second };
                if f.validate().is_ok() {
                    out.push(f);
                }
            }
            z *= p;
        }
    }
    for n in 2..8 {
        if 8u64 << n <= max_order {
            out.push(NilpotentFamily::Bj3 { n });
        }
    }
    for f in [
        NilpotentFamily::Bj4,
        NilpotentFamily::Bj5,
        NilpotentFamily::Bj6,
        NilpotentFamily::Bj7,
        NilpotentFamily::Bj8,
        NilpotentFamily::Bj9,
    ] {
        if f.order() <= max_order {
            out.push(f);
        }
    }
    out
}

/// Hamiltonian instances `Q8 x C_2^e x A` of order at most `max_order`,
/// with `A` cyclic of odd order or `C3 x C3`.
pub fn hamiltonian_instances(max_order: u64) -> Vec<NilpotentFamily> {
    let mut out = Vec::new();
    for e_rank in 0..4u32 {
        let base = 8u64 << e_rank;
        let mut odd: Vec<Vec<u64>> = (3..=max_order / base).step_by(2).map(|a| vec![a]).collect();
        odd.push(vec![3, 3]);
        for inv in odd {
            let f = NilpotentFamily::Hamiltonian { e_rank, odd_invariants: inv };
            if f.order() <= max_order {
                out.push(f);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bj_rules() {
        let p = predict_nilpotent(&NilpotentFamily::Bj1 { p: 3, m: 2, n: 1 }).unwrap();
        assert!(p.one_matrix);
        assert_eq!(p.component.as_deref(), Some("M_3(Q(xi_3))"));
        assert!(predict_nilpotent(&NilpotentFamily::Bj1 { p: 2, m: 2, n: 2 }).unwrap().one_matrix);
        assert!(!predict_nilpotent(&NilpotentFamily::Bj1 { p: 2, m: 3, n: 2 }).unwrap().one_matrix);
        let b3 = predict_nilpotent(&NilpotentFamily::Bj3 { n: 3 }).unwrap();
        assert!(!b3.one_matrix);
        assert_eq!(b3.nd_known, NdKnown::NotND);
    }

    #[test]
    fn hamiltonian_rules() {
        let q8c7 = NilpotentFamily::Hamiltonian { e_rank: 0, odd_invariants: vec![7] };
        assert!(predict_nilpotent(&q8c7).unwrap().matrix_free);
        let q8c3 = NilpotentFamily::Hamiltonian { e_rank: 0, odd_invariants: vec![3] };
        assert!(predict_nilpotent(&q8c3).unwrap().one_matrix);
        let q8c2c3 = NilpotentFamily::Hamiltonian { e_rank: 1, odd_invariants: vec![3] };
        assert!(!predict_nilpotent(&q8c2c3).unwrap().one_matrix);
    }

    #[test]
    fn faithful_rules() {
        let p = predict_nonnilpotent(&NonNilpotentFamily::Faithful { p: 11, n: 1, q: 5 }).unwrap();
        assert!(p.one_matrix);
        assert!(p.component.unwrap().contains("degree 2"));
        assert_eq!(hyperplane_orbits(2, 4, 5).unwrap(), 3);
        assert!(NonNilpotentFamily::Faithful { p: 3, n: 2, q: 2 }.validate().is_err());
    }

    #[test]
    fn nonfaithful_rules() {
        let p = predict_nonnilpotent(&NonNilpotentFamily::NonFaithful { p: 7, q: 3, k: 2, k0: 1, r0: 2 }).unwrap();
        assert!(p.one_matrix);
        assert!(p.levels.iter().all(|l| l.amitsur_division && l.valuation_division));
        let p = predict_nonnilpotent(&NonNilpotentFamily::NonFaithful { p: 3, q: 2, k: 3, k0: 1, r0: 2 }).unwrap();
        assert!(!p.one_matrix);
    }

    #[test]
    fn repunits() {
        let got = repunit_instances(2..=5, 7);
        let pairs: Vec<(u64, u64)> = got.iter().map(|&(p, _, q)| (p, q)).collect();
        assert_eq!(pairs, vec![(2, 3), (2, 7), (2, 31), (3, 13), (5, 31), (7, 2801)]);
    }
}
