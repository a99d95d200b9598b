//! Nilpotent decomposition: witnesses, their verification, and the search.
//!
//! `Q[G]` has ND when every nilpotent `alpha` in `Z[G]` satisfies
//! `alpha e` in `Z[G]` for every central idempotent `e`. A witness against ND
//! is a pair `(alpha, e)` with `alpha` integral, nonzero and nilpotent, `e` a
//! central idempotent, and `alpha e` not integral.

use super::{is_ncn_in, is_sn_in, is_ssn_in};
use crate::components::{count_matrix_components_in, ComponentCount};
use crate::error::{Error, Result};
use crate::group::{self, catalog, find_isomorphism, fingerprint, subgroups, FiniteGroup, SubgroupLattice};
use crate::qalgebra::{AlgElem, Rational};
use crate::shoda::{e_idem, pcis};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;

pub const DEFAULT_WITNESS_BUDGET: usize = 1_000_000;

/// The individual conditions a witness must meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub alpha_integral: bool,
    pub alpha_nonzero: bool,
    pub alpha_nilpotent: bool,
    pub e_central: bool,
    pub e_idempotent: bool,
    /// Must be false for a witness.
    pub product_integral: bool,
}

impl WitnessCheck {
    pub fn ok(&self) -> bool {
        self.alpha_integral
            && self.alpha_nonzero
            && self.alpha_nilpotent
            && self.e_central
            && self.e_idempotent
            && !self.product_integral
    }
}

pub fn verify_witness(alpha: &AlgElem, e: &AlgElem) -> Result<WitnessCheck> {
    let product = alpha.checked_mul(e)?;
    Ok(WitnessCheck {
        alpha_integral: alpha.is_integral(),
        alpha_nonzero: !alpha.is_zero(),
        alpha_nilpotent: alpha.is_nilpotent(),
        e_central: e.is_central(),
        e_idempotent: e.is_idempotent(),
        product_integral: product.is_integral(),
    })
}

/// A hand-built witness in a fixed model of its group.
#[derive(Clone, Debug)]
pub struct CuratedWitness {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub alpha: AlgElem,
    pub e: AlgElem,
    /// A distinguished coefficient of `alpha e`, when one is recorded.
    pub key_coefficient: Option<(String, Rational)>,
}

/// Names accepted by [`curated_witness`]. `BJ3(n)` takes any `n >= 3`;
/// `Q8xC(p^n)` takes `n >= 2` and an odd prime `p <= 7` with `ord_p(2)` even.
pub fn curated_witness_names() -> Vec<&'static str> {
    vec!["D12", "C3^2:C4", "BJ3(n)", "BJ9", "A5", "Q8xC(p^n)"]
}

struct Ctx {
    g: Arc<FiniteGroup>,
}

impl Ctx {
    fn x(&self, i: usize) -> AlgElem {
        AlgElem::basis(&self.g, i)
    }
    fn one(&self) -> AlgElem {
        AlgElem::one(&self.g)
    }
    fn w(&self, word: &str) -> Result<usize> {
        self.g.word(word)
    }
    /// `1 - x`.
    fn one_minus(&self, i: usize) -> AlgElem {
        &self.one() - &self.x(i)
    }
    fn one_plus(&self, i: usize) -> AlgElem {
        &self.one() + &self.x(i)
    }
    fn tilde_of(&self, gens: &[usize]) -> AlgElem {
        AlgElem::tilde(&self.g, &self.g.generate(gens))
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

pub fn curated_witness(name: &str, cap: usize) -> Result<CuratedWitness> {
    let name = name.trim();
    let (g, alpha, e, key) = match name {
        "D12" => {
            let c = Ctx { g: Arc::new(catalog::build_named("D12", cap)?) };
            let (a, b) = (c.w("a")?, c.w("b")?);
            let alpha = &(&c.one_minus(b) * &c.x(a)) * &c.one_plus(b);
            let e = &c.tilde_of(&[c.g.pow(a, 3)]) - &c.tilde_of(&[a]);
            (c.g, alpha, e, None)
        }
        "C3^2:C4" => {
            let c = Ctx { g: Arc::new(catalog::build_named("C3^2:C4", cap)?) };
            let (a, c4) = (c.w("a")?, c.w("c^4")?);
            let alpha = &(&c.one_minus(c4) * &c.x(a)) * &c.one_plus(c4);
            let e = e_idem(&c.g, &c.g.derived_subgroup(), &c.g.generate(&[a]))?;
            (c.g, alpha, e, None)
        }
        "BJ9" => {
            let c = Ctx { g: Arc::new(catalog::build_named("BJ9", cap)?) };
            let (big_a, big_b, big_c) = (c.w("b")?, c.w("a")?, c.w("c*d")?);
            let a2b2 = c.g.mul(c.g.pow(big_a, 2), c.g.pow(big_b, 2));
            let alpha = &(&(&c.one_minus(a2b2) * &c.one_plus(big_a)) * &c.one_plus(big_b)) * &c.x(big_c);
            let e = c.tilde_of(&[c.g.pow(big_a, 2)]);
            (c.g, alpha, e, None)
        }
        "A5" => {
            let c = Ctx { g: Arc::new(catalog::build_named("A5", cap)?) };
            let a = c.w("(1,2,3,4,5)")?;
            let v = c.w("(1,2)(3,4)")?;
            let v2 = c.w("(1,3)(2,4)")?;
            let t = c.w("(1,2,3)")?;
            let a_hat = AlgElem::hat(&c.g, &c.g.generate(&[a]).members);
            let alpha = &(&a_hat * &c.x(v)) * &c.one_minus(a);
            let a4 = c.g.generate(&[t, v]);
            let v4 = c.g.generate(&[v, v2]);
            let e = e_idem(&c.g, &a4, &v4)?.scale(&half());
            let key = (&alpha * &e).coeff(v);
            (c.g, alpha, e, Some(("(1,2)(3,4)".to_string(), key)))
        }
        _ if name.starts_with("Q8xC(") => {
            let (p, n) = name
                .strip_prefix("Q8xC(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.split_once('^'))
                .and_then(|(a, b)| Some((a.trim().parse::<u64>().ok()?, b.trim().parse::<u32>().ok()?)))
                .ok_or_else(|| Error::UnknownWitness(name.to_string()))?;
            let (g, alpha, e) = hamiltonian_witness(p, n, cap)?;
            (g, alpha, e, None)
        }
        _ => {
            let n = name
                .strip_prefix("BJ3(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownWitness(name.to_string()))?;
            if n < 3 {
                return Err(Error::UnknownWitness(format!("{name}: BJ3(n) needs n >= 3")));
            }
            let (g, alpha, e) = bj3_witness(n, cap)?;
            (g, alpha, e, None)
        }
    };
    Ok(CuratedWitness { name: name.to_string(), group: g, alpha, e, key_coefficient: key })
}

/// `Q8 x C_{2^n}`, `n >= 3`, with `t = x^(2^(n-3))` of order 8 and `z = a^2`.
fn bj3_witness(n: usize, cap: usize) -> Result<(Arc<FiniteGroup>, AlgElem, AlgElem)> {
    let q8 = group::dicyclic(8, cap)?;
    let cyc = group::cyclic_named(1 << n, "x", cap)?;
    let c = Ctx { g: Arc::new(group::bj3(n, cap)?) };
    let nh = cyc.order();
    let pair = |u: usize, v: usize| u * nh + v;
    let (qa, qb) = (q8.word("a")?, q8.word("b")?);
    let t = cyc.pow(cyc.word("x")?, 1 << (n - 3));
    let (a, b) = (pair(qa, 0), pair(qb, 0));
    let tt = |k: usize| pair(0, cyc.pow(t, k));
    let z = pair(q8.pow(qa, 2), 0);
    let one_minus_t = c.one_minus(tt(1));
    let witness_r = &(&(&(&c.x(a) + &(&c.x(b) * &c.x(tt(1)))) * &c.one_minus(tt(2))) * &c.one_plus(tt(4))) * &c.one_minus(z);
    let witness_s = &(&(&c.x(a) + &(&c.x(b) * &c.x(tt(2)))) * &c.one_minus(tt(4))) * &c.one_minus(z);
    let cube = &(&one_minus_t * &one_minus_t) * &one_minus_t;
    let alpha = (&(&witness_r * &one_minus_t) + &(&witness_s * &cube)).scale(&half());
    let e = c.tilde_of(&[tt(4)]);
    Ok((c.g, alpha, e))
}

/// Polynomials `r, s` of degree `< p` with coefficients in `0..p` such that
/// `1 + r(u)^2 + s(u)^2` is an integer multiple of `uhat`, `u` of order `p`.
pub fn sum_of_squares_polys(p: usize) -> Option<(Vec<i64>, Vec<i64>)> {
    let sq = |r: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; p];
        for i in 0..p {
            for j in 0..p {
                out[(i + j) % p] += r[i] * r[j];
            }
        }
        out
    };
    let all: Vec<Vec<i64>> = (0..(p as u64).pow(p as u32))
        .map(|mut k| {
            (0..p)
                .map(|_| {
                    let d = (k % p as u64) as i64;
                    k /= p as u64;
                    d
                })
                .collect()
        })
        .collect();
    let squares: Vec<Vec<i64>> = all.iter().map(|r| sq(r)).collect();
    for (i, r2) in squares.iter().enumerate() {
        for (j, s2) in squares.iter().enumerate().skip(i) {
            let v: Vec<i64> = (0..p).map(|k| r2[k] + s2[k] + i64::from(k == 0)).collect();
            if v.iter().all(|&x| x == v[0]) {
                return Some((all[i].clone(), all[j].clone()));
            }
        }
    }
    None
}

/// `Q8 x C_{p^n}`: with `c` of order `p^2`, `u = c^p`,
/// `w = (1/p)(1 - x^2)[(1-c)^(p^2-p-1)(1-u) alpha - (1-c)^(p-1) uhat beta]`
/// and `e = u~`, where `alpha = x + r(u) y + s(u) xy`, `beta = x + r(c) y + s(c) xy`.
fn hamiltonian_witness(p: u64, n: u32, cap: usize) -> Result<(Arc<FiniteGroup>, AlgElem, AlgElem)> {
    let even_order = crate::arith::is_prime(p) && p % 2 == 1 && crate::arith::ord_mod(p, 2)? % 2 == 0;
    if !even_order || p > 7 || n < 2 {
        return Err(Error::UnknownWitness(format!("Q8xC({p}^{n}): needs n >= 2 and an odd prime p <= 7 with ord_p(2) even")));
    }
    let pu = p as usize;
    let q8 = group::dicyclic(8, cap)?;
    let order = pu.checked_pow(n).ok_or(Error::OrderCapExceeded { order: usize::MAX, cap })?;
    let cyc = group::cyclic_named(order, "c", cap)?;
    let c = Ctx { g: Arc::new(group::direct_product(&q8, &cyc, cap)?) };
    let nh = cyc.order();
    let (qx, qy) = (q8.word("a")?, q8.word("b")?);
    let cc = cyc.pow(cyc.word("c")?, pu.pow(n - 2));
    let pow_c = |k: usize| cyc.pow(cc, k);
    let (x, y) = (qx * nh, qy * nh);
    let xy = c.g.mul(x, y);
    let x2 = c.g.pow(x, 2);
    let (r, s) = sum_of_squares_polys(pu).ok_or_else(|| Error::UnknownWitness(format!("no sum of squares found for p = {p}")))?;
    let poly = |coeffs: &[i64], step: usize| -> AlgElem {
        let mut v = vec![0i64; c.g.order()];
        for (k, &a) in coeffs.iter().enumerate() {
            v[pow_c(k * step)] += a;
        }
        AlgElem::from_ints(&c.g, &v).expect("length matches the group order")
    };
    let power = |b: &AlgElem, k: usize| (0..k).fold(c.one(), |acc, _| &acc * b);
    let one_minus_c = c.one_minus(pow_c(1));
    let u = pow_c(pu);
    let u_hat = AlgElem::hat(&c.g, &c.g.generate(&[u]).members);
    let alpha = &(&c.x(x) + &(&poly(&r, pu) * &c.x(y))) + &(&poly(&s, pu) * &c.x(xy));
    let beta = &(&c.x(x) + &(&poly(&r, 1) * &c.x(y))) + &(&poly(&s, 1) * &c.x(xy));
    let first = &(&power(&one_minus_c, pu * pu - pu - 1) * &c.one_minus(u)) * &alpha;
    let second = &(&power(&one_minus_c, pu - 1) * &u_hat) * &beta;
    let w = (&c.one_minus(x2) * &(&first - &second)).scale(&Rational::new(1.into(), (p as i64).into()));
    let e = c.tilde_of(&[u]);
    Ok((c.g, w, e))
}

/// Carries an element of `Q[H]` along an element map `H -> G`.
fn transport(x: &AlgElem, map: &[usize], g: &Arc<FiniteGroup>) -> Result<AlgElem> {
    let src = x.coeffs();
    let mut out = vec![Rational::zero(); g.order()];
    for (i, c) in src.into_iter().enumerate() {
        out[map[i]] = c;
    }
    AlgElem::from_coeffs(g, &out)
}

/// Curated witnesses whose group is isomorphic to `g`, carried into `g`.
fn curated_for(g: &Arc<FiniteGroup>, cap: usize) -> Vec<(String, AlgElem, AlgElem)> {
    let mut names: Vec<String> = ["D12", "C3^2:C4", "BJ9", "A5"].iter().map(|s| s.to_string()).collect();
    let n = g.order();
    if n >= 64 && n.is_power_of_two() {
        names.push(format!("BJ3({})", n.trailing_zeros() - 3));
    }
    if n.is_multiple_of(8) {
        for p in [3u64, 5] {
            if let Some(k) = crate::arith::log_exact(p, (n / 8) as u64) {
                if k >= 2 {
                    names.push(format!("Q8xC({p}^{k})"));
                }
            }
        }
    }
    let fp = fingerprint(g);
    let mut out = Vec::new();
    for name in names {
        let Ok(w) = curated_witness(&name, cap.max(n)) else { continue };
        if w.group.order() != n || fingerprint(&w.group) != fp {
            continue;
        }
        let map = if *w.group == **g { Some((0..n).collect()) } else { find_isomorphism(&w.group, g) };
        let Some(map) = map else { continue };
        if let (Ok(alpha), Ok(e)) = (transport(&w.alpha, &map, g), transport(&w.e, &map, g)) {
            out.push((name, alpha, e));
        }
    }
    out
}

/// A central idempotent with its coefficients over a common denominator,
/// when those fit in machine integers.
struct FastIdem {
    num: Vec<i128>,
    den: i128,
}

impl FastIdem {
    fn new(e: &AlgElem) -> Option<Self> {
        let den = e.denominator().to_i128()?;
        let num = e.numerators().iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()?;
        Some(FastIdem { num, den })
    }

    /// Whether `alpha e` is integral, for `alpha` given by integer terms.
    fn product_integral(&self, g: &FiniteGroup, alpha: &[(usize, i64)]) -> bool {
        if self.den == 1 {
            return true;
        }
        let n = g.order();
        let mut acc = vec![0i128; n];
        for &(x, c) in alpha {
            for (y, &v) in self.num.iter().enumerate() {
                if v != 0 {
                    acc[g.mul(x, y)] += c as i128 * v;
                }
            }
        }
        acc.iter().all(|v| v % self.den == 0)
    }
}

fn sparse_to_alg(g: &Arc<FiniteGroup>, terms: &[(usize, i64)]) -> AlgElem {
    let mut v = vec![0i64; g.order()];
    for &(x, c) in terms {
        v[x] += c;
    }
    AlgElem::from_ints(g, &v).expect("length matches the group order")
}

/// `(1 - y) g Yhat` or `Yhat g (1 - y)` as integer terms; zero when
/// the two halves coincide.
fn candidate(g: &FiniteGroup, y_members: &[usize], y: usize, x: usize, left: bool) -> Option<Vec<(usize, i64)>> {
    let mut acc = std::collections::BTreeMap::new();
    for &u in y_members {
        let (plus, minus) = if left {
            let gu = g.mul(x, u);
            (gu, g.mul(y, gu))
        } else {
            let ug = g.mul(u, x);
            (ug, g.mul(ug, y))
        };
        *acc.entry(plus).or_insert(0i64) += 1;
        *acc.entry(minus).or_insert(0i64) -= 1;
    }
    let terms: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    (!terms.is_empty()).then_some(terms)
}

/// Outcome of [`nd_witness_search`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub witness: Option<(AlgElem, AlgElem)>,
    /// Integrality tests spent.
    pub tests: usize,
    pub exhausted: bool,
}

/// Searches the square-zero elements `(1 - y) g Yhat` and `Yhat g (1 - y)`,
/// then sums of pairs of them, against the given central idempotents.
/// Subgroups and elements are visited in ascending order; every integrality
/// test counts against `budget`. The first witness in that order is returned.
pub fn nd_witness_search(g: &Arc<FiniteGroup>, lat: &SubgroupLattice, idems: &[AlgElem], budget: usize) -> SearchOutcome {
    let fast: Vec<Option<FastIdem>> = idems.iter().map(FastIdem::new).collect();
    let n = g.order();
    let test = |terms: &[(usize, i64)], k: usize| -> bool {
        match &fast[k] {
            Some(f) => !f.product_integral(g, terms),
            None => !(&sparse_to_alg(g, terms) * &idems[k]).is_integral(),
        }
    };
    // Each subgroup gets a contiguous slice of the budget, in lattice order.
    let per_sub: Vec<usize> = lat.subs.iter().map(|s| (s.order() - 1) * n * 2 * idems.len()).collect();
    let mut starts = Vec::with_capacity(per_sub.len());
    let mut acc = 0usize;
    for &c in &per_sub {
        starts.push(acc);
        acc = acc.saturating_add(c);
    }
    let total_single = acc;
    let hit = (0..lat.len()).into_par_iter().find_map_first(|si| {
        let start = starts[si];
        if start >= budget || per_sub[si] == 0 {
            return None;
        }
        let members = lat.subs[si].elements();
        let mut used = start;
        for &y in members.iter().filter(|&&y| y != 0) {
            for x in 0..n {
                for left in [true, false] {
                    let cand = candidate(g, &members, y, x, left);
                    for k in 0..idems.len() {
                        if used >= budget {
                            return None;
                        }
                        used += 1;
                        if let Some(terms) = &cand {
                            if test(terms, k) {
                                return Some((terms.clone(), k));
                            }
                        }
                    }
                }
            }
        }
        None
    });
    if let Some((terms, k)) = hit {
        return SearchOutcome { witness: Some((sparse_to_alg(g, &terms), idems[k].clone())), tests: budget.min(total_single), exhausted: false };
    }
    let mut used = total_single.min(budget);
    // Pairwise sums of distinct square-zero candidates from nonnormal subgroups.
    let mut pool: Vec<Vec<(usize, i64)>> = Vec::new();
    'fill: for (si, s) in lat.subs.iter().enumerate() {
        if lat.normal[si] {
            continue;
        }
        let members = s.elements();
        for &y in members.iter().filter(|&&y| y != 0) {
            for x in 0..n {
                if let Some(c) = candidate(g, &members, y, x, true) {
                    if !pool.contains(&c) {
                        pool.push(c);
                        if pool.len() >= 48 {
                            break 'fill;
                        }
                    }
                }
            }
        }
    }
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            if used >= budget {
                return SearchOutcome { witness: None, tests: used, exhausted: true };
            }
            let mut terms = pool[i].clone();
            terms.extend_from_slice(&pool[j]);
            let alpha = sparse_to_alg(g, &terms);
            used += 1;
            if alpha.is_zero() || !alpha.is_nilpotent() {
                continue;
            }
            for k in 0..idems.len() {
                used += 1;
                if test(&terms, k) {
                    return SearchOutcome { witness: Some((alpha, idems[k].clone())), tests: used, exhausted: false };
                }
            }
        }
    }
    SearchOutcome { witness: None, tests: used, exhausted: used >= budget }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NdVerdict {
    HasND,
    NotND,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NdReason {
    /// At most one matrix component, so every nilpotent element lives in one
    /// simple component.
    OneMatrixComponent { matrix_components: usize },
    WitnessFound { source: String },
    BudgetExhausted { budget: usize, tests: usize },
    SearchFinished { tests: usize },
}

#[derive(Clone, Debug)]
pub struct NdReport {
    pub verdict: NdVerdict,
    pub reason: NdReason,
    pub witness: Option<(AlgElem, AlgElem)>,
    pub witness_check: Option<WitnessCheck>,
    /// Bounds on the number of matrix components, when the PCIs are known.
    pub matrix_count: Option<(usize, usize)>,
    pub sn: bool,
    pub ssn: bool,
    pub ncn: Option<bool>,
}

pub fn nd_verdict(g: &Arc<FiniteGroup>) -> Result<NdReport> {
    let lat = subgroups(g);
    let count = count_matrix_components_in(
        g,
        &lat,
        crate::components::DEFAULT_PROBE_BUDGET,
        crate::components::DEFAULT_PROBE_SEED,
    )
    .ok();
    nd_verdict_with(g, &lat, count.as_ref(), DEFAULT_WITNESS_BUDGET)
}

/// The ND verdict given a lattice and, when available, the matrix component
/// count. `NotND` is only returned with a witness that re-verifies.
pub fn nd_verdict_with(g: &Arc<FiniteGroup>, lat: &SubgroupLattice, count: Option<&ComponentCount>, budget: usize) -> Result<NdReport> {
    let sn = is_sn_in(g, lat);
    let ssn = is_ssn_in(g, lat);
    let ncn = is_ncn_in(g, lat).ok();
    let matrix_count = count.map(|c| (c.low, c.high));
    let base = |verdict, reason, witness: Option<(AlgElem, AlgElem)>, check| NdReport {
        verdict,
        reason,
        witness,
        witness_check: check,
        matrix_count,
        sn,
        ssn,
        ncn,
    };
    if let Some(c) = count {
        if c.high <= 1 {
            return Ok(base(NdVerdict::HasND, NdReason::OneMatrixComponent { matrix_components: c.high }, None, None));
        }
    }
    for (name, alpha, e) in curated_for(g, g.order()) {
        let check = verify_witness(&alpha, &e)?;
        if check.ok() {
            return Ok(base(NdVerdict::NotND, NdReason::WitnessFound { source: format!("curated {name}") }, Some((alpha, e)), Some(check)));
        }
    }
    let mut idems: Vec<AlgElem> = match count {
        Some(c) => c.entries.iter().map(|x| x.e.clone()).collect(),
        None => pcis(g, lat).map(|v| v.into_iter().map(|p| p.e).collect()).unwrap_or_default(),
    };
    for (i, s) in lat.subs.iter().enumerate() {
        if lat.normal[i] && s.order() > 1 && s.order() < g.order() {
            idems.push(AlgElem::tilde(g, s));
        }
    }
    let out = nd_witness_search(g, lat, &idems, budget);
    if let Some((alpha, e)) = out.witness {
        let check = verify_witness(&alpha, &e)?;
        if check.ok() {
            return Ok(base(NdVerdict::NotND, NdReason::WitnessFound { source: "search".into() }, Some((alpha, e)), Some(check)));
        }
    }
    let reason = if out.exhausted {
        NdReason::BudgetExhausted { budget, tests: out.tests }
    } else {
        NdReason::SearchFinished { tests: out.tests }
    };
    Ok(base(NdVerdict::Unknown, reason, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curated_witnesses_verify() {
        for name in ["D12", "C3^2:C4", "BJ3(3)", "BJ9", "A5", "Q8xC(3^2)"] {
            let w = curated_witness(name, 256).unwrap();
            let check = verify_witness(&w.alpha, &w.e).unwrap();
            assert!(check.ok(), "{name}: {check:?}");
        }
    }

    #[test]
    fn a5_coefficient_is_one_half() {
        let w = curated_witness("A5", 256).unwrap();
        let (name, c) = w.key_coefficient.unwrap();
        assert_eq!(name, "(1,2)(3,4)");
        assert_eq!(c, half());
    }

    #[test]
    fn unknown_names() {
        for name in ["BJ3(2)", "Q8xC(7^2)", "Q8xC(3^1)", "S4", "BJ3(x)"] {
            assert!(matches!(curated_witness(name, 256), Err(Error::UnknownWitness(_))), "{name}");
        }
    }

    #[test]
    fn two_sums_of_squares() {
        for p in [3, 5] {
            let (r, s) = sum_of_squares_polys(p).unwrap();
            assert_eq!((r.len(), s.len()), (p, p));
        }
    }

    #[test]
    fn verdicts() {
        let g = Arc::new(catalog::build_named("Q12", 64).unwrap());
        assert_eq!(nd_verdict(&g).unwrap().verdict, NdVerdict::HasND);
        let g = Arc::new(catalog::build_named("Q8", 64).unwrap());
        let r = nd_verdict(&g).unwrap();
        assert_eq!(r.verdict, NdVerdict::HasND);
        assert_eq!(r.matrix_count, Some((0, 0)));
        let g = Arc::new(catalog::build_named("D12", 64).unwrap());
        let r = nd_verdict(&g).unwrap();
        assert_eq!(r.verdict, NdVerdict::NotND);
        assert!(r.witness_check.unwrap().ok());
    }

    #[test]
    fn search_finds_d12_witness() {
        let g = Arc::new(catalog::build_named("D12", 64).unwrap());
        let lat = subgroups(&g);
        let idems: Vec<AlgElem> = pcis(&g, &lat).unwrap().into_iter().map(|p| p.e).collect();
        let out = nd_witness_search(&g, &lat, &idems, DEFAULT_WITNESS_BUDGET);
        let (alpha, e) = out.witness.unwrap();
        assert!(verify_witness(&alpha, &e).unwrap().ok());
    }

    #[test]
    fn search_respects_budget() {
        let g = Arc::new(catalog::build_named("D12", 64).unwrap());
        let lat = subgroups(&g);
        let idems: Vec<AlgElem> = pcis(&g, &lat).unwrap().into_iter().map(|p| p.e).collect();
        let out = nd_witness_search(&g, &lat, &idems, 3);
        assert!(out.witness.is_none());
        assert!(out.exhausted);
    }

    #[test]
    fn fast_integrality_matches_exact() {
        let w = curated_witness("D12", 64).unwrap();
        let f = FastIdem::new(&w.e).unwrap();
        let terms: Vec<(usize, i64)> =
            w.alpha.numerators().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_i64().unwrap())).collect();
        assert_eq!(f.product_integral(&w.group, &terms), (&w.alpha * &w.e).is_integral());
        let one = AlgElem::one(&w.group);
        assert_eq!(f.product_integral(&w.group, &[(0, 1)]), (&one * &w.e).is_integral());
    }
}
