//! Wedderburn components of `Q[G]`: dimensions, crossed-product
//! descriptors, classification and matrix-component counts.

mod amitsur;
pub mod predict;

pub use amitsur::{amitsur_division, nonfaithful_transport, prime_data, AmitsurTrace, AmitsurVerdict, PrimeCheck, PrimeData, QCheck};
pub use crate::arith::{ord_mod, padic_valuation};

use crate::arith::{euler_phi, gcd};
use crate::error::{Error, Result};
use crate::group::{catalog, fingerprint, subgroups, FiniteGroup, Fingerprint, Subgroup, SubgroupLattice};
use crate::qalgebra::{AlgElem, AlgElemJson, Rational};
use crate::shoda::{e_idem, pcis, strong_shoda_failure, ShodaPair};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::sync::{Arc, OnceLock};

/// `dim_Q Q[G]e = |G| * (coefficient of 1 in e)`.
pub fn component_dimension(g: &Arc<FiniteGroup>, e: &AlgElem) -> Result<usize> {
    if !e.is_central() || !e.is_idempotent() || e.is_zero() {
        return Err(Error::NotCentralIdempotent);
    }
    let d = e.coeff(0) * Rational::from_integer(g.order().into());
    if !d.is_integer() {
        return Err(Error::NonIntegerDimension(d.to_string()));
    }
    d.to_integer().try_into().map_err(|_| Error::NonIntegerDimension(d.to_string()))
}

/// Rank over `Q` of the class sums times `e`. Products of class sums with a
/// central element are class functions, so each is stored by its value on
/// class representatives.
pub fn center_rank(g: &Arc<FiniteGroup>, e: &AlgElem) -> Result<usize> {
    center_rank_with_classes(g, e, &g.conjugacy_classes())
}

pub fn center_rank_with_classes(g: &Arc<FiniteGroup>, e: &AlgElem, classes: &[Vec<usize>]) -> Result<usize> {
    if !e.is_central() {
        return Err(Error::NotCentralIdempotent);
    }
    let mut rows: Vec<Vec<Rational>> = classes
        .iter()
        .map(|ck| {
            classes
                .iter()
                .map(|cj| {
                    let gj = cj[0];
                    ck.iter().fold(Rational::zero(), |acc, &x| acc + e.coeff(g.mul(g.inv(x), gj)))
                })
                .collect()
        })
        .collect();
    Ok(rank(&mut rows))
}

/// Exact rank by Gaussian elimination.
pub fn rank(rows: &mut [Vec<Rational>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = Rational::one() / rows[r][c].clone();
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                for j in c..ncols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Facts about the ambient group used by the classifier.
#[derive(Clone, Debug, Serialize)]
pub struct GroupContext {
    pub label: String,
    pub fingerprint: Fingerprint,
    pub hamiltonian: bool,
    pub odd_p_group: bool,
    #[serde(skip)]
    pub classes: Vec<Vec<usize>>,
}

impl GroupContext {
    pub fn new(g: &FiniteGroup) -> Self {
        GroupContext {
            label: g.label().to_string(),
            fingerprint: fingerprint(g),
            hamiltonian: g.is_hamiltonian(),
            odd_p_group: g.is_p_group().is_some_and(|p| p != 2),
            classes: g.conjugacy_classes(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwistShape {
    /// Some choice of coset representatives makes the twisting trivial.
    Trivial,
    /// Twisting by a primitive `s`-th root of unity, as in `G_{m,r}`.
    Amitsur,
    Other,
}

/// The crossed product `Q(xi_h) * N/H` when `N/H` is cyclic, written with
/// powers of one representative `b`: `b x b^-1 = x^r`, `b^order = x^twist`.
#[derive(Clone, Debug, Serialize)]
pub struct CyclicData {
    pub order: usize,
    pub generator: String,
    pub r: usize,
    pub raw_twist: usize,
    /// Twist after replacing `b` by `b x^shift`.
    pub twist: usize,
    pub shift: usize,
    pub s: usize,
    pub t: usize,
    pub shape: TwistShape,
}

/// `Q[G] e(G,H,K) = M_n(Q(xi_h) * N/H)` with `N = N_G(K)`, `n = [G:N]`, `h = [H:K]`.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentDescriptor {
    pub h_generators: Vec<String>,
    pub k_generators: Vec<String>,
    pub h_order: usize,
    pub k_order: usize,
    pub matrix_size_n: usize,
    pub cyclotomic_order_h: usize,
    /// Element of `H` generating `H/K`.
    pub x: String,
    pub quotient_nh_order: usize,
    pub quotient_nh_cyclic: bool,
    pub quotient_nh_generators: Vec<String>,
    /// Chosen preimages in `N` of the elements of `N/H`.
    pub coset_reps: Vec<String>,
    /// `a x a^-1 = x^action[a]` modulo `K`.
    pub action: Vec<usize>,
    /// `a' b' = x^twisting[a][b] (ab)'` modulo `K`.
    pub twisting: Vec<Vec<usize>>,
    pub cyclic: Option<CyclicData>,
    pub h_is_g: bool,
    pub dim_over_q: usize,
    pub center_rank: usize,
    pub degree_d: usize,
    pub center_field: String,
    #[serde(skip)]
    pub context: Option<Arc<GroupContext>>,
}

pub fn describe_component(g: &Arc<FiniteGroup>, pair: &ShodaPair) -> Result<ComponentDescriptor> {
    let ctx = Arc::new(GroupContext::new(g));
    let e = e_idem(g, &pair.h, &pair.k)?;
    describe_component_in(g, &ctx, pair, &e)
}

pub fn describe_component_in(
    g: &Arc<FiniteGroup>,
    ctx: &Arc<GroupContext>,
    pair: &ShodaPair,
    e: &AlgElem,
) -> Result<ComponentDescriptor> {
    let (h, k) = (&pair.h, &pair.k);
    if let Some(why) = strong_shoda_failure(g, h, k) {
        return Err(Error::NotStrongShodaPair(why));
    }
    let n = g.normalizer(k);
    let hk = h.order() / k.order();
    let x = g.cyclic_quotient_generator(h, k).expect("strong Shoda pairs have cyclic H/K");
    // h_index[y] = i when y lies in x^i K.
    let mut h_index = vec![usize::MAX; g.order()];
    let mut xi = 0;
    for i in 0..hk {
        for kk in k.members.iter() {
            h_index[g.mul(xi, kk)] = i;
        }
        xi = g.mul(xi, x);
    }
    // Cosets of H in N, represented by their smallest element.
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in n.members.iter() {
        if coset[a] != usize::MAX {
            continue;
        }
        for y in h.members.iter() {
            coset[g.mul(a, y)] = reps.len();
        }
        reps.push(a);
    }
    let q = reps.len();
    let action: Vec<usize> = reps.iter().map(|&a| h_index[g.mul(g.mul(a, x), g.inv(a))]).collect();
    let twisting: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| {
            reps.iter()
                .map(|&b| {
                    let ab = g.mul(a, b);
                    h_index[g.mul(ab, g.inv(reps[coset[ab]]))]
                })
                .collect()
        })
        .collect();
    let order_mod_h = |a: usize| g.order_mod(a, h);
    let cyclic_gen = reps.iter().copied().find(|&a| order_mod_h(a) == q);
    let gen_names = {
        // Greedy generating set of N/H among the representatives.
        let mut gens: Vec<usize> = Vec::new();
        let mut span = h.clone();
        for &a in &reps {
            if !span.contains(a) {
                gens.push(a);
                let mut all = g.generators_of(h);
                all.extend(&gens);
                span = g.generate(&all);
            }
        }
        gens.iter().map(|&a| g.name(a).to_string()).collect::<Vec<_>>()
    };
    let cyclic = cyclic_gen.map(|b| {
        let r = h_index[g.mul(g.mul(b, x), g.inv(b))];
        let raw = h_index[g.pow(b, q)];
        let mut sum = 0usize;
        let mut rp = 1usize;
        for _ in 0..q {
            sum = (sum + rp) % hk;
            rp = rp * r % hk;
        }
        let s_raw = gcd(((r + hk - 1) % hk) as u64, hk as u64) as usize;
        let s = if s_raw == 0 { hk } else { s_raw };
        let t = hk / s;
        let shifted = |i: usize| (raw + i * sum) % hk;
        let (shape, shift) = if let Some(i) = (0..hk).find(|&i| shifted(i) == 0) {
            (TwistShape::Trivial, i)
        } else if let Some(i) = (0..hk).find(|&i| {
            let j = shifted(i);
            j % t == 0 && gcd((j / t) as u64, s as u64) == 1
        }) {
            (TwistShape::Amitsur, i)
        } else {
            (TwistShape::Other, 0)
        };
        CyclicData {
            order: q,
            generator: g.name(b).to_string(),
            r,
            raw_twist: raw,
            twist: shifted(shift),
            shift,
            s,
            t,
            shape,
        }
    });
    let dim = component_dimension(g, e)?;
    let cr = center_rank_with_classes(g, e, &ctx.classes)?;
    let matrix_n = g.order() / n.order();
    let expected = matrix_n * matrix_n * euler_phi(hk as u64) as usize * q;
    if expected != dim {
        return Err(Error::NonIntegerDimension(format!(
            "descriptor predicts dimension {expected}, idempotent gives {dim}"
        )));
    }
    if dim % cr != 0 {
        return Err(Error::NonIntegerDimension(format!("{dim}/{cr}")));
    }
    let d2 = dim / cr;
    let d = (1..=d2).find(|d| d * d >= d2).unwrap_or(1);
    if d * d != d2 {
        return Err(Error::NonIntegerDimension(format!("sqrt({d2})")));
    }
    let center_field = if q == 1 {
        format!("Q(xi_{hk}), degree {}", euler_phi(hk as u64))
    } else {
        let exps: Vec<String> = action.iter().filter(|&&i| i != 1).map(|i| i.to_string()).collect();
        format!(
            "fixed field in Q(xi_{hk}) of sigma_i for i in {{{}}}, degree {}",
            exps.join(","),
            euler_phi(hk as u64) as usize / q
        )
    };
    Ok(ComponentDescriptor {
        h_generators: g.generators_of(h).iter().map(|&a| g.name(a).to_string()).collect(),
        k_generators: g.generators_of(k).iter().map(|&a| g.name(a).to_string()).collect(),
        h_order: h.order(),
        k_order: k.order(),
        matrix_size_n: matrix_n,
        cyclotomic_order_h: hk,
        x: g.name(x).to_string(),
        quotient_nh_order: q,
        quotient_nh_cyclic: cyclic_gen.is_some(),
        quotient_nh_generators: gen_names,
        coset_reps: reps.iter().map(|&a| g.name(a).to_string()).collect(),
        action,
        twisting,
        cyclic,
        h_is_g: h.order() == g.order(),
        dim_over_q: dim,
        center_rank: cr,
        degree_d: d,
        center_field,
        context: Some(ctx.clone()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentKind {
    Commutative,
    DivisionNoncommutative,
    Matrix,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub kind: ComponentKind,
    /// Which rule decided: `commutative`, `trivial-twisting`, `amitsur`,
    /// `outer-matrix`, `table`, `probe` or `undecided`.
    pub branch: String,
    pub reason: String,
    pub amitsur: Option<AmitsurTrace>,
}

struct TableEntry {
    group: &'static str,
    dim: usize,
    center_rank: usize,
    kind: ComponentKind,
    what: &'static str,
}

const KNOWN_COMPONENTS: &[TableEntry] = &[
    TableEntry { group: "Q8", dim: 4, center_rank: 1, kind: ComponentKind::DivisionNoncommutative, what: "rational quaternions" },
    TableEntry { group: "Q12", dim: 4, center_rank: 1, kind: ComponentKind::DivisionNoncommutative, what: "quaternion algebra (-3,-1) over Q" },
    TableEntry { group: "Q16", dim: 8, center_rank: 2, kind: ComponentKind::DivisionNoncommutative, what: "quaternions over Q(xi_8 + xi_8^-1)" },
    TableEntry { group: "D8cpQ8", dim: 16, center_rank: 1, kind: ComponentKind::Matrix, what: "M_2 of the rational quaternions" },
];

fn known_table() -> &'static Vec<(Fingerprint, &'static TableEntry)> {
    static TABLE: OnceLock<Vec<(Fingerprint, &'static TableEntry)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        KNOWN_COMPONENTS
            .iter()
            .map(|t| (fingerprint(&catalog::build_named(t.group, usize::MAX).unwrap()), t))
            .collect()
    })
}

/// Classification cascade. The first rule that applies decides.
pub fn classify_component(desc: &ComponentDescriptor) -> Classification {
    let mk = |kind, branch: &str, reason: String, amitsur| Classification { kind, branch: branch.into(), reason, amitsur };
    if desc.h_is_g || desc.degree_d == 1 {
        return mk(ComponentKind::Commutative, "commutative", "H = G".into(), None);
    }
    if let Some(c) = &desc.cyclic {
        match c.shape {
            TwistShape::Trivial => {
                let size = desc.matrix_size_n * c.order;
                return mk(
                    ComponentKind::Matrix,
                    "trivial-twisting",
                    format!(
                        "cyclic N/H of order {} with twisting trivialised by {}*x^{}: M_{size} over the centre",
                        c.order, c.generator, c.shift
                    ),
                    None,
                );
            }
            TwistShape::Amitsur => {
                if let Ok(tr) = amitsur_division(desc.cyclotomic_order_h as u64, c.r as u64) {
                    if tr.n as usize == c.order {
                        let kind = match (tr.verdict, desc.matrix_size_n) {
                            (AmitsurVerdict::Division, 1) => ComponentKind::DivisionNoncommutative,
                            _ => ComponentKind::Matrix,
                        };
                        let reason = format!(
                            "crossed product is the algebra of G_({},{}), {:?}; outer matrix size {}",
                            tr.m, tr.r, tr.verdict, desc.matrix_size_n
                        );
                        return mk(kind, "amitsur", reason, Some(tr));
                    }
                }
            }
            TwistShape::Other => {}
        }
    }
    if desc.matrix_size_n > 1 {
        return mk(
            ComponentKind::Matrix,
            "outer-matrix",
            format!("reduced degree at least n = {}", desc.matrix_size_n),
            None,
        );
    }
    if let Some(ctx) = &desc.context {
        if ctx.odd_p_group {
            return mk(
                ComponentKind::Matrix,
                "table",
                "p-group with p odd: Schur index 1, so a noncommutative component is a matrix ring".into(),
                None,
            );
        }
        for (fp, t) in known_table() {
            if *fp == ctx.fingerprint && t.dim == desc.dim_over_q && t.center_rank == desc.center_rank {
                return mk(t.kind, "table", format!("{} component of {}", t.what, t.group), None);
            }
        }
    }
    mk(ComponentKind::Unknown, "undecided", "no rule applies".into(), None)
}

/// Searches for a nonzero nilpotent in `Q[G]e`, which shows the component is
/// not a division ring. Candidates, in order: `(e - f) g f` for the
/// idempotents `f = tilde(Y) e`, then `(1 - y) g hat(Y) e`, then seeded
/// random integral combinations.
pub fn nilpotent_probe(g: &Arc<FiniteGroup>, lat: &SubgroupLattice, e: &AlgElem, budget: usize, seed: u64) -> Option<AlgElem> {
    let mut spent = 0usize;
    let accept = |b: AlgElem| -> Option<AlgElem> {
        (!b.is_zero() && &b * e == b && (&b * &b).is_zero()).then_some(b)
    };
    for y in lat.subs.iter().skip(1) {
        let f = &AlgElem::tilde(g, y) * e;
        if f.is_zero() || &f == e {
            continue;
        }
        let rest = e - &f;
        for t in 0..g.order() {
            spent += 1;
            if spent > budget {
                return None;
            }
            let b = &(&rest * &AlgElem::basis(g, t)) * &f;
            if let Some(b) = accept(b) {
                return Some(b);
            }
        }
    }
    let one = AlgElem::one(g);
    for y in lat.subs.iter().skip(1) {
        let yhat = AlgElem::hat(g, &y.members);
        for gen in y.members.iter().skip(1) {
            let left = &one - &AlgElem::basis(g, gen);
            for t in 0..g.order() {
                spent += 1;
                if spent > budget {
                    return None;
                }
                let b = &(&(&left * &AlgElem::basis(g, t)) * &yhat) * e;
                if let Some(b) = accept(b) {
                    return Some(b);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while spent < budget {
        spent += 16;
        let coeffs: Vec<i64> = (0..g.order()).map(|_| rng.gen_range(-1..=1)).collect();
        let b = &AlgElem::from_ints(g, &coeffs).ok()? * e;
        if b.is_nilpotent() && !b.is_zero() {
            return Some(b);
        }
    }
    None
}

/// One Wedderburn component with whatever is known about it.
#[derive(Clone, Debug)]
pub struct ComponentEntry {
    pub e: AlgElem,
    pub pair: Option<ShodaPair>,
    pub descriptor: Option<ComponentDescriptor>,
    pub dim: usize,
    pub center_rank: usize,
    pub classification: Classification,
    /// A nonzero nilpotent of the component, when the probe decided.
    pub certificate: Option<AlgElem>,
}

impl ComponentEntry {
    pub fn kind(&self) -> ComponentKind {
        self.classification.kind
    }
}

/// Matrix components counted as an interval: `Unknown` components widen it.
#[derive(Clone, Debug)]
pub struct ComponentCount {
    pub low: usize,
    pub high: usize,
    pub entries: Vec<ComponentEntry>,
}

impl ComponentCount {
    pub fn exact(&self) -> Option<usize> {
        (self.low == self.high).then_some(self.low)
    }
}

pub const DEFAULT_PROBE_BUDGET: usize = 20_000;
pub const DEFAULT_PROBE_SEED: u64 = 0x5eed;

pub fn count_matrix_components(g: &Arc<FiniteGroup>) -> Result<ComponentCount> {
    let lat = subgroups(g);
    count_matrix_components_in(g, &lat, DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED)
}

pub fn count_matrix_components_in(
    g: &Arc<FiniteGroup>,
    lat: &SubgroupLattice,
    probe_budget: usize,
    seed: u64,
) -> Result<ComponentCount> {
    use rayon::prelude::*;
    let list = pcis(g, lat)?;
    let ctx = Arc::new(GroupContext::new(g));
    let entries: Vec<Result<ComponentEntry>> = list
        .into_par_iter()
        .map(|pci| {
            let (descriptor, mut classification, dim, cr) = match &pci.pair {
                Some(p) => {
                    let d = describe_component_in(g, &ctx, p, &pci.e)?;
                    let c = classify_component(&d);
                    let (dim, cr) = (d.dim_over_q, d.center_rank);
                    (Some(d), c, dim, cr)
                }
                None => {
                    let dim = component_dimension(g, &pci.e)?;
                    let cr = center_rank_with_classes(g, &pci.e, &ctx.classes)?;
                    let c = if dim == cr {
                        Classification {
                            kind: ComponentKind::Commutative,
                            branch: "commutative".into(),
                            reason: "dimension equals centre rank".into(),
                            amitsur: None,
                        }
                    } else {
                        Classification {
                            kind: ComponentKind::Unknown,
                            branch: "undecided".into(),
                            reason: "no crossed-product description".into(),
                            amitsur: None,
                        }
                    };
                    (None, c, dim, cr)
                }
            };
            let mut certificate = None;
            if classification.kind == ComponentKind::Unknown {
                if let Some(b) = nilpotent_probe(g, lat, &pci.e, probe_budget, seed) {
                    classification = Classification {
                        kind: ComponentKind::Matrix,
                        branch: "probe".into(),
                        reason: "found a nonzero nilpotent in the component".into(),
                        amitsur: None,
                    };
                    certificate = Some(b);
                }
            }
            Ok(ComponentEntry { e: pci.e, pair: pci.pair, descriptor, dim, center_rank: cr, classification, certificate })
        })
        .collect();
    let entries = entries.into_iter().collect::<Result<Vec<_>>>()?;
    let low = entries.iter().filter(|c| c.kind() == ComponentKind::Matrix).count();
    let high = low + entries.iter().filter(|c| c.kind() == ComponentKind::Unknown).count();
    Ok(ComponentCount { low, high, entries })
}

/// JSON view of a component.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub idempotent: AlgElemJson,
    pub pair: Option<(Vec<String>, Vec<String>)>,
    pub dim: usize,
    pub center_rank: usize,
    pub kind: ComponentKind,
    pub classification: Classification,
    pub descriptor: Option<ComponentDescriptor>,
    pub certificate: Option<AlgElemJson>,
}

impl ComponentEntry {
    pub fn to_json(&self, g: &FiniteGroup) -> ComponentJson {
        let names = |s: &Subgroup| g.generators_of(s).iter().map(|&x| g.name(x).to_string()).collect::<Vec<_>>();
        ComponentJson {
            idempotent: self.e.to_json_value(),
            pair: self.pair.as_ref().map(|p| (names(&p.h), names(&p.k))),
            dim: self.dim,
            center_rank: self.center_rank,
            kind: self.kind(),
            classification: self.classification.clone(),
            descriptor: self.descriptor.clone(),
            certificate: self.certificate.as_ref().map(AlgElem::to_json_value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::build_named;

    fn named(n: &str) -> Arc<FiniteGroup> {
        Arc::new(build_named(n, 250).unwrap())
    }

    fn kinds(g: &Arc<FiniteGroup>) -> Vec<(usize, usize, ComponentKind)> {
        let c = count_matrix_components(g).unwrap();
        let mut v: Vec<_> = c.entries.iter().map(|e| (e.dim, e.center_rank, e.kind())).collect();
        v.sort_by_key(|x| (x.0, x.1));
        v
    }

    #[test]
    fn trivial_idempotent() {
        let g = named("S3");
        let e = AlgElem::tilde(&g, &g.full());
        assert_eq!(component_dimension(&g, &e).unwrap(), 1);
        assert_eq!(center_rank(&g, &e).unwrap(), 1);
    }

    #[test]
    fn a4_top_component() {
        let g = named("A4");
        let e = &AlgElem::one(&g) - &AlgElem::tilde(&g, &g.derived_subgroup());
        assert_eq!(component_dimension(&g, &e).unwrap(), 9);
        let c = count_matrix_components(&g).unwrap();
        assert_eq!(c.exact(), Some(1));
    }

    #[test]
    fn ex37_top_component() {
        let g = named("C3^2:C8");
        let e = &AlgElem::one(&g) - &AlgElem::tilde(&g, &g.derived_subgroup());
        assert_eq!(component_dimension(&g, &e).unwrap(), 64);
        assert_eq!(center_rank(&g, &e).unwrap(), 1);
        let k = kinds(&g);
        let top = k.iter().find(|x| x.0 == 64).unwrap();
        assert_eq!(top.2, ComponentKind::Matrix);
    }

    #[test]
    fn non_idempotent_rejected() {
        let g = named("S3");
        let e = AlgElem::tilde(&g, &g.full()).scale_int(2);
        assert_eq!(component_dimension(&g, &e), Err(Error::NotCentralIdempotent));
    }

    #[test]
    fn quaternion_table_entries() {
        let q16 = kinds(&named("Q16"));
        assert!(q16.contains(&(8, 2, ComponentKind::DivisionNoncommutative)));
        assert!(q16.contains(&(4, 1, ComponentKind::Matrix)));
        let d8q8 = kinds(&named("D8cpQ8"));
        assert!(d8q8.contains(&(16, 1, ComponentKind::Matrix)));
        let q8 = kinds(&named("Q8"));
        assert!(q8.contains(&(4, 1, ComponentKind::DivisionNoncommutative)));
    }

    #[test]
    fn counts() {
        for (name, n) in [("A4", 1), ("C2^4:C5", 3), ("Q8xC4", 1), ("D8cpD8", 1), ("C5:C4", 1), ("Q8xC7", 0), ("S3", 1)] {
            let c = count_matrix_components(&named(name)).unwrap();
            assert_eq!(c.exact(), Some(n), "{name}");
        }
    }

    #[test]
    fn probe_finds_matrix_nilpotent_in_d12() {
        let g = named("D12");
        let lat = subgroups(&g);
        let c = count_matrix_components(&g).unwrap();
        let found = c
            .entries
            .iter()
            .filter(|e| e.kind() == ComponentKind::Matrix)
            .filter_map(|e| nilpotent_probe(&g, &lat, &e.e, DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED))
            .count();
        assert!(found >= 1);
    }

    #[test]
    fn probe_silent_on_division_components() {
        let g = named("Q8");
        let lat = subgroups(&g);
        let c = count_matrix_components(&g).unwrap();
        for e in &c.entries {
            assert!(nilpotent_probe(&g, &lat, &e.e, 2000, 1).is_none());
        }
    }

    #[test]
    fn descriptor_for_ex37() {
        let g = named("C3^2:C8");
        let h = g.derived_subgroup();
        let k = g.generate(&[g.word("a").unwrap()]);
        let d = describe_component(&g, &ShodaPair { h, k }).unwrap();
        assert_eq!((d.matrix_size_n, d.cyclotomic_order_h, d.quotient_nh_order), (4, 3, 2));
        assert_eq!(d.cyclic.as_ref().unwrap().shape, TwistShape::Trivial);
        assert_eq!(classify_component(&d).branch, "trivial-twisting");
    }
}
