//! Constructors for the group families used throughout the crate.

use super::{ElemSet, FiniteGroup, Subgroup};
use crate::arith::{gcd, is_prime, ord_mod, prime_divisors};
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

fn power_name(letter: &str, k: usize) -> String {
    if k == 1 {
        letter.to_string()
    } else {
        format!("{letter}^{k}")
    }
}

fn join_names(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Closes a set of concrete generators under multiplication and tabulates.
pub fn closure_group<T, F, N>(
    identity: T,
    gens: &[T],
    mul: F,
    name: N,
    label: &str,
    cap: usize,
) -> Result<FiniteGroup>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
    N: Fn(&T) -> String,
{
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = mul(&elems[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
                check_cap(elems.len(), cap)?;
            }
        }
    }
    let n = elems.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&mul(&elems[a], &elems[b])];
        }
    }
    let names = elems.iter().map(name).collect();
    FiniteGroup::from_table(n, table, names, label, cap)
}

/// Cyclic group of order `n` generated by `letter`.
pub fn cyclic_named(n: usize, letter: &str, cap: usize) -> Result<FiniteGroup> {
    abelian(&[n], &[letter], &format!("C({n})"), cap)
}

pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    cyclic_named(n, "a", cap)
}

/// `Z_{n1} x ... x Z_{nk}` with the given generator letters, elements in
/// mixed radix with the first coordinate varying fastest.
pub fn abelian(orders: &[usize], letters: &[&str], label: &str, cap: usize) -> Result<FiniteGroup> {
    if orders.contains(&0) || orders.len() != letters.len() {
        return Err(Error::InconsistentSpec("bad abelian invariants".into()));
    }
    let n: usize = orders.iter().product();
    check_cap(n, cap)?;
    let decode = |mut x: usize| {
        let mut v = Vec::with_capacity(orders.len());
        for &o in orders {
            v.push(x % o);
            x /= o;
        }
        v
    };
    let encode = |v: &[usize]| {
        let mut x = 0;
        for (i, &o) in orders.iter().enumerate().rev() {
            x = x * o + v[i];
        }
        x
    };
    let mut table = vec![0; n * n];
    for a in 0..n {
        let va = decode(a);
        for b in 0..n {
            let vb = decode(b);
            let s: Vec<usize> = (0..orders.len()).map(|i| (va[i] + vb[i]) % orders[i]).collect();
            table[a * n + b] = encode(&s);
        }
    }
    let names = (0..n)
        .map(|x| {
            let v = decode(x);
            join_names(
                v.iter()
                    .zip(letters)
                    .filter(|(e, _)| **e > 0)
                    .map(|(&e, l)| power_name(l, e))
                    .collect(),
            )
        })
        .collect();
    FiniteGroup::from_table(n, table, names, label, cap)
}

/// Extends a map on generators to an endomorphism, failing if the images
/// do not respect the relations of `g`.
pub fn extend_hom(g: &FiniteGroup, gens: &[usize], images: &[usize], target: &FiniteGroup) -> Result<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = target.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push_back(y);
            } else if map[y] != img {
                return Err(Error::InconsistentSpec("generator images violate a relation".into()));
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Err(Error::InconsistentSpec("given elements do not generate".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(Error::InconsistentSpec("map is not a homomorphism".into()));
            }
        }
    }
    Ok(map)
}

/// `<N, c | c^d = z, c x c^-1 = phi(x)>` where `phi` is given by the images
/// of the named generators of `N`. Requires `phi(z) = z` and `phi^d` equal
/// to conjugation by `z`.
pub fn cyclic_extension(
    base: &FiniteGroup,
    base_gens: &[usize],
    images: &[usize],
    d: usize,
    z: usize,
    letter: &str,
    label: &str,
    cap: usize,
) -> Result<FiniteGroup> {
    let nb = base.order();
    let order = nb * d;
    check_cap(order, cap)?;
    let phi = extend_hom(base, base_gens, images, base)?;
    let mut seen = vec![false; nb];
    for &x in &phi {
        if seen[x] {
            return Err(Error::InconsistentSpec("action is not bijective".into()));
        }
        seen[x] = true;
    }
    if phi[z] != z {
        return Err(Error::InconsistentSpec("power relation is not fixed by the action".into()));
    }
    // phi^k as permutations.
    let mut powers = vec![(0..nb).collect::<Vec<_>>()];
    for k in 1..=d {
        let prev = &powers[k - 1];
        powers.push((0..nb).map(|x| phi[prev[x]]).collect());
    }
    for x in 0..nb {
        if powers[d][x] != base.mul(base.mul(z, x), base.inv(z)) {
            return Err(Error::InconsistentSpec("action order does not match the power relation".into()));
        }
    }
    let mut table = vec![0; order * order];
    for k in 0..d {
        for l in 0..d {
            let wrap = k + l >= d;
            for n in 0..nb {
                for m in 0..nb {
                    let mut v = base.mul(n, powers[k][m]);
                    if wrap {
                        v = base.mul(v, z);
                    }
                    table[(k * nb + n) * order + l * nb + m] = ((k + l) % d) * nb + v;
                }
            }
        }
    }
    let names = (0..order)
        .map(|x| {
            let (k, n) = (x / nb, x % nb);
            match (k, n) {
                (0, n) => base.name(n).to_string(),
                (k, 0) => power_name(letter, k),
                (k, n) => format!("{}*{}", base.name(n), power_name(letter, k)),
            }
        })
        .collect();
    FiniteGroup::from_table(order, table, names, label, cap)
}

/// `<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>` of order `m n`.
pub fn metacyclic(m: usize, n: usize, r: usize, t: usize, label: &str, cap: usize) -> Result<FiniteGroup> {
    metacyclic_letters(m, n, r, t, ("a", "b"), label, cap)
}

pub fn metacyclic_letters(
    m: usize,
    n: usize,
    r: usize,
    t: usize,
    letters: (&str, &str),
    label: &str,
    cap: usize,
) -> Result<FiniteGroup> {
    if m == 0 || n == 0 {
        return Err(Error::InconsistentSpec("zero order".into()));
    }
    check_cap(m * n, cap)?;
    if gcd(r as u64, m as u64) != 1 && m > 1 {
        return Err(Error::InconsistentSpec(format!("{r} is not a unit modulo {m}")));
    }
    let base = cyclic_named(m, letters.0, cap)?;
    let a = if m > 1 { 1 } else { 0 };
    cyclic_extension(&base, &[a], &[base.pow(a, r % m.max(1))], n, base.pow(a, t % m.max(1)), letters.1, label, cap)
}

pub fn dihedral(order: usize, cap: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InconsistentSpec("dihedral order must be even".into()));
    }
    let n = order / 2;
    if n == 1 {
        return Ok(cyclic(2, cap)?.with_label("D(2)"));
    }
    metacyclic(n, 2, n - 1, 0, &format!("D({order})"), cap)
}

/// Dicyclic group `<a, b | a^(2n), b^2 = a^n, b a b^-1 = a^-1>` of order `4n`.
pub fn dicyclic(order: usize, cap: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(4) {
        return Err(Error::InconsistentSpec("quaternion order must be divisible by 4".into()));
    }
    let n = order / 4;
    metacyclic(2 * n, 2, 2 * n - 1, n, &format!("Q({order})"), cap)
}

pub fn elementary_abelian(p: usize, r: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InconsistentSpec(format!("{p} is not prime")));
    }
    let letters = letters_from('a', r);
    let refs: Vec<&str> = letters.iter().map(String::as_str).collect();
    let order = (p as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(Error::OrderCapExceeded { order: order.min(usize::MAX as u128) as usize, cap });
    }
    abelian(&vec![p; r], &refs, &format!("EA({p},{r})"), cap)
}

fn letters_from(start: char, k: usize) -> Vec<String> {
    (0..k).map(|i| ((start as u8 + i as u8) as char).to_string()).collect()
}

/// `F_p^r x| C_q`, the generator of `C_q` acting by the matrix `rows`
/// on column vectors.
pub fn semidirect_vector(p: usize, r: usize, rows: &[Vec<usize>], q: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InconsistentSpec(format!("{p} is not prime")));
    }
    if rows.len() != r || rows.iter().any(|row| row.len() != r) {
        return Err(Error::InconsistentSpec("action matrix has the wrong shape".into()));
    }
    let order = (p as u128).pow(r as u32) * q as u128;
    if order > cap as u128 {
        return Err(Error::OrderCapExceeded { order: order.min(usize::MAX as u128) as usize, cap });
    }
    let m: Vec<Vec<usize>> = rows.iter().map(|row| row.iter().map(|x| x % p).collect()).collect();
    // The matrix must have order dividing q.
    let mut pw = identity_matrix(r);
    for _ in 0..q {
        pw = mat_mul(&m, &pw, p);
    }
    if pw != identity_matrix(r) {
        return Err(Error::InconsistentSpec(format!("action matrix does not have order dividing {q}")));
    }
    let letters = letters_from('a', r + 1);
    let refs: Vec<&str> = letters[..r].iter().map(String::as_str).collect();
    let base = abelian(&vec![p; r], &refs, "P", cap)?;
    let basis: Vec<usize> = (0..r).map(|i| p.pow(i as u32)).collect();
    let images: Vec<usize> = (0..r)
        .map(|j| (0..r).map(|i| m[i][j] * p.pow(i as u32)).sum())
        .collect();
    let label = format!(
        "SdVec({p},{r},[{}],{q})",
        m.iter()
            .map(|row| format!("[{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(",")
    );
    cyclic_extension(&base, &basis, &images, q, 0, &letters[r], &label, cap)
}

pub fn identity_matrix(r: usize) -> Vec<Vec<usize>> {
    (0..r).map(|i| (0..r).map(|j| usize::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &[Vec<usize>], b: &[Vec<usize>], p: usize) -> Vec<Vec<usize>> {
    let r = a.len();
    (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum::<usize>() % p).collect())
        .collect()
}

/// `C_p x| C_n`, `y x y^-1 = x^r0`.
pub fn semidirect_cyclic(p: usize, n: usize, r0: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InconsistentSpec(format!("{p} is not prime")));
    }
    if r0.is_multiple_of(p) {
        return Err(Error::InconsistentSpec(format!("{r0} is not a unit modulo {p}")));
    }
    let o = ord_mod(p as u64, r0 as u64).unwrap() as usize;
    if !n.is_multiple_of(o) {
        return Err(Error::InconsistentSpec(format!("{r0} has order {o} modulo {p}, not dividing {n}")));
    }
    metacyclic_letters(p, n, r0 % p, 0, ("x", "y"), &format!("SdCyc({p},{n},{r0})"), cap)
}

/// Amitsur's group `G_{m,r}`: `<A, B | A^m, B^n = A^t, B A B^-1 = A^r>`.
pub fn meta_amitsur(m: usize, r: usize, cap: usize) -> Result<FiniteGroup> {
    if m < 2 || gcd(m as u64, r as u64) != 1 {
        return Err(Error::InconsistentSpec(format!("({m},{r}) are not coprime")));
    }
    let s = gcd((r as u64 + m as u64 - 1) % m as u64, m as u64) as usize;
    let s = if s == 0 { m } else { s };
    let t = m / s;
    let n = ord_mod(m as u64, r as u64).unwrap() as usize;
    metacyclic_letters(m, n, r % m, t, ("a", "b"), &format!("MetaAmitsur({m},{r})"), cap)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    check_cap(n, cap)?;
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
        }
    }
    let names = (0..n)
        .map(|x| {
            if x == 0 {
                "1".to_string()
            } else {
                format!("({},{})", g.name(x / nh), h.name(x % nh))
            }
        })
        .collect();
    FiniteGroup::from_table(n, table, names, format!("X({},{})", g.label(), h.label()), cap)
}

/// Central product identifying the central element `z1` of `g` with `z2` of `h`.
pub fn central_product(g: &FiniteGroup, h: &FiniteGroup, z1: usize, z2: usize, cap: usize) -> Result<FiniteGroup> {
    let zg = g.center();
    let zh = h.center();
    if !zg.contains(z1) || !zh.contains(z2) {
        return Err(Error::InconsistentSpec("identified elements must be central".into()));
    }
    if g.elem_order(z1) != h.elem_order(z2) {
        return Err(Error::InconsistentSpec("identified elements have different orders".into()));
    }
    let big = direct_product(g, h, usize::MAX)?;
    let k = g.elem_order(z1);
    check_cap(g.order() * h.order() / k, cap)?;
    let nh = h.order();
    let gen = z1 * nh + h.inv(z2);
    let n = big.generate(&[gen]);
    let label = format!("CProd({},{},{}={})", g.label(), h.label(), g.name(z1), h.name(z2));
    let (q, _) = big.quotient(&n, label)?;
    Ok(q)
}

/// Permutation group on `1..=degree`, composing left to right.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>], label: &str, cap: usize) -> Result<FiniteGroup> {
    for g in gens {
        let mut sorted = g.clone();
        sorted.sort_unstable();
        if g.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
            return Err(Error::InconsistentSpec("not a permutation".into()));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    closure_group(
        id,
        gens,
        |a, b| a.iter().map(|&i| b[i]).collect(),
        |p| cycle_notation(p),
        label,
        cap,
    )
}

/// Cycle notation with 1-based points; the identity is `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            continue;
        }
        let mut cyc = vec![i + 1];
        seen[i] = true;
        let mut j = p[i];
        while j != i {
            cyc.push(j + 1);
            seen[j] = true;
            j = p[j];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parses cycle notation such as `(1,2)(3,4)` into a permutation of `0..degree`.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..degree).collect();
    let bad = || Error::InconsistentSpec(format!("bad cycle notation `{s}`"));
    for cyc in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let body = cyc.strip_prefix('(').ok_or_else(bad)?;
        if body.is_empty() {
            continue;
        }
        let pts: Vec<usize> = body
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if pts.iter().any(|&x| x == 0 || x > degree) {
            return Err(bad());
        }
        for w in 0..pts.len() {
            p[pts[w] - 1] = pts[(w + 1) % pts.len()] - 1;
        }
    }
    Ok(p)
}

/// Alternating group of degree 5, generated by `(1,2,3,4,5)` and `(1,2,3)`.
pub fn alternating5(cap: usize) -> Result<FiniteGroup> {
    let a = parse_cycles("(1,2,3,4,5)", 5)?;
    let b = parse_cycles("(1,2,3)", 5)?;
    permutation_group(5, &[a, b], "A5", cap)
}

/// Heisenberg group of order `p^3`: `<x, z> x| <y>`, `y x y^-1 = x z`.
pub fn heisenberg(p: usize, cap: usize) -> Result<FiniteGroup> {
    check_cap(p * p * p, cap)?;
    let base = abelian(&[p, p], &["x", "z"], "P", cap)?;
    let x = base.element("x").unwrap();
    let z = base.element("z").unwrap();
    cyclic_extension(&base, &[x, z], &[base.mul(x, z), z], p, 0, "y", &format!("Heis({p})"), cap)
}

/// Metacyclic `<a, b | a^(p^m), b^(p^n), b a b^-1 = a^(1+p^(m-1))>`.
pub fn bj1(p: usize, m: usize, n: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) || m < 2 || n < 1 {
        return Err(Error::InconsistentFamilyParams(format!("BJ1({p},{m},{n})")));
    }
    let pm = p.checked_pow(m as u32).ok_or(Error::OrderCapExceeded { order: usize::MAX, cap })?;
    let pn = p.checked_pow(n as u32).ok_or(Error::OrderCapExceeded { order: usize::MAX, cap })?;
    check_cap(pm.saturating_mul(pn), cap)?;
    metacyclic(pm, pn, 1 + p.pow(m as u32 - 1), 0, &format!("BJ1({p},{m},{n})"), cap)
}

/// Nonabelian groups of order `p^3` used as the first factor in `bj2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialKind {
    /// `D8` for `p = 2`, the Heisenberg group for odd `p`.
    First,
    /// `Q8` for `p = 2`, `C_{p^2} x| C_p` for odd `p`.
    Second,
}

pub fn order_p3(p: usize, kind: ExtraspecialKind, cap: usize) -> Result<(FiniteGroup, usize)> {
    let g = match (p, kind) {
        (2, ExtraspecialKind::First) => dihedral(8, cap)?,
        (2, ExtraspecialKind::Second) => dicyclic(8, cap)?,
        (_, ExtraspecialKind::First) => heisenberg(p, cap)?,
        (_, ExtraspecialKind::Second) => metacyclic(p * p, p, 1 + p, 0, &format!("Meta({},{p},{},0)", p * p, 1 + p), cap)?,
    };
    let z = g.center();
    let gen = z.members.iter().find(|&x| x != 0).unwrap();
    Ok((g, gen))
}

/// Central product of a nonabelian group of order `p^3` with a cyclic group
/// of order `zorder`, amalgamating the centre.
pub fn bj2(p: usize, zorder: usize, kind: ExtraspecialKind, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64)
        || zorder < p
        || prime_divisors(zorder as u64) != vec![p as u64]
        || (p == 2 && zorder <= 2)
    {
        return Err(Error::InconsistentFamilyParams(format!("BJ2({p},{zorder})")));
    }
    check_cap(p * p * zorder, cap)?;
    let (g0, z0) = order_p3(p, kind, cap)?;
    let c = cyclic(zorder, cap)?;
    let w = c.pow(1, zorder / p);
    let tag = if kind == ExtraspecialKind::First { 1 } else { 2 };
    Ok(central_product(&g0, &c, z0, w, cap)?.with_label(format!("BJ2({p},{zorder},{tag})")))
}

/// `Q8 x C_{2^n}`.
pub fn bj3(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::InconsistentFamilyParams(format!("BJ3({n})")));
    }
    let c = cyclic_named(1 << n, "x", cap)?;
    Ok(direct_product(&dicyclic(8, cap)?, &c, cap)?.with_label(format!("BJ3({n})")))
}

/// Order 81: `<x, y, z | x^9 = y^3 = 1, xy = yx, z x z^-1 = xy, z y z^-1 = x^-3 y, z^3 = x^3>`.
pub fn bj4(cap: usize) -> Result<FiniteGroup> {
    let base = abelian(&[9, 3], &["x", "y"], "P", cap)?;
    let x = base.element("x").unwrap();
    let y = base.element("y").unwrap();
    let img_x = base.mul(x, y);
    let img_y = base.mul(base.pow(x, 6), y);
    cyclic_extension(&base, &[x, y], &[img_x, img_y], 3, base.pow(x, 3), "z", "BJ4", cap)
}

/// Order 32: `<a, b | a^8 = 1, b a b^-1 = a^-1, a^4 = b^4>`.
pub fn bj5(cap: usize) -> Result<FiniteGroup> {
    metacyclic(8, 4, 7, 4, "BJ5", cap)
}

/// Order 32: `<a, b, c | a^4 = b^4 = [a,b] = 1, c^2 = a^2, a^c = a b^2, b^c = b a^2>`.
pub fn bj8(cap: usize) -> Result<FiniteGroup> {
    let base = abelian(&[4, 4], &["a", "b"], "P", cap)?;
    let a = base.element("a").unwrap();
    let b = base.element("b").unwrap();
    let a2 = base.pow(a, 2);
    let b2 = base.pow(b, 2);
    cyclic_extension(&base, &[a, b], &[base.mul(a, b2), base.mul(b, a2)], 2, a2, "c", "BJ8", cap)
}

/// Order 64: `<a, b, c, d | a^4 = b^4 = [a,b] = 1, c^2 = a^2 b^2, a^c = a^-1,
/// b^c = a^2 b^-1, d^2 = a^2, a^d = a^-1 b^2, b^d = b^-1, [c,d] = 1>`.
pub fn bj9(cap: usize) -> Result<FiniteGroup> {
    let base = abelian(&[4, 4], &["a", "b"], "P", cap)?;
    let a = base.element("a").unwrap();
    let b = base.element("b").unwrap();
    let a2 = base.pow(a, 2);
    let b2 = base.pow(b, 2);
    let inner = cyclic_extension(
        &base,
        &[a, b],
        &[base.inv(a), base.mul(a2, base.inv(b))],
        2,
        base.mul(a2, b2),
        "c",
        "BJ9inner",
        cap,
    )?;
    let (a, b, c) = (inner.word("a")?, inner.word("b")?, inner.word("c")?);
    let b2 = inner.pow(b, 2);
    cyclic_extension(
        &inner,
        &[a, b, c],
        &[inner.mul(inner.inv(a), b2), inner.inv(b), c],
        2,
        inner.pow(a, 2),
        "d",
        "BJ9",
        cap,
    )
}

/// Companion matrix of a monic polynomial over `F_p`, coefficients from
/// the constant term upward (leading 1 omitted).
pub fn companion_matrix(coeffs: &[usize], p: usize) -> Vec<Vec<usize>> {
    let r = coeffs.len();
    let mut m = vec![vec![0; r]; r];
    for i in 1..r {
        m[i][i - 1] = 1;
    }
    for (i, &c) in coeffs.iter().enumerate() {
        m[i][r - 1] = (p - c % p) % p;
    }
    m
}

/// Order of a matrix in `GL_r(F_p)`, or `None` if singular within `limit` steps.
pub fn matrix_order(m: &[Vec<usize>], p: usize, limit: usize) -> Option<usize> {
    let id = identity_matrix(m.len());
    let mut pw = m.to_vec();
    for k in 1..=limit {
        if pw == id {
            return Some(k);
        }
        pw = mat_mul(&pw, m, p);
    }
    None
}

/// A matrix of order `q` in `GL_n(F_p)` acting as multiplication by an
/// element of order `q` in `F_{p^n}`.
pub fn field_multiplier(p: usize, n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    let full = p.pow(n as u32) - 1;
    if !full.is_multiple_of(q) {
        return Err(Error::InconsistentFamilyParams(format!("{q} does not divide {p}^{n}-1")));
    }
    // Find a primitive polynomial by brute force over monic degree-n polynomials.
    let count = p.pow(n as u32);
    for code in 0..count {
        let coeffs: Vec<usize> = (0..n).map(|i| code / p.pow(i as u32) % p).collect();
        if coeffs[0] == 0 {
            continue;
        }
        let c = companion_matrix(&coeffs, p);
        if matrix_order(&c, p, full) == Some(full) {
            let mut m = identity_matrix(n);
            for _ in 0..full / q {
                m = mat_mul(&m, &c, p);
            }
            return Ok(m);
        }
    }
    Err(Error::InconsistentFamilyParams("no primitive polynomial found".into()))
}

/// Subgroup of `g` generated by named words.
pub fn subgroup_from_words(g: &FiniteGroup, words: &[&str]) -> Result<Subgroup> {
    let gens = words.iter().map(|w| g.word(w)).collect::<Result<Vec<_>>>()?;
    Ok(g.generate(&gens))
}

pub fn elemset_of(g: &FiniteGroup, xs: &[usize]) -> ElemSet {
    ElemSet::from_iter(g.order(), xs.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    const CAP: usize = 250;

    #[test]
    fn basic_orders() {
        assert_eq!(cyclic(7, CAP).unwrap().order(), 7);
        assert_eq!(dihedral(12, CAP).unwrap().order(), 12);
        assert_eq!(dicyclic(8, CAP).unwrap().order(), 8);
        assert_eq!(meta_amitsur(21, 16, CAP).unwrap().order(), 63);
        assert_eq!(alternating5(CAP).unwrap().order(), 60);
        assert_eq!(bj4(CAP).unwrap().order(), 81);
        assert_eq!(bj5(CAP).unwrap().order(), 32);
        assert_eq!(bj8(CAP).unwrap().order(), 32);
        assert_eq!(bj9(CAP).unwrap().order(), 64);
        assert_eq!(bj2(2, 4, ExtraspecialKind::First, CAP).unwrap().order(), 16);
        assert_eq!(heisenberg(3, CAP).unwrap().order(), 27);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = dicyclic(8, CAP).unwrap();
        assert_eq!((0..8).filter(|&x| q.elem_order(x) == 2).count(), 1);
        assert!(q.is_hamiltonian());
    }

    #[test]
    fn bad_action_rejected() {
        assert!(matches!(
            semidirect_cyclic(7, 4, 2, CAP),
            Err(Error::InconsistentSpec(_))
        ));
        assert!(matches!(
            semidirect_vector(2, 2, &[vec![0, 1], vec![1, 1]], 2, CAP),
            Err(Error::InconsistentSpec(_))
        ));
    }

    #[test]
    fn cap_respected() {
        assert!(matches!(cyclic(300, CAP), Err(Error::OrderCapExceeded { .. })));
        assert!(matches!(meta_amitsur(21, 16, 50), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn field_multiplier_order() {
        let m = field_multiplier(2, 4, 5).unwrap();
        assert_eq!(matrix_order(&m, 2, 100), Some(5));
    }

    #[test]
    fn cycle_roundtrip() {
        let p = parse_cycles("(1,2)(3,4)", 5).unwrap();
        assert_eq!(cycle_notation(&p), "(1,2)(3,4)");
    }
}
