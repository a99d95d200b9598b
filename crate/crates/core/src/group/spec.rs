//! The group specification mini-language.
//!
//! ```text
//! spec  := NAME                          catalog entry, see `catalog`
//!        | C(n) | D(2n) | Q(4n)           cyclic, dihedral, dicyclic
//!        | EA(p,r)                       elementary abelian p^r
//!        | MetaAmitsur(m,r)              <A,B | A^m, B^n = A^t, BAB^-1 = A^r>
//!        | Meta(m,n,r,t)                 <a,b | a^m, b^n = a^t, bab^-1 = a^r>
//!        | SdVec(p,r,[[..],..],q)        F_p^r x| C_q, matrix acting on columns
//!        | SdCyc(p,n,r0)                 C_p x| C_n, y x y^-1 = x^r0
//!        | X(spec,spec)                  direct product
//!        | CProd(spec,spec,z1=z2)        central product identifying z1 with z2
//!        | Quot(spec,word,...)           quotient by the subgroup the words generate
//!        | Sub(spec,word,...)            subgroup the words generate
//!        | Perm(n,cycles,...)            permutation group on 1..n
//!        | Table([[..],..])              explicit Cayley table, row-major
//!        | BJ1(p,m,n) | BJ2(p,z,k) | BJ3(n) | Heis(p)
//! ```

use super::build::{self, ExtraspecialKind};
use super::{catalog, FiniteGroup};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(String),
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    ElementaryAbelian(usize, usize),
    MetaAmitsur(usize, usize),
    Meta(usize, usize, usize, usize),
    SdVec { p: usize, r: usize, rows: Vec<Vec<usize>>, q: usize },
    SdCyc(usize, usize, usize),
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    CProd(Box<GroupSpec>, Box<GroupSpec>, String, String),
    Quot(Box<GroupSpec>, Vec<String>),
    Sub(Box<GroupSpec>, Vec<String>),
    Perm(usize, Vec<String>),
    Table(Vec<Vec<usize>>),
    Bj1(usize, usize, usize),
    Bj2(usize, usize, usize),
    Bj3(usize),
    Heis(usize),
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    parse_at(text, 0)
}

fn parse_at(text: &str, offset: usize) -> Result<GroupSpec> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let base = offset + lead;
    if t.is_empty() {
        return Err(perr(base, "empty specification"));
    }
    let name_end = t.find('(').unwrap_or(t.len());
    let name = t[..name_end].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == ':' || c == '^') {
        return Err(perr(base, format!("bad constructor name `{name}`")));
    }
    if name_end == t.len() {
        return Ok(GroupSpec::Named(name.to_string()));
    }
    if !t.ends_with(')') {
        return Err(perr(base + t.len(), "missing closing parenthesis"));
    }
    let inner = &t[name_end + 1..t.len() - 1];
    let inner_base = base + name_end + 1;
    let args = split_args(inner, inner_base)?;
    let want = |k: usize| -> Result<()> {
        if args.len() != k {
            Err(perr(base, format!("{name} takes {k} arguments, got {}", args.len())))
        } else {
            Ok(())
        }
    };
    let int = |i: usize| -> Result<usize> {
        let (s, p) = &args[i];
        s.trim().parse::<usize>().map_err(|_| perr(*p, format!("expected an integer, found `{}`", s.trim())))
    };
    let sub = |i: usize| -> Result<Box<GroupSpec>> { Ok(Box::new(parse_at(args[i].0, args[i].1)?)) };
    let words = |from: usize| -> Result<Vec<String>> {
        let w: Vec<String> = args[from..].iter().map(|(s, _)| s.trim().to_string()).collect();
        if w.iter().any(String::is_empty) {
            return Err(perr(base, "empty word"));
        }
        Ok(w)
    };
    let spec = match name {
        "C" => {
            want(1)?;
            GroupSpec::Cyclic(int(0)?)
        }
        "D" => {
            want(1)?;
            GroupSpec::Dihedral(int(0)?)
        }
        "Q" => {
            want(1)?;
            GroupSpec::Quaternion(int(0)?)
        }
        "EA" => {
            want(2)?;
            GroupSpec::ElementaryAbelian(int(0)?, int(1)?)
        }
        "MetaAmitsur" => {
            want(2)?;
            GroupSpec::MetaAmitsur(int(0)?, int(1)?)
        }
        "Meta" => {
            want(4)?;
            GroupSpec::Meta(int(0)?, int(1)?, int(2)?, int(3)?)
        }
        "SdVec" => {
            want(4)?;
            let rows: Vec<Vec<usize>> = serde_json::from_str(args[2].0.trim())
                .map_err(|e| perr(args[2].1, format!("bad matrix: {e}")))?;
            GroupSpec::SdVec { p: int(0)?, r: int(1)?, rows, q: int(3)? }
        }
        "SdCyc" => {
            want(3)?;
            GroupSpec::SdCyc(int(0)?, int(1)?, int(2)?)
        }
        "X" => {
            want(2)?;
            GroupSpec::Direct(sub(0)?, sub(1)?)
        }
        "CProd" => {
            want(3)?;
            let id = args[2].0.trim();
            let (z1, z2) = id
                .split_once('=')
                .ok_or_else(|| perr(args[2].1, "identification must read `z1=z2`"))?;
            GroupSpec::CProd(sub(0)?, sub(1)?, z1.trim().to_string(), z2.trim().to_string())
        }
        "Quot" | "Sub" => {
            if args.len() < 2 {
                return Err(perr(base, format!("{name} needs a group and at least one word")));
            }
            let g = sub(0)?;
            let w = words(1)?;
            if name == "Quot" {
                GroupSpec::Quot(g, w)
            } else {
                GroupSpec::Sub(g, w)
            }
        }
        "Perm" => {
            if args.len() < 2 {
                return Err(perr(base, "Perm needs a degree and generators"));
            }
            GroupSpec::Perm(int(0)?, words(1)?)
        }
        "Table" => {
            want(1)?;
            let rows: Vec<Vec<usize>> = serde_json::from_str(args[0].0.trim())
                .map_err(|e| perr(args[0].1, format!("bad table: {e}")))?;
            GroupSpec::Table(rows)
        }
        "BJ1" => {
            want(3)?;
            GroupSpec::Bj1(int(0)?, int(1)?, int(2)?)
        }
        "BJ2" => {
            want(3)?;
            GroupSpec::Bj2(int(0)?, int(1)?, int(2)?)
        }
        "BJ3" => {
            want(1)?;
            GroupSpec::Bj3(int(0)?)
        }
        "Heis" => {
            want(1)?;
            GroupSpec::Heis(int(0)?)
        }
        other => return Err(perr(base, format!("unknown constructor `{other}`"))),
    };
    Ok(spec)
}

fn split_args(s: &str, base: usize) -> Result<Vec<(&str, usize)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr(base + i, "unbalanced bracket"));
                }
            }
            ',' if depth == 0 => {
                out.push((&s[start..i], base + start));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(perr(base + s.len(), "unbalanced bracket"));
    }
    out.push((&s[start..], base + start));
    Ok(out)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        let json = |v: &Vec<Vec<usize>>| serde_json::to_string(v).unwrap();
        match self {
            Named(n) => write!(f, "{n}"),
            Cyclic(n) => write!(f, "C({n})"),
            Dihedral(n) => write!(f, "D({n})"),
            Quaternion(n) => write!(f, "Q({n})"),
            ElementaryAbelian(p, r) => write!(f, "EA({p},{r})"),
            MetaAmitsur(m, r) => write!(f, "MetaAmitsur({m},{r})"),
            Meta(m, n, r, t) => write!(f, "Meta({m},{n},{r},{t})"),
            SdVec { p, r, rows, q } => write!(f, "SdVec({p},{r},{},{q})", json(rows)),
            SdCyc(p, n, r) => write!(f, "SdCyc({p},{n},{r})"),
            Direct(a, b) => write!(f, "X({a},{b})"),
            CProd(a, b, z1, z2) => write!(f, "CProd({a},{b},{z1}={z2})"),
            Quot(g, w) => write!(f, "Quot({g},{})", w.join(",")),
            Sub(g, w) => write!(f, "Sub({g},{})", w.join(",")),
            Perm(n, c) => write!(f, "Perm({n},{})", c.join(",")),
            Table(rows) => write!(f, "Table({})", json(rows)),
            Bj1(p, m, n) => write!(f, "BJ1({p},{m},{n})"),
            Bj2(p, z, k) => write!(f, "BJ2({p},{z},{k})"),
            Bj3(n) => write!(f, "BJ3({n})"),
            Heis(p) => write!(f, "Heis({p})"),
        }
    }
}

impl GroupSpec {
    /// Builds the group, refusing anything larger than `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        use GroupSpec::*;
        let g = match self {
            Named(n) => return catalog::build_named(n, cap),
            Cyclic(n) => build::cyclic(*n, cap)?,
            Dihedral(n) => build::dihedral(*n, cap)?,
            Quaternion(n) => build::dicyclic(*n, cap)?,
            ElementaryAbelian(p, r) => build::elementary_abelian(*p, *r, cap)?,
            MetaAmitsur(m, r) => build::meta_amitsur(*m, *r, cap)?,
            Meta(m, n, r, t) => {
                if m.saturating_mul(*n) > cap {
                    return Err(Error::OrderCapExceeded { order: m.saturating_mul(*n), cap });
                }
                build::metacyclic(*m, *n, *r, *t, "", cap)?
            }
            SdVec { p, r, rows, q } => build::semidirect_vector(*p, *r, rows, *q, cap)?,
            SdCyc(p, n, r) => build::semidirect_cyclic(*p, *n, *r, cap)?,
            Direct(a, b) => {
                let (ga, gb) = (a.build(cap)?, b.build(cap)?);
                build::direct_product(&ga, &gb, cap)?
            }
            CProd(a, b, z1, z2) => {
                let (ga, gb) = (a.build(cap)?, b.build(cap)?);
                let (x, y) = (ga.word(z1)?, gb.word(z2)?);
                build::central_product(&ga, &gb, x, y, cap)?
            }
            Quot(g, w) => {
                let big = g.build(cap)?;
                let refs: Vec<&str> = w.iter().map(String::as_str).collect();
                let n = build::subgroup_from_words(&big, &refs)?;
                if !big.is_normal(&n) {
                    return Err(Error::InconsistentSpec("quotient by a non-normal subgroup".into()));
                }
                let order = big.order() / n.order();
                if order > cap {
                    return Err(Error::OrderCapExceeded { order, cap });
                }
                big.quotient(&n, "")?.0
            }
            Sub(g, w) => {
                let big = g.build(cap)?;
                let refs: Vec<&str> = w.iter().map(String::as_str).collect();
                let s = build::subgroup_from_words(&big, &refs)?;
                big.induced(&s, "")?
            }
            Perm(n, cycles) => {
                let gens = cycles
                    .iter()
                    .map(|c| build::parse_cycles(c, *n))
                    .collect::<Result<Vec<_>>>()?;
                build::permutation_group(*n, &gens, "", cap)?
            }
            Table(rows) => {
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InconsistentSpec("table is not square".into()));
                }
                let names = (0..n).map(|i| format!("#{i}")).collect();
                FiniteGroup::from_table(n, rows.concat(), names, "", cap)?
            }
            Bj1(p, m, n) => build::bj1(*p, *m, *n, cap)?,
            Bj2(p, z, k) => {
                let kind = match k {
                    1 => ExtraspecialKind::First,
                    2 => ExtraspecialKind::Second,
                    _ => return Err(Error::InconsistentSpec("BJ2 kind must be 1 or 2".into())),
                };
                build::bj2(*p, *z, kind, cap)?
            }
            Bj3(n) => build::bj3(*n, cap)?,
            Heis(p) => build::heisenberg(*p, cap)?,
        };
        Ok(g.with_label(self.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_examples() {
        for s in [
            "C(6)",
            "D(12)",
            "X(Q(8),C(4))",
            "CProd(D(8),Q(8),a^2=a^2)",
            "SdVec(3,2,[[0,1],[1,1]],8)",
            "Quot(SdCyc(3,8,2),y^4)",
            "Sub(C3^2:C8,a,b,c^2)",
            "Perm(5,(1,2,3,4,5),(1,2,3))",
            "Table([[0,1],[1,0]])",
        ] {
            let spec = parse_spec(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn parse_errors_have_positions() {
        assert!(matches!(parse_spec("C(x)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_spec("Foo(1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_spec("X(C(2)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn quotient_of_c3_c8() {
        let g = parse_spec("Quot(SdCyc(3,8,2),y^4)").unwrap().build(250).unwrap();
        assert_eq!(g.order(), 12);
    }
}
