//! Named groups.

use super::{build, parse_spec, FiniteGroup};
use crate::error::{Error, Result};

pub struct CatalogEntry {
    pub name: &'static str,
    /// A spec string, or `builtin` for groups with a dedicated constructor.
    pub definition: &'static str,
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "C1", definition: "C(1)", description: "trivial group" },
    CatalogEntry { name: "S3", definition: "D(6)", description: "symmetric group of degree 3" },
    CatalogEntry { name: "D8", definition: "D(8)", description: "dihedral of order 8" },
    CatalogEntry { name: "D12", definition: "D(12)", description: "dihedral of order 12" },
    CatalogEntry { name: "Q8", definition: "Q(8)", description: "quaternion group" },
    CatalogEntry { name: "Q12", definition: "Q(12)", description: "dicyclic of order 12" },
    CatalogEntry { name: "Q16", definition: "Q(16)", description: "generalized quaternion of order 16" },
    CatalogEntry { name: "A4", definition: "SdVec(2,2,[[0,1],[1,1]],3)", description: "alternating group of degree 4" },
    CatalogEntry { name: "S4", definition: "Perm(4,(1,2,3,4),(1,2))", description: "symmetric group of degree 4" },
    CatalogEntry { name: "A5", definition: "Perm(5,(1,2,3,4,5),(1,2,3))", description: "alternating group of degree 5" },
    CatalogEntry { name: "C2xD8", definition: "X(C(2),D(8))", description: "C2 x D8" },
    CatalogEntry { name: "C2xQ8", definition: "X(C(2),Q(8))", description: "Hamiltonian 2-group of order 16" },
    CatalogEntry { name: "C4:C4", definition: "BJ1(2,2,2)", description: "metacyclic C4 x| C4" },
    CatalogEntry { name: "M16", definition: "BJ1(2,3,1)", description: "modular group of order 16" },
    CatalogEntry { name: "D8cpD8", definition: "CProd(D(8),D(8),a^2=a^2)", description: "extraspecial 2^(1+4) of plus type" },
    CatalogEntry { name: "D8cpQ8", definition: "CProd(D(8),Q(8),a^2=a^2)", description: "extraspecial 2^(1+4) of minus type" },
    CatalogEntry { name: "D8cpC4", definition: "BJ2(2,4,1)", description: "central product of D8 and C4" },
    CatalogEntry { name: "Q8xC3", definition: "X(Q(8),C(3))", description: "Hamiltonian, 2 has even order mod 3" },
    CatalogEntry { name: "Q8xC4", definition: "BJ3(2)", description: "Q8 x C4" },
    CatalogEntry { name: "Q8xC7", definition: "X(Q(8),C(7))", description: "Hamiltonian, 2 has odd order mod 7" },
    CatalogEntry { name: "Q8xC8", definition: "BJ3(3)", description: "Q8 x C8" },
    CatalogEntry { name: "C3:C4", definition: "SdCyc(3,4,2)", description: "C3 x| C4, isomorphic to Q12" },
    CatalogEntry { name: "C3:C8", definition: "SdCyc(3,8,2)", description: "C3 x| C8 with kernel of order 4" },
    CatalogEntry { name: "C5:C4", definition: "SdCyc(5,4,2)", description: "Frobenius group of order 20" },
    CatalogEntry { name: "C7:C3", definition: "SdCyc(7,3,2)", description: "Frobenius group of order 21" },
    CatalogEntry { name: "C7:C9", definition: "SdCyc(7,9,2)", description: "C7 x| C9, isomorphic to G(21,16)" },
    CatalogEntry { name: "C11:C5", definition: "SdCyc(11,5,3)", description: "Frobenius group of order 55" },
    CatalogEntry { name: "C2^3:C7", definition: "SdVec(2,3,[[0,0,1],[1,0,1],[0,1,0]],7)", description: "F8 x| C7" },
    CatalogEntry { name: "C2^4:C5", definition: "SdVec(2,4,[[0,0,0,1],[1,0,0,1],[0,1,0,1],[0,0,1,1]],5)", description: "F16 x| C5" },
    CatalogEntry { name: "C5^2:C3", definition: "SdVec(5,2,[[0,4],[1,4]],3)", description: "F25 x| C3" },
    CatalogEntry { name: "C3^2:C8", definition: "SdVec(3,2,[[0,1],[1,1]],8)", description: "(C3 x C3) x| C8, a^c = b, b^c = ab" },
    CatalogEntry { name: "C3^2:C2", definition: "Sub(C3^2:C8,a,b,c^4)", description: "(C3 x C3) x| C2 inside C3^2:C8" },
    CatalogEntry { name: "C3^2:C4", definition: "Sub(C3^2:C8,a,b,c^2)", description: "(C3 x C3) x| C4 inside C3^2:C8" },
    CatalogEntry { name: "Heis3", definition: "Heis(3)", description: "Heisenberg group of order 27" },
    CatalogEntry { name: "M27", definition: "BJ1(3,2,1)", description: "C9 x| C3" },
    CatalogEntry { name: "BJ4", definition: "builtin", description: "order 81, x^9 = y^3 = 1, x^z = xy, y^z = x^-3 y, z^3 = x^3" },
    CatalogEntry { name: "BJ5", definition: "builtin", description: "order 32, a^8 = 1, a^b = a^-1, a^4 = b^4" },
    CatalogEntry { name: "BJ8", definition: "builtin", description: "order 32, c^2 = a^2, a^c = ab^2, b^c = ba^2" },
    CatalogEntry { name: "BJ9", definition: "builtin", description: "order 64, two commuting involutive actions on C4 x C4" },
];

pub fn build_named(name: &str, cap: usize) -> Result<FiniteGroup> {
    let entry = CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown group name `{name}`") })?;
    let g = match entry.name {
        "BJ4" => build::bj4(cap)?,
        "BJ5" => build::bj5(cap)?,
        "BJ8" => build::bj8(cap)?,
        "BJ9" => build::bj9(cap)?,
        _ => parse_spec(entry.definition)?.build(cap)?,
    };
    Ok(g.with_label(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in CATALOG {
            let g = build_named(e.name, 250).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(g.label(), e.name);
        }
    }
}
