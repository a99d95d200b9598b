//! Exact arithmetic in the rational group algebra `Q[G]`.
//!
//! Elements are dense coefficient vectors over a common positive
//! denominator, kept in lowest terms.

use crate::error::{Error, Result};
use crate::group::{parse_spec, ElemSet, FiniteGroup, Subgroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub type Rational = BigRational;

#[derive(Clone)]
pub struct AlgElem {
    group: Arc<FiniteGroup>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.den == other.den && self.num == other.num
    }
}

impl Eq for AlgElem {}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgElem {
    fn normalized(group: Arc<FiniteGroup>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for x in &mut num {
                *x = -&*x;
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for x in &num {
                if g.is_one() {
                    break;
                }
                if !x.is_zero() {
                    g = g.gcd(x);
                }
            }
            if !g.is_one() {
                for x in &mut num {
                    *x = &*x / &g;
                }
                den /= &g;
            }
        }
        AlgElem { group, num, den }
    }

    pub(crate) fn from_parts(g: &Arc<FiniteGroup>, num: Vec<BigInt>, den: BigInt) -> Self {
        Self::normalized(g.clone(), num, den)
    }

    pub fn zero(g: &Arc<FiniteGroup>) -> Self {
        AlgElem { group: g.clone(), num: vec![BigInt::zero(); g.order()], den: BigInt::one() }
    }

    pub fn one(g: &Arc<FiniteGroup>) -> Self {
        Self::basis(g, 0)
    }

    /// The group element `x` as an algebra element.
    pub fn basis(g: &Arc<FiniteGroup>, x: usize) -> Self {
        let mut e = Self::zero(g);
        e.num[x] = BigInt::one();
        e
    }

    pub fn from_ints(g: &Arc<FiniteGroup>, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != g.order() {
            return Err(Error::GroupMismatch);
        }
        Ok(AlgElem { group: g.clone(), num: coeffs.iter().map(|&c| BigInt::from(c)).collect(), den: BigInt::one() })
    }

    pub fn from_coeffs(g: &Arc<FiniteGroup>, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != g.order() {
            return Err(Error::GroupMismatch);
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::normalized(g.clone(), num, den))
    }

    /// Sum of the elements of a set, the "hat" of the set.
    pub fn hat(g: &Arc<FiniteGroup>, s: &ElemSet) -> Self {
        let mut e = Self::zero(g);
        for x in s.iter() {
            e.num[x] = BigInt::one();
        }
        e
    }

    /// The averaging idempotent of a subgroup, `hat(H) / |H|`.
    pub fn tilde(g: &Arc<FiniteGroup>, h: &Subgroup) -> Self {
        let mut e = Self::hat(g, &h.members);
        e.den = BigInt::from(h.order());
        e
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self, x: usize) -> Rational {
        Rational::new(self.num[x].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|x| self.coeff(x)).collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.num.len()).filter(|&i| !self.num[i].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Whether the element lies in `Z[G]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    fn check(&self, other: &AlgElem) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn checked_add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        Ok(self.lin(other, 1))
    }

    pub fn checked_sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        Ok(self.lin(other, -1))
    }

    fn lin(&self, other: &AlgElem, sign: i32) -> AlgElem {
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| if sign > 0 { a * &fa + b * &fb } else { a * &fa - b * &fb })
            .collect();
        Self::normalized(self.group.clone(), num, den)
    }

    pub fn scale(&self, c: &Rational) -> AlgElem {
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::normalized(self.group.clone(), num, &self.den * c.denom())
    }

    pub fn scale_int(&self, c: i64) -> AlgElem {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    pub fn checked_mul(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &AlgElem) -> AlgElem {
        let g = &self.group;
        let n = g.order();
        let sa: Vec<usize> = self.support();
        let sb: Vec<usize> = other.support();
        let den = &self.den * &other.den;
        if sa.is_empty() || sb.is_empty() {
            return AlgElem::zero(g);
        }
        if let (Some(va), Some(vb)) = (small(&self.num, &sa), small(&other.num, &sb)) {
            let ma = va.iter().map(|x| x.unsigned_abs() as u128).max().unwrap();
            let mb = vb.iter().map(|x| x.unsigned_abs() as u128).max().unwrap();
            let terms = sa.len().min(sb.len()) as u128;
            if ma.checked_mul(mb).and_then(|x| x.checked_mul(terms)).is_some_and(|b| b < (1u128 << 126)) {
                let mut acc = vec![0i128; n];
                for (i, &x) in sa.iter().enumerate() {
                    let cx = va[i] as i128;
                    for (j, &y) in sb.iter().enumerate() {
                        acc[g.mul(x, y)] += cx * vb[j] as i128;
                    }
                }
                let num = acc.into_iter().map(BigInt::from).collect();
                return Self::normalized(g.clone(), num, den);
            }
        }
        let mut acc = vec![BigInt::zero(); n];
        for &x in &sa {
            for &y in &sb {
                acc[g.mul(x, y)] += &self.num[x] * &other.num[y];
            }
        }
        Self::normalized(g.clone(), acc, den)
    }

    /// `g^-1 a g`.
    pub fn conjugate(&self, g: usize) -> AlgElem {
        let grp = &self.group;
        let gi = grp.inv(g);
        let num = (0..grp.order()).map(|h| self.num[grp.mul(grp.mul(g, h), gi)].clone()).collect();
        AlgElem { group: grp.clone(), num, den: self.den.clone() }
    }

    /// `g a g^-1`.
    pub fn conjugate_left(&self, g: usize) -> AlgElem {
        self.conjugate(self.group.inv(g))
    }

    /// Whether conjugation by `g` fixes the element, without allocating.
    pub fn commutes_with(&self, g: usize) -> bool {
        let grp = &self.group;
        let gi = grp.inv(g);
        (0..grp.order()).all(|h| self.num[grp.mul(grp.mul(g, h), gi)] == self.num[h])
    }

    pub fn is_central(&self) -> bool {
        self.group.generators().into_iter().all(|g| self.commutes_with(g))
    }

    pub fn centralizer_subgroup(&self) -> Subgroup {
        let n = self.group.order();
        Subgroup { members: ElemSet::from_iter(n, (0..n).filter(|&g| self.commutes_with(g))) }
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Nilpotency by repeated squaring up to the first power of two that is
    /// at least `|G|`. Squares are rescaled to primitive integer vectors,
    /// which does not change whether they vanish.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.group.order();
        let mut x = self.primitive();
        let mut power = 1;
        loop {
            if x.is_zero() {
                return true;
            }
            if power >= n {
                return false;
            }
            x = (&x * &x).primitive();
            power *= 2;
        }
    }

    /// A positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> AlgElem {
        let mut g = BigInt::zero();
        for x in &self.num {
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if g.is_zero() {
            return AlgElem::zero(&self.group);
        }
        let num = self.num.iter().map(|x| x / &g).collect();
        AlgElem { group: self.group.clone(), num, den: BigInt::one() }
    }

    /// Lexicographic comparison of coefficient vectors.
    pub fn cmp_coeffs(&self, other: &AlgElem) -> std::cmp::Ordering {
        for i in 0..self.num.len() {
            let a = &self.num[i] * &other.den;
            let b = &other.num[i] * &self.den;
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn to_json_value(&self) -> AlgElemJson {
        AlgElemJson {
            group: self.group.label().to_string(),
            coeffs: self
                .coeffs()
                .into_iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).unwrap()
    }

    /// Parses the JSON form, building the group from its spec string.
    pub fn from_json(s: &str, cap: usize) -> Result<AlgElem> {
        let v: AlgElemJson =
            serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        let g = Arc::new(parse_spec(&v.group)?.build(cap)?);
        Self::from_json_value(&v, &g)
    }

    pub fn from_json_value(v: &AlgElemJson, g: &Arc<FiniteGroup>) -> Result<AlgElem> {
        let coeffs = v
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad numerator {n}") })?;
                let d: BigInt = d.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad denominator {d}") })?;
                if d.is_zero() {
                    return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(g, &coeffs)
    }
}

fn small(v: &[BigInt], support: &[usize]) -> Option<Vec<i64>> {
    support.iter().map(|&i| v[i].to_i64()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgElemJson {
    pub group: String,
    pub coeffs: Vec<[String; 2]>,
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|x| format!("{}*{}", self.coeff(x), self.group.name(x)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&AlgElem> for &AlgElem {
            type Output = AlgElem;
            /// Panics when the operands live in different groups; use the
            /// `checked_*` methods to get an error instead.
            fn $m(self, rhs: &AlgElem) -> AlgElem {
                self.check(rhs).expect("operands live in different groups");
                $body(self, rhs)
            }
        }
        impl $tr<AlgElem> for AlgElem {
            type Output = AlgElem;
            fn $m(self, rhs: AlgElem) -> AlgElem {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &AlgElem, b: &AlgElem| a.lin(b, 1));
binop!(Sub, sub, |a: &AlgElem, b: &AlgElem| a.lin(b, -1));
binop!(Mul, mul, |a: &AlgElem, b: &AlgElem| a.mul_unchecked(b));

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem { group: self.group.clone(), num: self.num.iter().map(|x| -x).collect(), den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dihedral, GroupSpec};

    fn d12() -> Arc<FiniteGroup> {
        Arc::new(dihedral(12, 250).unwrap().with_label(GroupSpec::Dihedral(12).to_string()))
    }

    #[test]
    fn tilde_is_idempotent() {
        let g = d12();
        let h = g.generate(&[g.word("b").unwrap()]);
        assert!(AlgElem::tilde(&g, &h).is_idempotent());
    }

    #[test]
    fn nilpotent_detection() {
        let g = d12();
        let a = AlgElem::basis(&g, g.word("a").unwrap());
        let b = AlgElem::basis(&g, g.word("b").unwrap());
        let one = AlgElem::one(&g);
        let alpha = &(&(&one - &b) * &a) * &(&one + &b);
        assert!(alpha.is_nilpotent());
        assert!(!a.is_nilpotent());
        assert!(!(&one + &b).is_nilpotent());
    }

    #[test]
    fn json_roundtrip() {
        let g = d12();
        let h = g.generate(&[g.word("a^3").unwrap()]);
        let e = AlgElem::tilde(&g, &h);
        let back = AlgElem::from_json(&e.to_json(), 250).unwrap();
        assert_eq!(back.coeffs(), e.coeffs());
    }

    #[test]
    fn mismatch_is_an_error() {
        let g = d12();
        let h = Arc::new(dihedral(8, 250).unwrap());
        assert_eq!(AlgElem::one(&g).checked_mul(&AlgElem::one(&h)), Err(Error::GroupMismatch));
    }
}
