//! Amitsur's criterion for when the cyclic algebra attached to `G_{m,r}`
//! is a division ring.

use crate::arith::{gcd, is_prime, ord_mod, padic_valuation, pow_mod, prime_divisors, valuation_of_pow_minus_one};
use crate::error::{Error, Result};
use serde::Serialize;

/// Local data at a prime `p | m`, with `m' = m / p^alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeData {
    pub p: u64,
    pub alpha: u32,
    pub m_prime: u64,
    /// Order of `r` modulo `m'`.
    pub n_p: u64,
    /// Order of `p` modulo `m'`.
    pub delta_p: u64,
    /// Least `mu >= 1` with `r^mu` a power of `p` modulo `m'`.
    pub mu_p: u64,
    /// The exponent with `r^mu_p = p^mu_prime (mod m')`.
    pub mu_prime: u64,
    /// `mu_p * delta_p / n_p`.
    pub delta_prime: u64,
}

/// One attempt to satisfy condition (2) for a prime `q | n` at a prime `p | m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub p: u64,
    pub q_divides_n_p: bool,
    /// `p != 2` and `q` does not divide `(p^delta' - 1)/s`.
    pub branch_a: bool,
    /// `p = q = 2`, (3D) holds and `m/4`, `delta'` are both odd.
    pub branch_b: bool,
    /// `v_q(p^delta' - 1) - v_q(s)`, when `p != q`.
    pub quotient_valuation: Option<i64>,
    /// Whether `s` divides `p^delta' - 1`.
    pub quotient_integral: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QCheck {
    pub q: u64,
    pub checks: Vec<PrimeCheck>,
    pub satisfied_at: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AmitsurVerdict {
    Division,
    NotDivision,
}

/// Every quantity the criterion evaluates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmitsurTrace {
    pub m: u64,
    pub r: u64,
    pub s: u64,
    pub t: u64,
    pub n: u64,
    pub gcd_n_t: u64,
    pub gcd_s_t: u64,
    pub cond_3c: bool,
    pub cond_3d: bool,
    pub case_1: bool,
    pub case_2: bool,
    pub primes: Vec<PrimeData>,
    pub q_checks: Vec<QCheck>,
    pub diagnostics: Vec<String>,
    pub verdict: AmitsurVerdict,
}

fn split_two(x: u64) -> (u32, u64) {
    let mut k = 0;
    let mut y = x;
    while y.is_multiple_of(2) && y > 0 {
        y /= 2;
        k += 1;
    }
    (k, y)
}

pub fn prime_data(m: u64, r: u64, p: u64, diagnostics: &mut Vec<String>) -> Result<PrimeData> {
    let alpha = padic_valuation(p, m)?;
    let m_prime = m / p.pow(alpha);
    let n_p = ord_mod(m_prime, r)?;
    let delta_p = ord_mod(m_prime, p)?;
    let mut found = None;
    'outer: for mu in 1..=n_p * delta_p {
        let lhs = pow_mod(r, mu, m_prime);
        for mu2 in 0..delta_p {
            if pow_mod(p, mu2, m_prime) == lhs {
                found = Some((mu, mu2));
                break 'outer;
            }
        }
    }
    let (mu_p, mu_prime) = match found {
        Some(x) => x,
        None => {
            diagnostics.push(format!("no exponent mu found at p = {p}; using mu = n_p"));
            (n_p, 0)
        }
    };
    if (mu_p * delta_p) % n_p != 0 {
        diagnostics.push(format!("mu_p delta_p / n_p is not an integer at p = {p}"));
    }
    Ok(PrimeData { p, alpha, m_prime, n_p, delta_p, mu_p, mu_prime, delta_prime: mu_p * delta_p / n_p })
}

/// Decides whether the algebra `(Q(xi_m)/F, sigma_r, xi_s)` is a division ring.
pub fn amitsur_division(m: u64, r: u64) -> Result<AmitsurTrace> {
    if m < 2 || gcd(m, r % m) != 1 {
        return Err(Error::NotCoprime { a: r, m });
    }
    let r = r % m;
    let s = gcd((r + m - 1) % m, m);
    let s = if s == 0 { m } else { s };
    let t = m / s;
    let n = ord_mod(m, r)?;
    let gcd_n_t = gcd(n, t);
    let gcd_s_t = gcd(s, t);
    let cond_3c = gcd_n_t == 1 && gcd_s_t == 1;
    let (n2, n_odd) = split_two(n);
    let (alpha2, m_odd) = split_two(m);
    let (s2, s_odd) = split_two(s);
    let _ = (n_odd, m_odd, s_odd);
    let cond_3d = n2 == 1
        && alpha2 >= 2
        && s2 == 1
        && gcd_n_t == 2
        && gcd_s_t == 2
        && r % (1u64 << alpha2) == (1u64 << alpha2) - 1;
    let case_1 = n == 2 && s == 2 && r == m - 1;
    let mut diagnostics = Vec::new();
    let primes = prime_divisors(m)
        .into_iter()
        .map(|p| prime_data(m, r, p, &mut diagnostics))
        .collect::<Result<Vec<_>>>()?;
    let mut q_checks = Vec::new();
    for q in prime_divisors(n) {
        let mut checks = Vec::new();
        let mut satisfied_at = None;
        for pd in &primes {
            let q_divides_n_p = pd.n_p % q == 0;
            let (mut branch_a, mut branch_b) = (false, false);
            let (mut qv, mut integral) = (None, None);
            if pd.p != 2 && !q_divides_n_p {
                // v_q((p^delta' - 1)/s), computed without forming the power.
                let vx = if pd.p == q { 0 } else { valuation_of_pow_minus_one(q, pd.p, pd.delta_prime)? as i64 };
                let vs = padic_valuation(q, s)? as i64;
                let int = pow_mod(pd.p, pd.delta_prime, s) == 1 % s;
                if !int {
                    diagnostics.push(format!("s = {s} does not divide {}^{} - 1", pd.p, pd.delta_prime));
                }
                qv = Some(vx - vs);
                integral = Some(int);
                branch_a = vx - vs <= 0;
            }
            if pd.p == 2 && q == 2 && !q_divides_n_p {
                branch_b = cond_3d && m.is_multiple_of(4) && (m / 4) % 2 == 1 && pd.delta_prime % 2 == 1;
            }
            if !q_divides_n_p && (branch_a || branch_b) && satisfied_at.is_none() {
                satisfied_at = Some(pd.p);
            }
            checks.push(PrimeCheck {
                p: pd.p,
                q_divides_n_p,
                branch_a,
                branch_b,
                quotient_valuation: qv,
                quotient_integral: integral,
            });
        }
        q_checks.push(QCheck { q, checks, satisfied_at });
    }
    let case_2 = q_checks.iter().all(|c| c.satisfied_at.is_some());
    let verdict = if (cond_3c || cond_3d) && (case_1 || case_2) {
        AmitsurVerdict::Division
    } else {
        AmitsurVerdict::NotDivision
    };
    Ok(AmitsurTrace {
        m,
        r,
        s,
        t,
        n,
        gcd_n_t,
        gcd_s_t,
        cond_3c,
        cond_3d,
        case_1,
        case_2,
        primes,
        q_checks,
        diagnostics,
        verdict,
    })
}

/// Parameters of the component `j` of `C_p x| C_{q^k}` transported to
/// Amitsur's normal form: `(m, r, n, s, t)` with `m = p q^(j-k0)`.
pub fn nonfaithful_transport(p: u64, q: u64, k0: u32, j: u32, r0: u64) -> Result<(u64, u64, u64, u64, u64)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if j <= k0 {
        return Err(Error::InconsistentFamilyParams(format!("need j > k0, got j = {j}, k0 = {k0}")));
    }
    let qpart = q.pow(j - k0);
    let m = p * qpart;
    let r = crate::arith::crt(r0 % p, p, 1, qpart)?;
    let n = q.pow(k0);
    Ok((m, r % m, n, qpart, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_verdicts() {
        let t = amitsur_division(21, 16).unwrap();
        assert_eq!((t.s, t.t, t.n), (3, 7, 3));
        assert_eq!(t.verdict, AmitsurVerdict::Division);
        assert_eq!(amitsur_division(6, 5).unwrap().verdict, AmitsurVerdict::Division);
        assert_eq!(amitsur_division(12, 5).unwrap().verdict, AmitsurVerdict::NotDivision);
        assert_eq!(amitsur_division(4, 3).unwrap().verdict, AmitsurVerdict::Division);
        assert_eq!(amitsur_division(8, 7).unwrap().verdict, AmitsurVerdict::Division);
    }

    #[test]
    fn quaternions_over_cyclotomic_fields() {
        // Q8 x C3 splits, Q8 x C7 stays a division ring.
        assert_eq!(amitsur_division(12, 7).unwrap().verdict, AmitsurVerdict::NotDivision);
        assert_eq!(amitsur_division(28, 15).unwrap().verdict, AmitsurVerdict::Division);
    }

    #[test]
    fn trivial_action_is_a_field() {
        assert_eq!(amitsur_division(9, 1).unwrap().verdict, AmitsurVerdict::Division);
    }

    #[test]
    fn transport_matches_known_group() {
        // C7 x| C9 with y x y^-1 = x^2 is G_{21,16}.
        assert_eq!(nonfaithful_transport(7, 3, 1, 2, 2).unwrap(), (21, 16, 3, 3, 7));
    }

    #[test]
    fn not_coprime() {
        assert!(matches!(amitsur_division(12, 4), Err(Error::NotCoprime { .. })));
    }
}
