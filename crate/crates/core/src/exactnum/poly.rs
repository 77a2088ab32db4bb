//! Dense univariate polynomials over the rationals, lowest degree first.
//!
//! Only what the cyclotomic field needs: multiplication, division with
//! remainder and the extended Euclidean algorithm.

use super::rational::Rational;

pub type QPoly = Vec<Rational>;

pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let mut out: QPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`. Panics if `b` is zero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = b[db].recip().expect("nonzero leading coefficient");
    let mut rem: QPoly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b[..=db].iter().enumerate() {
            if !bk.is_zero() {
                rem[shift + k] = &rem[shift + k] - &(&c * bk);
            }
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `u` with `u * a ≡ gcd(a, m)` (mod `m`) together with the monic gcd.
pub fn ext_gcd_inverse_part(a: &[Rational], m: &[Rational]) -> (QPoly, QPoly) {
    // Invariant: r0 ≡ s0 * a, r1 ≡ s1 * a (mod m).
    let mut r0: QPoly = m.to_vec();
    let mut s0: QPoly = Vec::new();
    let mut r1: QPoly = a.to_vec();
    let mut s1: QPoly = vec![Rational::one()];
    trim(&mut r0);
    trim(&mut r1);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let lead = r0.last().cloned().expect("gcd of nonzero inputs");
    let inv = lead.recip().expect("nonzero");
    let g = r0.iter().map(|c| c * &inv).collect();
    let u = s0.iter().map(|c| c * &inv).collect();
    (u, g)
}

/// The `n`-th cyclotomic polynomial, computed by dividing `y^n - 1` by
/// every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u32) -> QPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut num: QPoly = vec![Rational::zero(); n as usize + 1];
    num[0] = Rational::from_integer(-1);
    num[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = divrem(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[Rational]) -> Vec<i64> {
        p.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(10)), vec![1, -1, 1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..40 {
            assert_eq!(
                degree(&cyclotomic_polynomial(n)),
                Some(euler_phi(n)),
                "n = {n}"
            );
        }
    }
}
