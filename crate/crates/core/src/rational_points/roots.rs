//! Rational roots of polynomials of degree at most 3 by the rational root
//! theorem.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// All rational roots of `a3 x^3 + a2 x^2 + a1 x + a0`, ascending, each
/// verified by exact back-substitution.
///
/// Denominators are cleared, the content removed and zero roots split off;
/// every remaining root is `p/q` with `p | constant` and `q | leading`.
/// Divisors come from trial division, so the cost grows with the square root
/// of the largest prime factor of those two coefficients.
pub fn rational_roots_cubic(
    a3: &Rational,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
) -> Result<Vec<Rational>> {
    let original = [a0.clone(), a1.clone(), a2.clone(), a3.clone()];
    if original.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut coeffs = integer_coefficients(&original);
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    let mut roots = Vec::new();
    if coeffs[0].is_zero() {
        roots.push(Rational::zero());
        while coeffs[0].is_zero() {
            coeffs.remove(0);
        }
    }
    if coeffs.len() >= 2 {
        let lead = coeffs.last().expect("nonempty").abs();
        let constant = coeffs[0].abs();
        let qs = divisors(&lead);
        let ps = divisors(&constant);
        let bound = cauchy_bound(&coeffs);
        for q in &qs {
            for p in &ps {
                if !p.gcd(q).is_one() || Rational::new(p.clone(), q.clone()) > bound {
                    continue;
                }
                for sp in [p.clone(), -p.clone()] {
                    if is_root(&coeffs, &sp, q) {
                        roots.push(Rational::new(sp, q.clone()));
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    debug_assert!(roots.iter().all(|r| eval(&original, r).is_zero()));
    roots.retain(|r| eval(&original, r).is_zero());
    Ok(roots)
}

fn eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Scales by the lcm of the denominators and divides out the content.
fn integer_coefficients(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

/// `1 + max |a_i / a_n|`.
fn cauchy_bound(coeffs: &[BigInt]) -> Rational {
    let lead = coeffs.last().expect("nonempty").abs();
    let max = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    Rational::one() + Rational::new(max, lead)
}

/// `sum_k c_k p^k q^(n-k) == 0`, in i128 when it fits.
fn is_root(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    if let Some(v) = eval_homogeneous_i128(coeffs, p, q) {
        return v == 0;
    }
    let n = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    for (k, c) in coeffs.iter().enumerate() {
        acc += c * num::pow(p.clone(), k) * num::pow(q.clone(), n - k);
    }
    acc.is_zero()
}

fn eval_homogeneous_i128(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> Option<i128> {
    let p = p.to_i128()?;
    let q = q.to_i128()?;
    let n = coeffs.len() - 1;
    let mut acc: i128 = 0;
    for (k, c) in coeffs.iter().enumerate() {
        let mut term = c.to_i128()?;
        for _ in 0..k {
            term = term.checked_mul(p)?;
        }
        for _ in 0..(n - k) {
            term = term.checked_mul(q)?;
        }
        acc = acc.checked_add(term)?;
    }
    Some(acc)
}

/// Positive divisors of `n > 0`, ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (prime, mult) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (mult as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..mult {
                pk = &pk * &prime;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    if let Some(mut m) = n.to_u64() {
        let mut p = 2u64;
        while p.saturating_mul(p) <= m {
            if m % p == 0 {
                let mut k = 0;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                out.push((BigInt::from(p), k));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            out.push((BigInt::from(m), 1));
        }
        return out;
    }
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            let mut k = 0;
            while (&m % &p).is_zero() {
                m /= &p;
                k += 1;
            }
            out.push((p.clone(), k));
        }
        p += 1;
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn roots(a3: Rational, a2: Rational, a1: Rational, a0: Rational) -> Vec<Rational> {
        rational_roots_cubic(&a3, &a2, &a1, &a0).unwrap()
    }

    #[test]
    fn pure_cube() {
        let z = || rat(0, 1);
        assert_eq!(roots(rat(1, 1), z(), z(), z()), vec![rat(0, 1)]);
    }

    #[test]
    fn slice_through_unit_point() {
        // z^3 - 3*(1*0)*z + (1 + 0 - 1)
        let (x, y) = (rat(1, 1), rat(0, 1));
        let a1 = -(rat(3, 1) * &x * &y);
        let a0 = &x * &x * &x + &y * &y * &y - rat(1, 1);
        assert_eq!(roots(rat(1, 1), rat(0, 1), a1, a0), vec![rat(0, 1)]);
    }

    #[test]
    fn slice_through_non_family_point() {
        let (x, y) = (rat(18, 7), rat(16, 7));
        let a1 = -(rat(3, 1) * &x * &y);
        let a0 = &x * &x * &x + &y * &y * &y - rat(1, 1);
        assert!(roots(rat(1, 1), rat(0, 1), a1, a0).contains(&rat(15, 7)));
    }

    #[test]
    fn lower_degree_and_errors() {
        // 2x - 3
        assert_eq!(roots(rat(0, 1), rat(0, 1), rat(2, 1), rat(-3, 1)), vec![rat(3, 2)]);
        // x^2 - 2 has no rational roots
        assert!(roots(rat(0, 1), rat(1, 1), rat(0, 1), rat(-2, 1)).is_empty());
        // nonzero constant
        assert!(roots(rat(0, 1), rat(0, 1), rat(0, 1), rat(5, 1)).is_empty());
        let z = rat(0, 1);
        assert_eq!(
            rational_roots_cubic(&z, &z, &z, &z),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn three_known_roots() {
        // 6 (x - 1/2)(x + 2/3)(x - 5) = 6x^3 - 29x^2 - 7x + 10
        let r = roots(rat(6, 1), rat(-29, 1), rat(-7, 1), rat(10, 1));
        assert_eq!(r, vec![rat(-2, 3), rat(1, 2), rat(5, 1)]);
        // same polynomial with rational coefficients scaled by 1/12
        let r = roots(rat(1, 2), rat(-29, 12), rat(-7, 12), rat(10, 12));
        assert_eq!(r, vec![rat(-2, 3), rat(1, 2), rat(5, 1)]);
    }

    #[test]
    fn double_root_reported_once() {
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let r = roots(rat(1, 1), rat(0, 1), rat(-3, 1), rat(2, 1));
        assert_eq!(r, vec![rat(-2, 1), rat(1, 1)]);
    }

    #[test]
    fn brute_force_agrees_on_small_cubics() {
        // oracle: every p/q with |p|, q <= 40 checked directly
        let candidates: Vec<Rational> = (-40i64..=40)
            .flat_map(|p| (1i64..=40).map(move |q| rat(p, q)))
            .collect();
        for (a, b, c) in [(1, 2, 3), (2, -3, 5), (4, 1, -7), (3, 3, 3), (6, -1, 2)] {
            // (a x - b)(c x - 1)(x + c) has small rational roots b/a, 1/c, -c
            let lin = |m: i64, n: i64| [rat(n, 1), rat(m, 1)];
            let prod = mul(&mul(&lin(a, -b), &lin(c, -1)), &lin(1, c));
            let got = roots(prod[3].clone(), prod[2].clone(), prod[1].clone(), prod[0].clone());
            let mut want: Vec<Rational> = candidates
                .iter()
                .filter(|x| eval(&prod, x).is_zero())
                .cloned()
                .collect();
            want.sort();
            want.dedup();
            assert_eq!(got, want, "a={a} b={b} c={c}");
        }
    }

    fn mul(f: &[Rational], g: &[Rational]) -> Vec<Rational> {
        let mut out = vec![rat(0, 1); f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    }

    #[test]
    fn divisors_of_small_numbers() {
        let d: Vec<i64> = divisors(&BigInt::from(74088))
            .iter()
            .map(|b| b.to_i64().unwrap())
            .collect();
        assert_eq!(d.len(), 64);
        assert_eq!(divisors(&BigInt::from(1)), vec![BigInt::one()]);
        assert_eq!(divisors(&BigInt::from(97)).len(), 2);
    }
}
