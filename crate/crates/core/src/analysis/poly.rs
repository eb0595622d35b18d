//! Dense univariate polynomials over an exact field, just enough for
//! irreducibility decisions on small minimal polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Characteristic, Scalar};

/// Coefficients, lowest degree first, no trailing zeros.
pub(crate) type Poly = Vec<Scalar>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

fn mul(a: &Poly, b: &Poly, ch: Characteristic) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Scalar::zero(ch); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn rem(a: &Poly, m: &Poly) -> Poly {
    let mut r = a.clone();
    let dm = degree(m).expect("nonzero modulus");
    let lead_inv = m[dm].inv().expect("nonzero leading coefficient");
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let f = &r[dr] * &lead_inv;
        for (i, c) in m.iter().enumerate() {
            let t = &f * c;
            r[dr - dm + i] -= &t;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn pow_mod(base: &Poly, mut e: u64, m: &Poly, ch: Characteristic) -> Poly {
    let mut acc = vec![Scalar::one(ch)];
    let mut b = rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, ch), m);
        }
        b = rem(&mul(&b, &b, ch), m);
        e >>= 1;
    }
    acc
}

/// `x^(p^k) mod f`.
fn frobenius_power(f: &Poly, k: usize, ch: Characteristic) -> Poly {
    let p = ch.get() as u64;
    let mut x = trim(vec![Scalar::zero(ch), Scalar::one(ch)]);
    for _ in 0..k {
        x = pow_mod(&x, p, f, ch);
    }
    x
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test over `GF(p)`.
fn irreducible_mod_p(f: &Poly, ch: Characteristic) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = trim(vec![Scalar::zero(ch), Scalar::one(ch)]);
    let sub = |a: &Poly, b: &Poly| -> Poly {
        let n = a.len().max(b.len());
        let z = Scalar::zero(ch);
        trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
    };
    if !sub(&frobenius_power(f, d, ch), &rem(&x, f)).is_empty() {
        return false;
    }
    prime_factors(d).into_iter().all(|q| {
        let g = gcd(f, &sub(&frobenius_power(f, d / q, ch), &x));
        degree(&g) == Some(0)
    })
}

/// Primitive integer polynomial with the same roots as a rational one.
fn integer_primitive(f: &Poly) -> Vec<BigInt> {
    let pairs: Vec<(BigInt, BigInt)> = f.iter().map(Scalar::numer_denom).collect();
    let lcm = pairs.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
    let ints: Vec<BigInt> = pairs.iter().map(|(n, d)| n * (&lcm / d)).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.bits() > 20 {
        return None;
    }
    let n: u64 = n.try_into().ok()?;
    Some((1..=n).filter(|d| n.is_multiple_of(*d)).map(BigInt::from).collect())
}

fn has_rational_root(c: &[BigInt]) -> Option<bool> {
    if c[0].is_zero() {
        return Some(true);
    }
    let ps = divisors(&c[0])?;
    let qs = divisors(c.last().unwrap())?;
    for p in &ps {
        for q in &qs {
            for num in [p.clone(), -p.clone()] {
                // Evaluate q^d f(num/q) = sum c_i num^i q^(d-i).
                let d = c.len() - 1;
                let v: BigInt =
                    c.iter().enumerate().map(|(i, ci)| ci * num.pow(i as u32) * q.pow((d - i) as u32)).sum();
                if v.is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

/// `Some(true)` irreducible, `Some(false)` reducible, `None` undecided.
pub(crate) fn is_irreducible(f: &Poly, ch: Characteristic) -> Option<bool> {
    let d = degree(f)?;
    if d == 0 {
        return Some(false);
    }
    if d == 1 {
        return Some(true);
    }
    if !ch.is_zero() {
        return Some(irreducible_mod_p(f, ch));
    }
    let c = integer_primitive(f);
    if d <= 3 {
        return has_rational_root(&c).map(|r| !r);
    }
    // Irreducible modulo a prime that keeps the degree implies irreducible
    // over the rationals.
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let lead = c.last().unwrap();
        if (lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let chp = Characteristic::new(p as u64).expect("prime");
        let reduced: Poly =
            c.iter().map(|x| Scalar::from_ratio(chp, x.clone(), BigInt::one()).expect("unit denominator")).collect();
        if irreducible_mod_p(&trim(reduced), chp) {
            return Some(true);
        }
    }
    if has_rational_root(&c) == Some(true) {
        return Some(false);
    }
    None
}
