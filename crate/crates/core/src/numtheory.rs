//! Exact integer arithmetic helpers: p-parts, multiplicative orders, the
//! values `x^f ± 1`, cyclotomic valuations, the linear/unitary dichotomy for
//! odd primes, and Fermat/Mersenne tests.
//!
//! All valuations are computed by closed forms assembled from the cyclotomic
//! factorization `x^f - 1 = prod_{d | f} Phi_d(x)`: for an odd prime `p` with
//! `e = ord_p(x)`, each layer `Phi_{e p^k}(x)` with `k >= 1` contributes
//! exactly one factor of `p`, and for `p = 2` the layers `Phi_{2^k}(x)` with
//! `k >= 2` contribute exactly one factor of `2` on top of the base value
//! `v_2(x^2 - 1)`. Everything is cross-checked against direct big-integer
//! valuations in the test suite.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sign selector for `x^f + 1` versus `x^f - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// How an odd prime `p` sits relative to the base `x`: `Linear` when
/// `ord_p(x)` is odd, `Unitary` when it is even. The prime `2` is kept apart
/// as `Even` since the dichotomy is defined only for odd primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeKind {
    Linear,
    Unitary,
    Even,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic Miller-Rabin primality test, valid for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorization, returned as `(prime, multiplicity)` pairs
/// with primes ascending. Intended for the modest inputs this crate meets.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decomposes `n` as `p^k` with `p` prime and `k >= 1`, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factor(n);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Largest power of `p` dividing `k`, so that `k = p_part(k, p) * k_{p'}`
/// with the cofactor coprime to `p`.
pub fn p_part(k: u64, p: u64) -> Result<u64> {
    Ok(p.pow(p_valuation(k, p)?))
}

/// Exponent of `p` in `k`.
pub fn p_valuation(mut k: u64, p: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::invalid("p-part of 0 is undefined"));
    }
    if p < 2 {
        return Err(Error::invalid(format!("{p} is not a prime")));
    }
    let mut v = 0;
    while k.is_multiple_of(p) {
        k /= p;
        v += 1;
    }
    Ok(v)
}

/// Exponent of `p` in `|n|`, for nonzero big integers.
pub fn big_valuation(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero(), "valuation of 0 is undefined");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Multiplicative order of `x` modulo `m`: the least `k >= 1` with
/// `x^k = 1 (mod m)`. Requires `gcd(x, m) = 1`.
pub fn ord_mod(x: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::invalid(format!("modulus {m} must be at least 2")));
    }
    let r = x.rem_euclid(m as i64) as u64;
    if gcd(r, m) != 1 {
        return Err(Error::invalid(format!("{x} is not a unit modulo {m}")));
    }
    // The order divides the group order phi(m); strip prime factors greedily.
    let phi: u64 = factor(m)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product();
    let mut o = phi;
    for (p, _) in factor(phi) {
        while o.is_multiple_of(p) && pow_mod(r, o / p, m) == 1 {
            o /= p;
        }
    }
    debug_assert_eq!(pow_mod(r, o, m), 1);
    Ok(o)
}

/// The exact integer `x^f + 1` or `x^f - 1`.
pub fn psi(x: i64, f: u32, sign: Sign) -> BigInt {
    let p = BigInt::from(x).pow(f);
    match sign {
        Sign::Plus => p + 1,
        Sign::Minus => p - 1,
    }
}

fn moebius(n: u64) -> i8 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Value `Phi_d(x)` of the `d`-th cyclotomic polynomial, computed through the
/// Moebius product over `x^e - 1` for divisors `e` of `d`. Requires `|x| >= 2`
/// so that no factor vanishes.
pub fn cyclotomic_value(d: u64, x: i64) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::invalid("cyclotomic index must be positive"));
    }
    if x.unsigned_abs() < 2 {
        return Err(Error::invalid(format!("base {x} must satisfy |x| >= 2")));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let v = psi(x, e as u32, Sign::Minus);
        match moebius(d / e) {
            1 => num *= v,
            -1 => den *= v,
            _ => {}
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "cyclotomic product must divide exactly");
    Ok(q)
}

/// Linear/unitary classification of an odd prime `p` with respect to `x`:
/// `Linear` exactly when `ord_p(x)` is odd.
pub fn classify_linear_unitary(x: i64, p: u64) -> Result<PrimeKind> {
    if p == 2 {
        return Err(Error::invalid(
            "linear/unitary classification is defined for odd primes only",
        ));
    }
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not a prime")));
    }
    let e = ord_mod(x, p)?;
    Ok(if e % 2 == 1 {
        PrimeKind::Linear
    } else {
        PrimeKind::Unitary
    })
}

/// A base `x` together with a prime `p` coprime to it, carrying the
/// precomputed data every valuation of `x^f ± 1` at `p` needs: the
/// multiplicative order `ord_p(x)`, the linear/unitary/even kind, and the
/// base valuation of the first divisible layer.
#[derive(Debug, Clone)]
pub struct ValuationContext {
    x: i64,
    p: u64,
    order: u64,
    kind: PrimeKind,
    // v_p(x^order - 1) for odd p; (v_2(x - 1), v_2(x + 1)) for p = 2.
    base_minus: u64,
    base2: (u64, u64),
}

impl ValuationContext {
    pub fn new(x: i64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a prime")));
        }
        if x.unsigned_abs() < 2 {
            return Err(Error::invalid(format!("base {x} must satisfy |x| >= 2")));
        }
        if x.rem_euclid(p as i64) == 0 {
            return Err(Error::invalid(format!("base {x} is divisible by {p}")));
        }
        let order = ord_mod(x, p)?;
        let kind = if p == 2 {
            PrimeKind::Even
        } else if order % 2 == 1 {
            PrimeKind::Linear
        } else {
            PrimeKind::Unitary
        };
        let (base_minus, base2) = if p == 2 {
            let m = big_valuation(&BigInt::from(x - 1), 2);
            let pl = big_valuation(&BigInt::from(x + 1), 2);
            (0, (m, pl))
        } else {
            (big_valuation(&psi(x, order as u32, Sign::Minus), p), (0, 0))
        };
        Ok(ValuationContext {
            x,
            p,
            order,
            kind,
            base_minus,
            base2,
        })
    }

    pub fn base(&self) -> i64 {
        self.x
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `ord_p(x)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn kind(&self) -> PrimeKind {
        self.kind
    }
}

/// Exact `p`-adic valuation of `x^f ± 1`, taken of the absolute value,
/// computed without forming the big integer.
pub fn psi_valuation(ctx: &ValuationContext, f: u64, sign: Sign) -> u64 {
    assert!(f >= 1, "exponent must be positive");
    if ctx.p == 2 {
        let (vm, vp) = ctx.base2;
        return match (sign, f % 2) {
            // x^f - 1 for odd f carries exactly the 2-part of x - 1.
            (Sign::Minus, 1) => vm,
            // For even f the layers stack: v_2(x^2 - 1) + v_2(f) - 1.
            (Sign::Minus, 0) => vm + vp + f.trailing_zeros() as u64 - 1,
            (Sign::Plus, 1) => vp,
            // x^f + 1 = (odd square) + 1 = 2 mod 4 for even f.
            _ => 1,
        };
    }
    let e = ctx.order;
    let vf = || -> u64 {
        let mut f = f;
        let mut v = 0;
        while f.is_multiple_of(ctx.p) {
            f /= ctx.p;
            v += 1;
        }
        v
    };
    match sign {
        Sign::Minus => {
            if f.is_multiple_of(e) {
                ctx.base_minus + vf()
            } else {
                0
            }
        }
        Sign::Plus => {
            // p | x^f + 1 exactly when f is congruent to e/2 modulo e.
            if (2 * f).is_multiple_of(e) && !f.is_multiple_of(e) {
                ctx.base_minus + vf()
            } else {
                0
            }
        }
    }
}

/// Sorted primes dividing `prod_{k=1}^{n} (x^k - 1)`: exactly the primes
/// coprime to `x` whose multiplicative order at `x` is at most `n`. Found by
/// factoring the cyclotomic values `Phi_d(x)` for `d <= n`.
pub fn primes_dividing_psi_product(x: i64, n: u32) -> Result<Vec<u64>> {
    use num_traits::ToPrimitive;
    if x.unsigned_abs() < 2 {
        return Err(Error::invalid(format!("base {x} must satisfy |x| >= 2")));
    }
    let mut out = std::collections::BTreeSet::new();
    for d in 1..=n as u64 {
        let v = cyclotomic_value(d, x)?.abs();
        let v = v
            .to_u64()
            .ok_or_else(|| Error::bound("cyclotomic value exceeds u64".to_string()))?;
        if v >= 2 {
            for (p, _) in factor(v) {
                out.insert(p);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// True for odd primes of the form `2^k + 1`.
pub fn is_fermat_prime(n: u64) -> bool {
    n >= 3 && (n - 1).is_power_of_two() && is_prime(n)
}

/// True for odd primes of the form `2^k - 1`.
pub fn is_mersenne_prime(n: u64) -> bool {
    n >= 3 && (n + 1).is_power_of_two() && is_prime(n)
}
