//! The two chopping constructions on base-p expansions of an integer.
//!
//! Both start from an expansion of `n` into powers of a prime `p` and cut it
//! at the first term strictly exceeding a residue `r` taken modulo a second
//! quantity (the second prime `q`, or the order `e_q`). The cut splits
//! `n = low + high` with `high > r`, and the split has the key property that
//! shifting `high` by any small amount preserves p-parts: `(high + k)_p =
//! k_p` for `k <= low` and `(high - k)_p = k_p` for `k <= r` (restricted to
//! multiples of `e_p` in the order-weighted variant). A primed refinement
//! repeats the cut at `r + modulus`.

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Base-p expansion `n = s + sum c_i p^{a_i}` with `0 <= s < p`, digits
/// `1 <= c_i <= p-1`, and exponents `1 <= a_1 < a_2 < ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicExpansion {
    pub n: u64,
    pub p: u64,
    /// Residue of `n` modulo `p`.
    pub s: u64,
    /// `(coefficient, exponent)` pairs with ascending exponents `>= 1`.
    pub terms: Vec<(u64, u32)>,
}

impl PAdicExpansion {
    fn term_values(&self) -> Vec<u64> {
        self.terms.iter().map(|&(c, a)| c * self.p.pow(a)).collect()
    }
}

pub fn p_adic_expansion(n: u64, p: u64) -> Result<PAdicExpansion> {
    if n == 0 {
        return Err(Error::invalid("expansion of 0 is empty"));
    }
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not a prime")));
    }
    let s = n % p;
    let mut rest = n / p;
    let mut terms = Vec::new();
    let mut a = 1u32;
    while rest > 0 {
        let c = rest % p;
        if c > 0 {
            terms.push((c, a));
        }
        rest /= p;
        a += 1;
    }
    Ok(PAdicExpansion { n, p, s, terms })
}

/// Order-weighted expansion `n = s + sum c_i e p^{a_i}` where `0 <= s < e`,
/// the `c_i` are the base-p digits of `(n - s)/e`, and a possibly zero
/// digit `c_0` at exponent `0` is kept explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderWeightedExpansion {
    pub n: u64,
    pub p: u64,
    /// The weight `e`, a multiplicative order with `e < p`.
    pub e: u64,
    /// Residue of `n` modulo `e`.
    pub s: u64,
    /// `(coefficient, exponent)` pairs, exponents ascending from 0; the
    /// leading entry always has exponent 0 and may have coefficient 0.
    pub terms: Vec<(u64, u32)>,
}

impl OrderWeightedExpansion {
    fn term_values(&self) -> Vec<u64> {
        self.terms
            .iter()
            .map(|&(c, a)| c * self.e * self.p.pow(a))
            .collect()
    }
}

pub fn ep_p_adic_expansion(n: u64, p: u64, e: u64) -> Result<OrderWeightedExpansion> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not a prime")));
    }
    if e == 0 || e >= p {
        return Err(Error::invalid(format!(
            "order weight must satisfy 1 <= e < p, got e={e} p={p}"
        )));
    }
    if e > n {
        return Err(Error::invalid(format!("order weight {e} exceeds n={n}")));
    }
    let s = n % e;
    let mut w = n / e;
    debug_assert!(w >= 1);
    let mut terms = vec![(w % p, 0u32)];
    w /= p;
    let mut a = 1u32;
    while w > 0 {
        let c = w % p;
        if c > 0 {
            terms.push((c, a));
        }
        w /= p;
        a += 1;
    }
    Ok(OrderWeightedExpansion { n, p, e, s, terms })
}

/// A primed refinement of a chop: the same cut taken at `residue + modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimedChop {
    /// `r' = residue + modulus`.
    pub residue: u64,
    /// Index of the first expansion term exceeding `r'`.
    pub cut_index: usize,
    /// `b'`: residue plus all terms below the cut.
    pub low: u64,
    /// `T' = n - b'`, the terms from the cut upward.
    pub high: u64,
}

/// Result of cutting an expansion of `n` at the residue `r = n mod modulus`:
/// `n = low + high` with `high > r`. The primed refinement is present
/// exactly when `n >= 2(r + modulus)` makes it well-defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoppedExpansion {
    pub n: u64,
    /// `q` for the plain chop, `e_q` for the order-weighted chop.
    pub modulus: u64,
    /// `r = n mod modulus`.
    pub residue: u64,
    pub cut_index: usize,
    /// `b`: residue-of-p part plus all terms below the cut.
    pub low: u64,
    /// `T = n - b`; always exceeds `residue`, and in the order-weighted
    /// variant is divisible by the order weight.
    pub high: u64,
    pub primed: Option<PrimedChop>,
}

impl ChoppedExpansion {
    /// Quotient `m = (n - r) / modulus`.
    pub fn quotient(&self) -> u64 {
        (self.n - self.residue) / self.modulus
    }
}

fn cut(values: &[u64], s: u64, threshold: u64) -> Option<(usize, u64, u64)> {
    let idx = values.iter().position(|&v| threshold < v)?;
    let low = s + values[..idx].iter().sum::<u64>();
    let high = values[idx..].iter().sum::<u64>();
    Some((idx, low, high))
}

fn chop_values(n: u64, modulus: u64, s: u64, values: &[u64]) -> Result<ChoppedExpansion> {
    let residue = n % modulus;
    let (cut_index, low, high) = cut(values, s, residue)
        .ok_or_else(|| Error::verification(format!("no cut point for n={n} mod {modulus}")))?;
    debug_assert_eq!(low + high, n);
    debug_assert!(high > residue);
    let r_primed = residue + modulus;
    let primed = if n >= 2 * r_primed {
        let (ci, lo, hi) = cut(values, s, r_primed).ok_or_else(|| {
            Error::verification(format!("no primed cut point for n={n} mod {modulus}"))
        })?;
        Some(PrimedChop {
            residue: r_primed,
            cut_index: ci,
            low: lo,
            high: hi,
        })
    } else {
        None
    };
    Ok(ChoppedExpansion {
        n,
        modulus,
        residue,
        cut_index,
        low,
        high,
        primed,
    })
}

/// Chops the base-p expansion of `n` at the residue of `n` modulo the second
/// prime `q`. Requires distinct primes `p, q <= n`.
pub fn chop(n: u64, p: u64, q: u64) -> Result<ChoppedExpansion> {
    if !is_prime(q) {
        return Err(Error::invalid(format!("{q} is not a prime")));
    }
    if p == q {
        return Err(Error::invalid("the two primes must be distinct"));
    }
    if p > n || q > n {
        return Err(Error::invalid(format!("primes must not exceed n={n}")));
    }
    let exp = p_adic_expansion(n, p)?;
    chop_values(n, q, exp.s, &exp.term_values())
}

/// Chops the order-weighted expansion of `n` (weight `e_p < p`) at the
/// residue of `n` modulo `e_q`. The high part is divisible by `e_p`.
pub fn chop_ep(n: u64, p: u64, e_p: u64, e_q: u64) -> Result<ChoppedExpansion> {
    if e_q == 0 || e_q > n {
        return Err(Error::invalid(format!(
            "second order weight must satisfy 1 <= e_q <= n, got {e_q}"
        )));
    }
    let exp = ep_p_adic_expansion(n, p, e_p)?;
    chop_values(n, e_q, exp.s, &exp.term_values())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::p_part;

    #[test]
    fn p_adic_examples() {
        let e = p_adic_expansion(11, 7).unwrap();
        assert_eq!((e.s, e.terms.clone()), (4, vec![(1, 1)]));
        let e = p_adic_expansion(23, 3).unwrap();
        assert_eq!((e.s, e.terms.clone()), (2, vec![(1, 1), (2, 2)]));
        let e = p_adic_expansion(7, 7).unwrap();
        assert_eq!((e.s, e.terms.clone()), (0, vec![(1, 1)]));
        assert!(p_adic_expansion(0, 5).is_err());
        assert!(p_adic_expansion(10, 4).is_err());
    }

    #[test]
    fn p_adic_reconstructs() {
        for n in 1u64..=500 {
            for p in [2u64, 3, 5, 7, 13] {
                let e = p_adic_expansion(n, p).unwrap();
                assert!(e.s < p);
                let total: u64 = e.s + e.term_values().iter().sum::<u64>();
                assert_eq!(total, n);
                assert!(e.terms.iter().all(|&(c, a)| c >= 1 && c < p && a >= 1));
                assert!(e.terms.windows(2).all(|w| w[0].1 < w[1].1));
            }
        }
    }

    #[test]
    fn order_weighted_examples() {
        let e = ep_p_adic_expansion(10, 7, 3).unwrap();
        assert_eq!((e.s, e.terms.clone()), (1, vec![(3, 0)]));
        let e = ep_p_adic_expansion(3, 2, 1).unwrap();
        assert_eq!((e.s, e.terms.clone()), (0, vec![(1, 0), (1, 1)]));
        let e = ep_p_adic_expansion(4, 7, 1).unwrap();
        assert_eq!((e.s, e.terms.clone()), (0, vec![(4, 0)]));
        assert!(ep_p_adic_expansion(3, 7, 4).is_err());
        assert!(ep_p_adic_expansion(3, 7, 7).is_err());
    }

    #[test]
    fn order_weighted_reconstructs() {
        for n in 1u64..=300 {
            for p in [2u64, 3, 7, 31] {
                for e in 1..p.min(n + 1) {
                    let exp = ep_p_adic_expansion(n, p, e).unwrap();
                    assert!(exp.s < e);
                    assert_eq!(exp.s + exp.term_values().iter().sum::<u64>(), n);
                    assert_eq!(exp.terms[0].1, 0);
                    assert!(exp.terms[1..].iter().all(|&(c, _)| c >= 1));
                }
            }
        }
    }

    #[test]
    fn chop_examples() {
        let c = chop(11, 7, 2).unwrap();
        assert_eq!((c.residue, c.cut_index, c.low, c.high), (1, 0, 4, 7));
        // b = 4 exceeds 2r = 2 here: the low-part bound needs r >= s.
        assert!(c.low > 2 * c.residue);

        let c = chop(10, 3, 7).unwrap();
        assert_eq!((c.residue, c.low, c.high), (3, 1, 9));

        let c = chop(23, 3, 7).unwrap();
        assert_eq!((c.residue, c.low, c.high), (2, 2, 21));
        assert_eq!(c.low, c.residue);

        assert!(chop(10, 11, 2).is_err());
        assert!(chop(10, 3, 3).is_err());
    }

    #[test]
    fn chop_ep_examples() {
        let c = chop_ep(3, 2, 1, 2).unwrap();
        assert_eq!((c.residue, c.cut_index, c.low, c.high), (1, 1, 1, 2));
        let c = chop_ep(10, 7, 3, 2).unwrap();
        assert_eq!((c.residue, c.cut_index, c.low, c.high), (0, 0, 1, 9));
        let c = chop_ep(5, 31, 5, 3).unwrap();
        assert_eq!((c.residue, c.cut_index, c.low, c.high), (2, 0, 0, 5));
        assert!(chop_ep(5, 31, 5, 6).is_err());
    }

    #[test]
    fn chop_shift_preserves_p_parts() {
        // (high + k)_p = k_p for k <= low, (high - k)_p = k_p for k <= r.
        for n in 3u64..=200 {
            for p in [2u64, 3, 5, 7, 11, 13] {
                if p > n {
                    continue;
                }
                for q in [2u64, 3, 5, 7, 11, 13, 17, 19] {
                    if q == p || q > n {
                        continue;
                    }
                    let c = chop(n, p, q).unwrap();
                    for k in 1..=c.low {
                        assert_eq!(
                            p_part(c.high + k, p).unwrap(),
                            p_part(k, p).unwrap(),
                            "n={n} p={p} q={q} k={k}"
                        );
                    }
                    for k in 1..=c.residue {
                        assert_eq!(p_part(c.high - k, p).unwrap(), p_part(k, p).unwrap());
                    }
                    let s = n % p;
                    if c.residue >= s && c.residue != 0 {
                        assert!(c.low < 2 * c.residue);
                    }
                }
            }
        }
    }

    #[test]
    fn primed_chop_properties() {
        for n in 3u64..=200 {
            for p in [2u64, 3, 5, 7, 11] {
                if p > n {
                    continue;
                }
                for q in [2u64, 3, 5, 7, 11, 13] {
                    if q == p || q > n {
                        continue;
                    }
                    let c = chop(n, p, q).unwrap();
                    let s = n % p;
                    let Some(pr) = c.primed else {
                        assert!(n < 2 * (c.residue + q));
                        continue;
                    };
                    assert_eq!(pr.residue, c.residue + q);
                    assert_eq!(pr.low + pr.high, n);
                    assert!(pr.high > pr.residue);
                    for k in 1..=pr.low {
                        assert_eq!(p_part(pr.high + k, p).unwrap(), p_part(k, p).unwrap());
                    }
                    for k in 1..=pr.residue {
                        assert_eq!(p_part(pr.high - k, p).unwrap(), p_part(k, p).unwrap());
                    }
                    if c.residue >= s {
                        assert!(pr.low < 2 * pr.residue);
                        if c.low >= q {
                            assert!(pr.cut_index == c.cut_index || pr.cut_index == c.cut_index + 1);
                            assert_ne!(pr.low, pr.residue);
                            if pr.cut_index == c.cut_index {
                                assert_eq!(pr.low, c.low);
                                assert!(pr.low < pr.residue);
                                assert!(q <= pr.low);
                                assert_ne!(pr.high % q, 0, "high part must avoid q");
                            } else {
                                assert!(pr.residue < pr.low);
                                assert!(pr.low < q + 3 * c.residue);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn order_weighted_chop_preserves_p_parts_on_weight_multiples() {
        for n in 2u64..=200 {
            for p in [2u64, 3, 5, 7, 13, 31, 37] {
                for e_p in 1..p.min(n + 1) {
                    if (p - 1) % e_p != 0 {
                        continue; // orders divide p - 1
                    }
                    for e_q in 1..=12u64.min(n) {
                        let c = chop_ep(n, p, e_p, e_q).unwrap();
                        assert_eq!(c.high % e_p, 0, "high part divisible by the weight");
                        for k in (e_p..=c.low).step_by(e_p as usize) {
                            assert_eq!(p_part(c.high + k, p).unwrap(), p_part(k, p).unwrap());
                        }
                        for k in (e_p..=c.residue).step_by(e_p as usize) {
                            assert_eq!(p_part(c.high - k, p).unwrap(), p_part(k, p).unwrap());
                        }
                        let s = n % e_p;
                        if c.residue >= s && c.residue != 0 {
                            assert!(c.low < 2 * c.residue);
                            if c.low != c.residue {
                                assert_ne!(c.high % e_q, 0);
                            }
                        }
                        if let Some(pr) = c.primed {
                            for k in (e_p..=pr.low).step_by(e_p as usize) {
                                assert_eq!(p_part(pr.high + k, p).unwrap(), p_part(k, p).unwrap());
                            }
                            for k in (e_p..=pr.residue).step_by(e_p as usize) {
                                assert_eq!(p_part(pr.high - k, p).unwrap(), p_part(k, p).unwrap());
                            }
                            if c.residue >= s {
                                assert!(pr.low < 2 * pr.residue);
                                if c.low >= e_q {
                                    assert_ne!(pr.low, pr.residue);
                                    if pr.cut_index == c.cut_index {
                                        assert_eq!(pr.low, c.low);
                                        assert_ne!(pr.high % e_q, 0);
                                    } else {
                                        assert!(
                                            pr.residue < pr.low && pr.low < e_q + 3 * c.residue
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plain_and_weighted_chops_differ_in_general() {
        // Even with weight 1 the two constructions cut at different residues
        // (modulo q versus modulo e_q), so the splits genuinely differ.
        let plain = chop(11, 2, 3).unwrap();
        let weighted = chop_ep(11, 2, 1, 2).unwrap();
        assert_ne!((plain.low, plain.high), (weighted.low, weighted.high));
    }
}
