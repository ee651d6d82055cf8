//! Heavier enumerated invariants: the closed degree products over full
//! parameter ranges, the coprimality table for hooks and near-hooks, the
//! odd-degree count at powers of two, and the sampled principality clauses
//! for the special symbol families.

use num_bigint::BigUint;
use pqblocks::numtheory::{
    big_valuation, classify_linear_unitary, is_prime, ord_mod, primes_dividing_psi_product,
    PrimeKind,
};
use pqblocks::partitions::{AlmostHookSpec, Partition};
use pqblocks::symbols::{is_principal_symbol, SpecialFamily, SpecialSymbolSpec};

#[test]
fn almost_hook_products_match_hook_formula_up_to_thirty() {
    for n in 2u32..=30 {
        for k in 0..n {
            for ell in (k + 1)..n.saturating_sub(k) {
                let Ok(spec) = AlmostHookSpec::new(n, k, ell) else {
                    continue;
                };
                assert_eq!(
                    spec.degree(),
                    spec.partition().degree(),
                    "n={n} k={k} l={ell}"
                );
            }
        }
    }
}

/// Legendre's formula for the exponent of `p` in `n!`.
fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = p;
    loop {
        total += n / q;
        match q.checked_mul(p) {
            Some(next) if next <= n => q = next,
            _ => return total,
        }
    }
}

/// Exponent of `p` in the degree, via hooks and Legendre only.
fn degree_valuation(lam: &Partition, p: u64) -> u64 {
    let mut v = factorial_valuation(lam.size() as u64, p) as i64;
    for h in lam.hook_lengths() {
        let mut h = h as u64;
        while h.is_multiple_of(p) {
            h /= p;
            v -= 1;
        }
    }
    assert!(v >= 0);
    v as u64
}

fn hook_partition(n: u32, ell: u32) -> Partition {
    Partition::from_unsorted(std::iter::once(ell).chain(std::iter::repeat_n(1, (n - ell) as usize)))
}

fn near_hook_partition(n: u32, ell: u32) -> Partition {
    Partition::from_unsorted(
        [ell, 2]
            .into_iter()
            .chain(std::iter::repeat_n(1, (n - ell - 2) as usize)),
    )
}

#[test]
fn hook_and_near_hook_coprimality_table() {
    // For n = c * p^a + eps with eps in {0, 1} and c coprime to p, the
    // degree of the length-l hook (1^{n-l}, l) and of the near hook
    // (1^{n-l-2}, 2, l) is coprime to p (or has 2-part exactly 2) under the
    // tabulated conditions on l.
    for n in 2u32..=128 {
        for p in (2u64..=n as u64).filter(|&p| is_prime(p)) {
            for eps in 0u64..=1 {
                if n as u64 <= eps || !(n as u64 - eps).is_multiple_of(p) {
                    continue;
                }
                let body = n as u64 - eps; // c * p^a
                let mut a = 0u32;
                let mut c = body;
                while c.is_multiple_of(p) {
                    c /= p;
                    a += 1;
                }
                let c1 = c % p;
                let pa = p.pow(a);

                for ell in 1..n {
                    let lam = hook_partition(n, ell);
                    let v = degree_valuation(&lam, p);
                    if eps == 0 && (ell as u64) <= c1 * pa {
                        assert_eq!(v, 0, "hook n={n} p={p} l={ell}");
                    }
                    if eps == 1 && c == c1 {
                        let coprime = v == 0;
                        let expected = ell == 1
                            || (ell >= 2 && {
                                let mut m = ell as u64 - 1;
                                let mut part = 1u64;
                                while m.is_multiple_of(p) {
                                    m /= p;
                                    part *= p;
                                }
                                part == pa
                            });
                        assert_eq!(coprime, expected, "hook n={n} p={p} l={ell}");
                    }
                    if p == 2 && eps == 1 && c == 1 && a >= 2 {
                        // n = 2^a + 1: 2-part of the degree is 2 exactly for
                        // the middle hook.
                        assert_eq!(v == 1, ell as u64 == pa / 2 + 1, "hook n={n} l={ell}");
                    }
                }

                for ell in 2..n.saturating_sub(1) {
                    let lam = near_hook_partition(n, ell);
                    let v = degree_valuation(&lam, p);
                    let ell_u = ell as u64;
                    if eps == 0
                        && ell_u <= c1 * pa
                        && ell_u.is_multiple_of(pa)
                        && !(ell_u / pa).is_multiple_of(p)
                    {
                        assert_eq!(v, 0, "near hook n={n} p={p} l={ell}");
                    }
                    if eps == 1 && ell_u < pa {
                        assert_eq!(v, 0, "near hook n={n} p={p} l={ell}");
                    }
                    if p == 2 && eps == 0 && c == 1 && a >= 2 {
                        // n = 2^a: 2-part 2 exactly at the middle near hook.
                        assert_eq!(v == 1, ell_u == pa / 2, "near hook n={n} l={ell}");
                    }
                }
            }
        }
    }
}

#[test]
fn coprimality_table_matches_exact_degrees_on_small_range() {
    // Tie the valuation shortcut above to the exact big-integer degree.
    for n in 2u32..=40 {
        for p in [2u64, 3, 5, 7] {
            for ell in 1..n {
                let lam = hook_partition(n, ell);
                let d = num_bigint::BigInt::from(lam.degree());
                assert_eq!(degree_valuation(&lam, p), big_valuation(&d, p));
            }
            for ell in 2..n.saturating_sub(1) {
                let lam = near_hook_partition(n, ell);
                let d = num_bigint::BigInt::from(lam.degree());
                assert_eq!(degree_valuation(&lam, p), big_valuation(&d, p));
            }
        }
    }
}

#[test]
fn odd_degree_partitions_of_sixty_four() {
    // Exactly 2^k partitions of n = 2^k have odd degree; k = 6 exceeds the
    // enumeration guard, so stream the partitions without materializing.
    let n = 64u32;
    let mut odd = 0u64;
    let mut stack: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, odd: &mut u64) {
        if remaining == 0 {
            let lam = Partition::new(stack.clone()).unwrap();
            if degree_valuation(&lam, 2) == 0 {
                *odd += 1;
            }
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, odd);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut odd);
    assert_eq!(odd, 64);
}

#[test]
fn order_bounded_prime_enumeration() {
    // Every reported prime has order at most n, and divides the product.
    for x in [2i64, 3, -3, 4, 9, -8] {
        for n in 1u32..=10 {
            let primes = primes_dividing_psi_product(x, n).unwrap();
            for &p in &primes {
                assert!(ord_mod(x, p).unwrap() <= n as u64, "x={x} n={n} p={p}");
            }
            // And no qualifying prime below 40 is missed.
            for p in (2u64..40).filter(|&p| is_prime(p)) {
                if x.rem_euclid(p as i64) == 0 {
                    continue;
                }
                if ord_mod(x, p).unwrap() <= n as u64 {
                    assert!(primes.contains(&p), "x={x} n={n} missing {p}");
                }
            }
        }
    }
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Sampled checks of the block-membership clauses for the special families:
/// with `e = ord_p(field^2)` dividing `K = n - k` or `L = n - l`,
///   (i)   k = l makes the split family principal;
///   (ii)  linear p: e | L gives F1, e | K gives F2;
///   (iii) unitary p: K/e odd gives F1, L/e odd gives F2;
///   (iv)  linear p gives F3;
///   (v)   unitary p: an even multiple among K, L gives F3, an odd one F4.
#[test]
fn sampled_special_family_principality() {
    let fields = [2u64, 3, 4, 5, 7, 8, 9];
    let odd_primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let mut rng = Rng(0x1234_5678_9abc_def1);
    let mut counts = [0u32; 5];
    let target = 500;
    let mut guard = 0u64;
    while counts.iter().any(|&c| c < target) {
        guard += 1;
        assert!(
            guard < 5_000_000,
            "sampler failed to fill clauses: {counts:?}"
        );
        let n = 2 + rng.below(11) as u32;
        let k = rng.below(n as u64) as u32;
        let ell = rng.below(n as u64) as u32;
        if k > ell || k + ell >= n {
            continue;
        }
        let field = fields[rng.below(fields.len() as u64) as usize];
        let p = odd_primes[rng.below(odd_primes.len() as u64) as usize];
        if field.is_multiple_of(p) {
            continue;
        }
        let e = ord_mod((field * field) as i64, p).unwrap();
        let kind = classify_linear_unitary(field as i64, p).unwrap();
        let (big_k, big_l) = ((n - k) as u64, (n - ell) as u64);
        if big_k % e != 0 && big_l % e != 0 {
            continue; // standing assumption of the clauses
        }
        let e32 = e as u32;
        let principal = |family: SpecialFamily| {
            let spec = SpecialSymbolSpec::new(family, n, k, ell).unwrap();
            is_principal_symbol(&spec.symbol(), e32, kind, n)
        };

        if k == ell && counts[0] < target {
            counts[0] += 1;
            assert!(
                principal(SpecialFamily::F1),
                "(i) n={n} k={k} p={p} Q={field}"
            );
            continue;
        }
        if k == ell {
            continue;
        }
        match kind {
            PrimeKind::Linear => {
                if counts[1] < target {
                    counts[1] += 1;
                    if big_l % e == 0 {
                        assert!(
                            principal(SpecialFamily::F1),
                            "(ii) F1 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                    if big_k % e == 0 {
                        assert!(
                            principal(SpecialFamily::F2),
                            "(ii) F2 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                }
                if counts[3] < target {
                    counts[3] += 1;
                    assert!(
                        principal(SpecialFamily::F3),
                        "(iv) n={n} k={k} l={ell} p={p} Q={field}"
                    );
                }
            }
            PrimeKind::Unitary => {
                if counts[2] < target {
                    counts[2] += 1;
                    if big_k % e == 0 && (big_k / e) % 2 == 1 {
                        assert!(
                            principal(SpecialFamily::F1),
                            "(iii) F1 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                    if big_l % e == 0 && (big_l / e) % 2 == 1 {
                        assert!(
                            principal(SpecialFamily::F2),
                            "(iii) F2 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                }
                if counts[4] < target {
                    counts[4] += 1;
                    let even_multiple = (big_k % e == 0 && (big_k / e).is_multiple_of(2))
                        || (big_l % e == 0 && (big_l / e).is_multiple_of(2));
                    let odd_multiple = (big_k % e == 0 && (big_k / e) % 2 == 1)
                        || (big_l % e == 0 && (big_l / e) % 2 == 1);
                    if even_multiple {
                        assert!(
                            principal(SpecialFamily::F3),
                            "(v) F3 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                    if odd_multiple {
                        assert!(
                            principal(SpecialFamily::F4),
                            "(v) F4 n={n} k={k} l={ell} p={p} Q={field}"
                        );
                    }
                }
            }
            PrimeKind::Even => unreachable!(),
        }
    }
}

#[test]
fn type_a_valuations_match_direct_degree_parts() {
    // Closed-form valuation of the field-coprime degree part against the
    // exact big-integer quotient, for every label and both series signs.
    use pqblocks::numtheory::ValuationContext;
    use pqblocks::oracle::{enumerate_partitions, field_coprime_degree_part_type_a};
    use pqblocks::partitions::type_a_degree_valuation;
    for field in [2i64, 3, 4, 5, 7, 8, 9] {
        for base in [field, -field] {
            for n in 1u32..=10 {
                for lam in enumerate_partitions(n).unwrap() {
                    let direct = field_coprime_degree_part_type_a(&lam, base).unwrap();
                    for p in [2u64, 3, 5, 7, 11, 13, 17, 31, 37] {
                        if base.rem_euclid(p as i64) == 0 {
                            continue;
                        }
                        let ctx = ValuationContext::new(base, p).unwrap();
                        assert_eq!(
                            type_a_degree_valuation(&lam, &ctx),
                            big_valuation(&direct, p),
                            "{lam} base={base} p={p}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn symbol_valuations_match_direct_degree_parts() {
    use pqblocks::oracle::{enumerate_symbols_odd_defect, field_coprime_degree_part};
    use pqblocks::symbols::symbol_degree_valuation;
    for n in 1u32..=5 {
        for sym in enumerate_symbols_odd_defect(n).unwrap() {
            for field in [2u64, 3, 4, 5, 9] {
                let direct = field_coprime_degree_part(&sym, field).unwrap();
                for p in [2u64, 3, 5, 7, 11, 13] {
                    if field % p == 0 {
                        continue;
                    }
                    let closed = symbol_degree_valuation(&sym, field, p).unwrap();
                    assert!(closed >= 0);
                    assert_eq!(
                        closed as u64,
                        big_valuation(&direct, p),
                        "{sym} Q={field} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn degree_sum_identity_for_moderate_sizes() {
    // Column orthogonality once more, through the oracle's tableau counts.
    for n in [10u32, 12, 14] {
        let mut sum = BigUint::from(0u32);
        for lam in pqblocks::oracle::enumerate_partitions(n).unwrap() {
            let d = pqblocks::oracle::syt_degree(&lam);
            sum += &d * &d;
        }
        let mut fact = BigUint::from(1u32);
        for k in 2..=n {
            fact *= BigUint::from(k);
        }
        assert_eq!(sum, fact);
    }
}
