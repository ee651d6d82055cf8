//! Brute-force ground truth. Everything here recomputes block membership and
//! degrees along routes independent of the constructors' closed forms:
//! degrees of partition labels come from the standard-tableau branching rule
//! instead of the hook formula, cores come from literal rim-hook surgery on
//! Young diagrams instead of the abacus, and Lie-type degree conditions come
//! from exact big-integer products instead of closed-form valuations.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{
    classify_linear_unitary, is_prime, ord_mod, prime_power, psi, PrimeKind, Sign,
};
use crate::partitions::Partition;
use crate::symbols::Symbol;
use crate::witness_lie::{witness_type_a, witness_type_bc, TypeAContext, TypeBCContext};
use crate::witness_sn::{witness_alternating, witness_symmetric, Constituent};

/// Guard for partition enumeration.
pub const MAX_ENUM_N: u32 = 60;
/// Guard for the exhaustive symmetric/alternating intersections.
pub const MAX_INTERSECTION_N: u32 = 30;
/// Guard for odd-defect symbol enumeration.
pub const MAX_SYMBOL_ENUM_N: u32 = 12;
/// Guards for the Lie-type intersections.
pub const MAX_TYPE_A_N: u32 = 10;
pub const MAX_TYPE_BC_N: u32 = 8;
pub const MAX_FIELD: u64 = 9;

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n > MAX_ENUM_N {
        return Err(Error::bound(format!(
            "partition enumeration capped at n = {MAX_ENUM_N}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("descending by construction"));
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, &mut prefix, &mut out);
    Ok(out)
}

/// Character degree as the number of standard Young tableaux, computed by
/// the branching rule `d(shape) = sum of d(shape minus a corner)`. This is
/// the oracle-side route, independent of the hook formula.
pub fn syt_degree(lam: &Partition) -> BigUint {
    let mut memo: HashMap<Vec<u32>, BigUint> = HashMap::new();
    syt_memo(lam.parts(), &mut memo)
}

fn syt_memo(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if parts.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..parts.len() {
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            continue; // not a corner
        }
        let mut smaller = parts.to_vec();
        smaller[i] -= 1;
        if smaller[i] == 0 {
            smaller.remove(i);
        }
        total += syt_memo(&smaller, memo);
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

/// All partitions obtained from `lam` by removing one rim hook of length
/// `h`, by literal surgery on the diagram rows.
pub fn rim_hook_removals(lam: &Partition, h: u32) -> Vec<Partition> {
    let parts = lam.parts();
    let conj = lam.conjugate();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        for j in 0..parts[i] {
            let arm = parts[i] - j - 1;
            let leg = conj.parts()[j as usize] - i as u32 - 1;
            if arm + leg + 1 != h {
                continue;
            }
            // Remove the rim hook anchored at cell (i, j): rows i..last of
            // column j shift up with one box less, the last row is cut at j.
            let last = (conj.parts()[j as usize] - 1) as usize;
            let mut next = parts.to_vec();
            for t in i..last {
                next[t] = parts[t + 1] - 1;
            }
            next[last] = j;
            while next.last() == Some(&0) {
                next.pop();
            }
            out.push(Partition::new(next).expect("rim removal keeps rows ordered"));
        }
    }
    out
}

/// The e-core by repeated removal of rim hooks of length exactly `e`.
pub fn rim_e_core(lam: &Partition, e: u32) -> Partition {
    let mut current = lam.clone();
    loop {
        let removals = rim_hook_removals(&current, e);
        match removals.into_iter().next() {
            Some(next) => current = next,
            None => return current,
        }
    }
}

fn oracle_core_matches(lam: &Partition, p: u64, target: &Partition) -> bool {
    let n = lam.size();
    if p > n as u64 {
        return lam == target;
    }
    rim_e_core(lam, p as u32) == rim_e_core(target, p as u32)
}

/// All symbols of odd defect and rank `n`, one representative per class:
/// for each odd defect `d` with `(d^2 - 1)/4 <= n`, the classes correspond
/// to pairs of partitions of total size `n - (d^2 - 1)/4` through beta-sets.
pub fn enumerate_symbols_odd_defect(n: u32) -> Result<Vec<Symbol>> {
    if n > MAX_SYMBOL_ENUM_N {
        return Err(Error::bound(format!(
            "symbol enumeration capped at n = {MAX_SYMBOL_ENUM_N}"
        )));
    }
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut d = 1u32;
    while (d * d - 1) / 4 <= n {
        let m = n - (d * d - 1) / 4;
        for top_size in 0..=m {
            for alpha in enumerate_partitions(top_size)? {
                for beta in enumerate_partitions(m - top_size)? {
                    let pad = beta.len().max(alpha.len().saturating_sub(d as usize));
                    let top = alpha.beta_set(pad + d as usize);
                    let bottom = beta.beta_set(pad);
                    let top: Vec<u32> = top.into_iter().rev().collect();
                    let bottom: Vec<u32> = bottom.into_iter().rev().collect();
                    let sym = Symbol::new(top, bottom)?;
                    assert_eq!(sym.rank(), n, "constructed symbol must have rank n");
                    assert_eq!(sym.defect(), d);
                    assert!(seen.insert(sym.clone()), "duplicate symbol class");
                    out.push(sym);
                }
            }
        }
        d += 2;
    }
    Ok(out)
}

/// Count of bipartitions of `m` (pairs of partitions with total size `m`).
pub fn bipartition_count(m: u32) -> Result<u64> {
    let mut total = 0u64;
    for j in 0..=m {
        total += enumerate_partitions(j)?.len() as u64 * enumerate_partitions(m - j)?.len() as u64;
    }
    Ok(total)
}

fn strip_prime(x: &mut BigInt, p: u64) {
    let p = BigInt::from(p);
    loop {
        let (q, r) = num_integer::Integer::div_rem(&*x, &p);
        if r.is_zero() && !x.is_zero() {
            *x = q;
        } else {
            return;
        }
    }
}

/// Exact part of a linear/unitary-series degree coprime to the defining
/// characteristic: `|prod_{k<=n} (x^k - 1) / prod_hooks (x^h - 1)|` with all
/// powers of the defining prime cancelled. Direct big-integer route.
pub fn field_coprime_degree_part_type_a(lam: &Partition, base: i64) -> Result<BigInt> {
    let (p0, _) = prime_power(base.unsigned_abs())
        .ok_or_else(|| Error::invalid("base must be a (signed) prime power"))?;
    let n = lam.size();
    let mut num = BigInt::one();
    for k in 1..=n {
        num *= psi(base, k, Sign::Minus);
    }
    let mut den = BigInt::one();
    for h in lam.hook_lengths() {
        den *= psi(base, h, Sign::Minus);
    }
    let ratio = BigRational::new(num, den);
    let mut num = ratio.numer().abs();
    let mut den = ratio.denom().abs();
    strip_prime(&mut num, p0);
    strip_prime(&mut den, p0);
    if !den.is_one() {
        return Err(Error::verification(
            "degree ratio must be integral away from the defining prime",
        ));
    }
    Ok(num)
}

/// Exact part of a type B/C symbol degree coprime to the field size:
/// `prod_{i<=rank} (Q^{2i} - 1)` over `2^b * prod (Q^h - 1) * prod (Q^c + 1)`
/// with all powers of the defining prime cancelled.
pub fn field_coprime_degree_part(sym: &Symbol, q_field: u64) -> Result<BigInt> {
    let (p0, _) =
        prime_power(q_field).ok_or_else(|| Error::invalid("field size must be a prime power"))?;
    let base = i64::try_from(q_field).map_err(|_| Error::invalid("field size too large"))?;
    let mut num = BigInt::one();
    for i in 1..=sym.rank() {
        num *= psi(base, 2 * i, Sign::Minus);
    }
    let mut den = BigInt::from(2u32).pow(sym.two_power_exponent());
    for h in sym.hook_multiset() {
        den *= psi(base, h, Sign::Minus);
    }
    for c in sym.cohook_multiset() {
        den *= psi(base, c, Sign::Plus);
    }
    let ratio = BigRational::new(num, den);
    let mut num = ratio.numer().abs();
    let mut den = ratio.denom().abs();
    strip_prime(&mut num, p0);
    strip_prime(&mut den, p0);
    if !den.is_one() {
        return Err(Error::verification(
            "symbol degree must be integral away from the defining prime",
        ));
    }
    Ok(num)
}

/// Oracle-side symbol e-core: iterative single-hook removal, scanning the
/// bottom row first (a different removal order than the library routine).
fn oracle_symbol_core(sym: &Symbol, e: u32) -> Symbol {
    let mut top = sym.top().to_vec();
    let mut bottom = sym.bottom().to_vec();
    loop {
        let find = |row: &[u32]| {
            row.iter()
                .copied()
                .find(|&x| x >= e && row.binary_search(&(x - e)).is_err())
        };
        let target = if let Some(x) = find(&bottom) {
            (&mut bottom, x)
        } else if let Some(x) = find(&top) {
            (&mut top, x)
        } else {
            return Symbol::new(top, bottom).expect("rows stay increasing");
        };
        let (row, x) = target;
        let i = row.binary_search(&x).unwrap();
        row.remove(i);
        let pos = row.binary_search(&(x - e)).unwrap_err();
        row.insert(pos, x - e);
    }
}

/// Oracle-side symbol e-cocore: smallest candidate first, bottom row first.
fn oracle_symbol_cocore(sym: &Symbol, e: u32) -> Symbol {
    let mut top = sym.top().to_vec();
    let mut bottom = sym.bottom().to_vec();
    loop {
        let find = |row: &[u32], other: &[u32]| {
            row.iter()
                .copied()
                .find(|&x| x >= e && other.binary_search(&(x - e)).is_err())
        };
        let (row, other, x) = if let Some(x) = find(&bottom, &top) {
            (&mut bottom, &mut top, x)
        } else if let Some(x) = find(&top, &bottom) {
            (&mut top, &mut bottom, x)
        } else {
            return Symbol::new(top, bottom).expect("rows stay increasing");
        };
        let i = row.binary_search(&x).unwrap();
        row.remove(i);
        let pos = other.binary_search(&(x - e)).unwrap_err();
        other.insert(pos, x - e);
    }
}

fn oracle_symbol_principal(sym: &Symbol, e: u32, kind: PrimeKind, n: u32) -> bool {
    match kind {
        PrimeKind::Even => true,
        PrimeKind::Linear => {
            oracle_symbol_core(sym, e) == oracle_symbol_core(&Symbol::trivial(n), e)
        }
        PrimeKind::Unitary => {
            oracle_symbol_cocore(sym, e) == oracle_symbol_cocore(&Symbol::trivial(n), e)
        }
    }
}

/// Which group an intersection report describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Symmetric { n: u32 },
    Alternating { n: u32 },
    TypeA { n: u32, field: u64, epsilon: i8 },
    TypeBC { n: u32, field: u64 },
}

impl GroupDescriptor {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            GroupDescriptor::Symmetric { n } => serde_json::json!({"family": "sym", "n": n}),
            GroupDescriptor::Alternating { n } => serde_json::json!({"family": "alt", "n": n}),
            GroupDescriptor::TypeA { n, field, epsilon } => {
                serde_json::json!({"family": if *epsilon == 1 {"A"} else {"2A"}, "n": n, "Q": field, "epsilon": epsilon})
            }
            GroupDescriptor::TypeBC { n, field } => {
                serde_json::json!({"family": "BC", "n": n, "Q": field})
            }
        }
    }
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupDescriptor::Symmetric { n } => write!(f, "sym(n={n})"),
            GroupDescriptor::Alternating { n } => write!(f, "alt(n={n})"),
            GroupDescriptor::TypeA { n, field, epsilon } => {
                let fam = if *epsilon == 1 { "A" } else { "2A" };
                write!(f, "{fam}(n={n},Q={field})")
            }
            GroupDescriptor::TypeBC { n, field } => write!(f, "BC(n={n},Q={field})"),
        }
    }
}

/// A character label inside an intersection report. Alternating-group labels
/// carry the constituent marker and use the larger of the two conjugate
/// partitions as the class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Label {
    Partition(Partition),
    AltConstituent {
        partition: Partition,
        constituent: Constituent,
    },
    Symbol(Symbol),
}

impl Label {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Label::Partition(p) => p.to_json(),
            Label::AltConstituent {
                partition,
                constituent,
            } => serde_json::json!({
                "partition": partition.to_json(),
                "constituent": constituent.as_str(),
            }),
            Label::Symbol(s) => s.to_json(),
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::AltConstituent {
                partition,
                constituent,
            } => write!(f, "{partition}[{}]", constituent.as_str()),
            Label::Symbol(s) => write!(f, "{s}"),
        }
    }
}

/// Exhaustively computed intersection of the two principal-block coprime
/// label sets, together with the constructed witness's membership.
#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub group: GroupDescriptor,
    pub p: u64,
    pub q: u64,
    pub labels: Vec<Label>,
    pub witness: Option<Label>,
    pub witness_contained: bool,
}

impl IntersectionReport {
    pub fn cardinality(&self) -> usize {
        self.labels.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group.to_json(),
            "p": self.p,
            "q": self.q,
            "cardinality": self.cardinality(),
            "labels": self.labels.iter().map(Label::to_json).collect::<Vec<_>>(),
            "witness": self.witness.as_ref().map(Label::to_json),
            "witness_contained": self.witness_contained,
        })
    }

    fn finish(mut self, witness: Option<Label>) -> Self {
        self.witness_contained = witness
            .as_ref()
            .map(|w| self.labels.contains(w))
            .unwrap_or(false);
        self.witness = witness;
        self
    }
}

fn check_pair(p: u64, q: u64) -> Result<()> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::invalid("need two distinct primes"));
    }
    Ok(())
}

fn coprime(deg: &BigUint, p: u64) -> bool {
    !(deg % BigUint::from(p)).is_zero()
}

/// Exact set of partitions of `n` principal for both primes with degree
/// coprime to both, by exhaustive scan.
pub fn intersection_sym(n: u32, p: u64, q: u64) -> Result<IntersectionReport> {
    if n > MAX_INTERSECTION_N {
        return Err(Error::bound(format!(
            "exhaustive intersection capped at n = {MAX_INTERSECTION_N}"
        )));
    }
    check_pair(p, q)?;
    let mut memo = HashMap::new();
    let mut labels = Vec::new();
    for lam in enumerate_partitions(n)? {
        let row_p = Partition::row((n as u64 % p) as u32);
        let row_q = Partition::row((n as u64 % q) as u32);
        if !oracle_core_matches(&lam, p, &row_p) || !oracle_core_matches(&lam, q, &row_q) {
            continue;
        }
        let deg = syt_memo(lam.parts(), &mut memo);
        if coprime(&deg, p) && coprime(&deg, q) {
            labels.push(Label::Partition(lam));
        }
    }
    let witness = witness_symmetric(n, p, q)
        .ok()
        .map(|w| Label::Partition(w.partition));
    let report = IntersectionReport {
        group: GroupDescriptor::Symmetric { n },
        p,
        q,
        labels,
        witness: None,
        witness_contained: false,
    };
    Ok(report.finish(witness))
}

fn oracle_alt_principal(lam: &Partition, conj: &Partition, p: u64) -> bool {
    let n = lam.size();
    let s = (n as u64 % p) as u32;
    let core = if p > n as u64 {
        lam.clone()
    } else {
        rim_e_core(lam, p as u32)
    };
    let fits = core == Partition::row(s) || core == Partition::column(s);
    fits && !(lam == conj && core == *lam)
}

/// Exact set of alternating-group constituents in both principal blocks with
/// coprime degree: one label per non-self-conjugate pair, two (plus/minus)
/// per qualifying self-conjugate partition.
pub fn intersection_alt(n: u32, p: u64, q: u64) -> Result<IntersectionReport> {
    if n > MAX_INTERSECTION_N {
        return Err(Error::bound(format!(
            "exhaustive intersection capped at n = {MAX_INTERSECTION_N}"
        )));
    }
    if n < 2 {
        return Err(Error::invalid("need n >= 2"));
    }
    check_pair(p, q)?;
    let mut memo = HashMap::new();
    let mut labels = Vec::new();
    for lam in enumerate_partitions(n)? {
        let conj = lam.conjugate();
        if lam < conj {
            continue; // one representative per conjugate pair
        }
        if !oracle_alt_principal(&lam, &conj, p) || !oracle_alt_principal(&lam, &conj, q) {
            continue;
        }
        let deg = syt_memo(lam.parts(), &mut memo);
        if lam == conj {
            let (half, rem) = num_integer::Integer::div_rem(&deg, &BigUint::from(2u32));
            assert!(rem.is_zero(), "self-conjugate degrees are even for n >= 2");
            if coprime(&half, p) && coprime(&half, q) {
                labels.push(Label::AltConstituent {
                    partition: lam.clone(),
                    constituent: Constituent::SplitPlus,
                });
                labels.push(Label::AltConstituent {
                    partition: lam,
                    constituent: Constituent::SplitMinus,
                });
            }
        } else if coprime(&deg, p) && coprime(&deg, q) {
            labels.push(Label::AltConstituent {
                partition: lam,
                constituent: Constituent::FullRestriction,
            });
        }
    }
    let witness = witness_alternating(n, p, q).ok().map(|w| {
        let rep = w.partition.clone().max(w.partition.conjugate());
        Label::AltConstituent {
            partition: rep,
            constituent: w.constituent,
        }
    });
    let report = IntersectionReport {
        group: GroupDescriptor::Alternating { n },
        p,
        q,
        labels,
        witness: None,
        witness_contained: false,
    };
    Ok(report.finish(witness))
}

fn check_field(field: u64) -> Result<()> {
    if prime_power(field).is_none() {
        return Err(Error::invalid(format!("{field} is not a prime power")));
    }
    if field > MAX_FIELD {
        return Err(Error::bound(format!(
            "exhaustive Lie-type scans capped at field size {MAX_FIELD}"
        )));
    }
    Ok(())
}

/// Exact set of linear/unitary-series labels of rank `n - 1` in both
/// principal blocks with field-coprime degree part prime to both primes.
pub fn intersection_type_a(
    n: u32,
    field: u64,
    epsilon: i8,
    p: u64,
    q: u64,
) -> Result<IntersectionReport> {
    if n > MAX_TYPE_A_N {
        return Err(Error::bound(format!(
            "exhaustive scan capped at n = {MAX_TYPE_A_N}"
        )));
    }
    check_field(field)?;
    check_pair(p, q)?;
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::invalid("epsilon must be +1 or -1"));
    }
    if field.is_multiple_of(p) || field.is_multiple_of(q) {
        return Err(Error::invalid("primes must be non-defining"));
    }
    let base = epsilon as i64 * field as i64;
    let e_p = ord_mod(base, p)?;
    let e_q = ord_mod(base, q)?;
    let trivial = Partition::row(n);
    let mut labels = Vec::new();
    for lam in enumerate_partitions(n)? {
        let core_ok = |e: u64| {
            let e = e as u32;
            rim_e_core(&lam, e) == rim_e_core(&trivial, e)
        };
        if !core_ok(e_p) || !core_ok(e_q) {
            continue;
        }
        let part = field_coprime_degree_part_type_a(&lam, base)?;
        if !(part.clone() % BigInt::from(p)).is_zero() && !(part % BigInt::from(q)).is_zero() {
            labels.push(Label::Partition(lam));
        }
    }
    let witness = TypeAContext::new(n, field, epsilon, p, q)
        .and_then(|ctx| witness_type_a(&ctx))
        .ok()
        .map(|w| Label::Partition(w.partition));
    let report = IntersectionReport {
        group: GroupDescriptor::TypeA { n, field, epsilon },
        p,
        q,
        labels,
        witness: None,
        witness_contained: false,
    };
    Ok(report.finish(witness))
}

/// Exact set of rank-`n` odd-defect symbols in both principal blocks with
/// field-coprime degree part prime to both primes.
pub fn intersection_type_bc(n: u32, field: u64, p: u64, q: u64) -> Result<IntersectionReport> {
    if n > MAX_TYPE_BC_N {
        return Err(Error::bound(format!(
            "exhaustive scan capped at n = {MAX_TYPE_BC_N}"
        )));
    }
    check_field(field)?;
    check_pair(p, q)?;
    if field.is_multiple_of(p) || field.is_multiple_of(q) {
        return Err(Error::invalid("primes must be non-defining"));
    }
    let x2 = (field * field) as i64;
    let data = |prime: u64| -> Result<(u64, PrimeKind)> {
        let e = ord_mod(x2, prime)?;
        let kind = if prime == 2 {
            PrimeKind::Even
        } else {
            classify_linear_unitary(field as i64, prime)?
        };
        Ok((e, kind))
    };
    let (e_p, kind_p) = data(p)?;
    let (e_q, kind_q) = data(q)?;
    let mut labels = Vec::new();
    for sym in enumerate_symbols_odd_defect(n)? {
        if !oracle_symbol_principal(&sym, e_p as u32, kind_p, n)
            || !oracle_symbol_principal(&sym, e_q as u32, kind_q, n)
        {
            continue;
        }
        let part = field_coprime_degree_part(&sym, field)?;
        if !(part.clone() % BigInt::from(p)).is_zero() && !(part % BigInt::from(q)).is_zero() {
            labels.push(Label::Symbol(sym));
        }
    }
    let witness = TypeBCContext::new(n, field, p, q)
        .and_then(|ctx| witness_type_bc(&ctx))
        .ok()
        .map(|w| Label::Symbol(w.symbol));
    let report = IntersectionReport {
        group: GroupDescriptor::TypeBC { n, field },
        p,
        q,
        labels,
        witness: None,
        witness_contained: false,
    };
    Ok(report.finish(witness))
}

/// All prime pairs `(q, p)` with `q < p <= n` whose symmetric-group
/// intersection is exactly the two linear labels, by exhaustive scan with
/// per-n caching.
pub fn linear_only_pairs(n: u32) -> Result<Vec<(u64, u64)>> {
    if n > MAX_INTERSECTION_N {
        return Err(Error::bound(format!(
            "exhaustive scan capped at n = {MAX_INTERSECTION_N}"
        )));
    }
    let partitions = enumerate_partitions(n)?;
    let primes: Vec<u64> = (2..=n as u64).filter(|&p| is_prime(p)).collect();
    let mut memo = HashMap::new();
    let degrees: Vec<BigUint> = partitions
        .iter()
        .map(|lam| syt_memo(lam.parts(), &mut memo))
        .collect();
    // principal[i][j]: partition i principal at prime j; coprime[i][j]:
    // degree of partition i coprime to prime j.
    let mut principal = vec![vec![false; primes.len()]; partitions.len()];
    let mut coprime_tab = vec![vec![false; primes.len()]; partitions.len()];
    for (i, lam) in partitions.iter().enumerate() {
        for (j, &p) in primes.iter().enumerate() {
            let target = Partition::row((n as u64 % p) as u32);
            principal[i][j] = rim_e_core(lam, p as u32) == target;
            coprime_tab[i][j] = coprime(&degrees[i], p);
        }
    }
    let row = partitions
        .iter()
        .position(|l| *l == Partition::row(n))
        .expect("row present");
    let column = partitions
        .iter()
        .position(|l| *l == Partition::column(n))
        .expect("column present");
    let mut out = Vec::new();
    for (jq, &q) in primes.iter().enumerate() {
        for (jp, &p) in primes.iter().enumerate().skip(jq + 1) {
            let members: Vec<usize> = (0..partitions.len())
                .filter(|&i| {
                    principal[i][jp] && principal[i][jq] && coprime_tab[i][jp] && coprime_tab[i][jq]
                })
                .collect();
            let linear_only =
                members.len() == 2 && members.contains(&row) && members.contains(&column);
            if linear_only {
                out.push((q, p));
            }
        }
    }
    Ok(out)
}
