//! Partition combinatorics: hooks, exact character degrees, e-cores through
//! the beta-set abacus, conjugation, and block-membership tests for both the
//! symmetric group and its index-two subgroup.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numtheory::{psi_valuation, Sign, ValuationContext};

/// A partition stored as its weakly decreasing list of positive parts.
/// Exponential notation ("1^5,2,3") exists only at the I/O boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds from an already weakly decreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Builds from parts in any order; zero parts are dropped. This is the
    /// merging convention used when a parameterized shape specializes so that
    /// two of its parts coincide or vanish.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parses exponential notation: comma-separated `part` or `part^mult`
    /// tokens, e.g. `"1^5,2,3"` for (3,2,1,1,1,1,1). Zero parts and zero
    /// multiplicities are accepted and dropped, matching the convention that
    /// lets parameterized shapes degenerate.
    pub fn parse_exponential(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse(format!("empty token in partition: {text:?}")));
            }
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (token, "1"),
            };
            let part: u32 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {part:?} in {text:?}")))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {mult:?} in {text:?}")))?;
            if part > 0 {
                parts.extend(std::iter::repeat_n(part, mult as usize));
            }
        }
        Ok(Self::from_unsorted(parts))
    }

    /// Renders in exponential notation, parts ascending, exponent omitted
    /// when it is one. The empty partition renders as the empty string.
    pub fn format_exponential(&self) -> String {
        let mut groups: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match groups.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
            .iter()
            .map(|&(v, c)| {
                if c == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{c}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let mut out = Vec::new();
        let mut col = 0u32;
        loop {
            let height = self.parts.iter().take_while(|&&p| p > col).count() as u32;
            if height == 0 {
                break;
            }
            out.push(height);
            col += 1;
        }
        Partition { parts: out }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// First-column hook lengths padded to `length >= len()` entries
    /// (padding prepends the values `length - len() - 1, ..., 1, 0`).
    pub fn beta_set(&self, length: usize) -> Vec<u32> {
        assert!(length >= self.parts.len());
        let l = length as u32;
        (0..length)
            .map(|i| {
                let part = self.parts.get(i).copied().unwrap_or(0);
                part + l - 1 - i as u32
            })
            .collect()
    }

    fn from_beta(mut beta: Vec<u32>) -> Self {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let l = beta.len() as u32;
        let parts = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b + 1 + i as u32 - l)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Multiset of all cell hook lengths, sorted descending. Its cardinality
    /// equals the size of the partition.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j as usize] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Character degree by the hook length formula: `n! / prod(hooks)`,
    /// exact in arbitrary precision.
    pub fn degree(&self) -> BigUint {
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for h in self.hook_lengths() {
            den *= BigUint::from(h);
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        debug_assert!(num_traits::Zero::is_zero(&r));
        q
    }

    /// The e-core: the unique partition left after removing all hooks of
    /// length `e`, computed by compacting the beta-set on `e` abacus runners.
    pub fn e_core(&self, e: u32) -> Self {
        assert!(e >= 1);
        if self.is_empty() {
            return Self::empty();
        }
        let beta = self.beta_set(self.parts.len());
        let mut counts = vec![0u32; e as usize];
        for &b in &beta {
            counts[(b % e) as usize] += 1;
        }
        let mut slid = Vec::with_capacity(beta.len());
        for (residue, &count) in counts.iter().enumerate() {
            for j in 0..count {
                slid.push(residue as u32 + j * e);
            }
        }
        Self::from_beta(slid)
    }

    /// JSON rendering: the decreasing list of parts.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| serde_json::Value::from(p))
                .collect(),
        )
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_exponential())
    }
}

/// Block membership for the symmetric group: a partition labels a character
/// in the principal p-block exactly when its p-core matches the p-core of the
/// one-row partition, which is the single row `(n mod p)`.
pub fn is_p_principal_sym(lam: &Partition, p: u64) -> bool {
    let n = lam.size();
    if p > n as u64 {
        return *lam == Partition::row(n);
    }
    let p = p as u32;
    lam.e_core(p) == Partition::row(n % p)
}

/// Block membership for the alternating group: some constituent of the
/// restricted character lies in the principal p-block exactly when the p-core
/// is `(s)` or `(1^s)` for `s = n mod p`, except that a self-conjugate
/// partition that is its own p-core splits into a pair of defect-zero
/// characters forming their own block.
pub fn is_p_principal_alt(lam: &Partition, p: u64) -> bool {
    let n = lam.size();
    let s = (n as u64 % p) as u32;
    let core = if p > n as u64 {
        lam.clone()
    } else {
        lam.e_core(p as u32)
    };
    let fits = core == Partition::row(s) || core == Partition::column(s);
    if !fits {
        return false;
    }
    let defect_zero_split = lam.is_self_conjugate()
        && core == *lam
        && *lam != Partition::row(n)
        && *lam != Partition::column(n);
    !defect_zero_split
}

/// Shape data `(1^{n-k-l-1}, k+1, l)` with `0 <= k < l < n-k`: one long
/// column, one middle part, one long row. Every non-linear witness this crate
/// constructs is of this shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlmostHookSpec {
    n: u32,
    k: u32,
    ell: u32,
}

impl AlmostHookSpec {
    pub fn new(n: u32, k: u32, ell: u32) -> Result<Self> {
        if !(k < ell && ell < n - k && n >= 2) {
            return Err(Error::invalid(format!(
                "almost hook constraint 0 <= k < l < n-k violated: n={n} k={k} l={ell}"
            )));
        }
        Ok(AlmostHookSpec { n, k, ell })
    }

    pub fn partition(&self) -> Partition {
        let ones = self.n - self.k - self.ell - 1;
        let mut parts = vec![1u32; ones as usize];
        parts.push(self.k + 1);
        parts.push(self.ell);
        Partition::from_unsorted(parts)
    }

    /// Degree of the expanded partition through the two equivalent closed
    /// products (one anchored at `n-k`, one at `n-l`); both are evaluated and
    /// must agree.
    pub fn degree(&self) -> BigUint {
        let (n, k, ell) = (self.n as u64, self.k as u64, self.ell as u64);
        let skip = ell - k;
        let mut den = BigUint::one();
        for i in 1..=k {
            den *= BigUint::from(i);
        }
        for i in (1..=ell).filter(|&i| i != skip) {
            den *= BigUint::from(i);
        }

        let mut num_a = BigUint::one();
        for i in 1..=k {
            num_a *= BigUint::from(n - k + i);
        }
        for i in (1..=ell).filter(|&i| i != skip) {
            num_a *= BigUint::from(n - k - i);
        }

        let mut num_b = BigUint::one();
        for i in (1..=ell).filter(|&i| i != skip) {
            num_b *= BigUint::from(n - ell + i);
        }
        for i in 1..=k {
            num_b *= BigUint::from(n - ell - i);
        }

        let (da, ra) = num_integer::Integer::div_rem(&num_a, &den);
        let (db, rb) = num_integer::Integer::div_rem(&num_b, &den);
        assert!(num_traits::Zero::is_zero(&ra) && num_traits::Zero::is_zero(&rb));
        assert_eq!(da, db, "the two closed degree products must agree");
        da
    }
}

/// p-adic valuation of the part coprime to the defining characteristic of a
/// unipotent character degree in the linear/unitary series: the valuation of
/// `prod_{k<=n} (x^k - 1) / prod_{h in hooks} (x^h - 1)` at the prime of
/// `ctx`, where `x` is the (signed) field size.
pub fn type_a_degree_valuation(lam: &Partition, ctx: &ValuationContext) -> u64 {
    let n = lam.size() as u64;
    let mut v: i64 = 0;
    for k in 1..=n {
        v += psi_valuation(ctx, k, Sign::Minus) as i64;
    }
    for h in lam.hook_lengths() {
        v -= psi_valuation(ctx, h as u64, Sign::Minus) as i64;
    }
    assert!(v >= 0, "degree valuation must be nonnegative");
    v as u64
}
