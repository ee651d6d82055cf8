//! Symbol combinatorics for the unipotent characters of types B and C: two
//! strictly increasing rows of nonnegative integers up to shifting both rows
//! and swapping them. Rank and defect, hook and cohook multisets, e-cores and
//! e-cocores, and exact degree valuations all live here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numtheory::{psi, psi_valuation, PrimeKind, Sign, ValuationContext};

/// A symbol in canonical form: rows strictly increasing, not both rows
/// starting with 0, the longer row on top, equal-length ties broken so the
/// lexicographically smaller row is on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

impl Symbol {
    /// Builds a symbol from two strictly increasing rows, reducing to the
    /// canonical class representative. Idempotent on already canonical input.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(Error::invalid("symbol rows must be strictly increasing"));
        }
        let mut top = top;
        let mut bottom = bottom;
        // Strip common leading zeros: (0 X | 0 Y) is identified with
        // (X-1 | Y-1).
        while top.first() == Some(&0) && bottom.first() == Some(&0) {
            top.remove(0);
            bottom.remove(0);
            for x in &mut top {
                *x -= 1;
            }
            for y in &mut bottom {
                *y -= 1;
            }
        }
        if bottom.len() > top.len() || (bottom.len() == top.len() && bottom < top) {
            std::mem::swap(&mut top, &mut bottom);
        }
        Ok(Symbol { top, bottom })
    }

    /// The symbol `(n | -)` of the trivial character.
    pub fn trivial(n: u32) -> Self {
        Symbol {
            top: vec![n],
            bottom: Vec::new(),
        }
    }

    /// The symbol `(0 1 ... n | 1 ... n)` of the Steinberg character.
    pub fn steinberg(n: u32) -> Self {
        Symbol {
            top: (0..=n).collect(),
            bottom: (1..=n).collect(),
        }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// `|top| - |bottom|` in canonical form.
    pub fn defect(&self) -> u32 {
        (self.top.len() - self.bottom.len()) as u32
    }

    /// Entry sum minus the floor of `((rows - 1) / 2)^2`, invariant under
    /// both identifications.
    pub fn rank(&self) -> u32 {
        let sum: i64 = self
            .top
            .iter()
            .chain(self.bottom.iter())
            .map(|&x| x as i64)
            .sum();
        let rows = (self.top.len() + self.bottom.len()) as i64;
        let rank = sum - (rows - 1).pow(2) / 4;
        debug_assert!(rank >= 0);
        rank as u32
    }

    /// Exponent of the 2-power in the degree denominator:
    /// `floor((|top| + |bottom| - 1) / 2) - |top intersect bottom|`.
    /// Nonnegative for symbols of odd defect.
    pub fn two_power_exponent(&self) -> u32 {
        let rows = (self.top.len() + self.bottom.len()) as i64;
        if rows == 0 {
            return 0;
        }
        let common = self
            .top
            .iter()
            .filter(|x| self.bottom.binary_search(x).is_ok())
            .count() as i64;
        let exp = (rows - 1) / 2 - common;
        assert!(exp >= 0, "two-power exponent needs odd defect");
        exp as u32
    }

    /// Hook lengths: all differences from an entry down to a smaller
    /// nonnegative non-entry of the same row, over both rows. Sorted
    /// ascending. An `e`-hook is removable exactly when `e` occurs here.
    pub fn hook_multiset(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for row in [&self.top, &self.bottom] {
            for &x in row.iter() {
                for below in 0..x {
                    if row.binary_search(&below).is_err() {
                        out.push(x - below);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Cohook lengths: differences from an entry down to a smaller
    /// nonnegative non-entry of the other row. Sorted ascending.
    pub fn cohook_multiset(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (row, other) in [(&self.top, &self.bottom), (&self.bottom, &self.top)] {
            for &x in row.iter() {
                for below in 0..x {
                    if other.binary_search(&below).is_err() {
                        out.push(x - below);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The e-core: remove hooks of length `e` until none remain. Computed by
    /// compacting each row independently on `e` runners, which realizes every
    /// removal order at once.
    pub fn e_core(&self, e: u32) -> Symbol {
        assert!(e >= 1);
        let slide = |row: &[u32]| -> Vec<u32> {
            let mut by_residue: Vec<Vec<u32>> = vec![Vec::new(); e as usize];
            for &x in row {
                by_residue[(x % e) as usize].push(x);
            }
            let mut out = Vec::new();
            for (res, beads) in by_residue.iter().enumerate() {
                for j in 0..beads.len() as u32 {
                    out.push(res as u32 + j * e);
                }
            }
            out.sort_unstable();
            out
        };
        Symbol::new(slide(&self.top), slide(&self.bottom)).expect("slid rows are increasing")
    }

    /// The e-cocore: remove cohooks of length `e` (moving the shortened entry
    /// to the other row) until none remain. The result is independent of the
    /// removal order.
    pub fn e_cocore(&self, e: u32) -> Symbol {
        assert!(e >= 1);
        fn find(row: &[u32], other: &[u32], e: u32) -> Option<u32> {
            row.iter()
                .rev()
                .copied()
                .find(|&x| x >= e && other.binary_search(&(x - e)).is_err())
        }
        fn shift(row: &mut Vec<u32>, other: &mut Vec<u32>, x: u32, e: u32) {
            let i = row.binary_search(&x).expect("entry present");
            row.remove(i);
            let pos = other.binary_search(&(x - e)).expect_err("target absent");
            other.insert(pos, x - e);
        }
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        // Scan the top row from the largest entry down, then the bottom.
        loop {
            if let Some(x) = find(&top, &bottom, e) {
                shift(&mut top, &mut bottom, x, e);
            } else if let Some(x) = find(&bottom, &top, e) {
                shift(&mut bottom, &mut top, x, e);
            } else {
                return Symbol::new(top, bottom).expect("rows stay increasing");
            }
        }
    }

    /// JSON rendering `{"top": [...], "bottom": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "top": self.top,
            "bottom": self.bottom,
        })
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |row: &[u32]| {
            row.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "({} | {})", join(&self.top), join(&self.bottom))
    }
}

/// Valuation at `p` of the part of the symbol's character degree coprime to
/// the field size `q_field`: the degree is a power of the field size times
/// `prod_{i<=rank} (q^{2i} - 1)` over `2^b * prod_hooks (q^h - 1) *
/// prod_cohooks (q^c + 1)`, and each factor's valuation is taken in closed
/// form. Nonnegative for the odd-defect symbols that label characters.
pub fn symbol_degree_valuation(sym: &Symbol, q_field: u64, p: u64) -> Result<i64> {
    let ctx = ValuationContext::new(
        i64::try_from(q_field).map_err(|_| Error::invalid("field size too large"))?,
        p,
    )?;
    let mut v: i64 = 0;
    for i in 1..=sym.rank() as u64 {
        v += psi_valuation(&ctx, 2 * i, Sign::Minus) as i64;
    }
    if p == 2 {
        v -= sym.two_power_exponent() as i64;
    }
    for h in sym.hook_multiset() {
        v -= psi_valuation(&ctx, h as u64, Sign::Minus) as i64;
    }
    for c in sym.cohook_multiset() {
        v -= psi_valuation(&ctx, c as u64, Sign::Plus) as i64;
    }
    Ok(v)
}

/// Block membership for a symbol at a non-defining prime of the given kind
/// and order weight `e`: every symbol lies in the principal 2-block; for odd
/// linear primes the e-core must match the trivial symbol's, for odd unitary
/// primes the e-cocore must.
pub fn is_principal_symbol(sym: &Symbol, e: u32, kind: PrimeKind, n: u32) -> bool {
    match kind {
        PrimeKind::Even => true,
        PrimeKind::Linear => sym.e_core(e) == Symbol::trivial(n).e_core(e),
        PrimeKind::Unitary => sym.e_cocore(e) == Symbol::trivial(n).e_cocore(e),
    }
}

/// The four special one-or-three-defect families built from an almost hook
/// shape `(n, k, l)`: a shared staircase `0..n-k-l-1` with the two large
/// entries `K = n-k` and `L = n-l` distributed over the rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialFamily {
    /// `K` on the top row, `L` on the bottom.
    F1,
    /// `L` on the top row, `K` on the bottom.
    F2,
    /// Both on the top row, which drops its leading zero.
    F3,
    /// Both on the top row, which keeps its leading zero (defect 3).
    F4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialSymbolSpec {
    pub family: SpecialFamily,
    pub n: u32,
    pub k: u32,
    pub ell: u32,
}

impl SpecialSymbolSpec {
    pub fn new(family: SpecialFamily, n: u32, k: u32, ell: u32) -> Result<Self> {
        let strict = matches!(family, SpecialFamily::F3 | SpecialFamily::F4);
        // The row pattern needs a staircase of length n - k - l >= 1.
        if k > ell || k + ell >= n || (strict && k == ell) {
            return Err(Error::invalid(format!(
                "special symbol constraint violated: n={n} k={k} l={ell} {family:?}"
            )));
        }
        Ok(SpecialSymbolSpec { family, n, k, ell })
    }

    pub fn symbol(&self) -> Symbol {
        let (n, k, ell) = (self.n, self.k, self.ell);
        let d = n - k - ell; // staircase length: entries 0..d-1 resp. 1..d-1
        let big_k = n - k;
        let big_l = n - ell;
        let with_zero: Vec<u32> = (0..d).collect();
        let without_zero: Vec<u32> = (1..d).collect();
        let (mut top, mut bottom) = match self.family {
            SpecialFamily::F1 => {
                let mut t = with_zero.clone();
                t.push(big_k);
                let mut b = without_zero.clone();
                b.push(big_l);
                (t, b)
            }
            SpecialFamily::F2 => {
                let mut t = with_zero.clone();
                t.push(big_l);
                let mut b = without_zero.clone();
                b.push(big_k);
                (t, b)
            }
            SpecialFamily::F3 => {
                let mut t = without_zero.clone();
                t.extend([big_l, big_k]);
                (t, with_zero.clone())
            }
            SpecialFamily::F4 => {
                let mut t = with_zero.clone();
                t.extend([big_l, big_k]);
                (t, without_zero.clone())
            }
        };
        top.sort_unstable();
        bottom.sort_unstable();
        Symbol::new(top, bottom).expect("special rows are strictly increasing")
    }

    /// The degree's part coprime to the field size splits as a canonical
    /// factor `C` (a ratio of `q^{2i} - 1` values depending only on the
    /// shape) times an exceptional factor `E` (four `q^i ± 1` values keyed by
    /// the family; `1` when `k = l`). Returns `(C, E)` as exact rationals.
    pub fn degree_parts(&self, q_field: u64) -> Result<(BigRational, BigRational)> {
        if q_field < 2 {
            return Err(Error::invalid("field size must be at least 2"));
        }
        let x = i64::try_from(q_field).map_err(|_| Error::invalid("field size too large"))?;
        let (n, k, ell) = (self.n as u64, self.k as u64, self.ell as u64);
        let skip = ell - k;
        let minus = |f: u64| psi(x, f as u32, Sign::Minus);

        let mut den = BigInt::one();
        for i in 1..=k {
            den *= minus(2 * i);
        }
        for i in (1..=ell).filter(|&i| i != skip) {
            den *= minus(2 * i);
        }
        let mut num_a = BigInt::one();
        for i in 1..=k {
            num_a *= minus(2 * (n - k + i));
        }
        for i in (1..=ell).filter(|&i| i != skip) {
            num_a *= minus(2 * (n - k - i));
        }
        let mut num_b = BigInt::one();
        for i in (1..=ell).filter(|&i| i != skip) {
            num_b *= minus(2 * (n - ell + i));
        }
        for i in 1..=k {
            num_b *= minus(2 * (n - ell - i));
        }
        let canonical = BigRational::new(num_a, den.clone());
        let canonical_b = BigRational::new(num_b, den);
        assert_eq!(canonical, canonical_b, "the two canonical products agree");

        let exceptional = if k == ell {
            BigRational::one()
        } else {
            let big_k = n - k;
            let big_l = n - ell;
            let p = |f: u64| psi(x, f as u32, Sign::Plus);
            let m = |f: u64| psi(x, f as u32, Sign::Minus);
            let (num, den) = match self.family {
                SpecialFamily::F1 => (m(big_k) * p(big_l), m(skip)),
                SpecialFamily::F2 => (p(big_k) * m(big_l), m(skip)),
                SpecialFamily::F3 => (p(big_k) * p(big_l), p(skip)),
                SpecialFamily::F4 => (m(big_k) * m(big_l), p(skip)),
            };
            BigRational::new(num, den * BigInt::from(2))
        };
        Ok((canonical, exceptional))
    }
}
