//! Witness constructions for the classical groups: unipotent character
//! labels (partitions in the linear/unitary series, symbols in types B/C)
//! lying in both principal blocks with degree prime to both primes. The
//! machinery mirrors the symmetric-group construction with the prime residues
//! replaced by residues modulo multiplicative orders, plus a subcase layer
//! for symbols that places the two large entries according to the
//! linear/unitary kinds and the parities of the chop quotients.

use crate::error::{Error, Result};
use crate::expansions::chop_ep;
use crate::numtheory::{
    classify_linear_unitary, is_prime, ord_mod, prime_power, PrimeKind, ValuationContext,
};
use crate::partitions::{type_a_degree_valuation, Partition};
use crate::symbols::{is_principal_symbol, symbol_degree_valuation, Symbol};
use crate::witness_sn::{dispatch_main_case, CaseData, SymCase};

/// Case tags shared by the Lie-type constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieCase {
    Steinberg,
    I,
    IIa,
    IIb,
    IIbb,
    IIIa,
    IIIb,
}

impl LieCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            LieCase::Steinberg => "Steinberg",
            LieCase::I => "I",
            LieCase::IIa => "IIa",
            LieCase::IIb => "IIb",
            LieCase::IIbb => "IIbb",
            LieCase::IIIa => "IIIa",
            LieCase::IIIb => "IIIb",
        }
    }

    fn from_sym(case: SymCase) -> Self {
        match case {
            SymCase::Sign => unreachable!("sign case does not arise here"),
            SymCase::I => LieCase::I,
            SymCase::IIa => LieCase::IIa,
            SymCase::IIb => LieCase::IIb,
            SymCase::IIbb => LieCase::IIbb,
            SymCase::IIIa => LieCase::IIIa,
            SymCase::IIIb => LieCase::IIIb,
        }
    }

    fn is_primed(&self) -> bool {
        matches!(self, LieCase::IIIa | LieCase::IIIb)
    }
}

fn check_context(n: u32, field: u64, p: u64, q: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("need rank n >= 2"));
    }
    if prime_power(field).is_none() {
        return Err(Error::invalid(format!("{field} is not a prime power")));
    }
    if field > 1 << 20 {
        return Err(Error::invalid("field size too large"));
    }
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::invalid(format!("{p} and {q} must both be prime")));
    }
    if p == q {
        return Err(Error::invalid("the two primes must be distinct"));
    }
    if field.is_multiple_of(p) || field.is_multiple_of(q) {
        return Err(Error::invalid(
            "the primes must not divide the field size (non-defining)",
        ));
    }
    Ok(())
}

/// Parameters for the linear (`epsilon = +1`) or unitary (`epsilon = -1`)
/// series of rank `n - 1`: a prime-power field size and two distinct
/// non-defining primes whose orders at `epsilon * field` are at most `n`
/// (equivalent to both dividing the group order).
#[derive(Debug, Clone)]
pub struct TypeAContext {
    pub n: u32,
    pub field: u64,
    pub epsilon: i8,
    pub p: u64,
    pub q: u64,
    pub e_p: u64,
    pub e_q: u64,
}

impl TypeAContext {
    pub fn new(n: u32, field: u64, epsilon: i8, p: u64, q: u64) -> Result<Self> {
        check_context(n, field, p, q)?;
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::invalid("epsilon must be +1 or -1"));
        }
        let x = epsilon as i64 * field as i64;
        let e_p = ord_mod(x, p)?;
        let e_q = ord_mod(x, q)?;
        if e_p > n as u64 || e_q > n as u64 {
            return Err(Error::invalid(format!(
                "orders e_p={e_p}, e_q={e_q} must be at most n={n} for the primes to divide the group order"
            )));
        }
        Ok(TypeAContext {
            n,
            field,
            epsilon,
            p,
            q,
            e_p,
            e_q,
        })
    }

    /// The signed base `epsilon * field` driving all degree arithmetic.
    pub fn base(&self) -> i64 {
        self.epsilon as i64 * self.field as i64
    }

    pub fn family_name(&self) -> &'static str {
        if self.epsilon == 1 {
            "A"
        } else {
            "2A"
        }
    }
}

#[derive(Debug, Clone)]
pub struct TypeAWitness {
    pub n: u32,
    pub field: u64,
    pub epsilon: i8,
    pub p: u64,
    pub q: u64,
    pub partition: Partition,
    pub case: LieCase,
}

impl TypeAWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": if self.epsilon == 1 { "A" } else { "2A" },
            "n": self.n,
            "Q": self.field,
            "epsilon": self.epsilon,
            "p": self.p,
            "q": self.q,
            "label": self.partition.format_exponential(),
            "case": self.case.as_str(),
            "subcase": serde_json::Value::Null,
        })
    }
}

/// Reuses the symmetric-group almost-hook table with the order-weighted chop.
fn lie_case_partition(data: &CaseData) -> Partition {
    let (r, b, comp) = (data.residue, data.low, data.complement);
    let mut parts: Vec<u32> = Vec::new();
    match data.case {
        SymCase::Sign => unreachable!(),
        SymCase::I => {
            parts.push(r as u32);
            parts.extend(std::iter::repeat_n(1, comp as usize));
        }
        SymCase::IIa | SymCase::IIIa => {
            parts.push((b + 1) as u32);
            parts.push(r as u32);
            parts.extend(std::iter::repeat_n(1, (comp - b - 1) as usize));
        }
        SymCase::IIb | SymCase::IIbb | SymCase::IIIb => {
            parts.push((r + 1) as u32);
            parts.push(b as u32);
            parts.extend(std::iter::repeat_n(1, (comp - b - 1) as usize));
        }
    }
    Partition::from_unsorted(parts)
}

/// Non-trivial unipotent label for the linear/unitary series: the one-column
/// partition (Steinberg) when both order-residues are at most 1, otherwise an
/// almost hook read off the order-weighted chop. Verified against the block
/// and degree checkers before returning.
pub fn witness_type_a(ctx: &TypeAContext) -> Result<TypeAWitness> {
    let n = ctx.n;
    let swapped = n as u64 % ctx.e_q < n as u64 % ctx.e_p;
    let (side_p, side_ep, side_q, side_eq) = if swapped {
        (ctx.q, ctx.e_q, ctx.p, ctx.e_p)
    } else {
        (ctx.p, ctx.e_p, ctx.q, ctx.e_q)
    };
    let r = n as u64 % side_eq;

    let (partition, case) = if r <= 1 {
        (Partition::column(n), LieCase::Steinberg)
    } else {
        let ch = chop_ep(n as u64, side_p, side_ep, side_eq)?;
        let data = dispatch_main_case(&ch, side_q)?;
        (lie_case_partition(&data), LieCase::from_sym(data.case))
    };

    if partition.size() != n || partition == Partition::row(n) {
        return Err(Error::verification("constructed partition malformed"));
    }
    // Independent block check: cores modulo the orders match the trivial
    // label's cores.
    for e in [ctx.e_p, ctx.e_q] {
        if partition.e_core(e as u32) != Partition::row(n).e_core(e as u32) {
            return Err(Error::verification(format!(
                "type A witness {partition} has wrong {e}-core for n={n}"
            )));
        }
    }
    for prime in [ctx.p, ctx.q] {
        let vctx = ValuationContext::new(ctx.base(), prime)?;
        if type_a_degree_valuation(&partition, &vctx) != 0 {
            return Err(Error::verification(format!(
                "type A witness degree divisible by {prime}"
            )));
        }
    }
    Ok(TypeAWitness {
        n,
        field: ctx.field,
        epsilon: ctx.epsilon,
        p: ctx.p,
        q: ctx.q,
        partition,
        case,
    })
}

/// Parameters for types B/C of rank `n`: orders are taken at the square of
/// the field size, and each odd prime carries its linear/unitary kind with
/// respect to the field size itself.
#[derive(Debug, Clone)]
pub struct TypeBCContext {
    pub n: u32,
    pub field: u64,
    pub p: u64,
    pub q: u64,
    pub e_p: u64,
    pub e_q: u64,
    pub p_kind: PrimeKind,
    pub q_kind: PrimeKind,
}

impl TypeBCContext {
    pub fn new(n: u32, field: u64, p: u64, q: u64) -> Result<Self> {
        check_context(n, field, p, q)?;
        let x2 = (field * field) as i64;
        let e_p = ord_mod(x2, p)?;
        let e_q = ord_mod(x2, q)?;
        if e_p > n as u64 || e_q > n as u64 {
            return Err(Error::invalid(format!(
                "orders e_p={e_p}, e_q={e_q} must be at most n={n} for the primes to divide the group order"
            )));
        }
        let kind = |prime: u64| -> Result<PrimeKind> {
            if prime == 2 {
                Ok(PrimeKind::Even)
            } else {
                classify_linear_unitary(field as i64, prime)
            }
        };
        Ok(TypeBCContext {
            n,
            field,
            p,
            q,
            e_p,
            e_q,
            p_kind: kind(p)?,
            q_kind: kind(q)?,
        })
    }
}

/// Subcase selector: rows are decided by the first prime's kind and the
/// parity of the high part over its order, columns by the second prime's
/// kind and the parity of the complement over its order. Primed variants
/// belong to the primed chop of cases III.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcase {
    Alpha,
    Beta,
    Gamma,
    Delta,
    AlphaPrime,
    BetaPrime,
    GammaPrime,
    DeltaPrime,
}

impl Subcase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Subcase::Alpha => "alpha",
            Subcase::Beta => "beta",
            Subcase::Gamma => "gamma",
            Subcase::Delta => "delta",
            Subcase::AlphaPrime => "alpha'",
            Subcase::BetaPrime => "beta'",
            Subcase::GammaPrime => "gamma'",
            Subcase::DeltaPrime => "delta'",
        }
    }

    fn select(hard_row: bool, hard_col: bool, primed: bool) -> Subcase {
        match (hard_row, hard_col, primed) {
            (false, false, false) => Subcase::Alpha,
            (false, true, false) => Subcase::Beta,
            (true, false, false) => Subcase::Gamma,
            (true, true, false) => Subcase::Delta,
            (false, false, true) => Subcase::AlphaPrime,
            (false, true, true) => Subcase::BetaPrime,
            (true, false, true) => Subcase::GammaPrime,
            (true, true, true) => Subcase::DeltaPrime,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BCWitness {
    pub n: u32,
    pub field: u64,
    pub p: u64,
    pub q: u64,
    pub symbol: Symbol,
    pub case: LieCase,
    pub subcase: Option<Subcase>,
}

impl BCWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": "BC",
            "n": self.n,
            "Q": self.field,
            "p": self.p,
            "q": self.q,
            "label": self.symbol.to_json(),
            "case": self.case.as_str(),
            "subcase": self.subcase.map(|s| s.as_str()),
        })
    }
}

/// Builds the witness symbol for a column of the subcase table from the
/// staircase length `d = complement - low` and the two large entries.
fn column_symbol(subcase: Subcase, complement: u64, low: u64, high: u64) -> Result<Symbol> {
    let d = (complement - low) as u32;
    let big_r = complement as u32;
    let big_t = high as u32;
    let with_zero: Vec<u32> = (0..d).collect();
    let without_zero: Vec<u32> = (1..d).collect();
    let extend = |base: &[u32], extra: &[u32]| {
        let mut v = base.to_vec();
        v.extend_from_slice(extra);
        v.sort_unstable();
        v
    };
    let (top, bottom) = match subcase {
        Subcase::Alpha | Subcase::AlphaPrime => {
            (extend(&without_zero, &[big_t, big_r]), with_zero.clone())
        }
        Subcase::Beta | Subcase::BetaPrime => (
            extend(&with_zero, &[big_r]),
            extend(&without_zero, &[big_t]),
        ),
        Subcase::Gamma | Subcase::GammaPrime => (
            extend(&with_zero, &[big_t]),
            extend(&without_zero, &[big_r]),
        ),
        Subcase::Delta | Subcase::DeltaPrime => {
            (extend(&with_zero, &[big_t, big_r]), without_zero.clone())
        }
    };
    Symbol::new(top, bottom)
}

/// Non-trivial symbol of rank `n` and odd defect lying in both principal
/// blocks with degree prime to both primes: the Steinberg symbol when both
/// order-residues vanish, otherwise a staircase symbol carrying the chop's
/// complement and high part, placed by the subcase table. Verified against
/// core/cocore block checks and closed-form degree valuations.
pub fn witness_type_bc(ctx: &TypeBCContext) -> Result<BCWitness> {
    let n = ctx.n;
    let swapped = n as u64 % ctx.e_q < n as u64 % ctx.e_p;
    let (side_p, side_ep, side_pk, side_q, side_eq, side_qk) = if swapped {
        (ctx.q, ctx.e_q, ctx.q_kind, ctx.p, ctx.e_p, ctx.p_kind)
    } else {
        (ctx.p, ctx.e_p, ctx.p_kind, ctx.q, ctx.e_q, ctx.q_kind)
    };
    let r = n as u64 % side_eq;

    let (symbol, case, subcase) = if r == 0 {
        (Symbol::steinberg(n), LieCase::Steinberg, None)
    } else {
        let ch = chop_ep(n as u64, side_p, side_ep, side_eq)?;
        let data = dispatch_main_case(&ch, side_q)?;
        let case = LieCase::from_sym(data.case);
        let high = if case.is_primed() {
            ch.primed.expect("primed chop present in cases III").high
        } else {
            ch.high
        };
        debug_assert_eq!(high % side_ep, 0);
        debug_assert_eq!(data.complement % side_eq, 0);
        let hard_row = side_pk == PrimeKind::Unitary && (high / side_ep) % 2 == 1;
        let hard_col = side_qk == PrimeKind::Unitary && (data.complement / side_eq) % 2 == 1;
        let subcase = Subcase::select(hard_row, hard_col, case.is_primed());
        let symbol = if case == LieCase::I {
            // All four columns coincide on a symbol with the complement
            // repeated in both rows.
            let d = (data.complement - data.low) as u32;
            let big_r = data.complement as u32;
            let mut top: Vec<u32> = (0..d).collect();
            top.push(big_r);
            let mut bottom: Vec<u32> = (1..d).collect();
            bottom.push(big_r);
            Symbol::new(top, bottom)?
        } else {
            column_symbol(subcase, data.complement, data.low, high)?
        };
        (symbol, case, Some(subcase))
    };

    if symbol.rank() != n {
        return Err(Error::verification(format!(
            "witness symbol has rank {} instead of {n}",
            symbol.rank()
        )));
    }
    if symbol.defect() % 2 == 0 {
        return Err(Error::verification("witness symbol must have odd defect"));
    }
    if symbol == Symbol::trivial(n) {
        return Err(Error::verification("witness symbol is the trivial symbol"));
    }
    for (e, kind, prime) in [(ctx.e_p, ctx.p_kind, ctx.p), (ctx.e_q, ctx.q_kind, ctx.q)] {
        if !is_principal_symbol(&symbol, e as u32, kind, n) {
            return Err(Error::verification(format!(
                "witness symbol {symbol} not principal at {prime} (n={n}, field={})",
                ctx.field
            )));
        }
        let v = symbol_degree_valuation(&symbol, ctx.field, prime)?;
        if v != 0 {
            return Err(Error::verification(format!(
                "witness symbol degree has valuation {v} at {prime}"
            )));
        }
    }
    Ok(BCWitness {
        n,
        field: ctx.field,
        p: ctx.p,
        q: ctx.q,
        symbol,
        case,
        subcase,
    })
}
