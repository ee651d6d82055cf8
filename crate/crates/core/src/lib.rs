//! Characters lying in two principal blocks at once.
//!
//! For a symmetric group, an alternating group, or a finite classical group
//! of linear, unitary, symplectic, or odd orthogonal type, and any two
//! distinct (non-defining) primes `p` and `q` dividing the group order, this
//! crate constructs an explicit non-trivial irreducible character label that
//! lies in both the principal `p`-block and the principal `q`-block and has
//! degree coprime to `pq` — and then proves it did so, by re-checking every
//! output against independent block tests and exact degree arithmetic, plus
//! brute-force enumeration oracles over the full label sets.
//!
//! The labels are integer partitions (symmetric, alternating, and
//! linear/unitary groups) and symbols — pairs of strictly increasing integer
//! rows up to shift and swap — for the symplectic/odd-orthogonal types.
//!
//! ```
//! use pqblocks::witness_sn::witness_symmetric;
//!
//! let w = witness_symmetric(10, 3, 7).unwrap();
//! assert_eq!(w.partition.format_exponential(), "1^5,2,3");
//! assert_eq!(w.degree.to_string(), "160");
//! ```

pub mod error;
pub mod expansions;
pub mod numtheory;
pub mod oracle;
pub mod partitions;
pub mod symbols;
pub mod witness_lie;
pub mod witness_sn;

pub use error::{Error, Result};

// Code blocks in the guide run as doc-tests so the book stays in sync with
// the library.
#[cfg(doctest)]
mod book {
    macro_rules! page {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }
    page!(Introduction, "../../../book/src/introduction.md");
    page!(Partitions, "../../../book/src/partitions.md");
    page!(Expansions, "../../../book/src/expansions.md");
    page!(Symbols, "../../../book/src/symbols.md");
    page!(Witnesses, "../../../book/src/witnesses.md");
    page!(Oracle, "../../../book/src/oracle.md");
    page!(Cli, "../../../book/src/cli.md");
}
