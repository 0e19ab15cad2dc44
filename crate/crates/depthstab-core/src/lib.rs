//! Exact computation of depth-stability invariants of edge ideals.
//!
//! Given a finite simple graph `G` with edge ideal `I_G` in the polynomial
//! ring on the vertex variables, this crate computes — with exact arithmetic
//! throughout — the depth of `S/I_G^k` for all powers `k` up to a certified
//! stabilization horizon, the stabilization indices `dstab` and `astab`, the
//! analytic spread `ℓ(I_G)`, the linear relation graph, associated primes of
//! powers, and the combinatorial data of the underlying graph (free vertices,
//! diameter, longest paths). On top of these it verifies a family of
//! theorem-level invariants (e.g. `dstab < ℓ`, the tree bound `dstab ≤ n − m`,
//! socle witnesses, depth lower bounds) and aggregates the outcomes into
//! machine-readable reports.
//!
//! Depth is obtained as `n − pd(S/I)` where the projective dimension is read
//! off multigraded Betti numbers. Betti numbers are computed by reduced
//! simplicial homology of open intervals in the lcm lattice of the ideal,
//! with a Koszul-strand engine taking over on large lattices; both engines
//! work over `Q` (default) or `F_p`. No floating point is used anywhere.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion CLI
//! crate carries file formats, parallel batch drivers and JSON/CSV output.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod complex;
pub mod error;
pub mod exact;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod monomial;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, Field};
pub use graph::{Graph, GraphMetrics};
pub use homology::{BettiTable, DepthValue};
pub use ideal::MonomialIdeal;
pub use lattice::LcmLattice;
pub use monomial::Monomial;

/// Resource limits that turn combinatorial blow-ups into clean errors
/// instead of runaway computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Caps {
    /// Maximum number of minimal generators allowed for an ideal power.
    pub max_generators: usize,
    /// Maximum number of lcm-lattice elements.
    pub max_lattice: usize,
    /// Maximum number of candidate monomials scanned by the socle box search.
    pub max_socle_box: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_generators: 20_000,
            max_lattice: 200_000,
            max_socle_box: 20_000_000,
        }
    }
}
