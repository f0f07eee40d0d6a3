//! Toric codes on periodic 2D and 3D lattices.
//!
//! The crate builds the cubical torus ([`complex`]), the Pauli algebra on its
//! edges ([`pauli`]), the vertex/face stabilizer code ([`code`]), GF(2)
//! homology ([`homology`]), quasiparticle semantics ([`quasiparticles`]) and a
//! dense exact-diagonalization cross-check for tiny lattices ([`oracle`]).

pub mod bits;
pub mod code;
pub mod complex;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod pauli;
pub mod quasiparticles;

pub use bits::BitVector;
pub use code::{LogicalPair, LoopKind, PathKind, PathSpec, Syndrome, ToricCode};
pub use complex::{CellComplex, CellCoords, CellId, CellKind, ComplexSummary, Lattice};
pub use error::{Error, Result};
pub use homology::{BettiProfile, Gf2Matrix};
pub use oracle::{DenseOracle, DenseState, GroundSpace, Level};
pub use pauli::{PauliKind, PauliOperator};
pub use quasiparticles::{AnyonType, Charge, DyonSpec, ExcitationConfig, Move, Plane};
