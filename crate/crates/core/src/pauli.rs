//! Pauli strings in binary symplectic form.
//!
//! An operator is `i^phase · Π_j X_j^{x_j} Z_j^{z_j}`, so the true `Y = iXZ`
//! carries phase 1 while the bare composite `X∘Z` carries phase 0.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::BitVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PauliKind {
    X,
    Y,
    Z,
}

impl FromStr for PauliKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" | "x" => Ok(PauliKind::X),
            "Y" | "y" => Ok(PauliKind::Y),
            "Z" | "z" => Ok(PauliKind::Z),
            other => Err(Error::Parse(format!("unknown Pauli kind {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    /// Builds `i^phase · X^x Z^z` directly from its bit vectors.
    pub fn from_parts(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::SizeMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(Self {
            x,
            z,
            phase: phase % 4,
        })
    }

    /// Weight-one operator `σ^kind_j`.
    pub fn single(n: usize, j: usize, kind: PauliKind) -> Result<Self> {
        if j >= n {
            return Err(Error::IndexOutOfRange {
                index: j,
                n_qubits: n,
            });
        }
        let mut p = Self::identity(n);
        match kind {
            PauliKind::X => p.x.set(j, true),
            PauliKind::Z => p.z.set(j, true),
            PauliKind::Y => {
                p.x.set(j, true);
                p.z.set(j, true);
                p.phase = 1;
            }
        }
        Ok(p)
    }

    /// The phase-free composite `σˣ_j ∘ σᶻ_j` (the bare `XZ`, equal to `−iY`).
    pub fn composite_y(n: usize, j: usize) -> Result<Self> {
        let mut p = Self::single(n, j, PauliKind::Y)?;
        p.phase = 0;
        Ok(p)
    }

    /// Product of `single(kind)` over a set of qubits.
    ///
    /// Repeated entries are treated as one (set semantics).
    pub fn from_support<I>(n: usize, kind: PauliKind, support: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = BitVector::zeros(n);
        for j in support {
            if j >= n {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    n_qubits: n,
                });
            }
            mask.set(j, true);
        }
        Ok(Self::from_mask(kind, mask))
    }

    /// Product of `single(kind)` over the set bits of `mask`.
    pub fn from_mask(kind: PauliKind, mask: BitVector) -> Self {
        let n = mask.len();
        match kind {
            PauliKind::X => Self {
                x: mask,
                z: BitVector::zeros(n),
                phase: 0,
            },
            PauliKind::Z => Self {
                x: BitVector::zeros(n),
                z: mask,
                phase: 0,
            },
            PauliKind::Y => {
                // Y's on distinct qubits commute, each contributing one factor of i.
                let phase = (mask.count_ones() % 4) as u8;
                Self {
                    x: mask.clone(),
                    z: mask,
                    phase,
                }
            }
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    pub fn phase_exponent(&self) -> u8 {
        self.phase
    }

    /// Same operator times `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Self {
        let mut p = self.clone();
        p.phase = (p.phase + k) % 4;
        p
    }

    /// Drops the global phase.
    pub fn phase_free(&self) -> Self {
        self.times_i_pow(4 - self.phase)
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.n_qubits() == other.n_qubits() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.n_qubits(),
                right: other.n_qubits(),
            })
        }
    }

    /// The product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        // Z^{z1} X^{x2} = (−1)^{z1·x2} X^{x2} Z^{z1} on every qubit.
        let swaps = self.z.and(&other.x).count_ones();
        let phase = (self.phase as usize + other.phase as usize + 2 * swaps) % 4;
        Ok(Self {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: phase as u8,
        })
    }

    /// True iff the symplectic product ⟨x,z'⟩ + ⟨z,x'⟩ vanishes.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.x.dot(&other.z) == self.z.dot(&other.x))
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    pub fn support(&self) -> Vec<usize> {
        self.x.or(&self.z).iter_ones().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero() && self.phase == 0
    }

    /// True when the operator has no X part.
    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// True when the operator has no Z part.
    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    /// `x ‖ z` as one vector of length `2n`.
    pub fn symplectic_vector(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    /// Letter on qubit `j`, ignoring phase.
    pub fn letter(&self, j: usize) -> char {
        match (self.x.get(j), self.z.get(j)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }
}

const PREFIXES: [&str; 4] = ["+1", "+i", "-1", "-i"];

/// Text form: a phase prefix in `{+1, +i, -1, -i}` followed by one letter
/// from `{I, X, Y, Z}` per qubit, where `Y` is the true Pauli Y.
impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Each Y letter absorbs one factor of i from the stored phase.
        let ys = self.x.and(&self.z).count_ones();
        let coefficient = (self.phase as usize + 4 - ys % 4) % 4;
        f.write_str(PREFIXES[coefficient])?;
        for j in 0..self.n_qubits() {
            write!(f, "{}", self.letter(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (coefficient, letters) = PREFIXES
            .iter()
            .enumerate()
            .find_map(|(k, p)| s.strip_prefix(p).map(|rest| (k, rest)))
            .ok_or_else(|| Error::Parse(format!("missing phase prefix in {s:?}")))?;
        let n = letters.chars().count();
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        let mut ys = 0;
        for (j, ch) in letters.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => x.set(j, true),
                'Z' => z.set(j, true),
                'Y' => {
                    x.set(j, true);
                    z.set(j, true);
                    ys += 1;
                }
                other => return Err(Error::Parse(format!("bad Pauli letter {other:?}"))),
            }
        }
        Ok(Self {
            x,
            z,
            phase: ((coefficient + ys) % 4) as u8,
        })
    }
}

impl Serialize for PauliOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
