//! Dense state-vector cross-check for tiny lattices.
//!
//! Qubit `j` is bit `j` of the computational-basis index. Everything is
//! built from explicit amplitude vectors, independently of the GF(2)
//! machinery, so it can validate the stabilizer pipeline.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::code::ToricCode;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

pub const DEFAULT_CAP: usize = 14;
/// Largest system handed to the generic dense eigensolver.
pub const EIGEN_CAP: usize = 10;

const TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits > 63 {
            return Err(Error::TooLarge { n_qubits, cap: 63 });
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, n_qubits });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    fn from_real(n_qubits: usize, v: &[f64]) -> Self {
        Self {
            n_qubits,
            amplitudes: v.iter().map(|&a| Complex64::new(a, 0.0)).collect(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn inner(&self, other: &DenseState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a / n).collect(),
        }
    }

    fn add(&self, other: &DenseState) -> DenseState {
        DenseState {
            n_qubits: self.n_qubits,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Largest entrywise deviation from `other`.
    pub fn distance(&self, other: &DenseState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Multiplies by `i^k` exactly.
fn times_i_pow(a: Complex64, k: u8) -> Complex64 {
    match k % 4 {
        0 => a,
        1 => Complex64::new(-a.im, a.re),
        2 => -a,
        _ => Complex64::new(a.im, -a.re),
    }
}

fn masks(p: &PauliOperator) -> (usize, usize) {
    let to_mask = |bits: &crate::bits::BitVector| bits.iter_ones().fold(0usize, |m, j| m | 1 << j);
    (to_mask(p.x_bits()), to_mask(p.z_bits()))
}

/// An energy level and its degeneracy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Level {
    pub energy: i64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct GroundSpace {
    pub energy: i64,
    pub dimension: usize,
    pub basis: Vec<DenseState>,
}

/// An invariant subspace labelled by the stabilizer eigenvalues fixed so far.
struct Sector {
    violated: usize,
    basis: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy)]
pub struct DenseOracle {
    cap: usize,
}

impl Default for DenseOracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl DenseOracle {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap: cap.min(30) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n_qubits: usize) -> Result<()> {
        if n_qubits > self.cap {
            Err(Error::TooLarge {
                n_qubits,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// `|0…0⟩` on the code's qubits.
    pub fn reference_state(&self, code: &ToricCode) -> Result<DenseState> {
        self.check(code.n_qubits())?;
        DenseState::basis(code.n_qubits(), 0)
    }

    /// `P|ψ⟩` with `P = i^φ X^x Z^z`: `|b⟩ ↦ i^φ (−1)^{z·b} |b ⊕ x⟩`.
    pub fn apply_pauli(&self, state: &DenseState, p: &PauliOperator) -> Result<DenseState> {
        self.check(state.n_qubits)?;
        if p.n_qubits() != state.n_qubits {
            return Err(Error::SizeMismatch {
                left: state.n_qubits,
                right: p.n_qubits(),
            });
        }
        let (x, z) = masks(p);
        let mut out = vec![Complex64::new(0.0, 0.0); state.amplitudes.len()];
        for (b, &a) in state.amplitudes.iter().enumerate() {
            let sign = if (b & z).count_ones() % 2 == 1 { 2 } else { 0 };
            out[b ^ x] = times_i_pow(a, p.phase_exponent() + sign);
        }
        Ok(DenseState {
            n_qubits: state.n_qubits,
            amplitudes: out,
        })
    }

    /// `H|ψ⟩` with `H = −Σ A_v − Σ B_f`.
    pub fn apply_hamiltonian(&self, code: &ToricCode, state: &DenseState) -> Result<DenseState> {
        let mut acc = DenseState {
            n_qubits: state.n_qubits,
            amplitudes: vec![Complex64::new(0.0, 0.0); state.amplitudes.len()],
        };
        for g in code.vertex_operators().iter().chain(&code.face_operators()) {
            acc = acc.add(&self.apply_pauli(state, g)?);
        }
        acc.amplitudes.iter_mut().for_each(|a| *a = -*a);
        Ok(acc)
    }

    /// `⟨ψ|H|ψ⟩ / ⟨ψ|ψ⟩`.
    pub fn energy(&self, code: &ToricCode, state: &DenseState) -> Result<f64> {
        let h = self.apply_hamiltonian(code, state)?;
        Ok(state.inner(&h).re / state.inner(state).re)
    }

    /// `Π_v (1 + A_v) |0…0⟩`, normalized.
    pub fn vacuum(&self, code: &ToricCode) -> Result<DenseState> {
        let mut psi = self.reference_state(code)?;
        for a in code.vertex_operators() {
            psi = psi.add(&self.apply_pauli(&psi, &a)?);
        }
        Ok(psi.normalized())
    }

    /// Checks that the normalized vertex-projected reference state is a +1
    /// eigenvector of every stabilizer and lies in the ground space.
    pub fn verify_vacuum_construction(&self, code: &ToricCode) -> Result<bool> {
        let psi = self.vacuum(code)?;
        for g in code.vertex_operators().iter().chain(&code.face_operators()) {
            if self.apply_pauli(&psi, g)?.distance(&psi) > TOL {
                return Ok(false);
            }
        }
        let ground = self.ground_space(code)?;
        let weight: f64 = ground.basis.iter().map(|b| b.inner(&psi).norm_sqr()).sum();
        Ok((weight - 1.0).abs() < TOL
            && (self.energy(code, &psi)? - ground.energy as f64).abs() < TOL)
    }

    /// Applies `steps` in order to `stationary · vacuum` and reports the
    /// sign relating the final state to the initial one.
    pub fn braid_sign(
        &self,
        code: &ToricCode,
        steps: &[PauliOperator],
        stationary: &PauliOperator,
    ) -> Result<i8> {
        let initial = self.apply_pauli(&self.vacuum(code)?, stationary)?;
        let mut psi = initial.clone();
        for s in steps {
            psi = self.apply_pauli(&psi, s)?;
        }
        let overlap = initial.inner(&psi);
        if (overlap - 1.0).norm() < TOL {
            Ok(1)
        } else if (overlap + 1.0).norm() < TOL {
            Ok(-1)
        } else {
            Err(Error::InvalidSpec(format!(
                "final state is not ±initial (overlap {overlap})"
            )))
        }
    }

    fn sectors(&self, code: &ToricCode, ground_only: bool) -> Result<Vec<Sector>> {
        self.check(code.n_qubits())?;
        let n = code.n_qubits();
        let dim = 1usize << n;

        // Face operators are diagonal: group basis states by their pattern.
        let face_masks: Vec<usize> = code.face_operators().iter().map(|f| masks(f).1).collect();
        let mut groups: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
        for b in 0..dim {
            let key: Vec<bool> = face_masks
                .iter()
                .map(|m| (b & m).count_ones() % 2 == 1)
                .collect();
            if ground_only && key.iter().any(|&k| k) {
                continue;
            }
            groups.entry(key).or_default().push(b);
        }
        let mut sectors: Vec<Sector> = groups
            .into_iter()
            .map(|(key, states)| Sector {
                violated: key.iter().filter(|&&k| k).count(),
                basis: states
                    .into_iter()
                    .map(|b| {
                        let mut v = vec![0.0; dim];
                        v[b] = 1.0;
                        v
                    })
                    .collect(),
            })
            .collect();

        // Vertex operators permute basis states; split each sector into
        // their ±1 eigenspaces one operator at a time.
        for a in code.vertex_operators() {
            let flip = masks(&a).0;
            let mut next = Vec::with_capacity(sectors.len() * 2);
            for s in sectors {
                let plus = project(&s.basis, flip, 1.0);
                if !plus.is_empty() {
                    next.push(Sector {
                        violated: s.violated,
                        basis: plus,
                    });
                }
                if !ground_only {
                    let minus = project(&s.basis, flip, -1.0);
                    if !minus.is_empty() {
                        next.push(Sector {
                            violated: s.violated + 1,
                            basis: minus,
                        });
                    }
                }
            }
            sectors = next;
        }
        Ok(sectors)
    }

    /// Simultaneous +1 eigenspace of all stabilizers.
    pub fn ground_space(&self, code: &ToricCode) -> Result<GroundSpace> {
        let n = code.n_qubits();
        let basis: Vec<DenseState> = self
            .sectors(code, true)?
            .into_iter()
            .flat_map(|s| s.basis)
            .map(|v| DenseState::from_real(n, &v))
            .collect();
        Ok(GroundSpace {
            energy: code.ground_energy(),
            dimension: basis.len(),
            basis,
        })
    }

    /// Distinct energies in increasing order with their multiplicities,
    /// from labelling the joint stabilizer eigenspaces.
    pub fn spectrum(&self, code: &ToricCode) -> Result<Vec<Level>> {
        let e0 = code.ground_energy();
        let mut levels: BTreeMap<i64, usize> = BTreeMap::new();
        for s in self.sectors(code, false)? {
            *levels.entry(e0 + 2 * s.violated as i64).or_default() += s.basis.len();
        }
        Ok(levels
            .into_iter()
            .map(|(energy, multiplicity)| Level {
                energy,
                multiplicity,
            })
            .collect())
    }

    /// Real symmetric matrix of `H` in the computational basis.
    pub fn hamiltonian_matrix(&self, code: &ToricCode) -> Result<DMatrix<f64>> {
        self.check(code.n_qubits())?;
        let dim = 1usize << code.n_qubits();
        let mut h = DMatrix::<f64>::zeros(dim, dim);
        for a in code.vertex_operators() {
            let flip = masks(&a).0;
            for b in 0..dim {
                h[(b ^ flip, b)] -= 1.0;
            }
        }
        for f in code.face_operators() {
            let z = masks(&f).1;
            for b in 0..dim {
                h[(b, b)] -= if (b & z).count_ones().is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
            }
        }
        Ok(h)
    }

    /// Eigenvalues of `H` from a generic symmetric eigensolver, ascending.
    pub fn dense_eigenvalues(&self, code: &ToricCode) -> Result<Vec<f64>> {
        if code.n_qubits() > EIGEN_CAP.min(self.cap) {
            return Err(Error::TooLarge {
                n_qubits: code.n_qubits(),
                cap: EIGEN_CAP.min(self.cap),
            });
        }
        let h = self.hamiltonian_matrix(code)?;
        let mut ev: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        Ok(ev)
    }
}

/// Orthonormal basis of `(1 + sign·X^flip)/2` applied to an orthonormal set.
fn project(basis: &[Vec<f64>], flip: usize, sign: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for u in basis {
        let mut w: Vec<f64> = (0..u.len())
            .map(|b| 0.5 * (u[b] + sign * u[b ^ flip]))
            .collect();
        for q in &out {
            let d: f64 = q.iter().zip(&w).map(|(a, b)| a * b).sum();
            if d != 0.0 {
                w.iter_mut().zip(q).for_each(|(x, y)| *x -= d * y);
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-9 {
            w.iter_mut().for_each(|x| *x /= norm);
            out.push(w);
        }
    }
    out
}
