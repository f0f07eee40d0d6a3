//! Vertex/face stabilizer code on a cell complex.
//!
//! `H = −Σ_v A_v − Σ_f B_f` with `A_v = Π_{j∈S_v} X_j` and
//! `B_f = Π_{j∈S_f} Z_j`. States are described by the Pauli operator applied
//! to the reference vacuum, so everything here is commutation data.

use std::sync::OnceLock;

use serde::Serialize;

use crate::bits::BitVector;
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::homology::{boundary_matrix, ColumnSolver, Gf2Matrix, RowEchelon};
use crate::pauli::{PauliKind, PauliOperator};

/// Violated stabilizers and the resulting energy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Syndrome {
    pub violated_vertices: Vec<usize>,
    pub violated_faces: Vec<usize>,
    pub energy: i64,
    pub ground_energy: i64,
}

impl Syndrome {
    pub fn is_empty(&self) -> bool {
        self.violated_vertices.is_empty() && self.violated_faces.is_empty()
    }

    pub fn violated_count(&self) -> usize {
        self.violated_vertices.len() + self.violated_faces.len()
    }

    /// Energy above the ground state.
    pub fn excitation_energy(&self) -> i64 {
        self.energy - self.ground_energy
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    /// `Π σᶻ` along a walk on the direct lattice.
    DirectZ,
    /// `Π σˣ` along a dual walk (2D) or `Π_v A_v` along a vertex path (3D).
    DualX,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSpec {
    Edges(Vec<usize>),
    Vertices(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopKind {
    Direct,
    Dual,
}

/// A conjugate pair of logical operators for one lattice axis.
#[derive(Debug, Clone, Serialize)]
pub struct LogicalPair {
    pub axis: usize,
    /// Z on a straight direct loop winding along `axis`.
    pub z: PauliOperator,
    /// X on every `axis`-directed edge crossing the dual cut `x_axis = ½`:
    /// a winding dual loop in 2D, a torus sheet in 3D.
    pub x: PauliOperator,
}

pub struct ToricCode {
    complex: CellComplex,
    stabilizer_echelon: OnceLock<RowEchelon>,
    face_solver: OnceLock<ColumnSolver>,
    star_solver: OnceLock<ColumnSolver>,
}

impl Clone for ToricCode {
    fn clone(&self) -> Self {
        Self::new(self.complex.clone())
    }
}

impl std::fmt::Debug for ToricCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ToricCode")
            .field("dimension", &self.complex.dimension())
            .field("sizes", &self.complex.sizes())
            .finish()
    }
}

impl ToricCode {
    pub fn new(complex: CellComplex) -> Self {
        Self {
            complex,
            stabilizer_echelon: OnceLock::new(),
            face_solver: OnceLock::new(),
            star_solver: OnceLock::new(),
        }
    }

    pub fn build(dimension: usize, sizes: &[usize]) -> Result<Self> {
        Ok(Self::new(CellComplex::build_torus(dimension, sizes)?))
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn n_qubits(&self) -> usize {
        self.complex.edge_count()
    }

    /// `E₀ = −(N_v + N_f)`.
    pub fn ground_energy(&self) -> i64 {
        -((self.complex.vertex_count() + self.complex.face_count()) as i64)
    }

    pub fn vertex_operator(&self, v: usize) -> Result<PauliOperator> {
        let star = self.complex.star(v)?;
        PauliOperator::from_support(self.n_qubits(), PauliKind::X, star.iter().copied())
    }

    pub fn face_operator(&self, f: usize) -> Result<PauliOperator> {
        let edges = self.complex.boundary_edges(f)?;
        PauliOperator::from_support(self.n_qubits(), PauliKind::Z, edges.iter().copied())
    }

    pub fn vertex_operators(&self) -> Vec<PauliOperator> {
        (0..self.complex.vertex_count())
            .map(|v| self.vertex_operator(v).expect("valid vertex"))
            .collect()
    }

    pub fn face_operators(&self) -> Vec<PauliOperator> {
        (0..self.complex.face_count())
            .map(|f| self.face_operator(f).expect("valid face"))
            .collect()
    }

    fn check_size(&self, p: &PauliOperator) -> Result<()> {
        if p.n_qubits() == self.n_qubits() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.n_qubits(),
                right: p.n_qubits(),
            })
        }
    }

    /// Stabilizers anticommuting with `p`.
    ///
    /// A vertex operator (all X) anticommutes exactly when `p` has an odd
    /// number of Z components on its star; dually for faces.
    pub fn syndrome(&self, p: &PauliOperator) -> Result<Syndrome> {
        self.check_size(p)?;
        let c = &self.complex;
        let violated_vertices: Vec<usize> = (0..c.vertex_count())
            .filter(|&v| p.z_bits().parity_at(c.star(v).expect("valid vertex")))
            .collect();
        let violated_faces: Vec<usize> = (0..c.face_count())
            .filter(|&f| {
                p.x_bits()
                    .parity_at(c.boundary_edges(f).expect("valid face"))
            })
            .collect();
        let ground_energy = self.ground_energy();
        let energy = ground_energy + 2 * (violated_vertices.len() + violated_faces.len()) as i64;
        Ok(Syndrome {
            violated_vertices,
            violated_faces,
            energy,
            ground_energy,
        })
    }

    fn check_edges(&self, edges: &[usize]) -> Result<()> {
        for &e in edges {
            if e >= self.n_qubits() {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    n_qubits: self.n_qubits(),
                });
            }
        }
        Ok(())
    }

    /// Transport operator along a path.
    pub fn path_operator(&self, kind: PathKind, spec: &PathSpec) -> Result<PauliOperator> {
        let c = &self.complex;
        let n = self.n_qubits();
        match (kind, spec) {
            (_, PathSpec::Edges(e)) | (_, PathSpec::Vertices(e)) if e.is_empty() => {
                Err(Error::NotAPath("empty path".into()))
            }
            (PathKind::DirectZ, PathSpec::Edges(edges)) => {
                self.check_edges(edges)?;
                for w in edges.windows(2) {
                    if !c.edges_touch(w[0], w[1])? {
                        return Err(Error::NotAPath(format!(
                            "edges {} and {} share no vertex",
                            w[0], w[1]
                        )));
                    }
                }
                Ok(PauliOperator::from_mask(
                    PauliKind::Z,
                    BitVector::from_indices(n, edges.iter().copied()),
                ))
            }
            (PathKind::DualX, PathSpec::Edges(edges)) if c.dimension() == 2 => {
                self.check_edges(edges)?;
                for w in edges.windows(2) {
                    if !c.edges_share_face(w[0], w[1])? {
                        return Err(Error::NotAPath(format!(
                            "edges {} and {} share no face",
                            w[0], w[1]
                        )));
                    }
                }
                Ok(PauliOperator::from_mask(
                    PauliKind::X,
                    BitVector::from_indices(n, edges.iter().copied()),
                ))
            }
            (PathKind::DualX, PathSpec::Vertices(vertices)) if c.dimension() == 3 => {
                for &v in vertices {
                    c.star(v)?;
                }
                for w in vertices.windows(2) {
                    if !c.vertices_adjacent(w[0], w[1])? {
                        return Err(Error::NotAPath(format!(
                            "vertices {} and {} are not neighbours",
                            w[0], w[1]
                        )));
                    }
                }
                let mut mask = BitVector::zeros(n);
                for &v in vertices {
                    for &e in c.star(v)? {
                        mask.toggle(e);
                    }
                }
                Ok(PauliOperator::from_mask(PauliKind::X, mask))
            }
            (kind, spec) => Err(Error::InvalidSpec(format!(
                "{kind:?} path in {}D does not take {}",
                c.dimension(),
                match spec {
                    PathSpec::Edges(_) => "an edge list",
                    PathSpec::Vertices(_) => "a vertex list",
                }
            ))),
        }
    }

    /// Stacked generator matrix: rows `A_v` then `B_f`, columns `x ‖ z`.
    pub fn generator_matrix(&self) -> Gf2Matrix {
        let c = &self.complex;
        let n = self.n_qubits();
        let mut m = Gf2Matrix::zeros(c.vertex_count() + c.face_count(), 2 * n);
        for v in 0..c.vertex_count() {
            for &e in c.star(v).expect("valid vertex") {
                m.toggle(v, e);
            }
        }
        for f in 0..c.face_count() {
            for &e in c.boundary_edges(f).expect("valid face") {
                m.toggle(c.vertex_count() + f, n + e);
            }
        }
        m
    }

    pub fn stabilizer_rank(&self) -> usize {
        self.generator_matrix().rank()
    }

    /// `k = N_e − rank`; the ground space has dimension `2^k`.
    pub fn logical_qubit_count(&self) -> usize {
        self.n_qubits() - self.stabilizer_rank()
    }

    fn echelon(&self) -> &RowEchelon {
        self.stabilizer_echelon
            .get_or_init(|| RowEchelon::new(&self.generator_matrix(), true))
    }

    /// True iff `p` (ignoring its phase) is a product of stabilizer generators.
    pub fn is_stabilizer_element(&self, p: &PauliOperator) -> Result<bool> {
        Ok(self.stabilizer_decomposition(p)?.is_some())
    }

    /// Vertices and faces whose generators multiply to `p` up to phase.
    pub fn stabilizer_decomposition(
        &self,
        p: &PauliOperator,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if !self.syndrome(p)?.is_empty() {
            return Ok(None);
        }
        let (residual, combo) = self.echelon().reduce(&p.symplectic_vector())?;
        if !residual.is_zero() {
            return Ok(None);
        }
        let nv = self.complex.vertex_count();
        let combo = combo.expect("tracked echelon");
        let (vertices, faces): (Vec<usize>, Vec<usize>) = combo.iter_ones().partition(|&i| i < nv);
        Ok(Some((
            vertices,
            faces.into_iter().map(|i| i - nv).collect(),
        )))
    }

    /// Whether a closed loop is a GF(2) sum of face boundaries (direct) or of
    /// vertex stars (dual).
    pub fn is_contractile(&self, edges: &[usize], kind: LoopKind) -> Result<bool> {
        self.check_edges(edges)?;
        let mask = BitVector::from_indices(self.n_qubits(), edges.iter().copied());
        let (op, solver) = match kind {
            LoopKind::Direct => (
                PauliOperator::from_mask(PauliKind::Z, mask.clone()),
                self.face_solver.get_or_init(|| {
                    ColumnSolver::new(&boundary_matrix(&self.complex, 2).expect("∂₂ exists"))
                }),
            ),
            LoopKind::Dual => (
                PauliOperator::from_mask(PauliKind::X, mask.clone()),
                self.star_solver.get_or_init(|| {
                    ColumnSolver::new(
                        &boundary_matrix(&self.complex, 1)
                            .expect("∂₁ exists")
                            .transpose(),
                    )
                }),
            ),
        };
        let s = self.syndrome(&op)?;
        if !s.is_empty() {
            return Err(Error::OpenPath {
                violated: s.violated_count(),
            });
        }
        Ok(solver.solve(&mask)?.is_some())
    }

    /// Canonical straight-line logical pairs, one per axis, in axis order.
    pub fn logical_operators(&self) -> Vec<LogicalPair> {
        let c = &self.complex;
        let n = self.n_qubits();
        (0..c.dimension())
            .map(|axis| {
                let line = (0..c.sizes()[axis]).map(|t| {
                    let mut pos = vec![0; c.dimension()];
                    pos[axis] = t;
                    c.edge_at(c.vertex_at(&pos), axis)
                });
                let cut = (0..c.vertex_count())
                    .filter(|&v| c.vertex_coords(v)[axis] == 0)
                    .map(|v| c.edge_at(v, axis));
                LogicalPair {
                    axis,
                    z: PauliOperator::from_mask(PauliKind::Z, BitVector::from_indices(n, line)),
                    x: PauliOperator::from_mask(PauliKind::X, BitVector::from_indices(n, cut)),
                }
            })
            .collect()
    }

    /// Every product of the X-type logicals, labelled by the axes used
    /// (the empty label is the identity).
    pub fn logical_x_products(&self) -> Vec<(Vec<usize>, PauliOperator)> {
        let logicals = self.logical_operators();
        let k = logicals.len();
        (0..1usize << k)
            .map(|mask| {
                let axes: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                let op = axes
                    .iter()
                    .fold(PauliOperator::identity(self.n_qubits()), |acc, &i| {
                        acc.multiply(&logicals[i].x).expect("same size")
                    });
                (axes, op)
            })
            .collect()
    }
}
