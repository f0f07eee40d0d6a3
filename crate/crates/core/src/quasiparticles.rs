//! Quasiparticles: creation, transport, fusion, braiding and confinement.
//!
//! An `e` sits on a violated vertex, an `m` on a violated face. In 3D a
//! single `σˣ` violates the four faces around its edge; that cluster (a
//! "quasiplaque") is the 3D magnetic excitation and moves as a unit.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::BitVector;
use crate::code::{PathKind, PathSpec, ToricCode};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::pauli::{PauliKind, PauliOperator};

/// Anyon label, stored as its (electric, magnetic) charge bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnyonType {
    electric: bool,
    magnetic: bool,
}

impl AnyonType {
    pub const VACUUM: AnyonType = AnyonType::new(false, false);
    pub const E: AnyonType = AnyonType::new(true, false);
    pub const M: AnyonType = AnyonType::new(false, true);
    pub const EPSILON: AnyonType = AnyonType::new(true, true);

    pub const ALL: [AnyonType; 4] = [Self::VACUUM, Self::E, Self::M, Self::EPSILON];

    pub const fn new(electric: bool, magnetic: bool) -> Self {
        Self { electric, magnetic }
    }

    pub fn electric(self) -> bool {
        self.electric
    }

    pub fn magnetic(self) -> bool {
        self.magnetic
    }

    pub fn label(self) -> &'static str {
        match (self.electric, self.magnetic) {
            (false, false) => "1",
            (true, false) => "e",
            (false, true) => "m",
            (true, true) => "ε",
        }
    }
}

impl fmt::Display for AnyonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AnyonType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "vacuum" => Ok(Self::VACUUM),
            "e" => Ok(Self::E),
            "m" => Ok(Self::M),
            "ε" | "eps" | "epsilon" => Ok(Self::EPSILON),
            other => Err(Error::Parse(format!("unknown anyon {other:?}"))),
        }
    }
}

impl Serialize for AnyonType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Fusion product. Charges add mod 2, giving the Klein four-group.
pub fn fuse(a: AnyonType, b: AnyonType) -> AnyonType {
    AnyonType::new(a.electric ^ b.electric, a.magnetic ^ b.magnetic)
}

/// `table[i][j] = fuse(ALL[i], ALL[j])`.
pub fn fusion_table() -> [[AnyonType; 4]; 4] {
    let mut t = [[AnyonType::VACUUM; 4]; 4];
    for (i, &a) in AnyonType::ALL.iter().enumerate() {
        for (j, &b) in AnyonType::ALL.iter().enumerate() {
            t[i][j] = fuse(a, b);
        }
    }
    t
}

/// The fusion table as a text grid with a header row and column.
pub fn fusion_grid() -> String {
    let mut out = String::from("×");
    for a in AnyonType::ALL {
        out.push(' ');
        out.push_str(a.label());
    }
    for (i, row) in fusion_table().iter().enumerate() {
        out.push('\n');
        out.push_str(AnyonType::ALL[i].label());
        for b in row {
            out.push(' ');
            out.push_str(b.label());
        }
    }
    out
}

/// Full braid of `a` around `b`: −1 iff one carries the electric and the
/// other the magnetic charge an odd number of times.
pub fn mutual_monodromy(a: AnyonType, b: AnyonType) -> i8 {
    let crossings = (a.electric & b.magnetic) as u8 + (a.magnetic & b.electric) as u8;
    if crossings.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Boson,
    Fermion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutualStatistics {
    pub other: AnyonType,
    pub monodromy: i8,
    /// Spin read off from the monodromy as a double exchange: "1/4" when the
    /// monodromy is −1. Convention-dependent metadata; only the monodromy is
    /// computed from operators.
    pub spin: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatisticsReport {
    pub anyon: AnyonType,
    pub self_statistics: Statistic,
    /// Exchange phase of two identical anyons.
    pub exchange_phase: i8,
    pub mutual: Vec<MutualStatistics>,
}

/// Exchange statistics of `a` and its mutual monodromy with every type.
///
/// A dyon is a bound `e × m`; exchanging two of them transports one `e`
/// around the other's `m` once, so its exchange phase is the `e`–`m`
/// monodromy.
pub fn exchange_statistics(a: AnyonType) -> StatisticsReport {
    let exchange_phase = if a.electric && a.magnetic { -1 } else { 1 };
    StatisticsReport {
        anyon: a,
        self_statistics: if exchange_phase == 1 {
            Statistic::Boson
        } else {
            Statistic::Fermion
        },
        exchange_phase,
        mutual: AnyonType::ALL
            .iter()
            .map(|&b| {
                let monodromy = mutual_monodromy(a, b);
                MutualStatistics {
                    other: b,
                    monodromy,
                    spin: if monodromy == -1 { "1/4" } else { "0" },
                }
            })
            .collect(),
    }
}

/// Excitations produced by applying `source` to the reference vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcitationConfig {
    pub e_positions: Vec<usize>,
    pub m_positions: Vec<usize>,
    pub source: PauliOperator,
    pub energy: i64,
    pub ground_energy: i64,
}

impl ExcitationConfig {
    pub fn from_operator(code: &ToricCode, source: PauliOperator) -> Result<Self> {
        let s = code.syndrome(&source)?;
        Ok(Self {
            e_positions: s.violated_vertices,
            m_positions: s.violated_faces,
            source,
            energy: s.energy,
            ground_energy: s.ground_energy,
        })
    }

    pub fn excitation_count(&self) -> usize {
        self.e_positions.len() + self.m_positions.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Charge {
    E,
    M,
}

/// `σᶻ_k` for an `e` pair on the endpoints of `k`; `σˣ_k` for the
/// magnetic excitations on the faces around `k`.
pub fn create_pair(code: &ToricCode, charge: Charge, edge: usize) -> Result<ExcitationConfig> {
    code.complex().vertices_of_edge(edge)?;
    let kind = match charge {
        Charge::E => PauliKind::Z,
        Charge::M => PauliKind::X,
    };
    ExcitationConfig::from_operator(code, PauliOperator::single(code.n_qubits(), edge, kind)?)
}

/// A transport step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// `Π σᶻ` along a direct walk.
    ZWalk(Vec<usize>),
    /// `Π σˣ` along a dual walk (2D).
    DualXWalk(Vec<usize>),
    /// `O^x` on the four edges of `S_v` other than `from` and `to`: moves the
    /// quasiplaque around `from` to the one around `to` (3D).
    QuasiplaqueStep {
        vertex: usize,
        from: usize,
        to: usize,
    },
    /// A single Pauli on one edge.
    Single { kind: PauliKind, edge: usize },
}

/// The four edges of `S_v` excluding `from` and `to`.
pub fn quasiplaque_step_edges(
    c: &CellComplex,
    vertex: usize,
    from: usize,
    to: usize,
) -> Result<Vec<usize>> {
    if c.dimension() != 3 {
        return Err(Error::InvalidSpec(
            "quasiplaque steps need a 3D lattice".into(),
        ));
    }
    let star = c.star(vertex)?;
    if from == to || !star.contains(&from) || !star.contains(&to) {
        return Err(Error::InvalidSpec(format!(
            "edges {from} and {to} must be distinct edges of the star of vertex {vertex}"
        )));
    }
    Ok(star
        .iter()
        .copied()
        .filter(|&e| e != from && e != to)
        .collect())
}

pub fn move_operator(code: &ToricCode, mv: &Move) -> Result<PauliOperator> {
    let n = code.n_qubits();
    match mv {
        Move::ZWalk(edges) => {
            code.path_operator(PathKind::DirectZ, &PathSpec::Edges(edges.clone()))
        }
        Move::DualXWalk(edges) => {
            code.path_operator(PathKind::DualX, &PathSpec::Edges(edges.clone()))
        }
        Move::QuasiplaqueStep { vertex, from, to } => {
            let edges = quasiplaque_step_edges(code.complex(), *vertex, *from, *to)?;
            PauliOperator::from_support(n, PauliKind::X, edges)
        }
        Move::Single { kind, edge } => PauliOperator::single(n, *edge, *kind),
    }
}

/// Applies a move, rejecting it if the number of excitations changes.
pub fn transport(code: &ToricCode, cfg: &ExcitationConfig, mv: &Move) -> Result<ExcitationConfig> {
    let op = move_operator(code, mv)?;
    let next = ExcitationConfig::from_operator(code, op.multiply(&cfg.source)?)?;
    let (before, after) = (cfg.excitation_count(), next.excitation_count());
    if before != after {
        return Err(Error::EnergyNotConserved { before, after });
    }
    Ok(next)
}

/// Monodromy sign picked up when `mover` (a closed loop operator) encircles
/// the excitations of `stationary`: +1 if they commute, −1 otherwise.
pub fn braid_phase(
    code: &ToricCode,
    mover: &PauliOperator,
    stationary: &ExcitationConfig,
) -> Result<i8> {
    let s = code.syndrome(mover)?;
    if !s.is_empty() {
        return Err(Error::OpenPath {
            violated: s.violated_count(),
        });
    }
    if !(mover.is_x_type() || mover.is_z_type()) {
        return Err(Error::InvalidSpec("mover must be pure X or pure Z".into()));
    }
    Ok(if mover.commutes(&stationary.source)? {
        1
    } else {
        -1
    })
}

/// True if two edge sets cross an odd number of times, i.e. an `e` moved
/// along one passes through the magnetic string of the other an odd number
/// of times.
pub fn crossing_parity(path: &[usize], string: &[usize], n_edges: usize) -> Result<bool> {
    for &e in path.iter().chain(string) {
        if e >= n_edges {
            return Err(Error::IndexOutOfRange {
                index: e,
                n_qubits: n_edges,
            });
        }
    }
    let a = BitVector::from_indices(n_edges, path.iter().copied());
    let b = BitVector::from_indices(n_edges, string.iter().copied());
    Ok(a.dot(&b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DyonSpec {
    /// `σˣ_j ∘ σᶻ_j` on one edge (2D).
    Edge(usize),
    /// `σᶻ_j ∘ O^x` on the coplanar quad of `S_v` perpendicular to `j` (3D).
    Star { vertex: usize, edge: usize },
}

/// The four coplanar edges of `S_v` that are not parallel to `edge`.
pub fn coplanar_quad(c: &CellComplex, vertex: usize, edge: usize) -> Result<Vec<usize>> {
    let star = c.star(vertex)?;
    if !star.contains(&edge) {
        return Err(Error::InvalidSpec(format!(
            "edge {edge} is not in the star of vertex {vertex}"
        )));
    }
    let axis = c.edge_axis(edge);
    Ok(star
        .iter()
        .copied()
        .filter(|&e| c.edge_axis(e) != axis)
        .collect())
}

pub fn create_dyon_pair(code: &ToricCode, spec: &DyonSpec) -> Result<ExcitationConfig> {
    let c = code.complex();
    let n = code.n_qubits();
    let op = match (c.dimension(), spec) {
        (2, DyonSpec::Edge(j)) => {
            c.vertices_of_edge(*j)?;
            PauliOperator::composite_y(n, *j)?
        }
        (3, DyonSpec::Star { vertex, edge }) => {
            let quad = coplanar_quad(c, *vertex, *edge)?;
            let z = PauliOperator::single(n, *edge, PauliKind::Z)?;
            let x = PauliOperator::from_support(n, PauliKind::X, quad)?;
            z.multiply(&x)?
        }
        (d, spec) => {
            return Err(Error::InvalidSpec(format!(
                "{spec:?} is not a {d}D dyon spec"
            )));
        }
    };
    ExcitationConfig::from_operator(code, op)
}

/// Number of faces violated by `σˣ` on the edges dual to the given dual
/// faces (the excitation count of the membrane they form).
pub fn perimeter_excitation_count(code: &ToricCode, dual_faces: &[usize]) -> Result<usize> {
    let op =
        PauliOperator::from_support(code.n_qubits(), PauliKind::X, dual_faces.iter().copied())?;
    Ok(code.syndrome(&op)?.violated_faces.len())
}

/// An `a × b` rectangle of juxtaposed quasiplaques: the `normal`-directed
/// edges at `corner + i·ê_p + j·ê_q` for `i < a`, `j < b`, where `p < q` are
/// the other two axes.
pub fn rectangular_membrane(
    c: &CellComplex,
    normal: usize,
    corner: usize,
    a: usize,
    b: usize,
) -> Result<Vec<usize>> {
    if c.dimension() != 3 || normal > 2 {
        return Err(Error::InvalidSpec(
            "membranes need a 3D lattice and an axis < 3".into(),
        ));
    }
    c.star(corner)?;
    let (p, q) = c.face_span(normal);
    if a == 0 || b == 0 || a > c.sizes()[p] || b > c.sizes()[q] {
        return Err(Error::InvalidSpec(format!(
            "rectangle {a}×{b} does not fit the lattice"
        )));
    }
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        let row = c.shift(corner, p, i as isize);
        for j in 0..b {
            edges.push(c.edge_at(c.shift(row, q, j as isize), normal));
        }
    }
    Ok(edges)
}

/// A coordinate plane of a 3D lattice: the two spanned axes and the
/// position along the remaining one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Plane {
    pub axes: (usize, usize),
    pub offset: usize,
}

/// The 2D code induced on a plane of a 3D lattice, with index maps from the
/// planar cells to the 3D cells.
#[derive(Debug, Clone)]
pub struct PlanarRestriction {
    pub code: ToricCode,
    pub plane: Plane,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub face_map: Vec<usize>,
    parent_qubits: usize,
}

impl PlanarRestriction {
    /// Embeds a planar operator into the 3D lattice.
    pub fn lift(&self, op: &PauliOperator) -> Result<PauliOperator> {
        if op.n_qubits() != self.edge_map.len() {
            return Err(Error::SizeMismatch {
                left: self.edge_map.len(),
                right: op.n_qubits(),
            });
        }
        let map = |bits: &BitVector| {
            BitVector::from_indices(
                self.parent_qubits,
                bits.iter_ones().map(|e| self.edge_map[e]),
            )
        };
        PauliOperator::from_parts(map(op.x_bits()), map(op.z_bits()), op.phase_exponent())
    }

    /// Planar indices of the 3D faces in `faces` that lie in the plane.
    pub fn faces_in_plane(&self, faces: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .face_map
            .iter()
            .enumerate()
            .filter(|(_, f3)| faces.contains(f3))
            .map(|(f2, _)| f2)
            .collect();
        out.sort();
        out
    }
}

/// Restricts vertex and face operators of a 3D code to one coordinate plane.
pub fn planar_restriction(code: &ToricCode, plane: Plane) -> Result<PlanarRestriction> {
    let c = code.complex();
    if c.dimension() != 3 {
        return Err(Error::InvalidPlane(
            "planar restriction needs a 3D code".into(),
        ));
    }
    let (a, b) = plane.axes;
    if a >= b || b > 2 {
        return Err(Error::InvalidPlane(format!(
            "axes {:?} must be increasing and < 3",
            plane.axes
        )));
    }
    let normal = 3 - a - b;
    if plane.offset >= c.sizes()[normal] {
        return Err(Error::InvalidPlane(format!(
            "offset {} outside axis {normal} of size {}",
            plane.offset,
            c.sizes()[normal]
        )));
    }
    let sub = CellComplex::build_torus(2, &[c.sizes()[a], c.sizes()[b]])?;
    let lift_vertex = |v2: usize| {
        let uv = sub.vertex_coords(v2);
        let mut pos = vec![0; 3];
        pos[a] = uv[0];
        pos[b] = uv[1];
        pos[normal] = plane.offset;
        c.vertex_at(&pos)
    };
    let vertex_map: Vec<usize> = (0..sub.vertex_count()).map(lift_vertex).collect();
    let edge_map = (0..sub.edge_count())
        .map(|e| {
            let axis = if sub.edge_axis(e) == 0 { a } else { b };
            c.edge_at(vertex_map[sub.edge_base(e)], axis)
        })
        .collect();
    let face_map = (0..sub.face_count())
        .map(|f| c.face_with_normal(vertex_map[sub.face_base(f)], normal))
        .collect();
    Ok(PlanarRestriction {
        code: ToricCode::new(sub),
        plane,
        vertex_map,
        edge_map,
        face_map,
        parent_qubits: code.n_qubits(),
    })
}
