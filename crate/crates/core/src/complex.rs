//! Periodic square and cubic cell complexes (2- and 3-tori).
//!
//! Cells are addressed by dense indices:
//!
//! * vertex `v` is the row-major index of its coordinates;
//! * edge `d * N_v + v` runs from `v` to `v + ê_d`;
//! * face `o * N_v + v` has lower corner `v` and orientation `o`. In 3D the
//!   orientation is the normal axis; in 2D there is a single orientation
//!   spanning axes (0, 1);
//! * cube `v` has lower corner `v`.
//!
//! All incidence is unoriented (GF(2)).

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
    Cube,
}

impl CellKind {
    pub fn rank(self) -> usize {
        match self {
            CellKind::Vertex => 0,
            CellKind::Edge => 1,
            CellKind::Face => 2,
            CellKind::Cube => 3,
        }
    }

    pub fn from_rank(rank: usize) -> Option<Self> {
        match rank {
            0 => Some(CellKind::Vertex),
            1 => Some(CellKind::Edge),
            2 => Some(CellKind::Face),
            3 => Some(CellKind::Cube),
            _ => None,
        }
    }
}

/// Whether a cell lives on the direct lattice or on its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    Primal,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellId {
    pub lattice: Lattice,
    pub kind: CellKind,
    pub index: usize,
}

impl CellId {
    pub fn primal(kind: CellKind, index: usize) -> Self {
        Self {
            lattice: Lattice::Primal,
            kind,
            index,
        }
    }

    pub fn vertex(index: usize) -> Self {
        Self::primal(CellKind::Vertex, index)
    }

    pub fn edge(index: usize) -> Self {
        Self::primal(CellKind::Edge, index)
    }

    pub fn face(index: usize) -> Self {
        Self::primal(CellKind::Face, index)
    }

    pub fn cube(index: usize) -> Self {
        Self::primal(CellKind::Cube, index)
    }
}

/// Coordinates of a primal cell: lower-corner position and a direction label.
///
/// `axis` is the edge direction for edges and the normal axis for faces
/// (2 for the single 2D orientation); vertices and cubes have none.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CellCoords {
    pub position: Vec<usize>,
    pub axis: Option<usize>,
}

/// Counts and sizes, suitable for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub dimension: usize,
    pub sizes: Vec<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub cube_count: usize,
}

/// A periodic cubical complex with precomputed incidence tables.
#[derive(Debug, Clone)]
pub struct CellComplex {
    dimension: usize,
    sizes: Vec<usize>,
    n_vertices: usize,
    // Flattened incidence tables with fixed strides.
    edges_of_vertex: Vec<usize>,
    vertices_of_edge: Vec<usize>,
    edges_of_face: Vec<usize>,
    faces_of_edge: Vec<usize>,
    faces_of_cube: Vec<usize>,
    cubes_of_face: Vec<usize>,
}

impl CellComplex {
    /// Builds the periodic lattice `L₁ × L₂ [× L₃]`.
    pub fn build_torus(dimension: usize, sizes: &[usize]) -> Result<Self> {
        if dimension != 2 && dimension != 3 {
            return Err(Error::UnsupportedDimension(dimension));
        }
        if sizes.len() != dimension {
            return Err(Error::SizeCountMismatch {
                expected: dimension,
                got: sizes.len(),
            });
        }
        if let Some((axis, &size)) = sizes.iter().enumerate().find(|(_, &s)| s < 2) {
            return Err(Error::DegenerateLattice { axis, size });
        }

        let n_vertices: usize = sizes.iter().product();
        let mut c = CellComplex {
            dimension,
            sizes: sizes.to_vec(),
            n_vertices,
            edges_of_vertex: Vec::new(),
            vertices_of_edge: Vec::new(),
            edges_of_face: Vec::new(),
            faces_of_edge: Vec::new(),
            faces_of_cube: Vec::new(),
            cubes_of_face: Vec::new(),
        };
        c.fill_tables();
        Ok(c)
    }

    fn fill_tables(&mut self) {
        let nv = self.n_vertices;
        let dim = self.dimension;

        self.vertices_of_edge = Vec::with_capacity(2 * self.edge_count());
        for d in 0..dim {
            for v in 0..nv {
                self.vertices_of_edge.push(v);
                self.vertices_of_edge.push(self.shift(v, d, 1));
            }
        }

        self.edges_of_vertex = Vec::with_capacity(2 * dim * nv);
        for v in 0..nv {
            for d in 0..dim {
                self.edges_of_vertex.push(d * nv + v);
                self.edges_of_vertex.push(d * nv + self.shift(v, d, -1));
            }
        }

        self.edges_of_face = Vec::with_capacity(4 * self.face_count());
        for o in 0..self.face_orientations() {
            let (a, b) = self.face_span(o);
            for v in 0..nv {
                self.edges_of_face.extend_from_slice(&[
                    a * nv + v,
                    a * nv + self.shift(v, b, 1),
                    b * nv + v,
                    b * nv + self.shift(v, a, 1),
                ]);
            }
        }

        // Each edge lies on 2 faces per perpendicular axis: the face whose
        // corner is the edge base and the one shifted back along that axis.
        let per_edge = 2 * (dim - 1);
        self.faces_of_edge = vec![0; per_edge * self.edge_count()];
        for d in 0..dim {
            for v in 0..nv {
                let e = d * nv + v;
                let mut slot = 0;
                for p in (0..dim).filter(|&p| p != d) {
                    let o = self.orientation_of_span(d, p);
                    self.faces_of_edge[per_edge * e + slot] = o * nv + v;
                    self.faces_of_edge[per_edge * e + slot + 1] = o * nv + self.shift(v, p, -1);
                    slot += 2;
                }
            }
        }

        if dim == 3 {
            self.faces_of_cube = Vec::with_capacity(6 * nv);
            self.cubes_of_face = Vec::with_capacity(2 * self.face_count());
            for v in 0..nv {
                for n in 0..3 {
                    self.faces_of_cube.push(n * nv + v);
                    self.faces_of_cube.push(n * nv + self.shift(v, n, 1));
                }
            }
            for n in 0..3 {
                for v in 0..nv {
                    self.cubes_of_face.push(v);
                    self.cubes_of_face.push(self.shift(v, n, -1));
                }
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.dimension * self.n_vertices
    }

    pub fn face_count(&self) -> usize {
        self.face_orientations() * self.n_vertices
    }

    pub fn cube_count(&self) -> usize {
        if self.dimension == 3 {
            self.n_vertices
        } else {
            0
        }
    }

    /// Number of cells of the given kind.
    pub fn count(&self, kind: CellKind) -> usize {
        match kind {
            CellKind::Vertex => self.vertex_count(),
            CellKind::Edge => self.edge_count(),
            CellKind::Face => self.face_count(),
            CellKind::Cube => self.cube_count(),
        }
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary {
            dimension: self.dimension,
            sizes: self.sizes.clone(),
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            face_count: self.face_count(),
            cube_count: self.cube_count(),
        }
    }

    fn face_orientations(&self) -> usize {
        if self.dimension == 2 {
            1
        } else {
            3
        }
    }

    /// The two axes spanned by faces of orientation `o`, in increasing order.
    pub fn face_span(&self, o: usize) -> (usize, usize) {
        if self.dimension == 2 {
            (0, 1)
        } else {
            match o {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            }
        }
    }

    fn orientation_of_span(&self, a: usize, b: usize) -> usize {
        if self.dimension == 2 {
            0
        } else {
            3 - a - b
        }
    }

    /// Normal axis of a face orientation (2 for the planar case).
    fn face_normal(&self, o: usize) -> usize {
        if self.dimension == 2 {
            2
        } else {
            o
        }
    }

    pub fn vertex_coords(&self, v: usize) -> Vec<usize> {
        let mut pos = vec![0; self.dimension];
        let mut rest = v;
        for axis in (0..self.dimension).rev() {
            pos[axis] = rest % self.sizes[axis];
            rest /= self.sizes[axis];
        }
        pos
    }

    /// Vertex index of a position; coordinates are reduced modulo the sizes.
    pub fn vertex_at(&self, position: &[usize]) -> usize {
        debug_assert_eq!(position.len(), self.dimension);
        position
            .iter()
            .zip(&self.sizes)
            .fold(0, |acc, (&x, &l)| acc * l + x % l)
    }

    /// Vertex reached by stepping `delta` along `axis`, with wrap-around.
    pub fn shift(&self, v: usize, axis: usize, delta: isize) -> usize {
        let mut pos = self.vertex_coords(v);
        let l = self.sizes[axis] as isize;
        pos[axis] = (pos[axis] as isize + delta).rem_euclid(l) as usize;
        self.vertex_at(&pos)
    }

    /// Edge in direction `axis` whose lower endpoint is `v`.
    pub fn edge_at(&self, v: usize, axis: usize) -> usize {
        axis * self.n_vertices + v
    }

    pub fn edge_axis(&self, e: usize) -> usize {
        e / self.n_vertices
    }

    pub fn edge_base(&self, e: usize) -> usize {
        e % self.n_vertices
    }

    /// Face with lower corner `v` spanning the two given axes.
    pub fn face_at(&self, v: usize, a: usize, b: usize) -> usize {
        self.orientation_of_span(a, b) * self.n_vertices + v
    }

    /// Face with lower corner `v` and normal `axis` (3D only).
    pub fn face_with_normal(&self, v: usize, axis: usize) -> usize {
        debug_assert_eq!(self.dimension, 3);
        axis * self.n_vertices + v
    }

    pub fn face_base(&self, f: usize) -> usize {
        f % self.n_vertices
    }

    /// Axes spanned by face `f`.
    pub fn face_axes(&self, f: usize) -> (usize, usize) {
        self.face_span(f / self.n_vertices)
    }

    pub fn coords(&self, cell: CellId) -> Result<CellCoords> {
        self.check(cell.kind, cell.index)?;
        let base = cell.index % self.n_vertices;
        let axis = match cell.kind {
            CellKind::Vertex | CellKind::Cube => None,
            CellKind::Edge => Some(cell.index / self.n_vertices),
            CellKind::Face => Some(self.face_normal(cell.index / self.n_vertices)),
        };
        Ok(CellCoords {
            position: self.vertex_coords(base),
            axis,
        })
    }

    /// Inverse of [`CellComplex::coords`] for primal cells.
    pub fn cell_at(&self, kind: CellKind, coords: &CellCoords) -> Result<CellId> {
        if coords.position.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: coords.position.len(),
            });
        }
        let v = self.vertex_at(&coords.position);
        let bad_axis =
            |axis: Option<usize>| Error::InvalidSpec(format!("bad axis {axis:?} for {kind:?}"));
        let index = match (kind, coords.axis) {
            (CellKind::Vertex, None) => v,
            (CellKind::Cube, None) if self.dimension == 3 => v,
            (CellKind::Edge, Some(a)) if a < self.dimension => self.edge_at(v, a),
            (CellKind::Face, Some(2)) if self.dimension == 2 => v,
            (CellKind::Face, Some(n)) if self.dimension == 3 && n < 3 => {
                self.face_with_normal(v, n)
            }
            (_, axis) => return Err(bad_axis(axis)),
        };
        Ok(CellId::primal(kind, index))
    }

    fn check(&self, kind: CellKind, index: usize) -> Result<()> {
        let count = self.count(kind);
        if index < count {
            Ok(())
        } else {
            Err(Error::UnknownCell { kind, index, count })
        }
    }

    /// The star `S_v`: all edges incident to vertex `v` (4 in 2D, 6 in 3D).
    pub fn star(&self, v: usize) -> Result<&[usize]> {
        self.check(CellKind::Vertex, v)?;
        let k = 2 * self.dimension;
        Ok(&self.edges_of_vertex[k * v..k * (v + 1)])
    }

    /// The boundary edges `S_f` of face `f`.
    pub fn boundary_edges(&self, f: usize) -> Result<&[usize]> {
        self.check(CellKind::Face, f)?;
        Ok(&self.edges_of_face[4 * f..4 * (f + 1)])
    }

    pub fn vertices_of_edge(&self, e: usize) -> Result<&[usize]> {
        self.check(CellKind::Edge, e)?;
        Ok(&self.vertices_of_edge[2 * e..2 * (e + 1)])
    }

    /// Faces containing edge `e` (2 in 2D, 4 in 3D).
    pub fn faces_of_edge(&self, e: usize) -> Result<&[usize]> {
        self.check(CellKind::Edge, e)?;
        let k = 2 * (self.dimension - 1);
        Ok(&self.faces_of_edge[k * e..k * (e + 1)])
    }

    pub fn faces_of_cube(&self, c: usize) -> Result<&[usize]> {
        self.check(CellKind::Cube, c)?;
        Ok(&self.faces_of_cube[6 * c..6 * (c + 1)])
    }

    /// Cubes containing face `f`; empty in 2D.
    pub fn cubes_of_face(&self, f: usize) -> Result<&[usize]> {
        self.check(CellKind::Face, f)?;
        if self.dimension == 2 {
            return Ok(&[]);
        }
        Ok(&self.cubes_of_face[2 * f..2 * (f + 1)])
    }

    /// Unoriented boundary of a primal cell, or of a dual cell (computed as
    /// the dual of the primal coboundary).
    pub fn boundary(&self, cell: CellId) -> Result<Vec<CellId>> {
        match cell.lattice {
            Lattice::Primal => {
                self.check(cell.kind, cell.index)?;
                let (kind, cells): (CellKind, &[usize]) = match cell.kind {
                    CellKind::Vertex => return Ok(Vec::new()),
                    CellKind::Edge => (CellKind::Vertex, self.vertices_of_edge(cell.index)?),
                    CellKind::Face => (CellKind::Edge, self.boundary_edges(cell.index)?),
                    CellKind::Cube => (CellKind::Face, self.faces_of_cube(cell.index)?),
                };
                Ok(cells.iter().map(|&i| CellId::primal(kind, i)).collect())
            }
            Lattice::Dual => {
                let primal = self.dual(cell)?;
                self.coboundary(primal)?
                    .into_iter()
                    .map(|c| self.dual(c))
                    .collect()
            }
        }
    }

    /// Unoriented coboundary of a primal cell (cells of one rank higher
    /// containing it).
    pub fn coboundary(&self, cell: CellId) -> Result<Vec<CellId>> {
        if cell.lattice != Lattice::Primal {
            return Err(Error::InvalidSpec(
                "coboundary is defined on primal cells".into(),
            ));
        }
        self.check(cell.kind, cell.index)?;
        let (kind, cells): (CellKind, &[usize]) = match cell.kind {
            CellKind::Vertex => (CellKind::Edge, self.star(cell.index)?),
            CellKind::Edge => (CellKind::Face, self.faces_of_edge(cell.index)?),
            CellKind::Face => (CellKind::Cube, self.cubes_of_face(cell.index)?),
            CellKind::Cube => return Ok(Vec::new()),
        };
        Ok(cells.iter().map(|&i| CellId::primal(kind, i)).collect())
    }

    /// Direct ↔ dual correspondence. A primal k-cell maps to the dual
    /// (dim−k)-cell centered on it, with the same index, and vice versa.
    pub fn dual(&self, cell: CellId) -> Result<CellId> {
        if cell.kind.rank() > self.dimension {
            return Err(Error::UnknownCell {
                kind: cell.kind,
                index: cell.index,
                count: 0,
            });
        }
        let kind =
            CellKind::from_rank(self.dimension - cell.kind.rank()).expect("rank within dimension");
        let (primal_kind, lattice) = match cell.lattice {
            Lattice::Primal => (cell.kind, Lattice::Dual),
            Lattice::Dual => (kind, Lattice::Primal),
        };
        let count = self.count(primal_kind);
        if cell.index >= count {
            return Err(Error::UnknownCell {
                kind: cell.kind,
                index: cell.index,
                count,
            });
        }
        Ok(CellId {
            lattice,
            kind,
            index: cell.index,
        })
    }

    /// True if the two edges share an endpoint.
    pub fn edges_touch(&self, a: usize, b: usize) -> Result<bool> {
        let va = self.vertices_of_edge(a)?;
        let vb = self.vertices_of_edge(b)?;
        Ok(va.iter().any(|v| vb.contains(v)))
    }

    /// True if the two edges lie on a common face.
    pub fn edges_share_face(&self, a: usize, b: usize) -> Result<bool> {
        let fa = self.faces_of_edge(a)?;
        let fb = self.faces_of_edge(b)?;
        Ok(fa.iter().any(|f| fb.contains(f)))
    }

    /// True if `u` and `v` are joined by an edge.
    pub fn vertices_adjacent(&self, u: usize, v: usize) -> Result<bool> {
        self.check(CellKind::Vertex, v)?;
        Ok(self
            .star(u)?
            .iter()
            .any(|&e| self.vertices_of_edge[2 * e..2 * e + 2].contains(&v)))
    }
}
