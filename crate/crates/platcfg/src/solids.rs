//! Canonical geometry and combinatorics of the five Platonic solids.
//!
//! # Purpose
//!
//! Provides the solids at unit circumradius in fixed, symmetric
//! coordinate frames, their parameter vectors (v, e, f, d, m), their
//! rotation axes, concentric scaling, per-face reference frames for motif
//! placement, barycentric triangulation, and vertex truncation.
//!
//! # Why
//!
//! The constructions downstream never *search* for geometry: all group
//! matrices and face frames are derived from these closed-form vertex
//! sets, which keeps every geometric predicate well-conditioned at the
//! default tolerance of 1e-9.

use nalgebra::{Matrix2, Matrix3x2, Vector2, Vector3};
use thiserror::Error;

use crate::EPS;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors from solid construction and frame queries.
#[derive(Debug, Error)]
pub enum SolidError {
    /// A scale factor must be strictly positive.
    #[error("non-positive scale factor {0}")]
    NonPositiveScale(f64),
    /// Face index out of range.
    #[error("face index {index} out of range (face count {count})")]
    BadFaceIndex { index: usize, count: usize },
    /// The requested frame does not map the reference polygon onto the
    /// face (gonality mismatch or degenerate face).
    #[error("face frame construction failed: {0}")]
    BadFrame(String),
    /// Unknown solid name in a textual context (CLI, documents).
    #[error("unknown solid kind '{0}'")]
    UnknownKind(String),
}

// ---------------------------------------------------------------------------
// Kinds and parameters
// ---------------------------------------------------------------------------

/// The five Platonic solids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolidKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl SolidKind {
    /// All five kinds, in canonical order.
    pub const ALL: [SolidKind; 5] = [
        SolidKind::Tetrahedron,
        SolidKind::Cube,
        SolidKind::Octahedron,
        SolidKind::Dodecahedron,
        SolidKind::Icosahedron,
    ];

    /// Lower-case name used in documents and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Cube => "cube",
            SolidKind::Octahedron => "octahedron",
            SolidKind::Dodecahedron => "dodecahedron",
            SolidKind::Icosahedron => "icosahedron",
        }
    }

    /// One-letter abbreviation (T, C, O, D, I).
    pub fn letter(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "T",
            SolidKind::Cube => "C",
            SolidKind::Octahedron => "O",
            SolidKind::Dodecahedron => "D",
            SolidKind::Icosahedron => "I",
        }
    }

    /// Parse a kind from its full name, one-letter abbreviation, or any
    /// unambiguous lowercase prefix.
    pub fn parse(s: &str) -> Result<SolidKind, SolidError> {
        let t = s.trim().to_ascii_lowercase();
        for kind in SolidKind::ALL {
            if t == kind.name() || t == kind.letter().to_ascii_lowercase() {
                return Ok(kind);
            }
        }
        Err(SolidError::UnknownKind(s.to_string()))
    }

    /// The combinatorially dual solid (used internally for face normals).
    pub fn dual(self) -> SolidKind {
        match self {
            SolidKind::Tetrahedron => SolidKind::Tetrahedron,
            SolidKind::Cube => SolidKind::Octahedron,
            SolidKind::Octahedron => SolidKind::Cube,
            SolidKind::Dodecahedron => SolidKind::Icosahedron,
            SolidKind::Icosahedron => SolidKind::Dodecahedron,
        }
    }

    /// The parameter vector (v, e, f, d, m).
    pub fn params(self) -> SolidParams {
        match self {
            SolidKind::Tetrahedron => SolidParams { v: 4, e: 6, f: 4, d: 3, m: 3 },
            SolidKind::Cube => SolidParams { v: 8, e: 12, f: 6, d: 3, m: 4 },
            SolidKind::Octahedron => SolidParams { v: 6, e: 12, f: 8, d: 4, m: 3 },
            SolidKind::Dodecahedron => SolidParams { v: 20, e: 30, f: 12, d: 3, m: 5 },
            SolidKind::Icosahedron => SolidParams { v: 12, e: 30, f: 20, d: 5, m: 3 },
        }
    }
}

/// Vertex, edge, face counts plus vertex degree and face gonality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolidParams {
    /// Vertex count.
    pub v: usize,
    /// Edge count.
    pub e: usize,
    /// Face count.
    pub f: usize,
    /// Vertex degree (edges per vertex).
    pub d: usize,
    /// Face gonality (edges per face).
    pub m: usize,
}

// ---------------------------------------------------------------------------
// Polyhedra
// ---------------------------------------------------------------------------

/// Bare vertex/edge/face combinatorics with embedded vertex coordinates.
///
/// Faces are cyclic vertex-index sequences, oriented counterclockwise as
/// seen from outside (outward orientation). Derived complexes (barycentric
/// triangulations, truncations) are also expressed as `Polyhedron`.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    /// Vertex coordinates.
    pub vertices: Vec<Vector3<f64>>,
    /// Edges as sorted vertex-index pairs, lexicographically ordered.
    pub edges: Vec<[usize; 2]>,
    /// Faces as outward-oriented cyclic vertex-index sequences.
    pub faces: Vec<Vec<usize>>,
}

impl Polyhedron {
    /// Gonality of face `i`.
    pub fn face_gonality(&self, i: usize) -> usize {
        self.faces[i].len()
    }

    /// Centroid of face `i`.
    pub fn face_centroid(&self, i: usize) -> Vector3<f64> {
        let mut c = Vector3::zeros();
        for &v in &self.faces[i] {
            c += self.vertices[v];
        }
        c / self.faces[i].len() as f64
    }

    /// Outward unit normal of face `i` (faces here always surround the
    /// origin, so the centroid direction points outward).
    pub fn face_normal(&self, i: usize) -> Vector3<f64> {
        self.face_centroid(i).normalize()
    }

    /// Degree of each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            deg[e[0]] += 1;
            deg[e[1]] += 1;
        }
        deg
    }

    /// Recompute the edge list from the face cycles.
    fn edges_from_faces(faces: &[Vec<usize>]) -> Vec<[usize; 2]> {
        let mut set: Vec<[usize; 2]> = Vec::new();
        for face in faces {
            let n = face.len();
            for i in 0..n {
                let (a, b) = (face[i], face[(i + 1) % n]);
                let key = [a.min(b), a.max(b)];
                if !set.contains(&key) {
                    set.push(key);
                }
            }
        }
        set.sort();
        set
    }
}

/// A rotation axis of a solid: unit direction (sign-canonical, the axis
/// and its negation are identified) and maximal rotation order.
#[derive(Debug, Clone, Copy)]
pub struct Axis {
    /// Unit direction with canonical sign (first nonzero component > 0).
    pub direction: Vector3<f64>,
    /// Maximal rotation order about this axis (2, 3, 4 or 5).
    pub order: usize,
}

/// A Platonic solid at unit circumradius, with parameters and axes.
#[derive(Debug, Clone)]
pub struct PlatonicSolid {
    /// Which of the five solids this is.
    pub kind: SolidKind,
    /// The (v, e, f, d, m) parameter vector.
    pub params: SolidParams,
    /// Vertex/edge/face data.
    pub shape: Polyhedron,
    /// Rotation axes, each listed once.
    pub axes: Vec<Axis>,
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

fn cyclic_perms(p: [f64; 3]) -> [Vector3<f64>; 3] {
    [
        Vector3::new(p[0], p[1], p[2]),
        Vector3::new(p[2], p[0], p[1]),
        Vector3::new(p[1], p[2], p[0]),
    ]
}

/// Canonical unit-circumradius vertex coordinates for `kind`.
fn canonical_vertices(kind: SolidKind) -> Vec<Vector3<f64>> {
    let s3 = 3f64.sqrt();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    match kind {
        // Alternating cube corners with positive coordinate product.
        SolidKind::Tetrahedron => vec![
            Vector3::new(1.0, 1.0, 1.0) / s3,
            Vector3::new(1.0, -1.0, -1.0) / s3,
            Vector3::new(-1.0, 1.0, -1.0) / s3,
            Vector3::new(-1.0, -1.0, 1.0) / s3,
        ],
        SolidKind::Cube => {
            let mut v = Vec::new();
            for &x in &[1.0, -1.0] {
                for &y in &[1.0, -1.0] {
                    for &z in &[1.0, -1.0] {
                        v.push(Vector3::new(x, y, z) / s3);
                    }
                }
            }
            v
        }
        SolidKind::Octahedron => vec![
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(-1.0, 0.0, 0.0),
            Vector3::new(0.0, 1.0, 0.0),
            Vector3::new(0.0, -1.0, 0.0),
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.0, 0.0, -1.0),
        ],
        // Cyclic permutations of (0, ±1, ±phi), normalized.
        SolidKind::Icosahedron => {
            let r = (1.0 + phi * phi).sqrt();
            let mut v = Vec::new();
            for &a in &[1.0, -1.0] {
                for &b in &[phi, -phi] {
                    for p in cyclic_perms([0.0, a, b]) {
                        v.push(p / r);
                    }
                }
            }
            v
        }
        // Cube corners plus cyclic permutations of (0, ±phi, ±1/phi);
        // both families have norm sqrt(3). This permutation family is
        // the one dual-aligned with the icosahedron above: each solid's
        // face normals are the other's vertex directions.
        SolidKind::Dodecahedron => {
            let mut v = Vec::new();
            for &x in &[1.0, -1.0] {
                for &y in &[1.0, -1.0] {
                    for &z in &[1.0, -1.0] {
                        v.push(Vector3::new(x, y, z) / s3);
                    }
                }
            }
            for &a in &[phi, -phi] {
                for &b in &[1.0, -1.0] {
                    for p in cyclic_perms([0.0, a, b / phi]) {
                        v.push(p / s3);
                    }
                }
            }
            v
        }
    }
}

/// Face normal directions: the vertex directions of the dual solid
/// (negated for the tetrahedron, whose faces oppose its vertices).
fn face_normals(kind: SolidKind) -> Vec<Vector3<f64>> {
    match kind {
        SolidKind::Tetrahedron => canonical_vertices(SolidKind::Tetrahedron)
            .into_iter()
            .map(|v| -v)
            .collect(),
        k => canonical_vertices(k.dual())
            .into_iter()
            .map(|v| v.normalize())
            .collect(),
    }
}

/// Indices of `points` sorted counterclockwise about unit axis `n`
/// (right-handed, i.e. counterclockwise seen from outside for an outward
/// axis), starting from the smallest index on the cycle.
fn angle_order(points: &[(usize, Vector3<f64>)], n: Vector3<f64>) -> Vec<usize> {
    // Reference direction perpendicular to n.
    let seed = points[0].1 - points[0].1.dot(&n) * n;
    let u = seed.normalize();
    let w = n.cross(&u);
    let mut with_angle: Vec<(f64, usize)> = points
        .iter()
        .map(|&(i, p)| {
            let q = p - p.dot(&n) * n;
            (q.dot(&w).atan2(q.dot(&u)), i)
        })
        .collect();
    with_angle.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let cycle: Vec<usize> = with_angle.into_iter().map(|(_, i)| i).collect();
    // Canonical start: rotate the cycle so the smallest index comes first.
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(k, _)| k)
        .unwrap();
    (0..cycle.len()).map(|k| cycle[(start + k) % cycle.len()]).collect()
}

/// Construct the canonical solid of the given kind: unit circumradius,
/// outward-oriented faces, deduplicated axes.
pub fn make_solid(kind: SolidKind) -> PlatonicSolid {
    let params = kind.params();
    let vertices = canonical_vertices(kind);
    debug_assert_eq!(vertices.len(), params.v);

    // Faces: for each face normal, the m vertices with maximal dot
    // product, ordered counterclockwise about the normal.
    let mut faces = Vec::new();
    for n in face_normals(kind) {
        let mut dots: Vec<(usize, f64)> =
            vertices.iter().enumerate().map(|(i, v)| (i, v.dot(&n))).collect();
        dots.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let top: Vec<(usize, Vector3<f64>)> = dots[..params.m]
            .iter()
            .map(|&(i, _)| (i, vertices[i]))
            .collect();
        // Sanity: the selected vertices are coplanar at a common height.
        let h = top[0].1.dot(&n);
        debug_assert!(
            top.iter().all(|&(_, p)| (p.dot(&n) - h).abs() < 1e-9),
            "non-coplanar face selection on {} normal {:?}",
            kind.name(),
            n
        );
        faces.push(angle_order(&top, n));
    }
    faces.sort();
    let edges = Polyhedron::edges_from_faces(&faces);
    debug_assert_eq!(edges.len(), params.e);
    let shape = Polyhedron { vertices, edges, faces };

    // Axes: face axes (order m), vertex axes (order d), edge axes
    // (order 2); opposite directions identified, duplicates keep the
    // larger order (tetrahedron vertex and face axes coincide).
    let mut axes: Vec<Axis> = Vec::new();
    let push_axis = |dir: Vector3<f64>, order: usize, axes: &mut Vec<Axis>| {
        let d = canonical_sign(dir.normalize());
        for a in axes.iter_mut() {
            if (a.direction - d).amax() < 1e-9 {
                a.order = a.order.max(order);
                return;
            }
        }
        axes.push(Axis { direction: d, order });
    };
    for i in 0..shape.faces.len() {
        push_axis(shape.face_centroid(i), params.m, &mut axes);
    }
    for v in &shape.vertices {
        push_axis(*v, params.d, &mut axes);
    }
    for e in &shape.edges {
        push_axis((shape.vertices[e[0]] + shape.vertices[e[1]]) / 2.0, 2, &mut axes);
    }
    axes.sort_by(|a, b| {
        b.order.cmp(&a.order).then_with(|| {
            let ka = quant_key(a.direction);
            let kb = quant_key(b.direction);
            ka.cmp(&kb)
        })
    });

    PlatonicSolid { kind, params, shape, axes }
}

/// Flip the sign so the first component larger than 1e-9 in absolute
/// value is positive.
pub(crate) fn canonical_sign(v: Vector3<f64>) -> Vector3<f64> {
    for k in 0..3 {
        if v[k].abs() > 1e-9 {
            return if v[k] < 0.0 { -v } else { v };
        }
    }
    v
}

fn quant_key(v: Vector3<f64>) -> [i64; 3] {
    [
        (v[0] * 1e9).round() as i64,
        (v[1] * 1e9).round() as i64,
        (v[2] * 1e9).round() as i64,
    ]
}

/// Scale a solid concentrically by `factor` (> 0). Combinatorics and axes
/// are unchanged.
pub fn scale_solid(solid: &PlatonicSolid, factor: f64) -> Result<PlatonicSolid, SolidError> {
    if factor.is_nan() || factor <= 0.0 {
        return Err(SolidError::NonPositiveScale(factor));
    }
    let mut out = solid.clone();
    for v in &mut out.shape.vertices {
        *v *= factor;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Face frames
// ---------------------------------------------------------------------------

/// Affine map from the 2D reference m-gon (circumradius 1, centered at
/// the origin, vertex 0 on the +x axis, vertex i at angle 2·pi·i/m) onto
/// a face of a polyhedron at a given layer scale.
///
/// For the regular faces of a Platonic solid this is a similarity
/// (isometry up to one uniform scale); for triangles of a barycentric
/// subdivision it is a general affine map, which still preserves
/// collinearity and edge parameters exactly.
#[derive(Debug, Clone)]
pub struct FaceFrame {
    linear: Matrix3x2<f64>,
    offset: Vector3<f64>,
    scale: f64,
}

impl FaceFrame {
    /// Map a 2D reference point into 3D.
    pub fn apply(&self, p: Vector2<f64>) -> Vector3<f64> {
        (self.linear * p + self.offset) * self.scale
    }
}

/// Position of reference vertex `i` of the reference m-gon.
pub fn reference_vertex(m: usize, i: usize) -> Vector2<f64> {
    let a = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
    Vector2::new(a.cos(), a.sin())
}

/// Point at parameter `t` on directed reference edge `i` (from vertex i
/// to vertex i+1).
pub fn reference_edge_point(m: usize, i: usize, t: f64) -> Vector2<f64> {
    let a = reference_vertex(m, i);
    let b = reference_vertex(m, (i + 1) % m);
    a + (b - a) * t
}

/// Build the frame mapping the reference m-gon onto face `face_index` of
/// `shape`, scaled by `layer_scale`. Reference vertex i maps onto the
/// face's i-th vertex.
pub fn face_frame(
    shape: &Polyhedron,
    face_index: usize,
    layer_scale: f64,
) -> Result<FaceFrame, SolidError> {
    if face_index >= shape.faces.len() {
        return Err(SolidError::BadFaceIndex { index: face_index, count: shape.faces.len() });
    }
    let face = &shape.faces[face_index];
    let m = face.len();
    if m < 3 {
        return Err(SolidError::BadFrame(format!("degenerate face of size {m}")));
    }
    // Solve the affine map from reference vertices 0,1,2 and check the
    // rest (exact for triangles; regular faces satisfy it by symmetry).
    let r0 = reference_vertex(m, 0);
    let r1 = reference_vertex(m, 1);
    let r2 = reference_vertex(m, 2);
    let f0 = shape.vertices[face[0]];
    let f1 = shape.vertices[face[1]];
    let f2 = shape.vertices[face[2]];
    let basis = Matrix2::from_columns(&[r1 - r0, r2 - r0]);
    let inv = basis
        .try_inverse()
        .ok_or_else(|| SolidError::BadFrame("singular reference basis".into()))?;
    let cols = Matrix3x2::from_columns(&[f1 - f0, f2 - f0]);
    let linear = cols * inv;
    let offset = f0 - linear * r0;
    let frame = FaceFrame { linear, offset, scale: layer_scale };
    for (k, &vi) in face.iter().enumerate().skip(3) {
        let im = frame.apply(reference_vertex(m, k));
        let err = (im - shape.vertices[vi] * layer_scale).amax();
        if err > 1e-7 {
            return Err(SolidError::BadFrame(format!(
                "reference vertex {k} misses face vertex by {err:.2e} (non-affine face)"
            )));
        }
    }
    Ok(frame)
}

// ---------------------------------------------------------------------------
// Derived complexes: triangulation and truncation
// ---------------------------------------------------------------------------

/// Barycentric face split: every m-gonal face becomes m triangles sharing
/// the appended face center. Lets triangular motifs be placed on the cube
/// and dodecahedron.
pub fn triangulate_faces(shape: &Polyhedron) -> Polyhedron {
    let mut vertices = shape.vertices.clone();
    let mut faces = Vec::new();
    for (fi, face) in shape.faces.iter().enumerate() {
        let c = shape.face_centroid(fi);
        let ci = vertices.len();
        vertices.push(c);
        let n = face.len();
        for i in 0..n {
            faces.push(vec![face[i], face[(i + 1) % n], ci]);
        }
    }
    let edges = Polyhedron::edges_from_faces(&faces);
    Polyhedron { vertices, edges, faces }
}

/// Vertex truncation producing a polyhedron with all vertices 3-valent.
/// Solids that are already trivalent (tetrahedron, cube, dodecahedron)
/// are returned unchanged. Truncation depth is 1/3 of edge length: any
/// depth in (0, 1/2) yields the same combinatorics.
pub fn truncate_to_trivalent(solid: &PlatonicSolid) -> Polyhedron {
    if solid.params.d == 3 {
        return solid.shape.clone();
    }
    let shape = &solid.shape;
    let mut vertices: Vec<Vector3<f64>> = Vec::new();
    // New vertex per directed edge (a, b): a + (b - a)/3.
    let mut index: Vec<((usize, usize), usize)> = Vec::new();
    let mut id_of = |a: usize, b: usize, vertices: &mut Vec<Vector3<f64>>| -> usize {
        if let Some(&(_, id)) = index.iter().find(|&&((x, y), _)| (x, y) == (a, b)) {
            return id;
        }
        let p = shape.vertices[a] + (shape.vertices[b] - shape.vertices[a]) / 3.0;
        vertices.push(p);
        index.push(((a, b), vertices.len() - 1));
        vertices.len() - 1
    };
    let mut faces: Vec<Vec<usize>> = Vec::new();
    // Shrunk original faces: 2m-gons.
    for face in &shape.faces {
        let n = face.len();
        let mut cyc = Vec::with_capacity(2 * n);
        for i in 0..n {
            let (a, b) = (face[i], face[(i + 1) % n]);
            cyc.push(id_of(a, b, &mut vertices));
            cyc.push(id_of(b, a, &mut vertices));
        }
        faces.push(cyc);
    }
    // Vertex faces: d-gons of the cut corners, outward-oriented.
    for (v, vert) in shape.vertices.iter().enumerate() {
        let neighbors: Vec<usize> = shape
            .edges
            .iter()
            .filter_map(|e| {
                if e[0] == v {
                    Some(e[1])
                } else if e[1] == v {
                    Some(e[0])
                } else {
                    None
                }
            })
            .collect();
        let pts: Vec<(usize, Vector3<f64>)> = neighbors
            .iter()
            .map(|&n| {
                let id = id_of(v, n, &mut vertices);
                (id, vertices[id])
            })
            .collect();
        faces.push(angle_order(&pts, vert.normalize()));
    }
    let edges = Polyhedron::edges_from_faces(&faces);
    Polyhedron { vertices, edges, faces }
}

// ---------------------------------------------------------------------------
// Layer specifications
// ---------------------------------------------------------------------------

/// Ordered scale factors of concentric layers, outermost first.
#[derive(Debug, Clone)]
pub struct LayerSpec {
    /// Strictly decreasing positive scale factors.
    pub scales: Vec<f64>,
}

impl LayerSpec {
    /// Default geometric layer scales 1, 0.8, 0.64, ... — any strictly
    /// decreasing positive scales give the same combinatorics; these keep
    /// unintended-incidence warnings quiet.
    pub fn geometric(layers: usize) -> LayerSpec {
        let scales = (0..layers).map(|k| 0.8f64.powi(k as i32)).collect();
        LayerSpec { scales }
    }

    /// Validate positivity and strict decrease.
    pub fn is_valid(&self) -> bool {
        !self.scales.is_empty()
            && self.scales.iter().all(|&s| s > 0.0)
            && self.scales.windows(2).all(|w| w[0] > w[1] + EPS)
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_match_reference_table() {
        let expect = [
            (SolidKind::Tetrahedron, (4, 6, 4, 3, 3)),
            (SolidKind::Cube, (8, 12, 6, 3, 4)),
            (SolidKind::Octahedron, (6, 12, 8, 4, 3)),
            (SolidKind::Dodecahedron, (20, 30, 12, 3, 5)),
            (SolidKind::Icosahedron, (12, 30, 20, 5, 3)),
        ];
        for (kind, (v, e, f, d, m)) in expect {
            let p = kind.params();
            assert_eq!((p.v, p.e, p.f, p.d, p.m), (v, e, f, d, m), "{kind:?}");
            assert_eq!(p.v + p.f, p.e + 2, "Euler for {kind:?}");
            assert_eq!(p.d * p.v, 2 * p.e);
            assert_eq!(p.m * p.f, 2 * p.e);
        }
    }

    #[test]
    fn solids_are_unit_circumradius_with_regular_faces() {
        for kind in SolidKind::ALL {
            let s = make_solid(kind);
            assert_eq!(s.shape.vertices.len(), s.params.v);
            assert_eq!(s.shape.edges.len(), s.params.e);
            assert_eq!(s.shape.faces.len(), s.params.f);
            for v in &s.shape.vertices {
                assert!((v.norm() - 1.0).abs() < EPS, "{kind:?} vertex norm");
            }
            // All edges equal length.
            let lens: Vec<f64> = s
                .shape
                .edges
                .iter()
                .map(|e| (s.shape.vertices[e[0]] - s.shape.vertices[e[1]]).norm())
                .collect();
            for l in &lens {
                assert!((l - lens[0]).abs() < EPS, "{kind:?} edge lengths");
            }
            // Every face planar and regular: vertices equidistant from
            // centroid and consecutive-edge lengths equal.
            for (fi, face) in s.shape.faces.iter().enumerate() {
                assert_eq!(face.len(), s.params.m);
                let c = s.shape.face_centroid(fi);
                let n = s.shape.face_normal(fi);
                let r0 = (s.shape.vertices[face[0]] - c).norm();
                for &vi in face {
                    let p = s.shape.vertices[vi];
                    assert!((p - c).dot(&n).abs() < EPS, "{kind:?} face planarity");
                    assert!(((p - c).norm() - r0).abs() < EPS, "{kind:?} face regularity");
                }
            }
        }
    }

    #[test]
    fn axis_inventory() {
        // Axis counts per kind: tetrahedron 4x3 + 3x2; cube/octahedron
        // 3x4 + 4x3 + 6x2; dodecahedron/icosahedron 6x5 + 10x3 + 15x2.
        let expect: [(SolidKind, &[(usize, usize)]); 5] = [
            (SolidKind::Tetrahedron, &[(3, 4), (2, 3)]),
            (SolidKind::Cube, &[(4, 3), (3, 4), (2, 6)]),
            (SolidKind::Octahedron, &[(4, 3), (3, 4), (2, 6)]),
            (SolidKind::Dodecahedron, &[(5, 6), (3, 10), (2, 15)]),
            (SolidKind::Icosahedron, &[(5, 6), (3, 10), (2, 15)]),
        ];
        for (kind, counts) in expect {
            let s = make_solid(kind);
            for &(order, count) in counts {
                let got = s.axes.iter().filter(|a| a.order == order).count();
                assert_eq!(got, count, "{kind:?} axes of order {order}");
            }
            let total: usize = counts.iter().map(|&(_, c)| c).sum();
            assert_eq!(s.axes.len(), total, "{kind:?} total axes");
        }
    }

    #[test]
    fn scaling_is_linear_and_invertible() {
        let s = make_solid(SolidKind::Cube);
        let half = scale_solid(&s, 0.5).unwrap();
        assert!((half.shape.vertices[0].norm() - 0.5).abs() < EPS);
        let back = scale_solid(&half, 2.0).unwrap();
        for (a, b) in back.shape.vertices.iter().zip(&s.shape.vertices) {
            assert!((a - b).amax() < EPS);
        }
        assert!(scale_solid(&s, 0.0).is_err());
        assert!(scale_solid(&s, -1.0).is_err());
    }

    #[test]
    fn face_frames_hit_face_vertices_and_centroids() {
        for kind in SolidKind::ALL {
            let s = make_solid(kind);
            for fi in 0..s.shape.faces.len() {
                let frame = face_frame(&s.shape, fi, 1.0).unwrap();
                let m = s.params.m;
                for (k, &vi) in s.shape.faces[fi].iter().enumerate() {
                    let im = frame.apply(reference_vertex(m, k));
                    assert!((im - s.shape.vertices[vi]).amax() < EPS, "{kind:?} f{fi} v{k}");
                }
                let c = frame.apply(Vector2::zeros());
                assert!((c - s.shape.face_centroid(fi)).amax() < EPS);
            }
        }
        assert!(face_frame(&make_solid(SolidKind::Cube).shape, 99, 1.0).is_err());
    }

    #[test]
    fn adjacent_face_frames_reverse_shared_edges() {
        // For every edge shared by two faces, the two frames traverse it
        // in opposite directions: parameter t on one side meets 1 - t on
        // the other.
        for kind in SolidKind::ALL {
            let s = make_solid(kind);
            let m = s.params.m;
            for e in &s.shape.edges {
                let owners: Vec<(usize, usize)> = s
                    .shape
                    .faces
                    .iter()
                    .enumerate()
                    .filter_map(|(fi, face)| {
                        let n = face.len();
                        (0..n).find(|&i| {
                            (face[i] == e[0] && face[(i + 1) % n] == e[1])
                                || (face[i] == e[1] && face[(i + 1) % n] == e[0])
                        })
                        .map(|i| (fi, i))
                    })
                    .collect();
                assert_eq!(owners.len(), 2, "{kind:?} edge must border two faces");
                let t = 0.3;
                let p0 = face_frame(&s.shape, owners[0].0, 1.0)
                    .unwrap()
                    .apply(reference_edge_point(m, owners[0].1, t));
                let p1 = face_frame(&s.shape, owners[1].0, 1.0)
                    .unwrap()
                    .apply(reference_edge_point(m, owners[1].1, 1.0 - t));
                assert!((p0 - p1).amax() < EPS, "{kind:?} shared edge orientation");
            }
        }
    }

    #[test]
    fn triangulation_counts() {
        let d = make_solid(SolidKind::Dodecahedron);
        let td = triangulate_faces(&d.shape);
        assert_eq!(td.faces.len(), 60);
        assert_eq!(td.vertices.len(), 20 + 12);
        assert_eq!(td.edges.len(), 30 + 60);
        let c = make_solid(SolidKind::Cube);
        let tc = triangulate_faces(&c.shape);
        assert_eq!(tc.faces.len(), 24);
        assert_eq!(tc.edges.len(), 12 + 24);
        let t = make_solid(SolidKind::Tetrahedron);
        assert_eq!(triangulate_faces(&t.shape).faces.len(), 12);
    }

    #[test]
    fn truncation_yields_trivalent_vertices() {
        let t = make_solid(SolidKind::Tetrahedron);
        let tt = truncate_to_trivalent(&t);
        assert_eq!(tt.vertices.len(), t.shape.vertices.len(), "already trivalent");

        let o = make_solid(SolidKind::Octahedron);
        let to = truncate_to_trivalent(&o);
        assert_eq!(to.vertices.len(), 24);
        assert_eq!(to.faces.len(), 8 + 6);
        assert_eq!(to.edges.len(), 36);
        // Euler check and trivalence.
        assert_eq!(to.vertices.len() + to.faces.len(), to.edges.len() + 2);
        assert!(to.vertex_degrees().iter().all(|&d| d == 3));

        let i = make_solid(SolidKind::Icosahedron);
        let ti = truncate_to_trivalent(&i);
        assert_eq!(ti.vertices.len(), 60);
        assert!(ti.vertex_degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn layer_spec_defaults() {
        let l = LayerSpec::geometric(3);
        assert!(l.is_valid());
        assert!((l.scales[1] - 0.8).abs() < EPS);
        assert!(!LayerSpec { scales: vec![1.0, 1.0] }.is_valid());
    }
}
