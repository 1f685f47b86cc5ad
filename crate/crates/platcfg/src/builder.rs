//! Assembly engine: motif placement, gluing, and valence-raising
//! augmentations.
//!
//! # Purpose
//!
//! Turns a validated planar motif into a spatial configuration: one
//! motif copy per face (per layer), identification of coincident staged
//! points into shared configuration points, and ordered augmentations —
//! solid-edge lines, radial lines, antipodal lines, optional center
//! point — plus placement of web motifs on planes spanned by adjacent
//! symmetry axes.
//!
//! # Why
//!
//! Gluing is combinatorial with a geometric witness: staged points
//! merge exactly when coincident within the build tolerance, and every
//! merged line is re-fit and its residual checked, so a motif anchor
//! transcribed wrong fails loudly at build time instead of producing a
//! silently broken incidence structure. Ids are assigned by sorting on
//! stable keys so identical inputs always produce identical documents.

use std::collections::HashMap;

use nalgebra::{Vector2, Vector3};
use thiserror::Error;

use crate::incidence::{
    fit_line, ConfigLine, ConfigMeta, ConfigPoint, GeometricConfiguration, LineKind, Provenance,
};
use crate::motif::{Anchor, Motif, MotifError};
use crate::solids::{
    face_frame, make_solid, triangulate_faces, LayerSpec, PlatonicSolid, Polyhedron, SolidError,
    SolidKind,
};

/// Errors from placement, gluing, and augmentation.
#[derive(Debug, Error)]
pub enum BuildError {
    /// Motif gonality does not match a target face.
    #[error("gonality mismatch: motif has m={motif} but face {face} has {gonality} vertices")]
    GonalityMismatch { motif: usize, face: usize, gonality: usize },
    /// Underlying motif problem.
    #[error(transparent)]
    Motif(#[from] MotifError),
    /// Underlying solid problem.
    #[error(transparent)]
    Solid(#[from] SolidError),
    /// Gluing merged points into a line that is not straight.
    #[error("merged line {line} not collinear (residual {residual:.3e})")]
    NonCollinearMerge { line: usize, residual: f64 },
    /// An augmentation produced a line with fewer than two points.
    #[error("augmentation produced a short line: {0}")]
    ShortLine(String),
    /// Radial lines need several layers or an included center point.
    #[error("radial lines need at least two layers or include_center")]
    NeedLayersOrCenter,
    /// Antipodal lines only exist on centrally symmetric solids.
    #[error("antipodal lines need a centrally symmetric solid, not {0}")]
    NotCentrallySymmetric(String),
    /// A selected point's antipode is not among the selected points.
    #[error("selected point {0} has no selected antipode")]
    MissingAntipode(usize),
    /// The face adjacency graph is not bipartite.
    #[error("faces are not two-colorable")]
    NotTwoColorable,
    /// A web motif axis anchor did not land on its axis.
    #[error("axis anchor (motif point {point}) lies off its axis")]
    AxisAnchorOffAxis { point: usize },
    /// A web motif axis anchor is not 1-valent.
    #[error("axis anchor (motif point {point}) must be 1-valent, has valence {valence}")]
    AxisAnchorValence { point: usize, valence: usize },
}

// ---------------------------------------------------------------------------
// Count prediction
// ---------------------------------------------------------------------------

/// Per-element contribution counts of a one-layer face placement:
/// points per vertex / edge interior / face interior, lines per edge /
/// per face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountSpec {
    /// Points per solid vertex (0 or 1).
    pub x: usize,
    /// Points per edge interior.
    pub y: usize,
    /// Points per face interior.
    pub z: usize,
    /// Lines per edge (0 or 1).
    pub u: usize,
    /// Lines per face.
    pub vv: usize,
}

/// Total point and line counts of a one-layer build described by `spec`
/// on a solid with the given element counts:
/// p = x·v + y·e + z·f and l = u·e + vv·f.
pub fn predict_counts(params: &crate::solids::SolidParams, spec: &CountSpec) -> (usize, usize) {
    let p = spec.x * params.v + spec.y * params.e + spec.z * params.f;
    let l = spec.u * params.e + spec.vv * params.f;
    (p, l)
}

// ---------------------------------------------------------------------------
// Staging
// ---------------------------------------------------------------------------

/// A pre-glue point: raw position plus tags.
#[derive(Debug, Clone)]
pub struct StagedPoint {
    /// Raw 3D position (duplicates across copies expected).
    pub position: Vector3<f64>,
    /// Provenance tag carried into the glued point.
    pub provenance: Provenance,
    /// Layer index (center points use -1).
    pub layer: i32,
}

/// A pre-glue line over staged-point indices.
#[derive(Debug, Clone)]
pub struct StagedLine {
    /// Indices into the assembly's staged points.
    pub point_indices: Vec<usize>,
    /// Line kind carried into the glued line.
    pub kind: LineKind,
}

/// The pre-glue assembly: all staged copies concatenated.
#[derive(Debug, Clone, Default)]
pub struct RawAssembly {
    /// Staged points.
    pub points: Vec<StagedPoint>,
    /// Staged lines.
    pub lines: Vec<StagedLine>,
}

impl RawAssembly {
    /// Empty assembly.
    pub fn new() -> RawAssembly {
        RawAssembly::default()
    }

    /// Append another assembly, reindexing its lines.
    pub fn merge(&mut self, other: RawAssembly) {
        let offset = self.points.len();
        self.points.extend(other.points);
        self.lines.extend(other.lines.into_iter().map(|mut l| {
            for i in &mut l.point_indices {
                *i += offset;
            }
            l
        }));
    }

    /// Re-stage an existing configuration, mapping each position and
    /// optionally retagging line kinds. Used to arrange transformed
    /// copies of a finished build into a larger assembly.
    pub fn from_config(
        config: &GeometricConfiguration,
        map: impl Fn(Vector3<f64>) -> Vector3<f64>,
        retag: impl Fn(LineKind) -> LineKind,
    ) -> RawAssembly {
        let index_of: HashMap<usize, usize> =
            config.points.iter().enumerate().map(|(i, p)| (p.id, i)).collect();
        RawAssembly {
            points: config
                .points
                .iter()
                .map(|p| StagedPoint {
                    position: map(p.position),
                    provenance: p.provenance,
                    layer: p.layer,
                })
                .collect(),
            lines: config
                .lines
                .iter()
                .map(|l| StagedLine {
                    point_indices: l.point_ids.iter().map(|id| index_of[id]).collect(),
                    kind: retag(l.kind),
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Placement on faces
// ---------------------------------------------------------------------------

/// Place one copy of `motif` on every face of `shape` at the given
/// layer scale. Anchors map to provenance: vertex -> Vertex, edge ->
/// EdgeInterior, interior -> FaceInterior.
pub fn place_on_faces(
    shape: &Polyhedron,
    motif: &Motif,
    layer: i32,
    scale: f64,
) -> Result<RawAssembly, BuildError> {
    motif.validate(1e-9)?;
    place_on_faces_by(shape, layer, scale, |_| motif)
}

/// Place a face-dependent motif copy on every face (all motifs must
/// already be validated and share the gonality of their face).
pub fn place_on_faces_by<'m>(
    shape: &Polyhedron,
    layer: i32,
    scale: f64,
    chooser: impl Fn(usize) -> &'m Motif,
) -> Result<RawAssembly, BuildError> {
    let mut raw = RawAssembly::new();
    for face in 0..shape.faces.len() {
        let motif = chooser(face);
        let gonality = shape.face_gonality(face);
        if motif.m != gonality {
            return Err(BuildError::GonalityMismatch { motif: motif.m, face, gonality });
        }
        let frame = face_frame(shape, face, scale)?;
        let offset = raw.points.len();
        for p in &motif.points {
            let provenance = match p.anchor {
                Anchor::Vertex(_) => Provenance::Vertex,
                Anchor::Edge(_, _) => Provenance::EdgeInterior,
                Anchor::Interior => Provenance::FaceInterior,
            };
            raw.points.push(StagedPoint { position: frame.apply(p.xy), provenance, layer });
        }
        for l in &motif.lines {
            raw.lines.push(StagedLine {
                point_indices: l.iter().map(|&i| i + offset).collect(),
                kind: LineKind::Motif,
            });
        }
    }
    Ok(raw)
}

/// Two-color the faces of `shape` by shared-edge adjacency (BFS).
/// Errors when the face adjacency graph has an odd cycle.
pub fn two_color_faces(shape: &Polyhedron) -> Result<Vec<u8>, BuildError> {
    let f = shape.faces.len();
    // Face adjacency via shared undirected edges.
    let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (fi, face) in shape.faces.iter().enumerate() {
        for k in 0..face.len() {
            let a = face[k];
            let b = face[(k + 1) % face.len()];
            edge_faces.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    let mut adjacency = vec![Vec::new(); f];
    for faces in edge_faces.values() {
        if let [a, b] = faces[..] {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    }
    let mut color = vec![u8::MAX; f];
    for start in 0..f {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &adjacency[i] {
                if color[j] == u8::MAX {
                    color[j] = 1 - color[i];
                    queue.push_back(j);
                } else if color[j] == color[i] {
                    return Err(BuildError::NotTwoColorable);
                }
            }
        }
    }
    Ok(color)
}

/// Place `motif` on color-0 faces and its mirror image on color-1
/// faces of a two-colorable face set.
pub fn place_on_faces_alternating(
    shape: &Polyhedron,
    motif: &Motif,
    layer: i32,
    scale: f64,
) -> Result<RawAssembly, BuildError> {
    motif.validate(1e-9)?;
    let color = two_color_faces(shape)?;
    let mirror = motif.mirrored();
    place_on_faces_by(shape, layer, scale, |face| {
        if color[face] == 0 {
            motif
        } else {
            &mirror
        }
    })
}

// ---------------------------------------------------------------------------
// Gluing
// ---------------------------------------------------------------------------

fn quant_position(p: &Vector3<f64>) -> [i64; 3] {
    [
        (p[0] * 1e7).round() as i64,
        (p[1] * 1e7).round() as i64,
        (p[2] * 1e7).round() as i64,
    ]
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.0[ri.max(rj)] = ri.min(rj);
        }
    }
}

/// Identify coincident staged points (within `eps`), merge lines whose
/// merged incidence sets share at least two points, re-fit every line
/// and check straightness, and assign deterministic ids.
pub fn glue(
    raw: &RawAssembly,
    eps: f64,
    meta: ConfigMeta,
) -> Result<GeometricConfiguration, BuildError> {
    let n = raw.points.len();
    let mut uf = UnionFind::new(n);
    // Coincidence detection on a coarse hash grid: candidates share a
    // cell or a neighboring one, then the exact eps test decides.
    let cell = 1e-4f64.max(eps);
    let key = |p: &Vector3<f64>| -> (i64, i64, i64) {
        (
            (p[0] / cell).floor() as i64,
            (p[1] / cell).floor() as i64,
            (p[2] / cell).floor() as i64,
        )
    };
    let mut grid: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in raw.points.iter().enumerate() {
        let (kx, ky, kz) = key(&p.position);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(bucket) = grid.get(&(kx + dx, ky + dy, kz + dz)) {
                        for &j in bucket {
                            if (raw.points[j].position - p.position).norm() <= eps {
                                uf.union(i, j);
                            }
                        }
                    }
                }
            }
        }
        grid.entry((kx, ky, kz)).or_default().push(i);
    }

    // Clusters -> provisional point records.
    let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let root = uf.find(i);
        members.entry(root).or_default().push(i);
    }
    struct Cluster {
        position: Vector3<f64>,
        provenance: Provenance,
        layer: i32,
    }
    let mut cluster_of = vec![usize::MAX; n];
    let mut clusters = Vec::new();
    let mut roots: Vec<usize> = members.keys().copied().collect();
    roots.sort_unstable();
    for root in roots {
        let idxs = &members[&root];
        let mut sum = Vector3::zeros();
        for &i in idxs {
            sum += raw.points[i].position;
        }
        let best = idxs
            .iter()
            .map(|&i| (raw.points[i].provenance.rank(), raw.points[i].layer))
            .min()
            .expect("non-empty cluster");
        let provenance = idxs
            .iter()
            .map(|&i| raw.points[i].provenance)
            .find(|p| p.rank() == best.0)
            .expect("provenance present");
        for &i in idxs {
            cluster_of[i] = clusters.len();
        }
        clusters.push(Cluster {
            position: sum / idxs.len() as f64,
            provenance,
            layer: best.1,
        });
    }

    // Lines over clusters; merge lines sharing >= 2 clusters.
    let line_sets: Vec<(Vec<usize>, LineKind)> = raw
        .lines
        .iter()
        .map(|l| {
            let mut ids: Vec<usize> = l.point_indices.iter().map(|&i| cluster_of[i]).collect();
            ids.sort_unstable();
            ids.dedup();
            (ids, l.kind)
        })
        .collect();
    let mut luf = UnionFind::new(line_sets.len());
    let mut pair_owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (li, (ids, _)) in line_sets.iter().enumerate() {
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                match pair_owner.entry((ids[a], ids[b])) {
                    std::collections::hash_map::Entry::Occupied(e) => luf.union(li, *e.get()),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(li);
                    }
                }
            }
        }
    }
    let mut merged: HashMap<usize, (Vec<usize>, LineKind)> = HashMap::new();
    for (li, set) in line_sets.iter().enumerate() {
        let root = luf.find(li);
        let (ids, kind) = set.clone();
        let entry = merged.entry(root).or_insert_with(|| (Vec::new(), kind));
        entry.0.extend(ids);
        if kind.rank() < entry.1.rank() {
            entry.1 = kind;
        }
    }

    // Deterministic point ids: sort clusters by (layer, provenance
    // rank, quantized position).
    let mut order: Vec<usize> = (0..clusters.len()).collect();
    order.sort_by_key(|&c| {
        let cl = &clusters[c];
        (cl.layer, cl.provenance.rank(), quant_position(&cl.position))
    });
    let mut id_of_cluster = vec![usize::MAX; clusters.len()];
    let mut points = Vec::with_capacity(clusters.len());
    for (id, &c) in order.iter().enumerate() {
        id_of_cluster[c] = id;
        points.push(ConfigPoint {
            id,
            position: clusters[c].position,
            provenance: clusters[c].provenance,
            layer: clusters[c].layer,
        });
    }

    // Deterministic line ids: sort by (kind rank, sorted point ids).
    let mut line_records: Vec<(Vec<usize>, LineKind)> = merged
        .into_values()
        .map(|(mut ids, kind)| {
            for c in &mut ids {
                *c = id_of_cluster[*c];
            }
            ids.sort_unstable();
            ids.dedup();
            (ids, kind)
        })
        .collect();
    line_records.sort_by(|a, b| (a.1.rank(), &a.0).cmp(&(b.1.rank(), &b.0)));

    let mut lines = Vec::with_capacity(line_records.len());
    for (id, (ids, kind)) in line_records.into_iter().enumerate() {
        let positions: Vec<Vector3<f64>> = ids.iter().map(|&i| points[i].position).collect();
        let (origin, direction, residual) = fit_line(&positions);
        if residual > eps {
            return Err(BuildError::NonCollinearMerge { line: id, residual });
        }
        let mut ordered = ids;
        ordered.sort_by(|&a, &b| {
            let pa = (points[a].position - origin).dot(&direction);
            let pb = (points[b].position - origin).dot(&direction);
            pa.partial_cmp(&pb).expect("finite projections")
        });
        lines.push(ConfigLine { id, point_ids: ordered, kind, support: (origin, direction) });
    }

    Ok(GeometricConfiguration { points, lines, meta })
}

// ---------------------------------------------------------------------------
// Point selection
// ---------------------------------------------------------------------------

/// Filters configuration points for augmentations by provenance and
/// current valence.
#[derive(Debug, Clone, Default)]
pub struct PointSelector {
    /// Admitted provenances (None = all).
    pub provenances: Option<Vec<Provenance>>,
    /// Required current valence (None = any).
    pub valence: Option<usize>,
}

impl PointSelector {
    /// Select by provenance and exact valence.
    pub fn by(provenance: Provenance, valence: usize) -> PointSelector {
        PointSelector { provenances: Some(vec![provenance]), valence: Some(valence) }
    }

    /// Select every point.
    pub fn all() -> PointSelector {
        PointSelector::default()
    }

    fn selected_ids(&self, config: &GeometricConfiguration) -> Vec<usize> {
        let valences = config.point_valences();
        config
            .points
            .iter()
            .filter(|p| {
                self.provenances.as_ref().is_none_or(|ps| ps.contains(&p.provenance))
                    && self.valence.is_none_or(|v| valences[p.id] == v)
            })
            .map(|p| p.id)
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Augmentations
// ---------------------------------------------------------------------------

fn next_line_id(config: &GeometricConfiguration) -> usize {
    config.lines.iter().map(|l| l.id + 1).max().unwrap_or(0)
}

fn next_point_id(config: &GeometricConfiguration) -> usize {
    config.points.iter().map(|p| p.id + 1).max().unwrap_or(0)
}

fn push_line(
    config: &mut GeometricConfiguration,
    mut ids: Vec<usize>,
    kind: LineKind,
) -> Result<(), BuildError> {
    ids.sort_unstable();
    ids.dedup();
    if ids.len() < 2 {
        return Err(BuildError::ShortLine(format!("{} line over {ids:?}", kind.tag())));
    }
    let positions: Vec<Vector3<f64>> = ids
        .iter()
        .map(|&i| config.points.iter().find(|p| p.id == i).expect("known id").position)
        .collect();
    let (origin, direction, _) = fit_line(&positions);
    let mut ordered = ids;
    let proj = |i: usize| {
        let p = config.points.iter().find(|p| p.id == i).expect("known id").position;
        (p - origin).dot(&direction)
    };
    ordered.sort_by(|&a, &b| proj(a).partial_cmp(&proj(b)).expect("finite projections"));
    let id = next_line_id(config);
    config.lines.push(ConfigLine { id, point_ids: ordered, kind, support: (origin, direction) });
    Ok(())
}

/// Add one SolidEdge line per edge of `shape` at the given layer's
/// scale, incident with every config point of that layer lying on the
/// edge segment within `eps`.
pub fn add_edge_lines(
    config: &GeometricConfiguration,
    shape: &Polyhedron,
    layer: i32,
    eps: f64,
) -> Result<GeometricConfiguration, BuildError> {
    let scale = *config
        .meta
        .layer_scales
        .get(layer as usize)
        .ok_or_else(|| BuildError::ShortLine(format!("no layer {layer}")))?;
    let mut out = config.clone();
    for edge in &shape.edges {
        let a = shape.vertices[edge[0]] * scale;
        let b = shape.vertices[edge[1]] * scale;
        let d = b - a;
        let len2 = d.norm_squared();
        let mut ids = Vec::new();
        for p in &config.points {
            if p.layer != layer {
                continue;
            }
            let t = (p.position - a).dot(&d) / len2;
            if !(-eps..=1.0 + eps).contains(&t) {
                continue;
            }
            if (p.position - (a + t * d)).norm() <= eps {
                ids.push(p.id);
            }
        }
        push_line(&mut out, ids, LineKind::SolidEdge)?;
    }
    Ok(out)
}

/// Group directions (optionally identifying v with -v) by clustering
/// unit vectors within a small tolerance. Returns groups of point ids.
fn direction_groups(
    config: &GeometricConfiguration,
    ids: &[usize],
    identify_antipodes: bool,
) -> Vec<Vec<usize>> {
    let mut reps: Vec<Vector3<f64>> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &id in ids {
        let p = config.points.iter().find(|p| p.id == id).expect("known id");
        let mut dir = p.position.normalize();
        if identify_antipodes {
            dir = crate::solids::canonical_sign(dir);
        }
        match reps.iter().position(|r| (r - dir).norm() < 1e-7) {
            Some(g) => groups[g].push(id),
            None => {
                reps.push(dir);
                groups.push(vec![id]);
            }
        }
    }
    groups
}

fn append_center(config: &mut GeometricConfiguration) -> usize {
    let id = next_point_id(config);
    config.points.push(ConfigPoint {
        id,
        position: Vector3::zeros(),
        provenance: Provenance::Center,
        layer: -1,
    });
    id
}

/// Join selected points sharing a ray from the origin by one Radial
/// line per ray; with `include_center` a center point is appended and
/// made incident with every radial line.
pub fn add_radial_lines(
    config: &GeometricConfiguration,
    selector: &PointSelector,
    include_center: bool,
) -> Result<GeometricConfiguration, BuildError> {
    if config.meta.layer_scales.len() < 2 && !include_center {
        return Err(BuildError::NeedLayersOrCenter);
    }
    let ids = selector.selected_ids(config);
    let groups = direction_groups(config, &ids, false);
    let mut out = config.clone();
    let center = if include_center { Some(append_center(&mut out)) } else { None };
    for mut group in groups {
        if let Some(c) = center {
            group.push(c);
        }
        push_line(&mut out, group, LineKind::Radial)?;
    }
    Ok(out)
}

/// Join each selected point with its antipode (and every other selected
/// point on the same line through the origin) by one Antipodal line.
/// Errors on the tetrahedron and whenever a selected point's antipode
/// is not itself selected.
pub fn add_antipodal_lines(
    config: &GeometricConfiguration,
    selector: &PointSelector,
    include_center: bool,
) -> Result<GeometricConfiguration, BuildError> {
    if let Ok(kind) = SolidKind::parse(&config.meta.solid) {
        if kind == SolidKind::Tetrahedron {
            return Err(BuildError::NotCentrallySymmetric(config.meta.solid.clone()));
        }
    }
    let ids = selector.selected_ids(config);
    // Antipode closure check.
    let selected: Vec<Vector3<f64>> = ids
        .iter()
        .map(|&id| config.points.iter().find(|p| p.id == id).expect("known id").position)
        .collect();
    for (k, &id) in ids.iter().enumerate() {
        let p = selected[k];
        let tol = 1e-9 * (1.0 + p.norm());
        if !selected.iter().any(|q| (q + p).norm() <= tol) {
            return Err(BuildError::MissingAntipode(id));
        }
    }
    let groups = direction_groups(config, &ids, true);
    let mut out = config.clone();
    let center = if include_center { Some(append_center(&mut out)) } else { None };
    for mut group in groups {
        if let Some(c) = center {
            group.push(c);
        }
        push_line(&mut out, group, LineKind::Antipodal)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Axis-plane web placement
// ---------------------------------------------------------------------------

/// Anchor of a web-motif point inside an axis-pair plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlaneAnchor {
    /// On the first axis at the given radius (shared between planes).
    AxisA(f64),
    /// On the second axis at the given radius.
    AxisB(f64),
    /// Strictly inside the plane sector.
    Interior,
}

/// One web-motif point: coordinates in the (axis-a, axis-b) basis.
#[derive(Debug, Clone)]
pub struct PlaneMotifPoint {
    /// Coefficients (alpha, beta): position = alpha*a + beta*b.
    pub ab: Vector2<f64>,
    /// Anchor.
    pub anchor: PlaneAnchor,
}

/// A planar web motif placed on planes spanned by adjacent axis pairs.
#[derive(Debug, Clone)]
pub struct PlaneMotif {
    /// Name.
    pub name: String,
    /// Points.
    pub points: Vec<PlaneMotifPoint>,
    /// Lines over point indices.
    pub lines: Vec<Vec<usize>>,
}

/// All unordered pairs of solid axes with the given rotation order.
pub fn axis_pairs(solid: &PlatonicSolid, order: usize) -> Vec<(usize, usize)> {
    let idx: Vec<usize> = solid
        .axes
        .iter()
        .enumerate()
        .filter(|(_, a)| a.order == order)
        .map(|(i, _)| i)
        .collect();
    let mut pairs = Vec::new();
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            pairs.push((idx[i], idx[j]));
        }
    }
    pairs
}

/// Place one copy of `motif` in the plane spanned by each selected
/// axis pair. On-axis anchor points land at their configured radii and
/// merge between planes sharing the axis; with `include_axis_lines`,
/// each axis holding at least two web points becomes an AxisLine.
pub fn place_on_axis_planes(
    solid: &PlatonicSolid,
    motif: &PlaneMotif,
    pairs: &[(usize, usize)],
    include_axis_lines: bool,
    eps: f64,
) -> Result<GeometricConfiguration, BuildError> {
    // Axis anchors must be 1-valent so merging raises their valence.
    for (i, p) in motif.points.iter().enumerate() {
        if matches!(p.anchor, PlaneAnchor::Interior) {
            continue;
        }
        let valence = motif.lines.iter().filter(|l| l.contains(&i)).count();
        if valence != 1 {
            return Err(BuildError::AxisAnchorValence { point: i, valence });
        }
    }
    let mut raw = RawAssembly::new();
    let mut axis_points: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(ai, bi) in pairs {
        let a = solid.axes[ai].direction;
        let b = solid.axes[bi].direction;
        let offset = raw.points.len();
        for (i, p) in motif.points.iter().enumerate() {
            let (ab, provenance, on_axis) = match p.anchor {
                PlaneAnchor::AxisA(r) => (Vector2::new(r, 0.0), Provenance::Axis, Some(ai)),
                PlaneAnchor::AxisB(r) => (Vector2::new(0.0, r), Provenance::Axis, Some(bi)),
                PlaneAnchor::Interior => (p.ab, Provenance::Free, None),
            };
            let position = ab[0] * a + ab[1] * b;
            if let Some(axis) = on_axis {
                let along = position.dot(&solid.axes[axis].direction);
                if (position - along * solid.axes[axis].direction).norm() > eps {
                    return Err(BuildError::AxisAnchorOffAxis { point: i });
                }
                axis_points.entry(axis).or_default().push(raw.points.len());
            }
            raw.points.push(StagedPoint { position, provenance, layer: 0 });
        }
        for l in &motif.lines {
            raw.lines.push(StagedLine {
                point_indices: l.iter().map(|&i| i + offset).collect(),
                kind: LineKind::Motif,
            });
        }
    }
    if include_axis_lines {
        let mut axes: Vec<usize> = axis_points.keys().copied().collect();
        axes.sort_unstable();
        for axis in axes {
            let pts = &axis_points[&axis];
            // Staged duplicates merge during glue; require two distinct radii.
            let mut radii: Vec<i64> = pts
                .iter()
                .map(|&i| (raw.points[i].position.dot(&solid.axes[axis].direction) * 1e9) as i64)
                .collect();
            radii.sort_unstable();
            radii.dedup();
            if radii.len() >= 2 {
                raw.lines.push(StagedLine { point_indices: pts.clone(), kind: LineKind::AxisLine });
            }
        }
    }
    let meta = ConfigMeta {
        name: motif.name.clone(),
        solid: solid.kind.name().to_string(),
        layer_scales: vec![1.0],
        symmetry_class: String::new(),
    };
    glue(&raw, eps, meta)
}

// ---------------------------------------------------------------------------
// Build plans
// ---------------------------------------------------------------------------

/// How motif copies are placed on the solid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// One copy per face.
    Faces,
    /// One copy per triangle of the barycentric triangulation.
    TriangulatedFaces,
    /// Copy / mirror copy alternating on a two-colored face set.
    AlternatingFaces,
    /// Alternating copies on the triangulated face set.
    AlternatingTriangulatedFaces,
}

/// One ordered augmentation step.
#[derive(Debug, Clone)]
pub enum Augmentation {
    /// Lines through the solid edges of one layer.
    EdgeLines {
        /// Layer whose scaled edges become lines.
        layer: i32,
    },
    /// Radial lines through same-ray selected points.
    RadialLines {
        /// Point filter.
        selector: PointSelector,
        /// Whether to append the center point.
        include_center: bool,
    },
    /// Antipodal lines through +/- selected points.
    AntipodalLines {
        /// Point filter.
        selector: PointSelector,
        /// Whether to append the center point.
        include_center: bool,
    },
}

/// A declarative face-placement pipeline: placement mode, layers, and
/// ordered augmentations.
#[derive(Debug, Clone)]
pub struct BuildPlan {
    /// Configuration name recorded in the metadata.
    pub name: String,
    /// Placement mode.
    pub placement: Placement,
    /// Concentric layer scales.
    pub layers: LayerSpec,
    /// Augmentations, applied strictly in order.
    pub augmentations: Vec<Augmentation>,
    /// Claimed symmetry class tag recorded in the metadata.
    pub class_tag: String,
}

/// Run a build plan for `motif` on the given solid kind.
pub fn run_plan(
    kind: SolidKind,
    motif: &Motif,
    plan: &BuildPlan,
    eps: f64,
) -> Result<GeometricConfiguration, BuildError> {
    let solid = make_solid(kind);
    let triangulated = matches!(
        plan.placement,
        Placement::TriangulatedFaces | Placement::AlternatingTriangulatedFaces
    );
    let shape = if triangulated { triangulate_faces(&solid.shape) } else { solid.shape.clone() };
    let alternating = matches!(
        plan.placement,
        Placement::AlternatingFaces | Placement::AlternatingTriangulatedFaces
    );
    let mut raw = RawAssembly::new();
    for (layer, &scale) in plan.layers.scales.iter().enumerate() {
        let copy = if alternating {
            place_on_faces_alternating(&shape, motif, layer as i32, scale)?
        } else {
            place_on_faces(&shape, motif, layer as i32, scale)?
        };
        raw.merge(copy);
    }
    let meta = ConfigMeta {
        name: plan.name.clone(),
        solid: kind.name().to_string(),
        layer_scales: plan.layers.scales.clone(),
        symmetry_class: plan.class_tag.clone(),
    };
    let mut config = glue(&raw, eps, meta)?;
    for step in &plan.augmentations {
        config = match step {
            Augmentation::EdgeLines { layer } => add_edge_lines(&config, &shape, *layer, eps)?,
            Augmentation::RadialLines { selector, include_center } => {
                add_radial_lines(&config, selector, *include_center)?
            }
            Augmentation::AntipodalLines { selector, include_center } => {
                add_antipodal_lines(&config, selector, *include_center)?
            }
        };
    }
    Ok(config)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{census, format_signature, is_connected, verify_axioms};
    use crate::motif::cevian_motif;
    use crate::EPS;

    fn meta(name: &str, kind: SolidKind, scales: Vec<f64>) -> ConfigMeta {
        ConfigMeta {
            name: name.into(),
            solid: kind.name().into(),
            layer_scales: scales,
            symmetry_class: String::new(),
        }
    }

    #[test]
    fn predict_counts_formula() {
        let t = SolidKind::Tetrahedron.params();
        assert_eq!(predict_counts(&t, &CountSpec { x: 0, y: 3, z: 6, u: 1, vv: 9 }), (42, 42));
        let d = SolidKind::Dodecahedron.params();
        assert_eq!(predict_counts(&d, &CountSpec { x: 0, y: 3, z: 15, u: 1, vv: 20 }), (270, 270));
        let o = SolidKind::Octahedron.params();
        assert_eq!(predict_counts(&o, &CountSpec { x: 1, y: 2, z: 7, u: 0, vv: 9 }), (86, 72));
        assert_eq!(predict_counts(&t, &CountSpec { x: 0, y: 0, z: 0, u: 0, vv: 0 }), (0, 0));
    }

    #[test]
    fn cevian_build_on_tetrahedron_matches_prediction() {
        let motif = cevian_motif(0.25, "cevian25").unwrap();
        let solid = make_solid(SolidKind::Tetrahedron);
        let raw = place_on_faces(&solid.shape, &motif, 0, 1.0).unwrap();
        assert_eq!(raw.points.len(), 4 * 15, "staged point count = f * |motif points|");
        assert_eq!(raw.lines.len(), 4 * 9);
        let config =
            glue(&raw, EPS, meta("cevian-t", SolidKind::Tetrahedron, vec![1.0])).unwrap();
        // Edge anchors merge pairwise: 3 per edge, interiors stay per-face.
        assert_eq!(config.points.len(), 3 * 6 + 6 * 4);
        let with_edges = add_edge_lines(&config, &solid.shape, 0, EPS).unwrap();
        assert_eq!(format_signature(&census(&with_edges)), "(42_3)");
        assert!(verify_axioms(&with_edges, EPS).passes(EPS));
        assert!(is_connected(&with_edges));
    }

    #[test]
    fn glue_is_idempotent() {
        let motif = cevian_motif(0.3, "cevian30").unwrap();
        let solid = make_solid(SolidKind::Octahedron);
        let raw = place_on_faces(&solid.shape, &motif, 0, 1.0).unwrap();
        let once = glue(&raw, EPS, meta("x", SolidKind::Octahedron, vec![1.0])).unwrap();
        let restaged = RawAssembly::from_config(&once, |p| p, |k| k);
        let twice = glue(&restaged, EPS, once.meta.clone()).unwrap();
        assert_eq!(once.points.len(), twice.points.len());
        assert_eq!(once.lines.len(), twice.lines.len());
        for (a, b) in once.lines.iter().zip(&twice.lines) {
            assert_eq!(a.point_ids, b.point_ids);
            assert_eq!(a.kind, b.kind);
        }
    }

    #[test]
    fn gonality_mismatch_rejected() {
        let motif = cevian_motif(0.25, "cevian25").unwrap();
        let solid = make_solid(SolidKind::Cube);
        assert!(matches!(
            place_on_faces(&solid.shape, &motif, 0, 1.0),
            Err(BuildError::GonalityMismatch { .. })
        ));
    }

    #[test]
    fn edge_lines_require_edge_points() {
        // A single interior-only placement has no on-edge points.
        let motif = crate::motif::Motif {
            name: "centers".into(),
            m: 3,
            symmetry: crate::motif::MotifSymmetry::Dih,
            points: vec![
                crate::motif::MotifPoint {
                    xy: nalgebra::Vector2::new(0.0, 0.0),
                    anchor: Anchor::Interior,
                },
                crate::motif::MotifPoint {
                    xy: nalgebra::Vector2::new(0.1, 0.0),
                    anchor: Anchor::Interior,
                },
            ],
            lines: vec![],
        };
        let solid = make_solid(SolidKind::Tetrahedron);
        let raw = place_on_faces_by(&solid.shape, 0, 1.0, |_| &motif).unwrap();
        let config = glue(&raw, EPS, meta("c", SolidKind::Tetrahedron, vec![1.0])).unwrap();
        assert!(matches!(
            add_edge_lines(&config, &solid.shape, 0, EPS),
            Err(BuildError::ShortLine(_))
        ));
    }

    #[test]
    fn radial_lines_raise_valence_by_one() {
        let motif = cevian_motif(0.2, "cevian20").unwrap();
        let solid = make_solid(SolidKind::Tetrahedron);
        let mut raw = RawAssembly::new();
        for (layer, &scale) in [1.0, 0.8].iter().enumerate() {
            raw.merge(place_on_faces(&solid.shape, &motif, layer as i32, scale).unwrap());
        }
        let config = glue(&raw, EPS, meta("r", SolidKind::Tetrahedron, vec![1.0, 0.8])).unwrap();
        let before = config.point_valences();
        let selector = PointSelector::by(Provenance::FaceInterior, 3);
        let selected = selector.selected_ids(&config);
        let augmented = add_radial_lines(&config, &selector, false).unwrap();
        let after = augmented.point_valences();
        for id in selected {
            assert_eq!(after[id], before[id] + 1);
        }
        assert_eq!(augmented.points.len(), config.points.len(), "no points added");
        for l in augmented.lines.iter().filter(|l| l.kind == LineKind::Radial) {
            assert!(l.distance_to(&Vector3::zeros()) < 1e-9, "radial support through origin");
        }
    }

    #[test]
    fn radial_lines_need_layers_or_center() {
        let motif = cevian_motif(0.2, "cevian20").unwrap();
        let solid = make_solid(SolidKind::Tetrahedron);
        let raw = place_on_faces(&solid.shape, &motif, 0, 1.0).unwrap();
        let config = glue(&raw, EPS, meta("r1", SolidKind::Tetrahedron, vec![1.0])).unwrap();
        assert!(matches!(
            add_radial_lines(&config, &PointSelector::by(Provenance::FaceInterior, 3), false),
            Err(BuildError::NeedLayersOrCenter)
        ));
    }

    #[test]
    fn antipodal_lines_reject_tetrahedron_and_pass_through_origin() {
        let motif = cevian_motif(0.2, "cevian20").unwrap();
        let tetra = make_solid(SolidKind::Tetrahedron);
        let raw = place_on_faces(&tetra.shape, &motif, 0, 1.0).unwrap();
        let config = glue(&raw, EPS, meta("a", SolidKind::Tetrahedron, vec![1.0])).unwrap();
        assert!(matches!(
            add_antipodal_lines(&config, &PointSelector::all(), false),
            Err(BuildError::NotCentrallySymmetric(_))
        ));

        let octa = make_solid(SolidKind::Octahedron);
        let raw = place_on_faces(&octa.shape, &motif, 0, 1.0).unwrap();
        let config = glue(&raw, EPS, meta("a", SolidKind::Octahedron, vec![1.0])).unwrap();
        let augmented =
            add_antipodal_lines(&config, &PointSelector::by(Provenance::FaceInterior, 3), false)
                .unwrap();
        let added = augmented.lines.len() - config.lines.len();
        assert_eq!(added, 8 * 6 / 2, "one line per antipodal face-interior point pair");
        for l in augmented.lines.iter().filter(|l| l.kind == LineKind::Antipodal) {
            assert!(l.distance_to(&Vector3::zeros()) < 1e-9);
        }
    }

    #[test]
    fn two_coloring_octahedron_and_rejecting_tetrahedron() {
        let octa = make_solid(SolidKind::Octahedron);
        let color = two_color_faces(&octa.shape).unwrap();
        assert_eq!(color.iter().filter(|&&c| c == 0).count(), 4);
        let tetra = make_solid(SolidKind::Tetrahedron);
        assert!(matches!(two_color_faces(&tetra.shape), Err(BuildError::NotTwoColorable)));
        let tri_cube = triangulate_faces(&make_solid(SolidKind::Cube).shape);
        assert!(two_color_faces(&tri_cube).is_ok(), "triangulated cube is two-colorable");
    }

    #[test]
    fn axis_plane_web_glues_shared_axis_points() {
        let solid = make_solid(SolidKind::Tetrahedron);
        let motif = PlaneMotif {
            name: "strut".into(),
            points: vec![
                PlaneMotifPoint { ab: Vector2::zeros(), anchor: PlaneAnchor::AxisA(0.6) },
                PlaneMotifPoint { ab: Vector2::zeros(), anchor: PlaneAnchor::AxisB(0.6) },
            ],
            lines: vec![vec![0, 1]],
        };
        let pairs = axis_pairs(&solid, 3);
        assert_eq!(pairs.len(), 6, "four 3-fold axes give six pairs");
        let config = place_on_axis_planes(&solid, &motif, &pairs, false, EPS).unwrap();
        assert_eq!(config.points.len(), 4, "one glued point per axis");
        assert_eq!(config.lines.len(), 6);
        assert!(config.point_valences().iter().all(|&v| v == 3));
        assert!(is_connected(&config));

        let empty = place_on_axis_planes(&solid, &motif, &[], false, EPS).unwrap();
        assert!(empty.points.is_empty() && empty.lines.is_empty());
    }

    #[test]
    fn axis_plane_web_rejects_multivalent_anchor() {
        let solid = make_solid(SolidKind::Tetrahedron);
        let motif = PlaneMotif {
            name: "bad".into(),
            points: vec![
                PlaneMotifPoint { ab: Vector2::zeros(), anchor: PlaneAnchor::AxisA(0.5) },
                PlaneMotifPoint { ab: Vector2::new(0.2, 0.2), anchor: PlaneAnchor::Interior },
                PlaneMotifPoint { ab: Vector2::new(0.3, 0.1), anchor: PlaneAnchor::Interior },
            ],
            lines: vec![vec![0, 1], vec![0, 2]],
        };
        assert!(matches!(
            place_on_axis_planes(&solid, &motif, &axis_pairs(&solid, 3), false, EPS),
            Err(BuildError::AxisAnchorValence { .. })
        ));
    }

    #[test]
    fn run_plan_with_edge_lines_matches_direct_pipeline() {
        let motif = cevian_motif(0.25, "cevian25").unwrap();
        let plan = BuildPlan {
            name: "cevian-t".into(),
            placement: Placement::Faces,
            layers: LayerSpec { scales: vec![1.0] },
            augmentations: vec![Augmentation::EdgeLines { layer: 0 }],
            class_tag: "full".into(),
        };
        let config = run_plan(SolidKind::Tetrahedron, &motif, &plan, EPS).unwrap();
        assert_eq!(format_signature(&census(&config)), "(42_3)");
    }
}
