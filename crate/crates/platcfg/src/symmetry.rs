//! Finite isometry groups of the Platonic solids; invariance testing and
//! symmetry classification.
//!
//! # Purpose
//!
//! Realizes the rotation group and the full (rotation + reflection)
//! group of each solid as explicit sets of 3x3 orthogonal matrices,
//! generated by closure from two rotations (plus one mirror for the full
//! group). A configuration is *fully* Platonic when invariant under the
//! full group, *rotationally* Platonic when invariant only under the
//! rotation group, and otherwise neither.
//!
//! # Why
//!
//! All group elements are algebraic matrices of magnitude at most 1;
//! matching by maximal entry difference below 1e-9 separates distinct
//! elements by many orders of magnitude, and re-orthonormalizing each
//! closure product keeps the tolerance tight. Line invariance is tested
//! through the induced point permutation, never by geometric line
//! matching — lines are defined by their incidences.

use std::collections::{HashMap, HashSet};

use nalgebra::{Matrix3, Vector3};
use thiserror::Error;

use crate::incidence::GeometricConfiguration;
use crate::solids::{make_solid, SolidKind};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors from group generation.
#[derive(Debug, Error)]
pub enum SymmetryError {
    /// Closure did not reach the expected order (bad generators or
    /// tolerance).
    #[error("group closure for {kind:?} ({variant:?}) reached order {got}, expected {expected}")]
    ClosureFailure {
        kind: SolidKind,
        variant: GroupVariant,
        got: usize,
        expected: usize,
    },
}

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// A single isometry fixing the origin.
#[derive(Debug, Clone)]
pub struct Isometry {
    /// Orthogonal matrix.
    pub matrix: Matrix3<f64>,
    /// +1 for rotations, -1 for reflections / rotoreflections.
    pub det_sign: i8,
}

impl Isometry {
    fn from_matrix(matrix: Matrix3<f64>) -> Isometry {
        let det_sign = if matrix.determinant() > 0.0 { 1 } else { -1 };
        Isometry { matrix, det_sign }
    }
}

/// Which group variant a set of elements realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupVariant {
    /// Proper rotations only.
    Rotation,
    /// Rotations plus reflections and rotoreflections.
    Full,
}

/// A finite isometry group of a solid.
#[derive(Debug, Clone)]
pub struct IsometryGroup {
    /// Which solid the group preserves.
    pub kind: SolidKind,
    /// Rotation-only or full.
    pub variant: GroupVariant,
    /// All elements, identity first; deterministic order.
    pub elements: Vec<Isometry>,
}

/// Result of classifying a configuration against a solid's groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    /// Invariant under the full group.
    Full,
    /// Invariant under the rotation group but not the full group.
    RotationalOnly,
    /// Not even rotationally invariant.
    Neither,
}

impl SymmetryClass {
    /// Lower-case tag used in documents.
    pub fn tag(self) -> &'static str {
        match self {
            SymmetryClass::Full => "full",
            SymmetryClass::RotationalOnly => "rotational",
            SymmetryClass::Neither => "neither",
        }
    }

    /// Parse the document tag.
    pub fn parse(s: &str) -> Option<SymmetryClass> {
        Some(match s {
            "full" => SymmetryClass::Full,
            "rotational" => SymmetryClass::RotationalOnly,
            "neither" => SymmetryClass::Neither,
            _ => return None,
        })
    }
}

// ---------------------------------------------------------------------------
// Group generation
// ---------------------------------------------------------------------------

/// Expected rotation-group orders for T, C, O, D, I.
pub fn rotation_order(kind: SolidKind) -> usize {
    match kind {
        SolidKind::Tetrahedron => 12,
        SolidKind::Cube | SolidKind::Octahedron => 24,
        SolidKind::Dodecahedron | SolidKind::Icosahedron => 60,
    }
}

/// Rotation matrix about unit `axis` by `angle` (Rodrigues formula via
/// nalgebra).
fn rotation_about(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
    nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), angle)
        .matrix()
        .into_owned()
}

/// Snap a near-orthogonal matrix to the nearest orthogonal matrix
/// (polar factor via SVD). Keeps closure round-off at machine precision.
fn snap_orthogonal(m: Matrix3<f64>) -> Matrix3<f64> {
    let svd = m.svd(true, true);
    let u = svd.u.unwrap();
    let vt = svd.v_t.unwrap();
    u * vt
}

fn matrices_equal(a: &Matrix3<f64>, b: &Matrix3<f64>) -> bool {
    (a - b).amax() < 1e-9
}

/// Closure of a generator set under multiplication, with deduplication
/// by nearest-matrix matching.
fn close_group(generators: &[Matrix3<f64>]) -> Vec<Matrix3<f64>> {
    let mut elements: Vec<Matrix3<f64>> = vec![Matrix3::identity()];
    let mut frontier: Vec<Matrix3<f64>> = vec![Matrix3::identity()];
    while let Some(g) = frontier.pop() {
        for gen in generators {
            let prod = snap_orthogonal(gen * g);
            if !elements.iter().any(|e| matrices_equal(e, &prod)) {
                elements.push(prod);
                frontier.push(prod);
            }
        }
        if elements.len() > 130 {
            break; // runaway closure: reported by the order check
        }
    }
    elements
}

/// Proper rotation generators: the largest-order face rotation and one
/// 2-fold edge rotation, read off the solid's axis inventory.
fn rotation_generators(kind: SolidKind) -> Vec<Matrix3<f64>> {
    let solid = make_solid(kind);
    let max_order = solid.axes.iter().map(|a| a.order).max().unwrap();
    let principal = solid.axes.iter().find(|a| a.order == max_order).unwrap();
    let twofold = solid.axes.iter().find(|a| a.order == 2).unwrap();
    vec![
        rotation_about(principal.direction, 2.0 * std::f64::consts::PI / max_order as f64),
        rotation_about(twofold.direction, std::f64::consts::PI),
    ]
}

/// Reflection across the plane through the origin and edge 0 of the
/// solid. Every Platonic solid has each of its edges inside a mirror
/// plane, so this is always a symmetry.
fn edge_mirror(kind: SolidKind) -> Matrix3<f64> {
    let solid = make_solid(kind);
    let e = solid.shape.edges[0];
    let a = solid.shape.vertices[e[0]];
    let b = solid.shape.vertices[e[1]];
    let n = a.cross(&b).normalize();
    Matrix3::identity() - 2.0 * n * n.transpose()
}

/// All rotations preserving the canonical solid, generated by closure.
pub fn rotation_group(kind: SolidKind) -> Result<IsometryGroup, SymmetryError> {
    let elements = close_group(&rotation_generators(kind));
    let expected = rotation_order(kind);
    if elements.len() != expected {
        return Err(SymmetryError::ClosureFailure {
            kind,
            variant: GroupVariant::Rotation,
            got: elements.len(),
            expected,
        });
    }
    Ok(IsometryGroup {
        kind,
        variant: GroupVariant::Rotation,
        elements: elements.into_iter().map(Isometry::from_matrix).collect(),
    })
}

/// The full symmetry group: rotations extended by reflections.
pub fn full_group(kind: SolidKind) -> Result<IsometryGroup, SymmetryError> {
    let mut gens = rotation_generators(kind);
    gens.push(edge_mirror(kind));
    let elements = close_group(&gens);
    let expected = 2 * rotation_order(kind);
    if elements.len() != expected {
        return Err(SymmetryError::ClosureFailure {
            kind,
            variant: GroupVariant::Full,
            got: elements.len(),
            expected,
        });
    }
    Ok(IsometryGroup {
        kind,
        variant: GroupVariant::Full,
        elements: elements.into_iter().map(Isometry::from_matrix).collect(),
    })
}

// ---------------------------------------------------------------------------
// Spatial point index (nearest-match queries within eps)
// ---------------------------------------------------------------------------

/// Hash grid over 3D points for nearest-match queries at tolerance
/// `eps`. Cell size is chosen well above `eps` so a match is always in
/// the 27-cell neighborhood.
pub(crate) struct PointIndex {
    cell: f64,
    grid: HashMap<(i64, i64, i64), Vec<usize>>,
}

impl PointIndex {
    pub(crate) fn build(points: &[Vector3<f64>]) -> PointIndex {
        let cell = 1e-3;
        let mut grid: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            grid.entry(Self::key(p, cell)).or_default().push(i);
        }
        PointIndex { cell, grid }
    }

    fn key(p: &Vector3<f64>, cell: f64) -> (i64, i64, i64) {
        (
            (p[0] / cell).floor() as i64,
            (p[1] / cell).floor() as i64,
            (p[2] / cell).floor() as i64,
        )
    }

    /// Index of the nearest stored point within `eps` of `p`, if any.
    pub(crate) fn nearest_within(
        &self,
        p: &Vector3<f64>,
        eps: f64,
        points: &[Vector3<f64>],
    ) -> Option<usize> {
        let (kx, ky, kz) = Self::key(p, self.cell);
        let mut best: Option<(f64, usize)> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(cands) = self.grid.get(&(kx + dx, ky + dy, kz + dz)) {
                        for &i in cands {
                            let d = (points[i] - p).norm();
                            if d < eps && best.is_none_or(|(bd, _)| d < bd) {
                                best = Some((d, i));
                            }
                        }
                    }
                }
            }
        }
        best.map(|(_, i)| i)
    }
}

// ---------------------------------------------------------------------------
// Invariance and classification
// ---------------------------------------------------------------------------

/// Map every point coordinate (and line support) by `g`; combinatorics
/// and ids are unchanged.
pub fn apply(g: &Isometry, config: &GeometricConfiguration) -> GeometricConfiguration {
    let mut out = config.clone();
    for p in &mut out.points {
        p.position = g.matrix * p.position;
    }
    for l in &mut out.lines {
        l.support = (g.matrix * l.support.0, g.matrix * l.support.1);
    }
    out
}

/// True iff `g` maps the point set bijectively onto itself (nearest
/// match within `eps`) and the induced point permutation maps every
/// line's incidence set onto some line's incidence set.
pub fn is_invariant(config: &GeometricConfiguration, g: &Isometry, eps: f64) -> bool {
    let positions: Vec<Vector3<f64>> = config.points.iter().map(|p| p.position).collect();
    let index = PointIndex::build(&positions);
    let n = positions.len();
    let mut perm = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for (i, p) in positions.iter().enumerate() {
        let q = g.matrix * p;
        match index.nearest_within(&q, eps, &positions) {
            Some(j) if !hit[j] => {
                perm[i] = j;
                hit[j] = true;
            }
            _ => return false,
        }
    }
    let line_sets: HashSet<Vec<usize>> = config
        .lines
        .iter()
        .map(|l| {
            let mut s = l.point_ids.clone();
            s.sort_unstable();
            s
        })
        .collect();
    for l in &config.lines {
        let mut mapped: Vec<usize> = l.point_ids.iter().map(|&p| perm[p]).collect();
        mapped.sort_unstable();
        if !line_sets.contains(&mapped) {
            return false;
        }
    }
    true
}

/// True iff the configuration is invariant under every element of `group`.
pub fn is_invariant_under_group(
    config: &GeometricConfiguration,
    group: &IsometryGroup,
    eps: f64,
) -> bool {
    group.elements.iter().all(|g| is_invariant(config, g, eps))
}

/// Classify a configuration (expressed in the canonical frame of the
/// solid) as Full, RotationalOnly, or Neither.
pub fn classify(config: &GeometricConfiguration, kind: SolidKind, eps: f64) -> SymmetryClass {
    let full = full_group(kind).expect("full group closure");
    if is_invariant_under_group(config, &full, eps) {
        return SymmetryClass::Full;
    }
    let rot = rotation_group(kind).expect("rotation group closure");
    if is_invariant_under_group(config, &rot, eps) {
        return SymmetryClass::RotationalOnly;
    }
    SymmetryClass::Neither
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
