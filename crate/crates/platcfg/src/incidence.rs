//! Configuration data model, census, axiom verifier, connectivity, and
//! Levi graph.
//!
//! # Purpose
//!
//! Houses `GeometricConfiguration` — tagged 3D points plus lines as
//! incidence lists with geometric supports — together with the valence
//! census, the configuration-axiom verifier, Levi-graph extraction, and
//! the text/DOT incidence exports.
//!
//! # Why
//!
//! Incidences are authoritative and geometry is a witness: the builder
//! constructs incidence lists symbolically, and `verify_axioms` then
//! checks that every incident point really lies on its line's support,
//! that no two lines share two points, and that every point meets at
//! least two lines. Intermediate assemblies may relax the two-line
//! minimum; final builds enforce it.

use std::collections::{BTreeMap, HashMap};

use nalgebra::Vector3;

use crate::DELTA_WARN;

// ---------------------------------------------------------------------------
// Core types
// ---------------------------------------------------------------------------

/// Where a configuration point came from in the build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Solid vertex (a vertex-anchored motif point after gluing).
    Vertex,
    /// Interior of a solid edge.
    EdgeInterior,
    /// Interior of a face.
    FaceInterior,
    /// On a rotation axis (axis-plane constructions).
    Axis,
    /// The common center of the configuration (layer is -1).
    Center,
    /// On none of the above loci (helical endpoints, web orbit points).
    Free,
}

impl Provenance {
    /// Lower-case tag used in documents.
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Vertex => "vertex",
            Provenance::EdgeInterior => "edge-interior",
            Provenance::FaceInterior => "face-interior",
            Provenance::Axis => "axis",
            Provenance::Center => "center",
            Provenance::Free => "free",
        }
    }

    /// Parse the document tag.
    pub fn parse(s: &str) -> Option<Provenance> {
        Some(match s {
            "vertex" => Provenance::Vertex,
            "edge-interior" => Provenance::EdgeInterior,
            "face-interior" => Provenance::FaceInterior,
            "axis" => Provenance::Axis,
            "center" => Provenance::Center,
            "free" => Provenance::Free,
            _ => return None,
        })
    }

    /// Deterministic ordering rank used for id assignment.
    pub(crate) fn rank(self) -> u8 {
        match self {
            Provenance::Vertex => 0,
            Provenance::EdgeInterior => 1,
            Provenance::FaceInterior => 2,
            Provenance::Axis => 3,
            Provenance::Center => 4,
            Provenance::Free => 5,
        }
    }
}

/// How a configuration line arose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineKind {
    /// Line of a placed motif copy.
    Motif,
    /// Line along a solid edge.
    SolidEdge,
    /// Radial augmentation line (ray from the center).
    Radial,
    /// Antipodal augmentation line (through a point and its antipode).
    Antipodal,
    /// Line along a rotation axis.
    AxisLine,
}

impl LineKind {
    /// Lower-case tag used in documents.
    pub fn tag(self) -> &'static str {
        match self {
            LineKind::Motif => "motif",
            LineKind::SolidEdge => "solid-edge",
            LineKind::Radial => "radial",
            LineKind::Antipodal => "antipodal",
            LineKind::AxisLine => "axis-line",
        }
    }

    /// Parse the document tag.
    pub fn parse(s: &str) -> Option<LineKind> {
        Some(match s {
            "motif" => LineKind::Motif,
            "solid-edge" => LineKind::SolidEdge,
            "radial" => LineKind::Radial,
            "antipodal" => LineKind::Antipodal,
            "axis-line" => LineKind::AxisLine,
            _ => return None,
        })
    }

    pub(crate) fn rank(self) -> u8 {
        match self {
            LineKind::Motif => 0,
            LineKind::SolidEdge => 1,
            LineKind::Radial => 2,
            LineKind::Antipodal => 3,
            LineKind::AxisLine => 4,
        }
    }
}

/// A configuration point.
#[derive(Debug, Clone)]
pub struct ConfigPoint {
    /// Dense id starting from 0.
    pub id: usize,
    /// Position in the solid's canonical frame.
    pub position: Vector3<f64>,
    /// Build origin of the point.
    pub provenance: Provenance,
    /// Layer index (center points carry -1).
    pub layer: i32,
}

/// A configuration line: an incidence list plus a geometric support.
#[derive(Debug, Clone)]
pub struct ConfigLine {
    /// Dense id starting from 0.
    pub id: usize,
    /// Incident point ids, ordered along the line.
    pub point_ids: Vec<usize>,
    /// Build origin of the line.
    pub kind: LineKind,
    /// Supporting line: (anchor point, unit direction).
    pub support: (Vector3<f64>, Vector3<f64>),
}

impl ConfigLine {
    /// Distance from `p` to the supporting line.
    pub fn distance_to(&self, p: &Vector3<f64>) -> f64 {
        let (a, d) = self.support;
        let v = p - a;
        (v - v.dot(&d) * d).norm()
    }
}

/// Descriptive metadata carried by a configuration.
#[derive(Debug, Clone, Default)]
pub struct ConfigMeta {
    /// Human-readable name (catalog entry id, usually).
    pub name: String,
    /// Solid kind name ("tetrahedron", ...).
    pub solid: String,
    /// Layer scale factors, outermost first.
    pub layer_scales: Vec<f64>,
    /// Claimed symmetry class tag ("full", "rotational", "neither").
    pub symmetry_class: String,
}

/// A spatial point–line configuration (possibly an intermediate assembly).
#[derive(Debug, Clone)]
pub struct GeometricConfiguration {
    /// Points with dense ids.
    pub points: Vec<ConfigPoint>,
    /// Lines with dense ids.
    pub lines: Vec<ConfigLine>,
    /// Build metadata.
    pub meta: ConfigMeta,
}

impl GeometricConfiguration {
    /// Number of lines through each point, indexed by point id.
    pub fn point_valences(&self) -> Vec<usize> {
        let mut val = vec![0usize; self.points.len()];
        for line in &self.lines {
            for &p in &line.point_ids {
                val[p] += 1;
            }
        }
        val
    }

    /// Total incidence count (sum of line valences).
    pub fn incidence_count(&self) -> usize {
        self.lines.iter().map(|l| l.point_ids.len()).sum()
    }
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// The multiset of point and line valences, grouped into classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValenceSignature {
    /// (count, valence) pairs, valence descending.
    pub point_classes: Vec<(usize, usize)>,
    /// (count, valence) pairs, valence descending.
    pub line_classes: Vec<(usize, usize)>,
}

impl ValenceSignature {
    /// True when there is one point class and one line class with equal
    /// counts and equal valences.
    pub fn is_balanced(&self) -> bool {
        self.point_classes.len() == 1
            && self.line_classes.len() == 1
            && self.point_classes[0] == self.line_classes[0]
    }

    /// Total point count.
    pub fn point_count(&self) -> usize {
        self.point_classes.iter().map(|&(c, _)| c).sum()
    }

    /// Total line count.
    pub fn line_count(&self) -> usize {
        self.line_classes.iter().map(|&(c, _)| c).sum()
    }
}

/// Exact tally of point and line valences from the incidence lists.
pub fn census(config: &GeometricConfiguration) -> ValenceSignature {
    let mut point_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for v in config.point_valences() {
        *point_hist.entry(v).or_insert(0) += 1;
    }
    let mut line_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for line in &config.lines {
        *line_hist.entry(line.point_ids.len()).or_insert(0) += 1;
    }
    let desc = |hist: BTreeMap<usize, usize>| {
        hist.into_iter().rev().map(|(v, c)| (c, v)).collect::<Vec<_>>()
    };
    ValenceSignature { point_classes: desc(point_hist), line_classes: desc(line_hist) }
}

/// Canonical text form: "(6_4 12_3, 15_4)"; balanced signatures collapse
/// to "(n_k)". An empty signature prints as "(,)".
pub fn format_signature(sig: &ValenceSignature) -> String {
    if sig.point_classes.is_empty() && sig.line_classes.is_empty() {
        return "(,)".to_string();
    }
    if sig.is_balanced() {
        let (n, k) = sig.point_classes[0];
        return format!("({n}_{k})");
    }
    let side = |classes: &[(usize, usize)]| {
        classes
            .iter()
            .map(|&(c, v)| format!("{c}_{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("({}, {})", side(&sig.point_classes), side(&sig.line_classes))
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Result of the configuration-axiom check. Failures are report entries,
/// never exceptions.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Largest distance of an incident point to its line's support.
    pub max_residual: f64,
    /// Line id pairs sharing two or more points (axiom violation).
    pub sharing_pairs: Vec<(usize, usize)>,
    /// Ids of points incident to fewer than two lines (axiom violation
    /// for final builds; a warning for intermediates).
    pub low_valence_points: Vec<usize>,
    /// (point id, line id) pairs where a non-incident point lies within
    /// the warning distance of a line. Warnings, not failures.
    pub unintended_incidences: Vec<(usize, usize)>,
    /// True when every line's point order is monotone along its support.
    pub ordering_monotone: bool,
}

impl VerificationReport {
    /// Axioms hold: residual within `eps`, no shared pairs, no
    /// low-valence points.
    pub fn passes(&self, eps: f64) -> bool {
        self.max_residual <= eps
            && self.sharing_pairs.is_empty()
            && self.low_valence_points.is_empty()
    }

    /// Deterministic multi-line summary used by the CLI and round-trip
    /// comparisons.
    pub fn summary(&self, eps: f64) -> String {
        format!(
            "axioms: {}\nmax collinearity residual: {:.3e}\nline pairs sharing >=2 points: {}\npoints on <2 lines: {}\nunintended-incidence warnings: {}\nordering monotone: {}",
            if self.passes(eps) { "pass" } else { "FAIL" },
            self.max_residual,
            self.sharing_pairs.len(),
            self.low_valence_points.len(),
            self.unintended_incidences.len(),
            self.ordering_monotone,
        )
    }
}

/// Check the configuration axioms and collect warnings.
pub fn verify_axioms(config: &GeometricConfiguration, _eps: f64) -> VerificationReport {
    // (a) collinearity residual of incident points; ordering check.
    let mut max_residual: f64 = 0.0;
    let mut ordering_monotone = true;
    for line in &config.lines {
        let (_, d) = line.support;
        let mut prev = f64::NEG_INFINITY;
        for &p in &line.point_ids {
            let pos = &config.points[p].position;
            max_residual = max_residual.max(line.distance_to(pos));
            let t = pos.dot(&d);
            if t <= prev {
                ordering_monotone = false;
            }
            prev = t;
        }
    }

    // (b) line pairs sharing >= 2 points, via per-point co-occurrence.
    let mut lines_through: Vec<Vec<usize>> = vec![Vec::new(); config.points.len()];
    for line in &config.lines {
        for &p in &line.point_ids {
            lines_through[p].push(line.id);
        }
    }
    let mut pair_counts: HashMap<(usize, usize), usize> = HashMap::new();
    for lines in &lines_through {
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                let key = (lines[i].min(lines[j]), lines[i].max(lines[j]));
                *pair_counts.entry(key).or_insert(0) += 1;
            }
        }
    }
    let mut sharing_pairs: Vec<(usize, usize)> =
        pair_counts.into_iter().filter(|&(_, c)| c >= 2).map(|(k, _)| k).collect();
    sharing_pairs.sort();

    // (c) points on fewer than two lines.
    let low_valence_points: Vec<usize> = lines_through
        .iter()
        .enumerate()
        .filter(|(_, l)| l.len() < 2)
        .map(|(i, _)| i)
        .collect();

    // (d) unintended incidences: non-incident points near a line.
    let mut unintended = Vec::new();
    for line in &config.lines {
        for point in &config.points {
            if line.point_ids.contains(&point.id) {
                continue;
            }
            if line.distance_to(&point.position) < DELTA_WARN {
                unintended.push((point.id, line.id));
            }
        }
    }
    unintended.sort();

    VerificationReport {
        max_residual,
        sharing_pairs,
        low_valence_points,
        unintended_incidences: unintended,
        ordering_monotone,
    }
}

/// True iff the Levi graph is connected (empty configurations count as
/// connected).
pub fn is_connected(config: &GeometricConfiguration) -> bool {
    let np = config.points.len();
    let nl = config.lines.len();
    if np + nl == 0 {
        return true;
    }
    // Vertices: 0..np points, np..np+nl lines.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); np + nl];
    for line in &config.lines {
        for &p in &line.point_ids {
            adj[p].push(np + line.id);
            adj[np + line.id].push(p);
        }
    }
    let mut seen = vec![false; np + nl];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    count == np + nl
}

// ---------------------------------------------------------------------------
// Levi graph
// ---------------------------------------------------------------------------

/// Bipartite incidence graph of a configuration.
#[derive(Debug, Clone)]
pub struct LeviGraph {
    /// Point-side vertex ids.
    pub point_vertices: Vec<usize>,
    /// Line-side vertex ids.
    pub line_vertices: Vec<usize>,
    /// (point id, line id) incidences, sorted.
    pub edges: Vec<(usize, usize)>,
}

/// Extract the Levi graph with deterministic edge ordering.
pub fn levi_graph(config: &GeometricConfiguration) -> LeviGraph {
    let mut edges = Vec::with_capacity(config.incidence_count());
    for line in &config.lines {
        for &p in &line.point_ids {
            edges.push((p, line.id));
        }
    }
    edges.sort();
    LeviGraph {
        point_vertices: (0..config.points.len()).collect(),
        line_vertices: (0..config.lines.len()).collect(),
        edges,
    }
}

/// Text export: one incidence per row, "P<i> L<j>", zero-based, sorted.
pub fn levi_text(config: &GeometricConfiguration) -> String {
    let g = levi_graph(config);
    let mut out = String::new();
    for (p, l) in g.edges {
        out.push_str(&format!("P{p} L{l}\n"));
    }
    out
}

/// DOT export: point nodes as circles, line nodes as boxes.
pub fn levi_dot(config: &GeometricConfiguration) -> String {
    let g = levi_graph(config);
    let mut out = String::from("graph levi {\n");
    for p in &g.point_vertices {
        out.push_str(&format!("  p{p} [shape=circle];\n"));
    }
    for l in &g.line_vertices {
        out.push_str(&format!("  l{l} [shape=box];\n"));
    }
    for (p, l) in &g.edges {
        out.push_str(&format!("  p{p} -- l{l};\n"));
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// Support fitting (shared by builder and document loading)
// ---------------------------------------------------------------------------

/// Least-squares line fit through `positions`: returns (anchor, unit
/// direction, max residual). The direction is the principal axis of the
/// centered covariance; its sign is canonicalized.
pub fn fit_line(positions: &[Vector3<f64>]) -> (Vector3<f64>, Vector3<f64>, f64) {
    assert!(positions.len() >= 2, "a line needs at least two points");
    let n = positions.len() as f64;
    let centroid: Vector3<f64> = positions.iter().sum::<Vector3<f64>>() / n;
    let mut cov = nalgebra::Matrix3::<f64>::zeros();
    for p in positions {
        let d = p - centroid;
        cov += d * d.transpose();
    }
    let eig = nalgebra::SymmetricEigen::new(cov);
    let (mut best, mut best_val) = (0usize, f64::NEG_INFINITY);
    for k in 0..3 {
        if eig.eigenvalues[k] > best_val {
            best_val = eig.eigenvalues[k];
            best = k;
        }
    }
    let dir = crate::solids::canonical_sign(eig.eigenvectors.column(best).into_owned().normalize());
    let mut max_res: f64 = 0.0;
    for p in positions {
        let v = p - centroid;
        max_res = max_res.max((v - v.dot(&dir) * dir).norm());
    }
    (centroid, dir, max_res)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
