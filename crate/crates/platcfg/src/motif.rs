//! Planar motifs: the 2D configurations placed on solid faces.
//!
//! # Purpose
//!
//! A motif is a planar configuration drawn in the frame of a reference
//! regular m-gon (circumradius 1, vertex 0 on the +x axis). Each point
//! carries an *anchor* describing how it glues when copies are placed on
//! adjacent faces: at a polygon vertex, on the interior of a directed
//! edge at parameter t, or in the face interior. Motifs declare their
//! planar symmetry class: cyclic (Cyc_m) or dihedral (Dih_m).
//!
//! # Why
//!
//! Motif coordinates are the main derivation burden of the whole
//! pipeline — the constructions define them only pictorially — so every
//! motif is validated on load: collinearity of all declared lines,
//! anchors exactly on their reference loci, and the declared symmetry
//! realized by the rotation through 2*pi/m (plus the mirror through
//! vertex 0 for Dih_m). The text format round-trips bit-exactly.

use nalgebra::Vector2;
use thiserror::Error;

use crate::io::fmt_g15;
use crate::solids::{reference_edge_point, reference_vertex};

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// How a motif point glues when placed on a face.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Anchor {
    /// Coincides with reference corner `i` (merges with the d copies
    /// around a solid vertex).
    Vertex(usize),
    /// On directed reference edge `i` at parameter `t` in (0,1) (merges
    /// with the adjacent face's point at 1 - t).
    Edge(usize, f64),
    /// In the open face interior (never merges).
    Interior,
}

/// Declared planar symmetry class of a motif.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotifSymmetry {
    /// Cyclic: invariant under rotation by 2*pi/m only (chiral).
    Cyc,
    /// Dihedral: additionally invariant under the mirror through vertex 0.
    Dih,
}

/// One motif point: 2D position plus anchor.
#[derive(Debug, Clone)]
pub struct MotifPoint {
    /// Position in the reference m-gon frame.
    pub xy: Vector2<f64>,
    /// Gluing anchor.
    pub anchor: Anchor,
}

/// A planar motif.
#[derive(Debug, Clone)]
pub struct Motif {
    /// Name (file stem by convention).
    pub name: String,
    /// Gonality of the reference polygon.
    pub m: usize,
    /// Declared symmetry class.
    pub symmetry: MotifSymmetry,
    /// Points.
    pub points: Vec<MotifPoint>,
    /// Lines as point-index lists.
    pub lines: Vec<Vec<usize>>,
}

/// Errors from motif parsing and validation.
#[derive(Debug, Error)]
pub enum MotifError {
    /// Malformed file content.
    #[error("motif parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    /// A validation invariant failed.
    #[error("motif '{name}' invalid: {reason}")]
    Invalid { name: String, reason: String },
}

fn invalid(name: &str, reason: impl Into<String>) -> MotifError {
    MotifError::Invalid { name: name.to_string(), reason: reason.into() }
}

// ---------------------------------------------------------------------------
// Parsing and writing (bit-exact round-trip)
// ---------------------------------------------------------------------------

impl Motif {
    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// motif <name> m=<m> sym=<cyc|dih>
    /// pt <x> <y> anchor=<vertex:i|edge:i:t|interior>
    /// ln <i0> <i1> ...
    /// ```
    pub fn parse(text: &str) -> Result<Motif, MotifError> {
        let mut header: Option<(String, usize, MotifSymmetry)> = None;
        let mut points = Vec::new();
        let mut lines = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |reason: &str| MotifError::Parse { line: ln + 1, reason: reason.into() };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            match tok.next() {
                Some("motif") => {
                    let name = tok.next().ok_or_else(|| err("missing name"))?.to_string();
                    let m = tok
                        .next()
                        .and_then(|t| t.strip_prefix("m="))
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("missing or bad m="))?;
                    let symmetry = match tok.next().and_then(|t| t.strip_prefix("sym=")) {
                        Some("cyc") => MotifSymmetry::Cyc,
                        Some("dih") => MotifSymmetry::Dih,
                        _ => return Err(err("missing or bad sym=")),
                    };
                    header = Some((name, m, symmetry));
                }
                Some("pt") => {
                    let x: f64 = tok
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("bad x coordinate"))?;
                    let y: f64 = tok
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("bad y coordinate"))?;
                    let spec = tok
                        .next()
                        .and_then(|t| t.strip_prefix("anchor="))
                        .ok_or_else(|| err("missing anchor="))?;
                    let anchor = if spec == "interior" {
                        Anchor::Interior
                    } else if let Some(rest) = spec.strip_prefix("vertex:") {
                        Anchor::Vertex(rest.parse().map_err(|_| err("bad vertex index"))?)
                    } else if let Some(rest) = spec.strip_prefix("edge:") {
                        let (i, t) = rest.split_once(':').ok_or_else(|| err("bad edge anchor"))?;
                        Anchor::Edge(
                            i.parse().map_err(|_| err("bad edge index"))?,
                            t.parse().map_err(|_| err("bad edge parameter"))?,
                        )
                    } else {
                        return Err(err("unknown anchor kind"));
                    };
                    points.push(MotifPoint { xy: Vector2::new(x, y), anchor });
                }
                Some("ln") => {
                    let ids: Result<Vec<usize>, _> = tok.map(|t| t.parse()).collect();
                    let ids = ids.map_err(|_| err("bad point index"))?;
                    if ids.len() < 2 {
                        return Err(err("line with fewer than two points"));
                    }
                    lines.push(ids);
                }
                _ => return Err(err("unknown record")),
            }
        }
        let (name, m, symmetry) =
            header.ok_or(MotifError::Parse { line: 0, reason: "missing motif header".into() })?;
        let motif = Motif { name, m, symmetry, points, lines };
        for l in &motif.lines {
            for &i in l {
                if i >= motif.points.len() {
                    return Err(invalid(&motif.name, format!("line references point {i}")));
                }
            }
        }
        Ok(motif)
    }

    /// Serialize back to the text format. Coordinates and edge
    /// parameters print with 15 significant digits, so `parse` followed
    /// by `to_text` reproduces a well-formed file byte for byte.
    pub fn to_text(&self) -> String {
        let sym = match self.symmetry {
            MotifSymmetry::Cyc => "cyc",
            MotifSymmetry::Dih => "dih",
        };
        let mut out = format!("motif {} m={} sym={}\n", self.name, self.m, sym);
        for p in &self.points {
            let anchor = match p.anchor {
                Anchor::Vertex(i) => format!("vertex:{i}"),
                Anchor::Edge(i, t) => format!("edge:{}:{}", i, fmt_g15(t)),
                Anchor::Interior => "interior".to_string(),
            };
            out.push_str(&format!(
                "pt {} {} anchor={}\n",
                fmt_g15(p.xy[0]),
                fmt_g15(p.xy[1]),
                anchor
            ));
        }
        for l in &self.lines {
            let ids: Vec<String> = l.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("ln {}\n", ids.join(" ")));
        }
        out
    }

    // -----------------------------------------------------------------------
    // Validation
    // -----------------------------------------------------------------------

    /// Check all motif invariants at tolerance `eps`: anchor positions,
    /// line collinearity, and the declared planar symmetry.
    pub fn validate(&self, eps: f64) -> Result<(), MotifError> {
        let name = &self.name;
        if self.m < 3 {
            return Err(invalid(name, "gonality below 3"));
        }
        // Anchors on their reference loci.
        for (i, p) in self.points.iter().enumerate() {
            match p.anchor {
                Anchor::Vertex(k) => {
                    if k >= self.m {
                        return Err(invalid(name, format!("point {i}: vertex index {k} >= m")));
                    }
                    if (p.xy - reference_vertex(self.m, k)).amax() > eps {
                        return Err(invalid(name, format!("point {i} off reference vertex {k}")));
                    }
                }
                Anchor::Edge(k, t) => {
                    if k >= self.m {
                        return Err(invalid(name, format!("point {i}: edge index {k} >= m")));
                    }
                    if !(t > 0.0 && t < 1.0) {
                        return Err(invalid(name, format!("point {i}: edge parameter {t} not in (0,1)")));
                    }
                    if (p.xy - reference_edge_point(self.m, k, t)).amax() > eps {
                        return Err(invalid(name, format!("point {i} off edge {k} at t={t}")));
                    }
                }
                Anchor::Interior => {}
            }
        }
        // Collinearity of every declared line.
        for (li, l) in self.lines.iter().enumerate() {
            let a = self.points[l[0]].xy;
            let b = self.points[l[1]].xy;
            let d = (b - a).normalize();
            for &i in &l[2..] {
                let v = self.points[i].xy - a;
                let cross = (v[0] * d[1] - v[1] * d[0]).abs();
                if cross > eps {
                    return Err(invalid(
                        name,
                        format!("line {li} not collinear (residual {cross:.2e})"),
                    ));
                }
            }
        }
        // Declared symmetry: rotation by 2*pi/m, plus the mirror through
        // vertex 0 (y -> -y) for dihedral motifs.
        let angle = 2.0 * std::f64::consts::PI / self.m as f64;
        let rot = nalgebra::Rotation2::new(angle);
        self.check_map(|p| rot * p, "rotation by 2*pi/m", eps)?;
        if self.symmetry == MotifSymmetry::Dih {
            self.check_map(|p| Vector2::new(p[0], -p[1]), "mirror through vertex 0", eps)?;
        }
        Ok(())
    }

    /// Check that a planar map permutes the points and lines.
    fn check_map(
        &self,
        map: impl Fn(Vector2<f64>) -> Vector2<f64>,
        what: &str,
        eps: f64,
    ) -> Result<(), MotifError> {
        let n = self.points.len();
        let mut perm = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        for (i, point) in self.points.iter().enumerate() {
            let q = map(point.xy);
            let mut found = None;
            for (j, other) in self.points.iter().enumerate() {
                if !hit[j] && (other.xy - q).amax() < eps {
                    found = Some(j);
                    break;
                }
            }
            match found {
                Some(j) => {
                    perm[i] = j;
                    hit[j] = true;
                }
                None => {
                    return Err(invalid(
                        &self.name,
                        format!("{what} does not permute the points (point {i})"),
                    ))
                }
            }
        }
        let mut line_sets: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut s = l.clone();
                s.sort_unstable();
                s
            })
            .collect();
        line_sets.sort();
        for (li, l) in self.lines.iter().enumerate() {
            let mut mapped: Vec<usize> = l.iter().map(|&i| perm[i]).collect();
            mapped.sort_unstable();
            if line_sets.binary_search(&mapped).is_err() {
                return Err(invalid(
                    &self.name,
                    format!("{what} does not map line {li} onto a line"),
                ));
            }
        }
        Ok(())
    }

    // -----------------------------------------------------------------------
    // Derived motifs
    // -----------------------------------------------------------------------

    /// The mirror image (reflection through vertex 0, y -> -y), with
    /// anchors remapped accordingly: vertex i -> m - i, edge (i, t) ->
    /// (m - 1 - i, 1 - t). Used for alternating placements on
    /// two-colorable face sets.
    pub fn mirrored(&self) -> Motif {
        let m = self.m;
        let points = self
            .points
            .iter()
            .map(|p| MotifPoint {
                xy: Vector2::new(p.xy[0], -p.xy[1]),
                anchor: match p.anchor {
                    Anchor::Vertex(i) => Anchor::Vertex((m - i) % m),
                    Anchor::Edge(i, t) => Anchor::Edge(m - 1 - i, 1.0 - t),
                    Anchor::Interior => Anchor::Interior,
                },
            })
            .collect();
        Motif {
            name: format!("{}~mirror", self.name),
            m,
            symmetry: self.symmetry,
            points,
            lines: self.lines.clone(),
        }
    }

    /// The multiset of edge parameters per edge, used to check the
    /// t <-> 1 - t merge condition for adjacent faces.
    pub fn edge_parameter_multiset(&self) -> Vec<f64> {
        let mut ts: Vec<f64> = self
            .points
            .iter()
            .filter_map(|p| match p.anchor {
                Anchor::Edge(_, t) => Some(t),
                _ => None,
            })
            .collect();
        ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ts
    }

    /// True when the edge-anchor parameter multiset is symmetric under
    /// t -> 1 - t within `eps` (the condition for copies on adjacent
    /// faces to merge their edge points).
    pub fn edge_parameters_mirror_closed(&self, eps: f64) -> bool {
        let ts = self.edge_parameter_multiset();
        let mut rev: Vec<f64> = ts.iter().map(|t| 1.0 - t).collect();
        rev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ts.iter().zip(&rev).all(|(a, b)| (a - b).abs() < eps)
    }
}

// ---------------------------------------------------------------------------
// Parameterized motif families (used by property tests and examples)
// ---------------------------------------------------------------------------

/// The cevian motif on a triangle with edge anchors at parameters
/// {tau, 1/2, 1 - tau} on each edge: nine 3-valent lines, each through
/// one edge anchor and two of the six cevian intersection points.
/// Dihedral, and edge-parameter mirror-closed for every tau in (0, 1/2).
pub fn cevian_motif(tau: f64, name: &str) -> Result<Motif, MotifError> {
    if !(tau > 0.0 && tau < 0.5) {
        return Err(invalid(name, format!("tau {tau} outside (0, 1/2)")));
    }
    let m = 3usize;
    let ts = [tau, 0.5, 1.0 - tau];
    let vert = |i: usize| reference_vertex(m, i);
    // Cevian from vertex v to the opposite edge (edge v+1) at parameter t.
    let cevian = |v: usize, t: f64| -> (Vector2<f64>, Vector2<f64>) {
        let foot = reference_edge_point(m, (v + 1) % m, t);
        (vert(v), foot - vert(v))
    };
    let intersect = |l1: (Vector2<f64>, Vector2<f64>), l2: (Vector2<f64>, Vector2<f64>)| {
        let (p1, d1) = l1;
        let (p2, d2) = l2;
        let det = d1[0] * (-d2[1]) - (-d2[0]) * d1[1];
        let rhs = p2 - p1;
        let s = (rhs[0] * (-d2[1]) - (-d2[0]) * rhs[1]) / det;
        p1 + s * d1
    };
    let mut points = Vec::new();
    let mut anchor_idx = std::collections::HashMap::new();
    for v in 0..3 {
        for &t in &ts {
            anchor_idx.insert((v, (t * 1e12) as i64), points.len());
            points.push(MotifPoint {
                xy: reference_edge_point(m, (v + 1) % m, t),
                anchor: Anchor::Edge((v + 1) % m, t),
            });
        }
    }
    // Interior points: one per assignment of distinct parameters to the
    // three cevians, skipping nothing — all 6 permutations concur.
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut interior_idx = Vec::new();
    for perm in perms {
        let p = intersect(cevian(0, ts[perm[0]]), cevian(1, ts[perm[1]]));
        interior_idx.push((perm, points.len()));
        points.push(MotifPoint { xy: p, anchor: Anchor::Interior });
    }
    let mut lines = Vec::new();
    for v in 0..3 {
        for (k, &t) in ts.iter().enumerate() {
            let anchor = anchor_idx[&(v, (t * 1e12) as i64)];
            let mut ids = vec![anchor];
            for (perm, idx) in &interior_idx {
                if perm[v] == k {
                    ids.push(*idx);
                }
            }
            lines.push(ids);
        }
    }
    let motif = Motif {
        name: name.to_string(),
        m,
        symmetry: MotifSymmetry::Dih,
        points,
        lines,
    };
    motif.validate(1e-9)?;
    Ok(motif)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    const TRI48: &str = include_str!("../data/tri48.motif");

    #[test]
    fn parse_and_roundtrip() {
        let m = Motif::parse(TRI48).unwrap();
        assert_eq!(m.name, "tri48");
        assert_eq!(m.m, 3);
        assert_eq!(m.symmetry, MotifSymmetry::Cyc);
        assert_eq!(m.points.len(), 6);
        assert_eq!(m.lines.len(), 3);
        assert_eq!(m.to_text(), TRI48, "bit-exact round trip");
    }

    #[test]
    fn validation_accepts_shipped_and_rejects_corrupted() {
        let mut m = Motif::parse(TRI48).unwrap();
        m.validate(1e-9).unwrap();
        m.points[3].xy[0] += 1e-6;
        assert!(m.validate(1e-9).is_err(), "perturbed interior point breaks collinearity");
    }

    #[test]
    fn mirrored_motif_remaps_anchors() {
        let m = Motif::parse(TRI48).unwrap();
        let mm = m.mirrored();
        mm.validate(1e-9).unwrap();
        match (m.points[1].anchor, mm.points[1].anchor) {
            (Anchor::Vertex(1), Anchor::Vertex(2)) => {}
            other => panic!("unexpected anchor remap {other:?}"),
        }
    }

    #[test]
    fn cevian_motif_shape() {
        let m = cevian_motif(0.25, "cevian25").unwrap();
        assert_eq!(m.points.len(), 15);
        assert_eq!(m.lines.len(), 9);
        assert!(m.edge_parameters_mirror_closed(1e-12));
        assert!(cevian_motif(0.0, "bad").is_err());
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(Motif::parse("pt 0 0 anchor=interior\n").is_err(), "missing header");
        assert!(Motif::parse("motif x m=3 sym=czz\n").is_err(), "bad symmetry");
        assert!(
            Motif::parse("motif x m=3 sym=cyc\nln 0 1\n").is_err(),
            "line referencing missing points"
        );
    }
}
