//! External formats: canonical JSON documents, Levi text, DOT, and OBJ.
//!
//! # Purpose
//!
//! Serialize configurations for storage, diffing, and downstream tools.
//! The JSON writer is canonical — fixed field order, one record per
//! line, floats printed with 15 significant digits — so an exported
//! document re-imported and re-exported is byte-identical.
//!
//! # Why
//!
//! 15 significant digits is the shortest precision at which every value
//! that survives one decimal round trip becomes a fixed point: parsing
//! a 15-digit decimal into an f64 and printing it again reproduces the
//! same decimal, so byte-identity only needs one export to stabilize.

use std::fmt::Write as _;

use nalgebra::Vector3;
use thiserror::Error;

use crate::incidence::{
    fit_line, ConfigLine, ConfigMeta, ConfigPoint, GeometricConfiguration, LineKind, Provenance,
};
use crate::symmetry::SymmetryClass;

/// Errors from document parsing.
#[derive(Debug, Error)]
pub enum IoError {
    /// Malformed JSON or missing/ill-typed field.
    #[error("document error: {0}")]
    Document(String),
}

fn doc_err(reason: impl Into<String>) -> IoError {
    IoError::Document(reason.into())
}

// ---------------------------------------------------------------------------
// Float formatting
// ---------------------------------------------------------------------------

/// Format with 15 significant digits, trailing zeros stripped —
/// the behaviour of C's `%.15g`. Zero prints as `0` (or `-0`), values
/// with decimal exponent in [-4, 15) print in fixed notation, the rest
/// in scientific notation with a two-digit exponent.
pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    // 14 digits after the point in scientific form = 15 significant.
    let sci = format!("{:.14e}", x);
    let (mant, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..15).contains(&exp) {
        let prec = (14 - exp) as usize;
        let fixed = format!("{:.*}", prec, x);
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    } else {
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", mant, sign, exp.abs())
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization")
}

// ---------------------------------------------------------------------------
// Canonical JSON documents
// ---------------------------------------------------------------------------

/// Serialize a configuration to the canonical JSON document form.
pub fn to_json(config: &GeometricConfiguration) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let scales: Vec<String> = config.meta.layer_scales.iter().map(|&s| fmt_g15(s)).collect();
    let _ = writeln!(
        out,
        "  \"meta\": {{\"name\": {}, \"solid\": {}, \"layer_scales\": [{}], \"symmetry_class\": {}}},",
        json_string(&config.meta.name),
        json_string(&config.meta.solid),
        scales.join(", "),
        json_string(&config.meta.symmetry_class),
    );
    out.push_str("  \"points\": [\n");
    for (i, p) in config.points.iter().enumerate() {
        let sep = if i + 1 == config.points.len() { "" } else { "," };
        let _ = writeln!(
            out,
            "    {{\"id\": {}, \"xyz\": [{}, {}, {}], \"provenance\": {}, \"layer\": {}}}{}",
            p.id,
            fmt_g15(p.position[0]),
            fmt_g15(p.position[1]),
            fmt_g15(p.position[2]),
            json_string(p.provenance.tag()),
            p.layer,
            sep,
        );
    }
    out.push_str("  ],\n");
    out.push_str("  \"lines\": [\n");
    for (i, l) in config.lines.iter().enumerate() {
        let sep = if i + 1 == config.lines.len() { "" } else { "," };
        let ids: Vec<String> = l.point_ids.iter().map(|id| id.to_string()).collect();
        let _ = writeln!(
            out,
            "    {{\"id\": {}, \"points\": [{}], \"kind\": {}}}{}",
            l.id,
            ids.join(", "),
            json_string(l.kind.tag()),
            sep,
        );
    }
    out.push_str("  ]\n}\n");
    out
}

/// Parse a JSON document back into a configuration. Line supports are
/// recomputed from the point positions.
pub fn from_json(text: &str) -> Result<GeometricConfiguration, IoError> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| doc_err(format!("bad JSON: {e}")))?;
    let meta = doc.get("meta").ok_or_else(|| doc_err("missing meta"))?;
    let get_str = |v: &serde_json::Value, key: &str| -> Result<String, IoError> {
        v.get(key)
            .and_then(|x| x.as_str())
            .map(str::to_string)
            .ok_or_else(|| doc_err(format!("missing string field '{key}'")))
    };
    let layer_scales: Vec<f64> = meta
        .get("layer_scales")
        .and_then(|v| v.as_array())
        .ok_or_else(|| doc_err("missing layer_scales"))?
        .iter()
        .map(|x| x.as_f64().ok_or_else(|| doc_err("bad layer scale")))
        .collect::<Result<_, _>>()?;
    let symmetry_class = get_str(meta, "symmetry_class")?;
    SymmetryClass::parse(&symmetry_class).ok_or_else(|| doc_err("unknown symmetry class"))?;
    let meta = ConfigMeta {
        name: get_str(meta, "name")?,
        solid: get_str(meta, "solid")?,
        layer_scales,
        symmetry_class,
    };

    let mut points = Vec::new();
    for p in doc
        .get("points")
        .and_then(|v| v.as_array())
        .ok_or_else(|| doc_err("missing points"))?
    {
        let xyz = p
            .get("xyz")
            .and_then(|v| v.as_array())
            .filter(|a| a.len() == 3)
            .ok_or_else(|| doc_err("bad xyz"))?;
        let coord = |i: usize| xyz[i].as_f64().ok_or_else(|| doc_err("bad coordinate"));
        points.push(ConfigPoint {
            id: p
                .get("id")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| doc_err("bad point id"))? as usize,
            position: Vector3::new(coord(0)?, coord(1)?, coord(2)?),
            provenance: Provenance::parse(&get_str(p, "provenance")?)
                .ok_or_else(|| doc_err("unknown provenance"))?,
            layer: p
                .get("layer")
                .and_then(|v| v.as_i64())
                .ok_or_else(|| doc_err("bad layer"))? as i32,
        });
    }

    let by_id: std::collections::HashMap<usize, Vector3<f64>> =
        points.iter().map(|p| (p.id, p.position)).collect();
    let mut lines = Vec::new();
    for l in doc
        .get("lines")
        .and_then(|v| v.as_array())
        .ok_or_else(|| doc_err("missing lines"))?
    {
        let point_ids: Vec<usize> = l
            .get("points")
            .and_then(|v| v.as_array())
            .ok_or_else(|| doc_err("missing line points"))?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| doc_err("bad line point id")))
            .collect::<Result<_, _>>()?;
        let positions: Vec<Vector3<f64>> = point_ids
            .iter()
            .map(|id| by_id.get(id).copied().ok_or_else(|| doc_err(format!("line uses unknown point {id}"))))
            .collect::<Result<_, _>>()?;
        let (origin, direction, _) = fit_line(&positions);
        lines.push(ConfigLine {
            id: l
                .get("id")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| doc_err("bad line id"))? as usize,
            point_ids,
            kind: LineKind::parse(&get_str(l, "kind")?)
                .ok_or_else(|| doc_err("unknown line kind"))?,
            support: (origin, direction),
        });
    }

    Ok(GeometricConfiguration { points, lines, meta })
}

// ---------------------------------------------------------------------------
// OBJ export
// ---------------------------------------------------------------------------

/// Export to Wavefront OBJ: one `v` record per point and one 1-based
/// `l` polyline per configuration line.
pub fn to_obj(config: &GeometricConfiguration) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", config.meta.name);
    let index_of: std::collections::HashMap<usize, usize> =
        config.points.iter().enumerate().map(|(i, p)| (p.id, i + 1)).collect();
    for p in &config.points {
        let _ = writeln!(
            out,
            "v {} {} {}",
            fmt_g15(p.position[0]),
            fmt_g15(p.position[1]),
            fmt_g15(p.position[2])
        );
    }
    for l in &config.lines {
        let ids: Vec<String> = l.point_ids.iter().map(|id| index_of[id].to_string()).collect();
        let _ = writeln!(out, "l {}", ids.join(" "));
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
