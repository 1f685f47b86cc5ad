//! External-format fixtures: a hand-transcribed planar incidence
//! figure, and byte-stability of the bundled motif files.

use nalgebra::Vector3;

use platcfg::incidence::{
    census, fit_line, format_signature, ConfigLine, ConfigMeta, ConfigPoint,
    GeometricConfiguration, LineKind, Provenance,
};
use platcfg::motif::Motif;

/// A digitized drawing of an 18-point, 15-line figure with census
/// (6_4 12_3, 15_4). Coordinates were read off a plot, so collinearity
/// only holds loosely; the census is exact.
#[test]
fn digitized_figure_has_expected_census() {
    let text = include_str!("data/fig1.json");
    let data: serde_json::Value = serde_json::from_str(text).expect("fixture parses");
    let tolerance = data["tolerance"].as_f64().unwrap();

    let points: Vec<ConfigPoint> = data["points"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(id, xy)| ConfigPoint {
            id,
            position: Vector3::new(
                xy[0].as_f64().unwrap(),
                xy[1].as_f64().unwrap(),
                0.0,
            ),
            provenance: Provenance::Free,
            layer: 0,
        })
        .collect();

    let lines: Vec<ConfigLine> = data["lines"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(id, ids)| {
            let point_ids: Vec<usize> =
                ids.as_array().unwrap().iter().map(|i| i.as_u64().unwrap() as usize).collect();
            let positions: Vec<_> = point_ids.iter().map(|&i| points[i].position).collect();
            let (centroid, direction, residual) = fit_line(&positions);
            assert!(residual <= tolerance, "line {id} bends by {residual}");
            ConfigLine { id, point_ids, kind: LineKind::Motif, support: (centroid, direction) }
        })
        .collect();

    let config = GeometricConfiguration {
        points,
        lines,
        meta: ConfigMeta {
            name: "digitized_figure".into(),
            solid: "tetrahedron".into(),
            layer_scales: vec![1.0],
            symmetry_class: "neither".into(),
        },
    };
    assert_eq!(format_signature(&census(&config)), "(6_4 12_3, 15_4)");
}

/// Every bundled motif file parses, validates, and reprints to the
/// exact bytes on disk.
#[test]
fn bundled_motif_files_round_trip_byte_exact() {
    let dir = format!("{}/data", env!("CARGO_MANIFEST_DIR"));
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).expect("data dir") {
        let path = entry.expect("dir entry").path();
        if path.extension().map(|e| e != "motif").unwrap_or(true) {
            continue;
        }
        let text = std::fs::read_to_string(&path).expect("read motif");
        let motif = Motif::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        motif.validate(1e-9).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(motif.to_text(), text, "{} is not byte-stable", path.display());
        seen += 1;
    }
    assert_eq!(seen, 14, "all bundled motifs checked");
}
