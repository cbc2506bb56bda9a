//! JSON file schemas and deterministic export builders.
//!
//! Every reader accepts exactly what the matching writer emits; rationals
//! travel as `"p/q"` strings. Serialization is canonical: struct field order,
//! sorted collections, no timestamps, so repeated exports are byte-identical.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::{FacePoset, GeometricRealization, TetraGraph, TETRA_EMBEDDING};
use crate::exact::Rat;
use crate::graph::GraphLabel;
use crate::linear::{LinearComposition, LinearSpine, Multiset1D};
use crate::rectangular::{Multiset2D, Rect, RectComposition, SpineComplex};
use crate::{Error, Result};

/// `{"n": int, "entries": [int]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct LinearCompositionFile {
    pub n: u64,
    pub entries: Vec<i64>,
}

impl From<&LinearComposition> for LinearCompositionFile {
    fn from(c: &LinearComposition) -> Self {
        LinearCompositionFile {
            n: c.n(),
            entries: c.entries().iter().map(|&e| e as i64).collect(),
        }
    }
}

impl LinearCompositionFile {
    pub fn parse(&self) -> Result<LinearComposition> {
        LinearComposition::with_expected_sum(self.entries.clone(), Some(self.n))
    }
}

/// `{"n": int, "matrix": [[int]]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct RectCompositionFile {
    pub n: u64,
    pub matrix: Vec<Vec<i64>>,
}

impl From<&RectComposition> for RectCompositionFile {
    fn from(c: &RectComposition) -> Self {
        RectCompositionFile {
            n: c.n(),
            matrix: c
                .matrix()
                .iter()
                .map(|row| row.iter().map(|&e| e as i64).collect())
                .collect(),
        }
    }
}

impl RectCompositionFile {
    pub fn parse(&self) -> Result<RectComposition> {
        let c = RectComposition::new(self.matrix.clone())?;
        if c.n() != self.n {
            return Err(Error::SumMismatch {
                expected: self.n,
                actual: c.n(),
            });
        }
        Ok(c)
    }
}

/// Either kind of composition file, told apart by its fields.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(untagged)]
pub enum CompositionFile {
    Linear(LinearCompositionFile),
    Rect(RectCompositionFile),
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Point1DFile {
    pub x: Rat,
    pub m: u64,
}

/// `{"interval": ["p/q", "p/q"], "points": [{"x": "p/q", "m": int}]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Multiset1DFile {
    pub interval: [Rat; 2],
    pub points: Vec<Point1DFile>,
}

impl From<&Multiset1D> for Multiset1DFile {
    fn from(x: &Multiset1D) -> Self {
        let (lo, hi) = x.interval();
        Multiset1DFile {
            interval: [lo, hi],
            points: x
                .support()
                .iter()
                .map(|&(x, m)| Point1DFile { x, m })
                .collect(),
        }
    }
}

impl Multiset1DFile {
    pub fn parse(&self) -> Result<Multiset1D> {
        Multiset1D::new(
            (self.interval[0], self.interval[1]),
            self.points.iter().map(|p| (p.x, p.m)).collect(),
        )
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Debug)]
pub struct RectFile {
    pub xl: Rat,
    pub xr: Rat,
    pub yb: Rat,
    pub yt: Rat,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Point2DFile {
    pub x: Rat,
    pub y: Rat,
    pub m: u64,
}

/// `{"rect": {"xl", "xr", "yb", "yt"}, "points": [{"x", "y", "m"}]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct Multiset2DFile {
    pub rect: RectFile,
    pub points: Vec<Point2DFile>,
}

impl From<&Multiset2D> for Multiset2DFile {
    fn from(z: &Multiset2D) -> Self {
        let r = z.rect();
        Multiset2DFile {
            rect: RectFile {
                xl: r.xl,
                xr: r.xr,
                yb: r.yb,
                yt: r.yt,
            },
            points: z
                .points()
                .iter()
                .map(|&(x, y, m)| Point2DFile { x, y, m })
                .collect(),
        }
    }
}

impl Multiset2DFile {
    pub fn parse(&self) -> Result<Multiset2D> {
        let rect = Rect::new(self.rect.xl, self.rect.xr, self.rect.yb, self.rect.yt)?;
        Multiset2D::new(rect, self.points.iter().map(|p| (p.x, p.y, p.m)).collect())
    }
}

/// Either kind of multiset file, told apart by `interval` vs `rect`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(untagged)]
pub enum MultisetFile {
    OneD(Multiset1DFile),
    TwoD(Multiset2DFile),
}

/// JSON form of a linear spine: split vertices plus weighted path edges.
pub fn linear_spine_json(c: &LinearComposition, spine: &LinearSpine, unit: Rat) -> Value {
    let vertices: Vec<Vec<u64>> = spine
        .vertices()
        .iter()
        .map(|v| v.entries().to_vec())
        .collect();
    let edges: Vec<Value> = spine
        .weights()
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            json!({
                "index": i + 1,
                "sq_units": w,
                "sq_length": spine.edge_sq_length(i, unit),
            })
        })
        .collect();
    json!({
        "n": c.n(),
        "composition": c.entries(),
        "vertices": vertices,
        "edges": edges,
    })
}

/// DOT form of a linear spine: a path with squared-length labels.
pub fn linear_spine_dot(spine: &LinearSpine) -> String {
    let key = |v: &LinearComposition| {
        let parts: Vec<String> = v.entries().iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    };
    let mut out = String::from("graph spine {\n");
    for v in spine.vertices() {
        out.push_str(&format!("  \"{}\";\n", key(v)));
    }
    for (i, &w) in spine.weights().iter().enumerate() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\", color=blue];\n",
            key(&spine.vertices()[i]),
            key(&spine.vertices()[i + 1]),
            w
        ));
    }
    out.push_str("}\n");
    out
}

/// JSON form of a bi-orthoscheme spine: the 2x2 vertex grid, colored edges
/// with exact squared lengths, and the unit faces.
pub fn rect_spine_json(
    c: &RectComposition,
    spine: &SpineComplex,
    unit_i: Rat,
    unit_j: Rat,
) -> Value {
    let edges: Vec<Value> = spine
        .edges()
        .iter()
        .map(|e| {
            json!({
                "at": [e.at.0, e.at.1],
                "dir": e.dir.as_str(),
                "color": e.color.as_str(),
                "sq_units": e.weight,
                "sq_length": e.sq_length(unit_i, unit_j),
            })
        })
        .collect();
    let faces: Vec<[usize; 2]> = spine.faces().iter().map(|&(i, j)| [i, j]).collect();
    json!({
        "n": c.n(),
        "grid": spine.grid(),
        "edges": edges,
        "faces": faces,
    })
}

/// DOT form of a bi-orthoscheme spine with the iconic edge colors.
pub fn rect_spine_dot(spine: &SpineComplex) -> String {
    let mut out = String::from("graph spine {\n");
    let (rows, cols) = spine.grid_shape();
    for i in 0..rows {
        for j in 0..cols {
            out.push_str(&format!("  \"{}\";\n", spine.vertex_key(i, j)));
        }
    }
    for e in spine.edges() {
        let (from, to) = e.endpoints();
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\", color={}];\n",
            spine.vertex_key(from.0, from.1),
            spine.vertex_key(to.0, to.1),
            e.weight,
            e.color.dot_color()
        ));
    }
    out.push_str("}\n");
    out
}

/// JSON form of a face poset: elements, covers, dims, and derived counts.
pub fn poset_json(poset: &FacePoset) -> Value {
    let elements: Vec<Value> = poset
        .elements()
        .iter()
        .map(|m| serde_json::to_value(RectCompositionFile::from(m)).expect("serializable"))
        .collect();
    let covers: Vec<[usize; 2]> = poset.covers().iter().map(|&(lo, hi)| [lo, hi]).collect();
    json!({
        "elements": elements,
        "covers": covers,
        "dims": poset.dims(),
        "f_vector": poset.f_vector(),
        "euler_characteristic": poset.euler_characteristic(),
    })
}

/// JSON form of the tetrahedral graph, with the embedding documented in the
/// header.
pub fn tetra_json(t: &TetraGraph) -> Value {
    let vertices: Vec<Value> = t
        .graph()
        .vertices()
        .iter()
        .zip(t.coords())
        .map(|(key, coord)| json!({ "key": key, "coords": coord }))
        .collect();
    let edges: Vec<Value> = t
        .graph()
        .edges()
        .map(|(u, v, l)| json!([u, v, { "color": l.as_str() }]))
        .collect();
    json!({
        "embedding": TETRA_EMBEDDING,
        "vertices": vertices,
        "edges": edges,
    })
}

/// JSON form of a geometric realization: float coordinates plus exact
/// declared squared lengths.
pub fn realization_json(r: &GeometricRealization) -> Value {
    let vertices: Vec<Value> = r
        .vertices()
        .iter()
        .zip(r.coords())
        .map(|(key, coord)| json!({ "key": key, "coords": coord }))
        .collect();
    let edges: Vec<Value> = r
        .edges()
        .iter()
        .map(|e| {
            json!({
                "from": r.vertices()[e.a],
                "to": r.vertices()[e.b],
                "label": e.label,
                "sq_length": e.sq_length,
            })
        })
        .collect();
    json!({ "vertices": vertices, "edges": edges })
}

/// Canonical text for a JSON export: pretty-printed plus a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    text
}

pub fn read_text(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &std::path::Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_files_round_trip() {
        let c = LinearComposition::new(vec![3, 4, 1, 2, 1]).unwrap();
        let file = LinearCompositionFile::from(&c);
        let text = render_json(&serde_json::to_value(&file).unwrap());
        let back: CompositionFile = parse_json(&text).unwrap();
        match back {
            CompositionFile::Linear(f) => assert_eq!(f.parse().unwrap(), c),
            CompositionFile::Rect(_) => panic!("expected linear"),
        }

        let m = RectComposition::new(vec![vec![0, 3, 0, 0], vec![0, 2, 4, 0], vec![0, 0, 4, 3]])
            .unwrap();
        let file = RectCompositionFile::from(&m);
        let text = render_json(&serde_json::to_value(&file).unwrap());
        let back: CompositionFile = parse_json(&text).unwrap();
        match back {
            CompositionFile::Rect(f) => assert_eq!(f.parse().unwrap(), m),
            CompositionFile::Linear(_) => panic!("expected rect"),
        }
    }

    #[test]
    fn multiset_1d_round_trip() {
        let x = Multiset1D::new(
            (Rat::zero(), Rat::one()),
            vec![(Rat::new(1, 3).unwrap(), 2), (Rat::one(), 1)],
        )
        .unwrap();
        let text = render_json(&serde_json::to_value(Multiset1DFile::from(&x)).unwrap());
        let back: Multiset1DFile = parse_json(&text).unwrap();
        assert_eq!(back.parse().unwrap(), x);
    }

    #[test]
    fn multiset_files_detected_by_shape() {
        let one: MultisetFile =
            parse_json(r#"{"interval": ["0/1", "1/1"], "points": [{"x": "1/2", "m": 2}]}"#)
                .unwrap();
        assert!(matches!(one, MultisetFile::OneD(_)));

        let two: MultisetFile = parse_json(
            r#"{"rect": {"xl": "0/1", "xr": "1/1", "yb": "0/1", "yt": "1/1"},
                "points": [{"x": "1/2", "y": "1/3", "m": 1}]}"#,
        )
        .unwrap();
        assert!(matches!(two, MultisetFile::TwoD(_)));
    }

    #[test]
    fn sum_mismatch_caught_on_parse() {
        let file = LinearCompositionFile {
            n: 5,
            entries: vec![1, 1],
        };
        assert!(matches!(
            file.parse(),
            Err(Error::SumMismatch {
                expected: 5,
                actual: 2
            })
        ));
        let file = RectCompositionFile {
            n: 3,
            matrix: vec![vec![1, 1], vec![0, 0]],
        };
        assert!(file.parse().is_err());
    }

    #[test]
    fn poset_export_shape() {
        let poset = crate::complexes::face_poset_rect(1).unwrap();
        let value = poset_json(&poset);
        assert_eq!(value["f_vector"], serde_json::json!([4, 4, 1]));
        assert_eq!(value["euler_characteristic"], 1);
        assert_eq!(value["elements"].as_array().unwrap().len(), 9);
        assert_eq!(value["dims"].as_array().unwrap().len(), 9);
        // Covers reference element indices and respect the grading.
        let dims = poset.dims();
        for cover in value["covers"].as_array().unwrap() {
            let lo = cover[0].as_u64().unwrap() as usize;
            let hi = cover[1].as_u64().unwrap() as usize;
            assert_eq!(dims[lo] + 1, dims[hi]);
        }
    }

    #[test]
    fn renders_are_deterministic() {
        let t = crate::complexes::tetra_graph(2);
        let a = render_json(&tetra_json(&t));
        let b = render_json(&tetra_json(&t));
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
