//! Machine-readable verdict reports. Field order is fixed by the struct
//! declarations and every field is always present, so identical
//! invocations print byte-identical JSON. Point sets are embedded in the
//! document format so witnesses can be saved and re-checked directly.

use serde::Serialize;

use gridtopo::{
    ComponentPartition, Cube, DoublePointWitness, GoodPairFailure, ManifoldFailure, Point,
    SeparationWitness, Translation,
};

use crate::document::PointSetDocument;

pub fn point_repr(p: &Point) -> Vec<i32> {
    p.coords().to_vec()
}

fn translation_repr(t: &Translation) -> Vec<i32> {
    t.delta().to_vec()
}

#[derive(Serialize)]
pub struct CubeRepr {
    pub anchor: Vec<i32>,
    pub axes: Vec<usize>,
}

impl CubeRepr {
    fn new(c: &Cube) -> Self {
        CubeRepr { anchor: point_repr(&c.anchor()), axes: c.axes() }
    }
}

#[derive(Serialize)]
pub struct SeparationWitnessRepr {
    pub cube: CubeRepr,
    pub subcube: CubeRepr,
    pub tau1: Vec<i32>,
    pub tau2: Vec<i32>,
    pub component: PointSetDocument,
}

impl SeparationWitnessRepr {
    pub fn new(w: &SeparationWitness) -> Self {
        SeparationWitnessRepr {
            cube: CubeRepr::new(&w.cube),
            subcube: CubeRepr::new(&w.subcube),
            tau1: translation_repr(&w.tau1),
            tau2: translation_repr(&w.tau2),
            component: PointSetDocument::from_set(&w.component),
        }
    }
}

#[derive(Serialize)]
pub struct ManifoldFailureRepr {
    /// 1 to 4, or null when the set is not even connected.
    pub axiom: Option<u8>,
    pub kind: &'static str,
    pub description: String,
    pub component_count: Option<usize>,
    pub cube: Option<CubeRepr>,
    pub point: Option<Vec<i32>>,
    pub neighbor: Option<Vec<i32>>,
    pub block: Option<PointSetDocument>,
    pub separation: Option<SeparationWitnessRepr>,
}

impl ManifoldFailureRepr {
    pub fn new(failure: &ManifoldFailure) -> Self {
        let mut repr = ManifoldFailureRepr {
            axiom: failure.axiom(),
            kind: "",
            description: failure.to_string(),
            component_count: None,
            cube: None,
            point: None,
            neighbor: None,
            block: None,
            separation: None,
        };
        match failure {
            ManifoldFailure::NotAlphaConnected { component_count } => {
                repr.kind = "not-connected";
                repr.component_count = Some(*component_count);
            }
            ManifoldFailure::CubeDisconnected { cube, component_count } => {
                repr.kind = "cube-disconnected";
                repr.cube = Some(CubeRepr::new(cube));
                repr.component_count = Some(*component_count);
            }
            ManifoldFailure::ComplementSplit { point, component_count } => {
                repr.kind = "complement-split";
                repr.point = Some(point_repr(point));
                repr.component_count = Some(*component_count);
            }
            ManifoldFailure::BackgroundContact { point, neighbor, block } => {
                repr.kind = "background-contact";
                repr.point = Some(point_repr(point));
                repr.neighbor = Some(point_repr(neighbor));
                repr.block = Some(PointSetDocument::from_set(block));
            }
            ManifoldFailure::Separation(witness) => {
                repr.kind = "separation";
                repr.separation = Some(SeparationWitnessRepr::new(witness));
            }
        }
        repr
    }
}

#[derive(Serialize)]
pub struct DoublePointRepr {
    pub point: Vec<i32>,
    pub q: Vec<i32>,
    pub r: Vec<i32>,
    pub translation: Vec<i32>,
}

impl DoublePointRepr {
    fn new(w: &DoublePointWitness) -> Self {
        DoublePointRepr {
            point: point_repr(&w.point),
            q: point_repr(&w.q),
            r: point_repr(&w.r),
            translation: translation_repr(&w.translation),
        }
    }
}

#[derive(Serialize)]
pub struct GoodPairFailureRepr {
    pub kind: &'static str,
    pub reference: Vec<i32>,
    pub manifold: Option<ManifoldFailureRepr>,
    pub double_point: Option<DoublePointRepr>,
}

impl GoodPairFailureRepr {
    pub fn new(failure: &GoodPairFailure) -> Self {
        match failure {
            GoodPairFailure::Manifold { reference, failure } => GoodPairFailureRepr {
                kind: "manifold",
                reference: point_repr(reference),
                manifold: Some(ManifoldFailureRepr::new(failure)),
                double_point: None,
            },
            GoodPairFailure::DoublePoint { reference, witness } => GoodPairFailureRepr {
                kind: "double-point",
                reference: point_repr(reference),
                manifold: None,
                double_point: Some(DoublePointRepr::new(witness)),
            },
        }
    }
}

pub fn partition_blocks(partition: &ComponentPartition) -> Vec<PointSetDocument> {
    partition.blocks().iter().map(PointSetDocument::from_set).collect()
}

#[derive(Serialize)]
pub struct ComponentsReport {
    pub command: &'static str,
    pub adjacency: String,
    pub complement: bool,
    pub block_count: usize,
    pub unbounded_index: Option<usize>,
    pub blocks: Vec<PointSetDocument>,
}

#[derive(Serialize)]
pub struct ManifoldReport {
    pub command: &'static str,
    pub alpha: String,
    pub beta: String,
    pub holds: bool,
    pub failed_axiom: Option<u8>,
    pub witness: Option<ManifoldFailureRepr>,
}

#[derive(Serialize)]
pub struct GoodPairReport {
    pub command: &'static str,
    pub dim: usize,
    pub alpha: String,
    pub beta: String,
    pub good: bool,
    pub witness: Option<GoodPairFailureRepr>,
}

#[derive(Serialize)]
pub struct SurfaceReport {
    pub command: &'static str,
    pub dim: usize,
    pub point: Vec<i32>,
    pub topology: &'static str,
    pub surface_rank: usize,
    pub is_surface: bool,
    pub sphere: PointSetDocument,
}

#[derive(Serialize)]
pub struct JordanReportRepr {
    pub command: &'static str,
    pub alpha: String,
    pub beta: String,
    pub component_count: usize,
    pub all_points_touch_all_blocks: bool,
    pub two_sided: bool,
    pub unbounded_index: Option<usize>,
    pub blocks: Vec<PointSetDocument>,
}

/// Renders JSON with objects broken over lines but arrays kept inline
/// when they hold only scalars, so point lists stay one point per line.
pub fn to_display_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report serialization cannot fail");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out
}

pub fn print_json<T: Serialize>(report: &T) {
    println!("{}", to_display_json(report));
}

fn is_scalar(value: &serde_json::Value) -> bool {
    !(value.is_array() || value.is_object())
}

fn write_value(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    let closing_pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Array(items) if items.is_empty() => out.push_str("[]"),
        serde_json::Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        serde_json::Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&closing_pad);
            out.push(']');
        }
        serde_json::Value::Object(fields) if fields.is_empty() => out.push_str("{}"),
        serde_json::Value::Object(fields) => {
            out.push_str("{\n");
            for (i, (key, item)) in fields.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                if i + 1 < fields.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&closing_pad);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
