//! JSON documents for polygons, duality reports and zigzag diagrams. Keys
//! come out sorted; integers are exact.

use lattice_cf::graphs::JSON_SCHEMA;
use lattice_cf::lattice::{ConePolygon, DualityReport, EdgeRef, LatticeVector};
use lattice_cf::zigzag::{Reading, ZigzagDiagram};
use num_bigint::BigInt;
use serde_json::{json, Value};

fn int(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn point(v: &LatticeVector) -> Value {
    json!([int(&v.x), int(&v.y)])
}

fn finish(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

/// Points in the standard frame `A_0 = (1,0)`, `A_1 = (1,1)`.
pub fn polygon(poly: &ConePolygon) -> String {
    finish(json!({
        "schema": JSON_SCHEMA,
        "kind": "polygon",
        "p": int(poly.cone.p()),
        "q": int(poly.cone.q()),
        "points": poly.points.iter().map(point).collect::<Vec<_>>(),
        "weights": ints(&poly.weights),
        "vertices": poly.vertex_indices,
        "edge_lengths": ints(&poly.edge_lengths()),
    }))
}

fn edge_name(e: &EdgeRef) -> Value {
    match e {
        EdgeRef::HalfLineMinus => json!("half-line-minus"),
        EdgeRef::Compact { from, to } => json!([from, to]),
        EdgeRef::HalfLinePlus => json!("half-line-plus"),
    }
}

/// Points in normal-form coordinates of the cone.
pub fn duality(rep: &DualityReport) -> String {
    let pairs: Vec<Value> = rep
        .pairs
        .iter()
        .map(|pr| {
            json!({
                "edge": edge_name(&pr.edge),
                "length": pr.length.as_ref().map(int),
                "image": point(&pr.image),
                "image_index": pr.image_index,
                "image_is_vertex": pr.image_is_vertex,
                "exceptional": pr.exceptional,
            })
        })
        .collect();
    finish(json!({
        "schema": JSON_SCHEMA,
        "kind": "duality-report",
        "cone": rep.cone.to_string(),
        "supplementary": rep.supplementary.to_string(),
        "supplementary_points": rep.supplementary_points.iter().map(point).collect::<Vec<_>>(),
        "supplementary_vertices": rep.supplementary_vertices,
        "pairs": pairs,
        "respects_orientation": rep.respects_orientation,
        "vertices_in_image": rep.vertices_in_image,
        "image_in_polygon": rep.image_in_polygon,
        "exceptional_rule": rep.exceptional_rule,
        "vertex_sets_equal": rep.vertex_sets_equal,
        "passes": rep.passes(),
    }))
}

pub fn zigzag(d: &ZigzagDiagram) -> String {
    let read = |r: Reading| ints(d.read(r).terms());
    finish(json!({
        "schema": JSON_SCHEMA,
        "kind": "zigzag",
        "lambda": d.lambda().to_string(),
        "s": d.s(),
        "right_edges": ints(&d.right_edges),
        "right_weights": ints(&d.right_weights),
        "left_edges": ints(&d.left_edges),
        "left_weights": ints(&d.left_weights),
        "first_left_is_vertex": d.first_left_is_vertex,
        "last_left_is_vertex": d.last_left_is_vertex,
        "readings": {
            "hj": read(Reading::HjLambda),
            "hj-dual": read(Reading::HjInvolute),
            "e": read(Reading::ELambda),
            "e-dual": read(Reading::EInvolute),
        },
    }))
}
