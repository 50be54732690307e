//! JSON exchange format for models and reduction outputs.
//!
//! All coordinates are integers in 1/20 units. Writing is deterministic: the
//! same output always serializes to the same bytes, one vertex or edge per
//! line. Reading accepts full reduction outputs as well as bare models that
//! carry only `vertices` (with `id`, `x`, `y`) and `edges`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Point, SCALE};
use crate::graph::{Edge, Graph, GraphError};
use crate::model::{ModelError, ProximityModel};
use crate::reduction::{Origin, Provenance, ReductionOutput, Role};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported scale {0}; expected {SCALE}")]
    Scale(i64),
    #[error("vertex ids must be 0..n in order; found {found} at position {pos}")]
    VertexIds { pos: usize, found: usize },
    #[error("coordinate ({0}, {1}) is out of range")]
    Coordinate(i64, i64),
    #[error("unknown role {0:?}")]
    Role(String),
    #[error("roles must be given for every vertex or for none")]
    PartialRoles,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: usize,
    x: i64,
    y: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    origin: Option<OriginRecord>,
}

#[derive(Serialize, Deserialize, Default)]
struct OriginRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edge: Option<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    crossing: Option<(i64, i64)>,
}

#[derive(Serialize, Deserialize)]
struct EdgeCount {
    edge: Edge,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct SourceRecord {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct ModelDocument {
    #[serde(default)]
    scale: Option<i64>,
    vertices: Vec<VertexRecord>,
    edges: Vec<Edge>,
    #[serde(default)]
    k: Option<usize>,
    #[serde(default)]
    t: Option<usize>,
    #[serde(default)]
    per_edge_subdivisions: Option<Vec<EdgeCount>>,
    #[serde(default)]
    source: Option<SourceRecord>,
}

/// A model read from JSON, with whatever reduction metadata it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub model: ProximityModel,
    pub provenance: Option<Vec<Provenance>>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub per_edge_subdivisions: Option<BTreeMap<Edge, usize>>,
    pub source: Option<Graph>,
}

fn line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain records serialize")
}

fn write_document(
    m: &ProximityModel,
    provenance: Option<&[Provenance]>,
    extra: &[(&str, String)],
) -> String {
    let vertices: Vec<String> = m
        .points()
        .iter()
        .enumerate()
        .map(|(id, p)| {
            let prov = provenance.map(|pr| pr[id]);
            line(&VertexRecord {
                id,
                x: p.x,
                y: p.y,
                role: prov.map(|p| p.role.as_str().to_string()),
                origin: prov.map(|p| OriginRecord {
                    vertex: p.origin.vertex,
                    edge: p.origin.edge,
                    crossing: p.origin.crossing,
                }),
            })
        })
        .collect();
    let edges: Vec<String> = m.graph().edges().map(|e| line(&e)).collect();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"scale\": {SCALE},\n"));
    push_list(&mut out, "vertices", &vertices);
    out.push_str(",\n");
    push_list(&mut out, "edges", &edges);
    for (key, value) in extra {
        out.push_str(&format!(",\n  \"{key}\": {value}"));
    }
    out.push_str("\n}\n");
    out
}

fn push_list(out: &mut String, key: &str, items: &[String]) {
    if items.is_empty() {
        out.push_str(&format!("  \"{key}\": []"));
        return;
    }
    out.push_str(&format!("  \"{key}\": [\n    "));
    out.push_str(&items.join(",\n    "));
    out.push_str("\n  ]");
}

/// Serializes a bare model.
pub fn model_to_json(m: &ProximityModel) -> String {
    write_document(m, None, &[])
}

/// Serializes a reduction output with provenance and counters.
pub fn reduction_to_json(r: &ReductionOutput) -> String {
    let counts: Vec<EdgeCount> = r
        .per_edge_subdivisions
        .iter()
        .map(|(&edge, &count)| EdgeCount { edge, count })
        .collect();
    let source = SourceRecord {
        n: r.source.n(),
        edges: r.source.edges().collect(),
    };
    write_document(
        &r.model,
        Some(&r.provenance),
        &[
            ("k", r.k.to_string()),
            ("t", r.t.to_string()),
            ("per_edge_subdivisions", line(&counts)),
            ("source", line(&source)),
        ],
    )
}

/// Parses a model or reduction output.
pub fn model_from_json(text: &str) -> Result<ModelFile, IoError> {
    let doc: ModelDocument = serde_json::from_str(text)?;
    if let Some(s) = doc.scale.filter(|&s| s != SCALE) {
        return Err(IoError::Scale(s));
    }
    let mut points = Vec::with_capacity(doc.vertices.len());
    let mut roles = Vec::new();
    for (pos, v) in doc.vertices.iter().enumerate() {
        if v.id != pos {
            return Err(IoError::VertexIds { pos, found: v.id });
        }
        points.push(Point::try_new(v.x, v.y).map_err(|_| IoError::Coordinate(v.x, v.y))?);
        if let Some(name) = &v.role {
            let role = Role::parse(name).ok_or_else(|| IoError::Role(name.clone()))?;
            let o = v.origin.as_ref();
            roles.push(Provenance {
                role,
                origin: Origin {
                    vertex: o.and_then(|o| o.vertex),
                    edge: o.and_then(|o| o.edge),
                    crossing: o.and_then(|o| o.crossing),
                },
            });
        }
    }
    let provenance = match roles.len() {
        0 => None,
        n if n == points.len() => Some(roles),
        _ => return Err(IoError::PartialRoles),
    };
    let graph = Graph::new(points.len(), doc.edges)?;
    let model = ProximityModel::new(graph, points)?;
    let source = doc
        .source
        .map(|s| Graph::new(s.n, s.edges))
        .transpose()?;
    Ok(ModelFile {
        model,
        provenance,
        k: doc.k,
        t: doc.t,
        per_edge_subdivisions: doc
            .per_edge_subdivisions
            .map(|v| v.into_iter().map(|c| (c.edge, c.count)).collect()),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::h_model;
    use crate::graph::named::complete;
    use crate::reduction::reduce;

    #[test]
    fn bare_model_round_trip() {
        let m = h_model(Point::mesh(3, -2));
        let text = model_to_json(&m);
        let back = model_from_json(&text).unwrap();
        assert_eq!(back.model, m);
        assert!(back.provenance.is_none() && back.k.is_none());
    }

    #[test]
    fn reduction_round_trip_is_lossless() {
        let r = reduce(&complete(4)).unwrap();
        let text = reduction_to_json(&r);
        let back = model_from_json(&text).unwrap();
        assert_eq!(back.model, r.model);
        assert_eq!(back.provenance.as_deref(), Some(&r.provenance[..]));
        assert_eq!((back.k, back.t), (Some(r.k), Some(r.t)));
        assert_eq!(back.per_edge_subdivisions.as_ref(), Some(&r.per_edge_subdivisions));
        assert_eq!(back.source, Some(complete(4)));
        assert_eq!(text, reduction_to_json(&reduce(&complete(4)).unwrap()));
    }

    #[test]
    fn empty_model() {
        let m = ProximityModel::new(Graph::empty(0), vec![]).unwrap();
        let text = model_to_json(&m);
        assert_eq!(model_from_json(&text).unwrap().model, m);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(model_from_json("{"), Err(IoError::Json(_))));
        let wrong_ids = r#"{"vertices":[{"id":1,"x":0,"y":0}],"edges":[]}"#;
        assert!(matches!(model_from_json(wrong_ids), Err(IoError::VertexIds { .. })));
        let scale = r#"{"scale":10,"vertices":[],"edges":[]}"#;
        assert!(matches!(model_from_json(scale), Err(IoError::Scale(10))));
        let same = r#"{"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":0,"y":0}],"edges":[]}"#;
        assert!(matches!(model_from_json(same), Err(IoError::Model(_))));
        let role = r#"{"vertices":[{"id":0,"x":0,"y":0,"role":"hub"}],"edges":[]}"#;
        assert!(matches!(model_from_json(role), Err(IoError::Role(_))));
    }
}
