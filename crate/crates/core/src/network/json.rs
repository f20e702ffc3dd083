//! JSON network documents.
//!
//! ```json
//! { "points": ["a","p1","p2","b"],
//!   "alice": "a", "bob": "b",
//!   "edges": [ {"id":"e1","u":"a","v":"p1","channel":{"kind":"lossy","eta":0.5}} ] }
//! ```
//!
//! Unknown fields and unknown channel kinds are rejected.

use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use super::{Edge, QNetwork};
use crate::channel::ChannelSpec;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    points: Vec<String>,
    alice: String,
    bob: String,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    u: String,
    v: String,
    channel: ChannelSpec,
}

pub fn parse_network(document: &str) -> Result<QNetwork> {
    let doc: NetworkDoc = serde_json::from_str(document).map_err(|e| match e.classify() {
        Category::Data => Error::Validation(e.to_string()),
        Category::Syntax | Category::Eof | Category::Io => Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
    })?;
    QNetwork::new(
        doc.points,
        doc.alice,
        doc.bob,
        doc.edges
            .into_iter()
            .map(|e| Edge::new(e.id, e.u, e.v, e.channel)),
    )
}

/// Canonical text form: one edge per line, numbers in shortest round-trip
/// decimal form, trailing newline.
pub fn serialize_network(net: &QNetwork) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"points\": {},\n", json(&net.points)));
    out.push_str(&format!("  \"alice\": {},\n", json(net.alice())));
    out.push_str(&format!("  \"bob\": {},\n", json(net.bob())));
    if net.edges.is_empty() {
        out.push_str("  \"edges\": []\n");
    } else {
        out.push_str("  \"edges\": [\n");
        for (i, edge) in net.edges.iter().enumerate() {
            let doc = EdgeDoc {
                id: edge.id.clone(),
                u: edge.u.clone(),
                v: edge.v.clone(),
                channel: edge.channel.clone(),
            };
            let sep = if i + 1 == net.edges.len() { "" } else { "," };
            out.push_str(&format!("    {}{sep}\n", json(&doc)));
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("network values serialize")
}
