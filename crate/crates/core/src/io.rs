//! JSON input formats and name-resolved JSON views of results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cone::LatticePoint;
use crate::error::{Error, Result};
use crate::locus::{PrimeKind, PrimeLabel};
use crate::poset::{Poset, Warning};
use crate::trace::{Certificate, ChainTuple, Classification, Membership, Witness};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset) -> Self {
        PosetFile { elements: p.names(), covers: p.cover_names() }
    }

    pub fn build(&self) -> Result<(Poset, Vec<Warning>)> {
        Poset::build(&self.elements, &self.covers)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PointFile {
    pub degree: i64,
    #[serde(default)]
    pub values: BTreeMap<String, i64>,
}

pub fn parse_poset(text: &str) -> Result<(Poset, Vec<Warning>)> {
    let f: PosetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.build()
}

/// Read a point for `p`. Unlisted elements get 0. A value at the top is
/// rejected; a value at the bottom must repeat the degree.
pub fn parse_point(p: &Poset, text: &str) -> Result<LatticePoint> {
    let f: PointFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    point_from_file(p, &f)
}

pub fn point_from_file(p: &Poset, f: &PointFile) -> Result<LatticePoint> {
    let mut values = vec![0; p.len()];
    for (k, &v) in &f.values {
        match k.as_str() {
            "inf" | "+inf" | "∞" => return Err(Error::ValueAtInfinity),
            "-inf" => {
                if v != f.degree {
                    return Err(Error::Parse("value at -inf differs from the degree".into()));
                }
            }
            name => values[p.lookup(name)?] = v,
        }
    }
    Ok(LatticePoint::new(values, f.degree))
}

pub fn point_to_file(p: &Poset, x: &LatticePoint) -> PointFile {
    PointFile { degree: x.degree, values: (0..p.len()).map(|i| (p.name(i), x.values[i])).collect() }
}

/// Name of an index of the doubly extended poset.
pub fn ext_name(p: &Poset, i: usize) -> String {
    let n = p.len();
    if i < n {
        p.name(i)
    } else if i == n {
        "-inf".into()
    } else {
        "inf".into()
    }
}

fn names(p: &Poset, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| ext_name(p, i)).collect()
}

pub fn point_json(p: &Poset, x: &LatticePoint) -> Value {
    json!(point_to_file(p, x))
}

fn tuple_json(p: &Poset, t: &ChainTuple) -> Value {
    json!({
        "lower": t.lower.iter().map(|c| names(p, c)).collect::<Vec<_>>(),
        "upper": t.upper.iter().map(|c| names(p, c)).collect::<Vec<_>>(),
    })
}

pub fn witness_json(p: &Poset, w: &Witness) -> Value {
    match w {
        Witness::NonPureStar { chain } => json!({"kind": "non_pure_star", "chain": names(p, chain)}),
        Witness::BadCycle { tuple } => json!({"kind": "bad_cycle", "tuple": tuple_json(p, tuple)}),
        Witness::OrderCycle { sequence } => json!({
            "kind": "order_cycle",
            "a": names(p, &sequence.a),
            "b": names(p, &sequence.b),
        }),
    }
}

pub fn certificate_json(p: &Poset, c: &Certificate) -> Value {
    json!({
        "ring": c.ring,
        "N": c.n,
        "exponent": c.n,
        "eta": point_json(p, &c.eta),
        "zeta": point_json(p, &c.zeta),
    })
}

pub fn membership_json(p: &Poset, m: &Membership) -> Value {
    match m {
        Membership::Member { certificate } => json!({
            "member": true,
            "certificate": certificate.as_ref().map(|c| certificate_json(p, c)),
        }),
        Membership::NonMember { witness } => json!({"member": false, "witness": witness_json(p, witness)}),
    }
}

pub fn label_json(p: &Poset, l: &PrimeLabel) -> Value {
    let data = match &l.kind {
        PrimeKind::ChainStar { chain } => json!({"chain": names(p, chain)}),
        PrimeKind::ChainCycle { tuple } => tuple_json(p, tuple),
        PrimeKind::OrderCycle { sequence } => json!({"a": names(p, &sequence.a), "b": names(p, &sequence.b)}),
    };
    let kind = match &l.kind {
        PrimeKind::ChainStar { .. } => "chain_star",
        PrimeKind::ChainCycle { .. } => "chain_cycle",
        PrimeKind::OrderCycle { .. } => "order_cycle",
    };
    json!({
        "kind": kind,
        "data": data,
        "coheight": l.coheight,
        "face_dim": l.face_dim,
        "face_vertex_count": l.face_vertices.len(),
        "minimal": l.minimal,
    })
}

pub fn classification_json(c: &Classification) -> Value {
    json!(c)
}
