//! JSON documents for subgraphs and certificates, plus DIMACS export.
//!
//! A graph is stored in deletion form: the edges removed from Q_n, as
//! endpoint-mask pairs. Extremal graphs delete only 3 * 2^(n-3) of the
//! n * 2^(n-1) edges, so files stay small enough to audit by eye. The
//! writer emits a canonical byte sequence (pairs sorted, two-space
//! indentation, trailing newline) and the reader insists on every
//! invariant, so a parsed document always round-trips byte-identically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercube::{check_dimension, CubeVertex, EdgeIndex};
use crate::solver::DeletionCertificate;
use crate::subgraph::CubeSubgraph;

pub const SCHEMA_VERSION: &str = "1";

/// Metadata key under which a document states its freeness claim.
pub const CLAIMED_FREE_KEY: &str = "claimed_free";
/// Metadata key under which a document states its optimality claim.
pub const CLAIMED_OPTIMAL_KEY: &str = "claimed_optimal";

/// Serialized form of a subgraph: Q_n minus `deleted_edges`. Pairs are
/// [smaller_mask, larger_mask], sorted lexicographically and free of
/// duplicates; every pair differs in exactly one bit. Certificate claims
/// travel in `metadata` under the keys "claimed_free" and
/// "claimed_optimal".
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct SubgraphDocument {
    pub schema_version: String,
    pub n: usize,
    pub deleted_edges: Vec<[u32; 2]>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl SubgraphDocument {
    pub fn from_subgraph(g: &CubeSubgraph) -> Self {
        let mut deleted_edges: Vec<[u32; 2]> = g
            .missing_edges()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                [a.mask(), b.mask()]
            })
            .collect();
        deleted_edges.sort_unstable();
        SubgraphDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            n: g.n(),
            deleted_edges,
            metadata: BTreeMap::new(),
        }
    }

    /// Like `from_subgraph` on the certificate's graph, with the claims
    /// recorded in the metadata.
    pub fn from_certificate(c: &DeletionCertificate) -> Result<Self> {
        let mut doc = SubgraphDocument::from_subgraph(&c.subgraph()?);
        doc.metadata
            .insert(CLAIMED_FREE_KEY.to_owned(), c.claimed_free.to_string());
        doc.metadata.insert(
            CLAIMED_OPTIMAL_KEY.to_owned(),
            c.claimed_optimal.to_string(),
        );
        Ok(doc)
    }

    /// Rebuilds the subgraph. Fails with a field diagnostic on any
    /// invariant violation.
    pub fn to_subgraph(&self) -> Result<CubeSubgraph> {
        self.validate()?;
        let mut g = CubeSubgraph::full(self.n)?;
        for &[a, b] in &self.deleted_edges {
            let e = EdgeIndex::from_endpoints(self.n, CubeVertex(a), CubeVertex(b))
                .expect("validated pairs are edges");
            g.delete_edge(e).expect("validated pairs are distinct");
        }
        Ok(g)
    }

    /// Reads the deletion set and claims back as a certificate. The
    /// deleted edges come out in ascending dense id order; missing claim
    /// keys default to false.
    pub fn to_certificate(&self) -> Result<DeletionCertificate> {
        self.validate()?;
        let mut deleted: Vec<EdgeIndex> = self
            .deleted_edges
            .iter()
            .map(|&[a, b]| {
                EdgeIndex::from_endpoints(self.n, CubeVertex(a), CubeVertex(b))
                    .expect("validated pairs are edges")
            })
            .collect();
        deleted.sort_unstable_by_key(|e| e.dense_id(self.n));
        Ok(DeletionCertificate {
            n: self.n,
            deleted,
            claimed_free: self.claim(CLAIMED_FREE_KEY)?,
            claimed_optimal: self.claim(CLAIMED_OPTIMAL_KEY)?,
        })
    }

    fn claim(&self, key: &str) -> Result<bool> {
        match self.metadata.get(key).map(String::as_str) {
            None => Ok(false),
            Some("true") => Ok(true),
            Some("false") => Ok(false),
            Some(other) => Err(Error::document(
                format!("metadata.{key}"),
                format!("expected \"true\" or \"false\", got \"{other}\""),
            )),
        }
    }

    /// Canonical JSON bytes: pretty-printed with sorted keys and pairs,
    /// newline-terminated. Any two documents with equal content serialize
    /// identically.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serialization is total");
        text.push('\n');
        text
    }

    /// Parses and fully validates a document.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: SubgraphDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::document(
                "schema_version",
                format!(
                    "unsupported version {:?}, expected {:?}",
                    self.schema_version, SCHEMA_VERSION
                ),
            ));
        }
        check_dimension(self.n, 1)
            .map_err(|e| Error::document("n", e.to_string()))?;
        for (i, &[a, b]) in self.deleted_edges.iter().enumerate() {
            let path = format!("deleted_edges[{i}]");
            if a >= b {
                return Err(Error::document(
                    path,
                    format!("endpoints [{a}, {b}] must be in increasing order"),
                ));
            }
            EdgeIndex::from_endpoints(self.n, CubeVertex(a), CubeVertex(b))
                .map_err(|e| Error::document(path.clone(), e.to_string()))?;
            if i > 0 && self.deleted_edges[i - 1] >= [a, b] {
                return Err(Error::document(
                    path,
                    "pairs must be sorted lexicographically without duplicates".to_owned(),
                ));
            }
        }
        Ok(())
    }
}

/// Canonical JSON for a bare subgraph.
pub fn write_subgraph(g: &CubeSubgraph) -> String {
    SubgraphDocument::from_subgraph(g).to_json()
}

/// Parses a document and rebuilds its subgraph in one step.
pub fn read_subgraph(text: &str) -> Result<CubeSubgraph> {
    SubgraphDocument::parse(text)?.to_subgraph()
}

/// DIMACS edge-list text: header "p edge V E", then one "e a b" line per
/// present edge in ascending dense id order, vertices numbered mask + 1.
pub fn export_dimacs(g: &CubeSubgraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.iter_edges() {
        let (a, b) = e.endpoints();
        out.push_str(&format!("e {} {}\n", a.mask() + 1, b.mask() + 1));
    }
    out
}
