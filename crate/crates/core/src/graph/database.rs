use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use super::ids::{EdgeId, Label, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct EdgeRecord {
    pub id: EdgeId,
    pub src: usize,
    pub tgt: usize,
    pub label: usize,
}

/// A finite edge-labeled directed multigraph.
///
/// Vertices, edges and labels are kept sorted by identifier; the index of an
/// element is its rank in that order. Every accessor taking an index expects
/// one obtained from this same database.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Database {
    labels: Vec<Label>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeRecord>,
    out: Vec<Vec<usize>>,
    vertex_index: HashMap<VertexId, usize>,
    edge_index: HashMap<EdgeId, usize>,
    label_index: HashMap<Label, usize>,
    edge_labels: bool,
}

/// Incremental construction of a [`Database`].
#[derive(Debug, Clone, Default)]
pub struct DatabaseBuilder {
    labels: BTreeSet<Label>,
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId, Label)>,
    edge_labels: bool,
}

impl DatabaseBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Allows edge tokens to be used as labels, as characteristic databases do.
    pub fn allow_edge_labels(mut self) -> Self {
        self.edge_labels = true;
        self
    }

    /// Adds a vertex. Adding an existing vertex is a no-op.
    pub fn vertex(mut self, id: VertexId) -> Self {
        self.vertices.insert(id);
        self
    }

    pub fn label(mut self, label: Label) -> Self {
        self.labels.insert(label);
        self
    }

    /// Adds an edge together with its endpoints and label.
    pub fn edge(mut self, id: EdgeId, src: VertexId, tgt: VertexId, label: Label) -> Result<Self> {
        self.add_edge(id, src, tgt, label)?;
        Ok(self)
    }

    pub fn add_vertex(&mut self, id: VertexId) -> bool {
        self.vertices.insert(id)
    }

    pub fn add_edge(&mut self, id: EdgeId, src: VertexId, tgt: VertexId, label: Label) -> Result<()> {
        if let Some(old) = self.edges.get(&id) {
            if old != &(src.clone(), tgt.clone(), label.clone()) {
                return Err(Error::Input(format!("edge {id} declared twice with different incidence")));
            }
            return Ok(());
        }
        self.vertices.insert(src.clone());
        self.vertices.insert(tgt.clone());
        self.labels.insert(label.clone());
        self.edges.insert(id, (src, tgt, label));
        Ok(())
    }

    pub fn build(self) -> Result<Database> {
        let vertices: Vec<VertexId> = self.vertices.into_iter().collect();
        let labels: Vec<Label> = self.labels.into_iter().collect();
        let vertex_index: HashMap<VertexId, usize> =
            vertices.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let label_index: HashMap<Label, usize> = labels.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();

        let vtokens: BTreeSet<&str> = vertices.iter().map(VertexId::as_str).collect();
        let ltokens: BTreeSet<&str> = labels.iter().map(Label::as_str).collect();
        for t in &ltokens {
            if vtokens.contains(t) {
                return Err(Error::Input(format!("token {t} used both as vertex and label")));
            }
        }

        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_index = HashMap::with_capacity(self.edges.len());
        let mut out = vec![Vec::new(); vertices.len()];
        for (i, (id, (src, tgt, label))) in self.edges.into_iter().enumerate() {
            if vtokens.contains(id.as_str()) {
                return Err(Error::Input(format!("token {id} used both as vertex and edge")));
            }
            if !self.edge_labels && ltokens.contains(id.as_str()) {
                return Err(Error::Input(format!("token {id} used both as edge and label")));
            }
            let src = vertex_index[&src];
            let tgt = vertex_index[&tgt];
            out[src].push(i);
            edge_index.insert(id.clone(), i);
            edges.push(EdgeRecord { id, src, tgt, label: label_index[&label] });
        }
        Ok(Database {
            labels,
            vertices,
            edges,
            out,
            vertex_index,
            edge_index,
            label_index,
            edge_labels: self.edge_labels,
        })
    }
}

impl Database {
    pub fn builder() -> DatabaseBuilder {
        DatabaseBuilder::new()
    }

    pub fn empty() -> Self {
        DatabaseBuilder::new().build().expect("empty database")
    }

    /// Convenience constructor from `(edge, src, tgt, label)` tuples.
    pub fn from_edges<'a>(
        isolated: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str, &'a str, &'a str)>,
    ) -> Result<Self> {
        let mut b = DatabaseBuilder::new();
        for x in isolated {
            b.add_vertex(VertexId::new(x)?);
        }
        for (id, s, t, a) in edges {
            b.add_edge(EdgeId::new(id)?, VertexId::new(s)?, VertexId::new(t)?, Label::new(a)?)?;
        }
        b.build()
    }

    /// True if edge tokens are used as labels (characteristic databases).
    pub fn has_edge_labels(&self) -> bool {
        self.edge_labels
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// |V| + |E|.
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        self.edges.iter().map(|r| &r.id)
    }

    pub fn vertex_index(&self, v: &VertexId) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub fn edge_index(&self, e: &EdgeId) -> Option<usize> {
        self.edge_index.get(e).copied()
    }

    pub fn label_index(&self, a: &Label) -> Option<usize> {
        self.label_index.get(a).copied()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertex_index.contains_key(v)
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        self.edge_index.contains_key(e)
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    pub fn edge(&self, i: usize) -> &EdgeId {
        &self.edges[i].id
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn edge_src(&self, i: usize) -> usize {
        self.edges[i].src
    }

    pub fn edge_tgt(&self, i: usize) -> usize {
        self.edges[i].tgt
    }

    pub fn edge_label(&self, i: usize) -> usize {
        self.edges[i].label
    }

    /// Outgoing edge indices of vertex `i`, sorted by edge identifier.
    pub fn out_edges(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn src(&self, e: &EdgeId) -> Option<&VertexId> {
        self.edge_index(e).map(|i| &self.vertices[self.edges[i].src])
    }

    pub fn tgt(&self, e: &EdgeId) -> Option<&VertexId> {
        self.edge_index(e).map(|i| &self.vertices[self.edges[i].tgt])
    }

    pub fn lbl(&self, e: &EdgeId) -> Option<&Label> {
        self.edge_index(e).map(|i| &self.labels[self.edges[i].label])
    }

    /// All edges as `(id, src, tgt, label)`, sorted by edge identifier.
    pub fn edge_tuples(&self) -> impl Iterator<Item = (&EdgeId, &VertexId, &VertexId, &Label)> + '_ {
        self.edges.iter().map(|r| (&r.id, &self.vertices[r.src], &self.vertices[r.tgt], &self.labels[r.label]))
    }

    /// A builder pre-loaded with the contents of this database.
    pub fn to_builder(&self) -> DatabaseBuilder {
        let mut b = DatabaseBuilder { edge_labels: self.edge_labels, ..Default::default() };
        b.labels.extend(self.labels.iter().cloned());
        b.vertices.extend(self.vertices.iter().cloned());
        for (id, s, t, a) in self.edge_tuples() {
            b.edges.insert(id.clone(), (s.clone(), t.clone(), a.clone()));
        }
        b
    }

    /// Structural inclusion: every vertex, edge and label of `self` occurs in
    /// `other` with the same incidence and label.
    pub fn is_subdatabase_of(&self, other: &Database) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(v))
            && self.labels.iter().all(|a| other.label_index(a).is_some())
            && self
                .edge_tuples()
                .all(|(id, s, t, a)| other.src(id) == Some(s) && other.tgt(id) == Some(t) && other.lbl(id) == Some(a))
    }

    /// Parses the line-oriented graph format:
    ///
    /// ```text
    /// # comment
    /// V <vertex>
    /// E <edge> <src> <tgt> <label>
    /// ```
    ///
    /// Lines may come in any order. Edge lines implicitly declare their
    /// endpoints; declaring the same vertex or edge twice is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = DatabaseBuilder::new();
        let mut declared_vertices = BTreeSet::new();
        let mut declared_edges = BTreeSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| Error::GraphFormat { line, message };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let tok = |s: &str| -> Result<()> {
                if super::ids::is_valid_token(s) {
                    Ok(())
                } else {
                    Err(err(format!("invalid token {s:?}")))
                }
            };
            match fields.as_slice() {
                ["V", id] => {
                    tok(id)?;
                    if !declared_vertices.insert(id.to_string()) {
                        return Err(err(format!("duplicate vertex {id}")));
                    }
                    b.add_vertex(VertexId::new(id)?);
                }
                ["E", id, src, tgt, label] => {
                    for t in [id, src, tgt, label] {
                        tok(t)?;
                    }
                    if !declared_edges.insert(id.to_string()) {
                        return Err(err(format!("duplicate edge {id}")));
                    }
                    b.add_edge(EdgeId::new(id)?, VertexId::new(src)?, VertexId::new(tgt)?, Label::new(label)?)?;
                }
                _ => return Err(err(format!("expected `V <id>` or `E <id> <src> <tgt> <label>`, got {content:?}"))),
            }
        }
        b.build().map_err(|e| match e {
            Error::Input(message) => Error::GraphFormat { line: 0, message },
            other => other,
        })
    }

    /// Serializes to the graph format: vertices first, then edges, each in
    /// identifier order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "V {v}");
        }
        for (id, src, tgt, a) in self.edge_tuples() {
            let _ = writeln!(s, "E {id} {src} {tgt} {a}");
        }
        s
    }
}
