//! Kashiwara operators on diagrams and the crystal graph of `B(Lambda_k)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{Rank, WeightVector};
use crate::diagram::{Corner, Diagram, Signature};
use crate::error::{Error, Result};

/// The corner `e~_i` would remove: the surviving 1 that comes last in the
/// signature (smallest diagonal).
pub fn e_tilde_corner(y: &Diagram, i: usize) -> Option<Corner> {
    let sig = y.signature(i);
    let pos = sig.reduced().into_iter().rfind(|&p| sig.word[p] == 1)?;
    Some(sig.corners[pos])
}

/// The corner `f~_i` would fill: the surviving 0 that comes first in the
/// signature (largest diagonal).
pub fn f_tilde_corner(y: &Diagram, i: usize) -> Option<Corner> {
    let sig = y.signature(i);
    let pos = sig.reduced().into_iter().find(|&p| sig.word[p] == 0)?;
    Some(sig.corners[pos])
}

pub fn e_tilde(y: &Diagram, i: usize) -> Option<Diagram> {
    let c = e_tilde_corner(y, i)?;
    Some(y.remove_box(c.column - 1).expect("convex corner marks a removable box"))
}

pub fn f_tilde(y: &Diagram, i: usize) -> Option<Diagram> {
    let c = f_tilde_corner(y, i)?;
    Some(y.add_box(c.column).expect("concave corner marks an addable box"))
}

pub fn epsilon(y: &Diagram, i: usize) -> usize {
    y.signature(i).epsilon()
}

pub fn phi(y: &Diagram, i: usize) -> usize {
    y.signature(i).phi()
}

/// Everything the signature rule says about one colour of one diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureReport {
    pub signature: Signature,
    pub surviving: Vec<usize>,
    pub epsilon: usize,
    pub phi: usize,
    pub e_site: Option<(usize, i64)>,
    pub f_site: Option<(usize, i64)>,
}

pub fn signature_report(y: &Diagram, i: usize) -> Result<SignatureReport> {
    y.rank().check_index(i)?;
    let signature = y.signature(i);
    Ok(SignatureReport {
        surviving: signature.reduced(),
        epsilon: signature.epsilon(),
        phi: signature.phi(),
        e_site: e_tilde_corner(y, i).map(|c| c.site()),
        f_site: f_tilde_corner(y, i).map(|c| c.site()),
        signature,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub i: usize,
    pub dst: usize,
}

/// The `f~`-closure of `phi_k`, truncated by box count.
///
/// Nodes are in canonical order (level, then lexicographically decreasing
/// depths); edges are sorted by `(src, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    rank: Rank,
    charge: usize,
    max_level: usize,
    nodes: Vec<Diagram>,
    edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn charge(&self) -> usize {
        self.charge
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn root(&self) -> &Diagram {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[Diagram] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_level + 1];
        for y in &self.nodes {
            sizes[y.box_count()] += 1;
        }
        sizes
    }

    pub fn index_of(&self, y: &Diagram) -> Option<usize> {
        self.nodes.binary_search(y).ok()
    }

    /// Edges as `(source, label, target)` diagram triples.
    pub fn labelled_edges(&self) -> impl Iterator<Item = (&Diagram, usize, &Diagram)> + '_ {
        self.edges.iter().map(|e| (&self.nodes[e.src], e.i, &self.nodes[e.dst]))
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = GraphJson {
            root: self.root().clone(),
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    /// Reads a graph written by [`CrystalGraph::to_json`], checking that it
    /// is in canonical form.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text)?;
        let Some(first) = doc.nodes.first() else {
            return Err(Error::Parse("graph has no nodes".to_owned()));
        };
        if *first != doc.root || !doc.root.is_empty() {
            return Err(Error::Parse("first node must be the empty root diagram".to_owned()));
        }
        if !doc.nodes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Parse("nodes are not in canonical order".to_owned()));
        }
        if !doc.nodes.iter().all(|y| y.same_space(&doc.root)) {
            return Err(Error::Parse("nodes belong to different spaces".to_owned()));
        }
        let count = doc.nodes.len();
        if doc.edges.iter().any(|e| e.src >= count || e.dst >= count || e.i > doc.root.n()) {
            return Err(Error::Parse("edge refers to a missing node or colour".to_owned()));
        }
        let max_level = doc.nodes.last().map_or(0, Diagram::box_count);
        Ok(CrystalGraph {
            rank: doc.root.rank(),
            charge: doc.root.charge(),
            max_level,
            nodes: doc.nodes,
            edges: doc.edges,
        })
    }

    /// Graphviz rendering; node names are `k;d1,d2,...`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph crystal_n{}_k{} {{", self.rank, self.charge);
        for (idx, y) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{idx} [label=\"{}\"];", y.label());
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, e.i);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    root: Diagram,
    nodes: Vec<Diagram>,
    edges: Vec<Edge>,
}

/// Breadth-first closure of `{phi_k}` under every `f~_i`, up to `max_level`
/// boxes. Each level is expanded in parallel and sorted before the next.
pub fn bfs_component(rank: Rank, charge: usize, max_level: usize) -> Result<CrystalGraph> {
    let root = Diagram::empty(rank, charge)?;
    let mut nodes = vec![root.clone()];
    let mut arrows: Vec<(Diagram, usize, Diagram)> = Vec::new();
    let mut frontier = vec![root];
    for _ in 0..max_level {
        let found: Vec<(Diagram, usize, Diagram)> = frontier
            .par_iter()
            .flat_map_iter(|y| rank.node_set().filter_map(move |i| f_tilde(y, i).map(|z| (y.clone(), i, z))))
            .collect();
        let next: BTreeSet<Diagram> = found.iter().map(|(_, _, z)| z.clone()).collect();
        arrows.extend(found);
        frontier = next.into_iter().collect();
        nodes.extend(frontier.iter().cloned());
    }
    let index: HashMap<&Diagram, usize> = nodes.iter().enumerate().map(|(idx, y)| (y, idx)).collect();
    let mut edges: Vec<Edge> = arrows
        .iter()
        .map(|(y, i, z)| Edge { src: index[y], i: *i, dst: index[z] })
        .collect();
    edges.sort();
    Ok(CrystalGraph { rank, charge, max_level, nodes, edges })
}

/// Number of nodes of each weight.
pub fn multiplicity_table(graph: &CrystalGraph) -> BTreeMap<WeightVector, usize> {
    let mut table = BTreeMap::new();
    for y in graph.nodes() {
        *table.entry(y.weight()).or_insert(0) += 1;
    }
    table
}

/// Nodes killed by every `e~_i`.
pub fn highest_weight_elements(graph: &CrystalGraph) -> Vec<Diagram> {
    graph
        .nodes()
        .iter()
        .filter(|y| graph.rank().node_set().all(|i| epsilon(y, i) == 0))
        .cloned()
        .collect()
}
