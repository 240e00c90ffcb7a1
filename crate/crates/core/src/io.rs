//! Line-oriented text formats.
//!
//! ```text
//! planar <n> <m>
//! V <id> <k> <nb_1> ... <nb_k>     clockwise neighbors, one line per vertex
//! outer <v_1> ... <v_t>            outer face, clockwise
//! A <u> <v>                        arc u -> v, sorted
//! W <u> <v> <p>/<q>                edge weight in lowest terms
//! C <v_1> ... <v_k>                a cycle
//! # ...                            comment
//! ```
//!
//! Several sections may share one stream (a graph followed by its
//! orientation, say), which is how the command-line tools pipe data. Comments
//! are kept verbatim; a few of them carry annotations (`# C v i j k` grid
//! coordinates, `# T level u v w` nested terminals, `# D p/q` thresholds,
//! `# S a,b,...` partition sets).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oriented::{Orientation, WeightMap};
use crate::plane_graph::PlaneGraph;
use crate::scalar::{format_rational, parse_rational, Rational};
use crate::trigrid::GridCoord;

/// Everything one stream can carry.
#[derive(Debug, Clone, Default)]
pub struct Bundle {
    pub graph: Option<PlaneGraph>,
    pub arcs: Vec<(usize, usize)>,
    pub weights: Vec<(usize, usize, Rational)>,
    pub cycle: Option<Vec<usize>>,
    /// Comment lines without the leading `#` and one space.
    pub comments: Vec<String>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_ids(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter()
        .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("bad integer `{t}`"))))
        .collect()
}

impl Bundle {
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = Bundle::default();
        let mut header: Option<(usize, usize, usize)> = None; // n, m, line
        let mut rotations: Vec<Option<Vec<usize>>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let ln = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                b.comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "planar" => {
                    if header.is_some() || b.graph.is_some() {
                        return Err(perr(ln, "second graph in one stream"));
                    }
                    let v = parse_ids(ln, &toks[1..])?;
                    let [n, m] = v[..] else {
                        return Err(perr(ln, "expected `planar <n> <m>`"));
                    };
                    header = Some((n, m, ln));
                    rotations = vec![None; n];
                }
                "V" => {
                    let Some((n, _, _)) = header else {
                        return Err(perr(ln, "V line before `planar` header"));
                    };
                    let v = parse_ids(ln, &toks[1..])?;
                    if v.len() < 2 || v.len() != v[1] + 2 {
                        return Err(perr(ln, "expected `V <id> <k> <nb_1> ... <nb_k>`"));
                    }
                    let id = v[0];
                    if id >= n {
                        return Err(perr(ln, format!("vertex {id} out of range 0..{n}")));
                    }
                    if let Some(&w) = v[2..].iter().find(|&&w| w >= n) {
                        return Err(perr(ln, format!("neighbor {w} out of range 0..{n}")));
                    }
                    if rotations[id].is_some() {
                        return Err(perr(ln, format!("duplicate V line for {id}")));
                    }
                    rotations[id] = Some(v[2..].to_vec());
                }
                "outer" => {
                    let Some((n, m, hl)) = header.take() else {
                        return Err(perr(ln, "outer line before `planar` header"));
                    };
                    let outer = parse_ids(ln, &toks[1..])?;
                    let rot: Vec<Vec<usize>> = rotations
                        .drain(..)
                        .enumerate()
                        .map(|(v, r)| r.ok_or_else(|| perr(ln, format!("missing V line for {v}"))))
                        .collect::<Result<_>>()?;
                    let g = PlaneGraph::from_rotations(rot, outer).map_err(|e| perr(ln, e.to_string()))?;
                    if g.vertex_count() != n || g.edge_count() != m {
                        return Err(perr(
                            hl,
                            format!("header says {n} vertices, {m} edges; found {}, {}", g.vertex_count(), g.edge_count()),
                        ));
                    }
                    b.graph = Some(g);
                }
                "A" => {
                    let v = parse_ids(ln, &toks[1..])?;
                    let [u, w] = v[..] else {
                        return Err(perr(ln, "expected `A <u> <v>`"));
                    };
                    b.arcs.push((u, w));
                }
                "W" => {
                    if toks.len() != 4 {
                        return Err(perr(ln, "expected `W <u> <v> <p>/<q>`"));
                    }
                    let v = parse_ids(ln, &toks[1..3])?;
                    let w = parse_rational(toks[3]).ok_or_else(|| perr(ln, format!("bad weight `{}`", toks[3])))?;
                    b.weights.push((v[0], v[1], w));
                }
                "C" => {
                    if b.cycle.is_some() {
                        return Err(perr(ln, "second C line"));
                    }
                    b.cycle = Some(parse_ids(ln, &toks[1..])?);
                }
                other => return Err(perr(ln, format!("unknown line kind `{other}`"))),
            }
        }
        if let Some((_, _, hl)) = header {
            return Err(perr(hl, "graph has no `outer` line"));
        }
        Ok(b)
    }

    pub fn require_graph(&self) -> Result<&PlaneGraph> {
        self.graph.as_ref().ok_or_else(|| perr(0, "no graph in input"))
    }

    /// The `A` lines as an orientation of `g`.
    pub fn orientation(&self, g: &PlaneGraph) -> Result<Orientation> {
        Orientation::from_arcs(g, &self.arcs)
    }

    /// The `W` lines as weights of `g`.
    pub fn weight_map(&self, g: &PlaneGraph) -> Result<WeightMap<Rational>> {
        WeightMap::from_triples(g, &self.weights)
    }

    /// Comments starting with `tag` followed by a space, with the tag removed.
    pub fn annotations<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.comments.iter().filter_map(move |c| {
            let rest = c.strip_prefix(tag)?;
            rest.strip_prefix(' ')
        })
    }

    /// Grid coordinates from `# C v i j k` lines, if every vertex has one.
    pub fn coordinates(&self, n: usize) -> Result<Option<Vec<GridCoord>>> {
        let mut coords = vec![None; n];
        let mut any = false;
        for a in self.annotations("C") {
            any = true;
            let toks: Vec<&str> = a.split_whitespace().collect();
            let v = parse_ids(0, &toks)?;
            let [id, i, j, k] = v[..] else {
                return Err(perr(0, format!("bad coordinate annotation `{a}`")));
            };
            if id >= n {
                return Err(Error::VertexOutOfRange(id, n));
            }
            coords[id] = Some(GridCoord::new(i, j, k));
        }
        if !any {
            return Ok(None);
        }
        coords
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| perr(0, format!("vertex {v} has no coordinate"))))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// The `# D p/q` threshold, if present.
    pub fn threshold(&self) -> Result<Option<Rational>> {
        self.annotations("D")
            .next()
            .map(|a| parse_rational(a.trim()).ok_or_else(|| perr(0, format!("bad threshold `{a}`"))))
            .transpose()
    }

    /// The `# S a,b,...` multiset, if present.
    pub fn partition_set(&self) -> Result<Option<Vec<u64>>> {
        self.annotations("S")
            .next()
            .map(|a| parse_set(a.trim()))
            .transpose()
    }
}

/// Parses `4,6,2` into values.
pub fn parse_set(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidParameter(format!("bad set element `{t}`")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<PlaneGraph> {
    Bundle::parse(text)?.require_graph().cloned()
}

pub fn write_graph(g: &PlaneGraph) -> String {
    let mut s = format!("planar {} {}\n", g.vertex_count(), g.edge_count());
    for v in 0..g.vertex_count() {
        s.push_str(&format!("V {v} {}", g.degree(v)));
        for w in g.neighbors(v) {
            s.push_str(&format!(" {w}"));
        }
        s.push('\n');
    }
    s.push_str("outer");
    for v in g.outer_face() {
        s.push_str(&format!(" {v}"));
    }
    s.push('\n');
    s
}

pub fn write_orientation(g: &PlaneGraph, o: &Orientation) -> String {
    o.arcs(g).iter().map(|(u, v)| format!("A {u} {v}\n")).collect()
}

pub fn parse_orientation(g: &PlaneGraph, text: &str) -> Result<Orientation> {
    Bundle::parse(text)?.orientation(g)
}

pub fn write_weights(g: &PlaneGraph, w: &WeightMap<Rational>) -> String {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, (u, v))| format!("W {u} {v} {}\n", format_rational(w.get(e))))
        .collect()
}

pub fn parse_weights(g: &PlaneGraph, text: &str) -> Result<WeightMap<Rational>> {
    Bundle::parse(text)?.weight_map(g)
}

pub fn write_cycle(cycle: &[usize]) -> String {
    let mut s = String::from("C");
    for v in cycle {
        s.push_str(&format!(" {v}"));
    }
    s.push('\n');
    s
}

pub fn write_comment(text: &str) -> String {
    format!("# {text}\n")
}

/// JSON mirror of the graph format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub m: usize,
    pub rotations: Vec<Vec<usize>>,
    pub outer: Vec<usize>,
}

impl GraphRecord {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        GraphRecord {
            n: g.vertex_count(),
            m: g.edge_count(),
            rotations: g.rotations().to_vec(),
            outer: g.outer_face().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<PlaneGraph> {
        let g = PlaneGraph::from_rotations(self.rotations.clone(), self.outer.clone())?;
        if g.vertex_count() != self.n || g.edge_count() != self.m {
            return Err(Error::InvalidParameter("vertex or edge count mismatch".into()));
        }
        Ok(g)
    }
}

/// JSON mirror of a whole stream.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arcs: Vec<(usize, usize)>,
    /// `(u, v, "p/q")`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comments: Vec<String>,
}

impl BundleRecord {
    pub fn from_bundle(b: &Bundle) -> Self {
        BundleRecord {
            graph: b.graph.as_ref().map(GraphRecord::from_graph),
            arcs: b.arcs.clone(),
            weights: b.weights.iter().map(|(u, v, w)| (*u, *v, format_rational(w))).collect(),
            cycle: b.cycle.clone(),
            comments: b.comments.clone(),
        }
    }

    pub fn to_bundle(&self) -> Result<Bundle> {
        Ok(Bundle {
            graph: self.graph.as_ref().map(GraphRecord::to_graph).transpose()?,
            arcs: self.arcs.clone(),
            weights: self
                .weights
                .iter()
                .map(|(u, v, w)| {
                    parse_rational(w)
                        .map(|r| (*u, *v, r))
                        .ok_or_else(|| Error::InvalidParameter(format!("bad weight `{w}`")))
                })
                .collect::<Result<_>>()?,
            cycle: self.cycle.clone(),
            comments: self.comments.clone(),
        })
    }
}

impl Bundle {
    /// Text rendering: comments, graph, cycle, arcs, weights.
    pub fn write(&self) -> String {
        let mut s: String = self.comments.iter().map(|c| write_comment(c)).collect();
        if let Some(g) = &self.graph {
            s.push_str(&write_graph(g));
        }
        if let Some(c) = &self.cycle {
            s.push_str(&write_cycle(c));
        }
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        for (u, v) in arcs {
            s.push_str(&format!("A {u} {v}\n"));
        }
        for (u, v, w) in &self.weights {
            s.push_str(&format!("W {u} {v} {}\n", format_rational(w)));
        }
        s
    }
}
