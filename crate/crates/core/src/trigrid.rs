//! Triangular grids `T_r` and their diameter `r + 1` orientation.
//!
//! Vertex `(i, j, k)` with `i + j + k = r` sits on h-level `i`, a-level `j`
//! and o-level `k`. In the standard drawing h-level 0 is the bottom row,
//! `x = j - k` grows to the right and `y = i` grows upwards, so a-lines rise
//! to the right ("/") and o-lines rise to the left ("\").

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oriented::Orientation;
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridCoord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl GridCoord {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        GridCoord { i, j, k }
    }

    fn l1(&self, o: &GridCoord) -> usize {
        self.i.abs_diff(o.i) + self.j.abs_diff(o.j) + self.k.abs_diff(o.k)
    }

    /// Half the L1 distance: the grid distance between two coordinates.
    pub fn grid_distance(&self, o: &GridCoord) -> usize {
        self.l1(o) / 2
    }

    /// The coordinate permutation `(i, j, k) -> (k, i, j)`, a rotation of
    /// the drawing by a third of a turn.
    pub fn rotate(&self) -> Self {
        GridCoord::new(self.k, self.i, self.j)
    }
}

/// The three line families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LineClass {
    Horizontal,
    Acute,
    Obtuse,
}

/// Line family and level of one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeClass {
    pub class: LineClass,
    pub level: usize,
}

#[derive(Debug, Clone)]
pub struct TriGrid {
    r: usize,
    graph: PlaneGraph,
    coords: Vec<GridCoord>,
    edge_class: Vec<EdgeClass>,
}

/// Neighbor offsets in clockwise order starting from "right".
const CLOCKWISE: [(isize, isize, isize); 6] = [
    (0, 1, -1),  // right
    (-1, 1, 0),  // down-right
    (-1, 0, 1),  // down-left
    (0, -1, 1),  // left
    (1, -1, 0),  // up-left
    (1, 0, -1),  // up-right
];

fn shift(c: GridCoord, d: (isize, isize, isize)) -> Option<GridCoord> {
    Some(GridCoord::new(
        c.i.checked_add_signed(d.0)?,
        c.j.checked_add_signed(d.1)?,
        c.k.checked_add_signed(d.2)?,
    ))
}

fn classify(a: GridCoord, b: GridCoord) -> Option<EdgeClass> {
    if a.l1(&b) != 2 {
        return None;
    }
    let (class, level) = if a.i == b.i {
        (LineClass::Horizontal, a.i)
    } else if a.j == b.j {
        (LineClass::Acute, a.j)
    } else {
        (LineClass::Obtuse, a.k)
    };
    Some(EdgeClass { class, level })
}

impl TriGrid {
    /// Generates `T_r`. Vertex ids run row by row from the bottom, and
    /// left to right within a row.
    pub fn generate(r: usize) -> TriGrid {
        let mut coords = Vec::with_capacity((r + 1) * (r + 2) / 2);
        for i in 0..=r {
            for j in 0..=r - i {
                coords.push(GridCoord::new(i, j, r - i - j));
            }
        }
        let id = |c: GridCoord| -> usize {
            // rows below i hold (r+1) + r + ... + (r-i+2) vertices
            let before = c.i * (r + 1) - c.i * c.i.saturating_sub(1) / 2;
            before + c.j
        };
        let rotations: Vec<Vec<usize>> = coords
            .iter()
            .map(|&c| {
                CLOCKWISE
                    .iter()
                    .filter_map(|&d| shift(c, d))
                    .filter(|n| n.i + n.j + n.k == r)
                    .map(id)
                    .collect()
            })
            .collect();
        // Clockwise outer boundary: bottom row right to left, up the left
        // side, down the right side.
        let outer: Vec<usize> = if r == 0 {
            vec![0]
        } else {
            let mut o = Vec::with_capacity(3 * r);
            o.extend((1..=r).rev().map(|j| id(GridCoord::new(0, j, r - j))));
            o.extend((0..r).map(|i| id(GridCoord::new(i, 0, r - i))));
            o.extend((1..=r).rev().map(|i| id(GridCoord::new(i, r - i, 0))));
            o
        };
        let graph = PlaneGraph::from_rotations(rotations, outer).expect("triangular grid embedding");
        Self::assemble(r, graph, coords).expect("triangular grid classification")
    }

    /// Recovers a grid from an arbitrary labelled graph plus coordinates.
    pub fn from_coordinates(graph: PlaneGraph, coords: Vec<GridCoord>) -> Result<TriGrid> {
        if coords.len() != graph.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.vertex_count()
            )));
        }
        let r = coords[0].i + coords[0].j + coords[0].k;
        if let Some(c) = coords.iter().find(|c| c.i + c.j + c.k != r) {
            return Err(Error::InvalidParameter(format!("coordinate {c:?} does not sum to {r}")));
        }
        let expected = (r + 1) * (r + 2) / 2;
        if graph.vertex_count() != expected {
            return Err(Error::InvalidParameter(format!(
                "T_{r} has {expected} vertices, got {}",
                graph.vertex_count()
            )));
        }
        let mut seen = HashMap::new();
        for (v, c) in coords.iter().enumerate() {
            if seen.insert(*c, v).is_some() {
                return Err(Error::InvalidParameter(format!("coordinate {c:?} repeated")));
            }
        }
        if graph.edge_count() != 3 * r * (r + 1) / 2 {
            return Err(Error::InvalidParameter("edge count does not match T_r".into()));
        }
        Self::assemble(r, graph, coords)
    }

    fn assemble(r: usize, graph: PlaneGraph, coords: Vec<GridCoord>) -> Result<TriGrid> {
        let edge_class = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                classify(coords[u], coords[v]).ok_or_else(|| {
                    Error::InvalidParameter(format!("edge {u}-{v} joins non-adjacent coordinates"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TriGrid {
            r,
            graph,
            coords,
            edge_class,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn coord(&self, v: usize) -> GridCoord {
        self.coords[v]
    }

    pub fn coords(&self) -> &[GridCoord] {
        &self.coords
    }

    pub fn edge_class(&self, e: usize) -> EdgeClass {
        self.edge_class[e]
    }

    pub fn vertex_at(&self, c: GridCoord) -> Option<usize> {
        self.coords.iter().position(|&x| x == c)
    }

    /// The level-by-level orientation:
    ///
    /// * h-level 0 right to left, other horizontal lines left to right;
    /// * a-level 0 bottom to top, other acute lines top to bottom;
    /// * o-level 0 top to bottom, other obtuse lines bottom to top.
    pub fn orient(&self) -> Result<Orientation> {
        if self.r < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid orientation needs r >= 2, got {}",
                self.r
            )));
        }
        Ok(Orientation::from_tails(&self.graph, |e| {
            let (u, v) = self.graph.edges()[e];
            let (a, b) = (self.coords[u], self.coords[v]);
            let EdgeClass { class, level } = self.edge_class[e];
            // `a_first` says whether the tail is the endpoint that comes first
            // in the direction the rule prescribes.
            let tail_is_a = match class {
                // right = larger j
                LineClass::Horizontal => (a.j > b.j) == (level == 0),
                // bottom = smaller i
                LineClass::Acute => (a.i < b.i) == (level == 0),
                LineClass::Obtuse => (a.i > b.i) == (level == 0),
            };
            if tail_is_a {
                u
            } else {
                v
            }
        }))
    }

    /// Verifies the lower-bound certificate and returns `r + 1`.
    ///
    /// The endpoints `x = (0, 0, r)` and `y = (0, r, 0)` of h-level 0 are at
    /// distance `r` with a unique shortest path (the bottom row), and the
    /// shortest `x`-`y` path avoiding that row's interior has length
    /// `r + 1`. Every cycle through both therefore has length at least
    /// `2r + 1`, so one direction of any strong orientation needs `r + 1`.
    pub fn od_lower_bound(&self) -> Result<usize> {
        let r = self.r;
        if r < 2 {
            return Err(Error::InvalidParameter(format!("lower bound needs r >= 2, got {r}")));
        }
        let g = &self.graph;
        let x = self.vertex_at(GridCoord::new(0, 0, r)).expect("corner");
        let y = self.vertex_at(GridCoord::new(0, r, 0)).expect("corner");
        if g.degree(x) != 2 || g.degree(y) != 2 {
            return Err(Error::Internal("h-level 0 endpoints must have degree 2".into()));
        }
        let dist = g.bfs(x);
        if dist[y] != r {
            return Err(Error::Internal(format!("corner distance {} != {r}", dist[y])));
        }
        // count shortest paths layer by layer
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| dist[v]);
        let mut count = vec![0u64; n];
        count[x] = 1;
        for &v in &order {
            for &w in g.neighbors(v) {
                if dist[w] == dist[v] + 1 {
                    count[w] = count[w].saturating_add(count[v]);
                }
            }
        }
        if count[y] != 1 {
            return Err(Error::Internal(format!("{} shortest corner paths", count[y])));
        }
        let blocked: Vec<bool> = (0..n)
            .map(|v| self.coords[v].i == 0 && v != x && v != y)
            .collect();
        let mut alt = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([x]);
        alt[x] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if alt[w] == usize::MAX && !blocked[w] && !(u == x && w == y) {
                    alt[w] = alt[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if alt[y] != r + 1 {
            return Err(Error::Internal(format!("detour length {} != {}", alt[y], r + 1)));
        }
        Ok(r + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oriented::{directed_diameter, is_strong};

    #[test]
    fn counts() {
        for (r, n, m) in [(0, 1, 0), (1, 3, 3), (2, 6, 9), (5, 21, 45)] {
            let t = TriGrid::generate(r);
            assert_eq!(t.graph().vertex_count(), n, "r={r}");
            assert_eq!(t.graph().edge_count(), m, "r={r}");
        }
    }

    #[test]
    fn t2_faces() {
        let t = TriGrid::generate(2);
        let faces = t.graph().trace_faces();
        assert_eq!(faces.len(), 5);
        assert_eq!(faces.iter().filter(|f| f.len() == 3).count(), 4);
        // outer face of T_2 is the 6-cycle, inner faces are 4 triangles
        let outer: Vec<_> = faces.iter().filter(|f| f.same_cycle(t.graph().outer_face())).collect();
        assert_eq!(outer.len(), 1);
    }

    #[test]
    fn adjacency_is_l1_two() {
        let t = TriGrid::generate(6);
        let g = t.graph();
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let adj = t.coord(u).l1(&t.coord(v)) == 2;
                assert_eq!(g.has_edge(u, v), adj);
            }
        }
        assert_eq!(g.diameter(), 6);
    }

    #[test]
    fn orient_rejects_small_r() {
        assert!(TriGrid::generate(0).orient().is_err());
        assert!(TriGrid::generate(1).orient().is_err());
    }

    #[test]
    fn small_diameters() {
        for (r, want) in [(2, 3), (3, 4), (5, 6)] {
            let t = TriGrid::generate(r);
            let o = t.orient().unwrap();
            assert!(is_strong(t.graph(), &o).unwrap());
            assert_eq!(directed_diameter(t.graph(), &o).unwrap(), Some(want), "r={r}");
        }
    }

    #[test]
    fn lower_bound_certificate() {
        for r in 2..=8 {
            assert_eq!(TriGrid::generate(r).od_lower_bound().unwrap(), r + 1);
        }
    }

    #[test]
    fn outer_boundary_runs_clockwise() {
        let t = TriGrid::generate(5);
        let o = t.orient().unwrap();
        let outer = t.graph().outer_face();
        for w in 0..outer.len() {
            let (a, b) = (outer[w], outer[(w + 1) % outer.len()]);
            let e = t.graph().edge_index(a, b).unwrap();
            assert_eq!(o.arc(t.graph(), e), (a, b));
        }
    }

    #[test]
    fn interior_vertices_alternate() {
        let t = TriGrid::generate(7);
        let g = t.graph();
        let o = t.orient().unwrap();
        for v in 0..g.vertex_count() {
            let c = t.coord(v);
            if c.i == 0 || c.j == 0 || c.k == 0 {
                continue;
            }
            let outs: Vec<bool> = g
                .neighbors(v)
                .iter()
                .map(|&w| o.arc(g, g.edge_index(v, w).unwrap()).0 == v)
                .collect();
            assert_eq!(outs.len(), 6);
            assert_eq!(outs.iter().filter(|&&b| b).count(), 3);
            for i in 0..6 {
                assert_ne!(outs[i], outs[(i + 1) % 6]);
            }
        }
    }

    #[test]
    fn orientation_has_threefold_symmetry() {
        let t = TriGrid::generate(6);
        let g = t.graph();
        let o = t.orient().unwrap();
        for e in 0..g.edge_count() {
            let (a, b) = o.arc(g, e);
            let ra = t.vertex_at(t.coord(a).rotate()).unwrap();
            let rb = t.vertex_at(t.coord(b).rotate()).unwrap();
            let f = g.edge_index(ra, rb).unwrap();
            assert_eq!(o.arc(g, f), (ra, rb));
        }
    }

    #[test]
    fn from_coordinates_round_trip() {
        let t = TriGrid::generate(4);
        let u = TriGrid::from_coordinates(t.graph().clone(), t.coords().to_vec()).unwrap();
        assert_eq!(u.orient().unwrap(), t.orient().unwrap());
        let mut bad = t.coords().to_vec();
        bad.swap(0, 5);
        assert!(TriGrid::from_coordinates(t.graph().clone(), bad).is_err());
    }
}
