//! Nested triangles: a triangulation family whose oriented diameter is at
//! least `n/3`.
//!
//! Level `i` (1-based, innermost first) is the triangle `(u_i, v_i, w_i)`,
//! listed clockwise. Consecutive levels are joined by `u_i u_{i+1}`,
//! `v_i v_{i+1}`, `w_i w_{i+1}` and triangulated with the diagonals
//! `v_i w_{i+1}`, `v_i u_{i+1}` and `w_i u_{i+1}`. The outer face is level `m`.

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Clone)]
pub struct NestedTriangles {
    m: usize,
    graph: PlaneGraph,
}

/// Terminal names of one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Level {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl NestedTriangles {
    pub fn new(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter("nested triangles need m >= 1".into()));
        }
        let u = |i: usize| 3 * (i - 1);
        let v = |i: usize| 3 * (i - 1) + 1;
        let w = |i: usize| 3 * (i - 1) + 2;
        let mut rotations = vec![Vec::new(); 3 * m];
        for i in 1..=m {
            let inner = i > 1;
            let outer = i < m;
            // u_i, clockwise from the outward spoke
            let r = &mut rotations[u(i)];
            if outer {
                r.push(u(i + 1));
            }
            r.push(v(i));
            if inner {
                r.extend([v(i - 1), u(i - 1), w(i - 1)]);
            }
            r.push(w(i));
            // v_i
            let r = &mut rotations[v(i)];
            if outer {
                r.extend([v(i + 1), w(i + 1)]);
            }
            r.push(w(i));
            if inner {
                r.push(v(i - 1));
            }
            r.push(u(i));
            if outer {
                r.push(u(i + 1));
            }
            // w_i
            let r = &mut rotations[w(i)];
            r.push(u(i));
            if inner {
                r.extend([w(i - 1), v(i - 1)]);
            }
            r.push(v(i));
            if outer {
                r.extend([w(i + 1), u(i + 1)]);
            }
        }
        let graph = PlaneGraph::from_rotations(rotations, vec![u(m), v(m), w(m)])?;
        Ok(NestedTriangles { m, graph })
    }

    pub fn levels(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    /// Terminals of level `i` (1-based).
    pub fn level(&self, i: usize) -> Level {
        assert!((1..=self.m).contains(&i), "level {i} out of 1..={}", self.m);
        Level {
            u: 3 * (i - 1),
            v: 3 * (i - 1) + 1,
            w: 3 * (i - 1) + 2,
        }
    }

    /// The pair whose distance certifies the bound: `w_1` and `v_m`.
    pub fn terminals(&self) -> (usize, usize) {
        (self.level(1).w, self.level(self.m).v)
    }

    /// Undirected distance between the terminals and whether it equals `m`.
    ///
    /// Any strong orientation routes both directions between the terminals
    /// through a closed walk of length at least twice this distance, so one
    /// direction alone needs at least the distance.
    pub fn verify_lower_bound(&self) -> (usize, bool) {
        let (a, b) = self.terminals();
        let d = self.graph.bfs(a)[b];
        (d, d == self.m)
    }
}
