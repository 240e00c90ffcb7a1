//! Separator-based orientation with diameter `n/2 + O(sqrt n)`.
//!
//! The triangulation is cut along a balanced cycle `C`. Each side is closed
//! into a triangulation by an apex placed in the face left by the other
//! side, the apex triangle on the least edge of `C` becomes its outer face,
//! and the side is oriented by [`initial_orient`]. The two orientations are
//! merged over the edge partition, with the edges of `C` directed clockwise.
//!
//! Graphs whose outer face is longer than a triangle (triangular grids, for
//! instance) are first closed by an apex on the outer face. The apex is
//! dropped afterwards and the outer cycle is directed clockwise, which keeps
//! the result strong: any route through the apex or against a redirected
//! outer edge can go around the outer cycle instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oriented::Orientation;
use crate::plane_graph::{PlaneGraph, Side, SubGraph};
use crate::schnyder::initial_orient;
use crate::separator::{cycle_separator, CycleSeparator};

/// Below this many vertices the realizer orientation is used directly.
pub const SPLIT_THRESHOLD: usize = 12;

#[derive(Debug, Clone)]
pub struct SplitPlan {
    pub separator: CycleSeparator,
    pub g_in: SubGraph,
    pub g_out: SubGraph,
    pub g_in_aug: PlaneGraph,
    pub g_out_aug: PlaneGraph,
    /// Apex of `g_in_aug`, standing for the outside.
    pub s_out: usize,
    /// Apex of `g_out_aug`, standing for the inside.
    pub s_in: usize,
    edge_side: Vec<Side>,
}

/// Which construction produced an orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Initial,
    Split,
}

fn least_edge(cycle: &[usize]) -> (usize, usize) {
    let k = cycle.len();
    (0..k)
        .map(|i| (cycle[i], cycle[(i + 1) % k]))
        .min_by_key(|&(a, b)| (a.min(b), a.max(b)))
        .expect("nonempty cycle")
}

fn close_with_apex(g: &PlaneGraph, hole: &[usize]) -> Result<(PlaneGraph, usize)> {
    let (aug, apex) = g.add_apex(hole)?;
    let (x, y) = least_edge(hole);
    let tri = aug
        .apex_triangle(apex, x, y)
        .ok_or_else(|| Error::Internal("apex triangle missing".into()))?;
    Ok((aug.with_outer_face(tri)?, apex))
}

/// Cuts a triangulation along a balanced cycle and closes both sides.
pub fn build_split(g: &PlaneGraph) -> Result<SplitPlan> {
    if !g.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let separator = cycle_separator(g)?;
    let regions = g.cycle_regions(&separator.cycle)?;
    let (g_in, g_out) = g.split_on_cycle(&separator.cycle)?;
    let local = |sub: &SubGraph| -> Vec<usize> {
        separator
            .cycle
            .iter()
            .map(|&v| sub.from_parent(v).expect("cycle vertex kept"))
            .collect()
    };
    let (g_in_aug, s_out) = close_with_apex(&g_in.graph, &local(&g_in))?;
    let (g_out_aug, s_in) = close_with_apex(&g_out.graph, &local(&g_out))?;
    Ok(SplitPlan {
        separator,
        g_in,
        g_out,
        g_in_aug,
        g_out_aug,
        s_out,
        s_in,
        edge_side: regions.edge_side,
    })
}

fn clockwise_tail(cycle: &[usize], u: usize, v: usize) -> usize {
    let k = cycle.len();
    let i = cycle.iter().position(|&x| x == u).expect("on cycle");
    if cycle[(i + 1) % k] == v {
        u
    } else {
        v
    }
}

impl SplitPlan {
    /// Merges the side orientations into an orientation of `g`.
    pub fn orient(&self, g: &PlaneGraph) -> Result<Orientation> {
        let (o_in, o_out) = rayon::join(|| initial_orient(&self.g_in_aug), || initial_orient(&self.g_out_aug));
        let (o_in, o_out) = (o_in?.orientation, o_out?.orientation);
        let cycle = &self.separator.cycle;
        let tail_in = |sub: &SubGraph, aug: &PlaneGraph, o: &Orientation, u: usize, v: usize| -> usize {
            let (lu, lv) = (sub.from_parent(u).expect("kept"), sub.from_parent(v).expect("kept"));
            let e = aug.edge_index(lu, lv).expect("side edge");
            let (t, _) = o.arc(aug, e);
            sub.to_parent[t]
        };
        Ok(Orientation::from_tails(g, |e| {
            let (u, v) = g.edges()[e];
            match self.edge_side[e] {
                Side::OnCycle => clockwise_tail(cycle, u, v),
                Side::Inside => tail_in(&self.g_in, &self.g_in_aug, &o_in, u, v),
                Side::Outside => tail_in(&self.g_out, &self.g_out_aug, &o_out, u, v),
            }
        }))
    }
}

/// The separator-based orientation; also reports which construction ran.
pub fn improved_orient_with_method(g: &PlaneGraph) -> Result<(Orientation, Method)> {
    let outer = g.outer_face().to_vec();
    if outer.len() > 3 {
        let (closed, apex) = g.add_apex(&outer)?;
        let (o, method) = improved_orient_with_method(&closed)?;
        let o = Orientation::from_tails(g, |e| {
            let (u, v) = g.edges()[e];
            if let Some(i) = outer.iter().position(|&x| x == u) {
                let k = outer.len();
                if outer[(i + 1) % k] == v {
                    return u;
                }
                if outer[(i + k - 1) % k] == v {
                    return v;
                }
            }
            debug_assert!(u != apex && v != apex);
            let ce = closed.edge_index(u, v).expect("edge survives");
            o.arc(&closed, ce).0
        });
        return Ok((o, method));
    }
    if g.vertex_count() < SPLIT_THRESHOLD {
        return Ok((initial_orient(g)?.orientation, Method::Initial));
    }
    let plan = build_split(g)?;
    Ok((plan.orient(g)?, Method::Split))
}

pub fn improved_orient(g: &PlaneGraph) -> Result<Orientation> {
    Ok(improved_orient_with_method(g)?.0)
}

/// `ceil(n/2 + c sqrt(n))`.
pub fn improved_bound(n: usize, c: f64) -> usize {
    (n as f64 / 2.0 + c * (n as f64).sqrt()).ceil() as usize
}
