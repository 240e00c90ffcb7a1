//! Schnyder realizers of plane triangulations and the orientation built on
//! top of them.
//!
//! Realizers are computed by peeling a canonical ordering from the top
//! vertex `v_m` down to the base edge `v_l v_r`. When a vertex leaves the
//! contour its left contour neighbor becomes its `l`-parent, its right
//! contour neighbor its `r`-parent, and the vertices it uncovers take it as
//! their `m`-parent.
//!
//! Around every inner vertex the clockwise pattern is
//! `out_m, in_l*, out_r, in_m*, out_l, in_r*`: the outgoing edges follow
//! the clockwise order of the roots `v_m, v_r, v_l` on the outer face, and
//! the incoming edges of each color fill the sector opposite its outgoing
//! edge.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oriented::Orientation;
use crate::plane_graph::PlaneGraph;

const NONE: usize = usize::MAX;

/// The three trees, named after their roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    M = 0,
    R = 1,
    L = 2,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::M, Color::R, Color::L];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The next color in clockwise root order (`m -> r -> l -> m`).
    pub fn next(self) -> Color {
        Color::ALL[(self.index() + 1) % 3]
    }

    pub fn prev(self) -> Color {
        Color::ALL[(self.index() + 2) % 3]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderRealizer {
    /// `v_m, v_r, v_l`, clockwise on the outer face.
    roots: [usize; 3],
    parent: [Vec<usize>; 3],
}

/// Leaf statistics of a realizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafReport {
    /// Leaf counts of `T_m`, `T_r`, `T_l`.
    pub leaves: [usize; 3],
    /// Inner faces whose three edges, each directed child to parent, form a
    /// directed triangle.
    pub delta0: usize,
    /// The tree with the most leaves (lowest color on ties).
    pub max_tree: Color,
    /// `ceil((n + 1) / 2)`.
    pub threshold: usize,
    /// Whether `T_m` reaches the threshold.
    pub threshold_met: bool,
    /// Whether the leaf sum equals `2n - 5 - delta0`.
    pub identity_holds: bool,
}

impl LeafReport {
    pub fn leaf_sum(&self) -> usize {
        self.leaves.iter().sum()
    }
}

/// How one edge looks from one endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeRole {
    Out(Color),
    In(Color),
    Outer,
}

impl SchnyderRealizer {
    pub fn roots(&self) -> [usize; 3] {
        self.roots
    }

    pub fn root(&self, c: Color) -> usize {
        self.roots[c.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.parent[0].len()
    }

    pub fn is_inner(&self, v: usize) -> bool {
        !self.roots.contains(&v)
    }

    /// Parent of `v` in tree `c`; `None` for outer vertices.
    pub fn parent(&self, c: Color, v: usize) -> Option<usize> {
        let p = self.parent[c.index()][v];
        (p != NONE).then_some(p)
    }

    /// Color and child endpoint of edge `u`-`v`, `None` for outer edges.
    pub fn edge_color(&self, u: usize, v: usize) -> Option<(Color, usize)> {
        Color::ALL.into_iter().find_map(|c| {
            if self.parent[c.index()][u] == v {
                Some((c, u))
            } else if self.parent[c.index()][v] == u {
                Some((c, v))
            } else {
                None
            }
        })
    }

    /// Renames the trees so that the old tree `shift` becomes `T_m`. The
    /// clockwise order of the roots is preserved.
    pub fn relabel(&self, shift: usize) -> Self {
        let s = shift % 3;
        SchnyderRealizer {
            roots: [self.roots[s], self.roots[(s + 1) % 3], self.roots[(s + 2) % 3]],
            parent: [
                self.parent[s].clone(),
                self.parent[(s + 1) % 3].clone(),
                self.parent[(s + 2) % 3].clone(),
            ],
        }
    }

    fn child_counts(&self) -> [Vec<usize>; 3] {
        let n = self.vertex_count();
        let mut counts = [vec![0; n], vec![0; n], vec![0; n]];
        for (count, parent) in counts.iter_mut().zip(&self.parent) {
            for &p in parent {
                if p != NONE {
                    count[p] += 1;
                }
            }
        }
        counts
    }

    /// Leaves of each tree: inner vertices without children in that tree.
    pub fn leaf_counts(&self) -> [usize; 3] {
        let counts = self.child_counts();
        let n = self.vertex_count();
        let mut leaves = [0; 3];
        for (c, leaf) in leaves.iter_mut().enumerate() {
            *leaf = (0..n)
                .filter(|&v| self.is_inner(v) && counts[c][v] == 0)
                .count();
        }
        leaves
    }

    /// Number of cyclic inner faces.
    pub fn cyclic_faces(&self, g: &PlaneGraph) -> usize {
        let fm = g.face_map();
        fm.faces
            .iter()
            .enumerate()
            .filter(|&(id, f)| id != fm.outer && f.len() == 3)
            .filter(|(_, f)| {
                let b = &f.boundary;
                let mut forward = 0;
                let mut backward = 0;
                for i in 0..3 {
                    let (x, y) = (b[i], b[(i + 1) % 3]);
                    match self.edge_color(x, y) {
                        Some((_, child)) if child == x => forward += 1,
                        Some(_) => backward += 1,
                        None => {}
                    }
                }
                forward == 3 || backward == 3
            })
            .count()
    }

    pub fn leaf_report(&self, g: &PlaneGraph) -> LeafReport {
        let n = g.vertex_count();
        let leaves = self.leaf_counts();
        let delta0 = self.cyclic_faces(g);
        let max_tree = Color::ALL
            .into_iter()
            .max_by_key(|c| (leaves[c.index()], std::cmp::Reverse(c.index())))
            .unwrap_or(Color::M);
        let threshold = (n + 2) / 2;
        let sum: usize = leaves.iter().sum();
        LeafReport {
            leaves,
            delta0,
            max_tree,
            threshold,
            threshold_met: leaves[0] >= threshold,
            identity_holds: n >= 4 && sum + 5 + delta0 == 2 * n,
        }
    }

    fn role(&self, v: usize, w: usize) -> EdgeRole {
        for c in Color::ALL {
            if self.parent[c.index()][v] == w {
                return EdgeRole::Out(c);
            }
            if self.parent[c.index()][w] == v {
                return EdgeRole::In(c);
            }
        }
        EdgeRole::Outer
    }

    /// Checks every realizer property against `g`:
    /// one outgoing edge per color at each inner vertex, each inner edge
    /// colored exactly once, the clockwise sector pattern, incoming-only
    /// edges of the root color at each root, acyclic spanning trees, and
    /// internally disjoint root paths.
    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        let n = g.vertex_count();
        let fail = |msg: String| Err(Error::Internal(format!("realizer: {msg}")));
        if self.vertex_count() != n {
            return fail("vertex count mismatch".into());
        }
        let outer = g.outer_triangle().ok_or(Error::NotTriangulation)?;
        let mut sorted_roots = self.roots;
        sorted_roots.sort_unstable();
        let mut sorted_outer = outer;
        sorted_outer.sort_unstable();
        if sorted_roots != sorted_outer {
            return fail("roots are not the outer vertices".into());
        }
        let pos = |v: usize| outer.iter().position(|&x| x == v).unwrap_or(0);
        if (pos(self.roots[0]) + 1) % 3 != pos(self.roots[1]) {
            return fail("roots are not in clockwise order".into());
        }

        for v in 0..n {
            for c in Color::ALL {
                let p = self.parent[c.index()][v];
                if self.is_inner(v) {
                    if p == NONE {
                        return fail(format!("inner vertex {v} lacks a {c:?}-parent"));
                    }
                    if !g.has_edge(v, p) {
                        return fail(format!("{v} -> {p} is not an edge"));
                    }
                } else if p != NONE {
                    return fail(format!("outer vertex {v} has a parent"));
                }
            }
        }

        for &(a, b) in g.edges() {
            let is_outer_edge = !self.is_inner(a) && !self.is_inner(b);
            let count = Color::ALL
                .into_iter()
                .map(|c| {
                    usize::from(self.parent[c.index()][a] == b) + usize::from(self.parent[c.index()][b] == a)
                })
                .sum::<usize>();
            if is_outer_edge && count != 0 {
                return fail(format!("outer edge {a}-{b} is colored"));
            }
            if !is_outer_edge && count != 1 {
                return fail(format!("inner edge {a}-{b} has {count} colors"));
            }
        }

        for v in 0..n {
            let roles: Vec<EdgeRole> = g.neighbors(v).iter().map(|&w| self.role(v, w)).collect();
            if !self.is_inner(v) {
                let c = Color::ALL[self.roots.iter().position(|&r| r == v).expect("root")];
                for (&w, role) in g.neighbors(v).iter().zip(&roles) {
                    let ok = match role {
                        EdgeRole::Outer => !self.is_inner(w),
                        EdgeRole::In(x) => *x == c,
                        EdgeRole::Out(_) => false,
                    };
                    if !ok {
                        return fail(format!("root {v} has edge to {w} with role {role:?}"));
                    }
                }
                continue;
            }
            let Some(start) = roles.iter().position(|r| *r == EdgeRole::Out(Color::M)) else {
                return fail(format!("{v} has no outgoing m edge"));
            };
            // expected sequence: out_m, in_l*, out_r, in_m*, out_l, in_r*
            let mut stage = 0;
            for t in 1..roles.len() {
                let role = roles[(start + t) % roles.len()];
                let (sector_in, next_out) = match stage {
                    0 => (Color::L, Some(Color::R)),
                    1 => (Color::M, Some(Color::L)),
                    _ => (Color::R, None),
                };
                if role == EdgeRole::In(sector_in) {
                    continue;
                }
                if next_out.is_some_and(|c| role == EdgeRole::Out(c)) {
                    stage += 1;
                    continue;
                }
                return fail(format!("sector pattern broken at {v}: {roles:?}"));
            }
            if stage != 2 {
                return fail(format!("{v} misses outgoing edges: {roles:?}"));
            }
        }

        // acyclic and spanning: every inner vertex reaches its root
        for c in Color::ALL {
            let mut depth = vec![NONE; n];
            for &r in &self.roots {
                depth[r] = 0;
            }
            for v in 0..n {
                let mut path = Vec::new();
                let mut x = v;
                while depth[x] == NONE {
                    path.push(x);
                    if path.len() > n {
                        return fail(format!("{c:?}-tree has a cycle through {v}"));
                    }
                    x = self.parent[c.index()][x];
                }
                if self.is_inner(v) && !path.is_empty() && x != self.root(c) && depth[x] == 0 {
                    return fail(format!("{c:?}-path from {v} ends at the wrong root {x}"));
                }
                let mut d = depth[x];
                for &y in path.iter().rev() {
                    d += 1;
                    depth[y] = d;
                }
            }
        }

        let mut stamp = vec![NONE; n];
        for v in (0..n).filter(|&v| self.is_inner(v)) {
            for c in Color::ALL {
                let mut x = self.parent[c.index()][v];
                loop {
                    if stamp[x] == v {
                        return fail(format!("root paths from {v} meet at {x}"));
                    }
                    stamp[x] = v;
                    if !self.is_inner(x) {
                        break;
                    }
                    x = self.parent[c.index()][x];
                }
            }
        }
        Ok(())
    }

    /// Length of the path from `v` to the root of tree `c`.
    pub fn depth(&self, c: Color, v: usize) -> usize {
        let mut d = 0;
        let mut x = v;
        while self.is_inner(x) {
            x = self.parent[c.index()][x];
            d += 1;
        }
        d
    }
}

fn require_triangulation(g: &PlaneGraph) -> Result<[usize; 3]> {
    let outer = g.outer_triangle().ok_or(Error::NotTriangulation)?;
    if !g.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    Ok(outer)
}

/// Computes a realizer in which `outer[outer_choice]` plays `v_m`.
///
/// A bare triangle yields a realizer with no inner vertices.
pub fn compute_realizer(g: &PlaneGraph, outer_choice: usize) -> Result<SchnyderRealizer> {
    let outer = require_triangulation(g)?;
    let n = g.vertex_count();
    let c = outer_choice % 3;
    let (vm, vr, vl) = (outer[c], outer[(c + 1) % 3], outer[(c + 2) % 3]);
    let mut parent = [vec![NONE; n], vec![NONE; n], vec![NONE; n]];
    let roots = [vm, vr, vl];
    if n == 3 {
        return Ok(SchnyderRealizer { roots, parent });
    }

    // contour is a linked list from vl (left) to vr (right)
    let mut prev = vec![NONE; n];
    let mut next = vec![NONE; n];
    let mut on_contour = vec![false; n];
    let mut removed = vec![false; n];
    let mut chords = vec![0usize; n];
    next[vl] = vm;
    prev[vm] = vl;
    next[vm] = vr;
    prev[vr] = vm;
    for v in [vl, vm, vr] {
        on_contour[v] = true;
    }
    let base = |a: usize, b: usize| (a == vl && b == vr) || (a == vr && b == vl);

    let mut stack = vec![vm];
    let mut peeled = 0;
    while peeled < n - 2 {
        let vk = loop {
            let Some(x) = stack.pop() else {
                return Err(Error::Internal("canonical ordering stalled".into()));
            };
            if on_contour[x] && !removed[x] && x != vl && x != vr && chords[x] == 0 {
                break x;
            }
        };
        let (p, q) = (prev[vk], next[vk]);
        let rot = g.neighbors(vk);
        let deg = rot.len();
        let pi = rot.iter().position(|&x| x == p).expect("contour neighbor");
        let mut uncovered = Vec::new();
        let mut t = (pi + deg - 1) % deg;
        while rot[t] != q {
            uncovered.push(rot[t]);
            t = (t + deg - 1) % deg;
        }

        if vk != vm {
            parent[Color::L.index()][vk] = p;
            parent[Color::R.index()][vk] = q;
        }
        for &u in &uncovered {
            parent[Color::M.index()][u] = vk;
        }

        removed[vk] = true;
        on_contour[vk] = false;
        peeled += 1;

        if uncovered.is_empty() {
            next[p] = q;
            prev[q] = p;
            if !base(p, q) {
                chords[p] -= 1;
                chords[q] -= 1;
            }
            stack.push(p);
            stack.push(q);
            continue;
        }

        let mut left = p;
        for &u in &uncovered {
            next[left] = u;
            prev[u] = left;
            on_contour[u] = true;
            left = u;
        }
        next[left] = q;
        prev[q] = left;
        for &u in &uncovered {
            for &x in g.neighbors(u) {
                if !on_contour[x] || x == prev[u] || x == next[u] || base(u, x) {
                    continue;
                }
                chords[u] += 1;
                if !uncovered.contains(&x) {
                    chords[x] += 1;
                }
            }
        }
        for &u in uncovered.iter().rev() {
            if chords[u] == 0 {
                stack.push(u);
            }
        }
    }
    Ok(SchnyderRealizer { roots, parent })
}

/// Tries every outer vertex as `v_m` and every cyclic relabeling, and keeps
/// the realizer whose `T_m` has the most leaves (ties: lowest outer choice,
/// then lowest relabeling).
pub fn best_realizer(g: &PlaneGraph) -> Result<(SchnyderRealizer, LeafReport)> {
    require_triangulation(g)?;
    if g.vertex_count() < 4 {
        return Err(Error::InvalidParameter("a realizer needs an inner vertex (n >= 4)".into()));
    }
    let mut best: Option<(usize, SchnyderRealizer)> = None;
    for choice in 0..3 {
        let rz = compute_realizer(g, choice)?;
        let leaves = rz.leaf_counts();
        for (shift, &leaf) in leaves.iter().enumerate() {
            if best.as_ref().is_none_or(|(b, _)| leaf > *b) {
                best = Some((leaf, rz.relabel(shift)));
            }
        }
    }
    let (_, rz) = best.expect("three candidates");
    let report = rz.leaf_report(g);
    Ok((rz, report))
}

/// The realizer-based orientation together with its per-instance bound.
#[derive(Debug, Clone)]
pub struct InitialOrientation {
    pub orientation: Orientation,
    /// `beta + ceil((n - beta - 1) / 2) + 2` with `beta = n - leaf(T_m)`.
    pub bound: usize,
    pub report: LeafReport,
    pub realizer: SchnyderRealizer,
}

/// `ceil(3(n - 1) / 4) + 2`.
pub fn three_quarter_bound(n: usize) -> usize {
    (3 * (n - 1)).div_ceil(4) + 2
}

/// Orients a triangulation from its best realizer: the outer triangle
/// clockwise, `m`-edges towards the parent, `r`- and `l`-edges towards the
/// child.
pub fn initial_orient(g: &PlaneGraph) -> Result<InitialOrientation> {
    let outer = require_triangulation(g)?;
    let n = g.vertex_count();
    if n == 3 {
        let realizer = compute_realizer(g, 0)?;
        let orientation = Orientation::from_tails(g, |e| {
            let (u, v) = g.edges()[e];
            let i = outer.iter().position(|&x| x == u).expect("outer");
            if outer[(i + 1) % 3] == v {
                u
            } else {
                v
            }
        });
        let report = LeafReport {
            leaves: [0; 3],
            delta0: 0,
            max_tree: Color::M,
            threshold: 2,
            threshold_met: false,
            identity_holds: false,
        };
        return Ok(InitialOrientation {
            orientation,
            bound: 2,
            report,
            realizer,
        });
    }
    let (realizer, report) = best_realizer(g)?;
    let orientation = orient_with(g, &realizer);
    let beta = n - report.leaves[0];
    let bound = beta + (n - beta - 1).div_ceil(2) + 2;
    Ok(InitialOrientation {
        orientation,
        bound,
        report,
        realizer,
    })
}

/// The orientation rule applied to a given realizer.
pub fn orient_with(g: &PlaneGraph, rz: &SchnyderRealizer) -> Orientation {
    let [vm, vr, vl] = rz.roots();
    Orientation::from_tails(g, |e| {
        let (u, v) = g.edges()[e];
        match rz.edge_color(u, v) {
            Some((Color::M, child)) => child,
            Some((_, child)) => {
                if child == u {
                    v
                } else {
                    u
                }
            }
            None => {
                // outer edge: vm -> vr -> vl -> vm
                let succ = |x: usize| {
                    if x == vm {
                        vr
                    } else if x == vr {
                        vl
                    } else {
                        vm
                    }
                };
                if succ(u) == v {
                    u
                } else {
                    v
                }
            }
        }
    })
}
