//! Balanced simple cycle separators.
//!
//! Candidates come from breadth-first trees grown from a few roots (vertex
//! 0, a peripheral vertex and a central one):
//!
//! * fundamental cycles of non-tree edges. The dual edges of the non-tree
//!   edges form a spanning tree of the faces; rooting it at the outer face,
//!   the subtree hanging below a non-tree edge is exactly the set of faces
//!   enclosed by its fundamental cycle;
//! * level cycles: boundaries of the regions formed by faces that reach
//!   beyond a BFS level. These catch short cycles such as the triangles of
//!   nested families, where every fundamental cycle is long.
//!
//! A disk whose `F` inner faces are all triangles and whose boundary has
//! `k` edges holds `(F - k + 2) / 2` strictly interior vertices, so every
//! candidate is scored without being materialized. Candidates are then tried
//! shortest first (ties by kind and edge order) and the first one that is a
//! simple balanced cycle wins. For triangulations a balanced fundamental
//! cycle always exists, so the search cannot come up empty.
//!
//! Inputs may have a non-triangular outer face as long as it is a simple
//! cycle and every inner face is a triangle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane_graph::{PlaneGraph, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSeparator {
    /// Inside on the right.
    pub cycle: Vec<usize>,
    pub inside: Vec<usize>,
    pub outside: Vec<usize>,
}

impl CycleSeparator {
    /// Classifies the vertices of `g` against a simple cycle. No balance
    /// requirement.
    pub fn from_cycle(g: &PlaneGraph, cycle: &[usize]) -> Result<Self> {
        let regions = g.cycle_regions(cycle)?;
        let pick = |want: Side| -> Vec<usize> {
            (0..g.vertex_count())
                .filter(|&v| regions.vertex_side[v] == want)
                .collect()
        };
        Ok(CycleSeparator {
            cycle: regions.clockwise.clone(),
            inside: pick(Side::Inside),
            outside: pick(Side::Outside),
        })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn larger_side(&self) -> usize {
        self.inside.len().max(self.outside.len())
    }

    /// `max(|inside|, |outside|) <= floor(2n/3)`.
    pub fn is_balanced(&self) -> bool {
        let n = self.cycle.len() + self.inside.len() + self.outside.len();
        self.larger_side() <= 2 * n / 3
    }

    /// Whether the cycle is longer than `4 sqrt(n)`.
    pub fn exceeds_size_target(&self) -> bool {
        let n = self.cycle.len() + self.inside.len() + self.outside.len();
        (self.cycle.len() as f64) > 4.0 * (n as f64).sqrt()
    }

    /// Checks the cycle, the vertex partition, separation and balance.
    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        let fresh = Self::from_cycle(g, &self.cycle)?;
        if fresh != *self {
            return Err(Error::InvalidCycle("sides or direction disagree with the embedding".into()));
        }
        let mut side = vec![0u8; g.vertex_count()];
        for &v in &self.inside {
            side[v] = 1;
        }
        for &v in &self.outside {
            side[v] = 2;
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] | side[v] == 3) {
            return Err(Error::InvalidCycle(format!("edge {u}-{v} crosses the cycle")));
        }
        if !self.is_balanced() {
            return Err(Error::InvalidCycle(format!(
                "unbalanced: inside {} outside {}",
                self.inside.len(),
                self.outside.len()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Candidate {
    Fundamental { edge: usize },
    Level { level: usize, face: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Scored {
    len: usize,
    root: usize,
    cand: Candidate,
}

struct Tree {
    dist: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
}

fn bfs_tree(g: &PlaneGraph, root: usize) -> Tree {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for (&v, &e) in g.neighbors(u).iter().zip(g.incident_edges(u)) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                parent_edge[v] = e;
                queue.push_back(v);
            }
        }
    }
    Tree {
        dist,
        parent,
        parent_edge,
    }
}

fn farthest(dist: &[usize]) -> usize {
    (0..dist.len()).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).unwrap_or(0)
}

struct Lca {
    up: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl Lca {
    fn new(tree: &Tree, root: usize) -> Self {
        let n = tree.dist.len();
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let base: Vec<usize> = (0..n)
            .map(|v| if v == root { root } else { tree.parent[v] })
            .collect();
        let mut up = vec![base];
        for j in 1..levels {
            let prev = &up[j - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        Lca {
            up,
            depth: tree.dist.clone(),
        }
    }

    fn query(&self, mut a: usize, mut b: usize) -> usize {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a] - self.depth[b];
        let mut j = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[j][a];
            }
            diff >>= 1;
            j += 1;
        }
        if a == b {
            return a;
        }
        for j in (0..self.up.len()).rev() {
            if self.up[j][a] != self.up[j][b] {
                a = self.up[j][a];
                b = self.up[j][b];
            }
        }
        self.up[0][a]
    }
}

struct Dsu {
    parent: Vec<usize>,
    faces: Vec<usize>,
    boundary: Vec<isize>,
    has_outer: Vec<bool>,
}

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop] = keep;
        self.faces[keep] += self.faces[drop];
        self.boundary[keep] += self.boundary[drop];
        self.has_outer[keep] |= self.has_outer[drop];
        keep
    }
}

/// Interior vertex count of a triangulated disk, if the numbers fit one.
fn disk_inside(faces: usize, k: usize) -> Option<usize> {
    let twice = (faces + 2).checked_sub(k)?;
    (twice % 2 == 0).then_some(twice / 2)
}

fn check_input(g: &PlaneGraph) -> Result<()> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "separator needs at least 4 vertices, got {n}"
        )));
    }
    let fm = g.face_map();
    let outer = &fm.faces[fm.outer].boundary;
    let mut seen = outer.clone();
    seen.sort_unstable();
    seen.dedup();
    let simple_outer = seen.len() == outer.len() && outer.len() >= 3;
    let inner_triangles = fm
        .faces
        .iter()
        .enumerate()
        .all(|(i, f)| i == fm.outer || f.len() == 3);
    if !simple_outer || !inner_triangles {
        return Err(Error::NotTriangulation);
    }
    Ok(())
}

/// A simple cycle with at most `floor(2n/3)` vertices on either side,
/// oriented with the inside on the right.
pub fn cycle_separator(g: &PlaneGraph) -> Result<CycleSeparator> {
    check_input(g)?;
    let n = g.vertex_count();
    let limit = 2 * n / 3;
    let fm = g.face_map();
    let nf = fm.faces.len();
    let inner_faces = nf - 1;

    let mut roots = vec![0];
    let t0 = bfs_tree(g, 0);
    let p = farthest(&t0.dist);
    let tp = bfs_tree(g, p);
    let q = farthest(&tp.dist);
    let mut center = q;
    for _ in 0..tp.dist[q] / 2 {
        center = tp.parent[center];
    }
    for r in [p, center] {
        if !roots.contains(&r) {
            roots.push(r);
        }
    }

    let balanced = |inside: usize, k: usize| k <= n && inside + k <= n && inside <= limit && n - k - inside <= limit;

    let mut scored = Vec::new();
    let mut trees = Vec::new();
    for (ri, &root) in roots.iter().enumerate() {
        let tree = bfs_tree(g, root);

        // fundamental cycles
        let mut is_tree_edge = vec![false; g.edge_count()];
        for v in 0..n {
            if v != root {
                is_tree_edge[tree.parent_edge[v]] = true;
            }
        }
        let mut dual_parent_edge = vec![usize::MAX; nf];
        let mut dual_parent = vec![usize::MAX; nf];
        let mut order = Vec::with_capacity(nf);
        let mut seen = vec![false; nf];
        seen[fm.outer] = true;
        let mut queue = VecDeque::from([fm.outer]);
        let mut face_darts: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for (d, &f) in fm.dart_face.iter().enumerate() {
            face_darts[f].push(d);
        }
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &d in &face_darts[f] {
                let e = g.dart_edge(d);
                if is_tree_edge[e] {
                    continue;
                }
                let h = fm.dart_face[g.twin(d)];
                if !seen[h] {
                    seen[h] = true;
                    dual_parent_edge[h] = e;
                    dual_parent[h] = f;
                    queue.push_back(h);
                }
            }
        }
        let mut subtree = vec![0usize; nf];
        for &f in order.iter().rev() {
            if f != fm.outer {
                subtree[f] += 1;
                let pf = dual_parent[f];
                if pf != usize::MAX {
                    subtree[pf] += subtree[f];
                }
            }
        }
        let lca = Lca::new(&tree, root);
        for f in 0..nf {
            let e = dual_parent_edge[f];
            if e == usize::MAX {
                continue;
            }
            let (a, b) = g.edges()[e];
            let c = lca.query(a, b);
            let k = tree.dist[a] + tree.dist[b] - 2 * tree.dist[c] + 1;
            if let Some(inside) = disk_inside(subtree[f], k) {
                if k >= 3 && balanced(inside, k) {
                    scored.push(Scored {
                        len: k,
                        root: ri,
                        cand: Candidate::Fundamental { edge: e },
                    });
                }
            }
        }

        // level cycles
        let face_level: Vec<usize> = fm
            .faces
            .iter()
            .map(|f| f.boundary.iter().map(|&v| tree.dist[v]).max().unwrap_or(0))
            .collect();
        let max_level = face_level.iter().copied().max().unwrap_or(0);
        let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); max_level + 1];
        for (f, &l) in face_level.iter().enumerate() {
            by_level[l].push(f);
        }
        let mut dsu = Dsu {
            parent: (0..nf).collect(),
            faces: (0..nf).map(|f| usize::from(f != fm.outer)).collect(),
            boundary: fm.faces.iter().map(|f| f.len() as isize).collect(),
            has_outer: (0..nf).map(|f| f == fm.outer).collect(),
        };
        let mut in_region = vec![false; nf];
        for l in (0..max_level).rev() {
            // region: faces reaching beyond level l
            for &f in &by_level[l + 1] {
                in_region[f] = true;
                for &d in &face_darts[f] {
                    let h = fm.dart_face[g.twin(d)];
                    if in_region[h] && h != f {
                        let r = dsu.union(f, h);
                        dsu.boundary[r] -= 2;
                    }
                }
            }
            let mut touched: Vec<usize> = by_level[l + 1].iter().map(|&f| dsu.find(f)).collect();
            touched.sort_unstable();
            touched.dedup();
            for r in touched {
                let k = dsu.boundary[r];
                if k < 3 {
                    continue;
                }
                let k = k as usize;
                let enclosed = if dsu.has_outer[r] {
                    inner_faces - (dsu.faces[r])
                } else {
                    dsu.faces[r]
                };
                if let Some(inside) = disk_inside(enclosed, k) {
                    if balanced(inside, k) {
                        scored.push(Scored {
                            len: k,
                            root: ri,
                            cand: Candidate::Level { level: l, face: r },
                        });
                    }
                }
            }
        }
        trees.push(tree);
    }

    scored.sort_unstable();
    for s in &scored {
        let tree = &trees[s.root];
        let cycle = match s.cand {
            Candidate::Fundamental { edge } => fundamental_cycle(g, tree, edge),
            Candidate::Level { level, face } => match level_cycle(g, &fm, tree, level, face) {
                Some(c) => c,
                None => continue,
            },
        };
        if let Ok(sep) = CycleSeparator::from_cycle(g, &cycle) {
            if sep.is_balanced() {
                return Ok(sep);
            }
        }
    }
    Err(Error::Internal("no balanced cycle separator found".into()))
}

fn fundamental_cycle(g: &PlaneGraph, tree: &Tree, e: usize) -> Vec<usize> {
    let (mut a, mut b) = g.edges()[e];
    let mut left = vec![a];
    let mut right = vec![b];
    while tree.dist[a] > tree.dist[b] {
        a = tree.parent[a];
        left.push(a);
    }
    while tree.dist[b] > tree.dist[a] {
        b = tree.parent[b];
        right.push(b);
    }
    while a != b {
        a = tree.parent[a];
        b = tree.parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Boundary of the face region reaching beyond `level` that contains
/// `face`, if it is one simple cycle.
fn level_cycle(
    g: &PlaneGraph,
    fm: &crate::plane_graph::FaceMap,
    tree: &Tree,
    level: usize,
    face: usize,
) -> Option<Vec<usize>> {
    let nf = fm.faces.len();
    let beyond = |f: usize| fm.faces[f].boundary.iter().any(|&v| tree.dist[v] > level);
    let mut face_darts: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (d, &f) in fm.dart_face.iter().enumerate() {
        face_darts[f].push(d);
    }
    let mut member = vec![false; nf];
    member[face] = true;
    let mut stack = vec![face];
    let mut boundary_darts = Vec::new();
    while let Some(f) = stack.pop() {
        for &d in &face_darts[f] {
            let h = fm.dart_face[g.twin(d)];
            if beyond(h) {
                if !member[h] {
                    member[h] = true;
                    stack.push(h);
                }
            } else {
                boundary_darts.push(d);
            }
        }
    }
    // follow boundary darts head to tail
    let n = g.vertex_count();
    let mut succ = vec![usize::MAX; n];
    for &d in &boundary_darts {
        let u = g.dart_tail(d);
        if succ[u] != usize::MAX {
            return None;
        }
        succ[u] = g.dart_head(d);
    }
    let start = g.dart_tail(*boundary_darts.first()?);
    let mut cycle = vec![start];
    let mut x = succ[start];
    while x != start {
        if x == usize::MAX || cycle.len() > boundary_darts.len() {
            return None;
        }
        cycle.push(x);
        x = succ[x];
    }
    (cycle.len() == boundary_darts.len()).then_some(cycle)
}
