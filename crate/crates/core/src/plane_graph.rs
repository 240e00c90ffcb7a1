//! Plane graphs stored as rotation systems.
//!
//! Every vertex carries its neighbors in clockwise order. Faces are traced
//! with the rule "arrive at `v` from `u`, leave towards the clockwise
//! successor of `u` around `v`". Under that rule bounded faces come out
//! counterclockwise (the face lies to the left of each dart) and the outer
//! face comes out clockwise, which is the order the text format uses for the
//! `outer` line.

use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face boundary, as traced by the face walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// True if `other` is the same closed walk up to a cyclic shift.
    pub fn same_cycle(&self, other: &[usize]) -> bool {
        cyclic_eq(&self.boundary, other)
    }
}

pub(crate) fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

/// Which side of a cycle an element lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    OnCycle,
    Outside,
}

/// Faces together with the dart-to-face map that produced them.
#[derive(Debug, Clone)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    /// Face id of every dart, indexed like [`PlaneGraph::dart`].
    pub dart_face: Vec<usize>,
    /// Id of the outer face.
    pub outer: usize,
}

/// A subgraph carved out of a parent graph, with the vertex renaming.
#[derive(Debug, Clone)]
pub struct SubGraph {
    pub graph: PlaneGraph,
    /// `to_parent[v]` is the parent id of local vertex `v`.
    pub to_parent: Vec<usize>,
}

impl SubGraph {
    pub fn from_parent(&self, parent_vertex: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent_vertex).ok()
    }
}

/// Result of classifying a plane graph against a simple cycle.
#[derive(Debug, Clone)]
pub struct CycleRegions {
    /// The cycle, ordered so that the inside lies to the right.
    pub clockwise: Vec<usize>,
    pub vertex_side: Vec<Side>,
    pub edge_side: Vec<Side>,
}

/// A connected simple plane graph with a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    outer: Vec<usize>,
    edges: Vec<(usize, usize)>,
    edge_ids: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    // back[d] for dart u -> rotations[u][i] is the position of u in the
    // target's rotation.
    back: Vec<usize>,
}

impl PlaneGraph {
    /// Builds and validates a plane graph from clockwise rotations.
    pub fn from_rotations(rotations: Vec<Vec<usize>>, outer_face: Vec<usize>) -> Result<Self> {
        let n = rotations.len();
        if n == 0 {
            return Err(Error::InvalidParameter("graph has no vertices".into()));
        }
        for (u, rot) in rotations.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if rot[..i].contains(&v) {
                    return Err(Error::ParallelEdge(u, v));
                }
            }
        }
        for (u, rot) in rotations.iter().enumerate() {
            for &v in rot {
                if !rotations[v].contains(&u) {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        for &v in &outer_face {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
        }
        let g = Self::assemble(rotations, outer_face);
        if g.bfs(0).contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
        let fm = g.trace();
        let (n, m, f) = (g.vertex_count(), g.edge_count(), fm.len());
        if n + f != m + 2 {
            return Err(Error::NotPlanar { n, m, f });
        }
        if !fm.iter().any(|face| cyclic_eq(face, &g.outer)) {
            return Err(Error::OuterNotAFace(g.outer.clone()));
        }
        Ok(g)
    }

    fn assemble(rotations: Vec<Vec<usize>>, outer: Vec<usize>) -> Self {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);

        let mut edges = Vec::with_capacity(total / 2);
        for (u, rot) in rotations.iter().enumerate() {
            for &v in rot {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();

        let mut edge_ids: Vec<Vec<usize>> = rotations.iter().map(|r| vec![0; r.len()]).collect();
        let mut back = vec![0; total];
        for (u, rot) in rotations.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                let key = (u.min(v), u.max(v));
                edge_ids[u][i] = edges.binary_search(&key).expect("edge listed");
                back[offsets[u] + i] = rotations[v].iter().position(|&x| x == u).unwrap_or(0);
            }
        }
        PlaneGraph {
            rotations,
            outer,
            edges,
            edge_ids,
            offsets,
            back,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.outer
    }

    /// Edges as `(u, v)` with `u < v`, sorted; the position is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count() {
            return None;
        }
        let i = self.rotations[u].iter().position(|&x| x == v)?;
        Some(self.edge_ids[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Edge ids incident to `v`, aligned with [`neighbors`](Self::neighbors).
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.edge_ids[v]
    }

    /// Number of darts (twice the edge count).
    pub fn dart_count(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Dart id of `u -> rotations[u][i]`.
    pub fn dart(&self, u: usize, i: usize) -> usize {
        self.offsets[u] + i
    }

    /// Dart id of `u -> v`, if the edge exists.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.rotations[u].iter().position(|&x| x == v)?;
        Some(self.dart(u, i))
    }

    /// Tail vertex of dart `d`.
    pub fn dart_tail(&self, d: usize) -> usize {
        // offsets is sorted; the tail is the last vertex whose offset <= d.
        self.offsets.partition_point(|&o| o <= d) - 1
    }

    pub fn dart_head(&self, d: usize) -> usize {
        let u = self.dart_tail(d);
        self.rotations[u][d - self.offsets[u]]
    }

    /// The opposite dart of the same edge.
    pub fn twin(&self, d: usize) -> usize {
        let v = self.dart_head(d);
        self.offsets[v] + self.back[d]
    }

    /// Edge id of dart `d`.
    pub fn dart_edge(&self, d: usize) -> usize {
        let u = self.dart_tail(d);
        self.edge_ids[u][d - self.offsets[u]]
    }

    /// The dart following `d` along its face.
    pub fn next_in_face(&self, d: usize) -> usize {
        let u = self.dart_tail(d);
        let v = self.rotations[u][d - self.offsets[u]];
        let p = self.back[d];
        self.offsets[v] + (p + 1) % self.rotations[v].len()
    }

    fn trace(&self) -> Vec<Vec<usize>> {
        self.trace_with_darts().0
    }

    fn trace_with_darts(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let total = self.dart_count();
        if total == 0 {
            return (vec![vec![0]], Vec::new());
        }
        let mut dart_face = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for u in 0..self.vertex_count() {
            for i in 0..self.rotations[u].len() {
                let start = self.dart(u, i);
                if dart_face[start] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut boundary = Vec::new();
                let (mut x, mut d) = (u, start);
                loop {
                    dart_face[d] = id;
                    boundary.push(x);
                    let j = d - self.offsets[x];
                    let y = self.rotations[x][j];
                    let p = self.back[d];
                    let nj = (p + 1) % self.rotations[y].len();
                    x = y;
                    d = self.offsets[y] + nj;
                    if d == start {
                        break;
                    }
                }
                faces.push(boundary);
            }
        }
        (faces, dart_face)
    }

    /// All faces of the embedding, outer face included.
    pub fn trace_faces(&self) -> Vec<Face> {
        self.trace()
            .into_iter()
            .map(|boundary| Face { boundary })
            .collect()
    }

    /// Faces plus the dart-to-face map and the outer face id.
    pub fn face_map(&self) -> FaceMap {
        let (faces, dart_face) = self.trace_with_darts();
        let outer = if self.outer.len() >= 2 {
            let d = self
                .dart_between(self.outer[0], self.outer[1])
                .expect("outer face is a traced face");
            dart_face[d]
        } else {
            0
        };
        FaceMap {
            faces: faces.into_iter().map(|boundary| Face { boundary }).collect(),
            dart_face,
            outer,
        }
    }

    pub fn face_count(&self) -> usize {
        self.trace().len()
    }

    /// True iff every face, the outer one included, is a triangle.
    pub fn is_triangulation(&self) -> bool {
        self.vertex_count() >= 3 && self.trace().iter().all(|f| f.len() == 3)
    }

    /// Outer vertices, for a graph whose outer face is a triangle.
    pub fn outer_triangle(&self) -> Option<[usize; 3]> {
        match self.outer.as_slice() {
            &[a, b, c] => Some([a, b, c]),
            _ => None,
        }
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.rotations[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Undirected diameter (all-sources BFS).
    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .map(|s| self.bfs(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Returns some bridge, if one exists.
    pub fn find_bridge(&self) -> Option<(usize, usize)> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, edge id used to enter, next rotation index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, via, ref mut next)) = stack.last_mut() {
                if *next < self.rotations[u].len() {
                    let i = *next;
                    *next += 1;
                    let v = self.rotations[u][i];
                    let e = self.edge_ids[u][i];
                    if e == via {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, e, 0));
                    } else {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            return Some((p.min(u), p.max(u)));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_bridgeless(&self) -> bool {
        self.find_bridge().is_none()
    }

    /// The same embedding with a different outer face.
    pub fn with_outer_face(&self, outer: Vec<usize>) -> Result<Self> {
        if !self.trace().iter().any(|f| cyclic_eq(f, &outer)) {
            return Err(Error::OuterNotAFace(outer));
        }
        let mut g = self.clone();
        g.outer = outer;
        Ok(g)
    }

    /// The traced face through the dart `u -> v`.
    pub fn face_left_of(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let start = self.dart_between(u, v)?;
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            boundary.push(self.dart_tail(d));
            d = self.next_in_face(d);
            if d == start {
                break;
            }
        }
        Some(boundary)
    }

    fn find_face(&self, cycle: &[usize]) -> Option<Vec<usize>> {
        if cycle.len() < 3 {
            return None;
        }
        let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
        let faces = self.trace();
        faces
            .iter()
            .find(|f| cyclic_eq(f, cycle))
            .or_else(|| faces.iter().find(|f| cyclic_eq(f, &reversed)))
            .cloned()
    }

    /// Inserts a new vertex inside the face bounded by `cycle`, adjacent to
    /// every vertex of the cycle. The new vertex gets id `n`.
    ///
    /// `cycle` is matched against the traced faces in the given direction
    /// first, then reversed. When the consumed face is the outer face, the
    /// new outer face is the triangle on the lexicographically least cycle
    /// edge.
    pub fn add_apex(&self, cycle: &[usize]) -> Result<(Self, usize)> {
        let face = self
            .find_face(cycle)
            .ok_or_else(|| Error::NotAFace(cycle.to_vec()))?;
        let k = face.len();
        let mut sorted = face.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Err(Error::NotAFace(cycle.to_vec()));
        }
        let apex = self.vertex_count();
        let mut rotations = self.rotations.clone();
        for i in 0..k {
            let prev = face[(i + k - 1) % k];
            let here = face[i];
            let rot = &mut rotations[here];
            let p = rot.iter().position(|&x| x == prev).expect("face edge");
            rot.insert(p + 1, apex);
        }
        rotations.push(face.iter().rev().copied().collect());

        let consumed_outer = cyclic_eq(&face, &self.outer);
        let outer = if consumed_outer {
            let i = (0..k)
                .min_by_key(|&i| {
                    let (a, b) = (face[i], face[(i + 1) % k]);
                    (a.min(b), a.max(b))
                })
                .expect("nonempty face");
            vec![face[i], face[(i + 1) % k], apex]
        } else {
            self.outer.clone()
        };
        let g = PlaneGraph::from_rotations(rotations, outer)?;
        Ok((g, apex))
    }

    /// The traced triangle containing the apex and the edge `x`-`y`.
    pub fn apex_triangle(&self, apex: usize, x: usize, y: usize) -> Option<Vec<usize>> {
        [(x, y), (y, x)].into_iter().find_map(|(a, b)| {
            let f = self.face_left_of(a, b)?;
            (f.len() == 3 && f.contains(&apex)).then_some(f)
        })
    }

    /// Keeps the listed vertices and edges (edge ids of `self`); rotations
    /// are filtered in place so the embedding is inherited. `outer` is given
    /// in parent ids.
    pub fn subgraph(&self, keep_vertex: &[bool], keep_edge: &[bool], outer: &[usize]) -> Result<SubGraph> {
        let to_parent: Vec<usize> = (0..self.vertex_count()).filter(|&v| keep_vertex[v]).collect();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let rotations: Vec<Vec<usize>> = to_parent
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .zip(&self.edge_ids[v])
                    .filter(|&(&w, &e)| keep_edge[e] && keep_vertex[w])
                    .map(|(&w, _)| local[w])
                    .collect()
            })
            .collect();
        let outer_local = outer
            .iter()
            .map(|&v| {
                if keep_vertex[v] {
                    Ok(local[v])
                } else {
                    Err(Error::InvalidParameter(format!("outer vertex {v} removed")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let graph = PlaneGraph::from_rotations(rotations, outer_local)?;
        Ok(SubGraph { graph, to_parent })
    }

    /// Classifies vertices, edges and the cycle direction against a simple
    /// cycle. Inside is the side not containing the outer face.
    pub fn cycle_regions(&self, cycle: &[usize]) -> Result<CycleRegions> {
        let n = self.vertex_count();
        let k = cycle.len();
        if k < 3 {
            return Err(Error::InvalidCycle(format!("length {k} < 3")));
        }
        let mut on_cycle = vec![false; n];
        for &v in cycle {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if on_cycle[v] {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
            on_cycle[v] = true;
        }
        let mut cycle_edge = vec![false; self.edge_count()];
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            let e = self
                .edge_index(a, b)
                .ok_or_else(|| Error::InvalidCycle(format!("{a}-{b} is not an edge")))?;
            cycle_edge[e] = true;
        }

        let fm = self.face_map();
        let nf = fm.faces.len();
        let mut outside_face = vec![false; nf];
        outside_face[fm.outer] = true;
        let mut stack = vec![fm.outer];
        // Walk the dual across non-cycle edges.
        let mut face_darts: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for (d, &f) in fm.dart_face.iter().enumerate() {
            face_darts[f].push(d);
        }
        let twin = |d: usize| -> usize {
            let u = self.dart_tail(d);
            let v = self.rotations[u][d - self.offsets[u]];
            self.offsets[v] + self.back[d]
        };
        let dart_edge = |d: usize| -> usize {
            let u = self.dart_tail(d);
            self.edge_ids[u][d - self.offsets[u]]
        };
        while let Some(f) = stack.pop() {
            for &d in &face_darts[f] {
                if cycle_edge[dart_edge(d)] {
                    continue;
                }
                let g = fm.dart_face[twin(d)];
                if !outside_face[g] {
                    outside_face[g] = true;
                    stack.push(g);
                }
            }
        }
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            let d = self.dart_between(a, b).expect("cycle edge");
            if outside_face[fm.dart_face[d]] == outside_face[fm.dart_face[twin(d)]] {
                return Err(Error::InvalidCycle(format!("edge {a}-{b} does not separate")));
            }
        }

        let d0 = self.dart_between(cycle[0], cycle[1]).expect("cycle edge");
        let clockwise = if outside_face[fm.dart_face[d0]] {
            cycle.to_vec()
        } else {
            let mut c: Vec<usize> = cycle.iter().rev().copied().collect();
            c.rotate_right(1);
            c
        };

        let side_of_face = |f: usize| if outside_face[f] { Side::Outside } else { Side::Inside };
        let mut vertex_side = vec![Side::OnCycle; n];
        for v in 0..n {
            if !on_cycle[v] && !self.rotations[v].is_empty() {
                vertex_side[v] = side_of_face(fm.dart_face[self.dart(v, 0)]);
            }
        }
        let mut edge_side = vec![Side::OnCycle; self.edge_count()];
        for u in 0..n {
            for i in 0..self.rotations[u].len() {
                let e = self.edge_ids[u][i];
                if !cycle_edge[e] {
                    edge_side[e] = side_of_face(fm.dart_face[self.dart(u, i)]);
                }
            }
        }
        Ok(CycleRegions {
            clockwise,
            vertex_side,
            edge_side,
        })
    }

    /// Splits along a simple cycle into the inside part (cycle plus interior)
    /// and the outside part (cycle plus exterior). Both keep every cycle
    /// edge; every other edge goes to exactly one side.
    ///
    /// The inside part's outer face is the cycle (clockwise); the outside
    /// part keeps the original outer face.
    pub fn split_on_cycle(&self, cycle: &[usize]) -> Result<(SubGraph, SubGraph)> {
        let regions = self.cycle_regions(cycle)?;
        let pick = |want: Side| -> (Vec<bool>, Vec<bool>) {
            let kv = regions
                .vertex_side
                .iter()
                .map(|&s| s == want || s == Side::OnCycle)
                .collect();
            let ke = regions
                .edge_side
                .iter()
                .map(|&s| s == want || s == Side::OnCycle)
                .collect();
            (kv, ke)
        };
        let (kv, ke) = pick(Side::Inside);
        let inside = self.subgraph(&kv, &ke, &regions.clockwise)?;
        let (kv, ke) = pick(Side::Outside);
        let outside = self.subgraph(&kv, &ke, &self.outer)?;
        Ok((inside, outside))
    }

    /// Random plane triangulation on `n` vertices: stacked insertion into
    /// uniformly chosen inner faces followed by `2n` random flip attempts.
    pub fn random_triangulation(n: usize, seed: u64) -> Result<Self> {
        Self::random_triangulation_with_flips(n, seed, 2 * n)
    }

    /// As [`random_triangulation`](Self::random_triangulation) with an
    /// explicit number of flip attempts (0 gives a stacked triangulation).
    pub fn random_triangulation_with_flips(n: usize, seed: u64, flips: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("triangulation needs n >= 3, got {n}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        // Inner faces as traced triples; (0, 1, 2) is the outer face.
        let mut faces: Vec<[usize; 3]> = vec![[0, 2, 1]];
        for x in 3..n {
            let fi = rng.gen_range(0..faces.len());
            let [a, b, c] = faces[fi];
            for (prev, here) in [(c, a), (a, b), (b, c)] {
                let p = rot[here].iter().position(|&y| y == prev).expect("face edge");
                rot[here].insert(p + 1, x);
            }
            rot.push(vec![c, b, a]);
            faces[fi] = [a, b, x];
            faces.push([b, c, x]);
            faces.push([c, a, x]);
        }
        let is_outer = |u: usize, v: usize| u < 3 && v < 3;
        for _ in 0..flips {
            let a = rng.gen_range(0..n);
            let i = rng.gen_range(0..rot[a].len());
            let b = rot[a][i];
            if is_outer(a, b) || rot[a].len() <= 3 || rot[b].len() <= 3 {
                continue;
            }
            let succ = |r: &Vec<Vec<usize>>, v: usize, u: usize| {
                let p = r[v].iter().position(|&y| y == u).expect("adjacent");
                r[v][(p + 1) % r[v].len()]
            };
            let x = succ(&rot, b, a);
            let y = succ(&rot, a, b);
            if x == y || rot[x].contains(&y) {
                continue;
            }
            rot[a].retain(|&v| v != b);
            rot[b].retain(|&v| v != a);
            let p = rot[x].iter().position(|&v| v == b).expect("adjacent");
            rot[x].insert(p + 1, y);
            let p = rot[y].iter().position(|&v| v == a).expect("adjacent");
            rot[y].insert(p + 1, x);
        }
        PlaneGraph::from_rotations(rot, vec![0, 1, 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 1, 2]).unwrap()
    }

    pub(crate) fn k4() -> PlaneGraph {
        // Outer triangle 0,1,2 clockwise, vertex 3 in the middle.
        PlaneGraph::from_rotations(
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            vec![0, 1, 2],
        )
        .unwrap()
    }

    fn four_cycle() -> PlaneGraph {
        PlaneGraph::from_rotations(
            vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            vec![0, 1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn triangle_counts() {
        let g = triangle();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert!(g.trace_faces().iter().all(|f| f.len() == 3));
        assert!(g.is_triangulation());
        assert!(g.is_bridgeless());
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        let faces = g.trace_faces();
        assert_eq!((g.vertex_count(), g.edge_count(), faces.len()), (4, 6, 4));
        assert_eq!(4 + 4 - 6, 2);
        assert!(g.is_triangulation());
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlaneGraph::from_rotations(vec![vec![1, 2], vec![2], vec![0, 1]], vec![0, 1, 2]);
        assert_eq!(err, Err(Error::Asymmetric(0, 1)));
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![0]], vec![0]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![1, 1], vec![0]], vec![0, 1]),
            Err(Error::ParallelEdge(0, 1))
        ));
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![1], vec![0], vec![]], vec![0, 1]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 2, 1, 0]),
            Err(Error::OuterNotAFace(_))
        ));
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![5]], vec![0]),
            Err(Error::VertexOutOfRange(5, 1))
        ));
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // K4 with one rotation flipped is a torus embedding.
        let r = PlaneGraph::from_rotations(
            vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            vec![0, 1, 2],
        );
        assert!(matches!(r, Err(Error::NotPlanar { .. }) | Err(Error::OuterNotAFace(_))));
    }

    #[test]
    fn four_cycle_is_not_triangulation() {
        let g = four_cycle();
        assert!(!g.is_triangulation());
        assert!(g.is_bridgeless());
    }

    #[test]
    fn path_has_bridge() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]], vec![0, 1, 2, 1]).unwrap();
        assert!(!g.is_bridgeless());
        assert!(g.find_bridge().is_some());
    }

    #[test]
    fn single_vertex() {
        let g = PlaneGraph::from_rotations(vec![vec![]], vec![0]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert!(g.is_bridgeless());
    }

    #[test]
    fn apex_on_triangle_gives_k4() {
        let g = triangle();
        let (h, apex) = g.add_apex(&[0, 2, 1]).unwrap();
        assert_eq!(apex, 3);
        assert_eq!((h.vertex_count(), h.edge_count()), (4, 6));
        assert!(h.is_triangulation());
        // inner face consumed; outer face unchanged
        assert_eq!(h.outer_face(), &[0, 1, 2]);
    }

    #[test]
    fn apex_into_outer_face_moves_outer() {
        let g = k4();
        let (h, apex) = g.add_apex(&[0, 1, 2]).unwrap();
        assert!(h.is_triangulation());
        assert!(h.outer_face().contains(&apex));
        assert!(h.outer_face().contains(&0) && h.outer_face().contains(&1));
    }

    #[test]
    fn apex_on_non_face_rejected() {
        let g = PlaneGraph::random_triangulation(8, 3).unwrap();
        // A 3-cycle through the outer vertices plus an inner vertex is not a face
        // unless the triangulation happens to have it; pick a non-cycle list.
        assert!(matches!(g.add_apex(&[0, 1]), Err(Error::NotAFace(_))));
        let fake: Vec<usize> = vec![0, 1, 2, 3];
        assert!(g.add_apex(&fake).is_err());
    }

    #[test]
    fn apex_then_remove_restores_rotations() {
        let g = PlaneGraph::random_triangulation(12, 7).unwrap();
        let face = g.trace_faces()[3].boundary.clone();
        let (h, apex) = g.add_apex(&face).unwrap();
        let mut keep_v = vec![true; h.vertex_count()];
        keep_v[apex] = false;
        let keep_e = vec![true; h.edge_count()];
        let back = h.subgraph(&keep_v, &keep_e, g.outer_face()).unwrap();
        assert_eq!(back.graph.rotations(), g.rotations());
    }

    #[test]
    fn split_k4_on_outer_triangle() {
        let g = k4();
        let (inside, outside) = g.split_on_cycle(&[0, 1, 2]).unwrap();
        assert_eq!((inside.graph.vertex_count(), inside.graph.edge_count()), (4, 6));
        assert_eq!((outside.graph.vertex_count(), outside.graph.edge_count()), (3, 3));
    }

    #[test]
    fn split_rejects_non_cycles() {
        let g = k4();
        assert!(g.split_on_cycle(&[0, 1]).is_err());
        assert!(g.split_on_cycle(&[0, 1, 1]).is_err());
        let g = PlaneGraph::random_triangulation(10, 1).unwrap();
        // 0 and 1 are adjacent, but a repeated vertex is never a simple cycle.
        assert!(g.split_on_cycle(&[0, 1, 0, 2]).is_err());
    }

    #[test]
    fn cycle_regions_orient_clockwise() {
        let g = k4();
        // Inner face 0,3,1 traced ccw; clockwise normalisation reverses it.
        let r = g.cycle_regions(&[0, 3, 1]).unwrap();
        assert!(cyclic_eq(&r.clockwise, &[0, 1, 3]));
        assert_eq!(r.vertex_side[2], Side::Outside);
        let r = g.cycle_regions(&[0, 1, 2]).unwrap();
        assert!(cyclic_eq(&r.clockwise, &[0, 1, 2]));
        assert_eq!(r.vertex_side[3], Side::Inside);
    }

    #[test]
    fn random_triangulation_shape() {
        let g = PlaneGraph::random_triangulation(3, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        let g = PlaneGraph::random_triangulation(10, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 24));
        assert!(g.is_triangulation());
        assert_eq!(g, PlaneGraph::random_triangulation(10, 1).unwrap());
        assert!(PlaneGraph::random_triangulation(2, 1).is_err());
    }

    #[test]
    fn face_walk_uses_every_dart_once() {
        let g = PlaneGraph::random_triangulation(40, 11).unwrap();
        let fm = g.face_map();
        let total: usize = fm.faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert!(fm.dart_face.iter().all(|&f| f < fm.faces.len()));
        assert_eq!(fm.faces[fm.outer].boundary, vec![0, 1, 2]);
    }
}
