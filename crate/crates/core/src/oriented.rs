//! Orientations, directed distances and the exhaustive oracles.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;
use crate::scalar::{cmp_weights, Weight};

/// A direction for every edge of a host graph, indexed by edge id.
///
/// `forward[e]` means the edge `(u, v)` with `u < v` is directed `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_forward(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    /// Builds an orientation from a full list of arcs `(tail, head)`.
    pub fn from_arcs(g: &PlaneGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = vec![None; g.edge_count()];
        for &(u, v) in arcs {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| Error::OrientationMismatch(format!("{u}->{v} is not an edge")))?;
            if seen[e].is_some() {
                return Err(Error::OrientationMismatch(format!("edge {u}-{v} oriented twice")));
            }
            seen[e] = Some(u < v);
        }
        let forward = seen
            .into_iter()
            .enumerate()
            .map(|(e, s)| {
                s.ok_or_else(|| {
                    let (u, v) = g.edges()[e];
                    Error::OrientationMismatch(format!("edge {u}-{v} not oriented"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation { forward })
    }

    /// Orientation whose edge `e` goes `tail -> head` with `tail = f(e)`.
    pub fn from_tails(g: &PlaneGraph, mut tail: impl FnMut(usize) -> usize) -> Self {
        let forward = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, _))| tail(e) == u)
            .collect();
        Orientation { forward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, g: &PlaneGraph, e: usize) -> (usize, usize) {
        let (u, v) = g.edges()[e];
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// All arcs, sorted by `(tail, head)`.
    pub fn arcs(&self, g: &PlaneGraph) -> Vec<(usize, usize)> {
        let mut a: Vec<_> = (0..self.forward.len()).map(|e| self.arc(g, e)).collect();
        a.sort_unstable();
        a
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            forward: self.forward.iter().map(|&f| !f).collect(),
        }
    }

    fn check(&self, g: &PlaneGraph) -> Result<()> {
        if self.forward.len() != g.edge_count() {
            return Err(Error::OrientationMismatch(format!(
                "{} directions for {} edges",
                self.forward.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// Positive edge weights indexed by edge id.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMap<W> {
    weights: Vec<W>,
}

impl<W: Weight> WeightMap<W> {
    pub fn new(g: &PlaneGraph, mut f: impl FnMut(usize, usize) -> W) -> Result<Self> {
        let weights: Vec<W> = g.edges().iter().map(|&(u, v)| f(u, v)).collect();
        Self::from_vec(weights)
    }

    pub fn uniform(g: &PlaneGraph, w: W) -> Result<Self> {
        Self::from_vec(vec![w; g.edge_count()])
    }

    pub fn from_vec(weights: Vec<W>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| **w <= W::zero()) {
            return Err(Error::InvalidParameter(format!("non-positive weight {w:?}")));
        }
        Ok(WeightMap { weights })
    }

    /// Builds from `(u, v, w)` triples; every edge must appear exactly once.
    pub fn from_triples(g: &PlaneGraph, triples: &[(usize, usize, W)]) -> Result<Self> {
        let mut slot: Vec<Option<W>> = vec![None; g.edge_count()];
        for (u, v, w) in triples {
            let e = g
                .edge_index(*u, *v)
                .ok_or_else(|| Error::InvalidParameter(format!("weight on non-edge {u}-{v}")))?;
            if slot[e].is_some() {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} weighted twice")));
            }
            slot[e] = Some(w.clone());
        }
        let weights = slot
            .into_iter()
            .enumerate()
            .map(|(e, w)| {
                w.ok_or_else(|| {
                    let (u, v) = g.edges()[e];
                    Error::InvalidParameter(format!("edge {u}-{v} has no weight"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_vec(weights)
    }

    pub fn get(&self, e: usize) -> &W {
        &self.weights[e]
    }

    pub fn as_slice(&self) -> &[W] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn max(&self) -> Option<W> {
        self.weights
            .iter()
            .cloned()
            .max_by(|a, b| cmp_weights(a, b))
    }

    /// Applies `f` to every weight.
    pub fn map<V: Weight>(&self, f: impl FnMut(&W) -> V) -> Result<WeightMap<V>> {
        WeightMap::from_vec(self.weights.iter().map(f).collect())
    }
}

/// All-pairs directed distances; `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// Adjacency lists of an oriented graph; arcs carry their edge id.
#[derive(Debug, Clone)]
pub struct Digraph {
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl Digraph {
    pub fn new(g: &PlaneGraph, o: &Orientation) -> Result<Self> {
        o.check(g)?;
        let arcs: Vec<(usize, usize)> = (0..g.edge_count()).map(|e| o.arc(g, e)).collect();
        Ok(Self::from_arcs(g.vertex_count(), &arcs))
    }

    /// Digraph on `n` vertices; arc `i` gets id `i`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (e, &(u, v)) in arcs.iter().enumerate() {
            out[u].push((v, e));
            inc[v].push((u, e));
        }
        Digraph { out, inc }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    fn bfs_on(adj: &[Vec<(usize, usize)>], src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Hop distances from `src`; `usize::MAX` marks unreachable.
    pub fn bfs_out(&self, src: usize) -> Vec<usize> {
        Self::bfs_on(&self.out, src)
    }

    /// Hop distances to `dst`.
    pub fn bfs_in(&self, dst: usize) -> Vec<usize> {
        Self::bfs_on(&self.inc, dst)
    }

    pub fn is_strong(&self) -> bool {
        let n = self.vertex_count();
        n == 0
            || (self.bfs_out(0).iter().all(|&d| d != usize::MAX)
                && self.bfs_in(0).iter().all(|&d| d != usize::MAX))
    }

    /// Largest distance out of `src`, or `None` if something is unreachable.
    pub fn out_eccentricity(&self, src: usize) -> Option<usize> {
        max_finite(&self.bfs_out(src))
    }

    /// Largest distance into `dst`, or `None` if something cannot reach it.
    pub fn in_eccentricity(&self, dst: usize) -> Option<usize> {
        max_finite(&self.bfs_in(dst))
    }

    /// Unweighted directed diameter, `None` if not strongly connected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.vertex_count())
            .into_par_iter()
            .map(|s| self.out_eccentricity(s))
            .try_reduce(|| 0, |a, b| Some(a.max(b)))
    }

    /// Max of out- and in-eccentricities over the given vertices. A lower
    /// bound on the diameter, and equal to it when `sources` is everything.
    pub fn sampled_diameter(&self, sources: &[usize]) -> Option<usize> {
        sources
            .par_iter()
            .map(|&s| Some(self.out_eccentricity(s)?.max(self.in_eccentricity(s)?)))
            .try_reduce(|| 0, |a, b| Some(a.max(b)))
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let rows: Vec<Vec<usize>> = (0..n).into_par_iter().map(|s| self.bfs_out(s)).collect();
        let dist = rows
            .into_iter()
            .flatten()
            .map(|d| (d != usize::MAX).then_some(d))
            .collect();
        DistanceMatrix { n, dist }
    }

    /// Dijkstra from `src` with `weights` indexed by arc id. Returns
    /// distances and the arc used to reach each vertex.
    pub fn dijkstra<W: Weight>(&self, src: usize, weights: &[W]) -> (Vec<Option<W>>, Vec<Option<usize>>) {
        let n = self.vertex_count();
        let mut dist: Vec<Option<W>> = vec![None; n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[src] = Some(W::zero());
        heap.push(Reverse(HeapItem(W::zero(), src)));
        while let Some(Reverse(HeapItem(d, u))) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for &(v, e) in &self.out[u] {
                let nd = d.clone() + weights[e].clone();
                let better = match &dist[v] {
                    None => true,
                    Some(old) => nd < *old,
                };
                if better && !done[v] {
                    dist[v] = Some(nd.clone());
                    pred[v] = Some(e);
                    heap.push(Reverse(HeapItem(nd, v)));
                }
            }
        }
        (dist, pred)
    }

    /// Largest weighted distance out of `src`.
    pub fn weighted_out_eccentricity<W: Weight>(&self, src: usize, weights: &[W]) -> Option<W> {
        let (dist, _) = self.dijkstra(src, weights);
        let mut best = W::zero();
        for d in dist {
            let d = d?;
            if d > best {
                best = d;
            }
        }
        Some(best)
    }

    /// Weighted directed diameter, `None` if not strongly connected.
    pub fn weighted_diameter<W: Weight>(&self, weights: &[W]) -> Option<W> {
        let eccs: Vec<Option<W>> = (0..self.vertex_count())
            .into_par_iter()
            .map(|s| self.weighted_out_eccentricity(s, weights))
            .collect();
        let mut best = W::zero();
        for e in eccs {
            let e = e?;
            if e > best {
                best = e;
            }
        }
        Some(best)
    }
}

fn max_finite(dist: &[usize]) -> Option<usize> {
    let mut best = 0;
    for &d in dist {
        if d == usize::MAX {
            return None;
        }
        best = best.max(d);
    }
    Some(best)
}

#[derive(Debug, Clone)]
struct HeapItem<W>(W, usize);

impl<W: Weight> PartialEq for HeapItem<W> {
    fn eq(&self, other: &Self) -> bool {
        cmp_weights(&self.0, &other.0).is_eq() && self.1 == other.1
    }
}
impl<W: Weight> Eq for HeapItem<W> {}
impl<W: Weight> PartialOrd for HeapItem<W> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<W: Weight> Ord for HeapItem<W> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        cmp_weights(&self.0, &other.0).then(self.1.cmp(&other.1))
    }
}

/// True iff the orientation makes `g` strongly connected.
pub fn is_strong(g: &PlaneGraph, o: &Orientation) -> Result<bool> {
    Ok(Digraph::new(g, o)?.is_strong())
}

/// Unweighted directed diameter; `Ok(None)` means "not strong".
pub fn directed_diameter(g: &PlaneGraph, o: &Orientation) -> Result<Option<usize>> {
    Ok(Digraph::new(g, o)?.diameter())
}

/// Weighted directed diameter; `Ok(None)` means "not strong".
pub fn weighted_directed_diameter<W: Weight>(
    g: &PlaneGraph,
    o: &Orientation,
    w: &WeightMap<W>,
) -> Result<Option<W>> {
    if w.len() != g.edge_count() {
        return Err(Error::InvalidParameter("weight map does not match graph".into()));
    }
    let d = Digraph::new(g, o)?;
    // arc ids coincide with edge ids
    Ok(d.weighted_diameter(w.as_slice()))
}

/// Settings for the exhaustive oracles.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    /// Largest edge count accepted (at most 63).
    pub budget: usize,
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub jobs: Option<usize>,
    /// Enumerate only orientations whose last edge has bit 0. Results are
    /// identical either way because reversal preserves strongness and
    /// diameter, and the complement of any counter with the top bit set is
    /// smaller.
    pub reversal_symmetry: bool,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            budget: 24,
            jobs: None,
            reversal_symmetry: true,
        }
    }
}

impl BruteForce {
    pub fn single_threaded() -> Self {
        BruteForce {
            jobs: Some(1),
            ..Self::default()
        }
    }

    fn prepare(&self, g: &PlaneGraph) -> Result<Kernel> {
        let m = g.edge_count();
        let budget = self.budget.min(63);
        if m > budget {
            return Err(Error::BudgetExceeded { edges: m, budget });
        }
        if let Some((u, v)) = g.find_bridge() {
            return Err(Error::Bridge(u, v));
        }
        if g.vertex_count() > 64 {
            return Err(Error::BudgetExceeded {
                edges: m,
                budget: 63,
            });
        }
        Ok(Kernel {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
        })
    }

    fn counter_limit(&self, m: usize) -> u64 {
        if self.reversal_symmetry && m > 0 {
            1u64 << (m - 1)
        } else {
            1u64 << m
        }
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.jobs {
            Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
                Ok(pool) => pool.install(job),
                Err(_) => job(),
            },
            None => job(),
        }
    }
}

/// Bitmask evaluation of one orientation at a time (n <= 64).
struct Kernel {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Kernel {
    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Out-masks for `counter`, or `None` if some vertex has in- or
    /// out-degree zero.
    fn masks(&self, counter: u64, out: &mut [u64], inc: &mut [u64]) -> bool {
        out.iter_mut().for_each(|x| *x = 0);
        inc.iter_mut().for_each(|x| *x = 0);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (a, b) = if counter >> i & 1 == 0 { (u, v) } else { (v, u) };
            out[a] |= 1 << b;
            inc[b] |= 1 << a;
        }
        out.iter().all(|&x| x != 0) && inc.iter().all(|&x| x != 0)
    }

    fn reach(&self, adj: &[u64], src: usize) -> u64 {
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    fn strong(&self, out: &[u64], inc: &[u64]) -> bool {
        let full = self.full();
        self.reach(out, 0) == full && self.reach(inc, 0) == full
    }

    /// Diameter if it is below `cutoff`, else `None`.
    fn diameter_below(&self, out: &[u64], cutoff: usize) -> Option<usize> {
        let full = self.full();
        let mut diam = 0;
        for s in 0..self.n {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut depth = 0;
            while seen != full {
                depth += 1;
                if depth >= cutoff {
                    return None;
                }
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= out[v];
                }
                frontier = next & !seen;
                if frontier == 0 {
                    return None;
                }
                seen |= frontier;
            }
            diam = diam.max(depth);
        }
        Some(diam)
    }

    /// True iff the weighted diameter is at most `limit`.
    fn weighted_within<W: Weight>(&self, out: &[u64], wmat: &[Option<W>], limit: &W) -> bool {
        let n = self.n;
        let mut dist: Vec<Option<W>> = vec![None; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = None);
            dist[s] = Some(W::zero());
            let mut done = 0u64;
            for _ in 0..n {
                let mut best: Option<usize> = None;
                for v in 0..n {
                    if done >> v & 1 == 1 {
                        continue;
                    }
                    if let Some(d) = &dist[v] {
                        match best {
                            Some(b) if cmp_weights(d, dist[b].as_ref().unwrap()).is_ge() => {}
                            _ => best = Some(v),
                        }
                    }
                }
                let Some(u) = best else { return false };
                let du = dist[u].clone().unwrap();
                if du > *limit {
                    return false;
                }
                done |= 1 << u;
                let mut f = out[u] & !done;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    let nd = du.clone() + wmat[u * n + v].clone().unwrap();
                    if dist[v].as_ref().is_none_or(|old| nd < *old) {
                        dist[v] = Some(nd);
                    }
                }
            }
        }
        true
    }
}

fn orientation_of(counter: u64, m: usize) -> Orientation {
    Orientation::from_forward((0..m).map(|i| counter >> i & 1 == 0).collect())
}

fn chunks(limit: u64) -> Vec<(u64, u64)> {
    let parts = 256u64.min(limit.max(1));
    let step = limit.div_ceil(parts).max(1);
    (0..parts)
        .map(|i| (i * step, ((i + 1) * step).min(limit)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Exact oriented diameter by enumerating every orientation. Edge `i`
/// (in sorted edge order) follows bit `i` of the counter; the witness is the
/// lowest counter attaining the minimum.
pub fn brute_force_od(g: &PlaneGraph, opts: &BruteForce) -> Result<(usize, Orientation)> {
    let kernel = opts.prepare(g)?;
    let m = g.edge_count();
    if g.vertex_count() == 1 {
        return Ok((0, Orientation::from_forward(Vec::new())));
    }
    let limit = opts.counter_limit(m);
    let global = AtomicUsize::new(usize::MAX);
    let scan = |(lo, hi): (u64, u64)| -> Option<(usize, u64)> {
        let mut out = vec![0u64; kernel.n];
        let mut inc = vec![0u64; kernel.n];
        let mut best: Option<(usize, u64)> = None;
        for c in lo..hi {
            if !kernel.masks(c, &mut out, &mut inc) || !kernel.strong(&out, &inc) {
                continue;
            }
            let local = best.map_or(usize::MAX, |b| b.0);
            // ties with the global best must still be found in this chunk
            let cutoff = local.min(global.load(Ordering::Relaxed).saturating_add(1));
            if let Some(d) = kernel.diameter_below(&out, cutoff) {
                best = Some((d, c));
                global.fetch_min(d, Ordering::Relaxed);
            }
        }
        best
    };
    let parts = chunks(limit);
    let result = opts.run(|| {
        parts
            .par_iter()
            .filter_map(|&r| scan(r))
            .min_by_key(|&(d, c)| (d, c))
    });
    let (d, c) = result.ok_or_else(|| Error::Internal("bridgeless graph without strong orientation".into()))?;
    Ok((d, orientation_of(c, m)))
}

/// Is there a strong orientation with weighted diameter at most `limit`?
/// Returns the lowest-counter witness when there is.
pub fn brute_force_weighted_witness<W: Weight>(
    g: &PlaneGraph,
    w: &WeightMap<W>,
    limit: &W,
    opts: &BruteForce,
) -> Result<Option<Orientation>> {
    let kernel = opts.prepare(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    if w.len() != m {
        return Err(Error::InvalidParameter("weight map does not match graph".into()));
    }
    if n == 1 {
        return Ok(Some(Orientation::from_forward(Vec::new())));
    }
    let mut wmat: Vec<Option<W>> = vec![None; n * n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        wmat[u * n + v] = Some(w.get(e).clone());
        wmat[v * n + u] = Some(w.get(e).clone());
    }
    let limit_counter = opts.counter_limit(m);
    let found = AtomicUsize::new(usize::MAX);
    let scan = |(lo, hi): (u64, u64)| -> Option<u64> {
        let mut out = vec![0u64; n];
        let mut inc = vec![0u64; n];
        for c in lo..hi {
            if (found.load(Ordering::Relaxed) as u64) < lo {
                return None;
            }
            if !kernel.masks(c, &mut out, &mut inc) || !kernel.strong(&out, &inc) {
                continue;
            }
            if kernel.weighted_within(&out, &wmat, limit) {
                found.fetch_min(c as usize, Ordering::Relaxed);
                return Some(c);
            }
        }
        None
    };
    let parts = chunks(limit_counter);
    let hit = opts.run(|| parts.par_iter().filter_map(|&r| scan(r)).min());
    Ok(hit.map(|c| orientation_of(c, m)))
}

/// Decision version of [`brute_force_weighted_witness`].
pub fn brute_force_weighted_decision<W: Weight>(
    g: &PlaneGraph,
    w: &WeightMap<W>,
    limit: &W,
    opts: &BruteForce,
) -> Result<bool> {
    Ok(brute_force_weighted_witness(g, w, limit, opts)?.is_some())
}

/// Every strong orientation (all `2^m` counters, no symmetry reduction).
pub fn strong_orientations(g: &PlaneGraph, opts: &BruteForce) -> Result<Vec<Orientation>> {
    let kernel = opts.prepare(g)?;
    let m = g.edge_count();
    let scan = |(lo, hi): (u64, u64)| -> Vec<u64> {
        let mut out = vec![0u64; kernel.n];
        let mut inc = vec![0u64; kernel.n];
        (lo..hi)
            .filter(|&c| kernel.masks(c, &mut out, &mut inc) && kernel.strong(&out, &inc))
            .collect()
    };
    let parts = chunks(1u64 << m);
    let counters: Vec<u64> = opts.run(|| parts.par_iter().flat_map_iter(|&r| scan(r)).collect());
    Ok(counters.into_iter().map(|c| orientation_of(c, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 1, 2]).unwrap()
    }

    fn cycle3(g: &PlaneGraph) -> Orientation {
        Orientation::from_arcs(g, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn directed_triangle() {
        let g = triangle();
        let o = cycle3(&g);
        assert!(is_strong(&g, &o).unwrap());
        assert_eq!(directed_diameter(&g, &o).unwrap(), Some(2));
        let w = WeightMap::uniform(&g, Rational::new(1, 3)).unwrap();
        assert_eq!(weighted_directed_diameter(&g, &o, &w).unwrap(), Some(Rational::new(2, 3)));
    }

    #[test]
    fn sink_triangle_not_strong() {
        let g = triangle();
        let o = Orientation::from_arcs(&g, &[(0, 2), (1, 2), (0, 1)]).unwrap();
        assert!(!is_strong(&g, &o).unwrap());
        assert_eq!(directed_diameter(&g, &o).unwrap(), None);
    }

    #[test]
    fn missing_edge_is_an_error() {
        let g = triangle();
        assert!(Orientation::from_arcs(&g, &[(0, 1), (1, 2)]).is_err());
        assert!(Orientation::from_arcs(&g, &[(0, 1), (1, 0), (1, 2), (2, 0)]).is_err());
        let short = Orientation::from_forward(vec![true, true]);
        assert!(is_strong(&g, &short).is_err());
    }

    #[test]
    fn arcs_are_sorted() {
        let g = triangle();
        let o = cycle3(&g);
        assert_eq!(o.arcs(&g), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(o.reversed().arcs(&g), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn brute_force_triangle() {
        let g = triangle();
        let (d, o) = brute_force_od(&g, &BruteForce::default()).unwrap();
        assert_eq!(d, 2);
        assert!(is_strong(&g, &o).unwrap());
    }

    #[test]
    fn brute_force_rejects_bridges_and_budget() {
        let path = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]], vec![0, 1, 2, 1]).unwrap();
        assert!(matches!(
            brute_force_od(&path, &BruteForce::default()),
            Err(Error::Bridge(..))
        ));
        let g = PlaneGraph::random_triangulation(12, 2).unwrap();
        assert!(matches!(
            brute_force_od(&g, &BruteForce::default()),
            Err(Error::BudgetExceeded { edges: 30, budget: 24 })
        ));
    }

    #[test]
    fn weighted_decision_triangle() {
        let g = triangle();
        let w = WeightMap::uniform(&g, Rational::from_integer(1)).unwrap();
        let opts = BruteForce::default();
        assert!(brute_force_weighted_decision(&g, &w, &Rational::from_integer(2), &opts).unwrap());
        assert!(!brute_force_weighted_decision(&g, &w, &Rational::from_integer(1), &opts).unwrap());
    }

    #[test]
    fn triangle_has_two_strong_orientations() {
        let g = triangle();
        assert_eq!(strong_orientations(&g, &BruteForce::default()).unwrap().len(), 2);
    }

    #[test]
    fn nonpositive_weights_rejected() {
        let g = triangle();
        assert!(WeightMap::uniform(&g, Rational::from_integer(0)).is_err());
        assert!(WeightMap::uniform(&g, -1.0f64).is_err());
    }

    #[test]
    fn distance_matrix_matches_bfs() {
        let g = triangle();
        let d = Digraph::new(&g, &cycle3(&g)).unwrap();
        let dm = d.distance_matrix();
        assert_eq!(dm.get(0, 2), Some(2));
        assert_eq!(dm.get(2, 0), Some(1));
        assert_eq!(dm.get(1, 1), Some(0));
    }
}
