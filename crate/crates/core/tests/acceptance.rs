//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oriented_diameter::hardness::{
    build_reduction, check_cross_lemma, orientation_from_partition, partition_dp, reduction_roundtrip,
    PartitionInstance,
};
use oriented_diameter::lower_bound::NestedTriangles;
use oriented_diameter::oriented::{
    brute_force_od, directed_diameter, strong_orientations, weighted_directed_diameter, BruteForce,
};
use oriented_diameter::planar_orient::improved_orient;
use oriented_diameter::schnyder::{best_realizer, compute_realizer, initial_orient, three_quarter_bound};
use oriented_diameter::separator::cycle_separator;
use oriented_diameter::trigrid::TriGrid;
use oriented_diameter::{Digraph, PlaneGraph, WeightMap};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k4() -> PlaneGraph {
    PlaneGraph::from_rotations(
        vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        vec![0, 1, 2],
    )
    .unwrap()
}

fn octahedron() -> PlaneGraph {
    PlaneGraph::from_rotations(
        vec![
            vec![1, 3, 5, 2],
            vec![2, 4, 3, 0],
            vec![0, 5, 4, 1],
            vec![0, 1, 4, 5],
            vec![3, 1, 2, 5],
            vec![0, 3, 4, 2],
        ],
        vec![0, 1, 2],
    )
    .unwrap()
}

/// Triangulations for the realizer, initial-orientation and separator
/// criteria. Grids are closed by an apex on their outer face.
fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = vec![("K4".to_string(), k4()), ("octahedron".to_string(), octahedron())];
    for r in 3..=8 {
        let t = TriGrid::generate(r);
        let (closed, _) = t.graph().add_apex(t.graph().outer_face()).unwrap();
        out.push((format!("T_{r}+apex"), closed));
    }
    for m in 2..=8 {
        out.push((format!("nested({m})"), NestedTriangles::new(m).unwrap().into_graph()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..100 {
        let n = rng.gen_range(4..=500);
        out.push((
            format!("random(n={n}, seed={i})"),
            PlaneGraph::random_triangulation(n, i).unwrap(),
        ));
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for r in 3..=25 {
        let t = TriGrid::generate(r);
        let o = t.orient().map_err(|e| e.to_string())?;
        let d = directed_diameter(t.graph(), &o).map_err(|e| e.to_string())?;
        ensure(d == Some(r + 1), || format!("T_{r}: diameter {d:?}, expected {}", r + 1))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("r = 3..25 all exact, {took:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for (r, want) in [(2, 3), (3, 4)] {
        let start = Instant::now();
        let t = TriGrid::generate(r);
        let (d, _) = brute_force_od(t.graph(), &BruteForce::single_threaded()).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(d == want, || format!("OD(T_{r}) = {d}, expected {want}"))?;
        ensure(took < Duration::from_secs(60), || format!("T_{r} took {took:?}"))?;
        notes.push(format!("OD(T_{r}) = {d} in {took:.2?}"));
    }
    Ok(notes.join(", "))
}

fn criterion_3() -> Outcome {
    let mut reported = Vec::new();
    let corpus = corpus();
    for (name, g) in &corpus {
        let n = g.vertex_count();
        for choice in 0..3 {
            let rz = compute_realizer(g, choice).map_err(|e| format!("{name}: {e}"))?;
            rz.validate(g).map_err(|e| format!("{name} choice {choice}: {e}"))?;
            let rep = rz.leaf_report(g);
            let sum = rep.leaf_sum();
            let lo = 2 * n - 5 - (n - 1) / 2;
            ensure(sum >= lo && sum <= 2 * n - 5, || {
                format!("{name}: leaf sum {sum} outside [{lo}, {}]", 2 * n - 5)
            })?;
            ensure(rep.delta0 <= (n - 1) / 2, || format!("{name}: delta0 {}", rep.delta0))?;
            if !rep.identity_holds {
                reported.push(format!("{name} (choice {choice})"));
            }
        }
        let (best, _) = best_realizer(g).map_err(|e| format!("{name}: {e}"))?;
        best.validate(g).map_err(|e| format!("{name} best: {e}"))?;
    }
    let note = if reported.is_empty() {
        "identity exact everywhere".to_string()
    } else {
        format!("identity off on {}", reported.join("; "))
    };
    Ok(format!("{} graphs x 3 roots validated, {note}", corpus.len()))
}

fn criterion_4() -> Outcome {
    let mut met = 0;
    let corpus = corpus();
    for (name, g) in &corpus {
        let n = g.vertex_count();
        let init = initial_orient(g).map_err(|e| format!("{name}: {e}"))?;
        let d = directed_diameter(g, &init.orientation)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: not strong"))?;
        ensure(d <= init.bound, || format!("{name}: diameter {d} > bound {}", init.bound))?;
        if init.report.threshold_met {
            met += 1;
            let b = three_quarter_bound(n);
            ensure(d <= b, || format!("{name}: diameter {d} > ceil(3(n-1)/4)+2 = {b}"))?;
        }
    }
    Ok(format!("{} graphs strong and within bound, threshold met on {met}", corpus.len()))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    let mut graphs = corpus();
    for r in 4..=8 {
        graphs.push((format!("T_{r}"), TriGrid::generate(r).graph().clone()));
    }
    for (name, g) in graphs.iter().filter(|(_, g)| g.vertex_count() >= 12) {
        let n = g.vertex_count();
        let sep = cycle_separator(g).map_err(|e| format!("{name}: {e}"))?;
        sep.validate(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(sep.larger_side() <= 2 * n / 3, || {
            format!("{name}: side {} > {}", sep.larger_side(), 2 * n / 3)
        })?;
        let ratio = sep.len() as f64 / (n as f64).sqrt();
        ensure(ratio <= 4.0, || format!("{name}: |C| = {} > 4 sqrt({n})", sep.len()))?;
        worst = worst.max(ratio);
        checked += 1;
    }
    Ok(format!("{checked} graphs balanced, max |C|/sqrt(n) = {worst:.2}"))
}

/// Strongness plus diameter (exact up to 2000 vertices, 100 sampled
/// sources beyond).
fn measured_diameter(g: &PlaneGraph, o: &oriented_diameter::Orientation, seed: u64) -> Result<usize, String> {
    let dg = Digraph::new(g, o).map_err(|e| e.to_string())?;
    if !dg.is_strong() {
        return Err("not strong".into());
    }
    let n = g.vertex_count();
    if n <= 2000 {
        return dg.diameter().ok_or_else(|| "not strong".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sources: Vec<usize> = (0..100).map(|_| rng.gen_range(0..n)).collect();
    dg.sampled_diameter(&sources).ok_or_else(|| "not strong".into())
}

fn criterion_6() -> Outcome {
    let mut cases: Vec<(String, PlaneGraph)> = Vec::new();
    for r in [10, 20, 40, 80, 140] {
        cases.push((format!("T_{r}"), TriGrid::generate(r).graph().clone()));
    }
    for m in [10, 100, 667, 3333] {
        cases.push((format!("nested({m})"), NestedTriangles::new(m).unwrap().into_graph()));
    }
    for (i, n) in [100, 500, 2000, 5000, 10000].into_iter().enumerate() {
        cases.push((format!("random({n})"), PlaneGraph::random_triangulation(n, 77 + i as u64).unwrap()));
    }
    let mut worst_build = Duration::ZERO;
    let mut notes = Vec::new();
    for (idx, (name, g)) in cases.iter().enumerate() {
        let n = g.vertex_count();
        let start = Instant::now();
        let o = improved_orient(g).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        worst_build = worst_build.max(took);
        ensure(took < Duration::from_secs(5), || format!("{name}: construction took {took:?}"))?;
        let d = measured_diameter(g, &o, idx as u64).map_err(|e| format!("{name}: {e}"))?;
        let bound = n as f64 / 2.0 + 6.0 * (n as f64).sqrt();
        ensure(d as f64 <= bound, || format!("{name}: diameter {d} > {bound:.1}"))?;
        notes.push(format!("{name} {d}/{bound:.0}"));
    }
    Ok(format!("slowest build {worst_build:.2?}; {}", notes.join(", ")))
}

fn criterion_7() -> Outcome {
    for m in 1..=1000 {
        let t = NestedTriangles::new(m).unwrap();
        let (d, ok) = t.verify_lower_bound();
        ensure(ok, || format!("m = {m}: distance {d}"))?;
    }
    let g = NestedTriangles::new(3).unwrap().into_graph();
    let (od, _) = brute_force_od(&g, &BruteForce::default()).map_err(|e| e.to_string())?;
    ensure(od >= 3, || format!("OD(nested(3)) = {od} < 3"))?;
    Ok(format!("distances exact for m <= 1000, OD(nested(3)) = {od}"))
}

fn multisets(max_len: usize, max_val: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<u64>, lo: u64, max_len: usize, max_val: u64, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for v in lo..=max_val {
            cur.push(v);
            rec(cur, v, max_len, max_val, out);
            cur.pop();
        }
    }
    rec(&mut Vec::new(), 1, max_len, max_val, &mut out);
    out
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let opts = BruteForce {
        jobs: Some(4),
        ..BruteForce::default()
    };
    let sets = multisets(3, 6);
    let mut yes = 0;
    let mut mismatches = Vec::new();
    let mut doubled_mismatches = 0;
    for s in &sets {
        let inst = PartitionInstance::new(s.clone()).unwrap();
        let rt = reduction_roundtrip(&inst, &opts).map_err(|e| e.to_string())?;
        yes += usize::from(rt.decision);
        if !rt.agrees() {
            mismatches.push(s.clone());
            // diagnostic only: the same set with every value doubled
            let rt2 = reduction_roundtrip(&inst.doubled(), &opts).map_err(|e| e.to_string())?;
            doubled_mismatches += usize::from(!rt2.agrees());
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("round trip took {took:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut forward = 0;
    while forward < 200 {
        let len = rng.gen_range(2..=12);
        let values: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=50)).collect();
        let inst = PartitionInstance::new(values.clone()).unwrap();
        let Some((a, b)) = partition_dp(&inst).map_err(|e| e.to_string())? else {
            continue;
        };
        let ri = build_reduction(&inst).map_err(|e| e.to_string())?;
        let o = orientation_from_partition(&ri, &a, &b).map_err(|e| e.to_string())?;
        let d = weighted_directed_diameter(&ri.graph, &o, &ri.weights)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{values:?}: not strong"))?;
        ensure(d <= ri.d_threshold, || format!("{values:?}: diameter {d} > D = {}", ri.d_threshold))?;
        forward += 1;
    }
    let forward_note = "200 forward instances within D";
    if !mismatches.is_empty() {
        let odd = mismatches.iter().filter(|s| s.iter().sum::<u64>() % 2 == 1).count();
        return Err(format!(
            "{} of {} sets have no partition yet an orientation within D ({odd} of them have odd sum): {:?}; \
             with values doubled {} disagree; {forward_note}",
            mismatches.len(),
            sets.len(),
            mismatches,
            doubled_mismatches
        ));
    }
    Ok(format!(
        "{} sets agree ({yes} partitionable) in {took:.2?}; {forward_note}",
        sets.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    for s in [vec![1], vec![1, 1], vec![1, 2], vec![1, 1, 2], vec![2, 3, 6]] {
        let inst = PartitionInstance::new(s.clone()).unwrap();
        let ri = build_reduction(&inst).map_err(|e| e.to_string())?;
        let all = strong_orientations(&ri.graph, &BruteForce::default()).map_err(|e| e.to_string())?;
        for o in &all {
            let ok = check_cross_lemma(&ri, o).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{s:?}: paths do not split the top edges"))?;
        }
        total += all.len();
    }
    Ok(format!("{total} strong orientations checked"))
}

fn criterion_10() -> Outcome {
    let eps_num = 3u64; // 1 + eps = 3/2
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let n = rng.gen_range(50..=2000);
        let g = PlaneGraph::random_triangulation(n, 1000 + i).unwrap();
        // weights x_e / total with x_e in 1..=4
        let xs: Vec<u64> = (0..g.edge_count()).map(|_| rng.gen_range(1..=4)).collect();
        let total: u64 = xs.iter().sum();
        let max = *xs.iter().max().unwrap();
        // max / total <= (1 + eps) / n
        ensure(2 * max * n as u64 <= eps_num * total, || format!("instance {i}: weights too heavy"))?;
        let w = WeightMap::from_vec(xs).unwrap();
        let o = improved_orient(&g).map_err(|e| e.to_string())?;
        let unweighted = directed_diameter(&g, &o).map_err(|e| e.to_string())?.ok_or("not strong")?;
        let weighted = weighted_directed_diameter(&g, &o, &w)
            .map_err(|e| e.to_string())?
            .ok_or("not strong")?;
        // exact: weighted <= max weight x unweighted diameter
        ensure(weighted <= max * unweighted as u64, || format!("instance {i}: max-weight inequality"))?;
        let value = weighted as f64 / total as f64;
        let bound = 1.5 / n as f64 * (n as f64 / 2.0 + 6.0 * (n as f64).sqrt());
        ensure(value <= bound, || format!("instance {i} (n = {n}): {value:.4} > {bound:.4}"))?;
        worst = worst.max(value / bound);
    }
    Ok(format!("50 instances, worst ratio to bound {worst:.3}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("trigrid exactness", criterion_1),
        ("trigrid optimality by enumeration", criterion_2),
        ("realizer invariants", criterion_3),
        ("initial orientation bound", criterion_4),
        ("cycle separator contract", criterion_5),
        ("improved orientation bound", criterion_6),
        ("nested triangles lower bound", criterion_7),
        ("partition reduction round trip", criterion_8),
        ("top-edge partition by shortest paths", criterion_9),
        ("small-weight corollary", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let label = format!("criterion {:>2} {name}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {label} ({:.1?}): {detail}", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {label} ({:.1?}): {why}", start.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
