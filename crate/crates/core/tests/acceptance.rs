//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bchrome::construct::{
    check_requirements, hypothesis_report, lemma_extension, monochromatic_edges, order_two_bunch,
    swap_repair, Strategy,
};
use bchrome::generators::{
    cycle, hoffman_singleton, petersen, random_regular_girth, robertson, GenSpec,
};
use bchrome::io::{parse_dimacs, parse_graph6, write_dimacs, write_graph6};
use bchrome::neighborhood::{s2_degree, second_sphere};
use bchrome::oracle::{
    b_coloring_exists, c6_in_n2_by_enumeration, exact_b_chromatic, m_degree, transversal_backtrack,
    BChromatic, BColoringSearch, SearchLimits,
};
use bchrome::transversal::{find_transversal, SetFamily, TransversalResult};
use bchrome::{verify_certificate, BunchStructure, Error, Graph, PartialColoring, Verdict};

const PETERSEN_LIMIT: Duration = Duration::from_secs(10);
const C5_LIMIT: Duration = Duration::from_secs(1);
const HS_ALL_CENTERS_LIMIT: Duration = Duration::from_secs(30);
const MIN_MUTATIONS: usize = 100;
const MIN_C6_GRAPHS: usize = 200;
const TRANSVERSAL_FAMILIES: usize = 10_000;
const MIN_LEMMA_B_VERTICES: usize = 5;
const SWAP_TRIALS: usize = 1_000;
const FUZZ_INPUTS: usize = 100_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn relabeled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let value = exact_b_chromatic(&petersen(), &SearchLimits::default());
    let elapsed = t.elapsed();
    outcome(
        value == BChromatic::Exact(3) && elapsed < PETERSEN_LIMIT,
        format!("Petersen b-chromatic {value:?} in {elapsed:.2?} (limit {PETERSEN_LIMIT:?})"),
    )
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let value = exact_b_chromatic(&cycle(5).unwrap(), &SearchLimits::default());
    let elapsed = t.elapsed();
    outcome(
        value == BChromatic::Exact(3) && elapsed < C5_LIMIT,
        format!("C5 b-chromatic {value:?} in {elapsed:.2?} (limit {C5_LIMIT:?})"),
    )
}

fn criterion_3() -> Outcome {
    let hs = hoffman_singleton();
    let t = Instant::now();
    let mut accepted = 0;
    let mut failures = Vec::new();
    for x in 0..hs.n() {
        match Strategy::TwoBunch.color(&hs, x) {
            Ok(cert) if cert.k == 8 && verify_certificate(&cert, &hs).is_accept() => accepted += 1,
            Ok(cert) => failures.push(format!("center {x}: k = {}", cert.k)),
            Err(e) => failures.push(format!("center {x}: {e}")),
        }
    }
    let elapsed = t.elapsed();
    outcome(
        accepted == 50 && elapsed < HS_ALL_CENTERS_LIMIT,
        format!(
            "{accepted}/50 centers accepted with k = 8 in {elapsed:.2?} (limit {HS_ALL_CENTERS_LIMIT:?}) {failures:?}"
        ),
    )
}

fn criterion_4() -> Outcome {
    let hs = hoffman_singleton();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut valid, mut mutations, mut missed) = (0, 0, 0);
    for x in 0..hs.n() {
        let nb = hs.neighbors(x);
        let Ok(m) = order_two_bunch(&hs, x, nb[0], nb[1]) else {
            continue;
        };
        if check_requirements(&hs, &m).is_empty() {
            valid += 1;
        }
        for _ in 0..4 {
            let mut bad = m.clone();
            let r = rng.random_range(0..bad.cells.len());
            let c = rng.random_range(0..bad.d());
            let old = bad.cells[r][c];
            let new = loop {
                let v = rng.random_range(0..hs.n());
                if v != old {
                    break v;
                }
            };
            bad.cells[r][c] = new;
            mutations += 1;
            if check_requirements(&hs, &bad).is_empty() {
                missed += 1;
            }
        }
    }
    outcome(
        valid == 50 && mutations >= MIN_MUTATIONS && missed == 0,
        format!(
            "{valid}/50 matrices valid; {missed} of {mutations} single-cell mutations accepted (need >= {MIN_MUTATIONS}, 0 accepted)"
        ),
    )
}

fn criterion_5_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut corpus = vec![petersen(), robertson()];
    let mut seed = 0;
    for d in [3usize, 4] {
        let mut made = 0;
        while made < 80 {
            seed += 1;
            let n = rng.random_range(if d == 3 { 10..=30 } else { 19..=30 }) * 2;
            if let Ok(g) = random_regular_girth(&GenSpec::random_regular(d, n, 5, seed)) {
                corpus.push(g);
                made += 1;
            }
        }
    }
    let hs = hoffman_singleton();
    corpus.push(hs.clone());
    for _ in 0..40 {
        corpus.push(relabeled(&hs, &mut rng));
    }
    corpus
}

fn criterion_5() -> Outcome {
    let corpus = criterion_5_corpus();
    let (mut vertices, mut mismatches) = (0, 0);
    for g in &corpus {
        for x in 0..g.n() {
            let formula: usize = second_sphere(g, x)
                .unwrap()
                .into_iter()
                .map(|v| {
                    let p = s2_degree(g, x, v).unwrap();
                    p * p.saturating_sub(1) / 2
                })
                .sum();
            if formula != c6_in_n2_by_enumeration(g, x).unwrap() {
                mismatches += 1;
            }
            vertices += 1;
        }
    }
    let in_range = corpus
        .iter()
        .all(|g| g.n() <= 60 && g.girth().is_some_and(|len| len >= 5));
    outcome(
        corpus.len() >= MIN_C6_GRAPHS && in_range && mismatches == 0,
        format!(
            "{} graphs (d in 3, 4, 7; n <= 60; girth >= 5), {vertices} centers, {mismatches} mismatches",
            corpus.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut agree, mut bad_violators, mut bad_assignments) = (0, 0, 0);
    let mut infeasible = 0;
    for _ in 0..TRANSVERSAL_FAMILIES {
        let universe = rng.random_range(1..=8);
        let s = rng.random_range(0..=8);
        let density = rng.random_range(0.1..0.7);
        let sets: Vec<Vec<usize>> = (0..s)
            .map(|_| {
                (1..=universe)
                    .filter(|_| rng.random_bool(density))
                    .collect()
            })
            .collect();
        let fam = SetFamily::new(universe, sets).unwrap();
        let brute = transversal_backtrack(&fam).unwrap();
        let fast = find_transversal(&fam);
        if brute.is_some() == fast.assignment().is_some() {
            agree += 1;
        }
        match &fast {
            TransversalResult::Assignment(a) => {
                let mut used = a.clone();
                used.sort_unstable();
                used.dedup();
                let members = a.iter().zip(fam.sets()).all(|(e, set)| set.contains(e));
                if used.len() != a.len() || !members {
                    bad_assignments += 1;
                }
            }
            TransversalResult::Violator(i) => {
                infeasible += 1;
                if fam.union_size(i) >= i.len() {
                    bad_violators += 1;
                }
            }
        }
    }
    outcome(
        agree == TRANSVERSAL_FAMILIES && bad_violators == 0 && bad_assignments == 0,
        format!(
            "{agree}/{TRANSVERSAL_FAMILIES} agree ({infeasible} without transversal), {bad_violators} bad violators, {bad_assignments} bad assignments"
        ),
    )
}

fn criterion_7() -> Outcome {
    let hs = hoffman_singleton();
    let mut worst = usize::MAX;
    let mut missing = Vec::new();
    for x in 0..hs.n() {
        match lemma_extension(&hs, x, None) {
            Ok(c) => {
                let b = c.b_vertices(&hs);
                worst = worst.min(b.len());
                let required = std::iter::once(x).chain(hs.neighbors(x)[..4].iter().copied());
                if required.into_iter().any(|v| !b.contains(&v)) {
                    missing.push(x);
                }
            }
            Err(e) => {
                worst = 0;
                missing.push(x);
                eprintln!("lemma at {x}: {e}");
            }
        }
    }
    outcome(
        worst >= MIN_LEMMA_B_VERTICES && missing.is_empty(),
        format!(
            "fewest b-vertices over 50 centers {worst} (need >= {MIN_LEMMA_B_VERTICES}); centers missing x or x_1..x_4: {missing:?}"
        ),
    )
}

/// A star around 0 with `d` bunches of `d - 1` vertices each, plus a random
/// matching between second-sphere vertices of different bunches, so every
/// induced second-sphere degree is at most one.
fn synthetic_star(d: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let s2 = |i: usize, j: usize| 1 + d + i * (d - 1) + j;
    let n = 1 + d + d * (d - 1);
    let mut edges = Vec::new();
    for i in 0..d {
        edges.push((0, 1 + i));
        for j in 0..d - 1 {
            edges.push((1 + i, s2(i, j)));
        }
    }
    let mut pool: Vec<usize> = (1 + d..n).collect();
    pool.shuffle(rng);
    let bunch_of = |v: usize| (v - 1 - d) / (d - 1);
    let mut matched = vec![false; n];
    for a in 0..pool.len() {
        let u = pool[a];
        if matched[u] || !rng.random_bool(density) {
            continue;
        }
        if let Some(&v) = pool[a + 1..]
            .iter()
            .find(|&&v| !matched[v] && bunch_of(v) != bunch_of(u))
        {
            matched[u] = true;
            matched[v] = true;
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut ok, mut swaps) = (0, 0);
    let mut failures = Vec::new();
    for trial in 0..SWAP_TRIALS {
        let d = rng.random_range(7..=10);
        let density = rng.random_range(0.3..=1.0);
        let g = synthetic_star(d, density, &mut rng);
        let bs = BunchStructure::new(&g, 0, None).unwrap();
        let mut c = PartialColoring::new(g.n(), d + 1);
        let mut trial_ok = true;
        for t in 0..d {
            let mut colors: Vec<usize> = (1..=d).filter(|&col| col != t + 1).collect();
            colors.shuffle(&mut rng);
            for (&v, &col) in bs.bunch(t).iter().zip(&colors) {
                c.set(v, col).unwrap();
            }
            if t == 0 {
                continue;
            }
            match swap_repair(&mut c, &g, &bs, t) {
                Ok(trace) => {
                    swaps += trace.len() - 1;
                    let decreasing = trace.windows(2).all(|w| w[1] < w[0]);
                    let clean = monochromatic_edges(&c, &g, &bs, t).is_empty();
                    if !decreasing || trace.last() != Some(&0) || !clean {
                        trial_ok = false;
                        failures.push(format!("trial {trial} bunch {t}: trace {trace:?}"));
                    }
                }
                Err(e) => {
                    trial_ok = false;
                    failures.push(format!("trial {trial} bunch {t}: {e}"));
                }
            }
            if !trial_ok {
                break;
            }
        }
        if trial_ok {
            ok += 1;
        }
    }
    failures.truncate(5);
    outcome(
        ok == SWAP_TRIALS,
        format!("{ok}/{SWAP_TRIALS} trials clean with strictly decreasing traces, {swaps} swaps {failures:?}"),
    )
}

/// In-scope instances: Hoffman-Singleton with relabelings and random
/// 7-regular girth-5 graphs up to 500 vertices.
fn criterion_9_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let hs = hoffman_singleton();
    let mut corpus = vec![hs.clone()];
    for _ in 0..4 {
        corpus.push(relabeled(&hs, &mut rng));
    }
    for (n, seed) in [(200, 1), (200, 2), (300, 1), (300, 2), (400, 1), (500, 1)] {
        corpus.push(random_regular_girth(&GenSpec::random_regular(7, n, 5, seed)).unwrap());
    }
    corpus
}

fn criterion_9() -> Outcome {
    let lim = SearchLimits::default();
    let (mut graphs, mut colorings, mut construction_failures) = (0, 0, 0);
    let mut problems = Vec::new();
    for (gi, g) in criterion_9_corpus().iter().enumerate() {
        let report = hypothesis_report(g);
        let pairs = report.applicable();
        if pairs.is_empty() {
            continue;
        }
        graphs += 1;
        let d = report.degree.unwrap();
        // d + 1 colors are attainable and no more: every color class of a
        // larger b-coloring would need a vertex of degree at least d + 1.
        let upper = m_degree(g) == d + 1
            && matches!(b_coloring_exists(g, d + 2, &lim), BColoringSearch::No);
        let attainable = matches!(b_coloring_exists(g, d + 1, &lim), BColoringSearch::Yes(_));
        if !upper || !attainable {
            problems.push(format!(
                "graph {gi}: oracle upper {upper}, attainable {attainable}"
            ));
        }
        for (v, s) in pairs {
            match s.color(g, v) {
                Ok(cert) if cert.k == d + 1 && verify_certificate(&cert, g) == Verdict::Accept => {
                    colorings += 1
                }
                Ok(cert) => problems.push(format!("graph {gi} {s} at {v}: k = {}", cert.k)),
                Err(e) => {
                    if matches!(e, Error::ConstructionFailed { .. }) {
                        construction_failures += 1;
                    }
                    problems.push(format!("graph {gi} {s} at {v}: {e}"));
                }
            }
        }
    }
    let n_problems = problems.len();
    problems.truncate(5);
    outcome(
        graphs > 0 && n_problems == 0 && construction_failures == 0,
        format!(
            "{graphs} in-scope graphs, {colorings} applicable (vertex, strategy) pairs colored with k = d + 1 = b-chromatic number, {construction_failures} construction failures {problems:?}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut corpus = criterion_5_corpus();
    corpus.extend(criterion_9_corpus());
    corpus.push(cycle(5).unwrap());
    corpus.push(Graph::empty(0));
    corpus.push(Graph::empty(1));
    let mut bad = 0;
    for g in &corpus {
        let g6 = write_graph6(g).unwrap();
        let back = parse_graph6(&g6).unwrap();
        if back != *g || write_graph6(&back).unwrap() != g6 {
            bad += 1;
        }
        let dimacs = write_dimacs(g);
        let back = parse_dimacs(&dimacs).unwrap();
        if back != *g || write_dimacs(&back) != dimacs {
            bad += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut crashes = 0;
    let mut parsed = 0;
    for i in 0..FUZZ_INPUTS {
        let len = rng.random_range(0..48);
        let bytes: Vec<u8> = (0..len)
            .map(|_| {
                if i % 2 == 0 {
                    rng.random_range(63..=126)
                } else {
                    rng.random()
                }
            })
            .collect();
        let text = String::from_utf8_lossy(&bytes).into_owned();
        let result = catch_unwind(AssertUnwindSafe(|| {
            let a = parse_graph6(&text);
            let b = parse_dimacs(&text);
            (a.is_ok(), b.is_ok())
        }));
        match result {
            Ok((a, b)) => parsed += usize::from(a) + usize::from(b),
            Err(_) => crashes += 1,
        }
    }
    outcome(
        bad == 0 && crashes == 0,
        format!(
            "{} graphs round-tripped through graph6 and DIMACS with {bad} differences; {FUZZ_INPUTS} fuzz inputs, {crashes} crashes, {parsed} parsed",
            corpus.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let result = catch_unwind(run).unwrap_or_else(|_| outcome(false, "panicked"));
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {tag}  {}", result.detail);
        failed += usize::from(!result.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
