//! Acceptance matrix: runs each criterion at its tolerance and time limit and
//! prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qkneser::exact::{mis_exact, treewidth_exact, SolveBudget};
use qkneser::graph::Graph;
use qkneser::kneser::{
    alpha_value, bounded_main_range_tuples, build_kneser_graph, counting_inequality_check, duality_isomorphism,
    star_independent_vertices, theorem_verdict, KneserParams,
};
use qkneser::quadric::{build_quadric_graph, grid_lemma_search, perp_section_census, verify_klein_isomorphism};
use qkneser::treedec::{read_gr, read_td, star_decomposition, validate_td, write_gr, write_td};
use qkneser::verify::{gauss_bounds_cases, pair_count_cases, parabola_cases, GAUSS_QS};
use qkneser::{bridge_inequality_check, gf::prime_powers_upto};

mod common;
use common::brute_treewidth;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn params(q: u64, n: usize, k: usize, t: usize) -> KneserParams {
    KneserParams::new(q, n, k, t).expect("valid parameters")
}

fn run(id: u32, limit: Option<Duration>, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let pass = outcome.is_ok() && in_time;
    let detail = match &outcome {
        Ok(s) | Err(s) => s.clone(),
    };
    let timing = match limit {
        Some(l) => format!("{elapsed:.2?} of {l:?}"),
        None => format!("{elapsed:.2?}"),
    };
    println!("criterion {id}: {} ({detail}; {timing})", if pass { "PASS" } else { "FAIL" });
    pass
}

fn formula_reproduction() -> Check {
    let v = theorem_verdict(&params(2, 4, 2, 1));
    ensure(v.formula_value == BigUint::from(35u32 - (4 + 2 + 2)), format!("q=2 gives {}", v.formula_value))?;
    ensure(v.formula_value == BigUint::from(27u32), "q=2 is not 27")?;
    let v = theorem_verdict(&params(3, 4, 2, 1));
    ensure(v.formula_value == BigUint::from(130u32 - (9 + 3 + 2)), format!("q=3 gives {}", v.formula_value))?;
    ensure(v.formula_value == BigUint::from(116u32), "q=3 is not 116")?;
    Ok("27 and 116".into())
}

fn constructive_upper_bound() -> Check {
    let mut widths = Vec::new();
    for (p, expected) in [(params(2, 4, 2, 1), 27), (params(2, 5, 2, 1), 155 - 15 - 1)] {
        let g = build_kneser_graph(&p).map_err(|e| e.to_string())?;
        let a = star_independent_vertices(&g, &p).map_err(|e| e.to_string())?;
        let td = star_decomposition(&g, &a).map_err(|e| e.to_string())?;
        let report = validate_td(&g, &td);
        ensure(report.valid, format!("{p}: invalid decomposition"))?;
        ensure(report.width == Some(expected), format!("{p}: width {:?}, expected {expected}", report.width))?;
        widths.push(expected);
    }
    Ok(format!("widths {widths:?}, both valid"))
}

fn independence_numbers() -> Check {
    let mut got = Vec::new();
    for (p, expected) in [(params(2, 4, 2, 1), 7u32), (params(2, 5, 2, 1), 15), (params(3, 4, 2, 1), 13), (params(2, 5, 3, 2), 15)] {
        let g = build_kneser_graph(&p).map_err(|e| e.to_string())?;
        let r = mis_exact(&g, SolveBudget::MIS).map_err(|e| e.to_string())?;
        ensure(g.is_independent(&r.witness), format!("{p}: witness not independent"))?;
        ensure(BigUint::from(r.size) == alpha_value(&p), format!("{p}: exact {} vs formula {}", r.size, alpha_value(&p)))?;
        ensure(r.size == expected as usize, format!("{p}: {} != {expected}", r.size))?;
        got.push(r.size);
    }
    Ok(format!("alpha = {got:?}"))
}

fn model_isomorphisms() -> Check {
    for q in [2, 3] {
        let r = verify_klein_isomorphism(q).map_err(|e| e.to_string())?;
        ensure(r.pass, format!("Klein map fails at q={q}: {r:?}"))?;
    }
    let d = duality_isomorphism(&params(2, 5, 3, 2)).map_err(|e| e.to_string())?;
    ensure(d.pass && d.dual == params(2, 5, 2, 1), format!("duality fails: {d:?}"))?;
    Ok(format!("Klein q=2,3; duality over {} pairs", d.pairs_checked))
}

fn grid_lemma() -> Check {
    let mut maxima = Vec::new();
    for q in [2, 3, 4] {
        let r = grid_lemma_search(q).map_err(|e| e.to_string())?;
        ensure(r.maximum == 2 * q as usize + 2, format!("q={q}: maximum {}", r.maximum))?;
        ensure(r.classification_holds, format!("q={q}: extremal sets are not exactly two parallel lines"))?;
        maxima.push(r.maximum);
    }
    Ok(format!("maxima {maxima:?}, extremal sets classified"))
}

fn lemma_suites() -> Check {
    let gauss = gauss_bounds_cases(&GAUSS_QS, 8).map_err(|e| e.to_string())?;
    let bridge: Vec<_> = prime_powers_upto(64).into_iter().map(|q| bridge_inequality_check(q).map(|r| r.case())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let parabola = parabola_cases(&[2, 3, 4, 5, 7]).map_err(|e| e.to_string())?;
    ensure(parabola.len() == 200, format!("parabola grid has {} cases", parabola.len()))?;
    let pairs = pair_count_cases(2, 5, 3).map_err(|e| e.to_string())?;
    for (name, cases) in [("gauss-bounds", &gauss), ("bridge", &bridge), ("parabola", &parabola), ("pair-count", &pairs)] {
        if let Some(c) = cases.iter().find(|c| !c.pass) {
            return Err(format!("{name} fails at {}: {} vs {}", c.params, c.lhs, c.rhs));
        }
    }
    Ok(format!("{} gauss, {} bridge, {} parabola, {} pair-count cases", gauss.len(), bridge.len(), parabola.len(), pairs.len()))
}

fn random_tree(rng: &mut StdRng, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges)
}

fn oracle_soundness() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(n, &edges);
        let tw = treewidth_exact(&g, SolveBudget::TREEWIDTH).map_err(|e| e.to_string())?.treewidth;
        ensure(tw == brute_treewidth(n, &edges), format!("random graph {i} (n={n}): {tw} vs brute force"))?;
    }
    for n in 2..=12 {
        let t = random_tree(&mut rng, n);
        let tw = treewidth_exact(&t, SolveBudget::TREEWIDTH).map_err(|e| e.to_string())?.treewidth;
        ensure(tw == 1, format!("tree on {n} vertices: {tw}"))?;
    }
    for n in 1..=10 {
        let tw = treewidth_exact(&Graph::complete(n), SolveBudget::TREEWIDTH).map_err(|e| e.to_string())?.treewidth;
        ensure(tw == n - 1, format!("K_{n}: {tw}"))?;
    }
    let tw = treewidth_exact(&Graph::petersen(), SolveBudget::TREEWIDTH).map_err(|e| e.to_string())?.treewidth;
    ensure(tw == 4, format!("Petersen: {tw}"))?;
    Ok("200 random graphs, trees, cliques, Petersen".into())
}

fn lower_bound_ingredients(earlier: bool) -> Check {
    ensure(earlier, "criteria 1-7 did not all pass")?;
    for q in [2, 3] {
        let c = perp_section_census(q).map_err(|e| e.to_string())?;
        ensure(c.grid_sections.holds() && c.two_line_planes.holds(), format!("q={q}: grid or two-line sections fail"))?;
        if q == 2 {
            ensure(c.conic_sections.holds() && c.induced_graphs.holds(), "q=2: conic sections or induced graphs fail")?;
        }
    }
    let tuples = bounded_main_range_tuples(1_000_000);
    for p in &tuples {
        let r = counting_inequality_check(p).map_err(|e| e.to_string())?;
        ensure(r.pass, format!("counting inequality fails at {p}"))?;
    }
    let listed: Vec<String> = tuples.iter().map(ToString::to_string).collect();
    ensure(
        tuples.len() >= 50,
        format!(
            "census claims hold; counting holds on all {} in-range tuples with [n,k]_q <= 10^6 ({}), but 50 are required",
            tuples.len(),
            listed.join(", ")
        ),
    )?;
    Ok(format!("census claims hold; counting holds on {} tuples", tuples.len()))
}

fn format_fidelity() -> Check {
    // each graph carries the independent set its star decomposition is built from
    let mut corpus: Vec<(String, Graph, Vec<usize>)> = Vec::new();
    for p in [params(2, 4, 2, 1), params(2, 5, 2, 1), params(3, 4, 2, 1), params(2, 5, 3, 2), params(2, 6, 3, 2)] {
        let g = build_kneser_graph(&p).map_err(|e| e.to_string())?;
        let a = star_independent_vertices(&g, &p).map_err(|e| e.to_string())?;
        corpus.push((p.to_string(), g, a));
    }
    let mut others = vec![("Petersen".to_string(), Graph::petersen())];
    for q in [2, 3] {
        others.push((format!("Q+(5,{q})"), build_quadric_graph(q).map_err(|e| e.to_string())?));
    }
    for (name, g) in others {
        let a = mis_exact(&g, SolveBudget::MIS).map_err(|e| e.to_string())?.witness;
        corpus.push((name, g, a));
    }
    for (name, g, a) in &corpus {
        let gr = write_gr(g);
        let back = read_gr(&gr).map_err(|e| format!("{name}: {e}"))?;
        ensure(write_gr(&back) == gr, format!("{name}: .gr round trip differs"))?;
        let td = star_decomposition(g, a).map_err(|e| e.to_string())?;
        let text = write_td(&td, g.vertex_count());
        let (back, n) = read_td(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(write_td(&back, n) == text, format!("{name}: .td round trip differs"))?;
    }
    let p = params(2, 4, 2, 1);
    let g = build_kneser_graph(&p).map_err(|e| e.to_string())?;
    let td = star_decomposition(&g, &star_independent_vertices(&g, &p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let header = write_td(&td, 35).lines().next().unwrap_or_default().to_string();
    ensure(header == "s td 8 28 35", format!("header is '{header}'"))?;
    Ok(format!("{} graphs round-trip; header '{header}'", corpus.len()))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut results = vec![
        run(1, Some(secs(1)), formula_reproduction),
        run(2, Some(secs(5)), constructive_upper_bound),
        run(3, Some(secs(60)), independence_numbers),
        run(4, Some(secs(60)), model_isomorphisms),
        run(5, Some(secs(120)), grid_lemma),
        run(6, Some(secs(300)), lemma_suites),
        run(7, Some(secs(120)), oracle_soundness),
    ];
    let earlier = results.iter().all(|&r| r);
    results.push(run(8, None, || lower_bound_ingredients(earlier)));
    results.push(run(9, Some(secs(10)), format_fidelity));
    let failed = results.iter().filter(|&&r| !r).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
