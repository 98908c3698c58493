//! Acceptance suite: one PASS/FAIL line per criterion. Criteria 1–7 gate
//! the exit status; criterion 8 is a stretch goal and only reports.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{dense_rank, patterns, random_low_rank, random_sparse, signs};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use sqck::ckalgebra::all_index_subsets;
use sqck::cohomology::{unitary_h2_formula, unitary_type_decomposition};
use sqck::exactnum::{int, ratio};
use sqck::linalg::{rank, rank_of_vectors};
use sqck::realization::{antihermiticity_check, realization_consistency, realize_generator, realized_derived_dimension};
use sqck::*;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome, bool);

fn sign_patterns(ns: std::ops::RangeInclusive<usize>) -> Vec<OmegaPattern> {
    ns.flat_map(|n| patterns(&signs(), n)).map(|v| OmegaPattern::new(v).unwrap()).collect()
}

fn first_failure<T: Sync>(items: Vec<T>, check: impl Fn(&T) -> Option<String> + Sync + Send) -> Option<String> {
    items.par_iter().filter_map(check).collect::<Vec<_>>().into_iter().next()
}

fn quaternionic_h2_vanishes() -> Outcome {
    let ps = sign_patterns(1..=3);
    let count = ps.len();
    match first_failure(ps, |p| {
        let h = h2(&build_sq(p)).map_err(|e| e.to_string());
        match h {
            Ok(r) if r.dim_h2 == 0 => None,
            Ok(r) => Some(format!("omega = ({p}): dim H2 = {}", r.dim_h2)),
            Err(e) => Some(format!("omega = ({p}): {e}")),
        }
    }) {
        None => Ok(format!("{count} patterns, N = 1..3, all dim H2 = 0")),
        Some(f) => Err(f),
    }
}

fn unitary_dimension_formula() -> Outcome {
    let ps = sign_patterns(1..=3);
    let cases: Vec<(OmegaPattern, usize)> = ps.iter().flat_map(|p| (1..=3).map(move |a| (p.clone(), a))).collect();
    let count = cases.len();
    match first_failure(cases, |(p, alpha)| {
        let expected = unitary_h2_formula(p.zero_positions().len());
        match h2(&build_family(p, Family::Unitary(*alpha)).unwrap()) {
            Ok(r) if r.dim_h2 == expected => None,
            Ok(r) => Some(format!("u{alpha}, omega = ({p}): dim H2 = {}, expected {expected}", r.dim_h2)),
            Err(e) => Some(format!("u{alpha}, omega = ({p}): {e}")),
        }
    }) {
        None => Ok(format!("{count} (pattern, alpha) cases match n(n+3)/2")),
        Some(f) => Err(f),
    }
}

fn type_decomposition() -> Outcome {
    let ps = sign_patterns(1..=3);
    let cases: Vec<(OmegaPattern, usize)> = ps.iter().flat_map(|p| (1..=3).map(move |a| (p.clone(), a))).collect();
    let count = cases.len();
    match first_failure(cases, |(p, alpha)| match unitary_type_decomposition(p, *alpha) {
        Ok(d) if d.exhausts() => None,
        Ok(d) => Some(format!("u{alpha}, omega = ({p}): {d:?}")),
        Err(e) => Some(format!("u{alpha}, omega = ({p}): {e}")),
    }) {
        None => Ok(format!("{count} cases: n type II + n(n+1)/2 type III classes span H2")),
        Some(f) => Err(f),
    }
}

fn realization_homomorphism() -> Outcome {
    let values = vec![int(-1), int(0), int(1), int(2), ratio(1, 2)];
    let ps: Vec<OmegaPattern> = (1..=3).flat_map(|n| patterns(&values, n)).map(|v| OmegaPattern::new(v).unwrap()).collect();
    let count = ps.len();
    match first_failure(ps, |p| {
        let violations = realization_consistency(p);
        if let Some(v) = violations.first() {
            return Some(format!("omega = ({p}): {} violations, first {v:?}", violations.len()));
        }
        for g in build_sq(p).basis() {
            let x = realize_generator(p, g).ok()?;
            if !antihermiticity_check(p, &x) {
                return Some(format!("omega = ({p}): {g} is not antihermitian"));
            }
        }
        None
    }) {
        None => Ok(format!("{count} patterns over {{-1,0,1,2,1/2}}^N, N = 1..3")),
        Some(f) => Err(f),
    }
}

fn structural_checks() -> Outcome {
    let ps = sign_patterns(1..=3);
    let count = ps.len();
    let mut zero_positions = 0;
    for p in &ps {
        zero_positions += p.zero_positions().len();
    }
    match first_failure(ps, |p| {
        let g = build_sq(p);
        let mut tables = vec![g.clone(), build_family(p, Family::Orthogonal).unwrap()];
        tables.extend((1..=3).map(|a| build_family(p, Family::Unitary(a)).unwrap()));
        for t in &tables {
            if let Some(v) = verify_jacobi(t).first() {
                return Some(format!("{}, omega = ({p}): Jacobi fails at {:?}", t.label().family, v.triple));
            }
        }
        for s in all_index_subsets(p.n()) {
            if let Err(e) = grading_automorphism(&g, &s) {
                return Some(format!("omega = ({p}): grading {s:?}: {e}"));
            }
        }
        if let Err(e) = reversal_isomorphism(p) {
            return Some(format!("omega = ({p}): reversal: {e}"));
        }
        for a in p.zero_positions() {
            match semidirect_analysis(p, a) {
                Ok(r) if r.holds() => {}
                Ok(r) => return Some(format!("omega = ({p}), a = {a}: {r:?}")),
                Err(e) => return Some(format!("omega = ({p}), a = {a}: {e}")),
            }
        }
        None
    }) {
        None => Ok(format!("{count} patterns: Jacobi, gradings, reversal; {zero_positions} semidirect splittings")),
        Some(f) => Err(f),
    }
}

fn coboundary_dimension() -> Outcome {
    let ps = sign_patterns(1..=3);
    let count = ps.len();
    match first_failure(ps, |p| {
        let g = build_sq(p);
        let b2 = rank_of_vectors(&coboundary_space(&g));
        let derived = derived_dimension(&g);
        let realized = realized_derived_dimension(p);
        if b2 != derived || b2 != realized {
            return Some(format!("omega = ({p}): dim B2 = {b2}, bracket span {derived}, matrix span {realized}"));
        }
        let n = p.n();
        if p.zero_positions().is_empty() && b2 != (n + 1) * (2 * n + 3) {
            return Some(format!("omega = ({p}): perfect algebra has dim B2 = {b2}"));
        }
        for alpha in 1..=3 {
            let u = build_family(p, Family::Unitary(alpha)).unwrap();
            if rank_of_vectors(&coboundary_space(&u)) != derived_dimension(&u) {
                return Some(format!("u{alpha}, omega = ({p}): dim B2 differs from dim [g,g]"));
            }
        }
        None
    }) {
        None => Ok(format!("{count} sq patterns and their unitary subalgebras")),
        Some(f) => Err(f),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let trials = 25;
    for trial in 0..trials {
        let rows = rng.gen_range(5..=50);
        let cols = rng.gen_range(5..=50);
        let m = if trial % 2 == 0 {
            random_sparse(&mut rng, rows, cols, 0.1)
        } else {
            let k = rng.gen_range(0..=rows.min(cols));
            random_low_rank(&mut rng, rows, cols, k)
        };
        let (fast, naive) = (rank(&m), dense_rank(&m.to_dense()));
        if fast != naive {
            return Err(format!("trial {trial} ({rows}x{cols}): rank {fast}, oracle {naive}"));
        }
    }
    Ok(format!("{trials} random matrices up to 50x50"))
}

fn stretch_n4() -> Outcome {
    let p = OmegaPattern::from_ints(&[1, 0, -1, 0]).unwrap();
    let start = Instant::now();
    let r = h2(&build_sq(&p)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if r.dim_h2 == 0 && elapsed.as_secs() < 30 * 60 {
        Ok(format!("omega = ({p}), dim 55, dim Z2 = {}, dim H2 = 0 in {elapsed:.2?}", r.dim_z2))
    } else {
        Err(format!("omega = ({p}): dim H2 = {} in {elapsed:.2?}", r.dim_h2))
    }
}

/// Non-sign rational parameters: recorded, not asserted.
fn rational_samples() -> String {
    let samples = ["2", "1/2", "-3", "2,1/2", "0,-1/3", "5,0", "1/2,-2,0"];
    samples
        .par_iter()
        .map(|s| {
            let p = OmegaPattern::parse(s).unwrap();
            format!("({s}) -> {}", h2(&build_sq(&p)).unwrap().dim_h2)
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "quaternionic H2 vanishes for all sign patterns, N <= 3", quaternionic_h2_vanishes, true),
        (2, "unitary dim H2 = n(n+3)/2 for each alpha", unitary_dimension_formula, true),
        (3, "type II / type III decomposition exhausts H2", type_decomposition, true),
        (4, "matrix realization is a homomorphism", realization_homomorphism, true),
        (5, "structural checks", structural_checks, true),
        (6, "dim B2 = dim [g,g]", coboundary_dimension, true),
        (7, "elimination rank matches dense oracle", oracle_equivalence, true),
        (8, "stretch: one N = 4 pattern", stretch_n4, false),
    ];
    let mut failed = false;
    for (id, name, run, gating) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let tag = if gating { "" } else { " (not gating)" };
        match outcome {
            Ok(detail) => println!("criterion {id}{tag}: PASS  {name}  [{detail}; {elapsed:.2?}]"),
            Err(detail) => {
                println!("criterion {id}{tag}: FAIL  {name}  [{detail}; {elapsed:.2?}]");
                failed |= gating;
            }
        }
    }
    println!("info: quaternionic dim H2 at non-sign rational omega (recorded only): {}", rational_samples());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
