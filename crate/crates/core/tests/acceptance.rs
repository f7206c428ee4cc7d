//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! All checks use exact arithmetic, so every comparison has zero tolerance.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symrig::combinatorics::binomial;
use symrig::cycles::{decompose_into_circuits, is_circuit, is_cycle};
use symrig::fogelsanger::{
    fog_decompose, overlap_growth_check, valid_symmetric_edges, verify_fog_properties, verify_z2_fog_properties,
    z2_fog_decompose, Status,
};
use symrig::generators::{
    gen_bricard, gen_crosspolytope, gen_hexahedron_pair, gen_split_pair, gen_symmetric_stacked, gen_trivial_pair,
    simplex_boundary,
};
use symrig::lowerbound::{f_vector, g2, phi};
use symrig::rigidity::{
    is_gamma_rigid, is_generically_rigid, is_inf_rigid, sample_gamma_generic, symmetric_block_split,
    symmetric_maxwell_bound, Confidence, PointGroup,
};
use symrig::symmetric::{c_threshold, rigidity_conditions, SymmetricComplex};
use symrig::{Face, MultiComplex, VertexId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn group(t: usize, d: usize) -> PointGroup {
    PointGroup::new(t, d).expect("valid group")
}

fn octahedron_generic() -> Outcome {
    let g = gen_crosspolytope(2).map_err(err)?.graph();
    let r = is_generically_rigid(&g, 3, 3, 0).map_err(err)?;
    ensure!(r.rank == 12 && r.rigid, "rank {} rigid {}", r.rank, r.rigid);
    ensure!(r.trial_ranks == vec![12, 12, 12], "trial ranks {:?}", r.trial_ranks);
    Ok("rank 12 in 3/3 trials".into())
}

fn bricard_flexibility() -> Outcome {
    let b2 = gen_crosspolytope(2).map_err(err)?;
    let mut ranks = Vec::new();
    for seed in 0..10 {
        let gf = gen_bricard(seed).map_err(err)?;
        ranks.push(is_inf_rigid(gf.framework()).map_err(err)?.rank);
    }
    ensure!(ranks.iter().all(|&r| r <= 11), "ranks {ranks:?}");
    let r = is_gamma_rigid(&b2.graph(), b2.involution(), group(1, 3), 3, 0).map_err(err)?;
    let certified = Confidence::Certified { edges: 12, bound: 14, symmetric: true };
    ensure!(!r.rigid && r.confidence == certified, "verdict {}", r.verdict());
    Ok(format!("ranks {ranks:?}; {}", r.verdict()))
}

fn crosspolytope_rigidity() -> Outcome {
    let b2 = gen_crosspolytope(2).map_err(err)?;
    let b3 = gen_crosspolytope(3).map_err(err)?;
    let cases: Vec<(&SymmetricComplex, usize, usize)> =
        vec![(&b2, 0, 3), (&b2, 2, 3), (&b3, 0, 4), (&b3, 1, 4), (&b3, 2, 4), (&b3, 3, 4)];
    for (s, t, d) in cases {
        let r = is_gamma_rigid(&s.graph(), s.involution(), group(t, d), 3, 0).map_err(err)?;
        ensure!(r.rigid, "B_{} not rigid for t = {t}: {}", d - 1, r.verdict());
    }
    Ok("B2 for t in {0,2}, B3 for t in 0..=3".into())
}

fn maxwell_table() -> Outcome {
    for n in 6..=40 {
        let b: Vec<i64> = (0..3).map(|t| symmetric_maxwell_bound(group(t, 3), n).bound).collect();
        let n = n as i64;
        ensure!(b == vec![3 * n - 6, 3 * n - 4, 3 * n - 6], "n = {n}: {b:?}");
    }
    Ok("3n-6 / 3n-4 / 3n-6 for n = 6..40".into())
}

fn lower_bound_equality() -> Outcome {
    let b3 = gen_crosspolytope(3).map_err(err)?;
    let bound = binomial(4, 2) as i64 - 4;
    ensure!(g2(b3.complex()) == 2 && bound == 2, "g2(B3) = {}", g2(b3.complex()));
    for s in 0..=5 {
        for seed in [0, 1, 2] {
            let st = gen_symmetric_stacked(3, s, seed).map_err(err)?;
            ensure!(g2(st.complex()) == 2, "stacks {s} seed {seed}: g2 = {}", g2(st.complex()));
        }
    }
    Ok("g2 = 2 for B3 and 18 stacked spheres".into())
}

fn phi_consistency() -> Outcome {
    for k in [2, 3] {
        for s in 0..=5 {
            let st = gen_symmetric_stacked(k, s, s as u64).map_err(err)?;
            let counts = f_vector(st.complex()).counts;
            let n = 2 * k + 2 + 2 * s;
            for (j, &c) in counts.iter().enumerate() {
                let expected = phi(j, n, k).map_err(err)?;
                ensure!(c as i64 == expected, "k={k} s={s} j={j}: {c} vs {expected}");
            }
        }
    }
    Ok("k in {2,3}, s = 0..5, all j".into())
}

fn all_edges(s: &MultiComplex) -> Vec<(VertexId, VertexId)> {
    s.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]).collect()
}

fn fogelsanger_suites() -> Outcome {
    let mut plain = 0;
    let mut symmetric = 0;
    let mut overlap_checked = 0;
    let check_plain = |s: &MultiComplex, u: VertexId, v: VertexId| -> Result<(), String> {
        let d = fog_decompose(s, u, v, 0).map_err(err)?;
        let r = verify_fog_properties(&d);
        ensure!(r.all_passed(), "edge {u}{v}: {:?}", r.failures());
        Ok(())
    };
    let b2 = gen_crosspolytope(2).map_err(err)?;
    for (u, v) in all_edges(b2.complex()) {
        check_plain(b2.complex(), u, v)?;
        plain += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let b3 = gen_crosspolytope(3).map_err(err)?;
    let stacked = [gen_symmetric_stacked(2, 2, 1).map_err(err)?, gen_symmetric_stacked(3, 2, 2).map_err(err)?];
    for s in std::iter::once(&b3).chain(&stacked) {
        let edges = all_edges(s.complex());
        for &(u, v) in edges.choose_multiple(&mut rng, 5) {
            check_plain(s.complex(), u, v)?;
            plain += 1;
        }
    }

    let mut check_z2 = |s: &SymmetricComplex, x: VertexId, y: VertexId| -> Result<(), String> {
        let d = z2_fog_decompose(s, x, y, 0).map_err(err)?;
        let r = verify_z2_fog_properties(&d, s.involution());
        ensure!(r.all_passed(), "edge {x}{y}: {:?}", r.failures());
        let o = overlap_growth_check(&d, s.involution());
        ensure!(o.all_passed(), "overlap at {x}{y}: {:?}", o.failures());
        overlap_checked += o.checks.iter().filter(|c| c.status == Status::Pass).count();
        Ok(())
    };
    let hex = gen_hexahedron_pair();
    check_z2(&hex, VertexId(2), VertexId(3))?;
    symmetric += 1;
    for s in &stacked {
        let edges = valid_symmetric_edges(s);
        ensure!(edges.len() >= 5, "only {} valid symmetric edges", edges.len());
        for &(x, y) in edges.choose_multiple(&mut rng, 5) {
            check_z2(s, x, y)?;
            symmetric += 1;
        }
    }
    Ok(format!("(a)-(f) at {plain} edges, (a)-(g) at {symmetric} edges, overlap lemma applied {overlap_checked} times"))
}

fn tetrahedron_pair(a: [u32; 4], b: [u32; 4]) -> MultiComplex {
    simplex_boundary(&a).union(&simplex_boundary(&b)).expect("same dimension")
}

fn hexahedron_transcript() -> Outcome {
    let hex = gen_hexahedron_pair();
    let d = z2_fog_decompose(&hex, VertexId(2), VertexId(3), 0).map_err(err)?;
    let expected: BTreeSet<Vec<Face>> =
        [tetrahedron_pair([1, 2, 3, 4], [5, 6, 7, 8]), tetrahedron_pair([5, 2, 3, 4], [1, 6, 7, 8])]
            .iter()
            .map(|p| p.occurrences())
            .collect();
    let got: BTreeSet<Vec<Face>> = d.parts.iter().map(|p| p.occurrences()).collect();
    ensure!(d.parts.len() == 2 && got == expected, "parts {:?}", d.parts);
    Ok("two tetrahedron-pair parts".into())
}

fn threshold_law() -> Outcome {
    let mut cases = 0;
    for (k, t) in [(2, 0), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)] {
        let c = c_threshold(k, t).map_err(err)?;
        for h in (0..=2 * k).step_by(2) {
            for seed in [0, 1] {
                let s = gen_split_pair(k, h, seed).map_err(err)?;
                let r = is_gamma_rigid(&s.graph(), s.involution(), group(t, k + 1), 3, seed).map_err(err)?;
                let expected = h >= c;
                ensure!(r.rigid == expected, "k={k} t={t} h={h} seed={seed}: {} (threshold {c})", r.verdict());
                if matches!(r.confidence, Confidence::Certified { .. }) {
                    ensure!(!expected, "certificate issued for k={k} t={t} h={h}");
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} split pairs agree with h >= c(k,t)"))
}

fn conditions_agree() -> Outcome {
    let mut corpus: Vec<(String, SymmetricComplex)> = vec![
        ("B2".into(), gen_crosspolytope(2).map_err(err)?),
        ("B3".into(), gen_crosspolytope(3).map_err(err)?),
        ("hexahedron pair".into(), gen_hexahedron_pair()),
        ("trivial k=2".into(), gen_trivial_pair(2).map_err(err)?),
        ("trivial k=3".into(), gen_trivial_pair(3).map_err(err)?),
    ];
    for (k, s, seed) in [(2, 1, 0), (2, 3, 1), (3, 1, 0), (3, 2, 4)] {
        corpus.push((format!("stacked k={k} s={s}"), gen_symmetric_stacked(k, s, seed).map_err(err)?));
    }
    for k in [2, 3] {
        for h in (0..=2 * k).step_by(2) {
            for seed in 0..3 {
                let s = gen_split_pair(k, h, seed).map_err(err)?;
                if s.complex().vertices().len() <= 20 {
                    corpus.push((format!("split k={k} h={h} seed={seed}"), s));
                }
            }
        }
    }
    let mut checked = 0;
    let mut rigidity_checked = 0;
    for (name, s) in &corpus {
        let k = s.dim();
        for t in 0..=k {
            let r = rigidity_conditions(s, t).map_err(err)?;
            ensure!(r.agree, "{name}, t={t}: (ii) {} vs (iii) {}", r.cond_ii, r.cond_iii);
            checked += 1;
            if r.hypotheses_hold && s.complex().vertices().len() <= 12 {
                let rig = is_gamma_rigid(&s.graph(), s.involution(), group(t, k + 1), 3, 0).map_err(err)?;
                ensure!(rig.rigid == r.cond_ii, "{name}, t={t}: rigidity {} vs (ii) {}", rig.verdict(), r.cond_ii);
                rigidity_checked += 1;
            }
        }
    }
    Ok(format!("{checked} (instance, t) pairs agree; rigidity matches on {rigidity_checked}"))
}

fn block_law() -> Outcome {
    let mut corpus: Vec<SymmetricComplex> = vec![
        gen_crosspolytope(2).map_err(err)?,
        gen_crosspolytope(3).map_err(err)?,
        gen_hexahedron_pair(),
        gen_symmetric_stacked(2, 2, 3).map_err(err)?,
        gen_symmetric_stacked(3, 1, 5).map_err(err)?,
    ];
    for (k, h) in [(2, 2), (2, 4), (3, 4), (3, 6)] {
        corpus.push(gen_split_pair(k, h, 0).map_err(err)?);
    }
    let mut count = 0;
    for s in &corpus {
        let d = s.dim() + 1;
        for t in 0..d {
            for seed in [0, 1] {
                let gf = sample_gamma_generic(&s.graph(), s.involution(), group(t, d), seed).map_err(err)?;
                let b = symmetric_block_split(&gf).map_err(err)?;
                ensure!(b.consistent, "{b:?}");
                count += 1;
            }
        }
    }
    for seed in 0..10 {
        let b = symmetric_block_split(&gen_bricard(seed).map_err(err)?).map_err(err)?;
        ensure!(b.consistent, "Bricard seed {seed}: {b:?}");
        count += 1;
    }
    Ok(format!("{count} frameworks"))
}

fn random_simple_complex(rng: &mut ChaCha8Rng, k: usize) -> MultiComplex {
    let n = rng.random_range(k + 2..=8) as u32;
    let all = Face::of(&(1..=n).collect::<Vec<_>>()).subsets(k + 1);
    let facets: Vec<Face> = all.into_iter().filter(|_| rng.random_bool(0.4)).collect();
    MultiComplex::from_facets(k, facets).expect("arity")
}

/// Sum of boundaries of random (k+1)-simplices: always a cycle.
fn random_cycle(rng: &mut ChaCha8Rng, k: usize) -> MultiComplex {
    let n = rng.random_range(k + 3..=9) as u32;
    let mut vs: Vec<u32> = (1..=n).collect();
    let mut s = MultiComplex::empty(k);
    for _ in 0..rng.random_range(1..=4) {
        vs.shuffle(rng);
        s = s.union(&simplex_boundary(&vs[..k + 2])).expect("same dimension");
    }
    s
}

fn chain_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..150 {
        let k = 1 + i % 3;
        let s = random_simple_complex(&mut rng, k);
        let t = random_simple_complex(&mut rng, k);
        ensure!(s.boundary().boundary().is_empty(), "∂∂ ≠ ∅ on {s}");
        let lhs = s.symmetric_difference(&t).map_err(err)?.boundary();
        let rhs = s.boundary().symmetric_difference(&t.boundary()).map_err(err)?;
        ensure!(lhs == rhs, "∂(S△T) ≠ ∂S△∂T for {s} and {t}");
    }
    let mut contractions = 0;
    for i in 0..150 {
        let k = 1 + i % 3;
        let s = random_cycle(&mut rng, k);
        ensure!(is_cycle(&s), "generator produced a non-cycle");
        for seed in [0, 9] {
            let d = decompose_into_circuits(&s, seed).map_err(err)?;
            ensure!(d.reassemble(k) == s, "decomposition of {s} does not reassemble");
            ensure!(d.parts.iter().all(is_circuit), "non-circuit part in decomposition of {s}");
        }
        let edges: Vec<_> = s.edges().into_iter().collect();
        if let Some(&(u, v)) = edges.choose(&mut rng) {
            ensure!(is_cycle(&s.contract(u, v).map_err(err)?), "contracting {u}{v} of {s} breaks the cycle");
            contractions += 1;
        }
    }
    Ok(format!("150 random complexes, 150 random cycles, {contractions} contractions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("octahedron generic rank", octahedron_generic),
        ("half-turn octahedron flexibility", bricard_flexibility),
        ("crosspolytope symmetric rigidity", crosspolytope_rigidity),
        ("symmetric Maxwell table", maxwell_table),
        ("lower bound equality", lower_bound_equality),
        ("stacked face counts", phi_consistency),
        ("Fogelsanger property suites", fogelsanger_suites),
        ("hexahedron pair transcript", hexahedron_transcript),
        ("split pair threshold law", threshold_law),
        ("separator and split conditions agree", conditions_agree),
        ("symmetric block law", block_law),
        ("chain laws", chain_laws),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
