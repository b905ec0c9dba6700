use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sdh_cli::commands::ActionData;
use sdh_cli::datasets::{self, Kind, DATASETS};
use sdh_core::algebra::{
    core_poly, exp_of_count_series, series_of_rational, IntMatrix, IntPolynomial,
};
use sdh_core::dimension::{
    compare_even_odd, signed_dimension_group, verify_shift_equivalence, Parity,
    ShiftEquivalenceCertificate,
};
use sdh_core::dynamics::{
    signed_count, signed_counts, toral_fixed_point_count, DEFAULT_ORBIT_BUDGET,
};
use sdh_core::graph::{higher_block, transfer_on_paths, SignedGraph};
use sdh_core::putnam::{diagonal_pair, homology, lefschetz_table, GradedHomology};
use sdh_core::zeta::{check_corollary, zeta_from_actions, zeta_hom_manifold, zeta_sft};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn graph(name: &str) -> SignedGraph {
    SignedGraph::from_json(datasets::get(name).expect("bundled").text).expect("valid graph")
}

fn all_graphs() -> Vec<(String, SignedGraph)> {
    DATASETS
        .iter()
        .filter(|d| d.kind == Kind::Graph)
        .map(|d| (d.name.to_string(), graph(d.name)))
        .collect()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn random_graph(rng: &mut StdRng) -> SignedGraph {
    let names = ["a", "b", "c"];
    let ids: Vec<String> = (0..6).map(|i| format!("e{i}")).collect();
    loop {
        let count = rng.gen_range(3..=5);
        let edges: Vec<(&str, &str, &str, i64)> = (0..count)
            .map(|i| {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                (
                    ids[i].as_str(),
                    names[rng.gen_range(0..3)],
                    names[rng.gen_range(0..3)],
                    sign,
                )
            })
            .collect();
        let g = SignedGraph::build(&names, &edges).expect("well formed");
        if signed_dimension_group(&g, 0)
            .map(|d| d.dimension > 0)
            .unwrap_or(false)
        {
            return g;
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = graph("signed2shift");
    let d = signed_dimension_group(&g, 0).map_err(err)?;
    ensure(d.dimension == 0, format!("dimension {}", d.dimension))?;
    ensure(zeta_sft(&g).is_one(), "zeta is not 1")?;
    ensure(
        homology(&diagonal_pair(&g)).map_err(err)?.is_zero(),
        "homology does not vanish",
    )?;
    for n in 1..=12 {
        let c = signed_count(&g, n).map_err(err)?;
        ensure(c == BigInt::from(0), format!("N_{n} = {c}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "dimension 0, zeta 1, H = 0, N_1..N_12 = 0 in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let seed = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_nanos() as u64);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut cases: Vec<(String, SignedGraph)> = ["signed2shift", "full2shift", "fib"]
        .iter()
        .map(|n| (n.to_string(), graph(n)))
        .collect();
    cases.push((format!("random(seed {seed})"), random_graph(&mut rng)));
    for (name, g) in &cases {
        let rows = lefschetz_table(&diagonal_pair(g), 8, DEFAULT_ORBIT_BUDGET)
            .map_err(|e| format!("{name}: {e}"))?;
        for r in rows {
            let direct = signed_count(g, r.n).map_err(err)?;
            ensure(
                r.equal && r.rhs == direct,
                format!(
                    "{name} n={}: trace sum {}, signed count {}, direct {}",
                    r.n, r.lhs, r.rhs, direct
                ),
            )?;
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "4 graphs, n = 1..8, random seed {seed}, in {:.2?}",
        start.elapsed()
    ))
}

fn monic(p: &IntPolynomial) -> IntPolynomial {
    match p.coeffs().last() {
        Some(c) if *c < BigInt::from(0) => p.scale(&BigInt::from(-1)),
        _ => p.clone(),
    }
}

fn criterion_3() -> Outcome {
    for (name, g) in all_graphs() {
        let h = homology(&diagonal_pair(&g)).map_err(err)?;
        let d = signed_dimension_group(&g, 0).map_err(err)?;
        ensure(
            h.degrees.keys().all(|&n| n == 0),
            format!("{name}: degrees {:?}", h.degrees.keys().collect::<Vec<_>>()),
        )?;
        let core = match h.degrees.get(&0) {
            Some(d0) => monic(&d0.core_poly().map_err(err)?),
            None => IntPolynomial::from_i64(&[1]),
        };
        ensure(
            core == monic(&d.core_poly),
            format!("{name}: {core:?} vs {:?}", d.core_poly),
        )?;
    }
    Ok("every bundled graph: degree 0 only, matching core polynomial".into())
}

fn criterion_4() -> Outcome {
    for (name, g) in all_graphs() {
        let counts = signed_counts(&g, 10, DEFAULT_ORBIT_BUDGET).map_err(err)?;
        let lhs = exp_of_count_series(&counts, 10);
        let rhs = series_of_rational(&zeta_sft(&g), 10).map_err(err)?;
        ensure(lhs == rhs, format!("{name}: series differ"))?;
    }
    Ok("every bundled graph to order 10".into())
}

fn criterion_5() -> Outcome {
    let data: ActionData =
        serde_json::from_str(datasets::get("torus").expect("bundled").text).map_err(err)?;
    let cmp = compare_even_odd(Parity::Odd, &data.homology, &data.manifold).map_err(err)?;
    ensure(cmp.equal, format!("{:?} vs {:?}", cmp.left, cmp.right))?;
    // (t^2 - t - 1)(t - 1)(t + 1) = t^4 - t^3 - 2t^2 + t + 1
    let want: Vec<String> = [1, 1, -2, -1, 1].iter().map(ToString::to_string).collect();
    ensure(cmp.left == want, format!("core polynomial {:?}", cmp.left))?;
    let hom = zeta_hom_manifold(&data.manifold).map_err(err)?;
    let signed = zeta_from_actions(&data.homology).map_err(err)?;
    ensure(
        check_corollary(Parity::Odd, &hom, &signed),
        format!("{hom} times {signed} is not 1"),
    )?;
    Ok(format!("core polynomials equal, zeta_hom = {hom}"))
}

fn criterion_6() -> Outcome {
    let a = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
    for n in 1..=10u32 {
        let count = toral_fixed_point_count(&a, n as usize).map_err(err)?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let want = a.pow(n).map_err(err)?.trace().map_err(err)? - 1 - sign;
        ensure(count == want, format!("n={n}: {count} vs {want}"))?;
    }
    Ok("n = 1..10".into())
}

fn summary(h: &GradedHomology) -> Result<BTreeMap<i64, (usize, IntPolynomial)>, String> {
    h.degrees
        .iter()
        .map(|(&n, d)| Ok((n, (d.dimension, monic(&d.core_poly().map_err(err)?)))))
        .collect()
}

fn criterion_7() -> Outcome {
    for name in ["signed2shift", "fib"] {
        let g = graph(name);
        let base = summary(&homology(&diagonal_pair(&g)).map_err(err)?)?;
        let g2 = higher_block(&g, 2).map_err(err)?;
        let other = summary(&homology(&diagonal_pair(&g2)).map_err(err)?)?;
        ensure(base == other, format!("{name}: {base:?} vs {other:?}"))?;
    }
    Ok("signed2shift and fib agree with their 2-block presentations".into())
}

fn criterion_8() -> Outcome {
    for (name, g) in all_graphs() {
        let base = core_poly(&transfer_on_paths(&g, 0)).map_err(err)?;
        for m in 1..=3 {
            let p = core_poly(&transfer_on_paths(&g, m)).map_err(err)?;
            ensure(p == base, format!("{name}: m={m} differs"))?;
        }
    }
    Ok("m = 0..3 on every bundled graph".into())
}

fn certificate(name: &str) -> ShiftEquivalenceCertificate {
    serde_json::from_str(datasets::get(name).expect("bundled").text).expect("valid certificate")
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut rejected = 0;
    for name in ["identity_cert", "two_cert"] {
        let cert = certificate(name);
        ensure(
            verify_shift_equivalence(&cert).map_err(err)?,
            format!("{name} rejected"),
        )?;
        for _ in 0..20 {
            let mut bad = cert.clone();
            let target = if rng.gen_bool(0.5) {
                &mut bad.r
            } else {
                &mut bad.s
            };
            let (i, j) = (
                rng.gen_range(0..target.rows()),
                rng.gen_range(0..target.cols()),
            );
            let delta = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            target[(i, j)] += BigInt::from(delta);
            ensure(
                !verify_shift_equivalence(&bad).map_err(err)?,
                format!("{name}: perturbation accepted"),
            )?;
            rejected += 1;
        }
    }
    Ok(format!("both accepted, {rejected} perturbations rejected"))
}

fn criterion_10() -> Outcome {
    let mut checked = 0;
    for d in DATASETS
        .iter()
        .filter(|d| d.kind == Kind::Pair && d.name != "fib_non_covering")
    {
        let p = sdh_core::putnam::SuPairPresentation::from_json(d.text).map_err(err)?;
        let h = homology(&p).map_err(err)?;
        let lo = -(p.m_max as i64);
        let hi = p.l_max as i64;
        ensure(
            h.degrees.keys().all(|&n| (lo..=hi).contains(&n)),
            format!(
                "{}: degrees {:?} outside [{lo}, {hi}]",
                d.name,
                h.degrees.keys().collect::<Vec<_>>()
            ),
        )?;
        ensure(
            h.degrees.values().all(|x| x.dimension > 0),
            format!("{}: empty degree reported", d.name),
        )?;
        checked += 1;
    }
    for (_, g) in all_graphs() {
        let p = diagonal_pair(&g);
        let h = homology(&p).map_err(err)?;
        ensure(
            h.degrees
                .keys()
                .all(|&n| (-(p.m_max as i64)..=p.l_max as i64).contains(&n)),
            "diagonal pair degree out of range",
        )?;
        checked += 1;
    }
    Ok(format!("{checked} presentations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("signed 2-shift", criterion_1),
        ("Lefschetz identity", criterion_2),
        ("SFT collapse", criterion_3),
        ("zeta rationality", criterion_4),
        ("torus spectra and corollary", criterion_5),
        ("toral fixed point counts", criterion_6),
        ("presentation independence", criterion_7),
        ("block-level invariance", criterion_8),
        ("shift equivalence verifier", criterion_9),
        ("finite rank", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
