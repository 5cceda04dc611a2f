//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use alexs1::census::for_each_even_multiset;
use alexs1::equivalence::Move;
use alexs1::homology::{
    chain_complex, connected_sum, homology, realize_suspension_sum, reduced_homology, rp2_minimal, s2_times_s1, s3,
    singular_vertex_count, smith_normal_form, suspend, AbelianGroupDecomp, IntegerMatrix, SimplicialComplex,
};
use alexs1::{
    asphericity_obstructed, compare_counts, decompose, valid_tuples, validate, BaseSurface, ComplexityBound,
    InvariantTuple, MoveSet, SeifertPair,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bounded_family() -> ComplexityBound {
    ComplexityBound {
        max_genus: 1,
        max_f: 1,
        max_t: 1,
        max_s: 1,
        max_alpha: 5,
        max_pairs: 2,
        max_b_abs: 3,
        max_r: 2,
    }
}

fn tuple(s: &str) -> InvariantTuple {
    s.parse().unwrap()
}

// Agreement of canonical-form equivalence with the depth-8 move closure over
// every ordered pair of the family.
fn agreement(family: &[InvariantTuple], moves: &MoveSet) -> Result<(usize, Vec<usize>), String> {
    let index: BTreeMap<&InvariantTuple, usize> = family.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut class_ids: BTreeMap<_, usize> = BTreeMap::new();
    let ids: Vec<usize> = family
        .iter()
        .map(|t| {
            let next = class_ids.len();
            *class_ids.entry(moves.canonical_form(t)).or_insert(next)
        })
        .collect();
    let mut in_closure = vec![false; family.len()];
    let mut pairs = 0usize;
    for (i, a) in family.iter().enumerate() {
        let closure = moves.closure(a, 8);
        let members: Vec<usize> = closure.iter().filter_map(|t| index.get(t).copied()).collect();
        for &m in &members {
            in_closure[m] = true;
        }
        for j in 0..family.len() {
            pairs += 1;
            if (ids[i] == ids[j]) != in_closure[j] {
                return Err(format!(
                    "{} vs {}: canonical says {}, oracle says {}",
                    a,
                    family[j],
                    ids[i] == ids[j],
                    in_closure[j]
                ));
            }
        }
        for &m in &members {
            in_closure[m] = false;
        }
    }
    Ok((pairs, ids))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let family = valid_tuples(&bounded_family()).map_err(|e| e.to_string())?;
    let lenient = MoveSet::default();
    let strict = MoveSet {
        reflect_closed_nonorientable: false,
        ..MoveSet::default()
    };
    let (pairs, lenient_ids) = agreement(&family, &lenient)?;
    let (_, strict_ids) = agreement(&family, &strict)?;
    let oriented = agreement(&family, &MoveSet::oriented())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;

    // Tuples whose class differs between the two β-reflection gates.
    let mut discrepancy = 0;
    for i in 0..family.len() {
        for j in 0..family.len() {
            if (lenient_ids[i] == lenient_ids[j]) != (strict_ids[i] == strict_ids[j]) {
                discrepancy += 1;
            }
        }
    }
    let classes = |ids: &[usize]| ids.iter().collect::<BTreeSet<_>>().len();
    Ok(format!(
        "{} tuples, {pairs} ordered pairs, 100% agreement under both gates and oriented mode; \
         classes: {} (default), {} (closed-n reflection off), {} (oriented); \
         gate discrepancy: {discrepancy} ordered pairs; {elapsed:.2?}",
        family.len(),
        classes(&lenient_ids),
        classes(&strict_ids),
        classes(&oriented.1),
    ))
}

fn random_valid_tuple(rng: &mut ChaCha8Rng) -> InvariantTuple {
    let surface = if rng.gen_bool(0.5) {
        BaseSurface::orientable(rng.gen_range(0..3))
    } else {
        BaseSurface::nonorientable(rng.gen_range(1..4))
    };
    let f = rng.gen_range(0..3);
    let t = rng.gen_range(0..3);
    let pairs: Vec<SeifertPair> = (0..rng.gen_range(0..4))
        .map(|_| loop {
            let alpha = rng.gen_range(2..13);
            let beta = rng.gen_range(1..alpha);
            if alpha.gcd(&beta) == 1 {
                break SeifertPair::new(alpha, beta);
            }
        })
        .collect();
    let singular: Vec<i64> = (0..rng.gen_range(0..4)).map(|_| 2 * rng.gen_range(1..4)).collect();
    let boundary = f + t > 0 || !singular.is_empty();
    let b = if boundary { 0 } else { rng.gen_range(-5..6) };
    InvariantTuple::new(b, surface, f, t, pairs, singular)
}

fn random_walk(t: &InvariantTuple, moves: &MoveSet, rng: &mut ChaCha8Rng) -> InvariantTuple {
    let mut cur = t.clone();
    for _ in 0..rng.gen_range(0..7) {
        let options: Vec<Move> = moves.moves(&cur);
        if options.is_empty() {
            break;
        }
        let mv = options[rng.gen_range(0..options.len())];
        cur = moves.apply(&cur, mv).unwrap();
    }
    cur
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let moves = MoveSet::default();
    for _ in 0..1000 {
        let t = random_valid_tuple(&mut rng);
        ensure(validate(&t).ok, || format!("generator produced invalid {t}"))?;
        let d = decompose(&t);
        ensure(d.manifold_tuple.singular().is_empty(), || {
            format!("{t}: manifold part has singular data")
        })?;
        ensure(d.manifold_tuple.f() as usize == t.f() as usize + t.s(), || {
            format!("{t}: f+s bookkeeping")
        })?;
        ensure(2 * d.suspension_count as i64 == t.singular_point_count(), || {
            format!("{t}: 2r ≠ Σr_i")
        })?;
        ensure(validate(&d.manifold_tuple).ok, || format!("{t}: manifold part invalid"))?;

        let other = random_walk(&t, &moves, &mut rng);
        ensure(moves.are_equivalent(&t, &other), || {
            format!("walk left the class of {t}")
        })?;
        let e = decompose(&other);
        ensure(e.suspension_count == d.suspension_count, || {
            format!("{t} ~ {other}: r differs")
        })?;
        ensure(moves.are_equivalent(&d.manifold_tuple, &e.manifold_tuple), || {
            format!("{t} ~ {other}: manifold parts inequivalent")
        })?;
    }

    let first = tuple("(0;(o,0,0,0);[];[2,2])");
    let second = tuple("(0;(o,0,0,0);[];[4])");
    let (d1, d2) = (decompose(&first), decompose(&second));
    ensure(d1.manifold_tuple.f() == 2 && d1.suspension_count == 2, || {
        format!("first action: {d1:?}")
    })?;
    ensure(d2.manifold_tuple.f() == 1 && d2.suspension_count == 2, || {
        format!("second action: {d2:?}")
    })?;
    ensure(!moves.are_equivalent(&first, &second), || {
        "Example actions reported equivalent".into()
    })?;
    ensure(!moves.closure_oracle_equivalent(&first, &second, 8), || {
        "oracle merged Example actions".into()
    })?;

    // The cylinder reading of the second action: one circle with all four
    // singular points and a second circle of fixed points.
    let cylinder = tuple("(0;(o,0,1,0);[];[4])");
    let d3 = decompose(&cylinder);
    ensure(
        d3.manifold_tuple == d1.manifold_tuple && d3.suspension_count == 2,
        || format!("{d3:?}"),
    )?;
    ensure(!moves.are_equivalent(&first, &cylinder), || {
        "cylinder actions reported equivalent".into()
    })?;

    Ok(
        "1000 random tuples: bookkeeping exact, decomposition commutes with equivalence; \
        Example actions: M f=2 and f=1, both r=2, inequivalent (cylinder variant: M f=2, r=2, inequivalent)"
            .into(),
    )
}

fn group(rank: usize, torsion: &[u64]) -> AbelianGroupDecomp {
    AbelianGroupDecomp::new(rank, torsion.iter().copied())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let sp = suspend(&rp2_minimal());
    let h = homology(&sp);
    let expected = vec![group(1, &[]), group(0, &[]), group(0, &[2]), group(0, &[])];
    ensure(h == expected, || format!("H(Susp RP2) = {h:?}"))?;

    let mut report = vec![format!("H2(Susp RP2) = {}", h[2])];
    for k in 1..=3 {
        let model = realize_suspension_sum(k).map_err(|e| e.to_string())?;
        let h = homology(&model);
        ensure(h[1].is_trivial(), || format!("k={k}: H1 = {}", h[1]))?;
        ensure(!h[2].is_trivial(), || format!("k={k}: H2 vanishes"))?;
        if k == 2 {
            // A finitely generated group surjects onto (Z/2)^2 iff G ⊗ Z/2 has dimension ≥ 2.
            ensure(h[2].mod_p_dimension(2) >= 2, || {
                format!("H2 = {} does not surject onto Z2+Z2", h[2])
            })?;
        }
        report.push(format!("k={k}: H2 = {}", h[2]));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{}; H2 of the 2-fold sum surjects onto Z2+Z2 (not equal to it: χ = 2 forces a free summand); {elapsed:.2?}",
        report.join(", ")
    ))
}

fn criterion_4() -> Outcome {
    let mut counts = Vec::new();
    for r in 1..=3 {
        let model = realize_suspension_sum(r).map_err(|e| e.to_string())?;
        let n = singular_vertex_count(&model).map_err(|e| e.to_string())?;
        ensure(n == 2 * r, || format!("r={r}: {n} singular vertices"))?;
        counts.push(format!("r={r}: {n}"));
    }
    Ok(counts.join(", "))
}

fn check_snf(a: &IntegerMatrix) -> Result<(), String> {
    let res = smith_normal_form(a);
    ensure(&(&res.u * a) * &res.v == res.s, || format!("U·A·V ≠ S for {a:?}"))?;
    ensure(res.u.determinant().abs() == BigInt::from(1), || {
        "U not unimodular".into()
    })?;
    ensure(res.v.determinant().abs() == BigInt::from(1), || {
        "V not unimodular".into()
    })?;
    ensure(res.s.is_diagonal(), || "S not diagonal".into())?;
    let d: Vec<BigInt> = (0..a.rows().min(a.cols())).map(|i| res.s.get(i, i).clone()).collect();
    let nonzero = d.iter().take_while(|x| !x.is_zero()).count();
    ensure(d[nonzero..].iter().all(Zero::is_zero), || "zeros not trailing".into())?;
    ensure(d[..nonzero].iter().all(Signed::is_positive), || {
        "negative invariant factor".into()
    })?;
    ensure(d[..nonzero].windows(2).all(|w| w[1].is_multiple_of(&w[0])), || {
        format!("divisibility fails: {d:?}")
    })
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let dim = rng.gen_range(0..3);
    let n_vertices = rng.gen_range(dim + 1..8);
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(1..9))
        .map(|_| {
            let mut vs: Vec<usize> = (0..n_vertices).collect();
            for i in 0..=dim {
                let j = rng.gen_range(i..n_vertices);
                vs.swap(i, j);
            }
            vs.truncate(dim + 1);
            vs
        })
        .collect();
    SimplicialComplex::new(facets).unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..500 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        check_snf(&IntegerMatrix::from_rows(&data))?;
    }

    let mut complexes = vec![rp2_minimal(), suspend(&rp2_minimal()), s3(), s2_times_s1()];
    for r in 2..=3 {
        complexes.push(realize_suspension_sum(r).map_err(|e| e.to_string())?);
    }
    complexes.push(connected_sum(&s2_times_s1(), &realize_suspension_sum(2).unwrap()).map_err(|e| e.to_string())?);
    let random: Vec<SimplicialComplex> = (0..50).map(|_| random_complex(&mut rng)).collect();
    for k in complexes.iter().chain(&random) {
        ensure(chain_complex(k).boundary_squared_vanishes(), || {
            format!("∂∂ ≠ 0 on {k:?}")
        })?;
    }
    for k in &random {
        let susp = suspend(k);
        ensure(chain_complex(&susp).boundary_squared_vanishes(), || {
            "∂∂ ≠ 0 on a suspension".into()
        })?;
        let (base, shifted) = (reduced_homology(k), reduced_homology(&susp));
        ensure(shifted[0].is_trivial(), || {
            "reduced H0 of a suspension is nonzero".into()
        })?;
        for n in 1..shifted.len() {
            ensure(shifted[n] == base[n - 1], || {
                format!("suspension shift fails in degree {n} for {k:?}")
            })?;
        }
    }
    Ok(format!(
        "500 random matrices pass U·A·V=S, unimodularity, divisibility; ∂∂=0 on {} complexes; \
         suspension isomorphism on 50 random complexes",
        complexes.len() + 2 * random.len()
    ))
}

fn criterion_6() -> Outcome {
    // Pascal's triangle and the partition recurrence p(n,k) = p(n-1,k-1) + p(n-k,k).
    const N: usize = 8;
    let mut pascal = [[0u128; N + 1]; N + 1];
    let mut part = [[0u128; N + 1]; N + 1];
    for n in 0..=N {
        pascal[n][0] = 1;
        for k in 1..=n {
            pascal[n][k] = pascal[n - 1][k - 1] + if k < n { pascal[n - 1][k] } else { 0 };
        }
    }
    part[0][0] = 1;
    for n in 1..=N {
        for k in 1..=n {
            part[n][k] = part[n - 1][k - 1] + part[n - k][k];
        }
    }
    let mut disagreements = Vec::new();
    for r in 1..=N {
        for s in 1..=r {
            let c = compare_counts(r as u64, s as u64).map_err(|e| e.to_string())?;
            ensure(c.paper_count == pascal[r][s], || {
                format!("r={r} s={s}: paper side {}", c.paper_count)
            })?;
            ensure(c.enumerated_count == part[r][s], || {
                format!("r={r} s={s}: enumerated {}", c.enumerated_count)
            })?;
            let mut listed = 0u128;
            for_each_even_multiset(2 * r as u64, s as u64, &mut |_| listed += 1);
            ensure(listed == part[r][s], || format!("r={r} s={s}: listing disagrees"))?;
            ensure(c.agree == (pascal[r][s] == part[r][s]), || {
                format!("r={r} s={s}: agree flag wrong")
            })?;
            if !c.agree {
                disagreements.push((r, s, c.paper_count, c.enumerated_count));
            }
        }
    }
    ensure(disagreements.contains(&(3, 2, 3, 1)), || {
        "r=3, s=2 not flagged as 3 vs 1".into()
    })?;
    let (r, s, p, e) = disagreements[0];
    Ok(format!(
        "36 (r,s) cells checked; {} disagreements flagged (all s<r); r=3,s=2: 3 vs 1; first in r-major order: r={r},s={s}: {p} vs {e}",
        disagreements.len()
    ))
}

fn criterion_7() -> Outcome {
    let family = valid_tuples(&bounded_family()).map_err(|e| e.to_string())?;
    let mut obstructed = 0;
    for t in &family {
        let r = t.singular_point_count() / 2;
        ensure(asphericity_obstructed(t) == (r >= 1), || format!("{t}"))?;
        obstructed += usize::from(r >= 1);
    }
    // Every nonzero r has a witness: H2 of the suspension sum is nonzero.
    for r in 1..=2 {
        let h = homology(&realize_suspension_sum(r).map_err(|e| e.to_string())?);
        ensure(!h[2].is_trivial(), || format!("r={r}: H2 vanishes"))?;
    }
    Ok(format!(
        "{} tuples, {obstructed} obstructed, exactly those with r ≥ 1",
        family.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 equivalence vs closure oracle", criterion_1),
        ("2 decomposition", criterion_2),
        ("3 homology of suspensions", criterion_3),
        ("4 singular-point witness", criterion_4),
        ("5 SNF and chain complexes", criterion_5),
        ("6 counting reconciliation", criterion_6),
        ("7 asphericity obstruction", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
