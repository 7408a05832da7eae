//! One PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use numcurve::analysis::DuplicationAnalysis;
use numcurve::corpus::{self, CorpusSpec};
use numcurve::homogeneity::{homtype_candidates, is_homogeneous_ideal, is_homogeneous_semigroup, HomogeneityContext};
use numcurve::ideal::{ab_vectors_ideal, blowup_ideal};
use numcurve::limits::{blowup_by_limit, blowup_ideal_by_limit};
use numcurve::tangent_cone::{ab_vectors, blowup, is_dup_gorenstein, is_gr_cm, is_symmetric, mpure};
use numcurve::validate::{validate_corpus, ExecMode};
use numcurve::{duplicate, DuplicationInput, NumericalSemigroup, SemigroupIdeal, Witness};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn sg(g: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(g).unwrap()
}

fn input(s: &[i64], e: &[i64], b: i64) -> DuplicationInput {
    let s = sg(s);
    DuplicationInput::new(SemigroupIdeal::from_generators(&s, e).unwrap(), b).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn set(v: &[i64]) -> BTreeSet<i64> {
    v.iter().copied().collect()
}

fn golden_three_four() -> Outcome {
    let i = input(&[3, 4], &[3, 8], 3);
    let s = i.semigroup();
    let t = duplicate(&i);
    expect("T", t.generators(), &[6, 8, 9, 19])?;
    let ps = ab_vectors(s);
    expect("a(S)", ps.a_vector, vec![0, 1, 2])?;
    expect("b(S)", ps.b_vector, vec![0, 1, 2])?;
    let pt = ab_vectors(&t);
    expect("a(T)", pt.a_vector, vec![0, 2, 1, 1, 2, 2])?;
    expect("b(T)", pt.b_vector, vec![0, 1, 1, 1, 2, 2])?;
    let pe = ab_vectors_ideal(i.ideal());
    expect("a(E)", pe.a, vec![1, 2, 2])?;
    expect("b(E)", pe.b, vec![1, 2, 1])?;
    Ok("T = <6,8,9,19>, a/b vectors of S, T, E exact".into())
}

fn golden_five_fourteen() -> Outcome {
    let i = input(&[5, 14, 17], &[14, 20, 22], 17);
    let s = i.semigroup();
    let t = duplicate(&i);
    expect("Ap5(S)", s.apery(), &[0, 31, 17, 28, 14])?;
    expect("Ap5(E)", i.ideal().apery_m(), vec![20, 31, 22, 28, 14])?;
    expect("Ap10(T)", t.apery_set(10).unwrap(), vec![0, 61, 62, 73, 34, 45, 56, 57, 28, 79])?;
    let ps = ab_vectors(s);
    expect("a(S)", &ps.a_vector, &vec![0, 2, 1, 2, 1])?;
    expect("b(S)", &ps.b_vector, &vec![0, 2, 1, 2, 1])?;
    let pt = ab_vectors(&t);
    let want = vec![0, 1, 2, 2, 1, 1, 2, 1, 1, 2];
    expect("a(T)", &pt.a_vector, &want)?;
    expect("b(T)", &pt.b_vector, &want)?;
    Ok("Ap5(S), Ap5(E) = {20,31,22,28,14}, Ap10(T), a/b vectors exact".into())
}

fn golden_gorenstein() -> Outcome {
    let s = sg(&[10, 11, 12, 13]);
    expect("mpure", mpure(&s).is_mpure, true)?;
    expect("symmetric", is_symmetric(&s).holds, false)?;
    expect("gr_cm", is_gr_cm(&s).holds, true)?;
    let i = input(&[10, 11, 12, 13], &[10, 11, 12], 11);
    expect("T", duplicate(&i).generators(), &[20, 22, 24, 26, 31, 33, 35])?;
    let g = is_dup_gorenstein(&i);
    expect("gorenstein criterion", g.criterion.holds, true)?;
    expect("gorenstein direct", g.direct.holds, true)?;

    let t = duplicate(&input(&[5, 6, 7], &[5, 13], 5));
    expect("<5,6,7> dup", t.generators(), &[10, 12, 14, 15, 31])?;
    expect("<5,6,7> dup mpure", mpure(&t).is_mpure, false)?;
    let t = duplicate(&input(&[6, 7, 22], &[6, 21], 7));
    expect("<6,7,22> dup", t.generators(), &[12, 14, 19, 44, 49])?;
    expect("<6,7,22> dup mpure", mpure(&t).is_mpure, true)?;
    Ok("Gorenstein duplication of a non-symmetric M-pure semigroup; M-purity of both examples".into())
}

fn golden_homogeneity() -> Outcome {
    let s = sg(&[4, 5]);
    let e1 = SemigroupIdeal::from_generators(&s, &[5, 8]).unwrap();
    expect("Ap4(E1)", set(&e1.apery(4).unwrap()), set(&[5, 8, 10, 15]))?;

    let s3 = sg(&[6, 7, 9, 11]);
    let e3 = SemigroupIdeal::from_generators(&s3, &[7, 11, 12]).unwrap();
    expect("Ap6(E3)", set(&e3.apery(6).unwrap()), set(&[7, 11, 12, 14, 16, 21]))?;
    let v = is_homogeneous_ideal(&e3);
    expect("E3 homogeneous", v.holds, false)?;
    let Some(Witness::Homogeneity(w)) = v.witness else {
        return Err("E3: missing homogeneity witness".into());
    };
    let HomogeneityContext::MismatchAcrossGenerators { per_generator, .. } = w.context else {
        return Err(format!("E3: unexpected witness context {:?}", w.context));
    };
    let diffs: BTreeSet<i64> = per_generator.iter().map(|p| p.difference).collect();
    expect("E3 witness", diffs, set(&[9, 14]))?;

    for (gens, e, b, homogeneous) in [
        (vec![8, 10, 15, 21], vec![5, 8], 5, false),
        (vec![8, 10, 15], vec![5], 5, false),
        (vec![8, 10, 23, 29], vec![5, 8], 13, true),
        (vec![8, 10, 23], vec![5], 13, true),
    ] {
        let i = input(&[4, 5], &e, b);
        let t = duplicate(&i);
        expect("duplication", t.generators(), gens.as_slice())?;
        expect(&format!("<{gens:?}> homogeneous"), is_homogeneous_semigroup(&t).holds, homogeneous)?;
        let a = DuplicationAnalysis::new(&i);
        expect("homogeneous theorem agrees", a.theorem("homogeneous").agree(), true)?;
    }

    let found = homtype_candidates(&sg(&[6, 7, 10]));
    let c = found
        .iter()
        .find(|c| c.s == 7 && c.b == 7)
        .ok_or("homtype candidate (7, 7) missing")?;
    expect("homtype T", c.t.as_slice(), &[12, 14, 20, 21])?;
    expect("gr_ci(T)", c.is_gr_ci_t, false)?;
    expect("homogeneous(T)", c.is_homogeneous_t, false)?;
    Ok("Apéry sets, E3 witness (9 vs 14), four duplications, homtype candidate".into())
}

const SWEEP_CHECKS: [&str; 16] = [
    "dup_cm",
    "dup_gorenstein",
    "dup_ci",
    "mpure_transfer",
    "dup_homogeneous",
    "semigroup_lemma_equivalence",
    "ideal_lemma_equivalence",
    "a_ge_b_semigroup",
    "a_ge_b_ideal",
    "a_ge_b_t",
    "apery_gamma_beta_chain",
    "apery_gamma_beta_chain_t",
    "dup_generator_minimality",
    "canonical_duality",
    "lemma_3e_plus_b",
    "homogeneous_stabilization",
];

fn sweep() -> Outcome {
    let spec = CorpusSpec::default();
    let summary = validate_corpus(&spec, ExecMode::Sequential);
    let brute = common::semigroups_by_gaps(spec.max_genus).len() as u64;
    expect("semigroup count vs gap-subset enumeration", summary.semigroups, brute)?;
    for name in SWEEP_CHECKS {
        let t = summary.tally(name);
        if t.evaluated == 0 {
            return Err(format!("{name} was never evaluated"));
        }
        if t.violations != 0 {
            return Err(format!("{name}: {} violations", t.violations));
        }
    }
    if !summary.is_clean() {
        return Err(format!(
            "{} violations, {} stabilization failures",
            summary.total_violations(),
            summary.stabilization_failures.len()
        ));
    }
    Ok(format!(
        "{} semigroups (genus <= 8, confirmed by gap-subset enumeration), {} ideals, {} triples, {} checks, 0 violations",
        summary.semigroups,
        summary.ideals,
        summary.triples,
        summary.checks.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let spec = CorpusSpec::with_max_genus(6);
    let mut members = 0usize;
    let mut ideals = 0usize;
    for s in corpus::semigroups(6, None) {
        let g = s.generators();
        for z in (0..=s.conductor() + 2 * s.multiplicity()).filter(|&z| s.contains(z)) {
            let brute = common::length_set(g, z).into_iter().max();
            if s.order(z) != brute {
                return Err(format!("{s}: order({z}) = {:?}, brute force {brute:?}", s.order(z)));
            }
            members += 1;
        }
        let (limit, _) = blowup_by_limit(&s).map_err(|e| format!("{s}: {e}"))?;
        expect(&format!("{s} blowup"), &limit, &blowup(&s))?;
        for e in corpus::ideals(&s, &spec) {
            let (limit, _) = blowup_ideal_by_limit(&e).map_err(|err| format!("{e}: {err}"))?;
            if !limit.same_set(&blowup_ideal(&e)) {
                return Err(format!("{s} {e}: blowup ideal closed form differs from limit"));
            }
            ideals += 1;
        }
    }
    Ok(format!("{members} members, {ideals} ideals, 0 mismatches"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 golden <3,4> duplication", golden_three_four, Duration::from_secs(1)),
        ("2 golden <5,14,17> duplication", golden_five_fourteen, Duration::from_secs(1)),
        ("3 golden Gorenstein and M-purity", golden_gorenstein, Duration::from_secs(1)),
        ("4 golden homogeneity", golden_homogeneity, Duration::from_secs(1)),
        ("5 theorem sweep, genus <= 8, one thread", sweep, Duration::from_secs(300)),
        ("6 oracle equivalence, genus <= 6", oracle_equivalence, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > limit => Err(format!("{detail}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}  ({took:.2?})  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({took:.2?})  {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
