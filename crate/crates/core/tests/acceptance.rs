//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Exits 0 even when a criterion fails so the rest of the workspace tests
//! still run; set `ACCEPTANCE_STRICT=1` to turn any FAIL into exit code 1.

use std::collections::BTreeSet;
use std::time::Instant;

use fivevertex::adjust::{tau, to_closed, to_open};
use fivevertex::crystal::{demazure_crystal, demazure_step, highest_weight};
use fivevertex::laurent::{apply_word, demazure_w, rho, LaurentPolynomial};
use fivevertex::lattice::{
    boltzmann, enumerate_states, gtp_of_state, Edge, Family, LatticeState, ModelSpec, Spin,
};
use fivevertex::patterns::{gt_to_tableau, tableau_to_gt, GtPattern, Tableau};
use fivevertex::verify::{
    check_crystal_axioms_and_atoms, check_ej_shortcut, check_main_bijection, check_partition_identities,
    check_state_theorem, check_tau, is_strict, partitions, VerificationReport,
};
use fivevertex::weyl::{all_permutations, length, word_product, Permutation};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// Runs checks over the given (lambda, r) cases; fails on the first bad report.
fn run_reports<F>(cases: &[(Vec<i64>, usize)], check: F) -> Outcome
where
    F: Fn(&[i64], usize) -> Vec<VerificationReport>,
{
    let mut n = 0;
    for (lam, r) in cases {
        for rep in check(lam, *r) {
            if !rep.passed() {
                return Err(format!(
                    "lambda={:?} w={}: {}; counterexample {}",
                    rep.lambda,
                    rep.w,
                    rep.detail,
                    rep.counterexample.map(|c| c.to_string()).unwrap_or_default()
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{} cases, {n} reports", cases.len()))
}

fn desk(ranks: &[usize], max: i64, strict_only: bool) -> Vec<(Vec<i64>, usize)> {
    ranks
        .iter()
        .flat_map(|&r| partitions(r, max).into_iter().map(move |l| (l, r)))
        .filter(|(l, _)| !strict_only || is_strict(l))
        .collect()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let out = run_reports(&desk(&[2, 3], 3, true), check_partition_identities)?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("identities hold but took {secs:.1}s"));
    }
    Ok(format!("{out}, {secs:.2}s"))
}

fn ac2() -> Outcome {
    let text = include_str!("golden/bootstrap_1_0.json");
    let golden: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let lambda: Vec<i64> = serde_json::from_value(golden["lambda"].clone()).unwrap();
    let z_rho: Vec<i64> = serde_json::from_value(golden["rho"].clone()).unwrap();
    if z_rho != rho(2) {
        return Err("golden rho differs from the library".into());
    }
    let grid = |v: &Value| -> Vec<Vec<Spin>> {
        serde_json::from_value::<Vec<Vec<usize>>>(v.clone())
            .unwrap()
            .into_iter()
            .map(|row| row.into_iter().map(Spin::from).collect())
            .collect()
    };
    let mut n = 0;
    for case in golden["cases"].as_array().unwrap() {
        let w: Vec<usize> = serde_json::from_value(case["w"].clone()).unwrap();
        let family: Family = serde_json::from_value(case["family"].clone()).unwrap();
        let spec = ModelSpec::new(&lambda, perm(&w), family).map_err(|e| e.to_string())?;
        let mut want = BTreeSet::new();
        for st in case["states"].as_array().unwrap() {
            let s = LatticeState::new(spec.clone(), grid(&st["horizontal"]), grid(&st["vertical"]))
                .map_err(|e| format!("golden state rejected: {e}"))?;
            let weight = boltzmann(&s).map_err(|e| e.to_string())?.to_string();
            if weight != st["weight"].as_str().unwrap() {
                return Err(format!("w={w:?} {family}: weight {weight}, golden {}", st["weight"]));
            }
            want.insert(format!("{:?}{:?}", s.horizontal(), s.vertical()));
        }
        let got: BTreeSet<String> = enumerate_states(&spec)
            .iter()
            .map(|s| format!("{:?}{:?}", s.horizontal(), s.vertical()))
            .collect();
        if got != want {
            return Err(format!("w={w:?} {family}: enumeration gives {} states, golden {}", got.len(), want.len()));
        }
        n += want.len();
    }
    Ok(format!("{n} golden states match enumeration and weights"))
}

fn ac3() -> Outcome {
    run_reports(&[(vec![1, 0], 2), (vec![2, 1, 0], 3)], check_state_theorem)
}

fn ac4() -> Outcome {
    run_reports(&desk(&[1, 2, 3], 3, true), check_main_bijection)
}

fn ac5() -> Outcome {
    run_reports(&desk(&[1, 2, 3], 3, false), check_ej_shortcut)
}

fn ac6() -> Outcome {
    // the worked example is a weak pattern; tau reads it as given
    let example: GtPattern = "{8,6,5,0;8,5,0;6,2;4}".parse().map_err(|e| format!("{e}"))?;
    let t = tau(&example);
    if t != perm(&[2, 4, 3, 1]) {
        return Err(format!("worked example gives tau={t}, want [2,4,3,1]"));
    }
    run_reports(&desk(&[1, 2, 3], 3, false), check_tau).map(|s| format!("worked example ok; {s}"))
}

fn figure_states() -> (LatticeState, LatticeState) {
    let h = |row, slots: &[usize]| slots.iter().map(|&slot| Edge::H { row, slot }).collect::<Vec<_>>();
    let v = |col, vslots: &[usize]| vslots.iter().map(|&vslot| Edge::V { vslot, col }).collect::<Vec<_>>();
    let cat = |parts: Vec<Vec<Edge>>| parts.into_iter().flatten().collect::<Vec<_>>();
    let spec = |family| ModelSpec::new(&[3, 2, 0], perm(&[2, 3, 1]), family).unwrap();
    let green = cat(vec![v(0, &[0]), h(1, &[0])]);
    let closed = LatticeState::from_edges(
        spec(Family::Closed),
        &[
            (1, cat(vec![v(5, &[0]), h(1, &[5, 4]), v(3, &[1]), h(2, &[3, 2, 1, 0])])),
            (2, cat(vec![v(3, &[0]), h(1, &[3, 2]), v(1, &[1, 2]), h(3, &[1, 0])])),
            (3, green.clone()),
        ],
    )
    .unwrap();
    let open = LatticeState::from_edges(
        spec(Family::Open),
        &[
            (1, cat(vec![v(5, &[0]), h(1, &[5, 4, 3, 2]), v(1, &[1]), h(2, &[1, 0])])),
            (2, cat(vec![v(3, &[0, 1]), h(2, &[3, 2]), v(1, &[2]), h(3, &[1, 0])])),
            (3, green),
        ],
    )
    .unwrap();
    (closed, open)
}

fn ac7() -> Outcome {
    let a: GtPattern = "{5,3,0;3,1;1}".parse().map_err(|e| format!("{e}"))?;
    let t = gt_to_tableau(&a).map_err(|e| e.to_string())?;
    let want = Tableau::new(3, vec![vec![1, 2, 2, 3, 3], vec![2, 3, 3]]).unwrap();
    if t != want || tableau_to_gt(&want) != a {
        return Err(format!("pattern maps to {t}, want {want}"));
    }
    let (closed, open) = figure_states();
    let err = |e: fivevertex::Error| e.to_string();
    if gtp_of_state(&closed).map_err(err)? != gtp_of_state(&open).map_err(err)? {
        return Err("figure states have different patterns".into());
    }
    if gtp_of_state(&closed).map_err(err)? != a {
        return Err(format!("figure pattern is {}", gtp_of_state(&closed).map_err(err)?));
    }
    if to_closed(&open).map_err(err)? != closed {
        return Err("to_closed(open figure) is not the closed figure".into());
    }
    if to_open(&closed).map_err(err)? != open {
        return Err("to_open(closed figure) is not the open figure".into());
    }
    Ok(format!("pattern {a} <-> {t}; figures share it and convert both ways"))
}

fn ac8() -> Outcome {
    run_reports(&desk(&[1, 2, 3], 3, false), check_crystal_axioms_and_atoms)
}

fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    let r = w.rank();
    let mut words = vec![vec![]];
    for _ in 0..length(w) {
        words = words
            .into_iter()
            .flat_map(|wd| (1..r).map(move |i| [wd.clone(), vec![i]].concat()))
            .filter(|wd| length(&word_product(r, wd).unwrap()) == wd.len())
            .collect();
    }
    words.retain(|wd| word_product(r, wd).unwrap() == *w);
    words
}

fn random_poly(rng: &mut ChaCha8Rng, r: usize) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero(r);
    for _ in 0..rng.gen_range(1..=6) {
        let mu: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
        let c = BigInt::from(rng.gen_range(-5i64..=5));
        p = &p + &LaurentPolynomial::monomial(&mu).scale(&c);
    }
    p
}

fn ac9() -> Outcome {
    let r = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let words: Vec<(Permutation, Vec<Vec<usize>>)> =
        all_permutations(r).into_iter().map(|w| { let ws = reduced_words(&w); (w, ws) }).collect();
    let err = |e: fivevertex::Error| e.to_string();
    for n in 0..1000 {
        let p = random_poly(&mut rng, r);
        for i in 1..r {
            let d = p.demazure(i).map_err(err)?;
            if d.demazure(i).map_err(err)? != d {
                return Err(format!("poly #{n} {p}: d{i}^2 != d{i}"));
            }
            if d.swap_vars(i).map_err(err)? != d {
                return Err(format!("poly #{n} {p}: s{i} d{i} != d{i}"));
            }
        }
        let a = apply_word(&p, &[1, 2, 1], false).map_err(err)?;
        if a != apply_word(&p, &[2, 1, 2], false).map_err(err)? {
            return Err(format!("poly #{n} {p}: braid relation fails"));
        }
        for (w, ws) in &words {
            let base = demazure_w(&p, w).map_err(err)?;
            for wd in ws {
                if apply_word(&p, wd, false).map_err(err)? != base {
                    return Err(format!("poly #{n} {p}: word {wd:?} of {w} disagrees"));
                }
            }
        }
    }
    let mut crystals = 0;
    for lam in partitions(r, 3) {
        let u: BTreeSet<Tableau> = BTreeSet::from([highest_weight(&lam).map_err(err)?]);
        for (w, ws) in &words {
            let base = demazure_crystal(&lam, w).map_err(err)?.elements;
            for wd in ws {
                let set = wd.iter().rev().fold(u.clone(), |s, &i| demazure_step(&s, i));
                if set != base {
                    return Err(format!("lambda={lam:?}: crystal word {wd:?} of {w} disagrees"));
                }
            }
            crystals += 1;
        }
    }
    Ok(format!("1000 random polynomials; {crystals} Demazure crystals word-independent"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", "partition identities", ac1),
        ("AC2", "bootstrap fixture", ac2),
        ("AC3", "closed states per pattern", ac3),
        ("AC4", "theta bijection onto Demazure crystals", ac4),
        ("AC5", "pattern raising shortcut", ac5),
        ("AC6", "tau inverts the open flag", ac6),
        ("AC7", "worked pattern and figure conversions", ac7),
        ("AC8", "crystal and Demazure properties", ac8),
        ("AC9", "operator algebra", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("[PASS] {id} {name}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {msg} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
