//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kfold_core::criticality::decomposition_witness;
use kfold_core::{
    bounds_report, ceil_div, chi_k, chi_k_minus_v, color, criticality_gap_bounds, exact_chi_k, exact_chi_k_via_lex,
    gcd, is_chik_critical, is_chistar_critical, verify_coloring, ColoringDocument, Family, FamilyParams, GenericGraph,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("took {spent:?}, budget {budget:?}"))
}

fn both_families(n_max: i64) -> impl Iterator<Item = FamilyParams> {
    FamilyParams::all_up_to(Family::Web, n_max).chain(FamilyParams::all_up_to(Family::Antiweb, n_max))
}

fn graph(params: &FamilyParams) -> GenericGraph {
    params.materialize().expect("small family graph")
}

/// 1. The 2-fold 7-coloring of the antiweb n=10, p=3 through the CLI.
fn antiweb_10_3_coloring() -> Outcome {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_kfold"))
        .args([
            "color", "--family", "antiweb", "-n", "10", "-p", "3", "-k", "2", "--json",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(output.status.success(), || format!("exit status {}", output.status))?;
    let doc: ColoringDocument = serde_json::from_slice(&output.stdout).map_err(|e| e.to_string())?;
    ensure(doc.classes.len() == 7 && doc.x == 7, || {
        format!("{} classes", doc.classes.len())
    })?;
    let s0: BTreeSet<usize> = doc.classes[0].iter().copied().collect();
    ensure(s0 == BTreeSet::from([0, 4, 7]), || format!("S_0 = {s0:?}"))?;
    let verdict = doc.verify().map_err(|e| e.to_string())?;
    ensure(verdict.valid && verdict.k == 2, || format!("{verdict:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "7 classes, S_0 = {{0,4,7}}, valid 2-fold, {:?}",
        start.elapsed()
    ))
}

/// 2. Oracle equals ⌈kn/α⌉ for every family graph with n ≤ 12, k ≤ 3.
fn formula_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for params in both_families(12) {
        let g = graph(&params);
        for k in 1..=3i64 {
            let exact = exact_chi_k(&g, k as usize).map_err(|e| e.to_string())?;
            let closed = ceil_div(k * params.n(), params.alpha());
            ensure(exact == closed && chi_k(&params, k) == Ok(closed), || {
                format!("{params} k={k}: oracle {exact}, closed form {closed}")
            })?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{checked} instances, {:?}", start.elapsed()))
}

/// 3. Constructed colorings are valid and use exactly χ_k colors.
fn construction_optimality() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for params in both_families(40) {
        let g = graph(&params);
        for k in 1..=6i64 {
            let coloring = color(&params, k).map_err(|e| e.to_string())?;
            let verdict = verify_coloring(&g, &coloring, k as usize).map_err(|e| e.to_string())?;
            let expected = chi_k(&params, k).map_err(|e| e.to_string())?;
            ensure(verdict.valid && verdict.x as i64 == expected, || {
                format!("{params} k={k}: valid={} x={} χ_k={expected}", verdict.valid, verdict.x)
            })?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} colorings, {:?}", start.elapsed()))
}

/// 4. Oracle χ_k(G − v) matches the deletion formulas for every v.
fn deleted_vertex_sweep() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for params in both_families(10) {
        let g = graph(&params);
        for k in 1..=3i64 {
            let formula = chi_k_minus_v(&params, k).map_err(|e| e.to_string())?;
            for v in 0..g.vertex_count() {
                let (h, _) = g.delete_vertex(v).map_err(|e| e.to_string())?;
                let exact = exact_chi_k(&h, k as usize).map_err(|e| e.to_string())?;
                ensure(exact == formula, || {
                    format!("{params} k={k} v={v}: oracle {exact}, formula {formula}")
                })?;
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{checked} deletions, {:?}", start.elapsed()))
}

/// 5. Three derivations of χ_k-criticality agree; χ* ⇔ α | n−1 ⇔ χ_1-critical.
fn criticality_characterization() -> Outcome {
    let start = Instant::now();
    let mut oracle_checked = 0;
    for params in both_families(30) {
        for k in 1..=8i64 {
            let by_decomposition = decomposition_witness(&params, k)
                .map_err(|e| e.to_string())?
                .is_critical();
            let by_formula =
                chi_k_minus_v(&params, k).map_err(|e| e.to_string())? < chi_k(&params, k).map_err(|e| e.to_string())?;
            ensure(by_decomposition == by_formula, || {
                format!("{params} k={k}: decomposition {by_decomposition}, formula {by_formula}")
            })?;
            if params.n() <= 10 && k <= 3 {
                let g = graph(&params);
                let full = exact_chi_k(&g, k as usize).map_err(|e| e.to_string())?;
                let by_oracle = (0..g.vertex_count()).all(|v| {
                    let h = g.delete_vertex(v).unwrap().0;
                    exact_chi_k(&h, k as usize).unwrap() < full
                });
                ensure(by_oracle == by_formula, || {
                    format!("{params} k={k}: oracle {by_oracle}, formula {by_formula}")
                })?;
                oracle_checked += 1;
            }
        }
        let star = is_chistar_critical(&params).critical;
        let divides = (params.n() - 1) % params.alpha() == 0;
        let chi_1 = is_chik_critical(&params, 1).map_err(|e| e.to_string())?.is_critical;
        ensure(star == divides && star == chi_1, || {
            format!("{params}: χ* {star}, α|n−1 {divides}, χ_1-critical {chi_1}")
        })?;
    }
    Ok(format!("{oracle_checked} oracle verdicts, {:?}", start.elapsed()))
}

/// 6. χ_k(C_5) = 3, 5, 8, 10, 13.
fn odd_cycle_sequence() -> Outcome {
    let c5 = FamilyParams::web(5, 2).unwrap();
    let values: Vec<i64> = (1..=5).map(|k| chi_k(&c5, k).unwrap()).collect();
    ensure(values == [3, 5, 8, 10, 13], || format!("closed form gives {values:?}"))?;
    let g = GenericGraph::cycle(5).unwrap();
    for k in 1..=3 {
        let exact = exact_chi_k(&g, k).map_err(|e| e.to_string())?;
        ensure(exact == values[k - 1], || format!("oracle χ_{k}(C_5) = {exact}"))?;
    }
    Ok(format!("{values:?}"))
}

/// 7. χ(G ∘ K_k) = χ_k(G) on family graphs with n ≤ 8, k ≤ 2.
fn lexicographic_identity() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for params in both_families(8) {
        let g = graph(&params);
        for k in 1..=2 {
            let lex = exact_chi_k_via_lex(&g, k).map_err(|e| e.to_string())?;
            let direct = exact_chi_k(&g, k).map_err(|e| e.to_string())?;
            ensure(lex == direct, || format!("{params} k={k}: lex {lex}, direct {direct}"))?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} instances, {:?}", start.elapsed()))
}

/// 8. Tightness flags and gap brackets.
fn bounds_propositions() -> Outcome {
    let mut checked = 0;
    for params in both_families(40) {
        let (n, p, alpha) = (params.n(), params.p(), params.alpha());
        for k in 1..=10i64 {
            let r = bounds_report(&params, k).map_err(|e| e.to_string())?;
            let rem = n % alpha;
            let ctx = || format!("{params} k={k}: {r:?}");
            ensure(r.tight.omega == (n % p == 0), ctx)?;
            ensure(r.tight.omega == (r.chi_k == r.k_omega), ctx)?;
            ensure(r.tight.chi == (rem == 0 || k * (alpha - rem) < alpha), ctx)?;
            ensure(r.tight.chi == (r.chi_k == r.k_chi), ctx)?;
            ensure(r.tight.frac == ((k * gcd(n, alpha)) % alpha == 0), ctx)?;
            ensure(r.tight.frac == (r.chi_k * alpha == k * n), ctx)?;
            let (lo, hi) = criticality_gap_bounds(&params, k).map_err(|e| e.to_string())?;
            let gap = r.chi_k - chi_k_minus_v(&params, k).map_err(|e| e.to_string())?;
            ensure(lo <= gap && gap <= hi, || {
                format!("{params} k={k}: gap {gap} not in [{lo}, {hi}]")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (params, k) pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 antiweb n=10 p=3 coloring", antiweb_10_3_coloring),
        ("2 formula vs oracle sweep", formula_vs_oracle),
        ("3 construction optimality", construction_optimality),
        ("4 deleted-vertex sweep", deleted_vertex_sweep),
        ("5 criticality characterization", criticality_characterization),
        ("6 odd cycle sequence", odd_cycle_sequence),
        ("7 lexicographic identity", lexicographic_identity),
        ("8 bounds propositions", bounds_propositions),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
