//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{graph_from_masks, props, Small};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slider_rigidity::asymptotics::{
    branching_coeffs, c_star, c_tilde, core_fractions, core_plus_fraction,
    orientable_fraction_limit, x_tilde, xi_tilde,
};
use slider_rigidity::cores::core_stats;
use slider_rigidity::orientation::{find_orientation, max_orientable_edges, OrientationOutcome};
use slider_rigidity::rigidity::{is_minimally_rigid, is_rigid, is_sparse, rigid_components};
use slider_rigidity::typed_graph::{sample_er, ErConfig};
use slider_rigidity::TypedGraph;

type Outcome = Result<String, String>;
type Suite = (&'static str, usize, fn(&mut ChaCha8Rng) -> props::Check);

fn agrees(g: &TypedGraph) -> Result<(), String> {
    let small = Small::new(g);
    let all = small.all_edges();
    let orientable = match find_orientation(g) {
        OrientationOutcome::Orientable(o) => {
            slider_rigidity::orientation::verify_orientation(g, &o)
        }
        OrientationOutcome::Dense(w) => !(w.is_valid() && w.m > w.capacity()),
    };
    let checks = [
        ("is_sparse", is_sparse(g), small.sparse(all)),
        (
            "is_minimally_rigid",
            is_minimally_rigid(g),
            small.is_minimally_rigid(),
        ),
        ("is_rigid", is_rigid(g), small.is_rigid()),
        ("find_orientation", orientable, small.orientable(all)),
    ];
    match checks.iter().find(|(_, lib, oracle)| lib != oracle) {
        Some((name, lib, oracle)) => Err(format!("{name} gives {lib}, oracle {oracle} on {g:?}")),
        None => Ok(()),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for n in 0..=5usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for types in 0..1u32 << n {
            for edges in 0..1u64 << pairs {
                agrees(&graph_from_masks(n, types, edges))?;
                count += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..10_000 {
        let n = 6 + k % 2;
        let pairs = n * (n - 1) / 2;
        let types = rng.random::<u32>() & ((1 << n) - 1);
        let edges = rng.random::<u64>() & ((1u64 << pairs) - 1);
        agrees(&graph_from_masks(n, types, edges))?;
    }
    Ok(format!(
        "{count} exhaustive graphs (n <= 5) and 10000 random graphs (n = 6, 7) agree"
    ))
}

fn threshold_values() -> Outcome {
    let e = |x: slider_rigidity::Result<f64>| x.map_err(|e| e.to_string());
    for q in [0.0, 0.25, 0.5] {
        let cs = e(c_star(q))?;
        if cs != 1.0 / (1.0 - q) {
            return Err(format!("c*({q}) = {cs}"));
        }
    }
    let cs1 = e(c_star(1.0))?;
    if (cs1 - 3.588).abs() > 0.001 {
        return Err(format!("c*(1) = {cs1}"));
    }
    let ct1 = e(c_tilde(1.0))?;
    let grid_min = (1..=1_000_000)
        .map(|k| k as f64 * 1e-5)
        .map(|x| x / (1.0 - (-x).exp() * (1.0 + x)))
        .fold(f64::INFINITY, f64::min);
    if (ct1 - 3.3509).abs() > 0.001 || (ct1 - grid_min).abs() > 0.001 {
        return Err(format!("c~(1) = {ct1}, grid minimum {grid_min}"));
    }
    for k in 0..=100 {
        let q = k as f64 / 100.0;
        let (ct, cs) = (e(c_tilde(q))?, e(c_star(q))?);
        let bound = if q < 1.0 {
            1.0 / (1.0 - q)
        } else {
            f64::INFINITY
        };
        let ordered = ct <= cs && cs <= bound;
        let equal = q > 0.5 || (ct == bound && cs == bound);
        if !ordered || !equal {
            return Err(format!("q = {q}: c~ = {ct}, c* = {cs}, 1/(1-q) = {bound}"));
        }
    }
    Ok(format!(
        "c*(1) = {cs1:.6}, c~(1) = {ct1:.6} (grid {grid_min:.6}), ordering holds on 101 q values"
    ))
}

const CORE_SETTINGS: [(f64, f64); 3] = [(1.0, 3.6), (0.75, 3.2), (0.0, 2.0)];

/// Mean `n1/n, n2/n, 2m/n, n_plus/n` of the cores of 10 graphs at n = 10⁵.
fn core_means(q: f64, c: f64) -> Result<[f64; 4], String> {
    let n = 100_000;
    let mut sum = [0.0; 4];
    for trial in 0..10 {
        let g = sample_er(&ErConfig::new(n, c, q, 1000 + trial)).map_err(|e| e.to_string())?;
        let s = core_stats(&g, false);
        let nf = n as f64;
        sum[0] += s.n1_core as f64 / nf;
        sum[1] += s.n2_core as f64 / nf;
        sum[2] += 2.0 * s.m_core as f64 / nf;
        sum[3] += s.n_core_plus as f64 / nf;
    }
    Ok(sum.map(|x| x / 10.0))
}

fn core_sizes(means: &[[f64; 4]]) -> Outcome {
    let mut worst: f64 = 0.0;
    for (&(q, c), m) in CORE_SETTINGS.iter().zip(means) {
        let p = core_fractions(q, c).map_err(|e| e.to_string())?;
        for (name, got, want) in [
            ("n1", m[0], p.n1),
            ("n2", m[1], p.n2),
            ("2m", m[2], p.half_edges),
        ] {
            let dev = (got - want).abs();
            worst = worst.max(dev);
            if dev >= 0.01 {
                return Err(format!(
                    "q = {q}, c = {c}: {name}/n = {got:.5}, predicted {want:.5}"
                ));
            }
        }
    }
    Ok(format!(
        "largest deviation {worst:.5} over 3 settings x 3 fractions"
    ))
}

fn core_plus_sizes(means: &[[f64; 4]]) -> Outcome {
    let mut worst: f64 = 0.0;
    for (&(q, c), m) in CORE_SETTINGS.iter().zip(means) {
        let want = core_plus_fraction(q, c).map_err(|e| e.to_string())?;
        let dev = (m[3] - want).abs();
        worst = worst.max(dev);
        if dev >= 0.01 {
            return Err(format!(
                "q = {q}, c = {c}: n(Core+)/n = {:.5}, predicted {want:.5}",
                m[3]
            ));
        }
    }
    let small = core_plus_fraction(0.25, 4.0 / 3.0 + 0.01).map_err(|e| e.to_string())?;
    if small >= 0.05 {
        return Err(format!(
            "predicted core+ at q = 0.25, c = 4/3 + 0.01 is {small}"
        ));
    }
    Ok(format!(
        "largest deviation {worst:.5}; predicted {small:.5} at q = 0.25, c = 4/3 + 0.01"
    ))
}

fn orientability_transition() -> Outcome {
    let n = 10_000;
    let gaps = |c: f64| -> Result<Vec<(usize, usize)>, String> {
        (0..10)
            .map(|t| {
                let g =
                    sample_er(&ErConfig::new(n, c, 1.0, 2000 + t)).map_err(|e| e.to_string())?;
                Ok((max_orientable_edges(&g).gap(), g.m()))
            })
            .collect()
    };
    let low = gaps(3.3)?;
    let zero = low.iter().filter(|(gap, _)| *gap == 0).count();
    let high = gaps(3.9)?;
    let positive = high.iter().filter(|(gap, _)| *gap > 0).count();
    let mean = high
        .iter()
        .map(|&(gap, m)| gap as f64 / m as f64)
        .sum::<f64>()
        / 10.0;
    let want = 1.0 - orientable_fraction_limit(1.0, 3.9).map_err(|e| e.to_string())?;
    let summary = format!("gap = 0 in {zero}/10 at c = 3.3; gap > 0 in {positive}/10 at c = 3.9; mean gap/m {mean:.5} vs {want:.5}");
    if zero >= 9 && positive == 10 && (mean - want).abs() < 0.02 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn rigid_fracs(q: f64, c: f64, seed: u64) -> Result<Vec<f64>, String> {
    let n = 2000;
    (0..20)
        .map(|t| {
            let g = sample_er(&ErConfig::new(n, c, q, seed + t)).map_err(|e| e.to_string())?;
            Ok(rigid_components(&g).largest_size() as f64 / n as f64)
        })
        .collect()
}

fn transition_character() -> Outcome {
    let cs = c_star(0.75).map_err(|e| e.to_string())?;
    let below = rigid_fracs(0.75, cs - 0.15, 3000)?;
    let above = rigid_fracs(0.75, cs + 0.15, 3100)?;
    let cont = rigid_fracs(0.25, 4.0 / 3.0 + 0.05, 3200)?;
    let a = below.iter().filter(|&&f| f < 0.02).count();
    let b = above.iter().filter(|&&f| f > 0.10).count();
    let d = cont.iter().filter(|&&f| f < 0.05).count();
    let max = |v: &[f64]| v.iter().copied().fold(0.0, f64::max);
    let summary = format!(
        "q = 0.75: < 0.02 in {a}/20 at c* - 0.15 (max {:.4}), > 0.10 in {b}/20 at c* + 0.15; q = 0.25: < 0.05 in {d}/20 (max {:.4})",
        max(&below),
        max(&cont)
    );
    if a >= 16 && b >= 16 && d >= 16 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn structural_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let suites: [Suite; 4] = [
        ("basis exchange", 1000, |r| props::basis_exchange(r)),
        ("block closure", 500, |r| props::block_closure(r)),
        ("retype", 1000, |r| props::retype_keeps_rigidity(r)),
        ("degree and removal", 500, |r| props::degree_and_removal(r)),
    ];
    for (name, count, check) in suites {
        for k in 0..count {
            check(&mut rng).map_err(|e| format!("{name} instance {k}: {e}"))?;
        }
    }
    props::core_order_invariance(&mut rng, 100).map_err(|e| format!("core order: {e}"))?;
    let cases = props::merge_table(&mut rng, 20)?;
    Ok(format!(
        "all suites clean; {cases} merge cases instantiated"
    ))
}

fn subcriticality() -> Outcome {
    let mut points = 0;
    let mut worst: f64 = 0.0;
    for qk in 0..10 {
        let q = qk as f64 / 9.0;
        let ct = c_tilde(q).map_err(|e| e.to_string())?;
        for ck in 1..=5 {
            let c = ct + (10.0 - ct) * ck as f64 / 5.0;
            let (p12, p23) = branching_coeffs(q, c).map_err(|e| e.to_string())?;
            if 2.0 * p23 + p12 >= 1.0 {
                return Err(format!(
                    "2p23 + p12 = {} at q = {q}, c = {c}",
                    2.0 * p23 + p12
                ));
            }
            let x = x_tilde(q, c).map_err(|e| e.to_string())?;
            let xi = xi_tilde(q, c).map_err(|e| e.to_string())?;
            let dev = (c * x - xi).abs();
            worst = worst.max(dev);
            if dev >= 1e-9 {
                return Err(format!("|c x~ - xi~| = {dev:e} at q = {q}, c = {c}"));
            }
            points += 1;
        }
    }
    Ok(format!(
        "{points} grid points, largest |c x~ - xi~| = {worst:e}"
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |k: usize, name: &str, run: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {k} PASS ({name}, {secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k} FAIL ({name}, {secs:.1}s): {detail}");
            }
        }
    };
    report(1, "oracle equivalence", &oracle_equivalence);
    report(2, "threshold values", &threshold_values);
    let means: Result<Vec<[f64; 4]>, String> = CORE_SETTINGS
        .iter()
        .map(|&(q, c)| core_means(q, c))
        .collect();
    report(3, "2.5-core sizes", &|| {
        core_sizes(means.as_ref().map_err(Clone::clone)?)
    });
    report(4, "2.5+1.5-core size", &|| {
        core_plus_sizes(means.as_ref().map_err(Clone::clone)?)
    });
    report(5, "orientability transition", &orientability_transition);
    report(6, "transition character", &transition_character);
    report(7, "structural properties", &structural_properties);
    report(8, "subcriticality", &subcriticality);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
