//! Small Monte-Carlo sweep through the orientability threshold at q = 1,
//! summarised against the limits.

use slider_rigidity::experiments::{compare, csv_string, run_sweep, Measures, SweepConfig};

fn main() -> slider_rigidity::Result<()> {
    let mut cfg = SweepConfig::new(1.0, SweepConfig::linspace(3.2, 4.0, 5)?, 5000, 3, 11);
    cfg.measures = "orient,cores".parse::<Measures>()?;
    let records = run_sweep(&cfg)?;

    for row in compare(&records)?
        .iter()
        .filter(|r| r.measure == "gap_frac" || r.measure == "n2_core_frac")
    {
        let predicted = row.predicted.map_or("-".to_string(), |p| format!("{p:.4}"));
        println!(
            "c = {:.2} {:<14} {:.4} ± {:.4} (limit {predicted})",
            row.c, row.measure, row.mean, row.stderr
        );
    }
    let csv = csv_string(&records);
    println!("\n{}", csv.lines().take(3).collect::<Vec<_>>().join("\n"));
    Ok(())
}
