//! 2.5-core and 2.5+1.5-core of a sampled graph next to their limits.

use slider_rigidity::asymptotics::{core_fractions, core_plus_fraction};
use slider_rigidity::cores::core_stats;
use slider_rigidity::typed_graph::{sample_er, ErConfig};

fn main() -> slider_rigidity::Result<()> {
    let (n, c, q) = (50_000, 3.2, 0.75);
    let g = sample_er(&ErConfig::new(n, c, q, 1))?;
    let s = core_stats(&g, false);
    let limit = core_fractions(q, c)?;
    let nf = n as f64;

    println!("{:<12} {:>10} {:>10}", "", "sample", "limit");
    println!(
        "{:<12} {:>10.4} {:>10.4}",
        "n1/n",
        s.n1_core as f64 / nf,
        limit.n1
    );
    println!(
        "{:<12} {:>10.4} {:>10.4}",
        "n2/n",
        s.n2_core as f64 / nf,
        limit.n2
    );
    println!(
        "{:<12} {:>10.4} {:>10.4}",
        "2m/n",
        2.0 * s.m_core as f64 / nf,
        limit.half_edges
    );
    println!(
        "{:<12} {:>10.4} {:>10.4}",
        "core+/n",
        s.n_core_plus as f64 / nf,
        core_plus_fraction(q, c)?
    );
    Ok(())
}
