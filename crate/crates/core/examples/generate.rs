//! Sample a typed random graph and print it in the edge-list format.
//!
//! cargo run --example generate -- 20 2.5 0.5 7

use slider_rigidity::typed_graph::{sample_er, write_graph, ErConfig};

fn main() -> slider_rigidity::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let n: usize = arg(0, "20").parse().expect("n");
    let c: f64 = arg(1, "2.5").parse().expect("c");
    let q: f64 = arg(2, "0.5").parse().expect("q");
    let seed: u64 = arg(3, "7").parse().expect("seed");

    let g = sample_er(&ErConfig::new(n, c, q, seed))?;
    let (n1, n2) = g.type_counts();
    eprintln!("{n1} sliders, {n2} free vertices, {} edges", g.m());
    print!("{}", write_graph(&g));
    Ok(())
}
