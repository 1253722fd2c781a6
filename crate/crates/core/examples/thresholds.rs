//! Threshold curves: c̃(q), c*(q) and 1/(1−q) on a grid of q.

use slider_rigidity::asymptotics::{c_star, c_tilde, ThresholdReport};

fn main() -> slider_rigidity::Result<()> {
    println!(
        "{:>5} {:>10} {:>10} {:>10}",
        "q", "c_tilde", "c_star", "1/(1-q)"
    );
    for k in 0..=10 {
        let q = k as f64 / 10.0;
        let bound = if q < 1.0 {
            format!("{:10.4}", 1.0 / (1.0 - q))
        } else {
            format!("{:>10}", "inf")
        };
        println!("{q:5.2} {:10.4} {:10.4} {bound}", c_tilde(q)?, c_star(q)?);
    }
    println!();
    print!("{}", ThresholdReport::new(1.0, Some(3.9))?);
    Ok(())
}
