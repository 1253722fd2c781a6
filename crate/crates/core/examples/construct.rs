//! Minimally rigid graphs for given type counts, and the number of cross
//! edges that merges two rigid components.

use slider_rigidity::rigidity::{
    construct_minimally_rigid, edges_to_merge, is_minimally_rigid, retype_to_slider,
};

fn main() -> slider_rigidity::Result<()> {
    for (n1, n2) in [(3, 0), (2, 2), (1, 2), (0, 4), (4, 3)] {
        let g = construct_minimally_rigid(n1, n2)?;
        println!(
            "({n1}, {n2}): {} edges, minimally rigid: {}",
            g.m(),
            is_minimally_rigid(&g)
        );
    }

    let g = construct_minimally_rigid(1, 3)?;
    let h = retype_to_slider(&g, 1)?;
    println!(
        "retyped vertex 1 of (1, 3): minimally rigid: {}",
        is_minimally_rigid(&h)
    );

    println!("\ncross edges needed (rows i, columns j, no shared vertex)");
    for i in 0..=4 {
        let row: Vec<String> = (0..=4)
            .map(|j| edges_to_merge(i, j, 0).map_or("-".into(), |k| k.to_string()))
            .collect();
        println!("  {i}: {}", row.join(" "));
    }
    println!("sharing a slider, (1, 1): {}", edges_to_merge(1, 1, 1)?);
    println!(
        "sharing a free vertex, (3, 2): {:?}",
        edges_to_merge(3, 2, 2).is_err()
    );
    Ok(())
}
