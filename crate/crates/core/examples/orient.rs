//! Orient a graph under the in-degree caps, or find the dense set that
//! blocks it, and compute a maximum orientation.

use slider_rigidity::orientation::{find_orientation, max_orientable_edges, OrientationOutcome};
use slider_rigidity::{TypedGraph, VertexType};

fn main() -> slider_rigidity::Result<()> {
    // four sliders in a K4: 6 edges, room for 4
    let mut types = vec![VertexType::Slider; 4];
    types.push(VertexType::Free);
    let g = TypedGraph::new(
        types,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
    )?;

    match find_orientation(&g) {
        OrientationOutcome::Orientable(o) => {
            println!("orientable, in-degrees {:?}", o.in_degrees(g.n()))
        }
        OrientationOutcome::Dense(w) => {
            println!(
                "not orientable: {:?} has {} edges and {} slots",
                w.vertices,
                w.m,
                w.capacity()
            );
        }
    }
    let max = max_orientable_edges(&g);
    println!(
        "maximum orientation keeps {} of {} edges (gap {})",
        max.size,
        g.m(),
        max.gap()
    );

    let triangle = TypedGraph::complete(vec![VertexType::Free; 3]);
    println!(
        "free triangle orientable: {}",
        find_orientation(&triangle).is_orientable()
    );
    Ok(())
}
