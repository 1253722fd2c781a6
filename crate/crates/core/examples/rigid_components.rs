//! Rigid component decomposition of small hand-made graphs and of a random
//! graph above the rigidity threshold.

use slider_rigidity::asymptotics::c_star;
use slider_rigidity::rigidity::{is_rigid, maximal_block_of_edge, rank, rigid_components};
use slider_rigidity::typed_graph::{sample_er, ErConfig};
use slider_rigidity::{TypedGraph, VertexType};

fn main() -> slider_rigidity::Result<()> {
    use VertexType::{Free, Slider};

    // two disjoint slider triangles are rigid together
    let two = TypedGraph::new(
        vec![Slider; 6],
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
    )?;
    let d = rigid_components(&two);
    println!(
        "two slider triangles: {} component(s), sizes {:?}",
        d.components.len(),
        sizes(&d.components)
    );
    println!(
        "  it is not connected: largest connected component {}, largest connected piece {}",
        d.largest_connected_size(),
        d.largest_piece_size()
    );

    // free bowtie: two triangles sharing a vertex stay separate
    let bowtie = TypedGraph::new(
        vec![Free; 5],
        [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
    )?;
    println!(
        "bowtie block of edge 0: {:?}",
        maximal_block_of_edge(&bowtie, 0)?
    );
    println!(
        "bowtie rigid: {}, rank {}",
        is_rigid(&bowtie),
        rank(&bowtie)?.rank
    );

    let q = 0.75;
    let c = c_star(q)? + 0.3;
    let g = sample_er(&ErConfig::new(2000, c, q, 4))?;
    let d = rigid_components(&g);
    println!(
        "q = {q}, c = {c:.3}: largest rigid component covers {:.3} of the vertices",
        d.largest_size() as f64 / 2000.0
    );
    Ok(())
}

fn sizes(components: &[slider_rigidity::rigidity::RigidComponent]) -> Vec<usize> {
    components.iter().map(|c| c.size()).collect()
}
