// The quantum Grassmannian Gr(2,5): five clusters forming a pentagon.

use qcluster::catalog;
use qcluster::exgraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seed = catalog::builtin_seed("gr25")?.seed;
    let graph = exgraph::enumerate(&seed, 100)?;
    let (mutable, frozen) = graph.collect_variables();
    println!(
        "{} clusters, {} mutation arrows, {} variables ({} frozen), type {}",
        graph.vertex_count(),
        graph.directed_edge_count(),
        mutable.len() + frozen.len(),
        frozen.len(),
        graph.classify()
    );
    for e in &graph.edges {
        let from = &graph.vertices[e.from];
        let (_, new_name) = graph.exchanged(e);
        println!(
            "  {} -> {}: {}",
            e.from,
            e.to,
            e.relation.render(from.names(), new_name)
        );
    }
    if graph.vertex_count() != 5 || graph.directed_edge_count() != 10 {
        return Err("expected a pentagon".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
