// The corank-2 example of type A_3: 14 clusters on the associahedron,
// with mutable variables labelled by almost positive roots.

use qcluster::catalog;
use qcluster::exgraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seed = catalog::builtin_seed("uqn12minus")?.seed;
    let graph = exgraph::enumerate(&seed, 1000)?;
    println!(
        "{} clusters, {} edges, type {}",
        graph.vertex_count(),
        graph.undirected_edges().len(),
        graph.classify()
    );
    if (0..graph.vertex_count()).any(|v| graph.degree(v) != 3) {
        return Err("graph is not 3-regular".into());
    }

    let path = exgraph::path_order(&seed).ok_or("principal part is not a path")?;
    let roots = exgraph::almost_positive_roots(&path);
    let (mutable, _) = graph.collect_variables();
    let mut seen = Vec::new();
    for v in &mutable {
        let d = exgraph::denominator_vector(&v.expansion, &seed);
        println!("  {:6} {}", v.label, exgraph::render_root(&d));
        seen.push(d);
    }
    seen.sort();
    let mut want = roots.clone();
    want.sort();
    if seen != want {
        return Err("denominator vectors do not match the almost positive roots".into());
    }

    let dot = graph.to_dot();
    println!("{}", dot.lines().take(4).collect::<Vec<_>>().join("\n"));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
