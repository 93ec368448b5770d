// The one-step exchange in the quantum coordinate ring of SL_2.

use qcluster::catalog;
use qcluster::exgraph;
use qcluster::torus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seed = catalog::builtin_seed("sl2")?.seed;
    let relation = torus::exchange_relation(&seed, 0)?;
    println!("{}", relation.render(seed.names(), "d"));

    let d = torus::exchange_variable(&seed, 0)?;
    println!("d = {}", d.render(seed.names()));
    // Coefficients of the ordered products a^-1 and a^-1 b c.
    let terms = d.ordered_terms();
    for (c, a) in &terms {
        println!("  {c} * X^{a:?}");
    }
    let expected = [("1", vec![-1, 0, 0]), ("q", vec![-1, 1, 1])];
    for (want_c, want_a) in expected {
        let c: qcluster::QScalar = want_c.parse()?;
        if !terms.iter().any(|(tc, ta)| *tc == c && *ta == want_a) {
            return Err(format!("missing term {want_c} * X^{want_a:?}").into());
        }
    }

    let graph = exgraph::enumerate(&seed, 100)?;
    println!("exchange graph: {} vertices", graph.vertex_count());
    for v in 0..graph.vertex_count() {
        println!("  ({})", graph.vertices[v].names().join(", "));
    }
    if graph.vertex_count() != 2 {
        return Err("expected two clusters".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
