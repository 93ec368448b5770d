// Verifies every builtin example inside its presented algebra.
//
// `cargo run --example verify_catalog -- gr25` limits the run to one example.

use qcluster::catalog;

const EXAMPLES: &[&str] = &["sl2", "gr25", "uqn2minus", "uqn12minus", "projective(3)"];

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(EXAMPLES)?;
    Ok(())
}

/// Returns the labels of failing checks.
fn run(names: &[&str]) -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let mut failing = Vec::new();
    for name in names {
        let report = catalog::verify_example(name, 8)?;
        print!("{}", report.render());
        println!();
        failing.extend(report.failures().map(|c| format!("{name}: {}", c.label)));
    }
    Ok(failing)
}

#[allow(dead_code)]
fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        EXAMPLES.to_vec()
    } else {
        args.iter().map(String::as_str).collect()
    };
    let failing = run(&names).unwrap();
    for f in &failing {
        println!("failing: {f}");
    }
    std::process::exit(if failing.is_empty() { 0 } else { 4 });
}
