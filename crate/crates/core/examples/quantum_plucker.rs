// Quantum Pluecker coordinates as quantum minors, and a three-term relation
// checked in the quantum 2x5 matrix algebra.

use qcluster::catalog;
use qcluster::ncalg::{self, quantum_minor, CompletionOptions, NcPoly, RowOrder};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pres = catalog::builtin_algebra("cq_m25")?;
    let sys = ncalg::complete(&pres, CompletionOptions::default())?;
    println!(
        "C_q[M(2,5)]: {} generators, {} rules",
        pres.generators.len(),
        sys.rule_count()
    );

    let x: Vec<Vec<NcPoly>> = (1..=2)
        .map(|r| {
            (1..=5)
                .map(|c| pres.generator(&format!("x{r}{c}")).unwrap())
                .collect()
        })
        .collect();
    let d = |i: usize, j: usize| quantum_minor(&x, &[i - 1, j - 1], RowOrder::TopFirst);
    println!("D12 = {}", d(1, 2).render(&pres.generators));

    // D13 D24 = q^-1 D12 D34 + q D14 D23
    let lhs = d(1, 3).mul(&d(2, 4));
    let q = |s: &str| s.parse::<qcluster::QScalar>().unwrap();
    let rhs = d(1, 2)
        .mul(&d(3, 4))
        .scale(&q("q^-1"))
        .add(&d(1, 4).mul(&d(2, 3)).scale(&q("q")));
    let holds = sys.verify_identity(&lhs, &rhs)?;
    println!("D13 D24 = q^-1 D12 D34 + q D14 D23: {holds}");
    if !holds {
        return Err("Pluecker relation failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
