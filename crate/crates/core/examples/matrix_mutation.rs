// Exchange matrix mutation, quivers and the compatibility diagnosis.

use qcluster::catalog;
use qcluster::seed::ExchangeMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let b = ExchangeMatrix::square(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]])?;
    let mu1 = b.mutate(0)?;
    let mu2 = b.mutate(1)?;
    println!("B        = {:?}", b.entries());
    println!("mu_1(B)  = {:?}", mu1.entries());
    println!("mu_2(B)  = {:?}", mu2.entries());
    if mu1.entries() != &vec![vec![0, -1, 0], vec![1, 0, 1], vec![0, -1, 0]]
        || mu2.entries() != &vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]
    {
        return Err("unexpected mutation".into());
    }
    if mu2.mutate(1)? != b {
        return Err("mutation is not an involution".into());
    }

    for name in ["sl2", "gr25", "uqn12minus"] {
        let seed = catalog::builtin_seed(name)?.seed;
        let prod = seed
            .exchange_matrix()
            .transpose_times(seed.quasi_commutation());
        println!("{name}: quiver {}", seed.quiver());
        println!(
            "{name}: B^T L = {prod:?}, diagonal {:?}",
            seed.compatibility()?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
