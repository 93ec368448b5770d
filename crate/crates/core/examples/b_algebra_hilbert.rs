// Growth of the b-algebra, a cubic (non-quadratic) presentation, compared
// with the series 1/((1-t)^4 (1-t^2)^3).

use qcluster::catalog;
use qcluster::ncalg::{self, CompletionOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pres = catalog::builtin_algebra("uqn12_b")?;
    print!("{}", pres.to_text());
    let sys = ncalg::complete(
        &pres,
        CompletionOptions {
            degree_bound: 8,
            ..Default::default()
        },
    )?;
    println!(
        "{} rules up to degree {}",
        sys.rule_count(),
        sys.degree_bound()
    );

    let counts = sys.hilbert_counts(6);
    let mut series = vec![0u64; 7];
    series[0] = 1;
    for d in [1, 1, 1, 1, 2, 2, 2] {
        for i in d..series.len() {
            series[i] += series[i - d];
        }
    }
    for (deg, (c, s)) in counts.iter().zip(&series).enumerate() {
        println!("degree {deg}: {c} normal words, series {s}");
    }
    if counts != series {
        return Err("Hilbert series mismatch".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
