// A small presentation typed in by hand: completion, normal forms, growth.

use qcluster::ncalg::{self, CompletionOptions, Presentation};

const TEXT: &str = "
# quantum plane with a third q-commuting variable
generators x y z
relation y x = q x y
relation z x = q^-1 x z
relation [y, z]_q = 0
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pres = Presentation::parse(TEXT)?;
    let sys = ncalg::complete(&pres, CompletionOptions::default())?;
    for (lhs, tail) in sys.rules() {
        println!(
            "{} -> {}",
            lhs.render(&pres.generators),
            tail.render(&pres.generators)
        );
    }
    let p = pres.parse_poly("z y x + (q - q^-1) x^2")?;
    println!(
        "nf(z y x + (q - q^-1) x^2) = {}",
        sys.normal_form(&p).render(&pres.generators)
    );
    let counts = sys.hilbert_counts(4);
    println!("growth {counts:?}");
    if counts != vec![1, 3, 6, 10, 15] {
        return Err("expected polynomial growth".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
