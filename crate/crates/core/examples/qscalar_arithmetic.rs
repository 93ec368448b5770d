// Exact arithmetic in Z[q^(1/2), q^(-1/2)].

use qcluster::QScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q: QScalar = "q".parse()?;
    let qinv: QScalar = "q^-1".parse()?;
    let half: QScalar = "q^(1/2)".parse()?;

    let diff = &q - &qinv;
    println!("q - q^-1 = {diff}");
    println!("(q - q^-1)^2 = {}", &diff * &diff);
    println!("q^(1/2) * q^(1/2) = {}", &half * &half);

    // (q^2 - q^-2) / (q - q^-1) = q + q^-1
    let num: QScalar = "q^2 - q^-2".parse()?;
    let quo = num.div_exact(&diff).ok_or("inexact")?;
    println!("(q^2 - q^-2) / (q - q^-1) = {quo}");
    if quo != &q + &qinv {
        return Err("wrong quotient".into());
    }
    if half.unit_inverse() != Some(QScalar::qpow(-1)) {
        return Err("q^(1/2) should invert to q^(-1/2)".into());
    }
    println!(
        "classical limit of (q - q^-1)^2 + 3: {}",
        (&diff * &diff + QScalar::from(3)).eval_at_one()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
