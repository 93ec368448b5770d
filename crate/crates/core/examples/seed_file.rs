// Writing a seed to TOML, reading it back, and the errors for bad input.

use qcluster::catalog;
use qcluster::seedfile::SeedFile;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seed = catalog::builtin_seed("gr25")?.seed;
    let text = SeedFile::from_seed(&seed).to_toml();
    print!("{text}");
    let back = SeedFile::parse(&text)?.to_seed()?;
    if back != seed {
        return Err("round trip changed the seed".into());
    }

    let bad = "names = [\"a\", \"b\"]\nmutable = [0]\nB = [[0], [1]]\nL = [[0, 1], [1, 0]]\n";
    match SeedFile::parse(bad)?.to_seed() {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("non-skew L accepted".into()),
    }
    match SeedFile::parse("names = [\"a\"]\nmutable = \"zero\"\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("malformed file accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
