mod qscalar_arithmetic {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/qscalar_arithmetic.rs"
    ));
}

#[test]
fn qscalar_arithmetic_runs() {
    qscalar_arithmetic::run_example().expect("qscalar_arithmetic example should run");
}

mod matrix_mutation {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/matrix_mutation.rs"
    ));
}

#[test]
fn matrix_mutation_runs() {
    matrix_mutation::run_example().expect("matrix_mutation example should run");
}

mod sl2_exchange {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sl2_exchange.rs"
    ));
}

#[test]
fn sl2_exchange_runs() {
    sl2_exchange::run_example().expect("sl2_exchange example should run");
}

mod grassmannian_pentagon {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/grassmannian_pentagon.rs"
    ));
}

#[test]
fn grassmannian_pentagon_runs() {
    grassmannian_pentagon::run_example().expect("grassmannian_pentagon example should run");
}

mod quantum_plucker {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/quantum_plucker.rs"
    ));
}

#[test]
fn quantum_plucker_runs() {
    quantum_plucker::run_example().expect("quantum_plucker example should run");
}

mod verify_catalog {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_catalog.rs"
    ));
}

#[test]
fn verify_catalog_runs() {
    verify_catalog::run_example().expect("verify_catalog example should run");
}

mod b_algebra_hilbert {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/b_algebra_hilbert.rs"
    ));
}

#[test]
fn b_algebra_hilbert_runs() {
    b_algebra_hilbert::run_example().expect("b_algebra_hilbert example should run");
}

mod associahedron {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/associahedron.rs"
    ));
}

#[test]
fn associahedron_runs() {
    associahedron::run_example().expect("associahedron example should run");
}

mod seed_file {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/seed_file.rs"
    ));
}

#[test]
fn seed_file_runs() {
    seed_file::run_example().expect("seed_file example should run");
}

mod presented_algebra {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/presented_algebra.rs"
    ));
}

#[test]
fn presented_algebra_runs() {
    presented_algebra::run_example().expect("presented_algebra example should run");
}
