//! Builtin seeds, presented algebras and the realizations tying them together.
//!
//! Seeds: `sl2`, `gr25`, `n2minus`, `uqn2minus`, `uqn12minus`, `projective(n)`.
//! Algebras: `cq_sl2`, `cq_m25`, `uqn2_g`, `uqn12_b`, `symq(m)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{AlgebraError, Error};
use crate::exgraph::{self, ClusterType};
use crate::ncalg::{
    self, quantum_minor, CompletionOptions, NcPoly, Presentation, RewriteSystem, RowOrder,
};
use crate::qscalar::QScalar;
use crate::seed::{ExchangeMatrix, IntMatrix, QuantumSeed, QuasiCommutationMatrix};
use crate::torus::ExchangeRelation;

pub const SEED_NAMES: &[&str] = &[
    "sl2",
    "gr25",
    "n2minus",
    "uqn2minus",
    "uqn12minus",
    "projective(n)",
];
pub const ALGEBRA_NAMES: &[&str] = &["cq_sl2", "cq_m25", "uqn2_g", "uqn12_b", "symq(m)"];

/// An exchange relation expected after mutating along `path` (cluster rows,
/// applied left to right) and then at `row`.
#[derive(Clone, Debug)]
pub struct ExpectedRelation {
    pub path: Vec<usize>,
    pub row: usize,
    /// `(half_exponent, rows)` for each side term.
    pub terms: [(i64, Vec<usize>); 2],
    /// Candidate label and half-exponent scalar of the new variable.
    pub yields: Option<(&'static str, i64)>,
}

#[derive(Clone, Debug)]
pub struct Expected {
    pub diagonal: Vec<i64>,
    pub vertices: usize,
    pub directed_edges: usize,
    pub mutable_variables: usize,
    pub frozen_variables: usize,
    pub cluster_type: ClusterType,
    pub relations: Vec<ExpectedRelation>,
    /// Mutable variables (identified labels) paired with roots, in a fixed order.
    pub root_order: Vec<(String, Vec<i64>)>,
}

/// A named algebra element used for an identity check beyond the exchange relations.
#[derive(Clone, Debug)]
pub struct Identity {
    pub label: String,
    pub lhs: NcPoly,
    pub rhs: NcPoly,
    /// Shown in reports next to the result.
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub algebra: String,
    pub presentation: Presentation,
    /// Image of each seed variable, by row.
    pub images: Vec<NcPoly>,
    /// Elements new cluster variables may be identified with (up to a unit).
    pub candidates: Vec<(String, NcPoly)>,
    pub identities: Vec<Identity>,
}

#[derive(Clone, Debug)]
pub struct ExampleBundle {
    pub name: String,
    pub seed: QuantumSeed,
    pub realization: Option<Realization>,
    pub expected: Expected,
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn seed(labels: &[&str], b: IntMatrix, mutable: Vec<usize>, l: IntMatrix) -> QuantumSeed {
    QuantumSeed::initial(
        names(labels),
        ExchangeMatrix::new(b, mutable).expect("builtin B"),
        QuasiCommutationMatrix::new(l).expect("builtin L"),
    )
    .expect("builtin seed")
}

fn roots(pairs: &[(&str, &[i64])]) -> Vec<(String, Vec<i64>)> {
    pairs
        .iter()
        .map(|(l, r)| (l.to_string(), r.to_vec()))
        .collect()
}

fn rel(
    path: &[usize],
    row: usize,
    a: (i64, &[usize]),
    b: (i64, &[usize]),
    yields: Option<(&'static str, i64)>,
) -> ExpectedRelation {
    ExpectedRelation {
        path: path.to_vec(),
        row,
        terms: [(a.0, a.1.to_vec()), (b.0, b.1.to_vec())],
        yields,
    }
}

/// Parses `projective(n)` and `symq(m)`-style names.
fn parse_indexed(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .trim()
        .parse()
        .ok()
}

pub fn builtin_seed(name: &str) -> Result<ExampleBundle, Error> {
    if let Some(n) = parse_indexed(name, "projective") {
        return Ok(projective(n));
    }
    match name {
        "sl2" => Ok(sl2()),
        "gr25" => Ok(gr25()),
        "n2minus" => Ok(n2(false)),
        "uqn2minus" => Ok(n2(true)),
        "uqn12minus" => Ok(uqn12()),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

pub fn builtin_algebra(name: &str) -> Result<Presentation, Error> {
    if let Some(m) = parse_indexed(name, "symq") {
        return Ok(symq(m));
    }
    let text = match name {
        "cq_sl2" => CQ_SL2.to_string(),
        "cq_m25" => quantum_matrices("x", 5, false),
        "uqn2_g" => quantum_matrices("g", 3, true),
        "uqn12_b" => UQN12_B.to_string(),
        _ => return Err(Error::UnknownExample(name.to_string())),
    };
    Ok(Presentation::parse(&text)?)
}

const CQ_SL2: &str = "
generators a b c d
relation [a, b]_q = 0
relation [a, c]_q = 0
relation [d, b]_{q^-1} = 0
relation [d, c]_{q^-1} = 0
relation [b, c] = 0
relation a d = 1 + q b c
relation d a = 1 + q^-1 b c
";

const UQN12_B: &str = "
generators b12 b23 b24 b25
relation [b23, b24]_q = 0
relation [b23, b25]_q = 0
relation [b24, b25]_q = 0
relation [b12, [b12, b23]_q]_{q^-1} = 0
relation [b12, [b12, b24]_q]_{q^-1} = 0
relation [b12, [b12, b25]_q]_{q^-1} = 0
relation [b23, [b23, b12]_q]_{q^-1} = 0
relation [b24, [b24, b12]_q]_{q^-1} = 0
relation [b25, [b25, b12]_q]_{q^-1} = 0
adjoined [[b24, b12]_q, b23] = 0
adjoined [[b25, b12]_q, b23] = 0
adjoined [[b25, b12]_q, b24] = 0
define b13 = [b23, b12]_q
define b14 = [b24, b12]_q
define b15 = [b25, b12]_q
";

/// Quantum `2 x n` matrices on `{p}1i, {p}2i`; with `flag_cross` the
/// relation between `{p}1i` and `{p}2j` is marked as adjoined.
fn quantum_matrices(p: &str, n: usize, flag_cross: bool) -> String {
    let gens: Vec<String> = (1..=2)
        .flat_map(|r| (1..=n).map(move |c| format!("{p}{r}{c}")))
        .collect();
    let mut out = format!("generators {}\n", gens.join(" "));
    for i in 1..=n {
        for j in i + 1..=n {
            let _ = writeln!(out, "relation [{p}1{i}, {p}1{j}]_q = 0");
            let _ = writeln!(out, "relation [{p}2{i}, {p}2{j}]_q = 0");
            let _ = writeln!(out, "relation [{p}2{i}, {p}1{j}] = 0");
            let kw = if flag_cross { "adjoined" } else { "relation" };
            let _ = writeln!(out, "{kw} [{p}1{i}, {p}2{j}] = (q - q^-1) {p}1{j} {p}2{i}");
        }
        let _ = writeln!(out, "relation [{p}1{i}, {p}2{i}]_q = 0");
    }
    out
}

/// Quantum symmetric algebra: `x_i x_j = q x_j x_i` for `i < j`.
fn symq(m: usize) -> Presentation {
    let mut pres = Presentation::default();
    for i in 1..=m {
        pres.add_generator(&format!("x{i}")).expect("fresh name");
    }
    for i in 1..=m {
        for j in i + 1..=m {
            pres.add_relation(&format!("[x{i}, x{j}]_q = 0"), false)
                .expect("well formed");
        }
    }
    pres
}

fn gen(p: &Presentation, name: &str) -> NcPoly {
    p.generator(name)
        .or_else(|| p.definition(name).cloned())
        .unwrap_or_else(|| panic!("builtin symbol {name}"))
}

fn expr(p: &Presentation, text: &str) -> NcPoly {
    p.parse_poly(text).expect("builtin expression")
}

/// All `2 x 2` minors on columns `i < j` (1-based labels `D{i}{j}`).
fn minors(
    rows: &[Vec<NcPoly>],
    order: RowOrder,
    scale: &QScalar,
    skip: &[(usize, usize)],
) -> Vec<(String, NcPoly)> {
    let n = rows[0].len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if skip.contains(&(i + 1, j + 1)) {
                continue;
            }
            let m = quantum_minor(rows, &[i, j], order).scale(scale);
            out.push((format!("D{}{}", i + 1, j + 1), m));
        }
    }
    out
}

fn images_from(candidates: &[(String, NcPoly)], labels: &[String]) -> Vec<NcPoly> {
    labels
        .iter()
        .map(|l| {
            candidates
                .iter()
                .find(|(c, _)| c == l)
                .map(|(_, p)| p.clone())
                .unwrap_or_else(|| panic!("no minor labeled {l}"))
        })
        .collect()
}

fn sl2() -> ExampleBundle {
    let seed = seed(
        &["a", "b", "c"],
        vec![vec![0], vec![-1], vec![-1]],
        vec![0],
        vec![vec![0, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]],
    );
    let p = builtin_algebra("cq_sl2").expect("builtin");
    let images = vec![gen(&p, "a"), gen(&p, "b"), gen(&p, "c")];
    let identities = vec![
        Identity {
            label: "da = 1 + q^-1 bc".into(),
            lhs: expr(&p, "d a"),
            rhs: expr(&p, "1 + q^-1 b c"),
            note: None,
        },
        Identity {
            label: "ad - da = (q - q^-1) bc".into(),
            lhs: expr(&p, "a d - d a"),
            rhs: expr(&p, "(q - q^-1) b c"),
            note: None,
        },
    ];
    ExampleBundle {
        name: "sl2".into(),
        realization: Some(Realization {
            algebra: "cq_sl2".into(),
            candidates: vec![("d".into(), gen(&p, "d"))],
            presentation: p,
            images,
            identities,
        }),
        expected: Expected {
            diagonal: vec![2],
            vertices: 2,
            directed_edges: 2,
            mutable_variables: 2,
            frozen_variables: 2,
            cluster_type: ClusterType::A(1),
            relations: vec![rel(&[], 0, (0, &[]), (2, &[1, 2]), Some(("d", 0)))],
            root_order: roots(&[("d", &[1]), ("a", &[-1])]),
        },
        seed,
    }
}

fn gr25() -> ExampleBundle {
    let labels = ["D15", "D14", "D13", "D12", "D23", "D34", "D45"];
    let seed = seed(
        &labels,
        vec![
            vec![-1, 0],
            vec![0, -1],
            vec![1, 0],
            vec![0, 1],
            vec![0, -1],
            vec![-1, 1],
            vec![1, 0],
        ],
        vec![1, 2],
        vec![
            vec![0, -1, -1, -1, 0, 0, 1],
            vec![1, 0, -1, -1, 0, 1, 1],
            vec![1, 1, 0, -1, 1, 1, 2],
            vec![1, 1, 1, 0, 1, 2, 2],
            vec![0, 0, -1, -1, 0, 1, 2],
            vec![0, -1, -1, -2, -1, 0, 1],
            vec![-1, -1, -2, -2, -2, -1, 0],
        ],
    );
    let p = builtin_algebra("cq_m25").expect("builtin");
    let rows: Vec<Vec<NcPoly>> = (1..=2)
        .map(|r| (1..=5).map(|c| gen(&p, &format!("x{r}{c}"))).collect())
        .collect();
    let candidates = minors(&rows, RowOrder::TopFirst, &QScalar::one(), &[]);
    let images = images_from(&candidates, &names(&labels));
    let d = |l: &str| {
        candidates
            .iter()
            .find(|(c, _)| c == l)
            .expect("minor")
            .1
            .clone()
    };
    let plucker = Identity {
        label: "D14 D35 = q^-1 D13 D45 + q D15 D34".into(),
        lhs: d("D14").mul(&d("D35")),
        rhs: d("D13")
            .mul(&d("D45"))
            .scale(&QScalar::qpow(-2))
            .add(&d("D15").mul(&d("D34")).scale(&QScalar::qpow(2))),
        note: None,
    };
    ExampleBundle {
        name: "gr25".into(),
        realization: Some(Realization {
            algebra: "cq_m25".into(),
            presentation: p,
            images,
            candidates,
            identities: vec![plucker],
        }),
        expected: Expected {
            diagonal: vec![2, 2],
            vertices: 5,
            directed_edges: 10,
            mutable_variables: 5,
            frozen_variables: 5,
            cluster_type: ClusterType::A(2),
            relations: vec![
                rel(&[], 1, (-2, &[2, 6]), (2, &[0, 5]), Some(("D35", 0))),
                rel(&[], 2, (-2, &[3, 5]), (2, &[1, 4]), Some(("D24", 0))),
                rel(&[2], 1, (-2, &[3, 6]), (2, &[0, 2]), Some(("D25", 0))),
            ],
            root_order: roots(&[
                ("D35", &[1, 0]),
                ("D25", &[1, 1]),
                ("D24", &[0, 1]),
                ("D14", &[-1, 0]),
                ("D13", &[0, -1]),
            ]),
        },
        seed,
    }
}

/// The seed shared by `n2minus` and `uqn2minus`; with `realize`, the cluster
/// variables are `q` times `q^-1`-minors of the bordered `g` matrix.
fn n2(realize: bool) -> ExampleBundle {
    let labels = ["D15", "D14", "D13", "D23", "D34", "D45"];
    let seed = seed(
        &labels,
        vec![
            vec![-1, 0],
            vec![0, -1],
            vec![1, 0],
            vec![0, -1],
            vec![-1, 1],
            vec![1, 0],
        ],
        vec![1, 2],
        vec![
            vec![0, -1, -1, 0, -1, 0],
            vec![1, 0, -1, 0, 0, 0],
            vec![1, 1, 0, 1, 0, 1],
            vec![0, 0, -1, 0, 0, 1],
            vec![1, 0, 0, 0, 0, 1],
            vec![0, 0, -1, -1, -1, 0],
        ],
    );
    let realization = realize.then(|| {
        let p = builtin_algebra("uqn2_g").expect("builtin");
        let zero = NcPoly::zero();
        let one = NcPoly::one();
        let rows = vec![
            vec![zero.clone(), one.clone(), gen(&p, "g11"), gen(&p, "g12"), gen(&p, "g13")],
            vec![one.scale(&QScalar::from(-1)), zero, gen(&p, "g21"), gen(&p, "g22"), gen(&p, "g23")],
        ];
        let candidates = minors(&rows, RowOrder::BottomFirst, &QScalar::qpow(2), &[(1, 2)]);
        let images = images_from(&candidates, &names(&labels));
        let displayed = Identity {
            label: "q g12 g11 g23 - g12 g13 g21 = g11 g12 g23 - q^-1 g11 g13 g22 + q^2 g13 g11 g22 - q g13 g12 g21".into(),
            lhs: expr(&p, "q g12 g11 g23 - g12 g13 g21"),
            rhs: expr(&p, "g11 g12 g23 - q^-1 g11 g13 g22 + q^2 g13 g11 g22 - q g13 g12 g21"),
            note: Some("relation as displayed for the first exchange".into()),
        };
        let derived = Identity {
            label: "q g12 g11 g23 - q^2 g12 g13 g21 = g11 g12 g23 - q g11 g13 g22 + q^2 g13 g11 g22 - q^3 g13 g12 g21".into(),
            lhs: expr(&p, "q g12 g11 g23 - q^2 g12 g13 g21"),
            rhs: expr(&p, "g11 g12 g23 - q g11 g13 g22 + q^2 g13 g11 g22 - q^3 g13 g12 g21"),
            note: Some("first exchange relation expanded by the engine".into()),
        };
        Realization {
            algebra: "uqn2_g".into(),
            presentation: p,
            images,
            candidates,
            identities: vec![displayed, derived],
        }
    });
    ExampleBundle {
        name: if realize { "uqn2minus" } else { "n2minus" }.into(),
        seed,
        realization,
        expected: Expected {
            diagonal: vec![2, 2],
            vertices: 5,
            directed_edges: 10,
            mutable_variables: 5,
            frozen_variables: 4,
            cluster_type: ClusterType::A(2),
            relations: vec![
                rel(&[], 1, (-2, &[2, 5]), (2, &[0, 4]), Some(("D35", 0))),
                rel(&[], 2, (0, &[4]), (2, &[1, 3]), Some(("D24", 0))),
                rel(&[2], 1, (0, &[5]), (2, &[0, 2]), Some(("D25", 0))),
            ],
            root_order: roots(&[
                ("D35", &[1, 0]),
                ("D25", &[1, 1]),
                ("D24", &[0, 1]),
                ("D14", &[-1, 0]),
                ("D13", &[0, -1]),
            ]),
        },
    }
}

fn uqn12() -> ExampleBundle {
    let labels = ["D15", "D14", "D13", "D23", "D34", "D45", "D56"];
    let seed = seed(
        &labels,
        vec![
            vec![0, -1, 0],
            vec![1, 0, -1],
            vec![0, 1, 0],
            vec![0, 0, -1],
            vec![0, -1, 1],
            vec![-1, 1, 0],
            vec![1, 0, 0],
        ],
        vec![0, 1, 2],
        vec![
            vec![0, -1, -1, 0, -1, 0, -1],
            vec![1, 0, -1, 0, 0, 0, 0],
            vec![1, 1, 0, 1, 0, 1, 0],
            vec![0, 0, -1, 0, 0, 1, 1],
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 0, -1, -1, -1, 0, 0],
            vec![1, 0, 0, -1, -1, 0, 0],
        ],
    );
    let p = builtin_algebra("uqn12_b").expect("builtin");
    let (zero, one) = (NcPoly::zero(), NcPoly::one());
    let rows = vec![
        vec![
            one.clone(),
            expr(&p, "(1 - q^2) b12"),
            gen(&p, "b13"),
            gen(&p, "b14"),
            gen(&p, "b15"),
            zero.clone(),
        ],
        vec![
            zero,
            one.clone(),
            gen(&p, "b23"),
            gen(&p, "b24"),
            gen(&p, "b25"),
            one,
        ],
    ];
    let candidates = minors(&rows, RowOrder::TopFirst, &QScalar::one(), &[]);
    let images = images_from(&candidates, &names(&labels));
    let initial_forms = Identity {
        label: "D34 = b23 b12 b24 - q b24 b12 b23".into(),
        lhs: images[4].clone(),
        rhs: expr(&p, "b23 b12 b24 - q b24 b12 b23"),
        note: None,
    };
    let d23 = Identity {
        label: "D23 = [b12, b23]_q".into(),
        lhs: images[3].clone(),
        rhs: expr(&p, "[b12, b23]_q"),
        note: None,
    };
    ExampleBundle {
        name: "uqn12minus".into(),
        realization: Some(Realization {
            algebra: "uqn12_b".into(),
            presentation: p,
            images,
            candidates,
            identities: vec![d23, initial_forms],
        }),
        expected: Expected {
            diagonal: vec![2, 2, 2],
            vertices: 14,
            directed_edges: 42,
            mutable_variables: 9,
            frozen_variables: 4,
            cluster_type: ClusterType::A(3),
            relations: vec![
                rel(&[], 0, (-2, &[1, 6]), (0, &[5]), Some(("D46", 0))),
                rel(&[], 1, (-2, &[2, 5]), (2, &[0, 4]), Some(("D35", 0))),
                rel(&[], 2, (0, &[4]), (2, &[1, 3]), Some(("D24", 0))),
                rel(&[0], 1, (-2, &[0, 2]), (0, &[4]), Some(("D36", 0))),
                rel(&[1], 2, (0, &[1]), (2, &[0, 3]), Some(("D25", 0))),
                rel(&[0, 1], 2, (-1, &[1]), (1, &[3]), Some(("D26", -1))),
            ],
            root_order: roots(&[
                ("D46", &[1, 0, 0]),
                ("D36", &[1, 1, 0]),
                ("D35", &[0, 1, 0]),
                ("q^(-1/2)*D26", &[1, 1, 1]),
                ("D25", &[0, 1, 1]),
                ("D24", &[0, 0, 1]),
                ("D15", &[-1, 0, 0]),
                ("D14", &[0, -1, 0]),
                ("D13", &[0, 0, -1]),
            ]),
        },
        seed,
    }
}

fn projective(n: usize) -> ExampleBundle {
    let m = n + 1;
    let labels: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let l = (0..m)
        .map(|i| (0..m).map(|j| (j > i) as i64 - (i > j) as i64).collect())
        .collect();
    let seed = QuantumSeed::initial(
        labels.clone(),
        ExchangeMatrix::new(vec![vec![]; m], vec![]).expect("rank 0"),
        QuasiCommutationMatrix::new(l).expect("skew"),
    )
    .expect("builtin seed");
    let p = symq(m);
    let images = labels.iter().map(|x| gen(&p, x)).collect();
    ExampleBundle {
        name: format!("projective({n})"),
        seed,
        realization: Some(Realization {
            algebra: format!("symq({m})"),
            presentation: p,
            images,
            candidates: Vec::new(),
            identities: Vec::new(),
        }),
        expected: Expected {
            diagonal: vec![],
            vertices: 1,
            directed_edges: 0,
            mutable_variables: 0,
            frozen_variables: m,
            cluster_type: ClusterType::A(0),
            relations: vec![],
            root_order: vec![],
        },
    }
}

/// Result of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// Nonzero normal form of `lhs - rhs` on failure.
    pub residue: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub example: String,
    pub algebra: String,
    pub degree_bound: usize,
    pub rules: usize,
    pub diagonal: Vec<i64>,
    pub vertices: usize,
    pub directed_edges: usize,
    /// Relations of the presentation flagged as adjoined.
    pub adjoined: Vec<String>,
    pub checks: Vec<Check>,
    /// `(graph label, algebra element)` for every cluster variable.
    pub identifications: Vec<(String, String)>,
    /// `(algebra element, denominator vector as a root)` for mutable variables.
    pub roots: Vec<(String, String)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "example {} in {} (degree bound {}, {} rules)",
            self.example, self.algebra, self.degree_bound, self.rules
        );
        let _ = writeln!(out, "compatibility diagonal {:?}", self.diagonal);
        let _ = writeln!(
            out,
            "exchange graph: {} vertices, {} directed edges",
            self.vertices, self.directed_edges
        );
        for a in &self.adjoined {
            let _ = writeln!(out, "adjoined relation: {a}");
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "{mark} {}", c.label);
            if let Some(n) = &c.note {
                let _ = write!(out, "  [{n}]");
            }
            out.push('\n');
            if let Some(r) = &c.residue {
                let _ = writeln!(out, "     residue: {r}");
            }
        }
        for (g, a) in &self.identifications {
            if g != a {
                let _ = writeln!(out, "{g} = {a}");
            }
        }
        for (a, r) in &self.roots {
            let _ = writeln!(out, "root {r}: {a}");
        }
        let n_ok = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{n_ok}/{} identities hold", self.checks.len());
        out
    }
}

fn unit_label(label: &str, half: i64) -> String {
    if half == 0 {
        label.to_string()
    } else {
        format!("{}*{label}", QScalar::qpow(half))
    }
}

/// Parenthesizes scaled labels so they read as single factors.
fn factor(label: &str) -> String {
    if label.contains('*') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Ordered product of the images raised to `exponent`, scaled by `q^{h/2}`.
fn realize_term(images: &[NcPoly], half: i64, exponent: &[i64]) -> NcPoly {
    let mut acc = NcPoly::scalar(QScalar::qpow(half));
    for (img, &e) in images.iter().zip(exponent) {
        if e > 0 {
            acc = acc.mul(&img.pow(e as u32));
        }
    }
    acc
}

fn realize_relation(images: &[NcPoly], r: &ExchangeRelation) -> NcPoly {
    r.terms
        .iter()
        .map(|t| realize_term(images, t.half_exponent, &t.exponent))
        .fold(NcPoly::zero(), |a, b| a.add(&b))
}

/// `s` with `target = s * base`, if one exists.
fn scalar_ratio(target: &NcPoly, base: &NcPoly) -> Option<QScalar> {
    let (w, c) = base.leading()?;
    let t = target.terms().find(|(tw, _)| *tw == w).map(|(_, c)| c)?;
    let s = t.div_exact(c)?;
    (base.scale(&s) == *target).then_some(s)
}

fn check(
    sys: &RewriteSystem,
    label: String,
    lhs: &NcPoly,
    rhs: &NcPoly,
    note: Option<String>,
) -> Result<Check, AlgebraError> {
    let residue = sys.normal_form(&lhs.sub(rhs));
    if let Some(d) = lhs.sub(rhs).degree() {
        if d > sys.degree_bound() {
            return Err(AlgebraError::DegreeBound {
                degree: d,
                bound: sys.degree_bound(),
            });
        }
    }
    Ok(Check {
        label,
        passed: residue.is_zero(),
        residue: (!residue.is_zero()).then(|| residue.render(sys.generators())),
        note,
    })
}

/// Enumerates the example's exchange graph and checks, in the realizing
/// algebra, every directed exchange relation, the quasi-commutation of the
/// initial cluster, the expected relations, and any extra identities.
pub fn verify_example(name: &str, degree_bound: usize) -> Result<VerifyReport, Error> {
    let bundle = builtin_seed(name)?;
    verify_bundle(&bundle, degree_bound)
}

pub fn verify_bundle(bundle: &ExampleBundle, degree_bound: usize) -> Result<VerifyReport, Error> {
    let real = bundle
        .realization
        .as_ref()
        .ok_or_else(|| Error::NoRealization(bundle.name.clone()))?;
    let sys = ncalg::complete(
        &real.presentation,
        CompletionOptions {
            degree_bound,
            ..Default::default()
        },
    )?;
    let graph = exgraph::enumerate(&bundle.seed, 10_000)?;
    let seed = &bundle.seed;
    let mut checks = Vec::new();

    // Quasi-commutation of the initial cluster.
    let l = seed.quasi_commutation();
    for i in 0..seed.rank() {
        for j in i + 1..seed.rank() {
            let (xi, xj) = (&real.images[i], &real.images[j]);
            let rhs = xj.mul(xi).scale(&QScalar::qpow(2 * l.get(i, j)));
            checks.push(check(
                &sys,
                format!(
                    "{} {} = q^{} {} {}",
                    seed.names()[i],
                    seed.names()[j],
                    l.get(i, j),
                    seed.names()[j],
                    seed.names()[i]
                ),
                &xi.mul(xj),
                &rhs,
                None,
            )?);
        }
    }

    // Images of graph variables, filled in as the edges reveal them.
    let mut images: BTreeMap<String, NcPoly> = BTreeMap::new();
    let mut display: BTreeMap<String, String> = BTreeMap::new();
    for (i, n) in seed.names().iter().enumerate() {
        images.insert(n.clone(), real.images[i].clone());
        display.insert(n.clone(), n.clone());
    }
    for e in &graph.edges {
        let from = &graph.vertices[e.from];
        let (old, new_label) = graph.exchanged(e);
        let new_label = new_label.to_string();
        let Some(vars) = from
            .names()
            .iter()
            .map(|n| images.get(n).cloned())
            .collect::<Option<Vec<_>>>()
        else {
            // A variable of this cluster could not be identified; already reported.
            continue;
        };
        let rhs = realize_relation(&vars, &e.relation);
        let x_old = images[old].clone();
        if !images.contains_key(&new_label) {
            let target = sys.normal_form(&rhs);
            let found = real.candidates.iter().find_map(|(cl, c)| {
                let base = sys.normal_form(&x_old.mul(c));
                scalar_ratio(&target, &base).map(|s| (cl, c, s))
            });
            match found {
                Some((cl, c, s)) => {
                    let text = match s.as_unit() {
                        Some((1, h)) => unit_label(cl, h),
                        _ => format!("({s})*{cl}"),
                    };
                    images.insert(new_label.clone(), c.scale(&s));
                    display.insert(new_label.clone(), text);
                }
                None => {
                    checks.push(Check {
                        label: format!(
                            "identify {new_label} from {}",
                            e.relation.render(from.names(), &new_label)
                        ),
                        passed: false,
                        residue: Some(target.render(sys.generators())),
                        note: Some("no candidate matches".into()),
                    });
                    continue;
                }
            }
        }
        let shown: Vec<String> = from.names().iter().map(|n| factor(&display[n])).collect();
        let label = e.relation.render(&shown, &factor(&display[&new_label]));
        let lhs = x_old.mul(&images[&new_label]);
        checks.push(check(&sys, label, &lhs, &rhs, None)?);
    }

    // Expected relations and identifications along explicit paths.
    for exp in &bundle.expected.relations {
        let mut s = seed.clone();
        for &p in &exp.path {
            s = s.mutate_row(p).map_err(Error::Graph)?.seed;
        }
        let m = s.mutate_row(exp.row).map_err(Error::Graph)?;
        let name_of = |e: &crate::torus::TorusElement| {
            let label = &graph.variable_by_expansion(e).expect("reachable").label;
            display.get(label).cloned().unwrap_or_else(|| label.clone())
        };
        let got = name_of(&m.seed.expansions().expect("tracked")[exp.row]);
        let mut ok = m.relation.matches(&exp.terms);
        if let Some((label, half)) = exp.yields {
            ok &= got == unit_label(label, half);
        }
        let path: Vec<String> = exp
            .path
            .iter()
            .chain([&exp.row])
            .map(|r| (r + 1).to_string())
            .collect();
        let shown: Vec<String> = s
            .expansions()
            .expect("tracked")
            .iter()
            .map(|e| factor(&name_of(e)))
            .collect();
        checks.push(Check {
            label: format!(
                "mutation path ({}): {}",
                path.join(", "),
                m.relation.render(&shown, &factor(&got))
            ),
            passed: ok,
            residue: None,
            note: Some("expected relation".into()),
        });
    }

    for id in &real.identities {
        checks.push(check(
            &sys,
            id.label.clone(),
            &id.lhs,
            &id.rhs,
            id.note.clone(),
        )?);
    }

    let roots = graph
        .collect_variables()
        .0
        .iter()
        .map(|v| {
            let d = exgraph::denominator_vector(&v.expansion, seed);
            let name = display
                .get(&v.label)
                .cloned()
                .unwrap_or_else(|| v.label.clone());
            (name, exgraph::render_root(&d))
        })
        .collect();

    Ok(VerifyReport {
        example: bundle.name.clone(),
        algebra: real.algebra.clone(),
        degree_bound,
        rules: sys.rule_count(),
        diagonal: seed.compatibility()?,
        vertices: graph.vertex_count(),
        directed_edges: graph.directed_edge_count(),
        adjoined: real
            .presentation
            .relations
            .iter()
            .filter(|r| r.adjoined)
            .map(|r| r.text.clone())
            .collect(),
        checks,
        identifications: graph
            .variables
            .iter()
            .map(|v| {
                (
                    v.label.clone(),
                    display.get(&v.label).cloned().unwrap_or_default(),
                )
            })
            .collect(),
        roots,
    })
}
