//! Exchange matrices, quasi-commutation matrices and quantum seeds.
//!
//! An [`ExchangeMatrix`] is `m x n`: one row per cluster variable, one column
//! per mutable variable. Column `c` belongs to the variable in row
//! `mutable_rows[c]`, so frozen rows may sit anywhere in the cluster.

use std::fmt;

use crate::error::SeedError;
use crate::torus::{self, ExchangeRelation, TorusElement};

/// Dense integer matrix stored row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    entries: IntMatrix,
    mutable_rows: Vec<usize>,
}

impl ExchangeMatrix {
    pub fn new(entries: IntMatrix, mutable_rows: Vec<usize>) -> Result<Self, SeedError> {
        let m = entries.len();
        let n = mutable_rows.len();
        if let Some((i, row)) = entries.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(SeedError::Dimension(format!(
                "row {i} of B has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut seen = vec![false; m];
        for &r in &mutable_rows {
            if r >= m {
                return Err(SeedError::MutableRows(format!(
                    "row {r} out of range 0..{m}"
                )));
            }
            if std::mem::replace(&mut seen[r], true) {
                return Err(SeedError::MutableRows(format!("row {r} listed twice")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if entries[mutable_rows[a]][b] != -entries[mutable_rows[b]][a] {
                    return Err(SeedError::PrincipalNotSkew(
                        mutable_rows[a],
                        mutable_rows[b],
                    ));
                }
            }
        }
        Ok(Self {
            entries,
            mutable_rows,
        })
    }

    /// Square exchange matrix with every row mutable.
    pub fn square(entries: IntMatrix) -> Result<Self, SeedError> {
        let n = entries.len();
        Self::new(entries, (0..n).collect())
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.mutable_rows.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn mutable_rows(&self) -> &[usize] {
        &self.mutable_rows
    }

    pub fn column_of_row(&self, row: usize) -> Option<usize> {
        self.mutable_rows.iter().position(|&r| r == row)
    }

    pub fn is_mutable_row(&self, row: usize) -> bool {
        self.column_of_row(row).is_some()
    }

    /// Matrix mutation in mutable column `k`.
    pub fn mutate(&self, k: usize) -> Result<Self, SeedError> {
        let n = self.cols();
        if k >= n {
            return Err(SeedError::DirectionOutOfRange(k, n));
        }
        let r = self.mutable_rows[k];
        let mut out = self.entries.clone();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let b = self.entries[i][j];
                *entry = if i == r || j == k {
                    -b
                } else {
                    let bik = self.entries[i][k];
                    let bkj = self.entries[r][j];
                    let num = bik.abs() * bkj + bik * bkj.abs();
                    if num % 2 != 0 {
                        return Err(SeedError::OddNumerator(i, j));
                    }
                    b + num / 2
                };
            }
        }
        Ok(Self {
            entries: out,
            mutable_rows: self.mutable_rows.clone(),
        })
    }

    /// `B^T L`, an `n x m` matrix.
    pub fn transpose_times(&self, l: &QuasiCommutationMatrix) -> IntMatrix {
        let m = self.rows();
        (0..self.cols())
            .map(|c| {
                (0..m)
                    .map(|j| (0..m).map(|i| self.entries[i][c] * l.get(i, j)).sum())
                    .collect()
            })
            .collect()
    }

    /// Applies a permutation of rows (`perm[new] = old`), reindexing columns so
    /// that column `c` still belongs to row `mutable_rows[c]`.
    pub(crate) fn permute(&self, perm: &[usize]) -> Self {
        let col_perm: Vec<usize> = self
            .mutable_rows
            .iter()
            .map(|&new_row| {
                self.column_of_row(perm[new_row])
                    .expect("permutation maps mutable rows to mutable rows")
            })
            .collect();
        let entries = perm
            .iter()
            .map(|&old| col_perm.iter().map(|&c| self.entries[old][c]).collect())
            .collect();
        Self {
            entries,
            mutable_rows: self.mutable_rows.clone(),
        }
    }
}

/// Skew-symmetric `L` with `X_i X_j = q^{L[i][j]} X_j X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiCommutationMatrix {
    entries: IntMatrix,
}

impl QuasiCommutationMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self, SeedError> {
        let m = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != m {
                return Err(SeedError::Dimension(format!(
                    "row {i} of L has {} entries, expected {m}",
                    row.len()
                )));
            }
        }
        for i in 0..m {
            for j in i..m {
                if entries[i][j] != -entries[j][i] {
                    return Err(SeedError::NotSkew(i, j));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// `a^T L b`.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                acc += ai * self.entries[i][j] * bj;
            }
        }
        acc
    }

    /// Mutation of `L` along column `k` of `b`: `E^T L E`, computed with both
    /// sign choices for `E`, which must agree.
    pub fn mutate(&self, b: &ExchangeMatrix, k: usize) -> Result<Self, SeedError> {
        check_compatibility(b, self)?;
        if k >= b.cols() {
            return Err(SeedError::DirectionOutOfRange(k, b.cols()));
        }
        let plus = self.congruence(b, k, 1);
        let minus = self.congruence(b, k, -1);
        if plus != minus {
            return Err(SeedError::InconsistentLMutation);
        }
        Ok(Self { entries: plus })
    }

    fn congruence(&self, b: &ExchangeMatrix, k: usize, sign: i64) -> IntMatrix {
        let m = self.rank();
        let r = b.mutable_rows()[k];
        // Only column r of E differs from the identity.
        let col: Vec<i64> = (0..m)
            .map(|i| {
                if i == r {
                    -1
                } else {
                    (sign * b.get(i, k)).max(0)
                }
            })
            .collect();
        let e = |i: usize, j: usize| -> i64 {
            if j == r {
                col[i]
            } else {
                i64::from(i == j)
            }
        };
        // (E^T L E)[a][c] = sum_{i,j} E[i][a] L[i][j] E[j][c]
        let mut out = vec![vec![0; m]; m];
        for a in 0..m {
            for c in 0..m {
                let mut acc = 0;
                for i in 0..m {
                    let eia = e(i, a);
                    if eia == 0 {
                        continue;
                    }
                    for j in 0..m {
                        acc += eia * self.entries[i][j] * e(j, c);
                    }
                }
                out[a][c] = acc;
            }
        }
        out
    }

    pub(crate) fn permute(&self, perm: &[usize]) -> Self {
        Self {
            entries: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

/// Checks that `B^T L` is zero except for a positive entry at
/// `(c, mutable_rows[c])` in every row `c`; returns those diagonal entries.
pub fn check_compatibility(
    b: &ExchangeMatrix,
    l: &QuasiCommutationMatrix,
) -> Result<Vec<i64>, SeedError> {
    if b.rows() != l.rank() {
        return Err(SeedError::Dimension(format!(
            "B has {} rows but L is {}x{}",
            b.rows(),
            l.rank(),
            l.rank()
        )));
    }
    let product = b.transpose_times(l);
    let mut diagonal = Vec::with_capacity(b.cols());
    for (c, row) in product.iter().enumerate() {
        let target = b.mutable_rows()[c];
        for (j, &value) in row.iter().enumerate() {
            let bad = if j == target { value <= 0 } else { value != 0 };
            if bad {
                return Err(SeedError::Incompatible {
                    row: c,
                    col: j,
                    value,
                });
            }
        }
        diagonal.push(row[target]);
    }
    Ok(diagonal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

/// The quiver `Gamma(B)`: one vertex per row, frozen rows flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub labels: Vec<String>,
    pub frozen: Vec<bool>,
    pub arrows: Vec<Arrow>,
}

pub fn quiver_of(b: &ExchangeMatrix, labels: &[String]) -> Quiver {
    let mut arrows = Vec::new();
    for i in 0..b.rows() {
        let frozen_row = !b.is_mutable_row(i);
        for (c, &j) in b.mutable_rows().iter().enumerate() {
            let w = b.get(i, c);
            if w > 0 {
                arrows.push(Arrow {
                    from: i,
                    to: j,
                    weight: w,
                });
            } else if w < 0 && frozen_row {
                // A frozen row has no column of its own to carry the reverse entry.
                arrows.push(Arrow {
                    from: j,
                    to: i,
                    weight: -w,
                });
            }
        }
    }
    arrows.sort_by_key(|a| (a.from, a.to));
    Quiver {
        labels: labels.to_vec(),
        frozen: (0..b.rows()).map(|i| !b.is_mutable_row(i)).collect(),
        arrows,
    }
}

impl Quiver {
    /// Graphviz rendering; frozen vertices are boxed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for (i, label) in self.labels.iter().enumerate() {
            let shape = if self.frozen[i] { "box" } else { "ellipse" };
            out.push_str(&format!("  v{i} [label=\"{label}\", shape={shape}];\n"));
        }
        for a in &self.arrows {
            if a.weight == 1 {
                out.push_str(&format!("  v{} -> v{};\n", a.from, a.to));
            } else {
                out.push_str(&format!(
                    "  v{} -> v{} [label=\"{}\"];\n",
                    a.from, a.to, a.weight
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| {
            if self.frozen[i] {
                format!("[{}]", self.labels[i])
            } else {
                self.labels[i].clone()
            }
        };
        let parts: Vec<String> = self
            .arrows
            .iter()
            .map(|a| match a.weight {
                1 => format!("{} -> {}", name(a.from), name(a.to)),
                w => format!("{} -{w}-> {}", name(a.from), name(a.to)),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("(no arrows)")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// A quantum seed `(cluster, B, L)`, optionally carrying each cluster
/// variable's expansion in a fixed initial frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumSeed {
    names: Vec<String>,
    b: ExchangeMatrix,
    l: QuasiCommutationMatrix,
    expansions: Option<Vec<TorusElement>>,
}

/// Result of mutating a seed in one direction.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub seed: QuantumSeed,
    /// Relation in the *source* seed's variables.
    pub relation: ExchangeRelation,
    /// Row of the exchanged variable.
    pub row: usize,
}

impl QuantumSeed {
    /// Builds a seed without expansions.
    pub fn new(
        names: Vec<String>,
        b: ExchangeMatrix,
        l: QuasiCommutationMatrix,
    ) -> Result<Self, SeedError> {
        if names.len() != b.rows() || names.len() != l.rank() {
            return Err(SeedError::Dimension(format!(
                "{} names, B has {} rows, L is {}x{}",
                names.len(),
                b.rows(),
                l.rank(),
                l.rank()
            )));
        }
        Ok(Self {
            names,
            b,
            l,
            expansions: None,
        })
    }

    /// Builds a seed and starts tracking expansions in its own frame.
    pub fn initial(
        names: Vec<String>,
        b: ExchangeMatrix,
        l: QuasiCommutationMatrix,
    ) -> Result<Self, SeedError> {
        Ok(Self::new(names, b, l)?.with_initial_frame())
    }

    /// Makes this seed's own frame the reference frame for expansions.
    pub fn with_initial_frame(mut self) -> Self {
        let frame = std::sync::Arc::new(self.l.clone());
        let m = self.rank();
        self.expansions = Some(
            (0..m)
                .map(|i| {
                    let mut e = vec![0; m];
                    e[i] = 1;
                    TorusElement::monomial(frame.clone(), e)
                })
                .collect(),
        );
        self
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn mutable_count(&self) -> usize {
        self.b.cols()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn exchange_matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn quasi_commutation(&self) -> &QuasiCommutationMatrix {
        &self.l
    }

    pub fn expansions(&self) -> Option<&[TorusElement]> {
        self.expansions.as_deref()
    }

    pub fn compatibility(&self) -> Result<Vec<i64>, SeedError> {
        check_compatibility(&self.b, &self.l)
    }

    pub fn quiver(&self) -> Quiver {
        quiver_of(&self.b, &self.names)
    }

    /// Resolves a cluster position to its mutable column.
    pub fn column_of_row(&self, row: usize) -> Result<usize, SeedError> {
        if row >= self.rank() {
            return Err(SeedError::DirectionOutOfRange(row, self.rank()));
        }
        self.b
            .column_of_row(row)
            .ok_or(SeedError::FrozenVariable(row))
    }

    /// Mutates in mutable column `k`. The new variable is named after the old
    /// one with a prime appended; when expansions are tracked, the new
    /// variable's expansion in the initial frame is computed by exact division.
    pub fn mutate(&self, k: usize) -> Result<Mutation, crate::error::GraphError> {
        let row = *self
            .b
            .mutable_rows()
            .get(k)
            .ok_or(SeedError::DirectionOutOfRange(k, self.b.cols()))?;
        let relation = torus::exchange_relation(self, k)?;
        let b = self.b.mutate(k)?;
        let l = self.l.mutate(&self.b, k)?;
        let mut names = self.names.clone();
        names[row].push('\'');
        let expansions = match &self.expansions {
            None => None,
            Some(exps) => {
                let new_var = torus::expand_exchanged(exps, &relation)?;
                let mut exps = exps.clone();
                exps[row] = new_var;
                Some(exps)
            }
        };
        Ok(Mutation {
            seed: QuantumSeed {
                names,
                b,
                l,
                expansions,
            },
            relation,
            row,
        })
    }

    /// Mutates at a cluster position (row) rather than a column.
    pub fn mutate_row(&self, row: usize) -> Result<Mutation, crate::error::GraphError> {
        let k = self.column_of_row(row)?;
        self.mutate(k)
    }

    /// Matrix-only mutation (`B` and `L`), skipping the torus computation.
    pub fn mutate_matrices(&self, k: usize) -> Result<QuantumSeed, SeedError> {
        let b = self.b.mutate(k)?;
        let l = self.l.mutate(&self.b, k)?;
        Ok(QuantumSeed {
            names: self.names.clone(),
            b,
            l,
            expansions: None,
        })
    }

    pub fn rename(&mut self, row: usize, name: impl Into<String>) {
        self.names[row] = name.into();
    }

    /// Simultaneously permutes every per-variable field (`perm[new] = old`).
    /// The permutation must map mutable rows to mutable rows.
    pub(crate) fn permute(&self, perm: &[usize]) -> QuantumSeed {
        QuantumSeed {
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
            b: self.b.permute(perm),
            l: self.l.permute(perm),
            expansions: self
                .expansions
                .as_ref()
                .map(|e| perm.iter().map(|&i| e[i].clone()).collect()),
        }
    }

    /// Drops tracked expansions (matrices and names only).
    pub fn without_expansions(&self) -> QuantumSeed {
        QuantumSeed {
            expansions: None,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> QuantumSeed {
        QuantumSeed::initial(
            vec!["a".into(), "b".into(), "c".into()],
            ExchangeMatrix::new(vec![vec![0], vec![-1], vec![-1]], vec![0]).unwrap(),
            QuasiCommutationMatrix::new(vec![vec![0, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn matrix_mutation_examples() {
        let b =
            ExchangeMatrix::square(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        assert_eq!(
            b.mutate(0).unwrap().entries(),
            &vec![vec![0, -1, 0], vec![1, 0, 1], vec![0, -1, 0]]
        );
        assert_eq!(
            b.mutate(1).unwrap().entries(),
            &vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]
        );
        for k in 0..3 {
            assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]], vec![0, 1]),
            Err(SeedError::PrincipalNotSkew(..))
        ));
        assert!(matches!(
            ExchangeMatrix::new(vec![vec![0], vec![1]], vec![0, 0]),
            Err(SeedError::Dimension(_))
        ));
        assert!(matches!(
            ExchangeMatrix::new(vec![vec![0], vec![1]], vec![3]),
            Err(SeedError::MutableRows(_))
        ));
        assert!(matches!(
            QuasiCommutationMatrix::new(vec![vec![0, 1], vec![1, 0]]),
            Err(SeedError::NotSkew(0, 1))
        ));
        let seed = sl2();
        assert!(matches!(
            seed.mutate(1),
            Err(crate::GraphError::Seed(SeedError::DirectionOutOfRange(
                1, 1
            )))
        ));
        assert!(matches!(
            seed.column_of_row(2),
            Err(SeedError::FrozenVariable(2))
        ));
    }

    #[test]
    fn sl2_l_mutation_and_compatibility() {
        let seed = sl2();
        assert_eq!(seed.compatibility().unwrap(), vec![2]);
        let l2 = seed
            .quasi_commutation()
            .mutate(seed.exchange_matrix(), 0)
            .unwrap();
        assert_eq!(l2.entries()[0], vec![0, -1, -1]);
        let b2 = seed.exchange_matrix().mutate(0).unwrap();
        assert_eq!(l2.mutate(&b2, 0).unwrap(), *seed.quasi_commutation());
    }

    #[test]
    fn incompatible_pair_is_reported() {
        let b = ExchangeMatrix::new(vec![vec![0], vec![-1], vec![-1]], vec![0]).unwrap();
        let l = QuasiCommutationMatrix::new(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]])
            .unwrap();
        let err = check_compatibility(&b, &l).unwrap_err();
        assert_eq!(
            err,
            SeedError::Incompatible {
                row: 0,
                col: 1,
                value: 1
            }
        );
        assert!(l.mutate(&b, 0).is_err());
    }

    #[test]
    fn quiver_of_sl2_and_rank_zero() {
        let q = sl2().quiver();
        assert_eq!(q.frozen, vec![false, true, true]);
        let pairs: Vec<_> = q.arrows.iter().map(|a| (a.from, a.to, a.weight)).collect();
        assert_eq!(pairs, vec![(0, 1, 1), (0, 2, 1)]);
        assert!(q.to_dot().contains("shape=box"));

        let b = ExchangeMatrix::new(vec![vec![], vec![]], vec![]).unwrap();
        let q = quiver_of(&b, &["x".into(), "y".into()]);
        assert!(q.arrows.is_empty());
        assert_eq!(q.to_string(), "(no arrows)");
    }
}
