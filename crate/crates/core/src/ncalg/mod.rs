//! Finitely presented algebras over `Z[q^(±1/2)]`.
//!
//! Words in the generators are ordered degree-lexicographically by generator
//! index, so the order in which generators are declared fixes the monomial
//! order used for normal forms.

mod completion;
mod parse;

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub use completion::{complete, CompletionOptions, RewriteSystem};
pub use parse::{parse_poly, Presentation, Relation};

use crate::qscalar::QScalar;
use crate::torus::{join_signed, render_term};

/// A word in generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &[u8]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn render(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|&g| names[g as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Borrow<[u8]> for Word {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A noncommutative polynomial: a finite combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Word, QScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(QScalar::one())
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn generator(g: u8) -> Self {
        Self::term(Word(vec![g]), QScalar::one())
    }

    pub fn word(w: Vec<u8>) -> Self {
        Self::term(Word(w), QScalar::one())
    }

    pub fn term(w: Word, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn leading(&self) -> Option<(&Word, &QScalar)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, QScalar)> {
        self.terms.pop_last()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &QScalar) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(&b.0), x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> NcPoly {
        (0..e).fold(NcPoly::one(), |acc, _| acc.mul(self))
    }

    /// `left * self * right` for words.
    pub(crate) fn sandwich(&self, left: &[u8], right: &[u8], c: &QScalar) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, x) in &self.terms {
            let mut v = Vec::with_capacity(left.len() + w.len() + right.len());
            v.extend_from_slice(left);
            v.extend_from_slice(&w.0);
            v.extend_from_slice(right);
            out.add_term(Word(v), x * c);
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| render_term(c, &w.render(names)))
            .collect();
        join_signed(parts)
    }
}

/// `[x, y]_{q^(h/2)} = x y - q^(h/2) y x`.
pub fn q_commutator(x: &NcPoly, y: &NcPoly, half_exponent: i64) -> NcPoly {
    x.mul(y).sub(&y.mul(x).scale(&QScalar::qpow(half_exponent)))
}

/// Row order used when expanding a quantum minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOrder {
    /// `sum_s (-q)^{l(s)} m_{1,c_s(1)} ... m_{k,c_s(k)}`.
    TopFirst,
    /// `sum_s (-q^{-1})^{l(s)} m_{k,c_s(k)} ... m_{1,c_s(1)}`.
    BottomFirst,
}

/// The quantum minor of `rows` on the given columns.
pub fn quantum_minor(rows: &[Vec<NcPoly>], cols: &[usize], order: RowOrder) -> NcPoly {
    let k = rows.len();
    assert_eq!(cols.len(), k, "quantum minor needs a square selection");
    let mut out = NcPoly::zero();
    for perm in permutations(k) {
        let inversions = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count() as i64;
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let (half, factor_rows): (i64, Vec<usize>) = match order {
            RowOrder::TopFirst => (2 * inversions, (0..k).collect()),
            RowOrder::BottomFirst => (-2 * inversions, (0..k).rev().collect()),
        };
        let mut term = NcPoly::scalar(QScalar::monomial(sign, half));
        for r in factor_rows {
            term = term.mul(&rows[r][cols[perm[r]]]);
        }
        out = out.add(&term);
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn deglex_order() {
        assert!(Word(vec![3]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 2]) < Word(vec![1, 0]));
    }

    #[test]
    fn commutator_and_render() {
        let a = NcPoly::generator(0);
        let b = NcPoly::generator(1);
        let c = q_commutator(&a, &b, 2);
        assert_eq!(c.render(&names(&["a", "b"])), "-q^(1)*b*a + a*b");
        let p = NcPoly::one().add(&b.scale(&QScalar::from(-2)));
        assert_eq!(p.render(&names(&["a", "b"])), "-2*b + 1");
    }

    #[test]
    fn two_by_two_minors() {
        let g = |i| NcPoly::generator(i);
        let rows = vec![vec![g(0), g(1)], vec![g(2), g(3)]];
        let top = quantum_minor(&rows, &[0, 1], RowOrder::TopFirst);
        let expected = g(0)
            .mul(&g(3))
            .sub(&g(1).mul(&g(2)).scale(&QScalar::qpow(2)));
        assert_eq!(top, expected);
        let bottom = quantum_minor(&rows, &[0, 1], RowOrder::BottomFirst);
        let expected = g(3)
            .mul(&g(0))
            .sub(&g(2).mul(&g(1)).scale(&QScalar::qpow(-2)));
        assert_eq!(bottom, expected);
        assert_eq!(permutations(3).len(), 6);
    }
}
