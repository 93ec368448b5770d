//! Based quantum tori.
//!
//! Over a frame `L`, the based monomials `M(a)` (`a` in `Z^m`) satisfy
//! `M(a) M(b) = q^{(a^T L b)/2} M(a + b)`, and relate to ordered products by
//! `M(a) = q^{(1/2) sum_{i<j} a_i a_j L[j][i]} X_1^{a_1} ... X_m^{a_m}`.
//! A [`TorusElement`] is a finite `Z[q^(±1/2)]`-combination of based monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{SeedError, TorusError};
use crate::qscalar::QScalar;
use crate::seed::{QuantumSeed, QuasiCommutationMatrix};

pub type Frame = Arc<QuasiCommutationMatrix>;

/// Exponent vector ordered degree-lexicographically (total degree, then lex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Half-exponent `h` with `M(a) = q^{h/2} X^a` (ordered product).
pub fn ordered_prefactor(a: &[i64], l: &QuasiCommutationMatrix) -> i64 {
    let mut h = 0;
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        for j in i + 1..a.len() {
            h += a[i] * a[j] * l.get(j, i);
        }
    }
    h
}

#[derive(Clone, Debug)]
pub struct TorusElement {
    frame: Frame,
    terms: BTreeMap<Monomial, QScalar>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        same_frame(&self.frame, &other.frame) && self.terms == other.terms
    }
}

impl Eq for TorusElement {}

/// Orders by term list only; elements compared this way should share a frame.
impl Ord for TorusElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for TorusElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn same_frame(a: &Frame, b: &Frame) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl TorusElement {
    pub fn zero(frame: Frame) -> Self {
        Self {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(frame: Frame) -> Self {
        let m = frame.rank();
        Self::monomial(frame, vec![0; m])
    }

    /// The based monomial `M(a)` with coefficient 1.
    pub fn monomial(frame: Frame, a: Vec<i64>) -> Self {
        Self::term(frame, a, QScalar::one())
    }

    pub fn term(frame: Frame, a: Vec<i64>, coeff: QScalar) -> Self {
        assert_eq!(
            a.len(),
            frame.rank(),
            "exponent length must match frame rank"
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial(a), coeff);
        }
        Self { frame, terms }
    }

    /// The ordered product `X_1^{a_1} ... X_m^{a_m}`.
    pub fn ordered_product(frame: Frame, a: Vec<i64>) -> Self {
        let h = ordered_prefactor(&a, &frame);
        Self::term(frame, a, QScalar::qpow(-h))
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
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

    /// `(exponent, coefficient of M(exponent))` in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64], &QScalar)> + '_ {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn leading(&self) -> Option<(&[i64], &QScalar)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.0.as_slice(), c))
    }

    fn check_frame(&self, other: &Self) -> Result<(), TorusError> {
        if same_frame(&self.frame, &other.frame) {
            Ok(())
        } else {
            Err(TorusError::FrameMismatch)
        }
    }

    fn add_term(&mut self, a: Monomial, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&a) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&a);
                }
            }
            None => {
                self.terms.insert(a, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TorusError> {
        self.check_frame(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TorusError> {
        self.add(&other.scale(&QScalar::from(-1)))
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        let mut out = Self::zero(self.frame.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    /// Bilinear extension of `M(a) M(b) = q^{(a^T L b)/2} M(a + b)`.
    pub fn mul(&self, other: &Self) -> Result<Self, TorusError> {
        self.check_frame(other)?;
        let mut out = Self::zero(self.frame.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let h = self.frame.form(&ma.0, &mb.0);
                let sum: Vec<i64> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(sum), (ca * cb).shift(h));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, TorusError> {
        let mut acc = Self::one(self.frame.clone());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Returns `w` with `den * w = self`, by leading-term elimination in
    /// degree-lexicographic order.
    pub fn divide_exact(&self, den: &Self) -> Result<Self, TorusError> {
        self.check_frame(den)?;
        let (den_lead, den_lc) = match den.terms.iter().next_back() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(TorusError::DivisionByZero),
        };
        let mut quotient = Self::zero(self.frame.clone());
        if self.is_zero() {
            return Ok(quotient);
        }
        // The quotient's lowest term is forced by the lowest terms of num and den.
        let low_num = self.terms.keys().next().expect("nonempty");
        let low_den = den.terms.keys().next().expect("nonempty");
        let floor = Monomial(
            low_num
                .0
                .iter()
                .zip(&low_den.0)
                .map(|(a, b)| a - b)
                .collect(),
        );

        let mut rem = self.clone();
        while let Some((lead, lc)) = rem.terms.iter().next_back() {
            let b = Monomial(lead.0.iter().zip(&den_lead.0).map(|(x, y)| x - y).collect());
            if b < floor {
                return Err(TorusError::InexactDivision);
            }
            let twist = self.frame.form(&den_lead.0, &b.0);
            let c = lc
                .div_exact(&den_lc.shift(twist))
                .ok_or(TorusError::InexactDivision)?;
            let t = Self::term(self.frame.clone(), b.0.clone(), c);
            rem = rem.sub(&den.mul(&t)?)?;
            quotient.add_term(b, t.terms.into_values().next().expect("single term"));
        }
        Ok(quotient)
    }

    /// Sets `q^(1/2) = 1` and forgets the order of factors.
    pub fn classical_limit(&self) -> ClassicalLaurent {
        let mut out = ClassicalLaurent::default();
        for (m, c) in &self.terms {
            out.add_term(m.0.clone(), c.eval_at_one());
        }
        out
    }

    /// Terms as ordered products: `(coefficient of X^a, a)`.
    pub fn ordered_terms(&self) -> Vec<(QScalar, Vec<i64>)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.shift(ordered_prefactor(&m.0, &self.frame)), m.0.clone()))
            .collect()
    }

    /// Smallest exponent of each variable over all terms.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, m| {
            acc.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect()
        }))
    }

    /// Renders as a sum of ordered monomials in the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (coeff, a) in self.ordered_terms().into_iter().rev() {
            parts.push(render_term(&coeff, &monomial_text(&a, names)));
        }
        join_signed(parts)
    }
}

fn monomial_text(a: &[i64], names: &[String]) -> String {
    let factors: Vec<String> = a
        .iter()
        .zip(names)
        .filter(|(e, _)| **e != 0)
        .map(|(e, n)| {
            if *e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    factors.join("*")
}

/// Renders `coeff * body` with the sign pulled out front.
pub(crate) fn render_term(coeff: &QScalar, body: &str) -> (bool, String) {
    let (neg, coeff) = match coeff.as_unit() {
        Some((-1, _)) => (true, -coeff),
        _ => (false, coeff.clone()),
    };
    let text = match (coeff.is_one(), body.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => body.to_string(),
        (false, true) => coeff.to_string(),
        (false, false) if coeff.len() == 1 => format!("{coeff}*{body}"),
        (false, false) => format!("({coeff})*{body}"),
    };
    (neg, text)
}

pub(crate) fn join_signed(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, text)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

/// A commutative Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassicalLaurent {
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl ClassicalLaurent {
    pub fn monomial(a: Vec<i64>) -> Self {
        let mut out = Self::default();
        out.add_term(a, BigInt::one());
        out
    }

    pub fn add_term(&mut self, a: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(a.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y);
            }
        }
        out
    }
}

impl fmt::Display for ClassicalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| {
                let vars: Vec<String> = a
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e != 0)
                    .map(|(i, e)| format!("x{}^{e}", i + 1))
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else if (-c).is_one() {
                    format!("-{}", vars.join("*"))
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One side term of an exchange relation: `q^{half_exponent/2}` times the
/// ordered product of current cluster variables with exponents `exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeTerm {
    pub half_exponent: i64,
    pub exponent: Vec<i64>,
}

/// `X_row * X_row' = sum of terms`, written in the seed's current variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeRelation {
    pub row: usize,
    pub column: usize,
    pub terms: [ExchangeTerm; 2],
}

impl ExchangeRelation {
    pub fn render(&self, names: &[String], new_name: &str) -> String {
        let parts = self
            .terms
            .iter()
            .map(|t| {
                render_term(
                    &QScalar::qpow(t.half_exponent),
                    &monomial_text(&t.exponent, names),
                )
            })
            .collect();
        format!("{}*{} = {}", names[self.row], new_name, join_signed(parts))
    }

    /// True when the two sides match `expected` as an unordered pair of
    /// `(half_exponent, rows with exponent one)` terms.
    pub fn matches(&self, expected: &[(i64, Vec<usize>); 2]) -> bool {
        let m = self.terms[0].exponent.len();
        let as_term = |(h, rows): &(i64, Vec<usize>)| {
            let mut exponent = vec![0; m];
            for &r in rows {
                exponent[r] += 1;
            }
            ExchangeTerm {
                half_exponent: *h,
                exponent,
            }
        };
        let e0 = as_term(&expected[0]);
        let e1 = as_term(&expected[1]);
        (self.terms[0] == e0 && self.terms[1] == e1) || (self.terms[0] == e1 && self.terms[1] == e0)
    }
}

fn exchange_vectors(
    seed: &QuantumSeed,
    k: usize,
) -> Result<(usize, Vec<i64>, Vec<i64>), SeedError> {
    let b = seed.exchange_matrix();
    if k >= b.cols() {
        return Err(SeedError::DirectionOutOfRange(k, b.cols()));
    }
    let r = b.mutable_rows()[k];
    let mut plus = vec![0; b.rows()];
    let mut minus = vec![0; b.rows()];
    for i in 0..b.rows() {
        let v = b.get(i, k);
        if v > 0 {
            plus[i] = v;
        } else if v < 0 {
            minus[i] = -v;
        }
    }
    Ok((r, plus, minus))
}

/// The exchange relation for mutable column `k`: left-multiplying
/// `X_k' = M(-e_k + v+) + M(-e_k + v-)` by `X_k = M(e_k)`.
pub fn exchange_relation(seed: &QuantumSeed, k: usize) -> Result<ExchangeRelation, SeedError> {
    seed.compatibility()?;
    let (r, plus, minus) = exchange_vectors(seed, k)?;
    let l = seed.quasi_commutation();
    let term = |v: Vec<i64>| {
        let lead: i64 = (0..v.len()).map(|j| l.get(r, j) * v[j]).sum();
        ExchangeTerm {
            half_exponent: lead + ordered_prefactor(&v, l),
            exponent: v,
        }
    };
    Ok(ExchangeRelation {
        row: r,
        column: k,
        terms: [term(plus), term(minus)],
    })
}

/// The new variable `X_k'` as an element of the seed's own (current) frame.
pub fn exchange_variable(seed: &QuantumSeed, k: usize) -> Result<TorusElement, SeedError> {
    seed.compatibility()?;
    let (r, plus, minus) = exchange_vectors(seed, k)?;
    let frame: Frame = Arc::new(seed.quasi_commutation().clone());
    let shifted = |mut v: Vec<i64>| {
        v[r] -= 1;
        TorusElement::monomial(frame.clone(), v)
    };
    Ok(shifted(plus).add(&shifted(minus)).expect("same frame"))
}

/// Realizes one exchange-relation term through `expansions`: the ordered
/// product of the expanded current variables, scaled by its prefactor.
pub fn realize_term(
    expansions: &[TorusElement],
    term: &ExchangeTerm,
) -> Result<TorusElement, TorusError> {
    let frame = expansions
        .first()
        .map(|e| e.frame().clone())
        .ok_or(TorusError::Length {
            expected: 1,
            got: 0,
        })?;
    let mut acc = TorusElement::one(frame);
    for (x, &e) in expansions.iter().zip(&term.exponent) {
        if e > 0 {
            acc = acc.mul(&x.pow(e as u32)?)?;
        }
    }
    Ok(acc.scale(&QScalar::qpow(term.half_exponent)))
}

/// Expresses the exchanged variable in the initial frame: the unique `w`
/// with `X_row * w = (right-hand side)`.
pub fn expand_exchanged(
    expansions: &[TorusElement],
    relation: &ExchangeRelation,
) -> Result<TorusElement, TorusError> {
    let rhs = realize_term(expansions, &relation.terms[0])?
        .add(&realize_term(expansions, &relation.terms[1])?)?;
    rhs.divide_exact(&expansions[relation.row])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::ExchangeMatrix;
    use proptest::prelude::*;

    fn sl2_frame() -> Frame {
        Arc::new(
            QuasiCommutationMatrix::new(vec![vec![0, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]])
                .unwrap(),
        )
    }

    fn sl2() -> QuantumSeed {
        QuantumSeed::initial(
            vec!["a".into(), "b".into(), "c".into()],
            ExchangeMatrix::new(vec![vec![0], vec![-1], vec![-1]], vec![0]).unwrap(),
            (*sl2_frame()).clone(),
        )
        .unwrap()
    }

    #[test]
    fn frame_monomial_prefactors() {
        let f = sl2_frame();
        assert_eq!(ordered_prefactor(&[-1, 0, 0], &f), 0);
        assert_eq!(ordered_prefactor(&[-1, 1, 1], &f), 2);
        assert_eq!(ordered_prefactor(&[0, 1, 0], &f), 0);
        let m = TorusElement::monomial(f.clone(), vec![-1, 1, 1]);
        assert_eq!(m.ordered_terms(), vec![(QScalar::qpow(2), vec![-1, 1, 1])]);
    }

    #[test]
    fn multiplication_in_sl2_frame() {
        let f = sl2_frame();
        let x1 = TorusElement::monomial(f.clone(), vec![1, 0, 0]);
        let x2 = TorusElement::monomial(f.clone(), vec![0, 1, 0]);
        let x3 = TorusElement::monomial(f.clone(), vec![0, 0, 1]);
        // Oracle: ab = q ba, so X1 X2 = q^(1/2) M(1,1,0) and M(1,1,0) = q^(-1/2) X1 X2.
        let p = x1.mul(&x2).unwrap();
        assert_eq!(
            p,
            TorusElement::term(f.clone(), vec![1, 1, 0], QScalar::qpow(1))
        );
        assert_eq!(p.ordered_terms(), vec![(QScalar::one(), vec![1, 1, 0])]);
        assert_eq!(x2.mul(&x1).unwrap(), p.scale(&QScalar::qpow(-2)));
        assert_eq!(
            x2.mul(&x3).unwrap(),
            TorusElement::monomial(f.clone(), vec![0, 1, 1])
        );
        let a = TorusElement::monomial(f.clone(), vec![2, -1, 3]);
        let b = TorusElement::monomial(f.clone(), vec![-2, 1, -3]);
        assert_eq!(a.mul(&b).unwrap(), TorusElement::one(f));
    }

    #[test]
    fn sl2_exchange() {
        let seed = sl2();
        let x = exchange_variable(&seed, 0).unwrap();
        assert_eq!(
            x.ordered_terms(),
            vec![
                (QScalar::one(), vec![-1, 0, 0]),
                (QScalar::qpow(2), vec![-1, 1, 1])
            ]
        );
        let rel = exchange_relation(&seed, 0).unwrap();
        assert!(rel.matches(&[(0, vec![]), (2, vec![1, 2])]));
        assert_eq!(rel.render(seed.names(), "d"), "a*d = 1 + q^(1)*b*c");
        let classical = x.classical_limit();
        let expected = ClassicalLaurent::monomial(vec![-1, 0, 0])
            .add(&ClassicalLaurent::monomial(vec![-1, 1, 1]));
        assert_eq!(classical, expected);
    }

    #[test]
    fn division() {
        let f = sl2_frame();
        let num = TorusElement::one(f.clone())
            .add(&TorusElement::term(
                f.clone(),
                vec![0, 1, 1],
                QScalar::qpow(2),
            ))
            .unwrap();
        let den = TorusElement::monomial(f.clone(), vec![1, 0, 0]);
        let w = num.divide_exact(&den).unwrap();
        assert_eq!(den.mul(&w).unwrap(), num);
        assert_eq!(w.len(), 2);
        // X1 + X2 is not a monomial multiple of X2 alone.
        let x1 = TorusElement::monomial(f.clone(), vec![1, 0, 0]);
        let x2 = TorusElement::monomial(f.clone(), vec![0, 1, 0]);
        let two = x1.add(&x2).unwrap();
        assert_eq!(
            two.divide_exact(&two.add(&TorusElement::one(f.clone())).unwrap()),
            Err(TorusError::InexactDivision)
        );
        assert_eq!(
            x1.divide_exact(&TorusElement::zero(f)),
            Err(TorusError::DivisionByZero)
        );
    }

    #[test]
    fn frame_mismatch() {
        let other = Arc::new(QuasiCommutationMatrix::new(vec![vec![0, 2], vec![-2, 0]]).unwrap());
        let a = TorusElement::monomial(sl2_frame(), vec![1, 0, 0]);
        let b = TorusElement::monomial(other, vec![1, 0]);
        assert_eq!(a.mul(&b), Err(TorusError::FrameMismatch));
    }

    fn arb_element(f: Frame) -> impl Strategy<Value = TorusElement> {
        prop::collection::vec(
            (prop::collection::vec(-2i64..3, 3), -3i64..4, -2i64..3),
            1..4,
        )
        .prop_map(move |terms| {
            let mut acc = TorusElement::zero(f.clone());
            for (a, h, c) in terms {
                acc = acc
                    .add(&TorusElement::term(f.clone(), a, QScalar::monomial(c, h)))
                    .unwrap();
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            a in arb_element(sl2_frame()),
            b in arb_element(sl2_frame()),
            c in arb_element(sl2_frame()),
        ) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn division_round_trip(a in arb_element(sl2_frame()), b in arb_element(sl2_frame())) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(b.mul(&a).unwrap().divide_exact(&b).unwrap(), a);
        }
    }
}
