//! Laurent polynomials in `q^(1/2)` with integer coefficients.
//!
//! Every coefficient in the engine lives in `Z[q^(±1/2)]`. Exponents are
//! stored as *half-exponents*: the integer `h` stands for `q^(h/2)`, so no
//! rational arithmetic is ever needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// An element of `Z[q^(±1/2)]` in canonical form (no zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl QScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::qpow(0)
    }

    /// `q^(h/2)`.
    pub fn qpow(h: i64) -> Self {
        Self::monomial(BigInt::one(), h)
    }

    /// `c * q^(h/2)`.
    pub fn monomial(c: impl Into<BigInt>, h: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(h, c);
        }
        Self { terms }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a scalar from `(half_exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (h, c) in terms {
            out.add_term(h, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_unit() == Some((1, 0))
    }

    /// Iterates `(half_exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(h, c)| (*h, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns `(sign, h)` when the scalar is a unit `±q^(h/2)`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (h, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *h))
        } else if (-c).is_one() {
            Some((-1, *h))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Inverse of a unit `±q^(h/2)`; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (sign, h) = self.as_unit()?;
        Some(Self::monomial(sign, -h))
    }

    /// Multiplies by `q^(h/2)`.
    pub fn shift(&self, h: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + h, c.clone())).collect(),
        }
    }

    /// Highest half-exponent term.
    pub fn leading(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(h, c)| (*h, c))
    }

    /// Lowest half-exponent term.
    pub fn trailing(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next().map(|(h, c)| (*h, c))
    }

    /// Classical limit: substitutes `q^(1/2) = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / den`, or `None` when `den` does not divide `self`
    /// in `Z[q^(±1/2)]`.
    pub fn div_exact(&self, den: &QScalar) -> Option<QScalar> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = den.unit_inverse() {
            return Some(self * &inv);
        }
        let (den_hi, den_lc) = den.leading().map(|(h, c)| (h, c.clone()))?;
        let floor = self.trailing()?.0 - den.trailing()?.0;
        let mut rem = self.clone();
        let mut quot = QScalar::zero();
        while let Some((h, c)) = rem.leading().map(|(h, c)| (h, c.clone())) {
            let shift = h - den_hi;
            if shift < floor {
                return None;
            }
            let (k, r) = c.div_rem(&den_lc);
            if !r.is_zero() {
                return None;
            }
            let t = QScalar::monomial(k, shift);
            rem -= &(&t * den);
            quot += &t;
        }
        Some(quot)
    }

    fn add_term(&mut self, h: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(h).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&h);
        }
    }
}

impl From<i64> for QScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        for (h, c) in &rhs.terms {
            self.add_term(*h, c.clone());
        }
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        for (h, c) in &rhs.terms {
            self.add_term(*h, -c);
        }
    }
}

impl Add<&QScalar> for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QScalar> for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&QScalar> for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        let mut out = QScalar::zero();
        for (h1, c1) in &self.terms {
            for (h2, c2) in &rhs.terms {
                out.add_term(h1 + h2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            terms: self.terms.iter().map(|(h, c)| (*h, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar { (&self).$m(&rhs) }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

fn fmt_exponent(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

/// Renders terms as `c*q^(h/2)` in decreasing exponent order, e.g.
/// `q^(1) - q^(-1)`, `-2*q^(1/2)`, `3`.
impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (h, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (*h == 0, mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "q^({})", fmt_exponent(*h))?,
                (false, false) => write!(f, "{mag}*q^({})", fmt_exponent(*h))?,
            }
        }
        Ok(())
    }
}

/// Parses a half-exponent written as `k`, `(k)`, `(k/2)` or `(-k/2)`.
pub(crate) fn parse_half_exponent(s: &str) -> Result<i64, ParseError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    let bad = || ParseError::new(format!("bad exponent `{s}`"));
    if let Some((num, den)) = inner.split_once('/') {
        if den.trim() != "2" {
            return Err(bad());
        }
        num.trim().parse::<i64>().map_err(|_| bad())
    } else {
        inner.parse::<i64>().map(|e| 2 * e).map_err(|_| bad())
    }
}

impl FromStr for QScalar {
    type Err = ParseError;

    /// Accepts the rendering produced by `Display`, plus bare `q`, `q^k`,
    /// `c*q`, and spaces anywhere.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new("empty scalar"));
        }
        // Split into signed terms, ignoring signs inside parentheses.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth = depth.saturating_sub(1);
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 && !cur.ends_with('^') => {
                    if cur.is_empty() {
                        if !pieces.is_empty() {
                            return Err(ParseError::new(format!("dangling sign in `{s}`")));
                        }
                        neg ^= ch == '-';
                    } else {
                        pieces.push((neg, std::mem::take(&mut cur)));
                        neg = ch == '-';
                    }
                }
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(ParseError::new(format!("trailing sign in `{s}`")));
        }
        pieces.push((neg, cur));

        let mut out = QScalar::zero();
        for (neg, term) in pieces {
            let (coeff, power) = match term.split_once('*') {
                Some((c, p)) => (Some(c), Some(p)),
                None if term.starts_with('q') => (None, Some(term.as_str())),
                None => (Some(term.as_str()), None),
            };
            let mut c = match coeff {
                Some(c) => c
                    .parse::<BigInt>()
                    .map_err(|_| ParseError::new(format!("bad coefficient `{c}`")))?,
                None => BigInt::one(),
            };
            let h = match power {
                None => 0,
                Some("q") => 2,
                Some(p) => {
                    let e = p
                        .strip_prefix("q^")
                        .ok_or_else(|| ParseError::new(format!("bad power `{p}`")))?;
                    parse_half_exponent(e)?
                }
            };
            if neg {
                c = -c;
            }
            out.add_term(h, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(h: i64) -> QScalar {
        QScalar::qpow(h)
    }

    #[test]
    fn qpow_identities() {
        assert!(q(0).is_one());
        assert!((q(2) * q(-2)).is_one());
        assert_eq!(q(1) * q(1), q(2));
    }

    #[test]
    fn difference_of_squares() {
        let a = &q(2) - &q(-2);
        let b = &q(2) + &q(-2);
        assert_eq!(&a * &b, &q(4) - &q(-4));
        assert!((&a - &a).is_zero());
        assert_eq!(q(2) * (QScalar::one() + q(-2)), q(2) + QScalar::one());
    }

    #[test]
    fn classical_limit() {
        assert_eq!((q(2) - q(-2)).eval_at_one(), BigInt::zero());
        assert_eq!((QScalar::one() + q(2)).eval_at_one(), BigInt::from(2));
        assert_eq!(q(1).eval_at_one(), BigInt::one());
    }

    #[test]
    fn exact_division() {
        let a = &q(2) - &q(-2);
        let b = &q(2) + &q(-2);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        // 1 + q is not divisible by 1 - q.
        assert_eq!(
            (QScalar::one() + q(2)).div_exact(&(QScalar::one() - q(2))),
            None
        );
        assert_eq!(QScalar::from(6).div_exact(&QScalar::from(4)), None);
        assert_eq!(QScalar::zero().div_exact(&QScalar::zero()), None);
    }

    #[test]
    fn render_and_parse() {
        let cases = [
            (q(2) - q(-2), "q^(1) - q^(-1)"),
            (QScalar::monomial(-2, 1), "-2*q^(1/2)"),
            (QScalar::from(3), "3"),
            (QScalar::zero(), "0"),
            (QScalar::one() - q(4), "-q^(2) + 1"),
        ];
        for (v, s) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(s.parse::<QScalar>().unwrap(), v);
        }
        assert_eq!("q".parse::<QScalar>().unwrap(), q(2));
        assert_eq!(
            "1 + q^-1".parse::<QScalar>().unwrap(),
            QScalar::one() + q(-2)
        );
        assert_eq!("-q^(-1/2)".parse::<QScalar>().unwrap(), -q(-1));
        assert!("q^(1/3)".parse::<QScalar>().is_err());
        assert!("2*".parse::<QScalar>().is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = QScalar> {
        prop::collection::vec((-6i64..6, -5i64..6), 0..5).prop_map(QScalar::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn qpow_is_additive(h in -50i64..50, k in -50i64..50) {
            prop_assert_eq!(q(h) * q(k), q(h + k));
        }

        #[test]
        fn division_round_trip(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn display_parses_back(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<QScalar>().unwrap(), a);
        }
    }
}
