//! Degree-bounded completion of a presentation to a rewriting system.
//!
//! Each relation is oriented so its largest word becomes a rule
//! `lhs -> tail`. Overlaps between rule left-hand sides are resolved up to
//! the degree bound; the rules then compute unique normal forms for every
//! element of degree at most the bound (for homogeneous presentations, and
//! for inhomogeneous ones whose leading words carry the top degree).

use std::collections::{BTreeSet, HashMap};

use crate::error::AlgebraError;
use crate::ncalg::{NcPoly, Presentation, Word};
use crate::qscalar::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionOptions {
    pub degree_bound: usize,
    pub max_rules: usize,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        Self {
            degree_bound: 8,
            max_rules: 20_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    generators: Vec<String>,
    rules: HashMap<Word, NcPoly>,
    max_lhs: usize,
    degree_bound: usize,
}

/// Pending overlap: `(length, left rule, right rule, shared length)`.
type Pair = (usize, Word, Word, usize);

pub fn complete(
    pres: &Presentation,
    opts: CompletionOptions,
) -> Result<RewriteSystem, AlgebraError> {
    let mut sys = RewriteSystem {
        generators: pres.generators.clone(),
        rules: HashMap::new(),
        max_lhs: 0,
        degree_bound: opts.degree_bound,
    };
    let mut pending: Vec<NcPoly> = pres.relations.iter().map(|r| r.poly()).collect();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();
    loop {
        while let Some(p) = pending.pop() {
            let p = sys.normal_form(&p);
            if p.is_zero() {
                continue;
            }
            let lhs = sys.insert(p, &mut pending)?;
            if sys.rules.len() > opts.max_rules {
                return Err(AlgebraError::Budget(opts.max_rules));
            }
            sys.queue_pairs(&lhs, opts.degree_bound, &mut pairs);
        }
        let Some((_, u, v, shared)) = pairs.pop_first() else {
            break;
        };
        let (Some(tu), Some(tv)) = (sys.rules.get(&u), sys.rules.get(&v)) else {
            continue;
        };
        // u = a s, v = s b; the overlap word is a s b.
        let a = &u.0[..u.len() - shared];
        let b = &v.0[shared..];
        let one = QScalar::one();
        let s = tu.sandwich(&[], b, &one).sub(&tv.sandwich(a, &[], &one));
        pending.push(s);
    }
    sys.interreduce_tails();
    Ok(sys)
}

impl RewriteSystem {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Rules sorted by left-hand side.
    pub fn rules(&self) -> Vec<(&Word, &NcPoly)> {
        let mut v: Vec<_> = self.rules.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Orients `p` (already reduced) into a rule and retires rules whose
    /// left-hand side contains the new one.
    fn insert(&mut self, p: NcPoly, pending: &mut Vec<NcPoly>) -> Result<Word, AlgebraError> {
        let (lead, lc) = p
            .leading()
            .map(|(w, c)| (w.clone(), c.clone()))
            .expect("nonzero");
        let inv = lc
            .unit_inverse()
            .ok_or_else(|| AlgebraError::NonUnitLeading(p.render(&self.generators)))?;
        let mut tail = p.scale(&-inv);
        tail.pop_leading();
        let retired: Vec<Word> = self
            .rules
            .keys()
            .filter(|w| w.len() > lead.len() && contains(&w.0, &lead.0))
            .cloned()
            .collect();
        for w in retired {
            let t = self.rules.remove(&w).expect("present");
            pending.push(NcPoly::word(w.0).sub(&t));
        }
        self.max_lhs = self.max_lhs.max(lead.len());
        self.rules.insert(lead.clone(), tail);
        Ok(lead)
    }

    fn queue_pairs(&self, new: &Word, bound: usize, pairs: &mut BTreeSet<Pair>) {
        for other in self.rules.keys() {
            for (u, v) in [(new, other), (other, new)] {
                // Proper overlaps only; inclusions are handled in `insert`.
                for shared in 1..u.len().min(v.len()) {
                    if u.0[u.len() - shared..] == v.0[..shared] {
                        let len = u.len() + v.len() - shared;
                        if len <= bound {
                            pairs.insert((len, u.clone(), v.clone(), shared));
                        }
                    }
                }
            }
        }
    }

    fn find_rule(&self, w: &[u8]) -> Option<(usize, usize, &NcPoly)> {
        for start in 0..w.len() {
            for len in 1..=self.max_lhs.min(w.len() - start) {
                if let Some(t) = self.rules.get(&w[start..start + len]) {
                    return Some((start, len, t));
                }
            }
        }
        None
    }

    pub fn is_normal_word(&self, w: &[u8]) -> bool {
        self.find_rule(w).is_none()
    }

    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        let mut work = p.clone();
        let mut out = NcPoly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_rule(&w.0) {
                Some((start, len, tail)) => {
                    let (left, right) = (&w.0[..start], &w.0[start + len..]);
                    for (tw, tc) in tail.terms() {
                        work.add_term(Word([left, &tw.0[..], right].concat()), tc * &c);
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    fn interreduce_tails(&mut self) {
        let keys: Vec<Word> = self.rules.keys().cloned().collect();
        for k in keys {
            let t = self.rules[&k].clone();
            let nf = self.normal_form(&t);
            self.rules.insert(k, nf);
        }
    }

    /// True when `lhs - rhs` reduces to zero. Elements above the degree
    /// bound are rejected, since normal forms are only unique up to it.
    pub fn verify_identity(&self, lhs: &NcPoly, rhs: &NcPoly) -> Result<bool, AlgebraError> {
        let diff = lhs.sub(rhs);
        if let Some(d) = diff.degree() {
            if d > self.degree_bound {
                return Err(AlgebraError::DegreeBound {
                    degree: d,
                    bound: self.degree_bound,
                });
            }
        }
        Ok(self.normal_form(&diff).is_zero())
    }

    /// Number of normal words of each length `0..=max_degree`.
    pub fn hilbert_counts(&self, max_degree: usize) -> Vec<u64> {
        let mut counts = vec![0u64; max_degree + 1];
        let mut word = Vec::with_capacity(max_degree);
        self.count_from(&mut word, max_degree, &mut counts);
        counts
    }

    fn count_from(&self, word: &mut Vec<u8>, max_degree: usize, counts: &mut [u64]) {
        counts[word.len()] += 1;
        if word.len() == max_degree {
            return;
        }
        for g in 0..self.generators.len() as u8 {
            word.push(g);
            // Only suffixes can newly contain a left-hand side.
            let n = word.len();
            let blocked =
                (1..=self.max_lhs.min(n)).any(|len| self.rules.contains_key(&word[n - len..]));
            if !blocked {
                self.count_from(word, max_degree, counts);
            }
            word.pop();
        }
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    hay.windows(needle.len()).any(|w| w == needle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quantum_plane() -> Presentation {
        Presentation::parse("generators x y\nrelation y x = q x y").unwrap()
    }

    #[test]
    fn quantum_plane_normal_forms() {
        let p = quantum_plane();
        let sys = complete(&p, CompletionOptions::default()).unwrap();
        assert_eq!(sys.rule_count(), 1);
        let yyx = p.parse_poly("y y x").unwrap();
        assert_eq!(sys.normal_form(&yyx), p.parse_poly("q^2 x y y").unwrap());
        // Polynomial ring growth: d + 1 monomials in degree d.
        assert_eq!(sys.hilbert_counts(5), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn overlaps_are_resolved() {
        // Three q-commuting variables: the overlap zyx must resolve.
        let p = Presentation::parse(
            "generators x y z\nrelation y x = q x y\nrelation z x = q x z\nrelation z y = q y z",
        )
        .unwrap();
        let sys = complete(&p, CompletionOptions::default()).unwrap();
        assert_eq!(sys.rule_count(), 3);
        assert_eq!(sys.hilbert_counts(4), vec![1, 3, 6, 10, 15]);
        let lhs = p.parse_poly("z y x").unwrap();
        let rhs = p.parse_poly("q^3 x y z").unwrap();
        assert!(sys.verify_identity(&lhs, &rhs).unwrap());
    }

    #[test]
    fn inconsistent_relations_collapse() {
        // yx = q xy and yx = xy force (q - 1) xy = 0, whose leading
        // coefficient is not a unit.
        let p = Presentation::parse("generators x y\nrelation y x = q x y\nrelation y x = x y")
            .unwrap();
        assert!(matches!(
            complete(&p, CompletionOptions::default()),
            Err(AlgebraError::NonUnitLeading(_))
        ));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let p = quantum_plane();
        let sys = complete(
            &p,
            CompletionOptions {
                degree_bound: 3,
                max_rules: 10,
            },
        )
        .unwrap();
        let big = p.parse_poly("x^4").unwrap();
        assert_eq!(
            sys.verify_identity(&big, &NcPoly::zero()),
            Err(AlgebraError::DegreeBound {
                degree: 4,
                bound: 3
            })
        );
    }

    #[test]
    fn free_algebra_growth() {
        let p = Presentation::parse("generators a b").unwrap();
        let sys = complete(&p, CompletionOptions::default()).unwrap();
        assert_eq!(sys.hilbert_counts(3), vec![1, 2, 4, 8]);
    }
}
