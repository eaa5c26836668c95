//! Literal word rewriting with the four directed rules
//!
//! ```text
//! (R1) v u -> u v - 2w
//! (R2) w u -> u w + 2 u v - 2w - gamma
//! (R3) w v -> v w - v^2 - P(u)
//! (R4) w w -> -Q(u) - u v^2 + 2 v w - 2 v^2 - 2P(u) + gamma v     (D only)
//! ```
//!
//! applied to exhaustion. This is independent of the memoised product in
//! [`super::engine`] and is what the critical-pair check runs on.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::parse::{self, Evaluator};
use crate::poly::Poly;
use crate::scalar::Scalar;

use super::element::{Element, Monomial};
use super::engine::TERM_LIMIT;
use super::spec::{AlgebraSpec, Kind};
use super::Gen;

pub type Word = Vec<Gen>;

/// A formal linear combination of generator words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: HashMap<Word, Scalar>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    pub fn word(w: Word) -> Self {
        let mut s = WordSum::zero();
        s.add(w, &Scalar::one());
        s
    }

    pub fn add(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Each basis monomial `u^i v^j w^k` as the literal word `u..u v..v w..w`.
    pub fn from_element(x: &Element) -> Self {
        let mut s = WordSum::zero();
        for (m, c) in x.terms() {
            let mut w = vec![Gen::U; m.i as usize];
            w.extend(std::iter::repeat_n(Gen::V, m.j as usize));
            w.extend(std::iter::repeat_n(Gen::W, m.k as usize));
            s.add(w, c);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    fn scaled(&self, c: &Scalar) -> WordSum {
        let mut out = WordSum::zero();
        for (w, a) in &self.terms {
            out.add(w.clone(), &(a * c));
        }
        out
    }

    fn concat(&self, rhs: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add(w, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        let text = |w: &Word| w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*");
        crate::fmt::write_terms(f, terms.into_iter().map(|(w, c)| (c, text(w))))
    }
}

struct WordEval;

impl Evaluator for WordEval {
    type Value = WordSum;
    fn scalar(&self, c: Scalar) -> WordSum {
        WordSum::word(Vec::new()).scaled(&c)
    }
    fn var(&self, name: char) -> Option<WordSum> {
        Gen::from_char(name).map(|g| WordSum::word(vec![g]))
    }
    fn add(&self, a: &WordSum, b: &WordSum) -> WordSum {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            out.add(w.clone(), c);
        }
        out
    }
    fn mul(&self, a: &WordSum, b: &WordSum) -> WordSum {
        a.concat(b)
    }
    fn scale(&self, a: &WordSum, c: &Scalar) -> WordSum {
        a.scaled(c)
    }
    fn as_scalar(&self, a: &WordSum) -> Option<Scalar> {
        match a.terms.len() {
            0 => Some(Scalar::zero()),
            1 => a.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
}

/// Parses the word grammar without reducing anything.
pub fn parse_words(src: &str) -> Result<WordSum> {
    parse::parse_with(&WordEval, src)
}

/// Which redex to contract first in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// The rewriting system of one presentation.
pub struct Rewriter<'a> {
    spec: &'a AlgebraSpec,
}

fn u_power_words(f: &Poly, c: &Scalar) -> Vec<(Word, Scalar)> {
    f.coeffs().iter().enumerate().map(|(l, a)| (vec![Gen::U; l], a * c)).collect()
}

impl<'a> Rewriter<'a> {
    pub fn new(spec: &'a AlgebraSpec) -> Self {
        Rewriter { spec }
    }

    /// True if the adjacent pair `(a, b)` is the left side of a rule.
    pub fn is_redex(&self, a: Gen, b: Gen) -> bool {
        a > b || (a == Gen::W && b == Gen::W && self.spec.kind() == Kind::D)
    }

    /// Right-hand side of the rule for the pair `(a, b)`.
    pub fn rule(&self, a: Gen, b: Gen) -> Vec<(Word, Scalar)> {
        use Gen::{U, V, W};
        let int = Scalar::from_int;
        let gamma = self.spec.gamma().clone();
        let p = self.spec.p();
        match (a, b) {
            (V, U) => vec![(vec![U, V], int(1)), (vec![W], int(-2))],
            (W, U) => vec![(vec![U, W], int(1)), (vec![U, V], int(2)), (vec![W], int(-2)), (vec![], -gamma)],
            (W, V) => {
                let mut rhs = vec![(vec![V, W], int(1)), (vec![V, V], int(-1))];
                rhs.extend(u_power_words(p, &int(-1)));
                rhs
            }
            (W, W) => {
                let q = self.spec.q().expect("rule w*w only exists for D-algebras");
                let mut rhs = u_power_words(q, &int(-1));
                rhs.extend(u_power_words(p, &int(-2)));
                rhs.extend([
                    (vec![U, V, V], int(-1)),
                    (vec![V, W], int(2)),
                    (vec![V, V], int(-2)),
                    (vec![V], gamma),
                ]);
                rhs
            }
            _ => panic!("no rule for {a}{b}"),
        }
    }

    /// Positions `p` such that `(word[p], word[p+1])` is a redex.
    pub fn redexes(&self, word: &[Gen]) -> Vec<usize> {
        (0..word.len().saturating_sub(1)).filter(|&p| self.is_redex(word[p], word[p + 1])).collect()
    }

    /// Contracts the redex at `pos`.
    pub fn step_at(&self, word: &[Gen], pos: usize) -> Vec<(Word, Scalar)> {
        self.rule(word[pos], word[pos + 1])
            .into_iter()
            .map(|(mid, c)| {
                let mut w = word[..pos].to_vec();
                w.extend(mid);
                w.extend_from_slice(&word[pos + 2..]);
                (w, c)
            })
            .collect()
    }

    /// Rewrites to exhaustion and reads off the normal-form element.
    pub fn reduce(&self, input: &WordSum, strategy: Strategy) -> Element {
        let mut out = Element::zero();
        let mut pending: HashMap<Word, Scalar> = input.terms.clone();
        while !pending.is_empty() {
            let mut next: HashMap<Word, Scalar> = HashMap::new();
            for (word, c) in pending {
                let redexes = self.redexes(&word);
                let pos = match strategy {
                    Strategy::Leftmost => redexes.first(),
                    Strategy::Rightmost => redexes.last(),
                };
                match pos {
                    None => out.add_term(word_to_monomial(&word), &c),
                    Some(&p) => {
                        for (w, a) in self.step_at(&word, p) {
                            let entry = next.entry(w).or_default();
                            *entry += &(&a * &c);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            assert!(next.len() <= TERM_LIMIT, "rewriting exceeded {TERM_LIMIT} pending words");
            pending = next;
        }
        out
    }
}

/// Normal form of a formal combination of words.
pub fn reduce(spec: &AlgebraSpec, input: &WordSum) -> Element {
    Rewriter::new(spec).reduce(input, Strategy::Leftmost)
}

/// Parses a word expression and rewrites it to normal form.
pub fn reduce_text(spec: &AlgebraSpec, src: &str) -> Result<Element> {
    Ok(reduce(spec, &parse_words(src)?))
}

/// Reads a word in `u* v* w*` order as its basis monomial.
fn word_to_monomial(word: &[Gen]) -> Monomial {
    let mut m = Monomial::ONE;
    for g in word {
        match g {
            Gen::U => m.i += 1,
            Gen::V => m.j += 1,
            Gen::W => m.k += 1,
        }
    }
    m
}

/// One overlap word and the two normal forms reached by contracting
/// the left or the right redex first.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub left_first: Element,
    pub right_first: Element,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.left_first == self.right_first
    }

    pub fn word_text(&self) -> String {
        self.word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
    }
}

#[derive(Clone, Debug)]
pub struct DiamondReport {
    pub pairs: Vec<CriticalPair>,
}

impl DiamondReport {
    pub fn all_resolve(&self) -> bool {
        self.pairs.iter().all(CriticalPair::resolves)
    }
}

/// Resolves every overlap `w v u`, `w w u`, and for D also `w w v` and
/// `w w w`, once per first step, and compares the normal forms.
pub fn check_diamond(spec: &AlgebraSpec) -> DiamondReport {
    use Gen::{U, V, W};
    let rw = Rewriter::new(spec);
    let mut words = vec![vec![W, V, U], vec![W, W, U]];
    if spec.kind() == Kind::D {
        words.extend([vec![W, W, V], vec![W, W, W]]);
    }
    let branch = |word: &Word, pos: usize| {
        let mut sum = WordSum::zero();
        if rw.is_redex(word[pos], word[pos + 1]) {
            for (w, c) in rw.step_at(word, pos) {
                sum.add(w, &c);
            }
        } else {
            sum.add(word.clone(), &Scalar::one());
        }
        rw.reduce(&sum, Strategy::Leftmost)
    };
    let pairs = words
        .into_iter()
        .map(|word| CriticalPair { left_first: branch(&word, 0), right_first: branch(&word, 1), word })
        .collect();
    DiamondReport { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d_cubic(gamma: i64) -> AlgebraSpec {
        AlgebraSpec::d(Poly::from_ints(&[0, 0, 0, 1]), Scalar::from_int(gamma)).unwrap()
    }

    #[test]
    fn single_rules() {
        let spec = d_cubic(0);
        assert_eq!(reduce_text(&spec, "v*u").unwrap().to_string(), "u*v-2*w");
    }

    #[test]
    fn w_squared_in_d() {
        // -Q(u) - u v^2 + 2 v w - 2 v^2 - 2 P(u) + gamma v with Q = t^3, P = 3t^2+8t+8
        let spec = d_cubic(3);
        let got = reduce_text(&spec, "w*w").unwrap();
        let want = reduce_text(&spec, "-u^3 - u*v^2 + 2*v*w - 2*v^2 - 6*u^2 - 16*u - 16 + 3*v").unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn strategies_agree() {
        let spec = d_cubic(2);
        let words = parse_words("w*v*u*w*v + v*w*w*u + (1/2+i)*w*w*w").unwrap();
        let rw = Rewriter::new(&spec);
        assert_eq!(rw.reduce(&words, Strategy::Leftmost), rw.reduce(&words, Strategy::Rightmost));
    }

    #[test]
    fn diamond_resolves_for_consistent_specs() {
        assert!(check_diamond(&d_cubic(0)).all_resolve());
        let h = AlgebraSpec::h(Poly::from_ints(&[1, 2, 3]), Scalar::i()).unwrap();
        let report = check_diamond(&h);
        assert_eq!(report.pairs.len(), 2);
        assert!(report.all_resolve());
    }

    #[test]
    fn diamond_detects_corrupted_p() {
        let good = d_cubic(0);
        let bad_p = good.p() + &Poly::from_ints(&[1]);
        let bad = AlgebraSpec::unchecked(Kind::D, bad_p, good.q().cloned(), Scalar::zero());
        let report = check_diamond(&bad);
        let wwv = report.pairs.iter().find(|p| p.word == vec![Gen::W, Gen::W, Gen::V]).unwrap();
        assert!(!wwv.resolves());
        assert!(!report.all_resolve());
    }
}
