//! Primitive words indexed by rationals.
//!
//! Convention: the word for `p/q` has `p` letters `B` and `q` letters `A`,
//! so `W_{0/1} = A`, `W_{1/0} = B` and the abelian image of `W_{p/q}` is
//! `(p, q)`. Three schemes build these words:
//!
//! * the W scheme descends the Farey tree and multiplies the larger
//!   neighbor's word on the left, `W_{m/n (+) r/s} = W_{r/s} W_{m/n}`;
//! * the continued-fraction scheme builds the same words along the
//!   convergents (and the V recursion gives cyclic conjugates of them);
//! * the E scheme flips the product order when `pq` is even, which yields
//!   the unique palindrome in the conjugacy class.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{ExponentError, FareyError};
use crate::farey::{
    approximants, continued_fraction, descent, distinguished_neighbors, is_neighbor, mediant,
    ExtRational, FareyInt,
};
use crate::words::{Generator, Letter, Sign, Word};
use crate::Rational;

fn check_nonnegative<T: FareyInt>(x: &ExtRational<T>) -> Result<(), FareyError> {
    if x.is_negative() {
        return Err(FareyError::Negative(x.to_string()));
    }
    Ok(())
}

/// `W_{p/q}` from the Farey recursion. Each step reuses the two edge words
/// of the previous triangle, so the cost is `O(level * |W|)`.
pub fn w_word<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, FareyError> {
    check_nonnegative(x)?;
    if x.is_infinite() {
        return Ok(Word::letter(Letter::B));
    }
    let mut lo = Word::letter(Letter::A);
    let mut hi = Word::letter(Letter::B);
    let mut last = lo.clone();
    for step in descent(x)? {
        let w = hi.concat(&lo);
        last = w.clone();
        if *x < step.mediant {
            hi = w;
        } else if *x > step.mediant {
            lo = w;
        }
    }
    Ok(last)
}

/// The product in the opposite order, `W_{m/n} W_{r/s}`. Always conjugate
/// to [`w_word`] but usually a different word.
pub fn w_word_reversed_product<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, FareyError> {
    let (lo, hi) = distinguished_neighbors(x)?;
    Ok(w_word(&lo)?.concat(&w_word(&hi)?))
}

/// `W_{p/q}` built along the convergents `p_j/q_j` of the continued
/// fraction: `W_j = W_{j-2} W_{j-1}^{a_j}` when `p_{j-2}/q_{j-2} > p/q`,
/// else `W_{j-1}^{a_j} W_{j-2}`, seeded with `W_{0/1} = A` and
/// `W_{1/0} = B` at `j = -2, -1`.
pub fn cf_word<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, FareyError> {
    check_nonnegative(x)?;
    if x.is_infinite() {
        return Ok(Word::letter(Letter::B));
    }
    let cf = continued_fraction(x)?;
    let convergents = approximants(&cf);
    let mut prev2 = (ExtRational::<T>::zero(), Word::letter(Letter::A));
    let mut prev1 = (ExtRational::<T>::infinity(), Word::letter(Letter::B));
    for (a, conv) in cf.digits().iter().zip(convergents) {
        let reps = a.to_usize().expect("digit fits in usize");
        let power = prev1.1.pow(reps);
        let w = if prev2.0 > *x {
            prev2.1.concat(&power)
        } else {
            power.concat(&prev2.1)
        };
        prev2 = std::mem::replace(&mut prev1, (conv, w));
    }
    Ok(prev1.1)
}

/// The V recursion for `x > 1`: returns `[V_{-1}, V_0, ..., V_k]` with
/// `V_{-1} = B`, `V_0 = A B^{a_0}` and `V_j = V_{j-2} V_{j-1}^{a_j}`.
pub fn v_sequence<T: FareyInt>(x: &ExtRational<T>) -> Result<Vec<Word>, FareyError> {
    if x.is_infinite() || *x <= ExtRational::one() {
        return Err(FareyError::OutOfDomain {
            operation: "v_sequence",
            value: x.to_string(),
            reason: "requires a finite rational greater than 1",
        });
    }
    let cf = continued_fraction(x)?;
    let digits = cf.digits();
    let a0 = digits[0].to_i64().expect("digit fits in i64");
    let mut seq = vec![
        Word::letter(Letter::B),
        Word::letter(Letter::A).concat(&Word::generator_power(Generator::B, a0)),
    ];
    for a in &digits[1..] {
        let n = seq.len();
        let reps = a.to_usize().expect("digit fits in usize");
        let next = seq[n - 2].concat(&seq[n - 1].pow(reps));
        seq.push(next);
    }
    Ok(seq)
}

/// A representative of the V scheme for any `x >= 0`: the tail of
/// [`v_sequence`] for `x > 1`, the generator-swapped tail for `1/x`
/// when `x < 1`, and the bases `A`, `B`, `BA` otherwise.
pub fn v_word<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, FareyError> {
    check_nonnegative(x)?;
    if x.is_infinite() {
        return Ok(Word::letter(Letter::B));
    }
    if x.numer().is_zero() {
        return Ok(Word::letter(Letter::A));
    }
    let one = ExtRational::one();
    if *x == one {
        return Ok("BA".parse().expect("literal"));
    }
    if *x > one {
        return Ok(v_sequence(x)?.pop().expect("nonempty"));
    }
    Ok(v_sequence(&x.recip())?
        .pop()
        .expect("nonempty")
        .swap_generators())
}

/// `E_{p/q}`: like the W scheme, but when `pq` is even the smaller
/// neighbor's word comes first.
pub fn e_word<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, FareyError> {
    check_nonnegative(x)?;
    if x.is_infinite() {
        return Ok(Word::letter(Letter::B));
    }
    let mut lo = Word::letter(Letter::A);
    let mut hi = Word::letter(Letter::B);
    let mut last = lo.clone();
    for step in descent(x)? {
        let m = step.mediant;
        let w = if m.pq_even() {
            lo.concat(&hi)
        } else {
            hi.concat(&lo)
        };
        last = w.clone();
        if *x < m {
            hi = w;
        } else if *x > m {
            lo = w;
        }
    }
    Ok(last)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartsKind {
    SinglePalindrome,
    PalindromePair,
}

/// `E_{p/q}` as one palindrome (`pq` even) or a product of two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromicParts {
    pub kind: PartsKind,
    pub first: Word,
    /// Empty for a single palindrome.
    pub second: Word,
}

impl PalindromicParts {
    pub fn product(&self) -> Word {
        self.first.concat(&self.second)
    }
}

pub fn palindromic_parts<T: FareyInt>(x: &ExtRational<T>) -> Result<PalindromicParts, FareyError> {
    check_nonnegative(x)?;
    if x.is_base() || x.pq_even() {
        return Ok(PalindromicParts {
            kind: PartsKind::SinglePalindrome,
            first: e_word(x)?,
            second: Word::identity(),
        });
    }
    let (lo, hi) = distinguished_neighbors(x)?;
    Ok(PalindromicParts {
        kind: PartsKind::PalindromePair,
        first: e_word(&hi)?,
        second: e_word(&lo)?,
    })
}

/// Primitive associates: Farey neighbors.
pub fn associates<T: FareyInt>(x: &ExtRational<T>, y: &ExtRational<T>) -> bool {
    is_neighbor(x, y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeClass {
    /// Blocks of `B` separated by single `A`s.
    BHeavy,
    /// Blocks of `A` separated by single `B`s.
    AHeavy,
}

impl SlopeClass {
    pub fn block_generator(self) -> Generator {
        match self {
            SlopeClass::BHeavy => Generator::B,
            SlopeClass::AHeavy => Generator::A,
        }
    }
}

/// Block exponents `n_0; n_1, ..., n_t` of `X^{n_0} Y X^{n_1} Y ... Y X^{n_t}`
/// where `X` is the block generator and `Y` the separator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentSequence {
    pub slope_class: SlopeClass,
    pub exponents: Vec<usize>,
    pub separator_sign: Sign,
}

impl ExponentSequence {
    /// Number of separators.
    pub fn separators(&self) -> usize {
        self.exponents.len() - 1
    }

    /// The exponents read cyclically: block `i` follows separator `i`, and
    /// the leading block `n_0` is merged into the last one.
    pub fn cyclic_blocks(&self) -> Vec<usize> {
        let t = self.separators();
        let mut blocks = self.exponents[1..].to_vec();
        blocks[t - 1] += self.exponents[0];
        blocks
    }

    /// `floor(block letters / separators)`.
    pub fn base_exponent(&self) -> usize {
        self.exponents.iter().sum::<usize>() / self.separators()
    }
}

fn generator_sign(w: &Word, g: Generator) -> Result<Option<Sign>, ExponentError> {
    let mut seen = None;
    for l in w.letters().iter().filter(|l| l.generator == g) {
        match seen {
            None => seen = Some(l.sign),
            Some(s) if s != l.sign => {
                return Err(ExponentError::MixedSigns(
                    Letter::new(g, Sign::Pos).to_char(),
                ))
            }
            _ => {}
        }
    }
    Ok(seen)
}

/// Splits a cyclically reduced single-signed word into majority blocks
/// separated by minority letters. With equal counts `B` forms the blocks.
pub fn primitive_exponents(w: &Word) -> Result<ExponentSequence, ExponentError> {
    if !w.is_cyclically_reduced() {
        return Err(ExponentError::NotCyclicallyReduced);
    }
    let a_sign = generator_sign(w, Generator::A)?;
    let b_sign = generator_sign(w, Generator::B)?;
    let (Some(a_sign), Some(b_sign)) = (a_sign, b_sign) else {
        return Err(ExponentError::MissingGenerator);
    };
    let img = w.abelianize();
    let (slope_class, separator_sign) = if img.b_sum.abs() >= img.a_sum.abs() {
        (SlopeClass::BHeavy, a_sign)
    } else {
        (SlopeClass::AHeavy, b_sign)
    };
    let block = slope_class.block_generator();
    let mut exponents = vec![0usize];
    for l in w.letters() {
        if l.generator == block {
            *exponents.last_mut().expect("nonempty") += 1;
        } else {
            exponents.push(0);
        }
    }
    Ok(ExponentSequence {
        slope_class,
        exponents,
        separator_sign,
    })
}

/// Necessary conditions: every cyclic block is `a0` or `a0 + 1`, and one of
/// the two values is isolated (never cyclically adjacent to itself). The
/// long blocks are the isolated ones when the next continued-fraction digit
/// is at least 2; when it is 1 the short blocks are.
pub fn exponent_law_holds(blocks: &[usize], a0: usize) -> bool {
    let n = blocks.len();
    if blocks.iter().any(|&b| b != a0 && b != a0 + 1) {
        return false;
    }
    if n < 2 {
        return true;
    }
    let isolated = |v: usize| (0..n).all(|i| !(blocks[i] == v && blocks[(i + 1) % n] == v));
    isolated(a0 + 1) || isolated(a0)
}

/// Sign-flip symmetries `A -> A^{±1}`, `B -> B^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    InvertA,
    InvertB,
    InvertBoth,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::InvertA,
        Symmetry::InvertB,
        Symmetry::InvertBoth,
    ];

    pub fn from_signs(a: Sign, b: Sign) -> Symmetry {
        match (a, b) {
            (Sign::Pos, Sign::Pos) => Symmetry::Identity,
            (Sign::Neg, Sign::Pos) => Symmetry::InvertA,
            (Sign::Pos, Sign::Neg) => Symmetry::InvertB,
            (Sign::Neg, Sign::Neg) => Symmetry::InvertBoth,
        }
    }

    pub fn flips(self, g: Generator) -> bool {
        matches!(
            (self, g),
            (Symmetry::InvertA, Generator::A)
                | (Symmetry::InvertB, Generator::B)
                | (Symmetry::InvertBoth, _)
        )
    }

    pub fn apply_letter(self, l: Letter) -> Letter {
        if self.flips(l.generator) {
            l.inverse()
        } else {
            l
        }
    }

    /// Involution, so it is also its own inverse map.
    pub fn apply(self, w: &Word) -> Word {
        w.map_letters(|l| self.apply_letter(l))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum NotPrimitiveReason {
    Identity,
    MixedSigns { generator: Generator },
    NotCoprime { b_sum: i64, a_sum: i64 },
    ExponentLaw,
    NotARotation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    /// `symmetry(core).rotate_left(rotation) == w_word(slope)`, where
    /// `core` is the cyclic reduction of the input.
    Primitive {
        slope: Rational,
        rotation: usize,
        symmetry: Symmetry,
    },
    NotPrimitive(NotPrimitiveReason),
}

impl Verdict {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Verdict::Primitive { .. })
    }

    pub fn slope(&self) -> Option<Rational> {
        match self {
            Verdict::Primitive { slope, .. } => Some(*slope),
            Verdict::NotPrimitive(_) => None,
        }
    }
}

/// Decides primitivity exactly. After cyclic reduction and the sign and
/// coprimality gates, the word is normalised into the positive quadrant
/// and compared, up to rotation, with `W_{p/q}` for its abelian image.
pub fn is_primitive(w: &Word) -> Verdict {
    use NotPrimitiveReason::*;

    let core = w.cyclic_core();
    if core.is_empty() {
        return Verdict::NotPrimitive(Identity);
    }
    let a_sign = match generator_sign(&core, Generator::A) {
        Ok(s) => s,
        Err(_) => {
            return Verdict::NotPrimitive(MixedSigns {
                generator: Generator::A,
            })
        }
    };
    let b_sign = match generator_sign(&core, Generator::B) {
        Ok(s) => s,
        Err(_) => {
            return Verdict::NotPrimitive(MixedSigns {
                generator: Generator::B,
            })
        }
    };
    let img = core.abelianize();
    let (p, q) = (img.b_sum.abs(), img.a_sum.abs());
    if num_integer::gcd(p, q) != 1 {
        return Verdict::NotPrimitive(NotCoprime {
            b_sum: img.b_sum,
            a_sum: img.a_sum,
        });
    }
    let symmetry = Symmetry::from_signs(a_sign.unwrap_or(Sign::Pos), b_sign.unwrap_or(Sign::Pos));
    let slope = Rational::new(p, q).expect("coprime, not both zero");
    let normal = symmetry.apply(&core);
    if normal.len() == 1 {
        return Verdict::Primitive {
            slope,
            rotation: 0,
            symmetry,
        };
    }

    let exps = primitive_exponents(&normal).expect("single-signed, both generators present");
    if !exponent_law_holds(&exps.cyclic_blocks(), exps.base_exponent()) {
        return Verdict::NotPrimitive(ExponentLaw);
    }

    let target = w_word(&slope).expect("positive slope");
    match normal.rotation_to(&target) {
        Some(rotation) => Verdict::Primitive {
            slope,
            rotation,
            symmetry,
        },
        None => Verdict::NotPrimitive(NotARotation),
    }
}

/// One entry of [`enumerate_primitives`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: FareyInt")]
pub struct Enumerated<T> {
    pub x: ExtRational<T>,
    pub level: usize,
    pub w: Word,
    pub e: Word,
}

/// Breadth-first walk of the Farey tree: level 0 gives `0/1, 1/0`, each
/// later level the mediants of the previous level's edges, left to right.
pub struct PrimitiveEnumeration<T> {
    max_level: usize,
    level: usize,
    pending: VecDeque<ExtRational<T>>,
    edges: Vec<(ExtRational<T>, ExtRational<T>)>,
}

impl<T: FareyInt> PrimitiveEnumeration<T> {
    fn advance_level(&mut self) -> bool {
        if self.level >= self.max_level {
            return false;
        }
        self.level += 1;
        let mut next = Vec::with_capacity(self.edges.len() * 2);
        for (lo, hi) in &self.edges {
            let m = mediant(lo, hi);
            self.pending.push_back(m);
            next.push((*lo, m));
            next.push((m, *hi));
        }
        if self.level < self.max_level {
            self.edges = next;
        } else {
            self.edges.clear();
        }
        true
    }
}

impl<T: FareyInt> Iterator for PrimitiveEnumeration<T> {
    type Item = Enumerated<T>;

    fn next(&mut self) -> Option<Enumerated<T>> {
        while self.pending.is_empty() {
            if !self.advance_level() {
                return None;
            }
        }
        let x = self.pending.pop_front()?;
        Some(Enumerated {
            x,
            level: self.level,
            w: w_word(&x).expect("nonnegative"),
            e: e_word(&x).expect("nonnegative"),
        })
    }
}

pub fn enumerate_primitives<T: FareyInt>(max_level: usize) -> PrimitiveEnumeration<T> {
    PrimitiveEnumeration {
        max_level,
        level: 0,
        pending: VecDeque::from([ExtRational::zero(), ExtRational::infinity()]),
        edges: vec![(ExtRational::zero(), ExtRational::infinity())],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::level;

    type R = ExtRational<i64>;

    fn r(s: &str) -> R {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn positive_fractions(max_sum: i64) -> Vec<R> {
        let mut v = Vec::new();
        for s in 2..=max_sum {
            for p in 1..s {
                let q = s - p;
                if num_integer::gcd(p, q) == 1 {
                    v.push(R::new(p, q).unwrap());
                }
            }
        }
        v
    }

    #[test]
    fn w_word_examples() {
        assert_eq!(w_word(&r("0/1")).unwrap(), w("A"));
        assert_eq!(w_word(&r("1/0")).unwrap(), w("B"));
        assert_eq!(w_word(&r("1/1")).unwrap(), w("BA"));
        assert_eq!(w_word(&r("1/2")).unwrap(), w("BAA"));
        assert_eq!(w_word(&r("3/5")).unwrap(), w("BABAABAA"));
        assert_eq!(w_word(&r("2/1")).unwrap(), w("BBA"));
        assert!(w_word(&r("-1/2")).is_err());
    }

    #[test]
    fn cf_word_examples() {
        assert_eq!(cf_word(&r("3/5")).unwrap(), w("BABAABAA"));
        assert_eq!(cf_word(&r("2/1")).unwrap(), w("BBA"));
        assert_eq!(cf_word(&r("0/1")).unwrap(), w("A"));
        assert_eq!(cf_word(&r("1/1")).unwrap(), w("BA"));
        assert_eq!(cf_word(&R::infinity()).unwrap(), w("B"));
    }

    #[test]
    fn v_sequence_examples() {
        let v = v_sequence(&r("8/3")).unwrap();
        assert_eq!(v, vec![w("B"), w("ABB"), w("BABB"), w("ABBBABBBABB")]);
        let v = v_sequence(&r("5/2")).unwrap();
        assert_eq!(v[2], w("BABBABB"));
        let v = v_sequence(&r("2/1")).unwrap();
        assert_eq!(v, vec![w("B"), w("ABB")]);
        assert!(v_sequence(&r("1/1")).is_err());
        assert!(v_sequence(&r("1/2")).is_err());
        assert!(v_sequence(&R::infinity()).is_err());
    }

    #[test]
    fn v_terms_track_convergents() {
        for x in positive_fractions(40).into_iter().filter(|x| *x > R::one()) {
            let v = v_sequence(&x).unwrap();
            let conv = approximants(&continued_fraction(&x).unwrap());
            for (vj, cj) in v[1..].iter().zip(&conv) {
                assert!(vj.cyclic_equal(&w_word(cj).unwrap()), "{x}: {vj} vs {cj}");
            }
        }
    }

    #[test]
    fn primitive_exponent_examples() {
        let e = primitive_exponents(&w("ABBBABBBABB")).unwrap();
        assert_eq!(e.exponents, vec![0, 3, 3, 2]);
        assert_eq!(e.slope_class, SlopeClass::BHeavy);
        assert_eq!(e.separator_sign, Sign::Pos);

        let e = primitive_exponents(&w("BABBABB")).unwrap();
        assert_eq!(e.exponents, vec![1, 2, 2]);
        assert_eq!(e.cyclic_blocks(), vec![2, 3]);

        let e = primitive_exponents(&w("ABB")).unwrap();
        assert_eq!(e.exponents, vec![0, 2]);

        let e = primitive_exponents(&w("aBBaB")).unwrap();
        assert_eq!(e.separator_sign, Sign::Neg);

        let e = primitive_exponents(&w("ABAA")).unwrap();
        assert_eq!(e.slope_class, SlopeClass::AHeavy);
        assert_eq!(e.exponents, vec![1, 2]);

        assert_eq!(
            primitive_exponents(&w("ABab")),
            Err(ExponentError::MixedSigns('A'))
        );
        assert_eq!(
            primitive_exponents(&w("BBB")),
            Err(ExponentError::MissingGenerator)
        );
        assert_eq!(
            primitive_exponents(&w("ABa")),
            Err(ExponentError::NotCyclicallyReduced)
        );
    }

    #[test]
    fn v2_of_two_two_two() {
        // [2,2,2] = 12/5; the recursion gives blocks (0; 3,2,3,2,2)
        let x = r("12/5");
        assert_eq!(continued_fraction(&x).unwrap().digits(), &[2, 2, 2]);
        let v = v_sequence(&x).unwrap();
        let e = primitive_exponents(v.last().unwrap()).unwrap();
        assert_eq!(e.exponents, vec![0, 3, 2, 3, 2, 2]);
    }

    #[test]
    fn is_primitive_examples() {
        let v = is_primitive(&w("BABAB"));
        assert_eq!(v.slope(), Some(r("3/2")));
        assert!(!is_primitive(&w("AABBB")).is_primitive());
        assert!(!is_primitive(&w("BBBAA")).is_primitive());
        assert_eq!(
            is_primitive(&Word::identity()),
            Verdict::NotPrimitive(NotPrimitiveReason::Identity)
        );
        assert_eq!(is_primitive(&w("a")).slope(), Some(r("0/1")));
        assert_eq!(is_primitive(&w("b")).slope(), Some(r("1/0")));
        assert!(matches!(
            is_primitive(&w("AAB")),
            Verdict::Primitive {
                symmetry: Symmetry::Identity,
                ..
            }
        ));
        assert!(matches!(
            is_primitive(&w("ABAB")),
            Verdict::NotPrimitive(NotPrimitiveReason::NotCoprime { .. })
        ));
        assert!(matches!(
            is_primitive(&w("ABab")),
            Verdict::NotPrimitive(NotPrimitiveReason::MixedSigns { .. })
        ));
        // conjugated and sign-flipped primitive
        let g = w("aBB");
        let x = g.concat(&w("BABAB")).concat(&g.inverse());
        assert_eq!(is_primitive(&x).slope(), Some(r("3/2")));
        let y = w("AbAbb");
        match is_primitive(&y) {
            Verdict::Primitive {
                slope,
                rotation,
                symmetry,
            } => {
                assert_eq!(slope, r("3/2"));
                assert_eq!(symmetry, Symmetry::InvertB);
                assert_eq!(
                    symmetry.apply(&y.cyclic_core()).rotate_left(rotation),
                    w_word(&slope).unwrap()
                );
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn every_w_word_conjugate_is_primitive() {
        for x in positive_fractions(40) {
            let target = w_word(&x).unwrap();
            for k in 0..target.len() {
                let rot = target.rotate_left(k);
                assert_eq!(is_primitive(&rot).slope(), Some(x), "{x} rotation {k}");
                for s in Symmetry::ALL {
                    assert!(is_primitive(&s.apply(&rot.inverse())).is_primitive());
                }
            }
        }
    }

    #[test]
    fn isolated_block_follows_second_digit() {
        // 5/3 = [1;1,2]: long blocks 2,2,1 sit side by side
        let e = primitive_exponents(&w_word(&r("5/3")).unwrap()).unwrap();
        let mut blocks = e.cyclic_blocks();
        blocks.sort();
        assert_eq!(blocks, vec![1, 2, 2]);
        assert!(exponent_law_holds(&e.cyclic_blocks(), 1));
        assert!(!exponent_law_holds(&[2, 2, 1, 1], 1));
        for x in positive_fractions(50).into_iter().filter(|x| *x > R::one()) {
            let cf = continued_fraction(&x).unwrap();
            let digits = cf.digits();
            if digits.len() < 2 {
                continue;
            }
            let e = primitive_exponents(&w_word(&x).unwrap()).unwrap();
            let blocks = e.cyclic_blocks();
            let a0 = digits[0] as usize;
            let isolated = if digits[1] >= 2 { a0 + 1 } else { a0 };
            let n = blocks.len();
            for i in 0..n {
                assert!(
                    !(blocks[i] == isolated && blocks[(i + 1) % n] == isolated),
                    "{x}: {blocks:?}"
                );
            }
        }
    }

    #[test]
    fn exponent_law_but_wrong_order_is_rejected() {
        let good = w_word(&r("12/5")).unwrap();
        let exps = primitive_exponents(&good.cyclic_core()).unwrap();
        assert!(exponent_law_holds(&exps.cyclic_blocks(), 2));
        // every law-respecting block order at 16/7; gaps (1,4) between the
        // two long blocks pass the law but are not balanced
        let x = r("16/7");
        let target = w_word(&x).unwrap();
        let mut law_only = 0;
        for mask in 0u32..(1 << 7) {
            if mask.count_ones() != 2 {
                continue;
            }
            let blocks: Vec<usize> = (0..7).map(|i| 2 + ((mask >> i) & 1) as usize).collect();
            if !exponent_law_holds(&blocks, 2) {
                continue;
            }
            let mut s = String::new();
            for b in &blocks {
                s.push('A');
                s.push_str(&"B".repeat(*b));
            }
            let cand = w(&s);
            let verdict = is_primitive(&cand);
            assert_eq!(verdict.is_primitive(), cand.cyclic_equal(&target));
            if !verdict.is_primitive() {
                law_only += 1;
                assert_eq!(
                    verdict,
                    Verdict::NotPrimitive(NotPrimitiveReason::NotARotation)
                );
            }
        }
        assert!(law_only > 0);
    }

    #[test]
    fn e_word_examples() {
        assert_eq!(e_word(&r("1/2")).unwrap(), w("ABA"));
        assert_eq!(e_word(&r("3/2")).unwrap(), w("BABAB"));
        assert_eq!(e_word(&r("3/5")).unwrap(), w("ABABAABA"));
        assert_eq!(e_word(&r("1/1")).unwrap(), w("BA"));
        assert_eq!(e_word(&r("0/1")).unwrap(), w("A"));
        assert_eq!(e_word(&r("1/0")).unwrap(), w("B"));
    }

    #[test]
    fn palindromic_parts_examples() {
        let parts = palindromic_parts(&r("1/2")).unwrap();
        assert_eq!(parts.kind, PartsKind::SinglePalindrome);
        assert_eq!(parts.first, w("ABA"));
        assert!(parts.second.is_identity());

        let parts = palindromic_parts(&r("1/1")).unwrap();
        assert_eq!(parts.kind, PartsKind::PalindromePair);
        assert_eq!((parts.first, parts.second), (w("B"), w("A")));

        let parts = palindromic_parts(&r("3/5")).unwrap();
        assert_eq!(
            (parts.first.clone(), parts.second.clone()),
            (w("ABABA"), w("ABA"))
        );
        assert_eq!(parts.product(), e_word(&r("3/5")).unwrap());

        let parts = palindromic_parts(&r("0/1")).unwrap();
        assert_eq!(parts.first, w("A"));
    }

    #[test]
    fn associates_examples() {
        assert!(associates(&r("0/1"), &r("1/0")));
        assert!(associates(&r("1/2"), &r("2/3")));
        assert!(!associates(&r("1/2"), &r("3/4")));
    }

    #[test]
    fn enumeration_small_levels() {
        let items: Vec<_> = enumerate_primitives::<i64>(0).collect();
        assert_eq!(items.len(), 2);
        assert_eq!((items[0].x, items[1].x), (r("0/1"), r("1/0")));
        assert_eq!((items[0].w.clone(), items[1].w.clone()), (w("A"), w("B")));

        let items: Vec<_> = enumerate_primitives::<i64>(1).collect();
        assert_eq!(items[2].x, r("1/1"));
        assert_eq!(items[2].w, w("BA"));
        assert_eq!(items[2].level, 1);

        let items: Vec<_> = enumerate_primitives::<i64>(2).collect();
        let tail: Vec<_> = items[3..].iter().map(|e| (e.x, e.w.clone())).collect();
        assert_eq!(tail, vec![(r("1/2"), w("BAA")), (r("2/1"), w("BBA"))]);
    }

    #[test]
    fn enumeration_matches_brute_force_levels() {
        let max = 10usize;
        let items: Vec<_> = enumerate_primitives::<i64>(max).collect();
        // fib(max + 2) bounds p + q at this level
        let (mut f0, mut f1) = (1i64, 1i64);
        for _ in 0..max {
            (f0, f1) = (f1, f0 + f1);
        }
        for lev in 1..=max {
            let mut got: Vec<R> = items
                .iter()
                .filter(|e| e.level == lev)
                .map(|e| e.x)
                .collect();
            assert_eq!(got.len(), 1 << (lev - 1));
            let mut sorted = got.clone();
            sorted.sort();
            assert_eq!(got, sorted, "left to right within level {lev}");
            let mut expected: Vec<R> = positive_fractions(f1)
                .into_iter()
                .filter(|x| level(x).unwrap() == lev as i64)
                .collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected);
        }
        for e in &items {
            assert_eq!(e.level as i64, level(&e.x).unwrap());
        }
    }

    #[test]
    fn reversed_product_is_conjugate_but_different() {
        for x in positive_fractions(30) {
            let a = w_word(&x).unwrap();
            let b = w_word_reversed_product(&x).unwrap();
            assert!(a.cyclic_equal(&b));
            assert_ne!(a, b, "{x}");
        }
    }

    #[test]
    fn symmetry_is_involution() {
        let x = w("ABaaBBb");
        for s in Symmetry::ALL {
            assert_eq!(s.apply(&s.apply(&x)), x);
        }
    }
}
