//! Reduced words in the free group on two generators `A` and `B`.
//!
//! Text syntax: uppercase `A`/`B` are the generators, lowercase `a`/`b`
//! their inverses, the empty string is the identity.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const A: Letter = Letter::new(Generator::A, Sign::Pos);
    pub const A_INV: Letter = Letter::new(Generator::A, Sign::Neg);
    pub const B: Letter = Letter::new(Generator::B, Sign::Pos);
    pub const B_INV: Letter = Letter::new(Generator::B, Sign::Neg);

    /// All four letters in the fixed order `A, a, B, b`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

    pub const fn new(generator: Generator, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator, self.sign.flip())
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    pub fn to_char(self) -> char {
        match (self.generator, self.sign) {
            (Generator::A, Sign::Pos) => 'A',
            (Generator::A, Sign::Neg) => 'a',
            (Generator::B, Sign::Pos) => 'B',
            (Generator::B, Sign::Neg) => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'a' => Some(Letter::A_INV),
            'B' => Some(Letter::B),
            'b' => Some(Letter::B_INV),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Net exponent sums of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianImage {
    pub b_sum: i64,
    pub a_sum: i64,
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        AbelianImage {
            b_sum: self.b_sum + rhs.b_sum,
            a_sum: self.a_sum + rhs.a_sum,
        }
    }
}

impl Neg for AbelianImage {
    type Output = AbelianImage;

    fn neg(self) -> AbelianImage {
        AbelianImage {
            b_sum: -self.b_sum,
            a_sum: -self.a_sum,
        }
    }
}

/// A freely reduced word. Every constructor reduces, so no value of this
/// type ever holds an adjacent inverse pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for l in raw {
        match stack.last() {
            Some(&top) if top.is_inverse_of(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word { letters: stack }
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
        reduce(raw)
    }

    /// `g^n`; negative `n` gives the inverse power.
    pub fn generator_power(g: Generator, n: i64) -> Word {
        let sign = if n < 0 { Sign::Neg } else { Sign::Pos };
        Word {
            letters: vec![Letter::new(g, sign); n.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Product `self * other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let overlap = self
            .letters
            .iter()
            .rev()
            .zip(other.letters.iter())
            .take_while(|(x, y)| x.is_inverse_of(**y))
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * overlap);
        letters.extend_from_slice(&self.letters[..self.len() - overlap]);
        letters.extend_from_slice(&other.letters[overlap..]);
        Word { letters }
    }

    pub fn pow(&self, n: usize) -> Word {
        let (core, conj) = self.cyclic_reduce();
        if conj.is_identity() {
            let mut letters = Vec::with_capacity(core.len() * n);
            for _ in 0..n {
                letters.extend_from_slice(&core.letters);
            }
            return Word { letters };
        }
        let body = core.pow(n);
        conj.concat(&body).concat(&conj.inverse())
    }

    /// Reverse the letters and flip every sign.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Letters in reverse order with signs unchanged.
    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Generatorwise inversion: every letter replaced by its inverse, order kept.
    pub fn bar(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Splits `self = conjugator * core * conjugator^-1` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].is_inverse_of(self.letters[n - 1 - k]) {
            k += 1;
        }
        let core = Word {
            letters: self.letters[k..n - k].to_vec(),
        };
        let conjugator = Word {
            letters: self.letters[..k].to_vec(),
        };
        (core, conjugator)
    }

    pub fn cyclic_core(&self) -> Word {
        self.cyclic_reduce().0
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || !f.is_inverse_of(l),
            _ => true,
        }
    }

    /// Left rotation by `k` positions. Only meaningful on cyclically
    /// reduced words; the result is reduced again to stay canonical.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::identity();
        }
        let k = k % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        reduce(letters)
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    pub fn abelianize(&self) -> AbelianImage {
        let mut img = AbelianImage::default();
        for l in &self.letters {
            match l.generator {
                Generator::A => img.a_sum += l.sign.as_i64(),
                Generator::B => img.b_sum += l.sign.as_i64(),
            }
        }
        img
    }

    /// Conjugacy test: cyclic cores are rotations of each other.
    pub fn cyclic_equal(&self, other: &Word) -> bool {
        self.rotation_to(other).is_some()
    }

    /// Smallest `k` with `self.cyclic_core().rotate_left(k) == other.cyclic_core()`.
    pub fn rotation_to(&self, other: &Word) -> Option<usize> {
        let a = self.cyclic_core();
        let b = other.cyclic_core();
        if a.len() != b.len() {
            return None;
        }
        if a.is_empty() {
            return Some(0);
        }
        let n = a.len();
        (0..n)
            .find(|&k| a.letters[k..] == b.letters[..n - k] && a.letters[..k] == b.letters[n - k..])
    }

    /// Run-length view: maximal blocks of a single letter, in order.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((prev, n)) if *prev == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Applies a letter substitution and reduces the result.
    pub fn substitute<F: Fn(Letter) -> Word>(&self, image: F) -> Word {
        let mut raw = Vec::with_capacity(self.len());
        for &l in &self.letters {
            raw.extend_from_slice(image(l).letters());
        }
        reduce(raw)
    }

    /// Maps each letter independently; letter maps that are automorphisms
    /// of the alphabet (sign flips, generator swap) keep the word reduced.
    pub fn map_letters<F: Fn(Letter) -> Letter>(&self, f: F) -> Word {
        reduce(self.letters.iter().map(|&l| f(l)))
    }

    /// Swaps the roles of `A` and `B`.
    pub fn swap_generators(&self) -> Word {
        self.map_letters(|l| Letter::new(l.generator.other(), l.sign))
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        let mut raw = Vec::with_capacity(s.len());
        for (pos, c) in s.trim().chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) => raw.push(l),
                None => {
                    return Err(ParseError::BadLetter {
                        input: s.to_string(),
                        token: c,
                        position: pos,
                    })
                }
            }
        }
        Ok(reduce(raw))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All freely reduced words of exactly `len` letters, in lexicographic
/// order of the letter sequence `A, a, B, b`.
pub fn reduced_words_of_length(len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * 3);
        for w in &out {
            for l in Letter::ALL {
                if w.last().is_some_and(|last| last.is_inverse_of(l)) {
                    continue;
                }
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(Word { letters });
            }
        }
        out = next;
    }
    out
}
