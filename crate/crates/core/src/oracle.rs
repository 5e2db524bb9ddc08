//! Brute-force ground truth, independent of the Farey machinery: greedy
//! Whitehead reduction for primitivity and Nielsen's commutator test for
//! generating pairs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cutting::strand_diagram;
use crate::enumerate::{associates, is_primitive, w_word};
use crate::farey::ExtRational;
use crate::words::{reduced_words_of_length, Generator, Letter, Sign, Word};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Permutation,
    Multiplier,
}

/// An elementary automorphism fixing one generator and multiplying the
/// other by a letter on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WhiteheadMove {
    pub kind: MoveKind,
    /// Generator that is rewritten.
    pub target: Generator,
    /// Letter multiplied onto it.
    pub multiplier: Letter,
    /// Multiply on the right (`x -> x m`) or the left (`x -> m x`).
    pub on_right: bool,
}

impl WhiteheadMove {
    fn image(&self, l: Letter) -> Word {
        if l.generator != self.target {
            return Word::letter(l);
        }
        let x = Word::letter(Letter::new(self.target, Sign::Pos));
        let m = Word::letter(self.multiplier);
        let pos = if self.on_right {
            x.concat(&m)
        } else {
            m.concat(&x)
        };
        match l.sign {
            Sign::Pos => pos,
            Sign::Neg => pos.inverse(),
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|l| self.image(l))
    }

    pub fn description(&self) -> String {
        let x = Letter::new(self.target, Sign::Pos);
        if self.on_right {
            format!("{x} -> {x}{}", self.multiplier)
        } else {
            format!("{x} -> {}{x}", self.multiplier)
        }
    }
}

/// The eight multiplier moves, in a fixed order: `A -> AB, AB^-1, BA,
/// B^-1 A`, then the same with the generators exchanged.
pub fn multiplier_moves() -> Vec<WhiteheadMove> {
    let mut out = Vec::with_capacity(8);
    for target in [Generator::A, Generator::B] {
        let other = target.other();
        for on_right in [true, false] {
            for sign in [Sign::Pos, Sign::Neg] {
                out.push(WhiteheadMove {
                    kind: MoveKind::Multiplier,
                    target,
                    multiplier: Letter::new(other, sign),
                    on_right,
                });
            }
        }
    }
    out
}

/// Greedy Whitehead reduction: apply the first move that strictly shortens
/// the cyclic word until none does; primitive iff a single letter remains.
pub fn whitehead_is_primitive(w: &Word) -> bool {
    whitehead_minimize(w).len() == 1
}

/// Cyclic word reached by greedy reduction.
pub fn whitehead_minimize(w: &Word) -> Word {
    let moves = multiplier_moves();
    let mut cur = w.cyclic_core();
    'outer: loop {
        if cur.len() <= 1 {
            return cur;
        }
        for mv in &moves {
            let next = mv.apply(&cur).cyclic_core();
            if next.len() < cur.len() {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

fn commutator(u: &Word, v: &Word) -> Word {
    u.concat(v).concat(&u.inverse()).concat(&v.inverse())
}

/// Nielsen: `u, v` generate the free group iff `[u, v]` is conjugate to
/// `[A, B]` or its inverse.
pub fn is_generating_pair(u: &Word, v: &Word) -> bool {
    let c = commutator(u, v);
    let ab = commutator(&Word::letter(Letter::A), &Word::letter(Letter::B));
    c.cyclic_equal(&ab) || c.cyclic_equal(&ab.inverse())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Disagreement {
    Primitivity {
        word: Word,
        whitehead: bool,
        decision: bool,
        strands: bool,
    },
    Associates {
        x: Rational,
        y: Rational,
        neighbors: bool,
        generating: bool,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    /// Reduced words examined.
    pub checked: usize,
    /// Words all three tests call primitive.
    pub primitives: usize,
    /// Rational pairs examined for the associate criterion.
    pub pairs_checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CrossCheckReport {
    pub fn first_counterexample(&self) -> Option<&Disagreement> {
        self.disagreements.first()
    }

    fn merge(mut self, other: CrossCheckReport) -> CrossCheckReport {
        self.checked += other.checked;
        self.primitives += other.primitives;
        self.pairs_checked += other.pairs_checked;
        self.disagreements.extend(other.disagreements);
        self
    }
}

pub const MAX_CROSS_CHECK_LEN: usize = 14;

fn check_word(w: &Word) -> (bool, Option<Disagreement>) {
    let whitehead = whitehead_is_primitive(w);
    let decision = is_primitive(w).is_primitive();
    let strands = strand_diagram(&w.cyclic_core())
        .map(|d| d.simple)
        .unwrap_or(false);
    if whitehead == decision && decision == strands {
        (whitehead, None)
    } else {
        (
            false,
            Some(Disagreement::Primitivity {
                word: w.clone(),
                whitehead,
                decision,
                strands,
            }),
        )
    }
}

/// Runs the three primitivity tests on every reduced word of length
/// `1..=max_len`.
pub fn check_words(max_len: usize) -> CrossCheckReport {
    let max_len = max_len.min(MAX_CROSS_CHECK_LEN);
    let mut report = CrossCheckReport::default();
    for len in 1..=max_len {
        // split on a short prefix so each length fans out over the pool
        let prefix_len = len.min(4);
        let suffix_len = len - prefix_len;
        let prefixes = reduced_words_of_length(prefix_len);
        let part = prefixes
            .par_iter()
            .map(|prefix| {
                let mut r = CrossCheckReport::default();
                extend_and_check(prefix, suffix_len, &mut r);
                r
            })
            .reduce(CrossCheckReport::default, CrossCheckReport::merge);
        report = report.merge(part);
    }
    report
}

fn extend_and_check(prefix: &Word, remaining: usize, report: &mut CrossCheckReport) {
    if remaining == 0 {
        report.checked += 1;
        let (primitive, bad) = check_word(prefix);
        if primitive {
            report.primitives += 1;
        }
        report.disagreements.extend(bad);
        return;
    }
    let mut letters = prefix.letters().to_vec();
    for l in Letter::ALL {
        if prefix.last().is_some_and(|last| last.is_inverse_of(l)) {
            continue;
        }
        letters.push(l);
        extend_and_check(
            &Word::from_letters(letters.iter().copied()),
            remaining - 1,
            report,
        );
        letters.pop();
    }
}

/// Nonnegative canonical rationals `p/q` (including `1/0`) with `p + q <= n`.
pub fn rationals_up_to(n: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for s in 1..=n {
        for p in 0..=s {
            let q = s - p;
            if num_integer::gcd(p, q) == 1 {
                out.push(ExtRational::new(p, q).expect("coprime"));
            }
        }
    }
    out
}

/// Compares the Farey-neighbor criterion with Nielsen's test on the W
/// words of every pair of distinct rationals with `p + q <= max_sum`.
pub fn check_associates(max_sum: i64) -> CrossCheckReport {
    let xs = rationals_up_to(max_sum);
    let words: Vec<Word> = xs.iter().map(|x| w_word(x).expect("nonnegative")).collect();
    (0..xs.len())
        .into_par_iter()
        .map(|i| {
            let mut r = CrossCheckReport::default();
            for j in i + 1..xs.len() {
                r.pairs_checked += 1;
                let neighbors = associates(&xs[i], &xs[j]);
                let generating = is_generating_pair(&words[i], &words[j]);
                if neighbors != generating {
                    r.disagreements.push(Disagreement::Associates {
                        x: xs[i],
                        y: xs[j],
                        neighbors,
                        generating,
                    });
                }
            }
            r
        })
        .reduce(CrossCheckReport::default, CrossCheckReport::merge)
}

/// Every reduced word up to `max_len` (capped at 14) through all three
/// primitivity tests, plus the associate sweep for `p + q <= 20`.
pub fn cross_check(max_len: usize) -> CrossCheckReport {
    check_words(max_len).merge(check_associates(20))
}
