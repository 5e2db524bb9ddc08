//! Farey-tree arithmetic over exact integers.
//!
//! Everything here is generic over the integer type through [`FareyInt`];
//! the crate root exports `i64` aliases. The tree is rooted at the base
//! edge `(0/1, 1/0)`, both of which have level 0.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, PrimInt, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{FareyError, ParseError};

/// Integer types usable as numerator/denominator.
pub trait FareyInt:
    PrimInt
    + Signed
    + Integer
    + FromPrimitive
    + ToPrimitive
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> FareyInt for T where
    T: PrimInt
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Hash
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

fn add<T: FareyInt>(a: T, b: T) -> T {
    a.checked_add(&b)
        .expect("integer overflow in Farey arithmetic")
}

fn mul<T: FareyInt>(a: T, b: T) -> T {
    a.checked_mul(&b)
        .expect("integer overflow in Farey arithmetic")
}

/// A rational `p/q` in lowest terms with `q >= 0`; `1/0` is the point at
/// infinity and compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtRational<T> {
    p: T,
    q: T,
}

impl<T: FareyInt> ExtRational<T> {
    pub fn new(p: T, q: T) -> Result<Self, FareyError> {
        if q.is_zero() {
            if p.is_zero() {
                return Err(FareyError::ZeroDenominator(p.to_string()));
            }
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(ExtRational { p, q })
    }

    /// Constructor for values already known to be coprime with `q >= 0`.
    pub(crate) fn from_coprime(p: T, q: T) -> Self {
        debug_assert!(!q.is_negative() && p.gcd(&q).is_one());
        ExtRational { p, q }
    }

    pub fn integer(n: T) -> Self {
        ExtRational { p: n, q: T::one() }
    }

    pub fn zero() -> Self {
        Self::integer(T::zero())
    }

    pub fn one() -> Self {
        Self::integer(T::one())
    }

    pub fn infinity() -> Self {
        ExtRational {
            p: T::one(),
            q: T::zero(),
        }
    }

    pub fn numer(&self) -> T {
        self.p
    }

    pub fn denom(&self) -> T {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.p.is_negative()
    }

    /// `0/1` or `1/0`: the endpoints of the base edge.
    pub fn is_base(&self) -> bool {
        self.is_infinite() || self.p.is_zero()
    }

    /// Reciprocal; swaps the roles of the two generators.
    pub fn recip(&self) -> Self {
        if self.p.is_zero() {
            return Self::infinity();
        }
        if self.is_infinite() {
            return Self::zero();
        }
        Self::new(self.q, self.p).expect("nonzero")
    }

    pub fn abs(&self) -> Self {
        ExtRational {
            p: self.p.abs(),
            q: self.q,
        }
    }

    /// `p*q` is even.
    pub fn pq_even(&self) -> bool {
        self.p.is_even() || self.q.is_even()
    }

    /// `p * s - q * r` for `self = p/q`, `other = r/s`.
    pub fn determinant(&self, other: &Self) -> T {
        mul(self.p, other.q) - mul(self.q, other.p)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        self.p.to_f64().unwrap_or(f64::NAN) / self.q.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T: FareyInt> PartialOrd for ExtRational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: FareyInt> Ord for ExtRational<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => mul(self.p, other.q).cmp(&mul(other.p, self.q)),
        }
    }
}

impl<T: FareyInt> fmt::Display for ExtRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl<T: FareyInt> FromStr for ExtRational<T> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = |reason: &str| ParseError::BadRational {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (ps, qs) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let p = T::from_str_radix(ps, 10).map_err(|_| bad(&format!("bad numerator {ps:?}")))?;
        let q = T::from_str_radix(qs, 10).map_err(|_| bad(&format!("bad denominator {qs:?}")))?;
        if q.is_negative() {
            return Err(bad("negative denominator"));
        }
        if q.is_zero() && !p.abs().is_one() {
            return Err(bad("only 1/0 may have a zero denominator"));
        }
        if !p.gcd(&q).is_one() {
            return Err(bad("not in lowest terms"));
        }
        ExtRational::new(p, q).map_err(|e| bad(&e.to_string()))
    }
}

impl<T: FareyInt> Serialize for ExtRational<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: FareyInt> Deserialize<'de> for ExtRational<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Farey sum `(p+r)/(q+s)`, reduced. Neighbors give a reduced sum
/// directly, lying strictly between them.
///
/// Panics on integer overflow; see [`checked_mediant`].
pub fn mediant<T: FareyInt>(x: &ExtRational<T>, y: &ExtRational<T>) -> ExtRational<T> {
    checked_mediant(x, y).expect("integer overflow in Farey sum")
}

pub fn checked_mediant<T: FareyInt>(
    x: &ExtRational<T>,
    y: &ExtRational<T>,
) -> Option<ExtRational<T>> {
    let p = x.p.checked_add(&y.p)?;
    let q = x.q.checked_add(&y.q)?;
    ExtRational::new(p, q).ok()
}

/// `|p*s - q*r| == 1`.
pub fn is_neighbor<T: FareyInt>(x: &ExtRational<T>, y: &ExtRational<T>) -> bool {
    x.determinant(y).abs().is_one()
}

/// Canonical continued fraction `[a0, ..., ak]`: `a0 >= 0`, later digits
/// `>= 1`, and a last digit `>= 2` whenever there is more than one digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T> {
    digits: Vec<T>,
}

impl<T: FareyInt> ContinuedFraction<T> {
    pub fn new(digits: Vec<T>) -> Result<Self, FareyError> {
        let bad = || FareyError::NonCanonicalDigits(format_digits(&digits));
        let Some((first, rest)) = digits.split_first() else {
            return Err(bad());
        };
        if first.is_negative() || rest.iter().any(|d| *d < T::one()) {
            return Err(bad());
        }
        if let Some(last) = rest.last() {
            if *last < T::one() + T::one() {
                return Err(bad());
            }
        }
        Ok(ContinuedFraction { digits })
    }

    pub fn digits(&self) -> &[T] {
        &self.digits
    }

    /// Index `k` of the last digit.
    pub fn depth(&self) -> usize {
        self.digits.len() - 1
    }

    pub fn value(&self) -> ExtRational<T> {
        *approximants(self).last().expect("nonempty")
    }

    /// Sum of the digits, which is the Farey level of the value.
    pub fn digit_sum(&self) -> T {
        self.digits.iter().fold(T::zero(), |acc, d| add(acc, *d))
    }
}

fn format_digits<T: fmt::Display>(digits: &[T]) -> String {
    let inner: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl<T: FareyInt> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.digits))
    }
}

impl<T: FareyInt> FromStr for ContinuedFraction<T> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = |reason: String| ParseError::BadContinuedFraction {
            input: s.to_string(),
            reason,
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected [a0,a1,...]".to_string()))?;
        let digits = inner
            .split(',')
            .map(|d| T::from_str_radix(d.trim(), 10).map_err(|_| bad(format!("bad digit {d:?}"))))
            .collect::<Result<Vec<T>, _>>()?;
        ContinuedFraction::new(digits).map_err(|e| bad(e.to_string()))
    }
}

/// Euclidean algorithm. Only finite, nonnegative inputs have a digit list.
pub fn continued_fraction<T: FareyInt>(
    x: &ExtRational<T>,
) -> Result<ContinuedFraction<T>, FareyError> {
    if x.is_infinite() {
        return Err(FareyError::Infinite(x.to_string()));
    }
    if x.is_negative() {
        return Err(FareyError::Negative(x.to_string()));
    }
    let (mut a, mut b) = (x.p, x.q);
    let mut digits = Vec::new();
    while !b.is_zero() {
        let (d, r) = a.div_rem(&b);
        digits.push(d);
        a = b;
        b = r;
    }
    // Euclid already ends on a digit >= 2 unless the value is 1/1
    Ok(ContinuedFraction { digits })
}

/// Convergents `p_j/q_j` of `[a0, ..., ak]`; the last one is the value.
pub fn approximants<T: FareyInt>(cf: &ContinuedFraction<T>) -> Vec<ExtRational<T>> {
    // seeds p_{-2}/q_{-2} = 0/1 and p_{-1}/q_{-1} = 1/0
    let (mut p2, mut q2) = (T::zero(), T::one());
    let (mut p1, mut q1) = (T::one(), T::zero());
    let mut out = Vec::with_capacity(cf.digits.len());
    for &a in &cf.digits {
        let p = add(mul(a, p1), p2);
        let q = add(mul(a, q1), q2);
        out.push(ExtRational::from_coprime(p, q));
        (p2, q2, p1, q1) = (p1, q1, p, q);
    }
    out
}

/// Level of `x >= 0` in the Farey tree: the digit sum of its continued
/// fraction, with `0/1` and `1/0` at level 0.
pub fn level<T: FareyInt>(x: &ExtRational<T>) -> Result<T, FareyError> {
    if x.is_infinite() {
        return Ok(T::zero());
    }
    Ok(continued_fraction(x)?.digit_sum())
}

/// The descent from the base edge to a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath<T> {
    /// New vertex of each triangle crossed, ending at the target.
    pub vertices: Vec<ExtRational<T>>,
    pub level: usize,
    pub left_neighbor: Option<ExtRational<T>>,
    pub right_neighbor: Option<ExtRational<T>>,
}

/// One step of a Farey descent: the edge `(lo, hi)` and its mediant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FareyStep<T> {
    pub lo: ExtRational<T>,
    pub hi: ExtRational<T>,
    pub mediant: ExtRational<T>,
}

/// Iterator over the triangles crossed on the way down to a target
/// `x > 0`, `x` finite. The last step has `mediant == x`.
pub struct Descent<T> {
    target: ExtRational<T>,
    lo: ExtRational<T>,
    hi: ExtRational<T>,
    done: bool,
}

impl<T: FareyInt> Iterator for Descent<T> {
    type Item = FareyStep<T>;

    fn next(&mut self) -> Option<FareyStep<T>> {
        if self.done {
            return None;
        }
        let m = mediant(&self.lo, &self.hi);
        let step = FareyStep {
            lo: self.lo,
            hi: self.hi,
            mediant: m,
        };
        match self.target.cmp(&m) {
            Ordering::Equal => self.done = true,
            Ordering::Less => self.hi = m,
            Ordering::Greater => self.lo = m,
        }
        Some(step)
    }
}

/// Steps from the base edge `(0/1, 1/0)` down to `x`. Empty for `0/1`
/// and `1/0`.
pub fn descent<T: FareyInt>(x: &ExtRational<T>) -> Result<Descent<T>, FareyError> {
    if x.is_negative() {
        return Err(FareyError::Negative(x.to_string()));
    }
    Ok(Descent {
        target: *x,
        lo: ExtRational::zero(),
        hi: ExtRational::infinity(),
        done: x.is_base(),
    })
}

pub fn farey_path<T: FareyInt>(x: &ExtRational<T>) -> Result<FareyPath<T>, FareyError> {
    let mut vertices = Vec::new();
    let mut edge = None;
    for step in descent(x)? {
        vertices.push(step.mediant);
        edge = Some((step.lo, step.hi));
    }
    Ok(FareyPath {
        level: vertices.len(),
        vertices,
        left_neighbor: edge.map(|e| e.0),
        right_neighbor: edge.map(|e| e.1),
    })
}

/// The two neighbors of `x` with lower level, `lo < x < hi`, read off the
/// continued fraction as `[a0..a_{k-1}]` and `[a0..a_{k-1}, a_k - 1]`.
pub fn distinguished_neighbors<T: FareyInt>(
    x: &ExtRational<T>,
) -> Result<(ExtRational<T>, ExtRational<T>), FareyError> {
    if x.is_base() {
        return Err(FareyError::NoDistinguishedNeighbors(x.to_string()));
    }
    let cf = continued_fraction(x)?;
    let digits = cf.digits();
    let k = digits.len() - 1;
    let truncated = if k == 0 {
        ExtRational::infinity()
    } else {
        value_of_digits(&digits[..k])
    };
    let mut lowered = digits.to_vec();
    lowered[k] = lowered[k] - T::one();
    let lowered = value_of_digits(&lowered);
    Ok(if truncated < lowered {
        (truncated, lowered)
    } else {
        (lowered, truncated)
    })
}

/// Value of a possibly non-canonical digit list (trailing 1 or 0 allowed).
fn value_of_digits<T: FareyInt>(digits: &[T]) -> ExtRational<T> {
    let (mut p2, mut q2) = (T::zero(), T::one());
    let (mut p1, mut q1) = (T::one(), T::zero());
    for &a in digits {
        let p = add(mul(a, p1), p2);
        let q = add(mul(a, q1), q2);
        (p2, q2, p1, q1) = (p1, q1, p, q);
    }
    ExtRational::new(p1, q1).expect("convergent of nonempty digits")
}
