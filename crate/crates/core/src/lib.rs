//! Primitive words and palindromes in the free group `F(A, B)`.
//!
//! Primitive conjugacy classes are indexed by extended rationals `p/q`
//! (with `1/0` for `B`). The crate builds their words three ways along the
//! Farey tree, decides primitivity of arbitrary words exactly, factors
//! them into palindromes, and realises them as cutting sequences of lines
//! on the square torus. [`oracle`] holds slow, independent checks.
//!
//! ```
//! use primwords::{enumerate, Rational};
//!
//! let x: Rational = "3/5".parse().unwrap();
//! assert_eq!(enumerate::w_word(&x).unwrap().to_string(), "BABAABAA");
//! assert_eq!(enumerate::e_word(&x).unwrap().to_string(), "ABABAABA");
//! ```

pub mod cutting;
pub mod enumerate;
pub mod error;
pub mod farey;
pub mod oracle;
pub mod words;

pub use error::{CuttingError, ExponentError, FareyError, ParseError};
pub use farey::{ContinuedFraction, ExtRational, FareyInt, FareyPath};
pub use words::{AbelianImage, Generator, Letter, Sign, Word};

pub type Rational = ExtRational<i64>;
pub type Rational32 = ExtRational<i32>;
pub type Rational128 = ExtRational<i128>;
pub type CF = ContinuedFraction<i64>;
