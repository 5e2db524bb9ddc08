//! Cutting sequences of rational lines on the square torus.
//!
//! The fundamental domain is the unit square with the left side labelled
//! `A`, the right side `Ā`, the bottom `B` and the top `B̄`. A line of slope
//! `p/q` (rise `p`, run `q`) is started just above a lattice point, at
//! `(0, δ)`, and followed to `(q, p + δ)`. Each side it cuts contributes
//! the label of the copy it enters: `A` when it moves right through a
//! vertical side, `B` when it moves up through a horizontal one.
//!
//! Everything is integer arithmetic. The crossing of the vertical line
//! `x = i` happens at parameter `i/q`, the crossing of `y = l` just before
//! `l/p`; the two can only coincide at the closing point.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::enumerate::Symmetry;
use crate::error::CuttingError;
use crate::farey::{ExtRational, FareyInt};
use crate::words::{Generator, Letter, Sign, Word};
use crate::Rational;

/// Where the fundamental segment starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Start {
    /// The lowest crossing point on an `A` side; the word starts with `A`.
    LowestASide,
    /// The rightmost crossing point on a `B` side.
    RightmostBottom,
    /// Centered on the middle vertical or horizontal strand (palindrome).
    MiddleStrand,
    /// `LowestASide` rotated left by the given number of letters.
    Offset(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuttingSpec<T> {
    pub slope: ExtRational<T>,
    pub start: Start,
}

impl<T: FareyInt> CuttingSpec<T> {
    pub fn new(slope: ExtRational<T>, start: Start) -> Self {
        CuttingSpec { slope, start }
    }
}

/// One side crossing of the unfolded line.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Crossing {
    letter: Letter,
    /// Offset along the side it lies on, in `(0, 1)`.
    position: f64,
}

/// Crossings of the segment from `(0, δ)` to `(q, p + δ)` for `p, q >= 1`,
/// in order; the last one is the `A` crossing at the closing point.
fn crossings(p: u64, q: u64) -> Vec<Crossing> {
    let mut out = Vec::with_capacity((p + q) as usize);
    let (mut i, mut l) = (1u64, 1u64);
    while i <= q || l <= p {
        // A_i precedes B_l iff i/q < l/p; a tie only happens at i = q, l = p
        // and there the B crossing comes first because of the offset δ.
        let take_a = l > p || (i <= q && i * p < l * q);
        if take_a {
            let k = (p * i) % q;
            out.push(Crossing {
                letter: Letter::A,
                position: (k as f64 + 0.5) / q as f64,
            });
            i += 1;
        } else {
            let k = match (q * l) % p {
                0 => p,
                k => k,
            };
            out.push(Crossing {
                letter: Letter::B,
                position: (k as f64 - 0.5) / p as f64,
            });
            l += 1;
        }
    }
    out
}

fn positive_parts<T: FareyInt>(x: &ExtRational<T>) -> Result<(u64, u64), CuttingError> {
    let p = x.numer().abs().to_u64();
    let q = x.denom().to_u64();
    match (p, q) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => Err(CuttingError::UnsupportedSlope(x.to_string())),
    }
}

/// Negative slopes are read through `B -> B^{-1}`.
fn slope_symmetry<T: FareyInt>(x: &ExtRational<T>) -> Symmetry {
    if x.is_negative() {
        Symmetry::InvertB
    } else {
        Symmetry::Identity
    }
}

fn word_of(cs: &[Crossing]) -> Word {
    Word::from_letters(cs.iter().map(|c| c.letter))
}

/// Crossings rotated so that the lowest `A` crossing comes first.
fn lowest_a_crossings(p: u64, q: u64) -> Vec<Crossing> {
    let mut cs = crossings(p, q);
    cs.rotate_right(1);
    cs
}

pub fn cutting_word<T: FareyInt>(spec: &CuttingSpec<T>) -> Result<Word, CuttingError> {
    let x = &spec.slope;
    let sym = slope_symmetry(x);
    let (p, q) = positive_parts(x)?;
    if p == 0 || q == 0 {
        let letter = if q == 0 { Letter::B } else { Letter::A };
        return match spec.start {
            Start::Offset(i) if i >= 1 => Err(CuttingError::OffsetOutOfRange { offset: i, len: 1 }),
            _ => Ok(sym.apply(&Word::letter(letter))),
        };
    }
    let n = (p + q) as usize;
    let cs = crossings(p, q);
    let word = match spec.start {
        Start::LowestASide => word_of(&lowest_a_crossings(p, q)),
        Start::RightmostBottom => {
            // the last B crossing sits just before the closing A
            let mut cs = cs;
            cs.rotate_left(n - 2);
            word_of(&cs)
        }
        Start::MiddleStrand => return centered_palindrome(x),
        Start::Offset(i) => {
            if i >= n {
                return Err(CuttingError::OffsetOutOfRange { offset: i, len: n });
            }
            let mut cs = lowest_a_crossings(p, q);
            cs.rotate_left(i);
            word_of(&cs)
        }
    };
    Ok(sym.apply(&word))
}

/// Index in [`crossings`] of the crossing that begins the middle
/// non-corner strand, for `p + q` odd.
fn middle_strand_start(p: u64, q: u64, cs: &[Crossing]) -> usize {
    // Folded into one square, bottom crossings sit at (k - 1/2)/p for
    // k = 1..p and the strand from k is vertical iff k <= p - q. Left
    // crossings sit at (k + 1/2)/q for k = 0..q-1 and the strand from k is
    // horizontal iff k < q - p.
    let (target_letter, wanted) = if p > q {
        (Letter::B, (p - q).div_ceil(2))
    } else {
        (Letter::A, (q - p - 1) / 2)
    };
    let (mut i, mut l) = (0u64, 0u64);
    for (j, c) in cs.iter().enumerate() {
        if c.letter == Letter::A {
            i += 1;
        } else {
            l += 1;
        }
        if c.letter != target_letter {
            continue;
        }
        let k = if p > q {
            match (q * l) % p {
                0 => p,
                k => k,
            }
        } else {
            (p * i) % q
        };
        if k == wanted {
            return j;
        }
    }
    unreachable!("every residue occurs once among the crossings")
}

/// The cutting word read from the middle of the middle vertical strand
/// (`p/q > 1`) or horizontal strand (`p/q < 1`). For `pq` even it is a
/// palindrome that starts and ends with the block generator.
pub fn centered_palindrome<T: FareyInt>(x: &ExtRational<T>) -> Result<Word, CuttingError> {
    let sym = slope_symmetry(x);
    let (p, q) = positive_parts(x)?;
    if q == 0 {
        return Ok(Word::letter(Letter::B));
    }
    if p == 0 {
        return Ok(Word::letter(Letter::A));
    }
    if p % 2 == 1 && q % 2 == 1 {
        return Err(CuttingError::OddParity(x.to_string()));
    }
    let mut cs = crossings(p, q);
    let j = middle_strand_start(p, q, &cs);
    cs.rotate_left(j + 1);
    Ok(sym.apply(&word_of(&cs)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

impl Side {
    fn is_vertical_side(self) -> bool {
        matches!(self, Side::Left | Side::Right)
    }

    /// Side through which a strand enters the square when the crossing
    /// carries this letter.
    fn entry(l: Letter) -> Side {
        match (l.generator, l.sign) {
            (Generator::A, Sign::Pos) => Side::Left,
            (Generator::A, Sign::Neg) => Side::Right,
            (Generator::B, Sign::Pos) => Side::Bottom,
            (Generator::B, Sign::Neg) => Side::Top,
        }
    }

    /// Side through which a strand leaves when the next crossing carries
    /// this letter.
    fn exit(next: Letter) -> Side {
        match (next.generator, next.sign) {
            (Generator::A, Sign::Pos) => Side::Right,
            (Generator::A, Sign::Neg) => Side::Left,
            (Generator::B, Sign::Pos) => Side::Top,
            (Generator::B, Sign::Neg) => Side::Bottom,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrandKind {
    Vertical,
    Horizontal,
    Corner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerType {
    LeftBottom,
    LeftTop,
    BottomRight,
    TopRight,
    None,
}

impl CornerType {
    fn opposite(self) -> CornerType {
        match self {
            CornerType::LeftBottom => CornerType::TopRight,
            CornerType::TopRight => CornerType::LeftBottom,
            CornerType::LeftTop => CornerType::BottomRight,
            CornerType::BottomRight => CornerType::LeftTop,
            CornerType::None => CornerType::None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strand {
    pub index: usize,
    pub kind: StrandKind,
    pub corner_type: CornerType,
    pub entry_side: Side,
    pub exit_side: Side,
}

impl Strand {
    fn new(index: usize, entry_side: Side, exit_side: Side) -> Strand {
        let (kind, corner_type) =
            match (entry_side.is_vertical_side(), exit_side.is_vertical_side()) {
                (false, false) => (StrandKind::Vertical, CornerType::None),
                (true, true) => (StrandKind::Horizontal, CornerType::None),
                _ => {
                    let lr = if entry_side.is_vertical_side() {
                        entry_side
                    } else {
                        exit_side
                    };
                    let bt = if entry_side.is_vertical_side() {
                        exit_side
                    } else {
                        entry_side
                    };
                    let corner = match (lr, bt) {
                        (Side::Left, Side::Bottom) => CornerType::LeftBottom,
                        (Side::Left, _) => CornerType::LeftTop,
                        (_, Side::Bottom) => CornerType::BottomRight,
                        _ => CornerType::TopRight,
                    };
                    (StrandKind::Corner, corner)
                }
            };
        Strand {
            index,
            kind,
            corner_type,
            entry_side,
            exit_side,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandCounts {
    pub vertical: usize,
    pub horizontal: usize,
    pub corner: usize,
}

impl StrandCounts {
    pub fn total(&self) -> usize {
        self.vertical + self.horizontal + self.corner
    }
}

/// Placement of a simple word's crossings on its straight line.
#[derive(Debug, Clone, PartialEq)]
struct LineLayout {
    /// Position of crossing `j` of the word along its side.
    positions: Vec<f64>,
}

/// All strands of a closed curve folded into one fundamental domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrandDiagram {
    pub word: Word,
    pub simple: bool,
    pub counts: StrandCounts,
    pub strands: Vec<Strand>,
    /// Slope of the line realising the curve when it is simple.
    pub slope: Option<Rational>,
    #[serde(skip)]
    layout: Option<LineLayout>,
}

fn single_signs(w: &Word) -> Option<(Sign, Sign)> {
    let mut a = None;
    let mut b = None;
    for l in w.letters() {
        let slot = match l.generator {
            Generator::A => &mut a,
            Generator::B => &mut b,
        };
        match *slot {
            None => *slot = Some(l.sign),
            Some(s) if s != l.sign => return None,
            _ => {}
        }
    }
    Some((a.unwrap_or(Sign::Pos), b.unwrap_or(Sign::Pos)))
}

fn corners_on_one_opposite_pair(strands: &[Strand]) -> bool {
    let mut counts = [0usize; 4];
    let idx = |c: CornerType| match c {
        CornerType::LeftBottom => 0,
        CornerType::LeftTop => 1,
        CornerType::BottomRight => 2,
        CornerType::TopRight => 3,
        CornerType::None => unreachable!(),
    };
    for s in strands.iter().filter(|s| s.kind == StrandKind::Corner) {
        counts[idx(s.corner_type)] += 1;
    }
    let used: Vec<CornerType> = [
        CornerType::LeftBottom,
        CornerType::LeftTop,
        CornerType::BottomRight,
        CornerType::TopRight,
    ]
    .into_iter()
    .filter(|c| counts[idx(*c)] > 0)
    .collect();
    match used.as_slice() {
        [] => true,
        [a, b] => b.opposite() == *a && counts[idx(*a)] == counts[idx(*b)],
        _ => false,
    }
}

/// Folds the strands of a cyclically reduced word into one square and
/// decides whether they can be drawn pairwise disjoint. The curve is
/// simple exactly when, up to the sign symmetries, the word is a rotation
/// of the cutting word of the line whose slope is its abelian image.
pub fn strand_diagram(w: &Word) -> Result<StrandDiagram, CuttingError> {
    if w.is_empty() {
        return Err(CuttingError::EmptyWord);
    }
    if !w.is_cyclically_reduced() {
        return Err(CuttingError::NotCyclicallyReduced);
    }
    let letters = w.letters();
    let n = letters.len();
    let strands: Vec<Strand> = (0..n)
        .map(|i| Strand::new(i, Side::entry(letters[i]), Side::exit(letters[(i + 1) % n])))
        .collect();
    let mut counts = StrandCounts::default();
    for s in &strands {
        match s.kind {
            StrandKind::Vertical => counts.vertical += 1,
            StrandKind::Horizontal => counts.horizontal += 1,
            StrandKind::Corner => counts.corner += 1,
        }
    }

    let mut diagram = StrandDiagram {
        word: w.clone(),
        simple: false,
        counts,
        strands,
        slope: None,
        layout: None,
    };

    let Some((a_sign, b_sign)) = single_signs(w) else {
        return Ok(diagram);
    };
    if counts.vertical > 0 && counts.horizontal > 0 {
        return Ok(diagram);
    }
    if !corners_on_one_opposite_pair(&diagram.strands) {
        return Ok(diagram);
    }
    let img = w.abelianize();
    let (p, q) = (img.b_sum.unsigned_abs(), img.a_sum.unsigned_abs());
    if num_integer::gcd(p, q) != 1 {
        return Ok(diagram);
    }
    let sym = Symmetry::from_signs(a_sign, b_sign);
    let normal = sym.apply(w);
    let slope = Rational::new(p as i64, q as i64).expect("coprime");

    if p == 0 || q == 0 {
        diagram.simple = true;
        diagram.slope = Some(slope);
        diagram.layout = Some(LineLayout {
            positions: vec![0.5],
        });
        return Ok(diagram);
    }

    let line = lowest_a_crossings(p, q);
    let Some(k) = normal.rotation_to(&word_of(&line)) else {
        return Ok(diagram);
    };
    // normal[j] = line[(j - k) mod n]; mirror positions back through the symmetry
    let positions = (0..n)
        .map(|j| {
            let c = line[(j + n - k) % n];
            let flip = sym.flips(c.letter.generator.other());
            if flip {
                1.0 - c.position
            } else {
                c.position
            }
        })
        .collect();
    diagram.simple = true;
    diagram.slope = Some(slope);
    diagram.layout = Some(LineLayout { positions });
    Ok(diagram)
}

pub const SVG_SIZE: f64 = 512.0;
pub const SVG_MARGIN: f64 = 32.0;
pub const COLOR_VERTICAL: &str = "#1f77b4";
pub const COLOR_HORIZONTAL: &str = "#2ca02c";
pub const COLOR_CORNER: &str = "#ff7f0e";
pub const COLOR_CROSSING: &str = "#d62728";

type Point = (f64, f64);

fn side_point(side: Side, position: f64) -> Point {
    match side {
        Side::Left => (0.0, position),
        Side::Right => (1.0, position),
        Side::Bottom => (position, 0.0),
        Side::Top => (position, 1.0),
    }
}

/// Positions of the crossings along their sides. Simple words use their
/// line; other words space each side's crossings in order of occurrence.
fn crossing_positions(d: &StrandDiagram) -> Vec<f64> {
    if let Some(layout) = &d.layout {
        return layout.positions.clone();
    }
    let letters = d.word.letters();
    let total_a = letters
        .iter()
        .filter(|l| l.generator == Generator::A)
        .count();
    let total_b = letters.len() - total_a;
    let (mut seen_a, mut seen_b) = (0usize, 0usize);
    letters
        .iter()
        .map(|l| match l.generator {
            Generator::A => {
                seen_a += 1;
                (seen_a as f64 - 0.5) / total_a as f64
            }
            Generator::B => {
                seen_b += 1;
                (seen_b as f64 - 0.5) / total_b as f64
            }
        })
        .collect()
}

fn strand_segments(d: &StrandDiagram) -> Vec<(Point, Point)> {
    let pos = crossing_positions(d);
    let n = d.strands.len();
    d.strands
        .iter()
        .map(|s| {
            let start = side_point(s.entry_side, pos[s.index]);
            let end = side_point(s.exit_side, pos[(s.index + 1) % n]);
            (start, end)
        })
        .collect()
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Interior intersection point of two segments, if they properly cross.
fn segment_intersection(s: (Point, Point), t: (Point, Point)) -> Option<Point> {
    const EPS: f64 = 1e-12;
    let d1 = cross(t.0, t.1, s.0);
    let d2 = cross(t.0, t.1, s.1);
    let d3 = cross(s.0, s.1, t.0);
    let d4 = cross(s.0, s.1, t.1);
    if d1 * d2 < -EPS && d3 * d4 < -EPS {
        let u = d1 / (d1 - d2);
        return Some((
            s.0 .0 + u * (s.1 .0 - s.0 .0),
            s.0 .1 + u * (s.1 .1 - s.0 .1),
        ));
    }
    None
}

/// Pairwise crossings of the drawn strands, in strand-index order.
pub fn strand_crossings(d: &StrandDiagram) -> Vec<(usize, usize, (f64, f64))> {
    let segs = strand_segments(d);
    let mut out = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if let Some(pt) = segment_intersection(segs[i], segs[j]) {
                out.push((i, j, pt));
            }
        }
    }
    out
}

fn to_canvas(p: Point) -> Point {
    let side = SVG_SIZE - 2.0 * SVG_MARGIN;
    (SVG_MARGIN + side * p.0, SVG_MARGIN + side * (1.0 - p.1))
}

/// Deterministic SVG 1.1 rendering of a strand diagram.
pub fn emit_svg(d: &StrandDiagram) -> String {
    let side = SVG_SIZE - 2.0 * SVG_MARGIN;
    let mid = SVG_SIZE / 2.0;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    );
    let _ = writeln!(
        s,
        "  <title>{} ({})</title>",
        d.word,
        if d.simple { "simple" } else { "not simple" }
    );
    let _ = writeln!(
        s,
        "  <rect x=\"{SVG_MARGIN}\" y=\"{SVG_MARGIN}\" width=\"{side}\" height=\"{side}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>"
    );
    let labels = [
        (SVG_MARGIN / 2.0, mid, "A"),
        (SVG_SIZE - SVG_MARGIN / 2.0, mid, "\u{100}"),
        (mid, SVG_SIZE - SVG_MARGIN / 4.0, "B"),
        (mid, SVG_MARGIN * 0.75, "B\u{304}"),
    ];
    s.push_str("  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n");
    for (x, y, t) in labels {
        let _ = writeln!(s, "    <text x=\"{x:.3}\" y=\"{y:.3}\">{t}</text>");
    }
    s.push_str("  </g>\n");

    s.push_str("  <g id=\"strands\" stroke-width=\"3\" stroke-linecap=\"round\">\n");
    for (strand, (a, b)) in d.strands.iter().zip(strand_segments(d)) {
        let color = match strand.kind {
            StrandKind::Vertical => COLOR_VERTICAL,
            StrandKind::Horizontal => COLOR_HORIZONTAL,
            StrandKind::Corner => COLOR_CORNER,
        };
        let (x1, y1) = to_canvas(a);
        let (x2, y2) = to_canvas(b);
        let kind = match strand.kind {
            StrandKind::Vertical => "vertical",
            StrandKind::Horizontal => "horizontal",
            StrandKind::Corner => "corner",
        };
        let _ = writeln!(
            s,
            "    <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{color}\" class=\"{kind}\"/>"
        );
    }
    s.push_str("  </g>\n");

    if !d.simple {
        s.push_str("  <g id=\"crossings\">\n");
        for (_, _, pt) in strand_crossings(d) {
            let (cx, cy) = to_canvas(pt);
            let _ = writeln!(
                s,
                "    <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"6\" fill=\"{COLOR_CROSSING}\"/>"
            );
        }
        s.push_str("  </g>\n");
    }
    s.push_str("</svg>\n");
    s
}
