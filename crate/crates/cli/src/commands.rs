use std::error::Error;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use primwords::cutting::{self, CuttingSpec, Start, StrandDiagram};
use primwords::enumerate::{self as en, Verdict};
use primwords::farey;
use primwords::oracle;
use primwords::{Rational, Word};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Format, Scheme};

type CmdResult = Result<ExitCode, Box<dyn Error>>;

#[derive(Debug, Serialize)]
struct Envelope<'a> {
    command: &'a str,
    input: String,
    result: Value,
    version: &'static str,
}

fn emit(command: &str, input: String, result: Value) -> io::Result<()> {
    let env = Envelope {
        command,
        input,
        result,
        version: env!("CARGO_PKG_VERSION"),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, &env)?;
    writeln!(out)
}

fn parse_rational(s: &str) -> Result<Rational, Box<dyn Error>> {
    Ok(s.parse::<Rational>()?)
}

fn parse_word(s: &str) -> Result<Word, Box<dyn Error>> {
    Ok(s.parse::<Word>()?)
}

fn cf_text(x: &Rational) -> String {
    farey::continued_fraction(x)
        .map(|cf| cf.to_string())
        .unwrap_or_else(|_| "none".to_string())
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn word(input: &str, scheme: Option<Scheme>, fmt: Format) -> CmdResult {
    let x = parse_rational(input)?;
    let w = en::w_word(&x)?;
    let e = en::e_word(&x)?;
    let level = farey::farey_path(&x)?.level;
    let cf = cf_text(&x);
    let cf_word = en::cf_word(&x)?;
    let v_word = en::v_word(&x)?;
    let exponents = en::primitive_exponents(&w).ok();

    if fmt == Format::Json {
        emit(
            "word",
            input.to_string(),
            json!({
                "rational": x,
                "w": w,
                "e": e,
                "cf_word": cf_word,
                "v_word": v_word,
                "cf": cf,
                "level": level,
                "exponents": exponents,
                "scheme": scheme.map(scheme_name),
            }),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    match scheme {
        None => println!("W={w} E={e} cf={cf} level={level}"),
        Some(s) => {
            let chosen = match s {
                Scheme::W => &w,
                Scheme::E => &e,
                Scheme::Cf => &cf_word,
                Scheme::V => &v_word,
            };
            println!(
                "{}={chosen} cf={cf} level={level}",
                scheme_name(s).to_uppercase()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn scheme_name(s: Scheme) -> &'static str {
    match s {
        Scheme::W => "w",
        Scheme::E => "e",
        Scheme::Cf => "cf",
        Scheme::V => "v",
    }
}

pub fn check(input: &str, fmt: Format) -> CmdResult {
    let w = parse_word(input)?;
    let verdict = en::is_primitive(&w);
    if fmt == Format::Json {
        emit(
            "check",
            input.to_string(),
            json!({ "word": w, "primitive": verdict.is_primitive(), "verdict": verdict }),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    match verdict {
        Verdict::Primitive { slope, .. } => println!("primitive p/q={slope}"),
        Verdict::NotPrimitive(_) => println!("not primitive"),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn palindrome(input: &str, fmt: Format) -> CmdResult {
    let x = parse_rational(input)?;
    let parts = en::palindromic_parts(&x)?;
    if fmt == Format::Json {
        emit(
            "palindrome",
            input.to_string(),
            serde_json::to_value(&parts)?,
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    match parts.kind {
        en::PartsKind::SinglePalindrome => println!("palindrome {}", parts.first),
        en::PartsKind::PalindromePair => println!("pair {} {}", parts.first, parts.second),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn farey(input: &str, fmt: Format) -> CmdResult {
    let x = parse_rational(input)?;
    let path = farey::farey_path(&x)?;
    let approx = farey::continued_fraction(&x)
        .map(|cf| farey::approximants(&cf))
        .unwrap_or_default();
    let cf = cf_text(&x);
    if fmt == Format::Json {
        emit(
            "farey",
            input.to_string(),
            json!({
                "rational": x,
                "sequence": path.vertices,
                "level": path.level,
                "left_neighbor": path.left_neighbor,
                "right_neighbor": path.right_neighbor,
                "approximants": approx,
                "cf": cf,
            }),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    let neighbors = match (path.left_neighbor, path.right_neighbor) {
        (Some(lo), Some(hi)) => format!("{lo},{hi}"),
        _ => "none".to_string(),
    };
    println!(
        "sequence={} level={} neighbors={} approximants={} cf={}",
        join(&path.vertices),
        path.level,
        neighbors,
        join(&approx),
        cf
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_start(s: &str) -> Result<Start, Box<dyn Error>> {
    Ok(match s {
        "lowest-a" => Start::LowestASide,
        "bottom" => Start::RightmostBottom,
        "middle" => Start::MiddleStrand,
        other => Start::Offset(other.parse().map_err(|_| {
            format!("invalid start {other:?}: expected lowest-a, bottom, middle or an offset")
        })?),
    })
}

fn diagram_json(d: &StrandDiagram) -> Result<Value, Box<dyn Error>> {
    Ok(serde_json::to_value(d)?)
}

pub fn cutseq(
    rational: Option<&str>,
    word: Option<&str>,
    start: &str,
    svg: Option<&Path>,
    fmt: Format,
) -> CmdResult {
    let (input, w) = match (rational, word) {
        (Some(r), _) => {
            let x = parse_rational(r)?;
            let spec = CuttingSpec::new(x, parse_start(start)?);
            (r.to_string(), cutting::cutting_word(&spec)?)
        }
        (None, Some(s)) => (s.to_string(), parse_word(s)?.cyclic_core()),
        (None, None) => return Err("either a slope or --word is required".into()),
    };
    let d = cutting::strand_diagram(&w)?;
    if let Some(path) = svg {
        std::fs::write(path, cutting::emit_svg(&d))?;
    }
    if fmt == Format::Json {
        emit("cutseq", input, diagram_json(&d)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "word={} vertical={} horizontal={} corner={} simple={}",
        d.word, d.counts.vertical, d.counts.horizontal, d.counts.corner, d.simple
    );
    Ok(ExitCode::SUCCESS)
}

pub fn associates(first: &str, second: &str, fmt: Format) -> CmdResult {
    let x = parse_rational(first)?;
    let y = parse_rational(second)?;
    let det = x.determinant(&y);
    let neighbors = en::associates(&x, &y);
    let wx = en::w_word(&x.abs())?;
    let wy = en::w_word(&y.abs())?;
    let generating = oracle::is_generating_pair(&wx, &wy);
    if fmt == Format::Json {
        emit(
            "associates",
            format!("{first} {second}"),
            json!({
                "x": x, "y": y, "determinant": det,
                "neighbors": neighbors, "generating_pair": generating,
                "w_x": wx, "w_y": wy,
            }),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    let verdict = if neighbors {
        "associates"
    } else {
        "not associates"
    };
    println!("{verdict} det={det} W={wx} W'={wy}");
    Ok(ExitCode::SUCCESS)
}

pub fn enumerate(max_level: usize, fmt: Format) -> CmdResult {
    let items = en::enumerate_primitives::<i64>(max_level);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match fmt {
        Format::Json => {
            drop(out);
            let all: Vec<_> = items.collect();
            emit(
                "enumerate",
                format!("max-level={max_level}"),
                json!({ "max_level": max_level, "items": all }),
            )?;
        }
        Format::Tsv => {
            writeln!(out, "rational\tW\tE\tlevel")?;
            for it in items {
                writeln!(out, "{}\t{}\t{}\t{}", it.x, it.w, it.e, it.level)?;
            }
        }
        Format::Text => {
            for it in items {
                writeln!(out, "{} W={} E={} level={}", it.x, it.w, it.e, it.level)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cross_check(max_len: usize, fmt: Format) -> CmdResult {
    let report = oracle::cross_check(max_len);
    if fmt == Format::Json {
        emit(
            "cross-check",
            format!("max-len={max_len}"),
            serde_json::to_value(&report)?,
        )?;
    } else {
        println!(
            "checked={} primitives={} pairs={} disagreements={}",
            report.checked,
            report.primitives,
            report.pairs_checked,
            report.disagreements.len()
        );
        if let Some(d) = report.first_counterexample() {
            println!("first counterexample: {}", serde_json::to_string(d)?);
        }
    }
    Ok(if report.disagreements.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
