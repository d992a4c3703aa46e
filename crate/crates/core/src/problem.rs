//! Problem files, the polynomial grammar, and the built-in presets.
//!
//! A problem file is line oriented; `#` starts a comment:
//!
//! ```text
//! p = 2
//! vars = x, y, z
//! gens = x*y, y*z
//! e_max = 3
//! ```
//!
//! `preset = paper-monomial` (or `paper-determinantal`) supplies `vars` and `gens`.
//! Single-operation runs additionally read `gens2` (a second ideal), `element`
//! (a polynomial) and `e` (a bracket exponent).
//!
//! Polynomials are terms joined by `+`/`-`; a term is an optional integer
//! coefficient followed by `*`-separated powers `name^exp` (`^exp` defaults to 1).
//! Whitespace is insignificant.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{is_valid_name, Limits, Ring, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// `(xy, yz)` in `x, y, z`.
    PaperMonomial,
    /// The 2x2 minors of the generic matrix `[x y z; u v w]`.
    PaperDeterminantal,
}

impl Preset {
    pub const ALL: [Preset; 2] = [Preset::PaperMonomial, Preset::PaperDeterminantal];

    pub fn name(self) -> &'static str {
        match self {
            Preset::PaperMonomial => "paper-monomial",
            Preset::PaperDeterminantal => "paper-determinantal",
        }
    }

    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Preset::PaperMonomial => &["x", "y", "z"],
            Preset::PaperDeterminantal => &["x", "y", "z", "u", "v", "w"],
        }
    }

    /// Generator text. The 2x2 minors of the matrix with rows x, y, z and u, v, w
    /// are listed by deleted column: third, second, first.
    pub fn generator_text(self) -> &'static str {
        match self {
            Preset::PaperMonomial => "x*y, y*z",
            Preset::PaperDeterminantal => "x*v - y*u, x*w - z*u, y*w - z*v",
        }
    }

    pub fn default_e_max(self) -> u32 {
        match self {
            Preset::PaperMonomial => 3,
            Preset::PaperDeterminantal => 2,
        }
    }

    pub fn ring(self, p: u64) -> Result<Ring> {
        RingContext::new(p, self.variables().iter().copied())
    }

    pub fn generators(self, ring: &Ring) -> Result<Vec<Polynomial>> {
        parse_polynomial_list(ring, self.generator_text(), 1, 1)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Preset> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown preset {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub preset: Option<Preset>,
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub e_max: Option<u32>,
    /// `gens2`, the second operand of binary operations.
    pub second: Option<Vec<Polynomial>>,
    pub element: Option<Polynomial>,
    pub e: Option<u32>,
}

impl ProblemFile {
    pub fn from_preset(preset: Preset, p: u64) -> Result<ProblemFile> {
        let ring = preset.ring(p)?;
        let generators = preset.generators(&ring)?;
        Ok(ProblemFile {
            preset: Some(preset),
            ring,
            generators,
            e_max: None,
            second: None,
            element: None,
            e: None,
        })
    }

    /// Move every polynomial onto a copy of the ring with the given limits.
    pub fn with_limits(self, limits: Limits) -> ProblemFile {
        let ring = self.ring.with_limits(limits);
        let moved = |fs: Vec<Polynomial>| -> Vec<Polynomial> {
            fs.iter().map(|f| f.in_ring(&ring).expect("equivalent ring")).collect()
        };
        ProblemFile {
            preset: self.preset,
            generators: moved(self.generators),
            e_max: self.e_max,
            second: self.second.map(moved),
            element: self.element.map(|f| f.in_ring(&ring).expect("equivalent ring")),
            e: self.e,
            ring,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn variables(&self) -> &[String] {
        self.ring.variables()
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Entry<'a> {
    line: usize,
    /// 1-based column of the first character of `value`.
    column: usize,
    value: &'a str,
}

fn parse_uint<T: FromStr>(entry: &Entry<'_>, what: &str) -> Result<T> {
    let trimmed = entry.value.trim();
    let lead = entry.value.len() - entry.value.trim_start().len();
    trimmed
        .parse()
        .map_err(|_| parse_error(entry.line, entry.column + lead, format!("expected a non-negative integer for {what}")))
}

/// Parse a problem file. `p_override`, when given, replaces the file's `p`.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    parse_problem_with(text, None)
}

pub fn parse_problem_with(text: &str, p_override: Option<u64>) -> Result<ProblemFile> {
    const KEYS: [&str; 8] = ["p", "vars", "gens", "e_max", "preset", "gens2", "element", "e"];
    let mut entries: [Option<Entry<'_>>; 8] = Default::default();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(parse_error(line, col, "expected `key = value`"));
        };
        let key = content[..eq].trim();
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| {
            let col = content.len() - content.trim_start().len() + 1;
            parse_error(line, col, format!("unknown key {key:?}"))
        })?;
        if entries[slot].is_some() {
            return Err(parse_error(line, 1, format!("duplicate key {key:?}")));
        }
        entries[slot] = Some(Entry {
            line,
            column: content[..=eq].chars().count() + 1,
            value: &content[eq + 1..],
        });
    }
    let [p_entry, vars_entry, gens_entry, e_max_entry, preset_entry, gens2_entry, element_entry, e_entry] =
        entries;

    let preset = match &preset_entry {
        None => None,
        Some(en) => Some(en.value.trim().parse::<Preset>().map_err(|_| {
            parse_error(en.line, en.column, format!("unknown preset {:?}", en.value.trim()))
        })?),
    };

    let p = match (p_override, &p_entry) {
        (Some(p), _) => p,
        (None, Some(en)) => parse_uint(en, "p")?,
        (None, None) if preset.is_some() => 2,
        (None, None) => return Err(Error::InvalidConfig("missing `p`".into())),
    };

    let (ring, generators) = match preset {
        Some(preset) => {
            let ring = preset.ring(p)?;
            let gens = preset.generators(&ring)?;
            (ring, gens)
        }
        None => {
            let vars_entry = vars_entry.ok_or_else(|| Error::InvalidConfig("missing `vars`".into()))?;
            let vars = parse_variables(&vars_entry)?;
            let ring = RingContext::new(p, vars)?;
            let gens_entry = gens_entry.ok_or_else(|| Error::InvalidConfig("missing `gens`".into()))?;
            let gens = parse_polynomial_list(&ring, gens_entry.value, gens_entry.line, gens_entry.column)?;
            (ring, gens)
        }
    };

    let e_max = e_max_entry.map(|en| parse_uint(&en, "e_max")).transpose()?;
    let e = e_entry.map(|en| parse_uint(&en, "e")).transpose()?;
    let second = gens2_entry
        .map(|en| parse_polynomial_list(&ring, en.value, en.line, en.column))
        .transpose()?;
    let element = element_entry
        .map(|en| parse_polynomial_at(&ring, en.value, en.line, en.column))
        .transpose()?;

    Ok(ProblemFile {
        preset,
        ring,
        generators,
        e_max,
        second,
        element,
        e,
    })
}

fn parse_variables(entry: &Entry<'_>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut column = entry.column;
    for piece in entry.value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let name = piece.trim();
        if !is_valid_name(name) {
            return Err(parse_error(entry.line, column + lead, format!("invalid variable name {name:?}")));
        }
        out.push(name.to_string());
        column += piece.chars().count() + 1;
    }
    Ok(out)
}

/// Comma-separated polynomials; each must be nonzero mod p.
fn parse_polynomial_list(ring: &Ring, text: &str, line: usize, column: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut col = column;
    for piece in text.split(',') {
        let f = parse_polynomial_at(ring, piece, line, col)?;
        if f.is_zero() {
            let lead = piece.len() - piece.trim_start().len();
            return Err(parse_error(line, col + lead, "generator is zero mod p"));
        }
        out.push(f);
        col += piece.chars().count() + 1;
    }
    Ok(out)
}

/// Parse one polynomial.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

fn parse_polynomial_at(ring: &Ring, text: &str, line: usize, column: usize) -> Result<Polynomial> {
    let mut parser = PolyParser {
        ring,
        chars: text.chars().collect(),
        pos: 0,
        line,
        column,
    };
    parser.polynomial()
}

struct PolyParser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl PolyParser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        parse_error(self.line, self.column + self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("expected a polynomial")),
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = field.neg(t.coeff);
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return Err(self.error(format!("unexpected character {c:?}"))),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_unsorted(self.ring, terms))
    }

    /// Digits, reduced mod `modulus` as they are read (so no overflow).
    fn integer_mod(&mut self, modulus: u64) -> u64 {
        let mut acc = 0u64;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            acc = (acc * 10 + d as u64) % modulus;
            self.pos += 1;
        }
        acc
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an exponent"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| {
            parse_error(self.line, self.column + start, "exponent out of range")
        })
    }

    fn term(&mut self) -> Result<Term> {
        let field = *self.ring.field();
        let n = self.ring.nvars();
        let mut coeff = FieldElement::ONE;
        let mut exps = vec![0u32; n];
        let mut expect_factor = true;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = field.element(self.integer_mod(field.characteristic() as u64));
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c.is_ascii_alphabetic() => {}
                _ => expect_factor = false,
            }
        }
        while expect_factor {
            self.skip_ws();
            let start = self.pos;
            while self
                .chars
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().collect();
            if name.is_empty() || !is_valid_name(&name) {
                self.pos = start;
                return Err(self.error("expected a variable"));
            }
            let index = self.ring.variable_index(&name).ok_or_else(|| {
                parse_error(self.line, self.column + start, format!("unknown variable {name:?}"))
            })?;
            let power = if self.peek() == Some('^') {
                self.pos += 1;
                self.exponent()?
            } else {
                1
            };
            exps[index] = exps[index]
                .checked_add(power)
                .ok_or_else(|| self.error("exponent out of range"))?;
            expect_factor = if self.peek() == Some('*') {
                self.pos += 1;
                true
            } else {
                false
            };
        }
        Ok(Term {
            coeff,
            monomial: Monomial::new(exps),
        })
    }
}
