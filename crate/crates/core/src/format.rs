//! Line-oriented text formats: `ZCODE` matrices, `BINCODE` word lists and
//! `WEF` weight distributions.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bits::{BinaryCode, BitWord};
use crate::error::{Error, Result};
use crate::ring::Modulus;
use crate::weights::HammingWe;
use crate::zcode::ZMatrix;

/// Whether the rows of a stored matrix generate the code or check it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Gen,
    Check,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Gen => "gen",
            Role::Check => "check",
        })
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gen" => Ok(Role::Gen),
            "check" => Ok(Role::Check),
            other => Err(Error::Invalid(format!("unknown role {other:?}"))),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Split a header like `ZCODE mod=8 n=4 role=gen` into its `key=value`
/// fields, in order.
fn header_fields<'a>(line: &'a str, tag: &str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(tag) {
        return Err(parse_err(1, format!("expected header starting with {tag}")));
    }
    let mut out = Vec::new();
    for key in keys {
        let field = parts
            .next()
            .ok_or_else(|| parse_err(1, format!("missing {key}=")))?;
        let value = field
            .strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .ok_or_else(|| parse_err(1, format!("expected {key}=…, found {field:?}")))?;
        out.push(value);
    }
    if let Some(extra) = parts.next() {
        return Err(parse_err(1, format!("unexpected header field {extra:?}")));
    }
    Ok(out)
}

fn parse_number<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, format!("bad {what} {s:?}")))
}

/// Content lines after the header, with their 1-based line numbers.
fn body(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .skip(1)
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn first_line(text: &str) -> Result<&str> {
    text.lines()
        .next()
        .ok_or_else(|| parse_err(1, "empty input"))
}

pub fn write_zcode(matrix: &ZMatrix, role: Role) -> String {
    let mut s = format!(
        "ZCODE mod={} n={} role={role}\n",
        matrix.modulus().two_m(),
        matrix.n_cols()
    );
    for row in matrix.rows() {
        let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        s.push_str(&parts.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_zcode(text: &str) -> Result<(ZMatrix, Role)> {
    let fields = header_fields(first_line(text)?, "ZCODE", &["mod", "n", "role"])?;
    let two_m: u64 = parse_number(fields[0], 1, "modulus")?;
    let modulus = Modulus::new(u32::try_from(two_m).map_err(|_| Error::InvalidModulus(two_m))?)?;
    let n: usize = parse_number(fields[1], 1, "length")?;
    let role: Role = fields[2]
        .parse()
        .map_err(|e: Error| parse_err(1, e.to_string()))?;
    let mut rows = Vec::new();
    for (line, content) in body(text) {
        let row: Vec<u32> = content
            .split_whitespace()
            .map(|t| {
                let v: u64 = parse_number(t, line, "residue")?;
                modulus.check(v).map_err(|e| parse_err(line, e.to_string()))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_err(
                line,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    let matrix = ZMatrix::new(modulus, n, rows).map_err(|e| parse_err(1, e.to_string()))?;
    Ok((matrix, role))
}

pub fn write_bincode(code: &BinaryCode) -> String {
    let mut s = String::with_capacity((code.len() + 1) * code.cardinality() + 16);
    s.push_str(&format!("BINCODE L={}\n", code.len()));
    for w in code.words() {
        s.push_str(&w.to_string());
        s.push('\n');
    }
    s
}

pub fn parse_bincode(text: &str) -> Result<BinaryCode> {
    let fields = header_fields(first_line(text)?, "BINCODE", &["L"])?;
    let len: usize = parse_number(fields[0], 1, "length")?;
    let mut words = Vec::new();
    for (line, content) in body(text) {
        if content.len() != len || !content.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(parse_err(line, format!("expected a {len}-bit 0/1 word")));
        }
        words.push(content.parse::<BitWord>()?);
    }
    BinaryCode::new(len, words)
}

pub fn write_wef(we: &HammingWe) -> String {
    let mut s = format!("WEF L={}\n", we.length());
    for (w, c) in we.coeffs().iter().enumerate() {
        if !c.is_zero() {
            s.push_str(&format!("{w} {c}\n"));
        }
    }
    s
}

pub fn parse_wef(text: &str) -> Result<HammingWe> {
    let fields = header_fields(first_line(text)?, "WEF", &["L"])?;
    let len: usize = parse_number(fields[0], 1, "length")?;
    let mut coeffs = vec![BigInt::zero(); len + 1];
    let mut last: Option<usize> = None;
    for (line, content) in body(text) {
        let mut parts = content.split_whitespace();
        let (Some(w), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(line, "expected `<weight> <coefficient>`"));
        };
        let w: usize = parse_number(w, line, "weight")?;
        let c: BigInt = parse_number(c, line, "coefficient")?;
        if w > len {
            return Err(parse_err(line, format!("weight {w} exceeds L = {len}")));
        }
        if last.is_some_and(|l| w <= l) {
            return Err(parse_err(line, "weights must be strictly increasing"));
        }
        if c.is_zero() {
            return Err(parse_err(line, "zero coefficients are not listed"));
        }
        last = Some(w);
        coeffs[w] = c;
    }
    Ok(HammingWe::new(coeffs))
}

pub fn read_zcode(path: &Path) -> Result<(ZMatrix, Role)> {
    parse_zcode(&fs::read_to_string(path)?)
}

pub fn read_bincode(path: &Path) -> Result<BinaryCode> {
    parse_bincode(&fs::read_to_string(path)?)
}

pub fn read_wef(path: &Path) -> Result<HammingWe> {
    parse_wef(&fs::read_to_string(path)?)
}
