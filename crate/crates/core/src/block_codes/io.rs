//! Plain-text generator matrices.
//!
//! ```text
//! # comment
//! #! distance 3 verified
//! p e n t k
//! k lines of t symbols
//! ```
//!
//! A symbol is the integer whose base-`p` digits, least significant first,
//! are the polynomial-basis coordinates of an element of `F_{p^{en}}`. The
//! optional `#!` line records what is known about the minimum distance.

use std::fmt::Write as _;

use super::{BlockCode, Distance};
use crate::error::{Error, Result};
use crate::gf::FieldTower;

/// Parses a generator-matrix file. The returned tower is `(p, e, n)` from the
/// header; the code is over its top field.
pub fn import_generator_matrix(text: &str) -> Result<(FieldTower, BlockCode)> {
    let mut distance = Distance::Unknown;
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if let Some(rest) = raw.trim_start().strip_prefix("#!") {
            distance = parse_distance(rest, line)?;
            continue;
        }
        let body = raw.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::Parse { line, msg: format!("not a non-negative integer: {tok:?}") })?;
            tokens.push((line, v));
        }
    }
    if tokens.len() < 5 {
        return Err(Error::Parse { line: 1, msg: "header `p e n t k` incomplete".into() });
    }
    let head: Vec<u64> = tokens[..5].iter().map(|&(_, v)| v).collect();
    let (p, e, n, t, k) = (head[0], head[1], head[2], head[3] as usize, head[4] as usize);
    let to_u32 = |v: u64, what: &str| {
        u32::try_from(v).map_err(|_| Error::Parse { line: tokens[0].0, msg: format!("{what} too large") })
    };
    let tower = FieldTower::new(p, to_u32(e, "e")?, to_u32(n, "n")?)?;
    let body = &tokens[5..];
    if body.len() != t * k {
        let line = body.last().map_or(tokens[4].0, |&(l, _)| l);
        return Err(Error::Parse {
            line,
            msg: format!("expected {} symbols for a {k} x {t} matrix, found {}", t * k, body.len()),
        });
    }
    let size = tower.top().size();
    if let Some(&(line, v)) = body.iter().find(|&&(_, v)| v >= size) {
        return Err(Error::Parse { line, msg: format!("symbol {v} outside F_{size}") });
    }
    let generator = (0..k)
        .map(|r| body[r * t..(r + 1) * t].iter().map(|&(_, v)| v).collect())
        .collect();
    let code = BlockCode::new(tower.top(), t, generator, distance)?;
    Ok((tower, code))
}

fn parse_distance(rest: &str, line: usize) -> Result<Distance> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    let bad = || Error::Parse { line, msg: "expected `#! distance <d> <verified|declared>`".into() };
    match parts.as_slice() {
        ["distance", d, kind] => {
            let d: usize = d.parse().map_err(|_| bad())?;
            match *kind {
                "verified" => Ok(Distance::Verified(d)),
                "declared" => Ok(Distance::declared(d, "file")),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

/// Writes `code` with header `p e n t k`, where `n = [alphabet : F_p] / e`.
pub fn export_generator_matrix(code: &BlockCode, e: u32) -> Result<String> {
    let f = code.alphabet();
    if e == 0 || !f.degree().is_multiple_of(e) {
        return Err(Error::InvalidParameter(format!(
            "e = {e} does not divide the alphabet degree {}",
            f.degree()
        )));
    }
    let mut out = String::new();
    match code.distance() {
        Distance::Verified(d) => writeln!(out, "#! distance {d} verified").unwrap(),
        Distance::Declared { bound, .. } => writeln!(out, "#! distance {bound} declared").unwrap(),
        Distance::Unknown => {}
    }
    writeln!(out, "{} {} {} {} {}", f.p(), e, f.degree() / e, code.length(), code.dimension()).unwrap();
    for row in code.generator() {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    Ok(out)
}
