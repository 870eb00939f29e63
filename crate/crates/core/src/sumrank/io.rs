//! Plain-text sum-rank codes.
//!
//! ```text
//! #! provenance construct2 q=2 n=2
//! #! claimed 4
//! #! verified 4
//! p e t
//! n_1 m_1
//! ...
//! K
//! K lines of Σ n_i m_i symbols (block order, each block row-major)
//! ```
//!
//! Symbols are elements of `F_{p^e}` encoded as in generator-matrix files.
//! The `#!` lines are optional.

use std::fmt::Write as _;

use super::{SumRankCode, SumRankCodeword, SumRankSpace};
use crate::error::{Error, Result};
use crate::gf::FieldTower;

#[derive(Default)]
struct Directives {
    provenance: Option<String>,
    claimed: Option<usize>,
    verified: Option<usize>,
}

pub fn import_sumrank_code(text: &str) -> Result<SumRankCode> {
    let mut dir = Directives::default();
    let mut tokens: Vec<(usize, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if let Some(rest) = raw.trim_start().strip_prefix("#!") {
            parse_directive(rest.trim(), line, &mut dir)?;
            continue;
        }
        let body = raw.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let v = tok
                .parse()
                .map_err(|_| Error::Parse { line, msg: format!("not a non-negative integer: {tok:?}") })?;
            tokens.push((line, v));
        }
    }
    let mut it = tokens.into_iter();
    let mut last_line = 1;
    let mut next = |what: &str| -> Result<u64> {
        match it.next() {
            Some((line, v)) => {
                last_line = line;
                Ok(v)
            }
            None => Err(Error::Parse { line: last_line, msg: format!("unexpected end of file, expected {what}") }),
        }
    };
    let p = next("p")?;
    let e = u32::try_from(next("e")?).map_err(|_| Error::Parse { line: 1, msg: "e too large".into() })?;
    let t = next("t")? as usize;
    let mut sizes = Vec::with_capacity(t);
    for _ in 0..t {
        let n = next("n_i")? as usize;
        let m = next("m_i")? as usize;
        sizes.push((n, m));
    }
    let tower = FieldTower::new(p, e, 1)?;
    let space = SumRankSpace::new(tower.ground(), sizes)?;
    let k = next("K")? as usize;
    let len = space.ambient_dimension();
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        let mut row = Vec::with_capacity(len);
        for _ in 0..len {
            row.push(next("a symbol")?);
        }
        gens.push(SumRankCodeword::from_flat(&space, row)?);
    }
    if let Ok(v) = next("end") {
        return Err(Error::Parse { line: last_line, msg: format!("trailing symbol {v}") });
    }
    let mut code = SumRankCode::from_generators(space, gens)?;
    if let Some(prov) = dir.provenance {
        code = code.with_provenance(prov);
    }
    code.claimed = dir.claimed;
    code.verified = dir.verified;
    Ok(code)
}

fn parse_directive(rest: &str, line: usize, dir: &mut Directives) -> Result<()> {
    let (key, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    let value = value.trim();
    let number = || {
        value
            .parse::<usize>()
            .map_err(|_| Error::Parse { line, msg: format!("expected a number after `{key}`") })
    };
    match key {
        "provenance" => dir.provenance = Some(value.to_string()),
        "claimed" => dir.claimed = Some(number()?),
        "verified" => dir.verified = Some(number()?),
        _ => return Err(Error::Parse { line, msg: format!("unknown directive `{key}`") }),
    }
    Ok(())
}

pub fn export_sumrank_code(code: &SumRankCode) -> String {
    let space = code.space();
    let f = space.field();
    let mut out = String::new();
    if !code.provenance().is_empty() {
        writeln!(out, "#! provenance {}", code.provenance()).unwrap();
    }
    if let Some(d) = code.claimed_distance() {
        writeln!(out, "#! claimed {d}").unwrap();
    }
    if let Some(d) = code.verified_distance() {
        writeln!(out, "#! verified {d}").unwrap();
    }
    writeln!(out, "{} {} {}", f.p(), f.degree(), space.blocks()).unwrap();
    for &(n, m) in space.sizes() {
        writeln!(out, "{n} {m}").unwrap();
    }
    writeln!(out, "{}", code.dimension()).unwrap();
    for g in code.generators() {
        let syms: Vec<String> = g.as_flat().iter().map(u64::to_string).collect();
        writeln!(out, "{}", syms.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
#! provenance hand-written
#! claimed 4
2 1 2
2 2
2 2
1
1 0 0 1  1 0 0 1
";

    #[test]
    fn parse_and_round_trip() {
        let c = import_sumrank_code(SAMPLE).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.claimed_distance(), Some(4));
        assert_eq!(c.provenance(), "hand-written");
        let again = import_sumrank_code(&export_sumrank_code(&c)).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(import_sumrank_code("2 1 1\n2 2\n1\n1 0 0"), Err(Error::Parse { .. })));
        assert!(matches!(import_sumrank_code("2 1 1\n2 2\n1\n1 0 0 1 1"), Err(Error::Parse { .. })));
        assert!(matches!(import_sumrank_code("2 1 1\n2 2\n1\n1 0 0 2"), Err(Error::SymbolOutOfRange { .. })));
        assert!(matches!(
            import_sumrank_code("2 1 1\n2 2\n2\n1 0 0 1\n1 0 0 1"),
            Err(Error::DependentGenerators)
        ));
        assert!(matches!(import_sumrank_code("#! colour red\n2 1 1\n1 1\n0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn symbols_over_f9() {
        let c = import_sumrank_code("3 2 1\n1 2\n1\n5 8\n").unwrap();
        assert_eq!(c.space().q(), 9);
        assert_eq!(c.generators()[0].as_flat(), &[5, 8]);
    }
}
