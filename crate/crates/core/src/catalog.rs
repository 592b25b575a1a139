//! Text formats: group catalogs and quandle tables.
//!
//! A catalog is a sequence of records:
//!
//! ```text
//! # comment
//! group A5-on-12
//! degree 12
//! gen (1,2,3)(4,5,6)
//! gen (1,7)(2,8)
//! flags transitive,quasiprimitive
//! provenance coset action of A5 on a cyclic subgroup of order 5
//! end
//! ```
//!
//! A quandle file is `quandle <n>` followed by `n` rows of 1-based entries,
//! row `x` holding `x ▷ 1, .., x ▷ n`.

use std::collections::HashSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgrp::PermGroup;
use crate::quandle::Quandle;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: bool,
}

impl Flags {
    fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.transitive {
            out.push("transitive");
        }
        if self.primitive {
            out.push("primitive");
        }
        if self.quasiprimitive {
            out.push("quasiprimitive");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    pub label: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub flags: Flags,
    pub provenance: String,
}

impl CatalogRecord {
    pub fn group(&self) -> Result<PermGroup> {
        PermGroup::new(self.generators.clone())
    }

    /// Checks transitivity and every declared flag, with a witness on failure.
    pub fn verify(&self, group: &PermGroup) -> Result<()> {
        let mismatch = |flag, witness: String| Error::FlagMismatch {
            label: self.label.clone(),
            flag,
            witness,
        };
        if !group.is_transitive() {
            let orbit: Vec<String> = group
                .orbit(0)?
                .iter()
                .map(|x| (x + 1).to_string())
                .collect();
            return Err(mismatch(
                "transitive",
                format!("the orbit of 1 is {{{}}}", orbit.join(",")),
            ));
        }
        if self.flags.primitive {
            if let Some(blocks) = group.find_block_system() {
                return Err(mismatch("primitive", format!("block system {blocks}")));
            }
        }
        if self.flags.quasiprimitive && !group.is_primitive() {
            if let Some(g) = group.intransitive_normal_closure()? {
                return Err(mismatch(
                    "quasiprimitive",
                    format!("the normal closure of {g} is intransitive"),
                ));
            }
        }
        Ok(())
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogRecord>> {
    struct Partial {
        label: String,
        start: usize,
        degree: Option<usize>,
        generators: Vec<Permutation>,
        flags: Flags,
        provenance: String,
    }
    let mut records = Vec::new();
    let mut labels = HashSet::new();
    let mut current: Option<Partial> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        if key == "group" {
            if let Some(p) = &current {
                return Err(Error::parse(
                    line_no,
                    format!(
                        "record {:?} opened on line {} has no `end`",
                        p.label, p.start
                    ),
                ));
            }
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(Error::parse(
                    line_no,
                    "group label must be one non-empty word",
                ));
            }
            current = Some(Partial {
                label: rest.to_string(),
                start: line_no,
                degree: None,
                generators: Vec::new(),
                flags: Flags::default(),
                provenance: String::new(),
            });
            continue;
        }
        let Some(rec) = current.as_mut() else {
            return Err(Error::parse(
                line_no,
                format!("`{key}` outside a group record"),
            ));
        };
        match key {
            "degree" => {
                if rec.degree.is_some() {
                    return Err(Error::parse(line_no, "degree given twice"));
                }
                let d: usize = rest
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad degree {rest:?}")))?;
                if d == 0 {
                    return Err(Error::parse(line_no, "degree must be positive"));
                }
                rec.degree = Some(d);
            }
            "gen" => {
                let d = rec
                    .degree
                    .ok_or_else(|| Error::parse(line_no, "`gen` before `degree`"))?;
                let g = Permutation::parse(rest, d)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
                rec.generators.push(g);
            }
            "flags" => {
                for f in rest.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                    match f {
                        "transitive" => rec.flags.transitive = true,
                        "primitive" => rec.flags.primitive = true,
                        "quasiprimitive" => rec.flags.quasiprimitive = true,
                        other => {
                            return Err(Error::parse(line_no, format!("unknown flag {other:?}")))
                        }
                    }
                }
            }
            "provenance" => rec.provenance = rest.to_string(),
            "end" => {
                let rec = current.take().expect("checked above");
                let degree = rec.degree.ok_or_else(|| {
                    Error::parse(line_no, format!("record {:?} has no degree", rec.label))
                })?;
                if rec.generators.is_empty() {
                    return Err(Error::parse(
                        line_no,
                        format!("record {:?} has no generators", rec.label),
                    ));
                }
                if !labels.insert(rec.label.clone()) {
                    return Err(Error::DuplicateLabel(rec.label));
                }
                records.push(CatalogRecord {
                    label: rec.label,
                    degree,
                    generators: rec.generators,
                    flags: rec.flags,
                    provenance: rec.provenance,
                });
            }
            other => return Err(Error::parse(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some(p) = current {
        return Err(Error::parse(
            p.start,
            format!("record {:?} is not closed with `end`", p.label),
        ));
    }
    Ok(records)
}

pub fn write_catalog(records: &[CatalogRecord]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "group {}", r.label).unwrap();
        writeln!(out, "degree {}", r.degree).unwrap();
        for g in &r.generators {
            writeln!(out, "gen {g}").unwrap();
        }
        let flags = r.flags.names();
        if !flags.is_empty() {
            writeln!(out, "flags {}", flags.join(",")).unwrap();
        }
        if !r.provenance.is_empty() {
            writeln!(out, "provenance {}", r.provenance).unwrap();
        }
        out.push_str("end\n");
    }
    out
}

/// SHA-256 of the normalized catalog text, in hex.
pub fn catalog_digest(records: &[CatalogRecord]) -> String {
    hex::encode(Sha256::digest(write_catalog(records).as_bytes()))
}

pub fn parse_quandle_file(text: &str) -> Result<Quandle> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty quandle file"))?;
    let n: usize = header
        .strip_prefix("quandle")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::parse(hline, "expected `quandle <order>`"))?;
    let mut rows = Vec::with_capacity(n);
    for (line_no, line) in lines {
        if rows.len() == n {
            return Err(Error::parse(line_no, format!("more than {n} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::parse(
                    line_no,
                    format!("entry {t:?} is not in 1..{n}"),
                )),
            })
            .collect::<Result<Vec<usize>>>()?;
        if row.len() != n {
            return Err(Error::parse(
                line_no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Shape(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    Quandle::from_table(&rows)
}

pub fn write_quandle_file(q: &Quandle) -> String {
    let mut out = format!("quandle {}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A5_12: &str = "\
# A5 acting on the cosets of a cyclic subgroup of order 5
group A5-on-12
degree 12
gen (1,2,3)(4,5,6)(7,8,9)(10,11,12)
flags transitive
provenance test
end
";

    #[test]
    fn catalog_round_trip() {
        let recs = parse_catalog(A5_12).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].degree, 12);
        let text = write_catalog(&recs);
        assert_eq!(parse_catalog(&text).unwrap(), recs);
        assert_eq!(write_catalog(&parse_catalog(&text).unwrap()), text);
        assert!(parse_catalog("").unwrap().is_empty());
    }

    #[test]
    fn catalog_errors_carry_lines() {
        let bad = "group x\ndegree 3\ngen (1,4)\nend\n";
        assert!(matches!(
            parse_catalog(bad),
            Err(Error::Parse { line: 3, .. })
        ));
        let dup = "group x\ndegree 2\ngen (1,2)\nend\ngroup x\ndegree 2\ngen (1,2)\nend\n";
        assert!(matches!(parse_catalog(dup), Err(Error::DuplicateLabel(_))));
        assert!(matches!(
            parse_catalog("group x\ndegree 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_catalog("gen (1,2)\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn flag_verification() {
        let text =
            "group v4\ndegree 4\ngen (1,2)(3,4)\ngen (1,3)(2,4)\nflags transitive,primitive\nend\n";
        let rec = &parse_catalog(text).unwrap()[0];
        let err = rec.verify(&rec.group().unwrap()).unwrap_err();
        assert!(matches!(
            err,
            Error::FlagMismatch {
                flag: "primitive",
                ..
            }
        ));
        let text = text.replace("primitive", "quasiprimitive");
        let rec = &parse_catalog(&text).unwrap()[0];
        let err = rec.verify(&rec.group().unwrap()).unwrap_err();
        assert!(matches!(
            err,
            Error::FlagMismatch {
                flag: "quasiprimitive",
                ..
            }
        ));
    }

    #[test]
    fn quandle_files() {
        let text = "quandle 4\n1 4 2 3\n3 2 4 1\n4 1 3 2\n2 3 1 4\n";
        let q = parse_quandle_file(text).unwrap();
        assert_eq!(write_quandle_file(&q), text);
        assert_eq!(parse_quandle_file("quandle 1\n1\n").unwrap().order(), 1);
        assert!(matches!(
            parse_quandle_file("quandle 2\n1 0\n2 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_quandle_file("quandle 2\n1 2\n"),
            Err(Error::Shape(_))
        ));
    }
}
