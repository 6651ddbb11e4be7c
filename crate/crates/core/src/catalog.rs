//! The bundled group catalog and its on-disk record format.
//!
//! Record format (also the CLI input format): UTF-8 text, `#` starts a
//! comment, records separated by blank lines. Each record:
//!
//! ```text
//! degree <n>
//! name <string>              (optional)
//! expect_order <int>         (optional)
//! expect_D <int>             (optional)
//! expect_primitive <bool>    (optional)
//! expect_quasiprimitive <bool> (optional)
//! expect_semiprimitive <bool>  (optional)
//! note <string>              (optional)
//! <generator in 1-indexed cycle notation, one per line>
//! ```

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::chain::StabilizerChain;
use crate::cycles::parse_cycles;
use crate::error::{Error, Result};
use crate::group::PermutationGroup;

const BUILTIN: &str = include_str!("catalog_data.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<String>,
    pub expected_order: Option<BigUint>,
    pub expected_d: Option<usize>,
    pub expected_primitive: Option<bool>,
    pub expected_quasiprimitive: Option<bool>,
    pub expected_semiprimitive: Option<bool>,
    pub note: Option<String>,
}

impl CatalogEntry {
    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("(unnamed)")
    }

    /// Parses the generator strings into a group.
    pub fn group(&self) -> Result<PermutationGroup> {
        let gens = self
            .generators
            .iter()
            .map(|s| parse_cycles(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::new(self.degree, gens)
    }

    /// Checks the entry's chain order against the expected order.
    pub fn validate(&self) -> Result<StabilizerChain> {
        let group = self.group()?;
        let chain = StabilizerChain::build(&group);
        if let Some(expected) = &self.expected_order {
            if chain.order() != expected {
                return Err(Error::MetadataMismatch {
                    name: self.display_name().to_string(),
                    msg: format!("chain order {} != expected {}", chain.order(), expected),
                });
            }
        }
        Ok(chain)
    }

    /// Renders the entry back into the record format.
    pub fn to_record(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        if let Some(order) = &self.expected_order {
            out.push_str(&format!("expect_order {order}\n"));
        }
        if let Some(d) = self.expected_d {
            out.push_str(&format!("expect_D {d}\n"));
        }
        if let Some(b) = self.expected_primitive {
            out.push_str(&format!("expect_primitive {b}\n"));
        }
        if let Some(b) = self.expected_quasiprimitive {
            out.push_str(&format!("expect_quasiprimitive {b}\n"));
        }
        if let Some(b) = self.expected_semiprimitive {
            out.push_str(&format!("expect_semiprimitive {b}\n"));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note {note}\n"));
        }
        for g in &self.generators {
            out.push_str(g);
            out.push('\n');
        }
        out
    }
}

/// Parses a whole catalog: records separated by blank lines.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            if !current.is_empty() {
                entries.push(parse_record(&current)?);
                current.clear();
            }
            continue;
        }
        current.push((idx + 1, line));
    }
    if !current.is_empty() {
        entries.push(parse_record(&current)?);
    }
    Ok(entries)
}

/// Parses exactly one record; trailing blank lines are allowed.
pub fn parse_group_record(text: &str) -> Result<CatalogEntry> {
    let entries = parse_catalog(text)?;
    match entries.len() {
        0 => Err(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        }),
        1 => Ok(entries.into_iter().next().unwrap()),
        n => Err(Error::Parse {
            line: 1,
            msg: format!("expected one group record, found {n}"),
        }),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_record(lines: &[(usize, &str)]) -> Result<CatalogEntry> {
    let (first_line, first) = lines[0];
    let degree = match first.strip_prefix("degree ") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|_| Error::Parse {
            line: first_line,
            msg: format!("bad degree {rest:?}"),
        })?,
        None => {
            return Err(Error::Parse {
                line: first_line,
                msg: "record must start with `degree <n>`".into(),
            })
        }
    };
    let mut entry = CatalogEntry {
        name: None,
        degree,
        generators: Vec::new(),
        expected_order: None,
        expected_d: None,
        expected_primitive: None,
        expected_quasiprimitive: None,
        expected_semiprimitive: None,
        note: None,
    };
    for &(line_no, line) in &lines[1..] {
        if let Some(rest) = line.strip_prefix("name ") {
            entry.name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("expect_order ") {
            entry.expected_order =
                Some(BigUint::from_str(rest.trim()).map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad order {rest:?}"),
                })?);
        } else if let Some(rest) = line.strip_prefix("expect_D ") {
            entry.expected_d = Some(rest.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad D value {rest:?}"),
            })?);
        } else if let Some(rest) = line.strip_prefix("expect_primitive ") {
            entry.expected_primitive = Some(parse_bool(rest, line_no)?);
        } else if let Some(rest) = line.strip_prefix("expect_quasiprimitive ") {
            entry.expected_quasiprimitive = Some(parse_bool(rest, line_no)?);
        } else if let Some(rest) = line.strip_prefix("expect_semiprimitive ") {
            entry.expected_semiprimitive = Some(parse_bool(rest, line_no)?);
        } else if let Some(rest) = line.strip_prefix("note ") {
            entry.note = Some(rest.trim().to_string());
        } else if line.starts_with('(') {
            // Surface cycle-notation problems with the line number.
            parse_cycles(line, degree).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            entry.generators.push(line.to_string());
        } else {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unrecognized line {line:?}"),
            });
        }
    }
    if entry.generators.is_empty() {
        return Err(Error::Parse {
            line: first_line,
            msg: "record has no generators".into(),
        });
    }
    Ok(entry)
}

fn parse_bool(text: &str, line: usize) -> Result<bool> {
    match text.trim() {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(Error::Parse {
            line,
            msg: format!("bad boolean {other:?}"),
        }),
    }
}

/// Loads and order-validates a catalog file.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let entries = parse_catalog(&text)?;
    for entry in &entries {
        entry.validate()?;
    }
    Ok(entries)
}

/// The bundled catalog: the 43 primitive groups with distinguishing number
/// at least 3 beyond the alternating and symmetric families, plus the
/// vector actions used throughout.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN).expect("bundled catalog parses")
}

/// Looks up a bundled entry by name.
pub fn builtin_entry(name: &str) -> Option<CatalogEntry> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.name.as_deref() == Some(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = "degree 5\nname D10\nexpect_order 10\nexpect_D 3\n(1,2,3,4,5)\n(2,5)(3,4)\n";
        let entry = parse_group_record(text).unwrap();
        assert_eq!(entry.degree, 5);
        assert_eq!(entry.name.as_deref(), Some("D10"));
        assert_eq!(entry.generators.len(), 2);
        let again = parse_group_record(&entry.to_record()).unwrap();
        assert_eq!(entry, again);
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# a comment\ndegree 3\n(1,2) # trailing comment\n\n";
        let entry = parse_group_record(text).unwrap();
        assert_eq!(entry.generators, vec!["(1,2)".to_string()]);
    }

    #[test]
    fn corrupt_line_reports_position() {
        let text = "degree 3\n(1,2)\nbogus line\n";
        match parse_group_record(text) {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("expected parse error at line 3, got {other:?}"),
        }
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(
            parse_group_record("  \n# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn order_validation_catches_mismatch() {
        let text = "degree 4\nname bogus\nexpect_order 25\n(1,2,3,4)\n";
        let entry = parse_group_record(text).unwrap();
        assert!(matches!(
            entry.validate(),
            Err(Error::MetadataMismatch { .. })
        ));
    }

    #[test]
    fn multi_record_catalog() {
        let text = "degree 3\nname a\n(1,2)\n\ndegree 4\nname b\n(1,2,3,4)\n";
        let entries = parse_catalog(text).unwrap();
        assert_eq!(entries.len(), 2);
    }
}
