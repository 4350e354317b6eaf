//! Types of simply-connected simple compact Lie groups.
//!
//! A type is the multiset `{n_1 <= ... <= n_l}` for which the rational
//! cohomology of `G` is exterior on classes of degree `2 n_i - 1`. Spin(4m)
//! repeats the entry `2m`, so entries are a sorted multiset rather than a set.
//!
//! Group specs accepted by [`parse_spec`]:
//!
//! ```text
//! SU(n)  n >= 2        Sp(n)  n >= 1        Spin(n)  n = 3, 5, 6 or n >= 7
//! G2  F4  E6  E7  E8   (family letters are case-insensitive)
//! type:2,4,6           explicit entries, optionally followed by @dim=D
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown group {0}")]
    UnknownName(String),
    #[error("{0} is not a simple group")]
    NotSimple(String),
    #[error("Spin({0}) is undefined here; need n >= 3")]
    SpinTooSmall(u64),
    #[error("{family}({n}) is out of range; need n >= {min}")]
    RankTooSmall { family: &'static str, n: u64, min: u64 },
    #[error("type entry {0} < 2")]
    EntryTooSmall(u64),
    #[error("a type needs at least one entry")]
    Empty,
}

/// The type of a compact Lie group, optionally with a name and a known
/// manifold dimension for cross-checking.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    entries: Vec<u64>,
    name: Option<String>,
    dim: Option<u64>,
}

impl GroupType {
    /// A custom type from explicit entries. Entries are sorted, duplicates kept.
    pub fn custom(mut entries: Vec<u64>, dim: Option<u64>) -> Result<Self, GroupError> {
        if entries.is_empty() {
            return Err(GroupError::Empty);
        }
        if let Some(&bad) = entries.iter().find(|&&n| n < 2) {
            return Err(GroupError::EntryTooSmall(bad));
        }
        entries.sort_unstable();
        Ok(GroupType {
            entries,
            name: None,
            dim,
        })
    }

    fn named(name: String, mut entries: Vec<u64>, dim: u64) -> Self {
        entries.sort_unstable();
        GroupType {
            entries,
            name: Some(name),
            dim: Some(dim),
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> Option<u64> {
        self.dim
    }

    pub fn is_custom(&self) -> bool {
        self.name.is_none()
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// The largest entry `n_l`.
    pub fn max_entry(&self) -> u64 {
        *self.entries.last().expect("types are nonempty")
    }

    /// `sum (2 n_i - 1)`, the dimension predicted by the type.
    pub fn dimension_from_type(&self) -> u64 {
        self.entries.iter().map(|n| 2 * n - 1).sum()
    }

    /// Whether the recorded dimension agrees with the type; `None` when no
    /// dimension is recorded.
    pub fn dimension_check(&self) -> Option<bool> {
        self.dim.map(|d| d == self.dimension_from_type())
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self
            .entries
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        match &self.name {
            Some(name) => write!(f, "{name} {{{entries}}}"),
            None => write!(f, "type:{entries}"),
        }
    }
}

/// Looks up a named group, e.g. `"SU(5)"`, `"spin(10)"` or `"E8"`.
pub fn lookup(name: &str) -> Result<GroupType, GroupError> {
    match parse_spec(name)? {
        t if t.is_custom() => Err(GroupError::UnknownName(name.trim().to_owned())),
        t => Ok(t),
    }
}

pub fn su(n: u64) -> Result<GroupType, GroupError> {
    if n < 2 {
        return Err(GroupError::RankTooSmall { family: "SU", n, min: 2 });
    }
    Ok(GroupType::named(format!("SU({n})"), (2..=n).collect(), n * n - 1))
}

pub fn sp(n: u64) -> Result<GroupType, GroupError> {
    if n < 1 {
        return Err(GroupError::RankTooSmall { family: "Sp", n, min: 1 });
    }
    Ok(GroupType::named(
        format!("Sp({n})"),
        (1..=n).map(|i| 2 * i).collect(),
        n * (2 * n + 1),
    ))
}

/// Spin(3), Spin(5) and Spin(6) coincide with SU(2), Sp(2) and SU(4); the
/// general formulas below already produce those types.
pub fn spin(n: u64) -> Result<GroupType, GroupError> {
    if n < 3 {
        return Err(GroupError::SpinTooSmall(n));
    }
    if n == 4 {
        return Err(GroupError::NotSimple("Spin(4)".into()));
    }
    let m = n / 2;
    let entries: Vec<u64> = if n % 2 == 1 {
        (1..=m).map(|i| 2 * i).collect()
    } else {
        (1..m).map(|i| 2 * i).chain([m]).collect()
    };
    Ok(GroupType::named(format!("Spin({n})"), entries, n * (n - 1) / 2))
}

pub fn exceptional(name: &str) -> Option<GroupType> {
    let (canonical, entries, dim): (&str, &[u64], u64) = match name.to_ascii_uppercase().as_str() {
        "G2" => ("G2", &[2, 6], 14),
        "F4" => ("F4", &[2, 6, 8, 12], 52),
        "E6" => ("E6", &[2, 5, 6, 8, 9, 12], 78),
        "E7" => ("E7", &[2, 6, 8, 10, 12, 14, 18], 133),
        "E8" => ("E8", &[2, 8, 12, 14, 18, 20, 24, 30], 248),
        _ => return None,
    };
    Some(GroupType::named(canonical.into(), entries.to_vec(), dim))
}

/// Every named group of rank at most `max_rank`, one spelling each
/// (Spin(3), Spin(5), Spin(6) are omitted in favour of SU(2), Sp(2), SU(4)).
pub fn named_groups(max_rank: usize) -> Vec<GroupType> {
    let r = max_rank as u64;
    let mut out = Vec::new();
    out.extend((2..=r + 1).map(|n| su(n).unwrap()));
    out.extend((1..=r).map(|n| sp(n).unwrap()));
    out.extend((7..=2 * r + 1).map(|n| spin(n).unwrap()));
    out.extend(
        ["G2", "F4", "E6", "E7", "E8"]
            .into_iter()
            .filter_map(exceptional)
            .filter(|g| g.rank() <= max_rank),
    );
    out
}

/// Parses a catalog name or an explicit `type:` literal.
pub fn parse_spec(text: &str) -> Result<GroupType, GroupError> {
    let mut p = Parser { text, pos: 0 };
    p.skip_ws();
    let start = p.pos;
    let word = p.word();
    if word.is_empty() {
        return Err(p.error("expected a group name or `type:`"));
    }
    let lower = word.to_ascii_lowercase();
    let group = match lower.as_str() {
        "type" => {
            p.skip_ws();
            p.expect(':')?;
            let mut entries = vec![p.number()?];
            loop {
                p.skip_ws();
                if !p.eat(',') {
                    break;
                }
                entries.push(p.number()?);
            }
            let dim = if p.eat('@') {
                p.skip_ws();
                let key_at = p.pos;
                if !p.word().eq_ignore_ascii_case("dim") {
                    return Err(p.error_at(key_at, "expected `dim` after `@`"));
                }
                p.skip_ws();
                p.expect('=')?;
                Some(p.number()?)
            } else {
                None
            };
            GroupType::custom(entries, dim)?
        }
        "su" | "sp" | "spin" => {
            p.skip_ws();
            p.expect('(')?;
            let n = p.number()?;
            p.skip_ws();
            p.expect(')')?;
            match lower.as_str() {
                "su" => su(n)?,
                "sp" => sp(n)?,
                _ => spin(n)?,
            }
        }
        _ => exceptional(word).ok_or_else(|| GroupError::UnknownName(text[start..p.pos].to_owned()))?,
    };
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(group)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn word(&mut self) -> &'a str {
        let rest = self.rest();
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), GroupError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<u64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        rest[..len]
            .parse()
            .map_err(|_| self.error_at(start, "number out of range"))
    }

    fn error(&self, message: &str) -> GroupError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, position: usize, message: &str) -> GroupError {
        GroupError::Syntax {
            position,
            message: message.to_owned(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let su2 = lookup("SU(2)").unwrap();
        assert_eq!(su2.entries(), [2]);
        assert_eq!(su2.dim(), Some(3));
        assert_eq!(su2.dimension_check(), Some(true));

        let e8 = lookup("E8").unwrap();
        assert_eq!(e8.entries(), [2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(e8.dim(), Some(248));
        assert_eq!(3 + 15 + 23 + 27 + 35 + 39 + 47 + 59, 248);
        assert_eq!(e8.dimension_check(), Some(true));

        let spin8 = lookup("Spin(8)").unwrap();
        assert_eq!(spin8.entries(), [2, 4, 4, 6]);
        assert_eq!(spin8.dim(), Some(28));
        assert_eq!(spin8.dimension_check(), Some(true));
    }

    #[test]
    fn aliases() {
        for name in ["SU(2)", "Sp(1)", "Spin(3)"] {
            assert_eq!(lookup(name).unwrap().entries(), [2]);
        }
        assert_eq!(lookup("Spin(5)").unwrap().entries(), lookup("Sp(2)").unwrap().entries());
        assert_eq!(lookup("Spin(6)").unwrap().entries(), lookup("SU(4)").unwrap().entries());
    }

    #[test]
    fn lookup_errors() {
        assert_eq!(lookup("Spin(2)"), Err(GroupError::SpinTooSmall(2)));
        assert!(matches!(lookup("Spin(4)"), Err(GroupError::NotSimple(_))));
        assert!(matches!(lookup("SU(1)"), Err(GroupError::RankTooSmall { .. })));
        assert!(matches!(lookup("Sp(0)"), Err(GroupError::RankTooSmall { .. })));
        assert!(matches!(lookup("H3"), Err(GroupError::UnknownName(_))));
        assert!(matches!(lookup("type:2,3"), Err(GroupError::UnknownName(_))));
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_spec("SU(3)").unwrap().entries(), [2, 3]);
        assert_eq!(parse_spec("su(5)").unwrap().name(), Some("SU(5)"));
        assert_eq!(parse_spec(" Spin ( 10 ) ").unwrap().entries(), [2, 4, 5, 6, 8]);
        assert_eq!(parse_spec("e8").unwrap().name(), Some("E8"));
        assert_eq!(parse_spec("g2").unwrap().entries(), [2, 6]);
    }

    #[test]
    fn parse_literals() {
        let t = parse_spec("type:2,6").unwrap();
        assert_eq!(t.entries(), [2, 6]);
        assert!(t.is_custom());
        assert_eq!(t.entries(), exceptional("G2").unwrap().entries());

        let t = parse_spec("type: 6, 2, 4, 4 @dim=28").unwrap();
        assert_eq!(t.entries(), [2, 4, 4, 6]);
        assert_eq!(t.dimension_check(), Some(true));

        let bad = parse_spec("type:2,3@dim=9").unwrap();
        assert_eq!(bad.dimension_check(), Some(false));
        assert_eq!(parse_spec("type:3,5").unwrap().dimension_check(), None);

        assert_eq!(parse_spec("type:1,3"), Err(GroupError::EntryTooSmall(1)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("SU(3", 4),
            ("SU 3)", 3),
            ("type:2,,3", 7),
            ("type:2,3@dom=5", 9),
            ("SU(3) x", 6),
            ("", 0),
        ];
        for (text, position) in cases {
            match parse_spec(text) {
                Err(GroupError::Syntax { position: got, .. }) => assert_eq!(got, position, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn catalog_dimensions() {
        for t in named_groups(8) {
            assert_eq!(t.dimension_check(), Some(true), "{t}");
            assert_eq!(t.entries()[0], 2, "{t}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(lookup("G2").unwrap().to_string(), "G2 {2,6}");
        assert_eq!(parse_spec("type:4,2").unwrap().to_string(), "type:2,4");
    }
}
