//! Conway-style tangle notation: parsing and rendering.
//!
//! A tangle word is written as a run of bare digits, one entry per digit
//! (`221` is the word (2,2,1)), with parentheses or commas for negative or
//! multi-digit entries (`(-2)(-1)`, `21,-1`). A trailing `-` appends the
//! entry -1, so `2-` parses as (2,-1). A Montesinos presentation is a
//! semicolon-separated, bracketed list of tangle words: `[221;22;2-]`.
//! A designated slot is marked with asterisks: `[*23*;211;2-]`.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A rational tangle word: a non-empty sequence of nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalTangleWord {
    entries: Vec<i64>,
}

impl RationalTangleWord {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty tangle word".into(),
            });
        }
        if let Some(i) = entries.iter().position(|&e| e == 0) {
            return Err(Error::Parse {
                pos: i,
                msg: "zero entry in tangle word".into(),
            });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Render back to table notation. Positive single digits are written
    /// bare; a final -1 after bare digits becomes a trailing `-`; anything
    /// else is parenthesized.
    pub fn render(&self) -> String {
        let n = self.entries.len();
        let bare = |e: i64| (1..=9).contains(&e);
        if n >= 2 && self.entries[n - 1] == -1 && self.entries[..n - 1].iter().all(|&e| bare(e)) {
            let mut s: String = self.entries[..n - 1]
                .iter()
                .map(|e| char::from(b'0' + *e as u8))
                .collect();
            s.push('-');
            return s;
        }
        if self.entries.iter().all(|&e| bare(e)) {
            return self
                .entries
                .iter()
                .map(|e| char::from(b'0' + *e as u8))
                .collect();
        }
        self.entries.iter().map(|e| format!("({e})")).collect()
    }
}

impl std::fmt::Display for RationalTangleWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// An ordered list of tangle words plus a count of extra half-twists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosPresentation {
    pub tangles: Vec<RationalTangleWord>,
    pub half_twists: u32,
}

impl MontesinosPresentation {
    pub fn new(tangles: Vec<RationalTangleWord>, half_twists: u32) -> Result<Self> {
        if tangles.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "presentation needs at least one tangle".into(),
            });
        }
        Ok(Self {
            tangles,
            half_twists,
        })
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.tangles.iter().map(|w| w.render()).collect();
        format!("[{}]", body.join(";"))
    }

    pub fn render_designated(&self, slot: usize) -> String {
        let body: Vec<String> = self
            .tangles
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if i == slot {
                    format!("*{}*", w.render())
                } else {
                    w.render()
                }
            })
            .collect();
        format!("[{}]", body.join(";"))
    }
}

impl std::fmt::Display for MontesinosPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Parse one tangle word.
pub fn parse_tangle_word(text: &str) -> Result<RationalTangleWord> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(err(0, "empty tangle word"));
    }
    // A trailing '-' appends the entry -1.
    let (body, trailing_minus) = match trimmed.strip_suffix('-') {
        Some(rest) if !rest.is_empty() && !rest.ends_with(',') => (rest, true),
        Some(_) => return Err(err(trimmed.len() - 1, "dangling '-'")),
        None => (trimmed, false),
    };

    let mut entries = Vec::new();
    let chars: Vec<char> = body.chars().collect();
    let mut i = 0;
    // Tracks whether the current comma-separated segment started with '-';
    // such a segment is read as one signed integer.
    while i < chars.len() {
        match chars[i] {
            ' ' | ',' => i += 1,
            '(' => {
                let start = i;
                let mut j = i + 1;
                while j < chars.len() && chars[j] != ')' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(err(start, "unclosed '('"));
                }
                let inner: String = chars[i + 1..j].iter().collect();
                let value: i64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| err(start, format!("bad integer '{inner}'")))?;
                if value == 0 {
                    return Err(err(start, "zero entry"));
                }
                entries.push(value);
                i = j + 1;
            }
            '-' => {
                // Signed segment: read the full integer.
                let start = i;
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(err(start, "'-' not followed by digits"));
                }
                let lit: String = chars[i..j].iter().collect();
                let value: i64 = lit.parse().map_err(|_| err(start, "bad integer"))?;
                if value == 0 {
                    return Err(err(start, "zero entry"));
                }
                entries.push(value);
                i = j;
            }
            d if d.is_ascii_digit() => {
                if d == '0' {
                    return Err(err(i, "zero entry"));
                }
                entries.push(d as i64 - '0' as i64);
                i += 1;
            }
            other => return Err(err(i, format!("unexpected character '{other}'"))),
        }
    }
    if trailing_minus {
        entries.push(-1);
    }
    RationalTangleWord::new(entries)
}

fn split_bracketed(text: &str) -> Result<Vec<&str>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err(0, "expected bracketed notation [..;..]"))?;
    let mut slots = Vec::new();
    for (i, part) in inner.split(';').enumerate() {
        if part.trim().is_empty() {
            return Err(err(i, "empty tangle slot"));
        }
        slots.push(part);
    }
    Ok(slots)
}

/// Parse a bracketed Montesinos presentation such as `[221;22;2-]`.
/// The table notation carries no half-twist token, so k is always 0.
pub fn parse_montesinos(text: &str) -> Result<MontesinosPresentation> {
    let slots = split_bracketed(text)?;
    let tangles = slots
        .iter()
        .map(|s| parse_tangle_word(s))
        .collect::<Result<Vec<_>>>()?;
    MontesinosPresentation::new(tangles, 0)
}

/// Parse a presentation with exactly one asterisk-marked slot, returning the
/// presentation and the marked index.
pub fn designated_slot(text: &str) -> Result<(MontesinosPresentation, usize)> {
    let slots = split_bracketed(text)?;
    let mut marked = None;
    let mut tangles = Vec::new();
    for (i, raw) in slots.iter().enumerate() {
        let t = raw.trim();
        if let Some(stripped) = t.strip_prefix('*') {
            let inner = stripped
                .strip_suffix('*')
                .ok_or_else(|| err(i, "unterminated '*' marker"))?;
            if marked.replace(i).is_some() {
                return Err(err(i, "more than one designated slot"));
            }
            tangles.push(parse_tangle_word(inner)?);
        } else {
            tangles.push(parse_tangle_word(t)?);
        }
    }
    let slot = marked.ok_or_else(|| err(0, "no designated slot marked"))?;
    Ok((MontesinosPresentation::new(tangles, 0)?, slot))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(entries: &[i64]) -> RationalTangleWord {
        RationalTangleWord::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn bare_digits_one_entry_each() {
        assert_eq!(parse_tangle_word("221").unwrap(), word(&[2, 2, 1]));
    }

    #[test]
    fn trailing_minus_appends_minus_one() {
        assert_eq!(parse_tangle_word("2-").unwrap(), word(&[2, -1]));
        assert_eq!(parse_tangle_word("21-").unwrap(), word(&[2, 1, -1]));
    }

    #[test]
    fn parenthesized_entries() {
        assert_eq!(parse_tangle_word("(-2)(-1)").unwrap(), word(&[-2, -1]));
        assert_eq!(parse_tangle_word("(12)").unwrap(), word(&[12]));
    }

    #[test]
    fn comma_separated() {
        assert_eq!(parse_tangle_word("2,-1").unwrap(), word(&[2, -1]));
        assert_eq!(parse_tangle_word("21,-1").unwrap(), word(&[2, 1, -1]));
    }

    #[test]
    fn zero_entry_rejected() {
        assert!(matches!(
            parse_tangle_word("0"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(parse_tangle_word("2(0)1").is_err());
        assert!(parse_tangle_word("").is_err());
    }

    #[test]
    fn malformed_token_reports_position() {
        match parse_tangle_word("2x1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn montesinos_basic() {
        let p = parse_montesinos("[221;22;2-]").unwrap();
        assert_eq!(p.tangles.len(), 3);
        assert_eq!(p.tangles[2], word(&[2, -1]));
        assert_eq!(p.half_twists, 0);
    }

    #[test]
    fn montesinos_single_slot() {
        let p = parse_montesinos("[221]").unwrap();
        assert_eq!(p.tangles.len(), 1);
    }

    #[test]
    fn montesinos_errors() {
        assert!(parse_montesinos("221;22").is_err());
        assert!(parse_montesinos("[221;;22]").is_err());
        assert!(parse_montesinos("[41;3;3-]").is_ok());
    }

    #[test]
    fn designated_marks_one_slot() {
        let (p, slot) = designated_slot("[*23*;211;2-]").unwrap();
        assert_eq!(slot, 0);
        assert_eq!(p.tangles[0], word(&[2, 3]));
        let (_, slot) = designated_slot("[21111;*3*;2-]").unwrap();
        assert_eq!(slot, 1);
    }

    #[test]
    fn designated_requires_exactly_one_marker() {
        assert!(designated_slot("[23;211;2-]").is_err());
        assert!(designated_slot("[*23*;*211*;2-]").is_err());
    }

    #[test]
    fn render_round_trip() {
        for text in ["221", "2-", "21-", "(-2)(-1)", "41", "3"] {
            let w = parse_tangle_word(text).unwrap();
            assert_eq!(w.render(), text);
            assert_eq!(parse_tangle_word(&w.render()).unwrap(), w);
        }
        let p = parse_montesinos("[221;211;2-]").unwrap();
        assert_eq!(p.render(), "[221;211;2-]");
        let (p, slot) = designated_slot("[21111;*3*;2-]").unwrap();
        assert_eq!(p.render_designated(slot), "[21111;*3*;2-]");
    }
}
