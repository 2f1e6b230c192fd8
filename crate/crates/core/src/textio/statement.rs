use std::iter::Peekable;
use std::str::CharIndices;

use crate::cmi::{check_ground_set, Cmi};
use crate::error::Result;
use crate::index_set::IndexSet;
use crate::textio::ParseError;

/// Parses `I( BLOCKS | COND )` over the ground set `{1, ..., n}`.
///
/// Blocks are separated by `;` and written as comma-separated indices, or
/// `{}` for an empty block. The `| COND` part is optional; `I(|3)` has no
/// blocks at all. Whitespace is ignored. Blocks are kept as written,
/// including repeats and empty blocks.
///
/// ```
/// use cmikit::{parse_cmi, IndexSet};
///
/// let k = parse_cmi("I(1,2 ; 2,3 ; 4 ; 5 | 1)", 5).unwrap();
/// assert_eq!(k.cond(), IndexSet::from([1]));
/// assert_eq!(k.block_count(), 4);
/// assert!(parse_cmi("I(1 ; 6)", 5).is_err());
/// ```
pub fn parse_cmi(text: &str, n: usize) -> Result<Cmi> {
    check_ground_set(n)?;
    let mut p = Parser {
        text,
        chars: text.char_indices().peekable(),
        n,
    };
    let (cond, blocks) = p.statement()?;
    Ok(Cmi::new(n, cond, blocks).expect("parser checks every index"))
}

/// Spells a statement in the notation [`parse_cmi`] reads: blocks sorted,
/// indices ascending, one space around `;` and `|`.
///
/// ```
/// use cmikit::{parse_cmi, render_cmi};
///
/// let k = parse_cmi("I(2,3;2|1)", 3).unwrap();
/// assert_eq!(render_cmi(&k), "I(2 ; 2,3 | 1)");
/// ```
pub fn render_cmi(k: &Cmi) -> String {
    let blocks: Vec<String> = k
        .blocks()
        .normalized()
        .iter()
        .map(|b| b.to_string())
        .collect();
    let mut out = format!("I({}", blocks.join(" ; "));
    if !k.cond().is_empty() {
        out.push_str(" | ");
        out.push_str(&k.cond().to_string());
    }
    out.push(')');
    out
}

struct Parser<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    n: usize,
}

type Parsed<T> = std::result::Result<T, ParseError>;

impl Parser<'_> {
    fn statement(&mut self) -> Parsed<(IndexSet, Vec<IndexSet>)> {
        self.expect('I')?;
        self.expect('(')?;
        let mut blocks = Vec::new();
        if !matches!(self.peek(), Some('|' | ')')) {
            blocks.push(self.block()?);
            while self.eat(';') {
                blocks.push(self.block()?);
            }
        }
        let mut cond = IndexSet::EMPTY;
        if self.eat('|') && self.peek() != Some(')') {
            cond = self.index_list()?;
        }
        self.expect(')')?;
        if let Some(c) = self.peek() {
            return Err(self.error(format!("unexpected '{c}' after the statement")));
        }
        Ok((cond, blocks))
    }

    fn block(&mut self) -> Parsed<IndexSet> {
        if self.eat('{') {
            self.expect('}')?;
            return Ok(IndexSet::EMPTY);
        }
        self.index_list()
    }

    fn index_list(&mut self) -> Parsed<IndexSet> {
        let mut set = IndexSet::EMPTY;
        set.insert(self.index()?);
        while self.eat(',') {
            set.insert(self.index()?);
        }
        Ok(set)
    }

    fn index(&mut self) -> Parsed<usize> {
        self.skip_whitespace();
        let start = self.offset();
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            end = i + 1;
            self.chars.next();
        }
        if start == end {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an index, found '{c}'")),
                None => self.error("expected an index, found end of input"),
            });
        }
        let digits = &self.text[start..end];
        match digits.parse::<usize>() {
            Ok(i) if (1..=self.n).contains(&i) => Ok(i),
            _ => Err(self.error_at(
                start,
                format!("index {digits} is outside the ground set 1..={}", self.n),
            )),
        }
    }

    fn expect(&mut self, want: char) -> Parsed<()> {
        if self.eat(want) {
            return Ok(());
        }
        Err(match self.peek() {
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        })
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    /// Next non-whitespace character, without consuming it.
    fn peek(&mut self) -> Option<char> {
        self.skip_whitespace();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn skip_whitespace(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&mut self, message: impl Into<String>) -> ParseError {
        let at = self.offset();
        self.error_at(at, message)
    }

    fn error_at(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let column = self.text[..offset].chars().count() + 1;
        ParseError::new(1, column, message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn set(members: &[usize]) -> IndexSet {
        IndexSet::from(members)
    }

    #[test]
    fn parses_the_worked_example() {
        let k = parse_cmi("I(1,2 ; 2,3 ; 4 ; 5 | 1)", 5).unwrap();
        let expected = Cmi::new(5, set(&[1]), [set(&[1, 2]), set(&[2, 3]), set(&[4]), set(&[5])]);
        assert_eq!(k, expected.unwrap());
    }

    #[test]
    fn optional_condition_and_empty_shapes() {
        assert_eq!(
            parse_cmi("I(1 ; 2)", 3).unwrap(),
            Cmi::new(3, IndexSet::EMPTY, [set(&[1]), set(&[2])]).unwrap()
        );
        let zero = parse_cmi("I(|3)", 3).unwrap();
        assert_eq!(zero.cond(), set(&[3]));
        assert_eq!(zero.block_count(), 0);
        assert_eq!(parse_cmi("I()", 1).unwrap().block_count(), 0);
        assert_eq!(parse_cmi("I(1|)", 1).unwrap().cond(), IndexSet::EMPTY);
        let empties = parse_cmi(" I ( {} ; { } ; 1 ) ", 1).unwrap();
        assert_eq!(empties.block_count(), 3);
    }

    #[test]
    fn keeps_repeats() {
        let k = parse_cmi("I(1;1;2)", 2).unwrap();
        assert_eq!(k.block_count(), 3);
        assert_ne!(k, parse_cmi("I(1;2)", 2).unwrap());
    }

    #[test]
    fn errors_carry_columns() {
        let err = |text: &str, n| match parse_cmi(text, n) {
            Err(Error::Parse(e)) => (e.column, e.message),
            other => panic!("expected a parse error for {text}, got {other:?}"),
        };
        assert_eq!(err("I(1 ; 6)", 5).0, 7);
        assert!(err("I(1 ; 6)", 5).1.contains("outside"));
        assert_eq!(err("I(0)", 5).0, 3);
        assert_eq!(err("J(1)", 5).0, 1);
        assert_eq!(err("I(1 ;)", 5).0, 6);
        assert_eq!(err("I(1,2", 5).0, 6);
        assert_eq!(err("I(1) x", 5).0, 6);
        assert_eq!(err("I(1 2)", 5).0, 5);
        assert_eq!(err("I(99999999999999999999999)", 5).0, 3);
        assert_eq!(parse_cmi("I(1)", 0), Err(Error::GroundSetSize(0)));
    }

    #[test]
    fn renders_sorted() {
        let k = Cmi::new(3, set(&[1]), [set(&[2, 3]), set(&[2])]).unwrap();
        assert_eq!(render_cmi(&k), "I(2 ; 2,3 | 1)");
        assert_eq!(render_cmi(&Cmi::trivial(2).unwrap()), "I()");
        assert_eq!(render_cmi(&parse_cmi("I(|3)", 3).unwrap()), "I( | 3)");
        assert_eq!(render_cmi(&parse_cmi("I({};2)", 3).unwrap()), "I({} ; 2)");
    }

    #[test]
    fn render_parse_round_trip() {
        for text in ["I(1,2 ; 2,3 ; 4 ; 5 | 1)", "I(|3)", "I()", "I({} ; {} ; 5 | 1,2)"] {
            let k = parse_cmi(text, 5).unwrap();
            assert_eq!(parse_cmi(&render_cmi(&k), 5).unwrap(), k, "{text}");
        }
    }
}
