//! Plain-text configuration format.
//!
//! Grammar: `'(' TAIL ')' '|' CORE '|' '(' TAIL ')' [ '@' ORIGIN ]` with
//! ORIGIN defaulting to 0. Tokens are single characters except for the
//! stacked alphabet, whose two-character cells are separated by spaces.
//! Formatting emits the canonical form, so `parse ∘ format = canonicalize`.

use crate::config::{ConfigError, Configuration};
use crate::symbol::Symbol;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected '{expected}' at byte {pos}")]
    Expected { expected: char, pos: usize },
    #[error("unterminated tail starting at byte {pos}")]
    UnterminatedTail { pos: usize },
    #[error("unknown symbol token '{token}' at byte {pos}")]
    UnknownToken { token: String, pos: usize },
    #[error("{side} tail is empty at byte {pos}")]
    EmptyTail { side: &'static str, pos: usize },
    #[error("bad origin at byte {pos}")]
    BadOrigin { pos: usize },
    #[error("trailing input at byte {pos}")]
    TrailingInput { pos: usize },
}

impl From<ConfigError> for ParseError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::EmptyTail { side } => ParseError::EmptyTail { side, pos: 0 },
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, expected: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            _ => Err(ParseError::Expected { expected, pos: self.pos }),
        }
    }

    /// Consumes up to (not including) `stop`, returning the segment and its
    /// start offset.
    fn until(&mut self, stop: char) -> Result<(&'a str, usize), ParseError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == stop {
                let seg = &self.text[start..self.pos];
                return Ok((seg, start));
            }
            self.bump();
        }
        Err(ParseError::UnterminatedTail { pos: start })
    }
}

fn parse_word<S: Symbol>(segment: &str, offset: usize) -> Result<Vec<S>, ParseError> {
    let mut out = Vec::new();
    if S::SPACED {
        let mut rest = segment;
        let mut pos = offset;
        loop {
            let trimmed = rest.trim_start();
            pos += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let tok = &trimmed[..end];
            let sym = S::from_ascii(tok)
                .ok_or(ParseError::UnknownToken { token: tok.to_string(), pos })?;
            out.push(sym);
            pos += end;
            rest = &trimmed[end..];
        }
    } else {
        let mut pos = offset;
        for c in segment.chars() {
            let tok = c.to_string();
            let sym = S::from_ascii(&tok)
                .ok_or(ParseError::UnknownToken { token: tok.clone(), pos })?;
            out.push(sym);
            pos += c.len_utf8();
        }
    }
    Ok(out)
}

pub fn parse<S: Symbol>(text: &str) -> Result<Configuration<S>, ParseError> {
    let mut cur = Cursor { text, pos: 0 };

    cur.expect('(')?;
    let (seg, off) = cur.until(')')?;
    let left = parse_word::<S>(seg, off)?;
    if left.is_empty() {
        return Err(ParseError::EmptyTail { side: "left", pos: off });
    }
    cur.expect(')')?;
    cur.expect('|')?;
    let (seg, off) = cur.until('|')?;
    let core = parse_word::<S>(seg, off)?;
    cur.expect('|')?;
    cur.expect('(')?;
    let (seg, off) = cur.until(')')?;
    let right = parse_word::<S>(seg, off)?;
    if right.is_empty() {
        return Err(ParseError::EmptyTail { side: "right", pos: off });
    }
    cur.expect(')')?;

    let origin = if cur.peek() == Some('@') {
        cur.bump();
        let start = cur.pos;
        if cur.peek() == Some('-') {
            cur.bump();
        }
        while matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            cur.bump();
        }
        text[start..cur.pos]
            .parse::<i64>()
            .map_err(|_| ParseError::BadOrigin { pos: start })?
    } else {
        0
    };

    if cur.pos != text.len() {
        return Err(ParseError::TrailingInput { pos: cur.pos });
    }

    Ok(Configuration::new(left, core, right, origin)?)
}

pub fn word_to_string<S: Symbol>(word: &[S]) -> String {
    let sep = if S::SPACED { " " } else { "" };
    word.iter().map(|s| s.ascii()).collect::<Vec<_>>().join(sep)
}

pub fn word_to_glyphs<S: Symbol>(word: &[S], spaced: bool) -> String {
    let sep = if spaced || S::SPACED { " " } else { "" };
    word.iter().map(|s| s.glyph()).collect::<Vec<_>>().join(sep)
}

pub fn format<S: Symbol>(x: &Configuration<S>) -> String {
    let mut out = String::new();
    out.push('(');
    out.push_str(&word_to_string(x.left_tail()));
    out.push_str(")|");
    out.push_str(&word_to_string(x.core()));
    out.push_str("|(");
    out.push_str(&word_to_string(x.right_tail()));
    out.push(')');
    if x.origin() != 0 {
        out.push('@');
        out.push_str(&x.origin().to_string());
    }
    out
}

impl<S: Symbol> Configuration<S> {
    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        parse(text)
    }

    pub fn to_text(&self) -> String {
        format(self)
    }
}

impl<S: Symbol> std::fmt::Display for Configuration<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format(self))
    }
}

impl<S: Symbol> std::str::FromStr for Configuration<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{A1Symbol, A2Symbol, ProductSymbol, StackedSymbol, Symbol};
    use proptest::prelude::*;

    #[test]
    fn parses_paper_style_point() {
        let x: Configuration<ProductSymbol> = parse("(_)|_0000|(<)").unwrap();
        assert_eq!(x.get(0), ProductSymbol::BLANK);
        for i in 1..=4 {
            assert_eq!(x.get(i).digit, A1Symbol::Zero);
            assert_eq!(x.get(i).arrow, A2Symbol::Empty);
        }
        assert_eq!(x.get(5), ProductSymbol::ARROW);
        assert_eq!(x.get(-7), ProductSymbol::BLANK);
    }

    #[test]
    fn parses_all_blank() {
        let x: Configuration<A1Symbol> = parse("(_)||(_)").unwrap();
        assert_eq!(x, Configuration::uniform(A1Symbol::Empty));
    }

    #[test]
    fn parse_errors_name_positions() {
        assert_eq!(
            parse::<A1Symbol>("(0"),
            Err(ParseError::UnterminatedTail { pos: 1 })
        );
        assert_eq!(
            parse::<A1Symbol>("()|0|(_)"),
            Err(ParseError::EmptyTail { side: "left", pos: 1 })
        );
        assert!(matches!(
            parse::<A1Symbol>("(_)|x|(_)"),
            Err(ParseError::UnknownToken { ref token, pos: 4 }) if token == "x"
        ));
        assert!(matches!(
            parse::<A1Symbol>("(_)|0|(_)@x"),
            Err(ParseError::BadOrigin { .. })
        ));
        assert!(matches!(
            parse::<A1Symbol>("(_)|0|(_)junk"),
            Err(ParseError::TrailingInput { .. })
        ));
    }

    #[test]
    fn origin_suffix_round_trip() {
        let x: Configuration<A1Symbol> = parse("(_)|00|(_)@-3").unwrap();
        assert_eq!(x.origin(), -3);
        assert_eq!(x.to_text(), "(_)|00|(_)@-3");
    }

    #[test]
    fn spaced_alphabet_round_trip() {
        let x: Configuration<StackedSymbol> = parse("(_a)|_b 0a <c|(_a)").unwrap();
        assert_eq!(x.core().len(), 3);
        assert_eq!(x.to_text(), "(_a)|_b 0a <c|(_a)");
        assert!(matches!(
            parse::<StackedSymbol>("(_a)|_|(_a)"),
            Err(ParseError::UnknownToken { .. })
        ));
    }

    fn arb_symbol<S: Symbol>() -> impl Strategy<Value = S> {
        (0..S::all().len()).prop_map(S::from_index)
    }

    fn arb_config<S: Symbol>() -> impl Strategy<Value = Configuration<S>> {
        (
            proptest::collection::vec(arb_symbol::<S>(), 1..4),
            proptest::collection::vec(arb_symbol::<S>(), 0..8),
            proptest::collection::vec(arb_symbol::<S>(), 1..4),
            -4i64..4,
        )
            .prop_map(|(l, c, r, o)| Configuration::new(l, c, r, o).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_is_canonical_a1(x in arb_config::<A1Symbol>()) {
            let text = x.to_text();
            let y: Configuration<A1Symbol> = parse(&text).unwrap();
            prop_assert_eq!(&y, &x);
            prop_assert_eq!(y.to_text(), text);
        }

        #[test]
        fn round_trip_is_canonical_stacked(x in arb_config::<StackedSymbol>()) {
            let y: Configuration<StackedSymbol> = parse(&x.to_text()).unwrap();
            prop_assert_eq!(y, x);
        }

        #[test]
        fn equal_points_compare_equal(
            x in arb_config::<A1Symbol>(),
            pad_l in 1usize..3,
            pad_r in 1usize..3,
        ) {
            // re-describe x with a padded core and doubled, re-phased tails
            let lo = x.origin() - pad_l as i64;
            let hi = x.right_seam() + pad_r as i64;
            let core: Vec<_> = (lo..hi).map(|i| x.get(i)).collect();
            let pl = 2 * x.left_tail().len() as i64;
            let left: Vec<_> = (0..pl).map(|k| x.get(lo - pl + k)).collect();
            let pr = 2 * x.right_tail().len() as i64;
            let right: Vec<_> = (0..pr).map(|k| x.get(hi + k)).collect();
            let y = Configuration::new(left, core, right, lo).unwrap();
            prop_assert_eq!(y, x.clone());
        }

        #[test]
        fn ultrametric_inequality(
            x in arb_config::<A1Symbol>(),
            y in arb_config::<A1Symbol>(),
            z in arb_config::<A1Symbol>(),
        ) {
            use crate::config::cantor_distance;
            let d = |a: &Configuration<A1Symbol>, b: &Configuration<A1Symbol>| {
                cantor_distance(a, b, 16).as_f64()
            };
            prop_assert_eq!(d(&x, &y), d(&y, &x));
            prop_assert!(d(&x, &z) <= d(&x, &y).max(d(&y, &z)) + 1e-12);
        }
    }
}
