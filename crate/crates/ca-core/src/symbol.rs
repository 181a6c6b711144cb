//! The four alphabets: digits with a blank, the arrow layer, their product,
//! the three-letter bottom alphabet, and the stacked product.

use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

/// A finite cell alphabet.
///
/// `all()` fixes the enumeration order used by rule-table dumps and by the
/// exhaustive completion enumerator; `index` is the position in that order.
pub trait Symbol: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Short alphabet name printed in trace headers.
    const NAME: &'static str;
    /// Multi-character tokens separated by spaces in the text format.
    const SPACED: bool = false;

    fn all() -> &'static [Self];
    /// The quiescent symbol used as the default tail.
    fn blank() -> Self;
    fn index(self) -> usize;
    fn from_index(i: usize) -> Self {
        Self::all()[i]
    }
    /// Token in the plain-text configuration format.
    fn ascii(self) -> &'static str;
    /// Pretty display form (UTF-8).
    fn glyph(self) -> &'static str;
    fn from_ascii(tok: &str) -> Option<Self> {
        Self::all().iter().copied().find(|s| s.ascii() == tok)
    }
}

/// Symbols carrying an arrow layer on top of digit content. Gives the
/// sensitivity machinery a uniform view of the product and stacked alphabets.
pub trait Arrowed: Symbol {
    fn has_arrow(self) -> bool;
    /// Digit content is the blank (so a sitting arrow departs every step).
    fn digit_is_blank(self) -> bool;
    /// The all-arrows tail cell used by the extremal oracle.
    fn flood() -> Self;
    /// Carries content whose future phase depends on the arrow history (the
    /// stacked b/c letters). The extremal oracle refuses such cells.
    fn phase_sensitive(self) -> bool {
        false
    }
}

// ---------------------------------------------------------------------------

/// Digit alphabet: a blank plus the residues mod 3.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum A1Symbol {
    Empty,
    Zero,
    One,
    Two,
}

impl A1Symbol {
    pub fn residue(self) -> Option<u8> {
        match self {
            A1Symbol::Empty => None,
            A1Symbol::Zero => Some(0),
            A1Symbol::One => Some(1),
            A1Symbol::Two => Some(2),
        }
    }

    pub fn from_residue(r: u8) -> Self {
        match r % 3 {
            0 => A1Symbol::Zero,
            1 => A1Symbol::One,
            _ => A1Symbol::Two,
        }
    }
}

impl Symbol for A1Symbol {
    const NAME: &'static str = "A1";

    fn all() -> &'static [Self] {
        &[A1Symbol::Empty, A1Symbol::Zero, A1Symbol::One, A1Symbol::Two]
    }

    fn blank() -> Self {
        A1Symbol::Empty
    }

    fn index(self) -> usize {
        match self {
            A1Symbol::Empty => 0,
            A1Symbol::Zero => 1,
            A1Symbol::One => 2,
            A1Symbol::Two => 3,
        }
    }

    fn ascii(self) -> &'static str {
        match self {
            A1Symbol::Empty => "_",
            A1Symbol::Zero => "0",
            A1Symbol::One => "1",
            A1Symbol::Two => "2",
        }
    }

    fn glyph(self) -> &'static str {
        match self {
            A1Symbol::Empty => "\u{25a1}", // □
            A1Symbol::Zero => "0",
            A1Symbol::One => "1",
            A1Symbol::Two => "2",
        }
    }
}

/// Arrow layer: blank or a left-moving arrow.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum A2Symbol {
    Empty,
    Arrow,
}

impl Symbol for A2Symbol {
    const NAME: &'static str = "A2";

    fn all() -> &'static [Self] {
        &[A2Symbol::Empty, A2Symbol::Arrow]
    }

    fn blank() -> Self {
        A2Symbol::Empty
    }

    fn index(self) -> usize {
        match self {
            A2Symbol::Empty => 0,
            A2Symbol::Arrow => 1,
        }
    }

    fn ascii(self) -> &'static str {
        match self {
            A2Symbol::Empty => "_",
            A2Symbol::Arrow => "<",
        }
    }

    fn glyph(self) -> &'static str {
        match self {
            A2Symbol::Empty => "\u{25a1}",
            A2Symbol::Arrow => "\u{2190}", // ←
        }
    }
}

/// Product alphabet: digit layer times arrow layer, eight symbols.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProductSymbol {
    pub digit: A1Symbol,
    pub arrow: A2Symbol,
}

impl ProductSymbol {
    pub const fn new(digit: A1Symbol, arrow: A2Symbol) -> Self {
        ProductSymbol { digit, arrow }
    }

    pub const BLANK: Self = Self::new(A1Symbol::Empty, A2Symbol::Empty);
    /// Arrow over a blank digit.
    pub const ARROW: Self = Self::new(A1Symbol::Empty, A2Symbol::Arrow);

    /// An arrow sitting here departs to the left on the next step.
    pub fn arrow_departs(self) -> bool {
        self.arrow == A2Symbol::Arrow
            && matches!(self.digit, A1Symbol::Empty | A1Symbol::Two)
    }
}

const PRODUCT_ALL: [ProductSymbol; 8] = [
    ProductSymbol::new(A1Symbol::Empty, A2Symbol::Empty),
    ProductSymbol::new(A1Symbol::Zero, A2Symbol::Empty),
    ProductSymbol::new(A1Symbol::One, A2Symbol::Empty),
    ProductSymbol::new(A1Symbol::Two, A2Symbol::Empty),
    ProductSymbol::new(A1Symbol::Empty, A2Symbol::Arrow),
    ProductSymbol::new(A1Symbol::Zero, A2Symbol::Arrow),
    ProductSymbol::new(A1Symbol::One, A2Symbol::Arrow),
    ProductSymbol::new(A1Symbol::Two, A2Symbol::Arrow),
];

impl Symbol for ProductSymbol {
    const NAME: &'static str = "A";

    fn all() -> &'static [Self] {
        &PRODUCT_ALL
    }

    fn blank() -> Self {
        Self::BLANK
    }

    fn index(self) -> usize {
        self.digit.index() + 4 * self.arrow.index()
    }

    fn from_index(i: usize) -> Self {
        PRODUCT_ALL[match i {
            0..=3 => i,
            _ => i,
        }]
    }

    fn ascii(self) -> &'static str {
        match (self.digit, self.arrow) {
            (A1Symbol::Empty, A2Symbol::Empty) => "_",
            (A1Symbol::Zero, A2Symbol::Empty) => "0",
            (A1Symbol::One, A2Symbol::Empty) => "1",
            (A1Symbol::Two, A2Symbol::Empty) => "2",
            (A1Symbol::Empty, A2Symbol::Arrow) => "<",
            (A1Symbol::Zero, A2Symbol::Arrow) => "A",
            (A1Symbol::One, A2Symbol::Arrow) => "B",
            (A1Symbol::Two, A2Symbol::Arrow) => "C",
        }
    }

    fn glyph(self) -> &'static str {
        match (self.digit, self.arrow) {
            (A1Symbol::Empty, A2Symbol::Empty) => "\u{25a1}",
            (A1Symbol::Zero, A2Symbol::Empty) => "0",
            (A1Symbol::One, A2Symbol::Empty) => "1",
            (A1Symbol::Two, A2Symbol::Empty) => "2",
            (A1Symbol::Empty, A2Symbol::Arrow) => "\u{2190}",
            // digit with a combining left arrow above
            (A1Symbol::Zero, A2Symbol::Arrow) => "0\u{20d6}",
            (A1Symbol::One, A2Symbol::Arrow) => "1\u{20d6}",
            (A1Symbol::Two, A2Symbol::Arrow) => "2\u{20d6}",
        }
    }
}

impl Arrowed for ProductSymbol {
    fn has_arrow(self) -> bool {
        self.arrow == A2Symbol::Arrow
    }

    fn digit_is_blank(self) -> bool {
        self.digit == A1Symbol::Empty
    }

    fn flood() -> Self {
        Self::ARROW
    }
}

/// Bottom alphabet of the stacked automaton.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum A3Symbol {
    A,
    B,
    C,
}

impl Symbol for A3Symbol {
    const NAME: &'static str = "A3";

    fn all() -> &'static [Self] {
        &[A3Symbol::A, A3Symbol::B, A3Symbol::C]
    }

    fn blank() -> Self {
        A3Symbol::A
    }

    fn index(self) -> usize {
        match self {
            A3Symbol::A => 0,
            A3Symbol::B => 1,
            A3Symbol::C => 2,
        }
    }

    fn ascii(self) -> &'static str {
        match self {
            A3Symbol::A => "a",
            A3Symbol::B => "b",
            A3Symbol::C => "c",
        }
    }

    fn glyph(self) -> &'static str {
        self.ascii()
    }
}

/// Stacked alphabet: a product-symbol top over a three-letter bottom.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StackedSymbol {
    pub top: ProductSymbol,
    pub bottom: A3Symbol,
}

impl StackedSymbol {
    pub const fn new(top: ProductSymbol, bottom: A3Symbol) -> Self {
        StackedSymbol { top, bottom }
    }
}

impl Symbol for StackedSymbol {
    const NAME: &'static str = "AS";
    const SPACED: bool = true;

    fn all() -> &'static [Self] {
        static ALL: OnceLock<Vec<StackedSymbol>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v = Vec::with_capacity(24);
            for &top in ProductSymbol::all() {
                for &bottom in A3Symbol::all() {
                    v.push(StackedSymbol { top, bottom });
                }
            }
            v
        })
    }

    fn blank() -> Self {
        StackedSymbol::new(ProductSymbol::BLANK, A3Symbol::A)
    }

    fn index(self) -> usize {
        self.top.index() * 3 + self.bottom.index()
    }

    fn ascii(self) -> &'static str {
        static TOKENS: OnceLock<Vec<String>> = OnceLock::new();
        let tokens = TOKENS.get_or_init(|| {
            StackedSymbol::all()
                .iter()
                .map(|s| format!("{}{}", s.top.ascii(), s.bottom.ascii()))
                .collect()
        });
        &tokens[self.index()]
    }

    fn glyph(self) -> &'static str {
        static GLYPHS: OnceLock<Vec<String>> = OnceLock::new();
        let glyphs = GLYPHS.get_or_init(|| {
            StackedSymbol::all()
                .iter()
                .map(|s| format!("{}{}", s.top.glyph(), s.bottom.glyph()))
                .collect()
        });
        &glyphs[self.index()]
    }

    fn from_ascii(tok: &str) -> Option<Self> {
        let mut chars = tok.chars();
        let t = chars.next()?;
        let b = chars.next()?;
        if chars.next().is_some() {
            return None;
        }
        let top = ProductSymbol::from_ascii(&t.to_string())?;
        let bottom = A3Symbol::from_ascii(&b.to_string())?;
        Some(StackedSymbol { top, bottom })
    }
}

impl Arrowed for StackedSymbol {
    fn has_arrow(self) -> bool {
        self.top.has_arrow()
    }

    fn digit_is_blank(self) -> bool {
        self.top.digit_is_blank()
    }

    fn flood() -> Self {
        StackedSymbol::new(ProductSymbol::ARROW, A3Symbol::A)
    }

    fn phase_sensitive(self) -> bool {
        self.bottom != A3Symbol::A
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_sizes() {
        assert_eq!(A1Symbol::all().len(), 4);
        assert_eq!(A2Symbol::all().len(), 2);
        assert_eq!(ProductSymbol::all().len(), 8);
        assert_eq!(A3Symbol::all().len(), 3);
        assert_eq!(StackedSymbol::all().len(), 24);
    }

    #[test]
    fn indices_round_trip() {
        fn check<S: Symbol>() {
            for (i, &s) in S::all().iter().enumerate() {
                assert_eq!(s.index(), i);
                assert_eq!(S::from_index(i), s);
                assert_eq!(S::from_ascii(s.ascii()), Some(s));
            }
        }
        check::<A1Symbol>();
        check::<A2Symbol>();
        check::<ProductSymbol>();
        check::<A3Symbol>();
        check::<StackedSymbol>();
    }

    #[test]
    fn ascii_tokens_are_distinct() {
        fn check<S: Symbol>() {
            for &a in S::all() {
                for &b in S::all() {
                    if a != b {
                        assert_ne!(a.ascii(), b.ascii());
                    }
                }
            }
        }
        check::<A1Symbol>();
        check::<ProductSymbol>();
        check::<A3Symbol>();
        check::<StackedSymbol>();
    }

    #[test]
    fn product_tokens_match_layers() {
        assert_eq!(ProductSymbol::BLANK.ascii(), "_");
        assert_eq!(ProductSymbol::ARROW.ascii(), "<");
        assert_eq!(
            ProductSymbol::new(A1Symbol::Two, A2Symbol::Arrow).ascii(),
            "C"
        );
        assert_eq!(StackedSymbol::from_ascii("Ca").map(|s| s.top.digit), Some(A1Symbol::Two));
        assert_eq!(StackedSymbol::from_ascii("x"), None);
        assert_eq!(StackedSymbol::from_ascii("0ab"), None);
    }
}
