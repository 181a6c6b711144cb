//! The four local rules, each a pure `(center, right-neighbor) → symbol` map.
//!
//! Digit layer (`t1`): a digit increments mod 3 exactly when its right
//! neighbor is blank or two; blanks are fixed. Arrow layer (`t`): an arrow
//! departs to the left exactly when it sits on a blank or a two, and a cell
//! holds an arrow after the step iff one arrives from the right or its own
//! arrow does not depart. The stacked rule (`ts`) runs `t` on top and the
//! three-letter involution (`t3`) below, freezing the bottom letter while an
//! arrow sits on the cell.
//!
//! An equivalent shorthand for the arrow layer — "copy the right cell's arrow
//! state whenever either cell is an arrow-on-blank or arrow-on-two" — agrees
//! with the case form on 60 of the 64 entries but drags a stationary arrow
//! leftward on the other four (departing arrow immediately left of a
//! non-departing one), which would create arrows from nothing. The case form
//! is authoritative; `tests::sigma_shorthand_differs_on_exactly_four_entries`
//! pins the difference.

use crate::symbol::{A1Symbol, A2Symbol, A3Symbol, ProductSymbol, StackedSymbol, Symbol};

/// A one-sided radius-1 local rule.
pub trait LocalRule<S: Symbol>: Sync {
    fn name(&self) -> &'static str;
    fn apply(&self, center: S, right: S) -> S;

    /// Full enumerated table in `all()` order, the audit artifact behind
    /// `rules-dump`.
    fn table(&self) -> Vec<(S, S, S)> {
        let mut rows = Vec::with_capacity(S::all().len() * S::all().len());
        for &c in S::all() {
            for &r in S::all() {
                rows.push((c, r, self.apply(c, r)));
            }
        }
        rows
    }
}

pub fn rule_t1(center: A1Symbol, right: A1Symbol) -> A1Symbol {
    match center.residue() {
        None => A1Symbol::Empty,
        Some(d) => {
            if matches!(right, A1Symbol::Empty | A1Symbol::Two) {
                A1Symbol::from_residue(d + 1)
            } else {
                center
            }
        }
    }
}

pub fn rule_t(center: ProductSymbol, right: ProductSymbol) -> ProductSymbol {
    let digit = rule_t1(center.digit, right.digit);
    let arrow = if right.arrow_departs() || (center.arrow == A2Symbol::Arrow && !center.arrow_departs()) {
        A2Symbol::Arrow
    } else {
        A2Symbol::Empty
    };
    ProductSymbol::new(digit, arrow)
}

pub fn rule_t3(center: A3Symbol) -> A3Symbol {
    match center {
        A3Symbol::A => A3Symbol::A,
        A3Symbol::B => A3Symbol::C,
        A3Symbol::C => A3Symbol::B,
    }
}

pub fn rule_ts(center: StackedSymbol, right: StackedSymbol) -> StackedSymbol {
    let top = rule_t(center.top, right.top);
    let bottom = if center.top.arrow == A2Symbol::Arrow {
        center.bottom
    } else {
        rule_t3(center.bottom)
    };
    StackedSymbol::new(top, bottom)
}

#[derive(Copy, Clone, Debug, Default)]
pub struct RuleT1;

impl LocalRule<A1Symbol> for RuleT1 {
    fn name(&self) -> &'static str {
        "t1"
    }

    fn apply(&self, center: A1Symbol, right: A1Symbol) -> A1Symbol {
        rule_t1(center, right)
    }
}

#[derive(Copy, Clone, Debug, Default)]
pub struct RuleT;

impl LocalRule<ProductSymbol> for RuleT {
    fn name(&self) -> &'static str {
        "t"
    }

    fn apply(&self, center: ProductSymbol, right: ProductSymbol) -> ProductSymbol {
        rule_t(center, right)
    }
}

#[derive(Copy, Clone, Debug, Default)]
pub struct RuleT3;

impl LocalRule<A3Symbol> for RuleT3 {
    fn name(&self) -> &'static str {
        "t3"
    }

    fn apply(&self, center: A3Symbol, _right: A3Symbol) -> A3Symbol {
        rule_t3(center)
    }
}

#[derive(Copy, Clone, Debug, Default)]
pub struct RuleTs;

impl LocalRule<StackedSymbol> for RuleTs {
    fn name(&self) -> &'static str {
        "ts"
    }

    fn apply(&self, center: StackedSymbol, right: StackedSymbol) -> StackedSymbol {
        rule_ts(center, right)
    }
}

impl<S: Symbol, R: LocalRule<S> + ?Sized> LocalRule<S> for &R {
    fn name(&self) -> &'static str {
        (**self).name()
    }

    fn apply(&self, center: S, right: S) -> S {
        (**self).apply(center, right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use A1Symbol::{Empty, One, Two, Zero};

    fn p(digit: A1Symbol, arrow: bool) -> ProductSymbol {
        ProductSymbol::new(
            digit,
            if arrow { A2Symbol::Arrow } else { A2Symbol::Empty },
        )
    }

    #[test]
    fn t1_examples() {
        assert_eq!(rule_t1(Zero, Empty), One);
        assert_eq!(rule_t1(Empty, Two), Empty);
        assert_eq!(rule_t1(Two, One), Two);
        assert_eq!(rule_t1(Two, Two), Zero);
        assert_eq!(rule_t1(One, Zero), One);
    }

    /// Hand transcription of the t1 case display (four output cases).
    fn t1_case_reference(c: A1Symbol, r: A1Symbol) -> A1Symbol {
        let bump = matches!(r, Empty | Two);
        if c == Empty {
            Empty
        } else if (c == Two && bump) || (c == Zero && !bump) {
            Zero
        } else if (c == Zero && bump) || (c == One && !bump) {
            One
        } else {
            Two
        }
    }

    #[test]
    fn t1_table_matches_case_reference() {
        for (c, r, out) in RuleT1.table() {
            assert_eq!(out, t1_case_reference(c, r), "entry ({c:?},{r:?})");
        }
        assert_eq!(RuleT1.table().len(), 16);
    }

    #[test]
    fn t_examples() {
        // digit bumps and the tail arrow is pulled in
        assert_eq!(rule_t(p(Zero, false), p(Empty, true)), p(One, true));
        // blanks stay blank
        assert_eq!(rule_t(p(Empty, false), p(Zero, false)), p(Empty, false));
        // a stationary arrow stays put
        assert_eq!(rule_t(p(Zero, true), p(Zero, false)), p(Zero, true));
        // a departing arrow leaves and nothing arrives
        assert_eq!(rule_t(p(Two, true), p(Zero, false)), p(Two, false));
    }

    /// Hand transcription of the eight-case display for the product rule,
    /// one arm per output symbol, conditions verbatim.
    fn t_case_reference(c: ProductSymbol, r: ProductSymbol) -> ProductSymbol {
        let vacio = p(Empty, false);
        let flechai = p(Empty, true);
        let cero = p(Zero, false);
        let uno = p(One, false);
        let dos = p(Two, false);
        let cerof = p(Zero, true);
        let unof = p(One, true);
        let dosf = p(Two, true);
        // A \ {vacio, flechai, dos, dosf}
        let plain = |s: ProductSymbol| s == cero || s == uno || s == cerof || s == unof;
        let mover = |s: ProductSymbol| s == flechai || s == dosf;

        if (c == vacio || c == flechai) && !mover(r) {
            vacio
        } else if (c == vacio || c == flechai) && mover(r) {
            flechai
        } else if ((c == dos || c == dosf) && (r == vacio || r == dos)) || (c == cero && plain(r)) {
            cero
        } else if (c == cero && (r == vacio || r == dos)) || (c == uno && plain(r)) {
            uno
        } else if (c == uno && (r == vacio || r == dos)) || ((c == dos || c == dosf) && plain(r)) {
            dos
        } else if ((c == dos || c == dosf) && mover(r)) || (c == cerof && plain(r)) {
            cerof
        } else if (c == cero && mover(r))
            || (c == cerof && (r == vacio || r == flechai || r == dos || r == dosf))
            || (c == unof && plain(r))
        {
            unof
        } else if (c == uno && mover(r))
            || (c == unof && (r == vacio || r == flechai || r == dos || r == dosf))
        {
            dosf
        } else {
            unreachable!("case display is total")
        }
    }

    #[test]
    fn t_table_matches_case_reference_on_all_64_entries() {
        for (c, r, out) in RuleT.table() {
            assert_eq!(
                out,
                t_case_reference(c, r),
                "entry ({},{})",
                c.ascii(),
                r.ascii()
            );
        }
        assert_eq!(RuleT.table().len(), 64);
    }

    /// The σ-style shorthand for the arrow layer (copy the right arrow state
    /// whenever either cell is a departing arrow).
    fn sigma_shorthand(c: ProductSymbol, r: ProductSymbol) -> ProductSymbol {
        let arrow = if c.arrow_departs() || r.arrow_departs() {
            r.arrow
        } else {
            c.arrow
        };
        ProductSymbol::new(rule_t1(c.digit, r.digit), arrow)
    }

    #[test]
    fn sigma_shorthand_differs_on_exactly_four_entries() {
        let mut diffs = Vec::new();
        for (c, r, out) in RuleT.table() {
            let alt = sigma_shorthand(c, r);
            if alt != out {
                diffs.push((c.ascii(), r.ascii(), out.ascii(), alt.ascii()));
            }
        }
        // departing arrow immediately left of a stationary one: the shorthand
        // would duplicate the stationary arrow into the center cell
        assert_eq!(
            diffs,
            vec![
                ("<", "A", "_", "<"),
                ("<", "B", "_", "<"),
                ("C", "A", "2", "C"),
                ("C", "B", "2", "C"),
            ]
        );
    }

    #[test]
    fn t3_is_the_b_c_involution() {
        assert_eq!(rule_t3(A3Symbol::A), A3Symbol::A);
        assert_eq!(rule_t3(A3Symbol::B), A3Symbol::C);
        assert_eq!(rule_t3(A3Symbol::C), A3Symbol::B);
        for &s in A3Symbol::all() {
            assert_eq!(rule_t3(rule_t3(s)), s);
        }
    }

    #[test]
    fn ts_composition_law_over_all_576_entries() {
        for &c in StackedSymbol::all() {
            for &r in StackedSymbol::all() {
                let out = rule_ts(c, r);
                assert_eq!(out.top, rule_t(c.top, r.top));
                let expect_bottom = if c.top.arrow == A2Symbol::Arrow {
                    c.bottom
                } else {
                    rule_t3(c.bottom)
                };
                assert_eq!(out.bottom, expect_bottom);
            }
        }
        assert_eq!(RuleTs.table().len(), 576);
    }

    #[test]
    fn ts_examples() {
        let frozen = StackedSymbol::new(p(Empty, true), A3Symbol::B);
        for &r in StackedSymbol::all() {
            assert_eq!(rule_ts(frozen, r).bottom, A3Symbol::B);
        }
        let c = StackedSymbol::new(p(Zero, false), A3Symbol::B);
        let r = StackedSymbol::new(p(Zero, false), A3Symbol::A);
        assert_eq!(rule_ts(c, r), StackedSymbol::new(p(Zero, false), A3Symbol::C));
        let blank = StackedSymbol::new(p(Empty, false), A3Symbol::A);
        assert_eq!(rule_ts(blank, blank), blank);
    }

    #[test]
    fn blank_preservation_on_the_digit_layer() {
        for (c, r, out) in RuleT1.table() {
            assert_eq!(out == Empty, c == Empty, "t1 ({c:?},{r:?})");
        }
        for (c, r, out) in RuleT.table() {
            assert_eq!(
                out.digit == Empty,
                c.digit == Empty,
                "t ({},{})",
                c.ascii(),
                r.ascii()
            );
        }
        for (c, r, out) in RuleTs.table() {
            assert_eq!(
                out.top.digit == Empty,
                c.top.digit == Empty,
                "ts ({},{})",
                c.ascii(),
                r.ascii()
            );
        }
    }
}
