//! Brute-force ground truth for Dyck words.
//!
//! Everything here works by direct scanning or exhaustive enumeration, so the
//! closed forms in [`crate::catalan`] and the table in [`crate::triangle`]
//! can be checked against counts that are obviously correct.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::Error;

/// Enumeration and histogram requests above this semilength are refused by
/// default: C_14 = 2,674,440 words is still tractable, much beyond is not.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// One symbol of a parenthesis word. `Left` sorts before `Right`, so the
/// derived ordering of symbol sequences is lexicographic with `(` < `)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Left,
    Right,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Left => '(',
            Symbol::Right => ')',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '(' => Some(Symbol::Left),
            ')' => Some(Symbol::Right),
            _ => None,
        }
    }
}

/// Parse a `(`/`)` string into symbols without checking the Dyck rules.
pub fn parse_symbols(s: &str) -> Result<Vec<Symbol>, Error> {
    s.chars()
        .map(|c| Symbol::from_char(c).ok_or(Error::UnexpectedCharacter(c)))
        .collect()
}

/// Both Dyck rules over any finite symbol sequence: equally many left and
/// right symbols, and no prefix with more rights than lefts.
pub fn validate(symbols: &[Symbol]) -> bool {
    let mut unbalance = 0usize;
    for &s in symbols {
        match s {
            Symbol::Left => unbalance += 1,
            Symbol::Right => {
                if unbalance == 0 {
                    return false;
                }
                unbalance -= 1;
            }
        }
    }
    unbalance == 0
}

/// The same check through right-symbol positions: with n left symbols, the
/// i-th right symbol (1-based position r_i) must satisfy 2i <= r_i <= n + i.
pub fn validate_by_positions(symbols: &[Symbol]) -> bool {
    let n = symbols.iter().filter(|&&s| s == Symbol::Left).count();
    let mut rights = 0usize;
    for (pos, &s) in symbols.iter().enumerate() {
        if s == Symbol::Right {
            rights += 1;
            let r = pos + 1;
            if r < 2 * rights || r > n + rights {
                return false;
            }
        }
    }
    rights == n
}

/// A symbol sequence that satisfies both Dyck rules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    symbols: Vec<Symbol>,
}

impl DyckWord {
    /// Wrap a symbol sequence, rejecting anything that breaks a rule.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, Error> {
        if !validate(&symbols) {
            let lefts = symbols.iter().filter(|&&s| s == Symbol::Left).count();
            let reason = if 2 * lefts != symbols.len() {
                "left and right counts differ"
            } else {
                "a prefix has more right than left symbols"
            };
            return Err(Error::InvalidWord(reason));
        }
        Ok(DyckWord { symbols })
    }

    /// The empty word, the single word of semilength 0.
    pub fn empty() -> Self {
        DyckWord {
            symbols: Vec::new(),
        }
    }

    /// Number of left (equally, right) symbols.
    pub fn semilength(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The running left-minus-right excess j_0..j_{2n}.
    pub fn unbalance_profile(&self) -> UnbalanceProfile {
        let mut values = Vec::with_capacity(self.symbols.len() + 1);
        let mut unbalance = 0usize;
        values.push(0);
        for &s in &self.symbols {
            match s {
                Symbol::Left => unbalance += 1,
                Symbol::Right => unbalance -= 1,
            }
            values.push(unbalance);
        }
        UnbalanceProfile { values }
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        DyckWord::new(parse_symbols(s)?)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Path heights j_0..j_{2n} of a word; starts and ends at 0, steps by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbalanceProfile {
    values: Vec<usize>,
}

impl UnbalanceProfile {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Height at the middle abscissa n.
    pub fn midpoint(&self) -> usize {
        self.values[self.values.len() / 2]
    }

    /// Greatest height reached.
    pub fn peak(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Stream every Dyck word of semilength `n` in lexicographic order
/// (`(` < `)`), starting from `((...))` and ending at `()()...()`.
pub fn enumerate(n: usize) -> Result<DyckWords, Error> {
    enumerate_with_cap(n, DEFAULT_ORACLE_CAP)
}

/// [`enumerate`] with an explicit cap instead of the default.
pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<DyckWords, Error> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let mut first = vec![Symbol::Left; n];
    first.resize(2 * n, Symbol::Right);
    Ok(DyckWords { next: Some(first) })
}

/// Iterator over Dyck words in lexicographic order. Words are produced one
/// at a time, so the full C_n set is never materialized.
#[derive(Debug, Clone)]
pub struct DyckWords {
    next: Option<Vec<Symbol>>,
}

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let symbols = self.next.take()?;
        self.next = successor(&symbols);
        Some(DyckWord { symbols })
    }
}

/// Smallest valid word strictly greater than `w`: flip the rightmost `(`
/// whose prefix stays balanced, then append the smallest completion (all
/// remaining lefts, then all remaining rights).
fn successor(w: &[Symbol]) -> Option<Vec<Symbol>> {
    let n = w.len() / 2;
    let mut lefts = n; // lefts in w[..p]
    let mut rights = n; // rights in w[..p]
    for p in (0..w.len()).rev() {
        match w[p] {
            Symbol::Left => lefts -= 1,
            Symbol::Right => {
                rights -= 1;
                continue;
            }
        }
        if lefts > rights {
            let mut next = Vec::with_capacity(w.len());
            next.extend_from_slice(&w[..p]);
            next.push(Symbol::Right);
            next.resize(p + 1 + (n - lefts), Symbol::Left);
            next.resize(w.len(), Symbol::Right);
            return Some(next);
        }
    }
    None
}

/// Count the Dyck words of semilength `n` by their height at abscissa n.
/// Keys are exactly the heights j ≡ n (mod 2) with 0 <= j <= n, and the
/// counts sum to C_n.
pub fn midpoint_histogram(n: usize) -> Result<BTreeMap<usize, BigUint>, Error> {
    midpoint_histogram_with_cap(n, DEFAULT_ORACLE_CAP)
}

/// [`midpoint_histogram`] with an explicit cap instead of the default.
pub fn midpoint_histogram_with_cap(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<usize, BigUint>, Error> {
    let words = enumerate_with_cap(n, cap)?;
    let mut histogram: BTreeMap<usize, BigUint> = BTreeMap::new();
    for word in words {
        let mid = word.symbols()[..n].iter().fold(0usize, |h, &s| match s {
            Symbol::Left => h + 1,
            Symbol::Right => h - 1,
        });
        *histogram.entry(mid).or_insert_with(|| BigUint::from(0u32)) += 1u32;
    }
    Ok(histogram)
}
