//! The ordered marked alphabet, row words, the occurrence statistics
//! `m_i(j)`, and amenability.
//!
//! The alphabet is `1' < 1 < 2' < 2 < 3' < 3 < ...` where a trailing
//! apostrophe marks a letter. For a word `w = w_1 ... w_n`, the statistic
//! `m_i(j)` counts unmarked `i` over growing suffixes for `j <= n` and then
//! adds marked `i'` over growing prefixes for `j > n`, with `m_i(0) = 0`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A marked or unmarked positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    value: u32,
    marked: bool,
}

impl Letter {
    pub fn unmarked(value: u32) -> Self {
        debug_assert!(value >= 1);
        Letter {
            value,
            marked: false,
        }
    }

    pub fn marked(value: u32) -> Self {
        debug_assert!(value >= 1);
        Letter {
            value,
            marked: true,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_marked(&self) -> bool {
        self.marked
    }

    /// Parses `"3"` (unmarked) or `"3'"` (marked).
    pub fn parse(token: &str) -> Result<Self> {
        let bad = || Error::MalformedWordToken(token.to_string());
        let (digits, marked) = match token.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (token, false),
        };
        let value: u32 = digits.parse().map_err(|_| bad())?;
        if value == 0 {
            return Err(bad());
        }
        Ok(Letter { value, marked })
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        // marked k' sorts just below unmarked k
        self.value
            .cmp(&other.value)
            .then_with(|| other.marked.cmp(&self.marked))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.marked { "'" } else { "" })
    }
}

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses a whitespace-separated list of letter tokens.
    pub fn parse(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(Letter::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Largest letter value, 0 for the empty word.
    pub fn max_value(&self) -> u32 {
        max_value(&self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

pub(crate) fn max_value(letters: &[Letter]) -> u32 {
    letters.iter().map(|l| l.value).max().unwrap_or(0)
}

/// The full table of `m_i(j)` for one letter value `i` and `j = 0 ..= 2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountProfile {
    value: u32,
    counts: Vec<usize>,
}

impl CountProfile {
    pub fn new(word: &Word, value: u32) -> Self {
        let w = word.letters();
        let n = w.len();
        let mut counts = Vec::with_capacity(2 * n + 1);
        counts.push(0);
        for j in 1..=n {
            let hit = w[n - j].value == value && !w[n - j].marked;
            counts.push(counts[j - 1] + hit as usize);
        }
        for j in n + 1..=2 * n {
            let hit = w[j - n - 1].value == value && w[j - n - 1].marked;
            counts.push(counts[j - 1] + hit as usize);
        }
        CountProfile { value, counts }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// `m_i(j)`; panics when `j > 2n`.
    pub fn m(&self, j: usize) -> usize {
        self.counts[j]
    }

    pub fn table(&self) -> &[usize] {
        &self.counts
    }
}

/// `m_i(j)` for a single query; `IndexOutOfRange` when `j > 2n`.
pub fn m_count(word: &Word, value: u32, j: usize) -> Result<usize> {
    let n = word.len();
    if j > 2 * n {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: 2 * n,
        });
    }
    Ok(CountProfile::new(word, value).m(j))
}

/// The subword `w^(k)` of letters with value `k` or `k - 1`, marked or not.
pub fn restrict(word: &Word, k: u32) -> Word {
    debug_assert!(k >= 2);
    word.letters()
        .iter()
        .copied()
        .filter(|l| l.value == k || l.value == k - 1)
        .collect()
}

/// One violated amenability clause: which `k`, which clause (1-4), and the
/// failing index (`j` for clauses 1-2, a 1-based word position for 3-4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmenabilityFailure {
    pub k: u32,
    pub clause: u8,
    pub index: usize,
}

impl fmt::Display for AmenabilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, clause {}", self.k, self.clause)
    }
}

/// Checks the four `k`-amenability clauses, reporting the first violation in
/// clause order. Single pass per clause, no tables.
pub(crate) fn check_k_amenable_letters(w: &[Letter], k: u32) -> Option<AmenabilityFailure> {
    debug_assert!(k >= 2);
    let n = w.len();
    let fail = |clause: u8, index: usize| Some(AmenabilityFailure { k, clause, index });

    // Clause 1: over suffixes, equality of m_k and m_{k-1} forbids the next
    // letter scanned leftwards from having value k.
    let mut mk = 0usize;
    let mut mk1 = 0usize;
    for j in 0..n {
        let letter = w[n - 1 - j];
        if mk == mk1 && letter.value == k {
            return fail(1, j);
        }
        if !letter.marked {
            if letter.value == k {
                mk += 1;
            } else if letter.value == k - 1 {
                mk1 += 1;
            }
        }
    }

    // Clause 2: over prefixes (phase two adds marked letters), equality
    // forbids marked k and unmarked k-1.
    for (t, letter) in w.iter().enumerate() {
        if mk == mk1 {
            let banned = (letter.value == k && letter.marked)
                || (letter.value == k - 1 && !letter.marked);
            if banned {
                return fail(2, n + t);
            }
        }
        if letter.marked {
            if letter.value == k {
                mk += 1;
            } else if letter.value == k - 1 {
                mk1 += 1;
            }
        }
    }

    // Clauses 3 and 4: the first letter of value k (resp. k-1) is unmarked.
    if let Some((i, l)) = w.iter().enumerate().find(|(_, l)| l.value == k) {
        if l.marked {
            return fail(3, i + 1);
        }
    }
    if let Some((i, l)) = w.iter().enumerate().find(|(_, l)| l.value == k - 1) {
        if l.marked {
            return fail(4, i + 1);
        }
    }
    None
}

pub(crate) fn check_amenable_letters(w: &[Letter]) -> Option<AmenabilityFailure> {
    // Letters larger than max(w) + 1 make every clause vacuous.
    (2..=max_value(w) + 1).find_map(|k| check_k_amenable_letters(w, k))
}

pub(crate) fn is_amenable_letters(w: &[Letter]) -> bool {
    check_amenable_letters(w).is_none()
}

/// `k`-amenability per the four-clause definition.
pub fn is_k_amenable(word: &Word, k: u32) -> bool {
    check_k_amenable_letters(word.letters(), k).is_none()
}

/// Like [`is_k_amenable`] but reports the first failing clause.
pub fn check_k_amenable(word: &Word, k: u32) -> Option<AmenabilityFailure> {
    check_k_amenable_letters(word.letters(), k)
}

/// Amenability: `k`-amenable for every `k > 1`.
pub fn is_amenable(word: &Word) -> bool {
    check_amenable_letters(word.letters()).is_none()
}

/// Like [`is_amenable`] but reports the first failing clause.
pub fn check_amenable(word: &Word) -> Option<AmenabilityFailure> {
    check_amenable_letters(word.letters())
}

/// Amenability via restriction: for every `k > 1`, `w^(k)` is empty or
/// `k`-amenable.
pub fn is_amenable_via_restriction(word: &Word) -> bool {
    (2..=word.max_value() + 1).all(|k| {
        let r = restrict(word, k);
        r.is_empty() || is_k_amenable(&r, k)
    })
}
