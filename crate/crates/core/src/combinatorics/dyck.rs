use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::{ExactError, ExactInteger};

/// Largest `n` accepted by the enumerators (`C₁₄ = 2 674 440` words).
pub const MAX_DYCK_N: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckSymbol {
    X,
    Y,
}

/// A balanced word over `{X, Y}`: equal counts, and no prefix holds more
/// `Y` than `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(Vec<DyckSymbol>);

impl DyckWord {
    pub fn new(symbols: Vec<DyckSymbol>) -> Result<Self, ExactError> {
        let mut height: i64 = 0;
        for (i, s) in symbols.iter().enumerate() {
            height += match s {
                DyckSymbol::X => 1,
                DyckSymbol::Y => -1,
            };
            if height < 0 {
                return Err(ExactError::Domain(format!(
                    "prefix of length {} has more Y than X",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(ExactError::Domain("unequal numbers of X and Y".into()));
        }
        Ok(Self(symbols))
    }

    pub fn symbols(&self) -> &[DyckSymbol] {
        &self.0
    }

    /// Semilength `n` of a word of length `2n`.
    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                DyckSymbol::X => "X",
                DyckSymbol::Y => "Y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .chars()
            .map(|c| match c {
                'X' => Ok(DyckSymbol::X),
                'Y' => Ok(DyckSymbol::Y),
                other => Err(ExactError::Domain(format!("unexpected symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(symbols)
    }
}

fn check_limit(n: u32) -> Result<(), ExactError> {
    if n > MAX_DYCK_N {
        Err(ExactError::LimitExceeded { n, max: MAX_DYCK_N })
    } else {
        Ok(())
    }
}

/// Generates every Dyck word of semilength `n` by backtracking over
/// (open, close) prefix states, in lexicographic order with `X < Y`.
/// The visitor sees each complete word exactly once.
pub fn for_each_dyck_word(n: u32, mut visit: impl FnMut(&[DyckSymbol])) -> Result<(), ExactError> {
    check_limit(n)?;
    let n = n as usize;
    let mut buf = Vec::with_capacity(2 * n);
    extend(&mut buf, n, 0, 0, &mut visit);
    Ok(())
}

fn extend(
    buf: &mut Vec<DyckSymbol>,
    n: usize,
    open: usize,
    close: usize,
    visit: &mut impl FnMut(&[DyckSymbol]),
) {
    if close == n {
        visit(buf);
        return;
    }
    if open < n {
        buf.push(DyckSymbol::X);
        extend(buf, n, open + 1, close, visit);
        buf.pop();
    }
    if close < open {
        buf.push(DyckSymbol::Y);
        extend(buf, n, open, close + 1, visit);
        buf.pop();
    }
}

/// All Dyck words of semilength `n`, materialized.
pub fn dyck_words(n: u32) -> Result<Vec<DyckWord>, ExactError> {
    let mut out = Vec::new();
    for_each_dyck_word(n, |w| out.push(DyckWord(w.to_vec())))?;
    Ok(out)
}

/// Number of Dyck words of length `2n`, by explicit generation.
pub fn count_dyck_words(n: u32) -> Result<ExactInteger, ExactError> {
    let mut count: u64 = 0;
    for_each_dyck_word(n, |_| count += 1)?;
    Ok(BigUint::from(count))
}
