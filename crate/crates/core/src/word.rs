//! Normal-form words of a power-commutator presentation.

use serde::{Deserialize, Serialize};

/// An element in normal form: the exponent vector (a_1, .., a_n) of
/// g_1^{a_1} ... g_n^{a_n} with 0 <= a_i < e_i. The empty vector is the
/// identity of the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalWord(pub Vec<u32>);

impl NormalWord {
    pub fn identity(n: usize) -> Self {
        NormalWord(vec![0; n])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Single generator g_i (0-based index).
    pub fn generator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        NormalWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the first generator with nonzero exponent, if any.
    pub fn leading(&self) -> Option<usize> {
        self.0.iter().position(|&x| x != 0)
    }

    /// Letters (generator index, positive exponent) left to right.
    pub fn letters(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, x))
    }
}

impl std::fmt::Display for NormalWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, x) in self.letters() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if x == 1 {
                write!(f, "g{}", i + 1)?;
            } else {
                write!(f, "g{}^{}", i + 1, x)?;
            }
        }
        Ok(())
    }
}
