//! Integer partitions indexing Pontrjagin monomials.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A partition `[λ1, λ2, ...]` with `λ1 >= λ2 >= ... >= 1`, standing for the
/// monomial `p_{λ1} p_{λ2} ...`. The empty partition is the unit monomial.
///
/// The derived order is lexicographic on the parts, so `[1,1] < [2]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid partition {input:?}: {reason}")]
pub struct ParsePartitionError {
    pub input: String,
    pub reason: &'static str,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-part partition `[k]`, i.e. the monomial `p_k`.
    pub fn single(k: u32) -> Self {
        Partition::new(alloc::vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Monomial product: concatenate and re-sort.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Human-readable monomial, e.g. `p2*p1^2`; the empty partition prints as `1`.
    pub fn monomial(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == part).count();
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&alloc::format!("p{part}"));
            if run > 1 {
                out.push_str(&alloc::format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Accepts `[2,1,1]` with optional whitespace. Parts must be positive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParsePartitionError { input: s.to_string(), reason };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err("expected a bracketed list such as [2,1]"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u32 = tok.trim().parse().map_err(|_| err("parts must be positive integers"))?;
            if p == 0 {
                return Err(err("parts must be positive integers"));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `k`, lexicographically descending: `[k]` first,
/// `[1,...,1]` last.
pub fn partitions(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, k, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_cases() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(2), vec![Partition::single(2), Partition::new(vec![1, 1])]);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn descending_order() {
        let ps = partitions(6);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn normalisation_and_text() {
        let p = Partition::new(vec![1, 2, 0, 1]);
        assert_eq!(p.parts(), &[2, 1, 1]);
        assert_eq!(p.weight(), 4);
        assert_eq!(alloc::format!("{p}"), "[2,1,1]");
        assert_eq!(p.monomial(), "p2*p1^2");
        assert_eq!(Partition::empty().monomial(), "1");
        assert_eq!("[1, 2,1]".parse::<Partition>().unwrap(), p);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
    }
}
