use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Integer partition with parts stored in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `∏_j 1/m_j!` where `m_j` is the multiplicity of part `j`.
    pub fn symmetry_factor(&self) -> BigRational {
        let mut denom = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let mut run = 1u32;
            while i + (run as usize) < self.parts.len() && self.parts[i + run as usize] == self.parts[i] {
                run += 1;
            }
            for f in 2..=run {
                denom *= f;
            }
            i += run as usize;
        }
        BigRational::new(BigInt::one(), denom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// All partitions of `n`, in lexicographic order of their ascending part
/// lists. `n = 0` yields the single empty partition.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in min_part..=remaining {
            if remaining - p != 0 && remaining - p < p {
                continue;
            }
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

pub fn symmetry_factor(p: &Partition) -> BigRational {
    p.symmetry_factor()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn partitions_of_three() {
        let ps: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(ps, vec!["1+1+1", "1+2", "3"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn symmetry_factors() {
        assert_eq!(Partition::new(vec![1, 1, 2]).symmetry_factor(), rational(1, 2));
        assert_eq!(Partition::new(vec![1, 1, 1, 2, 2]).symmetry_factor(), rational(1, 12));
        assert_eq!(Partition::new(vec![3]).symmetry_factor(), rational(1, 1));
    }
}
