//! Integer partitions and multipartite indices.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition; panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be >= 1");
        Partition { parts }
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Weight |λ| = sum of parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (0-based), zero beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `k` among the parts.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// True if every row of `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }

    /// z_λ = prod_i i^{m_i} m_i! — the centralizer order of a permutation of
    /// cycle type λ.
    pub fn z_lambda(&self) -> Rat {
        let mut acc = Rat::one();
        let mut i = 0;
        while i < self.parts.len() {
            let value = self.parts[i];
            let mut m = 0u32;
            while i < self.parts.len() && self.parts[i] == value {
                m += 1;
                i += 1;
            }
            for j in 1..=m {
                acc *= Rat::from_integer((value as u64 * j as u64).into());
            }
            // the loop above multiplies value^m * m! in one pass:
            // j-th step contributes value * j
        }
        acc
    }

    /// Union of part multisets (the product rule for multiplicative bases).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Appends one part.
    pub fn with_part(&self, k: u32) -> Partition {
        assert!(k >= 1);
        let mut parts = self.parts.clone();
        parts.push(k);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Removes one copy of part `k`; None when absent.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// (-1)^{|λ| - ℓ(λ)} — the sign of a permutation of cycle type λ.
    pub fn permutation_sign(&self) -> i64 {
        if (self.weight() as i64 - self.len() as i64) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Dominance partial order on partitions of equal weight.
    /// None for incomparable pairs or unequal weights.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.weight() != other.weight() {
            return None;
        }
        let n = self.len().max(other.len());
        let mut ge = true;
        let mut le = true;
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                ge = false;
            }
            if a > b {
                le = false;
            }
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// All partitions of `n` in reverse-lexicographic order: (n) first, (1^n) last.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        gen_parts(n, n, &mut stack, &mut out);
        out
    }

    /// All partitions of weight 0..=n, ordered by weight then reverse-lex.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Hook length of the cell (i, j), 0-based.
    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let conj = self.conjugate();
        self.part(i) - j as u32 + conj.part(j) - i as u32 - 1
    }
}

fn gen_parts(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        stack.push(p);
        gen_parts(remaining - p, p, stack, out);
        stack.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multipartite (vector) index: an m-tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    components: Vec<u32>,
}

impl MultiIndex {
    pub fn new(components: Vec<u32>) -> Self {
        assert!(!components.is_empty(), "multi-index needs at least one component");
        MultiIndex { components }
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&k| k == 0)
    }

    pub fn norm(&self) -> u32 {
        self.components.iter().sum()
    }

    fn sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let c: Option<Vec<u32>> = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect();
        c.map(MultiIndex::new)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// All multisets of non-zero multi-indices with componentwise sum `k`.
/// Each multiset is returned sorted descending; the list order is canonical.
///
/// Errors on the all-zero target (the empty index has no partition into
/// non-zero parts, and the generating products exclude it as well).
pub fn enumerate_multipartitions(k: &MultiIndex) -> Result<Vec<Vec<MultiIndex>>> {
    if k.is_zero() {
        return Err(Error::Usage(
            "multipartitions of the all-zero index are not defined".into(),
        ));
    }
    // candidate parts: all non-zero v <= k componentwise, descending
    let mut candidates = Vec::new();
    let mut cur = vec![0u32; k.arity()];
    loop {
        let v = MultiIndex::new(cur.clone());
        if !v.is_zero() {
            candidates.push(v);
        }
        // odometer increment bounded by k
        let mut i = 0;
        loop {
            if i == cur.len() {
                candidates.sort_by(|a, b| b.cmp(a));
                let mut out = Vec::new();
                let mut stack = Vec::new();
                gen_multi(k.clone(), 0, &candidates, &mut stack, &mut out);
                return Ok(out);
            }
            if cur[i] < k.components()[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn gen_multi(
    remaining: MultiIndex,
    min_candidate: usize,
    candidates: &[MultiIndex],
    stack: &mut Vec<MultiIndex>,
    out: &mut Vec<Vec<MultiIndex>>,
) {
    if remaining.is_zero() {
        out.push(stack.clone());
        return;
    }
    for (i, cand) in candidates.iter().enumerate().skip(min_candidate) {
        if let Some(rest) = remaining.sub(cand) {
            stack.push(cand.clone());
            gen_multi(rest, i, candidates, stack, out);
            stack.pop();
        }
    }
}

/// Like [`enumerate_multipartitions`] but with all parts distinct.
pub fn enumerate_distinct_multipartitions(k: &MultiIndex) -> Result<Vec<Vec<MultiIndex>>> {
    let all = enumerate_multipartitions(k)?;
    Ok(all
        .into_iter()
        .filter(|ms| ms.windows(2).all(|w| w[0] != w[1]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    /// Brute-force partition count: number of multisets of positive integers
    /// summing to n, via the bounded recursion.
    fn count_partitions(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|p| count_partitions(n - p, p)).sum()
    }

    #[test]
    fn enumerate_zero() {
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_counts() {
        // frozen from the brute-force counter
        assert_eq!(count_partitions(4, 4), 5);
        assert_eq!(count_partitions(10, 10), 42);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(10).len(), 42);
    }

    #[test]
    fn enumerate_order_is_revlex() {
        let ps: Vec<Vec<u32>> = Partition::all(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            ps,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(Partition::new(vec![1, 1, 1]).z_lambda(), int(6)); // 1^3 * 3!
        assert_eq!(Partition::new(vec![3]).z_lambda(), int(3));
        assert_eq!(Partition::empty().z_lambda(), int(1));
        assert_eq!(Partition::new(vec![2, 2, 1]).z_lambda(), int(8)); // 2^2*2! * 1
    }

    #[test]
    fn z_lambda_sum_identity() {
        // sum over λ ⊢ n of n!/z_λ = n! counts permutations by cycle type,
        // i.e. sum 1/z_λ... times n! must equal n!: sum n!/z_λ = n!.
        use crate::rat::factorial;
        for n in 0..=8u32 {
            let total: Rat = Partition::all(n)
                .iter()
                .map(|p| factorial(n) / p.z_lambda())
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition::new(vec![3]).conjugate(), Partition::new(vec![1, 1, 1]));
        assert_eq!(Partition::new(vec![2, 1]).conjugate(), Partition::new(vec![2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=12u32 {
            for p in Partition::all(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![4, 1, 1]);
        let b = Partition::new(vec![3, 3]);
        assert_eq!(a.dominance_cmp(&b), None); // classic incomparable pair
        let c = Partition::new(vec![3, 2, 1]);
        let d = Partition::new(vec![2, 2, 2]);
        assert_eq!(c.dominance_cmp(&d), Some(Ordering::Greater));
        assert_eq!(d.dominance_cmp(&c), Some(Ordering::Less));
        assert_eq!(c.dominance_cmp(&c), Some(Ordering::Equal));
    }

    #[test]
    fn multipartitions_examples() {
        // (1,1): {(1,1)} and {(1,0),(0,1)}
        let k = MultiIndex::new(vec![1, 1]);
        let ms = enumerate_multipartitions(&k).unwrap();
        assert_eq!(ms.len(), 2);

        // m=1, k=2: {2}, {1,1}
        let k = MultiIndex::new(vec![2]);
        let ms = enumerate_multipartitions(&k).unwrap();
        assert_eq!(ms.len(), 2);

        // (2,2) restricted to exactly 2 parts: 4 multisets
        let k = MultiIndex::new(vec![2, 2]);
        let ms = enumerate_multipartitions(&k).unwrap();
        let two_part = ms.iter().filter(|m| m.len() == 2).count();
        assert_eq!(two_part, 4);

        assert!(enumerate_multipartitions(&MultiIndex::new(vec![0, 0])).is_err());
    }

    #[test]
    fn multipartitions_match_scalar_partitions() {
        // m = 1 multipartitions are ordinary partitions
        for n in 1..=8u32 {
            let ms = enumerate_multipartitions(&MultiIndex::new(vec![n])).unwrap();
            assert_eq!(ms.len() as u64, count_partitions(n, n));
        }
    }

    #[test]
    fn hook_lengths() {
        // (2,1): hooks 3,1 / 1
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.hook_length(0, 0), 3);
        assert_eq!(p.hook_length(0, 1), 1);
        assert_eq!(p.hook_length(1, 0), 1);
    }
}
