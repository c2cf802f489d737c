//! Box shapes, exact binomial coefficients and the multi-index lattice
//! `0 <= m_j <= i_j` that every inclusion-exclusion sum in this crate runs over.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact nonnegative integer used for every count.
pub type BigCount = BigUint;

/// Exact signed integer used for alternating sums.
pub type SignedCount = num_bigint::BigInt;

/// The dimensions `(i_1, ..., i_n)` of a multidimensional box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BoxShape {
    dims: Vec<usize>,
    cells: usize,
}

impl BoxShape {
    /// Every dimension must be at least 1 and the cell count must fit in a `usize`.
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidShape(
                "a box needs at least one dimension".into(),
            ));
        }
        if let Some(j) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidShape(format!("dimension {} is zero", j + 1)));
        }
        let cells = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidShape("cell count overflows usize".into()))?;
        Ok(BoxShape { dims, cells })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of coordinates `n`.
    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    /// `i_1 * ... * i_n`.
    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn max_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    pub fn dim_sum(&self) -> usize {
        self.dims.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for BoxShape {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        BoxShape::new(dims)
    }
}

impl From<BoxShape> for Vec<usize> {
    fn from(shape: BoxShape) -> Self {
        shape.dims
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, d) in self.dims.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A tuple `(m_1, ..., m_n)` with `0 <= m_j <= i_j` for a given shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    values: Vec<usize>,
}

impl MultiIndex {
    pub fn new(shape: &BoxShape, values: Vec<usize>) -> Result<Self> {
        if values.len() != shape.rank() {
            return Err(Error::InvalidMultiIndex(format!(
                "length {} does not match shape rank {}",
                values.len(),
                shape.rank()
            )));
        }
        if let Some(j) = values.iter().zip(shape.dims()).position(|(m, i)| m > i) {
            return Err(Error::InvalidMultiIndex(format!(
                "m_{} = {} exceeds i_{} = {}",
                j + 1,
                values[j],
                j + 1,
                shape.dims()[j]
            )));
        }
        Ok(MultiIndex { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `m_1 + ... + m_n`.
    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

/// `C(n, k)`, exact for arbitrarily large `n`. Zero when `k > n`.
pub fn binomial(n: &BigCount, k: usize) -> BigCount {
    let kb = BigCount::from(k);
    if kb > *n {
        return BigCount::zero();
    }
    // C(n, k) = C(n, n - k); take the shorter product when n is small.
    let k = match usize::try_from(n - &kb) {
        Ok(rest) if rest < k => rest,
        _ => k,
    };
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - BigCount::from(i);
        // Exact: the running product of i + 1 consecutive integers is divisible by (i + 1)!.
        acc /= BigCount::from(i + 1);
    }
    acc
}

/// Convenience wrapper over [`binomial`] for machine-width `n`.
pub fn binomial_usize(n: usize, k: usize) -> BigCount {
    binomial(&BigCount::from(n), k)
}

/// Row `[C(n, 0), ..., C(n, n)]` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n + 1);
    let mut cur = BigCount::one();
    row.push(cur.clone());
    for k in 0..n {
        cur = cur * BigCount::from(n - k) / BigCount::from(k + 1);
        row.push(cur.clone());
    }
    row
}

/// Odometer over the lattice `0 <= m_j <= bound_j`, last coordinate fastest.
#[derive(Clone, Debug)]
pub struct MultiIndexIter {
    bounds: Vec<usize>,
    next: Option<Vec<usize>>,
    remaining: usize,
}

impl MultiIndexIter {
    fn with_bounds(bounds: Vec<usize>) -> Self {
        let remaining = bounds
            .iter()
            .try_fold(1usize, |acc, &b| acc.checked_mul(b + 1))
            .unwrap_or(usize::MAX);
        let next = Some(vec![0; bounds.len()]);
        MultiIndexIter {
            bounds,
            next,
            remaining,
        }
    }
}

impl Iterator for MultiIndexIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut j = succ.len();
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            if succ[j] < self.bounds[j] {
                succ[j] += 1;
                self.next = Some(succ);
                break;
            }
            succ[j] = 0;
        }
        self.remaining = self.remaining.saturating_sub(1);
        Some(MultiIndex { values: current })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for MultiIndexIter {}

/// Every `(m_1, ..., m_n)` with `0 <= m_j <= i_j`, in lexicographic order.
pub fn iter_multi_indices(shape: &BoxShape) -> MultiIndexIter {
    MultiIndexIter::with_bounds(shape.dims().to_vec())
}

/// Every `(m_1, ..., m_n)` with `0 <= m_j < i_j`, in lexicographic order.
pub fn iter_strict_multi_indices(shape: &BoxShape) -> MultiIndexIter {
    MultiIndexIter::with_bounds(shape.dims().iter().map(|d| d - 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    fn shape(d: &[usize]) -> BoxShape {
        BoxShape::new(d.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigCount {
        BigCount::from(n)
    }

    #[test]
    fn shape_validation() {
        assert!(BoxShape::new(vec![]).is_err());
        assert!(BoxShape::new(vec![2, 0]).is_err());
        assert!(BoxShape::new(vec![usize::MAX, 2]).is_err());
        let s = shape(&[2, 3, 4]);
        assert_eq!(s.cell_count(), 24);
        assert_eq!(s.rank(), 3);
        assert_eq!(s.to_string(), "(2,3,4)");
    }

    #[test]
    fn multi_index_validation() {
        let s = shape(&[2, 2]);
        assert!(MultiIndex::new(&s, vec![1]).is_err());
        assert!(MultiIndex::new(&s, vec![3, 0]).is_err());
        assert_eq!(MultiIndex::new(&s, vec![2, 1]).unwrap().total(), 3);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_usize(4, 2), big(6));
        assert_eq!(binomial_usize(0, 3), big(0));
        assert_eq!(binomial_usize(10, 3), big(120));
        for n in 0..20 {
            assert_eq!(binomial_usize(n, 0), big(1));
        }
    }

    #[test]
    fn binomial_large_n() {
        // C(2^70, 2) = 2^70 (2^70 - 1) / 2
        let n = BigCount::one() << 70u32;
        let expected = (&n * (&n - 1u32)) >> 1u32;
        assert_eq!(binomial(&n, 2), expected);
    }

    #[test]
    fn pascal_identity_and_symmetry() {
        for n in 1..=40usize {
            for k in 1..=n {
                assert_eq!(
                    binomial_usize(n, k),
                    binomial_usize(n - 1, k - 1) + binomial_usize(n - 1, k),
                    "pascal n={n} k={k}"
                );
            }
        }
        for n in 0..=40usize {
            for k in 0..=n {
                assert_eq!(binomial_usize(n, k), binomial_usize(n, n - k));
            }
        }
    }

    #[test]
    fn row_sums() {
        for n in 0..=40usize {
            let row: BigCount = (0..=n).map(|k| binomial_usize(n, k)).sum();
            assert_eq!(row, BigCount::one() << n);
            assert_eq!(binomial_row(n).iter().sum::<BigCount>(), row);
        }
        for n in 1..=40usize {
            let alt: BigInt = (1..=n)
                .map(|k| {
                    let b = BigInt::from(binomial_usize(n, k));
                    if k % 2 == 1 {
                        b
                    } else {
                        -b
                    }
                })
                .sum();
            assert_eq!(alt, BigInt::one(), "n={n}");
        }
    }

    #[test]
    fn lattice_examples() {
        let v: Vec<_> = iter_multi_indices(&shape(&[1]))
            .map(|m| m.values().to_vec())
            .collect();
        assert_eq!(v, vec![vec![0], vec![1]]);

        let v: Vec<_> = iter_multi_indices(&shape(&[2, 2])).collect();
        assert_eq!(v.len(), 9);
        assert_eq!(v[0].values(), &[0, 0]);
        assert_eq!(v[8].values(), &[2, 2]);
        assert!(v.windows(2).all(|w| w[0] < w[1]), "lexicographic");

        assert_eq!(iter_multi_indices(&shape(&[1, 1, 1])).count(), 8);

        let v: Vec<_> = iter_strict_multi_indices(&shape(&[1]))
            .map(|m| m.values().to_vec())
            .collect();
        assert_eq!(v, vec![vec![0]]);
        assert_eq!(iter_strict_multi_indices(&shape(&[2, 2])).count(), 4);
        let v: Vec<_> = iter_strict_multi_indices(&shape(&[3]))
            .map(|m| m.values()[0])
            .collect();
        assert_eq!(v, vec![0, 1, 2]);
    }

    #[test]
    fn lattice_size_hint_is_exact() {
        let mut it = iter_multi_indices(&shape(&[3, 2]));
        assert_eq!(it.size_hint(), (12, Some(12)));
        it.next();
        assert_eq!(it.len(), 11);
    }

    proptest::proptest! {
        #[test]
        fn lattice_yields_each_index_once(dims in proptest::collection::vec(1usize..6, 1..6)) {
            let s = BoxShape::new(dims.clone()).unwrap();
            let expected: usize = dims.iter().map(|d| d + 1).product();
            proptest::prop_assume!(expected <= 100_000);
            let seen: HashSet<_> = iter_multi_indices(&s).collect();
            proptest::prop_assert_eq!(seen.len(), expected);
            proptest::prop_assert_eq!(iter_multi_indices(&s).count(), expected);
            for m in &seen {
                proptest::prop_assert!(MultiIndex::new(&s, m.values().to_vec()).is_ok());
            }
        }
    }
}
