//! Closed-form counts `t_k` of fully-projected `k`-subsets of a box and the
//! alternating-sum identity they satisfy.
//!
//! A `k`-subset `S` of `I_1 x ... x I_n` is fully projected when its projection
//! onto every coordinate `j` is all of `I_j = {1, ..., i_j}`. Removing the
//! subsets that avoid some value `r` in some coordinate `j` by
//! inclusion-exclusion gives
//!
//! ```text
//! t_k = sum_{0 <= m_j <= i_j} (-1)^(m_1 + ... + m_n)
//!         * C(i_1, m_1) ... C(i_n, m_n)
//!         * C((i_1 - m_1) ... (i_n - m_n), k)
//! ```

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiindex::{
    binomial_row, binomial_usize, iter_multi_indices, BigCount, BoxShape, MultiIndex, SignedCount,
};

/// `t_1, ..., t_N` for a shape with `N` cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSequence {
    shape: BoxShape,
    counts: Vec<BigCount>,
}

impl CountSequence {
    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    /// The counts, where `counts()[k - 1]` is `t_k`.
    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    /// `t_k` for `1 <= k <= N`, `None` otherwise.
    pub fn get(&self, k: usize) -> Option<&BigCount> {
        k.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `sum_k (-1)^(k-1) t_k`.
    pub fn alternating_sum(&self) -> SignedCount {
        let mut acc = SignedCount::zero();
        for (i, t) in self.counts.iter().enumerate() {
            let t = SignedCount::from(t.clone());
            // i = k - 1
            if i % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    }
}

/// Outcome of evaluating the alternating sum for one shape against both
/// candidate closed forms: `(-1)^(i_1 + ... + i_n)` and
/// `(-1)^((i_1 - 1) + ... + (i_n - 1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub shape: BoxShape,
    #[serde(with = "signed_decimal")]
    pub alternating_sum: SignedCount,
    /// `(-1)^(i_1 + ... + i_n)`.
    pub stated_sign: i8,
    /// `(-1)^((i_1 - 1) + ... + (i_n - 1))`.
    pub derived_sign: i8,
    pub matches_stated: bool,
    pub matches_derived: bool,
}

mod signed_decimal {
    use super::SignedCount;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &SignedCount, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SignedCount, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn parity_sign(exponent: usize) -> i8 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Evaluates the inclusion-exclusion sum for one shape, caching the rows
/// `C(i_j, 0..=i_j)` that recur across every `k`.
#[derive(Clone, Debug)]
pub struct ProjectionCounter {
    shape: BoxShape,
    dim_rows: Vec<Vec<BigCount>>,
}

impl ProjectionCounter {
    pub fn new(shape: &BoxShape) -> Self {
        let dim_rows = shape.dims().iter().map(|&d| binomial_row(d)).collect();
        ProjectionCounter {
            shape: shape.clone(),
            dim_rows,
        }
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let cells = self.shape.cell_count();
        if k == 0 || k > cells {
            return Err(Error::SubsetSizeOutOfRange { k, cells });
        }
        Ok(())
    }

    /// `(-1)^|m| * prod_j C(i_j, m_j)` together with `prod_j (i_j - m_j)`.
    fn weight(&self, m: &MultiIndex) -> (SignedCount, usize) {
        let mut coeff = BigCount::one();
        let mut remaining = 1usize;
        for ((row, &mj), &ij) in self.dim_rows.iter().zip(m.values()).zip(self.shape.dims()) {
            coeff *= &row[mj];
            remaining *= ij - mj;
        }
        let sign = if m.total().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        (BigInt::from_biguint(sign, coeff), remaining)
    }

    /// The single summand of the closed form indexed by `m`.
    pub fn term(&self, m: &MultiIndex, k: usize) -> SignedCount {
        let (weight, remaining) = self.weight(m);
        weight * SignedCount::from(binomial_usize(remaining, k))
    }

    /// `t_k`, summed term by term over the full lattice in lexicographic order.
    pub fn count(&self, k: usize) -> Result<BigCount> {
        self.check_k(k)?;
        let total: SignedCount = iter_multi_indices(&self.shape)
            .map(|m| self.term(&m, k))
            .sum();
        Ok(to_count(total))
    }

    /// All of `t_1, ..., t_N`.
    ///
    /// Summands sharing the same `prod_j (i_j - m_j)` are merged first, so each
    /// distinct remaining-cell count needs only one Pascal row.
    pub fn sequence(&self) -> CountSequence {
        let mut grouped: BTreeMap<usize, SignedCount> = BTreeMap::new();
        for m in iter_multi_indices(&self.shape) {
            let (weight, remaining) = self.weight(&m);
            *grouped.entry(remaining).or_default() += weight;
        }
        grouped.retain(|&remaining, w| remaining > 0 && !w.is_zero());
        let rows: Vec<(SignedCount, Vec<BigCount>)> = grouped
            .into_iter()
            .map(|(remaining, w)| (w, binomial_row(remaining)))
            .collect();

        let cells = self.shape.cell_count();
        let counts = (1..=cells)
            .into_par_iter()
            .map(|k| {
                let total: SignedCount = rows
                    .iter()
                    .filter(|(_, row)| k < row.len())
                    .map(|(w, row)| w * SignedCount::from(row[k].clone()))
                    .sum();
                to_count(total)
            })
            .collect();
        CountSequence {
            shape: self.shape.clone(),
            counts,
        }
    }
}

fn to_count(v: SignedCount) -> BigCount {
    v.to_biguint()
        .expect("inclusion-exclusion produced a negative subset count")
}

/// `t_k` for `1 <= k <= i_1 * ... * i_n`.
pub fn count_fully_projected(shape: &BoxShape, k: usize) -> Result<BigCount> {
    ProjectionCounter::new(shape).count(k)
}

/// The summand of the closed form for multi-index `m` and subset size `k`.
pub fn fully_projected_term(shape: &BoxShape, m: &MultiIndex, k: usize) -> SignedCount {
    ProjectionCounter::new(shape).term(m, k)
}

pub fn count_sequence(shape: &BoxShape) -> CountSequence {
    ProjectionCounter::new(shape).sequence()
}

/// `sum_{k=1}^{N} (-1)^(k-1) t_k`.
pub fn alternating_sum(shape: &BoxShape) -> SignedCount {
    count_sequence(shape).alternating_sum()
}

pub fn check_identity(shape: &BoxShape) -> IdentityReport {
    let alternating_sum = alternating_sum(shape);
    let stated_sign = parity_sign(shape.dim_sum());
    let derived_sign = parity_sign(shape.dim_sum() - shape.rank());
    let matches_stated = alternating_sum == SignedCount::from(stated_sign);
    let matches_derived = alternating_sum == SignedCount::from(derived_sign);
    IdentityReport {
        shape: shape.clone(),
        alternating_sum,
        stated_sign,
        derived_sign,
        matches_stated,
        matches_derived,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(d: &[usize]) -> BoxShape {
        BoxShape::new(d.to_vec()).unwrap()
    }

    fn counts(v: &[u64]) -> Vec<BigCount> {
        v.iter().map(|&x| BigCount::from(x)).collect()
    }

    #[test]
    fn single_counts() {
        let s = shape(&[2, 2]);
        assert_eq!(count_fully_projected(&s, 2).unwrap(), BigCount::from(2u8));
        assert_eq!(count_fully_projected(&s, 1).unwrap(), BigCount::zero());
        assert_eq!(count_fully_projected(&s, 4).unwrap(), BigCount::one());
        assert_eq!(
            count_fully_projected(&shape(&[1, 1, 2]), 2).unwrap(),
            BigCount::one()
        );
        for i in 1..8 {
            assert_eq!(
                count_fully_projected(&shape(&[i]), i).unwrap(),
                BigCount::one()
            );
        }
    }

    #[test]
    fn k_out_of_range() {
        let s = shape(&[2, 2]);
        assert_eq!(
            count_fully_projected(&s, 0),
            Err(Error::SubsetSizeOutOfRange { k: 0, cells: 4 })
        );
        assert!(count_fully_projected(&s, 5).is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(
            count_sequence(&shape(&[2, 2])).counts(),
            counts(&[0, 2, 4, 1])
        );
        assert_eq!(count_sequence(&shape(&[1])).counts(), counts(&[1]));
        assert_eq!(count_sequence(&shape(&[2])).counts(), counts(&[0, 1]));
        let seq = count_sequence(&shape(&[2, 2]));
        assert_eq!(seq.get(0), None);
        assert_eq!(seq.get(3), Some(&BigCount::from(4u8)));
    }

    #[test]
    fn grouped_sequence_matches_term_by_term_sum() {
        for d in [&[3, 4][..], &[2, 3, 2], &[5], &[1, 6], &[3, 3, 3]] {
            let s = shape(d);
            let counter = ProjectionCounter::new(&s);
            let seq = counter.sequence();
            for k in 1..=s.cell_count() {
                assert_eq!(seq.get(k).unwrap(), &counter.count(k).unwrap(), "{s} k={k}");
            }
        }
    }

    #[test]
    fn alternating_sums() {
        assert_eq!(alternating_sum(&shape(&[2, 2])), SignedCount::one());
        assert_eq!(alternating_sum(&shape(&[2])), -SignedCount::one());
        for n in 1..6 {
            assert_eq!(alternating_sum(&shape(&vec![1; n])), SignedCount::one());
        }
    }

    #[test]
    fn identity_reports() {
        let r = check_identity(&shape(&[2, 2]));
        assert_eq!(r.alternating_sum, SignedCount::one());
        assert_eq!((r.stated_sign, r.derived_sign), (1, 1));
        assert!(r.matches_stated && r.matches_derived);

        let r = check_identity(&shape(&[2]));
        assert_eq!(r.alternating_sum, -SignedCount::one());
        assert_eq!((r.stated_sign, r.derived_sign), (1, -1));
        assert!(!r.matches_stated && r.matches_derived);

        let r = check_identity(&shape(&[1]));
        assert_eq!(r.alternating_sum, SignedCount::one());
        assert_eq!((r.stated_sign, r.derived_sign), (-1, 1));
        assert!(!r.matches_stated && r.matches_derived);
    }

    #[test]
    fn identity_report_json() {
        let r = check_identity(&shape(&[2]));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"shape":[2],"alternating_sum":"-1","stated_sign":1,"derived_sign":-1,"matches_stated":false,"matches_derived":true}"#
        );
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn reversed_summation_order_agrees() {
        let s = shape(&[3, 2, 2]);
        let indices: Vec<_> = iter_multi_indices(&s).collect();
        for k in 1..=s.cell_count() {
            let rev: SignedCount = indices
                .iter()
                .rev()
                .map(|m| fully_projected_term(&s, m, k))
                .sum();
            assert_eq!(
                rev,
                SignedCount::from(count_fully_projected(&s, k).unwrap())
            );
        }
    }

    #[test]
    fn large_shape_is_exact() {
        // Far beyond brute force; the support and top entry still pin the sequence.
        let s = shape(&[6, 5, 4]);
        let seq = count_sequence(&s);
        assert_eq!(seq.len(), 120);
        assert!(seq.counts()[..5].iter().all(Zero::is_zero));
        assert!(!seq.counts()[5].is_zero());
        assert_eq!(seq.get(120), Some(&BigCount::one()));
        assert_eq!(seq.get(119), Some(&BigCount::from(120u8)));
        let r = check_identity(&s);
        assert_eq!(r.alternating_sum, SignedCount::from(r.derived_sign));
    }
}
