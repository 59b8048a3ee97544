//! Direct sums, parallel connections and 2-sums of binary matroids.

use super::BinaryMatroid;
use crate::error::{Error, Result};

fn shift_cols(m: &BinaryMatroid, by: usize) -> Vec<u64> {
    m.cols().iter().map(|&c| c << by).collect()
}

/// `M1 ⊕ M2` on the disjoint union of the label sets.
pub fn direct_sum(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Result<BinaryMatroid> {
    if m1.rank() + m2.rank() > 64 {
        return Err(Error::Invalid("rank too large".into()));
    }
    let mut labels = m1.labels().to_vec();
    labels.extend(m2.labels().iter().cloned());
    let mut cols = m1.cols().to_vec();
    cols.extend(shift_cols(m2, m1.rank()));
    BinaryMatroid::from_columns(labels, &cols)
}

fn check_basepoint(m1: &BinaryMatroid, m2: &BinaryMatroid, p: &str) -> Result<(usize, usize)> {
    let (Some(i), Some(j)) = (m1.index_of(p), m2.index_of(p)) else {
        return Err(Error::BadBasepoint(format!("{p} missing from a part")));
    };
    let shared = m1.labels().iter().filter(|l| m2.index_of(l).is_some()).count();
    if shared != 1 {
        return Err(Error::BadBasepoint(format!("parts share {shared} labels")));
    }
    for (m, k) in [(m1, i), (m2, j)] {
        if m.is_loop(k) {
            return Err(Error::BadBasepoint(format!("{p} is a loop")));
        }
        if m.is_coloop(k) {
            return Err(Error::BadBasepoint(format!("{p} is a coloop")));
        }
    }
    Ok((i, j))
}

/// Parallel connection `P(M1, M2)` along the shared label `p`.
///
/// Elements of `M1` come first, then those of `M2` other than `p`.
pub fn parallel_connection(m1: &BinaryMatroid, m2: &BinaryMatroid, p: &str) -> Result<BinaryMatroid> {
    let (i, j) = check_basepoint(m1, m2, p)?;
    if m1.rank() + m2.rank() > 64 {
        return Err(Error::Invalid("rank too large".into()));
    }
    // Glue the two copies of p by contracting their sum in the direct sum.
    let shifted = shift_cols(m2, m1.rank());
    let glue = m1.col(i) ^ shifted[j];
    let mut labels = m1.labels().to_vec();
    let mut cols = m1.cols().to_vec();
    for (k, l) in m2.labels().iter().enumerate() {
        if k != j {
            labels.push(l.clone());
            cols.push(shifted[k]);
        }
    }
    labels.push("\u{0}glue".into());
    cols.push(glue);
    let all = BinaryMatroid::from_parts_unchecked(labels, &cols);
    let last = all.len() - 1;
    Ok(all.contract(super::SubsetMask::singleton(last)))
}

/// 2-sum `M1 ⊕₂ M2` along the basepoint `p`.
pub fn two_sum(m1: &BinaryMatroid, m2: &BinaryMatroid, p: &str) -> Result<BinaryMatroid> {
    let pc = parallel_connection(m1, m2, p)?;
    Ok(pc.delete(super::SubsetMask::singleton(pc.idx(p)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{CircuitKind, SubsetMask};

    fn triangle(a: &str, b: &str, c: &str) -> BinaryMatroid {
        BinaryMatroid::from_strs(&[a, b, c], &["101", "011"]).unwrap()
    }

    #[test]
    fn two_triangles_give_a_four_circuit() {
        let s = two_sum(&triangle("a", "b", "p"), &triangle("p", "c", "d"), "p").unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.rank(), 3);
        assert!(s.is_circuit(SubsetMask::full(4)));
    }

    #[test]
    fn dual_commutes_with_two_sum() {
        let m1 = triangle("a", "b", "p");
        let m2 = BinaryMatroid::from_strs(&["p", "c", "d", "e"], &["1001", "0101", "0011"]).unwrap();
        let s = two_sum(&m1, &m2, "p").unwrap();
        let t = two_sum(&m1.dual(), &m2.dual(), "p").unwrap();
        assert_eq!(s.dual(), t);
        let glued: Vec<_> = s.circuits_up_to(6, CircuitKind::Circuit);
        assert!(!glued.is_empty());
    }

    #[test]
    fn basepoint_errors() {
        let m1 = triangle("a", "b", "p");
        let coloop = BinaryMatroid::from_strs(&["p", "c"], &["10"]).unwrap();
        assert!(matches!(two_sum(&m1, &coloop, "p"), Err(Error::BadBasepoint(_))));
        assert!(matches!(two_sum(&m1, &triangle("x", "y", "z"), "p"), Err(Error::BadBasepoint(_))));
    }
}
