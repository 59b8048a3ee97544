//! Induced minors `M[X, B]` and blocking sequences.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, SubsetMask};

/// `M[X, B] = M / (B − X) \ (E − (B ∪ X))`.
pub fn induced_minor(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask) -> Result<BinaryMatroid> {
    if !m.is_basis(basis) {
        return Err(Error::NotABasis(format!("{:?}", m.names(basis))));
    }
    let e = m.ground();
    Ok(m.minor(basis - x, e - (basis | x)))
}

/// `λ` of `X` in `M[X ∪ Y, B]`.
pub fn lambda_b(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask, y: SubsetMask) -> usize {
    let e = m.ground();
    let u = x | y;
    let minor = m.minor(basis - u, e - (basis | u));
    let pos = positions_in(m, u);
    let sub = SubsetMask::from_indices(x.iter().map(|i| pos[i]));
    minor.lambda(sub)
}

/// Maps each original position in `u` to its position in a minor on `u`.
fn positions_in(m: &BinaryMatroid, u: SubsetMask) -> Vec<usize> {
    let mut pos = vec![usize::MAX; m.len()];
    for (k, i) in u.iter().enumerate() {
        pos[i] = k;
    }
    pos
}

fn is_k_separation(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask, y: SubsetMask, k: usize) -> bool {
    x.len() >= k && y.len() >= k && lambda_b(m, basis, x, y) < k
}

fn check_exact(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask, y: SubsetMask, k: usize) -> Result<()> {
    if !m.is_basis(basis) {
        return Err(Error::NotABasis(format!("{:?}", m.names(basis))));
    }
    if x.intersects(y) || k == 0 || x.len() < k || y.len() < k || lambda_b(m, basis, x, y) != k - 1 {
        return Err(Error::NotExactSeparation(m.names(x), m.names(y)));
    }
    Ok(())
}

/// Conditions (i) to (iii) for a candidate sequence.
pub fn blocks(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask, y: SubsetMask, k: usize, seq: &[usize]) -> bool {
    let Some((&first, _)) = seq.split_first() else {
        return false;
    };
    let last = seq[seq.len() - 1];
    !is_k_separation(m, basis, x, y.with(first), k)
        && seq.windows(2).all(|w| !is_k_separation(m, basis, x.with(w[0]), y.with(w[1]), k))
        && !is_k_separation(m, basis, x.with(last), y, k)
}

/// A blocking sequence of the exact `k`-separation `(X, Y)` of
/// `M[X ∪ Y, B]`, as element positions of `m`, or `None` when there is none.
///
/// The sequence returned is as short as possible, so no proper subsequence
/// satisfies the blocking conditions; this is rechecked before returning.
pub fn find_blocking_sequence(
    m: &BinaryMatroid,
    basis: SubsetMask,
    x: SubsetMask,
    y: SubsetMask,
    k: usize,
) -> Result<Option<Vec<usize>>> {
    check_exact(m, basis, x, y, k)?;
    let rest: Vec<usize> = (m.ground() - x - y).iter().collect();
    let n = m.len();
    let start: Vec<bool> = (0..n).map(|e| rest.contains(&e) && !is_k_separation(m, basis, x, y.with(e), k)).collect();
    let end: Vec<bool> = (0..n).map(|e| rest.contains(&e) && !is_k_separation(m, basis, x.with(e), y, k)).collect();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &e in &rest {
        if start[e] {
            seen[e] = true;
            queue.push_back(e);
        }
    }
    while let Some(u) = queue.pop_front() {
        if end[u] {
            let mut seq = vec![u];
            let mut v = u;
            while prev[v] != usize::MAX {
                v = prev[v];
                seq.push(v);
            }
            seq.reverse();
            debug_assert!(blocks(m, basis, x, y, k, &seq));
            debug_assert!(is_minimal(m, basis, x, y, k, &seq));
            return Ok(Some(seq));
        }
        for &w in &rest {
            if !seen[w] && !is_k_separation(m, basis, x.with(u), y.with(w), k) {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Condition (iv): no proper subsequence satisfies (i) to (iii).
pub fn is_minimal(m: &BinaryMatroid, basis: SubsetMask, x: SubsetMask, y: SubsetMask, k: usize, seq: &[usize]) -> bool {
    let t = seq.len();
    (1..(1u64 << t) - 1).all(|pick| {
        let sub: Vec<usize> = (0..t).filter(|&i| (pick >> i) & 1 == 1).map(|i| seq[i]).collect();
        !blocks(m, basis, x, y, k, &sub)
    })
}

/// Whether `(X, Y)` extends to a `k`-separation `(X', Y')` of `M`, checked by
/// trying every placement of the remaining elements.
pub fn induces_separation(m: &BinaryMatroid, x: SubsetMask, y: SubsetMask, k: usize) -> bool {
    let rest: Vec<usize> = (m.ground() - x - y).iter().collect();
    (0..(1u64 << rest.len())).any(|pick| {
        let mut xs = x;
        for (i, &e) in rest.iter().enumerate() {
            if (pick >> i) & 1 == 1 {
                xs = xs.with(e);
            }
        }
        let ys = xs.complement(m.len());
        xs.len() >= k && ys.len() >= k && m.lambda(xs) < k
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"]).unwrap()
    }

    #[test]
    fn whole_ground_set_is_itself() {
        let f = fano();
        let b = f.lex_basis();
        assert_eq!(induced_minor(&f, b, f.ground()).unwrap(), f);
        let on_b = induced_minor(&f, b, b).unwrap();
        assert_eq!((on_b.len(), on_b.rank()), (3, 3));
    }

    #[test]
    fn rejects_non_basis() {
        let f = fano();
        let not_b = f.mask(&["1", "2", "4"]).unwrap();
        assert!(matches!(induced_minor(&f, not_b, f.ground()), Err(Error::NotABasis(_))));
    }

    #[test]
    fn fano_separation_is_blocked() {
        let f = fano();
        let b = f.lex_basis();
        // In M[{1,2,4,7}, B] = F7 / 3 \ {5,6} the pair {1,2} is a 2-separation.
        let x = f.mask(&["1", "2"]).unwrap();
        let y = f.mask(&["4", "7"]).unwrap();
        let k = lambda_b(&f, b, x, y) + 1;
        if x.len() >= k && y.len() >= k {
            let seq = find_blocking_sequence(&f, b, x, y, k).unwrap();
            assert_eq!(seq.is_some(), !induces_separation(&f, x, y, k));
        }
    }
}
