//! Linear algebra over GF(2) for maps on at most 32 coordinates.
//!
//! A linear map is given by its columns: `columns[j]` is the image of the
//! j-th unit vector, as a row bitmask.

/// Row-reduced view of a column set that remembers which input columns were
/// combined to reach each pivot.
struct Echelon {
    /// (reduced column, combination of input columns), keyed by leading bit.
    pivots: Vec<Option<(u32, u32)>>,
    kernel: Vec<u32>,
}

impl Echelon {
    fn new(columns: &[u32], rows: u32) -> Self {
        let mut pivots: Vec<Option<(u32, u32)>> = vec![None; rows as usize];
        let mut kernel = Vec::new();
        for (j, &col) in columns.iter().enumerate() {
            let mut v = col;
            let mut combo = 1u32 << j;
            while v != 0 {
                let lead = 31 - v.leading_zeros();
                match pivots[lead as usize] {
                    Some((pv, pc)) => {
                        v ^= pv;
                        combo ^= pc;
                    }
                    None => {
                        pivots[lead as usize] = Some((v, combo));
                        break;
                    }
                }
            }
            if v == 0 {
                kernel.push(combo);
            }
        }
        Echelon { pivots, kernel }
    }

    fn solve(&self, target: u32) -> Option<u32> {
        let mut v = target;
        let mut combo = 0u32;
        while v != 0 {
            let lead = 31 - v.leading_zeros();
            let (pv, pc) = self.pivots.get(lead as usize).copied().flatten()?;
            v ^= pv;
            combo ^= pc;
        }
        Some(combo)
    }
}

/// A basis of the kernel {x : sum_j x_j columns[j] = 0}.
pub fn kernel_basis(columns: &[u32], rows: u32) -> Vec<u32> {
    assert!(columns.len() <= 32 && rows <= 32);
    Echelon::new(columns, rows).kernel
}

/// Rank of the map.
pub fn rank(columns: &[u32], rows: u32) -> usize {
    columns.len() - kernel_basis(columns, rows).len()
}

/// Some x with sum_j x_j columns[j] = target, if the system is consistent.
pub fn solve_columns(columns: &[u32], rows: u32, target: u32) -> Option<u32> {
    assert!(columns.len() <= 32 && rows <= 32);
    Echelon::new(columns, rows).solve(target)
}

/// Image of x under the map.
pub fn apply(columns: &[u32], x: u32) -> u32 {
    columns
        .iter()
        .enumerate()
        .filter(|(j, _)| x >> j & 1 == 1)
        .fold(0, |acc, (_, &c)| acc ^ c)
}

/// All 2^k elements of the span of `basis`.
pub fn span(basis: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32];
    for &b in basis {
        let extra: Vec<u32> = out.iter().map(|&v| v ^ b).collect();
        out.extend(extra);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_has_trivial_kernel() {
        let cols: Vec<u32> = (0..5).map(|j| 1 << j).collect();
        assert!(kernel_basis(&cols, 5).is_empty());
        assert_eq!(solve_columns(&cols, 5, 0b10110), Some(0b10110));
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let cols = vec![0u32; 4];
        let k = kernel_basis(&cols, 4);
        assert_eq!(k.len(), 4);
        assert_eq!(span(&k).len(), 16);
        assert_eq!(solve_columns(&cols, 4, 1), None);
    }

    proptest! {
        #[test]
        fn kernel_matches_brute_force(cols in prop::collection::vec(0u32..64, 6)) {
            let basis = kernel_basis(&cols, 6);
            let mut from_basis = span(&basis);
            from_basis.sort_unstable();
            let brute: Vec<u32> = (0..64u32).filter(|&x| apply(&cols, x) == 0).collect();
            prop_assert_eq!(from_basis, brute);
            prop_assert_eq!(rank(&cols, 6) + basis.len(), 6);
        }

        #[test]
        fn solve_is_consistent(cols in prop::collection::vec(0u32..256, 8), t in 0u32..256) {
            let brute = (0..256u32).find(|&x| apply(&cols, x) == t);
            match solve_columns(&cols, 8, t) {
                Some(x) => prop_assert_eq!(apply(&cols, x), t),
                None => prop_assert!(brute.is_none()),
            }
        }
    }
}
