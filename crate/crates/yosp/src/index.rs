//! Index combinatorics for the (2m+1)-dimensional orthosymplectic setup:
//! the involution i -> i' = 2m-i+2, the parity table, and the signs theta_i.

/// Index data for a fixed rank `m` (matrix size `n = 2m+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexData {
    pub m: usize,
    pub n: usize,
}

impl IndexData {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "rank must be positive");
        IndexData { m, n: 2 * m + 1 }
    }

    /// Parity of the basis vector: 1 for every index except the middle one.
    pub fn bar(&self, i: usize) -> u8 {
        debug_assert!(1 <= i && i <= self.n);
        if i == self.m + 1 {
            0
        } else {
            1
        }
    }

    /// theta_i = +1 for i <= m+1, -1 otherwise.
    pub fn theta(&self, i: usize) -> i64 {
        debug_assert!(1 <= i && i <= self.n);
        if i <= self.m + 1 {
            1
        } else {
            -1
        }
    }

    /// The involution i' = 2m - i + 2.
    pub fn prime(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n);
        2 * self.m + 2 - i
    }

    /// Parity of the matrix unit e_ij (and of the generator t_ij^{(r)}).
    pub fn parity(&self, i: usize, j: usize) -> u8 {
        (self.bar(i) + self.bar(j)) % 2
    }

    /// Generator positions retained by the rewrite system: i + j <= 2m+2 off
    /// the middle row, strictly below on the middle row.
    pub fn is_allowed(&self, i: usize, j: usize) -> bool {
        if i == self.m + 1 {
            i + j < 2 * self.m + 2
        } else {
            i + j <= 2 * self.m + 2
        }
    }

    /// All allowed (i, j) pairs in row-major order.
    pub fn allowed_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.is_allowed(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Count of generators per filtration degree: allowed t-positions plus
    /// the one central letter, `2m^2 + 3m + 1` in total.
    pub fn letters_per_degree(&self) -> usize {
        self.allowed_pairs().len() + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_and_tables() {
        for m in 1..=3 {
            let ix = IndexData::new(m);
            for i in 1..=ix.n {
                assert_eq!(ix.prime(ix.prime(i)), i);
                assert_eq!(ix.bar(i), if i == m + 1 { 0 } else { 1 });
                assert_eq!(ix.theta(i), if i <= m + 1 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn allowed_set_matches_count_formula() {
        for m in 1..=3 {
            let ix = IndexData::new(m);
            assert_eq!(ix.letters_per_degree(), 2 * m * m + 3 * m + 1);
        }
        let ix = IndexData::new(1);
        assert_eq!(
            ix.allowed_pairs(),
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]
        );
    }
}
