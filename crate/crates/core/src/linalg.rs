//! Gaussian elimination over F2 on bit-packed rows.

use crate::bits::Bits;

/// A subspace of `F2^ncols` kept in reduced row-echelon form.
///
/// Each row's pivot is its lowest set column; pivots increase down the rows
/// and every pivot column is zero in all other rows, so two subspaces are
/// equal exactly when their row lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<Bits>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = Bits>) -> Self {
        let mut b = Self::new(ncols);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Bits] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut Bits) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &Bits) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Bits) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// First row of `self` not in `other`, or of `other` not in `self`.
    pub fn difference_witness(&self, other: &EchelonBasis) -> Option<Bits> {
        self.rows
            .iter()
            .find(|r| !other.contains(r))
            .or_else(|| other.rows.iter().find(|r| !self.contains(r)))
            .cloned()
    }
}

/// Basis of `{ v : A v = 0 }` for a matrix given by its columns (each of length `nrows`).
pub fn nullspace(nrows: usize, columns: &[Bits]) -> EchelonBasis {
    let ncols = columns.len();
    // rows of A
    let mut rows: Vec<Bits> = (0..nrows)
        .map(|r| {
            let mut row = Bits::zeros(ncols);
            for (c, col) in columns.iter().enumerate() {
                if col.get(r) {
                    row.set(c, true);
                }
            }
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }

    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = EchelonBasis::new(ncols);
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = Bits::zeros(ncols);
        v.set(free, true);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if rows[r].get(free) {
                v.set(pc, true);
            }
        }
        basis.insert(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Bits {
        let mut b = Bits::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            b.set(i, ch == '1');
        }
        b
    }

    #[test]
    fn echelon_is_canonical() {
        let a = EchelonBasis::from_rows(4, [bits("1100"), bits("0110"), bits("1010")]);
        let b = EchelonBasis::from_rows(4, [bits("1010"), bits("0110")]);
        assert_eq!(a.dim(), 2);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert!(a.contains(&bits("1100")));
        assert!(!a.contains(&bits("0001")));
        let c = EchelonBasis::from_rows(4, [bits("1010"), bits("0001")]);
        assert!(a.difference_witness(&c).is_some());
        assert_eq!(a.difference_witness(&b), None);
    }

    #[test]
    fn nullspace_of_small_matrix() {
        // A = [1 1 1], kernel = even-weight vectors
        let cols = vec![bits("1"), bits("1"), bits("1")];
        let ns = nullspace(1, &cols);
        assert_eq!(ns.dim(), 2);
        for r in ns.rows() {
            assert_eq!(r.count_ones() % 2, 0);
        }
        // zero matrix: whole space
        let ns = nullspace(2, &[bits("00"), bits("00")]);
        assert!(ns.is_full());
        // identity: trivial kernel
        let ns = nullspace(2, &[bits("10"), bits("01")]);
        assert_eq!(ns.dim(), 0);
    }
}
