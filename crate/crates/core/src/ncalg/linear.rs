use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use super::NcError;
use crate::scalars::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // prefer a symbol-free pivot to keep fractions small
        let cand: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
        let Some(&p) = cand.iter().find(|&&i| rows[i][c].as_constant().is_some()).or(cand.first()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    if !p.is_zero() {
                        *x = x.sub(&f.mul(p));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : rows · x = 0}`, one vector per free column, each with a 1 in its
/// free column, sorted by that column.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// Homogeneous or inhomogeneous system given by its columns, one per unknown, each a
/// sparse vector indexed by `K`.
#[derive(Clone, Debug)]
pub struct LinearSystem<K: Ord + Clone + Debug> {
    columns: Vec<BTreeMap<K, Scalar>>,
    window: Option<BTreeSet<K>>,
}

impl<K: Ord + Clone + Debug> Default for LinearSystem<K> {
    fn default() -> Self {
        LinearSystem { columns: Vec::new(), window: None }
    }
}

impl<K: Ord + Clone + Debug> LinearSystem<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Restricts the admissible row keys; columns leaving the window are rejected.
    pub fn with_window(window: impl IntoIterator<Item = K>) -> Self {
        LinearSystem { columns: Vec::new(), window: Some(window.into_iter().collect()) }
    }

    pub fn push_column(&mut self, col: BTreeMap<K, Scalar>) -> Result<(), NcError> {
        if let Some(w) = &self.window {
            if let Some(k) = col.keys().find(|k| !w.contains(k)) {
                return Err(NcError::WindowOverflow(format!("{:?}", k)));
            }
        }
        self.columns.push(col.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        Ok(())
    }

    pub fn unknowns(&self) -> usize {
        self.columns.len()
    }

    fn row_keys(&self, extra: Option<&BTreeMap<K, Scalar>>) -> Vec<K> {
        let mut keys: BTreeSet<K> = self.columns.iter().flat_map(|c| c.keys().cloned()).collect();
        if let Some(e) = extra {
            keys.extend(e.keys().cloned());
        }
        keys.into_iter().collect()
    }

    fn matrix(&self, keys: &[K], rhs: Option<&BTreeMap<K, Scalar>>) -> Vec<Vec<Scalar>> {
        keys.iter()
            .map(|k| {
                let mut row: Vec<Scalar> =
                    self.columns.iter().map(|c| c.get(k).cloned().unwrap_or_else(Scalar::zero)).collect();
                if let Some(b) = rhs {
                    row.push(b.get(k).cloned().unwrap_or_else(Scalar::zero));
                }
                row
            })
            .collect()
    }

    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let keys = self.row_keys(None);
        nullspace(&self.matrix(&keys, None), self.columns.len())
    }

    /// One solution of `Σ x_j col_j = rhs`, free unknowns set to zero.
    pub fn solve(&self, rhs: &BTreeMap<K, Scalar>) -> Option<Vec<Scalar>> {
        let keys = self.row_keys(Some(rhs));
        let n = self.columns.len();
        let mut m = self.matrix(&keys, Some(rhs));
        let pivots = rref(&mut m, n + 1);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![Scalar::zero(); n];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m[r][n].clone();
        }
        Some(x)
    }
}

/// Solves `Σ x_j columns[j] = rhs`.
pub fn linear_solve<K: Ord + Clone + Debug>(
    columns: &[BTreeMap<K, Scalar>],
    rhs: &BTreeMap<K, Scalar>,
) -> Option<Vec<Scalar>> {
    let mut s = LinearSystem::new();
    for c in columns {
        s.push_column(c.clone()).expect("no window");
    }
    s.solve(rhs)
}

/// Coordinates of `target` in the span of `vectors`, if it lies there.
pub fn express_in_span<K: Ord + Clone + Debug>(
    vectors: &[BTreeMap<K, Scalar>],
    target: &BTreeMap<K, Scalar>,
) -> Option<Vec<Scalar>> {
    linear_solve(vectors, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let w = Scalar::w();
        // x + w y = 0
        let rows = vec![vec![Scalar::one(), w.clone()]];
        let ns = nullspace(&rows, 2);
        assert_eq!(ns, vec![vec![w.neg(), Scalar::one()]]);
    }

    #[test]
    fn inconsistent_system() {
        let cols = vec![BTreeMap::from([(0, Scalar::one())])];
        assert!(linear_solve(&cols, &BTreeMap::from([(1, Scalar::one())])).is_none());
        let x = linear_solve(&cols, &BTreeMap::from([(0, Scalar::w())])).unwrap();
        assert_eq!(x, vec![Scalar::w()]);
    }

    #[test]
    fn window_overflow() {
        let mut s = LinearSystem::with_window([0, 1]);
        assert!(s.push_column(BTreeMap::from([(0, Scalar::one())])).is_ok());
        assert!(matches!(s.push_column(BTreeMap::from([(5, Scalar::one())])), Err(NcError::WindowOverflow(_))));
    }
}
