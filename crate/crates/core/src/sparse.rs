//! Sparse matrices over GF(p) and exact rank by left-looking elimination.

use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::field::{Field, PrimeField};

/// Column-major sparse matrix over GF(p). Stored entries are nonzero.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, u64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Adds to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, val: u64, fp: &PrimeField) {
        debug_assert!(row < self.rows && col < self.cols.len());
        let column = &mut self.cols[col];
        match column.iter_mut().find(|(r, _)| *r as usize == row) {
            Some((_, v)) => *v = fp.add(v, &val),
            None => column.push((row as u32, val % fp.modulus())),
        }
    }

    pub fn column(&self, col: usize) -> &[(u32, u64)] {
        &self.cols[col]
    }

    fn normalize(&mut self, fp: &PrimeField) {
        for col in &mut self.cols {
            col.retain(|(_, v)| !fp.is_zero(v));
            col.sort_unstable_by_key(|(r, _)| *r);
        }
    }

    /// Rank over GF(p).
    ///
    /// Left-looking elimination: each column is reduced against the pivot
    /// columns in creation order (a pivot column never touches earlier pivot
    /// rows, so one increasing pass suffices), then becomes a pivot itself if
    /// anything is left. Columns are processed sparsest first and pivot rows
    /// are chosen in rarer rows first, which keeps fill low on the
    /// near-block-diagonal matrices this crate produces.
    pub fn rank(&self, fp: &PrimeField) -> usize {
        let mut work = self.clone();
        work.normalize(fp);

        let mut row_count: Vec<u32> = vec![0; self.rows];
        for col in &work.cols {
            for &(r, _) in col {
                row_count[r as usize] += 1;
            }
        }

        let mut col_order: Vec<usize> = (0..work.cols.len()).collect();
        col_order.sort_by_key(|&c| (work.cols[c].len(), c));

        // pivot columns in creation order, each normalized to pivot value 1
        let mut pivot_cols: Vec<Vec<(u32, u64)>> = Vec::new();
        let mut pivot_rows: Vec<u32> = Vec::new();
        let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();

        for c in col_order {
            let col = std::mem::take(&mut work.cols[c]);
            if col.is_empty() {
                continue;
            }
            let mut entries: HashMap<u32, u64> = col.into_iter().collect();
            // pivots touched by this column, processed in creation order
            let mut heap: BinaryHeap<std::cmp::Reverse<usize>> = BinaryHeap::new();
            let mut queued: HashSet<usize> = HashSet::new();
            for r in entries.keys() {
                if let Some(&k) = pivot_of_row.get(r) {
                    if queued.insert(k) {
                        heap.push(std::cmp::Reverse(k));
                    }
                }
            }
            while let Some(std::cmp::Reverse(k)) = heap.pop() {
                let prow = pivot_rows[k];
                let Some(&coef) = entries.get(&prow) else {
                    continue;
                };
                if fp.is_zero(&coef) {
                    entries.remove(&prow);
                    continue;
                }
                for &(r, v) in &pivot_cols[k] {
                    let delta = fp.mul(&coef, &v);
                    let cell = entries.entry(r).or_insert(0);
                    *cell = fp.sub(cell, &delta);
                    if fp.is_zero(cell) {
                        entries.remove(&r);
                    } else if let Some(&k2) = pivot_of_row.get(&r) {
                        // a pivot column only holds rows of later pivots
                        debug_assert!(k2 > k);
                        if queued.insert(k2) {
                            heap.push(std::cmp::Reverse(k2));
                        }
                    }
                }
                debug_assert!(!entries.contains_key(&prow));
            }
            if entries.is_empty() {
                continue;
            }
            // new pivot: prefer a row that appears in few columns
            let (&prow, _) = entries
                .iter()
                .min_by_key(|(r, _)| (row_count[**r as usize], **r))
                .unwrap();
            let pval = entries[&prow];
            let inv = fp.inv(&pval);
            let mut stored: Vec<(u32, u64)> = entries
                .into_iter()
                .map(|(r, v)| (r, fp.mul(&v, &inv)))
                .collect();
            stored.sort_unstable_by_key(|(r, _)| *r);
            pivot_of_row.insert(prow, pivot_cols.len());
            pivot_rows.push(prow);
            pivot_cols.push(stored);
        }
        pivot_cols.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn dense_rank(rows: &[Vec<i64>], p: u64) -> usize {
        let fp = PrimeField::new(p).unwrap();
        let mut m: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| fp.from_i64(v)).collect())
            .collect();
        let (nr, nc) = (m.len(), m.first().map_or(0, |r| r.len()));
        let mut rank = 0;
        for col in 0..nc {
            let Some(pivot) = (rank..nr).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = fp.inv(&m[rank][col]);
            for c in col..nc {
                m[rank][c] = fp.mul(&m[rank][c], &inv);
            }
            for r in 0..nr {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in col..nc {
                        let d = fp.mul(&f, &m[rank][c]);
                        m[r][c] = fp.sub(&m[r][c], &d);
                    }
                }
            }
            rank += 1;
            if rank == nr {
                break;
            }
        }
        rank
    }

    #[test]
    fn small_ranks_match_dense() {
        let rows = vec![
            vec![1, 2, 3, 0],
            vec![2, 4, 6, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 3, -1],
        ];
        let expected = dense_rank(&rows, 32003);
        let mut m = SparseMatrix::new(4, 4);
        let f = fp();
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.add_entry(r, c, f.from_i64(v), &f);
                }
            }
        }
        assert_eq!(m.rank(&f), expected);
    }

    #[test]
    fn random_ranks_match_dense() {
        // lightweight deterministic pseudo-random matrices
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let f = fp();
        for trial in 0..30 {
            let rows = 3 + (next() % 8) as usize;
            let cols = 3 + (next() % 8) as usize;
            let mut dense = vec![vec![0i64; cols]; rows];
            let mut sparse = SparseMatrix::new(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if next() % 3 == 0 {
                        let v = (next() % 5) as i64 - 2;
                        if v != 0 {
                            dense[r][c] = v;
                            sparse.add_entry(r, c, f.from_i64(v), &f);
                        }
                    }
                }
            }
            assert_eq!(
                sparse.rank(&f),
                dense_rank(&dense, 32003),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn zero_and_duplicate_entries() {
        let f = fp();
        let mut m = SparseMatrix::new(2, 2);
        m.add_entry(0, 0, 1, &f);
        m.add_entry(0, 0, f.neg(&1), &f); // cancels
        m.add_entry(1, 1, 5, &f);
        assert_eq!(m.rank(&f), 1);
    }
}
