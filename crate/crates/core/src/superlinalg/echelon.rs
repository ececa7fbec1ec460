//! Dense row reduction over an exact field.

use super::scalar::{Field, Scalar};

pub type Rows = Vec<Vec<Scalar>>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Rows, ncols: usize) -> (Rows, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn nullspace(rows: Rows, ncols: usize, field: Field) -> Rows {
    let (reduced, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![field.zero(); ncols];
        x[free] = field.one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = -&row[free];
        }
        basis.push(x);
    }
    basis
}

pub fn rank(rows: Rows, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &[Vec<Scalar>], field: Field) -> Option<Rows> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let augmented: Rows = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(reduced.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Every subspace of `F_p^dim`, as reduced echelon bases, in a fixed order:
/// by rank, then pivot set, then free entries counted in base `p`.
pub fn all_echelon_bases(dim: usize, field: Field) -> Vec<Rows> {
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => panic!("subspace enumeration needs a finite field"),
    };
    let mut out = Vec::new();
    for rank in 0..=dim {
        for pivots in combinations(dim, rank) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..dim)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let count = (p as usize).pow(slots.len() as u32);
            for mut code in 0..count {
                let mut rows = vec![vec![field.zero(); dim]; rank];
                for (r, &pc) in pivots.iter().enumerate() {
                    rows[r][pc] = field.one();
                }
                for &(r, c) in &slots {
                    rows[r][c] = field.from_i64((code % p as usize) as i64);
                    code /= p as usize;
                }
                out.push(rows);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: Field, rows: &[&[i64]]) -> Rows {
        rows.iter()
            .map(|r| r.iter().map(|x| f.from_i64(*x)).collect())
            .collect()
    }

    #[test]
    fn rref_basic() {
        let q = Field::Rational;
        let (r, p) = rref(ints(q, &[&[2, 4], &[1, 2]]), 2);
        assert_eq!(p, vec![0]);
        assert_eq!(r, ints(q, &[&[1, 2]]));
    }

    #[test]
    fn nullspace_and_inverse() {
        let q = Field::Rational;
        let ns = nullspace(ints(q, &[&[1, 1, 0]]), 3, q);
        assert_eq!(ns.len(), 2);
        let m = ints(q, &[&[1, 2], &[3, 4]]);
        let inv = inverse(&m, q).unwrap();
        assert_eq!(inv[0][0], q.from_i64(-2));
        assert_eq!(inv[1][1], q.fraction(-1, 2).unwrap());
        assert!(inverse(&ints(q, &[&[1, 2], &[2, 4]]), q).is_none());
    }

    #[test]
    fn counts_subspaces_gaussian_binomials() {
        // number of subspaces of F_3^3 = 1 + 13 + 13 + 1, of F_5^2 = 1 + 6 + 1
        let f3 = Field::prime(3).unwrap();
        assert_eq!(all_echelon_bases(3, f3).len(), 28);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(all_echelon_bases(2, f5).len(), 8);
        assert_eq!(all_echelon_bases(0, f5).len(), 1);
    }
}
