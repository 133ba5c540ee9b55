//! Smith normal form over the integers, with transformation matrices.
//!
//! Used for cyclic decompositions of abelian kernels and for kernel sizes
//! of alternating forms over Z/p^k (where only p-adic valuations of the
//! invariant factors matter).

/// Result of `smith_normal_form`: diag is the diagonal of D = U * A * V
/// with U, V unimodular and d_i | d_{i+1}.
#[derive(Debug, Clone)]
pub struct Snf {
    pub diag: Vec<i128>,
    pub left: Vec<Vec<i128>>,
    pub right: Vec<Vec<i128>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn swap_rows(a: &mut [Vec<i128>], i: usize, j: usize) {
    a.swap(i, j);
}

fn swap_cols(a: &mut [Vec<i128>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_row(a: &mut [Vec<i128>], src: usize, dst: usize, f: i128) {
    let srow = a[src].clone();
    for (d, s) in a[dst].iter_mut().zip(srow.iter()) {
        *d += f * s;
    }
}

fn add_col(a: &mut [Vec<i128>], src: usize, dst: usize, f: i128) {
    for row in a.iter_mut() {
        let v = row[src];
        row[dst] += f * v;
    }
}

fn negate_row(a: &mut [Vec<i128>], i: usize) {
    for v in a[i].iter_mut() {
        *v = -*v;
    }
}

/// Classical elimination; matrix entries stay well within i128 for the
/// desk-scale inputs used here.
pub fn smith_normal_form(mat: &[Vec<i128>]) -> Snf {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<i128>> = mat.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0usize;
    while t < rows.min(cols) {
        // find a nonzero pivot of minimal absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 {
                    match pivot {
                        Some((pi, pj)) if a[pi][pj].abs() <= a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        swap_rows(&mut a, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t] != 0 {
                let f = -(a[i][t] / a[t][t]);
                add_row(&mut a, t, i, f);
                add_row(&mut u, t, i, f);
                if a[i][t] != 0 {
                    clean = false;
                }
            }
        }
        for j in t + 1..cols {
            if a[t][j] != 0 {
                let f = -(a[t][j] / a[t][t]);
                add_col(&mut a, t, j, f);
                add_col(&mut v, t, j, f);
                if a[t][j] != 0 {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // smaller remainders appeared; repeat with same t
        }
        // divisibility fix-up: pivot must divide the rest of the block
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if a[i][j] % a[t][t] != 0 {
                    add_row(&mut a, i, t, 1);
                    add_row(&mut u, i, t, 1);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if a[t][t] < 0 {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }

    let diag = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    Snf {
        diag,
        left: u,
        right: v,
        rows,
        cols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let n = a.len();
        let m = b[0].len();
        let k = b.len();
        let mut c = vec![vec![0i128; m]; n];
        for i in 0..n {
            for j in 0..m {
                for t in 0..k {
                    c[i][j] += a[i][t] * b[t][j];
                }
            }
        }
        c
    }

    fn check(mat: Vec<Vec<i128>>) {
        let s = smith_normal_form(&mat);
        let d = matmul(&matmul(&s.left, &mat), &s.right);
        for i in 0..s.rows {
            for j in 0..s.cols {
                let expect = if i == j && i < s.diag.len() { s.diag[i] } else { 0 };
                assert_eq!(d[i][j], expect, "at ({i},{j})");
            }
        }
        for w in s.diag.windows(2) {
            if w[1] != 0 {
                assert!(w[0] != 0 && w[1] % w[0] == 0, "divisibility {:?}", s.diag);
            }
        }
    }

    #[test]
    fn snf_small_matrices() {
        check(vec![vec![2, 4], vec![6, 8]]);
        check(vec![vec![0, 1], vec![-1, 0]]);
        check(vec![vec![3, 0, 0], vec![0, 9, 0]]);
        check(vec![vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]);
        check(vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn snf_of_relation_matrix_gives_invariants() {
        // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
        let s = smith_normal_form(&[vec![2, 0], vec![0, 4]]);
        assert_eq!(s.diag, vec![2, 4]);
    }
}
