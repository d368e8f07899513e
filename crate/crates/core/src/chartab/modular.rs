//! Dense linear algebra over `F_p` for primes below `2^32`.

use crate::arith::inv_mod;

pub(crate) type Matrix = Vec<Vec<u64>>;

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Zero rows are dropped.
pub(crate) fn rref(rows: &mut Matrix, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, f * y % p, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ x : A x = 0 }` for a square matrix `A`, by forward
/// elimination and back substitution. Rows with a zero entry in the current
/// column are skipped, so Hessenberg input costs `O(n²)` per unit of nullity.
pub(crate) fn nullspace(a: &Matrix, p: u64) -> Matrix {
    let n = a.len();
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == n {
            break;
        }
        let Some(pr) = (r..n).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                let y = prow[j];
                if y != 0 {
                    row[j] = sub_mod(row[j], f * y % p, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in m[..r].iter().zip(&pivots).rev() {
                let s = (pc + 1..n).fold(0u64, |acc, j| {
                    if row[j] == 0 || v[j] == 0 {
                        acc
                    } else {
                        (acc + row[j] * v[j]) % p
                    }
                });
                v[pc] = (p - s) % p;
            }
            v
        })
        .collect()
}

/// Upper Hessenberg form `H = Q⁻¹ A Q` by stabilized elementary
/// similarities; `Q` is accumulated only when asked for.
pub(crate) fn hessenberg(a: &Matrix, p: u64, track: bool) -> (Matrix, Option<Matrix>) {
    let n = a.len();
    let mut h = a.clone();
    let mut q: Option<Matrix> = track.then(|| {
        (0..n)
            .map(|i| {
                let mut row = vec![0u64; n];
                row[i] = 1;
                row
            })
            .collect()
    });
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
            if let Some(q) = q.as_mut() {
                for row in q.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
        }
        let t_inv = inv_mod(h[j + 1][j], p);
        for i in j + 2..n {
            let u = h[i][j] * t_inv % p;
            if u == 0 {
                continue;
            }
            // row_i -= u * row_{j+1}
            let (upper, lower) = h.split_at_mut(i);
            for (x, &y) in lower[0].iter_mut().zip(&upper[j + 1]) {
                if y != 0 {
                    *x = sub_mod(*x, u * y % p, p);
                }
            }
            // col_{j+1} += u * col_i, on H and on Q
            for row in h.iter_mut() {
                let y = row[i];
                if y != 0 {
                    row[j + 1] = (row[j + 1] + u * y) % p;
                }
            }
            if let Some(q) = q.as_mut() {
                for row in q.iter_mut() {
                    let y = row[i];
                    if y != 0 {
                        row[j + 1] = (row[j + 1] + u * y) % p;
                    }
                }
            }
        }
    }
    (h, q)
}

/// Characteristic polynomial `det(xI - A)`, low degree first.
#[cfg(test)]
pub(crate) fn charpoly(a: &Matrix, p: u64) -> Vec<u64> {
    charpoly_hessenberg(&hessenberg(a, p, false).0, p)
}

/// Characteristic polynomial of an upper Hessenberg matrix.
pub(crate) fn charpoly_hessenberg(h: &Matrix, p: u64) -> Vec<u64> {
    let n = h.len();
    // polys[m] = char poly of the leading m x m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h[m][m]) * polys[m]
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = sub_mod(next[k], c * h[m][m] % p, p);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % p;
            if prod == 0 {
                break;
            }
            let coef = prod * h[i][m] % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub_mod(next[k], coef * c % p, p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// All roots in `F_p` of a polynomial, by exhaustive evaluation.
pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for x in 0..p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = (acc * x + c) % p;
        }
        if acc == 0 {
            out.push(x);
            if out.len() + 1 >= poly.len() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 101;

    fn det_brute(a: &Matrix, p: u64) -> u64 {
        // Laplace expansion, fine for tiny matrices
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0u64;
        for c in 0..n {
            let minor: Matrix = a[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = a[0][c] * det_brute(&minor, p) % p;
            acc = if c % 2 == 0 {
                (acc + term) % p
            } else {
                sub_mod(acc, term, p)
            };
        }
        acc
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        let a: Matrix = vec![
            vec![0, 3, 0, 7],
            vec![5, 2, 9, 1],
            vec![0, 0, 4, 4],
            vec![8, 6, 1, 0],
        ];
        let cp = charpoly(&a, P);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in [0u64, 1, 2, 17, 50] {
            let m: Matrix = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            sub_mod(d, a[i][j], P)
                        })
                        .collect()
                })
                .collect();
            let val = cp.iter().rev().fold(0, |acc, &c| (acc * x + c) % P);
            assert_eq!(val, det_brute(&m, P), "x = {x}");
        }
    }

    #[test]
    fn nullspace_of_singular_matrix() {
        let a: Matrix = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let ns = nullspace(&a, P);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(0, |acc, (&x, &y)| (acc + x * y) % P);
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn hessenberg_similarity_maps_eigenvectors() {
        let a: Matrix = vec![
            vec![2, 0, 0, 1],
            vec![0, 3, 1, 0],
            vec![0, 0, 3, 0],
            vec![0, 0, 0, 2],
        ];
        let (h, q) = hessenberg(&a, P, true);
        let q = q.unwrap();
        assert_eq!(charpoly_hessenberg(&h, P), charpoly(&a, P));
        for lambda in roots(&charpoly(&a, P), P) {
            let mut shifted = h.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = sub_mod(row[i], lambda, P);
            }
            for x in nullspace(&shifted, P) {
                let v: Vec<u64> = (0..4)
                    .map(|i| (0..4).fold(0, |acc, j| (acc + q[i][j] * x[j]) % P))
                    .collect();
                assert!(v.iter().any(|&c| c != 0));
                for i in 0..4 {
                    let av = (0..4).fold(0, |acc, j| (acc + a[i][j] * v[j]) % P);
                    assert_eq!(av, lambda * v[i] % P);
                }
            }
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        // (x - 2)(x - 5) = x^2 - 7x + 10
        let poly = vec![10, P - 7, 1];
        assert_eq!(roots(&poly, P), vec![2, 5]);
    }
}
