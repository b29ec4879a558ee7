//! Exact rank computations and unimodular inversion for small integer matrices.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Runs in `i128`; if an intermediate value overflows, the elimination is
/// restarted with arbitrary-precision integers.
pub fn rank_integer(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    match bareiss_i128(m) {
        Some(r) => r,
        None => bareiss_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = a[rank][col].checked_mul(a[r][c])?.checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::from(0);
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank over the field `Z/p`; `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = i128::from(p);
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x).rem_euclid(p)).collect()).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = inverse_mod(a[rank][col], p);
        for r in rank + 1..nrows {
            let f = a[r][col] * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(p);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn inverse_mod(x: i128, p: i128) -> i128 {
    // Fermat: x^(p-2)
    let (mut base, mut exp, mut acc) = (x.rem_euclid(p), p - 2, 1i128);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Inverse of a square integer matrix with determinant `±1`, or `None` if
/// the matrix is not unimodular.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<i128> = r.iter().map(|&x| i128::from(x)).collect();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    for col in 0..n {
        // Euclid on the column below the diagonal until one nonzero entry is left
        loop {
            let nonzero: Vec<usize> = (col..n).filter(|&r| a[r][col] != 0).collect();
            let &best = nonzero.iter().min_by_key(|&&r| a[r][col].abs())?;
            a.swap(col, best);
            let mut done = true;
            for r in col + 1..n {
                if a[r][col] != 0 {
                    let q = a[r][col] / a[col][col];
                    for c in col..2 * n {
                        a[r][c] = a[r][c].checked_sub(q.checked_mul(a[col][c])?)?;
                    }
                    done &= a[r][col] == 0;
                }
            }
            if done {
                break;
            }
        }
        match a[col][col] {
            1 => {}
            -1 => a[col].iter_mut().for_each(|x| *x = -*x),
            _ => return None,
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let q = a[r][col];
                for c in 0..2 * n {
                    a[r][c] = a[r][c].checked_sub(q.checked_mul(a[col][c])?)?;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].iter().map(|&x| i64::try_from(x).ok()).collect()).collect()
}
