use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the rationals, by fraction-free elimination.
pub fn rational_rank(matrix: &[Vec<BigInt>]) -> usize {
    let Some(ncols) = matrix.first().map(Vec::len) else {
        return 0;
    };
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for c in col + 1..ncols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Rank of a small `i64` matrix; falls back to arbitrary precision on overflow.
pub fn small_rank(rows: &[Vec<i64>]) -> usize {
    match rank_i64(rows) {
        Some(r) => r,
        None => rational_rank(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect::<Vec<_>>(),
        ),
    }
}

fn rank_i64(rows: &[Vec<i64>]) -> Option<usize> {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return Some(0);
    };
    let mut a = rows.to_vec();
    let mut rank = 0;
    let mut prev: i64 = 1;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for c in col + 1..ncols {
                let num = a[rank][col]
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    Some(rank)
}

/// Determinant of a square `i64` matrix given row-major in `a` (clobbered).
/// Returns `None` on intermediate overflow.
pub fn det_i64(a: &mut [i64], n: usize) -> Option<i64> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i64 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let num = pivot
                    .checked_mul(a[i * n + j])?
                    .checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = num / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    let d = a[n * n - 1];
    Some(if negate { -d } else { d })
}

/// Whether a square `i64` matrix (row-major) is nonsingular.
pub fn is_nonsingular_i64(a: &[i64], n: usize) -> bool {
    let mut work = a.to_vec();
    match det_i64(&mut work, n) {
        Some(d) => d != 0,
        None => {
            let rows: Vec<Vec<i64>> = a.chunks(n).map(<[i64]>::to_vec).collect();
            small_rank(&rows) == n
        }
    }
}
