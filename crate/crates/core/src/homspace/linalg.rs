//! Exact rank and kernel computation for small integer matrices: over the
//! rationals by fraction-free integer row reduction, and over a prime
//! field by modular elimination. The systems solved here have entries in
//! {-1, 0, 1}, so coefficient growth is mild; rows are gcd-reduced after
//! every combination to keep it that way.

pub(crate) struct Kernel {
    pub rank: usize,
    /// Basis of the kernel as integer vectors (reduced mod p in the prime
    /// field case).
    pub basis: Vec<Vec<i64>>,
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn reduce_row(row: &mut [i128]) {
    let mut g = 0i128;
    for &v in row.iter() {
        g = gcd128(g, v);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

/// Row-echelon elimination in place; returns the rank. Pivots are chosen
/// with minimal absolute value to limit growth.
fn echelon(m: &mut [Vec<i128>], width: usize) -> usize {
    let rows = m.len();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == rows {
            break;
        }
        let candidate = (pivot_row..rows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(choice) = candidate else { continue };
        m.swap(pivot_row, choice);
        let pivot = m[pivot_row][col];
        for r in pivot_row + 1..rows {
            let v = m[r][col];
            if v == 0 {
                continue;
            }
            let g = gcd128(v, pivot);
            let (a, b) = (pivot / g, v / g);
            for c in col..m[r].len() {
                m[r][c] = a
                    .checked_mul(m[r][c])
                    .and_then(|x| {
                        b.checked_mul(m[pivot_row][c])
                            .and_then(|y| x.checked_sub(y))
                    })
                    .expect("coefficient overflow in exact elimination");
            }
            reduce_row(&mut m[r]);
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Rank over the rationals.
pub(crate) fn rank_int(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    echelon(&mut m, width)
}

/// Rank and kernel basis of a `rows x cols` system over the rationals.
///
/// Works on the transpose augmented by an identity block: row operations
/// preserve the invariant `left = A . right`, so the rows whose left part
/// vanishes carry a kernel basis on the right.
pub(crate) fn kernel_int(rows: &[Vec<i64>], cols: usize) -> Kernel {
    let r = rows.len();
    let mut m: Vec<Vec<i128>> = (0..cols)
        .map(|k| {
            let mut row: Vec<i128> = Vec::with_capacity(r + cols);
            row.extend(rows.iter().map(|a| a[k] as i128));
            row.extend((0..cols).map(|j| i128::from(j == k)));
            row
        })
        .collect();
    let rank = echelon(&mut m, r);
    let basis = m[rank..]
        .iter()
        .map(|row| {
            debug_assert!(row[..r].iter().all(|&v| v == 0));
            row[r..]
                .iter()
                .map(|&v| i64::try_from(v).expect("kernel entry fits in i64"))
                .collect()
        })
        .collect();
    Kernel { rank, basis }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn to_mod(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn echelon_mod(m: &mut [Vec<u64>], width: usize, p: u64) -> usize {
    let rows = m.len();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == rows {
            break;
        }
        let Some(choice) = (pivot_row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pivot_row, choice);
        let inv = inv_mod(m[pivot_row][col], p);
        for r in pivot_row + 1..rows {
            let v = m[r][col];
            if v == 0 {
                continue;
            }
            let factor = v * inv % p;
            for c in col..m[r].len() {
                let sub = factor * m[pivot_row][c] % p;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Rank over the prime field F_p.
pub(crate) fn rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| to_mod(v, p)).collect())
        .collect();
    echelon_mod(&mut m, width, p)
}

/// Rank and kernel basis over F_p, mirroring [`kernel_int`].
pub(crate) fn kernel_mod(rows: &[Vec<i64>], cols: usize, p: u64) -> Kernel {
    let r = rows.len();
    let mut m: Vec<Vec<u64>> = (0..cols)
        .map(|k| {
            let mut row: Vec<u64> = Vec::with_capacity(r + cols);
            row.extend(rows.iter().map(|a| to_mod(a[k], p)));
            row.extend((0..cols).map(|j| u64::from(j == k)));
            row
        })
        .collect();
    let rank = echelon_mod(&mut m, r, p);
    let basis = m[rank..]
        .iter()
        .map(|row| {
            debug_assert!(row[..r].iter().all(|&v| v == 0));
            row[r..].iter().map(|&v| v as i64).collect()
        })
        .collect();
    Kernel { rank, basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 32003;

    fn apply(rows: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
        rows.iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let rows = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let k = kernel_int(&rows, 3);
        assert_eq!(k.rank, 3);
        assert!(k.basis.is_empty());
        assert_eq!(rank_int(&rows), 3);
        assert_eq!(rank_mod(&rows, P), 3);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let rows = vec![vec![0, 0], vec![0, 0]];
        let k = kernel_int(&rows, 2);
        assert_eq!(k.rank, 0);
        assert_eq!(k.basis.len(), 2);
        // no constraints at all: the kernel is the whole space
        let k = kernel_int(&[], 3);
        assert_eq!(k.rank, 0);
        assert_eq!(k.basis.len(), 3);
        assert_eq!(rank_int(&[]), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![vec![1, -1, 0, 2], vec![0, 1, 1, 1], vec![1, 0, 1, 3]];
        let k = kernel_int(&rows, 4);
        assert_eq!(k.rank + k.basis.len(), 4);
        for v in &k.basis {
            assert!(
                apply(&rows, v).iter().all(|&x| x == 0),
                "A v != 0 for {v:?}"
            );
        }
        // third row is the sum of the first two, so the rank drops
        assert_eq!(k.rank, 2);
        let km = kernel_mod(&rows, 4, P);
        assert_eq!(km.rank, 2);
        for v in &km.basis {
            assert!(apply(&rows, v).iter().all(|&x| x % P as i64 == 0));
        }
    }

    #[test]
    fn modular_rank_matches_rational_rank_on_small_matrices() {
        // entries in {-1,0,1} as in the intertwiner systems
        let rows = vec![
            vec![1, 0, -1, 0, 1],
            vec![0, 1, 0, -1, 0],
            vec![1, 1, -1, -1, 1],
            vec![0, 0, 1, 0, -1],
        ];
        assert_eq!(rank_int(&rows), rank_mod(&rows, P));
    }
}
