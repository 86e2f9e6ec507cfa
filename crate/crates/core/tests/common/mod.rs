//! Helpers shared by integration tests.
#![allow(dead_code)]

/// Rank over Z/p by Gauss-Jordan elimination.
pub fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let p128 = p as i128;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |b: i64| {
        let (mut r, mut b, mut e) = (1i128, b as i128 % p128, p128 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p128;
            }
            b = b * b % p128;
            e >>= 1;
        }
        r as i64
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let s = inv(a[r][c]);
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c] as i128 * s as i128 % p128;
                for j in 0..cols {
                    a[i][j] = (a[i][j] as i128 - f * a[r][j] as i128).rem_euclid(p128) as i64;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rational rank of a small integer matrix. A nonzero minor of a 0/1 or
/// small-entry matrix of the sizes used here is far below 2^31 - 1, so it
/// cannot vanish modulo that prime.
pub fn rank_q(m: &[Vec<i64>]) -> usize {
    rank_mod(m, 2_147_483_647)
}

pub fn support_i64(s: &[Vec<u8>]) -> Vec<Vec<i64>> {
    s.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}
