//! Exact rank and row-span queries over the integers and rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::CombPolytope;

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
}

impl ExactMatrix {
    pub fn from_rationals(data: Vec<Vec<BigRational>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if let Some(bad) = data.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_ints<T: Into<BigInt> + Copy>(data: &[Vec<T>]) -> Result<Self> {
        Self::from_rationals(
            data.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Interpret a 0/1 support as an integer matrix.
    pub fn from_support(support: &[Vec<u8>]) -> Self {
        Self::from_ints(support).expect("support rows have equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i]
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn integer_entries(&self) -> Option<Vec<Vec<BigInt>>> {
        self.data
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.is_integer().then(|| x.to_integer()))
                    .collect()
            })
            .collect()
    }
}

/// Exact rank: fraction-free elimination for integer matrices, rational
/// Gaussian elimination otherwise.
pub fn rank(m: &ExactMatrix) -> usize {
    match m.integer_entries() {
        Some(ints) => bareiss_rank(ints),
        None => rational_rank(m.data.clone()),
    }
}

/// Rank of a 0/1 support.
pub fn support_rank(support: &[Vec<u8>]) -> usize {
    bareiss_rank(
        support
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Bareiss elimination. Pivots on the entry of least absolute value in the
/// current column; columns without a pivot are skipped.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let pivot = (r..m)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..n {
                let v = (&a[i][j] * &a[r][c] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn rational_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let v = &a[r][j] * &f;
                a[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

/// Coefficients `y` with `y^T M = v`, if any, found by eliminating the
/// transposed system `M^T y = v`.
pub fn row_span_solve(m: &ExactMatrix, v: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
    if v.len() != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.cols,
            found: v.len(),
        });
    }
    // augmented system [M^T | v]: cols rows, rows+1 columns
    let nr = m.cols;
    let nc = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..nr)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..nc).map(|i| m.data[i][j].clone()).collect();
            row.push(v[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nr {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..=nc {
                let t = &a[r][j] * &f;
                a[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[nc].is_zero()) {
        return Ok(None);
    }
    let mut y = vec![BigRational::zero(); nc];
    for (k, &c) in pivots.iter().enumerate() {
        y[c] = a[k][nc].clone();
    }
    Ok(Some(y))
}

pub fn row_span_contains(m: &ExactMatrix, v: &[BigRational]) -> Result<bool> {
    Ok(row_span_solve(m, v)?.is_some())
}

/// The 0/1 support, read as a matrix, has rank `dim + 1`.
pub fn is_morally_2level(p: &CombPolytope) -> bool {
    support_rank(p.support()) == p.dim() + 1
}

/// Morally 2-level and the all-ones row lies in the row span.
pub fn is_2level(p: &CombPolytope) -> bool {
    if !is_morally_2level(p) {
        return false;
    }
    let m = ExactMatrix::from_support(p.support());
    let ones = vec![BigRational::one(); m.cols()];
    row_span_contains(&m, &ones).expect("length matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{hypercube, simplex, vertex_sum};

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn square_support() -> Vec<Vec<u8>> {
        vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ]
    }

    #[test]
    fn identity_rank() {
        let id: Vec<Vec<u8>> = (0..4).map(|i| (0..4).map(|j| u8::from(i == j)).collect()).collect();
        assert_eq!(support_rank(&id), 4);
    }

    #[test]
    fn circulant_square_has_rank_three() {
        // rows 0 and 2 sum to rows 1 and 3
        assert_eq!(support_rank(&square_support()), 3);
        let m = ExactMatrix::from_support(&square_support());
        let ones = vec![q(1); 4];
        let y = row_span_solve(&m, &ones).unwrap().unwrap();
        for j in 0..4 {
            let s: BigRational = (0..4).map(|i| &y[i] * m.get(i, j)).sum();
            assert_eq!(s, q(1));
        }
    }

    #[test]
    fn rows_are_in_their_span() {
        let m = ExactMatrix::from_support(&square_support());
        for i in 0..4 {
            assert!(row_span_contains(&m, m.row(i)).unwrap());
        }
        let e = ExactMatrix::from_ints(&[vec![1i64, 0]]).unwrap();
        assert!(!row_span_contains(&e, &[q(0), q(1)]).unwrap());
        assert!(matches!(
            row_span_contains(&e, &[q(0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rational_path_matches_integer_path() {
        let ints = vec![vec![2i64, 4, 6], vec![1, 2, 3], vec![0, 1, 5]];
        let m = ExactMatrix::from_ints(&ints).unwrap();
        assert_eq!(rank(&m), 2);
        let half = BigRational::new(1.into(), 2.into());
        let scaled: Vec<Vec<BigRational>> = ints
            .iter()
            .map(|r| r.iter().map(|&x| q(x) * &half).collect())
            .collect();
        assert_eq!(rank(&ExactMatrix::from_rationals(scaled).unwrap()), 2);
    }

    #[test]
    fn ragged_input_is_rejected() {
        assert!(ExactMatrix::from_ints(&[vec![1i64, 2], vec![1]]).is_err());
    }

    #[test]
    fn bareiss_division_stays_exact_on_large_entries() {
        let a: Vec<Vec<i64>> = vec![
            vec![7, -3, 11, 2],
            vec![5, 13, -17, 19],
            vec![12, 10, -6, 21],
            vec![1, 1, 1, 1],
        ];
        // row 2 = row 0 + row 1
        assert_eq!(rank(&ExactMatrix::from_ints(&a).unwrap()), 3);
    }

    #[test]
    fn two_level_examples() {
        for d in 0..5 {
            assert!(is_2level(&simplex(d)));
        }
        let sq = hypercube(2);
        assert!(is_2level(&sq));
        let a = sq.vertices()[0].clone();
        let sum = vertex_sum(&sq, &a, &sq, &a).unwrap();
        assert!(is_morally_2level(&sum));
    }
}
