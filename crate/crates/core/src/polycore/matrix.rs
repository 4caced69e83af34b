use itertools::Itertools;

use super::Polynomial;
use crate::error::{Error, Result};

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix::from_fn(rows, cols, |_, _| Polynomial::zero())
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch(self.rows, other.rows));
        }
        Ok(PolyMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|t| self.get(i, t) * other.get(t, j))
                .sum()
        }))
    }

    /// Block-diagonal matrix `[a 0; 0 b]`.
    pub fn block_diag(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
            if i < a.rows && j < a.cols {
                a.get(i, j).clone()
            } else if i >= a.rows && j >= a.cols {
                b.get(i - a.rows, j - a.cols).clone()
            } else {
                Polynomial::zero()
            }
        })
    }

    fn check_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Fraction-free (Bareiss) elimination. Every intermediate division is exact;
    /// should one ever fail, the cofactor expansion is used instead.
    pub fn determinant(&self) -> Result<Polynomial> {
        let n = self.check_square()?;
        Ok(self.bareiss(n).unwrap_or_else(|| self.cofactor(n)))
    }

    /// Laplace expansion along the first row.
    pub fn determinant_cofactor(&self) -> Result<Polynomial> {
        let n = self.check_square()?;
        Ok(self.cofactor(n))
    }

    fn bareiss(&self, n: usize) -> Option<Polynomial> {
        if n == 0 {
            return Some(Polynomial::one());
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // prefer the sparsest available pivot
                let swap = (k + 1..n)
                    .filter(|&i| !a[i][k].is_zero())
                    .min_by_key(|&i| a[i][k].len());
                match swap {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Some(Polynomial::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Some(if negate { -det } else { det })
    }

    fn cofactor(&self, n: usize) -> Polynomial {
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (0..n).collect();
        cofactor_rec(self, &rows, &cols)
    }
}

fn cofactor_rec(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    match rows.len() {
        0 => Polynomial::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = Polynomial::zero();
            for (t, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let minor = entry * &cofactor_rec(m, &rows[1..], &rest);
                if t % 2 == 0 {
                    acc += &minor;
                } else {
                    acc -= &minor;
                }
            }
            acc
        }
    }
}

fn complement(k: usize, subset: &[usize]) -> Vec<usize> {
    (0..k).filter(|i| !subset.contains(i)).collect()
}

/// Every summand `(-1)^{sum a - sum b} det(A[a;b]) det(B[a';b'])` of the
/// expansion of `det(A + B)` over pairs of equal-size row/column subsets `a`, `b`
/// (primes denote complements). There are `sum_i C(k,i)^2 = C(2k,k)` of them.
pub fn det_sum_summands(a: &PolyMatrix, b: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let k = a.check_square()?;
    let kb = b.check_square()?;
    if k != kb {
        return Err(Error::SizeMismatch(k, kb));
    }
    let mut out = Vec::new();
    for i in 0..=k {
        for rows in (0..k).combinations(i) {
            let rows_c = complement(k, &rows);
            for cols in (0..k).combinations(i) {
                let cols_c = complement(k, &cols);
                let da = a.submatrix(&rows, &cols).determinant()?;
                let term = if da.is_zero() {
                    Polynomial::zero()
                } else {
                    &da * &b.submatrix(&rows_c, &cols_c).determinant()?
                };
                let parity: usize = rows.iter().sum::<usize>() + cols.iter().sum::<usize>();
                out.push(if parity % 2 == 0 { term } else { -term });
            }
        }
    }
    Ok(out)
}

pub fn det_sum_expansion(a: &PolyMatrix, b: &PolyMatrix) -> Result<Polynomial> {
    Ok(det_sum_summands(a, b)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::VariableId;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn yp(i: u32) -> Polynomial {
        Polynomial::var(VariableId::yp(i))
    }
    fn c(v: i64) -> Polynomial {
        Polynomial::integer(v)
    }

    #[test]
    fn two_by_two_determinants() {
        let m = PolyMatrix::from_rows(vec![vec![x(1), x(2)], vec![c(1), x(1)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), x(1) * x(1) - x(2));

        let m = PolyMatrix::from_rows(vec![
            vec![yp(1) - x(1), -x(2)],
            vec![c(1), yp(1)],
        ])
        .unwrap();
        let expected = yp(1) * yp(1) - x(1) * yp(1) + x(2);
        assert_eq!(m.determinant().unwrap(), expected);
        assert_eq!(m.determinant_cofactor().unwrap(), expected);
    }

    #[test]
    fn identity_and_zero_pivot() {
        assert_eq!(PolyMatrix::identity(3).determinant().unwrap(), c(1));
        // first pivot is zero, forcing a row swap
        let m = PolyMatrix::from_rows(vec![
            vec![c(0), x(1), c(2)],
            vec![x(2), c(0), c(1)],
            vec![c(1), x(1), c(0)],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), m.determinant_cofactor().unwrap());
        assert_eq!(PolyMatrix::zero(0, 0).determinant().unwrap(), c(1));
    }

    #[test]
    fn non_square_is_an_error() {
        let m = PolyMatrix::zero(2, 3);
        assert_eq!(
            m.determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn det_sum_small_cases() {
        let p = x(1) + c(2);
        let q = yp(1);
        let a = PolyMatrix::from_rows(vec![vec![p.clone()]]).unwrap();
        let b = PolyMatrix::from_rows(vec![vec![q.clone()]]).unwrap();
        assert_eq!(det_sum_expansion(&a, &b).unwrap(), &p + &q);

        let b = PolyMatrix::from_rows(vec![vec![x(1), c(3)], vec![yp(1), x(2)]]).unwrap();
        let z = PolyMatrix::zero(2, 2);
        assert_eq!(det_sum_expansion(&z, &b).unwrap(), b.determinant().unwrap());
        assert_eq!(det_sum_summands(&z, &b).unwrap().len(), 6);
        assert!(det_sum_expansion(&z, &PolyMatrix::zero(3, 3)).is_err());
    }
}
