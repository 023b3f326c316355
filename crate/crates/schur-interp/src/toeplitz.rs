use crate::error::{Error, Result};
use crate::C64;

/// Lower triangular Toeplitz matrix, stored as its first column. Entry
/// (i, j) is `column[i - j]` for i >= j and zero above the diagonal, so
/// `column[0]` is the diagonal value and `column[d]` fills the d-th
/// subdiagonal. Dimension zero (empty column) is legal and shows up for
/// degenerate zero-length systems.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerToeplitz {
    column: Vec<C64>,
}

impl LowerToeplitz {
    pub fn new(column: Vec<C64>) -> Self {
        LowerToeplitz { column }
    }

    pub fn identity(dim: usize) -> Self {
        let mut column = vec![C64::new(0.0, 0.0); dim];
        if dim > 0 {
            column[0] = C64::new(1.0, 0.0);
        }
        LowerToeplitz { column }
    }

    pub fn dim(&self) -> usize {
        self.column.len()
    }

    pub fn column(&self) -> &[C64] {
        &self.column
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        if i >= j && i < self.dim() {
            self.column[i - j]
        } else {
            C64::new(0.0, 0.0)
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "Toeplitz dim {} vs vector len {}",
                self.dim(),
                v.len()
            )));
        }
        Ok((0..self.dim())
            .map(|i| (0..=i).map(|d| self.column[d] * v[i - d]).sum())
            .collect())
    }

    /// Solves T x = v by forward substitution. O(m^2), no pivoting needed:
    /// the matrix is triangular, so it is invertible exactly when the
    /// diagonal entry is nonzero.
    pub fn solve(&self, v: &[C64], zero_tol: f64) -> Result<Vec<C64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "Toeplitz dim {} vs vector len {}",
                self.dim(),
                v.len()
            )));
        }
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        let t0 = self.column[0];
        if t0.norm() <= zero_tol {
            return Err(Error::SingularDiagonal { modulus: t0.norm() });
        }
        let mut x = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let mut acc = v[i];
            for d in 1..=i {
                acc -= self.column[d] * x[i - d];
            }
            x.push(acc / t0);
        }
        Ok(x)
    }

    /// Product of two lower triangular Toeplitz matrices of equal dimension;
    /// the class is closed under multiplication and the product's column is
    /// the truncated convolution of the factors' columns.
    pub fn mul(&self, other: &LowerToeplitz) -> Result<LowerToeplitz> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "Toeplitz dims {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        let column = (0..self.dim())
            .map(|d| (0..=d).map(|i| self.column[i] * other.column[d - i]).sum())
            .collect();
        Ok(LowerToeplitz { column })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn reals(xs: &[f64]) -> Vec<C64> {
        xs.iter().map(|&x| c(x, 0.0)).collect()
    }

    #[test]
    fn entries_follow_column_layout() {
        let t = LowerToeplitz::new(reals(&[1.0, 2.0, 3.0]));
        let dense: Vec<Vec<C64>> =
            (0..3).map(|i| (0..3).map(|j| t.entry(i, j)).collect()).collect();
        assert_eq!(dense[0], reals(&[1.0, 0.0, 0.0]));
        assert_eq!(dense[1], reals(&[2.0, 1.0, 0.0]));
        assert_eq!(dense[2], reals(&[3.0, 2.0, 1.0]));
    }

    #[test]
    fn solve_diagonal_system() {
        let t = LowerToeplitz::new(reals(&[2.0, 0.0]));
        let x = t.solve(&reals(&[4.0, 6.0]), 1e-12).unwrap();
        assert_eq!(x, reals(&[2.0, 3.0]));
    }

    #[test]
    fn solve_with_subdiagonal_coupling() {
        let t = LowerToeplitz::new(reals(&[1.0, 1.0]));
        let x = t.solve(&reals(&[1.0, 0.0]), 1e-12).unwrap();
        assert_eq!(x, reals(&[1.0, -1.0]));
    }

    #[test]
    fn zero_diagonal_is_singular() {
        let t = LowerToeplitz::new(reals(&[0.0, 1.0]));
        assert!(matches!(
            t.solve(&reals(&[1.0, 1.0]), 1e-12),
            Err(Error::SingularDiagonal { .. })
        ));
    }

    #[test]
    fn mul_convolves_columns() {
        let a = LowerToeplitz::new(reals(&[1.0, 1.0]));
        let b = LowerToeplitz::new(reals(&[1.0, 2.0]));
        assert_eq!(a.mul(&b).unwrap().column(), &reals(&[1.0, 3.0])[..]);
    }

    #[test]
    fn empty_dimension_is_inert() {
        let t = LowerToeplitz::new(vec![]);
        assert_eq!(t.solve(&[], 1e-12).unwrap(), vec![]);
        assert_eq!(t.mul(&t).unwrap().dim(), 0);
    }

    proptest! {
        #[test]
        fn solve_then_apply_roundtrips(
            col in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8),
            rhs in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8),
        ) {
            let dim = col.len().min(rhs.len());
            let mut column: Vec<C64> = col[..dim].iter().map(|&(r, i)| c(r, i)).collect();
            // keep the diagonal well away from zero so the solve is stable
            column[0] += c(3.0, 0.0);
            let v: Vec<C64> = rhs[..dim].iter().map(|&(r, i)| c(r, i)).collect();
            let t = LowerToeplitz::new(column);
            let x = t.solve(&v, 1e-12).unwrap();
            let back = t.apply(&x).unwrap();
            for (u, w) in back.iter().zip(v.iter()) {
                prop_assert!((u - w).norm() < 1e-9);
            }
        }

        #[test]
        fn mul_commutes(
            a in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8),
            b in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8),
        ) {
            let dim = a.len().min(b.len());
            let ta = LowerToeplitz::new(a[..dim].iter().map(|&(r, i)| c(r, i)).collect());
            let tb = LowerToeplitz::new(b[..dim].iter().map(|&(r, i)| c(r, i)).collect());
            let ab = ta.mul(&tb).unwrap();
            let ba = tb.mul(&ta).unwrap();
            for (u, w) in ab.column().iter().zip(ba.column().iter()) {
                prop_assert!((u - w).norm() < 1e-12);
            }
        }
    }
}
