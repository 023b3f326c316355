//! Minimal-complexity diagnostic: the numerical rank q of the Hankel
//! matrix built from the interior Taylor coefficients c_1, c_2, ... bounds
//! which exact McMillan degrees can match the data. No rational function
//! of degree below q matches; no function of exact degree strictly between
//! q and n - q matches either (so a budget in that window is served only
//! by the unique degree-q interpolant, when it exists); every budget above
//! n - q admits infinitely many interpolants.

use nalgebra::DMatrix;

use crate::config::Tolerances;
use crate::C64;

/// Rows and columns of the diagnostic Hankel matrix for n + 1 coefficients:
/// ceil((n-1)/2) x floor((n+1)/2), so entries draw on c_1 ... c_{n-1}.
/// Either dimension can be zero for small n. The rank of any such matrix
/// is a lower bound on the McMillan degree of every interpolant, because
/// it embeds into the infinite Hankel matrix of the interpolant's Taylor
/// tail, whose rank the degree caps.
pub fn hankel_shape(n: usize) -> (usize, usize) {
    if n == 0 {
        (0, 0)
    } else {
        (n / 2, (n + 1) / 2)
    }
}

/// Numerical rank of the Hankel matrix with entry (i, j) = c_{i+j+1}
/// (0-indexed), via singular values: count of those above
/// rank_tol * sigma_max. Data with n <= 2 has an empty matrix and q = 0.
pub fn hankel_rank(c: &[C64], tols: &Tolerances) -> usize {
    assert!(!c.is_empty(), "need at least c_0");
    let n = c.len() - 1;
    let (rows, cols) = hankel_shape(n);
    if rows == 0 || cols == 0 {
        return 0;
    }
    let h = DMatrix::from_fn(rows, cols, |i, j| c[i + j + 1]);
    let sv = h.svd(false, false).singular_values;
    let sigma_max = sv.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tols.rank_tol * sigma_max).count()
}
