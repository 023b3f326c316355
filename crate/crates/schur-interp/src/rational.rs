use std::fmt;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::roots::{poly_from_roots, poly_roots};
use crate::C64;

/// Quotient of two complex polynomials. The denominator is never the
/// identically-zero polynomial; nothing else is normalized at construction,
/// in particular num and den may share roots until `reduce` is called.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    num: ComplexPoly,
    den: ComplexPoly,
}

/// Outcome of `RationalFn::reduce`. `complete` is false when the root
/// finder gave up and the returned function is the input passed through
/// unchanged; callers that need certified degrees must check it.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub f: RationalFn,
    pub complete: bool,
}

impl RationalFn {
    pub fn new(num: ComplexPoly, den: ComplexPoly) -> Result<Self> {
        if den.max_coeff_norm() == 0.0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFn { num, den })
    }

    pub fn constant(c: C64) -> Self {
        RationalFn { num: ComplexPoly::constant(c), den: ComplexPoly::one() }
    }

    pub fn num(&self) -> &ComplexPoly {
        &self.num
    }

    pub fn den(&self) -> &ComplexPoly {
        &self.den
    }

    /// Pointwise value; infinite or NaN at (or numerically near) poles,
    /// which callers that sample near poles must tolerate.
    pub fn eval(&self, z: C64) -> C64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// First m+1 Taylor coefficients at the origin by long division.
    pub fn taylor(&self, m: usize, tols: &Tolerances) -> Result<Vec<C64>> {
        let d0 = self.den.coeff(0);
        if d0.norm() <= tols.zero_tol {
            return Err(Error::PoleAtOrigin);
        }
        let mut t = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut acc = self.num.coeff(j);
            for i in 1..=j {
                acc -= self.den.coeff(i) * t[j - i];
            }
            t.push(acc / d0);
        }
        Ok(t)
    }

    /// McMillan degree of the fraction as stored: the larger effective
    /// degree of the two polynomials. Meaningful as the degree of the
    /// function only for coprime pairs; call `reduce` first otherwise.
    pub fn mcmillan_degree(&self, tols: &Tolerances) -> usize {
        self.num
            .effective_degree(tols.zero_tol)
            .max(self.den.effective_degree(tols.zero_tol))
    }

    /// Cancels numerator/denominator root pairs closer than
    /// `root_match_tol`, then rescales so den(0) = 1. A fraction with
    /// nothing to cancel is returned verbatim (no rescaling), so exact
    /// coefficients survive. If root finding fails the input comes back
    /// with `complete: false`.
    pub fn reduce(&self, tols: &Tolerances) -> Reduction {
        if self.num.is_zero(tols.zero_tol) {
            let f = RationalFn { num: ComplexPoly::zero(), den: ComplexPoly::one() };
            return Reduction { f, complete: true };
        }
        let num_deg = self.num.effective_degree(tols.zero_tol);
        let den_deg = self.den.effective_degree(tols.zero_tol);
        if num_deg == 0 || den_deg == 0 {
            return Reduction { f: self.clone(), complete: true };
        }
        let (num_roots, den_roots) =
            match (poly_roots(&self.num, tols.zero_tol), poly_roots(&self.den, tols.zero_tol)) {
                (Ok(nr), Ok(dr)) => (nr, dr),
                _ => return Reduction { f: self.clone(), complete: false },
            };

        let mut kept_den = den_roots;
        let mut kept_num = Vec::with_capacity(num_roots.len());
        let mut cancelled = false;
        for r in num_roots {
            let nearest = kept_den
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, (s - r).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1));
            match nearest {
                Some((i, d)) if d <= tols.root_match_tol => {
                    kept_den.swap_remove(i);
                    cancelled = true;
                }
                _ => kept_num.push(r),
            }
        }
        if !cancelled {
            return Reduction { f: self.clone(), complete: true };
        }

        let num = poly_from_roots(&kept_num, self.num.coeff(num_deg));
        let den = poly_from_roots(&kept_den, self.den.coeff(den_deg));
        let d0 = den.coeff(0);
        let f = if d0.norm() > tols.zero_tol {
            RationalFn { num: num.scale(d0.finv()), den: den.scale(d0.finv()) }
        } else {
            RationalFn { num, den }
        };
        Reduction { f, complete: true }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
