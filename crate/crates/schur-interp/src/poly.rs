use std::fmt;

use crate::error::{Error, Result};
use crate::C64;

/// Dense polynomial over the complex numbers, coefficients in ascending
/// powers of z. The coefficient vector is never empty; the zero polynomial
/// is `[0]`. Trailing zero coefficients are allowed and meaningful: several
/// identities in this crate are stated about fixed-length coefficient
/// vectors, so nothing truncates implicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<C64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<C64>) -> Self {
        if coeffs.is_empty() {
            ComplexPoly { coeffs: vec![C64::new(0.0, 0.0)] }
        } else {
            ComplexPoly { coeffs }
        }
    }

    pub fn zero() -> Self {
        ComplexPoly::new(vec![C64::new(0.0, 0.0)])
    }

    pub fn one() -> Self {
        ComplexPoly::constant(C64::new(1.0, 0.0))
    }

    pub fn constant(c: C64) -> Self {
        ComplexPoly::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        ComplexPoly::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of z^i, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> C64 {
        self.coeffs.get(i).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one coefficient
    }

    /// Degree of the stored vector, counting trailing zeros.
    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest index with |coeff| > tol; None for the (numerical) zero
    /// polynomial.
    pub fn effective_degree_opt(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm() > tol)
    }

    /// Like `effective_degree_opt` but mapping the zero polynomial to 0,
    /// which is the convention the degree bookkeeping here wants.
    pub fn effective_degree(&self, tol: f64) -> usize {
        self.effective_degree_opt(tol).unwrap_or(0)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.effective_degree_opt(tol).is_none()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient vector padded with zeros to exactly `len` entries.
    /// Panics if the polynomial is nominally longer than `len`.
    pub fn coeffs_padded(&self, len: usize) -> Vec<C64> {
        assert!(self.coeffs.len() <= len, "padding cannot shorten");
        let mut out = self.coeffs.clone();
        out.resize(len, C64::new(0.0, 0.0));
        out
    }

    /// Reflection at index k: coefficient j of the result is the conjugate
    /// of coefficient k-j of the input. Requires the effective degree to be
    /// at most k; nominal trailing junk above k must be below `zero_tol`.
    pub fn reflect(&self, k: usize, zero_tol: f64) -> Result<ComplexPoly> {
        if let Some(d) = self.effective_degree_opt(zero_tol) {
            if d > k {
                return Err(Error::InvalidReflection { index: k, degree: d });
            }
        }
        let out = (0..=k).map(|j| self.coeff(k - j).conj()).collect();
        Ok(ComplexPoly::new(out))
    }

    pub fn add(&self, other: &ComplexPoly) -> ComplexPoly {
        let len = self.len().max(other.len());
        let out = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        ComplexPoly::new(out)
    }

    pub fn sub(&self, other: &ComplexPoly) -> ComplexPoly {
        let len = self.len().max(other.len());
        let out = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        ComplexPoly::new(out)
    }

    pub fn scale(&self, s: C64) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        let mut out = vec![C64::new(0.0, 0.0); self.len() + other.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPoly::new(out)
    }

    /// Multiplication by z: shifts every coefficient up one slot.
    pub fn mul_z(&self) -> ComplexPoly {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(C64::new(0.0, 0.0));
        out.extend_from_slice(&self.coeffs);
        ComplexPoly::new(out)
    }

    /// Drops trailing coefficients that are negligible relative to the
    /// largest one. Used after assembling interpolants, where the top
    /// coefficients cancel structurally and only round-off remains.
    pub fn truncate_trailing(&self, rel_tol: f64) -> ComplexPoly {
        let scale = self.max_coeff_norm();
        if scale == 0.0 {
            return ComplexPoly::zero();
        }
        let cut = rel_tol * scale;
        match self.coeffs.iter().rposition(|c| c.norm() > cut) {
            Some(d) => ComplexPoly::new(self.coeffs[..=d].to_vec()),
            None => ComplexPoly::zero(),
        }
    }
}

fn fmt_complex(c: C64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("({}{}i)", c.re, c.im)
    } else {
        format!("({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.norm() == 0.0 && self.coeffs.len() > 1 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => " z".to_string(),
                _ => format!(" z^{i}"),
            };
            terms.push(format!("{}{var}", fmt_complex(c)));
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{}", terms.join(" + "))
    }
}
