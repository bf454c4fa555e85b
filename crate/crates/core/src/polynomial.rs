use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::DiagonalProfile;
use crate::spectra::DistinctSpectrum;

/// `p(x) = a_0 + a_1 x + ... + a_k x^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least a_0");
        Polynomial { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree cap: number of coefficients minus one.
    pub fn k(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Index of the highest nonzero coefficient, 0 for constants.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1.0)
    }

    /// `p + c`.
    pub fn shifted(&self, c: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        Polynomial::new(coeffs)
    }

    /// Pads with zero coefficients up to degree cap `k`.
    pub fn padded(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < k + 1 {
            coeffs.resize(k + 1, 0.0);
        }
        Polynomial::new(coeffs)
    }
}

/// Values of `p` on the spectrum and on the diagonal of `p(A)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialProfile {
    pub values_on_spectrum: Vec<f64>,
    pub diag_values: Vec<f64>,
    /// Largest diagonal entry of `p(A)`.
    pub big_w: f64,
    /// Smallest diagonal entry of `p(A)`.
    pub small_w: f64,
    /// `max p(lambda_i)` over `i = 2..n`.
    pub big_lambda: f64,
    /// `min p(lambda_i)` over `i = 2..n`.
    pub small_lambda: f64,
}

impl PolynomialProfile {
    pub fn new(p: &Polynomial, spec: &DistinctSpectrum, prof: &DiagonalProfile) -> Result<Self> {
        if p.degree() > prof.k() {
            return Err(Error::DegreeMismatch { degree: p.degree(), cap: prof.k() });
        }
        let coeffs = &p.coeffs()[..=p.degree()];
        let values_on_spectrum: Vec<f64> = spec.thetas().iter().map(|&t| p.eval(t)).collect();
        let diag_values: Vec<f64> =
            (0..prof.vertex_count()).map(|v| prof.poly_diag(v, coeffs)).collect();
        let big_w = diag_values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let small_w = diag_values.iter().copied().fold(f64::INFINITY, f64::min);

        // lambda_1 is theta_0 with one copy removed.
        let rest = spec.thetas().iter().zip(spec.mults()).enumerate().filter_map(|(j, (&t, &m))| {
            let copies = if j == 0 { m - 1 } else { m };
            (copies > 0).then(|| p.eval(t))
        });
        let (big_lambda, small_lambda) = rest.fold((f64::NEG_INFINITY, f64::INFINITY), |(hi, lo), v| {
            (hi.max(v), lo.min(v))
        });
        Ok(PolynomialProfile { values_on_spectrum, diag_values, big_w, small_w, big_lambda, small_lambda })
    }
}
