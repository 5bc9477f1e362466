//! Fischer inner product, the apolarity bracket and symmetrization.
//!
//! On polynomials of degree at most `n` the Fischer inner product weighs the
//! monomial `z^k` by `1/binom(n, k)`. The apolarity bracket is the bilinear
//! pairing obtained by reflecting the second argument through the `#` and
//! `v` involutions; two polynomials with vanishing bracket are apolar.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{binom_f64, elem_sym_all, Polynomial};

fn guard_ambient(p: &Polynomial, n: usize) -> Result<()> {
    if p.ambient() > n {
        return Err(Error::AmbientExceeded {
            ambient: p.ambient(),
            n,
        });
    }
    Ok(())
}

/// Hermitian inner product `sum a_k conj(b_k) / binom(n, k)`.
pub fn fischer_ip(f: &Polynomial, g: &Polynomial, n: usize) -> Result<Complex64> {
    guard_ambient(f, n)?;
    guard_ambient(g, n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        acc += f.coeff(k) * g.coeff(k).conj() / binom_f64(n, k)?;
    }
    Ok(acc)
}

/// Fischer norm `sqrt(<f, f>_n)`.
pub fn fischer_norm(f: &Polynomial, n: usize) -> Result<f64> {
    Ok(fischer_ip(f, f, n)?.re.max(0.0).sqrt())
}

/// Bilinear apolarity bracket `sum (-1)^k a_k b_(n-k) / binom(n, k)`.
///
/// Equals `<f, g^{#v}>_n`; no coefficient is conjugated.
pub fn bracket(f: &Polynomial, g: &Polynomial, n: usize) -> Result<Complex64> {
    guard_ambient(f, n)?;
    guard_ambient(g, n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        acc += sign * f.coeff(k) * g.coeff(n - k) / binom_f64(n, k)?;
    }
    Ok(acc)
}

/// The multiaffine symmetric representative of `f` in `n` variables, stored
/// through its coefficients on the elementary symmetric polynomials.
#[derive(Clone, Debug)]
pub struct SymForm {
    ambient: usize,
    sigma_coeffs: Vec<Complex64>,
}

impl SymForm {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coefficient of `sigma_k`.
    pub fn sigma_coeffs(&self) -> &[Complex64] {
        &self.sigma_coeffs
    }

    /// Value at `(y_1, ..., y_n)`.
    pub fn eval(&self, y: &[Complex64]) -> Result<Complex64> {
        if y.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: y.len(),
            });
        }
        let sigmas = elem_sym_all(y);
        Ok(self
            .sigma_coeffs
            .iter()
            .zip(sigmas.iter())
            .map(|(&c, &s)| c * s)
            .sum())
    }

    /// Restriction to the diagonal `y_k = z`, recovering the original
    /// polynomial.
    pub fn diagonal(&self) -> Result<Polynomial> {
        let coeffs = (0..=self.ambient)
            .map(|k| Ok(self.sigma_coeffs[k] * binom_f64(self.ambient, k)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// `Sym_n(f)`: coefficient of `sigma_k` is `a_k / binom(n, k)`.
pub fn symmetrize(f: &Polynomial, n: usize) -> Result<SymForm> {
    guard_ambient(f, n)?;
    let sigma_coeffs = (0..=n)
        .map(|k| Ok(f.coeff(k) / binom_f64(n, k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymForm {
        ambient: n,
        sigma_coeffs,
    })
}

/// Value of `Sym_n(f)` at `(y_1, ..., y_n)`, computed through the
/// inner-product identity `<f, prod (1 + conj(y_k) z)>_n` so that it can be
/// cross-checked against [`SymForm::eval`].
pub fn sym_eval(f: &Polynomial, n: usize, y: &[Complex64]) -> Result<Complex64> {
    if y.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: y.len(),
        });
    }
    guard_ambient(f, n)?;
    let mut prod = Polynomial::constant(Complex64::new(1.0, 0.0));
    for &yk in y {
        prod = prod.mul(&Polynomial::new(vec![Complex64::new(1.0, 0.0), yk.conj()]));
    }
    fischer_ip(f, &prod, n)
}

/// Whether `|[f, g]_n|` vanishes relative to the Fischer norms of `f` and
/// `g`.
pub fn is_apolar(f: &Polynomial, g: &Polynomial, n: usize, tol: f64) -> Result<bool> {
    let b = bracket(f, g, n)?;
    let scale = fischer_norm(f, n)? * fischer_norm(g, n)?;
    Ok(b.norm() <= tol * scale)
}
