//! The pullback of the apolarity bracket along a monic polynomial map.
//!
//! For a monic map `q` of degree `d`, the multi-point form
//! `S_{q,n}(f)(u_1, ..., u_n) = <f o q, prod_j (q - u_j)^{#v}>_{nd}`
//! restricts the degree-`nd` symmetrization of `f o q` to the fibers of
//! `q`. Its diagonal `T_{q,n}(f) = S_{q,n}(f)(z, ..., z)` is an invertible
//! linear operator on degree-`n` polynomials and satisfies
//! `[f o q, g o q]_{nd} = [T_{q,n}(f), g]_n`.

use num_complex::Complex64;

use crate::apolarity::{bracket, fischer_ip, fischer_norm};
use crate::cmat::CMatrix;
use crate::error::{Error, Result};
use crate::poly::{binom_f64, Polynomial};

/// Basis in which an operator matrix is expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixBasis {
    /// Columns are coefficients of images of `1, z, ..., z^n`.
    Monomial,
    /// Columns refer to `e_k = sqrt(binom(n, k)) z^k`, orthonormal for the
    /// Fischer inner product.
    FischerOrthonormal,
}

/// Dense matrix of `T_{q,n}` tagged with its basis and generating map.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub entries: CMatrix,
    pub basis: MatrixBasis,
    pub n: usize,
    pub q: Polynomial,
}

impl OperatorMatrix {
    /// The same operator re-expressed in the other basis via the diagonal
    /// scaling `e_k = sqrt(binom(n, k)) z^k`.
    pub fn to_basis(&self, basis: MatrixBasis) -> Result<OperatorMatrix> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let n = self.n;
        let mut weights = Vec::with_capacity(n + 1);
        for k in 0..=n {
            weights.push(binom_f64(n, k)?.sqrt());
        }
        let entries = CMatrix::from_fn(n + 1, |j, k| match basis {
            // monomial -> orthonormal: M'[j][k] = M[j][k] * w_k / w_j
            MatrixBasis::FischerOrthonormal => self.entries.get(j, k) * weights[k] / weights[j],
            // orthonormal -> monomial
            MatrixBasis::Monomial => self.entries.get(j, k) * weights[j] / weights[k],
        });
        Ok(OperatorMatrix {
            entries,
            basis,
            n,
            q: self.q.clone(),
        })
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..=self.n).map(|k| self.entries.get(k, k)).collect()
    }

    /// Apply to a coefficient vector in this matrix's basis.
    pub fn apply(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        self.entries.apply(coeffs)
    }
}

/// Discriminant data entering the displayed closed forms for quadratic and
/// cubic maps.
#[derive(Clone, Copy, Debug)]
pub struct DiscriminantData {
    pub delta: Complex64,
    /// Only meaningful for cubic maps.
    pub gamma_cap: Complex64,
    pub degree: usize,
}

impl DiscriminantData {
    pub fn from_map(q: &Polynomial) -> Result<DiscriminantData> {
        let (q, d) = ensure_monic(q)?;
        match d {
            2 => {
                let beta = q.coeff(1);
                let gamma = q.coeff(0);
                Ok(DiscriminantData {
                    delta: beta * beta - 4.0 * gamma,
                    gamma_cap: Complex64::new(0.0, 0.0),
                    degree: 2,
                })
            }
            3 => {
                let beta = q.coeff(2);
                let gamma = q.coeff(1);
                let delta = q.coeff(0);
                let b2 = beta * beta;
                let g2 = gamma * gamma;
                Ok(DiscriminantData {
                    delta: b2 * g2 - 4.0 * gamma * g2 - 4.0 * b2 * beta * delta
                        + 18.0 * beta * gamma * delta
                        - 27.0 * delta * delta,
                    gamma_cap: 2.0 * b2 * beta - 9.0 * beta * gamma + 27.0 * delta,
                    degree: 3,
                })
            }
            _ => Err(Error::UnsupportedShape { d, n: 0 }),
        }
    }
}

/// Trims `q`, requires exact degree `>= 1` and leading coefficient 1.
pub fn ensure_monic(q: &Polynomial) -> Result<(Polynomial, usize)> {
    let t = q.trimmed();
    let d = t.exact_degree().ok_or(Error::NonMonicMap)?;
    if d == 0 || !t.is_monic() {
        return Err(Error::NonMonicMap);
    }
    Ok((t, d))
}

/// The product `prod_j (q - u_j)^{#v}`, each factor taken with ambient
/// degree equal to the map degree.
pub fn fiber_product(q: &Polynomial, u: &[Complex64]) -> Result<Polynomial> {
    let (q, d) = ensure_monic(q)?;
    let mut prod = Polynomial::constant(Complex64::new(1.0, 0.0));
    for &uj in u {
        let factor = q.sub(&Polynomial::constant(uj)).padded(d)?;
        prod = prod.mul(&factor.sharp().check());
    }
    Ok(prod)
}

/// `S_{q,n}(f)(u_1, ..., u_n)`, the restriction of the degree-`nd`
/// symmetrization of `f o q` to the fiber over `(u_1, ..., u_n)`.
pub fn s_eval(q: &Polynomial, n: usize, f: &Polynomial, u: &[Complex64]) -> Result<Complex64> {
    let (q, d) = ensure_monic(q)?;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.len(),
        });
    }
    let fq = f.padded(n)?.compose(&q);
    let nd = n * d;
    fischer_ip(&fq, &fiber_product(&q, u)?.padded(nd)?, nd)
}

/// Bivariate polynomial in `z` and `v`, coefficients indexed `[z_power][v_power]`.
type BiPoly = Vec<Vec<Complex64>>;

fn bipoly_mul(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let za = a.len() - 1;
    let zb = b.len() - 1;
    let va = a[0].len() - 1;
    let vb = b[0].len() - 1;
    let mut out = vec![vec![Complex64::new(0.0, 0.0); va + vb + 1]; za + zb + 1];
    for (i, row_a) in a.iter().enumerate() {
        for (s, &ca) in row_a.iter().enumerate() {
            if ca.norm_sqr() == 0.0 {
                continue;
            }
            for (j, row_b) in b.iter().enumerate() {
                for (t, &cb) in row_b.iter().enumerate() {
                    out[i + j][s + t] += ca * cb;
                }
            }
        }
    }
    out
}

/// `(q - u)^{#v}` with `v = conj(u)` as a formal variable: the `z^k`
/// coefficient is linear in `v`.
fn fiber_factor(q: &Polynomial, d: usize) -> BiPoly {
    let mut f = vec![vec![Complex64::new(0.0, 0.0); 2]; d + 1];
    for (k, row) in f.iter_mut().enumerate() {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        // sharp reverses and conjugates: coefficient k comes from b_(d-k).
        row[0] = sign * q.coeff(d - k).conj();
        if k == d {
            row[1] = -sign * Complex64::new(1.0, 0.0);
        }
    }
    f
}

/// Matrix of `T_{q,n}` in the monomial basis: column `k` holds the
/// coefficients of `T_{q,n}(z^k)`.
///
/// The construction tracks `((q - u)^{#v})^n` as a polynomial in `z` whose
/// coefficients are polynomials in `conj(u)`; pairing against `q^k` and
/// conjugating the second slot turns those into polynomials in `u`, read off
/// exactly.
pub fn t_matrix(q: &Polynomial, n: usize) -> Result<OperatorMatrix> {
    let (q, d) = ensure_monic(q)?;
    let nd = n * d;
    let factor = fiber_factor(&q, d);
    let mut power: BiPoly = vec![vec![Complex64::new(1.0, 0.0)]];
    for _ in 0..n {
        power = bipoly_mul(&power, &factor);
    }
    let mut weights = Vec::with_capacity(nd + 1);
    for m in 0..=nd {
        weights.push(1.0 / binom_f64(nd, m)?);
    }
    let mut entries = CMatrix::zeros(n + 1);
    let mut qk = Polynomial::constant(Complex64::new(1.0, 0.0));
    for k in 0..=n {
        // Inner product of q^k against the tracked product; conj of a
        // polynomial in v = conj(u) is a polynomial in u.
        for t in 0..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in 0..=qk.ambient().min(nd) {
                let g = power[m].get(t).copied().unwrap_or_default();
                acc += qk.coeff(m) * g.conj() * weights[m];
            }
            entries.set(t, k, acc);
        }
        qk = qk.mul(&q);
    }
    Ok(OperatorMatrix {
        entries,
        basis: MatrixBasis::Monomial,
        n,
        q,
    })
}

/// Fallback route for `t_matrix`: evaluates the diagonal of `S_{q,n}(z^k)`
/// at `k + 1` nodes and solves the Vandermonde system for the coefficients.
pub fn t_matrix_via_interpolation(q: &Polynomial, n: usize) -> Result<OperatorMatrix> {
    let (q, _d) = ensure_monic(q)?;
    let mut entries = CMatrix::zeros(n + 1);
    for k in 0..=n {
        let f = Polynomial::monomial(Complex64::new(1.0, 0.0), k);
        let m = k + 1;
        let nodes: Vec<Complex64> = (0..m)
            .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / m as f64))
            .collect();
        let values = nodes
            .iter()
            .map(|&node| s_eval(&q, n, &f, &vec![node; n]))
            .collect::<Result<Vec<_>>>()?;
        let vander = CMatrix::from_fn(m, |i, j| nodes[i].powu(j as u32));
        let coeffs = vander.solve(&values)?;
        for (t, &ct) in coeffs.iter().enumerate() {
            entries.set(t, k, ct);
        }
    }
    Ok(OperatorMatrix {
        entries,
        basis: MatrixBasis::Monomial,
        n,
        q,
    })
}

/// `T_{q,n}(f)` as a polynomial of ambient degree `n`.
pub fn t_apply(q: &Polynomial, n: usize, f: &Polynomial) -> Result<Polynomial> {
    let m = t_matrix(q, n)?;
    let f = f.padded(n)?;
    Ok(Polynomial::new(m.apply(f.coeffs())))
}

/// Eigenvalues of `T_{q,n}`: entry `k` is
/// `(-1)^(k(d+1)) binom(n, k) / binom(nd, kd)`.
pub fn t_diagonal(n: usize, d: usize) -> Result<Vec<f64>> {
    if n < 1 || d < 1 {
        return Err(Error::UnsupportedShape { d, n });
    }
    (0..=n)
        .map(|k| {
            let sign = if (k * (d + 1)) % 2 == 1 { -1.0 } else { 1.0 };
            Ok(sign * binom_f64(n, k)? / binom_f64(n * d, k * d)?)
        })
        .collect()
}

/// The displayed closed forms of `T_{q,n}` for `d` in `{2, 3}` and `n` in
/// `{2, 3}`, assembled from the discriminant data. Cross-check fixture only.
pub fn t_matrix_closed_form(q: &Polynomial, n: usize) -> Result<OperatorMatrix> {
    let (q, d) = ensure_monic(q)?;
    if !(2..=3).contains(&d) || !(2..=3).contains(&n) {
        return Err(Error::UnsupportedShape { d, n });
    }
    let data = DiscriminantData::from_map(&q)?;
    let dl = data.delta;
    let gc = data.gamma_cap;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let rows: Vec<Vec<Complex64>> = match (d, n) {
        (2, 2) => vec![
            vec![one, -dl / 3.0, dl * dl / 6.0],
            vec![zero, -one / 3.0, 2.0 * dl / 3.0],
            vec![zero, zero, one],
        ],
        (2, 3) => vec![
            vec![one, -0.3 * dl, 0.1 * dl * dl, -0.05 * dl * dl * dl],
            vec![zero, -0.2 * one, 0.2 * dl, -0.3 * dl * dl],
            vec![zero, zero, 0.2 * one, -0.9 * dl],
            vec![zero, zero, zero, -one],
        ],
        (3, 2) => vec![
            vec![one, gc / 30.0, -dl / 15.0],
            vec![zero, one / 10.0, -gc / 15.0],
            vec![zero, zero, one],
        ],
        (3, 3) => vec![
            vec![one, gc / 28.0, -dl / 28.0, zero],
            vec![zero, one / 28.0, zero, -3.0 * dl / 28.0],
            vec![zero, zero, one / 28.0, -3.0 * gc / 28.0],
            vec![zero, zero, zero, one],
        ],
        _ => unreachable!(),
    };
    let entries = CMatrix::from_fn(n + 1, |i, j| rows[i][j]);
    Ok(OperatorMatrix {
        entries,
        basis: MatrixBasis::Monomial,
        n,
        q,
    })
}

/// Whether `[f o q, g o q]_{nd}` vanishes relative to the Fischer norms of
/// the composed polynomials.
pub fn is_q_apolar(
    q: &Polynomial,
    f: &Polynomial,
    g: &Polynomial,
    n: usize,
    tol: f64,
) -> Result<bool> {
    let (q, d) = ensure_monic(q)?;
    let nd = n * d;
    let fq = f.padded(n)?.compose(&q);
    let gq = g.padded(n)?.compose(&q);
    let b = bracket(&fq, &gq, nd)?;
    let scale = fischer_norm(&fq, nd)? * fischer_norm(&gq, nd)?;
    Ok(b.norm() <= tol * scale)
}

/// Normalized residual of the pullback identity
/// `[f o q, g o q]_{nd} = [T_{q,n}(f), g]_n`.
pub fn check_pullback_identity(
    q: &Polynomial,
    n: usize,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<f64> {
    let (q, d) = ensure_monic(q)?;
    let nd = n * d;
    let fq = f.padded(n)?.compose(&q);
    let gq = g.padded(n)?.compose(&q);
    let lhs = bracket(&fq, &gq, nd)?;
    let tf = t_apply(&q, n, f)?;
    let rhs = bracket(&tf, &g.padded(n)?, n)?;
    Ok((lhs - rhs).norm() / (1.0 + lhs.norm() + rhs.norm()))
}
