//! Skew eigenfunctions of the pullback operator.
//!
//! The map `C(p) = p^{#v}` is an antilinear isometry of degree-`n`
//! polynomials with `C^2 = (-1)^n`. For a monic map of even degree the
//! pullback operator satisfies `T* = C T C` in the Fischer geometry, and
//! admits an orthonormal basis `f_k` with `T f_k = lambda_k C f_k` where the
//! `lambda_k` are its singular values. Such a basis is simultaneously
//! Fischer-orthonormal and pairwise apolar after composition with the map.
//!
//! All adjoints and norms here live in the Fischer-orthonormal coordinates
//! `e_k = sqrt(binom(n, k)) z^k`; monomial coefficients are only an I/O
//! format.

use num_complex::Complex64;

use crate::apolarity::{bracket, fischer_ip};
use crate::cmat::{hermitian_eigen, CMatrix};
use crate::error::{Error, Result};
use crate::poly::{binom_f64, Polynomial};
use crate::pullback::{ensure_monic, t_matrix, MatrixBasis};

/// Sign data of the conjugation `C(p) = p^{#v}` on degree-`n` polynomials.
///
/// In the orthonormal basis the action is `C(e_k) = (-1)^(n-k) e_(n-k)`,
/// and applying `C` twice multiplies by `epsilon = (-1)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugationSpec {
    pub n: usize,
    pub epsilon: i32,
}

impl ConjugationSpec {
    pub fn new(n: usize) -> ConjugationSpec {
        ConjugationSpec {
            n,
            epsilon: if n % 2 == 1 { -1 } else { 1 },
        }
    }
}

/// `C(f) = f^{#v}` with respect to ambient degree `n`.
pub fn conjugate_c(f: &Polynomial, n: usize) -> Result<Polynomial> {
    Ok(f.padded(n)?.sharp().check())
}

/// Orthonormal coordinates `x_k = a_k / sqrt(binom(n, k))`.
pub fn to_orthonormal_coords(p: &Polynomial, n: usize) -> Result<Vec<Complex64>> {
    let p = p.padded(n)?;
    (0..=n)
        .map(|k| Ok(p.coeff(k) / binom_f64(n, k)?.sqrt()))
        .collect()
}

/// Back from orthonormal coordinates to monomial coefficients.
pub fn from_orthonormal_coords(x: &[Complex64], n: usize) -> Result<Polynomial> {
    let coeffs = (0..=n)
        .map(|k| Ok(x[k] * binom_f64(n, k)?.sqrt()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// Action of `C` on orthonormal coordinates: `(Cx)_j = (-1)^j conj(x_(n-j))`.
fn c_coords(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len() - 1;
    (0..=n)
        .map(|j| {
            let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
            sign * x[n - j].conj()
        })
        .collect()
}

/// The signed reversal matrix representing the linear part of `C`.
fn c_matrix(n: usize) -> CMatrix {
    CMatrix::from_fn(n + 1, |j, k| {
        if k == n - j {
            let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
            Complex64::new(sign, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Frobenius residual of `T* = C T C` in the orthonormal basis.
///
/// The identity requires an even map degree; passing `allow_odd` runs the
/// computation anyway and reports the (expected, nonzero) residual.
pub fn verify_complex_symmetry(q: &Polynomial, n: usize, allow_odd: bool) -> Result<f64> {
    let (q, d) = ensure_monic(q)?;
    if d % 2 == 1 && !allow_odd {
        return Err(Error::OddDegreeMap { d });
    }
    let m = t_matrix(&q, n)?
        .to_basis(MatrixBasis::FischerOrthonormal)?
        .entries;
    let k = c_matrix(n);
    let conj_m = CMatrix::from_fn(n + 1, |i, j| m.get(i, j).conj());
    let ctc = k.mul(&conj_m).mul(&k);
    Ok(m.adjoint().sub(&ctc).frobenius())
}

/// Polar-decomposition data of the operator in the orthonormal basis.
#[derive(Clone, Debug)]
pub struct PolarParts {
    /// The operator matrix.
    pub matrix: CMatrix,
    /// Unitary factor `U` with `T = U |T|`.
    pub unitary: CMatrix,
    /// Singular values, descending.
    pub sigmas: Vec<f64>,
    /// Orthonormal eigenvectors of `T* T` as columns, matching `sigmas`.
    pub eigenvectors: CMatrix,
}

/// Hermitian eigendecomposition of `|T|` and the unitary polar factor.
///
/// The unitary factor comes from the scaled Newton iteration
/// `X <- (g X + (g X)^-H) / 2`, which avoids forming `T* T` and so keeps
/// the error linear in the condition number of `T`.
pub fn polar_parts(q: &Polynomial, n: usize) -> Result<PolarParts> {
    let m = t_matrix(q, n)?
        .to_basis(MatrixBasis::FischerOrthonormal)?
        .entries;
    let dim = n + 1;
    let mut x = m.clone();
    for iter in 0..60 {
        let inv = x.inverse().map_err(|_| Error::SingularT)?;
        let gamma = if iter < 4 {
            (inv.frobenius() / x.frobenius()).sqrt()
        } else {
            1.0
        };
        let next = CMatrix::from_fn(dim, |i, j| {
            0.5 * (gamma * x.get(i, j) + inv.get(j, i).conj() / gamma)
        });
        let delta = next.sub(&x).frobenius();
        x = next;
        if delta <= 1e-15 * x.frobenius() {
            break;
        }
    }
    let unitary = x;
    let modulus_raw = unitary.adjoint().mul(&m);
    let modulus = CMatrix::from_fn(dim, |i, j| {
        0.5 * (modulus_raw.get(i, j) + modulus_raw.get(j, i).conj())
    });
    let (vals, vecs) = hermitian_eigen(&modulus)?;
    let sigmas: Vec<f64> = vals.iter().map(|&v| v.max(0.0)).collect();
    let smax = sigmas.first().copied().unwrap_or(0.0);
    if smax == 0.0 || sigmas.iter().any(|&s| s <= 1e-13 * smax) {
        return Err(Error::SingularT);
    }
    Ok(PolarParts {
        matrix: m,
        unitary,
        sigmas,
        eigenvectors: vecs,
    })
}

/// Orthonormal polynomials `f_k` with `T f_k = lambda_k C f_k`.
#[derive(Clone, Debug)]
pub struct SkewBasis {
    /// Polynomials of ambient degree `n`, Fischer-orthonormal.
    pub polys: Vec<Polynomial>,
    /// Matching nonnegative singular values of the operator, descending.
    pub singulars: Vec<f64>,
}

fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y.iter()).map(|(a, b)| a * b.conj()).sum()
}

fn norm(x: &[Complex64]) -> f64 {
    inner(x, x).re.max(0.0).sqrt()
}

fn axpy(y: &mut [Complex64], alpha: Complex64, x: &[Complex64]) {
    for (yi, xi) in y.iter_mut().zip(x.iter()) {
        *yi += alpha * xi;
    }
}

/// Constructs the skew eigenbasis of `T` for a monic map of even degree.
///
/// Eigenvalues of `|T|` whose relative gap is below `cluster_tol` are
/// merged into one cluster; within each cluster the antilinear isometry
/// `J = U* C` fixes the eigenspace and is turned into a basis of `J`-fixed
/// vectors: for a unit vector `h`, `(h + Jh)/2` is `J`-fixed and is used
/// when it is not too short, otherwise `i (h - Jh)/2` is.
pub fn skew_eigenbasis(q: &Polynomial, n: usize, cluster_tol: f64) -> Result<SkewBasis> {
    let (q, d) = ensure_monic(q)?;
    if d % 2 == 1 {
        return Err(Error::OddDegreeMap { d });
    }
    let parts = polar_parts(&q, n)?;
    let dim = n + 1;
    let u_adj = parts.unitary.adjoint();
    let j_apply = |x: &[Complex64]| -> Vec<Complex64> { u_adj.apply(&c_coords(x)) };

    // Cluster boundaries over the descending singular values.
    let mut clusters: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 0..dim {
        let last = i + 1 == dim;
        let split =
            !last && (parts.sigmas[i] - parts.sigmas[i + 1]) > cluster_tol * parts.sigmas[i];
        if split || last {
            clusters.push((start, i + 1));
            start = i + 1;
        }
    }

    let mut polys = Vec::with_capacity(dim);
    let mut singulars = Vec::with_capacity(dim);
    for &(lo, hi) in &clusters {
        let lambda = parts.sigmas[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
        let mut work: Vec<Vec<Complex64>> = (lo..hi)
            .map(|col| (0..dim).map(|row| parts.eigenvectors.get(row, col)).collect())
            .collect();
        while let Some(h) = work.first().cloned() {
            let jh = j_apply(&h);
            // Project Jh back onto the remaining subspace to stay inside it.
            let mut p = vec![Complex64::new(0.0, 0.0); dim];
            for w in &work {
                axpy(&mut p, inner(&jh, w), w);
            }
            let mut g: Vec<Complex64> = h
                .iter()
                .zip(p.iter())
                .map(|(a, b)| 0.5 * (a + b))
                .collect();
            if norm(&g) <= 0.5 {
                // Here Jh is close to -h and i (h - Jh)/2 is the J-fixed
                // combination with healthy norm.
                g = h
                    .iter()
                    .zip(p.iter())
                    .map(|(a, b)| Complex64::new(0.0, 0.5) * (a - b))
                    .collect();
            }
            let gn = norm(&g);
            for gi in g.iter_mut() {
                *gi /= gn;
            }
            polys.push(from_orthonormal_coords(&g, n)?);
            singulars.push(lambda);
            // Orthogonal complement of g within the remaining subspace.
            let mut next: Vec<Vec<Complex64>> = Vec::with_capacity(work.len() - 1);
            for w in work.iter().skip(1) {
                let mut wp = w.clone();
                axpy(&mut wp, -inner(w, &g), &g);
                for prev in &next {
                    let overlap = inner(&wp, prev);
                    axpy(&mut wp, -overlap, prev);
                }
                let wn = norm(&wp);
                if wn > 1e-8 {
                    for wi in wp.iter_mut() {
                        *wi /= wn;
                    }
                    next.push(wp);
                }
            }
            work = next;
        }
    }
    Ok(SkewBasis { polys, singulars })
}

/// Residuals certifying a skew basis: the Fischer Gram matrix against the
/// identity, and the bracket matrix of the composed polynomials against
/// `diag(lambda)`.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub gram_residual: f64,
    pub bracket_residual: f64,
}

pub fn verify_double_orthogonality(
    q: &Polynomial,
    n: usize,
    basis: &SkewBasis,
) -> Result<OrthogonalityReport> {
    let (q, d) = ensure_monic(q)?;
    let nd = n * d;
    let composed = basis
        .polys
        .iter()
        .map(|f| Ok(f.padded(n)?.compose(&q)))
        .collect::<Result<Vec<_>>>()?;
    let mut gram_residual = 0.0f64;
    let mut bracket_residual = 0.0f64;
    for (j, fj) in basis.polys.iter().enumerate() {
        for (k, fk) in basis.polys.iter().enumerate() {
            let delta = if j == k { 1.0 } else { 0.0 };
            let g = fischer_ip(fj, fk, n)?;
            gram_residual = gram_residual.max((g - delta).norm());
            let b = bracket(&composed[j], &composed[k], nd)?;
            bracket_residual = bracket_residual.max((b - basis.singulars[j] * delta).norm());
        }
    }
    Ok(OrthogonalityReport {
        gram_residual,
        bracket_residual,
    })
}
