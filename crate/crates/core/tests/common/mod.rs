//! Shared oracles for the acceptance suite.

use apolar_core::cmat::CMatrix;
use num_complex::Complex64;

/// Singular values by one-sided Jacobi: columns are rotated pairwise until
/// mutually orthogonal, and the singular values are the column norms. An
/// independent route from the Hermitian eigensolver used by the library.
pub fn singular_values_one_sided_jacobi(m: &CMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| m.get(i, j)).collect())
        .collect();
    for _sweep in 0..120 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let app: f64 = cols[p].iter().map(|v| v.norm_sqr()).sum();
                let aqq: f64 = cols[q].iter().map(|v| v.norm_sqr()).sum();
                let apq: Complex64 = cols[p]
                    .iter()
                    .zip(cols[q].iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                if apq.norm() <= 1e-15 * (app * aqq).sqrt().max(f64::MIN_POSITIVE) {
                    continue;
                }
                rotated = true;
                let abs = apq.norm();
                let phase = apq / abs;
                let tau = (aqq - app) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cth = 1.0 / (1.0 + t * t).sqrt();
                let sth = cth * t;
                for i in 0..n {
                    let vp = cols[p][i];
                    let vq = cols[q][i];
                    cols[p][i] = cth * vp - sth * phase.conj() * vq;
                    cols[q][i] = sth * phase * vp + cth * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sigmas: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sigmas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sigmas
}
