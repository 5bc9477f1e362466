//! Small dense complex matrices.
//!
//! Everything in this crate works with matrices of side at most a few dozen,
//! so the solvers are straightforward: LU with partial pivoting and a cyclic
//! complex Jacobi eigensolver for Hermitian matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    a: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            a: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        CMatrix::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    pub fn frobenius(&self) -> f64 {
        self.a.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn scale_cols(&self, s: &[f64]) -> CMatrix {
        CMatrix::from_fn(self.n, |i, j| self.get(i, j) * s[j])
    }

    /// Inverse by column-wise LU solves.
    pub fn inverse(&self) -> Result<CMatrix> {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for j in 0..n {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[j] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e)?;
            for (i, &v) in col.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Solve `A x = b` by LU with partial pivoting.
    pub fn solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut lu = self.a.clone();
        let mut x: Vec<Complex64> = b.to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let (pivot_row, pivot_abs) = (col..n)
                .map(|r| (r, lu[perm[r] * n + col].norm()))
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            if pivot_abs < 1e-300 {
                return Err(Error::SingularT);
            }
            perm.swap(col, pivot_row);
            let p = perm[col];
            let pivot = lu[p * n + col];
            for &row in perm.iter().take(n).skip(col + 1) {
                let factor = lu[row * n + col] / pivot;
                lu[row * n + col] = factor;
                for c in col + 1..n {
                    let v = lu[p * n + c];
                    lu[row * n + c] -= factor * v;
                }
            }
        }
        // Forward substitution on the permuted rows.
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = x[perm[i]];
            for j in 0..i {
                acc -= lu[perm[i] * n + j] * y[j];
            }
            y[i] = acc;
        }
        // Back substitution.
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in i + 1..n {
                acc -= lu[perm[i] * n + j] * x[j];
            }
            x[i] = acc / lu[perm[i] * n + i];
        }
        Ok(x)
    }
}

impl std::fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                let v = self.get(i, j);
                write!(f, "{:>9.4}{:+.4}i ", v.re, v.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues in descending order and the matching
/// orthonormal eigenvectors as columns.
///
/// Convergence: off-diagonal Frobenius mass at most `1e-14` of the trace
/// scale, capped at 100 sweeps.
pub fn hermitian_eigen(h: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    let n = h.dim();
    let herm_err = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (h.get(i, j) - h.get(j, i).conj()).norm())
        .fold(0.0, f64::max);
    if herm_err > 1e-10 * (1.0 + h.max_abs()) {
        return Err(Error::NotHermitian);
    }
    let mut a = h.clone();
    let mut v = CMatrix::identity(n);
    let scale = a.trace().re.abs().max(a.frobenius()).max(1e-300);
    let threshold = 1e-14 * scale;

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| a.get(i, j).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            let mut pairs: Vec<(f64, usize)> =
                (0..n).map(|i| (a.get(i, i).re, i)).collect();
            pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
            let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let vectors = CMatrix::from_fn(n, |i, j| v.get(i, pairs[j].1));
            return Ok((values, vectors));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq.norm() <= threshold / (n as f64) {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let abs = apq.norm();
                let phase = apq / abs;
                let tau = (aqq - app) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // Unitary: column p gets (c, -s conj(phase)), column q gets
                // (s phase, c) in rows (p, q).
                let upp = Complex64::new(c, 0.0);
                let upq = s * phase;
                let uqp = -s * phase.conj();
                let uqq = Complex64::new(c, 0.0);
                // A <- U^H A U, acting on columns then rows p and q.
                for i in 0..n {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, aip * upp + aiq * uqp);
                    a.set(i, q, aip * upq + aiq * uqq);
                }
                for j in 0..n {
                    let apj = a.get(p, j);
                    let aqj = a.get(q, j);
                    a.set(p, j, upp.conj() * apj + uqp.conj() * aqj);
                    a.set(q, j, upq.conj() * apj + uqq.conj() * aqj);
                }
                for i in 0..n {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, vip * upp + viq * uqp);
                    v.set(i, q, vip * upq + viq * uqq);
                }
                // Keep the diagonal exactly real against drift.
                let dpp = a.get(p, p);
                let dqq = a.get(q, q);
                a.set(p, p, Complex64::new(dpp.re, 0.0));
                a.set(q, q, Complex64::new(dqq.re, 0.0));
            }
        }
    }
    Err(Error::EigenNonConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn solve_small_system() {
        let m = CMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(2.0, 0.0),
            (0, 1) => c(1.0, 0.0),
            (1, 0) => c(0.0, 1.0),
            _ => c(3.0, 0.0),
        });
        let b = [c(5.0, 0.0), c(4.0, 2.0)];
        let x = m.solve(&b).unwrap();
        let back = m.apply(&x);
        for (got, want) in back.iter().zip(b.iter()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn solve_singular_reports_error() {
        let m = CMatrix::zeros(3);
        assert_eq!(m.solve(&[c(1.0, 0.0); 3]), Err(Error::SingularT));
    }

    #[test]
    fn jacobi_diagonalizes_hermitian() {
        // Deterministic pseudo-random Hermitian matrix.
        let n = 6;
        let mut seedling = 0x243F6A8885A308D3u64;
        let mut next = move || {
            seedling = seedling
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seedling >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut h = CMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                if i == j {
                    h.set(i, i, c(next() * 4.0, 0.0));
                } else {
                    let v = c(next(), next());
                    h.set(i, j, v);
                    h.set(j, i, v.conj());
                }
            }
        }
        let (vals, vecs) = hermitian_eigen(&h).unwrap();
        // Descending order.
        for w in vals.windows(2) {
            assert!(w[0] >= w[1] - 1e-12);
        }
        // Columns orthonormal.
        let gram = vecs.adjoint().mul(&vecs);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((gram.get(i, j) - c(want, 0.0)).norm() < 1e-12);
            }
        }
        // Reconstruction.
        let lam = CMatrix::from_fn(n, |i, j| {
            if i == j {
                c(vals[i], 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let back = vecs.mul(&lam).mul(&vecs.adjoint());
        assert!(back.sub(&h).frobenius() < 1e-11 * (1.0 + h.frobenius()));
    }

    #[test]
    fn jacobi_rejects_non_hermitian() {
        let mut m = CMatrix::identity(2);
        m.set(0, 1, c(1.0, 0.0));
        assert_eq!(hermitian_eigen(&m), Err(Error::NotHermitian));
    }
}
