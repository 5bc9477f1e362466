//! Dense complex polynomials with an explicit ambient degree.
//!
//! The ambient degree is part of a polynomial's identity here: it fixes the
//! length of the coefficient vector (trailing zeros are stored), governs the
//! coefficient-reversal involution and supplies the binomial weights of the
//! Fischer pairing. A polynomial of ambient `n` holds `n + 1` coefficients
//! `a_0..a_n`, lowest degree first.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative threshold below which trailing coefficients are treated as zero
/// when determining the exact degree.
pub const DEGREE_TRIM_EPS: f64 = 1e-14;

/// Roots closer than this fraction of the Cauchy radius are merged into a
/// single root with multiplicity.
const ROOT_CLUSTER_EPS: f64 = 1e-7;

const MAX_ROOT_ITERATIONS: usize = 200;

/// A complex polynomial `a_0 + a_1 z + ... + a_n z^n` of ambient degree `n`.
///
/// `a_n` may be zero; the exact degree can be smaller than the ambient one.
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, lowest degree first. The
    /// ambient degree is `coeffs.len() - 1`; an empty vector yields the zero
    /// polynomial of ambient 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Polynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The zero polynomial of the given ambient degree.
    pub fn zero(ambient: usize) -> Self {
        Polynomial {
            coeffs: vec![Complex64::new(0.0, 0.0); ambient + 1],
        }
    }

    /// `c * z^k` with ambient degree `k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// Monic polynomial with the given zeros; ambient degree equals the
    /// number of zeros.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Polynomial::constant(Complex64::new(1.0, 0.0));
        for &r in roots {
            p = p.mul(&Polynomial::new(vec![-r, Complex64::new(1.0, 0.0)]));
        }
        p
    }

    pub fn ambient(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the ambient degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Exact degree after discarding trailing coefficients below
    /// `DEGREE_TRIM_EPS` relative to the largest one. `None` for the zero
    /// polynomial.
    pub fn exact_degree(&self) -> Option<usize> {
        let scale = self.max_coeff_abs();
        if scale == 0.0 {
            return None;
        }
        self.coeffs
            .iter()
            .rposition(|c| c.norm() > DEGREE_TRIM_EPS * scale)
    }

    /// Copy with ambient degree reduced to the exact degree.
    pub fn trimmed(&self) -> Polynomial {
        match self.exact_degree() {
            None => Polynomial::zero(0),
            Some(d) => Polynomial::new(self.coeffs[..=d].to_vec()),
        }
    }

    /// Copy with ambient degree raised to `n` by appending zeros.
    pub fn padded(&self, n: usize) -> Result<Polynomial> {
        if self.ambient() > n {
            return Err(Error::AmbientExceeded {
                ambient: self.ambient(),
                n,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n + 1, Complex64::new(0.0, 0.0));
        Ok(Polynomial { coeffs })
    }

    pub fn is_monic(&self) -> bool {
        match self.exact_degree() {
            Some(d) => (self.coeffs[d] - 1.0).norm() <= 1e-12,
            None => false,
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.ambient().max(other.ambient());
        Polynomial::new((0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.ambient().max(other.ambient());
        Polynomial::new((0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, s: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Coefficient convolution; the ambient degree is the sum of the ambient
    /// degrees.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let n = self.ambient() + other.ambient();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }

    /// `f(q(z))` with ambient degree exactly `ambient(f) * ambient(q)`.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let n = self.ambient();
        let d = q.ambient();
        let mut acc = Polynomial::constant(self.coeff(n));
        for k in (0..n).rev() {
            acc = acc.mul(q).add(&Polynomial::constant(self.coeff(k)));
        }
        acc.padded(n * d).expect("composition ambient")
    }

    /// Derivative, ambient degree reduced by one.
    pub fn derivative(&self) -> Polynomial {
        if self.ambient() == 0 {
            return Polynomial::zero(0);
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }

    /// The involution `f^# = z^n conj(f(1/conj(z)))`: coefficient `k` of the
    /// result is `conj(a_(n-k))`, where `n` is the ambient degree.
    pub fn sharp(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().rev().map(|c| c.conj()).collect())
    }

    /// The reflection `f(-z)`: coefficient `k` is multiplied by `(-1)^k`.
    pub fn check(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// `1 + max |a_k / a_deg|` over `k < deg`; every root lies within this
    /// radius of the origin.
    pub fn cauchy_bound(&self) -> f64 {
        let deg = self.exact_degree().unwrap_or(0);
        if deg == 0 {
            return 1.0;
        }
        let lead = self.coeffs[deg].norm();
        1.0 + self.coeffs[..deg]
            .iter()
            .map(|c| c.norm() / lead)
            .fold(0.0, f64::max)
    }

    /// All complex roots with multiplicity, by Aberth-Ehrlich simultaneous
    /// iteration on the monic normalization. Initial guesses sit on a
    /// slightly perturbed circle of the Cauchy radius; roots closer than
    /// `1e-7` of that radius are merged and reported with multiplicity.
    pub fn roots(&self, tol: f64) -> Result<RootSet> {
        let deg = match self.exact_degree() {
            None => return Err(Error::AllCoefficientsZero),
            Some(d) => d,
        };
        if deg == 0 {
            return Ok(RootSet {
                roots: Vec::new(),
                residual: 0.0,
            });
        }
        let lead = self.coeffs[deg];
        let monic: Vec<Complex64> = self.coeffs[..=deg].iter().map(|&c| c / lead).collect();
        let monic_poly = Polynomial::new(monic.clone());
        let deriv = monic_poly.derivative();
        let radius = monic_poly.cauchy_bound();

        let mut z: Vec<Complex64> = (0..deg)
            .map(|j| {
                let frac = (j as f64 * 0.618_033_988_75).fract();
                let angle = 2.0 * std::f64::consts::PI * (j as f64 + 0.25) / deg as f64 + 0.41;
                let r = radius * (0.65 + 0.3 * frac);
                Complex64::from_polar(r, angle)
            })
            .collect();

        let coeff_scale_at = |x: f64| -> f64 {
            monic
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * x.powi(k as i32))
                .sum()
        };

        let mut converged = vec![false; deg];
        for _ in 0..MAX_ROOT_ITERATIONS {
            let mut max_step = 0.0f64;
            for i in 0..deg {
                if converged[i] {
                    continue;
                }
                let pz = monic_poly.eval(z[i]);
                if pz.norm() <= 1e-13 * coeff_scale_at(z[i].norm()).max(1e-300) {
                    converged[i] = true;
                    continue;
                }
                let dz = deriv.eval(z[i]);
                let newton = if dz.norm() > 1e-300 {
                    pz / dz
                } else {
                    // At a critical point; nudge off it.
                    Complex64::new(1e-6 * radius, 1e-6 * radius)
                };
                let mut repulse = Complex64::new(0.0, 0.0);
                for j in 0..deg {
                    if i != j {
                        let diff = z[i] - z[j];
                        if diff.norm() > 1e-300 {
                            repulse += 1.0 / diff;
                        }
                    }
                }
                let denom = 1.0 - newton * repulse;
                let step = if denom.norm() > 1e-300 {
                    newton / denom
                } else {
                    newton
                };
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
            if converged.iter().all(|&c| c) || max_step < 5e-16 {
                break;
            }
        }

        // Unconditional merge of iterates within the cluster distance.
        for group in group_components(&z, ROOT_CLUSTER_EPS * radius) {
            if group.len() < 2 {
                continue;
            }
            let centroid =
                group.iter().map(|&m| z[m]).sum::<Complex64>() / group.len() as f64;
            for &m in &group {
                z[m] = centroid;
            }
        }

        // A multiple root of multiplicity m is only located to a scatter of
        // about residual^(1/m) by the simultaneous iteration. Candidate
        // clusters at coarser separations are refined by Newton on the
        // (m-1)-th derivative, where an m-fold root is simple; the merge is
        // kept only when the refined point actually annihilates p.
        let mut derivs = vec![monic_poly.clone()];
        for k in 1..=deg {
            derivs.push(derivs[k - 1].derivative());
        }
        for tau_factor in [1e-4, 1e-2, 1e-1, 0.5] {
            for group in group_components(&z, tau_factor * radius) {
                let m = group.len();
                if m < 2 || group.iter().all(|&i| z[i] == z[group[0]]) {
                    continue;
                }
                let centroid =
                    group.iter().map(|&i| z[i]).sum::<Complex64>() / m as f64;
                let refined = newton_refine(&derivs[m - 1], &derivs[m], centroid);
                let floor = coeff_scale_at(refined.norm()).max(1e-290);
                if monic_poly.eval(refined).norm() <= 1e-12 * floor {
                    for &i in &group {
                        z[i] = refined;
                    }
                }
            }
        }

        let mut roots = z;
        roots.sort_by(|a, b| {
            (a.re, a.im)
                .partial_cmp(&(b.re, b.im))
                .unwrap_or(std::cmp::Ordering::Equal)
        });

        let max_root = roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
        let residual = roots
            .iter()
            .map(|&r| self.eval(r).norm())
            .fold(0.0, f64::max);
        let scale = self.max_coeff_abs() * (1.0 + max_root).powi(deg as i32);
        if residual > tol * scale {
            return Err(Error::NonConvergence { roots, residual });
        }
        Ok(RootSet { roots, residual })
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial[n={}](", self.ambient())?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.6}{:+.6}i", c.re, c.im)?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.norm() == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match k {
                0 => {}
                1 => write!(f, " z")?,
                _ => write!(f, " z^{}", k)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    coeffs: Vec<[f64; 2]>,
    ambient: usize,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialRepr {
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            ambient: self.ambient(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolynomialRepr::deserialize(deserializer)?;
        if repr.coeffs.len() > repr.ambient + 1 {
            return Err(D::Error::custom(format!(
                "{} coefficients exceed ambient degree {}",
                repr.coeffs.len(),
                repr.ambient
            )));
        }
        let mut coeffs: Vec<Complex64> = repr
            .coeffs
            .iter()
            .map(|c| Complex64::new(c[0], c[1]))
            .collect();
        coeffs.resize(repr.ambient + 1, Complex64::new(0.0, 0.0));
        Ok(Polynomial::new(coeffs))
    }
}

/// Connected components of the points under the given merge distance.
fn group_components(z: &[Complex64], tau: f64) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; z.len()];
    let mut groups = Vec::new();
    for i in 0..z.len() {
        if assigned[i] {
            continue;
        }
        let mut members = vec![i];
        assigned[i] = true;
        let mut cursor = 0;
        while cursor < members.len() {
            let anchor = members[cursor];
            for j in 0..z.len() {
                if !assigned[j] && (z[anchor] - z[j]).norm() <= tau {
                    assigned[j] = true;
                    members.push(j);
                }
            }
            cursor += 1;
        }
        groups.push(members);
    }
    groups
}

fn newton_refine(p: &Polynomial, dp: &Polynomial, mut z: Complex64) -> Complex64 {
    for _ in 0..60 {
        let d = dp.eval(z);
        if d.norm() < 1e-300 {
            break;
        }
        let step = p.eval(z) / d;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Roots of a polynomial, listed with multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Largest `|p(root)|` after refinement.
    pub residual: f64,
}

/// Exact binomial coefficient for `0 <= k <= n <= 64`.
pub fn binom(n: usize, k: usize) -> Result<u128> {
    if k > n || n > 64 {
        return Err(Error::Overflow { n, k });
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    Ok(acc)
}

pub fn binom_f64(n: usize, k: usize) -> Result<f64> {
    Ok(binom(n, k)? as f64)
}

/// All elementary symmetric polynomials `sigma_0..sigma_m` of the points, by
/// the stable product-expansion recurrence.
pub fn elem_sym_all(points: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); points.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (count, &y) in points.iter().enumerate() {
        for j in (1..=count + 1).rev() {
            let prev = e[j - 1];
            e[j] += y * prev;
        }
    }
    e
}

/// The elementary symmetric polynomial `sigma_k` of the points.
pub fn elem_sym(k: usize, points: &[Complex64]) -> Result<Complex64> {
    if k > points.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: points.len(),
        });
    }
    Ok(elem_sym_all(points)[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_quadratic_at_one() {
        // z^2 + z/2 at 1
        let p = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        assert_eq!(p.eval(c(1.0, 0.0)), c(1.5, 0.0));
    }

    #[test]
    fn eval_zero_polynomial() {
        let p = Polynomial::zero(3);
        assert_eq!(p.eval(c(7.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn eval_cubic_at_i() {
        // z^3 + z/2 at i equals -i/2
        let p = Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]);
        let v = p.eval(c(0.0, 1.0));
        assert!((v - c(0.0, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = Polynomial::from_real(&[1.0, 1.0]);
        let b = Polynomial::from_real(&[1.0, -1.0]);
        let p = a.mul(&b);
        assert_eq!(p.ambient(), 2);
        assert_eq!(p.coeffs()[0], c(1.0, 0.0));
        assert_eq!(p.coeffs()[1], c(0.0, 0.0));
        assert_eq!(p.coeffs()[2], c(-1.0, 0.0));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let p = Polynomial::new(vec![c(1.0, 2.0), c(-0.5, 0.25)]);
        let one = Polynomial::constant(c(1.0, 0.0));
        assert_eq!(p.mul(&one).coeffs(), p.coeffs());
    }

    #[test]
    fn mul_two_linear_factors() {
        let p = Polynomial::from_roots(&[c(1.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(p.coeffs()[0], c(2.0, 0.0));
        assert_eq!(p.coeffs()[1], c(-3.0, 0.0));
        assert_eq!(p.coeffs()[2], c(1.0, 0.0));
    }

    #[test]
    fn compose_square_with_shift() {
        let f = Polynomial::from_real(&[0.0, 0.0, 1.0]);
        let q = Polynomial::from_real(&[1.0, 1.0]);
        let r = f.compose(&q);
        assert_eq!(r.ambient(), 2);
        assert_eq!(r.coeffs()[0], c(1.0, 0.0));
        assert_eq!(r.coeffs()[1], c(2.0, 0.0));
        assert_eq!(r.coeffs()[2], c(1.0, 0.0));
    }

    #[test]
    fn compose_with_identity() {
        let f = Polynomial::from_real(&[0.0, 1.0]);
        let q = Polynomial::new(vec![c(0.3, -0.2), c(1.0, 1.0), c(0.0, 2.0)]);
        let r = f.compose(&q);
        assert_eq!(r.coeffs(), q.coeffs());
    }

    #[test]
    fn compose_quartic_expansion() {
        // (z^2 + z/2)^2 + 1 = z^4 + z^3 + z^2/4 + 1
        let f = Polynomial::from_real(&[1.0, 0.0, 1.0]);
        let q = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        let r = f.compose(&q);
        assert_eq!(r.ambient(), 4);
        let expect = [1.0, 0.0, 0.25, 1.0, 1.0];
        for (k, &e) in expect.iter().enumerate() {
            assert!((r.coeff(k) - c(e, 0.0)).norm() < 1e-15, "coeff {}", k);
        }
    }

    #[test]
    fn sharp_of_z_at_ambient_two() {
        let p = Polynomial::from_real(&[0.0, 1.0, 0.0]);
        assert_eq!(p.sharp().coeffs(), p.coeffs());
    }

    #[test]
    fn sharp_of_constant_i_at_ambient_one() {
        let p = Polynomial::new(vec![c(0.0, 1.0), c(0.0, 0.0)]);
        let s = p.sharp();
        assert_eq!(s.coeff(0), c(0.0, 0.0));
        assert_eq!(s.coeff(1), c(0.0, -1.0));
    }

    #[test]
    fn sharp_check_maps_monic_roots_to_reciprocal_form() {
        // ((z - a)(z - b))^{#v} = (1 + conj(a) z)(1 + conj(b) z)
        let (a, b) = (c(0.3, 0.7), c(-1.2, 0.4));
        let p = Polynomial::from_roots(&[a, b]);
        let got = p.sharp().check();
        let want = Polynomial::new(vec![c(1.0, 0.0), a.conj()])
            .mul(&Polynomial::new(vec![c(1.0, 0.0), b.conj()]));
        for k in 0..=2 {
            assert!((got.coeff(k) - want.coeff(k)).norm() < 1e-15, "coeff {}", k);
        }
    }

    #[test]
    fn check_alternates_signs() {
        let p = Polynomial::from_real(&[1.0, 1.0, 1.0]);
        let q = p.check();
        assert_eq!(q.coeff(0), c(1.0, 0.0));
        assert_eq!(q.coeff(1), c(-1.0, 0.0));
        assert_eq!(q.coeff(2), c(1.0, 0.0));
        let cube = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]);
        assert_eq!(cube.check().coeff(3), c(-1.0, 0.0));
    }

    #[test]
    fn roots_of_z_squared_plus_one() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]);
        let rs = p.roots(1e-9).unwrap();
        assert_eq!(rs.roots.len(), 2);
        let mut found: Vec<f64> = rs.roots.iter().map(|r| r.im).collect();
        found.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((found[0] + 1.0).abs() < 1e-10);
        assert!((found[1] - 1.0).abs() < 1e-10);
        assert!(rs.roots.iter().all(|r| r.re.abs() < 1e-10));
    }

    #[test]
    fn roots_of_shifted_square() {
        let p = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        let rs = p.roots(1e-9).unwrap();
        let mut re: Vec<f64> = rs.roots.iter().map(|r| r.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((re[0] + 0.5).abs() < 1e-10);
        assert!(re[1].abs() < 1e-10);
    }

    #[test]
    fn roots_triple_root_reported_with_multiplicity() {
        let p = Polynomial::from_roots(&[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let rs = p.roots(1e-9).unwrap();
        assert_eq!(rs.roots.len(), 3);
        for r in &rs.roots {
            assert!((r - c(1.0, 0.0)).norm() < 1e-4);
        }
        // All three collapsed onto one representative.
        assert_eq!(rs.roots[0], rs.roots[1]);
        assert_eq!(rs.roots[1], rs.roots[2]);
    }

    #[test]
    fn roots_of_zero_polynomial_is_an_error() {
        let p = Polynomial::zero(4);
        assert_eq!(p.roots(1e-9), Err(Error::AllCoefficientsZero));
    }

    #[test]
    fn roots_of_constant_is_empty() {
        let p = Polynomial::constant(c(3.0, 0.0));
        let rs = p.roots(1e-9).unwrap();
        assert!(rs.roots.is_empty());
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(Polynomial::from_real(&[-4.0, 0.0, 1.0]).cauchy_bound(), 5.0);
        assert_eq!(Polynomial::from_real(&[0.0, 1.0, 0.0, 1.0]).cauchy_bound(), 2.0);
        assert_eq!(Polynomial::monomial(c(1.0, 0.0), 5).cauchy_bound(), 1.0);
    }

    #[test]
    fn elem_sym_examples() {
        let pts = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert_eq!(elem_sym(0, &pts).unwrap(), c(1.0, 0.0));
        assert_eq!(elem_sym(2, &pts).unwrap(), c(11.0, 0.0));
        let y = c(0.4, -1.3);
        let diag = [y, y, y];
        assert!((elem_sym(3, &diag).unwrap() - y * y * y).norm() < 1e-14);
        assert!(elem_sym(4, &pts).is_err());
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(6, 3).unwrap(), 20);
        assert_eq!(binom(6, 2).unwrap(), 15);
        assert_eq!(binom(17, 0).unwrap(), 1);
        assert_eq!(binom(64, 32).unwrap(), 1_832_624_140_942_590_534);
        assert!(binom(65, 1).is_err());
        assert!(binom(4, 5).is_err());
    }

    #[test]
    fn degree_trimming_ignores_float_dust() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1e-16, 0.0)]);
        assert_eq!(p.exact_degree(), Some(1));
        assert_eq!(p.trimmed().ambient(), 1);
    }

    #[test]
    fn json_round_trip() {
        let p = Polynomial::new(vec![c(1.0, -2.0), c(0.5, 0.0), c(0.0, 0.0)]);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"ambient\":2"));
        let q: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        // Short coefficient lists pad with zeros up to the ambient degree.
        let r: Polynomial = serde_json::from_str(r#"{"coeffs":[[1.0,0.0]],"ambient":3}"#).unwrap();
        assert_eq!(r.ambient(), 3);
        assert_eq!(r.coeff(3), c(0.0, 0.0));
    }
}
