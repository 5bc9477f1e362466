//! Circular domains, fiber-count classification and the Schur-Cohn test.
//!
//! A circular domain is a disk or halfplane, or the complement of one,
//! represented by the Hermitian form `A|z|^2 + 2 Re(B z) + C` together with
//! a strict/closed flag. For a monic map `q` the full-fiber pushforward
//! `q_o(D)` collects the points whose entire fiber lies in `D`; more
//! generally a point is classified by how many of its `d` preimages fall in
//! `D`, counted with multiplicity. Membership of all roots in the open unit
//! disk is decided algebraically by positive definiteness of the Schur-Cohn
//! matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Tolerance handed to the root finder when classifying fibers.
const FIBER_ROOT_TOL: f64 = 1e-9;

/// The set `A |z|^2 + 2 Re(B z) + C < 0` (strict) or `<= 0` (closed).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircularDomain {
    pub a: f64,
    pub b: Complex64,
    pub c: f64,
    pub strict: bool,
}

impl CircularDomain {
    /// Validates that the form changes sign, so the set is neither empty
    /// nor all of the plane. For `A != 0` this amounts to `|B|^2 > AC`; for
    /// `A = 0` it requires `B != 0`.
    pub fn new(a: f64, b: Complex64, c: f64, strict: bool) -> Result<CircularDomain> {
        let ok = if a == 0.0 {
            b.norm_sqr() > 0.0
        } else {
            b.norm_sqr() > a * c
        };
        if !ok {
            return Err(Error::InvalidDomain);
        }
        Ok(CircularDomain { a, b, c, strict })
    }

    /// Open disk `|z - center| < radius`.
    pub fn open_disk(center: Complex64, radius: f64) -> CircularDomain {
        CircularDomain {
            a: 1.0,
            b: -center.conj(),
            c: center.norm_sqr() - radius * radius,
            strict: true,
        }
    }

    pub fn closed_disk(center: Complex64, radius: f64) -> CircularDomain {
        CircularDomain {
            strict: false,
            ..Self::open_disk(center, radius)
        }
    }

    pub fn open_unit_disk() -> CircularDomain {
        Self::open_disk(Complex64::new(0.0, 0.0), 1.0)
    }

    /// Open halfplane `2 Re(B z) + C < 0`.
    pub fn halfplane(b: Complex64, c: f64) -> CircularDomain {
        CircularDomain {
            a: 0.0,
            b,
            c,
            strict: true,
        }
    }

    /// Complement: the form is negated and the strict flag toggled, so an
    /// open set becomes the closed complement.
    pub fn complement(&self) -> CircularDomain {
        CircularDomain {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            strict: !self.strict,
        }
    }

    pub fn form(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + 2.0 * (self.b * z).re + self.c
    }

    /// Magnitude scale of the form terms at `z`, for relative boundary
    /// guards.
    pub fn form_scale(&self, z: Complex64) -> f64 {
        self.a.abs() * z.norm_sqr() + 2.0 * self.b.norm() * z.norm() + self.c.abs()
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let v = self.form(z);
        if self.strict {
            v < 0.0
        } else {
            v <= 0.0
        }
    }

    /// Euclidean distance from `z` to the boundary circle or line.
    pub fn boundary_distance(&self, z: Complex64) -> f64 {
        if self.a != 0.0 {
            let center = -self.b.conj() / self.a;
            let rad_sq = (self.b.norm_sqr() - self.a * self.c) / (self.a * self.a);
            if rad_sq <= 0.0 {
                return f64::INFINITY;
            }
            ((z - center).norm() - rad_sq.sqrt()).abs()
        } else if self.b.norm() > 0.0 {
            self.form(z).abs() / (2.0 * self.b.norm())
        } else {
            f64::INFINITY
        }
    }

    /// Whether `z` lies in the domain with at least the given distance to
    /// the boundary.
    pub fn contains_with_margin(&self, z: Complex64, margin: f64) -> bool {
        self.contains(z) && self.boundary_distance(z) >= margin
    }

    /// Center and radius when the boundary is a circle.
    pub fn boundary_circle(&self) -> Option<(Complex64, f64)> {
        if self.a == 0.0 {
            return None;
        }
        let center = -self.b.conj() / self.a;
        let rad_sq = (self.b.norm_sqr() - self.a * self.c) / (self.a * self.a);
        if rad_sq <= 0.0 {
            return None;
        }
        Some((center, rad_sq.sqrt()))
    }
}

/// Membership of all `d` fiber points of one value against a domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FiberCount {
    Exact(usize),
    /// Some fiber point was too close to the boundary to call.
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberClass {
    pub count: FiberCount,
    /// Smallest distance of any fiber point to the boundary.
    pub margin: f64,
}

/// Tri-state membership in the full-fiber region `q_o(D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    Boundary,
}

/// Counts the preimages of `u` under `q` that lie in `D`, with
/// multiplicity. A preimage whose form value is within `guard` of zero
/// (relative to the form's term scale) makes the count indeterminate.
pub fn fiber_class(
    q: &Polynomial,
    domain: &CircularDomain,
    u: Complex64,
    guard: f64,
) -> Result<FiberClass> {
    let (q, _d) = crate::pullback::ensure_monic(q)?;
    let shifted = q.sub(&Polynomial::constant(u));
    let roots = shifted.roots(FIBER_ROOT_TOL)?;
    let mut count = 0usize;
    let mut indeterminate = false;
    let mut margin = f64::INFINITY;
    for &z in &roots.roots {
        margin = margin.min(domain.boundary_distance(z));
        let v = domain.form(z);
        if v.abs() <= guard * domain.form_scale(z).max(f64::MIN_POSITIVE) {
            indeterminate = true;
        } else if domain.contains(z) {
            count += 1;
        }
    }
    Ok(FiberClass {
        count: if indeterminate {
            FiberCount::Indeterminate
        } else {
            FiberCount::Exact(count)
        },
        margin,
    })
}

/// Whether `u` lies in `q_o(D)`, i.e. whether its full fiber is in `D`.
pub fn in_q_circ(
    q: &Polynomial,
    domain: &CircularDomain,
    u: Complex64,
    guard: f64,
) -> Result<Membership> {
    let (_, d) = crate::pullback::ensure_monic(q)?;
    let class = fiber_class(q, domain, u, guard)?;
    Ok(match class.count {
        FiberCount::Indeterminate => Membership::Boundary,
        FiberCount::Exact(k) if k == d => Membership::In,
        FiberCount::Exact(_) => Membership::Out,
    })
}

/// Hermitian matrix with conjugate symmetry exact by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Wraps raw row-major entries; intended for tests and fixtures.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> HermitianMatrix {
        assert_eq!(entries.len(), dim * dim);
        HermitianMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.entries[j * self.dim + k]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|j| self.get(j, j).re).sum()
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|j| (j..self.dim).all(|k| self.get(j, k) == self.get(k, j).conj()))
    }
}

/// Schur-Cohn matrix of a monic map: the coefficients `a_jk` of
/// `(q#(x) conj(q#(conj y)) - q(x) conj(q(conj y))) / (1 - xy)`.
///
/// Division by `1 - xy` is the recurrence `a_jk = N_jk + a_(j-1)(k-1)` on
/// the numerator coefficients. All roots of `q` lie in the open unit disk
/// exactly when this matrix is positive definite.
pub fn schur_cohn(q: &Polynomial) -> Result<HermitianMatrix> {
    let (q, d) = crate::pullback::ensure_monic(q)?;
    let numerator = |j: usize, k: usize| -> Complex64 {
        q.coeff(d - j).conj() * q.coeff(d - k) - q.coeff(j) * q.coeff(k).conj()
    };
    let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
    for j in 0..d {
        for k in 0..d {
            let prev = if j > 0 && k > 0 {
                entries[(j - 1) * d + (k - 1)]
            } else {
                Complex64::new(0.0, 0.0)
            };
            entries[j * d + k] = numerator(j, k) + prev;
        }
    }
    Ok(HermitianMatrix { dim: d, entries })
}

/// Positive definiteness by Hermitian Cholesky: every pivot must exceed
/// `tol * trace / dim`.
pub fn is_positive_definite(h: &HermitianMatrix, tol: f64) -> Result<bool> {
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = h.dim();
    let threshold = tol * h.trace() / n as f64;
    let mut l = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut pivot = h.get(j, j).re;
        for k in 0..j {
            pivot -= l[j * n + k].norm_sqr();
        }
        if pivot <= threshold {
            return Ok(false);
        }
        let ljj = pivot.sqrt();
        l[j * n + j] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut acc = h.get(i, j);
            for k in 0..j {
                acc -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = acc / ljj;
        }
    }
    Ok(true)
}

/// Outcome of the emptiness scan for the full-fiber region over the unit
/// disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScanOutcome {
    NonemptyWitness(Complex64),
    EmptyUpToGrid,
}

/// Scans shifts `lambda` for one with `SC(q - lambda)` positive definite,
/// over a grid on the square of half-width `sum |b_j|` (which contains the
/// image of the closed unit disk, so no witness lies outside it). The
/// center of the square is tried first. Emptiness is certified only up to
/// the grid resolution.
pub fn q_circ_empty_scan(q: &Polynomial, resolution: usize) -> Result<ScanOutcome> {
    let (q, d) = crate::pullback::ensure_monic(q)?;
    let width: f64 = (0..=d).map(|j| q.coeff(j).norm()).sum();
    let pd_at = |lambda: Complex64| -> Result<bool> {
        let shifted = q.sub(&Polynomial::constant(lambda));
        is_positive_definite(&schur_cohn(&shifted)?, 1e-12)
    };
    if pd_at(Complex64::new(0.0, 0.0))? {
        return Ok(ScanOutcome::NonemptyWitness(Complex64::new(0.0, 0.0)));
    }
    for iy in 0..resolution {
        let y = -width + (iy as f64 + 0.5) * 2.0 * width / resolution as f64;
        for ix in 0..resolution {
            let x = -width + (ix as f64 + 0.5) * 2.0 * width / resolution as f64;
            let lambda = Complex64::new(x, y);
            if pd_at(lambda)? {
                return Ok(ScanOutcome::NonemptyWitness(lambda));
            }
        }
    }
    Ok(ScanOutcome::EmptyUpToGrid)
}

/// Window half-length used to clip halfplane boundaries when sampling.
const HALFPLANE_WINDOW: f64 = 8.0;

/// `m` images `q(z_i)` of points parameterizing the boundary of `D`:
/// uniformly by angle for a circle, by arclength over a clipped window for
/// a line.
pub fn boundary_samples(
    q: &Polynomial,
    domain: &CircularDomain,
    m: usize,
) -> Result<Vec<Complex64>> {
    let points = boundary_points(domain, m)?;
    Ok(points.into_iter().map(|z| q.eval(z)).collect())
}

/// Boundary parameterization used by [`boundary_samples`].
pub fn boundary_points(domain: &CircularDomain, m: usize) -> Result<Vec<Complex64>> {
    if domain.a != 0.0 {
        let (center, radius) = domain.boundary_circle().ok_or(Error::DegenerateBoundary)?;
        Ok((0..m)
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                center + Complex64::from_polar(radius, theta)
            })
            .collect())
    } else {
        if domain.b.norm() == 0.0 {
            return Err(Error::DegenerateBoundary);
        }
        // Line 2 Re(B z) + C = 0: foot of the perpendicular from the origin
        // plus multiples of the tangential direction.
        let foot = -domain.c * domain.b.conj() / (2.0 * domain.b.norm_sqr());
        let tangent = Complex64::new(0.0, 1.0) * domain.b.conj() / domain.b.norm();
        Ok((0..m)
            .map(|i| {
                let s =
                    -HALFPLANE_WINDOW + 2.0 * HALFPLANE_WINDOW * i as f64 / (m.max(2) - 1) as f64;
                foot + tangent * s
            })
            .collect())
    }
}

/// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bbox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Bbox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Bbox {
        Bbox { x0, y0, x1, y1 }
    }
}

/// Row-major grid of fiber classes; row 0 is the top (largest `y`).
#[derive(Clone, Debug)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub bbox: Bbox,
    pub cells: Vec<FiberClass>,
}

impl Raster {
    pub fn get(&self, row: usize, col: usize) -> FiberClass {
        self.cells[row * self.width + col]
    }

    /// Number of pixels with exactly `k` fiber points in the domain.
    pub fn count_pixels(&self, k: usize) -> usize {
        self.cells
            .iter()
            .filter(|c| c.count == FiberCount::Exact(k))
            .count()
    }

    pub fn indeterminate_pixels(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.count == FiberCount::Indeterminate)
            .count()
    }
}

/// Classifies pixel centers of the bbox by fiber count. Pixels are
/// independent; the grid is `resolution x resolution`.
pub fn classify_raster(
    q: &Polynomial,
    domain: &CircularDomain,
    bbox: Bbox,
    resolution: usize,
    guard: f64,
) -> Result<Raster> {
    let cells = raster_cells(bbox, resolution)
        .map(|u| fiber_class(q, domain, u, guard))
        .collect::<Result<Vec<_>>>()?;
    Ok(Raster {
        width: resolution,
        height: resolution,
        bbox,
        cells,
    })
}

/// Classifies pixels `z` of the bbox by the fiber count of `q(z)`,
/// rendering the preimages of the fiber-count regions.
pub fn classify_preimage_raster(
    q: &Polynomial,
    domain: &CircularDomain,
    bbox: Bbox,
    resolution: usize,
    guard: f64,
) -> Result<Raster> {
    let cells = raster_cells(bbox, resolution)
        .map(|z| fiber_class(q, domain, q.eval(z), guard))
        .collect::<Result<Vec<_>>>()?;
    Ok(Raster {
        width: resolution,
        height: resolution,
        bbox,
        cells,
    })
}

fn raster_cells(bbox: Bbox, resolution: usize) -> impl Iterator<Item = Complex64> {
    let dx = (bbox.x1 - bbox.x0) / resolution as f64;
    let dy = (bbox.y1 - bbox.y0) / resolution as f64;
    (0..resolution).flat_map(move |row| {
        (0..resolution).map(move |col| {
            Complex64::new(
                bbox.x0 + (col as f64 + 0.5) * dx,
                bbox.y1 - (row as f64 + 0.5) * dy,
            )
        })
    })
}

/// Hard-coded real algebraic curves from the worked quadratic and cubic
/// examples, used as fixtures for the boundary samplers.
#[derive(Clone, Debug)]
pub struct CurveFixture {
    pub name: &'static str,
    /// Terms `(i, j, c)` of `sum c x^i y^j`.
    pub terms: Vec<(u32, u32, f64)>,
}

impl CurveFixture {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(i, j, c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// Image of the unit circle under `z^2 + z/2`: a real quartic.
    pub fn quartic_image() -> CurveFixture {
        CurveFixture {
            name: "quartic-image-of-unit-circle-under-z2+z/2",
            terms: vec![
                (4, 0, 4.0),
                (0, 4, 4.0),
                (2, 2, 8.0),
                (2, 0, -9.0),
                (0, 2, -9.0),
                (1, 0, -2.0),
                (0, 0, 3.0),
            ],
        }
    }

    /// Image of the unit circle under `z^3 + z/2`: a real sextic.
    pub fn sextic_image() -> CurveFixture {
        CurveFixture {
            name: "sextic-image-of-unit-circle-under-z3+z/2",
            terms: vec![
                (6, 0, 16.0),
                (4, 2, 48.0),
                (4, 0, -52.0),
                (2, 4, 48.0),
                (2, 2, -104.0),
                (2, 0, 40.0),
                (0, 6, 16.0),
                (0, 4, -52.0),
                (0, 2, 48.0),
                (0, 0, -9.0),
            ],
        }
    }

    /// The degree-8 component of the preimage of the sextic under
    /// `z^3 + z/2` (the other component is the unit circle itself).
    pub fn octic_preimage() -> CurveFixture {
        CurveFixture {
            name: "octic-preimage-component-under-z3+z/2",
            terms: vec![
                (8, 0, 16.0),
                (6, 0, 16.0),
                (6, 2, 64.0),
                (4, 4, 96.0),
                (4, 2, -16.0),
                (4, 0, 8.0),
                (2, 6, 64.0),
                (2, 4, -80.0),
                (2, 2, -16.0),
                (2, 0, -28.0),
                (0, 8, 16.0),
                (0, 6, -48.0),
                (0, 4, 40.0),
                (0, 2, -12.0),
                (0, 0, 9.0),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_disk() -> CircularDomain {
        CircularDomain::open_unit_disk()
    }

    #[test]
    fn unit_disk_membership() {
        let d = unit_disk();
        assert!(d.contains(c(0.0, 0.0)));
        assert!(!d.contains(c(1.0, 0.0)));
        let closed = CircularDomain::closed_disk(c(0.0, 0.0), 1.0);
        assert!(closed.contains(c(1.0, 0.0)));
        assert!(d.complement().contains(c(2.0, 0.0)));
    }

    #[test]
    fn complement_is_involutive_on_the_form() {
        let d = CircularDomain::open_disk(c(0.3, -0.4), 2.0);
        let cc = d.complement().complement();
        assert_eq!(cc, d);
        // Re z < 0 has complement Re z >= 0.
        let hp = CircularDomain::halfplane(c(1.0, 0.0), 0.0);
        let comp = hp.complement();
        assert!(!comp.strict);
        assert!(comp.contains(c(0.0, 0.0)));
        assert!(comp.contains(c(1.0, 0.0)));
        assert!(!comp.contains(c(-1.0, 0.0)));
    }

    #[test]
    fn invalid_domains_are_rejected() {
        // Form -|z|^2 - 1 is negative everywhere: the whole plane.
        assert!(CircularDomain::new(-1.0, c(0.0, 0.0), -1.0, true).is_err());
        // Form |z|^2 + 1 never changes sign either.
        assert!(CircularDomain::new(1.0, c(0.0, 0.0), 1.0, true).is_err());
        assert!(CircularDomain::new(0.0, c(0.0, 0.0), 1.0, true).is_err());
        assert!(CircularDomain::new(1.0, c(0.0, 0.0), -1.0, true).is_ok());
    }

    #[test]
    fn fiber_of_double_root_at_zero() {
        let q = Polynomial::from_real(&[0.0, 0.0, 1.0]);
        let class = fiber_class(&q, &unit_disk(), c(0.0, 0.0), 1e-9).unwrap();
        assert_eq!(class.count, FiberCount::Exact(2));
    }

    #[test]
    fn fiber_of_shifted_square_at_zero() {
        let q = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        let class = fiber_class(&q, &unit_disk(), c(0.0, 0.0), 1e-9).unwrap();
        assert_eq!(class.count, FiberCount::Exact(2));
        assert_eq!(
            in_q_circ(&q, &unit_disk(), c(0.0, 0.0), 1e-9).unwrap(),
            Membership::In
        );
    }

    #[test]
    fn fiber_with_one_escaped_preimage() {
        // u = q(0.9); the companion preimage is -0.5 - 0.9 = -1.4.
        let q = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        let u = q.eval(c(0.9, 0.0));
        let class = fiber_class(&q, &unit_disk(), u, 1e-9).unwrap();
        assert_eq!(class.count, FiberCount::Exact(1));
    }

    #[test]
    fn power_map_pushforward_is_the_shifted_disk() {
        // q = z^d + c: membership in the full-fiber region is |u - c| < 1.
        let shift = c(-1.0, 1.0);
        let q = Polynomial::new(vec![shift, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let mut rng = SplitMix64::new(17);
        for _ in 0..40 {
            let u = shift + rng.next_complex_in_disk(1.6);
            let want = if (u - shift).norm() < 1.0 - 1e-6 {
                Membership::In
            } else if (u - shift).norm() > 1.0 + 1e-6 {
                Membership::Out
            } else {
                continue;
            };
            assert_eq!(in_q_circ(&q, &unit_disk(), u, 1e-9).unwrap(), want);
        }
    }

    #[test]
    fn schur_cohn_of_cubic_family() {
        // q = z^3 + z/2 gives rows (1, 0, 1/2), (0, 3/4, 0), (1/2, 0, 1).
        let q = Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]);
        let sc = schur_cohn(&q).unwrap();
        assert_eq!(sc.get(0, 0), c(1.0, 0.0));
        assert_eq!(sc.get(0, 1), c(0.0, 0.0));
        assert_eq!(sc.get(0, 2), c(0.5, 0.0));
        assert_eq!(sc.get(1, 0), c(0.0, 0.0));
        assert_eq!(sc.get(1, 1), c(0.75, 0.0));
        assert_eq!(sc.get(1, 2), c(0.0, 0.0));
        assert_eq!(sc.get(2, 0), c(0.5, 0.0));
        assert_eq!(sc.get(2, 2), c(1.0, 0.0));
        assert!(sc.is_hermitian());
        assert!(is_positive_definite(&sc, 1e-12).unwrap());
    }

    #[test]
    fn schur_cohn_of_linear_map() {
        // q = z - lambda: the 1x1 matrix [1 - |lambda|^2].
        let lambda = c(0.3, -0.8);
        let q = Polynomial::new(vec![-lambda, c(1.0, 0.0)]);
        let sc = schur_cohn(&q).unwrap();
        assert_eq!(sc.dim(), 1);
        assert!((sc.get(0, 0) - c(1.0 - lambda.norm_sqr(), 0.0)).norm() < 1e-15);
        assert!(is_positive_definite(&sc, 1e-12).unwrap());
        let outside = Polynomial::new(vec![c(-2.0, 0.0), c(1.0, 0.0)]);
        assert!(!is_positive_definite(&schur_cohn(&outside).unwrap(), 1e-12).unwrap());
    }

    #[test]
    fn schur_cohn_is_hermitian_for_random_maps() {
        let mut rng = SplitMix64::new(91);
        for _ in 0..20 {
            let d = 1 + (rng.next_u64() % 5) as usize;
            let mut qc: Vec<Complex64> = (0..d).map(|_| rng.next_complex_in_disk(2.0)).collect();
            qc.push(c(1.0, 0.0));
            let sc = schur_cohn(&Polynomial::new(qc)).unwrap();
            assert!(sc.is_hermitian());
        }
    }

    #[test]
    fn zero_matrix_is_not_positive_definite() {
        let h = HermitianMatrix::from_entries(2, vec![c(0.0, 0.0); 4]);
        assert!(!is_positive_definite(&h, 1e-12).unwrap());
    }

    #[test]
    fn pd_rejects_non_hermitian_input() {
        let h = HermitianMatrix::from_entries(
            2,
            vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        );
        assert_eq!(is_positive_definite(&h, 1e-12), Err(Error::NotHermitian));
    }

    #[test]
    fn scan_finds_witness_for_small_gamma() {
        let q = Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]);
        match q_circ_empty_scan(&q, 20).unwrap() {
            ScanOutcome::NonemptyWitness(l) => assert_eq!(l, c(0.0, 0.0)),
            ScanOutcome::EmptyUpToGrid => panic!("expected witness"),
        }
    }

    #[test]
    fn scan_reports_empty_for_gamma_one() {
        let q = Polynomial::from_real(&[0.0, 1.0, 0.0, 1.0]);
        assert_eq!(
            q_circ_empty_scan(&q, 40).unwrap(),
            ScanOutcome::EmptyUpToGrid
        );
    }

    #[test]
    fn scan_witness_for_pure_power() {
        let q = Polynomial::from_real(&[0.0, 0.0, 0.0, 0.0, 1.0]);
        match q_circ_empty_scan(&q, 10).unwrap() {
            ScanOutcome::NonemptyWitness(l) => {
                assert_eq!(l, c(0.0, 0.0));
                let class = fiber_class(&q, &unit_disk(), l, 1e-9).unwrap();
                assert_eq!(class.count, FiberCount::Exact(4));
            }
            ScanOutcome::EmptyUpToGrid => panic!("expected witness"),
        }
    }

    #[test]
    fn boundary_samples_hit_the_quartic_fixture() {
        let q = Polynomial::from_real(&[0.0, 0.5, 1.0]);
        let fixture = CurveFixture::quartic_image();
        // Spot value: q(1) = 1.5 lies on the curve.
        assert!(fixture.eval(1.5, 0.0).abs() < 1e-12);
        for w in boundary_samples(&q, &unit_disk(), 64).unwrap() {
            assert!(fixture.eval(w.re, w.im).abs() < 1e-9, "point {}", w);
        }
    }

    #[test]
    fn boundary_samples_hit_the_sextic_fixture() {
        let q = Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]);
        let fixture = CurveFixture::sextic_image();
        // q(i) = -i/2 lies on the curve.
        assert!(fixture.eval(0.0, -0.5).abs() < 1e-12);
        for w in boundary_samples(&q, &unit_disk(), 64).unwrap() {
            assert!(fixture.eval(w.re, w.im).abs() < 1e-9, "point {}", w);
        }
    }

    #[test]
    fn companion_preimages_lie_on_the_octic_fixture() {
        let q = Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]);
        let fixture = CurveFixture::octic_preimage();
        for i in 0..32 {
            let theta = 2.0 * std::f64::consts::PI * (i as f64 + 0.37) / 32.0;
            let z0 = Complex64::from_polar(1.0, theta);
            let u = q.eval(z0);
            let shifted = q.sub(&Polynomial::constant(u));
            for root in shifted.roots(1e-10).unwrap().roots {
                if (root - z0).norm() < 1e-6 {
                    continue;
                }
                assert!(
                    fixture.eval(root.re, root.im).abs() < 1e-7,
                    "root {} of fiber over {}",
                    root,
                    u
                );
            }
        }
    }

    #[test]
    fn identity_map_boundary_samples_stay_on_boundary() {
        let q = Polynomial::from_real(&[0.0, 1.0]);
        let d = CircularDomain::open_disk(c(0.5, -0.25), 1.5);
        for w in boundary_samples(&q, &d, 32).unwrap() {
            assert!(d.boundary_distance(w) < 1e-12);
        }
        let hp = CircularDomain::halfplane(c(1.0, 1.0), 0.5);
        for w in boundary_samples(&q, &hp, 32).unwrap() {
            assert!(hp.boundary_distance(w) < 1e-12);
        }
    }

    #[test]
    fn degenerate_boundaries_are_rejected() {
        let point_disk = CircularDomain {
            a: 1.0,
            b: c(0.0, 0.0),
            c: 0.0,
            strict: true,
        };
        assert!(matches!(
            boundary_samples(&Polynomial::from_real(&[0.0, 1.0]), &point_disk, 8),
            Err(Error::DegenerateBoundary)
        ));
    }

    #[test]
    fn identity_map_raster_recovers_domain_membership() {
        let q = Polynomial::from_real(&[0.0, 1.0]);
        let d = unit_disk();
        let raster = classify_raster(&q, &d, Bbox::new(-1.5, -1.5, 1.5, 1.5), 40, 1e-9).unwrap();
        for row in 0..40 {
            for col in 0..40 {
                let cell = raster.get(row, col);
                let x = -1.5 + (col as f64 + 0.5) * 3.0 / 40.0;
                let y = 1.5 - (row as f64 + 0.5) * 3.0 / 40.0;
                match cell.count {
                    FiberCount::Exact(k) => {
                        let want = usize::from(d.contains(c(x, y)));
                        assert_eq!(k, want, "pixel ({}, {})", row, col);
                    }
                    FiberCount::Indeterminate => {}
                }
            }
        }
    }

    #[test]
    fn duality_of_fiber_counts() {
        let mut rng = SplitMix64::new(1234);
        let d_dom = unit_disk();
        let comp = d_dom.complement();
        for _ in 0..200 {
            let deg = 1 + (rng.next_u64() % 4) as usize;
            let mut qc: Vec<Complex64> = (0..deg).map(|_| rng.next_complex_in_disk(1.5)).collect();
            qc.push(c(1.0, 0.0));
            let q = Polynomial::new(qc);
            let u = rng.next_complex_in_disk(2.5);
            let a = fiber_class(&q, &d_dom, u, 1e-9).unwrap();
            let b = fiber_class(&q, &comp, u, 1e-9).unwrap();
            if let (FiberCount::Exact(ka), FiberCount::Exact(kb)) = (a.count, b.count) {
                assert_eq!(ka + kb, deg, "q = {:?}, u = {}", q, u);
            }
        }
    }
}
