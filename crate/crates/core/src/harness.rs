//! Randomized empirical certification of the classical and relative Grace
//! and Walsh statements.
//!
//! Each verifier runs seeded independent trials: it draws polynomials with
//! constrained zeros, builds an apolar partner by solving the single linear
//! bracket condition, and checks the zero-location conclusion with a
//! boundary guard. Trials that cannot be set up (rejection sampling
//! exhausted, degenerate draws, roots too close to a boundary to call) are
//! skipped and counted, never silently dropped. Identical seeds reproduce
//! reports bit for bit.

use num_complex::Complex64;
use serde::Serialize;

use crate::apolarity::fischer_norm;
use crate::error::{Error, Result};
use crate::poly::{binom_f64, Polynomial};
use crate::pullback::{ensure_monic, fiber_product, s_eval, t_apply};
use crate::regions::{fiber_class, in_q_circ, CircularDomain, FiberCount, Membership};
use crate::rng::SplitMix64;

/// Interior margin targeted when sampling points of open or closed regions.
const SAMPLING_MARGIN: f64 = 1e-6;

/// Boundary guard when classifying conclusions.
const VERDICT_GUARD: f64 = 1e-9;

/// Rejection budget per sampled point.
const MAX_REJECTIONS: usize = 10_000;

/// Grid side for the deterministic nonemptiness pre-scan.
const WITNESS_SCAN_RESOLUTION: usize = 60;

/// Outcome counts of one verifier run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub violations: u64,
    pub indeterminate_skips: u64,
    /// Smallest margin by which a passing trial met its conclusion.
    pub worst_margin: f64,
    pub seed: u64,
}

impl TrialReport {
    fn new(seed: u64) -> TrialReport {
        TrialReport {
            trials: 0,
            violations: 0,
            indeterminate_skips: 0,
            worst_margin: f64::INFINITY,
            seed,
        }
    }

    pub fn passes(&self) -> u64 {
        self.trials - self.violations - self.indeterminate_skips
    }

    fn record_pass(&mut self, margin: f64) {
        self.worst_margin = self.worst_margin.min(margin);
    }
}

/// A point of the domain with at least the given boundary distance, drawn
/// directly per domain shape (disk, disk complement, halfplane).
fn sample_in_domain(
    domain: &CircularDomain,
    rng: &mut SplitMix64,
    margin: f64,
) -> Option<Complex64> {
    if domain.a != 0.0 {
        let (center, radius) = domain.boundary_circle()?;
        if domain.a > 0.0 {
            let r = radius - margin;
            if r <= 0.0 {
                return None;
            }
            Some(center + rng.next_complex_in_disk(r))
        } else {
            let rr = radius + margin + 4.0 * rng.next_f64();
            let theta = 2.0 * std::f64::consts::PI * rng.next_f64();
            Some(center + Complex64::from_polar(rr, theta))
        }
    } else {
        let bn = domain.b.norm();
        if bn == 0.0 {
            return None;
        }
        let foot = -domain.c * domain.b.conj() / (2.0 * bn * bn);
        let inward = -domain.b.conj() / bn;
        let tangent = Complex64::new(0.0, 1.0) * domain.b.conj() / bn;
        let s = margin + 4.0 * rng.next_f64();
        let t = rng.next_in_range(-4.0, 4.0);
        Some(foot + inward * s + tangent * t)
    }
}

/// Radius of a disk around the origin that covers the image of the
/// domain's finite reach under the map, used as the candidate window for
/// image-plane sampling. For a bounded domain this is a true bound on the
/// image; unbounded domains get a window around their finite features.
fn image_window(q: &Polynomial, d: usize, domain: &CircularDomain) -> f64 {
    let reach = match domain.boundary_circle() {
        Some((center, radius)) => {
            if domain.a > 0.0 {
                center.norm() + radius
            } else {
                center.norm() + radius + 2.0
            }
        }
        None => {
            let bn = domain.b.norm();
            let foot = if bn == 0.0 {
                1.0
            } else {
                domain.c.abs() / (2.0 * bn)
            };
            foot + 2.0
        }
    };
    (0..=d).map(|j| q.coeff(j).norm() * reach.powi(j as i32)).sum()
}

/// Rejection-samples a point whose full fiber lies in the domain with the
/// sampling margin.
fn sample_in_q_circ(
    q: &Polynomial,
    d: usize,
    domain: &CircularDomain,
    rng: &mut SplitMix64,
    window: f64,
) -> Option<Complex64> {
    for _ in 0..MAX_REJECTIONS {
        let u = rng.next_complex_in_disk(window);
        if let Ok(class) = fiber_class(q, domain, u, VERDICT_GUARD) {
            if class.count == FiberCount::Exact(d) && class.margin >= SAMPLING_MARGIN {
                return Some(u);
            }
        }
    }
    None
}

/// Rejection-samples a point with no fiber point in the domain, i.e. a
/// point outside the image of the domain.
fn sample_outside_image(
    q: &Polynomial,
    domain: &CircularDomain,
    rng: &mut SplitMix64,
    window: f64,
) -> Option<Complex64> {
    for _ in 0..MAX_REJECTIONS {
        let u = rng.next_complex_in_disk(2.0 * window);
        if let Ok(class) = fiber_class(q, domain, u, VERDICT_GUARD) {
            if class.count == FiberCount::Exact(0) && class.margin >= SAMPLING_MARGIN {
                return Some(u);
            }
        }
    }
    None
}

/// Deterministic grid scan for a witness of the full-fiber region: maps
/// grid points of the domain through `q` and tests their fibers.
pub fn q_circ_witness_scan(
    q: &Polynomial,
    domain: &CircularDomain,
    resolution: usize,
) -> Result<Option<Complex64>> {
    let (q, _d) = ensure_monic(q)?;
    let (anchor, halfwidth) = match domain.boundary_circle() {
        Some((center, radius)) => {
            if domain.a > 0.0 {
                (center, radius)
            } else {
                (center, radius + 3.0)
            }
        }
        None => {
            let bn = domain.b.norm();
            if bn == 0.0 {
                return Err(Error::DegenerateBoundary);
            }
            let foot = -domain.c * domain.b.conj() / (2.0 * bn * bn);
            (foot, 4.0)
        }
    };
    for iy in 0..resolution {
        for ix in 0..resolution {
            let z = anchor
                + Complex64::new(
                    -halfwidth + (ix as f64 + 0.5) * 2.0 * halfwidth / resolution as f64,
                    -halfwidth + (iy as f64 + 0.5) * 2.0 * halfwidth / resolution as f64,
                );
            if !domain.contains_with_margin(z, SAMPLING_MARGIN) {
                continue;
            }
            let u = q.eval(z);
            if let Ok(Membership::In) = in_q_circ(&q, domain, u, VERDICT_GUARD) {
                return Ok(Some(u));
            }
        }
    }
    Ok(None)
}

/// Solves the single linear condition `[anchor, g]_n = 0` for a random `g`
/// of exact degree `n`: all but the best-conditioned coefficient are drawn
/// from the radius-2 disk and the remaining one is solved for.
fn solve_apolar_partner(
    anchor: &Polynomial,
    n: usize,
    rng: &mut SplitMix64,
) -> Option<Polynomial> {
    let mut condition = vec![Complex64::new(0.0, 0.0); n + 1];
    for (m, slot) in condition.iter_mut().enumerate() {
        let k = n - m;
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        *slot = sign * anchor.coeff(k) / binom_f64(n, k).ok()?;
    }
    let (pivot, pivot_abs) = condition
        .iter()
        .enumerate()
        .map(|(m, c)| (m, c.norm()))
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())?;
    if pivot_abs <= 1e-12 * anchor.max_coeff_abs().max(1e-300) {
        return None;
    }
    let mut coeffs: Vec<Complex64> = (0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect();
    let rest: Complex64 = condition
        .iter()
        .zip(coeffs.iter())
        .enumerate()
        .filter(|&(m, _)| m != pivot)
        .map(|(_, (c, b))| c * b)
        .sum();
    coeffs[pivot] = -rest / condition[pivot];
    let g = Polynomial::new(coeffs);
    if g.coeff(n).norm() <= 1e-9 * g.max_coeff_abs() {
        return None;
    }
    Some(g)
}

/// How the zeros of a partner polynomial sit against a target set, with a
/// guard band around the boundary.
enum ZeroVerdict {
    /// Some zero is inside; carries the best interior margin.
    Hit(f64),
    /// No zero inside, but one was too close to the boundary to call.
    Ambiguous,
    Miss,
}

fn classify_zeros(
    zeros: &[Complex64],
    mut inside_margin: impl FnMut(Complex64) -> Option<f64>,
) -> ZeroVerdict {
    let mut best: Option<f64> = None;
    let mut ambiguous = false;
    for &z in zeros {
        match inside_margin(z) {
            Some(m) if m > VERDICT_GUARD => {
                best = Some(best.map_or(m, |b: f64| b.max(m)));
            }
            Some(_) => ambiguous = true,
            None => {}
        }
    }
    match best {
        Some(m) => ZeroVerdict::Hit(m),
        None if ambiguous => ZeroVerdict::Ambiguous,
        None => ZeroVerdict::Miss,
    }
}

/// Classical Grace certificate: a monic `f` with all `n` zeros in the
/// domain is paired with a random apolar `g`; the theorem promises `g` a
/// zero in the domain.
pub fn verify_grace_classical(
    n: usize,
    domain: &CircularDomain,
    trials: u64,
    seed: u64,
) -> TrialReport {
    let mut report = TrialReport::new(seed);
    'trial: for t in 0..trials {
        report.trials += 1;
        let mut rng = SplitMix64::for_trial(seed, t);
        let mut roots = Vec::with_capacity(n);
        for _ in 0..n {
            match sample_in_domain(domain, &mut rng, SAMPLING_MARGIN) {
                Some(z) => roots.push(z),
                None => {
                    report.indeterminate_skips += 1;
                    continue 'trial;
                }
            }
        }
        let f = Polynomial::from_roots(&roots);
        let g = match solve_apolar_partner(&f, n, &mut rng) {
            Some(g) => g,
            None => {
                report.indeterminate_skips += 1;
                continue;
            }
        };
        let zeros = match g.roots(1e-9) {
            Ok(rs) => rs.roots,
            Err(_) => {
                report.indeterminate_skips += 1;
                continue;
            }
        };
        let verdict = classify_zeros(&zeros, |z| {
            let dist = domain.boundary_distance(z);
            if domain.contains(z) {
                Some(dist)
            } else if dist <= VERDICT_GUARD {
                Some(0.0)
            } else {
                None
            }
        });
        match verdict {
            ZeroVerdict::Hit(m) => report.record_pass(m),
            ZeroVerdict::Ambiguous => report.indeterminate_skips += 1,
            ZeroVerdict::Miss => {
                report.violations += 1;
                eprintln!(
                    "grace-classical violation: trial {} f {:?} g {:?} zeros {:?}",
                    t, f, g, zeros
                );
            }
        }
    }
    report
}

/// Relative Grace certificate: `f` has its zeros in the full-fiber region
/// of the domain and `g` is `q`-apolar to it (via the pullback operator);
/// the generalized theorem promises `g` a zero in the image of the domain.
pub fn verify_grace_relative(
    q: &Polynomial,
    n: usize,
    domain: &CircularDomain,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    let (q, d) = ensure_monic(q)?;
    if q_circ_witness_scan(&q, domain, WITNESS_SCAN_RESOLUTION)?.is_none() {
        return Err(Error::EmptyRegion);
    }
    let window = image_window(&q, d, domain);
    let mut report = TrialReport::new(seed);
    'trial: for t in 0..trials {
        report.trials += 1;
        let mut rng = SplitMix64::for_trial(seed, t);
        let mut roots = Vec::with_capacity(n);
        for _ in 0..n {
            match sample_in_q_circ(&q, d, domain, &mut rng, window) {
                Some(u) => roots.push(u),
                None => {
                    report.indeterminate_skips += 1;
                    continue 'trial;
                }
            }
        }
        let f = Polynomial::from_roots(&roots);
        let anchor = t_apply(&q, n, &f)?;
        let g = match solve_apolar_partner(&anchor, n, &mut rng) {
            Some(g) => g,
            None => {
                report.indeterminate_skips += 1;
                continue;
            }
        };
        let zeros = match g.roots(1e-9) {
            Ok(rs) => rs.roots,
            Err(_) => {
                report.indeterminate_skips += 1;
                continue;
            }
        };
        let verdict = classify_zeros(&zeros, |z| match fiber_class(&q, domain, z, VERDICT_GUARD)
        {
            Ok(class) => match class.count {
                FiberCount::Exact(k) if k >= 1 => Some(class.margin),
                FiberCount::Exact(_) => None,
                FiberCount::Indeterminate => Some(0.0),
            },
            Err(_) => Some(0.0),
        });
        match verdict {
            ZeroVerdict::Hit(m) => report.record_pass(m),
            ZeroVerdict::Ambiguous => report.indeterminate_skips += 1,
            ZeroVerdict::Miss => {
                report.violations += 1;
                eprintln!(
                    "grace-relative violation: trial {} q {:?} f {:?} g {:?} zeros {:?}",
                    t, q, f, g, zeros
                );
            }
        }
    }
    Ok(report)
}

/// Relative Walsh certificate: `f` has no zeros in the image of the
/// domain; then the multi-point form must not vanish on tuples from the
/// full-fiber region, and the pullback image of `f` has no zeros there
/// either.
pub fn verify_walsh_relative(
    q: &Polynomial,
    n: usize,
    domain: &CircularDomain,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    let (q, d) = ensure_monic(q)?;
    if q_circ_witness_scan(&q, domain, WITNESS_SCAN_RESOLUTION)?.is_none() {
        return Err(Error::EmptyRegion);
    }
    let window = image_window(&q, d, domain);
    let nd = n * d;
    let mut report = TrialReport::new(seed);
    'trial: for t in 0..trials {
        report.trials += 1;
        let mut rng = SplitMix64::for_trial(seed, t);
        let mut f_roots = Vec::with_capacity(n);
        for _ in 0..n {
            match sample_outside_image(&q, domain, &mut rng, window) {
                Some(u) => f_roots.push(u),
                None => {
                    report.indeterminate_skips += 1;
                    continue 'trial;
                }
            }
        }
        let f = Polynomial::from_roots(&f_roots);
        let mut u = Vec::with_capacity(n);
        for _ in 0..n {
            match sample_in_q_circ(&q, d, domain, &mut rng, window) {
                Some(point) => u.push(point),
                None => {
                    report.indeterminate_skips += 1;
                    continue 'trial;
                }
            }
        }
        let value = s_eval(&q, n, &f, &u)?;
        let fq = f.compose(&q);
        let scale = fischer_norm(&fq, nd)?
            * fischer_norm(&fiber_product(&q, &u)?.padded(nd)?, nd)?;
        if value.norm() <= 1e-12 * scale {
            report.violations += 1;
            eprintln!(
                "walsh-relative violation: trial {} q {:?} f {:?} u {:?} S = {}",
                t, q, f, u, value
            );
            continue;
        }
        // Single-point route: the pullback image of f must avoid the
        // full-fiber region as well.
        let tf = t_apply(&q, n, &f)?;
        let tf_zeros = match tf.roots(1e-9) {
            Ok(rs) => rs.roots,
            Err(_) => {
                report.indeterminate_skips += 1;
                continue;
            }
        };
        let mut ambiguous = false;
        for &z in &tf_zeros {
            match in_q_circ(&q, domain, z, VERDICT_GUARD) {
                Ok(Membership::In) => {
                    report.violations += 1;
                    eprintln!(
                        "walsh-relative violation: trial {} zero {} of the pullback image lies in the full-fiber region",
                        t, z
                    );
                    continue 'trial;
                }
                Ok(Membership::Boundary) | Err(_) => ambiguous = true,
                Ok(Membership::Out) => {}
            }
        }
        if ambiguous {
            report.indeterminate_skips += 1;
            continue;
        }
        report.record_pass(value.norm() / scale.max(f64::MIN_POSITIVE));
    }
    Ok(report)
}

/// Majorization certificate: when `|f/g| >= 1` holds on the image of the
/// domain (checked on a dense sample, rejecting inputs that fail it, along
/// with common zeros there), the ratio of multi-point forms is at least 1
/// on tuples from the full-fiber region.
pub fn verify_bernstein(
    q: &Polynomial,
    n: usize,
    domain: &CircularDomain,
    f: &Polynomial,
    g: &Polynomial,
    samples: u64,
    seed: u64,
) -> Result<TrialReport> {
    let (q, d) = ensure_monic(q)?;
    if q_circ_witness_scan(&q, domain, WITNESS_SCAN_RESOLUTION)?.is_none() {
        return Err(Error::EmptyRegion);
    }
    let f = f.padded(n)?;
    let g = g.padded(n)?;

    // Hypothesis: |f/g| >= 1 on a dense sample of the image of the domain.
    let mut hyp_rng = SplitMix64::for_trial(seed, u64::MAX);
    let dense = 2000usize.max(samples as usize);
    for _ in 0..dense {
        if let Some(z) = sample_in_domain(domain, &mut hyp_rng, SAMPLING_MARGIN) {
            let w = q.eval(z);
            let fv = f.eval(w).norm();
            let gv = g.eval(w).norm();
            if fv < (1.0 - 1e-9) * gv {
                return Err(Error::HypothesisFailed(format!(
                    "|f/g| = {:.6} < 1 at image point {}",
                    fv / gv,
                    w
                )));
            }
        }
    }
    // Hypothesis: no common zeros in the image of the domain.
    if let (Ok(fz), Ok(gz)) = (f.roots(1e-9), g.roots(1e-9)) {
        for &zf in &fz.roots {
            for &zg in &gz.roots {
                if (zf - zg).norm() <= 1e-8 * (1.0 + zf.norm()) {
                    if let Ok(class) = fiber_class(&q, domain, zf, VERDICT_GUARD) {
                        if matches!(class.count, FiberCount::Exact(k) if k >= 1) {
                            return Err(Error::HypothesisFailed(format!(
                                "common zero near {} lies in the image of the domain",
                                zf
                            )));
                        }
                    }
                }
            }
        }
    }

    let window = image_window(&q, d, domain);
    let nd = n * d;
    let g_scale = fischer_norm(&g.compose(&q), nd)?;
    let mut report = TrialReport::new(seed);
    'sample: for t in 0..samples {
        report.trials += 1;
        let mut rng = SplitMix64::for_trial(seed, t);
        let mut y = Vec::with_capacity(n);
        for _ in 0..n {
            match sample_in_q_circ(&q, d, domain, &mut rng, window) {
                Some(point) => y.push(point),
                None => {
                    report.indeterminate_skips += 1;
                    continue 'sample;
                }
            }
        }
        let sf = s_eval(&q, n, &f, &y)?;
        let sg = s_eval(&q, n, &g, &y)?;
        let tuple_scale = g_scale * fischer_norm(&fiber_product(&q, &y)?.padded(nd)?, nd)?;
        if sg.norm() <= 1e-12 * tuple_scale {
            report.indeterminate_skips += 1;
            continue;
        }
        let ratio = sf.norm() / sg.norm();
        if ratio < 1.0 - 1e-9 {
            report.violations += 1;
            eprintln!(
                "bernstein violation: sample {} y {:?} ratio {}",
                t, y, ratio
            );
        } else {
            report.record_pass(ratio - 1.0);
        }
    }
    Ok(report)
}

/// Witness for the interpolation form of the majorization statement: a
/// point of the image of the domain where `f/g` equals the ratio of the
/// multi-point forms at `y`. Found by solving `f - r g = 0` and keeping a
/// root whose fiber meets the domain; returns the point and the ratio gap.
pub fn bernstein_ratio_witness(
    q: &Polynomial,
    n: usize,
    domain: &CircularDomain,
    f: &Polynomial,
    g: &Polynomial,
    y: &[Complex64],
) -> Result<Option<(Complex64, f64)>> {
    let (q, _d) = ensure_monic(q)?;
    let f = f.padded(n)?;
    let g = g.padded(n)?;
    let sf = s_eval(&q, n, &f, y)?;
    let sg = s_eval(&q, n, &g, y)?;
    if sg.norm() == 0.0 {
        return Ok(None);
    }
    let ratio = sf / sg;
    let h = f.sub(&g.scale(ratio));
    let zeros = h.roots(1e-9)?;
    for &z in &zeros.roots {
        if g.eval(z).norm() <= 1e-12 {
            continue;
        }
        if let Ok(class) = fiber_class(&q, domain, z, VERDICT_GUARD) {
            if matches!(class.count, FiberCount::Exact(k) if k >= 1) {
                let gap = (f.eval(z) / g.eval(z) - ratio).norm();
                return Ok(Some((z, gap)));
            }
        }
    }
    Ok(None)
}
