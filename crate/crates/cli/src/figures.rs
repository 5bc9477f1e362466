//! Reproduction of the three worked-example figures: the full-fiber region
//! and its preimage for the quadratic and cubic maps, and the empty region
//! of `z^3 + z`.

use std::path::Path;

use anyhow::{Context, Result};
use apolar_core::poly::Polynomial;
use apolar_core::regions::{
    boundary_points, boundary_samples, classify_preimage_raster, classify_raster, Bbox,
    CircularDomain,
};
use num_complex::Complex64;

use crate::render::{points_to_svg_dots, points_to_svg_polyline, raster_to_ppm};

/// All fiber points over `m` boundary samples: the preimage of the image
/// curve, including the boundary itself.
pub fn preimage_fiber_points(
    q: &Polynomial,
    domain: &CircularDomain,
    m: usize,
) -> Result<Vec<Complex64>> {
    let mut out = Vec::with_capacity(3 * m);
    for z0 in boundary_points(domain, m)? {
        let u = q.eval(z0);
        let shifted = q.sub(&Polynomial::constant(u));
        out.extend(shifted.roots(1e-9)?.roots);
    }
    Ok(out)
}

struct Figure {
    stem: &'static str,
    q: Polynomial,
    image_bbox: Bbox,
    /// Preimage panel; omitted where the region is empty.
    preimage_bbox: Option<Bbox>,
}

pub fn render_figures(dir: &Path, resolution: usize, samples: usize) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    let disk = CircularDomain::open_unit_disk();
    let figures = [
        Figure {
            stem: "fig1_quadratic",
            q: Polynomial::from_real(&[0.0, 0.5, 1.0]),
            image_bbox: Bbox::new(-1.5, -1.75, 2.0, 1.75),
            preimage_bbox: Some(Bbox::new(-2.0, -2.0, 2.0, 2.0)),
        },
        Figure {
            stem: "fig2_cubic",
            q: Polynomial::from_real(&[0.0, 0.5, 0.0, 1.0]),
            image_bbox: Bbox::new(-1.6, -1.6, 1.6, 1.6),
            preimage_bbox: Some(Bbox::new(-1.5, -1.5, 1.5, 1.5)),
        },
        Figure {
            stem: "fig3_empty_region",
            q: Polynomial::from_real(&[0.0, 1.0, 0.0, 1.0]),
            image_bbox: Bbox::new(-2.2, -2.2, 2.2, 2.2),
            preimage_bbox: None,
        },
    ];
    let mut written = Vec::new();
    let mut emit = |name: String, bytes: &[u8]| -> Result<()> {
        let path = dir.join(&name);
        std::fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        written.push(name);
        Ok(())
    };
    for fig in &figures {
        let raster = classify_raster(&fig.q, &disk, fig.image_bbox, resolution, 1e-9)?;
        emit(format!("{}_image.ppm", fig.stem), &raster_to_ppm(&raster))?;
        let curve = boundary_samples(&fig.q, &disk, samples)?;
        emit(
            format!("{}_image_curve.svg", fig.stem),
            points_to_svg_polyline(&fig.image_bbox, resolution, resolution, &curve).as_bytes(),
        )?;
        if let Some(pre_bbox) = fig.preimage_bbox {
            let pre = classify_preimage_raster(&fig.q, &disk, pre_bbox, resolution, 1e-9)?;
            emit(format!("{}_preimage.ppm", fig.stem), &raster_to_ppm(&pre))?;
            let dots = preimage_fiber_points(&fig.q, &disk, samples)?;
            emit(
                format!("{}_preimage_curve.svg", fig.stem),
                points_to_svg_dots(&pre_bbox, resolution, resolution, &dots).as_bytes(),
            )?;
        }
    }
    Ok(written)
}
