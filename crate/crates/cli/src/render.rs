//! Raster and overlay output: binary PPM (P6) and SVG polylines.

use apolar_core::regions::{Bbox, FiberCount, Raster};
use num_complex::Complex64;

/// Fixed palette: one color per fiber count, grey for indeterminate
/// pixels. Counts of 9 and above reuse the cycle.
pub const FIBER_PALETTE: [[u8; 3]; 8] = [
    [31, 119, 180],  // k = 1
    [44, 160, 44],   // k = 2
    [255, 127, 14],  // k = 3
    [214, 39, 40],   // k = 4
    [148, 103, 189], // k = 5
    [140, 86, 75],   // k = 6
    [227, 119, 194], // k = 7
    [23, 190, 207],  // k = 8
];

pub const EMPTY_COLOR: [u8; 3] = [245, 245, 245];
pub const INDETERMINATE_COLOR: [u8; 3] = [128, 128, 128];

pub fn color_for(count: FiberCount) -> [u8; 3] {
    match count {
        FiberCount::Indeterminate => INDETERMINATE_COLOR,
        FiberCount::Exact(0) => EMPTY_COLOR,
        FiberCount::Exact(k) => FIBER_PALETTE[(k - 1) % FIBER_PALETTE.len()],
    }
}

/// Binary PPM (P6) encoding of a classified raster.
pub fn raster_to_ppm(raster: &Raster) -> Vec<u8> {
    let mut out = Vec::with_capacity(32 + 3 * raster.cells.len());
    out.extend_from_slice(format!("P6\n{} {}\n255\n", raster.width, raster.height).as_bytes());
    for cell in &raster.cells {
        out.extend_from_slice(&color_for(cell.count));
    }
    out
}

fn to_pixel(bbox: &Bbox, width: usize, height: usize, z: Complex64) -> (f64, f64) {
    let x = (z.re - bbox.x0) / (bbox.x1 - bbox.x0) * width as f64;
    let y = (bbox.y1 - z.im) / (bbox.y1 - bbox.y0) * height as f64;
    (x, y)
}

/// SVG polyline through the points, in the pixel coordinates of a raster
/// over the same bbox. The polyline is closed.
pub fn points_to_svg_polyline(
    bbox: &Bbox,
    width: usize,
    height: usize,
    points: &[Complex64],
) -> String {
    let mut coords = String::new();
    for &p in points.iter().chain(points.first()) {
        let (x, y) = to_pixel(bbox, width, height, p);
        coords.push_str(&format!("{:.2},{:.2} ", x, y));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"{w}\" height=\"{h}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{coords}\"/>\n</svg>\n",
        w = width,
        h = height,
        coords = coords.trim_end()
    )
}

/// SVG dot cloud, for boundary preimages that split into several
/// components.
pub fn points_to_svg_dots(
    bbox: &Bbox,
    width: usize,
    height: usize,
    points: &[Complex64],
) -> String {
    let mut body = String::new();
    for &p in points {
        let (x, y) = to_pixel(bbox, width, height, p);
        body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"0.8\" fill=\"black\"/>\n",
            x, y
        ));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"{w}\" height=\"{h}\">\n{body}</svg>\n",
        w = width,
        h = height,
        body = body
    )
}
