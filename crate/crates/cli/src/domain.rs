//! Parsing of `--domain` specifications.
//!
//! Accepted forms:
//!   `disk:cx,cy,r`        open disk of center `cx + cy i` and radius `r`
//!   `halfplane:bre,bim,c` open halfplane `2 Re(B z) + C < 0`
//! with the modifiers `--closed` (closed set) and `--complement` applied
//! afterwards.

use anyhow::{bail, Context, Result};
use apolar_core::regions::CircularDomain;
use num_complex::Complex64;

pub fn parse_domain(spec: &str, closed: bool, complement: bool) -> Result<CircularDomain> {
    let (kind, rest) = spec
        .split_once(':')
        .with_context(|| format!("domain spec '{}' is missing a ':'", spec))?;
    let nums: Vec<f64> = rest
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .with_context(|| format!("bad number '{}' in domain spec", s))
        })
        .collect::<Result<_>>()?;
    let mut domain = match kind {
        "disk" => {
            if nums.len() != 3 {
                bail!("disk spec needs cx,cy,r");
            }
            if nums[2] <= 0.0 {
                bail!("disk radius must be positive");
            }
            CircularDomain::open_disk(Complex64::new(nums[0], nums[1]), nums[2])
        }
        "halfplane" => {
            if nums.len() != 3 {
                bail!("halfplane spec needs bre,bim,c");
            }
            let b = Complex64::new(nums[0], nums[1]);
            if b.norm() == 0.0 {
                bail!("halfplane needs a nonzero B");
            }
            CircularDomain::halfplane(b, nums[2])
        }
        other => bail!("unknown domain kind '{}'", other),
    };
    if closed {
        domain.strict = false;
    }
    if complement {
        domain = domain.complement();
    }
    Ok(domain)
}

pub fn parse_complex(spec: &str) -> Result<Complex64> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        bail!("expected 're,im', got '{}'", spec);
    }
    Ok(Complex64::new(
        parts[0].trim().parse().context("bad real part")?,
        parts[1].trim().parse().context("bad imaginary part")?,
    ))
}

pub fn parse_bbox(spec: &str) -> Result<apolar_core::regions::Bbox> {
    let nums: Vec<f64> = spec
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .with_context(|| format!("bad number '{}' in bbox", s))
        })
        .collect::<Result<_>>()?;
    if nums.len() != 4 {
        bail!("bbox needs x0,y0,x1,y1");
    }
    if nums[2] <= nums[0] || nums[3] <= nums[1] {
        bail!("bbox must satisfy x0 < x1 and y0 < y1");
    }
    Ok(apolar_core::regions::Bbox::new(
        nums[0], nums[1], nums[2], nums[3],
    ))
}
