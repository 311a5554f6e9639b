//! Pixel grids granulated into square blocks, with overlapping regions as
//! soft set attributes.
//!
//! Each region of a [`GridScene`] becomes one attribute whose value is its
//! rasterized pixel set. [`overlap_report`] compares the per-attribute soft
//! rough approximations with the classical approximation of the merged
//! region, and [`render_masks`] writes the masks as PGM/PPM images.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::approx::{classical_boundary, classical_lower, classical_upper, soft_rough};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::softset::SoftSet;
use crate::space::{Partition, Universe};

pub mod pnm;

/// Largest pixel count accepted by [`grid_universe`].
pub const MAX_PIXELS: usize = 1 << 20;

/// Region outline in pixel coordinates. Rectangle bounds are inclusive;
/// a disk keeps the pixels with `(x-cx)^2 + (y-cy)^2 <= r^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Rect([i64; 4]),
    Disk([i64; 3]),
}

impl Shape {
    pub fn contains(&self, x: i64, y: i64) -> bool {
        match *self {
            Shape::Rect([x0, y0, x1, y1]) => (x0..=x1).contains(&x) && (y0..=y1).contains(&y),
            Shape::Disk([cx, cy, r]) => r >= 0 && (x - cx).pow(2) + (y - cy).pow(2) <= r * r,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub name: String,
    #[serde(flatten)]
    pub shape: Shape,
}

/// A `width x height` grid cut into `block x block` granules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridScene {
    pub width: usize,
    pub height: usize,
    pub block: usize,
    pub regions: Vec<Region>,
}

impl GridScene {
    /// The overlapping-rectangles scene: two rectangles sharing a 8x8 corner
    /// and a disk away from both, on a 64x64 grid with 8x8 blocks.
    pub fn demo() -> Self {
        GridScene {
            width: 64,
            height: 64,
            block: 8,
            regions: vec![
                Region {
                    name: "r".into(),
                    shape: Shape::Rect([8, 8, 31, 31]),
                },
                Region {
                    name: "b".into(),
                    shape: Shape::Rect([24, 24, 47, 47]),
                },
                Region {
                    name: "g".into(),
                    shape: Shape::Disk([52, 12, 6]),
                },
            ],
        }
    }

    pub fn pixel(&self, x: usize, y: usize) -> usize {
        y * self.width + x
    }

    /// Pixels covered by a shape, clipped to the grid.
    pub fn rasterize(&self, shape: &Shape) -> ElementSet {
        let mut set = ElementSet::empty(self.width * self.height);
        for y in 0..self.height {
            for x in 0..self.width {
                if shape.contains(x as i64, y as i64) {
                    set.insert(self.pixel(x, y));
                }
            }
        }
        set
    }
}

/// Universe of `w * h` pixels labelled `px_y_x` in row-major order.
pub fn grid_universe(w: usize, h: usize) -> Result<Universe> {
    if w == 0 || h == 0 || w.saturating_mul(h) > MAX_PIXELS {
        let (what, value) = if w == 0 || h == 0 {
            ("grid side", w.min(h))
        } else {
            ("pixel count", w.saturating_mul(h))
        };
        return Err(Error::SizeOutOfRange {
            what,
            value,
            min: 1,
            max: MAX_PIXELS,
        });
    }
    Universe::new((0..h).flat_map(|y| (0..w).map(move |x| format!("px_{y}_{x}"))))
}

/// Square `g x g` granules over a `w x h` grid, numbered row-major.
pub fn grid_partition(w: usize, h: usize, g: usize) -> Result<Partition> {
    let u = grid_universe(w, h)?;
    if g == 0 || !w.is_multiple_of(g) || !h.is_multiple_of(g) {
        return Err(Error::IndivisibleGranule {
            width: w,
            height: h,
            block: g,
        });
    }
    let per_row = w / g;
    let assignment: Vec<usize> = (0..h)
        .flat_map(|y| (0..w).map(move |x| (y / g) * per_row + x / g))
        .collect();
    Partition::from_assignment(&u, &assignment)
}

/// One attribute per region, valued at the region's rasterized pixels.
pub fn scene_to_softset(scene: &GridScene) -> Result<SoftSet> {
    let p = grid_partition(scene.width, scene.height, scene.block)?;
    softset_on(scene, p.universe())
}

fn softset_on(scene: &GridScene, u: &Universe) -> Result<SoftSet> {
    let mut attributes = Vec::with_capacity(scene.regions.len());
    for r in &scene.regions {
        let pixels = scene.rasterize(&r.shape);
        if pixels.is_empty() {
            return Err(Error::EmptyRegion(r.name.clone()));
        }
        attributes.push((r.name.clone(), pixels));
    }
    SoftSet::new(u, attributes)
}

/// Masks of one region.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMasks {
    pub name: String,
    pub region: ElementSet,
    pub lower: ElementSet,
    pub upper: ElementSet,
    pub boundary: ElementSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapReport {
    pub width: usize,
    pub height: usize,
    pub block: usize,
    pub attributes: Vec<RegionMasks>,
    /// The union of all regions treated as a single classical subject.
    pub union: RegionMasks,
    /// Union of the per-attribute boundaries.
    pub soft_boundary: ElementSet,
    /// Pixels in the upper approximations of two different attributes.
    pub overlap_cells: ElementSet,
    pub soft_detects_overlap: bool,
    /// The total soft boundary differs from the classical boundary of the union.
    pub boundary_mismatch: bool,
}

impl OverlapReport {
    /// Plain-text summary with pixel counts and the two verdicts.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "grid {}x{} block {} regions {}",
            self.width,
            self.height,
            self.block,
            self.attributes.len()
        );
        for m in self.attributes.iter().chain(std::iter::once(&self.union)) {
            let _ = writeln!(
                out,
                "{} pixels={} lower={} upper={} boundary={}",
                m.name,
                m.region.len(),
                m.lower.len(),
                m.upper.len(),
                m.boundary.len()
            );
        }
        let _ = writeln!(out, "soft_boundary {}", self.soft_boundary.len());
        let _ = writeln!(out, "overlap_cells {}", self.overlap_cells.len());
        let _ = writeln!(out, "soft_detects_overlap {}", self.soft_detects_overlap);
        let _ = writeln!(out, "boundary_mismatch {}", self.boundary_mismatch);
        out
    }
}

pub fn overlap_report(scene: &GridScene) -> Result<OverlapReport> {
    let p = grid_partition(scene.width, scene.height, scene.block)?;
    let s = softset_on(scene, p.universe())?;
    let rough = soft_rough(&p, &s)?;
    let n = p.universe().len();
    let attributes: Vec<RegionMasks> = s
        .attributes()
        .iter()
        .zip(rough.lower.values().zip(rough.upper.values()))
        .map(|((name, region), (lower, upper))| RegionMasks {
            name: name.clone(),
            region: region.clone(),
            lower: lower.clone(),
            upper: upper.clone(),
            boundary: upper.difference(lower),
        })
        .collect();

    let mut merged = ElementSet::empty(n);
    let mut soft_boundary = ElementSet::empty(n);
    let mut overlap_cells = ElementSet::empty(n);
    for (i, a) in attributes.iter().enumerate() {
        merged.union_with(&a.region);
        soft_boundary.union_with(&a.boundary);
        for b in &attributes[i + 1..] {
            overlap_cells.union_with(&a.upper.intersection(&b.upper));
        }
    }
    let union = RegionMasks {
        name: "union".into(),
        lower: classical_lower(&p, &merged)?,
        upper: classical_upper(&p, &merged)?,
        boundary: classical_boundary(&p, &merged)?,
        region: merged,
    };
    Ok(OverlapReport {
        width: scene.width,
        height: scene.height,
        block: scene.block,
        soft_detects_overlap: !overlap_cells.is_empty(),
        boundary_mismatch: soft_boundary != union.boundary,
        attributes,
        union,
        soft_boundary,
        overlap_cells,
    })
}

/// Writes the per-region and union masks, the composite and a text report.
/// Returns the written paths in order.
pub fn render_masks(report: &OverlapReport, out_prefix: &Path) -> Result<Vec<PathBuf>> {
    let prefix = out_prefix.to_string_lossy().into_owned();
    let mut written = Vec::new();
    for m in report.attributes.iter().chain(std::iter::once(&report.union)) {
        for (kind, mask) in [("lower", &m.lower), ("upper", &m.upper), ("boundary", &m.boundary)] {
            let path = PathBuf::from(format!("{prefix}_{}_{kind}.pgm", m.name));
            let pixels = mask_pixels(mask, &m.lower);
            pnm::write_pgm(&path, report.width, report.height, &pixels)?;
            written.push(path);
        }
    }
    let path = PathBuf::from(format!("{prefix}_composite.ppm"));
    let (comment, rgb) = composite(report);
    pnm::write_ppm(&path, report.width, report.height, &comment, &rgb)?;
    written.push(path);
    let path = PathBuf::from(format!("{prefix}_report.txt"));
    std::fs::write(&path, report.summary()).map_err(|e| pnm::io_error(&path, e))?;
    written.push(path);
    Ok(written)
}

/// Gray levels for a mask: lower pixels 255, other mask pixels 128, rest 0.
pub fn mask_pixels(mask: &ElementSet, lower: &ElementSet) -> Vec<u8> {
    (0..mask.width())
        .map(|i| match (mask.contains(i), lower.contains(i)) {
            (false, _) => 0,
            (true, true) => 255,
            (true, false) => 128,
        })
        .collect()
}

/// Full-saturation color at `hue` degrees.
pub fn hue_rgb(hue: f64) -> [u8; 3] {
    let h = hue.rem_euclid(360.0) / 60.0;
    let x = 1.0 - (h % 2.0 - 1.0).abs();
    let (r, g, b) = match h as u32 {
        0 => (1.0, x, 0.0),
        1 => (x, 1.0, 0.0),
        2 => (0.0, 1.0, x),
        3 => (0.0, x, 1.0),
        4 => (x, 0.0, 1.0),
        _ => (1.0, 0.0, x),
    };
    [r, g, b].map(|c: f64| (c * 255.0).round() as u8)
}

fn composite(report: &OverlapReport) -> (String, Vec<u8>) {
    let k = report.attributes.len().max(1);
    let colors: Vec<[u8; 3]> = (0..report.attributes.len())
        .map(|i| hue_rgb(i as f64 * 360.0 / k as f64))
        .collect();
    let mut comment = String::from("palette");
    for (m, c) in report.attributes.iter().zip(&colors) {
        let _ = write!(comment, " {}=#{:02x}{:02x}{:02x}", m.name, c[0], c[1], c[2]);
    }
    comment.push_str(" overlap=#ffffff boundary=half");
    let n = report.width * report.height;
    let mut rgb = vec![0u8; 3 * n];
    for i in 0..n {
        let px = if report.overlap_cells.contains(i) {
            [255; 3]
        } else {
            report
                .attributes
                .iter()
                .zip(&colors)
                .find(|(m, _)| m.upper.contains(i))
                .map_or([0; 3], |(m, c)| {
                    if m.lower.contains(i) {
                        *c
                    } else {
                        c.map(|v| v / 2)
                    }
                })
        };
        rgb[3 * i..3 * i + 3].copy_from_slice(&px);
    }
    (comment, rgb)
}

/// Decodes a mask written by [`render_masks`]: every nonzero pixel is in it.
pub fn mask_from_pixels(pixels: &[u8]) -> ElementSet {
    ElementSet::from_indices(pixels.len(), pixels.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i))
}
