//! Declarative scene geometry: material regions painted over a background.
//!
//! Regions are tested in order; the last region containing a point wins.
//! Both the Cartesian rasterizer and the mesh generators consume this.

use crate::material::Material;

/// Geometric region of the plane.
#[derive(Debug, Clone)]
pub enum Region {
    Everywhere,
    Circle { cx: f64, cy: f64, r: f64 },
    /// Points with y below the polyline/spline curve y = f(x).
    BelowCurve { x: Vec<f64>, y: Vec<f64> },
    Rect { x0: f64, x1: f64, y0: f64, y1: f64 },
}

impl Region {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self {
            Region::Everywhere => true,
            Region::Circle { cx, cy, r } => {
                let (dx, dy) = (x - cx, y - cy);
                dx * dx + dy * dy < r * r
            }
            Region::BelowCurve { x: xs, y: ys } => y < interp_linear(xs, ys, x),
            Region::Rect { x0, x1, y0, y1 } => x >= *x0 && x <= *x1 && y >= *y0 && y <= *y1,
        }
    }
}

fn interp_linear(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[xs.len() - 1] {
        return ys[ys.len() - 1];
    }
    let k = xs.partition_point(|&v| v <= x).min(xs.len() - 1);
    let (xa, xb) = (xs[k - 1], xs[k]);
    let (ya, yb) = (ys[k - 1], ys[k]);
    ya + (yb - ya) * (x - xa) / (xb - xa)
}

/// Painted region with its material.
#[derive(Debug, Clone)]
pub struct PaintedRegion {
    pub region: Region,
    pub material: Material,
    /// Marks air-filled cavities; the conforming-mesh solver excises these.
    pub is_cavity: bool,
}

/// Full scene: ordered region list, later entries painted on top.
#[derive(Debug, Clone)]
pub struct Scene {
    pub regions: Vec<PaintedRegion>,
}

impl Scene {
    pub fn material_at(&self, x: f64, y: f64) -> Option<&Material> {
        self.regions
            .iter()
            .rev()
            .find(|r| r.region.contains(x, y))
            .map(|r| &r.material)
    }

    /// Air material representing a cavity interior: cs = 0, cp a small
    /// fraction of the reference speed, density a small fraction of the
    /// reference density.
    pub fn air_for(reference: &Material) -> Material {
        let cp = 0.05 * reference.cp();
        let rho = reference.rho / 2000.0;
        Material::from_speeds(cp, 0.0, rho).expect("air material is valid")
    }
}
