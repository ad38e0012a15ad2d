//! Transient dipole source: time function, moment-matched discrete delta.
//!
//! The source drives both solvers through the gradient of a discrete Dirac
//! delta. The delta weights are tensor products of 1D moment-matched
//! stencils; the gradient is formed by each solver with its own first
//! derivative so that the forcing stays consistent with the discrete
//! operator.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("source at {xs} needs {width} nodes of grid [{lo}, {hi}] margin")]
    TooCloseToBoundary {
        xs: f64,
        width: usize,
        lo: f64,
        hi: f64,
    },
    #[error("delta stencil width must be at least 1")]
    ZeroWidth,
}

/// Pulse h(t) = sin(2 pi omega t) - 1/2 sin(4 pi omega t) on (0, 1/omega),
/// zero elsewhere.
pub fn time_function(t: f64, omega: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 / omega {
        return 0.0;
    }
    let a = 2.0 * std::f64::consts::PI * omega;
    (a * t).sin() - 0.5 * (2.0 * a * t).sin()
}

/// Second time derivative of [`time_function`], used by the fourth-order
/// time integrator's correction term.
pub fn time_function_tt(t: f64, omega: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 / omega {
        return 0.0;
    }
    let a = 2.0 * std::f64::consts::PI * omega;
    -a * a * (a * t).sin() + 2.0 * a * a * (2.0 * a * t).sin()
}

/// 1D moment-matched delta weights on a uniform axis.
///
/// `weights[k]` multiplies the node at index `start + k`; the weights have
/// units 1/length and their sum times the spacing is exactly one.
#[derive(Debug, Clone)]
pub struct DeltaStencil1D {
    pub start: usize,
    pub weights: Vec<f64>,
}

impl DeltaStencil1D {
    /// Build weights matching moments 0..width-1 of a delta at `xs` on the
    /// axis `x0 + i h`, i = 0..n.
    pub fn build(xs: f64, x0: f64, h: f64, n: usize, width: usize) -> Result<Self, SourceError> {
        if width == 0 {
            return Err(SourceError::ZeroWidth);
        }
        let s = (xs - x0) / h;
        let start_f = (s - 0.5 * (width as f64 - 1.0)).round();
        let start = start_f as isize;
        if start < 0 || start as usize + width > n {
            return Err(SourceError::TooCloseToBoundary {
                xs,
                width,
                lo: x0,
                hi: x0 + (n - 1) as f64 * h,
            });
        }
        // Vandermonde system in the shifted coordinate xi = i - s:
        // sum_k v_k xi_k^m = delta_{m,0}; then w = v / h.
        let m = width;
        let mut a = vec![vec![0.0; m]; m];
        let mut b = vec![0.0; m];
        b[0] = 1.0;
        for (k, col) in a[0].iter_mut().enumerate() {
            *col = 1.0;
        }
        for row in 1..m {
            for k in 0..m {
                let xi = start as f64 + k as f64 - s;
                a[row][k] = xi.powi(row as i32);
            }
        }
        let v = solve_dense(&mut a, &mut b);
        Ok(DeltaStencil1D {
            start: start as usize,
            weights: v.iter().map(|w| w / h).collect(),
        })
    }

    /// Discrete moment of given order about `xs` (times the spacing h).
    pub fn moment(&self, order: u32, xs: f64, x0: f64, h: f64) -> f64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let x = x0 + (self.start + k) as f64 * h;
                w * h * (x - xs).powi(order as i32)
            })
            .sum()
    }
}

/// Tensor-product 2D delta stencil.
#[derive(Debug, Clone)]
pub struct DeltaStencil {
    pub sx: DeltaStencil1D,
    pub sy: DeltaStencil1D,
}

impl DeltaStencil {
    /// Weight multiplying the node (sx.start + i, sy.start + j); units 1/length^2.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.sx.weights[i] * self.sy.weights[j]
    }
}

/// Dense Gaussian elimination with partial pivoting; consumes its inputs.
/// Small systems only (delta weights, stencil generation).
pub(crate) fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col];
        for row in 0..n {
            if row != col && a[row][col] != 0.0 {
                let f = a[row][col] / d;
                for k in col..n {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    (0..n).map(|i| b[i] / a[i][i]).collect()
}
