//! Structured grids, the time axis, and receiver recordings.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("grid needs at least 2 nodes per direction, got {nx}x{ny}")]
    TooFewNodes { nx: usize, ny: usize },
    #[error("grid spacings must be positive, got hx={hx}, hy={hy}")]
    BadSpacing { hx: f64, hy: f64 },
    #[error("time step must be positive, got {0}")]
    BadTimeStep(f64),
    #[error("time interval is empty: [{0}, {1}]")]
    EmptyInterval(f64, f64),
}

/// Regularly spaced Cartesian grid of nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianGrid {
    pub x0: f64,
    pub y0: f64,
    pub nx: usize,
    pub ny: usize,
    pub hx: f64,
    pub hy: f64,
}

impl CartesianGrid {
    pub fn new(
        origin: (f64, f64),
        nx: usize,
        ny: usize,
        hx: f64,
        hy: f64,
    ) -> Result<Self, GridError> {
        if nx < 2 || ny < 2 {
            return Err(GridError::TooFewNodes { nx, ny });
        }
        if !(hx > 0.0) || !(hy > 0.0) {
            return Err(GridError::BadSpacing { hx, hy });
        }
        Ok(CartesianGrid {
            x0: origin.0,
            y0: origin.1,
            nx,
            ny,
            hx,
            hy,
        })
    }

    /// Grid covering [x0, x1] x [y0, y1] with spacing at most `h_max`.
    pub fn covering(extent: [f64; 4], h_max: f64) -> Result<Self, GridError> {
        let [x0, x1, y0, y1] = extent;
        if !(h_max > 0.0) {
            return Err(GridError::BadSpacing { hx: h_max, hy: h_max });
        }
        let nx = ((x1 - x0) / h_max).ceil() as usize + 1;
        let ny = ((y1 - y0) / h_max).ceil() as usize + 1;
        let hx = (x1 - x0) / (nx - 1) as f64;
        let hy = (y1 - y0) / (ny - 1) as f64;
        CartesianGrid::new((x0, y0), nx, ny, hx, hy)
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.hx
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y0 + j as f64 * self.hy
    }

    pub fn x_max(&self) -> f64 {
        self.x(self.nx - 1)
    }

    pub fn y_max(&self) -> f64 {
        self.y(self.ny - 1)
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x0 && x <= self.x_max() && y >= self.y0 && y <= self.y_max()
    }
}

/// Uniform time axis; `dt` is adjusted downward so that an integer number
/// of steps lands exactly on `t_end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeAxis {
    pub t_begin: f64,
    pub t_end: f64,
    pub dt: f64,
    pub n_steps: usize,
}

impl TimeAxis {
    pub fn new(t_begin: f64, t_end: f64, dt_target: f64) -> Result<Self, GridError> {
        if !(dt_target > 0.0) {
            return Err(GridError::BadTimeStep(dt_target));
        }
        if !(t_end > t_begin) {
            return Err(GridError::EmptyInterval(t_begin, t_end));
        }
        let span = t_end - t_begin;
        let n_steps = (span / dt_target).ceil().max(1.0) as usize;
        let dt = span / n_steps as f64;
        Ok(TimeAxis {
            t_begin,
            t_end,
            dt,
            n_steps,
        })
    }

    pub fn time(&self, step: usize) -> f64 {
        self.t_begin + step as f64 * self.dt
    }
}

/// Point recording of both displacement components at a uniform interval.
#[derive(Debug, Clone)]
pub struct Receiver {
    pub label: String,
    /// Requested position.
    pub position: (f64, f64),
    /// Position actually sampled (nearest node of the hosting grid).
    pub snapped: (f64, f64),
    pub times: Vec<f64>,
    pub ux: Vec<f64>,
    pub uy: Vec<f64>,
}

impl Receiver {
    pub fn new(label: impl Into<String>, position: (f64, f64)) -> Self {
        Receiver {
            label: label.into(),
            position,
            snapped: position,
            times: Vec::new(),
            ux: Vec::new(),
            uy: Vec::new(),
        }
    }

    pub fn record(&mut self, t: f64, ux: f64, uy: f64) {
        self.times.push(t);
        self.ux.push(ux);
        self.uy.push(uy);
    }
}
