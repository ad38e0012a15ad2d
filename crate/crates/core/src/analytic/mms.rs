//! Manufactured trigonometric solutions of the elastic wave equation with
//! the body force that makes them exact, for convergence measurement.

use crate::material::Material;

/// Smooth displacement pair with separable trigonometric factors:
///
/// u = sin(a x + px) sin(b y + py) cos(c t + pt)
/// v = cos(a x + qx) cos(b y + qy) sin(c t + qt)
///
/// All time factors share the frequency c, so every time derivative of the
/// force is -c^2 times the force itself.
#[derive(Debug, Clone, Copy)]
pub struct ManufacturedSolution {
    pub material: Material,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub px: f64,
    pub py: f64,
    pub pt: f64,
    pub qx: f64,
    pub qy: f64,
    pub qt: f64,
}

impl ManufacturedSolution {
    /// Default frequency/phase choices; distinct in x, y, t.
    pub fn standard(material: Material) -> Self {
        ManufacturedSolution {
            material,
            a: 2.3,
            b: 1.7,
            c: 1.9,
            px: 0.3,
            py: 0.7,
            pt: 0.2,
            qx: 0.1,
            qy: 0.9,
            qt: 0.5,
        }
    }

    pub fn displacement(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        (
            (self.a * x + self.px).sin() * (self.b * y + self.py).sin() * (self.c * t + self.pt).cos(),
            (self.a * x + self.qx).cos() * (self.b * y + self.qy).cos() * (self.c * t + self.qt).sin(),
        )
    }

    pub fn velocity(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        (
            -self.c
                * (self.a * x + self.px).sin()
                * (self.b * y + self.py).sin()
                * (self.c * t + self.pt).sin(),
            self.c
                * (self.a * x + self.qx).cos()
                * (self.b * y + self.qy).cos()
                * (self.c * t + self.qt).cos(),
        )
    }

    /// Stress of the displacement pair.
    pub fn stress(&self, x: f64, y: f64, t: f64) -> (f64, f64, f64) {
        let (lam, mu) = (self.material.lambda, self.material.mu);
        let ux = self.a
            * (self.a * x + self.px).cos()
            * (self.b * y + self.py).sin()
            * (self.c * t + self.pt).cos();
        let uy = self.b
            * (self.a * x + self.px).sin()
            * (self.b * y + self.py).cos()
            * (self.c * t + self.pt).cos();
        let vx = -self.a
            * (self.a * x + self.qx).sin()
            * (self.b * y + self.qy).cos()
            * (self.c * t + self.qt).sin();
        let vy = -self.b
            * (self.a * x + self.qx).cos()
            * (self.b * y + self.qy).sin()
            * (self.c * t + self.qt).sin();
        (
            (lam + 2.0 * mu) * ux + lam * vy,
            lam * ux + (lam + 2.0 * mu) * vy,
            mu * (uy + vx),
        )
    }

    /// Body force making the pair exact: f = rho u_tt - div sigma(u).
    pub fn body_force(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        let (lam, mu, rho) = (self.material.lambda, self.material.mu, self.material.rho);
        let (u, v) = self.displacement(x, y, t);
        let v_xy = self.a
            * (self.a * x + self.qx).sin()
            * self.b
            * (self.b * y + self.qy).sin()
            * (self.c * t + self.qt).sin();
        let u_xy = self.a
            * (self.a * x + self.px).cos()
            * self.b
            * (self.b * y + self.py).cos()
            * (self.c * t + self.pt).cos();
        let c2 = self.c * self.c;
        (
            -rho * c2 * u + (lam + 2.0 * mu) * self.a * self.a * u + mu * self.b * self.b * u
                - (lam + mu) * v_xy,
            -rho * c2 * v + (lam + 2.0 * mu) * self.b * self.b * v + mu * self.a * self.a * v
                - (lam + mu) * u_xy,
        )
    }

    /// Second time derivative of the body force (= -c^2 f, single frequency).
    pub fn body_force_tt(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        let (fu, fv) = self.body_force(x, y, t);
        (-self.c * self.c * fu, -self.c * self.c * fv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd2<F: Fn(f64) -> f64>(f: F, x: f64, e: f64) -> f64 {
        // 6th-order second derivative
        (2.0 * (f(x + 3.0 * e) + f(x - 3.0 * e)) - 27.0 * (f(x + 2.0 * e) + f(x - 2.0 * e))
            + 270.0 * (f(x + e) + f(x - e))
            - 490.0 * f(x))
            / (180.0 * e * e)
    }

    fn fd1<F: Fn(f64) -> f64>(f: F, x: f64, e: f64) -> f64 {
        (-f(x + 2.0 * e) + 8.0 * f(x + e) - 8.0 * f(x - e) + f(x - 2.0 * e)) / (12.0 * e)
    }

    /// Independent residual oracle: rho u_tt - div sigma(u) - f == 0,
    /// evaluated with high-order finite differences.
    #[test]
    fn residual_vanishes_at_random_points() {
        let mat = Material::from_speeds(1.3, 0.7, 1.1).unwrap();
        let ms = ManufacturedSolution::standard(mat);
        let e = 1.5e-2;
        let mut worst = 0.0_f64;
        let mut state = 0x2545F4914F6CDD1D_u64;
        let mut rnd = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        for _ in 0..200 {
            let (x, y, t) = (rnd(), rnd(), rnd());
            let utt = fd2(|s| ms.displacement(x, y, s).0, t, e);
            let vtt = fd2(|s| ms.displacement(x, y, s).1, t, e);
            let dsxx_dx = fd1(|s| ms.stress(s, y, t).0, x, e);
            let dsxy_dy = fd1(|s| ms.stress(x, s, t).2, y, e);
            let dsxy_dx = fd1(|s| ms.stress(s, y, t).2, x, e);
            let dsyy_dy = fd1(|s| ms.stress(x, s, t).1, y, e);
            let (fu, fv) = ms.body_force(x, y, t);
            let r1 = mat.rho * utt - dsxx_dx - dsxy_dy - fu;
            let r2 = mat.rho * vtt - dsxy_dx - dsyy_dy - fv;
            worst = worst.max(r1.abs()).max(r2.abs());
        }
        assert!(worst < 1e-7, "residual {worst}");
    }

    #[test]
    fn rigid_motion_has_zero_force() {
        // constant pair: set frequencies to zero via direct evaluation
        let mat = Material::from_speeds(1.0, 0.5, 1.0).unwrap();
        let ms = ManufacturedSolution {
            a: 0.0,
            b: 0.0,
            c: 0.0,
            ..ManufacturedSolution::standard(mat)
        };
        let (fu, fv) = ms.body_force(0.3, -0.4, 1.0);
        assert_eq!(fu, 0.0);
        assert_eq!(fv, 0.0);
    }

    #[test]
    fn shear_free_1d_balance() {
        // (u,v) = (sin x cos t, 0)-like: with lambda=0, mu=1, rho=1 the force
        // balances u_tt - u_xx exactly
        let mat = Material::from_lame(1.0, 0.0, 1.0).unwrap();
        let ms = ManufacturedSolution {
            a: 1.0,
            b: 0.0,
            c: 1.0,
            px: 0.0,
            py: std::f64::consts::FRAC_PI_2, // sin(by+py) = 1
            pt: 0.0,
            qx: 0.0,
            qy: 0.0,
            qt: 0.0,
            material: mat,
        };
        // v = cos(0)cos(0)sin(t) = sin(t): adds rho v_tt + 0 = -sin t force in y
        for &(x, t) in &[(0.2, 0.1), (1.0, 2.0)] {
            let (fu, _) = ms.body_force(x, 0.0, t);
            // u_tt - (lam+2mu) u_xx = -u + 2u = u must equal the force
            let u = x.sin() * t.cos();
            assert!((fu - u).abs() < 1e-14);
        }
    }
}
