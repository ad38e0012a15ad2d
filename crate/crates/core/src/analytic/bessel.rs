//! Cylinder Bessel functions J_n, Y_n of integer order for real positive
//! arguments, accurate to roughly 1e-11 near the series/asymptotic seam and
//! close to machine precision elsewhere.
//!
//! Orders 0 and 1 combine the ascending power series (small x) with the
//! Hankel asymptotic expansion (large x). Higher orders use forward
//! recurrence for Y (stable) and Miller's backward recurrence with the
//! even-order sum rule for J.

use num_complex::Complex64;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Series/asymptotics crossover; both sides achieve ~1e-11 here.
const SEAM: f64 = 12.0;

fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= -q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn j1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= -q / ((k * (k + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    0.5 * x * sum
}

fn y0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0; // (-1)^{k+1} H_k q^k / (k!)^2 built incrementally
    let mut hk = 0.0;
    let mut sum = 0.0;
    for k in 1..200 {
        term *= q / ((k * k) as f64);
        hk += 1.0 / k as f64;
        let contrib = if k % 2 == 1 { term * hk } else { -term * hk };
        sum += contrib;
        if term * hk < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    2.0 / std::f64::consts::PI * (((0.5 * x).ln() + EULER_GAMMA) * j0_series(x) + sum)
}

fn y1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    // sum_k (-1)^k (H_k + H_{k+1}) q^k / (k! (k+1)!)
    let mut term = 1.0;
    let mut hk = 0.0;
    let mut hk1 = 1.0;
    let mut sum = hk + hk1; // k = 0 term: H_0 + H_1 = 1
    let mut sign = 1.0;
    for k in 1..200 {
        term *= q / ((k * (k + 1)) as f64);
        hk += 1.0 / k as f64;
        hk1 += 1.0 / (k + 1) as f64;
        sign = -sign;
        let contrib = sign * term * (hk + hk1);
        sum += contrib;
        if (term * (hk + hk1)).abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    let pi = std::f64::consts::PI;
    2.0 / pi * ((0.5 * x).ln() + EULER_GAMMA) * j1_series(x) - 2.0 / (pi * x) - x / (2.0 * pi) * sum
}

/// Hankel asymptotic P/Q sums for order n (0 or 1).
fn pq_asymptotic(n: u32, x: f64) -> (f64, f64) {
    let mu = (4 * n * n) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0; // a_k
    let mut prev = f64::INFINITY;
    for k in 1..40u32 {
        let f = (mu - ((2 * k - 1) * (2 * k - 1)) as f64) / (k as f64 * 8.0 * x);
        a *= f;
        if a.abs() > prev {
            break; // asymptotic series started diverging
        }
        prev = a.abs();
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if a.abs() < 1e-18 {
            break;
        }
    }
    (p, q)
}

fn jy_asymptotic(n: u32, x: f64) -> (f64, f64) {
    let (p, q) = pq_asymptotic(n, x);
    let chi = x - (0.5 * n as f64 + 0.25) * std::f64::consts::PI;
    let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
    (
        amp * (p * chi.cos() - q * chi.sin()),
        amp * (p * chi.sin() + q * chi.cos()),
    )
}

pub fn bessel_j0(x: f64) -> f64 {
    if x < SEAM {
        j0_series(x)
    } else {
        jy_asymptotic(0, x).0
    }
}

pub fn bessel_j1(x: f64) -> f64 {
    if x < SEAM {
        j1_series(x)
    } else {
        jy_asymptotic(1, x).0
    }
}

pub fn bessel_y0(x: f64) -> f64 {
    if x < SEAM {
        y0_series(x)
    } else {
        jy_asymptotic(0, x).1
    }
}

pub fn bessel_y1(x: f64) -> f64 {
    if x < SEAM {
        y1_series(x)
    } else {
        jy_asymptotic(1, x).1
    }
}

/// J_0..J_nmax by Miller's backward recurrence normalized with
/// J_0 + 2 sum J_{2k} = 1. Works for all x > 0.
pub fn bessel_jn_array(nmax: usize, x: f64) -> Vec<f64> {
    assert!(x > 0.0, "argument must be positive");
    let start = nmax.max(x as usize) + 52;
    let mut jp = 0.0_f64; // J_{k+1}
    let mut j = 1e-300_f64; // J_k seed
    let mut out = vec![0.0; nmax + 1];
    let mut norm = 0.0;
    for k in (0..=start).rev() {
        let jm = (2.0 * (k as f64 + 1.0) / x) * j - jp; // J_k from J_{k+1}, J_{k+2}
        jp = j;
        j = jm;
        // renormalize to avoid overflow
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
        if k <= nmax {
            out[k] = j;
        }
        if k % 2 == 0 {
            norm += if k == 0 { j } else { 2.0 * j };
        }
    }
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// Y_0..Y_nmax by forward recurrence (stable: |Y_n| grows with n).
pub fn bessel_yn_array(nmax: usize, x: f64) -> Vec<f64> {
    assert!(x > 0.0, "argument must be positive");
    let mut out = vec![0.0; nmax + 1];
    out[0] = bessel_y0(x);
    if nmax >= 1 {
        out[1] = bessel_y1(x);
    }
    for n in 1..nmax {
        out[n + 1] = 2.0 * n as f64 / x * out[n] - out[n - 1];
    }
    out
}

/// H^(1)_0..H^(1)_nmax = J + iY.
pub fn hankel1_array(nmax: usize, x: f64) -> Vec<Complex64> {
    let j = bessel_jn_array(nmax, x);
    let y = bessel_yn_array(nmax, x);
    j.into_iter()
        .zip(y)
        .map(|(re, im)| Complex64::new(re, im))
        .collect()
}

/// Derivative from the recurrence C_n' = C_{n-1} - (n/x) C_n, with
/// C_0' = -C_1.
pub fn cyl_derivative<T>(vals: &[T], n: usize, x: f64) -> T
where
    T: Copy
        + std::ops::Sub<Output = T>
        + std::ops::Mul<f64, Output = T>
        + std::ops::Neg<Output = T>,
{
    if n == 0 {
        -vals[1]
    } else {
        vals[n - 1] - vals[n] * (n as f64 / x)
    }
}
