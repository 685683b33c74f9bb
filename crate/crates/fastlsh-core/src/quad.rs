//! Quadrature building blocks: fixed Gauss–Legendre panels, an adaptive
//! Gauss–Kronrod rule, and a natural cubic spline on a uniform grid with an
//! exact linear-weighted integral.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
#[allow(unused_imports)]
use num_traits::Float;

pub const GL8_NODES: [f64; 8] = [
    -0.9602898564975363,
    -0.7966664774136267,
    -0.525532409916329,
    -0.18343464249564978,
    0.18343464249564978,
    0.525532409916329,
    0.7966664774136267,
    0.9602898564975363,
];
pub const GL8_WEIGHTS: [f64; 8] = [
    0.10122853629037669,
    0.22238103445337434,
    0.31370664587788705,
    0.36268378337836193,
    0.36268378337836193,
    0.31370664587788705,
    0.22238103445337434,
    0.10122853629037669,
];

pub const GL16_NODES: [f64; 16] = [
    -0.9894009349916499,
    -0.9445750230732326,
    -0.8656312023878318,
    -0.755404408355003,
    -0.6178762444026438,
    -0.45801677765722737,
    -0.2816035507792589,
    -0.09501250983763744,
    0.09501250983763744,
    0.2816035507792589,
    0.45801677765722737,
    0.6178762444026438,
    0.755404408355003,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];
pub const GL16_WEIGHTS: [f64; 16] = [
    0.027152459411754096,
    0.062253523938647894,
    0.09515851168249279,
    0.12462897125553388,
    0.14959598881657674,
    0.16915651939500254,
    0.18260341504492358,
    0.18945061045506848,
    0.18945061045506848,
    0.18260341504492358,
    0.16915651939500254,
    0.14959598881657674,
    0.12462897125553388,
    0.09515851168249279,
    0.062253523938647894,
    0.027152459411754096,
];

// Kronrod 15 / Gauss 7 pair (QUADPACK dqk15 constants).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Fixed-order Gauss–Legendre integral of `f` over `[a, b]`.
pub fn gl8<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..8 {
        acc += GL8_WEIGHTS[i] * f(c + h * GL8_NODES[i]);
    }
    acc * h
}

/// Fixed-order Gauss–Legendre integral of `f` over `[a, b]`.
pub fn gl16<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..16 {
        acc += GL16_WEIGHTS[i] * f(c + h * GL16_NODES[i]);
    }
    acc * h
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h)
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]` to absolute
/// tolerance `abs_tol`. Returns `(value, error_estimate)`.
pub fn adaptive_gk<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<(f64, f64), Error> {
    const MAX_INTERVALS: usize = 4096;
    // worklist of (a, b, value, err)
    let (v, e) = gk15(f, a, b);
    let mut work = vec![(a, b, v, e)];
    let mut total_err: f64 = e;
    while total_err > abs_tol {
        if work.len() >= MAX_INTERVALS {
            return Err(Error::NumericFailure(format!(
                "adaptive quadrature on [{a}, {b}] did not reach abs_tol={abs_tol:.3e} \
                 after {MAX_INTERVALS} intervals (residual {total_err:.3e})"
            )));
        }
        // split the worst interval
        let (idx, _) = work
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .unwrap();
        let (ia, ib, _, ie) = work.swap_remove(idx);
        let mid = 0.5 * (ia + ib);
        if mid <= ia || mid >= ib {
            return Err(Error::NumericFailure(format!(
                "adaptive quadrature stalled at [{ia}, {ib}] (interval too small)"
            )));
        }
        let (v1, e1) = gk15(f, ia, mid);
        let (v2, e2) = gk15(f, mid, ib);
        total_err += e1 + e2 - ie;
        work.push((ia, mid, v1, e1));
        work.push((mid, ib, v2, e2));
    }
    Ok((work.iter().map(|w| w.2).sum(), total_err))
}

/// Cubic spline over a uniform grid, natural or clamped at the ends.
pub struct UniformSpline {
    x0: f64,
    dx: f64,
    y: Vec<f64>,
    /// second derivatives at the knots
    m: Vec<f64>,
}

/// End conditions for the spline fit. Natural ends cost O(h²) accuracy in
/// a boundary layer; clamping with known first derivatives restores O(h⁴).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SplineEnds {
    Natural,
    Clamped { d_left: f64, d_right: f64 },
}

impl UniformSpline {
    pub fn fit(x0: f64, dx: f64, y: Vec<f64>) -> Result<Self, Error> {
        Self::fit_with_ends(x0, dx, y, SplineEnds::Natural)
    }

    pub fn fit_with_ends(x0: f64, dx: f64, y: Vec<f64>, ends: SplineEnds) -> Result<Self, Error> {
        let n = y.len();
        if n < 3 || !(dx > 0.0) {
            return Err(Error::InvalidArgument(
                "spline needs >= 3 points and positive spacing",
            ));
        }
        // Tridiagonal system over all n second derivatives:
        //   natural:  M_0 = M_{n-1} = 0
        //   clamped:  2M_0 + M_1 = 6((y1-y0)/h - d_left)/h, symmetric at the right
        let mut diag = vec![2.0; n];
        let mut upper = vec![0.0; n];
        let mut lower = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        for i in 1..n - 1 {
            diag[i] = 4.0;
            lower[i] = 1.0;
            upper[i] = 1.0;
            rhs[i] = 6.0 * (y[i - 1] - 2.0 * y[i] + y[i + 1]) / (dx * dx);
        }
        match ends {
            SplineEnds::Natural => {
                diag[0] = 1.0;
                diag[n - 1] = 1.0;
            }
            SplineEnds::Clamped { d_left, d_right } => {
                upper[0] = 1.0;
                rhs[0] = 6.0 * ((y[1] - y[0]) / dx - d_left) / dx;
                lower[n - 1] = 1.0;
                rhs[n - 1] = 6.0 * (d_right - (y[n - 1] - y[n - 2]) / dx) / dx;
            }
        }
        // Thomas elimination
        let mut m = vec![0.0; n];
        for i in 1..n {
            let w = lower[i] / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        m[n - 1] = rhs[n - 1] / diag[n - 1];
        for i in (0..n - 1).rev() {
            m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        }
        Ok(Self { x0, dx, y, m })
    }

    pub fn x_max(&self) -> f64 {
        self.x0 + self.dx * (self.y.len() - 1) as f64
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.y.len();
        let pos = (x - self.x0) / self.dx;
        let i = (pos.floor() as isize).clamp(0, n as isize - 2) as usize;
        let tau = pos - i as f64;
        let u = 1.0 - tau;
        let h2 = self.dx * self.dx / 6.0;
        self.y[i] * u
            + self.y[i + 1] * tau
            + h2 * ((u * u * u - u) * self.m[i] + (tau * tau * tau - tau) * self.m[i + 1])
    }

    /// Exact integral of `spline(t)·(w0 + w1·t)` over the full grid.
    pub fn integrate_against_linear(&self, w0: f64, w1: f64) -> f64 {
        let h = self.dx;
        let mut acc = 0.0;
        for i in 0..self.y.len() - 1 {
            let xi = self.x0 + h * i as f64;
            let a0 = w0 + w1 * xi;
            let a1 = w1 * h;
            acc += h
                * (self.y[i] * (a0 / 2.0 + a1 / 6.0)
                    + self.y[i + 1] * (a0 / 2.0 + a1 / 3.0)
                    + (h * h / 6.0)
                        * (self.m[i] * (-a0 / 4.0 - 7.0 * a1 / 60.0)
                            + self.m[i + 1] * (-a0 / 4.0 - 2.0 * a1 / 15.0)));
        }
        acc
    }
}
