//! Periodic grids, smooth trigonometric test fields, plane waves, and
//! finite-difference derivatives.
//!
//! All synthetic fields are trigonometric polynomials whose wave vectors are
//! commensurate with the box, so they are exactly periodic on every grid and
//! their analytic derivatives are available in closed form. That gives the
//! finite-difference operators something honest to converge against.

use crate::algebra::{c, C};
use crate::lorentz::mdot;
use rand::Rng;

/// Uniform periodic grid: `n` points per axis, spacing `h`, box length `n*h`.
#[derive(Clone, Copy, Debug)]
pub struct Grid<const D: usize> {
    pub n: usize,
    pub h: f64,
}

impl<const D: usize> Grid<D> {
    pub fn new(n: usize, h: f64) -> Self {
        assert!(n >= 4, "need at least 4 points per axis for central differences");
        Grid { n, h }
    }

    /// Total number of grid points.
    pub fn len(&self) -> usize {
        self.n.pow(D as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Box length per axis.
    pub fn length(&self) -> f64 {
        self.n as f64 * self.h
    }

    /// Decodes a flat index into per-axis indices (axis 0 slowest).
    pub fn coords(&self, flat: usize) -> [usize; D] {
        let mut idx = [0usize; D];
        let mut rem = flat;
        for a in (0..D).rev() {
            idx[a] = rem % self.n;
            rem /= self.n;
        }
        idx
    }

    /// Encodes per-axis indices into a flat index.
    pub fn flat(&self, idx: [usize; D]) -> usize {
        let mut f = 0usize;
        for a in 0..D {
            f = f * self.n + idx[a];
        }
        f
    }

    /// Coordinates of a grid node.
    pub fn point(&self, idx: [usize; D]) -> [f64; D] {
        let mut x = [0.0; D];
        for a in 0..D {
            x[a] = idx[a] as f64 * self.h;
        }
        x
    }

    /// Periodic neighbor shift along one axis.
    pub fn shift(&self, mut idx: [usize; D], axis: usize, delta: i64) -> [usize; D] {
        let n = self.n as i64;
        let v = (idx[axis] as i64 + delta).rem_euclid(n);
        idx[axis] = v as usize;
        idx
    }
}

/// One harmonic of a trigonometric polynomial: integer mode vector plus
/// cosine and sine amplitudes.
#[derive(Clone, Copy, Debug)]
pub struct TrigTerm<const D: usize> {
    pub modes: [i32; D],
    pub cos_amp: f64,
    pub sin_amp: f64,
}

/// Real trigonometric polynomial `base + sum_m (a_m cos th_m + b_m sin th_m)`
/// with `th_m = (2 pi / length) sum_a modes_a x^a`. Exactly periodic on any
/// box of the stated length, with closed-form gradient.
#[derive(Clone, Debug)]
pub struct TrigPoly<const D: usize> {
    pub base: f64,
    pub length: f64,
    pub terms: Vec<TrigTerm<D>>,
}

impl<const D: usize> TrigPoly<D> {
    pub fn constant(base: f64, length: f64) -> Self {
        TrigPoly { base, length, terms: Vec::new() }
    }

    pub fn new(base: f64, length: f64, terms: Vec<TrigTerm<D>>) -> Self {
        TrigPoly { base, length, terms }
    }

    /// Draws `nterms` harmonics with mode components in {-1, 0, 1} (never all
    /// zero) and amplitudes uniform in `(-amp, amp)`.
    pub fn random<R: Rng>(rng: &mut R, base: f64, amp: f64, nterms: usize, length: f64) -> Self {
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let mut modes = [0i32; D];
            loop {
                for m in modes.iter_mut() {
                    *m = rng.gen_range(-1..=1);
                }
                if modes.iter().any(|&m| m != 0) {
                    break;
                }
            }
            let cos_amp = amp * rng.gen_range(-1.0..1.0);
            let sin_amp = amp * rng.gen_range(-1.0..1.0);
            terms.push(TrigTerm { modes, cos_amp, sin_amp });
        }
        TrigPoly { base, length, terms }
    }

    fn theta(&self, t: &TrigTerm<D>, x: &[f64; D]) -> f64 {
        let k = 2.0 * std::f64::consts::PI / self.length;
        let mut th = 0.0;
        for a in 0..D {
            th += t.modes[a] as f64 * x[a];
        }
        k * th
    }

    pub fn value(&self, x: &[f64; D]) -> f64 {
        let mut v = self.base;
        for t in &self.terms {
            let th = self.theta(t, x);
            v += t.cos_amp * th.cos() + t.sin_amp * th.sin();
        }
        v
    }

    pub fn grad(&self, x: &[f64; D]) -> [f64; D] {
        let k = 2.0 * std::f64::consts::PI / self.length;
        let mut g = [0.0; D];
        for t in &self.terms {
            let th = self.theta(t, x);
            let d = -t.cos_amp * th.sin() + t.sin_amp * th.cos();
            for a in 0..D {
                g[a] += k * t.modes[a] as f64 * d;
            }
        }
        g
    }
}

/// Complex plane wave `exp(-i k.x)` (Minkowski product, upper-index `k`).
#[derive(Clone, Copy, Debug)]
pub struct PlaneWave<const D: usize> {
    pub k: [f64; D],
}

impl<const D: usize> PlaneWave<D> {
    /// Wave with components `k^a = 2 pi modes_a / length`, hence exactly
    /// periodic on a box of that length.
    pub fn commensurate(modes: [i32; D], length: f64) -> Self {
        let base = 2.0 * std::f64::consts::PI / length;
        let mut k = [0.0; D];
        for a in 0..D {
            k[a] = base * modes[a] as f64;
        }
        PlaneWave { k }
    }

    pub fn value(&self, x: &[f64; D]) -> C {
        C::from_polar(1.0, -mdot(&self.k, x))
    }

    /// Analytic partial derivative along `axis` (a lower index).
    pub fn derivative(&self, x: &[f64; D], axis: usize) -> C {
        let sign = if axis == 0 { 1.0 } else { -1.0 };
        c(0.0, -sign * self.k[axis]) * self.value(x)
    }

    /// Analytic second partial derivative along `axis`.
    pub fn second_derivative(&self, x: &[f64; D], axis: usize) -> C {
        let sign = if axis == 0 { 1.0 } else { -1.0 };
        let kl = sign * self.k[axis];
        c(-kl * kl, 0.0) * self.value(x)
    }

    /// Minkowski square of the wave vector.
    pub fn k_square(&self) -> f64 {
        mdot(&self.k, &self.k)
    }
}

/// Samples a complex-vector-valued function on every node of the grid.
pub fn sample_grid<const D: usize, const K: usize>(
    grid: &Grid<D>,
    f: impl Fn(&[f64; D]) -> [C; K],
) -> Vec<[C; K]> {
    (0..grid.len()).map(|i| f(&grid.point(grid.coords(i)))).collect()
}

/// Central first difference along one axis with periodic wrap-around;
/// second-order accurate.
pub fn fd_partial<const D: usize, const K: usize>(
    grid: &Grid<D>,
    data: &[[C; K]],
    axis: usize,
) -> Vec<[C; K]> {
    let mut out = vec![[c(0.0, 0.0); K]; data.len()];
    let inv2h = 1.0 / (2.0 * grid.h);
    for flat in 0..data.len() {
        let idx = grid.coords(flat);
        let up = grid.flat(grid.shift(idx, axis, 1));
        let dn = grid.flat(grid.shift(idx, axis, -1));
        for comp in 0..K {
            out[flat][comp] = (data[up][comp] - data[dn][comp]) * inv2h;
        }
    }
    out
}

/// Central second difference along one axis with periodic wrap-around.
pub fn fd_second_partial<const D: usize, const K: usize>(
    grid: &Grid<D>,
    data: &[[C; K]],
    axis: usize,
) -> Vec<[C; K]> {
    let mut out = vec![[c(0.0, 0.0); K]; data.len()];
    let invh2 = 1.0 / (grid.h * grid.h);
    for flat in 0..data.len() {
        let idx = grid.coords(flat);
        let up = grid.flat(grid.shift(idx, axis, 1));
        let dn = grid.flat(grid.shift(idx, axis, -1));
        for comp in 0..K {
            out[flat][comp] =
                (data[up][comp] - data[flat][comp].scale(2.0) + data[dn][comp]) * invh2;
        }
    }
    out
}

/// Largest component magnitude over a sampled field.
pub fn max_abs<const K: usize>(data: &[[C; K]]) -> f64 {
    let mut m = 0.0f64;
    for row in data {
        for v in row {
            m = m.max(v.norm());
        }
    }
    m
}

/// Plain sum over the grid of a complex sampled field (one component).
pub fn grid_sum<const K: usize>(data: &[[C; K]]) -> [C; K] {
    let mut s = [c(0.0, 0.0); K];
    for row in data {
        for (acc, v) in s.iter_mut().zip(row.iter()) {
            *acc += v;
        }
    }
    s
}

/// Least-squares slope of `ln r` against `ln h`; the expected value for a
/// second-order scheme on smooth periodic data is 2.
pub fn lsq_slope(h: &[f64], r: &[f64]) -> f64 {
    assert_eq!(h.len(), r.len());
    let n = h.len() as f64;
    let lx: Vec<f64> = h.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = r.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..h.len() {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    num / den
}
