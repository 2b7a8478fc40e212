//! Small dense complex matrices and the Clifford-algebra building blocks used
//! throughout the crate.
//!
//! Everything here is sized for 2x2 and 4x4 problems: matrices are stack
//! allocated over a const-generic dimension, and the matrix exponential uses
//! plain scaling-and-squaring with a fixed-order Taylor tail, which is more
//! than enough accuracy for the operator norms (<= 10) that show up in the
//! verification suites.

use num_complex::Complex64;

/// Convenience alias for the scalar type used everywhere.
pub type C = Complex64;

/// Shorthand complex constructor.
#[inline]
pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Diagonal of the metric with signature (+, -, ..., -) in 2 dimensions.
pub const METRIC2: [f64; 2] = [1.0, -1.0];

/// Diagonal of the metric with signature (+, -, -, -) in 4 dimensions.
pub const METRIC4: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Totally antisymmetric symbol on four indices, normalized so that
/// `eps4(0, 1, 2, 3) == 1.0`. Returns 0 for repeated indices.
pub fn eps4(i: usize, k: usize, l: usize, m: usize) -> f64 {
    let idx = [i, k, l, m];
    let mut sign = 1.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Dense square complex matrix with compile-time dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat<const N: usize> {
    pub a: [[C; N]; N],
}

impl<const N: usize> Mat<N> {
    pub fn zeros() -> Self {
        Mat { a: [[C::new(0.0, 0.0); N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.a[i][i] = C::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: [[C; N]; N]) -> Self {
        Mat { a: rows }
    }

    /// Builds a diagonal matrix from the given entries.
    pub fn diag(d: [C; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.a[i][i] = d[i];
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.a[i][j] = self.a[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.a[i][j] = self.a[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> C {
        let mut t = C::new(0.0, 0.0);
        for i in 0..N {
            t += self.a[i][i];
        }
        t
    }

    pub fn scale(&self, s: C) -> Self {
        let mut m = *self;
        for i in 0..N {
            for j in 0..N {
                m.a[i][j] *= s;
            }
        }
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C::new(s, 0.0))
    }

    /// Matrix-vector product.
    pub fn mulv(&self, v: &[C; N]) -> [C; N] {
        let mut out = [C::new(0.0, 0.0); N];
        for i in 0..N {
            for j in 0..N {
                out[i] += self.a[i][j] * v[j];
            }
        }
        out
    }

    /// Largest entry magnitude; a cheap norm for residual reporting.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                m = m.max(self.a[i][j].norm());
            }
        }
        m
    }

    /// Maximum absolute row sum (the induced infinity norm).
    pub fn norm_inf(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            let mut row = 0.0f64;
            for j in 0..N {
                row += self.a[i][j].norm();
            }
            worst = worst.max(row);
        }
        worst
    }

    /// Gauss-Jordan inverse with partial pivoting. Returns `None` when the
    /// matrix is numerically singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.a;
        let mut inv = Self::identity().a;
        for col in 0..N {
            let mut piv = col;
            for r in (col + 1)..N {
                if a[r][col].norm() > a[piv][col].norm() {
                    piv = r;
                }
            }
            if a[piv][col].norm() < 1e-300 {
                return None;
            }
            a.swap(col, piv);
            inv.swap(col, piv);
            let d = a[col][col];
            for j in 0..N {
                a[col][j] /= d;
                inv[col][j] /= d;
            }
            for r in 0..N {
                if r != col {
                    let f = a[r][col];
                    if f.norm() != 0.0 {
                        for j in 0..N {
                            let acj = a[col][j];
                            let icj = inv[col][j];
                            a[r][j] -= f * acj;
                            inv[r][j] -= f * icj;
                        }
                    }
                }
            }
        }
        Some(Mat { a: inv })
    }

    /// Matrix exponential by scaling-and-squaring over a fixed-order Taylor
    /// polynomial. Accurate to ~1e-13 relative for `norm_inf() <= 10`, which
    /// covers every generator handled by this crate.
    pub fn expm(&self) -> Self {
        let norm = self.norm_inf();
        let s = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale_re(1.0 / (1u64 << s) as f64);
        // Horner evaluation of the degree-18 Taylor polynomial.
        let mut acc = Self::identity();
        for k in (1..=18u64).rev() {
            acc = scaled * acc.scale_re(1.0 / k as f64) + Self::identity();
        }
        let mut result = acc;
        for _ in 0..s {
            result = result * result;
        }
        result
    }
}

impl<const N: usize> std::ops::Mul for Mat<N> {
    type Output = Mat<N>;
    fn mul(self, rhs: Mat<N>) -> Mat<N> {
        let mut out = Mat::zeros();
        for i in 0..N {
            for k in 0..N {
                let lik = self.a[i][k];
                if lik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..N {
                    out.a[i][j] += lik * rhs.a[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> std::ops::Add for Mat<N> {
    type Output = Mat<N>;
    fn add(self, rhs: Mat<N>) -> Mat<N> {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.a[i][j] += rhs.a[i][j];
            }
        }
        out
    }
}

impl<const N: usize> std::ops::Sub for Mat<N> {
    type Output = Mat<N>;
    fn sub(self, rhs: Mat<N>) -> Mat<N> {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.a[i][j] -= rhs.a[i][j];
            }
        }
        out
    }
}

/// Commutator `[a, b]`.
pub fn commutator<const N: usize>(a: Mat<N>, b: Mat<N>) -> Mat<N> {
    a * b - b * a
}

/// Anticommutator `{a, b}`.
pub fn anticommutator<const N: usize>(a: Mat<N>, b: Mat<N>) -> Mat<N> {
    a * b + b * a
}

/// Pauli matrices.
pub fn pauli() -> [Mat<2>; 3] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        Mat::from_rows([[z, one], [one, z]]),
        Mat::from_rows([[z, -i], [i, z]]),
        Mat::from_rows([[one, z], [z, -one]]),
    ]
}

/// Two-dimensional gamma pair: `g0 = sigma_1`, `g1 = i sigma_2`, satisfying
/// `{g_i, g_k} = 2 diag(1, -1)`.
pub fn gamma2() -> [Mat<2>; 2] {
    let p = pauli();
    [p[0], p[1].scale(c(0.0, 1.0))]
}

/// Four-dimensional gamma matrices in the standard diagonal-g0 representation.
pub fn gamma4() -> [Mat<4>; 4] {
    let p = pauli();
    let mut g = [Mat::<4>::zeros(); 4];
    for i in 0..2 {
        g[0].a[i][i] = c(1.0, 0.0);
        g[0].a[i + 2][i + 2] = c(-1.0, 0.0);
    }
    for (alpha, s) in p.iter().enumerate() {
        let mut m = Mat::<4>::zeros();
        for i in 0..2 {
            for j in 0..2 {
                m.a[i][j + 2] = s.a[i][j];
                m.a[i + 2][j] = -s.a[i][j];
            }
        }
        g[alpha + 1] = m;
    }
    g
}

/// Product `g0 g1 g2 g3`; squares to minus the identity and anticommutes with
/// every generator.
pub fn gamma5() -> Mat<4> {
    let g = gamma4();
    g[0] * g[1] * g[2] * g[3]
}

/// Spin matrices `Sigma_a = i g^b g^c` for cyclic `(a, b, c)`; block-diagonal
/// copies of the Pauli matrices in this representation.
pub fn sigma4() -> [Mat<4>; 3] {
    let g = gamma4();
    [
        (g[2] * g[3]).scale(c(0.0, 1.0)),
        (g[3] * g[1]).scale(c(0.0, 1.0)),
        (g[1] * g[2]).scale(c(0.0, 1.0)),
    ]
}

/// Contraction of the Pauli vector with a real 3-vector.
pub fn pauli_dot(n: [f64; 3]) -> Mat<2> {
    let p = pauli();
    p[0].scale_re(n[0]) + p[1].scale_re(n[1]) + p[2].scale_re(n[2])
}

/// Contraction of the spin matrices with a real 3-vector.
pub fn sigma_dot(n: [f64; 3]) -> Mat<4> {
    let s = sigma4();
    s[0].scale_re(n[0]) + s[1].scale_re(n[1]) + s[2].scale_re(n[2])
}

/// Rank-one projector selecting the positive-energy, spin-up-along-`z`
/// subspace: `(1/4)(1 + g0)(1 + z . Sigma)`.
pub fn spin_projector(z: [f64; 3]) -> Mat<4> {
    let g = gamma4();
    let one = Mat::<4>::identity();
    ((one + g[0]) * (one + sigma_dot(z))).scale_re(0.25)
}

/// Unit column spanning the range of [`spin_projector`], with the phase fixed
/// so that the first component of magnitude above 1e-9 is real and positive.
pub fn basis_spinor(z: [f64; 3]) -> [C; 4] {
    let p = spin_projector(z);
    // Project the coordinate axis with the largest diagonal weight; the
    // projector has rank one so any non-null column spans its range.
    let mut col = 0;
    for i in 1..4 {
        if p.a[i][i].re > p.a[col][col].re {
            col = i;
        }
    }
    let mut u = [c(0.0, 0.0); 4];
    for i in 0..4 {
        u[i] = p.a[i][col];
    }
    let norm: f64 = u.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for x in u.iter_mut() {
        *x /= norm;
    }
    for i in 0..4 {
        if u[i].norm() > 1e-9 {
            let phase = u[i] / u[i].norm();
            for x in u.iter_mut() {
                *x /= phase;
            }
            break;
        }
    }
    u
}

/// Conjugate-linear inner product `sum conj(a_i) b_i`.
pub fn vdot<const N: usize>(a: &[C; N], b: &[C; N]) -> C {
    let mut s = c(0.0, 0.0);
    for i in 0..N {
        s += a[i].conj() * b[i];
    }
    s
}

/// Euclidean norm of a complex vector.
pub fn vnorm<const N: usize>(a: &[C; N]) -> f64 {
    vdot(a, a).re.sqrt()
}

/// Largest component magnitude of the difference of two vectors.
pub fn vdiff<const N: usize>(a: &[C; N], b: &[C; N]) -> f64 {
    let mut m = 0.0f64;
    for i in 0..N {
        m = m.max((a[i] - b[i]).norm());
    }
    m
}
