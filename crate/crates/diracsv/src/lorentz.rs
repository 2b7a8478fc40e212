//! Lorentz transformations in the vector and spinor representations, their
//! pairing, and the lightcone form of the square-root intertwining operator.
//!
//! A transformation is generated by an antisymmetric coefficient matrix
//! `w[i][k]` (both indices down). The vector representation exponentiates the
//! mixed-index generator `G^i_k = g^{ii} w[i][k]`; the spinor representation
//! exponentiates `(1/8) w[i][k] [g^i, g^k]`. Exponentiating the same
//! coefficients on both sides makes the pairing exact for finite
//! transformations, not just infinitesimal ones.

use crate::algebra::{c, Mat, C};

/// Minkowski inner product with signature (+, -, ..., -).
pub fn mdot<const N: usize>(a: &[f64; N], b: &[f64; N]) -> f64 {
    let mut s = a[0] * b[0];
    for i in 1..N {
        s -= a[i] * b[i];
    }
    s
}

/// Raises or lowers an index (an involution for this diagonal metric).
pub fn flip_index<const N: usize>(a: &[f64; N]) -> [f64; N] {
    let mut out = *a;
    for i in 1..N {
        out[i] = -out[i];
    }
    out
}

pub fn rmat_identity<const N: usize>() -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for i in 0..N {
        m[i][i] = 1.0;
    }
    m
}

pub fn rmat_mul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            for j in 0..N {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn rmat_mulv<const N: usize>(a: &[[f64; N]; N], v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for i in 0..N {
        for j in 0..N {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

pub fn rmat_transpose<const N: usize>(a: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = a[j][i];
        }
    }
    out
}

fn to_complex<const N: usize>(a: &[[f64; N]; N]) -> Mat<N> {
    let mut m = Mat::zeros();
    for i in 0..N {
        for j in 0..N {
            m.a[i][j] = c(a[i][j], 0.0);
        }
    }
    m
}

fn re_part<const N: usize>(m: &Mat<N>) -> [[f64; N]; N] {
    let mut a = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            a[i][j] = m.a[i][j].re;
        }
    }
    a
}

pub fn rmat_expm<const N: usize>(a: &[[f64; N]; N]) -> [[f64; N]; N] {
    re_part(&to_complex(a).expm())
}

pub fn rmat_inverse<const N: usize>(a: &[[f64; N]; N]) -> Option<[[f64; N]; N]> {
    to_complex(a).inverse().map(|m| re_part(&m))
}

/// Builds an antisymmetric coefficient matrix from the strictly-upper pairs.
pub fn omega_from_pairs<const N: usize>(pairs: &[(usize, usize, f64)]) -> [[f64; N]; N] {
    let mut w = [[0.0; N]; N];
    for &(i, k, v) in pairs {
        w[i][k] += v;
        w[k][i] -= v;
    }
    w
}

/// Largest coefficient magnitude, used to scale infinitesimal-residual bounds.
pub fn omega_norm<const N: usize>(w: &[[f64; N]; N]) -> f64 {
    let mut m = 0.0f64;
    for row in w {
        for &x in row {
            m = m.max(x.abs());
        }
    }
    m
}

/// Finite vector-representation matrix `exp(G)` with `G^i_k = g^{ii} w[i][k]`.
pub fn vector_rep<const N: usize>(w: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut g = [[0.0; N]; N];
    for i in 0..N {
        let sign = if i == 0 { 1.0 } else { -1.0 };
        for k in 0..N {
            g[i][k] = sign * w[i][k];
        }
    }
    rmat_expm(&g)
}

/// Finite spinor-representation matrix `exp((1/8) w[i][k] [g^i, g^k])`.
pub fn spinor_rep<const N: usize>(w: &[[f64; N]; N], gammas: &[Mat<N>; N]) -> Mat<N> {
    let mut k_gen = Mat::<N>::zeros();
    for i in 0..N {
        for k in 0..N {
            if w[i][k] != 0.0 {
                let comm = gammas[i] * gammas[k] - gammas[k] * gammas[i];
                k_gen = k_gen + comm.scale_re(w[i][k] / 8.0);
            }
        }
    }
    k_gen.expm()
}

/// First-order (truncated) pair `(1 + G, 1 + K)` for the same coefficients.
pub fn infinitesimal_pair<const N: usize>(
    w: &[[f64; N]; N],
    gammas: &[Mat<N>; N],
) -> ([[f64; N]; N], Mat<N>) {
    let mut lambda = rmat_identity::<N>();
    for i in 0..N {
        let sign = if i == 0 { 1.0 } else { -1.0 };
        for k in 0..N {
            lambda[i][k] += sign * w[i][k];
        }
    }
    let mut s = Mat::<N>::identity();
    for i in 0..N {
        for k in 0..N {
            if w[i][k] != 0.0 {
                let comm = gammas[i] * gammas[k] - gammas[k] * gammas[i];
                s = s + comm.scale_re(w[i][k] / 8.0);
            }
        }
    }
    (lambda, s)
}

/// Residual of the intertwining relation `S^-1 g^l S = Lambda^l_s g^s`,
/// reported as the largest entry over all `l`.
pub fn intertwine_residual<const N: usize>(
    lambda: &[[f64; N]; N],
    s: &Mat<N>,
    gammas: &[Mat<N>; N],
) -> f64 {
    let s_inv = s.inverse().expect("spinor representation matrices are invertible");
    let mut worst = 0.0f64;
    for l in 0..N {
        let lhs = s_inv * gammas[l] * *s;
        let mut rhs = Mat::<N>::zeros();
        for si in 0..N {
            rhs = rhs + gammas[si].scale_re(lambda[l][si]);
        }
        worst = worst.max((lhs - rhs).max_abs());
    }
    worst
}

/// Residual of the conjugation property `g0 S^dag g0 = S^-1`.
pub fn conjugation_residual<const N: usize>(s: &Mat<N>, g0: &Mat<N>) -> f64 {
    let s_inv = s.inverse().expect("invertible");
    ((*g0 * s.adjoint() * *g0) - s_inv).max_abs()
}

/// Residual of metric preservation `Lambda^T g Lambda = g`.
pub fn metric_residual<const N: usize>(lambda: &[[f64; N]; N]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..N {
        for k in 0..N {
            let mut s = 0.0;
            for l in 0..N {
                let gl = if l == 0 { 1.0 } else { -1.0 };
                s += lambda[l][i] * gl * lambda[l][k];
            }
            let want = if i == k {
                if i == 0 {
                    1.0
                } else {
                    -1.0
                }
            } else {
                0.0
            };
            worst = worst.max((s - want).abs());
        }
    }
    worst
}

/// Vector current `j^l = Re(psi^dag g^0 g^l psi)`.
pub fn current<const N: usize>(gammas: &[Mat<N>; N], psi: &[C; N]) -> [f64; N] {
    let mut j = [0.0; N];
    let g0psi = gammas[0].mulv(psi);
    for l in 0..N {
        let glpsi = gammas[l].mulv(psi);
        let mut s = c(0.0, 0.0);
        // psi^dag g0 g^l psi computed as (g0 psi)^dag ... no: g0 is Hermitian
        // here, so psi^dag g0 g^l psi = (g0 psi)^dag (g^l psi).
        for i in 0..N {
            s += g0psi[i].conj() * glpsi[i];
        }
        j[l] = s.re;
    }
    j
}

/// Transforms the current both ways: rotating the matrices
/// (`j^l -> Lambda^l_s j^s`) and rotating the spinor (`psi -> S psi`).
/// Returns the pair of transformed currents.
pub fn current_two_ways<const N: usize>(
    gammas: &[Mat<N>; N],
    lambda: &[[f64; N]; N],
    s: &Mat<N>,
    psi: &[C; N],
) -> ([f64; N], [f64; N]) {
    let way1 = rmat_mulv(lambda, &current(gammas, psi));
    let spsi = s.mulv(psi);
    let way2 = current(gammas, &spsi);
    (way1, way2)
}

// ---------------------------------------------------------------------------
// Lightcone form of the square-root operator in 1+1 dimensions.
// ---------------------------------------------------------------------------

/// Lightcone data for the square-root operator: the combinations
/// `w_pm = w0 +- w1` of a constant timelike vector, and the symbols
/// `d_pm = d0 +- d1` standing for the derivative the operator multiplies.
/// All four are kept complex so that reflection phases stay visible.
#[derive(Clone, Copy, Debug)]
pub struct Lightcone {
    pub wp: C,
    pub wm: C,
    pub dp: C,
    pub dm: C,
}

impl Lightcone {
    pub fn new(w: [f64; 2], d: [C; 2]) -> Self {
        Lightcone {
            wp: c(w[0] + w[1], 0.0),
            wm: c(w[0] - w[1], 0.0),
            dp: d[0] + d[1],
            dm: d[0] - d[1],
        }
    }

    /// Continuous boost: plus components scale by `e^chi`, minus components
    /// by `e^-chi`.
    pub fn boost(&self, chi: f64) -> Self {
        let ep = c(chi.exp(), 0.0);
        let em = c((-chi).exp(), 0.0);
        Lightcone { wp: ep * self.wp, wm: em * self.wm, dp: ep * self.dp, dm: em * self.dm }
    }

    /// Space reflection swaps plus and minus components.
    pub fn space_reflect(&self) -> Self {
        Lightcone { wp: self.wm, wm: self.wp, dp: self.dm, dm: self.dp }
    }

    /// Time reflection swaps components and attaches opposite half-turn
    /// phases, kept as literal complex factors so the square-root branch is
    /// selected deterministically.
    pub fn time_reflect(&self) -> Self {
        let plus = C::from_polar(1.0, std::f64::consts::PI);
        let minus = C::from_polar(1.0, -std::f64::consts::PI);
        Lightcone { wp: plus * self.wm, wm: minus * self.wp, dp: plus * self.dm, dm: minus * self.dp }
    }
}

/// The two-component square-root operator evaluated on lightcone data:
/// `(sqrt(w+) + i lam sqrt(w-) d+, sqrt(w-) + i lam sqrt(w+) d-)`.
pub fn sqrt_operator(p: &Lightcone, lam: f64) -> [C; 2] {
    let il = c(0.0, lam);
    [
        p.wp.sqrt() + il * p.wm.sqrt() * p.dp,
        p.wm.sqrt() + il * p.wp.sqrt() * p.dm,
    ]
}

/// Applies the square-root operator to a scalar field sample: `value` is the
/// field at the point and `d = (d0 psi, d1 psi)` its derivatives there.
pub fn apply_sqrt_operator(w: [f64; 2], lam: f64, value: C, d: [C; 2]) -> [C; 2] {
    let wp = c(w[0] + w[1], 0.0).sqrt();
    let wm = c(w[0] - w[1], 0.0).sqrt();
    let il = c(0.0, lam);
    [
        wp * value + il * wm * (d[0] + d[1]),
        wm * value + il * wp * (d[0] - d[1]),
    ]
}

/// Residual of the boost law: applying the operator to boosted data equals
/// the matrix factor `exp(-g0 g1 chi / 2)` times the original column.
pub fn sqrt_operator_boost_residual(p: &Lightcone, lam: f64, chi: f64) -> f64 {
    let g = crate::algebra::gamma2();
    let factor = (g[0] * g[1]).scale_re(-chi / 2.0).expm();
    let lhs = sqrt_operator(&p.boost(chi), lam);
    let rhs = factor.mulv(&sqrt_operator(p, lam));
    crate::algebra::vdiff(&lhs, &rhs)
}

/// Residual of the time-reflection law with the literal factor
/// `e^{i pi / 2} g1`.
pub fn sqrt_operator_time_reflection_residual(p: &Lightcone, lam: f64) -> f64 {
    let g = crate::algebra::gamma2();
    let factor = g[1].scale(C::from_polar(1.0, std::f64::consts::FRAC_PI_2));
    let lhs = sqrt_operator(&p.time_reflect(), lam);
    let rhs = factor.mulv(&sqrt_operator(p, lam));
    crate::algebra::vdiff(&lhs, &rhs)
}

/// Least-squares fit of the constant `c` in the space-reflection law
/// `L(reflected) = c g0 L(original)` over a batch of lightcone samples.
/// Returns the fitted constant and the worst residual it leaves.
pub fn sqrt_operator_space_reflection_fit(samples: &[(Lightcone, f64)]) -> (C, f64) {
    let g = crate::algebra::gamma2();
    let mut num = c(0.0, 0.0);
    let mut den = 0.0f64;
    let mut pairs = Vec::new();
    for (p, lam) in samples {
        let lhs = sqrt_operator(&p.space_reflect(), *lam);
        let rhs = g[0].mulv(&sqrt_operator(p, *lam));
        for i in 0..2 {
            num += rhs[i].conj() * lhs[i];
            den += rhs[i].norm_sqr();
            pairs.push((lhs[i], rhs[i]));
        }
    }
    let cfit = num / den;
    let mut worst = 0.0f64;
    for (l, r) in pairs {
        worst = worst.max((l - cfit * r).norm());
    }
    (cfit, worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gamma2, gamma4, vdiff};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn finite_boost_pairing_is_exact_2d() {
        let g = gamma2();
        for chi in [-1.3, -0.4, 0.0, 0.7, 2.1] {
            let w = omega_from_pairs::<2>(&[(0, 1, chi)]);
            let lambda = vector_rep(&w);
            let s = spinor_rep(&w, &g);
            assert!((lambda[0][0] - chi.cosh()).abs() < 1e-13);
            assert!((lambda[0][1] - chi.sinh()).abs() < 1e-13);
            assert!(intertwine_residual(&lambda, &s, &g) < 1e-12, "chi = {}", chi);
            assert!(metric_residual(&lambda) < 1e-12);
            assert!(conjugation_residual(&s, &g[0]) < 1e-12);
        }
    }

    #[test]
    fn finite_random_pairing_is_exact_4d() {
        let g = gamma4();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut pairs = Vec::new();
            for i in 0..4 {
                for k in (i + 1)..4 {
                    pairs.push((i, k, rng.gen_range(-0.8..0.8)));
                }
            }
            let w = omega_from_pairs::<4>(&pairs);
            let lambda = vector_rep(&w);
            let s = spinor_rep(&w, &g);
            assert!(intertwine_residual(&lambda, &s, &g) < 1e-11);
            assert!(metric_residual(&lambda) < 1e-11);
            assert!(conjugation_residual(&s, &g[0]) < 1e-11);
        }
    }

    #[test]
    fn infinitesimal_pairing_residual_is_second_order() {
        let g = gamma4();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let eps = 10f64.powf(rng.gen_range(-6.0..-3.0));
            let mut pairs = Vec::new();
            for i in 0..4 {
                for k in (i + 1)..4 {
                    pairs.push((i, k, eps * rng.gen_range(-1.0..1.0)));
                }
            }
            let w = omega_from_pairs::<4>(&pairs);
            let (lambda, s) = infinitesimal_pair(&w, &g);
            let r = intertwine_residual(&lambda, &s, &g);
            let bound = 10.0 * omega_norm(&w).powi(2);
            assert!(r < bound, "residual {:.3e} vs bound {:.3e}", r, bound);
        }
    }

    #[test]
    fn current_transforms_the_same_both_ways() {
        let g = gamma4();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let mut pairs = Vec::new();
            for i in 0..4 {
                for k in (i + 1)..4 {
                    pairs.push((i, k, rng.gen_range(-0.5..0.5)));
                }
            }
            let w = omega_from_pairs::<4>(&pairs);
            let lambda = vector_rep(&w);
            let s = spinor_rep(&w, &g);
            let mut psi = [c(0.0, 0.0); 4];
            for p in psi.iter_mut() {
                *p = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
            let (a, b) = current_two_ways(&g, &lambda, &s, &psi);
            for l in 0..4 {
                assert!((a[l] - b[l]).abs() < 1e-12, "component {}: {} vs {}", l, a[l], b[l]);
            }
        }
    }

    #[test]
    fn sqrt_operator_matches_reference_values() {
        // Plane wave e^{-i(omega t - k x)} at x = (0.4, 0.9) with
        // (omega, k) = (1.25, 0.75): derivatives are d0 = -i omega psi,
        // d1 = i k psi. Values frozen from an independent implementation.
        let lam = 1.0;
        let w = [2.0, 1.0];
        let (omega, k1) = (1.25, 0.75);
        let x = [0.4, 0.9];
        let value = C::from_polar(1.0, -(omega * x[0] - k1 * x[1]));
        let d = [c(0.0, -omega) * value, c(0.0, k1) * value];
        let got = apply_sqrt_operator(w, lam, value, d);
        let want = [
            c(2.1979596663972623, 0.38861820912009915),
            c(4.3959193327945245, 0.77723641824019829),
        ];
        assert!(vdiff(&got, &want) < 1e-13, "{:?}", got);
    }

    #[test]
    fn sqrt_operator_boost_and_reflection_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..30 {
            // Random timelike w with positive time component.
            let w1: f64 = rng.gen_range(-1.0..1.0);
            let w0: f64 = w1.abs() + rng.gen_range(0.1..2.0);
            let d = [
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ];
            let lam = rng.gen_range(0.3..2.0);
            let p = Lightcone::new([w0, w1], d);
            let chi = rng.gen_range(-1.5..1.5);
            assert!(sqrt_operator_boost_residual(&p, lam, chi) < 1e-12);
            assert!(sqrt_operator_time_reflection_residual(&p, lam) < 1e-12);
        }
    }

    #[test]
    fn sqrt_operator_space_reflection_constant_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let mut samples = Vec::new();
        for _ in 0..40 {
            let w1: f64 = rng.gen_range(-1.0..1.0);
            let w0: f64 = w1.abs() + rng.gen_range(0.1..2.0);
            let d = [
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ];
            let lam = rng.gen_range(0.3..2.0);
            samples.push((Lightcone::new([w0, w1], d), lam));
        }
        let (cfit, resid) = sqrt_operator_space_reflection_fit(&samples);
        assert!((cfit - c(1.0, 0.0)).norm() < 1e-12, "c = {}", cfit);
        assert!(resid < 1e-12);
    }
}
