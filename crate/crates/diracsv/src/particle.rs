//! Charged-particle dynamics written two ways: the familiar noncovariant
//! form `m dv/dt = e (E + v x B)`, and a four-dimensional form whose extra
//! ingredient is a constant unit timelike covector. The four-dimensional
//! equations reproduce the noncovariant ones exactly when the covector is
//! `(1, 0, 0, 0)` and the worldline parameter is coordinate time, and they
//! keep their form under a frame change provided the covector and the field
//! tensor are transformed along with the coordinates.
//!
//! The four-momentum-like quantity is degree-zero homogeneous in the
//! four-velocity, so the parametrization is fixed by the gauge
//! `l . xdot = 1`, maintained exactly by forcing `l . xddot = 0`.

use crate::algebra::METRIC4;
use crate::lorentz::{mdot, rmat_inverse, rmat_mul, rmat_mulv, rmat_transpose};

/// Electromagnetic field tensor with constant and linear-in-position parts:
/// `F^{ik}(x) = f0^{ik} + sum_l fx[l]^{ik} x^l`. Antisymmetry is guaranteed
/// by the constructors and preserved by frame changes.
#[derive(Clone, Copy, Debug)]
pub struct EMField {
    pub f0: [[f64; 4]; 4],
    pub fx: [[[f64; 4]; 4]; 4],
}

/// Antisymmetric tensor block from electric and magnetic three-vectors:
/// `F^{a0} = E^a` and `F^{ab} = -eps_{abc} B^c`.
fn block_from_e_b(e: [f64; 3], b: [f64; 3]) -> [[f64; 4]; 4] {
    let mut f = [[0.0; 4]; 4];
    for a in 0..3 {
        f[a + 1][0] = e[a];
        f[0][a + 1] = -e[a];
    }
    f[1][2] = -b[2];
    f[2][1] = b[2];
    f[2][3] = -b[0];
    f[3][2] = b[0];
    f[3][1] = -b[1];
    f[1][3] = b[1];
    f
}

impl EMField {
    pub fn uniform(e: [f64; 3], b: [f64; 3]) -> Self {
        EMField { f0: block_from_e_b(e, b), fx: [[[0.0; 4]; 4]; 4] }
    }

    /// Adds a gradient block: the field picks up `x^axis` times the tensor
    /// built from the given electric and magnetic coefficient vectors.
    pub fn with_linear(mut self, axis: usize, e: [f64; 3], b: [f64; 3]) -> Self {
        let block = block_from_e_b(e, b);
        for i in 0..4 {
            for k in 0..4 {
                self.fx[axis][i][k] += block[i][k];
            }
        }
        self
    }

    pub fn tensor_at(&self, x: &[f64; 4]) -> [[f64; 4]; 4] {
        let mut f = self.f0;
        for l in 0..4 {
            if x[l] != 0.0 {
                for i in 0..4 {
                    for k in 0..4 {
                        f[i][k] += self.fx[l][i][k] * x[l];
                    }
                }
            }
        }
        f
    }

    pub fn electric_at(&self, x: &[f64; 4]) -> [f64; 3] {
        let f = self.tensor_at(x);
        [f[1][0], f[2][0], f[3][0]]
    }

    pub fn magnetic_at(&self, x: &[f64; 4]) -> [f64; 3] {
        let f = self.tensor_at(x);
        [f[3][2], f[1][3], f[2][1]]
    }

    /// The field seen from coordinates `x~ = Lambda x`: both tensor indices
    /// rotate with the matrix and the position argument is pulled back, so
    /// the result stays linear in the new coordinates.
    pub fn transformed(&self, lambda: &[[f64; 4]; 4]) -> EMField {
        let inv = rmat_inverse(lambda).expect("frame matrices are invertible");
        let lt = rmat_transpose(lambda);
        let f0 = rmat_mul(lambda, &rmat_mul(&self.f0, &lt));
        let mut fx = [[[0.0; 4]; 4]; 4];
        for l in 0..4 {
            let moved = rmat_mul(lambda, &rmat_mul(&self.fx[l], &lt));
            for s in 0..4 {
                let w = inv[l][s];
                if w != 0.0 {
                    for i in 0..4 {
                        for k in 0..4 {
                            fx[s][i][k] += w * moved[i][k];
                        }
                    }
                }
            }
        }
        EMField { f0, fx }
    }
}

/// One classical Runge-Kutta step of the autonomous system `y' = rhs(y)`.
pub fn rk4_step<const S: usize>(
    rhs: &dyn Fn(&[f64; S]) -> [f64; S],
    y: &[f64; S],
    h: f64,
) -> [f64; S] {
    let shift = |y: &[f64; S], k: &[f64; S], s: f64| {
        let mut out = *y;
        for i in 0..S {
            out[i] += s * k[i];
        }
        out
    };
    let k1 = rhs(y);
    let k2 = rhs(&shift(y, &k1, h / 2.0));
    let k3 = rhs(&shift(y, &k2, h / 2.0));
    let k4 = rhs(&shift(y, &k3, h));
    let mut out = *y;
    for i in 0..S {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// State layout for the noncovariant equations: `(t, x, v)`.
pub fn newtonian_rhs(field: &EMField, charge: f64, mass: f64, y: &[f64; 7]) -> [f64; 7] {
    let x4 = [y[0], y[1], y[2], y[3]];
    let e = field.electric_at(&x4);
    let b = field.magnetic_at(&x4);
    let v = [y[4], y[5], y[6]];
    let vxb = [
        v[1] * b[2] - v[2] * b[1],
        v[2] * b[0] - v[0] * b[2],
        v[0] * b[1] - v[1] * b[0],
    ];
    [
        1.0,
        v[0],
        v[1],
        v[2],
        charge / mass * (e[0] + vxb[0]),
        charge / mass * (e[1] + vxb[1]),
        charge / mass * (e[2] + vxb[2]),
    ]
}

/// Integrates the noncovariant equations from `(x0, v0)` at `t = 0`.
pub fn integrate_newtonian(
    field: &EMField,
    charge: f64,
    mass: f64,
    x0: [f64; 3],
    v0: [f64; 3],
    h: f64,
    steps: usize,
) -> ([f64; 3], [f64; 3]) {
    let mut y = [0.0, x0[0], x0[1], x0[2], v0[0], v0[1], v0[2]];
    let rhs = |y: &[f64; 7]| newtonian_rhs(field, charge, mass, y);
    for _ in 0..steps {
        y = rk4_step(&rhs, &y, h);
    }
    ([y[1], y[2], y[3]], [y[4], y[5], y[6]])
}

/// The four-momentum-like bracket: `P^i = xdot^i / (l.xdot)
/// - (1/2) g^{ik} l_k (xdot.xdot) / (l.xdot)^2`; `l` carries lower indices.
pub fn momentum_like(l: &[f64; 4], xdot: &[f64; 4]) -> [f64; 4] {
    let d: f64 = (0..4).map(|k| l[k] * xdot[k]).sum();
    let u2 = mdot(xdot, xdot);
    let mut p = [0.0; 4];
    for i in 0..4 {
        p[i] = xdot[i] / d - 0.5 * METRIC4[i] * l[i] * u2 / (d * d);
    }
    p
}

/// Jacobian of [`momentum_like`] with respect to the four-velocity. Singular
/// along the four-velocity itself (degree-zero homogeneity), which is why a
/// gauge row is appended before solving.
fn momentum_jacobian(l: &[f64; 4], xdot: &[f64; 4]) -> [[f64; 4]; 4] {
    let d: f64 = (0..4).map(|k| l[k] * xdot[k]).sum();
    let u2 = mdot(xdot, xdot);
    let mut j = [[0.0; 4]; 4];
    for i in 0..4 {
        let lup = METRIC4[i] * l[i];
        for k in 0..4 {
            let mut v = if i == k { 1.0 / d } else { 0.0 };
            v -= xdot[i] * l[k] / (d * d);
            v -= lup * METRIC4[k] * xdot[k] / (d * d);
            v += lup * u2 * l[k] / (d * d * d);
            j[i][k] = v;
        }
    }
    j
}

/// Lorentz force with both tensor indices raised: `K^i = e F^{il} g_{lk}
/// xdot^k`, evaluated on the field at the current position.
pub fn force(field: &EMField, charge: f64, x: &[f64; 4], xdot: &[f64; 4]) -> [f64; 4] {
    let f = field.tensor_at(x);
    let mut k = [0.0; 4];
    for i in 0..4 {
        for l in 0..4 {
            k[i] += charge * f[i][l] * METRIC4[l] * xdot[l];
        }
    }
    k
}

/// Solves `m dP/dtau = K` for the four-acceleration in the gauge
/// `l . xddot = 0`. The four equations are consistent but rank three, so the
/// gauge row completes them to a positive-definite normal system and the
/// minimizer is the exact solution.
pub fn covariant_acceleration(
    field: &EMField,
    charge: f64,
    mass: f64,
    l: &[f64; 4],
    x: &[f64; 4],
    xdot: &[f64; 4],
) -> [f64; 4] {
    let j = momentum_jacobian(l, xdot);
    let k = force(field, charge, x, xdot);
    let jt = rmat_transpose(&j);
    let mut a = rmat_mul(&jt, &j);
    for i in 0..4 {
        for kk in 0..4 {
            a[i][kk] += l[i] * l[kk];
        }
    }
    let mut b = [0.0; 4];
    for i in 0..4 {
        for s in 0..4 {
            b[i] += jt[i][s] * k[s] / mass;
        }
    }
    let inv = rmat_inverse(&a).expect("gauge-completed normal matrix is invertible");
    rmat_mulv(&inv, &b)
}

/// Largest violation of the four raw equations (plus the gauge row) by the
/// solved acceleration; vanishes to rounding when the system is consistent.
pub fn acceleration_residual(
    field: &EMField,
    charge: f64,
    mass: f64,
    l: &[f64; 4],
    x: &[f64; 4],
    xdot: &[f64; 4],
) -> f64 {
    let xddot = covariant_acceleration(field, charge, mass, l, x, xdot);
    let j = momentum_jacobian(l, xdot);
    let k = force(field, charge, x, xdot);
    let mut worst: f64 = (0..4).map(|i| l[i] * xddot[i]).sum::<f64>().abs();
    for i in 0..4 {
        let mut r = -k[i] / mass;
        for s in 0..4 {
            r += j[i][s] * xddot[s];
        }
        worst = worst.max(r.abs());
    }
    worst
}

/// State layout for the four-dimensional equations: `(x, xdot)`.
pub fn covariant_rhs(
    field: &EMField,
    charge: f64,
    mass: f64,
    l: &[f64; 4],
    y: &[f64; 8],
) -> [f64; 8] {
    let x = [y[0], y[1], y[2], y[3]];
    let xdot = [y[4], y[5], y[6], y[7]];
    let xddot = covariant_acceleration(field, charge, mass, l, &x, &xdot);
    [
        xdot[0], xdot[1], xdot[2], xdot[3], xddot[0], xddot[1], xddot[2], xddot[3],
    ]
}

/// Integrates the four-dimensional equations; the initial four-velocity
/// must satisfy the gauge `l . xdot = 1`.
pub fn integrate_covariant(
    field: &EMField,
    charge: f64,
    mass: f64,
    l: [f64; 4],
    x0: [f64; 4],
    xdot0: [f64; 4],
    h: f64,
    steps: usize,
) -> ([f64; 4], [f64; 4]) {
    let gauge: f64 = (0..4).map(|k| l[k] * xdot0[k]).sum();
    assert!(
        (gauge - 1.0).abs() < 1e-9,
        "initial four-velocity must satisfy the parametrization gauge"
    );
    let mut y = [
        x0[0], x0[1], x0[2], x0[3], xdot0[0], xdot0[1], xdot0[2], xdot0[3],
    ];
    let rhs = |y: &[f64; 8]| covariant_rhs(field, charge, mass, &l, y);
    for _ in 0..steps {
        y = rk4_step(&rhs, &y, h);
    }
    ([y[0], y[1], y[2], y[3]], [y[4], y[5], y[6], y[7]])
}

/// Covector components in the new frame: `l~ = (Lambda^{-1})^T l`.
pub fn transform_covector(lambda: &[[f64; 4]; 4], l: &[f64; 4]) -> [f64; 4] {
    let inv = rmat_inverse(lambda).expect("frame matrices are invertible");
    let mut out = [0.0; 4];
    for i in 0..4 {
        for k in 0..4 {
            out[i] += inv[k][i] * l[k];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{omega_from_pairs, vector_rep};

    fn frozen_setup() -> (EMField, f64, f64, [f64; 3], [f64; 3]) {
        (
            EMField::uniform([0.3, 0.0, 0.0], [0.0, 0.0, 0.7]),
            1.0,
            1.3,
            [0.0, 0.0, 0.0],
            [0.2, -0.1, 0.05],
        )
    }

    #[test]
    fn tensor_blocks_carry_the_field_vectors() {
        let field = EMField::uniform([0.3, -0.2, 0.1], [0.4, 0.5, -0.6])
            .with_linear(1, [0.01, 0.0, 0.02], [0.0, 0.03, 0.0]);
        let x = [0.7, 1.1, -0.4, 2.0];
        let f = field.tensor_at(&x);
        for i in 0..4 {
            for k in 0..4 {
                assert!((f[i][k] + f[k][i]).abs() < 1e-15, "antisymmetry at {},{}", i, k);
            }
        }
        let e = field.electric_at(&x);
        assert!((e[0] - (0.3 + 0.01 * 1.1)).abs() < 1e-15);
        assert!((e[2] - (0.1 + 0.02 * 1.1)).abs() < 1e-15);
        let b = field.magnetic_at(&x);
        assert!((b[1] - (0.5 + 0.03 * 1.1)).abs() < 1e-15);
    }

    #[test]
    fn newtonian_endpoint_matches_reference_values() {
        let (field, charge, mass, x0, v0) = frozen_setup();
        let (x, v) = integrate_newtonian(&field, charge, mass, x0, v0, 0.01, 200);
        let want_x = [
            0.64798715074166480,
            -0.51521272174625210,
            0.10000000000000007,
        ];
        let want_v = [
            0.38411622675201829,
            -0.44891615809166557,
            0.050000000000000003,
        ];
        for a in 0..3 {
            assert!((x[a] - want_x[a]).abs() < 1e-13, "x[{}] = {:.17}", a, x[a]);
            assert!((v[a] - want_v[a]).abs() < 1e-13, "v[{}] = {:.17}", a, v[a]);
        }
    }

    #[test]
    fn magnetic_force_does_no_work() {
        let (field, charge, mass, _, _) = frozen_setup();
        // Power balance (m/2) d(v^2)/dt = e E.v holds exactly for the
        // right-hand side at any state.
        let y = [1.3, 0.4, -0.2, 0.9, 0.31, -0.44, 0.12];
        let dy = newtonian_rhs(&field, charge, mass, &y);
        let v = [y[4], y[5], y[6]];
        let a = [dy[4], dy[5], dy[6]];
        let e = field.electric_at(&[y[0], y[1], y[2], y[3]]);
        let power = mass * (v[0] * a[0] + v[1] * a[1] + v[2] * a[2]);
        let ev = charge * (e[0] * v[0] + e[1] * v[1] + e[2] * v[2]);
        assert!((power - ev).abs() < 1e-15);
    }

    #[test]
    fn momentum_like_reduces_in_the_rest_gauge() {
        let l = [1.0, 0.0, 0.0, 0.0];
        let v = [0.2, -0.1, 0.05];
        let xdot = [1.0, v[0], v[1], v[2]];
        let p = momentum_like(&l, &xdot);
        let v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        assert!((p[0] - 0.5 * (1.0 + v2)).abs() < 1e-15);
        for a in 0..3 {
            assert!((p[a + 1] - v[a]).abs() < 1e-15);
        }
    }

    #[test]
    fn covariant_form_reduces_to_newtonian_motion() {
        let (field, charge, mass, x0, v0) = frozen_setup();
        let l = [1.0, 0.0, 0.0, 0.0];
        let (x4, xdot4) = integrate_covariant(
            &field,
            charge,
            mass,
            l,
            [0.0, x0[0], x0[1], x0[2]],
            [1.0, v0[0], v0[1], v0[2]],
            0.01,
            200,
        );
        assert!((x4[0] - 2.0).abs() < 1e-12, "time coordinate advances with tau");
        assert!((xdot4[0] - 1.0).abs() < 1e-13, "gauge is preserved");
        let want_x = [
            0.64798715074166480,
            -0.51521272174625210,
            0.10000000000000007,
        ];
        let want_v = [
            0.38411622675201829,
            -0.44891615809166557,
            0.050000000000000003,
        ];
        for a in 0..3 {
            assert!((x4[a + 1] - want_x[a]).abs() < 1e-10);
            assert!((xdot4[a + 1] - want_v[a]).abs() < 1e-10);
        }
        // The four raw equations are satisfied, not just the projected ones.
        let res = acceleration_residual(
            &field,
            charge,
            mass,
            &l,
            &x4,
            &xdot4,
        );
        assert!(res < 1e-12, "residual {}", res);
    }

    #[test]
    fn form_is_preserved_when_all_constants_transform() {
        let field = EMField::uniform([0.3, 0.0, 0.0], [0.0, 0.0, 0.7])
            .with_linear(1, [0.02, 0.0, 0.01], [0.0, 0.015, 0.0])
            .with_linear(0, [0.0, 0.01, 0.0], [0.005, 0.0, 0.0]);
        let (charge, mass) = (1.0, 1.3);
        let l = [1.0, 0.0, 0.0, 0.0];
        let x0 = [0.0, 0.1, -0.2, 0.05];
        let xdot0 = [1.0, 0.2, -0.1, 0.05];
        let (h, steps) = (0.01, 150);
        let (xa, xda) = integrate_covariant(&field, charge, mass, l, x0, xdot0, h, steps);

        let lambda = vector_rep(&omega_from_pairs::<4>(&[
            (0, 1, 0.3),
            (1, 2, 0.4),
            (0, 3, -0.2),
        ]));
        let moved_field = field.transformed(&lambda);
        let moved_l = transform_covector(&lambda, &l);
        let (xb, xdb) = integrate_covariant(
            &moved_field,
            charge,
            mass,
            moved_l,
            rmat_mulv(&lambda, &x0),
            rmat_mulv(&lambda, &xdot0),
            h,
            steps,
        );
        let xa_moved = rmat_mulv(&lambda, &xa);
        let xda_moved = rmat_mulv(&lambda, &xda);
        for i in 0..4 {
            assert!((xb[i] - xa_moved[i]).abs() < 1e-9, "x[{}]", i);
            assert!((xdb[i] - xda_moved[i]).abs() < 1e-9, "xdot[{}]", i);
        }
        let gauge: f64 = (0..4).map(|k| moved_l[k] * xdb[k]).sum();
        assert!((gauge - 1.0).abs() < 1e-11);

        // Keeping the covector fixed while the field and data move breaks
        // the correspondence by a visible margin.
        let (xc, _) = integrate_covariant(
            &moved_field,
            charge,
            mass,
            {
                // Renormalize the gauge for the untransformed covector so the
                // integration is well-posed.
                l
            },
            rmat_mulv(&lambda, &x0),
            {
                let xd = rmat_mulv(&lambda, &xdot0);
                let d: f64 = (0..4).map(|k| l[k] * xd[k]).sum();
                [xd[0] / d, xd[1] / d, xd[2] / d, xd[3] / d]
            },
            h,
            steps,
        );
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            dev = dev.max((xc[i] - xa_moved[i]).abs());
        }
        assert!(dev > 1e-3, "fixed covector should visibly change the motion, dev = {}", dev);
    }

    #[test]
    fn integrator_error_scales_at_fourth_order() {
        // Uniform magnetic field: velocity rotates at rate e B / m; compare
        // one full period against the closed form at two step sizes.
        let field = EMField::uniform([0.0, 0.0, 0.0], [0.0, 0.0, 1.0]);
        let (charge, mass) = (1.0, 1.0);
        let v0 = [0.3, 0.0, 0.0];
        let period = 2.0 * std::f64::consts::PI;
        let err = |steps: usize| -> f64 {
            let (x, v) =
                integrate_newtonian(&field, charge, mass, [0.0; 3], v0, period / steps as f64, steps);
            // After one period the state returns to the start.
            let mut e: f64 = 0.0;
            for a in 0..3 {
                e = e.max((x[a] - [0.0, 0.0, 0.0][a]).abs());
                e = e.max((v[a] - v0[a]).abs());
            }
            e
        };
        let ratio = err(80) / err(160);
        assert!(
            (12.0..20.0).contains(&ratio),
            "fourth-order step halving should cut the error ~16x, got {}",
            ratio
        );
    }
}
