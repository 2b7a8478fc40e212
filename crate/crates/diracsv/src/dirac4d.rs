//! The 3+1-dimensional change of variables: the four-component spinor is
//! written as amplitude x chiral phase x boost x rotation acting on a fixed
//! basis column, observables are the current vector and spin pseudovector,
//! and the Dirac Lagrangian density splits into a classical piece plus two
//! quantum pieces built from auxiliary unit vectors.
//!
//! Every contraction in the split goes through the metric, so the same code
//! evaluates the density in any frame once the constant vectors (the
//! timelike unit vector and the spacelike unit pseudovector orthogonal to
//! it) are supplied explicitly. The normalization of the azimuth-carrying
//! auxiliary vector uses the Minkowski distance between it and the constant
//! pseudovector, which keeps the rotational term exact pointwise.

use crate::algebra::{c, eps4, gamma4, gamma5, sigma_dot, basis_spinor, Mat, C, METRIC4};
use crate::fields::TrigPoly;
use crate::lorentz::{mdot, rmat_inverse, rmat_mulv};
use rand::Rng;

/// Point values of the spinor parametrization.
#[derive(Clone, Copy, Debug)]
pub struct Params4 {
    pub a: f64,
    pub kappa: f64,
    pub phi: f64,
    pub eta: [f64; 3],
    pub n: [f64; 3],
}

/// The chiral-phase factor `e^{i phi} (cos(kappa/2) + g5 sin(kappa/2))`.
pub fn chiral_factor(phi: f64, kappa: f64) -> Mat<4> {
    let g5 = gamma5();
    let m = Mat::identity().scale_re((kappa / 2.0).cos()) + g5.scale_re((kappa / 2.0).sin());
    m.scale(C::from_polar(1.0, phi))
}

/// The boost factor `cosh(eta/2) + sinh(eta/2) v.(g0 g)` for `eta = |eta_vec|`
/// and `v = eta_vec / eta`; the identity when the rapidity vanishes.
pub fn boost_factor(eta: [f64; 3]) -> Mat<4> {
    let g = gamma4();
    let norm = (eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2]).sqrt();
    if norm == 0.0 {
        return Mat::identity();
    }
    let mut k = Mat::<4>::zeros();
    for a in 0..3 {
        k = k + (g[0] * g[a + 1]).scale_re(eta[a] / norm);
    }
    Mat::identity().scale_re((norm / 2.0).cosh()) + k.scale_re((norm / 2.0).sinh())
}

/// The rotation-like factor `i Sigma.n` for a unit vector `n`.
pub fn rotor_factor(n: [f64; 3]) -> Mat<4> {
    sigma_dot(n).scale(c(0.0, 1.0))
}

/// Assembles the spinor `A E B R u(z)`.
pub fn psi_from_params4(p: &Params4, z: [f64; 3]) -> [C; 4] {
    let m = chiral_factor(p.phi, p.kappa) * boost_factor(p.eta) * rotor_factor(p.n);
    let u = basis_spinor(z);
    let v = m.mulv(&u);
    let mut out = v;
    for x in out.iter_mut() {
        *x *= p.a;
    }
    out
}

fn hermitian_expectation(m: Mat<4>, psi: &[C; 4]) -> f64 {
    let v = m.mulv(psi);
    let mut s = c(0.0, 0.0);
    for i in 0..4 {
        s += psi[i].conj() * v[i];
    }
    s.re
}

fn cross_expectation(m: Mat<4>, psi: &[C; 4], dpsi: &[C; 4]) -> C {
    let v = m.mulv(dpsi);
    let mut s = c(0.0, 0.0);
    for i in 0..4 {
        s += psi[i].conj() * v[i];
    }
    s
}

/// Current vector `j^l = conj(psi) g0 g^l psi`.
pub fn current4(psi: &[C; 4]) -> [f64; 4] {
    let g = gamma4();
    let mut j = [0.0; 4];
    for l in 0..4 {
        j[l] = hermitian_expectation(g[0] * g[l], psi);
    }
    j
}

/// Spin pseudovector `S^l = i conj(psi) g0 g5 g^l psi`.
pub fn spin4(psi: &[C; 4]) -> [f64; 4] {
    let g = gamma4();
    let g5 = gamma5();
    let mut s = [0.0; 4];
    for l in 0..4 {
        s[l] = hermitian_expectation((g[0] * g5 * g[l]).scale(c(0.0, 1.0)), psi);
    }
    s
}

/// Scalar density `conj(psi) g0 psi` (equals `rho cos kappa`).
pub fn scalar_density4(psi: &[C; 4]) -> f64 {
    let g = gamma4();
    hermitian_expectation(g[0], psi)
}

/// Recovers amplitude and rapidity vector from a timelike current.
pub fn amplitude_rapidity_from_current(j: &[f64; 4]) -> (f64, [f64; 3]) {
    let rho = mdot(j, j).sqrt();
    let a = rho.sqrt();
    let ch = j[0] / rho;
    let eta = (ch + (ch * ch - 1.0).max(0.0).sqrt()).ln();
    let js = (j[1] * j[1] + j[2] * j[2] + j[3] * j[3]).sqrt();
    if js == 0.0 {
        return (a, [0.0; 3]);
    }
    (a, [eta * j[1] / js, eta * j[2] / js, eta * j[3] / js])
}

/// Current from amplitude and rapidity vector.
pub fn current_from_amplitude_rapidity(a: f64, eta: &[f64; 3]) -> [f64; 4] {
    let norm = (eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2]).sqrt();
    let a2 = a * a;
    if norm == 0.0 {
        return [a2, 0.0, 0.0, 0.0];
    }
    [
        a2 * norm.cosh(),
        a2 * eta[0] / norm * norm.sinh(),
        a2 * eta[1] / norm * norm.sinh(),
        a2 * eta[2] / norm * norm.sinh(),
    ]
}

/// Unit 3-pseudovector carried by the spin, extracted in the frame where the
/// current has components `(j0, j_vec)`:
/// `xi^al = (S^al - j^al S^0 / (j0 + rho)) / rho`.
pub fn xi_from_spin(j: &[f64; 4], s: &[f64; 4]) -> [f64; 3] {
    let rho = mdot(j, j).sqrt();
    let denom = j[0] + rho;
    [
        (s[1] - j[1] * s[0] / denom) / rho,
        (s[2] - j[2] * s[0] / denom) / rho,
        (s[3] - j[3] * s[0] / denom) / rho,
    ]
}

/// Spin pseudovector from the unit 3-pseudovector and the current.
pub fn spin_from_xi(j: &[f64; 4], xi: &[f64; 3]) -> [f64; 4] {
    let rho = mdot(j, j).sqrt();
    let jxi = j[1] * xi[0] + j[2] * xi[1] + j[3] * xi[2];
    [
        jxi,
        rho * xi[0] + jxi * j[1] / (rho + j[0]),
        rho * xi[1] + jxi * j[2] / (rho + j[0]),
        rho * xi[2] + jxi * j[3] / (rho + j[0]),
    ]
}

/// The pair of constant vectors the covariant split depends on: a timelike
/// unit vector and a spacelike unit pseudovector orthogonal to it.
#[derive(Clone, Copy, Debug)]
pub struct Frame4 {
    pub f: [f64; 4],
    pub z4: [f64; 4],
}

impl Frame4 {
    /// The rest-frame choice: `f = (1, 0)`, `z4 = (0, z)`.
    pub fn rest(z: [f64; 3]) -> Self {
        Frame4 { f: [1.0, 0.0, 0.0, 0.0], z4: [0.0, z[0], z[1], z[2]] }
    }
}

fn add4(a: &[f64; 4], b: &[f64; 4], s: f64) -> [f64; 4] {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]]
}

fn scale4(a: &[f64; 4], s: f64) -> [f64; 4] {
    [s * a[0], s * a[1], s * a[2], s * a[3]]
}

/// Frame-generic version of the spin-direction vector: subtracting from the
/// spin its component along `(j + rho f)` normalized against `f`. Reduces to
/// [`xi_from_spin`] (with vanishing time component) when `f = (1, 0, 0, 0)`.
pub fn xi4(j: &[f64; 4], s: &[f64; 4], f: &[f64; 4]) -> [f64; 4] {
    let rho = mdot(j, j).sqrt();
    let kc = mdot(s, f) / (rho + mdot(j, f));
    let jf = add4(j, f, rho);
    scale4(&add4(s, &jf, -kc), 1.0 / rho)
}

/// Projection orthogonal to `f`: `nu = xi - (xi.f) f`; unit spacelike.
pub fn nu_from_xi(xi: &[f64; 4], f: &[f64; 4]) -> [f64; 4] {
    add4(xi, f, -mdot(xi, f))
}

/// Azimuth-carrying auxiliary vector `mu = nu / sqrt(-(nu - z)(nu - z))`
/// `= nu / sqrt(2 (1 + nu.z))`. Singular where `nu` meets `-z`; valid
/// configurations keep a margin from that set.
pub fn mu_from_nu(nu: &[f64; 4], z4: &[f64; 4]) -> [f64; 4] {
    let cnorm = 2.0 * (1.0 + mdot(nu, z4));
    scale4(nu, 1.0 / cnorm.sqrt())
}

/// Unit timelike combination `q = (j + rho f) / sqrt(2 rho (rho + j.f))`.
pub fn q4(j: &[f64; 4], f: &[f64; 4]) -> [f64; 4] {
    let rho = mdot(j, j).sqrt();
    let w = (2.0 * rho * (rho + mdot(j, f))).sqrt();
    scale4(&add4(j, f, rho), 1.0 / w)
}

/// Values and first derivatives of the scalar-vector variables at a point.
#[derive(Clone, Copy, Debug)]
pub struct SvJet4 {
    pub j: [f64; 4],
    /// `dj[s][l]` is the derivative of `j^l` along axis `s`.
    pub dj: [[f64; 4]; 4],
    pub s: [f64; 4],
    pub ds: [[f64; 4]; 4],
    pub kappa: f64,
    pub dkappa: [f64; 4],
    pub dphi: [f64; 4],
}

/// The three pieces of the density in the scalar-vector variables:
/// classical, mass-gap, and rotational quantum terms.
pub fn sv_terms(m: f64, jet: &SvJet4, frame: &Frame4) -> (f64, f64, f64) {
    let f = &frame.f;
    let z4 = &frame.z4;
    let j = &jet.j;
    let s = &jet.s;
    let rho = mdot(j, j).sqrt();
    let mut drho = [0.0; 4];
    for si in 0..4 {
        drho[si] = mdot(j, &jet.dj[si]) / rho;
    }

    // xi and its derivatives.
    let denom = rho + mdot(j, f);
    let kc = mdot(s, f) / denom;
    let jf = add4(j, f, rho);
    let xi = scale4(&add4(s, &jf, -kc), 1.0 / rho);
    let mut dxi = [[0.0; 4]; 4];
    for si in 0..4 {
        let djf = add4(&jet.dj[si], f, drho[si]);
        let dkc = (mdot(&jet.ds[si], f) * denom
            - mdot(s, f) * (drho[si] + mdot(&jet.dj[si], f)))
            / (denom * denom);
        let dnum = add4(&add4(&jet.ds[si], &jf, -dkc), &djf, -kc);
        dxi[si] = add4(&scale4(&dnum, 1.0 / rho), &xi, -drho[si] / rho);
    }

    // nu: xi with its f-component projected out.
    let nu = nu_from_xi(&xi, f);
    let mut dnu = [[0.0; 4]; 4];
    for si in 0..4 {
        dnu[si] = add4(&dxi[si], f, -mdot(&dxi[si], f));
    }

    // mu: nu normalized by its Minkowski distance to -z.
    let cnorm = 2.0 * (1.0 + mdot(&nu, z4));
    let sqrt_c = cnorm.sqrt();
    let mu = scale4(&nu, 1.0 / sqrt_c);
    let mut dmu = [[0.0; 4]; 4];
    for si in 0..4 {
        let dc = mdot(&dnu[si], z4);
        dmu[si] = add4(&scale4(&dnu[si], 1.0 / sqrt_c), &nu, -dc / (cnorm * sqrt_c));
    }

    // q and its derivatives.
    let w2 = 2.0 * rho * (rho + mdot(j, f));
    let w = w2.sqrt();
    let q = scale4(&jf, 1.0 / w);
    let mut dq = [[0.0; 4]; 4];
    for si in 0..4 {
        let djf = add4(&jet.dj[si], f, drho[si]);
        let dw2 = drho[si] * (4.0 * rho + 2.0 * mdot(j, f)) + 2.0 * rho * mdot(&jet.dj[si], f);
        let dw = dw2 / (2.0 * w);
        dq[si] = add4(&scale4(&djf, 1.0 / w), &jf, -dw / w2);
    }

    // Classical piece: mass term, phase convection, and the azimuth
    // transport term contracted through the antisymmetric symbol.
    let mut jdphi = 0.0;
    for l in 0..4 {
        jdphi += j[l] * jet.dphi[l];
    }
    let mut jdmu = [0.0; 4];
    for k in 0..4 {
        for si in 0..4 {
            jdmu[k] += j[si] * dmu[si][k];
        }
    }
    let mut berry = 0.0;
    for i in 0..4 {
        for k in 0..4 {
            for l in 0..4 {
                for mm in 0..4 {
                    let e = eps4(i, k, l, mm);
                    if e != 0.0 {
                        berry += e * mu[i] * jdmu[k] * z4[l] * f[mm];
                    }
                }
            }
        }
    }
    let l_cl = -m * rho - jdphi + berry;

    // Mass-gap piece.
    let mut sdk = 0.0;
    for l in 0..4 {
        sdk += s[l] * jet.dkappa[l];
    }
    let half = (jet.kappa / 2.0).sin();
    let l_q1 = 2.0 * m * rho * half * half - 0.5 * sdk;

    // Rotational piece.
    let mut rot = 0.0;
    for i in 0..4 {
        for k in 0..4 {
            for l in 0..4 {
                for mm in 0..4 {
                    let e = eps4(i, k, l, mm);
                    if e != 0.0 {
                        rot += e * q[i] * METRIC4[k] * dq[k][l] * nu[mm];
                    }
                }
            }
        }
    }
    let l_q2 = -rho * rot;

    (l_cl, l_q1, l_q2)
}

/// Dirac Lagrangian density straight from the spinor.
pub fn lagrangian_spinor4(m: f64, psi: &[C; 4], dpsi: &[[C; 4]; 4]) -> f64 {
    let g = gamma4();
    let mut l = -m * scalar_density4(psi);
    for li in 0..4 {
        let forward = cross_expectation(g[0] * g[li], psi, &dpsi[li]);
        // conj(d_l psi) g0 g^l psi = conj of the forward term because
        // g0 g^l is Hermitian.
        l += (c(0.0, 0.5) * (forward - forward.conj())).re;
    }
    l
}

/// Transforms a scalar-vector jet to another frame: vectors rotate with the
/// matrix, derivative slots with its inverse transpose.
pub fn transform_sv_jet(jet: &SvJet4, lambda: &[[f64; 4]; 4]) -> SvJet4 {
    let inv = rmat_inverse(lambda).expect("Lorentz matrices are invertible");
    let j = rmat_mulv(lambda, &jet.j);
    let s = rmat_mulv(lambda, &jet.s);
    let mut dj = [[0.0; 4]; 4];
    let mut ds = [[0.0; 4]; 4];
    let mut dkappa = [0.0; 4];
    let mut dphi = [0.0; 4];
    for l in 0..4 {
        for si in 0..4 {
            dkappa[l] += inv[si][l] * jet.dkappa[si];
            dphi[l] += inv[si][l] * jet.dphi[si];
            for k in 0..4 {
                for t in 0..4 {
                    dj[l][k] += inv[si][l] * lambda[k][t] * jet.dj[si][t];
                    ds[l][k] += inv[si][l] * lambda[k][t] * jet.ds[si][t];
                }
            }
        }
    }
    SvJet4 { j, dj, s, ds, kappa: jet.kappa, dkappa, dphi }
}

/// Smooth periodic configuration of the parametrization fields. The unit
/// vector is `n = (sin al cos be, sin al sin be, cos al)`; all eight
/// parameter fields are trigonometric polynomials.
#[derive(Clone, Debug)]
pub struct Config4 {
    pub m: f64,
    pub z: [f64; 3],
    pub a: TrigPoly<4>,
    pub kappa: TrigPoly<4>,
    pub phi: TrigPoly<4>,
    pub eta: [TrigPoly<4>; 3],
    pub alpha: TrigPoly<4>,
    pub beta: TrigPoly<4>,
}

/// Everything the equivalence checks need at one point: the spinor, its
/// derivatives, and the scalar-vector jet.
#[derive(Clone, Copy, Debug)]
pub struct Eval4 {
    pub psi: [C; 4],
    pub dpsi: [[C; 4]; 4],
    pub jet: SvJet4,
}

impl Config4 {
    /// Draws a configuration whose polar angle keeps `|n.z|` bounded away
    /// from zero for `z` near the third axis, and whose rapidity never
    /// vanishes, so all factor decompositions stay smooth.
    pub fn random<R: Rng>(rng: &mut R, m: f64, length: f64) -> Self {
        Config4 {
            m,
            z: [0.0, 0.0, 1.0],
            a: TrigPoly::random(rng, 1.2, 0.04, 2, length),
            kappa: TrigPoly::random(rng, 0.2, 0.06, 2, length),
            phi: TrigPoly::random(rng, 0.1, 0.06, 2, length),
            eta: [
                TrigPoly::random(rng, 0.3, 0.05, 1, length),
                TrigPoly::random(rng, -0.2, 0.05, 1, length),
                TrigPoly::random(rng, 0.25, 0.05, 1, length),
            ],
            alpha: TrigPoly::random(rng, 1.0, 0.08, 2, length),
            beta: TrigPoly::random(rng, 0.4, 0.08, 2, length),
        }
    }

    pub fn params_at(&self, x: &[f64; 4]) -> Params4 {
        let (al, be) = (self.alpha.value(x), self.beta.value(x));
        Params4 {
            a: self.a.value(x),
            kappa: self.kappa.value(x),
            phi: self.phi.value(x),
            eta: [self.eta[0].value(x), self.eta[1].value(x), self.eta[2].value(x)],
            n: [al.sin() * be.cos(), al.sin() * be.sin(), al.cos()],
        }
    }

    pub fn psi_at(&self, x: &[f64; 4]) -> [C; 4] {
        psi_from_params4(&self.params_at(x), self.z)
    }

    /// Spinor, analytic spinor derivatives, and scalar-vector jet at `x`.
    /// Currents and spins (and their derivatives) are formed from the spinor
    /// bilinears, so the two sides of every equivalence share one source.
    pub fn eval_at(&self, x: &[f64; 4]) -> Eval4 {
        let p = self.params_at(x);
        let u = basis_spinor(self.z);

        let e_m = chiral_factor(p.phi, p.kappa);
        let b_m = boost_factor(p.eta);
        let r_m = rotor_factor(p.n);
        let m_full = e_m * b_m * r_m;

        let da = self.a.grad(x);
        let dkappa = self.kappa.grad(x);
        let dphi = self.phi.grad(x);
        let deta = [self.eta[0].grad(x), self.eta[1].grad(x), self.eta[2].grad(x)];
        let (al, be) = (self.alpha.value(x), self.beta.value(x));
        let dal = self.alpha.grad(x);
        let dbe = self.beta.grad(x);
        let dn_dal = [al.cos() * be.cos(), al.cos() * be.sin(), -al.sin()];
        let dn_dbe = [-al.sin() * be.sin(), al.sin() * be.cos(), 0.0];

        let g = gamma4();
        let g5 = gamma5();

        // Derivative of the chiral factor.
        let half_k = p.kappa / 2.0;
        let trig_d = Mat::identity().scale_re(-half_k.sin()) + g5.scale_re(half_k.cos());
        // Derivative of the boost factor via the rapidity magnitude and
        // direction.
        let norm =
            (p.eta[0] * p.eta[0] + p.eta[1] * p.eta[1] + p.eta[2] * p.eta[2]).sqrt();
        let v = [p.eta[0] / norm, p.eta[1] / norm, p.eta[2] / norm];
        let mut kv = Mat::<4>::zeros();
        for a in 0..3 {
            kv = kv + (g[0] * g[a + 1]).scale_re(v[a]);
        }
        let (ch, sh) = ((norm / 2.0).cosh(), (norm / 2.0).sinh());

        let mut psi = m_full.mulv(&u);
        for t in psi.iter_mut() {
            *t *= p.a;
        }

        let mut dpsi = [[c(0.0, 0.0); 4]; 4];
        for si in 0..4 {
            // dE = (i dphi) E + e^{i phi} (dkappa / 2) (-sin + g5 cos).
            let de = e_m.scale(c(0.0, dphi[si]))
                + trig_d.scale(C::from_polar(dkappa[si] / 2.0, p.phi));
            // dB = (deta_mag / 2)(sinh + cosh Kv) + sinh K(dv).
            let dmag =
                v[0] * deta[0][si] + v[1] * deta[1][si] + v[2] * deta[2][si];
            let mut dv_m = Mat::<4>::zeros();
            for a in 0..3 {
                let dva = deta[a][si] / norm - p.eta[a] * dmag / (norm * norm);
                dv_m = dv_m + (g[0] * g[a + 1]).scale_re(dva);
            }
            let db = (Mat::identity().scale_re(sh) + kv.scale_re(ch)).scale_re(dmag / 2.0)
                + dv_m.scale_re(sh);
            // dR = i Sigma.(dn).
            let mut dn = [0.0; 3];
            for a in 0..3 {
                dn[a] = dal[si] * dn_dal[a] + dbe[si] * dn_dbe[a];
            }
            let dr = sigma_dot(dn).scale(c(0.0, 1.0));

            let dm = de * b_m * r_m + e_m * db * r_m + e_m * b_m * dr;
            let tail = dm.mulv(&u);
            for i in 0..4 {
                dpsi[si][i] = psi[i].scale(da[si] / p.a) + tail[i].scale(p.a);
            }
        }

        // Scalar-vector jet from the bilinears.
        let j = current4(&psi);
        let s = spin4(&psi);
        let mut dj = [[0.0; 4]; 4];
        let mut ds = [[0.0; 4]; 4];
        for si in 0..4 {
            for l in 0..4 {
                dj[si][l] = 2.0 * cross_expectation(g[0] * g[l], &psi, &dpsi[si]).re;
                ds[si][l] = 2.0
                    * cross_expectation((g[0] * g5 * g[l]).scale(c(0.0, 1.0)), &psi, &dpsi[si])
                        .re;
            }
        }

        Eval4 {
            psi,
            dpsi,
            jet: SvJet4 { j, dj, s, ds, kappa: p.kappa, dkappa, dphi },
        }
    }
}

/// Reference smooth periodic configuration used by the frozen-value tests
/// and as the first deterministic sample in the suites.
pub fn reference_config4() -> Config4 {
    use crate::fields::TrigTerm;
    let length = 4.0;
    Config4 {
        m: 0.9,
        z: [0.0, 0.0, 1.0],
        a: TrigPoly::new(
            1.20,
            length,
            vec![
                TrigTerm { modes: [1, 0, 0, 0], cos_amp: 0.0, sin_amp: 0.05 },
                TrigTerm { modes: [0, 1, 0, -1], cos_amp: 0.04, sin_amp: 0.0 },
            ],
        ),
        kappa: TrigPoly::new(
            0.20,
            length,
            vec![
                TrigTerm { modes: [0, 0, 1, 0], cos_amp: 0.10, sin_amp: 0.0 },
                TrigTerm { modes: [1, -1, 0, 0], cos_amp: 0.0, sin_amp: 0.07 },
            ],
        ),
        phi: TrigPoly::new(
            0.10,
            length,
            vec![
                TrigTerm { modes: [0, 1, 1, 0], cos_amp: 0.0, sin_amp: 0.09 },
                TrigTerm { modes: [1, 0, 0, 1], cos_amp: 0.06, sin_amp: 0.0 },
            ],
        ),
        eta: [
            TrigPoly::new(
                0.30,
                length,
                vec![TrigTerm { modes: [1, 0, -1, 0], cos_amp: 0.0, sin_amp: 0.08 }],
            ),
            TrigPoly::new(
                -0.20,
                length,
                vec![TrigTerm { modes: [0, 1, 0, 1], cos_amp: 0.06, sin_amp: 0.0 }],
            ),
            TrigPoly::new(
                0.25,
                length,
                vec![TrigTerm { modes: [0, 0, 1, -1], cos_amp: 0.0, sin_amp: 0.07 }],
            ),
        ],
        alpha: TrigPoly::new(
            1.00,
            length,
            vec![
                TrigTerm { modes: [1, 1, 0, 0], cos_amp: 0.12, sin_amp: 0.0 },
                TrigTerm { modes: [0, 0, 0, 1], cos_amp: 0.0, sin_amp: 0.05 },
            ],
        ),
        beta: TrigPoly::new(
            0.40,
            length,
            vec![
                TrigTerm { modes: [0, 1, -1, 0], cos_amp: 0.0, sin_amp: 0.12 },
                TrigTerm { modes: [1, 0, 1, 0], cos_amp: 0.05, sin_amp: 0.0 },
            ],
        ),
    }
}

/// Row built from the mirrored factorization of the conjugate spinor; equal
/// to the conjugate transpose of [`psi_from_params4`].
pub fn conjugate_row_from_params4(p: &Params4, z: [f64; 3]) -> [C; 4] {
    let g5 = gamma5();
    let e_conj = (Mat::identity().scale_re((p.kappa / 2.0).cos())
        - g5.scale_re((p.kappa / 2.0).sin()))
    .scale(C::from_polar(1.0, -p.phi));
    let b = boost_factor(p.eta);
    let r_conj = sigma_dot(p.n).scale(c(0.0, -1.0));
    let m = r_conj * b * e_conj;
    let u = basis_spinor(z);
    // Row: A u^dag M, computed as components sum_i conj(u_i) M[i][k].
    let mut row = [c(0.0, 0.0); 4];
    for k in 0..4 {
        for i in 0..4 {
            row[k] += u[i].conj() * m.a[i][k];
        }
    }
    for v in row.iter_mut() {
        *v *= p.a;
    }
    row
}
