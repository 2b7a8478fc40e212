//! Named verification suites. Each suite draws its randomness from the run
//! seed combined with a fixed per-suite salt, so any suite run alone
//! produces exactly the checks it would produce inside `all`, and two runs
//! with the same seed produce identical reports. No I/O happens here; the
//! caller renders the returned records.

use crate::algebra::{
    anticommutator, basis_spinor, c, eps4, gamma2, gamma4, gamma5, sigma4, spin_projector,
    vdiff, vnorm, Mat, C, METRIC2, METRIC4,
};
use crate::dirac2d::{
    self, lagrangian_covariant, lagrangian_current, lagrangian_spinor, lagrangian_unit_vector,
    observables_from_params, params_from_observables, psi_from_params, transform_obs_jet2,
    Obs2, Params2,
};
use crate::dirac4d::{
    self, amplitude_rapidity_from_current, current4, current_from_amplitude_rapidity,
    lagrangian_spinor4, mu_from_nu, nu_from_xi, psi_from_params4, q4, spin4, spin_from_xi,
    sv_terms, transform_sv_jet, xi4, xi_from_spin, Frame4, Params4,
};
use crate::fields::{fd_partial, lsq_slope, max_abs, sample_grid, Grid, PlaneWave};
use crate::lorentz::{
    apply_sqrt_operator, conjugation_residual, current_two_ways, infinitesimal_pair,
    intertwine_residual, mdot, omega_from_pairs, omega_norm, rmat_mulv, spinor_rep,
    sqrt_operator_boost_residual, sqrt_operator_space_reflection_fit,
    sqrt_operator_time_reflection_residual, vector_rep, Lightcone,
};
use crate::particle::{
    acceleration_residual, integrate_covariant, integrate_newtonian, momentum_like,
    newtonian_rhs, transform_covector, EMField,
};
use crate::report::{format_sci, CheckReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

/// Numeric knobs shared by every suite.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Points per axis for two-dimensional grids; four-dimensional grids use
    /// this value clamped to 8..=16.
    pub grid: usize,
    /// Grid spacing; together with `grid` it fixes the periodic box length.
    pub spacing: f64,
    pub seed: u64,
    /// Tolerance overrides keyed by `suite/check` or bare check name.
    pub tol_overrides: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid: 16,
            spacing: 0.25,
            seed: 7,
            tol_overrides: BTreeMap::new(),
        }
    }
}

impl RunConfig {
    pub fn box_length(&self) -> f64 {
        self.grid as f64 * self.spacing
    }

    pub fn grid4(&self) -> usize {
        self.grid.clamp(8, 16)
    }

    fn tol_for(&self, suite: &str, name: &str, default: f64) -> f64 {
        let qualified = format!("{}/{}", suite, name);
        self.tol_overrides
            .get(&qualified)
            .or_else(|| self.tol_overrides.get(name))
            .copied()
            .unwrap_or(default)
    }
}

pub const SUITE_NAMES: [&str; 5] = ["clifford", "lorentz", "dirac2d", "dirac4d", "particle"];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, rc: &RunConfig) -> Option<Vec<CheckReport>> {
    match name {
        "clifford" => Some(run_clifford(rc)),
        "lorentz" => Some(run_lorentz(rc)),
        "dirac2d" => Some(run_dirac2d(rc)),
        "dirac4d" => Some(run_dirac4d(rc)),
        "particle" => Some(run_particle(rc)),
        _ => None,
    }
}

/// All suites in canonical order.
pub fn run_all(rc: &RunConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for name in SUITE_NAMES {
        out.extend(run_suite(name, rc).expect("canonical names are known"));
    }
    out
}

struct Recorder<'a> {
    rc: &'a RunConfig,
    suite: &'static str,
    reports: Vec<CheckReport>,
}

impl<'a> Recorder<'a> {
    fn new(rc: &'a RunConfig, suite: &'static str) -> Self {
        Recorder { rc, suite, reports: Vec::new() }
    }

    fn record(
        &mut self,
        name: &str,
        anchor: &str,
        residual: f64,
        default_tol: f64,
        notes: String,
        t0: Instant,
    ) {
        let tol = self.rc.tol_for(self.suite, name, default_tol);
        self.reports.push(CheckReport {
            suite: self.suite.to_string(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            residual,
            tol,
            passed: residual < tol,
            informational: false,
            time_ms: t0.elapsed().as_secs_f64() * 1e3,
            notes,
        });
    }

    fn record_info(&mut self, name: &str, anchor: &str, value: f64, notes: String, t0: Instant) {
        self.reports.push(CheckReport {
            suite: self.suite.to_string(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            residual: value,
            tol: f64::INFINITY,
            passed: true,
            informational: true,
            time_ms: t0.elapsed().as_secs_f64() * 1e3,
            notes,
        });
    }
}

fn rng_for(rc: &RunConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(rc.seed ^ salt)
}

fn random_pairs<R: Rng, const N: usize>(rng: &mut R, scale: f64) -> Vec<(usize, usize, f64)> {
    let mut pairs = Vec::new();
    for i in 0..N {
        for k in (i + 1)..N {
            pairs.push((i, k, rng.gen_range(-scale..scale)));
        }
    }
    pairs
}

fn random_spinor<R: Rng, const N: usize>(rng: &mut R) -> [C; N] {
    let mut psi = [c(0.0, 0.0); N];
    for v in psi.iter_mut() {
        *v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    psi
}

// ---------------------------------------------------------------------------
// clifford
// ---------------------------------------------------------------------------

fn anticommutator_worst<const N: usize>(gammas: &[Mat<N>; N], metric: &[f64; N]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..N {
        for k in 0..N {
            let want = if i == k { 2.0 * metric[i] } else { 0.0 };
            let diff = anticommutator(gammas[i], gammas[k]) - Mat::identity().scale_re(want);
            worst = worst.max(diff.max_abs());
        }
    }
    worst
}

pub fn run_clifford(rc: &RunConfig) -> Vec<CheckReport> {
    let mut rec = Recorder::new(rc, "clifford");

    let t0 = Instant::now();
    let resid = anticommutator_worst(&gamma2(), &METRIC2);
    rec.record(
        "anticommutators_2d",
        "gi gk + gk gi = 2 g^{ik} I in two dimensions",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let g = gamma4();
    let resid = anticommutator_worst(&g, &METRIC4);
    rec.record(
        "anticommutators_4d",
        "gi gk + gk gi = 2 g^{ik} I in four dimensions",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let g5 = gamma5();
    let product = g[0] * g[1] * g[2] * g[3];
    let mut resid = (g5 - product).max_abs();
    resid = resid.max((g5 * g5 + Mat::identity()).max_abs());
    rec.record(
        "pseudoscalar_product_and_square",
        "g5 = g0 g1 g2 g3 and g5^2 = -I",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for l in 0..4 {
        resid = resid.max(anticommutator(g5, g[l]).max_abs());
    }
    rec.record(
        "pseudoscalar_anticommutation",
        "g5 anticommutes with every gamma matrix",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let resid = ((g[0] * g5.adjoint() * g[0]) - g5).max_abs();
    rec.record(
        "pseudoscalar_conjugation",
        "g0 g5^dag g0 = g5",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let sig = sigma4();
    let mut resid = 0.0f64;
    for a in 0..3 {
        let (b, cc) = ((a + 1) % 3, (a + 2) % 3);
        resid = resid.max((sig[a] - (g[b + 1] * g[cc + 1]).scale(c(0.0, 1.0))).max_abs());
        resid = resid.max((sig[a].adjoint() - sig[a]).max_abs());
        resid = resid.max((sig[a] * sig[a] - Mat::identity()).max_abs());
        let comm = sig[a] * sig[b] - sig[b] * sig[a];
        resid = resid.max((comm - sig[cc].scale(c(0.0, 2.0))).max_abs());
    }
    rec.record(
        "spin_matrix_algebra",
        "Sigma_a = i g^b g^c (cyclic), Hermitian, square one, su(2) commutators",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let axes = [
        [0.0, 0.0, 1.0],
        [0.6, 0.64, 0.48],
        [-0.8, 0.36, 0.48],
    ];
    let mut resid = 0.0f64;
    for z in axes {
        let p = spin_projector(z);
        resid = resid.max((p * p - p).max_abs());
        resid = resid.max((p.adjoint() - p).max_abs());
        resid = resid.max((p.trace() - c(1.0, 0.0)).norm());
        let u = basis_spinor(z);
        resid = resid.max(vdiff(&p.mulv(&u), &u));
        resid = resid.max((vnorm(&u) - 1.0).abs());
    }
    rec.record(
        "projector_idempotent",
        "rank-reducing projector: P^2 = P, P^dag = P, tr P = 1, P u = u",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = (eps4(0, 1, 2, 3) - 1.0).abs();
    let mut sum_sq = 0.0;
    for i in 0..4 {
        for k in 0..4 {
            for l in 0..4 {
                for m in 0..4 {
                    let e = eps4(i, k, l, m);
                    sum_sq += e * e;
                    resid = resid.max((e + eps4(k, i, l, m)).abs());
                    resid = resid.max((e + eps4(i, k, m, l)).abs());
                }
            }
        }
    }
    resid = resid.max((sum_sq - 24.0).abs());
    rec.record(
        "antisymmetric_symbol_orientation",
        "eps_{0123} = +1, full antisymmetry, 24 nonzero entries",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    rec.reports
}

// ---------------------------------------------------------------------------
// lorentz
// ---------------------------------------------------------------------------

pub fn run_lorentz(rc: &RunConfig) -> Vec<CheckReport> {
    let mut rec = Recorder::new(rc, "lorentz");
    let mut rng = rng_for(rc, 0x4c5a);

    let g2 = gamma2();
    let g4 = gamma4();

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    let mut conj2 = 0.0f64;
    for _ in 0..50 {
        let chi = rng.gen_range(-2.0..2.0);
        let w = omega_from_pairs::<2>(&[(0, 1, chi)]);
        let lambda = vector_rep(&w);
        let s = spinor_rep(&w, &g2);
        resid = resid.max(intertwine_residual(&lambda, &s, &g2));
        conj2 = conj2.max(conjugation_residual(&s, &g2[0]));
    }
    rec.record(
        "pairing_finite_boosts_2d",
        "S^-1 g^l S = Lambda^l_s g^s for 50 finite boosts",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut worst_ratio = 0.0f64;
    for _ in 0..50 {
        let eps = 10f64.powf(rng.gen_range(-5.0..-2.5));
        let pairs = random_pairs::<_, 4>(&mut rng, eps);
        let w = omega_from_pairs::<4>(&pairs);
        let (lambda, s) = infinitesimal_pair(&w, &g4);
        let r = intertwine_residual(&lambda, &s, &g4);
        let scale = omega_norm(&w).powi(2).max(1e-300);
        worst_ratio = worst_ratio.max(r / scale);
    }
    rec.record(
        "pairing_infinitesimal_4d",
        "first-order pairing leaves only a second-order residual (50 draws)",
        worst_ratio,
        10.0,
        "residual divided by the squared coefficient norm".to_string(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for i in 0..100 {
        if i % 2 == 0 {
            let w = omega_from_pairs::<2>(&[(0, 1, rng.gen_range(-1.0..1.0))]);
            let lambda = vector_rep(&w);
            let s = spinor_rep(&w, &g2);
            let psi = random_spinor::<_, 2>(&mut rng);
            let (a, b) = current_two_ways(&g2, &lambda, &s, &psi);
            for l in 0..2 {
                resid = resid.max((a[l] - b[l]).abs());
            }
        } else {
            let pairs = random_pairs::<_, 4>(&mut rng, 0.5);
            let w = omega_from_pairs::<4>(&pairs);
            let lambda = vector_rep(&w);
            let s = spinor_rep(&w, &g4);
            let psi = random_spinor::<_, 4>(&mut rng);
            let (a, b) = current_two_ways(&g4, &lambda, &s, &psi);
            for l in 0..4 {
                resid = resid.max((a[l] - b[l]).abs());
            }
        }
    }
    rec.record(
        "current_transforms_both_ways",
        "rotating the matrices equals rotating the spinor, on the current (100 spinors)",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = conj2;
    for _ in 0..20 {
        let pairs = random_pairs::<_, 4>(&mut rng, 0.7);
        let s = spinor_rep(&omega_from_pairs::<4>(&pairs), &g4);
        resid = resid.max(conjugation_residual(&s, &g4[0]));
    }
    rec.record(
        "conjugation_property",
        "g0 S^dag g0 = S^-1 for finite transforms",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    // Random lightcone samples shared by the square-root operator laws.
    let mut samples = Vec::new();
    for _ in 0..40 {
        let w1: f64 = rng.gen_range(-1.0..1.0);
        let w0: f64 = w1.abs() + rng.gen_range(0.1..2.0);
        let d = [
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ];
        let lam: f64 = rng.gen_range(0.3..2.0);
        samples.push((Lightcone::new([w0, w1], d), lam));
    }

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for (p, lam) in samples.iter().take(20) {
        let chi = rng.gen_range(-1.5..1.5);
        resid = resid.max(sqrt_operator_boost_residual(p, *lam, chi));
    }
    rec.record(
        "sqrt_operator_boost_law",
        "boosted lightcone data maps through exp(-g0 g1 chi / 2)",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for (p, lam) in samples.iter().take(20) {
        resid = resid.max(sqrt_operator_time_reflection_residual(p, *lam));
    }
    rec.record(
        "sqrt_operator_time_reflection",
        "time-reflected data maps through e^{i pi/2} g1",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let (cfit, resid) = sqrt_operator_space_reflection_fit(&samples);
    rec.record(
        "sqrt_operator_space_reflection",
        "space-reflected data maps through a constant times g0",
        resid,
        1e-10,
        format!("fitted constant = {:.6}{:+.6}i", cfit.re, cfit.im),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..20 {
        let lam: f64 = rng.gen_range(0.4..1.6);
        let k1: f64 = rng.gen_range(-1.5..1.5);
        let omega = (k1 * k1 + 1.0 / (lam * lam)).sqrt();
        let w1: f64 = rng.gen_range(-1.0..1.0);
        let w = [w1.abs() + rng.gen_range(0.2..2.0), w1];
        let wave = PlaneWave::<2> { k: [omega, k1] };
        for _ in 0..3 {
            let x = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
            let value = wave.value(&x);
            let d = [wave.derivative(&x, 0), wave.derivative(&x, 1)];
            let psi = apply_sqrt_operator(w, lam, value, d);
            // Derivative factors of each component: every component is a
            // constant multiple of the wave, so d0 -> -i omega, d1 -> i k.
            let dplus = c(0.0, -(omega - k1));
            let dminus = c(0.0, -(omega + k1));
            let r0 = psi[0] - c(0.0, lam) * dplus * psi[1];
            let r1 = psi[1] - c(0.0, lam) * dminus * psi[0];
            resid = resid.max(r0.norm().max(r1.norm()));
        }
    }
    rec.record(
        "wave_to_solution_analytic",
        "operator output solves the first-order pair psi+ = i lam d+ psi-, psi- = i lam d- psi+",
        resid,
        1e-10,
        "20 operator/wave pairs, analytic derivatives".to_string(),
        t0,
    );

    let t0 = Instant::now();
    let length = rc.box_length();
    let base = 2.0 * std::f64::consts::PI / length;
    let (omega, k1) = (2.0 * base, base);
    let lam = 1.0 / (omega * omega - k1 * k1).sqrt();
    let w = [1.5, 0.4];
    let wave = PlaneWave::<2> { k: [omega, k1] };
    let mut hs = Vec::new();
    let mut rs = Vec::new();
    for mult in [1usize, 2, 4] {
        let n = rc.grid * mult;
        let grid = Grid::<2>::new(n, length / n as f64);
        let data = sample_grid(&grid, |x| {
            let value = wave.value(x);
            let d = [wave.derivative(x, 0), wave.derivative(x, 1)];
            apply_sqrt_operator(w, lam, value, d)
        });
        let d0 = fd_partial(&grid, &data, 0);
        let d1 = fd_partial(&grid, &data, 1);
        let mut resid = vec![[c(0.0, 0.0); 2]; data.len()];
        for i in 0..data.len() {
            let dp = d0[i][1] + d1[i][1];
            let dm = d0[i][0] - d1[i][0];
            resid[i][0] = data[i][0] - c(0.0, lam) * dp;
            resid[i][1] = data[i][1] - c(0.0, lam) * dm;
        }
        hs.push(grid.h);
        rs.push(max_abs(&resid));
    }
    let slope = lsq_slope(&hs, &rs);
    rec.record(
        "wave_to_solution_fd_order",
        "finite-difference residual of the first-order pair decays at second order",
        (slope - 2.0).abs(),
        0.1,
        format!(
            "slope = {:.4} from residuals {} / {} / {}",
            slope,
            format_sci(rs[0]),
            format_sci(rs[1]),
            format_sci(rs[2])
        ),
        t0,
    );

    rec.reports
}

// ---------------------------------------------------------------------------
// dirac2d
// ---------------------------------------------------------------------------

fn random_params2<R: Rng>(rng: &mut R) -> Params2 {
    let al: f64 = rng.gen_range(0.9..1.5);
    let be: f64 = rng.gen_range(0.15..0.7);
    Params2 {
        a: rng.gen_range(0.7..1.4),
        n: [al.sin() * be.cos(), al.sin() * be.sin(), al.cos()],
        phi: rng.gen_range(-1.0..1.0),
    }
}

pub fn run_dirac2d(rc: &RunConfig) -> Vec<CheckReport> {
    let mut rec = Recorder::new(rc, "dirac2d");
    let mut rng = rng_for(rc, 0x2d2d);

    let t0 = Instant::now();
    let cfg = dirac2d::reference_config2();
    let x_star = [0.4, 1.7];
    let psi = cfg.psi_at(&x_star);
    let want_psi = [
        c(0.87925371815418196, -0.17571354913093712),
        c(0.24158853847082351, 0.26740055525281986),
    ];
    let mut resid = vdiff(&psi, &want_psi);
    let (rho, j) = dirac2d::observables_from_psi(&psi);
    resid = resid.max((rho - 0.33086344022169983).abs());
    resid = resid.max((j[0] - 0.93383043110612896).abs());
    resid = resid.max((j[1] - (-0.67409427336615901)).abs());
    let frozen = [
        ([0.4, 1.7], -3.2323461399950953e-1),
        ([2.9, 0.8], -8.1803925109985409e-1),
        ([1.3, 3.3], -1.2650065155838071),
    ];
    for (x, want) in frozen {
        let l = lagrangian_spinor(cfg.m, &cfg.psi_at(&x), &cfg.dpsi_at(&x));
        resid = resid.max((l - want).abs());
    }
    rec.record(
        "reference_values",
        "pinned spinor, observables and density values of the reference configuration",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut worst = 0.0f64;
    let mut action_gap = 0.0f64;
    let run_config_chain = |cfg: &dirac2d::Config2, length: f64, worst: &mut f64, action_gap: &mut f64| {
        let n = rc.grid;
        let grid = Grid::<2>::new(n, length / n as f64);
        let mut sums = [0.0f64; 4];
        for flat in 0..grid.len() {
            let x = grid.point(grid.coords(flat));
            let psi = cfg.psi_at(&x);
            let dpsi = cfg.dpsi_at(&x);
            let jet = cfg.jet_at(&x);
            let ls = lagrangian_spinor(cfg.m, &psi, &dpsi);
            let ln = lagrangian_unit_vector(cfg.m, &jet);
            let lj = lagrangian_current(cfg.m, &jet);
            let lq = lagrangian_covariant(cfg.m, &jet.obs(), &[1.0, 0.0]);
            *worst = (*worst).max((ln - ls).abs()).max((lj - ls).abs()).max((lq - ls).abs());
            for (acc, v) in sums.iter_mut().zip([ls, ln, lj, lq]) {
                *acc += v;
            }
        }
        let cell = grid.h * grid.h;
        for s in &sums[1..] {
            *action_gap = (*action_gap).max((s - sums[0]).abs() * cell);
        }
    };
    run_config_chain(&cfg, 4.0, &mut worst, &mut action_gap);
    for _ in 0..20 {
        let m = rng.gen_range(0.8..1.5);
        let cfg = dirac2d::Config2::random(&mut rng, m, rc.box_length());
        run_config_chain(&cfg, rc.box_length(), &mut worst, &mut action_gap);
    }
    rec.record(
        "lagrangian_chain_pointwise",
        "spinor, unit-vector, current and covariant densities agree pointwise",
        worst,
        1e-8,
        format!(
            "pointwise level holds on 21 configurations; worst action gap {}",
            format_sci(action_gap)
        ),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..500 {
        let p = random_params2(&mut rng);
        let (rho, j) = observables_from_params(&p);
        let back = params_from_observables(&Obs2 { rho, j, phi: p.phi });
        resid = resid.max((back.a - p.a).abs());
        for k in 0..3 {
            resid = resid.max((back.n[k] - p.n[k]).abs());
        }
        let (rho2, j2) = observables_from_params(&back);
        resid = resid.max((rho2 - rho).abs());
        resid = resid.max((j2[0] - j[0]).abs().max((j2[1] - j[1]).abs()));
        // The reconstructed spinor matches as well (gauge kept by n2 >= 0).
        resid = resid.max(vdiff(&psi_from_params(&back), &psi_from_params(&p)));
    }
    rec.record(
        "roundtrip_params_observables",
        "parametrization -> observables -> parametrization is the identity (500 draws)",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    let frames = {
        let mk = |chi: f64| [chi.cosh(), chi.sinh()];
        [mk(0.0), mk(0.4), mk(-0.7)]
    };
    for _ in 0..500 {
        let p = random_params2(&mut rng);
        let (rho, j) = observables_from_params(&p);
        for f in &frames {
            let q = dirac2d::q_from_current(&j, rho, f);
            let back = dirac2d::current_from_q(&q, rho, f);
            resid = resid.max((back[0] - j[0]).abs().max((back[1] - j[1]).abs()));
        }
    }
    rec.record(
        "roundtrip_current_q",
        "current -> unit combination -> current is the identity (500 draws, 3 frames)",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut transformed = 0.0f64;
    let mut fixed = 0.0f64;
    let f_rest = [1.0, 0.0];
    let mut configs = vec![dirac2d::reference_config2()];
    for _ in 0..2 {
        let m = rng.gen_range(0.9..1.4);
        configs.push(dirac2d::Config2::random(&mut rng, m, rc.box_length()));
    }
    for cfg in &configs {
        for _ in 0..3 {
            let x = [rng.gen_range(0.0..rc.box_length()), rng.gen_range(0.0..rc.box_length())];
            let jet = cfg.jet_at(&x).obs();
            let base = lagrangian_covariant(cfg.m, &jet, &f_rest);
            for _ in 0..4 {
                let chi = rng.gen_range(-1.2..1.2);
                let lambda = vector_rep(&omega_from_pairs::<2>(&[(0, 1, chi)]));
                let moved = transform_obs_jet2(&jet, &lambda);
                let f_moved = rmat_mulv(&lambda, &f_rest);
                transformed = transformed.max((lagrangian_covariant(cfg.m, &moved, &f_moved) - base).abs());
                fixed = fixed.max((lagrangian_covariant(cfg.m, &moved, &f_rest) - base).abs());
            }
        }
    }
    rec.record(
        "covariance_transformed_frame",
        "density is frame-independent when the constant vector transforms too",
        transformed,
        1e-6,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    rec.record_info(
        "covariance_fixed_frame_deviation",
        "holding the constant vector fixed makes the density frame-dependent",
        fixed,
        "nonzero deviation demonstrates the constant timelike vector is essential".to_string(),
        t0,
    );

    rec.reports
}

// ---------------------------------------------------------------------------
// dirac4d
// ---------------------------------------------------------------------------

fn random_params4<R: Rng>(rng: &mut R) -> Params4 {
    let al: f64 = rng.gen_range(0.8..1.2);
    let be: f64 = rng.gen_range(0.2..0.6);
    Params4 {
        a: rng.gen_range(0.8..1.4),
        kappa: rng.gen_range(-0.5..0.5),
        phi: rng.gen_range(-1.0..1.0),
        eta: [
            rng.gen_range(0.1..0.5),
            rng.gen_range(-0.5..-0.1),
            rng.gen_range(0.1..0.5),
        ],
        n: [al.sin() * be.cos(), al.sin() * be.sin(), al.cos()],
    }
}

pub fn run_dirac4d(rc: &RunConfig) -> Vec<CheckReport> {
    let mut rec = Recorder::new(rc, "dirac4d");
    let mut rng = rng_for(rc, 0x4d4d);
    let z_axis = [0.0, 0.0, 1.0];

    let t0 = Instant::now();
    let p_ref = Params4 {
        a: 1.15,
        kappa: 0.33,
        phi: 0.52,
        eta: [0.41, -0.27, 0.19],
        n: [0.6, 0.64, 0.48],
    };
    let psi = psi_from_params4(&p_ref, z_axis);
    let want_psi = [
        c(-0.28649458410086559, 0.53198375055533254),
        c(-0.98317225491381954, 0.22103926127379109),
        c(-0.17676293389713715, 0.0074859784273329563),
        c(0.14109199904210470, 0.27968333745131685),
    ];
    let mut resid = vdiff(&psi, &want_psi);
    let j = current4(&psi);
    let s = spin4(&psi);
    let want_j = [
        1.5100027915453766,
        0.56761600937195333,
        -0.37379590861079864,
        0.26304156531871004,
    ];
    let want_s = [
        0.044545396872078091,
        -0.75283337846801379,
        -0.81842250686252715,
        0.71722872705140794,
    ];
    for l in 0..4 {
        resid = resid.max((j[l] - want_j[l]).abs());
        resid = resid.max((s[l] - want_s[l]).abs());
    }
    let cfg = dirac4d::reference_config4();
    let x_star = [0.3, 0.7, 1.1, 1.9];
    let ev = cfg.eval_at(&x_star);
    let frame = Frame4::rest(cfg.z);
    let (lcl, lq1, lq2) = sv_terms(cfg.m, &ev.jet, &frame);
    let ld = lagrangian_spinor4(cfg.m, &ev.psi, &ev.dpsi);
    resid = resid.max((lcl - (-1.3942394449739326)).abs());
    resid = resid.max((lq1 - (-0.069269746920548103)).abs());
    resid = resid.max((lq2 - 0.064221389578427643).abs());
    resid = resid.max((ld - (-1.3992878023160533)).abs());
    rec.record(
        "reference_values",
        "pinned spinor, observables and split densities of the reference configuration",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..1000 {
        let psi = random_spinor::<_, 4>(&mut rng);
        let j = current4(&psi);
        let s = spin4(&psi);
        let scale = mdot(&j, &j).abs().max(1e-12);
        resid = resid.max((mdot(&s, &s) + mdot(&j, &j)).abs() / scale);
        resid = resid.max(mdot(&j, &s).abs() / scale);
    }
    rec.record(
        "spin_identities",
        "S.S = -j.j and j.S = 0 for arbitrary spinors (1000 draws)",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..500 {
        let p = random_params4(&mut rng);
        let psi = psi_from_params4(&p, z_axis);
        let j = current4(&psi);
        let s = spin4(&psi);
        let xi = xi_from_spin(&j, &s);
        let back = spin_from_xi(&j, &xi);
        for l in 0..4 {
            resid = resid.max((back[l] - s[l]).abs());
        }
        let nz = p.n[0] * z_axis[0] + p.n[1] * z_axis[1] + p.n[2] * z_axis[2];
        for a in 0..3 {
            resid = resid.max((xi[a] - (z_axis[a] - 2.0 * nz * p.n[a])).abs());
        }
    }
    rec.record(
        "roundtrip_spin_direction",
        "spin <-> direction maps invert each other; the direction reflects the axis (500 draws)",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..500 {
        let p = random_params4(&mut rng);
        let j = current_from_amplitude_rapidity(p.a, &p.eta);
        let (a, eta) = amplitude_rapidity_from_current(&j);
        resid = resid.max((a - p.a).abs());
        for k in 0..3 {
            resid = resid.max((eta[k] - p.eta[k]).abs());
        }
        let back = current_from_amplitude_rapidity(a, &eta);
        for l in 0..4 {
            resid = resid.max((back[l] - j[l]).abs());
        }
    }
    rec.record(
        "roundtrip_amplitude_rapidity",
        "amplitude/rapidity <-> current maps invert each other (500 draws)",
        resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    let frame_rest = Frame4::rest(z_axis);
    for _ in 0..500 {
        let p = random_params4(&mut rng);
        let psi = psi_from_params4(&p, z_axis);
        let j = current4(&psi);
        let s = spin4(&psi);
        let xi = xi4(&j, &s, &frame_rest.f);
        let nu = nu_from_xi(&xi, &frame_rest.f);
        let q = q4(&j, &frame_rest.f);
        resid = resid.max((mdot(&nu, &nu) + 1.0).abs());
        resid = resid.max((mdot(&q, &q) - 1.0).abs());
        let mu = mu_from_nu(&nu, &frame_rest.z4);
        // mu squares to -(1/2) / (1 + nu.z); verify through the definition.
        let want = -1.0 / (2.0 * (1.0 + mdot(&nu, &frame_rest.z4)));
        resid = resid.max((mdot(&mu, &mu) - want).abs());
    }
    rec.record(
        "auxiliary_normalization",
        "nu.nu = -1 and q.q = 1 exactly (500 draws)",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let n4 = rc.grid4();
    let mut rel_worst = 0.0f64;
    let mut pw_worst = 0.0f64;
    let eval_action = |cfg: &dirac4d::Config4, length: f64| {
        let grid = Grid::<4>::new(n4, length / n4 as f64);
        let frame = Frame4::rest(cfg.z);
        let mut sum_sv = 0.0;
        let mut sum_d = 0.0;
        let mut pw = 0.0f64;
        for flat in 0..grid.len() {
            let x = grid.point(grid.coords(flat));
            let ev = cfg.eval_at(&x);
            let (a, b, cc) = sv_terms(cfg.m, &ev.jet, &frame);
            let ld = lagrangian_spinor4(cfg.m, &ev.psi, &ev.dpsi);
            sum_sv += a + b + cc;
            sum_d += ld;
            pw = pw.max((a + b + cc - ld).abs());
        }
        (((sum_sv - sum_d) / sum_d).abs(), pw)
    };
    let (rel, pw) = eval_action(&cfg, 4.0);
    rel_worst = rel_worst.max(rel);
    pw_worst = pw_worst.max(pw);
    for _ in 0..4 {
        let m = rng.gen_range(0.8..1.3);
        let rand_cfg = dirac4d::Config4::random(&mut rng, m, rc.box_length());
        let (rel, pw) = eval_action(&rand_cfg, rc.box_length());
        rel_worst = rel_worst.max(rel);
        pw_worst = pw_worst.max(pw);
    }
    rec.record(
        "action_equality",
        "grid-summed split density equals grid-summed spinor density (5 configurations)",
        rel_worst,
        1e-6,
        format!(
            "relative action gap; pointwise split residual {} on {}^4 grids",
            format_sci(pw_worst),
            n4
        ),
        t0,
    );

    let t0 = Instant::now();
    let mut probe_points = Vec::new();
    for _ in 0..16 {
        let mut x = [0.0; 4];
        for v in x.iter_mut() {
            *v = rng.gen_range(0.0..4.0);
        }
        probe_points.push(x);
    }
    let mut axes = Vec::new();
    let mut attempts = 0;
    while axes.len() < 5 && attempts < 200 {
        attempts += 1;
        let mut z = [0.0f64; 3];
        for v in z.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        let norm = (z[0] * z[0] + z[1] * z[1] + z[2] * z[2]).sqrt();
        if norm < 0.3 {
            continue;
        }
        for v in z.iter_mut() {
            *v /= norm;
        }
        // Keep the construction away from its singular set n.z = 0 over the
        // probe points.
        let mut margin = f64::INFINITY;
        for x in &probe_points {
            let n = cfg.params_at(x).n;
            margin = margin.min((n[0] * z[0] + n[1] * z[1] + n[2] * z[2]).abs());
        }
        if margin > 0.15 {
            axes.push(z);
        }
    }
    let mut resid = 0.0f64;
    let mut per_axis = Vec::new();
    for z in &axes {
        let mut moved_cfg = cfg.clone();
        moved_cfg.z = *z;
        let frame = Frame4::rest(*z);
        let mut worst = 0.0f64;
        for x in &probe_points {
            let ev = moved_cfg.eval_at(x);
            let (a, b, cc) = sv_terms(moved_cfg.m, &ev.jet, &frame);
            let ld = lagrangian_spinor4(moved_cfg.m, &ev.psi, &ev.dpsi);
            worst = worst.max((a + b + cc - ld).abs());
        }
        per_axis.push(format_sci(worst));
        resid = resid.max(worst);
    }
    rec.record(
        "axis_sweep",
        "the split stays exact for every admissible constant spatial axis (5 random axes)",
        resid,
        1e-8,
        format!("per-axis residuals {}", per_axis.join(" / ")),
        t0,
    );

    let t0 = Instant::now();
    let mut transformed = 0.0f64;
    let mut fixed = 0.0f64;
    let mut configs = vec![cfg.clone()];
    configs.push(dirac4d::Config4::random(&mut rng, 1.05, rc.box_length()));
    for cfg in &configs {
        let frame = Frame4::rest(cfg.z);
        for _ in 0..3 {
            let mut x = [0.0; 4];
            for v in x.iter_mut() {
                *v = rng.gen_range(0.0..rc.box_length());
            }
            let ev = cfg.eval_at(&x);
            let (a0, b0, c0) = sv_terms(cfg.m, &ev.jet, &frame);
            let base = a0 + b0 + c0;
            for _ in 0..3 {
                let pairs = random_pairs::<_, 4>(&mut rng, 0.35);
                let lambda = vector_rep(&omega_from_pairs::<4>(&pairs));
                let moved = transform_sv_jet(&ev.jet, &lambda);
                let moved_frame = Frame4 {
                    f: rmat_mulv(&lambda, &frame.f),
                    z4: rmat_mulv(&lambda, &frame.z4),
                };
                let (a1, b1, c1) = sv_terms(cfg.m, &moved, &moved_frame);
                transformed = transformed.max((a1 + b1 + c1 - base).abs());
                let (a2, b2, c2) = sv_terms(cfg.m, &moved, &frame);
                fixed = fixed.max((a2 + b2 + c2 - base).abs());
            }
        }
    }
    rec.record(
        "covariance_transformed_frame",
        "split density is frame-independent when the constant vectors transform too",
        transformed,
        1e-6,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    rec.record_info(
        "covariance_fixed_frame_deviation",
        "holding the constant vectors fixed makes the split frame-dependent",
        fixed,
        "nonzero deviation demonstrates the constant vectors are essential".to_string(),
        t0,
    );

    rec.reports
}

// ---------------------------------------------------------------------------
// particle
// ---------------------------------------------------------------------------

pub fn run_particle(rc: &RunConfig) -> Vec<CheckReport> {
    let mut rec = Recorder::new(rc, "particle");
    let mut rng = rng_for(rc, 0x9a37);
    let l_rest = [1.0, 0.0, 0.0, 0.0];

    let t0 = Instant::now();
    let frozen_field = EMField::uniform([0.3, 0.0, 0.0], [0.0, 0.0, 0.7]);
    let (x, v) = integrate_newtonian(&frozen_field, 1.0, 1.3, [0.0; 3], [0.2, -0.1, 0.05], 0.01, 200);
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
    let mut resid = 0.0f64;
    for a in 0..3 {
        resid = resid.max((x[a] - want_x[a]).abs());
        resid = resid.max((v[a] - want_v[a]).abs());
    }
    rec.record(
        "endpoint_reference_values",
        "pinned endpoint of the noncovariant trajectory",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut setups = vec![(frozen_field, 1.0, 1.3, [0.0; 3], [0.2, -0.1, 0.05])];
    for _ in 0..4 {
        let e = [
            rng.gen_range(-0.4..0.4),
            rng.gen_range(-0.4..0.4),
            rng.gen_range(-0.4..0.4),
        ];
        let b = [
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
        ];
        let field = EMField::uniform(e, b)
            .with_linear(
                rng.gen_range(0..4),
                [rng.gen_range(-0.05..0.05), 0.0, rng.gen_range(-0.05..0.05)],
                [0.0, rng.gen_range(-0.05..0.05), 0.0],
            );
        let x0 = [
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.5..0.5),
        ];
        let v0 = [
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
        ];
        setups.push((field, 1.0, rng.gen_range(0.8..1.6), x0, v0));
    }
    let mut worst_ratio = 0.0f64;
    let mut worst_gap = 0.0f64;
    let mut worst_est = 0.0f64;
    for (field, charge, mass, x0, v0) in &setups {
        let (xf, vf) = integrate_newtonian(field, *charge, *mass, *x0, *v0, 0.01, 200);
        let (xh, vh) = integrate_newtonian(field, *charge, *mass, *x0, *v0, 0.005, 400);
        let mut est = 0.0f64;
        for a in 0..3 {
            est = est.max((xf[a] - xh[a]).abs()).max((vf[a] - vh[a]).abs());
        }
        est = est.max(1e-13);
        let (x4, xd4) = integrate_covariant(
            field,
            *charge,
            *mass,
            l_rest,
            [0.0, x0[0], x0[1], x0[2]],
            [1.0, v0[0], v0[1], v0[2]],
            0.01,
            200,
        );
        let mut gap = 0.0f64;
        for a in 0..3 {
            gap = gap.max((x4[a + 1] - xf[a]).abs()).max((xd4[a + 1] - vf[a]).abs());
        }
        worst_gap = worst_gap.max(gap);
        worst_est = worst_est.max(est);
        worst_ratio = worst_ratio.max(gap / (10.0 * est));
    }
    rec.record(
        "reduction_matches_newtonian",
        "four-dimensional form reduces to the noncovariant equations in the rest gauge (5 fields)",
        worst_ratio,
        1.0,
        format!(
            "trajectory gap {} against 10x integrator estimate {}",
            format_sci(worst_gap),
            format_sci(10.0 * worst_est)
        ),
        t0,
    );

    let t0 = Instant::now();
    let rt_field = EMField::uniform([0.3, 0.0, 0.0], [0.0, 0.0, 0.7])
        .with_linear(1, [0.02, 0.0, 0.01], [0.0, 0.015, 0.0])
        .with_linear(0, [0.0, 0.01, 0.0], [0.005, 0.0, 0.0]);
    let x0 = [0.0, 0.1, -0.2, 0.05];
    let xdot0 = [1.0, 0.2, -0.1, 0.05];
    let (h, steps) = (0.01, 150);
    let (xa, xda) = integrate_covariant(&rt_field, 1.0, 1.3, l_rest, x0, xdot0, h, steps);
    let mut resid = 0.0f64;
    let mut gauge_resid = 0.0f64;
    let mut fixed_dev = 0.0f64;
    for _ in 0..3 {
        let pairs = random_pairs::<_, 4>(&mut rng, 0.4);
        let lambda = vector_rep(&omega_from_pairs::<4>(&pairs));
        let moved_field = rt_field.transformed(&lambda);
        let moved_l = transform_covector(&lambda, &l_rest);
        let (xb, xdb) = integrate_covariant(
            &moved_field,
            1.0,
            1.3,
            moved_l,
            rmat_mulv(&lambda, &x0),
            rmat_mulv(&lambda, &xdot0),
            h,
            steps,
        );
        let xa_moved = rmat_mulv(&lambda, &xa);
        let xda_moved = rmat_mulv(&lambda, &xda);
        for i in 0..4 {
            resid = resid.max((xb[i] - xa_moved[i]).abs());
            resid = resid.max((xdb[i] - xda_moved[i]).abs());
        }
        let gauge: f64 = (0..4).map(|k| moved_l[k] * xdb[k]).sum();
        gauge_resid = gauge_resid.max((gauge - 1.0).abs());

        // Same data but with the covector left untransformed.
        let xd_raw = rmat_mulv(&lambda, &xdot0);
        let d: f64 = (0..4).map(|k| l_rest[k] * xd_raw[k]).sum();
        let xd_fixed = [xd_raw[0] / d, xd_raw[1] / d, xd_raw[2] / d, xd_raw[3] / d];
        let (xc, _) = integrate_covariant(
            &moved_field,
            1.0,
            1.3,
            l_rest,
            rmat_mulv(&lambda, &x0),
            xd_fixed,
            h,
            steps,
        );
        for i in 0..4 {
            fixed_dev = fixed_dev.max((xc[i] - xa_moved[i]).abs());
        }
    }
    rec.record(
        "frame_round_trip",
        "transforming coordinates, field and covector together preserves the worldline",
        resid,
        1e-8,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    rec.record(
        "gauge_preservation",
        "the parametrization contraction l.xdot stays pinned at one",
        gauge_resid,
        1e-10,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    rec.record_info(
        "fixed_covector_deviation",
        "holding the covector fixed while everything else transforms bends the worldline",
        fixed_dev,
        "nonzero deviation demonstrates the constant timelike covector is essential".to_string(),
        t0,
    );

    let t0 = Instant::now();
    let orbit_field = EMField::uniform([0.0; 3], [0.0, 0.0, 1.0]);
    let v0 = [0.3, 0.0, 0.0];
    let period = 2.0 * std::f64::consts::PI;
    let orbit_err = |steps: usize| -> f64 {
        let (x, v) =
            integrate_newtonian(&orbit_field, 1.0, 1.0, [0.0; 3], v0, period / steps as f64, steps);
        let mut e = 0.0f64;
        for a in 0..3 {
            e = e.max(x[a].abs()).max((v[a] - v0[a]).abs());
        }
        e
    };
    let ratio = orbit_err(80) / orbit_err(160);
    rec.record(
        "integrator_order",
        "halving the step cuts the one-period error sixteenfold",
        (ratio - 16.0).abs(),
        4.0,
        format!("ratio = {:.2}", ratio),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for _ in 0..20 {
        let y = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.5..0.5),
        ];
        let dy = newtonian_rhs(&rt_field, 1.0, 1.3, &y);
        let e = rt_field.electric_at(&[y[0], y[1], y[2], y[3]]);
        let power = 1.3 * (y[4] * dy[4] + y[5] * dy[5] + y[6] * dy[6]);
        let ev = e[0] * y[4] + e[1] * y[5] + e[2] * y[6];
        resid = resid.max((power - ev).abs());
    }
    rec.record(
        "energy_identity",
        "power balance (m/2) d(v.v)/dt = e E.v holds on the right-hand side",
        resid,
        1e-13,
        String::new(),
        t0,
    );

    let t0 = Instant::now();
    let mut resid = 0.0f64;
    for (field, charge, mass, x0, v0) in setups.iter().take(3) {
        let x4 = [0.0, x0[0], x0[1], x0[2]];
        let xd4 = [1.0, v0[0], v0[1], v0[2]];
        resid = resid.max(acceleration_residual(field, *charge, *mass, &l_rest, &x4, &xd4));
        // A reparametrization-scaled four-velocity yields the same bracket
        // quantity, confirming the degree-zero homogeneity the gauge fixes.
        let scaled = [2.5, 2.5 * v0[0], 2.5 * v0[1], 2.5 * v0[2]];
        let p1 = momentum_like(&l_rest, &xd4);
        let p2 = momentum_like(&l_rest, &scaled);
        for i in 0..4 {
            resid = resid.max((p1[i] - p2[i]).abs());
        }
    }
    rec.record(
        "equation_consistency",
        "the four raw equations are solved exactly; the bracket is scale-invariant",
        resid,
        1e-12,
        String::new(),
        t0,
    );

    rec.reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::summary_counts;

    #[test]
    fn every_suite_passes_with_default_config() {
        let rc = RunConfig { grid: 8, ..RunConfig::default() };
        for name in SUITE_NAMES {
            let reports = run_suite(name, &rc).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(
                    r.passed,
                    "{}/{} failed: residual {} tol {}",
                    r.suite, r.name, r.residual, r.tol
                );
            }
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", &RunConfig::default()).is_none());
    }

    #[test]
    fn runs_are_deterministic_for_a_fixed_seed() {
        let rc = RunConfig { grid: 8, ..RunConfig::default() };
        let a = run_suite("dirac2d", &rc).unwrap();
        let b = run_suite("dirac2d", &rc).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.name, y.name);
            assert!(x.residual == y.residual, "{} vs {}", x.residual, y.residual);
        }
    }

    #[test]
    fn tolerance_overrides_apply_by_qualified_and_bare_name() {
        let mut rc = RunConfig { grid: 8, ..RunConfig::default() };
        rc.tol_overrides.insert("clifford/anticommutators_2d".to_string(), 1e-30);
        rc.tol_overrides.insert("anticommutators_4d".to_string(), 1e-30);
        let reports = run_suite("clifford", &rc).unwrap();
        let find = |n: &str| reports.iter().find(|r| r.name == n).unwrap();
        assert_eq!(find("anticommutators_2d").tol, 1e-30);
        assert_eq!(find("anticommutators_4d").tol, 1e-30);
    }

    #[test]
    fn informational_checks_never_gate() {
        let rc = RunConfig { grid: 8, ..RunConfig::default() };
        let reports = run_suite("dirac2d", &rc).unwrap();
        let info = reports.iter().find(|r| r.informational).unwrap();
        assert!(info.passed);
        assert!(info.residual > 1e-4, "deviation should be visible");
        let (_, _, failed, informational) = summary_counts(&reports);
        assert_eq!(failed, 0);
        assert!(informational >= 1);
    }
}
