//! Output records, sweep plumbing, and verification drivers behind the
//! `defosc` command-line tool.
//!
//! JSON-lines is the canonical machine format (one serialized record
//! per line, every record carrying `schema: 1`); CSV is a flat
//! projection of the same fields, arrays joined by semicolons, absent
//! optional fields left empty. Records never contain timestamps, so a
//! repeated invocation is byte-identical; wall time goes to a stderr
//! footer.
//!
//! Sweep points run on a small work pool (thread count capped by the
//! DOT_MAX_THREADS environment variable) and are emitted in input
//! order regardless of completion order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::bargmann;
use crate::deform1d::{self, Deform1DParams};
use crate::error::{Error, Result};
use crate::fockoracle;
use crate::radial::{self, RadialProblem};

pub const SCHEMA: u32 = 1;

// ---------------------------------------------------------------------
// Work pool.

/// Number of worker threads: DOT_MAX_THREADS when set to a positive
/// integer, otherwise the machine parallelism. Zero or garbage means
/// unset.
pub fn max_threads() -> usize {
    match std::env::var("DOT_MAX_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) if n >= 1 => n,
        _ => std::thread::available_parallelism()
            .map(std::num::NonZeroUsize::get)
            .unwrap_or(1),
    }
}

/// Runs `f(0..jobs)` on up to `threads` workers and returns the
/// results in index order (deterministic output, concurrent work).
pub fn run_indexed<T, F>(jobs: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if jobs == 0 {
        return Vec::new();
    }
    let threads = threads.clamp(1, jobs);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<T>>> = Mutex::new((0..jobs).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs {
                    break;
                }
                let out = f(i);
                results.lock().unwrap()[i] = Some(out);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|o| o.expect("every job slot filled"))
        .collect()
}

// ---------------------------------------------------------------------
// Records and formats.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Jsonl,
    Csv,
}

/// A record kind that can be emitted as a JSON line or a CSV row.
pub trait Record: Serialize {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
}

fn cell_f(v: f64) -> String {
    format!("{v}")
}

fn cell_of(v: Option<f64>) -> String {
    v.map(cell_f).unwrap_or_default()
}

fn cell_ob(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn cell_vec(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(";")
}

pub fn render<R: Record>(records: &[R], format: OutFormat) -> Vec<String> {
    match format {
        OutFormat::Jsonl => records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records contain only finite numbers"))
            .collect(),
        OutFormat::Csv => {
            let mut lines = Vec::with_capacity(records.len() + 1);
            lines.push(R::csv_header().to_string());
            lines.extend(records.iter().map(|r| r.csv_row()));
            lines
        }
    }
}

/// Branch used for a 1-D evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    General,
    Alpha0,
    Beta0,
    Equal,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Alpha0 => "alpha0",
            Mode::Beta0 => "beta0",
            Mode::Equal => "equal",
        }
    }

    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "general" => Ok(Mode::General),
            "alpha0" => Ok(Mode::Alpha0),
            "beta0" => Ok(Mode::Beta0),
            "equal" => Ok(Mode::Equal),
            other => Err(Error::Domain(format!(
                "unknown mode '{other}' (expected general|alpha0|beta0|equal)"
            ))),
        }
    }
}

/// Picks the natural branch for the given parameters: boundary
/// branches when a deformation parameter vanishes, the general branch
/// otherwise (alpha = beta > 0 is legal there and stays general).
pub fn auto_mode(alpha: f64, beta: f64) -> Mode {
    if alpha == 0.0 {
        Mode::Alpha0
    } else if beta == 0.0 {
        Mode::Beta0
    } else {
        Mode::General
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Spectrum1DRecord {
    pub schema: u32,
    pub kind: &'static str,
    pub mode: &'static str,
    pub alpha: f64,
    pub beta: f64,
    pub efield: f64,
    pub n: u32,
    pub energy: f64,
    /// Field-induced correction of this level.
    pub correction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

impl Record for Spectrum1DRecord {
    fn csv_header() -> &'static str {
        "schema,kind,mode,alpha,beta,efield,n,energy,correction,oracle,oracle_estimate,delta,converged"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema,
            self.kind,
            self.mode,
            cell_f(self.alpha),
            cell_f(self.beta),
            cell_f(self.efield),
            self.n,
            cell_f(self.energy),
            cell_f(self.correction),
            cell_of(self.oracle),
            cell_of(self.oracle_estimate),
            cell_of(self.delta),
            cell_ob(self.converged),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct States1DRecord {
    pub schema: u32,
    pub kind: &'static str,
    pub alpha: f64,
    pub beta: f64,
    pub efield: f64,
    pub n: u32,
    pub q: f64,
    pub t: f64,
    pub z: f64,
    pub norm_n: f64,
    pub tail: f64,
    pub coeffs: Vec<f64>,
    pub p_n: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigen_residual: Option<f64>,
}

impl Record for States1DRecord {
    fn csv_header() -> &'static str {
        "schema,kind,alpha,beta,efield,n,q,t,z,norm_n,tail,coeffs,p_n,closed_form_match,eigen_residual"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema,
            self.kind,
            cell_f(self.alpha),
            cell_f(self.beta),
            cell_f(self.efield),
            self.n,
            cell_f(self.q),
            cell_f(self.t),
            cell_f(self.z),
            cell_f(self.norm_n),
            cell_f(self.tail),
            cell_vec(&self.coeffs),
            cell_vec(&self.p_n),
            cell_ob(self.closed_form_match),
            cell_of(self.eigen_residual),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumDDRecord {
    pub schema: u32,
    pub kind: &'static str,
    pub dim: u32,
    pub l: u32,
    pub beta: f64,
    pub betap: f64,
    pub n: u32,
    /// Principal quantum number N = 2n + l.
    pub big_n: u32,
    /// Spectrum of the transformed operator h^(l).
    pub te: f64,
    /// Spectrum of the radial equation itself.
    pub e: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_te: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

impl Record for SpectrumDDRecord {
    fn csv_header() -> &'static str {
        "schema,kind,dim,l,beta,betap,n,big_n,te,e,oracle_te,delta,converged"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema,
            self.kind,
            self.dim,
            self.l,
            cell_f(self.beta),
            cell_f(self.betap),
            self.n,
            self.big_n,
            cell_f(self.te),
            cell_f(self.e),
            cell_of(self.oracle_te),
            cell_of(self.delta),
            cell_ob(self.converged),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RadialWfRecord {
    pub schema: u32,
    pub kind: &'static str,
    pub dim: u32,
    pub l: u32,
    pub n: u32,
    pub p: f64,
    pub chi: f64,
    pub r: f64,
}

impl Record for RadialWfRecord {
    fn csv_header() -> &'static str {
        "schema,kind,dim,l,n,p,chi,r"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.schema,
            self.kind,
            self.dim,
            self.l,
            self.n,
            cell_f(self.p),
            cell_f(self.chi),
            cell_f(self.r),
        )
    }
}

// ---------------------------------------------------------------------
// Point evaluators shared by the subcommands and the sweep driver.

/// Oracle basis frequency for the exact alpha = 0 realization. The
/// beta-term thickens X, which favors a stiffer ladder basis; measured
/// convergence at beta near 0.2 peaks around omega = 2.
fn omega_alpha0(beta: f64) -> f64 {
    (1.0 + 5.0 * beta).clamp(1.0, 3.0)
}

/// Oracle basis frequency for the exact beta = 0 realization. omega =
/// 1 converges to roundoff for alpha up to about 0.15; beyond that a
/// soft basis is the best of a slow family.
fn omega_beta0(alpha: f64) -> f64 {
    if alpha <= 0.15 {
        1.0
    } else {
        0.35
    }
}

const NSEQ_GENERAL: [usize; 4] = [100, 200, 300, 400];
const NSEQ_BOUNDARY: [usize; 3] = [240, 320, 400];

fn derive(alpha: f64, beta: f64, efield: f64) -> Result<deform1d::Derived1D> {
    deform1d::derive_params(&Deform1DParams::new(alpha, beta, efield)?)
}

/// Level energy and field correction on the requested branch. The
/// branch is validated against the parameters; use [`auto_mode`] to
/// pick the natural one.
pub fn energy_and_correction(
    mode: Mode,
    alpha: f64,
    beta: f64,
    efield: f64,
    n: u32,
) -> Result<(f64, f64)> {
    match mode {
        Mode::General => {
            let d = derive(alpha, beta, efield)?;
            Ok((deform1d::energy(&d, n)?, deform1d::field_correction(&d, n)))
        }
        Mode::Equal => {
            if alpha != beta {
                return Err(Error::Domain(format!(
                    "mode equal needs alpha = beta, got {alpha} and {beta}"
                )));
            }
            Ok((
                deform1d::energy_equal(alpha, efield, n)?,
                deform1d::field_correction_equal(alpha, efield, n),
            ))
        }
        Mode::Alpha0 => {
            if alpha != 0.0 {
                return Err(Error::Domain(format!(
                    "mode alpha0 needs alpha = 0, got {alpha}"
                )));
            }
            Ok((
                deform1d::energy_alpha0(beta, efield, n),
                deform1d::field_correction_alpha0(efield),
            ))
        }
        Mode::Beta0 => {
            if beta != 0.0 {
                return Err(Error::Domain(format!(
                    "mode beta0 needs beta = 0, got {beta}"
                )));
            }
            Ok((
                deform1d::energy_beta0(alpha, efield, n),
                deform1d::field_correction_beta0(alpha, efield, n),
            ))
        }
    }
}

pub struct PointOutcome<R> {
    pub records: Vec<R>,
    pub failures: usize,
}

/// Evaluates one 1-D parameter point: closed-form energies and
/// corrections per level, plus oracle values and deltas when `verify`
/// is set. A level fails verification when its delta exceeds `tol` or
/// its oracle did not certify convergence.
pub fn eval_point_1d(
    mode: Option<Mode>,
    alpha: f64,
    beta: f64,
    efield: f64,
    levels: u32,
    verify: bool,
    tol: f64,
) -> Result<PointOutcome<Spectrum1DRecord>> {
    if !(alpha >= 0.0 && beta >= 0.0) || !alpha.is_finite() || !beta.is_finite() || !efield.is_finite() {
        return Err(Error::Domain(format!(
            "parameters must be finite with alpha, beta >= 0; got ({alpha}, {beta}, {efield})"
        )));
    }
    let mode = mode.unwrap_or_else(|| auto_mode(alpha, beta));
    let energy_of = |n: u32| energy_and_correction(mode, alpha, beta, efield, n);

    let oracle = if verify {
        let count = levels as usize;
        let levels_out = match mode {
            Mode::General | Mode::Equal => {
                let p = Deform1DParams::new(alpha, beta, efield)?;
                fockoracle::converged_levels(&p, count, &NSEQ_GENERAL, tol)?
            }
            Mode::Alpha0 => {
                let omega = omega_alpha0(beta);
                fockoracle::converged_levels_with(
                    |n| fockoracle::build_hamiltonian_alpha0(beta, efield, omega, n),
                    count,
                    &NSEQ_BOUNDARY,
                    tol,
                )?
            }
            Mode::Beta0 => {
                let omega = omega_beta0(alpha);
                fockoracle::converged_levels_with(
                    |n| fockoracle::build_hamiltonian_beta0(alpha, efield, omega, n),
                    count,
                    &NSEQ_BOUNDARY,
                    tol,
                )?
            }
        };
        Some(levels_out)
    } else {
        None
    };

    let mut records = Vec::with_capacity(levels as usize);
    let mut failures = 0usize;
    for n in 0..levels {
        let (energy, correction) = energy_of(n)?;
        // canonicalize the field-free -0.0 so rows read cleanly
        let correction = if correction == 0.0 { 0.0 } else { correction };
        let (o_val, o_est, delta, converged) = match &oracle {
            Some(ls) => {
                let cl = &ls[n as usize];
                let delta = (energy - cl.value).abs();
                if delta > tol || !cl.converged {
                    failures += 1;
                }
                (
                    Some(cl.value),
                    Some(cl.estimate),
                    Some(delta),
                    Some(cl.converged),
                )
            }
            None => (None, None, None, None),
        };
        records.push(Spectrum1DRecord {
            schema: SCHEMA,
            kind: "spectrum1d",
            mode: mode.name(),
            alpha,
            beta,
            efield,
            n,
            energy,
            correction,
            oracle: o_val,
            oracle_estimate: o_est,
            delta,
            converged,
        });
    }
    Ok(PointOutcome { records, failures })
}

/// Evaluates one D-dimensional parameter point at fixed l for n =
/// 0..=nmax. The oracle column holds the Sturm-Liouville value of the
/// transformed spectrum e~; a `Convergence` oracle failure is reported
/// per level as converged = false rather than an error.
pub fn eval_point_dd(
    dim: u32,
    l: u32,
    beta: f64,
    betap: f64,
    nmax: u32,
    verify: bool,
    tol: f64,
) -> Result<PointOutcome<SpectrumDDRecord>> {
    let rp = RadialProblem::new(dim, l, beta, betap, 0.0)?;
    let oracle = if verify {
        match radial::sturm_liouville_oracle(&rp, l, nmax as usize + 1) {
            Ok(vals) => Some(Some(vals)),
            Err(Error::Convergence { .. }) => Some(None),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut records = Vec::with_capacity(nmax as usize + 1);
    let mut failures = 0usize;
    for n in 0..=nmax {
        let (te, e) = radial::radial_energy(&rp, n, l);
        let (o_te, delta, converged) = match &oracle {
            Some(Some(vals)) => {
                let delta = (te - vals[n as usize]).abs();
                if delta > tol {
                    failures += 1;
                }
                (Some(vals[n as usize]), Some(delta), Some(true))
            }
            Some(None) => {
                failures += 1;
                (None, None, Some(false))
            }
            None => (None, None, None),
        };
        records.push(SpectrumDDRecord {
            schema: SCHEMA,
            kind: "spectrumdd",
            dim,
            l,
            beta,
            betap,
            n,
            big_n: 2 * n + l,
            te,
            e,
            oracle_te: o_te,
            delta,
            converged,
        });
    }
    Ok(PointOutcome { records, failures })
}

/// Builds the states1d record for one level: Bargmann coefficients,
/// polynomial prefactor, optional closed-form match flag (n <= 3) and
/// optional oracle eigenresidual.
pub fn eval_states1d(
    alpha: f64,
    beta: f64,
    efield: f64,
    n: u32,
    m_cap: usize,
    check_closed_form: bool,
    verify_eigen: bool,
    tol: f64,
) -> Result<PointOutcome<States1DRecord>> {
    let d = derive(alpha, beta, efield)?;
    let state = bargmann::excited_state(d.q, d.t, d.z, n, m_cap)?;
    let unsign_zero = |v: Vec<f64>| -> Vec<f64> {
        v.into_iter().map(|x| if x == 0.0 { 0.0 } else { x }).collect()
    };
    let coeffs = unsign_zero(state.coeffs.real_entries());
    let p_n: Vec<f64> = unsign_zero(state.p_n.real_coeffs());
    let mut failures = 0usize;

    let closed_form_match = if check_closed_form {
        if n == 0 {
            Some(true)
        } else if n <= 3 {
            let closed = bargmann::pn_closed(n, d.q, d.t, d.z)?;
            let scale = closed
                .coeffs()
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
            let ok = state.p_n.max_abs_diff(&closed) <= 1.0e-12 * scale.max(1.0);
            if !ok {
                failures += 1;
            }
            Some(ok)
        } else {
            None
        }
    } else {
        None
    };

    let eigen_residual = if verify_eigen {
        let dim = m_cap + 8;
        let p = Deform1DParams::new(alpha, beta, efield)?;
        let h = fockoracle::build_hamiltonian(&p, dim)?;
        let mut v = coeffs.clone();
        v.resize(dim, 0.0);
        let hv = h.matvec(&v);
        let e_n = deform1d::energy(&d, n)?;
        let res = hv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - e_n * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if res > tol {
            failures += 1;
        }
        Some(res)
    } else {
        None
    };

    let record = States1DRecord {
        schema: SCHEMA,
        kind: "states1d",
        alpha,
        beta,
        efield,
        n,
        q: d.q,
        t: d.t,
        z: d.z,
        norm_n: state.norm_n,
        tail: state.tail,
        coeffs,
        p_n,
        closed_form_match,
        eigen_residual,
    };
    Ok(PointOutcome {
        records: vec![record],
        failures,
    })
}

/// Samples (P, chi_n(P), R_nl(P)) on a uniform grid for external
/// plotting.
pub fn eval_radialwf(
    dim: u32,
    l: u32,
    n: u32,
    beta: f64,
    betap: f64,
    gamma_weight: f64,
    p_max: f64,
    samples: usize,
) -> Result<Vec<RadialWfRecord>> {
    if samples < 2 || !(p_max > 0.0) {
        return Err(Error::Domain(format!(
            "need at least 2 samples over a positive range, got {samples} over {p_max}"
        )));
    }
    let rp = RadialProblem::new(dim, l, beta, betap, gamma_weight)?;
    let state = radial::radial_wavefunction(&rp, n, l)?;
    let rd = radial::radial_derive(&rp)?;
    let jac_at_origin = radial::jacobi_eval(n, rd.lambda, rd.mu, -1.0)?;
    let mut out = Vec::with_capacity(samples);
    for k in 0..samples {
        let p = p_max * (k as f64) / (samples as f64 - 1.0);
        let chi = state.chi(p);
        // R ~ P^l at the origin: finite and nonzero only for l = 0
        let r = if p == 0.0 {
            if l == 0 {
                state.norm_n * jac_at_origin
            } else {
                0.0
            }
        } else {
            state.r_nl(p)
        };
        out.push(RadialWfRecord {
            schema: SCHEMA,
            kind: "radialwf",
            dim,
            l,
            n,
            p,
            chi,
            r,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Sweep driver.

#[derive(Debug, Clone, Deserialize)]
pub struct RangeSpec {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl RangeSpec {
    pub fn values(&self) -> Result<Vec<f64>> {
        if self.steps < 1 {
            return Err(Error::Domain("range needs steps >= 1".into()));
        }
        if self.steps == 1 {
            return Ok(vec![self.start]);
        }
        let d = (self.stop - self.start) / (self.steps as f64 - 1.0);
        Ok((0..self.steps).map(|i| self.start + d * i as f64).collect())
    }
}

fn fixed(v: f64) -> RangeSpec {
    RangeSpec {
        start: v,
        stop: v,
        steps: 1,
    }
}

/// Declarative sweep: a grid of parameter points, each evaluated at
/// every level, optionally against the oracle.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// "1d" or "radial".
    pub kind: String,
    #[serde(default)]
    pub alpha: Option<RangeSpec>,
    #[serde(default)]
    pub beta: Option<RangeSpec>,
    #[serde(default)]
    pub efield: Option<RangeSpec>,
    #[serde(default)]
    pub betap: Option<RangeSpec>,
    #[serde(default)]
    pub dim: Option<u32>,
    #[serde(default)]
    pub l_max: Option<u32>,
    pub nmax: u32,
    #[serde(default)]
    pub oracle: bool,
    #[serde(default = "default_sweep_tol")]
    pub tol: f64,
}

fn default_sweep_tol() -> f64 {
    1.0e-7
}

pub enum SweepLines {
    OneD(Vec<Spectrum1DRecord>),
    Radial(Vec<SpectrumDDRecord>),
}

pub struct SweepOutcome {
    pub lines: SweepLines,
    pub failures: usize,
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepOutcome> {
    match spec.kind.as_str() {
        "1d" => {
            let alphas = spec.alpha.clone().unwrap_or(fixed(0.0)).values()?;
            let betas = spec.beta.clone().unwrap_or(fixed(0.0)).values()?;
            let efields = spec.efield.clone().unwrap_or(fixed(0.0)).values()?;
            let mut points = Vec::new();
            for a in &alphas {
                for b in &betas {
                    for e in &efields {
                        points.push((*a, *b, *e));
                    }
                }
            }
            let results = run_indexed(points.len(), max_threads(), |i| {
                let (a, b, e) = points[i];
                eval_point_1d(None, a, b, e, spec.nmax + 1, spec.oracle, spec.tol)
            });
            let mut records = Vec::new();
            let mut failures = 0;
            for r in results {
                let out = r?;
                failures += out.failures;
                records.extend(out.records);
            }
            Ok(SweepOutcome {
                lines: SweepLines::OneD(records),
                failures,
            })
        }
        "radial" => {
            let dim = spec.dim.unwrap_or(3);
            let l_max = spec.l_max.unwrap_or(0);
            let betas = spec
                .beta
                .clone()
                .ok_or_else(|| Error::Domain("radial sweep needs a beta range".into()))?
                .values()?;
            let betaps = spec.betap.clone().unwrap_or(fixed(0.0)).values()?;
            let mut points = Vec::new();
            for b in &betas {
                for bp in &betaps {
                    for l in 0..=l_max {
                        points.push((*b, *bp, l));
                    }
                }
            }
            let results = run_indexed(points.len(), max_threads(), |i| {
                let (b, bp, l) = points[i];
                eval_point_dd(dim, l, b, bp, spec.nmax, spec.oracle, spec.tol)
            });
            let mut records = Vec::new();
            let mut failures = 0;
            for r in results {
                let out = r?;
                failures += out.failures;
                records.extend(out.records);
            }
            Ok(SweepOutcome {
                lines: SweepLines::Radial(records),
                failures,
            })
        }
        other => Err(Error::Domain(format!(
            "unknown sweep kind '{other}' (expected 1d|radial)"
        ))),
    }
}

// ---------------------------------------------------------------------
// verify-all battery: every closed form against its oracle, desk scale.

struct CheckLine {
    ok: Option<bool>, // None renders as a skip
    name: String,
    detail: String,
}

fn push_check(lines: &mut Vec<CheckLine>, ok: bool, name: &str, detail: String) {
    lines.push(CheckLine {
        ok: Some(ok),
        name: name.to_string(),
        detail,
    });
}

/// Runs the verification battery and renders one line per check:
/// `[ ok ]` / `[FAIL]` / `[skip]`. Returns the rendered lines and the
/// failure count (skips do not fail; they mark sub-cases the
/// finite-difference scheme cannot certify, which are reported rather
/// than silently dropped).
pub fn verify_all() -> (Vec<String>, usize) {
    let mut checks: Vec<CheckLine> = Vec::new();

    // 1-D general branch against the q-boson oracle
    {
        let mut grid = Vec::new();
        for &a in &[0.1, 0.2] {
            for &b in &[0.1, 0.2] {
                for &e in &[0.0, 0.5] {
                    grid.push((a, b, e));
                }
            }
        }
        let results = run_indexed(grid.len(), max_threads(), |i| {
            let (a, b, e) = grid[i];
            eval_point_1d(Some(Mode::General), a, b, e, 6, true, 1.0e-7)
        });
        let mut worst = 0.0f64;
        let mut bad = 0usize;
        let mut err: Option<String> = None;
        for r in results {
            match r {
                Ok(out) => {
                    bad += out.failures;
                    for rec in &out.records {
                        worst = worst.max(rec.delta.unwrap_or(f64::INFINITY));
                    }
                }
                Err(e) => err = Some(e.to_string()),
            }
        }
        match err {
            None => push_check(
                &mut checks,
                bad == 0,
                "1d-general-oracle",
                format!("8 points, n <= 5, max |closed - oracle| = {worst:.3e}, tol 1e-7"),
            ),
            Some(e) => push_check(&mut checks, false, "1d-general-oracle", e),
        }
    }

    // boundary branches against the exact realizations
    for (name, mode, a, b, e) in [
        ("1d-alpha0-oracle", Mode::Alpha0, 0.0, 0.2, 0.7),
        ("1d-beta0-oracle", Mode::Beta0, 0.1, 0.0, 0.5),
    ] {
        match eval_point_1d(Some(mode), a, b, e, 6, true, 1.0e-7) {
            Ok(out) => {
                let worst = out
                    .records
                    .iter()
                    .map(|r| r.delta.unwrap_or(f64::INFINITY))
                    .fold(0.0f64, f64::max);
                push_check(
                    &mut checks,
                    out.failures == 0,
                    name,
                    format!("n <= 5, max |closed - oracle| = {worst:.3e}, tol 1e-7"),
                );
            }
            Err(e) => push_check(&mut checks, false, name, e.to_string()),
        }
    }

    // equal branch consistency with the general one
    {
        let mut worst = 0.0f64;
        let mut err: Option<String> = None;
        for n in 0..=8u32 {
            let r = derive(0.15, 0.15, 0.3)
                .and_then(|d| deform1d::energy(&d, n))
                .and_then(|e_gen| {
                    deform1d::energy_equal(0.15, 0.3, n).map(|e_eq| (e_gen - e_eq).abs())
                });
            match r {
                Ok(diff) => worst = worst.max(diff),
                Err(e) => err = Some(e.to_string()),
            }
        }
        match err {
            None => push_check(
                &mut checks,
                worst <= 1.0e-12,
                "1d-equal-branch",
                format!("alpha = beta = 0.15, n <= 8, max branch diff = {worst:.3e}, tol 1e-12"),
            ),
            Some(e) => push_check(&mut checks, false, "1d-equal-branch", e),
        }
    }

    // telescoped sum against the closed form
    {
        let mut worst = 0.0f64;
        let mut err: Option<String> = None;
        match derive(0.2, 0.1, 0.5) {
            Ok(d) => {
                for n in 0..=12u32 {
                    match (deform1d::energy(&d, n), deform1d::energy_telescoped(&d, n)) {
                        (Ok(a), Ok(b)) => worst = worst.max((a - b).abs() / a.abs().max(1.0)),
                        (Err(e), _) | (_, Err(e)) => err = Some(e.to_string()),
                    }
                }
            }
            Err(e) => err = Some(e.to_string()),
        }
        match err {
            None => push_check(
                &mut checks,
                worst <= 1.0e-12,
                "1d-telescoping",
                format!("n <= 12, max rel diff = {worst:.3e}, tol 1e-12"),
            ),
            Some(e) => push_check(&mut checks, false, "1d-telescoping", e),
        }
    }

    // Bargmann states against oracle eigenvectors
    {
        let r = (|| -> Result<(f64, f64)> {
            let d = derive(0.15, 0.25, 0.4)?;
            let p = Deform1DParams::new(0.15, 0.25, 0.4)?;
            let m_cap = 48usize;
            let dim = 56usize;
            let h = fockoracle::build_hamiltonian(&p, dim)?;
            let (_vals, vecs) = fockoracle::eig_sym(&h)?;
            let mut min_overlap = 1.0f64;
            let mut max_resid = 0.0f64;
            for n in 0..=3u32 {
                let st = bargmann::excited_state(d.q, d.t, d.z, n, m_cap)?;
                let mut v = st.coeffs.real_entries();
                v.resize(dim, 0.0);
                let col: Vec<f64> = (0..dim).map(|i| vecs.at(i, n as usize)).collect();
                let ov = v.iter().zip(&col).map(|(a, b)| a * b).sum::<f64>().abs();
                min_overlap = min_overlap.min(ov);
                let e_n = deform1d::energy(&d, n)?;
                let hv = h.matvec(&v);
                let res = hv
                    .iter()
                    .zip(&v)
                    .map(|(x, y)| (x - e_n * y).powi(2))
                    .sum::<f64>()
                    .sqrt();
                max_resid = max_resid.max(res);
            }
            Ok((min_overlap, max_resid))
        })();
        match r {
            Ok((ov, res)) => push_check(
                &mut checks,
                ov >= 1.0 - 1.0e-7 && res <= 1.0e-8,
                "bargmann-overlap",
                format!("n <= 3, min |overlap| = {:.12}, max residual = {res:.3e}", ov),
            ),
            Err(e) => push_check(&mut checks, false, "bargmann-overlap", e.to_string()),
        }
    }

    // radial closed forms against the finite-difference oracle
    {
        let mut cases = Vec::new();
        for &dim in &[2u32, 3, 4] {
            for l in 0..=2u32 {
                cases.push((dim, l));
            }
        }
        let results = run_indexed(cases.len(), max_threads(), |i| {
            let (dim, l) = cases[i];
            if dim == 2 && l == 0 {
                return (dim, l, None);
            }
            let out = eval_point_dd(dim, l, 0.05, 0.05, 2, true, 1.0e-6);
            (dim, l, Some(out))
        });
        for (dim, l, out) in results {
            let name = format!("radial-oracle D={dim} l={l}");
            match out {
                None => checks.push(CheckLine {
                    ok: None,
                    name,
                    detail: "attractive 1/P^2 endpoint outside the FD scheme's reach; \
                             closed form stands unverified here"
                        .into(),
                }),
                Some(Ok(o)) => {
                    let worst = o
                        .records
                        .iter()
                        .map(|r| r.delta.unwrap_or(f64::INFINITY))
                        .fold(0.0f64, f64::max);
                    push_check(
                        &mut checks,
                        o.failures == 0,
                        &name,
                        format!("n <= 2, max |te - oracle| = {worst:.3e}, tol 1e-6"),
                    );
                }
                Some(Err(e)) => push_check(&mut checks, false, &name, e.to_string()),
            }
        }
    }

    // radial orthonormality
    {
        let r = (|| -> Result<f64> {
            let rp = RadialProblem::new(3, 1, 0.05, 0.05, 0.0)?;
            let states: Vec<_> = (0..=3u32)
                .map(|n| radial::radial_wavefunction(&rp, n, 1))
                .collect::<Result<_>>()?;
            let mut worst = 0.0f64;
            for i in 0..states.len() {
                for j in i..states.len() {
                    let v = radial::chi_inner_product(&states[i], &states[j])?;
                    let target = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((v - target).abs());
                }
            }
            Ok(worst)
        })();
        match r {
            Ok(worst) => push_check(
                &mut checks,
                worst <= 1.0e-8,
                "radial-orthonormality",
                format!("D=3 l=1, n,n' <= 3, max |<chi,chi> - delta| = {worst:.3e}, tol 1e-8"),
            ),
            Err(e) => push_check(&mut checks, false, "radial-orthonormality", e.to_string()),
        }
    }

    // alternative-factorization spectrum identity
    {
        let mut all = true;
        let mut err: Option<String> = None;
        for dim in 2..=5u32 {
            for l in 0..=3u32 {
                for n in 0..=4u32 {
                    match RadialProblem::new(dim, l, 0.1, 0.2, 0.0) {
                        Ok(rp) => {
                            if !radial::alt_spectrum_check(&rp, n, l) {
                                all = false;
                            }
                        }
                        Err(e) => err = Some(e.to_string()),
                    }
                }
            }
        }
        match err {
            None => push_check(
                &mut checks,
                all,
                "alt-spectrum-identity",
                "D <= 5, l <= 3, n <= 4 at (beta, beta') = (0.1, 0.2), rel tol 1e-12".to_string(),
            ),
            Some(e) => push_check(&mut checks, false, "alt-spectrum-identity", e),
        }
    }

    let mut lines = Vec::with_capacity(checks.len() + 1);
    let mut failures = 0usize;
    for c in &checks {
        let tag = match c.ok {
            Some(true) => "[ ok ]",
            Some(false) => {
                failures += 1;
                "[FAIL]"
            }
            None => "[skip]",
        };
        lines.push(format!("{tag} {}: {}", c.name, c.detail));
    }
    lines.push(format!(
        "verify-all: {} checks, {} failed, {} skipped",
        checks.len(),
        failures,
        checks.iter().filter(|c| c.ok.is_none()).count()
    ));
    (lines, failures)
}
