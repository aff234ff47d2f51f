use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use zetalab_core::eisenstein::{
    e1_star, eisenstein_sl2, eisenstein_slr, haas_ratio, heegner_field, heegner_zeta, kronecker_limit_check,
    terras_parts,
};
use zetalab_core::epstein::{epstein_direct, epstein_laurent, epstein_zeta};
use zetalab_core::hamiltonian::{ground_state_residual, min_growth_ratio, potential_profile, DEFAULT_STEP};
use zetalab_core::lattice::{GramMatrix, UpperHalfPoint};
use zetalab_core::specfun::{dirichlet_l, psi_arg_xi, riemann_zeta};
use zetalab_core::spectral::{
    exotic_roots_with_track, greens_constant_term_check, phase_count_prediction, repulsion_experiment,
    spacing_statistics, TRACK_STEP,
};
use zetalab_core::Complex;

use crate::args::{Cli, Command, Format};
use crate::config::{parse_complex, parse_gram, parse_point, RunConfig};
use crate::error::CliError;
use crate::output::{pair, write_document, write_table};
use crate::selftest;

/// Bisection bracket width of the exotic roots, reported as their t error.
const ROOT_WIDTH: f64 = 1e-12;

pub struct Ctx<'a> {
    pub cli: &'a Cli,
    pub cfg: RunConfig,
    pub out: &'a mut dyn Write,
    pub diag: &'a mut dyn Write,
}

fn require<'c>(v: &'c Option<String>, flag: &str) -> Result<&'c str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::usage(format!("--{flag} is required")))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Tolerance(what()))
    }
}

pub fn dispatch(ctx: &mut Ctx) -> Result<(), CliError> {
    match ctx.cli.command {
        Command::Epstein => epstein(ctx),
        Command::Eisenstein => eisenstein(ctx),
        Command::Kronecker => kronecker(ctx),
        Command::Terras => terras(ctx),
        Command::Heegner => heegner(ctx),
        Command::Potential => potential(ctx),
        Command::GroundState => ground_state(ctx),
        Command::ExoticRoots => exotic(ctx, false),
        Command::Spacing => exotic(ctx, true),
        Command::GreensCheck => greens(ctx),
        Command::Repulsion => repulsion(ctx),
        Command::Selftest => selftest_cmd(ctx),
    }
}

fn gram(ctx: &Ctx, default_r: usize) -> Result<GramMatrix, CliError> {
    parse_gram(
        ctx.cli.q.as_deref().unwrap_or("identity"),
        ctx.cli.r.or(Some(default_r)),
    )
}

#[derive(Serialize)]
struct EpsteinDoc {
    r: usize,
    #[serde(rename = "Q")]
    q: Vec<f64>,
    s: [f64; 2],
    value: [f64; 2],
    error_bound: f64,
    terms_used: usize,
    method: &'static str,
}

#[derive(Serialize)]
struct EpsteinRow {
    r: usize,
    s_re: f64,
    s_im: f64,
    value_re: f64,
    value_im: f64,
    error_bound: f64,
    terms_used: usize,
    method: &'static str,
}

fn epstein(ctx: &mut Ctx) -> Result<(), CliError> {
    let q = gram(ctx, 2)?;
    let s = parse_complex("s", require(&ctx.cli.s, "s")?)?;
    let (res, method) = match ctx.cli.direct {
        Some(bound) => (epstein_direct(&q, s, bound, ctx.cfg.enum_cap)?, "direct"),
        None => (epstein_zeta(&q, s, ctx.cfg.tolerance)?, "continuation"),
    };
    let doc = EpsteinDoc {
        r: q.dim(),
        q: q.entries().to_vec(),
        s: pair(s),
        value: pair(res.value),
        error_bound: res.error_bound,
        terms_used: res.terms_used,
        method,
    };
    let row = EpsteinRow {
        r: q.dim(),
        s_re: s.re,
        s_im: s.im,
        value_re: res.value.re,
        value_im: res.value.im,
        error_bound: res.error_bound,
        terms_used: res.terms_used,
        method,
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    let thr = ctx.cfg.threshold_or(ctx.cfg.tolerance);
    check(res.error_bound <= thr * res.value.norm().max(1.0), || {
        format!("error bound {:e} exceeds the tolerance {thr:e}", res.error_bound)
    })
}

#[derive(Serialize)]
struct EisensteinDoc {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<[f64; 2]>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    q: Option<Vec<f64>>,
    s: [f64; 2],
    value: [f64; 2],
    error_bound: f64,
}

#[derive(Serialize)]
struct EisensteinRow {
    kind: &'static str,
    x: Option<f64>,
    y: Option<f64>,
    s_re: f64,
    s_im: f64,
    value_re: f64,
    value_im: f64,
    error_bound: f64,
}

fn eisenstein(ctx: &mut Ctx) -> Result<(), CliError> {
    let s = parse_complex("s", require(&ctx.cli.s, "s")?)?;
    let (kind, z, q, v) = if ctx.cli.q.is_some() {
        let q = gram(ctx, 2)?;
        let v = eisenstein_slr(&q, s)?;
        ("eisenstein_slr", None, Some(q.entries().to_vec()), v)
    } else {
        let z = parse_point(require(&ctx.cli.z, "z")?)?;
        ("eisenstein", Some(z), None, eisenstein_sl2(z, s)?)
    };
    let doc = EisensteinDoc {
        kind,
        z: z.map(|z| [z.x(), z.y()]),
        q,
        s: pair(s),
        value: pair(v.value),
        error_bound: v.error_bound,
    };
    let row = EisensteinRow {
        kind,
        x: z.map(|z| z.x()),
        y: z.map(|z| z.y()),
        s_re: s.re,
        s_im: s.im,
        value_re: v.value.re,
        value_im: v.value.im,
        error_bound: v.error_bound,
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    let thr = ctx.cfg.threshold_or(ctx.cfg.tolerance);
    check(v.error_bound <= thr * v.value.norm().max(1.0), || {
        format!("error bound {:e} exceeds the tolerance {thr:e}", v.error_bound)
    })
}

#[derive(Serialize)]
struct KroneckerDoc {
    kind: &'static str,
    z: [f64; 2],
    residual: f64,
    residue: [f64; 2],
    residue_error: f64,
    a0: [f64; 2],
    closed_form: f64,
    e1_star: f64,
    tolerance: f64,
}

#[derive(Serialize)]
struct KroneckerRow {
    x: f64,
    y: f64,
    a0: f64,
    closed_form: f64,
    residual: f64,
    residue_error: f64,
    e1_star: f64,
}

fn kronecker(ctx: &mut Ctx) -> Result<(), CliError> {
    let z = match &ctx.cli.z {
        Some(t) => parse_point(t)?,
        None => UpperHalfPoint::i(),
    };
    let k = kronecker_limit_check(z)?;
    let thr = ctx.cfg.threshold_or(1e-6);
    let residue_error = (k.residue - std::f64::consts::PI).norm();
    let doc = KroneckerDoc {
        kind: "kronecker_check",
        z: [z.x(), z.y()],
        residual: k.residual,
        residue: pair(k.residue),
        residue_error,
        a0: pair(k.a0),
        closed_form: k.closed_form,
        e1_star: e1_star(z),
        tolerance: thr,
    };
    let row = KroneckerRow {
        x: z.x(),
        y: z.y(),
        a0: k.a0.re,
        closed_form: k.closed_form,
        residual: k.residual,
        residue_error,
        e1_star: e1_star(z),
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    check(k.residual < thr && residue_error < thr, || {
        format!(
            "residual {:e}, residue error {residue_error:e}, tolerance {thr:e}",
            k.residual
        )
    })
}

#[derive(Serialize)]
struct TerrasDoc {
    r: usize,
    ell: usize,
    #[serde(rename = "Q")]
    q: Vec<f64>,
    epstein_block: f64,
    schur_block: f64,
    bessel_sum: [f64; 2],
    digamma_term: f64,
    total: f64,
    laurent_a0: f64,
    rel_error: f64,
}

#[derive(Serialize)]
struct TerrasRow {
    r: usize,
    ell: usize,
    epstein_block: f64,
    schur_block: f64,
    bessel_sum: f64,
    digamma_term: f64,
    total: f64,
    laurent_a0: f64,
    rel_error: f64,
}

fn terras(ctx: &mut Ctx) -> Result<(), CliError> {
    let q = gram(ctx, 3)?;
    let ell = ctx.cli.ell.unwrap_or(1);
    let parts = terras_parts(&q, ell)?;
    let r = q.dim();
    let a0 = epstein_laurent(&q, Complex::new(r as f64 / 2.0, 0.0), 0)?
        .constant_term()
        .re;
    let rel_error = (parts.total - a0).abs() / a0.abs();
    let doc = TerrasDoc {
        r,
        ell,
        q: q.entries().to_vec(),
        epstein_block: parts.epstein_block,
        schur_block: parts.schur_block,
        bessel_sum: pair(parts.bessel_sum),
        digamma_term: parts.digamma_term,
        total: parts.total,
        laurent_a0: a0,
        rel_error,
    };
    let row = TerrasRow {
        r,
        ell,
        epstein_block: parts.epstein_block,
        schur_block: parts.schur_block,
        bessel_sum: parts.bessel_sum.re,
        digamma_term: parts.digamma_term,
        total: parts.total,
        laurent_a0: a0,
        rel_error,
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    let thr = ctx.cfg.threshold_or(1e-4);
    check(rel_error < thr, || {
        format!("relative error {rel_error:e} exceeds {thr:e}")
    })
}

#[derive(Serialize)]
struct HeegnerDoc {
    #[serde(rename = "D")]
    d: i64,
    point: [f64; 2],
    units: u32,
    s: [f64; 2],
    zeta_k_from_eisenstein: [f64; 2],
    zeta_times_l: [f64; 2],
    rel_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    haas_ratio: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    haas_prediction: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct HeegnerRow {
    #[serde(rename = "D")]
    d: i64,
    s_re: f64,
    s_im: f64,
    zeta_k_re: f64,
    zeta_k_im: f64,
    rel_error: f64,
}

/// 3(√3/2)^s, the value of the ratio E_s(ω)ζ(2s)/(ζ(s)L(s, χ₋₃)).
pub fn haas_prediction(s: Complex) -> Complex {
    (s * (3f64.sqrt() / 2.0).ln()).exp() * 3.0
}

fn heegner(ctx: &mut Ctx) -> Result<(), CliError> {
    let d = ctx.cli.discriminant.unwrap_or(-4);
    let s = match &ctx.cli.s {
        Some(t) => parse_complex("s", t)?,
        None => Complex::new(2.0, 0.0),
    };
    let field = heegner_field(d)?;
    let from_e = heegner_zeta(s, d)?;
    let direct = riemann_zeta(s)? * dirichlet_l(s, d)?;
    let rel_error = (from_e - direct).norm() / direct.norm();
    let (haas, pred) = if d == -3 {
        (Some(pair(haas_ratio(s)?)), Some(pair(haas_prediction(s))))
    } else {
        (None, None)
    };
    let doc = HeegnerDoc {
        d,
        point: [field.point.x(), field.point.y()],
        units: field.units,
        s: pair(s),
        zeta_k_from_eisenstein: pair(from_e),
        zeta_times_l: pair(direct),
        rel_error,
        haas_ratio: haas,
        haas_prediction: pred,
    };
    let row = HeegnerRow {
        d,
        s_re: s.re,
        s_im: s.im,
        zeta_k_re: from_e.re,
        zeta_k_im: from_e.im,
        rel_error,
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    let thr = ctx.cfg.threshold_or(1e-7);
    check(rel_error < thr, || {
        format!("relative error {rel_error:e} exceeds {thr:e}")
    })
}

#[derive(Serialize)]
struct PotentialRow {
    y: f64,
    q: f64,
    q_over_y2: f64,
    asymptote: f64,
    asymptote_gap: f64,
    min_ratio_over_x: f64,
    error_bound: f64,
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![lo];
    }
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

fn potential(ctx: &mut Ctx) -> Result<(), CliError> {
    let lo = ctx.cli.y_min.unwrap_or(4.0);
    let hi = ctx.cli.y_max.unwrap_or(50.0);
    if !(lo >= 1.0 && hi >= lo) {
        return Err(CliError::usage("need 1 ≤ --y-min ≤ --y-max"));
    }
    let n = ctx.cli.points.unwrap_or(47).max(1);
    let mut rows = Vec::with_capacity(n);
    for (y, q, ratio) in potential_profile(&grid(lo, hi, n))? {
        let asymptote = (1.0 - 3.0 / (std::f64::consts::PI * y)).powi(2);
        rows.push(PotentialRow {
            y,
            q,
            q_over_y2: ratio,
            asymptote,
            asymptote_gap: (ratio - asymptote).abs(),
            min_ratio_over_x: min_growth_ratio(y, 64)?,
            error_bound: 64.0 * f64::EPSILON * q.abs(),
        });
    }
    write_table(ctx.out, ctx.cfg.format_or(Format::Csv), &rows)?;
    let thr = ctx.cfg.threshold_or(1e-6);
    let worst_growth = rows.iter().map(|r| r.min_ratio_over_x).fold(f64::INFINITY, f64::min);
    let worst_gap = rows
        .iter()
        .filter(|r| r.y >= 10.0)
        .map(|r| r.asymptote_gap)
        .fold(0.0, f64::max);
    check(worst_growth >= 0.5 && worst_gap < thr, || {
        format!("min q/y² = {worst_growth}, asymptote gap {worst_gap:e}")
    })
}

#[derive(Serialize)]
struct GroundRow {
    x: f64,
    y: f64,
    h: f64,
    residual: f64,
    /// |residual(h) − residual(2h)|, the size of the discretization term
    error_bound: f64,
}

/// Points with x ∈ [−½, ½] and y ∈ [1, 3], inside the fundamental domain.
pub fn random_points(seed: u64, n: usize) -> Vec<UpperHalfPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x = rng.random_range(-0.5..=0.5);
            let y = rng.random_range(1.0..=3.0);
            UpperHalfPoint::new(x, y).expect("positive height")
        })
        .collect()
}

fn ground_state(ctx: &mut Ctx) -> Result<(), CliError> {
    let pts = match &ctx.cli.z {
        Some(t) => vec![parse_point(t)?],
        None => random_points(ctx.cfg.seed, ctx.cli.points.unwrap_or(10)),
    };
    let h = ctx.cli.h.unwrap_or(DEFAULT_STEP);
    let rows = pts
        .iter()
        .map(|&z| {
            let residual = ground_state_residual(z, h)?;
            let coarse = ground_state_residual(z, 2.0 * h)?;
            Ok(GroundRow {
                x: z.x(),
                y: z.y(),
                h,
                residual,
                error_bound: (coarse - residual).abs(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    write_table(ctx.out, ctx.cfg.format_or(Format::Csv), &rows)?;
    let thr = ctx.cfg.threshold_or(1e-4);
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    check(worst < thr, || format!("largest residual {worst:e} exceeds {thr:e}"))
}

#[derive(Serialize)]
struct RootRow {
    t: f64,
    lambda: f64,
    residual: f64,
    constant_term_residual: f64,
    gap: Option<f64>,
    comparator: Option<f64>,
    error_bound: f64,
}

#[derive(Serialize)]
struct SpacingOut {
    t: f64,
    gap: f64,
    comparator: f64,
    rel_deviation: f64,
    pi_over_log: f64,
    error_bound: f64,
}

fn exotic(ctx: &mut Ctx, spacing: bool) -> Result<(), CliError> {
    let a = ctx.cli.a.ok_or_else(|| CliError::usage("--a is required"))?;
    if !(a > 1.0) {
        return Err(CliError::usage("--a must exceed 1"));
    }
    if a < 2.0 {
        writeln!(
            ctx.diag,
            "warning: a = {a} < 2; the truncation theory assumes a large cut-off"
        )?;
    }
    let t_min = ctx.cli.t_min.unwrap_or(0.1);
    let t_max = ctx.cli.t_max.unwrap_or(50.0);
    if !(t_min >= 0.1 && t_max > t_min) {
        return Err(CliError::usage("need 0.1 ≤ --t-min < --t-max"));
    }
    let track = psi_arg_xi(t_max, TRACK_STEP)?;
    let roots = exotic_roots_with_track(&track, a, t_min, t_max)?;
    let predicted = phase_count_prediction(&track, a, t_min, t_max)?;
    writeln!(ctx.diag, "roots: {}, phase-count prediction: {predicted}", roots.len())?;
    let format = ctx.cfg.format_or(Format::Csv);

    if spacing {
        let rows: Vec<SpacingOut> = spacing_statistics(&roots, &track)?
            .into_iter()
            .map(|r| SpacingOut {
                t: r.t,
                gap: r.gap,
                comparator: r.comparator,
                rel_deviation: (r.gap - r.comparator).abs() / r.gap,
                pi_over_log: r.pi_over_log,
                error_bound: 2.0 * ROOT_WIDTH,
            })
            .collect();
        write_table(ctx.out, format, &rows)?;
        // only an explicit --tol turns the comparator into a pass/fail check
        if let Some(thr) = ctx.cfg.threshold {
            let worst = rows.iter().map(|r| r.rel_deviation).fold(0.0, f64::max);
            return check(worst <= thr, || {
                format!("largest gap deviation {worst:e} exceeds {thr:e}")
            });
        }
        return Ok(());
    }

    let stats = if roots.len() >= 3 {
        spacing_statistics(&roots, &track)?
    } else {
        Vec::new()
    };
    let rows: Vec<RootRow> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| RootRow {
            t: r.t,
            lambda: r.lambda,
            residual: r.residual,
            constant_term_residual: r.constant_term_residual,
            gap: stats.get(k).map(|s| s.gap),
            comparator: stats.get(k).map(|s| s.comparator),
            error_bound: ROOT_WIDTH,
        })
        .collect();
    write_table(ctx.out, format, &rows)?;
    let thr = ctx.cfg.threshold_or(1e-8);
    let worst = roots
        .iter()
        .map(|r| r.residual.max(r.constant_term_residual))
        .fold(0.0, f64::max);
    check(worst < thr, || {
        format!("largest root residual {worst:e} exceeds {thr:e}")
    })
}

#[derive(Serialize)]
struct GreensDoc {
    z: [f64; 2],
    w: [f64; 2],
    a: f64,
    lhs: [f64; 2],
    rhs: [f64; 2],
    rel_error: f64,
    #[serde(rename = "T")]
    height: f64,
    tail_bound: f64,
    quadrature_error: f64,
    error_bound: f64,
}

#[derive(Serialize)]
struct GreensRow {
    lhs_re: f64,
    lhs_im: f64,
    rhs_re: f64,
    rhs_im: f64,
    rel_error: f64,
    #[serde(rename = "T")]
    height: f64,
    tail_bound: f64,
    quadrature_error: f64,
    error_bound: f64,
}

fn greens(ctx: &mut Ctx) -> Result<(), CliError> {
    let z = match &ctx.cli.z {
        Some(t) => parse_point(t)?,
        None => UpperHalfPoint::i(),
    };
    let w = match &ctx.cli.s {
        Some(t) => parse_complex("s", t)?,
        None => Complex::new(1.5, 0.0),
    };
    let a = ctx.cli.a.unwrap_or(3.0);
    let g = greens_constant_term_check(z, w, a, ctx.cfg.contour)?;
    let doc = GreensDoc {
        z: [z.x(), z.y()],
        w: pair(w),
        a,
        lhs: pair(g.lhs),
        rhs: pair(g.rhs),
        rel_error: g.rel_error,
        height: g.height,
        tail_bound: g.tail_bound,
        quadrature_error: g.quadrature_error,
        error_bound: g.error_bound(),
    };
    let row = GreensRow {
        lhs_re: g.lhs.re,
        lhs_im: g.lhs.im,
        rhs_re: g.rhs.re,
        rhs_im: g.rhs.im,
        rel_error: g.rel_error,
        height: g.height,
        tail_bound: g.tail_bound,
        quadrature_error: g.quadrature_error,
        error_bound: g.error_bound(),
    };
    write_document(ctx.out, ctx.cfg.format_or(Format::Json), &doc, &row)?;
    let thr = ctx.cfg.threshold_or(1e-3);
    check(g.rel_error < thr, || {
        format!("relative error {:e} exceeds {thr:e}", g.rel_error)
    })
}

#[derive(Serialize)]
struct RepulsionOut {
    tau: f64,
    theta: f64,
    j: f64,
    lhs: f64,
    rhs: f64,
    /// bound on the discarded part of the J integral
    error_bound: f64,
}

fn repulsion(ctx: &mut Ctx) -> Result<(), CliError> {
    let d = ctx.cli.discriminant.unwrap_or(-4);
    let a = ctx.cli.a.unwrap_or(10.0);
    if a > 1.0 && a < 2.0 {
        writeln!(
            ctx.diag,
            "warning: a = {a} < 2; the truncation theory assumes a large cut-off"
        )?;
    }
    let lo = ctx.cli.t_min.unwrap_or(10.0);
    let hi = ctx.cli.t_max.unwrap_or(20.0);
    let step = ctx.cli.step.unwrap_or(0.01);
    let report = repulsion_experiment(d, a, (lo, hi), step, ctx.cfg.contour)?;
    let jc = zetalab_core::spectral::JContour::new(d, ctx.cfg.contour)?;
    let rows: Vec<RepulsionOut> = report
        .rows
        .iter()
        .map(|r| RepulsionOut {
            tau: r.tau,
            theta: r.theta,
            j: r.j,
            lhs: r.lhs,
            rhs: r.rhs,
            error_bound: jc.tail_bound(r.tau),
        })
        .collect();
    write_table(ctx.out, ctx.cfg.format_or(Format::Csv), &rows)?;

    let per = &report.solutions_per_interval;
    writeln!(
        ctx.diag,
        "cosine zeros: {}, solutions: {}, per interval: {:?}",
        report.cosine_zeros.len(),
        report.solutions.len(),
        per
    )?;
    writeln!(ctx.diag, "J sign changes: {:?}", report.j_zeros)?;
    writeln!(ctx.diag, "on-line zeros of ζ_K: {:?}", report.zk_zeros)?;
    for c in &report.comparisons {
        writeln!(
            ctx.diag,
            "zero {:.6}: nearest solution {:.6}, distance {:.4}, corridor {:.4}",
            c.zero, c.nearest_solution, c.distance, c.corridor
        )?;
    }
    let thr = ctx.cfg.threshold_or(1e-6);
    let agreement = report.zero_agreement();
    check(per.iter().all(|&n| n == 1) && agreement < thr, || {
        format!("solutions per interval {per:?}, zero agreement {agreement:e}")
    })
}

fn selftest_cmd(ctx: &mut Ctx) -> Result<(), CliError> {
    let ids: Vec<u8> = match ctx.cli.only {
        Some(k) if (1..=14).contains(&k) => vec![k],
        Some(_) => return Err(CliError::usage("--only expects a criterion number 1..=14")),
        None => (1..=14).collect(),
    };
    let mut reports = Vec::new();
    for id in ids {
        let r = selftest::run_criterion(id, ctx.cfg.seed);
        writeln!(ctx.diag, "{}", r.line())?;
        reports.push(r);
    }
    write_table(ctx.out, ctx.cfg.format_or(Format::Json), &reports)?;
    let unexpected: Vec<u8> = reports.iter().filter(|r| r.blocks()).map(|r| r.id).collect();
    check(unexpected.is_empty(), || format!("criteria failed: {unexpected:?}"))
}
