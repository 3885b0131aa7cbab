//! Acceptance gate: nine criteria, one PASS/FAIL line each. Exits non-zero
//! if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use hconv::algebra::{
    crude_constant_compare, spectral_radius_trace, young_conv_report, young_trilinear_report, YoungExponents,
};
use hconv::bench::{bench, bench_inputs, direct_time_ratios, REPEATS};
use hconv::samples::mixture_batch;
use hconv::solvers::{
    fredholm_bound_report, fredholm_residual_report, gaussian_kernel, heat_estimate_report, solve_fredholm,
    solve_heat_convolution, solve_heat_spectral, FredholmProblem, HeatProblem,
};
use hconv::wiener_levy::{eta_identity_check, neumann_check, neumann_terms_for, wiener_levy_eta};
use hconv::*;

const SEED: u64 = 20_240_917;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(checks: &[(bool, String)]) -> Self {
        Self {
            pass: checks.iter().all(|(ok, _)| *ok),
            detail: checks
                .iter()
                .map(|(ok, msg)| format!("{}{msg}", if *ok { "" } else { "!! " }))
                .collect::<Vec<_>>()
                .join("; "),
        }
    }
}

fn check(ok: bool, msg: String) -> (bool, String) {
    (ok, msg)
}

fn hartley() -> TransformParams {
    TransformParams::new(1.0, 1.0).unwrap()
}

fn grid() -> Grid {
    Grid::new(20.0, 2049).unwrap()
}

fn gauss2(g: Grid) -> SampledFunction {
    SampledFunction::from_fn(g, |x| 2.0 * (-x * x).exp()).unwrap()
}

fn seeded(stream: u64, count: usize, g: Grid) -> Vec<SampledFunction> {
    mixture_batch(SEED + stream, count).iter().map(|m| m.sample(g).unwrap()).collect()
}

fn worst<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> (usize, f64) {
    reports.into_iter().fold((0, f64::INFINITY), |(fails, margin), r| {
        (fails + usize::from(!r.pass), margin.min(r.margin))
    })
}

fn gaussian_transform() -> Outcome {
    let start = Instant::now();
    let g = grid();
    let gt = gaussian_kernel(0.25, 1.0, g).unwrap();
    let hf = h_forward_default(&gt, &hartley());
    let elapsed = start.elapsed().as_secs_f64();
    let err = g
        .nodes()
        .iter()
        .zip(hf.values())
        .map(|(y, v)| (v - 2f64.sqrt() * (-y * y / 4.0).exp()).abs())
        .fold(0.0, f64::max);
    Outcome::new(&[
        check(err <= 1e-6, format!("sup err {err:.2e} <= 1e-6")),
        check(elapsed < 1.0, format!("{elapsed:.3} s < 1 s")),
    ])
}

fn factorization() -> Outcome {
    let start = Instant::now();
    let g = grid();
    let fs = seeded(1, 50, g);
    let gs = seeded(2, 50, g);
    let params = [(1.0, 1.0), (1.0, -2.0), (2.0, 1.0)];
    let reports: Vec<_> = fs
        .iter()
        .zip(&gs)
        .enumerate()
        .map(|(i, (f, h))| {
            let (a, b) = params[i % params.len()];
            factorization_check(f, h, &TransformParams::new(a, b).unwrap(), 1e-5).unwrap()
        })
        .collect();
    let max = reports.iter().map(|r| r.measured).fold(0.0, f64::max);
    let elapsed = start.elapsed().as_secs_f64();
    Outcome::new(&[
        check(reports.iter().all(|r| r.pass), format!("50 pairs, max discrepancy {max:.2e} <= 1e-5")),
        check(elapsed < 60.0, format!("{elapsed:.2} s < 60 s")),
    ])
}

fn young() -> Outcome {
    let g = grid();
    let p = hartley();
    let fs = seeded(3, 50, g);
    let gs = seeded(4, 50, g);
    let hs = seeded(5, 50, g);
    let sets = [
        YoungExponents::convolution(1.0, 1.0, 1.0).unwrap(),
        YoungExponents::convolution(4.0 / 3.0, 4.0 / 3.0, 2.0).unwrap(),
        YoungExponents::convolution(2.0, 2.0, f64::INFINITY).unwrap(),
    ];
    let tri = YoungExponents::trilinear(1.5, 1.5, 1.5).unwrap();
    let mut reports = Vec::new();
    for ((f, h), k) in fs.iter().zip(&gs).zip(&hs) {
        let conv = convolve_direct(f, h, &p).unwrap();
        for e in &sets {
            reports.push(young_conv_report(&conv, f, h, e, &p).unwrap());
        }
        reports.push(young_trilinear_report(&conv, f, h, k, &tri, &p).unwrap());
    }
    let (fails, margin) = worst(&reports);
    let mut crude = Vec::new();
    for (a, b) in [(1.0, 2.0), (2.0, 1.0), (1.0, -3.0)] {
        for r in [1.0, 2.0, 3.0] {
            crude.push(crude_constant_compare(&TransformParams::strict(a, b).unwrap(), r).unwrap());
        }
    }
    let (crude_fails, _) = worst(&crude);
    Outcome::new(&[
        check(fails == 0, format!("{} inequality checks, {fails} violations, min margin {margin:.2e}", reports.len())),
        check(crude_fails == 0, format!("sharp <= crude on {} (a,b,r) cases", crude.len())),
    ])
}

fn gelfand_radius() -> Outcome {
    let start = Instant::now();
    let trace = spectral_radius_trace(&gauss2(grid()), &hartley(), 20).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let sqrt2 = 2f64.sqrt();
    let gap = (trace.root(20) - sqrt2).abs() / sqrt2;
    let dist: Vec<f64> = trace.roots.iter().map(|r| (r - sqrt2).abs()).collect();
    let monotone = dist[4..].windows(2).all(|w| w[1] < w[0]);
    Outcome::new(&[
        check(gap <= 0.05, format!("|root20 - √2|/√2 = {gap:.4} <= 0.05")),
        check(monotone, "monotone decrease for k >= 5".into()),
        check(elapsed < 10.0, format!("{elapsed:.2} s < 10 s")),
    ])
}

fn wiener_levy() -> Outcome {
    let g = grid();
    let p = hartley();
    let gen = gauss2(g).scale(0.1);
    let eta = wiener_levy_eta(&gen, &p).unwrap();
    let identity = eta_identity_check(&gen, &eta.function, &p, 1e-8).unwrap();
    let s = h_forward_default(&gen, &p).sup_norm();
    let terms = neumann_terms_for(s, 1e-4).unwrap();
    let neumann = neumann_check(&gen, &eta.function, &p, terms).unwrap();
    let singular = gauss2(g).scale(-1.0 / 2f64.sqrt());
    let rejected = matches!(wiener_levy_eta(&singular, &p), Err(Error::SingularSymbol { .. }));
    Outcome::new(&[
        check(identity.pass, format!("identity residual {:.2e} <= 1e-8", identity.measured)),
        check(
            neumann.pass && neumann.measured <= 1e-4,
            format!("Neumann M={terms} gap {:.2e} <= 1e-4", neumann.measured),
        ),
        check(rejected, "Hg(0) = -1 rejected with SingularSymbol".into()),
    ])
}

fn fredholm() -> Outcome {
    let g = grid();
    let prob = FredholmProblem::new(gauss2(g).scale(0.1), gauss2(g), hartley()).unwrap();
    let sol = solve_fredholm(&prob).unwrap();
    let residual = fredholm_residual_report(&prob, &sol.f, 1e-6).unwrap();
    let bound = fredholm_bound_report(&prob, &sol).unwrap();
    Outcome::new(&[
        check(residual.pass, format!("relative L1 residual {:.2e} <= 1e-6", residual.measured)),
        check(bound.pass, format!("‖f‖₁ = {:.4} <= {:.4}", bound.measured, bound.bound)),
    ])
}

fn heat() -> Outcome {
    let g = grid();
    let p = hartley();
    let prob = HeatProblem::new(1.0, 0.75, gauss2(g), p).unwrap();
    let spectral = solve_heat_spectral(&prob).unwrap();
    let conv = solve_heat_convolution(&prob).unwrap();
    let agree = spectral.sub(&conv).unwrap().sup_norm();
    let closed = SampledFunction::from_fn(g, |x| (-x * x / 4.0).exp()).unwrap();
    let closed_err = spectral.sub(&closed).unwrap().sup_norm();
    let wide = Grid::new(200.0, 8001).unwrap();
    let norm_err = [0.1, 1.0, 10.0]
        .iter()
        .map(|&t| (gaussian_kernel(t, 1.0, wide).unwrap().lp_norm(1.0).unwrap() - 2.0 * PI.sqrt()).abs())
        .fold(0.0, f64::max);
    let case_i = heat_estimate_report(&prob, 1.0, 1.0, 1.0).unwrap();
    let a0 = HeatProblem::new(1.0, 0.75, gauss2(g), TransformParams::new(0.0, 1.0).unwrap()).unwrap();
    let rejected = matches!(solve_heat_convolution(&a0), Err(Error::InvalidParams(_)));
    Outcome::new(&[
        check(agree <= 1e-5, format!("spectral vs convolution {agree:.2e} <= 1e-5")),
        check(closed_err <= 2e-5, format!("closed form {closed_err:.2e} <= 2e-5")),
        check(norm_err <= 1e-6, format!("‖g_t‖₁ err {norm_err:.2e} <= 1e-6")),
        check(case_i.pass, format!("case (i) {:.4} <= {:.4}", case_i.measured, case_i.bound)),
        check(rejected, "a = 0 rejected".into()),
    ])
}

fn cross_method() -> Outcome {
    let p = hartley();
    let mut checks = Vec::new();
    // Warm-up so first-touch costs stay out of the smallest timing.
    let warm = Grid::new(20.0, 257).unwrap();
    let (f, h) = bench_inputs(warm).unwrap();
    convolve_direct(&f, &h, &p).unwrap();
    let rows = bench(&p, 20.0, &[257, 1025, 4097], REPEATS).unwrap();
    for r in &rows {
        checks.push(check(r.max_discrepancy <= 1e-6, format!("N={} gap {:.2e}", r.n, r.max_discrepancy)));
    }
    for (w, ratio) in rows.windows(2).zip(direct_time_ratios(&rows)) {
        checks.push(check(
            (8.0..=32.0).contains(&ratio),
            format!("direct time ratio {}→{} = {ratio:.1} in [8, 32]", w[0].n, w[1].n),
        ));
    }
    Outcome::new(&checks)
}

fn lemmas() -> Outcome {
    let g = grid();
    let p = hartley();
    let fs = seeded(6, 50, g);
    let v = g.node_at_offset((1.5 / g.spacing()).round() as isize);
    let mut kernel = Vec::new();
    let mut rl = Vec::new();
    let mut round_trip = 0.0f64;
    for f in &fs {
        for q in [1.0, 2.0] {
            kernel.push(kernel_lq_estimate_check(f, q, v, &p).unwrap());
        }
        rl.push(riemann_lebesgue_check(f, &p));
        let back = h_inverse_default(&h_forward_default(f, &p), &p).unwrap();
        round_trip = round_trip.max(back.sub(f).unwrap().sup_norm());
    }
    let (kf, _) = worst(&kernel);
    let (rf, _) = worst(&rl);
    Outcome::new(&[
        check(kf == 0, format!("kernel estimate {} checks, {kf} violations", kernel.len())),
        check(rf == 0, format!("Riemann–Lebesgue 50 checks, {rf} violations")),
        check(round_trip <= 5e-5, format!("round trip {round_trip:.2e} <= 5e-5")),
    ])
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Gaussian transform identity", gaussian_transform),
        ("factorization on 50 seeded pairs", factorization),
        ("Young inequalities and constants", young),
        ("spectral radius trace", gelfand_radius),
        ("Wiener–Lévy inversion", wiener_levy),
        ("Fredholm solve", fredholm),
        ("heat equation", heat),
        ("direct vs spectral convolution", cross_method),
        ("kernel estimate, Riemann–Lebesgue bound, round trip", lemmas),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        failures += usize::from(!out.pass);
        println!(
            "criterion {} [{}] {name} ({:.2} s): {}",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
