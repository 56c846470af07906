use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convexgeom::{
    convex_hull, hausdorff, lemma_ws_tally, line_meets_interior_dual, line_poly_real_check, point_outside_w,
    sample_kippenhahn_curve, tangency_check, CheckStatus, ConvexOracle, FermatOracle, LemmaConfig, Membership,
    PencilOracle, ProjPoint, VerificationReport,
};
use crate::exactnum::{rat, BigRational};
use crate::groebner::dual_curve_with;
use crate::matrixpencil::{pencil_det, HermitianPencil};
use crate::mpoly::{squarefree_part, MultiPoly};
use crate::realroots::{real_singular_points, Chart, SingularPoint};

use super::{CliError, Input, JobConfig};

/// Claims about the Fermat example that are recorded, not computed.
pub const UNCHECKED_CLAIMS: [(&str, &str); 2] = [
    ("claim:complex-singular-count", "the degree-30 dual has 228 complex singular points"),
    ("claim:irreducible-dual", "the dual polynomial is irreducible over Q"),
];

fn push_claims(report: &mut VerificationReport, fermat: bool) {
    for (name, text) in UNCHECKED_CLAIMS {
        if fermat || name == "claim:irreducible-dual" {
            report.push(name, CheckStatus::Unchecked, format!("not reproduced: {text}"), vec![]);
        }
    }
}

/// Runs the full check pipeline; the report's `all_passed` decides the exit
/// status.
pub fn verify_input(input: &Input, cfg: &JobConfig) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    match input {
        Input::Pencil(p) => verify_pencil(p, cfg),
        Input::Fermat(f) => verify_oracle(f, cfg),
        Input::Poly(_) => Err(CliError::Usage("verify needs a matrix file or a preset".into())),
    }
}

fn lemma_cfg(cfg: &JobConfig) -> LemmaConfig {
    LemmaConfig {
        directions: cfg.resolution,
        tol: cfg.tol_geom,
    }
}

fn samples(oracle: &dyn ConvexOracle, cfg: &JobConfig, rng: &mut ChaCha8Rng) -> Result<Vec<[f64; 2]>, CliError> {
    // box three times the extent of W
    let mut r = 0.0f64;
    for k in 0..8 {
        let t = std::f64::consts::TAU * k as f64 / 8.0;
        r = r.max(-oracle.support([t.cos(), t.sin()])?);
    }
    let r = 3.0 * r.max(1e-3);
    Ok((0..cfg.samples).map(|_| [rng.gen_range(-r..r), rng.gen_range(-r..r)]).collect())
}

fn lemma_check(report: &mut VerificationReport, oracle: &dyn ConvexOracle, cfg: &JobConfig, rng: &mut ChaCha8Rng) -> Result<(), CliError> {
    let pts = samples(oracle, cfg, rng)?;
    let t = lemma_ws_tally(oracle, &pts, &lemma_cfg(cfg))?;
    let status = if t.mismatches.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail };
    report.push(
        "lemma-ws",
        status,
        format!("{} consistent, {} in boundary band, {} mismatched", t.consistent, t.boundary, t.mismatches.len()),
        t.mismatches,
    );
    Ok(())
}

fn dual_check(report: &mut VerificationReport, p: &MultiPoly, cfg: &JobConfig) -> Option<MultiPoly> {
    let sqf = match squarefree_part(p) {
        Ok(s) => s,
        Err(e) => {
            report.push("dual-curve", CheckStatus::Fail, "cannot take squarefree part", vec![e.to_string()]);
            return None;
        }
    };
    match dual_curve_with(&sqf, &cfg.groebner()) {
        Ok((q, st)) => {
            report.push(
                "dual-curve",
                CheckStatus::Pass,
                format!("degree {}, {} terms, {} pairs reduced", q.total_degree().unwrap_or(0), q.len(), st.pairs_reduced),
                vec![],
            );
            Some(q)
        }
        Err(e) => {
            report.push("dual-curve", CheckStatus::Fail, "Gröbner elimination did not finish", vec![e.to_string()]);
            None
        }
    }
}

fn rational_near(x: f64, denom: i64) -> BigRational {
    rat((x * denom as f64).round() as i64, denom)
}

/// Exact line checks through random rational points strictly inside S.
fn real_lines_check(
    report: &mut VerificationReport,
    oracle: &dyn ConvexOracle,
    p: &MultiPoly,
    cfg: &JobConfig,
    rng: &mut ChaCha8Rng,
) -> Result<(), CliError> {
    let lines = cfg.samples.div_ceil(2).max(1);
    let mut bad = Vec::new();
    let mut tried = 0;
    let mut done = 0;
    while done < lines && tried < 50 * lines {
        tried += 1;
        // random point of S: a random direction scaled inside the boundary
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let x = [t.cos(), t.sin()];
        let h = oracle.support(x)?;
        if h >= 0.0 {
            continue;
        }
        let frac: f64 = rng.gen_range(0.0..0.95);
        let e = [rational_near(-x[0] / h * frac, 1000), rational_near(-x[1] / h * frac, 1000)];
        let ef = [e[0].to_f64().unwrap_or(0.0), e[1].to_f64().unwrap_or(0.0)];
        if oracle.dual_margin(ef)? <= 1e-6 {
            continue;
        }
        let d = [rat(rng.gen_range(-50..=50), 17), rat(rng.gen_range(-50..=50), 17)];
        if d[0] == rat(0, 1) && d[1] == rat(0, 1) {
            continue;
        }
        done += 1;
        let r = line_poly_real_check(p, &e, &d)?;
        if !r.all_real() {
            bad.push(format!(
                "line ({}, {}) + λ({}, {}): {} real of {} distinct intersections",
                e[0],
                e[1],
                d[0],
                d[1],
                r.real_roots.len(),
                r.squarefree_degree
            ));
        }
    }
    let status = if bad.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail };
    let summary = format!("{done} lines through interior points of S, {} with nonreal intersections", bad.len());
    bad.truncate(5);
    report.push("real-lines", status, summary, bad);
    Ok(())
}

fn point_text(p: &SingularPoint) -> String {
    let v = p.projective_f64();
    format!("({:.12} : {:.12} : {:.12})", v[0], v[1], v[2])
}

/// Classifies the real singular points of q relative to W; returns the
/// affine points found outside together with their witnesses.
fn singular_check(
    report: &mut VerificationReport,
    oracle: &dyn ConvexOracle,
    q: &MultiPoly,
    cfg: &JobConfig,
) -> Result<Vec<(SingularPoint, String)>, CliError> {
    let pts = match real_singular_points(q) {
        Ok(p) => p,
        Err(e) => {
            report.push("singular-points", CheckStatus::Fail, "census did not finish", vec![e.to_string()]);
            return Ok(Vec::new());
        }
    };
    let lc = lemma_cfg(cfg);
    let mut lines = Vec::new();
    let mut outside = Vec::new();
    let (mut n_in, mut n_bd, mut n_inf) = (0, 0, 0);
    for p in &pts {
        if p.chart == Chart::Infinity {
            n_inf += 1;
            lines.push(format!("{} at infinity", point_text(p)));
            continue;
        }
        let y = p.to_f64();
        let m = point_outside_w(oracle, y, &lc)?;
        let tag = if p.isolated_flag { "isolated" } else { "on a real branch" };
        match m {
            Membership::Outside { direction, gap } => {
                let polar = ProjPoint::new([1.0, y[0], y[1]])?.polar();
                let dual = line_meets_interior_dual(oracle, &polar, &lc)?;
                let w = format!(
                    "{} {tag}: outside W, separating direction ({:.9}, {:.9}) with gap {:.3e}; polar {} interior of S (margin {:.3e})",
                    point_text(p),
                    direction[0],
                    direction[1],
                    gap,
                    if dual.meets() { "meets" } else { "misses" },
                    dual.margin()
                );
                lines.push(w.clone());
                outside.push((p.clone(), w));
            }
            Membership::Inside { .. } => {
                n_in += 1;
                lines.push(format!("{} {tag}: inside W", point_text(p)));
            }
            Membership::Boundary { .. } => {
                n_bd += 1;
                lines.push(format!("{} {tag}: on the boundary of W", point_text(p)));
            }
        }
    }
    report.push(
        "singular-points",
        CheckStatus::Pass,
        format!(
            "{} real: {} inside W, {} on its boundary, {} outside, {} at infinity",
            pts.len(),
            n_in,
            n_bd,
            outside.len(),
            n_inf
        ),
        lines,
    );
    Ok(outside)
}

fn hull_check(report: &mut VerificationReport, outside: &[(SingularPoint, String)], extra: &str) {
    if outside.is_empty() {
        report.push("hull-inclusion", CheckStatus::Pass, format!("every sampled real point of the dual curve lies in W{extra}"), vec![]);
    } else {
        report.push(
            "hull-inclusion",
            CheckStatus::Fail,
            format!("{} real point(s) of the dual curve lie outside W", outside.len()),
            outside.iter().map(|(_, w)| w.clone()).collect(),
        );
    }
}

fn verify_pencil(pencil: &HermitianPencil, cfg: &JobConfig) -> Result<VerificationReport, CliError> {
    let mut report = VerificationReport::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p = pencil_det(pencil)?;
    report.push("determinant", CheckStatus::Pass, format!("p = {p}"), vec![]);
    let oracle = PencilOracle {
        pencil: pencil.clone(),
        eigen: cfg.eigen(),
    };
    if oracle.is_degenerate()? {
        report.push(
            "degeneracy",
            CheckStatus::Degenerate,
            "W has empty interior; the remaining checks do not apply",
            vec![],
        );
        return Ok(report);
    }
    let q = dual_check(&mut report, &p, cfg);

    let centered = PencilOracle {
        pencil: pencil.centered(),
        eigen: cfg.eigen(),
    };
    lemma_check(&mut report, &centered, cfg, &mut rng)?;
    real_lines_check(&mut report, &centered, &pencil_det(&centered.pencil)?, cfg, &mut rng)?;

    let outside = match &q {
        Some(q) => singular_check(&mut report, &oracle, q, cfg)?,
        None => Vec::new(),
    };
    let cloud = sample_kippenhahn_curve(pencil, cfg.resolution, &cfg.eigen())?;
    if let Some(q) = &q {
        let norm = q.l1_norm_f64();
        let worst = cloud
            .points
            .iter()
            .map(|c| q.eval_f64(&[1.0, c.y[0], c.y[1]]).abs() / norm)
            .fold(0.0, f64::max);
        let status = if worst <= 1e-6 { CheckStatus::Pass } else { CheckStatus::Fail };
        report.push(
            "cloud-on-dual",
            status,
            format!("max |q(1,y)|/|q|_1 over {} cloud points = {worst:.3e}", cloud.len()),
            if status == CheckStatus::Fail { vec![format!("largest residual {worst:e}")] } else { vec![] },
        );
    }
    hull_check(&mut report, &outside, &format!(" ({} Kippenhahn samples are numerical values)", cloud.len()));

    let boundary: Vec<[f64; 2]> = pencil
        .sample_numrange_boundary_with(cfg.resolution, &cfg.eigen())?
        .iter()
        .map(|s| s.point)
        .collect();
    let hull = convex_hull(&cloud.coords());
    let d = hausdorff(&hull, &boundary)?;
    let diam = hull
        .iter()
        .flat_map(|a| hull.iter().map(move |b| (a[0] - b[0]).hypot(a[1] - b[1])))
        .fold(0.0, f64::max);
    let tol = diam * 50.0 / (cfg.resolution as f64).powi(2) + 100.0 * cfg.tol_geom;
    let status = if d <= tol { CheckStatus::Pass } else { CheckStatus::Fail };
    report.push(
        "hull-hausdorff",
        status,
        format!("Hausdorff(hull of Kippenhahn cloud, boundary of W) = {d:.3e}, tolerance {tol:.3e}"),
        if status == CheckStatus::Fail { vec![format!("distance {d:e} at resolution {}", cfg.resolution)] } else { vec![] },
    );
    push_claims(&mut report, false);
    Ok(report)
}

fn verify_oracle(f: &FermatOracle, cfg: &JobConfig) -> Result<VerificationReport, CliError> {
    let mut report = VerificationReport::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p = f.curve()?.expect("Fermat curve");
    report.push("curve", CheckStatus::Pass, format!("p = {p} (support-function oracle, no matrix)"), vec![]);
    let q = dual_check(&mut report, &p, cfg);
    lemma_check(&mut report, f, cfg, &mut rng)?;
    real_lines_check(&mut report, f, &p, cfg, &mut rng)?;
    let outside = match &q {
        Some(q) => singular_check(&mut report, f, q, cfg)?,
        None => Vec::new(),
    };
    hull_check(&mut report, &outside, "");

    // each outside point is the pole of a line tangent to p at complex points
    let eps = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(40));
    let mut lines = Vec::new();
    let mut ok = true;
    for (sp, _) in &outside {
        let y = sp.enclosure(&eps);
        match tangency_check(&p, &y) {
            Ok(ws) => {
                let complex = ws.iter().filter(|w| w.affine.as_ref().map_or(false, |a| !a[0].im.contains_zero())).count();
                ok &= complex == 2 && ws.len() == 2;
                for w in &ws {
                    if let Some(a) = &w.affine {
                        lines.push(format!("pole {}: contact (1 : {} : {})", point_text(sp), a[0], a[1]));
                    }
                }
            }
            Err(e) => {
                ok = false;
                lines.push(format!("pole {}: {e}", point_text(sp)));
            }
        }
    }
    if !outside.is_empty() {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        report.push(
            "tangency",
            status,
            format!("polars of the {} outside points touch p at complex-conjugate pairs", outside.len()),
            lines,
        );
    }
    push_claims(&mut report, true);
    Ok(report)
}
