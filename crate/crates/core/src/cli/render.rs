use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use super::{
    build_field, compute_err, parse_poly, BoundsArgs, BoundsCommand, Cli, CliError, Command,
    FieldArgs, Format, MomentsArgs, MomentsCommand, Route,
};
use crate::bounds::{self, BoundReport};
use crate::ffield::Field;
use crate::moments;
use crate::northcott::{self, ComputeOptions, EnumerationScope};
use crate::polyring::{factor_with_seed, irreducible_table, is_squarefree, quadratic_character};
use crate::zetafn::{
    central_value_is_zero, check_weil_package, class_number, lpoly_from_charsum,
    lpoly_via_splitting, prime_counts_from_lpoly, zeta_special_value, CurveModel, LPolynomial,
};

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(
    out: &mut dyn Write,
    header: &[&str],
    rows: &[T],
) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    let io = |e: csv::Error| CliError::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.serialize(r).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn json_only(cli: &Cli, what: &str) -> Result<(), CliError> {
    match cli.format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError::Usage(format!(
            "{what} has no CSV output; use --format json"
        ))),
    }
}

fn curve_from(field: &FieldArgs, d: &str) -> Result<CurveModel, CliError> {
    let f = build_field(field)?;
    CurveModel::new(parse_poly(&f, "--D", d)?).map_err(compute_err)
}

fn lpoly_of(curve: &CurveModel, route: Route, budget: u64) -> Result<LPolynomial, CliError> {
    let split = || -> Result<LPolynomial, CliError> {
        let table = irreducible_table(curve.field(), curve.genus(), budget).map_err(compute_err)?;
        lpoly_via_splitting(curve, &table).map_err(compute_err)
    };
    match route {
        Route::Splitting => split(),
        Route::Charsum => lpoly_from_charsum(curve, budget).map_err(compute_err),
        Route::Both => {
            let a = split()?;
            let b = lpoly_from_charsum(curve, budget).map_err(compute_err)?;
            if a != b {
                return Err(CliError::Compute {
                    code: "RouteMismatch".into(),
                    message: "splitting and character-sum routes disagree".into(),
                });
            }
            Ok(a)
        }
    }
}

pub(super) fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Field(args) => {
            json_only(cli, "field")?;
            let f = build_field(args)?;
            write_json(
                out,
                &json!({ "p": f.p(), "e": f.e(), "q": f.q(), "modulus": f.modulus(), "odd": f.is_odd() }),
            )
        }
        Command::Poly { field, d, chi } => {
            json_only(cli, "poly")?;
            let f = build_field(field)?;
            let p = parse_poly(&f, "--D", d)?;
            let mut obj = json!({ "poly": p, "degree": p.degree(), "monic": p.is_monic() });
            if !p.is_zero() {
                let fac = factor_with_seed(&p, cli.seed).map_err(compute_err)?;
                let factors: Vec<_> = fac
                    .factors
                    .iter()
                    .map(|(g, m)| json!({ "factor": g, "multiplicity": m }))
                    .collect();
                obj["squarefree"] = json!(is_squarefree(&p).map_err(compute_err)?);
                obj["irreducible"] = json!(fac.is_irreducible());
                obj["factorization"] =
                    json!({ "unit": f.display_elem(fac.unit.value()), "factors": factors });
            }
            if let Some(text) = chi {
                let g = parse_poly(&f, "--chi", text)?;
                obj["chi"] = json!(quadratic_character(&p, &g).map_err(compute_err)?);
            }
            write_json(out, &obj)
        }
        Command::Lpoly { field, d, route } => {
            json_only(cli, "lpoly")?;
            let curve = curve_from(field, d)?;
            let l = lpoly_of(&curve, *route, cli.budget)?;
            let weil = check_weil_package(&l);
            let counts = prime_counts_from_lpoly(&l, curve.genus().max(1));
            write_json(
                out,
                &json!({
                    "q": curve.q(),
                    "D": curve.D(),
                    "genus": curve.genus(),
                    "L": l.coeffs(),
                    "h": class_number(&l).map_err(compute_err)?,
                    "prime_counts": counts.as_slice(),
                    "funceq_ok": weil.funceq,
                    "rh_ok": weil.rh,
                    "max_root_deviation": weil.max_root_deviation,
                    "central_zero": central_value_is_zero(&l),
                }),
            )
        }
        Command::Zeta { field, d, s } => {
            json_only(cli, "zeta")?;
            let curve = curve_from(field, d)?;
            let l = lpoly_of(&curve, Route::Splitting, cli.budget)?;
            let v = zeta_special_value(&l, *s);
            write_json(
                out,
                &json!({
                    "q": curve.q(),
                    "D": curve.D(),
                    "s": v.at,
                    "order": v.order,
                    "leading": v.leading,
                    "abs_leading": v.leading.norm(),
                    "order_confidence": v.confidence,
                }),
            )
        }
        Command::Classify { q, s } => {
            json_only(cli, "classify")?;
            write_json(out, &bounds::classify_point(*q, *s).map_err(compute_err)?)
        }
        Command::Bounds(args) => run_bounds(cli, args, out),
        Command::Northcott {
            field,
            s,
            b,
            genus_min,
            genus_max,
            dedupe,
            plain_central_value,
        } => {
            let f = build_field(field)?;
            let scope = EnumerationScope::new(&f, *genus_min, *genus_max)
                .with_dedupe((*dedupe).into())
                .with_budget(cli.budget);
            let opts = ComputeOptions {
                plain_central_value: *plain_central_value,
            };
            let report = northcott::compute_S(*s, *b, &scope, opts).map_err(compute_err)?;
            match cli.format {
                Format::Json => write_json(out, &report),
                Format::Csv => write_csv(
                    out,
                    &["D", "genus", "h", "order", "abs_leading", "in_S"],
                    &report.rows,
                ),
            }
        }
        Command::CentralZeros { field, max_deg } => {
            let f = build_field(field)?;
            let report =
                northcott::central_zero_search(&f, *max_deg, cli.budget).map_err(compute_err)?;
            match cli.format {
                Format::Json => write_json(out, &report),
                Format::Csv => {
                    let rows: Vec<(String, &str, &str)> = report
                        .witnesses
                        .iter()
                        .map(|w| (w.d.to_string(), "exact_zero", "central_zero"))
                        .collect();
                    write_csv(out, &["D", "value", "property"], &rows)
                }
            }
        }
        Command::Moments(args) => run_moments(cli, args, out),
    }
}

fn run_moments(cli: &Cli, args: &MomentsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    json_only(cli, "moments")?;
    match &args.command {
        Some(MomentsCommand::VerifyAfe { field, d, alpha }) => {
            let curve = curve_from(field, d)?;
            let (lhs, rhs) =
                moments::approx_funceq_eval(&curve, *alpha, cli.budget).map_err(compute_err)?;
            write_json(
                out,
                &json!({
                    "q": curve.q(),
                    "D": curve.D(),
                    "alpha": alpha,
                    "lhs": lhs,
                    "rhs": rhs,
                    "abs_diff": (lhs - rhs).abs(),
                    "ok": (lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()),
                }),
            )
        }
        Some(MomentsCommand::CAlpha { q, alpha, trunc }) => {
            let e = moments::c_alpha_euler_product(*q, *alpha, *trunc).map_err(compute_err)?;
            write_json(out, &json!({ "q": q, "alpha": alpha, "c_alpha": e }))
        }
        Some(MomentsCommand::Predict {
            q,
            g,
            alpha1,
            alpha2,
            trunc,
        }) => {
            let v = moments::predicted_shifted_moment(*q, *g, *alpha1, *alpha2, *trunc)
                .map_err(compute_err)?;
            write_json(
                out,
                &json!({ "q": q, "g": g, "alpha1": alpha1, "alpha2": alpha2, "truncation_deg": trunc, "predicted": v }),
            )
        }
        None => {
            let missing = |flag: &str| CliError::Usage(format!("moments needs {flag}"));
            let q = args.q.ok_or_else(|| missing("--q"))?;
            let g = args.g.ok_or_else(|| missing("--g"))?;
            let alpha = args.alpha.ok_or_else(|| missing("--alpha"))?;
            let field: Field = build_field(&FieldArgs {
                q,
                modulus: args.modulus.clone(),
            })?;
            let r = moments::second_moment_exhaustive(&field, g, alpha, args.trunc, cli.budget)
                .map_err(compute_err)?;
            write_json(out, &r)
        }
    }
}

#[derive(Debug, Serialize)]
struct BoundRow {
    calculator: String,
    q: u64,
    g: Option<usize>,
    sigma: Option<f64>,
    #[serde(rename = "B")]
    b: Option<f64>,
    value: Option<f64>,
    log_value: Option<f64>,
    log_scale: bool,
    exact: Option<String>,
    note: Option<String>,
}

impl BoundRow {
    fn plain(
        name: &str,
        q: u64,
        g: Option<usize>,
        sigma: Option<f64>,
        b: Option<f64>,
        v: f64,
    ) -> Self {
        Self {
            calculator: name.into(),
            q,
            g,
            sigma,
            b,
            value: Some(v),
            log_value: Some(v.ln()),
            log_scale: false,
            exact: None,
            note: None,
        }
    }

    fn report(
        r: BoundReport,
        q: u64,
        g: Option<usize>,
        sigma: Option<f64>,
        b: Option<f64>,
    ) -> Self {
        Self {
            calculator: r.name,
            q,
            g,
            sigma,
            b,
            value: r.value,
            log_value: Some(r.log_value),
            log_scale: r.log_scale,
            exact: r.exact,
            note: r.note,
        }
    }
}

fn bounds_grid(args: &BoundsArgs) -> Vec<BoundRow> {
    let mut rows = Vec::new();
    for &q in &args.q {
        let qf = q as f64;
        for &g in &args.g {
            rows.push(BoundRow::report(
                bounds::couveignes_count_bound(q, g, None, args.big_q),
                q,
                Some(g),
                None,
                None,
            ));
            if g >= 1 {
                for r in bounds::misc_count_bounds(q, g, args.c1, args.c2).expect("q validated") {
                    rows.push(BoundRow::report(r, q, Some(g), None, None));
                }
            }
            for l in 1..=3 {
                let mut row = BoundRow::plain(
                    "a_ell_upper",
                    q,
                    Some(g),
                    None,
                    None,
                    bounds::a_ell_upper(q, g, l),
                );
                row.note = Some(format!("ell = {l}"));
                rows.push(row);
            }
            for &sigma in &args.sigma {
                let u = Complex64::new(qf.powf(-sigma), 0.0);
                let (lo, hi) = bounds::hasse_envelope(q, g, u);
                rows.push(BoundRow::plain(
                    "hasse_lower",
                    q,
                    Some(g),
                    Some(sigma),
                    None,
                    lo,
                ));
                rows.push(BoundRow::plain(
                    "hasse_upper",
                    q,
                    Some(g),
                    Some(sigma),
                    None,
                    hi,
                ));
                if let Ok(v) = bounds::zeta_sigma_upper(q, g, sigma) {
                    rows.push(BoundRow::plain(
                        "zeta_sigma_upper",
                        q,
                        Some(g),
                        Some(sigma),
                        None,
                        v,
                    ));
                }
            }
        }
        for &sigma in &args.sigma {
            let s = Complex64::new(sigma, 0.0);
            if let Ok(r) = bounds::right_threshold_b(q, sigma) {
                rows.push(BoundRow::report(r, q, None, Some(sigma), None));
            }
            if q % 4 == 1 && sigma > 0.5 {
                if let Ok(v) = bounds::moment_threshold_b(q, s, moments::DEFAULT_TRUNCATION) {
                    rows.push(BoundRow::plain(
                        "moment_threshold_B",
                        q,
                        None,
                        Some(sigma),
                        None,
                        v,
                    ));
                }
            }
            for &b in &args.b {
                if let Ok(cap) = bounds::genus_cap(q, s, b) {
                    rows.push(BoundRow::plain(
                        "genus_cap",
                        q,
                        None,
                        Some(sigma),
                        Some(b),
                        cap as f64,
                    ));
                }
                if let Ok(r) = bounds::size_bound_s(q, s, b, args.big_q) {
                    rows.push(BoundRow::report(r, q, None, Some(sigma), Some(b)));
                }
            }
        }
    }
    rows
}

fn run_bounds(cli: &Cli, args: &BoundsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let Some(cmd) = &args.command else {
        if !args.list {
            return Err(CliError::Usage(
                "bounds needs --list or a subcommand".into(),
            ));
        }
        return write_csv(
            out,
            &[
                "calculator",
                "q",
                "g",
                "sigma",
                "B",
                "value",
                "log_value",
                "log_scale",
                "exact",
                "note",
            ],
            &bounds_grid(args),
        );
    };
    json_only(cli, "bounds")?;
    match cmd {
        BoundsCommand::RightThreshold { q, sigma } => write_json(
            out,
            &bounds::right_threshold_b(*q, *sigma).map_err(compute_err)?,
        ),
        BoundsCommand::GenusCap { q, s, b } => {
            let cap = bounds::genus_cap(*q, *s, *b).map_err(compute_err)?;
            write_json(out, &json!({ "q": q, "s": s, "B": b, "genus_cap": cap }))
        }
        BoundsCommand::Hasse { q, g, u } => {
            let (lower, upper) = bounds::hasse_envelope(*q, *g, *u);
            write_json(
                out,
                &json!({ "q": q, "g": g, "u": u, "lower": lower, "upper": upper }),
            )
        }
        BoundsCommand::Size { q, s, b, big_q } => write_json(
            out,
            &bounds::size_bound_s(*q, *s, *b, *big_q).map_err(compute_err)?,
        ),
        BoundsCommand::MomentThreshold { q, s, trunc } => {
            let v = bounds::moment_threshold_b(*q, *s, *trunc).map_err(compute_err)?;
            write_json(
                out,
                &json!({ "q": q, "s": s, "truncation_deg": trunc, "threshold_B": v }),
            )
        }
    }
}
