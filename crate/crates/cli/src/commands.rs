use std::fs;
use std::ops::RangeInclusive;

use dgla_core::{obstruction_suite, CentralIdeal, Dgla};
use exact_algebra::json::PolynomialJson;
use exact_algebra::{qi, Monomial, Polynomial};
use fukaya_table::{audit, checksum, cross_check, fragment_report, FukayaProductTable, Identification, TABLE_SHA256};
use hochschild::{ainf_residual, AInfStructure, Strict};
use matrix_factorization::{gamma_from_w, superpotential, MFData};
use polyvector::{normalize, PolyvectorError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use toric_fan::toric_suite;
use transfer::{diagonal_component, diagonal_polynomial, hypothesis_check, Transferred, CUBIC};

use crate::config::{Command, RunConfig};
use crate::report::{clause, CliError, Report};

pub const QUADRATIC: &str = "quadratic product";
pub const RELATIONS: &str = "A-infinity relations";
pub const NORMALIZED: &str = "normalization";
pub const SHAPE: &str = "diffeomorphism shape";

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn require_genus(g: u32, min: u32) -> Result<(), CliError> {
    if g < min {
        return Err(CliError::Input(format!("genus must be at least {min}, got {g}")));
    }
    Ok(())
}

/// The file named by `--input` with its checksum.
fn read_input(cfg: &RunConfig) -> Result<Option<(String, String, String)>, CliError> {
    let Some(path) = &cfg.input else { return Ok(None) };
    let bytes = fs::read(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    let sha = checksum(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{} is not UTF-8", path.display())))?;
    Ok(Some((name, sha, text)))
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        Command::Transfer => cmd_transfer(cfg),
        Command::Normalize => cmd_normalize(cfg),
        Command::Fan => cmd_fan(cfg),
        Command::Fukaya => cmd_fukaya(cfg),
        Command::Dgla => cmd_dgla(cfg),
    }
}

/// `samples` seeded basis tuples per arity.
pub fn sample_tuples(seed: u64, arities: RangeInclusive<usize>, samples: usize) -> Vec<Vec<u16>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for d in arities {
        for _ in 0..samples {
            out.push((0..d).map(|_| rng.gen_range(0..8u16)).collect());
        }
    }
    out
}

/// Whether the A∞ residual vanishes on each tuple. Tuple `i` goes to worker
/// `i mod workers`; each worker owns its own cache.
pub fn residual_sweep(mf: &MFData, tuples: &[Vec<u16>], workers: usize) -> Vec<bool> {
    let workers = workers.max(1);
    let mut out = vec![false; tuples.len()];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    let mu = Transferred::new(mf.clone());
                    (w..tuples.len())
                        .step_by(workers)
                        .map(|i| (i, ainf_residual(&mu, &tuples[i]).is_zero()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, ok) in h.join().expect("worker finished") {
                out[i] = ok;
            }
        }
    });
    out
}

/// Transfer the product to `Λ(V)` and check the hypotheses that fix it up
/// to equivalence, plus the A∞ relations on seeded tuples.
pub fn cmd_transfer(cfg: &RunConfig) -> Result<Report, CliError> {
    let g = cfg.genus;
    require_genus(g, 2)?;
    let max = cfg.max_arity();
    if max < 2 {
        return Err(CliError::Input(format!("max arity must be at least 2, got {max}")));
    }
    let w = superpotential(g);
    let mut mf = gamma_from_w(&w).map_err(input_error)?;
    mf.genus = Some(g);
    let mu = Transferred::new(mf.clone());
    let samples = cfg.samples();

    let strict = Strict { n: 3 };
    let pairs: Vec<[u16; 2]> = (0..8u16).flat_map(|a| (0..8u16).map(move |b| [a, b])).collect();
    let bad = pairs.iter().filter(|p| mu.mu(&p[..]) != strict.mu(&p[..])).count();
    let mut clauses =
        vec![clause(QUADRATIC, bad == 0, format!("{} pairs, {bad} differ from the wedge product", pairs.len()))];

    let top_arity = 2 * g as usize + 1;
    let partial = max < top_arity;
    let mut lambda = None;
    if !partial {
        let rep = hypothesis_check(mf.clone(), cfg.seed, samples, max);
        lambda = rep.lambda;
        clauses.extend(rep.clauses);
    } else if max >= 3 {
        let cubic = diagonal_polynomial(3, &diagonal_component(&mu, g, 3, 0));
        let want = Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1])]);
        clauses.push(clause(
            CUBIC,
            cubic.as_ref() == Some(&want),
            cubic.map_or("non-scalar output".into(), |p| p.render()),
        ));
    }

    let mut residuals = Vec::new();
    if max >= 3 {
        let tuples = sample_tuples(cfg.seed.wrapping_add(1), 3..=max, samples);
        let ok = residual_sweep(&mf, &tuples, cfg.workers);
        let mut failures = Vec::new();
        for d in 3..=max {
            let idx: Vec<usize> = (0..tuples.len()).filter(|&i| tuples[i].len() == d).collect();
            let nonzero: Vec<usize> = idx.iter().copied().filter(|&i| !ok[i]).collect();
            failures.extend(nonzero.iter().take(3).map(|&i| format!("{:?}", tuples[i])));
            residuals.push(json!({ "arity": d, "tuples": idx.len(), "nonzero": nonzero.len() }));
        }
        let total_bad = ok.iter().filter(|&&b| !b).count();
        let detail = if total_bad == 0 {
            format!("arities 3..={max}, {samples} tuples each, all residuals zero")
        } else {
            format!("arities 3..={max}, {total_bad} nonzero residuals, e.g. {}", failures.join(" "))
        };
        clauses.push(clause(RELATIONS, total_bad == 0, detail));
    }

    let detail_of = |name: &str| clauses.iter().find(|c| c.name == name).map(|c| c.detail.clone());
    let cubic = detail_of(CUBIC);
    let top = detail_of(transfer::TOP);
    let mut summary = vec![format!("W = {}", w.render())];
    summary.extend(mf.gamma.iter().enumerate().map(|(k, p)| format!("g{} = {}", k + 1, p.render())));
    if let Some(c) = &cubic {
        summary.push(format!("hkr diagonal of mu_0^3: {c}"));
    }
    if let Some(t) = &top {
        summary.push(format!("hkr diagonal of mu_1^{top_arity}: {t}"));
    }
    if let Some(l) = &lambda {
        summary.push(format!("lambda = {l}"));
    }
    if partial {
        summary.push(format!("partial report: arities up to {max}, below {top_arity}"));
    }
    let data = json!({
        "superpotential": w.render(),
        "gamma": mf.gamma.iter().map(|p| p.render()).collect::<Vec<_>>(),
        "partial": partial,
        "diagonals": { "cubic": cubic, "top": top },
        "lambda": lambda,
        "residuals": residuals,
    });
    Ok(Report::new(cfg.echo(), clauses, data).with_summary(summary))
}

/// Terms of `α⁰ − W` below `F_{2g+2}` other than the allowed `λ` term.
fn hypothesis_violations(alpha0: &Polynomial, g: u32, order: u32) -> Vec<String> {
    let e = (2 * g + 1) / 3;
    let lam = (g % 3 == 1).then(|| Monomial(vec![e, e, e]));
    alpha0
        .sub(&superpotential(g))
        .filter(|m| m.degree() < (2 * g + 2).min(order) && Some(m) != lam.as_ref())
        .terms()
        .map(|(m, c)| format!("{} z^{:?}", exact_algebra::rational_string(c), m.0))
        .collect()
}

/// Find a coordinate change carrying `α⁰` (default `W`) to `W` modulo the
/// truncation order.
pub fn cmd_normalize(cfg: &RunConfig) -> Result<Report, CliError> {
    let g = cfg.genus;
    require_genus(g, 2)?;
    let order = cfg.truncation_order();
    let input = read_input(cfg)?;
    let alpha0 = match &input {
        None => superpotential(g),
        Some((name, _, text)) => {
            let j: PolynomialJson = serde_json::from_str(text).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
            Polynomial::try_from(&j).map_err(|e| CliError::Input(format!("{name}: {e}")))?
        }
    };
    let (clauses, data) = match normalize(&alpha0, g, order) {
        Ok((d, cert)) => {
            let shape_ok = d
                .coordinates(order)
                .iter()
                .enumerate()
                .all(|(i, z)| z.homogeneous_part(0).is_zero() && z.homogeneous_part(1) == Polynomial::var(3, i));
            let clauses = vec![
                clause(
                    NORMALIZED,
                    cert.verified,
                    format!("pushforward agrees with W mod F_{order} after {} steps", cert.steps.len()),
                ),
                clause(SHAPE, shape_ok, "z_i -> z_i + O(z^2)"),
            ];
            (clauses, json!({ "alpha0": alpha0.render(), "diffeo": d.to_json(), "certificate": cert }))
        }
        Err(PolyvectorError::Hypothesis { .. }) => {
            let v = hypothesis_violations(&alpha0, g, order);
            return Err(CliError::Input(format!(
                "alpha0 differs from W below filtration order {}: {}",
                2 * g + 2,
                v.join(", ")
            )));
        }
        Err(PolyvectorError::Parse(m)) => return Err(CliError::Input(m)),
        Err(e) => (vec![clause(NORMALIZED, false, e.to_string())], json!({ "alpha0": alpha0.render() })),
    };
    let mut r = Report::new(cfg.echo(), clauses, data);
    if let Some((name, sha, _)) = input {
        r = r.with_fixture(&name, sha);
    }
    Ok(r)
}

/// The toric resolution at one genus: fan, smoothness, crepancy, support,
/// component types and the dual complex.
pub fn cmd_fan(cfg: &RunConfig) -> Result<Report, CliError> {
    require_genus(cfg.genus, 3)?;
    let r = toric_suite(cfg.genus).map_err(input_error)?;
    let g = cfg.genus as usize;
    let n_unimodular = r.cones.iter().filter(|c| c.unimodular).count();
    let (v, e, f) = r.vef;
    let clauses = vec![
        clause("maximal cones", r.cones.len() == 2 * g + 1, format!("{} cones", r.cones.len())),
        clause("unimodular", n_unimodular == r.cones.len(), format!("{n_unimodular}/{} cones", r.cones.len())),
        clause("crepant", r.crepant.iter().all(|(_, ok)| *ok), format!("{} rays", r.crepant.len())),
        clause(
            "support",
            r.support.passed(),
            format!(
                "volume {}/{}, {} grid points",
                r.support.volume_sum, r.support.octant_volume, r.support.grid_points
            ),
        ),
        clause("component types", r.surfaces_match, "read from the fan"),
        clause(
            "dual complex counts",
            r.vef == toric_fan::ToricReport::expected_vef(cfg.genus),
            format!("V={v} E={e} F={f}"),
        ),
        clause("euler characteristic", r.euler_characteristic == 2, format!("chi={}", r.euler_characteristic)),
        clause(
            "closed connected surface",
            r.closed_surface && r.connected && r.exceptional_disjoint && r.curves_match_fan,
            "links are cycles, exceptional components meet in order",
        ),
    ];
    let summary = r.render_summary().lines().map(String::from).collect();
    let data = serde_json::to_value(&r).expect("report serializes");
    Ok(Report::new(cfg.echo(), clauses, data).with_summary(summary))
}

/// Audit the static product table and cross-check it with the transferred
/// structure at the same genus.
pub fn cmd_fukaya(cfg: &RunConfig) -> Result<Report, CliError> {
    let g = cfg.genus;
    require_genus(g, 2)?;
    let t = FukayaProductTable::load(g).map_err(input_error)?;
    let a = audit(&t);
    let idx_bad: Vec<&str> = a.entries.iter().filter(|e| !e.index.passed).map(|e| e.entry.as_str()).collect();
    let wt_bad: Vec<&str> = a.entries.iter().filter(|e| !e.weight).map(|e| e.entry.as_str()).collect();
    fn list<S: AsRef<str>>(v: &[S]) -> String {
        if v.is_empty() {
            "none".into()
        } else {
            v.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join("; ")
        }
    }
    let mut clauses = vec![
        clause("index law", idx_bad.is_empty(), format!("{} entries, failing: {}", a.entries.len(), list(&idx_bad))),
        clause("weight law", wt_bad.is_empty(), format!("{} entries, failing: {}", a.entries.len(), list(&wt_bad))),
        clause("units", a.unit_failures.is_empty(), format!("failing: {}", list(&a.unit_failures))),
        clause(
            "antisymmetry",
            a.antisymmetry_failures.is_empty(),
            format!("failing: {}", list(&a.antisymmetry_failures)),
        ),
    ];
    let id = Identification::standard(&t);
    let frag = fragment_report(&t, &id);
    clauses.extend(frag.clauses.iter().map(|c| clause(&format!("fragment {}", c.name), c.passed, c.detail.clone())));
    let cc = cross_check(&t, &id, &Transferred::for_genus(g));
    clauses.extend(cc.clauses.iter().map(|c| {
        clause(
            &format!("cross-check {}", c.name),
            c.fragment && c.transferred,
            format!("table: {}; transferred: {}", c.fragment_detail, c.transferred_detail),
        )
    }));
    let summary = t.entries.iter().map(|e| t.render(e)).collect();
    let data = json!({ "audit": a, "lambda": cc.lambda });
    Ok(Report::new(cfg.echo(), clauses, data)
        .with_fixture("fukaya-table/table.json", TABLE_SHA256.into())
        .with_summary(summary))
}

/// Compare the obstruction classes with brute-force lift searches on a
/// presentation with a central ideal.
pub fn cmd_dgla(cfg: &RunConfig) -> Result<Report, CliError> {
    let Some((name, sha, text)) = read_input(cfg)? else {
        return Err(CliError::Input("dgla needs --input with a presentation".into()));
    };
    let (g, names) = Dgla::parse(&text).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    let names = names.ok_or_else(|| CliError::Input(format!("{name}: no central_ideal given")))?;
    let h = CentralIdeal::from_names(&g, &names).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    let rep =
        obstruction_suite(&g, &h, cfg.samples(), cfg.seed).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    let o2 = rep.count(|c| c.o2_zero == c.lift_found);
    let gauge: Vec<_> = rep.cases.iter().filter_map(|c| c.gauge.as_ref()).collect();
    let o1 = gauge.iter().filter(|c| c.o1_zero == c.gauge_lift_found).count();
    let o1a = gauge.iter().filter(|c| c.o1a_zero == c.o1_zero).count();
    let clauses = vec![
        clause(
            "o2 against lift search",
            o2 == rep.cases.len(),
            format!("{o2}/{} agree, {} obstructed", rep.cases.len(), rep.count(|c| !c.o2_zero)),
        ),
        clause("o1 against gauge-lift search", o1 == gauge.len(), format!("{o1}/{} agree", gauge.len())),
        clause("o1 from the line homotopy", o1a == gauge.len(), format!("{o1a}/{} agree", gauge.len())),
    ];
    let data = json!({ "dim": g.dim(), "central_ideal": names, "cases": rep.cases });
    Ok(Report::new(cfg.echo(), clauses, data).with_fixture(&name, sha))
}
