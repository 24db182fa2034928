use curve_lab::{cokernel_rank_check, connectedness, discriminant_check, smoothness};
use differential_lab::{
    dominance_rank, dphi_matrix, lemma_is_check, lemma_main_check, lemma_sq_check, product_rule_rank, DominanceVerdict,
    Selector,
};
use exact_algebra::PrimeField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrollar_bounds::{
    abundance_verdict, default_e_bound, general_bound_check, general_cover_not_abundant, in_ol_polytope, ol_polytope,
    oo_polytope, ScrollarInvariants,
};
use serde_json::{json, Value};
use splitting_types::{
    check_conditions, corollary_check, effective_window, enumerate_strata, for_each_sorted_tuple, plane_curve_dim,
    EnumerateOptions, HirzebruchClass, SplittingType, StratumReport,
};
use wood_engine::{
    degree_grid, forced_reducibility, pair_from_json, phi, sample_pair, CurveDoc, PairDoc, Pattern, Reducibility,
    WoodError,
};

use crate::args::{ClassArgs, Common, DominanceArgs, EnumerateArgs, Lemma, SampleArgs, Section5Args, StratumArgs};
use crate::{CliError, Report, Table, EXIT_EMPTY, EXIT_INCONCLUSIVE, EXIT_OK};

const DIM_SOURCE: &str = "g - u(e) - u(f) + nu(e,f,m)";
const PLANE_DIM_SOURCE: &str = "g - #{(i,j): e_i - e_j >= 2}";

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn field(c: &Common) -> Result<PrimeField, CliError> {
    Ok(PrimeField::new(c.p)?)
}

fn rng(c: &Common) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(c.seed)
}

fn class(a: &ClassArgs) -> Result<HirzebruchClass, CliError> {
    match (a.m, a.k, a.delta) {
        (Some(m), Some(k), Some(d)) if k >= 1 => Ok(HirzebruchClass::new(m, k, d)),
        (Some(_), Some(0), Some(_)) => Err(usage("--k must be at least 1")),
        _ => Err(usage("--m, --k and --delta are required")),
    }
}

/// Entries beyond this are rejected so type sums cannot overflow.
const MAX_ENTRY: u64 = 1 << 20;

fn bounded(t: &SplittingType, name: &str) -> Result<(), CliError> {
    if t.entries().iter().any(|x| x.unsigned_abs() > MAX_ENTRY) {
        return Err(usage(format!("--{name} entries must lie in [-{MAX_ENTRY}, {MAX_ENTRY}]")));
    }
    Ok(())
}

fn class_json(cls: &HirzebruchClass) -> Value {
    json!({ "m": cls.m, "k": cls.k, "delta": cls.delta, "genus": cls.genus() })
}

fn reducibility_name(r: Reducibility) -> &'static str {
    match r {
        Reducibility::None => "NONE",
        Reducibility::DivisibleByY => "DIVISIBLE_BY_Y",
        Reducibility::BlockFactor => "BLOCK_FACTOR",
    }
}

/// The stratum's condition checks and predicted dimension, as JSON fields.
fn stratum_json(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> serde_json::Map<String, Value> {
    let mut row = match serde_json::to_value(StratumReport::new(e, f, cls)).expect("stratum report serializes") {
        Value::Object(map) => map,
        _ => unreachable!("stratum report is a struct"),
    };
    row.insert("dim_source".into(), json!(DIM_SOURCE));
    row
}

/// Class, `e` and `f` with matching ranks and `Σf − Σe = δ`.
fn stratum(a: &StratumArgs) -> Result<(HirzebruchClass, SplittingType, SplittingType), CliError> {
    let cls = class(&a.class)?;
    let (Some(e), Some(f)) = (a.e.clone(), a.f.clone()) else {
        return Err(usage("--e and --f are required"));
    };
    bounded(&e, "e")?;
    bounded(&f, "f")?;
    let k = cls.k as usize;
    if e.rank() != k || f.rank() != k {
        return Err(usage(format!("e and f must have k = {k} entries")));
    }
    if f.degree() - e.degree() != cls.delta() {
        return Err(usage(format!("Σf − Σe = {} but δ = {}", f.degree() - e.degree(), cls.delta())));
    }
    Ok((cls, e, f))
}

pub fn cmd_enumerate(c: &Common, a: &EnumerateArgs) -> Result<Report, CliError> {
    let cls = class(&a.class)?;
    if let Some(e) = &a.e {
        bounded(e, "e")?;
        if e.rank() != cls.k as usize {
            return Err(usage(format!("--e must have k = {} entries", cls.k)));
        }
    }
    let opts =
        EnumerateOptions { window: a.window, e: a.e.clone(), line_bundle_degree: a.degree, sections: a.sections };
    let plane = cls.m == 1 && cls.delta == 0;
    let rows: Vec<Value> = enumerate_strata(&cls, &opts)
        .into_iter()
        .map(|r| {
            let mut row = stratum_json(&r.e, &r.f, &cls);
            if plane {
                row.insert("plane_dim".into(), serde_json::to_value(plane_curve_dim(&r.e, cls.genus())).expect("dim"));
                row.insert("plane_dim_source".into(), json!(PLANE_DIM_SOURCE));
            }
            Value::Object(row)
        })
        .collect();
    let (lo, hi) = effective_window(&cls, &opts);
    let json = json!({
        "command": "enumerate",
        "p": c.p,
        "class": class_json(&cls),
        "window": [lo, hi],
        "filters": { "e": a.e, "degree": a.degree, "sections": a.sections },
        "count": rows.len(),
        "strata": rows.clone(),
    });
    let mut columns = vec!["e", "f", "cond", "u_e", "u_f", "nu", "dim", "dim_source"];
    if plane {
        columns.extend(["plane_dim", "plane_dim_source"]);
    }
    Ok(Report { json, table: Some(Table { key: "strata", columns, rows }), exit: EXIT_OK })
}

pub fn cmd_sample(c: &Common, a: &SampleArgs) -> Result<Report, CliError> {
    let (cls, e, f) = stratum(&a.stratum)?;
    let fp = field(c)?;
    let grid = degree_grid(&e, &f, cls.m())?;
    let mut doc = stratum_json(&e, &f, &cls);
    doc.insert("command".into(), json!("sample"));
    doc.insert("p".into(), json!(c.p));
    doc.insert("seed".into(), json!(c.seed));
    doc.insert("class".into(), class_json(&cls));
    doc.insert("pattern".into(), json!(a.pattern));
    let red = forced_reducibility(&grid);
    doc.insert("forced_reducibility".into(), json!(reducibility_name(red)));
    if red != Reducibility::None || !check_conditions(&e, &f, &cls).all() {
        return Ok(Report { json: Value::Object(doc), table: None, exit: EXIT_EMPTY });
    }
    let mut rng = rng(c);
    let mut attempts = 0;
    let mut last: Option<(Value, PairDoc, Option<CurveDoc>)> = None;
    let mut certified = false;
    while attempts < a.retries.max(1) {
        attempts += 1;
        let pair = sample_pair(fp, &grid, a.pattern, &mut rng)?;
        let curve = match phi(&pair) {
            Ok(curve) => curve,
            Err(WoodError::ZeroCurve) => {
                last = Some((
                    json!({ "certified": false, "note": "determinant vanished" }),
                    PairDoc::from_pair(&pair),
                    None,
                ));
                continue;
            }
            Err(err) => return Err(err.into()),
        };
        let smooth = smoothness(&curve);
        let h0 = connectedness(&cls);
        let disc = discriminant_check(&curve).ok();
        let cokernel = cokernel_rank_check(&pair, &curve, a.points, &mut rng).ok();
        certified = smooth.is_smooth() && h0 == 1 && disc.is_some_and(|d| d.ok) && cokernel == Some(true);
        let cert = json!({
            "smoothness": smooth,
            "h0_structure_sheaf": h0,
            "discriminant": disc,
            "cokernel": { "points": a.points, "rank_k_minus_1": cokernel },
            "certified": certified,
        });
        last = Some((cert, PairDoc::from_pair(&pair), Some(CurveDoc::from_curve(&curve))));
        if certified {
            break;
        }
    }
    let (cert, pair_doc, curve_doc) = last.expect("at least one attempt");
    if let Some(path) = &a.pair_out {
        std::fs::write(path, serde_json::to_string_pretty(&pair_doc)? + "\n")?;
    }
    if let (Some(path), Some(curve)) = (&a.curve_out, &curve_doc) {
        std::fs::write(path, serde_json::to_string_pretty(curve)? + "\n")?;
    }
    doc.insert("attempts".into(), json!(attempts));
    doc.insert("certification".into(), cert);
    doc.insert("pair".into(), serde_json::to_value(&pair_doc)?);
    doc.insert("curve".into(), serde_json::to_value(&curve_doc)?);
    let exit = if certified { EXIT_OK } else { EXIT_INCONCLUSIVE };
    Ok(Report { json: Value::Object(doc), table: None, exit })
}

fn lemma_selector(lemma: Lemma) -> Option<Selector> {
    match lemma {
        Lemma::Sq => Some(Selector::Sut),
        Lemma::Main => Some(Selector::TPrime),
        Lemma::Is => Some(Selector::TCorner),
        Lemma::Product => None,
    }
}

fn lemma_name(lemma: Lemma) -> &'static str {
    match lemma {
        Lemma::Sq => "sq",
        Lemma::Main => "main",
        Lemma::Is => "is",
        Lemma::Product => "product",
    }
}

pub fn cmd_dominance(c: &Common, a: &DominanceArgs) -> Result<Report, CliError> {
    let fp = field(c)?;
    let mut rng = rng(c);
    if let Some(lemma) = a.lemma {
        if a.selector.is_some() && a.selector != lemma_selector(lemma) {
            return Err(usage(format!(
                "--lemma {} needs --selector {}",
                lemma_name(lemma),
                lemma_selector(lemma).map_or("(none)".to_string(), |s| s.to_string())
            )));
        }
        return lemma_report(c, a, lemma, fp, &mut rng);
    }
    let selector = a.selector.unwrap_or(Selector::Full);
    if let Some(path) = &a.pair {
        let pair = pair_from_json(&std::fs::read_to_string(path)?)?;
        let d = dphi_matrix(&pair, selector)?;
        let json = json!({
            "command": "dominance",
            "source": path.display().to_string(),
            "pattern": pair.pattern(),
            "selector": selector,
            "differential": { "rank": d.rank(), "nrows": d.nrows(), "ncols": d.ncols(), "provenance": "rank at the given pair" },
        });
        return Ok(Report { json, table: None, exit: EXIT_OK });
    }
    let (cls, e, f) = stratum(&a.stratum)?;
    let grid = degree_grid(&e, &f, cls.m())?;
    let red = forced_reducibility(&grid);
    let mut doc = stratum_json(&e, &f, &cls);
    doc.insert("command".into(), json!("dominance"));
    doc.insert("p".into(), json!(c.p));
    doc.insert("seed".into(), json!(c.seed));
    doc.insert("class".into(), class_json(&cls));
    doc.insert("forced_reducibility".into(), json!(reducibility_name(red)));
    doc.insert("selector".into(), json!(selector));
    if selector != Selector::Full {
        let pair = sample_pair(fp, &grid, Pattern::Sut, &mut rng)?;
        let d = dphi_matrix(&pair, selector)?;
        doc.insert(
            "differential".into(),
            json!({ "rank": d.rank(), "nrows": d.nrows(), "ncols": d.ncols(), "provenance": "rank at one sampled SUT pair" }),
        );
        return Ok(Report { json: Value::Object(doc), table: None, exit: EXIT_OK });
    }
    let r = dominance_rank(fp, &e, &f, &cls, a.trials.max(1), &mut rng)?;
    let mut diff = serde_json::to_value(&r)?;
    diff["provenance"] = json!(format!("max rank of dphi over {} sampled FULL pairs", r.trials));
    doc.insert("differential".into(), diff);
    let exit = match (r.verdict, red) {
        (DominanceVerdict::Dominant, _) => EXIT_OK,
        (_, Reducibility::None) => EXIT_INCONCLUSIVE,
        _ => EXIT_EMPTY,
    };
    Ok(Report { json: Value::Object(doc), table: None, exit })
}

fn lemma_report(
    c: &Common,
    a: &DominanceArgs,
    lemma: Lemma,
    fp: PrimeField,
    rng: &mut ChaCha8Rng,
) -> Result<Report, CliError> {
    let trials = a.trials.max(1);
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), json!("dominance"));
    doc.insert("lemma".into(), json!(lemma_name(lemma)));
    doc.insert("p".into(), json!(c.p));
    doc.insert("seed".into(), json!(c.seed));
    let mut holds = false;
    let mut run = 0;
    let mut detail = Value::Null;
    if lemma == Lemma::Product {
        if a.degrees.is_empty() {
            return Err(usage("--lemma product needs --degrees d1,d2,…"));
        }
        while run < trials && !holds {
            run += 1;
            let r = product_rule_rank(fp, &a.degrees, rng);
            holds = r.surjective;
            detail = serde_json::to_value(r)?;
        }
    } else {
        let (cls, e, f) = stratum(&a.stratum)?;
        doc.extend(stratum_json(&e, &f, &cls));
        doc.insert("class".into(), class_json(&cls));
        doc.insert("selector".into(), json!(lemma_selector(lemma)));
        let grid = degree_grid(&e, &f, cls.m())?;
        while run < trials && !holds {
            run += 1;
            match lemma {
                Lemma::Sq => {
                    let pair = sample_pair(fp, &grid, Pattern::Sut, rng)?;
                    holds = lemma_sq_check(&pair)?;
                    detail = json!({ "surjective": holds });
                }
                Lemma::Main => {
                    let pair = sample_pair(fp, &grid, Pattern::Sut, rng)?;
                    let r = lemma_main_check(&pair)?;
                    holds = r.equal();
                    detail = json!({ "image_rank": r.image_rank, "subspace_rank": r.subspace_rank, "union_rank": r.union_rank, "equal": holds });
                }
                Lemma::Is => {
                    let r = lemma_is_check(fp, &e, &f, cls.m(), rng)?;
                    holds = r.surjective;
                    detail = serde_json::to_value(r)?;
                }
                Lemma::Product => unreachable!("handled above"),
            }
        }
    }
    doc.insert("trials".into(), json!(run));
    doc.insert("holds".into(), json!(holds));
    doc.insert("result".into(), detail);
    let exit = if holds { EXIT_OK } else { EXIT_INCONCLUSIVE };
    Ok(Report { json: Value::Object(doc), table: None, exit })
}

pub fn cmd_section5(c: &Common, a: &Section5Args) -> Result<Report, CliError> {
    let modes = [a.abundance, a.oo, a.ol, a.general_bound, a.general_cover];
    if modes.iter().filter(|&&x| x).count() != 1 {
        return Err(usage("pick exactly one of --abundance, --oo, --ol, --general-bound, --general-cover"));
    }
    let _ = c;
    if a.abundance {
        let cls = class(&a.class)?;
        let scrollar = ScrollarInvariants::of_class(&cls);
        let bound = a.e_bound.unwrap_or_else(|| default_e_bound(&scrollar));
        let verdict = abundance_verdict(&cls, Some(bound));
        // The containment diff: every normalized type where the two sets disagree.
        let k = cls.k as usize;
        let mut rows = Vec::new();
        let mut visit = |e: SplittingType| {
            let (conj, real) = (in_ol_polytope(&scrollar, &e), corollary_check(&e, &cls));
            if conj != real {
                rows.push(json!({ "e": e, "in_polytope": conj, "realized": real }));
            }
        };
        if k == 1 {
            visit(SplittingType::new(vec![0]).expect("rank one"));
        } else {
            for_each_sorted_tuple(k - 1, 0, bound, None, |tail| {
                let mut v = vec![0];
                v.extend_from_slice(tail);
                visit(SplittingType::new(v).expect("sorted"));
            });
        }
        let json = json!({
            "command": "section5",
            "mode": "abundance",
            "class": class_json(&cls),
            "scrollar": scrollar.entries(),
            "e_bound": bound,
            "result": verdict,
            "diff": rows.clone(),
        });
        let table = Table { key: "diff", columns: vec!["e", "in_polytope", "realized"], rows };
        return Ok(Report { json, table: Some(table), exit: EXIT_OK });
    }
    if a.oo {
        let k = a.class.k.ok_or_else(|| usage("--oo needs --k"))? as usize;
        let bound = a.bound.ok_or_else(|| usage("--oo needs --bound"))?;
        let rows: Vec<Value> = oo_polytope(k, bound).iter().map(|t| json!({ "a": t.entries() })).collect();
        let json = json!({ "command": "section5", "mode": "oo", "k": k, "bound": bound, "count": rows.len(), "tuples": rows.clone() });
        return Ok(Report { json, table: Some(Table { key: "tuples", columns: vec!["a"], rows }), exit: EXIT_OK });
    }
    if a.ol {
        let scrollar = ScrollarInvariants::new(a.a.clone())?;
        let bound = a.e_bound.unwrap_or_else(|| default_e_bound(&scrollar));
        let rows: Vec<Value> = ol_polytope(&scrollar, bound)?.into_iter().map(|e| json!({ "e": e })).collect();
        let json = json!({ "command": "section5", "mode": "ol", "a": scrollar.entries(), "e_bound": bound, "count": rows.len(), "types": rows.clone() });
        return Ok(Report { json, table: Some(Table { key: "types", columns: vec!["e"], rows }), exit: EXIT_OK });
    }
    if a.general_bound {
        let (Some(d), Some(e), Some(f), Some(g)) = (&a.d, &a.e, &a.f, a.g) else {
            return Err(usage("--general-bound needs --d, --e, --f and --g"));
        };
        for (t, name) in [(d, "d"), (e, "e"), (f, "f")] {
            bounded(t, name)?;
        }
        let r = general_bound_check(d, e, f, g)?;
        let exit = if r.violations.is_empty() { EXIT_OK } else { EXIT_EMPTY };
        let json = json!({ "command": "section5", "mode": "general_bound", "g": g, "result": r });
        return Ok(Report { json, table: None, exit });
    }
    let k = a.class.k.ok_or_else(|| usage("--general-cover needs --k"))? as usize;
    let g = a.g.ok_or_else(|| usage("--general-cover needs --g"))?;
    let r = general_cover_not_abundant(k, g)?;
    let exit = if r.witness.is_some() { EXIT_OK } else { EXIT_INCONCLUSIVE };
    let json = json!({ "command": "section5", "mode": "general_cover", "result": r });
    Ok(Report { json, table: None, exit })
}
