//! The `analyze`, `green`, `socle`, `chains` and `rewrite` commands, each
//! producing a JSON value.

use serde_json::{json, Value};
use sgchain_core::chains::{
    antichain_certificate, ascending_chain_certificate, kernel_antichain, validate_certificate, AnnihilatorSize, Certificate,
    ExplorableSemigroup, FiniteBackend, FpBackend, FpIdealBackend, ReesZBackend, ReesZRowBackend, Search,
    SymbolicReesZ,
};
use sgchain_core::constructions::SandwichEntry;
use sgchain_core::green::{compute_green, Partition, Poset};
use sgchain_core::ideals::{
    classify, kernel, minimal_ideals, minimal_left_ideals, minimal_right_ideals, socle as socle_report,
    zero_minimal_ideals, zero_minimal_one_sided, Side, SocleReport,
};
use sgchain_core::rewrite::{knuth_bendix, Completion, FpSemigroup, RewritingSystem, DEFAULT_MAX_LEN, DEFAULT_MAX_RULES};
use sgchain_core::{ElementSet, FiniteSemigroup};
use thiserror::Error;

use crate::instance::{Document, InstanceError, Resolved};
use crate::report::SCHEMA;

pub const DEFAULT_RADIUS: usize = 12;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Core(#[from] sgchain_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CommandResult = Result<Value, CommandError>;

fn header(command: &str, doc: &Document, r: &Resolved) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("instance".into(), json!(doc.target()));
    m.insert("kind".into(), json!(r.kind_name()));
    m
}

fn finite<'a>(r: &'a Resolved, command: &str) -> Result<&'a FiniteSemigroup, CommandError> {
    match r {
        Resolved::Finite(s) => Ok(s),
        other => Err(CommandError::Usage(format!(
            "{} needs a finite semigroup, got a {} instance",
            command,
            other.kind_name()
        ))),
    }
}

fn labels(s: &FiniteSemigroup, set: &ElementSet) -> Value {
    json!(set.iter().map(|a| s.label(a)).collect::<Vec<_>>())
}

fn sets(s: &FiniteSemigroup, list: &[ElementSet]) -> Value {
    Value::Array(list.iter().map(|x| labels(s, x)).collect())
}

fn partition(s: &FiniteSemigroup, p: &Partition) -> Value {
    sets(s, &p.classes)
}

fn poset(p: &Poset) -> Value {
    let n = p.len();
    let covers: Vec<[usize; 2]> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| p.lt(i, j) && !(0..n).any(|k| p.lt(i, k) && p.lt(k, j)))
        .map(|(i, j)| [i, j])
        .collect();
    json!({
        "size": n,
        "height": p.height(),
        "width": p.width(),
        "covers": covers,
    })
}

fn green_json(s: &FiniteSemigroup) -> Value {
    let g = compute_green(s);
    json!({
        "r": partition(s, &g.r),
        "l": partition(s, &g.l),
        "j": partition(s, &g.j),
        "h": partition(s, &g.h),
        "d": partition(s, &g.d),
        "r_poset": poset(&g.r_poset),
    })
}

fn socle_json(s: &FiniteSemigroup, rep: &SocleReport) -> Value {
    json!({
        "side": rep.side,
        "sigma": labels(s, &rep.sigma),
        "null_part": labels(s, &rep.null_part),
        "gi_part": labels(s, &rep.gi_part),
        "blocks": sets(s, &rep.blocks),
        "zero_minimal": sets(s, &rep.zero_minimal),
        "clauses": rep.clauses,
    })
}

fn finite_analyze(s: &FiniteSemigroup) -> Result<Value, CommandError> {
    let zero_min = |side: Option<Side>| -> Result<Value, CommandError> {
        if s.zero().is_none() {
            return Ok(Value::Null);
        }
        Ok(sets(
            s,
            &match side {
                Some(side) => zero_minimal_one_sided(s, side)?,
                None => zero_minimal_ideals(s)?,
            },
        ))
    };
    let socle_side = |side| -> Result<Value, CommandError> {
        if s.zero().is_none() {
            return Ok(Value::Null);
        }
        Ok(socle_json(s, &socle_report(s, side)?))
    };
    Ok(json!({
        "size": s.size(),
        "labels": s.labels(),
        "zero": s.zero().map(|z| s.label(z)),
        "identity": s.identity().map(|e| s.label(e)),
        "green": green_json(s),
        "ideals": {
            "minimal_right": sets(s, &minimal_right_ideals(s)),
            "minimal_left": sets(s, &minimal_left_ideals(s)),
            "minimal": sets(s, &minimal_ideals(s)),
            "zero_minimal_right": zero_min(Some(Side::Right))?,
            "zero_minimal_left": zero_min(Some(Side::Left))?,
            "zero_minimal": zero_min(None)?,
            "kernel": labels(s, &kernel(s)),
        },
        "socle": {
            "right": socle_side(Side::Right)?,
            "left": socle_side(Side::Left)?,
        },
        "classification": classify(s),
    }))
}

fn rule_strings(rs: &RewritingSystem) -> Vec<String> {
    rs.rules()
        .iter()
        .map(|r| format!("{} -> {}", rs.format_word(&r.lhs), rs.format_word(&r.rhs)))
        .collect()
}

/// The presentation itself if confluent, else its completion.
fn confluent_system(fp: &FpSemigroup) -> Result<FpSemigroup, CommandError> {
    if fp.is_confluent() {
        return Ok(fp.clone());
    }
    match knuth_bendix(fp.rs(), DEFAULT_MAX_RULES, DEFAULT_MAX_LEN)? {
        Completion::Completed(rs) => Ok(FpSemigroup::new(rs)),
        Completion::GaveUp(_) => Err(sgchain_core::Error::NotConfluent.into()),
    }
}

fn kernel_letters(fp: &FpSemigroup) -> Vec<u16> {
    (0..fp.alphabet_len() as u16)
        .filter(|&x| FpIdealBackend::new(fp.clone(), x, 0).is_ok())
        .collect()
}

fn fp_analyze(fp: &FpSemigroup, radius: usize) -> Result<Value, CommandError> {
    let rs = fp.rs();
    let conf = rs.local_confluence();
    let witness = conf.witness.as_ref().map(|(cp, l, r)| {
        json!({
            "overlap": rs.format_word(&cp.overlap),
            "left": rs.format_word(l),
            "right": rs.format_word(r),
        })
    });
    let mut out = json!({
        "alphabet": rs.alphabet(),
        "rules": rule_strings(rs),
        "confluent": conf.confluent,
        "critical_pairs": conf.pairs_checked,
        "non_joinable": witness,
        "free": fp.is_free(),
    });
    let system = match confluent_system(fp) {
        Ok(sys) => sys,
        Err(_) => {
            out["completion"] = json!({ "completed": false });
            return Ok(out);
        }
    };
    if !fp.is_confluent() {
        out["completion"] = json!({ "completed": true, "rules": rule_strings(system.rs()) });
    }
    let counts: Vec<usize> = system.enumerate_normal_forms(radius)?.iter().map(Vec::len).collect();
    out["normal_form_counts"] = json!(counts);
    out["kernel_letters"] = json!(kernel_letters(&system)
        .into_iter()
        .map(|x| system.rs().alphabet()[x as usize].clone())
        .collect::<Vec<_>>());
    Ok(out)
}

fn reesz_p(spec: &SymbolicReesZ) -> Value {
    let rows: Vec<Vec<Value>> = (0..spec.cols())
        .map(|j| {
            (0..spec.rows())
                .map(|i| match spec.entry(j, i) {
                    SandwichEntry::Group(g) => json!(g),
                    SandwichEntry::Zero => Value::Null,
                })
                .collect()
        })
        .collect();
    json!(rows)
}

fn reesz_analyze(spec: &SymbolicReesZ) -> Result<Value, CommandError> {
    let mut rows = Vec::new();
    for i in 0..spec.rows() {
        let rep = spec.zero_min_right_ideal_report(i, 2)?;
        rows.push(json!({
            "row": i + 1,
            "annihilating_columns": spec.annihilating_columns(i).iter().map(|j| j + 1).collect::<Vec<_>>(),
            "annihilator": rep.annihilator,
            "annihilating_elements": rep.elements,
        }));
    }
    Ok(json!({
        "rows": spec.rows(),
        "cols": spec.cols(),
        "p": reesz_p(spec),
        "row_ideals": rows,
    }))
}

pub fn analyze(doc: &Document, r: &Resolved, radius: usize) -> CommandResult {
    let mut out = header("analyze", doc, r);
    let body = match r {
        Resolved::Finite(s) => finite_analyze(s)?,
        Resolved::Fp(fp) => fp_analyze(fp, radius)?,
        Resolved::ReesZ(spec) => reesz_analyze(spec)?,
    };
    if let Value::Object(m) = body {
        out.extend(m);
    }
    Ok(Value::Object(out))
}

pub fn green(doc: &Document, r: &Resolved) -> CommandResult {
    let s = finite(r, "green")?;
    let mut out = header("green", doc, r);
    out.insert("size".into(), json!(s.size()));
    out.insert("green".into(), green_json(s));
    Ok(Value::Object(out))
}

pub fn socle(doc: &Document, r: &Resolved, side: Side) -> CommandResult {
    let s = finite(r, "socle")?;
    let rep = socle_report(s, side)?;
    let mut out = header("socle", doc, r);
    out.insert("socle".into(), socle_json(s, &rep));
    Ok(Value::Object(out))
}

#[derive(Clone, Debug, Default)]
pub struct ChainOptions {
    pub antichain: Option<usize>,
    pub chain: Option<usize>,
    pub radius: usize,
    pub kernel_only: bool,
    /// 1-based row for the row ideal of a Rees matrix semigroup over the integers.
    pub row: Option<usize>,
}

fn certificate_json<E: ExplorableSemigroup>(e: &E, cert: &Certificate<E::Elem>) -> Value {
    let validated = validate_certificate(e, cert);
    json!({
        "found": true,
        "kind": cert.kind,
        "size": cert.elements.len(),
        "elements": cert.labels,
        "checked_bound": cert.checked_bound,
        "verdict_basis": cert.verdict_basis,
        "validated": validated.is_ok(),
        "validation_error": validated.err().map(|e| e.to_string()),
    })
}

fn search_json<E: ExplorableSemigroup>(e: &E, s: &Search<E::Elem>) -> Value {
    match s {
        Search::Found(cert) => certificate_json(e, cert),
        Search::NotFoundUpTo { radius, best } => json!({
            "found": false,
            "radius": radius,
            "best": best,
        }),
    }
}

fn run_searches<E: ExplorableSemigroup>(e: &E, antichain: Option<usize>, chain: Option<usize>, radius: usize) -> Result<Value, CommandError> {
    let mut out = serde_json::Map::new();
    if let Some(n) = antichain {
        out.insert("antichain".into(), search_json(e, &antichain_certificate(e, n, radius)?));
    }
    if let Some(n) = chain {
        out.insert("chain".into(), search_json(e, &ascending_chain_certificate(e, n, radius)?));
    }
    out.insert("radius".into(), json!(radius));
    out.insert("membership_bound".into(), json!(e.bound()));
    Ok(Value::Object(out))
}

pub fn chains(doc: &Document, r: &Resolved, opts: &ChainOptions) -> CommandResult {
    let mut out = header("chains", doc, r);
    let defaulted = opts.antichain.is_none() && opts.chain.is_none();
    let body = match r {
        Resolved::Finite(s) => {
            if opts.kernel_only || opts.row.is_some() {
                return Err(CommandError::Usage("--kernel-only and --row do not apply to finite tables".into()));
            }
            let backend = FiniteBackend::new(s);
            let p = compute_green(s).r_poset;
            let (a, c) = if defaulted {
                (Some(p.width().max(2)), Some(p.height().max(2)))
            } else {
                (opts.antichain, opts.chain)
            };
            let mut body = run_searches(&backend, a, c, opts.radius)?;
            body["width"] = json!(p.width());
            body["height"] = json!(p.height());
            body
        }
        Resolved::Fp(fp) => {
            if opts.row.is_some() {
                return Err(CommandError::Usage("--row applies to Rees matrix semigroups over the integers".into()));
            }
            let (a, c) = if defaulted { (Some(2), Some(2)) } else { (opts.antichain, opts.chain) };
            let fp = confluent_system(fp)?;
            if opts.kernel_only {
                let is_abb_aba = fp.rs().alphabet() == FpSemigroup::abb_aba().rs().alphabet()
                    && fp.rs().rules() == FpSemigroup::abb_aba().rs().rules();
                let letter = if is_abb_aba {
                    1
                } else {
                    match kernel_letters(&fp).as_slice() {
                        [x] => *x,
                        [] => return Err(CommandError::Usage("no letter defines a content ideal".into())),
                        _ => return Err(CommandError::Usage("several letters define content ideals; the kernel is ambiguous".into())),
                    }
                };
                let backend = FpIdealBackend::new(fp.clone(), letter, opts.radius)?;
                let mut body = run_searches(&backend, None, c, opts.radius)?;
                if let Some(n) = a {
                    let search = if is_abb_aba {
                        certificate_json(&backend, &kernel_antichain(n, opts.radius)?)
                    } else {
                        search_json(&backend, &antichain_certificate(&backend, n, opts.radius)?)
                    };
                    body["antichain"] = search;
                }
                body["kernel_letter"] = json!(fp.rs().alphabet()[letter as usize]);
                body
            } else {
                run_searches(&FpBackend::new(fp, opts.radius)?, a, c, opts.radius)?
            }
        }
        Resolved::ReesZ(spec) => {
            if opts.kernel_only {
                return Err(CommandError::Usage("--kernel-only applies to presentations".into()));
            }
            let (a, c) = if defaulted { (Some(2), Some(2)) } else { (opts.antichain, opts.chain) };
            match opts.row {
                Some(row) => {
                    if row == 0 || row > spec.rows() {
                        return Err(CommandError::Usage(format!("row must be between 1 and {}", spec.rows())));
                    }
                    let backend = ReesZRowBackend { spec: spec.clone(), row: row - 1 };
                    let mut body = run_searches(&backend, a, c, opts.radius)?;
                    let rep = spec.zero_min_right_ideal_report(row - 1, a.unwrap_or(2).max(2))?;
                    if a.is_some() {
                        // the annihilating elements form an antichain of any size, beyond the radius
                        let found = body["antichain"]["found"] == json!(true);
                        match (&rep.certificate, found) {
                            (Some(cert), false) if rep.annihilator == AnnihilatorSize::Infinite => {
                                body["antichain"] = certificate_json(&backend, cert);
                                body["antichain"]["source"] = json!("annihilator");
                            }
                            _ => body["antichain"]["source"] = json!("search"),
                        }
                    }
                    body["row"] = json!(row);
                    body["annihilator"] = json!(rep.annihilator);
                    body["annihilating_elements"] = json!(rep.elements);
                    body
                }
                None => run_searches(&ReesZBackend { spec: spec.clone() }, a, c, opts.radius)?,
            }
        }
    };
    if let Value::Object(m) = body {
        out.extend(m);
    }
    Ok(Value::Object(out))
}

#[derive(Clone, Debug)]
pub enum RewriteAction {
    Reduce(String),
    Complete,
    NormalForms(usize),
}

pub fn rewrite(doc: &Document, r: &Resolved, action: &RewriteAction) -> CommandResult {
    let Resolved::Fp(fp) = r else {
        return Err(CommandError::Usage(format!(
            "rewrite needs a presentation, got a {} instance",
            r.kind_name()
        )));
    };
    let mut out = header("rewrite", doc, r);
    out.insert("confluent".into(), json!(fp.is_confluent()));
    match action {
        RewriteAction::Reduce(w) => {
            let word = fp.rs().parse_word(w)?;
            out.insert("input".into(), json!(fp.rs().format_word(&word)));
            out.insert("normal_form".into(), json!(fp.rs().format_word(&fp.rs().reduce(&word))));
        }
        RewriteAction::Complete => {
            let c = knuth_bendix(fp.rs(), DEFAULT_MAX_RULES, DEFAULT_MAX_LEN)?;
            out.insert("completed".into(), json!(c.is_completed()));
            out.insert("rules".into(), json!(rule_strings(c.system())));
        }
        RewriteAction::NormalForms(n) => {
            let sys = confluent_system(fp)?;
            let forms = sys.enumerate_normal_forms(*n)?;
            let by_len: Vec<Value> = forms
                .iter()
                .enumerate()
                .map(|(k, ws)| {
                    json!({
                        "length": k + 1,
                        "count": ws.len(),
                        "words": ws.iter().map(|w| sys.rs().format_word(w)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            out.insert("normal_forms".into(), json!(by_len));
        }
    }
    Ok(Value::Object(out))
}
