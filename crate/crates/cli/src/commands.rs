//! The subcommands. Each returns an [`Output`]; errors are config or usage
//! problems and map to exit code 2.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use tetra_core::algebra::{distinguished_grouplike, left_integrals, right_integrals, verify_bibj, AlgebraContext};
use tetra_core::linalg::{rank, Matrix};
use tetra_core::realization::{validate_realization, z_weight_is_e, RealizationConfig};
use tetra_core::report::{Check, Report};
use tetra_core::repr::{
    check_spherical, classify_simples, decompose, diagnose_table, elem_vector, is_multiple_of, radical_top_socle,
    verify_table, verma, Radical, SimpleCatalog, TableDiagnostics, TableReport,
};
use tetra_core::scalars::Cyclotomic;

use crate::output::Output;

pub type CmdResult<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub struct Session {
    pub config: RealizationConfig,
    pub ctx: AlgebraContext,
}

impl Session {
    /// Parses the config, validates the realization and completes the rules.
    pub fn open(config_text: &str, lambda: &str) -> CmdResult<Self> {
        let config = RealizationConfig::from_json(config_text).map_err(err)?;
        let r = config.build().map_err(err)?;
        let order = r.chi().order().max(1);
        let lambda = Cyclotomic::parse(lambda, order).map_err(|e| format!("--lambda: {e}"))?;
        let ctx = AlgebraContext::new(r, lambda).map_err(err)?;
        Ok(Session { config, ctx })
    }

    fn label(&self, g: usize) -> String {
        self.ctx.group().label(g).to_string()
    }

    fn labels(&self, gs: &[usize]) -> Vec<String> {
        gs.iter().map(|&g| self.label(g)).collect()
    }

    pub fn find(&self, label: &str) -> CmdResult<usize> {
        self.ctx.group().find(label).map_err(err)
    }

    fn outside(&self) -> Option<usize> {
        self.ctx.group().elements().find(|&g| !self.ctx.f(g).is_zero())
    }

    /// The requested weights with `f(g) ≠ 0`, or the first such weight.
    fn outside_weights(&self, labels: &[String]) -> CmdResult<Vec<usize>> {
        if labels.is_empty() {
            return self
                .outside()
                .map(|g| vec![g])
                .ok_or_else(|| "no weight with f(g) != 0: this command needs lambda != 0 and chi_z != 1".to_string());
        }
        let mut gs = Vec::new();
        for l in labels {
            let g = self.find(l)?;
            if self.ctx.f(g).is_zero() {
                return Err(format!("f({l}) = 0, the tables need a weight outside ker chi_z"));
            }
            gs.push(g);
        }
        Ok(gs)
    }

    fn catalog(&self) -> CmdResult<SimpleCatalog> {
        classify_simples(&self.ctx).map_err(err)
    }
}

fn kind_name(config: &RealizationConfig) -> &'static str {
    match config {
        RealizationConfig::Affine { .. } => "affine",
        RealizationConfig::Extended { .. } => "extended",
        RealizationConfig::Table { .. } => "table",
    }
}

#[derive(Serialize)]
struct BuildSummary {
    realization: &'static str,
    group_order: usize,
    lambda: String,
    dim: usize,
    ker_chi_z: usize,
    z_weight_is_e: bool,
    algebra: String,
    standard_monomials: usize,
    rules: usize,
    validation: Report,
}

pub fn build(s: &Session) -> CmdResult<Output> {
    let ctx = &s.ctx;
    let r = ctx.realization();
    let validation = validate_realization(r);
    let algebra = if ctx.lambda().is_zero() {
        "bosonization (λ = 0)"
    } else if r.chi_z().is_trivial() {
        "bosonization (χ_z = 1)"
    } else {
        "deformed"
    };
    let sum = BuildSummary {
        realization: kind_name(&s.config),
        group_order: ctx.group().size(),
        lambda: ctx.lambda().to_string(),
        dim: ctx.dim(),
        ker_chi_z: ctx.ker_chi_z().len(),
        z_weight_is_e: z_weight_is_e(r).map_err(err)?,
        algebra: algebra.into(),
        standard_monomials: ctx.basis().standard().len(),
        rules: ctx.basis().system().rules().len(),
        validation,
    };
    let pairs = vec![
        ("realization", sum.realization.to_string()),
        ("group order", sum.group_order.to_string()),
        ("lambda", sum.lambda.clone()),
        ("dim", sum.dim.to_string()),
        ("|ker chi_z|", sum.ker_chi_z.to_string()),
        ("z in T(V)[e]", sum.z_weight_is_e.to_string()),
        ("algebra", sum.algebra.clone()),
        ("standard monomials", sum.standard_monomials.to_string()),
        ("rules", sum.rules.to_string()),
        (
            "realization checks",
            format!("{} passed, {} failed", sum.validation.summary.passed, sum.validation.summary.failed),
        ),
    ];
    let passed = sum.validation.all_passed() && sum.standard_monomials == 72;
    let text = pairs.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let rows = pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
    Ok(Output::new(&sum, passed).csv(&["key", "value"], rows).text(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Basis,
    Bibj,
    Tables,
    Integrals,
    Spherical,
    All,
}

pub fn verify(s: &Session, suite: Suite, g: &[String]) -> CmdResult<Output> {
    let report = match suite {
        Suite::Basis => suite_basis(s),
        Suite::Bibj => suite_bibj(s),
        Suite::Tables => suite_tables(s, &s.outside_weights(g)?)?,
        Suite::Integrals => suite_integrals(s, &s.catalog()?),
        Suite::Spherical => suite_spherical(s, &s.catalog()?),
        Suite::All => {
            let mut all = Report::new("all");
            all.merge(suite_basis(s));
            all.merge(suite_bibj(s));
            // The tables only exist for weights with f(g) ≠ 0.
            if !g.is_empty() || s.outside().is_some() {
                all.merge(suite_tables(s, &s.outside_weights(g)?)?);
            }
            let cat = s.catalog()?;
            all.merge(suite_integrals(s, &cat));
            all.merge(suite_spherical(s, &cat));
            all
        }
    };
    Ok(Output::from_report(&report))
}

fn suite_basis(s: &Session) -> Report {
    let ctx = &s.ctx;
    let mut report = Report::new("basis");
    report.merge(validate_realization(ctx.realization()));
    let basis = ctx.basis();
    let sys = basis.system();
    let standard = basis.standard();
    report.push(Check::from_result("72 standard monomials", standard.len() == 72, || {
        format!("{} standard monomials", standard.len())
    }));
    let overlaps = sys.unresolved_overlaps();
    report.push(Check::from_result("all overlaps resolve", overlaps.is_empty(), || {
        format!("{} unresolved, first at {}", overlaps.len(), overlaps[0].0)
    }));
    // 𝔹 independent in normal form, at each value F takes on the group.
    let mut seen = BTreeSet::new();
    for g in ctx.group().elements() {
        let v = ctx.f(g);
        if !seen.insert(v.to_string()) {
            continue;
        }
        let rows: Matrix = basis
            .words()
            .iter()
            .map(|w| {
                let nf = sys.normal_form_word(w);
                standard.iter().map(|st| nf.coeff(st).eval(v)).collect()
            })
            .collect();
        let r = rank(&rows);
        report.push(Check::from_result(format!("B independent at F = {v}"), r == 72, || format!("rank {r}")));
    }
    report
}

fn suite_bibj(s: &Session) -> Report {
    verify_bibj(&s.ctx).unwrap_or_else(|e| {
        let mut r = Report::new("bibj");
        r.push(Check::fail("b_i b_j products", e.to_string()));
        r
    })
}

fn table_jobs(s: &Session, gs: &[usize]) -> CmdResult<Vec<(TableReport, TableDiagnostics)>> {
    let jobs: Vec<(usize, usize)> = gs.iter().flat_map(|&g| (1..=6).map(move |i| (i, g))).collect();
    // Runs in parallel, collected in job order.
    jobs.par_iter()
        .map(|&(i, g)| {
            let t = verify_table(&s.ctx, i, g).map_err(err)?;
            let d = diagnose_table(&s.ctx, i, g).map_err(err)?;
            Ok((t, d))
        })
        .collect()
}

fn suite_tables(s: &Session, gs: &[usize]) -> CmdResult<Report> {
    let mut report = Report::new("tables");
    for (t, _) in table_jobs(s, gs)? {
        let mut r = t.to_report();
        if gs.len() > 1 {
            for c in &mut r.checks {
                c.name = format!("{} at {}", c.name, t.g);
            }
        }
        report.merge(r);
    }
    Ok(report)
}

fn suite_integrals(s: &Session, cat: &SimpleCatalog) -> Report {
    let ctx = &s.ctx;
    let grp = ctx.group();
    let mut report = Report::new("integrals");
    let left = left_integrals(ctx);
    let right = right_integrals(ctx);
    match &left {
        Ok(v) => report.push(Check::from_result("dim left integrals = 1", v.len() == 1, || format!("{}", v.len()))),
        Err(e) => report.push(Check::fail("dim left integrals = 1", e.to_string())),
    }
    match &right {
        Ok(v) => report.push(Check::from_result("dim right integrals = 1", v.len() == 1, || format!("{}", v.len()))),
        Err(e) => report.push(Check::fail("dim right integrals = 1", e.to_string())),
    }
    let g_top = ctx.realization().g_top();
    let at = grp.inv(g_top);
    let name = format!("left integral spans soc M_{}", grp.label(at));
    match left.as_deref() {
        Ok([lam]) => {
            let rad = Radical::new(ctx, cat);
            let socle_ok = radical_top_socle(&rad, &verma(ctx, at)).map_err(err).and_then(|rts| {
                let v = elem_vector(ctx, lam, at).map_err(err)?;
                match rts.socle.as_slice() {
                    [w] if is_multiple_of(w, &v) => Ok(()),
                    [_] => Err("socle is not spanned by the integral".into()),
                    other => Err(format!("socle has dimension {}", other.len())),
                }
            });
            report.push(match socle_ok {
                Ok(()) => Check::pass(name),
                Err(e) => Check::fail(name, e),
            });
        }
        _ => report.push(Check::fail(name, "no unique left integral")),
    }
    let name = format!("distinguished group-like is chi_{}", grp.label(g_top));
    report.push(match distinguished_grouplike(ctx) {
        Ok(a) => Check::from_result(name, a == g_top, || format!("chi_{}", grp.label(a))),
        Err(e) => Check::fail(name, e.to_string()),
    });
    let (ok, witness) = ctx.chi_g_is_algebra_map(g_top);
    report.push(Check::from_result(format!("chi_{} is an algebra map", grp.label(g_top)), ok, || {
        witness.unwrap_or_default()
    }));
    report
}

fn suite_spherical(s: &Session, cat: &SimpleCatalog) -> Report {
    let mut report = Report::new("spherical");
    match check_spherical(&s.ctx, cat) {
        Ok(sph) => {
            report.merge(sph.report);
            let note = format!("pivot involutory: {}", sph.pivot_involutory);
            report.push(if sph.spherical {
                Check::pass_with("spherical", note)
            } else {
                Check::fail("spherical", format!("criterion {}, traces {}; {note}", sph.criterion, sph.traces))
            });
        }
        Err(e) => report.push(Check::fail("spherical", e.to_string())),
    }
    report
}

#[derive(Serialize)]
struct SimpleEntry {
    kind: &'static str,
    dim: usize,
    support: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rep: Option<Rep>,
}

#[derive(Serialize)]
struct Rep {
    i: usize,
    g: String,
}

#[derive(Serialize)]
struct SimpleListing {
    one_dimensional: usize,
    twelve_dimensional: usize,
    classes: Vec<SimpleEntry>,
}

pub fn simples(s: &Session) -> CmdResult<Output> {
    let cat = s.catalog()?;
    let mut classes: Vec<SimpleEntry> = cat
        .one_dim
        .iter()
        .map(|&h| SimpleEntry { kind: "one-dimensional", dim: 1, support: vec![s.label(h)], rep: None })
        .collect();
    for c in &cat.twelve {
        classes.push(SimpleEntry {
            kind: "twelve-dimensional",
            dim: cat.modules[&c.rep].module.dim(),
            support: s.labels(&c.support),
            rep: Some(Rep { i: c.rep.0, g: s.label(c.rep.1) }),
        });
    }
    let listing = SimpleListing { one_dimensional: cat.one_dim.len(), twelve_dimensional: cat.twelve.len(), classes };
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for (k, c) in listing.classes.iter().enumerate() {
        let rep = c.rep.as_ref().map(|r| format!("L_{}^{}", r.i, r.g)).unwrap_or_else(|| format!("k_{}", c.support[0]));
        text.push(format!("[{k}] {} dim {} {rep}: {}", c.kind, c.dim, c.support.join(" ")));
        rows.push(vec![k.to_string(), c.kind.into(), c.dim.to_string(), rep, c.support.join(" ")]);
    }
    text.push(format!(
        "{} one-dimensional, {} twelve-dimensional classes",
        listing.one_dimensional, listing.twelve_dimensional
    ));
    Ok(Output::new(&listing, true).csv(&["class", "kind", "dim", "rep", "support"], rows).text(text))
}

#[derive(Serialize)]
struct Summand {
    class: usize,
    rep: String,
    dim: usize,
    multiplicity: usize,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum VermaShape {
    Free { rank: usize, top: Vec<String>, socle: Vec<String> },
    Semisimple { summands: Vec<Summand> },
}

#[derive(Serialize)]
struct VermaReport {
    g: String,
    dim: usize,
    #[serde(flatten)]
    shape: VermaShape,
    ok: bool,
}

fn decompose_one(s: &Session, cat: &SimpleCatalog, rad: &Radical<'_>, g: usize) -> CmdResult<VermaReport> {
    let ctx = &s.ctx;
    let m = verma(ctx, g);
    if ctx.f(g).is_zero() {
        let (cyclic, _) = m.generated(&[m.unit(ctx.empty_index())]).map_err(err)?;
        let rts = radical_top_socle(rad, &m).map_err(err)?;
        let want = ctx.group().mul(ctx.realization().g_top(), g);
        let ok = cyclic.dim() == m.dim() && rts.top_weights == vec![g] && rts.socle_weights == vec![want];
        let shape = VermaShape::Free {
            rank: m.dim() / ctx.basis().dim(),
            top: s.labels(&rts.top_weights),
            socle: s.labels(&rts.socle_weights),
        };
        return Ok(VermaReport { g: s.label(g), dim: m.dim(), shape, ok });
    }
    let d = decompose(ctx, cat, &m).map_err(err)?;
    let summands: Vec<Summand> = d
        .multiplicities
        .iter()
        .map(|(&class, &multiplicity)| {
            let (i, h) = cat.twelve[class].rep;
            Summand { class, rep: format!("L_{i}^{}", s.label(h)), dim: 12, multiplicity }
        })
        .collect();
    let total: usize = summands.iter().map(|x| x.dim * x.multiplicity).sum();
    let ok = d.residual.dim() == 0 && total == m.dim() && summands.len() == 6;
    Ok(VermaReport { g: s.label(g), dim: m.dim(), shape: VermaShape::Semisimple { summands }, ok })
}

pub fn decompose_cmd(s: &Session, labels: &[String]) -> CmdResult<Output> {
    let gs = labels.iter().map(|l| s.find(l)).collect::<CmdResult<Vec<_>>>()?;
    let cat = s.catalog()?;
    let rad = Radical::new(&s.ctx, &cat);
    let reports: Vec<VermaReport> =
        gs.par_iter().map(|&g| decompose_one(s, &cat, &rad, g)).collect::<CmdResult<_>>()?;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for r in &reports {
        match &r.shape {
            VermaShape::Free { rank, top, socle } => {
                text.push(format!(
                    "M_{}: free B(V)-module of rank {rank}, top k_{}, soc k_{}",
                    r.g,
                    top.join(" + k_"),
                    socle.join(" + k_")
                ));
                rows.push(vec![r.g.clone(), "free".into(), String::new(), top.join(" "), socle.join(" "), "72".into()]);
            }
            VermaShape::Semisimple { summands } => {
                let parts: Vec<String> = summands
                    .iter()
                    .map(|x| {
                        let power = if x.multiplicity == 1 { String::new() } else { format!("^{}", x.multiplicity) };
                        format!("[{}] {}{power}", x.class, x.rep)
                    })
                    .collect();
                text.push(format!("M_{} = {}", r.g, parts.join(" + ")));
                for x in summands {
                    rows.push(vec![
                        r.g.clone(),
                        "summand".into(),
                        x.class.to_string(),
                        x.rep.clone(),
                        x.multiplicity.to_string(),
                        x.dim.to_string(),
                    ]);
                }
            }
        }
        if !r.ok {
            text.push(format!("M_{}: unexpected structure", r.g));
        }
    }
    let ok = reports.iter().all(|r| r.ok);
    Ok(Output::new(&reports, ok)
        .csv(&["g", "kind", "class", "rep_or_top", "multiplicity_or_socle", "dim"], rows)
        .text(text))
}

#[derive(Serialize)]
struct TablesOutput {
    tables: Vec<TableReport>,
    diagnostics: Vec<TableDiagnostics>,
    action_cells: [usize; 2],
    weight_cells: [usize; 2],
}

pub fn tables(s: &Session, labels: &[String]) -> CmdResult<Output> {
    let gs = s.outside_weights(labels)?;
    let (tables, diagnostics): (Vec<_>, Vec<_>) = table_jobs(s, &gs)?.into_iter().unzip();
    let mut action = [0, 0];
    let mut weight = [0, 0];
    for t in &tables {
        let (a, at) = t.action_counts();
        let (w, wt) = t.weight_counts();
        action = [action[0] + a, action[1] + at];
        weight = [weight[0] + w, weight[1] + wt];
    }
    let passed = tables.iter().all(TableReport::core_passed);
    let rows = tables
        .iter()
        .flat_map(|t| {
            t.cells.iter().map(|c| {
                vec![t.g.clone(), c.table.clone(), c.row.clone(), c.column.clone(), c.expected.clone(), c.got.clone(), c.pass.to_string()]
            })
        })
        .collect();
    let mut text = Vec::new();
    for (t, d) in tables.iter().zip(&diagnostics) {
        let (a, at) = t.action_counts();
        let (w, wt) = t.weight_counts();
        text.push(format!("L{} at {} (f = {}): {a}/{at} action cells, {w}/{wt} weights", t.i, t.g, t.f_g));
        for c in t.cells.iter().filter(|c| !c.pass) {
            text.push(format!("  {} {}: printed {}, computed {}", c.row, c.column, c.expected, c.got));
        }
        if !d.ungraded_rows.is_empty() {
            text.push(format!("  ungraded printed vectors: {}", d.ungraded_rows.join(", ")));
        }
        if !d.ungraded_cells.is_empty() {
            text.push(format!("  ungraded printed actions: {}", d.ungraded_cells.join(", ")));
        }
        if !d.relation_failures.is_empty() {
            text.push(format!("  printed matrices violate: {}", d.relation_failures.join(", ")));
        }
        if let Some(h) = d.hom_to_computed {
            text.push(format!("  dim Hom(printed, computed) = {h}"));
        }
    }
    text.push(format!(
        "total: {}/{} action cells, {}/{} weights",
        action[0], action[1], weight[0], weight[1]
    ));
    let out = TablesOutput { tables, diagnostics, action_cells: action, weight_cells: weight };
    Ok(Output::new(&out, passed).csv(&["g", "table", "row", "column", "expected", "got", "pass"], rows).text(text))
}
