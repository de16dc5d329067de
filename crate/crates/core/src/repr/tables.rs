//! The explicit bases `c_1, …, c_12` of `L_1^g, …, L_6^g`, the action of the
//! generators on them and their weights, checked cell by cell.

use serde::Serialize;

use super::module::Module;
use super::simple::{hom_dim, simple_module};
use super::idempotents::idempotent_set;
use crate::algebra::{apply_cols, AlgebraContext};
use crate::error::ReprError;
use crate::linalg::{vec_add_scaled, Span, Vector};
use crate::rack::F4;
use crate::realization::{epimorphism_to_f4c6, semidirect_index};
use crate::report::{Check, Report};
use crate::rewrite::{FreeElem, Word};
use crate::scalars::{Cyclotomic, FPoly};

const FIXTURE: &str = include_str!("tables.txt");

/// `coefficient · c_k` or `coefficient · e_k`; the coefficient is `±1` or `±F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Scaled {
    pub coeff: FPoly,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRowSpec {
    pub name: String,
    pub vector_text: String,
    pub vector: FreeElem,
    pub annotation: Option<Scaled>,
    /// `x_0, x_1, x_ω, x_ω²` on this vector; `None` means 0.
    pub actions: [Option<Scaled>; 4],
    /// `(j, s)` for the weight `(j, t^s) g`.
    pub weight: (F4, usize),
    pub weight_text: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableSpec {
    pub i: usize,
    pub rows: Vec<TableRowSpec>,
}

/// One compared cell, in CSV order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub table: String,
    pub row: String,
    pub column: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub i: usize,
    pub g: String,
    pub f_g: String,
    pub cells: Vec<TableCell>,
}

impl TableReport {
    fn count(&self, columns: &[&str]) -> (usize, usize) {
        let cells: Vec<_> = self.cells.iter().filter(|c| columns.contains(&c.column.as_str())).collect();
        (cells.iter().filter(|c| c.pass).count(), cells.len())
    }

    /// (passed, total) over the 48 action cells.
    pub fn action_counts(&self) -> (usize, usize) {
        self.count(&["x0", "x1", "xw", "xw2"])
    }

    /// (passed, total) over the 12 weight cells.
    pub fn weight_counts(&self) -> (usize, usize) {
        self.count(&["weight"])
    }

    pub fn annotation_cells(&self) -> Vec<&TableCell> {
        self.cells.iter().filter(|c| c.column == "annotation").collect()
    }

    /// Action and weight cells, plus the structural checks (membership, independence).
    pub fn core_passed(&self) -> bool {
        self.cells.iter().filter(|c| c.column != "annotation").all(|c| c.pass)
    }

    pub fn csv_header() -> &'static str {
        "table,row,column,expected,got,pass"
    }

    pub fn csv_lines(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|c| format!("{},{},{},{},{},{}", c.table, c.row, c.column, csv(&c.expected), csv(&c.got), c.pass))
            .collect()
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new(format!("table L{}", self.i));
        for c in &self.cells {
            let name = format!("L{} {} {}: {}", self.i, c.row, c.column, c.expected);
            r.push(Check::from_result(name, c.pass, || format!("got {}", c.got)));
        }
        r
    }
}

fn csv(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn fixture_err(line: &str, what: &str) -> ReprError {
    ReprError::Fixture(format!("{what} in `{line}`"))
}

fn parse_f4(t: &str) -> Option<F4> {
    match t {
        "0" => Some(F4::ZERO),
        "1" => Some(F4::ONE),
        "w" => Some(F4::OMEGA),
        "w2" => Some(F4::OMEGA2),
        _ => None,
    }
}

fn parse_weight(t: &str) -> Option<(F4, usize)> {
    let inner = t.strip_prefix('(')?.strip_suffix(')')?;
    let (j, s) = inner.split_once(',')?;
    let s = match s {
        "1" => 0,
        "t" => 1,
        _ => s.strip_prefix("t^")?.parse().ok()?,
    };
    Some((parse_f4(j)?, s))
}

/// Signed terms `[±] [f] token`, returned as (coefficient, token).
fn signed_terms<'a>(text: &'a str, line: &str) -> Result<Vec<(FPoly, &'a str)>, ReprError> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut with_f = false;
    for tok in text.split_whitespace() {
        match tok {
            "+" => {}
            "-" => sign = -sign,
            "f" => with_f = true,
            _ => {
                let c = if with_f { FPoly::f() } else { FPoly::one() };
                out.push((c.scale(&crate::scalars::rat(sign)), tok));
                sign = 1;
                with_f = false;
            }
        }
    }
    if with_f || sign != 1 {
        return Err(fixture_err(line, "dangling sign or f"));
    }
    Ok(out)
}

fn parse_scaled(text: &str, prefix: char, line: &str) -> Result<Option<Scaled>, ReprError> {
    if text.trim() == "0" {
        return Ok(None);
    }
    let terms = signed_terms(text, line)?;
    let [(coeff, tok)] = terms.as_slice() else { return Err(fixture_err(line, "expected a single term")) };
    let index = tok
        .strip_prefix(prefix)
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| fixture_err(line, "bad basis reference"))?;
    Ok(Some(Scaled { coeff: coeff.clone(), index }))
}

/// Parses the fixture into six tables.
pub fn table_specs() -> Result<Vec<TableSpec>, ReprError> {
    let mut tables: Vec<TableSpec> = Vec::new();
    for line in FIXTURE.lines().map(str::trim) {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# L") {
            let i = rest.trim().parse().map_err(|_| fixture_err(line, "bad table header"))?;
            tables.push(TableSpec { i, rows: Vec::new() });
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, vector, a0, a1, a2, a3, weight] = cells[..] else {
            return Err(fixture_err(line, "expected 7 columns"));
        };
        let table = tables.last_mut().ok_or_else(|| fixture_err(line, "row before any table"))?;
        let (vec_text, annotation) = match vector.split_once('=') {
            Some((v, a)) => (v.trim(), Some(parse_scaled(a, 'e', line)?.ok_or_else(|| fixture_err(line, "zero annotation"))?)),
            None => (vector, None),
        };
        let mut elem = FreeElem::zero();
        for (c, tok) in signed_terms(vec_text, line)? {
            let w = Word::parse(tok).map_err(|_| fixture_err(line, "bad word"))?;
            elem.add_term(w, &c);
        }
        table.rows.push(TableRowSpec {
            name: name.to_string(),
            vector_text: vec_text.to_string(),
            vector: elem,
            annotation,
            actions: [
                parse_scaled(a0, 'c', line)?,
                parse_scaled(a1, 'c', line)?,
                parse_scaled(a2, 'c', line)?,
                parse_scaled(a3, 'c', line)?,
            ],
            weight: parse_weight(weight).ok_or_else(|| fixture_err(line, "bad weight"))?,
            weight_text: weight.to_string(),
        });
    }
    if tables.len() != 6 || tables.iter().enumerate().any(|(k, t)| t.i != k + 1 || t.rows.len() != 12) {
        return Err(ReprError::Fixture("expected six tables of twelve rows".into()));
    }
    Ok(tables)
}

/// Renders `Σ coeff_k c_k` with exact coefficients.
pub fn render_combination(coeffs: &[Cyclotomic], symbol: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({c}) {symbol}{}", k + 1))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Compares table `i` with `L_i^g` computed from scratch.
pub fn verify_table(ctx: &AlgebraContext, i: usize, g: usize) -> Result<TableReport, ReprError> {
    let fg = ctx.f(g).clone();
    if fg.is_zero() {
        return Err(ReprError::Precondition(format!("f({}) = 0", ctx.group().label(g))));
    }
    let spec = table_specs()?.into_iter().nth(i.wrapping_sub(1)).ok_or_else(|| ReprError::Precondition(format!("no table L{i}")))?;
    let grp = ctx.group();
    let pi = epimorphism_to_f4c6(ctx.realization())?;
    let simple = simple_module(ctx, i, g)?;
    let mut in_l = Span::new(ctx.basis().dim());
    for v in &simple.embedding {
        in_l.insert(v.clone());
    }
    let idem = idempotent_set(ctx, g)?.members;
    let table = format!("L{i}");
    let mut cells = Vec::new();
    let mut cell = |row: &str, column: &str, expected: String, got: String, pass: bool| {
        cells.push(TableCell { table: table.clone(), row: row.into(), column: column.into(), expected, got, pass });
    };

    let c: Vec<Vector> = spec.rows.iter().map(|r| ctx.free_vector(&r.vector, g)).collect();
    let mut c_span = Span::new(ctx.basis().dim());
    // Insert every vector so one dependent row does not hide the rest.
    let inserted = c.iter().filter(|v| c_span.insert((*v).clone())).count();
    let independent = inserted == c.len();
    cell("all", "independent", "12".into(), c_span.dim().to_string(), independent);

    for (k, row) in spec.rows.iter().enumerate() {
        let inside = in_l.contains(&c[k]);
        cell(&row.name, "in module", row.vector_text.clone(), if inside { "inside" } else { "outside" }.into(), inside);

        for a in F4::ALL {
            let got_vec = apply_cols(ctx.left_letter(a, g), &c[k]);
            let mut expect_vec = vec![Cyclotomic::zero(); got_vec.len()];
            let mut expect_coords = vec![Cyclotomic::zero(); 12];
            if let Some(s) = &row.actions[a.index()] {
                let coeff = s.coeff.eval(&fg);
                vec_add_scaled(&mut expect_vec, &c[s.index - 1], &coeff);
                expect_coords[s.index - 1] = coeff;
            }
            let got = match c_span.express(&got_vec) {
                Some(coords) => render_combination(&coords, "c"),
                None => "outside span".into(),
            };
            cell(
                &row.name,
                &format!("x{}", super::module::letter_name(a)),
                render_combination(&expect_coords, "c"),
                got,
                got_vec == expect_vec,
            );
        }

        let expected_w = pi.target().label(semidirect_index(row.weight.0, row.weight.1, 6)).to_string();
        let got_w = match verma_weight(ctx, &c[k], g) {
            Some(w) => match pi.apply(grp.mul(w, grp.inv(g))) {
                Some(p) => pi.target().label(p).to_string(),
                None => format!("{} outside G'", grp.label(w)),
            },
            None => "not homogeneous".into(),
        };
        let pass = got_w == expected_w;
        cell(&row.name, "weight", expected_w, got_w, pass);

        if let Some(ann) = &row.annotation {
            let e = super::simple::elem_vector(ctx, &idem[ann.index - 1], g)?;
            let expected_scalar = ann.coeff.eval(&fg);
            let mut expect_vec = vec![Cyclotomic::zero(); e.len()];
            vec_add_scaled(&mut expect_vec, &e, &expected_scalar);
            let got = match proportional(&c[k], &e) {
                Some(s) => format!("({}) f e{}", &s * &fg.inv()?, ann.index),
                None => format!("not a multiple of e{}", ann.index),
            };
            let expected = format!("({}) f e{}", &expected_scalar * &fg.inv()?, ann.index);
            cell(&row.name, "annotation", expected, got, c[k] == expect_vec);
        }
    }
    Ok(TableReport { i, g: grp.label(g).to_string(), f_g: fg.to_string(), cells })
}

/// Checks of a printed table that do not use the computed `L_i^g`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TableDiagnostics {
    pub i: usize,
    /// Rows whose vector mixes degrees, with `deg x_a = 1` and `deg F = 6`.
    pub ungraded_rows: Vec<String>,
    /// Action cells `x_a c_k = ± [f] c_l` violating `deg c_l + 6 deg(coeff) = deg c_k + 1`.
    pub ungraded_cells: Vec<String>,
    /// Defining relations violated by the printed action matrices.
    pub relation_failures: Vec<String>,
    /// `dim Hom` from the printed module to the computed one, when the printed
    /// matrices form a module.
    pub hom_to_computed: Option<usize>,
}

fn row_degree(v: &FreeElem) -> Option<usize> {
    let mut d = None;
    for (w, c) in v.terms() {
        let k = w.len() + 6 * c.degree()?;
        match d {
            None => d = Some(k),
            Some(x) if x != k => return None,
            _ => {}
        }
    }
    d
}

/// The grading test, the defining relations on the printed matrices and, if
/// those hold, `dim Hom(printed, computed)`.
pub fn diagnose_table(ctx: &AlgebraContext, i: usize, g: usize) -> Result<TableDiagnostics, ReprError> {
    let fg = ctx.f(g).clone();
    let spec = table_specs()?.into_iter().nth(i.wrapping_sub(1)).ok_or_else(|| ReprError::Precondition(format!("no table L{i}")))?;
    let mut out = TableDiagnostics { i, ..Default::default() };
    let degrees: Vec<Option<usize>> = spec.rows.iter().map(|r| row_degree(&r.vector)).collect();
    for (row, d) in spec.rows.iter().zip(&degrees) {
        if d.is_none() {
            out.ungraded_rows.push(row.name.clone());
        }
    }
    for (k, row) in spec.rows.iter().enumerate() {
        for a in F4::ALL {
            let Some(s) = &row.actions[a.index()] else { continue };
            if let (Some(dk), Some(dl), Some(dc)) = (degrees[k], degrees[s.index - 1], s.coeff.degree()) {
                if dl + 6 * dc != dk + 1 {
                    out.ungraded_cells.push(format!("{} x{}", row.name, super::module::letter_name(a)));
                }
            }
        }
    }

    // Weights lifted to G: the unique preimage of (j, t^s) in the subgroup generated by the g_i, times g.
    let grp = ctx.group();
    let pi = epimorphism_to_f4c6(ctx.realization())?;
    let gens: Vec<usize> = F4::ALL.iter().map(|&a| ctx.realization().g(a)).collect();
    let sub = grp.generated_subgroup(&gens);
    let mut weights = Vec::new();
    for row in &spec.rows {
        let target = semidirect_index(row.weight.0, row.weight.1, 6);
        let lifts: Vec<usize> = pi.fibre(target).iter().copied().filter(|h| sub.contains(h)).collect();
        let [h] = lifts[..] else {
            return Err(ReprError::Precondition(format!("{} lifts of {}", lifts.len(), row.weight_text)));
        };
        weights.push(grp.mul(h, g));
    }
    let actions = F4::ALL.map(|a| {
        spec.rows
            .iter()
            .map(|row| match &row.actions[a.index()] {
                Some(s) => vec![(s.index - 1, s.coeff.eval(&fg))],
                None => Vec::new(),
            })
            .collect::<Vec<_>>()
    });
    let printed = Module::new(weights, actions, spec.rows.iter().map(|r| r.name.clone()).collect())?;
    for c in printed.check(ctx).checks.iter().filter(|c| !c.passed()) {
        out.relation_failures.push(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
    }
    if out.relation_failures.is_empty() {
        out.hom_to_computed = Some(hom_dim(&printed, &simple_module(ctx, i, g)?.module));
    }
    Ok(out)
}

/// The weight of a homogeneous vector of `M_g`.
fn verma_weight(ctx: &AlgebraContext, v: &[Cyclotomic], g: usize) -> Option<usize> {
    let mut w = None;
    for (b, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let h = ctx.group().mul(ctx.b_weight(b), g);
        match w {
            None => w = Some(h),
            Some(x) if x != h => return None,
            _ => {}
        }
    }
    w
}

/// `s` with `v = s u`, if any.
fn proportional(v: &[Cyclotomic], u: &[Cyclotomic]) -> Option<Cyclotomic> {
    let k = u.iter().position(|x| !x.is_zero())?;
    let s = &v[k] * &u[k].inv().ok()?;
    let ok = v.iter().zip(u).all(|(a, b)| *a == &s * b);
    ok.then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::module::tests::extended;

    #[test]
    fn fixture_parses() {
        let t = table_specs().unwrap();
        assert_eq!(t.len(), 6);
        let r = &t[0].rows[0];
        assert_eq!(r.actions[2], Some(Scaled { coeff: FPoly::f().scale(&crate::scalars::rat(-1)), index: 6 }));
        assert_eq!(r.weight, (F4::ZERO, 3));
        assert_eq!(t[1].rows[4].annotation.as_ref().unwrap().index, 2);
        assert_eq!(t.iter().flat_map(|t| &t.rows).filter(|r| r.annotation.is_some()).count(), 6);
    }

    #[test]
    fn single_cells() {
        let ctx = extended();
        let g = ctx.group().elements().find(|g| !ctx.in_ker(*g)).unwrap();
        let r1 = verify_table(&ctx, 1, g).unwrap();
        let cell = |r: &TableReport, row: &str, col: &str| r.cells.iter().find(|c| c.row == row && c.column == col).unwrap().clone();
        assert!(cell(&r1, "c2", "xw").pass);
        assert!(cell(&r1, "c1", "xw").pass);
        let r6 = verify_table(&ctx, 6, g).unwrap();
        assert!(cell(&r6, "c7", "x0").pass);
        let r4 = verify_table(&ctx, 4, g).unwrap();
        assert!(cell(&r4, "c10", "annotation").pass);
    }
}
