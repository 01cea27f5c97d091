//! JSON reports. Keys are sorted (serde_json's default map is ordered),
//! rationals are written as `"p/q"` strings and big integers as decimal
//! strings, so reports are byte-stable.

use serde_json::{json, Map, Value};

use crate::classify::{theorem3_harness, SolutionCensus, Theorem3Matrix, DEFAULT_HILBERT_BOUND};
use crate::error::Result;
use crate::graphs::{build_graphs, growth_and_gldim, is_acyclic_tournament, monomial_algebra_check, tournament_relabel};
use crate::harness::{theorem1_check, theorem2_check, SuiteReport};
use crate::orbits::{check_cyclic_condition, enumerate_orbits, monoid_dimension, symmetric_via_orbits, OrbitKind};
use crate::pbw::{certify_skew_polynomial_ring, check_pbw, is_skew_polynomial_type, pbw_search, DegLexOrder, PbwReport};
use crate::relations::{RelationSet, Scalar};
use crate::word::render;

use super::Presentation;

pub const FORMAT: u64 = 1;

pub fn rational(q: &Scalar) -> Value {
    Value::String(q.to_string())
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("sections are objects"),
    }
}

/// Adds `format`, `command` and `generators` to a section.
pub fn envelope(command: &str, names: &[String], body: Value) -> Value {
    let mut m = object(body);
    m.insert("format".into(), json!(FORMAT));
    m.insert("command".into(), json!(command));
    m.insert("generators".into(), json!(names));
    Value::Object(m)
}

fn degree_map(values: &[usize]) -> Value {
    Value::Object(
        values
            .iter()
            .enumerate()
            .map(|(m, d)| (m.to_string(), json!(d)))
            .collect(),
    )
}

fn relation_strings(rs: &RelationSet) -> Vec<String> {
    rs.relations().iter().map(|r| r.render(rs.names())).collect()
}

/// Predicates of `(X, r)` and of the relations.
pub fn check_section(p: &Presentation) -> Result<Value> {
    let qs = p.quadratic_set();
    let mut m = Map::new();
    m.insert("predicates".into(), serde_json::to_value(qs.predicates()).unwrap());
    match p.relation_set() {
        Ok(rs) => {
            m.insert("relations".into(), json!(relation_strings(&rs)));
            m.insert("quantum_binomial".into(), json!(rs.is_quantum_binomial()));
            m.insert("yang_baxter".into(), json!(rs.check_r_yang_baxter()));
            m.insert("coefficients_one".into(), json!(rs.all_coefficients_one()));
        }
        Err(_) => {
            m.insert("relations".into(), Value::Null);
            m.insert("quantum_binomial".into(), json!(qs.is_quantum_binomial()));
            m.insert("yang_baxter".into(), json!(qs.predicates().braided));
            m.insert("coefficients_one".into(), json!(true));
        }
    }
    Ok(Value::Object(m))
}

/// Orbits of `D_m` on `X^m`, with the degree-3 profile when `m = 3`.
pub fn orbits_section(p: &Presentation, degree: usize) -> Result<Value> {
    let qs = p.quadratic_set();
    let names = qs.names();
    let c = enumerate_orbits(&qs, degree)?;
    let list: Vec<Value> = c
        .orbits()
        .iter()
        .map(|o| {
            json!({
                "representative": render(names, &o.representative),
                "size": o.size,
                "kind": o.kind,
            })
        })
        .collect();
    let mut m = Map::new();
    m.insert("degree".into(), json!(degree));
    m.insert("count".into(), json!(c.len()));
    m.insert("total_size".into(), json!(c.total_size()));
    m.insert("list".into(), Value::Array(list));
    if degree == 3 {
        let n = qs.n();
        let sum: usize = c.type_ii_sizes().iter().sum::<usize>() + c.square_free_sizes().iter().sum::<usize>();
        m.insert(
            "kinds".into(),
            json!({
                "diagonal": c.count_kind(OrbitKind::Diagonal),
                "type_ii": c.count_kind(OrbitKind::TypeIi),
                "square_free": c.count_kind(OrbitKind::SquareFree),
                "other": c.count_kind(OrbitKind::Other),
            }),
        );
        let mut ii = c.type_ii_sizes();
        ii.sort();
        let mut sf = c.square_free_sizes();
        sf.sort();
        m.insert("type_ii_sizes".into(), json!(ii));
        m.insert("square_free_sizes".into(), json!(sf));
        m.insert("q".into(), json!(c.q()));
        m.insert(
            "counting_identity".into(),
            json!(c.count_kind(OrbitKind::Other) == 0 && n * n * n == n + sum),
        );
        let qb = qs.is_quantum_binomial();
        m.insert(
            "symmetric_via_orbits".into(),
            if qb { json!(symmetric_via_orbits(&qs)?) } else { Value::Null },
        );
        m.insert(
            "cyclic_condition".into(),
            if qb { json!(check_cyclic_condition(&qs)?) } else { Value::Null },
        );
    }
    Ok(json!({ "orbits": Value::Object(m) }))
}

/// `dim A_m` by rank and, for monoid algebras, by orbit counting; Koszul
/// dual dimensions and the degree-3 formula.
pub fn dims_section(p: &Presentation, max: usize) -> Result<Value> {
    let rs = p.relation_set()?;
    let n = rs.n() as i64;
    let dims = rs.space().dims(max)?;
    let dual = rs.koszul_dual_relations();
    let dual_dims = dual.dims(max)?;
    let mut m = Map::new();
    m.insert("dim_A".into(), degree_map(&dims));
    m.insert("dim_A_dual".into(), degree_map(&dual_dims));
    if p.is_set_theoretic() {
        let qs = p.quadratic_set();
        let monoid: Vec<usize> = (0..=max).map(|d| monoid_dimension(&qs, d)).collect::<Result<_>>()?;
        m.insert("dim_A_monoid".into(), degree_map(&monoid));
        m.insert("oracles_agree".into(), json!(monoid == dims));
    }
    let d2 = rs.dim_a(2)? as i64;
    let d3 = rs.dim_a(3)? as i64;
    let formula = n * n * n - 2 * n * d2 + d3;
    let dual3 = dual.dim(3)? as i64;
    m.insert(
        "dual_formula".into(),
        json!({ "formula": formula, "rank": dual3, "holds": formula == dual3 }),
    );
    m.insert("quantum_grassmann_dual".into(), json!(dual.is_quantum_grassmann()?));
    Ok(Value::Object(m))
}

fn pbw_report_value(rs: &RelationSet, rep: &PbwReport) -> Result<Value> {
    let names = rs.names();
    let failing = rep.failing_overlap.as_ref().map(|f| {
        json!({
            "overlap": render(names, &f.overlap),
            "via_left": { "coeff": rational(&f.via_left.0), "word": render(names, &f.via_left.1) },
            "via_right": { "coeff": rational(&f.via_right.0), "word": render(names, &f.via_right.1) },
        })
    });
    let oriented: Vec<String> = rep
        .oriented
        .iter()
        .map(|o| {
            let lead = render(names, &[o.lead.0, o.lead.1]);
            let tail = render(names, &[o.tail.0, o.tail.1]);
            if o.coeff == Scalar::from_integer(1.into()) {
                format!("{lead} -> {tail}")
            } else {
                format!("{lead} -> ({}){tail}", o.coeff)
            }
        })
        .collect();
    Ok(json!({
        "order": rep.order.render(names),
        "is_pbw": rep.is_pbw,
        "rewriting_rules": oriented,
        "obstructions": rep.obstructions.iter().map(|&(a, b)| render(names, &[a, b])).collect::<Vec<_>>(),
        "overlaps": rep.render_overlaps(names),
        "failing_overlap": failing,
        "skew_polynomial_type": is_skew_polynomial_type(rs, &rep.order)?,
    }))
}

/// One enumeration.
pub fn pbw_order_section(p: &Presentation, order: &DegLexOrder) -> Result<Value> {
    let rs = p.relation_set()?;
    let rep = check_pbw(&rs, order)?;
    Ok(json!({ "pbw": pbw_report_value(&rs, &rep)? }))
}

/// Every enumeration.
pub fn pbw_search_section(p: &Presentation) -> Result<Value> {
    let rs = p.relation_set()?;
    let names = rs.names();
    let orders: Vec<String> = pbw_search(&rs)?.iter().map(|o| o.render(names)).collect();
    Ok(json!({
        "pbw_order_count": orders.len(),
        "pbw_orders": orders,
        "skew_polynomial_certificate": certify_skew_polynomial_ring(&rs)?.map(|o| o.render(names)),
    }))
}

/// `Γ_N` and `Γ_W` for the leading monomials under `order`.
pub fn graphs_section(p: &Presentation, order: &DegLexOrder, bound: usize) -> Result<Value> {
    let rs = p.relation_set()?;
    let names = rs.names();
    let n = rs.n();
    let rep = check_pbw(&rs, order)?;
    let (gn, gw) = build_graphs(n, &rep.obstructions);
    let g = growth_and_gldim(&gn, &gw, bound);
    let edges = |e: &[(usize, usize)]| -> Vec<String> {
        e.iter().map(|&(a, b)| format!("{} -> {}", names[a], names[b])).collect()
    };
    let relabel = tournament_relabel(&gw)
        .ok()
        .map(|y| y.iter().map(|&x| names[x].clone()).collect::<Vec<_>>());
    let verdict = monomial_algebra_check(n, &rep.obstructions, bound)?;
    Ok(json!({
        "graphs": {
            "order": order.render(names),
            "is_pbw": rep.is_pbw,
            "normal_edges": edges(&gn.edges()),
            "obstruction_edges": edges(&gw.edges()),
            "polynomial_growth": g.polynomial,
            "growth_degree": g.degree,
            "gldim": g.gldim,
            "hilbert": g.hilbert.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            "acyclic_tournament": is_acyclic_tournament(&gw),
            "tournament_relabel": relabel,
            "monomial_algebra": verdict,
        }
    }))
}

fn theorem3_value(m: &Theorem3Matrix) -> Value {
    let mut v = object(serde_json::to_value(m).unwrap());
    v.insert("all_equal".into(), json!(m.all_equal()));
    Value::Object(v)
}

/// Theorem matrices for a quantum binomial algebra.
pub fn harness_section(p: &Presentation, bound: usize) -> Result<Value> {
    let rs = p.relation_set()?;
    let mut theorem1 = Vec::new();
    for ord in pbw_search(&rs)? {
        let v = theorem1_check(&rs, &check_pbw(&rs, &ord)?, bound)?;
        theorem1.push(serde_json::to_value(v).unwrap());
    }
    let t2 = theorem2_check(&rs)?;
    let t3 = theorem3_harness(&rs, bound)?;
    Ok(json!({
        "harness": {
            "theorem1": theorem1,
            "theorem2": t2,
            "theorem3": theorem3_value(&t3),
        }
    }))
}

fn merge(into: &mut Map<String, Value>, section: Value) {
    into.extend(object(section));
}

/// Everything for one presentation, for golden files.
pub fn full_report(p: &Presentation, bound: usize) -> Result<Value> {
    let mut m = Map::new();
    merge(&mut m, check_section(p)?);
    merge(&mut m, orbits_section(p, 3)?);
    merge(&mut m, dims_section(p, bound)?);
    let qb = p.relation_set().map(|rs| rs.is_quantum_binomial()).unwrap_or(false);
    if qb {
        merge(&mut m, pbw_search_section(p)?);
        let rs = p.relation_set()?;
        if let Some(first) = pbw_search(&rs)?.first() {
            merge(&mut m, graphs_section(p, first, bound)?);
        }
        merge(&mut m, harness_section(p, bound)?);
    }
    Ok(envelope("report", p.names(), Value::Object(m)))
}

pub fn census_section(c: &SolutionCensus) -> Value {
    let reps: Vec<Value> = c
        .representatives
        .iter()
        .map(|r| {
            let mut inv = object(serde_json::to_value(&r.invariants).unwrap());
            let rs = RelationSet::from_set(&r.set).expect("census sets are involutive");
            inv.insert("relations".into(), json!(relation_strings(&rs)));
            Value::Object(inv)
        })
        .collect();
    json!({
        "n": c.n,
        "total_quantum_binomial": c.total_quantum_binomial,
        "total_symmetric": c.total_symmetric,
        "classes": c.class_count(),
        "symmetric_classes": c.symmetric_class_count(),
        "representatives": reps,
    })
}

pub fn suite_section(s: &SuiteReport) -> Value {
    let mut v = object(serde_json::to_value(s).unwrap());
    v.insert("passed".into(), json!(s.passed()));
    Value::Object(v)
}

/// Default degree bound for reports.
pub const DEFAULT_BOUND: usize = DEFAULT_HILBERT_BOUND;
