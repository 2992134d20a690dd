//! The `compute`, `expand` and `verify` verbs.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use schubertkit::poly::gamma::degree_cap_from_env;
use schubertkit::poly::{canonical, normalize, to_json_terms, Poly, Ring};
use schubertkit::schubert::expansion::{
    splitting_expand, stanley_coefficients_a, stanley_coefficients_c, stanley_coefficients_d, Splitting,
};
use schubertkit::schubert::verify::{key_identity_verify, run_suite, with_jobs, Report};
use schubertkit::schubert::{eta, is_increasing_up_to, schubert_with_cap, stanley, theta, StanleyVariant, Type};
use schubertkit::symfunc::schur_s;
use schubertkit::weyl::{FlagSequence, Partition, TypedPartition, WeylElement};
use schubertkit::{Error, Result};

use crate::args::{Cli, Expand, Format, Target, Verify};

/// Outcome of a verb that ran to completion.
pub enum Status {
    Pass,
    Fail,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_type(s: &str) -> Result<Type> {
    s.parse()
}

pub fn parse_element(ty: Type, s: &str) -> Result<WeylElement> {
    let w = WeylElement::parse(ty.kind(), s)?;
    if ty == Type::A && !w.is_unsigned() {
        return Err(usage(format!("{w} is not a permutation")));
    }
    Ok(w)
}

/// A flag sequence such as "b,2,3"; `b` (or `□`) stands for the type D box.
pub fn parse_flags(ty: Type, s: &str) -> Result<FlagSequence> {
    let values = s
        .split(',')
        .map(|t| match t.trim() {
            "b" | "□" => Ok(0),
            t => t.parse::<u32>().map_err(|_| usage(format!("bad flag entry {t:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    FlagSequence::from_values(ty.kind(), &values)
}

fn cap(cli: &Cli) -> u32 {
    cli.degree_cap.unwrap_or_else(degree_cap_from_env)
}

fn emit(cli: &Cli, text: String, value: Value) {
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn leading_y(t: &Target) -> Option<usize> {
    t.k.or(t.m)
}

fn element(t: &Target, ty: Type) -> Result<WeylElement> {
    let w = t.w.as_deref().ok_or_else(|| usage("--w is required"))?;
    parse_element(ty, w)
}

pub fn compute(cli: &Cli, t: &Target) -> Result<Status> {
    let ty = parse_type(&t.ty)?;
    let (label, json_head, value) = if let Some(shape) = &t.shape {
        shape_value(t, ty, shape)?
    } else {
        let w = element(t, ty)?;
        if t.k.is_some() || t.l.is_some() || t.m.is_some() {
            let (k, l) = (leading_y(t).unwrap_or(0), t.l.unwrap_or(0));
            let value = stanley(ty, &w, StanleyVariant::RestrictedMixed { k, l })?;
            let head = json!({"type": ty.to_string(), "w": w.to_string(), "k": k, "l": l});
            (format!("stanley {ty} w={w} k={k} l={l}"), head, value)
        } else {
            let mut s = schubert_with_cap(ty, &w, t.double, cap(cli))?;
            s.value = canonical(&s.value);
            let value = serde_json::to_value(s.to_json()).expect("serializable");
            emit(cli, format!("schubert {ty} w={w} = {}", s.value), value);
            return Ok(Status::Pass);
        }
    };
    let value = canonical(&value);
    let mut json = json_head;
    json["terms"] = serde_json::to_value(to_json_terms(&value)).expect("serializable");
    emit(cli, format!("{label} = {value}"), json);
    Ok(Status::Pass)
}

fn shape_value(t: &Target, ty: Type, shape: &str) -> Result<(String, Value, Poly)> {
    match ty {
        Type::A => {
            let lam: Partition = shape.parse()?;
            let (m, l) = (leading_y(t).unwrap_or(lam.len()), t.l.unwrap_or(0));
            let value = schur_s(&lam.padded(lam.len()), m, l);
            Ok((format!("schur {lam} m={m} l={l}"), json!({"type": "A", "shape": lam.to_string(), "m": m, "l": l}), value))
        }
        Type::C => {
            let lam: Partition = shape.parse()?;
            let k = leading_y(t).unwrap_or(0) as u32;
            let value = theta(&lam, k, t.double)?;
            let head = json!({"type": "C", "shape": lam.to_string(), "k": k, "double": t.double});
            Ok((format!("theta {lam} k={k}"), head, value))
        }
        Type::D => {
            let parsed: TypedPartition = shape.parse()?;
            let k = leading_y(t).unwrap_or(0) as u32;
            let tp = TypedPartition::new(parsed.shape, k, parsed.ty)?;
            let value = eta(&tp, t.double)?;
            let head = json!({"type": "D", "shape": tp.to_string(), "k": k, "double": t.double});
            Ok((format!("eta {tp} k={k}"), head, value))
        }
        Type::B => Err(usage("shapes are supported in types A, C and D")),
    }
}

fn counts<K: ToString>(m: BTreeMap<K, i64>) -> BTreeMap<String, i64> {
    m.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn require_increasing(w: &WeylElement, k: usize) -> Result<()> {
    if !is_increasing_up_to(w, k) {
        return Err(Error::HypothesisViolated(format!("{w} is not increasing up to {k}")));
    }
    Ok(())
}

pub fn splitting_json(s: &Splitting) -> Value {
    let terms: BTreeMap<String, i64> = s
        .terms
        .iter()
        .map(|(shapes, c)| (shapes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" * "), *c))
        .collect();
    json!({"type": s.ty.to_string(), "w": s.element.to_string(), "a": s.a, "b": s.b, "terms": terms})
}

fn map_text(m: &BTreeMap<String, Value>) -> String {
    m.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n")
}

pub fn expand(cli: &Cli, e: &Expand) -> Result<Status> {
    let t = &e.target;
    let ty = parse_type(&t.ty)?;
    let w = element(t, ty)?;
    let k = leading_y(t).unwrap_or(0);
    let coeffs: BTreeMap<String, Value> = match (e.basis.as_str(), ty) {
        ("schur", _) => counts(stanley_coefficients_a(&w)?).into_iter().map(|(k, v)| (k, v.into())).collect(),
        ("theta", Type::C) => {
            require_increasing(&w, k)?;
            counts(stanley_coefficients_c(&w, k as u32)?).into_iter().map(|(k, v)| (k, v.into())).collect()
        }
        ("eta", Type::D) => {
            require_increasing(&w, k)?;
            counts(stanley_coefficients_d(&w, k as u32)?).into_iter().map(|(k, v)| (k, v.into())).collect()
        }
        ("q" | "p", Type::B | Type::C | Type::D) => {
            let ring = if e.basis == "q" { Ring::Gamma } else { Ring::GammaPrime };
            let s = schubert_with_cap(ty, &w, t.double, u32::MAX)?;
            let out = normalize(&s.value, ring, cap(cli))?;
            if cli.format == Format::Text {
                let lines: Vec<String> = out.iter().map(|(l, c)| format!("{l}: {c}")).collect();
                println!("{}", lines.join("\n"));
                return Ok(Status::Pass);
            }
            out.into_iter()
                .map(|(l, c)| (l.to_string(), serde_json::to_value(to_json_terms(&c)).expect("serializable")))
                .collect()
        }
        ("split", _) => {
            let a = match &e.flags_a {
                Some(s) => parse_flags(ty, s)?,
                None => FlagSequence::minimal_for(&w),
            };
            let b = match &e.flags_b {
                Some(s) => parse_flags(ty, s)?,
                None => FlagSequence::minimal_for(&w.inverse()),
            };
            let s = splitting_expand(ty, &w, &a, &b)?;
            let value = splitting_json(&s);
            let text = value["terms"].as_object().expect("object").iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>();
            emit(cli, text.join("\n"), value);
            return Ok(Status::Pass);
        }
        (basis, ty) => return Err(usage(format!("basis {basis:?} is not available in type {ty}"))),
    };
    emit(cli, map_text(&coeffs), serde_json::to_value(&coeffs).expect("serializable"));
    Ok(Status::Pass)
}

/// Summary lines: one per identity id, then the first failure if any.
pub fn report_text(r: &Report) -> String {
    let mut by_id: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &r.checks {
        let e = by_id.entry(c.id.as_str()).or_default();
        if c.pass {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    let mut lines: Vec<String> = by_id
        .iter()
        .map(|(id, (p, f))| format!("{} {id}: {p} passed, {f} failed", if *f == 0 { "PASS" } else { "FAIL" }))
        .collect();
    lines.push(format!("{}: {} passed, {} failed", r.suite, r.passed(), r.failed()));
    if let Some(c) = r.first_failure() {
        lines.push(format!("first counterexample: {} [{}] {}", c.id, c.input, c.detail.as_deref().unwrap_or("")));
    }
    lines.join("\n")
}

pub fn verify(cli: &Cli, v: &Verify) -> Result<Status> {
    let ty = v.ty.as_deref().map(parse_type).transpose()?;
    let report = if let Some(w) = &v.w {
        if v.suite != "identities" {
            return Err(usage("--w is only accepted with --suite identities"));
        }
        let ty = ty.ok_or_else(|| usage("--type is required with --w"))?;
        let w = parse_element(ty, w)?;
        key_identity_verify(ty, &w, v.k.or(v.m).unwrap_or(0), v.l.unwrap_or(0))?
    } else {
        let n = v.n.unwrap_or(v.max_n);
        with_jobs(cli.jobs, || run_suite(&v.suite, ty, n))??
    };
    emit(cli, report_text(&report), serde_json::to_value(&report).expect("serializable"));
    Ok(if report.all_pass() { Status::Pass } else { Status::Fail })
}
