//! Golden corpus: small exact results written as key-sorted JSON.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use schubertkit::poly::canonical;
use schubertkit::schubert::expansion::{
    splitting_expand, stanley_coefficients_a, stanley_coefficients_c, stanley_coefficients_d,
};
use schubertkit::schubert::verify::{run_suite, with_jobs};
use schubertkit::schubert::{is_increasing_up_to, schubert_with_cap, Type};
use schubertkit::weyl::{group_elements, FlagSequence, WeylElement};
use schubertkit::{Error, Result};

use crate::args::{Cli, Corpus};
use crate::run::{splitting_json, Status};

/// Ranks covered per type: S_4, W_2 (B and C), W~_3.
const RANKS: &[(Type, usize)] = &[(Type::A, 4), (Type::B, 2), (Type::C, 2), (Type::D, 3)];

/// Longest element whose Stanley coefficients are recorded.
const STANLEY_LEN: u32 = 4;

fn elements(ty: Type, n: usize) -> Vec<WeylElement> {
    group_elements(ty.kind(), n)
}

fn schubert_file(ty: Type, n: usize) -> Result<Value> {
    let mut out = BTreeMap::new();
    for w in elements(ty, n) {
        for double in [false, true] {
            let mut s = schubert_with_cap(ty, &w, double, u32::MAX)?;
            s.value = canonical(&s.value);
            let key = format!("{w}{}", if double { " double" } else { "" });
            out.insert(key, serde_json::to_value(s.to_json()).expect("serializable"));
        }
    }
    Ok(json!(out))
}

fn string_keys<K: ToString>(m: BTreeMap<K, i64>) -> Value {
    json!(m.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>())
}

fn stanley_file(ty: Type, n: usize) -> Result<Value> {
    let mut out = BTreeMap::new();
    for w in elements(ty, n).into_iter().filter(|w| w.length() <= STANLEY_LEN) {
        if ty == Type::A {
            out.insert(w.to_string(), string_keys(stanley_coefficients_a(&w)?));
            continue;
        }
        for k in (0..=n).filter(|&k| is_increasing_up_to(&w, k)) {
            let coeffs = match ty {
                Type::C => string_keys(stanley_coefficients_c(&w, k as u32)?),
                _ => string_keys(stanley_coefficients_d(&w, k as u32)?),
            };
            out.insert(format!("{w} k={k}"), coeffs);
        }
    }
    Ok(json!(out))
}

fn splitting_file(ty: Type, n: usize) -> Result<Value> {
    let mut out = BTreeMap::new();
    for w in elements(ty, n) {
        let a = FlagSequence::minimal_for(&w);
        let b = FlagSequence::minimal_for(&w.inverse());
        out.insert(w.to_string(), splitting_json(&splitting_expand(ty, &w, &a, &b)?));
    }
    Ok(json!(out))
}

fn suite_file() -> Result<Value> {
    let report = run_suite("all", None, 2)?;
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let e = counts.entry(c.id.clone()).or_default();
        if c.pass {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    Ok(json!(counts
        .into_iter()
        .map(|(id, (p, f))| (id, json!({"passed": p, "failed": f})))
        .collect::<BTreeMap<_, _>>()))
}

fn save(dir: &Path, name: &str, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    fs::write(dir.join(name), text).map_err(|e| Error::Parse(format!("writing {name}: {e}")))
}

/// All corpus files, by file name.
pub fn build() -> Result<BTreeMap<String, Value>> {
    let mut files = BTreeMap::new();
    for &(ty, n) in RANKS {
        files.insert(format!("schubert_{ty}{n}.json"), schubert_file(ty, n)?);
        if ty != Type::B {
            files.insert(format!("stanley_{ty}{n}.json"), stanley_file(ty, n)?);
            files.insert(format!("splitting_{ty}{n}.json"), splitting_file(ty, n)?);
        }
    }
    files.insert("suites.json".into(), suite_file()?);
    Ok(files)
}

pub fn write(cli: &Cli, c: &Corpus) -> Result<Status> {
    let files = with_jobs(cli.jobs, build)??;
    if c.check {
        return check(&c.dir, &files);
    }
    fs::create_dir_all(&c.dir).map_err(|e| Error::Parse(format!("creating {}: {e}", c.dir.display())))?;
    for (name, value) in &files {
        save(&c.dir, name, value)?;
    }
    let failed = files["suites.json"].as_object().expect("object").values().any(|v| v["failed"] != 0);
    println!("wrote {} files to {}", files.len(), c.dir.display());
    Ok(if failed { Status::Fail } else { Status::Pass })
}

fn check(dir: &Path, files: &BTreeMap<String, Value>) -> Result<Status> {
    let mut stale = Vec::new();
    for (name, value) in files {
        let on_disk = fs::read_to_string(dir.join(name)).ok().and_then(|t| serde_json::from_str::<Value>(&t).ok());
        if on_disk.as_ref() != Some(value) {
            stale.push(name.as_str());
        }
    }
    if stale.is_empty() {
        println!("{} files match {}", files.len(), dir.display());
        Ok(Status::Pass)
    } else {
        println!("differs from {}: {}", dir.display(), stale.join(", "));
        Ok(Status::Fail)
    }
}
