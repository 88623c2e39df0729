//! Line-oriented `key=value` persistence of a [`NormalBasisContext`].
//!
//! Loading re-derives the context from the parameter echo and requires every
//! stored value to match the re-derivation exactly.

use std::collections::BTreeMap;

use crate::additive::{build_additive_context, AdditiveParams};
use crate::convolution::CyclicVector;
use crate::engine::{ContextParams, GroupKind, NormalBasisContext};
use crate::error::{Error, Result};
use crate::ff::{FieldElement, FieldSpec};
use crate::kummer::{build_kummer_context, KummerParams};
use crate::lucas::{build_lucas_context, LucasParams, TorusPoint};

pub const VERSION: &str = "nbasis-context-1";

fn join_elems(v: &[FieldElement]) -> String {
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";")
}

/// Serializes a context.
pub fn to_text(ctx: &NormalBasisContext) -> String {
    let mut lines: Vec<(String, String)> = vec![
        ("version".into(), VERSION.into()),
        ("kind".into(), ctx.kind.to_string()),
        ("field".into(), ctx.base.to_string()),
        ("n".into(), ctx.n.to_string()),
    ];
    match &ctx.params {
        ContextParams::Additive { a, r } => {
            lines.push(("param.a".into(), a.to_string()));
            lines.push(("param.r".into(), r.to_string()));
        }
        ContextParams::Kummer { m, a, zeta_mn } => {
            lines.push(("param.m".into(), m.to_string()));
            lines.push(("param.a".into(), a.to_string()));
            lines.push(("param.zeta_mn".into(), zeta_mn.to_string()));
        }
        ContextParams::Lucas { alpha, generator } => {
            lines.push(("param.alpha".into(), alpha.to_string()));
            lines.push(("param.generator".into(), generator.to_string()));
        }
    }
    lines.push(("i_vec".into(), ctx.i_vec.to_string()));
    lines.push(("u_vec".into(), ctx.u_vec.to_string()));
    lines.push(("u_inv_vec".into(), ctx.u_inv_vec.to_string()));
    lines.push(("w_vec".into(), ctx.w_vec.to_string()));
    lines.push(("scale".into(), ctx.scale.to_string()));
    lines.push(("differenced".into(), ctx.differenced.to_string()));
    lines.push(("frobenius_index".into(), ctx.frobenius_index.to_string()));
    lines.push((
        "defining_poly".into(),
        join_elems(ctx.oracle.defining_poly().coeffs()),
    ));
    for (k, row) in ctx.oracle.theta.iter().enumerate() {
        lines.push((format!("theta.{k}"), join_elems(row)));
    }
    lines.push(("one".into(), ctx.one.to_string()));
    if let Some(l) = &ctx.lucas {
        lines.push(("lucas.t".into(), l.t.to_string()));
        lines.push(("lucas.y_b".into(), join_elems(&l.y_b)));
        lines.push(("lucas.c".into(), l.constants.c_frak.to_string()));
        lines.push(("lucas.a".into(), l.constants.a_frak.to_string()));
        lines.push(("lucas.b".into(), l.constants.b_frak.to_string()));
    }
    let mut out = String::new();
    for (k, v) in lines {
        out.push_str(&k);
        out.push('=');
        out.push_str(&v);
        out.push('\n');
    }
    out
}

fn parse_map(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", no + 1)))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("line {}: duplicate key {k:?}", no + 1)));
        }
    }
    Ok(map)
}

fn get<'a>(map: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    map.get(key)
        .map(String::as_str)
        .ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

/// Parameters echoed in a context file, enough to rebuild it.
pub fn params_from_text(text: &str) -> Result<(GroupKind, FieldSpec, usize, ContextParams)> {
    let map = parse_map(text)?;
    let version = get(&map, "version")?;
    if version != VERSION {
        return Err(Error::Parse(format!("unsupported version {version:?}")));
    }
    let kind: GroupKind = get(&map, "kind")?.parse()?;
    let field: FieldSpec = get(&map, "field")?.parse()?;
    let n: usize = get(&map, "n")?
        .parse()
        .map_err(|_| Error::Parse("bad n".into()))?;
    let elem = |key: &str| -> Result<FieldElement> { field.parse_element(get(&map, key)?) };
    let params = match kind {
        GroupKind::Additive => ContextParams::Additive {
            a: elem("param.a")?,
            r: elem("param.r")?,
        },
        GroupKind::Multiplicative => ContextParams::Kummer {
            m: get(&map, "param.m")?
                .parse()
                .map_err(|_| Error::Parse("bad param.m".into()))?,
            a: elem("param.a")?,
            zeta_mn: elem("param.zeta_mn")?,
        },
        GroupKind::Lucas => ContextParams::Lucas {
            alpha: elem("param.alpha")?,
            generator: TorusPoint::parse(&field, get(&map, "param.generator")?)?,
        },
    };
    Ok((kind, field, n, params))
}

/// Rebuilds a context from its parameters.
pub fn rebuild(field: &FieldSpec, n: usize, params: &ContextParams) -> Result<NormalBasisContext> {
    match params {
        ContextParams::Additive { a, r } => {
            let ctx = build_additive_context(&AdditiveParams::new(field, a.clone(), r.clone()))?;
            if ctx.n != n {
                return Err(Error::Parse(format!(
                    "n = {n} but the additive degree is {}",
                    ctx.n
                )));
            }
            Ok(ctx)
        }
        ContextParams::Kummer { m, a, zeta_mn } => build_kummer_context(&KummerParams {
            base: field.clone(),
            n,
            m: *m,
            a: a.clone(),
            zeta_mn: zeta_mn.clone(),
        }),
        ContextParams::Lucas { alpha, generator } => build_lucas_context(
            &LucasParams {
                base: field.clone(),
                alpha: alpha.clone(),
                n,
                generator: Some(generator.clone()),
            },
            0,
        ),
    }
}

/// Parses a context file, rebuilds it and checks every stored line against
/// the rebuilt context.
pub fn from_text(text: &str) -> Result<NormalBasisContext> {
    let (kind, field, n, params) = params_from_text(text)?;
    let ctx = rebuild(&field, n, &params)?;
    if ctx.kind != kind {
        return Err(Error::Parse("kind does not match parameters".into()));
    }
    let stored = parse_map(text)?;
    let derived = parse_map(&to_text(&ctx))?;
    for (k, v) in &stored {
        match derived.get(k) {
            None => return Err(Error::Parse(format!("unknown key {k:?}"))),
            Some(d) if canonical(&field, k, v) != canonical(&field, k, d) => {
                return Err(Error::Parse(format!(
                    "stored {k} = {v} differs from the re-derived value {d}"
                )))
            }
            _ => {}
        }
    }
    if let Some(k) = derived.keys().find(|k| !stored.contains_key(*k)) {
        return Err(Error::Parse(format!("missing key {k:?}")));
    }
    Ok(ctx)
}

/// Normalizes vector-valued lines so that shorthand entries compare equal.
fn canonical(field: &FieldSpec, key: &str, v: &str) -> String {
    let vector_keys = ["i_vec", "u_vec", "u_inv_vec", "w_vec", "one"];
    if vector_keys.contains(&key) {
        if let Ok(cv) = CyclicVector::parse(field, v) {
            return cv.to_string();
        }
    }
    v.to_string()
}
