//! Parsing of the JSON input formats: the partial-action spec document
//! and the global-action fixture emitted by `globalize`.
//!
//! Decoding is done by hand over `serde_json::Value` so that every error
//! can point at the offending location with a JSON pointer and every
//! unresolved label can be named.

use std::path::Path;

use serde_json::Value;

use partact_core::{FiniteSet, GlobalAction, Group, PartialAction, SparseEntry};

use crate::CliError;

/// A parsed spec: the group and the (not yet validated) partial action.
pub struct ParsedSpec {
    pub group: Group,
    pub action: PartialAction,
}

/// A parsed global-action fixture, ready for verification against a spec.
pub struct ParsedGlobal {
    pub action: GlobalAction,
    /// embedding[x] = T index of carrier point x.
    pub embedding: Vec<usize>,
    /// Orbits as stated in the file, if any; cross-checked by `verify`.
    pub stated_orbits: Option<Vec<Vec<usize>>>,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema { pointer: pointer.into(), message: message.into() }
}

fn as_object<'v>(
    value: &'v Value,
    pointer: &str,
) -> Result<&'v serde_json::Map<String, Value>, CliError> {
    value.as_object().ok_or_else(|| schema(pointer, "expected an object"))
}

fn as_array<'v>(value: &'v Value, pointer: &str) -> Result<&'v Vec<Value>, CliError> {
    value.as_array().ok_or_else(|| schema(pointer, "expected an array"))
}

fn as_string<'v>(value: &'v Value, pointer: &str) -> Result<&'v str, CliError> {
    value.as_str().ok_or_else(|| schema(pointer, "expected a string"))
}

fn as_index(value: &Value, pointer: &str) -> Result<usize, CliError> {
    value
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(pointer, "expected a nonnegative integer"))
}

fn reject_unknown_keys(
    object: &serde_json::Map<String, Value>,
    allowed: &[&str],
    pointer: &str,
) -> Result<(), CliError> {
    for key in object.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(format!("{pointer}/{key}"), "unknown key"));
        }
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| schema("", format!("invalid JSON: {e}")))
}

/// Reads and structurally checks a spec file, constructing the group and
/// the candidate partial action. Axiom-level validation is the caller's
/// job.
pub fn parse_spec(path: &Path) -> Result<ParsedSpec, CliError> {
    let value = read_json(path)?;
    let root = as_object(&value, "")?;
    reject_unknown_keys(root, &["group", "set", "domains", "maps"], "")?;

    let group = parse_group(root.get("group").ok_or_else(|| schema("", "missing key \"group\""))?)?;
    let set_value = root.get("set").ok_or_else(|| schema("", "missing key \"set\""))?;
    let carrier = parse_carrier(set_value)?;

    let domains = match root.get("domains") {
        Some(v) => Some(as_object(v, "/domains")?),
        None => None,
    };
    let maps = match root.get("maps") {
        Some(v) => Some(as_object(v, "/maps")?),
        None => None,
    };

    // The two key sets must agree exactly; an element with a domain but no
    // map (or the reverse) is a transcription error.
    let domain_keys: Vec<&String> = domains.map(|d| d.keys().collect()).unwrap_or_default();
    let map_keys: Vec<&String> = maps.map(|m| m.keys().collect()).unwrap_or_default();
    for key in &domain_keys {
        if !map_keys.contains(key) {
            return Err(schema(format!("/maps/{key}"), "domains lists this element but maps does not"));
        }
    }
    for key in &map_keys {
        if !domain_keys.contains(key) {
            return Err(schema(format!("/domains/{key}"), "maps lists this element but domains does not"));
        }
    }

    let mut entries: Vec<SparseEntry> = Vec::new();
    if let (Some(domains), Some(maps)) = (domains, maps) {
        for (glabel, dom_value) in domains {
            let g = group.element_by_label(glabel).ok_or_else(|| {
                schema(format!("/domains/{glabel}"), format!("unresolved group element {glabel:?}"))
            })?;
            let pointer = format!("/domains/{glabel}");
            let dom_array = as_array(dom_value, &pointer)?;
            let mut dom = Vec::with_capacity(dom_array.len());
            for (i, xval) in dom_array.iter().enumerate() {
                let ptr = format!("{pointer}/{i}");
                let xlabel = as_string(xval, &ptr)?;
                let x = carrier.index_of(xlabel).ok_or_else(|| {
                    schema(ptr, format!("unresolved carrier label {xlabel:?}"))
                })?;
                dom.push(x);
            }
            let map_value = &maps[glabel];
            let map_pointer = format!("/maps/{glabel}");
            let map_object = as_object(map_value, &map_pointer)?;
            let mut pairs = Vec::with_capacity(map_object.len());
            for (source_label, target_value) in map_object {
                let ptr = format!("{map_pointer}/{source_label}");
                let source = carrier.index_of(source_label).ok_or_else(|| {
                    schema(ptr.clone(), format!("unresolved carrier label {source_label:?}"))
                })?;
                let target_label = as_string(target_value, &ptr)?;
                let target = carrier.index_of(target_label).ok_or_else(|| {
                    schema(ptr, format!("unresolved carrier label {target_label:?}"))
                })?;
                pairs.push((source, target));
            }
            entries.push((g, dom, pairs));
        }
    }

    let action = PartialAction::from_sparse(group.clone(), carrier, &entries)
        .map_err(|e| CliError::Invalid { message: e.to_string() })?;
    Ok(ParsedSpec { group, action })
}

fn parse_group(value: &Value) -> Result<Group, CliError> {
    let object = as_object(value, "/group")?;
    let kind = as_string(
        object.get("kind").ok_or_else(|| schema("/group", "missing key \"kind\""))?,
        "/group/kind",
    )?;
    match kind {
        "cyclic" => {
            reject_unknown_keys(object, &["kind", "order"], "/group")?;
            let order = as_index(
                object.get("order").ok_or_else(|| schema("/group", "missing key \"order\""))?,
                "/group/order",
            )?;
            Group::cyclic(order).map_err(|e| CliError::Invalid { message: e.to_string() })
        }
        "cayley" => {
            reject_unknown_keys(object, &["kind", "elements", "table"], "/group")?;
            let elements = as_array(
                object.get("elements").ok_or_else(|| schema("/group", "missing key \"elements\""))?,
                "/group/elements",
            )?;
            let labels = elements
                .iter()
                .enumerate()
                .map(|(i, v)| as_string(v, &format!("/group/elements/{i}")).map(str::to_string))
                .collect::<Result<Vec<_>, _>>()?;
            let table_value = as_array(
                object.get("table").ok_or_else(|| schema("/group", "missing key \"table\""))?,
                "/group/table",
            )?;
            let mut table = Vec::with_capacity(table_value.len());
            for (i, row_value) in table_value.iter().enumerate() {
                let pointer = format!("/group/table/{i}");
                let row = as_array(row_value, &pointer)?
                    .iter()
                    .enumerate()
                    .map(|(j, v)| as_index(v, &format!("{pointer}/{j}")))
                    .collect::<Result<Vec<_>, _>>()?;
                table.push(row);
            }
            Group::from_cayley(labels, table).map_err(|e| CliError::Invalid { message: e.to_string() })
        }
        other => Err(schema("/group/kind", format!("unknown group kind {other:?}"))),
    }
}

fn parse_carrier(value: &Value) -> Result<FiniteSet, CliError> {
    let array = as_array(value, "/set")?;
    let labels = array
        .iter()
        .enumerate()
        .map(|(i, v)| as_string(v, &format!("/set/{i}")).map(str::to_string))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteSet::new(labels).map_err(|e| schema("/set", e.to_string()))
}

/// Reads a global-action fixture in the schema that `globalize` emits and
/// resolves it against the spec's group and carrier.
pub fn parse_global(path: &Path, spec: &ParsedSpec) -> Result<ParsedGlobal, CliError> {
    let value = read_json(path)?;
    let root = as_object(&value, "")?;
    reject_unknown_keys(root, &["elements", "embedding", "perms", "orbits"], "")?;

    let elements = as_array(
        root.get("elements").ok_or_else(|| schema("", "missing key \"elements\""))?,
        "/elements",
    )?;
    let labels = elements
        .iter()
        .enumerate()
        .map(|(i, v)| as_string(v, &format!("/elements/{i}")).map(str::to_string))
        .collect::<Result<Vec<_>, _>>()?;
    let carrier = FiniteSet::new(labels).map_err(|e| schema("/elements", e.to_string()))?;
    let t_index = |label: &str, pointer: &str| {
        carrier
            .index_of(label)
            .ok_or_else(|| schema(pointer, format!("unresolved element label {label:?}")))
    };

    let embedding_object = as_object(
        root.get("embedding").ok_or_else(|| schema("", "missing key \"embedding\""))?,
        "/embedding",
    )?;
    let mut embedding = Vec::with_capacity(spec.action.carrier().size());
    for x in 0..spec.action.carrier().size() {
        let xlabel = spec.action.carrier().label(x);
        let pointer = format!("/embedding/{xlabel}");
        let target = embedding_object
            .get(xlabel)
            .ok_or_else(|| schema("/embedding", format!("missing carrier label {xlabel:?}")))?;
        embedding.push(t_index(as_string(target, &pointer)?, &pointer)?);
    }
    for key in embedding_object.keys() {
        if spec.action.carrier().index_of(key).is_none() {
            return Err(schema(format!("/embedding/{key}"), "not a carrier label"));
        }
    }

    let perms_object =
        as_object(root.get("perms").ok_or_else(|| schema("", "missing key \"perms\""))?, "/perms")?;
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(spec.group.order());
    for g in spec.group.elements() {
        let glabel = spec.group.label(g);
        let pointer = format!("/perms/{glabel}");
        let perm_value = perms_object
            .get(glabel)
            .ok_or_else(|| schema("/perms", format!("missing group element {glabel:?}")))?;
        let perm_object = as_object(perm_value, &pointer)?;
        let mut perm = Vec::with_capacity(carrier.size());
        for t in 0..carrier.size() {
            let tlabel = carrier.label(t);
            let ptr = format!("{pointer}/{tlabel}");
            let target = perm_object
                .get(tlabel)
                .ok_or_else(|| schema(pointer.clone(), format!("missing element {tlabel:?}")))?;
            perm.push(t_index(as_string(target, &ptr)?, &ptr)?);
        }
        for key in perm_object.keys() {
            if carrier.index_of(key).is_none() {
                return Err(schema(format!("{pointer}/{key}"), "not an element label"));
            }
        }
        perms.push(perm);
    }
    for key in perms_object.keys() {
        if spec.group.element_by_label(key).is_none() {
            return Err(schema(format!("/perms/{key}"), "not a group element label"));
        }
    }

    let stated_orbits = match root.get("orbits") {
        None => None,
        Some(orbits_value) => {
            let orbit_array = as_array(orbits_value, "/orbits")?;
            let mut orbits = Vec::with_capacity(orbit_array.len());
            for (i, orbit_value) in orbit_array.iter().enumerate() {
                let pointer = format!("/orbits/{i}");
                let mut orbit = as_array(orbit_value, &pointer)?
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let ptr = format!("{pointer}/{j}");
                        t_index(as_string(v, &ptr)?, &ptr)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                orbit.sort_unstable();
                orbits.push(orbit);
            }
            orbits.sort();
            Some(orbits)
        }
    };

    let action = GlobalAction::from_parts(spec.group.clone(), carrier, perms)
        .map_err(|e| CliError::Invalid { message: e.to_string() })?;
    Ok(ParsedGlobal { action, embedding, stated_orbits })
}

/// A map-backed JSON object builder with sorted keys, used by the
/// renderers to keep output deterministic.
pub(crate) fn object(
    entries: impl IntoIterator<Item = (String, Value)>,
) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in entries {
        map.insert(k, v);
    }
    Value::Object(map)
}
