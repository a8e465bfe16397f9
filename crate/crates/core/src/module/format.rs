//! Text format for modules.
//!
//! ```text
//! ring d4
//! object 124
//!   even: Z | a
//!   odd: 0
//! action i[14>124]: [[1]]
//! ```
//!
//! Slots list cyclic summands in order (`Z`, `Z^2`, `Z/3`, `(Z/2)^2`, `0`)
//! with optional generator names after `|`. An action matrix maps the
//! source generators (even, then odd) to the target generators (even, then
//! odd). Generators left out act by zero; other basis morphisms act through
//! their factorization into generators.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{flip, Module, ModuleError};
use crate::category::{builtin_ring, CategoryRing};
use crate::group::FgGroup;
use crate::intmat::IntMatrix;

fn perr(line: usize, msg: impl Into<String>) -> ModuleError {
    ModuleError::Parse { line, msg: msg.into() }
}

fn parse_summands(s: &str, line: usize) -> Result<Vec<BigInt>, ModuleError> {
    let mut orders = Vec::new();
    for part in s.split('+').map(str::trim) {
        if part == "0" || part.is_empty() {
            continue;
        }
        let (base, count) = match part.rsplit_once('^') {
            Some((b, c)) => {
                (b.trim(), c.trim().parse::<usize>().map_err(|_| perr(line, format!("bad exponent in {part}")))?)
            }
            None => (part, 1),
        };
        let base = base.trim_start_matches('(').trim_end_matches(')');
        let order = if base == "Z" {
            BigInt::zero()
        } else if let Some(k) = base.strip_prefix("Z/") {
            let k: BigInt = k.trim().parse().map_err(|_| perr(line, format!("bad order in {part}")))?;
            if k < BigInt::from(2) {
                return Err(perr(line, format!("cyclic order must be at least 2 in {part}")));
            }
            k
        } else {
            return Err(perr(line, format!("unknown summand {part}")));
        };
        orders.extend(std::iter::repeat_n(order, count));
    }
    Ok(orders)
}

fn parse_matrix(s: &str, line: usize) -> Result<Vec<Vec<BigInt>>, ModuleError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| perr(line, "matrix must be enclosed in brackets"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let inner = inner
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| perr(line, "matrix rows must be bracketed"))?;
    inner
        .split("],[")
        .map(|row| {
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',').map(|x| x.parse::<BigInt>().map_err(|_| perr(line, format!("bad entry {x}")))).collect()
        })
        .collect()
}

/// Reads a module over the builtin ring named in its `ring` line.
pub fn parse_module(text: &str) -> Result<Module, ModuleError> {
    let name = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find_map(|l| l.strip_prefix("ring "))
        .ok_or_else(|| perr(0, "missing ring line"))?
        .trim()
        .to_string();
    let ring = Arc::new(builtin_ring(&name)?);
    parse_module_over(text, &ring)
}

pub fn parse_module_over(text: &str, ring: &Arc<CategoryRing>) -> Result<Module, ModuleError> {
    let n = ring.num_objects();
    let mut slots: Vec<[Vec<BigInt>; 2]> = vec![[Vec::new(), Vec::new()]; n];
    let mut names: Vec<[Vec<String>; 2]> = vec![[Vec::new(), Vec::new()]; n];
    let mut raw_actions: Vec<(usize, usize, Vec<Vec<BigInt>>)> = Vec::new();
    let mut current: Option<usize> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if let Some(r) = l.strip_prefix("ring ") {
            if r.trim() != ring.name() {
                return Err(ModuleError::SpecMismatch(format!(
                    "file is over {} but ring is {}",
                    r.trim(),
                    ring.name()
                )));
            }
        } else if let Some(o) = l.strip_prefix("object ") {
            let y = ring
                .object_index(o.trim())
                .map_err(|_| ModuleError::SpecMismatch(format!("line {line}: no object {}", o.trim())))?;
            current = Some(y);
        } else if let Some((key, rest)) = l.split_once(':').filter(|(k, _)| *k == "even" || *k == "odd") {
            let y = current.ok_or_else(|| perr(line, "slot outside an object block"))?;
            let p = usize::from(key == "odd");
            let (group, gen_names) = match rest.split_once('|') {
                Some((g, n)) => (g, n.split_whitespace().map(String::from).collect::<Vec<_>>()),
                None => (rest, Vec::new()),
            };
            slots[y][p] = parse_summands(group, line)?;
            if !gen_names.is_empty() && gen_names.len() != slots[y][p].len() {
                return Err(perr(line, "number of names does not match number of summands"));
            }
            names[y][p] = gen_names;
        } else if let Some(rest) = l.strip_prefix("action ") {
            let (label, m) = rest
                .split_once("]:")
                .map(|(a, b)| (format!("{a}]"), b))
                .ok_or_else(|| perr(line, "expected `action <label>: <matrix>`"))?;
            let b = ring
                .label_index(label.trim())
                .map_err(|_| ModuleError::SpecMismatch(format!("line {line}: no morphism {label}")))?;
            raw_actions.push((line, b, parse_matrix(m, line)?));
        } else {
            return Err(perr(line, format!("unrecognised line `{l}`")));
        }
    }
    let groups: Vec<[FgGroup; 2]> = slots.into_iter().map(|[e, o]| [FgGroup::new(e), FgGroup::new(o)]).collect();
    let mut given = HashMap::new();
    for (line, b, rows) in raw_actions {
        let bm = &ring.basis()[b];
        let (src, tgt) = (&groups[bm.source], &groups[bm.target]);
        let (sc, tc) = ([src[0].ngens(), src[1].ngens()], [tgt[0].ngens(), tgt[1].ngens()]);
        let (nr, nc) = (tc[0] + tc[1], sc[0] + sc[1]);
        if rows.len() != nr || rows.iter().any(|r| r.len() != nc) {
            return Err(perr(line, format!("{} needs a {nr}x{nc} matrix", bm.label)));
        }
        let full = if nr == 0 { IntMatrix::zeros(0, nc) } else { IntMatrix::from_rows(&rows) };
        let row_start = |p: usize| if p == 0 { 0 } else { tc[0] };
        let col_start = |p: usize| if p == 0 { 0 } else { sc[0] };
        let mut blocks = [IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)];
        for (p, block) in blocks.iter_mut().enumerate() {
            let q = flip(p, bm.degree);
            let r: Vec<usize> = (row_start(q)..row_start(q) + tc[q]).collect();
            let c: Vec<usize> = (col_start(p)..col_start(p) + sc[p]).collect();
            *block = full.select_rows(&r).select_cols(&c);
            // the parity-mixing blocks must vanish
            let r_other: Vec<usize> = (row_start(1 - q)..row_start(1 - q) + tc[1 - q]).collect();
            if !full.select_rows(&r_other).select_cols(&c).is_zero() {
                return Err(perr(line, format!("{} does not respect the grading", bm.label)));
            }
        }
        given.insert(b, blocks);
    }
    let mut m = Module::from_generators(ring.clone(), groups, &given)?;
    m.set_names(names);
    Ok(m)
}

fn group_text(g: &FgGroup) -> String {
    if g.ngens() == 0 {
        return "0".into();
    }
    g.orders()
        .iter()
        .map(|o| if o.is_zero() { "Z".to_string() } else { format!("Z/{o}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn matrix_text(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Writes the slots and the generator actions; `parse_module` reads it back.
pub fn write_module(m: &Module) -> String {
    let ring = m.ring();
    let mut out = String::new();
    let _ = writeln!(out, "ring {}", ring.name());
    for (y, obj) in ring.objects().iter().enumerate() {
        if m.slot(y, 0).ngens() + m.slot(y, 1).ngens() == 0 {
            continue;
        }
        let _ = writeln!(out, "object {}", obj.name);
        for (p, key) in ["even", "odd"].iter().enumerate() {
            let g = m.slot(y, p);
            match m.names(y, p).filter(|n| !n.is_empty() && n.len() == g.ngens()) {
                Some(n) => {
                    let _ = writeln!(out, "  {key}: {} | {}", group_text(g), n.join(" "));
                }
                None => {
                    let _ = writeln!(out, "  {key}: {}", group_text(g));
                }
            }
        }
    }
    for &b in ring.generators() {
        let bm = &ring.basis()[b];
        let (src, tgt) = (bm.source, bm.target);
        let (sc, tc) =
            ([m.slot(src, 0).ngens(), m.slot(src, 1).ngens()], [m.slot(tgt, 0).ngens(), m.slot(tgt, 1).ngens()]);
        let mut full = IntMatrix::zeros(tc[0] + tc[1], sc[0] + sc[1]);
        for p in 0..2 {
            let q = flip(p, bm.degree);
            let r0 = if q == 0 { 0 } else { tc[0] };
            let c0 = if p == 0 { 0 } else { sc[0] };
            full.paste(r0, c0, m.action(b, p));
        }
        if full.rows() > 0 && full.cols() > 0 && !full.is_zero() {
            let _ = writeln!(out, "action {}: {}", bm.label, matrix_text(&full));
        }
    }
    out
}
