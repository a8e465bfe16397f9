//! Tables of graded hom groups `𝒩ℑ_*(Y, Z)` computed from order complexes.

use std::fmt::Write as _;

use crate::complex::{hom_group, Exactness, KTheoryResult};
use crate::group::{GradedAbelianGroup, GroupError};
use crate::poset::{FinitePoset, LCSet};

/// Connected locally closed sets with the open ones first.
pub fn layout_order(p: &FinitePoset) -> Vec<LCSet> {
    let (mut open, mut rest): (Vec<LCSet>, Vec<LCSet>) = p.connected_lc_sets().into_iter().partition(|&s| p.is_open(s));
    p.sort_canonical(&mut open);
    p.sort_canonical(&mut rest);
    open.extend(rest);
    open
}

#[derive(Clone, Debug)]
pub struct HomTable {
    pub names: Vec<String>,
    pub sets: Vec<LCSet>,
    /// `entries[y][z]`
    pub entries: Vec<Vec<KTheoryResult>>,
}

pub fn hom_table(p: &FinitePoset) -> HomTable {
    let sets = layout_order(p);
    let names = sets.iter().map(|&s| p.set_name(s)).collect();
    let entries = sets.iter().map(|&y| sets.iter().map(|&z| hom_group(p, y, z)).collect()).collect();
    HomTable { names, sets, entries }
}

impl HomTable {
    pub fn get(&self, y: &str, z: &str) -> Option<&KTheoryResult> {
        let i = self.names.iter().position(|n| n == y)?;
        let j = self.names.iter().position(|n| n == z)?;
        Some(&self.entries[i][j])
    }

    pub fn all_exact(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.exactness == Exactness::Exact)
    }

    /// Rows `Y`, columns `Z`, with a final column flagging rows that rely on
    /// the cohomology heuristic.
    pub fn render_text(&self) -> String {
        let cell = |e: &KTheoryResult| e.groups.to_string();
        let mut width = self.names.iter().map(|n| n.chars().count()).max().unwrap_or(1).max(3);
        for e in self.entries.iter().flatten() {
            width = width.max(cell(e).chars().count());
        }
        let mut out = String::new();
        let _ = write!(out, "{:>w$} |", "Y\\Z", w = width);
        for n in &self.names {
            let _ = write!(out, " {n:>width$}");
        }
        let _ = writeln!(out, " | k-theory");
        for (i, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{:>w$} |", self.names[i], w = width);
            for e in row {
                let _ = write!(out, " {:>width$}", cell(e));
            }
            let flag = if row.iter().all(|e| e.exactness == Exactness::Exact) { "exact" } else { "heuristic" };
            let _ = writeln!(out, " | {flag}");
        }
        out
    }

    /// One `hom <Y> <Z> <group> <flag>` line per pair.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let _ = writeln!(out, "hom {} {} {} {}", self.names[i], self.names[j], e.groups, e.exactness);
            }
        }
        out
    }
}

/// A parsed `hom` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLine {
    pub y: String,
    pub z: String,
    pub groups: GradedAbelianGroup,
    pub exactness: Exactness,
}

pub fn parse_machine(text: &str) -> Result<Vec<HomLine>, GroupError> {
    let mut out = Vec::new();
    for line in text.lines().filter(|l| l.starts_with("hom ")) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() < 5 {
            return Err(GroupError::Parse(format!("short hom line: {line}")));
        }
        let flag = parts[parts.len() - 1];
        let exactness = match flag {
            "exact" => Exactness::Exact,
            "heuristic" => Exactness::Heuristic,
            _ => return Err(GroupError::Parse(format!("unknown flag {flag}"))),
        };
        let groups = parts[3..parts.len() - 1].join(" ").parse()?;
        out.push(HomLine { y: parts[1].into(), z: parts[2].into(), groups, exactness });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_layout_matches_open_first_order() {
        let t = hom_table(&FinitePoset::d4());
        assert_eq!(t.names, ["4", "14", "24", "34", "124", "134", "234", "1234", "1", "2", "3"]);
        assert!(t.all_exact());
    }

    #[test]
    fn machine_block_round_trips() {
        let t = hom_table(&FinitePoset::chain(3));
        let text = t.render_machine();
        let lines = parse_machine(&text).unwrap();
        assert_eq!(lines.len(), 36);
        for l in lines {
            assert_eq!(t.get(&l.y, &l.z).unwrap().groups, l.groups);
        }
    }
}
