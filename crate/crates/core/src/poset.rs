//! Finite T0 spaces as partial orders: `x ⪯ y` iff `cl{x} ⊆ cl{y}`, so open
//! sets are up-closed and closed sets are down-closed.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("relation is not a partial order: cycle through `{0}`")]
    NotAPartialOrder(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("{0} elements exceed the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
}

pub const MAX_ELEMENTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    elements: Vec<String>,
    /// `leq[x][y]` iff `x ⪯ y`
    leq: Vec<Vec<bool>>,
}

/// A subset of a poset, stored as a bitmask over element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LCSet(pub u32);

impl LCSet {
    pub const EMPTY: LCSet = LCSet(0);

    pub fn singleton(x: usize) -> Self {
        LCSet(1 << x)
    }

    pub fn from_members(members: &[usize]) -> Self {
        LCSet(members.iter().fold(0, |acc, &x| acc | (1 << x)))
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 & (1 << x) != 0
    }

    pub fn members(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: LCSet) -> LCSet {
        LCSet(self.0 | o.0)
    }

    pub fn intersect(self, o: LCSet) -> LCSet {
        LCSet(self.0 & o.0)
    }

    pub fn minus(self, o: LCSet) -> LCSet {
        LCSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: LCSet) -> bool {
        self.0 & !o.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOps {
    pub cl: LCSet,
    pub cl_boundary: LCSet,
    pub up: LCSet,
    pub up_boundary: LCSet,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of the given cover pairs `a ⪯ b`.
    pub fn from_covers(elements: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = elements.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a == b {
                return Err(PosetError::NotAPartialOrder(elements[a].clone()));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAPartialOrder(elements[i].clone()));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(PosetError::Parse { line: 0, msg: format!("duplicate element `{e}`") });
            }
        }
        Ok(FinitePoset { elements, leq })
    }

    /// Totally ordered space `1 ⪯ 2 ⪯ … ⪯ n`; `n` is the open point.
    pub fn chain(n: usize) -> Self {
        let elements = (1..=n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(elements, &covers).expect("chain is a partial order")
    }

    /// Four-point space with `1, 2, 3 ⪯ 4`; `4` is the open point.
    pub fn d4() -> Self {
        let elements = ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect();
        Self::from_covers(elements, &[(0, 3), (1, 3), (2, 3)]).expect("D4 is a partial order")
    }

    pub fn antichain(n: usize) -> Self {
        let elements = (1..=n).map(|i| i.to_string()).collect();
        Self::from_covers(elements, &[]).expect("antichain is a partial order")
    }

    /// The space with the reversed order.
    pub fn opposite(&self) -> Self {
        let n = self.len();
        let leq = (0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect();
        FinitePoset { elements: self.elements.clone(), leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PosetError> {
        self.elements.iter().position(|e| e == name).ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    pub fn full(&self) -> LCSet {
        LCSet(((1u64 << self.len()) - 1) as u32)
    }

    /// Covering pairs `(a, b)`: `a ≺ b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Parses the `elements …` / `cover a<b, …` text format.
    pub fn parse(text: &str) -> Result<Self, PosetError> {
        let mut elements: Option<Vec<String>> = None;
        let mut raw_covers: Vec<(usize, String, String)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for stmt in line.split(';') {
                let stmt = stmt.trim();
                if stmt.is_empty() {
                    continue;
                }
                let (kw, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
                match kw {
                    "elements" => {
                        if elements.is_some() {
                            return Err(PosetError::Parse { line: lineno + 1, msg: "repeated `elements` line".into() });
                        }
                        elements = Some(rest.split_whitespace().map(str::to_string).collect());
                    }
                    "cover" => {
                        let compact: String = rest.split('<').map(str::trim).collect::<Vec<_>>().join("<");
                        for item in compact.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                            let parts: Vec<&str> = item.split('<').collect();
                            if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
                                return Err(PosetError::Parse {
                                    line: lineno + 1,
                                    msg: format!("malformed cover `{item}`"),
                                });
                            }
                            for w in parts.windows(2) {
                                raw_covers.push((lineno + 1, w[0].to_string(), w[1].to_string()));
                            }
                        }
                    }
                    other => {
                        return Err(PosetError::Parse { line: lineno + 1, msg: format!("unknown keyword `{other}`") })
                    }
                }
            }
        }
        let elements = elements.ok_or(PosetError::Parse { line: 0, msg: "missing `elements` line".into() })?;
        if elements.is_empty() {
            return Err(PosetError::Parse { line: 0, msg: "no elements".into() });
        }
        let lookup = |line: usize, name: &str| {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| PosetError::Parse { line, msg: format!("unknown element `{name}`") })
        };
        let mut covers = Vec::new();
        for (line, a, b) in &raw_covers {
            covers.push((lookup(*line, a)?, lookup(*line, b)?));
        }
        Self::from_covers(elements, &covers)
    }

    /// Serializes to the text format accepted by [`FinitePoset::parse`].
    pub fn to_spec(&self) -> String {
        let mut s = format!("elements {}\n", self.elements.join(" "));
        let covers = self.covers();
        if !covers.is_empty() {
            let items: Vec<String> =
                covers.iter().map(|&(a, b)| format!("{}<{}", self.elements[a], self.elements[b])).collect();
            s.push_str(&format!("cover {}\n", items.join(", ")));
        }
        s
    }

    fn all_subsets(&self) -> impl Iterator<Item = LCSet> {
        (0..(1u64 << self.len())).map(|m| LCSet(m as u32))
    }

    pub fn is_open(&self, y: LCSet) -> bool {
        self.up_closure(y) == y
    }

    pub fn is_closed(&self, y: LCSet) -> bool {
        self.down_closure(y) == y
    }

    pub fn is_locally_closed(&self, y: LCSet) -> bool {
        let n = self.len();
        for x in y.members() {
            for z in y.members() {
                if !self.leq(x, z) {
                    continue;
                }
                for m in 0..n {
                    if self.leq(x, m) && self.leq(m, z) && !y.contains(m) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connectivity of the comparability graph restricted to `y`.
    pub fn is_connected(&self, y: LCSet) -> bool {
        !y.is_empty() && self.components(y).len() == 1
    }

    pub fn up_closure(&self, y: LCSet) -> LCSet {
        let n = self.len();
        LCSet::from_members(&(0..n).filter(|&b| y.members().iter().any(|&a| self.leq(a, b))).collect::<Vec<_>>())
    }

    pub fn down_closure(&self, y: LCSet) -> LCSet {
        let n = self.len();
        LCSet::from_members(&(0..n).filter(|&b| y.members().iter().any(|&a| self.leq(b, a))).collect::<Vec<_>>())
    }

    /// Canonical ordering: by cardinality, then lexicographic on member indices.
    pub fn sort_canonical(&self, sets: &mut [LCSet]) {
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(&b.members())));
    }

    pub fn open_sets(&self) -> Vec<LCSet> {
        let mut v: Vec<LCSet> = self.all_subsets().filter(|&s| self.is_open(s)).collect();
        self.sort_canonical(&mut v);
        v
    }

    pub fn closed_sets(&self) -> Vec<LCSet> {
        let mut v: Vec<LCSet> = self.all_subsets().filter(|&s| self.is_closed(s)).collect();
        self.sort_canonical(&mut v);
        v
    }

    pub fn locally_closed_sets(&self) -> Vec<LCSet> {
        let mut v: Vec<LCSet> = self.all_subsets().filter(|&s| self.is_locally_closed(s)).collect();
        self.sort_canonical(&mut v);
        v
    }

    pub fn connected_lc_sets(&self) -> Vec<LCSet> {
        let mut v: Vec<LCSet> =
            self.all_subsets().filter(|&s| self.is_connected(s) && self.is_locally_closed(s)).collect();
        self.sort_canonical(&mut v);
        v
    }

    /// Open subsets of `y` in the relative topology.
    pub fn relatively_open(&self, y: LCSet) -> Vec<LCSet> {
        let mut v: Vec<LCSet> =
            self.all_subsets().filter(|&s| s.is_subset(y) && self.up_closure(s).intersect(y) == s).collect();
        self.sort_canonical(&mut v);
        v
    }

    pub fn components(&self, y: LCSet) -> Vec<LCSet> {
        let mut remaining = y;
        let mut out = Vec::new();
        while let Some(&start) = remaining.members().first() {
            let mut comp = LCSet::singleton(start);
            loop {
                let grown = LCSet::from_members(
                    &y.members()
                        .into_iter()
                        .filter(|&b| comp.members().iter().any(|&a| self.leq(a, b) || self.leq(b, a)))
                        .collect::<Vec<_>>(),
                );
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            remaining = remaining.minus(comp);
            out.push(comp);
        }
        self.sort_canonical(&mut out);
        out
    }

    pub fn closure_ops(&self, y: LCSet) -> ClosureOps {
        let cl = self.down_closure(y);
        let up = self.up_closure(y);
        ClosureOps { cl, cl_boundary: cl.minus(y), up, up_boundary: up.minus(y) }
    }

    pub fn min_open(&self, x: &str) -> Result<LCSet, PosetError> {
        let i = self.index_of(x)?;
        Ok(self.up_closure(LCSet::singleton(i)))
    }

    /// Name of a subset: concatenated ids if all are single characters.
    pub fn set_name(&self, y: LCSet) -> String {
        if y.is_empty() {
            return "∅".to_string();
        }
        let names: Vec<&str> = y.members().iter().map(|&i| self.elements[i].as_str()).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            format!("{{{}}}", names.join(","))
        }
    }

    /// Inverse of [`FinitePoset::set_name`].
    pub fn parse_set(&self, name: &str) -> Result<LCSet, PosetError> {
        let name = name.trim();
        if name == "∅" || name == "{}" {
            return Ok(LCSet::EMPTY);
        }
        let ids: Vec<String> = match name.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            Some(inner) => inner.split(',').map(|s| s.trim().to_string()).collect(),
            None => name.chars().map(|c| c.to_string()).collect(),
        };
        let mut idx = Vec::new();
        for id in ids {
            idx.push(self.index_of(&id)?);
        }
        Ok(LCSet::from_members(&idx))
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: &FinitePoset, sets: &[LCSet]) -> Vec<String> {
        sets.iter().map(|&s| p.set_name(s)).collect()
    }

    #[test]
    fn d4_open_and_lc() {
        let p = FinitePoset::d4();
        assert_eq!(names(&p, &p.open_sets()), ["∅", "4", "14", "24", "34", "124", "134", "234", "1234"]);
        let mut lc = names(&p, &p.connected_lc_sets());
        lc.sort();
        let mut want = vec!["4", "14", "24", "34", "124", "134", "234", "1234", "1", "2", "3"];
        want.sort();
        assert_eq!(lc, want);
        assert_eq!(p.min_open("4").unwrap(), p.parse_set("4").unwrap());
        assert_eq!(p.min_open("1").unwrap(), p.parse_set("14").unwrap());
    }

    #[test]
    fn parse_formats() {
        let p = FinitePoset::parse("elements 1 2 3 4\ncover 1<4, 2 < 4\ncover 3<4 # star\n").unwrap();
        assert_eq!(p, FinitePoset::d4());
        let p = FinitePoset::parse("elements a").unwrap();
        assert_eq!(p.open_sets().len(), 2);
        assert!(matches!(FinitePoset::parse("elements 1 2; cover 2<1, 1<2"), Err(PosetError::NotAPartialOrder(_))));
        assert!(matches!(FinitePoset::parse("elements 1 2; cover 1<1"), Err(PosetError::NotAPartialOrder(_))));
        assert!(matches!(FinitePoset::parse("cover 1<2"), Err(PosetError::Parse { .. })));
        assert!(matches!(FinitePoset::parse("elements 1; cover 1<5"), Err(PosetError::Parse { .. })));
        assert_eq!(FinitePoset::parse(&FinitePoset::d4().to_spec()).unwrap(), FinitePoset::d4());
    }

    #[test]
    fn chain_sets() {
        let p = FinitePoset::chain(2);
        assert_eq!(names(&p, &p.open_sets()), ["∅", "2", "12"]);
        for n in 1..6 {
            assert_eq!(FinitePoset::chain(n).connected_lc_sets().len(), n * (n + 1) / 2);
        }
        let a = FinitePoset::antichain(2);
        assert_eq!(a.open_sets().len(), 4);
        assert_eq!(names(&a, &a.connected_lc_sets()), ["1", "2"]);
    }

    #[test]
    fn closure_examples() {
        let p = FinitePoset::chain(4);
        let c = p.closure_ops(p.parse_set("23").unwrap());
        assert_eq!(c.cl, p.parse_set("123").unwrap());
        assert_eq!(c.cl_boundary, p.parse_set("1").unwrap());
        assert_eq!(c.up, p.parse_set("234").unwrap());
        assert_eq!(c.up_boundary, p.parse_set("4").unwrap());
        let d = FinitePoset::d4();
        let c = d.closure_ops(d.parse_set("234").unwrap());
        assert_eq!(c.up, d.parse_set("234").unwrap());
        assert!(c.up_boundary.is_empty());
        assert_eq!(c.cl, d.full());
        assert_eq!(c.cl_boundary, d.parse_set("1").unwrap());
    }

    #[test]
    fn components_examples() {
        let d = FinitePoset::d4();
        assert_eq!(names(&d, &d.components(d.parse_set("123").unwrap())), ["1", "2", "3"]);
        assert_eq!(d.components(d.full()), vec![d.full()]);
        assert!(d.components(LCSet::EMPTY).is_empty());
    }

    #[test]
    fn locally_closed_iff_difference_of_opens() {
        for p in [FinitePoset::d4(), FinitePoset::chain(4), FinitePoset::d4().opposite(), FinitePoset::antichain(3)] {
            let opens = p.open_sets();
            for y in p.all_subsets() {
                let as_diff = opens.iter().any(|&u| opens.iter().any(|&v| v.is_subset(u) && u.minus(v) == y));
                assert_eq!(as_diff, p.is_locally_closed(y));
            }
        }
    }
}
