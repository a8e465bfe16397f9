//! Reproduction checks: hom tables, the refined ring, the D4 counterexample
//! module and its Ext groups, and randomized freeness and resolution tests.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::category::{
    builtin_ring, d4_category, d4_refined_category, nil_ss_split, refined_embedding, validate_ring, CategoryRing,
    RingElement, RingError,
};
use crate::complex::{hom_group, Exactness};
use crate::group::GradedAbelianGroup;
use crate::module::random::{random_exact_module, random_module, simple_module};
use crate::module::{
    check_resolution, counterexample, counterexample_mod_k, ext_from_resolution, free_module, free_resolution,
    graded_values, hom_modules, is_exact, is_free, j_map, kernel, p0_spec, parse_module, restrict, spec_to_string,
    ss_part, tor1_ss, validate_module, FreeSummand, Module, ModuleError, ModuleHom, DEFAULT_MAX_LENGTH,
};
use crate::poset::{FinitePoset, PosetError};
use crate::table::hom_table;

pub const D4_POSET: &str = include_str!("../data/d4.poset");
pub const M_MODULE: &str = include_str!("../data/M.mod");
pub const MK_MODULE: &str = include_str!("../data/Mk.mod");
pub const P1234_MODULE: &str = include_str!("../data/P1234.mod");
pub const MPRIME_MODULE: &str = include_str!("../data/Mprime.mod");

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub computed: String,
    pub expected: String,
}

impl Check {
    fn new(name: impl Into<String>, computed: impl fmt::Display, expected: impl fmt::Display) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        Check { name: name.into(), passed: computed == expected, computed, expected }
    }

    fn flag(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, ok, true)
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub tag: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

type Outcome = Result<Vec<Check>, VerifyError>;

pub struct Criterion {
    pub id: usize,
    pub tag: &'static str,
    pub title: &'static str,
    run: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, tag: "chain-table", title: "two-point chain hom table", run: chain_table },
    Criterion { id: 2, tag: "chain-law", title: "three-case law on chains n = 2..5", run: chain_law_checks },
    Criterion { id: 3, tag: "d4-table", title: "D4 hom table", run: d4_table },
    Criterion { id: 4, tag: "refined", title: "refined ring at 12344", run: refined_table },
    Criterion { id: 5, tag: "counterexample", title: "non-free exact module M", run: counterexample_checks },
    Criterion { id: 6, tag: "ext", title: "Ext groups of M and M/kM", run: ext_checks },
    Criterion { id: 7, tag: "free", title: "freeness criterion on chains", run: freeness_property },
    Criterion { id: 8, tag: "length-one", title: "length-one resolutions on chains", run: length_one_chains },
    Criterion {
        id: 9,
        tag: "refined-length-one",
        title: "length-one resolutions over the refined ring",
        run: length_one_refined,
    },
    Criterion { id: 10, tag: "structure", title: "ring structure invariants", run: structure_checks },
];

/// Whether a criterion is selected by `only`, which may be a number, a tag
/// or a prefix of a tag.
pub fn selected(c: &Criterion, only: Option<&str>) -> bool {
    match only {
        None => true,
        Some(o) => o == c.id.to_string() || c.tag.starts_with(o),
    }
}

pub fn run(only: Option<&str>) -> Vec<CriterionReport> {
    CRITERIA.iter().filter(|c| selected(c, only)).map(run_one).collect()
}

pub fn run_one(c: &Criterion) -> CriterionReport {
    let (checks, error) = match (c.run)() {
        Ok(checks) => (checks, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    CriterionReport { id: c.id, tag: c.tag, title: c.title, checks, error }
}

fn g(s: &str) -> GradedAbelianGroup {
    s.parse().expect("expected value literal")
}

/// Collects mismatches of a list of `(label, computed, expected)` triples into one check.
fn table_check(name: &str, rows: Vec<(String, GradedAbelianGroup, GradedAbelianGroup)>) -> Check {
    let total = rows.len();
    let bad: Vec<String> = rows.iter().filter(|(_, c, e)| c != e).map(|(l, c, e)| format!("{l}: {c} vs {e}")).collect();
    if bad.is_empty() {
        Check::new(name, format!("{total} entries match"), format!("{total} entries match"))
    } else {
        Check::new(name, bad.join("; "), format!("{total} entries match"))
    }
}

const CHAIN2: [(&str, &str, &str); 9] = [
    ("1", "1", "Z[0]"),
    ("1", "2", "Z[1]"),
    ("1", "12", "0"),
    ("2", "1", "0"),
    ("2", "2", "Z[0]"),
    ("2", "12", "Z[0]"),
    ("12", "1", "Z[0]"),
    ("12", "2", "0"),
    ("12", "12", "Z[0]"),
];

fn chain_table() -> Outcome {
    let p = FinitePoset::chain(2);
    let ring = builtin_ring("chain:2")?;
    let mut from_space = Vec::new();
    let mut from_ring = Vec::new();
    for (y, z, e) in CHAIN2 {
        let (ys, zs) = (p.parse_set(y)?, p.parse_set(z)?);
        from_space.push((format!("({y},{z})"), hom_group(&p, ys, zs).groups, g(e)));
        let (yi, zi) = (ring.object_index(y)?, ring.object_index(z)?);
        from_ring.push((format!("({y},{z})"), ring.hom_graded(yi, zi), g(e)));
    }
    Ok(vec![table_check("cohomology of S(Y,Z)", from_space), table_check("ring basis", from_ring)])
}

/// The closed-form answer on the chain `1 ⪯ … ⪯ n` for `Y = [a1,b1]`, `Z = [a2,b2]`.
pub fn chain_law(a1: usize, b1: usize, a2: usize, b2: usize) -> GradedAbelianGroup {
    if a2 <= a1 && a1 <= b2 && b2 <= b1 {
        g("Z[0]")
    } else if a2 <= b1 + 1 && a1 < a2 && b1 < b2 {
        g("Z[1]")
    } else {
        GradedAbelianGroup::zero()
    }
}

fn chain_law_checks() -> Outcome {
    let mut checks = Vec::new();
    for n in 2..=5 {
        let p = FinitePoset::chain(n);
        let sets = p.connected_lc_sets();
        let interval = |s: crate::poset::LCSet| {
            let m = s.members();
            (m[0] + 1, m[m.len() - 1] + 1)
        };
        let mut rows = Vec::new();
        let mut heuristic = 0;
        for &y in &sets {
            for &z in &sets {
                let k = hom_group(&p, y, z);
                if k.exactness != Exactness::Exact {
                    heuristic += 1;
                }
                let ((a1, b1), (a2, b2)) = (interval(y), interval(z));
                rows.push((format!("([{a1},{b1}],[{a2},{b2}])"), k.groups, chain_law(a1, b1, a2, b2)));
            }
        }
        checks.push(Check::new(format!("n={n} pair count"), rows.len(), n * n * (n + 1) * (n + 1) / 4));
        checks.push(table_check(&format!("n={n} law"), rows));
        checks.push(Check::new(format!("n={n} heuristic entries"), heuristic, 0));
    }
    Ok(checks)
}

const D4_ORDER: [&str; 11] = ["4", "14", "24", "34", "124", "134", "234", "1234", "1", "2", "3"];

const TABLE1: [[&str; 11]; 11] = [
    ["Z", "Z", "Z", "Z", "Z", "Z", "Z", "Z", "0", "0", "0"],
    ["0", "Z", "0", "0", "Z", "Z", "0", "Z", "Z", "0", "0"],
    ["0", "0", "Z", "0", "Z", "0", "Z", "Z", "0", "Z", "0"],
    ["0", "0", "0", "Z", "0", "Z", "Z", "Z", "0", "0", "Z"],
    ["Z[1]", "0", "0", "Z[1]", "Z", "0", "0", "Z", "Z", "Z", "0"],
    ["Z[1]", "0", "Z[1]", "0", "0", "Z", "0", "Z", "Z", "0", "Z"],
    ["Z[1]", "Z[1]", "0", "0", "0", "0", "Z", "Z", "0", "Z", "Z"],
    ["Z^2[1]", "Z[1]", "Z[1]", "Z[1]", "0", "0", "0", "Z", "Z", "Z", "Z"],
    ["Z[1]", "0", "Z[1]", "Z[1]", "0", "0", "Z[1]", "0", "Z", "0", "0"],
    ["Z[1]", "Z[1]", "0", "Z[1]", "0", "Z[1]", "0", "0", "0", "Z", "0"],
    ["Z[1]", "Z[1]", "Z[1]", "0", "Z[1]", "0", "0", "0", "0", "0", "Z"],
];

fn d4_table() -> Outcome {
    let p = FinitePoset::parse(D4_POSET)?;
    let t = hom_table(&p);
    let ring = d4_category()?;
    let mut from_space = Vec::new();
    let mut from_ring = Vec::new();
    for (i, y) in D4_ORDER.iter().enumerate() {
        for (j, z) in D4_ORDER.iter().enumerate() {
            let expect = g(TABLE1[i][j]);
            let label = format!("({y},{z})");
            let computed = t.get(y, z).map_or_else(GradedAbelianGroup::zero, |e| e.groups.clone());
            from_space.push((label.clone(), computed, expect.clone()));
            from_ring.push((label, ring.hom_graded(ring.object_index(y)?, ring.object_index(z)?), expect));
        }
    }
    Ok(vec![
        Check::new("layout", t.names.join(" "), D4_ORDER.join(" ")),
        table_check("cohomology of S(Y,Z)", from_space),
        table_check("ring basis", from_ring),
        Check::flag("every entry flagged exact", t.all_exact()),
        Check::new("(1234,4)", t.get("1234", "4").map(|e| e.groups.to_string()).unwrap_or_default(), "Z^2[1]"),
    ])
}

const INTO_TOP: [(&str, &str); 12] = [
    ("4", "Z^2[0]"),
    ("14", "Z[0]"),
    ("24", "Z[0]"),
    ("34", "Z[0]"),
    ("124", "0"),
    ("134", "0"),
    ("234", "0"),
    ("1234", "Z[1]"),
    ("1", "Z[1]"),
    ("2", "Z[1]"),
    ("3", "Z[1]"),
    ("12344", "Z[0]"),
];

/// Values of the counterexample module `M`.
const M_VALUES: [(&str, &str); 11] = [
    ("4", "Z[1]"),
    ("14", "0"),
    ("24", "0"),
    ("34", "0"),
    ("124", "Z[0]"),
    ("134", "Z[0]"),
    ("234", "Z[0]"),
    ("1234", "Z^2[0]"),
    ("1", "Z[0]"),
    ("2", "Z[0]"),
    ("3", "Z[0]"),
];

fn refined_table() -> Outcome {
    let r = d4_refined_category()?;
    let top = r.object_index("12344")?;
    let mut into = Vec::new();
    for (y, e) in INTO_TOP {
        into.push((y.to_string(), r.hom_graded(r.object_index(y)?, top), g(e)));
    }
    let mut out = Vec::new();
    for (z, e) in M_VALUES.iter().chain([&("12344", "Z[0]")]) {
        out.push((z.to_string(), r.hom_graded(top, r.object_index(z)?), g(e)));
    }
    let d4 = Arc::new(d4_category()?);
    let m = counterexample(&d4)?;
    let mut against_m = Vec::new();
    for (z, _) in M_VALUES {
        against_m.push((z.to_string(), r.hom_graded(top, r.object_index(z)?), m.value_at(z)?));
    }
    let rep = validate_ring(&r);
    Ok(vec![
        table_check("hom(Y, 12344)", into),
        table_check("hom(12344, Z)", out),
        table_check("hom(12344, Z) against cokernel(j)", against_m),
        Check::new("validate_ring failures", rep.failures.len(), 0),
    ])
}

fn values_check(name: &str, m: &Module, expected: &[(&str, &str)]) -> Result<Check, VerifyError> {
    let mut rows = Vec::new();
    for (y, e) in expected {
        rows.push((y.to_string(), m.value_at(y)?, g(e)));
    }
    Ok(table_check(name, rows))
}

fn has_iso(a: &Module, b: &Module) -> Result<bool, VerifyError> {
    Ok(hom_modules(a, b)?.basis[0].iter().any(ModuleHom::is_iso))
}

fn counterexample_checks() -> Outcome {
    let ring = Arc::new(d4_category()?);
    let j = j_map(&ring)?;
    let m = counterexample(&ring)?;
    let hand = crate::module::parse_module_over(M_MODULE, &ring)?;
    let free = is_free(&m);
    let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
    let p0 = free_module(&ring, &p0_spec(&ring)?);
    let top = free_module(&ring, &[FreeSummand { object: ring.object_index("1234")?, shift: 0 }]);
    Ok(vec![
        values_check("slots of cokernel(j)", &m, &M_VALUES)?,
        Check::flag("j is a homomorphism", j.check().is_empty()),
        Check::flag("kernel(j) = 0", kernel(&j).0.is_zero()),
        Check::flag("validate_module(M)", validate_module(&m).passed()),
        Check::flag("hand-entered M validates", validate_module(&hand).passed()),
        Check::flag("hand-entered M ≅ cokernel(j)", has_iso(&hand, &m)?),
        Check::new("is_exact(M)", is_exact(&m).exact(), true),
        Check::new("slotwise free", m.is_slotwise_free(), true),
        Check::new("M_ss slotwise free", free.ss_free, true),
        Check::new("Tor1(ss, M)", &free.tor1, "Z[0]"),
        Check::new("is_free(M)", free.free, false),
        Check::new("Hom(P0, P_1234)", hom_modules(&p0, &top)?.group, "0"),
        Check::new("resolution complete", res.complete, true),
        Check::new("resolution length", res.length(), 1),
        Check::new("F1", spec_to_string(&ring, &res.specs[1]), "P_1234"),
        Check::new("F0", spec_to_string(&ring, &res.specs[0]), "P_124 + P_134 + P_234"),
        Check::new("resolution defects", check_resolution(&res).len(), 0),
    ])
}

fn sorted_spec(ring: &CategoryRing, spec: &[FreeSummand]) -> String {
    let mut s = spec.to_vec();
    s.sort();
    spec_to_string(ring, &s)
}

fn ext_checks() -> Outcome {
    let ring = Arc::new(d4_category()?);
    let top_obj = ring.object_index("1234")?;
    let p1234 = parse_module_over_checked(P1234_MODULE, &ring)?;
    let mut checks = vec![Check::flag(
        "P_1234 file matches the free module",
        graded_values(&p1234) == graded_values(&free_module(&ring, &[FreeSummand { object: top_obj, shift: 0 }])),
    )];
    let file_mk = parse_module_over_checked(MK_MODULE, &ring)?;
    checks.push(Check::flag("Mk file ≅ M/2M", has_iso(&file_mk, &counterexample_mod_k(&ring, 2)?)?));
    let p0 = sorted_spec(&ring, &p0_spec(&ring)?);
    let mut f1 = p0_spec(&ring)?;
    f1.push(FreeSummand { object: top_obj, shift: 0 });
    let f1 = sorted_spec(&ring, &f1);
    for k in [2i64, 3, 4, 6] {
        let mk = counterexample_mod_k(&ring, k)?;
        let res = free_resolution(&mk, DEFAULT_MAX_LENGTH);
        checks.push(Check::new(
            format!("k={k} resolution length"),
            format!("{} {}", res.complete, res.length()),
            "true 2",
        ));
        if res.length() == 2 {
            checks.push(Check::new(format!("k={k} F0"), sorted_spec(&ring, &res.specs[0]), &p0));
            checks.push(Check::new(format!("k={k} F1"), sorted_spec(&ring, &res.specs[1]), &f1));
            checks.push(Check::new(format!("k={k} F2"), sorted_spec(&ring, &res.specs[2]), "P_1234"));
        }
        checks.push(Check::new(
            format!("k={k} Ext^2(M_k, P_1234)"),
            ext_from_resolution(&res, &p1234, 2)?,
            format!("Z/{k}[0]"),
        ));
        checks.push(Check::new(format!("k={k} Ext^1(M_k, P_1234)"), ext_from_resolution(&res, &p1234, 1)?, "0"));
        checks.push(Check::new(format!("k={k} Hom(M_k, P_1234)"), hom_modules(&mk, &p1234)?.group, "0"));
        checks.push(Check::new(format!("k={k} Ext^0 = Hom"), ext_from_resolution(&res, &p1234, 0)?, "0"));
    }
    let m = counterexample(&ring)?;
    let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
    let p4 = free_module(&ring, &[FreeSummand { object: ring.object_index("4")?, shift: 0 }]);
    let s1234 = simple_module(&ring, top_obj, 0, 0);
    let cases: [(&str, Module, &str); 4] =
        [("P_4", p4, "0"), ("S_1234", s1234, "Z[0]"), ("P_1234", p1234, "Z[0]"), ("M", m, "0")];
    for (name, n, expect) in cases {
        let e1 = ext_from_resolution(&res, &n, 1)?;
        checks.push(Check::new(format!("Ext^1(M, {name})"), &e1, expect));
        checks.push(Check::new(format!("{name}_ss(1234)"), ss_part(&n).module.value(top_obj), expect));
    }
    Ok(checks)
}

fn parse_module_over_checked(text: &str, ring: &Arc<CategoryRing>) -> Result<Module, VerifyError> {
    let m = crate::module::parse_module_over(text, ring)?;
    Ok(m)
}

const CHAIN_SIZES: [usize; 3] = [2, 3, 4];

fn chain_rings() -> Result<Vec<Arc<CategoryRing>>, VerifyError> {
    CHAIN_SIZES.iter().map(|n| Ok(Arc::new(builtin_ring(&format!("chain:{n}"))?))).collect()
}

fn freeness_property() -> Outcome {
    let rings = chain_rings()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let (mut agree, mut witnesses_ok, mut free_count, mut exact_count) = (0, 0, 0, 0);
    let mut bad = Vec::new();
    let total = 50;
    for i in 0..total {
        let ring = &rings[i % rings.len()];
        let m = random_module(&mut rng, ring);
        let exact = is_exact(&m).exact();
        let rep = is_free(&m);
        if rep.free {
            free_count += 1;
            let w = rep.witness.as_ref().expect("free modules carry a witness");
            let rebuilt = free_module(ring, &w.spec);
            if w.map.is_iso() && graded_values(&rebuilt) == graded_values(&m) {
                witnesses_ok += 1;
            }
        }
        if exact {
            exact_count += 1;
        }
        if (exact && m.is_slotwise_free()) == rep.free {
            agree += 1;
        } else {
            bad.push(format!("module {i} over {}", ring.name()));
        }
    }
    Ok(vec![
        Check::new("(exact and slotwise free) iff free", agree, total),
        Check::new("free witnesses are isomorphisms", witnesses_ok, free_count),
        Check::new("counterexamples", bad.join(", "), ""),
        Check::flag(
            format!("sample mixes free ({free_count}) and non-free, exact ({exact_count})"),
            free_count > 0 && free_count < total,
        ),
    ])
}

fn length_one_chains() -> Outcome {
    let rings = chain_rings()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let total = 50;
    let (mut exact_ok, mut short, mut sound) = (0, 0, 0);
    for i in 0..total {
        let m = random_exact_module(&mut rng, &rings[i % rings.len()]);
        if is_exact(&m).exact() {
            exact_ok += 1;
        }
        let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
        if res.complete && res.length() <= 1 {
            short += 1;
        }
        if check_resolution(&res).is_empty() {
            sound += 1;
        }
    }
    let mut non_exact = Vec::new();
    for ring in &rings[..2] {
        for y in 0..ring.num_objects() {
            non_exact.push(simple_module(ring, y, 0, 0));
        }
    }
    non_exact.push(simple_module(&rings[2], 0, 1, 3));
    let mut tor_nonzero = 0;
    let mut all_non_exact = true;
    for m in &non_exact {
        all_non_exact &= !is_exact(m).exact();
        if !tor1_ss(m).is_zero() {
            tor_nonzero += 1;
        }
    }
    Ok(vec![
        Check::new("random modules exact", exact_ok, total),
        Check::new("complete with length ≤ 1", short, total),
        Check::new("resolutions exact with d² = 0", sound, total),
        Check::flag(
            format!("{} constructed modules are not exact", non_exact.len()),
            all_non_exact && non_exact.len() >= 5,
        ),
        Check::new("non-exact modules with Tor1 ≠ 0", tor_nonzero, non_exact.len()),
    ])
}

fn length_one_refined() -> Outcome {
    let ring = Arc::new(d4_refined_category()?);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let total = 25;
    let (mut exact_ok, mut short) = (0, 0);
    for _ in 0..total {
        let m = random_exact_module(&mut rng, &ring);
        if is_exact(&m).exact() {
            exact_ok += 1;
        }
        let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
        if res.complete && res.length() <= 1 && check_resolution(&res).is_empty() {
            short += 1;
        }
    }
    let lift = parse_module(MPRIME_MODULE)?;
    let d4 = Arc::new(d4_category()?);
    let phi = refined_embedding(&d4, &ring)?;
    let restricted = restrict(&lift, &d4, &phi);
    let m = counterexample(&d4)?;
    let lift_free = is_free(&lift);
    Ok(vec![
        Check::new("random modules exact", exact_ok, total),
        Check::new("complete with length ≤ 1", short, total),
        Check::flag("lift M' validates", validate_module(&lift).passed()),
        Check::new("lift M' exact", is_exact(&lift).exact(), true),
        Check::new("lift M' free", lift_free.free, true),
        Check::new(
            "lift M' spec",
            lift_free.witness.map(|w| spec_to_string(&ring, &w.spec)).unwrap_or_default(),
            "P_12344",
        ),
        Check::flag("M' restricted to D4 ≅ M", has_iso(&m, &restricted)?),
    ])
}

fn odd_squares_vanish(ring: &CategoryRing) -> bool {
    let n = ring.basis().len();
    (0..n).all(|f| {
        (0..n).all(|g| {
            let (bf, bg) = (&ring.basis()[f], &ring.basis()[g]);
            bf.degree == 0 || bg.degree == 0 || !ring.is_composable(f, g) || ring.product(f, g).is_empty()
        })
    })
}

fn sum_vanishes(ring: &CategoryRing, paths: &[[&str; 2]]) -> Result<bool, VerifyError> {
    let mut acc: Option<RingElement> = None;
    for [first, second] in paths {
        let c = ring.compose(&ring.el(second)?, &ring.el(first)?)?;
        acc = Some(match acc {
            None => c,
            Some(a) => a.plus(&c)?,
        });
    }
    Ok(acc.is_some_and(|a| a.is_zero()))
}

fn structure_checks() -> Outcome {
    let mut checks = Vec::new();
    let names = ["chain:1", "chain:2", "chain:3", "chain:4", "chain:5", "d4", "d4op", "d4refined"];
    for name in names {
        let ring = builtin_ring(name)?;
        let rep = validate_ring(&ring);
        checks.push(Check::new(format!("{name} validate_ring failures"), rep.failures.len(), 0));
        let first = nil_ss_split(&ring).nil_index;
        let again = nil_ss_split(&builtin_ring(name)?).nil_index;
        checks.push(Check::new(format!("{name} nil index stable"), again, first));
        checks.push(Check::flag(format!("{name} nil index {first} ≥ 1"), first >= 1));
        if name.starts_with("chain") || name == "d4" {
            checks.push(Check::flag(format!("{name} odd ∘ odd = 0"), odd_squares_vanish(&ring)));
        }
    }
    let d4 = d4_category()?;
    let through_points = [["r[1234>1]", "d[1>4]"], ["r[1234>2]", "d[2>4]"], ["r[1234>3]", "d[3>4]"]];
    checks.push(Check::flag("sum of 1234 → j → 4 vanishes", sum_vanishes(&d4, &through_points)?));
    let refined = d4_refined_category()?;
    let through_pairs =
        [["b[12344>124]", "i[124>1234]"], ["b[12344>134]", "i[134>1234]"], ["b[12344>234]", "i[234>1234]"]];
    checks.push(Check::flag("sum of 12344 → ij4 → 1234 vanishes", sum_vanishes(&refined, &through_pairs)?));
    Ok(checks)
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} [{}] {} ({})", self.id, self.title, self.tag)?;
        if let Some(e) = &self.error {
            writeln!(f, "    error: {e}")?;
        }
        for c in &self.checks {
            let mark = if c.passed { "ok " } else { "BAD" };
            if c.passed {
                writeln!(f, "    {mark} {}: {}", c.name, c.computed)?;
            } else {
                writeln!(f, "    {mark} {}: computed {} expected {}", c.name, c.computed, c.expected)?;
            }
        }
        Ok(())
    }
}
