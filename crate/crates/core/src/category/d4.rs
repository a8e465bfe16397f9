//! The four-point space `1, 2, 3 ⪯ 4`, its opposite, and the refinement with
//! the extra object `12344`.

use super::path::{build, Quiver, Relation};
use super::{CategoryRing, ObjectId, RingError, RingMap};
use crate::poset::FinitePoset;

const PAIRS: [(u8, u8, u8); 3] = [(1, 2, 3), (1, 3, 2), (2, 3, 1)];

fn pair_name(i: u8, j: u8) -> String {
    format!("{i}{j}4")
}

fn objects_of(p: &FinitePoset) -> Vec<ObjectId> {
    p.connected_lc_sets().into_iter().map(|s| ObjectId { name: p.set_name(s), set: Some(s) }).collect()
}

/// Arrows shared by both presentations: `4 → j4`, `ij4 → 1234`, `1234 → j`, `j → 4`.
fn common_arrows(q: &mut Quiver) {
    for j in 1..=3 {
        q.add_arrow("4", &format!("{j}4"), 0, format!("i[4>{j}4]"));
    }
    for (i, j, _) in PAIRS {
        let ij = pair_name(i, j);
        q.add_arrow(&ij, "1234", 0, format!("i[{ij}>1234]"));
    }
    for j in 1..=3 {
        q.add_arrow("1234", &j.to_string(), 0, format!("r[1234>{j}]"));
    }
    for j in 1..=3 {
        q.add_arrow(&j.to_string(), "4", 1, format!("d[{j}>4]"));
    }
}

fn common_relations(q: &Quiver) -> Vec<Relation> {
    let mut rels = Vec::new();
    for (i, j, k) in PAIRS {
        let ij = pair_name(i, j);
        rels.push(Relation::new(vec![(1, q.path(&[&format!("i[{ij}>1234]"), &format!("r[1234>{k}]")]))]));
    }
    for j in 1..=3 {
        rels.push(Relation::new(vec![(1, q.path(&[&format!("d[{j}>4]"), &format!("i[4>{j}4]")]))]));
    }
    rels.push(Relation::new((1..=3).map(|j| (1, q.path(&[&format!("r[1234>{j}]"), &format!("d[{j}>4]")]))).collect()));
    rels
}

fn d4_presentation() -> (FinitePoset, Quiver, Vec<Relation>) {
    let p = FinitePoset::d4();
    let mut q = Quiver { objects: objects_of(&p), arrows: Vec::new() };
    common_arrows(&mut q);
    for (i, j, _) in PAIRS {
        let ij = pair_name(i, j);
        for l in [i, j] {
            q.add_arrow(&format!("{l}4"), &ij, 0, format!("i[{l}4>{ij}]"));
        }
    }
    let mut rels = common_relations(&q);
    for (i, j, _) in PAIRS {
        let ij = pair_name(i, j);
        rels.push(Relation::new(vec![
            (1, q.path(&[&format!("i[4>{i}4]"), &format!("i[{i}4>{ij}]")])),
            (-1, q.path(&[&format!("i[4>{j}4]"), &format!("i[{j}4>{ij}]")])),
        ]));
    }
    for l in 1..=3u8 {
        let through: Vec<String> =
            PAIRS.iter().filter(|(i, j, _)| *i == l || *j == l).map(|(i, j, _)| pair_name(*i, *j)).collect();
        let leg = |ij: &str| q.path(&[&format!("i[{l}4>{ij}]"), &format!("i[{ij}>1234]")]);
        rels.push(Relation::new(vec![(1, leg(&through[0])), (-1, leg(&through[1]))]));
    }
    (p, q, rels)
}

pub fn d4_category() -> Result<CategoryRing, RingError> {
    let (p, q, rels) = d4_presentation();
    build("d4", Some(p), &q, &rels)
}

/// The opposite space, presented by reversing every arrow: an open inclusion
/// becomes a restriction and vice versa.
pub fn d4op_category() -> Result<CategoryRing, RingError> {
    let (p, q, rels) = d4_presentation();
    let swap = |a: &super::path::Arrow| {
        let (s, t) = (&q.objects[a.source].name, &q.objects[a.target].name);
        let kind = match &a.label[..1] {
            "i" => "r",
            "r" => "i",
            other => other,
        };
        format!("{kind}[{t}>{s}]")
    };
    let qop = q.opposite(swap);
    let rels: Vec<Relation> = rels.iter().map(Relation::opposite).collect();
    build("d4op", Some(p.opposite()), &qop, &rels)
}

/// Sign with which `i[l4>ij4]` equals `b[12344>ij4] ∘ a[l4>12344]`.
pub fn refined_sign(i: u8, j: u8, l: u8) -> i64 {
    match (i, j, l) {
        (1, 2, 1) | (2, 3, 2) | (1, 3, 3) => 1,
        (1, 2, 2) | (2, 3, 3) | (1, 3, 1) => -1,
        _ => panic!("{l} is not in {i}{j}"),
    }
}

pub fn d4_refined_category() -> Result<CategoryRing, RingError> {
    let p = FinitePoset::d4();
    let mut objects = objects_of(&p);
    objects.push(ObjectId { name: "12344".into(), set: None });
    let mut q = Quiver { objects, arrows: Vec::new() };
    common_arrows(&mut q);
    for j in 1..=3 {
        q.add_arrow(&format!("{j}4"), "12344", 0, format!("a[{j}4>12344]"));
    }
    for (i, j, _) in PAIRS {
        let ij = pair_name(i, j);
        q.add_arrow("12344", &ij, 0, format!("b[12344>{ij}]"));
    }
    let mut rels = common_relations(&q);
    rels.push(Relation::new(
        (1..=3).map(|j| (1, q.path(&[&format!("i[4>{j}4]"), &format!("a[{j}4>12344]")]))).collect(),
    ));
    rels.push(Relation::new(
        PAIRS
            .iter()
            .map(|&(i, j, _)| {
                let ij = pair_name(i, j);
                (1, q.path(&[&format!("b[12344>{ij}]"), &format!("i[{ij}>1234]")]))
            })
            .collect(),
    ));
    for (i, j, k) in PAIRS {
        let ij = pair_name(i, j);
        rels.push(Relation::new(vec![(1, q.path(&[&format!("a[{k}4>12344]"), &format!("b[12344>{ij}]")]))]));
    }
    let mut ring = build("d4refined", Some(p), &q, &rels)?;
    let top = ring.object_index("12344")?;
    for (i, j, k) in PAIRS {
        let t = ring.make_triple(
            format!("12344/{k}4"),
            vec![ring.object_index(&format!("{k}4"))?],
            vec![top],
            vec![ring.object_index(&pair_name(i, j))?],
        )?;
        ring.push_triple(t);
    }
    Ok(ring)
}

/// The functor from the D4 ring onto the full subcategory of the refined ring
/// on the original objects.
pub fn refined_embedding(d4: &CategoryRing, refined: &CategoryRing) -> Result<RingMap, RingError> {
    let object_map = d4.objects().iter().map(|o| refined.object_index(&o.name)).collect::<Result<Vec<_>, _>>()?;
    let mut gen_images = std::collections::HashMap::new();
    for &g in d4.generators() {
        let label = &d4.basis()[g].label;
        let image = match parse_inclusion(label) {
            Some((l, i, j)) => {
                let a = refined.el(&format!("a[{l}4>12344]"))?;
                let b = refined.el(&format!("b[12344>{}]", pair_name(i, j)))?;
                refined.compose(&b, &a)?.scaled(refined_sign(i, j, l))
            }
            None => refined.el(label)?,
        };
        gen_images.insert(g, image);
    }
    RingMap::from_generators(d4, refined, object_map, &gen_images)
}

/// `i[l4>ij4]` ↦ `(l, i, j)`.
fn parse_inclusion(label: &str) -> Option<(u8, u8, u8)> {
    let inner = label.strip_prefix("i[")?.strip_suffix(']')?;
    let (src, tgt) = inner.split_once('>')?;
    let (s, t) = (src.as_bytes(), tgt.as_bytes());
    if s.len() == 2 && t.len() == 3 && s[1] == b'4' && t[2] == b'4' {
        Some((s[0] - b'0', t[0] - b'0', t[1] - b'0'))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nil_ss_split, validate_ring};

    #[test]
    fn d4_validates() {
        let r = d4_category().unwrap();
        let rep = validate_ring(&r);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.nil_index >= 3);
        assert_eq!(r.num_objects(), 11);
    }

    #[test]
    fn d4op_validates() {
        let r = d4op_category().unwrap();
        let rep = validate_ring(&r);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn refined_validates_on_original_objects() {
        let r = d4_refined_category().unwrap();
        let rep = validate_ring(&r);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(r.triples().iter().filter(|t| t.label.starts_with("12344")).count(), 3);
    }

    #[test]
    fn d4_relations() {
        let r = d4_category().unwrap();
        let c = |f: &str, g: &str| r.compose(&r.el(f).unwrap(), &r.el(g).unwrap()).unwrap();
        assert!(c("r[1234>3]", "i[124>1234]").is_zero());
        let s2 = c("d[2>4]", "r[1234>2]");
        let s1 = c("d[1>4]", "r[1234>1]");
        let s3 = c("d[3>4]", "r[1234>3]");
        assert!(s1.plus(&s2).unwrap().plus(&s3).unwrap().is_zero());
        let left = r.compose(&s2, &r.el("i[124>1234]").unwrap()).unwrap();
        let right = r.compose(&s1, &r.el("i[124>1234]").unwrap()).unwrap();
        assert!(!left.is_zero());
        assert_eq!(left, right.scaled(-1));
        assert_eq!(c("i[24>124]", "i[4>24]"), c("i[14>124]", "i[4>14]"));
        assert!(nil_ss_split(&r).nil_index >= 3);
    }

    #[test]
    fn embedding_is_a_full_functor() {
        let d4 = d4_category().unwrap();
        let refined = d4_refined_category().unwrap();
        let phi = refined_embedding(&d4, &refined).unwrap();
        assert!(phi.check_functor(&d4, &refined).is_empty());
        assert!(phi.check_bijective(&d4, &refined).is_empty());
    }
}
