use std::sync::Arc;

use fk_core::category::{d4_category, validate_ring};
use fk_core::module::{parse_module_over, validate_module};
use fk_core::poset::FinitePoset;
use fk_core::table::hom_table;
use fk_core::verify::{D4_POSET, M_MODULE};

#[test]
fn flipped_product_sign_breaks_m_but_not_the_table() {
    let ring = d4_category().unwrap();
    let r1 = ring.object_index("1").unwrap();
    let d = ring.basis().iter().position(|b| b.label == "d[1>4]").unwrap();
    let r = ring.basis().iter().position(|b| b.label == "r[1234>1]").unwrap();
    let (h, c) = ring.product(d, r)[0];
    let bad = Arc::new(ring.perturbed(d, r, -2 * c));
    assert_eq!(bad.product(d, r), [(h, -c)]);
    assert_eq!(ring.hom_graded(r1, r1), bad.hom_graded(r1, r1));

    let table = hom_table(&FinitePoset::parse(D4_POSET).unwrap());
    assert!(table.all_exact());
    assert_eq!(table.get("1234", "4").unwrap().groups.to_string(), "Z^2[1]");

    let good = parse_module_over(M_MODULE, &Arc::new(ring)).unwrap();
    assert!(validate_module(&good).passed());
    let broken = parse_module_over(M_MODULE, &bad);
    assert!(broken.map_or(true, |m| !validate_module(&m).passed()));
    assert!(!validate_ring(&bad).failures.is_empty());
}
