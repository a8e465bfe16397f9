//! The non-free exact module over the D4 ring and its reductions mod k.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{
    cokernel, free_hom, free_layout, free_module, quotient_mod_k, FreeSummand, Module, ModuleError, ModuleHom,
};
use crate::category::CategoryRing;

/// `P_124 ⊕ P_134 ⊕ P_234`.
pub fn p0_spec(ring: &CategoryRing) -> Result<Vec<FreeSummand>, ModuleError> {
    ["124", "134", "234"].iter().map(|n| Ok(FreeSummand { object: ring.object_index(n)?, shift: 0 })).collect()
}

/// `j: P_1234 → P_124 ⊕ P_134 ⊕ P_234`, induced by the three inclusions `ij4 → 1234`.
pub fn j_map(ring: &Arc<CategoryRing>) -> Result<ModuleHom, ModuleError> {
    let top = ring.object_index("1234")?;
    let src = [FreeSummand { object: top, shift: 0 }];
    let tgt = p0_spec(ring)?;
    let layout = free_layout(ring, &tgt, top, 0);
    let mut image = vec![BigInt::from(0); layout.len()];
    for (k, s) in tgt.iter().enumerate() {
        let name = &ring.objects()[s.object].name;
        let b = ring.label_index(&format!("i[{name}>1234]"))?;
        let pos = layout.iter().position(|&x| x == (k, b)).expect("inclusion in layout");
        image[pos] = BigInt::from(1);
    }
    Ok(free_hom(&free_module(ring, &src), &src, &free_module(ring, &tgt), &[image]))
}

/// `M = (P_124 ⊕ P_134 ⊕ P_234) / j(P_1234)`.
pub fn counterexample(ring: &Arc<CategoryRing>) -> Result<Module, ModuleError> {
    Ok(cokernel(&j_map(ring)?).0)
}

/// `M / kM`.
pub fn counterexample_mod_k(ring: &Arc<CategoryRing>, k: i64) -> Result<Module, ModuleError> {
    Ok(quotient_mod_k(&counterexample(ring)?, k))
}
