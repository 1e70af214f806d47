mod common;

use common::{section_lemmas, weak_comodule_lemmas, weak_hopf_lemmas};
use doiko_core::corpus::{canonical_dk_data, cyclic_group_algebra, pair_groupoid_algebra, weak_hopf_corpus};
use doiko_core::doikoppinen::comodule_algebra_backward;
use doiko_core::{Field, WeakSetting, Q};

#[test]
fn counital_map_identities_hold_on_corpus() {
    for h in weak_hopf_corpus::<Q>() {
        let r = weak_hopf_lemmas(&h.value);
        assert!(r.passed(), "{}: {r}", h.label);
    }
}

#[test]
fn section_identities_hold_on_canonical_data() {
    for h in [pair_groupoid_algebra::<Q>(2), cyclic_group_algebra(2), cyclic_group_algebra(3)] {
        let w = WeakSetting::new(h).unwrap();
        for d in canonical_dk_data(&w.bialgebroid).unwrap() {
            let r = section_lemmas(&w, &d.value.algebra);
            assert!(r.passed(), "{}: {r}", d.label);
            let weak = comodule_algebra_backward(&w, &d.value.algebra).unwrap();
            let r = weak_comodule_lemmas(&w.hopf, &weak);
            assert!(r.passed(), "{}: {r}", d.label);
        }
    }
}

#[test]
fn broken_antipode_inverse_breaks_sliding() {
    let mut h = pair_groupoid_algebra::<Q>(2);
    h.antipode_inv = h.antipode_inv.scale(&Q::from_i64(2));
    let r = weak_hopf_lemmas(&h);
    assert_eq!(r.failed_law_names(), vec!["pi_left.slides_across_comult"]);
}
