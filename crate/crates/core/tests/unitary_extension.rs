//! Of the three involutory outer automorphism types of PSL(3,4) (field,
//! graph, graph·field), only the graph·field one yields a rational group
//! with odd-order conjugacy. This pins down which extension is meant.

use ocgroup::analysis::{
    class_count_of_order, conjugacy_classes, is_rational_group, odd_order_conjugacy, p_core,
};
use ocgroup::construct::{l3_4_beta, l3_4_field_extension, l3_4_graph_extension};

#[test]
fn only_the_unitary_extension_satisfies_both_predicates() {
    let unitary = l3_4_beta().unwrap();
    assert!(is_rational_group(&unitary).unwrap());
    assert!(odd_order_conjugacy(&unitary).unwrap());
    assert_eq!(p_core(&unitary, 2).unwrap().order(), 1);

    for other in [l3_4_field_extension().unwrap(), l3_4_graph_extension().unwrap()] {
        assert_eq!(other.order(), 40320);
        let both = is_rational_group(&other).unwrap() && odd_order_conjugacy(&other).unwrap();
        assert!(!both);
    }
}

#[test]
fn order_four_classes_of_the_unitary_extension() {
    // three classes inside PSL(3,4), each of size 1260, plus one outer class
    let g = l3_4_beta().unwrap();
    let classes = conjugacy_classes(&g).unwrap();
    let mut four: Vec<usize> = classes.iter().filter(|c| c.rep_order == 4).map(|c| c.size).collect();
    four.sort_unstable();
    assert_eq!(four, [1260, 1260, 1260, 2520]);
    assert_eq!(class_count_of_order(&g, 4).unwrap(), 4);
    assert_eq!(classes.len(), 14);
}
