mod common;

use common::props::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn matcher_commutes_with_reflection(case in (tree(10), tree(5), mode())) {
        check_reflection(case)?;
    }

    #[test]
    fn parent_and_descendants_are_dual(t in tree(12)) {
        check_parent_descendant(t)?;
    }

    #[test]
    fn parse_render_round_trip(case in (tree(14), separators())) {
        check_round_trip(case)?;
    }

    #[test]
    fn rational_functions_form_a_field(case in (gf(), gf(), gf())) {
        check_field_axioms(case)?;
    }

    #[test]
    fn series_of_product_is_convolution(case in (gf(), gf())) {
        check_convolution(case)?;
    }

    #[test]
    fn redundant_patterns_do_not_change_gf(case in redundant_sets()) {
        check_redundancy(case)?;
    }
}
