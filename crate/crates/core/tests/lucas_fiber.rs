use nbasis::ff::FieldSpec;
use nbasis::lucas::{fiber_field, fiber_field_resultant, find_generator, LucasParams};

#[test]
fn curve_reduction_and_resultant_find_the_same_fiber() {
    for (q, n) in [
        (5, 2),
        (5, 3),
        (7, 2),
        (7, 4),
        (9, 5),
        (11, 4),
        (11, 6),
        (13, 7),
        (17, 6),
    ] {
        let k = FieldSpec::of_order(q).unwrap();
        let params = LucasParams::with_defaults(&k, n).unwrap();
        let a = find_generator(&params, 1).unwrap();
        let direct = fiber_field(&params, &a, 1).unwrap();
        let via_resultant = fiber_field_resultant(&params, &a, 1).unwrap();
        assert_eq!(direct, via_resultant, "q={q} n={n}");
    }
}
