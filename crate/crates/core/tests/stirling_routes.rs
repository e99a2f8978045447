use bernoulli_stirling::exact::binomial;
use bernoulli_stirling::stirling::{
    stirling_enumerate, stirling_explicit, stirling_via_series, triangle_load, triangle_save, StirlingSeries,
};
use bernoulli_stirling::StirlingTriangle;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn recurrence_explicit_and_series_agree_through_forty() {
    let t = StirlingTriangle::build(40);
    let mut series = StirlingSeries::new(40);
    for k in 0..=40 {
        for n in k..=40 {
            let v = t.get(n, k).unwrap();
            assert_eq!(&stirling_explicit(n, k).unwrap(), v, "explicit S({n},{k})");
            assert_eq!(&series.value(n).unwrap(), v, "series S({n},{k})");
        }
        series.advance();
    }
    assert_eq!(stirling_via_series(40, 20, 40).unwrap(), *t.get(40, 20).unwrap());
}

#[test]
fn enumeration_agrees_through_eight() {
    let t = StirlingTriangle::build(8);
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(&stirling_enumerate(n, k).unwrap(), t.get(n, k).unwrap(), "S({n},{k})");
        }
    }
}

#[test]
fn bell_recurrence_through_fifteen() {
    let t = StirlingTriangle::build(16);
    let bell: Vec<BigInt> = t.rows().iter().map(|r| r.iter().sum()).collect();
    for n in 0..=15 {
        let rhs: BigInt = (0..=n).map(|k| binomial(n, k) * &bell[k]).sum();
        assert_eq!(bell[n + 1], rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn cache_file_roundtrip(max_n in 0usize..60) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.txt");
        let t = StirlingTriangle::build(max_n);
        triangle_save(&t, &path).unwrap();
        prop_assert_eq!(triangle_load(&path).unwrap(), t);
    }
}
