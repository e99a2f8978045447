use bernoulli_stirling::exact::{rat, rat_int};
use bernoulli_stirling::formulas::{
    bernoulli_from_genocchi, bernoulli_oracle_table, genocchi_from_bernoulli, genocchi_theorem, FormulaContext,
};
use bernoulli_stirling::FormulaId;
use num_traits::{Signed, Zero};

const MAX_N: usize = 60;

#[test]
fn trusted_formulas_match_oracle_through_sixty() {
    let ctx = FormulaContext::for_index(MAX_N);
    let oracle = bernoulli_oracle_table(MAX_N);
    for f in FormulaId::trusted_ids() {
        for (n, expected) in oracle.iter().enumerate() {
            if !f.applicable(n) {
                continue;
            }
            assert_eq!(&f.evaluate_bernoulli(&ctx, n).unwrap(), expected, "{f} at n={n}");
        }
    }
}

#[test]
fn theorem_matches_bridge_and_inverts() {
    let ctx = FormulaContext::for_index(MAX_N);
    let oracle = bernoulli_oracle_table(MAX_N);
    for (k, b) in oracle.iter().enumerate().skip(1) {
        let g = genocchi_theorem(&ctx, k).unwrap();
        assert!(g.is_integer(), "G_{k} = {g}");
        assert_eq!(g, genocchi_from_bernoulli(k, b).unwrap(), "k={k}");
        assert_eq!(bernoulli_from_genocchi(k, &g).unwrap(), *b, "k={k}");
    }
}

#[test]
fn odd_indices_vanish() {
    let ctx = FormulaContext::for_index(MAX_N);
    for n in 1..=29 {
        assert!(genocchi_theorem(&ctx, 2 * n + 1).unwrap().is_zero(), "G_{}", 2 * n + 1);
    }
    for f in FormulaId::trusted_ids() {
        for n in (3..=MAX_N).step_by(2).filter(|&n| f.applicable(n)) {
            assert!(f.evaluate_bernoulli(&ctx, n).unwrap().is_zero(), "{f} at n={n}");
        }
    }
}

#[test]
fn genocchi_table_values_and_signs() {
    // (n, G_n) for n = 1, 2, 4, ..., 18. The last entry is often printed as
    // -28820618; 2(1 - 2^18) * 43867/798 = -657 * 43867 = -28820619.
    let table: [(usize, i64); 10] = [
        (1, 1),
        (2, -1),
        (4, 1),
        (6, -3),
        (8, 17),
        (10, -155),
        (12, 2073),
        (14, -38227),
        (16, 929569),
        (18, -28820619),
    ];
    let ctx = FormulaContext::for_index(18);
    for (n, g) in table {
        assert_eq!(genocchi_theorem(&ctx, n).unwrap(), rat_int(g), "G_{n}");
    }
    assert_eq!(bernoulli_oracle_table(18)[18], rat(43867, 798).unwrap());
    for n in 1..=9usize {
        let g = genocchi_theorem(&ctx, 2 * n).unwrap();
        assert_eq!(g.is_negative(), n % 2 == 1, "sign of G_{}", 2 * n);
    }
}

#[test]
fn parallel_evaluation_is_consistent() {
    use rayon::prelude::*;
    let ctx = FormulaContext::for_index(30);
    let seq: Vec<_> = (0..=30).map(|n| FormulaId::STIRLING_RATIO_12.evaluate_bernoulli(&ctx, n).unwrap()).collect();
    let par: Vec<_> = (0..=30usize)
        .into_par_iter()
        .map(|n| FormulaId::STIRLING_RATIO_12.evaluate_bernoulli(&ctx, n).unwrap())
        .collect();
    assert_eq!(seq, par);
}

#[test]
fn large_index_value() {
    // B_20 = -174611/330 from the oracle, checked through two Stirling routes
    let ctx = FormulaContext::for_index(20);
    let b20 = rat(-174611, 330).unwrap();
    assert_eq!(bernoulli_oracle_table(20)[20], b20);
    assert_eq!(FormulaId::DOUBLE_STIRLING_15.evaluate_bernoulli(&ctx, 20).unwrap(), b20);
    assert_eq!(FormulaId::GOULD_DOUBLE_11.evaluate_bernoulli(&ctx, 20).unwrap(), b20);
}
