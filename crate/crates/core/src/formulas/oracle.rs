use num_traits::{One, Zero};

use crate::exact::{binomial, rat_int, ExactRational};

/// `B_0..=B_max_n` from `sum_{j=0..m} C(m+1, j) B_j = 0` (m >= 1), the
/// coefficient identity behind `x / (e^x - 1)`. Uses no Stirling numbers.
pub fn bernoulli_oracle_table(max_n: usize) -> Vec<ExactRational> {
    let mut b: Vec<ExactRational> = Vec::with_capacity(max_n + 1);
    b.push(ExactRational::one());
    for m in 1..=max_n {
        let mut acc = ExactRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * rat_int(binomial(m + 1, j));
            }
        }
        b.push(-acc / rat_int(m + 1));
    }
    b
}

pub fn bernoulli_series_oracle(n: usize) -> ExactRational {
    bernoulli_oracle_table(n).pop().expect("table has n + 1 entries")
}
