use num_bigint::BigInt;

use crate::error::{Error, Result};

pub const MAX_ENUMERATION_N: usize = 10;

/// Counts set partitions of `{1..n}` by number of blocks, walking every
/// restricted growth string `a_1 = 0, a_i <= 1 + max(a_1..a_{i-1})`.
pub fn set_partitions_by_blocks(n: usize) -> Result<Vec<u64>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge { n, max: MAX_ENUMERATION_N });
    }
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    let mut rgs = vec![0usize; n];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0usize; n];
    loop {
        counts[prefix_max[n - 1] + 1] += 1;
        // find rightmost position that can still be incremented
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(counts);
            }
            if rgs[i] <= prefix_max[i - 1] {
                break;
            }
            i -= 1;
        }
        rgs[i] += 1;
        prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
        for j in i + 1..n {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Brute-force `S(n, k)` for `n <= 10`.
pub fn stirling_enumerate(n: usize, k: usize) -> Result<BigInt> {
    let counts = set_partitions_by_blocks(n)?;
    Ok(BigInt::from(counts.get(k).copied().unwrap_or(0)))
}
