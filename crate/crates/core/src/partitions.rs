//! Splits of `{1,…,k}` into `r` unordered pairs plus `k − 2r` singletons.

use std::fmt;

use crate::error::{Error, Result};

/// One pair partition in canonical form: pairs internally ascending and
/// sorted by first element, singletons ascending. Entries are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairPartition {
    pub pairs: Vec<(usize, usize)>,
    pub singles: Vec<usize>,
}

impl fmt::Display for PairPartition {
    /// `(g1 g2)(g3 g4)|q1 q2 …`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            write!(f, "({a} {b})")?;
        }
        f.write_str("|")?;
        for (i, q) in self.singles.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Largest `k` accepted by [`pair_partitions`].
pub const MAX_K: usize = 16;

fn check(k: usize, r: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    if 2 * r > k {
        return Err(Error::domain(format!(
            "cannot form {r} pairs from {k} elements"
        )));
    }
    Ok(())
}

/// Every partition with exactly `r` pairs, each once, in lexicographic order
/// of the canonical pair list.
pub fn pair_partitions(k: usize, r: usize) -> Result<Vec<PairPartition>> {
    check(k, r)?;
    if k > MAX_K {
        return Err(Error::Capacity(format!(
            "pair partitions limited to k ≤ {MAX_K}"
        )));
    }
    let mut out = Vec::with_capacity(partition_count(k, r)? as usize);
    let mut pairs = Vec::with_capacity(r);
    let mut singles = Vec::with_capacity(k - 2 * r);
    let free = (1..=k).collect::<Vec<_>>();
    build(&free, r, &mut pairs, &mut singles, &mut out);
    out.sort();
    Ok(out)
}

/// The smallest free element either stays single or opens a pair with a
/// larger free element.
fn build(
    free: &[usize],
    r: usize,
    pairs: &mut Vec<(usize, usize)>,
    singles: &mut Vec<usize>,
    out: &mut Vec<PairPartition>,
) {
    let Some((&head, rest)) = free.split_first() else {
        if r == 0 {
            out.push(PairPartition {
                pairs: pairs.clone(),
                singles: singles.clone(),
            });
        }
        return;
    };
    if 2 * r > free.len() {
        return;
    }
    if 2 * r < free.len() {
        singles.push(head);
        build(rest, r, pairs, singles, out);
        singles.pop();
    }
    if r > 0 {
        for (pos, &partner) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(pos);
            pairs.push((head, partner));
            build(&remaining, r - 1, pairs, singles, out);
            pairs.pop();
        }
    }
}

/// `k! / (2^r · r! · (k − 2r)!)`.
pub fn partition_count(k: usize, r: usize) -> Result<u64> {
    check(k, r)?;
    // C(k, 2r) · (2r − 1)!!
    let mut count: u128 = 1;
    let n = 2 * r;
    for i in 0..n as u128 {
        count = count * (k as u128 - i) / (i + 1);
    }
    for i in (1..n as u128).step_by(2) {
        count = count
            .checked_mul(i)
            .ok_or_else(|| Error::Capacity("partition count overflow".into()))?;
    }
    u64::try_from(count).map_err(|_| Error::Capacity("partition count overflow".into()))
}
