//! Set partitions as restricted growth strings.

use crate::error::{Error, Result};

pub const DEFAULT_PARTITION_BOUND: usize = 10;

/// All partitions of `0..k`, lexicographic in restricted-growth form.
pub fn set_partitions(k: usize) -> Result<SetPartitions> {
    set_partitions_bounded(k, DEFAULT_PARTITION_BOUND)
}

pub fn set_partitions_bounded(k: usize, bound: usize) -> Result<SetPartitions> {
    if k > bound {
        return Err(Error::Resource(format!("partitions of {k} elements exceed bound {bound}")));
    }
    Ok(SetPartitions { rgs: vec![0; k], prefix_max: vec![0; k], done: false })
}

/// Iterator over restricted growth strings: `a[0] = 0` and `a[i] ≤ 1 + max(a[..i])`.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    prefix_max: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.rgs.clone();
        let k = self.rgs.len();
        let pivot = (1..k).rev().find(|&i| self.rgs[i] <= self.prefix_max[i - 1]);
        match pivot {
            None => self.done = true,
            Some(i) => {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..k {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
            }
        }
        Some(out)
    }
}

/// Block count of a restricted growth string.
pub fn block_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |&m| m + 1)
}

/// Blocks of a restricted growth string as bitmasks, in block order.
pub fn block_masks(rgs: &[usize]) -> Vec<u64> {
    let mut blocks = vec![0u64; block_count(rgs)];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b] |= 1 << i;
    }
    blocks
}

pub fn bell(k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}
