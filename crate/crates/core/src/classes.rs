//! Conjugacy-class decomposition.
//!
//! Classes are computed by orbit expansion under conjugation by the group
//! generators, which reaches the whole class because the generators generate
//! the group. Centralizer orders come from orbit-stabilizer, so no centralizer
//! is materialized here.

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};

#[derive(Clone, Debug)]
pub struct ClassEntry {
    /// Canonical representative: the minimal element of the class in the
    /// group's lexicographic element order.
    pub representative: GroupElement,
    pub size: usize,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug)]
pub struct ClassTable {
    pub entries: Vec<ClassEntry>,
    pub center_size: usize,
    pub group_order: usize,
    /// Entry index per element index.
    class_of: Vec<u32>,
}

impl ClassTable {
    /// All class sizes, ascending, with multiplicity (the class equation
    /// partition of the group order).
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self.entries.iter().map(|e| e.size as u64).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Distinct sizes of noncentral classes, ascending. These are the vertex
    /// labels of the common-divisor graph.
    pub fn distinct_noncentral_sizes(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self
            .entries
            .iter()
            .filter(|e| e.size > 1)
            .map(|e| e.size as u64)
            .collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }

    /// (size, number of classes of that size) for noncentral sizes, ascending.
    pub fn noncentral_size_multiplicity(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for size in self.entries.iter().filter(|e| e.size > 1).map(|e| e.size as u64) {
            match out.iter_mut().find(|(s, _)| *s == size) {
                Some((_, count)) => *count += 1,
                None => out.push((size, 1)),
            }
        }
        out.sort_unstable();
        out
    }

    pub fn class_count(&self) -> usize {
        self.entries.len()
    }

    /// Index into `entries` of the class containing an element.
    pub fn class_index_of(&self, el: GroupElement) -> Result<usize> {
        self.class_of
            .get(el.index())
            .map(|&c| c as usize)
            .ok_or(Error::ForeignElement)
    }

    pub fn class_size_of(&self, el: GroupElement) -> Result<u64> {
        Ok(self.entries[self.class_index_of(el)?].size as u64)
    }

    /// Checks the table's structural invariants: class equation,
    /// orbit-stabilizer, and center consistency.
    pub fn validate(&self) -> Result<()> {
        let total: usize = self.entries.iter().map(|e| e.size).sum();
        if total != self.group_order {
            return Err(Error::MalformedInput(format!(
                "class equation fails: sizes sum to {total}, order is {}",
                self.group_order
            )));
        }
        for e in &self.entries {
            if e.size * e.centralizer_order != self.group_order {
                return Err(Error::MalformedInput(format!(
                    "orbit-stabilizer fails for class of size {}",
                    e.size
                )));
            }
        }
        let central = self.entries.iter().filter(|e| e.size == 1).count();
        if central != self.center_size {
            return Err(Error::MalformedInput(format!(
                "{central} singleton classes but center has size {}",
                self.center_size
            )));
        }
        Ok(())
    }
}

pub(crate) fn compute(group: &Group) -> ClassTable {
    let n = group.order();
    let conjugators: Vec<(u32, u32)> = group
        .generator_indices()
        .iter()
        .map(|&s| (group.inv_idx(s), s))
        .collect();

    const UNASSIGNED: u32 = u32::MAX;
    let mut class_of = vec![UNASSIGNED; n];
    let mut raw: Vec<(u32, usize)> = Vec::new(); // (representative index, size)
    let mut orbit: Vec<u32> = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != UNASSIGNED {
            continue;
        }
        let class_id = raw.len() as u32;
        class_of[start as usize] = class_id;
        orbit.clear();
        orbit.push(start);
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &(s_inv, s) in &conjugators {
                let y = group.mul_idx(group.mul_idx(s_inv, x), s);
                if class_of[y as usize] == UNASSIGNED {
                    class_of[y as usize] = class_id;
                    orbit.push(y);
                }
            }
        }
        // `start` is the least index of its class: everything below it was
        // already assigned, so scanning upward makes representatives canonical.
        raw.push((start, orbit.len()));
    }

    // Deterministic entry order: by size, then by representative.
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_unstable_by_key(|&c| (raw[c].1, raw[c].0));
    let mut remap = vec![0u32; raw.len()];
    for (new_pos, &old) in order.iter().enumerate() {
        remap[old] = new_pos as u32;
    }
    for c in class_of.iter_mut() {
        *c = remap[*c as usize];
    }
    let entries: Vec<ClassEntry> = order
        .iter()
        .map(|&old| {
            let (rep, size) = raw[old];
            ClassEntry {
                representative: group.element_at(rep as usize),
                size,
                centralizer_order: n / size,
            }
        })
        .collect();

    let table = ClassTable {
        entries,
        center_size: group.center_size(),
        group_order: n,
        class_of,
    };
    debug_assert!(table.validate().is_ok());
    table
}
