//! Concrete finite groups behind one abstraction: a permutation realization
//! (elements are bijections of `1..=n`) or a Cayley-table realization
//! (elements are indices into a validated multiplication table).
//!
//! Construction enumerates the full element list (closure of the generators)
//! and fails cleanly past the configured order cap. Everything derived from a
//! constructed group is immutable, so groups can be shared across threads.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::bitset::Bitset;
use crate::classes::{self, ClassTable};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on full element enumeration.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Cayley tables are checked triple-by-triple up to this order; larger tables
/// get a seeded spot check instead.
const FULL_ASSOCIATIVITY_MAX: usize = 512;
const SPOT_CHECK_TRIPLES: usize = 100_000;
const SPOT_CHECK_SEED: u64 = 0x5eed_cafe;

/// Index-level multiplication tables are materialized up to this order when an
/// operation needs many products.
const MUL_TABLE_MAX: usize = 4096;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Underlying datum of one element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ElemData {
    Perm(Permutation),
    Idx(u32),
}

enum Realization {
    Permutation { degree: usize },
    /// Row-major `order x order` table over element indices.
    Cayley { order: usize, table: Vec<u16> },
}

/// Handle to an element of a specific [`Group`]; elements of different groups
/// never combine (checked).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    group_id: u64,
    index: u32,
}

impl GroupElement {
    /// Position in the group's canonical (lexicographic) element order.
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

pub struct Group {
    id: u64,
    realization: Realization,
    cap: usize,
    /// Canonically sorted: lexicographic image sequences for permutations,
    /// ascending indices for Cayley groups. Index 0 is the identity.
    elements: Vec<ElemData>,
    index: HashMap<ElemData, u32>,
    generator_idx: Vec<u32>,
    center: OnceLock<Bitset>,
    abelian: OnceLock<bool>,
    classes: OnceLock<ClassTable>,
    mul_table: OnceLock<Option<Vec<u16>>>,
    centralizers: OnceLock<Vec<Bitset>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.realization {
            Realization::Permutation { degree } => format!("permutation group of degree {degree}"),
            Realization::Cayley { order, .. } => format!("table group of order {order}"),
        };
        write!(f, "Group({kind}, order {})", self.order())
    }
}

impl Group {
    // ------------------------------------------------------------------
    // Construction
    // ------------------------------------------------------------------

    /// Closure of permutation generators on the points `1..=degree`.
    ///
    /// An empty generator list explicitly denotes the trivial group.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Group::from_generators_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Group> {
        if degree == 0 {
            return Err(Error::MalformedInput("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::MalformedInput(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut list = vec![identity.clone()];
        seen.insert(identity, ());
        let mut head = 0;
        while head < list.len() {
            let current = list[head].clone();
            head += 1;
            for g in &generators {
                let next = current.compose(g);
                if !seen.contains_key(&next) {
                    if list.len() >= cap {
                        return Err(Error::ResourceLimit(format!(
                            "closure exceeds the order cap of {cap} elements"
                        )));
                    }
                    seen.insert(next.clone(), ());
                    list.push(next);
                }
            }
        }

        list.sort_unstable();
        let elements: Vec<ElemData> = list.into_iter().map(ElemData::Perm).collect();
        let index: HashMap<ElemData, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i as u32))
            .collect();
        let generator_idx = generators
            .iter()
            .map(|g| index[&ElemData::Perm(g.clone())])
            .collect();

        debug_assert!(matches!(&elements[0], ElemData::Perm(p) if p.is_identity()));
        Ok(Group::assemble(
            Realization::Permutation { degree },
            cap,
            elements,
            index,
            generator_idx,
        ))
    }

    /// Group from a full multiplication table over `0..n-1` with identity 0.
    ///
    /// The table must be a Latin square with the identity conventions
    /// `table[0][j] = j`, `table[i][0] = i`, and must be associative;
    /// associativity is fully verified for `n <= 512` and spot-checked with
    /// seeded random triples above that.
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<Group> {
        Group::from_cayley_table_capped(table, DEFAULT_ORDER_CAP)
    }

    pub fn from_cayley_table_capped(table: Vec<Vec<usize>>, cap: usize) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedInput("empty Cayley table".into()));
        }
        if n > cap {
            return Err(Error::ResourceLimit(format!(
                "table order {n} exceeds the order cap of {cap}"
            )));
        }
        if n > u16::MAX as usize {
            return Err(Error::ResourceLimit(format!(
                "table order {n} exceeds the supported maximum of {}",
                u16::MAX
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedInput(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedInput(format!(
                        "entry {v} at row {i}, column {j} is out of range 0..{n}"
                    )));
                }
                flat.push(v as u16);
            }
        }
        // Identity conventions.
        for j in 0..n {
            if flat[j] as usize != j {
                return Err(Error::MalformedInput(format!(
                    "row 0 is not the identity row at column {j}"
                )));
            }
        }
        for i in 0..n {
            if flat[i * n] as usize != i {
                return Err(Error::MalformedInput(format!(
                    "column 0 is not the identity column at row {i}"
                )));
            }
        }
        // Latin square.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.fill(false);
            for j in 0..n {
                let v = flat[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::MalformedInput(format!(
                        "row {i} repeats entry {v}: not a Latin square"
                    )));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.fill(false);
            for i in 0..n {
                let v = flat[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::MalformedInput(format!(
                        "column {j} repeats entry {v}: not a Latin square"
                    )));
                }
                seen[v] = true;
            }
        }
        // Associativity.
        let at = |a: usize, b: usize| flat[a * n + b] as usize;
        if n <= FULL_ASSOCIATIVITY_MAX {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::MalformedInput(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
            for _ in 0..SPOT_CHECK_TRIPLES {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::MalformedInput(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(Group::from_flat_table_unchecked(flat, n, cap))
    }

    /// Table constructor for internally generated tables (families, direct
    /// products), whose associativity holds by construction. The Latin-square
    /// shape is still asserted in debug builds.
    pub(crate) fn from_flat_table_unchecked(flat: Vec<u16>, n: usize, cap: usize) -> Group {
        debug_assert_eq!(flat.len(), n * n);
        #[cfg(debug_assertions)]
        {
            for j in 0..n {
                debug_assert_eq!(flat[j] as usize, j);
            }
            for i in 0..n {
                debug_assert_eq!(flat[i * n] as usize, i);
            }
        }
        let elements: Vec<ElemData> = (0..n as u32).map(ElemData::Idx).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i as u32))
            .collect();
        let generator_idx = greedy_generators(&flat, n);
        Group::assemble(
            Realization::Cayley { order: n, table: flat },
            cap,
            elements,
            index,
            generator_idx,
        )
    }

    fn assemble(
        realization: Realization,
        cap: usize,
        elements: Vec<ElemData>,
        index: HashMap<ElemData, u32>,
        generator_idx: Vec<u32>,
    ) -> Group {
        Group {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            realization,
            cap,
            elements,
            index,
            generator_idx,
            center: OnceLock::new(),
            abelian: OnceLock::new(),
            classes: OnceLock::new(),
            mul_table: OnceLock::new(),
            centralizers: OnceLock::new(),
        }
    }

    // ------------------------------------------------------------------
    // Basic accessors
    // ------------------------------------------------------------------

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn order_cap(&self) -> usize {
        self.cap
    }

    /// Degree of the permutation action, if this is a permutation group.
    pub fn degree(&self) -> Option<usize> {
        match &self.realization {
            Realization::Permutation { degree } => Some(*degree),
            Realization::Cayley { .. } => None,
        }
    }

    pub fn is_permutation_realization(&self) -> bool {
        matches!(self.realization, Realization::Permutation { .. })
    }

    pub fn identity(&self) -> GroupElement {
        self.element_at(0)
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.order(), "element index out of range");
        GroupElement {
            group_id: self.id,
            index: index as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        self.generator_idx
            .iter()
            .map(|&i| self.element_at(i as usize))
            .collect()
    }

    pub fn element_data(&self, el: GroupElement) -> Result<&ElemData> {
        let i = self.member(el)?;
        Ok(&self.elements[i as usize])
    }

    /// Printable form: cycle notation for permutations, `#index` otherwise.
    pub fn describe(&self, el: GroupElement) -> String {
        assert_eq!(el.group_id, self.id, "element of a different group");
        match &self.elements[el.index as usize] {
            ElemData::Perm(p) => p.to_string(),
            ElemData::Idx(i) => format!("#{i}"),
        }
    }

    fn member(&self, el: GroupElement) -> Result<u32> {
        if el.group_id != self.id || el.index as usize >= self.order() {
            return Err(Error::ForeignElement);
        }
        Ok(el.index)
    }

    // ------------------------------------------------------------------
    // Index-level arithmetic (crate internal)
    // ------------------------------------------------------------------

    fn data_mul(&self, a: &ElemData, b: &ElemData) -> ElemData {
        match (&self.realization, a, b) {
            (Realization::Permutation { .. }, ElemData::Perm(pa), ElemData::Perm(pb)) => {
                ElemData::Perm(pa.compose(pb))
            }
            (Realization::Cayley { order, table }, ElemData::Idx(i), ElemData::Idx(j)) => {
                ElemData::Idx(table[*i as usize * order + *j as usize] as u32)
            }
            _ => unreachable!("element data does not match the realization"),
        }
    }

    fn index_of(&self, d: &ElemData) -> u32 {
        *self
            .index
            .get(d)
            .expect("product of group elements missing from the closure")
    }

    pub(crate) fn mul_idx(&self, i: u32, j: u32) -> u32 {
        if let Some(Some(t)) = self.mul_table.get() {
            return t[i as usize * self.order() + j as usize] as u32;
        }
        match &self.realization {
            Realization::Cayley { order, table } => {
                table[i as usize * order + j as usize] as u32
            }
            Realization::Permutation { .. } => {
                let d = self.data_mul(&self.elements[i as usize], &self.elements[j as usize]);
                self.index_of(&d)
            }
        }
    }

    pub(crate) fn inv_idx(&self, i: u32) -> u32 {
        match &self.realization {
            Realization::Permutation { .. } => {
                let ElemData::Perm(p) = &self.elements[i as usize] else {
                    unreachable!()
                };
                self.index_of(&ElemData::Perm(p.inverse()))
            }
            Realization::Cayley { order, table } => {
                let row = &table[i as usize * order..(i as usize + 1) * order];
                row.iter().position(|&v| v == 0).expect("Latin square row") as u32
            }
        }
    }

    pub(crate) fn pow_idx(&self, base: u32, mut exp: u64) -> u32 {
        let mut acc = 0u32; // identity
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_idx(acc, sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul_idx(sq, sq);
            }
        }
        acc
    }

    pub(crate) fn generator_indices(&self) -> &[u32] {
        &self.generator_idx
    }

    /// Builds the index-level multiplication table when the group is small
    /// enough for it to pay off. Cayley groups already are such a table.
    pub(crate) fn ensure_mul_table(&self) {
        self.mul_table.get_or_init(|| {
            let n = self.order();
            if !matches!(self.realization, Realization::Permutation { .. }) || n > MUL_TABLE_MAX {
                return None;
            }
            let mut t = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    let d = self.data_mul(&self.elements[i], &self.elements[j]);
                    t[i * n + j] = self.index_of(&d) as u16;
                }
            }
            Some(t)
        });
    }

    /// Full multiplication table over canonical element indices.
    pub fn multiplication_table(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        (0..n as u32)
            .map(|i| (0..n as u32).map(|j| self.mul_idx(i, j)).collect())
            .collect()
    }

    // ------------------------------------------------------------------
    // Element operations
    // ------------------------------------------------------------------

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement> {
        let (i, j) = (self.member(a)?, self.member(b)?);
        Ok(self.element_at(self.mul_idx(i, j) as usize))
    }

    pub fn inverse(&self, a: GroupElement) -> Result<GroupElement> {
        let i = self.member(a)?;
        Ok(self.element_at(self.inv_idx(i) as usize))
    }

    pub fn power(&self, a: GroupElement, exp: u64) -> Result<GroupElement> {
        let i = self.member(a)?;
        Ok(self.element_at(self.pow_idx(i, exp) as usize))
    }

    /// Least `k >= 1` with `a^k` the identity; divides the group order.
    pub fn element_order(&self, a: GroupElement) -> Result<usize> {
        let i = self.member(a)?;
        Ok(self.order_idx(i))
    }

    pub(crate) fn order_idx(&self, i: u32) -> usize {
        let mut acc = i;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul_idx(acc, i);
            k += 1;
        }
        k
    }

    /// The commuting factorization `a = a_p * a_p'` into a p-element and a
    /// p'-element, both powers of `a`.
    ///
    /// With `o(a) = p^e * m` and `gcd(p, m) = 1`: the p-part is
    /// `a^(m * inv(m) mod p^e)` and the p'-part is `a^(p^e * inv(p^e) mod m)`,
    /// degenerating to the identity when the corresponding factor is trivial.
    pub fn power_parts(&self, a: GroupElement, p: u64) -> Result<(GroupElement, GroupElement)> {
        if !arith::is_prime(p) {
            return Err(Error::MalformedInput(format!("{p} is not a prime")));
        }
        let i = self.member(a)?;
        let o = self.order_idx(i) as u64;
        let mut pe = 1u64;
        let mut m = o;
        while m % p == 0 {
            m /= p;
            pe *= p;
        }
        if pe == 1 {
            return Ok((self.identity(), a));
        }
        if m == 1 {
            return Ok((a, self.identity()));
        }
        let t = arith::mod_inverse(m % pe, pe);
        let s = arith::mod_inverse(pe % m, m);
        let p_part = self.element_at(self.pow_idx(i, m * t) as usize);
        let p_prime_part = self.element_at(self.pow_idx(i, pe * s) as usize);
        Ok((p_part, p_prime_part))
    }

    // ------------------------------------------------------------------
    // Center, centralizers, classes
    // ------------------------------------------------------------------

    pub(crate) fn center_bits(&self) -> &Bitset {
        self.center.get_or_init(|| {
            let n = self.order();
            let mut z = Bitset::new(n);
            'candidates: for i in 0..n as u32 {
                for &g in &self.generator_idx {
                    if self.mul_idx(i, g) != self.mul_idx(g, i) {
                        continue 'candidates;
                    }
                }
                z.insert(i as usize);
            }
            z
        })
    }

    /// Elements commuting with everything; always contains the identity.
    pub fn center_elements(&self) -> Vec<GroupElement> {
        self.center_bits()
            .iter()
            .map(|i| self.element_at(i))
            .collect()
    }

    pub fn center_size(&self) -> usize {
        self.center_bits().len()
    }

    pub fn is_central(&self, a: GroupElement) -> Result<bool> {
        let i = self.member(a)?;
        Ok(self.center_bits().contains(i as usize))
    }

    pub fn is_abelian(&self) -> bool {
        *self.abelian.get_or_init(|| {
            self.generator_idx.iter().all(|&a| {
                self.generator_idx
                    .iter()
                    .all(|&b| self.mul_idx(a, b) == self.mul_idx(b, a))
            })
        })
    }

    pub(crate) fn centralizer_bits(&self, i: u32) -> Bitset {
        let n = self.order();
        let mut c = Bitset::new(n);
        for h in 0..n as u32 {
            if self.mul_idx(h, i) == self.mul_idx(i, h) {
                c.insert(h as usize);
            }
        }
        c
    }

    /// `{h : ha = ah}` as elements; its size times the class size of `a` is
    /// the group order.
    pub fn centralizer(&self, a: GroupElement) -> Result<Vec<GroupElement>> {
        let i = self.member(a)?;
        Ok(self
            .centralizer_bits(i)
            .iter()
            .map(|j| self.element_at(j))
            .collect())
    }

    /// Centralizer of every element, as index sets. Materialized once.
    pub(crate) fn all_centralizer_bits(&self) -> &[Bitset] {
        self.centralizers.get_or_init(|| {
            self.ensure_mul_table();
            let n = self.order();
            let mut cents = vec![Bitset::new(n); n];
            for i in 0..n as u32 {
                cents[i as usize].insert(i as usize);
                for j in 0..i {
                    if self.mul_idx(i, j) == self.mul_idx(j, i) {
                        cents[i as usize].insert(j as usize);
                        cents[j as usize].insert(i as usize);
                    }
                }
            }
            cents
        })
    }

    /// Conjugacy classes, computed once by orbit expansion under generator
    /// conjugation.
    pub fn conjugacy_classes(&self) -> &ClassTable {
        self.classes.get_or_init(|| classes::compute(self))
    }

    /// Least `k >= 1` with `a^k` central.
    pub fn central_quotient_element_order(&self, a: GroupElement) -> Result<usize> {
        let i = self.member(a)?;
        let z = self.center_bits();
        let mut acc = i;
        let mut k = 1;
        while !z.contains(acc as usize) {
            acc = self.mul_idx(acc, i);
            k += 1;
        }
        Ok(k)
    }
}

/// Small generating set for a table group, found greedily in index order.
fn greedy_generators(flat: &[u16], n: usize) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut closed = Bitset::new(n);
    closed.insert(0);
    let mut closed_list: Vec<u32> = vec![0];
    for i in 1..n as u32 {
        if closed.contains(i as usize) {
            continue;
        }
        gens.push(i);
        // Re-expand the closure with the new generator.
        let mut head = 0;
        closed.insert(i as usize);
        closed_list.push(i);
        while head < closed_list.len() {
            let x = closed_list[head];
            head += 1;
            for &g in &gens {
                let y = flat[x as usize * n + g as usize] as u32;
                if !closed.contains(y as usize) {
                    closed.insert(y as usize);
                    closed_list.push(y);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        let a = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        Group::from_generators(3, vec![a, b]).unwrap()
    }

    fn d4() -> Group {
        let r = Permutation::parse_cycles(4, "(1 2 3 4)").unwrap();
        let s = Permutation::parse_cycles(4, "(1 3)").unwrap();
        Group::from_generators(4, vec![r, s]).unwrap()
    }

    #[test]
    fn closure_of_s3_has_order_six() {
        assert_eq!(s3().order(), 6);
    }

    #[test]
    fn trivial_groups() {
        let id_gen = Group::from_generators(4, vec![Permutation::identity(4)]).unwrap();
        assert_eq!(id_gen.order(), 1);
        let empty_gen = Group::from_generators(4, vec![]).unwrap();
        assert_eq!(empty_gen.order(), 1);
        assert!(empty_gen.is_abelian());
    }

    #[test]
    fn dihedral_closure_has_order_eight() {
        assert_eq!(d4().order(), 8);
    }

    #[test]
    fn closure_respects_cap() {
        let a = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let err = Group::from_generators_capped(3, vec![a, b], 5).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn rejects_wrong_degree_generator() {
        let a = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let err = Group::from_generators(4, vec![a]).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn identity_is_element_zero() {
        let g = s3();
        assert_eq!(g.element_order(g.identity()).unwrap(), 1);
        assert_eq!(g.describe(g.identity()), "()");
    }

    #[test]
    fn cayley_table_mod_3() {
        let table: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        let g = Group::from_cayley_table(table).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        assert_eq!(g.center_size(), 3);
    }

    #[test]
    fn cayley_table_trivial() {
        let g = Group::from_cayley_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cayley_rejects_non_latin_square() {
        let table = vec![vec![0, 1], vec![1, 1]];
        let err = Group::from_cayley_table(table).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn cayley_rejects_bad_identity_row() {
        // Latin square but row 0 is not the identity row.
        let table = vec![vec![1, 0], vec![0, 1]];
        let err = Group::from_cayley_table(table).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn cayley_rejects_non_associative_latin_square() {
        // Smallest non-associative loop with two-sided identity has order 5.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_cayley_table(table).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn elements_of_different_groups_never_combine() {
        let g1 = s3();
        let g2 = s3();
        let a = g1.elements().nth(1).unwrap();
        let b = g2.elements().nth(1).unwrap();
        assert!(matches!(g1.mul(a, b), Err(Error::ForeignElement)));
        assert!(matches!(g2.element_order(a), Err(Error::ForeignElement)));
    }

    #[test]
    fn element_orders_in_s5() {
        let g = Group::from_generators(
            5,
            vec![
                Permutation::parse_cycles(5, "(1 2)").unwrap(),
                Permutation::parse_cycles(5, "(1 2 3 4 5)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 120);
        let el = find(&g, "(1 2 3)(4 5)");
        assert_eq!(g.element_order(el).unwrap(), 6);
    }

    #[test]
    fn element_order_of_four_cycle() {
        let g = d4();
        let el = find(&g, "(1 2 3 4)");
        assert_eq!(g.element_order(el).unwrap(), 4);
    }

    fn find(g: &Group, cycles: &str) -> GroupElement {
        g.elements()
            .find(|&e| g.describe(e) == cycles)
            .unwrap_or_else(|| panic!("element {cycles} not found"))
    }

    #[test]
    fn center_of_s3_is_trivial() {
        assert_eq!(s3().center_size(), 1);
    }

    #[test]
    fn center_of_d4_has_two_elements() {
        let g = d4();
        assert_eq!(g.center_size(), 2);
        let r2 = find(&g, "(1 3)(2 4)");
        assert!(g.is_central(r2).unwrap());
    }

    #[test]
    fn center_of_cyclic_six_is_everything() {
        let g = Group::from_generators(
            6,
            vec![Permutation::parse_cycles(6, "(1 2 3 4 5 6)").unwrap()],
        )
        .unwrap();
        assert_eq!(g.center_size(), 6);
    }

    #[test]
    fn centralizer_of_transposition_in_s4() {
        let g = Group::from_generators(
            4,
            vec![
                Permutation::parse_cycles(4, "(1 2)").unwrap(),
                Permutation::parse_cycles(4, "(1 2 3 4)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        let t = find(&g, "(1 2)");
        let cent = g.centralizer(t).unwrap();
        let mut names: Vec<String> = cent.iter().map(|&e| g.describe(e)).collect();
        names.sort();
        assert_eq!(names, vec!["()", "(1 2)", "(1 2)(3 4)", "(3 4)"]);

        let c3 = find(&g, "(1 2 3)");
        assert_eq!(g.centralizer(c3).unwrap().len(), 3);
        assert_eq!(g.centralizer(g.identity()).unwrap().len(), 24);
    }

    #[test]
    fn power_parts_examples() {
        let s5 = Group::from_generators(
            5,
            vec![
                Permutation::parse_cycles(5, "(1 2)").unwrap(),
                Permutation::parse_cycles(5, "(1 2 3 4 5)").unwrap(),
            ],
        )
        .unwrap();
        let g = find(&s5, "(1 2 3)(4 5)");
        let (p2, p2c) = s5.power_parts(g, 2).unwrap();
        assert_eq!(s5.describe(p2), "(4 5)");
        assert_eq!(s5.describe(p2c), "(1 2 3)");
        assert_eq!(s5.mul(p2, p2c).unwrap(), g);
        assert_eq!(s5.mul(p2c, p2).unwrap(), g);

        let (ip, ipc) = s5.power_parts(s5.identity(), 3).unwrap();
        assert_eq!(ip, s5.identity());
        assert_eq!(ipc, s5.identity());

        let s4 = Group::from_generators(
            4,
            vec![
                Permutation::parse_cycles(4, "(1 2)").unwrap(),
                Permutation::parse_cycles(4, "(1 2 3 4)").unwrap(),
            ],
        )
        .unwrap();
        let c3 = find(&s4, "(1 2 3)");
        let (p, pc) = s4.power_parts(c3, 2).unwrap();
        assert_eq!(p, s4.identity());
        assert_eq!(pc, c3);

        assert!(matches!(
            s4.power_parts(c3, 6),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn central_quotient_order_examples() {
        let g = d4();
        let r = find(&g, "(1 2 3 4)");
        assert_eq!(g.central_quotient_element_order(r).unwrap(), 2);
        let r2 = find(&g, "(1 3)(2 4)");
        assert_eq!(g.central_quotient_element_order(r2).unwrap(), 1);

        let s5 = Group::from_generators(
            5,
            vec![
                Permutation::parse_cycles(5, "(1 2)").unwrap(),
                Permutation::parse_cycles(5, "(1 2 3 4 5)").unwrap(),
            ],
        )
        .unwrap();
        let el = find(&s5, "(1 2 3)(4 5)");
        assert_eq!(s5.central_quotient_element_order(el).unwrap(), 6);
    }

    #[test]
    fn mul_table_agrees_with_direct_products(){
        let g = d4();
        g.ensure_mul_table();
        for a in g.elements() {
            for b in g.elements() {
                let via_table = g.mul(a, b).unwrap();
                let expected = {
                    let ElemData::Perm(pa) = g.element_data(a).unwrap() else { unreachable!() };
                    let ElemData::Perm(pb) = g.element_data(b).unwrap() else { unreachable!() };
                    pa.compose(pb)
                };
                let ElemData::Perm(got) = g.element_data(via_table).unwrap() else { unreachable!() };
                assert_eq!(got, &expected);
            }
        }
    }
}
