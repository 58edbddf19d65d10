//! Built-in group families, direct products, catalog enumeration and
//! ingestion of group files.
//!
//! Descriptor syntax: `cyc:12`, `dih:8` (order 16), `dic:4` (order 16),
//! `sym:5`, `alt:5`, `heis:5` (order 125), `prod(sym:3,heis:5)`,
//! `file:<path>`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{ElemData, Group, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Cyclic of order n, n >= 1.
    Cyclic(usize),
    /// Dihedral on n >= 3 points, order 2n.
    Dihedral(usize),
    /// Dicyclic of order 4n, n >= 2.
    Dicyclic(usize),
    /// Symmetric on n points, 1 <= n <= 8.
    Symmetric(usize),
    /// Alternating on n points, 1 <= n <= 8.
    Alternating(usize),
    /// Extraspecial of order p^3 and exponent p, p in {3, 5, 7}.
    Heisenberg(usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
    File(PathBuf),
}

impl FamilySpec {
    /// Parses the CLI descriptor syntax.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let s = text.trim();
        if let Some(rest) = s.strip_prefix("prod(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::MalformedInput(format!("unclosed prod(... in '{s}'")))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => {
                        depth = depth.checked_sub(1).ok_or_else(|| {
                            Error::MalformedInput(format!("unbalanced ')' in '{s}'"))
                        })?
                    }
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let split = split.ok_or_else(|| {
                Error::MalformedInput(format!("prod needs two operands in '{s}'"))
            })?;
            let a = FamilySpec::parse(&inner[..split])?;
            let b = FamilySpec::parse(&inner[split + 1..])?;
            return Ok(FamilySpec::Product(Box::new(a), Box::new(b)));
        }
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(Error::MalformedInput("empty file path".into()));
            }
            return Ok(FamilySpec::File(PathBuf::from(path)));
        }
        let (tag, num) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedInput(format!("bad group descriptor '{s}'")))?;
        let n: usize = num
            .parse()
            .map_err(|_| Error::MalformedInput(format!("bad parameter '{num}' in '{s}'")))?;
        match tag {
            "cyc" => Ok(FamilySpec::Cyclic(n)),
            "dih" => Ok(FamilySpec::Dihedral(n)),
            "dic" => Ok(FamilySpec::Dicyclic(n)),
            "sym" => Ok(FamilySpec::Symmetric(n)),
            "alt" => Ok(FamilySpec::Alternating(n)),
            "heis" => Ok(FamilySpec::Heisenberg(n)),
            other => Err(Error::MalformedInput(format!("unknown family '{other}'"))),
        }
    }

    /// Group order without constructing the group; `None` for files.
    pub fn order(&self) -> Option<usize> {
        match self {
            FamilySpec::Cyclic(n) => Some(*n),
            FamilySpec::Dihedral(n) => Some(2 * n),
            FamilySpec::Dicyclic(n) => Some(4 * n),
            FamilySpec::Symmetric(n) => Some(factorial(*n)),
            FamilySpec::Alternating(n) => Some(factorial(*n).div_ceil(2)),
            FamilySpec::Heisenberg(p) => Some(p * p * p),
            FamilySpec::Product(a, b) => Some(a.order()? * b.order()?),
            FamilySpec::File(_) => None,
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyc:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dih:{n}"),
            FamilySpec::Dicyclic(n) => write!(f, "dic:{n}"),
            FamilySpec::Symmetric(n) => write!(f, "sym:{n}"),
            FamilySpec::Alternating(n) => write!(f, "alt:{n}"),
            FamilySpec::Heisenberg(p) => write!(f, "heis:{p}"),
            FamilySpec::Product(a, b) => write!(f, "prod({a},{b})"),
            FamilySpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

// ----------------------------------------------------------------------
// Construction
// ----------------------------------------------------------------------

pub fn make_family(spec: &FamilySpec) -> Result<Group> {
    make_family_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn make_family_capped(spec: &FamilySpec, cap: usize) -> Result<Group> {
    let group = match spec {
        FamilySpec::Cyclic(n) => cyclic(*n, cap)?,
        FamilySpec::Dihedral(n) => dihedral(*n, cap)?,
        FamilySpec::Dicyclic(n) => dicyclic(*n, cap)?,
        FamilySpec::Symmetric(n) => symmetric(*n, cap)?,
        FamilySpec::Alternating(n) => alternating(*n, cap)?,
        FamilySpec::Heisenberg(p) => heisenberg(*p, cap)?,
        FamilySpec::Product(a, b) => {
            let ga = make_family_capped(a, cap)?;
            let gb = make_family_capped(b, cap)?;
            direct_product(&ga, &gb, cap)?
        }
        FamilySpec::File(path) => load_group_file(path, cap)?,
    };
    if let Some(expected) = spec.order() {
        assert_eq!(group.order(), expected, "family {spec} has the wrong order");
    }
    Ok(group)
}

fn rotation(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap()
}

fn cyclic(n: usize, cap: usize) -> Result<Group> {
    if n < 1 {
        return Err(Error::MalformedInput("cyclic group needs n >= 1".into()));
    }
    if n == 1 {
        return Group::from_generators_capped(1, vec![], cap);
    }
    Group::from_generators_capped(n, vec![rotation(n)], cap)
}

fn dihedral(n: usize, cap: usize) -> Result<Group> {
    if n < 3 {
        return Err(Error::MalformedInput("dihedral group needs n >= 3".into()));
    }
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - 1 - i) as u16).collect()).unwrap();
    Group::from_generators_capped(n, vec![rotation(n), reflection], cap)
}

fn symmetric(n: usize, cap: usize) -> Result<Group> {
    if !(1..=8).contains(&n) {
        return Err(Error::MalformedInput(
            "symmetric group supports 1 <= n <= 8".into(),
        ));
    }
    if n == 1 {
        return Group::from_generators_capped(1, vec![], cap);
    }
    let swap = Permutation::parse_cycles(n, "(1 2)").unwrap();
    Group::from_generators_capped(n, vec![swap, rotation(n)], cap)
}

fn alternating(n: usize, cap: usize) -> Result<Group> {
    if !(1..=8).contains(&n) {
        return Err(Error::MalformedInput(
            "alternating group supports 1 <= n <= 8".into(),
        ));
    }
    if n <= 2 {
        return Group::from_generators_capped(n, vec![], cap);
    }
    let three_cycle = Permutation::parse_cycles(n, "(1 2 3)").unwrap();
    if n == 3 {
        return Group::from_generators_capped(n, vec![three_cycle], cap);
    }
    // An n-cycle for odd n, an (n-1)-cycle fixing point 1 for even n: both
    // even permutations which, with a 3-cycle, generate the whole group.
    let long = if n % 2 == 1 {
        rotation(n)
    } else {
        let cycle: Vec<usize> = (2..=n).collect();
        Permutation::from_cycles(n, &[cycle]).unwrap()
    };
    Group::from_generators_capped(n, vec![three_cycle, long], cap)
}

fn dicyclic(n: usize, cap: usize) -> Result<Group> {
    if n < 2 {
        return Err(Error::MalformedInput("dicyclic group needs n >= 2".into()));
    }
    let order = 4 * n;
    if order > cap {
        return Err(Error::ResourceLimit(format!(
            "dicyclic order {order} exceeds the cap of {cap}"
        )));
    }
    // Normal form a^i b^j with i < 2n, j < 2; b^2 = a^n, b^-1 a b = a^-1.
    // Index of a^i b^j is j*2n + i, so the identity is 0.
    let m = 2 * n;
    let idx = |i: usize, j: usize| (j * m + i) as u16;
    let mut flat = vec![0u16; order * order];
    for j in 0..2 {
        for i in 0..m {
            for l in 0..2 {
                for k in 0..m {
                    let value = if j == 0 {
                        idx((i + k) % m, l)
                    } else if l == 0 {
                        idx((i + m - k) % m, 1)
                    } else {
                        idx((i + m - k + n) % m, 0)
                    };
                    flat[(j * m + i) * order + (l * m + k)] = value;
                }
            }
        }
    }
    Ok(Group::from_flat_table_unchecked(flat, order, cap))
}

fn heisenberg(p: usize, cap: usize) -> Result<Group> {
    if ![3, 5, 7].contains(&p) {
        return Err(Error::MalformedInput(
            "heisenberg group supports p in {3, 5, 7}".into(),
        ));
    }
    let order = p * p * p;
    if order > cap {
        return Err(Error::ResourceLimit(format!(
            "heisenberg order {order} exceeds the cap of {cap}"
        )));
    }
    // Upper unitriangular 3x3 matrices over Z/p: element (a, b, c) with
    // (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2). Index a*p^2 + b*p + c
    // puts the identity at 0.
    let idx = |a: usize, b: usize, c: usize| (a * p * p + b * p + c) as u16;
    let mut flat = vec![0u16; order * order];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                let row = idx(a1, b1, c1) as usize;
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let col = idx(a2, b2, c2) as usize;
                            flat[row * order + col] =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                        }
                    }
                }
            }
        }
    }
    Ok(Group::from_flat_table_unchecked(flat, order, cap))
}

/// Direct product. Permutation factors act on the disjoint union of their
/// point sets; if either factor is table-realized the product is built as a
/// pair table.
pub fn direct_product(a: &Group, b: &Group, cap: usize) -> Result<Group> {
    let order = a.order() * b.order();
    if order > cap {
        return Err(Error::ResourceLimit(format!(
            "product order {order} exceeds the cap of {cap}"
        )));
    }
    if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
        let degree = da + db;
        let mut gens = Vec::new();
        for el in a.generators() {
            let ElemData::Perm(p) = a.element_data(el)? else {
                unreachable!()
            };
            gens.push(p.extended(degree, 0));
        }
        for el in b.generators() {
            let ElemData::Perm(p) = b.element_data(el)? else {
                unreachable!()
            };
            gens.push(p.extended(degree, da));
        }
        let product = Group::from_generators_capped(degree, gens, cap)?;
        assert_eq!(product.order(), order, "product closure has the wrong size");
        return Ok(product);
    }
    if order > u16::MAX as usize {
        return Err(Error::ResourceLimit(format!(
            "table-realized product of order {order} exceeds {}; realize the factors as permutation groups",
            u16::MAX
        )));
    }
    let ta = a.multiplication_table();
    let tb = b.multiplication_table();
    let (na, nb) = (a.order(), b.order());
    let mut flat = vec![0u16; order * order];
    for ia in 0..na {
        for ib in 0..nb {
            let row = ia * nb + ib;
            for ka in 0..na {
                for kb in 0..nb {
                    let col = ka * nb + kb;
                    flat[row * order + col] =
                        (ta[ia][ka] as usize * nb + tb[ib][kb] as usize) as u16;
                }
            }
        }
    }
    Ok(Group::from_flat_table_unchecked(flat, order, cap))
}

// ----------------------------------------------------------------------
// Catalog enumeration
// ----------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyFilter {
    pub cyclic: bool,
    pub dihedral: bool,
    pub dicyclic: bool,
    pub symmetric: bool,
    pub alternating: bool,
    pub heisenberg: bool,
    pub products: bool,
}

impl FamilyFilter {
    pub fn all() -> Self {
        FamilyFilter {
            cyclic: true,
            dihedral: true,
            dicyclic: true,
            symmetric: true,
            alternating: true,
            heisenberg: true,
            products: true,
        }
    }

    pub fn none() -> Self {
        FamilyFilter {
            cyclic: false,
            dihedral: false,
            dicyclic: false,
            symmetric: false,
            alternating: false,
            heisenberg: false,
            products: false,
        }
    }

    /// Parses `all` or a comma-separated list of family tags.
    pub fn parse(text: &str) -> Result<FamilyFilter> {
        if text.trim() == "all" {
            return Ok(FamilyFilter::all());
        }
        let mut filter = FamilyFilter::none();
        for tag in text.split(',') {
            match tag.trim() {
                "cyc" => filter.cyclic = true,
                "dih" => filter.dihedral = true,
                "dic" => filter.dicyclic = true,
                "sym" => filter.symmetric = true,
                "alt" => filter.alternating = true,
                "heis" => filter.heisenberg = true,
                "prod" => filter.products = true,
                other => {
                    return Err(Error::MalformedInput(format!("unknown family '{other}'")))
                }
            }
        }
        Ok(filter)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub descriptor: String,
    pub order: usize,
    pub spec: FamilySpec,
}

/// Built-in sweep: cyclic n <= 64, dihedral order <= 128, dicyclic order
/// <= 64, symmetric and alternating n <= 6, the three Heisenberg groups, and
/// the coprime-order pairwise direct products of those, all filtered by the
/// order bound. Emission order is (order, descriptor), stable across runs.
pub fn enumerate_catalog(max_order: usize, filter: &FamilyFilter) -> Vec<CatalogEntry> {
    let mut base: Vec<FamilySpec> = Vec::new();
    if filter.cyclic {
        base.extend((1..=64).map(FamilySpec::Cyclic));
    }
    if filter.dihedral {
        base.extend((3..=64).map(FamilySpec::Dihedral));
    }
    if filter.dicyclic {
        base.extend((2..=16).map(FamilySpec::Dicyclic));
    }
    if filter.symmetric {
        base.extend((3..=6).map(FamilySpec::Symmetric));
    }
    if filter.alternating {
        base.extend((3..=6).map(FamilySpec::Alternating));
    }
    if filter.heisenberg {
        base.extend([3, 5, 7].map(FamilySpec::Heisenberg));
    }
    base.retain(|spec| spec.order().unwrap() <= max_order);

    let mut entries: Vec<CatalogEntry> = base
        .iter()
        .map(|spec| CatalogEntry {
            descriptor: spec.to_string(),
            order: spec.order().unwrap(),
            spec: spec.clone(),
        })
        .collect();

    if filter.products {
        for (i, a) in base.iter().enumerate() {
            for b in base.iter().skip(i + 1) {
                let (oa, ob) = (a.order().unwrap(), b.order().unwrap());
                if arith::gcd(oa as u64, ob as u64) != 1 || oa * ob > max_order {
                    continue;
                }
                let spec = FamilySpec::Product(Box::new(a.clone()), Box::new(b.clone()));
                entries.push(CatalogEntry {
                    descriptor: spec.to_string(),
                    order: oa * ob,
                    spec,
                });
            }
        }
    }

    entries.sort_by(|x, y| (x.order, &x.descriptor).cmp(&(y.order, &y.descriptor)));
    entries
}

// ----------------------------------------------------------------------
// Group files
// ----------------------------------------------------------------------

#[derive(Deserialize)]
struct CayleyFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Loads a generator file (`degree n` then one permutation in cycle notation
/// per line) or a Cayley file (`{"order": n, "table": [[...], ...]}`),
/// distinguished by the leading `{`.
pub fn load_group_file(path: &Path, cap: usize) -> Result<Group> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let file: CayleyFile = serde_json::from_str(&text)
            .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
        if file.table.len() != file.order {
            return Err(Error::MalformedInput(format!(
                "{}: order field is {} but the table has {} rows",
                path.display(),
                file.order,
                file.table.len()
            )));
        }
        return Group::from_cayley_table_capped(file.table, cap);
    }

    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut words = line.split_whitespace();
                match (words.next(), words.next(), words.next()) {
                    (Some("degree"), Some(n), None) => {
                        let n: usize = n.parse().map_err(|_| {
                            Error::MalformedInput(format!(
                                "{}:{}: bad degree '{n}'",
                                path.display(),
                                lineno + 1
                            ))
                        })?;
                        degree = Some(n);
                    }
                    _ => {
                        return Err(Error::MalformedInput(format!(
                            "{}:{}: expected 'degree n', found '{line}'",
                            path.display(),
                            lineno + 1
                        )))
                    }
                }
            }
            Some(d) => {
                let perm = Permutation::parse_cycles(d, line).map_err(|e| {
                    Error::MalformedInput(format!("{}:{}: {e}", path.display(), lineno + 1))
                })?;
                generators.push(perm);
            }
        }
    }
    let degree = degree.ok_or_else(|| {
        Error::MalformedInput(format!("{}: missing 'degree n' line", path.display()))
    })?;
    Group::from_generators_capped(degree, generators, cap)
}
