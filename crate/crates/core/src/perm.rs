//! Permutations on the points `1..=n`, stored 0-based.
//!
//! Products compose left to right: `(a * b)` means "apply `a`, then `b`",
//! so conjugation reads `x^g = g^-1 * x * g`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Build from 0-based images, checking that they form a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(Error::MalformedInput(format!(
                    "image sequence {images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint-or-not cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        let mut used = vec![false; degree];
        for cycle in cycles {
            let mut step = Permutation::identity(degree);
            used.fill(false);
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::MalformedInput(format!(
                        "point {pt} out of range 1..={degree}"
                    )));
                }
                if used[pt - 1] {
                    return Err(Error::MalformedInput(format!(
                        "point {pt} repeated within a cycle"
                    )));
                }
                used[pt - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                step.images[pt - 1] = (next - 1) as u16;
            }
            perm = perm.compose(&step);
        }
        Ok(perm)
    }

    /// Parse cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    /// Non-disjoint cycles are applied left to right.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let flush_number = |number: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let pt: usize = number
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad point '{number}'")))?;
            number.clear();
            match current {
                Some(cycle) => cycle.push(pt),
                None => {
                    return Err(Error::MalformedInput(format!(
                        "point {pt} outside parentheses"
                    )))
                }
            }
            Ok(())
        };
        for (pos, ch) in text.char_indices() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::MalformedInput(format!(
                            "nested '(' at position {pos}"
                        )));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush_number(&mut number, &mut current)?;
                    match current.take() {
                        Some(cycle) => {
                            if !cycle.is_empty() {
                                cycles.push(cycle);
                            }
                        }
                        None => {
                            return Err(Error::MalformedInput(format!(
                                "unmatched ')' at position {pos}"
                            )))
                        }
                    }
                }
                '0'..='9' => number.push(ch),
                ' ' | ',' | '\t' => flush_number(&mut number, &mut current)?,
                other => {
                    return Err(Error::MalformedInput(format!(
                        "unexpected character '{other}' at position {pos}"
                    )))
                }
            }
        }
        if current.is_some() {
            return Err(Error::MalformedInput("unclosed '('".into()));
        }
        if !number.is_empty() {
            return Err(Error::MalformedInput(format!(
                "trailing digits '{number}' outside parentheses"
            )));
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u16 == img)
    }

    /// Extend to a larger degree, fixing the new points.
    pub fn extended(&self, degree: usize, offset: usize) -> Permutation {
        debug_assert!(offset + self.degree() <= degree);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &img) in self.images.iter().enumerate() {
            images[offset + i] = (offset + img as usize) as u16;
        }
        Permutation { images }
    }

    /// Disjoint cycles over 1-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt + 1);
                pt = self.apply(pt);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 4);
        let id = Permutation::parse_cycles(4, "()").unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 x)").is_err());
    }

    #[test]
    fn non_disjoint_cycles_apply_left_to_right() {
        // (1 2)(2 3): 1 -> 2 -> 3, so the product maps 1 to 3.
        let p = Permutation::parse_cycles(3, "(1 2)(2 3)").unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.to_string(), "(1 3 2)");
    }

    #[test]
    fn compose_inverse_identity() {
        let p = Permutation::parse_cycles(6, "(1 4 2)(3 6)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
