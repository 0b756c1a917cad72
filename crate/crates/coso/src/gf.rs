//! Small finite-field arithmetic and row spaces for rank bookkeeping.
//!
//! Two field kinds cover the toolkit: prime fields `GF(p)` for linear source
//! models, and `GF(2^8)` (AES polynomial `0x11B`) for the packet simulator.
//! Because `GF(2)` is a subfield of `GF(2^8)`, ranks of 0/1 matrices agree in
//! both, so lifting binary sources into the byte field never changes an
//! entropy value.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    Prime(u16),
    /// GF(2^8) with the AES reduction polynomial.
    Ext256,
}

fn gf256_tables() -> &'static ([u8; 512], [u8; 256]) {
    static TABLES: OnceLock<([u8; 512], [u8; 256])> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut exp = [0u8; 512];
        let mut log = [0u8; 256];
        let mut x: u16 = 1;
        for i in 0..255 {
            exp[i] = x as u8;
            log[x as usize] = i as u8;
            // Multiply by the generator 0x03 = x + 1.
            x = (x << 1) ^ x;
            if x & 0x100 != 0 {
                x ^= 0x11B;
            }
        }
        for i in 255..512 {
            exp[i] = exp[i - 255];
        }
        (exp, log)
    })
}

pub fn is_prime(n: u16) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n as u32 {
        if n as u32 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn for_order(q: u16) -> Result<Field> {
        if q == 256 {
            return Ok(Field::Ext256);
        }
        if is_prime(q) {
            Ok(Field::Prime(q))
        } else {
            Err(Error::Instance(format!(
                "unsupported field order {q} (primes or 256)"
            )))
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Field::Prime(p) => p as u32,
            Field::Ext256 => 256,
        }
    }

    pub fn validate_elem(self, v: u16) -> Result<u16> {
        if (v as u32) < self.order() {
            Ok(v)
        } else {
            Err(Error::Instance(format!(
                "element {v} outside GF({})",
                self.order()
            )))
        }
    }

    pub fn add(self, a: u16, b: u16) -> u16 {
        match self {
            Field::Prime(p) => ((a as u32 + b as u32) % p as u32) as u16,
            Field::Ext256 => a ^ b,
        }
    }

    pub fn sub(self, a: u16, b: u16) -> u16 {
        match self {
            Field::Prime(p) => ((a as u32 + p as u32 - b as u32) % p as u32) as u16,
            Field::Ext256 => a ^ b,
        }
    }

    pub fn mul(self, a: u16, b: u16) -> u16 {
        match self {
            Field::Prime(p) => ((a as u32 * b as u32) % p as u32) as u16,
            Field::Ext256 => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let (exp, log) = gf256_tables();
                    exp[log[a as usize] as usize + log[b as usize] as usize] as u16
                }
            }
        }
    }

    pub fn inv(self, a: u16) -> u16 {
        debug_assert!(a != 0, "inverse of zero");
        match self {
            Field::Prime(p) => {
                // Fermat: a^(p-2) mod p.
                let mut base = a as u64;
                let mut e = p as u64 - 2;
                let m = p as u64;
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                acc as u16
            }
            Field::Ext256 => {
                let (exp, log) = gf256_tables();
                exp[255 - log[a as usize] as usize] as u16
            }
        }
    }
}

/// Row space over a field kept in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    cols: usize,
    rows: Vec<Vec<u16>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: Field, cols: usize) -> RowSpace {
        RowSpace {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u16>] {
        &self.rows
    }

    /// Residual of `row` after eliminating against the current basis.
    pub fn reduce(&self, row: &[u16]) -> Vec<u16> {
        debug_assert_eq!(row.len(), self.cols);
        let f = self.field;
        let mut r = row.to_vec();
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p] != 0 {
                let factor = r[p];
                for c in p..self.cols {
                    r[c] = f.sub(r[c], f.mul(factor, basis_row[c]));
                }
            }
        }
        r
    }

    pub fn contains(&self, row: &[u16]) -> bool {
        self.reduce(row).iter().all(|&v| v == 0)
    }

    /// Inserts a row; returns true when the rank grew.
    pub fn insert(&mut self, row: &[u16]) -> bool {
        let mut r = self.reduce(row);
        let Some(p) = r.iter().position(|&v| v != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(r[p]);
        for v in r.iter_mut() {
            *v = f.mul(*v, inv);
        }
        // Back-substitute to keep the basis fully reduced.
        for (basis_row, &bp) in self.rows.iter_mut().zip(&self.pivots) {
            if basis_row[p] != 0 {
                let factor = basis_row[p];
                for c in 0..self.cols {
                    basis_row[c] = f.sub(basis_row[c], f.mul(factor, r[c]));
                }
                debug_assert!(bp != p);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }

    pub fn insert_all<'a>(&mut self, rows: impl IntoIterator<Item = &'a Vec<u16>>) {
        for r in rows {
            self.insert(r);
        }
    }

    /// Rank of the joint span of `self` and the given rows, without mutating.
    pub fn rank_with<'a>(&self, rows: impl IntoIterator<Item = &'a Vec<u16>>) -> usize {
        let mut clone = self.clone();
        clone.insert_all(rows);
        clone.rank()
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

pub fn rank_of_rows<'a>(
    field: Field,
    cols: usize,
    rows: impl IntoIterator<Item = &'a Vec<u16>>,
) -> usize {
    let mut space = RowSpace::new(field, cols);
    space.insert_all(rows);
    space.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf256_field_axioms_spot() {
        let f = Field::Ext256;
        for a in [1u16, 2, 3, 0x53, 0xCA, 255] {
            assert_eq!(f.mul(a, f.inv(a)), 1, "a = {a}");
        }
        // AES known product: 0x53 * 0xCA = 0x01.
        assert_eq!(f.mul(0x53, 0xCA), 0x01);
        assert_eq!(f.add(0x57, 0x83), 0xD4);
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert!(Field::for_order(6).is_err());
        assert!(Field::for_order(2).is_ok());
        assert!(Field::for_order(251).is_ok());
    }

    #[test]
    fn rank_field_extension_invariance() {
        // 0/1 matrix with GF(2)-rank 2 (third row is the XOR of the first two).
        let rows = vec![
            vec![1u16, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 1],
        ];
        assert_eq!(rank_of_rows(Field::Prime(2), 3, rows.iter()), 2);
        assert_eq!(rank_of_rows(Field::Ext256, 3, rows.iter()), 2);
        // Over GF(257) the same integer matrix has rank 3; that is exactly why
        // binary sources must be lifted into characteristic-2 fields only.
        assert_eq!(rank_of_rows(Field::Prime(257), 3, rows.iter()), 3);
    }

    #[test]
    fn rowspace_membership() {
        let mut s = RowSpace::new(Field::Ext256, 4);
        assert!(s.insert(&[1, 0, 1, 0]));
        assert!(s.insert(&[0, 1, 1, 0]));
        assert!(!s.insert(&[1, 1, 0, 0]));
        assert!(s.contains(&[1, 1, 0, 0]));
        assert!(!s.contains(&[0, 0, 0, 1]));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.rank_with([vec![0u16, 0, 0, 1]].iter()), 3);
        assert_eq!(s.rank(), 2);
    }
}
