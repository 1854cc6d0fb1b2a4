//! Concrete element representations and the multiplication laws over them.
//!
//! Group elements are permutations, projective matrices (canonicalized scalar
//! classes of SL_n(q) matrices), or affine maps x -> ax + b over a finite
//! field. A [`GroupLaw`] bundles the context (field, dimension, degree)
//! needed to multiply and invert them.

use crate::error::{Error, Result};
use crate::finitefield::FieldSpec;

/// A permutation of `{0, .., n-1}` in image form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::domain("permutation images must be a bijection"));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// The cycle `(c0 c1 .. ck)` on `{0, .., n-1}`, fixing everything else.
    pub fn from_cycle(n: usize, cycle: &[u8]) -> Result<Perm> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for w in 0..cycle.len() {
            let from = cycle[w] as usize;
            let to = cycle[(w + 1) % cycle.len()];
            if from >= n || to as usize >= n {
                return Err(Error::domain("cycle point out of range"));
            }
            images[from] = to;
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `self` after `other`: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: (0..other.degree())
                .map(|x| self.images[other.images[x] as usize])
                .collect(),
        }
    }

    pub fn invert(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (from, &to) in self.images.iter().enumerate() {
            images[to as usize] = from as u8;
        }
        Perm { images }
    }

    /// Signature: true for even permutations.
    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }
}

/// A square matrix over a finite field, stored as row-major element codes.
///
/// Under the projective law the stored representative is canonical: among all
/// scalar multiples by dim-th roots of unity (the scalars that stay inside
/// SL), the code-lexicographically smallest entry vector is kept, so each
/// center coset has exactly one representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix {
    dim: u8,
    entries: Vec<u32>,
}

impl ProjMatrix {
    pub fn from_rows(dim: usize, entries: Vec<u32>) -> Result<ProjMatrix> {
        if entries.len() != dim * dim {
            return Err(Error::domain("matrix entry count must be dim^2"));
        }
        Ok(ProjMatrix { dim: dim as u8, entries })
    }

    pub fn identity(field: &FieldSpec, dim: usize) -> ProjMatrix {
        let _ = field;
        let mut entries = vec![0u32; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        ProjMatrix { dim: dim as u8, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim as usize + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn mul(&self, other: &ProjMatrix, field: &FieldSpec) -> ProjMatrix {
        let n = self.dim as usize;
        debug_assert_eq!(n, other.dim as usize);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    let prod = field.idx_mul(self.entry(i, k) as u64, other.entry(k, j) as u64);
                    acc = field.idx_add(acc, prod);
                }
                entries[i * n + j] = acc as u32;
            }
        }
        ProjMatrix { dim: self.dim, entries }
    }

    /// Inverse by Gauss-Jordan elimination; the matrix must be invertible.
    pub fn invert(&self, field: &FieldSpec) -> ProjMatrix {
        let n = self.dim as usize;
        let mut a: Vec<u64> = self.entries.iter().map(|&e| e as u64).collect();
        let mut inv: Vec<u64> = ProjMatrix::identity(field, n)
            .entries
            .iter()
            .map(|&e| e as u64)
            .collect();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .expect("matrix is invertible");
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let scale = field.idx_inv(a[col * n + col]).expect("pivot nonzero");
            for j in 0..n {
                a[col * n + j] = field.idx_mul(a[col * n + j], scale);
                inv[col * n + j] = field.idx_mul(inv[col * n + j], scale);
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    let s = field.idx_mul(factor, a[col * n + j]);
                    a[r * n + j] = field.idx_sub(a[r * n + j], s);
                    let s = field.idx_mul(factor, inv[col * n + j]);
                    inv[r * n + j] = field.idx_sub(inv[r * n + j], s);
                }
            }
        }
        ProjMatrix {
            dim: self.dim,
            entries: inv.into_iter().map(|e| e as u32).collect(),
        }
    }

    /// Determinant by elimination.
    pub fn determinant(&self, field: &FieldSpec) -> u64 {
        let n = self.dim as usize;
        let mut a: Vec<u64> = self.entries.iter().map(|&e| e as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| a[r * n + col] != 0) {
                Some(r) => r,
                None => return 0,
            };
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                det = field.idx_neg(det);
            }
            let pivot = a[col * n + col];
            det = field.idx_mul(det, pivot);
            let scale = field.idx_inv(pivot).expect("pivot nonzero");
            for r in col + 1..n {
                if a[r * n + col] == 0 {
                    continue;
                }
                let factor = field.idx_mul(a[r * n + col], scale);
                for j in col..n {
                    let s = field.idx_mul(factor, a[col * n + j]);
                    a[r * n + j] = field.idx_sub(a[r * n + j], s);
                }
            }
        }
        det
    }

    pub fn transpose(&self) -> ProjMatrix {
        let n = self.dim as usize;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entry(i, j);
            }
        }
        ProjMatrix { dim: self.dim, entries }
    }

    fn scaled(&self, scalar: u64, field: &FieldSpec) -> Vec<u32> {
        self.entries
            .iter()
            .map(|&e| field.idx_mul(scalar, e as u64) as u32)
            .collect()
    }
}

/// The affine map `x -> mult * x + shift` on a finite field, as codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    pub mult: u32,
    pub shift: u32,
}

/// A group element in one of the supported representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Perm(Perm),
    Matrix(ProjMatrix),
    Affine(AffineMap),
}

/// Multiplication law plus the context required to evaluate it.
#[derive(Debug, Clone)]
pub enum GroupLaw {
    /// Permutations of a fixed degree, composed right-to-left.
    Permutation { degree: usize },
    /// Matrices over `field` up to scalar multiples by dim-th roots of unity.
    /// With trivial roots (e.g. GF(2)) this is plain matrix multiplication.
    ProjectiveMatrix {
        field: FieldSpec,
        dim: usize,
        scalar_roots: Vec<u64>,
    },
    /// Invertible affine maps of the line over `field`.
    AffineField { field: FieldSpec },
}

impl GroupLaw {
    pub fn projective(field: FieldSpec, dim: usize) -> GroupLaw {
        let scalar_roots = field.nth_roots_of_unity(dim as u64);
        GroupLaw::ProjectiveMatrix { field, dim, scalar_roots }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupLaw::Permutation { degree } => Element::Perm(Perm::identity(*degree)),
            GroupLaw::ProjectiveMatrix { field, dim, .. } => {
                Element::Matrix(ProjMatrix::identity(field, *dim))
            }
            GroupLaw::AffineField { .. } => Element::Affine(AffineMap { mult: 1, shift: 0 }),
        }
    }

    /// Puts an element into canonical form (matrix scalar classes only).
    pub fn normalize(&self, elem: Element) -> Element {
        match (self, elem) {
            (GroupLaw::ProjectiveMatrix { field, scalar_roots, .. }, Element::Matrix(m)) => {
                if scalar_roots.len() == 1 {
                    return Element::Matrix(m);
                }
                let mut best = m.scaled(scalar_roots[0], field);
                for &root in &scalar_roots[1..] {
                    let cand = m.scaled(root, field);
                    if cand < best {
                        best = cand;
                    }
                }
                Element::Matrix(ProjMatrix { dim: m.dim, entries: best })
            }
            (_, elem) => elem,
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (GroupLaw::Permutation { .. }, Element::Perm(x), Element::Perm(y)) => {
                Element::Perm(x.compose(y))
            }
            (GroupLaw::ProjectiveMatrix { field, .. }, Element::Matrix(x), Element::Matrix(y)) => {
                self.normalize(Element::Matrix(x.mul(y, field)))
            }
            (GroupLaw::AffineField { field }, Element::Affine(x), Element::Affine(y)) => {
                // (x ∘ y)(t) = x.mult * (y.mult * t + y.shift) + x.shift
                let mult = field.idx_mul(x.mult as u64, y.mult as u64) as u32;
                let shift =
                    field.idx_add(field.idx_mul(x.mult as u64, y.shift as u64), x.shift as u64) as u32;
                Element::Affine(AffineMap { mult, shift })
            }
            _ => unreachable!("element representation does not match the group law"),
        }
    }

    pub fn invert(&self, a: &Element) -> Element {
        match (self, a) {
            (GroupLaw::Permutation { .. }, Element::Perm(x)) => Element::Perm(x.invert()),
            (GroupLaw::ProjectiveMatrix { field, .. }, Element::Matrix(x)) => {
                self.normalize(Element::Matrix(x.invert(field)))
            }
            (GroupLaw::AffineField { field }, Element::Affine(x)) => {
                let mult_inv = field
                    .idx_inv(x.mult as u64)
                    .expect("affine map multiplier is nonzero");
                let shift = field.idx_neg(field.idx_mul(mult_inv, x.shift as u64)) as u32;
                Element::Affine(AffineMap { mult: mult_inv as u32, shift })
            }
            _ => unreachable!("element representation does not match the group law"),
        }
    }
}
