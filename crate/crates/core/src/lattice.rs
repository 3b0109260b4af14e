//! Integer lattices given by symmetric Gram matrices, maps between them, and
//! a bounded exhaustive search for isometric embeddings.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Largest number of candidate image vectors per basis element that
/// [`search_embeddings`] is willing to enumerate.
pub const DEFAULT_SEARCH_CEILING: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix has {rows} rows but rank {rank}")]
    BadShape { rows: usize, rank: usize },
    #[error("{labels} labels for a lattice of rank {rank}")]
    BadLabels { labels: usize, rank: usize },
    #[error("vector of length {found}, lattice has rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("map matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MapShape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("search bound must be at least 1")]
    BadBound,
    #[error("source rank {src} exceeds target rank {tgt}")]
    RankTooLarge { src: usize, tgt: usize },
    #[error("search space of {0} candidates per column exceeds the ceiling {1}")]
    SearchTooLarge(u128, u64),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerLattice {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
}

impl IntegerLattice {
    pub fn new(labels: &[&str], gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let rank = gram.len();
        if labels.len() != rank {
            return Err(LatticeError::BadLabels { labels: labels.len(), rank });
        }
        if gram.iter().any(|row| row.len() != rank) || rank == 0 {
            return Err(LatticeError::BadShape { rows: gram.len(), rank });
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(IntegerLattice { labels: labels.iter().map(|s| s.to_string()).collect(), gram })
    }

    /// Orthogonal sum of rank-one lattices `<d_1> + ... + <d_n>`.
    pub fn diagonal(labels: &[&str], diag: &[i64]) -> Result<Self, LatticeError> {
        let n = diag.len();
        let gram = (0..n).map(|i| (0..n).map(|j| if i == j { diag[i] } else { 0 }).collect()).collect();
        Self::new(labels, gram)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// Coordinate vector of a basis element.
    pub fn basis_vector(&self, label: &str) -> Result<Vec<i64>, LatticeError> {
        let i = self
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))?;
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Ok(v)
    }

    /// Integer combination of basis elements by label.
    pub fn vector(&self, parts: &[(i64, &str)]) -> Result<Vec<i64>, LatticeError> {
        let mut v = vec![0; self.rank()];
        for (c, label) in parts {
            let b = self.basis_vector(label)?;
            for (x, y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        Ok(v)
    }

    fn check_len(&self, v: &[i64]) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::LengthMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(())
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, row) in self.labels.iter().zip(&self.gram) {
            write!(f, "{label:>4} |")?;
            for x in row {
                write!(f, " {x:>3}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Linear map between lattices; column `j` is the image of source basis
/// element `j` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeMap {
    pub source: IntegerLattice,
    pub target: IntegerLattice,
    pub matrix: Vec<Vec<i64>>,
}

impl LatticeMap {
    pub fn new(source: IntegerLattice, target: IntegerLattice, matrix: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let (er, ec) = (target.rank(), source.rank());
        if matrix.len() != er || matrix.iter().any(|r| r.len() != ec) {
            return Err(LatticeError::MapShape {
                rows: matrix.len(),
                cols: matrix.first().map_or(0, Vec::len),
                expected_rows: er,
                expected_cols: ec,
            });
        }
        Ok(LatticeMap { source, target, matrix })
    }

    /// Builds a map from the images of the source basis, given as target
    /// vectors.
    pub fn from_images(source: IntegerLattice, target: IntegerLattice, images: &[Vec<i64>]) -> Result<Self, LatticeError> {
        for im in images {
            target.check_len(im)?;
        }
        let matrix = (0..target.rank()).map(|r| images.iter().map(|im| im[r]).collect()).collect();
        Self::new(source, target, matrix)
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|row| row[j]).collect()
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, LatticeError> {
        self.source.check_len(v)?;
        Ok(self.matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }
}

/// `v^T G w`.
pub fn gram_product(l: &IntegerLattice, v: &[i64], w: &[i64]) -> Result<i64, LatticeError> {
    l.check_len(v)?;
    l.check_len(w)?;
    Ok(pairing(&l.gram, v, w))
}

fn pairing(gram: &[Vec<i64>], v: &[i64], w: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, row) in gram.iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        let gw: i64 = row.iter().zip(w).map(|(g, x)| g * x).sum();
        acc += v[i] * gw;
    }
    acc
}

/// True iff `M^T G_target M = G_source`.
pub fn verify_embedding(m: &LatticeMap) -> bool {
    let n = m.source.rank();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| m.column(j)).collect();
    (0..n).all(|i| (i..n).all(|j| pairing(&m.target.gram, &cols[i], &cols[j]) == m.source.gram[i][j]))
}

/// Componentwise equality of coordinate vectors.
pub fn class_identity(l: &IntegerLattice, lhs: &[i64], rhs: &[i64]) -> Result<bool, LatticeError> {
    l.check_len(lhs)?;
    l.check_len(rhs)?;
    Ok(lhs == rhs)
}

/// Every map with entries in `[-bound, bound]` that preserves the pairing,
/// ordered lexicographically by the sequence of column images.
pub fn search_embeddings(
    src: &IntegerLattice,
    tgt: &IntegerLattice,
    bound: i64,
) -> Result<Vec<LatticeMap>, LatticeError> {
    search_embeddings_with_ceiling(src, tgt, bound, DEFAULT_SEARCH_CEILING)
}

pub fn search_embeddings_with_ceiling(
    src: &IntegerLattice,
    tgt: &IntegerLattice,
    bound: i64,
    ceiling: u64,
) -> Result<Vec<LatticeMap>, LatticeError> {
    if bound < 1 {
        return Err(LatticeError::BadBound);
    }
    if src.rank() > tgt.rank() {
        return Err(LatticeError::RankTooLarge { src: src.rank(), tgt: tgt.rank() });
    }
    let per_column = (2 * bound as u128 + 1).checked_pow(tgt.rank() as u32).unwrap_or(u128::MAX);
    if per_column > ceiling as u128 {
        return Err(LatticeError::SearchTooLarge(per_column, ceiling));
    }

    // all vectors in the box, lex order
    let side: Vec<i64> = (-bound..=bound).collect();
    let mut boxed: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..tgt.rank() {
        boxed = boxed
            .into_iter()
            .flat_map(|prefix| {
                side.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    // candidates for column j have the right norm
    let candidates: Vec<Vec<Vec<i64>>> = (0..src.rank())
        .map(|j| boxed.iter().filter(|v| pairing(&tgt.gram, v, v) == src.gram[j][j]).cloned().collect())
        .collect();

    let found: Vec<Vec<Vec<i64>>> = candidates[0]
        .par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut chosen = vec![first.clone()];
            extend(src, tgt, &candidates, &mut chosen, &mut out);
            out
        })
        .collect();
    found
        .into_iter()
        .map(|images| LatticeMap::from_images(src.clone(), tgt.clone(), &images))
        .collect()
}

fn extend(
    src: &IntegerLattice,
    tgt: &IntegerLattice,
    candidates: &[Vec<Vec<i64>>],
    chosen: &mut Vec<Vec<i64>>,
    out: &mut Vec<Vec<Vec<i64>>>,
) {
    let j = chosen.len();
    if j == src.rank() {
        out.push(chosen.clone());
        return;
    }
    for cand in &candidates[j] {
        let ok = chosen.iter().enumerate().all(|(i, prev)| pairing(&tgt.gram, prev, cand) == src.gram[i][j]);
        if ok {
            chosen.push(cand.clone());
            extend(src, tgt, candidates, chosen, out);
            chosen.pop();
        }
    }
}

/// Lattices appearing in the K3 degenerations.
pub mod catalog {
    use super::*;

    /// Rank-two lattice with Gram `[[2, 4], [4, 2]]` on `f1, f2`.
    pub fn phi() -> IntegerLattice {
        IntegerLattice::new(&["f1", "f2"], vec![vec![2, 4], vec![4, 2]]).unwrap()
    }

    /// Rank-three lattice with zero diagonal and off-diagonal 2 on `E1, E2, E3`.
    pub fn pi() -> IntegerLattice {
        IntegerLattice::new(&["E1", "E2", "E3"], vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]]).unwrap()
    }

    /// Picard lattice of a quartic with `nodes` nodes: `<4> + <-2>^nodes`.
    pub fn nodal_quartic(nodes: usize) -> IntegerLattice {
        let mut labels = vec!["h".to_string()];
        labels.extend((1..=nodes).map(|i| format!("R{i}")));
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut diag = vec![4];
        diag.extend(std::iter::repeat_n(-2, nodes));
        IntegerLattice::diagonal(&refs, &diag).unwrap()
    }

    /// `f1 = h - R1`, `f2 = h - R2`.
    pub fn phi_embedding() -> LatticeMap {
        let tgt = nodal_quartic(2);
        let f1 = tgt.vector(&[(1, "h"), (-1, "R1")]).unwrap();
        let f2 = tgt.vector(&[(1, "h"), (-1, "R2")]).unwrap();
        LatticeMap::from_images(phi(), tgt, &[f1, f2]).unwrap()
    }

    /// `E_i = h - R_j - R_k` for `{i, j, k} = {1, 2, 3}`.
    pub fn pi_embedding() -> LatticeMap {
        let tgt = nodal_quartic(3);
        let e1 = tgt.vector(&[(1, "h"), (-1, "R2"), (-1, "R3")]).unwrap();
        let e2 = tgt.vector(&[(1, "h"), (-1, "R1"), (-1, "R3")]).unwrap();
        let e3 = tgt.vector(&[(1, "h"), (-1, "R1"), (-1, "R2")]).unwrap();
        LatticeMap::from_images(pi(), tgt, &[e1, e2, e3]).unwrap()
    }
}
