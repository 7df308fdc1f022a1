//! Constructors for the concrete graded algebras and subalgebra pairs.

use crate::algebra::{GradedAlgebra, ModelError};
use crate::field::FieldSpec;
use crate::group::{cyclic_group, GroupTable};
use crate::linalg::SparseVec;
use crate::subspace::{SubalgebraPair, Subspace};

/// Words of length `1..=depth` over `letters` letters, in length-then-lex
/// order. A word is a pair `(length, value)` with `value` its base-`letters`
/// digits.
#[derive(Debug, Clone)]
pub struct WordBasis {
    letters: usize,
    depth: usize,
    offsets: Vec<usize>,
}

impl WordBasis {
    pub fn new(letters: usize, depth: usize) -> Self {
        assert!(letters >= 1 && depth >= 1, "need at least one letter and depth 1");
        let mut offsets = vec![0; depth + 2];
        let mut size = 1usize;
        for len in 1..=depth {
            size = size.checked_mul(letters).expect("truncated free algebra too large");
            offsets[len + 1] = offsets[len] + size;
        }
        WordBasis { letters, depth, offsets }
    }

    pub fn len(&self) -> usize {
        self.offsets[self.depth + 1]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, len: usize, value: usize) -> usize {
        self.offsets[len] + value
    }

    /// `(length, value)` of the word with index `i`.
    pub fn word(&self, i: usize) -> (usize, usize) {
        let len = (1..=self.depth).find(|&l| i < self.offsets[l + 1]).expect("index in range");
        (len, i - self.offsets[len])
    }

    /// Letters of word `i`, 0-based.
    pub fn letters_of(&self, i: usize) -> Vec<usize> {
        let (len, mut value) = self.word(i);
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = value % self.letters;
            value /= self.letters;
        }
        out
    }

    pub fn label(&self, i: usize) -> String {
        self.letters_of(i).iter().map(|l| format!("t{}", l + 1)).collect()
    }

    /// Index of the concatenation, or `None` if it is longer than the depth.
    pub fn concat(&self, a: usize, b: usize) -> Option<usize> {
        let (la, va) = self.word(a);
        let (lb, vb) = self.word(b);
        if la + lb > self.depth {
            return None;
        }
        Some(self.index(la + lb, va * self.letters.pow(lb as u32) + vb))
    }
}

/// `M_n(F)` with `deg(e_ij) = g_i^{-1} g_j`; basis `e_ij` at index `(i-1)n + (j-1)`.
pub fn matrix_algebra_elementary(
    degrees: &[usize],
    group: &GroupTable,
    field: FieldSpec,
) -> Result<GradedAlgebra, ModelError> {
    let n = degrees.len();
    if n == 0 {
        return Err(ModelError::Empty);
    }
    for &g in degrees {
        if !group.contains(g) {
            return Err(ModelError::BadDegree { label: format!("#{g}"), degree: g });
        }
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::with_capacity(n * n);
    let mut grading = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("e{}{}", i + 1, j + 1));
            grading.push(group.mul(group.inv(degrees[i]), degrees[j]));
        }
    }
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                products.push(((idx(i, j), idx(j, k)), SparseVec::unit(idx(i, k))));
            }
        }
    }
    GradedAlgebra::new(field, group.clone(), labels, grading, products)
}

/// The group algebra `F[G]` with `deg(u_g) = g`.
pub fn group_algebra(group: &GroupTable, field: FieldSpec) -> Result<GradedAlgebra, ModelError> {
    let k = group.order();
    let labels = group.labels().iter().map(|l| format!("u{l}")).collect();
    let grading = (0..k).collect();
    let mut products = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            products.push(((a, b), SparseVec::unit(group.mul(a, b))));
        }
    }
    GradedAlgebra::new(field, group.clone(), labels, grading, products)
}

/// Non-unital free algebra on `letters` generators truncated above `depth`,
/// trivially graded.
pub fn truncated_free_algebra(letters: usize, depth: usize, field: FieldSpec) -> Result<GradedAlgebra, ModelError> {
    let words = WordBasis::new(letters, depth);
    let labels = (0..words.len()).map(|i| words.label(i)).collect();
    let grading = vec![0; words.len()];
    let mut products = Vec::new();
    for a in 0..words.len() {
        for b in 0..words.len() {
            if let Some(c) = words.concat(a, b) {
                products.push(((a, b), SparseVec::unit(c)));
            }
        }
    }
    GradedAlgebra::new(field, cyclic_group(1), labels, grading, products)
}

/// Block positions of a 2x2 matrix: 11, 12, 21, 22.
const BLOCKS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// `M_2(D)` over `Z_2` (diagonal neutral, off-diagonal degree 1), keeping only
/// the `(block, word)` cells accepted by `allowed`. Indices are word-major.
struct BlockAlgebra {
    alg: GradedAlgebra,
    /// `cell[word][block]` = basis index
    cell: Vec<[Option<usize>; 4]>,
}

fn block_algebra(
    words: &WordBasis,
    field: FieldSpec,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<BlockAlgebra, ModelError> {
    let mut cell = vec![[None; 4]; words.len()];
    let mut labels = Vec::new();
    let mut grading = Vec::new();
    for (w, slots) in cell.iter_mut().enumerate() {
        for (b, &(r, c)) in BLOCKS.iter().enumerate() {
            if allowed(b, w) {
                slots[b] = Some(labels.len());
                labels.push(format!("e{}{}[{}]", r + 1, c + 1, words.label(w)));
                grading.push(usize::from(r != c));
            }
        }
    }
    let mut products = Vec::new();
    for u in 0..words.len() {
        for v in 0..words.len() {
            let Some(uv) = words.concat(u, v) else { continue };
            for (b1, &(r1, c1)) in BLOCKS.iter().enumerate() {
                let Some(i) = cell[u][b1] else { continue };
                for (b2, &(r2, c2)) in BLOCKS.iter().enumerate() {
                    if c1 != r2 {
                        continue;
                    }
                    let Some(j) = cell[v][b2] else { continue };
                    let out = BLOCKS.iter().position(|&p| p == (r1, c2)).expect("block");
                    let k = cell[uv][out].expect("allowed cells are closed under multiplication");
                    products.push(((i, j), SparseVec::unit(k)));
                }
            }
        }
    }
    let alg = GradedAlgebra::new(field, cyclic_group(2), labels, grading, products)?;
    Ok(BlockAlgebra { alg, cell })
}

fn cells(ba: &BlockAlgebra, pick: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, slots) in ba.cell.iter().enumerate() {
        for (b, slot) in slots.iter().enumerate() {
            if let Some(i) = slot {
                if pick(b, w) {
                    out.push(*i);
                }
            }
        }
    }
    out
}

/// `A = M_2(D)` with `D` the truncated free algebra; `B` upper and `C` lower
/// triangular.
pub fn counterexample_a(
    letters: usize,
    depth: usize,
    field: FieldSpec,
) -> Result<(GradedAlgebra, SubalgebraPair), ModelError> {
    let words = WordBasis::new(letters, depth);
    let ba = block_algebra(&words, field, |_, _| true)?;
    let b = Subspace::from_basis_indices(&ba.alg, cells(&ba, |blk, _| blk != 2))?;
    let c = Subspace::from_basis_indices(&ba.alg, cells(&ba, |blk, _| blk != 1))?;
    Ok((ba.alg, SubalgebraPair::new(b, c, false)))
}

/// Same algebra; `B` is the top row and `C` the bottom row, so `A = B ⊕ C`.
pub fn counterexample_direct_sum(
    letters: usize,
    depth: usize,
    field: FieldSpec,
) -> Result<(GradedAlgebra, SubalgebraPair), ModelError> {
    let words = WordBasis::new(letters, depth);
    let ba = block_algebra(&words, field, |_, _| true)?;
    let b = Subspace::from_basis_indices(&ba.alg, cells(&ba, |blk, _| blk < 2))?;
    let c = Subspace::from_basis_indices(&ba.alg, cells(&ba, |blk, _| blk >= 2))?;
    Ok((ba.alg, SubalgebraPair::new(b, c, false)))
}

/// Upper triangular 2x2 matrices over `Z_2` with `B = span{e12}` (an ideal)
/// and `C` the diagonal.
pub fn ideal_example_ut2(field: FieldSpec) -> Result<(GradedAlgebra, SubalgebraPair), ModelError> {
    let labels = vec!["e11".to_string(), "e12".to_string(), "e22".to_string()];
    let grading = vec![0, 1, 0];
    let products = vec![
        ((0, 0), SparseVec::unit(0)),
        ((0, 1), SparseVec::unit(1)),
        ((1, 2), SparseVec::unit(1)),
        ((2, 2), SparseVec::unit(2)),
    ];
    let alg = GradedAlgebra::new(field, cyclic_group(2), labels, grading, products)?;
    let b = Subspace::from_basis_indices(&alg, [1])?;
    let c = Subspace::from_basis_indices(&alg, [0, 2])?;
    Ok((alg, SubalgebraPair::new(b, c, true)))
}

/// `D = S_1 + S_2` where `S_2` is spanned by the words containing the first
/// letter; `A` has blocks `(D, S_2; S_2, D)`, `B = diag(S_1, S_1)` and `C` has
/// every block equal to `S_2`.
pub fn semi_example(
    letters: usize,
    depth: usize,
    field: FieldSpec,
) -> Result<(GradedAlgebra, SubalgebraPair), ModelError> {
    if letters < 2 {
        return Err(ModelError::Empty);
    }
    let words = WordBasis::new(letters, depth);
    let in_s2: Vec<bool> = (0..words.len()).map(|w| words.letters_of(w).contains(&0)).collect();
    let ba = block_algebra(&words, field, |blk, w| blk == 0 || blk == 3 || in_s2[w])?;
    let b = Subspace::from_basis_indices(&ba.alg, cells(&ba, |blk, w| (blk == 0 || blk == 3) && !in_s2[w]))?;
    let c = Subspace::from_basis_indices(&ba.alg, cells(&ba, |_, w| in_s2[w]))?;
    Ok((ba.alg, SubalgebraPair::new(b, c, false)))
}

/// `A^t` with componentwise operations; copy `c` of basis vector `i` has
/// index `c * dim + i`.
pub fn direct_power(alg: &GradedAlgebra, t: usize) -> Result<GradedAlgebra, ModelError> {
    if t == 0 {
        return Err(ModelError::Empty);
    }
    let m = alg.dim();
    let mut labels = Vec::with_capacity(m * t);
    let mut grading = Vec::with_capacity(m * t);
    for c in 0..t {
        for i in 0..m {
            labels.push(format!("{}@{}", alg.labels()[i], c + 1));
            grading.push(alg.degree_of(i));
        }
    }
    let mut products = Vec::new();
    for c in 0..t {
        for (&(i, j), v) in alg.structure_constants() {
            products.push(((c * m + i, c * m + j), v.shifted(c * m)));
        }
    }
    GradedAlgebra::new(alg.field(), alg.group().clone(), labels, grading, products)
}
