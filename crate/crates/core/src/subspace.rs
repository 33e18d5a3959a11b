//! Subspaces of `F_q^n` in canonical reduced row echelon form.
//!
//! A [`Subspace`] stores its basis as a `k x n` matrix in RREF: pivots are 1,
//! every other entry of a pivot column is 0, and pivot columns strictly
//! increase down the rows. RREF is unique, so structural equality of the
//! stored matrices is equality of subspaces.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::qbinom::gauss_binom;

/// Default cap on the number of subspaces an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 2_000_000;

#[derive(Clone)]
pub struct Subspace {
    field: Arc<FieldSpec>,
    n: usize,
    k: usize,
    // row-major k x n
    basis: Vec<FieldElement>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.n == other.n && self.k == other.k && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.n.hash(state);
        self.k.hash(state);
        self.basis.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Lexicographic on the flattened RREF matrix (after `q`, `n`, `k`).
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.q(), self.n, self.k).cmp(&(other.field.q(), other.n, other.k)).then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(q={}, n={}, \"{}\")", self.field.q(), self.n, self)
    }
}

/// Text form: one group of `n` digits per basis row, rows separated by `|`,
/// e.g. `10|01`. Fields with `q > 36` write each row as comma-separated
/// decimals. The zero space is the empty string.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.field.q() > 36;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str("|")?;
            }
            if wide {
                let parts: Vec<String> = row.iter().map(|x| x.rep().to_string()).collect();
                f.write_str(&parts.join(","))?;
            } else {
                for x in row {
                    write!(f, "{}", std::char::from_digit(x.rep(), 36).unwrap())?;
                }
            }
        }
        Ok(())
    }
}

/// Row-reduces `rows` (each of length `n`) in place to RREF, drops zero rows,
/// and returns the pivot columns.
fn reduce(field: &FieldSpec, n: usize, rows: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a small matrix over `field`; consumes the rows.
fn rank(field: &FieldSpec, n: usize, mut rows: Vec<Vec<FieldElement>>) -> usize {
    reduce(field, n, &mut rows).len()
}

/// Canonical form of the row span of `rows`. All rows must have equal length.
pub fn rref_canonical(field: &Arc<FieldSpec>, rows: &[Vec<FieldElement>]) -> Result<Subspace> {
    let n = rows.first().map(Vec::len).ok_or_else(|| Error::InvalidArgs("no rows given".into()))?;
    Subspace::span(field, n, rows)
}

/// All `k`-dimensional subspaces of `F_q^n` in lexicographic order of their
/// RREF matrices, refusing with [`Error::SizeLimit`] above
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_k_subspaces(n: usize, k: usize, field: &Arc<FieldSpec>) -> Result<Vec<Subspace>> {
    enumerate_k_subspaces_capped(n, k, field, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_k_subspaces_capped(n: usize, k: usize, field: &Arc<FieldSpec>, cap: u64) -> Result<Vec<Subspace>> {
    if k > n {
        return Err(Error::InvalidArgs(format!("k = {k} exceeds n = {n}")));
    }
    let count = gauss_binom(n as i64, k as i64, field.q() as u64)?;
    if count > cap.into() {
        return Err(Error::SizeLimit { requested: count.to_string(), cap });
    }
    // Schubert cells: one per choice of pivot columns
    let cells = combinations(n, k);
    let mut out: Vec<Subspace> = cells.par_iter().flat_map_iter(|pivots| schubert_cell(field, n, pivots)).collect();
    out.sort_unstable();
    Ok(out)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn schubert_cell(field: &Arc<FieldSpec>, n: usize, pivots: &[usize]) -> Vec<Subspace> {
    let k = pivots.len();
    let mut free = Vec::new();
    for (r, &c) in pivots.iter().enumerate() {
        for j in c + 1..n {
            if !pivots.contains(&j) {
                free.push(r * n + j);
            }
        }
    }
    let q = field.q();
    let mut template = vec![FieldElement::ZERO; k * n];
    for (r, &c) in pivots.iter().enumerate() {
        template[r * n + c] = FieldElement::ONE;
    }
    let total = (q as u64).pow(free.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u32; free.len()];
    for _ in 0..total {
        let mut basis = template.clone();
        for (&pos, &d) in free.iter().zip(&digits) {
            basis[pos] = field.element(d).unwrap();
        }
        out.push(Subspace { field: field.clone(), n, k, basis });
        // odometer increment
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    out
}

impl Subspace {
    /// Row span of `rows` inside `F_q^n`; an empty row list gives the zero space.
    pub fn span(field: &Arc<FieldSpec>, n: usize, rows: &[Vec<FieldElement>]) -> Result<Subspace> {
        let mut work = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            if let Some(bad) = row.iter().find(|x| x.rep() >= field.q()) {
                return Err(Error::InvalidArgs(format!("{bad} is not an element of F_{}", field.q())));
            }
            work.push(row.clone());
        }
        reduce(field, n, &mut work);
        let k = work.len();
        Ok(Subspace { field: field.clone(), n, k, basis: work.into_iter().flatten().collect() })
    }

    /// Convenience constructor from packed integer entries.
    pub fn from_reps(field: &Arc<FieldSpec>, n: usize, rows: &[&[u32]]) -> Result<Subspace> {
        let rows: Vec<Vec<FieldElement>> =
            rows.iter().map(|r| r.iter().map(|&x| field.element(x)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Subspace::span(field, n, &rows)
    }

    pub fn zero(field: &Arc<FieldSpec>, n: usize) -> Subspace {
        Subspace { field: field.clone(), n, k: 0, basis: Vec::new() }
    }

    pub fn full(field: &Arc<FieldSpec>, n: usize) -> Subspace {
        Subspace::coordinate(field, n, &(0..n).collect::<Vec<_>>())
    }

    /// Span of the standard basis vectors `e_i`, `i` in `coords` (0-based).
    pub fn coordinate(field: &Arc<FieldSpec>, n: usize, coords: &[usize]) -> Subspace {
        let rows: Vec<Vec<FieldElement>> = coords
            .iter()
            .map(|&c| (0..n).map(|j| if j == c { FieldElement::ONE } else { FieldElement::ZERO }).collect())
            .collect();
        Subspace::span(field, n, &rows).expect("coordinate rows are well formed")
    }

    /// Parses the text form produced by `Display`.
    pub fn parse_text(field: &Arc<FieldSpec>, n: usize, text: &str) -> Result<Subspace> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Subspace::zero(field, n));
        }
        let mut rows = Vec::new();
        for part in text.split('|') {
            let row: Vec<FieldElement> = if part.contains(',') || field.q() > 36 {
                part.split(',')
                    .map(|s| s.trim().parse::<u32>().map_err(|_| Error::parse(1, format!("bad entry {s:?}"))))
                    .map(|r| r.and_then(|x| field.element(x)))
                    .collect::<Result<_>>()?
            } else {
                part.chars()
                    .map(|c| c.to_digit(36).ok_or_else(|| Error::parse(1, format!("bad digit {c:?}"))))
                    .map(|r| r.and_then(|x| field.element(x)))
                    .collect::<Result<_>>()?
            };
            rows.push(row);
        }
        let sub = Subspace::span(field, n, &rows)?;
        if sub.k != rows.len() {
            return Err(Error::parse(1, "rows are linearly dependent"));
        }
        Ok(sub)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        // chunks_exact(0) panics, so the ambient-zero case is special-cased
        self.basis.chunks(self.n.max(1)).take(self.k)
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.basis[i * self.n..(i + 1) * self.n]
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows().map(|r| r.iter().position(|x| !x.is_zero()).expect("RREF rows are nonzero")).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.n != other.n || self.field.q() != other.field.q() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// `dim(self ∩ other)`, computed as `dim U + dim V - rank[U; V]`.
    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_ambient(other)?;
        let stacked: Vec<Vec<FieldElement>> = self.rows().chain(other.rows()).map(<[_]>::to_vec).collect();
        let r = rank(&self.field, self.n, stacked);
        Ok(self.k + other.k - r)
    }

    /// The sum `self + other`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked: Vec<Vec<FieldElement>> = self.rows().chain(other.rows()).map(<[_]>::to_vec).collect();
        Subspace::span(&self.field, self.n, &stacked)
    }

    /// The intersection `self ∩ other`, as `(U⊥ + V⊥)⊥`.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.orthogonal_complement().join(&other.orthogonal_complement())?.orthogonal_complement())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.intersect_dim(other)? == other.k)
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut rows: Vec<Vec<FieldElement>> = self.rows().map(<[_]>::to_vec).collect();
        rows.push(v.to_vec());
        rank(&self.field, self.n, rows) == self.k
    }

    /// Null space of the basis under `Σ x_i y_i`.
    pub fn orthogonal_complement(&self) -> Subspace {
        let pivots = self.pivots();
        let f = &self.field;
        let rows: Vec<Vec<FieldElement>> = (0..self.n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![FieldElement::ZERO; self.n];
                v[free] = FieldElement::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(self.row(r)[free]);
                }
                v
            })
            .collect();
        Subspace::span(f, self.n, &rows).expect("complement rows are well formed")
    }

    /// The vector `Σ coeffs[r] * row_r`.
    pub fn combine(&self, coeffs: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut v = vec![FieldElement::ZERO; self.n];
        for (c, row) in coeffs.iter().zip(self.rows()) {
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        v
    }

    /// The 1-dimensional subspaces, as vectors whose first nonzero entry is 1,
    /// in increasing lexicographic order of the coefficient vectors.
    pub fn projective_points(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field.clone();
        let Ok(lines) = enumerate_k_subspaces(self.k, 1, &f) else {
            return Vec::new();
        };
        lines.iter().map(|l| self.combine(l.row(0))).collect()
    }

    /// All `t`-dimensional subspaces of `self`.
    pub fn subspaces_of_dim(&self, t: usize) -> Result<Vec<Subspace>> {
        if t > self.k {
            return Err(Error::InvalidDims(format!("t = {t} exceeds dimension {}", self.k)));
        }
        let local = enumerate_k_subspaces(self.k, t, &self.field)?;
        local
            .iter()
            .map(|s| {
                let rows: Vec<Vec<FieldElement>> = s.rows().map(|c| self.combine(c)).collect();
                Subspace::span(&self.field, self.n, &rows)
            })
            .collect()
    }

    /// Packed copy of the basis for repeated intersection-dimension queries.
    pub fn packed(&self) -> PackedBasis {
        if self.field.q() == 2 && self.n <= 64 {
            let masks = self
                .rows()
                .map(|r| r.iter().enumerate().fold(0u64, |m, (j, x)| if x.is_zero() { m } else { m | (1 << j) }))
                .collect();
            PackedBasis::Binary { pivots: self.pivots(), masks }
        } else {
            PackedBasis::General { n: self.n, pivots: self.pivots(), basis: self.basis.clone() }
        }
    }
}

/// Basis matrix packed for the `|V|^2` adjacency census: one `u64` bit-vector
/// per row over `F_2`, plain entries otherwise.
#[derive(Debug, Clone)]
pub enum PackedBasis {
    Binary { pivots: Vec<usize>, masks: Vec<u64> },
    General { n: usize, pivots: Vec<usize>, basis: Vec<FieldElement> },
}

impl PackedBasis {
    pub fn dim(&self) -> usize {
        match self {
            PackedBasis::Binary { masks, .. } => masks.len(),
            PackedBasis::General { pivots, .. } => pivots.len(),
        }
    }

    /// `dim(self ∩ other)`. Both must come from subspaces of the same ambient space.
    pub fn intersect_dim(&self, other: &PackedBasis, field: &FieldSpec) -> usize {
        match (self, other) {
            (PackedBasis::Binary { pivots, masks }, PackedBasis::Binary { masks: other_masks, .. }) => {
                // reduce the other rows against our RREF rows, then rank what is left
                let mut basis = [0u64; 64];
                let mut rank = 0;
                for &m in other_masks {
                    let mut x = m;
                    for (&p, &row) in pivots.iter().zip(masks) {
                        if x >> p & 1 == 1 {
                            x ^= row;
                        }
                    }
                    while x != 0 {
                        let hb = 63 - x.leading_zeros() as usize;
                        if basis[hb] == 0 {
                            basis[hb] = x;
                            rank += 1;
                            break;
                        }
                        x ^= basis[hb];
                    }
                }
                other_masks.len() - rank
            }
            (
                PackedBasis::General { n, pivots, basis },
                PackedBasis::General { basis: other_basis, pivots: other_pivots, .. },
            ) => {
                let n = *n;
                let mut rest: Vec<Vec<FieldElement>> = Vec::with_capacity(other_pivots.len());
                for row in other_basis.chunks(n.max(1)).take(other_pivots.len()) {
                    let mut x = row.to_vec();
                    for (r, &p) in pivots.iter().enumerate() {
                        let c = x[p];
                        if !c.is_zero() {
                            let urow = &basis[r * n..(r + 1) * n];
                            for (xi, &ui) in x.iter_mut().zip(urow) {
                                *xi = field.sub(*xi, field.mul(c, ui));
                            }
                        }
                    }
                    rest.push(x);
                }
                other_pivots.len() - rank(field, n, rest)
            }
            _ => panic!("packed bases from different fields"),
        }
    }
}
