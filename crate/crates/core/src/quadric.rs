//! The hyperbolic quadric `Q+(5,q): x0 x1 + x2 x3 + x4 x5 = 0`, the Klein
//! correspondence with lines of `PG(3,q)`, and exhaustive checks of the
//! geometric facts behind the treewidth of `K_q(4,2,1)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::graph::{BitSet, Graph, VertexLabel};
use crate::kneser::{build_kneser_graph, KneserParams};
use crate::report::CaseRecord;
use crate::subspace::Subspace;

/// A point of `PG(5,q)`: six coordinates, first nonzero one equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [FieldElement; 6],
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reps: Vec<String> = self.coords.iter().map(|c| c.rep().to_string()).collect();
        write!(f, "({})", reps.join(","))
    }
}

impl ProjPoint {
    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    pub fn normalize(field: &FieldSpec, v: [FieldElement; 6]) -> Option<ProjPoint> {
        let lead = *v.iter().find(|c| !c.is_zero())?;
        let inv = field.inv(lead).ok()?;
        Some(ProjPoint { coords: v.map(|c| field.mul(c, inv)) })
    }

    pub fn coords(&self) -> &[FieldElement; 6] {
        &self.coords
    }
}

/// `x0 x1 + x2 x3 + x4 x5`.
pub fn form(field: &FieldSpec, x: &[FieldElement; 6]) -> FieldElement {
    let mut s = FieldElement::ZERO;
    for i in [0, 2, 4] {
        s = field.add(s, field.mul(x[i], x[i + 1]));
    }
    s
}

/// The polarization `b(x, y) = Q(x + y) - Q(x) - Q(y)`.
pub fn bilinear(field: &FieldSpec, x: &[FieldElement; 6], y: &[FieldElement; 6]) -> FieldElement {
    let mut s = FieldElement::ZERO;
    for i in [0, 2, 4] {
        s = field.add(s, field.mul(x[i], y[i + 1]));
        s = field.add(s, field.mul(x[i + 1], y[i]));
    }
    s
}

/// The points of `Q+(5,q)` in lexicographic order.
#[derive(Debug, Clone)]
pub struct QuadricModel {
    field: Arc<FieldSpec>,
    points: Vec<ProjPoint>,
    index: HashMap<ProjPoint, usize>,
}

impl QuadricModel {
    pub fn new(q: u64) -> Result<Self> {
        let field = Arc::new(FieldSpec::new(q)?);
        let q = q as u32;
        let total = (q as u64).pow(6);
        let mut points = Vec::new();
        for code in 1..total {
            let mut v = [FieldElement::ZERO; 6];
            let mut c = code;
            for slot in v.iter_mut().rev() {
                *slot = field.element((c % q as u64) as u32)?;
                c /= q as u64;
            }
            // keep only normalized representatives
            let lead = v.iter().find(|x| !x.is_zero()).copied();
            if lead == Some(FieldElement::ONE) && form(&field, &v).is_zero() {
                points.push(ProjPoint { coords: v });
            }
        }
        points.sort_unstable();
        let index = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        Ok(QuadricModel { field, points, index })
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn perpendicular(&self, a: usize, b: usize) -> bool {
        bilinear(&self.field, &self.points[a].coords, &self.points[b].coords).is_zero()
    }

    /// Indices of the points of the projective line through points `a` and `b`
    /// (which must be perpendicular for the line to lie on the quadric).
    fn line_through(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let f = &self.field;
        let (pa, pb) = (&self.points[a].coords, &self.points[b].coords);
        let mut out = vec![a];
        for lambda in f.elements() {
            let v = std::array::from_fn(|i| f.add(pb[i], f.mul(lambda, pa[i])));
            out.push(self.index_of(&ProjPoint::normalize(f, v)?)?);
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    /// Quadric points perpendicular to every point in `set`.
    fn perp_section(&self, set: &[usize]) -> Vec<usize> {
        (0..self.points.len()).filter(|&y| set.iter().all(|&x| self.perpendicular(x, y))).collect()
    }

    /// Quadric points in the span of the given points.
    fn span_section(&self, gens: &[usize]) -> Vec<usize> {
        let f = &self.field;
        let q = f.q() as usize;
        let mut out = BTreeSet::new();
        let mut coeffs = vec![FieldElement::ZERO; gens.len()];
        for code in 1..q.pow(gens.len() as u32) {
            let mut c = code;
            for slot in coeffs.iter_mut() {
                *slot = f.element((c % q) as u32).expect("digit below q");
                c /= q;
            }
            let v = std::array::from_fn(|i| {
                gens.iter().zip(&coeffs).fold(FieldElement::ZERO, |s, (&g, &a)| f.add(s, f.mul(a, self.points[g].coords[i])))
            });
            if let Some(p) = ProjPoint::normalize(f, v) {
                if let Some(j) = self.index_of(&p) {
                    out.insert(j);
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Plücker coordinates `(p01, p23, p02, p31, p03, p12)` of a line of
/// `PG(3,q)`, where `pij = u_i v_j - u_j v_i` for a basis `u, v`.
pub fn klein_map(line: &Subspace) -> Result<ProjPoint> {
    if line.n() != 4 || line.dim() != 2 {
        return Err(Error::NotALine(format!("subspace of dimension {} in F_q^{}", line.dim(), line.n())));
    }
    let f = line.field();
    let (u, v) = (line.row(0), line.row(1));
    let p = |i: usize, j: usize| f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
    let coords = [p(0, 1), p(2, 3), p(0, 2), p(3, 1), p(0, 3), p(1, 2)];
    Ok(ProjPoint::normalize(f, coords).expect("independent rows give a nonzero Plücker vector"))
}

/// Largest `q` for which [`build_quadric_graph`] materializes the graph.
pub const MAX_GRAPH_Q: u64 = 5;

/// Vertices are the quadric points; `v ~ w` iff `b(v, w) != 0`.
pub fn build_quadric_graph(q: u64) -> Result<Graph> {
    if q > MAX_GRAPH_Q {
        return Err(Error::SizeLimit { requested: format!("(q^2+1)(q^2+q+1) points for q = {q}"), cap: MAX_GRAPH_Q });
    }
    let model = QuadricModel::new(q)?;
    Ok(quadric_graph(&model))
}

fn quadric_graph(model: &QuadricModel) -> Graph {
    let n = model.points.len();
    let rows: Vec<BitSet> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut row = BitSet::new(n);
            for b in 0..n {
                if !model.perpendicular(a, b) {
                    row.insert(b);
                }
            }
            row
        })
        .collect();
    let labels = model.points.iter().map(|&p| VertexLabel::Point(p)).collect();
    Graph::from_rows(rows, labels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleinReport {
    pub q: u64,
    pub lines: usize,
    pub points: usize,
    /// Every image lies on the quadric.
    pub on_quadric: bool,
    pub bijective: bool,
    pub pairs_checked: u64,
    /// Pairs where skewness of lines and non-perpendicularity disagree.
    pub mismatches: u64,
    pub pass: bool,
}

impl KleinReport {
    pub fn case(&self) -> CaseRecord {
        CaseRecord::new(
            "klein",
            json!({"q": self.q}),
            format!("{} mismatches over {} pairs", self.mismatches, self.pairs_checked),
            "0 mismatches",
            self.pass,
        )
    }
}

/// Checks that the Klein map is an isomorphism `K_q(4,2,1) → ` the
/// non-perpendicularity graph of `Q+(5,q)`, over all pairs of lines.
pub fn verify_klein_isomorphism(q: u64) -> Result<KleinReport> {
    if q > 4 {
        return Err(Error::PreconditionViolated(format!("exhaustive Klein check needs q <= 4, got {q}")));
    }
    let kneser = build_kneser_graph(&KneserParams::new(q, 4, 2, 1)?)?;
    let model = QuadricModel::new(q)?;
    let quad = quadric_graph(&model);
    let mut map = Vec::with_capacity(kneser.vertex_count());
    let mut hit = vec![false; model.points.len()];
    let mut on_quadric = true;
    let mut bijective = kneser.vertex_count() == model.points.len();
    for label in kneser.labels() {
        let VertexLabel::Subspace(line) = label else { unreachable!("Kneser vertices are subspaces") };
        let p = klein_map(line)?;
        on_quadric &= form(&model.field, &p.coords).is_zero();
        match model.index_of(&p) {
            Some(j) => {
                bijective &= !hit[j];
                hit[j] = true;
                map.push(j);
            }
            None => {
                bijective = false;
                map.push(usize::MAX);
            }
        }
    }
    let n = kneser.vertex_count();
    let (mut pairs, mut mismatches) = (0, 0);
    if bijective {
        for a in 0..n {
            for b in a + 1..n {
                pairs += 1;
                if kneser.has_edge(a, b) != quad.has_edge(map[a], map[b]) {
                    mismatches += 1;
                }
            }
        }
    }
    let pass = on_quadric && bijective && mismatches == 0;
    Ok(KleinReport { q, lines: n, points: model.points.len(), on_quadric, bijective, pairs_checked: pairs, mismatches, pass })
}

/// A grid point `(row, column)` of `Q+(3,q)`.
pub type GridPoint = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub q: u64,
    pub maximum: usize,
    /// `2q + 2`.
    pub expected_maximum: usize,
    /// All sets of maximum size with no three points in distinct rows and columns.
    pub extremal_sets: Vec<Vec<GridPoint>>,
    /// Every extremal set is two rows or two columns, and all `2 C(q+1, 2)` of those occur.
    pub classification_holds: bool,
    pub pass: bool,
}

impl GridReport {
    pub fn case(&self) -> CaseRecord {
        CaseRecord::new("grid", json!({"q": self.q}), self.maximum, self.expected_maximum, self.pass).with_witness(json!({
            "extremal_sets": self.extremal_sets.len(),
            "classification_holds": self.classification_holds,
        }))
    }
}

/// Whether the points contain three that are pairwise non-collinear
/// (distinct rows and distinct columns).
pub fn has_non_collinear_triple(points: &[GridPoint]) -> bool {
    let n = points.len();
    let apart = |a: GridPoint, b: GridPoint| a.0 != b.0 && a.1 != b.1;
    (0..n).any(|i| {
        (i + 1..n).any(|j| apart(points[i], points[j]) && (j + 1..n).any(|k| apart(points[i], points[k]) && apart(points[j], points[k])))
    })
}

struct GridSearch {
    side: usize,
    chosen: Vec<GridPoint>,
    best: usize,
    extremal: Vec<Vec<GridPoint>>,
}

impl GridSearch {
    fn creates_triple(&self, p: GridPoint) -> bool {
        let apart = |a: GridPoint, b: GridPoint| a.0 != b.0 && a.1 != b.1;
        let c = &self.chosen;
        (0..c.len()).any(|i| apart(c[i], p) && (i + 1..c.len()).any(|j| apart(c[j], p) && apart(c[i], c[j])))
    }

    fn run(&mut self, next: usize) {
        let total = self.side * self.side;
        if self.chosen.len() + (total - next) < self.best {
            return;
        }
        if next == total {
            let size = self.chosen.len();
            if size > self.best {
                self.best = size;
                self.extremal.clear();
            }
            self.extremal.push(self.chosen.clone());
            return;
        }
        let p = (next / self.side, next % self.side);
        if !self.creates_triple(p) {
            self.chosen.push(p);
            self.run(next + 1);
            self.chosen.pop();
        }
        self.run(next + 1);
    }
}

/// Exhaustive search over point sets of the `(q+1) x (q+1)` grid with no
/// three pairwise non-collinear points. Sets are explored in a fixed order,
/// so the list of extremal sets is deterministic.
pub fn grid_lemma_search(q: u64) -> Result<GridReport> {
    if q >= 5 {
        return Err(Error::BudgetExceeded(format!("grid search over 2^{} subsets", (q + 1) * (q + 1))));
    }
    if q < 2 {
        return Err(Error::NotAPrimePower(q));
    }
    let side = q as usize + 1;
    let mut search = GridSearch { side, chosen: Vec::new(), best: 0, extremal: Vec::new() };
    search.run(0);
    let mut expected: BTreeSet<Vec<GridPoint>> = BTreeSet::new();
    for a in 0..side {
        for b in a + 1..side {
            let mut rows: Vec<GridPoint> = (0..side).flat_map(|j| [(a, j), (b, j)]).collect();
            rows.sort_unstable();
            let mut cols: Vec<GridPoint> = (0..side).flat_map(|i| [(i, a), (i, b)]).collect();
            cols.sort_unstable();
            expected.insert(rows);
            expected.insert(cols);
        }
    }
    let found: BTreeSet<Vec<GridPoint>> = search.extremal.iter().cloned().collect();
    let classification_holds = found == expected && found.len() == search.extremal.len();
    let expected_maximum = 2 * side;
    let pass = search.best == expected_maximum && classification_holds;
    Ok(GridReport { q, maximum: search.best, expected_maximum, extremal_sets: search.extremal, classification_holds, pass })
}

/// Tally for one claim of [`perp_section_census`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub checked: u64,
    pub failures: u64,
}

impl ClaimTally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn holds(&self) -> bool {
        self.checked > 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerpCensus {
    pub q: u64,
    /// Pairwise non-perpendicular triples span a plane whose perp meets the quadric in `q+1` points.
    pub conic_sections: ClaimTally,
    /// A non-perpendicular pair has a perp meeting the quadric in a `(q+1) x (q+1)` grid.
    pub grid_sections: ClaimTally,
    /// A plane meeting the quadric in two lines through `z` has a perp meeting it in two
    /// other lines through `z`, with `4q+1` points in total.
    pub two_line_planes: ClaimTally,
    /// The non-perpendicularity graph on those `4q+1` points is `z` plus two `K_{q,q}`
    /// (two 4-cycles when `q = 2`).
    pub induced_graphs: ClaimTally,
    pub pass: bool,
}

impl PerpCensus {
    pub fn cases(&self) -> Vec<CaseRecord> {
        [
            ("conic-sections", &self.conic_sections),
            ("grid-sections", &self.grid_sections),
            ("two-line-planes", &self.two_line_planes),
            ("induced-graphs", &self.induced_graphs),
        ]
        .into_iter()
        .map(|(claim, t)| {
            CaseRecord::new(
                "perp-census",
                json!({"q": self.q, "claim": claim}),
                format!("{} failures", t.failures),
                format!("0 failures over {} configurations", t.checked),
                t.holds(),
            )
        })
        .collect()
    }
}

/// Whether `set` (2q+1 quadric points containing `z`) is two lines through `z`.
fn is_two_lines_through(model: &QuadricModel, set: &[usize], z: usize) -> bool {
    let q = model.q() as usize;
    if set.len() != 2 * q + 1 || !set.contains(&z) {
        return false;
    }
    let others: Vec<usize> = set.iter().copied().filter(|&x| x != z).collect();
    let Some(first) = model.line_through(z, others[0]) else { return false };
    let Some(&r) = others.iter().find(|x| !first.contains(x)) else { return false };
    let Some(second) = model.line_through(z, r) else { return false };
    let mut union: Vec<usize> = first.iter().chain(&second).copied().collect();
    union.sort_unstable();
    union.dedup();
    let totally_singular = |l: &[usize]| l.iter().all(|&a| l.iter().all(|&b| model.perpendicular(a, b)));
    first.len() == q + 1 && second.len() == q + 1 && totally_singular(&first) && totally_singular(&second) && union == set
}

/// Whether `set` of `(q+1)^2` points is a grid: its lines on the quadric
/// fall into two parallel classes of `q+1` disjoint lines each, and lines
/// from different classes meet in exactly one point.
fn is_grid(model: &QuadricModel, set: &[usize]) -> bool {
    let q = model.q() as usize;
    if set.len() != (q + 1) * (q + 1) {
        return false;
    }
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if model.perpendicular(a, b) {
                match model.line_through(a, b) {
                    Some(l) if l.iter().all(|x| inside.contains(x)) => {
                        lines.insert(l);
                    }
                    _ => return false,
                }
            }
        }
    }
    let lines: Vec<Vec<usize>> = lines.into_iter().collect();
    if lines.len() != 2 * (q + 1) || lines.iter().any(|l| l.len() != q + 1) {
        return false;
    }
    let meet = |a: &[usize], b: &[usize]| a.iter().filter(|x| b.contains(x)).count();
    let (class_a, class_b): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = lines.iter().partition(|l| meet(l, &lines[0]) != 1);
    class_a.len() == q + 1
        && class_b.len() == q + 1
        && class_a.iter().all(|a| class_a.iter().all(|b| a == b || meet(a, b) == 0))
        && class_b.iter().all(|a| class_b.iter().all(|b| a == b || meet(a, b) == 0))
        && class_a.iter().all(|a| class_b.iter().all(|b| meet(a, b) == 1))
}

/// Whether `g` is an isolated vertex `z` plus two components that are `K_{q,q}`.
fn is_point_plus_two_bicliques(g: &Graph, z: usize, q: usize) -> bool {
    if g.degree(z) != 0 {
        return false;
    }
    let mut removed = BitSet::new(g.vertex_count());
    removed.insert(z);
    let comps = g.components_without(&removed);
    comps.len() == 2
        && comps.iter().all(|c| {
            c.len() == 2 * q
                && c.iter().all(|&v| g.degree(v) == q)
                // non-adjacency inside a component is an equivalence with two classes of size q
                && c.iter().all(|&v| c.iter().filter(|&&w| w != v && !g.has_edge(v, w)).count() == q - 1)
        })
}

/// Exhaustive check of the perpendicular sections used in the case analysis
/// for `K_q(4,2,1)`.
pub fn perp_section_census(q: u64) -> Result<PerpCensus> {
    if q > 3 {
        return Err(Error::BudgetExceeded(format!("perp-section census needs q <= 3, got {q}")));
    }
    let model = QuadricModel::new(q)?;
    let n = model.points.len();
    let qs = q as usize;

    let conic_sections = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut tally = ClaimTally::default();
            for b in a + 1..n {
                if model.perpendicular(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if !model.perpendicular(a, c) && !model.perpendicular(b, c) {
                        tally.record(model.perp_section(&[a, b, c]).len() == qs + 1);
                    }
                }
            }
            tally
        })
        .reduce(ClaimTally::default, |x, y| ClaimTally { checked: x.checked + y.checked, failures: x.failures + y.failures });

    let mut grid_sections = ClaimTally::default();
    for a in 0..n {
        for b in a + 1..n {
            if !model.perpendicular(a, b) {
                grid_sections.record(is_grid(&model, &model.perp_section(&[a, b])));
            }
        }
    }

    // planes <z, a, b> with a, b on different lines of the quadric through z
    let mut planes: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut two_line_planes = ClaimTally::default();
    let mut induced_graphs = ClaimTally::default();
    let graph = quadric_graph(&model);
    for z in 0..n {
        let cone: Vec<usize> = (0..n).filter(|&x| x != z && model.perpendicular(z, x)).collect();
        for (i, &a) in cone.iter().enumerate() {
            for &b in &cone[i + 1..] {
                if model.perpendicular(a, b) {
                    continue;
                }
                let section = model.span_section(&[z, a, b]);
                if !planes.insert(section.clone()) {
                    continue;
                }
                let dual = model.perp_section(&[z, a, b]);
                let mut union: Vec<usize> = section.iter().chain(&dual).copied().collect();
                union.sort_unstable();
                union.dedup();
                let ok = is_two_lines_through(&model, &section, z)
                    && is_two_lines_through(&model, &dual, z)
                    && union.len() == 4 * qs + 1;
                two_line_planes.record(ok);
                if ok {
                    let zi = union.iter().position(|&x| x == z).expect("z is in both sections");
                    induced_graphs.record(is_point_plus_two_bicliques(&graph.induced(&union), zi, qs));
                }
            }
        }
    }

    let pass = conic_sections.holds() && grid_sections.holds() && two_line_planes.holds() && induced_graphs.holds();
    Ok(PerpCensus { q, conic_sections, grid_sections, two_line_planes, induced_graphs, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::gauss_binom;

    fn f(q: u64) -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(q).unwrap())
    }

    #[test]
    fn point_counts_match_line_counts() {
        for q in [2u64, 3, 4, 5] {
            let m = QuadricModel::new(q).unwrap();
            assert_eq!(m.points().len() as u64, (q * q + 1) * (q * q + q + 1));
            assert_eq!(num_bigint::BigUint::from(m.points().len()), gauss_binom(4, 2, q).unwrap());
        }
    }

    #[test]
    fn klein_examples() {
        let f2 = f(2);
        let p = klein_map(&Subspace::coordinate(&f2, 4, &[0, 1])).unwrap();
        assert_eq!(p.coords().map(|c| c.rep()), [1, 0, 0, 0, 0, 0]);
        let p = klein_map(&Subspace::coordinate(&f2, 4, &[2, 3])).unwrap();
        assert_eq!(p.coords().map(|c| c.rep()), [0, 1, 0, 0, 0, 0]);
        assert!(form(&f2, p.coords()).is_zero());
        assert!(matches!(klein_map(&Subspace::coordinate(&f2, 4, &[0])), Err(Error::NotALine(_))));
        assert!(matches!(klein_map(&Subspace::coordinate(&f2, 5, &[0, 1])), Err(Error::NotALine(_))));
    }

    #[test]
    fn meeting_lines_map_to_perpendicular_points() {
        for q in [2u64, 3] {
            let field = f(q);
            let lines = crate::subspace::enumerate_k_subspaces(4, 2, &field).unwrap();
            let images: Vec<ProjPoint> = lines.iter().map(|l| klein_map(l).unwrap()).collect();
            for i in 0..lines.len() {
                assert!(form(&field, images[i].coords()).is_zero());
                for j in i + 1..lines.len() {
                    let meet = lines[i].intersect_dim(&lines[j]).unwrap() > 0;
                    assert_eq!(meet, bilinear(&field, images[i].coords(), images[j].coords()).is_zero());
                }
            }
        }
    }

    #[test]
    fn quadric_graph_shape() {
        let g = build_quadric_graph(2).unwrap();
        assert_eq!(g.vertex_count(), 35);
        assert_eq!(g.regular_degree(), Some(16));
        let g = build_quadric_graph(3).unwrap();
        assert_eq!(g.vertex_count(), 130);
        assert_eq!(g.regular_degree(), Some(81));
        assert!(matches!(build_quadric_graph(7), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn klein_isomorphism_small() {
        let r = verify_klein_isomorphism(2).unwrap();
        assert!(r.pass);
        assert_eq!((r.lines, r.points, r.pairs_checked), (35, 35, 595));
        assert!(verify_klein_isomorphism(3).unwrap().pass);
        assert!(matches!(verify_klein_isomorphism(5), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn grid_examples() {
        let r = grid_lemma_search(2).unwrap();
        assert_eq!(r.maximum, 6);
        assert_eq!(r.extremal_sets.len(), 6);
        assert!(r.pass);
        let r = grid_lemma_search(3).unwrap();
        assert_eq!(r.maximum, 8);
        assert!(r.pass);
        assert!(matches!(grid_lemma_search(5), Err(Error::BudgetExceeded(_))));
        // one line: valid, but a second line can be added
        let row: Vec<GridPoint> = (0..3).map(|j| (0, j)).collect();
        assert!(!has_non_collinear_triple(&row));
        assert!(row.len() < 6);
        assert!(has_non_collinear_triple(&[(0, 0), (1, 1), (2, 2)]));
    }

    #[test]
    fn census_q2() {
        let c = perp_section_census(2).unwrap();
        assert!(c.pass, "{c:?}");
        assert!(c.induced_graphs.checked > 0);
    }
}
