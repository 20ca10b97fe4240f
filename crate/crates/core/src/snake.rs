//! Weighted snake graphs and their perfect matchings.
//!
//! The snake graph of a rational `t = p/r` is a chain of unit boxes, each
//! glued to the right or on top of its predecessor, tracing the staircase
//! under the slope-`t` diagonal. Boundary edges carry weights `q^{±1}`:
//! western verticals alternate `q⁻¹, q, …` bottom to top, southern
//! horizontals alternate `q, q⁻¹, …` left to right, everything else weighs 1.
//! The weight of a perfect matching is the product of its edge weights, and
//! the generating polynomial of all matchings equals `m_q^t`.
//!
//! Graphs are built from the `{A, B}` recoding of the Christoffel word by a
//! piece grammar (each letter contributes a fixed block of boxes with fixed
//! weights), which pins down the weights unambiguously at piece junctions;
//! the global alternation rule is kept as a cross-check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::Error;
use crate::farey::{christoffel_word, recode_ab, AbLetter, FareyRational, Letter};
use crate::laurent::LaurentPoly;

/// Largest classical matching count the brute-force enumerator accepts
/// unless overridden.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

/// Direction of a box relative to its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Right,
    Up,
}

/// A unit box at grid position `(x, y)` (south-west corner). The first box
/// of a graph has no predecessor and `step == None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnakeBox {
    pub x: i64,
    pub y: i64,
    pub step: Option<Step>,
}

pub type Vertex = (i64, i64);

/// An edge identified by its endpoints in lexicographic order.
pub type EdgeId = (Vertex, Vertex);

fn edge(a: Vertex, b: Vertex) -> EdgeId {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A snake graph with edge weights expressed as exponents of `q`
/// (−1, 0, or +1). Every edge of the graph appears in `edge_weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeGraph {
    pub boxes: Vec<SnakeBox>,
    pub edge_weights: BTreeMap<EdgeId, i8>,
    pub label: FareyRational,
}

/// A perfect matching: a set of edges covering every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: BTreeSet<EdgeId>,
}

impl SnakeGraph {
    fn south(b: &SnakeBox) -> EdgeId {
        edge((b.x, b.y), (b.x + 1, b.y))
    }

    fn west(b: &SnakeBox) -> EdgeId {
        edge((b.x, b.y), (b.x, b.y + 1))
    }

    /// All edges (the four sides of every box, shared sides deduplicated).
    fn all_edges(boxes: &[SnakeBox]) -> BTreeSet<EdgeId> {
        let mut edges = BTreeSet::new();
        for b in boxes {
            edges.insert(edge((b.x, b.y), (b.x + 1, b.y)));
            edges.insert(edge((b.x, b.y + 1), (b.x + 1, b.y + 1)));
            edges.insert(edge((b.x, b.y), (b.x, b.y + 1)));
            edges.insert(edge((b.x + 1, b.y), (b.x + 1, b.y + 1)));
        }
        edges
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.edge_weights
            .keys()
            .flat_map(|(a, b)| [*a, *b])
            .collect()
    }

    pub fn weight_exponent(&self, e: &EdgeId) -> i8 {
        self.edge_weights.get(e).copied().unwrap_or(0)
    }

    fn has_box_at(&self, x: i64, y: i64) -> bool {
        self.boxes.iter().any(|b| b.x == x && b.y == y)
    }

    /// Western-boundary vertical edges ordered bottom to top.
    pub fn western_boundary(&self) -> Vec<EdgeId> {
        let mut out: Vec<(i64, EdgeId)> = self
            .boxes
            .iter()
            .filter(|b| !self.has_box_at(b.x - 1, b.y))
            .map(|b| (b.y, Self::west(b)))
            .collect();
        out.sort();
        out.into_iter().map(|(_, e)| e).collect()
    }

    /// Southern-boundary horizontal edges ordered left to right.
    pub fn southern_boundary(&self) -> Vec<EdgeId> {
        let mut out: Vec<(i64, EdgeId)> = self
            .boxes
            .iter()
            .filter(|b| !self.has_box_at(b.x, b.y - 1))
            .map(|b| (b.x, Self::south(b)))
            .collect();
        out.sort();
        out.into_iter().map(|(_, e)| e).collect()
    }

    /// Cross-checks the piece-built weights against the global boundary
    /// rule: western verticals alternate starting at `q⁻¹`, southern
    /// horizontals alternate starting at `q`, and no other edge is weighted.
    pub fn boundary_weights_consistent(&self) -> bool {
        let west = self.western_boundary();
        let south = self.southern_boundary();
        let west_ok = west
            .iter()
            .enumerate()
            .all(|(i, e)| self.weight_exponent(e) == if i % 2 == 0 { -1 } else { 1 });
        let south_ok = south
            .iter()
            .enumerate()
            .all(|(i, e)| self.weight_exponent(e) == if i % 2 == 0 { 1 } else { -1 });
        let boundary: BTreeSet<&EdgeId> = west.iter().chain(south.iter()).collect();
        let others_unit = self
            .edge_weights
            .iter()
            .all(|(e, w)| *w == 0 || boundary.contains(e));
        west_ok && south_ok && others_unit
    }

    /// Reads the lower boundary as a Christoffel word: the first horizontal
    /// unit is a half-step, as is the final vertical unit; every other
    /// letter spans two units.
    pub fn boundary_word(&self) -> Vec<Letter> {
        // walk the lower-right boundary from (0,0), east along southern
        // edges, north along eastern edges
        let south: BTreeSet<EdgeId> = self.southern_boundary().into_iter().collect();
        let east: BTreeSet<EdgeId> = self
            .boxes
            .iter()
            .filter(|b| !self.has_box_at(b.x + 1, b.y))
            .map(|b| edge((b.x + 1, b.y), (b.x + 1, b.y + 1)))
            .collect();
        let mut runs: Vec<(Letter, i64)> = Vec::new();
        let (mut x, mut y) = (0i64, 0i64);
        loop {
            let mut h = 0;
            while south.contains(&edge((x, y), (x + 1, y))) {
                x += 1;
                h += 1;
            }
            if h > 0 {
                runs.push((Letter::X, h));
            }
            let mut v = 0;
            while east.contains(&edge((x, y), (x, y + 1))) {
                y += 1;
                v += 1;
            }
            if v > 0 {
                runs.push((Letter::Y, v));
            }
            if h == 0 && v == 0 {
                break;
            }
        }
        let mut word = Vec::new();
        let last = runs.len().saturating_sub(1);
        for (i, (letter, len)) in runs.iter().enumerate() {
            // half-steps: first X run starts with 1 unit, last Y run ends with 1
            let count = match (letter, i) {
                (Letter::X, 0) => (len + 1) / 2,
                (Letter::Y, i_) if i_ == last => (len + 1) / 2,
                _ => len / 2,
            };
            for _ in 0..count {
                word.push(*letter);
            }
        }
        word
    }
}

/// Builds the weighted snake graph of `t` from the piece grammar on
/// `w̃_t = A·w₁⋯w_s·B`:
///
/// * initial `A`: two boxes rightward, south weights `(q, q⁻¹)`, and the
///   west edge of the first box weighted `q⁻¹`;
/// * `A`: two boxes rightward, south weights `(q, q⁻¹)`;
/// * `B`: four boxes stepped right, up, up, right with weights
///   south₁ = `q`, west₂ = `q`, west₃ = `q⁻¹`, south₄ = `q⁻¹`;
/// * final `B`: one box rightward, south weight `q`.
///
/// `t = 1/1` (word `B` alone) degenerates to a single box with west `q⁻¹`
/// and south `q`; `t = 0/1` has no graph and the count is 1 by convention.
pub fn build_snake(t: FareyRational) -> Result<SnakeGraph, Error> {
    if t == FareyRational::zero() {
        return Err(Error::UnsupportedLabel(t.num(), t.den()));
    }
    let mut boxes: Vec<SnakeBox> = Vec::new();
    let mut weights: BTreeMap<EdgeId, i8> = BTreeMap::new();

    if t == FareyRational::one() {
        let b = SnakeBox { x: 0, y: 0, step: None };
        weights.insert(SnakeGraph::west(&b), -1);
        weights.insert(SnakeGraph::south(&b), 1);
        boxes.push(b);
    } else {
        let word = recode_ab(&christoffel_word(t)).expect("valid word");
        debug_assert_eq!(word.first(), Some(&AbLetter::A));
        debug_assert_eq!(word.last(), Some(&AbLetter::B));

        // initial A
        let b0 = SnakeBox { x: 0, y: 0, step: None };
        let b1 = SnakeBox { x: 1, y: 0, step: Some(Step::Right) };
        weights.insert(SnakeGraph::west(&b0), -1);
        weights.insert(SnakeGraph::south(&b0), 1);
        weights.insert(SnakeGraph::south(&b1), -1);
        boxes.push(b0);
        boxes.push(b1);
        let (mut x, mut y) = (1i64, 0i64);

        for letter in &word[1..word.len() - 1] {
            match letter {
                AbLetter::A => {
                    let c0 = SnakeBox { x: x + 1, y, step: Some(Step::Right) };
                    let c1 = SnakeBox { x: x + 2, y, step: Some(Step::Right) };
                    weights.insert(SnakeGraph::south(&c0), 1);
                    weights.insert(SnakeGraph::south(&c1), -1);
                    boxes.push(c0);
                    boxes.push(c1);
                    x += 2;
                }
                AbLetter::B => {
                    let c0 = SnakeBox { x: x + 1, y, step: Some(Step::Right) };
                    let c1 = SnakeBox { x: x + 1, y: y + 1, step: Some(Step::Up) };
                    let c2 = SnakeBox { x: x + 1, y: y + 2, step: Some(Step::Up) };
                    let c3 = SnakeBox { x: x + 2, y: y + 2, step: Some(Step::Right) };
                    weights.insert(SnakeGraph::south(&c0), 1);
                    weights.insert(SnakeGraph::west(&c1), 1);
                    weights.insert(SnakeGraph::west(&c2), -1);
                    weights.insert(SnakeGraph::south(&c3), -1);
                    boxes.extend([c0, c1, c2, c3]);
                    x += 2;
                    y += 2;
                }
            }
        }

        // final B
        let last = SnakeBox { x: x + 1, y, step: Some(Step::Right) };
        weights.insert(SnakeGraph::south(&last), 1);
        boxes.push(last);
    }

    // fill in the unit edges
    for e in SnakeGraph::all_edges(&boxes) {
        weights.entry(e).or_insert(0);
    }
    Ok(SnakeGraph {
        boxes,
        edge_weights: weights,
        label: t,
    })
}

/// The modified graph whose weighted count is `m̃_q^t`: [`build_snake`] with
/// the weight of the first horizontal edge removed.
pub fn build_tilde_snake(t: FareyRational) -> Result<SnakeGraph, Error> {
    let mut g = build_snake(t)?;
    let first_south = edge((0, 0), (1, 0));
    g.edge_weights.insert(first_south, 0);
    Ok(g)
}

/// The number of perfect matchings, via the two-term chain recurrence over
/// boxes (weights play no role in the count). Equals the classical `m^t`.
pub fn matching_count(g: &SnakeGraph) -> BigUint {
    // mu = matchings of the prefix, nu = matchings of the prefix minus the
    // endpoints of the junction edge toward the next box
    let mut mu_prev = BigUint::one();
    let mut mu = BigUint::from(2u32);
    let mut nu = BigUint::one();
    for i in 1..g.boxes.len() {
        let straight = g.boxes[i].step == g.boxes[i - 1].step || g.boxes[i - 1].step.is_none();
        if straight {
            nu = mu_prev.clone();
        }
        let next = &mu + &nu;
        mu_prev = std::mem::replace(&mut mu, next);
    }
    mu
}

fn check_bound(g: &SnakeGraph, bound: u64) -> Result<(), Error> {
    let count = matching_count(g);
    if count > BigUint::from(bound) {
        return Err(Error::OracleBoundExceeded {
            count: count.to_string(),
            bound,
        });
    }
    Ok(())
}

/// Walks every perfect matching once, calling `visit` with the chosen edges.
/// Deterministic: vertices are processed in lexicographic order and edges in
/// `EdgeId` order.
fn for_each_matching(g: &SnakeGraph, mut visit: impl FnMut(&[usize], &[EdgeId])) {
    let edges: Vec<EdgeId> = g.edge_weights.keys().copied().collect();
    let verts: Vec<Vertex> = g.vertices().into_iter().collect();
    let index: BTreeMap<Vertex, usize> = verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for (ei, (a, b)) in edges.iter().enumerate() {
        incident[index[a]].push(ei);
        incident[index[b]].push(ei);
    }

    struct Rec<'a, F: FnMut(&[usize], &[EdgeId])> {
        edges: &'a [EdgeId],
        index: &'a BTreeMap<Vertex, usize>,
        incident: &'a [Vec<usize>],
        covered: Vec<bool>,
        chosen: Vec<usize>,
        visit: F,
    }
    impl<F: FnMut(&[usize], &[EdgeId])> Rec<'_, F> {
        fn go(&mut self, from: usize) {
            let mut v = from;
            while v < self.covered.len() && self.covered[v] {
                v += 1;
            }
            if v == self.covered.len() {
                (self.visit)(&self.chosen, self.edges);
                return;
            }
            for &ei in &self.incident[v] {
                let (a, b) = self.edges[ei];
                let other = if self.index[&a] == v {
                    self.index[&b]
                } else {
                    self.index[&a]
                };
                if !self.covered[other] {
                    self.covered[v] = true;
                    self.covered[other] = true;
                    self.chosen.push(ei);
                    self.go(v + 1);
                    self.chosen.pop();
                    self.covered[v] = false;
                    self.covered[other] = false;
                }
            }
        }
    }

    let mut rec = Rec {
        edges: &edges,
        index: &index,
        incident: &incident,
        covered: vec![false; verts.len()],
        chosen: Vec::new(),
        visit: &mut visit,
    };
    rec.go(0);
}

/// Enumerates all perfect matchings. Errors with
/// [`Error::OracleBoundExceeded`] when the classical count exceeds `bound`.
pub fn enumerate_matchings(g: &SnakeGraph, bound: u64) -> Result<Vec<Matching>, Error> {
    check_bound(g, bound)?;
    let mut out = Vec::new();
    for_each_matching(g, |chosen, edges| {
        out.push(Matching {
            edges: chosen.iter().map(|&ei| edges[ei]).collect(),
        });
    });
    Ok(out)
}

/// The weighted matching count `Σ_m q^{Σ weights}` by exhaustive
/// enumeration — the independent oracle for the transfer and trace routes.
pub fn weighted_match_count_bruteforce(g: &SnakeGraph, bound: u64) -> Result<LaurentPoly, Error> {
    check_bound(g, bound)?;
    let mut tally: BTreeMap<i64, BigInt> = BTreeMap::new();
    for_each_matching(g, |chosen, edges| {
        let exp: i64 = chosen
            .iter()
            .map(|&ei| g.weight_exponent(&edges[ei]) as i64)
            .sum();
        *tally.entry(exp).or_default() += 1;
    });
    Ok(LaurentPoly::from_terms(tally))
}

/// The weighted matching count by the closed transfer formula
/// `μ_n = (q 1)·M_s⋯M_1·(μ₁ μ₂)ᵀ`, with `M_k = A(1)_q` or `B(1)_q` per the
/// middle letters of `w̃_t = A·w₁⋯w_s·B` and seeds `μ₁ = q + q⁻¹`,
/// `μ₂ = q + q⁻¹ + q⁻²`. The formula does not cover `t = 1/1` (no leading
/// `A` piece); that label short-circuits to `q + q⁻¹`.
pub fn weighted_match_count_transfer(t: FareyRational) -> Result<LaurentPoly, Error> {
    if t == FareyRational::zero() {
        return Err(Error::UnsupportedLabel(t.num(), t.den()));
    }
    if t == FareyRational::one() {
        return Ok(LaurentPoly::from_terms([(1, 1), (-1, 1)]));
    }
    let word = recode_ab(&christoffel_word(t)).expect("valid word");
    let a = crate::cohn::cohn_a(1);
    let b = crate::cohn::cohn_b(1);
    let mut v1 = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    let mut v2 = LaurentPoly::from_terms([(1, 1), (-1, 1), (-2, 1)]);
    for letter in &word[1..word.len() - 1] {
        let m = match letter {
            AbLetter::A => &a,
            AbLetter::B => &b,
        };
        let n1 = &(&m.e11 * &v1) + &(&m.e12 * &v2);
        let n2 = &(&m.e21 * &v1) + &(&m.e22 * &v2);
        v1 = n1;
        v2 = n2;
    }
    Ok(&(&LaurentPoly::q_power(1) * &v1) + &v2)
}

/// The per-box weighted counts `μ₁ … μ_n` of the partial graphs, by the
/// piece attachment recurrences (A-piece: `β₁ = α₂ + qα₁`,
/// `β₂ = β₁ + q⁻¹α₂`; B-piece: `γ₁ = α₂ + qα₁`, `γ₂ = γ₁ + q²α₁`,
/// `β₁ = γ₂ + q⁻¹γ₁`, `β₂ = β₁ + q⁻²γ₁`; final box: `μ_n = qα₁ + α₂`).
/// Applies to [`build_snake`] output; at `q = 1` the sequence reproduces the
/// classical box labels.
pub fn mu_labels(g: &SnakeGraph) -> Vec<LaurentPoly> {
    let t = g.label;
    if t == FareyRational::one() {
        return vec![LaurentPoly::from_terms([(1, 1), (-1, 1)])];
    }
    let word = recode_ab(&christoffel_word(t)).expect("valid word");
    let q = LaurentPoly::q_power;
    let mut mus = vec![
        LaurentPoly::from_terms([(1, 1), (-1, 1)]),
        LaurentPoly::from_terms([(1, 1), (-1, 1), (-2, 1)]),
    ];
    for letter in &word[1..word.len() - 1] {
        let a1 = mus[mus.len() - 2].clone();
        let a2 = mus[mus.len() - 1].clone();
        match letter {
            AbLetter::A => {
                let b1 = &a2 + &(&q(1) * &a1);
                let b2 = &b1 + &(&q(-1) * &a2);
                mus.push(b1);
                mus.push(b2);
            }
            AbLetter::B => {
                let g1 = &a2 + &(&q(1) * &a1);
                let g2 = &g1 + &(&q(2) * &a1);
                let b1 = &g2 + &(&q(-1) * &g1);
                let b2 = &b1 + &(&q(-2) * &g1);
                mus.extend([g1, g2, b1, b2]);
            }
        }
    }
    let a1 = mus[mus.len() - 2].clone();
    let a2 = mus[mus.len() - 1].clone();
    mus.push(&(&q(1) * &a1) + &a2);
    mus
}

/// DOT text with grid-pinned node positions; nonunit edges are labeled
/// `q` or `1/q`. Output is deterministic for a fixed graph.
pub fn export_dot(g: &SnakeGraph) -> String {
    let mut out = String::from("graph snake {\n  node [shape=point];\n");
    for (x, y) in g.vertices() {
        out.push_str(&format!("  \"{x},{y}\" [pos=\"{x},{y}!\"];\n"));
    }
    for (((ax, ay), (bx, by)), w) in &g.edge_weights {
        let label = match w {
            1 => " [label=\"q\"]",
            -1 => " [label=\"1/q\"]",
            _ => "",
        };
        out.push_str(&format!("  \"{ax},{ay}\" -- \"{bx},{by}\"{label};\n"));
    }
    out.push_str("}\n");
    out
}
