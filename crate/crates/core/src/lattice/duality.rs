//! The supplementary cone `σ' = cone(-A_0, u_+)`, the edge map `I` from
//! edges of `P(σ)` to lattice points of `σ'`, and the dual cone `σ̌`.
//!
//! All points in this file are in normal-form coordinates of `σ`.

use num_bigint::BigInt;

use super::{cone_normal_form, polygon, primitive, ConeNf, ConePolygon, LatticeVector, UnimodularMap};
use crate::error::Result;

/// Type `p/(p-q)` of the supplementary cone.
pub fn supplementary(c: &ConeNf) -> Result<ConeNf> {
    c.require_singular()?;
    ConeNf::new(c.p().clone(), c.p() - c.q())
}

/// Maps normal-form coordinates of `σ'` to those of `σ`: the basis of `σ'` is
/// `A_0' = -A_0`, `A_1' = A_1 - A_0`.
pub fn supplementary_frame() -> UnimodularMap {
    UnimodularMap::from_i64(-1, -1, 0, 1).unwrap()
}

/// An oriented edge of `P(σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRef {
    /// The half-line ending at `A_0`, directed towards it.
    HalfLineMinus,
    /// The compact edge between polygon points `from` and `to`.
    Compact { from: usize, to: usize },
    /// The half-line starting at `A_{r+1}`.
    HalfLinePlus,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualityPair {
    pub edge: EdgeRef,
    /// Integral length of a compact edge; `None` for the half-lines.
    pub length: Option<BigInt>,
    pub image: LatticeVector,
    /// Position of the image among the points of `P(σ')`, if it lies there.
    pub image_index: Option<usize>,
    pub image_is_vertex: bool,
    /// First or last compact edge, whose image may fail to be a vertex.
    pub exceptional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualityReport {
    pub cone: ConeNf,
    pub supplementary: ConeNf,
    /// `P(σ')` in normal-form coordinates of `σ`.
    pub supplementary_points: Vec<LatticeVector>,
    pub supplementary_vertices: Vec<usize>,
    pub pairs: Vec<DualityPair>,
    /// Images appear along `P(σ')` in the order of the edges of `P(σ)`.
    pub respects_orientation: bool,
    /// Every vertex of `P(σ')` is an image.
    pub vertices_in_image: bool,
    /// Every image is an integral point of `P(σ')`.
    pub image_in_polygon: bool,
    /// Each exceptional image is a vertex iff its edge is long enough, and
    /// every other image is a vertex.
    pub exceptional_rule: bool,
    /// The vertices of `P(σ')` are exactly the images minus the exceptional
    /// non-vertices.
    pub vertex_sets_equal: bool,
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.respects_orientation
            && self.vertices_in_image
            && self.image_in_polygon
            && self.exceptional_rule
            && self.vertex_sets_equal
    }
}

/// Minimal length for the image of an end edge to be a vertex of `P(σ')`.
///
/// With at least one interior vertex, the end edge `[A_0 V_1]` of length `l`
/// becomes a point of weight `l + 1` on `P(σ')`, a vertex iff `l >= 2`. With
/// none, the single edge `[A_0 A_+]` is both end edges at once and its image has
/// weight `l`, a vertex iff `l >= 3`.
fn vertex_threshold(interior_vertices: usize) -> u32 {
    if interior_vertices == 0 {
        3
    } else {
        2
    }
}

pub fn duality_map(c: &ConeNf) -> Result<DualityReport> {
    let sigma = polygon(c)?;
    let supp = supplementary(c)?;
    let sigma_nf = sigma.nf_points();
    let to_sigma = supplementary_frame();
    let prime: ConePolygon = polygon(&supp)?;
    let prime_points: Vec<LatticeVector> = prime.nf_points().iter().map(|a| to_sigma.apply(a)).collect();
    let prime_vertices = prime.vertex_indices.clone();

    let vi = &sigma.vertex_indices;
    let compact = vi.len() - 1;
    let threshold = BigInt::from(vertex_threshold(vi.len() - 2));

    let locate = |image: &LatticeVector| prime_points.iter().position(|a| a == image);
    let is_vertex = |idx: Option<usize>| idx.is_some_and(|i| prime_vertices.contains(&i));

    let mut pairs = Vec::with_capacity(compact + 2);
    let mut push = |edge: EdgeRef, length: Option<BigInt>, image: LatticeVector, exceptional: bool| {
        let image_index = locate(&image);
        pairs.push(DualityPair {
            edge,
            length,
            image_is_vertex: is_vertex(image_index),
            image,
            image_index,
            exceptional,
        });
    };

    push(EdgeRef::HalfLineMinus, None, -&sigma_nf[0], false);
    for (k, w) in vi.windows(2).enumerate() {
        let d = &sigma_nf[w[1]] - &sigma_nf[w[0]];
        let length = d.gcd();
        let image = primitive(&d)?;
        let exceptional = k == 0 || k + 1 == compact;
        push(EdgeRef::Compact { from: w[0], to: w[1] }, Some(length), image, exceptional);
    }
    push(EdgeRef::HalfLinePlus, None, sigma_nf.last().unwrap().clone(), false);

    let respects_orientation = pairs
        .windows(2)
        .all(|w| matches!((w[0].image_index, w[1].image_index), (Some(a), Some(b)) if a < b));
    let image_in_polygon = pairs.iter().all(|pr| pr.image_index.is_some());
    let vertices_in_image = prime_vertices
        .iter()
        .all(|v| pairs.iter().any(|pr| pr.image_index == Some(*v)));
    let exceptional_rule = pairs.iter().all(|pr| match (&pr.length, pr.exceptional) {
        (Some(l), true) => pr.image_is_vertex == (*l >= threshold),
        _ => pr.image_is_vertex,
    });
    let mut predicted: Vec<usize> = pairs
        .iter()
        .filter(|pr| match (&pr.length, pr.exceptional) {
            (Some(l), true) => *l >= threshold,
            _ => true,
        })
        .filter_map(|pr| pr.image_index)
        .collect();
    predicted.sort_unstable();
    predicted.dedup();
    let vertex_sets_equal = predicted == prime_vertices;

    Ok(DualityReport {
        cone: c.clone(),
        supplementary: supp,
        supplementary_points: prime_points,
        supplementary_vertices: prime_vertices,
        pairs,
        respects_orientation,
        vertices_in_image,
        image_in_polygon,
        exceptional_rule,
        vertex_sets_equal,
    })
}

/// Normal form of the dual cone `σ̌`, computed from the inward normals of the
/// edges of `σ`, ordered so that the normal of `l_-` comes first.
pub fn dual_cone(c: &ConeNf) -> Result<ConeNf> {
    c.require_singular()?;
    // In normal-form coordinates σ = cone((1,0), (-q,p)); a linear form
    // (a,b) ↦ a·x + b·y is nonnegative on σ iff it is on both rays.
    let normal_minus = LatticeVector::new(0, 1);
    let normal_plus = LatticeVector::new(c.p().clone(), c.q().clone());
    let (nf, _) = cone_normal_form(&normal_minus, &normal_plus)?;
    Ok(nf)
}
