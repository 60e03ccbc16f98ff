use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, VertexId};

pub type Color = usize;

/// A partial map from vertices to colors in `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    palette: usize,
    colors: BTreeMap<VertexId, Color>,
}

impl Coloring {
    pub fn new(palette: usize) -> Self {
        Self {
            palette,
            colors: BTreeMap::new(),
        }
    }

    pub fn from_map(palette: usize, colors: BTreeMap<VertexId, Color>) -> Self {
        assert!(
            colors.values().all(|&c| c < palette),
            "color outside palette of size {palette}"
        );
        Self { palette, colors }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        assert!(c < self.palette, "color {c} outside palette of size {}", self.palette);
        self.colors.insert(v, c);
    }

    pub fn unset(&mut self, v: VertexId) -> Option<Color> {
        self.colors.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    pub fn as_map(&self) -> &BTreeMap<VertexId, Color> {
        &self.colors
    }

    /// True iff every vertex of `g` has a color.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.colors.contains_key(&v))
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// Colors not used by any colored vertex within distance 2 of `v` in `g`.
    pub fn admissible(&self, g: &Graph, v: VertexId) -> Vec<Color> {
        let forbidden = self.forbidden(g, v);
        (0..self.palette).filter(|c| !forbidden.contains(c)).collect()
    }

    /// Distinct colors on the colored distance-2 neighbors of `v`.
    pub fn forbidden(&self, g: &Graph, v: VertexId) -> BTreeSet<Color> {
        g.distance2_neighbors(v)
            .unwrap_or_default()
            .into_iter()
            .filter_map(|w| self.get(w))
            .collect()
    }

    /// Restriction to the vertices of `g`.
    pub fn restricted_to(&self, g: &Graph) -> Coloring {
        Coloring {
            palette: self.palette,
            colors: self
                .colors
                .iter()
                .filter(|(v, _)| g.contains(**v))
                .map(|(&v, &c)| (v, c))
                .collect(),
        }
    }

    /// Copies every assignment of `other` into `self`, overwriting.
    pub fn extend_from(&mut self, other: &Coloring) {
        for (v, c) in other.iter() {
            self.set(v, c);
        }
    }
}
