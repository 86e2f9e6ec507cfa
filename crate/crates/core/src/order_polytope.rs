//! Order polytopes: vertices are filters, facets come from minimal
//! elements, covers and maximal elements.

use crate::polytope::CombPolytope;
use crate::poset::{Filter, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetLabel {
    /// `0 <= t_i` for minimal `i`.
    Min(usize),
    /// `t_i <= t_j` for a cover `i ⋖ j`.
    Cover(usize, usize),
    /// `t_i <= 1` for maximal `i`.
    Max(usize),
}

impl FacetLabel {
    pub fn render(&self, p: &Poset) -> String {
        match *self {
            FacetLabel::Min(i) => format!("Min({})", p.label(i)),
            FacetLabel::Cover(i, j) => format!("Cover({},{})", p.label(i), p.label(j)),
            FacetLabel::Max(i) => format!("Max({})", p.label(i)),
        }
    }

    /// Support entry at the vertex of `filter`: 1 iff the vertex is off the facet.
    pub fn slack(&self, filter: &Filter) -> u8 {
        let off = match *self {
            FacetLabel::Min(i) => filter.contains(i),
            FacetLabel::Cover(i, j) => !filter.contains(i) && filter.contains(j),
            FacetLabel::Max(i) => !filter.contains(i),
        };
        u8::from(off)
    }
}

/// All Min labels in element order, then covers lexicographically, then Max.
pub fn facet_labels(p: &Poset) -> Vec<FacetLabel> {
    let mut out: Vec<FacetLabel> = p.minimal_elements().into_iter().map(FacetLabel::Min).collect();
    out.extend(p.covers().iter().map(|&(a, b)| FacetLabel::Cover(a, b)));
    out.extend(p.maximal_elements().into_iter().map(FacetLabel::Max));
    out
}

pub fn order_polytope(p: &Poset) -> CombPolytope {
    if p.is_empty() {
        return CombPolytope::new(0, vec!["{}".into()], vec!["∅".into()], vec![vec![1]])
            .expect("point");
    }
    let filters = p.filters();
    let labels = facet_labels(p);
    let support = labels
        .iter()
        .map(|f| filters.iter().map(|j| f.slack(j)).collect())
        .collect();
    CombPolytope::new(
        p.len(),
        filters.iter().map(|j| p.filter_label(j)).collect(),
        labels.iter().map(|f| f.render(p)).collect(),
        support,
    )
    .expect("order polytope supports are valid")
}

/// Vertex label of the empty filter.
pub fn empty_filter_label() -> String {
    "{}".to_string()
}

/// Vertex label of the filter containing every element.
pub fn full_filter_label(p: &Poset) -> String {
    format!("{{{}}}", p.elements().join(","))
}
