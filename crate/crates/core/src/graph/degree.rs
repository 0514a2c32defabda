use serde::Serialize;

use super::Graph;

/// How far a degree sequence is from regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DegreeClass {
    Regular,
    /// `Δ - δ = 1` and exactly one vertex has degree `Δ`.
    SubregularSingleMax,
    /// `Δ - δ = 1` and exactly one vertex has degree `δ`.
    SubregularSingleMin,
    OtherIrregular,
}

impl DegreeClass {
    pub fn is_subregular(self) -> bool {
        matches!(self, Self::SubregularSingleMax | Self::SubregularSingleMin)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Degree of each vertex, indexed by vertex.
    pub degrees: Vec<usize>,
    pub num_max_degree: usize,
    pub class: DegreeClass,
}

impl DegreeProfile {
    pub fn is_regular(&self) -> bool {
        self.class == DegreeClass::Regular
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.degrees.iter().map(|&d| (d * d) as u64).sum()
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let num_max_degree = degrees.iter().filter(|&&d| d == max_degree).count();
    let num_min_degree = degrees.iter().filter(|&&d| d == min_degree).count();
    let class = if max_degree == min_degree {
        DegreeClass::Regular
    } else if max_degree - min_degree == 1 && num_max_degree == 1 {
        DegreeClass::SubregularSingleMax
    } else if max_degree - min_degree == 1 && num_min_degree == 1 {
        DegreeClass::SubregularSingleMin
    } else {
        DegreeClass::OtherIrregular
    };
    DegreeProfile { n: g.order(), m: g.size(), max_degree, min_degree, degrees, num_max_degree, class }
}
