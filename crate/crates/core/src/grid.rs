//! Uniform coordinate grids and sampled real-valued functions on them.

use crate::{Error, Result};

/// Which coordinate a grid lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordinateLabel {
    /// Pseudospherical coordinate on the hyperboloid.
    Tau,
    /// Auxiliary coordinate of the duality transform `e^tau = cosh(alpha)`.
    Alpha,
    /// Flat-space coordinate of the contraction limit.
    X,
}

impl std::fmt::Display for CoordinateLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoordinateLabel::Tau => write!(f, "tau"),
            CoordinateLabel::Alpha => write!(f, "alpha"),
            CoordinateLabel::X => write!(f, "x"),
        }
    }
}

/// An equally spaced coordinate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub step: f64,
    pub points: usize,
    pub label: CoordinateLabel,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, points: usize, label: CoordinateLabel) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::Domain(format!("grid step must be positive, got {step}")));
        }
        if points == 0 {
            return Err(Error::Domain("grid must contain at least one point".into()));
        }
        if !start.is_finite() {
            return Err(Error::Domain(format!("grid start must be finite, got {start}")));
        }
        Ok(Self { start, step, points, label })
    }

    /// Grid spanning `[min, max]` inclusive with `points >= 2` samples.
    pub fn from_range(min: f64, max: f64, points: usize, label: CoordinateLabel) -> Result<Self> {
        if points < 2 {
            return Err(Error::Domain(format!(
                "a range grid needs at least 2 points, got {points}"
            )));
        }
        if !(max > min) {
            return Err(Error::Domain(format!(
                "grid range must satisfy min < max, got [{min}, {max}]"
            )));
        }
        let step = (max - min) / (points - 1) as f64;
        Self::new(min, step, points, label)
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    pub fn coords(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(|i| self.coord(i))
    }

    pub fn coords_vec(&self) -> Vec<f64> {
        self.coords().collect()
    }
}

/// A real-valued function sampled on a [`UniformGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub grid: UniformGrid,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.points {
            return Err(Error::Internal(format!(
                "grid has {} points but {} values were supplied",
                grid.points,
                values.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Iterate over `(coordinate, value)` pairs.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (self.grid.coord(i), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_grid_hits_endpoints() {
        let g = UniformGrid::from_range(0.0, 2.0, 5, CoordinateLabel::Tau).unwrap();
        assert_eq!(g.points, 5);
        assert!((g.coord(0) - 0.0).abs() < 1e-15);
        assert!((g.coord(4) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(UniformGrid::new(0.0, 0.0, 3, CoordinateLabel::Tau).is_err());
        assert!(UniformGrid::new(0.0, 1.0, 0, CoordinateLabel::Tau).is_err());
        assert!(UniformGrid::from_range(1.0, 1.0, 5, CoordinateLabel::X).is_err());
        assert!(UniformGrid::from_range(0.0, 1.0, 1, CoordinateLabel::X).is_err());
    }

    #[test]
    fn grid_function_length_is_enforced() {
        let g = UniformGrid::from_range(0.0, 1.0, 3, CoordinateLabel::Alpha).unwrap();
        assert!(GridFunction::new(g.clone(), vec![1.0, 2.0]).is_err());
        let f = GridFunction::new(g, vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(f.samples().count(), 3);
    }
}
