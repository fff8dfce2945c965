//! Uniform grids on [-l, l] (1D) or [-l, l]^2 (2D) with Dirichlet boundaries.

use crate::error::{Error, Result};

/// Uniform spatial grid over `[-l, l]` per axis, including both boundary
/// nodes. Fields carried on the grid are zero on the boundary; the unknowns
/// of the implicit solves are the interior nodes `1..n-1`.
///
/// Node coordinates are reconstructed from `(l, n)` alone, so a grid is fully
/// described by its three fields and two grids with equal fields produce
/// bit-identical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    dims: usize,
    half_extent: f64,
    points_per_axis: usize,
}

impl Grid {
    /// Build a uniform grid. `dims` must be 1 or 2, `l > 0`, `n >= 3`.
    pub fn uniform(dims: usize, l: f64, n: usize) -> Result<Self> {
        if dims != 1 && dims != 2 {
            return Err(Error::InvalidGrid(format!("dims must be 1 or 2, got {dims}")));
        }
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::InvalidGrid(format!("half extent must be positive, got {l}")));
        }
        if n < 3 {
            return Err(Error::InvalidGrid(format!("need at least 3 points per axis, got {n}")));
        }
        Ok(Self { dims, half_extent: l, points_per_axis: n })
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    /// Grid spacing h = 2l/(n-1).
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_extent / (self.points_per_axis - 1) as f64
    }

    /// Total number of nodes (n in 1D, n^2 in 2D).
    pub fn len(&self) -> usize {
        match self.dims {
            1 => self.points_per_axis,
            _ => self.points_per_axis * self.points_per_axis,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coordinate of node `j` along one axis. The symmetric form keeps the
    /// endpoints exactly at -l and +l for any representable input.
    pub fn coord(&self, j: usize) -> f64 {
        let m = (self.points_per_axis - 1) as f64;
        self.half_extent * ((2 * j) as f64 - m) / m
    }

    /// Flat index of a 2D node; nodes are ordered row-major with the x index
    /// slow and the y index fast, matching the snapshot file layout.
    pub fn index2(&self, ix: usize, iy: usize) -> usize {
        ix * self.points_per_axis + iy
    }

    /// True when the flat index lies on the domain boundary.
    pub fn is_boundary(&self, idx: usize) -> bool {
        let n = self.points_per_axis;
        match self.dims {
            1 => idx == 0 || idx == n - 1,
            _ => {
                let ix = idx / n;
                let iy = idx % n;
                ix == 0 || iy == 0 || ix == n - 1 || iy == n - 1
            }
        }
    }

    /// Trapezoid quadrature weight of a node (h^d scaled by 1/2 per boundary
    /// axis). Boundary values are zero for all states, so this only matters
    /// for fields loaded from外部 sources... kept exact regardless.
    pub fn quad_weight(&self, idx: usize) -> f64 {
        let n = self.points_per_axis;
        let h = self.spacing();
        match self.dims {
            1 => {
                if idx == 0 || idx == n - 1 {
                    0.5 * h
                } else {
                    h
                }
            }
            _ => {
                let ix = idx / n;
                let iy = idx % n;
                let fx = if ix == 0 || ix == n - 1 { 0.5 } else { 1.0 };
                let fy = if iy == 0 || iy == n - 1 { 0.5 } else { 1.0 };
                fx * fy * h * h
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_line() {
        let g = Grid::uniform(1, 10.0, 5).unwrap();
        assert_eq!(g.spacing(), 5.0);
        let nodes: Vec<f64> = (0..5).map(|j| g.coord(j)).collect();
        assert_eq!(nodes, vec![-10.0, -5.0, 0.0, 5.0, 10.0]);
    }

    #[test]
    fn spacing_is_exact_for_power_of_two_intervals() {
        let g = Grid::uniform(1, 10.0, 1025).unwrap();
        assert_eq!(g.spacing(), 0.01953125);
    }

    #[test]
    fn square_grid_node_count() {
        let g = Grid::uniform(2, 8.0, 129).unwrap();
        assert_eq!(g.len(), 129 * 129);
        assert_eq!(g.spacing(), 0.125);
    }

    #[test]
    fn endpoints_are_bit_exact() {
        for &(l, n) in &[(30.0, 2049usize), (16.0, 513), (1.0, 4), (7.3, 101)] {
            let g = Grid::uniform(1, l, n).unwrap();
            assert_eq!(g.coord(0), -l);
            assert_eq!(g.coord(n - 1), l);
        }
    }

    #[test]
    fn uniform_spacing_at_representable_inputs() {
        let g = Grid::uniform(1, 16.0, 2049).unwrap();
        let h = g.spacing();
        for j in 0..2048 {
            assert_eq!(g.coord(j + 1) - g.coord(j), h);
        }
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid::uniform(1, 10.0, 2).is_err());
        assert!(Grid::uniform(1, 0.0, 5).is_err());
        assert!(Grid::uniform(1, -1.0, 5).is_err());
        assert!(Grid::uniform(3, 1.0, 5).is_err());
    }

    #[test]
    fn boundary_classification_2d() {
        let g = Grid::uniform(2, 1.0, 5).unwrap();
        assert!(g.is_boundary(g.index2(0, 3)));
        assert!(g.is_boundary(g.index2(3, 4)));
        assert!(!g.is_boundary(g.index2(2, 2)));
    }
}
