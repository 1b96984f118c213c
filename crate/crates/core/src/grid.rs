//! Rectangular grids, sampled complex fields, and second-order finite
//! differences, including the Wirtinger derivatives ∂_z and ∂_z̄.
//!
//! Interior nodes use centered differences; boundary nodes use one-sided
//! second-order stencils so the truncation order is uniform across the grid.
//! All reductions scan in a fixed order, so results are bit-reproducible.

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Uniform rectangular grid on [x0, x0+(nx−1)hx] × [y0, y0+(ny−1)hy].
#[derive(Clone, Debug, PartialEq)]
pub struct Grid2 {
    nx: usize,
    ny: usize,
    x0: f64,
    y0: f64,
    hx: f64,
    hy: f64,
}

impl Grid2 {
    pub fn new(nx: usize, ny: usize, x0: f64, y0: f64, hx: f64, hy: f64) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::GridTooSmall("grid must have at least one node".into()));
        }
        if !(hx > 0.0) || !(hy > 0.0) || !hx.is_finite() || !hy.is_finite() {
            return Err(Error::BadConfig("grid spacing must be positive and finite".into()));
        }
        Ok(Grid2 { nx, ny, x0, y0, hx, hy })
    }

    /// Square grid with equal spacing on both axes.
    pub fn square(n: usize, x0: f64, y0: f64, h: f64) -> Result<Self> {
        Grid2::new(n, n, x0, y0, h, h)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn hx(&self) -> f64 {
        self.hx
    }

    pub fn hy(&self) -> f64 {
        self.hy
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.hx * i as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y0 + self.hy * j as f64
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major index: x varies fastest.
    pub fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }
}

/// A complex-valued function sampled on a [`Grid2`].
#[derive(Clone, Debug, PartialEq)]
pub struct Field2 {
    grid: Grid2,
    data: Vec<C64>,
}

impl Field2 {
    pub fn zeros(grid: Grid2) -> Self {
        let n = grid.len();
        Field2 {
            grid,
            data: vec![C64::new(0.0, 0.0); n],
        }
    }

    /// Sample f(x, y) over the grid.
    pub fn from_fn(grid: Grid2, f: impl Fn(f64, f64) -> C64) -> Self {
        let mut data = Vec::with_capacity(grid.len());
        for j in 0..grid.ny() {
            for i in 0..grid.nx() {
                data.push(f(grid.x(i), grid.y(j)));
            }
        }
        Field2 { grid, data }
    }

    pub fn grid(&self) -> &Grid2 {
        &self.grid
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[self.grid.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        let k = self.grid.idx(i, j);
        self.data[k] = v;
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Field2 {
            grid: self.grid.clone(),
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        self.map(|z| c * z)
    }

    /// Pointwise product; grids must agree.
    pub fn mul_pointwise(&self, other: &Field2) -> Result<Field2> {
        self.check_same_grid(other)?;
        Ok(Field2 {
            grid: self.grid.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a * b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Field2) -> Result<Field2> {
        self.check_same_grid(other)?;
        Ok(Field2 {
            grid: self.grid.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &Field2) -> Result<Field2> {
        self.check_same_grid(other)?;
        Ok(Field2 {
            grid: self.grid.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    /// Max norm over all nodes, scanned in a fixed order.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for z in &self.data {
            let a = z.norm();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn check_same_grid(&self, other: &Field2) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::BadConfig("fields live on different grids".into()));
        }
        Ok(())
    }
}

/// Sign convention for the complex derivatives.  `Standard` is
/// ∂_z = ½(∂_x − i∂_y); `Flipped` is the alternate convention with the
/// opposite sign of i, which swaps the roles of ∂_z and ∂_z̄.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wirtinger {
    Standard,
    Flipped,
}

impl Wirtinger {
    /// Parse a convention token; the alternate convention is selected by
    /// the token "paper" to match the command-line contract.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Wirtinger::Standard),
            "paper" => Ok(Wirtinger::Flipped),
            other => Err(Error::Parse(format!(
                "unknown Wirtinger convention '{}', expected standard|paper",
                other
            ))),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Wirtinger::Standard => "standard",
            Wirtinger::Flipped => "paper",
        }
    }
}

fn require_axis(n: usize, axis: &str) -> Result<()> {
    if n < 3 {
        return Err(Error::GridTooSmall(format!(
            "need at least 3 nodes along {} for second-order differences, have {}",
            axis, n
        )));
    }
    Ok(())
}

/// ∂f/∂x: centered in the interior, one-sided second-order at the edges.
pub fn partial_x(f: &Field2) -> Result<Field2> {
    let g = f.grid();
    require_axis(g.nx(), "x")?;
    let h = g.hx();
    let mut out = Field2::zeros(g.clone());
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let d = if i == 0 {
                (-3.0 * f.get(0, j) + 4.0 * f.get(1, j) - f.get(2, j)) / (2.0 * h)
            } else if i == g.nx() - 1 {
                let n = g.nx();
                (3.0 * f.get(n - 1, j) - 4.0 * f.get(n - 2, j) + f.get(n - 3, j)) / (2.0 * h)
            } else {
                (f.get(i + 1, j) - f.get(i - 1, j)) / (2.0 * h)
            };
            out.set(i, j, d);
        }
    }
    Ok(out)
}

/// ∂f/∂y: centered in the interior, one-sided second-order at the edges.
pub fn partial_y(f: &Field2) -> Result<Field2> {
    let g = f.grid();
    require_axis(g.ny(), "y")?;
    let h = g.hy();
    let mut out = Field2::zeros(g.clone());
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let d = if j == 0 {
                (-3.0 * f.get(i, 0) + 4.0 * f.get(i, 1) - f.get(i, 2)) / (2.0 * h)
            } else if j == g.ny() - 1 {
                let n = g.ny();
                (3.0 * f.get(i, n - 1) - 4.0 * f.get(i, n - 2) + f.get(i, n - 3)) / (2.0 * h)
            } else {
                (f.get(i, j + 1) - f.get(i, j - 1)) / (2.0 * h)
            };
            out.set(i, j, d);
        }
    }
    Ok(out)
}

/// ∂_z f under the chosen convention.
pub fn d_z(f: &Field2, conv: Wirtinger) -> Result<Field2> {
    let fx = partial_x(f)?;
    let fy = partial_y(f)?;
    let half = C64::new(0.5, 0.0);
    let i_unit = C64::new(0.0, 1.0);
    let s = match conv {
        Wirtinger::Standard => -i_unit,
        Wirtinger::Flipped => i_unit,
    };
    Ok(Field2 {
        grid: f.grid().clone(),
        data: fx
            .data()
            .iter()
            .zip(fy.data())
            .map(|(&a, &b)| half * (a + s * b))
            .collect(),
    })
}

/// ∂_z̄ f under the chosen convention.
pub fn d_zbar(f: &Field2, conv: Wirtinger) -> Result<Field2> {
    let other = match conv {
        Wirtinger::Standard => Wirtinger::Flipped,
        Wirtinger::Flipped => Wirtinger::Standard,
    };
    d_z(f, other)
}

/// Second derivative along x: centered in the interior, one-sided
/// second-order (four-point) at the edges.
pub fn partial_xx(f: &Field2) -> Result<Field2> {
    let g = f.grid();
    if g.nx() < 4 {
        return Err(Error::GridTooSmall(format!(
            "need at least 4 nodes along x for boundary second derivatives, have {}",
            g.nx()
        )));
    }
    let h2 = g.hx() * g.hx();
    let mut out = Field2::zeros(g.clone());
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let d = if i == 0 {
                (2.0 * f.get(0, j) - 5.0 * f.get(1, j) + 4.0 * f.get(2, j) - f.get(3, j)) / h2
            } else if i == g.nx() - 1 {
                let n = g.nx();
                (2.0 * f.get(n - 1, j) - 5.0 * f.get(n - 2, j) + 4.0 * f.get(n - 3, j)
                    - f.get(n - 4, j))
                    / h2
            } else {
                (f.get(i + 1, j) - 2.0 * f.get(i, j) + f.get(i - 1, j)) / h2
            };
            out.set(i, j, d);
        }
    }
    Ok(out)
}

/// Second derivative along y, same stencils as [`partial_xx`].
pub fn partial_yy(f: &Field2) -> Result<Field2> {
    let g = f.grid();
    if g.ny() < 4 {
        return Err(Error::GridTooSmall(format!(
            "need at least 4 nodes along y for boundary second derivatives, have {}",
            g.ny()
        )));
    }
    let h2 = g.hy() * g.hy();
    let mut out = Field2::zeros(g.clone());
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let d = if j == 0 {
                (2.0 * f.get(i, 0) - 5.0 * f.get(i, 1) + 4.0 * f.get(i, 2) - f.get(i, 3)) / h2
            } else if j == g.ny() - 1 {
                let n = g.ny();
                (2.0 * f.get(i, n - 1) - 5.0 * f.get(i, n - 2) + 4.0 * f.get(i, n - 3)
                    - f.get(i, n - 4))
                    / h2
            } else {
                (f.get(i, j + 1) - 2.0 * f.get(i, j) + f.get(i, j - 1)) / h2
            };
            out.set(i, j, d);
        }
    }
    Ok(out)
}

/// The mixed ∂²/∂z∂z̄ = ¼(∂_xx + ∂_yy), convention-independent.
pub fn laplace_quarter(f: &Field2) -> Result<Field2> {
    let fxx = partial_xx(f)?;
    let fyy = partial_yy(f)?;
    let q = C64::new(0.25, 0.0);
    Ok(Field2 {
        grid: f.grid().clone(),
        data: fxx
            .data()
            .iter()
            .zip(fyy.data())
            .map(|(&a, &b)| q * (a + b))
            .collect(),
    })
}
