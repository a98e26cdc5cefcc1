//! Tangent spaces, codimensions and miniversal deformation templates.
//!
//! The tangent space to the *congruence class of `A` is the real span of
//! `C* A + A C` over all complex `C`. Its real dimension is the rank of an
//! 8x8 real matrix whose columns are the images of the real basis
//! `E_jk, i E_jk`, flattened in the order
//! `(Re a11, Im a11, Re a12, Im a12, Re a21, Im a21, Re a22, Im a22)`.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::canonical::{CanonicalForm, PairKind};
use crate::linalg::{c, real_rank, Mat2, RealMatrix, I};

/// Relative pivot tolerance for the tangent rank.
pub const TANGENT_RANK_TOL: f64 = 1e-10;

/// Parameters within this distance of the real axis use imaginary deformations.
pub const REAL_PARAM_TOL: f64 = 1e-9;

fn flatten(a: &Mat2) -> [f64; 8] {
    let m = a.rows();
    [
        m[0][0].re, m[0][0].im, m[0][1].re, m[0][1].im,
        m[1][0].re, m[1][0].im, m[1][1].re, m[1][1].im,
    ]
}

/// The real-linear map `C -> C* A + A C` as an 8x8 matrix.
pub fn tangent_map(a: &Mat2) -> RealMatrix {
    let mut t = RealMatrix::zeros(8, 8);
    for (col, (j, k, unit)) in (0..2)
        .flat_map(|j| (0..2).flat_map(move |k| [(j, k, c(1.0, 0.0)), (j, k, I)]))
        .enumerate()
    {
        let mut e = Mat2::zero();
        e.set(j, k, unit);
        let image = e.adjoint() * *a + *a * e;
        for (row, v) in flatten(&image).into_iter().enumerate() {
            t.set(row, col, v);
        }
    }
    t
}

pub fn tangent_space_dim(a: &Mat2) -> usize {
    real_rank(&tangent_map(a), TANGENT_RANK_TOL)
}

pub fn codimension(form: &CanonicalForm) -> usize {
    8 - tangent_space_dim(&form.realize())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StratumInfo {
    pub dim_r: usize,
    pub codim_r: usize,
}

pub fn stratum_info(form: &CanonicalForm) -> StratumInfo {
    let dim_r = tangent_space_dim(&form.realize());
    StratumInfo { dim_r, codim_r: 8 - dim_r }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cell {
    FixedZero,
    /// A free complex parameter.
    Star,
    /// A free real parameter.
    EpsReal,
    /// A free pure-imaginary parameter.
    EpsImaginary,
}

impl Cell {
    fn symbol(self) -> &'static str {
        match self {
            Cell::FixedZero => "0",
            Cell::Star => "*",
            Cell::EpsReal => "e",
            Cell::EpsImaginary => "ie",
        }
    }

    fn real_dim(self) -> usize {
        match self {
            Cell::FixedZero => 0,
            Cell::Star => 2,
            Cell::EpsReal | Cell::EpsImaginary => 1,
        }
    }
}

/// Which entries of the canonical matrix carry deformation parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VersalProfile {
    pub entry_kinds: [[Cell; 2]; 2],
    pub star_count: usize,
    pub eps_count: usize,
}

impl VersalProfile {
    fn from_cells(entry_kinds: [[Cell; 2]; 2]) -> Self {
        let cells = entry_kinds.iter().flatten();
        let star_count = cells.clone().filter(|&&k| k == Cell::Star).count();
        let eps_count = cells.filter(|&&k| matches!(k, Cell::EpsReal | Cell::EpsImaginary)).count();
        VersalProfile { entry_kinds, star_count, eps_count }
    }

    /// Real dimension of the deformation family.
    pub fn parameter_dim(&self) -> usize {
        self.entry_kinds.iter().flatten().map(|k| k.real_dim()).sum()
    }
}

impl fmt::Display for VersalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.entry_kinds;
        write!(
            f,
            "[{} {}; {} {}]",
            k[0][0].symbol(),
            k[0][1].symbol(),
            k[1][0].symbol(),
            k[1][1].symbol()
        )
    }
}

fn eps_for(p: Complex64) -> Cell {
    if p.im.abs() <= REAL_PARAM_TOL {
        Cell::EpsImaginary
    } else {
        Cell::EpsReal
    }
}

pub fn versal_profile(form: &CanonicalForm) -> VersalProfile {
    use Cell::*;
    let cells = match *form {
        CanonicalForm::Zero => [[Star, Star], [Star, Star]],
        CanonicalForm::UnitDirectZero { lambda } => [[eps_for(lambda.value()), FixedZero], [Star, Star]],
        CanonicalForm::UnitPair { mu, nu } => {
            let off = match form.pair_kind() {
                Some(PairKind::Generic) => FixedZero,
                _ => Star,
            };
            [[eps_for(mu.value()), FixedZero], [off, eps_for(nu.value())]]
        }
        CanonicalForm::Hyperbolic { .. } => [[FixedZero, FixedZero], [Star, FixedZero]],
        CanonicalForm::DeltaTau { .. } => [[Star, FixedZero], [FixedZero, FixedZero]],
    };
    VersalProfile::from_cells(cells)
}
