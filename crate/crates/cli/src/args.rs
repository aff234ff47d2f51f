use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Epstein zeta Z_r(Q, s)
    Epstein,
    /// Eisenstein series E_s(z), or the SL_r series of a Gram matrix with --Q
    Eisenstein,
    /// Laurent data of Z_2 at s = 1 against Kronecker's limit formula
    Kronecker,
    /// Block-formula constant term against the contour Laurent constant
    Terras,
    /// ζ_K(s) through E_s at the CM point against ζ(s)L(s, χ_D)
    Heegner,
    /// Potential profile q(iy) and its growth against y²
    Potential,
    /// Residual of the ground state e^{−E₁*} under −Δ + q
    GroundState,
    /// Exotic eigenvalue parameters for cut-off height a
    ExoticRoots,
    /// Gap statistics of the exotic roots
    Spacing,
    /// Constant term of the automorphic Green's function, both sides
    GreensCheck,
    /// Eigenvalue condition of the point-perturbed pseudo-Laplacian
    Repulsion,
    /// Runs every acceptance criterion
    Selftest,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Epstein zeta, Eisenstein series and spectral experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Gram matrix: `identity`, inline JSON, or @path to a JSON file
    #[arg(long = "Q", global = true, value_name = "GRAM")]
    pub q: Option<String>,

    /// Dimension, needed with `--Q identity`
    #[arg(long, global = true)]
    pub r: Option<usize>,

    /// Complex parameter as "re,im"
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub s: Option<String>,

    /// Point of the upper half-plane as "x,y"
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub z: Option<String>,

    /// Cut-off height
    #[arg(long, global = true)]
    pub a: Option<f64>,

    #[arg(long = "t-min", global = true)]
    pub t_min: Option<f64>,

    #[arg(long = "t-max", global = true)]
    pub t_max: Option<f64>,

    /// Height of the critical-line contour
    #[arg(long = "T", global = true, value_name = "HEIGHT")]
    pub height: Option<f64>,

    /// Gauss-Legendre nodes per unit length on the contour
    #[arg(long, global = true)]
    pub nodes: Option<usize>,

    /// Fundamental discriminant
    #[arg(long = "D", global = true, allow_hyphen_values = true, value_name = "DISC")]
    pub discriminant: Option<i64>,

    /// Block size for the Terras formula
    #[arg(long, global = true)]
    pub ell: Option<usize>,

    /// Evaluation tolerance, and the pass threshold of checking commands
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for randomly drawn sample points
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Sum the Dirichlet series directly over Q[v] ≤ BOUND instead
    #[arg(long, global = true, value_name = "BOUND")]
    pub direct: Option<f64>,

    /// Vector cap for direct lattice sums
    #[arg(long = "enum-cap", global = true)]
    pub enum_cap: Option<usize>,

    /// Finite-difference step
    #[arg(long, global = true)]
    pub h: Option<f64>,

    /// Number of sample points or grid rows
    #[arg(long, global = true)]
    pub points: Option<usize>,

    #[arg(long = "y-min", global = true)]
    pub y_min: Option<f64>,

    #[arg(long = "y-max", global = true)]
    pub y_max: Option<f64>,

    /// Scan step in τ
    #[arg(long, global = true)]
    pub step: Option<f64>,

    /// Restrict selftest to one criterion
    #[arg(long, global = true)]
    pub only: Option<u8>,
}
