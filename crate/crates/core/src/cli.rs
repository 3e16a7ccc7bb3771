//! Command-line front end. `run` parses arguments, dispatches and returns
//! the process exit code: 0 success, 1 verification failure, 2 usage or
//! configuration error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::routes::gchp_series;
use crate::identities::{matrix_with_shape, IdentityStatus};
use crate::inner::inner_product_report;
use crate::params::Params;
use crate::poly::BiPoly;
use crate::scalar::{parse_rational, parse_scalar, Exact, Float, Mode, Scalar};
use crate::verify::{
    cmd_verify, parse_params_set, VerifyOptions, DEFAULT_MAX_DEGREE, MAX_DEGREE_LIMIT,
};

/// Largest index accepted on the command line.
pub const MAX_INDEX: usize = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "gchp",
    version,
    about = "Generalized complex Hermite polynomials"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CliConfig {
    /// Coefficient arithmetic: exact rationals or double precision.
    #[arg(long, env = "GCHP_MODE", default_value = "exact", global = true)]
    pub mode: Mode,
    /// Field strength nu > 0 (integer, decimal or p/q).
    #[arg(
        long,
        default_value = "1",
        global = true,
        allow_negative_numbers = true
    )]
    pub nu: String,
    /// Shift xi as two reals: RE IM.
    #[arg(long, num_args = 2, value_names = ["RE", "IM"], global = true, allow_negative_numbers = true)]
    pub xi: Option<Vec<String>>,
    #[arg(
        long,
        default_value_t = 1e-10,
        global = true,
        allow_negative_numbers = true
    )]
    pub tolerance: f64,
    /// Gauss-Hermite points per axis (default: degree/2 + 4).
    #[arg(long, global = true)]
    pub quad_order: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty", global = true)]
    pub output: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient matrix of G^{m,n} (rows: powers of z, columns: powers of z*).
    Matrix { m: usize, n: usize },
    /// Value of G^{m,n} at z = re + i im.
    Eval {
        m: usize,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        re: String,
        #[arg(allow_negative_numbers = true)]
        im: String,
    },
    /// <G^{m,n}, G^{j,k}> by exact expansion, closed-form moments and quadrature.
    Inner {
        m: usize,
        n: usize,
        j: usize,
        k: usize,
    },
    /// Run the identity and closed-form suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        /// JSON list of {"nu": "p/q", "xi": ["re", "im"]}.
        #[arg(long)]
        params_set: Option<PathBuf>,
        /// Corrupt the series-route G^{M,N} (negative control).
        #[arg(long, num_args = 2, value_names = ["M", "N"], hide = true)]
        corrupt: Option<Vec<usize>>,
    },
}

impl CliConfig {
    fn params<S: Scalar>(&self) -> Result<Params<S>> {
        let (re, im) = match &self.xi {
            Some(v) => (v[0].as_str(), v[1].as_str()),
            None => ("0", "0"),
        };
        Params::new(parse_scalar(&self.nu, "0")?, parse_scalar(re, im)?)
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParams(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Wire format of `matrix --output json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub m: usize,
    pub n: usize,
    pub mode: Mode,
    pub nu: f64,
    pub xi: [f64; 2],
    pub deg_z: usize,
    pub deg_zbar: usize,
    /// Row-major `(m+1)×(n+1)` grid of `[re, im]`.
    pub coeffs: Vec<[f64; 2]>,
    /// Exact mode only: the same grid as `["re", "im"]` rational strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs_exact: Option<Vec<[String; 2]>>,
}

impl MatrixDoc {
    pub fn build<S: Scalar>(m: usize, n: usize, params: &Params<S>, p: &BiPoly<S>) -> Self {
        let grid = matrix_with_shape(p, m + 1, n + 1);
        let cells: Vec<&S> = grid.rows.iter().flatten().collect();
        let pf = params.to_float();
        MatrixDoc {
            m,
            n,
            mode: S::MODE,
            nu: pf.nu().re,
            xi: [pf.xi().re, pf.xi().im],
            deg_z: p.deg_z(),
            deg_zbar: p.deg_zbar(),
            coeffs: cells
                .iter()
                .map(|c| c.to_c64())
                .map(|c| [c.re, c.im])
                .collect(),
            coeffs_exact: (S::MODE == Mode::Exact).then(|| {
                cells
                    .iter()
                    .map(|c| {
                        let (re, im) = c.to_rationals();
                        [re.to_string(), im.to_string()]
                    })
                    .collect()
            }),
        }
    }

    fn cols(&self) -> usize {
        self.coeffs.len() / (self.deg_z + 1).max(1)
    }

    pub fn to_float_poly(&self) -> BiPoly<Float> {
        let cols = self.cols();
        BiPoly::from_rows(
            self.coeffs
                .chunks(cols)
                .map(|r| r.iter().map(|c| Complex64::new(c[0], c[1])).collect())
                .collect(),
        )
    }

    pub fn to_exact_poly(&self) -> Result<Option<BiPoly<Exact>>> {
        let Some(cells) = &self.coeffs_exact else {
            return Ok(None);
        };
        let cols = self.cols();
        let parsed = cells
            .iter()
            .map(|[re, im]| Ok(Exact::new(parse_rational(re)?, parse_rational(im)?)))
            .collect::<Result<Vec<Exact>>>()?;
        Ok(Some(BiPoly::from_rows(
            parsed.chunks(cols).map(<[Exact]>::to_vec).collect(),
        )))
    }
}

fn check_indices(idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i > MAX_INDEX) {
        Some(i) => Err(Error::DegreeBound(format!("index {i} exceeds {MAX_INDEX}"))),
        None => Ok(()),
    }
}

fn render_matrix<S: Scalar>(m: usize, n: usize, params: &Params<S>, fmt: OutputFormat) -> String {
    let g = gchp_series(m, n, params);
    match fmt {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&MatrixDoc::build(m, n, params, &g)).expect("serializable")
                + "\n"
        }
        OutputFormat::Csv => {
            let grid = matrix_with_shape(&g, m + 1, n + 1);
            let mut s = String::from("j,k,re,im\n");
            for (j, row) in grid.rows.iter().enumerate() {
                for (k, c) in row.iter().enumerate() {
                    let v = c.to_c64();
                    let _ = writeln!(s, "{j},{k},{},{}", v.re, v.im);
                }
            }
            s
        }
        OutputFormat::Pretty => {
            format!(
                "G^{{{m},{n}}} at {}\n{}",
                params.label(),
                matrix_with_shape(&g, m + 1, n + 1)
            )
        }
    }
}

fn render_eval<S: Scalar>(
    m: usize,
    n: usize,
    params: &Params<S>,
    z: &S,
    fmt: OutputFormat,
) -> String {
    let v = gchp_series(m, n, params).eval(z);
    let c = v.to_c64();
    let zc = z.to_c64();
    match fmt {
        OutputFormat::Json => {
            let mut doc = json!({"m": m, "n": n, "z": [zc.re, zc.im], "value": [c.re, c.im]});
            if S::MODE == Mode::Exact {
                doc["value_exact"] = json!(v.render());
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::Csv => format!("re,im\n{},{}\n", c.re, c.im),
        OutputFormat::Pretty => format!("G^{{{m},{n}}}({}) = {}\n", z.render(), v.render()),
    }
}

fn render_inner<S: Scalar>(
    idx: [usize; 4],
    params: &Params<S>,
    config: &CliConfig,
) -> Result<(String, bool)> {
    let [m, n, j, k] = idx;
    let f = gchp_series(m, n, params);
    let g = gchp_series(j, k, params);
    let r = inner_product_report(&f, &g, params, config.quad_order)?;
    let ok = r.max_delta <= config.tolerance;
    let text = match config.output {
        OutputFormat::Json => {
            let mut doc = r.to_json();
            doc["m"] = json!(m);
            doc["n"] = json!(n);
            doc["j"] = json!(j);
            doc["k"] = json!(k);
            doc["within_tolerance"] = json!(ok);
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::Csv => format!(
            "method,re,im\nexact,{},{}\nmoment,{},{}\nquadrature,{},{}\n",
            r.exact_value.re, r.exact_value.im, r.moment_value.re, r.moment_value.im, r.quad_value.re, r.quad_value.im
        ),
        OutputFormat::Pretty => format!(
            "<G^{{{m},{n}}}, G^{{{j},{k}}}> at {}\n  exact      {}  (= pi e^x * {})\n  moment     {}\n  quadrature {}  (order {})\n  max delta  {:.3e}\n",
            params.label(),
            r.exact_value,
            r.exact_reduced,
            r.moment_value,
            r.quad_value,
            r.quad_order,
            r.max_delta
        ),
    };
    Ok((text, ok))
}

fn render_verify(config: &CliConfig, opts: VerifyOptions) -> Result<(String, bool)> {
    let report = cmd_verify(&opts)?;
    let text = match config.output {
        OutputFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        OutputFormat::Csv => {
            let mut s = String::from("name,status,residual,cases\n");
            for c in &report.checks {
                let _ = writeln!(s, "{},{},{:e},{}", c.name, c.status, c.residual, c.cases);
            }
            s
        }
        OutputFormat::Pretty => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{:<9} {:<38} {:>10.3e}  {}",
                    c.status, c.name, c.residual, c.note
                );
            }
            let _ = writeln!(s, "errata: {}", report.errata.len());
            for e in &report.errata {
                let _ = writeln!(s, "  {}: {}", e.id, e.description);
            }
            let failed = report
                .checks
                .iter()
                .filter(|c| c.status == IdentityStatus::Failed)
                .count();
            let _ = writeln!(
                s,
                "{} ({} checks, {} failed, {} ms)",
                if report.passed { "PASSED" } else { "FAILED" },
                report.checks.len(),
                failed,
                report.elapsed_ms
            );
            s
        }
    };
    Ok((text, report.passed))
}

fn dispatch(cli: &Cli) -> Result<(String, bool)> {
    let config = &cli.config;
    config.validate()?;
    match &cli.command {
        Command::Matrix { m, n } => {
            check_indices(&[*m, *n])?;
            Ok(match config.mode {
                Mode::Exact => (
                    render_matrix(*m, *n, &config.params::<Exact>()?, config.output),
                    true,
                ),
                Mode::Float => (
                    render_matrix(*m, *n, &config.params::<Float>()?, config.output),
                    true,
                ),
            })
        }
        Command::Eval { m, n, re, im } => {
            check_indices(&[*m, *n])?;
            Ok(match config.mode {
                Mode::Exact => {
                    let z: Exact = parse_scalar(re, im)?;
                    (
                        render_eval(*m, *n, &config.params::<Exact>()?, &z, config.output),
                        true,
                    )
                }
                Mode::Float => {
                    let z: Float = parse_scalar(re, im)?;
                    (
                        render_eval(*m, *n, &config.params::<Float>()?, &z, config.output),
                        true,
                    )
                }
            })
        }
        Command::Inner { m, n, j, k } => {
            let idx = [*m, *n, *j, *k];
            check_indices(&idx)?;
            match config.mode {
                Mode::Exact => render_inner(idx, &config.params::<Exact>()?, config),
                Mode::Float => render_inner(idx, &config.params::<Float>()?, config),
            }
        }
        Command::Verify {
            max_degree,
            params_set,
            corrupt,
        } => {
            if *max_degree > MAX_DEGREE_LIMIT {
                return Err(Error::DegreeBound(format!(
                    "--max-degree must be at most {MAX_DEGREE_LIMIT}"
                )));
            }
            let params = match params_set {
                Some(path) => parse_params_set(&std::fs::read_to_string(path)?)?,
                None => Vec::new(),
            };
            let opts = VerifyOptions {
                max_degree: *max_degree,
                mode: Some(config.mode),
                tolerance: Some(config.tolerance),
                params,
                corrupt: corrupt.as_ref().map(|v| (v[0], v[1])),
            };
            render_verify(config, opts)
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (text, ok) = match dispatch(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cli.config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}
