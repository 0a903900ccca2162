//! Unit-circle tables: for directions (cos t, sin t) compute the norm of
//! diag(cos t, sin t) and emit the boundary point direction / norm. These
//! tables are the data behind the unit-ball figures.

use specnorm_core::combinatorics::gamma;
use specnorm_core::distributions::Distribution;
use specnorm_core::norms::mc_abs_moment;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Mc,
}

impl std::str::FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "mc" => Ok(Method::Mc),
            other => Err(CliError::Usage(format!("method must be exact or mc, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleRow {
    pub theta: f64,
    pub dir1: f64,
    pub dir2: f64,
    pub norm: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircleTable {
    pub rows: Vec<CircleRow>,
}

/// Sample the unit circle of the norm at `resolution` equally spaced angles.
/// The exact method requires an even integer exponent; the Monte Carlo
/// method accepts any real d >= 1 and shares one sample stream across all
/// angles (common random numbers) so the curve stays smooth.
pub fn circle_samples(
    dist: &Distribution,
    d: f64,
    resolution: usize,
    method: Method,
    n_samples: u64,
    seed: u64,
) -> Result<CircleTable> {
    if resolution == 0 {
        return Err(CliError::Usage("resolution must be at least 1".into()));
    }
    // Validates d >= 1 and moment existence (Pareto needs alpha > d).
    specnorm_core::norms::NormSpec::new(dist.clone(), d)?;
    let norm_at = |direction: &[f64; 2]| -> Result<f64> {
        match method {
            Method::Exact => {
                if d.fract() != 0.0 || d < 2.0 || !(d as u64).is_multiple_of(2) {
                    return Err(CliError::Domain(specnorm_core::Error::OddExponent { d }));
                }
                Ok(specnorm_core::norms::norm_exact_partition_spectrum(
                    direction,
                    dist,
                    d as u32,
                )?)
            }
            Method::Mc => {
                let (mean, _se) = mc_abs_moment(direction, dist, d, n_samples, seed)?;
                Ok((mean / gamma(d + 1.0)?).powf(1.0 / d))
            }
        }
    };
    let mut rows = Vec::with_capacity(resolution);
    for k in 0..resolution {
        let theta = std::f64::consts::TAU * k as f64 / resolution as f64;
        let (dir2, dir1) = theta.sin_cos();
        let norm = norm_at(&[dir1, dir2])?;
        if !(norm > 0.0) {
            return Err(CliError::Domain(specnorm_core::Error::InternalInconsistency(
                format!("norm vanished on a unit direction at theta = {theta}"),
            )));
        }
        rows.push(CircleRow { theta, dir1, dir2, norm, x: dir1 / norm, y: dir2 / norm });
    }
    Ok(CircleTable { rows })
}

const CSV_HEADER: &str = "theta,dir1,dir2,norm,x,y";

/// 17 significant digits so values survive a parse round trip bit-exactly.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn table_to_csv(table: &CircleTable) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt(r.theta),
            fmt(r.dir1),
            fmt(r.dir2),
            fmt(r.norm),
            fmt(r.x),
            fmt(r.y)
        ));
    }
    out
}

pub fn parse_circle_csv(text: &str) -> Result<CircleTable> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        _ => return Err(CliError::Parse(format!("expected header `{CSV_HEADER}`"))),
    }
    let mut rows = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let cells: Vec<f64> = line
            .split(',')
            .map(|c| {
                c.trim()
                    .parse()
                    .map_err(|_| CliError::Parse(format!("invalid number `{c}`")))
            })
            .collect::<Result<_>>()?;
        if cells.len() != 6 {
            return Err(CliError::Parse(format!("expected 6 columns, got {}", cells.len())));
        }
        rows.push(CircleRow {
            theta: cells[0],
            dir1: cells[1],
            dir2: cells[2],
            norm: cells[3],
            x: cells[4],
            y: cells[5],
        });
    }
    Ok(CircleTable { rows })
}

/// One closed polyline through the boundary points, in a square viewBox
/// sized to the data.
pub fn table_to_svg(table: &CircleTable) -> String {
    let extent = table
        .rows
        .iter()
        .map(|r| r.x.abs().max(r.y.abs()))
        .fold(0.0f64, f64::max)
        .max(1e-9)
        * 1.1;
    let size = 400.0;
    let half = size / 2.0;
    let scale = half / extent;
    let mut points = String::new();
    for r in table.rows.iter().chain(table.rows.first()) {
        let px = half + r.x * scale;
        let py = half - r.y * scale;
        points.push_str(&format!("{px:.3},{py:.3} "));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size} {size}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"{}\"/>\n\
         </svg>\n",
        points.trim_end()
    )
}
