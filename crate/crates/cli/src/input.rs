//! Parsing of command-line payloads.
//!
//! Numbers are exact `p/q` literals. Decimal literals are accepted only in
//! inexact mode, where they are replaced by nearby rationals.

use std::fs;

use hyperk::model::number::{parse_rational, rational_near};
use hyperk::{
    make_geodesic, make_horocycle, make_hypercycle, BoundaryPoint, Curve, Error, Rational, UhpPoint,
};

use crate::Failure;

#[derive(Clone, Copy)]
pub struct Numbers {
    pub inexact: bool,
}

impl Numbers {
    pub fn rational(&self, s: &str) -> Result<Rational, Failure> {
        match parse_rational(s) {
            Ok(x) => Ok(x),
            Err(e) => {
                if self.inexact {
                    if let Ok(v) = s.trim().parse::<f64>() {
                        if v.is_finite() {
                            return Ok(rational_near(v, 1_000_000));
                        }
                    }
                } else if s.trim().parse::<f64>().is_ok() {
                    return Err(Failure::Usage(format!(
                        "{s:?} is not an exact rational; pass --inexact to accept decimals"
                    )));
                }
                Err(e.into())
            }
        }
    }

    pub fn real(&self, s: &str) -> Result<f64, Failure> {
        match parse_rational(s) {
            Ok(x) => Ok(hyperk::model::number::to_f64(&x)),
            Err(_) => self.rational(s).map(|x| hyperk::model::number::to_f64(&x)),
        }
    }

    pub fn boundary(&self, s: &str) -> Result<BoundaryPoint, Failure> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "oo" => Ok(BoundaryPoint::Infinity),
            t => self.rational(t).map(BoundaryPoint::Finite),
        }
    }

    pub fn list(&self, s: &str, n: usize) -> Result<Vec<Rational>, Failure> {
        let v = split(s, n)?;
        v.iter().map(|x| self.rational(x)).collect()
    }

    pub fn boundaries(&self, s: &str, n: usize) -> Result<Vec<BoundaryPoint>, Failure> {
        let v = split(s, n)?;
        v.iter().map(|x| self.boundary(x)).collect()
    }

    pub fn point(&self, s: &str) -> Result<(Rational, Rational), Failure> {
        let v = self.list(s, 2)?;
        Ok((v[0].clone(), v[1].clone()))
    }

    /// A curve given as canonical text (`horocycle a=1 b=0 c=-1 d=0`) or as
    /// `geodesic:p,q`, `horocycle:center,size`, `hypercycle:p,q,x,y` or
    /// `coeffs:a,b,c,d`.
    pub fn curve(&self, s: &str) -> Result<Curve, Failure> {
        let s = s.trim();
        if let Some((tag, args)) = s.split_once(':') {
            return match tag.trim() {
                "geodesic" => {
                    let p = self.boundaries(args, 2)?;
                    Ok(make_geodesic(&p[0], &p[1])?)
                }
                "horocycle" => {
                    let v = split(args, 2)?;
                    Ok(make_horocycle(
                        &self.boundary(&v[0])?,
                        &self.rational(&v[1])?,
                    )?)
                }
                "hypercycle" => {
                    let v = split(args, 4)?;
                    let (p, q) = (self.boundary(&v[0])?, self.boundary(&v[1])?);
                    let z = UhpPoint::exact(self.rational(&v[2])?, self.rational(&v[3])?)?;
                    Ok(make_hypercycle(&p, &q, &z)?)
                }
                "coeffs" => {
                    let c = self.list(args, 4)?;
                    Ok(Curve::from_coeffs(
                        c[0].clone(),
                        c[1].clone(),
                        c[2].clone(),
                        c[3].clone(),
                    )?)
                }
                t => Err(Failure::Usage(format!("unknown curve form {t:?}"))),
            };
        }
        Ok(Curve::parse_text(s)?)
    }

    pub fn curves(&self, specs: &[String], file: Option<&str>) -> Result<Vec<Curve>, Failure> {
        let mut out = Vec::new();
        if let Some(path) = file {
            for line in read_lines(path)? {
                out.push(self.curve(&line)?);
            }
        }
        for s in specs {
            out.push(self.curve(s)?);
        }
        Ok(out)
    }
}

/// Non-empty, non-comment lines of a file.
pub fn read_lines(path: &str) -> Result<Vec<String>, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

pub fn split(s: &str, n: usize) -> Result<Vec<String>, Failure> {
    let v: Vec<String> = s.split(',').map(|x| x.trim().to_string()).collect();
    if v.len() != n {
        return Err(Failure::Usage(format!(
            "expected {n} comma-separated values, got {s:?}"
        )));
    }
    Ok(v)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Degenerate(_) | Error::NoSolution(_) | Error::Indeterminate { .. } => {
                Failure::Degenerate(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}
