//! Request-string parsing: groups, center elements, boundary classes,
//! invariant polynomials, cutoffs, and schedules.
//!
//! Everything here returns a human-readable message naming the offending
//! input; the driver maps those to usage errors (exit code 2).

use flatmod_core::algebra::chars::HolonomySpec;
use flatmod_core::algebra::roots::{build_root_system, Family};
use flatmod_core::rat::Rat;
use flatmod_core::series::{InvariantPolynomial, SurfaceTopology};
use flatmod_core::RootSystem;

pub fn parse_group(text: &str) -> Result<RootSystem, String> {
    let s = text.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| "--group: empty group name".to_string())?
        .to_ascii_uppercase();
    let family = Family::from_letter(letter)
        .ok_or_else(|| format!("--group: unknown family letter in `{s}`"))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| format!("--group: `{s}` is not a family letter followed by a rank"))?;
    build_root_system(family, rank).map_err(|e| format!("--group: {e}"))
}

/// `e`, `-I`, or a numeric center index.
pub fn parse_center(rs: &RootSystem, text: &str) -> Result<usize, String> {
    let s = text.trim();
    if s.eq_ignore_ascii_case("e") || s == "0" {
        return Ok(0);
    }
    if s == "-I" || s == "-i" {
        if rs.center_order() == 2 {
            return Ok(1);
        }
        return Err(format!(
            "--center: -I needs a two-element center, {}{} has order {}",
            rs.family().letter(),
            rs.rank(),
            rs.center_order()
        ));
    }
    let idx: usize = s.parse().map_err(|_| format!("--center: `{s}` is not e, -I, or an index"))?;
    if idx >= rs.center_order() {
        return Err(format!(
            "--center: index {idx} out of range (center order {})",
            rs.center_order()
        ));
    }
    Ok(idx)
}

/// Frame coordinates from the pairing values `y_j = ω_j(C)` the user gives:
/// `x = M^{-T} y`.
pub fn frame_from_pairing(rs: &RootSystem, y: &[f64]) -> Vec<f64> {
    let l = rs.rank();
    let inv = rs.orth_inv_matrix();
    (0..l).map(|i| (0..l).map(|j| inv[j * l + i] * y[j]).sum()).collect()
}

/// Boundary syntax `COORDS[@CENTER]`: comma- or space-separated pairing
/// coordinates of the torus part, with an optional center twist.  A bare
/// `@CENTER` is a central class.
pub fn parse_boundary(rs: &RootSystem, text: &str) -> Result<HolonomySpec, String> {
    let (coord_part, center_part) = match text.split_once('@') {
        Some((a, b)) => (a.trim(), Some(b)),
        None => (text.trim(), None),
    };
    let center = match center_part {
        Some(c) => parse_center(rs, c).map_err(|e| e.replace("--center", "--boundary"))?,
        None => 0,
    };
    let coords: Result<Vec<f64>, String> = coord_part
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("--boundary: bad coordinate `{s}`")))
        .collect();
    let coords = coords?;
    if coords.is_empty() {
        if center_part.is_none() {
            return Err("--boundary: empty class specification".into());
        }
        return Ok(HolonomySpec::central(center, rs.rank()));
    }
    if coords.len() != rs.rank() {
        return Err(format!(
            "--boundary: {} coordinates for rank {}",
            coords.len(),
            rs.rank()
        ));
    }
    Ok(HolonomySpec { center, coords: frame_from_pairing(rs, &coords) })
}

pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let s = text.trim();
    let parse_int = |p: &str| p.trim().parse::<i128>().map_err(|_| format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d == 0 {
                return Err(format!("bad rational `{s}`: zero denominator"));
            }
            Ok(Rat::new(parse_int(num)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Sum of monomials `c * x1^a1 ... xl^al` with rational coefficients.
pub fn parse_poly(rank: usize, text: &str) -> Result<InvariantPolynomial, String> {
    if text.trim().is_empty() {
        return Err("--poly: empty polynomial".into());
    }
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    // Fold subtraction into signed terms so one splitter handles both.
    let normalized = text.replace('-', "+-");
    for chunk in normalized.split('+') {
        let mut body = chunk.trim();
        if body.is_empty() {
            continue;
        }
        let mut coef = Rat::from_integer(1);
        if let Some(rest) = body.strip_prefix('-') {
            coef = -coef;
            body = rest.trim_start();
            if body.is_empty() {
                return Err("--poly: dangling sign".into());
            }
        }
        let mut exps = vec![0u32; rank];
        for tok in body.split(|c: char| c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            if let Some(var) = tok.strip_prefix('x') {
                let (idx_s, exp_s) = match var.split_once('^') {
                    Some((a, b)) => (a, Some(b)),
                    None => (var, None),
                };
                let idx: usize = idx_s
                    .parse()
                    .map_err(|_| format!("--poly: bad variable `{tok}`"))?;
                if idx == 0 || idx > rank {
                    return Err(format!("--poly: variable x{idx} outside rank {rank}"));
                }
                let e: u32 = match exp_s {
                    Some(p) => p.parse().map_err(|_| format!("--poly: bad exponent in `{tok}`"))?,
                    None => 1,
                };
                exps[idx - 1] += e;
            } else {
                coef *= parse_rational(tok).map_err(|e| format!("--poly: {e}"))?;
            }
        }
        terms.push((exps, coef));
    }
    InvariantPolynomial::from_terms(rank, &terms).map_err(|e| format!("--poly: {e}"))
}

pub fn parse_schedule(text: &str) -> Result<Vec<f64>, String> {
    let vals: Result<Vec<f64>, String> = text
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("--t-schedule: bad value `{s}`")))
        .collect();
    let vals = vals?;
    if vals.len() < 4 {
        return Err("--t-schedule: need at least four points".into());
    }
    Ok(vals)
}

/// The default halving schedule `0.4 · 2^{-k}`, k = 0..5.
pub fn default_schedule() -> Vec<f64> {
    (0..6).map(|k| 0.4 / (1u64 << k) as f64).collect()
}

/// Assemble the surface from the topology flags: `--genus` for orientable
/// surfaces (with `--boundary` for boundary components) or `--case i|ii`
/// with `--k` for the cross-cap families.
pub fn build_topology(
    rs: &RootSystem,
    genus: Option<u32>,
    case: Option<&str>,
    k: Option<u32>,
    center: &str,
    boundaries: &[String],
) -> Result<SurfaceTopology, String> {
    match (genus, case) {
        (Some(_), Some(_)) => Err("--genus and --case are mutually exclusive".into()),
        (None, None) => Err("one of --genus or --case is required".into()),
        (Some(g), None) => {
            if boundaries.is_empty() {
                Ok(SurfaceTopology::Closed { genus: g, center: parse_center(rs, center)? })
            } else {
                let specs: Result<Vec<HolonomySpec>, String> =
                    boundaries.iter().map(|b| parse_boundary(rs, b)).collect();
                Ok(SurfaceTopology::Bounded { genus: g, boundaries: specs? })
            }
        }
        (None, Some(c)) => {
            if !boundaries.is_empty() {
                return Err("--boundary is only for orientable surfaces".into());
            }
            let k = k.ok_or_else(|| "--case needs --k".to_string())?;
            let center = parse_center(rs, center)?;
            match c.trim() {
                "i" => Ok(SurfaceTopology::NonOrientableOdd { k, center }),
                "ii" => Ok(SurfaceTopology::NonOrientableEven { k, center }),
                other => Err(format!("--case: `{other}` is not i or ii")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_strings() {
        assert_eq!(parse_group("A1").unwrap().rank(), 1);
        assert_eq!(parse_group("g2").unwrap().family().letter(), 'G');
        assert!(parse_group("Z9").is_err());
        assert!(parse_group("A").is_err());
        assert!(parse_group("A99").is_err());
    }

    #[test]
    fn center_strings() {
        let a1 = parse_group("A1").unwrap();
        assert_eq!(parse_center(&a1, "e").unwrap(), 0);
        assert_eq!(parse_center(&a1, "-I").unwrap(), 1);
        let a2 = parse_group("A2").unwrap();
        assert!(parse_center(&a2, "-I").is_err());
        assert_eq!(parse_center(&a2, "2").unwrap(), 2);
        assert!(parse_center(&a2, "3").is_err());
    }

    #[test]
    fn polynomial_round_trip() {
        let p = parse_poly(2, "3/4 * x1^2 x2 + x2^3 - 2").unwrap();
        assert_eq!(p.degree(), 3);
        assert!(parse_poly(1, "x2^2").is_err());
        assert!(parse_poly(1, "x0").is_err());
        let c = parse_poly(1, "1").unwrap();
        assert!(c.is_one());
    }

    #[test]
    fn boundary_strings() {
        let a1 = parse_group("A1").unwrap();
        let b = parse_boundary(&a1, "1.5707963267948966").unwrap();
        assert_eq!(b.center, 0);
        assert_eq!(b.coords.len(), 1);
        let c = parse_boundary(&a1, "@-I").unwrap();
        assert!(c.is_central());
        assert_eq!(c.center, 1);
        let tw = parse_boundary(&a1, "0.9@-I").unwrap();
        assert_eq!(tw.center, 1);
        assert!(!tw.is_central());
        assert!(parse_boundary(&a1, "0.5, 0.6").is_err());
    }

    #[test]
    fn schedules_and_rationals() {
        assert_eq!(default_schedule().len(), 6);
        assert!(parse_schedule("0.4, 0.2").is_err());
        assert_eq!(parse_rational("4/9").unwrap(), Rat::new(4, 9));
        assert!(parse_rational("1/0").is_err());
    }
}
