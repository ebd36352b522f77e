//! CSV and JSON rendering of tables, curves and checks. Numbers carry 12
//! significant digits; CSV uses a header row, commas and LF line endings.

use serde::Serialize;
use serde_json::{json, Value};

use crate::balls::check_admissibility;
use crate::optimize::find_p_opt;
use crate::orthoscheme::{build_scheme, realize, volume_3d, Family};
use crate::packing2d::{
    density_general, density_horocycle_only, density_type1, density_type2, y_max, y_min,
};
use crate::packing3d::{min_horo_param, optimize_family_36, optimize_family_44, optimize_family_63};
use crate::{Error, Result};

/// Upper bound on the density of horoball packings of `H³`.
pub const BF_BOUND: f64 = 0.85328;

/// `x` with 12 significant digits; plain decimal between 1e-4 and 1e12.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // rounding can carry into a new leading digit, e.g. 9.99.. -> 10.0
        let sig = s
            .chars()
            .filter(char::is_ascii_digit)
            .skip_while(|&c| c == '0')
            .count();
        if sig > 12 && decimals > 0 {
            let d = decimals - 1;
            return format!("{x:.d$}");
        }
        s
    } else {
        format!("{x:.11e}")
    }
}

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    fmt12(x).parse().unwrap_or(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub p: f64,
    pub vol_f: f64,
    pub vol_pieces: f64,
    pub delta: f64,
    pub realizable: bool,
}

impl TableRow {
    pub fn csv_header() -> &'static str {
        "p,vol_f,vol_pieces,delta,realizable"
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            fmt12(self.p),
            fmt12(self.vol_f),
            fmt12(self.vol_pieces),
            fmt12(self.delta),
            self.realizable
        )
    }
}

/// Parse `"7,8,9"`, `"5..9"` (inclusive integer range) or a single value.
pub fn parse_p_list(list: &str) -> Result<Vec<f64>> {
    let list = list.trim();
    if let Some((lo, hi)) = list.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad range start '{lo}'")))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad range end '{hi}'")))?;
        if hi < lo {
            return Err(Error::Invalid(format!("empty range {lo}..{hi}")));
        }
        return Ok((lo..=hi).map(|p| p as f64).collect());
    }
    list.split(',')
        .map(|t| {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad p value '{t}'")))?;
            if !v.is_finite() {
                return Err(Error::NonFinite(v));
            }
            Ok(v)
        })
        .collect()
}

pub fn table_rows(family: Family, ps: &[f64]) -> Result<Vec<TableRow>> {
    let mut ps = ps.to_vec();
    ps.sort_by(f64::total_cmp);
    ps.iter()
        .map(|&p| {
            let d = match family {
                Family::F44 => optimize_family_44(p),
                Family::F63 => optimize_family_63(p),
                Family::F36 => optimize_family_36(p),
            }?;
            Ok(TableRow {
                p,
                vol_f: d.vol_f,
                vol_pieces: d.vol_pieces,
                delta: d.delta,
                realizable: d.realizable_tiling,
            })
        })
        .collect()
}

pub fn run_table(family: Family, ps: &[f64]) -> Result<String> {
    let mut out = String::from(TableRow::csv_header());
    out.push('\n');
    for row in table_rows(family, ps)? {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Type1,
    Type2,
    Horocycle,
    Surface,
    Family36,
}

impl std::str::FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "2d-type1" => CurveKind::Type1,
            "2d-type2" => CurveKind::Type2,
            "2d-horo" => CurveKind::Horocycle,
            "2d-surface" => CurveKind::Surface,
            "3d-36" => CurveKind::Family36,
            other => return Err(Error::Invalid(format!("unknown curve kind '{other}'"))),
        })
    }
}

fn samples(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite()) {
        return Err(Error::Invalid("range bounds must be finite".into()));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Invalid(format!("step {step} must be positive")));
    }
    if to < from {
        return Ok(Vec::new());
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| from + i as f64 * step).collect())
}

/// Sampled density curve. For `2d-surface` the range drives `a` and `y`
/// runs over the same step inside the admissible band.
pub fn run_curve(kind: CurveKind, from: f64, to: f64, step: f64) -> Result<String> {
    let xs = samples(from, to, step)?;
    let mut out = String::new();
    let header = match kind {
        CurveKind::Family36 => "p,delta",
        CurveKind::Surface => "a,y,delta",
        _ => "a,delta",
    };
    out.push_str(header);
    out.push('\n');
    for &x in &xs {
        match kind {
            CurveKind::Type1 => push_row(&mut out, &[x, density_type1(x)?]),
            CurveKind::Type2 => push_row(&mut out, &[x, density_type2(x)?]),
            CurveKind::Horocycle => push_row(&mut out, &[x, density_horocycle_only(x)?]),
            CurveKind::Family36 => push_row(&mut out, &[x, optimize_family_36(x)?.delta]),
            CurveKind::Surface => {
                if !(x > 0.0 && x < 1.0) {
                    return Err(Error::domain("a", x, "(0, 1)"));
                }
                let (lo, hi) = (y_min(x), y_max(x));
                let mut y = lo;
                while y <= hi {
                    push_row(&mut out, &[x, y, density_general(x, y)?]);
                    y += step;
                }
            }
        }
    }
    Ok(out)
}

fn push_row(out: &mut String, vals: &[f64]) {
    let cells: Vec<String> = vals.iter().map(|&v| fmt12(v)).collect();
    out.push_str(&cells.join(","));
    out.push('\n');
}

pub fn run_popt() -> Result<String> {
    let r = find_p_opt()?;
    let v = json!({
        "p_interval": [round12(r.p_interval[0]), round12(r.p_interval[1])],
        "p_star": round12(r.p_star),
        "delta_max": round12(r.delta_max),
        "exceeds_bf_bound": r.delta_max > BF_BOUND,
    });
    Ok(v.to_string())
}

/// Admissibility of a horoball `s` and hyperball `h` in the frustum
/// `[p,q,r]`; both default to the maximal balls.
pub fn run_validate(p: f64, q: f64, r: f64, s: Option<f64>, h: Option<f64>) -> Result<String> {
    let f = realize(&build_scheme(p, q, r)?)?;
    let s = match s {
        Some(s) => s,
        None => min_horo_param(&f)?,
    };
    let h = h.unwrap_or_else(|| f.max_hyperball_height());
    let rep = check_admissibility(&f, s, h)?;
    let v = json!({
        "p": round12(p),
        "q": round12(q),
        "r": round12(r),
        "s": round12(s),
        "h": round12(h),
        "horoball_ok": rep.horoball_ok,
        "hyperball_ok": rep.hyperball_ok,
        "disjoint": rep.disjoint,
        "min_clearances": rep.min_clearances.map(round12),
    });
    Ok(v.to_string())
}

pub fn run_volume(p: f64, q: f64, r: f64) -> Result<String> {
    let v = volume_3d(&build_scheme(p, q, r)?)?;
    let out: Value = json!({
        "p": round12(p),
        "q": round12(q),
        "r": round12(r),
        "volume": round12(v),
    });
    Ok(out.to_string())
}
