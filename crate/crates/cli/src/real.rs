//! Real-number arguments: decimals, `sqrt3`, `sqrt(3)`, and products or
//! quotients of those, e.g. `3*sqrt(2)` or `sqrt3/2`.

pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let mut value = 1.0;
    let mut divide = false;
    let mut rest = body;
    loop {
        let end = rest.find(['*', '/']).unwrap_or(rest.len());
        let f = factor(&rest[..end])?;
        value = if divide { value / f } else { value * f };
        if end == rest.len() {
            break;
        }
        divide = rest.as_bytes()[end] == b'/';
        rest = &rest[end + 1..];
    }
    let v = sign * value;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not a finite number"))
    }
}

fn factor(f: &str) -> Result<f64, String> {
    let f = f.trim();
    if let Some(arg) = f.strip_prefix("sqrt") {
        let arg = arg.strip_prefix('(').and_then(|a| a.strip_suffix(')')).unwrap_or(arg);
        let x = decimal(arg)?;
        if x < 0.0 {
            return Err(format!("sqrt of negative {x}"));
        }
        return Ok(x.sqrt());
    }
    decimal(f)
}

fn decimal(f: &str) -> Result<f64, String> {
    if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit() || c == '.' || c == 'e' || c == 'E' || c == '-' || c == '+') {
        return Err(format!("{f:?} is not a number"));
    }
    f.parse().map_err(|_| format!("{f:?} is not a number"))
}

#[cfg(test)]
mod tests {
    use super::parse_real;

    #[test]
    fn forms() {
        assert_eq!(parse_real("1.5"), Ok(1.5));
        assert_eq!(parse_real("-2"), Ok(-2.0));
        assert_eq!(parse_real("sqrt3"), Ok(3f64.sqrt()));
        assert_eq!(parse_real("sqrt(3)"), Ok(3f64.sqrt()));
        assert_eq!(parse_real("sqrt3/2"), Ok(3f64.sqrt() / 2.0));
        assert_eq!(parse_real("2*sqrt(2)"), Ok(2.0 * 2f64.sqrt()));
        assert_eq!(parse_real("1e-3"), Ok(0.001));
        for bad in ["", "abc", "sqrt(-1)", "1/0", "inf", "NaN", "2**3"] {
            assert!(parse_real(bad).is_err(), "{bad}");
        }
    }
}
