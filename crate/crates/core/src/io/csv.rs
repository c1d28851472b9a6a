//! Locale-independent number formatting for tabular output.

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed,
/// scientific notation outside `1e-4 <= |x| < 1e17`.
pub fn format_g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// JSON number for finite values, `null` otherwise.
pub fn json_number(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(x)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

/// Header plus one line per row, `\n` terminated.
pub fn render<R, I>(columns: &[String], rows: R) -> String
where
    R: IntoIterator<Item = I>,
    I: IntoIterator<Item = f64>,
{
    let mut out = columns.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(format_g17).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Renders preformatted cells, quoting any that contain a comma, a quote or a newline.
pub fn render_cells<R>(columns: &[&str], rows: R) -> String
where
    R: IntoIterator<Item = Vec<String>>,
{
    let quote = |c: &str| {
        if c.contains([',', '"', '\n']) {
            format!("\"{}\"", c.replace('"', "\"\""))
        } else {
            c.to_string()
        }
    };
    let mut out = columns.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| quote(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g17() {
        let cases = [
            (2.25, "2.25"),
            (0.1, "0.10000000000000001"),
            (1.0, "1"),
            (-0.5, "-0.5"),
            (5.0 / 7.0, "0.7142857142857143"),
            (1e-7, "9.9999999999999995e-08"),
            (1e20, "1e+20"),
            (123456.0, "123456"),
            (0.0001, "0.0001"),
            (3.0e-5, "3.0000000000000001e-05"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g17(x), want, "{x}");
        }
    }

    #[test]
    fn round_trips_exactly() {
        for x in [std::f64::consts::PI, 1.0 / 3.0, -2.0e-300, 6.02214076e23, 0.38] {
            assert_eq!(format_g17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn renders_lines() {
        let cols = vec!["a".to_string(), "b".to_string()];
        let s = render(&cols, vec![vec![1.0, 0.5], vec![2.0, 0.25]]);
        assert_eq!(s, "a,b\n1,0.5\n2,0.25\n");
    }

    #[test]
    fn cells_are_quoted_when_needed() {
        let out = render_cells(&["a", "b"], vec![vec!["x,y".to_string(), "say \"hi\"".to_string()]]);
        assert_eq!(out, "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    }
}
