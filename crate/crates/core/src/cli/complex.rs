use num_complex::Complex64;

/// Parses `a`, `bi`, `a+bi`, `a-bi` (optional exponents, `i` alone for unit
/// imaginary part). Whitespace is ignored; non-finite parts are rejected.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex literal {text:?}");
    let num = |s: &str| -> Result<f64, String> {
        let v: f64 = s.parse().map_err(|_| bad())?;
        if v.is_finite()
            && !s
                .chars()
                .any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E')
        {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(num(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => num(s)?,
    };
    let re = if re.is_empty() { 0.0 } else { num(re)? };
    Ok(Complex64::new(re, im))
}
