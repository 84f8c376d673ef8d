//! Output formatting and flag parsing.
//!
//! Every float leaves the program as `{:.16e}`: 17 significant digits, which
//! round-trips f64 losslessly and keeps repeated runs byte-identical.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};
use tachyon_core::Vec3;

/// Pretty JSON with full-precision floats.
pub struct Sig17<'a> {
    inner: PrettyFormatter<'a>,
}

impl Default for Sig17<'_> {
    fn default() -> Self {
        Sig17 { inner: PrettyFormatter::new() }
    }
}

impl Formatter for Sig17<'_> {
    fn write_f64<W: io::Write + ?Sized>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_array(writer)
    }

    fn end_array<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W: io::Write + ?Sized>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object(writer)
    }

    fn end_object<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W: io::Write + ?Sized>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W: io::Write + ?Sized>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object_value(writer)
    }
}

/// Serialize to pretty JSON with 17-significant-digit floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, Sig17::default());
    value.serialize(&mut ser).expect("JSON serialization cannot fail for report types");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

/// One float, 17 significant digits.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Parse a speed that may carry a trailing "c" (fraction of light speed):
/// "0.6c" is 0.6 c, "2" is an absolute 2, bare "c" and "-c" work too.
pub fn parse_speed(raw: &str, c: f64) -> Result<f64, String> {
    let trimmed = raw.trim();
    if let Some(prefix) = trimmed.strip_suffix('c') {
        let factor = match prefix {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("cannot parse speed {trimmed:?}"))?,
        };
        if !factor.is_finite() {
            return Err(format!("speed {trimmed:?} is not finite"));
        }
        Ok(factor * c)
    } else {
        trimmed
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("cannot parse speed {trimmed:?}"))
    }
}

/// Parse a comma-separated 3-velocity; each component accepts the "c" suffix.
pub fn parse_velocity3(raw: &str, c: f64) -> Result<Vec3, String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated components, got {raw:?}"));
    }
    Ok(Vec3::new(
        parse_speed(parts[0], c)?,
        parse_speed(parts[1], c)?,
        parse_speed(parts[2], c)?,
    ))
}

/// Write a "param,P" CSV with full-precision values.
pub fn write_csv<W: Write>(mut out: W, rows: &[(f64, f64)]) -> io::Result<()> {
    writeln!(out, "param,P")?;
    for &(param, p) in rows {
        writeln!(out, "{},{}", fmt_f64(param), fmt_f64(p))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_the_formatter() {
        for &v in &[0.0, 1.0, -0.75, std::f64::consts::PI, 1e-12, 2.0f64.sqrt()] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }

    #[test]
    fn speed_suffix_parsing() {
        assert_eq!(parse_speed("0.6c", 2.0).unwrap(), 1.2);
        assert_eq!(parse_speed("0.6", 2.0).unwrap(), 0.6);
        assert_eq!(parse_speed("c", 3.0).unwrap(), 3.0);
        assert_eq!(parse_speed("-c", 3.0).unwrap(), -3.0);
        assert_eq!(parse_speed(" 2c ", 1.5).unwrap(), 3.0);
        assert!(parse_speed("fastc", 1.0).is_err());
        assert!(parse_speed("", 1.0).is_err());
        assert!(parse_speed("nan", 1.0).is_err());
    }

    #[test]
    fn velocity_triple_parsing() {
        let v = parse_velocity3("0.1c,0.2c,0", 2.0).unwrap();
        assert_eq!(v, Vec3::new(0.2, 0.4, 0.0));
        assert!(parse_velocity3("1,2", 1.0).is_err());
    }

    #[test]
    fn json_floats_carry_seventeen_digits() {
        #[derive(serde::Serialize)]
        struct S {
            x: f64,
        }
        let body = to_json(&S { x: 0.75 });
        assert!(body.contains("7.5000000000000000e-1"), "{body}");
    }
}
