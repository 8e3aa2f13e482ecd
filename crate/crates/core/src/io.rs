//! CSV readers and writers for coefficient, point, and measure files.
//!
//! Comma separated, `.` decimal, mandatory header row, LF line endings.
//! Floats are written in shortest round-trip form, so a written file reads
//! back bit-exactly.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::carleson::DiscreteMeasure;
use crate::error::{Error, Result};
use crate::kernels::DiskPoint;
use crate::spaces::CoefficientFunction;

fn reader<R: Read>(r: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(r)
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

fn expect_header<R: Read>(rdr: &mut csv::Reader<R>, expected: &[&str]) -> Result<()> {
    let header = rdr.headers()?;
    let got: Vec<&str> = header.iter().collect();
    if got != expected {
        return Err(Error::Input(format!("expected header {:?}, got {:?}", expected.join(","), got.join(","))));
    }
    Ok(())
}

fn parse_f64(field: &str, line: u64) -> Result<f64> {
    let v: f64 = field.parse().map_err(|_| Error::Input(format!("line {line}: '{field}' is not a number")))?;
    if !v.is_finite() {
        return Err(Error::Input(format!("line {line}: '{field}' is not finite")));
    }
    Ok(v)
}

fn line_of(rec: &csv::StringRecord) -> u64 {
    rec.position().map(|p| p.line()).unwrap_or(0)
}

/// Reads `k,re,im` rows with strictly increasing `k`.
pub fn read_coefficients<R: Read>(r: R) -> Result<CoefficientFunction> {
    let mut rdr = reader(r);
    expect_header(&mut rdr, &["k", "re", "im"])?;
    let mut coeffs: Vec<Complex64> = Vec::new();
    let mut last: Option<usize> = None;
    for rec in rdr.records() {
        let rec = rec?;
        let line = line_of(&rec);
        let k: usize =
            rec[0].parse().map_err(|_| Error::Input(format!("line {line}: '{}' is not an index", &rec[0])))?;
        if last.is_some_and(|l| k <= l) {
            return Err(Error::Input(format!("line {line}: index {k} is not strictly increasing")));
        }
        last = Some(k);
        coeffs.resize(k + 1, Complex64::new(0.0, 0.0));
        coeffs[k] = Complex64::new(parse_f64(&rec[1], line)?, parse_f64(&rec[2], line)?);
    }
    Ok(CoefficientFunction::new(coeffs))
}

/// Writes one `k,re,im` row per nonzero coefficient.
pub fn write_coefficients<W: Write>(w: W, f: &CoefficientFunction) -> Result<()> {
    let mut wtr = writer(w);
    wtr.write_record(["k", "re", "im"])?;
    for (k, c) in f.coeffs().iter().enumerate() {
        if *c != Complex64::new(0.0, 0.0) {
            wtr.write_record([k.to_string(), c.re.to_string(), c.im.to_string()])?;
        }
    }
    wtr.flush()?;
    Ok(())
}

/// Reads `re,im` rows as complex numbers.
pub fn read_complex<R: Read>(r: R) -> Result<Vec<Complex64>> {
    let mut rdr = reader(r);
    expect_header(&mut rdr, &["re", "im"])?;
    rdr.records()
        .map(|rec| {
            let rec = rec?;
            let line = line_of(&rec);
            Ok(Complex64::new(parse_f64(&rec[0], line)?, parse_f64(&rec[1], line)?))
        })
        .collect()
}

/// Reads `re,im` rows as points of the open disc.
pub fn read_points<R: Read>(r: R) -> Result<Vec<DiskPoint>> {
    read_complex(r)?.into_iter().map(|z| DiskPoint::new(z).map_err(|e| Error::Input(e.to_string()))).collect()
}

pub fn write_points<W: Write>(w: W, points: &[DiskPoint]) -> Result<()> {
    let mut wtr = writer(w);
    wtr.write_record(["re", "im"])?;
    for p in points {
        wtr.write_record([p.value().re.to_string(), p.value().im.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

/// Reads `re,im,mass` rows.
pub fn read_measure<R: Read>(r: R) -> Result<DiscreteMeasure> {
    let mut rdr = reader(r);
    expect_header(&mut rdr, &["re", "im", "mass"])?;
    let mut atoms = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = line_of(&rec);
        let z = Complex64::new(parse_f64(&rec[0], line)?, parse_f64(&rec[1], line)?);
        let p = DiskPoint::new(z).map_err(|e| Error::Input(format!("line {line}: {e}")))?;
        atoms.push((p, parse_f64(&rec[2], line)?));
    }
    DiscreteMeasure::new(atoms).map_err(|e| Error::Input(e.to_string()))
}

pub fn write_measure<W: Write>(w: W, mu: &DiscreteMeasure) -> Result<()> {
    let mut wtr = writer(w);
    wtr.write_record(["re", "im", "mass"])?;
    for (p, m) in mu.atoms() {
        wtr.write_record([p.value().re.to_string(), p.value().im.to_string(), m.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

/// Opens `path` and applies `read`.
pub fn read_path<T, F>(path: &Path, read: F) -> Result<T>
where
    F: FnOnce(std::fs::File) -> Result<T>,
{
    let file = std::fs::File::open(path).map_err(|e| Error::Input(format!("cannot open {}: {e}", path.display())))?;
    read(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_sparse_coefficients() {
        let f = read_coefficients("k,re,im\n2,1,0\n5,0.5,-0.25\n".as_bytes()).unwrap();
        assert_eq!(f.degree(), 5);
        assert_eq!(f.coeff(2), Complex64::new(1.0, 0.0));
        assert_eq!(f.coeff(3), Complex64::new(0.0, 0.0));
        assert_eq!(f.coeff(5), Complex64::new(0.5, -0.25));
    }

    #[test]
    fn rejects_bad_coefficient_files() {
        assert!(read_coefficients("k,re\n1,2\n".as_bytes()).is_err());
        assert!(read_coefficients("k,re,im\n2,1,0\n2,1,0\n".as_bytes()).is_err());
        assert!(read_coefficients("k,re,im\nx,1,0\n".as_bytes()).is_err());
        assert!(read_coefficients("k,re,im\n1,nan,0\n".as_bytes()).is_err());
    }

    #[test]
    fn writes_lf_and_skips_zeros() {
        let f = CoefficientFunction::from_real(&[0.0, 1.5, 0.0, 0.1]);
        let mut out = Vec::new();
        write_coefficients(&mut out, &f).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "k,re,im\n1,1.5,0\n3,0.1,0\n");
    }

    #[test]
    fn points_and_measures() {
        let pts = read_points("re,im\n0.5,0\n0,-0.25\n".as_bytes()).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(read_points("re,im\n1,0\n".as_bytes()).is_err());
        let mu = read_measure("re,im,mass\n0.9,0,2\n".as_bytes()).unwrap();
        assert_eq!(mu.total_mass(), 2.0);
        assert!(read_measure("re,im,mass\n0.9,0,-1\n".as_bytes()).is_err());
        let mut out = Vec::new();
        write_measure(&mut out, &mu).unwrap();
        assert_eq!(read_measure(out.as_slice()).unwrap(), mu);
    }
}
