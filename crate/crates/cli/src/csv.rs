//! Plain CSV emission: 12 significant digits, LF line endings, no quoting
//! (every field is a number or a fixed identifier).

use spinstar_core::spinstar::TimeSeries;

/// Column layout of every trajectory file.
pub const TRAJECTORY_HEADER: &str = "tau_a,b,d,e,re_c,im_c,cov_xx,cov_yy,concurrence";

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// scientific notation outside `1e-4 <= |v| < 1e12`. Negative zero prints
/// as `0`.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_owned()
        } else if v > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, v);
        strip_zeros(&fixed).to_owned()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("fields are ASCII")
}

/// Serializes rows of already formatted fields, LF-terminated.
pub fn records<R, S>(rows: impl IntoIterator<Item = R>) -> String
where
    R: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut w = writer();
    for row in rows {
        w.write_record(row).expect("writing to memory cannot fail");
    }
    finish(w)
}

/// A numeric table with named columns of equal length.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub columns: Vec<Vec<f64>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let rows = self.columns.first().map_or(0, Vec::len);
        let body = (0..rows).map(|k| self.columns.iter().map(|c| format_number(c[k])).collect::<Vec<_>>());
        records(std::iter::once(self.header.clone()).chain(body))
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.header.iter().position(|h| h == name).map(|i| self.columns[i].as_slice())
    }
}

/// The fixed nine-column trajectory layout.
pub fn trajectory_csv(series: &TimeSeries) -> String {
    let header = TRAJECTORY_HEADER.split(',').map(str::to_owned).collect::<Vec<_>>();
    let body = series.iter().map(|p| {
        let s = &p.state;
        [s.b(), s.d(), s.e(), s.c().re, s.c().im, p.covariances.cov_xx, p.covariances.cov_yy, p.concurrence]
            .into_iter()
            .fold(vec![format_number(p.tau_a)], |mut row, v| {
                row.push(format_number(v));
                row
            })
    });
    records(std::iter::once(header).chain(body))
}

/// Parses a numeric CSV produced by this module back into a [`Table`].
pub fn parse_table(text: &str) -> Option<Table> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().ok()?.iter().map(str::to_owned).collect();
    let mut columns = vec![Vec::new(); header.len()];
    for record in reader.records() {
        let record = record.ok()?;
        for (col, f) in columns.iter_mut().zip(record.iter()) {
            col.push(f.parse().ok()?);
        }
    }
    Some(Table { header, columns })
}
