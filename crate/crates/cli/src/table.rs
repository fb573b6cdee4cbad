//! Tabular output shared by every subcommand: CSV with a header row, or a
//! JSON object `{ "meta": ..., "rows": [...] }` carrying the same values.

use num_rational::BigRational;
use repstat_core::qseries::QPolynomial;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Machine-sized integer (indices, counts). JSON number.
    Int(i64),
    /// Arbitrary-precision integer as a decimal string. JSON string.
    Big(String),
    Real(f64),
    Rational(BigRational),
    Text(String),
    Bool(bool),
    /// Rendered `a;b;c` in CSV and as an array of strings in JSON.
    List(Vec<String>),
    Poly(QPolynomial),
    Empty,
}

impl Cell {
    pub fn big(x: impl ToString) -> Cell {
        Cell::Big(x.to_string())
    }

    pub fn text(x: impl ToString) -> Cell {
        Cell::Text(x.to_string())
    }

    pub fn int(x: usize) -> Cell {
        Cell::Int(x as i64)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Real(x) => format_real(*x),
            Cell::Rational(r) => r.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.join(";"),
            Cell::Poly(p) => p.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Big(s) | Cell::Text(s) => json!(s),
            Cell::Real(x) => {
                let text = format_real(*x);
                match text
                    .parse::<f64>()
                    .ok()
                    .and_then(serde_json::Number::from_f64)
                {
                    Some(n) => Value::Number(n),
                    None => Value::String(text),
                }
            }
            Cell::Rational(r) => json!(r.to_string()),
            Cell::Bool(b) => json!(b),
            Cell::List(items) => json!(items),
            Cell::Poly(p) => json!(p.coeff_strings()),
            Cell::Empty => Value::Null,
        }
    }
}

/// Real number with 12 significant digits, in the style of C's `%.12g`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (11 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::csv))
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self, meta: &Meta) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (h, c) in self.headers.iter().zip(row) {
                    obj.insert((*h).to_string(), c.json());
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "meta": {
                "invocation": meta.invocation,
                "version": env!("CARGO_PKG_VERSION"),
                "seed": meta.seed,
            },
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, Default)]
pub struct Meta {
    pub invocation: Vec<String>,
    pub seed: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(16.0 / 18.0), "0.888888888889");
        assert_eq!(format_real(-0.5), "-0.5");
        assert_eq!(format_real(123456.789), "123456.789");
        assert_eq!(format_real(1.5e-7), "1.5e-7");
        assert_eq!(format_real(2.0e15), "2e15");
        assert_eq!(format_real(999999999999.5), "1e12");
        assert_eq!(format_real(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn csv_quotes_partitions() {
        let mut t = Table::new(vec!["lambda", "dim"]);
        t.push(vec![Cell::text("[2,1]"), Cell::big(2)]);
        assert_eq!(t.to_csv(), "lambda,dim\n\"[2,1]\",2\n");
    }

    #[test]
    fn json_mirrors_csv() {
        let mut t = Table::new(vec!["n", "x", "big", "list"]);
        t.push(vec![
            Cell::Int(3),
            Cell::Real(1.0 / 3.0),
            Cell::big(10),
            Cell::List(vec!["1".into(), "9".into()]),
        ]);
        let v: Value = serde_json::from_str(&t.to_json(&Meta::default())).unwrap();
        let row = &v["rows"][0];
        assert_eq!(row["n"], json!(3));
        assert_eq!(format_real(row["x"].as_f64().unwrap()), "0.333333333333");
        assert_eq!(row["big"], json!("10"));
        assert_eq!(row["list"], json!(["1", "9"]));
    }
}
