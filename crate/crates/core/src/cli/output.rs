use std::io;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

/// Structured result of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// Basis expansion; `symbol` prefixes each key in text mode (`2*s[2,2]`).
    Terms { symbol: String, terms: Vec<(String, BigInt)> },
    Polynomial { variables: Vec<String>, poly: MultiPoly },
    Scalar(BigRational),
    Boolean(bool),
    Listing(Vec<String>),
    Matrix { index: Vec<String>, rows: Vec<Vec<BigInt>> },
}

impl Payload {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Payload::Scalar(BigRational::from_integer(n.into()))
    }

    pub fn to_json(&self) -> Value {
        match self {
            Payload::Terms { terms, .. } => {
                let map: Map<String, Value> = terms.iter().map(|(k, c)| (k.clone(), Value::String(c.to_string()))).collect();
                json!({ "terms": map })
            }
            Payload::Polynomial { variables, poly } => {
                let terms: Vec<Value> = poly
                    .display_order()
                    .into_iter()
                    .map(|(e, c)| json!({ "exponent": e, "coefficient": c.to_string() }))
                    .collect();
                json!({ "variables": variables, "terms": terms })
            }
            Payload::Scalar(c) => json!({ "value": c.to_string() }),
            Payload::Boolean(b) => json!({ "value": b }),
            Payload::Listing(items) => json!({ "items": items }),
            Payload::Matrix { index, rows } => {
                let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
                json!({ "index": index, "matrix": rows })
            }
        }
    }

    /// Inverse of [`Payload::to_json`]. Text symbols of expansions are not
    /// part of the document and come back empty.
    pub fn from_json(doc: &str) -> Result<Payload> {
        let bad = |why: &str| Error::Parse(format!("{why} in JSON payload"));
        let v: Value = serde_json::from_str(doc).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let int = |s: &Value| -> Result<BigInt> {
            s.as_str().ok_or_else(|| bad("expected a string"))?.parse().map_err(|_| bad("bad integer"))
        };
        let ratio = |s: &Value| -> Result<BigRational> {
            s.as_str().ok_or_else(|| bad("expected a string"))?.parse().map_err(|_| bad("bad rational"))
        };
        if let (Some(vars), Some(terms)) = (obj.get("variables"), obj.get("terms")) {
            let variables: Vec<String> = vars
                .as_array()
                .ok_or_else(|| bad("variables"))?
                .iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad("variable name")))
                .collect::<Result<_>>()?;
            let mut poly = MultiPoly::zero(variables.len());
            for t in terms.as_array().ok_or_else(|| bad("terms"))? {
                let e: Vec<u32> = serde_json::from_value(t["exponent"].clone()).map_err(|_| bad("exponent"))?;
                if e.len() != variables.len() {
                    return Err(bad("exponent length"));
                }
                poly.add_term(e, ratio(&t["coefficient"])?);
            }
            return Ok(Payload::Polynomial { variables, poly });
        }
        if let Some(terms) = obj.get("terms") {
            let terms = terms
                .as_object()
                .ok_or_else(|| bad("terms"))?
                .iter()
                .map(|(k, c)| Ok((k.clone(), int(c)?)))
                .collect::<Result<_>>()?;
            return Ok(Payload::Terms { symbol: String::new(), terms });
        }
        if let Some(value) = obj.get("value") {
            return match value {
                Value::Bool(b) => Ok(Payload::Boolean(*b)),
                other => Ok(Payload::Scalar(ratio(other)?)),
            };
        }
        if let Some(items) = obj.get("items") {
            let items = serde_json::from_value(items.clone()).map_err(|_| bad("items"))?;
            return Ok(Payload::Listing(items));
        }
        if let (Some(index), Some(m)) = (obj.get("index"), obj.get("matrix")) {
            let index = serde_json::from_value(index.clone()).map_err(|_| bad("index"))?;
            let rows = m
                .as_array()
                .ok_or_else(|| bad("matrix"))?
                .iter()
                .map(|r| r.as_array().ok_or_else(|| bad("matrix row"))?.iter().map(int).collect())
                .collect::<Result<_>>()?;
            return Ok(Payload::Matrix { index, rows });
        }
        Err(bad("unrecognized shape"))
    }

    pub fn to_text(&self) -> String {
        match self {
            Payload::Terms { symbol, terms } => {
                if terms.is_empty() {
                    return "0".into();
                }
                let mut out = String::new();
                for (idx, (k, c)) in terms.iter().enumerate() {
                    let neg = c < &BigInt::from(0);
                    let abs = if neg { -c } else { c.clone() };
                    out.push_str(match (idx, neg) {
                        (0, true) => "-",
                        (0, false) => "",
                        (_, true) => " - ",
                        (_, false) => " + ",
                    });
                    if abs != BigInt::from(1) {
                        out.push_str(&format!("{abs}*"));
                    }
                    out.push_str(&format!("{symbol}{k}"));
                }
                out
            }
            Payload::Polynomial { variables, poly } => {
                let names: Vec<&str> = variables.iter().map(String::as_str).collect();
                let text = poly.display_with(&names).to_string();
                text
            }
            Payload::Scalar(c) => c.to_string(),
            Payload::Boolean(b) => b.to_string(),
            Payload::Listing(items) => items.join("\n"),
            Payload::Matrix { index, rows } => {
                let mut lines = vec![format!("index: {}", index.join(" "))];
                lines.extend(rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")));
                lines.join("\n")
            }
        }
    }
}

/// Compact JSON with a space after `,` and `:`.
struct Spaced;

impl serde_json::ser::Formatter for Spaced {
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first { Ok(()) } else { writer.write_all(b", ") }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first { Ok(()) } else { writer.write_all(b", ") }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        writer.write_all(b": ")
    }
}

pub(crate) fn json_bytes(v: &Value) -> Vec<u8> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Spaced);
    serde::Serialize::serialize(v, &mut ser).expect("serializing into a Vec cannot fail");
    buf
}
