//! Output tree shared by the JSON and text renderers.
//!
//! Numbers are printed with 12 significant digits, trailing zeros removed,
//! and negative zero printed as `0`, so reports are stable byte for byte.

use std::fmt::Write as _;

use sqmat::{Complex64, SplitQuaternion, SqMatrix};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    /// `[q0, q1, q2, q3]`.
    Quat(SplitQuaternion),
    /// `[re, im]`.
    Complex(Complex64),
    /// The matrix schema `{"rows", "cols", "entries"}`.
    Matrix(SqMatrix),
    /// A real matrix as nested rows.
    Rows(Vec<Vec<f64>>),
    List(Vec<Node>),
    Obj(Vec<(String, Node)>),
}

/// Builder for [`Node::Obj`] that keeps insertion order.
#[derive(Default)]
pub struct Obj(Vec<(String, Node)>);

impl Obj {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Node>) -> Self {
        self.0.push((key.to_owned(), value.into()));
        self
    }

    pub fn build(self) -> Node {
        Node::Obj(self.0)
    }
}

impl From<bool> for Node {
    fn from(v: bool) -> Self {
        Node::Bool(v)
    }
}

impl From<usize> for Node {
    fn from(v: usize) -> Self {
        Node::Int(v as i64)
    }
}

impl From<f64> for Node {
    fn from(v: f64) -> Self {
        Node::Num(v)
    }
}

impl From<&str> for Node {
    fn from(v: &str) -> Self {
        Node::Str(v.to_owned())
    }
}

impl From<String> for Node {
    fn from(v: String) -> Self {
        Node::Str(v)
    }
}

impl From<SplitQuaternion> for Node {
    fn from(v: SplitQuaternion) -> Self {
        Node::Quat(v)
    }
}

impl From<Complex64> for Node {
    fn from(v: Complex64) -> Self {
        Node::Complex(v)
    }
}

impl From<SqMatrix> for Node {
    fn from(v: SqMatrix) -> Self {
        Node::Matrix(v)
    }
}

impl<T: Into<Node>> From<Option<T>> for Node {
    fn from(v: Option<T>) -> Self {
        v.map_or(Node::Null, Into::into)
    }
}

impl<T: Into<Node>> From<Vec<T>> for Node {
    fn from(v: Vec<T>) -> Self {
        Node::List(v.into_iter().map(Into::into).collect())
    }
}

/// 12 significant digits, shortest form, `-0` as `0`.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent in scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let sign = if v < 0.0 { "-" } else { "" };
    let body = if (-6..12).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{digits}{}", "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        }
    } else if digits.len() > 1 {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    } else {
        format!("{digits}e{exp}")
    };
    format!("{sign}{body}")
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        format_number(v)
    } else {
        "null".into()
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn inline_numbers(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| json_number(*v)).collect();
    format!("[{}]", parts.join(", "))
}

/// Items that lists print on a single line.
fn is_plain(node: &Node) -> bool {
    matches!(
        node,
        Node::Null | Node::Bool(_) | Node::Int(_) | Node::Num(_) | Node::Str(_)
    )
}

fn matrix_node(m: &SqMatrix) -> Node {
    Node::Obj(vec![
        ("rows".into(), Node::Int(m.rows() as i64)),
        ("cols".into(), Node::Int(m.cols() as i64)),
        (
            "entries".into(),
            Node::List(m.as_slice().iter().map(|q| Node::Quat(*q)).collect()),
        ),
    ])
}

fn write_json(out: &mut String, node: &Node, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match node {
        Node::Null => out.push_str("null"),
        Node::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Node::Int(i) => out.push_str(&i.to_string()),
        Node::Num(v) => out.push_str(&json_number(*v)),
        Node::Str(s) => out.push_str(&json_string(s)),
        Node::Quat(q) => out.push_str(&inline_numbers(&q.coeffs())),
        Node::Complex(z) => out.push_str(&inline_numbers(&[z.re, z.im])),
        Node::Matrix(m) => write_json(out, &matrix_node(m), indent),
        Node::Rows(rows) => {
            if rows.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, row) in rows.iter().enumerate() {
                let sep = if i + 1 < rows.len() { "," } else { "" };
                let _ = writeln!(out, "{pad}{}{sep}", inline_numbers(row));
            }
            let _ = write!(out, "{close}]");
        }
        Node::List(items) => {
            if items.iter().all(is_plain) {
                let parts: Vec<String> = items
                    .iter()
                    .map(|item| {
                        let mut s = String::new();
                        write_json(&mut s, item, indent);
                        s
                    })
                    .collect();
                let _ = write!(out, "[{}]", parts.join(", "));
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_json(out, item, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{close}]");
        }
        Node::Obj(fields) => {
            if fields.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (key, value)) in fields.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", json_string(key));
                write_json(out, value, indent + 1);
                out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{close}}}");
        }
    }
}

pub fn to_json(node: &Node) -> String {
    let mut out = String::new();
    write_json(&mut out, node, 0);
    out.push('\n');
    out
}

/// `q0 + q1 i + q2 j + q3 k` with signed terms.
pub fn quaternion_text(q: SplitQuaternion) -> String {
    let mut s = format_number(q.q0);
    for (c, unit) in [(q.q1, "i"), (q.q2, "j"), (q.q3, "k")] {
        let sign = if c < 0.0 { '-' } else { '+' };
        let _ = write!(s, " {sign} {} {unit}", format_number(c.abs()));
    }
    s
}

pub fn complex_text(z: Complex64) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!(
        "{} {sign} {} i",
        format_number(z.re),
        format_number(z.im.abs())
    )
}

fn scalar_text(node: &Node) -> Option<String> {
    Some(match node {
        Node::Null => "none".into(),
        Node::Bool(b) => (if *b { "pass" } else { "fail" }).into(),
        Node::Int(i) => i.to_string(),
        Node::Num(v) => format_number(*v),
        Node::Str(s) => s.clone(),
        Node::Quat(q) => quaternion_text(*q),
        Node::Complex(z) => complex_text(*z),
        Node::List(v) if v.is_empty() => "(none)".into(),
        _ => return None,
    })
}

fn write_text(out: &mut String, node: &Node, indent: usize) {
    let pad = "  ".repeat(indent);
    match node {
        Node::Matrix(m) => {
            let cells: Vec<Vec<String>> = (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| quaternion_text(m.get(i, j)))
                        .collect()
                })
                .collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
            for row in cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
                let _ = writeln!(out, "{pad}[ {} ]", padded.join(" | "));
            }
        }
        Node::Rows(rows) => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|v| format_number(*v)).collect())
                .collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
            for row in cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, "{pad}[ {} ]", padded.join("  "));
            }
        }
        Node::List(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        write_text(out, item, indent + 1);
                    }
                }
            }
        }
        Node::Obj(fields) => {
            for (key, value) in fields {
                match scalar_text(value) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{key}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{key}:");
                        write_text(out, value, indent + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}

pub fn to_text(node: &Node) -> String {
    let mut out = String::new();
    write_text(&mut out, node, 0);
    out
}
