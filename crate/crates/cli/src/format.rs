//! On-disk formats. All files are JSON documents; indices are 0-based and
//! scalars are exact rationals written as strings `"n"` or `"n/d"` (plain
//! JSON integers are also accepted on input).
//!
//! Algebra:
//!
//! ```json
//! {"dim": 2, "basis": ["L", "W"],
//!  "product": [[0, 0, 0, "1"], [1, 0, 1, "1"]],
//!  "bracket": [[0, 1, 1, "-1"], [1, 0, 1, "1"]]}
//! ```
//!
//! An entry `[i, j, k, c]` is the coefficient of `e_k` in `m(e_i, e_j)`;
//! omitted entries are zero.
//!
//! Flag datum: `p`, `q`, `eta`, `a1` are coordinate lists, `k` a scalar and
//! `S`, `T`, `D` row-major matrices whose column `j` is the image of `e_j`.
//!
//! Extending datum: `dim_a`, `dim_v` and the ten tensors `l_A`, `r_A`, `l_V`,
//! `r_V`, `f`, `star`, `triangle_left`, `triangle_right`, `h`, `curly` as
//! entry lists; a missing tensor is zero.
//!
//! Witnesses: `{"a0": [...], "beta": c}` for flag datums and
//! `{"lambda": M, "mu": M}` for extending datums.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use gdext::algebras::AlgebraData;
use gdext::extending::{EquivalenceWitness, GdExtendingDatum, LieExtendingDatum, NovikovExtendingDatum};
use gdext::flag::{FlagEquivalenceWitness, GdFlagDatum, NovikovFlagDatum};
use gdext::{BilinearMap, LinearMap, Scalar, Vector};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}:{line}:{column}: {msg}")]
    Syntax { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Invalid { path: String, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A rational that serializes as `"n/d"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Scalar);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"n\" or \"n/d\", or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Q, E> {
                s.parse().map(Q).map_err(|_| E::custom(format!("invalid rational {s:?}")))
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> Result<Q, E> {
                Ok(Q(Scalar::int(n)))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> Result<Q, E> {
                i64::try_from(n).map(|n| Q(Scalar::int(n))).map_err(|_| E::custom("integer too large; quote it"))
            }
        }
        d.deserialize_any(V)
    }
}

pub type Entry = (usize, usize, usize, Q);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub product: Vec<Entry>,
    pub bracket: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagFile {
    pub p: Vec<Q>,
    pub q: Vec<Q>,
    pub eta: Vec<Q>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<Q>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Q>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<Q>>,
    pub a1: Vec<Q>,
    pub k: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendingFile {
    pub dim_a: usize,
    pub dim_v: usize,
    #[serde(rename = "l_A", default)]
    pub l_a: Vec<Entry>,
    #[serde(rename = "r_A", default)]
    pub r_a: Vec<Entry>,
    #[serde(rename = "l_V", default)]
    pub l_v: Vec<Entry>,
    #[serde(rename = "r_V", default)]
    pub r_v: Vec<Entry>,
    #[serde(default)]
    pub f: Vec<Entry>,
    #[serde(default)]
    pub star: Vec<Entry>,
    #[serde(default)]
    pub triangle_left: Vec<Entry>,
    #[serde(default)]
    pub triangle_right: Vec<Entry>,
    #[serde(default)]
    pub h: Vec<Entry>,
    #[serde(default)]
    pub curly: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagWitnessFile {
    pub a0: Vec<Q>,
    pub beta: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendingWitnessFile {
    pub lambda: Vec<Vec<Q>>,
    pub mu: Vec<Vec<Q>>,
}

/// Semantic problem found after the JSON itself parsed.
type Check<T> = Result<T, String>;

fn entries(m: &BilinearMap) -> Vec<Entry> {
    m.entries().into_iter().map(|(i, j, k, c)| (i, j, k, Q(c))).collect()
}

fn tensor(name: &str, dims: (usize, usize, usize), es: &[Entry]) -> Check<BilinearMap> {
    let mut seen = BTreeSet::new();
    let mut m = BilinearMap::zero(dims.0, dims.1, dims.2);
    for (n, (i, j, k, c)) in es.iter().enumerate() {
        if *i >= dims.0 || *j >= dims.1 || *k >= dims.2 {
            return Err(format!("{name} entry {n}: index ({i}, {j}, {k}) out of range for dims {dims:?}"));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(format!("{name} entry {n}: ({i}, {j}, {k}) given twice"));
        }
        m.set(*i, *j, *k, c.0.clone());
    }
    Ok(m)
}

fn coords(v: &Vector) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

fn vector(name: &str, n: usize, xs: &[Q]) -> Check<Vector> {
    if xs.len() != n {
        return Err(format!("{name} has length {}, expected {n}", xs.len()));
    }
    Ok(Vector::new(xs.iter().map(|x| x.0.clone()).collect()))
}

fn rows(m: &LinearMap) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|r| coords(&m.row_vector(r))).collect()
}

fn matrix(name: &str, r: usize, c: usize, xs: &[Vec<Q>]) -> Check<LinearMap> {
    if xs.len() != r || xs.iter().any(|row| row.len() != c) {
        return Err(format!("{name} must be a {r}×{c} matrix"));
    }
    Ok(LinearMap::from_rows(xs.iter().map(|row| row.iter().map(|x| x.0.clone()).collect()).collect()))
}

impl AlgebraFile {
    pub fn from_data(a: &AlgebraData) -> Self {
        AlgebraFile { dim: a.dim(), basis: a.names.clone(), product: entries(&a.product), bracket: entries(&a.bracket) }
    }

    pub fn to_data(&self) -> Check<AlgebraData> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(format!("basis lists {} names for dim {n}", self.basis.len()));
        }
        let p = tensor("product", (n, n, n), &self.product)?;
        let b = tensor("bracket", (n, n, n), &self.bracket)?;
        AlgebraData::new(self.basis.clone(), p, b).map_err(|e| e.to_string())
    }
}

impl FlagFile {
    pub fn from_datum(d: &GdFlagDatum) -> Self {
        let nv = &d.novikov;
        FlagFile {
            p: coords(&nv.p),
            q: coords(&nv.q),
            eta: coords(&d.eta),
            s: rows(&nv.s),
            t: rows(&nv.t),
            d: rows(&d.d),
            a1: coords(&nv.a1),
            k: Q(nv.k.clone()),
        }
    }

    pub fn to_datum(&self) -> Check<GdFlagDatum> {
        let n = self.p.len();
        Ok(GdFlagDatum {
            novikov: NovikovFlagDatum {
                p: vector("p", n, &self.p)?,
                q: vector("q", n, &self.q)?,
                s: matrix("S", n, n, &self.s)?,
                t: matrix("T", n, n, &self.t)?,
                a1: vector("a1", n, &self.a1)?,
                k: self.k.0.clone(),
            },
            eta: vector("eta", n, &self.eta)?,
            d: matrix("D", n, n, &self.d)?,
        })
    }
}

impl ExtendingFile {
    pub fn from_datum(d: &GdExtendingDatum) -> Self {
        let (na, nv) = d.dims().expect("datum with consistent dims");
        let (n, l) = (&d.novikov, &d.lie);
        ExtendingFile {
            dim_a: na,
            dim_v: nv,
            l_a: entries(&n.l_a),
            r_a: entries(&n.r_a),
            l_v: entries(&n.l_v),
            r_v: entries(&n.r_v),
            f: entries(&n.f),
            star: entries(&n.star),
            triangle_left: entries(&l.triangle_left),
            triangle_right: entries(&l.triangle_right),
            h: entries(&l.h),
            curly: entries(&l.curly),
        }
    }

    pub fn to_datum(&self) -> Check<GdExtendingDatum> {
        let (a, v) = (self.dim_a, self.dim_v);
        Ok(GdExtendingDatum {
            novikov: NovikovExtendingDatum {
                l_a: tensor("l_A", (a, v, v), &self.l_a)?,
                r_a: tensor("r_A", (a, v, v), &self.r_a)?,
                l_v: tensor("l_V", (v, a, a), &self.l_v)?,
                r_v: tensor("r_V", (v, a, a), &self.r_v)?,
                f: tensor("f", (v, v, a), &self.f)?,
                star: tensor("star", (v, v, v), &self.star)?,
            },
            lie: LieExtendingDatum {
                triangle_left: tensor("triangle_left", (v, a, v), &self.triangle_left)?,
                triangle_right: tensor("triangle_right", (v, a, a), &self.triangle_right)?,
                h: tensor("h", (v, v, a), &self.h)?,
                curly: tensor("curly", (v, v, v), &self.curly)?,
            },
        })
    }
}

impl FlagWitnessFile {
    pub fn from_witness(w: &FlagEquivalenceWitness) -> Self {
        FlagWitnessFile { a0: coords(&w.a0), beta: Q(w.beta.clone()) }
    }

    pub fn to_witness(&self) -> FlagEquivalenceWitness {
        FlagEquivalenceWitness { a0: Vector::new(self.a0.iter().map(|x| x.0.clone()).collect()), beta: self.beta.0.clone() }
    }
}

impl ExtendingWitnessFile {
    pub fn from_witness(w: &EquivalenceWitness) -> Self {
        ExtendingWitnessFile { lambda: rows(&w.lambda), mu: rows(&w.mu) }
    }

    pub fn to_witness(&self) -> Check<EquivalenceWitness> {
        let nv = self.mu.len();
        let na = self.lambda.len();
        let lambda = matrix("lambda", na, nv, &self.lambda)?;
        let mu = matrix("mu", nv, nv, &self.mu)?;
        EquivalenceWitness::new(lambda, mu).map_err(|e| e.to_string())
    }
}

/// Any datum file, told apart by its fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumFile {
    Flag(FlagFile),
    Extending(ExtendingFile),
}

impl DatumFile {
    pub fn to_extending(&self) -> Check<GdExtendingDatum> {
        match self {
            DatumFile::Flag(f) => f.to_datum()?.to_extending_datum().map_err(|e| e.to_string()),
            DatumFile::Extending(e) => e.to_datum(),
        }
    }
}

fn syntax(path: &str, e: serde_json::Error) -> FormatError {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let msg = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
    FormatError::Syntax { path: path.to_string(), line: e.line(), column: e.column(), msg }
}

/// Parses `text` as `T`; `path` only labels errors.
pub fn parse_str<T: for<'de> Deserialize<'de>>(path: &str, text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| syntax(path, e))
}

pub fn parse_datum_str(path: &str, text: &str) -> Result<DatumFile, FormatError> {
    let v: serde_json::Value = parse_str(path, text)?;
    if v.get("dim_a").is_some() {
        parse_str(path, text).map(DatumFile::Extending)
    } else {
        parse_str(path, text).map(DatumFile::Flag)
    }
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn invalid(path: &Path, msg: impl Into<String>) -> FormatError {
    FormatError::Invalid { path: path.display().to_string(), msg: msg.into() }
}

pub fn read_algebra(path: &Path) -> Result<AlgebraData, FormatError> {
    let f: AlgebraFile = parse_str(&path.display().to_string(), &read_text(path)?)?;
    f.to_data().map_err(|m| invalid(path, m))
}

pub fn read_flag(path: &Path) -> Result<GdFlagDatum, FormatError> {
    let f: FlagFile = parse_str(&path.display().to_string(), &read_text(path)?)?;
    f.to_datum().map_err(|m| invalid(path, m))
}

pub fn read_datum(path: &Path) -> Result<DatumFile, FormatError> {
    parse_datum_str(&path.display().to_string(), &read_text(path)?)
}

/// Indented JSON in which arrays of scalars (entries, coordinate lists,
/// matrix rows) stay on one line.
pub fn to_text<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("plain data serializes");
    let mut s = String::new();
    render(&v, 0, &mut s);
    s.push('\n');
    s
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                render(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

pub fn print_algebra(a: &AlgebraData) -> String {
    to_text(&AlgebraFile::from_data(a))
}

pub fn print_flag(d: &GdFlagDatum) -> String {
    to_text(&FlagFile::from_datum(d))
}

pub fn print_extending(d: &GdExtendingDatum) -> String {
    to_text(&ExtendingFile::from_datum(d))
}

pub fn parse_algebra(text: &str) -> Result<AlgebraData, FormatError> {
    let f: AlgebraFile = parse_str("<input>", text)?;
    f.to_data().map_err(|msg| FormatError::Invalid { path: "<input>".into(), msg })
}

pub fn parse_flag(text: &str) -> Result<GdFlagDatum, FormatError> {
    let f: FlagFile = parse_str("<input>", text)?;
    f.to_datum().map_err(|msg| FormatError::Invalid { path: "<input>".into(), msg })
}

pub fn parse_extending(text: &str) -> Result<GdExtendingDatum, FormatError> {
    let f: ExtendingFile = parse_str("<input>", text)?;
    f.to_datum().map_err(|msg| FormatError::Invalid { path: "<input>".into(), msg })
}
