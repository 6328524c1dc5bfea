//! Lossless JSON encoding of exact values.
//!
//! Rationals are strings `"num/den"` (always with a slash, lowest terms);
//! Gaussian rationals are `{"re": .., "im": ..}`; forms list their terms in
//! the fixed monomial order; conics carry canonical coordinates.

use flagcalc::{BiForm, BinaryForm, Conic, GaussianRational, Monomial, ProjPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::CliError;

type Q = GaussianRational;

pub fn rational(r: &BigRational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn scalar(z: &Q) -> Value {
    json!({ "re": rational(&z.re), "im": rational(&z.im) })
}

pub fn point(p: &ProjPoint<Q>) -> Value {
    Value::Array(p.coords().iter().map(scalar).collect())
}

pub fn conic(c: &Conic<Q>) -> Value {
    json!({ "q": point(c.q()), "m": point(c.m()) })
}

pub fn biform(f: &BiForm<Q>) -> Value {
    let (a, b) = f.bidegree();
    let terms: Vec<Value> =
        f.terms().iter().map(|(m, c)| json!({ "p": m.p, "l": m.l, "c": scalar(c) })).collect();
    json!({ "bidegree": [a, b], "terms": terms })
}

pub fn binary_form(f: &BinaryForm<Q>) -> Value {
    json!({ "degree": f.degree(), "coeffs": f.coeffs().iter().map(scalar).collect::<Vec<_>>() })
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn parse_rational(v: &Value) -> Result<BigRational, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(|| invalid(format!("expected an integer, found {n}"))),
        Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let num: BigInt = num.trim().parse().map_err(|_| invalid(format!("bad rational {s:?}")))?;
            let den: BigInt = den.trim().parse().map_err(|_| invalid(format!("bad rational {s:?}")))?;
            if den == BigInt::from(0) {
                return Err(invalid(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(invalid(format!("expected a rational, found {other}"))),
    }
}

/// Accepts `{"re", "im"}` objects as well as bare rationals.
pub fn parse_scalar(v: &Value) -> Result<Q, CliError> {
    match v {
        Value::Object(o) => {
            let part = |k: &str| o.get(k).map_or(Ok(BigRational::from_integer(0.into())), parse_rational);
            Ok(Q::new(part("re")?, part("im")?))
        }
        other => Ok(Q::real(parse_rational(other)?)),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| invalid(format!("{what}: expected an array")))
}

fn field<'a>(o: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    o.get(key).ok_or_else(|| invalid(format!("missing field {key:?}")))
}

pub fn parse_point(v: &Value) -> Result<ProjPoint<Q>, CliError> {
    let items = array(v, "point")?;
    if items.len() != 3 {
        return Err(invalid("a point has three coordinates"));
    }
    let c = [parse_scalar(&items[0])?, parse_scalar(&items[1])?, parse_scalar(&items[2])?];
    Ok(ProjPoint::new(c)?)
}

pub fn parse_conic(v: &Value) -> Result<Conic<Q>, CliError> {
    Ok(Conic::new(parse_point(field(v, "q")?)?, parse_point(field(v, "m")?)?))
}

fn exponents(v: &Value) -> Result<[u32; 3], CliError> {
    let items = array(v, "exponents")?;
    let e: Option<Vec<u32>> = items.iter().map(|x| x.as_u64().and_then(|n| u32::try_from(n).ok())).collect();
    e.and_then(|e| <[u32; 3]>::try_from(e).ok()).ok_or_else(|| invalid("exponents must be three small naturals"))
}

pub fn parse_biform(v: &Value) -> Result<BiForm<Q>, CliError> {
    let bd = array(field(v, "bidegree")?, "bidegree")?;
    let deg = |i: usize| bd.get(i).and_then(Value::as_u64).and_then(|n| u32::try_from(n).ok());
    let (Some(a), Some(b), 2) = (deg(0), deg(1), bd.len()) else {
        return Err(invalid("bidegree must be two naturals"));
    };
    let mut terms = Vec::new();
    for t in array(field(v, "terms")?, "terms")? {
        let m = Monomial::new(exponents(field(t, "p")?)?, exponents(field(t, "l")?)?);
        if m.bidegree() != (a, b) {
            return Err(invalid(format!("term {t} does not have bidegree ({a},{b})")));
        }
        terms.push((m, parse_scalar(field(t, "c")?)?));
    }
    Ok(BiForm::from_terms((a, b), terms))
}

pub fn parse_binary_form(v: &Value) -> Result<BinaryForm<Q>, CliError> {
    let coeffs: Vec<Q> = array(field(v, "coeffs")?, "coeffs")?.iter().map(parse_scalar).collect::<Result<_, _>>()?;
    if coeffs.is_empty() {
        return Err(invalid("a binary form needs at least one coefficient"));
    }
    if let Some(d) = v.get("degree") {
        if d.as_u64() != Some(coeffs.len() as u64 - 1) {
            return Err(invalid("degree does not match the number of coefficients"));
        }
    }
    Ok(BinaryForm::new(coeffs))
}

/// A form given directly, under a `"surface"` key, or as the `"member"` that `mk-surface` emits.
pub fn parse_surface_document(v: &Value) -> Result<BiForm<Q>, CliError> {
    parse_biform(v.get("surface").or_else(|| v.get("member")).unwrap_or(v))
}

/// A conic given directly or under a `"conic"` key.
pub fn parse_conic_document(v: &Value) -> Result<Conic<Q>, CliError> {
    parse_conic(v.get("conic").unwrap_or(v))
}

/// A list of conics, bare or under a `"conics"` key.
pub fn parse_conics_document(v: &Value) -> Result<Vec<Conic<Q>>, CliError> {
    array(v.get("conics").unwrap_or(v), "conics")?.iter().map(parse_conic).collect()
}

/// `{"forms": [f0, f1, f2]}` or a bare array of three forms.
pub fn parse_forms_document(v: &Value) -> Result<[BinaryForm<Q>; 3], CliError> {
    let forms: Vec<BinaryForm<Q>> =
        array(v.get("forms").unwrap_or(v), "forms")?.iter().map(parse_binary_form).collect::<Result<_, _>>()?;
    forms.try_into().map_err(|_| invalid("expected exactly three forms"))
}

