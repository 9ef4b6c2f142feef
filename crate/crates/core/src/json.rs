//! JSON encodings: rationals as "p/q" strings, complex numbers as
//! two-element [re, im] arrays, matrices as nested row-major arrays,
//! jets as {"r", "p", "coeffs"}.

use crate::hlambda::HLambdaElement;
use crate::jet::Jet;
use crate::matrix::Mat;
use crate::mu::MuVector;
use crate::orbit::ZMatrix;
use crate::partition::PartitionSpec;
use crate::perm::Perm;
use crate::scalar::{rat_from_str, rat_to_string, CoreError, Rat, Ring, Scalar};
use crate::weyl::WeylElement;
use crate::CharacterParams;
use num_complex::Complex64;
use serde_json::{json, Value};

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(rat_to_string(r)),
        Scalar::Complex(c) => json!([c.re, c.im]),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, CoreError> {
    match v {
        Value::String(s) => Ok(Scalar::Rational(rat_from_str(s)?)),
        Value::Number(n) => {
            // Bare integers read as exact rationals; anything else is a
            // complex double with zero imaginary part.
            if let Some(i) = n.as_i64() {
                Ok(Scalar::Rational(Rat::from_i64(i)))
            } else {
                Ok(Scalar::Complex(Complex64::new(
                    n.as_f64().ok_or_else(|| CoreError::Parse("bad number".into()))?,
                    0.0,
                )))
            }
        }
        Value::Array(a) if a.len() == 2 => {
            let re = a[0]
                .as_f64()
                .ok_or_else(|| CoreError::Parse("complex entries must be numbers".into()))?;
            let im = a[1]
                .as_f64()
                .ok_or_else(|| CoreError::Parse("complex entries must be numbers".into()))?;
            Ok(Scalar::Complex(Complex64::new(re, im)))
        }
        other => Err(CoreError::Parse(format!("cannot read scalar from {other}"))),
    }
}

pub fn complex_from_json(v: &Value) -> Result<Complex64, CoreError> {
    Ok(scalar_from_json(v)?.to_c64())
}

pub fn complex_to_json(c: Complex64) -> Value {
    json!([c.re, c.im])
}

pub fn rat_from_json(v: &Value) -> Result<Rat, CoreError> {
    match scalar_from_json(v)? {
        Scalar::Rational(r) => Ok(r),
        Scalar::Complex(_) => Err(CoreError::Parse("expected an exact rational".into())),
    }
}

pub fn rat_mat_to_json(m: &Mat<Rat>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| Value::String(rat_to_string(&m[(i, j)])))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn rat_mat_from_json(v: &Value) -> Result<Mat<Rat>, CoreError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CoreError::Parse("matrix must be an array of rows".into()))?;
    let nrows = rows.len();
    let mut entries = Vec::new();
    let mut ncols = None;
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| CoreError::Parse("matrix row must be an array".into()))?;
        match ncols {
            None => ncols = Some(cells.len()),
            Some(n) if n != cells.len() => {
                return Err(CoreError::Parse("ragged matrix rows".into()))
            }
            _ => {}
        }
        for c in cells {
            entries.push(rat_from_json(c)?);
        }
    }
    Mat::from_vec(nrows, ncols.unwrap_or(0), entries)
}

pub fn cmat_to_json(m: &Mat<Complex64>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| complex_to_json(m[(i, j)]))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn cmat_from_json(v: &Value) -> Result<Mat<Complex64>, CoreError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CoreError::Parse("matrix must be an array of rows".into()))?;
    let nrows = rows.len();
    let mut entries = Vec::new();
    let mut ncols = None;
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| CoreError::Parse("matrix row must be an array".into()))?;
        match ncols {
            None => ncols = Some(cells.len()),
            Some(n) if n != cells.len() => {
                return Err(CoreError::Parse("ragged matrix rows".into()))
            }
            _ => {}
        }
        for c in cells {
            entries.push(complex_from_json(c)?);
        }
    }
    Mat::from_vec(nrows, ncols.unwrap_or(0), entries)
}

pub fn jet_to_json(j: &Jet<Rat>) -> Value {
    json!({
        "r": j.r(),
        "p": j.p(),
        "coeffs": j.coeffs().iter().map(rat_mat_to_json).collect::<Vec<_>>(),
    })
}

pub fn jet_from_json(v: &Value) -> Result<Jet<Rat>, CoreError> {
    let r = v["r"]
        .as_u64()
        .ok_or_else(|| CoreError::Parse("jet needs an integer r".into()))? as usize;
    let p = v["p"]
        .as_u64()
        .ok_or_else(|| CoreError::Parse("jet needs an integer p".into()))? as usize;
    let coeffs = v["coeffs"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("jet needs a coeffs array".into()))?
        .iter()
        .map(rat_mat_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Jet::new(r, p, coeffs)
}

pub fn hlambda_to_json(h: &HLambdaElement<Rat>) -> Value {
    json!({
        "r": h.spec().r(),
        "parts": h.spec().parts(),
        "factors": h.factors().iter().map(jet_to_json).collect::<Vec<_>>(),
    })
}

pub fn hlambda_from_json(v: &Value) -> Result<HLambdaElement<Rat>, CoreError> {
    let spec = spec_from_json(v)?;
    let factors = v["factors"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("H element needs a factors array".into()))?
        .iter()
        .map(jet_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    HLambdaElement::new(spec, factors)
}

pub fn spec_from_json(v: &Value) -> Result<PartitionSpec, CoreError> {
    let r = v["r"]
        .as_u64()
        .ok_or_else(|| CoreError::Parse("need an integer r".into()))? as usize;
    let parts = v["parts"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("need a parts array".into()))?
        .iter()
        .map(|p| {
            p.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| CoreError::Parse("parts must be integers".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PartitionSpec::new(r, parts)
}

pub fn params_to_json(p: &CharacterParams) -> Value {
    json!({
        "r": p.spec().r(),
        "parts": p.spec().parts(),
        "m": p.m(),
        "alpha": p
            .alpha()
            .iter()
            .map(|block| Value::Array(block.iter().map(|c| complex_to_json(*c)).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn params_from_json(v: &Value) -> Result<CharacterParams, CoreError> {
    let spec = spec_from_json(v)?;
    let m = v["m"]
        .as_u64()
        .ok_or_else(|| CoreError::Parse("parameters need an integer m".into()))? as usize;
    let alpha = v["alpha"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("parameters need an alpha array".into()))?
        .iter()
        .map(|block| {
            block
                .as_array()
                .ok_or_else(|| CoreError::Parse("alpha blocks must be arrays".into()))?
                .iter()
                .map(complex_from_json)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    CharacterParams::new(spec, alpha, m)
}

fn mu_scalars_to_json<T: Ring>(m: &MuVector<T>, enc: impl Fn(&T) -> Value) -> Value {
    Value::Array(m.coeffs().iter().map(enc).collect())
}

pub fn weyl_rat_to_json(w: &WeylElement<Rat>) -> Value {
    weyl_to_json_with(w, |x| Value::String(rat_to_string(x)))
}

pub fn weyl_c64_to_json(w: &WeylElement<Complex64>) -> Value {
    weyl_to_json_with(w, |x| complex_to_json(*x))
}

fn weyl_to_json_with<T: Ring>(w: &WeylElement<T>, enc: impl Fn(&T) -> Value + Copy) -> Value {
    json!({
        "r": w.spec().r(),
        "parts": w.spec().parts(),
        "mus": w
            .mus()
            .iter()
            .map(|class| {
                Value::Array(class.iter().map(|m| mu_scalars_to_json(m, enc)).collect())
            })
            .collect::<Vec<_>>(),
        "sigma": w
            .sigma()
            .iter()
            .map(|s| Value::Array(s.image().iter().map(|&k| json!(k)).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn weyl_rat_from_json(v: &Value) -> Result<WeylElement<Rat>, CoreError> {
    let spec = spec_from_json(v)?;
    let classes = spec.classes();
    let mus_v = v["mus"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("Weyl element needs a mus array".into()))?;
    if mus_v.len() != classes.len() {
        return Err(CoreError::Parse(format!(
            "expected {} mu classes",
            classes.len()
        )));
    }
    let mut mus = Vec::new();
    for (i, class_v) in mus_v.iter().enumerate() {
        let slots = class_v
            .as_array()
            .ok_or_else(|| CoreError::Parse("mu class must be an array".into()))?;
        let mut class = Vec::new();
        for slot in slots {
            let coeffs = slot
                .as_array()
                .ok_or_else(|| CoreError::Parse("mu vector must be an array".into()))?
                .iter()
                .map(rat_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            class.push(MuVector::new(classes[i].part, coeffs)?);
        }
        mus.push(class);
    }
    let sigma = v["sigma"]
        .as_array()
        .ok_or_else(|| CoreError::Parse("Weyl element needs a sigma array".into()))?
        .iter()
        .map(|s| {
            let image = s
                .as_array()
                .ok_or_else(|| CoreError::Parse("sigma must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|k| k as usize)
                        .ok_or_else(|| CoreError::Parse("sigma entries must be integers".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Perm::new(image)
        })
        .collect::<Result<Vec<_>, _>>()?;
    WeylElement::new(spec, mus, sigma)
}

pub fn zmatrix_to_json(z: &ZMatrix) -> Value {
    json!({
        "r": z.spec().r(),
        "parts": z.spec().parts(),
        "data": rat_mat_to_json(z.data()),
    })
}

pub fn zmatrix_from_json(v: &Value) -> Result<ZMatrix, CoreError> {
    let spec = spec_from_json(v)?;
    let data = rat_mat_from_json(&v["data"])?;
    ZMatrix::new(spec, data)
}
