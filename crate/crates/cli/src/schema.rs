//! The JSON file format.
//!
//! Every document is an object with `"schema": "<kind>/1"` and `"field"`.
//! Linear maps are written as the list of images of the basis vectors, so
//! a map `X → Y` is `dim X` arrays of `dim Y` scalars. Maps into a balanced
//! tensor product are written on representatives in the plain tensor
//! product, which keeps files independent of how the quotient is
//! coordinatized. A nested structure may be replaced by a relative path to
//! a file holding it.

use std::fs;
use std::path::{Path, PathBuf};

use doiko_core::bialgebroid::Bialgebroid;
use doiko_core::exactlin::Matrix;
use doiko_core::{
    Action, BalancedTensor, Bimodule, ComoduleAlgebra, Coring, DkDatum, DkModule, Field, FinAlgebra, FinCoalgebra,
    ModuleCoalgebra, StructureError, Subspace, Vector, WeakComoduleAlgebra, WeakCoringIso, WeakDkDatum, WeakHopf,
    WeakModuleCoalgebra,
};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub type Object = Map<String, Value>;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{context}: missing key `{key}`")]
    Missing { context: String, key: String },
    #[error("{context}: key `{key}`: {message}")]
    Invalid { context: String, key: String, message: String },
    #[error("{context}: expected schema `{expected}`, found `{found}`")]
    Kind { context: String, expected: String, found: String },
    #[error("{context}: field `{found}` does not match `{expected}`")]
    Field { context: String, expected: String, found: String },
    #[error("{context}: {source}")]
    Structure { context: String, source: StructureError },
}

pub type Result<T> = std::result::Result<T, SchemaError>;

fn kind_tag(kind: &str) -> String {
    format!("{kind}/1")
}

// ---------------------------------------------------------------- writing

fn header<F: Field>(kind: &str) -> Object {
    let mut obj = Object::new();
    obj.insert("schema".into(), json!(kind_tag(kind)));
    obj.insert("field".into(), json!(F::tag()));
    obj
}

fn scalars<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Columns of `m`, one array per basis vector of the domain.
fn map_value<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(m.columns().iter().map(|c| scalars(c)).collect())
}

fn ops_value<F: Field>(a: &Action<F>) -> Value {
    Value::Array(a.ops().iter().map(map_value).collect())
}

/// `m` composed with the section of the quotient, so it lands in the plain tensor.
fn lifted<F: Field>(tensor: &BalancedTensor<F>, m: &Matrix<F>) -> Matrix<F> {
    tensor.quotient().section().mul(m)
}

fn put_algebra<F: Field>(obj: &mut Object, a: &FinAlgebra<F>) {
    let n = a.dim();
    obj.insert("dim".into(), json!(n));
    obj.insert("basis".into(), json!(a.basis_names()));
    let mult: Vec<Value> =
        (0..n).map(|i| Value::Array((0..n).map(|j| scalars(&a.basis_product(i, j))).collect())).collect();
    obj.insert("mult".into(), Value::Array(mult));
    obj.insert("unit".into(), scalars(a.unit()));
}

pub fn algebra_json<F: Field>(a: &FinAlgebra<F>) -> Object {
    let mut obj = header::<F>("algebra");
    put_algebra(&mut obj, a);
    obj
}

fn put_coalgebra<F: Field>(obj: &mut Object, c: &FinCoalgebra<F>) {
    obj.insert("comult".into(), map_value(&c.comult));
    obj.insert("counit".into(), scalars(c.counit.row(0)));
}

pub fn weak_hopf_json<F: Field>(h: &WeakHopf<F>) -> Object {
    let mut obj = header::<F>("weak-hopf");
    put_algebra(&mut obj, &h.algebra);
    put_coalgebra(&mut obj, &h.coalgebra);
    obj.insert("antipode".into(), map_value(&h.antipode));
    obj.insert("antipode_inv".into(), map_value(&h.antipode_inv));
    obj
}

pub fn weak_bialgebra_json<F: Field>(a: &FinAlgebra<F>, c: &FinCoalgebra<F>) -> Object {
    let mut obj = header::<F>("weak-bialgebra");
    put_algebra(&mut obj, a);
    put_coalgebra(&mut obj, c);
    obj
}

/// A separability idempotent of the base and a Frobenius functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separability<F> {
    pub idempotent: Vector<F>,
    pub functional: Matrix<F>,
}

pub fn bialgebroid_json<F: Field>(b: &Bialgebroid<F>, sep: Option<&Separability<F>>) -> Object {
    let mut obj = header::<F>("bialgebroid");
    put_algebra(&mut obj, &b.total);
    obj.insert("base".into(), Value::Object(algebra_json(&b.base)));
    obj.insert("source".into(), map_value(&b.source));
    obj.insert("target".into(), map_value(&b.target));
    obj.insert("comult".into(), map_value(&lifted(&b.coring.tensor, &b.coring.comult)));
    obj.insert("counit".into(), map_value(&b.coring.counit));
    if let Some(s) = sep {
        let mut inner = Object::new();
        inner.insert("idempotent".into(), scalars(&s.idempotent));
        inner.insert("functional".into(), scalars(s.functional.row(0)));
        obj.insert("separability".into(), Value::Object(inner));
    }
    obj
}

pub fn coring_json<F: Field>(c: &Coring<F>) -> Object {
    let mut obj = header::<F>("coring");
    obj.insert("dim".into(), json!(c.dim()));
    obj.insert("base".into(), Value::Object(algebra_json(&c.base)));
    obj.insert("left".into(), ops_value(&c.bimodule.left));
    obj.insert("right".into(), ops_value(&c.bimodule.right));
    obj.insert("comult".into(), map_value(&lifted(&c.tensor, &c.comult)));
    obj.insert("counit".into(), map_value(&c.counit));
    obj
}

fn put_comodule_algebra<F: Field>(obj: &mut Object, a: &ComoduleAlgebra<F>) {
    put_algebra(obj, &a.algebra);
    obj.insert("source".into(), map_value(&a.source));
    obj.insert("coaction".into(), map_value(&lifted(&a.tensor, &a.coaction)));
}

fn put_module_coalgebra<F: Field>(obj: &mut Object, c: &ModuleCoalgebra<F>) {
    obj.insert("dim".into(), json!(c.dim()));
    obj.insert("action".into(), ops_value(&c.action));
    obj.insert("comult".into(), map_value(&lifted(&c.coring.tensor, &c.coring.comult)));
    obj.insert("counit".into(), map_value(&c.coring.counit));
}

fn with_parent(mut obj: Object, key: &str, parent: Object) -> Object {
    obj.insert(key.into(), Value::Object(parent));
    obj
}

pub fn comodule_algebra_json<F: Field>(b: &Bialgebroid<F>, a: &ComoduleAlgebra<F>) -> Object {
    let mut obj = with_parent(header::<F>("comodule-algebra"), "bialgebroid", bialgebroid_json(b, None));
    put_comodule_algebra(&mut obj, a);
    obj
}

pub fn module_coalgebra_json<F: Field>(b: &Bialgebroid<F>, c: &ModuleCoalgebra<F>) -> Object {
    let mut obj = with_parent(header::<F>("module-coalgebra"), "bialgebroid", bialgebroid_json(b, None));
    put_module_coalgebra(&mut obj, c);
    obj
}

pub fn dk_datum_json<F: Field>(d: &DkDatum<F>) -> Object {
    let mut obj = with_parent(header::<F>("dk-datum"), "bialgebroid", bialgebroid_json(&d.bialgebroid, None));
    let mut a = header::<F>("comodule-algebra");
    put_comodule_algebra(&mut a, &d.algebra);
    let mut c = header::<F>("module-coalgebra");
    put_module_coalgebra(&mut c, &d.coalgebra);
    obj.insert("algebra".into(), Value::Object(a));
    obj.insert("coalgebra".into(), Value::Object(c));
    obj
}

pub fn dk_module_json<F: Field>(d: &DkDatum<F>, m: &DkModule<F>) -> Object {
    let mut obj = with_parent(header::<F>("dk-module"), "datum", dk_datum_json(d));
    obj.insert("dim".into(), json!(m.dim()));
    obj.insert("action".into(), ops_value(&m.action));
    obj.insert("coaction".into(), map_value(&lifted(&m.tensor, &m.coaction)));
    obj
}

fn put_weak_comodule_algebra<F: Field>(obj: &mut Object, a: &WeakComoduleAlgebra<F>) {
    put_algebra(obj, &a.algebra);
    obj.insert("coaction".into(), map_value(&a.coaction));
}

fn put_weak_module_coalgebra<F: Field>(obj: &mut Object, c: &WeakModuleCoalgebra<F>) {
    obj.insert("dim".into(), json!(c.dim()));
    obj.insert("action".into(), ops_value(&c.action));
    put_coalgebra(obj, &c.coalgebra);
}

pub fn weak_comodule_algebra_json<F: Field>(h: &WeakHopf<F>, a: &WeakComoduleAlgebra<F>) -> Object {
    let mut obj = with_parent(header::<F>("weak-comodule-algebra"), "hopf", weak_hopf_json(h));
    put_weak_comodule_algebra(&mut obj, a);
    obj
}

pub fn weak_module_coalgebra_json<F: Field>(h: &WeakHopf<F>, c: &WeakModuleCoalgebra<F>) -> Object {
    let mut obj = with_parent(header::<F>("weak-module-coalgebra"), "hopf", weak_hopf_json(h));
    put_weak_module_coalgebra(&mut obj, c);
    obj
}

pub fn weak_dk_datum_json<F: Field>(d: &WeakDkDatum<F>) -> Object {
    let mut obj = with_parent(header::<F>("weak-dk-datum"), "hopf", weak_hopf_json(&d.hopf));
    let mut a = header::<F>("weak-comodule-algebra");
    put_weak_comodule_algebra(&mut a, &d.algebra);
    let mut c = header::<F>("weak-module-coalgebra");
    put_weak_module_coalgebra(&mut c, &d.coalgebra);
    obj.insert("algebra".into(), Value::Object(a));
    obj.insert("coalgebra".into(), Value::Object(c));
    obj
}

pub fn weak_coring_iso_json<F: Field>(d: &WeakDkDatum<F>, iso: &WeakCoringIso<F>) -> Object {
    let mut obj = with_parent(header::<F>("weak-coring-iso"), "datum", weak_dk_datum_json(d));
    obj.insert("dim".into(), json!(iso.dim()));
    obj.insert("projector".into(), map_value(&iso.projector));
    obj.insert("image".into(), Value::Array(iso.image.basis().iter().map(|v| scalars(v)).collect()));
    obj.insert("theta".into(), map_value(&iso.theta));
    obj.insert("theta_inv".into(), map_value(&iso.theta_inv));
    obj
}

/// A separability certificate in plain tensor coordinates: an element of
/// `C ⊗ A`, or a map `C ⊗ C → A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate<F> {
    Induction(Vector<F>),
    Forgetful(Matrix<F>),
}

pub fn certificate_json<F: Field>(c: &Certificate<F>) -> Object {
    let mut obj = header::<F>("certificate");
    match c {
        Certificate::Induction(e) => {
            obj.insert("kind".into(), json!("induction"));
            obj.insert("element".into(), scalars(e));
        }
        Certificate::Forgetful(g) => {
            obj.insert("kind".into(), json!("forgetful"));
            obj.insert("map".into(), map_value(g));
        }
    }
    obj
}

/// Indented JSON with arrays of scalars kept on one line, ending in a newline.
pub fn render(obj: &Object) -> String {
    let mut out = String::new();
    write_value(&mut out, &Value::Object(obj.clone()), 0);
    out.push('\n');
    out
}

fn leaf(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&leaf(&Value::String(key.clone())));
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, item, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(leaf).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&leaf(other)),
    }
}

// ---------------------------------------------------------------- reading

/// A JSON object being read, with the directory used to resolve nested
/// file references and a path-like context for error messages.
#[derive(Debug, Clone)]
pub struct Doc {
    obj: Object,
    dir: PathBuf,
    context: String,
}

pub fn load(path: &Path) -> Result<Doc> {
    let text = fs::read_to_string(path).map_err(|source| SchemaError::Io { path: path.to_path_buf(), source })?;
    let value: Value =
        serde_json::from_str(&text).map_err(|source| SchemaError::Json { path: path.to_path_buf(), source })?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Doc::from_value(value, dir, path.display().to_string())
}

impl Doc {
    pub fn from_value(value: Value, dir: PathBuf, context: String) -> Result<Doc> {
        match value {
            Value::Object(obj) => Ok(Doc { obj, dir, context }),
            _ => Err(SchemaError::Invalid { context, key: "".into(), message: "document is not an object".into() }),
        }
    }

    pub fn from_object(obj: Object) -> Doc {
        Doc { obj, dir: PathBuf::new(), context: "<memory>".into() }
    }

    pub fn context(&self) -> &str {
        &self.context
    }

    fn invalid(&self, key: &str, message: impl Into<String>) -> SchemaError {
        SchemaError::Invalid { context: self.context.clone(), key: key.into(), message: message.into() }
    }

    fn structure(&self, source: StructureError) -> SchemaError {
        SchemaError::Structure { context: self.context.clone(), source }
    }

    fn get(&self, key: &str) -> Result<&Value> {
        self.obj.get(key).ok_or_else(|| SchemaError::Missing { context: self.context.clone(), key: key.into() })
    }

    fn str(&self, key: &str) -> Result<&str> {
        self.get(key)?.as_str().ok_or_else(|| self.invalid(key, "expected a string"))
    }

    /// The kind named by `"schema"`, without the version suffix.
    pub fn kind(&self) -> Result<&str> {
        let tag = self.str("schema")?;
        tag.strip_suffix("/1").ok_or_else(|| self.invalid("schema", format!("unsupported schema `{tag}`")))
    }

    pub fn field_tag(&self) -> Result<&str> {
        self.str("field")
    }

    /// Fails unless this is a `kind` document over `F`.
    pub fn expect<F: Field>(&self, kind: &str) -> Result<()> {
        let found = self.kind()?;
        if found != kind {
            return Err(SchemaError::Kind {
                context: self.context.clone(),
                expected: kind_tag(kind),
                found: kind_tag(found),
            });
        }
        let field = self.field_tag()?;
        if field != F::tag() {
            return Err(SchemaError::Field { context: self.context.clone(), expected: F::tag(), found: field.into() });
        }
        Ok(())
    }

    pub fn has(&self, key: &str) -> bool {
        self.obj.contains_key(key)
    }

    /// A nested object, inline or as a path relative to this document.
    pub fn nested(&self, key: &str) -> Result<Doc> {
        match self.get(key)? {
            Value::String(rel) => load(&self.dir.join(rel)),
            Value::Object(obj) => {
                Ok(Doc { obj: obj.clone(), dir: self.dir.clone(), context: format!("{}.{key}", self.context) })
            }
            _ => Err(self.invalid(key, "expected an object or a file path")),
        }
    }

    fn usize(&self, key: &str) -> Result<usize> {
        self.get(key)?
            .as_u64()
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| self.invalid(key, "expected a non-negative integer"))
    }

    fn scalar<F: Field>(&self, key: &str, v: &Value) -> Result<F> {
        let parsed = match v {
            Value::String(s) => F::parse(s),
            Value::Number(n) if n.is_i64() || n.is_u64() => F::parse(&n.to_string()),
            _ => return Err(self.invalid(key, format!("expected a scalar string, found {v}"))),
        };
        parsed.map_err(|e| self.invalid(key, e.to_string()))
    }

    fn vector_of<F: Field>(&self, key: &str, v: &Value, len: usize) -> Result<Vector<F>> {
        let items = v.as_array().ok_or_else(|| self.invalid(key, "expected an array of scalars"))?;
        if items.len() != len {
            return Err(self.invalid(key, format!("expected {len} scalars, found {}", items.len())));
        }
        items.iter().map(|x| self.scalar(key, x)).collect()
    }

    fn vector<F: Field>(&self, key: &str, len: usize) -> Result<Vector<F>> {
        self.vector_of(key, self.get(key)?, len)
    }

    fn map_of<F: Field>(&self, key: &str, v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
        let items = v.as_array().ok_or_else(|| self.invalid(key, "expected an array of images"))?;
        if items.len() != cols {
            return Err(self.invalid(key, format!("expected {cols} images, found {}", items.len())));
        }
        let columns = items.iter().map(|c| self.vector_of(key, c, rows)).collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(rows, &columns).map_err(|e| self.invalid(key, e.to_string()))
    }

    /// A map from a space of dimension `cols` into one of dimension `rows`.
    fn map<F: Field>(&self, key: &str, rows: usize, cols: usize) -> Result<Matrix<F>> {
        self.map_of(key, self.get(key)?, rows, cols)
    }

    /// One operator on a space of dimension `dim` per basis element of an
    /// algebra of dimension `arity`.
    fn action<F: Field>(&self, key: &str, dim: usize, arity: usize) -> Result<Action<F>> {
        let items = self.get(key)?.as_array().ok_or_else(|| self.invalid(key, "expected an array of operators"))?;
        if items.len() != arity {
            return Err(self.invalid(key, format!("expected {arity} operators, found {}", items.len())));
        }
        let ops = items.iter().map(|m| self.map_of(key, m, dim, dim)).collect::<Result<Vec<_>>>()?;
        Action::new(dim, ops).map_err(|e| self.structure(e))
    }

    fn algebra_body<F: Field>(&self) -> Result<FinAlgebra<F>> {
        let n = self.usize("dim")?;
        let basis = match self.get("basis")? {
            Value::Array(items) => items
                .iter()
                .map(|x| x.as_str().map(str::to_string))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| self.invalid("basis", "expected strings"))?,
            _ => return Err(self.invalid("basis", "expected an array of names")),
        };
        if basis.len() != n {
            return Err(self.invalid("basis", format!("expected {n} names, found {}", basis.len())));
        }
        let rows = self.get("mult")?.as_array().ok_or_else(|| self.invalid("mult", "expected an array"))?;
        if rows.len() != n {
            return Err(self.invalid("mult", format!("expected {n} rows, found {}", rows.len())));
        }
        let mut products = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_array().ok_or_else(|| self.invalid("mult", "expected rows of products"))?;
            if row.len() != n {
                return Err(self.invalid("mult", format!("expected {n} products per row, found {}", row.len())));
            }
            for p in row {
                products.push(self.vector_of("mult", p, n)?);
            }
        }
        let unit = self.vector("unit", n)?;
        FinAlgebra::new(basis, products, unit).map_err(|e| self.structure(e))
    }

    fn coalgebra_body<F: Field>(&self, n: usize) -> Result<FinCoalgebra<F>> {
        let comult = self.map("comult", n * n, n)?;
        let counit = Matrix::from_rows(1, n, vec![self.vector("counit", n)?])
            .map_err(|e| self.invalid("counit", e.to_string()))?;
        FinCoalgebra::new(comult, counit).map_err(|e| self.structure(e))
    }

    pub fn algebra<F: Field>(&self) -> Result<FinAlgebra<F>> {
        self.expect::<F>("algebra")?;
        self.algebra_body()
    }

    pub fn weak_hopf<F: Field>(&self) -> Result<WeakHopf<F>> {
        self.expect::<F>("weak-hopf")?;
        let algebra = self.algebra_body()?;
        let n = algebra.dim();
        let coalgebra = self.coalgebra_body(n)?;
        let antipode = self.map("antipode", n, n)?;
        let inverse = if self.has("antipode_inv") { Some(self.map("antipode_inv", n, n)?) } else { None };
        WeakHopf::new(algebra, coalgebra, antipode, inverse).map_err(|e| self.structure(e))
    }

    pub fn weak_bialgebra<F: Field>(&self) -> Result<(FinAlgebra<F>, FinCoalgebra<F>)> {
        self.expect::<F>("weak-bialgebra")?;
        let algebra = self.algebra_body()?;
        let coalgebra = self.coalgebra_body(algebra.dim())?;
        Ok((algebra, coalgebra))
    }

    pub fn bialgebroid<F: Field>(&self) -> Result<(Bialgebroid<F>, Option<Separability<F>>)> {
        self.expect::<F>("bialgebroid")?;
        let total = self.algebra_body()?;
        let base = self.nested("base")?.algebra::<F>()?;
        let (n, r) = (total.dim(), base.dim());
        let source = self.map("source", n, r)?;
        let target = self.map("target", n, r)?;
        let comult = self.map("comult", n * n, n)?;
        let counit = self.map("counit", r, n)?;
        let sep = if self.has("separability") {
            let s = self.nested("separability")?;
            let idempotent = s.vector("idempotent", r * r)?;
            let functional = Matrix::from_rows(1, r, vec![s.vector("functional", r)?])
                .map_err(|e| s.invalid("functional", e.to_string()))?;
            Some(Separability { idempotent, functional })
        } else {
            None
        };
        let b =
            Bialgebroid::from_ambient(base, total, source, target, &comult, counit).map_err(|e| self.structure(e))?;
        Ok((b, sep))
    }

    pub fn coring<F: Field>(&self) -> Result<Coring<F>> {
        self.expect::<F>("coring")?;
        let n = self.usize("dim")?;
        let base = self.nested("base")?.algebra::<F>()?;
        let r = base.dim();
        let bimodule =
            Bimodule::new(self.action("left", n, r)?, self.action("right", n, r)?).map_err(|e| self.structure(e))?;
        let comult = self.map("comult", n * n, n)?;
        let counit = self.map("counit", r, n)?;
        Coring::from_ambient(base, bimodule, &comult, counit).map_err(|e| self.structure(e))
    }

    fn comodule_algebra_body<F: Field>(&self, b: &Bialgebroid<F>) -> Result<ComoduleAlgebra<F>> {
        let algebra = self.algebra_body()?;
        let na = algebra.dim();
        let source = self.map("source", na, b.base_dim())?;
        let coaction = self.map("coaction", b.dim() * na, na)?;
        ComoduleAlgebra::from_ambient(b, algebra, source, &coaction).map_err(|e| self.structure(e))
    }

    fn module_coalgebra_body<F: Field>(&self, b: &Bialgebroid<F>) -> Result<ModuleCoalgebra<F>> {
        let n = self.usize("dim")?;
        let action = self.action("action", n, b.dim())?;
        let comult = self.map("comult", n * n, n)?;
        let counit = self.map("counit", b.base_dim(), n)?;
        ModuleCoalgebra::from_ambient(b, action, &comult, counit).map_err(|e| self.structure(e))
    }

    fn parent_bialgebroid<F: Field>(&self) -> Result<Bialgebroid<F>> {
        Ok(self.nested("bialgebroid")?.bialgebroid::<F>()?.0)
    }

    pub fn comodule_algebra<F: Field>(&self) -> Result<(Bialgebroid<F>, ComoduleAlgebra<F>)> {
        self.expect::<F>("comodule-algebra")?;
        let b = self.parent_bialgebroid()?;
        let a = self.comodule_algebra_body(&b)?;
        Ok((b, a))
    }

    pub fn module_coalgebra<F: Field>(&self) -> Result<(Bialgebroid<F>, ModuleCoalgebra<F>)> {
        self.expect::<F>("module-coalgebra")?;
        let b = self.parent_bialgebroid()?;
        let c = self.module_coalgebra_body(&b)?;
        Ok((b, c))
    }

    pub fn dk_datum<F: Field>(&self) -> Result<DkDatum<F>> {
        self.expect::<F>("dk-datum")?;
        let b = self.parent_bialgebroid()?;
        let a = self.nested("algebra")?;
        a.expect::<F>("comodule-algebra")?;
        let c = self.nested("coalgebra")?;
        c.expect::<F>("module-coalgebra")?;
        let algebra = a.comodule_algebra_body(&b)?;
        let coalgebra = c.module_coalgebra_body(&b)?;
        Ok(DkDatum { bialgebroid: b, algebra, coalgebra })
    }

    pub fn dk_module<F: Field>(&self) -> Result<(DkDatum<F>, DkModule<F>)> {
        self.expect::<F>("dk-module")?;
        let d = self.nested("datum")?.dk_datum::<F>()?;
        let n = self.usize("dim")?;
        let action = self.action("action", n, d.algebra.dim())?;
        let coaction = self.map("coaction", d.coalgebra.dim() * n, n)?;
        let m = DkModule::from_ambient(&d, action, &coaction).map_err(|e| self.structure(e))?;
        Ok((d, m))
    }

    fn weak_comodule_algebra_body<F: Field>(&self, h: &WeakHopf<F>) -> Result<WeakComoduleAlgebra<F>> {
        let algebra = self.algebra_body()?;
        let na = algebra.dim();
        let coaction = self.map("coaction", h.dim() * na, na)?;
        WeakComoduleAlgebra::new(h, algebra, coaction).map_err(|e| self.structure(e))
    }

    fn weak_module_coalgebra_body<F: Field>(&self, h: &WeakHopf<F>) -> Result<WeakModuleCoalgebra<F>> {
        let n = self.usize("dim")?;
        let action = self.action("action", n, h.dim())?;
        let coalgebra = self.coalgebra_body(n)?;
        WeakModuleCoalgebra::new(h, coalgebra, action).map_err(|e| self.structure(e))
    }

    pub fn weak_comodule_algebra<F: Field>(&self) -> Result<(WeakHopf<F>, WeakComoduleAlgebra<F>)> {
        self.expect::<F>("weak-comodule-algebra")?;
        let h = self.nested("hopf")?.weak_hopf::<F>()?;
        let a = self.weak_comodule_algebra_body(&h)?;
        Ok((h, a))
    }

    pub fn weak_module_coalgebra<F: Field>(&self) -> Result<(WeakHopf<F>, WeakModuleCoalgebra<F>)> {
        self.expect::<F>("weak-module-coalgebra")?;
        let h = self.nested("hopf")?.weak_hopf::<F>()?;
        let c = self.weak_module_coalgebra_body(&h)?;
        Ok((h, c))
    }

    pub fn weak_dk_datum<F: Field>(&self) -> Result<WeakDkDatum<F>> {
        self.expect::<F>("weak-dk-datum")?;
        let hopf = self.nested("hopf")?.weak_hopf::<F>()?;
        let a = self.nested("algebra")?;
        a.expect::<F>("weak-comodule-algebra")?;
        let c = self.nested("coalgebra")?;
        c.expect::<F>("weak-module-coalgebra")?;
        let algebra = a.weak_comodule_algebra_body(&hopf)?;
        let coalgebra = c.weak_module_coalgebra_body(&hopf)?;
        Ok(WeakDkDatum { hopf, algebra, coalgebra })
    }

    pub fn weak_coring_iso<F: Field>(&self) -> Result<(WeakDkDatum<F>, WeakCoringIso<F>)> {
        self.expect::<F>("weak-coring-iso")?;
        let d = self.nested("datum")?.weak_dk_datum::<F>()?;
        let amb = d.coalgebra.dim() * d.algebra.dim();
        let k = self.usize("dim")?;
        let projector = self.map("projector", amb, amb)?;
        let image = self.map("image", amb, k)?;
        let image = Subspace::span(amb, image.columns());
        if image.dim() != k {
            return Err(self.invalid("image", format!("spans a space of dim {}, expected {k}", image.dim())));
        }
        let theta = self.map("theta", k, k)?;
        let theta_inv = self.map("theta_inv", k, k)?;
        Ok((d, WeakCoringIso { projector, image, theta, theta_inv }))
    }

    /// A certificate for a datum with `C ⊗ A` of dimension `ca`, `C ⊗ C` of
    /// dimension `cc` and `A` of dimension `a`.
    pub fn certificate<F: Field>(&self, ca: usize, cc: usize, a: usize) -> Result<Certificate<F>> {
        self.expect::<F>("certificate")?;
        match self.str("kind")? {
            "induction" => Ok(Certificate::Induction(self.vector("element", ca)?)),
            "forgetful" => Ok(Certificate::Forgetful(self.map("map", a, cc)?)),
            other => Err(self.invalid("kind", format!("unknown certificate kind `{other}`"))),
        }
    }
}
