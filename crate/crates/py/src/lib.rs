//! Python bindings: fields, cyclotomic cosets, quadratic forms, BCH parameters,
//! inner distributions and weight enumerators.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qbch::oracle::acceptance::{run_acceptance, Grid};
use qbch::oracle::{exhaustive_weight_distribution, DEFAULT_WORD_BUDGET};
use qbch::scheme::DEFAULT_FORM_BUDGET;
use qbch::{CodeFamily, CodeFamilySpec, Distance, Elem, FieldContext, FieldParams, FormFamily, Sign};

fn err(e: qbch::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn context(q: u64, m: u32) -> PyResult<FieldContext> {
    FieldContext::new(FieldParams::from_q(q, m).map_err(err)?).map_err(err)
}

fn family(name: &str) -> PyResult<CodeFamily> {
    CodeFamily::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown family {name:?}")))
}

/// `F_{q^m}` with elements coded as integers: the coordinate vector in the
/// polynomial basis, read as base-`q` digits with the constant term lowest.
#[pyclass(frozen, module = "qbch")]
struct Field {
    ctx: FieldContext,
}

impl Field {
    fn elem(&self, x: u64) -> PyResult<Elem> {
        if x >= self.ctx.order() {
            return Err(PyValueError::new_err(format!("{x} is not an element of F_{}", self.ctx.order())));
        }
        Ok(Elem(x as u32))
    }
}

#[pymethods]
impl Field {
    #[new]
    fn new(q: u64, m: u32) -> PyResult<Self> {
        Ok(Field { ctx: context(q, m)? })
    }

    #[getter]
    fn q(&self) -> u64 {
        self.ctx.q()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.ctx.order()
    }

    /// Code length `(q^m - 1)/2`.
    #[getter]
    fn n(&self) -> u64 {
        self.ctx.n()
    }

    /// Coefficients of the defining polynomial, constant term first.
    #[getter]
    fn modulus(&self) -> Vec<u64> {
        self.ctx.modulus().to_vec()
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.ctx.add(self.elem(a)?, self.elem(b)?).0 as u64)
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.ctx.mul(self.elem(a)?, self.elem(b)?).0 as u64)
    }

    fn inv(&self, a: u64) -> PyResult<u64> {
        Ok(self.ctx.inv(self.elem(a)?).map_err(err)?.0 as u64)
    }

    fn alpha_pow(&self, k: i64) -> u64 {
        self.ctx.alpha_pow(k).0 as u64
    }

    fn log(&self, a: u64) -> PyResult<Option<u32>> {
        Ok(self.ctx.log(self.elem(a)?))
    }

    fn trace(&self, a: u64) -> PyResult<u16> {
        Ok(self.ctx.trace(self.elem(a)?))
    }

    /// `Q(x) = Tr(sum a_k x^(q^k+1))` for `terms = [(k, a_k), ...]`.
    fn quad_form(&self, terms: Vec<(u32, u64)>) -> PyResult<QuadForm> {
        let terms: Vec<(u32, Elem)> = terms.into_iter().map(|(k, a)| Ok((k, self.elem(a)?))).collect::<PyResult<_>>()?;
        Ok(QuadForm { ctx: self.ctx.clone(), form: qbch::QuadForm::new(&self.ctx, &terms) })
    }

    fn __repr__(&self) -> String {
        format!("Field(q={}, m={})", self.ctx.q(), self.ctx.m())
    }
}

#[pyclass(frozen, module = "qbch")]
struct QuadForm {
    ctx: FieldContext,
    form: qbch::QuadForm,
}

#[pymethods]
impl QuadForm {
    fn __call__(&self, x: u64) -> PyResult<u16> {
        if x >= self.ctx.order() {
            return Err(PyValueError::new_err(format!("{x} is not a field element")));
        }
        Ok(self.form.eval(&self.ctx, Elem(x as u32)))
    }

    /// `(rank, tau)` with `tau` in `{1, -1}`, or `None` for the zero form.
    fn rank_and_type(&self) -> (usize, Option<i8>) {
        let rt = self.form.rank_and_type(&self.ctx);
        (rt.rank, rt.tau.map(Sign::value))
    }

    /// Gram matrix of the polar form in the basis `1, alpha, ..., alpha^(m-1)`.
    fn gram(&self) -> Vec<Vec<u16>> {
        let g = self.form.gram(&self.ctx);
        g.entries().chunks(g.dim().max(1)).map(<[u16]>::to_vec).collect()
    }

    /// Number of `x` with `Q(x) = b`.
    fn count_solutions(&self, b: u16) -> PyResult<u64> {
        if b as usize >= self.ctx.q() as usize {
            return Err(PyValueError::new_err(format!("{b} is not in F_{}", self.ctx.q())));
        }
        Ok(self.form.count_solutions(&self.ctx, b))
    }
}

/// Parameters of the BCH code with designed distance `delta_i`.
#[pyclass(frozen, get_all, module = "qbch")]
struct BchCode {
    q: u64,
    m: u32,
    i: u32,
    n: u64,
    k: u64,
    delta: u64,
    d_b: u64,
    h: u32,
    family: String,
    /// Exact minimum distance when it was enumerated.
    d: Option<u64>,
    /// `(lower, upper)` bracket on the minimum distance.
    d_bounds: (u64, u64),
    /// Generator polynomial coefficients, constant term first.
    generator: Vec<u16>,
}

#[pymethods]
impl BchCode {
    #[new]
    #[pyo3(signature = (q, m, i, word_budget = DEFAULT_WORD_BUDGET))]
    fn new(q: u64, m: u32, i: u32, word_budget: u64) -> PyResult<Self> {
        let p = qbch::bch_parameters(&context(q, m)?, i, word_budget).map_err(err)?;
        let (d, d_bounds) = match p.distance {
            Distance::Exact(d) => (Some(d), (d, d)),
            Distance::Bracket { lower, upper } => (None, (lower, upper)),
        };
        Ok(BchCode {
            q,
            m,
            i,
            n: p.n,
            k: p.k,
            delta: p.delta,
            d_b: p.d_b,
            h: p.h,
            family: p.family.name().to_string(),
            d,
            d_bounds,
            generator: p.generator.coeffs().to_vec(),
        })
    }

    fn __repr__(&self) -> String {
        format!("BchCode(q={}, m={}, i={}: [{}, {}, {}])", self.q, self.m, self.i, self.n, self.k, self.delta)
    }
}

/// The `q`-cyclotomic cosets modulo `n` as `(leader, elements)` pairs.
#[pyfunction]
fn cosets(q: u64, n: u64) -> PyResult<Vec<(u64, Vec<u64>)>> {
    let t = qbch::CosetTable::new(q, n).map_err(err)?;
    Ok(t.cosets().iter().map(|c| (c.leader, c.elements.clone())).collect())
}

/// Coset leaders modulo `(q^m - 1)/2`, largest first.
#[pyfunction]
fn coset_leaders(q: u64, m: u32) -> PyResult<Vec<u64>> {
    let mut l = qbch::CosetTable::for_field(q, m).map_err(err)?.leaders();
    l.reverse();
    Ok(l)
}

/// Closed-form `delta_i`, the `i`-th largest coset leader.
#[pyfunction]
fn delta(q: u64, m: u32, i: u32) -> PyResult<u64> {
    qbch::delta_formula(q, m, i).map_err(err)
}

/// Inner distribution of the form family starting at `h`, keyed by
/// `(rank, tau)`; the zero form is `(0, 0)`.
#[pyfunction]
#[pyo3(signature = (q, m, h, oracle = false, form_budget = DEFAULT_FORM_BUDGET))]
fn inner_distribution(q: u64, m: u32, h: u32, oracle: bool, form_budget: u64) -> PyResult<BTreeMap<(u32, i8), BigInt>> {
    let ctx = context(q, m)?;
    let d = if oracle {
        qbch::enumerate_inner_dist(&ctx, &FormFamily::from_h(m, h).map_err(err)?, form_budget)
    } else {
        qbch::predicted_inner_dist(q, m, h)
    }
    .map_err(err)?;
    let mut out = BTreeMap::from([((0, 0), d.a0().clone())]);
    out.extend(d.entries().map(|(r, t, a)| ((r, t.value()), a.clone())));
    Ok(out)
}

/// Weight enumerator `{weight: count}` of a code family
/// (`"c1"`, `"c2"`, `"c1-tilde"` or `"c2-tilde"`).
#[pyfunction]
#[pyo3(signature = (q, m, h, family, oracle = false, word_budget = DEFAULT_WORD_BUDGET))]
fn weight_enumerator(q: u64, m: u32, h: u32, family: &str, oracle: bool, word_budget: u64) -> PyResult<BTreeMap<u64, BigUint>> {
    let family = self::family(family)?;
    let w = if oracle {
        let spec = CodeFamilySpec::new(family, q, m, h).map_err(err)?;
        exhaustive_weight_distribution(&context(q, m)?, &spec, word_budget)
    } else {
        qbch::full_enumerator(q, m, h, family)
    }
    .map_err(err)?;
    Ok(w.pairs().map(|(wt, c)| (wt, c.clone())).collect())
}

/// Runs the acceptance checks on a JSON grid (the standard grid when `None`)
/// and returns `(all_passed, summary_lines)`.
#[pyfunction]
#[pyo3(signature = (grid = None))]
fn verify(py: Python<'_>, grid: Option<&str>) -> PyResult<(bool, Vec<String>)> {
    let grid: Grid = match grid {
        None => Grid::standard(),
        Some(text) => serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?,
    };
    let report = py.detach(|| run_acceptance(&grid));
    let mut lines: Vec<String> = report.failures().map(ToString::to_string).collect();
    lines.extend(report.summaries().iter().map(ToString::to_string));
    Ok((report.all_passed(), lines))
}

#[pymodule(name = "qbch")]
fn qbch_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_class::<QuadForm>()?;
    m.add_class::<BchCode>()?;
    m.add_function(wrap_pyfunction!(cosets, m)?)?;
    m.add_function(wrap_pyfunction!(coset_leaders, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(inner_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(weight_enumerator, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
