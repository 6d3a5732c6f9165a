//! Charts and tensor fields of valence (0,0), (1,0), (0,1), (1,1) and (0,2)
//! with polynomial components.
//!
//! Index convention, fixed everywhere: an endomorphism `F` stores `F^i_j`
//! at row `i` (upper, output index) and column `j`, so column `j` is the
//! image of `∂_j`. Bilinear forms store `G_ij` the same way.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{Poly, PolyMatrix, Rational, Vars};
use crate::error::{Error, Result};

#[derive(Debug)]
struct ChartData {
    name: String,
    coords: Vars,
}

/// A coordinate chart: a name and an ordered list of distinct coordinate
/// names. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Chart(Arc<ChartData>);

impl Chart {
    pub fn new<S: Into<String>>(name: S, coords: Vec<String>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::shape("chart needs at least one coordinate"));
        }
        for (i, c) in coords.iter().enumerate() {
            if coords[..i].contains(c) {
                return Err(Error::shape(format!("duplicate coordinate `{c}`")));
            }
        }
        Ok(Chart(Arc::new(ChartData {
            name: name.into(),
            coords: Arc::from(coords),
        })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.coords.len()
    }

    pub fn coords(&self) -> &Vars {
        &self.0.coords
    }

    pub fn index_of(&self, coord: &str) -> Option<usize> {
        self.0.coords.iter().position(|c| c == coord)
    }

    /// Parses a polynomial over this chart's coordinates.
    pub fn poly(&self, text: &str) -> Result<Poly> {
        Poly::parse(text, self.coords())
    }

    pub fn constant(&self, c: Rational) -> Poly {
        Poly::constant(self.coords(), c)
    }

    pub(crate) fn ensure_same(&self, other: &Chart) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ChartMismatch(
                self.name().to_string(),
                other.name().to_string(),
            ))
        }
    }
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.name == other.0.name && self.0.coords == other.0.coords)
    }
}

impl Eq for Chart {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Valence {
    Function,
    Vector,
    OneForm,
    Endo,
    Bilinear,
}

impl Valence {
    pub fn component_count(self, dim: usize) -> usize {
        match self {
            Valence::Function => 1,
            Valence::Vector | Valence::OneForm => dim,
            Valence::Endo | Valence::Bilinear => dim * dim,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Valence::Function => "(0,0)",
            Valence::Vector => "(1,0)",
            Valence::OneForm => "(0,1)",
            Valence::Endo => "(1,1)",
            Valence::Bilinear => "(0,2)",
        }
    }
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A point of a chart with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    chart: Chart,
    values: Vec<Rational>,
}

impl Point {
    pub fn new(chart: &Chart, values: Vec<Rational>) -> Result<Self> {
        if values.len() != chart.dim() {
            return Err(Error::shape(format!(
                "point with {} values on a chart of dimension {}",
                values.len(),
                chart.dim()
            )));
        }
        Ok(Point {
            chart: chart.clone(),
            values,
        })
    }

    pub fn from_map(chart: &Chart, map: &BTreeMap<String, Rational>) -> Result<Self> {
        let values = chart
            .coords()
            .iter()
            .map(|c| {
                map.get(c)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(c.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(Point {
            chart: chart.clone(),
            values,
        })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn to_map(&self) -> BTreeMap<String, Rational> {
        self.chart
            .coords()
            .iter()
            .cloned()
            .zip(self.values.iter().cloned())
            .collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chart
            .coords()
            .iter()
            .zip(&self.values)
            .map(|(c, v)| format!("{c}={}", crate::algebra::format_rational(v)))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A tensor field on a chart with polynomial components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorField {
    chart: Chart,
    valence: Valence,
    comps: Vec<Poly>,
}

impl TensorField {
    /// Components are re-read over the chart's coordinates; an entry that
    /// mentions any other variable is rejected.
    pub fn new(chart: &Chart, valence: Valence, comps: Vec<Poly>) -> Result<Self> {
        let expected = valence.component_count(chart.dim());
        if comps.len() != expected {
            return Err(Error::shape(format!(
                "{valence} field on a {}-dimensional chart needs {expected} components, got {}",
                chart.dim(),
                comps.len()
            )));
        }
        let comps = comps
            .into_iter()
            .map(|p| p.embed(chart.coords()))
            .collect::<Result<_>>()?;
        Ok(TensorField {
            chart: chart.clone(),
            valence,
            comps,
        })
    }

    pub fn zero(chart: &Chart, valence: Valence) -> Self {
        TensorField {
            chart: chart.clone(),
            valence,
            comps: vec![Poly::zero(chart.coords()); valence.component_count(chart.dim())],
        }
    }

    pub fn function(chart: &Chart, f: Poly) -> Result<Self> {
        Self::new(chart, Valence::Function, vec![f])
    }

    pub fn vector(chart: &Chart, comps: Vec<Poly>) -> Result<Self> {
        Self::new(chart, Valence::Vector, comps)
    }

    pub fn oneform(chart: &Chart, comps: Vec<Poly>) -> Result<Self> {
        Self::new(chart, Valence::OneForm, comps)
    }

    /// Endomorphism from its rows `F^i_·`.
    pub fn endo(chart: &Chart, rows: Vec<Vec<Poly>>) -> Result<Self> {
        Self::new(chart, Valence::Endo, flatten(chart, rows)?)
    }

    pub fn bilinear(chart: &Chart, rows: Vec<Vec<Poly>>) -> Result<Self> {
        Self::new(chart, Valence::Bilinear, flatten(chart, rows)?)
    }

    pub fn identity(chart: &Chart) -> Self {
        let mut t = Self::zero(chart, Valence::Endo);
        let m = chart.dim();
        for i in 0..m {
            t.comps[i * m + i] = Poly::one(chart.coords());
        }
        t
    }

    /// The coordinate vector field `∂_k`.
    pub fn coordinate_vector(chart: &Chart, k: usize) -> Self {
        let mut t = Self::zero(chart, Valence::Vector);
        t.comps[k] = Poly::one(chart.coords());
        t
    }

    /// The coordinate one-form `dx^k`.
    pub fn coordinate_form(chart: &Chart, k: usize) -> Self {
        let mut t = Self::zero(chart, Valence::OneForm);
        t.comps[k] = Poly::one(chart.coords());
        t
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn get(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    /// Entry `(i, j)` of a two-index field.
    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.comps[i * self.dim() + j]
    }

    /// The single component of a function.
    pub fn scalar(&self) -> &Poly {
        &self.comps[0]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub(crate) fn from_parts(chart: &Chart, valence: Valence, comps: Vec<Poly>) -> Self {
        debug_assert_eq!(comps.len(), valence.component_count(chart.dim()));
        TensorField {
            chart: chart.clone(),
            valence,
            comps,
        }
    }

    pub(crate) fn expect(&self, valence: Valence) -> Result<()> {
        if self.valence == valence {
            Ok(())
        } else {
            Err(Error::ValenceMismatch {
                expected: valence.label().to_string(),
                found: self.valence.label().to_string(),
            })
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<Self> {
        self.chart.ensure_same(&other.chart)?;
        other.expect(self.valence)?;
        Ok(Self::from_parts(
            &self.chart,
            self.valence,
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| f(a, b))
                .collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map(|p| p.scale(k))
    }

    /// Pointwise product with a function `f` (given by its polynomial).
    pub fn mul_function(&self, f: &Poly) -> Result<Self> {
        let f = f.embed(self.chart.coords())?;
        Ok(self.map(|p| p * &f))
    }

    pub(crate) fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::from_parts(
            &self.chart,
            self.valence,
            self.comps.iter().map(f).collect(),
        )
    }

    /// Re-reads a field on a chart whose coordinates include this chart's.
    pub fn embed(&self, chart: &Chart) -> Result<Self> {
        if chart.dim() != self.dim() && self.valence != Valence::Function {
            return Err(Error::shape("embedding changes the component shape"));
        }
        Self::new(chart, self.valence, self.comps.clone())
    }

    pub fn evaluate(&self, point: &Point) -> Result<Vec<Rational>> {
        self.chart.ensure_same(point.chart())?;
        Ok(self
            .comps
            .iter()
            .map(|p| p.eval_slice(point.values()))
            .collect())
    }

    /// Human label of component `idx`, e.g. `[b,a]` for `F^b_a`.
    pub fn component_label(&self, idx: usize) -> String {
        let c = self.chart.coords();
        let m = self.dim();
        match self.valence {
            Valence::Function => String::new(),
            Valence::Vector | Valence::OneForm => format!("[{}]", c[idx]),
            Valence::Endo | Valence::Bilinear => format!("[{},{}]", c[idx / m], c[idx % m]),
        }
    }

    /// Nonzero components with their labels.
    pub fn nonzero_components(&self) -> impl Iterator<Item = (String, &Poly)> {
        self.comps
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| (self.component_label(i), p))
    }

    pub fn to_matrix(&self) -> Result<PolyMatrix> {
        match self.valence {
            Valence::Endo | Valence::Bilinear => {
                PolyMatrix::new(self.dim(), self.dim(), self.comps.clone())
            }
            Valence::Vector => PolyMatrix::new(self.dim(), 1, self.comps.clone()),
            Valence::OneForm => PolyMatrix::new(1, self.dim(), self.comps.clone()),
            Valence::Function => PolyMatrix::new(1, 1, self.comps.clone()),
        }
    }

    pub fn from_matrix(chart: &Chart, valence: Valence, m: &PolyMatrix) -> Result<Self> {
        Self::new(chart, valence, m.entries().to_vec())
    }
}

fn flatten(chart: &Chart, rows: Vec<Vec<Poly>>) -> Result<Vec<Poly>> {
    let m = chart.dim();
    if rows.len() != m || rows.iter().any(|r| r.len() != m) {
        return Err(Error::shape(format!(
            "expected a {m}x{m} array of components"
        )));
    }
    Ok(rows.into_iter().flatten().collect())
}

impl fmt::Display for TensorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ps: &[Poly]| {
            ps.iter()
                .map(Poly::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self.valence {
            Valence::Function => write!(f, "{}", self.comps[0]),
            Valence::Vector | Valence::OneForm => write!(f, "({})", join(&self.comps)),
            Valence::Endo | Valence::Bilinear => {
                let m = self.dim();
                let rows: Vec<String> = self
                    .comps
                    .chunks(m)
                    .map(|r| format!("[{}]", join(r)))
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
        }
    }
}

fn sum_products<'a>(vars: &Vars, pairs: impl Iterator<Item = (&'a Poly, &'a Poly)>) -> Poly {
    let mut acc = Poly::zero(vars);
    for (a, b) in pairs {
        if !a.is_zero() && !b.is_zero() {
            acc = &acc + &(a * b);
        }
    }
    acc
}

fn same_chart(a: &TensorField, b: &TensorField) -> Result<()> {
    a.chart.ensure_same(&b.chart)
}

/// `(FX)^i = F^i_j X^j`.
pub fn endo_apply(f: &TensorField, x: &TensorField) -> Result<TensorField> {
    same_chart(f, x)?;
    f.expect(Valence::Endo)?;
    x.expect(Valence::Vector)?;
    let m = f.dim();
    let vars = f.chart.coords();
    let comps = (0..m)
        .map(|i| sum_products(vars, (0..m).map(|j| (f.at(i, j), x.get(j)))))
        .collect();
    Ok(TensorField::from_parts(&f.chart, Valence::Vector, comps))
}

/// The function `ω_i X^i`.
pub fn oneform_apply(w: &TensorField, x: &TensorField) -> Result<TensorField> {
    same_chart(w, x)?;
    w.expect(Valence::OneForm)?;
    x.expect(Valence::Vector)?;
    let s = sum_products(w.chart.coords(), w.comps.iter().zip(&x.comps));
    Ok(TensorField::from_parts(
        &w.chart,
        Valence::Function,
        vec![s],
    ))
}

/// `(F∘H)^i_j = F^i_k H^k_j`.
pub fn endo_compose(f: &TensorField, h: &TensorField) -> Result<TensorField> {
    same_chart(f, h)?;
    f.expect(Valence::Endo)?;
    h.expect(Valence::Endo)?;
    let m = f.dim();
    let vars = f.chart.coords();
    let mut comps = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            comps.push(sum_products(vars, (0..m).map(|k| (f.at(i, k), h.at(k, j)))));
        }
    }
    Ok(TensorField::from_parts(&f.chart, Valence::Endo, comps))
}

/// `(X⊗ω)^i_j = X^i ω_j`, the endomorphism `Y ↦ ω(Y)·X`.
pub fn outer(x: &TensorField, w: &TensorField) -> Result<TensorField> {
    same_chart(x, w)?;
    x.expect(Valence::Vector)?;
    w.expect(Valence::OneForm)?;
    let comps = x
        .comps
        .iter()
        .flat_map(|xi| w.comps.iter().map(move |wj| xi * wj))
        .collect();
    Ok(TensorField::from_parts(&x.chart, Valence::Endo, comps))
}

/// `(ω⊗θ)_ij = ω_i θ_j`.
pub fn outer_forms(w: &TensorField, t: &TensorField) -> Result<TensorField> {
    same_chart(w, t)?;
    w.expect(Valence::OneForm)?;
    t.expect(Valence::OneForm)?;
    let comps = w
        .comps
        .iter()
        .flat_map(|wi| t.comps.iter().map(move |tj| wi * tj))
        .collect();
    Ok(TensorField::from_parts(&w.chart, Valence::Bilinear, comps))
}

/// The dual endomorphism acting on one-forms, `(F*ω)_j = ω_i F^i_j`; its
/// component matrix is the transpose.
pub fn endo_transpose(f: &TensorField) -> Result<TensorField> {
    f.expect(Valence::Endo)?;
    let m = f.dim();
    let comps = (0..m * m)
        .map(|idx| f.at(idx % m, idx / m).clone())
        .collect();
    Ok(TensorField::from_parts(&f.chart, Valence::Endo, comps))
}

/// The one-form `ω∘F`, i.e. `(ω∘F)_j = ω_i F^i_j`.
pub fn oneform_compose(w: &TensorField, f: &TensorField) -> Result<TensorField> {
    same_chart(w, f)?;
    w.expect(Valence::OneForm)?;
    f.expect(Valence::Endo)?;
    let m = f.dim();
    let vars = f.chart.coords();
    let comps = (0..m)
        .map(|j| sum_products(vars, (0..m).map(|i| (w.get(i), f.at(i, j)))))
        .collect();
    Ok(TensorField::from_parts(&f.chart, Valence::OneForm, comps))
}

/// `G(X, ·)`, i.e. `X^i G_ij`.
pub fn bilinear_contract(g: &TensorField, x: &TensorField) -> Result<TensorField> {
    same_chart(g, x)?;
    g.expect(Valence::Bilinear)?;
    x.expect(Valence::Vector)?;
    let m = g.dim();
    let vars = g.chart.coords();
    let comps = (0..m)
        .map(|j| sum_products(vars, (0..m).map(|i| (x.get(i), g.at(i, j)))))
        .collect();
    Ok(TensorField::from_parts(&g.chart, Valence::OneForm, comps))
}

/// `G(FX, FY)` as a bilinear form: `G_kl F^k_i F^l_j`.
pub fn metric_pullback(g: &TensorField, f: &TensorField) -> Result<TensorField> {
    same_chart(g, f)?;
    g.expect(Valence::Bilinear)?;
    f.expect(Valence::Endo)?;
    let m = g.dim();
    let vars = g.chart.coords();
    // (G F)_kj = G_kl F^l_j, then F^k_i (G F)_kj
    let mut gf = Vec::with_capacity(m * m);
    for k in 0..m {
        for j in 0..m {
            gf.push(sum_products(vars, (0..m).map(|l| (g.at(k, l), f.at(l, j)))));
        }
    }
    let mut comps = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            comps.push(sum_products(
                vars,
                (0..m).map(|k| (f.at(k, i), &gf[k * m + j])),
            ));
        }
    }
    Ok(TensorField::from_parts(&g.chart, Valence::Bilinear, comps))
}

/// Rank of an exact rational matrix by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] * &inv;
                for c in col..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of an exact rational matrix.
pub fn rational_det(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            rows.swap(col, pivot);
            det = -det;
        }
        det *= rows[col][col].clone();
        let inv = rows[col][col].recip();
        for r in col + 1..n {
            if !rows[r][col].is_zero() {
                let factor = &rows[r][col] * &inv;
                for c in col..n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
    }
    det
}

fn evaluated_rows(f: &TensorField, point: &Point) -> Result<Vec<Vec<Rational>>> {
    let vals = f.evaluate(point)?;
    Ok(vals.chunks(f.dim()).map(<[Rational]>::to_vec).collect())
}

/// Largest exact rank of `F` over the sample points. This is a lower bound
/// on the generic rank of `F`.
pub fn rank_at(f: &TensorField, pts: &[Point]) -> Result<usize> {
    f.expect(Valence::Endo)?;
    if pts.is_empty() {
        return Err(Error::shape("rank needs at least one sample point"));
    }
    let mut best = 0;
    for p in pts {
        best = best.max(rational_rank(evaluated_rows(f, p)?));
    }
    Ok(best)
}

/// Sylvester's criterion at each point: all leading principal minors
/// positive. Returns the first point where it fails.
pub fn positive_definite_at(g: &TensorField, pts: &[Point]) -> Result<Option<Point>> {
    g.expect(Valence::Bilinear)?;
    for p in pts {
        let rows = evaluated_rows(g, p)?;
        let ok = (1..=rows.len()).all(|k| {
            let minor: Vec<Vec<Rational>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
            rational_det(minor).is_positive()
        });
        if !ok {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}
