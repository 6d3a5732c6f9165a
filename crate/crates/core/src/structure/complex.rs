use num::{One, Zero};

use crate::algebra::{rat, EpsComplex, Epsilon, Poly, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{endo_compose, endo_transpose, Chart, Point, TensorField, Valence};

/// Eigenvector check of `J` on `½(∂x ∓ i∂y)` in ε-complex arithmetic.
#[derive(Debug, Clone)]
pub struct EigenCheck {
    pub vector: String,
    pub eigenvalue: EpsComplex,
    pub holds: bool,
    /// `λ² = ε`.
    pub square_holds: bool,
}

/// The canonical ε-complex structure on a chart `(x_i, y_i)` together with
/// its checks.
#[derive(Debug, Clone)]
pub struct ComplexModel {
    pub j: TensorField,
    pub epsilon: Epsilon,
    pub report: CheckReport,
    pub eigen: Vec<EigenCheck>,
    pub notes: Vec<String>,
}

impl ComplexModel {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.eigen.iter().all(|e| e.holds && e.square_holds)
    }
}

fn apply(j: &[Rational], dim: usize, v: &[EpsComplex], eps: Epsilon) -> Result<Vec<EpsComplex>> {
    (0..dim)
        .map(|i| {
            let mut acc = EpsComplex::zero(eps);
            for k in 0..dim {
                acc = acc.add(&v[k].scale(&j[i * dim + k]))?;
            }
            Ok(acc)
        })
        .collect()
}

/// `J(∂x_i) = ∂y_i`, `J(∂y_i) = ε∂x_i` on a chart of even dimension `dim`,
/// with coordinates `x, y` (or `x1.., y1..`).
pub fn canonical_complex(dim: usize, epsilon: Epsilon, seed: u64) -> Result<ComplexModel> {
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(Error::OddDimension(dim));
    }
    let n = dim / 2;
    let names: Vec<String> = if n == 1 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect()
    };
    let chart = Chart::new("C", names)?;
    let vars = chart.coords().clone();
    let mut comps = vec![Poly::zero(&vars); dim * dim];
    for i in 0..n {
        comps[(n + i) * dim + i] = Poly::one(&vars);
        comps[i * dim + n + i] = Poly::constant(&vars, epsilon.rational());
    }
    let j = TensorField::new(&chart, Valence::Endo, comps)?;
    let eps_i = TensorField::identity(&chart).scale(&epsilon.rational());

    let mut report = CheckReport::new(
        format!("canonical ε-complex structure, ε = {epsilon}"),
        seed,
    );
    report.record(
        "J² − εI",
        "ε-complex structure",
        endo_compose(&j, &j)?.sub(&eps_i)?,
    );
    let jt = endo_transpose(&j)?;
    report.record(
        "(J*)² − εI",
        "dual endomorphism",
        endo_compose(&jt, &jt)?.sub(&eps_i)?,
    );

    let origin = Point::new(&chart, vec![Rational::zero(); dim])?;
    let jv = j.evaluate(&origin)?;
    let half = rat(1, 2);
    let i_unit = EpsComplex::i(epsilon);
    let eps_c = EpsComplex::real(epsilon.rational(), epsilon);
    let mut eigen = Vec::new();
    for k in 0..n {
        let suffix = if n == 1 {
            String::new()
        } else {
            (k + 1).to_string()
        };
        for (name, sign) in [("z", -1i64), ("z̄", 1)] {
            let mut v = vec![EpsComplex::zero(epsilon); dim];
            v[k] = EpsComplex::real(half.clone(), epsilon);
            v[n + k] = EpsComplex::new(Rational::zero(), rat(sign, 2), epsilon);
            // expected eigenvalue ∓iε
            let lambda = i_unit.mul(&eps_c)?.scale(&rat(sign, 1));
            let image = apply(&jv, dim, &v, epsilon)?;
            let scaled: Vec<EpsComplex> = v.iter().map(|c| lambda.mul(c)).collect::<Result<_>>()?;
            eigen.push(EigenCheck {
                vector: format!("∂/∂{name}{suffix}"),
                holds: image == scaled,
                square_holds: lambda.mul(&lambda)? == eps_c,
                eigenvalue: lambda,
            });
        }
    }

    // J* on dz = dx + i dy (first pair): (J*dz)_j = dz_i J^i_j.
    let mut dz = vec![EpsComplex::zero(epsilon); dim];
    dz[0] = EpsComplex::real(Rational::one(), epsilon);
    dz[n] = i_unit.clone();
    let jt_vals = jt.evaluate(&origin)?;
    let dual = apply(&jt_vals, dim, &dz, epsilon)?;
    let i_dz: Vec<EpsComplex> = dz.iter().map(|c| i_unit.mul(c)).collect::<Result<_>>()?;
    let mut notes = Vec::new();
    if dual == i_dz {
        let claimed = i_unit.mul(&eps_c)?.scale(&rat(-1, 1));
        notes.push(format!(
            "J*(dz) = i·dz for ε = {epsilon}; the eigenvalue −εi {} i",
            if claimed == i_unit {
                "equals"
            } else {
                "differs from"
            }
        ));
    }
    Ok(ComplexModel {
        j,
        epsilon,
        report,
        eigen,
        notes,
    })
}
