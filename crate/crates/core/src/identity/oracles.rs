//! The mutual-oracle checks in one place, each with its pinned tolerance.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::lines::{
    c1_contour, c1_line_quadrature, d1_contour, d1_line_quadrature, ik_closed_vs_quadrature,
    ik_saddle_contour, mellin_contour, mellin_quadrature_lhs,
};
use super::residues::residue_rk;
use super::series::{lambert_lhs_auto, whittaker_series_vk_auto};
use super::{residues::zero_sum, IdentityError, TransformPair};
use crate::lfunc::SkInstance;
use crate::sum::PrecisionMode;
use crate::zeta::{Bracket, ZetaZero};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub value: f64,
    pub reference: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl OracleCheck {
    pub fn new(name: impl Into<String>, value: f64, reference: f64, tol: f64) -> Self {
        let rel_err = (value - reference).abs() / reference.abs();
        Self { name: name.into(), value, reference, rel_err, tol, pass: rel_err <= tol }
    }
}

/// Runs every closure at one α: Lambert vs c-line, the Meijer closed form
/// vs its line integral, V_k vs the d₁-line, the c₁-line vs V_k, the
/// residue theorem between the lines, the limit at the pole and the
/// functional equation of D.
pub fn oracle_suite(
    inst: &SkInstance,
    pair: TransformPair,
    zeros: &[ZetaZero],
    brackets: &[Bracket],
    mode: PrecisionMode,
) -> Result<Vec<OracleCheck>, IdentityError> {
    let mut out = Vec::new();
    let lhs = lambert_lhs_auto(&inst.sk_petersson_coeffs(inst.terms())?, pair, mode)?.value;
    let mellin = mellin_quadrature_lhs(inst, pair, &mellin_contour(inst, pair), mode)?.value;
    out.push(OracleCheck::new("mellin_vs_lambert", mellin, lhs, 1e-8));

    for n in [1usize, 2, 5] {
        for beta in [0.5, 1.0, 2.0] {
            let (q, c) = ik_closed_vs_quadrature(n, beta, inst.k, &ik_saddle_contour(n, beta, inst.k))?;
            out.push(OracleCheck::new(format!("ik_n{n}_beta{beta}"), q, c, 1e-9));
        }
    }

    let vk = whittaker_series_vk_auto(inst, pair, mode)?.value;
    let d1 = d1_line_quadrature(inst, pair, &d1_contour(inst), mode)?.value;
    out.push(OracleCheck::new("d1_line_vs_vk", d1, vk, 1e-7));
    let c1 = c1_line_quadrature(inst, pair, &c1_contour(inst), mode)?.value;
    out.push(OracleCheck::new("c1_line_vs_vk", c1, vk, 1e-7));

    let zs = zero_sum(inst, pair, zeros, brackets, mode)?.total();
    let rk = residue_rk(inst, pair);
    out.push(OracleCheck::new("residue_theorem", mellin - c1 - rk, zs, 1e-6));

    let k = inst.k as f64;
    let residue = inst.residue();
    for off in [1e-7, 1e-8, 1e-9, 1e-10] {
        let s = k + off;
        let v = (inst.eval_d(Complex64::new(s, 0.0))? * (s - k)).re;
        out.push(OracleCheck::new(format!("pole_limit_{off:e}"), v, residue, 1e-6));
    }

    let points = [
        Complex64::new(k - 0.5, 3.0),
        Complex64::new(k - 2.5, 10.0),
        Complex64::new(k - 1.75, 20.0),
        Complex64::new(k + 0.5, 1.0),
        Complex64::new(k - 1.0, 28.0),
    ];
    for chk in inst.functional_equation_check(&points)? {
        out.push(OracleCheck {
            name: format!("functional_equation_{}+{}i", chk.s.re, chk.s.im),
            value: chk.direct.norm(),
            reference: chk.reflected.norm(),
            rel_err: chk.rel_err,
            tol: 1e-6,
            pass: chk.rel_err <= 1e-6,
        });
    }
    Ok(out)
}
