//! Closed-form expressions that the general pipeline must reproduce.
//!
//! Everything here is written out term by term from explicit formulas, not
//! derived from the algorithms elsewhere in the crate, so that comparing
//! the two is a real test.

use num_traits::{One, Pow, Zero};

use crate::correlator::CorrelatorEngine;
use crate::error::{Error, Result};
use crate::named::{evaluate, hi, v, NamedCombination};
use crate::partition::Partition;
use crate::scalar::{int, rational};
use crate::virtual_constants::VirtualConstantTable;
use crate::{Matrix, Operator, Rational, Series};

/// Two sides that should agree exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    pub label: String,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

impl Identity {
    pub fn scalar(label: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        Identity {
            label: label.into(),
            lhs: vec![lhs],
            rhs: vec![rhs],
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Named degree-one to degree-five constants of `M_8^9`.
#[derive(Clone, Debug, PartialEq)]
pub struct Greek {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub eta: Rational,
    pub xi: Rational,
    pub phi: Rational,
    pub kappa: Rational,
    pub pi: Rational,
    pub epsilon: Rational,
}

pub fn m8k9_greek(table: &VirtualConstantTable) -> Result<Greek> {
    if (table.N(), table.k()) != (8, 9) {
        return Err(Error::UnsupportedRegime {
            n: table.N() as i64,
            k: table.k() as i64,
        });
    }
    let l = |d, m| table.get(d, m);
    Ok(Greek {
        alpha: l(1, 2),
        beta: l(1, 3),
        gamma: l(1, 4),
        eta: l(2, 3),
        xi: l(2, 4),
        phi: l(3, 4),
        kappa: l(3, 5),
        pi: l(4, 5),
        epsilon: l(5, 6),
    })
}

/// The truncated system of `M_8^9` written out by hand.
pub fn m8k9_connection(g: &Greek, truncation: u32) -> Matrix {
    let mut c = Matrix::zero(7, truncation);
    let mut put = |r: usize, col: usize, d: u32, v: &Rational| c.add_to_coeff(r, col, d, v.clone());
    let one = Rational::one();
    for r in 0..6 {
        put(r, r + 1, 0, &one);
    }
    let rows: [&[(&Rational, usize, u32)]; 5] = [
        &[(&g.alpha, 2, 1), (&g.eta, 3, 2), (&g.phi, 4, 3), (&g.pi, 5, 4), (&g.epsilon, 6, 5)],
        &[(&g.beta, 3, 1), (&g.xi, 4, 2), (&g.kappa, 5, 3), (&g.pi, 6, 4)],
        &[(&g.gamma, 4, 1), (&g.xi, 5, 2), (&g.phi, 6, 3)],
        &[(&g.beta, 5, 1), (&g.eta, 6, 2)],
        &[(&g.alpha, 6, 1)],
    ];
    for (r, entries) in rows.iter().enumerate() {
        for &(v, col, d) in entries.iter() {
            put(r, col, d, v);
        }
    }
    c
}

type Poly = Vec<Rational>;

fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `θ + c`.
fn lin(c: i64) -> Poly {
    vec![int(c), int(1)]
}

/// `θ^e`.
fn th(e: usize) -> Poly {
    let mut p = vec![Rational::zero(); e + 1];
    p[e] = int(1);
    p
}

fn scaled(p: &Poly, c: &Rational) -> Poly {
    p.iter().map(|x| x * c).collect()
}

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn q_times(a: u32, p: &Poly, truncation: u32) -> Operator {
    let mut op = Operator::zero(truncation);
    for (j, c) in p.iter().enumerate() {
        op.add_term(a, j as u32, c.clone());
    }
    op
}

/// Flat derivative `F(q, θ)` of `M_8^9` through `q^3`.
pub fn m8k9_flat_derivative(g: &Greek) -> Operator {
    let (a, b, c, e, x, f) = (&g.alpha, &g.beta, &g.gamma, &g.eta, &g.xi, &g.phi);
    let ab_e = a * b - e;
    let mut op = q_times(0, &th(1), 3);
    op = &op + &q_times(1, &scaled(&th(2), &-a), 3);

    let q2 = padd(&scaled(&th(3), &ab_e), &scaled(&pmul(&lin(1), &th(2)), &(a * a)));
    op = &op + &q_times(2, &q2, 3);

    let mut q3 = scaled(&th(4), f);
    q3 = padd(&q3, &scaled(&pmul(&lin(1), &th(3)), &-(e * b)));
    q3 = padd(&q3, &scaled(&th(4), &-(e * c)));
    q3 = padd(&q3, &scaled(&th(4), &(a * b * c - a * x)));
    q3 = padd(&q3, &scaled(&pmul(&lin(1), &th(3)), &(a * b * b)));
    let mixed = padd(&pmul(&lin(2), &th(3)), &pmul(&pmul(&lin(1), &lin(1)), &th(2)));
    q3 = padd(&q3, &scaled(&mixed, &(a * &ab_e)));
    q3 = padd(&q3, &scaled(&pmul(&pmul(&lin(2), &lin(1)), &th(2)), &(a * a * a)));
    op = &op + &q_times(3, &scaled(&q3, &-Rational::one()), 3);
    op
}

fn series(coeffs: &[Rational]) -> Series {
    let mut v = coeffs.to_vec();
    v.resize(4, Rational::zero());
    Series::from_coeffs(v)
}

/// The t-connection of `M_8^9` through `q^3`.
///
/// The `ψ_6` entry of the `ψ_3` row is taken at `q^3`.
pub fn m8k9_t_connection(g: &Greek) -> Matrix {
    let (a, b, c, e, x, f, kp) = (&g.alpha, &g.beta, &g.gamma, &g.eta, &g.xi, &g.phi, &g.kappa);
    let z = Rational::zero();
    let ab_e = a * b - e;
    let mut m = Matrix::zero(7, 3);
    for r in 0..6 {
        m.set(r, r + 1, Series::one(3));
    }
    let chain = |lead: &Rational| {
        series(&[z.clone(), lead.clone(), -(lead * a), lead * (&ab_e + int(2) * a * a)])
    };
    let xi_part = x - e - a * (c - a);
    let two_deg = |extra: Rational| series(&[z.clone(), z.clone(), xi_part.clone(), -(int(2) * a * &xi_part) + extra]);

    m.set(1, 3, chain(&(b - a)));
    m.set(1, 4, two_deg((&ab_e + a * a) * (b - a) + &ab_e * (c - a)));
    let top = kp - f - a * (x - e) - e * (b - a) + a * a * (c - a);
    m.set(1, 5, series(&[z.clone(), z.clone(), z.clone(), top]));

    m.set(2, 4, chain(&(c - a)));
    m.set(2, 5, two_deg((int(2) * &ab_e + a * a) * (c - a)));

    m.set(3, 5, chain(&(b - a)));
    m.set(3, 6, series(&[z.clone(), z.clone(), z.clone(), (b - a) * (&ab_e + a * a)]));
    m
}

/// `(1/k) w` three-point values of `M_8^9`, as `(exponents, degree, value)`.
pub fn m8k9_three_point(g: &Greek) -> Vec<([i64; 3], u32, Rational)> {
    let (a, b, c, e, x, f, kp) = (&g.alpha, &g.beta, &g.gamma, &g.eta, &g.xi, &g.phi, &g.kappa);
    vec![
        ([1, 1, 3], 1, b - a),
        ([1, 2, 2], 1, c - a),
        ([1, 1, 2], 2, x - e - a * (c - a)),
        ([1, 1, 1], 3, kp - f - a * (x - e) - e * (b - a) + a * a * (c - a)),
    ]
}

/// `u_f = L̃^f_{1+(k-N)f}` read straight from the table.
fn u(engine: &CorrelatorEngine, f: i64) -> Rational {
    let (n, k) = (engine.N() as i64, engine.k() as i64);
    engine.table().get(f, 1 + (k - n) * f)
}

/// `(1/k) w(O_{e^{N-2-n}} O_{e^{n-1-(k-N)d}} O_e)_d` in terms of `V`, for
/// `d <= 3` and any `(N, k)`, or `d <= 5` when `N = k - 1`.
///
/// At `d = 5` every sector of length two or more carries its ordered
/// multiplicity, including `1+3` and `2+2`.
pub fn flat_three_point(e: &CorrelatorEngine, d: u32, n: i64) -> Result<Rational> {
    let (u1, u2, u3, u4) = (u(e, 1), u(e, 2), u(e, 3), u(e, 4));
    let hyper = e.k() == e.N() + 1;
    Ok(match d {
        1 => v(e, 1, &[], n)?,
        2 => v(e, 2, &[], n)? - &u1 * v(e, 2, &[1], n)?,
        3 => v(e, 3, &[], n)? - &u1 * v(e, 3, &[1], n)? - &u2 * v(e, 3, &[2], n)? + &u1 * &u1 * v(e, 3, &[1, 1], n)?,
        4 if hyper => {
            let a = evaluate(e, NamedCombination::A, n)?;
            v(e, 4, &[], n)? - &u1 * v(e, 4, &[1], n)? - &u2 * v(e, 4, &[2], n)? - &u3 * v(e, 4, &[3], n)?
                + &u1 * &u1 * (v(e, 3, &[1], n)? + v(e, 3, &[1], n - 1)? - v(e, 2, &[], 5)? + a)
                + int(2) * &u1 * &u2 * v(e, 4, &[1, 2], n)?
                - Pow::pow(&u1, 3u32) * v(e, 4, &[1, 1, 1], n)?
        }
        5 if hyper => {
            let hs = his(e, n)?;
            let nb = evaluate(e, NamedCombination::B, n)?;
            let nc = evaluate(e, NamedCombination::C, n)?;
            let nd = evaluate(e, NamedCombination::D, n)?;
            let v13 = v(e, 1, &[], 3)?;
            v(e, 5, &[], n)? - &u1 * v(e, 5, &[1], n)? - &u2 * v(e, 5, &[2], n)? - &u3 * v(e, 5, &[3], n)?
                - &u4 * v(e, 5, &[4], n)?
                + &u1 * &u1
                    * (v(e, 4, &[1], n)? + v(e, 4, &[1], n - 1)? - v(e, 3, &[], 6)? + &nb + &nc
                        - v13 * hcomb(&hs, [2, 2, 1, 0], 1))
                + int(2)
                    * &u1
                    * &u2
                    * (v(e, 4, &[2], n)? + v(e, 4, &[2], n - 1)? - v(e, 2, &[], 6)?
                        + hcomb(&hs, [4, 3, 2, -1], 2))
                - Pow::pow(&u1, 3u32)
                    * (v(e, 3, &[1], n)? + int(2) * v(e, 3, &[1], n - 1)? + v(e, 3, &[1], n - 2)?
                        - int(2) * v(e, 2, &[], 5)?
                        - v(e, 3, &[1], 6)?
                        + nd
                        + hcomb(&hs, [3, 3, 1, 0], 1))
                + int(2) * &u1 * &u3 * v(e, 5, &[1, 3], n)?
                + &u2 * &u2 * v(e, 5, &[2, 2], n)?
                - int(3) * &u1 * &u1 * &u2 * v(e, 5, &[1, 1, 2], n)?
                + Pow::pow(&u1, 4u32) * v(e, 5, &[1, 1, 1, 1], n)?
        }
        _ => {
            return Err(Error::OutOfRange {
                what: "closed-form degree",
                index: d as i64,
            })
        }
    })
}

fn his(e: &CorrelatorEngine, n: i64) -> Result<[Rational; 4]> {
    Ok([hi(e.table(), 1, n)?, hi(e.table(), 2, n)?, hi(e.table(), 3, n)?, hi(e.table(), 4, n)?])
}

/// `(Σ c_j hi_j) / den`.
fn hcomb(h: &[Rational; 4], c: [i64; 4], den: i64) -> Rational {
    let mut s = Rational::zero();
    for j in 0..4 {
        s += int(c[j]) * &h[j];
    }
    s / int(den)
}

/// `L^{N,k,d}_n` for `d <= 3`, any `(N, k)`.
pub fn real_constant_low_degree(e: &CorrelatorEngine, d: u32, n: i64) -> Result<Rational> {
    let (u1, u2) = (u(e, 1), u(e, 2));
    Ok(match d {
        1 => e.table().get(1, n) - &u1,
        2 => v(e, 2, &[], n)? - int(2) * &u1 * v(e, 2, &[1], n)?,
        3 => {
            v(e, 3, &[], n)? - int(3) * &u1 * v(e, 3, &[1], n)? - rational(3, 2) * &u2 * v(e, 3, &[2], n)?
                + rational(9, 2) * &u1 * &u1 * v(e, 3, &[1, 1], n)?
        }
        _ => {
            return Err(Error::OutOfRange {
                what: "closed-form degree",
                index: d as i64,
            })
        }
    })
}

/// `L^{k-1,k,4}_n`, final line of the degree-four derivation.
pub fn real_constant_degree_four(e: &CorrelatorEngine, n: i64) -> Result<Rational> {
    let (u1, u2, u3) = (u(e, 1), u(e, 2), u(e, 3));
    let a = evaluate(e, NamedCombination::A, n)?;
    Ok(v(e, 4, &[], n)? - int(4) * &u1 * v(e, 4, &[1], n)? - int(2) * &u2 * v(e, 4, &[2], n)?
        - rational(4, 3) * &u3 * v(e, 4, &[3], n)?
        + int(8) * &u1 * &u1 * (v(e, 3, &[1], n)? + v(e, 3, &[1], n - 1)? - v(e, 2, &[], 5)? + rational(3, 4) * a)
        + int(8) * &u1 * &u2 * v(e, 4, &[1, 2], n)?
        - rational(32, 3) * Pow::pow(&u1, 3u32) * v(e, 4, &[1, 1, 1], n)?)
}

/// `G^{k-1,k,d}_{d-m}(n; σ)`: equal to `V` except in the sectors listed
/// explicitly below.
pub fn g_polynomial(e: &CorrelatorEngine, d: u32, sigma: &Partition, n: i64) -> Result<Rational> {
    let parts = sigma.parts();
    match (d, parts) {
        (4, [1, 1]) => {
            let a = evaluate(e, NamedCombination::A, n)?;
            Ok(v(e, 3, &[1], n)? + v(e, 3, &[1], n - 1)? - v(e, 2, &[], 5)? + rational(3, 4) * a)
        }
        (5, [1, 1]) => {
            let hs = his(e, n)?;
            let nb = evaluate(e, NamedCombination::B, n)?;
            let nc = evaluate(e, NamedCombination::C, n)?;
            Ok(v(e, 4, &[1], n)? + v(e, 4, &[1], n - 1)? - v(e, 3, &[], 6)? + rational(4, 5) * nb
                + rational(3, 5) * nc
                - rational(1, 5) * v(e, 1, &[], 3)? * hcomb(&hs, [6, 5, 3, -1], 1))
        }
        (5, [1, 2]) => {
            let hs = his(e, n)?;
            Ok(v(e, 4, &[2], n)? + v(e, 4, &[2], n - 1)? - v(e, 2, &[], 6)? + hcomb(&hs, [8, 5, 4, -3], 5))
        }
        (5, [1, 1, 1]) => {
            let hs = his(e, n)?;
            let nd = evaluate(e, NamedCombination::D, n)?;
            Ok(v(e, 3, &[1], n)? + int(2) * v(e, 3, &[1], n - 1)? + v(e, 3, &[1], n - 2)?
                - int(2) * v(e, 2, &[], 5)?
                - v(e, 3, &[1], 6)?
                + rational(4, 5) * nd
                + hcomb(&hs, [46, 46, 16, -2], 25))
        }
        _ => e.normalized(d, sigma, n),
    }
}

/// `Σ_{m<d} Σ_{σ ⊢ m} (-1)^l d^l S(σ) ∏ (u_{d_i}/d_i) G_{d-m}(n; σ)`.
pub fn real_constant_from_g(e: &CorrelatorEngine, d: u32, n: i64) -> Result<Rational> {
    let mut total = Rational::zero();
    for m in 0..d {
        for sigma in crate::partition::partitions(m) {
            let mut w = sigma.symmetry_factor();
            for &p in sigma.parts() {
                w = -(w * int(d as i64) * u(e, p as i64) / int(p as i64));
            }
            if w.is_zero() {
                continue;
            }
            total += w * g_polynomial(e, d, &sigma, n)?;
        }
    }
    Ok(total)
}

/// Four identities among normalized virtual invariants at `N = k - 1`.
pub fn virtual_identities(e: &CorrelatorEngine, n: i64) -> Result<Vec<Identity>> {
    let hs = his(e, n)?;
    let na = evaluate(e, NamedCombination::A, n)?;
    let nb = evaluate(e, NamedCombination::B, n)?;
    let nc = evaluate(e, NamedCombination::C, n)?;
    let nd = evaluate(e, NamedCombination::D, n)?;
    Ok(vec![
        Identity::scalar(
            format!("V4_2(n;1+1) n={n}"),
            v(e, 4, &[1, 1], n)?,
            v(e, 3, &[1], n)? + v(e, 3, &[1], n - 1)? - v(e, 2, &[], 5)? + rational(1, 2) * na,
        ),
        Identity::scalar(
            format!("V5_3(n;1+1) n={n}"),
            v(e, 5, &[1, 1], n)?,
            v(e, 4, &[1], n)? + v(e, 4, &[1], n - 1)? - v(e, 3, &[], 6)? + rational(2, 3) * &nb
                + rational(1, 3) * &nc
                - rational(1, 3) * v(e, 1, &[], 3)? * hcomb(&hs, [2, 1, 1, -1], 1),
        ),
        Identity::scalar(
            format!("V5_2(n;1+2) n={n}"),
            v(e, 5, &[1, 2], n)?,
            v(e, 4, &[2], n)? + v(e, 4, &[2], n - 1)? - v(e, 2, &[], 6)? + hcomb(&hs, [2, 1, 1, -1], 2),
        ),
        Identity::scalar(
            format!("V5_2(n;1+1+1) n={n}"),
            v(e, 5, &[1, 1, 1], n)?,
            v(e, 3, &[1], n)? + int(2) * v(e, 3, &[1], n - 1)? + v(e, 3, &[1], n - 2)? - int(2) * v(e, 2, &[], 5)?
                - v(e, 3, &[1], 6)?
                + rational(1, 2) * nd
                + hcomb(&hs, [4, 4, 1, 1], 4),
        ),
    ])
}

/// The three `V`-product identities that isolate the `hi_j` content of the
/// `1+1+1` sector at degree five.
pub fn hi_product_identities(e: &CorrelatorEngine, n: i64) -> Result<Vec<Identity>> {
    let hs = his(e, n)?;
    let common = v(e, 3, &[1, 1], n)? * v(e, 1, &[], n - 4)? + v(e, 1, &[], n)? * v(e, 3, &[1, 1], n - 2)?
        - v(e, 5, &[1, 1, 2], n)? * v(e, 1, &[], 3)?
        - v(e, 5, &[4], n)? * v(e, 3, &[1, 1], 5)?;
    let cross = v(e, 2, &[1], n)? * v(e, 2, &[1], n - 3)? - v(e, 5, &[1, 3], n)? * v(e, 2, &[1], 4)?;
    Ok(vec![
        Identity::scalar(format!("leading n={n}"), &common + &cross, hcomb(&hs, [3, 3, 1, 0], 1)),
        Identity::scalar(format!("subleading n={n}"), common.clone(), hcomb(&hs, [2, 2, 1, -1], 1)),
        Identity::scalar(format!("virtual n={n}"), common + int(2) * cross, hcomb(&hs, [4, 4, 1, 1], 1)),
    ])
}

fn hvec(c: [Rational; 4]) -> Vec<Rational> {
    c.to_vec()
}

fn hv(a: i64, b: i64, c: i64, d: i64) -> [Rational; 4] {
    [int(a), int(b), int(c), int(d)]
}

fn hscale(s: &Rational, v: &[Rational; 4]) -> [Rational; 4] {
    [s * &v[0], s * &v[1], s * &v[2], s * &v[3]]
}

fn hsum(vs: &[[Rational; 4]]) -> [Rational; 4] {
    let mut out = hv(0, 0, 0, 0);
    for v in vs {
        for j in 0..4 {
            out[j] += &v[j];
        }
    }
    out
}

/// Coefficient vectors over `(hi_1, hi_2, hi_3, hi_4)` for the three sector
/// sums at degree five.
pub fn hi_sector_sums() -> Vec<Identity> {
    let lead = hv(3, 3, 1, 0);
    let sub = hv(2, 2, 1, -1);
    let virt = hv(4, 4, 1, 1);
    let triple = hsum(&[
        lead.clone(),
        hscale(&int(4), &lead),
        hscale(&(rational(5, 2) * int(2)), &lead),
        hscale(&rational(5, 2), &sub),
        hscale(&rational(5, 6), &virt),
    ]);
    let triple_rhs = hscale(
        &rational(125, 6),
        &[rational(46, 25), rational(46, 25), rational(16, 25), rational(-2, 25)],
    );

    let one_two = hsum(&[
        hscale(&int(2), &[int(2), rational(3, 2), int(1), rational(-1, 2)]),
        hscale(&int(4), &hv(2, 1, 1, -1)),
        hscale(&rational(3, 2), &hv(2, 2, 1, 0)),
        hscale(&rational(5, 2), &hv(2, 1, 1, -1)),
    ]);
    let one_two_rhs = hscale(&rational(25, 2), &[rational(8, 5), int(1), rational(4, 5), rational(-3, 5)]);

    let one_one = hsum(&[
        hv(2, 2, 1, 0),
        hscale(&int(4), &hv(2, 2, 1, 0)),
        hscale(&rational(5, 2), &hv(2, 1, 1, -1)),
    ]);
    let one_one_rhs = hscale(&rational(25, 2), &[rational(6, 5), int(1), rational(3, 5), rational(-1, 5)]);

    vec![
        Identity {
            label: "1+1+1 sector".into(),
            lhs: hvec(triple),
            rhs: hvec(triple_rhs),
        },
        Identity {
            label: "1+2 sector".into(),
            lhs: hvec(one_two),
            rhs: hvec(one_two_rhs),
        },
        Identity {
            label: "1+1 sector".into(),
            lhs: hvec(one_one),
            rhs: hvec(one_one_rhs),
        },
    ]
}

/// Coefficient bookkeeping for the degree-four and degree-five
/// transformations: each partial sum must equal `d^l S(σ) ∏ 1/d_i` (times
/// the stated weight where one is given).
pub fn coefficient_ledger() -> Vec<Identity> {
    let r = rational;
    let i = int;
    let sum = |xs: &[Rational]| xs.iter().fold(Rational::zero(), |a, b| a + b);
    let exp = |d: u32, parts: &[u32]| crate::mirror::expanded_sector_coefficient(d, &Partition::new(parts.to_vec()));
    let mut out = vec![Identity::scalar(
        "d=4 sector 1+1: 1+3+4/2 = (16/2!)(3/4)",
        sum(&[i(1), i(3), i(4) * r(1, 2)]),
        exp(4, &[1, 1]) * r(3, 4),
    )];
    let five: Vec<(&str, Vec<Rational>, &[u32])> = vec![
        ("1", vec![i(1), i(4)], &[1]),
        ("2", vec![i(1), r(3, 2)], &[2]),
        ("3", vec![i(1), r(2, 3)], &[3]),
        ("4", vec![i(1), r(1, 4)], &[4]),
        ("1+1", vec![i(1), i(4), i(3) * r(5, 2)], &[1, 1]),
        ("1+2", vec![i(2), i(4), r(3, 2), r(5, 2) * i(2)], &[1, 2]),
        ("1+3", vec![i(2), i(4), r(2, 3), r(5, 3)], &[1, 3]),
        ("2+2", vec![i(1), r(3, 2), r(5, 8)], &[2, 2]),
        ("1+1+1", vec![i(1), i(4), i(3) * r(5, 2), i(2) * r(5, 2), i(4) * r(5, 6)], &[1, 1, 1]),
        (
            "1+1+2",
            vec![
                i(3),
                i(2) * i(4),
                r(3, 2),
                i(3) * r(5, 2),
                i(2) * r(5, 2),
                r(5, 2),
                r(5, 2),
                r(5, 4),
            ],
            &[1, 1, 2],
        ),
        (
            "1+1+1+1",
            vec![
                i(1),
                i(4),
                i(3) * r(5, 2),
                i(2) * r(5, 2),
                i(4) * r(5, 6),
                r(5, 2),
                i(2) * r(5, 6),
                r(5, 6),
                r(5, 24),
            ],
            &[1, 1, 1, 1],
        ),
    ];
    for (label, terms, parts) in five {
        out.push(Identity::scalar(format!("d=5 sector {label}"), sum(&terms), exp(5, parts)));
    }
    out.push(Identity::scalar(
        "d=5 B weight",
        sum(&[i(1), i(4), i(3) * r(5, 2) * r(2, 3)]),
        exp(5, &[1, 1]) * r(4, 5),
    ));
    out.push(Identity::scalar(
        "d=5 C weight",
        sum(&[i(1), i(4), i(3) * r(5, 2) * r(1, 3)]),
        exp(5, &[1, 1]) * r(3, 5),
    ));
    out.push(Identity::scalar(
        "d=5 D weight",
        sum(&[i(1), i(4), i(3) * r(5, 2), (i(2) * r(5, 2) + i(4) * r(5, 6)) * r(1, 2)]),
        exp(5, &[1, 1, 1]) * r(4, 5),
    ));
    out
}
