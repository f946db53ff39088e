//! Discrete two-sided quaternion Fourier transform
//!
//! ```text
//! F(xi) = sum_x e^{-i 2 pi xi1 x1} f(x) e^{-j 2 pi xi2 x2} h1 h2
//! ```
//!
//! on the centered lattices of a [`Grid2D`]. The left kernel lives in the
//! `(1, i)` plane and the right kernel in the `(1, j)` plane; the product is
//! never reordered.
//!
//! [`qft_direct`] is the literal double sum and serves as the oracle.
//! [`qft_fast`] splits `f = f0 + i f1 + j f2 + k f3` into real fields, runs a
//! cascaded 1D DFT on each (axis 1 carrying `i`, axis 2 carrying `j`), and
//! reassembles with
//!
//! ```text
//! F{f} = F{f0} + i F{f1} + F{f2} j + i F{f3} j
//! ```
//!
//! which holds because a real field commutes with every unit.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fft::{Complex, Plan, Sign};
use crate::field::{QField, SpectrumField};
use crate::grid::Grid2D;
use crate::quat::Quaternion;

/// Literal `O((n1 n2)^2)` evaluation of the forward transform.
pub fn qft_direct(f: &QField) -> SpectrumField {
    let grid = *f.grid();
    let values = direct(f.values(), &grid, Sign::Forward);
    SpectrumField::from_parts(grid, values)
}

/// Literal double-sum inverse; the oracle counterpart of [`iqft`].
pub fn iqft_direct(spectrum: &SpectrumField) -> QField {
    let grid = *spectrum.grid();
    let values = direct(spectrum.values(), &grid, Sign::Inverse);
    QField::from_parts(grid, values)
}

/// Fast forward transform, `O(N log N)`; agrees with [`qft_direct`] to
/// round-off.
pub fn qft_fast(f: &QField) -> Result<SpectrumField> {
    let grid = *f.grid();
    ensure_transformable(&grid)?;
    let values = fast(f.values(), &grid, Sign::Forward);
    SpectrumField::new(grid, values)
}

/// Fast inverse transform
///
/// ```text
/// f(x) = sum_xi e^{+i 2 pi xi1 x1} F(xi) e^{+j 2 pi xi2 x2} dxi1 dxi2
/// ```
///
/// with `dxi_a = 1 / (n_a h_a)`. Exact inverse of [`qft_fast`] up to
/// round-off because the discrete kernels are biorthogonal.
pub fn iqft(spectrum: &SpectrumField) -> Result<QField> {
    let grid = *spectrum.grid();
    ensure_transformable(&grid)?;
    let values = fast(spectrum.values(), &grid, Sign::Inverse);
    QField::new(grid, values)
}

/// Like [`iqft`] but insists that the spectrum was produced on `grid`.
pub fn iqft_on(spectrum: &SpectrumField, grid: &Grid2D) -> Result<QField> {
    if spectrum.grid() != grid {
        return Err(Error::GridMismatch);
    }
    iqft(spectrum)
}

fn ensure_transformable(grid: &Grid2D) -> Result<()> {
    if grid.n1() < 4 || grid.n2() < 4 {
        return Err(Error::InvalidGrid("at least 4 samples per axis"));
    }
    Ok(())
}

fn direct(input: &[Quaternion], grid: &Grid2D, sign: Sign) -> Vec<Quaternion> {
    let (n1, n2) = (grid.n1(), grid.n2());
    let s = match sign {
        Sign::Forward => -1.0,
        Sign::Inverse => 1.0,
    };
    // phase[o][t] = 2 pi * (output node) * (input node); the product is the
    // same for both directions, only the roles of x and xi swap.
    let left: Vec<Quaternion> = (0..n1 * n1)
        .map(|idx| {
            let (o, t) = (idx / n1, idx % n1);
            let th = 2.0 * PI * grid.xi1(o) * grid.x1(t);
            let th = if sign == Sign::Forward { th } else { 2.0 * PI * grid.x1(o) * grid.xi1(t) };
            let (sn, cs) = libm::sincos(th);
            Quaternion::new(cs, s * sn, 0.0, 0.0)
        })
        .collect();
    let right: Vec<Quaternion> = (0..n2 * n2)
        .map(|idx| {
            let (o, t) = (idx / n2, idx % n2);
            let th = 2.0 * PI * grid.xi2(o) * grid.x2(t);
            let th = if sign == Sign::Forward { th } else { 2.0 * PI * grid.x2(o) * grid.xi2(t) };
            let (sn, cs) = libm::sincos(th);
            Quaternion::new(cs, 0.0, s * sn, 0.0)
        })
        .collect();
    let weight = match sign {
        Sign::Forward => grid.cell_area(),
        Sign::Inverse => grid.freq_cell_area(),
    };

    let mut out = vec![Quaternion::ZERO; n1 * n2];
    for o1 in 0..n1 {
        let lrow = &left[o1 * n1..(o1 + 1) * n1];
        for o2 in 0..n2 {
            let rrow = &right[o2 * n2..(o2 + 1) * n2];
            let mut acc = Quaternion::ZERO;
            for (t1, &l) in lrow.iter().enumerate() {
                let row = &input[t1 * n2..(t1 + 1) * n2];
                for (&v, &r) in row.iter().zip(rrow) {
                    acc += l * v * r;
                }
            }
            out[o1 * n2 + o2] = acc * weight;
        }
    }
    out
}

/// Reusable buffers for the packed two-real-sequence trick.
struct Workspace {
    buf: Vec<Complex>,
    scratch: Vec<Complex>,
}

/// Centered DFTs of two real sequences through a single complex DFT:
/// with `Z = DFT(a + i b)`, `A[u] = (Z[u] + conj Z[-u]) / 2` and
/// `B[u] = (Z[u] - conj Z[-u]) / 2i`.
fn dft_two_real(
    plan: &Plan,
    a: impl Iterator<Item = f64>,
    b: impl Iterator<Item = f64>,
    out_a: &mut [Complex],
    out_b: &mut [Complex],
    ws: &mut Workspace,
) {
    let n = plan.len();
    ws.buf.clear();
    ws.buf.extend(a.zip(b).map(|(x, y)| Complex::new(x, y)));
    debug_assert_eq!(ws.buf.len(), n);
    plan.process_centered(&mut ws.buf, &mut ws.scratch);
    for u in 0..n {
        let z = ws.buf[u];
        let w = ws.buf[(n - u) % n].conj();
        let sum = z + w;
        let diff = z - w;
        out_a[u] = sum.scale(0.5);
        out_b[u] = Complex::new(0.5 * diff.im, -0.5 * diff.re);
    }
}

fn fast(input: &[Quaternion], grid: &Grid2D, sign: Sign) -> Vec<Quaternion> {
    let (n1, n2) = (grid.n1(), grid.n2());
    let len = n1 * n2;
    let plan1 = Plan::new(n1, sign);
    let plan2 = Plan::new(n2, sign);
    let mut ws = Workspace { buf: Vec::with_capacity(n1.max(n2)), scratch: Vec::new() };

    // Axis 1 (unit i): p[c] + i q[c] for each real component c.
    let mut p = [vec![0.0; len], vec![0.0; len], vec![0.0; len], vec![0.0; len]];
    let mut q = [vec![0.0; len], vec![0.0; len], vec![0.0; len], vec![0.0; len]];
    let mut col_a = vec![Complex::ZERO; n1];
    let mut col_b = vec![Complex::ZERO; n1];
    for (ca, cb) in [(0usize, 1usize), (2, 3)] {
        for m2 in 0..n2 {
            let comp = |c: usize| (0..n1).map(move |m1| input[m1 * n2 + m2].to_array()[c]);
            dft_two_real(&plan1, comp(ca), comp(cb), &mut col_a, &mut col_b, &mut ws);
            for m1 in 0..n1 {
                let idx = m1 * n2 + m2;
                p[ca][idx] = col_a[m1].re;
                q[ca][idx] = col_a[m1].im;
                p[cb][idx] = col_b[m1].re;
                q[cb][idx] = col_b[m1].im;
            }
        }
    }

    // Axis 2 (unit j): (P + iQ) e^{-j theta} expands to
    // P cos + i Q cos - j P sin - k Q sin, i.e. DFT(P) feeds (1, j) and
    // DFT(Q) feeds (i, k).
    let mut parts = [
        vec![Quaternion::ZERO; len],
        vec![Quaternion::ZERO; len],
        vec![Quaternion::ZERO; len],
        vec![Quaternion::ZERO; len],
    ];
    let mut row_p = vec![Complex::ZERO; n2];
    let mut row_q = vec![Complex::ZERO; n2];
    for c in 0..4 {
        for m1 in 0..n1 {
            let span = m1 * n2..(m1 + 1) * n2;
            dft_two_real(
                &plan2,
                p[c][span.clone()].iter().copied(),
                q[c][span.clone()].iter().copied(),
                &mut row_p,
                &mut row_q,
                &mut ws,
            );
            for (m2, out) in parts[c][span].iter_mut().enumerate() {
                *out = Quaternion::new(row_p[m2].re, row_q[m2].re, row_p[m2].im, row_q[m2].im);
            }
        }
    }

    let weight = match sign {
        Sign::Forward => grid.cell_area(),
        Sign::Inverse => grid.freq_cell_area(),
    };
    let (i, j) = (Quaternion::I, Quaternion::J);
    (0..len)
        .map(|idx| {
            let f = parts[0][idx] + i * parts[1][idx] + parts[2][idx] * j + i * parts[3][idx] * j;
            f * weight
        })
        .collect()
}

/// Outcome of [`check_scaling`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingReport {
    pub factor: u32,
    /// `max |F{f_a}(xi) - a^-2 F{f}(xi / a)|` over the common nodes.
    pub residual: f64,
    pub nodes_compared: usize,
}

/// Checks `F{f(a x)}(xi) = a^-2 F{f}(xi / a)` on the grid of `f`.
///
/// `f(a x)` is resampled on the same grid: node `m` takes the sample at
/// `n/2 + a (m - n/2)`, and zero once that falls outside the window. The
/// comparison runs over the frequency nodes whose quotient by `a` is again
/// a node.
pub fn check_scaling(f: &QField, factor: f64) -> Result<ScalingReport> {
    if !(factor.is_finite() && factor >= 1.0 && libm::trunc(factor) == factor) {
        return Err(Error::IncommensurateScaling);
    }
    if factor > u32::MAX as f64 {
        return Err(Error::IncommensurateScaling);
    }
    let a = factor as i64;
    let grid = *f.grid();
    let (n1, n2) = (grid.n1() as i64, grid.n2() as i64);
    let (c1, c2) = (n1 / 2, n2 / 2);

    let mut scaled = vec![Quaternion::ZERO; grid.len()];
    for m1 in 0..n1 {
        let s1 = c1 + a * (m1 - c1);
        if !(0..n1).contains(&s1) {
            continue;
        }
        for m2 in 0..n2 {
            let s2 = c2 + a * (m2 - c2);
            if (0..n2).contains(&s2) {
                scaled[(m1 * n2 + m2) as usize] = f.get(s1 as usize, s2 as usize);
            }
        }
    }
    let scaled = QField::new(grid, scaled)?;

    let lhs = qft_fast(&scaled)?;
    let rhs = qft_fast(f)?;
    let inv_a2 = 1.0 / (factor * factor);
    let mut residual = 0.0f64;
    let mut nodes_compared = 0;
    for m1 in 0..n1 {
        let d1 = m1 - c1;
        if d1 % a != 0 {
            continue;
        }
        for m2 in 0..n2 {
            let d2 = m2 - c2;
            if d2 % a != 0 {
                continue;
            }
            let l = lhs.get(m1 as usize, m2 as usize);
            let r = rhs.get((c1 + d1 / a) as usize, (c2 + d2 / a) as usize) * inv_a2;
            residual = residual.max((l - r).modulus());
            nodes_compared += 1;
        }
    }
    Ok(ScalingReport { factor: a as u32, residual, nodes_compared })
}
