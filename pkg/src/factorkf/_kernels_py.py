"""Pure-NumPy band kernels: the import-time fallback for the compiled core.

All functions take the four assembled blocks of a 2m-by-2m transition
matrix in flat diagonal storage, shaped [batch, layout.size], and vectors
shaped [batch, m].  Accumulation order per output element matches the
compiled kernels exactly, so both backends produce bitwise-equal results.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def block_matvec(m11, m12, m21, m22, u, l, layout):
    """y = A x for A = [[M11, M12], [M21, M22]], x = (u, l)."""
    yu = np.zeros_like(u)
    yl = np.zeros_like(l)
    for _, i0, j0, ln, st in layout.spans:
        si = slice(i0, i0 + ln)
        sj = slice(j0, j0 + ln)
        sf = slice(st, st + ln)
        yu[:, si] += m11[:, sf] * u[:, sj] + m12[:, sf] * l[:, sj]
        yl[:, si] += m21[:, sf] * u[:, sj] + m22[:, sf] * l[:, sj]
    return yu, yl


def block_matvec_bwd(m11, m12, m21, m22, u, l, dyu, dyl, layout):
    """Gradients of block_matvec wrt the four blocks and (u, l)."""
    dm11 = np.zeros_like(m11)
    dm12 = np.zeros_like(m12)
    dm21 = np.zeros_like(m21)
    dm22 = np.zeros_like(m22)
    du = np.zeros_like(u)
    dl = np.zeros_like(l)
    for _, i0, j0, ln, st in layout.spans:
        si = slice(i0, i0 + ln)
        sj = slice(j0, j0 + ln)
        sf = slice(st, st + ln)
        dm11[:, sf] = dyu[:, si] * u[:, sj]
        dm12[:, sf] = dyu[:, si] * l[:, sj]
        dm21[:, sf] = dyl[:, si] * u[:, sj]
        dm22[:, sf] = dyl[:, si] * l[:, sj]
        du[:, sj] += m11[:, sf] * dyu[:, si] + m21[:, sf] * dyl[:, si]
        dl[:, sj] += m12[:, sf] * dyu[:, si] + m22[:, sf] * dyl[:, si]
    return dm11, dm12, dm21, dm22, du, dl


def predict_cov(m11, m12, m21, m22, su, ss, sl, layout):
    """Diagonals of the three covariance parts of A Sigma A^T.

    For blocks X, Y sharing the band layout and a diagonal matrix with
    vector sigma, diag(X Sigma Y^T)[i] = sum_j X[i,j] Y[i,j] sigma[j].
    """
    cu = np.zeros_like(su)
    cl = np.zeros_like(sl)
    cs = np.zeros_like(ss)
    for _, i0, j0, ln, st in layout.spans:
        si = slice(i0, i0 + ln)
        sj = slice(j0, j0 + ln)
        sf = slice(st, st + ln)
        a = m11[:, sf]
        b = m12[:, sf]
        c = m21[:, sf]
        d = m22[:, sf]
        u_j = su[:, sj]
        s_j = ss[:, sj]
        l_j = sl[:, sj]
        cu[:, si] += (a * a) * u_j + (2.0 * a * b) * s_j + (b * b) * l_j
        cl[:, si] += (c * c) * u_j + (2.0 * c * d) * s_j + (d * d) * l_j
        cs[:, si] += (c * a) * u_j + (d * a + c * b) * s_j + (d * b) * l_j
    return cu, cl, cs


def predict_cov_bwd(m11, m12, m21, m22, su, ss, sl, dcu, dcl, dcs, layout):
    """Gradients of predict_cov wrt the four blocks and sigma vectors."""
    dm11 = np.zeros_like(m11)
    dm12 = np.zeros_like(m12)
    dm21 = np.zeros_like(m21)
    dm22 = np.zeros_like(m22)
    dsu = np.zeros_like(su)
    dss = np.zeros_like(ss)
    dsl = np.zeros_like(sl)
    for _, i0, j0, ln, st in layout.spans:
        si = slice(i0, i0 + ln)
        sj = slice(j0, j0 + ln)
        sf = slice(st, st + ln)
        a = m11[:, sf]
        b = m12[:, sf]
        c = m21[:, sf]
        d = m22[:, sf]
        u_j = su[:, sj]
        s_j = ss[:, sj]
        l_j = sl[:, sj]
        gu = dcu[:, si]
        gl = dcl[:, si]
        gs = dcs[:, si]
        dm11[:, sf] = gu * (2.0 * a * u_j + 2.0 * b * s_j) + gs * (c * u_j + d * s_j)
        dm12[:, sf] = gu * (2.0 * a * s_j + 2.0 * b * l_j) + gs * (c * s_j + d * l_j)
        dm21[:, sf] = gl * (2.0 * c * u_j + 2.0 * d * s_j) + gs * (a * u_j + b * s_j)
        dm22[:, sf] = gl * (2.0 * c * s_j + 2.0 * d * l_j) + gs * (a * s_j + b * l_j)
        dsu[:, sj] += gu * (a * a) + gl * (c * c) + gs * (c * a)
        dss[:, sj] += gu * (2.0 * a * b) + gl * (2.0 * c * d) + gs * (d * a + c * b)
        dsl[:, sj] += gu * (b * b) + gl * (d * d) + gs * (d * b)
    return dm11, dm12, dm21, dm22, dsu, dss, dsl
