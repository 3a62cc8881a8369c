# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled band kernels: the hot inner loops of the belief-state recurrence.

Each function is the exact twin of the NumPy implementation in
``_kernels_py``; expression grouping and accumulation order are mirrored so
results are bitwise identical (the extension is compiled with
-ffp-contract=off to keep it that way).
"""

import numpy as np

from libc.stdint cimport int64_t

NAME = "compiled"


def block_matvec(double[:, ::1] m11, double[:, ::1] m12,
                 double[:, ::1] m21, double[:, ::1] m22,
                 double[:, ::1] u, double[:, ::1] l, layout):
    cdef int64_t[::1] row0 = layout.row0
    cdef int64_t[::1] col0 = layout.col0
    cdef int64_t[::1] length = layout.length
    cdef int64_t[::1] start = layout.start
    cdef Py_ssize_t B = u.shape[0], m = u.shape[1], noff = row0.shape[0]
    yu_arr = np.zeros((B, m), dtype=np.float64)
    yl_arr = np.zeros((B, m), dtype=np.float64)
    cdef double[:, ::1] yu = yu_arr
    cdef double[:, ::1] yl = yl_arr
    cdef Py_ssize_t b, s, t, i, j, f
    for b in range(B):
        for s in range(noff):
            for t in range(length[s]):
                i = row0[s] + t
                j = col0[s] + t
                f = start[s] + t
                yu[b, i] += m11[b, f] * u[b, j] + m12[b, f] * l[b, j]
                yl[b, i] += m21[b, f] * u[b, j] + m22[b, f] * l[b, j]
    return yu_arr, yl_arr


def block_matvec_bwd(double[:, ::1] m11, double[:, ::1] m12,
                     double[:, ::1] m21, double[:, ::1] m22,
                     double[:, ::1] u, double[:, ::1] l,
                     double[:, ::1] dyu, double[:, ::1] dyl, layout):
    cdef int64_t[::1] row0 = layout.row0
    cdef int64_t[::1] col0 = layout.col0
    cdef int64_t[::1] length = layout.length
    cdef int64_t[::1] start = layout.start
    cdef Py_ssize_t B = u.shape[0], m = u.shape[1], P = m11.shape[1]
    cdef Py_ssize_t noff = row0.shape[0]
    dm11_arr = np.zeros((B, P), dtype=np.float64)
    dm12_arr = np.zeros((B, P), dtype=np.float64)
    dm21_arr = np.zeros((B, P), dtype=np.float64)
    dm22_arr = np.zeros((B, P), dtype=np.float64)
    du_arr = np.zeros((B, m), dtype=np.float64)
    dl_arr = np.zeros((B, m), dtype=np.float64)
    cdef double[:, ::1] dm11 = dm11_arr, dm12 = dm12_arr
    cdef double[:, ::1] dm21 = dm21_arr, dm22 = dm22_arr
    cdef double[:, ::1] du = du_arr, dl = dl_arr
    cdef Py_ssize_t b, s, t, i, j, f
    for b in range(B):
        for s in range(noff):
            for t in range(length[s]):
                i = row0[s] + t
                j = col0[s] + t
                f = start[s] + t
                dm11[b, f] = dyu[b, i] * u[b, j]
                dm12[b, f] = dyu[b, i] * l[b, j]
                dm21[b, f] = dyl[b, i] * u[b, j]
                dm22[b, f] = dyl[b, i] * l[b, j]
                du[b, j] += m11[b, f] * dyu[b, i] + m21[b, f] * dyl[b, i]
                dl[b, j] += m12[b, f] * dyu[b, i] + m22[b, f] * dyl[b, i]
    return dm11_arr, dm12_arr, dm21_arr, dm22_arr, du_arr, dl_arr


def predict_cov(double[:, ::1] m11, double[:, ::1] m12,
                double[:, ::1] m21, double[:, ::1] m22,
                double[:, ::1] su, double[:, ::1] ss, double[:, ::1] sl,
                layout):
    cdef int64_t[::1] row0 = layout.row0
    cdef int64_t[::1] col0 = layout.col0
    cdef int64_t[::1] length = layout.length
    cdef int64_t[::1] start = layout.start
    cdef Py_ssize_t B = su.shape[0], m = su.shape[1], noff = row0.shape[0]
    cu_arr = np.zeros((B, m), dtype=np.float64)
    cl_arr = np.zeros((B, m), dtype=np.float64)
    cs_arr = np.zeros((B, m), dtype=np.float64)
    cdef double[:, ::1] cu = cu_arr, cl = cl_arr, cs = cs_arr
    cdef Py_ssize_t b_, s_, t, i, j, f
    cdef double a, b, c, d, uj, sj, lj
    for b_ in range(B):
        for s_ in range(noff):
            for t in range(length[s_]):
                i = row0[s_] + t
                j = col0[s_] + t
                f = start[s_] + t
                a = m11[b_, f]
                b = m12[b_, f]
                c = m21[b_, f]
                d = m22[b_, f]
                uj = su[b_, j]
                sj = ss[b_, j]
                lj = sl[b_, j]
                cu[b_, i] += (a * a) * uj + ((2.0 * a) * b) * sj + (b * b) * lj
                cl[b_, i] += (c * c) * uj + ((2.0 * c) * d) * sj + (d * d) * lj
                cs[b_, i] += (c * a) * uj + ((d * a) + (c * b)) * sj + (d * b) * lj
    return cu_arr, cl_arr, cs_arr


def predict_cov_bwd(double[:, ::1] m11, double[:, ::1] m12,
                    double[:, ::1] m21, double[:, ::1] m22,
                    double[:, ::1] su, double[:, ::1] ss, double[:, ::1] sl,
                    double[:, ::1] dcu, double[:, ::1] dcl, double[:, ::1] dcs,
                    layout):
    cdef int64_t[::1] row0 = layout.row0
    cdef int64_t[::1] col0 = layout.col0
    cdef int64_t[::1] length = layout.length
    cdef int64_t[::1] start = layout.start
    cdef Py_ssize_t B = su.shape[0], m = su.shape[1], P = m11.shape[1]
    cdef Py_ssize_t noff = row0.shape[0]
    dm11_arr = np.zeros((B, P), dtype=np.float64)
    dm12_arr = np.zeros((B, P), dtype=np.float64)
    dm21_arr = np.zeros((B, P), dtype=np.float64)
    dm22_arr = np.zeros((B, P), dtype=np.float64)
    dsu_arr = np.zeros((B, m), dtype=np.float64)
    dss_arr = np.zeros((B, m), dtype=np.float64)
    dsl_arr = np.zeros((B, m), dtype=np.float64)
    cdef double[:, ::1] dm11 = dm11_arr, dm12 = dm12_arr
    cdef double[:, ::1] dm21 = dm21_arr, dm22 = dm22_arr
    cdef double[:, ::1] dsu = dsu_arr, dss = dss_arr, dsl = dsl_arr
    cdef Py_ssize_t b_, s_, t, i, j, f
    cdef double a, b, c, d, uj, sj, lj, gu, gl, gs
    for b_ in range(B):
        for s_ in range(noff):
            for t in range(length[s_]):
                i = row0[s_] + t
                j = col0[s_] + t
                f = start[s_] + t
                a = m11[b_, f]
                b = m12[b_, f]
                c = m21[b_, f]
                d = m22[b_, f]
                uj = su[b_, j]
                sj = ss[b_, j]
                lj = sl[b_, j]
                gu = dcu[b_, i]
                gl = dcl[b_, i]
                gs = dcs[b_, i]
                dm11[b_, f] = gu * (((2.0 * a) * uj) + ((2.0 * b) * sj)) + gs * ((c * uj) + (d * sj))
                dm12[b_, f] = gu * (((2.0 * a) * sj) + ((2.0 * b) * lj)) + gs * ((c * sj) + (d * lj))
                dm21[b_, f] = gl * (((2.0 * c) * uj) + ((2.0 * d) * sj)) + gs * ((a * uj) + (b * sj))
                dm22[b_, f] = gl * (((2.0 * c) * sj) + ((2.0 * d) * lj)) + gs * ((a * sj) + (b * lj))
                dsu[b_, j] += gu * (a * a) + gl * (c * c) + gs * (c * a)
                dss[b_, j] += gu * ((2.0 * a) * b) + gl * ((2.0 * c) * d) + gs * ((d * a) + (c * b))
                dsl[b_, j] += gu * (b * b) + gl * (d * d) + gs * (d * b)
    return dm11_arr, dm12_arr, dm21_arr, dm22_arr, dsu_arr, dss_arr, dsl_arr
