# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot numerical kernels.

Mirror of ``_core_py``; see that module for the contract of each function.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, sin

cnp.import_array()

BACKEND = "compiled"


cdef inline double _beta(double t, double lam, double d) nogil:
    cdef double d2 = d * d
    cdef double osc = (1.0 - d2) * cos(d * t) - 2.0 * d * sin(d * t)
    return (lam / ((1.0 + d2) * (1.0 + d2))) * (t - 1.0 + d2 * (t + 1.0) + exp(-t) * osc)


cdef inline double _dbeta(double t, double lam, double d) nogil:
    cdef double osc = cos(d * t) - d * sin(d * t)
    return lam / (1.0 + d * d) * (1.0 - exp(-t) * osc)


def beta_grid(t, double lambda_r, double delta_r):
    cdef double[::1] tt = np.ascontiguousarray(t, dtype=np.float64)
    out_arr = np.empty(tt.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(tt.shape[0]):
            out[i] = _beta(tt[i], lambda_r, delta_r)
    return out_arr


def dbeta_grid(t, double lambda_r, double delta_r):
    cdef double[::1] tt = np.ascontiguousarray(t, dtype=np.float64)
    out_arr = np.empty(tt.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(tt.shape[0]):
            out[i] = _dbeta(tt[i], lambda_r, delta_r)
    return out_arr


def beta_scalar(double t, double lambda_r, double delta_r):
    return _beta(t, lambda_r, delta_r)


def dbeta_scalar(double t, double lambda_r, double delta_r):
    return _dbeta(t, lambda_r, delta_r)


def ou_filtered_sq(x0, noise, double decay, double kick, w_re, w_im):
    cdef double[::1] x0v = np.ascontiguousarray(x0, dtype=np.float64)
    cdef double[:, ::1] xi = np.ascontiguousarray(noise, dtype=np.float64)
    cdef double[::1] wr = np.ascontiguousarray(w_re, dtype=np.float64)
    cdef double[::1] wi = np.ascontiguousarray(w_im, dtype=np.float64)
    cdef Py_ssize_t n_paths = xi.shape[0]
    cdef Py_ssize_t n_steps = xi.shape[1]
    out_arr = np.empty(n_paths, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t p, k
    cdef double x, z_re, z_im
    with nogil:
        for p in range(n_paths):
            x = x0v[p]
            z_re = wr[0] * x
            z_im = wi[0] * x
            for k in range(n_steps):
                x = decay * x + kick * xi[p, k]
                z_re += wr[k + 1] * x
                z_im += wi[k + 1] * x
            out[p] = z_re * z_re + z_im * z_im
    return out_arr
