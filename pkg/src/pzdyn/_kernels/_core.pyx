# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirrors ``pzdyn._kernels.pure`` operation-for-operation. The arithmetic
expressions must stay textually in sync with the pure module, and the
extension is built with FP contraction disabled, so both backends produce
bit-identical output.
"""

from libc.math cimport ceil

import numpy as np


def map_orbit(double x0, double y0, double r, double g, Py_ssize_t n):
    """Iterate the quadratic map n times, returning arrays of length n+1."""
    xs_arr = np.empty(n + 1)
    ys_arr = np.empty(n + 1)
    cdef double[::1] xs = xs_arr
    cdef double[::1] ys = ys_arr
    cdef double x = x0, y = y0, xn, yn
    cdef Py_ssize_t k
    xs[0] = x
    ys[0] = y
    for k in range(1, n + 1):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
        xs[k] = x
        ys[k] = y
    return xs_arr, ys_arr


def map_final(double x0, double y0, double r, double g, Py_ssize_t n):
    """State after n map steps, without storing the orbit."""
    cdef double x = x0, y = y0, xn, yn
    cdef Py_ssize_t k
    for k in range(n):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
    return x, y


def map_window(double x0, double y0, double r, double g,
               Py_ssize_t transient, Py_ssize_t window):
    """Discard `transient` steps, then record the next `window` states."""
    cdef double x = x0, y = y0, xn, yn
    cdef Py_ssize_t k
    for k in range(transient):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
    xs_arr = np.empty(window)
    ys_arr = np.empty(window)
    cdef double[::1] xs = xs_arr
    cdef double[::1] ys = ys_arr
    for k in range(window):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
        xs[k] = x
        ys[k] = y
    return xs_arr, ys_arr


def map_converge_to(double x0, double y0, double r, double g,
                    double tx, double ty, double tol, Py_ssize_t max_steps):
    """First step count at which the orbit is within `tol` of (tx, ty).

    Returns -1 if the target is not reached within `max_steps` steps.
    """
    cdef double x = x0, y = y0, xn, yn, dx, dy
    cdef double t2 = tol * tol
    cdef Py_ssize_t k
    for k in range(max_steps + 1):
        dx = x - tx
        dy = y - ty
        if dx * dx + dy * dy < t2:
            return k
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
    return -1


cdef inline void _rk4_step(double* px, double* py, double r, double g,
                           double h) noexcept nogil:
    cdef double x = px[0], y = py[0]
    cdef double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y, ax, ay
    k1x = x * (1.0 - x) - x * y
    k1y = g * x * y - r * y
    ax = x + 0.5 * h * k1x
    ay = y + 0.5 * h * k1y
    k2x = ax * (1.0 - ax) - ax * ay
    k2y = g * ax * ay - r * ay
    ax = x + 0.5 * h * k2x
    ay = y + 0.5 * h * k2y
    k3x = ax * (1.0 - ax) - ax * ay
    k3y = g * ax * ay - r * ay
    ax = x + h * k3x
    ay = y + h * k3y
    k4x = ax * (1.0 - ax) - ax * ay
    k4y = g * ax * ay - r * ay
    px[0] = x + h * (k1x + 2.0 * (k2x + k3x) + k4x) / 6.0
    py[0] = y + h * (k1y + 2.0 * (k2y + k3y) + k4y) / 6.0


cdef inline Py_ssize_t _n_steps(double t_end, double dt) noexcept nogil:
    cdef Py_ssize_t n = <Py_ssize_t>ceil(t_end / dt - 1e-9)
    return n if n > 0 else 1


def rk4_orbit(double x0, double y0, double r, double g,
              double t_end, double dt):
    """Fixed-step classical RK4 trajectory; last step lands on t_end."""
    cdef Py_ssize_t n = _n_steps(t_end, dt)
    ts_arr = np.empty(n + 1)
    xs_arr = np.empty(n + 1)
    ys_arr = np.empty(n + 1)
    cdef double[::1] ts = ts_arr
    cdef double[::1] xs = xs_arr
    cdef double[::1] ys = ys_arr
    cdef double x = x0, y = y0, h
    cdef Py_ssize_t k
    ts[0] = 0.0
    xs[0] = x
    ys[0] = y
    for k in range(n):
        h = dt if k < n - 1 else t_end - (<double>(n - 1)) * dt
        _rk4_step(&x, &y, r, g, h)
        ts[k + 1] = (<double>(k + 1)) * dt if k < n - 1 else t_end
        xs[k + 1] = x
        ys[k + 1] = y
    return ts_arr, xs_arr, ys_arr


def rk4_final(double x0, double y0, double r, double g,
              double t_end, double dt):
    """Endpoint of the RK4 trajectory, without storing it."""
    cdef Py_ssize_t n = _n_steps(t_end, dt)
    cdef double x = x0, y = y0, h
    cdef Py_ssize_t k
    for k in range(n):
        h = dt if k < n - 1 else t_end - (<double>(n - 1)) * dt
        _rk4_step(&x, &y, r, g, h)
    return x, y


def rk4_min_coords(double x0, double y0, double r, double g,
                   double t_end, double dt):
    """Componentwise minima over the RK4 trajectory (recorded states)."""
    cdef Py_ssize_t n = _n_steps(t_end, dt)
    cdef double x = x0, y = y0, h
    cdef double mx = x0, my = y0
    cdef Py_ssize_t k
    for k in range(n):
        h = dt if k < n - 1 else t_end - (<double>(n - 1)) * dt
        _rk4_step(&x, &y, r, g, h)
        if x < mx:
            mx = x
        if y < my:
            my = y
    return mx, my
