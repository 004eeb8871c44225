"""Pure-Python kernels for the hot inner loops.

Reference implementations of orbit iteration and fixed-step 4th-order
integration. The compiled extension (``pzdyn._kernels._core``) mirrors
these functions operation-for-operation; keep the arithmetic expressions
textually in sync so both backends produce bit-identical results.
"""

import math

import numpy as np


def map_orbit(x0, y0, r, g, n):
    """Iterate the quadratic map n times, returning arrays of length n+1."""
    xs = np.empty(n + 1)
    ys = np.empty(n + 1)
    x = float(x0)
    y = float(y0)
    xs[0] = x
    ys[0] = y
    for k in range(1, n + 1):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
        xs[k] = x
        ys[k] = y
    return xs, ys


def map_final(x0, y0, r, g, n):
    """State after n map steps, without storing the orbit."""
    x = float(x0)
    y = float(y0)
    for _ in range(n):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
    return x, y


def map_window(x0, y0, r, g, transient, window):
    """Discard `transient` steps, then record the next `window` states."""
    x = float(x0)
    y = float(y0)
    for _ in range(transient):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
    xs = np.empty(window)
    ys = np.empty(window)
    for k in range(window):
        xn = x * (2.0 - x - y)
        yn = y * (g * x + 1.0 - r)
        x = xn
        y = yn
        xs[k] = x
        ys[k] = y
    return xs, ys


def map_converge_to(x0, y0, r, g, tx, ty, tol, max_steps):
    """First step count at which the orbit is within `tol` of (tx, ty).

    Returns -1 if the target is not reached within `max_steps` steps.
    """
    x = float(x0)
    y = float(y0)
    t2 = tol * tol
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


def _rk4_step(x, y, r, g, h):
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
    x = x + h * (k1x + 2.0 * (k2x + k3x) + k4x) / 6.0
    y = y + h * (k1y + 2.0 * (k2y + k3y) + k4y) / 6.0
    return x, y


def _n_steps(t_end, dt):
    # shared with the compiled backend: full steps of dt plus one final
    # (possibly shortened) step landing exactly on t_end
    n = int(math.ceil(t_end / dt - 1e-9))
    return n if n > 0 else 1


def rk4_orbit(x0, y0, r, g, t_end, dt):
    """Fixed-step classical RK4 trajectory; last step lands on t_end."""
    n = _n_steps(t_end, dt)
    ts = np.empty(n + 1)
    xs = np.empty(n + 1)
    ys = np.empty(n + 1)
    x = float(x0)
    y = float(y0)
    ts[0] = 0.0
    xs[0] = x
    ys[0] = y
    for k in range(n):
        h = dt if k < n - 1 else t_end - (n - 1) * dt
        x, y = _rk4_step(x, y, r, g, h)
        ts[k + 1] = (k + 1) * dt if k < n - 1 else t_end
        xs[k + 1] = x
        ys[k + 1] = y
    return ts, xs, ys


def rk4_final(x0, y0, r, g, t_end, dt):
    """Endpoint of the RK4 trajectory, without storing it."""
    n = _n_steps(t_end, dt)
    x = float(x0)
    y = float(y0)
    for k in range(n):
        h = dt if k < n - 1 else t_end - (n - 1) * dt
        x, y = _rk4_step(x, y, r, g, h)
    return x, y


def rk4_min_coords(x0, y0, r, g, t_end, dt):
    """Componentwise minima over the RK4 trajectory (recorded states)."""
    n = _n_steps(t_end, dt)
    x = float(x0)
    y = float(y0)
    mx = x
    my = y
    for k in range(n):
        h = dt if k < n - 1 else t_end - (n - 1) * dt
        x, y = _rk4_step(x, y, r, g, h)
        if x < mx:
            mx = x
        if y < my:
            my = y
    return mx, my
