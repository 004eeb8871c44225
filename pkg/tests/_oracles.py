"""Independent numerical oracles shared across the test suite.

These deliberately avoid the closed forms implemented in the package:
root locations come from direct root computation, normal-form partials
from finite differences of the conjugated map callable, and the
discriminating quantity from complex arithmetic over those
finite-difference ingredients.
"""

import numpy as np

from pzdyn import transformed_map
from pzdyn.discrete import in_param_set_S, s_gamma_bounds
from pzdyn.model import Params


def quad_root_moduli(B, C):
    """Moduli of the roots of lambda^2 + B*lambda + C (vectorized)."""
    B = np.asarray(B, dtype=float)
    C = np.asarray(C, dtype=float)
    disc = B * B - 4.0 * C
    m1 = np.empty_like(B)
    m2 = np.empty_like(B)
    real = disc >= 0.0
    root = np.sqrt(np.where(real, disc, 0.0))
    m1[real] = np.abs((-B[real] - root[real]) / 2.0)
    m2[real] = np.abs((-B[real] + root[real]) / 2.0)
    # complex-conjugate pair: |lambda|^2 equals the constant term
    m1[~real] = np.sqrt(C[~real])
    m2[~real] = m1[~real]
    return m1, m2


def coarse_location(m1, m2):
    """'inside' / 'outside' / 'mixed' by comparing both moduli with 1."""
    if m1 < 1.0 and m2 < 1.0:
        return "inside"
    if m1 > 1.0 and m2 > 1.0:
        return "outside"
    return "mixed"


def fd_jacobian(T, h=1e-5):
    """First partials of a planar map at the origin by central differences."""
    xp = T(h, 0.0)
    xm = T(-h, 0.0)
    yp = T(0.0, h)
    ym = T(0.0, -h)
    return np.array(
        [
            [(xp[0] - xm[0]) / (2 * h), (yp[0] - ym[0]) / (2 * h)],
            [(xp[1] - xm[1]) / (2 * h), (yp[1] - ym[1]) / (2 * h)],
        ]
    )


def fd_second_partials(T, h=1e-5):
    """Second partials (FXX, FXY, FYY, GXX, GXY, GYY) of a planar map at
    the origin by central differences; exact up to roundoff for quadratic
    maps."""
    o = T(0.0, 0.0)
    xp = T(h, 0.0)
    xm = T(-h, 0.0)
    yp = T(0.0, h)
    ym = T(0.0, -h)
    pp = T(h, h)
    pm = T(h, -h)
    mp = T(-h, h)
    mm = T(-h, -h)
    out = {}
    for i, name in ((0, "F"), (1, "G")):
        out[name + "XX"] = (xp[i] - 2 * o[i] + xm[i]) / (h * h)
        out[name + "YY"] = (yp[i] - 2 * o[i] + ym[i]) / (h * h)
        out[name + "XY"] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4 * h * h)
    return out


def fd_third_partials(T, h=1e-5):
    """Third partials of a planar map at the origin by central differences
    (all eight, as a dict); zero up to roundoff for quadratic maps."""
    out = {}

    def third_xxx(i):
        return (
            T(2 * h, 0.0)[i] - 2 * T(h, 0.0)[i] + 2 * T(-h, 0.0)[i] - T(-2 * h, 0.0)[i]
        ) / (2 * h**3)

    def third_yyy(i):
        return (
            T(0.0, 2 * h)[i] - 2 * T(0.0, h)[i] + 2 * T(0.0, -h)[i] - T(0.0, -2 * h)[i]
        ) / (2 * h**3)

    def third_xxy(i):
        # d^3/dx^2 dy via difference of d^2/dx^2 at y = +-h
        up = (T(h, h)[i] - 2 * T(0.0, h)[i] + T(-h, h)[i]) / (h * h)
        dn = (T(h, -h)[i] - 2 * T(0.0, -h)[i] + T(-h, -h)[i]) / (h * h)
        return (up - dn) / (2 * h)

    def third_xyy(i):
        up = (T(h, h)[i] - 2 * T(h, 0.0)[i] + T(h, -h)[i]) / (h * h)
        dn = (T(-h, h)[i] - 2 * T(-h, 0.0)[i] + T(-h, -h)[i]) / (h * h)
        return (up - dn) / (2 * h)

    for i, name in ((0, "F"), (1, "G")):
        out[name + "XXX"] = third_xxx(i)
        out[name + "XXY"] = third_xxy(i)
        out[name + "XYY"] = third_xyy(i)
        out[name + "YYY"] = third_yyy(i)
    return out


def fd_discriminating_quantity(setup, h=0.5):
    """Discriminating quantity computed entirely from finite differences
    of the conjugated map: multipliers from the FD Jacobian, L_jk from FD
    second partials, then the defining complex-arithmetic formula. The
    large step h is exact for the quadratic map and keeps roundoff small.
    """
    T = transformed_map(setup)
    J = fd_jacobian(T, h)
    lams = np.linalg.eigvals(J)
    l1 = lams[0] if lams[0].imag < 0 else lams[1]
    l2 = l1.conjugate()
    d = fd_second_partials(T, h)
    L20 = complex(d["FXX"] - d["FYY"] + 2 * d["GXY"], d["GXX"] - d["GYY"] - 2 * d["FXY"]) / 8
    L11 = complex(d["FXX"] + d["FYY"], d["GXX"] + d["GYY"]) / 4
    L02 = complex(d["FXX"] - d["FYY"] - 2 * d["GXY"], d["GXX"] - d["GYY"] + 2 * d["FXY"]) / 8
    L21 = 0.0j
    term = (1 - 2 * l1) * l2 * l2 / (1 - l1)
    return (
        -(term * L11 * L20).real
        - 0.5 * abs(L11) ** 2
        - abs(L02) ** 2
        + (l2 * L21).real
    )


def sample_admissible_params(n, rng):
    """Random (r, gamma) pairs satisfying 0 < r <= 1 and gamma <= r or
    (r, gamma) in S, half from each branch."""
    out = []
    while len(out) < n:
        r = float(rng.uniform(0.02, 1.0))
        if len(out) % 2 == 0:
            g = float(r * rng.uniform(0.05, 1.0))
        else:
            lo, hi = s_gamma_bounds(r)
            lo = max(lo, np.nextafter(r, np.inf))
            if lo >= hi:
                continue
            g = float(lo + (hi - lo) * rng.uniform(0.001, 0.999))
        p = Params(r, g)
        if g <= r or in_param_set_S(p).inside:
            out.append(p)
    return out
