"""Monge-patch geometry of a graph surface (u, v, f(u, v)).

Given a second-order jet of the height field at a point, these routines
produce the first and second fundamental forms, the unit normal, and the
Gaussian and mean curvatures, using the standard graph-surface formulas:

    g11 = 1 + f_u^2      g12 = f_u f_v      g22 = 1 + f_v^2
    W   = sqrt(1 + f_u^2 + f_v^2)
    h_ij = f_ij / W
    N    = (-f_u, -f_v, 1) / W          (upward normal, n3 > 0)

    K = det II / det I
    H = (g11 h22 - 2 g12 h12 + g22 h11) / (2 det I)
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .errors import NonFiniteError
from .jets import Jet2

DEFAULT_CURVATURE_TOL = 1e-9


class SignClass(enum.Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


class FundamentalForms(NamedTuple):
    g11: float
    g12: float
    g22: float
    h11: float
    h12: float
    h22: float
    n1: float
    n2: float
    n3: float

    @property
    def det_first(self) -> float:
        return self.g11 * self.g22 - self.g12 * self.g12

    @property
    def det_second(self) -> float:
        return self.h11 * self.h22 - self.h12 * self.h12


class CurvatureReport(NamedTuple):
    K: float
    H: float
    valid: bool
    sign_class: SignClass


def fundamental_forms(jet: Jet2) -> FundamentalForms:
    """Fundamental forms and unit normal from a height-field jet."""
    for slot in jet:
        if not math.isfinite(slot):
            raise NonFiniteError(f"non-finite jet slot in {jet}")
    fu, fv = jet.d1, jet.d2
    w2 = 1.0 + fu * fu + fv * fv
    w = math.sqrt(w2)
    inv_w = 1.0 / w
    return FundamentalForms(
        g11=1.0 + fu * fu,
        g12=fu * fv,
        g22=1.0 + fv * fv,
        h11=jet.d11 * inv_w,
        h12=jet.d12 * inv_w,
        h22=jet.d22 * inv_w,
        n1=-fu * inv_w,
        n2=-fv * inv_w,
        n3=inv_w,
    )


def gaussian_curvature(forms: FundamentalForms) -> float:
    return forms.det_second / forms.det_first


def mean_curvature(forms: FundamentalForms) -> float:
    num = (forms.g11 * forms.h22 - 2.0 * forms.g12 * forms.h12
           + forms.g22 * forms.h11)
    return num / (2.0 * forms.det_first)


def curvature_from_jet(jet: Jet2) -> tuple[float, float]:
    """(K, H) of the graph surface at the jet's base point."""
    forms = fundamental_forms(jet)
    return gaussian_curvature(forms), mean_curvature(forms)


def classify_sign(K: float, local_scale: float = 0.0,
                  tol_K: float = DEFAULT_CURVATURE_TOL) -> SignClass:
    """Sign of a curvature value under a scale-aware zero threshold.

    ``local_scale`` should be the curvature magnitude reference for the
    surface at hand (typically max |K| over the evaluated grid), so that
    "zero" is judged relative to how curved the surface actually is.
    """
    if tol_K <= 0.0:
        raise ValueError("tol_K must be positive")
    if abs(K) <= tol_K * (1.0 + abs(local_scale)):
        return SignClass.ZERO
    return SignClass.POSITIVE if K > 0.0 else SignClass.NEGATIVE
