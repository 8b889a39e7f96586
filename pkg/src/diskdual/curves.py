"""Parametrized smooth Jordan curves and trapezoid contour quadrature.

The trapezoid rule on a uniform parameter grid is spectrally accurate for
smooth periodic integrands, which makes it the independent cross-check for
every spectral identity in the package.  Near-curve evaluation is refused
outright instead of regularized: the Cauchy kernel quadrature keeps its
advertised accuracy only when dist(z, curve) > 10 * arc_length / M.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BoundaryProximityError, InvalidDataError, InvalidGridError
from .hardy import ExteriorFunction, InteriorFunction
from .spectral import BoundaryDistribution, fourier_synthesize

__all__ = [
    "CurveDescriptor",
    "QuadratureGrid",
    "contour_integral",
    "cauchy_integral_quadrature",
    "pairing_quadrature",
    "interior_node_values",
    "exterior_node_values",
    "boundary_node_values",
]

PROXIMITY_FACTOR = 10.0


@dataclass(frozen=True)
class CurveDescriptor:
    """Positively oriented smooth Jordan curve given by kind + parameters.

    Kinds: ``circle(radius)``, ``ellipse(p, q)`` with semi-axes p, q, and
    ``perturbed-circle(eps, k)`` with radius 1 + eps cos(k theta).
    ``orientation`` is +1 (counterclockwise) or -1 for the reversed curve.
    """

    kind: str
    params: tuple[float, ...]
    orientation: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        if self.kind == "circle":
            (r,) = self.params
            if r <= 0:
                raise ValueError("circle radius must be positive")
        elif self.kind == "ellipse":
            p, q = self.params
            if p <= 0 or q <= 0:
                raise ValueError("ellipse semi-axes must be positive")
        elif self.kind == "perturbed-circle":
            eps, k = self.params
            if not 0 <= eps < 1:
                raise ValueError("perturbation amplitude must lie in [0, 1)")
            if k < 1 or k != int(k):
                raise ValueError("perturbation wavenumber must be a positive integer")
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        speeds = np.abs(self.derivative(np.linspace(0.0, 2 * np.pi, 512, endpoint=False)))
        if speeds.min() <= 0:
            raise ValueError("curve parametrization has a vanishing derivative")

    @classmethod
    def circle(cls, radius: float = 1.0) -> "CurveDescriptor":
        return cls("circle", (radius,))

    @classmethod
    def ellipse(cls, p: float, q: float) -> "CurveDescriptor":
        return cls("ellipse", (p, q))

    @classmethod
    def perturbed_circle(cls, eps: float, k: int) -> "CurveDescriptor":
        return cls("perturbed-circle", (eps, k))

    @classmethod
    def parse(cls, text: str) -> "CurveDescriptor":
        """Parse a ``name:params`` description such as ``ellipse:1.5,0.7``."""
        name, _, rest = text.partition(":")
        try:
            params = tuple(float(p) for p in rest.split(",")) if rest else ()
        except ValueError as exc:
            raise ValueError(f"bad curve parameters in {text!r}") from exc
        if name == "circle":
            return cls.circle(*params) if params else cls.circle()
        if name == "ellipse":
            return cls.ellipse(*params)
        if name == "perturbed-circle":
            return cls.perturbed_circle(*params)
        raise ValueError(f"unknown curve {name!r}")

    def point(self, theta):
        """Position zeta(theta); accepts scalars or arrays."""
        t = self.orientation * np.asarray(theta, dtype=float)
        if self.kind == "circle":
            return self.params[0] * np.exp(1j * t)
        if self.kind == "ellipse":
            p, q = self.params
            return p * np.cos(t) + 1j * q * np.sin(t)
        eps, k = self.params
        return (1.0 + eps * np.cos(k * t)) * np.exp(1j * t)

    def derivative(self, theta):
        """d zeta / d theta at the given parameters."""
        t = self.orientation * np.asarray(theta, dtype=float)
        if self.kind == "circle":
            base = 1j * self.params[0] * np.exp(1j * t)
        elif self.kind == "ellipse":
            p, q = self.params
            base = -p * np.sin(t) + 1j * q * np.cos(t)
        else:
            eps, k = self.params
            base = np.exp(1j * t) * (1j * (1.0 + eps * np.cos(k * t)) - eps * k * np.sin(k * t))
        return self.orientation * base

    def reversed(self) -> "CurveDescriptor":
        return CurveDescriptor(self.kind, self.params, -self.orientation)

    def arc_length(self) -> float:
        return _arc_length(self)

    def distance_to(self, z: complex) -> float:
        """Distance from z to the curve, via a dense parameter sampling."""
        return float(np.min(np.abs(_dense_points(self) - complex(z))))

    def is_unit_circle(self) -> bool:
        return self.kind == "circle" and self.params[0] == 1.0 and self.orientation == 1


@lru_cache(maxsize=None)
def _dense_points(curve: CurveDescriptor, samples: int = 4096) -> np.ndarray:
    pts = curve.point(2 * np.pi * np.arange(samples) / samples)
    pts.flags.writeable = False
    return pts


@lru_cache(maxsize=None)
def _arc_length(curve: CurveDescriptor, samples: int = 4096) -> float:
    theta = 2 * np.pi * np.arange(samples) / samples
    return float(2 * np.pi / samples * np.sum(np.abs(curve.derivative(theta))))


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform parameter grid theta_j = 2 pi j / M with weights 2 pi / M."""

    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", int(self.m))
        if self.m < 16 or self.m % 2 != 0:
            raise InvalidGridError(f"quadrature grid needs an even M >= 16, got {self.m}")

    @property
    def nodes(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.m) / self.m

    @property
    def weight(self) -> float:
        return 2 * np.pi / self.m


def contour_integral(values, curve: CurveDescriptor, grid: QuadratureGrid) -> complex:
    """Trapezoid approximation of the contour integral of g over the curve.

    ``values`` are g at the grid's curve points; the complex line element
    zeta'(theta) d theta is supplied by the curve.
    """
    vals = np.asarray(values, dtype=complex)
    if vals.shape != (grid.m,):
        raise ValueError(f"expected {grid.m} node values, got shape {vals.shape}")
    if not np.all(np.isfinite(vals)):
        raise InvalidDataError("contour integrand contains non-finite node values")
    return complex(grid.weight * np.sum(vals * curve.derivative(grid.nodes)))


def cauchy_integral_quadrature(
    values, curve: CurveDescriptor, grid: QuadratureGrid, z: complex
) -> complex:
    """(1/(2 pi i)) contour integral of f(zeta)/(zeta - z) by the trapezoid rule.

    Refuses z closer to the curve than 10 * arc_length / M, the distance at
    which the rule still delivers the advertised accuracy on smooth data.
    """
    z = complex(z)
    bound = PROXIMITY_FACTOR * curve.arc_length() / grid.m
    dist = curve.distance_to(z)
    if dist <= bound:
        raise BoundaryProximityError(
            f"z at distance {dist:.6g} from the curve; M={grid.m} quadrature needs "
            f"distance > {bound:.6g} (= {PROXIMITY_FACTOR:g} * arc_length / M)"
        )
    vals = np.asarray(values, dtype=complex)
    zeta = curve.point(grid.nodes)
    return contour_integral(vals / (zeta - z), curve, grid) / (2j * np.pi)


def pairing_quadrature(
    u_values, v_values, curve: CurveDescriptor, grid: QuadratureGrid
) -> complex:
    """(1/(2 pi i)) contour integral of u v dzeta from node values of u and v."""
    u_vals = np.asarray(u_values, dtype=complex)
    v_vals = np.asarray(v_values, dtype=complex)
    return contour_integral(u_vals * v_vals, curve, grid) / (2j * np.pi)


def interior_node_values(u: InteriorFunction, curve: CurveDescriptor, grid: QuadratureGrid):
    """Values of the polynomial extension of u at the curve's grid points."""
    zeta = curve.point(grid.nodes)
    return np.polynomial.polynomial.polyval(zeta, u.coeffs)


def exterior_node_values(v: ExteriorFunction, curve: CurveDescriptor, grid: QuadratureGrid):
    """Values of the Laurent tail of v at the curve's grid points."""
    zeta = curve.point(grid.nodes)
    if np.min(np.abs(zeta)) == 0.0:
        raise ValueError("curve passes through the origin; Laurent values undefined")
    if v.coeffs.size == 0:
        return np.zeros(grid.m, dtype=complex)
    w = 1.0 / zeta
    return w * np.polynomial.polynomial.polyval(w, v.coeffs)


def boundary_node_values(f: BoundaryDistribution, curve: CurveDescriptor, grid: QuadratureGrid):
    """Synthesized trace values of f; defined on the unit circle only."""
    if not curve.is_unit_circle():
        raise ValueError("boundary distributions synthesize only on the unit circle")
    return fourier_synthesize(f, grid.m)
