"""2-orbifolds and line V-bundles over them.

An orbifold here is a closed oriented genus-g surface with m cone points of
cyclic isotropy orders alpha_i >= 2; the cone point locations play no role
in any implemented formula and are not modeled.

A line V-bundle L is stored by its desingularized (smooth) degree deg|L|
together with the normalized local weights 0 <= gamma_i < alpha_i at the
cone points.  Its rational degree is the derived quantity

    deg L = deg|L| + sum_i gamma_i / alpha_i,

so the realizability constraint "deg L - sum gamma_i/alpha_i is an integer"
holds by construction and tensor product (written additively) is
componentwise addition of weights with the integer carry absorbed into the
smooth degree.

The canonical bundle K has smooth degree 2g - 2 and weights alpha_i - 1;
the rational Euler characteristic is -deg K.  The index form of
Riemann-Roch on such an orbifold reads

    h0(L) - h0(K - L) = 1 - g + deg|L|.

For a fibration bundle L0 of rational degree ell != 0, each bundle class
mod Z L0 carries a fiber-holonomy invariant: the canonical representative
is the unique L' = L + k L0 with

    rho(L') = (deg K - 2 deg L') / (2 ell) in [0, 1),

and exp(2 pi i rho) is the holonomy of the determinant-flat connection
along a regular fiber.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from seifinv.numkernel import frac


@dataclass(frozen=True)
class Orbifold:
    """Closed oriented 2-orbifold of genus ``genus`` with cone points of
    orders ``alphas`` (each >= 2)."""

    genus: int
    alphas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        for a in self.alphas:
            if a < 2:
                raise ValueError(f"isotropy orders must be >= 2, got {a}")

    @property
    def num_cone_points(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class VLineBundle:
    """Line V-bundle: smooth degree plus normalized cone-point weights."""

    base: Orbifold
    smooth_degree: int
    gammas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(int(g) for g in self.gammas))
        if len(self.gammas) != self.base.num_cone_points:
            raise ValueError("one weight per cone point required")
        for g, a in zip(self.gammas, self.base.alphas):
            if not 0 <= g < a:
                raise ValueError(f"weight {g} not normalized for isotropy {a}")


def rational_degree(L: VLineBundle) -> Fraction:
    """deg L = deg|L| + sum gamma_i / alpha_i."""
    deg = Fraction(L.smooth_degree)
    for g, a in zip(L.gammas, L.base.alphas):
        deg += Fraction(g, a)
    return deg


def trivial_bundle(S: Orbifold) -> VLineBundle:
    return VLineBundle(S, 0, (0,) * S.num_cone_points)


def canonical_bundle(S: Orbifold) -> VLineBundle:
    """K: smooth degree 2g - 2, weights alpha_i - 1."""
    return VLineBundle(S, 2 * S.genus - 2, tuple(a - 1 for a in S.alphas))


def euler_characteristic(S: Orbifold) -> Fraction:
    """Rational Euler characteristic 2 - 2g - sum (1 - 1/alpha_i) = -deg K."""
    chi = Fraction(2 - 2 * S.genus)
    for a in S.alphas:
        chi -= Fraction(a - 1, a)
    return chi


def add_bundles(L1: VLineBundle, L2: VLineBundle) -> VLineBundle:
    """Tensor product in additive notation; weights add mod alpha_i with the
    carry pushed into the smooth degree, so rational degrees add exactly."""
    if L1.base != L2.base:
        raise ValueError("bundles live over different orbifolds")
    smooth = L1.smooth_degree + L2.smooth_degree
    gammas = []
    for g1, g2, a in zip(L1.gammas, L2.gammas, L1.base.alphas):
        total = g1 + g2
        gammas.append(total % a)
        smooth += total // a
    return VLineBundle(L1.base, smooth, tuple(gammas))


def scale_bundle(L: VLineBundle, k: int) -> VLineBundle:
    """k-th tensor power (k may be negative; k = -1 is the dual)."""
    smooth = k * L.smooth_degree
    gammas = []
    for g, a in zip(L.gammas, L.base.alphas):
        total = k * g
        gammas.append(total % a)
        smooth += total // a
    return VLineBundle(L.base, smooth, tuple(gammas))


def subtract_bundles(L1: VLineBundle, L2: VLineBundle) -> VLineBundle:
    return add_bundles(L1, scale_bundle(L2, -1))


def rrk_index(L: VLineBundle) -> int:
    """Index h0(L) - h0(K - L) = 1 - g + deg|L|."""
    return 1 - L.base.genus + L.smooth_degree


def holonomy_theta(L: VLineBundle, L0: VLineBundle) -> Fraction:
    """Fiber holonomy class {deg L / deg L0} in [0, 1); requires deg L0 != 0.

    For deg L0 = 0 the fiber holonomy of a flat connection is not
    determined by the topology, so no canonical value exists.
    """
    ell = rational_degree(L0)
    if ell == 0:
        raise ValueError("holonomy_theta requires deg L0 != 0")
    return frac(rational_degree(L) / ell)


def canonical_representative(
    class_rep: VLineBundle, L0: VLineBundle
) -> tuple[VLineBundle, int, Fraction]:
    """Canonical representative of the class of ``class_rep`` mod Z L0.

    Returns (L', k, rho) with L' = class_rep + k L0, rho(L') in [0, 1)
    and k the unique such integer.
    """
    ell = rational_degree(L0)
    if ell == 0:
        raise ValueError("canonical_representative requires deg L0 != 0")
    if class_rep.base != L0.base:
        raise ValueError("bundles live over different orbifolds")
    deg_k = rational_degree(canonical_bundle(class_rep.base))
    c0 = rational_degree(class_rep)
    t = (deg_k - 2 * c0) / (2 * ell)
    k = t.numerator // t.denominator
    rho = t - k
    rep = add_bundles(class_rep, scale_bundle(L0, k))
    assert 0 <= rho < 1
    assert (deg_k - 2 * rational_degree(rep)) / (2 * ell) == rho
    return rep, k, rho


def holonomy_rho(L: VLineBundle, L0: VLineBundle) -> Fraction:
    """rho(L) = (deg K - 2 deg L)/(2 ell), not reduced mod 1."""
    ell = rational_degree(L0)
    if ell == 0:
        raise ValueError("holonomy_rho requires deg L0 != 0")
    deg_k = rational_degree(canonical_bundle(L.base))
    return (deg_k - 2 * rational_degree(L)) / (2 * ell)


def bundle_to_json(L: VLineBundle) -> dict:
    return {
        "genus": L.base.genus,
        "alphas": list(L.base.alphas),
        "bundle": {"smooth_degree": L.smooth_degree, "gammas": list(L.gammas)},
    }


def bundle_from_json(data: dict) -> VLineBundle:
    base = Orbifold(data["genus"], tuple(data["alphas"]))
    b = data["bundle"]
    return VLineBundle(base, b["smooth_degree"], tuple(b["gammas"]))
