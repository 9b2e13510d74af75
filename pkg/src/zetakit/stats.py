"""Path statistics: order-ideal area, its label-refined variant, and the
diagonal inversion counts."""

from __future__ import annotations

from .errors import InvalidLabelling, ShapeMismatch
from .paths import Path
from .rootposet import (
    _upsets,
    ballot_to_antichain,
    diag_validate,
    is_positive_root_vector,
    positive_roots,
    to_vector,
)
from .signedperm import SignedPermutation
from .torus import VertPath
from .zeta import area_vector


def _ideal(p: Path, lattice_type: str):
    """Positive roots with nothing from the path's antichain below them."""
    anti = ballot_to_antichain(p, lattice_type)
    n = p.kind.params[0] // 2 if p.kind.shape == "ballot" else p.kind.params[0]
    ups = _upsets(lattice_type, n)
    return [x for x in positive_roots(lattice_type, n) if not any(x in ups[y] for y in anti)]


def area(p: Path, lattice_type: str) -> int:
    """Size of the order ideal of roots not above the path's antichain."""
    return len(_ideal(p, lattice_type))


def area_prime(p: Path, w: SignedPermutation, lattice_type: str) -> int:
    """Ideal roots that the labelling keeps positive."""
    if not diag_validate(p, w, lattice_type):
        raise InvalidLabelling("labels %s do not fit the valleys of %s" % (w, p))
    n = w.n
    return sum(
        1 for x in _ideal(p, lattice_type) if is_positive_root_vector(w.act(to_vector(x, n)))
    )


def _row_area_vector(p: Path) -> tuple[int, ...]:
    """Type C area vector read bottom row first."""
    mu = area_vector(p, "C")
    return tuple(reversed(mu))


def dinv_c(p: Path) -> int:
    """Diagonal inversions of a square lattice path; pairs may count twice."""
    rho = _row_area_vector(p)
    n = len(rho)
    total = sum(1 for v in rho if v == 0)
    for i in range(n):
        for j in range(i + 1, n):
            if rho[i] == rho[j]:
                total += 1
            if rho[i] == rho[j] + 1:
                total += 1
            if rho[i] == -rho[j]:
                total += 1
            if rho[i] == -rho[j] + 1:
                total += 1
    return total


def dinv_c_prime(vp: VertPath) -> int:
    """Label-refined diagonal inversions of a vertically labelled path."""
    rho = _row_area_vector(vp.path)
    u = vp.labels
    n = len(rho)
    total = sum(1 for i in range(n) if rho[i] == 0 and u(i + 1) < 0)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = u(i + 1), u(j + 1)
            if rho[i] == rho[j] and a < b:
                total += 1
            if rho[i] == rho[j] + 1 and a > b:
                total += 1
            if rho[i] == -rho[j] and a < -b:
                total += 1
            if rho[i] == -rho[j] + 1 and a > -b:
                total += 1
    return total


def dinv_b_experimental(p: Path) -> int:
    """Candidate diagonal inversion count over the type B area vector.

    Exploratory only; not tied to any verified identity.
    """
    mu = area_vector(p, "B")
    n = len(mu)
    total = sum(1 for v in mu if v in (0, 1))
    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] == mu[j]:
                total += 1
            if mu[i] == mu[j] - 1:
                total += 1
            if -mu[i] == mu[j]:
                total += 1
            if -mu[i] == mu[j] - 1:
                total += 1
    return total
