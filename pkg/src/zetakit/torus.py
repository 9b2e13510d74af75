"""Finite torus models: orbit representatives, wall data, vertically
labelled paths and the bijection onto the torus.

The torus of rank n is the coroot lattice modulo m times itself, where
m = 2n+1 in types B and C and m = 2n-1 in type D.  Since m is odd the
quotient is coordinatewise arithmetic modulo m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import paths
from .errors import (
    InternalError,
    InvalidLabelling,
    NotRepresentative,
    ShapeMismatch,
)
from .paths import Path, east_counts, make_path, rises, sign_of
from .rootposet import (
    highest_root_vector,
    is_positive_root_vector,
    reflection_from_vector,
    simple_root_vectors,
)
from .signedperm import SignedPermutation, weyl_group


def modulus(lattice_type: str, n: int) -> int:
    if lattice_type in ("B", "C"):
        return 2 * n + 1
    if lattice_type == "D":
        return 2 * n - 1
    raise ValueError("no torus modulus for type %r" % lattice_type)


def min_rank(lattice_type: str) -> int:
    """Smallest rank the path models support."""
    return 2 if lattice_type in ("B", "D") else 1


@dataclass(frozen=True)
class TorusElement:
    lattice_type: str
    coords: tuple[int, ...]

    def __post_init__(self):
        m = self.mod
        if any(not 0 <= c < m for c in self.coords):
            raise NotRepresentative("coords %r not reduced mod %d" % (self.coords, m))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def mod(self) -> int:
        return modulus(self.lattice_type, len(self.coords))


def torus_element(lattice_type: str, vector) -> TorusElement:
    vec = tuple(vector)
    m = modulus(lattice_type, len(vec))
    return TorusElement(lattice_type, tuple(v % m for v in vec))


def lattice_lift(t: TorusElement) -> tuple[int, ...]:
    """An integer lift; for types B and D the coordinate sum is even."""
    lift = list(t.coords)
    if t.lattice_type in ("B", "D") and sum(lift) % 2 != 0:
        lift[0] -= t.mod
    return tuple(lift)


def torus_to_json(t: TorusElement) -> dict:
    return {"type": t.lattice_type, "n": t.n, "mod": t.mod, "coords": list(t.coords)}


def torus_from_json(d: dict) -> TorusElement:
    return torus_element(d["type"], d["coords"])


def _expect_kind(p: Path, lattice_type: str) -> int:
    if lattice_type in ("B", "C"):
        if p.kind.shape != "lattice" or p.kind.params[0] != p.kind.params[1]:
            raise ShapeMismatch("type %s needs a square lattice path, got %s" % (lattice_type, p.kind))
        return p.kind.params[1]
    if lattice_type == "D":
        if p.kind.shape != "signed_lattice":
            raise ShapeMismatch("type D needs a signed lattice path, got %s" % p.kind)
        return p.kind.params[0]
    raise ValueError("unsupported type %r" % lattice_type)


def lambda_of_path(p: Path, lattice_type: str) -> tuple[int, ...]:
    """The orbit representative encoded by a path."""
    n = _expect_kind(p, lattice_type)
    pi = east_counts(p)
    if lattice_type == "C":
        return pi
    if lattice_type == "D":
        head = sum(pi[: n - 2]) % 2
        lam = [sign_of(p) * pi[0]] + list(pi[1 : n - 1])
        lam.append(2 * pi[n - 1] - pi[n - 2] if head == 0 else 2 * n - 1 - 2 * pi[n - 1] + pi[n - 2])
        return tuple(lam)
    head = sum(pi[: n - 2]) % 2
    lam = list(pi[: n - 1])
    lam.append(2 * pi[n - 1] - pi[n - 2] if head == 0 else 2 * n + 1 - 2 * pi[n - 1] + pi[n - 2])
    return tuple(lam)


def is_representative(lam, lattice_type: str) -> bool:
    lam = tuple(lam)
    n = len(lam)
    if lattice_type == "C":
        return all(0 <= v <= n for v in lam) and all(a <= b for a, b in zip(lam, lam[1:]))
    if lattice_type == "B":
        return (
            lam[0] >= 0
            and all(a <= b for a, b in zip(lam, lam[1:]))
            and lam[-2] + lam[-1] <= 2 * n + 1
            and sum(lam) % 2 == 0
        )
    if lattice_type == "D":
        return (
            abs(lam[0]) <= lam[1]
            and all(a <= b for a, b in zip(lam[1:], lam[2:]))
            and lam[-2] + lam[-1] <= 2 * n - 1
            and sum(lam) % 2 == 0
        )
    raise ValueError("unsupported type %r" % lattice_type)


def path_of_lambda(lam, lattice_type: str) -> Path:
    """Inverse of lambda_of_path."""
    lam = tuple(lam)
    n = len(lam)
    if not is_representative(lam, lattice_type):
        raise NotRepresentative("%r does not represent an orbit in type %s" % (lam, lattice_type))
    if lattice_type == "C":
        pi = lam
        sign = 1
    else:
        full = 2 * n + 1 if lattice_type == "B" else 2 * n - 1
        pi = [abs(lam[0])] + [abs(v) for v in lam[1 : n - 1]]
        head = sum(pi[: n - 2]) % 2
        last2 = lam[-2] + lam[-1] if head == 0 else full + lam[-2] - lam[-1]
        if last2 % 2 != 0:
            raise NotRepresentative("parity mismatch in %r" % (lam,))
        pi.append(last2 // 2)
        sign = -1 if (lattice_type == "D" and lam[0] < 0) else 1
    if any(a > b for a, b in zip(pi, pi[1:])):
        raise NotRepresentative("east counts %r not increasing" % (pi,))
    emax = n if lattice_type in ("B", "C") else n - 1
    if pi[-1] > emax:
        raise NotRepresentative("east count %d exceeds width %d" % (pi[-1], emax))
    steps = []
    prev = 0
    for v in pi:
        steps.extend([paths.E] * (v - prev))
        steps.append(paths.N)
        prev = v
    steps.extend([paths.E] * (emax - prev))
    if lattice_type in ("B", "C"):
        return make_path(steps, paths.lattice(n, n))
    kind = paths.signed_lattice(n)
    slot = 0 if steps[0] == paths.E else None
    return make_path(steps, kind, slot, sign if slot is not None else 1)


def wall_roots(lam, lattice_type: str) -> tuple[tuple[int, ...], ...]:
    """Vectors of the walls of the scaled fundamental alcove containing
    the representative: simple roots plus possibly the negated highest
    root."""
    lam = tuple(lam)
    n = len(lam)
    simples = simple_root_vectors(lattice_type, n)
    out = []
    if lattice_type == "C":
        if lam[0] == 0:
            out.append(simples[0])
    elif lattice_type == "B":
        if lam[0] == 0:
            out.append(simples[0])
        if lam[-2] + lam[-1] == 2 * n + 1:
            out.append(tuple(-c for c in highest_root_vector("B", n)))
    else:
        if lam[0] == -lam[1]:
            out.append(simples[0])
        if lam[-2] + lam[-1] == 2 * n - 1:
            out.append(tuple(-c for c in highest_root_vector("D", n)))
    for i in range(1, n):
        if lam[i - 1] == lam[i]:
            out.append(simples[i])
    return tuple(out)


@dataclass(frozen=True)
class VertPath:
    """A vertically labelled path: the i-th North step carries label
    labels(i)."""

    path: Path
    labels: SignedPermutation


def is_vertical_labelling(p: Path, v: SignedPermutation, lattice_type: str) -> bool:
    if lattice_type == "A":
        if not paths.is_dyck(p) or not v.is_permutation():
            return False
        return all(v(i) < v(i + 1) for i in rises(p))
    n = _expect_kind(p, lattice_type)
    if v.n != n:
        return False
    if not all(v(i) < v(i + 1) for i in rises(p)):
        return False
    if lattice_type in ("B", "C"):
        return not (p.steps[0] == paths.N and v(1) < 0)
    lam = lambda_of_path(p, "D")
    if p.steps[0] == paths.N and p.steps[1] == paths.N and not abs(v(1)) < v(2):
        return False
    prod = 1 if v.sign_changes() % 2 == 0 else -1
    want = sign_of(p) * (-1) ** ((lam[-2] + lam[-1]) % 2)
    return prod == want


def vert(p: Path, v: SignedPermutation, lattice_type: str) -> VertPath:
    if not is_vertical_labelling(p, v, lattice_type):
        raise InvalidLabelling("labels %s are not a vertical labelling of %s" % (v, p))
    return VertPath(p, v)


def label_twist(vp: VertPath, lattice_type: str) -> SignedPermutation:
    """The group element acting on the representative: the labels, with
    type-specific sign twists at the first and last slots."""
    v = vp.labels
    if lattice_type in ("A", "C"):
        return v
    n = v.n
    lam = lambda_of_path(vp.path, lattice_type)
    flip_last = (lam[-2] + lam[-1]) % 2 != 0
    win = list(v.window)
    if flip_last:
        win[n - 1] = -win[n - 1]
    if lattice_type == "D" and sign_of(vp.path) < 0:
        win[0] = -win[0]
    return SignedPermutation(tuple(win))


def to_torus(vp: VertPath, lattice_type: str) -> TorusElement:
    """The torus element of a vertically labelled path."""
    lam = lambda_of_path(vp.path, lattice_type)
    u = label_twist(vp, lattice_type)
    return torus_element(lattice_type, u.act(lam))


def enumerate_vert(lt: str, n: int):
    if lt == "A":
        kinds = paths.lattice(n, n)
        src = (p for p in paths.enumerate_paths(kinds) if paths.is_dyck(p))
    elif lt in ("B", "C"):
        src = paths.enumerate_paths(paths.lattice(n, n))
    else:
        src = paths.enumerate_paths(paths.signed_lattice(n))
    # labels of a type D path run over the full signed group; the even-sign
    # constraint is absorbed by the sign-product condition
    group = weyl_group("B" if lt == "D" else lt, n)
    for p in src:
        rr = rises(p)
        starts_n = bool(p.steps) and p.steps[0] == paths.N
        starts_nn = starts_n and len(p.steps) > 1 and p.steps[1] == paths.N
        if lt == "D":
            lam = lambda_of_path(p, "D")
            want = sign_of(p) * (-1) ** ((lam[-2] + lam[-1]) % 2)
        for w in group:
            win = w.window
            if any(w(i) >= w(i + 1) for i in rr):
                continue
            if lt == "A":
                if all(v > 0 for v in win):
                    yield VertPath(p, w)
                continue
            if lt in ("B", "C"):
                if not (starts_n and win[0] < 0):
                    yield VertPath(p, w)
                continue
            if starts_nn and not abs(win[0]) < win[1]:
                continue
            prod = -1 if w.sign_changes() % 2 else 1
            if prod == want:
                yield VertPath(p, w)


@lru_cache(maxsize=16)
def _action_table(lt: str, n: int):
    """Per Weyl element, (slots, signs) arrays for fast vector actions."""
    table = []
    for w in weyl_group(lt, n):
        slots = tuple(abs(v) - 1 for v in w.window)
        signs = tuple(1 if v > 0 else -1 for v in w.window)
        table.append((w, slots, signs))
    return tuple(table)


def canonicalize(t: TorusElement) -> tuple[tuple[int, ...], SignedPermutation]:
    """The unique pair (representative, group element) with u * lam = t and
    u fixing the wall data positively.

    Brute-force orbit scan; the rank stays small enough that scanning the
    full Weyl group is cheap and unambiguous.
    """
    lt, n, m = t.lattice_type, t.n, t.mod
    if lt == "D" and n < 3:
        # rank 2 splits into two strands and orbit representatives are no
        # longer unique, so there is nothing canonical to return
        raise NotRepresentative("type D canonicalization needs rank >= 3")
    x = t.coords
    lam = None
    candidates = []
    for w, slots, signs in _action_table(lt, n):
        y = [0] * n
        for i in range(n):
            y[slots[i]] = (signs[i] * x[i]) % m
        lifts = [tuple(y)]
        if lt == "D" and y[0] != 0:
            lifts.append((y[0] - m,) + tuple(y[1:]))
        for cand in lifts:
            if is_representative(cand, lt):
                if lam is None:
                    lam = cand
                if tuple(v % m for v in cand) == tuple(y):
                    candidates.append((cand, w))
    if lam is None:
        raise InternalError("no representative found for %r" % (t,))
    walls = wall_roots(lam, lt)
    hits = []
    for cand, w in candidates:
        if cand != lam:
            continue
        u = w.inverse()
        if all(is_positive_root_vector(u.act(vec)) for vec in walls):
            hits.append(u)
    uniq = sorted(set(h.window for h in hits))
    if len(uniq) != 1:
        raise InternalError("canonical coset representative not unique for %r" % (t,))
    return lam, SignedPermutation(uniq[0])


def stabilizer(lam, lattice_type: str) -> tuple[SignedPermutation, ...]:
    """Subgroup generated by the reflections through the wall roots."""
    n = len(tuple(lam))
    gens = [reflection_from_vector(vec, n) for vec in wall_roots(lam, lattice_type)]
    seen = {SignedPermutation.identity(n)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = g.compose(s)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return tuple(sorted(seen, key=lambda w: w.window))
