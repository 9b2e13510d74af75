"""Exhaustive verification harness.

Every named check runs over a complete enumeration at the requested rank
and reports the first counterexample in enumeration order, so reports are
byte-identical across runs.  The uniform and window-arithmetic checks tie
the combinatorial maps to the group-theoretic construction and serve as an
independent oracle for them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import paths, stats, zeta
from .affine import (
    coerce_affine,
    decompose,
    dominant_frame,
    dominant_frame_parts,
    grassmannian_companion,
    translation,
)
from .errors import CapExceeded
from .paths import (
    Path,
    ballot,
    count_paths,
    enumerate_paths,
    enumeration_cap,
    is_dyck,
    lattice,
    render_path,
    rises,
    sign_of,
    signed_ballot,
    signed_lattice,
    strip_signs,
    valleys,
)
from .rootposet import (
    ParkingFunction,
    diag_validate,
    root_from_vector,
    to_parking_function,
)
from .signedperm import SignedPermutation, weyl_group
from .torus import (
    VertPath,
    enumerate_vert,
    label_twist,
    lambda_of_path,
    min_rank,
    modulus,
    to_torus,
    wall_roots,
)

CHECK_NAMES = (
    "counting",
    "bijectivity",
    "labelled_bijectivity",
    "inverse_roundtrip",
    "sweep_equiv",
    "rise_valley",
    "stats_identity",
    "uniform",
    "anderson",
)

_LABELLED = ("labelled_bijectivity", "rise_valley", "uniform", "anderson")


def uniform_oracle(vp: VertPath, lattice_type: str) -> ParkingFunction:
    """Parking function of a labelled path computed through the group
    side: twist the wall roots of the representative by the frame and the
    Grassmannian companion instead of using the combinatorial map."""
    lam = lambda_of_path(vp.path, lattice_type)
    n = len(lam)
    u = label_twist(vp, lattice_type)
    mu = zeta.area_vector(vp.path, lattice_type)
    sigma = grassmannian_companion(mu, lattice_type)
    _, tau = dominant_frame_parts(lattice_type, n)
    ts = tau.compose(sigma)
    w = u.compose(ts)
    ts_inv = ts.inverse()
    roots = tuple(
        sorted(root_from_vector(ts_inv.act(vec), lattice_type) for vec in wall_roots(lam, lattice_type))
    )
    return ParkingFunction(w, roots)


def anderson_windows(vp: VertPath, lattice_type: str) -> dict:
    """Window arithmetic behind the torus element of a labelled path."""
    lam = lambda_of_path(vp.path, lattice_type)
    n = len(lam)
    m = modulus(lattice_type, n)
    mu = zeta.area_vector(vp.path, lattice_type)
    sigma = grassmannian_companion(mu, lattice_type)
    w_dom = translation(mu).compose(coerce_affine(sigma, n)).inverse()
    word = zeta.reading_word(vp, lattice_type)
    w_reg = coerce_affine(word, n).compose(w_dom)
    frame = dominant_frame(lattice_type, n)
    product = w_reg.compose(frame.inverse())
    vector = tuple((-c) % m for c in product.act((0,) * n))
    orbit_rep = frame.compose(w_dom.inverse()).act((0,) * n)
    return {
        "w_dom": w_dom,
        "w_reg": w_reg,
        "product": product,
        "vector": vector,
        "orbit_rep": orbit_rep,
    }


def anderson_check(vp: VertPath, lattice_type: str) -> bool:
    """The window arithmetic must reproduce both the torus element and the
    orbit representative of the labelled path."""
    data = anderson_windows(vp, lattice_type)
    lam = lambda_of_path(vp.path, lattice_type)
    return data["vector"] == to_torus(vp, lattice_type).coords and data["orbit_rep"] == lam


def _rise_tokens(vp: VertPath, lattice_type: str):
    p, v = vp.path, vp.labels
    toks = []
    starts_nn = len(p.steps) >= 2 and p.steps[0] == paths.N and p.steps[1] == paths.N
    for i in rises(p):
        if lattice_type == "D" and i == 1 and starts_nn:
            toks.append(("abs", abs(v(1)), v(2)))
        else:
            a, b = v(i), v(i + 1)
            toks.append(("pair", min((b, a), (-a, -b))))
    if lattice_type == "C" and p.steps[0] == paths.N:
        a = v(1)
        toks.append(("pair", min((a, -a), (a, -a))))
    if lattice_type == "B" and p.steps[0] == paths.N:
        toks.append(("pair", min((v(1), 0), (0, -v(1)))))
    return sorted(toks)


def _valley_tokens(p: Path, w: SignedPermutation, lattice_type: str):
    n = w.n
    toks = []
    if lattice_type == "D":
        eps = sign_of(p)
        nth_east = False
        seen = 0
        for k, s in enumerate(p.steps):
            if s == paths.N:
                seen += 1
                if seen == n:
                    nth_east = k + 1 < len(p.steps) and p.steps[k + 1] == paths.E
    for i, j in valleys(p):
        first = w(n + 1 - i)
        if lattice_type == "C":
            second = w(n + 1 - j) if j <= n else w(n - j)
        elif lattice_type == "B":
            second = w(n + 1 - j)
        else:
            if j == n and not nth_east:
                toks.append(("abs", abs(w(1)), first))
                continue
            if j < n:
                second = w(n + 1 - j)
            elif j == n:
                second = eps * w(1)
            elif j == n + 1:
                second = -eps * w(1)
            else:
                second = w(n - j)
        toks.append(("pair", min((first, second), (-second, -first))))
    return sorted(toks)


def _first_failure(gen) -> str | None:
    for witness in gen:
        return witness
    return None


def _source_kind(lt: str, n: int):
    return signed_lattice(n) if lt == "D" else lattice(n, n)


def _target_kind(lt: str, n: int):
    if lt == "D":
        return signed_ballot(n)
    if lt == "A":
        return lattice(n, n)
    return ballot(2 * n)


def _source_paths(lt: str, n: int):
    for p in enumerate_paths(_source_kind(lt, n)):
        if lt == "A" and not is_dyck(p):
            continue
        yield p


def _check_counting(lt: str, n: int):
    if lt == "A":
        dycks = sum(1 for _ in _source_paths(lt, n))
        catalan = math.comb(2 * n, n) // (n + 1)
        if dycks != catalan:
            return "Dyck count %d != %d" % (dycks, catalan)
        return None
    if lt in ("B", "C"):
        a = sum(1 for _ in enumerate_paths(lattice(n, n)))
        b = sum(1 for _ in enumerate_paths(ballot(2 * n)))
        want = math.comb(2 * n, n)
        if not a == b == want:
            return "counts %d, %d != %d" % (a, b, want)
        return None
    a = sum(1 for _ in enumerate_paths(lattice(n - 1, n)))
    b = sum(1 for _ in enumerate_paths(ballot(2 * n - 1)))
    want = math.comb(2 * n - 1, n - 1)
    sa = sum(1 for _ in enumerate_paths(signed_lattice(n)))
    sb = sum(1 for _ in enumerate_paths(signed_ballot(n)))
    if not a == b == want:
        return "unsigned counts %d, %d != %d" % (a, b, want)
    if sa != sb:
        return "signed counts %d != %d" % (sa, sb)
    return None


def _check_bijectivity(lt: str, n: int):
    images = set()
    total = 0
    for p in _source_paths(lt, n):
        img = zeta.zeta_path(p, lt)
        key = render_path(img)
        if key in images:
            return "duplicate image %s" % key
        images.add(key)
        total += 1
    targets = set()
    for q in enumerate_paths(_target_kind(lt, n)):
        if lt == "A" and not is_dyck(q):
            continue
        targets.add(render_path(q))
    if images != targets:
        missing = sorted(targets - images)
        return "image misses %s" % missing[0]
    if lt == "D":
        star_images = set()
        for p in enumerate_paths(lattice(n - 1, n)):
            star_images.add(render_path(zeta.zeta_d_star(p)))
        star_targets = {render_path(q) for q in enumerate_paths(ballot(2 * n - 1))}
        if star_images != star_targets:
            return "sign-stripped map is not onto"
    return None


def _check_labelled_bijectivity(lt: str, n: int):
    seen = set()
    count = 0
    for vp in enumerate_vert(lt, n):
        img_path, img_w = zeta.zeta_labelled(vp, lt)
        if lt == "A":
            ok = all(img_w(i) < img_w(j) for i, j in valleys(img_path))
        else:
            ok = diag_validate(img_path, img_w, lt)
        if not ok:
            return "image of %s | %s is not diagonally labelled" % (vp.path, vp.labels)
        key = (render_path(img_path), img_w.window)
        if key in seen:
            return "labelled duplicate at %s | %s" % (vp.path, vp.labels)
        seen.add(key)
        count += 1
    if lt != "A":
        expected = modulus(lt, n) ** n
        if count != expected:
            return "labelled domain has %d elements, torus has %d" % (count, expected)
        diag_count = 0
        group = weyl_group(lt, n)
        for q in enumerate_paths(_target_kind(lt, n)):
            diag_count += sum(1 for w in group if diag_validate(q, w, lt))
        if diag_count != count:
            return "labelled image misses %d targets" % (diag_count - count)
    return None


def _check_inverse_roundtrip(lt: str, n: int):
    if lt != "C":
        return None
    for p in _source_paths(lt, n):
        img = zeta.zeta_path(p, "C")
        back = zeta.inverse_zeta_c(img)
        if back != p:
            return "round trip fails at %s" % p
    for q in enumerate_paths(ballot(2 * n)):
        if render_path(zeta.zeta_path(zeta.inverse_zeta_c(q), "C")) != render_path(q):
            return "round trip fails at image %s" % q
    return None


def _check_sweep_equiv(lt: str, n: int):
    if lt != "C":
        return None
    for p in _source_paths(lt, n):
        if zeta.sweep_c(p) != zeta.zeta_path(p, "C"):
            return "sweep differs at %s" % p
    return None


def _check_rise_valley(lt: str, n: int):
    if lt == "A":
        return None
    for vp in enumerate_vert(lt, n):
        img_path, img_w = zeta.zeta_labelled(vp, lt)
        if _rise_tokens(vp, lt) != _valley_tokens(img_path, img_w, lt):
            return "label multisets differ at %s | %s" % (vp.path, vp.labels)
    return None


def _check_stats_identity(lt: str, n: int):
    if lt != "C":
        return None
    for p in _source_paths(lt, n):
        if stats.dinv_c(p) != stats.area(zeta.zeta_path(p, "C"), "C"):
            return "dinv/area differ at %s" % p
    if n <= 4:
        for vp in enumerate_vert("C", n):
            img_path, img_w = zeta.zeta_labelled(vp, "C")
            if stats.dinv_c_prime(vp) != stats.area_prime(img_path, img_w, "C"):
                return "refined dinv/area differ at %s | %s" % (vp.path, vp.labels)
    return None


def _check_uniform(lt: str, n: int):
    if lt == "A":
        return None
    for vp in enumerate_vert(lt, n):
        img_path, img_w = zeta.zeta_labelled(vp, lt)
        combinatorial = to_parking_function(img_path, img_w, lt)
        if combinatorial != uniform_oracle(vp, lt):
            return "parking functions differ at %s | %s" % (vp.path, vp.labels)
    return None


def _check_anderson(lt: str, n: int):
    if lt == "A":
        return None
    for vp in enumerate_vert(lt, n):
        if not anderson_check(vp, lt):
            return "window arithmetic fails at %s | %s" % (vp.path, vp.labels)
    return None


_CHECKS = {
    "counting": _check_counting,
    "bijectivity": _check_bijectivity,
    "labelled_bijectivity": _check_labelled_bijectivity,
    "inverse_roundtrip": _check_inverse_roundtrip,
    "sweep_equiv": _check_sweep_equiv,
    "rise_valley": _check_rise_valley,
    "stats_identity": _check_stats_identity,
    "uniform": _check_uniform,
    "anderson": _check_anderson,
}


@dataclass(frozen=True)
class CheckResult:
    check: str
    lattice_type: str
    n: int
    passed: bool
    counterexample: str | None = None

    def to_dict(self) -> dict:
        d = {"check": self.check, "type": self.lattice_type, "n": self.n, "passed": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass(frozen=True)
class Report:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.results], indent=2)


def _guard_cap(lt: str, n: int, checks) -> None:
    cap = enumeration_cap()
    heavy = count_paths(_source_kind(lt, n)) + count_paths(_target_kind(lt, n))
    if any(c in _LABELLED for c in checks) and lt != "A":
        heavy += modulus(lt, n) ** n
    if heavy > cap:
        raise CapExceeded("rank %d needs %d objects, cap is %d" % (n, heavy, cap))


def run_suite(lattice_type: str, n_max: int, checks=None) -> Report:
    """Run the requested checks for every feasible rank up to n_max."""
    if checks is None:
        checks = CHECK_NAMES
    unknown = [c for c in checks if c not in _CHECKS]
    if unknown:
        raise ValueError("unknown checks: %s" % ", ".join(unknown))
    ordered = [c for c in CHECK_NAMES if c in checks]
    lo = 1 if lattice_type == "A" else min_rank(lattice_type)
    only_c = ("inverse_roundtrip", "sweep_equiv", "stats_identity")
    results = []
    for name in ordered:
        if name in only_c and lattice_type != "C":
            continue
        if name in _LABELLED and lattice_type == "A":
            continue
        for n in range(lo, n_max + 1):
            _guard_cap(lattice_type, n, [name])
            witness = _CHECKS[name](lattice_type, n)
            results.append(CheckResult(name, lattice_type, n, witness is None, witness))
    return Report(tuple(results))
