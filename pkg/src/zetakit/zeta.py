"""Area vectors, diagonal reading words, the zeta maps of types A, B, C
and D, the sign-stripped odd bijection, the type-C sweep map and the
type-C bounce inverse.
"""

from __future__ import annotations

from functools import lru_cache

from . import paths
from .affine import dominant_frame_parts
from .errors import CapExceeded, InternalError, ShapeMismatch
from .paths import (
    Path,
    ballot,
    east_counts,
    enumerate_paths,
    is_dyck,
    lattice,
    lift_signed,
    make_path,
    segment,
    sign_of,
    signed_ballot,
    signed_lattice,
    strip_signs,
)
from .signedperm import SignedPermutation
from .torus import VertPath, lambda_of_path, path_of_lambda

N, E = paths.N, paths.E


def _rank_of_source(p: Path, lattice_type: str) -> int:
    if lattice_type in ("A", "B", "C"):
        if p.kind.shape != "lattice" or p.kind.params[0] != p.kind.params[1]:
            raise ShapeMismatch("type %s needs a square lattice path, got %s" % (lattice_type, p.kind))
        if lattice_type == "A" and not is_dyck(p):
            raise ShapeMismatch("type A needs a path weakly above the diagonal")
        return p.kind.params[1]
    if lattice_type == "D":
        if p.kind.shape != "signed_lattice":
            raise ShapeMismatch("type D needs a signed lattice path, got %s" % p.kind)
        return p.kind.params[0]
    raise ValueError("unknown type %r" % lattice_type)


def area_vector(p: Path, lattice_type: str) -> tuple[int, ...]:
    """Signed distances from the alternating staircase, in the type's
    normalization."""
    n = _rank_of_source(p, lattice_type)
    if lattice_type == "A":
        pi = east_counts(p)
        return tuple(i - pi[i - 1] - 1 for i in range(1, n + 1))
    lam = lambda_of_path(p, lattice_type) if lattice_type != "C" else east_counts(p)
    if lattice_type == "C":
        return tuple((n + 1 - j) - lam[n - j] for j in range(1, n + 1))
    shift, twist = dominant_frame_parts(lattice_type, n)
    return twist.act(tuple(a - b for a, b in zip(lam, shift)))


def path_of_area_vector(mu, lattice_type: str) -> Path:
    """Inverse of area_vector."""
    mu = tuple(mu)
    n = len(mu)
    if lattice_type == "A":
        pi = tuple(i - mu[i - 1] - 1 for i in range(1, n + 1))
        steps = []
        prev = 0
        for v in pi:
            steps.extend([E] * (v - prev))
            steps.append(N)
            prev = v
        steps.extend([E] * (n - prev))
        return make_path(steps, lattice(n, n))
    if lattice_type == "C":
        lam = tuple((n + 1 - j) - mu[j - 1] for j in range(n, 0, -1))
        return path_of_lambda(lam, "C")
    shift, twist = dominant_frame_parts(lattice_type, n)
    lam = tuple(a + b for a, b in zip(twist.inverse().act(mu), shift))
    return path_of_lambda(lam, lattice_type)


def is_valid_area_vector(mu, lattice_type: str) -> bool:
    mu = tuple(mu)
    if lattice_type in ("A", "C"):
        n = len(mu)
        if lattice_type == "A":
            return mu[0] == 0 and all(b <= a + 1 for a, b in zip(mu, mu[1:])) and all(v >= 0 for v in mu)
        return mu[0] >= 0 and mu[-1] <= 1 and all(a <= b + 1 for a, b in zip(mu, mu[1:]))
    try:
        path_of_area_vector(mu, lattice_type)
        return True
    except Exception:
        return False


def _segments(mu, j_top: int, drop_last: bool = False) -> str:
    parts = []
    for j in range(j_top, -1, -1):
        parts.append(segment("right_to_left", -1, j, mu))
        parts.append(segment("left_to_right", 1, j, mu))
    word = "".join(parts)
    return word[:-1] if drop_last else word


def zeta_path(p: Path, lattice_type: str) -> Path:
    """The zeta image of an unlabelled path."""
    n = _rank_of_source(p, lattice_type)
    mu = area_vector(p, lattice_type)
    top = max((abs(v) for v in mu), default=0)
    if lattice_type == "A":
        word = "".join(segment("left_to_right", -1, j, mu) for j in range(0, -n - 1, -1))
        return make_path(tuple(word), lattice(n, n))
    if lattice_type == "C":
        word = _segments(mu, top)
        return make_path(tuple(word), ballot(2 * n))
    if lattice_type == "B":
        parts = []
        for j in range(top, 0, -1):
            parts.append(segment("right_to_left", -1, j, mu))
            parts.append(segment("left_to_right", 1, j, mu))
        parts.append(segment("right_to_left", -1, 0, mu))
        parts.append((N + segment("left_to_right", 1, 0, mu))[:-1])
        return make_path(tuple("".join(parts)), ballot(2 * n))
    word = _segments(mu, top, drop_last=True)
    steps = tuple(word)
    kind = signed_ballot(n)
    slot = paths._signed_slot(steps, kind)
    if slot is None:
        return make_path(steps, kind)
    sign = -1 if sum(1 for v in mu if v > 0) % 2 else 1
    return make_path(steps, kind, slot, sign)


def reading_word(vp: VertPath, lattice_type: str) -> SignedPermutation:
    """The diagonal reading word of a vertically labelled path."""
    v = vp.labels
    n = v.n
    mu = area_vector(vp.path, lattice_type)
    if lattice_type == "A":
        out = []
        for level in range(0, n):
            out.extend(v(j) for j in range(1, n + 1) if mu[j - 1] == level)
        return SignedPermutation(tuple(out))
    if lattice_type == "C":
        out = []
        top = max(abs(x) for x in mu)
        for level in range(0, top + 1):
            for j in range(n, 0, -1):
                if mu[n - j] == -level:
                    out.append(-v(j))
            for j in range(1, n + 1):
                if mu[n - j] == level + 1:
                    out.append(v(j))
        return SignedPermutation(tuple(out))
    # types B and D read the area vector in row order
    out = []
    src_row = []
    top = max(abs(x) for x in mu)
    for level in range(0, top + 1):
        for j in range(1, n + 1):
            if mu[j - 1] == -level:
                out.append(v(j))
                src_row.append(j)
        for j in range(n, 0, -1):
            if mu[j - 1] == level + 1:
                out.append(-v(j))
                src_row.append(j)
    if len(out) != n:
        raise InternalError("reading word lost labels: %r" % (out,))
    top_pos = src_row.index(n)
    bottom_pos = src_row.index(1)
    if lattice_type == "D":
        if (1 + mu[n - 2] + mu[n - 1]) % 2:
            out[top_pos] = -out[top_pos]
        shift, _ = dominant_frame_parts("D", n)
        eps = sign_of(vp.path)
        if eps * (-1) ** (1 + shift[n - 2] + shift[n - 1]) < 0:
            out[bottom_pos] = -out[bottom_pos]
        if sum(1 for x in mu if x > 0) % 2:
            out[0] = -out[0]
    else:
        if (mu[n - 2] + mu[n - 1]) % 2 == 0:
            out[top_pos] = -out[top_pos]
    return SignedPermutation(tuple(out))


def zeta_labelled(vp: VertPath, lattice_type: str) -> tuple[Path, SignedPermutation]:
    """Labelled zeta map: the image path together with the reading word."""
    return zeta_path(vp.path, lattice_type), reading_word(vp, lattice_type)


def zeta_d_star(p: Path) -> Path:
    """Sign-stripped type-D zeta map on plain rectangular paths."""
    if p.kind.shape != "lattice" or p.kind.params[0] != p.kind.params[1] - 1:
        raise ShapeMismatch("expected a lattice(n-1,n) path, got %s" % p.kind)
    return strip_signs(zeta_path(lift_signed(p, 1), "D"))


def bounce_path(p: Path):
    """Bounce trajectory of a ballot path and the decoded level counts.

    Returns (moves, alphas) where moves is a string over S/W read from the
    end point down to the origin, and alphas[k] counts area-vector entries
    of absolute value k in any preimage.
    """
    if p.kind.shape != "ballot" or p.kind.params[0] % 2 != 0:
        raise ShapeMismatch("bounce path needs an even ballot path, got %s" % p.kind)
    n = p.kind.params[0] // 2
    tops = set()
    x = y = 0
    for s in p.steps:
        if s == N:
            y += 1
            tops.add((x, y))
        else:
            x += 1
    moves = []
    hits = []
    cx, cy = x, y
    moves.append("S" * (cy - cx))
    cy = cx
    hits.append(cx)
    while (cx, cy) != (0, 0):
        wx = cx
        while wx >= 0 and (wx, cy) not in tops:
            wx -= 1
        if wx < 0:
            raise InternalError("bounce path found no North step at height %d" % cy)
        moves.append("W" * (cx - wx))
        moves.append("S" * (cy - wx))
        cx = cy = wx
        hits.append(cx)
    alphas = [n - hits[0]]
    for a, b in zip(hits, hits[1:]):
        alphas.append(a - b)
    alphas.extend([0] * (n + 1 - len(alphas)))
    if sum(alphas) != n or len(alphas) != n + 1:
        raise InternalError("bounce decode inconsistent: %r" % (alphas,))
    return "".join(moves), tuple(alphas)


def _split_block(block: tuple[str, ...], norths: int):
    """Cut a level block after its `norths`-th North step."""
    if norths == 0:
        return (), block
    seen = 0
    for k, s in enumerate(block):
        if s == N:
            seen += 1
            if seen == norths:
                return block[: k + 1], block[k + 1 :]
    raise InternalError("block %r has fewer than %d North steps" % (block, norths))


def inverse_zeta_c(p: Path) -> Path:
    """Preimage of a ballot path under the type-C zeta map.

    Decodes the level counts from the bounce path, then rebuilds the area
    vector level by level: within one level the two block halves fix the
    interleaving with the previous level, and a positive entry may precede
    a negative one of the same level only across a lower separator, which
    pins the merge order.
    """
    _, alphas = bounce_path(p)
    n = p.kind.params[0] // 2
    blocks = []
    idx = len(p.steps)
    for k in range(0, n + 1):
        size = 2 * alphas[0] + alphas[1] if k == 0 else alphas[k] + (alphas[k + 1] if k < n else 0)
        blocks.append(p.steps[idx - size : idx])
        idx -= size
    if idx != 0:
        raise InternalError("block sizes do not cover the path")

    left, right = _split_block(blocks[0], alphas[0])
    seq: list[int] = []
    for s in reversed(left):
        seq.append(0 if s == N else -1)
    pending = 0
    zero_seen = 0
    for s in right:
        if s == E:
            pending += 1
        else:
            zero_seen += 1
            target = [k for k, v in enumerate(seq) if v == 0][zero_seen - 1]
            seq[target:target] = [1] * pending
            pending = 0
    seq.extend([1] * pending)

    for k in range(1, n + 1):
        minus_n = sum(1 for v in seq if v == -k)
        left, right = _split_block(blocks[k], minus_n)
        groups = []
        for s in reversed(left):
            if s == N:
                groups.append([-k])
            else:
                if not groups:
                    raise InternalError("negative block starts with an East step")
                groups[-1].append(-(k + 1))
        out: list[int] = []
        g = iter(groups)
        for v in seq:
            out.extend(next(g) if v == -k else [v])
        seq = out
        groups = []
        run = 0
        for s in right:
            if s == E:
                run += 1
            else:
                groups.append([k + 1] * run + [k])
                run = 0
        if run:
            raise InternalError("positive block ends with an East step")
        out = []
        g = iter(groups)
        for v in seq:
            out.extend(next(g) if v == k else [v])
        seq = out

    return path_of_area_vector(tuple(seq), "C")


def sweep_labels(p: Path) -> list[int]:
    """Arithmetic step labels driving the type-C sweep map."""
    n = _rank_of_source(p, "C")
    labels = [0]
    for s in p.steps[:-1]:
        labels.append(labels[-1] + (2 * n + 1 if s == N else -2 * n))
    return labels


def sweep_c(p: Path) -> Path:
    """Reorder the steps of a square path by increasing label."""
    n = _rank_of_source(p, "C")
    labels = sweep_labels(p)
    bag = []
    for i, l in enumerate(labels):
        if l < 0:
            bag.append((l, p.steps[i]))
        elif l > 0:
            bag.append((-l, p.steps[i - 1]))
        else:
            bag.append((-n, p.steps[-1]))
    bag.sort()
    keys = [k for k, _ in bag]
    if len(set(keys)) != len(keys):
        raise InternalError("sweep labels collide: %r" % (keys,))
    return make_path(tuple(s for _, s in bag), ballot(2 * n))


def inverse_by_table(p: Path, lattice_type: str, cap: int | None = None) -> Path:
    """Invert a zeta map by exhausting the source side."""
    table = _zeta_table(lattice_type, _rank_of_target(p, lattice_type), cap)
    key = paths.render_path(p)
    if key not in table:
        raise InternalError("%s is not a zeta image in type %s" % (key, lattice_type))
    return table[key]


def _rank_of_target(p: Path, lattice_type: str) -> int:
    if lattice_type in ("B", "C"):
        if p.kind.shape != "ballot" or p.kind.params[0] % 2:
            raise ShapeMismatch("type %s inverts ballot paths of even length" % lattice_type)
        return p.kind.params[0] // 2
    if lattice_type == "D":
        if p.kind.shape != "signed_ballot":
            raise ShapeMismatch("type D inverts signed ballot paths")
        return p.kind.params[0]
    if lattice_type == "A":
        if p.kind.shape != "lattice" or p.kind.params[0] != p.kind.params[1] or not is_dyck(p):
            raise ShapeMismatch("type A inverts Dyck paths")
        return p.kind.params[0]
    raise ValueError("unknown type %r" % lattice_type)


@lru_cache(maxsize=16)
def _zeta_table(lattice_type: str, n: int, cap: int | None):
    if lattice_type in ("B", "C"):
        kind = lattice(n, n)
    elif lattice_type == "D":
        kind = signed_lattice(n)
    else:
        kind = lattice(n, n)
    table = {}
    for src in enumerate_paths(kind, cap):
        if lattice_type == "A" and not is_dyck(src):
            continue
        table[paths.render_path(zeta_path(src, lattice_type))] = src
    return table
