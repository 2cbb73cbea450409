"""Exact root-system arithmetic for the series A, B, C, D, E6, E7 and G2.

Everything here is integer arithmetic on weights written in fundamental-weight
coordinates.  Conventions, fixed once and used by every other module:

* Nodes are 0-indexed in the Python API.  Bourbaki 1-based labels appear only
  in serialized catalog data and CLI output.  For the E series the branch node
  is node 1 (Bourbaki node 2), attached to node 3 (Bourbaki 4).
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` of the Cartan
  matrix holds the fundamental coordinates of the simple root ``alpha_j``.
* Squared lengths are normalized so short roots have ``d = 1``; long roots
  have ``d = 2`` (B, C) or ``d = 3`` (G2).  Simply-laced systems are all 1.
* Coroot coordinates of a positive root ``alpha = sum c_j alpha_j`` are
  ``c_j d_j / d_alpha``; they are always integers, so pairings
  ``<w, alpha^vee>`` stay exact.
* ``rho`` is the all-ones weight.  ``to_dominant`` walks an arbitrary weight
  into the dominant chamber by simple reflections at negative coordinates and
  reports the number of reflections used, which for a regular weight equals
  the inversion count of the unique Weyl element involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

SERIES = ("A", "B", "C", "D", "E", "G")

WEYL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("G", 2): 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def weyl_order(series: str, rank: int) -> int:
    """Order of the Weyl group, used by enumeration cross-checks."""
    if series == "A":
        return _factorial(rank + 1)
    if series in ("B", "C"):
        return 2**rank * _factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * _factorial(rank)
    return WEYL_ORDERS[(series, rank)]


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    # 0-indexed Dynkin diagram edges (simple-bond adjacency; multiplicities
    # live in the Cartan matrix, not here).
    if series in ("A", "B", "C", "G"):
        return [(i, i + 1) for i in range(rank - 1)]
    if series == "D":
        if rank < 3:
            raise ValueError("D needs rank >= 3")
        chain = [(i, i + 1) for i in range(rank - 3)]
        return chain + [(rank - 3, rank - 2), (rank - 3, rank - 1)]
    if series == "E":
        if rank not in (6, 7):
            raise ValueError("only E6 and E7 are supported")
        # Bourbaki: 1-3-4-5-6(-7) chain, 2 attached to 4.  0-indexed below.
        chain = [(0, 2), (2, 3), (3, 4), (4, 5)] + ([(5, 6)] if rank == 7 else [])
        return chain + [(1, 3)]
    raise ValueError(f"unknown series {series!r}")


def _lengths(series: str, rank: int) -> tuple[int, ...]:
    if series == "B":
        return tuple([2] * (rank - 1) + [1])
    if series == "C":
        return tuple([1] * (rank - 1) + [2])
    if series == "G":
        return (1, 3)
    return tuple([1] * rank)


def _cartan(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    d = _lengths(series, rank)
    mat = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges(series, rank):
        # <alpha_j, alpha_i^vee> = (alpha_i, alpha_j)/d_i with (alpha_i, alpha_j)
        # = -max(d_i, d_j) for adjacent nodes in all supported diagrams.
        m = max(d[i], d[j])
        mat[i][j] = -m // d[i]
        mat[j][i] = -m // d[j]
    return tuple(tuple(row) for row in mat)


EXPECTED_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63}[n],
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    # positive roots: coefficient vectors over simple roots, sorted by height
    positive_roots: tuple[tuple[int, ...], ...]
    # fundamental coordinates of each positive root
    root_coords: tuple[tuple[int, ...], ...]
    # integer coroot coordinates of each positive root
    coroot_coords: tuple[tuple[int, ...], ...]
    root_length: tuple[int, ...]
    node_degree: tuple[int, ...]

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @property
    def highest_root(self) -> tuple[int, ...]:
        """Coefficient vector of the highest root (maximal height, unique)."""
        return self.positive_roots[-1]

    def __repr__(self) -> str:  # keep pytest output readable
        return f"RootSystem({self.series}{self.rank})"


@lru_cache(maxsize=None)
def root_system(series: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of the given series and rank."""
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}")
    if rank < 1 or (series == "D" and rank < 3) or (series == "G" and rank != 2):
        raise ValueError(f"unsupported rank {rank} for series {series}")
    cartan = _cartan(series, rank)
    d = _lengths(series, rank)

    def fund(coeffs):
        return tuple(
            sum(c * cartan[i][j] for j, c in enumerate(coeffs)) for i in range(rank)
        )

    # Generate positive roots by height using root strings: alpha + alpha_j is
    # a root iff q - <alpha, alpha_j^vee> > 0, q = length of the down-string.
    simple = [tuple(1 if k == j else 0 for k in range(rank)) for j in range(rank)]
    by_height = {1: set(simple)}
    seen = set(simple)
    length_of = {simple[j]: d[j] for j in range(rank)}
    h = 1
    while by_height.get(h):
        nxt = set()
        for alpha in by_height[h]:
            fc = fund(alpha)
            for j in range(rank):
                q = 0
                lower = list(alpha)
                while True:
                    lower[j] -= 1
                    if lower[j] < 0 or tuple(lower) not in seen:
                        break
                    q += 1
                if q - fc[j] > 0:
                    beta = tuple(
                        c + (1 if k == j else 0) for k, c in enumerate(alpha)
                    )
                    if beta not in seen:
                        seen.add(beta)
                        nxt.add(beta)
                        length_of[beta] = length_of[alpha] + d[j] * (fc[j] + 1)
        h += 1
        if nxt:
            by_height[h] = nxt

    positives = sorted(seen, key=lambda c: (sum(c), c))
    expected = EXPECTED_POSITIVE_COUNTS[series](rank)
    assert len(positives) == expected, (
        f"{series}{rank}: generated {len(positives)} positive roots, "
        f"expected {expected}"
    )
    top_height = sum(positives[-1])
    assert sum(c == top_height for c in map(sum, positives)) == 1, (
        "highest root must be unique"
    )

    coroots = []
    for alpha in positives:
        da = length_of[alpha]
        cv = []
        for j, c in enumerate(alpha):
            num = c * d[j]
            assert num % da == 0, f"non-integral coroot coordinate on {alpha}"
            cv.append(num // da)
        coroots.append(tuple(cv))

    deg = [0] * rank
    for i, j in _edges(series, rank):
        deg[i] += 1
        deg[j] += 1

    return RootSystem(
        series=series,
        rank=rank,
        cartan=cartan,
        lengths=d,
        positive_roots=tuple(positives),
        root_coords=tuple(fund(a) for a in positives),
        coroot_coords=tuple(coroots),
        root_length=tuple(length_of[a] for a in positives),
        node_degree=tuple(deg),
    )


def simple_reflection(rs: RootSystem, i: int, w) -> tuple[int, ...]:
    """Reflect the weight ``w`` at node ``i``: subtract ``w_i`` times column
    ``i`` of the Cartan matrix.  In the simply-laced case this adds coordinate
    ``i`` to each neighbor and negates coordinate ``i``."""
    wi = w[i]
    return tuple(w[j] - wi * rs.cartan[j][i] for j in range(rs.rank))


def pairing(rs: RootSystem, w, root_index: int) -> int:
    """``<w, alpha^vee>`` for the ``root_index``-th positive root."""
    cv = rs.coroot_coords[root_index]
    return sum(w[j] * cv[j] for j in range(rs.rank))


def inversions(rs: RootSystem, w) -> int:
    """Number of positive coroots pairing negatively with ``w``.

    For regular ``w = u(rho + lam)`` this is the length of ``u^{-1}``, hence
    the number of reflections any pivot order needs to reach the chamber.
    """
    count = 0
    for cv in rs.coroot_coords:
        s = sum(w[j] * cv[j] for j in range(rs.rank))
        if s < 0:
            count += 1
        elif s == 0:
            return -1  # singular; no well-defined inversion count
    return count


@dataclass(frozen=True)
class DominanceWalk:
    dominant: tuple[int, ...] | None
    length: int
    singular: bool
    pivots: tuple[int, ...]


def default_pivot(rs: RootSystem, w) -> int:
    """Deterministic pivot: most negative coordinate, ties broken by smaller
    diagram vertex degree (leaves first), then by smaller node index."""
    best = -1
    key = None
    for i, wi in enumerate(w):
        if wi < 0:
            k = (wi, rs.node_degree[i], i)
            if key is None or k < key:
                key, best = k, i
    return best


def to_dominant(rs: RootSystem, w, pivot=None) -> DominanceWalk:
    """Walk ``w`` into the dominant chamber by simple reflections.

    Returns the dominant representative, the number of reflections (the Weyl
    length for regular weights — independent of pivot order), a singularity
    flag (some coordinate hits zero, i.e. the orbit meets a wall), and the
    pivot sequence actually used.

    ``pivot`` may be a callable ``(rs, w) -> node`` overriding the default
    pivot rule; it must return a node with negative coordinate.
    """
    cur = tuple(w)
    rule = pivot or default_pivot
    pivots = []
    cap = rs.num_positive
    while True:
        if any(c == 0 for c in cur):
            return DominanceWalk(None, len(pivots), True, tuple(pivots))
        if all(c > 0 for c in cur):
            return DominanceWalk(cur, len(pivots), False, tuple(pivots))
        i = rule(rs, cur)
        assert cur[i] < 0, "pivot rule must pick a negative coordinate"
        cur = simple_reflection(rs, i, cur)
        pivots.append(i)
        assert len(pivots) <= cap, "dominance walk exceeded the longest element"


def weyl_dim(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible module with highest weight ``lam``
    (dominant, fundamental coordinates), by the Weyl dimension formula.
    Exact integer arithmetic throughout."""
    num = 1
    den = 1
    for cv in rs.coroot_coords:
        n = d = 0
        for j in range(rs.rank):
            c = cv[j]
            if c:
                n += (lam[j] + 1) * c
                d += c
        num *= n
        den *= d
    assert num % den == 0, "Weyl dimension must be an integer"
    return num // den


def weyl_dim_levi(rs: RootSystem, unmarked: frozenset[int], lam) -> int:
    """Weyl dimension over the Levi subsystem spanned by ``unmarked`` nodes.

    Only the positive roots supported on unmarked nodes contribute, so marked
    coordinates of ``lam`` never enter and any twist leaves the value fixed.
    """
    num = 1
    den = 1
    for alpha, cv in zip(rs.positive_roots, rs.coroot_coords):
        if any(alpha[j] and j not in unmarked for j in range(rs.rank)):
            continue
        n = d = 0
        for j in range(rs.rank):
            c = cv[j]
            if c:
                n += (lam[j] + 1) * c
                d += c
        num *= n
        den *= d
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class CosetRep:
    """A minimal-length representative w of a parabolic coset, carried as the
    reduced word of its inverse (the word that takes the marked-weight sum
    down the orbit), its length, and the shifted weight w(rho) - rho."""

    length: int
    word: tuple[int, ...]
    shifted_rho: tuple[int, ...]


@lru_cache(maxsize=None)
def minimal_coset_reps(
    rs: RootSystem, marked: frozenset[int]
) -> tuple[tuple[CosetRep, ...], ...]:
    """Minimal-length representatives w of the parabolic quotient with
    ``w^{-1}(alpha_i) > 0`` for every unmarked node ``i``, grouped by length.

    Enumeration is a breadth-first walk over the orbit of the sum of marked
    fundamental weights: descending from a weight at a strictly positive
    coordinate is one more reflection, and each orbit element is reached first
    at the length of its minimal word.
    """
    lam0 = tuple(1 if j in marked else 0 for j in range(rs.rank))
    frontier = {lam0: ()}
    seen = {lam0}
    levels = []
    while frontier:
        reps = []
        for nu in sorted(frontier):
            word = frontier[nu]
            # w = (s_{i_k} ... s_{i_1})^{-1}; apply the word in reverse to rho.
            img = rs.rho
            for i in reversed(word):
                img = simple_reflection(rs, i, img)
            reps.append(
                CosetRep(
                    length=len(word),
                    word=word,
                    shifted_rho=tuple(a - b for a, b in zip(img, rs.rho)),
                )
            )
        levels.append(tuple(reps))
        nxt = {}
        for nu, word in frontier.items():
            for i in range(rs.rank):
                if nu[i] > 0:
                    down = simple_reflection(rs, i, nu)
                    if down not in seen:
                        seen.add(down)
                        nxt[down] = word + (i,)
        frontier = nxt
    return tuple(levels)
