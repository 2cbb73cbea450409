"""Hodge numbers and deformation counts of complete intersections in
homogeneous spaces, and of cyclic double covers.

Everything here reduces to ambient Borel-Weil-Bott facts chased through two
exact complexes.  For X the zero locus of a general section of
E = O(d_1) + ... + O(d_s) on a cominuscule space Sigma:

* restriction: the Koszul resolution

      0 -> wedge^s E* -> ... -> E* -> O_Sigma -> O_X -> 0

  twisted by Omega^a_Sigma(-v) computes H^*(X, Omega^a_Sigma(-v)|X);

* cotangent reduction: the conormal sequence
  0 -> E*|X -> Omega_Sigma|X -> Omega_X -> 0 induces, for each p, the exact
  complex

      0 -> Sym^p E*|X -> Sym^{p-1} E* (x) Omega^1_Sigma|X -> ...
        -> Omega^p_Sigma|X -> Omega^p_X -> 0,

  whose terms are handled by the restriction step (the multiplicity spaces
  Sym^k of the cut degrees enter as plain integer multiplicities).

Both complexes are resolved by the interval solver in :mod:`bwb.chase`,
which never guesses a connecting map: whatever exactness, Serre duality and
Hodge symmetry do not pin down stays an integer range flagged indeterminate.
A full Hodge table iterates the per-p chases with two cross-entry rules --
h^{p,q} = h^{q,p} and h^{p,q} = h^{n-p,n-q} -- until nothing narrows.

Double covers branched over a divisor B in |O(2d)| are handled through the
residue sequence

      0 -> Omega^p_S(-d) -> Omega^p_S(log B)(-d) -> Omega^{p-1}_B(-d) -> 0

together with h^{p,q}(Y) = h^{p,q}(S) + h^q(S, Omega^p_S(log B)(-d)).

Deformation counts come in independent flavours (Grassmannian quotient,
section counts, the Jacobian-style complete-intersection formula) that the
verification layer cross-checks against the Hodge-theoretic route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .bott import euler_char, forms_cohomology
from .catalog import HomogSpace, projective_space, space_facts
from .chase import Iv, exact, ses_middle, solve_exact_complex, unknown

# Spaces whose minimal linear sections of dimension 2*coindex - 1 carry a
# one-dimensional extreme middle Hodge piece, and whose projective duals are
# hypersurfaces of degree coindex - 1.
SPECIAL_SERIES = ("OP2", "S12", "G(2,10)", "S14")

# A hyperplane section of LG(3,6) is quasi-homogeneous: its automorphism
# group is an 8-dimensional PSL3 acting with a dense orbit.
THETA_AUT_DIM = 8


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vneg(a):
    return tuple(-x for x in a)


def _vscale(k, a):
    return tuple(k * x for x in a)


# ---------------------------------------------------------------------------
# Section specifications


@dataclass(frozen=True)
class SectionSpec:
    """X = a complete intersection of hypersurfaces in a marked homogeneous
    space, optionally the base of a branched double cover.

    ``cut_degrees`` holds one per-factor degree vector per hypersurface, in
    units of the primitive ample class of each factor; ``branch_degree`` is
    the (componentwise even) degree vector of a branch divisor for a double
    cover of the complete intersection.
    """

    ambient: HomogSpace
    cut_degrees: tuple[tuple[int, ...], ...] = ()
    branch_degree: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.cut_degrees)

    @property
    def residual_index(self) -> tuple[int, ...]:
        """Per-factor index of X (of the double cover when branched)."""
        out = list(self.ambient.index_vector)
        for vec in self.cut_degrees:
            for i, c in enumerate(vec):
                out[i] -= c
        if self.branch_degree is not None:
            for i, c in enumerate(self.branch_degree):
                out[i] -= c // 2
        return tuple(out)

    def describe(self) -> str:
        parts = [self.ambient.name]
        for vec in self.cut_degrees:
            parts.append(f"cut {vec}")
        if self.branch_degree is not None:
            parts.append(f"double cover branched in {self.branch_degree}")
        return ", ".join(parts)


def section_spec(space: HomogSpace, cuts=(), branch=None) -> SectionSpec:
    """Validated constructor.  Integer degrees mean multiples of the
    primitive ample class; vectors give per-factor degrees directly."""
    nf = len(space.factors)

    def norm(c):
        vec = _vscale(c, space.ample) if isinstance(c, int) else tuple(c)
        if len(vec) != nf:
            raise ValueError(f"degree vector {vec} needs {nf} components")
        if any(x < 1 for x in vec):
            raise ValueError(f"degree vector {vec} must be componentwise >= 1")
        return vec

    cut_vecs = tuple(norm(c) for c in cuts)
    if len(cut_vecs) > space.dim:
        raise ValueError("more cuts than the ambient dimension")
    bvec = None
    if branch is not None:
        bvec = norm(branch)
        if any(x % 2 for x in bvec):
            raise ValueError(f"branch degree {bvec} must be componentwise even")
    return SectionSpec(space, cut_vecs, bvec)


def linear_section(space: HomogSpace, s: int) -> SectionSpec:
    """Codimension-s intersection of hyperplanes in the minimal embedding."""
    return section_spec(space, cuts=(1,) * s)


# ---------------------------------------------------------------------------
# The two chases


@lru_cache(maxsize=None)
def _koszul_groups(cuts, j: int):
    """Twist vectors of wedge^j(O(-d_1) + ... + O(-d_s)) with multiplicity."""
    groups: dict[tuple, int] = {}
    for subset in combinations(range(len(cuts)), j):
        v = tuple(sum(cuts[i][f] for i in subset) for f in range(len(cuts[0]) if cuts else 0))
        if not cuts:
            v = ()
        groups[v] = groups.get(v, 0) + 1
    return tuple(sorted(groups.items()))


@lru_cache(maxsize=None)
def _sym_groups(cuts, nf: int, k: int):
    """Twist vectors of Sym^k(O(-d_1) + ... + O(-d_s)) with multiplicity."""
    groups: dict[tuple, int] = {}
    for ms in combinations_with_replacement(range(len(cuts)), k):
        v = [0] * nf
        for i in ms:
            for f, c in enumerate(cuts[i]):
                v[f] += c
        groups[tuple(v)] = groups.get(tuple(v), 0) + 1
    return tuple(sorted(groups.items()))


@lru_cache(maxsize=None)
def restricted_forms(space: HomogSpace, cuts, a: int, down) -> tuple[Iv, ...]:
    """h^q(X, Omega^a_Sigma(-down)|X) for q = 0..dim X, as intervals.

    Chases the Koszul resolution of O_X twisted by Omega^a_Sigma(-down);
    support on X caps the degrees at dim X, which the solver exploits.
    """
    n_amb = space.dim
    n_x = n_amb - len(cuts)
    if a < 0 or a > n_amb:
        return tuple(Iv(0, 0) for _ in range(n_x + 1))
    terms = []
    for j in range(len(cuts), -1, -1):
        total: dict[int, int] = {}
        for vec, mult in _koszul_groups(cuts, j):
            if not vec:
                vec = (0,) * len(space.factors)
            for q, d in forms_cohomology(space, a, _vadd(down, vec)).items():
                total[q] = total.get(q, 0) + mult * d
        terms.append(total)
    seed = {q: 0 for q in range(n_x + 1, n_amb + 1)}
    vec = solve_exact_complex(terms, seed, n_amb)
    assert all(v.exact and v.lo == 0 for v in vec[n_x + 1:])
    return tuple(vec[: n_x + 1])


@lru_cache(maxsize=None)
def _cotangent_terms(space, cuts, p: int, down):
    """Terms Sym^k E* (x) Omega^{p-k}_Sigma(-down)|X, ordered k = p..0."""
    n_x = space.dim - len(cuts)
    nf = len(space.factors)
    out = []
    for k in range(p, -1, -1):
        lo = [0] * (n_x + 1)
        hi: list[int | None] = [0] * (n_x + 1)
        for vec, mult in _sym_groups(cuts, nf, k):
            rv = restricted_forms(space, cuts, p - k, _vadd(down, vec))
            for q in range(n_x + 1):
                lo[q] += mult * rv[q].lo
                if hi[q] is not None:
                    hi[q] = None if rv[q].hi is None else hi[q] + mult * rv[q].hi
        out.append(tuple(Iv(l, h) for l, h in zip(lo, hi)))
    return tuple(out)


def chase_section_forms(space, cuts, p: int, down, seed=None) -> tuple[Iv, ...]:
    """One pass of the cotangent chase: h^q(X, Omega^p_X(-down)) intervals.

    ``seed`` may carry already-established target entries (from symmetry or
    earlier rounds); no duality is applied here -- callers combine passes.
    """
    n_x = space.dim - len(cuts)
    if p < 0 or p > n_x:
        return tuple(Iv(0, 0) for _ in range(n_x + 1))
    terms = [list(t) for t in _cotangent_terms(space, cuts, p, down)]
    return tuple(solve_exact_complex(terms, seed or {}, n_x))


def section_forms(spec: SectionSpec, p: int, down=0) -> tuple[Iv, ...]:
    """h^q(X, Omega^p_X(-down)), intervals, with the Serre-dual chase folded
    in: the same engine run on (n-p, +down) bounds degree n-q."""
    space, cuts = spec.ambient, spec.cut_degrees
    if isinstance(down, int):
        down = _vscale(down, space.ample)
    n_x = spec.dim
    direct = list(chase_section_forms(space, cuts, p, down))
    mirror = chase_section_forms(space, cuts, n_x - p, _vneg(down))
    for q in range(n_x + 1):
        m = mirror[n_x - q]
        direct[q] = direct[q].meet(m.lo, m.hi)
    return tuple(direct)


# ---------------------------------------------------------------------------
# Full Hodge tables


@lru_cache(maxsize=None)
def hodge_table(spec: SectionSpec) -> tuple[tuple[Iv, ...], ...]:
    """H[p][q] = h^{p,q}(X) as intervals, narrowed to a fixpoint.

    Each round re-runs every per-p chase seeded with the current table, then
    meets the Hodge-symmetry transpose and the Serre reflection.  All three
    steps only ever narrow intervals, so this terminates.
    """
    if spec.branch_degree is not None:
        raise ValueError("branched specs are handled by double_cover_hodge")
    space, cuts = spec.ambient, spec.cut_degrees
    n_x = spec.dim
    zero = (0,) * len(space.factors)
    table = [[unknown() for _ in range(n_x + 1)] for _ in range(n_x + 1)]

    for _ in range(60):
        changed = False
        for p in range(n_x + 1):
            seed = {q: table[p][q] for q in range(n_x + 1)}
            res = chase_section_forms(space, cuts, p, zero, seed)
            for q in range(n_x + 1):
                new = table[p][q].meet(res[q].lo, res[q].hi)
                if new != table[p][q]:
                    table[p][q] = new
                    changed = True
        for p in range(n_x + 1):
            for q in range(n_x + 1):
                for v in (table[q][p], table[n_x - p][n_x - q]):
                    new = table[p][q].meet(v.lo, v.hi)
                    if new != table[p][q]:
                        table[p][q] = new
                        changed = True
        if not changed:
            break
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class HodgeRow:
    """Middle-degree Hodge numbers of an n-dimensional X, plus the full
    table they were cut from.  Entries are intervals: exact when resolved,
    honest ranges flagged indeterminate otherwise."""

    spec: SectionSpec
    n: int
    table: tuple[tuple[Iv, ...], ...]
    provenance: tuple[str, ...]
    assumptions: tuple[str, ...]

    @property
    def middle(self) -> tuple[Iv, ...]:
        """h^{p, n-p} for p = 0..n."""
        return tuple(self.table[p][self.n - p] for p in range(self.n + 1))

    def entry(self, p: int, q: int) -> Iv:
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.table[p][q]
        return Iv(0, 0)

    def exact_middle(self):
        """List of ints for resolved entries, (lo, hi) pairs otherwise."""
        return [v.lo if v.exact else (v.lo, v.hi) for v in self.middle]

    def as_json(self) -> dict:
        def enc(v: Iv):
            return v.lo if v.exact else {"lo": v.lo, "hi": v.hi, "indeterminate": True}

        return {
            "space": self.spec.ambient.name,
            "cuts": [list(c) for c in self.spec.cut_degrees],
            "branch": list(self.spec.branch_degree) if self.spec.branch_degree else None,
            "dim": self.n,
            "middle": [enc(v) for v in self.middle],
            "table": [[enc(v) for v in row] for row in self.table],
            "provenance": list(self.provenance),
            "assumptions": list(self.assumptions),
        }


def _fact_string(space, a, down, dims) -> str:
    tw = "" if not any(down) else f"({','.join(str(-v) for v in down)})"
    body = " ".join(f"h^{q}={d}" for q, d in sorted(dims.items())) or "0"
    return f"H*({space.name}, Omega^{a}{tw}) = {body}"


def _consumed_facts(spec: SectionSpec, pmax: int, downs=((),)) -> tuple[str, ...]:
    """Every ambient Bott fact the chases for p <= pmax consume."""
    space, cuts = spec.ambient, spec.cut_degrees
    nf = len(space.factors)
    zero = (0,) * nf
    pairs = set()
    for p in range(pmax + 1):
        for d0 in downs:
            d0 = d0 or zero
            for k in range(p + 1):
                for v1, _ in _sym_groups(cuts, nf, k):
                    for j in range(len(cuts) + 1):
                        for v2, _ in _koszul_groups(cuts, j):
                            v2 = v2 or zero
                            pairs.add((p - k, _vadd(d0, _vadd(v1, v2))))
    out = []
    for a, v in sorted(pairs):
        out.append(_fact_string(space, a, v, forms_cohomology(space, a, v)))
    return tuple(out)


SMOOTHNESS_NOTE = "cuts assumed generically smooth (not verified)"


def section_hodge(spec: SectionSpec) -> HodgeRow:
    """Middle Hodge numbers of a complete intersection in a cominuscule
    space (or of the space itself when there are no cuts)."""
    if spec.branch_degree is not None:
        raise ValueError("branched specs are handled by double_cover_hodge")
    if not spec.ambient.cominuscule:
        raise ValueError(f"{spec.ambient.name} is not cominuscule")
    if any(r < 0 for r in spec.residual_index):
        raise ValueError(f"{spec.describe()} is neither Fano nor Calabi-Yau")
    table = hodge_table(spec)
    return HodgeRow(
        spec=spec,
        n=spec.dim,
        table=table,
        provenance=_consumed_facts(spec, spec.dim),
        assumptions=(SMOOTHNESS_NOTE,),
    )


def double_cover_hodge(spec: SectionSpec) -> HodgeRow:
    """Hodge numbers of the double cover Y of X branched in |O(branch)|.

    Needs h^{p,q}(X) and two twisted rows per p, all through the section
    engine; non-cominuscule ambients get an Euler-characteristic-only row
    (every entry an unbounded interval, chi data in the provenance).
    """
    if spec.branch_degree is None:
        raise ValueError("double_cover_hodge needs a branch degree")
    if any(r < 0 for r in spec.residual_index):
        raise ValueError(f"{spec.describe()} is neither Fano nor Calabi-Yau")
    space, cuts = spec.ambient, spec.cut_degrees
    n_y = spec.dim
    branch = spec.branch_degree
    half = tuple(c // 2 for c in branch)
    base = SectionSpec(space, cuts)

    if not space.cominuscule:
        chi = [
            chi_section_forms(base, p, half) + chi_section_forms(
                SectionSpec(space, cuts + (branch,)), p - 1, half)
            for p in range(n_y + 1)
        ]
        return HodgeRow(
            spec=spec,
            n=n_y,
            table=tuple(tuple(unknown() for _ in range(n_y + 1)) for _ in range(n_y + 1)),
            provenance=tuple(
                f"chi({space.name}, Omega^{p}(log B)(-{half})) = {c}"
                for p, c in enumerate(chi)
            ),
            assumptions=(
                SMOOTHNESS_NOTE,
                f"{space.name} is not cominuscule: Euler characteristics only",
            ),
        )

    divisor = SectionSpec(space, cuts + (branch,))
    base_table = hodge_table(base)
    table = [[unknown() for _ in range(n_y + 1)] for _ in range(n_y + 1)]
    for p in range(n_y + 1):
        amb = section_forms(base, p, half)
        if p == 0:
            res = list(amb)
        else:
            div = section_forms(divisor, p - 1, half)
            res = ses_middle(list(amb), list(div) + [Iv(0, 0)], n_y)
        for q in range(n_y + 1):
            b = base_table[p][q]
            table[p][q] = Iv(b.lo + res[q].lo,
                             None if (b.hi is None or res[q].hi is None)
                             else b.hi + res[q].hi)
    for _ in range(4):
        changed = False
        for p in range(n_y + 1):
            for q in range(n_y + 1):
                for v in (table[q][p], table[n_y - p][n_y - q]):
                    new = table[p][q].meet(v.lo, v.hi)
                    if new != table[p][q]:
                        table[p][q] = new
                        changed = True
        if not changed:
            break

    prov = _consumed_facts(base, n_y, downs=(half, _vneg(half)))
    prov += _consumed_facts(divisor, n_y - 1, downs=(half, _vneg(half)))
    return HodgeRow(
        spec=spec,
        n=n_y,
        table=tuple(tuple(row) for row in table),
        provenance=prov,
        assumptions=(SMOOTHNESS_NOTE,),
    )


def chi_section_forms(spec: SectionSpec, p: int, down=0) -> int:
    """Euler characteristic chi(X, Omega^p_X(-down)) by alternating sums of
    ambient characteristics over both complexes.  Works on any marked
    ambient, cominuscule or not; used as an independent oracle."""
    space, cuts = spec.ambient, spec.cut_degrees
    nf = len(space.factors)
    if isinstance(down, int):
        down = _vscale(down, space.ample)
    if p < 0 or p > spec.dim:
        return 0
    total = 0
    for k in range(p + 1):
        sign_k = -1 if k % 2 else 1
        for v1, m1 in _sym_groups(cuts, nf, k):
            for j in range(len(cuts) + 1):
                sign_j = -1 if j % 2 else 1
                for v2, m2 in _koszul_groups(cuts, j):
                    v2 = v2 or (0,) * nf
                    v = _vadd(down, _vadd(v1, v2))
                    total += sign_k * sign_j * m1 * m2 * euler_char(space, p - k, v)
    return total


# ---------------------------------------------------------------------------
# Deformation counts


@dataclass(frozen=True)
class ModuliReport:
    """One deformation count with its route and consumed dimensions."""

    value: int
    route: str
    inputs: tuple[tuple[str, int], ...]
    assumptions: tuple[str, ...] = ()

    def as_json(self) -> dict:
        return {
            "value": self.value,
            "route": self.route,
            "inputs": {k: v for k, v in self.inputs},
            "assumptions": list(self.assumptions),
        }


AUT_INJECTIVITY_NOTE = (
    "assumes the ambient automorphisms inject into the section count "
    "(finite generic stabilizer)"
)


def section_line_h0(spec: SectionSpec, vec) -> int:
    """h^0(X, O(vec)) through the Koszul restriction (exact by chase)."""
    space = spec.ambient
    if isinstance(vec, int):
        vec = _vscale(vec, space.ample)
    iv = restricted_forms(space, spec.cut_degrees, 0, _vneg(vec))[0]
    if not iv.exact:
        raise ValueError(f"h^0({spec.describe()}, O({vec})) did not resolve")
    return iv.lo


def _section_aut_dim(spec: SectionSpec) -> int | None:
    """Automorphism-group dimension of the double-cover base, when known."""
    if not spec.cut_degrees:
        return spec.ambient.delta
    if (spec.ambient.name == "LG(3,6)"
            and spec.cut_degrees == (spec.ambient.ample,)):
        return THETA_AUT_DIM
    return None


def deformation_moduli(spec: SectionSpec, route: str | None = None) -> ModuliReport:
    """Number of moduli of X (or of the double cover), via the requested
    route; defaults to the Grassmannian quotient for linear sections and to
    section counting otherwise."""
    space = spec.ambient
    facts = space_facts(space)
    delta = facts["delta"]

    if spec.branch_degree is not None:
        base = SectionSpec(space, spec.cut_degrees)
        aut = _section_aut_dim(base)
        if aut is None:
            raise ValueError(
                f"automorphism dimension of {base.describe()} is not stored")
        h0 = section_line_h0(base, spec.branch_degree)
        return ModuliReport(
            value=h0 - 1 - aut,
            route="double-cover-count",
            inputs=(("h0(branch)", h0), ("aut", aut)),
            assumptions=(AUT_INJECTIVITY_NOTE,),
        )

    cuts = spec.cut_degrees
    if not cuts:
        raise ValueError("the ambient space itself has no moduli to count")
    s = len(cuts)
    linear = all(c == space.ample for c in cuts)
    if route is None:
        route = "grassmannian" if linear else "cohomological"

    if route == "grassmannian":
        if not linear:
            raise ValueError("grassmannian route needs linear cuts")
        n1 = space.n_plus_one
        return ModuliReport(
            value=s * (n1 - s) - delta,
            route="grassmannian",
            inputs=(("s", s), ("N+1", n1), ("delta", delta)),
            assumptions=(AUT_INJECTIVITY_NOTE,),
        )
    if route == "cohomological":
        if len({c for c in cuts}) != 1:
            raise ValueError("cohomological route needs cuts of equal degree")
        h0 = section_line_h0(SectionSpec(space, ()), cuts[0])
        return ModuliReport(
            value=s * h0 - s * s - delta,
            route="cohomological",
            inputs=(("s", s), ("h0(cut)", h0), ("delta", delta)),
            assumptions=(AUT_INJECTIVITY_NOTE,),
        )
    raise ValueError(f"unknown route {route!r}")


def moduli_routes(spec: SectionSpec) -> tuple[ModuliReport, ...]:
    """Every applicable deformation_moduli route for the spec."""
    if spec.branch_degree is not None:
        return (deformation_moduli(spec),)
    out = []
    if spec.cut_degrees and all(c == spec.ambient.ample for c in spec.cut_degrees):
        out.append(deformation_moduli(spec, "grassmannian"))
    if spec.cut_degrees and len({c for c in spec.cut_degrees}) == 1:
        out.append(deformation_moduli(spec, "cohomological"))
    return tuple(out)


def _comb0(n: int, k: int) -> int:
    return comb(n, k) if n >= 0 and k >= 0 else 0


def ci_moduli(ambient_proj_dim: int, degrees) -> ModuliReport:
    """Moduli of a complete intersection of the given degrees in P^N:
    section counts minus the endomorphisms of the defining bundle minus the
    projectivities."""
    N = ambient_proj_dim
    degrees = tuple(degrees)
    if any(d < 2 for d in degrees):
        raise ValueError("complete-intersection degrees must be >= 2")
    if sum(degrees) > N + 1:
        raise ValueError("not Fano or Calabi-Yau")
    sections = sum(comb(N + d, d) for d in degrees)
    endos = sum(_comb0(N + di - dj, N) for di in degrees for dj in degrees)
    pgl = (N + 1) ** 2 - 1
    return ModuliReport(
        value=sections - endos - pgl,
        route="hypersurface-count" if len(degrees) == 1 else "cayley-ci",
        inputs=(("sections", sections), ("endos", endos), ("pgl", pgl)),
        assumptions=(AUT_INJECTIVITY_NOTE,),
    )


def double_cover_ci_moduli(n: int, branch: int) -> ModuliReport:
    """Moduli of a double cover of P^n branched in degree ``branch``."""
    if branch % 2 or branch < 2:
        raise ValueError("branch degree must be even and positive")
    if branch // 2 > n + 1:
        raise ValueError("not Fano or Calabi-Yau")
    sections = comb(n + branch, branch)
    pgl = (n + 1) ** 2 - 1
    return ModuliReport(
        value=sections - 1 - pgl,
        route="double-cover-count",
        inputs=(("sections", sections), ("pgl", pgl)),
        assumptions=(AUT_INJECTIVITY_NOTE,),
    )


def closed_form_hcc1(space, s: int | None = None) -> int:
    """dim Sym^{c-1}(C^s) - s^2 = C(s+c-2, c-1) - s^2: the closed form for
    the count of moduli of a codimension-s linear section with coindex-c
    ambient; independent oracle for the Hodge-theoretic route.

    ``space`` is a catalog space (s defaults to index - coindex + 1) or the
    coindex itself as an integer (then s is required)."""
    if isinstance(space, int):
        c = space
        if s is None:
            raise ValueError("s is required when passing the coindex directly")
    else:
        facts = space_facts(space)
        c = facts["coindex"]
        if s is None:
            s = facts["index"] - c + 1
    return comb(s + c - 2, c - 1) - s * s


# ---------------------------------------------------------------------------
# The special series: twisted-form lemmas and projective duality


def _series_facts(space: HomogSpace) -> tuple[int, int]:
    facts = space_facts(space)
    r, c = facts["index"], facts["coindex"]
    if space.name not in SPECIAL_SERIES:
        raise ValueError(f"{space.name} is outside the special series")
    return r, c


def lemma_nonvan_check(space: HomogSpace) -> tuple[int, int]:
    """The unique cohomology group of Omega^{c-2}(-(r-c+1)): returns its
    (degree, dimension), expected (r+2, 1)."""
    r, c = _series_facts(space)
    coh = forms_cohomology(space, c - 2, r - c + 1)
    if len(coh) != 1:
        raise AssertionError(f"expected a single group, got {coh}")
    ((q, d),) = coh.items()
    return q, d


def lemma_van_scan(space: HomogSpace) -> list[tuple[int, int, int, int]]:
    """Exhaustive scan of H^q(Omega^p(-k)) for p <= c-1, 1 <= k <= r-p,
    returning every nonzero (p, k, q, dim).

    The p = 0 column stops at k = r-1: O(-r) is the canonical bundle, whose
    top cohomology is one-dimensional for every Fano space, so it cannot be
    part of any vanishing range.
    """
    r, c = _series_facts(space)
    out = []
    for p in range(c):
        kmax = r - p if p >= 1 else r - 1
        for k in range(1, kmax + 1):
            for q, d in sorted(forms_cohomology(space, p, k).items()):
                out.append((p, k, q, d))
    return out


def dual_degree_scan(space: HomogSpace) -> list[tuple[int, dict]]:
    """For each degree d of a would-be dual hypersurface, the cohomology of
    Omega^{d-1}(d-r).  Reported raw, without verdict: only d = c-1 is known
    to produce the one-dimensional group."""
    r, c = _series_facts(space)
    return [(d, forms_cohomology(space, d - 1, r - d)) for d in range(2, c + 1)]


_DEGREE_WORDS = {2: "quadric", 3: "cubic", 4: "quartic", 5: "quintic",
                 6: "sextic", 7: "septic", 8: "octic"}
_DIM_WORDS = {2: "surface", 3: "threefold", 4: "fourfold", 5: "fivefold",
              6: "sixfold", 7: "sevenfold", 8: "eightfold", 9: "ninefold"}


def _variety_name(degree: int, dim: int, double: bool) -> str:
    deg = _DEGREE_WORDS.get(degree, f"degree-{degree}")
    dimw = _DIM_WORDS.get(dim, f"{dim}-fold")
    return f"double {deg} {dimw}" if double else f"{deg} {dimw}"


@dataclass(frozen=True)
class DualReport:
    """X vs the variety attached to its projective-dual hypersurface."""

    space: str
    description: str
    dual_dim: int
    x_moduli: ModuliReport
    dual_moduli: ModuliReport
    agree: bool
    j_dim: int

    def as_json(self) -> dict:
        return {
            "space": self.space,
            "dual": self.description,
            "dual_dim": self.dual_dim,
            "x_moduli": self.x_moduli.as_json(),
            "dual_moduli": self.dual_moduli.as_json(),
            "agree": self.agree,
            "intermediate_jacobian_dim": self.j_dim,
        }


def dual_correspondence(space: HomogSpace) -> DualReport:
    """Attach to the maximal CY-type linear section X of a series space the
    variety cut out by its dual hypersurface: a degree-(c-1) hypersurface in
    P^{r-c} when c-1 is odd, the double cover of P^{r-c} branched in degree
    c-1 when it is even.  Emits both deformation counts and the dimension of
    the intermediate Jacobian (one more than the count when they agree)."""
    r, c = _series_facts(space)
    s = r - c + 1
    x_moduli = deformation_moduli(linear_section(space, s))
    degree = c - 1
    pdim = r - c
    if degree % 2:
        dual_moduli = ci_moduli(pdim, (degree,))
        dual_dim = pdim - 1
    else:
        dual_moduli = double_cover_ci_moduli(pdim, degree)
        dual_dim = pdim
    return DualReport(
        space=space.name,
        description=_variety_name(degree, dual_dim, double=degree % 2 == 0),
        dual_dim=dual_dim,
        x_moduli=x_moduli,
        dual_moduli=dual_moduli,
        agree=x_moduli.value == dual_moduli.value,
        j_dim=x_moduli.value + 1,
    )


# ---------------------------------------------------------------------------
# Calabi-Yau-type verdicts


@dataclass(frozen=True)
class CYTypeReport:
    clauses: tuple[tuple[str, str, str], ...]  # (name, status, detail)
    verdict: str  # cy-type | not-cy-type | inconclusive

    def as_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "clauses": [
                {"name": n, "status": s, "detail": d} for n, s, d in self.clauses
            ],
        }


def _check_entry(v: Iv, want: int):
    if v.exact:
        return ("pass", "") if v.lo == want else ("fail", f"got {v.lo}")
    return "inconclusive", f"got [{v.lo},{v.hi}]"


def cy_type_verdict(row: HodgeRow, h1tx: ModuliReport | None = None) -> CYTypeReport:
    """Check the Hodge-theoretic shape of a Calabi-Yau-type manifold of odd
    dimension 2m+1: a one-dimensional h^{m+2,m-1} with nothing above it, no
    holomorphic k-forms for 0 < k < dim, and (as a dimension-level proxy for
    the contraction condition) h^{m+1,m} equal to the deformation count."""
    if row.n % 2 == 0:
        raise ValueError("Calabi-Yau type needs odd dimension")
    m = (row.n - 1) // 2
    clauses = []

    status, detail = _check_entry(row.entry(m + 2, m - 1), 1)
    for p in range(2, m + 1):
        s2, d2 = _check_entry(row.entry(m + p + 1, m - p), 0)
        if s2 != "pass":
            status, detail = s2, f"h^{{{m+p+1},{m-p}}}: {d2}"
            break
    clauses.append(("extreme-piece", status,
                    detail or f"h^{{{m+2},{m-1}}} = 1 and zero above"))

    if h1tx is None:
        clauses.append(("contraction-dimension", "inconclusive",
                        "no deformation count supplied"))
    else:
        s2, d2 = _check_entry(row.entry(m + 1, m), h1tx.value)
        clauses.append(("contraction-dimension", s2,
                        d2 or f"h^{{{m+1},{m}}} = {h1tx.value} = moduli"))
    clauses.append(("contraction-map", "not checked (out of scope)",
                    "only the dimension consequence is tested"))

    status, detail = "pass", "h^{k,0} = 0 for 0 < k < dim"
    for k in range(1, row.n):
        s2, d2 = _check_entry(row.entry(k, 0), 0)
        if s2 != "pass":
            status, detail = s2, f"h^{{{k},0}}: {d2}"
            break
    clauses.append(("no-holomorphic-forms", status, detail))

    tested = [s for name, s, _ in clauses if name != "contraction-map"]
    if any(s == "fail" for s in tested):
        verdict = "not-cy-type"
    elif any(s == "inconclusive" for s in tested):
        verdict = "inconclusive"
    else:
        verdict = "cy-type"
    return CYTypeReport(clauses=tuple(clauses), verdict=verdict)


__all__ = [
    "SPECIAL_SERIES",
    "THETA_AUT_DIM",
    "SectionSpec",
    "HodgeRow",
    "ModuliReport",
    "DualReport",
    "CYTypeReport",
    "section_spec",
    "linear_section",
    "restricted_forms",
    "chase_section_forms",
    "section_forms",
    "hodge_table",
    "section_hodge",
    "double_cover_hodge",
    "chi_section_forms",
    "section_line_h0",
    "deformation_moduli",
    "moduli_routes",
    "ci_moduli",
    "double_cover_ci_moduli",
    "closed_form_hcc1",
    "lemma_nonvan_check",
    "lemma_van_scan",
    "dual_degree_scan",
    "dual_correspondence",
    "cy_type_verdict",
    "projective_space",
]
