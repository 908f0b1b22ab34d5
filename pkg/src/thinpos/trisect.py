"""Trisection diagrams at the level of first homology.

Curves on a closed genus-``g`` surface are recorded by their classes in
``H1 = Z^2g`` with the symplectic basis interleaved as
``(a1, b1, a2, b2, ...)``, so ``a_i . b_i = 1``. Everything checked here is a
necessary condition for the real (isotopy-level) statement; a clean report
does not certify that the curves are disjoint or that a splitting is standard.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from . import lattice
from .kirby import KirbyDiagram, TwoHandle, disk_bundle, double, linking_matrix, run_through_matrix
from .lattice import AbelianGroup

HOMOLOGY_CAVEAT = "homology-level check: necessary conditions only"


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection number of two classes."""
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


def symplectic_form(g: int) -> list[list[int]]:
    j = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


@dataclass(frozen=True)
class Curve:
    homology_class: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "homology_class", tuple(int(x) for x in self.homology_class))

    @property
    def primitive(self) -> bool:
        return gcd(*self.homology_class) == 1 if self.homology_class else False


@dataclass(frozen=True)
class CutSystem:
    curves: tuple[Curve, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))

    @classmethod
    def of(cls, classes: Sequence[Sequence[int]], prefix: str = "c") -> "CutSystem":
        return cls(tuple(Curve(tuple(v), f"{prefix}{i + 1}") for i, v in enumerate(classes)))

    def classes(self) -> list[list[int]]:
        return [list(c.homology_class) for c in self.curves]

    def __len__(self):
        return len(self.curves)


_PAIRS = (("alpha", "beta", "ab"), ("beta", "gamma", "bg"), ("gamma", "alpha", "ga"))


@dataclass(frozen=True)
class TrisectionDiagram:
    genus: int
    alpha: CutSystem
    beta: CutSystem
    gamma: CutSystem
    geometric: dict = field(default_factory=dict)
    declared_k: Optional[tuple[int, int, int]] = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.declared_k is not None:
            object.__setattr__(self, "declared_k", tuple(self.declared_k))
            if len(self.declared_k) != 3:
                raise ValueError("declared_k has three entries")
        geo = {}
        for key, mat in (self.geometric or {}).items():
            if key not in ("ab", "bg", "ga"):
                raise ValueError(f"unknown geometric matrix {key!r}")
            if len(mat) != self.genus or any(len(r) != self.genus for r in mat):
                raise ValueError(f"geometric matrix {key!r} must be {self.genus}x{self.genus}")
            if any(x < 0 for r in mat for x in r):
                raise ValueError(f"geometric matrix {key!r} has negative entries")
            geo[key] = [list(map(int, r)) for r in mat]
        object.__setattr__(self, "geometric", geo)

    def system(self, name: str) -> CutSystem:
        return getattr(self, name)

    def to_json(self) -> dict:
        out = {
            "genus": self.genus,
            "alpha": self.alpha.classes(),
            "beta": self.beta.classes(),
            "gamma": self.gamma.classes(),
        }
        if self.geometric:
            out["geometric"] = dict(sorted(self.geometric.items()))
        if self.declared_k is not None:
            out["declared_k"] = list(self.declared_k)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "TrisectionDiagram":
        if not isinstance(obj, dict) or "genus" not in obj:
            raise ValueError("a trisection diagram is an object with a genus")
        g = obj["genus"]
        if isinstance(g, bool) or not isinstance(g, int):
            raise ValueError("genus must be an integer")
        systems = []
        for name in ("alpha", "beta", "gamma"):
            rows = obj.get(name, [])
            if not isinstance(rows, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
                for r in rows
            ):
                raise ValueError(f"{name} must be a list of integer vectors")
            systems.append(CutSystem.of(rows, name))
        dk = obj.get("declared_k")
        return cls(g, *systems, obj.get("geometric") or {}, tuple(dk) if dk is not None else None)


class TorsionObstruction(ValueError):
    pass


def validate_cut_system(s: CutSystem, g: int) -> list[str]:
    """Diagnostics for a would-be cut system; an empty list means it passes."""
    if len(s) != g:
        return [f"expected {g} curves, got {len(s)}"]
    for c in s.curves:
        if len(c.homology_class) != 2 * g:
            return [f"{c.label}: class has length {len(c.homology_class)}, expected {2 * g}"]
    for c in s.curves:
        if not c.primitive:
            return [f"{c.label}: class {list(c.homology_class)} is non-primitive"]
    for i, x in enumerate(s.curves):
        for y in s.curves[i + 1:]:
            p = pairing(x.homology_class, y.homology_class)
            if p:
                return [f"{x.label}, {y.label}: J-pairing = {p}, curves cannot be disjoint"]
    if g and any(f != 1 for f in lattice.invariant_factors(s.classes())):
        return ["classes do not span a rank-g direct summand"]
    return []


def intersection_matrix(s1: CutSystem, s2: CutSystem) -> list[list[int]]:
    return [[pairing(x.homology_class, y.homology_class) for y in s2.curves] for x in s1.curves]


def pairwise_k(s1: CutSystem, s2: CutSystem) -> int:
    """Number of ``S1 x S2`` summands the pair presents, read off homology.

    The algebraic intersection matrix presents ``H1`` of the 3-manifold the
    two handlebodies glue up to; it must be free, and its rank is ``k``.
    """
    coker = lattice.cokernel(intersection_matrix(s1, s2), len(s2))
    if not coker.is_free:
        raise TorsionObstruction(f"not a #k S1xS2 diagram (torsion obstruction): H1 = {coker}")
    return coker.free_rank


def first_homology(d: TrisectionDiagram) -> AbelianGroup:
    """``H1`` of the closed 4-manifold: ``H1(surface)`` modulo all three systems."""
    gens = d.alpha.classes() + d.beta.classes() + d.gamma.classes()
    return lattice.cokernel(lattice.transpose(gens, 2 * d.genus), len(gens))


@dataclass
class TrisectionReport:
    genus: int
    k: Optional[tuple[int, int, int]] = None
    euler: Optional[int] = None
    h1: Optional[AbelianGroup] = None
    width_entry: int = 0
    diagnostics: list[str] = field(default_factory=list)
    caveats: list[str] = field(default_factory=lambda: [HOMOLOGY_CAVEAT])

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "k": list(self.k) if self.k is not None else None,
            "euler": self.euler,
            "H1": self.h1.to_json() if self.h1 is not None else None,
            "width_entry": self.width_entry,
            "diagnostics": self.diagnostics,
            "caveats": self.caveats,
        }


def validate_trisection(d: TrisectionDiagram) -> TrisectionReport:
    g = d.genus
    rep = TrisectionReport(g, width_entry=max(2 * g - 1, 0))
    valid = {}
    for name in ("alpha", "beta", "gamma"):
        errs = validate_cut_system(d.system(name), g)
        rep.diagnostics += [f"{name}: {e}" for e in errs]
        valid[name] = not errs
    ks = []
    for s1, s2, key in _PAIRS:
        if not (valid[s1] and valid[s2]):
            continue
        try:
            ks.append(pairwise_k(d.system(s1), d.system(s2)))
        except TorsionObstruction as e:
            rep.diagnostics.append(f"{s1}/{s2}: {e}")
        geo = d.geometric.get(key)
        if geo is not None:
            alg = intersection_matrix(d.system(s1), d.system(s2))
            for i in range(g):
                for j in range(g):
                    if geo[i][j] < abs(alg[i][j]) or (geo[i][j] - alg[i][j]) % 2:
                        rep.diagnostics.append(
                            f"{s1}/{s2}: geometric count {geo[i][j]} at ({i + 1},{j + 1}) "
                            f"incompatible with algebraic {alg[i][j]}")
    if len(ks) == 3:
        rep.k = tuple(ks)
        rep.euler = 2 + g - sum(ks)
        rep.h1 = first_homology(d)
        if d.declared_k is not None and tuple(d.declared_k) != rep.k:
            rep.diagnostics.append(f"declared k {list(d.declared_k)} but computed {list(rep.k)}")
    return rep


@dataclass(frozen=True)
class StandardPosition:
    ok: bool
    diagnostics: tuple[str, ...]
    link: tuple[str, ...]


def standard_position_check(d: TrisectionDiagram, k: int) -> StandardPosition:
    """Is ``(alpha, gamma)`` in the standard position of a ``#k S1xS2`` splitting?

    Requires ``alpha_l == gamma_l`` (as unoriented classes) for ``l <= k`` and
    ``|gamma_i n alpha_j| = delta_ij`` beyond that. When it holds, the
    remaining gamma curves form the attaching link of the relative handlebody.
    """
    geo = d.geometric.get("ga", [] if d.genus == 0 else None)
    if geo is None:
        raise ValueError("geometric intersections required")
    g = d.genus
    if not 0 <= k <= g:
        raise ValueError(f"k must lie in [0, {g}]")
    diags = []
    for l in range(k):
        a, c = d.alpha.curves[l].homology_class, d.gamma.curves[l].homology_class
        if a != c and a != tuple(-x for x in c):
            diags.append(f"alpha{l + 1} != gamma{l + 1}")
    for i in range(k, g):
        for j in range(k, g):
            if geo[i][j] != int(i == j):
                diags.append(f"|gamma{i + 1} n alpha{j + 1}| = {geo[i][j]}, expected {int(i == j)}")
    link = tuple(d.gamma.curves[i].label for i in range(k, g)) if not diags else ()
    return StandardPosition(not diags, tuple(diags), link)


def reverse(d: TrisectionDiagram) -> TrisectionDiagram:
    """Swap the roles of alpha and gamma (the upside-down relative handlebody)."""
    geo = {}
    t = lattice.transpose
    if "bg" in d.geometric:
        geo["ab"] = t(d.geometric["bg"], d.genus)
    if "ab" in d.geometric:
        geo["bg"] = t(d.geometric["ab"], d.genus)
    if "ga" in d.geometric:
        geo["ga"] = t(d.geometric["ga"], d.genus)
    dk = None
    if d.declared_k is not None:
        k12, k23, k31 = d.declared_k
        dk = (k23, k12, k31)
    return TrisectionDiagram(d.genus, d.gamma, d.beta, d.alpha, geo, dk)


def connected_sum(d1: TrisectionDiagram, d2: TrisectionDiagram) -> TrisectionDiagram:
    """Block sum of the class data (surfaces glued by a tube)."""
    for d in (d1, d2):
        rep = validate_trisection(d)
        if not rep.ok:
            raise ValueError(f"invalid summand: {rep.diagnostics[0]}")
    g1, g2 = d1.genus, d2.genus
    left, right = [0] * (2 * g2), [0] * (2 * g1)

    def block(s1: CutSystem, s2: CutSystem) -> CutSystem:
        curves = [Curve(c.homology_class + tuple(left), c.label) for c in s1.curves]
        curves += [Curve(tuple(right) + c.homology_class, c.label) for c in s2.curves]
        return CutSystem(tuple(curves))

    geo = {}
    for key in ("ab", "bg", "ga"):
        # a genus-0 summand has every (empty) geometric matrix
        m1 = d1.geometric.get(key, [] if g1 == 0 else None)
        m2 = d2.geometric.get(key, [] if g2 == 0 else None)
        if m1 is not None and m2 is not None:
            m = [r + [0] * g2 for r in m1]
            m += [[0] * g1 + r for r in m2]
            geo[key] = m
    dk = None
    if d1.declared_k is not None and d2.declared_k is not None:
        dk = tuple(x + y for x, y in zip(d1.declared_k, d2.declared_k))
    return TrisectionDiagram(g1 + g2, block(d1.alpha, d2.alpha), block(d1.beta, d2.beta),
                             block(d1.gamma, d2.gamma), geo, dk)


def from_kirby(d: KirbyDiagram) -> TrisectionDiagram:
    """Homology-level trisection diagram of the closed manifold of ``d``.

    Genus is ``|1-handles| + |2-handles|``: the core of the alpha handlebody
    is one loop per 1-handle and one per 2-handle attaching circle. With
    ``c`` 1-handles, run-through matrix ``R`` and linking matrix ``Q``:

    * ``alpha_i = a_i`` for every ``i``;
    * ``beta_i = a_i + sum_j R[i][j] a_{c+j}`` and
      ``beta_{c+j} = b_{c+j} - sum_i R[i][j] b_i`` (the 1-handle splitting of
      the boundary of the 1-handlebody);
    * ``gamma_i = a_i`` and ``gamma_{c+j} = b_{c+j} + sum_l Q[j][l] a_{c+l}``
      (surgery on the attaching link with the given framings).

    Then ``k(alpha, beta) = k(gamma, alpha) = c`` and ``beta``/``gamma``
    present the boundary of the 2-handlebody, which must be ``#k S1xS2`` with
    ``k`` the number of 3-handles.
    """
    if d.zero_handles != 1 or d.four_handles != 1:
        raise ValueError("trisection diagrams describe closed manifolds: one 0-handle and one 4-handle")
    c, n = len(d.one_handles), len(d.two_handles)
    g = c + n
    r = run_through_matrix(d)
    q = linking_matrix(d)

    def unit(kind, i):
        v = [0] * (2 * g)
        v[2 * i + (kind == "b")] = 1
        return v

    alpha = [unit("a", i) for i in range(g)]
    beta, gamma = [], []
    for i in range(c):
        v = unit("a", i)
        for j in range(n):
            v[2 * (c + j)] += r[i][j]
        beta.append(v)
        gamma.append(unit("a", i))
    for j in range(n):
        v = unit("b", c + j)
        for i in range(c):
            v[2 * i + 1] -= r[i][j]
        beta.append(v)
        w = unit("b", c + j)
        for l in range(n):
            w[2 * (c + l)] += q[j][l]
        gamma.append(w)
    # alpha and gamma share the first c curves and are dual on the rest
    ga = [[int(i == j and i >= c) for j in range(g)] for i in range(g)]
    return TrisectionDiagram(
        g, CutSystem.of(alpha, "alpha"), CutSystem.of(beta, "beta"), CutSystem.of(gamma, "gamma"),
        {"ga": ga} if g else {}, (c, d.three_handles, c),
    )


def s4() -> TrisectionDiagram:
    return from_kirby(KirbyDiagram(four_handles=1))


def s1xs3() -> TrisectionDiagram:
    return from_kirby(KirbyDiagram(("x1",), (), 1, 1))


def cp2(sign: int = 1) -> TrisectionDiagram:
    if sign not in (1, -1):
        raise ValueError("sign is +1 or -1")
    return from_kirby(KirbyDiagram((), (TwoHandle("K", sign),), 0, 1))


def sphere_bundle_double_diagram(orientable: bool, g: int, n: int) -> TrisectionDiagram:
    """Diagram of the double of the genus-``g`` disk bundle with Euler number ``n``.

    Genus ``2g + 2`` over an orientable base and ``g + 2`` over a
    nonorientable one; ``n`` only twists the gamma curve of the bundle's
    2-handle.
    """
    return from_kirby(double(disk_bundle(orientable, g, n)))


def check_symmetry_action(d: TrisectionDiagram, action: Sequence[Sequence[int]], p: int) -> list[str]:
    """Homology shadow of a period-``p`` symmetry; an empty list means no obstruction.

    Checks that ``action`` (acting on column vectors) preserves the
    intersection form up to sign, that ``action^p = +-I`` and that it maps
    the span of each cut system into itself.
    """
    n = 2 * d.genus
    m = [list(map(int, row)) for row in action]
    if len(m) != n or any(len(row) != n for row in m):
        raise ValueError(f"action must be {n}x{n}")
    if p < 2:
        raise ValueError("period must be at least 2")
    diags = []
    j = symplectic_form(d.genus)
    mt = lattice.transpose(m, n)
    pulled = lattice.matmul(lattice.matmul(mt, j), m)
    if pulled != j and pulled != [[-x for x in row] for row in j]:
        diags.append("action does not preserve the intersection form up to sign")
    power = lattice.identity(n)
    for _ in range(p):
        power = lattice.matmul(m, power)
    ident = lattice.identity(n)
    if power != ident and power != [[-x for x in row] for row in ident]:
        diags.append(f"action^{p} is not +-identity")
    for name in ("alpha", "beta", "gamma"):
        classes = d.system(name).classes()
        base = lattice.rank(classes, n) if classes else 0
        for c in d.system(name).curves:
            image = [sum(m[r][t] * c.homology_class[t] for t in range(n)) for r in range(n)]
            if lattice.rank(classes + [image], n) != base:
                diags.append(f"{name}: image of {c.label} leaves the span of the cut system")
                break
    return diags
