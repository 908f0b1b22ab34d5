"""Bridge-trisection bookkeeping for branched-cover quotients.

Each trivial tangle of ``b`` arcs in a 3-ball is recorded by the perfect
matching it induces on the ``2b`` endpoints, numbered ``1..2b``. Crossing
information is carried along opaquely; triviality of the tangles and the
unlink hypothesis on ``theta_gamma u theta_alpha`` are the caller's claims.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from . import _kernels


@dataclass(frozen=True)
class Matching:
    b: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("bridge number must be positive")
        pairs = tuple(sorted(tuple(sorted((int(i), int(j)))) for i, j in self.pairs))
        points = [x for pr in pairs for x in pr]
        if len(pairs) != self.b or sorted(points) != list(range(1, 2 * self.b + 1)):
            raise ValueError(f"not a perfect matching on 1..{2 * self.b}: {list(pairs)}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, pairs: Iterable[Iterable[int]]) -> "Matching":
        pairs = [tuple(p) for p in pairs]
        if any(len(p) != 2 for p in pairs):
            raise ValueError("matching entries are pairs")
        return cls(len(pairs), tuple(pairs))

    def partners(self) -> list[int]:
        """0-based partner array."""
        out = [0] * (2 * self.b)
        for i, j in self.pairs:
            out[i - 1], out[j - 1] = j - 1, i - 1
        return out

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.pairs]


@dataclass(frozen=True)
class BridgeTrisection:
    b: int
    theta_alpha: Matching
    theta_beta: Matching
    theta_gamma: Matching
    unlink_assertion: bool = False
    crossings: Optional[Any] = None

    def __post_init__(self):
        for name in ("theta_alpha", "theta_beta", "theta_gamma"):
            if getattr(self, name).b != self.b:
                raise ValueError(f"{name} is not a matching on {2 * self.b} points")

    def to_json(self) -> dict:
        out = {
            "b": self.b,
            "theta_alpha": self.theta_alpha.to_json(),
            "theta_beta": self.theta_beta.to_json(),
            "theta_gamma": self.theta_gamma.to_json(),
            "unlink_assertion": self.unlink_assertion,
        }
        if self.crossings is not None:
            out["crossings"] = self.crossings
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "BridgeTrisection":
        if not isinstance(obj, dict) or "b" not in obj:
            raise ValueError("a bridge trisection is an object with a bridge number b")
        b = obj["b"]
        if isinstance(b, bool) or not isinstance(b, int):
            raise ValueError("b must be an integer")
        ms = []
        for name in ("theta_alpha", "theta_beta", "theta_gamma"):
            pairs = obj.get(name)
            if not isinstance(pairs, list):
                raise ValueError(f"{name} must be a list of pairs")
            ms.append(Matching(b, tuple(tuple(p) for p in pairs)))
        ua = obj.get("unlink_assertion", False)
        if not isinstance(ua, bool):
            raise ValueError("unlink_assertion must be a boolean")
        return cls(b, *ms, ua, obj.get("crossings"))


@dataclass(frozen=True)
class BandedDiagram:
    """Link ``theta_beta u theta_gamma`` with the retained alpha shadows as bands."""

    beta: Matching
    gamma: Matching
    bands: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    excised: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "link": {"beta": self.beta.to_json(), "gamma": self.gamma.to_json()},
            "bands": [list(p) for p in self.bands],
            "excised": [list(p) for p in self.excised],
        }


def components_of_union(m1: Matching, m2: Matching) -> int:
    """Number of closed curves formed by the arcs of both matchings.

    Equivalently half the number of cycles of the permutation ``m1 o m2``
    (each curve through ``2r`` points splits into two ``r``-cycles).
    """
    if m1.b != m2.b:
        raise ValueError("matchings on different point sets")
    return _kernels.union_components(m1.partners(), m2.partners())


def _component_labels(m1: Matching, m2: Matching) -> list[int]:
    p1, p2 = m1.partners(), m2.partners()
    label = [-1] * len(p1)
    comp = 0
    for s in range(len(p1)):
        if label[s] >= 0:
            continue
        x = s
        while label[x] < 0:
            label[x] = comp
            y = p1[x]
            label[y] = comp
            x = p2[y]
        comp += 1
    return label


def _require_certified(bt: BridgeTrisection):
    if not bt.unlink_assertion:
        raise ValueError("quotient data not certified: unlink_assertion is false")


def banded_link(bt: BridgeTrisection) -> BandedDiagram:
    """Banded link of the surface from its bridge-trisection data.

    One alpha shadow is excised per component of ``theta_alpha u
    theta_gamma``: the one whose smaller endpoint label is least. The
    remaining shadows are the bands on the link ``theta_beta u theta_gamma``.
    """
    _require_certified(bt)
    label = _component_labels(bt.theta_alpha, bt.theta_gamma)
    chosen: dict[int, tuple[int, int]] = {}
    for pr in bt.theta_alpha.pairs:  # pairs are sorted by their smaller endpoint
        chosen.setdefault(label[pr[0] - 1], pr)
    excised = tuple(sorted(chosen.values()))
    bands = tuple(pr for pr in bt.theta_alpha.pairs if pr not in chosen.values())
    return BandedDiagram(bt.theta_beta, bt.theta_gamma, bands, excised)


def branch_surface_euler(bt: BridgeTrisection) -> int:
    """Euler characteristic of the branch surface: ``2b`` points, ``3b`` arcs,
    one disk per component of ``theta_alpha u theta_gamma``."""
    _require_certified(bt)
    return components_of_union(bt.theta_alpha, bt.theta_gamma) - bt.b


@dataclass(frozen=True)
class BoundaryLinks:
    at_zero: int
    at_one: int


def boundary_links(bt: BridgeTrisection) -> BoundaryLinks:
    """Component counts of the boundary links ``theta_alpha u theta_beta`` and
    ``theta_gamma u theta_beta``."""
    return BoundaryLinks(components_of_union(bt.theta_alpha, bt.theta_beta),
                         components_of_union(bt.theta_gamma, bt.theta_beta))


def branched_cover_euler(p: int, chi_base: int, chi_branch: int) -> int:
    if p < 1:
        raise ValueError("cover degree must be at least 1")
    return p * chi_base - (p - 1) * chi_branch


def one_handle_fixed_set(components: int, c1: int, c2: int, coherent: bool = True) -> int:
    """Components of the fixed link after an equivariant 1-handle.

    The 1-handle acts on the fixed set as a band between components ``c1`` and
    ``c2`` (1-based): distinct components merge, a coherent self-band splits
    a component, an incoherent one leaves the count alone.
    """
    if components < 1:
        raise ValueError("the fixed link has at least one component")
    for c in (c1, c2):
        if not 1 <= c <= components:
            raise ValueError(f"component id {c} out of range 1..{components}")
    if c1 != c2:
        return components - 1
    return components + 1 if coherent else components
