"""Algebraic Kirby diagrams.

A diagram keeps only the integers that homology and intersection forms see:
framings, pairwise linking numbers of 2-handles, and the signed number of
times each 2-handle runs over each 1-handle. Planar link data is not modelled.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import lattice
from .lattice import AbelianGroup


@dataclass(frozen=True)
class TwoHandle:
    id: str
    framing: int = 0
    linking: Mapping[str, int] = field(default_factory=dict)
    run_through: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "linking", {k: int(v) for k, v in self.linking.items() if v})
        object.__setattr__(self, "run_through", {k: int(v) for k, v in self.run_through.items() if v})
        if self.id in self.linking:
            raise ValueError(f"2-handle {self.id!r}: self-linking belongs in the framing")


class NotATwoHandlebody(ValueError):
    pass


@dataclass(frozen=True)
class KirbyDiagram:
    one_handles: tuple[str, ...] = ()
    two_handles: tuple[TwoHandle, ...] = ()
    three_handles: int = 0
    four_handles: int = 0
    zero_handles: int = 1

    def __post_init__(self):
        object.__setattr__(self, "one_handles", tuple(self.one_handles))
        object.__setattr__(self, "two_handles", tuple(self.two_handles))
        if self.zero_handles < 1:
            raise ValueError("a diagram has at least one 0-handle")
        if self.three_handles < 0 or self.four_handles < 0:
            raise ValueError("handle counts must be nonnegative")
        if len(set(self.one_handles)) != len(self.one_handles):
            raise ValueError("duplicate 1-handle ids")
        ids = [h.id for h in self.two_handles]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate 2-handle ids")
        known, ones = set(ids), set(self.one_handles)
        for h in self.two_handles:
            for other, lk in h.linking.items():
                if other not in known:
                    raise ValueError(f"2-handle {h.id!r} links unknown handle {other!r}")
                if self.handle(other).linking.get(h.id, 0) != lk:
                    raise ValueError(f"linking of {h.id!r} and {other!r} is not symmetric")
            for one in h.run_through:
                if one not in ones:
                    raise ValueError(f"2-handle {h.id!r} runs over unknown 1-handle {one!r}")

    def handle(self, hid: str) -> TwoHandle:
        for h in self.two_handles:
            if h.id == hid:
                return h
        raise KeyError(hid)

    def to_json(self) -> dict:
        return {
            "zero_handles": self.zero_handles,
            "one_handles": list(self.one_handles),
            "two_handles": [
                {"id": h.id, "framing": h.framing, "linking": dict(sorted(h.linking.items())),
                 "run_through": dict(sorted(h.run_through.items()))}
                for h in self.two_handles
            ],
            "three_handles": self.three_handles,
            "four_handles": self.four_handles,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KirbyDiagram":
        if not isinstance(obj, dict):
            raise ValueError("a Kirby diagram is a JSON object")
        twos = []
        for h in obj.get("two_handles", []):
            if not isinstance(h, dict) or "id" not in h:
                raise ValueError("each 2-handle needs an id")
            twos.append(TwoHandle(str(h["id"]), _int(h.get("framing", 0)),
                                  {str(k): _int(v) for k, v in h.get("linking", {}).items()},
                                  {str(k): _int(v) for k, v in h.get("run_through", {}).items()}))
        return cls(tuple(str(x) for x in obj.get("one_handles", [])), tuple(twos),
                   _int(obj.get("three_handles", 0)), _int(obj.get("four_handles", 0)),
                   _int(obj.get("zero_handles", 1)))


@dataclass(frozen=True)
class IntersectionForm:
    matrix: list[list[int]]
    signature: int
    determinant: int
    even: bool

    @property
    def unimodular(self) -> bool:
        return abs(self.determinant) == 1

    def to_json(self) -> dict:
        return {"matrix": self.matrix, "signature": self.signature,
                "determinant": self.determinant, "even": self.even}


@dataclass(frozen=True)
class TwoHandlebodyHomology:
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup

    def to_json(self) -> dict:
        return {"H0": self.h0.to_json(), "H1": self.h1.to_json(), "H2": self.h2.to_json()}


def linking_matrix(d: KirbyDiagram) -> list[list[int]]:
    """Framings on the diagonal, pairwise linking numbers off it."""
    hs = d.two_handles
    return [[a.framing if a is b else a.linking.get(b.id, 0) for b in hs] for a in hs]


def run_through_matrix(d: KirbyDiagram) -> list[list[int]]:
    """Boundary map from 2-chains to 1-chains: rows 1-handles, columns 2-handles."""
    return [[h.run_through.get(x, 0) for h in d.two_handles] for x in d.one_handles]


def homology_of_2handlebody(d: KirbyDiagram) -> TwoHandlebodyHomology:
    if d.three_handles or d.four_handles or d.zero_handles != 1:
        raise NotATwoHandlebody("not a 2-handlebody")
    dmat = run_through_matrix(d)
    ncols = len(d.two_handles)
    return TwoHandlebodyHomology(
        AbelianGroup(1),
        lattice.cokernel(dmat, ncols),
        AbelianGroup(lattice.kernel_rank(dmat, ncols)),
    )


def boundary_first_homology(d: KirbyDiagram) -> AbelianGroup:
    """First homology of the boundary 3-manifold, presented by the linking matrix."""
    if d.one_handles or d.three_handles or d.four_handles:
        raise NotATwoHandlebody("boundary homology needs a diagram of 2-handles only")
    return lattice.cokernel(linking_matrix(d), len(d.two_handles))


def euler_characteristic(d: KirbyDiagram) -> int:
    return (d.zero_handles - len(d.one_handles) + len(d.two_handles)
            - d.three_handles + d.four_handles)


def intersection_form(d: KirbyDiagram) -> IntersectionForm:
    if d.one_handles:
        raise NotATwoHandlebody("intersection form is read off diagrams without 1-handles")
    q = linking_matrix(d)
    return IntersectionForm(q, lattice.signature(q), lattice.determinant(q),
                            all(h.framing % 2 == 0 for h in d.two_handles))


def linear_plumbing(framings: Sequence[int]) -> KirbyDiagram:
    """Chain of unknots, consecutive ones linking once."""
    if not framings:
        raise ValueError("a plumbing needs at least one framing")
    k = len(framings)
    ids = [f"h{i + 1}" for i in range(k)]
    hs = []
    for i, n in enumerate(framings):
        lk = {}
        if i > 0:
            lk[ids[i - 1]] = 1
        if i < k - 1:
            lk[ids[i + 1]] = 1
        hs.append(TwoHandle(ids[i], int(n), lk))
    return KirbyDiagram((), tuple(hs))


def disk_bundle(orientable: bool, g: int, n: int) -> KirbyDiagram:
    """Disk bundle of Euler number ``n`` over a closed genus-``g`` surface.

    Orientable: ``2g`` 1-handles and one 2-handle following the product of
    commutators, so it crosses each 1-handle algebraically zero times.
    Nonorientable: ``g`` 1-handles, the 2-handle running over each one twice
    in the same direction (the word ``a1^2 ... ag^2``).
    """
    if g < 1:
        raise ValueError("genus must be positive")
    count, runs = (2 * g, 0) if orientable else (g, 2)
    ones = tuple(f"x{i + 1}" for i in range(count))
    k = TwoHandle("K", int(n), {}, {x: runs for x in ones})
    return KirbyDiagram(ones, (k,))


def double(d: KirbyDiagram) -> KirbyDiagram:
    """Kirby diagram of ``M u_id -M`` for a diagram with connected boundary.

    Each 2-handle ``h`` gets a 0-framed meridian ``h*``; the upside-down
    copy contributes one 3-handle per 1-handle and a single 4-handle.
    """
    if d.three_handles or d.four_handles:
        raise NotATwoHandlebody("double expects a diagram without 3- or 4-handles")
    ids = {h.id for h in d.two_handles}
    hs = []
    for h in d.two_handles:
        m = f"{h.id}*"
        if m in ids:
            raise ValueError(f"meridian id {m!r} collides with an existing 2-handle")
        hs.append(TwoHandle(h.id, h.framing, {**h.linking, m: 1}, h.run_through))
    hs += [TwoHandle(f"{h.id}*", 0, {h.id: 1}) for h in d.two_handles]
    return KirbyDiagram(d.one_handles, tuple(hs), len(d.one_handles), 1, d.zero_handles)


def _int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"expected an integer, got {v!r}")
    return v
