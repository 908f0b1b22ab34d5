"""Decomposition profiles: the integer shadow of a handle decomposition.

A handle decomposition ``b0 + C1 + D1 + E1 + ... + CN + DN + EN + b4`` is
recorded level by level. Level ``i`` stores ``|C_i|``, ``|E_i|`` and, for
each component ``Y'`` of the level 3-manifold ``Y_i``, its Heegaard genus, the
tunnel number of the part of the attaching link of ``D_i`` lying in ``Y'``,
and the number of link components there. Heegaard genera and tunnel numbers
are supplied data; nothing here computes them from geometry.

Level indices are 0-based throughout the API.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .widthset import Order, WidthMultiset, compare


@dataclass(frozen=True)
class LevelComponent:
    hg: int
    tunnel: Optional[int] = None
    link_size: int = 0

    def __post_init__(self):
        if self.hg < 0 or self.link_size < 0:
            raise ValueError("Heegaard genus and link size must be nonnegative")
        if self.tunnel is not None and self.tunnel < 0:
            raise ValueError("tunnel number must be nonnegative")
        if (self.tunnel is None) != (self.link_size == 0):
            raise ValueError("a tunnel number is given exactly when the link is nonempty")

    def to_json(self) -> dict:
        return {"hg": self.hg, "tunnel": self.tunnel, "link_size": self.link_size}

    @classmethod
    def from_json(cls, obj: dict) -> "LevelComponent":
        return cls(_nat(obj, "hg"), _opt_nat(obj.get("tunnel")), _nat(obj, "link_size", 0))


@dataclass(frozen=True)
class Level:
    one_handles: int
    components: tuple[LevelComponent, ...]
    three_handles: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a level has at least one component")
        if self.one_handles < 0 or self.three_handles < 0:
            raise ValueError("handle counts must be nonnegative")

    @property
    def two_handles(self) -> int:
        return sum(c.link_size for c in self.components)

    def to_json(self) -> dict:
        return {
            "one_handles": self.one_handles,
            "three_handles": self.three_handles,
            "components": [c.to_json() for c in self.components],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Level":
        comps = obj.get("components")
        if not isinstance(comps, list):
            raise ValueError("level.components must be a list")
        return cls(
            _nat(obj, "one_handles", 0),
            tuple(LevelComponent.from_json(c) for c in comps),
            _nat(obj, "three_handles", 0),
        )


@dataclass(frozen=True)
class DecompositionProfile:
    levels: tuple[Level, ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))

    def __len__(self):
        return len(self.levels)

    def to_json(self) -> dict:
        return {"label": self.label, "levels": [lv.to_json() for lv in self.levels]}

    @classmethod
    def from_json(cls, obj: dict) -> "DecompositionProfile":
        if not isinstance(obj, dict) or not isinstance(obj.get("levels", []), list):
            raise ValueError("a profile is an object with a 'levels' list")
        return cls(tuple(Level.from_json(lv) for lv in obj.get("levels", [])), str(obj.get("label", "")))


def component_complexity(c: LevelComponent) -> int:
    if c.tunnel is not None:
        return 2 * c.tunnel + 1
    return max(2 * c.hg - 1, 0)


def level_complexity(level: Level) -> int:
    return sum(component_complexity(c) for c in level.components)


def width_of(p: DecompositionProfile) -> WidthMultiset:
    return WidthMultiset(tuple(level_complexity(lv) for lv in p.levels))


def reverse(p: DecompositionProfile) -> DecompositionProfile:
    """Profile of the upside-down decomposition.

    Levels run in the opposite order and 1-handles trade places with
    3-handles; the per-level component data is kept, since turning a relative
    handlebody over preserves the genera of its nerve.
    """
    levels = tuple(
        Level(lv.three_handles, lv.components, lv.one_handles) for lv in reversed(p.levels)
    )
    return DecompositionProfile(levels, p.label)


def tunnel_split_union(t1: Optional[int], t2: Optional[int], hg1: int = 0, hg2: int = 0) -> int:
    """Tunnel number of a split link ``K1 u K2`` in ``X1 # X2``.

    With both links nonempty this is ``t1 + t2 + 1``; with one side empty the
    empty side contributes its Heegaard genus.
    """
    if t1 is None and t2 is None:
        raise ValueError("no link on either side")
    if t1 is not None and t2 is not None:
        return t1 + t2 + 1
    if t1 is not None:
        return t1 + hg2
    return t2 + hg1


@dataclass(frozen=True)
class SplitData:
    """What the caller knows about a split ``Y* = A # B``, ``L* = L_A u L_B``.

    ``hg_a_surgered`` is the Heegaard genus of ``A`` after surgery on ``L_A``.
    ``component`` picks the component of the level carrying the split link
    and ``link_size_a`` how many of its link components lie in ``A``.
    """

    hg_b: int
    t_b: int
    hg_a_surgered: int
    t_a: int
    component: int = 0
    link_size_a: int = 1

    @classmethod
    def from_json(cls, obj: dict) -> "SplitData":
        return cls(
            _nat(obj, "hg_b"), _nat(obj, "t_b"), _nat(obj, "hg_a_surgered"), _nat(obj, "t_a"),
            _nat(obj, "component", 0), _nat(obj, "link_size_a", 1),
        )


@dataclass(frozen=True)
class SplitResult:
    profile: DecompositionProfile
    c_new_a: int
    c_new_b: int
    c_old: int
    order: Order


def split_level(p: DecompositionProfile, i: int, data: SplitData) -> SplitResult:
    """Attach the 2-handles of level ``i`` in two rounds, ``L_A`` first.

    The new complexities are ``c_A = c_i + 2(HG(B) - t_B)`` and
    ``c_B = c_i + 2(HG(A[L_A]) - t_A)``; the other components of the level
    are carried unchanged into both new levels, the split component gets the
    tunnel number shifted by the same amount. ``order`` compares the new
    width with the old one.
    """
    lv = _level(p, i)
    if not 0 <= data.component < len(lv.components):
        raise IndexError(f"component {data.component} out of range")
    comp = lv.components[data.component]
    if comp.link_size < 2:
        raise ValueError("inconsistent split data: a split link needs at least two components")
    if not 1 <= data.link_size_a < comp.link_size:
        raise ValueError("inconsistent split data: both sides of the split need link components")
    c_i = level_complexity(lv)
    shift_a = 2 * (data.hg_b - data.t_b)
    shift_b = 2 * (data.hg_a_surgered - data.t_a)
    c_a, c_b = c_i + shift_a, c_i + shift_b
    t_a_new = comp.tunnel + shift_a // 2
    t_b_new = comp.tunnel + shift_b // 2
    if min(c_a, c_b, t_a_new, t_b_new) < 0:
        raise ValueError("inconsistent split data")

    def with_split(tunnel, size):
        comps = list(lv.components)
        comps[data.component] = LevelComponent(comp.hg, tunnel, size)
        return tuple(comps)

    first = Level(lv.one_handles, with_split(t_a_new, data.link_size_a), 0)
    second = Level(0, with_split(t_b_new, comp.link_size - data.link_size_a), lv.three_handles)
    levels = p.levels[:i] + (first, second) + p.levels[i + 1:]
    new = DecompositionProfile(levels, p.label)
    return SplitResult(new, c_a, c_b, c_i, compare(width_of(new), width_of(p)))


def merge_levels(p: DecompositionProfile, i: int) -> DecompositionProfile:
    """Merge level ``i`` into level ``i + 1`` when ``D_i`` and ``E_i`` are empty.

    The 1-handles of both levels are attached together; the level ``i + 1``
    data is kept, so the width loses one copy of ``c_i``.
    """
    lv = _level(p, i)
    if i == len(p.levels) - 1 or lv.two_handles or lv.three_handles:
        raise ValueError("level not mergeable")
    nxt = p.levels[i + 1]
    merged = replace(nxt, one_handles=lv.one_handles + nxt.one_handles)
    return DecompositionProfile(p.levels[:i] + (merged,) + p.levels[i + 2:], p.label)


def cancel_pair(p: DecompositionProfile, i: int) -> DecompositionProfile:
    """Delete a level that is exactly a cancelling 1-handle/2-handle pair.

    Cancellation itself is the caller's claim; the level must hold one
    1-handle, one 2-handle and no 3-handles.
    """
    lv = _level(p, i)
    if lv.one_handles != 1 or lv.two_handles != 1 or lv.three_handles:
        raise ValueError("level is not a single 1-handle/2-handle pair")
    return DecompositionProfile(p.levels[:i] + p.levels[i + 1:], p.label)


def concat_with_reversed(p_m: DecompositionProfile, p_n: DecompositionProfile) -> DecompositionProfile:
    """Decomposition of ``M u_f N``: build ``M``, then ``N`` upside down."""
    label = f"{p_m.label} u {p_n.label}" if p_m.label or p_n.label else ""
    return DecompositionProfile(p_m.levels + reverse(p_n).levels, label)


def _level(p: DecompositionProfile, i: int) -> Level:
    if not 0 <= i < len(p.levels):
        raise IndexError(f"level index {i} out of range for {len(p.levels)} levels")
    return p.levels[i]


def _nat(obj: dict, key: str, default=None) -> int:
    v = obj.get(key, default)
    if v is None or isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ValueError(f"{key!r} must be a nonnegative integer, got {v!r}")
    return v


def _opt_nat(v) -> Optional[int]:
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ValueError(f"tunnel must be null or a nonnegative integer, got {v!r}")
    return v
