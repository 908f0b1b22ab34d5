"""Profiles of the standard small-width manifolds and the disk-bundle family."""
from __future__ import annotations

from typing import Sequence

from .decomp import DecompositionProfile, Level, LevelComponent, concat_with_reversed
from .kirby import boundary_first_homology
from .kirby import linear_plumbing as plumbing_diagram


def s4() -> DecompositionProfile:
    return DecompositionProfile((), "S4")


def s1xs3() -> DecompositionProfile:
    # one 1-handle, no 2-handles, the dual 3-handle closes it up
    return DecompositionProfile((Level(1, (LevelComponent(1),), 1),), "S1xS3")


def s1xb3() -> DecompositionProfile:
    return DecompositionProfile((Level(1, (LevelComponent(1),), 0),), "S1xB3")


def cp2(sign: int = 1) -> DecompositionProfile:
    if sign not in (1, -1):
        raise ValueError("sign is +1 or -1")
    return DecompositionProfile((Level(0, (LevelComponent(0, 0, 1),), 0),), "CP2" if sign > 0 else "-CP2")


def linear_plumbing(framings: Sequence[int]) -> DecompositionProfile:
    """One 2-handle per level, each an unknot of tunnel number zero.

    The level 3-manifold before the ``i``-th handle is the boundary of the
    plumbing of the first ``i - 1`` disk bundles: ``S^3`` when that boundary is
    a homology sphere, otherwise a lens space or ``S1xS2`` of Heegaard genus 1.
    """
    if not framings:
        raise ValueError("a plumbing needs at least one framing")
    levels = []
    for i in range(len(framings)):
        hg = 0
        if i:
            h1 = boundary_first_homology(plumbing_diagram(framings[:i]))
            hg = 0 if h1.is_trivial else 1
        levels.append(Level(0, (LevelComponent(hg, 0, 1),), 0))
    label = "plumbing(" + ",".join(map(str, framings)) + ")"
    return DecompositionProfile(tuple(levels), label)


def disk_bundle(orientable: bool, g: int, n: int = 0) -> DecompositionProfile:
    """Single-level profile of a disk bundle over a closed surface.

    The 2-handle sits in ``#_m S1xS2`` (``m = 2g`` or ``g``) with a tunnel
    system of ``m`` arcs, giving width ``{2m + 1}``.
    """
    if g < 1:
        raise ValueError("genus must be positive")
    m = 2 * g if orientable else g
    tag = "X" if orientable else "Y"
    return DecompositionProfile((Level(m, (LevelComponent(m, m, 1),), 0),), f"{tag}({g},{n})")


def bundle_double(orientable: bool, g: int, n: int = 0) -> DecompositionProfile:
    """The disk bundle followed by its upside-down copy: width ``{2m+1, 2m+1}``."""
    p = disk_bundle(orientable, g, n)
    return DecompositionProfile(concat_with_reversed(p, p).levels, f"D({p.label})")


def bundle_double_simultaneous(orientable: bool, g: int, n: int = 0) -> DecompositionProfile:
    """Both 2-handles of the double attached at once, with ``m + 1`` tunnels.

    The single width entry ``2m + 3`` equals ``2 * genus - 1`` for the
    trisection surface of genus ``m + 2`` this decomposition induces.
    """
    if g < 1:
        raise ValueError("genus must be positive")
    m = 2 * g if orientable else g
    tag = "X" if orientable else "Y"
    level = Level(m, (LevelComponent(m, m + 1, 2),), m)
    return DecompositionProfile((level,), f"D({tag}({g},{n}))*")
