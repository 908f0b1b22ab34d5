"""Width multisets and their well-founded order.

A width is a finite multiset of nonnegative integers. Two widths are compared
by sorting each in non-increasing order, padding the shorter one with zeros,
and comparing lexicographically. Under this rule trailing zeros are invisible
to the order (``{3, 0}`` and ``{3}`` compare equal) although the multisets
themselves differ; ``==`` is structural, ``compare`` is the order.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import _kernels


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def from_sign(cls, s: int) -> "Order":
        return cls.LESS if s < 0 else cls.GREATER if s > 0 else cls.EQUAL


@dataclass(frozen=True)
class WidthMultiset:
    """Canonical (non-increasing) tuple of level complexities."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        vals = tuple(int(x) for x in self.entries)
        if any(x < 0 for x in vals):
            raise ValueError(f"width entries must be nonnegative, got {vals}")
        object.__setattr__(self, "entries", tuple(sorted(vals, reverse=True)))

    @classmethod
    def of(cls, *entries: int) -> "WidthMultiset":
        return cls(tuple(entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    # rich comparisons follow the padded order, not structural equality
    def __lt__(self, other):
        return _cmp(self, other) < 0

    def __le__(self, other):
        return _cmp(self, other) <= 0

    def __gt__(self, other):
        return _cmp(self, other) > 0

    def __ge__(self, other):
        return _cmp(self, other) >= 0

    def __or__(self, other: "WidthMultiset") -> "WidthMultiset":
        return union(self, other)

    def remove(self, value: int) -> "WidthMultiset":
        """Drop one occurrence of ``value``."""
        lst = list(self.entries)
        try:
            lst.remove(value)
        except ValueError:
            raise ValueError(f"{value} is not an entry of {self}") from None
        return WidthMultiset(tuple(lst))

    def to_json(self) -> list[int]:
        return list(self.entries)

    @classmethod
    def from_json(cls, obj) -> "WidthMultiset":
        if isinstance(obj, dict):
            obj = obj["entries"]
        if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
            raise ValueError("a width is a list of nonnegative integers")
        return cls(tuple(obj))

    def __str__(self):
        return "{" + ", ".join(map(str, self.entries)) + "}"


def _cmp(a, b) -> int:
    if not isinstance(b, WidthMultiset):
        return NotImplemented
    return _kernels.padded_compare(a.entries, b.entries)


def compare(a: WidthMultiset, b: WidthMultiset) -> Order:
    return Order.from_sign(_kernels.padded_compare(a.entries, b.entries))


def union(a: WidthMultiset, b: WidthMultiset) -> WidthMultiset:
    """Multiset union; multiplicities add."""
    return WidthMultiset(a.entries + b.entries)


def min_of(candidates: Iterable[WidthMultiset]) -> WidthMultiset:
    """Minimum under ``compare``; the first occurrence wins ties."""
    it = iter(candidates)
    try:
        best = next(it)
    except StopIteration:
        raise ValueError("empty candidate set") from None
    for w in it:
        if compare(w, best) is Order.LESS:
            best = w
    return best


def lint(w: WidthMultiset | Sequence[int]) -> list[str]:
    """Warnings for entries that cannot come from a single-component level."""
    entries = w.entries if isinstance(w, WidthMultiset) else tuple(w)
    even = [x for x in entries if x % 2 == 0 and x != 0]
    zero = entries.count(0)
    out = []
    if even:
        out.append(f"even width entries {even}: level complexity summed over several components")
    if zero:
        out.append(f"{zero} zero width entr{'y' if zero == 1 else 'ies'} (levels with S^3 components and no link)")
    return out
