"""Dyck words and their geometric measurements.

A word is a string over {"1", "0"}: "1" is a northeast step, "0" a
southeast step.  Indices are 0-based from the left in path order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

FORMATS = ("bits", "updown", "coords")


class DyckWordError(ValueError):
    """Raised for strings that are not Dyck words.

    ``index`` is the offending prefix position, or None for errors that
    concern the whole word (odd length, imbalance).
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True, order=True)
class DyckWord:
    bits: str

    @property
    def n(self) -> int:
        return len(self.bits) // 2

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class PathMetrics:
    peaks: tuple[int, ...]
    valleys: tuple[tuple[int, int], ...]  # (index, height)
    last_descent_len: int
    last_ascent_len: int
    lowest_valley: Optional[int]
    area: int


def max_path(n: int) -> DyckWord:
    """The pyramid of size n, which has the largest area of its size."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return DyckWord("1" * n + "0" * n)


def validate(bits) -> DyckWord:
    if isinstance(bits, DyckWord):
        bits = bits.bits
    elif not isinstance(bits, str):
        bits = "".join(str(int(b)) for b in bits)
    if not bits:
        raise DyckWordError("empty word")
    if len(bits) % 2:
        raise DyckWordError(f"odd length {len(bits)}")
    height = 0
    for j, c in enumerate(bits):
        if c == "1":
            height += 1
        elif c == "0":
            height -= 1
            if height < 0:
                raise DyckWordError(f"negative height at prefix index {j}", j)
        else:
            raise DyckWordError(f"bad symbol {c!r} at index {j}", j)
    if height:
        raise DyckWordError(f"unbalanced: {height} more up-steps than down-steps")
    return DyckWord(bits)


def heights(w: DyckWord) -> tuple[int, ...]:
    """Ordinate after each step."""
    out = []
    h = 0
    for c in w.bits:
        h += 1 if c == "1" else -1
        out.append(h)
    return tuple(out)


def metrics(w: DyckWord) -> PathMetrics:
    bits = w.bits
    last = len(bits) - 1
    peaks = []
    valleys = []
    area = 0
    h = 0
    for j, c in enumerate(bits):
        if c == "1":
            h += 1
            area += h
            if j < last and bits[j + 1] == "0":
                peaks.append(j)
        else:
            h -= 1
            if j < last and bits[j + 1] == "1":
                valleys.append((j, h))
    descent = len(bits) - len(bits.rstrip("0"))
    body = bits[: len(bits) - descent]
    ascent = len(body) - len(body.rstrip("1"))
    return PathMetrics(
        peaks=tuple(peaks),
        valleys=tuple(valleys),
        last_descent_len=descent,
        last_ascent_len=ascent,
        lowest_valley=min((v for _, v in valleys), default=None),
        area=area,
    )


def last_descent_len(w: DyckWord) -> int:
    return len(w.bits) - len(w.bits.rstrip("0"))


def lowest_valley(w: DyckWord) -> Optional[int]:
    return metrics(w).lowest_valley


def is_active(w: DyckWord) -> bool:
    """True when no valley touches the axis.

    Equivalently, dropping the first and last step leaves a Dyck word.
    """
    h = 0
    for c in w.bits[:-1]:
        h += 1 if c == "1" else -1
        if h == 0:
            return False
    return True


def ends_in_p1(w: DyckWord) -> bool:
    # a one-step last descent ends at 0, so the final "10" starts on the axis
    return last_descent_len(w) == 1


def render(w, fmt: str = "bits") -> str:
    bits = str(w)
    if fmt == "bits":
        return bits
    if fmt == "updown":
        return bits.replace("1", "U").replace("0", "D")
    if fmt == "coords":
        pts = [[0, 0]]
        y = 0
        for x, c in enumerate(bits, 1):
            y += 1 if c == "1" else -1
            pts.append([x, y])
        return json.dumps(pts, separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
