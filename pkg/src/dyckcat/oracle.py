"""Brute-force ground truth for Dyck words.

Deliberately naive: words are built by extending prefixes one step at a
time, with no reference to the generating tree, so agreement with the
engine carries real evidence.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

ORACLE_CAP = 16


class OracleCapError(ValueError):
    pass


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number by the convolution recurrence (exact integers)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = [1]
    for m in range(n):
        table.append(sum(table[j] * table[m - j] for j in range(m + 1)))
    return table[n]


@dataclass(frozen=True)
class WordSet:
    n: int
    words: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word) -> bool:
        word = str(word)
        pos = bisect_left(self.words, word)
        return pos < len(self.words) and self.words[pos] == word

    def dump(self) -> str:
        return "".join(w + "\n" for w in self.words)


def brute_enumerate(n: int, cap: int = ORACLE_CAP) -> WordSet:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise OracleCapError(f"n={n} exceeds oracle cap {cap}")
    out: list[str] = []
    # (prefix, ups, height)
    stack = [("", 0, 0)]
    while stack:
        prefix, ups, height = stack.pop()
        if len(prefix) == 2 * n:
            out.append(prefix)
            continue
        if height > 0:
            stack.append((prefix + "0", ups, height - 1))
        if ups < n:
            stack.append((prefix + "1", ups + 1, height + 1))
    out.sort()
    return WordSet(n, tuple(out))


@dataclass
class Diff:
    duplicates: list[str] = field(default_factory=list)
    unexpected: list[str] = field(default_factory=list)  # in stream, not in oracle
    missing: list[str] = field(default_factory=list)  # in oracle, not in stream

    @property
    def empty(self) -> bool:
        return not (self.duplicates or self.unexpected or self.missing)

    def __bool__(self) -> bool:
        return not self.empty

    def excerpt(self, limit: int = 5) -> str:
        parts = []
        for name in ("duplicates", "unexpected", "missing"):
            items = getattr(self, name)
            if items:
                shown = ", ".join(items[:limit])
                more = f" (+{len(items) - limit} more)" if len(items) > limit else ""
                parts.append(f"{name}: {shown}{more}")
        return "; ".join(parts) or "no differences"


def compare(expected: WordSet, stream) -> Diff:
    counts = Counter(str(w) for w in stream)
    members = set(expected.words)
    return Diff(
        duplicates=sorted(w for w, c in counts.items() if c > 1),
        unexpected=sorted(w for w in counts if w not in members),
        missing=[w for w in expected.words if w not in counts],
    )
