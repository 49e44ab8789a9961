"""Input sets, spectra and sampling grids.

An IntegerSet is the problem input: distinct nonzero signed integers.  Its
derived quantities fix the sampling grid used everywhere else: the largest
reachable subset-sum magnitude ``f_max`` and the alias-free sample count
``N = 2*f_max + 1`` over one unit period.

A Spectrum maps integer sum values to nonnegative subset counts.  Only
nonzero counts are stored; ``count(f)`` fills in zeros inside and outside
the window.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

from .errors import SetFormatError


@dataclass(frozen=True)
class IntegerSet:
    """Distinct nonzero signed integers, in input order.

    ``multiset=True`` relaxes the distinctness check; counts computed from a
    multiset then refer to multiset subsets (element occurrences are
    distinguishable).
    """

    elements: tuple[int, ...]
    multiset: bool = False

    def __post_init__(self):
        if not self.elements:
            raise SetFormatError("set must contain at least one element")
        for a in self.elements:
            if not isinstance(a, int) or isinstance(a, bool):
                raise SetFormatError(f"non-integer element: {a!r}")
            if a == 0:
                raise SetFormatError("zero elements are not allowed")
        if not self.multiset and len(set(self.elements)) != len(self.elements):
            raise SetFormatError("duplicate elements (pass multiset=True to allow)")

    @classmethod
    def of(cls, values: Iterable[int], multiset: bool = False) -> "IntegerSet":
        return cls(tuple(int(v) for v in values), multiset=multiset)

    @property
    def n(self) -> int:
        return len(self.elements)

    @cached_property
    def positive_sum(self) -> int:
        return sum(a for a in self.elements if a > 0)

    @cached_property
    def negative_magnitude(self) -> int:
        return -sum(a for a in self.elements if a < 0)

    @cached_property
    def f_max(self) -> int:
        """Largest achievable |subset sum|: max of the one-sided sums."""
        return max(self.positive_sum, self.negative_magnitude)

    @property
    def sample_count(self) -> int:
        return 2 * self.f_max + 1

    def without(self, index: int) -> "IntegerSet":
        """Copy with the element at ``index`` dropped (must leave >= 1)."""
        kept = self.elements[:index] + self.elements[index + 1:]
        return IntegerSet(kept, multiset=self.multiset)


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid for one period of the subset-sum signal."""

    f_max: int
    n_samples: int
    period: float = 1.0

    def __post_init__(self):
        if self.f_max < 0:
            raise ValueError("f_max must be nonnegative")
        if self.n_samples != 2 * self.f_max + 1:
            raise ValueError("n_samples must equal 2*f_max + 1")
        if self.n_samples < 3:
            raise ValueError("grid needs at least 3 samples")

    @classmethod
    def for_set(cls, g: IntegerSet) -> "GridSpec":
        return cls(f_max=g.f_max, n_samples=g.sample_count)


@dataclass(frozen=True)
class Spectrum:
    """Integer-frequency counts over an inclusive window [f_lo, f_hi].

    ``counts`` holds only nonzero bins.  ``residual`` is the largest observed
    deviation of a raw coefficient from its rounded count (0 for exact
    enumeration-based spectra).
    """

    window: tuple[int, int]
    counts: dict[int, int] = field(default_factory=dict)
    residual: float = 0.0

    def __post_init__(self):
        lo, hi = self.window
        if lo > hi:
            raise ValueError("window must satisfy f_lo <= f_hi")
        for f, c in self.counts.items():
            if c < 0:
                raise ValueError(f"negative count at f={f}")

    def count(self, f: int) -> int:
        return self.counts.get(f, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def items_in_window(self) -> Iterator[tuple[int, int]]:
        lo, hi = self.window
        for f in range(lo, hi + 1):
            yield f, self.counts.get(f, 0)

    def nonzero(self) -> dict[int, int]:
        return dict(sorted(self.counts.items()))


def parse_set_text(text: str) -> list[int]:
    """Parse the plain-text set format: one integer per line, ``#`` comments."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise SetFormatError(f"line {lineno}: not an integer: {line!r}") from None
    return values


def load_integer_set(path: str | Path, multiset: bool = False) -> IntegerSet:
    """Load a set from a text file (one integer per line) or a JSON array."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SetFormatError(f"cannot read set file {path}: {exc}") from exc
    stripped = text.lstrip()
    if path.suffix == ".json" or stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SetFormatError(f"{path}: invalid JSON: {exc}") from exc
        if not isinstance(data, list):
            raise SetFormatError(f"{path}: JSON set file must be an array")
        values = []
        for i, v in enumerate(data):
            if not isinstance(v, int) or isinstance(v, bool):
                raise SetFormatError(f"{path}: entry {i} is not an integer: {v!r}")
            values.append(v)
    else:
        try:
            values = parse_set_text(text)
        except SetFormatError as exc:
            raise SetFormatError(f"{path}: {exc}") from None
    if not values:
        raise SetFormatError(f"{path}: no elements found")
    return IntegerSet.of(values, multiset=multiset)
