"""Shared text/center/window types and index arithmetic.

Conventions used across the library:

* Text positions are 1-based; ``T[i..j]`` is the inclusive window from i to j
  and is empty when ``i == j + 1``.
* Palindrome centers ``c = 1, 1.5, ..., n`` are stored as the doubled integer
  ``t = 2c - 1`` in ``1..2n-1``, so odd ``t`` is an integer center and even
  ``t`` a half-integer center.  A non-empty window ``[i..j]`` has center
  ``t = i + j - 1``.
* Results are lengths, never radii.  Length 0 (the empty palindrome) is legal
  at both parities; a fixed-point-free complement map makes length-0 maxima
  at integer centers possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Symbols = Sequence[int]
TextLike = Union[str, bytes, Sequence[int]]


def as_symbols(value: TextLike) -> tuple[int, ...]:
    """Coerce a string, bytes, or int sequence to a symbol tuple."""
    if isinstance(value, str):
        return tuple(map(ord, value))
    if isinstance(value, (bytes, bytearray)):
        return tuple(value)
    return tuple(int(v) for v in value)


@dataclass(frozen=True)
class Text:
    """Immutable symbol sequence over a totally ordered integer alphabet.

    ``static`` declares the static-symbol subset for parameterized matching;
    all other symbols are parameterized (the default: everything
    parameterized).
    """

    symbols: tuple[int, ...]
    alphabet_kind: str = "tokens"
    static: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.alphabet_kind not in ("byte", "tokens"):
            raise ValueError(f"unknown alphabet_kind {self.alphabet_kind!r}")
        if any(s < 0 for s in self.symbols):
            raise ValueError("symbols must be non-negative integers")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma(self) -> int:
        """Count of distinct static symbols present."""
        return len(self.static.intersection(self.symbols))

    @property
    def pi(self) -> int:
        """Count of distinct parameterized symbols present."""
        return len(set(self.symbols) - self.static)

    @classmethod
    def from_str(cls, s: str, static_chars: str = "") -> "Text":
        return cls(
            symbols=tuple(map(ord, s)),
            alphabet_kind="byte",
            static=frozenset(map(ord, static_chars)),
        )

    @classmethod
    def from_tokens(cls, tokens: Iterable[int], static: Iterable[int] = ()) -> "Text":
        return cls(symbols=tuple(int(v) for v in tokens), static=frozenset(static))

    def reversed(self) -> "Text":
        return Text(self.symbols[::-1], self.alphabet_kind, self.static)


@dataclass(frozen=True)
class Window:
    """1-based inclusive text window; empty when ``i == j + 1``."""

    i: int
    j: int

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    @property
    def is_empty(self) -> bool:
        return self.i == self.j + 1

    @property
    def center2(self) -> int:
        """Doubled-center index t = i + j - 1."""
        return self.i + self.j - 1


def center_count(n: int) -> int:
    """Number of palindrome centers in a text of length n."""
    return max(0, 2 * n - 1)


def window_of(t: int, length: int, n: int) -> Window:
    """Window of a palindrome of ``length`` at center ``t``.

    Computes [ceil(c - length/2) .. floor(c + length/2)] for c = (t+1)/2.
    ``length`` must match the parity of ``t`` (odd centers carry odd lengths,
    half-integer centers even lengths, with 0 legal only at half centers) and
    the window must fit in [1..n].
    """
    if not 1 <= t <= center_count(n):
        raise ValueError(f"center t={t} out of range for n={n}")
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > 0 and length % 2 != t % 2:
        raise ValueError(f"length {length} incompatible with center t={t}")
    if length == 0:
        if t % 2 == 1:
            raise ValueError(f"length 0 has no window at integer center t={t}")
        half = (t + 1) // 2
        return Window(half + 1, half)
    i = (t + 2 - length) // 2
    j = (t + length) // 2
    if i < 1 or j > n:
        raise ValueError(f"window [{i}..{j}] for (t={t}, length={length}) exceeds text")
    return Window(i, j)


def empty_window_at(t: int) -> Window:
    """Reporting convention for a length-0 palindrome at center t.

    Start = floor(c) + 1, end = floor(c); at half centers this is the true
    empty window, at integer centers it is the conventional placeholder row.
    """
    half = (t + 1) // 2
    return Window(half + 1, half)


def mirror_center(t_prime: int, t: int) -> int:
    """Center c' - d mirrored across c' from c, where d = c - c'."""
    if t <= t_prime:
        raise ValueError(f"mirror requires c > c' (got t={t}, t'={t_prime})")
    t_mirror = 2 * t_prime - t
    if t_mirror < 1:
        raise ValueError(f"mirrored center t={t_mirror} below 1")
    return t_mirror


def rank_compress(tokens: Iterable[int], static: Iterable[int] = ()) -> Text:
    """Order-preserving relabeling of tokens onto 0..k-1.

    Equal tokens map to equal ranks and all pairwise order relations are
    preserved.  A declared static set is translated through the same map.
    """
    toks = [int(v) for v in tokens]
    ranks = {v: r for r, v in enumerate(sorted(set(toks)))}
    return Text(
        symbols=tuple(ranks[v] for v in toks),
        alphabet_kind="tokens",
        static=frozenset(ranks[v] for v in static if v in ranks),
    )


@dataclass(frozen=True)
class CenterArray:
    """Maximal-palindrome lengths for all 2n-1 centers, indexed by t."""

    n: int
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.lengths) != center_count(self.n):
            raise ValueError("lengths must have exactly 2n-1 entries")

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, t: int) -> int:
        """Length at center t (1-based)."""
        if not 1 <= t <= len(self.lengths):
            raise IndexError(f"center t={t} out of range")
        return self.lengths[t - 1]

    def window(self, t: int) -> Window:
        """Window of the maximal palindrome at t (reporting convention if empty)."""
        length = self[t]
        if length == 0:
            return empty_window_at(t)
        return window_of(t, length, self.n)

    def items(self):
        """Yield (t, window, length) for every center."""
        for t in range(1, len(self.lengths) + 1):
            yield t, self.window(t), self.lengths[t - 1]

    def validate(self) -> None:
        """Check the parity invariant: positive lengths match center parity."""
        for t, length in enumerate(self.lengths, start=1):
            if length < 0:
                raise ValueError(f"negative length at t={t}")
            if length > 0 and length % 2 != t % 2:
                raise ValueError(f"length {length} at t={t} violates parity")
            if length > 0:
                window_of(t, length, self.n)
