"""Per-model encodings: complement image, PE, Code, PD, LPal.

Each encoding characterizes its matching model: two equal-length strings
match under the model iff their encodings are equal.  ``pe_window`` and
``pd_window`` give constant-time access to the encoding of any substring
from the encoding of the full text.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Text


@dataclass(frozen=True)
class ComplementMap:
    """Involution over the alphabet; unlisted symbols map to themselves."""

    table: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for a, b in self.table.items():
            if self.table.get(b, b) != a:
                raise ValueError(f"map is not an involution at {a} <-> {b}")

    def __call__(self, symbol: int) -> int:
        return self.table.get(symbol, symbol)

    @classmethod
    def identity(cls) -> "ComplementMap":
        return cls({})

    @classmethod
    def from_pairs(cls, pairs) -> "ComplementMap":
        table: dict[int, int] = {}
        for a, b in pairs:
            if table.get(a, b) != b or table.get(b, a) != a:
                raise ValueError(f"conflicting pair {a} <-> {b}")
            table[a] = b
            table[b] = a
        return cls(table)

    @classmethod
    def watson_crick(cls) -> "ComplementMap":
        """A<->T, C<->G on uppercase ASCII."""
        return cls.from_pairs([(ord("A"), ord("T")), (ord("C"), ord("G"))])

    @classmethod
    def from_spec(cls, spec: str, token_mode: bool = False) -> "ComplementMap":
        """Parse comma-separated ``X:Y`` pairs; each pair installs both directions."""
        pairs = []
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            left, sep, right = item.partition(":")
            if not sep or not left or not right:
                raise ValueError(f"bad map entry {item!r}, expected X:Y")
            if token_mode:
                pairs.append((int(left), int(right)))
            else:
                if len(left) != 1 or len(right) != 1:
                    raise ValueError(f"map entry {item!r} must pair single characters")
                pairs.append((ord(left), ord(right)))
        return cls.from_pairs(pairs)


def complement_apply(cmap: ComplementMap, text: Text) -> Text:
    """Pointwise image of the text under the involution."""
    return Text(
        symbols=tuple(cmap(s) for s in text.symbols),
        alphabet_kind=text.alphabet_kind,
        static=text.static,
    )


def static_marker(symbol: int) -> int:
    """Encoding of a static symbol inside a PE array (negative, symbol-unique)."""
    return -(symbol + 1)


@dataclass(frozen=True)
class PEArray:
    """Previous encoding: distance to the previous occurrence of the same
    parameterized symbol (0 at first occurrences); static symbols are stored
    as negative symbol-unique markers that only equal themselves."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)


def prev_encoding(text: Text) -> PEArray:
    """Build the PE array in one pass with a last-occurrence table."""
    static = text.static
    last: dict[int, int] = {}
    values = []
    for pos, sym in enumerate(text.symbols, start=1):
        if sym in static:
            values.append(static_marker(sym))
        else:
            prev = last.get(sym)
            values.append(0 if prev is None else pos - prev)
            last[sym] = pos
    return PEArray(tuple(values))


def pe_window(pe: PEArray, i: int, k: int) -> int:
    """PE of the window starting at i, at window offset k.

    Equals ``prev_encoding(T[i..j])[k]`` for any j >= i+k-1: the global value
    survives if it is a static marker or points inside the window, else the
    windowed value is 0 (first occurrence within the window).
    """
    if i < 1 or k < 1 or i + k - 1 > pe.n:
        raise IndexError(f"pe_window out of range (i={i}, k={k}, n={pe.n})")
    v = pe.values[i + k - 2]
    return v if v < k else 0


@dataclass(frozen=True)
class CodeArray:
    """Order-preserving code: per position the rightmost occurrence index of
    the predecessor and of the successor value in the preceding prefix."""

    pairs: tuple[tuple[int, int], ...]


class OrderedOcc:
    """Latest-occurrence structure over a bounded rank alphabet.

    Supports add / predecessor / successor in O(log size) via a Fenwick tree
    of key presence plus a latest-position table.
    """

    def __init__(self, size: int):
        self._size = size
        self._tree = [0] * (size + 1)
        self._present = [False] * size
        self._latest = [0] * size
        self._count = 0

    def add(self, rank: int, pos: int) -> None:
        if not self._present[rank]:
            self._present[rank] = True
            self._count += 1
            r = rank + 1
            while r <= self._size:
                self._tree[r] += 1
                r += r & (-r)
        self._latest[rank] = pos

    def _prefix(self, rank: int) -> int:
        # number of present keys <= rank
        total = 0
        r = rank + 1
        while r > 0:
            total += self._tree[r]
            r -= r & (-r)
        return total

    def _select(self, k: int) -> int:
        # k-th smallest present key, 1-based
        pos = 0
        bit = 1 << (self._size.bit_length())
        while bit:
            nxt = pos + bit
            if nxt <= self._size and self._tree[nxt] < k:
                pos = nxt
                k -= self._tree[nxt]
            bit >>= 1
        return pos  # 0-based rank

    def pred(self, rank: int) -> int:
        """Latest position of the largest present key <= rank, or 0."""
        k = self._prefix(rank)
        return 0 if k == 0 else self._latest[self._select(k)]

    def succ(self, rank: int) -> int:
        """Latest position of the smallest present key >= rank, or 0."""
        below = self._prefix(rank - 1) if rank > 0 else 0
        if below == self._count:
            return 0
        return self._latest[self._select(below + 1)]


def op_code(text: Text) -> CodeArray:
    """Build the (alpha, beta) code left to right."""
    ranks = {v: r for r, v in enumerate(sorted(set(text.symbols)))}
    occ = OrderedOcc(len(ranks))
    pairs = []
    for pos, sym in enumerate(text.symbols, start=1):
        r = ranks[sym]
        pairs.append((occ.pred(r), occ.succ(r)))
        occ.add(r, pos)
    return CodeArray(tuple(pairs))


@dataclass(frozen=True)
class PDArray:
    """Parent distances: per position the distance to the nearest previous
    position with a value <= the current one, 0 if none exists."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)


def parent_distance(text: Text) -> PDArray:
    return PDArray(tuple(parent_distance_values(text.symbols)))


def parent_distance_values(symbols) -> list[int]:
    """PD over a raw symbol sequence via a monotonic stack."""
    values = []
    stack: list[tuple[int, int]] = []  # (symbol, position), values non-decreasing
    for pos, sym in enumerate(symbols, start=1):
        while stack and stack[-1][0] > sym:
            stack.pop()
        values.append(pos - stack[-1][1] if stack else 0)
        stack.append((sym, pos))
    return values


def pd_window(pd: PDArray, i: int, j: int, k: int) -> int:
    """PD of window [i..j] at offset k: the global value if its target falls
    inside the window, else 0 (no smaller-or-equal element inside)."""
    if not (1 <= i and 1 <= k and i + k - 1 <= j <= pd.n):
        raise IndexError(f"pd_window out of range (i={i}, j={j}, k={k}, n={pd.n})")
    v = pd.values[i + k - 2]
    return v if 0 < v < k else 0


@dataclass(frozen=True)
class LPalArray:
    """Per position, the length of the longest exact palindromic suffix."""

    values: tuple[int, ...]


def exact_maximal_lengths(symbols) -> list[int]:
    """Classic Manacher over the #-augmented sequence.

    Returns the maximal exact-palindrome length at every center t = 1..2n-1;
    the radius in the augmented sequence equals the length in the original.
    """
    n = len(symbols)
    if n == 0:
        return []
    m = 2 * n + 1
    aug = [-1] * m
    for k, s in enumerate(symbols):
        aug[2 * k + 1] = s
    radius = [0] * m
    center = right = 0
    for p in range(1, m - 1):
        r = 0
        if p < right:
            r = min(right - p, radius[2 * center - p])
        while p - r - 1 >= 0 and p + r + 1 < m and aug[p - r - 1] == aug[p + r + 1]:
            r += 1
        radius[p] = r
        if p + r > right:
            center, right = p, p + r
    return radius[1:-1]


def lpal(text: Text) -> LPalArray:
    """Longest suffix palindrome per position, derived from the exact
    maximal-palindrome array in O(n).

    LPal[k] = 2k - min{t : the maximal palindrome at center t ends at or
    beyond k}; the minimum is maintained by sweeping k downward and admitting
    centers bucketed by their ending position.
    """
    symbols = text.symbols
    n = len(symbols)
    mpal = exact_maximal_lengths(symbols)
    by_end: list[list[int]] = [[] for _ in range(n + 1)]
    for t, length in enumerate(mpal, start=1):
        if length > 0:
            by_end[(t + length) // 2].append(t)
    values = [0] * n
    best_t = 2 * n  # sentinel above every real center
    for k in range(n, 0, -1):
        for t in by_end[k]:
            if t < best_t:
                best_t = t
        values[k - 1] = 2 * k - best_t
    return LPalArray(tuple(values))
