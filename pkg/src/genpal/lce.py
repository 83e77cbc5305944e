"""Constant-time longest-common-extension queries over integer sequences.

Backed by a suffix array (prefix doubling), the Kasai LCP array, and a
block-decomposed sparse-table range-minimum structure.  Construction is
O(n log n); queries cost O(1) sparse-table lookups plus at most two
block-local scans of bounded size.
"""

from __future__ import annotations

import numpy as np

_SMALL_N = 512
_BLOCK = 32


def _suffix_array_small(seq: list[int]) -> list[int]:
    return sorted(range(len(seq)), key=lambda i: seq[i:])


def _suffix_array_doubling(seq: list[int]) -> list[int]:
    n = len(seq)
    arr = np.asarray(seq, dtype=np.int64)
    _, rank = np.unique(arr, return_inverse=True)
    rank = rank.astype(np.int64)
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        order = np.lexsort((key2, rank))
        r1, r2 = rank[order], key2[order]
        ids = np.empty(n, dtype=np.int64)
        ids[0] = 0
        ids[1:] = np.cumsum((r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1]))
        rank = np.empty(n, dtype=np.int64)
        rank[order] = ids
        if ids[-1] == n - 1 or k >= n:
            return order.tolist()
        k *= 2


def _kasai(seq: list[int], sa: list[int], rank: list[int]) -> list[int]:
    n = len(seq)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and seq[i + h] == seq[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class _BlockRmq:
    """Range minimum over a fixed array: sparse table over 32-wide block
    minima, endpoints scanned inside their blocks."""

    def __init__(self, data: list[int]):
        self._data = data
        nblocks = (len(data) + _BLOCK - 1) // _BLOCK
        mins = [min(data[b * _BLOCK : (b + 1) * _BLOCK]) for b in range(nblocks)]
        table = [mins]
        span = 1
        while 2 * span <= nblocks:
            prev = table[-1]
            table.append(
                [min(prev[i], prev[i + span]) for i in range(nblocks - 2 * span + 1)]
            )
            span *= 2
        self._table = table

    def query(self, a: int, b: int) -> int:
        """Minimum of data[a..b] inclusive; a <= b required."""
        data = self._data
        ba, bb = a // _BLOCK, b // _BLOCK
        if ba == bb:
            return min(data[a : b + 1])
        best = min(data[a : (ba + 1) * _BLOCK])
        tail = min(data[bb * _BLOCK : b + 1])
        if tail < best:
            best = tail
        lo, hi = ba + 1, bb - 1
        if lo <= hi:
            level = (hi - lo + 1).bit_length() - 1
            row = self._table[level]
            mid = min(row[lo], row[hi - (1 << level) + 1])
            if mid < best:
                best = mid
        return best


class LceIndex:
    """Suffix array + LCP + RMQ over one integer sequence.

    Positions are 1-based.  ``lce(p, q)`` equals the naive symbol-by-symbol
    scan from p and q; ``lce(p, p)`` is the suffix length n - p + 1.
    """

    def __init__(self, sequence: list[int]):
        self.sequence = sequence
        n = len(sequence)
        self.n = n
        if n == 0:
            self.suffix_array: list[int] = []
            self.rank: list[int] = []
            self.lcp_array: list[int] = []
            self._rmq = None
            return
        if n <= _SMALL_N:
            self.suffix_array = _suffix_array_small(sequence)
        else:
            self.suffix_array = _suffix_array_doubling(sequence)
        self.rank = [0] * n
        for r, start in enumerate(self.suffix_array):
            self.rank[start] = r
        self.lcp_array = _kasai(sequence, self.suffix_array, self.rank)
        self._rmq = _BlockRmq(self.lcp_array)

    @classmethod
    def build(cls, sequence) -> "LceIndex":
        return cls([int(v) for v in sequence])

    @classmethod
    def build_parts(cls, *parts) -> tuple["LceIndex", list[int]]:
        """Index the concatenation of parts, one unique separator after each.

        Separators are tokens 0..k-1, strictly smaller than all (shifted)
        content tokens, so no LCE query crosses a part boundary.  Returns the
        index and the 1-based start offset of each part.
        """
        k = len(parts)
        combined: list[int] = []
        offsets: list[int] = []
        for idx, part in enumerate(parts):
            offsets.append(len(combined) + 1)
            combined.extend(int(v) + k for v in part)
            combined.append(idx)
        return cls(combined), offsets

    def lce(self, p: int, q: int) -> int:
        """Length of the longest common prefix of the suffixes at p and q."""
        n = self.n
        if n == 0:
            return 0
        if not (1 <= p <= n and 1 <= q <= n):
            raise IndexError(f"lce positions out of range (p={p}, q={q}, n={n})")
        if p == q:
            return n - p + 1
        a, b = self.rank[p - 1], self.rank[q - 1]
        if a > b:
            a, b = b, a
        return self._rmq.query(a + 1, b)


class OutwardLce:
    """Outward arm queries for the exact or complementary model.

    Indexes ``T sep1 f(rev(T)) sep2`` (f = identity for the exact model); the
    arm at a center is the LCP of the right arm read rightward and the
    complemented reversed left arm.
    """

    def __init__(self, text, cmap=None):
        symbols = text.symbols
        self.n = len(symbols)
        if cmap is None:
            part2 = list(reversed(symbols))
        else:
            part2 = [cmap(s) for s in reversed(symbols)]
        self.index, offsets = LceIndex.build_parts(list(symbols), part2)
        self._off1, self._off2 = offsets

    def arm(self, t: int) -> int:
        """Maximal matching arm length at center t (1-based, 1..2n-1)."""
        n = self.n
        if t % 2:
            c = (t + 1) // 2
            p, q = c - 1, c + 1
        else:
            p = t // 2
            q = p + 1
        if p < 1 or q > n:
            return 0
        return self.index.lce(self._off1 + q - 1, self._off2 + (n - p))


def outward_lce_theta(text, cmap, t: int, index: OutwardLce | None = None) -> int:
    """Arm length of the maximal complementary sym-palindrome at center t.

    The palindrome length is 2*arm, plus 1 at integer centers (the middle
    symbol is unconstrained).  Pass a prebuilt ``OutwardLce`` to amortize
    construction over many centers.
    """
    if index is None:
        index = OutwardLce(text, cmap)
    return index.arm(t)
