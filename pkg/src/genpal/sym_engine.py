"""Maximal symmetry-based palindromes: one outward arm match per center.

Exact and complementary matching run on the constant-time outward-LCE fast
path.  The other models grow both arms symbol by symbol through fresh
per-center tokenizers whose token streams are equal exactly when the arm
prefixes match under the model; this is worst-case quadratic per scan
(order-preserving adds a log factor) but linear-ish on typical inputs.  The
inward Cartesian-tree variant binary-searches the arm length per center,
comparing windowed parent distances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CenterArray, Text
from .encodings import ComplementMap, OrderedOcc, parent_distance_values, static_marker
from .lce import OutwardLce

MODELS = ("exact", "theta", "param", "op", "ct", "palstruct")


@dataclass(frozen=True)
class SymScanResult:
    lengths: CenterArray
    direction: str


class _ExactTok:
    def reset(self) -> None:
        pass

    def append(self, sym: int) -> int:
        return sym


class _MappedTok:
    """Emits the complement image; used for the left arm of the theta model."""

    def __init__(self, table: dict[int, int]):
        self._table = table

    def reset(self) -> None:
        pass

    def append(self, sym: int):
        return self._table.get(sym, sym)


class _ParamTok:
    """Emits the previous-encoding value of each appended position."""

    def __init__(self, static: frozenset[int]):
        self._static = static
        self._last: dict[int, int] = {}
        self._pos = 0

    def reset(self) -> None:
        self._last.clear()
        self._pos = 0

    def append(self, sym: int) -> int:
        self._pos += 1
        if sym in self._static:
            return static_marker(sym)
        prev = self._last.get(sym)
        self._last[sym] = self._pos
        return 0 if prev is None else self._pos - prev


class _OpTok:
    """Emits the (alpha, beta) order-preserving code pair per position."""

    def __init__(self, ranks: dict[int, int]):
        self._ranks = ranks
        self._occ = OrderedOcc(len(ranks))
        self._pos = 0

    def reset(self) -> None:
        self._occ = OrderedOcc(len(self._ranks))
        self._pos = 0

    def append(self, sym: int) -> tuple[int, int]:
        r = self._ranks[sym]
        occ = self._occ
        token = (occ.pred(r), occ.succ(r))
        self._pos += 1
        occ.add(r, self._pos)
        return token


class _CtTok:
    """Emits the parent distance of each appended position."""

    def __init__(self):
        self._stack: list[tuple[int, int]] = []
        self._pos = 0

    def reset(self) -> None:
        self._stack.clear()
        self._pos = 0

    def append(self, sym: int) -> int:
        self._pos += 1
        stack = self._stack
        while stack and stack[-1][0] > sym:
            stack.pop()
        token = self._pos - stack[-1][1] if stack else 0
        stack.append((sym, self._pos))
        return token


class _PalstructTok:
    """Emits the longest-suffix-palindrome length of the growing arm.

    Maintains the full set of suffix-palindrome lengths by candidate chasing:
    a suffix palindrome of length m extends to m+2 iff the symbol m+1 back
    equals the appended one.  Quadratic worst case per arm, small typically.
    """

    def __init__(self):
        self._seq: list[int] = []
        self._sp: list[int] = []

    def reset(self) -> None:
        self._seq.clear()
        self._sp.clear()

    def append(self, sym: int) -> int:
        seq = self._seq
        k = len(seq)
        sp_new = [1]
        if k >= 1 and seq[k - 1] == sym:
            sp_new.append(2)
        for m in self._sp:
            if m + 1 <= k and seq[k - m - 1] == sym:
                sp_new.append(m + 2)
        seq.append(sym)
        self._sp = sp_new
        return max(sp_new)


def tokenizer_for(
    model: str,
    text: Text,
    *,
    complement: ComplementMap | None = None,
    side: str = "right",
):
    """Fresh arm tokenizer; token streams of two arms are pointwise equal
    exactly when the arm prefixes match under the model."""
    if model == "exact":
        return _ExactTok()
    if model == "theta":
        if side == "left":
            cmap = complement if complement is not None else ComplementMap.identity()
            return _MappedTok(cmap.table)
        return _ExactTok()
    if model == "param":
        return _ParamTok(text.static)
    if model == "op":
        ranks = {v: r for r, v in enumerate(sorted(set(text.symbols)))}
        return _OpTok(ranks)
    if model == "ct":
        return _CtTok()
    if model == "palstruct":
        return _PalstructTok()
    raise ValueError(f"unknown model {model!r}")


def _arm_bounds(t: int, n: int) -> tuple[int, int, int]:
    """(left end, right start, middle bonus) of the arms at center t, 1-based."""
    if t % 2:
        c = (t + 1) // 2
        return c - 1, c + 1, 1
    k = t // 2
    return k, k + 1, 0


def _scan_lce(text: Text, cmap: ComplementMap | None) -> list[int]:
    n = text.n
    index = OutwardLce(text, cmap)
    out = []
    for t in range(1, 2 * n):
        arm = index.arm(t)
        out.append(2 * arm + (t % 2))
    return out


def _scan_tokenized(text: Text, model: str, cmap: ComplementMap | None) -> list[int]:
    sym = text.symbols
    n = text.n
    out = []
    for t in range(1, 2 * n):
        left_end, right_start, bonus = _arm_bounds(t, n)
        rmax = min(left_end, n - right_start + 1)
        left_tok = tokenizer_for(model, text, complement=cmap, side="left")
        right_tok = tokenizer_for(model, text, complement=cmap, side="right")
        arm = 0
        while arm < rmax:
            if left_tok.append(sym[left_end - arm - 1]) != right_tok.append(
                sym[right_start + arm - 1]
            ):
                break
            arm += 1
        out.append(2 * arm + bonus)
    return out


def scan_sym_ct_inward(text: Text) -> SymScanResult:
    """Maximal inward Cartesian-tree sym-palindromes by per-center binary
    search: arm validity is monotone because the relation is
    substring-consistent, and each probe compares windowed parent distances
    of the left arm and the reversed right arm."""
    sym = text.symbols
    n = text.n
    pdf = [0]
    pdf.extend(parent_distance_values(sym))
    pdr = [0]
    pdr.extend(parent_distance_values(sym[::-1]))

    def arms_match(left_end: int, right_start: int, r: int) -> bool:
        ls = left_end - r + 1
        rrs = n - right_start - r + 2  # reversed right arm start in rev(T)
        for k in range(1, r + 1):
            v = pdf[ls + k - 1]
            if not 0 < v < k:
                v = 0
            w = pdr[rrs + k - 1]
            if not 0 < w < k:
                w = 0
            if v != w:
                return False
        return True

    out = []
    for t in range(1, 2 * n):
        left_end, right_start, bonus = _arm_bounds(t, n)
        lo, hi = 0, min(left_end, n - right_start + 1)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if arms_match(left_end, right_start, mid):
                lo = mid
            else:
                hi = mid - 1
        out.append(2 * lo + bonus)
    return SymScanResult(CenterArray(n=n, lengths=tuple(out)), "inward")


def scan_sym(
    text: Text,
    model: str,
    direction: str = "outward",
    *,
    complement: ComplementMap | None = None,
) -> SymScanResult:
    """All maximal sym-palindrome lengths under one matching model."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if direction not in ("outward", "inward"):
        raise ValueError(f"unknown direction {direction!r}")
    if direction == "inward":
        if model != "ct":
            raise ValueError("inward direction is defined for the ct model only")
        return scan_sym_ct_inward(text)
    if model in ("exact", "theta"):
        cmap = complement if model == "theta" else None
        lengths = _scan_lce(text, cmap)
    else:
        lengths = _scan_tokenized(text, model, complement)
    return SymScanResult(CenterArray(n=text.n, lengths=tuple(lengths)), "outward")
