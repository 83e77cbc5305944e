"""Generalized Manacher scan for maximal reversal-based palindromes.

One left-to-right pass per center parity.  At each center the scan either
copies the mirrored answer from inside the rightmost discovered palindrome,
or rebases to the longest palindrome ending at its right edge and extends
outward, asking a per-model checker whether each one-symbol-both-sides
extension preserves the palindrome property.  Every checker answers in
amortized constant time against precomputed encodings of the text and its
reversal, which keeps the whole scan linear in practice; ``Counters``
records the work so linearity is measurable.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .core import CenterArray, Text
from .encodings import (
    ComplementMap,
    exact_maximal_lengths,
    parent_distance_values,
    prev_encoding,
)
from .lce import LceIndex

MODELS = ("exact", "theta", "param", "op", "ct", "palstruct")


@dataclass
class Counters:
    """Work tally of one scan; monotone non-decreasing while scanning."""

    copies: int = 0
    extension_attempts: int = 0
    extension_successes: int = 0
    zero_pushes: int = 0
    zero_pops: int = 0
    rebase_tokens: int = 0

    @property
    def work(self) -> int:
        return (
            self.copies
            + self.extension_attempts
            + self.zero_pushes
            + self.zero_pops
            + self.rebase_tokens
        )


@dataclass
class CtStats:
    """Amortization witnesses for the Cartesian-tree checker."""

    u_total: int = 0  # committed zero->nonzero updates on the forward side
    base_zeros: int = 0  # zeros materialized at fresh bases (chain starts)
    rebase_events: int = 0
    reset_events: int = 0
    m_violations: int = 0  # rebase starts not right of the window minimum
    z_violations: int = 0  # rebased zero count exceeding the previous one


class _ExactChecker:
    __slots__ = ("sym",)

    def __init__(self, sym1):
        self.sym = sym1

    def base_valid(self, c: int) -> bool:
        return True

    def reset(self, i: int, j: int) -> None:
        pass

    rebase = reset

    def try_extend(self, i: int, j: int) -> bool:
        sym = self.sym
        return sym[i - 1] == sym[j + 1]


class _ThetaChecker:
    __slots__ = ("sym", "table")

    def __init__(self, sym1, table: dict[int, int]):
        self.sym = sym1
        self.table = table

    def base_valid(self, c: int) -> bool:
        s = self.sym[c]
        return self.table.get(s, s) == s

    def reset(self, i: int, j: int) -> None:
        pass

    rebase = reset

    def try_extend(self, i: int, j: int) -> bool:
        sym = self.sym
        s = sym[j + 1]
        return sym[i - 1] == self.table.get(s, s)


class _ParamChecker:
    """Extension holds iff the last elements of the extended window's PE and
    of its reversal's PE agree; the first elements are always 0 and the
    interior agreement follows from the last-element equality."""

    __slots__ = ("pef", "per", "n")

    def __init__(self, pef1, per1, n: int):
        self.pef = pef1
        self.per = per1
        self.n = n

    def base_valid(self, c: int) -> bool:
        return True

    def reset(self, i: int, j: int) -> None:
        pass

    rebase = reset

    def try_extend(self, i: int, j: int) -> bool:
        ext_len = j - i + 3
        a = self.pef[j + 1]
        if a >= ext_len:
            a = 0
        b = self.per[self.n - i + 2]
        if b >= ext_len:
            b = 0
        return a == b


class CtChecker:
    """Cartesian-tree extension checker.

    ``fwd_zeros`` holds the text positions whose windowed parent distance is
    0 (prefix minima, values strictly decreasing left to right), stored in
    descending position order; ``bwd_zeros`` is the same for the reversed
    window, ascending.  For a window that is a ct rev-palindrome both lists
    cover the same window indices.  An extension attempt verifies the killed
    zeros of either side against the other side's windowed parent distance
    and commits the pops only if every check passes, so the state always
    describes the last verified window and rebasing can truncate it.
    """

    __slots__ = ("sym", "pdf", "pdr", "n", "fwd_zeros", "bwd_zeros",
                 "win_i", "win_j", "counters", "stats")

    def __init__(self, sym1, pdf1, pdr1, n: int, counters: Counters,
                 stats: CtStats | None = None):
        self.sym = sym1
        self.pdf = pdf1
        self.pdr = pdr1
        self.n = n
        self.fwd_zeros: list[int] = []
        self.bwd_zeros: list[int] = []
        self.win_i, self.win_j = 1, 0
        self.counters = counters
        self.stats = stats

    def base_valid(self, c: int) -> bool:
        return True

    def _note_start(self, i: int, rebase: bool) -> None:
        st = self.stats
        if st is None:
            return
        if rebase:
            st.rebase_events += 1
        else:
            st.reset_events += 1
        # window minimum of the previous window = rightmost forward zero
        if self.fwd_zeros and i <= self.fwd_zeros[0]:
            st.m_violations += 1

    def reset(self, i: int, j: int) -> None:
        self._note_start(i, rebase=False)
        if j >= i:
            self.fwd_zeros = [i]
            self.bwd_zeros = [i]
            self.counters.zero_pushes += 2
            if self.stats is not None:
                self.stats.base_zeros += 1
        else:
            self.fwd_zeros = []
            self.bwd_zeros = []
        self.win_i, self.win_j = i, j

    def rebase(self, i: int, j: int) -> None:
        if j != self.win_j or i < self.win_i:
            raise RuntimeError(
                f"ct rebase [{i}..{j}] does not share the right end of the "
                f"tracked window [{self.win_i}..{self.win_j}]"
            )
        self._note_start(i, rebase=True)
        bwd = self.bwd_zeros
        before = len(bwd)
        cut = bisect_left(bwd, i)
        if cut:
            bwd = bwd[cut:]
            self.bwd_zeros = bwd
        mirror = i + j
        self.fwd_zeros = [mirror - q for q in bwd]
        self.counters.rebase_tokens += 2 * len(bwd)
        if self.stats is not None and len(bwd) > before:
            self.stats.z_violations += 1
        self.win_i, self.win_j = i, j

    def try_extend(self, i: int, j: int) -> bool:
        sym, pdf, pdr, n = self.sym, self.pdf, self.pdr, self.n
        x = sym[i - 1]
        y = sym[j + 1]
        fwd, bwd = self.fwd_zeros, self.bwd_zeros
        ext_len = j - i + 3
        # forward zeros killed by the new left symbol: their new value is the
        # distance to the new left end; the reversed side must agree there.
        kf, mf = 0, len(fwd)
        while kf < mf:
            p = fwd[mf - 1 - kf]
            if sym[p] < x:
                break
            k0 = p - i + 1
            if pdr[n - j + k0] != k0:
                return False
            kf += 1
        kb, mb = 0, len(bwd)
        while kb < mb:
            q = bwd[mb - 1 - kb]
            if sym[q] < y:
                break
            k0 = j - q + 1
            if pdf[i - 1 + k0] != k0:
                return False
            kb += 1
        a = pdf[j + 1]
        if a >= ext_len:
            a = 0
        b = pdr[n - i + 2]
        if b >= ext_len:
            b = 0
        if a != b:
            return False
        if kf:
            del fwd[mf - kf :]
        fwd.append(i - 1)
        if kb:
            del bwd[mb - kb :]
        bwd.append(j + 1)
        counters = self.counters
        counters.zero_pops += kf + kb
        counters.zero_pushes += 2
        if self.stats is not None:
            self.stats.u_total += kf
        self.win_i, self.win_j = i - 1, j + 1
        return True


def ct_rebase(state: CtChecker, i: int, j: int) -> CtChecker:
    """Rebase the checker state onto the palindrome [i..j]; j must equal the
    tracked window's right end (central clipping guarantees the window is a
    palindrome there)."""
    state.rebase(i, j)
    return state


@dataclass
class PalstructLists:
    """Ascending per-position lists of exact maximal-palindrome lengths.

    ``end_seq`` concatenates, for each text position, the lengths of maximal
    palindromes ending there followed by a position-unique delimiter token;
    ``start_seq`` is the analogue for starting positions.  Lengths occupy
    token values 1..n, end delimiters n+p, start delimiters 2n+p.  ``index``
    answers LCE queries over ``start_seq + end_seq``.
    """

    n: int
    start_seq: list[int]
    end_seq: list[int]
    start_off: list[int]  # position -> 1-based offset of its sublist
    end_off: list[int]
    combined: list[int]
    index: LceIndex

    def delim_end(self, p: int) -> int:
        return self.n + p

    def delim_start(self, p: int) -> int:
        return 2 * self.n + p


def build_palstruct_lists(text: Text) -> PalstructLists:
    n = text.n
    mpal = exact_maximal_lengths(text.symbols)
    starts: list[list[int]] = [[] for _ in range(n + 1)]
    ends: list[list[int]] = [[] for _ in range(n + 1)]
    for t in range(1, 2 * n):  # ascending t gives ascending lengths per start
        length = mpal[t - 1]
        if length:
            starts[(t + 2 - length) // 2].append(length)
    for t in range(2 * n - 1, 0, -1):  # descending t: ascending per end
        length = mpal[t - 1]
        if length:
            ends[(t + length) // 2].append(length)
    start_seq: list[int] = []
    start_off = [0] * (n + 1)
    for p in range(1, n + 1):
        start_off[p] = len(start_seq) + 1
        start_seq.extend(starts[p])
        start_seq.append(2 * n + p)
    end_seq: list[int] = []
    end_off = [0] * (n + 1)
    shift = len(start_seq)
    for p in range(1, n + 1):
        end_off[p] = shift + len(end_seq) + 1
        end_seq.extend(ends[p])
        end_seq.append(n + p)
    combined = start_seq + end_seq
    return PalstructLists(
        n=n,
        start_seq=start_seq,
        end_seq=end_seq,
        start_off=start_off,
        end_off=end_off,
        combined=combined,
        index=LceIndex(combined),
    )


class _PalstructChecker:
    """Extension holds iff (1) the maximal palindromes starting at i and the
    ones ending at j agree up to length j-i, checked with one LCE query over
    the concatenated length lists, and (2) length-two prefix/suffix
    palindromes of the extended window are equally present or absent."""

    __slots__ = ("sym", "lists", "lce", "combined", "start_off", "end_off")

    def __init__(self, sym1, lists: PalstructLists):
        self.sym = sym1
        self.lists = lists
        self.lce = lists.index.lce
        self.combined = lists.combined
        self.start_off = lists.start_off
        self.end_off = lists.end_off

    def base_valid(self, c: int) -> bool:
        return True

    def reset(self, i: int, j: int) -> None:
        pass

    rebase = reset

    def try_extend(self, i: int, j: int) -> bool:
        sym = self.sym
        if (sym[i - 1] == sym[i]) != (sym[j] == sym[j + 1]):
            return False
        threshold = j - i
        if threshold <= 0:
            return True
        so = self.start_off[i]
        eo = self.end_off[j]
        ell = self.lce(so, eo)
        comb = self.combined
        # delimiters are > n >= threshold, so one comparison covers both the
        # "list exhausted" and the "first difference past the threshold" case
        return comb[so - 1 + ell] > threshold and comb[eo - 1 + ell] > threshold


def check_theta(text: Text, cmap: ComplementMap, i: int, j: int) -> bool:
    """Can the theta rev-palindrome T[i..j] extend to T[i-1..j+1]?"""
    sym = text.symbols
    return sym[i - 2] == cmap(sym[j])


def check_param(text: Text, i: int, j: int) -> bool:
    """Can the parameterized rev-palindrome T[i..j] extend to T[i-1..j+1]?"""
    checker = _ParamChecker(
        _pad(prev_encoding(text).values),
        _pad(prev_encoding(text.reversed()).values),
        text.n,
    )
    return checker.try_extend(i, j)


def check_palstruct(lists: PalstructLists, text: Text, i: int, j: int) -> bool:
    """Can the palindromic-structure rev-palindrome T[i..j] extend?"""
    return _PalstructChecker(_pad(text.symbols), lists).try_extend(i, j)


def _pad(values) -> list[int]:
    """Shift a sequence to 1-based indexing with a dummy slot 0."""
    padded = [0]
    padded.extend(values)
    return padded


def _checker_factory(text, model, complement, counters, ct_stats):
    sym1 = _pad(text.symbols)
    if model in ("exact", "op"):
        return lambda: _ExactChecker(sym1)
    if model == "theta":
        cmap = complement if complement is not None else ComplementMap.identity()
        return lambda: _ThetaChecker(sym1, cmap.table)
    if model == "param":
        pef = _pad(prev_encoding(text).values)
        per = _pad(prev_encoding(text.reversed()).values)
        n = text.n
        return lambda: _ParamChecker(pef, per, n)
    if model == "ct":
        pdf = _pad(parent_distance_values(text.symbols))
        pdr = _pad(parent_distance_values(text.symbols[::-1]))
        n = text.n
        return lambda: CtChecker(sym1, pdf, pdr, n, counters, ct_stats)
    if model == "palstruct":
        lists = build_palstruct_lists(text)
        return lambda: _PalstructChecker(sym1, lists)
    raise ValueError(f"unknown model {model!r}")


def _scan_pass(n, odd, checker, lengths, counters):
    active_b = active_e = active_t = 0
    for t in range(1 if odd else 2, 2 * n, 2):
        if t + 1 <= 2 * active_e:  # center lies inside the active palindrome
            t_mirror = 2 * active_t - t
            mirror_len = lengths[t_mirror - 1]
            if mirror_len > 0:
                start_m = (t_mirror + 2 - mirror_len) // 2
            else:
                start_m = (t_mirror + 1) // 2 + 1
            if start_m > active_b:
                lengths[t - 1] = mirror_len
                counters.copies += 1
                continue
            # mirrored palindrome reaches the border: rebase to the palindrome
            # ending at the active right edge and extend from there
            i = t + 1 - active_e
            j = active_e
            checker.rebase(i, j)
        else:
            if odd:
                i = j = (t + 1) // 2
                if not checker.base_valid(i):
                    continue  # empty maximal palindrome at this center
            else:
                j = t // 2
                i = j + 1
            checker.reset(i, j)
        while i > 1 and j < n:
            counters.extension_attempts += 1
            if not checker.try_extend(i, j):
                break
            counters.extension_successes += 1
            i -= 1
            j += 1
        length = j - i + 1
        lengths[t - 1] = length
        if length > 0 and j > active_e:
            active_b, active_e, active_t = i, j, t


def scan_rev(
    text: Text,
    model: str,
    *,
    complement: ComplementMap | None = None,
    counters: Counters | None = None,
    ct_stats: CtStats | None = None,
) -> CenterArray:
    """All maximal rev-palindrome lengths under one matching model.

    Odd and even centers run as two independent passes over shared
    precomputed encodings.  The order-preserving model is routed to the exact
    checker: an order-preserving rev-palindrome forces its mirrored symbol
    pairs to compare both ways, which is exact equality.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if counters is None:
        counters = Counters()
    n = text.n
    lengths = [0] * max(0, 2 * n - 1)
    if n:
        make_checker = _checker_factory(text, model, complement, counters, ct_stats)
        _scan_pass(n, True, make_checker(), lengths, counters)
        _scan_pass(n, False, make_checker(), lengths, counters)
    return CenterArray(n=n, lengths=tuple(lengths))


def scan_rev_op(text: Text, *, counters: Counters | None = None) -> CenterArray:
    """Maximal order-preserving rev-palindromes (identical to the exact scan)."""
    return scan_rev(text, "exact", counters=counters)
