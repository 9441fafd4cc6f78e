"""Nonrepetitive sequence generation and analysis.

A repetition is a contiguous block x_1..x_2l whose second half equals its
first half position-wise; a palindrome is an odd contiguous block of length
>= 3 symmetric about its center.  For contiguous blocks, palindrome-freeness
reduces to "no position has equal neighbors at distance 2": any odd palindrome
of length 2l+1 >= 3 contains the length-3 palindrome around its center, and a
length-3 palindrome is exactly an equal-neighbor position.

Peaks and gaps: the first and last letters are peaks, an interior letter is a
peak iff its two neighbors carry equal symbols, and a gap is the number of
letters strictly between consecutive peaks.

Generators return the lexicographically least witness (backtracking with
symbol order 0 < 1 < 2 < ...), so every test is deterministic.  Search budgets
default to 10^8 expansions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoSuchSequenceError, ResourceLimitError

DEFAULT_NODE_BUDGET = 100_000_000

_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class SymbolSeq:
    """Finite sequence over the alphabet {0, .., sigma-1}."""

    symbols: tuple[int, ...]
    sigma: int

    def __post_init__(self):
        if self.sigma < 1:
            raise ValueError("alphabet size must be positive")
        for x in self.symbols:
            if not 0 <= x < self.sigma:
                raise ValueError(f"symbol {x} outside alphabet of size {self.sigma}")

    def __len__(self) -> int:
        return len(self.symbols)

    @classmethod
    def from_str(cls, text: str, sigma: int | None = None) -> "SymbolSeq":
        """Parse a word over A, B, C, ...; sigma defaults to the largest
        letter used (at least 1)."""
        symbols = []
        for ch in text:
            i = _LETTERS.find(ch.upper())
            if i < 0:
                raise ValueError(f"not a letter symbol: {ch!r}")
            symbols.append(i)
        if sigma is None:
            sigma = max(symbols, default=0) + 1
        return cls(tuple(symbols), sigma)

    def to_str(self) -> str:
        if self.sigma > len(_LETTERS):
            raise ValueError("alphabet too large for letter form")
        return "".join(_LETTERS[x] for x in self.symbols)


def seq_to_json_dict(seq: SymbolSeq) -> dict:
    return {"sigma": seq.sigma, "symbols": list(seq.symbols)}


def seq_from_json_dict(d: dict) -> SymbolSeq:
    if not isinstance(d, dict) or "sigma" not in d or "symbols" not in d:
        raise ValueError("sequence JSON needs 'sigma' and 'symbols'")
    return SymbolSeq(tuple(d["symbols"]), d["sigma"])


@dataclass(frozen=True)
class GapProfile:
    """Peak positions (1-based, ascending) and the gaps between them."""

    peaks: tuple[int, ...]
    gaps: tuple[int, ...]


@dataclass(frozen=True)
class ValleyPattern:
    """Result of matching a valley against the three canonical shapes.

    ``pattern`` is 1, 2 or 3 (the middle gap), ``window`` is the matched
    1-based [start, end] span, and ``letter_map`` sends the canonical letters
    0, 1, 2 (A, B, C) to the symbols actually used in the window.
    """

    pattern: int
    window: tuple[int, int]
    letter_map: tuple[int, int, int]


def _least_square_start(buf: bytes, period: int) -> int | None:
    """Least 0-based start of a square with this period, via one xor pass.

    Aligns the sequence with its shift by ``period``; a square is exactly a
    run of ``period`` equal positions, i.e. a run of zero bytes in the xor.
    """
    m = len(buf) - period
    if m < period:
        return None
    a = int.from_bytes(buf[:m], "big")
    b = int.from_bytes(buf[period:], "big")
    z = (a ^ b).to_bytes(m, "big")
    i = z.find(b"\x00" * period)
    return i if i >= 0 else None


def find_repetition(
    seq: SymbolSeq, max_period: int | None = None
) -> tuple[int, int] | None:
    """Least (start, period), 1-based start, of a contiguous repetition.

    "Least" orders by start first, then period.  Returns None if the sequence
    contains no repetition of period <= max_period (default: half the
    length)."""
    n = len(seq.symbols)
    if max_period is None:
        max_period = n // 2
    if max_period < 1:
        return None
    if seq.sigma <= 256:
        buf = bytes(seq.symbols)
        best = None
        for l in range(1, min(max_period, n // 2) + 1):
            s = _least_square_start(buf, l)
            if s is not None and (best is None or (s + 1, l) < best):
                best = (s + 1, l)
        return best
    # alphabets beyond byte range: direct definition
    xs = seq.symbols
    for s in range(n):
        for l in range(1, min(max_period, (n - s) // 2) + 1):
            if xs[s : s + l] == xs[s + l : s + 2 * l]:
                return (s + 1, l)
    return None


def is_palindrome_free(seq: SymbolSeq) -> bool:
    """True iff no contiguous odd block of length >= 3 is a palindrome,
    i.e. no position has equal neighbors at distance 2."""
    xs = seq.symbols
    return all(xs[i] != xs[i + 2] for i in range(len(xs) - 2))


def _backtrack_least(
    sigma: int,
    length: int,
    *,
    palindrome_free: bool,
    banned_adjacent: frozenset[tuple[int, int]] = frozenset(),
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bytearray | None:
    """Lexicographically least square-free word under the extra constraints,
    or None if the search space is exhausted.

    Incremental check: after placing position p, only squares ending at p can
    be new.  Candidate periods l >= 2 are read off the occurrence list of the
    placed symbol (the halves' last letters must match), then confirmed with
    one probe and a memcmp of the remaining overlap.
    """
    if length == 0:
        return bytearray()
    buf = bytearray(length)
    view = memoryview(buf)
    occ: list[list[int]] = [[] for _ in range(sigma)]
    start_from = [0] * length
    pos = 0
    nodes = 0
    while True:
        placed = False
        for x in range(start_from[pos], sigma):
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"sequence search exceeded {node_budget} expansions"
                )
            if pos >= 1 and buf[pos - 1] == x:
                continue
            if palindrome_free and pos >= 2 and buf[pos - 2] == x:
                continue
            if pos >= 1 and (buf[pos - 1], x) in banned_adjacent:
                continue
            ok = True
            lo = pos - (pos + 1) // 2  # least i with period pos-i still fitting
            for i in reversed(occ[x]):
                if i < lo:
                    break
                l = pos - i
                if l < 2:
                    continue
                # halves are buf[pos-2l+1 .. pos-l] and buf[pos-l+1 .. pos]
                if buf[pos - 2 * l + 1] != buf[i + 1]:
                    continue
                if l == 2 or view[pos - 2 * l + 2 : pos - l] == view[i + 2 : pos]:
                    ok = False
                    break
            if not ok:
                continue
            buf[pos] = x
            occ[x].append(pos)
            start_from[pos] = x + 1
            placed = True
            break
        if placed:
            pos += 1
            if pos == length:
                return buf
            start_from[pos] = 0
        else:
            # exhausted this position: undo the previous placement
            pos -= 1
            if pos < 0:
                return None
            occ[buf[pos]].pop()


def gen_nonrepetitive(
    sigma: int,
    length: int,
    require_palindrome_free: bool = False,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SymbolSeq:
    """Lexicographically least nonrepetitive word of the given length;
    optionally also palindrome-free.

    Three symbols suffice for unbounded nonrepetitive words and four for
    palindrome-free ones; smaller alphabets exhaust quickly and raise
    NoSuchSequenceError."""
    if sigma < 1:
        raise ValueError("alphabet size must be positive")
    if sigma > 256:
        raise ValueError("alphabet size limited to 256")
    buf = _backtrack_least(
        sigma, length, palindrome_free=require_palindrome_free, node_budget=node_budget
    )
    if buf is None:
        kind = "palindrome-free nonrepetitive" if require_palindrome_free else "nonrepetitive"
        raise NoSuchSequenceError(
            f"no {kind} sequence of length {length} over {sigma} symbols"
        )
    return SymbolSeq(tuple(buf), sigma)


def search_constrained(
    length: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> SymbolSeq | None:
    """Least word over A, B, C, D that is nonrepetitive, palindrome-free and
    never puts C and D next to each other; None if no such word exists."""
    if length < 1:
        raise ValueError("length must be positive")
    buf = _backtrack_least(
        4,
        length,
        palindrome_free=True,
        banned_adjacent=frozenset({(2, 3), (3, 2)}),
        node_budget=node_budget,
    )
    return None if buf is None else SymbolSeq(tuple(buf), 4)


def gap_profile(seq: SymbolSeq) -> GapProfile:
    """Peak positions and gaps; needs at least two letters."""
    xs = seq.symbols
    n = len(xs)
    if n < 2:
        raise ValueError("gap profile needs at least two letters")
    peaks = [1]
    peaks += [p for p in range(2, n) if xs[p - 2] == xs[p]]
    peaks.append(n)
    gaps = tuple(b - a - 1 for a, b in zip(peaks, peaks[1:]))
    return GapProfile(tuple(peaks), gaps)


def find_valley(profile: GapProfile) -> int | None:
    """Least i with gaps[i] >= gaps[i+1] <= gaps[i+2], or None."""
    g = profile.gaps
    for i in range(len(g) - 2):
        if g[i] >= g[i + 1] <= g[i + 2]:
            return i
    return None


# canonical valley shapes, one per middle-gap value; letters 0,1,2 = A,B,C
_VALLEY_PATTERNS = {
    1: tuple(SymbolSeq.from_str("CBABCBA", 3).symbols),
    2: tuple(SymbolSeq.from_str("ACBABCACBA", 3).symbols),
    3: tuple(SymbolSeq.from_str("BACBABCABACBA", 3).symbols),
}


def classify_valley_pattern(seq: SymbolSeq, valley: int) -> ValleyPattern:
    """Match the window around a valley against the canonical shape for its
    middle gap.

    Requires a ternary sequence avoiding repetitions of length <= 6 and a
    valley index as returned by find_valley; the window around the two middle
    peaks then always matches pattern g2 up to a permutation of the letters.
    """
    if seq.sigma != 3:
        raise ValueError("valley classification is defined over three letters")
    if find_repetition(seq, max_period=3) is not None:
        raise ValueError("sequence must avoid repetitions of length at most 6")
    profile = gap_profile(seq)
    g = profile.gaps
    if not (0 <= valley <= len(g) - 3 and g[valley] >= g[valley + 1] <= g[valley + 2]):
        raise ValueError(f"index {valley} is not a valley of this sequence")
    g2 = g[valley + 1]
    if g2 not in _VALLEY_PATTERNS:
        raise ValueError(f"middle gap {g2} admits no canonical pattern")
    p, q = profile.peaks[valley + 1], profile.peaks[valley + 2]
    start, end = p - (g2 + 1), q + (g2 + 1)  # 1-based, inclusive
    if start < 1 or end > len(seq):
        raise ValueError("valley window leaves the sequence")
    window = seq.symbols[start - 1 : end]
    canon = _VALLEY_PATTERNS[g2]
    mapping: dict[int, int] = {}
    for c, x in zip(canon, window):
        if mapping.setdefault(c, x) != x:
            raise ValueError("window does not match the canonical pattern")
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("window does not match the canonical pattern")
    return ValleyPattern(g2, (start, end), (mapping[0], mapping[1], mapping[2]))


def enumerate_bounded_nonrep(
    sigma: int = 3,
    length: int = 22,
    max_rep_len: int = 6,
    visitor=None,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Visit every length-``length`` word over ``sigma`` symbols with no
    repetition of (total block) length <= max_rep_len; returns how many.

    The visitor, if given, receives each word as a bytes object.  DFS with
    prefix pruning: a prefix dies as soon as it ends in a short square.
    """
    if length < 0 or length > 24:
        raise ValueError("enumeration length capped at 24")
    if sigma < 1 or max_rep_len < 2:
        raise ValueError("invalid enumeration parameters")
    projected = sigma * max(sigma - 1, 1) ** max(length - 1, 0)
    if projected > node_budget:
        raise ResourceLimitError(
            f"projected {projected} nodes exceeds budget {node_budget}"
        )
    if length == 0:
        if visitor is not None:
            visitor(b"")
        return 1
    max_l = max_rep_len // 2
    buf = bytearray(length)
    count = 0
    stack = [0]  # next symbol to try at position len(stack)-1
    while stack:
        pos = len(stack) - 1
        x = stack[-1]
        if x >= sigma:
            stack.pop()
            continue
        stack[-1] = x + 1
        buf[pos] = x
        ok = True
        for l in range(1, max_l + 1):
            if pos - 2 * l + 1 < 0:
                break
            if all(buf[pos - 2 * l + 1 + j] == buf[pos - l + 1 + j] for j in range(l)):
                ok = False
                break
        if not ok:
            continue
        if pos + 1 == length:
            count += 1
            if visitor is not None:
                visitor(bytes(buf))
        else:
            stack.append(0)
    return count
