"""Exact integer calculus for finite {-1,+1} sequences.

Covers the whole chain from raw sequences to their run vector:
run-length encoding and decoding, aperiodic and periodic
autocorrelations, the forward/reverse boundary prefix sums with the
alternating sign tables built on them, and the derived run-vector pair.

Index conventions, stated once here for the whole package:

* Formulas are 1-based, storage is 0-based.  Slot ``i`` of
  ``BinarySequence.elems`` holds element ``a_{i+1}``.
* Aperiodic autocorrelation vectors: slot ``k`` holds ``C_k`` for
  ``k = 0..n``, with ``C_n = 0`` by convention.  Periodic vectors:
  slot ``k`` holds the k-th cyclic autocorrelation, ``k = 0..n-1``.
* Run-vector tuples are shifted by one: slot ``i`` holds the entry for
  shift ``i+1``.  Use :meth:`RunVector.tilde` / :meth:`RunVector.at`
  for 1-based access.
* ``RunStructure.s`` and ``.t`` store the boundary prefix sums with
  slot ``j`` holding the ``(j+1)``-th one, so ``s[0]`` is the first
  run boundary and ``s[-1] == n``.
* The boundary values ``a_0 = 0`` and ``a_{n+1} = 0`` are conventions
  applied inside operations; they are never stored.

Every operation is a pure function of its inputs; all values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterator


class ParseError(ValueError):
    """Malformed text input; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class BinarySequence:
    """A finite sequence over {-1, +1}."""

    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.elems, tuple):
            object.__setattr__(self, "elems", tuple(self.elems))
        if not self.elems:
            raise ValueError("sequence length must be >= 1")
        for x in self.elems:
            if x != 1 and x != -1:
                raise ValueError(f"sequence elements must be +1 or -1, got {x!r}")

    @property
    def n(self) -> int:
        return len(self.elems)

    @classmethod
    def from_text(cls, text: str) -> BinarySequence:
        """Parse a '+'/'-' string such as ``"+++--+-"``."""
        if not text:
            raise ParseError("empty sequence", 0)
        elems = []
        for pos, ch in enumerate(text):
            if ch == "+":
                elems.append(1)
            elif ch == "-":
                elems.append(-1)
            else:
                raise ParseError(f"expected '+' or '-', got {ch!r}", pos)
        return cls(tuple(elems))

    def to_text(self) -> str:
        return "".join("+" if x == 1 else "-" for x in self.elems)

    def negated(self) -> BinarySequence:
        return BinarySequence(tuple(-x for x in self.elems))

    def reversed(self) -> BinarySequence:
        return BinarySequence(self.elems[::-1])

    def to_json(self) -> dict:
        return {"elems": list(self.elems), "n": self.n}

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RunLengthEncoding:
    """Starting sign plus the lengths of the maximal constant blocks."""

    start_sign: int
    runs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.runs, tuple):
            object.__setattr__(self, "runs", tuple(self.runs))
        if self.start_sign != 1 and self.start_sign != -1:
            raise ValueError(f"start_sign must be +1 or -1, got {self.start_sign!r}")
        if not self.runs:
            raise ValueError("an encoding needs at least one run")
        for r in self.runs:
            if not isinstance(r, int) or r < 1:
                raise ValueError(f"run lengths must be positive integers, got {r!r}")

    @property
    def gamma(self) -> int:
        return len(self.runs)

    @property
    def n(self) -> int:
        return sum(self.runs)

    @classmethod
    def from_text(cls, text: str) -> RunLengthEncoding:
        """Parse ``"<sign>,r1,r2,..."`` such as ``"+,3,2,1,1"``."""
        if not text:
            raise ParseError("empty run-length encoding", 0)
        if text[0] not in "+-":
            raise ParseError(f"expected leading sign '+' or '-', got {text[0]!r}", 0)
        sign = 1 if text[0] == "+" else -1
        if len(text) < 2 or text[1] != ",":
            raise ParseError("expected ',' after the sign", 1)
        runs = []
        pos = 2
        for token in text[2:].split(","):
            if not token.isdigit() or int(token) < 1:
                raise ParseError(f"expected a positive run length, got {token!r}", pos)
            runs.append(int(token))
            pos += len(token) + 1
        return cls(sign, tuple(runs))

    def to_text(self) -> str:
        sign = "+" if self.start_sign == 1 else "-"
        return ",".join([sign] + [str(r) for r in self.runs])

    def to_json(self) -> dict:
        return {
            "start_sign": self.start_sign,
            "runs": list(self.runs),
            "gamma": self.gamma,
            "n": self.n,
        }

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RunStructure:
    """Boundary prefix sums of an encoding plus the sign tables on them.

    ``s`` holds the forward prefix sums of the run lengths, ``t`` the
    prefix sums taken from the other end; both end at ``n``.  ``s_set``/``t_set`` are the
    first ``gamma - 1`` of each (the interior boundary positions).
    ``f_s``/``f_t`` map an interior boundary position to the alternating
    sign of its rank: position of rank ``j`` maps to ``(-1)**j``.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]
    s_set: frozenset[int]
    t_set: frozenset[int]
    gamma: int
    n: int
    f_s: dict = field(repr=False, compare=False)
    f_t: dict = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "s": list(self.s),
            "t": list(self.t),
            "S": sorted(self.s_set),
            "T": sorted(self.t_set),
            "gamma": self.gamma,
            "n": self.n,
        }


@dataclass(frozen=True)
class RunVector:
    """The run-vector pair; slot ``i`` of each tuple holds entry ``i+1``."""

    r_tilde: tuple[int, ...]
    r: tuple[int, ...]

    def tilde(self, k: int) -> int:
        """Entry k of the untransformed vector, 1 <= k <= n-1."""
        if not 1 <= k <= len(self.r_tilde):
            raise ValueError(f"k must be in [1, {len(self.r_tilde)}], got {k}")
        return self.r_tilde[k - 1]

    def at(self, k: int) -> int:
        """Entry k of the reflected vector, 1 <= k <= n-1."""
        if not 1 <= k <= len(self.r):
            raise ValueError(f"k must be in [1, {len(self.r)}], got {k}")
        return self.r[k - 1]

    def to_json(self) -> dict:
        return {"r_tilde": list(self.r_tilde), "r": list(self.r)}


@dataclass(frozen=True)
class AutocorrelationProfile:
    """Aperiodic vector ``C_0..C_n`` and periodic vector of length n."""

    c: tuple[int, ...]
    c_periodic: tuple[int, ...]

    def to_json(self) -> dict:
        return {"C": list(self.c), "C_periodic": list(self.c_periodic)}


def encode_rle(seq: BinarySequence) -> RunLengthEncoding:
    """Run-length encode: maximal constant blocks, first element's sign kept."""
    elems = seq.elems
    runs = []
    current = elems[0]
    count = 1
    for x in elems[1:]:
        if x == current:
            count += 1
        else:
            runs.append(count)
            current = x
            count = 1
    runs.append(count)
    return RunLengthEncoding(elems[0], tuple(runs))


def decode_rle(rle: RunLengthEncoding) -> BinarySequence:
    """Expand an encoding back into the unique sequence it describes."""
    elems = []
    sign = rle.start_sign
    for r in rle.runs:
        elems.extend([sign] * r)
        sign = -sign
    return BinarySequence(tuple(elems))


def aperiodic_autocorrelations(seq: BinarySequence) -> tuple[int, ...]:
    """All shifted inner products ``C_0..C_n``; the last slot is 0 by convention."""
    a = seq.elems
    n = len(a)
    out = [n]
    for k in range(1, n):
        c = 0
        for i in range(n - k):
            c += a[i] * a[i + k]
        out.append(c)
    out.append(0)
    return tuple(out)


def periodic_autocorrelations(seq: BinarySequence) -> tuple[int, ...]:
    """Cyclic autocorrelations for shifts ``0..n-1`` (indices wrap modulo n)."""
    a = seq.elems
    n = len(a)
    out = []
    for k in range(n):
        c = 0
        for i in range(n):
            c += a[i] * a[(i + k) % n]
        out.append(c)
    return tuple(out)


def autocorrelation_profile(seq: BinarySequence) -> AutocorrelationProfile:
    return AutocorrelationProfile(
        aperiodic_autocorrelations(seq), periodic_autocorrelations(seq)
    )


def run_structure(rle: RunLengthEncoding) -> RunStructure:
    """Boundary prefix sums, interior boundary sets, and their sign tables."""
    s = tuple(accumulate(rle.runs))
    t = tuple(accumulate(reversed(rle.runs)))
    gamma = rle.gamma
    f_s: dict[int, int] = {}
    f_t: dict[int, int] = {}
    sign = -1
    for j in range(gamma - 1):
        f_s[s[j]] = sign
        f_t[t[j]] = sign
        sign = -sign
    return RunStructure(
        s=s,
        t=t,
        s_set=frozenset(s[: gamma - 1]),
        t_set=frozenset(t[: gamma - 1]),
        gamma=gamma,
        n=rle.n,
        f_s=f_s,
        f_t=f_t,
    )


def f_eval(rs: RunStructure, k: int) -> tuple[int, int, int]:
    """Sign-table values at any integer ``k``: the forward sign, the
    reverse sign, and their sum.  Zero outside the boundary sets, so the
    function is total over all of Z."""
    fs = rs.f_s.get(k, 0)
    ft = rs.f_t.get(k, 0)
    return fs, ft, fs + ft


def u_k(rs: RunStructure, k: int) -> int:
    """Alternating sum of reverse-boundary signs sampled at ``k`` minus each
    forward boundary.  Zero whenever ``k`` does not exceed the first boundary.

    Requires ``1 <= k <= n - 1``.
    """
    if not 1 <= k <= rs.n - 1:
        raise ValueError(f"k must be in [1, {rs.n - 1}], got {k}")
    total = 0
    ft = rs.f_t
    for j in range(1, rs.gamma):
        d = k - rs.s[j - 1]
        if d <= 0:
            break  # boundaries increase and the reverse table vanishes at <= 0
        v = ft.get(d, 0)
        total += -v if j & 1 else v
    return total


def run_vector_of(rs: RunStructure) -> RunVector:
    """Run vector of the sequence behind a run structure.

    Entry k of the untransformed vector is the sign-table sum at k plus
    twice the alternating boundary sum; the reflected vector re-reads it
    backwards with the parity sign of the number of runs.  This is the
    same computation as ``f_eval(rs, k)[2] + 2 * u_k(rs, k)``, unrolled
    over flat lookup tables because it sits on the hot path of the
    exhaustive sweeps.
    """
    n, gamma = rs.n, rs.gamma
    if n < 2:
        return RunVector((), ())
    fs = [0] * n
    ft = [0] * n
    for pos, sign in rs.f_s.items():
        fs[pos] = sign
    for pos, sign in rs.f_t.items():
        ft[pos] = sign
    s = rs.s
    r_tilde = []
    for k in range(1, n):
        u = 0
        for j in range(1, gamma):
            d = k - s[j - 1]
            if d <= 0:
                break
            v = ft[d]
            u += -v if j & 1 else v
        r_tilde.append(fs[k] + ft[k] + 2 * u)
    sign_gamma = -1 if gamma & 1 else 1
    r = tuple(sign_gamma * r_tilde[n - 1 - k] for k in range(1, n))
    return RunVector(tuple(r_tilde), r)


def run_vector(seq: BinarySequence) -> RunVector:
    """Run vector of a sequence; empty pair for ``n = 1``."""
    return run_vector_of(run_structure(encode_rle(seq)))


def is_skew_symmetric(seq: BinarySequence) -> bool:
    """True iff the length is odd and every pair equidistant from the centre
    agrees up to the alternating sign; length 1 is vacuously true."""
    n = seq.n
    if n % 2 == 0:
        return False
    m = (n + 1) // 2
    a = seq.elems
    for j in range(1, m):
        mirror = a[m + j - 1] if j % 2 == 0 else -a[m + j - 1]
        if a[m - j - 1] != mirror:
            return False
    return True


def is_balanced(rs: RunStructure) -> bool:
    """True iff the interior boundary sets partition ``{1, ..., n-1}``."""
    union = rs.s_set | rs.t_set
    return not (rs.s_set & rs.t_set) and union == frozenset(range(1, rs.n))


def is_barker(seq: BinarySequence) -> bool:
    """True iff every off-peak aperiodic autocorrelation is at most 1 in
    magnitude; length 1 is vacuously true."""
    a = seq.elems
    n = seq.n
    for k in range(1, n):
        c = 0
        for i in range(n - k):
            c += a[i] * a[i + k]
        if c > 1 or c < -1:
            return False
    return True


def boundary_rank_interval(rs: RunStructure, k: int) -> int:
    """The unique index ``mu`` with ``s_{mu-1} < k <= s_mu`` for ``1 <= k <= n``."""
    if not 1 <= k <= rs.n:
        raise ValueError(f"k must be in [1, {rs.n}], got {k}")
    return bisect_left(rs.s, k) + 1


def all_sequences(n: int) -> Iterator[BinarySequence]:
    """Every length-n sequence, lexicographically with '+' before '-'."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = n - 1
    for bits in range(1 << n):
        yield BinarySequence(
            tuple(-1 if (bits >> (top - i)) & 1 else 1 for i in range(n))
        )
