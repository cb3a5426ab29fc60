"""Machine-checkable verifiers for the run-vector results.

Each verifier evaluates one statement literally, on one instance, and
returns a :class:`Verdict`.  Hypotheses are evaluated first; an instance
that violates them yields ``hypotheses_met=False`` and no conclusion is
asserted (the statements are conditionals, so testing anything else
would change their meaning).  A false conclusion on an instance that
satisfies the hypotheses is a hard failure and carries a minimal
witness for diagnosis.

:func:`sweep` runs selected verifiers over their full instance
populations -- every sequence of a length, or every balanced run tuple
of an odd length -- and aggregates per-length records.  Balanced run
tuples are generated by mirroring the free half of a skew-symmetric
sequence; negation preserves the tuple, so each odd length ``n``
yields exactly ``2**((n+1)//2 - 1)`` distinct instances.

Sweep reports serialize as one JSON record per (target, length):
``{target, n, population, hypotheses_met_count, failures}`` where
``population`` counts instances, ``hypotheses_met_count`` counts
individual verdict evaluations whose hypotheses held, and ``failures``
holds up to ten witnesses (``failure_count`` gives the full tally).
The report is a deterministic function of (targets, n_max), whatever
the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .seqcore import (
    BinarySequence,
    RunLengthEncoding,
    RunStructure,
    RunVector,
    all_sequences,
    aperiodic_autocorrelations,
    boundary_rank_interval,
    decode_rle,
    encode_rle,
    f_eval,
    is_balanced,
    is_barker,
    is_skew_symmetric,
    run_structure,
    run_vector,
    run_vector_of,
    u_k,
)

LEMMA_IDS = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "L7n")

SWEEP_TARGETS = ("theorem1", "delta", "prop-skew") + LEMMA_IDS + ("p-odd",)

#: Largest n accepted per sweep target; requests beyond these clamp the
#: sweep and flag the report incomplete.
SWEEP_LIMITS = {
    "theorem1": 18,
    "delta": 18,
    "prop-skew": 19,
    **{lemma: 29 for lemma in LEMMA_IDS},
    "p-odd": 29,
}

BALANCED_ENUM_LIMIT = 29

_MAX_WITNESSES = 10


@dataclass(frozen=True)
class BalancedProfile:
    """Leading-run analysis of a balanced encoding with first run > 1.

    ``p`` is the first run length, ``nu`` the first index whose successor
    run is not a multiple of ``p``, ``q`` that run, ``alpha`` flags
    ``q mod p == 1``, ``s_nu_plus_1`` the boundary after run nu+1, and
    ``k0 = p + s_nu_plus_1 + alpha`` the pivot shift of the pair-bound
    verifier.
    """

    p: int
    nu: int
    q: int
    alpha: int
    s_nu_plus_1: int
    k0: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "nu": self.nu,
            "q": self.q,
            "alpha": self.alpha,
            "s_nu_plus_1": self.s_nu_plus_1,
            "k0": self.k0,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of one verifier on one instance.

    ``conclusion_holds`` is None when the hypotheses were not met.
    """

    lemma_id: str
    instance: str
    hypotheses_met: bool
    conclusion_holds: bool | None
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "instance": self.instance,
            "hypotheses_met": self.hypotheses_met,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class BarkerPredictions:
    """Predicted autocorrelation and run-vector profiles for an odd length.

    Slot ``i`` of each tuple holds the value for shift ``i + 1``.
    """

    n: int
    c: tuple[int, ...]
    r: tuple[int, ...]
    r_tilde: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "C": list(self.c),
            "r": list(self.r),
            "r_tilde": list(self.r_tilde),
        }


@dataclass(frozen=True)
class SweepRecord:
    target: str
    n: int
    population: int
    hypotheses_met_count: int
    failure_count: int
    failures: tuple

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "population": self.population,
            "hypotheses_met_count": self.hypotheses_met_count,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class SweepReport:
    n_max: int
    targets: tuple[str, ...]
    records: tuple[SweepRecord, ...]
    complete: bool

    @property
    def ok(self) -> bool:
        return all(rec.failure_count == 0 for rec in self.records)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "targets": list(self.targets),
            "complete": self.complete,
            "ok": self.ok,
            "records": [rec.to_json() for rec in self.records],
        }


def _sign_pow(e: int) -> int:
    """(-1)**e without leaving the integers."""
    return -1 if e & 1 else 1


def theorem1_residual(seq: BinarySequence) -> tuple[int, ...]:
    """Second-difference residuals of the autocorrelations against the
    run vector; slot ``k-1`` holds ``C_{k+1} - 2*C_k + C_{k-1} + 2*R_k``.
    An all-zero vector certifies the identity on this sequence.
    """
    n = seq.n
    if n < 2:
        return ()
    c = aperiodic_autocorrelations(seq)
    r = run_vector(seq).r
    return tuple(
        c[k + 1] - 2 * c[k] + c[k - 1] + 2 * r[k - 1] for k in range(1, n)
    )


def delta_autocorrelation(seq: BinarySequence, k: int) -> int:
    """Autocorrelation of the difference sequence at shift ``k``.

    The difference sequence takes consecutive differences with zero
    padding on both ends.  Independent oracle for the run vector: half
    of this value equals the reflected run-vector entry at ``k``, and
    the value equals the negated second difference of the plain
    autocorrelations.
    """
    n = seq.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in [1, {n - 1}], got {k}")
    a = (0,) + seq.elems + (0,)  # a[i] = element i, with a_0 = a_{n+1} = 0
    delta = [a[i] - a[i - 1] for i in range(1, n + 2)]
    return sum(delta[i] * delta[i + k] for i in range(n + 1 - k))


def balanced_profile(rle: RunLengthEncoding) -> BalancedProfile:
    """Leading-run profile of a balanced encoding; requires first run > 1.

    Raises ValueError when the encoding is not balanced or the first run
    is 1.  Internally cross-checks the facts the profile is built on
    (last run 1, divisibility of the early boundaries, the value -1 of
    the run vector at the first boundary, and the boundary bound for
    first run >= 3); any violation raises RuntimeError since it would
    mean the calculus itself is broken.
    """
    rs = run_structure(rle)
    if not is_balanced(rs):
        raise ValueError("requires balanced RLE")
    p = rle.runs[0]
    if p == 1:
        raise ValueError("requires p > 1")
    if rle.runs[-1] != 1:
        raise RuntimeError(f"balanced encoding with p > 1 must end in a run of 1: {rle}")
    nu = next((j for j in range(1, rle.gamma) if rle.runs[j] % p != 0), None)
    if nu is None:
        raise RuntimeError(f"no qualifying run index exists for {rle}")
    q = rle.runs[nu]
    alpha = 1 if q % p == 1 else 0
    s_nu_plus_1 = rs.s[nu]
    profile = BalancedProfile(p, nu, q, alpha, s_nu_plus_1, p + s_nu_plus_1 + alpha)

    for j in range(nu):
        if rs.s[j] % p != 0:
            raise RuntimeError(f"early boundary not divisible by first run: {rle}")
    if s_nu_plus_1 % p == 0 or q % p == 0:
        raise RuntimeError(f"pivot boundary unexpectedly divisible: {rle}")
    _, _, f_p = f_eval(rs, p)
    if f_p + 2 * u_k(rs, p) != -1:
        raise RuntimeError(f"run vector at first boundary is not -1: {rle}")
    if p >= 3 and s_nu_plus_1 > rs.gamma + 1:
        raise RuntimeError(f"pivot boundary exceeds gamma + 1: {rle}")
    return profile


def barker_predictions(n: int) -> BarkerPredictions:
    """Predicted C, reflected and untransformed run-vector entries for a
    Barker sequence of odd length ``n`` (empty tuples for ``n = 1``)."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 1, got {n}")
    m = (n + 1) // 2
    even_lag = _sign_pow(m + 1)
    first_r = -m if m % 2 else 1 - m
    last_tilde = m if m % 2 else 1 - m
    c = tuple(0 if k % 2 else even_lag for k in range(1, n))
    r = tuple(first_r if k == 1 else _sign_pow(k + m + 1) for k in range(1, n))
    r_tilde = tuple(
        _sign_pow(k) if k <= n - 2 else last_tilde for k in range(1, n)
    )
    return BarkerPredictions(n=n, c=c, r=r, r_tilde=r_tilde)


# ---------------------------------------------------------------------------
# Lemma evaluators.  Each returns (hypotheses_met, conclusion, witness) and
# is shared between check_lemma and the sweep harness.
# ---------------------------------------------------------------------------


def _eval_l1(rs: RunStructure, rv: RunVector):
    balanced = is_balanced(rs)
    all_odd = all(v & 1 for v in rv.r_tilde)
    if balanced == all_odd:
        return True, True, None
    bad = next((k for k, v in enumerate(rv.r_tilde, start=1) if not v & 1), None)
    return True, False, {"balanced": balanced, "first_even_entry_k": bad}


def _eval_l2(rs: RunStructure, k: int):
    if not (is_balanced(rs) and k not in rs.s_set):
        return False, None, None
    mu = boundary_rank_interval(rs, k)
    fs, ft, f = f_eval(rs, k)
    want = -_sign_pow(k + mu)
    if f == ft == want:
        return True, True, None
    return True, False, {"k": k, "mu": mu, "f": f, "f_t": ft, "expected": want}


def _eval_l3(rs: RunStructure, k: int):
    if not (is_balanced(rs) and k in rs.s_set and k % 2 == 1):
        return False, None, None
    f_at = f_eval(rs, k)[2]
    if k > 1 and f_eval(rs, k - 1)[2] != -f_at:
        return True, False, {"k": k, "part": "before", "f": f_at, "f_before": f_eval(rs, k - 1)[2]}
    if (k + 1) in rs.t_set and f_eval(rs, k + 1)[2] != f_at:
        return True, False, {"k": k, "part": "after", "f": f_at, "f_after": f_eval(rs, k + 1)[2]}
    return True, True, None


def _eval_l4(rs: RunStructure, k: int):
    if not is_balanced(rs):
        return False, None, None
    mu = boundary_rank_interval(rs, k)
    parity_match = (u_k(rs, k) - mu) % 2 == 0
    doubled = k % 2 == 0 and (k // 2) in rs.s_set
    if parity_match == doubled:
        return True, True, None
    return True, False, {"k": k, "mu": mu, "u": u_k(rs, k), "doubled_boundary": doubled}


def _eval_l5(rs: RunStructure, rv: RunVector, k: int):
    if not (is_balanced(rs) and k in rs.s_set):
        return False, None, None
    doubled = k % 2 == 0 and (k // 2) in rs.s_set
    residue_one = rv.tilde(k) % 4 == 1
    if doubled == residue_one:
        return True, True, None
    return True, False, {"k": k, "r_tilde_k": rv.tilde(k), "doubled_boundary": doubled}


def _eval_l6(rle: RunLengthEncoding, rs: RunStructure, mu: int):
    gamma = rle.gamma
    if not (is_balanced(rs) and 1 <= mu < gamma):
        return False, None, None
    if any(rle.runs[j] < 2 for j in range(mu - 1)):
        return False, None, None
    width = rs.s[mu - 1] - mu
    if width >= gamma:
        return True, False, {"mu": mu, "s_mu": rs.s[mu - 1], "width": width}
    for j in range(1, width + 1):
        if rle.runs[gamma - j] > 2:
            return True, False, {"mu": mu, "tail_index": gamma + 1 - j, "run": rle.runs[gamma - j]}
    return True, True, None


def _l7_hypotheses(rle: RunLengthEncoding, rs: RunStructure):
    """Profile of an instance meeting the pair-bound hypotheses, else None."""
    if not is_balanced(rs) or rle.runs[0] < 3:
        return None
    profile = balanced_profile(rle)
    if profile.p % 2 == 0 or profile.s_nu_plus_1 % 2 == 0:
        return None
    if profile.alpha == 1 and (profile.s_nu_plus_1 + 1) not in rs.t_set:
        return None
    if profile.k0 >= rs.n:
        return None  # the pair bound asserts nothing at or beyond n
    return profile


def _eval_l7(rle: RunLengthEncoding, rs: RunStructure, rv: RunVector):
    profile = _l7_hypotheses(rle, rs)
    if profile is None:
        return False, None, None
    k0 = profile.k0
    pair = rv.tilde(k0) + rv.tilde(k0 - 1)
    if abs(pair) >= 2:
        return True, True, None
    return True, False, {"k0": k0, "pair_sum": pair}


def _eval_l7n(rle: RunLengthEncoding, rs: RunStructure, rv: RunVector):
    profile = _l7_hypotheses(rle, rs)
    if profile is None:
        return False, None, None
    k0 = profile.k0
    if abs(rv.tilde(k0) + rv.tilde(k0 - 1)) < 2:
        return False, None, None
    n = rs.n
    c = aperiodic_autocorrelations(decode_rle(rle))
    window = [j for j in (n - k0 - 1, n - k0, n - k0 + 1, n - k0 + 2) if 0 <= j <= n]
    if any(abs(c[j]) >= 3 for j in window):
        return True, True, None
    return True, False, {"k0": k0, "window": window, "values": [c[j] for j in window]}


def check_lemma(
    lemma_id: str,
    rle: RunLengthEncoding,
    k: int | None = None,
    mu: int | None = None,
) -> Verdict:
    """Evaluate one lemma verifier on one encoding.

    ``k`` is required for L2-L5 and must lie in [1, n-1]; ``mu`` is
    required for L6 and must lie in [1, gamma].  Parameters outside
    those ranges raise ValueError; in-range parameters that merely
    violate a lemma's hypotheses yield ``hypotheses_met=False``.
    """
    if lemma_id not in LEMMA_IDS:
        raise ValueError(f"unknown lemma_id {lemma_id!r}; expected one of {LEMMA_IDS}")
    rs = run_structure(rle)
    if lemma_id in ("L2", "L3", "L4", "L5"):
        if k is None:
            raise ValueError(f"{lemma_id} requires parameter k")
        if not 1 <= k <= rs.n - 1:
            raise ValueError(f"parameter out of range: k must be in [1, {rs.n - 1}]")
    if lemma_id == "L6":
        if mu is None:
            raise ValueError("L6 requires parameter mu")
        if not 1 <= mu <= rs.gamma:
            raise ValueError(f"parameter out of range: mu must be in [1, {rs.gamma}]")

    if lemma_id == "L1":
        met, holds, witness = _eval_l1(rs, run_vector_of(rs))
    elif lemma_id == "L2":
        met, holds, witness = _eval_l2(rs, k)
    elif lemma_id == "L3":
        met, holds, witness = _eval_l3(rs, k)
    elif lemma_id == "L4":
        met, holds, witness = _eval_l4(rs, k)
    elif lemma_id == "L5":
        met, holds, witness = _eval_l5(rs, run_vector_of(rs), k)
    elif lemma_id == "L6":
        met, holds, witness = _eval_l6(rle, rs, mu)
    elif lemma_id == "L7":
        met, holds, witness = _eval_l7(rle, rs, run_vector_of(rs))
    else:
        met, holds, witness = _eval_l7n(rle, rs, run_vector_of(rs))
    return Verdict(lemma_id, rle.to_text(), met, holds, witness)


def check_p_odd(rle: RunLengthEncoding) -> Verdict:
    """Verify the four structural facts about odd-length Barker encodings
    whose first run exceeds 1; each part applies only above its length
    threshold (parts ii-iv need n > 5, part i needs n > 3)."""
    n = rle.n
    hypotheses = n % 2 == 1 and rle.runs[0] > 1 and is_barker(decode_rle(rle))
    if not hypotheses:
        return Verdict("p_odd", rle.to_text(), False, None)
    if n <= 3:
        return Verdict("p_odd", rle.to_text(), True, True)
    profile = balanced_profile(rle)
    rs = run_structure(rle)
    if profile.p % 2 == 0:
        return Verdict("p_odd", rle.to_text(), True, False, {"part": "i", "p": profile.p})
    if n > 5:
        if profile.s_nu_plus_1 % 2 == 0:
            return Verdict(
                "p_odd", rle.to_text(), True, False,
                {"part": "ii", "s_nu_plus_1": profile.s_nu_plus_1},
            )
        if profile.alpha == 1 and (profile.s_nu_plus_1 + 1) not in rs.t_set:
            return Verdict(
                "p_odd", rle.to_text(), True, False,
                {"part": "iii", "s_nu_plus_1": profile.s_nu_plus_1},
            )
        bound = profile.p + profile.s_nu_plus_1 + profile.alpha + 1
        if n > bound:
            return Verdict(
                "p_odd", rle.to_text(), True, False,
                {"part": "iv", "n": n, "bound": bound},
            )
    return Verdict("p_odd", rle.to_text(), True, True)


@lru_cache(maxsize=None)
def balanced_run_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    """All balanced run tuples summing to odd ``n``, sorted.

    Enumerates the ``2**m`` skew-symmetric sequences (m free elements
    from the centre rightwards), encodes each, and deduplicates: the
    two sign choices of a sequence share one run tuple, so exactly
    ``2**(m-1)`` tuples remain.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 1, got {n}")
    if n > BALANCED_ENUM_LIMIT:
        raise ValueError(f"balanced enumeration limited to n <= {BALANCED_ENUM_LIMIT}")
    m = (n + 1) // 2
    seen = set()
    for bits in range(1 << m):
        a = [0] * (n + 1)  # 1-based scratch
        for j in range(m):
            a[m + j] = 1 if (bits >> j) & 1 == 0 else -1
        for j in range(1, m):
            a[m - j] = a[m + j] if j % 2 == 0 else -a[m + j]
        seen.add(encode_rle(BinarySequence(tuple(a[1:]))).runs)
    if len(seen) != 1 << (m - 1):
        raise RuntimeError(f"balanced enumeration produced {len(seen)} tuples for n={n}")
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# Sweep harness.
# ---------------------------------------------------------------------------


def _clip(failures: list) -> tuple:
    return tuple(failures[:_MAX_WITNESSES])


def _sweep_theorem1(n: int) -> SweepRecord:
    population = 0
    failures = []
    for seq in all_sequences(n):
        population += 1
        residual = theorem1_residual(seq)
        for k, value in enumerate(residual, start=1):
            if value != 0:
                failures.append({"instance": seq.to_text(), "k": k, "residual": value})
                break
    return SweepRecord("theorem1", n, population, population, len(failures), _clip(failures))


def _sweep_delta(n: int) -> SweepRecord:
    population = 0
    failures = []
    for seq in all_sequences(n):
        population += 1
        c = aperiodic_autocorrelations(seq)
        r = run_vector(seq).r
        for k in range(1, n):
            d = delta_autocorrelation(seq, k)
            if d != -(c[k + 1] - 2 * c[k] + c[k - 1]) or d != 2 * r[k - 1]:
                failures.append(
                    {"instance": seq.to_text(), "k": k, "delta": d, "r_k": r[k - 1]}
                )
                break
    return SweepRecord("delta", n, population, population, len(failures), _clip(failures))


def _sweep_prop_skew(n: int) -> SweepRecord:
    population = 0
    failures = []
    for seq in all_sequences(n):
        population += 1
        skew = is_skew_symmetric(seq)
        balanced = is_balanced(run_structure(encode_rle(seq)))
        if skew != balanced:
            failures.append(
                {"instance": seq.to_text(), "skew_symmetric": skew, "balanced": balanced}
            )
    return SweepRecord("prop-skew", n, population, population, len(failures), _clip(failures))


def _sweep_lemma(target: str, n: int) -> SweepRecord:
    population = 0
    met_count = 0
    failures = []

    def tally(met, holds, witness, runs, param=None):
        nonlocal met_count
        if not met:
            return
        met_count += 1
        if not holds:
            entry = {"instance": "+," + ",".join(map(str, runs))}
            if param is not None:
                entry["param"] = param
            if witness:
                entry.update(witness)
            failures.append(entry)

    for runs in balanced_run_tuples(n):
        population += 1
        rle = RunLengthEncoding(1, runs)
        rs = run_structure(rle)
        if target == "L1":
            tally(*_eval_l1(rs, run_vector_of(rs)), runs)
        elif target == "L2":
            for k in range(1, n):
                if k not in rs.s_set:
                    tally(*_eval_l2(rs, k), runs, k)
        elif target == "L3":
            for k in sorted(rs.s_set):
                if k % 2 == 1:
                    tally(*_eval_l3(rs, k), runs, k)
        elif target == "L4":
            for k in range(1, n):
                tally(*_eval_l4(rs, k), runs, k)
        elif target == "L5":
            rv = run_vector_of(rs)
            for k in sorted(rs.s_set):
                tally(*_eval_l5(rs, rv, k), runs, k)
        elif target == "L6":
            for mu in range(1, rle.gamma):
                tally(*_eval_l6(rle, rs, mu), runs, mu)
        elif target == "L7":
            tally(*_eval_l7(rle, rs, run_vector_of(rs)), runs)
        elif target == "L7n":
            tally(*_eval_l7n(rle, rs, run_vector_of(rs)), runs)
        else:  # p-odd
            verdict = check_p_odd(rle)
            tally(
                verdict.hypotheses_met,
                verdict.conclusion_holds,
                verdict.witness,
                runs,
            )
    return SweepRecord(target, n, population, met_count, len(failures), _clip(failures))


def _sweep_unit(args: tuple[str, int]) -> SweepRecord:
    target, n = args
    if target == "theorem1":
        return _sweep_theorem1(n)
    if target == "delta":
        return _sweep_delta(n)
    if target == "prop-skew":
        return _sweep_prop_skew(n)
    return _sweep_lemma(target, n)


def sweep(n_max: int, targets, workers: int = 1) -> SweepReport:
    """Run the selected verifiers over their full populations up to n_max.

    Unknown targets raise ValueError.  A target whose configured limit
    is below ``n_max`` is clamped and the report is flagged incomplete.
    The record list is sorted by (target, n) and does not depend on the
    worker count.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    wanted = list(targets)
    for target in wanted:
        if target not in SWEEP_TARGETS:
            raise ValueError(
                f"unknown sweep target {target!r}; expected one of {SWEEP_TARGETS}"
            )
    ordered = tuple(t for t in SWEEP_TARGETS if t in wanted)
    units = []
    complete = True
    for target in ordered:
        top = min(n_max, SWEEP_LIMITS[target])
        if top < n_max:
            complete = False
        if target in ("theorem1", "delta"):
            lengths = range(1, top + 1)
        else:
            lengths = range(1, top + 1, 2)
        units.extend((target, n) for n in lengths)

    if workers <= 1 or len(units) <= 1:
        records = [_sweep_unit(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_sweep_unit, units))
    return SweepReport(n_max, ordered, tuple(records), complete)


def verify_prop_skew_balanced(n_max: int, workers: int = 1) -> SweepReport:
    """Exhaustively compare skew-symmetry of every odd-length sequence
    with balancedness of its encoding; counts per length."""
    return sweep(n_max, ("prop-skew",), workers=workers)
