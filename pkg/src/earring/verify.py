"""Seeded randomized and exhaustive property suites over the whole library.

Every random case draws from its own generator seeded by
``(seed, case index, suite tag)``, so results do not depend on the order in
which suites or cases run.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .oscillation import (
    cancel_at,
    cancellable_positions,
    min_oscillation_in_class,
    oscillation_number,
    verify_reduction_monotone,
)
from .projections import (
    check_coherence,
    collapse_above,
    distance,
    erase_above,
    erase_top,
    phi_truncated,
)
from .text import format_word, parse_word
from .word_core import (
    EMPTY,
    ReducedWord,
    Word,
    build_counterexample_word,
    inflate,
    invert,
    is_reduced,
    multiply,
    reduce,
)

__all__ = [
    "SuiteResult",
    "VerifyReport",
    "random_word",
    "random_reduced_word",
    "all_words",
    "terminal_words",
    "shrink",
    "RANDOM_PROPERTIES",
    "run_random_suite",
    "EXHAUSTIVE_SUITES",
    "run_verify",
]

PHI_DEPTH = 6


def random_word(rng: np.random.Generator, max_len: int = 12, max_index: Optional[int] = None) -> Word:
    if max_index is None:
        max_index = int(rng.integers(1, 7))
    n = int(rng.integers(0, max_len + 1))
    idx = rng.integers(1, max_index + 1, size=n)
    sgn = rng.choice((-1, 1), size=n)
    return Word._trusted(tuple((idx * sgn).tolist()))


def _high_word(rng, max_len: int = 4) -> Word:
    # letters only from circles lo..PHI_DEPTH, so products with it agree below lo
    lo = int(rng.integers(1, PHI_DEPTH + 1))
    w = random_word(rng, max_len, PHI_DEPTH - lo + 1)
    return Word._trusted(tuple(c + lo - 1 if c > 0 else c - lo + 1 for c in w.codes))


def random_reduced_word(rng: np.random.Generator, max_len: int = 12, max_index: Optional[int] = None) -> ReducedWord:
    return reduce(random_word(rng, max_len, max_index))


def all_words(max_len: int, indices=(1, 2)) -> Iterator[tuple[int, ...]]:
    """Every word of length 0..max_len over the given indices, shortest first."""
    alphabet = sorted({s * i for i in indices for s in (1, -1)}, key=lambda c: (abs(c), c < 0))
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def terminal_words(codes: tuple[int, ...], memo: Optional[dict] = None) -> frozenset:
    """Irreducible words reachable from ``codes`` by any order of cancellations."""
    if memo is None:
        memo = {}
    hit = memo.get(codes)
    if hit is not None:
        return hit
    pos = cancellable_positions(codes)
    if not pos:
        out = frozenset((codes,))
    else:
        out = frozenset().union(*(terminal_words(cancel_at(codes, i), memo) for i in pos))
    memo[codes] = out
    return out


def _random_order_reduce(codes: tuple[int, ...], rng: np.random.Generator) -> tuple[int, ...]:
    while True:
        pos = cancellable_positions(codes)
        if not pos:
            return codes
        codes = cancel_at(codes, pos[int(rng.integers(len(pos)))])


def shrink(check: Callable[..., bool], args: tuple) -> tuple:
    """Greedy single-letter deletion while ``check`` keeps failing."""
    args = list(args)
    progress = True
    while progress:
        progress = False
        for a, val in enumerate(args):
            if not isinstance(val, Word):
                continue
            for i in range(len(val)):
                cand = Word._trusted(val.codes[:i] + val.codes[i + 1 :])
                if isinstance(val, ReducedWord):
                    if not is_reduced(cand):
                        continue
                    cand = ReducedWord._trusted(cand.codes)
                trial = args[:a] + [cand] + args[a + 1 :]
                try:
                    failed = not check(*trial)
                except Exception:
                    failed = True
                if failed:
                    args = trial
                    progress = True
                    break
            if progress:
                break
    return tuple(args)


# --- randomized properties: (name, generate(rng) -> args, check(*args) -> bool)


def _gen_one(rng):
    return (random_word(rng),)


def _gen_two(rng):
    return random_word(rng), random_word(rng)


def _gen_three(rng):
    return random_word(rng), random_word(rng), random_word(rng)


def _check_idempotent(w):
    r = reduce(w)
    return reduce(Word._trusted(r.codes)) == r and is_reduced(r)


def _check_length(w):
    r = reduce(w)
    return len(r) <= len(w) and (len(r) == len(w)) == is_reduced(w)


def _gen_inflate(rng):
    return random_word(rng), int(rng.integers(0, 20)), int(rng.integers(0, 2**31))


def _check_inflate(w, steps, seed):
    big = inflate(w, steps, seed)
    return len(big) == len(w) + 2 * steps and reduce(big) == reduce(w)


def _check_assoc(u, v, w):
    return multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


def _check_identity(w):
    return multiply(EMPTY, w) == reduce(w) == multiply(w, EMPTY)


def _check_inverse(w):
    return not multiply(w, invert(w)) and not multiply(invert(w), w)


def _check_erase_hom(u, v):
    return all(
        erase_above(multiply(u, v), k) == multiply(erase_above(u, k), erase_above(v, k))
        for k in range(0, 7)
    )


def _check_tower(w):
    return all(
        erase_above(erase_above(w, j), k) == erase_above(w, k) for j in range(0, 8) for k in range(0, j + 1)
    )


def _check_top_functorial(w):
    return all(erase_top(erase_above(w, k + 1), k + 1) == erase_above(w, k) for k in range(0, 7))


def _check_phi_hom(u, v):
    a = phi_truncated(u, PHI_DEPTH)
    b = phi_truncated(v, PHI_DEPTH)
    ab = phi_truncated(multiply(u, v), PHI_DEPTH)
    return all(ab[k] == multiply(a[k], b[k]) for k in range(1, PHI_DEPTH + 1))


def _check_phi_coherent(w):
    return check_coherence(phi_truncated(w, PHI_DEPTH))


def _gen_injective(rng):
    u = random_reduced_word(rng, max_index=PHI_DEPTH)
    # near misses: perturb u by a short word so the pair often agrees deep down
    v = multiply(u, _high_word(rng, max_len=3))
    if rng.random() < 0.5:
        v = random_reduced_word(rng, max_index=PHI_DEPTH)
    return u, v


def _check_injective(u, v):
    u, v = reduce(u), reduce(v)
    if u == v:
        return True
    d = distance(phi_truncated(u, PHI_DEPTH), phi_truncated(v, PHI_DEPTH))
    return not d.equal and -d.log2_distance <= max(u.max_index, v.max_index)


def _gen_ultra(rng):
    a = random_word(rng, max_index=PHI_DEPTH)
    # b and c differ from a only in high circles some of the time, so that
    # distances other than 2^-1 show up
    b = multiply(a, _high_word(rng)) if rng.random() < 0.7 else random_word(rng, max_index=PHI_DEPTH)
    c = multiply(b, _high_word(rng)) if rng.random() < 0.7 else random_word(rng, max_index=PHI_DEPTH)
    return a, b, c


def _check_ultra(a, b, c):
    pa, pb, pc = (phi_truncated(x, PHI_DEPTH) for x in (a, b, c))
    dab, dbc, dac = distance(pa, pb), distance(pb, pc), distance(pa, pc)
    return (
        dac <= max(dab, dbc)
        and distance(pa, pa).equal
        and dab == distance(pb, pa)
        and dab.equal == (pa == pb)
    )


def _check_osc_collapse(w):
    return all(oscillation_number(collapse_above(w, k)) == oscillation_number(w) for k in range(1, 8))


def _check_osc_erase_bound(w):
    # after reduction the retracted class can only have fewer visits
    return all(oscillation_number(erase_above(w, k)) <= oscillation_number(w) for k in range(1, 8))


def _check_single_cancel(w):
    m = oscillation_number(w)
    for i in cancellable_positions(w.codes):
        delta = oscillation_number(Word._trusted(cancel_at(w.codes, i))) - m
        if delta != (-2 if abs(w.codes[i]) == 1 else 0):
            return False
    return True


def _check_class_bound(w, steps, seed):
    return oscillation_number(inflate(w, steps, seed)) >= min_oscillation_in_class(w)


def _gen_witness_inflation(rng):
    n = int(rng.integers(2, 11))
    return build_counterexample_word(n), int(rng.integers(0, 16)), int(rng.integers(0, 2**31))


def _check_monotone(w, steps, seed):
    trace = verify_reduction_monotone(inflate(w, steps, seed), seed)
    return trace.is_monotone() and trace.words[-1] == reduce(w)


def _check_roundtrip(w):
    return parse_word(format_word(w)) == w


RANDOM_PROPERTIES: list[tuple[str, Callable, Callable]] = [
    ("reduce.idempotent", _gen_one, _check_idempotent),
    ("reduce.length_bound", _gen_one, _check_length),
    ("reduce.inflate_invariant", _gen_inflate, _check_inflate),
    ("group.associative", _gen_three, _check_assoc),
    ("group.identity", _gen_one, _check_identity),
    ("group.inverse", _gen_one, _check_inverse),
    ("erase.homomorphism", _gen_two, _check_erase_hom),
    ("erase.tower", _gen_one, _check_tower),
    ("erase.top_functorial", _gen_one, _check_top_functorial),
    ("phi.homomorphism", _gen_two, _check_phi_hom),
    ("phi.coherent", _gen_one, _check_phi_coherent),
    ("phi.injective", _gen_injective, _check_injective),
    ("metric.ultrametric", _gen_ultra, _check_ultra),
    ("oscillation.retraction_invariant", _gen_one, _check_osc_collapse),
    ("oscillation.erasure_bound", _gen_one, _check_osc_erase_bound),
    ("oscillation.single_cancellation", _gen_one, _check_single_cancel),
    ("oscillation.class_lower_bound", _gen_inflate, _check_class_bound),
    ("oscillation.monotone_reduction", _gen_witness_inflation, _check_monotone),
    ("text.roundtrip", _gen_one, _check_roundtrip),
]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    kind: str
    cases: int
    passed: bool
    failure: Optional[str] = None


def _describe(args) -> str:
    return ", ".join(format_word(a) if isinstance(a, Word) else repr(a) for a in args)


def run_random_suite(tag: int, name: str, gen, check, seed: int, cases: int) -> SuiteResult:
    for case in range(cases):
        rng = np.random.default_rng([seed, case, tag])
        args = gen(rng)
        try:
            ok = check(*args)
        except Exception as exc:  # a crash is a failure of the property
            ok = False
            err = f" ({type(exc).__name__}: {exc})"
        else:
            err = ""
        if not ok:
            small = shrink(check, args)
            return SuiteResult(
                name, "random", case + 1, False,
                f"case {case}: minimal failing input [{_describe(small)}]{err}",
            )
    return SuiteResult(name, "random", cases, True)


# --- exhaustive suites over indices {1, 2}


def _ex_normal_form_all_orders(max_len, seed):
    memo: dict = {}
    n = 0
    for codes in all_words(max_len):
        n += 1
        ends = terminal_words(codes, memo)
        if ends != {reduce(Word._trusted(codes)).codes}:
            return n, f"[{format_word(Word._trusted(codes))}] reaches {sorted(ends)}"
    return n, None


def _ex_normal_form_random_order(max_len, seed):
    rng = np.random.default_rng([seed, 1001])
    n = 0
    for codes in all_words(max_len):
        n += 1
        if _random_order_reduce(codes, rng) != reduce(Word._trusted(codes)).codes:
            return n, f"[{format_word(Word._trusted(codes))}]"
    return n, None


def _ex_monotone_all_orders(max_len, seed):
    # every trace is a path of single cancellations inside this closed set,
    # so checking every edge checks every trace
    n = 0
    for codes in all_words(max_len):
        n += 1
        m = oscillation_number(Word._trusted(codes))
        for i in cancellable_positions(codes):
            if oscillation_number(Word._trusted(cancel_at(codes, i))) > m:
                return n, f"[{format_word(Word._trusted(codes))}] at position {i}"
    return n, None


def _ex_class_lower_bound(max_len, seed):
    best: dict = {}
    n = 0
    for codes in all_words(max_len):
        n += 1
        key = reduce(Word._trusted(codes)).codes
        m = oscillation_number(Word._trusted(codes))
        if key not in best or m < best[key][0]:
            best[key] = (m, codes)
    for key, (m, codes) in best.items():
        if m != oscillation_number(Word._trusted(key)):
            return n, f"class of [{format_word(Word._trusted(key))}] has [{format_word(Word._trusted(codes))}] below it"
    return n, None


def _ex_tower(max_len, seed):
    n = 0
    for codes in all_words(max_len):
        n += 1
        w = Word._trusted(codes)
        for j in range(0, 3):
            for k in range(0, j + 1):
                if erase_above(erase_above(w, j), k) != erase_above(w, k):
                    return n, f"[{format_word(w)}] j={j} k={k}"
    return n, None


EXHAUSTIVE_SUITES = [
    ("normal_form.all_orders", _ex_normal_form_all_orders),
    ("normal_form.random_order", _ex_normal_form_random_order),
    ("oscillation.monotone_all_orders", _ex_monotone_all_orders),
    ("oscillation.class_minimum", _ex_class_lower_bound),
    ("erase.tower_exhaustive", _ex_tower),
]


@dataclass
class VerifyReport:
    seed: int
    cases: int
    exhaustive_len: int
    results: list[SuiteResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        """Deterministic text form; elapsed time is left out on purpose."""
        lines = [f"verify seed={self.seed} cases={self.cases} exhaustive_len={self.exhaustive_len}"]
        for r in sorted(self.results, key=lambda r: r.name):
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name} [{r.kind}] {r.cases} cases"
            if r.failure:
                line += f": {r.failure}"
            lines.append(line)
        passed = sum(r.passed for r in self.results)
        lines.append(f"{passed}/{len(self.results)} suites passed")
        return "\n".join(lines) + "\n"


def run_verify(seed: int = 1, cases: int = 1000, exhaustive_len: int = 8) -> VerifyReport:
    if cases < 1:
        raise ValueError(f"cases must be >= 1, got {cases}")
    if exhaustive_len < 0:
        raise ValueError(f"exhaustive_len must be >= 0, got {exhaustive_len}")
    start = time.perf_counter()
    report = VerifyReport(seed, cases, exhaustive_len)
    for tag, (name, gen, check) in enumerate(RANDOM_PROPERTIES):
        report.results.append(run_random_suite(tag, name, gen, check, seed, cases))
    for name, suite in EXHAUSTIVE_SUITES:
        n, failure = suite(exhaustive_len, seed)
        report.results.append(SuiteResult(name, "exhaustive", n, failure is None, failure))
    report.elapsed = time.perf_counter() - start
    return report
