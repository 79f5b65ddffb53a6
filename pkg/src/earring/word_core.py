"""Finite words in the free group on countably many generators.

A letter is stored as a nonzero integer code: ``k`` stands for one
counterclockwise traversal of circle ``k`` and ``-k`` for the clockwise one.
Words are immutable tuples of such codes; the empty word is the constant
loop at the basepoint.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Union

import numpy as np

__all__ = [
    "Letter",
    "Word",
    "ReducedWord",
    "EMPTY",
    "reduce",
    "is_reduced",
    "multiply",
    "invert",
    "equal_in_group",
    "build_counterexample_word",
    "inflate",
]


class Letter(NamedTuple):
    """One traversal of one circle."""

    index: int
    sign: int

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        if code == 0:
            raise ValueError("letter code must be nonzero")
        return cls(abs(code), 1 if code > 0 else -1)

    @property
    def code(self) -> int:
        return self.index * self.sign

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


LetterLike = Union[int, Letter]


def _to_code(x: LetterLike) -> int:
    if isinstance(x, Letter):
        if x.index < 1 or isinstance(x.index, bool):
            raise ValueError(f"letter index must be >= 1, got {x.index}")
        if x.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {x.sign}")
        return x.index * x.sign
    if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
        raise TypeError(f"letters are nonzero ints or Letter, got {x!r}")
    if x == 0:
        raise ValueError("letter code must be nonzero")
    return int(x)


class Word:
    """An unreduced finite word, i.e. a based edge-loop.

    Two words compare equal when they have the same letters, regardless of
    whether either is a :class:`ReducedWord`.  Equality in the group is
    :func:`equal_in_group`.
    """

    __slots__ = ("codes", "_hash")

    codes: tuple[int, ...]

    def __init__(self, letters: Iterable[LetterLike] = ()):
        object.__setattr__(self, "codes", tuple(_to_code(x) for x in letters))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, codes: tuple[int, ...]):
        # skips per-letter validation; callers guarantee nonzero ints
        self = object.__new__(cls)
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    @property
    def max_index(self) -> int:
        """Largest circle index used, 0 for the empty word."""
        return max(map(abs, self.codes), default=0)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __getitem__(self, i):
        return self.codes[i]

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.codes == other.codes
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.codes)
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Word") -> "Word":
        """Concatenation of loops (no reduction)."""
        if not isinstance(other, Word):
            return NotImplemented
        return Word._trusted(self.codes + other.codes)

    def __mul__(self, other: "Word") -> "ReducedWord":
        if not isinstance(other, Word):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return Word._trusted(invert(self).codes * -n)
        return Word._trusted(self.codes * n)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.codes)})"


class ReducedWord(Word):
    """A word with no adjacent cancelling pair: the free-group normal form."""

    __slots__ = ()

    def __init__(self, letters: Iterable[LetterLike] = ()):
        super().__init__(letters)
        if not is_reduced(self):
            raise ValueError(f"word is not reduced: {list(self.codes)}")


def is_reduced(w: Word) -> bool:
    codes = w.codes
    return all(a != -b for a, b in zip(codes, codes[1:]))


EMPTY = ReducedWord()


def reduce(w: Word) -> ReducedWord:
    """Free reduction in one left-to-right pass over a stack of survivors."""
    if isinstance(w, ReducedWord):
        return w
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for c in w.codes:
        if stack and stack[-1] == -c:
            pop()
        else:
            push(c)
    return ReducedWord._trusted(tuple(stack))


def multiply(u: Word, v: Word) -> ReducedWord:
    """Group product: concatenate, then reduce."""
    a = reduce(u).codes
    b = reduce(v).codes
    # only the seam between two reduced words can cancel
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return ReducedWord._trusted(a[: len(a) - i] + b[i:])


def invert(w: Word) -> Word:
    """Reverse the letters and flip every orientation."""
    inv = tuple(-c for c in reversed(w.codes))
    # the inverse of a reduced word is reduced
    return type(w)._trusted(inv) if isinstance(w, ReducedWord) else Word._trusted(inv)


def equal_in_group(u: Word, v: Word) -> bool:
    return reduce(u).codes == reduce(v).codes


def build_counterexample_word(n: int) -> ReducedWord:
    """The witness loop ``(y1^-1 yn^-1 y1 yn)^n`` for ``n >= 2``."""
    if n < 2:
        raise ValueError(f"witness words are defined for n >= 2, got {n}")
    return ReducedWord._trusted((-1, -n, 1, n) * n)


def inflate(w: Word, steps: int, seed: int) -> Word:
    """Insert ``steps`` cancelling pairs into ``w`` at random places.

    Each step picks one of the ``len + 1`` gaps of the current word
    uniformly, and a pair ``[y_i, y_i^-1]`` or ``[y_i^-1, y_i]`` with ``i``
    uniform in ``1..max_index(w) + 1``.  The result has the same normal form
    as ``w`` and length ``len(w) + 2 * steps``.  Draws come from numpy's
    PCG64 stream seeded by ``seed`` so output is reproducible everywhere.

    Gaps are tracked as nodes: filling gap ``g`` with a pair splits it into
    a before/inside/after triple, so each step is O(1) and the final word is
    read off by expanding the original gaps depth-first.
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    codes = w.codes
    if steps == 0:
        return w
    rng = np.random.default_rng(seed)
    top = w.max_index + 1
    u = rng.random(steps).tolist()
    idx = rng.integers(1, top + 1, size=steps).tolist()
    flip = rng.integers(0, 2, size=steps).tolist()

    n0 = len(codes) + 1
    live = list(range(n0))  # gap ids currently present, in arbitrary order
    # expansion[g] = (before, code, inside, after) once gap g is filled
    expansion: list = [None] * (n0 + 3 * steps)
    next_id = n0
    for j in range(steps):
        slot = int(u[j] * len(live))
        g = live[slot]
        before, inside, after = next_id, next_id + 1, next_id + 2
        next_id += 3
        code = -idx[j] if flip[j] else idx[j]
        expansion[g] = (before, code, inside, after)
        live[slot] = before
        live.append(inside)
        live.append(after)

    out: list[int] = []
    emit = out.append
    for pos in range(n0):
        stack = [pos]
        while stack:
            item = stack.pop()
            if isinstance(item, tuple):
                emit(item[0])
                continue
            e = expansion[item]
            if e is None:
                continue
            before, code, inside, after = e
            stack.append(after)
            stack.append((-code,))
            stack.append(inside)
            stack.append((code,))
            stack.append(before)
        if pos < len(codes):
            emit(codes[pos])
    return Word._trusted(tuple(out))
