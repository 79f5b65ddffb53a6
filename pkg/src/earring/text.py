"""Canonical text encoding of words: ``"-1 -2 1 2"``, with ``"e"`` for empty."""

from __future__ import annotations

from .word_core import Word

__all__ = ["ParseError", "parse_word", "format_word"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)


def parse_word(text: str) -> Word:
    """Parse the canonical encoding.  Token positions in errors are 1-based."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty input")
    if tokens == ["e"]:
        return Word()
    codes = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            c = int(tok, 10)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", pos) from None
        if c == 0:
            raise ParseError("zero is not a letter", pos)
        codes.append(c)
    return Word._trusted(tuple(codes))


def format_word(w: Word) -> str:
    if not w:
        return "e"
    return " ".join(map(str, w.codes))
