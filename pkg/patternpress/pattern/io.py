"""
Text formats for patterns and token streams.

Pattern files hold one pattern per line, symbols as ASCII decimal integers
separated by single spaces; an empty line is the empty pattern. Token files are
UTF-8 text with one token per line, or whitespace-separated tokens.
"""

from typing import List, TextIO

from ..exceptions import InvalidPattern
from .pattern import Pattern


def parse_pattern(line: str) -> Pattern:
    """Parse one pattern line such as ``"1 2 1"``."""
    fields = line.split()
    symbols = []
    for i, f in enumerate(fields):
        try:
            symbols.append(int(f))
        except ValueError:
            raise InvalidPattern(i + 1, f"{f!r} is not a decimal integer")
    return Pattern(tuple(symbols))


def format_pattern(pattern: Pattern) -> str:
    return " ".join(str(s) for s in pattern.symbols)


def read_patterns(stream: TextIO) -> List[Pattern]:
    """Read every pattern from a pattern file (one per line)."""
    return [parse_pattern(line) for line in stream.read().splitlines()]


def write_patterns(patterns, stream: TextIO):
    """Write patterns one per line; the output ends with exactly one newline."""
    for p in patterns:
        stream.write(format_pattern(p) + "\n")


def read_tokens(stream: TextIO, whitespace=False) -> List[str]:
    """
    Read a token sequence.

    Parameters
    ----------
    stream : text stream
        UTF-8 text.
    whitespace : bool, default False
        Split on runs of whitespace instead of taking one token per line.
    """
    text = stream.read()
    if whitespace:
        return text.split()
    return text.splitlines()
