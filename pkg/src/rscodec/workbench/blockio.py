"""Text format for codeword blocks.

A block file starts with one header line

    rs <n> <k> <m> <prim_poly_hex>

followed by one line per block: n space-separated decimal symbols, with a
literal ? marking an erased position.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import TextIO

from ..codec import CodeParams, ReceivedWord
from ..galois import Field

ERASURE_MARK = "?"


class BlockFormatError(ValueError):
    """Malformed block file content."""


def write_header(out: TextIO, params: CodeParams) -> None:
    field = params.field
    out.write(f"rs {params.n} {params.k} {field.m} 0x{field.prim_poly:x}\n")


def write_block(out: TextIO, symbols: Sequence[int],
                erasures: Iterable[int] = ()) -> None:
    erased = set(erasures)
    out.write(" ".join(ERASURE_MARK if i in erased else str(s)
                       for i, s in enumerate(symbols)))
    out.write("\n")


def read_header(line: str) -> CodeParams:
    parts = line.split()
    if len(parts) != 5 or parts[0] != "rs":
        raise BlockFormatError(
            f"expected header 'rs n k m prim_poly_hex', got {line.rstrip()!r}")
    try:
        n, k, m = int(parts[1]), int(parts[2]), int(parts[3])
        prim_poly = int(parts[4], 16)
    except ValueError as exc:
        raise BlockFormatError(f"bad header field: {exc}") from None
    try:
        field = Field(m, prim_poly)
        params = CodeParams(field, k)
    except (KeyError, ValueError) as exc:
        raise BlockFormatError(f"bad code parameters: {exc}") from None
    if n != params.n:
        raise BlockFormatError(f"header says n = {n} but m = {m} gives {params.n}")
    return params


def read_blocks(handle: TextIO) -> tuple[CodeParams, list[ReceivedWord]]:
    """Parse a block file into code parameters and received words."""
    header = handle.readline()
    if not header.strip():
        raise BlockFormatError("missing header line")
    params = read_header(header)
    blocks = []
    for lineno, line in enumerate(handle, start=2):
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != params.n:
            raise BlockFormatError(
                f"line {lineno}: expected {params.n} symbols, got {len(tokens)}")
        symbols = []
        erasures = []
        for pos, token in enumerate(tokens):
            if token == ERASURE_MARK:
                symbols.append(0)
                erasures.append(pos)
                continue
            try:
                value = int(token)
            except ValueError:
                raise BlockFormatError(
                    f"line {lineno}: bad symbol {token!r}") from None
            if not 0 <= value < params.field.order:
                raise BlockFormatError(
                    f"line {lineno}: symbol {value} is outside "
                    f"GF(2^{params.field.m})")
            symbols.append(value)
        blocks.append(ReceivedWord(symbols=tuple(symbols),
                                   erasures=tuple(erasures)))
    return params, blocks


def read_messages(handle: TextIO, params: CodeParams) -> list[tuple[int, ...]]:
    """Parse lines of k space-separated message symbols."""
    messages = []
    for lineno, line in enumerate(handle, start=1):
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != params.k:
            raise BlockFormatError(
                f"line {lineno}: expected {params.k} symbols, got {len(tokens)}")
        try:
            values = [int(token) for token in tokens]
        except ValueError:
            raise BlockFormatError(f"line {lineno}: bad symbol") from None
        for value in values:
            if not 0 <= value < params.field.order:
                raise BlockFormatError(
                    f"line {lineno}: symbol {value} is outside "
                    f"GF(2^{params.field.m})")
        messages.append(tuple(values))
    return messages
