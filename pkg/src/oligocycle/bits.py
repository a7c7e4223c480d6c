"""Bit-string utilities.

Payloads travel through the codecs as strings of '0'/'1' characters, most
significant bit first within each byte and each integer field.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .errors import DomainError

T = TypeVar("T")


def validate_bits(bits: str) -> str:
    """Return *bits* unchanged, or raise DomainError on a non-binary character."""
    if not isinstance(bits, str) or bits.strip("01"):
        raise DomainError("expected a string of '0'/'1' characters")
    return bits


def bits_from_bytes(data: bytes) -> str:
    """Expand bytes into a bit string, MSB first within each byte."""
    return "".join(format(b, "08b") for b in data)


def bytes_from_bits(bits: str) -> bytes:
    """Pack a bit string whose length is a multiple of 8 back into bytes."""
    validate_bits(bits)
    if len(bits) % 8:
        raise DomainError("bit count is not a multiple of 8")
    return bytes(int(bits[i : i + 8], 2) for i in range(0, len(bits), 8))


def int_from_bits(bits: str) -> int:
    """Interpret a bit string as an unsigned integer; empty means zero."""
    validate_bits(bits)
    return int(bits, 2) if bits else 0


def bits_from_int(value: int, width: int) -> str:
    """Render *value* as exactly *width* bits, MSB first."""
    if value < 0 or width < 0:
        raise DomainError("value and width must be non-negative")
    if value.bit_length() > width:
        raise DomainError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def gray_encode(value: int) -> int:
    """Reflected binary Gray code of a non-negative integer."""
    if value < 0:
        raise DomainError("Gray code is defined for non-negative integers")
    return value ^ (value >> 1)


def gray_decode(code: int) -> int:
    """Inverse of gray_encode."""
    if code < 0:
        raise DomainError("Gray code is defined for non-negative integers")
    value = 0
    while code:
        value ^= code
        code >>= 1
    return value


def project(values: Sequence[T], mask: str) -> tuple[T, ...]:
    """Keep the entries of *values* whose mask bit is '1', preserving order."""
    validate_bits(mask)
    if len(mask) != len(values):
        raise DomainError("mask length must match the sequence length")
    return tuple(v for v, m in zip(values, mask) if m == "1")
