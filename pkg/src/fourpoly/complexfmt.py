"""Textual form a+bi / a-bi for complex scalars, round-tripping doubles."""
from __future__ import annotations

import re

__all__ = ["format_complex", "parse_complex"]

_NUMBER = r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?"
_PATTERN = re.compile(rf"^([+-]?{_NUMBER})(?:([+-]{_NUMBER})i)?$")


def format_complex(z: complex) -> str:
    """Render with 17 significant digits, e.g. ``2+0i`` or ``1.5-2.25i``."""
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi`` or ``a-bi`` (exponents allowed); inverse of
    `format_complex`."""
    match = _PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"not a complex literal: {text!r}")
    real, imag = match.groups()
    return complex(float(real), float(imag) if imag is not None else 0.0)
