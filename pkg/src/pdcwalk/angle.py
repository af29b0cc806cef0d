"""
Rotation angles stored as exact rational multiples of pi.

Keeping the angle rational lets the coin's trigonometric values be reduced
exactly, so sites where ``cos(x * theta)`` vanishes (the spin-flip sites that
confine a walk) are decided by integer arithmetic rather than by comparing
floats against zero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "Angle",
    "AngleParseError",
    "angle_parse",
    "cos_sin_multiple",
]


class AngleParseError(ValueError):
    """Raised when a textual angle does not match the accepted grammar."""


@dataclass(frozen=True)
class Angle:
    """
    An angle ``numerator * pi / denominator`` held in lowest terms.

    Parameters
    ----------
    numerator: int
        Integer multiple of pi; may be zero or negative.
    denominator: int
        Positive divisor of pi.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if isinstance(num, bool) or not isinstance(num, int):
            raise TypeError(f"numerator must be int, got {type(num).__name__}")
        if isinstance(den, bool) or not isinstance(den, int):
            raise TypeError(f"denominator must be int, got {type(den).__name__}")
        if den == 0:
            raise ValueError("denominator must be non-zero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    @property
    def radians(self) -> float:
        return self.numerator * math.pi / self.denominator

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def canonical(self) -> str:
        """Shortest string that :func:`angle_parse` maps back to this angle."""
        num, den = self.numerator, self.denominator
        if num == 0:
            return "0"
        head = {1: "pi", -1: "-pi"}.get(num, f"{num}pi")
        return head if den == 1 else f"{head}/{den}"

    def slug(self) -> str:
        """Filesystem-safe form of :meth:`canonical` (``7pi/45`` -> ``7pi_45``)."""
        return self.canonical().replace("/", "_")

    def __str__(self) -> str:
        return self.canonical()


_ANGLE_RE = re.compile(r"^(?P<num>[+-]?\d*)pi(?:/(?P<den>\S*))?$")


def angle_parse(text: str) -> Angle:
    """
    Parse ``0``, ``pi/<den>``, ``<num>pi/<den>`` or ``<num>pi`` into an Angle.

    A bare integer is accepted only when it is zero, since any other integer
    would be ambiguous between radians and multiples of pi.

    Raises
    ------
    AngleParseError
        On malformed input or a zero denominator; the message names the
        offending token.
    """
    if not isinstance(text, str):
        raise AngleParseError(f"angle must be a string, got {type(text).__name__}")
    s = text.strip().replace(" ", "")
    if not s:
        raise AngleParseError("empty angle string")

    if re.fullmatch(r"[+-]?\d+", s):
        if int(s) != 0:
            raise AngleParseError(
                f"bare integer {s!r} is only allowed as '0'; write e.g. '{s}pi'"
            )
        return Angle(0, 1)

    m = _ANGLE_RE.match(s)
    if m is None:
        bad = re.sub(r"[+-]?\d*pi(/\d+)?", "", s) or s
        raise AngleParseError(f"malformed angle {text!r}: unexpected token {bad!r}")

    num_txt = m.group("num")
    if num_txt in ("", "+"):
        num = 1
    elif num_txt == "-":
        num = -1
    else:
        num = int(num_txt)

    den_txt = m.group("den")
    if den_txt is None:
        den = 1
    elif not den_txt.isdigit():
        raise AngleParseError(
            f"malformed angle {text!r}: bad denominator token {den_txt!r}"
        )
    else:
        den = int(den_txt)
        if den == 0:
            raise AngleParseError(f"malformed angle {text!r}: denominator token '0'")
    return Angle(num, den)


def cos_sin_multiple(theta: Angle, x: int) -> tuple[float, float]:
    """
    Return ``(cos(x*theta), sin(x*theta))`` with exact values on quadrant axes.

    The product ``x * theta`` is reduced modulo 2*pi in integer arithmetic
    first, so multiples landing on 0, pi/2, pi or 3pi/2 give exact 0 and +-1.
    """
    p, q = theta.numerator, theta.denominator
    # x*theta = r*pi/q with 0 <= r < 2q
    r = (x * p) % (2 * q)
    quarter, rem = divmod(4 * r, 2 * q)
    if rem == 0:
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[quarter]
    phi = r * math.pi / q
    return math.cos(phi), math.sin(phi)
