"""Parameter sets, evaluation points and integer-linear parameter combinations."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LogarithmicCaseError, SingularCurveError

EPS_POLE = 1e-10
EPS_SING = 1e-10

PARAM_NAMES = ("a", "b1", "b2", "c1", "c2")

# Points the 18 representations cannot reach; all of them sit on singular curves.
EXCEPTIONAL_POINTS = ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (0.5, 0.5))


def is_nonpositive_integer(z: complex, eps: float = EPS_POLE) -> bool:
    z = complex(z)
    if z.real > eps:
        return False
    n = round(z.real)
    return abs(z - n) <= eps


@dataclass(frozen=True)
class ParameterSet:
    """The five Pochhammer parameters ``a, b1, b2; c1, c2``."""

    a: complex
    b1: complex
    b2: complex
    c1: complex
    c2: complex

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def of(cls, *values) -> "ParameterSet":
        if len(values) == 1 and not isinstance(values[0], (int, float, complex)):
            values = tuple(values[0])
        return cls(*values)

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.a, self.b1, self.b2, self.c1, self.c2)

    def is_real(self) -> bool:
        return all(v.imag == 0.0 for v in self.as_tuple())

    def swapped(self) -> "ParameterSet":
        """Parameters of the symmetric partner ``F2(a, b2, b1; c2, c1; y, x)``."""
        return ParameterSet(self.a, self.b2, self.b1, self.c2, self.c1)

    def validate(self, eps: float = EPS_POLE) -> None:
        for name in ("c1", "c2"):
            if is_nonpositive_integer(getattr(self, name), eps):
                raise LogarithmicCaseError(
                    f"{name} = {getattr(self, name)} is a non-positive integer; "
                    f"({name})_m vanishes and F2 is undefined"
                )


@dataclass(frozen=True)
class EvalPoint:
    """A real argument pair ``(x, y)``."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))

    def curve_distances(self) -> dict[str, float]:
        x, y = self.x, self.y
        return {
            "x=0": abs(x),
            "y=0": abs(y),
            "x=1": abs(x - 1.0),
            "y=1": abs(y - 1.0),
            "x+y=1": abs(x + y - 1.0) / math.sqrt(2.0),
        }

    def singular_curves(self, eps: float = EPS_SING) -> list[str]:
        """Names of the singular curves within ``eps`` of the point."""
        return [name for name, d in self.curve_distances().items() if d <= eps]

    def exceptional_point(self, eps: float = EPS_SING) -> tuple[float, float] | None:
        for px, py in EXCEPTIONAL_POINTS:
            if math.hypot(self.x - px, self.y - py) <= eps:
                return (px, py)
        return None

    def check_regular(self, eps: float = EPS_SING) -> None:
        curves = self.singular_curves(eps)
        if not curves:
            return
        special = self.exceptional_point(eps)
        msg = f"point ({self.x:g}, {self.y:g}) lies on singular curve(s) {', '.join(curves)}"
        if special is not None:
            msg += f"; ({special[0]:g}, {special[1]:g}) is an exceptional point no series reaches"
        raise SingularCurveError(msg)


_TERM_RE = re.compile(r"([+-]?)(\d*)(a|b1|b2|c1|c2)?")


@dataclass(frozen=True)
class Lin:
    """Integer combination ``k_a*a + k_b1*b1 + k_b2*b2 + k_c1*c1 + k_c2*c2 + const``.

    Supports ``+``, ``-`` and integer scaling so catalog entries can be
    written as ``a - c2 + 1``.
    """

    coef: tuple[int, int, int, int, int] = (0, 0, 0, 0, 0)
    const: int = 0

    @staticmethod
    def symbols() -> tuple["Lin", ...]:
        out = []
        for i in range(5):
            c = [0] * 5
            c[i] = 1
            out.append(Lin(tuple(c)))
        return tuple(out)

    @classmethod
    def parse(cls, text: str) -> "Lin":
        """Parse text such as ``"a-b1+c2+1"`` or ``"1-b2"``."""
        compact = text.replace(" ", "").replace("\u2212", "-")
        if not compact:
            raise ValueError("empty combination")
        coef = [0] * 5
        const = 0
        pos = 0
        for match in _TERM_RE.finditer(compact):
            if match.start() != pos or not match.group(0):
                break
            if pos and not match.group(1):
                break
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            count, name = match.group(2), match.group(3)
            if name is None:
                const += sign * int(count)
            else:
                coef[PARAM_NAMES.index(name)] += sign * (int(count) if count else 1)
        if pos != len(compact):
            raise ValueError(f"cannot parse parameter combination {text!r}")
        return cls(tuple(coef), const)

    def __call__(self, params: ParameterSet) -> complex:
        value = complex(self.const)
        for k, v in zip(self.coef, params.as_tuple()):
            if k:
                value += k * v
        return value

    def _coerce(self, other) -> "Lin":
        if isinstance(other, Lin):
            return other
        if isinstance(other, int):
            return Lin(const=other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Lin(tuple(p + q for p, q in zip(self.coef, other.coef)), self.const + other.const)

    __radd__ = __add__

    def __neg__(self):
        return Lin(tuple(-p for p in self.coef), -self.const)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Lin(tuple(k * p for p in self.coef), k * self.const)

    __rmul__ = __mul__

    def substitute(self, images: Sequence["Lin"]) -> "Lin":
        """Replace each parameter by the combination in ``images`` (same order as PARAM_NAMES)."""
        out = Lin(const=self.const)
        for k, img in zip(self.coef, images):
            if k:
                out = out + k * img
        return out

    def __str__(self) -> str:
        parts: list[str] = []
        for k, name in zip(self.coef, PARAM_NAMES):
            if k == 0:
                continue
            sign = "-" if k < 0 else "+"
            mag = abs(k)
            parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
        if self.const or not parts:
            parts.append(f"{'-' if self.const < 0 else '+'}{abs(self.const)}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def lin_values(combos: Iterable[Lin], params: ParameterSet) -> list[complex]:
    return [c(params) for c in combos]
