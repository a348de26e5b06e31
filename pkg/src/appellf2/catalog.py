"""Static catalog of the 18 series representations S1..S18 of Appell F2.

Each representation is a sum of components ``coefficient * series``.  A
coefficient is a gamma-function ratio times powers of rational functions of
``(x, y)``; some powers are "bracketed" and go through the rewriting rule in
:data:`REWRITE_CONDITIONS`, which picks between ``f**e`` and ``(1/f)**(-e)``
so that all representations agree on the branch cuts.

Series are written in Kampe de Feriet notation::

    "A : B ; C / alpha : beta ; gamma"

where ``A``/``alpha`` carry the shift ``m+n`` (or ``m-n`` for the mirror
series), ``B``/``beta`` the shift ``m`` and ``C``/``gamma`` the shift ``n``.
Groups are comma separated; ``-`` marks an empty group.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError, OutOfROCError, UnknownIdError
from .params import EvalPoint, Lin, ParameterSet
from .series import DoubleSeriesSpec
from .special import gamma_ratio

# ---------------------------------------------------------------------------
# argument expressions

ARG_EXPRS: dict[str, Callable[[float, float], float]] = {
    "x": lambda x, y: x,
    "y": lambda x, y: y,
    "1-x": lambda x, y: 1.0 - x,
    "1-y": lambda x, y: 1.0 - y,
    "1-x-y": lambda x, y: 1.0 - x - y,
    "-x": lambda x, y: -x,
    "-y": lambda x, y: -y,
    "1/x": lambda x, y: 1.0 / x,
    "1/y": lambda x, y: 1.0 / y,
    "-1/x": lambda x, y: -1.0 / x,
    "-1/y": lambda x, y: -1.0 / y,
    "-x/y": lambda x, y: -x / y,
    "-y/x": lambda x, y: -y / x,
    "1/(1-x)": lambda x, y: 1.0 / (1.0 - x),
    "1/(1-y)": lambda x, y: 1.0 / (1.0 - y),
    "x/(x-1)": lambda x, y: x / (x - 1.0),
    "y/(y-1)": lambda x, y: y / (y - 1.0),
    "-x/(x-1)": lambda x, y: -x / (x - 1.0),
    "-y/(y-1)": lambda x, y: -y / (y - 1.0),
    "x/(1-x)": lambda x, y: x / (1.0 - x),
    "y/(1-y)": lambda x, y: y / (1.0 - y),
    "x/(1-y)": lambda x, y: x / (1.0 - y),
    "y/(1-x)": lambda x, y: y / (1.0 - x),
    "x/(y-1)": lambda x, y: x / (y - 1.0),
    "y/(x-1)": lambda x, y: y / (x - 1.0),
    "(1-x)/y": lambda x, y: (1.0 - x) / y,
    "(1-y)/x": lambda x, y: (1.0 - y) / x,
    "(x-1)/x": lambda x, y: (x - 1.0) / x,
    "(y-1)/y": lambda x, y: (y - 1.0) / y,
    "x/(x+y-1)": lambda x, y: x / (x + y - 1.0),
    "y/(x+y-1)": lambda x, y: y / (x + y - 1.0),
    "-x/(x+y-1)": lambda x, y: -x / (x + y - 1.0),
    "-y/(x+y-1)": lambda x, y: -y / (x + y - 1.0),
    "(x+y-1)/x": lambda x, y: (x + y - 1.0) / x,
    "(x+y-1)/y": lambda x, y: (x + y - 1.0) / y,
    "(x-1)/(x+y-1)": lambda x, y: (x - 1.0) / (x + y - 1.0),
    "(y-1)/(x+y-1)": lambda x, y: (y - 1.0) / (x + y - 1.0),
    "(x+y-1)/(x-1)": lambda x, y: (x + y - 1.0) / (x - 1.0),
    "(x+y-1)/(y-1)": lambda x, y: (x + y - 1.0) / (y - 1.0),
}


def arg_value(tag: str, point: EvalPoint) -> float:
    return ARG_EXPRS[tag](point.x, point.y)


# ---------------------------------------------------------------------------
# rewriting conditions for bracketed prefactors

CONDITIONS: dict[str, Callable[[float, float], bool]] = {
    "x-y+1>0": lambda x, y: x - y + 1.0 > 0,
    "x-y-1>0": lambda x, y: x - y - 1.0 > 0,
    "-x+y+1>0": lambda x, y: -x + y + 1.0 > 0,
    "-x+y-1>0": lambda x, y: -x + y - 1.0 > 0,
    "False": lambda x, y: False,
}

REWRITE_CONDITIONS: dict[str, str] = {
    "x/(y-1)": "x-y+1>0",
    "(x+y-1)/(y-1)": "x-y+1>0",
    "-y/(x+y-1)": "x-y-1>0",
    "(x-1)/(x+y-1)": "x-y-1>0",
    "y/(x-1)": "-x+y+1>0",
    "(x+y-1)/(x-1)": "-x+y+1>0",
    "-x/(x+y-1)": "-x+y-1>0",
    "(y-1)/(x+y-1)": "-x+y-1>0",
    "1/(1-x)": "False",
    "1/(1-y)": "False",
    "-x/(x-1)": "False",
    "-y/(y-1)": "False",
    # same function as -y/(y-1) and -x/(x-1), written differently in one formula
    "y/(1-y)": "False",
    "x/(1-x)": "False",
}


@dataclass(frozen=True)
class Prefactor:
    """``base ** exponent``; bracketed prefactors carry a rewrite condition."""

    base: str
    exponent: Lin
    condition: Optional[str] = None

    def __str__(self) -> str:
        text = f"({self.base})^({self.exponent})"
        return f"<{text}>" if self.condition is not None else text


def _power(base: float, exponent: complex) -> complex:
    # principal branch; a negative real base has argument +pi
    return cmath.exp(exponent * cmath.log(complex(base)))


def evaluate_prefactor(p: Prefactor, params: ParameterSet, point: EvalPoint) -> complex:
    e = p.exponent(params)
    if e == 0:
        return 1.0 + 0j
    f = arg_value(p.base, point)
    if f == 0:
        if e.real > 0:
            return 0j
        raise DomainError(f"prefactor base {p.base} vanishes with exponent {e}")
    if p.condition is None or CONDITIONS[p.condition](point.x, point.y):
        return _power(f, e)
    return _power(1.0 / f, -e)


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class RocTerm:
    """``sum(|tag| for tag in tags) op 1`` with a strict inequality."""

    tags: tuple[str, ...]
    op: str = "<"

    def holds(self, point: EvalPoint) -> bool:
        total = sum(abs(arg_value(t, point)) for t in self.tags)
        return total < 1.0 if self.op == "<" else total > 1.0

    def __str__(self) -> str:
        return "+".join(f"Abs[{t}]" for t in self.tags) + f"{self.op}1"


@dataclass(frozen=True)
class SeriesComponent:
    gamma_num: tuple[Lin, ...]
    gamma_den: tuple[Lin, ...]
    prefactors: tuple[Prefactor, ...]
    series: DoubleSeriesSpec
    arg_x: str
    arg_y: str

    def coefficient(self, params: ParameterSet, point: EvalPoint) -> complex:
        c = gamma_ratio([g(params) for g in self.gamma_num], [g(params) for g in self.gamma_den])
        if c == 0:
            return c
        for p in self.prefactors:
            c *= evaluate_prefactor(p, params, point)
        return c

    def describe(self) -> str:
        parts = [str(p) for p in self.prefactors]
        if self.gamma_num or self.gamma_den:
            num = "*".join(f"Gamma[{g}]" for g in self.gamma_num) or "1"
            den = "*".join(f"Gamma[{g}]" for g in self.gamma_den) or "1"
            parts.append(f"{num}/({den})")
        coeff = " * ".join(parts) if parts else "1"
        return f"{coeff} * {self.series.label}[{self.arg_x}, {self.arg_y}]"


@dataclass(frozen=True)
class SeriesRepresentation:
    id: str
    package_number: int
    roc: tuple[RocTerm, ...]
    components: tuple[SeriesComponent, ...]

    def contains(self, point: EvalPoint) -> bool:
        try:
            return all(term.holds(point) for term in self.roc)
        except ZeroDivisionError:
            return False

    def roc_text(self) -> str:
        return " && ".join(str(t) for t in self.roc)


@dataclass(frozen=True)
class InstantiatedComponent:
    coefficient: complex
    series: DoubleSeriesSpec
    X: float
    Y: float


# ---------------------------------------------------------------------------
# construction helpers


def _lins(text: str) -> tuple[Lin, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(Lin.parse(t) for t in text.split(","))


def _groups(text: str) -> tuple[tuple[Lin, ...], ...]:
    first, rest = text.split(":")
    second, third = rest.split(";")
    return _lins(first), _lins(second), _lins(third)


def kdf(text: str, mirror: bool = False) -> DoubleSeriesSpec:
    """Series spec from ``"A : B ; C / alpha : beta ; gamma"``."""
    top, bottom = text.split("/")
    A, B, C = _groups(top)
    if ":" not in bottom:
        bottom += ": - ; -"
    al, be, ga = _groups(bottom)
    counts = f"{len(A)}:{len(B)};{len(C)}|{len(al)}:{len(be)};{len(ga)}"
    name = ("Ft" if mirror else "F") + "{" + counts + "}"
    if mirror:
        return DoubleSeriesSpec(upper_minus=A, upper_m=B, upper_n=C,
                                lower_minus=al, lower_m=be, lower_n=ga, label=name)
    return DoubleSeriesSpec(upper_plus=A, upper_m=B, upper_n=C,
                            lower_plus=al, lower_m=be, lower_n=ga, label=name)


def horn_h2(alpha: str, beta: str, gamma: str, delta: str, eps: str) -> DoubleSeriesSpec:
    """Horn H2(alpha, beta, gamma, delta; eps; u, v)."""
    spec = kdf(f"{alpha} : {beta} ; {gamma}, {delta} / - : {eps} ; -", mirror=True)
    return DoubleSeriesSpec(
        upper_minus=spec.upper_minus, upper_m=spec.upper_m, upper_n=spec.upper_n,
        lower_m=spec.lower_m, label="H2",
    )


def pf(base: str, exponent: str) -> Prefactor:
    return Prefactor(base, Lin.parse(exponent))


def bpf(base: str, exponent: str) -> Prefactor:
    return Prefactor(base, Lin.parse(exponent), REWRITE_CONDITIONS[base])


def comp(gnum: str, gden: str, prefactors, series: DoubleSeriesSpec, ax: str, ay: str):
    return SeriesComponent(_lins(gnum), _lins(gden), tuple(prefactors), series, ax, ay)


def roc(*terms) -> tuple[RocTerm, ...]:
    out = []
    for t in terms:
        op = "<"
        if isinstance(t, tuple) and t[-1] in ("<", ">"):
            op, t = t[-1], t[:-1]
        tags = (t,) if isinstance(t, str) else tuple(t)
        out.append(RocTerm(tags, op))
    return tuple(out)


F2_SPEC = "a : b1 ; b2 / - : c1 ; c2"


def _build() -> tuple[SeriesRepresentation, ...]:
    R = SeriesRepresentation
    reps = []

    reps.append(R("S1", 1, roc(("x", "y")), (
        comp("", "", [], kdf(F2_SPEC), "x", "y"),
    )))

    reps.append(R("S2", 23, roc(("x/(1-y)", "y/(y-1)")), (
        comp("", "", [pf("1-y", "-a")],
             kdf("a : b1 ; c2-b2 / - : c1 ; c2"), "x/(1-y)", "y/(y-1)"),
    )))

    reps.append(R("S3", 34, roc(("x/(x+y-1)", "y/(x+y-1)")), (
        comp("", "", [pf("1-x-y", "-a")],
             kdf("a : c1-b1 ; c2-b2 / - : c1 ; c2"), "x/(x+y-1)", "y/(x+y-1)"),
    )))

    reps.append(R("S4", 14, roc(("1-x", ">"), "y"), (
        comp("c1, a-b1", "a, c1-b1", [pf("1-x", "-a"), bpf("1/(1-x)", "b1-a")],
             kdf("c1-a : b1 ; b2, a-c1+1 / b1-a+1 : - ; c2", mirror=True), "1/(1-x)", "y"),
        comp("c1, b1-a", "b1, c1-a", [pf("1-x", "-a")],
             kdf("a : c1-b1 ; b2, a-c1+1 / a-b1+1 : - ; c2"), "1/(1-x)", "y/(1-x)"),
    )))

    reps.append(R("S5", 25, roc("y/(x+y-1)", "(x+y-1)/(y-1)"), (
        comp("c1, c1-a-b1", "c1-a, c1-b1", [pf("1-y", "-a")],
             kdf("a : b1 ; c2-b2, a-c1+1 / a+b1-c1+1 : - ; c2"), "(x+y-1)/(y-1)", "y/(y-1)"),
        comp("c1, a+b1-c1", "a, b1",
             [pf("1-y", "-a"), bpf("(x+y-1)/(y-1)", "c1-a-b1")],
             kdf("c1-a : c1-b1 ; c2-b2, a-c1+1 / c1-a-b1+1 : - ; c2", mirror=True),
             "(x+y-1)/(y-1)", "y/(x+y-1)"),
    )))

    reps.append(R("S6", 4, roc("(1-y)/x", "x"), (
        comp("c2, c2-a-b2", "c2-a, c2-b2", [],
             kdf("a : a-c2+1, b1 ; b2 / a+b2-c2+1 : c1 ; -"), "x", "1-y"),
        comp("c1, c2, a+b2-c2, c2-a+b1-b2", "a, b1, b2, c1+c2-a-b2",
             [pf("1-y", "c2-a-b2"), bpf("x/(y-1)", "c2-a-b2")],
             kdf("a+b2-c2, a+b2-c2-c1+1 : b2 ; c2-b2 / b2, a-b1+b2-c2+1 : - ; -", mirror=True),
             "(1-y)/x", "x"),
        comp("c1, c2, a-b1+b2-c2", "a, b2, c1-b1",
             [bpf("x/(y-1)", "-b1"), pf("1-y", "c2-a-b2")],
             kdf("c2-a+b1 : b1, b1-c1+1 ; c2-b2 / c2-a+b1-b2+1 : c2-a+b1 ; -"),
             "(1-y)/x", "1-y"),
    )))

    reps.append(R("S7", 15, roc("(x+y-1)/x", "x/(x-1)"), (
        comp("c2, c2-a-b2", "c2-a, c2-b2", [pf("1-x", "-a")],
             kdf("a : a-c2+1, c1-b1 ; b2 / a+b2-c2+1 : c1 ; -"), "x/(x-1)", "(x+y-1)/(x-1)"),
        comp("c1, c2, a+b2-c2, c1+c2-a-b1-b2", "a, b2, c1-b1, c1+c2-a-b2",
             [pf("1-x", "-a"), bpf("-x/(x+y-1)", "c2-a-b2"),
              bpf("(x+y-1)/(x-1)", "c2-a-b2")],
             kdf("a+b2-c2, a+b2-c1-c2+1 : b2 ; c2-b2 / a+b1+b2-c1-c2+1, b2 : - ; -",
                 mirror=True),
             "(x+y-1)/x", "x/(x-1)"),
        comp("c1, c2, a+b1+b2-c1-c2", "a, b1, b2",
             [pf("1-x", "-a"), bpf("(x+y-1)/(x-1)", "c2-a-b2"), bpf("-x/(x+y-1)", "b1-c1")],
             kdf("c1+c2-a-b1 : 1-b1, c1-b1 ; c2-b2 / c1+c2-a-b1-b2+1 : c1+c2-a-b1 ; -"),
             "(x+y-1)/x", "(x+y-1)/(x-1)"),
    )))

    reps.append(R("S8", 37, roc("(x-1)/x", "x/(x+y-1)"), (
        comp("c1, c2, a-b2, c1-a-b1+b2", "a, c1-b1, c2-b2, c1-a+b2",
             [pf("1-x-y", "-a"), bpf("-x/(x-1)", "b2-a"), bpf("(x-1)/(x+y-1)", "b2-a")],
             kdf("a-b2, a-b2-c1+1 : c2-b2 ; b2 / c2-b2, a+b1-b2-c1+1 : - ; -", mirror=True),
             "(x-1)/x", "x/(x+y-1)"),
        comp("c2, b2-a", "b2, c2-a", [pf("1-x-y", "-a")],
             kdf("a : a-c2+1, c1-b1 ; c2-b2 / a-b2+1 : c1 ; -"),
             "x/(x+y-1)", "(x-1)/(x+y-1)"),
        comp("c1, c2, a+b1-b2-c1", "a, b1, c2-b2",
             [pf("1-x-y", "-a"), bpf("-x/(x-1)", "b1-c1"), bpf("(x-1)/(x+y-1)", "b2-a")],
             kdf("c1+c2-a-b1 : 1-b1, c1-b1 ; b2 / c1-a-b1+b2+1 : c1+c2-a-b1 ; -"),
             "(x-1)/x", "(x-1)/(x+y-1)"),
    )))

    reps.append(R("S9", 5, roc("(1-x)/y", "y"), (
        comp("c1, c2, a+b1-b2-c1", "a, b1, c2-b2",
             [pf("1-x", "c1-a-b1"), bpf("y/(x-1)", "-b2")],
             kdf("c1-a+b2 : c1-b1 ; b2, b2-c2+1 / c1-a-b1+b2+1 : - ; c1-a+b2"),
             "1-x", "(1-x)/y"),
        comp("c1, c2, a+b1-c1, c1-a-b1+b2", "a, b1, b2, c1+c2-a-b1",
             [pf("1-x", "c1-a-b1"), bpf("y/(x-1)", "c1-a-b1")],
             kdf("1-b1, c1-a-b1+b2 : c1-b1 ; b1 / c1-a-b1+1, c1+c2-a-b1 : - ; -", mirror=True),
             "y", "(1-x)/y"),
        comp("c1, c1-a-b1", "c1-a, c1-b1", [],
             kdf("a : b1 ; b2, a-c1+1 / a+b1-c1+1 : - ; c2"), "1-x", "y"),
    )))

    reps.append(R("S10", 27, roc("(x+y-1)/y", "y/(y-1)"), (
        comp("c1, c2, a+b1-c1, c1+c2-a-b1-b2", "a, b1, c2-b2, c1+c2-a-b1",
             [pf("1-y", "-a"), bpf("-y/(x+y-1)", "c1-a-b1"),
              bpf("(x+y-1)/(y-1)", "c1-a-b1")],
             kdf("1-b1, c1+c2-a-b1-b2 : c1-b1 ; b1 / c1-a-b1+1, c1+c2-a-b1 : - ; -",
                 mirror=True),
             "y/(y-1)", "(x+y-1)/y"),
        comp("c1, c1-a-b1", "c1-a, c1-b1", [pf("1-y", "-a")],
             kdf("a : b1 ; a-c1+1, c2-b2 / a+b1-c1+1 : - ; c2"), "(x+y-1)/(y-1)", "y/(y-1)"),
        comp("c1, c2, a+b1+b2-c1-c2", "a, b1, b2",
             [pf("1-y", "-a"), bpf("(x+y-1)/(y-1)", "c1-a-b1"), bpf("-y/(x+y-1)", "b2-c2")],
             kdf("c1+c2-a-b2 : c1-b1 ; 1-b2, c2-b2 / c1+c2-a-b1-b2+1 : - ; c1+c2-a-b2"),
             "(x+y-1)/(y-1)", "(x+y-1)/y"),
    )))

    reps.append(R("S11", 38, roc("(y-1)/y", "y/(x+y-1)"), (
        comp("c1, c2, a-b1, c2-a+b1-b2", "a, c1-b1, c2-b2, c2-a+b1",
             [pf("1-x-y", "-a"), bpf("y/(1-y)", "b1-a"), bpf("(y-1)/(x+y-1)", "b1-a")],
             kdf("b1-c1+1, c2-a+b1-b2 : b1 ; c1-b1 / b1-a+1, c2-a+b1 : - ; -", mirror=True),
             "y/(x+y-1)", "(y-1)/y"),
        comp("c1, b1-a", "b1, c1-a", [pf("1-x-y", "-a")],
             kdf("a : c1-b1 ; a-c1+1, c2-b2 / a-b1+1 : - ; c2"),
             "(y-1)/(x+y-1)", "y/(x+y-1)"),
        comp("c1, c2, a-b1+b2-c2", "a, b2, c1-b1",
             [pf("1-x-y", "-a"), bpf("y/(1-y)", "b2-c2"), bpf("(y-1)/(x+y-1)", "b1-a")],
             kdf("c1+c2-a-b2 : b1 ; 1-b2, c2-b2 / c2-a+b1-b2+1 : - ; c1+c2-a-b2"),
             "(y-1)/(x+y-1)", "(y-1)/y"),
    )))

    reps.append(R("S12", 6, roc("1/x", "1-y"), (
        comp("c1, b1-a", "b1, c1-a", [pf("-x", "-a")],
             kdf("a, a-c1+1 : c2-b2 ; b2 / c2, a-b1+1"), "1/x", "(1-y)/x"),
        comp("c1, c2, a-b1, c2-a+b1-b2", "a, c1-b1, c2-b2, c2-a+b1", [pf("-x", "-b1")],
             kdf("c2-a+b1-b2 : b1, b1-c1+1 ; b2 / b1-a+1 : c2-a+b1 ; -", mirror=True),
             "1/x", "1-y"),
        comp("c1, c2, a-b1+b2-c2", "a, b2, c1-b1",
             [pf("-x", "-b1"), pf("1-y", "c2-a+b1-b2")],
             kdf("c2-a+b1 : b1, b1-c1+1 ; c2-b2 / c2-a+b1-b2+1 : c2-a+b1 ; -"),
             "(1-y)/x", "1-y"),
    )))

    reps.append(R("S13", 17, roc("(x-1)/x", "(x+y-1)/(x-1)"), (
        comp("c1, c1-a-b1", "c1-a, c1-b1", [pf("1-x", "-a"), bpf("-x/(x-1)", "-a")],
             kdf("a, a-c1+1 : c2-b2 ; b2 / c2, a+b1-c1+1"), "(x-1)/x", "(x+y-1)/x"),
        comp("c1, c2, a+b1-c1, c1+c2-a-b1-b2", "a, b1, c2-b2, c1+c2-a-b1",
             [pf("1-x", "-a"), bpf("-x/(x-1)", "b1-c1")],
             kdf("c1+c2-a-b1-b2 : 1-b1, c1-b1 ; b2 / c1-a-b1+1 : c1+c2-a-b1 ; -", mirror=True),
             "(x-1)/x", "(x+y-1)/(x-1)"),
        comp("c1, c2, a+b1+b2-c1-c2", "a, b1, b2",
             [pf("1-x", "-a"), bpf("-x/(x-1)", "b1-c1"),
              bpf("(x+y-1)/(x-1)", "c1+c2-a-b1-b2")],
             kdf("c1+c2-a-b1 : 1-b1, c1-b1 ; c2-b2 / c1+c2-a-b1-b2+1 : c1+c2-a-b1 ; -"),
             "(x+y-1)/x", "(x+y-1)/(x-1)"),
    )))

    reps.append(R("S14", 7, roc("1-x", ("y", ">")), (
        comp("c2, b2-a", "b2, c2-a", [pf("-y", "-a")],
             kdf("a, a-c2+1 : b1 ; c1-b1 / c1, a-b2+1"), "(1-x)/y", "1/y"),
        comp("c1, c2, a-b2, c1-a-b1+b2", "a, c1-b1, c2-b2, c1-a+b2", [pf("-y", "-b2")],
             kdf("a-b2 : b1 ; b2, b2-c2+1 / a+b1-b2-c1+1 : - ; c1-a+b2", mirror=True),
             "1-x", "1/y"),
        comp("c1, c2, a+b1-b2-c1", "a, b1, c2-b2",
             [pf("-y", "-b2"), pf("1-x", "c1-a-b1+b2")],
             kdf("c1-a+b2 : c1-b1 ; b2, b2-c2+1 / c1-a-b1+b2+1 : - ; c1-a+b2"),
             "1-x", "(1-x)/y"),
    )))

    reps.append(R("S15", 29, roc("(y-1)/y", "(x+y-1)/(y-1)"), (
        comp("c2, c2-a-b2", "c2-a, c2-b2", [pf("1-y", "-a"), bpf("-y/(y-1)", "-a")],
             kdf("a, a-c2+1 : b1 ; c1-b1 / c1, a+b2-c2+1"), "(x+y-1)/y", "(y-1)/y"),
        comp("c1, c2, a+b2-c2, c1+c2-a-b1-b2", "a, b2, c1-b1, c1+c2-a-b2",
             [pf("1-y", "-a"), bpf("-y/(y-1)", "b2-c2")],
             kdf("a+b2-c2 : b1 ; 1-b2, c2-b2 / a+b1+b2-c1-c2+1 : - ; c1+c2-a-b2", mirror=True),
             "(x+y-1)/(y-1)", "(y-1)/y"),
        comp("c1, c2, a+b1+b2-c1-c2", "a, b1, b2",
             [pf("1-y", "-a"), bpf("-y/(y-1)", "b2-c2"),
              bpf("(y-1)/(x+y-1)", "a+b1+b2-c1-c2")],
             kdf("c1+c2-a-b2 : c1-b1 ; 1-b2, c2-b2 / c1+c2-a-b1-b2+1 : - ; c1+c2-a-b2"),
             "(x+y-1)/(y-1)", "(x+y-1)/y"),
    )))

    reps.append(R("S16", 40, roc("(x+y-1)/y", "(y-1)/(x+y-1)"), (
        comp("c2, c2-a-b2", "c2-a, c2-b2", [pf("1-x-y", "-a"), bpf("-y/(x+y-1)", "-a")],
             kdf("a, a-c2+1 : c1-b1 ; b1 / c1, a+b2-c2+1"), "(y-1)/y", "(x+y-1)/y"),
        comp("c1, c2, a+b2-c2, c2-a+b1-b2", "a, b1, b2, c1+c2-a-b2",
             [pf("1-x-y", "-a"), bpf("-y/(x+y-1)", "b2-c2")],
             kdf("a+b2-c2 : c1-b1 ; 1-b2, c2-b2 / a-b1+b2-c2+1 : - ; c1+c2-a-b2", mirror=True),
             "(y-1)/(x+y-1)", "(x+y-1)/y"),
        comp("c1, c2, a-b1+b2-c2", "a, b2, c1-b1",
             [pf("1-x-y", "-a"), bpf("-y/(x+y-1)", "b2-c2"),
              bpf("(y-1)/(x+y-1)", "c2-a+b1-b2")],
             kdf("c1+c2-a-b2 : b1 ; 1-b2, c2-b2 / c2-a+b1-b2+1 : - ; c1+c2-a-b2"),
             "(y-1)/(x+y-1)", "(y-1)/y"),
    )))

    reps.append(R("S17", 8, roc("x", "-1/y", ("-x/y", "-1/y")), (
        comp("c2, b2-a", "b2, c2-a", [pf("-y", "-a")],
             kdf("a, a-c2+1 : b1 ; - / a-b2+1 : c1 ; -"), "-x/y", "1/y"),
        comp("c2, a-b2", "a, c2-b2", [pf("-y", "-b2")],
             horn_h2("a-b2", "b1", "b2", "b2-c2+1", "c1"), "x", "-1/y"),
    )))

    reps.append(R("S18", 9, roc("y", "1/x", ("-y/x", "-1/x")), (
        comp("c1, b1-a", "b1, c1-a", [pf("-x", "-a")],
             kdf("a, a-c1+1 : b2 ; - / a-b1+1 : c2 ; -"), "-y/x", "1/x"),
        comp("c1, a-b1", "a, c1-b1", [pf("-x", "-b1")],
             horn_h2("a-b1", "b2", "b1", "b1-c1+1", "c2"), "y", "-1/x"),
    )))
    return tuple(reps)


CATALOG: tuple[SeriesRepresentation, ...] = _build()
_BY_ID = {r.id: r for r in CATALOG}


def list_representations() -> tuple[SeriesRepresentation, ...]:
    return CATALOG


def get_representation(rep_id: str | int) -> SeriesRepresentation:
    """Look up by id (``"S7"``, ``"7"`` or ``7``)."""
    key = str(rep_id).strip().upper()
    if not key.startswith("S"):
        key = "S" + key
    try:
        return _BY_ID[key]
    except KeyError:
        raise UnknownIdError(f"unknown representation {rep_id!r}; expected S1..S18") from None


def roc_contains(rep_id, point: EvalPoint) -> bool:
    return get_representation(rep_id).contains(point)


def instantiate(rep_id, params: ParameterSet, point: EvalPoint) -> list[InstantiatedComponent]:
    rep = get_representation(rep_id)
    if not rep.contains(point):
        raise OutOfROCError(f"({point.x:g}, {point.y:g}) is outside the ROC of {rep.id}")
    out = []
    for c in rep.components:
        out.append(InstantiatedComponent(
            c.coefficient(params, point), c.series,
            arg_value(c.arg_x, point), arg_value(c.arg_y, point),
        ))
    return out


def expose(rep_id) -> str:
    rep = get_representation(rep_id)
    lines = [f"{rep.id} #{rep.package_number} ROC: {rep.roc_text()}"]
    for i, c in enumerate(rep.components, 1):
        s = c.series
        groups = [
            ("m+n", s.upper_plus, s.lower_plus), ("m-n", s.upper_minus, s.lower_minus),
            ("m", s.upper_m, s.lower_m), ("n", s.upper_n, s.lower_n),
        ]
        desc = " ".join(
            f"{k}: [{', '.join(map(str, up))}]/[{', '.join(map(str, lo))}]"
            for k, up, lo in groups if up or lo
        )
        lines.append(f"[{i}] {c.describe()} {{{desc}}}")
    return "\n".join(lines) + "\n"
