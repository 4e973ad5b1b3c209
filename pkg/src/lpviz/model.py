"""Linear-program data model on exact rational arithmetic.

Everything the solver touches is a :class:`fractions.Fraction`; floating point
appears only when a scene document is serialized for display. A program is
always the maximization form

    maximize    c . x
    subject to  A x <= b,  x >= 0

with nonnegativity implicit: it is never stored as a row of ``A``. Decision
variables are indexed 0..n-1 internally and displayed as x1..xn; the slack of
row i is index n+i, displayed as x(n+i+1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence, Union

from .errors import DimensionMismatch, LpvizError

Rational = Fraction

NumberLike = Union[int, float, str, Fraction]


def rat(value: NumberLike) -> Fraction:
    """Coerce ints, "p/q" strings, decimal strings, and floats to Fraction.

    Floats are read through their shortest decimal repr, so ``rat(0.1)`` is
    exactly 1/10 (decimal semantics), not the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as a rational number") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational number")


def rat_str(value: Fraction) -> str:
    """Canonical display form: reduced "p/q", or bare "p" for integers."""
    return str(value)


def _rat_vector(values: Iterable[NumberLike]) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


def default_variable_names(n: int, m: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n + m))


@dataclass(frozen=True)
class LinearProgram:
    """An inequality-form maximization LP with exact rational data."""

    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    variable_names: tuple[str, ...]

    @property
    def n(self) -> int:
        """Number of decision variables."""
        return len(self.c)

    @property
    def m(self) -> int:
        """Number of constraint rows."""
        return len(self.b)

    def var_name(self, index: int) -> str:
        """Display name for internal variable ``index`` (0-based)."""
        return self.variable_names[index]

    def objective_value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((cj * xj for cj, xj in zip(self.c, x)), Fraction(0))

    def row_value(self, i: int, x: Sequence[Fraction]) -> Fraction:
        return sum((aj * xj for aj, xj in zip(self.A[i], x)), Fraction(0))

    def slack_values(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Slack of every row at the point ``x``: b_i - A_i . x."""
        return tuple(self.b[i] - self.row_value(i, x) for i in range(self.m))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        """Exact feasibility of a decision-variable point."""
        if len(x) != self.n:
            raise DimensionMismatch(f"point has {len(x)} coordinates, expected {self.n}")
        if any(xj < 0 for xj in x):
            return False
        return all(s >= 0 for s in self.slack_values(x))

    def full_solution(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """The (n+m)-vector of decision values followed by slack values."""
        return tuple(x) + self.slack_values(x)

    def with_rows(
        self, rows: Iterable[tuple[Sequence[NumberLike], NumberLike]]
    ) -> "LinearProgram":
        """A new program with extra ``a . x <= rhs`` rows appended.

        Slack variables are renumbered; decision-variable names are kept.
        """
        extra = [(_rat_vector(a), rat(rhs)) for a, rhs in rows]
        for a, _ in extra:
            if len(a) != self.n:
                raise DimensionMismatch(
                    f"extra row has {len(a)} coefficients, expected {self.n}"
                )
        A = self.A + tuple(a for a, _ in extra)
        b = self.b + tuple(rhs for _, rhs in extra)
        m = len(b)
        names = self.variable_names[: self.n] + tuple(
            f"x{self.n + i + 1}" for i in range(m)
        )
        return LinearProgram(A=A, b=b, c=self.c, variable_names=names)


def lp_new(
    A: Sequence[Sequence[NumberLike]],
    b: Sequence[NumberLike],
    c: Sequence[NumberLike],
    variable_names: Sequence[str] | None = None,
) -> LinearProgram:
    """Validate and build a :class:`LinearProgram`.

    ``variable_names`` may name just the n decision variables or all n+m
    variables; omitted names default to x1..x(n+m).
    """
    c_vec = _rat_vector(c)
    n = len(c_vec)
    if n < 1:
        raise DimensionMismatch("a program needs at least one decision variable")
    rows = [_rat_vector(row) for row in A]
    m = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatch(
                f"row {i + 1} has {len(row)} coefficients, expected {n}"
            )
    b_vec = _rat_vector(b)
    if len(b_vec) != m:
        raise DimensionMismatch(f"b has {len(b_vec)} entries, expected {m}")

    if variable_names is None:
        names = default_variable_names(n, m)
    else:
        names = tuple(str(s) for s in variable_names)
        if len(names) == n:
            names = names + tuple(f"x{n + i + 1}" for i in range(m))
        elif len(names) != n + m:
            raise DimensionMismatch(
                f"expected {n} or {n + m} variable names, got {len(names)}"
            )
    return LinearProgram(A=tuple(rows), b=b_vec, c=c_vec, variable_names=names)


@dataclass(frozen=True)
class SlackRow:
    """One equality row ``x_slack = constant + coeffs . x_decision``."""

    variable: int
    constant: Fraction
    coeffs: tuple[Fraction, ...]

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return self.constant + sum(
            (cj * xj for cj, xj in zip(self.coeffs, x)), Fraction(0)
        )


@dataclass(frozen=True)
class EqualityForm:
    """Equality form of a program: one slack definition per row."""

    base: LinearProgram
    slack_indices: tuple[int, ...]
    rows: tuple[SlackRow, ...]

    def slack_values(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(row.evaluate(x) for row in self.rows)


def to_equality_form(lp: LinearProgram) -> EqualityForm:
    """Introduce slack x_{n+i} = b_i - A_i . x for every row i."""
    rows = tuple(
        SlackRow(
            variable=lp.n + i,
            constant=lp.b[i],
            coeffs=tuple(-a for a in lp.A[i]),
        )
        for i in range(lp.m)
    )
    return EqualityForm(
        base=lp,
        slack_indices=tuple(range(lp.n, lp.n + lp.m)),
        rows=rows,
    )


def lp_from_obj(obj: object) -> LinearProgram:
    """Build a program from a parsed ``{"A": ..., "b": ..., "c": ...}`` object."""
    if not isinstance(obj, dict):
        raise LpvizError("program input must be a JSON object with keys A, b, c")
    missing = [k for k in ("A", "b", "c") if k not in obj]
    if missing:
        raise LpvizError(f"program input is missing key(s): {', '.join(missing)}")
    return lp_new(obj["A"], obj["b"], obj["c"], obj.get("variable_names"))


def loads_lp(text: str) -> LinearProgram:
    """Parse a program from JSON text.

    Decimal literals keep decimal meaning: every float token is re-read as an
    exact decimal fraction (0.1 -> 1/10).
    """
    try:
        obj = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise LpvizError(f"invalid JSON: {exc}") from exc
    return lp_from_obj(obj)


def load_lp(source: str | IO[str]) -> LinearProgram:
    """Load a program from a JSON file path or an open text file."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            return loads_lp(fh.read())
    return loads_lp(source.read())
