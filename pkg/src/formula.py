# src/formula.py

"""
Piecewise evaluator of the multipartite Ramsey number m_j(nK_2, C_7).

Rows j <= 4 follow the previously published table, rows j >= 5 the
characterisation for j >= 5, n >= 2. Every cell is tagged with the regime
whose extremal coloring witnesses its lower bound.
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from errors import DomainError

logger = logging.getLogger(__name__)

# (n, j) cells where the published j <= 4 table contradicts itself.
AMBIGUOUS_CELLS = {
    (3, 2): "listed as 3, but a bipartite host never contains C_7 (value is infinite)",
    (4, 3): "listed as 3, while the row j=3, n>=3 gives n = 4",
}


class Regime(str, Enum):
    INFINITE_J2 = "infinite-j2"
    VALUE1 = "value-1"
    VALUE2_CLIQUE = "value-2-clique"
    VALUE2_STARS = "value-2-stars"
    VALUE3_CONE = "value-3-cone"
    GENERAL_FORMULA = "general-formula"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RamseyValue:
    """Finite positive integer, or infinite when `t` is None."""
    t: int = None

    def __post_init__(self):
        if self.t is not None and self.t < 1:
            raise ValueError(f"finite Ramsey values are positive, got {self.t}")

    @classmethod
    def finite(cls, t):
        return cls(int(t))

    @classmethod
    def infinite(cls):
        return cls(None)

    @property
    def is_infinite(self):
        return self.t is None

    def __str__(self):
        return "infinite" if self.is_infinite else str(self.t)

    def to_json(self):
        return "infinite" if self.is_infinite else self.t

    @classmethod
    def from_json(cls, data):
        if data == "infinite":
            return cls.infinite()
        return cls.finite(data)


@dataclass(frozen=True)
class FormulaResult:
    """Value of one (j, n) cell plus its regime tag."""
    j: int
    n: int
    value: RamseyValue
    regime: Regime
    ambiguous: bool = False

    def describe(self):
        if self.value is None:
            return "paper-ambiguous"
        return f"{self.value} ({self.regime})"


def ceil_div(a, b):
    return -(-a // b)


def _evaluate(j, n):
    if j == 2:
        return RamseyValue.infinite(), Regime.INFINITE_J2
    if j == 3:
        if n == 4:
            return RamseyValue.finite(3), Regime.GENERAL_FORMULA
        if n >= 3:
            return RamseyValue.finite(n), Regime.GENERAL_FORMULA
        return RamseyValue.finite(ceil_div(n + 1, 2)), Regime.GENERAL_FORMULA
    if j == 4:
        return RamseyValue.finite(ceil_div(n + 1, 2)), Regime.GENERAL_FORMULA
    # j >= 5
    if n == 2:
        if j >= 8:
            return RamseyValue.finite(1), Regime.VALUE1
        # K_{j-3} on four vertices already holds 2K_2 at j = 7
        regime = Regime.VALUE2_STARS if j == 7 else Regime.VALUE2_CLIQUE
        return RamseyValue.finite(2), regime
    if n == 3:
        if j >= 9:
            return RamseyValue.finite(1), Regime.VALUE1
        return RamseyValue.finite(2), Regime.VALUE2_CLIQUE
    if j >= 2 * n + 3:
        return RamseyValue.finite(1), Regime.VALUE1
    if n + 2 <= j:
        return RamseyValue.finite(2), Regime.VALUE2_CLIQUE
    if j in (n, n + 1):
        return RamseyValue.finite(3), Regime.VALUE3_CONE
    return RamseyValue.finite(ceil_div(2 * (n + 1), j)), Regime.GENERAL_FORMULA


def ramsey_value(j, n, strict=False):
    """
    Evaluate m_j(nK_2, C_7).

    Args:
        j: Number of parts (>= 2)
        n: Stripe size (>= 2)
        strict: Report the self-contradictory published cells as ambiguous
            (value None) instead of applying listed-order precedence

    Returns:
        FormulaResult with value and regime tag
    """
    if j < 2 or n < 2:
        raise DomainError(f"m_j(nK_2, C_7) is evaluated for j >= 2 and n >= 2, got j={j}, n={n}")
    value, regime = _evaluate(j, n)
    ambiguous = (n, j) in AMBIGUOUS_CELLS
    if ambiguous and strict:
        return FormulaResult(j, n, None, regime, True)
    return FormulaResult(j, n, value, regime, ambiguous)


def witness_parts(j, n):
    """Slots per part of the lower-bound host K_{j x (m-1)}; 0 for value 1, None if infinite."""
    value = ramsey_value(j, n).value
    return None if value.is_infinite else value.t - 1


def upper_bound_parts(j, n):
    """Slots per part of the host that must admit no good coloring."""
    value = ramsey_value(j, n).value
    if value.is_infinite:
        raise DomainError(f"m_{j}(nK_2, C_7) is infinite; there is no finite upper bound")
    return value.t


@dataclass
class RegimeTable:
    """Grid of formula cells for 2 <= j <= j_max, 2 <= n <= n_max."""
    j_max: int
    n_max: int
    cells: dict

    def rows(self):
        for j in range(2, self.j_max + 1):
            yield j, [self.cells[(j, n)] for n in range(2, self.n_max + 1)]

    def value_matrix(self):
        """Integer matrix indexed [j-2, n-2]; -1 marks infinite, 0 ambiguous."""
        matrix = np.zeros((self.j_max - 1, self.n_max - 1), dtype=np.int64)
        for (j, n), result in self.cells.items():
            if result.value is None:
                continue
            matrix[j - 2, n - 2] = -1 if result.value.is_infinite else result.value.t
        return matrix

    def boundary_cells(self):
        """Cells whose neighbour at j+1 or n+1 carries a different regime."""
        boundary = []
        for (j, n), result in sorted(self.cells.items()):
            for key in ((j + 1, n), (j, n + 1)):
                other = self.cells.get(key)
                if other is not None and other.regime != result.regime:
                    boundary.append(result)
                    break
        return boundary

    def to_tsv(self):
        lines = ["j\\n\t" + "\t".join(str(n) for n in range(2, self.n_max + 1))]
        for j, row in self.rows():
            entries = ["ambiguous" if c.value is None else str(c.value) for c in row]
            lines.append(f"{j}\t" + "\t".join(entries))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({
            "j_max": self.j_max,
            "n_max": self.n_max,
            "cells": [
                {"j": c.j, "n": c.n,
                 "value": None if c.value is None else c.value.to_json(),
                 "regime": str(c.regime), "ambiguous": c.ambiguous}
                for c in sorted(self.cells.values(), key=lambda c: (c.j, c.n))
            ],
            "boundary": [[c.j, c.n] for c in self.boundary_cells()],
        }, indent=2)


def regime_table(j_max, n_max, strict=False):
    """Evaluate every cell of the grid 2..j_max x 2..n_max."""
    if j_max < 2 or n_max < 2:
        raise DomainError("table bounds must be at least 2")
    cells = {(j, n): ramsey_value(j, n, strict=strict)
             for j in range(2, j_max + 1) for n in range(2, n_max + 1)}
    logger.debug("evaluated %d formula cells", len(cells))
    return RegimeTable(j_max, n_max, cells)
