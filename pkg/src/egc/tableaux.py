"""Set-valued semistandard tableaux: enumeration, weights, the split/merge
bijection, and the row-strict-decreasing view with omega_1."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import EvaluationPoint
from .shapes import Flag, Partition, SkewShape, skew_props


def _validate_columns_weak_rows(shape: SkewShape, entry):
    """Shared semistandard check: weak rows, strict columns, at set level."""
    for r in range(1, len(shape.outer) + 1):
        for c in shape.row_cols(r):
            cell = entry(r, c)
            if not cell:
                raise ValueError(f"empty entry at {(r, c)}")
            if tuple(sorted(set(cell))) != tuple(cell):
                raise ValueError(f"entry at {(r, c)} not a sorted set: {cell}")
            if c + 1 in shape.row_cols(r) and max(cell) > min(entry(r, c + 1)):
                raise ValueError(f"row violation at {(r, c)}")
            if r + 1 <= len(shape.outer) and c in shape.row_cols(r + 1) \
                    and max(cell) >= min(entry(r + 1, c)):
                raise ValueError(f"column violation at {(r, c)}")


@dataclass(frozen=True)
class SetValuedTableau:
    shape: SkewShape
    rows: tuple[tuple[tuple[int, ...], ...], ...]  # rows[r-1][k] = k-th cell of row r

    def __post_init__(self):
        rows = tuple(tuple(tuple(cell) for cell in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(self.shape.outer):
            raise ValueError("row count does not match shape")
        for r in range(1, len(rows) + 1):
            if len(rows[r - 1]) != len(self.shape.row_cols(r)):
                raise ValueError(f"cell count mismatch in row {r}")
        _validate_columns_weak_rows(self.shape, self.entry)

    def entry(self, r: int, c: int) -> tuple[int, ...]:
        cols = self.shape.row_cols(r)
        if c not in cols:
            raise KeyError(f"cell {(r, c)} not in shape {self.shape}")
        return self.rows[r - 1][c - cols.start]

    def cells(self):
        for r in range(1, len(self.shape.outer) + 1):
            for c in self.shape.row_cols(r):
                yield (r, c), self.entry(r, c)

    @property
    def value_count(self) -> int:
        return sum(len(cell) for _, cell in self.cells())

    def to_text(self) -> str:
        lines = []
        for r in range(1, len(self.shape.outer) + 1):
            cells = ["."] * self.shape.inner.part(r)
            cells += ["{" + ",".join(map(str, cell)) + "}"
                      for cell in self.rows[r - 1]]
            lines.append(" ".join(cells))
        return " ; ".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "SetValuedTableau":
        outer, inner, rows = [], [], []
        for line in text.split(";"):
            cells = line.split()
            pad = sum(1 for c in cells if c == ".")
            if any(c == "." for c in cells[pad:]):
                raise ValueError("inner cells must be a prefix of the row")
            row = []
            for c in cells[pad:]:
                if not (c.startswith("{") and c.endswith("}")):
                    raise ValueError(f"malformed cell {c!r}")
                row.append(tuple(int(v) for v in c[1:-1].split(",")))
            outer.append(len(cells))
            inner.append(pad)
            rows.append(tuple(row))
        shape = SkewShape(Partition(outer), Partition(inner))
        return cls(shape, tuple(rows))


@dataclass(frozen=True)
class RowStrictDecreasingTableau:
    shape: SkewShape
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(tuple(cell) for cell in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(self.shape.outer):
            raise ValueError("row count does not match shape")
        for r in range(1, len(rows) + 1):
            if len(rows[r - 1]) != len(self.shape.row_cols(r)):
                raise ValueError(f"cell count mismatch in row {r}")
        for (r, c), cell in self.cells():
            if not cell:
                raise ValueError(f"empty entry at {(r, c)}")
            if tuple(sorted(set(cell))) != tuple(cell):
                raise ValueError(f"entry at {(r, c)} not a sorted set: {cell}")
            if c + 1 in self.shape.row_cols(r) \
                    and min(cell) <= max(self.entry(r, c + 1)):
                raise ValueError(f"row must strictly decrease at {(r, c)}")
            if r + 1 <= len(self.shape.outer) and c in self.shape.row_cols(r + 1) \
                    and min(cell) < max(self.entry(r + 1, c)):
                raise ValueError(f"column must weakly decrease at {(r, c)}")

    def entry(self, r: int, c: int) -> tuple[int, ...]:
        cols = self.shape.row_cols(r)
        if c not in cols:
            raise KeyError(f"cell {(r, c)} not in shape {self.shape}")
        return self.rows[r - 1][c - cols.start]

    def cells(self):
        for r in range(1, len(self.shape.outer) + 1):
            for c in self.shape.row_cols(r):
                yield (r, c), self.entry(r, c)

    @property
    def value_count(self) -> int:
        return sum(len(cell) for _, cell in self.cells())


@dataclass(frozen=True)
class EnumSpec:
    shape: SkewShape
    flag: Flag | None = None
    sign: str = "any"  # positive | nonpositive | any
    window: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if self.sign not in ("positive", "nonpositive", "any"):
            raise ValueError(f"bad sign restriction {self.sign!r}")
        lo, hi = self.window
        if lo > hi:
            raise ValueError(f"empty value window {self.window}")
        if self.flag is not None:
            occupied = skew_props(self.shape).rows_occupied
            if occupied and len(self.flag) < max(occupied):
                raise ValueError("flag shorter than the occupied rows")


@lru_cache(maxsize=None)
def _subsets(lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    """Nonempty subsets of [lo, hi] as sorted tuples, in lexicographic order."""
    if lo > hi:
        return ()
    out = []
    for a in range(lo, hi + 1):
        out.append((a,))
        out.extend((a,) + rest for rest in _subsets(a + 1, hi))
    # generated per leading element; sort for global lex order
    return tuple(sorted(out))


def cell_bounds(spec: EnumSpec, r: int) -> tuple[int, int]:
    """Value range for cells in row r before neighbor constraints."""
    lo, hi = spec.window
    if spec.sign == "positive":
        lo = max(lo, 1)
    elif spec.sign == "nonpositive":
        hi = min(hi, 0)
    if spec.flag is not None:
        hi = min(hi, spec.flag.entry(r))
    return lo, hi


def enumerate_tableaux(spec: EnumSpec):
    """All admissible fillings, row-major, lexicographic on entry sets."""
    shape = spec.shape
    nrows = len(shape.outer)
    cells = shape.cells()
    if not cells:
        yield SetValuedTableau(shape, tuple(() for _ in range(nrows)))
        return

    def fill(idx: int, grid: dict):
        if idx == len(cells):
            rows = tuple(tuple(grid[(r, c)] for c in shape.row_cols(r))
                         for r in range(1, nrows + 1))
            yield SetValuedTableau(shape, rows)
            return
        r, c = cells[idx]
        lo, hi = cell_bounds(spec, r)
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)][-1])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)][-1] + 1)
        for cell in _subsets(lo, hi):
            grid[(r, c)] = cell
            yield from fill(idx + 1, grid)
        grid.pop((r, c), None)

    yield from fill(0, {})


def admits(spec: EnumSpec, t: SetValuedTableau) -> bool:
    """Whether t would be yielded by enumerate_tableaux(spec).

    Semistandardness is already enforced by the tableau type, so membership
    reduces to the per-cell value bounds; this avoids enumerating specs
    whose full tableau count is astronomical.
    """
    if t.shape != spec.shape:
        return False
    for (r, _), cell in t.cells():
        lo, hi = cell_bounds(spec, r)
        if cell[0] < lo or cell[-1] > hi:
            return False
    return True


def weight_eval(t: SetValuedTableau, point: EvaluationPoint) -> int:
    """beta^{-|shape|} * prod over cell values i of beta*(x_i (-) y_{i+c-r})."""
    p = point.prime
    val = pow(point.beta, t.value_count - t.shape.size, p)
    for (r, c), cell in t.cells():
        for i in cell:
            val = val * point.ominus(point.x_val(i), point.y_val(i + c - r)) % p
    return val


def r_weight_eval(t: RowStrictDecreasingTableau, point: EvaluationPoint) -> int:
    """Same beta normalization, with cell-value factors y_{i+c-r} (-) x_i."""
    p = point.prime
    val = pow(point.beta, t.value_count - t.shape.size, p)
    for (r, c), cell in t.cells():
        for i in cell:
            val = val * point.ominus(point.y_val(i + c - r), point.x_val(i)) % p
    return val


def split(t: SetValuedTableau) -> tuple[SetValuedTableau, SetValuedTableau]:
    """Separate a straight-shape tableau into its nonpositive part (straight
    shape nu) and positive part (skew shape lambda/mu), with mu <= nu."""
    if len(t.shape.inner):
        raise ValueError("split requires a straight shape")
    lam = t.shape.outer
    nu_rows, mu_rows = [], []
    minus_rows, plus_rows = [], []
    for r in range(1, len(lam) + 1):
        row = t.rows[r - 1]
        neg = [tuple(v for v in cell if v <= 0) for cell in row]
        pos = [tuple(v for v in cell if v >= 1) for cell in row]
        nu_rows.append(sum(1 for cell in neg if cell))
        mu_rows.append(sum(1 for cell in pos if not cell))
        minus_rows.append(tuple(cell for cell in neg if cell))
        plus_rows.append(tuple(cell for cell in pos if cell))
    nu, mu = Partition(nu_rows), Partition(mu_rows)
    tminus = SetValuedTableau(SkewShape(nu), tuple(minus_rows[:len(nu)]))
    tplus = SetValuedTableau(SkewShape(lam, mu), tuple(plus_rows))
    assert skew_props(SkewShape(nu, mu)).is_disconnected
    return tminus, tplus


def merge(tminus: SetValuedTableau, tplus: SetValuedTableau) -> SetValuedTableau:
    nu = tminus.shape.outer
    lam, mu = tplus.shape.outer, tplus.shape.inner
    if len(tminus.shape.inner):
        raise ValueError("nonpositive part must have straight shape")
    if any(max(cell) > 0 for _, cell in tminus.cells()):
        raise ValueError("nonpositive part has a positive value")
    if any(min(cell) < 1 for _, cell in tplus.cells()):
        raise ValueError("positive part has a nonpositive value")
    if not nu.contains(mu):
        raise ValueError("inner shape of the positive part not contained in nu")
    if not lam.contains(nu):
        raise ValueError("nu not contained in the outer shape")
    if not skew_props(SkewShape(nu, mu)).is_disconnected:
        raise ValueError("nu/mu is not disconnected")
    rows = []
    for r in range(1, len(lam) + 1):
        row = []
        for c in range(1, lam.part(r) + 1):
            vals = ()
            if c <= nu.part(r):
                vals += tminus.entry(r, c)
            if c > mu.part(r):
                vals += tplus.entry(r, c)
            row.append(tuple(sorted(set(vals))))
        rows.append(tuple(row))
    return SetValuedTableau(SkewShape(lam), tuple(rows))


def omega1_tableau(t: SetValuedTableau) -> RowStrictDecreasingTableau:
    """Conjugate the shape, then replace each value i by 1-i."""
    shape = t.shape.conjugate()
    rows = []
    for r in range(1, len(shape.outer) + 1):
        rows.append(tuple(tuple(sorted(1 - v for v in t.entry(c, r)))
                          for c in shape.row_cols(r)))
    return RowStrictDecreasingTableau(shape, tuple(rows))


def omega1_inverse(t: RowStrictDecreasingTableau) -> SetValuedTableau:
    shape = t.shape.conjugate()
    rows = []
    for r in range(1, len(shape.outer) + 1):
        rows.append(tuple(tuple(sorted(1 - v for v in t.entry(c, r)))
                          for c in shape.row_cols(r)))
    return SetValuedTableau(shape, tuple(rows))
