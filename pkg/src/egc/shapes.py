"""Partitions, flags, skew shapes, and the flag-derived sequences.

Partitions are stored without trailing zeros.  Flags are weakly increasing
integer sequences of length exactly ell(lambda); callers pad or truncate
explicitly.  The empty partition and empty skew shape are legal everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def part(self, i: int) -> int:
        """Row length at 1-based index i, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(
            sum(1 for p in self.parts if p >= c)
            for c in range(1, self.parts[0] + 1)))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(1, len(self) + 1)
                for c in range(1, self.part(r) + 1)]


def subpartitions(lam: Partition):
    """All partitions mu contained in lam, in a deterministic order."""
    ell = len(lam)
    if ell == 0:
        yield Partition()
        return
    for rows in product(*[range(lam.part(i), -1, -1) for i in range(1, ell + 1)]):
        if all(rows[i] >= rows[i + 1] for i in range(ell - 1)):
            yield Partition(rows)


@dataclass(frozen=True)
class Flag:
    bounds: tuple[int, ...] = ()

    def __post_init__(self):
        bounds = tuple(self.bounds)
        if any(bounds[i] > bounds[i + 1] for i in range(len(bounds) - 1)):
            raise ValueError(f"flag must weakly increase: {bounds}")
        object.__setattr__(self, "bounds", bounds)

    def __len__(self):
        return len(self.bounds)

    def __iter__(self):
        return iter(self.bounds)

    def __str__(self):
        return "(" + ",".join(map(str, self.bounds)) + ")"

    def entry(self, i: int) -> int:
        if not 1 <= i <= len(self.bounds):
            raise IndexError(f"flag index {i} out of range 1..{len(self.bounds)}")
        return self.bounds[i - 1]


@dataclass(frozen=True)
class DeltaSeq:
    values: tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(self.values)
        if any(v < 0 for v in values):
            raise ValueError(f"delta entries must be nonnegative: {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"delta must weakly decrease: {values}")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def entry(self, i: int) -> int:
        return self.values[i - 1]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def __str__(self):
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_cols(self, r: int) -> range:
        return range(self.inner.part(r) + 1, self.outer.part(r) + 1)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(1, len(self.outer) + 1)
                for c in self.row_cols(r)]

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())


@dataclass(frozen=True)
class SkewProps:
    has_diagonal_cell: bool
    is_disconnected: bool
    rows_occupied: frozenset[int]


def skew_props(shape: SkewShape) -> SkewProps:
    cells = set(shape.cells())
    diag = any(r == c for r, c in cells)
    connected = any((r, c + 1) in cells or (r + 1, c) in cells for r, c in cells)
    rows = frozenset(r for r, _ in cells)
    return SkewProps(diag, not connected, rows)


def diagonal_split(shape: SkewShape) -> tuple[SkewShape, SkewShape]:
    """Separate a diagonal-free skew shape into its strictly-upper and
    strictly-lower parts, each again a skew shape of the same outer partition."""
    lam, mu = shape.outer, shape.inner
    if skew_props(shape).has_diagonal_cell:
        raise ValueError(f"shape {shape} has a diagonal cell")
    mu_up = []
    mu_down = []
    for r in range(1, len(lam) + 1):
        lr, mr = lam.part(r), mu.part(r)
        # upper part keeps cells with c > r, lower part cells with c < r
        mu_up.append(mr if lr > r else lr)
        mu_down.append(mr if mr < min(lr, r) else lr)
    upper = SkewShape(lam, Partition(mu_up))
    lower = SkewShape(lam, Partition(mu_down))
    up_cells, down_cells = set(upper.cells()), set(lower.cells())
    assert up_cells.isdisjoint(down_cells)
    assert up_cells | down_cells == set(shape.cells())
    assert all(r < c for r, c in up_cells) and all(r > c for r, c in down_cells)
    return upper, lower


def is_compatible(lam: Partition, phi: Flag) -> bool:
    if len(phi) != len(lam):
        raise ValueError(f"flag length {len(phi)} != partition length {len(lam)}")
    return all(
        phi.entry(i + 1) - phi.entry(i) <= lam.part(i) - lam.part(i + 1) + 1
        for i in range(1, len(lam)))


def _require_compatible(lam: Partition, phi: Flag):
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi} not compatible with {lam}")


def flag_split(phi: Flag) -> tuple[Flag, Flag]:
    minus = Flag(tuple(min(b, 0) for b in phi))
    plus = Flag(tuple(max(b, 0) for b in phi))
    return minus, plus


def psi_flag(lam: Partition, phi: Flag) -> Flag:
    _require_compatible(lam, phi)
    return Flag(tuple(min(i - lam.part(i), phi.entry(i))
                      for i in range(1, len(lam) + 1)))


def delta_seq(lam: Partition, phi: Flag) -> DeltaSeq:
    _require_compatible(lam, phi)
    psi = psi_flag(lam, phi)
    return DeltaSeq(tuple(phi.entry(i) - psi.entry(i)
                          for i in range(1, len(lam) + 1)))


def xi_flag(nu: Partition, phi_minus: Flag) -> Flag:
    """Flag for nu' given a nonpositive flag for nu: xi_i = -phi_minus[nu'_i]."""
    if any(b > 0 for b in phi_minus):
        raise ValueError(f"flag {phi_minus} has a positive entry")
    if len(phi_minus) < len(nu):
        raise ValueError(f"flag {phi_minus} shorter than partition {nu}")
    nuc = nu.conjugate()
    raw = tuple(-phi_minus.entry(nuc.part(i)) for i in range(1, len(nuc) + 1))
    return Flag(raw)  # validation rejects non-monotone output


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    if lam.size != mu.size:
        return False
    ell = max(len(lam), len(mu))
    a = b = 0
    for i in range(1, ell + 1):
        a += lam.part(i)
        b += mu.part(i)
        if a > b:
            return False
    return True


def flag_caps(lam: Partition, phi: Flag) -> dict[tuple[int, int], int]:
    """Per-cell effective upper bound on entries implied by a flag.

    cap(r,c) = min(phi_r, cap(r+1,c) - 1) when the cell below is present;
    two flags bound the same tableau set iff their caps agree.
    """
    if len(phi) < len(lam):
        raise ValueError(f"flag {phi} shorter than partition {lam}")
    caps: dict[tuple[int, int], int] = {}
    for r in range(len(lam), 0, -1):
        for c in range(1, lam.part(r) + 1):
            cap = phi.entry(r)
            if (r + 1, c) in caps:
                cap = min(cap, caps[(r + 1, c)] - 1)
            caps[(r, c)] = cap
    return caps


def flags_equivalent(lam: Partition, phi1: Flag, phi2: Flag) -> bool:
    return flag_caps(lam, phi1) == flag_caps(lam, phi2)


def compatible_flags(lam: Partition, lo: int, hi: int):
    """All flags compatible with lam whose entries lie in [lo, hi]."""
    ell = len(lam)
    if ell == 0:
        yield Flag()
        return

    def extend(prefix):
        i = len(prefix)
        if i == ell:
            yield Flag(prefix)
            return
        lower = prefix[-1] if prefix else lo
        upper = hi
        if prefix:
            upper = min(upper, prefix[-1] + lam.part(i) - lam.part(i + 1) + 1)
        for b in range(lower, upper + 1):
            yield from extend(prefix + (b,))

    yield from extend(())
