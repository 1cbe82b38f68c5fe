"""Finite-support permutations of the integers.

A permutation is stored as the image sequence of a window [lo, hi] and acts
as the identity outside it.  The canonical window is the minimal interval
containing the support, so structural equality is semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations as iter_combinations
from itertools import permutations as iter_permutations

from .shapes import Flag, Partition, flags_equivalent, is_compatible


@dataclass(frozen=True)
class Permutation:
    lo: int = 0
    images: tuple[int, ...] = ()

    def __post_init__(self):
        lo, images = self.lo, tuple(self.images)
        hi = lo + len(images) - 1
        if sorted(images) != list(range(lo, hi + 1)):
            raise ValueError(f"images {images} not a permutation of [{lo},{hi}]")
        # shrink to the minimal window containing the support
        while images and images[0] == lo:
            images = images[1:]
            lo += 1
        while images and images[-1] == lo + len(images) - 1:
            images = images[:-1]
        if not images:
            lo = 0
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def from_one_line(cls, images, base: int) -> "Permutation":
        return cls(base, tuple(images))

    @classmethod
    def s(cls, i: int) -> "Permutation":
        """The simple transposition of i and i+1."""
        return cls(i, (i + 1, i))

    @classmethod
    def from_word(cls, word) -> "Permutation":
        w = cls.identity()
        for i in word:
            w = w.times_s(i)
        return w

    @property
    def window_lo(self) -> int:
        return self.lo

    @property
    def window_hi(self) -> int:
        return self.lo + len(self.images) - 1

    def __call__(self, k: int) -> int:
        if self.lo <= k <= self.window_hi:
            return self.images[k - self.lo]
        return k

    def __str__(self):
        if not self.images:
            return "identity"
        return f"[{self.lo}:{','.join(map(str, self.images))}]"

    def one_line(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self(k) for k in range(lo, hi + 1))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k for k in range(self.lo, self.window_hi + 1)
                         if self(k) != k)

    def is_identity(self) -> bool:
        return not self.images

    def inverse(self) -> "Permutation":
        if not self.images:
            return self
        inv = [0] * len(self.images)
        for k in range(self.lo, self.window_hi + 1):
            inv[self(k) - self.lo] = k
        return Permutation(self.lo, tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (u*v)(k) = u(v(k))."""
        if not self.images:
            return other
        if not other.images:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.window_hi, other.window_hi)
        return Permutation(lo, tuple(self(other(k)) for k in range(lo, hi + 1)))

    def times_s(self, i: int) -> "Permutation":
        """Right multiplication by the simple transposition s_i."""
        lo = min(self.lo, i)
        hi = max(self.window_hi, i + 1)
        line = list(self.one_line(lo, hi))
        line[i - lo], line[i + 1 - lo] = line[i + 1 - lo], line[i - lo]
        return Permutation(lo, tuple(line))

    def length(self) -> int:
        n = len(self.images)
        return sum(1 for a in range(n) for b in range(a + 1, n)
                   if self.images[a] > self.images[b])

    def descents(self) -> list[int]:
        return [k for k in range(self.lo, self.window_hi)
                if self(k) > self(k + 1)]

    def reduced_word(self) -> tuple[int, ...]:
        word = []
        w = self
        while not w.is_identity():
            i = w.descents()[0]
            word.append(i)
            w = w.times_s(i)
        return tuple(reversed(word))

    def is_vexillary(self) -> bool:
        """No i<j<k<l in the window with w(j) < w(i) < w(l) < w(k)."""
        line = self.images
        n = len(line)
        for a in range(n):
            for b in range(a + 1, n):
                if line[b] >= line[a]:
                    continue
                for c in range(b + 1, n):
                    if line[c] <= line[a]:
                        continue
                    for d in range(c + 1, n):
                        if line[a] < line[d] < line[c]:
                            return False
        return True

    def neg(self) -> "Permutation":
        """The automorphism sending s_i to s_{-i}: (neg w)(k) = 1 - w(1-k)."""
        if not self.images:
            return self
        lo = 1 - self.window_hi
        hi = 1 - self.lo
        return Permutation(lo, tuple(1 - self(1 - k) for k in range(lo, hi + 1)))

    def iota(self, n: int = 1) -> "Permutation":
        """The shift automorphism sending s_i to s_{i+n}."""
        if not self.images:
            return self
        return Permutation(self.lo + n, tuple(v + n for v in self.images))


@dataclass(frozen=True)
class CodeShapeFlag:
    code: dict
    shape: Partition
    flag: Flag | None


def code_of(w: Permutation) -> dict[int, int]:
    """The code c_k(w) = #{j > k : w(k) > w(j)}, nonzero entries only."""
    code = {}
    for k in range(w.lo, w.window_hi + 1):
        wk = w(k)
        c = sum(1 for j in range(k + 1, w.window_hi + 1) if wk > w(j))
        if c:
            code[k] = c
    return code


def shape_of(w: Permutation) -> Partition:
    return Partition(tuple(sorted(code_of(w).values(), reverse=True)))


def code_shape_flag(w: Permutation) -> CodeShapeFlag:
    """Code, shape, and (for vexillary w) the flag of w.

    p_k(w) = min{j > k : w(k) > w(j)} - 1; the flag collects the p_k for
    rows with c_k > 0, sorted increasingly.
    """
    code = code_of(w)
    shape = Partition(tuple(sorted(code.values(), reverse=True)))
    if not w.is_vexillary():
        raise ValueError(f"permutation {w} is not vexillary; flag undefined")
    ps = []
    for k, c in code.items():
        j = next(j for j in range(k + 1, w.window_hi + 1) if w(k) > w(j))
        ps.append(j - 1)
    flag = Flag(tuple(sorted(ps)))
    return CodeShapeFlag(code, shape, flag)


def from_partition(lam: Partition) -> Permutation:
    """The 0-Grassmannian permutation w_lam."""
    if not len(lam):
        return Permutation.identity()
    lamc = lam.conjugate()
    lo = 1 - len(lam)
    hi = lam.part(1)
    images = []
    for i in range(lo, hi + 1):
        if i <= 0:
            images.append(i + lam.part(1 - i))
        else:
            images.append(i - lamc.part(i))
    return Permutation(lo, tuple(images))


def _from_code(lo: int, codes) -> Permutation:
    """The permutation of the window starting at lo with the given code."""
    avail = list(range(lo, lo + len(codes)))
    return Permutation(lo, tuple(avail.pop(c) for c in codes))


def from_shape_flag(lam: Partition, phi: Flag) -> Permutation:
    """A vexillary permutation with the given shape and a flag equivalent to
    phi, found by bounded search over a window derived from the inputs.

    Candidates are enumerated through their codes: the parts of lam are
    placed at some subset of window positions and the permutation is rebuilt
    from the resulting code, so only O(C(n, len(lam))) cases arise instead
    of n!.  The window grows upward as needed; an image can exceed max(phi)
    by up to lam_1.
    """
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi} not compatible with {lam}")
    if not len(lam):
        return Permutation.identity()
    lo = min(phi) - len(lam)
    ell = len(lam)
    for hi in range(max(phi) + 1, max(phi) + lam.part(1) + 1):
        positions = range(lo, hi + 1)
        for spots in iter_combinations(positions, ell):
            for parts in set(iter_permutations(lam.parts)):
                if any(c > hi - k for k, c in zip(spots, parts)):
                    continue
                codes = [0] * (hi - lo + 1)
                for k, c in zip(spots, parts):
                    codes[k - lo] = c
                w = _from_code(lo, tuple(codes))
                if not w.is_vexillary():
                    continue
                csf = code_shape_flag(w)
                if csf.shape == lam and len(csf.flag) == len(phi) \
                        and flags_equivalent(lam, csf.flag, phi):
                    return w
    raise ValueError(f"no vexillary permutation found for {lam}, {phi}")


def hecke_product(u: Permutation, v: Permutation) -> Permutation:
    """Demazure product: fold v's reduced word into u."""
    w = u
    for i in v.reduced_word():
        if w(i) < w(i + 1):
            w = w.times_s(i)
    return w
