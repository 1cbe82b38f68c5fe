"""The Graham-positive coefficient pipeline: flag splitting, the unique
middle partition, the diagonal split, the value-shifting permutation
algorithm, and the j-coefficient as a product of two Graham sums.

A parallel "numeric" route assembles the same coefficient from windowed
tableau-sum evaluations with x substituted by y; the two routes share no
enumeration code and cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grothendieck import g_eval
from .perms import Permutation, code_shape_flag
from .ring import EvaluationPoint, GrahamMonomial, GrahamSum, omega1_factor
from .shapes import (DeltaSeq, Flag, Partition, SkewShape, delta_seq,
                     diagonal_split, flag_split, is_compatible, psi_flag,
                     skew_props, subpartitions, xi_flag)
from .tableaux import EnumSpec, enumerate_tableaux


def q_of(lam: Partition) -> int:
    """Largest q with (q,q) a cell of lam (0 for the empty partition)."""
    q = 0
    for r in range(1, len(lam) + 1):
        if lam.part(r) >= r:
            q = r
    return q


def unique_nu(lam: Partition, phi: Flag, rho: Partition) -> Partition | None:
    """The only middle partition through which the coefficient can factor;
    None when the coefficient vanishes structurally."""
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi} not compatible with {lam}")
    if not lam.contains(rho):
        raise ValueError(f"rho {rho} not contained in lambda {lam}")
    for r in range(1, len(lam) + 1):
        if rho.part(r) < lam.part(r):
            if rho.part(r) < r <= lam.part(r):
                return None  # diagonal cell in lambda/rho
            if phi.entry(r) == 0:
                return None  # cell in a zero-flag row
    nu = []
    for r in range(1, len(lam) + 1):
        nu.append(lam.part(r) if phi.entry(r) <= 0 else rho.part(r))
    nu_p = Partition(nu)
    assert nu_p.contains(rho) and lam.contains(nu_p)
    phi_minus, _ = flag_split(phi)
    assert is_compatible(nu_p, Flag(phi_minus.bounds[:len(nu_p)]))
    return nu_p


def _raw_psi(lam: Partition, phi: Flag) -> Flag:
    """min(i - lam_i, phi_i) without the compatibility gate; the result is
    weakly increasing for every weakly increasing flag."""
    return Flag(tuple(min(i - lam.part(i), phi.entry(i))
                      for i in range(1, len(lam) + 1)))


def _pi_sequence(lam: Partition, phi: Flag) -> list[Permutation]:
    psi = _raw_psi(lam, phi)
    deltas = [phi.entry(i) - psi.entry(i) for i in range(1, len(lam) + 1)]
    ell = len(lam)
    n = max([1] + [phi.entry(i) for i in range(1, ell + 1)] + deltas)
    seq = [Permutation.identity()]
    for i in range(1, ell + 1):
        prev = seq[-1]
        if psi.entry(i) <= 0:
            seq.append(prev)
            continue
        d = deltas[i - 1]
        line = [v for v in prev.one_line(1, n) if v > d]
        # values 1..d move to positions psi_i+1..phi_i, others keep order
        lo_pos = psi.entry(i)  # 0-based index of first moved value
        line = line[:lo_pos] + list(range(1, d + 1)) + line[lo_pos:]
        seq.append(Permutation.from_one_line(line, 1))
    return seq


def pi_algorithm(lam: Partition, phi: Flag) -> list[Permutation]:
    """The value-shifting permutations pi_0..pi_ell for a nonnegative flag."""
    if any(b < 0 for b in phi):
        raise ValueError(f"flag {phi} has a negative entry")
    psi_flag(lam, phi)  # validates compatibility
    delta_seq(lam, phi)
    return _pi_sequence(lam, phi)


def chi_flags(lam: Partition, phi: Flag) -> list[Flag]:
    """Interpolating flags: chi^(i) = (psi_1..psi_i, phi_{i+1}..phi_ell)."""
    if any(b < 0 for b in phi):
        raise ValueError(f"flag {phi} has a negative entry")
    psi = psi_flag(lam, phi)
    ell = len(lam)
    return [Flag(psi.bounds[:i] + phi.bounds[i:]) for i in range(ell + 1)]


def _disconnected_inners(nu: Partition):
    for mu in subpartitions(nu):
        if skew_props(SkewShape(nu, mu)).is_disconnected:
            yield mu


def _positive_spec(shape: SkewShape, flag: Flag) -> EnumSpec:
    hi = max([1] + list(flag.bounds))
    return EnumSpec(shape, flag, "positive", (1, hi))


def j_plus(lam: Partition, phi_plus: Flag, nu: Partition) -> GrahamSum:
    """Sum over inner shapes mu <= nu with nu/mu disconnected; each summand
    is assembled from the diagonal split of lambda/mu: cells above the
    diagonal give factors (i, i+c-r), cells below give (pi(i), i+c-r)."""
    if any(b < 0 for b in phi_plus):
        raise ValueError(f"flag {phi_plus} has a negative entry")
    if len(phi_plus) != len(lam):
        raise ValueError(f"flag length {len(phi_plus)} != partition "
                         f"length {len(lam)}")
    if not lam.contains(nu):
        raise ValueError(f"nu {nu} not contained in lambda {lam}")
    psi = _raw_psi(lam, phi_plus)
    pi = _pi_sequence(lam, phi_plus)[-1]
    shift = nu.size - lam.size
    out = GrahamSum.zero()
    for mu in _disconnected_inners(nu):
        shape = SkewShape(lam, mu)
        props = skew_props(shape)
        if props.has_diagonal_cell:
            continue
        if any(phi_plus.entry(r) == 0 for r in props.rows_occupied):
            continue
        upper, lower = diagonal_split(shape)
        upper_monos = []
        for t in enumerate_tableaux(_positive_spec(upper, phi_plus)):
            factors = [(i, i + c - r) for (r, c), cell in t.cells()
                       for i in cell]
            upper_monos.append(GrahamMonomial(tuple(factors), shift))
        lower_monos = []
        for t in enumerate_tableaux(_positive_spec(lower, psi)):
            factors = [(pi(i), i + c - r) for (r, c), cell in t.cells()
                       for i in cell]
            lower_monos.append(GrahamMonomial(tuple(factors), 0))
        for mu_u in upper_monos:
            for mu_d in lower_monos:
                out.add_term(mu_u * mu_d)
    return GrahamSum(out.terms)


def j_minus(nu: Partition, phi_minus: Flag, rho: Partition) -> GrahamSum:
    """Computed through the conjugate-side positive machinery and the
    variable reversal omega_1 (Type 1 factors become Type 2)."""
    if any(b > 0 for b in phi_minus):
        raise ValueError(f"flag {phi_minus} has a positive entry")
    if len(phi_minus) != len(nu):
        raise ValueError(f"flag length {len(phi_minus)} != partition "
                         f"length {len(nu)}")
    if not nu.contains(rho):
        raise ValueError(f"rho {rho} not contained in nu {nu}")
    xi = xi_flag(nu, phi_minus)
    inner = j_plus(nu.conjugate(), xi, rho.conjugate())
    out = GrahamSum.zero()
    for m, c in inner.terms.items():
        mapped = GrahamMonomial(tuple(omega1_factor(f) for f in m.factors),
                                m.beta_shift)
        out.add_term(mapped, c)
    return GrahamSum(out.terms)


@dataclass(frozen=True)
class PipelineContext:
    lam: Partition
    phi: Flag
    rho: Partition
    q: int
    nu: Partition | None
    phi_minus: Flag
    phi_plus: Flag
    psi: Flag
    delta: DeltaSeq
    pi_seq: tuple[Permutation, ...]
    chi_seq: tuple[Flag, ...]
    case: str  # "zero" | "nonpositive" | "nonnegative" | "both"


def build_context(lam: Partition, phi: Flag, rho: Partition) -> PipelineContext:
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi} not compatible with {lam}")
    if not lam.contains(rho):
        raise ValueError(f"rho {rho} not contained in lambda {lam}")
    q = q_of(lam)
    nu = unique_nu(lam, phi, rho)
    phi_minus, phi_plus = flag_split(phi)
    psi = psi_flag(lam, phi_plus)
    delta = delta_seq(lam, phi_plus)
    pi_seq = tuple(pi_algorithm(lam, phi_plus))
    chi_seq = tuple(chi_flags(lam, phi_plus))
    if nu is None:
        case = "zero"
    elif q == 0:
        case = "both"
    elif phi.entry(q) < 0:
        case = "nonpositive"
    elif phi.entry(q) > 0:
        case = "nonnegative"
    else:
        case = "both"
    return PipelineContext(lam, phi, rho, q, nu, phi_minus, phi_plus,
                           psi, delta, pi_seq, chi_seq, case)


def j_coefficient(lam: Partition, phi: Flag, rho: Partition) -> GrahamSum:
    """The normalized Graham-positive coefficient: every monomial's total
    beta exponent equals its factor count after multiplying by
    beta^{|lam| - |rho|}."""
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi} not compatible with {lam}")
    if not lam.contains(rho):
        return GrahamSum.zero()
    nu = unique_nu(lam, phi, rho)
    if nu is None:
        return GrahamSum.zero()
    phi_minus, phi_plus = flag_split(phi)
    raw = j_minus(nu, Flag(phi_minus.bounds[:len(nu)]), rho) \
        * j_plus(lam, phi_plus, nu)
    normalized = raw.shifted(lam.size - rho.size)
    assert all(m.beta_shift == 0 for m in normalized.terms)
    return normalized


def j_of_permutation(w: Permutation, rho: Partition) -> GrahamSum:
    if not w.is_vexillary():
        raise ValueError(
            f"permutation {w} is not vexillary; the coefficient is not "
            "Graham-positive in general (all three factor types can occur)")
    csf = code_shape_flag(w)
    return j_coefficient(csf.shape, csf.flag, rho)


# ---------------------------------------------------------------------------
# Numeric route: the same coefficient from windowed tableau-sum evaluation.


def j_plus_numeric(lam: Partition, phi_plus: Flag, nu: Partition,
                   point: EvaluationPoint) -> int:
    """Sum over mu of beta^{|nu|-|mu|} G^{phi+}_{lam/mu}(x_+; y) at x := y,
    with no structural shortcuts (vanishing terms must vanish numerically)."""
    p = point.prime
    pt = point.with_x_to_y()
    total = 0
    for mu in _disconnected_inners(nu):
        term = pow(point.beta, nu.size - mu.size, p)
        term = term * g_eval(SkewShape(lam, mu), phi_plus, "positive", pt) % p
        total = (total + term) % p
    return total


def j_minus_numeric(nu: Partition, phi_minus: Flag, rho: Partition,
                    point: EvaluationPoint) -> int:
    xi = xi_flag(nu, phi_minus)
    return j_plus_numeric(nu.conjugate(), xi, rho.conjugate(), point.omega1())


def j_numeric(lam: Partition, phi: Flag, rho: Partition,
              point: EvaluationPoint) -> int:
    """Raw (unnormalized) coefficient through the unique middle partition,
    with both halves evaluated by direct enumeration."""
    if not lam.contains(rho):
        return 0
    nu = unique_nu(lam, phi, rho)
    if nu is None:
        return 0
    phi_minus, phi_plus = flag_split(phi)
    minus = j_minus_numeric(nu, Flag(phi_minus.bounds[:len(nu)]), rho, point)
    plus = j_plus_numeric(lam, phi_plus, nu, point)
    return minus * plus % point.prime
