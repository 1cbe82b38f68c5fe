"""Randomized and exhaustive verification suites for the identities behind
the coefficient pipeline: the split/merge decomposition, the value-shifting
permutation identity, backstable comparisons, the structural theorem on
coefficients, the omega_1 weight identity, and the operator algebra.

Each suite draws its randomness from a named stream derived from one seed,
walks its instances in a canonical order, and reports failures as strings
rather than raising, so a run always produces a complete report.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations as iter_permutations

from .grothendieck import ORBIT_PRIME, g_eval, grothendieck_poly, gvex_check
from .perms import Permutation, from_partition
from .pipeline import (_disconnected_inners, build_context, chi_flags,
                       j_coefficient, j_numeric, pi_algorithm)
from .ring import (DEFAULT_PRIME, EvaluationPoint, SparsePoly, eval_graham,
                   factor_type, isobaric, ominus, omega1_factor, prec,
                   sample_point)
from .shapes import (Flag, Partition, SkewShape, compatible_flags,
                     diagonal_split, flag_split, skew_props, subpartitions)
from .tableaux import (EnumSpec, enumerate_tableaux, merge, omega1_inverse,
                       omega1_tableau, r_weight_eval, split, weight_eval)

SUITES = ("decompose", "pi", "gvex", "theorem", "omega", "ring")


def _stream(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def partitions_up_to(max_size: int) -> list[Partition]:
    """All nonempty partitions of size at most max_size, canonically ordered."""
    out = []

    def build(remaining, cap, parts):
        for first in range(min(remaining, cap), 0, -1):
            out.append(Partition(parts + [first]))
            build(remaining - first, first, parts + [first])

    build(max_size, max_size, [])
    return sorted(out, key=lambda p: (p.size, p.parts))


def _count(spec: EnumSpec) -> int:
    return sum(1 for _ in enumerate_tableaux(spec))


# ---------------------------------------------------------------------------
# Suite: decompose — split/merge bijection and the flagged decomposition.


def _decompose_instance(args) -> tuple[int, list[str]]:
    prime, seed, trials, lam_parts, phi_bounds, window = args
    lam, phi = Partition(lam_parts), Flag(phi_bounds)
    key = f"lam={lam.parts} phi={phi.bounds}"
    checks, failures = 0, []
    wlo, whi = window
    shape = SkewShape(lam)

    # split/merge are mutually inverse; the multiset of resulting shape
    # pairs matches the product counts on the right-hand side.  Direct
    # enumeration is exponential in the shape, so the bijection part stays
    # on small shapes; the sampled identities below scale further.
    run_bijection = lam.size <= 4
    phi_minus, _ = flag_split(phi)
    if run_bijection:
        left: dict[tuple, int] = {}
        for t in enumerate_tableaux(EnumSpec(shape, phi, "any", window)):
            tm, tp = split(t)
            checks += 1
            if merge(tm, tp).rows != t.rows:
                failures.append(f"{key}: merge(split(T)) != T for "
                                f"{t.to_text()!r}")
            pair = (tm.shape.outer.parts, tp.shape.inner.parts)
            left[pair] = left.get(pair, 0) + 1
        right: dict[tuple, int] = {}
        for nu in subpartitions(lam):
            nflag = Flag(phi_minus.bounds[:len(nu)])
            n_minus = _count(EnumSpec(SkewShape(nu), nflag, "nonpositive",
                                      window))
            if n_minus == 0:
                continue
            for mu in _disconnected_inners(nu):
                n_plus = _count(EnumSpec(SkewShape(lam, mu), phi, "positive",
                                         window))
                if n_plus:
                    right[(nu.parts, mu.parts)] = n_minus * n_plus
        checks += 1
        if left != right:
            failures.append(f"{key}: shape-pair counts differ "
                            f"(left {sorted(left.items())}, "
                            f"right {sorted(right.items())})")

    # numeric decomposition at sampled points, with the skew factor read
    # both under the full flag and under its nonnegative part.
    rng = _stream(seed, f"decompose:{key}")
    wlo = min(wlo, 1 - lam.part(1))
    for _ in range(trials):
        pt = sample_point(prime, rng, range(1, whi + 1), range(1, whi + 1))
        lhs = g_eval(shape, phi, "any", pt, (wlo, whi))
        for skew_flag in (phi, flag_split(phi)[1]):
            rhs = 0
            for nu in subpartitions(lam):
                nflag = Flag(phi_minus.bounds[:len(nu)])
                outer = g_eval(SkewShape(nu), nflag, "nonpositive", pt,
                               (wlo, whi))
                if outer == 0:
                    continue
                inner_sum = 0
                for mu in _disconnected_inners(nu):
                    term = pow(pt.beta, nu.size - mu.size, prime)
                    term = term * g_eval(SkewShape(lam, mu), skew_flag,
                                         "positive", pt, (wlo, whi)) % prime
                    inner_sum = (inner_sum + term) % prime
                rhs = (rhs + outer * inner_sum) % prime
            checks += 1
            if lhs != rhs:
                failures.append(f"{key}: decomposition mismatch at {pt} "
                                f"(skew flag {skew_flag.bounds})")

    # flag symmetry: swapping x_i, x_{i+1} leaves the sum unchanged
    # whenever no row's flag separates the two indices.
    for _ in range(trials):
        pt = sample_point(prime, rng, range(wlo, whi + 1), range(1, whi + 1))
        base = g_eval(shape, phi, "any", pt, (wlo, whi))
        for i in range(wlo, whi):
            if i in set(phi.bounds):
                continue
            sw = dict(pt._xd)
            sw[i], sw[i + 1] = sw.get(i + 1, 0), sw.get(i, 0)
            pt2 = EvaluationPoint.make(prime, pt.beta, sw, dict(pt._yd))
            checks += 1
            if g_eval(shape, phi, "any", pt2, (wlo, whi)) != base:
                failures.append(f"{key}: not symmetric in x_{i}, x_{i + 1}")
    return checks, failures


def suite_decompose(prime, seed, trials, max_size, flag_range, window, jobs):
    instances = [(prime, seed, trials, lam.parts, phi.bounds, window)
                 for lam in partitions_up_to(max_size)
                 for phi in compatible_flags(lam, *flag_range)]
    return _collect("decompose", _decompose_instance, instances, jobs)


# ---------------------------------------------------------------------------
# Suite: pi — the value-shifting permutation identity and flag chain.


def _chain_point(base: EvaluationPoint, pi: Permutation, nmax: int):
    """x_i := y_{pi(i)} on 1..nmax, keeping y as sampled."""
    return EvaluationPoint.make(base.prime, base.beta,
                                {i: base.y_val(pi(i))
                                 for i in range(1, nmax + 1)},
                                {j: base.y_val(j) for j in base.y_support})


def _pi_instance(args) -> tuple[int, list[str]]:
    prime, seed, trials, lam_parts, phi_bounds = args
    lam, phi = Partition(lam_parts), Flag(phi_bounds)
    key = f"lam={lam.parts} phi={phi.bounds}"
    checks, failures = 0, []
    pis = pi_algorithm(lam, phi)
    chis = chi_flags(lam, phi)
    nmax = max([1] + list(phi.bounds))
    rng = _stream(seed, f"pi:{key}")
    for mu in subpartitions(lam):
        shape = SkewShape(lam, mu)
        if skew_props(shape).has_diagonal_cell:
            continue
        _, lower = diagonal_split(shape)
        if not lower.cells():
            continue
        for _ in range(trials):
            base = sample_point(prime, rng, (),
                                range(1 - len(lam) - 1, nmax + lam.part(1) + 1))
            vals = [g_eval(lower, chis[i], "positive",
                           _chain_point(base, pis[i], nmax))
                    for i in range(len(pis))]
            checks += 1
            if len(set(vals)) != 1:
                failures.append(f"{key} mu={mu.parts}: interpolating chain "
                                f"values differ: {vals}")
    return checks, failures


def suite_pi(prime, seed, trials, max_size, flag_range, window, jobs):
    hi = max(1, flag_range[1])
    instances = [(prime, seed, trials, lam.parts, phi.bounds)
                 for lam in partitions_up_to(max_size)
                 for phi in compatible_flags(lam, 0, hi)]
    # the large worked instance exercises a nontrivial pi with three moves
    big = Partition((4, 4, 4, 4, 4, 2, 1))
    instances.append((prime, seed, trials, big.parts, (3, 4, 4, 5, 6, 6, 8)))
    return _collect("pi", _pi_instance, instances, jobs)


# ---------------------------------------------------------------------------
# Suite: gvex — backstable approximation vs. flagged tableau sum.


def all_vexillary(lo: int, hi: int) -> list[Permutation]:
    """All vexillary permutations with support inside [lo, hi]."""
    found = set()
    for images in iter_permutations(range(lo, hi + 1)):
        w = Permutation.from_one_line(images, lo)
        if w.is_vexillary():
            found.add(w)
    return sorted(found, key=lambda w: (w.length(), w.one_line(lo, hi)))


GVEX_P0 = 4  # shifts support [-2,3] into [2,7]; x is read on indices -3..3
GVEX_N = 7


def gvex_points(prime: int, seed: int, trials: int) -> list[EvaluationPoint]:
    """The shared point set of the backstable sweep: distinct nonzero x on
    the full visible index range, y supported on {1, 2}."""
    rng = _stream(seed, "gvex:points")
    return [sample_point(prime, rng, range(1 - GVEX_P0, GVEX_N - GVEX_P0 + 1),
                         (1, 2), distinct_x=True) for _ in range(trials)]


def _gvex_instance(args) -> tuple[int, list[str], tuple[str, int]]:
    prime, seed, trials, images, base = args
    w = Permutation.from_one_line(images, base) if images \
        else Permutation.identity()
    key = f"w={','.join(map(str, images))}@{base}" if images else "w=id"
    checks, failures = 0, []
    for pt in gvex_points(prime, seed, trials):
        checks += 1
        try:
            if not gvex_check(w, pt, p=GVEX_P0, n=GVEX_N, method="orbit"):
                failures.append(f"{key}: backstable and tableau values differ")
        except Exception as exc:  # report, keep sweeping
            failures.append(f"{key}: {exc}")
    return checks, failures, (key, GVEX_P0)


def suite_gvex(prime, seed, trials, max_size, flag_range, window, jobs):
    gprime = prime if prime * prime < 2**63 else ORBIT_PRIME
    instances = []
    seen = set()
    grassmannian = {from_partition(lam) for lam in partitions_up_to(3)}
    for w in all_vexillary(-2, 3) + sorted(
            grassmannian, key=lambda w: w.one_line(-2, 3)):
        if w in seen:
            continue  # every Grassmannian w_lam here sits inside the sweep
        seen.add(w)
        if w.images:
            instances.append((gprime, seed, trials,
                              w.one_line(w.window_lo, w.window_hi),
                              w.window_lo))
        else:
            instances.append((gprime, seed, trials, (), 1))
    results = _map_jobs(_gvex_instance, instances, jobs)
    checks, failures, p0s = 0, [], []
    for c, f, rec in results:
        checks += c
        failures.extend(f)
        p0s.append(rec)
    report = _report("gvex", len(instances), checks, failures)
    report["recorded_p0"] = p0s
    return report


# ---------------------------------------------------------------------------
# Suite: theorem — structure and cross-representation of the coefficients.


def _theorem_instance(args) -> tuple[int, list[str]]:
    prime, seed, trials, lam_parts, phi_bounds = args
    lam, phi = Partition(lam_parts), Flag(phi_bounds)
    key = f"lam={lam.parts} phi={phi.bounds}"
    checks, failures = 0, []
    rng = _stream(seed, f"theorem:{key}")
    ylo = min([0] + list(phi.bounds)) - len(lam) - 1
    yhi = max([1] + list(phi.bounds)) + lam.part(1) + 1
    for rho in list(subpartitions(lam)) + [Partition(())]:
        rkey = f"{key} rho={rho.parts}"
        j = j_coefficient(lam, phi, rho)
        for mono, coeff in j.canonical():
            checks += 1
            if coeff <= 0:
                failures.append(f"{rkey}: nonpositive coefficient {coeff}")
            if mono.beta_shift != 0:
                failures.append(f"{rkey}: beta exponent != factor count")
            if any(not prec(i, jj) for i, jj in mono.factors):
                failures.append(f"{rkey}: factor violates the order")
            mult: dict[tuple, int] = {}
            for f in mono.factors:
                mult[f] = mult.get(f, 0) + 1
            for f, m in mult.items():
                cap = 2 if factor_type(f) == 3 else 1
                if m > cap:
                    failures.append(f"{rkey}: factor {f} of type "
                                    f"{factor_type(f)} appears {m} times")
            types = {factor_type(f) for f in mono.factors}
            if {1, 2} <= types:
                failures.append(f"{rkey}: monomial mixes Type 1 and Type 2")
        if rho.size == lam.size:
            checks += 1
            empty_coeff = j.terms.get(
                next((m for m in j.terms if not m.factors), None), 0)
            expected = 1 if rho == lam else 0
            if empty_coeff != expected:
                failures.append(f"{rkey}: beta=0 specialization is "
                                f"{empty_coeff}, expected {expected}")
        norm = lam.size - rho.size
        for _ in range(trials):
            pt = sample_point(prime, rng, (), range(ylo, yhi))
            checks += 1
            lhs = eval_graham(j, pt)
            rhs = pow(pt.beta, norm, prime) * j_numeric(lam, phi, rho, pt) \
                % prime
            if lhs != rhs:
                failures.append(f"{rkey}: structural and windowed values "
                                "differ")
    return checks, failures


def suite_theorem(prime, seed, trials, max_size, flag_range, window, jobs):
    instances = [(prime, seed, trials, lam.parts, phi.bounds)
                 for lam in partitions_up_to(max_size)
                 for phi in compatible_flags(lam, *flag_range)]
    return _collect("theorem", _theorem_instance, instances, jobs)


# ---------------------------------------------------------------------------
# Suite: omega — conjugation-negation on tableaux and its weight identity.


def _omega_instance(args) -> tuple[int, list[str]]:
    prime, seed, trials, lam_parts, window = args
    lam = Partition(lam_parts)
    key = f"lam={lam.parts}"
    checks, failures = 0, []
    rng = _stream(seed, f"omega:{key}")
    pts = [sample_point(prime, rng, range(window[0], window[1] + 1),
                        range(window[0] - len(lam), window[1] + lam.part(1)))
           for _ in range(trials)]
    for t in enumerate_tableaux(EnumSpec(SkewShape(lam), None, "any", window)):
        u = omega1_tableau(t)
        checks += 1
        if omega1_inverse(u).rows != t.rows:
            failures.append(f"{key}: roundtrip failed for {t.to_text()!r}")
        for pt in pts:
            checks += 1
            if r_weight_eval(u, pt) != weight_eval(t, pt.omega1()):
                failures.append(f"{key}: weight identity failed for "
                                f"{t.to_text()!r}")
    return checks, failures


def suite_omega(prime, seed, trials, max_size, flag_range, window, jobs):
    wlo = max(window[0], -2)
    whi = min(window[1], 2)
    instances = [(prime, seed, trials, lam.parts, (wlo, whi))
                 for lam in partitions_up_to(min(max_size, 4))]
    return _collect("omega", _omega_instance, instances, jobs)


# ---------------------------------------------------------------------------
# Suite: ring — base arithmetic and the operator algebra.


def _random_poly(rng, n, prime, terms=6, degree=3):
    f = SparsePoly.const(0, n, prime)
    for _ in range(terms):
        expo = tuple(rng.randrange(degree + 1) for _ in range(n))
        mono = SparsePoly.const(rng.randrange(1, prime), n, prime)
        for i, e in enumerate(expo, start=1):
            for _ in range(e):
                mono = mono * SparsePoly.var(i, n, prime)
        f = f + mono
    return f


def suite_ring(prime, seed, trials, max_size, flag_range, window, jobs):
    checks, failures = 0, []
    rng = _stream(seed, "ring")

    for k in range(100):
        a, b, c = (rng.randrange(prime) for _ in range(3))
        beta = rng.randrange(prime)
        try:
            ab = ominus(a, b, beta, prime)
            bc = ominus(b, c, beta, prime)
            lhs = (ab + bc + beta * ab % prime * bc) % prime
            checks += 1
            if lhs != ominus(a, c, beta, prime):
                failures.append(f"ominus telescoping failed at trial {k}")
        except ArithmeticError:
            continue  # unlucky denominator; identity not at stake

    for i in range(-10, 11):
        for j in range(-10, 11):
            if not prec(i, j):
                continue
            f = (i, j)
            g = omega1_factor(f)
            checks += 1
            if omega1_factor(g) != f or not prec(*g):
                failures.append(f"omega1 not an order-preserving involution "
                                f"on {f}")
            expected = {1: 2, 2: 1, 3: 3}[factor_type(f)]
            if factor_type(g) != expected:
                failures.append(f"omega1 type action wrong on {f}")

    for k in range(100):
        n = rng.randrange(2, 5)
        beta = rng.randrange(prime)
        f = _random_poly(rng, n, prime)
        i = rng.randrange(1, n)
        d = f.divided_difference(i)
        checks += 3
        if not d.divided_difference(i).is_zero():
            failures.append(f"d_i^2 != 0 at trial {k}")
        pi_f = isobaric(f, i, beta)
        if isobaric(pi_f, i, beta) != pi_f.scale(beta):
            failures.append(f"pi_i^2 != beta pi_i at trial {k}")
        if n >= 3:
            i = rng.randrange(1, n - 1)
            lhs = isobaric(isobaric(isobaric(f, i, beta), i + 1, beta), i, beta)
            rhs = isobaric(isobaric(isobaric(f, i + 1, beta), i, beta),
                           i + 1, beta)
            if lhs != rhs:
                failures.append(f"braid relation failed at trial {k}")
        if n >= 4:
            lhs = isobaric(isobaric(f, 1, beta), 3, beta)
            if lhs != isobaric(isobaric(f, 3, beta), 1, beta):
                failures.append(f"commutation failed at trial {k}")

    # every reduced word yields the same Grothendieck polynomial
    def words_of(v):
        if v.is_identity():
            yield ()
            return
        for i in v.descents():
            for rest in words_of(v.times_s(i)):
                yield rest + (i,)

    pt = sample_point(prime, rng, (), range(1, 4))
    for images in iter_permutations((1, 2, 3, 4)):
        w = Permutation.from_one_line(images, 1)
        v = w.inverse() * Permutation(1, (4, 3, 2, 1))
        polys = {grothendieck_poly(w, 4, pt, word=word)
                 for word in words_of(v)}
        checks += 1
        if len(polys) != 1:
            failures.append(f"word dependence for w = {images}")
    return _report("ring", 100 + 441 + 100 + 24, checks, failures)


# ---------------------------------------------------------------------------
# Assembly


def _map_jobs(fn, instances, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, instances))
    return [fn(a) for a in instances]


def _collect(name, fn, instances, jobs):
    checks, failures = 0, []
    for c, f in _map_jobs(fn, instances, jobs):
        checks += c
        failures.extend(f)
    return _report(name, len(instances), checks, failures)


def _report(name, instances, checks, failures):
    return {"suite": name, "instances": instances, "checks": checks,
            "failures": failures, "ok": not failures}


def verify_identities(suite: str, *, prime: int = DEFAULT_PRIME, seed: int = 0,
                      trials: int = 5, max_size: int = 4,
                      flag_range: tuple[int, int] = (-2, 3),
                      window: tuple[int, int] = (-3, 3),
                      jobs: int = 1) -> dict:
    """Run one verification suite (or all of them) and return a report.

    Failures are collected, not raised; the report's "ok" field is true
    exactly when every check passed.
    """
    runners = {"decompose": suite_decompose, "pi": suite_pi,
               "gvex": suite_gvex, "theorem": suite_theorem,
               "omega": suite_omega, "ring": suite_ring}
    if suite == "all":
        reports = [runners[s](prime, seed, trials, max_size, flag_range,
                              window, jobs) for s in SUITES]
        return {"suite": "all", "suites": reports,
                "ok": all(r["ok"] for r in reports)}
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; "
                         f"choose from {SUITES + ('all',)}")
    return runners[suite](prime, seed, trials, max_size, flag_range, window,
                          jobs)
