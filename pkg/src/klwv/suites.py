"""Batch verification suites, one per module, composed by ``klwv report``."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List

from . import embedcheck, extension, freefield, liecore, qhreduce, qseries, ratcore
from .report import Report

SUITE_ORDER = ("ratcore", "liecore", "qseries", "freefield", "extension", "qhreduce", "embedcheck")


def thread_cap() -> int:
    """Worker count from KLWV_THREADS (default 1, i.e. sequential)."""
    raw = os.environ.get("KLWV_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"KLWV_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"KLWV_THREADS must be a positive integer, got {raw!r}")
    return n


def ratcore_suite() -> Report:
    r = Report("ratcore")
    r.add("rat_canonical/(6,-4)", Fraction(-3, 2), ratcore.rat_canonical(6, -4))
    r.add("rat_canonical/(0,5)", Fraction(0), ratcore.rat_canonical(0, 5))
    r.add("parse/fmt", "-7/3", ratcore.fmt_rat(ratcore.parse_rat("14/-6")))
    r.add("phase_add/(3/2,1)", ratcore.Phase(Fraction(1, 2)), ratcore.phase_add(ratcore.Phase(Fraction(3, 2)), ratcore.Phase(1)))
    x, y = ratcore.MPoly.gens(("x", "y"))
    r.add("poly_equal/binomial-square", x * x + x * y * 2 + y * y, (x + y) ** 2)
    return r


def liecore_suite() -> Report:
    r = Report("liecore")
    W = liecore.WeightVec
    r.add("fw_inner/(6,1,1)", Fraction(5, 6), liecore.fw_inner(6, 1, 1))
    r.add("fw_inner/(6,1,5)", Fraction(1, 6), liecore.fw_inner(6, 1, 5))
    r.add("sugawara/(4,-5/2,w1)", Fraction(5, 4), liecore.sugawara_weight(liecore.LieLevel(4, Fraction(-5, 2)), W.fundamental(4, 1)))
    r.add("sugawara/(6,-7/2,w1)", Fraction(7, 6), liecore.sugawara_weight(liecore.LieLevel(6, Fraction(-7, 2)), W.fundamental(6, 1)))
    lvl = liecore.LieLevel(6, Fraction(-7, 2))
    r.add("min_reduction/(6,-7/2,w1)", Fraction(2, 3), liecore.minimal_reduction_weight(lvl, W.fundamental(6, 1)))
    r.add("min_reduction/(6,-7/2,w5)", Fraction(2, 3), liecore.minimal_reduction_weight(lvl, W.fundamental(6, 5)))
    for N in range(3, 9):
        r.add(f"theta-norm/N={N}", Fraction(2), liecore.weight_inner(liecore.theta(N), liecore.theta(N)))
    bad = []
    for N in range(2, 7):
        for c in range(4):
            for i in range(1, N):
                lam = c * W.fundamental(N, i) + W.fundamental(N, 1)
                total = sum(liecore.weyl_dim(w) for w in liecore.pieri_tensor_omega1(lam))
                if total != liecore.weyl_dim(lam) * N:
                    bad.append(str(lam))
    r.add("pieri/dimension-multiplicativity", [], bad)
    return r


def _pentagonal_partitions(n: int) -> List[int]:
    """p(0..n) from Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p


def qseries_suite(order: int) -> Report:
    r = Report("qseries")
    ps = qseries.partition_series(order)
    r.add(f"partition/order={order}", [Fraction(v) for v in _pentagonal_partitions(order)], ps.coefficients())
    euler = qseries.product_form([qseries.Factor.make(-1, 0, 0, 1, 1)], order)
    r.add(f"euler*partition/order={order}", qseries.CharSeries.one(order), qseries.series_mul(euler, ps))
    return r


def freefield_suite(order: int, charge_window: int) -> Report:
    r = Report("freefield")
    ell = Fraction(-2, 3)
    r.add("fock_delta/(-2/3,1)", Fraction(-3, 4), freefield.fock_delta(freefield.FockModule(ell, 1)))
    r.add("singlet_delta/M_-2", Fraction(3), freefield.singlet_delta(freefield.Atypical(-2)))
    r.add("singlet_fuse/M1xM-3", freefield.Atypical(-2), freefield.singlet_fuse(freefield.Atypical(1), freefield.Atypical(-3)))
    r.extend(freefield.verify_sympfermion(order, charge_window))
    r.extend(freefield.verify_bg_decomposition(order))
    return r


def extension_suite(m: int, range_: int) -> Report:
    r = Report("extension")
    bad = [i for i in range(-range_, range_ + 1) if extension.delta_atypical(m, 0, 0, i) != Fraction(3 * abs(i), 2)]
    r.add(f"vacuum-sectors/m={m}", [], bad, m=m, range=range_)
    sug_bad = [p for p in range(-range_, range_ + 1)
               if extension.sector_weight_from_sugawara(m, p) != extension.u_delta(m, p)]
    r.add(f"u-top-weights/m={m}", [], sug_bad, m=m, range=range_)
    r.extend(extension.evenness_check(m, range_))
    vac = extension.classify(extension.GenInduced.atypical(m, 0, 0))
    r.add(f"classify/vacuum/m={m}", "S0", vac.label.value, m=m)
    M = extension.GenInduced.atypical(m, Fraction(m, m + 2), 1)
    r.extend(extension.grading_check(M, min(range_, 20)))
    r.add(f"monodromy/vacuum/m={m}", extension.monodromy_from_braidings(M), extension.monodromy_exponent(M), m=m)
    return r


def qhreduce_suite(m: int) -> Report:
    r = Report("qhreduce")
    r.extend(qhreduce.delta_theta_identity(m))
    r.extend(qhreduce.difference_identities(m))
    r.extend(qhreduce.sos_certificate(m))
    r.extend(qhreduce.eq1_recheck(m))
    for l1, ll in qhreduce.eq1_solutions(m):
        r.extend(qhreduce.pieri_obstruction(m, l1, ll))
    for b in (-2, -1, 0, 1, 2):
        _, rep = qhreduce.match_reduction(m, Fraction(b * m, m + 2), b)
        r.extend(rep)
    return r


def embedcheck_suite(m: int, range_: int) -> Report:
    r = Report("embedcheck")
    r.extend(embedcheck.ce_summand_check(m, range_))
    if m % 2 == 0:
        r.extend(embedcheck.wdecomp_check(m, range_))
    r.extend(embedcheck.gram_check(m))
    r.extend(embedcheck.fock_basis_identity(m))
    return r


def full_report(m: int, order: int, range_: int, charge_window: int = 7) -> List[Report]:
    """All suites in dependency order; they may run concurrently, output order is fixed."""
    extension.check_m(m)
    jobs: List[Callable[[], Report]] = [
        ratcore_suite,
        liecore_suite,
        lambda: qseries_suite(order),
        lambda: freefield_suite(order, charge_window),
        lambda: extension_suite(m, range_),
        lambda: qhreduce_suite(m),
        lambda: embedcheck_suite(m, range_),
    ]
    workers = thread_cap()
    if workers == 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: job(), jobs))
