# schubert_app/verification.py
"""Verification suites run by ``manage.py verify``.

Each suite takes keyword options (``n``, ``dmax``, ``samples``, ``seed``,
``route``), ignores the ones it does not use and returns a
``VerificationReport``. An ``InvariantViolation`` escaping a suite fails the
report with the exception's witness instead of propagating.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import cohomology, grassmann, ktheory, oracle_lab
from .conf import engine_setting
from .exceptions import InvariantViolation, NegativityViolation, SignViolation
from .polyring import Family
from .reports import VerificationReport
from .weyl import (
    Weight,
    all_permutations,
    bruhat_leq,
    fundamental_weight,
    mobius,
    rho,
    unit_weight,
)

logger = logging.getLogger(__name__)

SUITES = {}


def register(name, **defaults):
    def decorator(func):
        SUITES[name] = (func, defaults)
        return func

    return decorator


def _rng(options):
    seed = options.get("seed")
    return random.Random(engine_setting("random_seed") if seed is None else seed)


def _identity_check(report, matrix, key, n):
    perms = all_permutations(n)
    expected = np.identity(len(perms), dtype=object)
    bad = np.argwhere(matrix != expected)
    for a, b in bad[:5]:
        report.fail({"check": key, "row": perms[a].to_list(), "col": perms[b].to_list(),
                     "value": int(matrix[a, b])})
    report.count(key, len(perms) ** 2)


@register("duality", n=4)
def duality_suite(n, route=None, **options):
    report = VerificationReport("duality", {"n": n})
    _identity_check(report, cohomology.poincare_matrix(n), "poincare", n)
    _identity_check(report, ktheory.duality_matrix(n), "k_duality", n)

    perms = all_permutations(n)
    richardson = ktheory.richardson_chi_matrix(n)
    for a, w in enumerate(perms):
        for b, v in enumerate(perms):
            expected = 1 if bruhat_leq(v, w) else 0
            report.check(richardson[a, b] == expected, "richardson_chi",
                         {"v": v.to_list(), "w": w.to_list(), "value": int(richardson[a, b])})
    report.note("χ(O_w·O^v) is checked as 1 for every v ≤ w, not only for v = w; "
                "the second reading would contradict O_w = Σ_{v≤w} I_v")

    if n <= 3:
        for w in perms:
            for v in perms:
                value = ktheory.duality_pairing(ktheory.k_class(w, "I"), ktheory.k_class(v, "I_opp"), route)
                expected = (-1) ** (w.length() - v.length()) if bruhat_leq(v, w) else 0
                report.check(value == expected, "ideal_pairing",
                             {"v": v.to_list(), "w": w.to_list(), "value": value})
        report.merge(ktheory.diagonal_identities(n, samples=options.get("samples"),
                                                 seed=options.get("seed"), route=route))
    return report


def _triples(n, options):
    perms = all_permutations(n)
    if n <= 4:
        for v in perms:
            for w in perms:
                for x in perms:
                    yield v, w, x
        return
    rng = _rng(options)
    for _ in range(options.get("samples") or engine_setting("sample_triples")):
        yield rng.choice(perms), rng.choice(perms), rng.choice(perms)


@register("positivity", n=4)
def positivity_suite(n, route=None, **options):
    report = VerificationReport("positivity", {"n": n, "sampled": n > 4})
    for v, w, x in _triples(n, options):
        try:
            value = cohomology.structure_constant(v, w, x, route)
        except NegativityViolation as exc:
            report.fail(dict(exc.witness, check="positivity"))
            continue
        report.count("nonzero" if value else "zero")
    return report


@register("signs", n=3)
def signs_suite(n, route=None, **options):
    if n <= 4:
        return oracle_lab.sign_theorem_scan(n, route)
    report = VerificationReport("signs", {"n": n, "sampled": True})
    for v, w, x in _triples(n, options):
        try:
            ktheory.structure_constant_k(v, w, x, route)
            report.count("triples")
        except SignViolation as exc:
            report.fail(dict(exc.witness, check="sign"))
    return report


@register("mobius", n=4)
def mobius_suite(n, **options):
    report = oracle_lab.mobius_oracle_scan(n)
    perms = all_permutations(n)
    to_i = np.zeros((len(perms), len(perms)), dtype=object)
    to_o = np.zeros((len(perms), len(perms)), dtype=object)
    for col, w in enumerate(perms):
        for v, c in ktheory.to_basis(ktheory.k_class(w), "I").terms.items():
            to_i[perms.index(v), col] = c
        for v, c in ktheory.to_basis(ktheory.k_class(w, "I"), "O").terms.items():
            to_o[perms.index(v), col] = c
            report.check(c == mobius(v, w), "conversion_entry",
                         {"v": v.to_list(), "w": w.to_list(), "value": c})
    _identity_check(report, to_i.dot(to_o), "conversion_inverse", n)
    return report


def _chevalley_weights(n):
    weights = [fundamental_weight(d, n) for d in range(1, n)] + [rho(n)]
    return weights + [unit_weight(i, n) for i in range(1, n + 1)]


@register("chevalley-routes", n=4)
def chevalley_routes_suite(n, route=None, **options):
    report = VerificationReport("chevalley-routes", {"n": n})
    perms = all_permutations(n)
    for weight in _chevalley_weights(n):
        divisor = cohomology.c1_class(weight)
        for w in perms:
            direct = cohomology.chevalley_cup(weight, w)
            through_ring = cohomology.cup(divisor, cohomology.schubert_class(w), route)
            report.check(direct.terms == through_ring.terms, "chevalley",
                         {"weight": list(weight.entries), "w": w.to_list()})
    if n <= 4:
        for v in perms:
            for w in perms:
                expected = cohomology.basis_cup(v, w, route)
                found = oracle_lab.monk_iterated_product(v, w)
                report.check(found.terms == expected, "monk_oracle",
                             {"v": v.to_list(), "w": w.to_list()})
    return report


PIERI_SHAPES = ((2, 4), (2, 5), (3, 5))


def _by_str(terms):
    return {str(k): v for k, v in terms.items()}


@register("pieri")
def pieri_suite(shapes=PIERI_SHAPES, **options):
    report = VerificationReport("pieri", {"shapes": [list(s) for s in shapes]})
    for d, n in shapes:
        indices = grassmann.grass_indices(d, n)
        for index in indices:
            base = {"d": d, "n": n, "index": index.to_list()}
            cover_terms = grassmann.pieri_divisor_cohomology(index)
            report.check(grassmann.pieri_divisor_full_flag(index) == cover_terms, "pieri_h", base)
            report.check(grassmann.plucker_divisor(index) == cover_terms, "plucker", base)
            for mode in grassmann.KPieriMode:
                combinatorial = grassmann.k_pieri(index, mode)
                pulled_back = grassmann.k_pieri_full_flag(index, mode)
                report.check(combinatorial == pulled_back, f"k_pieri_{mode.value}",
                             dict(base, combinatorial=_by_str(combinatorial),
                                  pulled_back=_by_str(pulled_back)))
            composed = {}
            for J, a in grassmann.k_pieri(index, "L").items():
                for K, b in grassmann.k_pieri(J, "L_inverse").items():
                    composed[K] = composed.get(K, 0) + a * b
            report.check({K: c for K, c in composed.items() if c} == {index: 1}, "k_pieri_inverse", base)
            for low in indices:
                if index.contains(low):
                    mu = grassmann.grass_mobius(low, index)
                    rook = grassmann.is_rook_strip(low, index)
                    expected = (-1) ** (index.dimension - low.dimension) if rook else 0
                    report.check(mu == expected, "grass_mobius",
                                 dict(base, low=low.to_list(), value=mu))
    return report


@register("hilbert", n=6)
def hilbert_suite(n, **options):
    report = VerificationReport("hilbert", {"n": n})
    rng = _rng(options)
    for size in range(n + 1):
        model = grassmann.projective_k_model(size)
        for j in range(size + 1):
            for k in range(-10, 11):
                numerator, denominator = 1, 1
                for i in range(1, j + 1):
                    numerator *= k + i
                    denominator *= i
                report.check(model.euler(j, k) == numerator // denominator, "euler",
                             {"n": size, "j": j, "k": k})
        for _ in range(5):
            coefficients = tuple(rng.randint(-4, 4) for _ in range(size + 1))
            recovered = model.decompose(model.compose_class(coefficients))
            report.check(recovered == coefficients, "decompose",
                         {"n": size, "coefficients": list(coefficients)})
        pairing = model.dual_pairing_matrix()
        report.check((pairing == np.identity(size + 1, dtype=object)).all(), "dual_basis", {"n": size})
    return report


@register("cone", dmax=8)
def cone_suite(dmax, **options):
    report = VerificationReport("cone", {"dmax": dmax})
    for d in range(3, dmax + 1):
        result = oracle_lab.cone_counterexample(d)
        report.count("cones")
        report.check(result.violates_signs == (d >= 4), "sign_violation",
                     {"d": d, "c0": result.c0})
        report.note(f"d={d}: c2={result.c2} c1={result.c1} c0={result.c0}")
    return report


@register("stability", n=4, grow_to=6, k_window=3)
def stability_suite(n, grow_to, k_window, **options):
    report = oracle_lab.window_stability(n, grow_to)
    perms = all_permutations(k_window)
    for v in perms:
        for w in perms:
            for family, reduced, stable in (
                ("H", cohomology.basis_cup(v, w, "reduced"), cohomology.basis_cup(v, w, "stable")),
                ("K", ktheory.basis_product(v, w, "reduced"), ktheory.basis_product(v, w, "stable")),
            ):
                report.check(reduced == stable, f"routes_{family}",
                             {"v": v.to_list(), "w": w.to_list()})
    samples = options.get("samples") or 10
    for family in Family:
        report.merge(oracle_lab.expansion_delta_check(samples, window=n, family=family,
                                                      seed=options.get("seed")))
    report.merge(oracle_lab.coefficient_extraction_scan(samples, window=n, seed=options.get("seed")))
    return report


@register("involution", n=3)
def involution_suite(n, route=None, **options):
    report = VerificationReport("involution", {"n": n})
    rng = _rng(options)
    perms = all_permutations(n)
    samples = options.get("samples") or engine_setting("sample_count")
    for _ in range(samples):
        alpha = ktheory.random_class(n, rng, size=4)
        beta = ktheory.random_class(n, rng, size=4)
        dual_alpha = ktheory.dualize(alpha)
        report.check(ktheory.dualize(dual_alpha).same_class(alpha), "involution", {})
        report.check(
            ktheory.dualize(ktheory.multiply(alpha, beta, route)).same_class(
                ktheory.multiply(dual_alpha, ktheory.dualize(beta), route)
            ),
            "multiplicative",
            {},
        )
        report.check(oracle_lab.dual_by_substitution(alpha).same_class(dual_alpha), "substitution", {})
        weight = Weight(tuple(rng.randint(-2, 2) for _ in range(n)))
        report.check(
            ktheory.dualize(ktheory.line_bundle_class(weight)).same_class(
                ktheory.line_bundle_class(-weight)
            ),
            "line_bundle_dual",
            {"weight": list(weight.entries)},
        )
    for w in perms:
        base = {"w": w.to_list()}
        try:
            ktheory.i_rho_transition(w)
        except InvariantViolation as exc:
            report.fail(dict(exc.witness, check="i_rho_transition"))
            continue
        report.check(ktheory.o_from_i_rho(w).same_class(ktheory.k_class(w)), "i_rho_inverse", base)
    for v in perms:
        for w in perms:
            product = ktheory.multiply(ktheory.i_rho_class(v), ktheory.i_rho_class(w), route)
            found = ktheory.expand_in_i_rho(product)
            expected = {x: abs(c) for x, c in ktheory.basis_product(v, w, route).items() if c}
            report.check(found == expected, "i_rho_constants",
                         {"v": v.to_list(), "w": w.to_list()})
    return report


@register("kchevalley", n=4)
def kchevalley_suite(n, route=None, **options):
    report = VerificationReport("kchevalley", {"n": n})
    rng = _rng(options)
    perms = all_permutations(n)
    weights = [fundamental_weight(d, n) for d in range(1, n)] + [rho(n)]
    for weight in weights:
        for w in perms:
            base = {"weight": list(weight.entries), "w": w.to_list()}
            try:
                ktheory.k_chevalley(weight, w)
                product = ktheory.o_lambda_mult(weight, w)
            except InvariantViolation as exc:
                report.fail(dict(exc.witness, check="kchevalley"))
                continue
            shadow = {v: c for v, c in product.items() if v.length() == w.length() - 1}
            graded = cohomology.chevalley_cup(weight, w).terms
            report.check(shadow == graded, "graded_shadow", base)
    for _ in range(options.get("samples") or 5):
        alpha = ktheory.random_class(n, rng, size=3)
        lam = Weight(tuple(rng.randint(-2, 2) for _ in range(n)))
        mu = Weight(tuple(rng.randint(-2, 2) for _ in range(n)))
        stepwise = ktheory.line_bundle_mult(lam, ktheory.line_bundle_mult(mu, alpha))
        report.check(stepwise.same_class(ktheory.line_bundle_mult(lam + mu, alpha)), "additivity",
                     {"lambda": list(lam.entries), "mu": list(mu.entries)})
        series = ktheory.class_from_polynomial(n, ktheory.line_bundle_series(lam))
        report.check(series.same_class(ktheory.line_bundle_class(lam)), "series_route",
                     {"lambda": list(lam.entries)})
    if n <= 3:
        for weight in weights:
            for v in perms:
                for w in perms:
                    if bruhat_leq(v, w):
                        try:
                            ktheory.restricted_chi(weight, v, w, route)
                            report.count("restricted_chi")
                        except InvariantViolation as exc:
                            report.fail(dict(exc.witness, check="restricted_chi"))
    return report


def run_suite(name, **options):
    func, defaults = SUITES[name]
    merged = dict(defaults)
    merged.update({k: v for k, v in options.items() if v is not None})
    try:
        report = func(**merged)
    except InvariantViolation as exc:
        logger.warning("suite %s aborted: %s", name, exc)
        report = VerificationReport(name, {k: v for k, v in merged.items() if k in defaults})
        report.fail(dict(exc.witness, error=str(exc)))
    report.suite = name
    logger.info("suite %s %s", name, "passed" if report.passed else "FAILED")
    return report


def _run_named(args):
    name, options = args
    return run_suite(name, **options)


def run_suites(names, workers=1, **options):
    """Run several suites; reports come back in sorted suite order."""
    names = sorted(set(names))
    jobs = [(name, options) for name in names]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_named, jobs))
    else:
        reports = [_run_named(job) for job in jobs]
    return reports
