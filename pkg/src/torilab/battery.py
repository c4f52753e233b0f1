"""The end-to-end verification battery behind ``torilab verify all``.

Each check is a plain function ``check(level, rng) -> dict`` that raises
:class:`VerificationError` on a mathematical failure.  ``level`` is
``"quick"`` (small sizes, a few seconds) or ``"full"`` (the sizes the
acceptance suite uses).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .betti import (
    betti_coeffs,
    poles_are_roots_of_unity,
    quasipolynomial,
    recurrence,
    stable_betti_direct,
    stable_betti_gf,
    verify_double_gf,
)
from .charpoly import (
    binom_basis_element,
    canonical_rep_char_polys,
    parse_char_poly,
)
from .coinvariant import (
    ClassFunction,
    classes,
    graded_char,
    oracle_for_class,
    q_char_polys,
    verify_stable_range,
)
from .errors import VerificationError
from .exactmath import Poly, RationalFunction, format_rational
from .partitions import EMPTY, DoublePartition, Partition, enumerate_double_partitions, enumerate_partitions
from .symfunc import f_lambda_i, irreducible_character, verify_multiplicity_lemma
from .tori import (
    asymptotic_limit_poly,
    count_tori,
    lehrer_verify,
    total_tori_exponent,
    verify_average_gf,
    verify_convergence,
    verify_euler_identity,
    verify_exp_identity,
)

LEVELS = ("quick", "full")


def _pick(level: str, quick, full):
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")
    return quick if level == "quick" else full


def _q():
    return RationalFunction.variable()


# -- individual checks -------------------------------------------------------


def check_steinberg(level: str, rng: random.Random) -> dict:
    n_max = _pick(level, 3, 5)
    for family in ("A", "BC"):
        for n in range(n_max + 1):
            total = RationalFunction(0)
            for c in classes(family, n):
                total = total + count_tori(family, c, n)
            expected = RationalFunction(Poly.monomial(total_tori_exponent(family, n)))
            if total != expected:
                raise VerificationError(f"torus count total wrong for {family}, n = {n}",
                                        {"got": total.format(), "expected": expected.format()})
    return {"n_max": n_max}


def check_lehrer_a(level: str, rng: random.Random) -> dict:
    n_max = _pick(level, 4, 6)
    checked = 0
    for n in range(1, n_max + 1):
        for lam in enumerate_partitions(n):
            lehrer_verify("A", n, irreducible_character(lam))
            checked += 1
    return {"n_max": n_max, "characters": checked}


def check_lehrer_bc(level: str, rng: random.Random) -> dict:
    n_max = _pick(level, 3, 4)
    polys = list(q_char_polys(6)) + list(canonical_rep_char_polys().values())
    checked = 0
    for n in range(n_max + 1):
        for P in polys:
            lehrer_verify("BC", n, ClassFunction.from_char_poly(P, "BC", n))
            checked += 1
    return {"n_max": n_max, "checked": checked}


def check_oracle(level: str, rng: random.Random) -> dict:
    n_bc, n_a = _pick(level, (3, 4), (5, 6))
    for family, n_max in (("BC", n_bc), ("A", n_a)):
        for n in range(n_max + 1):
            G = graded_char(family, n)
            for c in classes(family, n):
                if G.polys[c] != oracle_for_class(family, c):
                    raise VerificationError("graded character differs from the determinant oracle",
                                            {"family": family, "class": c.to_text()})
    return {"n_max_bc": n_bc, "n_max_a": n_a}


def check_multiplicity(level: str, rng: random.Random) -> dict:
    n_max = _pick(level, 4, 6)
    for n in range(1, n_max + 1):
        verify_multiplicity_lemma(n)
    witness = f_lambda_i(Partition((2, 1, 1)))
    if witness != {3: 1, 4: 1, 5: 1}:
        raise VerificationError("f_{(2,1,1),i} wrong", {"got": witness})
    return {"n_max": n_max}


# Reference expansion of Q_0..Q_4 in the charpoly syntax.  The reference
# Q_4 lists -1/2*Y1^2*Y2 twice; it is counted once here.
REFERENCE_Q = (
    "1",
    "X1 - Y1",
    "-1 + 1/2*X1 + 1/2*Y1 + 1/2*X1^2 + 1/2*Y1^2 - X1*Y1 + X2 - Y2",
    "-2/3*X1 + 2/3*Y1 + 1/2*X1^2 - 1/2*Y1^2 + 1/6*X1^3 - 1/6*Y1^3 - 1/2*X1^2*Y1"
    " + X1*X2 + Y1*Y2 + 1/2*X1*Y1^2 - X2*Y1 - X1*Y2 + X3 - Y3",
    "-1 - 1/4*X1 - 1/4*Y1 - 1/24*X1^2 - 1/24*Y1^2 + 7/12*X1*Y1 + 3/2*Y2 - 1/2*X2 + 1/4*X1^3"
    " + 1/4*Y1^3 - 1/4*X1^2*Y1 - 1/4*X1*Y1^2 + 1/2*X1*X2 - 1/2*X1*Y2 - 1/2*Y1*Y2 + 1/2*X2*Y1"
    " + 1/24*X1^4 + 1/24*Y1^4 - 1/6*X1^3*Y1 - 1/6*X1*Y1^3 + 1/4*X1^2*Y1^2 + 1/2*X1^2*X2"
    " - 1/2*X1^2*Y2 + 1/2*X2*Y1^2 - 1/2*Y1^2*Y2 - X1*X2*Y1 + X1*Y1*Y2 + 1/2*X2^2"
    " + 1/2*Y2^2 + X1*X3 - X1*Y3 - X3*Y1 + Y1*Y3 - X2*Y2 + X4 - Y4",
)


def check_q_polys(level: str, rng: random.Random) -> dict:
    computed = q_char_polys(4)
    for i, text in enumerate(REFERENCE_Q):
        if computed[i] != parse_char_poly(text):
            raise VerificationError(f"Q_{i} differs from the reference expansion",
                                    {"computed": computed[i].format()})
    reports = [verify_stable_range(n).to_json() for n in range(4)]
    return {"stable_range": reports}


def check_asymptotics(level: str, rng: random.Random) -> dict:
    q = _q()
    table = [
        ("A", "X1", q / (q - 1)),
        ("A", "binom:1,1| - X2", 1 / (q * (1 - 1 / q) * (1 - 1 / q**2))),
        ("BC", "X1", q / (2 * (q - 1))),
        ("BC", "X1 + Y1", q**2 / (q**2 - 1)),
        ("BC", "(X1 + Y1)*(X1 + Y1 - 1)/2 - (X2 + Y2)", q**4 / ((q**2 - 1) * (q**4 - 1))),
        ("BC", "X2 - Y2", q**2 / (2 * (q**4 - 1))),
    ]
    rows = []
    for family, text, expected in table:
        got = asymptotic_limit_poly(family, parse_char_poly(text))
        if got != expected:
            raise VerificationError("asymptotic limit differs from the closed form",
                                    {"family": family, "poly": text, "got": got.format()})
        rows.append({"family": family, "poly": text, "limit": got.format()})
    return {"rows": rows}


def check_convergence(level: str, rng: random.Random) -> dict:
    n_bc, n_a = _pick(level, (6, 8), (10, 14))
    out = [verify_convergence("A", parse_char_poly("X1"), n_a, 2).to_json()]
    for text in ("X1", "X1 + Y1", "X2 - Y2"):
        out.append(verify_convergence("BC", parse_char_poly(text), n_bc, 2).to_json())
    return {"reports": [{k: r[k] for k in ("family", "poly", "tolerance", "ok")} for r in out]}


# Reference stable Betti data: GF as (numerator, denominator) coefficient
# lists in z, nonzero coefficients, recurrence lags and coefficients,
# quasipolynomial cases as {residue: (c0, c1, c2)} over the full period.
REFERENCE_BETTI = {
    "Cn": {
        "gf": ([0, 1], [1, 0, -1]),
        "coeffs": {1: 1, 3: 1, 5: 1, 7: 1, 9: 1, 11: 1},
        "lags": [2], "rec": [1],
        "period": 2, "cases": {0: (), 1: (1,)},
    },
    "Sym2Cn": {
        "gf": ([1, 0, 1, 0, -1], [1, 0, -1, 0, -1, 0, 1]),
        "coeffs": {0: 1, 2: 2, 4: 2, 6: 3, 8: 3, 10: 4, 12: 4},
        "lags": [2, 4, 6], "rec": [1, 1, -1],
        "period": 4, "cases": {0: (1, Fraction(1, 4)), 1: (), 2: (Fraction(3, 2), Fraction(1, 4)), 3: ()},
    },
    "Wedge2Cn": {
        "gf": ([0, 0, 0, 0, 1], [1, 0, -1, 0, -1, 0, 1]),
        "coeffs": {4: 1, 6: 1, 8: 2, 10: 2, 12: 3},
        "lags": [2, 4, 6], "rec": [1, 1, -1],
        "period": 4, "cases": {0: (0, Fraction(1, 4)), 1: (), 2: (Fraction(-1, 2), Fraction(1, 4)), 3: ()},
    },
    "Wedge3Cn": {
        "gf": ([0] * 9 + [1], None),
        "coeffs": {9: 1, 11: 1, 13: 2, 15: 3, 17: 4, 19: 5, 21: 7, 23: 8, 25: 10, 27: 12, 29: 14,
                   31: 16, 33: 19, 35: 21, 37: 24, 39: 27, 41: 30, 43: 33},
        "lags": [2, 4, 8, 10, 12], "rec": [1, 1, -1, -1, 1],
        "period": 12,
        "cases": {r: (Fraction(c, 48), Fraction(-1, 8), Fraction(1, 48)) if r % 2 else ()
                  for r, c in [(0, 0), (1, 5), (2, 0), (3, 9), (4, 0), (5, 5), (6, 0), (7, -7),
                               (8, 0), (9, 21), (10, 0), (11, -7)]},
    },
}


def _wedge3_den() -> Poly:
    z = Poly.x()
    return (1 - z) ** 2 * (1 + z) ** 2 * (1 + z**2) * (1 - z**3) * (1 + z**3)


def reference_gf(name: str) -> RationalFunction:
    num, den = REFERENCE_BETTI[name]["gf"]
    den_poly = _wedge3_den() if den is None else Poly(den)
    return RationalFunction(Poly(num), den_poly, var="z")


def check_betti_examples(level: str, rng: random.Random) -> dict:
    polys = canonical_rep_char_polys()
    rows = {}
    for name, data in REFERENCE_BETTI.items():
        P = polys[name]
        gf = stable_betti_gf(P)
        if gf.gf != reference_gf(name) or not poles_are_roots_of_unity(gf):
            raise VerificationError(f"{name}: generating function differs", {"got": gf.gf.format()})
        top = max(data["coeffs"])
        coeffs = betti_coeffs(P, top)
        expected = [Fraction(data["coeffs"].get(i, 0)) for i in range(top + 1)]
        if coeffs != expected:
            raise VerificationError(f"{name}: coefficients differ",
                                    {"got": [format_rational(c) for c in coeffs]})
        rec = recurrence(P)
        if rec.lags != data["lags"] or [rec.coefficients[k - 1] for k in rec.lags] != data["rec"]:
            raise VerificationError(f"{name}: recurrence differs", rec.to_json())
        qp = quasipolynomial(P)
        want = [Poly(list(data["cases"][r])) for r in range(data["period"])]
        if qp.period != data["period"] or qp.polys != want:
            raise VerificationError(f"{name}: quasipolynomial differs", qp.to_json())
        rows[name] = {"gf": gf.gf.format(), "recurrence": rec.to_json(), "period": qp.period}
    return rows


def random_basis_elements(rng: random.Random, count: int, max_degree: int = 4) -> list[DoublePartition]:
    pool = [dp for n in range(1, max_degree + 1) for dp in enumerate_double_partitions(n)]
    return [rng.choice(pool) for _ in range(count)]


def four_way(P, top: int) -> None:
    """Raise unless the four routes to ``beta_0..beta_top`` agree."""
    gf = betti_coeffs(P, top)
    direct = [stable_betti_direct(P, i).value for i in range(top + 1)]
    rec = recurrence(P)
    unrolled = rec.unroll(gf, top + 1)
    qp = quasipolynomial(P)
    quasi = [qp(i) if i >= qp.valid_from else gf[i] for i in range(top + 1)]
    for name, seq in (("direct", direct), ("recurrence", unrolled), ("quasipolynomial", quasi)):
        if list(seq[:top + 1]) != gf:
            raise VerificationError(f"{name} Betti numbers differ from the generating function",
                                    {"poly": P.format(), "route": name})


def check_four_way(level: str, rng: random.Random) -> dict:
    top, count = _pick(level, (8, 3), (12, 10))
    named = canonical_rep_char_polys()
    for P in named.values():
        four_way(P, top)
    picked = random_basis_elements(rng, count)
    for dp in picked:
        four_way(binom_basis_element(dp.positive, dp.negative), top)
    return {"top": top, "random": [dp.to_text() for dp in picked]}


def check_double_gf(level: str, rng: random.Random) -> dict:
    n_max, z_order = _pick(level, (3, 6), (4, 8))
    out = []
    for text in ("|", "1|", "|1", "2|", "1|1"):
        out.append(verify_double_gf(DoublePartition.from_text(text), n_max, z_order).to_json())
    return {"reports": out}


def check_twisted_stability(level: str, rng: random.Random) -> dict:
    i_max = _pick(level, 3, 6)
    d_max = _pick(level, 2, 3)
    checked = 0
    for d in range(d_max + 1):
        for dp in (x for n in range(d + 1) for x in enumerate_double_partitions(n)):
            P = binom_basis_element(dp.positive, dp.negative)
            if P.degree() != d:
                continue
            for i in range(i_max + 1):
                stable_betti_direct(P, i)
                checked += 1
    return {"i_max": i_max, "degree_max": d_max, "checked": checked}


def check_gf_identities(level: str, rng: random.Random) -> dict:
    order = _pick(level, 6, 12)
    if not verify_exp_identity(order):
        raise VerificationError("exp-product identity fails", {"order": order})
    if not verify_euler_identity(order, 3 * order):
        raise VerificationError("Euler identity fails", {"order": order})
    n_max = _pick(level, 3, 4)
    for family in ("A", "BC"):
        for n in range(n_max + 1):
            for c in classes(family, n):
                mu, lam = (c, EMPTY) if family == "A" else (c.positive, c.negative)
                verify_average_gf(family, mu, lam, n_max)
    return {"order": order, "n_max": n_max}


@dataclass(frozen=True)
class Check:
    key: str
    title: str
    run: Callable[[str, random.Random], dict]


CHECKS = (
    Check("steinberg", "Steinberg counts of tori", check_steinberg),
    Check("lehrer-a", "Lehrer identity, type A", check_lehrer_a),
    Check("lehrer-bc", "Lehrer identity, type B/C", check_lehrer_bc),
    Check("oracle", "Graded characters vs determinant oracle", check_oracle),
    Check("multiplicity", "Multiplicities of irreducibles in R_n^i", check_multiplicity),
    Check("q-polys", "Character polynomials Q_i and stable range", check_q_polys),
    Check("asymptotics", "Asymptotic limits", check_asymptotics),
    Check("convergence", "Convergence at q = 2", check_convergence),
    Check("betti", "Stable Betti examples", check_betti_examples),
    Check("four-way", "Four-way Betti consistency", check_four_way),
    Check("double-gf", "Double generating function", check_double_gf),
    Check("stability", "Twisted homological stability", check_twisted_stability),
    Check("gf-identities", "Generating function identities", check_gf_identities),
)


def _run_one(index: int, level: str, seed: int) -> dict:
    check = CHECKS[index]
    # one RNG per check, so results do not depend on scheduling
    rng = random.Random(f"{seed}:{check.key}")
    start = time.perf_counter()
    try:
        details = check.run(level, rng)
        status, error = "pass", None
    except VerificationError as exc:
        details, status = getattr(exc, "details", None), "fail"
        error = str(exc)
    return {"id": index + 1, "key": check.key, "title": check.title, "status": status,
            "error": error, "details": details, "seconds": time.perf_counter() - start}


def thread_count() -> int:
    raw = os.environ.get("TORILAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"TORILAB_THREADS must be a positive integer, got {raw!r}") from None


def run_all(level: str, seed: int = 0, threads: int | None = None) -> list[dict]:
    """Run every check and return the results in fixed order."""
    _pick(level, None, None)
    threads = thread_count() if threads is None else threads
    idx = range(len(CHECKS))
    if threads <= 1:
        return [_run_one(i, level, seed) for i in idx]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, idx, [level] * len(CHECKS), [seed] * len(CHECKS)))
