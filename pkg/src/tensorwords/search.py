"""Exhaustive enumeration: totals, maxima with witnesses, and the verification suite."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from . import bijections as bij
from . import closed_forms as cf
from . import genfunc as gf
from .core import (
    Shape,
    StatKind,
    TensorWord,
    enumeration_cap,
    iter_words,
    make_shape,
    statistic,
    word_unrank,
)
from .sweep import sweep_max, sweep_total


@dataclass(frozen=True)
class MaxResult:
    value: int
    witness: TensorWord
    explored: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_json(),
            "explored": str(self.explored),
        }


def brute_total(shape: Shape, kind: "StatKind | str", threads: int = 1, cap: int | None = None) -> int:
    return sweep_total(shape, StatKind.parse(kind), threads, cap)


def brute_max(shape: Shape, kind: "StatKind | str", threads: int = 1, cap: int | None = None) -> MaxResult:
    """Maximum of the statistic with the lexicographically least maximiser."""
    value, rank = sweep_max(shape, StatKind.parse(kind), threads, cap)
    return MaxResult(value, word_unrank(shape, rank, cap), shape.universe_size)


# -- verification suite --------------------------------------------------------------

PASS, FAIL, OUTSIDE = "pass", "fail", "outside-validity"

# (dims, k) pairs; shapes whose universe exceeds the cap are skipped.
DEFAULT_GRID: tuple[tuple[tuple[int, ...], int], ...] = (
    ((1,), 2),
    ((2,), 2),
    ((3,), 3),
    ((4,), 3),
    ((5,), 2),
    ((6,), 2),
    ((1, 3), 2),
    ((2, 2), 2),
    ((2, 3), 2),
    ((3, 3), 2),
    ((2, 2), 3),
    ((3, 4), 3),
    ((2, 2, 2), 2),
    ((2, 2, 3), 2),
)

# (n, k) for the one-dimensional max-descent and bijection checks
DEFAULT_WORD_GRID: tuple[tuple[int, int], ...] = ((4, 3), (5, 2), (6, 2), (6, 3), (7, 3))
DEFAULT_RUN_GRID: tuple[tuple[int, int], ...] = ((5, 2), (7, 1), (10, 3), (12, 4))


@dataclass
class VerifyRow:
    check: str
    dims: tuple[int, ...]
    k: int
    kind: str
    formula: object
    oracle: object
    status: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def add(self, check, shape_or_dims, k, kind, formula, oracle, ok=None, outside=False, note=""):
        dims = shape_or_dims.dims if isinstance(shape_or_dims, Shape) else tuple(shape_or_dims)
        if outside:
            status = OUTSIDE
        else:
            ok = (formula == oracle) if ok is None else ok
            status = PASS if ok else FAIL
        self.rows.append(VerifyRow(check, dims, k, kind, formula, oracle, status, note))

    def to_json(self) -> dict:
        def clean(v):
            if isinstance(v, int) and not isinstance(v, bool):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [clean(x) for x in v]
            return v

        rows = []
        for r in self.rows:
            d = asdict(r)
            d["dims"] = list(r.dims)
            d["formula"] = clean(r.formula)
            d["oracle"] = clean(r.oracle)
            rows.append(d)
        return {"passed": self.passed, "rows": rows}

    def table(self) -> str:
        header = ("status", "check", "shape", "k", "stat", "formula", "oracle")
        body = [
            (
                r.status,
                r.check,
                "x".join(map(str, r.dims)) if r.dims else "-",
                str(r.k),
                r.kind,
                _short(r.formula),
                _short(r.oracle),
            )
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header, *body]]
        summary = sum(r.status == PASS for r in self.rows), sum(r.status == FAIL for r in self.rows)
        lines.append(f"{summary[0]} passed, {summary[1]} failed, "
                     f"{sum(r.status == OUTSIDE for r in self.rows)} outside formula validity")
        return "\n".join(lines)


def _short(v) -> str:
    s = json.dumps(v) if isinstance(v, (list, tuple)) else str(v)
    return s if len(s) <= 40 else s[:37] + "..."


def _check_shape(report: VerifyReport, shape: Shape, cap: int, threads: int) -> None:
    k = shape.k
    valid_cyclic = cf.cyclic_formula_valid(shape)
    for kind in StatKind:
        try:
            formula = cf.total_for(shape, kind)
        except cf.FormulaDomainError:
            formula = None
        oracle = brute_total(shape, kind, threads, cap)
        if kind.cyclic and not valid_cyclic:
            report.add("total", shape, k, kind.value, formula, oracle, outside=True,
                       note="cyclic formula needs every axis >= 2")
        else:
            report.add("total", shape, k, kind.value, formula, oracle)

    if k >= 2:
        report.add("ratio lev*(k-1)=2*des", shape, k, "lev",
                   cf.total_levels(shape) * (k - 1), 2 * cf.total_descents(shape))
        if valid_cyclic:
            report.add("ratio lev*(k-1)=2*des", shape, k, "cyclev",
                       cf.cyc_total_levels(shape) * (k - 1), 2 * cf.cyc_total_descents(shape))

    best = brute_max(shape, StatKind.CYCDES, threads, cap)
    bound = cf.cycdes_upper_bound(shape)
    report.add("cycdes bound dominates max", shape, k, "cycdes", bound, best.value,
               ok=best.value <= bound)

    if shape.d >= 2 and k ** (shape.cell_count // shape.dims[-1]) <= gf.DEFAULT_STATE_CAP:
        for kind in (StatKind.DES, StatKind.LEV, StatKind.CYCDES, StatKind.CYCLEV):
            t = gf.distribution_transfer(shape, kind)
            b = gf.distribution_brute(shape, kind, threads, cap)
            report.add("transfer distribution", shape, k, kind.value, list(t.coeffs), list(b.coeffs))

        base = make_shape(shape.dims[:-1], k)
        M = shape.dims[-1]
        for kind in (StatKind.DES, StatKind.LEV, StatKind.CYCDES, StatKind.CYCLEV):
            if kind.cyclic and (M < 2 or not cf.cyclic_formula_valid(base)):
                continue
            coeff = gf.series_coefficients(gf.build_gf(base, kind), M + 1)[M]
            report.add("gf coefficient", shape, k, kind.value, coeff, brute_total(shape, kind, threads, cap))


def _check_words(report: VerifyReport, n: int, k: int, cap: int, threads: int) -> None:
    shape = make_shape([n], k)
    formula = cf.max_descents_1d(n, k)
    for kind in (StatKind.DES, StatKind.CYCDES):
        report.add("max descents [k]^n", shape, k, kind.value, formula,
                   brute_max(shape, kind, threads, cap).value)
    ext = bij.extremal_word(n, k)
    report.add("extremal word attains max", shape, k, "des", formula, statistic(ext, StatKind.DES))

    words = list(iter_words(shape, cap))
    if k >= 2:
        good = sum(bij.phi(w).popcount() == statistic(w, StatKind.DES) for w in words)
        report.add("popcount(phi(x)) = des(x)", shape, k, "des", len(words), good)
        if 2 ** (n - 1) <= cap:
            ys = list(bij.iter_bounded_run(n - 1, k - 1))
            good = sum(statistic(bij.theta(y, k), StatKind.DES) == y.popcount() for y in ys)
            report.add("des(theta(y)) = popcount(y)", shape, k, "des", len(ys), good)
    good = 0
    for w in words:
        x = bij.cyclic_normalize(w)
        c = statistic(w, StatKind.CYCDES)
        good += statistic(x, StatKind.CYCDES) == c == statistic(x, StatKind.DES)
    report.add("cyclic_normalize: cycdes = des", shape, k, "cycdes", len(words), good)


def _check_runs(report: VerifyReport, n: int, k: int) -> None:
    formula = cf.max_ones_bounded_run(n, k)
    best = max((y.popcount() for y in bij.iter_bounded_run(n, k)), default=0)
    report.add("max ones in C(n,k)", (n,), k, "ones", formula, best)
    report.add("extremal binary attains max", (n,), k, "ones", formula, bij.extremal_binary(n, k).popcount())


def verify_suite(
    cap: int | None = None,
    grid: Iterable[tuple[Iterable[int], int]] = DEFAULT_GRID,
    word_grid: Iterable[tuple[int, int]] = DEFAULT_WORD_GRID,
    run_grid: Iterable[tuple[int, int]] = DEFAULT_RUN_GRID,
    threads: int = 1,
) -> VerifyReport:
    """Compare every closed form, generating function and bijection with enumeration.

    Items whose enumeration would exceed ``cap`` are skipped, so ``cap=0``
    gives an empty (vacuously passing) report.
    """
    cap = enumeration_cap() if cap is None else cap
    report = VerifyReport()
    for dims, k in grid:
        shape = make_shape(dims, k)
        if shape.universe_size <= cap:
            _check_shape(report, shape, cap, threads)
    for n, k in word_grid:
        if k**n <= cap:
            _check_words(report, n, k, cap, threads)
    for n, k in run_grid:
        if 2**n <= cap:
            _check_runs(report, n, k)
    return report

