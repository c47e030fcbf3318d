"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 enumeration/state cap exceeded,
3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections as bij
from . import closed_forms as cf
from . import genfunc as gf
from . import search
from .core import (
    CapExceededError,
    StatKind,
    TensorWord,
    TensorWordError,
    make_shape,
    statistic,
    word_from_values,
)

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _shape(args, attr="shape"):
    dims = getattr(args, attr)
    if dims is None:
        raise TensorWordError(f"--{attr.replace('_', '-')} is required")
    if args.k is None:
        raise TensorWordError("--k is required")
    return make_shape(dims, args.k)


def _load_word(args) -> TensorWord:
    if args.word:
        try:
            with open(args.word) as f:
                obj = json.load(f)
        except OSError as e:
            raise TensorWordError(f"cannot read word file {args.word}: {e.strerror}") from None
        except json.JSONDecodeError as e:
            raise TensorWordError(f"malformed word file {args.word}: {e.msg} at line {e.lineno}") from None
        w = TensorWord.from_json(obj)
        if args.shape is not None and tuple(args.shape) != w.shape.dims:
            raise TensorWordError(f"--shape {args.shape} disagrees with word file dims {list(w.shape.dims)}")
        if args.k is not None and args.k != w.shape.k:
            raise TensorWordError(f"--k {args.k} disagrees with word file k={w.shape.k}")
        return w
    if args.values is None:
        raise TensorWordError("give a word with --word FILE or --values v1,v2,...")
    return word_from_values(_shape(args), args.values)


# -- commands --------------------------------------------------------------------------


def cmd_stats(args):
    w = _load_word(args)
    return {kind: statistic(w, kind) for kind in ("des", "lev", "cycdes", "cyclev")}


def cmd_total(args):
    shape = _shape(args)
    kind = StatKind.parse(args.stat)
    if args.method == "formula":
        total = cf.total_for(shape, kind)
    elif args.method == "brute":
        total = search.brute_total(shape, kind, args.threads)
    else:
        total = gf.distribution_transfer(shape, kind).first_moment()
    return {"stat": kind.value, "dims": list(shape.dims), "k": shape.k, "method": args.method,
            "total": str(total)}


def cmd_dist(args):
    shape = _shape(args)
    if args.method == "brute":
        dist = gf.distribution_brute(shape, args.stat, args.threads)
    else:
        dist = gf.distribution_transfer(shape, args.stat)
    return dist.to_json()


def cmd_max(args):
    shape = _shape(args)
    return search.brute_max(shape, args.stat, args.threads).to_json()


def cmd_bound(args):
    shape = _shape(args)
    out = {"dims": list(shape.dims), "k": shape.k,
           "cycdes_upper_bound": str(cf.cycdes_upper_bound(shape))}
    if shape.d == 1:
        out["max_descents_1d"] = str(cf.max_descents_1d(shape.dims[0], shape.k))
    return out


def cmd_gf(args):
    base = _shape(args, "base_shape")
    if args.cyclic:
        kind = StatKind.CYCLEV if args.stat == "lev" else StatKind.CYCDES
    else:
        kind = StatKind.LEV if args.stat == "lev" else StatKind.DES
    g = gf.build_gf(base, kind)
    return {
        "stat": kind.value,
        "base_dims": list(base.dims),
        "k": base.k,
        "numerator": [str(c) for c in g.numerator],
        "denominator": [str(c) for c in g.denominator],
        "scale": g.scale,
        "series": [str(c) for c in gf.series_coefficients(g, args.terms)],
    }


def cmd_bij(args):
    op = args.op
    if op in ("phi", "normalize"):
        w = _load_word(args)
        if op == "phi":
            y = bij.phi(w)
            return {"bits": str(y), "bound": y.bound, "popcount": y.popcount(),
                    "des": statistic(w, "des")}
        x = bij.cyclic_normalize(w)
        return {"word": list(x.values), "des": statistic(x, "des"), "cycdes": statistic(w, "cycdes")}
    if args.k is None:
        raise TensorWordError("--k is required")
    if op in ("theta", "decompose"):
        if args.bits is None:
            raise TensorWordError(f"bij {op} needs --bits")
        bound = args.k - 1 if op == "theta" else max(args.k, 1)
        y = bij.BoundedRunBinary.parse(args.bits, bound)
        if op == "decompose":
            return {"bits": str(y), "runs": [list(r) for r in bij.run_decompose(y)]}
        x = bij.theta(y, args.k)
        return {"word": list(x.values), "des": statistic(x, "des"), "popcount": y.popcount()}
    if args.n is None:
        raise TensorWordError(f"bij {op} needs --n")
    if op == "extremal-binary":
        y = bij.extremal_binary(args.n, args.k)
        return {"bits": str(y), "popcount": y.popcount(),
                "formula": str(cf.max_ones_bounded_run(args.n, args.k))}
    x = bij.extremal_word(args.n, args.k)
    return {"word": list(x.values), "des": statistic(x, "des"),
            "formula": str(cf.max_descents_1d(args.n, args.k))}


def cmd_verify(args):
    return search.verify_suite(args.cap, threads=args.threads)


# -- output ------------------------------------------------------------------------------


def _to_csv(obj) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, search.VerifyReport):
        out.writerow(["status", "check", "dims", "k", "stat", "formula", "oracle"])
        for r in obj.rows:
            out.writerow([r.status, r.check, "x".join(map(str, r.dims)), r.k, r.kind,
                          json.dumps(r.formula), json.dumps(r.oracle)])
        return buf.getvalue()
    if "coeffs" in obj:
        out.writerow(["value", "count"])
        for i, c in enumerate(obj["coeffs"]):
            out.writerow([i, c])
        return buf.getvalue()
    if "series" in obj:
        out.writerow(["power", "coefficient"])
        for i, c in enumerate(obj["series"]):
            out.writerow([i, c])
        return buf.getvalue()
    out.writerow(["key", "value"])
    for key, v in obj.items():
        out.writerow([key, v if isinstance(v, (str, int)) else json.dumps(v, separators=(",", ":"))])
    return buf.getvalue()


def _render(obj, fmt: str) -> str:
    if fmt == "csv":
        return _to_csv(obj)
    if isinstance(obj, search.VerifyReport):
        if fmt == "table":
            return obj.table() + "\n"
        obj = obj.to_json()
    return json.dumps(obj, separators=(",", ":")) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tensorwords", description="Descent and level statistics of tensor words.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, shape=True, fmt=("json", "csv")):
        if shape:
            sp.add_argument("--shape", type=_int_list, help="comma-separated axis lengths, e.g. 3,4")
        sp.add_argument("--k", type=int, help="alphabet size")
        sp.add_argument("--format", choices=fmt, default="json")
        sp.add_argument("--threads", type=int, default=1, help="threads for exhaustive sweeps")

    def word_args(sp):
        sp.add_argument("--word", help='JSON file {"dims": [...], "k": K, "values": [...]}')
        sp.add_argument("--values", type=_int_list, help="flat values, row-major, last axis fastest")

    kinds = [s.value for s in StatKind]

    sp = sub.add_parser("stats", help="des, lev, cycdes, cyclev of one word")
    common(sp)
    word_args(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("total", help="total of a statistic over all words of a shape")
    common(sp)
    sp.add_argument("--stat", choices=kinds, default="des")
    sp.add_argument("--method", choices=("formula", "brute", "transfer"), default="formula")
    sp.set_defaults(func=cmd_total)

    sp = sub.add_parser("dist", help="distribution polynomial of a statistic")
    common(sp)
    sp.add_argument("--stat", choices=("des", "lev", "cycdes", "cyclev"), default="des")
    sp.add_argument("--method", choices=("transfer", "brute"), default="transfer")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("max", help="exhaustive maximum of a statistic with a witness")
    common(sp)
    sp.add_argument("--stat", choices=kinds, default="cycdes")
    sp.set_defaults(func=cmd_max)

    sp = sub.add_parser("bound", help="upper bound on cyclic descents")
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("gf", help="generating function in the length of an appended axis")
    common(sp, shape=False)
    sp.add_argument("--base-shape", type=_int_list, dest="base_shape")
    sp.add_argument("--terms", type=int, default=8)
    sp.add_argument("--cyclic", action="store_true")
    sp.add_argument("--stat", choices=("des", "lev"), default="des")
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("bij", help="word <-> bounded-run binary maps")
    common(sp)
    word_args(sp)
    sp.add_argument("--op", required=True,
                    choices=("phi", "theta", "decompose", "normalize", "extremal-word", "extremal-binary"))
    sp.add_argument("--bits", help="binary sequence such as 0110")
    sp.add_argument("--n", type=int)
    sp.set_defaults(func=cmd_bij)

    sp = sub.add_parser("verify", help="run the formula-versus-enumeration suite")
    common(sp, shape=False, fmt=("json", "table", "csv"))
    sp.add_argument("--cap", type=int, default=None, help="enumeration cap for this run")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    # totals routinely exceed the default 4300-digit str() limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise TensorWordError("--threads must be >= 1")
        result = args.func(args)
        stdout.write(_render(result, args.format))
    except UsageError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    except CapExceededError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_CAP
    except (TensorWordError, cf.FormulaDomainError, gf.GFConsistencyError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    if isinstance(result, search.VerifyReport) and not result.passed:
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
