"""Command-line interface.

Exit codes: 0 success / predicate true, 1 predicate false or nothing found,
2 input error, 3 undecided (budget or work cap reached).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .arrays import (
    Alphabet,
    Equivalence,
    GArray,
    PairRecord,
    as_zo,
    check_almost_difference_set,
    check_difference_set,
    decide_equivalence,
    format_distribution,
    is_balanced,
    is_legendre_pair,
    is_perfect,
    is_sds,
    joint_census,
    yamada_pott_conditions,
)
from .constructions import (
    FAMILIES,
    resolve_field,
    ConstructionReport,
    backup_yp_pair,
    baumert_pair,
    dhm_array,
    ex57,
    paley_pair,
    slce_array,
    szekeres_pair,
    szekeres_whiteman_pair,
    yamada_pair,
    yp_to_perfect,
)
from .errors import ConstructionError, LegendrePairsError, ParseError
from .fields import (
    cyclotomic_classes,
    cyclotomic_number,
    proper_representation,
    t_alpha,
)
from .formats import (
    arrays_to_text,
    load_arrays,
    load_pair,
    make_record,
    record_to_text,
)
from .hadamard import build_hadamard, is_hadamard, is_skew_type, is_symmetric_matrix, parse_matrix_text
from .search import (
    DEFAULT_SEED,
    Checkpoint,
    SearchOutcome,
    SearchStatus,
    TABLE1_EXPECTED,
    TABLE2_COLUMNS,
    TABLE2_ROWS,
    search_legendre_random,
    search_typed_legendre,
    search_yamada_pott,
    table1,
    table2,
)

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_alpha(text: str | None):
    if text is None:
        return None
    text = text.strip()
    if "," in text:
        return tuple(int(c) for c in text.split(","))
    return int(text)


# construct ---------------------------------------------------------------------


def _report_arrays(report: ConstructionReport) -> dict[str, GArray]:
    out: dict[str, GArray] = {}
    if isinstance(report.output, PairRecord):
        out["a"], out["b"] = report.output.a, report.output.b
    else:
        out["s"] = report.output
    for name, extra in report.extras.items():
        if isinstance(extra, PairRecord):
            out[f"{name}.a"], out[f"{name}.b"] = extra.a, extra.b
        else:
            out[name] = extra
    return out


def _construct(args: argparse.Namespace) -> ConstructionReport:
    fam = args.family
    alphabet = Alphabet(args.alphabet)
    alpha = _parse_alpha(args.alpha)

    def need_q() -> int:
        if args.q is None:
            raise UsageError(f"construct {fam} needs --q")
        return args.q

    if fam == "slce":
        return slce_array(need_q(), alpha, alphabet)
    if fam == "dhm":
        return dhm_array(need_q(), alpha, args.cls, alphabet)
    if fam == "yamada":
        return yamada_pair(need_q(), alpha, alphabet)
    if fam == "backup-yp":
        return backup_yp_pair(need_q(), alpha)
    if fam == "szekeres":
        return szekeres_pair(need_q(), alpha, alphabet)
    if fam == "szekeres-whiteman":
        return szekeres_whiteman_pair(need_q(), alpha, alphabet)
    if fam == "paley":
        return paley_pair(need_q(), alpha, alphabet)
    if fam == "baumert":
        if args.q1 is None:
            raise UsageError("construct baumert needs --q1")
        return baumert_pair(args.q1, args.q2 if args.q2 is not None else args.q1 + 2, alphabet)
    if fam == "ex57":
        return ex57()
    if fam == "yp-lift":
        if args.pair is None:
            raise UsageError("construct yp-lift needs --pair FILE")
        pair = load_pair(args.pair)
        return yp_to_perfect(pair.a, pair.b, args.complement)
    raise UsageError(f"unknown family {fam!r}")  # pragma: no cover - argparse restricts choices


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        report = _construct(args)
        code = EXIT_TRUE
    except ConstructionError as exc:
        if exc.report is None:
            raise
        report, code = exc.report, EXIT_FALSE
        print(f"construction failed: {exc}", file=sys.stderr)
    arrays = _report_arrays(report)
    if args.format == "arr":
        _emit(arrays_to_text(arrays.values()), args.out)
    else:
        record = make_record(
            f"construct:{report.name}", report.parameters, arrays, report.verification,
            {"properties": report.properties},
        )
        _emit(record_to_text(record), args.out)
    return code


# verify ----------------------------------------------------------------------------


def _ints(text: str | None, count: int, name: str) -> list[int]:
    if text is None:
        raise UsageError(f"predicate needs --params {name}")
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--params must be comma-separated integers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"--params needs {count} values ({name}), got {len(vals)}")
    return vals


def _verify_matrix(paths: Sequence[str]) -> tuple[bool, dict[str, Any]]:
    if len(paths) != 1:
        raise UsageError("hadamard predicate takes one matrix file")
    try:
        M = parse_matrix_text(Path(paths[0]).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {paths[0]}: {exc.strerror}") from None
    ok = is_hadamard(M)
    return ok, {"order": int(M.shape[0]), "hadamard": ok,
                "symmetric": is_symmetric_matrix(M), "skew_type": is_skew_type(M)}


def cmd_verify(args: argparse.Namespace) -> int:
    pred = args.predicate
    if pred == "hadamard":
        ok, info = _verify_matrix(args.files)
        record = make_record("verify", {"predicate": pred, "files": args.files}, {}, {pred: ok}, {"report": info})
        _emit(record_to_text(record), args.out)
        return EXIT_TRUE if ok else EXIT_FALSE

    arrays: list[GArray] = []
    for f in args.files:
        arrays.extend(load_arrays(f))
    if not arrays:
        raise ParseError("no arrays in input")
    info: dict[str, Any] = {}
    if pred in ("legendre", "yamada-pott"):
        if len(arrays) != 2:
            raise UsageError(f"{pred} needs exactly 2 arrays, got {len(arrays)}")
        a, b = arrays
        pair = PairRecord(a, b)
        za, zb = as_zo(a), as_zo(b)
        info["joint_census"] = [int(x) for x in joint_census(a.group, [za.one_set, zb.one_set])]
        if pred == "legendre":
            ok = is_legendre_pair(a, b)
        else:
            conds = yamada_pott_conditions(a, b)
            info["conditions"] = conds
            ok = all(conds.values())
        info["symmetry_types"] = [t.value for t in pair.symmetry_types]
    elif pred in ("perfect", "balanced"):
        if len(arrays) != 1:
            raise UsageError(f"{pred} needs exactly 1 array, got {len(arrays)}")
        a = arrays[0]
        ok = is_perfect(a) if pred == "perfect" else is_balanced(a)
        info["row_sum"] = a.row_sum()
        info["autocorrelation"] = [int(x) for x in a.autocorrelation]
    elif pred in ("ds", "ads"):
        if len(arrays) != 1:
            raise UsageError(f"{pred} needs exactly 1 array, got {len(arrays)}")
        a = as_zo(arrays[0])
        if pred == "ds":
            v, k, lam = _ints(args.params, 3, "v,k,lambda")
            check = check_difference_set(a.group, a.one_set, v, k, lam)
        else:
            v, k, lam, t = _ints(args.params, 4, "v,k,lambda,t")
            check = check_almost_difference_set(a.group, a.one_set, v, k, lam, t)
        ok = check.ok
        info["reason"] = check.reason
        info["census"] = list(check.census)
    elif pred == "sds":
        (lam,) = _ints(args.params, 1, "lambda")
        group = arrays[0].group
        sets = [as_zo(x).one_set for x in arrays]
        ok = is_sds(group, sets, lam)
        info["joint_census"] = [int(x) for x in joint_census(group, sets)]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown predicate {pred!r}")
    named = {f"x{i}": x for i, x in enumerate(arrays)}
    record = make_record("verify", {"predicate": pred, "files": args.files, "params": args.params},
                         named, {pred: ok}, {"report": info})
    _emit(record_to_text(record), args.out)
    return EXIT_TRUE if ok else EXIT_FALSE


# search -----------------------------------------------------------------------------


def _outcome_record(mode: str, params: dict[str, Any], res: SearchOutcome) -> dict[str, Any]:
    arrays = {}
    if res.certificate is not None:
        arrays = {"a": res.certificate.a, "b": res.certificate.b}
    extra = {
        "status": res.status.value,
        "census": res.census,
        "covered": res.covered,
        "cardinality": res.cardinality,
        "cases": [
            {"k": c.k, "status": c.status.value, "census": c.census,
             "covered": c.covered, "cardinality": c.cardinality}
            for c in res.cases
        ],
    }
    if res.checkpoint is not None:
        extra["checkpoint"] = res.checkpoint.to_text()
    verification = {}
    if res.certificate is not None:
        verification["legendre"] = is_legendre_pair(res.certificate.a, res.certificate.b)
    return make_record(f"search:{mode}", params, arrays, verification, extra)


def cmd_search(args: argparse.Namespace) -> int:
    resume = Checkpoint.load(args.resume) if args.resume else None
    weights = [args.weight] if args.weight is not None else None
    params: dict[str, Any] = {"n": args.n, "budget": args.budget, "threads": args.threads}
    if args.mode == "yp":
        res = search_yamada_pott(args.n, args.budget, args.threads, weights=weights, resume=resume)
    elif args.mode == "typed":
        if args.a is None or args.b is None:
            raise UsageError("search typed needs --a and --b")
        params |= {"a": args.a, "b": args.b}
        res = search_typed_legendre(args.n, args.a, args.b, args.budget, args.threads,
                                    weights=weights, force=args.force, resume=resume)
    else:
        budget = args.budget if args.budget is not None else 1_000_000
        params |= {"seed": args.seed, "budget": budget, "multiplier": args.multiplier}
        res = search_legendre_random(args.n, args.seed, budget, multiplier=args.multiplier)
    if res.checkpoint is not None and args.checkpoint:
        res.checkpoint.save(args.checkpoint)
    _emit(record_to_text(_outcome_record(args.mode, params, res)), args.out)
    print(f"{args.mode} n={args.n}: {res.status.value} (census {res.census})", file=sys.stderr)
    return {SearchStatus.FOUND: EXIT_TRUE, SearchStatus.EXHAUSTED_NONE: EXIT_FALSE,
            SearchStatus.BUDGET_EXCEEDED: EXIT_UNDECIDED}[res.status]


# report ------------------------------------------------------------------------------


def _range(spec: str | None, default: Sequence[int]) -> list[int]:
    if spec is None:
        return list(default)
    lo, sep, hi = spec.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"range must look like 3..31, got {spec!r}") from None
    ns = [n for n in range(lo_i, hi_i + 1) if n % 2 == 1 and n >= 3]
    if not ns:
        raise UsageError(f"range {spec!r} contains no odd n >= 3")
    return ns


def _cell(found: bool, expected: bool | None, yes: str, no: str) -> str:
    text = yes if found else no
    if expected is not None and found != expected:
        text = f"**{text}** (expected {yes if expected else no})"
    return text


def render_table1(cells, fmt: str) -> str:
    rows = [("n", "Yamada-Pott pair")]
    rows += [(str(c.key[0]), _cell(c.found, c.expected, "Y", "N")) for c in cells]
    return _render(rows, fmt)


def render_table2(cells, fmt: str) -> str:
    ns = sorted({c.key[2] for c in cells})
    by = {c.key: c for c in cells}
    rows = [("A&B",) + tuple(str(n) for n in ns)]
    for a, b in TABLE2_ROWS:
        rows.append((f"{a}&{b}",) + tuple(
            _cell(by[(a, b, n)].found, by[(a, b, n)].expected, "E", "NE") for n in ns))
    return _render(rows, fmt)


def _render(rows: list[tuple[str, ...]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(rows[0]) + " |", "|" + "---|" * len(rows[0])]
    lines += ["| " + " | ".join(r) + " |" for r in rows[1:]]
    return "\n".join(lines) + "\n"


def cmd_report(args: argparse.Namespace) -> int:
    if args.table == "table1":
        cells = table1(_range(args.range, sorted(TABLE1_EXPECTED)), args.threads)
        render = render_table1
    else:
        cells = table2(_range(args.range, TABLE2_COLUMNS), args.threads)
        render = render_table2
    _emit(render(cells, args.format), args.out)
    if args.csv:
        Path(args.csv).write_text(render(cells, "csv"))
    mismatches = [c.key for c in cells if not c.matches]
    if mismatches:
        print(f"MISMATCH in {len(mismatches)} cell(s): {mismatches}", file=sys.stderr)
        return EXIT_FALSE
    return EXIT_TRUE


# hadamard / equiv / field --------------------------------------------------------------------


def cmd_hadamard(args: argparse.Namespace) -> int:
    pair = load_pair(args.pair)
    H = build_hadamard(pair.a, pair.b, args.variant, source=str(args.pair))
    _emit(H.to_text(), args.out)
    kind = "symmetric" if is_symmetric_matrix(H.entries) else "skew-type" if is_skew_type(H.entries) else "general"
    print(f"{args.variant}: Hadamard of order {H.order} ({kind})", file=sys.stderr)
    return EXIT_TRUE


def cmd_equiv(args: argparse.Namespace) -> int:
    p1, p2 = load_pair(args.first), load_pair(args.second)
    outcome = decide_equivalence(p1, p2, cap=args.cap)
    for name, p in (("first", p1), ("second", p2)):
        print(f"{name}: energies {p.energies[0]}, {p.energies[1]}")
        print(f"  a: {format_distribution(p.distributions[0])}")
        print(f"  b: {format_distribution(p.distributions[1])}")
    print(f"equivalence: {outcome.value}")
    return {Equivalence.EQUIVALENT: EXIT_TRUE, Equivalence.NOT_EQUIVALENT: EXIT_FALSE,
            Equivalence.UNDECIDED: EXIT_UNDECIDED}[outcome]


def cmd_field(args: argparse.Namespace) -> int:
    f = resolve_field(args.q, _parse_alpha(args.alpha))
    print(f"q = {f.q} = {f.p}^{f.m}")
    print(f"modulus (low degree first): {list(f.modulus)}")
    print(f"alpha = {f.alpha} (coefficients {list(f.digits(f.alpha))})")
    if args.d:
        classes = cyclotomic_classes(f, args.d)
        for i in range(args.d):
            print(f"C{i} = {sorted(classes[i])}")
        print("cyclotomic numbers (i,j):")
        for i in range(args.d):
            print("  " + " ".join(f"{cyclotomic_number(classes, i, j):3d}" for j in range(args.d)))
    if f.p % 4 == 1:
        rep = proper_representation(f.q)
        print(f"proper representation: q = ({rep.s})^2 + 4*({rep.t_abs})^2")
        if f.q % 8 == 5:
            print(f"t(alpha) = {t_alpha(f, rep)}")
    return EXIT_TRUE


# parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legendre-pairs", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an array or pair from a known family")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("--q", type=int)
    c.add_argument("--q1", type=int)
    c.add_argument("--q2", type=int)
    c.add_argument("--alpha", help="primitive element as int or comma-separated coefficients")
    c.add_argument("--class", dest="cls", type=int, default=3, choices=(1, 2, 3))
    c.add_argument("--alphabet", choices=("zo", "pm1"), default="zo")
    c.add_argument("--pair", help="Yamada-Pott pair file for yp-lift")
    c.add_argument("--complement", choices=("none", "A", "B"), default="none")
    c.add_argument("--format", choices=("json", "arr"), default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a predicate on array or matrix files")
    v.add_argument("files", nargs="+")
    v.add_argument("--predicate", required=True,
                   choices=("legendre", "yamada-pott", "perfect", "balanced", "sds", "ds", "ads", "hadamard"))
    v.add_argument("--params", help="design parameters: v,k,lambda (ds), v,k,lambda,t (ads), lambda (sds)")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive or randomized pair search on Z_n")
    s.add_argument("mode", choices=("yp", "typed", "random"))
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--a", help="type of a: S, Sk, N or any")
    s.add_argument("--b", help="type of b: S, Sk, N or any")
    s.add_argument("--weight", type=int, help="restrict to one weight case k = (n +/- 1)/2")
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--checkpoint", help="where to save a checkpoint if the budget runs out")
    s.add_argument("--resume", help="checkpoint file to resume from")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--multiplier", type=int, help="random mode: keep arrays invariant under x -> u x")
    s.add_argument("--force", action="store_true", help="allow unconstrained exhaustive search")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("report", help="regenerate the existence tables")
    r.add_argument("table", choices=("table1", "table2"))
    r.add_argument("--range", help="odd n range such as 3..31")
    r.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    r.add_argument("--csv", help="also write CSV to this path")
    r.add_argument("--threads", type=int, default=None)
    r.add_argument("--out")
    r.set_defaults(func=cmd_report)

    h = sub.add_parser("hadamard", help="bordered Hadamard matrix from a Legendre pair")
    h.add_argument("pair")
    h.add_argument("--variant", choices=("sym", "skew"), default="sym")
    h.add_argument("--out")
    h.set_defaults(func=cmd_hadamard)

    e = sub.add_parser("equiv", help="decide equivalence of two pairs")
    e.add_argument("first")
    e.add_argument("second")
    e.add_argument("--cap", type=int, default=10**8, help="work cap before answering undecided")
    e.set_defaults(func=cmd_equiv)

    f = sub.add_parser("field", help="inspect GF(q): modulus, alpha, cyclotomy, t(alpha)")
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--alpha")
    f.add_argument("--d", type=int, help="also list cyclotomic classes and numbers of order d")
    f.set_defaults(func=cmd_field)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LegendrePairsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
