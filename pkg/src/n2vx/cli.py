"""n2vx command line.

Every command prints one record: the command, its canonical inputs and a
result payload.  Exit status is 0 on success, 1 on a usage or parse error and
2 when a verification suite fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import re
import sys
from fractions import Fraction

from . import affine_sl2, classification, coset, free_field
from .checks import jacobi_affine, jacobi_n2
from .exact_linalg import format_rational, parse_rational
from .verma_n2 import HighestWeightN2, gram_matrix, singular_vectors, weight_space_basis

EXIT_OK, EXIT_PARSE, EXIT_FAIL = 0, 1, 2
_NEGATIVE = re.compile(r"-[0-9]+(/[0-9]+)?")
SUITES = ("ks", "anti-ks", "fminus", "jacobi", "casimir-identity")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _half(text: str) -> Fraction:
    x = _rat(text)
    if (2 * x).denominator != 1 or x < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a nonnegative multiple of 1/2")
    return x


def _int(text: str) -> int:
    x = _rat(text)
    if x.denominator != 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    return int(x)


def _fmt(x) -> str:
    return format_rational(Fraction(x))


def _mon(mon) -> str:
    return "*".join(repr(u) for u in mon) or "1"


# -- commands -------------------------------------------------------------
# each returns (inputs, result, rows, passed); rows feed csv/table output

def cmd_classify(a):
    v = classification.classify(a.h, a.q, a.m)
    res = v.as_dict()
    row = {"verdict": v.tag}
    for key, val in (v.witness_dict() or {}).items():
        row[key] = val if isinstance(val, str) else str(val)
    return {"m": _fmt(a.m), "h": _fmt(a.h), "q": _fmt(a.q)}, res, [row], True


def cmd_enum(a):
    inputs = {"what": a.what, "m": _fmt(a.m)}
    if a.what == "W":
        rows = [e.as_dict() for e in classification.enumerate_W(a.m)]
        rows = [{k: str(v) for k, v in r.items()} for r in rows]
        res = {"count": len(rows), "entries": rows}
    elif a.what == "S":
        vals = [_fmt(x) for x in affine_sl2.enumerate_S(a.m)]
        rows = [{"r": x} for x in vals]
        res = {"count": len(vals), "values": vals}
    else:
        rows = [{"k": str(w.k), "n": str(w.n), "lambda0": _fmt(w.lambda0),
                 "lambda1": _fmt(w.lambda1)} for w in affine_sl2.enumerate_P(a.m)]
        res = {"count": len(rows), "weights": rows}
    return inputs, res, rows, True


def _hw_inputs(a):
    return {"module": a.m_module, "h": _fmt(a.h), "q": _fmt(a.q), "c": _fmt(a.c),
            "level": _fmt(a.level), "charge": str(a.charge)}


def cmd_gram(a):
    hw = HighestWeightN2(a.h, a.q, a.c)
    basis = weight_space_basis(hw, a.level, a.charge)
    G = gram_matrix(hw, a.level, a.charge)
    mat = [[_fmt(x) for x in row] for row in G.to_lists()]
    res = {"basis": [_mon(b) for b in basis], "gram": mat}
    rows = [{"basis": _mon(b), **{f"col{j}": x for j, x in enumerate(r)}} for b, r in zip(basis, mat)]
    return _hw_inputs(a), res, rows, True


def cmd_singular(a):
    hw = HighestWeightN2(a.h, a.q, a.c)
    vecs = singular_vectors(hw, a.level, a.charge)
    out = [{_mon(k): _fmt(c) for k, c in sorted(v.terms.items())} for v in vecs]
    rows = [{"vector": str(i), "monomial": k, "coeff": c}
            for i, v in enumerate(out) for k, c in v.items()]
    return _hw_inputs(a), {"count": len(out), "vectors": out}, rows, True


def _depth(a, default):
    d = a.depth if a.depth is not None else Fraction(default)
    cap = os.environ.get("N2VX_MAX_DEPTH")
    capped = None
    if cap:
        limit = parse_rational(cap)
        if d > limit:
            capped, d = d, limit
    return d, capped


def cmd_verify(a):
    inputs = {"suite": a.suite}
    if a.suite in ("ks", "anti-ks", "casimir-identity"):
        if a.m is None:
            raise UsageError(f"--m is required for suite {a.suite}")
        inputs["m"] = _fmt(a.m)
    if a.suite == "fminus":
        table = free_field.verify_prop_fminus()
        rows = [{"clause": c, "statement": s, "passed": str(p).lower()} for c, s, p in table]
        ok = all(p for _, _, p in table)
        return inputs, {"passed": ok, "clauses": rows}, rows, ok
    if a.suite == "casimir-identity":
        if (a.h is None) != (a.q is None):
            raise UsageError("--h and --q go together")
        if a.h is not None:
            points = [(a.h, a.q)]
            inputs.update(h=_fmt(a.h), q=_fmt(a.q))
        else:
            rng = random.Random(a.seed)
            points = [(Fraction(rng.randint(-30, 30), rng.randint(1, 12)),
                       Fraction(rng.randint(-30, 30), rng.randint(1, 12))) for _ in range(a.samples)]
            inputs.update(seed=str(a.seed), samples=str(a.samples))
        reps = [coset.casimir_identity_check(h, q, a.m) for h, q in points]
        rows = [{k: str(v) for k, v in r.details.items()} | {"passed": str(r.passed).lower()}
                for r in reps]
        ok = all(r.passed for r in reps)
        return inputs, {"passed": ok, "points": rows}, rows, ok

    default = {"ks": 2, "anti-ks": 2, "jacobi": 3}[a.suite]
    d, capped = _depth(a, default)
    inputs["depth"] = _fmt(d)
    if capped is not None:
        inputs["depth_requested"] = _fmt(capped)
    if a.suite == "jacobi":
        b = int(d)
        n_n2, bad_n2 = jacobi_n2(b)
        n_af, bad_af = jacobi_affine(b)
        ok = not bad_n2 and not bad_af
        rows = [{"algebra": "n2", "triples": str(n_n2), "passed": str(not bad_n2).lower()},
                {"algebra": "affine-sl2", "triples": str(n_af), "passed": str(not bad_af).lower()}]
        res = {"passed": ok, "algebras": rows}
        if not ok:
            res["counterexample"] = [repr(t) for t in (bad_n2 or bad_af)[0]]
        return inputs, res, rows, ok
    if a.suite == "ks":
        resolution = coset.resolve_ks_assignment(a.m, 1)
        passing = [k for k, ok in resolution.items() if ok]
        species, nu_conv = passing[0] if passing else (coset.KS_DEFAULT, "untwisted")
        rep = coset.verify_ks(a.m, d, species, nu_convention=nu_conv)
        res = rep.as_dict()
        res["candidates"] = [{"species_assignment": s, "nu_convention": n, "passed": ok}
                             for (s, n), ok in resolution.items()]
        rows = [{"species_assignment": c["species_assignment"], "nu_convention": c["nu_convention"],
                 "passed": str(c["passed"]).lower()} for c in res["candidates"]]
        return inputs, res, rows, rep.passed
    rep = coset.verify_antiks(a.m, d)
    res = rep.as_dict()
    rows = [{"clause": c["clause"], "statement": c["statement"], "passed": str(c["passed"]).lower()}
            for c in res["clauses"]]
    rows.append({"clause": "bracket", "statement": f"{rep.checks} mode-pair checks",
                 "passed": str(rep.counterexample is None).lower()})
    return inputs, res, rows, rep.passed


# -- output ---------------------------------------------------------------

def _render(fmt, record, rows) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    header: list = []
    for r in rows:
        for k in r:
            if k not in header:
                header.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    table = [header] + [[str(r.get(k, "")) for k in header] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    if len(lines) > 1:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="n2vx", description="Exact computations for the N=2 superconformal algebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv", "table"), default="json")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("classify", help="decide whether L_{h,q,c_m} is an L_{c_m}-module")
    sp.add_argument("--m", type=_rat, required=True)
    sp.add_argument("--h", type=_rat, required=True)
    sp.add_argument("--q", type=_rat, required=True)
    common(sp)

    sp = sub.add_parser("enum", help="list W^{c_m}, S^m or the admissible weights P^m")
    sp.add_argument("--what", choices=("W", "S", "P"), required=True)
    sp.add_argument("--m", type=_rat, required=True)
    common(sp)

    for name, hlp in (("gram", "contravariant form on a Verma weight space"),
                      ("singular", "singular vectors in a Verma weight space")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--m-module", choices=("n2",), default="n2")
        sp.add_argument("--h", type=_rat, required=True)
        sp.add_argument("--q", type=_rat, required=True)
        sp.add_argument("--c", type=_rat, required=True)
        sp.add_argument("--level", type=_half, required=True)
        sp.add_argument("--charge", type=_int, required=True)
        common(sp)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--m", type=_rat)
    sp.add_argument("--depth", type=_half)
    sp.add_argument("--h", type=_rat)
    sp.add_argument("--q", type=_rat)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    return p


COMMANDS = {"classify": cmd_classify, "enum": cmd_enum, "gram": cmd_gram,
            "singular": cmd_singular, "verify": cmd_verify}


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-3/40" as an option; glue it to the preceding flag
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE.fullmatch(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        inputs, result, rows, passed = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"n2vx: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (affine_sl2.NotAdmissible, classification.LevelExcluded, ValueError) as exc:
        print(f"n2vx: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    record = {"command": args.command, "inputs": inputs, "result": result}
    text = _render(args.format, record, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
