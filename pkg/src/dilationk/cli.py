"""Command-line front end: ``dilationk {check,ktheory,filterbank,verify,normdecay}``.

Exit codes: 0 success, 1 usage or parse error, 2 not a dilation matrix,
3 a verification suite (or an internal consistency check) failed.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .bimodule import build_filterbank, check_orthonormal
from .exterior import enumerate_subsets
from .groups import AbelianGroup
from .ktheory import InternalConsistencyError, kgroups
from .linalg import IntegerMatrix
from .report import RunReport
from .stability import certify_dilation, norm_decay
from .verify import random_dilations, run_all

EXIT_OK, EXIT_USAGE, EXIT_NOT_DILATION, EXIT_VERIFY = 0, 1, 2, 3


class MatrixParseError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _parse_entry(tok, row: int):
    # JSON floats (even 2.0) and booleans are rejected, as are strings like "2.5"
    if isinstance(tok, int) and not isinstance(tok, bool):
        return tok
    if isinstance(tok, str):
        try:
            return int(tok)
        except ValueError:
            pass
    raise MatrixParseError("non-integer", f"non-integer entry {tok!r} in row {row}")


def _from_rows(rows) -> IntegerMatrix:
    if not rows or all(len(r) == 0 for r in rows):
        raise MatrixParseError("empty", "empty matrix")
    width = len(rows[0])
    for i, r in enumerate(rows, 1):
        if len(r) == 0:
            raise MatrixParseError("empty", f"empty row {i}")
        if len(r) != width:
            raise MatrixParseError("ragged", f"ragged row {i}: {len(r)} entries, expected {width}")
    data = [[_parse_entry(x, i) for x in r] for i, r in enumerate(rows, 1)]
    if len(data) != width:
        raise MatrixParseError("non-square", f"matrix is {len(data)}x{width}, not square")
    return IntegerMatrix(data, width)


def parse_matrix(source: str) -> IntegerMatrix:
    """Row text ("2 1; -1 2", "2,1;-1,2"), JSON {"matrix": [[...]]}, or a file holding either."""
    text = source
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if not text:
        raise MatrixParseError("empty", "empty input")
    if text[0] in "{[":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixParseError("syntax", f"invalid JSON: {exc.msg}") from None
        if isinstance(data, dict):
            if "matrix" not in data:
                raise MatrixParseError("syntax", 'JSON input needs a "matrix" key')
            data = data["matrix"]
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise MatrixParseError("syntax", "matrix must be a list of rows")
        return _from_rows(data)
    rows = re.split(r"\s*;\s*|\s*\n\s*", text)
    if len(rows) > 1 and not rows[-1]:
        rows.pop()  # tolerate a trailing separator
    return _from_rows([r.replace(",", " ").split() for r in rows])


def _base(command: str, a: IntegerMatrix, seed=None) -> tuple[RunReport, bool]:
    cert = certify_dilation(a)
    rep = RunReport(command, {"matrix": a.tolist()}, seed=seed, d=a.rows, det=cert.det,
                    dilation=cert.is_dilation, charpoly=list(cert.charpoly),
                    certificate=cert.as_dict())
    if not cert.is_dilation:
        rep.notes.append(f"not a dilation matrix: {cert.reason}")
    return rep, cert.is_dilation


def cmd_check(a) -> RunReport:
    return _base("check", a)[0]


def cmd_ktheory(a, grades=None) -> RunReport:
    rep, ok = _base("ktheory", a)
    if not ok:
        return rep
    try:
        res = kgroups(a)
    except InternalConsistencyError as exc:
        rep.notes.append(f"internal-consistency failure: {exc}")
        rep.verification = [{"name": "kgroups", "passed": False, "checks": 1,
                             "failure_count": 1, "failures": [str(exc)], "skipped": 0}]
        return rep
    rep.k0, rep.k1 = res.k0.as_dict(), res.k1.as_dict()
    rep.case = res.case_tag
    rep.summands = [s.as_dict() for s in res.summands if grades is None or s.n in grades]
    rep.identity_class = res.identity_class.as_dict()
    rep.notes.extend(res.notes)
    return rep


def cmd_filterbank(a) -> RunReport:
    rep, ok = _base("filterbank", a)
    if ok:
        fb = build_filterbank(a)
        rep.filterbank = fb.as_list()
        rep.orthonormal = check_orthonormal(fb).as_dict()
        if not rep.orthonormal["ok"]:
            rep.verification = [{"name": "filter bank orthonormality", "passed": False,
                                 "checks": 1, "failure_count": 1,
                                 "failures": [rep.orthonormal["detail"]], "skipped": 0}]
    return rep


def cmd_verify(a=None, random_spec=None, seed: int = 0) -> RunReport:
    if random_spec is not None:
        d, count = random_spec
        matrices = random_dilations(seed, [d], count)
        rep = RunReport("verify", {"random": {"d": d, "count": count},
                                   "matrices": [m.tolist() for m in matrices]},
                        seed=seed, d=d)
    else:
        rep, ok = _base("verify", a, seed=seed)
        if not ok:
            return rep
        matrices = [a]
    rep.verification = [s.as_dict() for s in run_all(matrices, seed=seed)]
    return rep


def cmd_normdecay(a, epsilon: float = 1e-3, n_max: int = 64) -> RunReport:
    rep, ok = _base("normdecay", a)
    if ok:
        res = norm_decay(a, epsilon, n_max)
        rep.norm_decay = res.as_dict()
        if not res.decayed:
            rep.notes.append(f"no n <= {n_max} with ||A^-n|| < {epsilon}")
    return rep


def exit_code(rep: RunReport) -> int:
    if rep.dilation is False:
        return EXIT_NOT_DILATION
    if not rep.verification_passed:
        return EXIT_VERIFY
    return EXIT_OK


# -- human rendering ------------------------------------------------------------

def _fmt_group(g: dict | None) -> str:
    return "-" if g is None else str(AbelianGroup.from_dict(g))


def render_human(rep: RunReport) -> str:
    out = []
    if rep.command == "verify" and "random" in rep.input:
        r = rep.input["random"]
        out.append(f"{r['count']} random {r['d']}x{r['d']} dilation matrices (seed {rep.seed})")
    else:
        out.append(f"A = {rep.input['matrix']}  (d = {rep.d}, det = {rep.det})")
        out.append(f"characteristic polynomial: {rep.charpoly}")
        out.append("dilation: " + ("yes" if rep.dilation else "no"))
        if rep.command == "check":
            for s in rep.certificate["evidence"]:
                mark = "ok" if s["ok"] else "FAIL"
                extra = f"  ({s['note']})" if s["note"] else ""
                out.append(f"  Schur-Cohn degree {s['degree']}: |{s['constant']}| vs "
                           f"|{s['leading']}| {mark}{extra}")
            out.append("  float eigenvalue moduli (advisory): " + ", ".join(
                f"{x:.6g}" for x in rep.certificate["float_eigenvalue_moduli"]))
    if rep.k0 is not None:
        out.append(f"case: {rep.case}")
        out.append(f"K_0 = {_fmt_group(rep.k0)}")
        out.append(f"K_1 = {_fmt_group(rep.k1)}")
        out.append(f"[1] in K_0: {'zero' if rep.identity_class['zero'] else 'nonzero'} "
                   f"(residue {rep.identity_class['residue']} mod {rep.identity_class['modulus']})")
        out.append("grade  K_i  source          basis                      group")
        for s in rep.summands:
            basis = " ".join(str(k) for k in enumerate_subsets(rep.d, s["n"]))
            if len(basis) > 26:
                basis = basis[:23] + "..."
            src = f"coker(1-B_{s['n']})" if s["role"] == "coker" else f"ker(1-B_{s['n']})"
            out.append(f"{s['n']:>5}  K_{s['parity']}  {src:<15} {basis:<26} "
                       f"{_fmt_group(s['cokernel'])}")
    if rep.filterbank is not None:
        out.append(f"filter bank ({len(rep.filterbank)} monomials z^gamma):")
        out.append("  " + " ".join("(" + ",".join(map(str, g)) + ")" for g in rep.filterbank))
        o = rep.orthonormal
        num = "" if o["numeric_max_error"] is None else f", numeric error {o['numeric_max_error']:.2e}"
        out.append(f"orthonormal: {'yes' if o['ok'] else 'no'} ({o['detail']}{num})")
    if rep.norm_decay is not None:
        nd = rep.norm_decay
        for i, v in enumerate(nd["norms"], 1):
            out.append(f"  ||A^-{i}|| = {v:.6g}")
        if nd["decayed"]:
            out.append(f"first n with ||A^-n|| < {nd['epsilon']}: {nd['n']}")
    if rep.verification is not None:
        for s in rep.verification:
            status = "PASS" if s["passed"] else "FAIL"
            skip = f", {s['skipped']} skipped" if s.get("skipped") else ""
            out.append(f"[{status}] {s['name']}: {s['checks']} checks{skip}")
            out.extend(f"    {f}" for f in s.get("failures", ()))
    out.extend(f"note: {n}" for n in rep.notes)
    return "\n".join(out) + "\n"


# -- argument parsing -------------------------------------------------------------

def _grades(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grade list {text!r}") from None
    if not vals or any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"bad grade list {text!r}")
    return vals


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the structured report")
    common.add_argument("--output", "-o", help="also write the JSON report to this file")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock timing (reports are then not byte-stable)")

    p = _Parser(prog="dilationk", description="K-theory of Exel crossed products by dilation matrices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    mat_help = 'matrix as "2 1; -1 2", JSON {"matrix": [[2,1],[-1,2]]}, or a file'

    s = sub.add_parser("check", parents=[common], help="certify that A is a dilation matrix")
    s.add_argument("matrix", help=mat_help)

    s = sub.add_parser("ktheory", parents=[common], help="compute K_0 and K_1")
    s.add_argument("matrix", help=mat_help)
    s.add_argument("--grades", type=_grades, help="only show these grades, e.g. 0,2")

    s = sub.add_parser("filterbank", parents=[common], help="monomial filter bank and orthonormality")
    s.add_argument("matrix", help=mat_help)

    s = sub.add_parser("verify", parents=[common], help="run the identity suites")
    s.add_argument("matrix", nargs="?", help=mat_help)
    s.add_argument("--random", nargs=2, type=_positive_int, metavar=("D", "COUNT"),
                   help="use COUNT random DxD dilation matrices")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("normdecay", parents=[common], help="first n with ||A^-n|| < epsilon")
    s.add_argument("matrix", help=mat_help)
    s.add_argument("--epsilon", type=_positive_float, default=1e-3)
    s.add_argument("--nmax", type=_positive_int, default=64)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    a = None
    if getattr(args, "matrix", None) is not None:
        try:
            a = parse_matrix(args.matrix)
        except MatrixParseError as exc:
            print(f"dilationk: {exc.kind} input: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.command == "verify" and (a is None) == (args.random is None):
        print("dilationk: verify needs either a matrix or --random D COUNT", file=sys.stderr)
        return EXIT_USAGE

    start = time.perf_counter()
    if args.command == "check":
        rep = cmd_check(a)
    elif args.command == "ktheory":
        rep = cmd_ktheory(a, grades=args.grades)
    elif args.command == "filterbank":
        rep = cmd_filterbank(a)
    elif args.command == "verify":
        rep = cmd_verify(a, random_spec=args.random, seed=args.seed)
    else:
        rep = cmd_normdecay(a, args.epsilon, args.nmax)
    if args.timing:
        rep.timing = {"seconds": round(time.perf_counter() - start, 6)}

    text = rep.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text if args.json else render_human(rep))
    return exit_code(rep)


if __name__ == "__main__":
    sys.exit(main())
