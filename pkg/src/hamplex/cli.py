"""Command-line front end.

Exit codes: 0 success, 2 theorem hypotheses failed (report still printed),
1 bad input or capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import dfi, families, oracle
from .complex_core import ComplexError, Labeling, format_complex, parse_labeling, read_complex
from .hamiltonicity import PROPERTIES as PATH_PROPERTIES
from .hamiltonicity import certificate_for, search_labeling, verify_certificate
from .hierarchy import PROPERTIES as HIER_PROPERTIES
from .hierarchy import check_with, full_report, search_hierarchy_labeling, unit_interval_with
from .search import DEFAULT_HIERARCHY_CAP, DEFAULT_TIGHT_CAP, CapacityError
from .theorems import THEOREMS

ALL_PROPERTIES = tuple(PATH_PROPERTIES) + HIER_PROPERTIES


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _labeling(args, cx):
    return parse_labeling(args.labeling, cx.n) if args.labeling else None


def _checked(cx, cert):
    if cert is not None and not verify_certificate(cx, cert):
        raise AssertionError(f"refusing to print an invalid certificate {cert.to_json()}")
    return None if cert is None else cert.to_json()


def cmd_analyze(args) -> int:
    cx = read_complex(args.file)
    report = full_report(cx, _labeling(args, cx), cap=args.cap or DEFAULT_HIERARCHY_CAP)
    _emit(report.to_json())
    return 0


def cmd_check(args) -> int:
    cx = read_complex(args.file)
    cx.require_pure()
    lab = _labeling(args, cx)
    out = {"property": args.property, "labeling": lab.to_list() if lab else None}
    if args.property in PATH_PROPERTIES:
        cert = certificate_for(cx, args.property, lab or Labeling.identity(cx.n))
        out["holds"] = cert is not None
        out["certificate"] = _checked(cx, cert)
    else:
        res = check_with(args.property, cx, lab)
        out["holds"] = res.ok
        out["violation"] = None if res.ok else {"facet": list(res.violation[0]),
                                                 "missing": list(res.violation[1])}
    _emit(out)
    return 0


def cmd_search(args) -> int:
    cx = read_complex(args.file)
    cx.require_pure()
    out = {"property": args.property}
    if args.property in PATH_PROPERTIES:
        cap = args.cap or DEFAULT_TIGHT_CAP
        if cx.n > cap:
            raise CapacityError(cx.n, cap)
        cert = search_labeling(cx, args.property, cap=cap)
        out["found"] = cert is not None
        out["certificate"] = _checked(cx, cert)
    else:
        wit = search_hierarchy_labeling(cx, args.property, cap=args.cap or DEFAULT_HIERARCHY_CAP)
        out["found"] = wit is not None
        out["witness"] = None if wit is None else wit.to_list()
    _emit(out)
    return 0


def cmd_certify(args) -> int:
    cx = read_complex(args.file)
    lab = _labeling(args, cx)
    fn = THEOREMS[args.theorem]
    if args.theorem in ("ore", "dirac"):
        outcome = fn(cx, lab)
    elif args.theorem == "chch":
        if lab is None and not unit_interval_with(cx):
            lab = search_hierarchy_labeling(cx, "unit-interval", cap=args.cap or DEFAULT_HIERARCHY_CAP)
        outcome = fn(cx, lab)
    elif args.theorem == "ore2":
        outcome = fn(cx) if args.cap is None else fn(cx, cap=args.cap)
    else:
        outcome = fn(cx)
    if outcome.certificate is not None:
        _checked(cx, outcome.certificate)
    _emit(outcome.to_json())
    return 0 if outcome.hypotheses_hold else 2


def cmd_family(args) -> int:
    if args.name == "random":
        if len(args.params) != 2:
            raise ComplexError("random expects parameters (n, d)")
        n, d = args.params
        cx = families.random_complex(n, d, random.Random(args.seed))
    else:
        cx = families.family(args.name, *args.params)
    sys.stdout.write(format_complex(cx))
    return 0


def cmd_dfi(args) -> int:
    cx = read_complex(args.file)
    fld = dfi.Field(args.field)
    caps = {} if args.cap is None else {"max_facets": args.cap}
    if args.action == "gbcheck":
        report = dfi.gb_check_minors(cx, fld, **caps)
        _emit(report.to_json(cx.d, cx.n))
    else:
        dfi.check_caps(cx, **caps)
        for f, g in zip(cx.sorted_facets(), dfi.dfi_generators(cx, fld)):
            print(f"[{' '.join(map(str, f))}] {dfi.format_poly(g, cx.d, cx.n)}")
    return 0


def cmd_oracle(args) -> int:
    cx = read_complex(args.file)
    cx.require_pure()
    perm = oracle.exists(cx, args.property)
    hits, total = oracle.count(cx, args.property)
    _emit({"property": args.property, "exists": perm is not None,
           "witness": None if perm is None else list(perm),
           "satisfying_relabelings": hits, "distinct_relabelings": total})
    return 0


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors too, so exit 1 rather than argparse's 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hamplex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, labeling=False):
        sp.add_argument("--cap", type=int, default=None, help="search capacity (vertices)")
        if labeling:
            sp.add_argument("--labeling", help="comma-separated new labels of vertices 1..n")

    sp = sub.add_parser("analyze", help="hierarchy report for a complex")
    sp.add_argument("file")
    common(sp, labeling=True)
    sp.set_defaults(run=cmd_analyze)

    sp = sub.add_parser("check", help="test one property under a fixed labeling")
    sp.add_argument("property", choices=ALL_PROPERTIES)
    sp.add_argument("file")
    common(sp, labeling=True)
    sp.set_defaults(run=cmd_check)

    sp = sub.add_parser("search", help="search for a labeling with a property")
    sp.add_argument("property", choices=ALL_PROPERTIES)
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(run=cmd_search)

    sp = sub.add_parser("certify", help="run a constructive theorem")
    sp.add_argument("theorem", choices=sorted(THEOREMS))
    sp.add_argument("file")
    common(sp, labeling=True)
    sp.set_defaults(run=cmd_certify)

    sp = sub.add_parser("family", help="print a generated complex")
    sp.add_argument("name", choices=families.family_names() + ["random"])
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(run=cmd_family)

    sp = sub.add_parser("dfi", help="determinantal facet ideal tools")
    sp.add_argument("action", choices=("gbcheck", "gens"))
    sp.add_argument("file")
    sp.add_argument("--field", choices=("rational", "prime"), default="rational")
    sp.add_argument("--cap", type=int, default=None, help="facet limit")
    sp.set_defaults(run=cmd_dfi)

    sp = sub.add_parser("oracle", help="brute-force ground truth (n <= 7)")
    sp.add_argument("property", choices=oracle.PREDICATES)
    sp.add_argument("file")
    sp.set_defaults(run=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ComplexError, oracle.OracleTooLarge, OSError) as exc:
        print(f"hamplex: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
