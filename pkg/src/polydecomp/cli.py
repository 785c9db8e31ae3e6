"""Command-line surface.

Payload documents go to stdout as JSON (rationals as integers or "p/q"
strings, never floats); diagnostics go to stderr. Exit codes:

    0  everything requested passed
    1  a verification check failed
    2  input or usage error
    3  an operation's precondition failed (non-generic polarizing vector,
       inadmissible center, zero pairing)
"""

import argparse
import json
import sys

from gmpy2 import mpq

from .decompose import (
    brianchon_gram,
    decomposition_from_doc,
    decomposition_to_doc,
    lawrence_varchenko,
    witten,
)
from .errors import InputError, PreconditionError
from .measure import verify_measure, verify_pointwise
from .polytope import parse_polytope
from .rationals import rat, rat_str, vec_str
from .s2 import example_s2_document
from .taming import (
    MorseData,
    TamingSpec,
    admissible_center,
    check_assumption,
    localizing_set,
    morse_data,
    verify_morse_data,
)

DEFAULT_SEED = 7
DEFAULT_POINTS = 1000
DEFAULT_BOXES = 32


def _emit(doc):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _load_polytope(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polytope(fh.read())


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _build_decomposition(P, args):
    if args.kind == "bg":
        return brianchon_gram(P)
    if args.kind == "lv":
        if args.eta is None:
            raise InputError("lv needs --eta")
        return lawrence_varchenko(P, [rat(v) for v in args.eta])
    if args.kind == "witten":
        if args.center is not None:
            return witten(P, [rat(v) for v in args.center])
        found = admissible_center(P)
        if found is None:
            raise PreconditionError(
                "no admissible center found in the doubled bounding box; pass --center")
        c, margin = found
        print(f"using admissible center ({', '.join(map(str, vec_str(c)))}) "
              f"with margin {rat_str(margin)}", file=sys.stderr)
        return witten(P, c)
    raise InputError(f"unknown kind {args.kind!r}")


def cmd_check(args):
    P = _load_polytope(args.file)
    by_dim = {}
    for F in P.faces:
        by_dim[F.dim] = by_dim.get(F.dim, 0) + 1
    _emit({
        "valid": True,
        "dim": P.dim,
        "halfspaces": len(P.halfspaces),
        "vertices": len(P.vertices),
        "faces_by_dim": {str(d): by_dim[d] for d in sorted(by_dim)},
        "polytope": P.to_doc(),
    })
    return 0


def cmd_faces(args):
    P = _load_polytope(args.file)
    _emit({
        "dim": P.dim,
        "faces": [
            {
                "active": list(F.active),
                "dim": F.dim,
                "vertices": [vec_str(P.vertices[i]) for i in F.vertex_ids],
                "witness": vec_str(F.witness),
            }
            for F in P.faces
        ],
    })
    return 0


def cmd_decompose(args):
    P = _load_polytope(args.file)
    D = _build_decomposition(P, args)
    _emit(decomposition_to_doc(D))
    return 0


def cmd_verify(args):
    P = _load_polytope(args.file)
    if args.cells is not None:
        with open(args.cells, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("kind") != args.kind:
            raise InputError(f"--cells file holds kind {doc.get('kind')!r}, not {args.kind!r}")
        D = decomposition_from_doc(doc, P)
    else:
        D = _build_decomposition(P, args)
    avoid = D.kind != "bg"
    pw = verify_pointwise(P, D, args.points, args.seed, avoid_facet_spans=avoid)
    ms = verify_measure(P, D, args.boxes, args.seed)
    _emit({
        "kind": D.kind,
        "pointwise": pw.to_doc(),
        "measure": ms.to_doc(),
        "pass": pw.passed and ms.passed,
    })
    return 0 if pw.passed and ms.passed else 1


def cmd_localize(args):
    P = _load_polytope(args.file)
    if args.rho == "linear":
        if args.eta is None:
            raise InputError("--rho linear needs --eta")
        spec = TamingSpec.linear([rat(v) for v in args.eta])
    else:
        if args.center is None:
            raise InputError(f"--rho {args.rho} needs --center")
        center = [rat(v) for v in args.center]
        spec = TamingSpec.norm_square(center) if args.rho == "normsq" \
            else TamingSpec.neg_norm_square(center)
    comps = localizing_set(P, spec)
    warnings = [list(c.face_active) for c in comps if not c.isolated]
    for w in warnings:
        print(f"warning: non-isolated critical face {w}", file=sys.stderr)
    _emit({
        "rho": args.rho,
        "components": [c.to_doc() for c in comps],
        "non_isolated": warnings,
    })
    return 0


def cmd_admissible_center(args):
    P = _load_polytope(args.file)
    found = admissible_center(P)
    if found is None:
        print("no admissible center inside the doubled bounding box "
              "(search is box-limited, not a nonexistence proof)", file=sys.stderr)
        _emit({"found": False})
        return 0
    c, margin = found
    checks = check_assumption(P, c)
    _emit({
        "found": True,
        "center": vec_str(c),
        "margin": rat_str(margin),
        "all_faces_pass": all(r.passed for r in checks),
    })
    return 0


def cmd_morse_data(args):
    P = _load_polytope(args.file)
    if args.data is not None:
        with open(args.data, "r", encoding="utf-8") as fh:
            data = MorseData.from_doc(json.load(fh))
    else:
        data = morse_data(P)
    ok, violations = verify_morse_data(P, data)
    _emit({
        "data": data.to_doc(),
        "verified": ok,
        "violations": [[v[0]] + [list(x) for x in v[1:]] for v in violations],
    })
    return 0 if ok else 1


def cmd_example_s2(args):
    doc = example_s2_document(points=args.points, boxes=args.boxes, seed=args.seed)
    _emit(doc)
    return 0 if doc["pass"] else 1


def _add_verify_opts(p):
    p.add_argument("--points", type=_positive_int, default=DEFAULT_POINTS,
                   help="pointwise samples (default %(default)s)")
    p.add_argument("--boxes", type=_positive_int, default=DEFAULT_BOXES,
                   help="measure sample boxes (default %(default)s)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="sampler seed (default %(default)s)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="polydecomp",
        description="Exact signed decompositions of simple polytopes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a polytope document")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("faces", help="emit the face lattice")
    p.add_argument("file")
    p.set_defaults(fn=cmd_faces)

    p = sub.add_parser("decompose", help="build and serialize a decomposition")
    p.add_argument("file")
    p.add_argument("kind", choices=["bg", "lv", "witten"])
    p.add_argument("--eta", nargs="+", help="polarizing vector for lv")
    p.add_argument("--center", nargs="+", help="center for witten (default: LP search)")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="run pointwise and measure verification")
    p.add_argument("file")
    p.add_argument("kind", choices=["bg", "lv", "witten"])
    p.add_argument("--eta", nargs="+")
    p.add_argument("--center", nargs="+")
    p.add_argument("--cells", help="verify a serialized decomposition instead of rebuilding")
    _add_verify_opts(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("localize", help="critical components per face")
    p.add_argument("file")
    p.add_argument("--rho", choices=["linear", "normsq", "negnormsq"], required=True)
    p.add_argument("--eta", nargs="+")
    p.add_argument("--center", nargs="+")
    p.set_defaults(fn=cmd_localize)

    p = sub.add_parser("admissible-center", aliases=["admissible_center"],
                       help="exact LP search for an admissible center")
    p.add_argument("file")
    p.set_defaults(fn=cmd_admissible_center)

    p = sub.add_parser("morse-data", aliases=["morse_data"],
                       help="emit and verify per-face (point, level) data")
    p.add_argument("file")
    p.add_argument("--data", help="verify this data file instead of generating")
    p.set_defaults(fn=cmd_morse_data)

    p = sub.add_parser("example-s2", aliases=["example_s2"],
                       help="the interval [-1,1] with all three decompositions, verified")
    _add_verify_opts(p)
    p.set_defaults(fn=cmd_example_s2)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as e:
        print(f"precondition error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except InputError as e:
        print(f"input error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
