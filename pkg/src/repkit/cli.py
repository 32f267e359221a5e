"""Command-line front end.

Exit codes: 0 success, 1 domain failure (invalid group, invalid
representation, refused computation), 2 unreadable input or bad usage.
Errors are reported on stderr as one line of JSON.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import documents as docs
from .decompose import decompose
from .errors import GroupAxiomError, ParseError, RepkitError
from .exactfield import Field, PrimeField
from .groupalgebra import convolve, operator
from .rep import change_field, character, direct_sum, dual_rep, restrict, tensor_product


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_SHORT_FIELD = [
    (re.compile(r"^(?:rational|QQ|Q)$"), lambda m: {"kind": "rational"}),
    (re.compile(r"^(?:prime:|GF\()(\d+)\)?$"), lambda m: {"kind": "prime", "p": int(m.group(1))}),
    (re.compile(r"^(?:cyclotomic:|QQ\(zeta|Q\(zeta)(\d+)\)?$"), lambda m: {"kind": "cyclotomic", "n": int(m.group(1))}),
]


def parse_field_option(text: str) -> Field:
    """A JSON field descriptor or a short form: rational, prime:5, GF(5), cyclotomic:3, QQ(zeta3)."""
    text = text.strip()
    if text.startswith("{"):
        return docs.field_from_doc(docs.loads(text, "--field"))
    for pattern, build in _SHORT_FIELD:
        m = pattern.match(text)
        if m:
            return docs.field_from_doc(build(m))
    raise ParseError(f"unrecognized field descriptor {text!r}")


# ---------------------------------------------------------------------------
# commands; each returns the output document


def cmd_group_validate(args):
    G = docs.load_group(args.file)
    return {"valid": True, "name": G.name, "order": G.order}


def cmd_group_info(args):
    G = docs.load_group(args.file)
    return {
        "name": G.name,
        "order": G.order,
        "identity": G.labels[G.identity],
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "element_orders": {G.labels[x]: k for x, k in enumerate(G.element_orders)},
        "inverses": {G.labels[x]: G.labels[G.inv(x)] for x in range(G.order)},
        "generators": [G.labels[x] for x in G.generators],
        "class_sizes": [len(c) for c in G.conjugacy_classes],
    }


def cmd_group_classes(args):
    G = docs.load_group(args.file)
    classes = G.conjugacy_classes
    return {
        "classes": [[G.labels[x] for x in c] for c in classes],
        "sizes": [len(c) for c in classes],
    }


def cmd_rep_validate(args):
    rho = docs.load_rep(args.file).rep
    return {"valid": True, "group": rho.group.name, "field": rho.field.descriptor(), "degree": rho.degree}


def cmd_rep_character(args):
    rho = docs.load_rep(args.file).rep
    return docs.character_to_doc(character(rho))


def cmd_rep_decompose(args):
    rho = docs.load_rep(args.file).rep
    if args.field is not None:
        rho = change_field(rho, "extend", parse_field_option(args.field))
    return docs.decomposition_to_doc(decompose(rho, allow_extension=args.extend))


def _pair(args):
    a = docs.load_rep(args.first).rep
    b = docs.load_rep(args.second).rep
    return a, b


def cmd_rep_tensor(args):
    return docs.rep_to_doc(tensor_product(*_pair(args)))


def cmd_rep_direct_sum(args):
    return docs.rep_to_doc(direct_sum(*_pair(args)))


def cmd_rep_dual(args):
    return docs.rep_to_doc(dual_rep(docs.load_rep(args.file).rep))


def cmd_rep_restrict(args):
    rho = docs.load_rep(args.file).rep
    G = rho.group
    for lab in args.elements:
        if lab not in G.labels:
            raise ParseError(f"unknown element label {lab!r}")
    H = [G.index(lab) for lab in args.elements]
    return docs.rep_to_doc(restrict(rho, H))


def cmd_rep_change_field(args):
    rho = docs.load_rep(args.file).rep
    mode = args.mode.replace("-", "_")
    if mode == "restrict_scalars":
        return docs.rep_to_doc(change_field(rho, mode))
    if args.field is None:
        raise UsageError(f"--field is required for mode {args.mode}")
    target = parse_field_option(args.field)
    if mode == "reduce_mod":
        if not isinstance(target, PrimeField):
            raise UsageError("reduce-mod needs a prime field")
        return docs.rep_to_doc(change_field(rho, mode, p=target.p))
    return docs.rep_to_doc(change_field(rho, mode, target))


def cmd_algebra_convolve(args):
    f = docs.load_function(args.first).function
    g = docs.load_function(args.second).function
    return docs.function_to_doc(convolve(f, g))


def cmd_algebra_operator(args):
    f = docs.load_function(args.function).function
    rho = docs.load_rep(args.rep).rep
    T = operator(f, rho)
    return {"field": T.field.descriptor(), "matrix": docs.matrix_to_doc(T)}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="repkit", description="Exact computations with finite group representations.")
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the result to this file instead of stdout")
    top = parser.add_subparsers(dest="area", required=True, parser_class=_Parser)

    group = top.add_parser("group", help="group files").add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("validate", cmd_group_validate, "check the group axioms"),
        ("info", cmd_group_info, "order, exponent, element orders, generators"),
        ("classes", cmd_group_classes, "conjugacy classes"),
    ]:
        p = group.add_parser(name, help=help_, parents=[common])
        p.add_argument("file")
        p.set_defaults(func=fn)

    rep = top.add_parser("rep", help="representation files").add_subparsers(dest="command", required=True)
    p = rep.add_parser("validate", help="check the homomorphism law", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_rep_validate)
    p = rep.add_parser("character", help="character values by element and by class", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_rep_character)
    p = rep.add_parser("decompose", help="certified decomposition into irreducibles", parents=[common])
    p.add_argument("file")
    p.add_argument("--extend", action="store_true", help="allow passing to a cyclotomic splitting field")
    p.add_argument("--field", help="extend to this field before decomposing")
    p.set_defaults(func=cmd_rep_decompose)
    for name, fn in [("tensor", cmd_rep_tensor), ("direct-sum", cmd_rep_direct_sum)]:
        p = rep.add_parser(name, parents=[common])
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=fn)
    p = rep.add_parser("dual", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_rep_dual)
    p = rep.add_parser("restrict", help="restrict to the subgroup with the given element labels", parents=[common])
    p.add_argument("file")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_rep_restrict)
    p = rep.add_parser("change-field", parents=[common])
    p.add_argument("file")
    p.add_argument("--mode", choices=["extend", "restrict-scalars", "reduce-mod"], default="extend")
    p.add_argument("--field", help="target field (JSON descriptor or e.g. cyclotomic:3, GF(5))")
    p.set_defaults(func=cmd_rep_change_field)

    alg = top.add_parser("algebra", help="group algebra").add_subparsers(dest="command", required=True)
    p = alg.add_parser("convolve", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_algebra_convolve)
    p = alg.add_parser("operator", help="T_f = sum of f(x) rho_x", parents=[common])
    p.add_argument("function")
    p.add_argument("rep")
    p.set_defaults(func=cmd_algebra_operator)
    return parser


def _diagnose(code: int, kind: str, message: str, **extra) -> int:
    line = {"error": kind, "exit": code, "message": " ".join(str(message).split())}
    line.update(extra)
    print(json.dumps(line, ensure_ascii=False), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        return _diagnose(2, "usage", str(exc))
    except ParseError as exc:
        return _diagnose(2, "parse", str(exc))
    except GroupAxiomError as exc:
        return _diagnose(1, type(exc).__name__, str(exc), axiom=exc.axiom, witness=list(exc.witness))
    except RepkitError as exc:
        extra = {}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            extra["witness"] = list(witness) if isinstance(witness, tuple) else witness
        return _diagnose(1, type(exc).__name__, str(exc), **extra)
    except (ValueError, ArithmeticError) as exc:
        return _diagnose(1, type(exc).__name__, str(exc))
    text = docs.dumps(result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
