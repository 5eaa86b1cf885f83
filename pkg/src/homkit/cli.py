"""Batch front end: read JSON descriptions, run one computation, emit JSON.

One invocation runs one job and writes exactly one JSON document to stdout
(or --out): {"command": ..., "inputs_digest": ..., "result": ...}.  Output is
canonical (sorted keys, two-space indent, big integers as decimal strings),
so identical inputs produce byte-identical documents.  Exit status: 0 on
success, 2 on validation failure, 1 on internal error; failures also emit a
single document {"error": {"code", "message"}}.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from typing import Optional, Sequence

from .errors import InputError
from . import abgroups, jsonio, randgen, relhom, repmod
from .intlinalg import snf
from .percomplex import (
    homology,
    homotopy_classes,
    mapping_cone,
    tensor_complex,
)


# One job per process: inputs are read exactly once and shared between the
# digest and the parser (this also makes pipes and process substitution work).
_raw_inputs: dict[str, bytes] = {}


def _read_bytes(path: str) -> bytes:
    if path not in _raw_inputs:
        try:
            with open(path, "rb") as fh:
                _raw_inputs[path] = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input file {path}: {exc}") from None
    return _raw_inputs[path]


def _load_json(path: str):
    raw = _read_bytes(path)
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _digest(paths: Sequence[str]) -> str:
    h = hashlib.sha256()
    for path in paths:
        h.update(_read_bytes(path))
    return h.hexdigest()


def _load_complex(path: str):
    return jsonio.complex_from_json(_load_json(path), what=path)


def _load_group(path: str):
    return jsonio.group_from_json(_load_json(path), what=path)


def _cmd_snf(args) -> dict:
    m = jsonio.matrix_from_json(_load_json(args.matrix), what=args.matrix)
    dec = snf(m)
    return {"diagonal": [str(d) for d in dec.diagonal],
            "u": jsonio.matrix_to_json(dec.u),
            "s": jsonio.matrix_to_json(dec.s),
            "v": jsonio.matrix_to_json(dec.v)}


def _cmd_group_op(args) -> dict:
    a, b = _load_group(args.a), _load_group(args.b)
    if args.op == "is-isomorphic":
        return {"isomorphic": abgroups.is_isomorphic(a, b)}
    op = {"hom": abgroups.hom, "ext1": abgroups.ext1,
          "tensor": abgroups.tensor, "tor1": abgroups.tor1}[args.op]
    return jsonio.group_to_json(op(a, b))


def _cmd_homology(args) -> dict:
    return jsonio.graded_group_to_json(homology(_load_complex(args.complex)))


def _cmd_hoclasses(args) -> dict:
    hc = homotopy_classes(_load_complex(args.a), _load_complex(args.b))
    return jsonio.group_to_json(hc.group)


def _load_chain_map(args):
    a = _load_complex(args.a)
    b = _load_complex(args.b)
    return jsonio.chain_map_from_json(_load_json(args.map), a, b, what=args.map)


def _cmd_cone(args) -> dict:
    cone, _, _ = mapping_cone(_load_chain_map(args))
    return {"cone": jsonio.complex_to_json(cone),
            "homology": jsonio.graded_group_to_json(homology(cone))}


def _cmd_uct(args) -> dict:
    report = relhom.uct_sequence(_load_complex(args.a), _load_complex(args.b))
    return {"hom_part": jsonio.group_to_json(report.hom_part),
            "ext_part": jsonio.group_to_json(report.ext_part),
            "middle": jsonio.group_to_json(report.middle),
            "natural_map_surjective": True,
            "kernel_isomorphic_to_ext_part": True}


def _cmd_ext(args) -> dict:
    return jsonio.group_to_json(
        relhom.ideal_ext(_load_complex(args.a), _load_complex(args.b), args.n))


def _cmd_resolve(args) -> dict:
    res = relhom.projective_resolution(_load_complex(args.a))
    return {"p0": jsonio.complex_to_json(res.p0),
            "p1": jsonio.complex_to_json(res.p1),
            "delta0": jsonio.chain_map_to_json(res.delta0),
            "delta1": jsonio.chain_map_to_json(res.delta1)}


def _cmd_classify(args) -> dict:
    flags = relhom.classify(_load_chain_map(args))
    return {"phantom": flags.phantom, "monic": flags.monic,
            "epic": flags.epic, "equivalence": flags.equivalence}


def _cmd_kappa(args) -> dict:
    el = relhom.kappa(_load_chain_map(args))
    return {"ext_part": jsonio.group_to_json(el.owner),
            "coords": [str(c) for c in el.coords],
            "is_zero": el.is_zero()}


def _cmd_ring_ext(args) -> dict:
    m = jsonio.rmodule_from_json(_load_json(args.m), what=args.m)
    n = jsonio.rmodule_from_json(_load_json(args.n_module), what=args.n_module)
    return jsonio.group_to_json(repmod.ext_over_r(m, n, args.n))


def _cmd_ring_tor(args) -> dict:
    m = jsonio.rmodule_from_json(_load_json(args.m), what=args.m)
    n = jsonio.rmodule_from_json(_load_json(args.n_module), what=args.n_module)
    return jsonio.group_to_json(repmod.tor_over_r(m, n, args.n))


def _cmd_hh(args) -> dict:
    doc = _load_json(args.input)
    if not isinstance(doc, dict):
        raise InputError(f"{args.input}: expected a JSON object")
    group = jsonio.group_from_json(doc.get("group"), f"{args.input}.group")
    lam = jsonio.matrix_from_json(doc.get("lambda"), f"{args.input}.lambda")
    rho = jsonio.matrix_from_json(doc.get("rho"), f"{args.input}.rho")
    return jsonio.group_to_json(repmod.hochschild(group, lam, rho, args.n, args.variant))


def _cmd_pv(args) -> dict:
    doc = _load_json(args.input)
    if not isinstance(doc, dict):
        raise InputError(f"{args.input}: expected a JSON object")
    k = jsonio.graded_group_from_json(doc, what=args.input)
    alpha_even = jsonio.matrix_from_json(doc.get("alpha_even"), f"{args.input}.alpha_even")
    alpha_odd = jsonio.matrix_from_json(doc.get("alpha_odd"), f"{args.input}.alpha_odd")
    report = repmod.pv_sequence(k, alpha_even, alpha_odd)
    return {"degree0": {"coker_end": jsonio.group_to_json(report.degree0.coker_end),
                        "ker_end": jsonio.group_to_json(report.degree0.ker_end)},
            "degree1": {"coker_end": jsonio.group_to_json(report.degree1.coker_end),
                        "ker_end": jsonio.group_to_json(report.degree1.ker_end)},
            "exact": True}


def _cmd_kunneth_check(args) -> dict:
    a, b = _load_complex(args.a), _load_complex(args.b)
    computed = homology(tensor_complex(a, b))
    predicted = relhom.kunneth_prediction(homology(a), homology(b))
    return {"computed": jsonio.graded_group_to_json(computed),
            "predicted": jsonio.graded_group_to_json(predicted),
            "match": computed.is_isomorphic_to(predicted)}


def _cmd_selftest(args) -> dict:
    rng = random.Random(args.seed)
    checks: dict[str, int] = {}

    for _ in range(100):
        m = randgen.random_matrix(rng, rng.randint(0, 4), rng.randint(0, 4))
        dec = snf(m)
        assert dec.u @ m @ dec.v == dec.s
        diag = dec.diagonal
        assert all(d >= 0 for d in diag)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a)
    checks["snf_identities"] = 100

    for _ in range(20):
        d, e = rng.randint(2, 9), rng.randint(2, 9)
        g = _gcd(d, e)
        zd, ze = abgroups.FgAbGroup.cyclic(d), abgroups.FgAbGroup.cyclic(e)
        for op in (abgroups.hom, abgroups.ext1, abgroups.tensor, abgroups.tor1):
            expected = (0, (g,)) if g > 1 else (0, ())
            assert op(zd, ze).canonical == expected
    checks["cyclic_closed_forms"] = 20

    for _ in range(8):
        relhom.uct_sequence(randgen.random_complex(rng, 2), randgen.random_complex(rng, 2))
    checks["uct_reports"] = 8

    for _ in range(8):
        a, b = randgen.random_complex(rng, 2), randgen.random_complex(rng, 2)
        computed = homology(tensor_complex(a, b))
        assert computed.is_isomorphic_to(relhom.kunneth_prediction(homology(a), homology(b)))
    checks["kunneth"] = 8

    for _ in range(8):
        x = randgen.random_acyclic_complex(rng)
        assert homotopy_classes(x, x).group.is_trivial()
    checks["acyclic_self_maps"] = 8

    for _ in range(8):
        k = randgen.random_graded_group(rng, max_rank=1)
        ae, ao = randgen.random_graded_automorphism(rng, k)
        repmod.pv_sequence(k, ae, ao)
    checks["pv_reports"] = 8

    return {"seed": args.seed, "checks": checks, "all_passed": True}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_INPUT_ATTRS = {
    "snf": ("matrix",),
    "group-op": ("a", "b"),
    "homology": ("complex",),
    "hoclasses": ("a", "b"),
    "cone": ("a", "b", "map"),
    "uct": ("a", "b"),
    "ext": ("a", "b"),
    "resolve": ("a",),
    "classify": ("a", "b", "map"),
    "kappa": ("a", "b", "map"),
    "ring-ext": ("m", "n_module"),
    "ring-tor": ("m", "n_module"),
    "hh": ("input",),
    "pv": ("input",),
    "kunneth-check": ("a", "b"),
    "selftest": (),
}

_HANDLERS = {
    "snf": _cmd_snf,
    "group-op": _cmd_group_op,
    "homology": _cmd_homology,
    "hoclasses": _cmd_hoclasses,
    "cone": _cmd_cone,
    "uct": _cmd_uct,
    "ext": _cmd_ext,
    "resolve": _cmd_resolve,
    "classify": _cmd_classify,
    "kappa": _cmd_kappa,
    "ring-ext": _cmd_ring_ext,
    "ring-tor": _cmd_ring_tor,
    "hh": _cmd_hh,
    "pv": _cmd_pv,
    "kunneth-check": _cmd_kunneth_check,
    "selftest": _cmd_selftest,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homkit",
        description="Batch computations on groups, periodic complexes and ring modules.")
    parser.add_argument("--out", help="write the result document to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("matrix")

    p = sub.add_parser("group-op", help="binary operation on two groups")
    p.add_argument("--op", required=True,
                   choices=["hom", "ext1", "tensor", "tor1", "is-isomorphic"])
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("homology", help="graded homology of a periodic complex")
    p.add_argument("complex")

    p = sub.add_parser("hoclasses", help="group of homotopy classes [A, B]")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("cone", help="mapping cone of a chain map and its homology")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("map")

    p = sub.add_parser("uct", help="universal-coefficient report for a pair of complexes")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("ext", help="derived Ext^n between complexes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--n", type=int, required=True, help="derived-functor degree")

    p = sub.add_parser("resolve", help="length-1 projective resolution of a complex")
    p.add_argument("a")

    p = sub.add_parser("classify", help="phantom/monic/epic/equivalence flags of a chain map")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("map")

    p = sub.add_parser("kappa", help="secondary invariant of a phantom chain map")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("map")

    p = sub.add_parser("ring-ext", help="Ext^n over Z[t]/(p) or the Laurent ring")
    p.add_argument("m")
    p.add_argument("n_module", metavar="n")
    p.add_argument("--n", type=int, required=True, dest="n")

    p = sub.add_parser("ring-tor", help="Tor_n over Z[t]/(p) or the Laurent ring")
    p.add_argument("m")
    p.add_argument("n_module", metavar="n")
    p.add_argument("--n", type=int, required=True, dest="n")

    p = sub.add_parser("hh", help="Hochschild (co)homology of the Laurent ring")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=["homology", "cohomology"], default="homology")

    p = sub.add_parser("pv", help="Pimsner-Voiculescu six-term report")
    p.add_argument("input")

    p = sub.add_parser("kunneth-check", help="compare tensor homology with the Kunneth prediction")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("selftest", help="seeded randomized self-checks")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = args.out
    _raw_inputs.clear()
    try:
        inputs = [getattr(args, attr) for attr in _INPUT_ATTRS[args.command]]
        digest = _digest(inputs)
        result = _HANDLERS[args.command](args)
    except InputError as exc:
        _emit({"error": {"code": "validation", "message": str(exc)}}, out)
        return 2
    except Exception as exc:  # noqa: BLE001 - report, then signal internal error
        _emit({"error": {"code": "internal", "message": f"{type(exc).__name__}: {exc}"}}, out)
        return 1
    _emit({"command": args.command, "inputs_digest": digest, "result": result}, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
