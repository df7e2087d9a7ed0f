"""Command-line front end.

Exit codes: 0 success, 1 property violated, 2 input error, 3 word not in
the Gray image, 4 resource cap hit. ``--json`` prints a byte-stable report.
"""
from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import logging
import sys
from pathlib import Path

from .algebra import ZkVector
from .errors import LimitExceeded, NotApplicable, NotInImage, SizeLimitExceeded, Z2kError
from .gray import big_phi, big_phi_inverse, gray_table
from .lattice import (
    DEFAULT_SIZE_LIMIT, GeneratorSpec, SpannedCode, info_rates, min_hamming_distance_binary,
    min_lee_distance, minimize_type, span,
)
from .perfect import classify_if_perfect, hamming_code_spec, large_modulus_obstruction
from .propelinear import (
    DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_SEED, BinaryWord, CoordinatePermutation, check_hamming_compatible,
    check_propelinear, check_translation_invariant, translation_witness,
)
from .search import MAX_M, MAX_R, canonical_form, count_gray_maps, uniqueness_report

log = logging.getLogger("z2kgray")

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_NOT_IN_IMAGE, EXIT_CAP = 0, 1, 2, 3, 4
MAX_K = 16


class InputError(Exception):
    pass


def plain(obj):
    """Convert reports to JSON-ready values (words as bit strings)."""
    if isinstance(obj, BinaryWord):
        return str(obj)
    if isinstance(obj, ZkVector):
        return list(obj.coords)
    if isinstance(obj, CoordinatePermutation):
        return list(obj.images)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(plain(k)): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [plain(x) for x in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    return obj


def dumps(doc) -> str:
    return json.dumps(plain(doc), sort_keys=True, indent=2, ensure_ascii=False)


def digest(payload) -> str:
    raw = json.dumps(plain(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(raw.encode()).hexdigest()


def report_document(command: str, inputs, values, verdict=None, witnesses=(), notes=(), seed=None) -> dict:
    doc = {"command": command, "input_digest": digest({"command": command, "inputs": inputs}),
           "values": values, "witnesses": list(witnesses), "notes": list(notes)}
    if verdict is not None:
        doc["verdict"] = verdict
    if seed is not None:
        doc["seed"] = seed
    return doc


# -- input parsing ------------------------------------------------------------


def parse_vector(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"not a comma-separated vector: {text!r}") from None


def load_spec_document(path: str) -> tuple[dict, GeneratorSpec]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        blocks = tuple((int(b["modulus"]), int(b["length"])) for b in doc["blocks"])
        gens = tuple(tuple(int(c) for c in g) for g in doc["generators"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed code spec {path}: {exc}") from None
    try:
        return doc, GeneratorSpec(blocks, gens)
    except Z2kError as exc:
        raise InputError(f"invalid code spec {path}: {exc}") from None


def spec_inputs(spec: GeneratorSpec) -> dict:
    return {"blocks": [list(b) for b in spec.blocks], "generators": [list(g) for g in spec.generators]}


# -- commands -------------------------------------------------------------------


def cmd_gray(args):
    if not 1 <= args.k <= MAX_K:
        raise InputError(f"k must be in 1..{MAX_K}")
    rows = [{"j": j, "bits": str(w), "lee_weight": lw} for j, w, lw in gray_table(args.k).rows()]
    doc = report_document("gray", {"k": args.k}, {"k": args.k, "rows": rows})
    text = "\n".join(f"{r['j']}:{r['bits']} {r['lee_weight']}" for r in rows)
    return EXIT_OK, doc, text


def _check_k(k):
    if not 1 <= k <= MAX_K:
        raise InputError(f"k must be in 1..{MAX_K}")


def cmd_map(args):
    _check_k(args.k)
    coords = parse_vector(args.vector)
    try:
        v = ZkVector(tuple(coords), 2 * args.k)
    except Z2kError as exc:
        raise InputError(str(exc)) from None
    bits = str(big_phi(v))
    return EXIT_OK, report_document("map", {"k": args.k, "vector": coords}, {"bits": bits}), bits


def cmd_unmap(args):
    _check_k(args.k)
    try:
        w = BinaryWord.from_str(args.bits)
    except Z2kError as exc:
        raise InputError(str(exc)) from None
    inputs = {"k": args.k, "bits": str(w)}
    try:
        v = big_phi_inverse(w, args.k)
    except NotInImage as exc:
        doc = report_document("unmap", inputs, {"vector": None}, notes=["not in image"])
        log.error("not in image: %s", exc)
        return EXIT_NOT_IN_IMAGE, doc, "not in image"
    except Z2kError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK, report_document("unmap", inputs, {"vector": list(v.coords)}), str(v)


def _span(spec: GeneratorSpec, args) -> SpannedCode:
    return span(spec, args.size_limit)


def cmd_analyze(args):
    _, spec = load_spec_document(args.spec)
    code = _span(spec, args)
    reduction = minimize_type(code)
    values = {"N": code.size, "type": str(code.type), "minimized_type": str(reduction.type),
              "decomposable": code.decomposable}
    if code.size >= 2:
        values["min_lee_distance"] = min_lee_distance(code)
        values["min_hamming_distance"] = min_hamming_distance_binary(code)
    notes = reduction.notes
    if len(code.type.blocks) == 1:
        rates = info_rates(code)
        values["R"] = rates.R
        values["R_prime"] = rates.R_prime
    else:
        notes.append("rates reported only for single-modulus codes")
    doc = report_document("analyze", spec_inputs(spec), values, notes=notes)
    text = "\n".join(f"{k}: {v}" for k, v in values.items())
    return EXIT_OK, doc, text


def _translation_candidates(code: SpannedCode) -> list[BinaryWord]:
    """The (1,0,..,0,1) pattern in each Z_2k chunk with k > 2, zeros elsewhere."""
    out, offset, n = [], 0, code.type.binary_length
    for m, length in code.type.blocks:
        k = m // 2
        for _ in range(length):
            if k > 2:
                bits = [0] * n
                bits[offset:offset + k] = translation_witness(k).bits
                out.append(BinaryWord(tuple(bits)))
            offset += k
    return out


def cmd_verify(args):
    _, spec = load_spec_document(args.spec)
    code = _span(spec, args)
    image = code.binary_image()
    inputs = {"spec": spec_inputs(spec), "property": args.property,
              "exhaustive_limit": args.exhaustive_limit}
    if args.property == "propelinear":
        rep = check_propelinear(image, seed=args.seed)
        verdict = rep.passed
        witnesses = [{"axiom": a.name, **a.witness} for a in rep.axioms if a.witness]
        values = {a.name: a.passed for a in rep.axioms}
        seed = rep.seed
    elif args.property == "hamming":
        rep = check_hamming_compatible(image, args.exhaustive_limit, seed=args.seed)
        verdict, seed = rep.passed, rep.seed
        witnesses = [rep.witness] if rep.witness else []
        values = {"exhaustive": rep.exhaustive, "checked": rep.vectors_checked}
    else:
        rep = check_translation_invariant(image, args.exhaustive_limit, seed=args.seed,
                                          candidates=_translation_candidates(code))
        verdict, seed = rep.invariant, rep.seed
        witnesses = [rep.witness] if rep.witness else []
        values = {"exhaustive": rep.exhaustive, "checked": rep.triples_checked}
    if seed is not None:
        inputs["seed"] = seed
    doc = report_document("verify", inputs, values, verdict=verdict, witnesses=witnesses, seed=seed)
    expected = args.expect == "true"
    text = f"{args.property}: {'TRUE' if verdict else 'FALSE'}"
    for w in witnesses:
        text += "\n  witness: " + json.dumps(plain(w), sort_keys=True)
    return (EXIT_OK if verdict == expected else EXIT_VIOLATED), doc, text


def cmd_perfect(args):
    if args.hamming is not None:
        if args.spec:
            raise InputError("give either a spec file or --hamming, not both")
        try:
            spec = hamming_code_spec(args.hamming)
        except Z2kError as exc:
            raise InputError(str(exc)) from None
    elif args.spec:
        _, spec = load_spec_document(args.spec)
    else:
        raise InputError("a spec file or --hamming R is required")
    code = _span(spec, args)
    cls = classify_if_perfect(code, covering_scan=args.scan)
    p = cls.perfect
    values = {"one_perfect": p.verdict, "sphere_packing_holds": p.sphere_packing_holds,
              "min_distance": p.min_distance, "length": p.length, "N": p.size,
              "covering_radius_checked": p.covering_radius_checked,
              "minimized_type": str(cls.minimized_type), "theorem_violation": cls.theorem_violation}
    if p.verdict:
        values["z2_coordinates"] = cls.z2_coordinates
        values["z4_coordinates"] = cls.z4_coordinates
    witnesses, notes = [], list(cls.notes)
    if p.witness:
        witnesses.append(p.witness)
    try:
        obstruction = large_modulus_obstruction(code)
    except NotApplicable as exc:
        notes.append(f"obstruction not applicable: {exc}")
    else:
        values["obstruction_case"] = obstruction.case
        witnesses.append({"obstruction": plain(obstruction)})
    doc = report_document("perfect", spec_inputs(spec), values, verdict=p.verdict,
                          witnesses=witnesses, notes=notes)
    text = "\n".join(f"{k}: {v}" for k, v in values.items())
    return (EXIT_VIOLATED if cls.theorem_violation else EXIT_OK), doc, text


def cmd_search(args):
    if not (2 <= args.r <= MAX_R and 1 <= args.m <= MAX_M):
        raise InputError(f"search needs 2 <= r <= {MAX_R} and 1 <= m <= {MAX_M}")
    inputs = {"r": args.r, "m": args.m, "orbits": args.orbits, "compatible_only": args.compatible_only}
    notes, witnesses = [], []
    if args.r % 2:
        values = {"total": count_gray_maps(args.r, args.m)}
        notes.append("odd r: the Gray-map product is undefined, no compatibility filter")
    else:
        rep = uniqueness_report(args.r, args.m)
        values = {"total": rep.total, "compatible": rep.compatible}
        if args.orbits:
            values["orbits"] = rep.orbits
        if args.compatible_only:
            witnesses = [{"images": [str(w) for w in c.images],
                          "canonical": [str(w) for w in canonical_form(c)]} for c in rep.survivors]
        if args.m == args.r // 2:
            values["all_coordinate_permutations_of_standard"] = (
                rep.survivors_are_standard_permutations and rep.standard_permutations_survive)
    doc = report_document("search", inputs, values, witnesses=witnesses, notes=notes)
    text = " ".join(f"{k}={v}" for k, v in values.items())
    if witnesses:
        text += "\n" + "\n".join(",".join(w["images"]) for w in witnesses)
    return EXIT_OK, doc, text


# -- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--exhaustive-limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    common.add_argument("--size-limit", type=int, default=DEFAULT_SIZE_LIMIT)

    parser = argparse.ArgumentParser(prog="z2kgray", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gray", parents=[common], help="print the Gray map table for Z_2k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("map", parents=[common], help="map a Z_2k vector to its binary image")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", parents=[common], help="recover the Z_2k vector of a binary word")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bits", required=True)
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("analyze", parents=[common], help="size, distances, rates and type of a code")
    p.add_argument("spec")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="check a property of the binary image")
    p.add_argument("spec")
    p.add_argument("--property", choices=["propelinear", "hamming", "translation"], required=True)
    p.add_argument("--expect", choices=["true", "false"], default="true",
                   help="verdict that counts as success (exit 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("perfect", parents=[common], help="1-perfectness and large-modulus obstruction")
    p.add_argument("spec", nargs="?")
    p.add_argument("--hamming", type=int, metavar="R", help="use the binary Hamming code of length 2^R-1")
    p.add_argument("--scan", action="store_true", help="also run the direct covering scan (n <= 24)")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("search", parents=[common], help="exhaustive Gray map search")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--compatible-only", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, doc, text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeLimitExceeded, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(dumps(doc) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
