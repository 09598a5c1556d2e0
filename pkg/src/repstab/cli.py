"""Command-line frontend: one binary, one subcommand per pipeline.

Exit codes: 0 success, 1 domain error (message names the violated
precondition), 2 malformed input. All randomness is seeded (--seed or the
REPSTAB_SEED environment variable), so outputs are byte-stable.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys

from . import serialize
from .categories import (
    FIdMorphism,
    MatchingMorphism,
    OIdMorphism,
    VeroneseMorphism,
    compose_fid,
    compose_matching,
    compose_oid,
    compose_veronese,
    enumerate_hom,
    ordered_matching_divides,
)
from .errors import DomainError, FormatError
from .genfunc import fit_eventual_polynomial, generating_function, hilbert_function
from .modules import (
    DEGLEX,
    MonomialSubmodule,
    chain_probe,
    initial_module_truncated,
    member,
    reduce_element,
)
from .secants import generator_degrees, secant_truncated, veronese_ideal_truncated
from .tca import (
    TcaBasisElement,
    check_twisted_commutativity,
    equivariance_probe,
    postcomposition_orbits,
)
from .words import (
    antichain_filter,
    decode_word,
    encode_word,
    higman_witness,
    minimal_words,
    parse_word,
    random_word_stream,
)


def _default_seed() -> int:
    return int(os.environ.get("REPSTAB_SEED", "0"))


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _load_submodule(args) -> MonomialSubmodule:
    words = []
    if args.gens:
        words = [parse_word(line, args.d) for line in _read_lines(args.gens)]
    return MonomialSubmodule.from_words(args.n, args.d, words)


def _object_pair(text: str) -> tuple[int, int]:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise FormatError(f"expected an object pair 'd,m', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise FormatError(f"bad object pair {text!r}") from exc


def cmd_hom(args) -> int:
    if args.cat == "V":
        morphisms = enumerate_hom("V", _object_pair(args.src), _object_pair(args.tgt), r=args.r)
    else:
        morphisms = enumerate_hom(args.cat, int(args.src), int(args.tgt), d=args.d)
    if args.count:
        print(len(morphisms))
        return 0
    if args.json:
        print(json.dumps([serialize.morphism_to_dict(phi) for phi in morphisms]))
    else:
        for phi in morphisms:
            print(serialize.morphism_to_json(phi))
    return 0


def cmd_compose(args) -> int:
    first = serialize.morphism_from_json(args.first)
    second = serialize.morphism_from_json(args.second)
    if type(first) is not type(second):
        raise DomainError("composition domain mismatch: arrows from different categories")
    if isinstance(first, OIdMorphism):
        composite = compose_oid(second, first)
    elif isinstance(first, FIdMorphism):
        composite = compose_fid(second, first)
    elif isinstance(first, VeroneseMorphism):
        composite = compose_veronese(second, first)
    elif isinstance(first, MatchingMorphism):
        composite = compose_matching(second, first)
    else:
        raise DomainError("unsupported arrow type")
    print(serialize.morphism_to_json(composite))
    return 0


def cmd_encode(args) -> int:
    if args.word is not None:
        if args.n is None:
            raise FormatError("decoding needs --n (source size)")
        word = parse_word(args.word, args.d)
        phi = decode_word(word, args.n)
        print(serialize.morphism_to_json(phi))
    elif args.morphism is not None:
        phi = serialize.morphism_from_json(args.morphism)
        print(str(encode_word(phi)))
    else:
        raise FormatError("encode needs either --morphism or --word")
    return 0


def cmd_member(args) -> int:
    submodule = _load_submodule(args)
    phi = decode_word(parse_word(args.word, args.d), args.n)
    ok, certificate = member(submodule, phi)
    if args.json:
        payload = {"member": ok}
        if certificate:
            payload["generator"] = str(encode_word(certificate[0]))
            payload["psi"] = serialize.morphism_to_dict(certificate[1])
        print(json.dumps(payload))
    else:
        if ok:
            g, psi = certificate
            print(f"true: divisible by {encode_word(g)} via psi = {serialize.morphism_to_json(psi)}")
        else:
            print("false")
    return 0


def cmd_reduce(args) -> int:
    gens = [serialize.element_from_text(line, args.n, args.d) for line in _read_lines(args.gens)]
    v = serialize.element_from_text(args.element, args.n, args.d)
    remainder, steps = reduce_element(v, gens, DEGLEX)
    if args.json:
        print(
            json.dumps(
                {
                    "remainder": str(remainder),
                    "steps": [
                        {"generator": i, "psi": serialize.morphism_to_dict(psi), "coefficient": str(c)}
                        for i, psi, c in steps
                    ],
                }
            )
        )
    else:
        print(f"remainder: {remainder}")
        for i, psi, c in steps:
            print(f"step: generator {i}, coefficient {c}, psi {serialize.morphism_to_json(psi)}")
    return 0


def cmd_initial(args) -> int:
    gens = [serialize.element_from_text(line, args.n, args.d) for line in _read_lines(args.gens)]
    lead = initial_module_truncated(gens, args.maxdeg, DEGLEX)
    payload = {
        str(m): sorted(str(encode_word(phi)) for phi in part) for m, part in lead.items()
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for m in sorted(lead):
            print(f"degree {m}: {' '.join(payload[str(m)]) if payload[str(m)] else '-'}")
    return 0


def cmd_hilbert(args) -> int:
    submodule = _load_submodule(args)
    result = hilbert_function(submodule, args.max, fit_window=args.window)
    if args.json:
        payload = {
            "n": args.n,
            "d": args.d,
            "counts": list(result.counts),
            "fi_counts": list(result.fi_counts()),
            "gf": str(result.gf),
            "gf_numerator": list(result.gf.numerator),
            "gf_denominator": list(result.gf.denominator),
            "automaton_states": result.automaton_states,
        }
        if result.polynomial:
            payload["polynomial"] = str(result.polynomial)
            payload["onset"] = result.polynomial.onset
        else:
            payload["failure"] = result.failure
        print(json.dumps(payload))
    else:
        print(f"# quotient of the ordered principal projective P'_{args.n}, d={args.d}")
        print(f"# automaton states: {result.automaton_states}")
        print(f"# generating function: {result.gf}")
        print(f"# gf numerator coefficients (low to high): {list(result.gf.numerator)}")
        print(f"# gf denominator coefficients (low to high): {list(result.gf.denominator)}")
        if result.polynomial:
            print(
                f"# eventually polynomial: {result.polynomial} (onset {result.polynomial.onset})"
            )
        else:
            print(f"# eventual polynomial: {result.failure}")
        print("m\tdim\tfi_dim")
        for m, (c, fc) in enumerate(zip(result.counts, result.fi_counts())):
            print(f"{m}\t{c}\t{fc}")
    if args.figure:
        from .reports import save_hilbert_figure

        save_hilbert_figure(
            result.counts,
            args.figure,
            title=f"dim of quotient of P'_{args.n} (d={args.d})",
        )
        print(f"# figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_gf(args) -> int:
    submodule = _load_submodule(args)
    from .automata import standard_word_automaton

    gf = generating_function(standard_word_automaton(submodule))
    if args.json:
        print(
            json.dumps(
                {"gf": str(gf), "numerator": list(gf.numerator), "denominator": list(gf.denominator)}
            )
        )
    else:
        print(str(gf))
        print(f"# numerator coefficients (low to high): {list(gf.numerator)}")
        print(f"# denominator coefficients (low to high): {list(gf.denominator)}")
    return 0


def cmd_fit(args) -> int:
    if args.counts_file:
        text = " ".join(_read_lines(args.counts_file))
    else:
        text = args.counts
    if not text:
        raise FormatError("fit needs --counts or --counts-file")
    try:
        counts = [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise FormatError(f"bad counts: {exc}") from exc
    poly = fit_eventual_polynomial(counts, args.window)
    if args.json:
        print(
            json.dumps(
                {
                    "onset": poly.onset,
                    "coefficients": [str(c) for c in poly.coefficients],
                    "polynomial": str(poly),
                }
            )
        )
    else:
        print(f"{poly} (onset {poly.onset})")
    return 0


def cmd_secant(args) -> int:
    truncation = args.maxdeg
    ideal = veronese_ideal_truncated(args.r, args.d, truncation)
    result = secant_truncated(ideal, args.order, truncation)
    dims = {e: result.dim(e) for e in range(1, truncation + 1)}
    table = generator_degrees(result) if truncation >= 2 else None
    new = table.per_degree if table else {}
    observed = table.observed_max if table else None
    if args.json:
        print(
            json.dumps(
                {
                    "r": args.r,
                    "d": args.d,
                    "order": args.order,
                    "truncation": truncation,
                    "dims": {str(e): dims[e] for e in dims},
                    "new_generators": {str(e): new[e] for e in sorted(new)},
                    "observed_generation_degree": observed,
                    "note": f"exact below degree {truncation}; no claims above it",
                }
            )
        )
    else:
        print(
            f"# secant order {args.order} of the degree-{args.d} Veronese ideal, r={args.r}"
        )
        print(f"# exact below degree {truncation}; no claims above it")
        print(f"# observed generation degree: {observed}")
        print("degree\tdim\tnew_generators")
        for e in sorted(dims):
            print(f"{e}\t{dims[e]}\t{new.get(e, 0)}")
    if args.figure:
        from .reports import save_generator_degree_figure

        save_generator_degree_figure(
            dims,
            new,
            args.figure,
            title=f"Sec^{args.order} of the d={args.d} Veronese (r={args.r})",
        )
        print(f"# figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_tca(args) -> int:
    if args.action != "check":
        raise FormatError(f"unknown tca action {args.action!r} (expected 'check')")
    d = args.d
    ok = True
    lines = []
    for n in range(args.max_degree + 1):
        for m in range(args.max_degree + 1):
            for xw in itertools.product(range(1, d + 1), repeat=n):
                for yw in itertools.product(range(1, d + 1), repeat=m):
                    if not check_twisted_commutativity(
                        TcaBasisElement(d, xw), TcaBasisElement(d, yw)
                    ):
                        ok = False
    lines.append(
        f"twisted commutativity (degrees <= {args.max_degree}, d={d}): {'ok' if ok else 'FAILED'}"
    )
    eq_ok = all(
        equivariance_probe(n, m, d)
        for n in range(1, args.max_degree + 1)
        for m in range(1, args.max_degree + 1)
    )
    lines.append(
        f"block equivariance (degrees <= {args.max_degree}, d={d}): {'ok' if eq_ok else 'FAILED'}"
    )
    orbit_ok = all(
        postcomposition_orbits(n, m) == 1 for n in range(1, 4) for m in range(n, 6)
    )
    lines.append(f"post-composition transitivity (n <= 3, m <= 5): {'ok' if orbit_ok else 'FAILED'}")
    if args.json:
        print(json.dumps({"passed": ok and eq_ok and orbit_ok, "checks": lines}))
    else:
        for line in lines:
            print(line)
    return 0 if ok and eq_ok and orbit_ok else 1


def cmd_higman(args) -> int:
    if args.words:
        stream = [parse_word(line, args.d) for line in _read_lines(args.words)]
        report = higman_witness(stream)
    else:
        report = higman_witness(
            random_word_stream(args.seed, args.d, args.max_len), max_scan=args.budget
        )
    if args.json:
        if report.witness:
            w = report.witness
            print(
                json.dumps(
                    {
                        "witness": {"i": w.index_low, "j": w.index_high, "embedding": list(w.embedding)},
                        "scanned": report.scanned,
                    }
                )
            )
        else:
            print(json.dumps({"witness": None, "scanned": report.scanned}))
    else:
        if report.witness:
            w = report.witness
            print(f"witness: w_{w.index_low} <= w_{w.index_high}, embedding {list(w.embedding)}")
        else:
            print(f"antichain so far ({report.scanned} words scanned, no witness)")
    return 0


def _random_ordered_matching(rng: random.Random, src: int, d: int, max_tgt: int) -> MatchingMorphism:
    slack = rng.randrange(0, max(1, (max_tgt - src) // d + 1))
    tgt = src + d * slack
    positions = sorted(rng.sample(range(1, tgt + 1), src))
    complement = [v for v in range(1, tgt + 1) if v not in positions]
    rng.shuffle(complement)
    blocks = [tuple(sorted(complement[i : i + d])) for i in range(0, len(complement), d)]
    return MatchingMorphism(d, tgt, tuple(positions), tuple(blocks))


def cmd_antichain(args) -> int:
    if args.input:
        morphisms = [serialize.morphism_from_json(line) for line in _read_lines(args.input)]
        for phi in morphisms:
            if not isinstance(phi, MatchingMorphism):
                raise DomainError("antichain-search expects matching arrows")
    else:
        rng = random.Random(args.seed)
        morphisms = [
            _random_ordered_matching(rng, args.src, args.d, args.max_tgt)
            for _ in range(args.count)
        ]
    kept, comparable = antichain_filter(
        morphisms, lambda a, b: ordered_matching_divides(a, b) is not None
    )
    if args.json:
        print(
            json.dumps(
                {
                    "antichain_indices": kept,
                    "antichain_size": len(kept),
                    "comparable_pairs": [list(p) for p in comparable],
                    "scanned": len(morphisms),
                }
            )
        )
    else:
        print(f"scanned {len(morphisms)} arrows; antichain of size {len(kept)}")
        for i, j in comparable:
            print(f"comparable: {i} ~ {j}")
        for i in kept:
            print(serialize.morphism_to_json(morphisms[i]))
    return 0


def cmd_minimal(args) -> int:
    words = [parse_word(line, args.d) for line in _read_lines(args.words)]
    for w in sorted(minimal_words(words), key=lambda w: (len(w.letters), w.letters)):
        print(str(w))
    return 0


def cmd_chain(args) -> int:
    elements = [serialize.element_from_text(line, args.n, args.d) for line in _read_lines(args.stream)]
    report = chain_probe(elements, args.maxdeg, DEGLEX)
    if args.json:
        print(
            json.dumps(
                {
                    "stable_from": report.stable_from,
                    "steps": report.steps,
                    "history": [list(h) for h in report.history],
                }
            )
        )
    else:
        if report.stabilized:
            print(f"stabilizes at index {report.stable_from} (of {report.steps})")
        else:
            print(f"no stabilization within budget ({report.steps} elements)")
        for k, h in enumerate(report.history, start=1):
            print(f"after {k}: {' '.join(h) if h else '-'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repstab",
        description="composition engines, word orders, Hilbert series, and truncated secant ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="enumerate or count a hom-set")
    p.add_argument("--cat", required=True, choices=["FI", "OI", "V", "M"])
    p.add_argument("--d", type=int, default=1, help="colors / block size (FI, OI, M)")
    p.add_argument("--r", type=int, default=2, help="variable count (V)")
    p.add_argument("--src", required=True, help="source object (int, or 'd,m' for V)")
    p.add_argument("--tgt", required=True, help="target object (int, or 'e,n' for V)")
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("compose", help="compose two serialized arrows (second after first)")
    p.add_argument("--first", required=True, help="inner arrow, JSON")
    p.add_argument("--second", required=True, help="outer arrow, JSON")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("encode", help="word encoding of ordered arrows (both directions)")
    p.add_argument("--morphism", help="arrow JSON to encode")
    p.add_argument("--word", help="word to decode (needs --n)")
    p.add_argument("--n", type=int, help="source size for decoding")
    p.add_argument("--d", type=int, default=None, help="color count (inferred if omitted)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("member", help="monomial submodule membership with certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", required=True, help="file of generator words, one per line")
    p.add_argument("--word", required=True, help="candidate arrow as a word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("reduce", help="division with remainder by module elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", required=True, help="file of elements, one per line")
    p.add_argument("--element", required=True, help="dividend, e.g. '1*11* - 1*1*1'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("initial", help="truncated initial module lead terms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", required=True, help="file of elements, one per line")
    p.add_argument("--maxdeg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("hilbert", help="counts, generating function, eventual polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", help="file of generator words (omit for the full module)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="write a dimension plot to this file")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gf", help="generating function of the standard words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", help="file of generator words")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("fit", help="eventual polynomial from a count sequence")
    p.add_argument("--counts", help="comma or space separated counts")
    p.add_argument("--counts-file", help="file of counts")
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("secant", help="truncated secant ideal and generator degrees")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--maxdeg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="write a generator-degree chart to this file")
    p.set_defaults(func=cmd_secant)

    p = sub.add_parser("tca", help="axiom checks for the free twisted algebra")
    p.add_argument("action", nargs="?", default="check")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tca)

    p = sub.add_parser("higman", help="comparable-pair search in a word stream")
    p.add_argument("--words", help="file of words (finite stream)")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_higman)

    p = sub.add_parser(
        "antichain-search", help="pairwise-incomparability search over matching arrows"
    )
    p.add_argument("--input", help="file of matching arrows, JSON per line")
    p.add_argument("--src", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-tgt", type=int, default=8)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_antichain)

    p = sub.add_parser("minimal", help="order-minimal words of a finite set")
    p.add_argument("--words", required=True, help="file of words")
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("chain", help="ascending-chain stabilization probe")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--stream", required=True, help="file of elements, one per line")
    p.add_argument("--maxdeg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
