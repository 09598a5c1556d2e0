"""Canonical UTF-8 JSON serialization for arrows, words, and module elements.

Arrow layout (field order is fixed so serialized forms sort like the
canonical enumeration):

    FI/OI: {"cat": "FI"|"OI", "d": d, "src": n, "tgt": m,
            "f": [f(1), ..., f(n)], "g": {"pos": color, ...}}
    M:     {"cat": "M", "d": d, "src": n, "tgt": m,
            "f": [...], "blocks": [[...], ...]}
    V:     {"cat": "V", "r": r, "src": [d, m], "tgt": [e, n],
            "alpha1": [...], "alpha2": {"pos": [parts]},
            "alpha3": [[parts], ...]}

Words are plain strings over "*123456789" with '*' for the star. Module
elements are sums of "<rational>*<word>" terms, e.g. "1*11* - 1*1*1"; each
term splits at its first '*'.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .categories import (
    FIdMorphism,
    MatchingMorphism,
    MultiIndex,
    OIdMorphism,
    VeroneseMorphism,
)
from .errors import FormatError
from .modules import ModuleElement
from .words import Word, decode_word, encode_word, parse_word


def morphism_to_dict(phi) -> dict:
    if isinstance(phi, OIdMorphism):
        cat = "OI"
    elif isinstance(phi, FIdMorphism):
        cat = "FI"
    elif isinstance(phi, MatchingMorphism):
        return {
            "cat": "M",
            "d": phi.d,
            "src": phi.src,
            "tgt": phi.tgt,
            "f": list(phi.injection),
            "blocks": [list(b) for b in phi.blocks],
        }
    elif isinstance(phi, VeroneseMorphism):
        return {
            "cat": "V",
            "r": phi.r,
            "src": list(phi.src),
            "tgt": list(phi.tgt),
            "alpha1": list(phi.alpha1),
            "alpha2": {str(pos): list(v.parts) for pos, v in phi.alpha2_map().items()},
            "alpha3": [list(v.parts) for v in phi.alpha3],
        }
    else:
        raise FormatError(f"cannot serialize {type(phi).__name__}")
    return {
        "cat": cat,
        "d": phi.d,
        "src": phi.src,
        "tgt": phi.tgt,
        "f": list(phi.injection),
        "g": {str(pos): color for pos, color in sorted(phi.coloring.items())},
    }


def morphism_to_json(phi) -> str:
    return json.dumps(morphism_to_dict(phi), separators=(", ", ": "))


def _require(data: dict, key: str):
    if key not in data:
        raise FormatError(f"missing field {key!r}")
    return data[key]


def morphism_from_dict(data: dict):
    if not isinstance(data, dict):
        raise FormatError("morphism must be a JSON object")
    cat = _require(data, "cat")
    try:
        if cat in ("FI", "OI"):
            d = _require(data, "d")
            src = _require(data, "src")
            tgt = _require(data, "tgt")
            f = tuple(_require(data, "f"))
            g = {int(k): int(v) for k, v in _require(data, "g").items()}
            base = FIdMorphism.from_maps(d, src, tgt, f, g)
            return base if cat == "FI" else OIdMorphism(d, base.code)
        if cat == "M":
            return MatchingMorphism(
                _require(data, "d"),
                _require(data, "tgt"),
                tuple(_require(data, "f")),
                tuple(tuple(b) for b in _require(data, "blocks")),
            )
        if cat == "V":
            r = _require(data, "r")
            src = tuple(_require(data, "src"))
            tgt = tuple(_require(data, "tgt"))
            alpha1 = tuple(_require(data, "alpha1"))
            alpha2_map = {
                int(k): MultiIndex(tuple(v)) for k, v in _require(data, "alpha2").items()
            }
            alpha2 = tuple(alpha2_map[k] for k in sorted(alpha2_map))
            expected = sorted(set(range(1, tgt[1] + 1)) - set(alpha1))
            if sorted(alpha2_map) != expected:
                raise FormatError(
                    f"alpha2 positions {sorted(alpha2_map)} != complement {expected}"
                )
            alpha3 = tuple(MultiIndex(tuple(v)) for v in _require(data, "alpha3"))
            return VeroneseMorphism(r, src, tgt, alpha1, alpha2, alpha3)
    except (TypeError, ValueError, AttributeError) as exc:
        raise FormatError(f"malformed morphism data: {exc}") from exc
    raise FormatError(f"unknown category tag {cat!r}")


def morphism_from_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return morphism_from_dict(data)


def element_to_text(element: ModuleElement) -> str:
    return str(element)


def element_from_text(text: str, src: int, d: int) -> ModuleElement:
    """Parse "<rational>*<word> +/- ..." into a module element.

    Each term splits at its first '*', so the star glyph inside words does
    not clash with the coefficient separator.
    """
    text = text.strip()
    if not text or text == "0":
        return ModuleElement(src, d)
    element = ModuleElement(src, d)
    for sgn, term in _split_terms(text):
        if "*" not in term:
            raise FormatError(f"term {term!r} is missing the coefficient separator '*'")
        head, _, word_text = term.partition("*")
        head = head.strip()
        try:
            coeff = Fraction(head) if head else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad coefficient {head!r}") from exc
        word = parse_word(word_text.strip(), d)
        phi = decode_word(Word(word.letters, d), src)
        element = element + ModuleElement(src, d, {phi: sgn * coeff})
    return element


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Terms are separated by whitespace-padded +/-; a bare sign may lead."""
    lead = 1
    if text.startswith("-"):
        lead, text = -1, text[1:].lstrip()
    elif text.startswith("+"):
        text = text[1:].lstrip()
    chunks = re.split(r"\s([+-])\s", text)
    if not chunks or not chunks[0]:
        raise FormatError("empty element text")
    terms = [(lead, chunks[0].strip())]
    for k in range(1, len(chunks) - 1, 2):
        terms.append((1 if chunks[k] == "+" else -1, chunks[k + 1].strip()))
    return terms


def word_to_str(word: Word) -> str:
    return str(word)


__all__ = [
    "morphism_to_dict",
    "morphism_to_json",
    "morphism_from_dict",
    "morphism_from_json",
    "element_to_text",
    "element_from_text",
    "word_to_str",
    "parse_word",
    "encode_word",
    "decode_word",
]
