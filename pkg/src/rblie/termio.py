"""Text form of polynomials and JSON form of Lie algebra presentations.

Term grammar::

    poly     := "0" | [sign] term { sign term }
    term     := [rational "*"] element
    element  := ident | "R(" element ")" | "[" element "," element "]"
    rational := int [ "/" posint ]

Whitespace is allowed between tokens.  Elements are normalized to the RLS
basis while parsing, so ``[y,x]`` reads as ``-[x,y]`` when ``x > y``.
"""
from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from importlib import resources
from typing import Optional, Union

import jsonschema

from .envelope import LiePresentation, build_s0
from .errors import ParseError, PresentationError, UnknownGenerator
from .lie import LiePoly, apply_operator, bracket
from .words import Alphabet, Word, format_word

__all__ = [
    "parse_term",
    "print_term",
    "format_rational",
    "parse_rational",
    "poly_to_json",
    "load_presentation",
    "presentation_from_dict",
    "presentation_to_dict",
    "dump_presentation",
    "bundled_presentation",
    "BUNDLED",
    "load_schema",
]

MAX_NESTING = 200

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")
_RATIONAL = re.compile(r"-?[0-9]+(/[0-9]*[1-9][0-9]*)?")


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.depth = 0

    def error(self, message: str, pos: Optional[int] = None):
        raise ParseError(message, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def poly(self) -> LiePoly:
        self.skip()
        if self.text[self.pos:].strip() == "0":
            self.pos = len(self.text)
            return LiePoly()
        total = LiePoly()
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        total = total + self.term() * sign
        while self.peek():
            ch = self.peek()
            if ch not in "+-":
                self.error(f"expected '+' or '-', found {ch!r}")
            self.pos += 1
            total = total + self.term() * (-1 if ch == "-" else 1)
        return total

    def term(self) -> LiePoly:
        self.skip()
        coeff = Fraction(1)
        m = _INT.match(self.text, self.pos)
        if m:
            num = int(m.group())
            self.pos = m.end()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                self.skip()
                d = _INT.match(self.text, self.pos)
                if not d or int(d.group()) == 0:
                    self.error("expected a positive denominator")
                den = int(d.group())
                self.pos = d.end()
            coeff = Fraction(num, den)
            self.expect("*")
        return self.element() * coeff

    def element(self) -> LiePoly:
        self.depth += 1
        if self.depth > MAX_NESTING:
            self.error("nesting too deep")
        try:
            ch = self.peek()
            if ch == "[":
                self.pos += 1
                left = self.element()
                self.expect(",")
                right = self.element()
                self.expect("]")
                return bracket(left, right)
            start = self.pos
            m = _IDENT.match(self.text, self.pos)
            if not m:
                self.error("expected a generator, 'R(' or '['" if ch else "unexpected end of input")
            name = m.group()
            self.pos = m.end()
            if name == "R" and self.peek() == "(" and "R" not in self.alphabet:
                self.pos += 1
                inner = self.element()
                self.expect(")")
                return apply_operator(inner)
            if name not in self.alphabet:
                raise UnknownGenerator(f"unknown generator {name!r} at position {start}")
            return LiePoly.letter(self.alphabet[name])
        finally:
            self.depth -= 1


def parse_term(text: str, alphabet: Alphabet) -> LiePoly:
    """Parse ``text`` into a polynomial over ``alphabet``."""
    p = _Parser(text, alphabet)
    if not text.strip():
        p.error("empty term")
    return p.poly()


def _element_text(w: Word) -> str:
    return format_word(w)


def print_term(p: LiePoly) -> str:
    """Canonical text: descending deglex, fully bracketed, coefficient 1 omitted."""
    if not p:
        return "0"
    parts = []
    for i, (w, c) in enumerate(p.sorted_terms()):
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        body = _element_text(w) if mag == 1 else f"{format_rational(mag)}*{_element_text(w)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def poly_to_json(p: LiePoly) -> dict:
    return {
        "text": print_term(p),
        "terms": [{"word": _element_text(w), "coeff": format_rational(c)} for w, c in p.sorted_terms()],
    }


# presentations -----------------------------------------------------------------
BUNDLED = ("sl2", "heisenberg", "abelian1")


def load_schema(name: str = "presentation") -> dict:
    text = resources.files("rblie.data").joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def presentation_from_dict(doc: dict, validate: bool = True) -> LiePresentation:
    """Build a presentation from a parsed document; ``validate`` also runs the Jacobi check."""
    try:
        jsonschema.validate(doc, load_schema("presentation"))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(x) for x in exc.absolute_path) or "document"
        raise PresentationError(f"invalid presentation ({where}): {exc.message}") from None
    table = {}
    for entry in doc.get("brackets", []):
        key = (entry["left"], entry["right"])
        if key in table:
            raise PresentationError(f"bracket ({key[0]},{key[1]}) given twice")
        table[key] = {n: parse_rational(c) for n, c in entry["result"].items()}
    try:
        p = LiePresentation(doc["basis"], table, parse_rational(doc.get("weight", "0")), doc.get("name", ""))
    except ValueError as exc:
        raise PresentationError(str(exc)) from None
    if validate:
        build_s0(p)
    return p


def presentation_to_dict(p: LiePresentation) -> dict:
    doc = {"basis": list(p.basis), "weight": format_rational(p.weight)}
    if p.name:
        doc["name"] = p.name
    doc["brackets"] = [
        {"left": a, "right": b, "result": {n: format_rational(c) for n, c in form.items()}}
        for (a, b), form in sorted(p.table.items(), key=lambda kv: (p.basis.index(kv[0][0]), p.basis.index(kv[0][1])))
    ]
    return doc


def dump_presentation(p: LiePresentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=2) + "\n"


def bundled_presentation(name: str) -> LiePresentation:
    if name not in BUNDLED:
        raise PresentationError(f"no bundled presentation {name!r}; choose from {', '.join(BUNDLED)}")
    text = resources.files("rblie.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return presentation_from_dict(json.loads(text))


def load_presentation(source: Union[str, os.PathLike]) -> LiePresentation:
    """Read a presentation from a JSON file, or a bundled one by name (``sl2``...)."""
    if str(source) in BUNDLED:
        return bundled_presentation(str(source))
    try:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"{source}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise PresentationError(f"{source}: {exc.strerror}") from None
    return presentation_from_dict(doc)
