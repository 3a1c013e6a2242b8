"""Text and JSON encodings of elements and cocharacters."""

from __future__ import annotations

import json
import re
from typing import Any

from adlv.roots import fundamental
from adlv.weyl import Element, from_word, reduced_word


class ParseError(ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def element_to_json(w: Element) -> dict[str, Any]:
    """{"n", "perm" (1-based one-line), "lambda"}."""
    return {"n": w.n, "perm": [i + 1 for i in w.perm], "lambda": list(w.lam)}


def element_to_word(w: Element) -> dict[str, Any]:
    word, omega = reduced_word(w)
    return {"word": list(word), "omega": omega}


def word_text(w: Element) -> str:
    word, omega = reduced_word(w)
    return " ".join([f"s{i}" for i in word] + [f"t^{omega}"])


def serialize_element(w: Element, form: str = "word") -> str:
    if form == "word":
        return json.dumps(element_to_word(w), separators=(",", ":"))
    if form == "json":
        return json.dumps(element_to_json(w), separators=(",", ":"))
    if form == "text":
        return word_text(w)
    raise ValueError(f"unknown form {form!r}")


_TOKEN = re.compile(r"\s*(?:(s)(\d+)|(t|tau)\^(-?\d+)|(\S+))")


def _parse_text(text: str, n: int | None) -> Element:
    if n is None:
        raise ParseError("word form needs n", 0)
    word, omega, seen_tau = [], 0, False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(5) is not None:
            raise ParseError(f"unexpected token {m.group(5)!r}", start)
        if m.group(1):
            if seen_tau:
                raise ParseError("simple reflection after the tau power", start)
            i = int(m.group(2))
            if i >= n:
                raise ParseError(f"s{i} out of range for n={n}", start)
            word.append(i)
        else:
            if seen_tau:
                raise ParseError("second tau power", start)
            seen_tau = True
            omega = int(m.group(4))
        pos = m.end()
    return from_word(word, omega, n)


def _parse_json(obj: Any, n: int | None, text: str) -> Element:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", 0)
    n = obj.get("n", n)
    if "perm" in obj:
        perm, lam = obj.get("perm"), obj.get("lambda")
        if not isinstance(perm, list) or not isinstance(lam, list) or len(perm) != len(lam):
            raise ParseError("perm and lambda must be lists of equal length", text.find("perm"))
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ParseError("perm is not a permutation of 1..n", text.find("perm"))
        if n is not None and n != len(perm):
            raise ParseError("n does not match perm", text.find('"n"'))
        return Element(tuple(i - 1 for i in perm), tuple(int(x) for x in lam))
    if "word" in obj:
        if n is None:
            raise ParseError("word encoding needs n", 0)
        word = obj["word"]
        if not isinstance(word, list) or any(not isinstance(i, int) or not 0 <= i < n for i in word):
            raise ParseError("word entries must be integers in 0..n-1", text.find("word"))
        return from_word(word, int(obj.get("omega", 0)), n)
    raise ParseError("expected keys perm/lambda or word/omega", 0)


def parse_element(text: str, n: int | None = None) -> Element:
    """Parse the JSON encodings or the word form "s0 s5 s4 t^2"."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.pos) from None
        return _parse_json(obj, n, stripped)
    return _parse_text(text, n)


_OMEGA = re.compile(r"\s*([+-]?\s*\d*)\s*\*?\s*(?:omega|ω|w)_?(\d+|[₀-₉]+)\s*")
_SUBSCRIPT = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def parse_cocharacter(text: str, n: int | None = None) -> tuple[int, ...]:
    """"1,1,0,0" or a combination like "2omega1+omega3" / "ω₃" (needs n)."""
    text = text.strip()
    if re.fullmatch(r"[-\d\s,\[\]]+", text):
        try:
            vals = tuple(int(x) for x in text.strip("[]").split(",") if x.strip())
        except ValueError:
            raise ParseError(f"bad cocharacter {text!r}", 0) from None
        if n is not None and len(vals) != n:
            raise ParseError(f"expected {n} entries, got {len(vals)}", 0)
        return vals
    if n is None:
        raise ParseError("fundamental-weight form needs n", 0)
    out = [0] * n
    pos = 0
    while pos < len(text):
        m = _OMEGA.match(text, pos)
        if m is None:
            raise ParseError(f"cannot parse {text[pos:]!r}", pos)
        coef = m.group(1).replace(" ", "")
        c = int(coef) if coef not in ("", "+", "-") else (-1 if coef == "-" else 1)
        k = int(m.group(2).translate(_SUBSCRIPT))
        try:
            om = fundamental(n, k)
        except ValueError as exc:
            raise ParseError(str(exc), m.start(2)) from None
        out = [a + c * b for a, b in zip(out, om)]
        pos = m.end()
    return tuple(out)
