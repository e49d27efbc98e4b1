"""
Reader for the text model format:

    algebra {
      m: 1
      elements: 0 1
      leq: (0,1)
      N: 0->1 1->0
      G: 0->0 1->1
      H: 0->0 1->1
    }

Spaces use `points`, `g`, `RG` and `RH` instead. `N/A` stands for an empty
list and `#` starts a comment running to the end of the line.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Iterator

from algebras.structures import TmsAlgebra
from duality.spaces import TmsSpace
from order.lattices import lattice_from_poset
from order.posets import Poset, build_poset
from tensym.exceptions import ParseError, SemanticError

logger = logging.getLogger(__name__)

KINDS = ("algebra", "space")
CARRIER_KEY = {"algebra": "elements", "space": "points"}
MAP_KEYS = {"algebra": ("N", "G", "H"), "space": ("g",)}
RELATION_KEYS = {"algebra": (), "space": ("RG", "RH")}
KEYS = {kind: ("m", CARRIER_KEY[kind], "leq", *MAP_KEYS[kind], *RELATION_KEYS[kind]) for kind in KINDS}
ALL_KEYS = frozenset(KEYS["algebra"]) | frozenset(KEYS["space"])

_TOKEN = re.compile(r"""
    (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<skip>[ \t\r]+)
  | (?P<none>N/A)
  | (?P<arrow>->)
  | (?P<name>[A-Za-z0-9_]+)
  | (?P<punct>[{}():,])
  | (?P<mismatch>.)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for match in _TOKEN.finditer(text):
        kind, value = match.lastgroup, match.group()
        column = match.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind == "mismatch":
            raise ParseError(f"unexpected character {value!r}", line, column)
        elif kind == "punct":
            yield Token(value, value, line, column)
        elif kind not in ("comment", "skip"):
            yield Token(kind, value, line, column)
    yield Token("eof", "", line, len(text) - line_start + 1)


@dataclass
class Entry:
    key: str
    token: Token
    names: list[Token] = field(default_factory=list)
    pairs: list[tuple[Token, Token]] = field(default_factory=list)


@dataclass
class ModelDocument:
    """Syntax tree of one model: its kind and the entries in file order."""
    kind: str
    entries: dict[str, Entry] = field(default_factory=dict)


class _Reader:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def take(self, kind: str, what: str | None = None) -> Token:
        token = self.peek()
        if token.kind != kind:
            found = token.value or "end of input"
            raise ParseError(f"expected {what or kind}, found {found!r}", token.line, token.column)
        self.pos += 1
        return token

    def at_key(self) -> bool:
        return self.peek().kind == "name" and self.peek(1).kind == ":"

    # --- grammar ---
    def document(self) -> ModelDocument:
        head = self.take("name", "'algebra' or 'space'")
        if head.value not in KINDS:
            raise ParseError(f"unknown model kind {head.value!r}", head.line, head.column)
        document = ModelDocument(head.value)
        self.take("{")
        while self.peek().kind != "}":
            entry = self.entry(document.kind)
            if entry.key in document.entries:
                raise SemanticError(f"{entry.key} given twice (line {entry.token.line})")
            document.entries[entry.key] = entry
        self.take("}")
        self.take("eof", "end of input")
        return document

    def entry(self, kind: str) -> Entry:
        if not self.at_key():
            token = self.peek()
            raise ParseError(f"expected a key, found {token.value or 'end of input'!r}", token.line, token.column)
        key = self.take("name")
        self.take(":")
        if key.value not in ALL_KEYS:
            raise ParseError(f"unknown key {key.value!r}", key.line, key.column)
        if key.value not in KEYS[kind]:
            raise SemanticError(f"{key.value} is not a key of {kind} models (line {key.line})")

        entry = Entry(key.value, key)
        if self.peek().kind == "none":
            self.take("none")
        elif key.value in ("m", "elements", "points"):
            while self.peek().kind == "name" and not self.at_key():
                entry.names.append(self.take("name"))
        elif key.value in ("leq", "RG", "RH"):
            while self.peek().kind == "(":
                self.take("(")
                first = self.take("name", "an element name")
                self.take(",")
                second = self.take("name", "an element name")
                self.take(")")
                entry.pairs.append((first, second))
        else:
            while self.peek().kind == "name" and self.peek(1).kind == "arrow":
                source = self.take("name")
                self.take("arrow")
                entry.pairs.append((source, self.take("name", "an element name")))
        if not (self.at_key() or self.peek().kind == "}"):
            token = self.peek()
            raise ParseError(f"unexpected {token.value or 'end of input'!r} in {key.value}", token.line, token.column)
        return entry


def parse_document(text: str) -> ModelDocument:
    return _Reader(text).document()


# --- semantics ---
def _degree(document: ModelDocument) -> int:
    entry = document.entries.get("m")
    if entry is None:
        raise SemanticError("missing m")
    if len(entry.names) != 1 or not entry.names[0].value.isdigit() or int(entry.names[0].value) < 1:
        raise SemanticError(f"m must be one positive integer (line {entry.token.line})")
    return int(entry.names[0].value)


def _carrier(document: ModelDocument) -> tuple[list[str], dict[str, int]]:
    key = CARRIER_KEY[document.kind]
    entry = document.entries.get(key)
    if entry is None:
        raise SemanticError(f"missing {key}")
    names = [token.value for token in entry.names]
    index: dict[str, int] = {}
    for token in entry.names:
        if token.value in index:
            raise SemanticError(f"{token.value!r} listed twice in {key} (line {token.line})")
        index[token.value] = len(index)
    return names, index


def _resolve(index: dict[str, int], key: str, token: Token) -> int:
    if token.value not in index:
        raise SemanticError(f"unknown element {token.value!r} in {key} (line {token.line}, column {token.column})")
    return index[token.value]


def _pairs(document: ModelDocument, key: str, index: dict[str, int]) -> list[tuple[int, int]]:
    entry = document.entries.get(key)
    if entry is None:
        raise SemanticError(f"missing {key}")
    return [(_resolve(index, key, a), _resolve(index, key, b)) for a, b in entry.pairs]


def _table(document: ModelDocument, key: str, index: dict[str, int]) -> tuple[int, ...]:
    entry = document.entries.get(key)
    table: list[int | None] = [None] * len(index)
    for source, target in entry.pairs if entry else ():
        x = _resolve(index, key, source)
        if table[x] is not None:
            raise SemanticError(f"{key} maps {source.value!r} twice (line {source.line})")
        table[x] = _resolve(index, key, target)
    if any(value is None for value in table):
        raise SemanticError(f"{key} not total")
    return tuple(table)


def build_structure(document: ModelDocument) -> TmsAlgebra | TmsSpace:
    m = _degree(document)
    names, index = _carrier(document)
    leq = _pairs(document, "leq", index)
    if document.kind == "algebra":
        if not names:
            raise SemanticError("an algebra needs at least one element")
        return TmsAlgebra(
            lattice=lattice_from_poset(build_poset(len(names), leq)),
            negation=_table(document, "N", index),
            future=_table(document, "G", index),
            past=_table(document, "H", index),
            m=m,
            labels=tuple(names),
        )
    poset = build_poset(len(names), leq) if names else Poset(0, ())
    return TmsSpace(
        poset=poset,
        g=_table(document, "g", index),
        rel_g=frozenset(_pairs(document, "RG", index)),
        rel_h=frozenset(_pairs(document, "RH", index)),
        m=m,
        labels=tuple(names),
    )


def parse_model(text: str) -> TmsAlgebra | TmsSpace:
    """Parse a model file into an algebra or a space, indexed in listing order."""
    structure = build_structure(parse_document(text))
    logger.debug("parsed %s with %d elements", type(structure).__name__, structure.size)
    return structure
