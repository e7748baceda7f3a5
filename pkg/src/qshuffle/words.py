"""Words in the commuting letter families x_k, y_l and their F_p-linear spans.

A word is stored in normal form as a pair of indices (tuples of positive
ints): the x-part and the y-part.  x-letters commute with y-letters but not
among themselves, so this factorization is unique.  Elements are sparse
maps word -> nonzero residue mod p; tensors are sparse maps over ordered
word pairs.  The text grammar is

    element := term (('+'|'-') term)*
    term    := [coeff '*'] word
    word    := ('x[' ints ']')? ('y[' ints ']')? | '1'
    ints    := int (',' int)*          with every int >= 1

and tensor terms join two words with ' (x) '.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .fields import PrimeField

Index = tuple[int, ...]


def check_index(entries: Iterable[int]) -> Index:
    idx = tuple(int(v) for v in entries)
    for v in idx:
        if v < 1:
            raise ValueError(f"index entries must be >= 1, got {v}")
    return idx


def wt(index: Index) -> int:
    return sum(index)


def dep(index: Index) -> int:
    return len(index)


def index_head_tail(index: Index, i: int) -> tuple[Index, Index]:
    """Split into (first i entries, remaining entries).

    The empty index splits as ((), ()) for every i >= 0; otherwise i may not
    exceed the depth.
    """
    if i < 0:
        raise ValueError("split point must be >= 0")
    if not index:
        return (), ()
    if i > len(index):
        raise ValueError(f"split point {i} exceeds depth {len(index)}")
    return index[:i], index[i:]


class Word:
    """Normal-form word: x-part then y-part, both indices."""

    __slots__ = ("x", "y", "_hash")

    def __init__(self, x: Iterable[int] = (), y: Iterable[int] = ()):
        self.x = check_index(x)
        self.y = check_index(y)
        self._hash = hash((self.x, self.y))

    @property
    def weight(self) -> int:
        return sum(self.x) + sum(self.y)

    @property
    def depth(self) -> int:
        return len(self.x) + len(self.y)

    @property
    def ydeg(self) -> int:
        return len(self.y)

    def is_empty(self) -> bool:
        return not self.x and not self.y

    def is_x_word(self) -> bool:
        """No y-letters (includes the empty word)."""
        return not self.y

    def is_y_word(self) -> bool:
        """No x-letters (includes the empty word)."""
        return not self.x

    def concat(self, other: "Word") -> "Word":
        return Word(self.x + other.x, self.y + other.y)

    __mul__ = concat

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and other.x == self.x and other.y == self.y

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Word({self.x!r}, {self.y!r})"

    def __str__(self) -> str:
        return format_word(self)

    def sort_key(self):
        # y-degree here is the weight carried by y-letters, so e.g.
        # y[1,1] and y[2] tie and fall through to the lexicographic step
        return (self.weight, sum(self.y), len(self.x), self.x, self.y)


EMPTY_WORD = Word()


def xw(*entries: int) -> Word:
    return Word(entries, ())


def yw(*entries: int) -> Word:
    return Word((), entries)


def canonical_order(w1: Word, w2: Word) -> int:
    """-1, 0, or 1: weight, then y-degree, then x-depth, then lex on parts."""
    k1, k2 = w1.sort_key(), w2.sort_key()
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


class Element:
    """Finite F_p-linear combination of words, zero coefficients dropped."""

    __slots__ = ("field", "terms")

    def __init__(self, field: PrimeField, terms: dict[Word, int] | None = None):
        self.field = field
        clean: dict[Word, int] = {}
        if terms:
            p = field.p
            for w, c in terms.items():
                c %= p
                if c:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: PrimeField) -> "Element":
        return cls(field)

    @classmethod
    def one(cls, field: PrimeField) -> "Element":
        return cls(field, {EMPTY_WORD: 1})

    @classmethod
    def from_word(cls, field: PrimeField, word: Word, coeff: int = 1) -> "Element":
        return cls(field, {word: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def in_r(self) -> bool:
        """True when every word is y-free."""
        return all(w.is_x_word() for w in self.terms)

    def coeff(self, word: Word) -> int:
        return self.terms.get(word, 0)

    def _require_same_field(self, other: "Element") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Element") -> "Element":
        self._require_same_field(other)
        merged = dict(self.terms)
        p = self.field.p
        for w, c in other.terms.items():
            v = (merged.get(w, 0) + c) % p
            if v:
                merged[w] = v
            else:
                merged.pop(w, None)
        out = Element.__new__(Element)
        out.field = self.field
        out.terms = merged
        return out

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        p = self.field.p
        out = Element.__new__(Element)
        out.field = self.field
        out.terms = {w: p - c for w, c in self.terms.items()}
        return out

    def scale(self, c: int) -> "Element":
        c %= self.field.p
        if c == 0:
            return Element.zero(self.field)
        if c == 1:
            return self
        p = self.field.p
        out = Element.__new__(Element)
        out.field = self.field
        out.terms = {w: (v * c) % p for w, v in self.terms.items()}
        return out

    def __rmul__(self, c: int) -> "Element":
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    def left_mul_word(self, w0: Word) -> "Element":
        """Multiply every term by w0 on the left in the word monoid."""
        if w0.is_empty():
            return self
        out = Element.__new__(Element)
        out.field = self.field
        out.terms = {w0.concat(w): c for w, c in self.terms.items()}
        return out

    def left_mul_letter(self, family: str, k: int) -> "Element":
        if family == "x":
            return self.left_mul_word(Word((k,), ()))
        if family == "y":
            return self.left_mul_word(Word((), (k,)))
        raise ValueError(f"unknown letter family {family!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and other.field == self.field
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<Element mod {self.field.p}: {format_element(self)}>"


class TensorElement:
    """Finite F_p-linear combination of ordered word pairs."""

    __slots__ = ("field", "terms")

    def __init__(self, field: PrimeField, terms: dict[tuple[Word, Word], int] | None = None):
        self.field = field
        clean: dict[tuple[Word, Word], int] = {}
        if terms:
            p = field.p
            for pair, c in terms.items():
                c %= p
                if c:
                    clean[pair] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: PrimeField) -> "TensorElement":
        return cls(field)

    @classmethod
    def one(cls, field: PrimeField) -> "TensorElement":
        return cls(field, {(EMPTY_WORD, EMPTY_WORD): 1})

    @classmethod
    def from_pair(cls, field: PrimeField, w1: Word, w2: Word, coeff: int = 1) -> "TensorElement":
        return cls(field, {(w1, w2): coeff})

    @classmethod
    def of(cls, left: Element, right: Element) -> "TensorElement":
        """Outer product left (x) right."""
        if left.field != right.field:
            raise ValueError("field mismatch in tensor")
        p = left.field.p
        terms: dict[tuple[Word, Word], int] = {}
        for w1, c1 in left.terms.items():
            for w2, c2 in right.terms.items():
                terms[(w1, w2)] = c1 * c2 % p
        return cls(left.field, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w1: Word, w2: Word) -> int:
        return self.terms.get((w1, w2), 0)

    def _require_same_field(self, other: "TensorElement") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._require_same_field(other)
        merged = dict(self.terms)
        p = self.field.p
        for pair, c in other.terms.items():
            v = (merged.get(pair, 0) + c) % p
            if v:
                merged[pair] = v
            else:
                merged.pop(pair, None)
        out = TensorElement.__new__(TensorElement)
        out.field = self.field
        out.terms = merged
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __neg__(self) -> "TensorElement":
        p = self.field.p
        out = TensorElement.__new__(TensorElement)
        out.field = self.field
        out.terms = {pair: p - c for pair, c in self.terms.items()}
        return out

    def scale(self, c: int) -> "TensorElement":
        c %= self.field.p
        if c == 0:
            return TensorElement.zero(self.field)
        p = self.field.p
        out = TensorElement.__new__(TensorElement)
        out.field = self.field
        out.terms = {pair: (v * c) % p for pair, v in self.terms.items()}
        return out

    def __rmul__(self, c: int) -> "TensorElement":
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and other.field == self.field
            and other.terms == self.terms
        )

    def __iter__(self) -> Iterator[tuple[tuple[Word, Word], int]]:
        return iter(
            sorted(
                self.terms.items(),
                key=lambda t: (t[0][0].sort_key(), t[0][1].sort_key()),
            )
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_tensor(self)

    def __repr__(self) -> str:
        return f"<TensorElement mod {self.field.p}: {format_tensor(self)}>"

    def in_r_tensor_r(self) -> bool:
        return all(w1.is_x_word() and w2.is_x_word() for w1, w2 in self.terms)


# -- enumeration ----------------------------------------------------------


def compositions(n: int) -> Iterator[Index]:
    """All tuples of positive ints summing to n; () for n = 0."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def all_indices(max_weight: int) -> list[Index]:
    out: list[Index] = []
    for n in range(max_weight + 1):
        out.extend(compositions(n))
    return out


def r_words(max_weight: int) -> list[Word]:
    """All y-free words of weight <= max_weight, in canonical order."""
    out = [Word(a, ()) for a in all_indices(max_weight)]
    out.sort(key=Word.sort_key)
    return out


def e_words(max_weight: int) -> list[Word]:
    """All normal-form words of weight <= max_weight, in canonical order."""
    out = []
    for a in all_indices(max_weight):
        for b in all_indices(max_weight - sum(a)):
            out.append(Word(a, b))
    out.sort(key=Word.sort_key)
    return out


# -- text form ------------------------------------------------------------


def _format_index(prefix: str, index: Index) -> str:
    return prefix + "[" + ",".join(str(v) for v in index) + "]"


def format_word(w: Word) -> str:
    if w.is_empty():
        return "1"
    parts = []
    if w.x:
        parts.append(_format_index("x", w.x))
    if w.y:
        parts.append(_format_index("y", w.y))
    return "".join(parts)


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    chunks = []
    for w, c in e:
        body = format_word(w)
        chunks.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(chunks)


def format_tensor(t: TensorElement) -> str:
    if not t.terms:
        return "0"
    chunks = []
    for (w1, w2), c in t:
        body = f"{format_word(w1)} (x) {format_word(w2)}"
        chunks.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(chunks)


# -- parsing --------------------------------------------------------------


class ParseError(ValueError):
    """Malformed element text; carries the position and what was expected."""

    def __init__(self, pos: int, expected: str, found: str = ""):
        self.pos = pos
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found else ""
        super().__init__(f"parse error at position {pos}: expected {expected}{detail}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise ParseError(self.pos, repr(token), self.peek())
        self.pos += len(token)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "an integer", self.peek())
        return int(self.text[start:self.pos])

    def parse_index_body(self) -> Index:
        # called just after '[' was consumed
        entries = [self._positive_int()]
        self.skip_ws()
        while self.peek() == ",":
            self.pos += 1
            entries.append(self._positive_int())
            self.skip_ws()
        self.expect("]")
        return tuple(entries)

    def _positive_int(self) -> int:
        start = self.pos
        self.skip_ws()
        pos = self.pos
        v = self.parse_int()
        if v < 1:
            raise ParseError(pos, "an index entry >= 1", str(v))
        return v

    def parse_word_parts(self) -> Word:
        """A word that is not the literal '1': x-part and/or y-part."""
        x: Index = ()
        y: Index = ()
        self.skip_ws()
        if self.peek() == "x":
            self.pos += 1
            self.expect("[")
            x = self.parse_index_body()
        self.skip_ws()
        if self.peek() == "y":
            self.pos += 1
            self.expect("[")
            y = self.parse_index_body()
        if not x and not y:
            raise ParseError(self.pos, "a word ('x[...]', 'y[...]' or '1')", self.peek())
        return Word(x, y)

    def parse_word(self) -> Word:
        self.skip_ws()
        if self.peek() == "1":
            self.pos += 1
            return EMPTY_WORD
        return self.parse_word_parts()

    def parse_term(self) -> tuple[int, Word]:
        self.skip_ws()
        if self.peek().isdigit():
            mark = self.pos
            value = self.parse_int()
            end = self.pos
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                return value, self.parse_word()
            # a bare number is only legal as the empty word '1'
            if value == 1 and end == mark + 1:
                return 1, EMPTY_WORD
            raise ParseError(self.pos, "'*' after a coefficient", self.peek())
        return 1, self.parse_word_parts()

    def parse_tensor_term(self) -> tuple[int, Word, Word]:
        coeff, w1 = self.parse_term()
        self.skip_ws()
        self.expect("(")
        self.expect("x")
        self.expect(")")
        w2 = self.parse_word()
        return coeff, w1, w2

    def parse_sign(self) -> int | None:
        self.skip_ws()
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return 1
        if ch == "-":
            self.pos += 1
            return -1
        return None

    def finish(self) -> None:
        if not self.at_end():
            raise ParseError(self.pos, "'+', '-' or end of input", self.peek())


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.parse_word()
    p.finish()
    return w


def parse_element(text: str, field: PrimeField) -> Element:
    p = _Parser(text)
    if p.at_end():
        raise ParseError(p.pos, "a term")
    terms: dict[Word, int] = {}
    lead = p.parse_sign()
    sign = 1 if lead is None else lead
    while True:
        coeff, w = p.parse_term()
        terms[w] = terms.get(w, 0) + sign * coeff
        nxt = p.parse_sign()
        if nxt is None:
            break
        sign = nxt
    p.finish()
    return Element(field, terms)


def parse_tensor(text: str, field: PrimeField) -> TensorElement:
    p = _Parser(text)
    if p.at_end():
        raise ParseError(p.pos, "a tensor term")
    terms: dict[tuple[Word, Word], int] = {}
    lead = p.parse_sign()
    sign = 1 if lead is None else lead
    while True:
        coeff, w1, w2 = p.parse_tensor_term()
        terms[(w1, w2)] = terms.get((w1, w2), 0) + sign * coeff
        nxt = p.parse_sign()
        if nxt is None:
            break
        sign = nxt
    p.finish()
    return TensorElement(field, terms)


# -- JSON form ------------------------------------------------------------


def element_to_json(e: Element) -> list[dict]:
    return [
        {"coeff": c, "x": list(w.x), "y": list(w.y)}
        for w, c in e
    ]


def element_from_json(obj, field: PrimeField) -> Element:
    terms: dict[Word, int] = {}
    for entry in obj:
        w = Word(entry.get("x", ()), entry.get("y", ()))
        terms[w] = terms.get(w, 0) + int(entry["coeff"])
    return Element(field, terms)


def tensor_to_json(t: TensorElement) -> list[dict]:
    return [
        {
            "coeff": c,
            "left": {"x": list(w1.x), "y": list(w1.y)},
            "right": {"x": list(w2.x), "y": list(w2.y)},
        }
        for (w1, w2), c in t
    ]


def tensor_from_json(obj, field: PrimeField) -> TensorElement:
    terms: dict[tuple[Word, Word], int] = {}
    for entry in obj:
        left = entry["left"]
        right = entry["right"]
        pair = (
            Word(left.get("x", ()), left.get("y", ())),
            Word(right.get("x", ()), right.get("y", ())),
        )
        terms[pair] = terms.get(pair, 0) + int(entry["coeff"])
    return TensorElement(field, terms)
