"""
Group arithmetic for arc labels.

Every group exposes identity, multiplication, inversion and an identity test on elements kept in
normal form, so equality of elements is structural.
"""
import re
from dataclasses import dataclass

from glpaths import cc
from glpaths import exceptions
from glpaths.base_model import GlpObject


@dataclass(frozen=True)
class GroupElement(object):
    group: "GroupSpec"
    payload: object

    def __mul__(self, other):
        return self.group.mul(self, other)

    def __invert__(self):
        return self.group.inv(self)

    @property
    def is_identity(self):
        return self.group.is_identity(self)

    def to_text(self):
        return self.group.format_element(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GroupElement({self.group}: {self.to_text()})"


class GroupSpec(GlpObject):
    op_type = "<not-set>"
    _parameters = ()

    @property
    def parameters(self):
        return self._parameters

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and (self.op_type, self.parameters) == (other.op_type, other.parameters)

    def __hash__(self):
        return hash((self.op_type, self.parameters))

    def __str__(self):
        return " ".join([self.op_type] + [str(p) for p in self.parameters])

    def __repr__(self):
        return f"GroupSpec({self})"

    def element(self, payload):
        return GroupElement(self, self._normalize(payload))

    def identity(self):
        return GroupElement(self, self._identity())

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return GroupElement(self, self._mul(a.payload, b.payload))

    def inv(self, a):
        self.check(a)
        return GroupElement(self, self._inv(a.payload))

    def is_identity(self, a):
        self.check(a)
        return a.payload == self._identity()

    def eq(self, a, b):
        return self.is_identity(self.mul(a, self.inv(b)))

    def product(self, elements):
        """Product of `elements` in the given order, i.e. elements[0] * elements[1] * ..."""
        out = self.identity()
        for elem in elements:
            out = self.mul(out, elem)
        return out

    def check(self, a):
        if not isinstance(a, GroupElement) or a.group != self:
            raise exceptions.GroupError(f"element {a!r} does not belong to group '{self}'")

    def sort_key(self, a):
        return a.payload

    def to_dict(self, export_none=False):
        return {"type": self.op_type, "parameters": list(self.parameters)}

    # to be implemented by each group kind
    def _identity(self):
        raise NotImplementedError

    def _normalize(self, payload):
        raise NotImplementedError

    def _mul(self, p, q):
        raise NotImplementedError

    def _inv(self, p):
        raise NotImplementedError

    def parse_element(self, text):
        raise NotImplementedError

    def format_element(self, a):
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError


class Cyclic(GroupSpec):
    """Integers modulo q under addition"""
    op_type = cc.CYCLIC

    def __init__(self, q):
        q = int(q)
        if q < 1:
            raise exceptions.GroupError(f"cyclic modulus must be positive, not {q}")
        self.q = q
        self._parameters = (q,)

    def _identity(self):
        return 0

    def _normalize(self, payload):
        return int(payload) % self.q

    def _mul(self, p, q):
        return (p + q) % self.q

    def _inv(self, p):
        return (-p) % self.q

    def parse_element(self, text):
        return self.element(_parse_int(text))

    def format_element(self, a):
        return str(a.payload)

    def random_element(self, rng):
        return self.element(int(rng.integers(self.q)))


class Integer(GroupSpec):
    """The additive group of integers"""
    op_type = cc.INTEGER

    def __init__(self):
        self._parameters = ()

    def _identity(self):
        return 0

    def _normalize(self, payload):
        return int(payload)

    def _mul(self, p, q):
        return p + q

    def _inv(self, p):
        return -p

    def parse_element(self, text):
        return self.element(_parse_int(text))

    def format_element(self, a):
        return str(a.payload)

    def random_element(self, rng):
        return self.element(int(rng.integers(-3, 4)))


class Symmetric(GroupSpec):
    """
    Permutations of {1..n} stored as image tuples.

    The product a * b applies b first: (a * b)(x) = a(b(x)).
    """
    op_type = cc.SYMMETRIC

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise exceptions.GroupError(f"symmetric degree must be positive, not {n}")
        self.n = n
        self._parameters = (n,)

    def _identity(self):
        return tuple(range(1, self.n + 1))

    def _normalize(self, payload):
        images = tuple(int(x) for x in payload)
        if sorted(images) != list(range(1, self.n + 1)):
            raise exceptions.GroupError(f"{images} is not a permutation of 1..{self.n}")
        return images

    def _mul(self, p, q):
        return tuple(p[q[i] - 1] for i in range(self.n))

    def _inv(self, p):
        images = [0] * self.n
        for i, image in enumerate(p):
            images[image - 1] = i + 1
        return tuple(images)

    def cycle(self, *points):
        """The cyclic permutation points[0] -> points[1] -> ... -> points[0]"""
        if len(set(points)) != len(points) or any(not 1 <= p <= self.n for p in points):
            raise exceptions.GroupError(f"invalid cycle {points} in symmetric {self.n}")
        images = list(range(1, self.n + 1))
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)]
        return self.element(images)

    def parse_element(self, text):
        text = text.replace(" ", "")
        if text == cc.PERM_IDENTITY:
            return self.identity()
        if not re.fullmatch(r"(\([0-9,]+\))+", text):
            raise exceptions.GroupError(f"malformed permutation '{text}'")
        out = self.identity()
        for body in re.findall(r"\(([0-9,]+)\)", text):
            try:
                points = [int(x) for x in body.split(",")]
            except ValueError:
                raise exceptions.GroupError(f"malformed cycle '({body})'")
            out = self.mul(out, self.cycle(*points))
        return out

    def format_element(self, a):
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen or a.payload[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = a.payload[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = a.payload[nxt - 1]
            cycles.append("(" + ",".join(str(x) for x in cyc) + ")")
        if not cycles:
            return cc.PERM_IDENTITY
        return "".join(cycles)

    def random_element(self, rng):
        return self.element([int(x) + 1 for x in rng.permutation(self.n)])


class Free(GroupSpec):
    """
    Free group on named generators; elements are freely reduced words of (generator, +1/-1) letters.
    """
    op_type = cc.FREE

    def __init__(self, generators):
        generators = tuple(str(g) for g in generators)
        if not generators:
            raise exceptions.GroupError("free group needs at least one generator")
        if len(set(generators)) != len(generators):
            raise exceptions.GroupError(f"free group generators must be distinct: {generators}")
        for g in generators:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", g) or g == cc.FREE_IDENTITY:
                raise exceptions.GroupError(f"invalid free generator name '{g}'")
        self.generators = generators
        self._parameters = generators

    def _identity(self):
        return ()

    def _normalize(self, payload):
        word = []
        for gen, exp in payload:
            if gen not in self.generators or exp not in (1, -1):
                raise exceptions.GroupError(f"invalid letter ({gen}, {exp}) for free group '{self}'")
            word.append((gen, exp))
        return _reduce_word(word)

    def _mul(self, p, q):
        return _reduce_word(list(p) + list(q))

    def _inv(self, p):
        return tuple((gen, -exp) for gen, exp in reversed(p))

    def sort_key(self, a):
        return len(a.payload), tuple((self.generators.index(g), e) for g, e in a.payload)

    def parse_element(self, text):
        text = text.replace(" ", "")
        if text == cc.FREE_IDENTITY:
            return self.identity()
        word = []
        for token in text.split("."):
            exp = 1
            if token.endswith(cc.FREE_INVERSE_MARK):
                token = token[:-1]
                exp = -1
            if token not in self.generators:
                raise exceptions.GroupError(f"unknown generator '{token}' in free word '{text}'")
            word.append((token, exp))
        return self.element(word)

    def format_element(self, a):
        if not a.payload:
            return cc.FREE_IDENTITY
        return ".".join(gen + (cc.FREE_INVERSE_MARK if exp < 0 else "") for gen, exp in a.payload)

    def random_element(self, rng):
        length = int(rng.integers(0, 4))
        word = []
        for i in range(length):
            gen = self.generators[int(rng.integers(len(self.generators)))]
            word.append((gen, 1 if rng.integers(2) else -1))
        return self.element(word)


def _reduce_word(word):
    stack = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _parse_int(text):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise exceptions.GroupError(f"malformed integer label '{text}'")


def parse_group(kind, params=()):
    """
    Builds a group from its kind name and textual parameters (as in a `group` line)

    Parameters
    ----------
    kind: str
        One of 'cyclic', 'integer', 'symmetric', 'free'
    params: list of str
    """
    params = list(params)
    try:
        if kind == cc.CYCLIC and len(params) == 1:
            return Cyclic(int(params[0]))
        if kind == cc.INTEGER and not params:
            return Integer()
        if kind == cc.SYMMETRIC and len(params) == 1:
            return Symmetric(int(params[0]))
        if kind == cc.FREE and params:
            return Free(params)
    except ValueError:
        raise exceptions.GroupError(f"malformed parameters for group '{kind}': {params}")
    raise exceptions.GroupError(f"unsupported group '{' '.join([kind] + params)}'")


def identity(spec):
    return spec.identity()


def mul(spec, a, b):
    return spec.mul(a, b)


def inv(spec, a):
    return spec.inv(a)


def is_identity(spec, a):
    return spec.is_identity(a)


def eq(spec, a, b):
    return spec.eq(a, b)


def permutation_parity(a):
    """0 for an even permutation, 1 for an odd one"""
    if not isinstance(a.group, Symmetric):
        raise exceptions.GroupError(f"parity is only defined for permutations, not '{a.group}'")
    seen = set()
    parity = 0
    for start in range(1, a.group.n + 1):
        if start in seen:
            continue
        length = 0
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = a.payload[cur - 1]
            length += 1
        parity += length - 1
    return parity % 2
