"""Finite monoids as multiplication tables: units, atoms, predicates, homs.

Elements are dense integer indices into the table; names are metadata.
Words over a monoid (or over an abstract alphabet) are plain sequences,
the empty sequence being the empty word.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadIdentityError,
    DuplicateNameError,
    ImageNotAtomError,
    NonAssociativeError,
    NotAtomicError,
    NotAtomPreservingError,
    NotIdentityPreservingError,
    NotMultiplicativeError,
    ValidationError,
)

PROPERTIES = ("atomic", "dedekind_finite", "acyclic", "unit_cancellative", "cancellative")


class FiniteMonoid:
    """A validated finite monoid. Immutable after construction."""

    __slots__ = ("names", "table", "identity", "size", "_units", "_atoms", "_layers")

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], identity: int):
        self.names = tuple(names)
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.size = len(self.names)
        self._units = None
        self._atoms = None
        self._layers = None

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def elem(self, name: str) -> int:
        """Index of the element with the given name."""
        try:
            return self.names.index(name)
        except ValueError:
            raise ValidationError(f"no element named {name!r}") from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteMonoid)
            and self.names == other.names
            and self.table == other.table
            and self.identity == other.identity
        )

    def __hash__(self) -> int:
        return hash((self.names, self.table, self.identity))

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, names={self.names})"


def new_monoid(names: Sequence[str], table: Sequence[Sequence[int]], identity: int) -> FiniteMonoid:
    """Validate a multiplication table and wrap it as a FiniteMonoid."""
    names = tuple(str(n) for n in names)
    n = len(names)
    if n == 0:
        raise ValidationError("a monoid needs at least one element")
    if len(set(names)) != n or any(name == "" for name in names):
        raise DuplicateNameError("names must be distinct non-empty strings")
    if len(table) != n or any(len(row) != n for row in table):
        raise ValidationError(f"table must be {n}x{n}")
    tab = tuple(tuple(int(v) for v in row) for row in table)
    for row in tab:
        for v in row:
            if not 0 <= v < n:
                raise ValidationError(f"table entry {v} out of range [0, {n})")
    if not 0 <= identity < n:
        raise ValidationError(f"identity index {identity} out of range")
    for x in range(n):
        if tab[identity][x] != x or tab[x][identity] != x:
            raise BadIdentityError(x)
    for i in range(n):
        for j in range(n):
            ij = tab[i][j]
            row_ij = tab[ij]
            row_i = tab[i]
            for k in range(n):
                if row_ij[k] != row_i[tab[j][k]]:
                    raise NonAssociativeError(i, j, k)
    return FiniteMonoid(names, tab, identity)


def units(m: FiniteMonoid) -> frozenset[int]:
    """The group of units: elements with a two-sided inverse."""
    if m._units is None:
        found = set()
        for u in range(m.size):
            for v in range(m.size):
                if m.mul(u, v) == m.identity and m.mul(v, u) == m.identity:
                    found.add(u)
                    break
        m._units = frozenset(found)
    return m._units


def atoms(m: FiniteMonoid) -> frozenset[int]:
    """Non-units that are not a product of two non-units."""
    if m._atoms is None:
        us = units(m)
        non_units = [x for x in range(m.size) if x not in us]
        reducible = {m.mul(x, y) for x in non_units for y in non_units}
        m._atoms = frozenset(x for x in non_units if x not in reducible)
    return m._atoms


def _atom_closure(m: FiniteMonoid) -> frozenset[int]:
    # all non-empty products of atoms, by right-extension to a fixpoint
    ats = atoms(m)
    seen = set(ats)
    frontier = set(ats)
    while frontier:
        frontier = {m.mul(x, a) for x in frontier for a in ats} - seen
        seen |= frontier
    return frozenset(seen)


def check_property(m: FiniteMonoid, prop: str) -> bool:
    """Exhaustively decide one of the supported predicates on m."""
    n = m.size
    us = units(m)
    if prop == "atomic":
        covered = _atom_closure(m)
        return all(x in covered for x in range(n) if x not in us)
    if prop == "dedekind_finite":
        return all(
            m.mul(y, x) == m.identity
            for x in range(n)
            for y in range(n)
            if m.mul(x, y) == m.identity
        )
    if prop == "acyclic":
        for y in range(n):
            for z in range(n):
                if y in us and z in us:
                    continue
                for x in range(n):
                    if m.mul(m.mul(y, x), z) == x:
                        return False
        return True
    if prop == "unit_cancellative":
        for y in range(n):
            if y in us:
                continue
            for x in range(n):
                if m.mul(x, y) == x or m.mul(y, x) == x:
                    return False
        return True
    if prop == "cancellative":
        for z in range(n):
            left = [m.mul(z, x) for x in range(n)]
            right = [m.mul(x, z) for x in range(n)]
            if len(set(left)) != n or len(set(right)) != n:
                return False
        return True
    raise ValidationError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


class ElemClass(enum.Enum):
    UNIT = "unit"
    ATOM = "atom"
    REDUCIBLE = "reducible"


def classify(m: FiniteMonoid, x: int) -> ElemClass:
    """Trichotomy: unit, atom, or non-unit that factors into two non-units."""
    if x in units(m):
        return ElemClass.UNIT
    if x in atoms(m):
        return ElemClass.ATOM
    return ElemClass.REDUCIBLE


@dataclass(frozen=True)
class MonoidHom:
    """A validated monoid homomorphism given by its value table.

    atom_preserving is computed at construction, never supplied.
    """

    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]
    atom_preserving: bool

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self) -> str:
        return f"MonoidHom({self.source!r} -> {self.target!r}, map={self.map})"


def new_hom(source: FiniteMonoid, target: FiniteMonoid, mapping: Sequence[int]) -> MonoidHom:
    """Validate a map as identity- and product-preserving."""
    mp = tuple(int(v) for v in mapping)
    if len(mp) != source.size:
        raise ValidationError(f"map must have length {source.size}")
    for v in mp:
        if not 0 <= v < target.size:
            raise ValidationError(f"map value {v} out of range")
    if mp[source.identity] != target.identity:
        raise NotIdentityPreservingError("map does not send identity to identity")
    for x in range(source.size):
        for y in range(source.size):
            if mp[source.mul(x, y)] != target.mul(mp[x], mp[y]):
                raise NotMultiplicativeError(x, y)
    tgt_atoms = atoms(target)
    preserving = all(mp[a] in tgt_atoms for a in atoms(source))
    return MonoidHom(source, target, mp, preserving)


def identity_hom(m: FiniteMonoid) -> MonoidHom:
    return new_hom(m, m, tuple(range(m.size)))


def compose(g: MonoidHom, f: MonoidHom) -> MonoidHom:
    """g after f."""
    if f.target != g.source:
        raise ValidationError("homs do not compose")
    return new_hom(f.source, g.target, tuple(g.map[v] for v in f.map))


def is_atomon_mono(f: MonoidHom) -> bool:
    """Monomorphism test: injectivity on atoms and units of the source."""
    if not f.atom_preserving:
        raise NotAtomPreservingError()
    core = atoms(f.source) | units(f.source)
    return len({f.map[x] for x in core}) == len(core)


def terminal_monoid() -> FiniteMonoid:
    """The three-element monoid {1, a, 0} with a*a = 0 and 0 absorbing."""
    return new_monoid(("1", "a", "0"), ((0, 1, 2), (1, 2, 2), (2, 2, 2)), 0)


def trivial_monoid() -> FiniteMonoid:
    return new_monoid(("1",), ((0,),), 0)


def canonical_to_terminal(m: FiniteMonoid) -> MonoidHom:
    """The unique atom-preserving hom into the terminal monoid, by element class."""
    if not check_property(m, "atomic"):
        raise NotAtomicError("canonical map to the terminal object needs an atomic source")
    target = terminal_monoid()
    tag_to_index = {ElemClass.UNIT: 0, ElemClass.ATOM: 1, ElemClass.REDUCIBLE: 2}
    return new_hom(m, target, tuple(tag_to_index[classify(m, x)] for x in range(m.size)))


def eval_word(m: FiniteMonoid, word: Sequence[int]) -> int:
    """Left-to-right product of a word of element indices; empty word gives 1."""
    acc = m.identity
    for x in word:
        acc = m.mul(acc, x)
    return acc


def extend_atom_map(
    target: FiniteMonoid,
    images: Mapping[Hashable, int],
    word: Sequence[Hashable],
) -> int:
    """Evaluate a word over an abstract alphabet through an atom-valued map.

    Every image must be an atom of the target, so the induced map from the
    free monoid on the alphabet is atom-preserving.
    """
    tgt_atoms = atoms(target)
    for symbol, image in images.items():
        if image not in tgt_atoms:
            raise ImageNotAtomError(symbol)
    try:
        substituted = [images[s] for s in word]
    except KeyError as exc:
        raise ValidationError(f"word symbol {exc.args[0]!r} has no image") from None
    return eval_word(target, substituted)


def enumerate_homs(
    source: FiniteMonoid,
    target: FiniteMonoid,
    atom_preserving_only: bool = True,
) -> Iterator[MonoidHom]:
    """All homomorphisms source -> target, by exhaustive map enumeration.

    Intended for desk-scale uniqueness checks; the search space is
    target.size ** (source.size - 1) with the identity pinned.
    """
    n, k = source.size, target.size
    free = [x for x in range(n) if x != source.identity]
    for values in itertools.product(range(k), repeat=len(free)):
        mp = [0] * n
        mp[source.identity] = target.identity
        for pos, v in zip(free, values):
            mp[pos] = v
        if any(
            mp[source.mul(x, y)] != target.mul(mp[x], mp[y])
            for x in range(n)
            for y in range(n)
        ):
            continue
        hom = MonoidHom(source, target, tuple(mp), _is_atom_preserving(source, target, mp))
        if atom_preserving_only and not hom.atom_preserving:
            continue
        yield hom


def _is_atom_preserving(source: FiniteMonoid, target: FiniteMonoid, mp: Sequence[int]) -> bool:
    tgt_atoms = atoms(target)
    return all(mp[a] in tgt_atoms for a in atoms(source))


def submonoid_closure(m: FiniteMonoid, generators: Iterable[int]) -> list[int]:
    """Sorted element indices of the submonoid generated by the given elements."""
    seen = {m.identity}
    frontier = [m.identity]
    gens = sorted(set(generators))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = m.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def restrict_to_submonoid(m: FiniteMonoid, elements: Sequence[int]) -> tuple[FiniteMonoid, MonoidHom]:
    """Restrict the table to a multiplicatively closed element set.

    Returns the restricted monoid and the inclusion hom.
    """
    order = list(elements)
    back = {x: i for i, x in enumerate(order)}
    if m.identity not in back:
        raise ValidationError("a submonoid must contain the identity")
    try:
        table = [[back[m.mul(x, y)] for y in order] for x in order]
    except KeyError:
        raise ValidationError("element set is not closed under the product") from None
    sub = new_monoid([m.names[x] for x in order], table, back[m.identity])
    return sub, new_hom(sub, m, tuple(order))
