"""Walkthrough: finite monoids as multiplication tables.

Builds a few small monoids, classifies their elements, checks the
standard predicates, and constructs atom-preserving homomorphisms.
"""

from atomon import (
    atoms,
    canonical_to_terminal,
    check_property,
    classify,
    enumerate_homs,
    eval_word,
    extend_atom_map,
    new_hom,
    new_monoid,
    units,
)
from atomon.core import PROPERTIES
from atomon.fixtures import c2, h2, m31, one, sl2


def describe(name, m):
    print(f"\n{name}: {m.size} elements {m.names}")
    print("  units:", sorted(m.names[u] for u in units(m)))
    print("  atoms:", sorted(m.names[a] for a in atoms(m)))
    for prop in PROPERTIES:
        print(f"  {prop}: {check_property(m, prop)}")
    for x in range(m.size):
        print(f"  {m.names[x]} is a {classify(m, x).value}")


def main():
    print("The three-element monoid {1, a, 0} with a*a = 0 is atomic:")
    describe("one", one())

    print("\nA two-element group has no atoms at all (and is still atomic,")
    print("vacuously: there are no non-units to factor):")
    describe("c2", c2())

    print("\nThe semilattice {1, e} with e*e = e is NOT atomic: e is a")
    print("non-unit, but the only way to factor it is e = e*e, so it is")
    print("reducible without being a product of atoms:")
    describe("sl2", sl2())

    print("\nThe monogenic monoid with g^4 = g^3:")
    describe("m31", m31())

    print("\nWords evaluate by table lookup; the empty word is the identity:")
    m = m31()
    word = (1, 1, 1, 1)
    print(f"  g*g*g*g evaluates to {m.names[eval_word(m, word)]} (g^4 = g^3)")

    print("\nAn abstract alphabet maps into atoms and extends to words:")
    target = h2()
    value = extend_atom_map(target, {"x": 1, "y": 2}, ("x", "y"))
    print(f"  x*y with x -> a, y -> b lands on {target.names[value]}")

    print("\nEvery atomic monoid has exactly one atom-preserving map into")
    print("the terminal monoid {1, a, 0}, sending units to 1, atoms to a,")
    print("and everything else to 0:")
    for name, m in (("h2", h2()), ("m31", m31())):
        hom = canonical_to_terminal(m)
        pairs = ", ".join(
            f"{m.names[x]} -> {hom.target.names[hom.map[x]]}" for x in range(m.size)
        )
        found = list(enumerate_homs(m, hom.target))
        print(f"  {name}: {pairs} (enumeration finds {len(found)} such map)")

    print("\nHomomorphism validation rejects non-multiplicative maps:")
    try:
        new_hom(c2(), one(), (0, 1))
    except Exception as exc:
        print(f"  sending the involution u to the atom a fails: {exc}")


if __name__ == "__main__":
    main()
