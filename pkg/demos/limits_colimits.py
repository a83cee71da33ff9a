"""Walkthrough: equalizers, pullbacks, coequalizers, and pushouts.

Colimits of atomic monoids are computed exactly as for plain monoids;
limits are genuinely smaller, generated by agreeing atoms and units.
"""

from atomon import (
    canonical_to_terminal,
    coequalizer,
    equalizer,
    identity_hom,
    initial,
    new_hom,
    pullback,
    pushout_eq_bounded,
    pushout_presentation,
    reduce,
    terminal,
)
from atomon.fixtures import h2, one, zero
from atomon.serialize import word_to_text


def main():
    print(f"initial object: {initial().names}")
    print(f"terminal object: {terminal().names} (a*a = 0, 0 absorbing)")

    h = h2()
    print("\nEqualizer of id and the map swapping the two atoms of {1,a,b,0}:")
    e_monoid, e = equalizer(identity_hom(h), new_hom(h, h, (0, 2, 1, 3)))
    print(f"  E = {e_monoid.names}")
    print("  both maps also agree on 0, but 0 is not generated by agreeing")
    print("  atoms and units, so it stays out; the equalizer of plain")
    print("  monoids would have kept it.")

    print("\nEqualizer of id and the map folding b onto a:")
    e_monoid, e = equalizer(identity_hom(h), new_hom(h, h, (0, 1, 1, 3)))
    print(f"  E = {e_monoid.names} (a copy of the terminal monoid)")

    print("\nPullback of {1,a,b,0} -> terminal against the identity:")
    p, p1, p2 = pullback(canonical_to_terminal(h), identity_hom(terminal()))
    print(f"  P = {p.names}")

    print("\nCoequalizer of two maps terminal -> {1,a,b,0} hitting a and b:")
    f = new_hom(one(), h, (0, 1, 3))
    g = new_hom(one(), h, (0, 2, 3))
    q_monoid, q = coequalizer(f, g)
    print(f"  Q = {q_monoid.names}, projection {list(q.map)}")
    print("  merging the atoms a and b collapses the monoid back to the")
    print("  terminal one; the projection preserves element classes.")

    print("\nPushouts are presented, not materialized: the underlying")
    print("coproduct is infinite whenever both legs are non-trivial.")
    pres = pushout_presentation(identity_hom(one()), identity_hom(one()))
    fam = pres.family
    for lhs, rhs in pres.relation_pairs:
        print(
            f"  relation: {word_to_text(fam, reduce(fam, lhs))}"
            f" = {word_to_text(fam, reduce(fam, rhs))}"
        )
    w1 = reduce(fam, [(0, 1)])
    w2 = reduce(fam, [(1, 1)])
    print(f"  (a@0) vs (a@1), depth 1: {pushout_eq_bounded(pres, w1, w2, 1).value}")

    free = pushout_presentation(
        new_hom(zero(), one(), (0,)), new_hom(zero(), one(), (0,))
    )
    v1 = reduce(free.family, [(0, 1)])
    v2 = reduce(free.family, [(1, 1)])
    print("  over the trivial source the pushout is the free product, so the")
    print(f"  same words stay apart: depth 5 gives '{pushout_eq_bounded(free, v1, v2, 5).value}'")


if __name__ == "__main__":
    main()
