import itertools

import pytest

from atomon import (
    ElemClass,
    atoms,
    canonical_to_terminal,
    check_property,
    classify,
    compose,
    enumerate_homs,
    eval_word,
    extend_atom_map,
    identity_hom,
    is_atomon_mono,
    new_hom,
    new_monoid,
    units,
)
from atomon.core import terminal_monoid
from atomon.errors import (
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
from atomon.fixtures import c2, h2, m31, one, sl2, zero


def test_new_monoid_accepts_terminal_table():
    m = new_monoid(("1", "a", "0"), ((0, 1, 2), (1, 2, 2), (2, 2, 2)), 0)
    assert m.size == 3
    assert m.mul(1, 1) == 2


def test_new_monoid_trivial():
    m = new_monoid(("1",), ((0,),), 0)
    assert m.size == 1 and m.identity == 0


def test_new_monoid_rejects_non_associative():
    # (x*x)*x = y*x = x but x*(x*x) = x*y = 1
    with pytest.raises(NonAssociativeError):
        new_monoid(("1", "x", "y"), ((0, 1, 2), (1, 2, 0), (2, 1, 1)), 0)


def test_new_monoid_rejects_bad_tables():
    with pytest.raises(BadIdentityError):
        new_monoid(("1", "x"), ((0, 0), (1, 1)), 0)
    with pytest.raises(DuplicateNameError):
        new_monoid(("1", "1"), ((0, 1), (1, 0)), 0)
    with pytest.raises(ValidationError):
        new_monoid(("1", "x"), ((0, 1), (1, 7)), 0)


def test_units_examples():
    assert units(one()) == {0}
    assert units(c2()) == {0, 1}
    assert units(m31()) == {0}


def test_atoms_examples():
    assert atoms(one()) == {1}
    assert atoms(c2()) == frozenset()
    assert atoms(sl2()) == frozenset()  # e = e*e is reducible


def test_check_property_examples():
    assert check_property(one(), "atomic")
    assert not check_property(sl2(), "atomic")
    assert not check_property(one(), "unit_cancellative")  # 0*a = 0
    assert check_property(c2(), "cancellative")
    for m in (zero(), one(), c2(), h2(), m31(), sl2()):
        assert check_property(m, "dedekind_finite")
    with pytest.raises(ValidationError):
        check_property(one(), "commutative")


def test_classify_trichotomy_on_terminal():
    m = one()
    assert classify(m, 0) is ElemClass.UNIT
    assert classify(m, 1) is ElemClass.ATOM
    assert classify(m, 2) is ElemClass.REDUCIBLE


def test_new_hom_examples():
    m = one()
    ident = new_hom(m, m, (0, 1, 2))
    assert ident.atom_preserving
    fold = new_hom(h2(), m, (0, 1, 1, 2))  # a,b -> a; 0 -> 0
    assert fold.atom_preserving
    with pytest.raises(NotMultiplicativeError):
        new_hom(c2(), m, (0, 1))  # u*u = 1 but a*a = 0
    with pytest.raises(NotIdentityPreservingError):
        new_hom(m, m, (1, 1, 2))
    with pytest.raises(ValidationError):
        new_hom(m, m, (0, 1))


def test_is_atomon_mono():
    assert is_atomon_mono(identity_hom(h2()))
    assert not is_atomon_mono(new_hom(h2(), one(), (0, 1, 1, 2)))  # a, b collide
    assert is_atomon_mono(new_hom(zero(), one(), (0,)))
    not_preserving = new_hom(one(), one(), (0, 2, 2))
    assert not not_preserving.atom_preserving
    with pytest.raises(NotAtomPreservingError):
        is_atomon_mono(not_preserving)


def test_canonical_to_terminal():
    assert canonical_to_terminal(one()).map == (0, 1, 2)
    assert canonical_to_terminal(h2()).map == (0, 1, 1, 2)
    assert canonical_to_terminal(m31()).map == (0, 1, 2, 2)
    with pytest.raises(NotAtomicError):
        canonical_to_terminal(sl2())


def test_canonical_map_is_unique_up_to_size_six():
    target = terminal_monoid()
    for m in (zero(), one(), c2(), h2(), m31()):
        homs = list(enumerate_homs(m, target))
        assert homs == [canonical_to_terminal(m)]


def test_eval_word():
    m = one()
    assert eval_word(m, (1, 1)) == 2
    assert eval_word(m, ()) == m.identity
    assert eval_word(m31(), (1, 1, 1, 1)) == 3  # g^4 = g^3


def test_eval_word_concatenation():
    m = m31()
    words = list(itertools.product(range(m.size), repeat=2))
    for w1 in words:
        for w2 in words:
            assert eval_word(m, w1 + w2) == m.mul(eval_word(m, w1), eval_word(m, w2))


def test_extend_atom_map():
    m = one()
    assert extend_atom_map(m, {"x": 1}, ("x", "x")) == 2
    assert extend_atom_map(m, {"x": 1}, ()) == m.identity
    assert extend_atom_map(h2(), {"x": 1, "y": 2}, ("x", "y")) == 3
    with pytest.raises(ImageNotAtomError):
        extend_atom_map(m, {"x": 2}, ("x",))
    with pytest.raises(ValidationError):
        extend_atom_map(m, {"x": 1}, ("x", "z"))


def test_unit_conjugation_preserves_atoms():
    for m in (one(), c2(), h2(), m31()):
        ats, us = atoms(m), units(m)
        for u in us:
            for v in us:
                for x in range(m.size):
                    assert (x in ats) == (m.mul(m.mul(u, x), v) in ats)


def test_homs_preserve_element_classes():
    pairs = [(h2(), one()), (h2(), h2()), (m31(), one()), (c2(), c2())]
    for source, target in pairs:
        for f in enumerate_homs(source, target):
            for x in range(source.size):
                assert classify(source, x) is classify(target, f.map[x])


def test_compose_and_identity():
    f = new_hom(h2(), one(), (0, 1, 1, 2))
    assert compose(identity_hom(one()), f) == f
    assert compose(f, identity_hom(h2())) == f


def test_units_form_a_group():
    for m in (zero(), one(), c2(), h2(), m31(), sl2()):
        us = units(m)
        assert m.identity in us
        assert all(m.mul(u, v) in us for u in us for v in us)
        assert not (us & atoms(m))
