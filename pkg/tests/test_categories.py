"""Tests for finite categories: laws, constructions and catalog."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.categories.catalog import (
    arrow,
    chain,
    cyclic_group,
    discrete,
    disjoint_union,
    idempotent_monoid,
    inflate,
    preorder,
    terminal,
    walking_iso,
)
from src.categories.constructions import (
    build_category,
    compose_functors,
    identity_functor,
    identity_nat,
    inverse_nat,
    pullback_category,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from src.categories.laws import (
    check_category_laws,
    check_functor_laws,
    check_naturality,
    functor_props,
    is_essentially_surjective,
    is_natural_iso,
    structure_errors,
)
from src.models.category import FinFunctor, NatTrans
from src.utils.generators import random_adjoint_equivalence
from src.utils.validators import EquivalenceError, MismatchError, StructureError


def left_zero_monoid():
    """One object, a and b with g . f = g for non-identities."""
    return build_category(
        ["*"],
        {"a": ("*", "*"), "b": ("*", "*")},
        {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"},
    )


def constant(C, D, x):
    return FinFunctor(C, D, {c: x for c in C.objects}, {m: D.id(x) for m in C.morphisms})


CATALOG = [
    terminal(),
    discrete(3),
    arrow(),
    walking_iso(),
    cyclic_group(3),
    idempotent_monoid(),
    chain(3),
    left_zero_monoid(),
    inflate(arrow(), {"a": 2}),
    inflate(cyclic_group(2), {"*": 2}),
    disjoint_union(terminal(), cyclic_group(2)),
]


class TestCategoryLaws:
    """Tests for check_category_laws."""

    @pytest.mark.parametrize("C", CATALOG)
    def test_catalog_is_lawful(self, C):
        """Test that every catalog category passes the law suite."""
        report = check_category_laws(C)

        assert report.verdict, report.witnesses
        assert [p.name for p in report.parts] == ["identity", "associativity"]

    def test_non_associative_table(self):
        """Test that a non-associative table is caught with a triple."""
        C = build_category(
            ["*"],
            {"a": ("*", "*"), "b": ("*", "*")},
            {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"},
        )
        report = check_category_laws(C)

        assert report.part("identity").verdict
        assert not report.part("associativity")
        assert ("b", "a", "a") in report.part("associativity").witnesses

    def test_missing_composite(self):
        """Test that a partial table is a structural error unless allowed."""
        C = build_category(["x", "y", "z"], {"f": ("x", "y"), "g": ("y", "z")}, {})

        with pytest.raises(StructureError):
            check_category_laws(C)
        assert check_category_laws(C, allow_partial=True).verdict

    def test_mistargeted_composite(self):
        """Test that a composite with the wrong target is a structural error."""
        C = build_category(
            ["x", "y", "z"], {"f": ("x", "y"), "g": ("y", "z")}, {("g", "f"): "f"}
        )

        assert structure_errors(C, allow_partial=True)
        with pytest.raises(StructureError):
            check_category_laws(C)

    def test_contradicting_identity_law(self):
        """Test that an entry overriding an identity law is rejected."""
        with pytest.raises(StructureError):
            build_category(["a", "b"], {"f": ("a", "b")}, {("f", "id_a"): "id_b"})

    def test_identities_are_generated(self):
        """Test that identities are prepended and named id_<object>."""
        C = arrow()

        assert C.morphisms == ("id_a", "id_b", "f")
        assert C.compose("id_b", "f", "id_a") == "f"


class TestFunctorLaws:
    """Tests for functor and natural transformation checkers."""

    def test_identity_functor(self):
        """Test that identity functors are lawful."""
        assert check_functor_laws(identity_functor(walking_iso())).verdict

    def test_constant_functor(self):
        """Test that the constant functor to the terminal category is lawful."""
        assert check_functor_laws(constant(chain(3), terminal(), "*")).verdict

    def test_broken_composition(self):
        """Test that a morphism map breaking one composite names that pair."""
        M, Z2 = idempotent_monoid(), cyclic_group(2)
        F = FinFunctor(M, Z2, {"*": "*"}, {"id_*": "id_*", "e": "g1"})
        report = check_functor_laws(F)

        assert report.part("typing").verdict
        assert report.part("identities").verdict
        assert report.part("composition").witnesses == (("e", "e"),)

    def test_identity_nat(self):
        """Test that identity transformations are natural isomorphisms."""
        assert is_natural_iso(identity_nat(identity_functor(arrow()))).verdict

    def test_unnatural_component(self):
        """Test that a component failing one square is reported."""
        I = identity_functor(left_zero_monoid())
        report = check_naturality(NatTrans(I, I, {"*": "a"}))

        assert report.part("naturality").witnesses == ("b",)

    def test_natural_but_not_invertible(self):
        """Test that a natural non-iso fails only invertibility."""
        I = identity_functor(idempotent_monoid())
        report = is_natural_iso(NatTrans(I, I, {"*": "e"}))

        assert report.part("naturality").verdict
        assert report.part("invertible").witnesses == ("*",)

    def test_nat_between_non_parallel_functors(self):
        """Test that source and target must be parallel."""
        F = identity_functor(terminal())
        G = identity_functor(arrow())
        with pytest.raises(MismatchError):
            check_naturality(NatTrans(F, G, {"*": "id_*"}))


class TestFunctorProps:
    """Tests for functor_props."""

    def test_identity(self):
        """Test that the identity is surjective on objects, full and faithful."""
        report = functor_props(identity_functor(cyclic_group(3)))

        assert report.verdict
        assert [p.name for p in report.parts] == ["surjective_on_objects", "full", "faithful"]

    def test_inclusion_misses_object(self):
        """Test that including one object of the walking iso misses the other."""
        point = build_category(["a0"], {}, {})
        F = FinFunctor(point, walking_iso(), {"a0": "a0"}, {"id_a0": "id_a0"})
        report = functor_props(F)

        assert report.part("full").verdict
        assert report.part("faithful").verdict
        assert report.part("surjective_on_objects").witnesses == ("a1",)

    def test_collapse_of_group_not_faithful(self):
        """Test that collapsing Z/2 identifies two parallel morphisms."""
        report = functor_props(constant(cyclic_group(2), terminal(), "*"))

        assert report.part("surjective_on_objects").verdict
        assert report.part("full").verdict
        assert report.part("faithful").witnesses == (("id_*", "g1"),)

    def test_collapse_of_walking_iso_is_faithful(self):
        """Test that every hom-set of the walking iso is a singleton."""
        F = constant(walking_iso(), terminal(), "*")

        assert functor_props(F).verdict
        assert is_essentially_surjective(F)


class TestConstructions:
    """Tests for functor and transformation constructions."""

    def test_compose_with_identity(self):
        """Test that identity functors are neutral."""
        F = constant(arrow(), terminal(), "*")

        assert compose_functors(F, identity_functor(arrow())) == F
        assert compose_functors(identity_functor(terminal()), F) == F

    def test_compose_mismatch(self):
        """Test that functor composition checks the middle category."""
        with pytest.raises(MismatchError):
            compose_functors(identity_functor(arrow()), identity_functor(terminal()))

    def test_inverse_nat(self):
        """Test that a natural iso composed with its inverse is the identity."""
        I = identity_functor(cyclic_group(3))
        t = NatTrans(I, I, {"*": "g1"})
        back = inverse_nat(t)

        assert back.at("*") == "g2"
        assert vertical_compose(back, t).components == {"*": "id_*"}

    def test_inverse_of_non_iso(self):
        """Test that inverting a non-iso component fails."""
        I = identity_functor(idempotent_monoid())
        with pytest.raises(EquivalenceError):
            inverse_nat(NatTrans(I, I, {"*": "e"}))

    def test_whiskering(self):
        """Test whiskered components H(t_x) and t_{K(x)}."""
        C = cyclic_group(3)
        I = identity_functor(C)
        t = NatTrans(I, I, {"*": "g1"})
        negate = FinFunctor(C, C, {"*": "*"}, {"id_*": "id_*", "g1": "g2", "g2": "g1"})
        K = constant(arrow(), C, "*")

        left = whisker_left(negate, t)
        right = whisker_right(t, K)

        assert left.components == {"*": "g2"}
        assert left.source == negate
        assert right.components == {"a": "g1", "b": "g1"}
        assert right.source == K
        assert check_naturality(right).verdict

    def test_whiskering_preserves_vertical_composition(self):
        """Test that H(s . t) = H s . H t."""
        C = cyclic_group(3)
        I = identity_functor(C)
        t = NatTrans(I, I, {"*": "g1"})
        negate = FinFunctor(C, C, {"*": "*"}, {"id_*": "id_*", "g1": "g2", "g2": "g1"})

        whole = whisker_left(negate, vertical_compose(t, t))
        pieces = vertical_compose(whisker_left(negate, t), whisker_left(negate, t))

        assert whole.components == pieces.components == {"*": "g1"}

    def test_vertical_compose_needs_composites(self):
        """Test that a missing composite in a partial table is a structure error."""
        P = build_category(["*"], {"a": ("*", "*")}, {})
        I = identity_functor(P)
        t = NatTrans(I, I, {"*": "a"})

        with pytest.raises(StructureError):
            vertical_compose(t, t)

    def test_pullback_over_terminal_is_product(self):
        """Test that the pullback over the terminal category is the product."""
        P, left, right = pullback_category(
            constant(arrow(), terminal(), "*"), constant(arrow(), terminal(), "*")
        )

        assert len(P.objects) == 4
        assert len(P.morphisms) == 9
        assert check_category_laws(P).verdict
        assert check_functor_laws(left).verdict
        assert check_functor_laws(right).verdict

    def test_pullback_along_identity(self):
        """Test that pulling back along the identity keeps the category."""
        F = constant(walking_iso(), terminal(), "*")
        P, left, _ = pullback_category(F, identity_functor(terminal()))

        assert len(P.objects) == len(F.domain.objects)
        assert functor_props(left).verdict

    def test_pullback_mismatch(self):
        """Test that the cospan functors must share a codomain."""
        with pytest.raises(MismatchError):
            pullback_category(identity_functor(arrow()), identity_functor(terminal()))

    @settings(max_examples=30, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_pullbacks_are_lawful(self, rng):
        """Test category and functor laws of pullbacks of equivalence functors."""
        e = random_adjoint_equivalence(rng)
        P, left, right = pullback_category(e.S, compose_functors(e.S, e.T))

        assert check_category_laws(P).verdict
        assert check_functor_laws(left).verdict
        assert check_functor_laws(right).verdict


class TestCatalog:
    """Tests for catalog categories."""

    def test_preorder_closure(self):
        """Test that the preorder adds transitive morphisms."""
        C = preorder("abc", [("a", "b"), ("b", "c")])

        assert ("a", "c") in C.morphisms
        assert len(C.morphisms) == 6
        assert C.id("a") == ("a", "a")

    def test_cyclic_group_inverses(self):
        """Test that every element of Z/3 is invertible."""
        C = cyclic_group(3)

        assert C.inverse("g1") == "g2"
        assert C.compose("g1", "g1", "g1") == "id_*"

    def test_inflate_makes_isomorphic_copies(self):
        """Test that copies of an object are isomorphic."""
        C = inflate(terminal(), {"*": 2})

        assert C.objects == (("*", 0), ("*", 1))
        assert C.is_iso(("id_*", 0, 1))
