"""Tests for adjoint equivalences: promotion, pseudo-inverses and composition."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.categories.catalog import (
    arrow,
    cyclic_group,
    idempotent_monoid,
    terminal,
    walking_iso,
)
from src.categories.constructions import (
    build_category,
    compose_functors,
    identity_functor,
    identity_nat,
)
from src.categories.equivalence import (
    compose_equivalences,
    identity_equivalence,
    promote_to_adjoint_equivalence,
    pseudo_inverse,
    swap_equivalence,
)
from src.categories.laws import check_adjoint_equivalence, is_natural_iso
from src.models.category import AdjointEquivalence, FinFunctor, NatTrans
from src.utils.generators import random_adjoint_equivalence
from src.utils.validators import EquivalenceError, MismatchError


def collapse(C):
    D = terminal()
    return FinFunctor(C, D, {x: "*" for x in C.objects}, {m: "id_*" for m in C.morphisms})


def iso_to_point():
    """walking iso ~ 1 with S the collapse and T picking a0."""
    W, P = walking_iso(), terminal()
    S = collapse(W)
    T = FinFunctor(P, W, {"*": "a0"}, {"id_*": "id_a0"})
    eta = NatTrans(identity_functor(W), compose_functors(T, S), {"a0": "id_a0", "a1": "i_inv"})
    eps = NatTrans(compose_functors(S, T), identity_functor(P), {"*": "id_*"})
    return S, T, eta, eps


class TestPromote:
    """Tests for promote_to_adjoint_equivalence."""

    def test_adjoint_input_is_unchanged(self):
        """Test that an input satisfying the triangles keeps its counit."""
        S, T, eta, eps = iso_to_point()
        e = promote_to_adjoint_equivalence(S, T, eta, eps)

        assert e.eps.components == eps.components
        assert check_adjoint_equivalence(e).verdict

    def test_twisted_counit_is_rebuilt(self):
        """Test that a natural but twisted counit is replaced."""
        I = identity_functor(cyclic_group(2))
        twisted = NatTrans(compose_functors(I, I), I, {"*": "g1"})
        assert is_natural_iso(twisted).verdict

        e = promote_to_adjoint_equivalence(I, I, identity_nat(I), twisted)
        assert e.eps.components == {"*": "id_*"}
        assert check_adjoint_equivalence(e).verdict

    def test_non_invertible_unit(self):
        """Test that a non-invertible unit is rejected by name."""
        I = identity_functor(idempotent_monoid())
        eta = NatTrans(I, I, {"*": "e"})

        with pytest.raises(EquivalenceError) as exc:
            promote_to_adjoint_equivalence(I, I, eta, identity_nat(I))
        assert exc.value.prop == "natural_iso_eta"

    def test_identity_equivalence(self):
        """Test that the identity equivalence passes every suite."""
        report = check_adjoint_equivalence(identity_equivalence(arrow()))

        assert report.verdict
        assert report.part("triangle_S").verdict
        assert report.part("triangle_T").verdict

    def test_triangle_witness(self):
        """Test that a counit breaking the triangles is reported at the object."""
        I = identity_functor(cyclic_group(3))
        unit = NatTrans(I, I, {"*": "g1"})
        broken = AdjointEquivalence(I, I, unit, NatTrans(I, I, {"*": "g1"}))
        repaired = AdjointEquivalence(I, I, unit, NatTrans(I, I, {"*": "g2"}))

        report = check_adjoint_equivalence(broken)
        assert report.part("naturality_eps").verdict
        assert report.part("triangle_S").witnesses == ("*",)
        assert report.part("triangle_T").witnesses == ("*",)
        assert check_adjoint_equivalence(repaired).verdict


class TestPseudoInverse:
    """Tests for pseudo_inverse."""

    def test_identity(self):
        """Test that the pseudo-inverse of an identity is the identity."""
        C = arrow()
        e = pseudo_inverse(identity_functor(C))

        assert e.T == identity_functor(C)
        assert set(e.eta.components.values()) == {"id_a", "id_b"}
        assert set(e.eps.components.values()) == {"id_a", "id_b"}

    def test_section_on_objects(self):
        """Test that F(G(a)) = a exactly, G choosing the first preimage."""
        F = collapse(walking_iso())
        e = pseudo_inverse(F)

        assert e.T.obj("*") == "a0"
        assert all(F.obj(e.T.obj(a)) == a for a in F.codomain.objects)
        assert e.eta.at("a1") == "i_inv"

    def test_unfaithful_functor_rejected(self):
        """Test that a non-faithful functor is rejected by property name."""
        with pytest.raises(EquivalenceError) as exc:
            pseudo_inverse(collapse(cyclic_group(2)))
        assert exc.value.prop == "faithful"

    def test_non_surjective_rejected(self):
        """Test that missing an object is reported."""
        point = build_category(["a0"], {}, {})
        F = FinFunctor(point, walking_iso(), {"a0": "a0"}, {"id_a0": "id_a0"})

        with pytest.raises(EquivalenceError) as exc:
            pseudo_inverse(F)
        assert exc.value.prop == "surjective_on_objects"


class TestComposeEquivalences:
    """Tests for swap_equivalence and compose_equivalences."""

    def test_compose_with_identity(self):
        """Test that composing with the identity keeps the functors."""
        e = promote_to_adjoint_equivalence(*iso_to_point())
        composite = compose_equivalences(identity_equivalence(e.A), e)

        assert composite.S == e.S
        assert composite.T == e.T
        assert check_adjoint_equivalence(composite).verdict

    def test_compose_with_swap(self):
        """Test that e followed by its inverse is an auto-equivalence of A."""
        e = promote_to_adjoint_equivalence(*iso_to_point())
        auto = compose_equivalences(e, swap_equivalence(e))

        assert auto.A == e.A and auto.B == e.A
        assert is_natural_iso(auto.eta).verdict

    def test_middle_mismatch(self):
        """Test that the middle categories must agree."""
        with pytest.raises(MismatchError):
            compose_equivalences(identity_equivalence(arrow()), identity_equivalence(terminal()))

    @settings(max_examples=50, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_chains(self, rng):
        """Test that composing two random equivalences passes every suite."""
        e1 = random_adjoint_equivalence(rng)
        e2 = swap_equivalence(e1)

        assert check_adjoint_equivalence(e2).verdict
        composite = compose_equivalences(e1, e2)
        assert check_adjoint_equivalence(composite).verdict
