"""Tests for the bounded free-category monad, its 1-algebras and nerves."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebras.one_alg import (
    OneAlgebra,
    algebra_map_to_functor,
    check_algebra_laws,
    denerve,
    is_algebra_map,
    nerve,
    nerve_span,
    span_equivalence_wk1,
    underlying_map,
)
from src.algebras.paths import (
    Path,
    check_monad_laws,
    flatten,
    free_category_bounded,
    is_path,
    iter_nestings,
    iter_paths,
    unit_path,
)
from src.categories.catalog import arrow, cyclic_group, idempotent_monoid, terminal, walking_iso
from src.categories.constructions import build_category, identity_functor
from src.categories.equivalence import identity_equivalence, pseudo_inverse
from src.categories.laws import check_category_laws, functor_props
from src.categories.search import iter_functors
from src.fusion.fusion import fuse_to_span, span_profile
from src.globular.core import (
    is_faithful_on,
    is_full_on,
    is_surjective_on,
    terminal_globular,
    validate_globular,
)
from src.models.category import FinFunctor
from src.models.span import CategorySpan
from src.utils.generators import random_globular
from src.utils.validators import DomainError, MismatchError


def line_graph():
    """x --f--> y --g--> z."""
    return validate_globular(
        1, {0: ["x", "y", "z"], 1: ["f", "g"]}, {1: {"f": "x", "g": "y"}}, {1: {"f": "y", "g": "z"}}
    )


def loop_graph():
    """One 0-cell with a loop l."""
    return validate_globular(1, {0: ["x"], 1: ["l"]}, {1: {"l": "x"}}, {1: {"l": "x"}})


def collapse(C):
    D = terminal()
    return FinFunctor(C, D, {x: "*" for x in C.objects}, {m: "id_*" for m in C.morphisms})


def collapse_span(C):
    return CategorySpan(C, identity_functor(C), collapse(C))


def include_point():
    """The point as a0 in the walking iso."""
    return FinFunctor(terminal(), walking_iso(), {"*": "a0"}, {"id_*": "id_a0"})


class TestPaths:
    """Tests for paths and the monad operations."""

    def test_paths_of_line(self):
        """Test path enumeration by start, then length."""
        paths = list(iter_paths(line_graph(), 4))

        assert len(paths) == 6
        assert paths[:3] == [Path("x", ()), Path("x", ("f",)), Path("x", ("f", "g"))]

    def test_is_path(self):
        """Test consecutive composability."""
        G = line_graph()

        assert is_path(G, Path("x", ("f", "g")))
        assert not is_path(G, Path("x", ("g",)))
        assert not is_path(G, Path("w", ()))

    def test_flatten_and_unit(self):
        """Test that flatten concatenates and unit wraps one edge."""
        G = line_graph()
        nested = Path("x", (Path("x", ("f",)), Path("y", ()), Path("y", ("g",))))

        assert flatten(nested) == Path("x", ("f", "g"))
        assert unit_path(G, "g") == Path("y", ("g",))

    def test_nestings_of_loop(self):
        """Test the number of paths of paths over a loop with L = 2."""
        assert len(list(iter_nestings(loop_graph(), 2))) == 10

    def test_paths_need_a_graph(self):
        """Test that paths live in 1-globular sets only."""
        with pytest.raises(DomainError):
            list(iter_paths(terminal_globular(2), 2))

    def test_monad_laws_on_loop(self):
        """Test the monad laws on a cyclic graph."""
        report = check_monad_laws(loop_graph(), 3)

        assert report.verdict
        assert [p.name for p in report.parts] == ["left_unit", "right_unit", "associativity"]

    @settings(max_examples=50, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_monad_laws_random(self, rng):
        """Test the monad laws on small random graphs."""
        G = random_globular(1, rng, max_cells=3)

        assert check_monad_laws(G, 3).verdict


class TestFreeCategory:
    """Tests for free_category_bounded."""

    def test_acyclic_graph_is_total(self):
        """Test that a long enough bound gives the genuine free category."""
        C, truncated = free_category_bounded(line_graph(), 2)

        assert not truncated
        assert len(C.morphisms) == 6
        assert C.id("y") == Path("y", ())
        assert check_category_laws(C).verdict

    def test_loop_is_truncated(self):
        """Test that a cyclic graph is cut at the bound."""
        C, truncated = free_category_bounded(loop_graph(), 2)

        assert truncated
        assert len(C.morphisms) == 3
        assert check_category_laws(C, allow_partial=True).verdict

    def test_bound_must_be_positive(self):
        """Test that L = 0 is refused."""
        with pytest.raises(DomainError):
            free_category_bounded(line_graph(), 0)


class TestOneAlgebras:
    """Tests for algebras and nerves."""

    @pytest.mark.parametrize("C", [arrow(), walking_iso(), cyclic_group(3), idempotent_monoid()])
    def test_nerve_is_an_algebra(self, C):
        """Test that the nerve of a category satisfies the algebra laws."""
        assert check_algebra_laws(nerve(C), 3).verdict

    def test_nerve_round_trip(self):
        """Test that reading a category off its nerve gives it back."""
        C = walking_iso()

        assert denerve(nerve(C)) == C

    def test_non_associative_table(self):
        """Test that a non-associative table fails multiplication only."""
        C = build_category(
            ["*"],
            {"a": ("*", "*"), "b": ("*", "*")},
            {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"},
        )
        report = check_algebra_laws(nerve(C), 3)

        assert report.part("typing").verdict
        assert report.part("unit").verdict
        assert not report.part("multiplication")

    def test_constant_evaluator_breaks_unit(self):
        """Test that an evaluator ignoring its path fails the unit law."""
        base = nerve(cyclic_group(2))
        alg = OneAlgebra(base.carrier, base.units, base.products, evaluator=lambda p: "id_*")
        report = check_algebra_laws(alg, 2)

        assert report.part("typing").verdict
        assert report.part("unit").witnesses == ("g1",)
        assert report.part("multiplication").verdict

    def test_missing_units_break_typing(self):
        """Test that an undefined empty path is a typing failure."""
        base = nerve(arrow())
        alg = OneAlgebra(base.carrier, {}, base.products)
        report = check_algebra_laws(alg, 2)

        assert Path("a", ()) in report.part("typing").witnesses


class TestAlgebraMaps:
    """Tests for algebra maps and the comparison with functors."""

    def test_functor_gives_algebra_map(self):
        """Test that the underlying map of a functor is an algebra map."""
        F = collapse(walking_iso())

        assert is_algebra_map(underlying_map(F), nerve(F.domain), nerve(F.codomain), 3).verdict

    def test_non_functor_is_not_algebra_map(self):
        """Test that a map breaking composition is not an algebra map."""
        M, Z2 = idempotent_monoid(), cyclic_group(2)
        F = FinFunctor(M, Z2, {"*": "*"}, {"id_*": "id_*", "e": "g1"})
        report = is_algebra_map(underlying_map(F), nerve(M), nerve(Z2), 2)

        assert Path("*", ("e", "e")) in report.witnesses

    def test_carrier_mismatch(self):
        """Test that the map must run between the carriers."""
        F = collapse(arrow())
        with pytest.raises(MismatchError):
            is_algebra_map(underlying_map(F), nerve(F.codomain), nerve(F.domain))

    def test_algebra_map_back_to_functor(self):
        """Test that an algebra map between nerves reads back as the functor."""
        F = collapse(walking_iso())
        source, target = nerve(F.domain), nerve(F.codomain)

        assert algebra_map_to_functor(underlying_map(F), source, target) == F


class TestNerveSpans:
    """Spans of categories against span equivalences of algebras."""

    def test_fusion_span_is_wk1_equivalence(self):
        """Test that the nerve of the fusion span is a span equivalence of algebras."""
        e = pseudo_inverse(collapse(walking_iso()))
        carrier_span, source, target, apex = nerve_span(fuse_to_span(e))
        report = span_equivalence_wk1(carrier_span, source, target, apex, 3)

        assert report.verdict
        assert [p.name for p in report.parts] == [
            "left_algebra_map",
            "right_algebra_map",
            "left_profile",
            "right_profile",
        ]

    def test_unfaithful_leg(self):
        """Test that a functor leg that is not faithful fails the profile only."""
        C = cyclic_group(2)
        span = CategorySpan(C, identity_functor(C), collapse(C))
        carrier_span, source, target, apex = nerve_span(span)
        report = span_equivalence_wk1(carrier_span, source, target, apex, 2)

        assert report.part("right_algebra_map").verdict
        assert report.part("left_profile").verdict
        assert not report.part("right_profile")

    @pytest.mark.parametrize(
        "span",
        [
            lambda: fuse_to_span(pseudo_inverse(collapse(walking_iso()))),
            lambda: fuse_to_span(identity_equivalence(cyclic_group(2))),
            lambda: collapse_span(cyclic_group(2)),
            lambda: collapse_span(arrow()),
            lambda: CategorySpan(terminal(), identity_functor(terminal()), include_point()),
        ],
        ids=["iso_to_point", "identity_z2", "collapse_z2", "collapse_arrow", "point_in_iso"],
    )
    def test_verdict_matches_category_span(self, span):
        """Test that the nerve span is an equivalence exactly when the category span is."""
        span = span()
        carrier_span, source, target, apex = nerve_span(span)

        wk1 = span_equivalence_wk1(carrier_span, source, target, apex, 4)
        assert wk1.verdict == span_profile(span).verdict
        assert wk1.part("left_algebra_map").verdict
        assert wk1.part("right_algebra_map").verdict


class TestNervePreservesProperties:
    """The nerve preserves and reflects surjectivity on objects, fullness and faithfulness."""

    @pytest.mark.parametrize(
        "A, B",
        [
            (arrow(), walking_iso()),
            (walking_iso(), arrow()),
            (cyclic_group(2), idempotent_monoid()),
            (idempotent_monoid(), cyclic_group(2)),
            (cyclic_group(2), cyclic_group(2)),
            (terminal(), walking_iso()),
            (walking_iso(), terminal()),
        ],
    )
    def test_every_functor(self, A, B):
        """Test each functor A -> B against its carrier map."""
        functors = list(iter_functors(A, B))
        assert functors

        for F in functors:
            props = functor_props(F)
            f = underlying_map(F)
            assert props.part("surjective_on_objects").verdict == is_surjective_on(f, 0).verdict
            assert props.part("full").verdict == is_full_on(f, 1).verdict
            assert props.part("faithful").verdict == is_faithful_on(f, 1).verdict
