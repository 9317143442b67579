"""Tests for pullbacks of globular sets and property transfer."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.globular.core import (
    compose_maps,
    empty_map,
    identity_map,
    is_isomorphism,
    terminal_globular,
    unique_map_to_terminal,
    validate_globular,
    validate_map,
)
from src.globular.limits import (
    check_transfer,
    mediating_map,
    pullback_globular,
    swap_isomorphism,
    universal_property_oracle,
)
from src.utils.generators import random_cone, random_cospan
from src.utils.validators import ConeError, MismatchError


def points(*names):
    return validate_globular(0, {0: list(names)})


class TestPullback:
    """Tests for pullback_globular."""

    def test_pairs_in_order(self):
        """Test that apex cells are matching pairs in X-order then Y-order."""
        S = points("s", "t")
        f = validate_map(points("a", "b"), S, {0: {"a": "s", "b": "t"}})
        g = validate_map(points("c", "d", "e"), S, {0: {"c": "s", "d": "s", "e": "t"}})

        pb = pullback_globular(f, g)
        assert pb.apex.cells[0] == (("a", "c"), ("a", "d"), ("b", "e"))
        assert pb.left_leg.components[0][("b", "e")] == "b"
        assert pb.right_leg.components[0][("a", "d")] == "d"

    def test_over_terminal_is_product(self):
        """Test that the pullback over the terminal set is the product."""
        X = validate_globular(1, {0: ["a", "b"], 1: ["f"]}, {1: {"f": "a"}}, {1: {"f": "b"}})
        loops = {1: {"l": "x", "m": "x"}}
        Y = validate_globular(1, {0: ["x"], 1: ["l", "m"]}, loops, loops)
        pb = pullback_globular(unique_map_to_terminal(X), unique_map_to_terminal(Y))

        assert pb.apex.size(0) == 2
        assert pb.apex.size(1) == 2
        assert pb.apex.src[1][("f", "l")] == ("a", "x")

    def test_identity_leg(self):
        """Test that pulling back along an identity returns an isomorphic apex."""
        f = unique_map_to_terminal(points("a", "b"))
        pb = pullback_globular(f, identity_map(f.codomain))

        assert is_isomorphism(pb.left_leg)

    def test_codomain_mismatch(self):
        """Test that the legs must share a codomain."""
        f = identity_map(points("a"))
        g = identity_map(points("b"))
        with pytest.raises(MismatchError):
            pullback_globular(f, g)

    def test_swap_is_iso(self):
        """Test that swapping pair coordinates is an isomorphism."""
        S = points("s")
        f = unique_map_to_terminal(points("a", "b"), "s")
        g = unique_map_to_terminal(points("c"), "s")
        assert f.codomain == S

        swap = swap_isomorphism(pullback_globular(f, g), pullback_globular(g, f))
        assert swap.components[0][("b", "c")] == ("c", "b")

    @settings(max_examples=100, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_swap_on_random_cospans(self, rng):
        """Test that the swap is an isomorphism exchanging the two legs."""
        f, g = random_cospan(rng, max_dim=2, max_cells=3)
        pb_fg, pb_gf = pullback_globular(f, g), pullback_globular(g, f)

        swap = swap_isomorphism(pb_fg, pb_gf)
        assert is_isomorphism(swap)
        assert compose_maps(pb_gf.left_leg, swap) == pb_fg.right_leg
        assert compose_maps(pb_gf.right_leg, swap) == pb_fg.left_leg


class TestMediatingMap:
    """Tests for the universal property."""

    def test_non_commuting_cone(self):
        """Test that a cone with f.p != g.q is rejected."""
        S = points("s", "t")
        f = validate_map(points("a"), S, {0: {"a": "s"}})
        g = validate_map(points("b"), S, {0: {"b": "t"}})
        pb = pullback_globular(f, g)
        Z = points("z")
        p = validate_map(Z, f.domain, {0: {"z": "a"}})
        q = validate_map(Z, g.domain, {0: {"z": "b"}})

        with pytest.raises(ConeError) as exc:
            mediating_map(pb, Z, p, q)
        assert exc.value.cell == "z"

    def test_cone_from_wrong_object(self):
        """Test that cone legs must start at Z."""
        f = unique_map_to_terminal(points("a"))
        pb = pullback_globular(f, f)
        with pytest.raises(MismatchError):
            mediating_map(pb, points("z"), identity_map(points("a")), identity_map(points("a")))

    @settings(max_examples=60, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_unique_mediating_map(self, rng):
        """Test that the mediating map exists and is the only one."""
        f, g = random_cospan(rng, max_dim=2, max_cells=3)
        pb = pullback_globular(f, g)
        Z, p, q = random_cone(pb, rng, max_cells=2)

        h = mediating_map(pb, Z, p, q)
        assert compose_maps(pb.left_leg, h) == p
        assert compose_maps(pb.right_leg, h) == q
        assert universal_property_oracle(pb, Z, p, q) == [h]

    @settings(max_examples=60, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_pullback_cone_mediates_identity(self, rng):
        """Test that the cone (P, i, j) itself factors through the identity."""
        pb = pullback_globular(*random_cospan(rng, max_dim=2, max_cells=3))

        assert mediating_map(pb, pb.apex, pb.left_leg, pb.right_leg) == identity_map(pb.apex)

    def test_empty_cone(self):
        """Test that the empty cone factors through the empty map."""
        f = unique_map_to_terminal(points("a", "b"), "s")
        g = unique_map_to_terminal(points("c"), "s")
        pb = pullback_globular(f, g)
        p, q = empty_map(f.domain), empty_map(g.domain)

        h = mediating_map(pb, p.domain, p, q)
        assert h == empty_map(pb.apex)
        assert universal_property_oracle(pb, p.domain, p, q) == [h]

    def test_random_cones_include_empty(self):
        """Test that the cone generator draws the empty cone."""
        f = unique_map_to_terminal(points("a", "b"), "s")
        pb = pullback_globular(f, f)
        cones = [random_cone(pb, random.Random(seed)) for seed in range(100)]

        assert any(p == empty_map(f.domain) for _, p, _ in cones)


class TestTransfer:
    """Tests for property transfer along pullbacks."""

    def test_transfer_report_lines(self):
        """Test the report format of a transfer check."""
        f = unique_map_to_terminal(validate_globular(1, {0: ["a"], 1: []}))
        g = identity_map(terminal_globular(1))

        report = check_transfer(f, g)
        assert report.verdict
        lines = report.to_lines()
        assert lines[0].startswith("surjective_0: f=true j=true")
        assert lines[1].startswith("full_1: f=false")
        assert lines[-1] == "transfer: true"

    @pytest.mark.suite
    @settings(max_examples=500, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_cospans(self, rng):
        """Test that surjectivity, fullness and faithfulness pull back."""
        f, g = random_cospan(rng)
        report = check_transfer(f, g)

        assert report.verdict, report.violations
        i, j = report.pullback.left_leg, report.pullback.right_leg
        assert compose_maps(f, i) == compose_maps(g, j)
