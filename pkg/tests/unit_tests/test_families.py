"""Unit tests for the extremal grid families."""

import pytest

from src.hexiso.bounds import check_inf_B, check_inf_E, check_inf_N
from src.hexiso.families import grid_family, grid_with_halo, lemma1_report
from src.hexiso.perimeter import boundary_set, cut_edges, neighbor_set


class TestLemma1Report:
    @pytest.mark.parametrize("r", range(1, 11))
    def test_counts(self, r):
        """|V(G_r)| = 6r^2, |N| = |E| = 6r"""
        report = lemma1_report(r)
        assert (report.v, report.n, report.e) == (6 * r * r, 6 * r, 6 * r)
        assert report.ok

    def test_serializes(self):
        assert lemma1_report(3).to_dict() == {
            "radius": 3,
            "v": 54,
            "n": 18,
            "e": 18,
            "expected_v": 54,
            "expected_n": 18,
            "expected_e": 18,
            "ok": True,
        }

    @pytest.mark.slow
    def test_large_radii(self):
        for r in range(11, 201):
            assert lemma1_report(r).ok


class TestTightFamilies:
    @pytest.mark.parametrize("r", range(1, 51))
    def test_grid_is_tight_for_neighbours_and_edges(self, r):
        W = grid_family(r)
        assert check_inf_N(len(W), len(neighbor_set(W))).tight
        assert check_inf_E(len(W), len(cut_edges(W))).tight

    @pytest.mark.parametrize("r", range(1, 51))
    def test_halo_is_tight_for_boundary(self, r):
        """|W| = 6r^2 + 6r and |B| = 6r"""
        W = grid_with_halo(r)
        assert len(W) == 6 * r * r + 6 * r
        assert len(boundary_set(W)) == 6 * r
        assert check_inf_B(len(W), len(boundary_set(W))).tight
