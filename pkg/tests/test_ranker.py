import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from summarylens.errors import EmptyGraph, EmptySentenceList
from summarylens.ranker import (
    RankConfig,
    build_similarity_graph,
    frequency_scores,
    select_top_k,
    textrank,
)

from oracle import frequency_scores_by_fractions, pagerank_by_linear_solve

# Tight iteration budget so the iterate is much closer to the fixed point
# than the tolerances being asserted.
TIGHT = RankConfig(tolerance=1e-12, max_iterations=2000)


def graphs(max_n=6):
    """Random symmetric nonnegative graphs with zero diagonal, n in [1, max_n]."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        entries = draw(
            st.lists(
                st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            )
        )
        graph = np.zeros((n, n))
        it = iter(entries)
        for i in range(n):
            for j in range(i + 1, n):
                graph[i, j] = graph[j, i] = next(it)
        return graph

    return build()


class TestRankConfig:
    def test_defaults(self):
        config = RankConfig()
        assert config.damping == 0.85
        assert config.tolerance == 1e-6
        assert config.max_iterations == 100

    @pytest.mark.parametrize("damping", [0.0, 1.0, -0.1, 1.5])
    def test_damping_strictly_inside_unit_interval(self, damping):
        with pytest.raises(ValueError):
            RankConfig(damping=damping)


class TestBuildSimilarityGraph:
    def test_empty(self):
        graph = build_similarity_graph([])
        assert graph.shape == (0, 0)

    def test_identical_nonzero_vectors(self):
        v = np.array([1.0, 2.0])
        graph = build_similarity_graph([v, v])
        assert np.allclose(graph, [[0.0, 1.0], [1.0, 0.0]])

    def test_orthogonal_vectors(self):
        graph = build_similarity_graph([np.array([1.0, 0.0]), np.array([0.0, 1.0])])
        assert np.array_equal(graph, np.zeros((2, 2)))

    def test_negative_cosine_clamped(self):
        graph = build_similarity_graph([np.array([1.0, 0.0]), np.array([-1.0, 0.0])])
        assert np.array_equal(graph, np.zeros((2, 2)))

    def test_zero_vector_is_unconnected(self):
        vectors = [np.zeros(3), np.array([1.0, 1.0, 0.0]), np.array([1.0, 0.9, 0.0])]
        graph = build_similarity_graph(vectors)
        assert graph[0].sum() == 0.0
        assert graph[:, 0].sum() == 0.0
        assert graph[1, 2] > 0.9

    def test_symmetric_zero_diagonal_nonnegative(self):
        rng = np.random.default_rng(3)
        vectors = [rng.normal(size=4) for _ in range(7)]
        graph = build_similarity_graph(vectors)
        assert np.array_equal(graph, graph.T)
        assert np.array_equal(np.diag(graph), np.zeros(7))
        assert (graph >= 0).all()


class TestTextrank:
    def test_empty_graph(self):
        with pytest.raises(EmptyGraph):
            textrank(np.zeros((0, 0)))

    def test_single_node(self):
        result = textrank(np.zeros((1, 1)))
        assert result.converged
        assert np.array_equal(result.scores, [1.0])

    def test_uniform_weights_give_uniform_scores(self):
        graph = np.full((3, 3), 0.5)
        np.fill_diagonal(graph, 0.0)
        result = textrank(graph)
        assert np.allclose(result.scores, 1 / 3, atol=1e-9)

    def test_three_node_example_matches_linear_solve(self):
        graph = np.array([[0.0, 0.8, 0.2], [0.8, 0.0, 0.4], [0.2, 0.4, 0.0]])
        # frozen from the independent linear-system oracle (damping 0.85)
        expected = [0.3522688981242278, 0.4191003032685611, 0.22863079860721103]
        result = textrank(graph, TIGHT)
        assert result.converged
        assert np.allclose(result.scores, expected, atol=1e-6)
        assert np.allclose(result.scores, pagerank_by_linear_solve(graph), atol=1e-6)

    def test_all_dangling_graph_is_uniform(self):
        result = textrank(np.zeros((4, 4)))
        assert result.converged
        assert np.allclose(result.scores, 0.25, atol=1e-12)

    def test_did_not_converge_still_returns_scores(self):
        graph = np.array([[0.0, 0.8, 0.2], [0.8, 0.0, 0.4], [0.2, 0.4, 0.0]])
        result = textrank(graph, RankConfig(tolerance=1e-12, max_iterations=3))
        assert not result.converged
        assert result.iterations == 3
        assert result.residual >= 1e-12
        assert result.scores.sum() == pytest.approx(1.0, abs=1e-12)

    @given(graphs())
    def test_scores_are_a_distribution(self, graph):
        result = textrank(graph)
        assert (result.scores >= 0).all()
        assert abs(result.scores.sum() - 1.0) <= 1e-9

    @given(graphs())
    @settings(max_examples=60)
    def test_matches_linear_solve_oracle(self, graph):
        scores = textrank(graph, TIGHT).scores
        expected = pagerank_by_linear_solve(graph)
        assert np.abs(scores - expected).max() <= 1e-6

    @given(graphs(), st.sampled_from([0.1, 3.0, 1000.0]))
    def test_weight_scaling_invariance(self, graph, c):
        base = textrank(graph, TIGHT).scores
        scaled = textrank(c * graph, TIGHT).scores
        assert np.abs(base - scaled).max() <= 1e-9

    @given(graphs(max_n=5), st.randoms(use_true_random=False))
    def test_permutation_equivariance(self, graph, rnd):
        n = graph.shape[0]
        perm = list(range(n))
        rnd.shuffle(perm)
        permuted = graph[np.ix_(perm, perm)]
        base = textrank(graph, TIGHT).scores
        moved = textrank(permuted, TIGHT).scores
        assert np.abs(base[perm] - moved).max() <= 1e-9


class TestFrequencyScores:
    def test_single_sentence(self):
        assert np.array_equal(frequency_scores([["alpha", "beta"]]), [1.0])

    def test_hand_computed_example(self):
        # f(b)=3, f(c)=4 -> nf(b)=0.75, nf(c)=1.0; raw=[0.75, 0.875, 1.0]
        # normalized by 2.625: [2/7, 1/3, 8/21]
        scores = frequency_scores([["b", "b"], ["b", "c"], ["c", "c", "c"]])
        assert np.allclose(scores, [2 / 7, 1 / 3, 8 / 21], atol=1e-12)

    def test_all_empty_sentences_uniform(self):
        assert np.array_equal(frequency_scores([[], [], []]), [1 / 3, 1 / 3, 1 / 3])

    def test_empty_list_raises(self):
        with pytest.raises(EmptySentenceList):
            frequency_scores([])

    @given(
        st.lists(
            st.lists(st.sampled_from("abcde"), max_size=6),
            min_size=1,
            max_size=8,
        )
    )
    def test_matches_fraction_oracle(self, sentence_tokens):
        scores = frequency_scores(sentence_tokens)
        expected = [float(f) for f in frequency_scores_by_fractions(sentence_tokens)]
        assert np.allclose(scores, expected, atol=1e-12)
        assert abs(scores.sum() - 1.0) <= 1e-9

    @given(st.permutations(list(range(4))))
    def test_order_equivariance(self, perm):
        sentences = [["a", "a"], ["a", "b"], ["b", "c", "c"], []]
        base = frequency_scores(sentences)
        moved = frequency_scores([sentences[i] for i in perm])
        assert np.allclose(base[list(perm)], moved, atol=1e-15)


class TestSelectTopK:
    def test_top_two_in_appearance_order(self):
        assert select_top_k(np.array([0.1, 0.5, 0.4]), 2) == [1, 2]

    def test_ties_prefer_lower_index(self):
        assert select_top_k(np.array([0.25, 0.25, 0.25, 0.25]), 2) == [0, 1]

    def test_k_larger_than_n(self):
        assert select_top_k(np.array([0.2, 0.3, 0.5]), 5) == [0, 1, 2]

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            select_top_k(np.array([1.0]), 0)

    @given(
        st.lists(st.floats(min_value=0, max_value=1, allow_nan=False), min_size=1, max_size=12),
        st.integers(min_value=1, max_value=15),
    )
    def test_selection_properties(self, raw_scores, k):
        scores = np.array(raw_scores)
        selected = select_top_k(scores, k)
        assert selected == sorted(set(selected))
        assert len(selected) == min(k, len(scores))
        # no unselected index strictly beats a selected one
        chosen = sorted((scores[i] for i in selected), reverse=True)
        others = sorted((scores[i] for i in range(len(scores)) if i not in selected), reverse=True)
        if others:
            assert min(chosen) >= max(others) - 1e-18
