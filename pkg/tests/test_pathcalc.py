import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperlcc.hypercore import Hypergraph, uniformize
from hyperlcc.oracle import enumerate_paths
from hyperlcc.pathcalc import (ContractError, SearchBudgetExceeded, compose, extract_subpath,
                               find_path, is_extendable, is_path_from_to, is_q_linear,
                               widen_endpoint)

from instances import hypergraphs


def H3(*edges, k=3):
    return Hypergraph.from_edges(k, [[str(v) for v in e] for e in edges])


def vs(*tokens):
    return {str(t) for t in tokens}


class TestIsQLinear:
    def test_empty(self):
        assert is_q_linear(H3([1, 2, 3]), [], 1)

    def test_single_overlap(self):
        assert is_q_linear(H3([1, 2, 3], [3, 4, 5]), [0, 1], 1)

    def test_tight_overlap(self):
        assert not is_q_linear(H3([1, 2, 3], [2, 3, 4]), [0, 1], 1)

    def test_non_consecutive_meet(self):
        assert not is_q_linear(H3([1, 2, 3], [3, 4, 5], [5, 6, 1]), [0, 1, 2], 1)

    def test_disjoint_consecutive(self):
        assert not is_q_linear(H3([1, 2, 3], [4, 5, 6]), [0, 1], 2)

    @given(hypergraphs(ks=(3, 4, 5)), st.data())
    def test_monotone_in_q_and_contiguous(self, H, data):
        if H.m == 0:
            return
        P = data.draw(st.lists(st.integers(0, H.m - 1), unique=True, max_size=H.m))
        for q in range(1, H.k):
            if is_q_linear(H, P, q):
                assert all(is_q_linear(H, P, r) for r in range(q, H.k))
                for i in range(len(P)):
                    for j in range(i, len(P) + 1):
                        assert is_q_linear(H, P[i:j], q)


class TestIsPathFromTo:
    def test_overlap_needs_empty(self):
        H = H3([1, 2, 3], [3, 4, 5])
        assert is_path_from_to(H, [], vs(1), vs(1, 5), 1)
        assert not is_path_from_to(H, [0], vs(1), vs(1, 5), 1)

    def test_from_1_to_5(self):
        assert is_path_from_to(H3([1, 2, 3], [3, 4, 5]), [0, 1], vs(1), vs(5), 1)

    def test_target_met_early(self):
        assert not is_path_from_to(H3([1, 2, 3], [3, 4, 5]), [0, 1], vs(1), vs(3), 1)

    def test_source_met_late(self):
        H = H3([1, 2, 3], [3, 4, 5], [5, 6, 1])
        assert not is_path_from_to(H, [0, 1], vs(2, 4), vs(5), 1)

    def test_empty_without_overlap(self):
        assert not is_path_from_to(H3([1, 2, 3]), [], vs(1), vs(2), 1)

    def test_invalid_query(self):
        with pytest.raises(ContractError):
            is_path_from_to(H3([1, 2, 3]), [], set(), vs(2), 1)
        with pytest.raises(ContractError):
            is_path_from_to(H3([1, 2, 3]), [], vs(1, 2), vs(1, 2), 1)


class TestIsExtendable:
    def test_empty_overlap(self):
        assert is_extendable(H3([1, 2, 3]), [], vs(1), vs(1, 2))

    def test_last_edge_swallows_endpoint(self):
        H = H3(["a", "b", "c", "d"], k=4)
        assert not is_extendable(H, [0], vs("a"), vs("b", "c", "d"))
        assert is_extendable(H, [0], vs("a"), vs("b", "c"))

    def test_first_edge_swallows_endpoint(self):
        H = H3(["a", "b", "c", "d"], k=4)
        assert not is_extendable(H, [0], vs("a", "b", "c"), vs("d"))

    def test_k3_singletons(self):
        H = H3([1, 2, 3], [3, 4, 5], [5, 6, 7])
        assert is_extendable(H, [0, 1, 2], vs(1), vs(7))

    def test_bad_sizes(self):
        with pytest.raises(ContractError):
            is_extendable(H3([1, 2, 3]), [0], vs(1, 2, 3), vs(3))

    @settings(max_examples=150)
    @given(hypergraphs(ks=(3,)), st.data())
    def test_k3_matches_path_from_to(self, H, data):
        if H.m == 0 or H.n < 2:
            return
        x, y = data.draw(st.lists(st.sampled_from(H.vertices), min_size=2, max_size=2, unique=True))
        P = data.draw(st.lists(st.integers(0, H.m - 1), unique=True, max_size=4))
        assert is_extendable(H, P, {x}, {y}) == is_path_from_to(H, P, {x}, {y}, 1)


class TestExtractSubpath:
    def test_identity(self):
        H = H3([1, 2, 3], [3, 4, 5])
        assert extract_subpath(H, [0, 1], vs(1), vs(5), 1) == [0, 1]

    def test_cut_at_first_target(self):
        # edges {1,2}, {2,3,4}, {4,5,6} padded to k=3; Y={4} is met by e_2 already
        H = uniformize(Hypergraph.from_edges(3, [["1", "2"], ["2", "3", "4"], ["4", "5", "6"]]))
        assert extract_subpath(H, [0, 1, 2], vs(1), vs(4), 1) == [0, 1]

    def test_last_source_visit(self):
        H = H3([1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 9])
        assert extract_subpath(H, [0, 1, 2, 3], vs(1, 6), vs(9), 1) == [2, 3]

    @pytest.mark.parametrize("P, X, Y", [
        ([], vs(1), vs(5)),
        ([0, 1], vs(1), vs(1)),
        ([0, 1], vs(4), vs(5)),
        ([0, 1], vs(1), vs(2)),
    ])
    def test_contract(self, P, X, Y):
        with pytest.raises(ContractError):
            extract_subpath(H3([1, 2, 3], [3, 4, 5]), P, X, Y, 1)

    def test_not_linear(self):
        with pytest.raises(ContractError):
            extract_subpath(H3([1, 2, 3], [2, 3, 4]), [0, 1], vs(1), vs(4), 1)

    @settings(max_examples=200)
    @given(st.integers(0, 10**6))
    def test_planted(self, seed):
        rng = random.Random(seed)
        L = rng.randint(1, 6)
        k = rng.choice([3, 4])
        q = rng.randint(1, k - 1)
        edges, nxt, prev = [], 0, []
        for _ in range(L):
            keep = rng.sample(prev, rng.randint(1, min(q, len(prev)))) if prev else []
            fresh = list(range(nxt, nxt + k - len(keep)))
            nxt += len(fresh)
            edges.append(keep + fresh)
            prev = fresh
        H = Hypergraph.from_edges(k, [[str(v) for v in e] for e in edges])
        P = list(range(L))
        assert is_q_linear(H, P, q)
        X = {rng.choice(edges[0])} | set(rng.sample(range(nxt), rng.randint(0, 2)))
        Y = {rng.choice(edges[-1])} | set(rng.sample(range(nxt), rng.randint(0, 2)))
        Y -= X
        if not Y or not (Y & set(edges[-1])):
            return
        sub = extract_subpath(H, P, {str(v) for v in X}, {str(v) for v in Y}, q)
        assert is_path_from_to(H, sub, {str(v) for v in X}, {str(v) for v in Y}, q)


class TestCompose:
    def test_base_case(self):
        H = H3(["a", "b", "c"])
        out = compose(H, [], 0, [], {"a"}, {"a"}, {"c"}, {"c"})
        assert out == [0]
        assert is_extendable(H, out, {"a"}, {"c"})

    def test_island_jump(self):
        # island path {x,a,b}, crossing edge {b,c,d}, island path {d,e,f}
        H = H3(["x", "a", "b"], ["b", "c", "d"], ["d", "e", "f"])
        out = compose(H, [0], 1, [2], {"x"}, {"b"}, {"d"}, {"f"})
        assert out == [0, 1, 2]
        assert is_extendable(H, out, {"x"}, {"f"})

    def test_island_jump_k4(self):
        H = H3(["x", "a", "b", "c"], ["b", "c", "d", "e"], ["e", "f", "g", "h"], k=4)
        out = compose(H, [0], 1, [2], {"x"}, {"b", "c"}, {"d", "e"}, {"h"})
        assert is_extendable(H, out, {"x"}, {"h"})

    def test_overlapping_sides(self):
        H = H3(["x", "a", "b"], ["b", "c", "d"], ["d", "e", "a"])
        with pytest.raises(ContractError, match="not disjoint"):
            compose(H, [0], 1, [2], {"x"}, {"b"}, {"d"}, {"e"})

    def test_e_meets_left_outside_b(self):
        H = H3(["x", "a", "b"], ["a", "b", "d"], ["d", "e", "f"])
        with pytest.raises(ContractError, match="differs from B"):
            compose(H, [0], 1, [2], {"x"}, {"b"}, {"d"}, {"f"})

    def test_p_not_extendable(self):
        H = H3(["x", "a", "b"], ["b", "c", "d"], ["d", "e", "f"])
        with pytest.raises(ContractError, match="P is not"):
            compose(H, [0], 1, [2], {"x"}, {"a", "b"}, {"d"}, {"f"})


class TestWidenEndpoint:
    def test_identity(self):
        H = H3(["x", "a", "b"])
        assert widen_endpoint(H, [0], {"x"}, {"b"}, {"b"})

    def test_add_outside_vertex(self):
        H = H3(["x", "a", "b"], ["z", "w", "u"])
        assert widen_endpoint(H, [0], {"x"}, {"b"}, {"b", "z"})

    def test_widen_start(self):
        H = H3(["x", "a", "b"], ["z", "w", "u"])
        assert widen_endpoint(H, [0], {"x"}, {"b"}, {"x", "z"}, at="start")

    def test_meets_path(self):
        H = H3(["x", "a", "b"])
        with pytest.raises(ContractError, match="outside the original"):
            widen_endpoint(H, [0], {"x"}, {"b"}, {"b", "a"})

    def test_not_superset(self):
        H = H3(["x", "a", "b"], ["z", "w", "u"])
        with pytest.raises(ContractError):
            widen_endpoint(H, [0], {"x"}, {"b"}, {"z"})

    def test_too_large(self):
        H = H3(["x", "a", "b"], ["z", "w", "u"])
        with pytest.raises(ContractError):
            widen_endpoint(H, [0], {"x"}, {"b"}, {"b", "z", "w"})

    def test_bad_side(self):
        H = H3(["x", "a", "b"])
        with pytest.raises(ValueError):
            widen_endpoint(H, [0], {"x"}, {"b"}, {"b"}, at="middle")


class TestFindPath:
    def test_chain(self):
        H = H3([1, 2, 3], [3, 4, 5], [5, 6, 7])
        assert find_path(H, vs(1), vs(7), 1) == [0, 1, 2]

    def test_overlap(self):
        assert find_path(H3([1, 2, 3]), vs(1), vs(1), 1) == []

    def test_blocked_by_tight_pair(self):
        assert find_path(H3([1, 2, 3], [2, 3, 4]), vs(1), vs(4), 1) is None
        assert find_path(H3([1, 2, 3], [2, 3, 4]), vs(1), vs(4), 2) == [0, 1]

    def test_edge_restriction(self):
        H = H3([1, 2, 3], [3, 4, 5], [1, 8, 5])
        assert find_path(H, vs(1), vs(4), 1, edges=[0, 1]) == [0, 1]
        assert find_path(H, vs(1), vs(4), 1, edges=[1, 2]) == [2, 1]
        assert find_path(H, vs(1), vs(4), 1, edges=[2]) is None

    def test_budget(self):
        H = H3(*[[i, i + 1, i + 100] for i in range(30)], [0, 500, 501])
        with pytest.raises(SearchBudgetExceeded):
            find_path(H, vs(0), vs(30), 1, budget=3)

    def test_long_chain_no_recursion_limit(self):
        L = 3000
        H = H3(*[[2 * i, 2 * i + 1, 2 * i + 2] for i in range(L)])
        assert len(find_path(H, vs(0), vs(2 * L), 1)) == L

    @settings(max_examples=150)
    @given(hypergraphs(ks=(3, 4)), st.data())
    def test_agrees_with_enumeration(self, H, data):
        if H.n == 0:
            return
        x = data.draw(st.sampled_from(H.vertices))
        for q in range(1, H.k):
            reach = set()
            for P in enumerate_paths(H, x, q, H.m):
                if P:
                    reach |= H.edges[P[-1]]
            for y in H.vertices:
                if y == x:
                    continue
                P = find_path(H, {x}, {y}, q)
                assert (P is not None) == (H.vid(y) in reach)
                if P is not None:
                    assert is_path_from_to(H, P, {x}, {y}, q)
