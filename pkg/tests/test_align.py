import random

import pytest

from oracles import brute_force_min_cost, char_distance_oracle, random_annotated_sentence
from peet import _editops_py
from peet.align import (
    DEL,
    INS,
    MATCH,
    SUB,
    TRANSPOSE,
    align,
    char_similarity,
    merge_ops,
    sub_cost,
    total_cost,
)
from peet.corpus_io import annotate
from peet.kernels import char_distance


class TestKernels:
    def test_backends_agree(self):
        rng = random.Random(11)
        alphabet = "abcde"
        for _ in range(300):
            a = "".join(rng.choices(alphabet, k=rng.randint(0, 10)))
            b = "".join(rng.choices(alphabet, k=rng.randint(0, 10)))
            assert char_distance(a, b) == _editops_py.char_distance(a, b)

    def test_against_full_matrix_oracle(self):
        rng = random.Random(12)
        for _ in range(200):
            a = "".join(rng.choices("abcd", k=rng.randint(0, 8)))
            b = "".join(rng.choices("abcd", k=rng.randint(0, 8)))
            assert char_distance(a, b) == char_distance_oracle(a, b)

    def test_token_backend_agrees(self):
        rng = random.Random(13)
        pool = ["aa", "b", "ccc", "d"]
        for _ in range(200):
            a = rng.choices(pool, k=rng.randint(0, 7))
            b = rng.choices(pool, k=rng.randint(0, 7))
            assert _editops_py.token_distance(a, b) == __import__(
                "peet.kernels", fromlist=["token_distance"]
            ).token_distance(a, b)


class TestCharSimilarity:
    def test_identity(self):
        assert char_similarity("eat", "eat") == 1.0

    def test_empty_vs_nonempty(self):
        assert char_similarity("eat", "") == 0.0

    def test_both_empty(self):
        assert char_similarity("", "") == 1.0

    def test_misspelling(self):
        assert char_similarity("recieve", "receive") == pytest.approx(1 - 2 / 7)


class TestAlign:
    def test_identical_sentences(self):
        s = annotate("the cat sat on the mat")
        ops = align(s, s)
        assert all(op.kind == MATCH for op in ops)
        assert total_cost(ops) == 0.0

    def test_single_substitution(self):
        src = annotate("a b c")
        trg = annotate("a x c")
        kinds = [op.kind for op in align(src, trg)]
        assert kinds == [MATCH, SUB, MATCH]

    def test_transpose_wins_when_cheaper(self):
        # two-token swap: SUB+SUB costs 2.0, INS+DEL 2.0, TRANSPOSE(2) 1.5
        src = annotate("he said")
        trg = annotate("said he")
        ops = align(src, trg)
        assert [op.kind for op in ops] == [TRANSPOSE]
        assert ops[0].k == 2
        assert total_cost(ops) == 1.5

    def test_rotation_prefers_ins_del_composition(self):
        # single-shift rotation: INS+DEL costs 2.0, beating TRANSPOSE(3) at 2.5
        src = annotate("he said yes")
        trg = annotate("yes he said")
        ops = align(src, trg)
        assert total_cost(ops) == 2.0
        assert [op.kind for op in ops] == [INS, MATCH, MATCH, DEL]

    def test_empty_sides(self):
        empty = annotate("")
        full = annotate("a b")
        assert [op.kind for op in align(empty, full)] == [INS, INS]
        assert [op.kind for op in align(full, empty)] == [DEL, DEL]
        assert align(empty, empty) == []

    def test_deterministic(self):
        src = annotate("a b c d")
        trg = annotate("b a d c")
        assert align(src, trg) == align(src, trg)

    def test_path_covers_grid(self):
        rng = random.Random(3)
        for _ in range(50):
            src = random_annotated_sentence(rng)
            trg = random_annotated_sentence(rng)
            ops = align(src, trg)
            i = j = 0
            for op in ops:
                assert op.src_span[0] == i and op.trg_span[0] == j
                i, j = op.src_span[1], op.trg_span[1]
            assert (i, j) == (len(src.tokens), len(trg.tokens))

    def test_matches_brute_force_on_small_pairs(self):
        rng = random.Random(99)
        for _ in range(60):
            src = random_annotated_sentence(rng)
            trg = random_annotated_sentence(rng)
            assert total_cost(align(src, trg)) == brute_force_min_cost(src, trg)

    def test_concatenation_stability(self):
        rng = random.Random(5)
        outer = [f"w{i}" for i in range(40)]
        inner = ["p", "q", "r", "s"]
        for _ in range(50):
            rng.shuffle(outer)
            s1 = outer[:3]
            s2 = outer[3:6]
            u = rng.choices(inner, k=rng.randint(0, 3))
            v = rng.choices(inner, k=rng.randint(0, 3))
            src = annotate(" ".join(s1 + u + s2))
            trg = annotate(" ".join(s1 + v + s2))
            spans = merge_ops(align(src, trg), src, trg)
            for span in spans:
                assert span.src_span[0] >= len(s1)
                assert span.src_span[1] <= len(s1) + len(u)


class TestSubCost:
    def test_floor_applies(self):
        a = annotate("walk").tokens[0]
        b = annotate("walks").tokens[0]
        # same lemma and POS, high char similarity: floored at 0.1
        assert sub_cost(a, b) == 0.1

    def test_identical_token_costs_zero(self):
        a = annotate("walk").tokens[0]
        assert sub_cost(a, a) == 0.0

    def test_components_add_up(self):
        a = annotate("cat").tokens[0]
        b = annotate("quickly").tokens[0]
        expected = 0.5 + 0.25 + 0.25 * (1 - char_similarity("cat", "quickly"))
        assert sub_cost(a, b) == pytest.approx(expected)


class TestMergeOps:
    def test_sub_ins_run_merges(self):
        src = annotate("a b d")
        trg = annotate("a c e d")
        ops = align(src, trg)
        assert [op.kind for op in ops] == [MATCH, SUB, INS, MATCH]
        spans = merge_ops(ops, src, trg)
        assert len(spans) == 1
        assert spans[0].src_span == (1, 2)
        assert spans[0].trg_span == (1, 3)

    def test_all_match_yields_nothing(self):
        s = annotate("a b c")
        assert merge_ops(align(s, s), s, s) == []

    def test_leading_deletion(self):
        src = annotate("x a b")
        trg = annotate("a b")
        spans = merge_ops(align(src, trg), src, trg)
        assert len(spans) == 1
        assert spans[0].src_span == (0, 1)
        assert spans[0].trg_span == (0, 0)
        assert spans[0].trg_tokens == ()

    def test_transpose_stays_single_span(self):
        src = annotate("z he said k")
        trg = annotate("w said he k")
        ops = align(src, trg)
        spans = merge_ops(ops, src, trg)
        transposed = [s for s in spans if s.src_span == (1, 3)]
        assert len(transposed) == 1

    def test_split_mode(self):
        src = annotate("a b d")
        trg = annotate("a c e d")
        spans = merge_ops(align(src, trg), src, trg, merge_adjacent=False)
        assert len(spans) == 2

    def test_spans_disjoint_and_sorted(self):
        rng = random.Random(7)
        for _ in range(60):
            src = random_annotated_sentence(rng)
            trg = random_annotated_sentence(rng)
            spans = merge_ops(align(src, trg), src, trg)
            for earlier, later in zip(spans, spans[1:]):
                assert earlier.src_span[1] <= later.src_span[0]
