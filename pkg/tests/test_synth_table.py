import pytest
from hypothesis import given, settings

from conftest import tiny_tasks
from fstsynth.core import TaskSpec, Transducer, verify
from fstsynth.oracle import oracle_sat
from fstsynth.synth_table import (
    BudgetExhausted,
    NoSolutionWithin,
    SearchConfig,
    lower_bound,
    search_space_size,
    synthesize_at,
    synthesize_minimal,
    variable_count,
)
from fstsynth.tasks import (
    gen_palindrome,
    gen_parity,
    gen_signal_locator,
    gen_zeroes_or_ones,
    word_classification,
)


def w(s):
    return tuple(s)


class TestBounds:
    def test_parity_lower_bound(self):
        assert lower_bound(gen_parity(2)) == 2

    def test_word_classification_lower_bound(self):
        assert lower_bound(word_classification()) == 3

    def test_single_pair(self):
        assert lower_bound(TaskSpec(("0",), ("r",), ((w("0"), "r"),))) == 1

    def test_variable_count(self):
        assert variable_count(5, 2) == 15
        assert variable_count(1, 1) == 2
        assert variable_count(3, 17) == 54

    def test_search_space_size(self):
        assert search_space_size(5, 2, 3) == 5**10 * 3**5
        assert search_space_size(5, 2, 2) == 5**10 * 2**5
        assert search_space_size(1, 1, 1) == 1


class TestSynthesizeAt:
    def test_parity_at_two(self):
        out = synthesize_at(gen_parity(2), 2)
        assert out.sat and out.witness.is_total()
        assert verify(out.witness, gen_parity(2)).ok

    def test_signal_locator_at_four_unsat(self):
        out = synthesize_at(gen_signal_locator(9, 3), 4)
        assert not out.sat

    def test_signal_locator_at_five_sat(self):
        out = synthesize_at(gen_signal_locator(9, 3), 5)
        assert out.sat and verify(out.witness, gen_signal_locator(9, 3)).ok

    def test_two_outputs_unsat_at_one(self):
        out = synthesize_at(gen_parity(1), 1)
        assert not out.sat

    def test_monotone_by_padding(self):
        # a SAT witness at n stays a witness at n+1 with an unreachable state
        task = gen_parity(2)
        t = synthesize_at(task, 2).witness
        padded = Transducer(
            3,
            t.input_alphabet,
            t.output_alphabet,
            t.delta + ((2, 2),),
            t.omega + (t.output_alphabet[0],),
        )
        assert verify(padded, task).ok
        assert synthesize_at(task, 3).sat

    def test_deterministic_node_counts(self):
        task = gen_zeroes_or_ones(4)
        a = synthesize_at(task, 4)
        b = synthesize_at(task, 4)
        assert a.witness == b.witness
        assert a.stats.nodes == b.stats.nodes
        assert a.stats.backtracks == b.stats.backtracks

    def test_word_orders_agree_on_verdict(self):
        task = gen_palindrome(3)
        verdicts = {
            order: synthesize_at(task, n, SearchConfig(word_order=order)).sat
            for order in ("as-given", "shortest-first", "longest-first")
            for n in (3,)
        }
        assert len(set(verdicts.values())) == 1

    def test_node_budget(self):
        with pytest.raises(BudgetExhausted):
            synthesize_at(
                gen_signal_locator(9, 3), 5, SearchConfig(node_budget=10)
            )


class TestSynthesizeMinimal:
    def test_parity(self):
        n_min, witness, trail = synthesize_minimal(gen_parity(2))
        assert n_min == 2
        assert verify(witness, gen_parity(2)).ok
        assert [o.n for o in trail] == []  # lower bound 2 is tight

    def test_unsat_trail_covers_gap(self):
        task = gen_signal_locator(9, 3)
        n_min, _, trail = synthesize_minimal(task)
        assert n_min == 5
        assert [o.n for o in trail] == [3, 4]
        assert all(not o.sat for o in trail)

    def test_no_solution_within(self):
        with pytest.raises(NoSolutionWithin):
            synthesize_minimal(gen_signal_locator(9, 3), SearchConfig(max_states=4))

    def test_max_states_below_lower_bound(self):
        with pytest.raises(NoSolutionWithin):
            synthesize_minimal(word_classification(), SearchConfig(max_states=2))


@settings(max_examples=60, deadline=None)
@given(tiny_tasks())
def test_agrees_with_oracle_on_tiny_tasks(task):
    for n in (1, 2, 3):
        expected, _ = oracle_sat(task, n)
        assert synthesize_at(task, n).sat == expected
