from hypothesis import given, settings

from conftest import tiny_tasks
from fstsynth.core import TaskSpec, defined_map_count, prune, verify
from fstsynth.synth_table import synthesize_at
from fstsynth.synth_traj import synthesize_at_traj, trajectory_variable_count
from fstsynth.tasks import gen_palindrome, gen_parity, gen_signal_locator


def w(s):
    return tuple(s)


def test_variable_counts():
    assert trajectory_variable_count(gen_parity(2)) == 8
    assert trajectory_variable_count(gen_signal_locator(9, 3)) == 81
    assert trajectory_variable_count(gen_palindrome(5)) == 160


def test_parity_witness_matches_table_engine_after_prune():
    task = gen_parity(2)
    traj_out = synthesize_at_traj(task, 2)
    assert traj_out.sat and not traj_out.total
    table_pruned = prune(synthesize_at(task, 2).witness, task)
    # both engines canonicalize states by first use, so the pruned
    # machines coincide outright here
    assert traj_out.witness == table_pruned


def test_signal_locator_unsat_at_four():
    assert not synthesize_at_traj(gen_signal_locator(9, 3), 4).sat


def test_single_pair_single_state():
    task = TaskSpec(("0",), ("r",), ((w("0"), "r"),))
    out = synthesize_at_traj(task, 1)
    assert out.sat
    assert defined_map_count(out.witness) == (1, 1)


def test_witness_is_partial_and_verifies():
    task = gen_signal_locator(9, 3)
    out = synthesize_at_traj(task, 5)
    assert out.sat
    assert verify(out.witness, task).ok
    assert not out.witness.is_total()


@settings(max_examples=60, deadline=None)
@given(tiny_tasks())
def test_engines_agree_on_verdicts(task):
    for n in (1, 2, 3):
        assert synthesize_at_traj(task, n).sat == synthesize_at(task, n).sat
