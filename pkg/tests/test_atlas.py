import pytest

from ncstar import Form, atlas_run, canonical_form, connected_multigraphs
from ncstar.errors import BudgetExceeded


def test_canonical_form_is_relabeling_invariant():
    assert canonical_form([(2, 0), (0, 1), (1, 1)]) == canonical_form([(0, 0), (0, 1), (1, 2)])
    assert canonical_form([(0, 1), (1, 2)]) == ((0, 1), (0, 2))


def test_class_counts_per_edge_count():
    # connected multigraphs with loops allowed, counted by edges: 2, 4, 11, 30, 95
    graphs = connected_multigraphs(5)
    counts = [sum(len(g) == m for g in graphs) for m in range(1, 6)]
    assert counts == [2, 4, 11, 30, 95]
    assert len(set(graphs)) == len(graphs)


def test_counts_monotone():
    sizes = [len(connected_multigraphs(m)) for m in range(0, 5)]
    assert sizes == sorted(sizes) and sizes[0] == 0


def test_one_edge_atlas():
    entries = atlas_run(1, [2])
    assert [e.edges for e in entries] == [((0, 0),), ((0, 1),)]
    loop, arc = entries
    assert loop.classification.verdict is Form.TANGLE and loop.classification.is_simple_closed_curve
    assert arc.classification.verdict is Form.ARC
    assert loop.compact and arc.compact and not loop.disagreement and not arc.disagreement


def test_three_edge_atlas_has_triod():
    entries = {e.edges: e for e in atlas_run(3, [2])}
    triod = entries[((0, 1), (0, 2), (0, 3))]
    assert triod.classification.verdict is Form.NOT_FT
    assert triod.oracle == {2: False}
    assert not any(e.disagreement for e in entries.values())


def test_budget_and_k_guards():
    with pytest.raises(BudgetExceeded):
        atlas_run(6, [2])
    with pytest.raises(ValueError):
        atlas_run(2, [1])
