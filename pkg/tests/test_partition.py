import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexsearch import OrderedPartition, VertexNotInGroundSet

from support import FIG1_PI, fig1


def model_refine(classes, subset):
    out = []
    for c in classes:
        a = [v for v in c if v in subset]
        b = [v for v in c if v not in subset]
        out.extend(x for x in (a, b) if x)
    return out


def test_fig1_refinement_steps():
    g = fig1()
    names = g.names
    beta = [g.vertex(t) for t in reversed(FIG1_PI.split())]
    part = OrderedPartition(g.n, beta)
    part.refine([g.vertex("i")])
    assert part.format(names) == "(i)(j,e,f,g,h,a,b,c,d,s)"
    part.refine([g.vertex(t) for t in "efij"])
    assert part.format(names) == "(i)(j,e,f)(g,h,a,b,c,d,s)"
    part.check_invariants()


def test_refine_empty_and_full_leave_partition_unchanged():
    part = OrderedPartition(6, [5, 3, 1, 0, 2, 4])
    part.refine([1, 0])
    before = part.classes()
    part.refine([])
    assert part.classes() == before
    part.refine(range(6))
    assert part.classes() == before
    part.check_invariants()


def test_refine_rejects_foreign_vertex():
    part = OrderedPartition(6, [0, 1, 2])
    with pytest.raises(VertexNotInGroundSet):
        part.refine([1, 4])
    with pytest.raises(VertexNotInGroundSet):
        part.refine([7])


def test_refine_keeps_intra_class_order_regardless_of_subset_order():
    part = OrderedPartition(5, [4, 3, 2, 1, 0])
    part.refine([0, 2, 4])
    assert part.classes() == [[4, 2, 0], [3, 1]]


def test_split_front_remove_prepend_move():
    part = OrderedPartition(5, [0, 1, 2, 3, 4])
    v = part.split_front(part.first)
    assert v == 0 and part.classes() == [[0], [1, 2, 3, 4]]
    part.remove(3)
    assert part.classes() == [[0], [1, 2, 4]]
    assert 3 not in part
    part.prepend_singleton(3)
    assert part.classes() == [[3], [0], [1, 2, 4]]
    part.move_to_back(1)
    assert part.classes() == [[3], [0], [2, 4, 1]]
    part.remove(0)
    assert part.classes() == [[3], [2, 4, 1]]
    assert part.flatten() == [3, 2, 4, 1]
    part.check_invariants()


def test_empty_ground_set():
    part = OrderedPartition(3, [])
    assert part.classes() == []
    part.refine([])
    part.check_invariants()


ops = st.lists(
    st.one_of(
        st.tuples(st.just("refine"), st.sets(st.integers(0, 11))),
        st.tuples(st.just("move"), st.integers(0, 11)),
        st.tuples(st.just("split"), st.integers(0, 20)),
    ),
    max_size=30,
)


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(12))), ops)
def test_refine_matches_list_model(initial, script):
    part = OrderedPartition(12, initial)
    model = [list(initial)]
    for op, arg in script:
        if op == "refine":
            part.refine(sorted(arg))
            model = model_refine(model, arg)
        elif op == "move":
            part.move_to_back(arg)
            for c in model:
                if arg in c:
                    c.remove(arg)
                    c.append(arg)
        else:
            idx = arg % len(model)
            part.split_front(part.class_ids()[idx])
            c = model[idx]
            if len(c) > 1:
                model[idx:idx + 1] = [[c[0]], c[1:]]
        part.check_invariants()
        assert part.classes() == model
