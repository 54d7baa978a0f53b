import random

import pytest

from torusrep import cartan, linalg
from torusrep.cartan import (
    classify,
    connected_components,
    is_indecomposable,
    named_gcm,
    validate_gcm,
)
from torusrep.errors import (
    Decomposable,
    DiagonalNotTwo,
    NotSquare,
    PositiveOffDiagonal,
    ZeroPatternAsymmetric,
)


def test_validate_a2():
    g = validate_gcm([[2, -1], [-1, 2]])
    assert g.r == 2 and g.corank == 0


def test_validate_rank_one():
    g = validate_gcm([[2]])
    assert g.r == 1 and g.corank == 0


def test_validate_affine_a1_corank():
    g = validate_gcm([[2, -2], [-2, 2]])
    assert g.r == 2 and g.corank == 1


def test_validate_rejections():
    with pytest.raises(NotSquare):
        validate_gcm([[2, -1]])
    with pytest.raises(DiagonalNotTwo):
        validate_gcm([[1, 0], [0, 2]])
    with pytest.raises(PositiveOffDiagonal):
        validate_gcm([[2, 1], [-1, 2]])
    with pytest.raises(ZeroPatternAsymmetric):
        validate_gcm([[2, 0], [-1, 2]])


def test_indecomposable():
    assert is_indecomposable(validate_gcm([[2, -1], [-1, 2]]))
    assert is_indecomposable(validate_gcm([[2, -2], [-2, 2]]))
    block = validate_gcm([[2, 0], [0, 2]])
    assert not is_indecomposable(block)
    assert connected_components(block) == [[0], [1]]


def test_components_of_mixed_block():
    g = validate_gcm([
        [2, -1, 0, 0],
        [-1, 2, 0, 0],
        [0, 0, 2, -1],
        [0, 0, -1, 2],
    ])
    assert connected_components(g) == [[0, 1], [2, 3]]
    with pytest.raises(Decomposable):
        classify(g)


@pytest.mark.parametrize("matrix,label", [
    ([[2]], "A1"),
    ([[2, -1], [-1, 2]], "A2"),
    ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], "A3"),
    ([[2, -2], [-2, 2]], "A1affine"),
    ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], "A2affine"),
    ([[2, -1], [-3, 2]], "other"),
    ([[2, -1], [-2, 2]], "other"),       # B2: asymmetric
    ([[2, -2], [-1, 2]], "other"),       # C2
])
def test_classify(matrix, label):
    assert classify(validate_gcm(matrix)).label == label


def test_classify_named_others():
    for name in ("B2", "C2", "G2", "F4", "D4"):
        assert classify(named_gcm(name)).kind == "other"


def test_affine_corank_and_null_vector():
    for r in range(2, 7):
        g = validate_gcm(cartan.affine_a_matrix(r))
        assert classify(g).label == f"A{r - 1}affine"
        assert g.corank == 1
        ones = [1] * r
        basis = linalg.nullspace(g.entries)
        assert len(basis) == 1
        # null vector proportional to all-ones
        v = basis[0]
        assert all(x == v[0] for x in v) and v[0] != 0
        assert all(
            sum(g.n(i, j) * o for j, o in enumerate(ones)) == 0 for i in range(r)
        )


def test_finite_corank_zero():
    for r in range(1, 7):
        g = validate_gcm(cartan.finite_a_matrix(r))
        assert g.corank == 0
        assert classify(g).label == f"A{r}"


def _permuted(matrix, perm):
    n = len(matrix)
    return [[matrix[perm[i]][perm[j]] for j in range(n)] for i in range(n)]


def test_classify_invariant_under_relabelling():
    rng = random.Random(3)
    samples = [
        cartan.finite_a_matrix(4),
        cartan.finite_a_matrix(5),
        cartan.affine_a_matrix(4),
        cartan.affine_a_matrix(5),
        named_gcm("D4").entries,
        named_gcm("F4").entries,
    ]
    for matrix in samples:
        base = classify(validate_gcm(matrix)).label
        for _ in range(6):
            perm = list(range(len(matrix)))
            rng.shuffle(perm)
            assert classify(validate_gcm(_permuted(matrix, perm))).label == base


def test_path_and_cycle_orders():
    g = validate_gcm(cartan.finite_a_matrix(4))
    assert cartan.path_order(g) == [0, 1, 2, 3]
    # same diagram with scrambled labels still walks the path
    scrambled = validate_gcm(_permuted(cartan.finite_a_matrix(4), [2, 0, 3, 1]))
    order = cartan.path_order(scrambled)
    assert sorted(order) == [0, 1, 2, 3]
    for a, b in zip(order, order[1:]):
        assert scrambled.n(a, b) == -1
    c = validate_gcm(cartan.affine_a_matrix(5))
    cyc = cartan.cycle_order(c)
    assert cyc[0] == 0 and sorted(cyc) == [0, 1, 2, 3, 4]
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert c.n(a, b) == -1


def test_named_gcm_families():
    assert named_gcm("A5").r == 5
    assert named_gcm("A3affine").r == 4
    assert classify(named_gcm("A3affine")).label == "A3affine"
    with pytest.raises(ValueError):
        named_gcm("E8")
