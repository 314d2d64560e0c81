import pytest

from cktiles.corpus import circulant_matrix
from cktiles.errors import CommutationError, InputError, SpecificationError
from cktiles.graph import graph_from_matrix
from cktiles.matrices import IntMatrix
from cktiles.textile import (
    Specification,
    Tile,
    build_system,
    canonical_specification,
    canonical_system,
    check_commutation,
    exchange_specification,
    exchange_system,
    sigma_ab,
    sigma_ba,
    validate_specification,
)


def _graphs(a, b):
    return graph_from_matrix(a, "A"), graph_from_matrix(b, "B")


def test_sigma_ab_single_vertex():
    ga, gb = _graphs([[2]], [[3]])
    assert len(sigma_ab(ga, gb)) == 6
    assert len(sigma_ba(ga, gb)) == 6


def test_sigma_ab_permutation_with_identity():
    ga, gb = _graphs([[0, 1], [1, 0]], [[1, 0], [0, 1]])
    pairs = sigma_ab(ga, gb)
    assert len(pairs) == 2
    for alpha, b in pairs:
        assert alpha.range == b.source


def test_sigma_sizes_equal_product_entry_sum(corpus):
    for entry in corpus:
        ga = entry.system.graph_a
        gb = entry.system.graph_b
        a = IntMatrix([list(r) for r in entry.matrix_a])
        b = IntMatrix([list(r) for r in entry.matrix_b])
        total = sum(sum(row) for row in (a @ b).data)
        assert len(sigma_ab(ga, gb)) == total
        assert len(sigma_ba(ga, gb)) == total
        assert len(entry.system.tiles) == total


def test_sigma_ab_vertex_count_mismatch():
    ga = graph_from_matrix([[1]], "A")
    gb = graph_from_matrix([[1, 0], [0, 1]], "B")
    with pytest.raises(InputError):
        sigma_ab(ga, gb)


def test_canonical_specification_single_vertex_is_lexicographic():
    ga, gb = _graphs([[2]], [[3]])
    kappa = canonical_specification(ga, gb)
    assert len(kappa.domain) == 6
    # one block: sorted (alpha, b) list matches sorted (a, beta) list positionally
    expected = list(zip(sigma_ab(ga, gb), sigma_ba(ga, gb)))
    assert list(kappa.items()) == expected
    assert validate_specification(kappa, ga, gb).ok


def test_canonical_specification_exists_for_equal_matrices():
    m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    ga, gb = _graphs(m, m)
    kappa = canonical_specification(ga, gb)
    assert validate_specification(kappa, ga, gb).ok


def test_canonical_specification_forced_on_singleton_blocks():
    ga, gb = _graphs([[1, 1], [0, 1]], [[1, 0], [0, 1]])
    kappa = canonical_specification(ga, gb)
    for (alpha, b), (a, beta) in kappa.items():
        assert beta == alpha  # kappa(alpha, id-edge) = (id-edge, alpha)
        assert a.source == alpha.source and b.range == alpha.range
    # brute force: every endpoint-preserving bijection fixes each singleton block
    for (alpha, b), (a, beta) in kappa.items():
        candidates = [
            (a2, beta2)
            for a2, beta2 in sigma_ba(ga, gb)
            if a2.source == alpha.source and beta2.range == b.range
        ]
        assert candidates == [(a, beta)]


def test_canonical_specification_rejects_noncommuting():
    ga, gb = _graphs([[0, 1], [1, 0]], [[1, 1], [0, 1]])
    with pytest.raises(CommutationError) as exc:
        canonical_specification(ga, gb)
    assert exc.value.entry == (1, 1)


def test_exchange_specification_swaps_every_pair():
    kappa = exchange_specification(2, 3)
    assert len(kappa.domain) == 6
    for (alpha, a), (image_a, image_beta) in kappa.items():
        assert image_a == a and image_beta == alpha


def test_exchange_specification_rejects_small():
    with pytest.raises(InputError):
        exchange_specification(1, 3)
    with pytest.raises(InputError):
        exchange_specification(2, 1)


def test_exchange_system_omega_is_full_product():
    for n, m in [(2, 2), (2, 3), (3, 4)]:
        sys_ = exchange_system(n, m)
        assert len(sys_.omega) == n * m
        assert set(sys_.omega) == {
            (alpha, a) for alpha in sys_.graph_a.edges for a in sys_.graph_b.edges
        }


def test_exchange_2_2_tiles():
    sys_ = exchange_system(2, 2)
    assert set(sys_.tiles) == {
        Tile(top=alpha, right=a, left=a, bottom=alpha)
        for alpha in sys_.graph_a.edges
        for a in sys_.graph_b.edges
    }
    assert len(sys_.tiles) == 4


def test_validate_specification_reports_noninjective():
    ga, gb = _graphs([[2]], [[2]])
    pairs = sigma_ab(ga, gb)
    images = sigma_ba(ga, gb)
    mapping = {pair: images[0] for pair in pairs}  # everything to one image
    report = validate_specification(
        Specification(domain=tuple(pairs), mapping=mapping), ga, gb
    )
    assert not report.ok
    assert report.failure == "not-injective"
    assert report.pair in pairs


def test_validate_specification_reports_endpoint_violation():
    ga, gb = _graphs([[0, 1], [1, 0]], [[1, 0], [0, 1]])
    pairs = sigma_ab(ga, gb)
    images = sigma_ba(ga, gb)
    # swap the two images: bijective, but s(alpha) = s(a) now fails
    mapping = {pairs[0]: images[1], pairs[1]: images[0]}
    report = validate_specification(
        Specification(domain=tuple(pairs), mapping=mapping), ga, gb
    )
    assert not report.ok
    assert report.failure == "endpoint-s(alpha)=s(a)"
    assert report.pair == pairs[0]


def test_validate_specification_reports_domain_mismatch():
    ga, gb = _graphs([[2]], [[2]])
    pairs = sigma_ab(ga, gb)
    images = sigma_ba(ga, gb)
    mapping = dict(zip(pairs[:-1], images[:-1]))
    report = validate_specification(
        Specification(domain=tuple(pairs[:-1]), mapping=mapping), ga, gb
    )
    assert not report.ok
    assert report.failure == "domain-mismatch"


def test_build_system_rejects_invalid_specification():
    ga, gb = _graphs([[2]], [[2]])
    pairs = sigma_ab(ga, gb)
    images = sigma_ba(ga, gb)
    mapping = {pair: images[0] for pair in pairs}
    with pytest.raises(SpecificationError):
        build_system(ga, gb, Specification(domain=tuple(pairs), mapping=mapping))


def test_exchange_transition_matrices_are_kronecker_products():
    for n, m in [(2, 2), (2, 3), (3, 4), (4, 5)]:
        sys_ = exchange_system(n, m)
        e_n = IntMatrix.all_ones(n)
        e_m = IntMatrix.all_ones(m)
        assert sys_.a_kappa == e_n.kron(IntMatrix.identity(m))
        assert sys_.b_kappa == IntMatrix.identity(n).kron(e_m)


def test_exchange_2_2_a_kappa_literal():
    sys_ = exchange_system(2, 2)
    assert sys_.a_kappa.to_lists() == [
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ]


def test_h_kappa_block_structure(corpus):
    for entry in corpus:
        sys_ = entry.system
        n = len(sys_.omega)
        h = sys_.h_kappa
        assert h.shape == (2 * n, 2 * n)
        a, b = sys_.a_kappa, sys_.b_kappa
        assert h == IntMatrix.block2(a, a, b, b)


def test_transition_matrices_essential(corpus):
    for entry in corpus:
        sys_ = entry.system
        for matrix in (sys_.a_kappa, sys_.b_kappa):
            for row in matrix.data:
                assert any(row), entry.label
            for col in zip(*matrix.data):
                assert any(col), entry.label
        # stacking the two essential halves gives >= 2 ones per block row,
        # which is why every cycle of the block matrix has an exit
        for row in sys_.h_kappa.data:
            assert sum(row) >= 2, entry.label


def test_check_commutation_exchange_and_circulant():
    assert check_commutation(exchange_system(3, 4))
    a = circulant_matrix(4, (1,))
    b = circulant_matrix(4, (0, 2))
    assert check_commutation(canonical_system(a, b))


def test_check_commutation_full_corpus(corpus):
    for entry in corpus:
        assert check_commutation(entry.system), entry.label


def test_tiles_satisfy_endpoint_constraints(corpus):
    for entry in corpus:
        for t in entry.system.tiles:
            assert entry.system.kappa(t.top, t.right) == (t.left, t.bottom)
            assert t.top.source == t.left.source
            assert t.top.range == t.right.source
            assert t.left.range == t.bottom.source
            assert t.right.range == t.bottom.range
