import numpy as np
import pytest

from modkit import catalog
from modkit.cyclo import zeta
from modkit.errors import (
    DualityFailure,
    FusionAxiomFailure,
    MismatchWithSDims,
    ModReductionOnNonInteger,
    NotPseudoUnitary,
    NotSymmetric,
    ShapeError,
    TwistNotRootOfUnity,
    VerlindeNonInteger,
)
from modkit.moddata import (
    FusionRing,
    RawData,
    associative,
    balancing_check,
    fp_dims,
    fpdim_mod,
    from_matrices,
    global_invariants,
    twist_conductor,
    validate,
    verlinde_entry,
)

SMALL = ["trivial", "semion", "antisemion", "toric", "ising"]


def verlinde_oracle(S: np.ndarray) -> np.ndarray:
    """Float Verlinde formula, straight from the definition."""
    D2 = float(np.sum(np.abs(S[0]) ** 2))
    n = len(S)
    N = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                N[i, j, k] = (np.sum(S[i] * S[j] * np.conj(S[k]) / S[0])).real / D2
    return N


@pytest.mark.parametrize("name", SMALL)
def test_fusion_matches_float_oracle(name):
    md = catalog.preset(name)
    assert np.allclose(md.fusion.N, verlinde_oracle(md.s_float), atol=1e-9)


def test_fusion_matches_oracle_on_corpus_sample(corpus):
    for md in corpus[::37]:
        assert np.allclose(md.fusion.N, verlinde_oracle(md.s_float), atol=1e-9), md.name


def test_ising_fusion_rules(ising):
    f, s = ising.labels.index("f"), ising.labels.index("sigma")
    assert ising.fusion.summands(s, s) == sorted([0, f])
    assert ising.fusion.summands(f, s) == [s]
    assert ising.fusion.summands(f, f) == [0]
    assert ising.dual == (0, 1, 2)
    assert ising.D2 == 4


def test_semion_invariants(semion):
    inv = global_invariants(semion)
    assert inv.fpdim == 2 and inv.fpdim_mod4 == 2
    assert inv.is_integral and inv.is_weakly_integral
    assert inv.self_dual_count == 2
    assert semion.theta[1] == zeta(4)


def test_verlinde_entry(ising):
    sg = ising.labels.index("sigma")
    assert verlinde_entry(ising.s, ising.D2, sg, sg, 0) == 1
    assert verlinde_entry(ising.s, ising.D2, sg, sg, sg) == 0


def test_balancing_on_corpus_sample(corpus):
    assert all(balancing_check(md) for md in corpus[::11])


def test_z3_has_non_self_dual_pair():
    md = catalog.cyclic_pointed(3, 1)
    assert md.dual == (0, 2, 1)
    assert md.self_dual_count() == 1


def test_fp_dims_match_eigenvalue_oracle(corpus):
    for md in [catalog.ising()] + corpus[::29]:
        fp = fp_dims(md.fusion)
        for i in range(md.rank):
            ev = np.linalg.eigvals(md.fusion.N[i].astype(float))
            assert abs(max(ev.real) - fp.values[i]) < 1e-9


def test_fp_dims_mismatch_raises(semion):
    with pytest.raises(MismatchWithSDims):
        fp_dims(semion.fusion, [1.0, 2.0])


def fibonacci():
    phi = 1 + zeta(5) + zeta(5, 4)
    return from_matrices([[1, phi], [phi, -1]], [1, zeta(5, 2)], labels=["1", "tau"])


def test_fibonacci_is_not_weakly_integral():
    fib = fibonacci()
    inv = global_invariants(fib)
    assert not inv.is_weakly_integral and inv.fpdim_mod4 is None
    assert fib.fusion.summands(1, 1) == [0, 1]
    assert fp_dims(fib.fusion).integral is None
    assert abs(fp_dims(fib.fusion).values[1] - (1 + 5**0.5) / 2) < 1e-12
    with pytest.raises(ModReductionOnNonInteger):
        fpdim_mod(fib, 4)
    assert fpdim_mod(catalog.ising(), 4) == 0


def test_twist_conductor_doubles_odd():
    assert twist_conductor([1, -1], 1) == 2
    assert twist_conductor([1, zeta(3)], 3) == 3
    assert twist_conductor([1, -zeta(3)], 3) == 6
    assert twist_conductor([1, -1], 4) == 4


def test_toric_validates_with_minus_one_twist(toric):
    assert toric.conductor == 2
    assert toric.theta[3] == -1


# -- validation errors -------------------------------------------------------------


def _raw(s, t, conductor=4):
    return RawData(len(s), conductor, s, t)


def test_shape_error():
    with pytest.raises(ShapeError):
        validate(_raw([[1, 1]], [1]))
    with pytest.raises(ShapeError):
        validate(RawData(2, 4, [[1, 1], [1, -1]], [1]))


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        validate(_raw([[1, 1], [2, -1]], [1, zeta(4)]))


def test_not_pseudo_unitary():
    with pytest.raises(NotPseudoUnitary):
        validate(_raw([[1, -1], [-1, -1]], [1, zeta(4)]))
    with pytest.raises(NotPseudoUnitary):
        validate(_raw([[2, 1], [1, -1]], [1, zeta(4)]))


def test_twist_not_root_of_unity():
    with pytest.raises(TwistNotRootOfUnity):
        validate(_raw([[1, 1], [1, -1]], [1, 2]))
    with pytest.raises(TwistNotRootOfUnity):
        validate(_raw([[1, 1], [1, -1]], [zeta(4), zeta(4)]))


def test_duality_failure():
    # rows not orthogonal: S S is not a multiple of a permutation
    with pytest.raises(DualityFailure):
        validate(_raw([[1, 1], [1, 1]], [1, zeta(4)]))


def test_verlinde_non_integer():
    # symmetric with S S = 9 I, yet N_11^1 = 1/2
    s = [[1, 2, 2], [2, -2, 1], [2, 1, -2]]
    with pytest.raises(VerlindeNonInteger):
        validate(RawData(3, 1, s, [1, 1, 1]))


def test_fusion_ring_check():
    N = np.zeros((2, 2, 2), dtype=np.int64)
    N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = N[1, 1, 0] = 1
    FusionRing(2, N, (0, 1)).check()
    bad = N.copy()
    bad[1, 0, 1] = 0
    with pytest.raises(FusionAxiomFailure):
        FusionRing(2, bad, (0, 1)).check()
    with pytest.raises(FusionAxiomFailure):
        FusionRing(2, N, (1, 0)).check()


def test_associativity_detects_bad_table():
    N = np.zeros((3, 3, 3), dtype=np.int64)
    for j in range(3):
        N[0, j, j] = N[j, 0, j] = 1
    N[1, 1, 0] = N[2, 2, 0] = 1
    N[1, 2, 2] = N[2, 1, 2] = 1
    N[1, 2, 1] = N[2, 1, 1] = 1
    assert not associative(N)
    ising = catalog.ising()
    assert associative(ising.fusion.N)


def test_from_matrices_roundtrip_equality(semion):
    again = from_matrices([[1, 1], [1, -1]], [1, zeta(4)], labels=semion.labels, name=semion.name, source=semion.source)
    assert again == semion


def test_tolerance_env_override(monkeypatch):
    from modkit.config import DEFAULT_TOLERANCE, tolerance

    assert tolerance() == DEFAULT_TOLERANCE
    monkeypatch.setenv("MODKIT_TOLERANCE", "1e-6")
    assert tolerance() == 1e-6
    # exact checks ignore the guard: the semion still validates under a loose tolerance
    assert catalog.semion().D2 == 2


def test_wrong_semion_twist_is_caught_by_balancing():
    md = from_matrices([[1, 1], [1, -1]], [1, 1])
    assert not balancing_check(md)
