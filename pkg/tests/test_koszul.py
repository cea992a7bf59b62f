import random

import pytest

from hochschild.algebra.coeff import QQ
from hochschild.algebra.koszul import (
    COHOMOLOGY,
    HOMOLOGY,
    DimensionProfile,
    GeneratorLabel,
    _dimension_in_worker,
    _init_worker,
    build_complex,
    cohomology_dimension,
    dimension_profile,
    free_module,
    graded_piece,
    is_profile_dict,
    profile_degrees,
    structural_spaces,
)
from hochschild.algebra.poly import Ambient, Polynomial, monomials_of_degree
from hochschild.exceptions import ConfigurationError, NotHomogeneous, OutOfBuiltRange

from .conftest import random_coefficient

COHOMOLOGY_ODD = {3: 1, 4: 3, 5: 3, 6: 1}
COHOMOLOGY_EVEN = {0: 1, 1: 3, 2: 3, 3: 1}
HOMOLOGY_ODD = {-6: 1, -5: 3, -4: 3, -3: 1}
HOMOLOGY_EVEN = {-3: 1, -2: 3, -1: 3, 0: 1}


def _labels(module, kind=COHOMOLOGY):
    return [g.text(kind) for g in module.generators]


def test_generator_labels():
    label = GeneratorLabel((1, 2), 1)
    assert label.text() == "u*eps1*eps2"
    assert label.text(HOMOLOGY) == "v*zeta1*zeta2"
    assert label.degree() == 4
    assert label.degree(HOMOLOGY) == -4
    assert GeneratorLabel((), 0).text() == "1"
    assert GeneratorLabel((3,), 2).text() == "u^2*eps3"


def test_free_modules():
    assert _labels(free_module(3, 2, 3, COHOMOLOGY)) == ["u", "eps1*eps2", "eps2*eps3", "eps3*eps1"]
    assert _labels(free_module(3, 3, 3, COHOMOLOGY)) == ["u*eps1", "u*eps2", "u*eps3", "eps1*eps2*eps3"]
    assert free_module(3, 3, 3, COHOMOLOGY).weights == (2, 2, 2, 6)
    assert free_module(3, 3, 3, HOMOLOGY).weights == (-2, -2, -2, -6)
    assert _labels(free_module(3, 4, 3, HOMOLOGY), HOMOLOGY) == ["v^2", "v*zeta1*zeta2", "v*zeta2*zeta3", "v*zeta3*zeta1"]
    assert free_module(3, 1, 3, COHOMOLOGY).minimal_weight == 2
    assert len(free_module(2, 2, 3, COHOMOLOGY)) == 2


def test_canonical_sign():
    module = free_module(3, 2, 3, COHOMOLOGY)
    assert module.canonical((1, 3), 0) == (3, -1)
    assert module.canonical((3, 1), 0) == (3, 1)
    assert module.canonical((), 1) == (0, 1)


def test_cohomology_differentials(cubic):
    C = build_complex(cubic, COHOMOLOGY, 4)
    d1, d2, d3 = cubic.gradient()
    zero = cubic.ambient.zero()
    assert all(entry.is_zero() for row in C.differential(0) for entry in row)
    assert C.differential(1) == ((d1, d2, d3), (zero,) * 3, (zero,) * 3, (zero,) * 3)
    assert C.differential(2) == (
        (zero, -d2, zero, d3),
        (zero, d1, -d3, zero),
        (zero, zero, d2, -d1),
        (zero, zero, zero, zero),
    )
    top = C.image_of(3, GeneratorLabel((1, 2, 3)))
    assert top == {
        GeneratorLabel((2, 3), 1): d1,
        GeneratorLabel((3, 1), 1): d2,
        GeneratorLabel((1, 2), 1): d3,
    }


def test_homology_differentials(cubic):
    C = build_complex(cubic, HOMOLOGY, 4)
    d1, d2, d3 = cubic.gradient()
    zero = cubic.ambient.zero()
    assert C.differential(2) == ((d1, zero, zero, zero), (d2, zero, zero, zero), (d3, zero, zero, zero))
    # rows v, zeta12, zeta23, zeta31; columns v*zeta1, v*zeta2, v*zeta3, zeta123
    assert C.differential(3) == (
        (zero, zero, zero, zero),
        (-d2, d1, zero, zero),
        (zero, -d3, d2, zero),
        (d3, zero, -d1, zero),
    )
    assert C.differential(4) == (
        (d1.scale(2), zero, zero, zero),
        (d2.scale(2), zero, zero, zero),
        (d3.scale(2), zero, zero, zero),
        (zero, d3, d1, d2),
    )
    assert C.target_index(4) == 3


def test_entries_are_multiples_of_partials(cubic):
    partials = cubic.gradient()
    for kind in (COHOMOLOGY, HOMOLOGY):
        C = build_complex(cubic, kind, 6)
        for matrix in C.differentials.values():
            for row in matrix:
                for entry in row:
                    if entry.is_zero():
                        continue
                    assert any(entry == g.scale(k) for g in partials for k in (1, -1, 2, -2, 3, -3))


def test_build_errors(ambient, cubic):
    with pytest.raises(ConfigurationError):
        build_complex(cubic, "cyclic", 4)
    with pytest.raises(ConfigurationError):
        build_complex(cubic, COHOMOLOGY, 0)
    with pytest.raises(NotHomogeneous):
        build_complex(ambient.parse("z1^3+z2"), COHOMOLOGY, 4)
    with pytest.raises(NotHomogeneous):
        build_complex(ambient.zero(), HOMOLOGY, 4)


def test_out_of_built_range(cubic):
    phi = build_complex(cubic, COHOMOLOGY, 3)
    psi = build_complex(cubic, HOMOLOGY, 3)
    with pytest.raises(OutOfBuiltRange):
        phi.differential(3)
    with pytest.raises(OutOfBuiltRange):
        psi.differential(0)
    with pytest.raises(OutOfBuiltRange):
        graded_piece(phi, 3, 0)
    with pytest.raises(OutOfBuiltRange):
        dimension_profile(psi, -1, 4)


def test_graded_piece_shapes(cubic_q2):
    C = build_complex(cubic_q2, COHOMOLOGY, 4)
    piece = graded_piece(C, 2, 4)
    # Phi(2) in degree 4: u*A_4 plus eps_ij*A_0
    assert piece.domain_dimension == 12 + 3
    assert piece.outgoing.cols == piece.domain_dimension == piece.incoming.rows
    zero_piece = graded_piece(C, 0, 2)
    assert zero_piece.domain_dimension == 6
    assert zero_piece.outgoing.is_zero()
    assert zero_piece.incoming.cols == 0


def test_hh0_is_the_hypersurface_algebra(cubic_q2):
    for kind in (COHOMOLOGY, HOMOLOGY):
        C = build_complex(cubic_q2, kind, 2)
        profile = dimension_profile(C, 0, 6)
        assert profile.values == {0: 1, 1: 3, 2: 6, 3: 9, 4: 12, 5: 15, 6: 18}
        assert not profile.stabilized


def test_generic_q_pieces(cubic):
    C = build_complex(cubic, COHOMOLOGY, 5)
    assert [cohomology_dimension(C, 4, s) for s in range(0, 4)] == [1, 3, 3, 1]


def test_even_cohomology_profile(cubic_q2):
    C = build_complex(cubic_q2, COHOMOLOGY, 5)
    profile = dimension_profile(C, 4, 7, window=3)
    assert profile.nonzero() == COHOMOLOGY_EVEN
    assert profile.total == 8
    assert profile.stabilized


@pytest.mark.slow
@pytest.mark.parametrize(
    "kind, p, expected",
    [
        (COHOMOLOGY, 3, COHOMOLOGY_ODD),
        (COHOMOLOGY, 5, COHOMOLOGY_ODD),
        (COHOMOLOGY, 6, COHOMOLOGY_EVEN),
        (HOMOLOGY, 3, HOMOLOGY_ODD),
        (HOMOLOGY, 4, HOMOLOGY_EVEN),
    ],
)
def test_stable_profiles(cubic_q2, kind, p, expected):
    C = build_complex(cubic_q2, kind, 7)
    profile = dimension_profile(C, p, 10, window=3)
    assert profile.nonzero() == expected
    assert profile.total == 8
    assert profile.stabilized


@pytest.mark.slow
def test_low_degrees_are_infinite(cubic_q2):
    for kind in (COHOMOLOGY, HOMOLOGY):
        C = build_complex(cubic_q2, kind, 3)
        for p in (1, 2):
            assert not dimension_profile(C, p, 10, window=3).stabilized


@pytest.mark.slow
def test_parallel_profile_matches_serial(cubic_q2):
    C = build_complex(cubic_q2, COHOMOLOGY, 4)
    assert dimension_profile(C, 3, 8, workers=2) == dimension_profile(C, 3, 8)


def test_worker_receives_the_complex_once(cubic_q2):
    C = build_complex(cubic_q2, COHOMOLOGY, 4)
    _init_worker(C, 3)
    assert [_dimension_in_worker(s) for s in range(3, 7)] == [cohomology_dimension(C, 3, s) for s in range(3, 7)]


def test_dimension_profile_bookkeeping():
    profile = DimensionProfile.from_values({3: 0, 0: 1, 1: 0, 2: 0}, truncation=3, window=3)
    assert list(profile.values) == [0, 1, 2, 3]
    assert profile.stabilized
    assert profile.total == 1
    assert profile.support == [0]
    assert profile[7] == 0
    assert profile.to_dict() == {"0": 1, "1": 0, "2": 0, "3": 0, "total": 1, "stabilized": True}
    assert is_profile_dict(profile.to_dict())
    assert profile_degrees(profile.to_dict()) == profile.values
    assert not is_profile_dict({"total": 8, "stabilized": True, "support": {"0": 1}})
    assert not DimensionProfile.from_values({0: 1, 1: 0, 2: 0, 3: 0}, 3, window=4).stabilized
    assert not DimensionProfile.from_values({2: 0, 3: 0}, 3, window=3).stabilized


def test_structural_spaces(cubic_q2):
    spaces = structural_spaces(cubic_q2, 4, window=2)
    assert spaces.A.values == {0: 1, 1: 3, 2: 6, 3: 9, 4: 12}
    assert spaces.milnor.values == {0: 1, 1: 3, 2: 3, 3: 1, 4: 0}
    assert spaces.wedge_kernel.values == spaces.gradient_multiples.values
    assert spaces.gradient_annihilator.total == 0
    corrections = {1: 1, 2: 3, 3: 3, 4: 1}
    for k in range(0, 5):
        assert spaces.dot_kernel[k] == spaces.wedge_image[k] + corrections.get(k, 0)
    assert set(spaces.as_dict()) == {
        "A", "milnor", "gradient_multiples", "wedge_image", "wedge_kernel", "dot_kernel", "gradient_annihilator",
    }


def test_structural_spaces_need_three_variables():
    f = Ambient(("x", "y"), QQ).parse("x^3+y^3")
    with pytest.raises(ConfigurationError):
        structural_spaces(f, 3)


def _random_form(rng, ambient, degree=3):
    data = {m: random_coefficient(rng, ambient) for m in monomials_of_degree(3, degree) if rng.random() < 0.5}
    data[(degree, 0, 0)] = 1
    return Polynomial(ambient, data)


@pytest.mark.parametrize("kind", [COHOMOLOGY, HOMOLOGY])
@pytest.mark.parametrize("seed", range(4))
def test_consecutive_differentials_compose_to_zero(kind, seed, ambient):
    f = _random_form(random.Random(seed), ambient)
    C = build_complex(f, kind, 6)
    if kind == COHOMOLOGY:
        pairs = [(C.differential(p), C.differential(p + 1)) for p in range(C.pmax - 1)]
    else:
        pairs = [(C.differential(p + 1), C.differential(p)) for p in range(1, C.pmax)]
    for first, second in pairs:
        for row in second:
            for c in range(len(first[0])):
                total = sum((row[m] * first[m][c] for m in range(len(first))), ambient.zero())
                assert total.is_zero()
