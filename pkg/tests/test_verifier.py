import pytest

from gpdecomp import (
    Decomposition,
    GroundSet,
    binomial,
    canonicalize,
    construct_baseline,
    construct_stars,
    coverage_histogram,
    verify_decomposition,
)


def test_valid_stars():
    report = verify_decomposition(construct_stars(6))
    assert report.valid
    assert report.piece_count == 5
    assert report.edge_count == 15


def test_valid_baseline_7_5():
    report = verify_decomposition(construct_baseline(7, 5))
    assert report.valid
    assert report.piece_count == 6
    assert report.edge_count == 21


def test_deleted_piece_reports_uncovered_witness():
    dec = construct_baseline(6, 4)
    broken = Decomposition(dec.ground, dec.pieces[1:])
    report = verify_decomposition(broken)
    assert not report.valid
    assert report.witness is not None
    assert report.witness_multiplicity == 0


def test_duplicated_piece_reports_double_cover():
    dec = construct_baseline(6, 4)
    broken = Decomposition(dec.ground, dec.pieces + (dec.pieces[0],))
    report = verify_decomposition(broken)
    assert not report.valid
    assert report.witness_multiplicity == 2
    assert len(report.witness_pieces) == 2


def test_structural_failures():
    g = GroundSet(4, 2)
    wrong_r = Decomposition(g, (canonicalize([{0}, {1}, {2}]),))
    assert not verify_decomposition(wrong_r).valid
    out_of_range = Decomposition(g, (canonicalize([{0}, {5}]),))
    assert not verify_decomposition(out_of_range).valid


def test_census_alone_is_not_trusted():
    # 3 + 2 + 1 = 6 edges claimed on K_4, but (1,2) is covered twice and
    # (2,3) never: the census passes while coverage fails.
    g = GroundSet(4, 2)
    pieces = (
        canonicalize([{0}, {1, 2, 3}]),
        canonicalize([{1}, {2, 3}]),
        canonicalize([{1}, {2}]),
    )
    dec = Decomposition(g, pieces)
    assert sum(p.edge_count for p in pieces) == binomial(4, 2)
    report = verify_decomposition(dec)
    assert not report.valid
    hist = coverage_histogram(dec)
    assert hist == {0: 1, 1: 4, 2: 1}


def test_histogram_valid_case():
    from gpdecomp import construct_theorem1

    dec = construct_theorem1(3, 3, 5)
    assert coverage_histogram(dec) == {1: 126}


def test_histogram_empty_and_doubled():
    g = GroundSet(4, 2)
    assert coverage_histogram(Decomposition(g, ())) == {0: 6}
    dec = construct_stars(4)
    doubled = Decomposition(dec.ground, dec.pieces + dec.pieces)
    assert coverage_histogram(doubled) == {2: 6}


def test_report_agrees_with_histogram():
    cases = [
        construct_stars(5),
        construct_baseline(6, 3),
        Decomposition(GroundSet(4, 2), construct_stars(4).pieces[1:]),
    ]
    for dec in cases:
        report = verify_decomposition(dec)
        hist = coverage_histogram(dec)
        assert report.valid == (hist == {1: binomial(dec.ground.n, dec.ground.r)})
