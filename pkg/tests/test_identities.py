"""Identity catalog: verdict patterns, witnesses, grids, determinism."""

import pytest

from apobern import (
    GridBoundsError,
    GridPoint,
    IdentityId,
    LambdaMode,
    SuiteConfig,
    default_grid,
    default_suite_config,
    run_suite,
    verify_identity,
)

from _util import ONE, SYM


def entries(report, **filters):
    out = []
    for entry in report.results:
        point = entry.point
        keep = True
        for key, value in filters.items():
            if key == "variant":
                keep = keep and entry.variant == value
            else:
                keep = keep and getattr(point, key) == value
        if keep:
            out.append(entry)
    return out


def test_relation_suite_passes_everywhere():
    for ident in (
        IdentityId.ID_DERIV,
        IdentityId.ID_DIFF,
        IdentityId.ID_LOWER_ORDER,
        IdentityId.ID_ZERO_ORDER,
    ):
        report = verify_identity(ident, default_grid(ident))
        assert report.summary.failed == 0, ident
        assert report.summary.validity_domain == "all tested points pass"


def test_hansen_small_case_and_domain():
    report = verify_identity(IdentityId.ID_HANSEN, default_grid(IdentityId.ID_HANSEN))
    assert report.summary.failed == 0
    # m = 1 points pass: both sides reduce to x + y - 1
    assert all(e.passed for e in entries(report, n=1))


def test_dilcher_passes():
    report = verify_identity(IdentityId.ID_DILCHER, default_grid(IdentityId.ID_DILCHER))
    assert report.summary.failed == 0
    assert all(e.passed for e in entries(report, n=0))


def test_euler_ramanujan_domain_and_witness():
    report = verify_identity(
        IdentityId.ID_EULER_RAMANUJAN, default_grid(IdentityId.ID_EULER_RAMANUJAN)
    )
    for entry in report.results:
        if entry.point.n == 2:
            assert not entry.passed
            assert entry.witness == "1/6"
        else:
            assert entry.passed
    assert report.summary.validity_domain == (
        "pass at every point with m in 3..20; fail at some point with m in 2"
    )


def test_lemma_sign_adjudication():
    report = verify_identity(
        IdentityId.ID_LEMMA_CLOSED_FORM, default_grid(IdentityId.ID_LEMMA_CLOSED_FORM)
    )
    for entry in report.results:
        if entry.variant == "corrected-sign":
            assert entry.passed
        else:
            assert entry.variant == "closed-form"
            assert entry.passed == (entry.point.k % 2 == 0)
    famous = entries(report, n=1, k=1, variant="closed-form")
    assert len(famous) == 1
    assert famous[0].witness == "iterated = L, closed-form = -L"


def test_thm1_adjudication():
    report = verify_identity(IdentityId.ID_THM1, default_grid(IdentityId.ID_THM1))
    famous = entries(report, n=1, k=1, mode=SYM, variant="closed-form")
    assert len(famous) == 1
    assert not famous[0].passed
    assert famous[0].witness == "-x - L/(L-1)"
    assert all(e.passed for e in entries(report, variant="corrected"))
    for entry in entries(report, variant="closed-form"):
        assert entry.passed == (entry.point.k == 0)


def test_audit_witnesses_match_hand_computation():
    # spot anchors computed by hand, independent of the checker code
    from fractions import Fraction

    rep = verify_identity(IdentityId.ID_THM2, [GridPoint(n=2, k=1, mode=SYM)])
    assert rep.results[0].witness == "x^2 + (2/(L-1))*x - (L^2+L)/(L-1)^2"

    rep = verify_identity(IdentityId.ID_COR_XN, [GridPoint(n=1, k=1, mode=SYM)])
    assert rep.results[0].witness == "x + L/(L-1)"

    rep = verify_identity(
        IdentityId.ID_THM4,
        [
            GridPoint(n=1, k=0, mode=SYM, y=Fraction(-1, 2)),
            GridPoint(n=1, k=1, mode=SYM, y=Fraction(-1, 2)),
        ],
    )
    by_k = {e.point.k: e for e in rep.results}
    assert by_k[0].passed
    assert by_k[1].witness == "x - (2L-3)/(L-1)"

    rep = verify_identity(
        IdentityId.ID_THM5,
        [
            GridPoint(n=0, k=0, mode=SYM, y=Fraction(-1, 2)),
            GridPoint(n=1, k=0, mode=SYM, y=Fraction(-1, 2)),
        ],
    )
    assert rep.results[0].passed
    assert rep.results[1].witness == "-x"


def test_zero_order_covers_both_families():
    grid = [GridPoint(n=3, k=0, mode=ONE)]
    report = verify_identity(IdentityId.ID_ZERO_ORDER, grid)
    assert report.summary.passed == 1


def test_verify_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_identity(IdentityId.ID_DERIV, [])
    with pytest.raises(ValueError):
        verify_identity("ID_DERIV", [GridPoint(n=1, k=1, mode=ONE)])
    with pytest.raises(GridBoundsError):
        verify_identity(
            IdentityId.ID_DERIV, [GridPoint(n=11, k=1, mode=SYM)]
        )
    with pytest.raises(GridBoundsError):
        verify_identity(
            IdentityId.ID_DERIV, [GridPoint(n=2, k=5, mode=ONE)]
        )
    # the operator-power identity allows k = 5 (and nothing beyond)
    verify_identity(
        IdentityId.ID_LEMMA_CLOSED_FORM, [GridPoint(n=1, k=5, mode=SYM)]
    )
    with pytest.raises(GridBoundsError):
        verify_identity(
            IdentityId.ID_LEMMA_CLOSED_FORM, [GridPoint(n=1, k=6, mode=SYM)]
        )


def test_numeric_bounds_wider_than_symbolic():
    verify_identity(IdentityId.ID_DERIV, [GridPoint(n=24, k=1, mode=ONE)])
    with pytest.raises(GridBoundsError):
        verify_identity(IdentityId.ID_DERIV, [GridPoint(n=25, k=1, mode=ONE)])


def test_suite_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(ids=())
    with pytest.raises(ValueError):
        SuiteConfig(ids=("ID_DERIV",))
    config = default_suite_config()
    assert len(config.ids) == 14


def test_report_ordering_is_deterministic():
    grid = list(reversed(default_grid(IdentityId.ID_DERIV)))
    a = verify_identity(IdentityId.ID_DERIV, grid)
    b = verify_identity(IdentityId.ID_DERIV, default_grid(IdentityId.ID_DERIV))
    assert a.results == b.results


def test_subset_suite_order_and_size():
    config = SuiteConfig(
        ids=(IdentityId.ID_EULER_RAMANUJAN, IdentityId.ID_DERIV), max_n=4, max_k=2
    )
    reports = run_suite(config)
    assert [r.identity for r in reports] == [
        IdentityId.ID_DERIV,
        IdentityId.ID_EULER_RAMANUJAN,
    ]


def test_mode_restriction():
    config = SuiteConfig(ids=(IdentityId.ID_DERIV,), max_n=3, max_k=1, modes=(SYM,))
    (report,) = run_suite(config)
    assert all(e.point.mode == SYM for e in report.results)
    with pytest.raises(ValueError):
        run_suite(
            SuiteConfig(
                ids=(IdentityId.ID_DERIV,),
                modes=(LambdaMode.numeric(7),),
            )
        )


def test_concurrent_verification_matches_sequential():
    # checks are pure over immutable values, so running identities in
    # worker threads must reproduce the sequential reports exactly
    from concurrent.futures import ThreadPoolExecutor

    from apobern.families import clear_caches
    from apobern.reporting import reports_to_json

    idents = (
        IdentityId.ID_DERIV,
        IdentityId.ID_LOWER_ORDER,
        IdentityId.ID_EULER_RAMANUJAN,
        IdentityId.ID_THM1,
    )
    sequential = [verify_identity(i, default_grid(i)) for i in idents]
    clear_caches()
    with ThreadPoolExecutor(max_workers=4) as pool:
        concurrent = list(
            pool.map(lambda i: verify_identity(i, default_grid(i)), idents)
        )
    assert reports_to_json(concurrent) == reports_to_json(sequential)


def test_mode_consistency_symbolic_pass_implies_numeric_pass():
    # for every identity with a deformation parameter: a symbolic pass at
    # (n, k, y, variant) forces a pass at each sampled numeric value
    for ident in (
        IdentityId.ID_DERIV,
        IdentityId.ID_THM1,
        IdentityId.ID_COR_XN,
        IdentityId.ID_THM2,
    ):
        report = verify_identity(ident, default_grid(ident))
        symbolic_pass = {
            (e.point.n, e.point.k, e.point.y, e.variant)
            for e in report.results
            if e.point.mode == SYM and e.passed
        }
        for entry in report.results:
            key = (entry.point.n, entry.point.k, entry.point.y, entry.variant)
            if entry.point.mode != SYM and key in symbolic_pass:
                assert entry.passed, (ident, entry.point)
