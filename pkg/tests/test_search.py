import pytest

from qzeta import (
    Assessment,
    InsufficientHistory,
    Rectangle,
    SearchConfig,
    SearchFailed,
    SearchState,
    Verdict,
    assess,
    estimate_de,
    initial_rectangle,
    integrate,
    locate_zero,
    newton_refine,
    run_variants,
    step_policy,
)


def product_of_roots(roots):
    def f(k):
        value = 1.0 + 0.0j
        for r in roots:
            value *= k - r
        return value

    return f


class TestInitialRectangle:
    def test_sized_by_seed_displacement(self):
        rect = initial_rectangle(0.130263 + 14.1465j, 14.1347, SearchConfig())
        assert abs(rect.rd - 0.0477578) < 1e-4
        assert abs(rect.rad - 0.0238789) < 1e-4
        assert rect.center == 0.130263 + 14.1465j

    def test_cap_at_half(self):
        rect = initial_rectangle(1.76753 + 38.1895j, 37.5862, SearchConfig())
        assert rect.rd == 0.5
        assert rect.rad == 0.25

    def test_degenerate_seed_floor(self):
        rect = initial_rectangle(14.1347j, 14.1347, SearchConfig())
        assert rect.rd == 1e-3

    def test_aspect_ratio(self):
        rect = initial_rectangle(0.3 + 20.01j, 20.0, SearchConfig())
        assert abs(rect.rad / rect.rd - 0.5) < 1e-15


def _state(**overrides):
    base = dict(
        y=20.0,
        za=0.3 + 20j,
        zna=0.3 + 20j,
        zn=0.3 + 20j,
        rd=0.1,
        rad=0.05,
        c=4,
    )
    base.update(overrides)
    return SearchState(**base)


def _result_for(f, rect, c=4):
    return integrate(f, rect, c)


class TestAssess:
    def test_miss_is_not_good(self):
        # no zero inside: winding 0 -> char 1
        f = product_of_roots([5 + 5j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        verdict = assess(result, _state(), SearchConfig())
        assert verdict is Assessment.NOT_GOOD

    def test_gap_metric_violation_blocks_good(self):
        f = product_of_roots([0.3 + 20j + 0.01j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        result.fo = 3  # beyond fo_good_max
        verdict = assess(result, _state(), SearchConfig())
        assert verdict is Assessment.NOT_GOOD

    def test_residual_ratio_violation(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        result.vv = 0.9
        # force the estimate away from the incumbent so no waiver applies
        state = _state(zna=0.25 + 20.01j)
        assert assess(result, state, SearchConfig()) is Assessment.NOT_GOOD

    def test_first_good_is_only_good(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        verdict = assess(result, _state(), SearchConfig())
        assert verdict is Assessment.GOOD

    def test_second_consecutive_good_concludes_in_second_phase(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect, c=6)
        state = _state(
            phase=1,
            consecutive_good=1,
            variant_opening_vv=0.1,
            accepted=[(0.3100001 + 20.002j, 1.0)],
            best_abs_value=1.0,
        )
        assert assess(result, state, SearchConfig()) is Assessment.VERY_GOOD

    def test_sloppy_opening_blocks_variant_one(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect, c=6)
        state = _state(
            phase=1,
            consecutive_good=1,
            variant_opening_vv=0.7,  # above seed_vv_limit
            accepted=[(0.3100001 + 20.002j, 1.0)],
            best_abs_value=1.0,
        )
        assert assess(result, state, SearchConfig()) is Assessment.GOOD
        state.variant = 1  # later variants are exempt
        assert assess(result, state, SearchConfig()) is Assessment.VERY_GOOD


class TestStepPolicy:
    def test_good_halves_and_recenters(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        state = _state()
        step_policy(state, Assessment.GOOD, result, SearchConfig())
        assert state.rd == 0.05 and state.rad == 0.025
        assert state.consecutive_good == 1
        assert state.zna == result.z_estimate
        expected_zn = (result.z_estimate + result.vv * (0.3 + 20j)) / (1 + result.vv)
        assert abs(state.zn - expected_zn) < 1e-15

    def test_miss_doubles_and_drifts(self):
        f = product_of_roots([5 + 5j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        state = _state(consecutive_good=1)
        step_policy(state, Assessment.NOT_GOOD, result, SearchConfig())
        assert state.rd == 0.2 and state.rad == 0.1
        assert state.consecutive_good == 0
        drift = state.zn - (0.3 + 20j)
        assert abs(drift - (result.z_estimate - (0.3 + 20j)) / 4) < 1e-15

    def test_other_failure_recenters_at_incumbent(self):
        f = product_of_roots([0.31 + 20.002j])
        rect = Rectangle(0.3 + 20j, 0.1, 0.05)
        result = _result_for(f, rect)
        result.char = 0.3  # non-integral winding defect
        state = _state(zn=0.35 + 20.01j, zna=0.29 + 20.001j)
        step_policy(state, Assessment.NOT_GOOD, result, SearchConfig())
        assert state.zn == 0.29 + 20.001j
        assert state.rd == 0.1  # same size


class TestEstimateDe:
    def test_floor(self):
        state = _state(accepted=[(0.3 + 20j, 1.0), (0.3 + 20j, 0.5)])
        assert estimate_de(state) == 1e-6

    def test_movement_scale(self):
        state = _state(accepted=[(0.3 + 20j, 1.0), (0.3005 + 20j, 0.5)])
        assert abs(estimate_de(state) - 5e-5) < 1e-18

    def test_insufficient_history(self):
        with pytest.raises(InsufficientHistory):
            estimate_de(_state(accepted=[(0.3 + 20j, 1.0)]))


class TestNewtonRefine:
    def test_linear_exact_in_one_step(self):
        root = 0.7 - 1.2j
        f = lambda k: k - root
        z, accepted = newton_refine(f, 0.8 - 1.1j, de=0.05, cfg=SearchConfig())
        assert accepted
        # exact up to the central-difference rounding (~1e-10 relative)
        assert abs(z - root) < 1e-9

    def test_movement_allowance_rejects_distant_jumps(self):
        root = 0.7 - 1.2j
        f = lambda k: k - root
        z, accepted = newton_refine(f, 0.8 - 1.1j, de=1e-7, cfg=SearchConfig())
        assert not accepted
        assert z == 0.8 - 1.1j

    def test_smooth_quadratic_convergence(self):
        root = 1.5 + 3j
        f = lambda k: (k - root) * (k + 10)
        z, accepted = newton_refine(f, 1.52 + 3.01j, de=0.01, cfg=SearchConfig())
        assert accepted
        assert abs(z - root) < 1e-9


class TestLocateZero:
    def test_linear_target(self):
        record = locate_zero(lambda k: k - (0.3 + 20j), 20.0, 0.29 + 20.01j)
        assert record.verdict is Verdict.VERY_GOOD
        assert abs(record.z - (0.3 + 20j)) < 1e-6
        assert len(record.trace_log) <= 3

    def test_halving_and_aspect_preserved(self):
        record = locate_zero(lambda k: k - (0.3 + 20j), 20.0, 0.29 + 20.01j)
        rds = [a.rect.rd for a in record.trace_log]
        for before, after in zip(rds, rds[1:]):
            assert after == before / 2  # every step here is good
        for attempt in record.trace_log:
            assert abs(attempt.rect.rad / attempt.rect.rd - 0.5) < 1e-15

    def test_containment_of_concluded_zero(self):
        record = locate_zero(lambda k: k - (0.3 + 20j), 20.0, 0.29 + 20.01j)
        final = record.trace_log[-1]
        assert final.rect.contains(final.result.z_estimate)

    def test_monotone_residuals_on_good_subsequence(self):
        roots = [0.3 + 20j, 3 + 22j, -2 + 18j]
        record = locate_zero(product_of_roots(roots), 20.0, 0.29 + 20.01j)
        values = [
            a.result.abs_estimate
            for a in record.trace_log
            if a.assessment is not Assessment.NOT_GOOD
        ]
        for before, after in zip(values, values[1:]):
            assert after <= before * 1.0000001

    def test_determinism(self):
        f = product_of_roots([0.3 + 20j, 3 + 22j])
        first = locate_zero(f, 20.0, 0.29 + 20.01j)
        second = locate_zero(f, 20.0, 0.29 + 20.01j)
        assert first.z == second.z
        assert len(first.trace_log) == len(second.trace_log)
        for a, b in zip(first.trace_log, second.trace_log):
            assert a.rect == b.rect
            assert a.result.char == b.result.char
            assert a.result.z_estimate == b.result.z_estimate

    def test_search_failed_when_nothing_encloses(self):
        with pytest.raises(SearchFailed):
            locate_zero(lambda k: 2.0 + 0j, 2.0, 0.1 + 2j)  # nonvanishing


class TestRunVariants:
    def test_three_separated_roots(self):
        roots = [0.2 + 10j, 0.5 + 14j, -0.3 + 18j]
        f = product_of_roots(roots)
        seeds = [(10.0, 0.21 + 10.02j), (14.0, 0.49 + 13.98j), (18.0, -0.28 + 18.01j)]
        records = run_variants(f, seeds, SearchConfig())
        assert [r.index for r in records] == [1, 2, 3]
        for record, root in zip(records, roots):
            assert record.verdict is Verdict.VERY_GOOD
            assert abs(record.z - root) < 1e-6
            assert record.variants_visited == (1,)

    def test_empty_seed_list(self):
        assert run_variants(lambda k: k, [], SearchConfig()) == []

    def test_per_seed_functions(self):
        functions = [product_of_roots([0.1 + 9j]), product_of_roots([0.2 + 11j])]
        seeds = [(9.0, 0.11 + 9.01j), (11.0, 0.19 + 11.01j)]
        records = run_variants(functions, seeds, SearchConfig())
        assert abs(records[0].z - (0.1 + 9j)) < 1e-6
        assert abs(records[1].z - (0.2 + 11j)) < 1e-6

    def test_function_count_mismatch(self):
        with pytest.raises(ValueError):
            run_variants([lambda k: k], [(9.0, 9j), (11.0, 11j)], SearchConfig())


class TestSearchConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(c_schedule=(6, 4))
        with pytest.raises(ValueError):
            SearchConfig(c_initial=5)
        with pytest.raises(ValueError):
            SearchConfig(vv_max=1.5)
        with pytest.raises(ValueError):
            SearchConfig(char_tol=0.7)
